#pragma once

// A_d strips (T_0 = T_{d+1} = 1), walls of ones in the j direction, and the
// two-wall tube with its Zamolodchikov periodicity.

#include <map>
#include <memory>
#include <optional>
#include <vector>

#include "octa/lattice.hpp"
#include "octa/report.hpp"

namespace octa {

struct StripSpec {
  int d = 1;
  bool wall_at_zero = false;
  std::optional<int> second_wall;  // ell: a wall of ones at j = ell+1
  bool zero_beyond_wall = false;   // T_{i,-1,k} = 0, ones at j=0 left to the data
};

class StripBoundary : public Boundary {
 public:
  explicit StripBoundary(StripSpec spec) : spec_(spec) {}
  std::optional<Value> synthesize(const Point& p, Kind kind) const override;
  const StripSpec& spec() const { return spec_; }

 private:
  StripSpec spec_;
};

// Initial data for 1 <= i <= d on the flat surface of the given parity.
TField make_strip_field(const StripSpec& spec, Parity parity,
                        const std::map<Site, Value>& data);

// T at p for the A_d strip with no walls.
Value evolve_strip(int d, const InitialSurface& data, const Point& p);

struct WallWindow {
  int kmin = -4, kmax = 4;
  int jmax = 5;  // mirror images checked for 1 <= j <= jmax
};

// Requires a field built with wall_at_zero on the even sublattice and data
// reaching far enough in j (see README). Both reports compare exact values.
Report verify_wall_zeros(int d, TField& field, const WallWindow& w);
Report verify_mirror(int d, TField& field, const WallWindow& w);

// Direct leftward evolution across the wall:
// T_{i,j-1,k} = (T_{i,j,k+1} T_{i,j,k-1} - T_{i+1,j,k} T_{i-1,j,k}) / T_{i,j+1,k}.
// Empty when a zero denominator is met.
class LeftwardEvolution {
 public:
  LeftwardEvolution(int d, TField& field) : d_(d), field_(field) {}
  std::optional<Value> at(int i, int j, int k);

 private:
  int d_;
  TField& field_;
  std::map<Point, std::optional<Value>> memo_;
};

// Tube with walls at j = 0 and j = ell+1; init is d rows of ell values,
// placed on k(i,j) = (i+j) mod 2.
TField evolve_tube(int d, int ell, const std::vector<std::vector<Value>>& init, int kmin,
                   int kmax);

inline int zamolodchikov_period(int d, int ell) { return ell + d + 2; }

struct ZamolodchikovOptions {
  int k0 = 0;        // first base level
  int levels = 3;    // base levels checked: k0 .. k0+levels-1
};

Report check_zamolodchikov(int d, int ell, TField& tube, const ZamolodchikovOptions& opt = {});

// Smallest even P dividing 2p with T_{i,j,k+P} = T_{i,j,k} on the checked
// base levels.
int observed_period(int d, int ell, TField& tube, const ZamolodchikovOptions& opt = {});

// Half-strip j >= 0 with ones stored at j = 0 as initial data: T_{i,0,k}
// must remain 1 for every computed k.
Report check_wall_compatibility(int d, const std::map<Site, Value>& data, int kmax);

}  // namespace octa
