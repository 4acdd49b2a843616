#pragma once

// Y-systems wrapped on a torus by the higher pentagram map, and quasi-periodic
// octahedron solutions unfolded from them.

#include <map>
#include <vector>

#include "octa/lattice.hpp"
#include "octa/pentagram.hpp"
#include "octa/report.hpp"

namespace octa {

struct TorusWrap {
  int kappa, n;
  Point period1() const { return {kappa, 2 - kappa, 0}; }
  Point period2() const { return {n, -n, 0}; }
};

// Index of the p (k = 0, i+j even) or q (k = -1, i+j odd) entry feeding
// Y_{i,j,k}; throws "parity violation" when not integral.
long torus_p_index(int kappa, int i, int j);
long torus_q_index(int kappa, int i, int j);

// Y_{i,j,-1} = 1/q_{((k-2)i+kj+r-r')/2} (i+j odd), Y_{i,j,0} = p_{((k-2)i+kj)/2}
// (i+j even); levels above and below follow the Y-system.
YField pq_to_torus_y(const PQCoordinates& pq);

struct TorusWindow {
  int imin = -3, imax = 3, jmin = -3, jmax = 3;
};

Report check_double_periodicity(YField& y, const TorusWrap& wrap, int kmax,
                                const TorusWindow& w = {});

// p_{((k-2)i+kj+k(r-r'))/2}(T^k A) = Y_{i,j,k},
// q_{((k-2)i+kj+(k+1)(r-r'))/2}(T^k A) = 1/Y_{i,j,k-1}.
Report check_readoff(const PQCoordinates& pq, YField& y, int levels, const TorusWindow& w = {});

struct QuasiPeriodicSurface {
  int kappa = 3, n = 5;
  Rational lambda = 1, mu = 1;
  std::map<Site, Rational> fundamental;  // keyed by fundamental_domain() sites
};

// The 2n sites (i,j) with i+j in {0,1} and -2n < (k-2)i + kj <= 0.
std::vector<Site> fundamental_domain(int kappa, int n);

// x_{i+k,j+2-k} = x_{i,j};
// x_{i+n,j-n} = x_{i,j} lambda^{(k-2)i+kj} (i+j odd), mu^{(k-2)i+kj} (i+j even).
Rational quasi_value(const QuasiPeriodicSurface& q, int i, int j);

// Odd-parity flat surface x_{i,j} at k = (i+j+1) mod 2 on the rectangle.
InitialSurface build_quasi_surface(const QuasiPeriodicSurface& q, int imin, int imax, int jmin,
                                   int jmax);

// Quasi-periodicity of T up to kmax, double periodicity of the induced Y,
// and O_n = lambda^{2k-2}, E_n = mu^{2-2k}.
Report verify_unfolding(const QuasiPeriodicSurface& q, int kmax, const TorusWindow& w = {0, 2, 0, 2});

}  // namespace octa
