#pragma once

// JSON encodings of the exact types, surfaces, tubes, polygons and reports.

#include <string>
#include <vector>

#include "json.hpp"
#include "octa/algebra.hpp"
#include "octa/condensation.hpp"
#include "octa/lattice.hpp"
#include "octa/matrix.hpp"
#include "octa/pentagram.hpp"
#include "octa/report.hpp"
#include "octa/torus.hpp"

namespace octa::io {

using json = nlohmann::ordered_json;

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

json load_file(const std::string& path);

Rational rational_from(const json& j);
json to_json(const Rational& q);
json to_json(const Laurent& p);
json to_json(const Value& v);
Value value_from(const json& j);

InitialSurface surface_from(const json& j);
json to_json(const InitialSurface& s);

struct TubeInput {
  int d = 1, ell = 1;
  std::vector<std::vector<Value>> grid;
};
TubeInput tube_from(const json& j);
json to_json(const TubeInput& t);

TwistedPolygon polygon_from(const json& j);
json to_json(const TwistedPolygon& p);

PQCoordinates pq_from(const json& j);
json to_json(const PQCoordinates& pq);

QuasiPeriodicSurface quasi_from(const json& j);

Matrix matrix_from(const json& j);
json to_json(const Matrix& m);

json to_json(const RecursionCoefficients& rc);
json to_json(const Report& r);

}  // namespace octa::io
