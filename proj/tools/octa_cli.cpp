// octa: command-line front end. Exit status 0 when every checked identity
// holds, 1 on a property failure, 2 on bad input.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "io.hpp"
#include "octa/boundary.hpp"
#include "octa/condensation.hpp"
#include "octa/network.hpp"
#include "octa/random.hpp"
#include "octa/torus.hpp"
#include "suite.hpp"

using namespace octa;
using io::InputError;
using io::json;

namespace {

struct Options {
  std::string input, output, format = "json";
  std::uint64_t seed = 1;
  int kmin = 0, kmax = 4, d = 1, ell = 1, kappa = 3, n = 5, iters = 10;
  int i = 0, j = 0, k = 1;
  std::vector<int> anchors;
  std::string direction = "sum";
};

// A dataset: JSON document plus, for CSV, a header and rows.
struct Output {
  json doc;
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
  bool ok = true;
};

void emit(const Options& o, const Output& out) {
  std::ostringstream os;
  if (o.format == "csv") {
    auto line = [&os](const std::vector<std::string>& cells) {
      for (std::size_t c = 0; c < cells.size(); ++c) os << (c ? "," : "") << cells[c];
      os << "\n";
    };
    line(out.header);
    for (const auto& r : out.rows) line(r);
  } else {
    os << out.doc.dump(2) << "\n";
  }
  if (o.output.empty()) {
    std::cout << os.str();
  } else {
    std::ofstream f(o.output);
    if (!f) throw InputError("cannot write " + o.output);
    f << os.str();
  }
}

json need_input(const Options& o) {
  if (o.input.empty()) throw InputError("--input is required");
  return io::load_file(o.input);
}

Output report_output(const Report& r) {
  Output out;
  out.doc = io::to_json(r);
  out.ok = r.ok();
  out.header = {"claim", "status", "cases"};
  for (const auto& c : r.checks)
    out.rows.push_back({"\"" + c.claim + "\"", to_string(c.status), std::to_string(c.cases)});
  return out;
}

std::string csv_value(const Value& v) {
  std::string s = to_string(v);
  return v.kind() == Kind::Rational ? s : "\"" + s + "\"";
}

// ---- subcommands ------------------------------------------------------------

// Every point between the surface and kmax whose value the surface determines.
Output cmd_evolve(const Options& o) {
  InitialSurface s = io::surface_from(need_input(o));
  TField f(s);
  Output out;
  json values = json::array();
  out.header = {"i", "j", "k", "value"};
  for (const auto& [site, cell] : s.cells())
    for (int k = std::min(cell.k, o.kmin); k <= o.kmax; ++k) {
      if (mod2(long(site.first) + site.second + k) != int(s.parity())) continue;
      try {
        const Value& v = f(site.first, site.second, k);
        values.push_back({{"i", site.first}, {"j", site.second}, {"k", k}, {"value", io::to_json(v)}});
        out.rows.push_back({std::to_string(site.first), std::to_string(site.second),
                            std::to_string(k), csv_value(v)});
      } catch (const LatticeError&) {
        // outside the domain of dependence of the window
      }
    }
  out.doc = {{"parity", s.parity() == Parity::Odd ? "odd" : "even"}, {"values", values}};
  return out;
}

Output cmd_ysys(const Options& o) {
  InitialSurface s = io::surface_from(need_input(o));
  TField f(s);
  std::map<Point, Value> ys;
  const int yparity = 1 - int(s.parity());
  for (const auto& [site, cell] : s.cells())
    for (int k = o.kmin; k <= o.kmax; ++k) {
      if (mod2(long(site.first) + site.second + k) != yparity) continue;
      try {
        ys.emplace(Point{site.first, site.second, k}, y_from_t(f, {site.first, site.second, k}));
      } catch (const LatticeError&) {
      }
    }
  CheckBuilder cb("Y from T satisfies the Y-system", "Y-system");
  Output out;
  json values = json::array();
  out.header = {"i", "j", "k", "Y"};
  auto get = [&ys](int i, int j, int k) -> const Value* {
    auto it = ys.find({i, j, k});
    return it == ys.end() ? nullptr : &it->second;
  };
  for (const auto& [p, v] : ys) {
    values.push_back({{"i", p.i}, {"j", p.j}, {"k", p.k}, {"value", io::to_json(v)}});
    out.rows.push_back({std::to_string(p.i), std::to_string(p.j), std::to_string(p.k), csv_value(v)});
    const Value *up = get(p.i, p.j, p.k + 2), *ip = get(p.i + 1, p.j, p.k + 1),
                *im = get(p.i - 1, p.j, p.k + 1), *jp = get(p.i, p.j + 1, p.k + 1),
                *jm = get(p.i, p.j - 1, p.k + 1);
    if (up && ip && im && jp && jm)
      cb.expect(*up * v == y_system_rhs(*ip, *im, *jp, *jm),
                "(" + std::to_string(p.i) + "," + std::to_string(p.j) + "," + std::to_string(p.k + 1) + ")");
  }
  Report r;
  r.title = "Y-system";
  r.checks.push_back(cb.finish());
  out.doc = {{"values", values}, {"report", io::to_json(r)}};
  out.ok = r.ok();
  return out;
}

Output cmd_lgv(const Options& o) {
  InitialSurface s = io::surface_from(need_input(o));
  NetworkDiamond d = build_diamond(s, o.i, o.j, o.k);
  NetworkEvaluation ev = evaluate_network(d);
  TField f(s);
  const Value& direct = f(o.i, o.j, d.level);
  json dots = json::array();
  for (const auto& b : ev.black_dots) dots.push_back(io::to_json(b));
  Output out;
  out.ok = ev.t == direct;
  out.doc = {{"i", o.i},
             {"j", o.j},
             {"k", d.level},
             {"det", io::to_json(ev.det)},
             {"blackdots", dots},
             {"T", io::to_json(ev.t)},
             {"matches_evolution", out.ok}};
  out.header = {"i", "j", "k", "det", "T"};
  out.rows.push_back({std::to_string(o.i), std::to_string(o.j), std::to_string(d.level),
                      csv_value(ev.det), csv_value(ev.t)});
  return out;
}

std::vector<std::vector<Value>> grid_or_random(const Options& o, int& d, int& ell, int default_ell) {
  if (!o.input.empty()) {
    auto t = io::tube_from(io::load_file(o.input));
    d = t.d;
    ell = t.ell;
    return t.grid;
  }
  d = o.d;
  ell = default_ell;
  if (d < 1 || ell < 1) throw InputError("--d and --ell must be positive");
  Rng rng(o.seed);
  std::vector<std::vector<Value>> g(d);
  for (auto& row : g)
    for (int c = 0; c < ell; ++c) row.push_back(Value(rng.positive_rational(7)));
  return g;
}

std::map<Site, Value> grid_to_strip(const std::vector<std::vector<Value>>& g) {
  std::map<Site, Value> data;
  for (std::size_t i = 0; i < g.size(); ++i)
    for (std::size_t j = 0; j < g[i].size(); ++j) data.emplace(Site{int(i) + 1, int(j) + 1}, g[i][j]);
  return data;
}

Output cmd_wall(const Options& o) {
  int d = 0, len = 0;
  auto grid = grid_or_random(o, d, len, 40);
  StripSpec spec;
  spec.d = d;
  spec.wall_at_zero = true;
  TField f = make_strip_field(spec, Parity::Even, grid_to_strip(grid));
  WallWindow w;
  w.kmin = -o.kmax;
  w.kmax = o.kmax;
  Report r = verify_wall_zeros(d, f, w);
  r.title = "walls (d=" + std::to_string(d) + ")";
  r.merge(verify_mirror(d, f, w));
  r.merge(check_wall_compatibility(d, grid_to_strip(grid), o.kmax));
  return report_output(r);
}

Output cmd_zamolodchikov(const Options& o) {
  int d = 0, ell = 0;
  auto grid = grid_or_random(o, d, ell, o.ell);
  const int p = zamolodchikov_period(d, ell);
  TField f = evolve_tube(d, ell, grid, 0, 1);
  ZamolodchikovOptions opt;
  opt.levels = 2 * p;
  Report r = check_zamolodchikov(d, ell, f, opt);
  Output out = report_output(r);
  out.doc["d"] = d;
  out.doc["ell"] = ell;
  out.doc["p"] = p;
  out.doc["observed_period"] = observed_period(d, ell, f, opt);
  json series = json::array();
  out.header = {"i", "j", "k", "value"};
  out.rows.clear();
  for (int k = 0; k < 2 * p + 2; ++k)
    for (int i = 1; i <= d; ++i)
      for (int j = 1; j <= ell; ++j)
        if (mod2(long(i) + j + k) == 0) {
          const Value& v = f(i, j, k);
          series.push_back({{"i", i}, {"j", j}, {"k", k}, {"value", io::to_json(v)}});
          out.rows.push_back({std::to_string(i), std::to_string(j), std::to_string(k), csv_value(v)});
        }
  out.doc["values"] = series;
  return out;
}

Output cmd_condense(const Options& o) {
  Matrix m = io::matrix_from(need_input(o));
  if (m.empty()) throw InputError("matrix must be nonempty");
  CondensationTrace tr = dodgson_condense(m);
  Output out;
  json stages = json::array();
  for (const auto& st : tr.stages) stages.push_back(io::to_json(st));
  out.doc = {{"det", io::to_json(tr.det)}, {"used_fallback", tr.used_fallback}, {"stages", stages}};
  out.header = {"stage", "size", "det"};
  out.rows.push_back({"final", std::to_string(m.size()), csv_value(tr.det)});
  return out;
}

Output cmd_coeffs(const Options& o) {
  int d = 0, len = 0;
  auto grid = grid_or_random(o, d, len, 40);
  StripSpec spec;
  spec.d = d;
  spec.wall_at_zero = true;
  TField f = make_strip_field(spec, Parity::Even, grid_to_strip(grid));
  XSource x = [&f](int j, int k) { return f(1, j, k); };
  if (o.direction != "sum" && o.direction != "difference")
    throw InputError("--direction must be sum or difference");
  const Direction dir = o.direction == "sum" ? Direction::Sum : Direction::Difference;
  std::vector<int> anchors = o.anchors;
  if (anchors.empty()) anchors = {1, 3, 5};
  Output out;
  json list = json::array();
  out.header = {"anchor", "i", "a_i"};
  Report r;
  r.title = "recursion coefficients";
  const int J = 2 * d + 6;  // keeps every window inside j >= 1 for small anchors
  for (int a : anchors) {
    if (mod2(a) != 1) throw InputError("anchors must be odd (x_{j,k} lives on j+k odd)");
    auto rc = recursion_coefficients(x, d, dir, a, J);
    list.push_back(io::to_json(rc));
    for (std::size_t t = 0; t < rc.coeffs.size(); ++t)
      out.rows.push_back({std::to_string(a), std::to_string(t), csv_value(rc.coeffs[t])});
    r.merge(verify_row_independence(x, d, dir, a, J));
    r.merge(verify_direction_independence(x, d, dir, a, {J, J + 2, J + 4}));
  }
  if (dir == Direction::Sum) r.merge(verify_coefficient_identity(d, f, anchors).report);
  out.doc = {{"d", d}, {"coefficients", list}, {"report", io::to_json(r)}};
  out.ok = r.ok();
  return out;
}

PQCoordinates pq_input(const Options& o) {
  if (o.input.empty()) {
    Rng rng(o.seed);
    PQCoordinates pq;
    pq.kappa = o.kappa;
    for (int t = 0; t < o.n; ++t) pq.p.push_back(rng.positive_rational(9));
    for (int t = 0; t < o.n; ++t) pq.q.push_back(rng.positive_rational(9));
    auto c = conserved_quantities(pq);
    pq.q[0] /= c.O * c.E;
    return pq;
  }
  json j = io::load_file(o.input);
  if (j.contains("vertices")) {
    TwistedPolygon a = io::polygon_from(j);
    try {
      return pq_invariants(a, o.kappa);
    } catch (const std::exception& e) {
      throw InputError(std::string("polygon: ") + e.what());
    }
  }
  return io::pq_from(j);
}

Output cmd_pentagram(const Options& o) {
  PQCoordinates pq = pq_input(o);
  Output out;
  out.header = {"iter", "O", "E"};
  json series = json::array();
  const Conserved c0 = conserved_quantities(pq);
  CheckBuilder cb("O_n and E_n constant along the orbit", "conserved quantities");
  for (int it = 0; it <= o.iters; ++it) {
    const Conserved c = conserved_quantities(pq);
    cb.expect(c.O == c0.O && c.E == c0.E, "iteration " + std::to_string(it));
    series.push_back({{"iter", it}, {"O", to_string(c.O)}, {"E", to_string(c.E)}});
    out.rows.push_back({std::to_string(it), to_string(c.O), to_string(c.E)});
    if (it < o.iters) pq = higher_map(pq);
  }
  Report r;
  r.title = "pentagram orbit";
  r.checks.push_back(cb.finish());
  out.doc = {{"kappa", pq.kappa}, {"n", pq.n()}, {"series", series}, {"final", io::to_json(pq)},
             {"report", io::to_json(r)}};
  out.ok = r.ok();
  return out;
}

Output cmd_mutations(const Options& o) {
  PQCoordinates pq = pq_input(o);
  YSeed seed = seed_from_pq(pq);
  Report r;
  r.title = "pentagram map by mutations";
  CheckBuilder fix("B is restored after mutation and relabelling", "Glick quiver");
  CheckBuilder map("mutations reproduce the (p,q) map", "cluster realization");
  PQCoordinates cur = pq;
  for (int it = 1; it <= o.iters; ++it) {
    YSeed next = pentagram_via_mutations(seed, pq.kappa);
    cur = higher_map(cur);
    fix.expect(next.B == seed.B, "iteration " + std::to_string(it));
    map.expect(pq_from_seed(next, pq.kappa) == cur, "iteration " + std::to_string(it));
    seed = std::move(next);
  }
  r.checks = {fix.finish(), map.finish()};
  Output out = report_output(r);
  json B = seed.B;
  out.doc["B"] = B;
  out.doc["final"] = io::to_json(pq_from_seed(seed, pq.kappa));
  return out;
}

Output cmd_unfold(const Options& o) {
  QuasiPeriodicSurface q = io::quasi_from(need_input(o));
  return report_output(verify_unfolding(q, o.kmax));
}

Output cmd_verify_all(const Options& o) {
  Output out;
  json list = json::array();
  out.header = {"criterion", "name", "status"};
  for (const auto& res : acceptance::run_all(o.seed)) {
    json item = {{"criterion", res.criterion.id},
                 {"name", res.criterion.name},
                 {"status", res.pass() ? "pass" : "fail"}};
    if (!res.error.empty()) item["error"] = res.error;
    if (!res.within_time) item["error"] = "time limit exceeded";
    item["report"] = io::to_json(res.report);
    list.push_back(item);
    out.rows.push_back({std::to_string(res.criterion.id), "\"" + res.criterion.name + "\"",
                        res.pass() ? "pass" : "fail"});
    out.ok = out.ok && res.pass();
  }
  out.doc = {{"seed", o.seed}, {"ok", out.ok}, {"criteria", list}};
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"octa: octahedron recurrence, walls and pentagram maps"};
  app.require_subcommand(1);
  app.fallthrough();
  Options o;
  app.add_option("--output,-o", o.output, "Write the result here instead of stdout");
  app.add_option("--format", o.format, "Output format")->check(CLI::IsMember({"json", "csv"}));
  app.add_option("--seed", o.seed, "Seed for randomized fixtures");

  auto with_input = [&o](CLI::App* c, bool required) {
    auto* opt = c->add_option("--input", o.input, "JSON input file");
    if (required) opt->required();
  };
  using Cmd = Output (*)(const Options&);
  std::vector<std::pair<CLI::App*, Cmd>> cmds;

  auto* evolve = app.add_subcommand("evolve", "Evolve a surface and list every determined T");
  with_input(evolve, true);
  evolve->add_option("--kmax", o.kmax, "Highest level");
  evolve->add_option("--kmin", o.kmin, "Lowest level (backward evolution below the surface)");
  cmds.emplace_back(evolve, cmd_evolve);

  auto* ysys = app.add_subcommand("ysys", "Y-values of an evolved surface, checked against the Y-system");
  with_input(ysys, true);
  ysys->add_option("--kmax", o.kmax, "Highest level");
  ysys->add_option("--kmin", o.kmin, "Lowest level");
  cmds.emplace_back(ysys, cmd_ysys);

  auto* lgv = app.add_subcommand("lgv", "T at (i,j) through the network determinant");
  with_input(lgv, true);
  lgv->add_option("--i", o.i, "Center i");
  lgv->add_option("--j", o.j, "Center j");
  lgv->add_option("--k,--size", o.k, "Diamond size (levels above the lower surface level)");
  cmds.emplace_back(lgv, cmd_lgv);

  auto* wall = app.add_subcommand("wall", "Zero window and mirror identity for a walled strip");
  with_input(wall, false);
  wall->add_option("--d", o.d, "Rank d (random data when no input)");
  wall->add_option("--kmax", o.kmax, "Check levels |k| <= kmax");
  cmds.emplace_back(wall, cmd_wall);

  auto* zam = app.add_subcommand("zamolodchikov", "Periodicity of the tube with two walls");
  with_input(zam, false);
  zam->add_option("--d", o.d, "Rank d (random tube when no input)");
  zam->add_option("--ell", o.ell, "Tube width ell");
  cmds.emplace_back(zam, cmd_zamolodchikov);

  auto* cond = app.add_subcommand("condense", "Determinant by Dodgson condensation");
  with_input(cond, true);
  cmds.emplace_back(cond, cmd_condense);

  auto* coeffs = app.add_subcommand("coeffs", "Linear-recursion coefficients of a walled strip");
  with_input(coeffs, false);
  coeffs->add_option("--d", o.d, "Rank d (random data when no input)");
  coeffs->add_option("--anchor", o.anchors, "Anchors j+k (sum) or j-k (difference); odd");
  coeffs->add_option("--direction", o.direction, "sum or difference")
      ->check(CLI::IsMember({"sum", "difference"}));
  cmds.emplace_back(coeffs, cmd_coeffs);

  auto* penta = app.add_subcommand("pentagram", "O_n, E_n along an orbit of the higher pentagram map");
  with_input(penta, false);
  penta->add_option("--iters", o.iters, "Iterations");
  penta->add_option("--kappa", o.kappa, "kappa for polygon input or random pq");
  penta->add_option("--n", o.n, "n for random pq");
  cmds.emplace_back(penta, cmd_pentagram);

  auto* mut = app.add_subcommand("mutations", "The map through Glick-quiver y-seed mutations");
  with_input(mut, false);
  mut->add_option("--iters", o.iters, "Iterations");
  mut->add_option("--kappa", o.kappa, "kappa for polygon input or random pq");
  mut->add_option("--n", o.n, "n for random pq");
  cmds.emplace_back(mut, cmd_mutations);

  auto* unfold = app.add_subcommand("unfold", "Quasi-periodic octahedron solution from a fundamental domain");
  with_input(unfold, true);
  unfold->add_option("--kmax", o.kmax, "Highest level");
  cmds.emplace_back(unfold, cmd_unfold);

  auto* all = app.add_subcommand("verify-all", "Run the acceptance suite");
  cmds.emplace_back(all, cmd_verify_all);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (o.kappa < 3) throw InputError("--kappa must be at least 3");
    if (o.n < 1 || o.iters < 0) throw InputError("--n must be positive and --iters nonnegative");
    for (auto& [sub, fn] : cmds) {
      if (!sub->parsed()) continue;
      Output out = fn(o);
      emit(o, out);
      return out.ok ? 0 : 1;
    }
  } catch (const InputError& e) {
    std::cerr << "octa: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    // Lattice and algebra errors here stem from the supplied data.
    std::cerr << "octa: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
