// Command-line front end: parses matrices and vectors, runs the library
// predicates, and emits verdicts, witnesses, decompositions, enumerations
// and region data as canonical JSON (CSV for region grids).
//
// Exit codes: 0 = predicate holds / operation succeeded,
//             1 = predicate fails / relation absent,
//             2 = usage or input error.

#include <functional>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "maxalg/errors.hpp"
#include "maxalg/extreme.hpp"
#include "maxalg/io.hpp"
#include "maxalg/majorization.hpp"
#include "maxalg/oracles.hpp"
#include "maxalg/semiring.hpp"
#include "maxalg/spectral.hpp"
#include "maxalg/stochastic.hpp"

namespace {

using nlohmann::json;
using namespace maxalg;

struct GlobalOptions {
  double tolerance = 1e-9;
  std::string format = "json";
  long long seed = 0;  // reserved for randomized helpers
  std::string input = "auto";
};

io::MatrixFormat input_format(const GlobalOptions& g) {
  if (g.input == "json") return io::MatrixFormat::Json;
  if (g.input == "text") return io::MatrixFormat::Text;
  return io::MatrixFormat::Auto;
}

void require_json_format(const GlobalOptions& g) {
  if (g.format != "json") {
    throw validation_error("--format csv is only available for region output");
  }
}

int emit(const json& doc, int exit_code = 0) {
  std::cout << io::canonical_json(doc) << "\n";
  return exit_code;
}

json violations_json(const std::vector<StochasticViolation>& violations) {
  json out = json::array();
  for (const auto& v : violations) {
    out.push_back({{"axis", v.axis == Axis::Row ? "row" : "column"},
                   {"index", v.index + 1},
                   {"max", v.max_value}});
  }
  return out;
}

json indices_1based(const std::vector<std::size_t>& xs) {
  json out = json::array();
  for (std::size_t x : xs) out.push_back(x + 1);
  return out;
}

json blocks_json(const std::vector<BlockSpec>& blocks) {
  json out = json::array();
  for (const auto& b : blocks) {
    switch (b.kind) {
      case BlockKind::Hook:
        out.push_back({{"kind", "hook"}, {"rows", b.rows}, {"cols", b.cols}});
        break;
      case BlockKind::Column:
        out.push_back({{"kind", "column"}, {"size", b.rows}});
        break;
      case BlockKind::Row:
        out.push_back({{"kind", "row"}, {"size", b.cols}});
        break;
    }
  }
  return out;
}

int run_check(const GlobalOptions& g, const std::string& kind, const std::string& path) {
  require_json_format(g);
  const Tolerance tol(g.tolerance);
  const MaxMatrix d = io::load_matrix(path, input_format(g));

  bool holds = false;
  json details = json::object();
  if (kind == "unital") {
    holds = is_unital_preserving(d, tol);
  } else if (kind == "trace") {
    holds = is_trace_preserving(d, tol);
  } else {
    const StochasticClass cls = classify(d, tol);
    holds = kind == "row" ? cls.row : kind == "column" ? cls.column : cls.doubly;
  }
  if (!holds) {
    // Row violations explain a failed unital check, column violations a
    // failed trace check; both axes explain the stochastic kinds.
    auto all = classify(d, tol).violations;
    std::vector<StochasticViolation> relevant;
    for (const auto& v : all) {
      const bool row_side = v.axis == Axis::Row;
      if (kind == "unital" && !row_side) continue;
      if (kind == "trace" && row_side) continue;
      if (kind == "row" && !row_side) continue;
      if (kind == "column" && row_side) continue;
      relevant.push_back(v);
    }
    details["violations"] = violations_json(relevant);
  }
  return emit({{"predicate", kind}, {"holds", holds}, {"details", details}},
              holds ? 0 : 1);
}

int run_spectral(const GlobalOptions& g, const std::string& path) {
  require_json_format(g);
  const MaxMatrix a = io::load_matrix(path, input_format(g));
  const SpectralReport report = spectral_report(a);
  json local = json::array();
  for (double r : report.local_radii) local.push_back(r);
  return emit({{"radius", report.radius},
               {"norm", report.norm},
               {"local_radii", local},
               {"irreducible", report.irreducible}});
}

int run_majorize_check(const GlobalOptions& g, const std::string& xs, const std::string& ys) {
  require_json_format(g);
  const Tolerance tol(g.tolerance);
  const MaxVector x = io::parse_vector(xs);
  const MaxVector y = io::parse_vector(ys);
  const bool holds = majorizes_check(x, y, tol);
  json details = json::object();
  if (!holds) {
    details = {{"x_max", x.max_entry()},
               {"x_min", x.min_entry()},
               {"y_max", y.max_entry()},
               {"y_min", y.min_entry()}};
  }
  return emit({{"predicate", "max-majorization"}, {"holds", holds}, {"details", details}},
              holds ? 0 : 1);
}

int run_majorize_witness(const GlobalOptions& g, const std::string& xs, const std::string& ys) {
  require_json_format(g);
  const Tolerance tol(g.tolerance);
  const MaxVector x = io::parse_vector(xs);
  const MaxVector y = io::parse_vector(ys);
  const auto w = try_witness(x, y, tol);
  if (!w) {
    return emit({{"found", false},
                 {"details",
                  {{"x_max", x.max_entry()},
                   {"x_min", x.min_entry()},
                   {"y_max", y.max_entry()},
                   {"y_min", y.min_entry()}}}},
                1);
  }
  return emit({{"found", true},
               {"matrix", io::matrix_json(w->matrix)},
               {"pivots", {{"k", w->k + 1}, {"l", w->l + 1}, {"m", w->m + 1}}}});
}

int run_majorize_region(const GlobalOptions& g, const std::string& ys, double step,
                        double lo, double hi) {
  const Tolerance tol(g.tolerance);
  const MaxVector y = io::parse_vector(ys);
  const double y_max = y.max_entry();
  if (step <= 0.0) step = y_max > 0.0 ? y_max / 20.0 : 0.05;
  if (hi < 0.0) hi = y_max > 0.0 ? 1.5 * y_max : 1.0;

  const std::vector<AxisBounds> bounds(y.dim(), AxisBounds{lo, hi});
  const RegionSample sample = region_sample(y, step, bounds, tol);

  if (g.format == "csv") {
    std::cout << io::region_csv(sample);
    return 0;
  }
  json points = json::array();
  for (std::size_t p = 0; p < sample.grid_points.size(); ++p) {
    points.push_back({{"x", io::vector_json(sample.grid_points[p])},
                      {"inside", sample.labels[p] ? 1 : 0}});
  }
  json bounds_doc = json::array();
  for (const auto& b : sample.bounds) {
    bounds_doc.push_back({{"lo", b.lo}, {"hi", b.hi}});
  }
  return emit({{"step", sample.step}, {"bounds", bounds_doc}, {"points", points}});
}

int run_extreme_check(const GlobalOptions& g, const std::string& path) {
  require_json_format(g);
  const Tolerance tol(g.tolerance);
  const MaxMatrix e = io::load_matrix(path, input_format(g));
  const bool holds = is_max_extreme(e, tol);
  json details = json::object();
  if (!holds) {
    const StochasticClass cls = classify(e, tol);
    if (!cls.doubly) {
      details["reason"] = "not max-doubly stochastic";
      details["violations"] = violations_json(cls.violations);
    } else {
      const auto w = non_extremality_witness(e, tol);
      details["reason"] = "a max-convex combination of two distinct members reproduces it";
      details["witness"] = {{"d1", io::matrix_json(w->d1)},
                            {"d2", io::matrix_json(w->d2)},
                            {"alpha1", w->alpha1.value()},
                            {"alpha2", w->alpha2.value()}};
    }
  }
  return emit({{"predicate", "max-extreme"}, {"holds", holds}, {"details", details}},
              holds ? 0 : 1);
}

int run_extreme_enumerate(const GlobalOptions& g, std::size_t n) {
  require_json_format(g);
  const auto points = enumerate_extreme(n);
  json matrices = json::array();
  for (const auto& m : points) matrices.push_back(io::matrix_json(m));
  return emit({{"count", points.size()}, {"matrices", matrices}});
}

int run_extreme_decompose(const GlobalOptions& g, const std::string& path) {
  require_json_format(g);
  const Tolerance tol(g.tolerance);
  const MaxMatrix e = io::load_matrix(path, input_format(g));
  if (!is_max_extreme(e, tol)) {
    return emit({{"decomposed", false}, {"details", {{"reason", "matrix is not max-extreme"}}}},
                1);
  }
  const ExtremeDecomposition dec = decompose_extreme(e, tol);
  return emit({{"decomposed", true},
               {"p_left", indices_1based(dec.p_left.mapping())},
               {"blocks", blocks_json(dec.blocks)},
               {"p_right", indices_1based(dec.p_right.mapping())}});
}

int run_oracle_cycle(const GlobalOptions& g, const std::string& path) {
  require_json_format(g);
  const MaxMatrix a = io::load_matrix(path, input_format(g));
  return emit({{"radius", oracle::brute_cycle_radius(a)}});
}

int run_oracle_extreme(const GlobalOptions& g, std::size_t n) {
  require_json_format(g);
  const auto points = oracle::brute_extreme_points(n);
  json matrices = json::array();
  for (const auto& m : points) matrices.push_back(io::matrix_json(m));
  return emit({{"count", points.size()}, {"matrices", matrices}});
}

int run_oracle_majorize(const GlobalOptions& g, const std::string& xs, const std::string& ys) {
  require_json_format(g);
  const MaxVector x = io::parse_vector(xs);
  const MaxVector y = io::parse_vector(ys);
  const auto d = oracle::brute_majorization_witness(x, y);
  if (!d) return emit({{"found", false}}, 1);
  return emit({{"found", true}, {"matrix", io::matrix_json(*d)}});
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"max-times (tropical) linear algebra toolkit"};
  app.require_subcommand(1);
  app.fallthrough();  // global flags may follow a subcommand

  GlobalOptions g;
  app.add_option("--tolerance", g.tolerance, "floating-point comparison tolerance")
      ->envname("MAXALG_TOLERANCE")
      ->capture_default_str();
  app.add_option("--format", g.format, "output format (csv applies to region data)")
      ->check(CLI::IsMember({"json", "csv"}))
      ->capture_default_str();
  app.add_option("--seed", g.seed, "seed for randomized helpers")->capture_default_str();
  app.add_option("--input", g.input, "matrix input format")
      ->check(CLI::IsMember({"auto", "json", "text"}))
      ->capture_default_str();

  std::function<int()> action;

  // check
  {
    auto* cmd = app.add_subcommand("check", "stochastic / preservation predicates");
    auto kind = std::make_shared<std::string>();
    auto path = std::make_shared<std::string>("-");
    cmd->add_option("--kind", *kind, "row|column|doubly|unital|trace")
        ->required()
        ->check(CLI::IsMember({"row", "column", "doubly", "unital", "trace"}));
    cmd->add_option("matrix", *path, "matrix file, or - for stdin");
    cmd->callback([&, kind, path] { action = [&, kind, path] { return run_check(g, *kind, *path); }; });
  }

  // spectral
  {
    auto* cmd = app.add_subcommand("spectral", "radius, norm, local radii, irreducibility");
    auto path = std::make_shared<std::string>("-");
    cmd->add_option("matrix", *path, "matrix file, or - for stdin");
    cmd->callback([&, path] { action = [&, path] { return run_spectral(g, *path); }; });
  }

  // majorize check|witness|region
  {
    auto* cmd = app.add_subcommand("majorize", "max-majorization relation");
    cmd->require_subcommand(1);
    auto xs = std::make_shared<std::string>();
    auto ys = std::make_shared<std::string>();
    auto step = std::make_shared<double>(-1.0);
    auto lo = std::make_shared<double>(0.0);
    auto hi = std::make_shared<double>(-1.0);

    auto* chk = cmd->add_subcommand("check", "does y max-majorize x?");
    chk->add_option("--x", *xs, "comma-separated vector")->required();
    chk->add_option("--y", *ys, "comma-separated vector")->required();
    chk->callback([&, xs, ys] { action = [&, xs, ys] { return run_majorize_check(g, *xs, *ys); }; });

    auto* wit = cmd->add_subcommand("witness", "constructive max-doubly stochastic witness");
    wit->add_option("--x", *xs, "comma-separated vector")->required();
    wit->add_option("--y", *ys, "comma-separated vector")->required();
    wit->callback([&, xs, ys] { action = [&, xs, ys] { return run_majorize_witness(g, *xs, *ys); }; });

    auto* reg = cmd->add_subcommand("region", "label a grid by the majorization predicate");
    reg->add_option("--y", *ys, "comma-separated vector")->required();
    reg->add_option("--step", *step, "grid step (default y_max / 20)")
        ->check(CLI::PositiveNumber);
    reg->add_option("--lo", *lo, "lower bound, every axis (default 0)")
        ->check(CLI::NonNegativeNumber);
    reg->add_option("--hi", *hi, "upper bound, every axis (default 1.5 * y_max)")
        ->check(CLI::NonNegativeNumber);
    reg->callback([&, ys, step, lo, hi] {
      action = [&, ys, step, lo, hi] { return run_majorize_region(g, *ys, *step, *lo, *hi); };
    });
  }

  // extreme check|enumerate|decompose
  {
    auto* cmd = app.add_subcommand("extreme", "max-extreme points of the MDS set");
    cmd->require_subcommand(1);
    auto path = std::make_shared<std::string>("-");
    auto n = std::make_shared<std::size_t>(0);

    auto* chk = cmd->add_subcommand("check", "is the matrix max-extreme?");
    chk->add_option("matrix", *path, "matrix file, or - for stdin");
    chk->callback([&, path] { action = [&, path] { return run_extreme_check(g, *path); }; });

    auto* en = cmd->add_subcommand("enumerate", "all max-extreme points of MDS_n");
    en->add_option("n", *n, "matrix dimension")->required();
    en->callback([&, n] { action = [&, n] { return run_extreme_enumerate(g, *n); }; });

    auto* dec = cmd->add_subcommand("decompose", "canonical P1 (x) E (x) P2 factorization");
    dec->add_option("matrix", *path, "matrix file, or - for stdin");
    dec->callback([&, path] { action = [&, path] { return run_extreme_decompose(g, *path); }; });
  }

  // oracle cycle|extreme|majorize
  {
    auto* cmd = app.add_subcommand("oracle", "brute-force reference implementations");
    cmd->require_subcommand(1);
    auto path = std::make_shared<std::string>("-");
    auto n = std::make_shared<std::size_t>(0);
    auto xs = std::make_shared<std::string>();
    auto ys = std::make_shared<std::string>();

    auto* cyc = cmd->add_subcommand("cycle", "simple-cycle spectral radius");
    cyc->add_option("matrix", *path, "matrix file, or - for stdin");
    cyc->callback([&, path] { action = [&, path] { return run_oracle_cycle(g, *path); }; });

    auto* ext = cmd->add_subcommand("extreme", "exhaustive extreme-point filter");
    ext->add_option("n", *n, "matrix dimension")->required();
    ext->callback([&, n] { action = [&, n] { return run_oracle_extreme(g, *n); }; });

    auto* maj = cmd->add_subcommand("majorize", "exhaustive witness search");
    maj->add_option("--x", *xs, "comma-separated vector")->required();
    maj->add_option("--y", *ys, "comma-separated vector")->required();
    maj->callback([&, xs, ys] { action = [&, xs, ys] { return run_oracle_majorize(g, *xs, *ys); }; });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    return action ? action() : 2;
  } catch (const maxalg::error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
