#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <optional>
#include <ostream>
#include <string>
#include <thread>
#include <variant>

#include "densepm/certify.hpp"
#include "densepm/counting.hpp"
#include "densepm/errors.hpp"
#include "densepm/graph_io.hpp"
#include "densepm/hankel.hpp"
#include "densepm/linalg.hpp"
#include "densepm/reduction.hpp"

namespace densepm::cli {
namespace {

using nlohmann::ordered_json;

inline constexpr std::size_t kDefaultCountMaxN = 20;

struct Settings {
  std::string file;
  std::string mode = "perfect";
  std::string construction;
  bool verify = false;
  std::string kind;
  std::size_t n = 0;
  std::string check;
  std::size_t i = 0;
  bool json = false;
  std::optional<std::size_t> max_n;
  std::size_t max_vertices = kDefaultMaxVertices;
};

/// Thrown when a verification verdict comes back negative.
struct VerificationFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

ordered_json decimal_array(const ExactVector& v) {
  auto out = ordered_json::array();
  for (const auto& x : v) out.push_back(to_decimal(x));
  return out;
}

ordered_json matrix_rows(const ExactMatrix& m) {
  auto out = ordered_json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) out.push_back(decimal_array(ExactVector(m.row(i).begin(), m.row(i).end())));
  return out;
}

PermanentOptions permanent_options() {
  return {std::max(1u, std::thread::hardware_concurrency())};
}

BipartiteMultigraph require_bipartite(const Graph& g, const char* what) {
  if (const auto* b = std::get_if<BipartiteMultigraph>(&g)) return *b;
  throw InputError(std::string(what) + " requires a bipartite graph");
}

Construction require_construction(const std::string& name) {
  if (auto c = parse_construction(name)) return *c;
  throw InputError("unknown construction '" + name + "', expected beta or alpha");
}

void cmd_count(const Settings& s, std::ostream& out) {
  const Graph g = read_graph_file(s.file);
  const std::size_t cap = s.max_n.value_or(kDefaultCountMaxN);
  if (s.mode == "perfect") {
    BigInt count;
    if (const auto* b = std::get_if<BipartiteMultigraph>(&g)) {
      if (b->balanced() && b->n_left() > cap)
        throw ResourceLimitError("bipartite side " + std::to_string(b->n_left()) + " exceeds --max-n " +
                                 std::to_string(cap));
      count = count_pm_bipartite(*b, permanent_options());
    } else {
      count = count_pm_general(std::get<SimpleGraph>(g), s.max_vertices);
    }
    if (s.json) {
      out << ordered_json{{"kind", "count"}, {"mode", "perfect"}, {"count", to_decimal(count)}}.dump() << '\n';
    } else {
      out << to_decimal(count) << '\n';
    }
  } else if (s.mode == "by-size") {
    const auto poly = matchings_by_size(require_bipartite(g, "--mode by-size"), cap);
    if (s.json) {
      out << ordered_json{{"kind", "count"}, {"mode", "by-size"}, {"counts", decimal_array(poly.counts)}}.dump()
          << '\n';
    } else {
      out << format_vector(poly.counts) << '\n';
    }
  } else {
    throw InputError("unknown mode '" + s.mode + "', expected perfect or by-size");
  }
}

void cmd_reduce(const Settings& s, std::ostream& out) {
  const Construction c = require_construction(s.construction);
  const auto g = require_bipartite(read_graph_file(s.file), "reduce");
  const std::size_t cap = s.max_n.value_or(default_max_n(c));
  if (g.n_left() > cap || g.n_right() > cap)
    throw ResourceLimitError("graph side exceeds --max-n " + std::to_string(cap));

  const ExactCountOracle oracle(s.max_vertices, permanent_options());
  ReductionReport report = reduce(c, g, oracle);
  if (s.verify) report.verified = report.recovered == matchings_by_size(g, std::max(cap, kDefaultMaxMatchingSide));

  if (s.json) {
    ordered_json doc{{"kind", "reduce"},
                     {"construction", construction_name(c)},
                     {"n", report.n},
                     {"p", decimal_array(report.p)},
                     {"m", decimal_array(report.recovered.counts)},
                     {"oracle_calls", report.oracle_calls}};
    if (report.verified) doc["verified"] = *report.verified;
    out << doc.dump() << '\n';
  } else {
    out << "construction: " << construction_name(c) << '\n'
        << "n: " << report.n << '\n'
        << "p: " << format_vector(report.p) << '\n'
        << "m: " << format_vector(report.recovered.counts) << '\n'
        << "oracle_calls: " << report.oracle_calls << '\n';
    if (report.verified) out << "verdict: " << (*report.verified ? "OK" : "MISMATCH") << '\n';
  }
  if (report.verified && !*report.verified)
    throw VerificationFailure("recovered counts disagree with direct enumeration");
}

void cmd_matrix(const Settings& s, std::ostream& out) {
  const auto kind = parse_matrix_kind(s.kind);
  if (!kind) throw InputError("unknown matrix kind '" + s.kind + "', expected A, B, C, Q, pascalL or cbinL");
  const ExactMatrix m = build_matrix(*kind, s.n);

  ordered_json doc{{"kind", "matrix"}, {"matrix", matrix_kind_name(*kind)}, {"n", s.n}, {"rows", matrix_rows(m)}};
  std::string text = format_rows(m);
  bool failed = false;

  if (s.check.empty()) {
    // matrix only
  } else if (s.check == "pd") {
    const auto minors = leading_principal_minors(m);
    const bool pd = is_positive_definite(m);
    doc["check"] = "pd";
    doc["minors"] = decimal_array(minors);
    doc["positive_definite"] = pd;
    text += "minors: " + format_vector(minors) + "\n";
    text += std::string("verdict: ") + (pd ? "positive definite" : "not positive definite") + "\n";
  } else if (s.check == "det") {
    const auto det = determinant(m);
    doc["check"] = "det";
    doc["det"] = to_decimal(det);
    text += "det: " + to_decimal(det) + "\n";
  } else if (s.check == "factor") {
    const auto result = check_factorization(*kind, s.n);
    doc["check"] = "factor";
    doc["identity"] = result.identity;
    doc["holds"] = result.holds;
    text += "factor: " + std::string(result.holds ? "PASS" : "FAIL") + " (" + result.identity + ")\n";
    failed = !result.holds;
  } else if (s.check == "blocks") {
    if (*kind != MatrixKind::Q) throw InputError("--check blocks applies to Q only");
    const auto blocks = checkerboard_split(m, s.n);
    const std::size_t b_index = s.n % 2 == 0 ? s.n : s.n - 1;
    const std::size_t c_index = s.n % 2 == 0 ? s.n : s.n + 1;
    const auto b = build_B(b_index);
    const auto c = build_C(c_index);
    const bool top_ok = blocks.top_left == schur_product(b, b);
    const bool bottom_ok = blocks.bottom_right == schur_product(c, c);
    doc["check"] = "blocks";
    doc["top_left"] = matrix_rows(blocks.top_left);
    doc["bottom_right"] = matrix_rows(blocks.bottom_right);
    doc["off_blocks_zero"] = blocks.off_blocks_zero;
    doc["top_left_is_B_schur_B"] = top_ok;
    doc["bottom_right_is_C_schur_C"] = bottom_ok;
    const std::string bn = std::to_string(b_index);
    const std::string cn = std::to_string(c_index);
    text += "top-left: " + format_nested(blocks.top_left) + "\n";
    text += "bottom-right: " + format_nested(blocks.bottom_right) + "\n";
    text += std::string("off-blocks: ") + (blocks.off_blocks_zero ? "zero" : "nonzero") + "\n";
    text += "top-left = B_" + bn + " o B_" + bn + ": " + (top_ok ? "PASS" : "FAIL") + "\n";
    text += "bottom-right = C_" + cn + " o C_" + cn + ": " + (bottom_ok ? "PASS" : "FAIL") + "\n";
    failed = !(top_ok && bottom_ok && blocks.off_blocks_zero);
  } else {
    throw InputError("unknown check '" + s.check + "', expected pd, det, factor or blocks");
  }

  if (s.json) out << doc.dump() << '\n';
  else out << text;
  if (failed) throw VerificationFailure("matrix identity check failed");
}

void cmd_verify_class(const Settings& s, std::ostream& out) {
  const Construction c = require_construction(s.construction);
  const auto g = require_bipartite(read_graph_file(s.file), "verify-class");
  if (c == Construction::Beta) {
    const auto gi = augment_beta(g, s.i);
    const bool ok = bipartite_independence_at_most(gi, 2);
    if (s.json) {
      out << ordered_json{{"kind", "verify-class"}, {"construction", "beta"}, {"i", s.i},
                          {"left", gi.n_left()},   {"right", gi.n_right()},   {"beta_at_most_2", ok}}
                 .dump()
          << '\n';
    } else {
      out << "left: " << gi.n_left() << '\n'
          << "right: " << gi.n_right() << '\n'
          << "beta<=2: " << (ok ? "true" : "false") << '\n';
    }
  } else {
    const auto gi = augment_alpha(g, s.i);
    const bool ok = independence_at_most(gi, 2);
    if (s.json) {
      out << ordered_json{{"kind", "verify-class"}, {"construction", "alpha"}, {"i", s.i},
                          {"vertices", gi.n_vertices()}, {"alpha_at_most_2", ok}}
                 .dump()
          << '\n';
    } else {
      out << "vertices: " << gi.n_vertices() << '\n' << "alpha<=2: " << (ok ? "true" : "false") << '\n';
    }
  }
}

void add_common(CLI::App* cmd, Settings& s) {
  cmd->add_flag("--json", s.json, "Emit a JSON document with decimal-string integers");
}

void add_caps(CLI::App* cmd, Settings& s) {
  cmd->add_option("--max-n", s.max_n, "Cap on bipartite side size for exponential kernels");
  cmd->add_option("--max-vertices", s.max_vertices, "Cap on vertices for the general-graph counter")
      ->capture_default_str();
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact perfect-matching counting and dense-graph reductions", "densepm"};
  app.require_subcommand(1);
  Settings s;

  auto* count = app.add_subcommand("count", "Count perfect matchings, or matchings of every size");
  count->add_option("--file", s.file, "Graph file")->required();
  count->add_option("--mode", s.mode, "perfect | by-size")->capture_default_str();
  add_common(count, s);
  add_caps(count, s);

  auto* reduce_cmd = app.add_subcommand("reduce", "Recover the matching polynomial through a dense-graph oracle");
  reduce_cmd->add_option("--file", s.file, "Balanced simple bipartite graph file")->required();
  reduce_cmd->add_option("--construction", s.construction, "beta | alpha")->required();
  reduce_cmd->add_flag("--verify", s.verify, "Compare against direct enumeration");
  add_common(reduce_cmd, s);
  add_caps(reduce_cmd, s);

  auto* matrix = app.add_subcommand("matrix", "Print a structured matrix and optionally certify it");
  matrix->add_option("--kind", s.kind, "A | B | C | Q | pascalL | cbinL")->required();
  matrix->add_option("--n", s.n, "Size parameter")->required();
  matrix->add_option("--check", s.check, "pd | det | factor | blocks");
  add_common(matrix, s);

  auto* verify_class = app.add_subcommand("verify-class", "Build G_i and check its independence bound");
  verify_class->add_option("--file", s.file, "Balanced bipartite graph file")->required();
  verify_class->add_option("--construction", s.construction, "beta | alpha")->required();
  verify_class->add_option("--i", s.i, "Number of vertices added per side")->required();
  add_common(verify_class, s);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  }

  try {
    if (count->parsed()) cmd_count(s, out);
    else if (reduce_cmd->parsed()) cmd_reduce(s, out);
    else if (matrix->parsed()) cmd_matrix(s, out);
    else cmd_verify_class(s, out);
  } catch (const InputError& e) {
    err << "input error: " << e.what() << '\n';
    return kInputError;
  } catch (const ResourceLimitError& e) {
    err << "resource limit: " << e.what() << '\n';
    return kResourceLimit;
  } catch (const OracleInconsistencyError& e) {
    err << "inconsistent: " << e.what() << '\n';
    return kInconsistent;
  } catch (const SingularSystemError& e) {
    err << "inconsistent: " << e.what() << '\n';
    return kInconsistent;
  } catch (const VerificationFailure& e) {
    err << "inconsistent: " << e.what() << '\n';
    return kInconsistent;
  }
  return kOk;
}

}  // namespace densepm::cli
