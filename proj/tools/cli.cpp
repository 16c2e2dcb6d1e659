#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <ostream>
#include <sstream>

#include "xaax/canonical_forms.hpp"
#include "xaax/errors.hpp"
#include "xaax/json_io.hpp"
#include "xaax/lie_tools.hpp"
#include "xaax/oracle.hpp"
#include "xaax/pascal_delta.hpp"
#include "xaax/solver.hpp"
#include "xaax/text_format.hpp"
#include "xaax/verify.hpp"

namespace xaax::cli {

namespace {

// A malformed literal on the command line is a usage error, not a domain one.
class UsageError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

struct SpecArgs {
  std::size_t n = 1;
  std::string mu;
};

struct Options {
  SpecArgs spec;
  std::string format;
  bool inverse = false;
  std::string input;
  std::size_t max_order = OracleOptions{}.max_order;
  std::size_t n_max = 8;
  bool parallel = false;
  std::vector<std::string> suites;
};

Scalar parse_mu(const std::string& text) {
  try {
    return Scalar::parse(text);
  } catch (const ParseError& e) {
    throw UsageError(std::string("--mu: ") + e.what());
  }
}

CanonicalSpec to_spec(const SpecArgs& a) { return CanonicalSpec{a.n, parse_mu(a.mu)}; }

void add_format(CLI::App* cmd, Options& o, const std::string& fallback) {
  o.format = fallback;
  cmd->add_option("--format", o.format, "Output format")
      ->check(CLI::IsMember({"json", "text"}))
      ->capture_default_str();
}

void add_n(CLI::App* cmd, Options& o) {
  cmd->add_option("--n", o.spec.n, "Block order n")->required()->check(CLI::PositiveNumber);
}

void add_mu(CLI::App* cmd, Options& o, bool required = true) {
  auto* opt = cmd->add_option("--mu", o.spec.mu, "Eigenvalue as re[,im], each part p or p/q");
  if (required) opt->required();
}

void emit_matrix(std::ostream& out, const Matrix& m, const std::string& format) {
  if (format == "text") {
    out << render_grid(m);
  } else {
    out << dump_matrix(m) << '\n';
  }
}

Matrix read_matrix_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open input file '" + path + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_matrix(buffer.str());
}

// The matrix A for oracle-style verbs: a JSON file, or H_2n(mu) built from
// --n/--mu without the admissibility check.
Matrix oracle_input(const Options& o, bool have_spec) {
  if (!o.input.empty()) return read_matrix_file(o.input);
  if (!have_spec) throw UsageError("either --input or both --n and --mu are required");
  const CanonicalSpec spec = to_spec(o.spec);
  const std::size_t n = spec.n;
  return Matrix::from_blocks(Matrix::zeros(n, n), Matrix::identity(n), jordan_block(n, spec.mu),
                             Matrix::zeros(n, n));
}

int run_verify(const Options& o, std::ostream& out) {
  VerifyOptions vo{o.n_max, o.parallel};
  std::vector<SuiteResult> results;
  if (o.suites.empty()) {
    results = run_verification(vo);
  } else {
    for (const auto& name : o.suites) results.push_back(run_suite(name, vo));
  }
  const bool all_passed =
      std::all_of(results.begin(), results.end(), [](const SuiteResult& r) { return r.passed; });

  if (o.format == "json") {
    Json suites = Json::array();
    for (const auto& r : results) {
      Json s;
      s["suite"] = r.name;
      s["passed"] = r.passed;
      s["checks"] = r.checks;
      if (!r.passed) s["failure"] = r.failure;
      suites.push_back(std::move(s));
    }
    Json doc;
    doc["n_max"] = o.n_max;
    doc["passed"] = all_passed;
    doc["suites"] = std::move(suites);
    out << doc.dump(2) << '\n';
  } else {
    for (const auto& r : results) {
      out << (r.passed ? "PASS " : "FAIL ") << r.name << " (" << r.checks << " checks)";
      if (!r.passed) out << ": " << r.failure;
      out << '\n';
    }
    out << (all_passed ? "all suites passed" : "some suites FAILED") << " (n_max = " << o.n_max
        << ")\n";
  }
  return all_passed ? kSuccess : kDomainError;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact solver and oracle for X A + A X^T = 0 with Type-II blocks", "xaax"};
  app.require_subcommand(1, 1);
  app.fallthrough(false);

  Options o;

  auto* delta_cmd = app.add_subcommand("delta", "Pascal matrix Delta_n with mu = (-1)^n");
  add_n(delta_cmd, o);
  delta_cmd->add_flag("--inverse", o.inverse, "Emit the inverse (center reflection)");

  auto* jordan_cmd = app.add_subcommand("jordan", "Jordan block J_n(mu)");
  add_n(jordan_cmd, o);
  add_mu(jordan_cmd, o);

  auto* hblock_cmd = app.add_subcommand("hblock", "Type-II block H_2n(mu)");
  add_n(hblock_cmd, o);
  add_mu(hblock_cmd, o);

  auto* basis_cmd = app.add_subcommand("basis", "Closed-form basis of the solution space");
  add_n(basis_cmd, o);
  add_mu(basis_cmd, o);

  auto* dim_cmd = app.add_subcommand("dim", "Dimension of the solution space");
  add_n(dim_cmd, o);
  add_mu(dim_cmd, o);

  auto* oracle_cmd = app.add_subcommand("oracle", "Brute-force kernel basis for any square A");
  oracle_cmd->add_option("--input", o.input, "Matrix A as a JSON file")->check(CLI::ExistingFile);
  auto* oracle_n = oracle_cmd->add_option("--n", o.spec.n, "Use A = H_2n(mu)")
                       ->check(CLI::PositiveNumber);
  auto* oracle_mu = oracle_cmd->add_option("--mu", o.spec.mu, "Eigenvalue for --n");
  oracle_n->needs(oracle_mu);
  oracle_mu->needs(oracle_n);
  oracle_n->excludes("--input");
  oracle_cmd->add_option("--max-order", o.max_order, "Largest accepted order of A")
      ->capture_default_str();

  auto* compare_cmd = app.add_subcommand("compare", "Check the closed form against the oracle");
  add_n(compare_cmd, o);
  add_mu(compare_cmd, o);

  auto* structure_cmd = app.add_subcommand("structure", "Structure constants of the algebra");
  structure_cmd->add_option("--input", o.input, "Use the oracle basis of this JSON matrix")
      ->check(CLI::ExistingFile);
  auto* structure_n = structure_cmd->add_option("--n", o.spec.n, "Block order n")
                          ->check(CLI::PositiveNumber);
  auto* structure_mu = structure_cmd->add_option("--mu", o.spec.mu, "Eigenvalue");
  structure_n->needs(structure_mu);
  structure_mu->needs(structure_n);
  structure_n->excludes("--input");

  auto* verify_cmd = app.add_subcommand("verify", "Run the invariant suites");
  verify_cmd->add_option("--n-max", o.n_max, "Largest n exercised")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  verify_cmd->add_option("--suite", o.suites, "Run only these suites")
      ->check(CLI::IsMember(verification_suites()));
  verify_cmd->add_flag("--parallel", o.parallel, "Run suites concurrently");

  add_format(delta_cmd, o, "json");
  add_format(jordan_cmd, o, "json");
  add_format(hblock_cmd, o, "json");
  add_format(basis_cmd, o, "json");
  add_format(dim_cmd, o, "text");
  add_format(oracle_cmd, o, "json");
  add_format(compare_cmd, o, "text");
  add_format(structure_cmd, o, "json");
  add_format(verify_cmd, o, "text");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kSuccess;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kSuccess;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  }

  // The subcommand's own --format default is set last, so re-read it.
  const CLI::App* verb = app.get_subcommands().front();
  o.format = verb->get_option("--format")->as<std::string>();
  const std::string& fmt = o.format;

  try {
    if (verb == delta_cmd) {
      emit_matrix(out, o.inverse ? delta_inverse(o.spec.n) : delta(o.spec.n).matrix, fmt);
    } else if (verb == jordan_cmd) {
      emit_matrix(out, jordan_block(o.spec.n, parse_mu(o.spec.mu)), fmt);
    } else if (verb == hblock_cmd) {
      emit_matrix(out, h_block(to_spec(o.spec)), fmt);
    } else if (verb == basis_cmd) {
      const SolutionBasis basis = explicit_basis(to_spec(o.spec));
      if (fmt == "text") {
        out << render_basis(basis);
      } else {
        out << basis_to_json(basis).dump() << '\n';
      }
    } else if (verb == dim_cmd) {
      const std::size_t d = dimension(to_spec(o.spec));
      if (fmt == "json") {
        out << Json{{"dim", d}}.dump() << '\n';
      } else {
        out << d << '\n';
      }
    } else if (verb == oracle_cmd) {
      const Matrix a = oracle_input(o, oracle_n->count() > 0);
      const SolutionBasis basis = oracle_basis(a, OracleOptions{o.max_order});
      if (fmt == "text") {
        out << render_basis(basis);
      } else {
        out << basis_to_json(basis).dump() << '\n';
      }
    } else if (verb == compare_cmd) {
      const CanonicalSpec spec = to_spec(o.spec);
      const SolutionBasis closed = explicit_basis(spec);
      const SolutionBasis oracle = oracle_basis(h_block(spec));
      const bool same = span_equal(closed.elements, oracle.elements);
      if (fmt == "json") {
        Json doc;
        doc["span_equal"] = same;
        doc["explicit_dimension"] = closed.dimension();
        doc["oracle_dimension"] = oracle.dimension();
        out << doc.dump() << '\n';
      } else {
        out << "span_equal: " << (same ? "true" : "false") << ", dim: " << oracle.dimension();
        if (oracle.dimension() != closed.dimension()) {
          out << " (explicit: " << closed.dimension() << ")";
        }
        out << '\n';
      }
    } else if (verb == structure_cmd) {
      SolutionBasis basis;
      if (!o.input.empty()) {
        basis = oracle_basis(read_matrix_file(o.input));
      } else if (structure_n->count() > 0) {
        basis = explicit_basis(to_spec(o.spec));
      } else {
        throw UsageError("either --input or both --n and --mu are required");
      }
      const StructureConstants sc = structure_constants(basis);
      if (fmt == "text") {
        out << render_structure(sc);
      } else {
        out << structure_to_json(sc).dump() << '\n';
      }
    } else if (verb == verify_cmd) {
      return run_verify(o, out);
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kDomainError;
  }
  return kSuccess;
}

}  // namespace xaax::cli
