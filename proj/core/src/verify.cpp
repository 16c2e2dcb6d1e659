#include "xaax/verify.hpp"

#include <functional>
#include <future>
#include <utility>

#include "xaax/canonical_forms.hpp"
#include "xaax/errors.hpp"
#include "xaax/lie_tools.hpp"
#include "xaax/linalg.hpp"
#include "xaax/oracle.hpp"
#include "xaax/pascal_delta.hpp"
#include "xaax/solver.hpp"

namespace xaax {

namespace {

class Recorder {
public:
  explicit Recorder(std::string name) { result_.name = std::move(name); }

  void check(bool ok, const std::function<std::string()>& describe) {
    ++result_.checks;
    if (!ok && result_.passed) {
      result_.passed = false;
      result_.failure = describe();
    }
  }

  SuiteResult take() { return std::move(result_); }

private:
  SuiteResult result_;
};

std::string at_n(std::size_t n) { return "n = " + std::to_string(n); }

std::string at_spec(const CanonicalSpec& s) {
  return "n = " + std::to_string(s.n) + ", mu = " + s.mu.to_string();
}

// Admissible specs for n = 1..n_max: the hard case plus each easy-case probe.
std::vector<CanonicalSpec> sample_specs(std::size_t n_max) {
  const Scalar probes[] = {Scalar(2), Scalar(1, 2), Scalar(3), Scalar::i()};
  std::vector<CanonicalSpec> specs;
  for (std::size_t n = 1; n <= n_max; ++n) {
    specs.push_back({n, n % 2 == 0 ? Scalar(1) : Scalar(-1)});
    for (const auto& mu : probes) specs.push_back({n, mu});
  }
  return specs;
}

Scalar hard_mu(std::size_t n) { return n % 2 == 0 ? Scalar(1) : Scalar(-1); }

SuiteResult delta_inverse_suite(const VerifyOptions& o) {
  Recorder rec("pascal_delta.reflection_inverse");
  for (std::size_t n = 1; n <= o.n_max; ++n) {
    const Matrix d = delta(n).matrix;
    const Matrix inv = delta_inverse(n);
    const Matrix id = Matrix::identity(n);
    rec.check(inv * d == id, [&] { return at_n(n) + ": reflection * Delta != I"; });
    rec.check(d * inv == id, [&] { return at_n(n) + ": Delta * reflection != I"; });
    rec.check(inv == inverse(d), [&] { return at_n(n) + ": reflection differs from inverse"; });
  }
  return rec.take();
}

SuiteResult similarity_suite(const VerifyOptions& o) {
  Recorder rec("pascal_delta.similarity");
  for (std::size_t n = 1; n <= o.n_max; ++n) {
    rec.check(check_similarity(n), [&] { return at_n(n); });
    const Matrix j = jordan_block(n, hard_mu(n));
    const Matrix d = delta(n).matrix;
    rec.check(j.transpose() * d * j == d, [&] { return at_n(n) + ": J^T Delta J != Delta"; });
  }
  return rec.take();
}

SuiteResult transpose_identity_suite(const VerifyOptions& o) {
  Recorder rec("pascal_delta.transpose_identity");
  for (std::size_t n = 1; n <= o.n_max; ++n) {
    for (std::size_t l = 0; l <= n; ++l) {
      rec.check(check_transpose_identity(n, l),
                [&] { return at_n(n) + ", l = " + std::to_string(l); });
    }
  }
  return rec.take();
}

SuiteResult delta_shape_suite(const VerifyOptions& o) {
  Recorder rec("pascal_delta.entry_pattern");
  for (std::size_t n = 1; n <= o.n_max; ++n) {
    const Matrix d = delta(n).matrix;
    const Scalar mu = hard_mu(n);
    for (std::size_t r = 0; r < n; ++r) {
      for (std::size_t c = 0; c < n; ++c) {
        const std::size_t i = r + 1;
        const std::size_t j = c + 1;
        if (i + j <= n) {
          rec.check(d(r, c).is_zero(), [&] { return at_n(n) + ": nonzero above antidiagonal"; });
        } else if (i + j == n + 1 && n > 1) {
          const Scalar expected =
              mu.pow(static_cast<long>(i)) * (-mu).pow(static_cast<long>(n - i));
          rec.check(d(r, c) == expected && (expected == Scalar(1) || expected == Scalar(-1)),
                    [&] { return at_n(n) + ": antidiagonal entry is not +-1"; });
        }
        if (n == 1) continue;  // Delta_1 is fixed to [1], not the closed form
        rec.check(d(r, c) == delta_entry(n, static_cast<long>(i), static_cast<long>(j)),
                  [&] { return at_n(n) + ": entry differs from the closed form"; });
      }
    }
  }
  return rec.take();
}

SuiteResult recurrence_suite(const VerifyOptions& o) {
  Recorder rec("pascal_delta.recurrence_residual");
  for (std::size_t n = 1; n <= o.n_max; ++n) {
    rec.check(recurrence_residual(n).is_zero(), [&] { return at_n(n); });
  }
  return rec.take();
}

SuiteResult canonical_suite(const VerifyOptions& o) {
  Recorder rec("canonical_forms.cosquare");
  for (const auto& spec : sample_specs(o.n_max)) {
    const Matrix h = h_block(spec);
    rec.check(!determinant(h).is_zero(), [&] { return at_spec(spec) + ": H is singular"; });
    rec.check(cosquare(spec) == h * inverse(h.transpose()),
              [&] { return at_spec(spec) + ": cosquare != H H^{-T}"; });
    const Matrix j = jordan_block(spec.n, spec.mu);
    const Matrix nil = jordan_block(spec.n, Scalar());
    rec.check(j - spec.mu * Matrix::identity(spec.n) == nil,
              [&] { return at_spec(spec) + ": J - mu I != J(0)"; });
    rec.check(nil.pow(static_cast<unsigned>(spec.n)).is_zero(),
              [&] { return at_spec(spec) + ": J(0)^n != 0"; });
  }
  return rec.take();
}

SuiteResult solver_residual_suite(const VerifyOptions& o) {
  Recorder rec("solver.residuals");
  for (const auto& spec : sample_specs(o.n_max)) {
    const SolutionBasis basis = explicit_basis(spec);
    const Matrix h = h_block(spec);
    const Matrix cs = cosquare(spec);
    rec.check(basis.dimension() == dimension(spec),
              [&] { return at_spec(spec) + ": basis size != dimension formula"; });
    const std::size_t formula = spec.is_hard_case() ? spec.n + 2 * ((spec.n + 1) / 2) : spec.n;
    rec.check(dimension(spec) == formula, [&] { return at_spec(spec) + ": dimension formula"; });
    rec.check(span_rank(basis.elements) == basis.dimension(),
              [&] { return at_spec(spec) + ": basis is dependent"; });
    for (std::size_t e = 0; e < basis.elements.size(); ++e) {
      const Matrix& x = basis.elements[e];
      const std::string where = at_spec(spec) + ", element " + basis.roles[e].label();
      rec.check(equation_residual(x, h).is_zero(), [&] { return where + ": X H + H X^T != 0"; });
      rec.check(x * cs == cs * x, [&] { return where + ": does not commute with cosquare"; });
      rec.check(block_residuals(spec, x).all_zero(),
                [&] { return where + ": block equations fail"; });
    }
    // A generic combination must satisfy every block equation as well.
    std::vector<Scalar> params;
    for (std::size_t k = 0; k < basis.dimension(); ++k) {
      params.emplace_back(static_cast<long>(k % 2 == 0 ? k + 1 : -(static_cast<long>(k) + 2)),
                          static_cast<long>(k % 3 + 1));
    }
    const Matrix x = solution_from_params(spec, params);
    rec.check(block_residuals(spec, x).all_zero(),
              [&] { return at_spec(spec) + ": combined solution fails block equations"; });
  }
  return rec.take();
}

SuiteResult hard_block_suite(const VerifyOptions& o) {
  Recorder rec("solver.off_diagonal_blocks");
  for (std::size_t n = 1; n <= o.n_max; ++n) {
    const Matrix j = jordan_block(n, hard_mu(n));
    const Matrix j_inv_t = inverse(j).transpose();
    for (const auto& b : b_block_basis(n)) {
      rec.check((b * j + b.transpose()).is_zero(), [&] { return at_n(n) + ": B J + B^T != 0"; });
      rec.check(b * j == j_inv_t * b, [&] { return at_n(n) + ": B J != J^{-T} B"; });
    }
    for (const auto& c : c_block_basis(n)) {
      rec.check((c + j * c.transpose()).is_zero(), [&] { return at_n(n) + ": C + J C^T != 0"; });
    }
    rec.check(b_block_basis(n).size() == (n + 1) / 2,
              [&] { return at_n(n) + ": B parameter count != ceil(n/2)"; });
  }
  return rec.take();
}

SuiteResult oracle_hard_suite(const VerifyOptions& o) {
  Recorder rec("oracle.hard_case");
  for (std::size_t n = 1; n <= o.n_max; ++n) {
    const CanonicalSpec spec{n, hard_mu(n)};
    const SolutionBasis oracle = oracle_basis(h_block(spec));
    const SolutionBasis closed = explicit_basis(spec);
    const std::size_t expected = n + 2 * ((n + 1) / 2);
    rec.check(oracle.dimension() == expected, [&] {
      return at_spec(spec) + ": oracle dimension " + std::to_string(oracle.dimension());
    });
    rec.check(span_equal(oracle.elements, closed.elements),
              [&] { return at_spec(spec) + ": spans differ"; });
  }
  return rec.take();
}

SuiteResult oracle_easy_suite(const VerifyOptions& o) {
  Recorder rec("oracle.easy_case");
  for (const auto& spec : sample_specs(o.n_max)) {
    if (spec.is_hard_case()) continue;
    const std::size_t n = spec.n;
    const SolutionBasis oracle = oracle_basis(h_block(spec));
    const SolutionBasis closed = explicit_basis(spec);
    rec.check(oracle.dimension() == n, [&] { return at_spec(spec) + ": oracle dimension"; });
    for (const auto& x : oracle.elements) {
      rec.check(x.block(0, n, n, n).is_zero() && x.block(n, 0, n, n).is_zero(),
                [&] { return at_spec(spec) + ": oracle element has nonzero B or C"; });
    }
    rec.check(span_equal(oracle.elements, closed.elements),
              [&] { return at_spec(spec) + ": spans differ"; });
  }
  return rec.take();
}

SuiteResult lie_suite(const VerifyOptions& o) {
  Recorder rec("lie_tools.structure");
  for (std::size_t n = 1; n <= o.n_max; ++n) {
    const CanonicalSpec spec{n, hard_mu(n)};
    const SolutionBasis basis = explicit_basis(spec);
    const bool closed = closure_check(basis);
    rec.check(closed, [&] { return at_spec(spec) + ": not closed under bracket"; });
    if (!closed) continue;
    const StructureConstants sc = structure_constants(basis);
    rec.check(sc.is_antisymmetric(), [&] { return at_spec(spec) + ": not antisymmetric"; });
    rec.check(sc.satisfies_jacobi(), [&] { return at_spec(spec) + ": Jacobi fails"; });
    for (std::size_t i = 0; i < sc.dim(); ++i) {
      for (std::size_t j = 0; j < sc.dim(); ++j) {
        rec.check(sc.expand(i, j, basis.elements) ==
                      bracket(basis.elements[i], basis.elements[j]),
                  [&] { return at_spec(spec) + ": re-expansion mismatch"; });
      }
    }
  }
  return rec.take();
}

using SuiteFn = SuiteResult (*)(const VerifyOptions&);

const std::vector<std::pair<std::string, SuiteFn>>& registry() {
  static const std::vector<std::pair<std::string, SuiteFn>> suites = {
      {"pascal_delta.reflection_inverse", delta_inverse_suite},
      {"pascal_delta.similarity", similarity_suite},
      {"pascal_delta.transpose_identity", transpose_identity_suite},
      {"pascal_delta.entry_pattern", delta_shape_suite},
      {"pascal_delta.recurrence_residual", recurrence_suite},
      {"canonical_forms.cosquare", canonical_suite},
      {"solver.residuals", solver_residual_suite},
      {"solver.off_diagonal_blocks", hard_block_suite},
      {"oracle.hard_case", oracle_hard_suite},
      {"oracle.easy_case", oracle_easy_suite},
      {"lie_tools.structure", lie_suite},
  };
  return suites;
}

}  // namespace

std::vector<std::string> verification_suites() {
  std::vector<std::string> names;
  for (const auto& [name, fn] : registry()) names.push_back(name);
  return names;
}

SuiteResult run_suite(const std::string& name, const VerifyOptions& options) {
  for (const auto& [suite, fn] : registry()) {
    if (suite == name) return fn(options);
  }
  throw OutOfRange("unknown verification suite '" + name + "'");
}

std::vector<SuiteResult> run_verification(const VerifyOptions& options) {
  std::vector<SuiteResult> results;
  if (!options.parallel) {
    for (const auto& [name, fn] : registry()) results.push_back(fn(options));
    return results;
  }
  std::vector<std::future<SuiteResult>> pending;
  for (const auto& [name, fn] : registry()) {
    pending.push_back(std::async(std::launch::async, fn, std::cref(options)));
  }
  for (auto& f : pending) results.push_back(f.get());
  return results;
}

}  // namespace xaax
