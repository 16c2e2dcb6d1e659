#include <doctest.h>

#include "support/reference_tables.hpp"
#include "xaax/canonical_forms.hpp"
#include "xaax/errors.hpp"
#include "xaax/linalg.hpp"
#include "xaax/oracle.hpp"
#include "xaax/solver.hpp"

using namespace xaax;

namespace {

Scalar hard_mu(std::size_t n) { return n % 2 == 0 ? Scalar(1) : Scalar(-1); }

// Extracts the upper-right n x n block of the solution with only the given
// B parameters set.
Matrix b_block_for(std::size_t n, const std::vector<Scalar>& alphas) {
  const CanonicalSpec spec{n, hard_mu(n)};
  std::vector<Scalar> params(dimension(spec));
  for (std::size_t l = 0; l < alphas.size(); ++l) params[n + l] = alphas[l];
  return solution_from_params(spec, params).block(0, n, n, n);
}

}  // namespace

TEST_CASE("toeplitz_commutant_basis examples") {
  const auto one = toeplitz_commutant_basis(1, -1);
  REQUIRE(one.size() == 1);
  CHECK(one[0] == Matrix{{1}});

  const auto two = toeplitz_commutant_basis(2, 1);
  REQUIRE(two.size() == 2);
  CHECK(two[0] == Matrix::identity(2));
  CHECK(two[1] == Matrix{{1, 1}, {0, 1}});

  const Matrix j = jordan_block(4, 1);
  const auto four = toeplitz_commutant_basis(4, 1);
  for (const auto& t : four) CHECK(t * j == j * t);
  CHECK(span_rank(four) == 4);
}

TEST_CASE("b_block_basis examples") {
  const auto b1 = b_block_basis(1);
  REQUIRE(b1.size() == 1);
  CHECK(b1[0] == Matrix{{2}});

  const auto b3 = b_block_basis(3);
  REQUIRE(b3.size() == 2);
  CHECK(b3[0] == Matrix{{0, 0, -2}, {0, 2, 2}, {-2, 0, -1}});
  CHECK(b3[1] == Matrix{{0, 0, 2}, {0, -2, -2}, {2, 0, 0}});
}

TEST_CASE("c_block_basis examples") {
  const auto c1 = c_block_basis(1);
  REQUIRE(c1.size() == 1);
  CHECK(c1[0] == Matrix{{2}});

  const auto c3 = c_block_basis(3);
  REQUIRE(c3.size() == 2);
  CHECK(c3[0] == Matrix{{-1, 0, -2}, {2, 2, 0}, {-2, 0, 0}});
  const Matrix j = jordan_block(3, -1);
  for (const auto& c : c3) CHECK((c + j * c.transpose()).is_zero());
}

TEST_CASE("off-diagonal block bases satisfy their equations for n = 1..10") {
  for (std::size_t n = 1; n <= 10; ++n) {
    CAPTURE(n);
    const Matrix j = jordan_block(n, hard_mu(n));
    const Matrix j_inv_t = inverse(j).transpose();
    const auto bs = b_block_basis(n);
    const auto cs = c_block_basis(n);
    CHECK(bs.size() == (n + 1) / 2);
    CHECK(cs.size() == (n + 1) / 2);
    CHECK(span_rank(bs) == bs.size());
    for (const auto& b : bs) {
      CHECK((b * j + b.transpose()).is_zero());
      CHECK(b * j == j_inv_t * b);
    }
    for (const auto& c : cs) CHECK((c + j * c.transpose()).is_zero());
  }
}

TEST_CASE("b_block_basis spans every solution of B J + B^T = 0") {
  // Kernel of the linear map B -> B J + B^T, computed by brute force.
  for (std::size_t n = 1; n <= 7; ++n) {
    CAPTURE(n);
    const Matrix j = jordan_block(n, hard_mu(n));
    std::vector<Matrix> images;
    for (std::size_t c = 0; c < n; ++c) {
      for (std::size_t r = 0; r < n; ++r) {
        const Matrix e = Matrix::generate(n, n, [&](std::size_t i, std::size_t k) {
          return i == r && k == c ? Scalar(1) : Scalar();
        });
        images.push_back(e * j + e.transpose());
      }
    }
    std::vector<Matrix> solutions;
    for (const auto& v : null_space(stack_vectorized(images))) solutions.push_back(devec(v, n, n));
    CHECK(span_equal(solutions, b_block_basis(n)));
  }
}

TEST_CASE("explicit_basis examples") {
  const SolutionBasis b = explicit_basis({1, -1});
  REQUIRE(b.dimension() == 3);
  CHECK(b.elements[0] == Matrix{{-1, 0}, {0, 1}});
  CHECK(b.elements[1] == Matrix{{0, 2}, {0, 0}});
  CHECK(b.elements[2] == Matrix{{0, 0}, {2, 0}});
  CHECK(b.roles[0].label() == "DIAGONAL(0)");
  CHECK(b.roles[1].label() == "B_PARAM(0)");
  CHECK(b.roles[2].label() == "C_PARAM(0)");
  const Matrix h = h_block({1, -1});
  for (const auto& x : b.elements) CHECK(equation_residual(x, h).is_zero());

  const SolutionBasis easy = explicit_basis({2, 3});
  REQUIRE(easy.dimension() == 2);
  for (const auto& x : easy.elements) {
    CHECK(x.block(0, 2, 2, 2).is_zero());
    CHECK(x.block(2, 0, 2, 2).is_zero());
    CHECK(x.block(0, 0, 2, 2) == -x.block(2, 2, 2, 2).transpose());
  }

  CHECK_THROWS_AS(explicit_basis({1, 1}), InvalidCanonicalParameter);
  CHECK_THROWS_AS(explicit_basis({2, 0}), InvalidCanonicalParameter);
}

TEST_CASE("basis ordering is DIAGONAL, B_PARAM, C_PARAM by ascending index") {
  const SolutionBasis b = explicit_basis({5, -1});
  std::vector<std::string> labels;
  for (const auto& r : b.roles) labels.push_back(r.label());
  CHECK(labels == std::vector<std::string>{"DIAGONAL(0)", "DIAGONAL(1)", "DIAGONAL(2)",
                                           "DIAGONAL(3)", "DIAGONAL(4)", "B_PARAM(0)",
                                           "B_PARAM(1)", "B_PARAM(2)", "C_PARAM(0)",
                                           "C_PARAM(1)", "C_PARAM(2)"});
  CHECK(b.spec == CanonicalSpec{5, -1});
}

TEST_CASE("dimension examples") {
  CHECK(dimension({3, -1}) == 7);
  CHECK(dimension({4, 1}) == 8);
  CHECK(dimension({5, 2}) == 5);
  // Frozen from the oracle: kernel of the 100 x 100 system for H_10(2).
  CHECK(oracle_basis(h_block({5, 2})).dimension() == 5);
  CHECK_THROWS_AS(dimension({2, -1}), InvalidCanonicalParameter);
}

TEST_CASE("solution_from_params examples") {
  const CanonicalSpec spec{1, -1};
  const std::vector<Scalar> zeros(3);
  CHECK(solution_from_params(spec, zeros).is_zero());
  const std::vector<Scalar> first{1, 0, 0};
  CHECK(solution_from_params(spec, first) == Matrix{{-1, 0}, {0, 1}});
  const std::vector<Scalar> too_few{1, 0};
  CHECK_THROWS_AS(solution_from_params(spec, too_few), ParamCountMismatch);
}

TEST_CASE("B parameters reproduce the reference B for n = 3, 4, 5") {
  using xaax::testing::reference_b3_alpha;
  using xaax::testing::reference_b3_beta;
  const Scalar one(1);
  const Scalar zero;
  CHECK(b_block_for(3, {one, zero}) == reference_b3_alpha(one, zero));
  CHECK(b_block_for(3, {zero, one}) == reference_b3_alpha(zero, one));
  CHECK(b_block_for(3, {one, zero}) == Matrix{{0, 0, -2}, {0, 2, 2}, {-2, 0, -1}});

  // Generic rational parameters, both parametrizations.
  const Scalar a0(3, 2);
  const Scalar a1(-7, 5);
  const Matrix b3 = b_block_for(3, {a0, a1});
  CHECK(b3 == reference_b3_alpha(a0, a1));
  CHECK(b3 == reference_b3_beta(a0, Scalar(2) * (a0 - a1)));

  CHECK(b_block_for(4, {one, zero}) == xaax::testing::reference_b4(one, zero));
  CHECK(b_block_for(4, {zero, one}) == xaax::testing::reference_b4(zero, one));
  CHECK(b_block_for(4, {a0, a1}) == xaax::testing::reference_b4(a0, a1));

  const Scalar a2(4, 3);
  CHECK(b_block_for(5, {one, zero, zero}) == xaax::testing::reference_b5(one, zero, zero));
  CHECK(b_block_for(5, {zero, one, zero}) == xaax::testing::reference_b5(zero, one, zero));
  CHECK(b_block_for(5, {zero, zero, one}) == xaax::testing::reference_b5(zero, zero, one));
  CHECK(b_block_for(5, {a0, a1, a2}) == xaax::testing::reference_b5(a0, a1, a2));
}

TEST_CASE("closed-form basis satisfies every equation for n = 1..10") {
  const Scalar probes[] = {Scalar(2), Scalar(1, 2), Scalar::i()};
  for (std::size_t n = 1; n <= 10; ++n) {
    std::vector<CanonicalSpec> specs{{n, hard_mu(n)}};
    for (const auto& mu : probes) specs.push_back({n, mu});
    for (const auto& spec : specs) {
      CAPTURE(spec.n);
      CAPTURE(spec.mu.to_string());
      const SolutionBasis basis = explicit_basis(spec);
      const Matrix h = h_block(spec);
      const Matrix cs = cosquare(spec);
      CHECK(basis.dimension() == dimension(spec));
      CHECK(span_rank(basis.elements) == basis.dimension());
      for (const auto& x : basis.elements) {
        CHECK(equation_residual(x, h).is_zero());
        CHECK(x * cs == cs * x);
        CHECK(block_residuals(spec, x).all_zero());
      }
    }
  }
}

TEST_CASE("dimension is n + 2 ceil(n/2) in the hard case for both parities") {
  for (std::size_t n = 1; n <= 12; ++n) {
    const std::size_t expected = n + 2 * ((n + 1) / 2);
    CHECK(dimension({n, hard_mu(n)}) == expected);
    CHECK(explicit_basis({n, hard_mu(n)}).dimension() == expected);
    CHECK(dimension({n, 2}) == n);
  }
}

TEST_CASE("block residuals of an arbitrary combination vanish") {
  for (std::size_t n = 1; n <= 6; ++n) {
    const CanonicalSpec spec{n, hard_mu(n)};
    std::vector<Scalar> params;
    for (std::size_t k = 0; k < dimension(spec); ++k) {
      params.emplace_back(static_cast<long>(2 * k) - 5, static_cast<long>(k % 4 + 1));
    }
    const Matrix x = solution_from_params(spec, params);
    const BlockResiduals r = block_residuals(spec, x);
    CHECK(r.b.is_zero());
    CHECK(r.ad.is_zero());
    CHECK(r.ad_jordan.is_zero());
    CHECK(r.c.is_zero());
    CHECK(equation_residual(x, h_block(spec)).is_zero());
  }
  CHECK_THROWS_AS(block_residuals({2, 1}, Matrix::identity(3)), ShapeMismatch);
}

TEST_CASE("block residuals detect a non-solution") {
  const CanonicalSpec spec{2, 1};
  const BlockResiduals r = block_residuals(spec, Matrix::identity(4));
  CHECK_FALSE(r.all_zero());
  CHECK_FALSE(r.ad.is_zero());
}
