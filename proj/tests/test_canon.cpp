#include <doctest.h>

#include "novikov/algebra.hpp"
#include "novikov/canon.hpp"
#include "novikov/classify.hpp"
#include "novikov/error.hpp"
#include "novikov/forms.hpp"
#include "novikov/rng.hpp"
#include "oracles.hpp"

using namespace novikov;

namespace {

SymForm form_for(const Algebra& a) {
  const auto b = find_nondegenerate(invariant_form_space(a), 0);
  REQUIRE(b);
  return normalize_orientation(*b);
}

K2Params small_k2() {
  K2Params p = K2Params::zero(5);
  p.lambda[0] = 1;
  p.gamma[2] = 1;
  return p;
}

}  // namespace

TEST_CASE("maximal-rank element examples") {
  const auto zero = max_rank_element(Algebra(3), 1);
  CHECK(zero.k == 0);
  CHECK(zero.certified);
  CHECK(right_op(Algebra(3), zero.x0).is_zero());

  for (int v = 1; v <= 3; ++v) {
    const Algebra a = make_family(v, 4);
    const auto m = max_rank_element(a, 2);
    CHECK(m.k == 1);
    CHECK(m.certified);
    CHECK(rank(right_op(a, m.x0)) == 1);
  }

  const Algebra k2 = make_k2(small_k2());
  const auto m2 = max_rank_element(k2, 3);
  CHECK(m2.k == 2);
  CHECK(m2.certified);

  CHECK_THROWS_AS(max_rank_element(AlgebraBuilder(1).add(0, 0, 0, 1).build(), 0), PreconditionError);
}

TEST_CASE("maximal rank agrees with the rank of random specializations") {
  Rng rng(4);
  for (int v = 1; v <= 3; ++v) {
    const Algebra a = make_family(v, 5);
    const auto m = max_rank_element(a, 9);
    for (int t = 0; t < 20; ++t) CHECK(rank(right_op(a, oracle::random_vec(rng, 5))) <= m.k);
  }
}

TEST_CASE("adapted basis for the smallest commutative example") {
  const Algebra a = make_family(1, 2);
  const SymForm b(Mat::from_rows({{0, 1}, {1, 0}}));
  const CanonReport rep = canonical_basis(a, b, unit_vector(2, 0));
  CHECK(rep.k == 1);
  CHECK(rep.basis == Mat::identity(2));
  CHECK(rep.pair_weights == std::vector<Rational>{1});
  CHECK(rep.pair_signs == std::vector<int>{1});
  CHECK(rep.complement_diag.empty());
  CHECK(rep.expected_metric() == b.matrix());
  CHECK(verify_structure(a, b, rep).all());
}

TEST_CASE("adapted basis for the zero algebra diagonalizes the form") {
  const Algebra a(3);
  const SymForm b(Mat::from_rows({{1, 1, 0}, {1, 0, 0}, {0, 0, 2}}));
  const CanonReport rep = canonical_basis(a, b, Vec(3));
  CHECK(rep.k == 0);
  REQUIRE(rep.complement_diag.size() == 3);
  CHECK(sgn(rep.complement_diag[0]) < 0);
  CHECK(transport(b, rep.basis).matrix() == rep.expected_metric());
  CHECK(verify_structure(a, b, rep).all());
}

TEST_CASE("adapted basis preconditions") {
  const Algebra a = make_family(1, 2);
  const SymForm good(Mat::from_rows({{0, 1}, {1, 0}}));
  CHECK_THROWS_AS(canonical_basis(a, SymForm(Mat::diagonal(Vec{1, 0})), unit_vector(2, 0)), DegenerateFormError);
  CHECK_THROWS_AS(canonical_basis(a, SymForm(Mat::identity(2)), unit_vector(2, 0)), PreconditionError);
  CHECK_THROWS_AS(canonical_basis(a, good, unit_vector(3, 0)), DimensionMismatch);
  const Algebra z(2);
  CHECK_THROWS_AS(canonical_basis(z, SymForm(Mat::diagonal(Vec{-1, -1})), Vec(2)), PreconditionError);
}

TEST_CASE("corrupted reports fail the structure claims") {
  const Algebra a = make_family(3, 4);
  const SymForm b = form_for(a);
  const auto m = max_rank_element(a, 0);
  const CanonReport rep = canonical_basis(a, b, m.x0);
  REQUIRE(verify_structure(a, b, rep).all());

  CanonReport swapped_pair = rep;
  swapped_pair.basis.swap_columns(0, 1);
  CHECK_FALSE(verify_structure(a, b, swapped_pair).all());

  CanonReport swapped_tail = rep;
  swapped_tail.basis.swap_columns(0, 2);
  CHECK_FALSE(verify_structure(a, b, swapped_tail).all());

  CanonReport reweighted = rep;
  reweighted.pair_weights[0] *= 2;
  CHECK_FALSE(verify_structure(a, b, reweighted).metric_form);

  CanonReport singular = rep;
  singular.basis.set_column(1, singular.basis.column(0));
  CHECK_THROWS_AS(verify_structure(a, b, singular), PreconditionError);
}

TEST_CASE("structure claims hold on the families and on scrambles") {
  for (int v = 0; v <= 3; ++v) {
    for (std::size_t n = std::max<std::size_t>(family_min_dim(v), 2); n <= 6; ++n) {
      const Algebra a = make_family(v, n);
      const SymForm b = form_for(a);
      for (std::uint64_t seed = 0; seed < 3; ++seed) {
        const Scrambled s = scramble(a, b, seed);
        const TheoremReport r = theorem_report(s.algebra, s.form, seed);
        CHECK(r.max_rank.k == (v == 0 ? 0u : 1u));
        CHECK(r.claims.all());
        CHECK(r.holds());
        // one k x k coefficient block per basis vector
        for (const Mat& d : r.canon.d_forms) CHECK(d.rows() == r.max_rank.k);
      }
    }
  }
}

TEST_CASE("theorem on derived dimension two") {
  const Algebra a = make_k2(small_k2());
  REQUIRE(k2_condition(a));
  const SymForm b = form_for(a);
  const TheoremReport r = theorem_report(a, b, 5);
  CHECK(r.max_rank.k == 2);
  CHECK(r.derived == 2);
  CHECK(r.k_within_p);
  CHECK(r.holds());
  CHECK(theorem_check(a, b, 5));

  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const Algebra c = make_k2(sample_k2_params(6, seed));
    const auto f = find_nondegenerate(invariant_form_space(c), seed);
    REQUIRE(f);
    const Scrambled s = scramble(c, *f, seed);
    CHECK(theorem_check(s.algebra, s.form, seed));
  }
}

TEST_CASE("theorem preconditions") {
  const Algebra f1 = make_family(1, 2);
  CHECK_THROWS_AS(theorem_check(f1, SymForm(Mat::diagonal(Vec{1, 0})), 0), DegenerateFormError);
  CHECK_THROWS_AS(theorem_check(f1, SymForm(Mat::identity(2)), 0), PreconditionError);
  const Algebra line = AlgebraBuilder(1).add(0, 0, 0, 1).build();
  CHECK_THROWS_AS(theorem_check(line, SymForm(Mat::identity(1)), 0), PreconditionError);
}

TEST_CASE("orientation is normalized inside the pipeline") {
  const Algebra a = make_family(1, 3);
  const SymForm b(Mat::from_rows({{0, 1, 0}, {1, 0, 0}, {0, 0, -1}}));
  REQUIRE(b.p() == 2);
  const TheoremReport r = theorem_report(a, b, 0);
  CHECK(r.form.p() == 1);
  CHECK(r.holds());
}
