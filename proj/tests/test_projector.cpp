#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <stdexcept>

#include "sbcg/projector.hpp"

using namespace sbcg;

namespace {
OccState st(std::vector<int> na, std::vector<int> nb)
{
  return make_state(std::move(na), std::move(nb));
}
FockVector mono(const OccState& s) { return FockVector::monomial(s); }
}  // namespace

TEST_CASE("series coefficients")
{
  CHECK(l_q(0, 2, 2) == 1);
  CHECK(l_q(1, 2, 2) == Rational(-1, 4));
  CHECK(l_q(2, 2, 2) == Rational(1, 24));
  CHECK(L_q(1, 1, 1, 3) == Rational(-1, 3));
  // the N-mode series at N = 2 is the two-mode series
  for (int q = 0; q <= 3; ++q)
    CHECK(L_q(q, 3, 3, 2) == l_q(q, 3, 3));
  CHECK(l_q(3, 1, 2) == Rational(-1, 36));
  CHECK_THROWS_AS(l_q(-1, 2, 2), std::domain_error);
  CHECK_THROWS_AS(l_q(4, 1, 2), std::domain_error);
  CHECK_THROWS_AS(L_q(0, 1, 1, 1), std::domain_error);
}

TEST_CASE("channel normalizations")
{
  CHECK(N_r(1, 2, 2, 2) == Rational(1, 4));
  CHECK(N_r(1, 1, 2, 3) == Rational(1, 4));
  CHECK(N_r(0, 2, 2, 2) == 1);
  CHECK_THROWS_AS(N_r(2, 1, 3, 2), std::domain_error);
  CHECK_THROWS_AS(N_r(-1, 1, 1, 2), std::domain_error);
}

TEST_CASE("channel split of the two-spin m = 0 sector")
{
  // Both j = 1/2: the pair-free channel keeps the symmetric combination,
  // the one-pair channel keeps the antisymmetric invariant direction.
  FockVector v = mono(st({1, 0}, {0, 1}));
  FockVector w = mono(st({0, 1}, {1, 0}));

  FockVector half_sum = Rational(1, 2) * (v + w);
  FockVector half_diff = Rational(1, 2) * (v - w);
  CHECK(apply_P0(v, 2, Flavor::Su2) == half_sum);
  CHECK(apply_Pr(v, 1, 2, Flavor::Su2) == half_diff);
  CHECK(apply_Pr(v, 0, 2, Flavor::Su2) + apply_Pr(v, 1, 2, Flavor::Su2) == v);

  // the one-pair component is proportional to k+|0>
  FockVector pair = apply(k_plus(Flavor::Su2, 2),
                          mono(st({0, 0}, {0, 0})));
  CHECK(Rational(2) * half_diff == pair);
}

TEST_CASE("projector family on a basis sweep")
{
  for (Flavor f : {Flavor::Su2, Flavor::SuN}) {
    for (const OccState& s : basis_states(2, 2, 2)) {
      FockVector v = mono(s);
      FockVector total(2);
      for (int r = 0; r <= 2; ++r) {
        FockVector pr = apply_Pr(v, r, 2, f);
        CHECK(apply_Pr(pr, r, 2, f) == pr);
        for (int q = 0; q <= 2; ++q)
          if (q != r) CHECK(apply_Pr(pr, q, 2, f).empty());
        total += pr;
      }
      CHECK(total == v);
      // pair-free channel really is pair-free
      CHECK(apply(k_minus(f, 2), apply_Pr(v, 0, 2, f)).empty());
    }
  }
}

TEST_CASE("matrix elements on a three-state N = 3 sector")
{
  OccState s1 = st({1, 0, 0}, {1, 1, 0});
  OccState s2 = st({0, 1, 0}, {0, 2, 0});
  OccState s3 = st({0, 0, 1}, {0, 1, 1});

  SignedSqrtRational d0 = matrix_element_Pr(s1, s1, 0, 3, Flavor::SuN);
  CHECK(d0.sign() == 1);
  CHECK(d0.square() == Rational(9, 16));  // value 3/4

  SignedSqrtRational d1 = matrix_element_Pr(s1, s1, 1, 3, Flavor::SuN);
  CHECK(d1.sign() == 1);
  CHECK(d1.square() == Rational(1, 16));  // channels split 3/4 + 1/4

  SignedSqrtRational o2 = matrix_element_Pr(s2, s1, 0, 3, Flavor::SuN);
  CHECK(o2.sign() == -1);
  CHECK(o2.square() == Rational(1, 8));  // -sqrt(2)/4

  SignedSqrtRational o3 = matrix_element_Pr(s3, s1, 0, 3, Flavor::SuN);
  CHECK(o3.sign() == -1);
  CHECK(o3.square() == Rational(1, 16));  // -1/4
}

TEST_CASE("matrix elements vanish across sectors")
{
  CHECK(matrix_element_Pr(st({1, 0}, {0, 1}), st({0, 1}, {0, 1}), 0, 2,
                          Flavor::Su2)
            .is_zero());
  CHECK(matrix_element_Pr(st({2, 0}, {0, 0}), st({1, 0}, {1, 0}), 0, 2,
                          Flavor::SuN)
            .is_zero());
}

TEST_CASE("input validation")
{
  FockVector v = mono(st({1, 0}, {1, 0}));
  CHECK_THROWS_AS(apply_Pr(v, 2, 2, Flavor::Su2), std::domain_error);
  CHECK_THROWS_AS(apply_Pr(v, -1, 2, Flavor::Su2), std::domain_error);
  FockVector mixed = mono(st({1, 0}, {1, 0})) + mono(st({2, 0}, {0, 0}));
  CHECK_THROWS_AS(apply_P0(mixed, 2, Flavor::Su2), std::invalid_argument);
  CHECK_THROWS_AS(apply_P0(v, 3, Flavor::Su2), std::invalid_argument);
}
