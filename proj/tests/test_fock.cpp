#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <stdexcept>

#include "sbcg/fock.hpp"

using namespace sbcg;

namespace {
OccState st(std::vector<int> na, std::vector<int> nb)
{
  return make_state(std::move(na), std::move(nb));
}
}  // namespace

TEST_CASE("state construction validates shape")
{
  CHECK_THROWS_AS(make_state({1}, {0}), std::invalid_argument);       // fewer than two modes
  CHECK_THROWS_AS(make_state({1, 0}, {0}), std::invalid_argument);    // size mismatch
  CHECK_THROWS_AS(make_state({1, -1}, {0, 0}), std::invalid_argument);
  OccState s = st({2, 1}, {0, 3});
  CHECK(s.modes() == 2);
  CHECK(s.total_a() == 3);
  CHECK(s.total_b() == 3);
}

TEST_CASE("states order lexicographically on (na, nb)")
{
  CHECK(st({0, 1}, {0, 0}) < st({1, 0}, {0, 0}));
  CHECK(st({1, 0}, {0, 1}) < st({1, 0}, {1, 0}));
  CHECK(st({1, 0}, {0, 1}) == st({1, 0}, {0, 1}));
}

TEST_CASE("vectors collect terms and drop exact zeros")
{
  FockVector v(2);
  CHECK(v.empty());
  v.add(st({1, 0}, {0, 0}), Rational(1, 2));
  v.add(st({1, 0}, {0, 0}), Rational(1, 2));
  CHECK(v.coeff(st({1, 0}, {0, 0})) == 1);
  v.add(st({1, 0}, {0, 0}), Rational(-1));
  CHECK(v.empty());

  FockVector w = FockVector::monomial(st({0, 1}, {1, 0}), Rational(3));
  w += FockVector::monomial(st({0, 1}, {1, 0}), Rational(-3));
  CHECK(w == FockVector(2));
  CHECK((Rational(2) * FockVector::monomial(st({0, 1}, {1, 0}))).coeff(st({0, 1}, {1, 0})) == 2);
}

TEST_CASE("ladder operators carry occupation factors")
{
  // a†_1 a_1 |n> = n |n>
  FockVector v = FockVector::monomial(st({2, 0}, {0, 0}));
  FockVector w = apply(create_a(1), apply(annih_a(1), v));
  CHECK(w.coeff(st({2, 0}, {0, 0})) == 2);

  // annihilating an empty mode kills the term
  CHECK(apply(annih_b(2), v).empty());

  // b†_2 on |0,0;0,1> gives 1 quantum more, coefficient 1 in the monomial basis
  FockVector u = apply(create_b(2), FockVector::monomial(st({0, 0}, {0, 1})));
  CHECK(u.coeff(st({0, 0}, {0, 2})) == 1);

  // a_2 |n_2 = 3> = 3 |n_2 = 2>
  FockVector t = apply(annih_a(2), FockVector::monomial(st({0, 3}, {0, 0})));
  CHECK(t.coeff(st({0, 2}, {0, 0})) == 3);

  CHECK_THROWS_AS(create_a(0), std::out_of_range);
  LinearOp high = create_a(3);
  CHECK_THROWS_AS(apply(high, v), std::out_of_range);  // only two modes
}

TEST_CASE("operator combinators act linearly")
{
  FockVector v = FockVector::monomial(st({1, 0}, {0, 0}));
  CHECK(apply(op_zero(), v).empty());
  CHECK(apply(op_identity(), v) == v);
  CHECK(apply(op_scale(Rational(5), op_identity()), v) == Rational(5) * v);

  LinearOp s = op_sum({create_a(1), create_a(2)});
  FockVector w = apply(s, v);
  CHECK(w.coeff(st({2, 0}, {0, 0})) == 1);
  CHECK(w.coeff(st({1, 1}, {0, 0})) == 1);

  // composition acts right to left
  LinearOp c = op_compose(annih_a(1), create_a(1));
  CHECK(apply(c, v) == Rational(2) * v);

  CHECK(apply_pow(create_b(1), 3, v).coeff(st({1, 0}, {3, 0})) == 1);
}

TEST_CASE("gram and inner products")
{
  CHECK(gram(st({2, 1}, {0, 3})) == 2 * 1 * 6);
  CHECK(gram(st({0, 0}, {0, 0})) == 1);

  FockVector v = FockVector::monomial(st({2, 0}, {0, 0}), Rational(1, 2));
  FockVector w = FockVector::monomial(st({2, 0}, {0, 0}), Rational(3));
  w.add(st({0, 2}, {0, 0}), Rational(7));
  CHECK(inner(v, w) == Rational(1, 2) * 3 * 2);  // only the shared monomial counts
  CHECK(inner(v, v) == Rational(1, 2));

  // amplitude rescales by the bra normalization
  CHECK(amplitude(st({2, 0}, {0, 0}), w) == sqrt_of(Rational(36) / 2, 1));
  CHECK(amplitude(st({1, 1}, {0, 0}), w).is_zero());
}

TEST_CASE("weights follow the running-sum convention with the b side negated")
{
  // h^k = n_1 + .. + n_k - k n_{k+1}
  auto w = occ_to_weights(st({1, 0}, {0, 1}));
  CHECK(w == std::vector<int>{1, 1});
  auto u = occ_to_weights(st({2, 1, 0}, {0, 1, 1}));
  CHECK(u == std::vector<int>{1, 3, 1, 1});
}

TEST_CASE("basis enumeration is complete and ordered")
{
  auto basis = basis_states(2, 2, 1);
  CHECK(basis.size() == 3 * 2);
  CHECK(std::is_sorted(basis.begin(), basis.end()));
  CHECK(basis.front() == st({0, 2}, {0, 1}));
  CHECK(basis.back() == st({2, 0}, {1, 0}));

  // N = 3: compositions of 2 into 3 parts, squared families
  CHECK(basis_states(3, 2, 2).size() == 6 * 6);
  CHECK(basis_states(2, 0, 0).size() == 1);
}

TEST_CASE("homogeneous totals detected exactly")
{
  int ta = -1, tb = -1;
  FockVector v = FockVector::monomial(st({1, 0}, {0, 1}));
  CHECK(homogeneous_totals(v, ta, tb));
  CHECK(ta == 1);
  CHECK(tb == 1);

  v.add(st({2, 0}, {0, 1}), Rational(1));
  CHECK(!homogeneous_totals(v, ta, tb));
  CHECK(!homogeneous_totals(FockVector(2), ta, tb));
}

TEST_CASE("rendering is stable and readable")
{
  CHECK(render(st({1, 0}, {0, 2})) == "|1,0;0,2>");
  FockVector v = FockVector::monomial(st({1, 0}, {0, 0}), Rational(-1, 2));
  CHECK(render(v) == "-1/2 * |1,0;0,0>");
  v.add(st({0, 1}, {0, 0}), Rational(2));
  CHECK(render(v) == "2 * |0,1;0,0> - 1/2 * |1,0;0,0>");
  CHECK(render(FockVector(2)) == "0");
}
