#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <stdexcept>

#include "sbcg/cgc.hpp"
#include "sbcg/projector.hpp"

using namespace sbcg;

namespace {
// doubled labels throughout; j1 m1 j2 m2 -> j
SignedSqrtRational su2(int tj1, int tm1, int tj2, int tm2, int tj)
{
  return cgc_su2(SU2Coupling{tj1, tm1, tj2, tm2, tj});
}
}  // namespace

TEST_CASE("label validation")
{
  CHECK_THROWS_AS(validate(SU2Coupling{-2, 0, 2, 0, 2}), std::invalid_argument);
  CHECK_THROWS_AS(validate(SU2Coupling{2, 4, 2, 0, 2}), std::invalid_argument);
  CHECK_THROWS_AS(validate(SU2Coupling{2, 1, 2, 0, 2}), std::invalid_argument);
  CHECK_THROWS_AS(validate(SU2Coupling{2, 0, 2, 0, 8}), std::invalid_argument);
  CHECK_NOTHROW(validate(SU2Coupling{2, 0, 2, 0, 4}));

  CHECK_THROWS_AS(validate(SUNCoupling{1, {1}, {1}, 0}), std::invalid_argument);
  CHECK_THROWS_AS(validate(SUNCoupling{3, {1, 0}, {1, 1, 0}, 0}), std::invalid_argument);
  CHECK_NOTHROW(validate(SUNCoupling{3, {1, 0, 0}, {1, 1, 0}, 0}));
}

TEST_CASE("conjugate labels")
{
  // all three couplings of the 3 x 3bar-like sector share the same nbar
  CHECK(nbar(SUNCoupling{3, {1, 0, 0}, {1, 1, 0}, 0}) == std::vector<int>{1, 1, 0});
  CHECK(nbar(SUNCoupling{3, {0, 1, 0}, {0, 2, 0}, 0}) == std::vector<int>{1, 1, 0});
  CHECK(nbar(SUNCoupling{3, {0, 0, 1}, {0, 1, 1}, 0}) == std::vector<int>{1, 1, 0});
  // negative entry: the conjugate reference does not exist
  CHECK(nbar(SUNCoupling{2, {0, 1}, {1, 0}, 0}) == std::vector<int>{2, -1});
}

TEST_CASE("two-mode closed form on known couplings")
{
  // j1=2, j2=1 coupling into j=3 at m=0
  SignedSqrtRational c1 = su2(4, 0, 2, 0, 6);
  CHECK(c1.sign() == 1);
  CHECK(c1.square() == Rational(3, 5));
  SignedSqrtRational c2 = su2(4, -2, 2, 2, 6);
  CHECK(c2.sign() == 1);
  CHECK(c2.square() == Rational(1, 5));
  SignedSqrtRational c3 = su2(4, 2, 2, -2, 6);
  CHECK(c3.sign() == 1);
  CHECK(c3.square() == Rational(1, 5));

  // the antisymmetric-zero coupling 1 x 1 -> 1 at m1 = m2 = 0
  CHECK(su2(2, 0, 2, 0, 2).is_zero());

  // spin-half square: stretched and singlet components
  CHECK(su2(1, 1, 1, -1, 2).square() == Rational(1, 2));
  CHECK(su2(1, 1, 1, -1, 2).sign() == 1);
  CHECK(su2(1, -1, 1, 1, 2).sign() == 1);
  CHECK(su2(1, 1, 1, -1, 0).sign() == 1);
  CHECK(su2(1, -1, 1, 1, 0).sign() == -1);

  // m outside the target j
  CHECK(su2(2, 2, 2, 2, 2).is_zero());
}

TEST_CASE("N-mode closed form on known couplings")
{
  SignedSqrtRational c1 = cgc_sun(SUNCoupling{3, {1, 0, 0}, {1, 1, 0}, 0});
  CHECK(c1.sign() == 1);
  CHECK(c1.square() == Rational(3, 4));
  SignedSqrtRational c2 = cgc_sun(SUNCoupling{3, {0, 1, 0}, {0, 2, 0}, 0});
  CHECK(c2.sign() == -1);
  CHECK(c2.square() == Rational(1, 6));
  SignedSqrtRational c3 = cgc_sun(SUNCoupling{3, {0, 0, 1}, {0, 1, 1}, 0});
  CHECK(c3.sign() == -1);
  CHECK(c3.square() == Rational(1, 12));

  CHECK_THROWS_AS(cgc_sun(SUNCoupling{2, {0, 1}, {1, 0}, 0}), std::domain_error);
}

TEST_CASE("projector route agrees with the closed forms")
{
  auto p1 = cgc_via_projector(SU2Coupling{4, 0, 2, 0, 6});
  CHECK(p1.sign_definite);
  CHECK(p1.value == su2(4, 0, 2, 0, 6));

  auto p2 = cgc_via_projector(SU2Coupling{1, -1, 1, 1, 0});
  CHECK(p2.sign_definite);
  CHECK(p2.value.sign() == -1);
  CHECK(p2.value.square() == Rational(1, 2));

  auto p3 = cgc_via_projector(SUNCoupling{3, {0, 1, 0}, {0, 2, 0}, 0});
  CHECK(p3.sign_definite);
  CHECK(p3.value == cgc_sun(SUNCoupling{3, {0, 1, 0}, {0, 2, 0}, 0}));

  // no conjugate reference: magnitude-only result, square = the diagonal
  auto p4 = cgc_via_projector(SUNCoupling{2, {0, 1}, {1, 0}, 0});
  CHECK_FALSE(p4.sign_definite);
  CHECK(p4.value.sign() == 1);
  CHECK(p4.value.square() == 1);
}

TEST_CASE("channel series of a decoupled state")
{
  // both spins 1/2, m1 = -m2 = 1/2: equal weight in the two channels
  auto series = cg_series(make_state({1, 0}, {0, 1}), Flavor::Su2);
  REQUIRE(series.size() == 2);
  CHECK(series[0].r == 0);
  CHECK(series[0].coeff.sign() == 1);
  CHECK(series[0].coeff.square() == Rational(1, 2));
  CHECK(series[1].r == 1);
  CHECK(series[1].coeff.sign() == 1);
  CHECK(series[1].coeff.square() == Rational(1, 2));
  CHECK(series[0].sign_definite);
  CHECK(series[1].sign_definite);
  CHECK(series[0].projected + series[1].projected ==
        FockVector::monomial(make_state({1, 0}, {0, 1})));

  // squares always sum to one, channel components are orthogonal
  for (Flavor f : {Flavor::Su2, Flavor::SuN}) {
    auto terms = cg_series(make_state({2, 0}, {1, 1}), f);
    Rational total(0);
    for (const auto& t : terms) total += t.coeff.square();
    CHECK(total == 1);
    for (std::size_t i = 0; i < terms.size(); ++i)
      for (std::size_t j = i + 1; j < terms.size(); ++j)
        CHECK(inner(terms[i].projected, terms[j].projected) == 0);
  }
}

TEST_CASE("stretched-reference closed forms")
{
  // spin-half square at m = 0: both channels weigh 1/2 on the reference
  CHECK(stretched_diagonal_closed(1, 1, 0, 0) == Rational(1, 2));
  CHECK(stretched_diagonal_closed(1, 1, 0, 1) == Rational(1, 2));
  // two spin-1s at m = 0: diagonal split 1/6, 1/2, 1/3 over j = 2, 1, 0
  CHECK(stretched_diagonal_closed(2, 2, 0, 0) == Rational(1, 6));
  CHECK(stretched_diagonal_closed(2, 2, 0, 1) == Rational(1, 2));
  CHECK(stretched_diagonal_closed(2, 2, 0, 2) == Rational(1, 3));

  // the amplitude form is the positive square root of the diagonal
  for (int r = 0; r <= 1; ++r) {
    SignedSqrtRational amp = stretched_amplitude_closed(2, 2, 2, r);
    CHECK(amp.sign() == 1);
    CHECK(amp.square() == stretched_diagonal_closed(2, 2, 2, r));
  }
  // both spin-1 channels weigh 1/2 on the m = 1 reference |1,1;1,0>
  CHECK(stretched_diagonal_closed(2, 2, 2, 0) == Rational(1, 2));
  CHECK(stretched_diagonal_closed(2, 2, 2, 1) == Rational(1, 2));

  // overlap form vs direct projector matrix element; the reference bra
  // tops out the first spin completely, m1' = j1 = 2, m2' = m - j1 = -1,
  // which exists only when m >= j1 - j2
  SU2Coupling c{4, 2, 2, 0, 6};
  OccState dec = make_state({3, 1}, {1, 1});
  OccState sref = make_state({4, 0}, {0, 2});
  CHECK(stretched_overlap_closed(c) ==
        matrix_element_Pr(sref, dec, c.r(), 2, Flavor::Su2));
  // and the diagonal form is the reference's own matrix element
  CHECK(SignedSqrtRational::from_rational(stretched_diagonal_closed(4, 2, 2, 0)) ==
        matrix_element_Pr(sref, sref, 0, 2, Flavor::Su2));
  // below that line the reference is absent and the forms refuse the labels
  CHECK_THROWS_AS(stretched_overlap_closed(SU2Coupling{4, 0, 2, 0, 6}),
                  std::domain_error);
  CHECK_THROWS_AS(stretched_diagonal_closed(4, 2, 0, 0), std::domain_error);
}

TEST_CASE("two-mode labels embed into the N = 2 dot pairing")
{
  SU2Coupling c{4, 0, 2, 0, 6};
  SUNCoupling s = su2_as_sun(c);
  CHECK(s.N == 2);
  CHECK(s.na == std::vector<int>{2, 2});
  CHECK(s.nb == std::vector<int>{1, 1});
  CHECK(s.r == 0);

  CHECK(reduction_phase(SU2Coupling{4, 0, 2, 0, 6}) == 1);    // j1 - m1 = 2
  CHECK(reduction_phase(SU2Coupling{4, -2, 2, 2, 6}) == -1);  // j1 - m1 = 3

  // phased equality on a coupling where the plain forms differ in sign
  SU2Coupling d{1, -1, 1, 1, 2};
  SignedSqrtRational lhs = cgc_sun(su2_as_sun(d));
  SignedSqrtRational rhs = su2(1, -1, 1, 1, 2);
  CHECK(lhs == (reduction_phase(d) < 0 ? -rhs : rhs));
  CHECK(lhs.sign() == -1);
}
