#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <stdexcept>

#include "sbcg/invariants.hpp"

using namespace sbcg;

namespace {
OccState st(std::vector<int> na, std::vector<int> nb)
{
  return make_state(std::move(na), std::move(nb));
}
const OccState vac2 = make_state({0, 0}, {0, 0});
const OccState vac3 = make_state({0, 0, 0}, {0, 0, 0});
}  // namespace

TEST_CASE("flavor validation")
{
  CHECK_NOTHROW(validate_flavor(Flavor::Su2, 2));
  CHECK_THROWS_AS(validate_flavor(Flavor::Su2, 3), std::invalid_argument);
  CHECK_NOTHROW(validate_flavor(Flavor::SuN, 5));
  CHECK_THROWS_AS(invariant_op({InvariantOpName::KappaPlus, Flavor::SuN}, 3),
                  std::invalid_argument);
}

TEST_CASE("antisymmetric pair raising on the vacuum")
{
  FockVector w = apply(k_plus(Flavor::Su2, 2), FockVector::monomial(vac2));
  CHECK(w.size() == 2);
  CHECK(w.coeff(st({1, 0}, {0, 1})) == 1);
  CHECK(w.coeff(st({0, 1}, {1, 0})) == -1);

  // lowering recovers the pair count
  CHECK(apply(k_minus(Flavor::Su2, 2), w).coeff(vac2) == 2);
}

TEST_CASE("dot pair raising on the vacuum")
{
  FockVector w = apply(k_plus(Flavor::SuN, 3), FockVector::monomial(vac3));
  CHECK(w.size() == 3);
  CHECK(w.coeff(st({1, 0, 0}, {1, 0, 0})) == 1);
  CHECK(w.coeff(st({0, 1, 0}, {0, 1, 0})) == 1);
  CHECK(w.coeff(st({0, 0, 1}, {0, 0, 1})) == 1);
  CHECK(apply(k_minus(Flavor::SuN, 3), w).coeff(vac3) == 3);
}

TEST_CASE("diagonal invariants scale by the stated weights")
{
  // k0 = (n_a + n_b + N)/2
  OccState s = st({2, 0}, {1, 1});
  FockVector v = FockVector::monomial(s);
  CHECK(apply(invariant_op({InvariantOpName::KZero, Flavor::SuN}, 2), v) == Rational(3) * v);
  // kappa0 = (n_a - n_b)/2, zero on balanced states
  CHECK(apply(invariant_op({InvariantOpName::KappaZero, Flavor::Su2}, 2), v).empty());
  OccState t = st({2, 1}, {1, 0});
  CHECK(apply(invariant_op({InvariantOpName::KappaZero, Flavor::Su2}, 2),
              FockVector::monomial(t)) == FockVector::monomial(t, Rational(1)));
}

TEST_CASE("exchange ladder moves quanta between families")
{
  // kappa+ = a†·b
  FockVector w = apply(invariant_op({InvariantOpName::KappaPlus, Flavor::Su2}, 2),
                       FockVector::monomial(st({0, 0}, {1, 1})));
  CHECK(w.coeff(st({1, 0}, {0, 1})) == 1);
  CHECK(w.coeff(st({0, 1}, {1, 0})) == 1);
  CHECK(w.size() == 2);
}

TEST_CASE("commutator helper evaluates on a whole domain")
{
  auto dom = basis_states(2, 1, 1);
  auto res = commutator(k_minus(Flavor::Su2, 2), k_plus(Flavor::Su2, 2), dom);
  REQUIRE(res.size() == dom.size());
  // [k-, k+] = 2 k0 = (n_a + n_b + 2) on every domain state
  for (std::size_t i = 0; i < dom.size(); ++i)
    CHECK(res[i] == Rational(4) * FockVector::monomial(dom[i]));
}

TEST_CASE("total generator count matches the group dimension")
{
  CHECK(total_generators(2, Flavor::Su2).size() == 3);
  CHECK(total_generators(2, Flavor::SuN).size() == 3);
  CHECK(total_generators(3, Flavor::SuN).size() == 8);
  CHECK(total_generators(4, Flavor::SuN).size() == 15);
}

TEST_CASE("sector keys collapse family weights by flavor")
{
  // epsilon pairing conserves the combined magnetic number of both
  // fundamentals; dot pairing conserves the fundamental-antifundamental sum
  CHECK(sector_key(st({1, 0}, {0, 1}), Flavor::Su2) == std::vector<int>{0});
  CHECK(sector_key(st({1, 0}, {1, 0}), Flavor::Su2) == std::vector<int>{2});
  CHECK(sector_key(st({1, 0}, {1, 0}), Flavor::SuN) == std::vector<int>{0});
  CHECK(sector_key(st({1, 0, 0}, {1, 0, 0}), Flavor::SuN) == std::vector<int>{0, 0});
  CHECK(sector_key(st({1, 0, 0}, {0, 1, 0}), Flavor::SuN) == std::vector<int>{2, 0});

  // the pair ladders preserve the key on every image term
  for (Flavor f : {Flavor::Su2, Flavor::SuN}) {
    FockVector w = apply(k_plus(f, 2), FockVector::monomial(st({1, 0}, {0, 1})));
    for (const auto& [s, c] : w.terms())
      CHECK(sector_key(s, f) == sector_key(st({1, 0}, {0, 1}), f));
  }
}
