#pragma once

#include <concepts>
#include <functional>
#include <map>
#include <string>
#include <type_traits>
#include <vector>

#include "sbcg/exact.hpp"

namespace sbcg {

// Occupation labels for the two oscillator families a and b, modes 1..N.
// Ordering is lexicographic on (na, nb); keys in FockVector rely on it.
struct OccState {
  std::vector<int> na;
  std::vector<int> nb;

  int modes() const { return (int)na.size(); }
  int total_a() const;
  int total_b() const;

  friend auto operator<=>(const OccState&, const OccState&) = default;
};

// validated constructor: equal sizes >= 2, all entries >= 0
OccState make_state(std::vector<int> na, std::vector<int> nb);

// Finite rational combination of occupation monomials in the unnormalized
// basis  prod (a†_α)^{na_α} prod (b†_α)^{nb_α} |0>,  no 1/sqrt(n!) factors.
// Zero coefficients are never stored.
class FockVector {
 public:
  explicit FockVector(int N);
  static FockVector monomial(const OccState& s, const Rational& c = Rational(1));

  int modes() const { return N_; }
  bool empty() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  const std::map<OccState, Rational>& terms() const { return terms_; }

  Rational coeff(const OccState& s) const;
  void add(const OccState& s, const Rational& c);

  FockVector& operator+=(const FockVector& w);
  FockVector& operator-=(const FockVector& w);
  FockVector& operator*=(const Rational& c);
  friend FockVector operator+(FockVector v, const FockVector& w);
  friend FockVector operator-(FockVector v, const FockVector& w);
  friend FockVector operator*(const Rational& c, FockVector v);
  friend bool operator==(const FockVector&, const FockVector&) = default;

 private:
  int N_;
  std::map<OccState, Rational> terms_;
};

// Every operator is a basis-state action extended by linearity.  A named
// struct rather than a std::function alias keeps argument-dependent lookup
// inside this namespace.
struct LinearOp {
  std::function<FockVector(const OccState&)> act;

  LinearOp() = default;
  template <typename F>
    requires(!std::same_as<std::remove_cvref_t<F>, LinearOp>)
  LinearOp(F&& f) : act(std::forward<F>(f)) {}

  FockVector operator()(const OccState& s) const { return act(s); }
};

FockVector apply(const LinearOp& op, const FockVector& v);
FockVector apply_pow(const LinearOp& op, int k, FockVector v);

LinearOp op_zero();
LinearOp op_identity();
LinearOp op_scale(const Rational& c, LinearOp op);
LinearOp op_sum(std::vector<LinearOp> ops);
// composition f∘g, rightmost acts first
LinearOp op_compose(LinearOp f, LinearOp g);

// ladder operators, alpha is 1-based; alpha > N is caught at application
LinearOp create_a(int alpha);
LinearOp create_b(int alpha);
LinearOp annih_a(int alpha);
LinearOp annih_b(int alpha);

// <m|m'> = delta_mm' * prod (na_α)!(nb_α)!
BigInt gram(const OccState& s);
Rational inner(const FockVector& u, const FockVector& v);

// overlap of v with the unit-normalized occupation state bra
SignedSqrtRational amplitude(const OccState& bra, const FockVector& v);

// magnetic quantum numbers (h_a^1..h_a^{N-1}, h_b^1..h_b^{N-1});
// the b family carries the conjugate-representation sign
std::vector<int> occ_to_weights(const OccState& s);

// all states with the given family totals, lexicographic order
std::vector<OccState> basis_states(int N, int total_a, int total_b);

// true iff nonempty and all monomials share (total_a, total_b)
bool homogeneous_totals(const FockVector& v, int& total_a, int& total_b);

// "c * |na;nb>" terms in canonical key order
std::string render(const FockVector& v);
std::string render(const OccState& s);

}  // namespace sbcg
