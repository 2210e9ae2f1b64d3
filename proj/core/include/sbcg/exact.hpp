#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>

namespace sbcg {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// n! for n >= 0; negative input throws std::domain_error.  Series code that
// meets a negative factorial argument must drop the term before calling.
BigInt factorial(long n);

// sum_q (-1)^q/q! * (C-q)!/((A-q)!(B-q)!), q running while both A-q and B-q
// stay non-negative.  Evaluated twice: once by direct summation and once by
// the closed form (C-A)!(C-B)!/(A!B!(C-A-B)!).  The two routes must agree,
// so every call is a self-test; disagreement throws std::logic_error.
// Preconditions: A,B >= 0, C >= A, C >= B, C >= A+B.
Rational densum(long A, long B, long C);

// A value s*sqrt(p/q) with s in {-1,0,+1} and p/q >= 0.
// sign == 0 iff radicand == 0.  Closed under * and /; equality is exact.
// Addition is deliberately absent: sums of unlike radicals never arise here.
class SignedSqrtRational {
 public:
  SignedSqrtRational() : sign_(0), radicand_(0) {}

  static SignedSqrtRational sqrt_of(const Rational& r, int sign);
  // sign(c) * sqrt(c^2); embeds a rational exactly.
  static SignedSqrtRational from_rational(const Rational& c);

  int sign() const { return sign_; }
  const Rational& radicand() const { return radicand_; }
  // square of the value, always the radicand
  Rational square() const { return radicand_; }
  bool is_zero() const { return sign_ == 0; }

  friend SignedSqrtRational operator*(const SignedSqrtRational& x,
                                      const SignedSqrtRational& y);
  // division by zero throws std::domain_error
  friend SignedSqrtRational operator/(const SignedSqrtRational& x,
                                      const SignedSqrtRational& y);
  SignedSqrtRational operator-() const;

  friend bool operator==(const SignedSqrtRational& x,
                         const SignedSqrtRational& y) {
    return x.sign_ == y.sign_ && x.radicand_ == y.radicand_;
  }
  friend bool operator!=(const SignedSqrtRational& x,
                         const SignedSqrtRational& y) {
    return !(x == y);
  }

  // "+sqrt(3/5)", "-sqrt(1/12)", "0"
  std::string render() const;
  // decimal approximation, round half up at `digits` significant digits
  std::string decimal(int digits = 12) const;

 private:
  SignedSqrtRational(int sign, Rational radicand)
      : sign_(sign), radicand_(std::move(radicand)) {}
  int sign_;
  Rational radicand_;
};

SignedSqrtRational sqrt_of(const Rational& r, int sign);

}  // namespace sbcg
