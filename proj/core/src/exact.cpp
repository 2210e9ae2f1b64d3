#include "sbcg/exact.hpp"

#include <algorithm>
#include <stdexcept>

namespace sbcg {

BigInt factorial(long n) {
  if (n < 0) throw std::domain_error("factorial: negative argument");
  BigInt acc = 1;
  for (long k = 2; k <= n; ++k) acc *= k;
  return acc;
}

Rational densum(long A, long B, long C) {
  if (A < 0 || B < 0) throw std::invalid_argument("densum: A,B must be >= 0");
  if (C < A || C < B || C < A + B)
    throw std::invalid_argument("densum: requires C >= A, C >= B, C >= A+B");
  Rational direct = 0;
  for (long q = 0; q <= std::min(A, B); ++q) {
    Rational term(factorial(C - q),
                  factorial(q) * factorial(A - q) * factorial(B - q));
    direct += (q % 2) ? -term : term;
  }
  Rational closed(factorial(C - A) * factorial(C - B),
                  factorial(A) * factorial(B) * factorial(C - A - B));
  if (direct != closed) throw std::logic_error("densum: route disagreement");
  return direct;
}

SignedSqrtRational SignedSqrtRational::sqrt_of(const Rational& r, int sign) {
  if (r < 0) throw std::domain_error("sqrt_of: negative radicand");
  if (sign != -1 && sign != 0 && sign != 1)
    throw std::invalid_argument("sqrt_of: sign must be -1, 0 or +1");
  if (r == 0 || sign == 0) return SignedSqrtRational(0, Rational(0));
  return SignedSqrtRational(sign, r);
}

SignedSqrtRational SignedSqrtRational::from_rational(const Rational& c) {
  if (c == 0) return SignedSqrtRational();
  return SignedSqrtRational(c > 0 ? 1 : -1, c * c);
}

SignedSqrtRational operator*(const SignedSqrtRational& x,
                             const SignedSqrtRational& y) {
  if (x.sign_ == 0 || y.sign_ == 0) return SignedSqrtRational();
  return SignedSqrtRational(x.sign_ * y.sign_, x.radicand_ * y.radicand_);
}

SignedSqrtRational operator/(const SignedSqrtRational& x,
                             const SignedSqrtRational& y) {
  if (y.sign_ == 0) throw std::domain_error("SignedSqrtRational: divide by zero");
  if (x.sign_ == 0) return SignedSqrtRational();
  return SignedSqrtRational(x.sign_ * y.sign_, x.radicand_ / y.radicand_);
}

SignedSqrtRational SignedSqrtRational::operator-() const {
  return SignedSqrtRational(-sign_, radicand_);
}

std::string SignedSqrtRational::render() const {
  if (sign_ == 0) return "0";
  std::string out = sign_ < 0 ? "-" : "+";
  out += "sqrt(";
  out += numerator(radicand_).str();
  out += "/";
  out += denominator(radicand_).str();
  out += ")";
  return out;
}

namespace {

BigInt pow10(long e) {
  BigInt b = 1;
  for (long i = 0; i < e; ++i) b *= 10;
  return b;
}

}  // namespace

std::string SignedSqrtRational::decimal(int digits) const {
  if (digits < 1) throw std::invalid_argument("decimal: digits must be >= 1");
  if (sign_ == 0) return "0";

  const BigInt& p = numerator(radicand_);
  const BigInt& q = denominator(radicand_);
  const int guard = 20;

  // scale so the floor square root carries digits+guard significant digits
  long k = digits + guard;
  std::string s;
  while (true) {
    BigInt scaled = (p * pow10(2 * k)) / q;
    BigInt root = boost::multiprecision::sqrt(scaled);
    s = root.str();
    if ((long)s.size() >= digits + guard) break;
    k += digits + guard;
  }
  // value = 0.s * 10^(E+1) with E the exponent of the leading digit
  long E = (long)s.size() - 1 - k;

  // round half up at `digits` significant digits
  BigInt prefix(s.substr(0, digits));
  if (s[digits] >= '5') ++prefix;
  std::string d = prefix.str();
  if ((long)d.size() > digits) {  // carry 999.. -> 1000..
    ++E;
    d = d.substr(0, digits);
  }

  std::string out = sign_ < 0 ? "-" : "";
  if (E >= -4 && E <= digits - 1) {
    if (E >= 0) {
      out += d.substr(0, E + 1);
      if (E + 1 < digits) {
        out += ".";
        out += d.substr(E + 1);
      }
    } else {
      out += "0.";
      out += std::string(-E - 1, '0');
      out += d;
    }
  } else {
    out += d.substr(0, 1);
    out += ".";
    out += d.substr(1);
    out += "e";
    out += (E < 0) ? "-" : "+";
    long absE = E < 0 ? -E : E;
    std::string es = std::to_string(absE);
    if (es.size() < 2) es = "0" + es;
    out += es;
  }
  return out;
}

SignedSqrtRational sqrt_of(const Rational& r, int sign) {
  return SignedSqrtRational::sqrt_of(r, sign);
}

}  // namespace sbcg
