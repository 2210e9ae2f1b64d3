#include "sbcg/projector.hpp"

#include <stdexcept>

namespace sbcg {

namespace {

Rational series_coefficient(int q, int T)
{
  // (-1)^q / q! * (T-q)!/T!
  if (q < 0 || q > T) throw std::domain_error("projector coefficient: q out of range");
  Rational c = Rational(1) / factorial(q);
  Rational tail(factorial(T - q), factorial(T));
  c *= tail;
  return (q % 2 == 0) ? c : -c;
}

}  // namespace

Rational l_q(int q, int na, int nb)
{
  if (na < 0 || nb < 0) throw std::domain_error("l_q: negative totals");
  return series_coefficient(q, na + nb);
}

Rational L_q(int q, int na, int nb, int N)
{
  if (na < 0 || nb < 0) throw std::domain_error("L_q: negative totals");
  if (N < 2) throw std::domain_error("L_q: N must be at least 2");
  return series_coefficient(q, na + nb + N - 2);
}

Rational N_r(int r, int na, int nb, int N)
{
  if (N < 2) throw std::domain_error("N_r: N must be at least 2");
  if (r < 0 || r > na || r > nb) throw std::domain_error("N_r: r out of range");
  return Rational(factorial(na + nb + N - 2 * r - 1),
                  factorial(r) * factorial(na + nb + N - r - 1));
}

FockVector apply_P0(const FockVector& v, int N, Flavor flavor)
{
  validate_flavor(flavor, N);
  if (v.empty()) return FockVector(N);
  int ta = 0, tb = 0;
  if (!homogeneous_totals(v, ta, tb))
    throw std::invalid_argument("apply_P0: input must have fixed totals");

  const LinearOp kp = k_plus(flavor, N);
  const LinearOp km = k_minus(flavor, N);
  const int qmax = ta < tb ? ta : tb;

  FockVector out = v;  // q = 0 term, coefficient 1
  FockVector w = v;
  for (int q = 1; q <= qmax; ++q) {
    w = apply(km, w);
    if (w.empty()) break;
    Rational c = (flavor == Flavor::Su2) ? l_q(q, ta, tb) : L_q(q, ta, tb, N);
    out += c * apply_pow(kp, q, w);
  }
  return out;
}

FockVector apply_Pr(const FockVector& v, int r, int N, Flavor flavor)
{
  validate_flavor(flavor, N);
  if (r < 0) throw std::domain_error("apply_Pr: negative r");
  if (v.empty()) return FockVector(N);
  int ta = 0, tb = 0;
  if (!homogeneous_totals(v, ta, tb))
    throw std::invalid_argument("apply_Pr: input must have fixed totals");
  if (r > ta || r > tb) throw std::domain_error("apply_Pr: r exceeds min(total_a, total_b)");

  const LinearOp kp = k_plus(flavor, N);
  const LinearOp km = k_minus(flavor, N);

  FockVector w = apply_pow(km, r, v);
  if (w.empty()) return FockVector(N);
  w = apply_P0(w, N, flavor);
  if (w.empty()) return FockVector(N);
  w = apply_pow(kp, r, w);
  return N_r(r, ta, tb, N) * w;
}

SignedSqrtRational matrix_element_Pr(const OccState& bra, const OccState& ket,
                                     int r, int N, Flavor flavor)
{
  validate_flavor(flavor, N);
  if (bra.modes() != N || ket.modes() != N)
    throw std::invalid_argument("matrix_element_Pr: mode count mismatch");
  if (bra.total_a() != ket.total_a() || bra.total_b() != ket.total_b())
    return SignedSqrtRational();
  if (sector_key(bra, flavor) != sector_key(ket, flavor)) return SignedSqrtRational();

  FockVector v(N);
  v.add(ket, 1);
  FockVector w = apply_Pr(v, r, N, flavor);
  Rational c = w.coeff(bra);
  if (c == 0) return SignedSqrtRational();
  // rescale from the monomial basis to unit-normalized states
  Rational ratio(gram(bra), gram(ket));
  return SignedSqrtRational::from_rational(c) * sqrt_of(ratio, 1);
}

}  // namespace sbcg
