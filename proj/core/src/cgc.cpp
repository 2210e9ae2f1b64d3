#include "sbcg/cgc.hpp"

#include <algorithm>
#include <cstdlib>
#include <optional>
#include <stdexcept>

#include "sbcg/projector.hpp"

namespace sbcg {

namespace {

int half(int doubled)
{
  if (doubled % 2 != 0) throw std::logic_error("half: odd doubled value");
  return doubled / 2;
}

// factorial that kills the whole series term on a negative argument
std::optional<BigInt> term_fact(int n)
{
  if (n < 0) return std::nullopt;
  return factorial(n);
}

SignedSqrtRational scaled_sqrt(const Rational& c, const Rational& radicand)
{
  // c * sqrt(radicand)
  return SignedSqrtRational::from_rational(c) * sqrt_of(radicand, 1);
}

}  // namespace

void validate(const SU2Coupling& c)
{
  auto bad = [](const char* what) { throw std::invalid_argument(std::string("SU2Coupling: ") + what); };
  if (c.two_j1 < 0 || c.two_j2 < 0) bad("negative angular momentum");
  if (std::abs(c.two_m1) > c.two_j1 || std::abs(c.two_m2) > c.two_j2) bad("|m| exceeds j");
  if ((c.two_j1 + c.two_m1) % 2 != 0 || (c.two_j2 + c.two_m2) % 2 != 0) bad("j, m parity mismatch");
  if (c.two_j < std::abs(c.two_j1 - c.two_j2) || c.two_j > c.two_j1 + c.two_j2)
    bad("j outside the coupling range");
  if ((c.two_j1 + c.two_j2 + c.two_j) % 2 != 0) bad("j parity inconsistent with j1 + j2");
}

void validate(const SUNCoupling& c)
{
  auto bad = [](const char* what) { throw std::invalid_argument(std::string("SUNCoupling: ") + what); };
  if (c.N < 2) bad("N must be at least 2");
  if ((int)c.na.size() != c.N || (int)c.nb.size() != c.N) bad("label size differs from N");
  for (int x : c.na)
    if (x < 0) bad("negative occupation");
  for (int x : c.nb)
    if (x < 0) bad("negative occupation");
  int ta = 0, tb = 0;
  for (int x : c.na) ta += x;
  for (int x : c.nb) tb += x;
  if (c.r < 0 || c.r > ta || c.r > tb) bad("r outside 0..min(total_a, total_b)");
}

std::vector<int> nbar(const SUNCoupling& c)
{
  int ta = 0;
  for (int x : c.na) ta += x;
  std::vector<int> out(c.N);
  out[0] = ta - c.na[0] + c.nb[0];
  for (int i = 1; i < c.N; ++i) out[i] = c.nb[i] - c.na[i];
  return out;
}

SignedSqrtRational cgc_su2(const SU2Coupling& c)
{
  validate(c);
  const int two_m = c.two_m();
  if (std::abs(two_m) > c.two_j) return SignedSqrtRational();

  const int j1j2j   = half(c.two_j1 - c.two_j2 + c.two_j);
  const int j2j1j   = half(c.two_j2 - c.two_j1 + c.two_j);
  const int rr      = half(c.two_j1 + c.two_j2 - c.two_j);
  const int jm      = half(c.two_j - two_m);
  const int jpm     = half(c.two_j + two_m);
  const int j1m1    = half(c.two_j1 - c.two_m1);
  const int j1pm1   = half(c.two_j1 + c.two_m1);
  const int j2m2    = half(c.two_j2 - c.two_m2);
  const int j2pm2   = half(c.two_j2 + c.two_m2);
  const int jsum1   = half(c.two_j1 + c.two_j2 + c.two_j) + 1;

  Rational pre(c.two_j + 1);
  pre *= factorial(j1j2j) * factorial(j2m2);
  pre *= factorial(j2pm2) * factorial(j1pm1);
  pre *= factorial(jm);
  pre /= Rational(factorial(jsum1) * factorial(j2j1j));
  pre /= Rational(factorial(rr) * factorial(j1m1));
  pre /= factorial(jpm);

  const int refshift = half(c.two_j2 - c.two_j + c.two_m1);  // j2 - j + m1
  Rational sum(0);
  for (int q = 0; c.two_j - q >= 0; ++q) {
    auto f1 = term_fact(c.two_j - q);
    auto f2 = term_fact(rr + q);
    auto g1 = term_fact(q);
    auto g2 = term_fact(j1j2j - q);
    auto g3 = term_fact(jm - q);
    auto g4 = term_fact(refshift + q);
    if (!f1 || !f2 || !g1 || !g2 || !g3 || !g4) continue;
    Rational t(*f1 * *f2, *g1 * *g2 * *g3 * *g4);
    sum += ((q + j1m1) % 2 == 0) ? t : -t;
  }
  return scaled_sqrt(sum, pre);
}

SignedSqrtRational cgc_sun(const SUNCoupling& c)
{
  validate(c);
  int ta = 0, tb = 0;
  for (int x : c.na) ta += x;
  for (int x : c.nb) tb += x;
  const auto nbb = nbar(c);
  for (int x : nbb)
    if (x < 0) throw std::domain_error("cgc_sun: conjugate label nbar has a negative entry");

  const int N = c.N, r = c.r;
  Rational b1(ta + tb + N - 2 * r - 1);
  b1 *= factorial(c.na[0]);
  for (int x : c.nb) b1 *= factorial(x);
  b1 /= Rational(factorial(r) * factorial(ta + tb + N - r - 1));
  for (int i = 1; i < N; ++i) b1 /= Rational(factorial(c.na[i]) * factorial(nbb[i]));

  // a negative numerator factorial in the prefactor kills the whole value
  if (nbb[0] - r < 0) return SignedSqrtRational();
  Rational b2(factorial(ta - r) * factorial(nbb[0] - r));
  b2 *= factorial(tb - nbb[0] + N - 2);
  b2 /= Rational(factorial(tb + N - r - 2) * factorial(ta + tb - nbb[0] + N - r - 2));

  Rational sum(0);
  for (int q = 0; q <= ta + tb + 1; ++q) {
    auto f1 = term_fact(q + r);
    auto f2 = term_fact(ta + tb + N - 2 - 2 * r - q);
    auto g1 = term_fact(q);
    auto g2 = term_fact(ta - q - r);
    auto g3 = term_fact(nbb[0] - q - r);
    auto g4 = term_fact(c.na[0] - ta + q + r);
    if (!f1 || !f2 || !g1 || !g2 || !g3 || !g4) continue;
    Rational t(*f1 * *f2, *g1 * *g2 * *g3 * *g4);
    sum += (q % 2 == 0) ? t : -t;
  }
  return scaled_sqrt(sum, b1 * b2);
}

namespace {

OccState occ_su2(int two_j1, int two_m1, int two_j2, int two_m2)
{
  return make_state({half(two_j1 + two_m1), half(two_j1 - two_m1)},
                    {half(two_j2 + two_m2), half(two_j2 - two_m2)});
}

// <bra|Pr|ket> between unit states, with Pr|ket> already computed
SignedSqrtRational me_from(const FockVector& w, const OccState& bra, const OccState& ket)
{
  Rational cb = w.coeff(bra);
  if (cb == 0) return SignedSqrtRational();
  return scaled_sqrt(cb, Rational(gram(bra), gram(ket)));
}

Rational diag_rational(const OccState& s, int r, int N, Flavor flavor)
{
  FockVector w = apply_Pr(FockVector::monomial(s), r, N, flavor);
  return w.coeff(s);
}

}  // namespace

ProjectorCgc cgc_via_projector(const SU2Coupling& c)
{
  validate(c);
  const int two_m = c.two_m();
  if (std::abs(two_m) > c.two_j) return {SignedSqrtRational(), true};

  const int r = c.r();
  const OccState dec = occ_su2(c.two_j1, c.two_m1, c.two_j2, c.two_m2);
  FockVector w = apply_Pr(FockVector::monomial(dec), r, 2, Flavor::Su2);
  if (w.coeff(dec) == 0) return {SignedSqrtRational(), true};

  // reference bra with a single positive expansion term in this channel
  const int two_m1ref = std::min(c.two_j1, two_m + c.two_j2);
  const OccState ref = occ_su2(c.two_j1, two_m1ref, c.two_j2, two_m - two_m1ref);
  SignedSqrtRational num = me_from(w, ref, dec);
  Rational dc = diag_rational(ref, r, 2, Flavor::Su2);
  if (dc <= 0) throw std::logic_error("cgc_via_projector: reference state lost its channel component");
  return {num / sqrt_of(dc, 1), true};
}

ProjectorCgc cgc_via_projector(const SUNCoupling& c)
{
  validate(c);
  const OccState dec = make_state(c.na, c.nb);
  FockVector w = apply_Pr(FockVector::monomial(dec), c.r, c.N, Flavor::SuN);
  Rational dd = w.coeff(dec);
  if (dd == 0) return {SignedSqrtRational(), true};

  const auto nbb = nbar(c);
  for (int x : nbb)
    if (x < 0) return {sqrt_of(dd, 1), false};  // magnitude only

  std::vector<int> stretched(c.N, 0);
  stretched[0] = dec.total_a();
  const OccState ref = make_state(stretched, nbb);
  SignedSqrtRational num = me_from(w, ref, dec);
  Rational dc = diag_rational(ref, c.r, c.N, Flavor::SuN);
  if (dc <= 0) throw std::logic_error("cgc_via_projector: reference state lost its channel component");
  return {num / sqrt_of(dc, 1), true};
}

std::vector<CgTerm> cg_series(const OccState& s, Flavor flavor)
{
  const int N = s.modes();
  validate_flavor(flavor, N);
  const int rmax = std::min(s.total_a(), s.total_b());
  std::vector<CgTerm> out;
  for (int r = 0; r <= rmax; ++r) {
    FockVector w = apply_Pr(FockVector::monomial(s), r, N, flavor);
    if (w.empty()) continue;
    // the diagonal <s|Pr|s> between unit states is the squared weight of
    // the channel component; the reference route fixes only the sign
    Rational diag = w.coeff(s);
    ProjectorCgc c;
    if (flavor == Flavor::Su2) {
      SU2Coupling labels{s.na[0] + s.na[1], s.na[0] - s.na[1],
                         s.nb[0] + s.nb[1], s.nb[0] - s.nb[1],
                         s.total_a() + s.total_b() - 2 * r};
      c = cgc_via_projector(labels);
    } else {
      c = cgc_via_projector(SUNCoupling{N, s.na, s.nb, r});
    }
    bool definite = c.sign_definite && !c.value.is_zero();
    int sign = (definite && c.value.sign() < 0) ? -1 : 1;
    out.push_back(CgTerm{r, sqrt_of(diag, sign), definite, std::move(w)});
  }
  return out;
}

SignedSqrtRational stretched_overlap_closed(const SU2Coupling& c)
{
  validate(c);
  const int two_m = c.two_m();
  if (std::abs(two_m - c.two_j1) > c.two_j2)
    throw std::domain_error("stretched_overlap_closed: no stretched bra for these labels");

  const int rr   = half(c.two_j1 + c.two_j2 - c.two_j);
  const int jm   = half(c.two_j - two_m);
  const int j1m1 = half(c.two_j1 - c.two_m1);

  Rational PF(factorial(c.two_j + 1),
              factorial(c.two_j) * factorial(rr) * factorial(half(c.two_j1 + c.two_j2 + c.two_j) + 1));
  Rational S2(factorial(c.two_j1) * factorial(half(c.two_j1 + c.two_j2 - two_m)) *
                  factorial(half(c.two_j1 + c.two_m1)) * factorial(half(c.two_j2 + c.two_m2)) *
                  factorial(half(c.two_j2 - c.two_m2)),
              factorial(j1m1) * factorial(half(c.two_j2 - c.two_j1 + two_m)));

  Rational sum(0);
  for (int q = 0; c.two_j - q >= 0; ++q) {
    auto f1 = term_fact(rr + q);
    auto f2 = term_fact(c.two_j - q);
    auto g1 = term_fact(q);
    auto g2 = term_fact(half(c.two_j2 - c.two_j + c.two_m1) + q);
    auto g3 = term_fact(half(c.two_j1 - c.two_j2 + c.two_j) - q);
    auto g4 = term_fact(jm - q);
    if (!f1 || !f2 || !g1 || !g2 || !g3 || !g4) continue;
    Rational t(*f1 * *f2, *g1 * *g2 * *g3 * *g4);
    sum += ((q + j1m1) % 2 == 0) ? t : -t;
  }
  return scaled_sqrt(PF * sum, S2);
}

Rational stretched_diagonal_closed(int two_j1, int two_j2, int two_m, int r)
{
  const int two_j = two_j1 + two_j2 - 2 * r;
  const int A = half(two_j1 - two_j2 + two_j);
  const int B = half(two_j - two_m);
  if (A < 0 || B < 0 || two_j - A - B < 0)
    throw std::domain_error("stretched_diagonal_closed: no stretched bra for these labels");
  Rational PF(factorial(two_j + 1) * factorial(two_j1) * factorial(half(two_j1 + two_j2 - two_m)),
              factorial(two_j) * factorial(r) * factorial(half(two_j1 + two_j2 + two_j) + 1));
  return PF * densum(A, B, two_j);
}

SignedSqrtRational stretched_amplitude_closed(int two_j1, int two_j2, int two_m, int r)
{
  const int two_j = two_j1 + two_j2 - 2 * r;
  if (std::abs(two_m - two_j1) > two_j2)
    throw std::domain_error("stretched_amplitude_closed: no stretched bra for these labels");
  Rational num(factorial(half(two_j + two_m)) * factorial(half(two_j2 - two_j1 + two_j)) *
               factorial(two_j + 1) * factorial(two_j1) * factorial(half(two_j1 + two_j2 - two_m)));
  Rational den(factorial(two_j) * factorial(r) * factorial(half(two_j1 + two_j2 + two_j) + 1));
  den *= factorial(half(two_j - two_m)) * factorial(half(two_j2 - two_j1 + two_m));
  den *= factorial(half(two_j1 - two_j2 + two_j));
  return sqrt_of(num / den, 1);
}

SignedSqrtRational stretched_overlap_closed(const SUNCoupling& c)
{
  validate(c);
  const auto nbb = nbar(c);
  for (int x : nbb)
    if (x < 0) throw std::domain_error("stretched_overlap_closed: nbar has a negative entry");
  int ta = 0, tb = 0;
  for (int x : c.na) ta += x;
  for (int x : c.nb) tb += x;
  const int N = c.N, r = c.r;

  Rational PF(ta + tb + N - 2 * r - 1);
  PF /= Rational(factorial(r) * factorial(ta + tb + N - r - 1));
  Rational S1(factorial(ta) * factorial(nbb[0]) * factorial(c.na[0]));
  for (int x : c.nb) S1 *= factorial(x);
  for (int i = 1; i < N; ++i) S1 /= Rational(factorial(c.na[i]) * factorial(nbb[i]));

  Rational sum(0);
  for (int q = 0; q <= ta + tb + 1; ++q) {
    auto f1 = term_fact(q + r);
    auto f2 = term_fact(ta + tb + N - 2 - 2 * r - q);
    auto g1 = term_fact(q);
    auto g2 = term_fact(ta - q - r);
    auto g3 = term_fact(nbb[0] - q - r);
    auto g4 = term_fact(c.na[0] - ta + q + r);
    if (!f1 || !f2 || !g1 || !g2 || !g3 || !g4) continue;
    Rational t(*f1 * *f2, *g1 * *g2 * *g3 * *g4);
    sum += (q % 2 == 0) ? t : -t;
  }
  return scaled_sqrt(PF * sum, S1);
}

Rational stretched_diagonal_closed(const SUNCoupling& c)
{
  validate(c);
  const auto nbb = nbar(c);
  for (int x : nbb)
    if (x < 0) throw std::domain_error("stretched_diagonal_closed: nbar has a negative entry");
  int ta = 0, tb = 0;
  for (int x : c.na) ta += x;
  for (int x : c.nb) tb += x;
  const int N = c.N, r = c.r;
  if (ta - r < 0 || nbb[0] - r < 0) return Rational(0);
  Rational num(BigInt(ta + tb + N - 2 * r - 1) * factorial(ta) * factorial(nbb[0]));
  num *= factorial(tb + N - r - 2) * factorial(ta - nbb[0] + tb + N - 2 - r);
  Rational den(factorial(r) * factorial(ta + tb + N - r - 1));
  den *= factorial(ta - r) * factorial(nbb[0] - r) * factorial(tb - nbb[0] + N - 2);
  return num / den;
}

SUNCoupling su2_as_sun(const SU2Coupling& c)
{
  validate(c);
  return SUNCoupling{2,
                     {half(c.two_j1 + c.two_m1), half(c.two_j1 - c.two_m1)},
                     {half(c.two_j2 - c.two_m2), half(c.two_j2 + c.two_m2)},
                     c.r()};
}

int reduction_phase(const SU2Coupling& c)
{
  return half(c.two_j1 - c.two_m1) % 2 == 0 ? 1 : -1;
}

}  // namespace sbcg
