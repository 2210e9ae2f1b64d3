#include "sbcg/oracle.hpp"

#include <algorithm>
#include <cstdlib>
#include <optional>
#include <stdexcept>

namespace sbcg {

namespace {

std::optional<BigInt> term_fact(int n)
{
  if (n < 0) return std::nullopt;
  return factorial(n);
}

int half(int doubled)
{
  if (doubled % 2 != 0) throw std::logic_error("half: odd doubled value");
  return doubled / 2;
}

}  // namespace

std::vector<OccState> weight_sector(const OccState& seed, Flavor flavor)
{
  validate_flavor(flavor, seed.modes());
  const auto w = sector_key(seed, flavor);
  std::vector<OccState> out;
  for (const auto& s : basis_states(seed.modes(), seed.total_a(), seed.total_b()))
    if (sector_key(s, flavor) == w) out.push_back(s);
  return out;
}

SectorMatrix sector_matrix(const LinearOp& op, const std::vector<OccState>& basis)
{
  SectorMatrix m;
  m.basis = basis;
  m.cols.resize(basis.size());
  for (std::size_t j = 0; j < basis.size(); ++j) {
    FockVector w = op(basis[j]);
    std::vector<Rational> col(basis.size(), Rational(0));
    for (const auto& [s, c] : w.terms()) {
      auto it = std::lower_bound(basis.begin(), basis.end(), s);
      if (it == basis.end() || !(*it == s))
        throw std::invalid_argument("sector_matrix: operator leaves the sector");
      col[it - basis.begin()] = c;
    }
    m.cols[j] = std::move(col);
  }
  return m;
}

namespace {

using Mat = std::vector<std::vector<Rational>>;

Mat mat_identity(std::size_t n)
{
  Mat I(n, std::vector<Rational>(n, Rational(0)));
  for (std::size_t i = 0; i < n; ++i) I[i][i] = 1;
  return I;
}

// both operands column-major: (a*b).col[j] = a * b.col[j]
Mat mat_mul(const Mat& a, const Mat& b)
{
  const std::size_t n = a.size();
  Mat out(n, std::vector<Rational>(n, Rational(0)));
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t k = 0; k < n; ++k) {
      const Rational& bkj = b[j][k];
      if (bkj == 0) continue;
      for (std::size_t i = 0; i < n; ++i) {
        if (a[k][i] == 0) continue;
        out[j][i] += a[k][i] * bkj;
      }
    }
  return out;
}

bool mat_is_zero(const Mat& m)
{
  for (const auto& col : m)
    for (const auto& x : col)
      if (x != 0) return false;
  return true;
}

}  // namespace

SectorMatrix spectral_projector(const std::vector<OccState>& basis, int r, Flavor flavor)
{
  if (basis.empty()) throw std::invalid_argument("spectral_projector: empty sector");
  const int N = basis.front().modes();
  validate_flavor(flavor, N);
  const int ta = basis.front().total_a();
  const int tb = basis.front().total_b();
  const int rmax = std::min(ta, tb);
  if (r < 0 || r > rmax) throw std::domain_error("spectral_projector: r out of range");

  const LinearOp kp = k_plus(flavor, N);
  const LinearOp km = k_minus(flavor, N);
  SectorMatrix K = sector_matrix(
      [&](const OccState& s) { return apply(kp, apply(km, FockVector::monomial(s))); }, basis);

  auto lambda = [&](int rr) { return Rational(rr) * (ta + tb + N - 1 - rr); };

  // the spectrum claim is load-bearing; check the annihilating polynomial
  const std::size_t n = basis.size();
  Mat poly = mat_identity(n);
  for (int s = 0; s <= rmax; ++s) {
    Mat shifted = K.cols;
    for (std::size_t i = 0; i < n; ++i) shifted[i][i] -= lambda(s);
    poly = mat_mul(poly, shifted);
  }
  if (!mat_is_zero(poly))
    throw std::logic_error("spectral_projector: pair operator misses its claimed spectrum");

  Mat proj = mat_identity(n);
  for (int s = 0; s <= rmax; ++s) {
    if (s == r) continue;
    Mat shifted = K.cols;
    for (std::size_t i = 0; i < n; ++i) shifted[i][i] -= lambda(s);
    Rational scale = lambda(r) - lambda(s);
    for (auto& col : shifted)
      for (auto& x : col) x /= scale;
    proj = mat_mul(proj, shifted);
  }

  SectorMatrix out;
  out.basis = basis;
  out.cols = std::move(proj);
  return out;
}

SignedSqrtRational racah_cgc(const SU2Coupling& c)
{
  validate(c);
  const int two_m = c.two_m();
  if (std::abs(two_m) > c.two_j) return SignedSqrtRational();

  const int j1j2j = half(c.two_j1 + c.two_j2 - c.two_j);
  const int j1m1 = half(c.two_j1 - c.two_m1);
  const int j2pm2 = half(c.two_j2 + c.two_m2);
  const int s1 = half(c.two_j - c.two_j2 + c.two_m1);
  const int s2 = half(c.two_j - c.two_j1 - c.two_m2);

  Rational pre(c.two_j + 1);
  pre *= Rational(factorial(j1j2j) * factorial(half(c.two_j1 - c.two_j2 + c.two_j)) *
                      factorial(half(c.two_j2 - c.two_j1 + c.two_j)),
                  factorial(half(c.two_j1 + c.two_j2 + c.two_j) + 1));
  pre *= factorial(half(c.two_j + two_m)) * factorial(half(c.two_j - two_m));
  pre *= factorial(half(c.two_j1 + c.two_m1)) * factorial(j1m1);
  pre *= factorial(j2pm2) * factorial(half(c.two_j2 - c.two_m2));

  Rational sum(0);
  for (int k = 0;; ++k) {
    if (j1j2j - k < 0 && j1m1 - k < 0 && j2pm2 - k < 0) break;
    auto g1 = term_fact(k);
    auto g2 = term_fact(j1j2j - k);
    auto g3 = term_fact(j1m1 - k);
    auto g4 = term_fact(j2pm2 - k);
    auto g5 = term_fact(s1 + k);
    auto g6 = term_fact(s2 + k);
    if (g1 && g2 && g3 && g4 && g5 && g6) {
      Rational t(1, *g1 * *g2 * *g3 * *g4 * *g5 * *g6);
      sum += (k % 2 == 0) ? t : -t;
    }
  }
  return SignedSqrtRational::from_rational(sum) * sqrt_of(pre, 1);
}

namespace {

FockVector symmetrize_word_average(const OccState& s)
{
  // both families transform in the fundamental, so the symmetric channel
  // of the underlying length-n word is the multinomial average over the
  // placements of the mode-1 letters
  const int nc = s.na[0] + s.na[1];
  const int nd = s.nb[0] + s.nb[1];
  const int n = nc + nd;
  const int K = s.na[0] + s.nb[0];
  FockVector out(2);
  if (n == 0) {
    out.add(s, 1);
    return out;
  }
  Rational base(factorial(K) * factorial(n - K), factorial(n));
  for (int l = std::max(0, K - nd); l <= std::min(K, nc); ++l) {
    Rational c = base;
    c *= Rational(factorial(nc), factorial(l) * factorial(nc - l));
    c *= Rational(factorial(nd), factorial(K - l) * factorial(nd - K + l));
    out.add(make_state({l, nc - l}, {K - l, nd - K + l}), c);
  }
  return out;
}

FockVector symmetrize_trace_subtraction(const OccState& s, int N)
{
  FockVector v = FockVector::monomial(s);
  const LinearOp kp = k_plus(Flavor::SuN, N);
  const LinearOp km = k_minus(Flavor::SuN, N);
  FockVector rhs = apply(km, v);
  if (rhs.empty()) return v;

  // solve (k- k+) u = k- v exactly on the weight sector one pair down
  OccState seed = rhs.terms().begin()->first;
  std::vector<OccState> basis = weight_sector(seed, Flavor::SuN);
  const std::size_t n = basis.size();
  SectorMatrix G = sector_matrix(
      [&](const OccState& t) { return apply(km, apply(kp, FockVector::monomial(t))); }, basis);

  // dense Gaussian elimination; the operator is positive definite here
  Mat a(n, std::vector<Rational>(n));
  std::vector<Rational> b(n, Rational(0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a[i][j] = G.cols[j][i];
  for (const auto& [t, c] : rhs.terms()) {
    auto it = std::lower_bound(basis.begin(), basis.end(), t);
    if (it == basis.end() || !(*it == t))
      throw std::logic_error("symmetrize_explicit: residual leaves the sector");
    b[it - basis.begin()] = c;
  }
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && a[piv][col] == 0) ++piv;
    if (piv == n) throw std::logic_error("symmetrize_explicit: singular pair operator");
    std::swap(a[piv], a[col]);
    std::swap(b[piv], b[col]);
    for (std::size_t row = 0; row < n; ++row) {
      if (row == col || a[row][col] == 0) continue;
      Rational f = a[row][col] / a[col][col];
      for (std::size_t j = col; j < n; ++j) a[row][j] -= f * a[col][j];
      b[row] -= f * b[col];
    }
  }
  FockVector u(N);
  for (std::size_t i = 0; i < n; ++i) {
    if (b[i] == 0) continue;
    u.add(basis[i], b[i] / a[i][i]);
  }

  FockVector out = v - apply(kp, u);
  if (!apply(km, out).empty())
    throw std::logic_error("symmetrize_explicit: residual pair content survived");
  return out;
}

}  // namespace

FockVector symmetrize_explicit(const OccState& s, Flavor flavor)
{
  validate_flavor(flavor, s.modes());
  if (flavor == Flavor::Su2) return symmetrize_word_average(s);
  return symmetrize_trace_subtraction(s, s.modes());
}

}  // namespace sbcg
