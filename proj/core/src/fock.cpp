#include "sbcg/fock.hpp"

#include <numeric>
#include <stdexcept>

namespace sbcg {

int OccState::total_a() const {
  return std::accumulate(na.begin(), na.end(), 0);
}

int OccState::total_b() const {
  return std::accumulate(nb.begin(), nb.end(), 0);
}

OccState make_state(std::vector<int> na, std::vector<int> nb) {
  if (na.size() != nb.size())
    throw std::invalid_argument("make_state: family sizes differ");
  if (na.size() < 2) throw std::invalid_argument("make_state: need N >= 2");
  for (int x : na)
    if (x < 0) throw std::invalid_argument("make_state: negative occupation");
  for (int x : nb)
    if (x < 0) throw std::invalid_argument("make_state: negative occupation");
  return OccState{std::move(na), std::move(nb)};
}

FockVector::FockVector(int N) : N_(N) {
  if (N < 2) throw std::invalid_argument("FockVector: need N >= 2");
}

FockVector FockVector::monomial(const OccState& s, const Rational& c) {
  FockVector v(s.modes());
  v.add(s, c);
  return v;
}

Rational FockVector::coeff(const OccState& s) const {
  auto it = terms_.find(s);
  return it == terms_.end() ? Rational(0) : it->second;
}

void FockVector::add(const OccState& s, const Rational& c) {
  if (c == 0) return;
  if (s.modes() != N_) throw std::invalid_argument("FockVector::add: mode count mismatch");
  auto [it, inserted] = terms_.emplace(s, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

FockVector& FockVector::operator+=(const FockVector& w) {
  if (w.N_ != N_) throw std::invalid_argument("FockVector: mode count mismatch");
  for (const auto& [s, c] : w.terms_) add(s, c);
  return *this;
}

FockVector& FockVector::operator-=(const FockVector& w) {
  if (w.N_ != N_) throw std::invalid_argument("FockVector: mode count mismatch");
  for (const auto& [s, c] : w.terms_) add(s, -c);
  return *this;
}

FockVector& FockVector::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [s, x] : terms_) x *= c;
  return *this;
}

FockVector operator+(FockVector v, const FockVector& w) { return v += w; }
FockVector operator-(FockVector v, const FockVector& w) { return v -= w; }
FockVector operator*(const Rational& c, FockVector v) { return v *= c; }

FockVector apply(const LinearOp& op, const FockVector& v) {
  FockVector out(v.modes());
  for (const auto& [s, c] : v.terms()) {
    FockVector w = op(s);
    w *= c;
    out += w;
  }
  return out;
}

FockVector apply_pow(const LinearOp& op, int k, FockVector v) {
  if (k < 0) throw std::invalid_argument("apply_pow: negative power");
  for (int i = 0; i < k && !v.empty(); ++i) v = apply(op, v);
  return v;
}

LinearOp op_zero() {
  return [](const OccState& s) { return FockVector(s.modes()); };
}

LinearOp op_identity() {
  return [](const OccState& s) { return FockVector::monomial(s); };
}

LinearOp op_scale(const Rational& c, LinearOp op) {
  return [c, op = std::move(op)](const OccState& s) {
    FockVector v = op(s);
    v *= c;
    return v;
  };
}

LinearOp op_sum(std::vector<LinearOp> ops) {
  return [ops = std::move(ops)](const OccState& s) {
    FockVector out(s.modes());
    for (const auto& op : ops) out += op(s);
    return out;
  };
}

LinearOp op_compose(LinearOp f, LinearOp g) {
  return [f = std::move(f), g = std::move(g)](const OccState& s) {
    return apply(f, g(s));
  };
}

namespace {

enum class Family { A, B };
enum class Kind { Create, Annihilate };

LinearOp ladder(Family fam, Kind kind, int alpha) {
  if (alpha < 1) throw std::out_of_range("ladder operator: alpha must be >= 1");
  return [fam, kind, alpha](const OccState& s) {
    if (alpha > s.modes())
      throw std::out_of_range("ladder operator: alpha exceeds mode count");
    OccState t = s;
    std::vector<int>& occ = (fam == Family::A) ? t.na : t.nb;
    int& n = occ[alpha - 1];
    FockVector out(s.modes());
    if (kind == Kind::Create) {
      ++n;
      out.add(t, 1);
    } else {
      if (n == 0) return out;
      Rational c(n);
      --n;
      out.add(t, c);
    }
    return out;
  };
}

}  // namespace

LinearOp create_a(int alpha) { return ladder(Family::A, Kind::Create, alpha); }
LinearOp create_b(int alpha) { return ladder(Family::B, Kind::Create, alpha); }
LinearOp annih_a(int alpha) { return ladder(Family::A, Kind::Annihilate, alpha); }
LinearOp annih_b(int alpha) { return ladder(Family::B, Kind::Annihilate, alpha); }

BigInt gram(const OccState& s) {
  BigInt g = 1;
  for (int x : s.na) g *= factorial(x);
  for (int x : s.nb) g *= factorial(x);
  return g;
}

Rational inner(const FockVector& u, const FockVector& v) {
  if (u.modes() != v.modes())
    throw std::invalid_argument("inner: mode count mismatch");
  // iterate the smaller map
  const FockVector& small = u.size() <= v.size() ? u : v;
  const FockVector& big = u.size() <= v.size() ? v : u;
  Rational acc = 0;
  for (const auto& [s, c] : small.terms()) {
    Rational d = big.coeff(s);
    if (d != 0) acc += c * d * Rational(gram(s));
  }
  return acc;
}

SignedSqrtRational amplitude(const OccState& bra, const FockVector& v) {
  Rational c = v.coeff(bra);
  if (c == 0) return SignedSqrtRational();
  return SignedSqrtRational::from_rational(c) *
         SignedSqrtRational::sqrt_of(Rational(gram(bra)), 1);
}

std::vector<int> occ_to_weights(const OccState& s) {
  int N = s.modes();
  std::vector<int> w;
  w.reserve(2 * (N - 1));
  int run = 0;
  for (int k = 1; k <= N - 1; ++k) {
    run += s.na[k - 1];
    w.push_back(run - k * s.na[k]);
  }
  run = 0;
  for (int k = 1; k <= N - 1; ++k) {
    run += s.nb[k - 1];
    w.push_back(-run + k * s.nb[k]);
  }
  return w;
}

namespace {

void compositions(int total, int parts, std::vector<int>& cur,
                  std::vector<std::vector<int>>& out) {
  if (parts == 1) {
    cur.push_back(total);
    out.push_back(cur);
    cur.pop_back();
    return;
  }
  for (int x = 0; x <= total; ++x) {
    cur.push_back(x);
    compositions(total - x, parts - 1, cur, out);
    cur.pop_back();
  }
}

std::vector<std::vector<int>> compositions(int total, int parts) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  compositions(total, parts, cur, out);
  return out;
}

}  // namespace

std::vector<OccState> basis_states(int N, int total_a, int total_b) {
  if (N < 2) throw std::invalid_argument("basis_states: need N >= 2");
  if (total_a < 0 || total_b < 0)
    throw std::invalid_argument("basis_states: negative totals");
  std::vector<OccState> out;
  auto as = compositions(total_a, N);
  auto bs = compositions(total_b, N);
  out.reserve(as.size() * bs.size());
  for (const auto& na : as)
    for (const auto& nb : bs) out.push_back(OccState{na, nb});
  return out;
}

bool homogeneous_totals(const FockVector& v, int& total_a, int& total_b) {
  if (v.empty()) return false;
  auto it = v.terms().begin();
  total_a = it->first.total_a();
  total_b = it->first.total_b();
  for (const auto& [s, c] : v.terms())
    if (s.total_a() != total_a || s.total_b() != total_b) return false;
  return true;
}

std::string render(const OccState& s) {
  std::string out = "|";
  for (std::size_t i = 0; i < s.na.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(s.na[i]);
  }
  out += ";";
  for (std::size_t i = 0; i < s.nb.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(s.nb[i]);
  }
  out += ">";
  return out;
}

std::string render(const FockVector& v) {
  if (v.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [s, c] : v.terms()) {
    Rational a = c;
    if (first) {
      if (a < 0) {
        out += "-";
        a = -a;
      }
      first = false;
    } else {
      out += (a < 0) ? " - " : " + ";
      if (a < 0) a = -a;
    }
    out += a.str();
    out += " * ";
    out += render(s);
  }
  return out;
}

}  // namespace sbcg
