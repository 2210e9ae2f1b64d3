#include "sbcg/isb.hpp"

#include <stdexcept>
#include <utility>

#include "sbcg/projector.hpp"

namespace sbcg {

namespace {

// partner-doublet rotation for the two-mode flavor: x~_1 = x_2, x~_2 = -x_1
constexpr int kEps[2][2] = {{0, 1}, {-1, 0}};

LinearOp tilde(int alpha0, bool creation, bool family_b)
{
  return [alpha0, creation, family_b](const OccState& s) {
    FockVector out(s.modes());
    for (int j = 0; j < 2; ++j) {
      int e = kEps[alpha0][j];
      if (e == 0) continue;
      LinearOp base = family_b ? (creation ? create_b(j + 1) : annih_b(j + 1))
                               : (creation ? create_a(j + 1) : annih_a(j + 1));
      out += Rational(e) * base(s);
    }
    return out;
  };
}

LinearOp btilde(int alpha0) { return tilde(alpha0, false, true); }
LinearOp btilde_dag(int alpha0) { return tilde(alpha0, true, true); }
LinearOp atilde(int alpha0) { return tilde(alpha0, false, false); }
LinearOp atilde_dag(int alpha0) { return tilde(alpha0, true, false); }

void validate_op(const IsbOp& op)
{
  validate_flavor(op.flavor, op.N);
  if (op.alpha < 1 || op.alpha > op.N)
    throw std::out_of_range("isb: alpha outside 1..N");
}

// the dressed creation as a basis-state action; the divisor reads the
// totals of the state the operator eats
LinearOp dressed(const IsbOp& op)
{
  validate_op(op);
  const LinearOp kp = k_plus(op.flavor, op.N);
  const int a0 = op.alpha - 1;
  if (op.family == IsbFamily::A) {
    LinearOp partner = (op.flavor == Flavor::Su2) ? btilde(a0) : annih_b(op.alpha);
    return [kp, partner, a0, N = op.N](const OccState& s) {
      FockVector out = create_a(a0 + 1)(s);
      FockVector w = apply(kp, partner(s));
      if (!w.empty()) {
        int t = s.total_a() + s.total_b();
        out += Rational(-1, t + N - 1) * w;
      }
      return out;
    };
  }
  LinearOp partner = (op.flavor == Flavor::Su2) ? atilde(a0) : annih_a(op.alpha);
  const bool su2 = (op.flavor == Flavor::Su2);
  return [kp, partner, a0, N = op.N, su2](const OccState& s) {
    FockVector out = create_b(a0 + 1)(s);
    FockVector w = apply(kp, partner(s));
    if (!w.empty()) {
      int t = s.total_a() + s.total_b();
      out += (su2 ? Rational(1, t + 1) : Rational(-1, t + N - 1)) * w;
    }
    return out;
  };
}

}  // namespace

FockVector isb_apply(const IsbOp& op, const FockVector& v)
{
  return apply(dressed(op), v);
}

FockVector isb_adjoint_apply(const IsbOp& op, const FockVector& v)
{
  validate_op(op);
  if (v.empty()) return FockVector(op.N);
  int ta = 0, tb = 0;
  if (!homogeneous_totals(v, ta, tb))
    throw std::invalid_argument("isb_adjoint_apply: input must have fixed totals");
  if (op.family == IsbFamily::A) --ta; else --tb;
  if (ta < 0 || tb < 0) return FockVector(op.N);

  const LinearOp up = dressed(op);
  FockVector out(op.N);
  for (const auto& s : basis_states(op.N, ta, tb)) {
    Rational c = inner(apply(up, FockVector::monomial(s)), v);
    if (c != 0) out.add(s, c / Rational(gram(s)));
  }
  return out;
}

bool isb_weak_equality_check(const IsbOp& op, const FockVector& v)
{
  validate_op(op);
  LinearOp bare = (op.family == IsbFamily::A) ? create_a(op.alpha) : create_b(op.alpha);
  return isb_apply(op, v) == apply_P0(apply(bare, v), op.N, op.flavor);
}

SymmetricState build_symmetric_state(const OccState& labels, Flavor flavor)
{
  const int N = labels.modes();
  validate_flavor(flavor, N);
  FockVector v = FockVector::monomial(make_state(std::vector<int>(N, 0), std::vector<int>(N, 0)));
  for (int a = N; a >= 1; --a)
    for (int k = 0; k < labels.nb[a - 1]; ++k)
      v = isb_apply({IsbFamily::B, a, flavor, N}, v);
  for (int a = N; a >= 1; --a)
    for (int k = 0; k < labels.na[a - 1]; ++k)
      v = isb_apply({IsbFamily::A, a, flavor, N}, v);

  Rational weight(gram(labels));
  Rational nsq = inner(v, v) / weight;
  if (nsq == 0) throw std::domain_error("build_symmetric_state: state vanished");
  return SymmetricState{std::move(v), weight, sqrt_of(nsq, 1), sqrt_of(1 / nsq, 1)};
}

CoupledState build_coupled_state(const OccState& reduced_labels, int r, Flavor flavor)
{
  if (r < 0) throw std::domain_error("build_coupled_state: negative raise count");
  const int N = reduced_labels.modes();
  SymmetricState base = build_symmetric_state(reduced_labels, flavor);
  const int t0 = reduced_labels.total_a() + reduced_labels.total_b();

  Rational g0 = inner(base.state, base.state);
  FockVector raised = apply_pow(k_plus(flavor, N), r, base.state);
  Rational gw = inner(raised, raised);

  auto closed = [&](int t) {
    return Rational(factorial(r) * factorial(t + N + r - 1), factorial(t + N - 1));
  };
  RaiseNormStatus norms;
  norms.exact_ratio = gw / g0;
  norms.reduced_reading = closed(t0);
  norms.raised_reading = closed(t0 + 2 * r);
  norms.reduced_matches = (norms.exact_ratio == norms.reduced_reading);
  norms.raised_matches = (norms.exact_ratio == norms.raised_reading);

  SignedSqrtRational normalization = sqrt_of(base.monomial_weight / gw, 1);
  return CoupledState{std::move(raised), base.monomial_weight, normalization, norms};
}

namespace {

// RHS closed forms of the dressed commutators on a pair-free vector of
// totals t.  The exact two-mode forms carry the tilded partner doublet;
// `untilded` selects the plain-bilinear variant (two-mode only; identical
// for the N-mode flavor).
FockVector rhs_a_commutator(const FockVector& pv, int t, int a0, int b0, int N, Flavor flavor,
                            bool untilded)
{
  const LinearOp kp = k_plus(flavor, N);
  FockVector rhs(N);
  if (a0 == b0) rhs += pv;
  FockVector mid(N);
  if (flavor == Flavor::Su2 && !untilded)
    mid = apply(btilde_dag(a0), apply(btilde(b0), pv));
  else
    mid = apply(create_b(a0 + 1), apply(annih_b(b0 + 1), pv));
  if (!mid.empty()) rhs += Rational(-1, t + N - 1) * mid;

  FockVector third(N);
  if (flavor == Flavor::Su2)
    third = apply(kp, apply(btilde(b0), apply(annih_a(a0 + 1), pv)));
  else
    third = apply(kp, apply(annih_a(a0 + 1), apply(annih_b(b0 + 1), pv)));
  if (!third.empty())
    third *= Rational(1, (t + N - 1) * (t + N - 2));
  rhs += third;
  return rhs;
}

FockVector rhs_b_commutator(const FockVector& pv, int t, int a0, int b0, int N, Flavor flavor,
                            bool untilded)
{
  const LinearOp kp = k_plus(flavor, N);
  FockVector rhs(N);
  if (a0 == b0) rhs += pv;
  if (flavor == Flavor::Su2) {
    FockVector mid(N);
    Rational c1;
    if (untilded) {
      mid = apply(create_a(a0 + 1), apply(annih_a(b0 + 1), pv));
      c1 = Rational(1, t + 1);
    } else {
      mid = apply(atilde_dag(a0), apply(atilde(b0), pv));
      c1 = Rational(-1, t + 1);
    }
    if (!mid.empty()) rhs += c1 * mid;
    FockVector third = apply(kp, apply(atilde(b0), apply(annih_b(a0 + 1), pv)));
    if (!third.empty()) rhs += Rational(-1, t * (t + 1)) * third;
    return rhs;
  }
  FockVector mid = apply(create_a(a0 + 1), apply(annih_a(b0 + 1), pv));
  if (!mid.empty()) rhs += Rational(-1, t + N - 1) * mid;
  FockVector third = apply(kp, apply(annih_a(b0 + 1), apply(annih_b(a0 + 1), pv)));
  if (!third.empty()) rhs += Rational(1, (t + N - 1) * (t + N - 2)) * third;
  return rhs;
}

}  // namespace

CommutatorReport isb_commutator_check(int N, Flavor flavor, int max_total)
{
  validate_flavor(flavor, N);
  CommutatorReport rep;
  for (int ta = 0; ta <= max_total; ++ta) {
    for (int tb = 0; ta + tb <= max_total; ++tb) {
      for (const auto& s : basis_states(N, ta, tb)) {
        FockVector mono = FockVector::monomial(s);

        // dressed creations commute pairwise on every state
        for (int a = 1; a <= N; ++a) {
          for (int b = a; b <= N; ++b) {
            IsbOp Aa{IsbFamily::A, a, flavor, N}, Ab{IsbFamily::A, b, flavor, N};
            IsbOp Ba{IsbFamily::B, a, flavor, N}, Bb{IsbFamily::B, b, flavor, N};
            if (isb_apply(Aa, isb_apply(Ab, mono)) != isb_apply(Ab, isb_apply(Aa, mono)))
              ++rep.creation_pair_failures;
            if (isb_apply(Ba, isb_apply(Bb, mono)) != isb_apply(Bb, isb_apply(Ba, mono)))
              ++rep.creation_pair_failures;
          }
          for (int b = 1; b <= N; ++b) {
            IsbOp Aa{IsbFamily::A, a, flavor, N}, Bb{IsbFamily::B, b, flavor, N};
            if (isb_apply(Aa, isb_apply(Bb, mono)) != isb_apply(Bb, isb_apply(Aa, mono)))
              ++rep.creation_pair_failures;
          }
        }

        FockVector pv = apply_P0(mono, N, flavor);
        if (pv.empty()) continue;
        const int t = ta + tb;
        for (int a = 1; a <= N; ++a) {
          IsbOp A_a{IsbFamily::A, a, flavor, N};
          IsbOp B_a{IsbFamily::B, a, flavor, N};
          FockVector adjA_pv = isb_adjoint_apply(A_a, pv);
          FockVector adjB_pv = isb_adjoint_apply(B_a, pv);
          for (int b = 1; b <= N; ++b) {
            ++rep.cases;
            IsbOp A_b{IsbFamily::A, b, flavor, N};
            IsbOp B_b{IsbFamily::B, b, flavor, N};

            FockVector lhs = isb_adjoint_apply(A_a, isb_apply(A_b, pv)) - isb_apply(A_b, adjA_pv);
            if (lhs != rhs_a_commutator(pv, t, a - 1, b - 1, N, flavor, false))
              ++rep.exact_a_failures;
            if (lhs != rhs_a_commutator(pv, t, a - 1, b - 1, N, flavor, true))
              ++rep.untilded_a_failures;

            lhs = isb_adjoint_apply(B_a, isb_apply(B_b, pv)) - isb_apply(B_b, adjB_pv);
            if (lhs != rhs_b_commutator(pv, t, a - 1, b - 1, N, flavor, false))
              ++rep.exact_b_failures;
            if (lhs != rhs_b_commutator(pv, t, a - 1, b - 1, N, flavor, true))
              ++rep.untilded_b_failures;
          }
        }
      }
    }
  }
  return rep;
}

namespace {

// b-mode swap with alternating sign, the unitary identifying the
// epsilon pairing with the two-mode dot pairing
FockVector swap_map(const FockVector& v)
{
  FockVector out(2);
  for (const auto& [s, c] : v.terms()) {
    OccState t = s;
    std::swap(t.nb[0], t.nb[1]);
    out.add(t, (s.nb[1] % 2 == 0) ? c : -c);
  }
  return out;
}

}  // namespace

long isb_reduction_check(int max_total)
{
  long bad = 0;
  const int sigma[2] = {-1, 1};  // sign carried by the B-side map, per mode
  const int flip[2] = {1, 0};
  const LinearOp kp_sun = k_plus(Flavor::SuN, 2);
  const LinearOp kp_su2 = k_plus(Flavor::Su2, 2);

  for (int ta = 0; ta <= max_total; ++ta) {
    for (int tb = 0; ta + tb <= max_total; ++tb) {
      for (const auto& s : basis_states(2, ta, tb)) {
        FockVector v = FockVector::monomial(s);
        FockVector pv = swap_map(v);
        for (int a0 = 0; a0 < 2; ++a0) {
          IsbOp adag_su2{IsbFamily::A, a0 + 1, Flavor::Su2, 2};
          IsbOp adag_sun{IsbFamily::A, a0 + 1, Flavor::SuN, 2};
          if (swap_map(isb_apply(adag_su2, v)) != isb_apply(adag_sun, pv)) ++bad;

          IsbOp bdag_sun{IsbFamily::B, a0 + 1, Flavor::SuN, 2};
          IsbOp bdag_su2{IsbFamily::B, flip[a0] + 1, Flavor::Su2, 2};
          if (isb_apply(bdag_sun, pv) != Rational(sigma[a0]) * swap_map(isb_apply(bdag_su2, v)))
            ++bad;
        }
        // the three terms of the dressed commutator closed forms map as well
        for (int a0 = 0; a0 < 2; ++a0) {
          for (int b0 = 0; b0 < 2; ++b0) {
            FockVector l = swap_map(apply(btilde_dag(a0), apply(btilde(b0), v)));
            FockVector r = apply(create_b(a0 + 1), apply(annih_b(b0 + 1), pv));
            if (l != r) ++bad;

            l = swap_map(apply(kp_su2, apply(btilde(b0), apply(annih_a(a0 + 1), v))));
            r = apply(kp_sun, apply(annih_a(a0 + 1), apply(annih_b(b0 + 1), pv)));
            if (l != r) ++bad;

            l = apply(create_a(a0 + 1), apply(annih_a(b0 + 1), pv));
            r = Rational(sigma[a0] * sigma[b0]) *
                swap_map(apply(atilde_dag(flip[a0]), apply(atilde(flip[b0]), v)));
            if (l != r) ++bad;

            l = apply(kp_sun, apply(annih_a(b0 + 1), apply(annih_b(a0 + 1), pv)));
            r = Rational(-sigma[a0] * sigma[b0]) *
                swap_map(apply(kp_su2, apply(atilde(flip[b0]), apply(annih_b(flip[a0] + 1), v))));
            if (l != r) ++bad;
          }
        }
      }
    }
  }
  return bad;
}

}  // namespace sbcg
