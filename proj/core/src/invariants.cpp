#include "sbcg/invariants.hpp"

#include <stdexcept>

namespace sbcg {

void validate_flavor(Flavor flavor, int N)
{
  if (N < 2) throw std::invalid_argument("invariant_op: N must be at least 2");
  if (flavor == Flavor::Su2 && N != 2)
    throw std::invalid_argument("invariant_op: Su2 flavor is defined for N = 2 only");
}

namespace {

FockVector kplus_su2(const OccState& s)
{
  FockVector out(s.modes());
  OccState t = s;
  ++t.na[0]; ++t.nb[1];
  out.add(t, 1);
  t = s;
  ++t.na[1]; ++t.nb[0];
  out.add(t, -1);
  return out;
}

FockVector kminus_su2(const OccState& s)
{
  FockVector out(s.modes());
  if (s.na[0] > 0 && s.nb[1] > 0) {
    OccState t = s;
    --t.na[0]; --t.nb[1];
    out.add(t, Rational(s.na[0]) * s.nb[1]);
  }
  if (s.na[1] > 0 && s.nb[0] > 0) {
    OccState t = s;
    --t.na[1]; --t.nb[0];
    out.add(t, -Rational(s.na[1]) * s.nb[0]);
  }
  return out;
}

FockVector kplus_sun(const OccState& s)
{
  FockVector out(s.modes());
  for (int i = 0; i < s.modes(); ++i) {
    OccState t = s;
    ++t.na[i]; ++t.nb[i];
    out.add(t, 1);
  }
  return out;
}

FockVector kminus_sun(const OccState& s)
{
  FockVector out(s.modes());
  for (int i = 0; i < s.modes(); ++i) {
    if (s.na[i] == 0 || s.nb[i] == 0) continue;
    OccState t = s;
    --t.na[i]; --t.nb[i];
    out.add(t, Rational(s.na[i]) * s.nb[i]);
  }
  return out;
}

FockVector kappa_plus(const OccState& s)
{
  // a†·b, lowers the b count by one and raises the a count
  FockVector out(s.modes());
  for (int i = 0; i < s.modes(); ++i) {
    if (s.nb[i] == 0) continue;
    OccState t = s;
    ++t.na[i]; --t.nb[i];
    out.add(t, s.nb[i]);
  }
  return out;
}

FockVector kappa_minus(const OccState& s)
{
  FockVector out(s.modes());
  for (int i = 0; i < s.modes(); ++i) {
    if (s.na[i] == 0) continue;
    OccState t = s;
    --t.na[i]; ++t.nb[i];
    out.add(t, s.na[i]);
  }
  return out;
}

}  // namespace

LinearOp invariant_op(InvariantKind kind, int N)
{
  validate_flavor(kind.flavor, N);
  const bool su2 = (kind.flavor == Flavor::Su2);
  switch (kind.op) {
    case InvariantOpName::KPlus:
      return su2 ? LinearOp(kplus_su2) : LinearOp(kplus_sun);
    case InvariantOpName::KMinus:
      return su2 ? LinearOp(kminus_su2) : LinearOp(kminus_sun);
    case InvariantOpName::KZero:
      return [N](const OccState& s) {
        FockVector out(s.modes());
        out.add(s, Rational(s.total_a() + s.total_b() + N) / 2);
        return out;
      };
    case InvariantOpName::KappaPlus:
    case InvariantOpName::KappaMinus:
    case InvariantOpName::KappaZero:
      if (!su2)
        throw std::invalid_argument("invariant_op: kappa operators exist for Su2 flavor only");
      if (kind.op == InvariantOpName::KappaPlus) return LinearOp(kappa_plus);
      if (kind.op == InvariantOpName::KappaMinus) return LinearOp(kappa_minus);
      return [](const OccState& s) {
        FockVector out(s.modes());
        out.add(s, Rational(s.total_a() - s.total_b()) / 2);
        return out;
      };
  }
  throw std::logic_error("invariant_op: unreachable");
}

LinearOp k_plus(Flavor flavor, int N)
{
  return invariant_op({InvariantOpName::KPlus, flavor}, N);
}

LinearOp k_minus(Flavor flavor, int N)
{
  return invariant_op({InvariantOpName::KMinus, flavor}, N);
}

std::vector<FockVector> commutator(const LinearOp& x, const LinearOp& y,
                                   const std::vector<OccState>& domain)
{
  std::vector<FockVector> out;
  out.reserve(domain.size());
  for (const auto& s : domain) {
    FockVector v(s.modes());
    v.add(s, 1);
    out.push_back(apply(x, apply(y, v)) - apply(y, apply(x, v)));
  }
  return out;
}

std::vector<LinearOp> total_generators(int N, Flavor flavor)
{
  validate_flavor(flavor, N);
  std::vector<LinearOp> gens;
  if (flavor == Flavor::Su2) {
    // both families in the fundamental: J+ = a†1 a2 + b†1 b2, adjoint, J3
    auto ladder = [](int i, int j) {
      return LinearOp([i, j](const OccState& s) {
        FockVector out(s.modes());
        if (s.na[j] > 0) {
          OccState t = s;
          ++t.na[i]; --t.na[j];
          out.add(t, s.na[j]);
        }
        if (s.nb[j] > 0) {
          OccState t = s;
          ++t.nb[i]; --t.nb[j];
          out.add(t, s.nb[j]);
        }
        return out;
      });
    };
    gens.push_back(ladder(0, 1));
    gens.push_back(ladder(1, 0));
    gens.push_back([](const OccState& s) {
      FockVector out(s.modes());
      Rational w = Rational(s.na[0] - s.na[1] + s.nb[0] - s.nb[1]) / 2;
      out.add(s, w);
      return out;
    });
    return gens;
  }
  // E_ij moves one a quantum from j to i and one b quantum from i to j
  // (the conjugate action carries the minus sign on the b side)
  for (int i = 0; i < N; ++i) {
    for (int j = 0; j < N; ++j) {
      if (i == j) continue;
      gens.push_back([i, j](const OccState& s) {
        FockVector out(s.modes());
        if (s.na[j] > 0) {
          OccState t = s;
          ++t.na[i]; --t.na[j];
          out.add(t, s.na[j]);
        }
        if (s.nb[i] > 0) {
          OccState t = s;
          ++t.nb[j]; --t.nb[i];
          out.add(t, -Rational(s.nb[i]));
        }
        return out;
      });
    }
  }
  for (int k = 0; k + 1 < N; ++k) {
    gens.push_back([k](const OccState& s) {
      FockVector out(s.modes());
      Rational w = Rational(s.na[k] - s.na[k + 1]) - Rational(s.nb[k] - s.nb[k + 1]);
      out.add(s, w);
      return out;
    });
  }
  return gens;
}

std::vector<int> sector_key(const OccState& s, Flavor flavor)
{
  const int N = s.modes();
  validate_flavor(flavor, N);
  if (flavor == Flavor::Su2) return {s.na[0] - s.na[1] + s.nb[0] - s.nb[1]};
  const auto w = occ_to_weights(s);
  std::vector<int> key(N - 1);
  for (int k = 0; k < N - 1; ++k) key[k] = w[k] + w[N - 1 + k];
  return key;
}

}  // namespace sbcg
