#pragma once

#include "sbcg/exact.hpp"
#include "sbcg/fock.hpp"
#include "sbcg/invariants.hpp"

namespace sbcg {

enum class IsbFamily { A, B };

// one dressed (pair-free) creation operator; alpha is 1-based
struct IsbOp {
  IsbFamily family;
  int alpha;
  Flavor flavor;
  int N;
};

// Dressed creation on a homogeneous vector: the bare creation plus the
// invariant raising of the partner-family annihilator, weighted by a
// divisor in the input totals.  The annihilator acts first, so the
// divisor is never evaluated on a state it would vanish on.
FockVector isb_apply(const IsbOp& op, const FockVector& v);

// adjoint of the dressed creation, obtained from inner() on the sector
// one quantum below
FockVector isb_adjoint_apply(const IsbOp& op, const FockVector& v);

// dressed creation == P0 ∘ bare creation, valid on pair-free vectors
bool isb_weak_equality_check(const IsbOp& op, const FockVector& v);

// Monomial of dressed creations on the vacuum.  The exponents are the
// occupation labels; the implicit normalization carries the product of
// exponent factorials, mirroring a normalized occupation ket.
struct SymmetricState {
  FockVector state;          // raw operator-monomial image of the vacuum
  Rational monomial_weight;  // product of exponent factorials
  SignedSqrtRational norm;   // length of state/sqrt(monomial_weight)
  SignedSqrtRational normalization;  // reciprocal of norm
};

SymmetricState build_symmetric_state(const OccState& labels, Flavor flavor);

// norm growth of r invariant raises on a pair-free state, measured
// exactly and compared against the closed form
//   r! (t + N + r - 1)! / (t + N - 1)!
// evaluated once on the pre-raise totals (correct) and once on the
// post-raise totals (the misreading; agrees only at r = 0)
struct RaiseNormStatus {
  Rational exact_ratio;
  Rational reduced_reading;
  Rational raised_reading;
  bool reduced_matches = false;
  bool raised_matches = false;
};

// the symmetric state of the given labels, raised r times
struct CoupledState {
  FockVector state;
  Rational monomial_weight;
  SignedSqrtRational normalization;  // unit-normalizes state/sqrt(monomial_weight)
  RaiseNormStatus norms;
};

CoupledState build_coupled_state(const OccState& reduced_labels, int r, Flavor flavor);

// Commutation relations of the dressed operators, swept over every
// pair-free vector with totals <= max_total and all index pairs.
// The closed forms for [A, A†] and [B, B†] are checked in two variants:
// the exact one (partner-family tilded bilinears for the two-mode flavor)
// and the untilded variant; for the N-mode flavor the two coincide.
struct CommutatorReport {
  long cases = 0;
  long creation_pair_failures = 0;  // dressed creations failing to commute
  long exact_a_failures = 0;
  long exact_b_failures = 0;
  long untilded_a_failures = 0;
  long untilded_b_failures = 0;
};

CommutatorReport isb_commutator_check(int N, Flavor flavor, int max_total);

// Embedding of the two-mode epsilon pairing into the N = 2 dot pairing:
// checks that the dressed operators map onto each other under the b-mode
// swap (A† unchanged, B† flipping index and sign).  Returns the number
// of states where the identification fails.
long isb_reduction_check(int max_total);

}  // namespace sbcg
