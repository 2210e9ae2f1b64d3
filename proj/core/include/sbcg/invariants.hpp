#pragma once

#include <vector>

#include "sbcg/fock.hpp"

namespace sbcg {

// Su2 pairs the two families through the antisymmetric invariant
// (epsilon contraction, N = 2 only); SuN pairs them through the dot
// product of an N-plet with a conjugate N-plet.
enum class Flavor { Su2, SuN };

enum class InvariantOpName {
  KPlus,      // invariant raising bilinear
  KMinus,     // its adjoint
  KZero,      // (n_a + n_b + N)/2
  KappaPlus,  // a†·b   (Su2 only)
  KappaMinus, // b†·a   (Su2 only)
  KappaZero   // (n_a - n_b)/2   (Su2 only)
};

struct InvariantKind {
  InvariantOpName op;
  Flavor flavor;
};

// throws std::invalid_argument unless (flavor, N) is a valid combination:
// Su2 requires N == 2, kappa operators require Su2 flavor
void validate_flavor(Flavor flavor, int N);

LinearOp invariant_op(InvariantKind kind, int N);

// convenience spellings used throughout the engine
LinearOp k_plus(Flavor flavor, int N);
LinearOp k_minus(Flavor flavor, int N);

// (xy - yx) applied to each listed basis state
std::vector<FockVector> commutator(const LinearOp& x, const LinearOp& y,
                                   const std::vector<OccState>& domain);

// N^2 - 1 generators of the total (diagonal) group action, as exact
// rational rescalings: ladder pairs E_ij plus Cartan differences H_k.
// Su2 acts on both families in the fundamental; SuN acts on the b family
// with the conjugate-representation sign.
std::vector<LinearOp> total_generators(int N, Flavor flavor);

// Total-weight label conserved by the pairing invariants: the per-family
// weights collapse to their flavor-appropriate combination (the pair
// ladders shift family weights in opposite directions).
std::vector<int> sector_key(const OccState& s, Flavor flavor);

}  // namespace sbcg
