#pragma once

#include "sbcg/exact.hpp"
#include "sbcg/fock.hpp"
#include "sbcg/invariants.hpp"

namespace sbcg {

// Expansion coefficient of the pair-killing projector at order q, for a
// two-mode family pair with totals (na, nb).  l_q(0, ..) = 1 and
// l_q(q+1)/l_q(q) = -1/((q+1)(na+nb-q)).
Rational l_q(int q, int na, int nb);

// Same coefficient for an N-mode family pair: the recursion shifts by
// N - 2, so L_q(q, na, nb, 2) == l_q(q, na, nb).
Rational L_q(int q, int na, int nb, int N);

// Normalization of the r-pair channel projector,
// (na+nb+N-2r-1)! / (r! (na+nb+N-r-1)!), evaluated on the totals of the
// state the projector acts on.
Rational N_r(int r, int na, int nb, int N);

// P0: annihilate every contracted pair.  Input must be homogeneous in
// both totals; the image satisfies k_minus(P0 v) = 0 and P0 fixes any
// already-constrained vector.
FockVector apply_P0(const FockVector& v, int N, Flavor flavor);

// P_r = N_r k_plus^r P0 k_minus^r, the projector onto the channel with
// exactly r contracted pairs.  Requires r <= min(total_a, total_b).
FockVector apply_Pr(const FockVector& v, int r, int N, Flavor flavor);

// <bra| P_r |ket> between unit-normalized occupation states.  Zero when
// the two states live in different total or weight sectors.
SignedSqrtRational matrix_element_Pr(const OccState& bra, const OccState& ket,
                                     int r, int N, Flavor flavor);

}  // namespace sbcg
