#pragma once

#include <vector>

#include "sbcg/exact.hpp"
#include "sbcg/fock.hpp"
#include "sbcg/invariants.hpp"

namespace sbcg {

// Angular momenta stored doubled so half-integers stay integral.
// m is always m1 + m2.
struct SU2Coupling {
  int two_j1, two_m1, two_j2, two_m2, two_j;

  int two_m() const { return two_m1 + two_m2; }
  int r() const { return (two_j1 + two_j2 - two_j) / 2; }
};

// throws std::invalid_argument on malformed labels: negative j, |m| > j,
// parity mismatch between j and m, or j outside the triangle range
void validate(const SU2Coupling& c);

struct SUNCoupling {
  int N;
  std::vector<int> na;  // occupation labels of the a-family state
  std::vector<int> nb;
  int r;
};

void validate(const SUNCoupling& c);

// conjugate b-side labels: nbar_1 = total_a - na_1 + nb_1,
// nbar_i = nb_i - na_i for i >= 2.  May contain negative entries;
// those couplings have no stretched reference state.
std::vector<int> nbar(const SUNCoupling& c);

// ---- route one: closed-form coefficients ----

// factorial closed form with the series bounded by its zero rule
SignedSqrtRational cgc_su2(const SU2Coupling& c);

// N-mode closed form; throws std::domain_error when nbar has a negative
// entry (the formula needs the conjugate labels to exist)
SignedSqrtRational cgc_sun(const SUNCoupling& c);

// ---- route two: projector matrix elements ----

struct ProjectorCgc {
  SignedSqrtRational value;
  // false when only the magnitude could be fixed (no valid reference bra);
  // value then carries sign +1 by convention
  bool sign_definite = true;
};

ProjectorCgc cgc_via_projector(const SU2Coupling& c);
ProjectorCgc cgc_via_projector(const SUNCoupling& c);

// full decomposition of a decoupled occupation state over the coupling
// channels; terms whose projection vanishes are omitted.  coeff is the
// weight of the normalized channel component inside the normalized state
// (so the squares sum to one); its sign follows the stretched-reference
// convention.  At N = 2 every weight space is one-dimensional and coeff
// coincides with the closed-form coefficient; for larger N a weight can
// repeat inside a channel and the closed form measures only the overlap
// with the reference direction.
struct CgTerm {
  int r;
  SignedSqrtRational coeff;
  bool sign_definite;
  FockVector projected;  // unnormalized channel component, sums back to the state
};

std::vector<CgTerm> cg_series(const OccState& s, Flavor flavor);

// ---- stretched-reference closed forms (cross-checks for the sign route) ----

// <j1 j1 j2 m-j1 | P_r | j1 m1 j2 m2> between unit states, closed form
SignedSqrtRational stretched_overlap_closed(const SU2Coupling& c);

// diagonal <ref|P_r|ref> on the stretched reference, rational closed form
// built on the alternating factorial sum evaluated by densum
Rational stretched_diagonal_closed(int two_j1, int two_j2, int two_m, int r);

// positive square root of the diagonal in fully closed form
SignedSqrtRational stretched_amplitude_closed(int two_j1, int two_j2, int two_m, int r);

// N-mode analogues on the reference (total_a, 0, .., 0 | nbar)
SignedSqrtRational stretched_overlap_closed(const SUNCoupling& c);
Rational stretched_diagonal_closed(const SUNCoupling& c);

// ---- the two-mode reduction of the N-mode formula ----

// relabeling that embeds an su2 coupling into the N = 2 dot-pairing
// convention (the b-side mode order swaps)
SUNCoupling su2_as_sun(const SU2Coupling& c);

// (-1)^(j1-m1), the sign the embedding picks up from identifying the
// epsilon-paired b modes with the dot-paired ones
int reduction_phase(const SU2Coupling& c);

}  // namespace sbcg
