#pragma once

#include <vector>

#include "sbcg/cgc.hpp"
#include "sbcg/fock.hpp"
#include "sbcg/invariants.hpp"

namespace sbcg {

// all states sharing totals and weights with the seed state
std::vector<OccState> weight_sector(const OccState& seed, Flavor flavor);

// dense exact matrix over a fixed sector basis, column-major action:
// column j holds the expansion of (op basis[j])
struct SectorMatrix {
  std::vector<OccState> basis;
  std::vector<std::vector<Rational>> cols;
};

// matrix of a sector-preserving operator; throws std::invalid_argument
// if the image leaves the spanned sector
SectorMatrix sector_matrix(const LinearOp& op, const std::vector<OccState>& basis);

// Channel projector built without the expansion series: the product
// operator k_plus k_minus is diagonalized on the sector through its
// known spectrum r(total_a + total_b + N - 1 - r), and the projector is
// assembled as the Lagrange product over the other eigenvalues.
// Verifies the annihilating polynomial before returning.
SectorMatrix spectral_projector(const std::vector<OccState>& basis, int r, Flavor flavor);

// classical single-sum coefficient, independent of the factorial form
// used by cgc_su2
SignedSqrtRational racah_cgc(const SU2Coupling& c);

// P0 built without the expansion series.  Two-mode flavor: the full
// symmetric part of the underlying word, a binomial average.  N-mode
// flavor: subtract the exact pair content by solving
// k_minus k_plus u = k_minus v on the lower sector.
FockVector symmetrize_explicit(const OccState& s, Flavor flavor);

}  // namespace sbcg
