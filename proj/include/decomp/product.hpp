#pragma once

#include <array>
#include <cstddef>
#include <vector>

#include "decomp/complex.hpp"
#include "decomp/decomposition.hpp"
#include "decomp/poset.hpp"
#include "decomp/realization.hpp"

namespace decomp {

// Componentwise decomposition set on a product poset.  `pp` must be
// product(g1.poset(), g2.poset()); the pairing is verified.  Witnesses are
// products of the factor witnesses, so the result needs no search.
DecompositionSet product_decomposition_set(const Poset& pp, const DecompositionSet& g1,
                                           const DecompositionSet& g2);

// Side-tagged union on a coproduct poset, plus the coproduct's trivial
// decompositions.  `cp` must be coproduct(g1.poset(), g2.poset()).
DecompositionSet coproduct_decomposition_set(const Poset& cp, const DecompositionSet& g1,
                                             const DecompositionSet& g2);

// Checks that closing a chain inside the product set factors through the
// projections: <C> = <pi1(C)> x <pi2(C)>.  Both sides are computed
// independently.  `gp` should be product_decomposition_set(pp, g1, g2).
bool product_closure_check(const Poset& pp, const DecompositionSet& gp,
                           const DecompositionSet& g1, const DecompositionSet& g2,
                           const std::vector<int>& chain);

struct ProductIsoCertificate {
    FacePoset factor1;
    FacePoset factor2;
    FacePoset product;
    // One entry per face pair: indices into factor1, factor2, product.
    std::vector<std::array<int, 3>> pairs;
};

// Builds and verifies the isomorphism (A1, A2) -> A1 x A2 between the pair
// of factor complexes and the product complex.  A failure here means a
// library bug, not bad input, hence internal_error.
ProductIsoCertificate product_complex_isomorphism(const Poset& pp, const DecompositionSet& gp,
                                                  const DecompositionSet& g1,
                                                  const DecompositionSet& g2,
                                                  std::size_t max_chains = 1000000);

// Coordinate concatenation: phi(a,b) = phi1(a) together with phi2(b)
// shifted past the first ambient block.  Verified against gp.
Realization product_realization(const Poset& pp, const DecompositionSet& gp,
                                const Realization& r1, const Realization& r2);

} // namespace decomp
