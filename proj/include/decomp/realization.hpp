#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "decomp/complex.hpp"
#include "decomp/decomposition.hpp"
#include "decomp/poset.hpp"
#include "decomp/rational.hpp"

namespace decomp {

// An order embedding of a poset into the boolean lattice on coordinates
// 1..n, stored as one bit mask per poset element.  Realizations are what
// turn decomposition complexes into actual polytopes: each element maps to
// the 0/1 incidence vector of its mask.
struct Realization {
    int n = 0;
    std::vector<std::uint64_t> phi;
};

Realization canonical_min_realization(const Poset& p);

// For posets with a bottom element: coordinates are the atoms, and an
// element maps to the set of atoms below it.
Realization atom_realization(const Poset& p);

// Reads each element name as a subset of {1..n} (digit string, "∅" for the
// empty set).  Pass n = -1 to infer the ambient size from the names.
Realization identity_realization(const Poset& p, int n = -1);

Realization realization_from_masks(const Poset& p, int n,
                                   std::vector<std::uint64_t> phi);

struct RealizationCheck {
    bool ok = false;
    std::string reason;
};

RealizationCheck verify_realization(const Poset& p, const DecompositionSet& g,
                                    const Realization& r);

struct ZeroOnePolytope {
    int n = 0;
    std::vector<std::uint64_t> vertices;  // distinct, sorted masks
    std::vector<int> label;               // face member ids, sorted
};

ZeroOnePolytope gamma(const Realization& r, const std::vector<int>& a);

std::vector<Rat> vertex_point(std::uint64_t mask, int n);

// Affine dimension of the vertex set: -1 when empty, 0 for a point.
int affine_dim(const ZeroOnePolytope& poly);

// Exact membership in the convex hull of the vertices.
bool point_in_polytope(const ZeroOnePolytope& poly, const std::vector<Rat>& q);

// All convex combinations of the vertices whose barycentric weights have a
// common denominator between 1 and `denominator`, deduplicated exactly.
std::vector<std::vector<Rat>> grid_points(const ZeroOnePolytope& poly, int denominator);

struct PseudoComplex {
    int n = 0;
    std::vector<std::uint64_t> phi;
    FacePoset faces;
    std::vector<ZeroOnePolytope> cells;  // parallel to faces
};

PseudoComplex realize_complex(const Poset& p, const DecompositionSet& g,
                              const Realization& r, std::size_t max_chains = 1000000);

// Grid test of Γ({x,z,z',y}) = Γ({x,z,y}) ∪ Γ({x,z',y}) for a complementary
// pair of decompositions.
bool union_decomposition_check(const Realization& r, int x, int z, int z_comp, int y,
                               int denominator = 4);

// Grid test of Γ(A) = union of Γ(C) over maximal chains C inside A.
bool chain_cone_cover_check(const Poset& p, const Realization& r,
                            const std::vector<int>& a, int denominator = 4);

bool is_subdivision(const PseudoComplex& fine, const PseudoComplex& coarse,
                    int denominator = 4);

bool is_polytopal_complex(const PseudoComplex& pc);

enum class RealizabilityVerdict { NOT_REALIZABLE, UNKNOWN };

std::string verdict_name(RealizabilityVerdict v);

// Necessary-condition screen: a realizable decomposition complex has a
// graded face poset, so an ungraded one settles the question negatively.
// A graded one settles nothing, hence UNKNOWN rather than REALIZABLE.
RealizabilityVerdict realizability_probe(const Poset& p, const DecompositionSet& g,
                                         std::size_t max_chains = 1000000);

} // namespace decomp
