#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "decomp/complex.hpp"
#include "decomp/decomposition.hpp"
#include "decomp/poset.hpp"
#include "decomp/rational.hpp"
#include "decomp/realization.hpp"

namespace decomp {

// Ground elements are 1..n externally and bits 0..n-1 in masks.
struct Matroid {
    int n = 0;
    int rank = 0;
    std::vector<std::uint32_t> bases;  // sorted distinct masks, all of size `rank`
};

Matroid uniform_matroid(int r, int n);

// Edges index the ground set; bases are the maximal spanning forests.
Matroid graphic_matroid(int vertices, const std::vector<std::pair<int, int>>& edges);

// Validates the basis exchange axiom exhaustively for n <= 10 and rejects
// with a witness pair on failure.
Matroid matroid_from_bases(int n, std::vector<std::uint32_t> bases);

int matroid_rank(const Matroid& m, std::uint32_t a);
std::uint32_t matroid_closure_of(const Matroid& m, std::uint32_t a);
bool is_simple(const Matroid& m);
bool is_loopfree(const Matroid& m);

struct FlatLattice {
    Poset poset;
    std::vector<std::uint32_t> flats;  // aligned with poset element ids
};

// Flats ordered by inclusion, named by their ground subsets (so n <= 9).
FlatLattice lattice_of_flats(const Matroid& m);

// Atom realization of a lattice, checked against its maximal decomposition
// set.  The check passing is a theorem, so failure is an internal error.
Realization verified_atom_realization(const Poset& lattice, const DecompositionSet& gmax);

struct MatroidType {
    std::vector<std::uint32_t> bases;  // the weight-maximizing bases, sorted
};

// Convention: the type of a weight vector collects the bases of MAXIMUM
// total weight.
MatroidType matroid_type(const Matroid& m, const std::vector<Rat>& w);

bool is_loopfree_type(const Matroid& m, const MatroidType& t);

// Types are ordered by reversed inclusion of bases: the all-bases type is
// the unique minimum.
bool type_leq(const MatroidType& a, const MatroidType& b);

// All loopfree matroid types, found by scanning every ordered set partition
// of the ground set as a weight pattern (the type only depends on the weak
// order of the weights).  Deterministic order.
std::vector<MatroidType> bergman_types(const Matroid& m, int max_n = 8);

// The flats that are tight in every basis of the type.
std::vector<int> psi_flats(const Matroid& m, const FlatLattice& l, const MatroidType& t);

struct BergmanCheck {
    bool ok = false;
    std::string reason;
};

// Full theorem check: psi_flats embeds the loopfree types into
// D(L_M, G_max), order-preserving both ways, with image exactly the faces
// containing bottom and top, and weight vectors built from generating
// chains recover each face.
BergmanCheck verify_bergman_embedding(const Matroid& m, std::size_t max_chains = 1000000);

struct FanCone {
    std::vector<int> face_members;         // lattice element ids
    std::vector<std::uint32_t> ray_flats;  // proper flats of the face, as ground masks
};

struct BergmanFan {
    int n = 0;
    bool connected = true;
    // All-ones first; for disconnected matroids the component incidence
    // vectors follow (they span extra lineality).
    std::vector<std::uint32_t> lineality;
    std::vector<FanCone> cones;
};

BergmanFan bergman_fan_cones(const Matroid& m, std::size_t max_chains = 1000000);

struct MembershipResult {
    bool inside = false;
    std::vector<int> face_members;  // lattice ids, empty when outside
};

// Level-set membership test: a weight vector lies in the fan iff all of its
// proper level sets are flats; the face is then the closure of the level
// flats together with bottom and top.
MembershipResult membership_test(const Matroid& m, const FlatLattice& l,
                                 const DecompositionSet& gmax, const std::vector<Rat>& w);

} // namespace decomp
