#pragma once

#include <string>
#include <vector>

#include "decomp/complex.hpp"
#include "decomp/decomposition.hpp"
#include "decomp/poset.hpp"

namespace decomp {

// Building sets and nested sets live in a poset with a unique minimum.
// A building set is passed around as a sorted list of element ids, never
// containing the minimum itself.

// Maximal elements of {g in building : g <= y}.
std::vector<int> factors(const Poset& p, const std::vector<int>& building, int y);

struct BuildingCheck {
    bool ok = false;
    int witness = -1;  // element where the factorization breaks, -1 when ok
    std::string reason;
};

// For every y above the minimum, forms the product of the factor intervals
// [0,z_i] and checks that joining coordinates gives a bijection onto [0,y]
// that preserves order both ways.
BuildingCheck is_building_set(const Poset& p, const std::vector<int>& building);

// A set S inside the building set is nested when every subset A of S with
// |A| >= 2 has a join and that join lies outside the building set.  A
// comparable pair {a,b} with a < b is therefore never nested (its join b
// stays in the building set), so nested sets are always antichains.
bool is_nested(const Poset& p, const std::vector<int>& building, const std::vector<int>& s);

// Variant that quantifies over antichains of size >= 2 only, the reading
// common elsewhere in the literature.  It admits strictly more sets, for
// example {a,b} with a < b, and on some of those the image of
// nested_embedding stops being a face (the 2x3 grid lattice with its
// join-irreducibles as building set is the smallest case).  Kept as a
// diagnostic so tests can report where the two readings part ways.
bool is_nested_antichain(const Poset& p, const std::vector<int>& building,
                         const std::vector<int>& s);

// All nonempty nested sets ordered by inclusion.  Nestedness is hereditary,
// so this is an abstract simplicial complex.
FacePoset nested_set_complex(const Poset& p, const std::vector<int>& building);

// The trivial decompositions plus every maximal-set decomposition
// (0,z,y) whose top y lies outside the building set.  Not downward closed
// in general.
DecompositionSet nested_target_set(const Poset& p, const std::vector<int>& building);

// S -> {join of A : A subset of S}, with the empty join equal to the
// minimum.  Asserts the image is closed under the target set and generated
// by every one of its maximal chains; a failure contradicts nestedness and
// raises internal_error.  Pass the target set when calling in a loop to
// avoid rebuilding it.
std::vector<int> nested_embedding(const Poset& p, const std::vector<int>& building,
                                  const std::vector<int>& s,
                                  const DecompositionSet* target = nullptr);

struct NestedImageCheck {
    bool ok = false;
    std::string reason;
};

// Full theorem check: the embedding is injective, order-preserving in both
// directions, and its image is exactly the set of faces of
// D(P, nested_target_set) that contain the minimum.
NestedImageCheck verify_nested_image(const Poset& p, const std::vector<int>& building,
                                     std::size_t max_chains = 1000000);

} // namespace decomp
