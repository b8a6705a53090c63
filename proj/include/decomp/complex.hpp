#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "decomp/decomposition.hpp"
#include "decomp/poset.hpp"

namespace decomp {

// A face of the decomposition complex: the closure of a chain.  `members` is
// the closed element set (sorted ids), `generator` the first chain found
// whose closure it is (listed in increasing poset order).
struct Face {
    std::vector<int> members;
    std::vector<int> generator;
};

// The faces of a decomposition complex ordered by inclusion.  Faces are
// stored sorted by (cardinality, lexicographic member list) so that indices,
// and hence all serialized output, are reproducible.
class FacePoset {
public:
    FacePoset() = default;
    explicit FacePoset(std::vector<Face> faces);

    int size() const { return static_cast<int>(faces_.size()); }
    const Face& face(int i) const { return faces_[i]; }
    const std::vector<Face>& faces() const { return faces_; }

    // Inclusion of member sets.
    bool face_leq(int i, int j) const;
    const std::vector<std::pair<int, int>>& cover_pairs() const { return covers_; }

    std::optional<int> index_of(const std::vector<int>& members) const;
    std::vector<int> maximal_faces() const;
    std::map<std::size_t, std::size_t> counts_by_cardinality() const;

    // The same data as an abstract Poset (element names are the braced
    // member-name lists from `ground`), for gradedness and isomorphism
    // questions about the face poset itself.
    Poset as_poset(const Poset& ground) const;

private:
    std::vector<Face> faces_;
    std::map<std::vector<int>, int> index_;
    std::vector<std::pair<int, int>> covers_;
};

// The decomposition complex D(P, G): closures of all nonempty chains,
// deduplicated.  Enumerates chains depth-first with the closure carried
// along; throws resource_error when more than `max_chains` chains exist.
FacePoset decomposition_complex(const Poset& p, const DecompositionSet& g,
                                std::size_t max_chains = 1000000);

// The order complex of P (all nonempty chains as faces).  Independent of the
// closure machinery; serves as the oracle for D(P, G_min).
FacePoset order_complex_face_poset(const Poset& p, std::size_t max_chains = 1000000);

struct FaceCheck {
    bool ok = false;
    std::vector<int> certificate;  // one maximal chain of A when ok
    std::string reason;            // failure explanation when !ok
};

// Membership test for D(P, G) that does not build the complex: A must be
// nonempty and closed, and every maximal chain of A must generate A.
// Requires g symmetric and downward closed.
FaceCheck is_face(const Poset& p, const DecompositionSet& g, const std::vector<int>& a);

// Partition of the maximal chains of the closed set A under the exchange
// moves C -> C \ {z'} ∪ {z}, available whenever some proper (x, z', y) in g
// has x, y in the closure of C and z' in C (z is that member's complement)
// and the result is again a maximal chain of A.  Classes are ordered by
// their first chain in enumeration order.  Requires g symmetric and
// downward closed and A closed.
std::vector<std::vector<std::vector<int>>> chain_classes(const Poset& p,
                                                         const DecompositionSet& g,
                                                         const std::vector<int>& a);

// True iff the induced subposet on the face's members has all pairwise meets
// and joins.  Requires g symmetric and downward closed.
bool verify_face_lattice(const Poset& p, const DecompositionSet& g, const Face& f);

// Pseudo-complex axiom at the label level: every nonempty pairwise
// intersection of face member sets equals the union of the face member sets
// contained in it.
bool check_pseudo_complex(const FacePoset& fp);

// Complex (not just pseudo-complex) at the label level: every pairwise
// intersection of face member sets is empty or is itself a face member set.
bool is_polytopal_complex(const FacePoset& fp);

// A poset together with two faces of its maximal decomposition complex whose
// intersection is closed but not a face (so no maximal chain of it generates
// it).  This is the phenomenon separating pseudo-complexes from complexes.
struct IntersectionExample {
    Poset poset;
    std::vector<int> face_a;
    std::vector<int> face_b;
    std::vector<int> intersection;
};

// Brute-force search for an IntersectionExample: first scans all posets up
// to isomorphism with at most `exhaustive_max_n` elements (deterministic
// order), then falls back to seeded random posets with up to `random_max_n`
// elements.  Returns the first hit.
std::optional<IntersectionExample> find_intersection_counterexample(
    int exhaustive_max_n = 6, int random_max_n = 12, std::size_t random_trials = 20000,
    std::uint64_t seed = 2026);

} // namespace decomp
