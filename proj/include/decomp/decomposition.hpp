#pragma once

#include <array>
#include <map>
#include <optional>
#include <vector>

#include "decomp/poset.hpp"

namespace decomp {

// Triple of element ids (x, z, y) with x <= z <= y.
using Triple = std::array<int, 3>;

// A decomposition of the interval [x, y] at z: an order isomorphism
//
//     psi : [x,z] x [z,y]  ->  [x,y]
//
// sending (u, z) to u and (z, v) to v.  The witness is stored as an explicit
// table over the two interval element lists (sorted by id), so psi and its
// inverse are plain lookups.  `complement` caches psi(x, y), the opposite
// corner of the product square.
struct Decomposition {
    int x = 0, z = 0, y = 0;
    std::vector<int> left;                 // the interval [x, z]
    std::vector<int> right;                // the interval [z, y]
    std::vector<std::vector<int>> table;   // table[i][j] = psi(left[i], right[j])
    int complement = 0;

    Triple triple() const { return {x, z, y}; }
    bool trivial() const { return z == x || z == y; }
    bool proper() const { return !trivial(); }

    int psi(int u, int v) const;
    std::pair<int, int> psi_inv(int w) const;

    // Triple and witness table both equal.
    bool same_witness(const Decomposition& other) const;

    int left_index(int u) const;   // position of u in `left`, -1 if absent
    int right_index(int v) const;  // position of v in `right`, -1 if absent
};

// Full well-formedness check: interval lists match the poset, the table is a
// bijection onto [x,y], the two boundary equations hold, and the map is an
// order isomorphism in both directions.  Throws verify_error on failure.
void validate_decomposition(const Poset& p, const Decomposition& d);

// The two trivial decompositions of a pair x <= y.  Their witnesses are
// forced because one factor is a singleton.
Decomposition trivial_left(const Poset& p, int x, int y);   // (x, x, y)
Decomposition trivial_right(const Poset& p, int x, int y);  // (x, y, y)

// Search for a witness for the triple (x, z, y).  Candidates are tried in
// element-list order, so the first witness is deterministic.  Returns
// nullopt when the triple is not a decomposition.
std::optional<Decomposition> find_decomposition(const Poset& p, int x, int z, int y);

// Every witness for the triple, up to `cap`.  Only used by diagnostics that
// probe whether the complement depends on the chosen witness.
std::vector<Decomposition> all_decomposition_witnesses(const Poset& p, int x, int z, int y,
                                                       std::size_t cap = 64);

// The decomposition (u, psi(v1, u2), v) of the subinterval [u, v], where
// (u1, u2) = psi_inv(u) and (v1, v2) = psi_inv(v); its witness is the
// restriction of d's witness.  Requires d.x <= u <= v <= d.y.
Decomposition restrict_decomposition(const Poset& p, const Decomposition& d, int u, int v);

// The complementary decomposition (x, psi(x,y), y), with witness obtained
// by swapping the two factors of d's witness.
Decomposition complementary_decomposition(const Poset& p, const Decomposition& d);

// d1 <= d2 in the restriction order: d1 equals the restriction of d2 to
// [d1.x, d1.y], witness included.  Reflexive.
bool decomposition_leq(const Poset& p, const Decomposition& d1, const Decomposition& d2);

// A set of decompositions keyed by triple, holding at most one witness per
// triple (the first inserted wins).  Witnesses are validated on insertion.
// Iteration order is the lexicographic triple order, which downstream code
// relies on for reproducible output.
class DecompositionSet {
public:
    explicit DecompositionSet(const Poset& p) : p_(&p) {}

    const Poset& poset() const { return *p_; }
    std::size_t size() const { return members_.size(); }

    bool contains(const Triple& t) const { return members_.count(t) != 0; }
    const Decomposition* find(const Triple& t) const;

    // Inserts unless the triple is already present; returns whether the set
    // grew.  Throws verify_error if the witness fails validation.
    bool insert(Decomposition d);

    const std::map<Triple, Decomposition>& members() const { return members_; }
    std::vector<Triple> proper_triples() const;
    std::size_t proper_count() const { return proper_triples().size(); }

    bool same_triples(const DecompositionSet& other) const;
    bool subset_of_triples(const DecompositionSet& other) const;

    // Definition checks, recomputed on demand (they are cheap at the scales
    // this library targets and never go stale).
    bool is_symmetric() const;
    bool is_downward_closed() const;

private:
    const Poset* p_;
    std::map<Triple, Decomposition> members_;
};

// G_min: exactly the trivial decompositions (x,x,y) and (x,y,y), x <= y.
DecompositionSet trivial_decomposition_set(const Poset& p);

// G_max: every triple x <= z <= y that admits a witness, with the first
// witness found.  Cardinality-based pruning makes the common rejections
// cheap (|[x,z]| * |[z,y]| must equal |[x,y]|).
DecompositionSet maximal_decomposition_set(const Poset& p);

// G_min united with the given proper triples; a witness is searched for
// each.  Throws input_error when a listed triple admits none.  This is the
// loader for the decomposition-set file format.
DecompositionSet decomposition_set_from_proper_triples(const Poset& p,
                                                       const std::vector<Triple>& triples);

// Closure constructions.  All are idempotent and only ever add members.
DecompositionSet symmetric_closure(const DecompositionSet& g);
DecompositionSet downward_closure(const DecompositionSet& g);
// downward_closure(symmetric_closure(g)) iterated to a fixed point.
DecompositionSet normalize(const DecompositionSet& g);

// Union keyed by triple; witnesses of `a` win collisions.
DecompositionSet set_union(const DecompositionSet& a, const DecompositionSet& b);

// Everything below d in the restriction order: all restrictions of d to
// subintervals of [d.x, d.y].  Returned as a plain list (it is not a full
// decomposition set on its own; callers union it into one).
std::vector<Decomposition> lower_hull(const Poset& p, const Decomposition& d);

// The closure operator <A>_G: smallest superset of A containing the middle
// of every member decomposition whose endpoints it contains.
std::vector<int> closure(const DecompositionSet& g, const std::vector<int>& a);

// Mask-based variant used in hot loops; `in` has one flag per poset element.
void closure_in_place(const std::vector<Triple>& propers, std::vector<char>& in);

// True iff d.x, d.y lie in A and no proper restriction of d to a pair of
// A-elements is itself a member of g.  Requires d proper and d in g.
bool is_minimal_wrt(const DecompositionSet& g, const Decomposition& d,
                    const std::vector<int>& a);

// Right-hand side of the minimality characterization: [x,y] ∩ A is
// contained in {x, z, complement, y}.  Preconditions: g symmetric and
// downward closed, A closed, d a proper member with endpoints in A.
bool minimality_characterization_check(const DecompositionSet& g, const Decomposition& d,
                                       const std::vector<int>& a);

// The staged reconstruction of <A>_g: starting from the trivial set, each
// step picks the lexicographically least proper member of g (not yet
// present) whose endpoints lie in the current closure of A and which is
// minimal for it, then adds the lower hulls of that decomposition and of
// its complement.  Returns the whole chain of sets, trivial set first.
// Requires g symmetric and downward closed.
std::vector<DecompositionSet> build_generating_sequence(const DecompositionSet& g,
                                                        const std::vector<int>& a);

// The same set over the dual poset: (x,z,y) becomes (y,z,x) with the
// witness factors swapped.  `pdual` must be p.dual() (same element names).
DecompositionSet dual_set(const DecompositionSet& g, const Poset& pdual);

// Push a set through an order isomorphism: iso[i] is the image in `to` of
// element i of g's poset.  Witness tables are remapped entrywise.
DecompositionSet transport(const DecompositionSet& g, const Poset& to,
                           const std::vector<int>& iso);

} // namespace decomp
