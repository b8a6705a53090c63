#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "decomp/diagnostics.hpp"

namespace decomp {

// A finite partially ordered set.  Elements are identified by dense integer
// ids (the order in which they were listed at construction time); every
// element also carries a stable string name used by file formats and by
// the CLI.  The full reflexive relation is stored as a dense matrix, which
// is the right trade-off here: the posets we work with are small (at most a
// few thousand elements for the face posets, usually far fewer) and nearly
// every algorithm downstream is bound by leq() lookups.
class Poset {
public:
    Poset() = default;

    // Build from a list of element names and a list of (a, b) pairs meaning
    // a <= b.  Takes the reflexive transitive closure, and rejects input
    // whose closure is not antisymmetric, reporting one offending cycle.
    static Poset from_relations(const std::vector<std::string>& elements,
                                const std::vector<std::pair<std::string, std::string>>& relations);

    // Trusted constructor for callers that already hold a valid reflexive,
    // transitive, antisymmetric matrix.  Verifies in debug-ish fashion
    // (cheap checks only: reflexivity and antisymmetry).
    static Poset from_leq_matrix(std::vector<std::string> names,
                                 std::vector<std::vector<unsigned char>> leq);

    int size() const { return static_cast<int>(names_.size()); }
    bool leq(int a, int b) const { return leq_[a][b] != 0; }
    bool less(int a, int b) const { return a != b && leq_[a][b] != 0; }
    bool comparable(int a, int b) const { return leq(a, b) || leq(b, a); }

    const std::string& name(int a) const { return names_[a]; }
    const std::vector<std::string>& names() const { return names_; }

    // Id of a named element; input_error if the name is unknown.
    int index_of(const std::string& name) const;
    bool has_element(const std::string& name) const { return index_.count(name) != 0; }

    // b covers a: a < b with nothing strictly between.
    bool covers(int a, int b) const;
    std::vector<std::pair<int, int>> cover_pairs() const;

    // All pairs (a, b) with a <= b, reflexive pairs included.
    std::vector<std::pair<int, int>> leq_pairs() const;

    // The closed interval [a, b] as a sorted id list; empty unless a <= b.
    std::vector<int> interval(int a, int b) const;

    std::vector<int> minimal_elements() const;
    std::vector<int> maximal_elements() const;
    std::optional<int> bottom() const;
    std::optional<int> top() const;

    // Meet and join in the poset sense: greatest lower bound and least
    // upper bound.  nullopt when the bound does not exist or is not unique.
    std::optional<int> meet(int a, int b) const;
    std::optional<int> join(int a, int b) const;
    std::optional<int> join_of_set(const std::vector<int>& xs) const;
    std::optional<int> meet_of_set(const std::vector<int>& xs) const;
    bool is_lattice() const;

    // True when all maximal chains have the same number of elements.
    bool is_graded(std::size_t max_chains = 1u << 20) const;

    Poset dual() const;

    // Subposet induced on the given ids (need not be sorted; duplicates are
    // rejected).  Element names are inherited.
    Poset induced(const std::vector<int>& subset) const;

    // Relabel every element.  Sizes must match and names must be distinct.
    Poset renamed(const std::vector<std::string>& new_names) const;

private:
    std::vector<std::string> names_;
    std::vector<std::vector<unsigned char>> leq_;
    std::unordered_map<std::string, int> index_;

    void rebuild_index();
};

// Direct product P1 x P2, ordered componentwise.  Element names are
// "n1,n2"; factor names may not contain the separator.
Poset product(const Poset& p1, const Poset& p2);

// Disjoint union, no relations across the two parts.  Names are prefixed
// "1:" and "2:" so the parts stay distinguishable even when the factors
// share element names.
Poset coproduct(const Poset& p1, const Poset& p2);

// Id of (a, b) in product(p1, p2) under the row-major layout used by
// product(): id = a * p2.size() + b.
inline int product_index(const Poset& /*p1*/, const Poset& p2, int a, int b) {
    return a * p2.size() + b;
}
inline std::pair<int, int> product_split(const Poset& /*p1*/, const Poset& p2, int ab) {
    return {ab / p2.size(), ab % p2.size()};
}

// Standard small posets.  boolean_lattice names elements by their sorted
// digit strings ("∅", "1", "13", "123", ...), which keeps file fixtures
// readable; it therefore only supports n <= 9.
Poset boolean_lattice(int n);
Poset chain_poset(int k);      // c0 < c1 < ... < c{k-1}
Poset antichain_poset(int k);  // k pairwise incomparable elements

// Subset-name helpers matching boolean_lattice's naming scheme.
std::string subset_name(std::uint32_t mask);
std::uint32_t subset_mask_from_name(const std::string& name, int n);

// Search for an order-isomorphism f : A -> B extending the pinned partial
// assignment (pairs of ids, a -> b).  Deterministic backtracking in id
// order, so the witness returned for a feasible instance is reproducible.
// The result is checked to be a bijection preserving and reflecting order
// before it is returned.
std::optional<std::vector<int>> find_order_isomorphism(
    const Poset& A, const Poset& B,
    const std::vector<std::pair<int, int>>& pinned);

// Every order-isomorphism extending the pins, up to `cap` of them.  Used by
// diagnostics that probe witness uniqueness.
std::vector<std::vector<int>> all_order_isomorphisms(
    const Poset& A, const Poset& B,
    const std::vector<std::pair<int, int>>& pinned,
    std::size_t cap);

// All nonempty chains of P, each listed in increasing poset order; the
// enumeration itself is depth-first in id order, so output order is
// deterministic.  Throws resource_error when more than `cap` chains exist.
std::vector<std::vector<int>> enumerate_chains(const Poset& p, std::size_t cap = 1000000);

// Chains contained in [lo, hi] that include both endpoints.
std::vector<std::vector<int>> enumerate_chains_between(const Poset& p, int lo, int hi,
                                                       std::size_t cap = 1000000);

// Maximal chains of P (not extendable by any element).
std::vector<std::vector<int>> enumerate_maximal_chains(const Poset& p,
                                                       std::size_t cap = 1000000);

} // namespace decomp
