#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "decomp/decomposition.hpp"
#include "decomp/poset.hpp"

namespace decomp {

// All posets on n elements, one representative per isomorphism class, in a
// deterministic order (sorted by canonical matrix key).  Built by repeatedly
// attaching a new maximal element over every order ideal and deduplicating
// by canonical form, and cached per n.  Supported up to n = 8; the class
// counts 1, 1, 2, 5, 16, 63, 318, 2045, 16999 for n = 0..8 are frozen in the
// test suite as a correctness check of the enumeration itself.
const std::vector<Poset>& all_posets(int n);

// Uniformly seeded random poset: each pair i < j gets the relation i < j
// with probability 1/2, then the transitive closure is taken.  Consumes rng
// deterministically (no library distributions, so output is identical across
// standard library implementations).
Poset random_poset(int n, std::mt19937_64& rng);

// Random decomposition set in normal form: the trivial set united with a
// coin-flipped subset of all proper decomposable triples, then closed under
// complements and restrictions.
DecompositionSet random_normalized_set(const Poset& p, std::mt19937_64& rng);

// Every lattice with 1..max_n elements, drawn from all_posets (max_n <= 8).
// Expected class counts 1, 1, 1, 2, 5, 15, 53, 222 for n = 1..8.
std::vector<Poset> lattice_family(int max_n);

} // namespace decomp
