#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>
#include <vector>

#include "decomp/decomposition.hpp"
#include "decomp/enumeration.hpp"
#include "decomp/poset.hpp"

using namespace decomp;

namespace {

// Closure by repeated full rescans, independent of the library's worklist.
std::vector<int> closure_oracle(const DecompositionSet& g, std::vector<int> a) {
    std::sort(a.begin(), a.end());
    bool grew = true;
    while (grew) {
        grew = false;
        for (const auto& [t, d] : g.members()) {
            if (d.trivial()) continue;
            bool ends = std::binary_search(a.begin(), a.end(), t[0]) &&
                        std::binary_search(a.begin(), a.end(), t[2]);
            if (ends && !std::binary_search(a.begin(), a.end(), t[1])) {
                a.insert(std::lower_bound(a.begin(), a.end(), t[1]), t[1]);
                grew = true;
            }
        }
    }
    return a;
}

} // namespace

TEST_CASE("the square decomposes across either atom and nothing else properly") {
    Poset b2 = boolean_lattice(2);
    DecompositionSet g = maximal_decomposition_set(b2);
    CHECK(g.members().size() == 16);
    CHECK(g.proper_triples().size() == 2);
    CHECK(g.contains({b2.index_of("∅"), b2.index_of("1"), b2.index_of("12")}));
    CHECK(g.contains({b2.index_of("∅"), b2.index_of("2"), b2.index_of("12")}));
    CHECK(maximal_decomposition_set(boolean_lattice(3)).proper_triples().size() == 18);
}

TEST_CASE("every found decomposition validates and fixes its boundary") {
    Poset b3 = boolean_lattice(3);
    auto d = find_decomposition(b3, b3.index_of("∅"), b3.index_of("1"), b3.index_of("123"));
    REQUIRE(d.has_value());
    validate_decomposition(b3, *d);
    // psi(u, z) = u on the left axis and psi(z, v) = v on the right one.
    for (int u : d->left) CHECK(d->psi(u, d->z) == u);
    for (int v : d->right) CHECK(d->psi(d->z, v) == v);
    CHECK(d->complement == d->psi(d->x, d->y));
}

TEST_CASE("triples whose interval sizes do not multiply are rejected") {
    Poset b3 = boolean_lattice(3);
    // |[∅,1]| * |[1,12]| = 4 but |[∅,12]| = 4: sizes fit, map exists.
    CHECK(find_decomposition(b3, b3.index_of("∅"), b3.index_of("1"), b3.index_of("12"))
              .has_value());
    // |[∅,12]| * |[12,123]| = 8 = |B_3|, and the witness exists too.
    CHECK(find_decomposition(b3, b3.index_of("∅"), b3.index_of("12"), b3.index_of("123"))
              .has_value());
    Poset c3 = chain_poset(3);
    CHECK(!find_decomposition(c3, 0, 1, 2).has_value());  // 2 * 2 != 3
}

TEST_CASE("witness tampering is caught by validation") {
    Poset b2 = boolean_lattice(2);
    auto d = find_decomposition(b2, b2.index_of("∅"), b2.index_of("1"), b2.index_of("12"));
    REQUIRE(d.has_value());
    Decomposition bad = *d;
    std::swap(bad.table[0][0], bad.table[1][1]);
    CHECK_THROWS_AS(validate_decomposition(b2, bad), verify_error);
}

TEST_CASE("complementary decompositions swap the middle corner and are involutive") {
    Poset b3 = boolean_lattice(3);
    DecompositionSet g = maximal_decomposition_set(b3);
    for (const Triple& t : g.proper_triples()) {
        const Decomposition* d = g.find(t);
        Decomposition c = complementary_decomposition(b3, *d);
        CHECK(c.x == d->x);
        CHECK(c.y == d->y);
        CHECK(c.z == d->complement);
        Decomposition back = complementary_decomposition(b3, c);
        CHECK(back.z == d->z);
        CHECK(back.same_witness(*d));
    }
}

TEST_CASE("restriction produces valid sub-decompositions ordered below the original") {
    Poset b3 = boolean_lattice(3);
    auto d = find_decomposition(b3, b3.index_of("∅"), b3.index_of("1"), b3.index_of("123"));
    REQUIRE(d.has_value());
    Decomposition r = restrict_decomposition(b3, *d, b3.index_of("∅"), b3.index_of("13"));
    validate_decomposition(b3, r);
    CHECK(r.x == b3.index_of("∅"));
    CHECK(r.y == b3.index_of("13"));
    CHECK(decomposition_leq(b3, r, *d));
    CHECK(!decomposition_leq(b3, *d, r));
    // The lower hull contains the restriction to every subinterval.
    auto hull = lower_hull(b3, *d);
    bool found = false;
    for (const Decomposition& h : hull)
        if (h.triple() == r.triple()) found = true;
    CHECK(found);
}

TEST_CASE("the restriction order on the 3-cube behaves as stated") {
    Poset b3 = boolean_lattice(3);
    DecompositionSet g = maximal_decomposition_set(b3);
    const Decomposition* small =
        g.find({b3.index_of("∅"), b3.index_of("1"), b3.index_of("12")});
    const Decomposition* big =
        g.find({b3.index_of("∅"), b3.index_of("1"), b3.index_of("123")});
    REQUIRE(small);
    REQUIRE(big);
    CHECK(decomposition_leq(b3, *small, *big));
    CHECK(!decomposition_leq(b3, *big, *small));
    CHECK(decomposition_leq(b3, *big, *big));
}

TEST_CASE("maximal sets are symmetric and downward closed, the trivial set too") {
    std::mt19937_64 rng(21);
    for (int trial = 0; trial < 25; ++trial) {
        Poset p = random_poset(1 + int(rng() % 6), rng);
        DecompositionSet gmax = maximal_decomposition_set(p);
        CHECK(gmax.is_symmetric());
        CHECK(gmax.is_downward_closed());
        DecompositionSet gmin = trivial_decomposition_set(p);
        CHECK(gmin.is_symmetric());
        CHECK(gmin.is_downward_closed());
        CHECK(gmin.subset_of_triples(gmax));
    }
}

TEST_CASE("normalization closes under complements and restrictions and is idempotent") {
    std::mt19937_64 rng(22);
    for (int trial = 0; trial < 60; ++trial) {
        Poset p = random_poset(2 + int(rng() % 5), rng);
        DecompositionSet g = random_normalized_set(p, rng);
        CHECK(g.is_symmetric());
        CHECK(g.is_downward_closed());
        CHECK(normalize(g).same_triples(g));
        CHECK(symmetric_closure(g).same_triples(g));
        CHECK(downward_closure(g).same_triples(g));
    }
}

TEST_CASE("the closure operator agrees with a rescan oracle and is a closure") {
    std::mt19937_64 rng(23);
    for (int trial = 0; trial < 80; ++trial) {
        Poset p = random_poset(1 + int(rng() % 6), rng);
        DecompositionSet g =
            trial % 2 ? maximal_decomposition_set(p) : random_normalized_set(p, rng);
        std::vector<int> a;
        for (int i = 0; i < p.size(); ++i)
            if (rng() % 2) a.push_back(i);
        std::vector<int> got = closure(g, a);
        CHECK(got == closure_oracle(g, a));
        CHECK(std::includes(got.begin(), got.end(), a.begin(), a.end()));
        CHECK(closure(g, got) == got);
    }
}

TEST_CASE("closing the diagonal of the square pulls in both atoms") {
    Poset b2 = boolean_lattice(2);
    DecompositionSet g = maximal_decomposition_set(b2);
    std::vector<int> diag{b2.index_of("∅"), b2.index_of("12")};
    std::sort(diag.begin(), diag.end());
    CHECK(closure(g, diag).size() == 4);
    CHECK(closure(trivial_decomposition_set(b2), diag) == diag);
}

TEST_CASE("minimality and its characterization agree on the 3-cube") {
    Poset b3 = boolean_lattice(3);
    DecompositionSet g = maximal_decomposition_set(b3);
    // A = <{∅, 123}> is everything; no proper member is minimal for it
    // because restrictions to smaller intervals are present.
    std::vector<int> everything;
    for (int i = 0; i < 8; ++i) everything.push_back(i);
    const Decomposition* dtop =
        g.find({b3.index_of("∅"), b3.index_of("1"), b3.index_of("123")});
    REQUIRE(dtop);
    CHECK(is_minimal_wrt(g, *dtop, everything) ==
          minimality_characterization_check(g, *dtop, everything));
    // On the face {∅,1,2,12} the member (∅,1,12) is minimal: the only
    // in-face restriction is itself.
    std::vector<int> square{b3.index_of("∅"), b3.index_of("1"), b3.index_of("2"),
                            b3.index_of("12")};
    std::sort(square.begin(), square.end());
    const Decomposition* dsq = g.find({b3.index_of("∅"), b3.index_of("1"), b3.index_of("12")});
    REQUIRE(dsq);
    CHECK(is_minimal_wrt(g, *dsq, square));
    CHECK(minimality_characterization_check(g, *dsq, square));
}

TEST_CASE("generating sequences rebuild closures stepwise") {
    std::mt19937_64 rng(24);
    for (int trial = 0; trial < 40; ++trial) {
        Poset p = random_poset(2 + int(rng() % 5), rng);
        DecompositionSet g =
            trial % 2 ? maximal_decomposition_set(p) : random_normalized_set(p, rng);
        std::vector<int> a;
        for (int i = 0; i < p.size(); ++i)
            if (rng() % 2) a.push_back(i);
        if (a.empty()) continue;
        std::vector<DecompositionSet> stages = build_generating_sequence(g, a);
        REQUIRE(!stages.empty());
        CHECK(stages.front().proper_triples().empty());
        std::vector<int> target = closure(g, a);
        // Each stage is a subset of the next and of g, and the closure of A
        // under the final stage already equals the closure under all of g.
        for (std::size_t i = 0; i + 1 < stages.size(); ++i)
            CHECK(stages[i].subset_of_triples(stages[i + 1]));
        for (const auto& s : stages) CHECK(s.subset_of_triples(g));
        CHECK(closure(stages.back(), a) == target);
    }
}

TEST_CASE("dual sets transport to the dual poset") {
    std::mt19937_64 rng(25);
    for (int trial = 0; trial < 25; ++trial) {
        Poset p = random_poset(2 + int(rng() % 5), rng);
        Poset pd = p.dual();
        DecompositionSet g = maximal_decomposition_set(p);
        DecompositionSet gd = dual_set(g, pd);
        CHECK(gd.same_triples(maximal_decomposition_set(pd)));
    }
}

TEST_CASE("transport through an isomorphism preserves the set structure") {
    Poset b1 = boolean_lattice(1);
    Poset pp = product(b1, b1);
    Poset b2 = boolean_lattice(2);
    auto iso = find_order_isomorphism(pp, b2, {});
    REQUIRE(iso.has_value());
    DecompositionSet g = maximal_decomposition_set(pp);
    DecompositionSet moved = transport(g, b2, *iso);
    CHECK(moved.same_triples(maximal_decomposition_set(b2)));
}

TEST_CASE("set loading accepts decomposable triples and rejects junk") {
    Poset b2 = boolean_lattice(2);
    std::vector<Triple> ok{{b2.index_of("∅"), b2.index_of("1"), b2.index_of("12")}};
    DecompositionSet g = decomposition_set_from_proper_triples(b2, ok);
    CHECK(g.proper_triples().size() == 1);
    Poset c3 = chain_poset(3);
    CHECK_THROWS_AS(decomposition_set_from_proper_triples(c3, {{0, 1, 2}}), input_error);
}
