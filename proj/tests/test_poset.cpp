#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>
#include <vector>

#include "decomp/enumeration.hpp"
#include "decomp/poset.hpp"

using namespace decomp;

namespace {

// Reachability closure computed the slow way, as an oracle for
// from_relations.  Floyd-Warshall over the raw (non-transitive) edges.
std::vector<std::vector<unsigned char>> warshall(
    int n, const std::vector<std::pair<int, int>>& edges) {
    std::vector<std::vector<unsigned char>> r(n, std::vector<unsigned char>(n, 0));
    for (int i = 0; i < n; ++i) r[i][i] = 1;
    for (auto [a, b] : edges) r[a][b] = 1;
    for (int k = 0; k < n; ++k)
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                if (r[i][k] && r[k][j]) r[i][j] = 1;
    return r;
}

std::vector<std::string> numbered_names(int n) {
    std::vector<std::string> names;
    for (int i = 0; i < n; ++i) names.push_back("e" + std::to_string(i));
    return names;
}

// Chain counting by dynamic programming: chains ending at each element.
long chain_count_oracle(const Poset& p) {
    int n = p.size();
    // Process elements in a linear extension.
    std::vector<int> order;
    std::vector<char> placed(n, 0);
    while ((int)order.size() < n) {
        for (int i = 0; i < n; ++i) {
            if (placed[i]) continue;
            bool ready = true;
            for (int j = 0; j < n; ++j)
                if (!placed[j] && p.less(j, i)) { ready = false; break; }
            if (ready) { order.push_back(i); placed[i] = 1; }
        }
    }
    std::vector<long> ending(n, 0);
    for (int i : order) {
        ending[i] = 1;
        for (int j = 0; j < n; ++j)
            if (p.less(j, i)) ending[i] += ending[j];
    }
    long total = 0;
    for (int i = 0; i < n; ++i) total += ending[i];
    return total;
}

} // namespace

TEST_CASE("from_relations takes the transitive closure and matches a Warshall oracle") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 200; ++trial) {
        int n = 2 + int(rng() % 6);
        // Random DAG edges respecting id order, so acyclicity is guaranteed.
        std::vector<std::pair<int, int>> edges;
        std::vector<std::pair<std::string, std::string>> named;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                if (rng() % 3 == 0) {
                    edges.push_back({i, j});
                    named.push_back({"e" + std::to_string(i), "e" + std::to_string(j)});
                }
        Poset p = Poset::from_relations(numbered_names(n), named);
        auto oracle = warshall(n, edges);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                CHECK(p.leq(i, j) == (oracle[i][j] != 0));
    }
}

TEST_CASE("from_relations rejects cycles") {
    CHECK_THROWS_AS(Poset::from_relations({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}, {"c", "a"}}),
                    input_error);
    CHECK_THROWS_AS(Poset::from_relations({"a", "b"}, {{"a", "b"}, {"b", "a"}}), input_error);
}

TEST_CASE("from_relations rejects unknown names and duplicates") {
    CHECK_THROWS_AS(Poset::from_relations({"a"}, {{"a", "zz"}}), input_error);
    CHECK_THROWS_AS(Poset::from_relations({"a", "a"}, {}), input_error);
}

TEST_CASE("index_of throws on unknown names") {
    Poset p = chain_poset(2);
    CHECK(p.index_of("c0") == 0);
    CHECK_THROWS_AS(p.index_of("nope"), input_error);
}

TEST_CASE("covers agree with the two-step definition") {
    std::mt19937_64 rng(12);
    for (int trial = 0; trial < 50; ++trial) {
        Poset p = random_poset(1 + int(rng() % 7), rng);
        auto covers = p.cover_pairs();
        std::set<std::pair<int, int>> got(covers.begin(), covers.end());
        for (int a = 0; a < p.size(); ++a)
            for (int b = 0; b < p.size(); ++b) {
                if (!p.less(a, b)) {
                    CHECK(!got.count({a, b}));
                    continue;
                }
                bool between = false;
                for (int z = 0; z < p.size(); ++z)
                    if (p.less(a, z) && p.less(z, b)) between = true;
                CHECK(got.count({a, b}) == (between ? 0u : 1u));
            }
    }
}

TEST_CASE("intervals, bounds, meets and joins on the rank-3 subset lattice") {
    Poset b3 = boolean_lattice(3);
    int bot = b3.index_of("∅"), top = b3.index_of("123");
    CHECK(b3.bottom() == bot);
    CHECK(b3.top() == top);
    CHECK(b3.interval(bot, top).size() == 8);
    CHECK(b3.interval(b3.index_of("1"), b3.index_of("12")).size() == 2);
    CHECK(b3.interval(b3.index_of("1"), b3.index_of("23")).empty());
    CHECK(b3.meet(b3.index_of("12"), b3.index_of("13")) == b3.index_of("1"));
    CHECK(b3.join(b3.index_of("1"), b3.index_of("2")) == b3.index_of("12"));
    CHECK(b3.is_lattice());
    CHECK(b3.is_graded());
}

TEST_CASE("the two-atom two-coatom bowtie poset is not a lattice") {
    // Bottom, atoms p1 p2, coatoms p3 p4 with all four relations, top.  The
    // pair (p1, p2) has two minimal upper bounds, so joins fail.
    Poset p = Poset::from_relations(
        {"p0", "p1", "p2", "p3", "p4", "p5"},
        {{"p0", "p1"}, {"p0", "p2"}, {"p1", "p3"}, {"p1", "p4"},
         {"p2", "p3"}, {"p2", "p4"}, {"p3", "p5"}, {"p4", "p5"}});
    CHECK(!p.is_lattice());
    CHECK(!p.join(p.index_of("p1"), p.index_of("p2")).has_value());
    CHECK(!p.meet(p.index_of("p3"), p.index_of("p4")).has_value());
    CHECK(p.bottom().has_value());
    CHECK(p.top().has_value());
}

TEST_CASE("antichains have no bottom, chains are lattices") {
    CHECK(!antichain_poset(2).bottom().has_value());
    CHECK(antichain_poset(1).bottom().has_value());
    CHECK(chain_poset(4).is_lattice());
    CHECK(!antichain_poset(3).is_lattice());
}

TEST_CASE("dual is an involution and flips leq") {
    std::mt19937_64 rng(13);
    for (int trial = 0; trial < 30; ++trial) {
        Poset p = random_poset(1 + int(rng() % 6), rng);
        Poset d = p.dual();
        for (int a = 0; a < p.size(); ++a)
            for (int b = 0; b < p.size(); ++b) CHECK(p.leq(a, b) == d.leq(b, a));
        Poset dd = d.dual();
        for (int a = 0; a < p.size(); ++a)
            for (int b = 0; b < p.size(); ++b) CHECK(p.leq(a, b) == dd.leq(a, b));
    }
}

TEST_CASE("induced subposets keep names and restrict the order") {
    Poset b3 = boolean_lattice(3);
    std::vector<int> ids{b3.index_of("∅"), b3.index_of("1"), b3.index_of("12")};
    Poset ind = b3.induced(ids);
    CHECK(ind.size() == 3);
    CHECK(ind.name(0) == "∅");
    CHECK(ind.leq(ind.index_of("∅"), ind.index_of("12")));
    CHECK(!ind.leq(ind.index_of("12"), ind.index_of("1")));
    CHECK_THROWS_AS(b3.induced({0, 0}), input_error);
}

TEST_CASE("products order componentwise and coproducts keep parts incomparable") {
    Poset b1 = boolean_lattice(1);
    Poset c3 = chain_poset(3);
    Poset pp = product(b1, c3);
    CHECK(pp.size() == 6);
    for (int a = 0; a < b1.size(); ++a)
        for (int b = 0; b < c3.size(); ++b)
            for (int c = 0; c < b1.size(); ++c)
                for (int d = 0; d < c3.size(); ++d)
                    CHECK(pp.leq(product_index(b1, c3, a, b), product_index(b1, c3, c, d)) ==
                          (b1.leq(a, c) && c3.leq(b, d)));
    Poset cp = coproduct(b1, c3);
    CHECK(cp.size() == 5);
    CHECK(!cp.comparable(cp.index_of("1:∅"), cp.index_of("2:c0")));
    CHECK(cp.leq(cp.index_of("2:c0"), cp.index_of("2:c2")));
}

TEST_CASE("product of two 1-cubes is order-isomorphic to the square") {
    Poset b1 = boolean_lattice(1);
    Poset pp = product(b1, b1);
    Poset b2 = boolean_lattice(2);
    auto iso = find_order_isomorphism(pp, b2, {});
    REQUIRE(iso.has_value());
    for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b) CHECK(pp.leq(a, b) == b2.leq((*iso)[a], (*iso)[b]));
}

TEST_CASE("isomorphism search respects pins and reports infeasibility") {
    Poset b2 = boolean_lattice(2);
    CHECK(!find_order_isomorphism(b2, chain_poset(4), {}).has_value());
    // Pinning atom "1" to atom "2" still extends to an automorphism.
    auto pinned = find_order_isomorphism(b2, b2, {{b2.index_of("1"), b2.index_of("2")}});
    REQUIRE(pinned.has_value());
    CHECK((*pinned)[b2.index_of("1")] == b2.index_of("2"));
    CHECK(all_order_isomorphisms(b2, b2, {}, 100).size() == 2);
    CHECK(all_order_isomorphisms(antichain_poset(3), antichain_poset(3), {}, 100).size() == 6);
}

TEST_CASE("chain enumeration matches a DP count and honours the cap") {
    Poset b3 = boolean_lattice(3);
    CHECK(enumerate_chains(b3).size() == 51);
    CHECK(enumerate_maximal_chains(b3).size() == 6);
    CHECK(enumerate_chains(boolean_lattice(4)).size() == 299);
    CHECK(enumerate_maximal_chains(boolean_lattice(4)).size() == 24);
    std::mt19937_64 rng(14);
    for (int trial = 0; trial < 40; ++trial) {
        Poset p = random_poset(1 + int(rng() % 6), rng);
        CHECK((long)enumerate_chains(p).size() == chain_count_oracle(p));
    }
    CHECK_THROWS_AS(enumerate_chains(boolean_lattice(4), 100), resource_error);
}

TEST_CASE("chains between two endpoints contain both") {
    Poset b3 = boolean_lattice(3);
    auto chains = enumerate_chains_between(b3, b3.index_of("∅"), b3.index_of("12"));
    CHECK(chains.size() == 3);  // {∅,12}, {∅,1,12}, {∅,2,12}
    for (const auto& c : chains) {
        CHECK(c.front() == b3.index_of("∅"));
        CHECK(c.back() == b3.index_of("12"));
    }
}

TEST_CASE("subset names round-trip through masks") {
    CHECK(subset_name(0) == "∅");
    CHECK(subset_name(0b101) == "13");
    CHECK(subset_mask_from_name("13", 3) == 0b101);
    CHECK(subset_mask_from_name("∅", 3) == 0);
    Poset b9 = boolean_lattice(9);
    CHECK(b9.size() == 512);
    CHECK_THROWS_AS(boolean_lattice(10), input_error);
}

TEST_CASE("renamed relabels without touching the order") {
    Poset c2 = chain_poset(2);
    Poset r = c2.renamed({"lo", "hi"});
    CHECK(r.leq(r.index_of("lo"), r.index_of("hi")));
    CHECK_THROWS_AS(c2.renamed({"x", "x"}), input_error);
}
