#include <doctest.h>

#include <algorithm>
#include <vector>

#include "decomp/complex.hpp"
#include "decomp/decomposition.hpp"
#include "decomp/enumeration.hpp"
#include "decomp/poset.hpp"
#include "decomp/product.hpp"
#include "decomp/realization.hpp"

using namespace decomp;

TEST_CASE("the product set of two segments is the full set of the square") {
    Poset b1 = boolean_lattice(1);
    Poset pp = product(b1, b1);
    DecompositionSet g1 = maximal_decomposition_set(b1);
    DecompositionSet gp = product_decomposition_set(pp, g1, g1);
    CHECK(gp.same_triples(maximal_decomposition_set(pp)));
    auto iso = find_order_isomorphism(pp, boolean_lattice(2), {});
    REQUIRE(iso.has_value());
    Poset b2 = boolean_lattice(2);
    CHECK(transport(gp, b2, *iso).same_triples(maximal_decomposition_set(b2)));
}

TEST_CASE("maximal sets multiply on the cube seen as square times segment") {
    Poset b2 = boolean_lattice(2);
    Poset b1 = boolean_lattice(1);
    Poset pp = product(b2, b1);
    DecompositionSet gp = product_decomposition_set(pp, maximal_decomposition_set(b2),
                                                    maximal_decomposition_set(b1));
    CHECK(gp.same_triples(maximal_decomposition_set(pp)));
    CHECK(gp.members().size() == 64);
    CHECK(gp.proper_triples().size() == 18);
}

TEST_CASE("trivial sets multiply exactly when one factor is an antichain") {
    Poset c2 = chain_poset(2);
    Poset a2 = antichain_poset(2);
    {
        Poset pp = product(c2, a2);
        DecompositionSet gp = product_decomposition_set(pp, trivial_decomposition_set(c2),
                                                        trivial_decomposition_set(a2));
        CHECK(gp.same_triples(trivial_decomposition_set(pp)));
    }
    {
        // Two chains produce the square, whose corners decompose properly.
        Poset pp = product(c2, c2);
        DecompositionSet gp = product_decomposition_set(pp, trivial_decomposition_set(c2),
                                                        trivial_decomposition_set(c2));
        CHECK(!gp.same_triples(trivial_decomposition_set(pp)));
        CHECK(gp.proper_triples().size() == 2);
    }
}

TEST_CASE("closures of product chains factor through the projections") {
    Poset b2 = boolean_lattice(2);
    Poset b1 = boolean_lattice(1);
    Poset pp = product(b2, b1);
    DecompositionSet g1 = maximal_decomposition_set(b2);
    DecompositionSet g2 = maximal_decomposition_set(b1);
    DecompositionSet gp = product_decomposition_set(pp, g1, g2);
    for (const std::vector<int>& chain : enumerate_chains(pp))
        CHECK(product_closure_check(pp, gp, g1, g2, chain));
}

TEST_CASE("the product complex is the pair complex, face by face") {
    Poset b2 = boolean_lattice(2);
    Poset b1 = boolean_lattice(1);
    Poset pp = product(b2, b1);
    DecompositionSet g1 = maximal_decomposition_set(b2);
    DecompositionSet g2 = maximal_decomposition_set(b1);
    DecompositionSet gp = product_decomposition_set(pp, g1, g2);
    ProductIsoCertificate cert = product_complex_isomorphism(pp, gp, g1, g2);
    CHECK(cert.factor1.size() == 9);
    CHECK(cert.factor2.size() == 3);
    CHECK(cert.product.size() == 27);
    CHECK(cert.pairs.size() == 27);
    for (const auto& [i, j, k] : cert.pairs) {
        std::vector<int> expect;
        for (int a : cert.factor1.face(i).members)
            for (int b : cert.factor2.face(j).members)
                expect.push_back(product_index(b2, b1, a, b));
        std::sort(expect.begin(), expect.end());
        CHECK(cert.product.face(k).members == expect);
    }
    // Every product face is hit exactly once.
    std::vector<int> hits(cert.product.size(), 0);
    for (const auto& [i, j, k] : cert.pairs) ++hits[k];
    CHECK(std::all_of(hits.begin(), hits.end(), [](int h) { return h == 1; }));
}

TEST_CASE("coproducts keep the parts apart") {
    Poset b1 = boolean_lattice(1);
    Poset cp = coproduct(b1, b1);
    CHECK(cp.size() == 4);
    DecompositionSet g = coproduct_decomposition_set(cp, maximal_decomposition_set(b1),
                                                     maximal_decomposition_set(b1));
    CHECK(g.is_symmetric());
    CHECK(g.is_downward_closed());
    FacePoset fp = decomposition_complex(cp, g);
    CHECK(fp.size() == 6);
    // Faces never straddle the two parts.
    int half = b1.size();
    for (const Face& f : fp.faces()) {
        bool in_first = f.members.front() < half;
        for (int e : f.members) CHECK((e < half) == in_first);
    }
}

TEST_CASE("product realizations concatenate coordinates and verify") {
    Poset b2 = boolean_lattice(2);
    Poset b1 = boolean_lattice(1);
    Poset pp = product(b2, b1);
    DecompositionSet gp = product_decomposition_set(pp, maximal_decomposition_set(b2),
                                                    maximal_decomposition_set(b1));
    Realization r = product_realization(pp, gp, identity_realization(b2),
                                        identity_realization(b1));
    CHECK(r.n == 3);
    CHECK(verify_realization(pp, gp, r).ok);
    int ab = product_index(b2, b1, b2.index_of("12"), b1.index_of("1"));
    CHECK(r.phi[ab] == 0b111);
    int a0 = product_index(b2, b1, b2.index_of("1"), b1.index_of("∅"));
    CHECK(r.phi[a0] == 0b001);
}
