#include "decomp/product.hpp"

#include <algorithm>

#include "decomp/diagnostics.hpp"

namespace decomp {

namespace {

void require_product_shape(const Poset& pp, const Poset& p1, const Poset& p2) {
    const int n1 = p1.size(), n2 = p2.size();
    require_input(pp.size() == n1 * n2, "poset is not the product of the two factors");
    for (int a = 0; a < n1; ++a)
        for (int b = 0; b < n2; ++b)
            for (int c = 0; c < n1; ++c)
                for (int d = 0; d < n2; ++d) {
                    const bool expect = p1.leq(a, c) && p2.leq(b, d);
                    require_input(pp.leq(a * n2 + b, c * n2 + d) == expect,
                                  "poset is not the product of the two factors");
                }
}

void require_coproduct_shape(const Poset& cp, const Poset& p1, const Poset& p2) {
    const int n1 = p1.size(), n2 = p2.size();
    require_input(cp.size() == n1 + n2, "poset is not the coproduct of the two factors");
    for (int a = 0; a < n1 + n2; ++a)
        for (int b = 0; b < n1 + n2; ++b) {
            bool expect = false;
            if (a < n1 && b < n1) expect = p1.leq(a, b);
            if (a >= n1 && b >= n1) expect = p2.leq(a - n1, b - n1);
            require_input(cp.leq(a, b) == expect,
                          "poset is not the coproduct of the two factors");
        }
}

Decomposition shift_decomposition(const Decomposition& d, int offset) {
    Decomposition e;
    e.x = d.x + offset;
    e.z = d.z + offset;
    e.y = d.y + offset;
    e.left = d.left;
    e.right = d.right;
    for (int& v : e.left) v += offset;
    for (int& v : e.right) v += offset;
    e.table = d.table;
    for (auto& row : e.table)
        for (int& v : row) v += offset;
    e.complement = d.complement + offset;
    return e;
}

} // namespace

DecompositionSet product_decomposition_set(const Poset& pp, const DecompositionSet& g1,
                                           const DecompositionSet& g2) {
    const Poset& p1 = g1.poset();
    const Poset& p2 = g2.poset();
    require_product_shape(pp, p1, p2);
    const int n2 = p2.size();
    DecompositionSet out(pp);
    for (const auto& [t1, d1] : g1.members()) {
        for (const auto& [t2, d2] : g2.members()) {
            Decomposition e;
            e.x = d1.x * n2 + d2.x;
            e.z = d1.z * n2 + d2.z;
            e.y = d1.y * n2 + d2.y;
            // Lexicographic iteration over sorted factor intervals keeps the
            // product ids ascending, which the witness layout requires.
            for (int a : d1.left)
                for (int b : d2.left) e.left.push_back(a * n2 + b);
            for (int a : d1.right)
                for (int b : d2.right) e.right.push_back(a * n2 + b);
            const std::size_t w2 = d2.left.size();
            const std::size_t h2 = d2.right.size();
            e.table.assign(e.left.size(), std::vector<int>(e.right.size(), -1));
            for (std::size_t i1 = 0; i1 < d1.left.size(); ++i1)
                for (std::size_t i2 = 0; i2 < w2; ++i2)
                    for (std::size_t j1 = 0; j1 < d1.right.size(); ++j1)
                        for (std::size_t j2 = 0; j2 < h2; ++j2)
                            e.table[i1 * w2 + i2][j1 * h2 + j2] =
                                d1.table[i1][j1] * n2 + d2.table[i2][j2];
            e.complement = d1.complement * n2 + d2.complement;
            out.insert(std::move(e));
        }
    }
    return out;
}

DecompositionSet coproduct_decomposition_set(const Poset& cp, const DecompositionSet& g1,
                                             const DecompositionSet& g2) {
    const Poset& p1 = g1.poset();
    const Poset& p2 = g2.poset();
    require_coproduct_shape(cp, p1, p2);
    DecompositionSet out(cp);
    for (const auto& [t, d] : g1.members()) out.insert(shift_decomposition(d, 0));
    for (const auto& [t, d] : g2.members()) out.insert(shift_decomposition(d, p1.size()));
    return set_union(out, trivial_decomposition_set(cp));
}

bool product_closure_check(const Poset& pp, const DecompositionSet& gp,
                           const DecompositionSet& g1, const DecompositionSet& g2,
                           const std::vector<int>& chain) {
    const int n1 = g1.poset().size();
    const int n2 = g2.poset().size();
    require_input(pp.size() == n1 * n2, "product closure check: size mismatch");
    for (int v : chain)
        require_input(v >= 0 && v < pp.size(),
                      "product closure check: chain element out of range");
    for (std::size_t i = 0; i < chain.size(); ++i)
        for (std::size_t j = i + 1; j < chain.size(); ++j)
            require_input(pp.comparable(chain[i], chain[j]),
                          "product closure check needs a chain");
    const std::vector<int> lhs = closure(gp, chain);
    std::vector<int> proj1, proj2;
    for (int v : chain) {
        proj1.push_back(v / n2);
        proj2.push_back(v % n2);
    }
    std::sort(proj1.begin(), proj1.end());
    proj1.erase(std::unique(proj1.begin(), proj1.end()), proj1.end());
    std::sort(proj2.begin(), proj2.end());
    proj2.erase(std::unique(proj2.begin(), proj2.end()), proj2.end());
    const std::vector<int> cl1 = closure(g1, proj1);
    const std::vector<int> cl2 = closure(g2, proj2);
    std::vector<int> rhs;
    for (int a : cl1)
        for (int b : cl2) rhs.push_back(a * n2 + b);
    return lhs == rhs;
}

ProductIsoCertificate product_complex_isomorphism(const Poset& pp, const DecompositionSet& gp,
                                                  const DecompositionSet& g1,
                                                  const DecompositionSet& g2,
                                                  std::size_t max_chains) {
    const int n2 = g2.poset().size();
    require_product_shape(pp, g1.poset(), g2.poset());
    ProductIsoCertificate cert;
    cert.factor1 = decomposition_complex(g1.poset(), g1, max_chains);
    cert.factor2 = decomposition_complex(g2.poset(), g2, max_chains);
    cert.product = decomposition_complex(pp, gp, max_chains);
    std::vector<char> hit(cert.product.size(), 0);
    for (int i1 = 0; i1 < cert.factor1.size(); ++i1) {
        for (int i2 = 0; i2 < cert.factor2.size(); ++i2) {
            std::vector<int> members;
            for (int a : cert.factor1.face(i1).members)
                for (int b : cert.factor2.face(i2).members) members.push_back(a * n2 + b);
            const auto k = cert.product.index_of(members);
            require_internal(k.has_value(),
                             "product complex map: a product of faces is not a face");
            require_internal(!hit[*k], "product complex map is not injective");
            hit[*k] = 1;
            cert.pairs.push_back({i1, i2, *k});
        }
    }
    for (char h : hit)
        require_internal(h, "product complex map is not surjective");
    for (const auto& a : cert.pairs) {
        for (const auto& b : cert.pairs) {
            const bool factor_leq =
                cert.factor1.face_leq(a[0], b[0]) && cert.factor2.face_leq(a[1], b[1]);
            require_internal(factor_leq == cert.product.face_leq(a[2], b[2]),
                             "product complex map does not preserve order both ways");
        }
    }
    return cert;
}

Realization product_realization(const Poset& pp, const DecompositionSet& gp,
                                const Realization& r1, const Realization& r2) {
    const int s1 = static_cast<int>(r1.phi.size());
    const int s2 = static_cast<int>(r2.phi.size());
    require_input(pp.size() == s1 * s2,
                  "product realization: poset is not the product of the two factors");
    require_input(r1.n + r2.n <= 64, "product realization exceeds 64 coordinates");
    Realization out;
    out.n = r1.n + r2.n;
    out.phi.resize(pp.size(), 0);
    for (int a = 0; a < s1; ++a)
        for (int b = 0; b < s2; ++b)
            out.phi[a * s2 + b] = r1.phi[a] | (r2.phi[b] << r1.n);
    const RealizationCheck rc = verify_realization(pp, gp, out);
    require_internal(rc.ok, "product realization failed verification: " + rc.reason);
    return out;
}

} // namespace decomp
