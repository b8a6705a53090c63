#include "decomp/matroid.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "decomp/diagnostics.hpp"

namespace decomp {

namespace {

int popcount(std::uint32_t m) { return __builtin_popcount(m); }

std::string mask_to_names(std::uint32_t m) { return subset_name(m); }

void check_exchange(int n, const std::vector<std::uint32_t>& bases) {
    if (n > 10) return;  // exhaustive check is quadratic in the basis count
    for (std::uint32_t b1 : bases) {
        for (std::uint32_t b2 : bases) {
            std::uint32_t only1 = b1 & ~b2;
            for (int x = 0; x < n; ++x) {
                if (!(only1 & (1u << x))) continue;
                bool swapped = false;
                const std::uint32_t without = b1 & ~(1u << x);
                for (int y = 0; y < n && !swapped; ++y) {
                    if (!((b2 & ~b1) & (1u << y))) continue;
                    if (std::binary_search(bases.begin(), bases.end(), without | (1u << y)))
                        swapped = true;
                }
                require_input(swapped, "basis exchange fails between " + mask_to_names(b1) +
                                           " and " + mask_to_names(b2) + " at element " +
                                           std::to_string(x + 1));
            }
        }
    }
}

struct Dsu {
    std::vector<int> parent;
    explicit Dsu(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); }
    bool unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        parent[a] = b;
        return true;
    }
};

} // namespace

Matroid uniform_matroid(int r, int n) {
    require_input(n >= 0 && n <= 20, "uniform matroid supports 0 <= n <= 20");
    require_input(r >= 0 && r <= n, "uniform matroid needs 0 <= r <= n");
    std::vector<std::uint32_t> bases;
    for (std::uint32_t m = 0; m < (1u << n); ++m)
        if (popcount(m) == r) bases.push_back(m);
    return matroid_from_bases(n, std::move(bases));
}

Matroid graphic_matroid(int vertices, const std::vector<std::pair<int, int>>& edges) {
    require_input(vertices >= 1, "graphic matroid needs at least one vertex");
    const int n = static_cast<int>(edges.size());
    require_input(n <= 20, "graphic matroid supports at most 20 edges");
    for (auto& [u, v] : edges)
        require_input(u >= 0 && u < vertices && v >= 0 && v < vertices,
                      "graphic matroid edge endpoint out of range");
    // The rank is the size of a maximal forest; collect all subsets that
    // are forests of that size.
    int rank = 0;
    {
        Dsu dsu(vertices);
        for (auto& [u, v] : edges)
            if (dsu.unite(u, v)) ++rank;
    }
    std::vector<std::uint32_t> bases;
    for (std::uint32_t m = 0; m < (1u << n); ++m) {
        if (popcount(m) != rank) continue;
        Dsu dsu(vertices);
        bool forest = true;
        for (int e = 0; e < n && forest; ++e)
            if (m & (1u << e))
                if (!dsu.unite(edges[e].first, edges[e].second)) forest = false;
        if (forest) bases.push_back(m);
    }
    return matroid_from_bases(n, std::move(bases));
}

Matroid matroid_from_bases(int n, std::vector<std::uint32_t> bases) {
    require_input(n >= 0 && n <= 20, "matroid ground set supports 0 <= n <= 20");
    std::sort(bases.begin(), bases.end());
    bases.erase(std::unique(bases.begin(), bases.end()), bases.end());
    require_input(!bases.empty(), "a matroid needs at least one basis");
    const std::uint32_t full = n == 0 ? 0 : (1u << n) - 1;
    for (std::uint32_t b : bases)
        require_input((b & ~full) == 0, "basis mentions an element beyond the ground set");
    const int rank = popcount(bases.front());
    for (std::uint32_t b : bases)
        require_input(popcount(b) == rank, "bases must all have the same size");
    check_exchange(n, bases);
    Matroid m;
    m.n = n;
    m.rank = rank;
    m.bases = std::move(bases);
    return m;
}

int matroid_rank(const Matroid& m, std::uint32_t a) {
    int best = 0;
    for (std::uint32_t b : m.bases) best = std::max(best, popcount(a & b));
    return best;
}

std::uint32_t matroid_closure_of(const Matroid& m, std::uint32_t a) {
    const int r = matroid_rank(m, a);
    std::uint32_t out = a;
    for (int x = 0; x < m.n; ++x)
        if (matroid_rank(m, a | (1u << x)) == r) out |= 1u << x;
    return out;
}

bool is_simple(const Matroid& m) {
    if (matroid_closure_of(m, 0) != 0) return false;
    for (int x = 0; x < m.n; ++x)
        if (matroid_closure_of(m, 1u << x) != (1u << x)) return false;
    return true;
}

bool is_loopfree(const Matroid& m) {
    std::uint32_t covered = 0;
    for (std::uint32_t b : m.bases) covered |= b;
    const std::uint32_t full = m.n == 0 ? 0 : (1u << m.n) - 1;
    return covered == full;
}

FlatLattice lattice_of_flats(const Matroid& m) {
    require_input(m.n <= 9, "lattice_of_flats names flats by digit strings, so n <= 9");
    std::vector<std::uint32_t> flats;
    for (std::uint32_t a = 0; a < (1u << m.n); ++a)
        if (matroid_closure_of(m, a) == a) flats.push_back(a);
    std::sort(flats.begin(), flats.end(), [](std::uint32_t a, std::uint32_t b) {
        if (popcount(a) != popcount(b)) return popcount(a) < popcount(b);
        return a < b;
    });
    std::vector<std::string> names;
    names.reserve(flats.size());
    for (std::uint32_t f : flats) names.push_back(mask_to_names(f));
    const int k = static_cast<int>(flats.size());
    std::vector<std::vector<unsigned char>> leq(k, std::vector<unsigned char>(k, 0));
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) leq[i][j] = (flats[i] & ~flats[j]) == 0;
    FlatLattice out;
    out.poset = Poset::from_leq_matrix(std::move(names), std::move(leq));
    out.flats = std::move(flats);
    return out;
}

Realization verified_atom_realization(const Poset& lattice, const DecompositionSet& gmax) {
    const Realization r = atom_realization(lattice);
    const RealizationCheck rc = verify_realization(lattice, gmax, r);
    require_internal(rc.ok, "atom realization failed verification: " + rc.reason);
    return r;
}

MatroidType matroid_type(const Matroid& m, const std::vector<Rat>& w) {
    require_input(static_cast<int>(w.size()) == m.n,
                  "weight vector length must match the ground set");
    MatroidType t;
    Rat best(0);
    bool have = false;
    for (std::uint32_t b : m.bases) {
        Rat weight(0);
        for (int x = 0; x < m.n; ++x)
            if (b & (1u << x)) weight = weight + w[x];
        if (!have || best < weight) {
            best = weight;
            have = true;
            t.bases.assign(1, b);
        } else if (weight == best) {
            t.bases.push_back(b);
        }
    }
    return t;
}

bool is_loopfree_type(const Matroid& m, const MatroidType& t) {
    std::uint32_t covered = 0;
    for (std::uint32_t b : t.bases) covered |= b;
    const std::uint32_t full = m.n == 0 ? 0 : (1u << m.n) - 1;
    return covered == full;
}

bool type_leq(const MatroidType& a, const MatroidType& b) {
    return std::includes(a.bases.begin(), a.bases.end(), b.bases.begin(), b.bases.end());
}

std::vector<MatroidType> bergman_types(const Matroid& m, int max_n) {
    require_input(is_loopfree(m), "bergman_types needs a loopfree matroid");
    if (m.n > max_n)
        throw resource_error("ordered set partition scan capped at n = " +
                             std::to_string(max_n));
    std::set<std::vector<std::uint32_t>> seen;
    // Unordered set partitions first, then every ordering of the blocks;
    // block 0 carries the highest weight.
    std::vector<int> block_of(m.n, 0);
    auto weights_of = [&](const std::vector<int>& order, int blocks) {
        std::vector<int> rank_of_block(blocks);
        for (int i = 0; i < blocks; ++i) rank_of_block[order[i]] = blocks - i;
        std::vector<Rat> w(m.n);
        for (int e = 0; e < m.n; ++e) w[e] = Rat(rank_of_block[block_of[e]]);
        return w;
    };
    auto rec = [&](auto&& self, int elem, int blocks) -> void {
        if (elem == m.n) {
            std::vector<int> order(blocks);
            std::iota(order.begin(), order.end(), 0);
            do {
                const MatroidType t = matroid_type(m, weights_of(order, blocks));
                if (is_loopfree_type(m, t)) seen.insert(t.bases);
            } while (std::next_permutation(order.begin(), order.end()));
            return;
        }
        for (int b = 0; b <= blocks; ++b) {
            block_of[elem] = b;
            self(self, elem + 1, std::max(blocks, b + 1));
        }
    };
    if (m.n == 0) {
        const MatroidType t{m.bases};
        seen.insert(t.bases);
    } else {
        rec(rec, 0, 0);
    }
    std::vector<MatroidType> out;
    out.reserve(seen.size());
    for (auto& bases : seen) out.push_back(MatroidType{bases});
    return out;
}

std::vector<int> psi_flats(const Matroid& m, const FlatLattice& l, const MatroidType& t) {
    std::vector<int> out;
    for (int i = 0; i < l.poset.size(); ++i) {
        const std::uint32_t f = l.flats[i];
        const int r = matroid_rank(m, f);
        bool tight = true;
        for (std::uint32_t b : t.bases)
            if (popcount(f & b) != r) { tight = false; break; }
        if (tight) out.push_back(i);
    }
    return out;
}

BergmanCheck verify_bergman_embedding(const Matroid& m, std::size_t max_chains) {
    require_input(is_loopfree(m), "verify_bergman_embedding needs a loopfree matroid");
    require_input(is_simple(m), "verify_bergman_embedding needs a simple matroid");
    BergmanCheck res;
    const FlatLattice l = lattice_of_flats(m);
    const DecompositionSet gmax = maximal_decomposition_set(l.poset);
    const FacePoset fp = decomposition_complex(l.poset, gmax, max_chains);
    const int bot = *l.poset.bottom();
    const int top = *l.poset.top();
    const std::vector<MatroidType> types = bergman_types(m);

    std::map<std::vector<int>, std::size_t> image;  // face members -> type index
    for (std::size_t i = 0; i < types.size(); ++i) {
        std::vector<int> face = psi_flats(m, l, types[i]);
        if (!std::binary_search(face.begin(), face.end(), bot) ||
            !std::binary_search(face.begin(), face.end(), top)) {
            res.reason = "an image set misses bottom or top";
            return res;
        }
        if (!image.emplace(std::move(face), i).second) {
            res.reason = "psi_flats is not injective on loopfree types";
            return res;
        }
    }
    for (const auto& [fa, ia] : image) {
        for (const auto& [fb, ib] : image) {
            const bool t_leq = type_leq(types[ia], types[ib]);
            const bool f_leq = std::includes(fb.begin(), fb.end(), fa.begin(), fa.end());
            if (t_leq != f_leq) {
                res.reason = "psi_flats does not preserve order both ways";
                return res;
            }
        }
    }
    std::size_t with_ends = 0;
    for (int i = 0; i < fp.size(); ++i) {
        const auto& members = fp.face(i).members;
        if (!std::binary_search(members.begin(), members.end(), bot) ||
            !std::binary_search(members.begin(), members.end(), top))
            continue;
        ++with_ends;
        if (!image.count(members)) {
            res.reason = "a face containing bottom and top is not an image";
            return res;
        }
        // Converse construction: each maximal chain of the face induces a
        // weight vector that must land back on this very face.
        const Poset ind = l.poset.induced(members);
        for (auto& c : enumerate_maximal_chains(ind)) {
            std::vector<Rat> w(m.n, Rat(0));
            for (int ci : c) {
                const std::uint32_t f = l.flats[members[ci]];
                for (int e = 0; e < m.n; ++e)
                    if (f & (1u << e)) w[e] = w[e] + Rat(1);
            }
            const MembershipResult mr = membership_test(m, l, gmax, w);
            if (!mr.inside || mr.face_members != members) {
                res.reason = "a chain weight vector does not recover its face";
                return res;
            }
            const MatroidType t = matroid_type(m, w);
            if (!is_loopfree_type(m, t) || psi_flats(m, l, t) != members) {
                res.reason = "a chain weight vector induces the wrong type";
                return res;
            }
        }
    }
    if (with_ends != image.size()) {
        res.reason = "face and type counts disagree";
        return res;
    }
    res.ok = true;
    return res;
}

BergmanFan bergman_fan_cones(const Matroid& m, std::size_t max_chains) {
    require_input(is_loopfree(m), "bergman_fan_cones needs a loopfree matroid");
    require_input(is_simple(m), "bergman_fan_cones needs a simple matroid");
    const FlatLattice l = lattice_of_flats(m);
    const DecompositionSet gmax = maximal_decomposition_set(l.poset);
    const FacePoset fp = decomposition_complex(l.poset, gmax, max_chains);
    const int bot = *l.poset.bottom();
    const int top = *l.poset.top();
    const std::uint32_t full = m.n == 0 ? 0 : (1u << m.n) - 1;

    BergmanFan fan;
    fan.n = m.n;
    // Components: every element's component is the smallest separator
    // containing it.
    std::vector<std::uint32_t> components;
    {
        std::vector<std::uint32_t> separators;
        for (std::uint32_t s = 0; s <= full && m.n > 0; ++s)
            if (matroid_rank(m, s) + matroid_rank(m, full & ~s) == m.rank)
                separators.push_back(s);
        for (int e = 0; e < m.n; ++e) {
            std::uint32_t comp = full;
            for (std::uint32_t s : separators)
                if (s & (1u << e)) comp &= s;
            if (std::find(components.begin(), components.end(), comp) == components.end())
                components.push_back(comp);
        }
    }
    fan.connected = components.size() <= 1;
    fan.lineality.push_back(full);
    if (!fan.connected)
        for (std::uint32_t c : components) fan.lineality.push_back(c);

    for (int i = 0; i < fp.size(); ++i) {
        const auto& members = fp.face(i).members;
        if (!std::binary_search(members.begin(), members.end(), bot) ||
            !std::binary_search(members.begin(), members.end(), top))
            continue;
        FanCone cone;
        cone.face_members = members;
        for (int id : members) {
            const std::uint32_t f = l.flats[id];
            if (f != 0 && f != full) cone.ray_flats.push_back(f);
        }
        fan.cones.push_back(std::move(cone));
    }
    return fan;
}

MembershipResult membership_test(const Matroid& m, const FlatLattice& l,
                                 const DecompositionSet& gmax, const std::vector<Rat>& w) {
    require_input(static_cast<int>(w.size()) == m.n,
                  "weight vector length must match the ground set");
    MembershipResult res;
    std::set<Rat> values(w.begin(), w.end());
    std::map<std::uint32_t, int> flat_id;
    for (int i = 0; i < l.poset.size(); ++i) flat_id.emplace(l.flats[i], i);
    const std::uint32_t full = m.n == 0 ? 0 : (1u << m.n) - 1;
    std::vector<int> seed{flat_id.at(0), flat_id.at(full)};
    for (auto it = values.rbegin(); it != values.rend(); ++it) {
        std::uint32_t level = 0;
        for (int e = 0; e < m.n; ++e)
            if (!(w[e] < *it)) level |= 1u << e;
        if (level == full) continue;  // lineality direction, not a ray
        if (matroid_closure_of(m, level) != level) return res;  // outside
        seed.push_back(flat_id.at(level));
    }
    res.inside = true;
    res.face_members = closure(gmax, seed);
    return res;
}

} // namespace decomp
