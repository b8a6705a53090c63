#include "decomp/complex.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <sstream>

#include "decomp/diagnostics.hpp"
#include "decomp/enumeration.hpp"

namespace decomp {

namespace {

bool subset_of(const std::vector<int>& a, const std::vector<int>& b) {
    return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

std::vector<int> intersect(const std::vector<int>& a, const std::vector<int>& b) {
    std::vector<int> out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

bool face_order(const Face& a, const Face& b) {
    if (a.members.size() != b.members.size()) return a.members.size() < b.members.size();
    return a.members < b.members;
}

struct Dsu {
    std::vector<int> parent;
    explicit Dsu(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); }
    void unite(int a, int b) { parent[find(a)] = find(b); }
};

void require_normalized(const DecompositionSet& g, const char* who) {
    require_input(g.is_symmetric(), std::string(who) + " needs a symmetric decomposition set");
    require_input(g.is_downward_closed(),
                  std::string(who) + " needs a downward closed decomposition set");
}

} // namespace

FacePoset::FacePoset(std::vector<Face> faces) : faces_(std::move(faces)) {
    std::sort(faces_.begin(), faces_.end(), face_order);
    for (int i = 0; i < static_cast<int>(faces_.size()); ++i) {
        const bool fresh = index_.emplace(faces_[i].members, i).second;
        require_internal(fresh, "duplicate face member set");
    }
    for (int i = 0; i < static_cast<int>(faces_.size()); ++i) {
        for (int j = 0; j < static_cast<int>(faces_.size()); ++j) {
            if (i == j || !face_leq(i, j)) continue;
            bool cover = true;
            for (int k = 0; k < static_cast<int>(faces_.size()) && cover; ++k)
                if (k != i && k != j && face_leq(i, k) && face_leq(k, j)) cover = false;
            if (cover) covers_.push_back({i, j});
        }
    }
}

bool FacePoset::face_leq(int i, int j) const {
    return subset_of(faces_[i].members, faces_[j].members);
}

std::optional<int> FacePoset::index_of(const std::vector<int>& members) const {
    auto it = index_.find(members);
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

std::vector<int> FacePoset::maximal_faces() const {
    std::vector<int> out;
    for (int i = 0; i < size(); ++i) {
        bool maximal = true;
        for (int j = 0; j < size() && maximal; ++j)
            if (i != j && face_leq(i, j)) maximal = false;
        if (maximal) out.push_back(i);
    }
    return out;
}

std::map<std::size_t, std::size_t> FacePoset::counts_by_cardinality() const {
    std::map<std::size_t, std::size_t> out;
    for (const Face& f : faces_) ++out[f.members.size()];
    return out;
}

Poset FacePoset::as_poset(const Poset& ground) const {
    std::vector<std::string> names(faces_.size());
    for (std::size_t i = 0; i < faces_.size(); ++i) {
        std::ostringstream os;
        os << "{";
        for (std::size_t k = 0; k < faces_[i].members.size(); ++k) {
            if (k) os << ",";
            os << ground.name(faces_[i].members[k]);
        }
        os << "}";
        names[i] = os.str();
    }
    const int n = size();
    std::vector<std::vector<unsigned char>> leq(n, std::vector<unsigned char>(n, 0));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) leq[i][j] = face_leq(i, j) ? 1 : 0;
    return Poset::from_leq_matrix(std::move(names), std::move(leq));
}

namespace {

struct ChainDfs {
    const Poset& p;
    const std::vector<Triple>& propers;
    std::size_t cap;
    std::size_t count = 0;
    std::map<std::vector<int>, std::vector<int>> closures;  // members -> first generator

    void record(const std::vector<int>& chain, const std::vector<char>& mask) {
        ++count;
        if (count > cap)
            throw resource_error("chain enumeration exceeded cap of " + std::to_string(cap));
        std::vector<int> members;
        for (int i = 0; i < p.size(); ++i)
            if (mask[i]) members.push_back(i);
        closures.emplace(std::move(members), chain);
    }

    void extend(std::vector<int>& chain, const std::vector<char>& mask) {
        record(chain, mask);
        for (int v = 0; v < p.size(); ++v) {
            if (!p.less(chain.back(), v)) continue;
            std::vector<char> next = mask;
            next[v] = 1;
            closure_in_place(propers, next);
            chain.push_back(v);
            extend(chain, next);
            chain.pop_back();
        }
    }
};

} // namespace

FacePoset decomposition_complex(const Poset& p, const DecompositionSet& g,
                                std::size_t max_chains) {
    const std::vector<Triple> propers = g.proper_triples();
    ChainDfs dfs{p, propers, max_chains, 0, {}};
    for (int v = 0; v < p.size(); ++v) {
        std::vector<char> mask(p.size(), 0);
        mask[v] = 1;
        closure_in_place(propers, mask);
        std::vector<int> chain{v};
        dfs.extend(chain, mask);
    }
    std::vector<Face> faces;
    faces.reserve(dfs.closures.size());
    for (auto& [members, gen] : dfs.closures) faces.push_back(Face{members, gen});
    return FacePoset(std::move(faces));
}

FacePoset order_complex_face_poset(const Poset& p, std::size_t max_chains) {
    std::vector<Face> faces;
    for (auto& chain : enumerate_chains(p, max_chains)) faces.push_back(Face{chain, chain});
    return FacePoset(std::move(faces));
}

FaceCheck is_face(const Poset& p, const DecompositionSet& g, const std::vector<int>& a) {
    require_normalized(g, "is_face");
    FaceCheck res;
    std::vector<int> sorted_a(a);
    std::sort(sorted_a.begin(), sorted_a.end());
    sorted_a.erase(std::unique(sorted_a.begin(), sorted_a.end()), sorted_a.end());
    if (sorted_a.empty()) {
        res.reason = "the empty set is not a face";
        return res;
    }
    if (closure(g, sorted_a) != sorted_a) {
        res.reason = "not closed";
        return res;
    }
    const Poset ind = p.induced(sorted_a);
    for (auto& c : enumerate_maximal_chains(ind)) {
        std::vector<int> chain(c.size());
        for (std::size_t k = 0; k < c.size(); ++k) chain[k] = sorted_a[c[k]];
        if (closure(g, chain) != sorted_a) {
            res.reason = "closed but a maximal chain fails to generate it";
            return res;
        }
        if (res.certificate.empty()) res.certificate = chain;
    }
    res.ok = true;
    return res;
}

std::vector<std::vector<std::vector<int>>> chain_classes(const Poset& p,
                                                         const DecompositionSet& g,
                                                         const std::vector<int>& a) {
    require_normalized(g, "chain_classes");
    std::vector<int> sorted_a(a);
    std::sort(sorted_a.begin(), sorted_a.end());
    sorted_a.erase(std::unique(sorted_a.begin(), sorted_a.end()), sorted_a.end());
    require_input(closure(g, sorted_a) == sorted_a, "chain_classes needs a closed element set");
    const Poset ind = p.induced(sorted_a);
    std::vector<std::vector<int>> chains;
    std::map<std::vector<int>, int> chain_index;
    for (auto& c : enumerate_maximal_chains(ind)) {
        std::vector<int> chain(c.size());
        for (std::size_t k = 0; k < c.size(); ++k) chain[k] = sorted_a[c[k]];
        chain_index.emplace(chain, static_cast<int>(chains.size()));
        chains.push_back(std::move(chain));
    }
    Dsu dsu(static_cast<int>(chains.size()));
    const std::vector<Triple> propers = g.proper_triples();
    for (int ci = 0; ci < static_cast<int>(chains.size()); ++ci) {
        const std::vector<int>& chain = chains[ci];
        std::vector<char> cl(p.size(), 0);
        for (int e : chain) cl[e] = 1;
        closure_in_place(propers, cl);
        for (const Triple& t : propers) {
            if (!cl[t[0]] || !cl[t[2]]) continue;
            if (!std::binary_search(chain.begin(), chain.end(), t[1])) continue;
            const Decomposition* d = g.find(t);
            std::vector<int> moved;
            for (int e : chain)
                if (e != t[1]) moved.push_back(e);
            moved.push_back(d->complement);
            std::sort(moved.begin(), moved.end());
            moved.erase(std::unique(moved.begin(), moved.end()), moved.end());
            auto it = chain_index.find(moved);
            if (it != chain_index.end()) dsu.unite(ci, it->second);
        }
    }
    std::map<int, std::vector<std::vector<int>>> grouped;
    for (int ci = 0; ci < static_cast<int>(chains.size()); ++ci)
        grouped[dsu.find(ci)].push_back(chains[ci]);
    std::vector<std::vector<std::vector<int>>> out;
    for (auto& [root, cls] : grouped) out.push_back(std::move(cls));
    std::sort(out.begin(), out.end(),
              [](const auto& x, const auto& y) { return x.front() < y.front(); });
    return out;
}

bool verify_face_lattice(const Poset& p, const DecompositionSet& g, const Face& f) {
    require_normalized(g, "verify_face_lattice");
    return p.induced(f.members).is_lattice();
}

bool check_pseudo_complex(const FacePoset& fp) {
    for (int i = 0; i < fp.size(); ++i) {
        for (int j = i + 1; j < fp.size(); ++j) {
            const std::vector<int> inter = intersect(fp.face(i).members, fp.face(j).members);
            if (inter.empty()) continue;
            std::vector<char> covered(inter.size(), 0);
            for (int k = 0; k < fp.size(); ++k) {
                if (!subset_of(fp.face(k).members, inter)) continue;
                for (std::size_t t = 0; t < inter.size(); ++t)
                    if (std::binary_search(fp.face(k).members.begin(),
                                           fp.face(k).members.end(), inter[t]))
                        covered[t] = 1;
            }
            for (char c : covered)
                if (!c) return false;
        }
    }
    return true;
}

bool is_polytopal_complex(const FacePoset& fp) {
    for (int i = 0; i < fp.size(); ++i) {
        for (int j = i + 1; j < fp.size(); ++j) {
            const std::vector<int> inter = intersect(fp.face(i).members, fp.face(j).members);
            if (inter.empty()) continue;
            if (!fp.index_of(inter)) return false;
        }
    }
    return true;
}

namespace {

std::optional<IntersectionExample> scan_poset(const Poset& p) {
    const DecompositionSet g = maximal_decomposition_set(p);
    const FacePoset fp = decomposition_complex(p, g);
    for (int i = 0; i < fp.size(); ++i) {
        for (int j = i + 1; j < fp.size(); ++j) {
            std::vector<int> inter = intersect(fp.face(i).members, fp.face(j).members);
            if (inter.empty() || fp.index_of(inter)) continue;
            return IntersectionExample{p, fp.face(i).members, fp.face(j).members,
                                       std::move(inter)};
        }
    }
    return std::nullopt;
}

} // namespace

std::optional<IntersectionExample> find_intersection_counterexample(int exhaustive_max_n,
                                                                    int random_max_n,
                                                                    std::size_t random_trials,
                                                                    std::uint64_t seed) {
    for (int n = 1; n <= exhaustive_max_n && n <= 8; ++n)
        for (const Poset& p : all_posets(n))
            if (auto hit = scan_poset(p)) return hit;
    std::mt19937_64 rng(seed);
    for (std::size_t t = 0; t < random_trials; ++t) {
        const int n = 5 + static_cast<int>(t % static_cast<std::size_t>(
                                               std::max(1, random_max_n - 4)));
        const Poset p = random_poset(n, rng);
        if (auto hit = scan_poset(p)) return hit;
    }
    return std::nullopt;
}

} // namespace decomp
