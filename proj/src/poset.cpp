#include "decomp/poset.hpp"

#include <algorithm>
#include <deque>
#include <set>

namespace decomp {

namespace {

// Shortest edge path from -> to in a digraph given as adjacency lists.
// Used only to produce a readable cycle witness in error messages.
std::vector<int> bfs_path(int from, int to, const std::vector<std::vector<int>>& adj) {
    std::vector<int> prev(adj.size(), -1);
    std::deque<int> queue{from};
    std::vector<char> seen(adj.size(), 0);
    seen[from] = 1;
    while (!queue.empty()) {
        int u = queue.front();
        queue.pop_front();
        if (u == to) break;
        for (int v : adj[u]) {
            if (!seen[v]) {
                seen[v] = 1;
                prev[v] = u;
                queue.push_back(v);
            }
        }
    }
    std::vector<int> path;
    for (int at = to; at != -1; at = prev[at]) path.push_back(at);
    std::reverse(path.begin(), path.end());
    return path;
}

} // namespace

void Poset::rebuild_index() {
    index_.clear();
    for (int i = 0; i < size(); ++i) {
        auto [it, fresh] = index_.emplace(names_[i], i);
        (void)it;
        require_input(fresh, "duplicate element name '" + names_[i] + "'");
    }
}

Poset Poset::from_relations(const std::vector<std::string>& elements,
                            const std::vector<std::pair<std::string, std::string>>& relations) {
    Poset p;
    p.names_ = elements;
    p.rebuild_index();
    const int n = p.size();
    p.leq_.assign(n, std::vector<unsigned char>(n, 0));
    std::vector<std::vector<int>> edges(n);
    for (int i = 0; i < n; ++i) p.leq_[i][i] = 1;
    for (const auto& [a, b] : relations) {
        int ia = p.index_of(a);
        int ib = p.index_of(b);
        if (!p.leq_[ia][ib]) {
            p.leq_[ia][ib] = 1;
            edges[ia].push_back(ib);
        }
    }
    // Reflexive transitive closure (Warshall).
    for (int k = 0; k < n; ++k)
        for (int i = 0; i < n; ++i) {
            if (!p.leq_[i][k]) continue;
            for (int j = 0; j < n; ++j)
                if (p.leq_[k][j]) p.leq_[i][j] = 1;
        }
    // Antisymmetry.  On failure, reconstruct one cycle through the original
    // relation edges so the message points at actual input.
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            if (p.leq_[a][b] && p.leq_[b][a]) {
                auto there = bfs_path(a, b, edges);
                auto back = bfs_path(b, a, edges);
                std::string cycle;
                for (int v : there) cycle += p.names_[v] + " <= ";
                for (std::size_t i = 1; i < back.size(); ++i) {
                    cycle += p.names_[back[i]];
                    if (i + 1 < back.size()) cycle += " <= ";
                }
                throw input_error("relations are not antisymmetric; cycle: " + cycle);
            }
    return p;
}

Poset Poset::from_leq_matrix(std::vector<std::string> names,
                             std::vector<std::vector<unsigned char>> leq) {
    Poset p;
    p.names_ = std::move(names);
    p.leq_ = std::move(leq);
    p.rebuild_index();
    const int n = p.size();
    require_internal(static_cast<int>(p.leq_.size()) == n, "leq matrix row count mismatch");
    for (int i = 0; i < n; ++i) {
        require_internal(static_cast<int>(p.leq_[i].size()) == n, "leq matrix not square");
        require_internal(p.leq_[i][i] != 0, "leq matrix not reflexive");
        for (int j = i + 1; j < n; ++j)
            require_internal(!(p.leq_[i][j] && p.leq_[j][i]), "leq matrix not antisymmetric");
    }
    // Transitivity is guaranteed by every internal caller; re-check it for
    // small instances only, since the check is cubic.
    if (n <= 400) {
        for (int i = 0; i < n; ++i)
            for (int k = 0; k < n; ++k) {
                if (!p.leq_[i][k]) continue;
                for (int j = 0; j < n; ++j)
                    require_internal(!(p.leq_[k][j] && !p.leq_[i][j]),
                                     "leq matrix not transitive");
            }
    }
    return p;
}

int Poset::index_of(const std::string& name) const {
    auto it = index_.find(name);
    require_input(it != index_.end(), "unknown element '" + name + "'");
    return it->second;
}

bool Poset::covers(int a, int b) const {
    if (!less(a, b)) return false;
    for (int c = 0; c < size(); ++c)
        if (less(a, c) && less(c, b)) return false;
    return true;
}

std::vector<std::pair<int, int>> Poset::cover_pairs() const {
    std::vector<std::pair<int, int>> out;
    for (int a = 0; a < size(); ++a)
        for (int b = 0; b < size(); ++b)
            if (covers(a, b)) out.emplace_back(a, b);
    return out;
}

std::vector<std::pair<int, int>> Poset::leq_pairs() const {
    std::vector<std::pair<int, int>> out;
    for (int a = 0; a < size(); ++a)
        for (int b = 0; b < size(); ++b)
            if (leq(a, b)) out.emplace_back(a, b);
    return out;
}

std::vector<int> Poset::interval(int a, int b) const {
    std::vector<int> out;
    if (!leq(a, b)) return out;
    for (int c = 0; c < size(); ++c)
        if (leq(a, c) && leq(c, b)) out.push_back(c);
    return out;
}

std::vector<int> Poset::minimal_elements() const {
    std::vector<int> out;
    for (int a = 0; a < size(); ++a) {
        bool min = true;
        for (int b = 0; b < size() && min; ++b)
            if (less(b, a)) min = false;
        if (min) out.push_back(a);
    }
    return out;
}

std::vector<int> Poset::maximal_elements() const {
    std::vector<int> out;
    for (int a = 0; a < size(); ++a) {
        bool max = true;
        for (int b = 0; b < size() && max; ++b)
            if (less(a, b)) max = false;
        if (max) out.push_back(a);
    }
    return out;
}

std::optional<int> Poset::bottom() const {
    auto mins = minimal_elements();
    if (mins.size() == 1) return mins[0];
    return std::nullopt;
}

std::optional<int> Poset::top() const {
    auto maxs = maximal_elements();
    if (maxs.size() == 1) return maxs[0];
    return std::nullopt;
}

std::optional<int> Poset::meet(int a, int b) const {
    std::vector<int> lower;
    for (int c = 0; c < size(); ++c)
        if (leq(c, a) && leq(c, b)) lower.push_back(c);
    for (int m : lower) {
        bool greatest = true;
        for (int c : lower)
            if (!leq(c, m)) { greatest = false; break; }
        if (greatest) return m;
    }
    return std::nullopt;
}

std::optional<int> Poset::join(int a, int b) const {
    std::vector<int> upper;
    for (int c = 0; c < size(); ++c)
        if (leq(a, c) && leq(b, c)) upper.push_back(c);
    for (int m : upper) {
        bool least = true;
        for (int c : upper)
            if (!leq(m, c)) { least = false; break; }
        if (least) return m;
    }
    return std::nullopt;
}

std::optional<int> Poset::join_of_set(const std::vector<int>& xs) const {
    std::vector<int> upper;
    for (int c = 0; c < size(); ++c) {
        bool ok = true;
        for (int x : xs)
            if (!leq(x, c)) { ok = false; break; }
        if (ok) upper.push_back(c);
    }
    for (int m : upper) {
        bool least = true;
        for (int c : upper)
            if (!leq(m, c)) { least = false; break; }
        if (least) return m;
    }
    return std::nullopt;
}

std::optional<int> Poset::meet_of_set(const std::vector<int>& xs) const {
    std::vector<int> lower;
    for (int c = 0; c < size(); ++c) {
        bool ok = true;
        for (int x : xs)
            if (!leq(c, x)) { ok = false; break; }
        if (ok) lower.push_back(c);
    }
    for (int m : lower) {
        bool greatest = true;
        for (int c : lower)
            if (!leq(c, m)) { greatest = false; break; }
        if (greatest) return m;
    }
    return std::nullopt;
}

bool Poset::is_lattice() const {
    for (int a = 0; a < size(); ++a)
        for (int b = a + 1; b < size(); ++b)
            if (!meet(a, b) || !join(a, b)) return false;
    return size() > 0;
}

bool Poset::is_graded(std::size_t max_chains) const {
    auto chains = enumerate_maximal_chains(*this, max_chains);
    for (const auto& c : chains)
        if (c.size() != chains.front().size()) return false;
    return true;
}

Poset Poset::dual() const {
    std::vector<std::vector<unsigned char>> t(size(), std::vector<unsigned char>(size(), 0));
    for (int a = 0; a < size(); ++a)
        for (int b = 0; b < size(); ++b) t[a][b] = leq_[b][a];
    return from_leq_matrix(names_, std::move(t));
}

Poset Poset::induced(const std::vector<int>& subset) const {
    std::set<int> distinct(subset.begin(), subset.end());
    require_input(distinct.size() == subset.size(), "induced subposet with repeated element");
    const int m = static_cast<int>(subset.size());
    std::vector<std::string> names(m);
    std::vector<std::vector<unsigned char>> sub(m, std::vector<unsigned char>(m, 0));
    for (int i = 0; i < m; ++i) {
        require_input(subset[i] >= 0 && subset[i] < size(), "induced subposet id out of range");
        names[i] = names_[subset[i]];
        for (int j = 0; j < m; ++j) sub[i][j] = leq_[subset[i]][subset[j]];
    }
    return from_leq_matrix(std::move(names), std::move(sub));
}

Poset Poset::renamed(const std::vector<std::string>& new_names) const {
    require_input(static_cast<int>(new_names.size()) == size(),
                  "rename list has wrong length");
    return from_leq_matrix(new_names, leq_);
}

Poset product(const Poset& p1, const Poset& p2) {
    for (const auto& nm : p1.names())
        require_input(nm.find(',') == std::string::npos,
                      "product factor name '" + nm + "' contains the ',' separator");
    for (const auto& nm : p2.names())
        require_input(nm.find(',') == std::string::npos,
                      "product factor name '" + nm + "' contains the ',' separator");
    const int n1 = p1.size(), n2 = p2.size();
    std::vector<std::string> names;
    names.reserve(static_cast<std::size_t>(n1) * n2);
    for (int a = 0; a < n1; ++a)
        for (int b = 0; b < n2; ++b) names.push_back(p1.name(a) + "," + p2.name(b));
    std::vector<std::vector<unsigned char>> leq(names.size(),
                                                std::vector<unsigned char>(names.size(), 0));
    for (int a = 0; a < n1; ++a)
        for (int b = 0; b < n2; ++b)
            for (int c = 0; c < n1; ++c)
                for (int d = 0; d < n2; ++d)
                    leq[a * n2 + b][c * n2 + d] = p1.leq(a, c) && p2.leq(b, d);
    return Poset::from_leq_matrix(std::move(names), std::move(leq));
}

Poset coproduct(const Poset& p1, const Poset& p2) {
    const int n1 = p1.size(), n2 = p2.size();
    std::vector<std::string> names;
    names.reserve(n1 + n2);
    for (int a = 0; a < n1; ++a) names.push_back("1:" + p1.name(a));
    for (int b = 0; b < n2; ++b) names.push_back("2:" + p2.name(b));
    std::vector<std::vector<unsigned char>> leq(names.size(),
                                                std::vector<unsigned char>(names.size(), 0));
    for (int a = 0; a < n1; ++a)
        for (int c = 0; c < n1; ++c) leq[a][c] = p1.leq(a, c);
    for (int b = 0; b < n2; ++b)
        for (int d = 0; d < n2; ++d) leq[n1 + b][n1 + d] = p2.leq(b, d);
    return Poset::from_leq_matrix(std::move(names), std::move(leq));
}

std::string subset_name(std::uint32_t mask) {
    if (mask == 0) return "∅";
    std::string out;
    for (int i = 0; i < 9; ++i)
        if (mask & (1u << i)) out += static_cast<char>('1' + i);
    return out;
}

std::uint32_t subset_mask_from_name(const std::string& name, int n) {
    if (name == "∅" || name.empty()) return 0;
    std::uint32_t mask = 0;
    for (char ch : name) {
        require_input(ch >= '1' && ch <= '9', "subset name '" + name + "' has non-digit character");
        int i = ch - '1';
        require_input(i < n, "subset name '" + name + "' mentions element beyond ground set");
        require_input(!(mask & (1u << i)), "subset name '" + name + "' repeats an element");
        mask |= 1u << i;
    }
    return mask;
}

Poset boolean_lattice(int n) {
    require_input(n >= 0 && n <= 9, "boolean_lattice supports 0 <= n <= 9");
    const std::uint32_t count = 1u << n;
    std::vector<std::string> names(count);
    for (std::uint32_t m = 0; m < count; ++m) names[m] = subset_name(m);
    std::vector<std::vector<unsigned char>> leq(count, std::vector<unsigned char>(count, 0));
    for (std::uint32_t a = 0; a < count; ++a)
        for (std::uint32_t b = 0; b < count; ++b) leq[a][b] = (a & b) == a;
    return Poset::from_leq_matrix(std::move(names), std::move(leq));
}

Poset chain_poset(int k) {
    std::vector<std::string> names(k);
    std::vector<std::vector<unsigned char>> leq(k, std::vector<unsigned char>(k, 0));
    for (int i = 0; i < k; ++i) {
        names[i] = "c" + std::to_string(i);
        for (int j = i; j < k; ++j) leq[i][j] = 1;
    }
    return Poset::from_leq_matrix(std::move(names), std::move(leq));
}

Poset antichain_poset(int k) {
    std::vector<std::string> names(k);
    std::vector<std::vector<unsigned char>> leq(k, std::vector<unsigned char>(k, 0));
    for (int i = 0; i < k; ++i) {
        names[i] = "a" + std::to_string(i);
        leq[i][i] = 1;
    }
    return Poset::from_leq_matrix(std::move(names), std::move(leq));
}

namespace {

struct IsoSearch {
    const Poset& A;
    const Poset& B;
    std::vector<int> fwd;  // A id -> B id, -1 unassigned
    std::vector<int> bwd;  // B id -> A id, -1 unassigned
    std::vector<std::pair<int, int>> degA, degB;  // (#below, #above) signature
    std::vector<std::vector<int>>* sink = nullptr;
    std::size_t cap = 1;
    bool done = false;

    IsoSearch(const Poset& a, const Poset& b) : A(a), B(b) {
        fwd.assign(A.size(), -1);
        bwd.assign(B.size(), -1);
        degA = signatures(A);
        degB = signatures(B);
    }

    static std::vector<std::pair<int, int>> signatures(const Poset& p) {
        std::vector<std::pair<int, int>> sig(p.size(), {0, 0});
        for (int a = 0; a < p.size(); ++a)
            for (int b = 0; b < p.size(); ++b) {
                if (p.less(b, a)) sig[a].first++;
                if (p.less(a, b)) sig[a].second++;
            }
        return sig;
    }

    bool compatible(int a, int b) const {
        if (degA[a] != degB[b]) return false;
        for (int a2 = 0; a2 < A.size(); ++a2) {
            int b2 = fwd[a2];
            if (b2 < 0) continue;
            if (A.leq(a, a2) != B.leq(b, b2)) return false;
            if (A.leq(a2, a) != B.leq(b2, b)) return false;
        }
        return true;
    }

    void run(int a) {
        if (done) return;
        while (a < A.size() && fwd[a] >= 0) ++a;
        if (a == A.size()) {
            sink->push_back(fwd);
            if (sink->size() >= cap) done = true;
            return;
        }
        for (int b = 0; b < B.size() && !done; ++b) {
            if (bwd[b] >= 0 || !compatible(a, b)) continue;
            fwd[a] = b;
            bwd[b] = a;
            run(a + 1);
            fwd[a] = -1;
            bwd[b] = -1;
        }
    }
};

bool is_order_isomorphism(const Poset& A, const Poset& B, const std::vector<int>& f) {
    if (static_cast<int>(f.size()) != A.size() || A.size() != B.size()) return false;
    std::vector<char> hit(B.size(), 0);
    for (int b : f) {
        if (b < 0 || b >= B.size() || hit[b]) return false;
        hit[b] = 1;
    }
    for (int a = 0; a < A.size(); ++a)
        for (int a2 = 0; a2 < A.size(); ++a2)
            if (A.leq(a, a2) != B.leq(f[a], f[a2])) return false;
    return true;
}

} // namespace

std::optional<std::vector<int>> find_order_isomorphism(
    const Poset& A, const Poset& B, const std::vector<std::pair<int, int>>& pinned) {
    auto all = all_order_isomorphisms(A, B, pinned, 1);
    if (all.empty()) return std::nullopt;
    return all.front();
}

std::vector<std::vector<int>> all_order_isomorphisms(
    const Poset& A, const Poset& B,
    const std::vector<std::pair<int, int>>& pinned, std::size_t cap) {
    std::vector<std::vector<int>> out;
    if (A.size() != B.size() || cap == 0) return out;
    IsoSearch search(A, B);
    for (auto [a, b] : pinned) {
        require_input(a >= 0 && a < A.size() && b >= 0 && b < B.size(),
                      "isomorphism pin out of range");
        if (search.fwd[a] == b) continue;
        if (search.fwd[a] >= 0 || search.bwd[b] >= 0 || !search.compatible(a, b)) return out;
        search.fwd[a] = b;
        search.bwd[b] = a;
    }
    search.sink = &out;
    search.cap = cap;
    search.run(0);
    for (const auto& f : out)
        require_internal(is_order_isomorphism(A, B, f),
                         "isomorphism search produced a non-isomorphism");
    return out;
}

namespace {

void chain_dfs(const Poset& p, std::vector<int>& chain, int last, std::size_t cap,
               std::vector<std::vector<int>>& out) {
    if (out.size() >= cap)
        throw resource_error("chain enumeration exceeded cap of " + std::to_string(cap));
    out.push_back(chain);
    for (int v = 0; v < p.size(); ++v) {
        if (!p.less(last, v)) continue;
        chain.push_back(v);
        chain_dfs(p, chain, v, cap, out);
        chain.pop_back();
    }
}

} // namespace

std::vector<std::vector<int>> enumerate_chains(const Poset& p, std::size_t cap) {
    std::vector<std::vector<int>> out;
    std::vector<int> chain;
    for (int a = 0; a < p.size(); ++a) {
        chain.assign(1, a);
        chain_dfs(p, chain, a, cap, out);
    }
    return out;
}

std::vector<std::vector<int>> enumerate_chains_between(const Poset& p, int lo, int hi,
                                                       std::size_t cap) {
    std::vector<std::vector<int>> out;
    if (!p.leq(lo, hi)) return out;
    // Depth-first over elements of [lo, hi]; record whenever the chain has
    // reached hi, keep extending otherwise.
    std::vector<int> chain{lo};
    auto dfs = [&](auto&& self, int last) -> void {
        if (last == hi) {
            if (out.size() >= cap)
                throw resource_error("chain enumeration exceeded cap of " + std::to_string(cap));
            out.push_back(chain);
            return;
        }
        for (int v = 0; v < p.size(); ++v) {
            if (!p.less(last, v) || !p.leq(v, hi)) continue;
            chain.push_back(v);
            self(self, v);
            chain.pop_back();
        }
    };
    dfs(dfs, lo);
    return out;
}

std::vector<std::vector<int>> enumerate_maximal_chains(const Poset& p, std::size_t cap) {
    // A chain is maximal exactly when it runs from a minimal element to a
    // maximal one through covers, so walk the cover digraph.
    std::vector<std::vector<int>> covers_up(p.size());
    for (int a = 0; a < p.size(); ++a)
        for (int b = 0; b < p.size(); ++b)
            if (p.covers(a, b)) covers_up[a].push_back(b);
    std::vector<std::vector<int>> out;
    std::vector<int> chain;
    auto dfs = [&](auto&& self, int last) -> void {
        if (covers_up[last].empty()) {
            if (out.size() >= cap)
                throw resource_error("maximal chain enumeration exceeded cap of " +
                                     std::to_string(cap));
            out.push_back(chain);
            return;
        }
        for (int v : covers_up[last]) {
            chain.push_back(v);
            self(self, v);
            chain.pop_back();
        }
    };
    for (int a : p.minimal_elements()) {
        chain.assign(1, a);
        dfs(dfs, a);
    }
    return out;
}

} // namespace decomp
