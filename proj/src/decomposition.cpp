#include "decomp/decomposition.hpp"

#include <algorithm>
#include <sstream>

#include "decomp/diagnostics.hpp"

namespace decomp {

namespace {

std::string triple_str(const Poset& p, int x, int z, int y) {
    std::ostringstream os;
    os << "(" << p.name(x) << ", " << p.name(z) << ", " << p.name(y) << ")";
    return os.str();
}

int index_in(const std::vector<int>& sorted_ids, int v) {
    auto it = std::lower_bound(sorted_ids.begin(), sorted_ids.end(), v);
    if (it == sorted_ids.end() || *it != v) return -1;
    return static_cast<int>(it - sorted_ids.begin());
}

// Product order on index pairs (i, j) over two induced subposets, with
// synthetic names.  Used for witness searches; deliberately avoids the
// name-joining product() so interval elements may contain any characters.
Poset pair_product_order(const Poset& p, const std::vector<int>& left,
                         const std::vector<int>& right) {
    const int nl = static_cast<int>(left.size());
    const int nr = static_cast<int>(right.size());
    const int n = nl * nr;
    std::vector<std::vector<unsigned char>> leq(n, std::vector<unsigned char>(n, 0));
    std::vector<std::string> names(n);
    for (int i = 0; i < nl; ++i) {
        for (int j = 0; j < nr; ++j) {
            names[i * nr + j] = "t" + std::to_string(i * nr + j);
            for (int i2 = 0; i2 < nl; ++i2) {
                for (int j2 = 0; j2 < nr; ++j2) {
                    leq[i * nr + j][i2 * nr + j2] =
                        (p.leq(left[i], left[i2]) && p.leq(right[j], right[j2])) ? 1 : 0;
                }
            }
        }
    }
    return Poset::from_leq_matrix(std::move(names), std::move(leq));
}

Decomposition decomposition_from_iso(int x, int z, int y,
                                     const std::vector<int>& left,
                                     const std::vector<int>& right,
                                     const std::vector<int>& target,
                                     const std::vector<int>& iso) {
    Decomposition d;
    d.x = x;
    d.z = z;
    d.y = y;
    d.left = left;
    d.right = right;
    const int nr = static_cast<int>(right.size());
    d.table.assign(left.size(), std::vector<int>(right.size(), -1));
    for (std::size_t i = 0; i < left.size(); ++i)
        for (std::size_t j = 0; j < right.size(); ++j)
            d.table[i][j] = target[iso[i * nr + j]];
    d.complement = d.table[index_in(left, x)][index_in(right, y)];
    return d;
}

} // namespace

int Decomposition::left_index(int u) const { return index_in(left, u); }
int Decomposition::right_index(int v) const { return index_in(right, v); }

int Decomposition::psi(int u, int v) const {
    const int i = left_index(u);
    const int j = right_index(v);
    require_internal(i >= 0 && j >= 0, "psi: arguments outside the witness factors");
    return table[i][j];
}

std::pair<int, int> Decomposition::psi_inv(int w) const {
    for (std::size_t i = 0; i < left.size(); ++i)
        for (std::size_t j = 0; j < right.size(); ++j)
            if (table[i][j] == w) return {left[i], right[j]};
    throw internal_error("psi_inv: value not in the witness table");
}

bool Decomposition::same_witness(const Decomposition& other) const {
    return x == other.x && z == other.z && y == other.y && left == other.left &&
           right == other.right && table == other.table;
}

void validate_decomposition(const Poset& p, const Decomposition& d) {
    require_input(d.x >= 0 && d.x < p.size() && d.z >= 0 && d.z < p.size() && d.y >= 0 &&
                      d.y < p.size(),
                  "decomposition refers to elements outside the poset");
    require_input(p.leq(d.x, d.z) && p.leq(d.z, d.y),
                  "decomposition triple " + triple_str(p, d.x, d.z, d.y) +
                      " is not a chain x <= z <= y");
    if (d.left != p.interval(d.x, d.z))
        throw verify_error("witness for " + triple_str(p, d.x, d.z, d.y) +
                           ": left factor is not the interval [x, z]");
    if (d.right != p.interval(d.z, d.y))
        throw verify_error("witness for " + triple_str(p, d.x, d.z, d.y) +
                           ": right factor is not the interval [z, y]");
    const std::vector<int> target = p.interval(d.x, d.y);
    if (d.table.size() != d.left.size())
        throw verify_error("witness table has wrong number of rows");
    std::vector<int> seen;
    for (std::size_t i = 0; i < d.table.size(); ++i) {
        if (d.table[i].size() != d.right.size())
            throw verify_error("witness table has wrong number of columns");
        for (int v : d.table[i]) seen.push_back(v);
    }
    std::sort(seen.begin(), seen.end());
    if (seen != target)
        throw verify_error("witness for " + triple_str(p, d.x, d.z, d.y) +
                           " is not a bijection onto [x, y]");
    const int iz_l = d.left_index(d.z);
    const int iz_r = d.right_index(d.z);
    require_internal(iz_l >= 0 && iz_r >= 0, "z missing from its own intervals");
    for (std::size_t i = 0; i < d.left.size(); ++i)
        if (d.table[i][iz_r] != d.left[i])
            throw verify_error("witness for " + triple_str(p, d.x, d.z, d.y) +
                               " does not fix the left factor: psi(u, z) != u");
    for (std::size_t j = 0; j < d.right.size(); ++j)
        if (d.table[iz_l][j] != d.right[j])
            throw verify_error("witness for " + triple_str(p, d.x, d.z, d.y) +
                               " does not fix the right factor: psi(z, v) != v");
    const std::size_t nl = d.left.size(), nr = d.right.size();
    for (std::size_t i = 0; i < nl; ++i)
        for (std::size_t j = 0; j < nr; ++j)
            for (std::size_t i2 = 0; i2 < nl; ++i2)
                for (std::size_t j2 = 0; j2 < nr; ++j2) {
                    const bool prod =
                        p.leq(d.left[i], d.left[i2]) && p.leq(d.right[j], d.right[j2]);
                    const bool img = p.leq(d.table[i][j], d.table[i2][j2]);
                    if (prod != img)
                        throw verify_error("witness for " + triple_str(p, d.x, d.z, d.y) +
                                           " is not an order isomorphism");
                }
    if (d.complement != d.table[d.left_index(d.x)][d.right_index(d.y)])
        throw verify_error("cached complement does not match psi(x, y)");
}

Decomposition trivial_left(const Poset& p, int x, int y) {
    require_input(p.leq(x, y), "trivial decomposition needs x <= y");
    Decomposition d;
    d.x = x;
    d.z = x;
    d.y = y;
    d.left = {x};
    d.right = p.interval(x, y);
    d.table.assign(1, d.right);
    d.complement = y;
    return d;
}

Decomposition trivial_right(const Poset& p, int x, int y) {
    require_input(p.leq(x, y), "trivial decomposition needs x <= y");
    Decomposition d;
    d.x = x;
    d.z = y;
    d.y = y;
    d.left = p.interval(x, y);
    d.right = {y};
    d.table.assign(d.left.size(), std::vector<int>(1));
    for (std::size_t i = 0; i < d.left.size(); ++i) d.table[i][0] = d.left[i];
    d.complement = x;
    return d;
}

std::optional<Decomposition> find_decomposition(const Poset& p, int x, int z, int y) {
    require_input(x >= 0 && x < p.size() && z >= 0 && z < p.size() && y >= 0 && y < p.size(),
                  "find_decomposition: element id out of range");
    if (!(p.leq(x, z) && p.leq(z, y))) return std::nullopt;
    if (z == x) return trivial_left(p, x, y);
    if (z == y) return trivial_right(p, x, y);
    const std::vector<int> left = p.interval(x, z);
    const std::vector<int> right = p.interval(z, y);
    const std::vector<int> target = p.interval(x, y);
    if (left.size() * right.size() != target.size()) return std::nullopt;
    const Poset prod = pair_product_order(p, left, right);
    const Poset tgt = p.induced(target);
    const int nr = static_cast<int>(right.size());
    std::vector<std::pair<int, int>> pins;
    const int iz_l = index_in(left, z);
    const int iz_r = index_in(right, z);
    for (std::size_t i = 0; i < left.size(); ++i)
        pins.push_back({static_cast<int>(i) * nr + iz_r, index_in(target, left[i])});
    for (int j = 0; j < nr; ++j)
        pins.push_back({iz_l * nr + j, index_in(target, right[j])});
    auto iso = find_order_isomorphism(prod, tgt, pins);
    if (!iso) return std::nullopt;
    Decomposition d = decomposition_from_iso(x, z, y, left, right, target, *iso);
    validate_decomposition(p, d);
    return d;
}

std::vector<Decomposition> all_decomposition_witnesses(const Poset& p, int x, int z, int y,
                                                       std::size_t cap) {
    std::vector<Decomposition> out;
    if (!(p.leq(x, z) && p.leq(z, y))) return out;
    if (z == x) {
        out.push_back(trivial_left(p, x, y));
        return out;
    }
    if (z == y) {
        out.push_back(trivial_right(p, x, y));
        return out;
    }
    const std::vector<int> left = p.interval(x, z);
    const std::vector<int> right = p.interval(z, y);
    const std::vector<int> target = p.interval(x, y);
    if (left.size() * right.size() != target.size()) return out;
    const Poset prod = pair_product_order(p, left, right);
    const Poset tgt = p.induced(target);
    const int nr = static_cast<int>(right.size());
    std::vector<std::pair<int, int>> pins;
    const int iz_l = index_in(left, z);
    const int iz_r = index_in(right, z);
    for (std::size_t i = 0; i < left.size(); ++i)
        pins.push_back({static_cast<int>(i) * nr + iz_r, index_in(target, left[i])});
    for (int j = 0; j < nr; ++j)
        pins.push_back({iz_l * nr + j, index_in(target, right[j])});
    for (const auto& iso : all_order_isomorphisms(prod, tgt, pins, cap)) {
        Decomposition d = decomposition_from_iso(x, z, y, left, right, target, iso);
        validate_decomposition(p, d);
        out.push_back(std::move(d));
    }
    return out;
}

Decomposition restrict_decomposition(const Poset& p, const Decomposition& d, int u, int v) {
    require_input(p.leq(d.x, u) && p.leq(u, v) && p.leq(v, d.y),
                  "restrict_decomposition needs x <= u <= v <= y");
    const int u2 = d.psi_inv(u).second;
    const int v1 = d.psi_inv(v).first;
    Decomposition r;
    r.x = u;
    r.z = d.psi(v1, u2);
    r.y = v;
    r.left = p.interval(u, r.z);
    r.right = p.interval(r.z, v);
    std::vector<int> lcoord(r.left.size());   // [u, m] lives at fixed right coordinate u2
    std::vector<int> rcoord(r.right.size());  // [m, v] lives at fixed left coordinate v1
    for (std::size_t i = 0; i < r.left.size(); ++i) {
        const auto [a, b] = d.psi_inv(r.left[i]);
        require_internal(b == u2, "restriction: left factor left its fiber");
        lcoord[i] = a;
    }
    for (std::size_t j = 0; j < r.right.size(); ++j) {
        const auto [a, b] = d.psi_inv(r.right[j]);
        require_internal(a == v1, "restriction: right factor left its fiber");
        rcoord[j] = b;
    }
    r.table.assign(r.left.size(), std::vector<int>(r.right.size(), -1));
    for (std::size_t i = 0; i < r.left.size(); ++i)
        for (std::size_t j = 0; j < r.right.size(); ++j)
            r.table[i][j] = d.psi(lcoord[i], rcoord[j]);
    r.complement = r.table[r.left_index(u)][r.right_index(v)];
    return r;
}

Decomposition complementary_decomposition(const Poset& p, const Decomposition& d) {
    Decomposition c;
    c.x = d.x;
    c.z = d.complement;
    c.y = d.y;
    c.left = p.interval(c.x, c.z);
    c.right = p.interval(c.z, c.y);
    std::vector<int> lcoord(c.left.size());   // [x, z'] is the fiber {x} x [z, y]
    std::vector<int> rcoord(c.right.size());  // [z', y] is the fiber [x, z] x {y}
    for (std::size_t i = 0; i < c.left.size(); ++i) {
        const auto [a, b] = d.psi_inv(c.left[i]);
        require_internal(a == d.x, "complement: left factor left its fiber");
        lcoord[i] = b;
    }
    for (std::size_t j = 0; j < c.right.size(); ++j) {
        const auto [a, b] = d.psi_inv(c.right[j]);
        require_internal(b == d.y, "complement: right factor left its fiber");
        rcoord[j] = a;
    }
    c.table.assign(c.left.size(), std::vector<int>(c.right.size(), -1));
    for (std::size_t i = 0; i < c.left.size(); ++i)
        for (std::size_t j = 0; j < c.right.size(); ++j)
            c.table[i][j] = d.psi(rcoord[j], lcoord[i]);
    c.complement = c.table[c.left_index(c.x)][c.right_index(c.y)];
    require_internal(c.complement == d.z, "complement of the complement moved");
    return c;
}

bool decomposition_leq(const Poset& p, const Decomposition& d1, const Decomposition& d2) {
    if (!(p.leq(d2.x, d1.x) && p.leq(d1.x, d1.y) && p.leq(d1.y, d2.y))) return false;
    return d1.same_witness(restrict_decomposition(p, d2, d1.x, d1.y));
}

const Decomposition* DecompositionSet::find(const Triple& t) const {
    auto it = members_.find(t);
    return it == members_.end() ? nullptr : &it->second;
}

bool DecompositionSet::insert(Decomposition d) {
    const Triple t = d.triple();
    if (members_.count(t)) return false;
    validate_decomposition(*p_, d);
    members_.emplace(t, std::move(d));
    return true;
}

std::vector<Triple> DecompositionSet::proper_triples() const {
    std::vector<Triple> out;
    for (const auto& [t, d] : members_)
        if (d.proper()) out.push_back(t);
    return out;
}

bool DecompositionSet::same_triples(const DecompositionSet& other) const {
    if (members_.size() != other.members_.size()) return false;
    return subset_of_triples(other);
}

bool DecompositionSet::subset_of_triples(const DecompositionSet& other) const {
    for (const auto& [t, d] : members_)
        if (!other.contains(t)) return false;
    return true;
}

bool DecompositionSet::is_symmetric() const {
    for (const auto& [t, d] : members_)
        if (!contains({d.x, d.complement, d.y})) return false;
    return true;
}

bool DecompositionSet::is_downward_closed() const {
    for (const auto& [t, d] : members_) {
        for (int u : p_->interval(d.x, d.y)) {
            for (int v : p_->interval(u, d.y)) {
                const Decomposition r = restrict_decomposition(*p_, d, u, v);
                if (!contains(r.triple())) return false;
            }
        }
    }
    return true;
}

DecompositionSet trivial_decomposition_set(const Poset& p) {
    DecompositionSet g(p);
    for (const auto& [x, y] : p.leq_pairs()) {
        g.insert(trivial_left(p, x, y));
        if (x != y) g.insert(trivial_right(p, x, y));
    }
    return g;
}

DecompositionSet maximal_decomposition_set(const Poset& p) {
    DecompositionSet g = trivial_decomposition_set(p);
    for (const auto& [x, y] : p.leq_pairs()) {
        if (x == y) continue;
        const std::vector<int> target = p.interval(x, y);
        for (int z : target) {
            if (z == x || z == y) continue;
            if (p.interval(x, z).size() * p.interval(z, y).size() != target.size()) continue;
            if (auto d = find_decomposition(p, x, z, y)) g.insert(std::move(*d));
        }
    }
    return g;
}

DecompositionSet decomposition_set_from_proper_triples(const Poset& p,
                                                       const std::vector<Triple>& triples) {
    DecompositionSet g = trivial_decomposition_set(p);
    for (const Triple& t : triples) {
        auto d = find_decomposition(p, t[0], t[1], t[2]);
        require_input(d.has_value(), "triple " + triple_str(p, t[0], t[1], t[2]) +
                                         " admits no decomposition witness");
        g.insert(std::move(*d));
    }
    return g;
}

DecompositionSet symmetric_closure(const DecompositionSet& g) {
    const Poset& p = g.poset();
    DecompositionSet out = g;
    bool grew = true;
    while (grew) {
        grew = false;
        std::vector<Decomposition> fresh;
        for (const auto& [t, d] : out.members()) {
            if (!out.contains({d.x, d.complement, d.y}))
                fresh.push_back(complementary_decomposition(p, d));
        }
        for (auto& d : fresh) grew |= out.insert(std::move(d));
    }
    return out;
}

DecompositionSet downward_closure(const DecompositionSet& g) {
    const Poset& p = g.poset();
    DecompositionSet out = g;
    std::vector<Decomposition> work;
    for (const auto& [t, d] : out.members()) work.push_back(d);
    while (!work.empty()) {
        const Decomposition d = std::move(work.back());
        work.pop_back();
        for (int u : p.interval(d.x, d.y)) {
            for (int v : p.interval(u, d.y)) {
                Decomposition r = restrict_decomposition(p, d, u, v);
                if (out.insert(r)) work.push_back(std::move(r));
            }
        }
    }
    return out;
}

DecompositionSet normalize(const DecompositionSet& g) {
    DecompositionSet cur = set_union(g, trivial_decomposition_set(g.poset()));
    for (;;) {
        DecompositionSet next = downward_closure(symmetric_closure(cur));
        if (next.size() == cur.size()) return next;
        cur = std::move(next);
    }
}

DecompositionSet set_union(const DecompositionSet& a, const DecompositionSet& b) {
    require_input(&a.poset() == &b.poset() || a.poset().names() == b.poset().names(),
                  "set_union: operands live over different posets");
    DecompositionSet out = a;
    for (const auto& [t, d] : b.members())
        if (!out.contains(t)) out.insert(d);
    return out;
}

std::vector<Decomposition> lower_hull(const Poset& p, const Decomposition& d) {
    std::map<Triple, Decomposition> acc;
    for (int u : p.interval(d.x, d.y)) {
        for (int v : p.interval(u, d.y)) {
            Decomposition r = restrict_decomposition(p, d, u, v);
            acc.emplace(r.triple(), std::move(r));
        }
    }
    std::vector<Decomposition> out;
    out.reserve(acc.size());
    for (auto& [t, r] : acc) out.push_back(std::move(r));
    return out;
}

std::vector<int> closure(const DecompositionSet& g, const std::vector<int>& a) {
    const Poset& p = g.poset();
    std::vector<char> in(p.size(), 0);
    for (int e : a) {
        require_input(e >= 0 && e < p.size(), "closure: element id out of range");
        in[e] = 1;
    }
    closure_in_place(g.proper_triples(), in);
    std::vector<int> out;
    for (int i = 0; i < p.size(); ++i)
        if (in[i]) out.push_back(i);
    return out;
}

void closure_in_place(const std::vector<Triple>& propers, std::vector<char>& in) {
    bool changed = true;
    while (changed) {
        changed = false;
        for (const Triple& t : propers) {
            if (in[t[0]] && in[t[2]] && !in[t[1]]) {
                in[t[1]] = 1;
                changed = true;
            }
        }
    }
}

bool is_minimal_wrt(const DecompositionSet& g, const Decomposition& d,
                    const std::vector<int>& a) {
    const Poset& p = g.poset();
    require_input(d.proper(), "is_minimal_wrt: decomposition must be proper");
    require_input(g.contains(d.triple()), "is_minimal_wrt: decomposition is not a member");
    std::vector<char> in(p.size(), 0);
    for (int e : a) in[e] = 1;
    if (!in[d.x] || !in[d.y]) return false;
    std::vector<int> inside;
    for (int w : p.interval(d.x, d.y))
        if (in[w]) inside.push_back(w);
    for (int u : inside) {
        for (int v : inside) {
            if (!p.leq(u, v)) continue;
            if (u == d.x && v == d.y) continue;
            const Decomposition r = restrict_decomposition(p, d, u, v);
            if (r.proper() && g.contains(r.triple())) return false;
        }
    }
    return true;
}

bool minimality_characterization_check(const DecompositionSet& g, const Decomposition& d,
                                       const std::vector<int>& a) {
    const Poset& p = g.poset();
    require_input(g.is_symmetric() && g.is_downward_closed(),
                  "minimality characterization needs a symmetric, downward closed set");
    std::vector<int> sorted_a(a);
    std::sort(sorted_a.begin(), sorted_a.end());
    require_input(closure(g, sorted_a) == sorted_a,
                  "minimality characterization needs a closed element set");
    require_input(d.proper() && g.contains(d.triple()),
                  "minimality characterization needs a proper member decomposition");
    std::vector<char> in(p.size(), 0);
    for (int e : sorted_a) in[e] = 1;
    require_input(in[d.x] && in[d.y],
                  "minimality characterization needs endpoints inside the element set");
    for (int w : p.interval(d.x, d.y)) {
        if (!in[w]) continue;
        if (w != d.x && w != d.z && w != d.complement && w != d.y) return false;
    }
    return true;
}

std::vector<DecompositionSet> build_generating_sequence(const DecompositionSet& g,
                                                        const std::vector<int>& a) {
    const Poset& p = g.poset();
    require_input(g.is_symmetric(), "generating sequence needs a symmetric set");
    require_input(g.is_downward_closed(), "generating sequence needs a downward closed set");
    std::vector<DecompositionSet> seq;
    seq.push_back(trivial_decomposition_set(p));
    for (;;) {
        require_internal(seq.size() <= g.size() + 1, "generating sequence failed to terminate");
        const DecompositionSet& cur = seq.back();
        const std::vector<int> cl = closure(cur, a);
        std::vector<char> in(p.size(), 0);
        for (int e : cl) in[e] = 1;
        const Decomposition* pick = nullptr;
        for (const auto& [t, d] : g.members()) {
            if (!d.proper() || cur.contains(t)) continue;
            if (!in[d.x] || !in[d.y]) continue;
            if (is_minimal_wrt(g, d, cl)) {
                pick = &d;
                break;
            }
        }
        if (!pick) break;
        DecompositionSet next = cur;
        for (auto& r : lower_hull(p, *pick)) next.insert(std::move(r));
        for (auto& r : lower_hull(p, complementary_decomposition(p, *pick)))
            next.insert(std::move(r));
        seq.push_back(std::move(next));
    }
    return seq;
}

DecompositionSet dual_set(const DecompositionSet& g, const Poset& pdual) {
    require_input(g.poset().names() == pdual.names(),
                  "dual_set: the dual poset must keep the element names");
    DecompositionSet out(pdual);
    for (const auto& [t, d] : g.members()) {
        Decomposition e;
        e.x = d.y;
        e.z = d.z;
        e.y = d.x;
        e.left = d.right;
        e.right = d.left;
        e.table.assign(e.left.size(), std::vector<int>(e.right.size(), -1));
        for (std::size_t i = 0; i < e.left.size(); ++i)
            for (std::size_t j = 0; j < e.right.size(); ++j)
                e.table[i][j] = d.table[j][i];
        e.complement = d.complement;
        out.insert(std::move(e));
    }
    return out;
}

DecompositionSet transport(const DecompositionSet& g, const Poset& to,
                           const std::vector<int>& iso) {
    const Poset& from = g.poset();
    require_input(static_cast<int>(iso.size()) == from.size() && from.size() == to.size(),
                  "transport: the map must cover the source poset");
    DecompositionSet out(to);
    for (const auto& [t, d] : g.members()) {
        Decomposition e;
        e.x = iso[d.x];
        e.z = iso[d.z];
        e.y = iso[d.y];
        const std::size_t nl = d.left.size(), nr = d.right.size();
        std::vector<std::size_t> lperm(nl), rperm(nr);
        for (std::size_t i = 0; i < nl; ++i) lperm[i] = i;
        for (std::size_t j = 0; j < nr; ++j) rperm[j] = j;
        std::sort(lperm.begin(), lperm.end(),
                  [&](std::size_t a, std::size_t b) { return iso[d.left[a]] < iso[d.left[b]]; });
        std::sort(rperm.begin(), rperm.end(),
                  [&](std::size_t a, std::size_t b) { return iso[d.right[a]] < iso[d.right[b]]; });
        e.left.resize(nl);
        e.right.resize(nr);
        for (std::size_t i = 0; i < nl; ++i) e.left[i] = iso[d.left[lperm[i]]];
        for (std::size_t j = 0; j < nr; ++j) e.right[j] = iso[d.right[rperm[j]]];
        e.table.assign(nl, std::vector<int>(nr, -1));
        for (std::size_t i = 0; i < nl; ++i)
            for (std::size_t j = 0; j < nr; ++j)
                e.table[i][j] = iso[d.table[lperm[i]][rperm[j]]];
        e.complement = iso[d.complement];
        out.insert(std::move(e));
    }
    return out;
}

} // namespace decomp
