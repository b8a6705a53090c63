#include "decomp/realization.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <sstream>

#include "decomp/diagnostics.hpp"

namespace decomp {

namespace {

std::uint64_t bit(int i) { return std::uint64_t{1} << i; }

bool mask_subset(std::uint64_t a, std::uint64_t b) { return (a & ~b) == 0; }

std::string mask_str(std::uint64_t m, int n) {
    std::string out = "{";
    bool first = true;
    for (int i = 0; i < n; ++i)
        if (m & bit(i)) {
            if (!first) out += ",";
            out += std::to_string(i + 1);
            first = false;
        }
    return out + "}";
}

// Gauss-Jordan solve of the barycentric system for the given vertex subset:
// coordinates stacked over the sum-to-one row.  Returns nothing when the
// subset is affinely dependent or the point is outside its affine hull.
std::optional<std::vector<Rat>> solve_barycentric(const std::vector<std::uint64_t>& verts,
                                                  const std::vector<int>& subset, int n,
                                                  const std::vector<Rat>& q) {
    const int k = static_cast<int>(subset.size());
    const int rows = n + 1;
    std::vector<std::vector<Rat>> m(rows, std::vector<Rat>(k + 1));
    for (int r = 0; r < n; ++r) {
        for (int c = 0; c < k; ++c)
            m[r][c] = Rat((verts[subset[c]] >> r) & 1);
        m[r][k] = q[r];
    }
    for (int c = 0; c < k; ++c) m[n][c] = Rat(1);
    m[n][k] = Rat(1);

    std::vector<int> pivot_row(k, -1);
    int next_row = 0;
    for (int c = 0; c < k; ++c) {
        int pr = -1;
        for (int r = next_row; r < rows; ++r)
            if (!m[r][c].is_zero()) { pr = r; break; }
        if (pr < 0) return std::nullopt;  // affinely dependent subset
        std::swap(m[pr], m[next_row]);
        const Rat inv = Rat(1) / m[next_row][c];
        for (int cc = c; cc <= k; ++cc) m[next_row][cc] = m[next_row][cc] * inv;
        for (int r = 0; r < rows; ++r) {
            if (r == next_row || m[r][c].is_zero()) continue;
            const Rat f = m[r][c];
            for (int cc = c; cc <= k; ++cc)
                m[r][cc] = m[r][cc] - f * m[next_row][cc];
        }
        pivot_row[c] = next_row;
        ++next_row;
    }
    for (int r = next_row; r < rows; ++r)
        if (!m[r][k].is_zero()) return std::nullopt;  // inconsistent
    std::vector<Rat> lambda(k);
    for (int c = 0; c < k; ++c) lambda[c] = m[pivot_row[c]][k];
    return lambda;
}

} // namespace

Realization canonical_min_realization(const Poset& p) {
    require_input(p.size() <= 64, "canonical realization supports at most 64 elements");
    Realization r;
    r.n = p.size();
    r.phi.resize(p.size(), 0);
    for (int x = 0; x < p.size(); ++x)
        for (int i = 0; i < p.size(); ++i)
            if (p.leq(i, x)) r.phi[x] |= bit(i);
    return r;
}

Realization atom_realization(const Poset& p) {
    const auto bot = p.bottom();
    require_input(bot.has_value(), "atom realization needs a bottom element");
    std::vector<int> atoms;
    for (auto& [a, b] : p.cover_pairs())
        if (a == *bot) atoms.push_back(b);
    std::sort(atoms.begin(), atoms.end());
    require_input(atoms.size() <= 64, "atom realization supports at most 64 atoms");
    Realization r;
    r.n = static_cast<int>(atoms.size());
    r.phi.resize(p.size(), 0);
    for (int x = 0; x < p.size(); ++x)
        for (std::size_t j = 0; j < atoms.size(); ++j)
            if (p.leq(atoms[j], x)) r.phi[x] |= bit(static_cast<int>(j));
    return r;
}

Realization identity_realization(const Poset& p, int n) {
    if (n < 0) {
        for (int x = 0; x < p.size(); ++x)
            for (char ch : p.name(x))
                if (ch >= '1' && ch <= '9') n = std::max(n, ch - '0');
        n = std::max(n, 0);
    }
    require_input(n <= 9, "identity realization reads digit names, so n <= 9");
    Realization r;
    r.n = n;
    r.phi.resize(p.size(), 0);
    for (int x = 0; x < p.size(); ++x)
        r.phi[x] = subset_mask_from_name(p.name(x), n);
    return r;
}

Realization realization_from_masks(const Poset& p, int n, std::vector<std::uint64_t> phi) {
    require_input(n >= 0 && n <= 64, "realization ambient size must be between 0 and 64");
    require_input(static_cast<int>(phi.size()) == p.size(),
                  "realization needs one coordinate set per poset element");
    const std::uint64_t full = n == 64 ? ~std::uint64_t{0} : bit(n) - 1;
    for (std::uint64_t m : phi)
        require_input(mask_subset(m, full), "realization mask uses a coordinate beyond n");
    Realization r;
    r.n = n;
    r.phi = std::move(phi);
    return r;
}

RealizationCheck verify_realization(const Poset& p, const DecompositionSet& g,
                                    const Realization& r) {
    require_input(g.is_symmetric(), "verify_realization needs a symmetric decomposition set");
    require_input(g.is_downward_closed(),
                  "verify_realization needs a downward closed decomposition set");
    require_input(static_cast<int>(r.phi.size()) == p.size(),
                  "realization size does not match the poset");
    RealizationCheck res;
    for (int x = 0; x < p.size(); ++x) {
        for (int y = 0; y < p.size(); ++y) {
            if (p.leq(x, y) != mask_subset(r.phi[x], r.phi[y])) {
                std::ostringstream os;
                os << "order embedding fails at (" << p.name(x) << ", " << p.name(y)
                   << "): " << mask_str(r.phi[x], r.n) << " vs " << mask_str(r.phi[y], r.n);
                res.reason = os.str();
                return res;
            }
        }
    }
    for (auto& [t, d] : g.members()) {
        const int zc = d.complement;
        const bool meet_ok = r.phi[d.x] == (r.phi[d.z] & r.phi[zc]);
        const bool join_ok = r.phi[d.y] == (r.phi[d.z] | r.phi[zc]);
        if (meet_ok && join_ok) continue;
        std::ostringstream os;
        os << (meet_ok ? "union" : "intersection") << " equation fails for the pair ("
           << p.name(d.x) << "," << p.name(d.z) << "," << p.name(d.y) << "), ("
           << p.name(d.x) << "," << p.name(zc) << "," << p.name(d.y) << ")";
        res.reason = os.str();
        return res;
    }
    res.ok = true;
    return res;
}

ZeroOnePolytope gamma(const Realization& r, const std::vector<int>& a) {
    ZeroOnePolytope poly;
    poly.n = r.n;
    poly.label = a;
    std::sort(poly.label.begin(), poly.label.end());
    poly.label.erase(std::unique(poly.label.begin(), poly.label.end()), poly.label.end());
    for (int x : poly.label) {
        require_input(x >= 0 && x < static_cast<int>(r.phi.size()),
                      "gamma label mentions an element outside the poset");
        poly.vertices.push_back(r.phi[x]);
    }
    std::sort(poly.vertices.begin(), poly.vertices.end());
    poly.vertices.erase(std::unique(poly.vertices.begin(), poly.vertices.end()),
                        poly.vertices.end());
    return poly;
}

std::vector<Rat> vertex_point(std::uint64_t mask, int n) {
    std::vector<Rat> pt(n);
    for (int i = 0; i < n; ++i) pt[i] = Rat((mask >> i) & 1);
    return pt;
}

int affine_dim(const ZeroOnePolytope& poly) {
    if (poly.vertices.empty()) return -1;
    const std::uint64_t v0 = poly.vertices.front();
    std::vector<std::vector<Rat>> rows;
    for (std::size_t i = 1; i < poly.vertices.size(); ++i) {
        std::vector<Rat> row(poly.n);
        for (int c = 0; c < poly.n; ++c)
            row[c] = Rat(((poly.vertices[i] >> c) & 1)) - Rat(((v0 >> c) & 1));
        rows.push_back(std::move(row));
    }
    int rank = 0;
    for (int c = 0; c < poly.n && rank < static_cast<int>(rows.size()); ++c) {
        int pr = -1;
        for (int r = rank; r < static_cast<int>(rows.size()); ++r)
            if (!rows[r][c].is_zero()) { pr = r; break; }
        if (pr < 0) continue;
        std::swap(rows[pr], rows[rank]);
        for (int r = 0; r < static_cast<int>(rows.size()); ++r) {
            if (r == rank || rows[r][c].is_zero()) continue;
            const Rat f = rows[r][c] / rows[rank][c];
            for (int cc = c; cc < poly.n; ++cc)
                rows[r][cc] = rows[r][cc] - f * rows[rank][cc];
        }
        ++rank;
    }
    return rank;
}

bool point_in_polytope(const ZeroOnePolytope& poly, const std::vector<Rat>& q) {
    require_internal(static_cast<int>(q.size()) == poly.n,
                     "point dimension does not match polytope");
    const int v = static_cast<int>(poly.vertices.size());
    if (v == 0) return false;
    for (std::uint64_t mask : poly.vertices)
        if (vertex_point(mask, poly.n) == q) return true;
    const int kmax = std::min(v, affine_dim(poly) + 1);
    // Caratheodory: membership is witnessed by an affinely independent
    // subset, so scanning subsets of size <= dim+1 is exhaustive.
    std::vector<int> subset;
    for (int k = 2; k <= kmax; ++k) {
        subset.resize(k);
        for (int i = 0; i < k; ++i) subset[i] = i;
        while (true) {
            if (auto lambda = solve_barycentric(poly.vertices, subset, poly.n, q)) {
                bool nonneg = true;
                for (const Rat& l : *lambda)
                    if (l < Rat(0)) { nonneg = false; break; }
                if (nonneg) return true;
            }
            int i = k - 1;
            while (i >= 0 && subset[i] == v - k + i) --i;
            if (i < 0) break;
            ++subset[i];
            for (int j = i + 1; j < k; ++j) subset[j] = subset[j - 1] + 1;
        }
    }
    return false;
}

std::vector<std::vector<Rat>> grid_points(const ZeroOnePolytope& poly, int denominator) {
    require_input(denominator >= 1, "grid denominator must be at least 1");
    const int v = static_cast<int>(poly.vertices.size());
    std::set<std::vector<Rat>> seen;
    if (v == 0) return {};
    std::vector<int> counts(v, 0);
    for (int m = 1; m <= denominator; ++m) {
        // Enumerate all ways to split weight m across the vertices.
        auto rec = [&](auto&& self, int idx, int left) -> void {
            if (idx == v - 1) {
                counts[idx] = left;
                std::vector<Rat> pt(poly.n, Rat(0));
                for (int i = 0; i < v; ++i) {
                    if (!counts[i]) continue;
                    for (int c = 0; c < poly.n; ++c)
                        if ((poly.vertices[i] >> c) & 1)
                            pt[c] = pt[c] + Rat(counts[i], m);
                }
                seen.insert(std::move(pt));
                return;
            }
            for (int take = 0; take <= left; ++take) {
                counts[idx] = take;
                self(self, idx + 1, left - take);
            }
        };
        rec(rec, 0, m);
    }
    return {seen.begin(), seen.end()};
}

PseudoComplex realize_complex(const Poset& p, const DecompositionSet& g,
                              const Realization& r, std::size_t max_chains) {
    const RealizationCheck rc = verify_realization(p, g, r);
    require_input(rc.ok, "realization rejected: " + rc.reason);
    PseudoComplex pc;
    pc.n = r.n;
    pc.phi = r.phi;
    pc.faces = decomposition_complex(p, g, max_chains);
    for (int i = 0; i < pc.faces.size(); ++i)
        pc.cells.push_back(gamma(r, pc.faces.face(i).members));
    require_internal(check_pseudo_complex(pc.faces),
                     "realized complex violates the pseudo-complex axiom");
    return pc;
}

bool union_decomposition_check(const Realization& r, int x, int z, int z_comp, int y,
                               int denominator) {
    const ZeroOnePolytope whole = gamma(r, {x, z, z_comp, y});
    const ZeroOnePolytope left = gamma(r, {x, z, y});
    const ZeroOnePolytope right = gamma(r, {x, z_comp, y});
    for (const auto& pt : grid_points(whole, denominator))
        if (!point_in_polytope(left, pt) && !point_in_polytope(right, pt)) return false;
    for (const auto& pt : grid_points(left, denominator))
        if (!point_in_polytope(whole, pt)) return false;
    for (const auto& pt : grid_points(right, denominator))
        if (!point_in_polytope(whole, pt)) return false;
    return true;
}

bool chain_cone_cover_check(const Poset& p, const Realization& r,
                            const std::vector<int>& a, int denominator) {
    std::vector<int> sorted_a(a);
    std::sort(sorted_a.begin(), sorted_a.end());
    sorted_a.erase(std::unique(sorted_a.begin(), sorted_a.end()), sorted_a.end());
    const ZeroOnePolytope whole = gamma(r, sorted_a);
    const Poset ind = p.induced(sorted_a);
    std::vector<ZeroOnePolytope> chain_polys;
    for (auto& c : enumerate_maximal_chains(ind)) {
        std::vector<int> chain(c.size());
        for (std::size_t k = 0; k < c.size(); ++k) chain[k] = sorted_a[c[k]];
        chain_polys.push_back(gamma(r, chain));
    }
    for (const auto& pt : grid_points(whole, denominator)) {
        bool covered = false;
        for (const auto& cp : chain_polys)
            if (point_in_polytope(cp, pt)) { covered = true; break; }
        if (!covered) return false;
    }
    for (const auto& cp : chain_polys)
        for (const auto& pt : grid_points(cp, denominator))
            if (!point_in_polytope(whole, pt)) return false;
    return true;
}

bool is_subdivision(const PseudoComplex& fine, const PseudoComplex& coarse,
                    int denominator) {
    require_input(fine.n == coarse.n && fine.phi == coarse.phi,
                  "subdivision check needs complexes over the same realization");
    for (int i = 0; i < fine.faces.size(); ++i) {
        const auto& members = fine.faces.face(i).members;
        bool inside = false;
        for (int j = 0; j < coarse.faces.size() && !inside; ++j)
            if (std::includes(coarse.faces.face(j).members.begin(),
                              coarse.faces.face(j).members.end(), members.begin(),
                              members.end()))
                inside = true;
        if (!inside) return false;
    }
    for (int j = 0; j < coarse.faces.size(); ++j) {
        const auto& target = coarse.faces.face(j).members;
        std::set<int> covered;
        for (int i = 0; i < fine.faces.size(); ++i) {
            const auto& members = fine.faces.face(i).members;
            if (std::includes(target.begin(), target.end(), members.begin(), members.end()))
                covered.insert(members.begin(), members.end());
        }
        if (std::vector<int>(covered.begin(), covered.end()) != target) return false;
    }
    for (const auto& cell : fine.cells) {
        for (std::uint64_t mask : cell.vertices) {
            const std::vector<Rat> pt = vertex_point(mask, fine.n);
            bool inside = false;
            for (const auto& cc : coarse.cells)
                if (point_in_polytope(cc, pt)) { inside = true; break; }
            if (!inside) return false;
        }
    }
    for (const auto& cc : coarse.cells) {
        for (const auto& pt : grid_points(cc, denominator)) {
            bool covered = false;
            for (const auto& fc : fine.cells)
                if (point_in_polytope(fc, pt)) { covered = true; break; }
            if (!covered) return false;
        }
    }
    return true;
}

bool is_polytopal_complex(const PseudoComplex& pc) { return is_polytopal_complex(pc.faces); }

std::string verdict_name(RealizabilityVerdict v) {
    return v == RealizabilityVerdict::NOT_REALIZABLE ? "NOT_REALIZABLE" : "UNKNOWN";
}

RealizabilityVerdict realizability_probe(const Poset& p, const DecompositionSet& g,
                                         std::size_t max_chains) {
    const FacePoset fp = decomposition_complex(p, g, max_chains);
    if (fp.size() == 0) return RealizabilityVerdict::UNKNOWN;
    return fp.as_poset(p).is_graded(max_chains) ? RealizabilityVerdict::UNKNOWN
                                                : RealizabilityVerdict::NOT_REALIZABLE;
}

} // namespace decomp
