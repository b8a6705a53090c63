#include "decomp/enumeration.hpp"

#include <algorithm>
#include <map>
#include <string>

#include "decomp/diagnostics.hpp"

namespace decomp {

namespace {

using Matrix = std::vector<std::vector<unsigned char>>;

// Iterated neighbourhood refinement: start from (down-degree, up-degree) and
// fold in the sorted multiset of neighbour labels until stable.  The result
// is an isomorphism invariant per element, used to cut the permutation
// search for the canonical form.
std::vector<int> stable_labels(const Matrix& m, int n) {
    std::vector<std::vector<int>> lab(n);
    for (int i = 0; i < n; ++i) {
        int down = 0, up = 0;
        for (int j = 0; j < n; ++j) {
            if (m[j][i]) ++down;
            if (m[i][j]) ++up;
        }
        lab[i] = {down, up};
    }
    std::vector<int> code(n, 0);
    for (int round = 0; round < n; ++round) {
        std::vector<std::vector<int>> sorted_lab(lab.begin(), lab.end());
        std::sort(sorted_lab.begin(), sorted_lab.end());
        sorted_lab.erase(std::unique(sorted_lab.begin(), sorted_lab.end()), sorted_lab.end());
        std::vector<int> next_code(n);
        for (int i = 0; i < n; ++i)
            next_code[i] = static_cast<int>(
                std::lower_bound(sorted_lab.begin(), sorted_lab.end(), lab[i]) -
                sorted_lab.begin());
        if (next_code == code) break;
        code = next_code;
        for (int i = 0; i < n; ++i) {
            std::vector<int> down_codes, up_codes;
            for (int j = 0; j < n; ++j) {
                if (j == i) continue;
                if (m[j][i]) down_codes.push_back(code[j]);
                if (m[i][j]) up_codes.push_back(code[j]);
            }
            std::sort(down_codes.begin(), down_codes.end());
            std::sort(up_codes.begin(), up_codes.end());
            lab[i] = {code[i]};
            lab[i].insert(lab[i].end(), down_codes.begin(), down_codes.end());
            lab[i].push_back(-1);
            lab[i].insert(lab[i].end(), up_codes.begin(), up_codes.end());
        }
    }
    return code;
}

void canonical_rec(const Matrix& m, const std::vector<std::vector<int>>& slots,
                   std::size_t slot, std::vector<int>& perm, std::vector<char>& used,
                   std::string& best, int n) {
    if (slot == slots.size()) {
        std::string key(static_cast<std::size_t>(n) * n, '0');
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                if (m[perm[i]][perm[j]]) key[static_cast<std::size_t>(i) * n + j] = '1';
        if (best.empty() || key < best) best = std::move(key);
        return;
    }
    for (int cand : slots[slot]) {
        if (used[cand]) continue;
        used[cand] = 1;
        perm.push_back(cand);
        canonical_rec(m, slots, slot + 1, perm, used, best, n);
        perm.pop_back();
        used[cand] = 0;
    }
}

// Minimal 0/1 row-major matrix string over all label-compatible relabelings.
std::string canonical_key(const Matrix& m, int n) {
    if (n == 0) return "";
    const std::vector<int> code = stable_labels(m, n);
    // One slot per position; position order is nondecreasing label code, and
    // each slot accepts exactly the elements of its label class.
    std::vector<int> order(n);
    for (int i = 0; i < n; ++i) order[i] = i;
    std::sort(order.begin(), order.end(),
              [&](int a, int b) { return code[a] != code[b] ? code[a] < code[b] : a < b; });
    std::vector<std::vector<int>> slots(n);
    for (int pos = 0; pos < n; ++pos) {
        for (int e = 0; e < n; ++e)
            if (code[e] == code[order[pos]]) slots[pos].push_back(e);
    }
    std::string best;
    std::vector<int> perm;
    std::vector<char> used(n, 0);
    canonical_rec(m, slots, 0, perm, used, best, n);
    return best;
}

std::vector<std::string> default_names(int n) {
    std::vector<std::string> names(n);
    for (int i = 0; i < n; ++i) names[i] = "p" + std::to_string(i);
    return names;
}

Poset poset_from_matrix(const Matrix& m, int n) {
    Matrix withdiag = m;
    for (int i = 0; i < n; ++i) withdiag[i][i] = 1;
    return Poset::from_leq_matrix(default_names(n), std::move(withdiag));
}

std::vector<Matrix> extend_all(const std::vector<Matrix>& prev, int n) {
    std::map<std::string, Matrix> dedup;
    for (const Matrix& m : prev) {
        // Order ideals of the old poset; the new element sits above exactly
        // one ideal and is maximal, which reaches every isomorphism class.
        for (std::uint32_t subset = 0; subset < (1u << (n - 1)); ++subset) {
            bool ideal = true;
            for (int i = 0; i < n - 1 && ideal; ++i) {
                if (!(subset & (1u << i))) continue;
                for (int j = 0; j < n - 1; ++j)
                    if (m[j][i] && !(subset & (1u << j))) {
                        ideal = false;
                        break;
                    }
            }
            if (!ideal) continue;
            Matrix ext(n, std::vector<unsigned char>(n, 0));
            for (int i = 0; i < n - 1; ++i) {
                ext[i][i] = 1;
                for (int j = 0; j < n - 1; ++j) ext[i][j] = m[i][j];
                if (subset & (1u << i)) ext[i][n - 1] = 1;
            }
            ext[n - 1][n - 1] = 1;
            dedup.emplace(canonical_key(ext, n), ext);
        }
    }
    std::vector<Matrix> out;
    out.reserve(dedup.size());
    for (auto& [k, m] : dedup) out.push_back(std::move(m));
    return out;
}

} // namespace

const std::vector<Poset>& all_posets(int n) {
    require_input(n >= 0 && n <= 8, "all_posets supports 0 <= n <= 8");
    static std::vector<std::vector<Poset>> cache(9);
    static std::vector<std::vector<Matrix>> mats(9);
    static bool init = false;
    if (!init) {
        mats[0] = {Matrix{}};
        cache[0] = {Poset::from_leq_matrix({}, {})};
        init = true;
    }
    for (int k = 1; k <= n; ++k) {
        if (!cache[k].empty()) continue;
        mats[k] = extend_all(mats[k - 1], k);
        cache[k].reserve(mats[k].size());
        for (const Matrix& m : mats[k]) cache[k].push_back(poset_from_matrix(m, k));
    }
    return cache[n];
}

Poset random_poset(int n, std::mt19937_64& rng) {
    require_input(n >= 0, "random_poset needs n >= 0");
    Matrix m(n, std::vector<unsigned char>(n, 0));
    for (int i = 0; i < n; ++i) {
        m[i][i] = 1;
        for (int j = i + 1; j < n; ++j) m[i][j] = static_cast<unsigned char>(rng() & 1u);
    }
    for (int k = 0; k < n; ++k)
        for (int i = 0; i < n; ++i)
            if (m[i][k])
                for (int j = 0; j < n; ++j)
                    if (m[k][j]) m[i][j] = 1;
    return Poset::from_leq_matrix(default_names(n), std::move(m));
}

DecompositionSet random_normalized_set(const Poset& p, std::mt19937_64& rng) {
    const DecompositionSet gmax = maximal_decomposition_set(p);
    DecompositionSet g = trivial_decomposition_set(p);
    for (const auto& [t, d] : gmax.members()) {
        if (!d.proper()) continue;
        if (rng() & 1u) g.insert(d);
    }
    return normalize(g);
}

std::vector<Poset> lattice_family(int max_n) {
    require_input(max_n >= 1 && max_n <= 8, "lattice_family supports 1 <= max_n <= 8");
    std::vector<Poset> out;
    for (int n = 1; n <= max_n; ++n)
        for (const Poset& p : all_posets(n))
            if (p.is_lattice()) out.push_back(p);
    return out;
}

} // namespace decomp
