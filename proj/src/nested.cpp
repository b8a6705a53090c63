#include "decomp/nested.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "decomp/diagnostics.hpp"

namespace decomp {

namespace {

int require_bottom(const Poset& p, const char* who) {
    const auto bot = p.bottom();
    require_input(bot.has_value(), std::string(who) + " needs a poset with a unique minimum");
    return *bot;
}

std::vector<int> checked_building(const Poset& p, const std::vector<int>& building, int bot,
                                  const char* who) {
    std::vector<int> out(building);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    for (int g : out) {
        require_input(g >= 0 && g < p.size(),
                      std::string(who) + ": building set member out of range");
        require_input(g != bot,
                      std::string(who) + ": building set must not contain the minimum");
    }
    return out;
}

// Enumerates subsets of `s` that are pairwise incomparable, invoking the
// callback on each subset of size >= 2.  Returns false early when the
// callback reports a violation.
template <typename F>
bool for_each_antichain(const Poset& p, const std::vector<int>& s, F&& check) {
    std::vector<int> current;
    auto rec = [&](auto&& self, std::size_t start) -> bool {
        if (current.size() >= 2 && !check(current)) return false;
        for (std::size_t i = start; i < s.size(); ++i) {
            bool incomparable = true;
            for (int c : current)
                if (p.comparable(c, s[i])) { incomparable = false; break; }
            if (!incomparable) continue;
            current.push_back(s[i]);
            if (!self(self, i + 1)) return false;
            current.pop_back();
        }
        return true;
    };
    return rec(rec, 0);
}

bool join_outside(const Poset& p, const std::vector<int>& building,
                  const std::vector<int>& subset) {
    const auto j = p.join_of_set(subset);
    if (!j) return false;
    return !std::binary_search(building.begin(), building.end(), *j);
}

std::string name_set(const Poset& p, const std::vector<int>& v) {
    std::string out = "{";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += ",";
        out += p.name(v[i]);
    }
    return out + "}";
}

} // namespace

std::vector<int> factors(const Poset& p, const std::vector<int>& building, int y) {
    const int bot = require_bottom(p, "factors");
    const std::vector<int> g = checked_building(p, building, bot, "factors");
    require_input(y >= 0 && y < p.size(), "factors: element out of range");
    require_input(y != bot, "factors is undefined at the minimum");
    std::vector<int> below;
    for (int m : g)
        if (p.leq(m, y)) below.push_back(m);
    std::vector<int> out;
    for (int a : below) {
        bool maximal = true;
        for (int b : below)
            if (a != b && p.less(a, b)) { maximal = false; break; }
        if (maximal) out.push_back(a);
    }
    return out;
}

BuildingCheck is_building_set(const Poset& p, const std::vector<int>& building) {
    const int bot = require_bottom(p, "is_building_set");
    const std::vector<int> g = checked_building(p, building, bot, "is_building_set");
    BuildingCheck res;
    for (int y = 0; y < p.size(); ++y) {
        if (y == bot) continue;
        res.witness = y;
        const std::vector<int> f = factors(p, g, y);
        if (f.empty()) {
            res.reason = "no building-set member lies below " + p.name(y);
            return res;
        }
        const std::vector<int> target = p.interval(bot, y);
        std::vector<std::vector<int>> intervals;
        std::size_t tuple_count = 1;
        for (int z : f) {
            intervals.push_back(p.interval(bot, z));
            tuple_count *= intervals.back().size();
            if (tuple_count > target.size()) break;
        }
        if (tuple_count != target.size()) {
            res.reason = "factor intervals of " + p.name(y) +
                         " have the wrong total size";
            return res;
        }
        // Walk all coordinate tuples, joining as we go.
        std::vector<std::vector<int>> tuples;
        std::vector<int> current;
        auto rec = [&](auto&& self, std::size_t idx) -> void {
            if (idx == intervals.size()) {
                tuples.push_back(current);
                return;
            }
            for (int u : intervals[idx]) {
                current.push_back(u);
                self(self, idx + 1);
                current.pop_back();
            }
        };
        rec(rec, 0);
        std::vector<int> images;
        images.reserve(tuples.size());
        for (const auto& t : tuples) {
            const auto j = p.join_of_set(t);
            if (!j) {
                res.reason = "a coordinate join below " + p.name(y) + " does not exist";
                return res;
            }
            images.push_back(*j);
        }
        std::set<int> distinct(images.begin(), images.end());
        if (distinct.size() != target.size() ||
            !std::includes(target.begin(), target.end(), distinct.begin(), distinct.end())) {
            res.reason = "joining coordinates is not a bijection onto [min, " + p.name(y) + "]";
            return res;
        }
        for (std::size_t a = 0; a < tuples.size(); ++a) {
            for (std::size_t b = 0; b < tuples.size(); ++b) {
                bool tuple_leq = true;
                for (std::size_t c = 0; c < tuples[a].size(); ++c)
                    if (!p.leq(tuples[a][c], tuples[b][c])) { tuple_leq = false; break; }
                if (tuple_leq != p.leq(images[a], images[b])) {
                    res.reason = "joining coordinates below " + p.name(y) +
                                 " does not preserve order both ways";
                    return res;
                }
            }
        }
    }
    res.ok = true;
    res.witness = -1;
    return res;
}

bool is_nested(const Poset& p, const std::vector<int>& building, const std::vector<int>& s) {
    const int bot = require_bottom(p, "is_nested");
    const std::vector<int> g = checked_building(p, building, bot, "is_nested");
    std::vector<int> set(s);
    std::sort(set.begin(), set.end());
    set.erase(std::unique(set.begin(), set.end()), set.end());
    for (int e : set)
        require_input(std::binary_search(g.begin(), g.end(), e),
                      "is_nested: the set must lie inside the building set");
    // A comparable pair already fails (its join is the larger member, which
    // sits in the building set), so only antichains survive to the full
    // subset scan below.
    for (std::size_t i = 0; i < set.size(); ++i)
        for (std::size_t j = i + 1; j < set.size(); ++j)
            if (p.comparable(set[i], set[j])) return false;
    const std::size_t count = set.size();
    if (count > 20) throw resource_error("is_nested supports at most 20 members");
    for (std::size_t mask = 1; mask < (std::size_t{1} << count); ++mask) {
        if (__builtin_popcountll(mask) < 2) continue;
        std::vector<int> subset;
        for (std::size_t i = 0; i < count; ++i)
            if (mask & (std::size_t{1} << i)) subset.push_back(set[i]);
        if (!join_outside(p, g, subset)) return false;
    }
    return true;
}

bool is_nested_antichain(const Poset& p, const std::vector<int>& building,
                         const std::vector<int>& s) {
    const int bot = require_bottom(p, "is_nested_antichain");
    const std::vector<int> g = checked_building(p, building, bot, "is_nested_antichain");
    std::vector<int> set(s);
    std::sort(set.begin(), set.end());
    set.erase(std::unique(set.begin(), set.end()), set.end());
    for (int e : set)
        require_input(std::binary_search(g.begin(), g.end(), e),
                      "is_nested_antichain: the set must lie inside the building set");
    return for_each_antichain(p, set,
                              [&](const std::vector<int>& a) { return join_outside(p, g, a); });
}

FacePoset nested_set_complex(const Poset& p, const std::vector<int>& building) {
    const BuildingCheck bc = is_building_set(p, building);
    require_input(bc.ok, "nested_set_complex needs a building set: " + bc.reason);
    const int bot = *p.bottom();
    const std::vector<int> g = checked_building(p, building, bot, "nested_set_complex");
    std::vector<Face> faces;
    std::vector<int> current;
    // Nestedness is hereditary, so depth-first growth visits exactly the
    // nested sets and can prune as soon as a candidate fails.
    auto rec = [&](auto&& self, std::size_t start) -> void {
        if (!current.empty()) faces.push_back(Face{current, current});
        for (std::size_t i = start; i < g.size(); ++i) {
            current.push_back(g[i]);
            if (is_nested(p, g, current))
                self(self, i + 1);
            current.pop_back();
        }
    };
    rec(rec, 0);
    return FacePoset(std::move(faces));
}

DecompositionSet nested_target_set(const Poset& p, const std::vector<int>& building) {
    const int bot = require_bottom(p, "nested_target_set");
    const std::vector<int> g = checked_building(p, building, bot, "nested_target_set");
    DecompositionSet out = trivial_decomposition_set(p);
    const DecompositionSet gmax = maximal_decomposition_set(p);
    for (const auto& [t, d] : gmax.members()) {
        if (d.trivial() || d.x != bot) continue;
        if (std::binary_search(g.begin(), g.end(), d.y)) continue;
        out.insert(d);
    }
    return out;
}

std::vector<int> nested_embedding(const Poset& p, const std::vector<int>& building,
                                  const std::vector<int>& s, const DecompositionSet* target) {
    const int bot = require_bottom(p, "nested_embedding");
    const std::vector<int> g = checked_building(p, building, bot, "nested_embedding");
    require_input(is_nested(p, g, s), "nested_embedding needs a nested set");
    std::vector<int> set(s);
    std::sort(set.begin(), set.end());
    set.erase(std::unique(set.begin(), set.end()), set.end());
    std::set<int> members{bot};
    const std::size_t count = set.size();
    require_input(count <= 20, "nested_embedding supports at most 20 members");
    for (std::size_t mask = 1; mask < (std::size_t{1} << count); ++mask) {
        std::vector<int> subset;
        for (std::size_t i = 0; i < count; ++i)
            if (mask & (std::size_t{1} << i)) subset.push_back(set[i]);
        const auto j = p.join_of_set(subset);
        require_internal(j.has_value(),
                         "nested set has a subset without a join, contradicting nestedness");
        members.insert(*j);
    }
    std::vector<int> face(members.begin(), members.end());
    DecompositionSet built(p);
    if (!target) {
        built = nested_target_set(p, g);
        target = &built;
    }
    const Poset ind = p.induced(face);
    for (auto& c : enumerate_maximal_chains(ind)) {
        std::vector<int> chain(c.size());
        for (std::size_t k = 0; k < c.size(); ++k) chain[k] = face[c[k]];
        require_internal(closure(*target, chain) == face,
                         "nested-set image " + name_set(p, face) +
                             " is not generated by its maximal chain " + name_set(p, chain));
    }
    return face;
}

NestedImageCheck verify_nested_image(const Poset& p, const std::vector<int>& building,
                                     std::size_t max_chains) {
    NestedImageCheck res;
    const BuildingCheck bc = is_building_set(p, building);
    require_input(bc.ok, "verify_nested_image needs a building set: " + bc.reason);
    const int bot = *p.bottom();
    const std::vector<int> g = checked_building(p, building, bot, "verify_nested_image");
    const DecompositionSet target = nested_target_set(p, g);
    const FacePoset fp = decomposition_complex(p, target, max_chains);

    std::vector<std::vector<int>> nested_sets{{}};
    std::vector<int> current;
    auto rec = [&](auto&& self, std::size_t start) -> void {
        for (std::size_t i = start; i < g.size(); ++i) {
            current.push_back(g[i]);
            if (is_nested(p, g, current)) {
                nested_sets.push_back(current);
                self(self, i + 1);
            }
            current.pop_back();
        }
    };
    rec(rec, 0);

    std::map<std::vector<int>, std::vector<int>> image;  // face members -> nested set
    for (const auto& s : nested_sets) {
        std::vector<int> face;
        try {
            face = nested_embedding(p, g, s, &target);
        } catch (const internal_error& e) {
            // The embedding asserts that its output is a face; on building
            // sets where that fails we report the offending nested set
            // instead of aborting the scan.
            res.reason = std::string("nested set ") + name_set(p, s) + ": " + e.what();
            return res;
        }
        auto [it, fresh] = image.emplace(std::move(face), s);
        if (!fresh) {
            res.reason = "embedding is not injective";
            return res;
        }
    }
    for (const auto& [fa, sa] : image) {
        for (const auto& [fb, sb] : image) {
            const bool s_leq = std::includes(sb.begin(), sb.end(), sa.begin(), sa.end());
            const bool f_leq = std::includes(fb.begin(), fb.end(), fa.begin(), fa.end());
            if (s_leq != f_leq) {
                res.reason = "embedding does not preserve order both ways";
                return res;
            }
        }
    }
    std::size_t with_bottom = 0;
    for (int i = 0; i < fp.size(); ++i) {
        const auto& members = fp.face(i).members;
        if (!std::binary_search(members.begin(), members.end(), bot)) continue;
        ++with_bottom;
        if (!image.count(members)) {
            res.reason = "face " + name_set(p, members) +
                         " contains the minimum but is not the image of any nested set";
            return res;
        }
    }
    if (with_bottom != image.size()) {
        res.reason = "embedding image contains a set that is not a face with the minimum";
        return res;
    }
    res.ok = true;
    return res;
}

} // namespace decomp
