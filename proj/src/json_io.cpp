#include "decomp/json_io.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include <json.hpp>

#include "decomp/diagnostics.hpp"
#include "decomp/nested.hpp"
#include "decomp/product.hpp"

namespace decomp {

using ojson = nlohmann::ordered_json;

namespace {

ojson parse_json(const std::string& text) {
    try {
        return ojson::parse(text);
    } catch (const std::exception& e) {
        throw input_error(std::string("invalid JSON: ") + e.what());
    }
}

const ojson& need(const ojson& j, const char* key) {
    require_input(j.is_object(), "expected a JSON object");
    auto it = j.find(key);
    require_input(it != j.end(), std::string("missing key '") + key + "'");
    return *it;
}

std::string need_string(const ojson& j, const char* what) {
    require_input(j.is_string(), std::string(what) + " must be a string");
    return j.get<std::string>();
}

int need_int(const ojson& j, const char* what) {
    require_input(j.is_number_integer(), std::string(what) + " must be an integer");
    return j.get<int>();
}

std::vector<int> mask_to_coords(std::uint64_t mask, int n) {
    std::vector<int> out;
    for (int i = 0; i < n; ++i)
        if (mask >> i & 1) out.push_back(i + 1);
    return out;
}

ojson names_array(const Poset& p, const std::vector<int>& ids) {
    ojson arr = ojson::array();
    for (int id : ids) arr.push_back(p.name(id));
    return arr;
}

std::vector<int> ids_from_names(const Poset& p, const ojson& arr, const char* what) {
    require_input(arr.is_array(), std::string(what) + " must be an array of element names");
    std::vector<int> out;
    for (const auto& el : arr) out.push_back(p.index_of(need_string(el, what)));
    return out;
}

ojson face_poset_json(const FacePoset& fp, const Poset& ground) {
    ojson faces = ojson::array();
    for (const Face& f : fp.faces()) {
        ojson entry;
        entry["members"] = names_array(ground, f.members);
        entry["generator"] = names_array(ground, f.generator);
        faces.push_back(std::move(entry));
    }
    ojson covers = ojson::array();
    for (auto [i, j] : fp.cover_pairs()) covers.push_back(ojson::array({i, j}));
    ojson out;
    out["faces"] = std::move(faces);
    out["covers"] = std::move(covers);
    return out;
}

std::string dump(const ojson& j) { return j.dump(2) + "\n"; }

} // namespace

std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    require_input(in.good(), "cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_text_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    require_input(out.good(), "cannot open '" + path + "' for writing");
    out << text;
    require_input(out.good(), "write to '" + path + "' failed");
}

Poset poset_from_json_text(const std::string& text) {
    ojson j = parse_json(text);
    const ojson& elems = need(j, "elements");
    require_input(elems.is_array(), "'elements' must be an array");
    std::vector<std::string> names;
    for (const auto& e : elems) names.push_back(need_string(e, "element name"));
    const ojson& rels = need(j, "relations");
    require_input(rels.is_array(), "'relations' must be an array");
    std::vector<std::pair<std::string, std::string>> pairs;
    for (const auto& r : rels) {
        require_input(r.is_array() && r.size() == 2, "each relation must be a pair [a, b]");
        pairs.emplace_back(need_string(r[0], "relation endpoint"),
                           need_string(r[1], "relation endpoint"));
    }
    return Poset::from_relations(names, pairs);
}

std::string poset_to_json_text(const Poset& p) {
    ojson out;
    out["elements"] = p.names();
    ojson rels = ojson::array();
    for (auto [a, b] : p.cover_pairs())
        rels.push_back(ojson::array({p.name(a), p.name(b)}));
    out["relations"] = std::move(rels);
    return dump(out);
}

Poset poset_from_source(const std::string& source) {
    require_input(!source.empty(), "empty poset source");
    if (source.front() == '{') return poset_from_json_text(source);
    return poset_from_json_text(read_text_file(source));
}

DecompositionSet decomposition_set_from_json_text(const Poset& p, const std::string& text) {
    ojson j = parse_json(text);
    const ojson& arr = need(j, "triples");
    require_input(arr.is_array(), "'triples' must be an array");
    std::vector<Triple> propers;
    for (const auto& t : arr) {
        require_input(t.is_array() && t.size() == 3, "each triple must be [x, z, y]");
        Triple triple{p.index_of(need_string(t[0], "triple entry")),
                      p.index_of(need_string(t[1], "triple entry")),
                      p.index_of(need_string(t[2], "triple entry"))};
        if (triple[0] == triple[1] || triple[1] == triple[2]) continue;
        propers.push_back(triple);
    }
    return decomposition_set_from_proper_triples(p, propers);
}

std::string decomposition_set_to_json_text(const DecompositionSet& g) {
    const Poset& p = g.poset();
    ojson arr = ojson::array();
    for (const Triple& t : g.proper_triples())
        arr.push_back(ojson::array({p.name(t[0]), p.name(t[1]), p.name(t[2])}));
    ojson out;
    out["triples"] = std::move(arr);
    return dump(out);
}

DecompositionSet decomposition_set_from_selector(const Poset& p, const std::string& selector) {
    require_input(!selector.empty(), "empty decomposition set selector");
    if (selector == "min") return trivial_decomposition_set(p);
    if (selector == "max") return maximal_decomposition_set(p);
    if (selector.rfind("file:", 0) == 0)
        return decomposition_set_from_json_text(p, read_text_file(selector.substr(5)));
    if (selector.front() == '{') return decomposition_set_from_json_text(p, selector);
    if (selector.rfind("product:", 0) == 0) {
        std::vector<std::string> parts;
        std::string rest = selector.substr(8);
        std::size_t pos = 0;
        while (true) {
            std::size_t semi = rest.find(';', pos);
            if (semi == std::string::npos) {
                parts.push_back(rest.substr(pos));
                break;
            }
            parts.push_back(rest.substr(pos, semi - pos));
            pos = semi + 1;
        }
        require_input(parts.size() == 4,
                      "product selector needs POSET1;GSEL1;POSET2;GSEL2");
        Poset p1 = poset_from_source(parts[0]);
        Poset p2 = poset_from_source(parts[2]);
        DecompositionSet g1 = decomposition_set_from_selector(p1, parts[1]);
        DecompositionSet g2 = decomposition_set_from_selector(p2, parts[3]);
        Poset pp = product(p1, p2);
        DecompositionSet gp = product_decomposition_set(pp, g1, g2);
        auto iso = find_order_isomorphism(pp, p, {});
        require_input(iso.has_value(),
                      "the target poset is not isomorphic to the stated product");
        return transport(gp, p, *iso);
    }
    throw input_error("unknown decomposition set selector '" + selector + "'");
}

std::string face_poset_to_json_text(const FacePoset& fp, const Poset& ground) {
    return dump(face_poset_json(fp, ground));
}

FacePoset face_poset_from_json_text(const Poset& ground, const std::string& text) {
    ojson j = parse_json(text);
    const ojson& faces = need(j, "faces");
    require_input(faces.is_array(), "'faces' must be an array");
    std::vector<Face> parsed;
    for (const auto& f : faces) {
        Face face;
        face.members = ids_from_names(ground, need(f, "members"), "'members'");
        face.generator = ids_from_names(ground, need(f, "generator"), "'generator'");
        parsed.push_back(std::move(face));
    }
    FacePoset fp(std::move(parsed));
    const ojson& covers = need(j, "covers");
    require_input(covers.is_array(), "'covers' must be an array");
    std::vector<std::pair<int, int>> listed;
    for (const auto& c : covers) {
        require_input(c.is_array() && c.size() == 2, "each cover must be a pair [i, j]");
        listed.emplace_back(need_int(c[0], "cover index"), need_int(c[1], "cover index"));
    }
    require_input(listed == fp.cover_pairs(),
                  "the listed covers do not match the face set");
    return fp;
}

namespace {

// Vertex ids shared across all cells, in increasing mask order.
std::pair<std::vector<std::uint64_t>, std::map<std::uint64_t, int>> vertex_table(
    const PseudoComplex& pc) {
    std::set<std::uint64_t> all;
    for (const auto& cell : pc.cells) all.insert(cell.vertices.begin(), cell.vertices.end());
    std::vector<std::uint64_t> verts(all.begin(), all.end());
    std::map<std::uint64_t, int> id;
    for (std::size_t i = 0; i < verts.size(); ++i) id[verts[i]] = static_cast<int>(i);
    return {std::move(verts), std::move(id)};
}

} // namespace

std::string geometry_to_json_text(const PseudoComplex& pc, const Poset& ground) {
    auto [verts, id] = vertex_table(pc);
    ojson vertices = ojson::array();
    for (std::uint64_t mask : verts) {
        ojson coords = ojson::array();
        for (int i = 0; i < pc.n; ++i) coords.push_back(int(mask >> i & 1));
        vertices.push_back(std::move(coords));
    }
    ojson cells = ojson::array();
    for (int i = 0; i < pc.faces.size(); ++i) {
        ojson cell;
        cell["face"] = names_array(ground, pc.faces.face(i).members);
        ojson vids = ojson::array();
        for (std::uint64_t mask : pc.cells[i].vertices) vids.push_back(id.at(mask));
        cell["vertex_ids"] = std::move(vids);
        cells.push_back(std::move(cell));
    }
    ojson out;
    out["n"] = pc.n;
    out["vertices"] = std::move(vertices);
    out["cells"] = std::move(cells);
    return dump(out);
}

namespace {

std::array<double, 3> projected(std::uint64_t mask) {
    return {double(mask & 1), double(mask >> 1 & 1), double(mask >> 2 & 1)};
}

// Boundary order for a planar cell: sort vertices by angle around the
// centroid inside the cell's own plane.  Falls back to input order when the
// projection to the first three coordinates degenerates.
std::vector<int> polygon_order(const std::vector<std::uint64_t>& masks,
                               const std::map<std::uint64_t, int>& id) {
    std::size_t k = masks.size();
    std::vector<std::array<double, 3>> pts(k);
    std::array<double, 3> c{0, 0, 0};
    for (std::size_t i = 0; i < k; ++i) {
        pts[i] = projected(masks[i]);
        for (int d = 0; d < 3; ++d) c[d] += pts[i][d] / double(k);
    }
    auto sub = [](std::array<double, 3> a, std::array<double, 3> b) {
        return std::array<double, 3>{a[0] - b[0], a[1] - b[1], a[2] - b[2]};
    };
    auto cross = [](std::array<double, 3> a, std::array<double, 3> b) {
        return std::array<double, 3>{a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2],
                                     a[0] * b[1] - a[1] * b[0]};
    };
    auto dot = [](std::array<double, 3> a, std::array<double, 3> b) {
        return a[0] * b[0] + a[1] * b[1] + a[2] * b[2];
    };
    std::vector<int> order;
    for (std::uint64_t m : masks) order.push_back(id.at(m));
    std::array<double, 3> u{0, 0, 0};
    std::array<double, 3> normal{0, 0, 0};
    for (std::size_t i = 0; i < k && dot(normal, normal) < 1e-12; ++i) {
        std::array<double, 3> d = sub(pts[i], c);
        if (dot(u, u) < 1e-12) {
            u = d;
            continue;
        }
        normal = cross(u, d);
    }
    if (dot(normal, normal) < 1e-12) return order;
    std::array<double, 3> w = cross(normal, u);
    std::vector<std::pair<double, int>> keyed;
    for (std::size_t i = 0; i < k; ++i) {
        std::array<double, 3> d = sub(pts[i], c);
        keyed.emplace_back(std::atan2(dot(d, w), dot(d, u)), order[i]);
    }
    std::sort(keyed.begin(), keyed.end());
    std::vector<int> out;
    for (auto& [angle, vid] : keyed) out.push_back(vid);
    return out;
}

} // namespace

std::string geometry_to_off_text(const PseudoComplex& pc, const Poset& ground) {
    auto [verts, id] = vertex_table(pc);
    std::vector<int> shown;
    for (int i = 0; i < pc.faces.size(); ++i) {
        int d = affine_dim(pc.cells[i]);
        if (d == 2 || d == 3) shown.push_back(i);
    }
    std::ostringstream out;
    out << "OFF\n" << verts.size() << ' ' << shown.size() << " 0\n";
    for (std::uint64_t mask : verts) {
        auto p = projected(mask);
        out << p[0] << ' ' << p[1] << ' ' << p[2] << '\n';
    }
    for (int i : shown) {
        std::vector<int> vids;
        if (affine_dim(pc.cells[i]) == 2) {
            vids = polygon_order(pc.cells[i].vertices, id);
        } else {
            for (std::uint64_t mask : pc.cells[i].vertices) vids.push_back(id.at(mask));
        }
        out << vids.size();
        for (int v : vids) out << ' ' << v;
        out << '\n';
    }
    for (std::size_t s = 0; s < shown.size(); ++s) {
        const Face& f = pc.faces.face(shown[s]);
        out << "# cell " << s << ": {";
        for (std::size_t m = 0; m < f.members.size(); ++m) {
            if (m) out << ',';
            out << ground.name(f.members[m]);
        }
        out << "}\n";
    }
    return out.str();
}

std::vector<int> building_from_json_text(const Poset& p, const std::string& text) {
    ojson j = parse_json(text);
    std::vector<int> out = ids_from_names(p, need(j, "members"), "'members'");
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::vector<int> building_from_selector(const Poset& p, const std::string& selector) {
    require_input(!selector.empty(), "empty building set selector");
    if (selector == "all" || selector == "atoms") {
        auto bot = p.bottom();
        require_input(bot.has_value(), "building sets need a poset with a bottom element");
        std::vector<int> out;
        if (selector == "all") {
            for (int x = 0; x < p.size(); ++x)
                if (x != *bot) out.push_back(x);
        } else {
            for (auto [a, b] : p.cover_pairs())
                if (a == *bot) out.push_back(b);
            std::sort(out.begin(), out.end());
        }
        return out;
    }
    if (selector.rfind("file:", 0) == 0)
        return building_from_json_text(p, read_text_file(selector.substr(5)));
    if (selector.front() == '{') return building_from_json_text(p, selector);
    throw input_error("unknown building set selector '" + selector + "'");
}

Matroid matroid_from_json_text(const std::string& text) {
    ojson j = parse_json(text);
    std::string type = need_string(need(j, "type"), "'type'");
    if (type == "uniform")
        return uniform_matroid(need_int(need(j, "r"), "'r'"), need_int(need(j, "n"), "'n'"));
    if (type == "graphic") {
        int vertices = need_int(need(j, "vertices"), "'vertices'");
        const ojson& arr = need(j, "edges");
        require_input(arr.is_array(), "'edges' must be an array");
        std::vector<std::pair<int, int>> edges;
        for (const auto& e : arr) {
            require_input(e.is_array() && e.size() == 2, "each edge must be a pair [u, v]");
            edges.emplace_back(need_int(e[0], "edge endpoint"), need_int(e[1], "edge endpoint"));
        }
        return graphic_matroid(vertices, edges);
    }
    if (type == "bases") {
        int n = need_int(need(j, "n"), "'n'");
        require_input(n >= 1 && n <= 20, "'n' must be between 1 and 20");
        const ojson& arr = need(j, "bases");
        require_input(arr.is_array(), "'bases' must be an array");
        std::vector<std::uint32_t> bases;
        for (const auto& b : arr) {
            require_input(b.is_array(), "each basis must be an array of elements");
            std::uint32_t mask = 0;
            for (const auto& el : b) {
                int e = need_int(el, "basis element");
                require_input(e >= 1 && e <= n, "basis elements must lie in 1..n");
                mask |= std::uint32_t(1) << (e - 1);
            }
            bases.push_back(mask);
        }
        return matroid_from_bases(n, std::move(bases));
    }
    throw input_error("unknown matroid type '" + type + "'");
}

Matroid matroid_from_source(const std::string& source) {
    require_input(!source.empty(), "empty matroid source");
    if (source.front() == '{') return matroid_from_json_text(source);
    return matroid_from_json_text(read_text_file(source));
}

std::string fan_to_json_text(const BergmanFan& fan, const FlatLattice& l) {
    auto mask_vector = [&](std::uint32_t mask) {
        ojson coords = ojson::array();
        for (int i = 0; i < fan.n; ++i) coords.push_back(int(mask >> i & 1));
        return coords;
    };
    ojson out;
    out["n"] = fan.n;
    out["connected"] = fan.connected;
    ojson lin = ojson::array();
    for (std::uint32_t mask : fan.lineality) lin.push_back(mask_vector(mask));
    out["lineality"] = std::move(lin);
    ojson cones = ojson::array();
    for (const FanCone& cone : fan.cones) {
        ojson entry;
        ojson flats = ojson::array();
        for (int id : cone.face_members)
            flats.push_back(mask_to_coords(l.flats[id], fan.n));
        entry["flats"] = std::move(flats);
        ojson rays = ojson::array();
        for (std::uint32_t mask : cone.ray_flats) rays.push_back(mask_vector(mask));
        entry["rays"] = std::move(rays);
        cones.push_back(std::move(entry));
    }
    out["cones"] = std::move(cones);
    return dump(out);
}

Realization realization_from_json_text(const Poset& p, const std::string& text) {
    ojson j = parse_json(text);
    int n = need_int(need(j, "n"), "'n'");
    require_input(n >= 0 && n <= 64, "'n' must be between 0 and 64");
    const ojson& phi = need(j, "phi");
    require_input(phi.is_object(), "'phi' must be an object");
    std::vector<std::uint64_t> masks(p.size(), 0);
    std::vector<char> seen(p.size(), 0);
    for (const auto& [name, coords] : phi.items()) {
        int x = p.index_of(name);
        require_input(!seen[x], "duplicate phi entry for '" + name + "'");
        seen[x] = 1;
        require_input(coords.is_array(), "phi values must be arrays of coordinates");
        for (const auto& el : coords) {
            int c = need_int(el, "coordinate");
            require_input(c >= 1 && c <= n, "coordinates must lie in 1..n");
            masks[x] |= std::uint64_t(1) << (c - 1);
        }
    }
    for (int x = 0; x < p.size(); ++x)
        require_input(seen[x], "missing phi entry for '" + p.name(x) + "'");
    return realization_from_masks(p, n, std::move(masks));
}

std::string realization_to_json_text(const Realization& r, const Poset& p) {
    ojson phi;
    for (int x = 0; x < p.size(); ++x) phi[p.name(x)] = mask_to_coords(r.phi[x], r.n);
    ojson out;
    out["n"] = r.n;
    out["phi"] = std::move(phi);
    return dump(out);
}

Realization realization_from_selector(const Poset& p, const std::string& selector) {
    require_input(!selector.empty(), "empty realization selector");
    if (selector == "canonical") return canonical_min_realization(p);
    if (selector == "atoms") return atom_realization(p);
    if (selector == "identity") return identity_realization(p);
    if (selector.rfind("file:", 0) == 0)
        return realization_from_json_text(p, read_text_file(selector.substr(5)));
    if (selector.front() == '{') return realization_from_json_text(p, selector);
    throw input_error("unknown realization selector '" + selector + "'");
}

std::string run_complex(const std::string& poset_source, const std::string& gset_selector,
                        std::size_t max_chains) {
    Poset p = poset_from_source(poset_source);
    DecompositionSet g = decomposition_set_from_selector(p, gset_selector);
    return face_poset_to_json_text(decomposition_complex(p, g, max_chains), p);
}

std::string run_realize(const std::string& poset_source, const std::string& gset_selector,
                        const std::string& phi_selector, const std::string& format,
                        std::size_t max_chains) {
    require_input(format == "json" || format == "off",
                  "format must be 'json' or 'off'");
    Poset p = poset_from_source(poset_source);
    DecompositionSet g = decomposition_set_from_selector(p, gset_selector);
    Realization r = realization_from_selector(p, phi_selector);
    PseudoComplex pc = realize_complex(p, g, r, max_chains);
    return format == "off" ? geometry_to_off_text(pc, p) : geometry_to_json_text(pc, p);
}

std::string run_product(const std::string& poset1_source, const std::string& gset1_selector,
                        const std::string& poset2_source, const std::string& gset2_selector,
                        std::size_t max_chains) {
    Poset p1 = poset_from_source(poset1_source);
    Poset p2 = poset_from_source(poset2_source);
    DecompositionSet g1 = decomposition_set_from_selector(p1, gset1_selector);
    DecompositionSet g2 = decomposition_set_from_selector(p2, gset2_selector);
    Poset pp = product(p1, p2);
    DecompositionSet gp = product_decomposition_set(pp, g1, g2);
    ProductIsoCertificate cert = product_complex_isomorphism(pp, gp, g1, g2, max_chains);
    ojson out = face_poset_json(cert.product, pp);
    ojson pairs = ojson::array();
    for (const auto& t : cert.pairs) pairs.push_back(ojson::array({t[0], t[1], t[2]}));
    out["isomorphism"] = std::move(pairs);
    return dump(out);
}

std::string run_coproduct(const std::string& poset1_source, const std::string& gset1_selector,
                          const std::string& poset2_source, const std::string& gset2_selector,
                          std::size_t max_chains) {
    Poset p1 = poset_from_source(poset1_source);
    Poset p2 = poset_from_source(poset2_source);
    DecompositionSet g1 = decomposition_set_from_selector(p1, gset1_selector);
    DecompositionSet g2 = decomposition_set_from_selector(p2, gset2_selector);
    Poset cp = coproduct(p1, p2);
    DecompositionSet gc = coproduct_decomposition_set(cp, g1, g2);
    return face_poset_to_json_text(decomposition_complex(cp, gc, max_chains), cp);
}

std::string run_nested(const std::string& poset_source, const std::string& building_selector,
                       std::size_t max_chains) {
    (void)max_chains;
    Poset p = poset_from_source(poset_source);
    std::vector<int> building = building_from_selector(p, building_selector);
    return face_poset_to_json_text(nested_set_complex(p, building), p);
}

std::string run_bergman(const std::string& matroid_source, std::size_t max_chains) {
    Matroid m = matroid_from_source(matroid_source);
    FlatLattice l = lattice_of_flats(m);
    return fan_to_json_text(bergman_fan_cones(m, max_chains), l);
}

} // namespace decomp
