#pragma once

// JSON schemas, canonical and byte-stable: hypergraph.v1, realization.v1,
// shiftchain.v1, covering.v1, plus the small coloring and split-output
// records the CLI exchanges. Rationals travel as "num/den" strings.
// Hypergraph edges are canonicalized on write (each edge ascending, edge
// lists lexicographic), so rewriting a parsed file reproduces it byte for
// byte.

#include "coversplit/cells.hpp"
#include "coversplit/realization.hpp"
#include "coversplit/shift_chain.hpp"

#include <nlohmann/json.hpp>

#include <fstream>

namespace coversplit {

using Json = nlohmann::ordered_json;

struct json_schema_error : std::runtime_error {
    explicit json_schema_error(const std::string& msg) : std::runtime_error(msg) {}
};

namespace detail {

inline const Json& require(const Json& j, const char* key, const char* schema) {
    auto it = j.find(key);
    if (it == j.end())
        throw json_schema_error(std::string(schema) + ": missing field '" + key + "'");
    return *it;
}

inline Rational rational_field(const Json& j, const char* key, const char* schema) {
    const Json& f = require(j, key, schema);
    if (!f.is_string())
        throw json_schema_error(std::string(schema) + ": field '" + key + "' must be a string");
    return parse_rational(f.get<std::string>());
}

}  // namespace detail

// ---- hypergraph.v1 ----

inline Json hypergraph_to_json(const AbstractHypergraph& h) {
    auto canonical = [](std::vector<std::vector<int>> edges) {
        for (auto& e : edges) std::sort(e.begin(), e.end());
        std::sort(edges.begin(), edges.end());
        return edges;
    };
    Json j;
    j["schema"] = "hypergraph.v1";
    j["k"] = h.k;
    j["l"] = h.l;
    j["n_vertices"] = h.n_vertices;
    j["red_edges"] = canonical(h.red_edges);
    j["blue_edges"] = canonical(h.blue_edges);
    j["root"] = h.root ? Json(*h.root) : Json(nullptr);
    return j;
}

inline AbstractHypergraph hypergraph_from_json(const Json& j) {
    AbstractHypergraph h;
    h.k = detail::require(j, "k", "hypergraph.v1").get<int>();
    h.l = detail::require(j, "l", "hypergraph.v1").get<int>();
    h.n_vertices = detail::require(j, "n_vertices", "hypergraph.v1").get<int>();
    h.red_edges = detail::require(j, "red_edges", "hypergraph.v1")
                      .get<std::vector<std::vector<int>>>();
    h.blue_edges = detail::require(j, "blue_edges", "hypergraph.v1")
                       .get<std::vector<std::vector<int>>>();
    const Json& root = detail::require(j, "root", "hypergraph.v1");
    if (!root.is_null()) h.root = root.get<int>();
    return h;
}

// ---- realization.v1 ----

inline Json realization_to_json(const Realization& r) {
    Json j;
    j["schema"] = "realization.v1";
    j["k"] = r.hypergraph.k;
    j["l"] = r.hypergraph.l;
    j["eps"] = format_rational(r.eps);
    Json points = Json::array();
    for (std::size_t i = 0; i < r.points.size(); ++i) {
        points.push_back({{"id", i},
                          {"x", format_rational(r.points[i].x)},
                          {"y", format_rational(r.points[i].y)}});
    }
    j["points"] = std::move(points);
    Json disks = Json::array();
    for (const auto& d : r.disks) {
        disks.push_back({{"id", d.id},
                         {"class", d.klass == Color::Red ? "R" : "B"},
                         {"cx", format_rational(d.center.x)},
                         {"cy", format_rational(d.center.y)}});
    }
    j["disks"] = std::move(disks);
    return j;
}

inline Realization realization_from_json(const Json& j) {
    Realization r;
    const int k = detail::require(j, "k", "realization.v1").get<int>();
    const int l = detail::require(j, "l", "realization.v1").get<int>();
    r.hypergraph = build_hypergraph(k, l);
    r.eps = detail::rational_field(j, "eps", "realization.v1");
    for (const Json& p : detail::require(j, "points", "realization.v1")) {
        const std::size_t id = detail::require(p, "id", "realization.v1").get<std::size_t>();
        if (id != r.points.size())
            throw json_schema_error("realization.v1: point ids must be dense and ordered");
        r.points.push_back({detail::rational_field(p, "x", "realization.v1"),
                            detail::rational_field(p, "y", "realization.v1")});
    }
    for (const Json& d : detail::require(j, "disks", "realization.v1")) {
        const int id = detail::require(d, "id", "realization.v1").get<int>();
        if (id != static_cast<int>(r.disks.size()))
            throw json_schema_error("realization.v1: disk ids must be dense and ordered");
        const std::string cls = detail::require(d, "class", "realization.v1").get<std::string>();
        if (cls != "R" && cls != "B")
            throw json_schema_error("realization.v1: disk class must be 'R' or 'B'");
        r.disks.push_back({{detail::rational_field(d, "cx", "realization.v1"),
                            detail::rational_field(d, "cy", "realization.v1")},
                           cls == "R" ? Color::Red : Color::Blue,
                           id});
    }
    if (static_cast<int>(r.points.size()) != r.hypergraph.n_vertices)
        throw json_schema_error("realization.v1: point count does not match H(k,l)");
    if (r.disks.size() != r.hypergraph.red_edges.size() + r.hypergraph.blue_edges.size())
        throw json_schema_error("realization.v1: disk count does not match H(k,l)");
    return r;
}

// ---- shiftchain.v1 ----

inline Json chain_to_json(const ShiftChain& c) {
    Json j;
    j["schema"] = "shiftchain.v1";
    j["n"] = c.n;
    j["m"] = c.m;
    j["edges"] = c.edges;
    return j;
}

inline ShiftChain chain_from_json(const Json& j) {
    const int n = detail::require(j, "n", "shiftchain.v1").get<int>();
    const int m = detail::require(j, "m", "shiftchain.v1").get<int>();
    auto edges = detail::require(j, "edges", "shiftchain.v1")
                     .get<std::vector<std::vector<int>>>();
    return make_shift_chain(n, m, std::move(edges));
}

// ---- chain coloring (chaincoloring.v1) ----

inline Json chain_coloring_to_json(const ChainColoring& col) {
    Json j;
    j["schema"] = "chaincoloring.v1";
    j["n"] = col.n();
    Json colors = Json::object();
    for (int v = 1; v <= col.n(); ++v)
        colors[std::to_string(v)] = col.at(v) == Color::Red ? "R" : "B";
    j["colors"] = std::move(colors);
    return j;
}

inline ChainColoring chain_coloring_from_json(const Json& j) {
    const int n = detail::require(j, "n", "chaincoloring.v1").get<int>();
    ChainColoring col(n);
    const Json& colors = detail::require(j, "colors", "chaincoloring.v1");
    for (int v = 1; v <= n; ++v) {
        const std::string key = std::to_string(v);
        auto it = colors.find(key);
        if (it == colors.end())
            throw json_schema_error("chaincoloring.v1: missing color for vertex " + key);
        const std::string c = it->get<std::string>();
        if (c != "R" && c != "B")
            throw json_schema_error("chaincoloring.v1: colors must be 'R' or 'B'");
        col.set(v, c == "R" ? Color::Red : Color::Blue);
    }
    return col;
}

// ---- covering.v1 ----

inline Json covering_to_json(const CoveringInstance& inst) {
    Json j;
    j["schema"] = "covering.v1";
    j["region"] = {{"x0", format_rational(inst.region.x0)},
                   {"y0", format_rational(inst.region.y0)},
                   {"x1", format_rational(inst.region.x1)},
                   {"y1", format_rational(inst.region.y1)}};
    j["m_target"] = inst.m_target;
    Json disks = Json::array();
    for (const auto& d : inst.disks)
        disks.push_back({{"id", d.id},
                         {"cx", format_rational(d.center.x)},
                         {"cy", format_rational(d.center.y)}});
    j["disks"] = std::move(disks);
    return j;
}

inline CoveringInstance covering_from_json(const Json& j) {
    CoveringInstance inst;
    const Json& reg = detail::require(j, "region", "covering.v1");
    inst.region = {detail::rational_field(reg, "x0", "covering.v1"),
                   detail::rational_field(reg, "y0", "covering.v1"),
                   detail::rational_field(reg, "x1", "covering.v1"),
                   detail::rational_field(reg, "y1", "covering.v1")};
    if (!(inst.region.x0 <= inst.region.x1) || !(inst.region.y0 <= inst.region.y1))
        throw json_schema_error("covering.v1: region corners out of order");
    inst.m_target = detail::require(j, "m_target", "covering.v1").get<int>();
    for (const Json& d : detail::require(j, "disks", "covering.v1")) {
        const int id = detail::require(d, "id", "covering.v1").get<int>();
        if (id != static_cast<int>(inst.disks.size()))
            throw json_schema_error("covering.v1: disk ids must be dense and ordered");
        inst.disks.push_back({{detail::rational_field(d, "cx", "covering.v1"),
                               detail::rational_field(d, "cy", "covering.v1")},
                              Color::Red,
                              id});
    }
    return inst;
}

// ---- split output ----

inline Json split_colors_to_json(std::uint64_t seed, const std::vector<int>& colors) {
    Json j;
    j["schema"] = "splitcolors.v1";
    j["seed"] = seed;
    Json cmap = Json::object();
    for (std::size_t i = 0; i < colors.size(); ++i) cmap[std::to_string(i)] = colors[i];
    j["colors"] = std::move(cmap);
    return j;
}

inline std::vector<int> split_colors_from_json(const Json& j, int n_disks) {
    const Json& cmap = detail::require(j, "colors", "splitcolors.v1");
    std::vector<int> colors(n_disks, -1);
    for (int i = 0; i < n_disks; ++i) {
        auto it = cmap.find(std::to_string(i));
        if (it == cmap.end())
            throw json_schema_error("splitcolors.v1: missing color for disk " +
                                    std::to_string(i));
        colors[i] = it->get<int>();
    }
    return colors;
}

// ---- points list for the sweep ----

inline Json points_to_json(const std::vector<RationalPoint>& pts) {
    Json j;
    j["schema"] = "points.v1";
    Json arr = Json::array();
    for (const auto& p : pts)
        arr.push_back({{"x", format_rational(p.x)}, {"y", format_rational(p.y)}});
    j["points"] = std::move(arr);
    return j;
}

inline std::vector<RationalPoint> points_from_json(const Json& j) {
    std::vector<RationalPoint> pts;
    for (const Json& p : detail::require(j, "points", "points.v1"))
        pts.push_back({detail::rational_field(p, "x", "points.v1"),
                       detail::rational_field(p, "y", "points.v1")});
    return pts;
}

// ---- file helpers ----

inline std::string dump_canonical(const Json& j) { return j.dump(2) + "\n"; }

inline void write_text_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open for writing: " + path);
    out << content;
    if (!out) throw std::runtime_error("write failed: " + path);
}

inline std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open for reading: " + path);
    std::string content((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    return content;
}

inline Json read_json_file(const std::string& path) {
    return Json::parse(read_text_file(path));
}

}  // namespace coversplit
