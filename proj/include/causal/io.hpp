#ifndef CAUSAL_IO_HPP
#define CAUSAL_IO_HPP

// File formats (JSON, UTF-8), all carrying an explicit "format" tag and
// parsed strictly — unknown fields are rejected:
//   slice/1         {"format":"slice/1","vertices":[{"id":int,"colour":"red"|"blue"}],
//                    "tetrahedra":[[int,int,int,int],...]}
//   midsection/1    {"format":"midsection/1","cells":[{"kind":"red"|"blue"|"quad",
//                    "vertices":[int,...]},...]}
//   triangulation/1 {"format":"triangulation/1","triangles":[[int,int,int],...]}
//   side/1          {"format":"side/1","pattern":"f/b string",
//                    "triangles":[[int,int,int],...]}  (cyclic order; red
//                    boundary vertices 0..2, blue 3..5)
// Shape errors throw ParseError; domain errors surface from the builders.

#include <fstream>
#include <initializer_list>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "causal/build_slice.hpp"
#include "causal/census.hpp"
#include "causal/complex3.hpp"
#include "causal/surface_complex.hpp"

namespace causal::io {

namespace detail {

inline void require_keys(const nlohmann::json& j, const char* what,
                         std::initializer_list<const char*> keys) {
    if (!j.is_object()) throw Error(Errc::ParseError, std::string(what) + ": expected an object");
    for (const char* k : keys)
        if (!j.contains(k))
            throw Error(Errc::ParseError, std::string(what) + ": missing field '" + k + "'");
    for (const auto& [k, v] : j.items()) {
        bool known = false;
        for (const char* allowed : keys)
            if (k == allowed) known = true;
        if (!known)
            throw Error(Errc::ParseError, std::string(what) + ": unknown field '" + k + "'");
    }
}

inline void require_format(const nlohmann::json& j, const char* tag) {
    if (!j.contains("format") || !j["format"].is_string() || j["format"] != tag)
        throw Error(Errc::ParseError, std::string("expected format '") + tag + "'");
}

inline int require_int(const nlohmann::json& j, const char* what) {
    if (!j.is_number_integer())
        throw Error(Errc::ParseError, std::string(what) + ": expected an integer");
    return j.get<int>();
}

inline Colour parse_colour(const nlohmann::json& j) {
    if (j.is_string() && j == "red") return Colour::Red;
    if (j.is_string() && j == "blue") return Colour::Blue;
    throw Error(Errc::ParseError, "colour must be \"red\" or \"blue\"");
}

}  // namespace detail

// ---- slice/1 ---------------------------------------------------------------

inline nlohmann::json slice_to_json(const Complex3& k) {
    nlohmann::json verts = nlohmann::json::array();
    for (const auto& [v, c] : k.vertex_colours())
        verts.push_back({{"id", v}, {"colour", c == Colour::Red ? "red" : "blue"}});
    nlohmann::json tets = nlohmann::json::array();
    for (const Tetra& t : k.tetras()) tets.push_back({t.v[0], t.v[1], t.v[2], t.v[3]});
    return {{"format", "slice/1"}, {"vertices", verts}, {"tetrahedra", tets}};
}

inline Complex3 slice_from_json(const nlohmann::json& j) {
    detail::require_keys(j, "slice/1", {"format", "vertices", "tetrahedra"});
    detail::require_format(j, "slice/1");
    if (!j["vertices"].is_array() || !j["tetrahedra"].is_array())
        throw Error(Errc::ParseError, "slice/1: vertices and tetrahedra must be arrays");
    std::vector<CVertex> verts;
    for (const nlohmann::json& v : j["vertices"]) {
        detail::require_keys(v, "slice/1 vertex", {"id", "colour"});
        verts.push_back({detail::require_int(v["id"], "vertex id"),
                         detail::parse_colour(v["colour"])});
    }
    std::vector<Tetra> tetras;
    for (const nlohmann::json& t : j["tetrahedra"]) {
        if (!t.is_array() || t.size() != 4)
            throw Error(Errc::ParseError, "slice/1: each tetrahedron needs four vertex ids");
        tetras.emplace_back(detail::require_int(t[0], "tetra vertex"),
                            detail::require_int(t[1], "tetra vertex"),
                            detail::require_int(t[2], "tetra vertex"),
                            detail::require_int(t[3], "tetra vertex"));
    }
    return Complex3::build(std::move(verts), std::move(tetras));
}

// ---- midsection/1 ----------------------------------------------------------

inline nlohmann::json midsection_to_json(const SurfaceComplex& s) {
    nlohmann::json cells = nlohmann::json::array();
    for (const Cell& c : s.cells()) {
        const char* kind = c.kind == CellKind::RedTriangle    ? "red"
                           : c.kind == CellKind::BlueTriangle ? "blue"
                                                              : "quad";
        cells.push_back({{"kind", kind}, {"vertices", c.vertices}});
    }
    return {{"format", "midsection/1"}, {"cells", cells}};
}

inline SurfaceComplex midsection_from_json(const nlohmann::json& j) {
    detail::require_keys(j, "midsection/1", {"format", "cells"});
    detail::require_format(j, "midsection/1");
    if (!j["cells"].is_array())
        throw Error(Errc::ParseError, "midsection/1: cells must be an array");
    std::vector<Cell> cells;
    for (const nlohmann::json& c : j["cells"]) {
        detail::require_keys(c, "midsection/1 cell", {"kind", "vertices"});
        CellKind kind;
        if (c["kind"] == "red")
            kind = CellKind::RedTriangle;
        else if (c["kind"] == "blue")
            kind = CellKind::BlueTriangle;
        else if (c["kind"] == "quad")
            kind = CellKind::Quadrangle;
        else
            throw Error(Errc::ParseError, "cell kind must be \"red\", \"blue\", or \"quad\"");
        if (!c["vertices"].is_array())
            throw Error(Errc::ParseError, "cell vertices must be an array");
        std::vector<VertexId> vs;
        for (const nlohmann::json& v : c["vertices"])
            vs.push_back(detail::require_int(v, "cell vertex"));
        cells.push_back(Cell(kind, vs));
    }
    return SurfaceComplex::build(std::move(cells));
}

// ---- triangulation/1 -------------------------------------------------------

inline nlohmann::json triangulation_to_json(const Triangulation& tris) {
    nlohmann::json arr = nlohmann::json::array();
    for (const Tri3& t : tris) arr.push_back({t[0], t[1], t[2]});
    return {{"format", "triangulation/1"}, {"triangles", arr}};
}

inline Triangulation triangulation_from_json(const nlohmann::json& j) {
    detail::require_keys(j, "triangulation/1", {"format", "triangles"});
    detail::require_format(j, "triangulation/1");
    if (!j["triangles"].is_array())
        throw Error(Errc::ParseError, "triangulation/1: triangles must be an array");
    Triangulation tris;
    for (const nlohmann::json& t : j["triangles"]) {
        if (!t.is_array() || t.size() != 3)
            throw Error(Errc::ParseError, "triangulation/1: each triangle needs three vertex ids");
        VertexId a = detail::require_int(t[0], "triangle vertex");
        VertexId b = detail::require_int(t[1], "triangle vertex");
        VertexId c = detail::require_int(t[2], "triangle vertex");
        if (a == b || a == c || b == c)
            throw Error(Errc::ParseError, "triangulation/1: repeated vertex in a triangle");
        tris.push_back(tri3(a, b, c));
    }
    return tris;
}

// ---- side/1 ----------------------------------------------------------------

inline nlohmann::json side_to_json(const SideComplex& s) {
    nlohmann::json arr = nlohmann::json::array();
    for (const Tri3& t : s.triangles) arr.push_back({t[0], t[1], t[2]});
    return {{"format", "side/1"}, {"pattern", s.word}, {"triangles", arr}};
}

inline SideComplex side_from_json(const nlohmann::json& j) {
    detail::require_keys(j, "side/1", {"format", "pattern", "triangles"});
    detail::require_format(j, "side/1");
    if (!j["pattern"].is_string() || !j["triangles"].is_array())
        throw Error(Errc::ParseError, "side/1: pattern must be a string, triangles an array");
    SideComplex side;
    side.word = j["pattern"].get<std::string>();
    for (const nlohmann::json& t : j["triangles"]) {
        if (!t.is_array() || t.size() != 3)
            throw Error(Errc::ParseError, "side/1: each triangle needs three vertex ids");
        Tri3 tri;
        for (std::size_t i = 0; i < 3; ++i) {
            int v = detail::require_int(t[i], "side vertex");
            if (v < 0 || v > 5)
                throw Error(Errc::ParseError, "side/1: vertex ids must be 0..5");
            tri[i] = v;
        }
        side.triangles.push_back(tri);
    }
    if (side.word.size() != side.triangles.size())
        throw Error(Errc::ParseError, "side/1: pattern length must match the triangle count");
    for (std::size_t i = 0; i < side.word.size(); ++i) {
        char c = side.word[i];
        if (c != 'f' && c != 'b')
            throw Error(Errc::ParseError, "side/1: pattern characters must be 'f' or 'b'");
        int reds = 0;
        for (VertexId v : side.triangles[i])
            if (SideComplex::colour(v) == Colour::Red) ++reds;
        if ((c == 'f') != (reds == 2))
            throw Error(Errc::ParseError, "side/1: pattern disagrees with triangle colours");
    }
    return side;
}

// ---- files -----------------------------------------------------------------

inline nlohmann::json load_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(Errc::ParseError, "cannot open " + path);
    nlohmann::json j = nlohmann::json::parse(in, nullptr, false);
    if (j.is_discarded()) throw Error(Errc::ParseError, "invalid JSON in " + path);
    return j;
}

inline void save_json(const std::string& path, const nlohmann::json& j) {
    std::ofstream out(path);
    if (!out) throw Error(Errc::ParseError, "cannot write " + path);
    out << j.dump(2) << "\n";
}

/// One census record as JSON Lines, one entry per line — byte-stable since
/// entries are sorted by code.
inline std::string census_jsonl(const CensusRecord& record) {
    std::ostringstream out;
    for (const CensusEntry& e : record.entries) out << e.to_json().dump() << "\n";
    return out.str();
}

}  // namespace causal::io

#endif  // CAUSAL_IO_HPP
