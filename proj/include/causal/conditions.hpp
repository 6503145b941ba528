#ifndef CAUSAL_CONDITIONS_HPP
#define CAUSAL_CONDITIONS_HPP

#include <json.hpp>
#include <string>
#include <vector>

#include "causal/surface_complex.hpp"

namespace causal {

enum class MidsectionKind : std::uint8_t { Disc, Sphere };

inline const char* to_string(MidsectionKind k) {
    return k == MidsectionKind::Disc ? "disc" : "sphere";
}

/// Outcome of one membership condition check.  A false verdict always
/// carries a witness sufficient to re-verify the violation by hand.
struct ConditionReport {
    std::string condition;
    bool verdict = false;
    nlohmann::json witness;  // null when verdict is true

    nlohmann::json to_json() const {
        return {{"condition", condition}, {"verdict", verdict}, {"witness", witness}};
    }
};

namespace detail {

/// Connected components of the cell graph, where two cells are adjacent iff
/// they share an edge whose colour differs from `blocked`.  Returns per-cell
/// component ids; the id `outer` (== num_cells) marks the outer region and is
/// merged across boundary edges of colour != blocked when `with_outer`.
inline std::vector<std::size_t> dual_components(const SurfaceComplex& s, Colour blocked,
                                                bool with_outer) {
    std::size_t n = s.num_cells();
    std::vector<std::size_t> parent(n + 1);
    for (std::size_t i = 0; i <= n; ++i) parent[i] = i;
    auto find = [&](std::size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    auto unite = [&](std::size_t x, std::size_t y) { parent[find(x)] = find(y); };
    for (const EdgeInfo& e : s.edges()) {
        if (e.colour == blocked) continue;
        if (e.cells.size() == 2)
            unite(e.cells[0], e.cells[1]);
        else if (with_outer)
            unite(e.cells[0], n);
    }
    std::vector<std::size_t> comp(n + 1);
    for (std::size_t i = 0; i <= n; ++i) comp[i] = find(i);
    return comp;
}

/// Edges of colour `c` separating cell-component `id` from the rest.
inline nlohmann::json colour_cut(const SurfaceComplex& s, Colour c,
                                 const std::vector<std::size_t>& comp, std::size_t id) {
    nlohmann::json cut = nlohmann::json::array();
    for (const EdgeInfo& e : s.edges()) {
        if (e.colour != c) continue;
        bool touches = comp[e.cells[0]] == id ||
                       (e.cells.size() == 2 && comp[e.cells[1]] == id);
        bool leaves = e.cells.size() == 1 || comp[e.cells[0]] != comp[e.cells[1]];
        if (touches && leaves) cut.push_back({e.a, e.b});
    }
    return cut;
}

inline nlohmann::json cell_json(const Cell& c) {
    const char* k = c.kind == CellKind::RedTriangle  ? "red"
                    : c.kind == CellKind::BlueTriangle ? "blue"
                                                       : "quad";
    return {{"kind", k}, {"vertices", c.vertices}};
}

}  // namespace detail

/// (alpha): no pair of distinct vertices is connected by both a red and a
/// blue path.
inline ConditionReport check_alpha(const SurfaceComplex& s) {
    auto red = s.monochrome_vertex_components(Colour::Red);
    auto blue = s.monochrome_vertex_components(Colour::Blue);
    const auto& vs = s.vertices();
    for (std::size_t i = 0; i < vs.size(); ++i)
        for (std::size_t j = i + 1; j < vs.size(); ++j)
            if (red.same_block(vs[i], vs[j]) && blue.same_block(vs[i], vs[j]))
                return {"alpha", false, {{"vertices", {vs[i], vs[j]}}}};
    return {"alpha", true, nullptr};
}

/// (beta1) for colour c on a disc: every closed simple c-path encloses solely
/// c-triangles.  Decided dually: every cell that is not a c-triangle must
/// reach the outer region crossing only edges not of colour c.
inline ConditionReport check_beta1(const SurfaceComplex& s, Colour c) {
    if (s.topology() != SurfaceTopology::Disc)
        throw Error(Errc::NotADisc, "check_beta1 requires a disc");
    std::string name = std::string("beta1.") + to_string(c);
    auto comp = detail::dual_components(s, c, /*with_outer=*/true);
    std::size_t outer = comp[s.num_cells()];
    CellKind tri = (c == Colour::Red) ? CellKind::RedTriangle : CellKind::BlueTriangle;
    for (std::size_t ci = 0; ci < s.num_cells(); ++ci) {
        if (s.cells()[ci].kind == tri || comp[ci] == outer) continue;
        return {name, false,
                {{"enclosed_cell", detail::cell_json(s.cells()[ci])},
                 {"cut", detail::colour_cut(s, c, comp, comp[ci])}}};
    }
    return {name, true, nullptr};
}

/// (beta2) on a disc: a monochromatic path may connect vertices of two
/// distinct arcs of the other colour only if they are the endpoint pair of an
/// arc of the path's colour.
inline ConditionReport check_beta2(const SurfaceComplex& s) {
    if (s.topology() != SurfaceTopology::Disc)
        throw Error(Errc::NotADisc, "check_beta2 requires a disc");
    BoundaryArcs arcs = s.boundary_arcs();
    if (arcs.single_closed)
        throw Error(Errc::NoArcs, "boundary is entirely monochromatic");
    for (Colour path_colour : {Colour::Red, Colour::Blue}) {
        Colour arc_colour = complement(path_colour);
        auto part = s.monochrome_vertex_components(path_colour);
        // Endpoint pairs of path_colour arcs are exempt.
        std::set<EdgeKey> exempt;
        std::vector<std::size_t> other_arcs;
        for (std::size_t i = 0; i < arcs.arcs.size(); ++i) {
            const auto& arc = arcs.arcs[i];
            if (arc.colour == path_colour)
                exempt.insert(edge_key(arc.vertices.front(), arc.vertices.back()));
            else
                other_arcs.push_back(i);
        }
        for (std::size_t ii = 0; ii < other_arcs.size(); ++ii)
            for (std::size_t jj = ii + 1; jj < other_arcs.size(); ++jj)
                for (VertexId u : arcs.arcs[other_arcs[ii]].vertices)
                    for (VertexId v : arcs.arcs[other_arcs[jj]].vertices) {
                        if (u == v || !part.same_block(u, v)) continue;
                        if (exempt.count(edge_key(u, v))) continue;
                        return {"beta2", false,
                                {{"vertices", {u, v}},
                                 {"path_colour", to_string(path_colour)},
                                 {"arcs",
                                  {static_cast<int>(other_arcs[ii]),
                                   static_cast<int>(other_arcs[jj])}}}};
                    }
    }
    return {"beta2", true, nullptr};
}

/// (beta) for colour c on a sphere: every simple closed c-path divides the
/// midsection into two components, one consisting solely of c-triangles.
/// Decided dually: all cells that are not c-triangles are connected through
/// edges not of colour c.
inline ConditionReport check_beta_sphere(const SurfaceComplex& s, Colour c) {
    if (s.topology() != SurfaceTopology::Sphere)
        throw Error(Errc::NotASphere, "check_beta_sphere requires a sphere");
    std::string name = std::string("beta.") + to_string(c);
    auto comp = detail::dual_components(s, c, /*with_outer=*/false);
    CellKind tri = (c == Colour::Red) ? CellKind::RedTriangle : CellKind::BlueTriangle;
    std::size_t first = SIZE_MAX;
    for (std::size_t ci = 0; ci < s.num_cells(); ++ci) {
        if (s.cells()[ci].kind == tri) continue;
        if (first == SIZE_MAX) {
            first = ci;
        } else if (comp[ci] != comp[first]) {
            return {name, false,
                    {{"cells", {detail::cell_json(s.cells()[first]),
                                detail::cell_json(s.cells()[ci])}},
                     {"cut", detail::colour_cut(s, c, comp, comp[first])}}};
        }
    }
    return {name, true, nullptr};
}

/// (gamma): vertex-disjoint same-coloured edges whose endpoints are pairwise
/// connected by paths of the other colour must lie in a common chain of
/// quadrangles.
inline ConditionReport check_gamma(const SurfaceComplex& s) {
    for (Colour c : {Colour::Blue, Colour::Red}) {
        auto part = s.monochrome_vertex_components(complement(c));
        auto chains = s.quad_chains(c);
        std::map<EdgeKey, std::size_t> chain_of;
        for (std::size_t i = 0; i < chains.size(); ++i)
            for (const EdgeKey& e : chains[i].edges) chain_of[e] = i;
        std::vector<EdgeKey> es;
        for (const EdgeInfo& e : s.edges())
            if (e.colour == c) es.push_back({e.a, e.b});
        for (std::size_t i = 0; i < es.size(); ++i)
            for (std::size_t j = i + 1; j < es.size(); ++j) {
                auto [a, b] = es[i];
                auto [x, y] = es[j];
                if (a == x || a == y || b == x || b == y) continue;  // not disjoint
                bool linked = (part.same_block(a, x) && part.same_block(b, y)) ||
                              (part.same_block(a, y) && part.same_block(b, x));
                if (!linked) continue;
                if (chain_of.at(es[i]) != chain_of.at(es[j]))
                    return {"gamma", false,
                            {{"edges", {{a, b}, {x, y}}}, {"colour", to_string(c)}}};
            }
    }
    return {"gamma", true, nullptr};
}

/// (delta): no two distinct same-coloured triangles have their vertices
/// pairwise joined by paths of the other colour.
inline ConditionReport check_delta(const SurfaceComplex& s) {
    for (Colour c : {Colour::Red, Colour::Blue}) {
        CellKind tri = (c == Colour::Red) ? CellKind::RedTriangle : CellKind::BlueTriangle;
        auto part = s.monochrome_vertex_components(complement(c));
        std::vector<const Cell*> ts;
        for (const Cell& cell : s.cells())
            if (cell.kind == tri) ts.push_back(&cell);
        static constexpr int perms[6][3] = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2},
                                            {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
        for (std::size_t i = 0; i < ts.size(); ++i)
            for (std::size_t j = i + 1; j < ts.size(); ++j)
                for (const auto& p : perms) {
                    bool all = true;
                    for (int k = 0; k < 3 && all; ++k)
                        all = part.same_block(ts[i]->vertices[k], ts[j]->vertices[p[k]]);
                    if (all)
                        return {"delta", false,
                                {{"triangles",
                                  {detail::cell_json(*ts[i]), detail::cell_json(*ts[j])}},
                                 {"bijection", {p[0], p[1], p[2]}}}};
                }
    }
    return {"delta", true, nullptr};
}

/// Membership in the disc class (alpha, beta1 both colours, beta2, gamma,
/// >=1 triangle of each colour) or the sphere class (alpha, beta both
/// colours, gamma, >=4 triangles of each colour).
inline ConditionReport membership(const SurfaceComplex& s, MidsectionKind kind) {
    std::string name = std::string("membership.") + to_string(kind);
    auto fail = [&](const ConditionReport& sub) {
        return ConditionReport{name, false, {{"failed", sub.to_json()}}};
    };
    std::size_t reds = s.count_cells(CellKind::RedTriangle);
    std::size_t blues = s.count_cells(CellKind::BlueTriangle);
    if (kind == MidsectionKind::Disc) {
        if (s.topology() != SurfaceTopology::Disc)
            return fail({"topology", false, {{"expected", "disc"}, {"got", to_string(s.topology())}}});
        if (reds < 1 || blues < 1)
            return fail({"triangle_counts", false, {{"red", reds}, {"blue", blues}, {"required", 1}}});
        for (const ConditionReport& sub :
             {check_alpha(s), check_beta1(s, Colour::Red), check_beta1(s, Colour::Blue)})
            if (!sub.verdict) return fail(sub);
        try {
            if (ConditionReport sub = check_beta2(s); !sub.verdict) return fail(sub);
        } catch (const Error& err) {
            if (err.code() != Errc::NoArcs) throw;
            return fail({"beta2", false, {{"error", "NoArcs"}}});
        }
        if (ConditionReport sub = check_gamma(s); !sub.verdict) return fail(sub);
    } else {
        if (s.topology() != SurfaceTopology::Sphere)
            return fail({"topology", false, {{"expected", "sphere"}, {"got", to_string(s.topology())}}});
        if (reds < 4 || blues < 4)
            return fail({"triangle_counts", false, {{"red", reds}, {"blue", blues}, {"required", 4}}});
        for (const ConditionReport& sub :
             {check_alpha(s), check_beta_sphere(s, Colour::Red), check_beta_sphere(s, Colour::Blue),
              check_gamma(s)})
            if (!sub.verdict) return fail(sub);
    }
    return {name, true, nullptr};
}

}  // namespace causal

#endif  // CAUSAL_CONDITIONS_HPP
