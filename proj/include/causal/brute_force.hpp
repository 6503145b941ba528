#ifndef CAUSAL_BRUTE_FORCE_HPP
#define CAUSAL_BRUTE_FORCE_HPP

// Brute-force re-implementations of the membership conditions by explicit
// enumeration of simple monochromatic paths and cycles.  Deliberately
// independent of the dual-graph / union-find route taken by conditions.hpp;
// used to cross-check the fast checkers on small instances.

#include <functional>
#include <map>
#include <set>
#include <vector>

#include "causal/conditions.hpp"
#include "causal/surface_complex.hpp"

namespace causal::oracle {

inline constexpr std::size_t kDefaultBudget = 12;

namespace detail {

inline std::map<VertexId, std::vector<VertexId>> colour_adjacency(const SurfaceComplex& s,
                                                                  Colour c) {
    std::map<VertexId, std::vector<VertexId>> adj;
    for (const EdgeInfo& e : s.edges())
        if (e.colour == c) {
            adj[e.a].push_back(e.b);
            adj[e.b].push_back(e.a);
        }
    for (auto& [v, ns] : adj) std::sort(ns.begin(), ns.end());
    return adj;
}

/// True iff a simple colour-c path (length >= 1) connects u and v, found by
/// explicit depth-first search.
inline bool connected_by_path(const SurfaceComplex& s, Colour c, VertexId u, VertexId v) {
    if (u == v) return false;
    auto adj = colour_adjacency(s, c);
    if (!adj.count(u)) return false;
    std::set<VertexId> seen = {u};
    std::vector<VertexId> stack = {u};
    while (!stack.empty()) {
        VertexId x = stack.back();
        stack.pop_back();
        for (VertexId y : adj[x]) {
            if (y == v) return true;
            if (seen.insert(y).second) stack.push_back(y);
        }
    }
    return false;
}

/// All simple closed colour-c paths, each reported once as a vertex cycle.
inline std::vector<std::vector<VertexId>> simple_cycles(const SurfaceComplex& s, Colour c) {
    auto adj = colour_adjacency(s, c);
    std::vector<std::vector<VertexId>> cycles;
    std::vector<VertexId> path;
    std::set<VertexId> on_path;
    std::function<void(VertexId, VertexId)> extend = [&](VertexId start, VertexId cur) {
        for (VertexId next : adj[cur]) {
            if (next == start && path.size() >= 3) {
                if (path[1] < path.back()) cycles.push_back(path);  // one orientation only
                continue;
            }
            if (next <= start || on_path.count(next)) continue;
            path.push_back(next);
            on_path.insert(next);
            extend(start, next);
            on_path.erase(next);
            path.pop_back();
        }
    };
    for (const auto& [start, ns] : adj) {
        path = {start};
        on_path = {start};
        extend(start, start);
    }
    return cycles;
}

inline std::set<EdgeKey> cycle_edges(const std::vector<VertexId>& cyc) {
    std::set<EdgeKey> es;
    for (std::size_t i = 0; i < cyc.size(); ++i)
        es.insert(edge_key(cyc[i], cyc[(i + 1) % cyc.size()]));
    return es;
}

/// Components of the cell graph when crossings through `blocked` edges are
/// forbidden.
inline std::vector<std::size_t> components_minus(const SurfaceComplex& s,
                                                 const std::set<EdgeKey>& blocked) {
    std::size_t n = s.num_cells();
    std::vector<std::size_t> comp(n, SIZE_MAX);
    std::size_t next = 0;
    for (std::size_t start = 0; start < n; ++start) {
        if (comp[start] != SIZE_MAX) continue;
        comp[start] = next;
        std::vector<std::size_t> stack = {start};
        while (!stack.empty()) {
            std::size_t ci = stack.back();
            stack.pop_back();
            const Cell& cell = s.cells()[ci];
            for (std::size_t i = 0; i < cell.size(); ++i) {
                EdgeKey k = edge_key(cell.vertices[i], cell.vertices[(i + 1) % cell.size()]);
                if (blocked.count(k)) continue;
                for (std::size_t cj : s.edge(k.first, k.second).cells)
                    if (comp[cj] == SIZE_MAX) {
                        comp[cj] = next;
                        stack.push_back(cj);
                    }
            }
        }
        ++next;
    }
    return comp;
}

inline bool component_touches_boundary(const SurfaceComplex& s,
                                       const std::vector<std::size_t>& comp, std::size_t id,
                                       const std::set<EdgeKey>& excluded) {
    for (std::size_t ci = 0; ci < s.num_cells(); ++ci) {
        if (comp[ci] != id) continue;
        const Cell& cell = s.cells()[ci];
        for (std::size_t i = 0; i < cell.size(); ++i) {
            EdgeKey k = edge_key(cell.vertices[i], cell.vertices[(i + 1) % cell.size()]);
            if (!excluded.count(k) && s.edge(k.first, k.second).boundary()) return true;
        }
    }
    return false;
}

inline void check_budget(const SurfaceComplex& s, std::size_t budget) {
    if (s.num_cells() > budget)
        throw Error(Errc::BudgetExceeded, "oracle budget exceeded");
}

}  // namespace detail

inline ConditionReport check_alpha(const SurfaceComplex& s) {
    const auto& vs = s.vertices();
    for (std::size_t i = 0; i < vs.size(); ++i)
        for (std::size_t j = i + 1; j < vs.size(); ++j)
            if (detail::connected_by_path(s, Colour::Red, vs[i], vs[j]) &&
                detail::connected_by_path(s, Colour::Blue, vs[i], vs[j]))
                return {"alpha", false, {{"vertices", {vs[i], vs[j]}}}};
    return {"alpha", true, nullptr};
}

inline ConditionReport check_beta1(const SurfaceComplex& s, Colour c) {
    if (s.topology() != SurfaceTopology::Disc)
        throw Error(Errc::NotADisc, "oracle beta1 requires a disc");
    std::string name = std::string("beta1.") + to_string(c);
    CellKind tri = (c == Colour::Red) ? CellKind::RedTriangle : CellKind::BlueTriangle;
    for (const auto& cyc : detail::simple_cycles(s, c)) {
        auto blocked = detail::cycle_edges(cyc);
        auto comp = detail::components_minus(s, blocked);
        std::size_t ncomp = *std::max_element(comp.begin(), comp.end()) + 1;
        for (std::size_t id = 0; id < ncomp; ++id) {
            if (detail::component_touches_boundary(s, comp, id, blocked)) continue;
            for (std::size_t ci = 0; ci < s.num_cells(); ++ci)
                if (comp[ci] == id && s.cells()[ci].kind != tri)
                    return {name, false, {{"cycle", cyc}}};
        }
    }
    return {name, true, nullptr};
}

inline ConditionReport check_beta2(const SurfaceComplex& s) {
    if (s.topology() != SurfaceTopology::Disc)
        throw Error(Errc::NotADisc, "oracle beta2 requires a disc");
    BoundaryArcs arcs = s.boundary_arcs();
    if (arcs.single_closed)
        throw Error(Errc::NoArcs, "boundary is entirely monochromatic");
    for (Colour path_colour : {Colour::Red, Colour::Blue}) {
        std::set<EdgeKey> exempt;
        std::vector<std::size_t> other_arcs;
        for (std::size_t i = 0; i < arcs.arcs.size(); ++i) {
            if (arcs.arcs[i].colour == path_colour)
                exempt.insert(edge_key(arcs.arcs[i].vertices.front(), arcs.arcs[i].vertices.back()));
            else
                other_arcs.push_back(i);
        }
        for (std::size_t ii = 0; ii < other_arcs.size(); ++ii)
            for (std::size_t jj = ii + 1; jj < other_arcs.size(); ++jj)
                for (VertexId u : arcs.arcs[other_arcs[ii]].vertices)
                    for (VertexId v : arcs.arcs[other_arcs[jj]].vertices) {
                        if (u == v || exempt.count(edge_key(u, v))) continue;
                        if (detail::connected_by_path(s, path_colour, u, v))
                            return {"beta2", false,
                                    {{"vertices", {u, v}}, {"path_colour", to_string(path_colour)}}};
                    }
    }
    return {"beta2", true, nullptr};
}

inline ConditionReport check_beta_sphere(const SurfaceComplex& s, Colour c) {
    if (s.topology() != SurfaceTopology::Sphere)
        throw Error(Errc::NotASphere, "oracle beta requires a sphere");
    std::string name = std::string("beta.") + to_string(c);
    CellKind tri = (c == Colour::Red) ? CellKind::RedTriangle : CellKind::BlueTriangle;
    for (const auto& cyc : detail::simple_cycles(s, c)) {
        auto comp = detail::components_minus(s, detail::cycle_edges(cyc));
        std::size_t ncomp = *std::max_element(comp.begin(), comp.end()) + 1;
        if (ncomp != 2) return {name, false, {{"cycle", cyc}, {"components", ncomp}}};
        bool ok = false;
        for (std::size_t id = 0; id < 2 && !ok; ++id) {
            bool all_tri = true;
            for (std::size_t ci = 0; ci < s.num_cells(); ++ci)
                if (comp[ci] == id && s.cells()[ci].kind != tri) all_tri = false;
            ok = all_tri;
        }
        if (!ok) return {name, false, {{"cycle", cyc}}};
    }
    return {name, true, nullptr};
}

inline ConditionReport check_gamma(const SurfaceComplex& s) {
    for (Colour c : {Colour::Blue, Colour::Red}) {
        Colour other = complement(c);
        std::vector<EdgeKey> es;
        for (const EdgeInfo& e : s.edges())
            if (e.colour == c) es.push_back({e.a, e.b});
        // Quadrangle path search by depth-first walk over quads sharing
        // colour-c edges.
        auto quad_connected = [&](EdgeKey e, EdgeKey f) {
            std::set<EdgeKey> seen = {e};
            std::vector<EdgeKey> stack = {e};
            while (!stack.empty()) {
                EdgeKey cur = stack.back();
                stack.pop_back();
                if (cur == f) return true;
                for (std::size_t ci : s.edge(cur.first, cur.second).cells) {
                    const Cell& q = s.cells()[ci];
                    if (q.kind != CellKind::Quadrangle) continue;
                    for (std::size_t i = 0; i < 4; ++i) {
                        if (q.edge_colour(i) != c) continue;
                        EdgeKey k = edge_key(q.vertices[i], q.vertices[(i + 1) % 4]);
                        if (seen.insert(k).second) stack.push_back(k);
                    }
                }
            }
            return false;
        };
        for (std::size_t i = 0; i < es.size(); ++i)
            for (std::size_t j = i + 1; j < es.size(); ++j) {
                auto [a, b] = es[i];
                auto [x, y] = es[j];
                if (a == x || a == y || b == x || b == y) continue;
                bool linked = (detail::connected_by_path(s, other, a, x) &&
                               detail::connected_by_path(s, other, b, y)) ||
                              (detail::connected_by_path(s, other, a, y) &&
                               detail::connected_by_path(s, other, b, x));
                if (linked && !quad_connected(es[i], es[j]))
                    return {"gamma", false,
                            {{"edges", {{a, b}, {x, y}}}, {"colour", to_string(c)}}};
            }
    }
    return {"gamma", true, nullptr};
}

/// Full oracle report for a validated complex; verdicts must agree with the
/// fast checkers.  Only defined at small sizes.
inline std::vector<ConditionReport> conditions(const SurfaceComplex& s,
                                               std::size_t budget = kDefaultBudget) {
    detail::check_budget(s, budget);
    std::vector<ConditionReport> out = {oracle::check_alpha(s)};
    if (s.topology() == SurfaceTopology::Disc) {
        out.push_back(oracle::check_beta1(s, Colour::Red));
        out.push_back(oracle::check_beta1(s, Colour::Blue));
        try {
            out.push_back(oracle::check_beta2(s));
        } catch (const Error& err) {
            if (err.code() != Errc::NoArcs) throw;
            out.push_back({"beta2", false, {{"error", "NoArcs"}}});
        }
    } else if (s.topology() == SurfaceTopology::Sphere) {
        out.push_back(oracle::check_beta_sphere(s, Colour::Red));
        out.push_back(oracle::check_beta_sphere(s, Colour::Blue));
    }
    out.push_back(oracle::check_gamma(s));
    return out;
}

}  // namespace causal::oracle

#endif  // CAUSAL_BRUTE_FORCE_HPP
