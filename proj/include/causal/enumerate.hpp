#ifndef CAUSAL_ENUMERATE_HPP
#define CAUSAL_ENUMERATE_HPP

// Isomorph-free exhaustive generation of coloured surface complexes by
// extend-and-reject over connected partial complexes.
//
// Growth states keep edge multiplicity (<= 2 cells), edge-colour consistency
// and the no-two-shared-edges rule but defer the vertex-link and topology
// checks: some valid complexes (the 5-triangle Moebius band, for instance)
// have no valid proper subcomplex, yet every connected complex has a cell
// whose removal keeps the cell graph connected, so walking all connected
// partial complexes reaches everything.
//
// Admissible partial links are exactly the subgraphs of valid links: disjoint
// unions of simple paths, or one cycle covering the whole link.  The link
// defect (excess path components summed over vertices) is zero precisely on
// valid complexes, and one added cell lowers it by at most 4 (it has one
// corner per vertex), giving a lower bound on the cells still needed.

#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "causal/surface_complex.hpp"

namespace causal {

namespace detail {

/// Per-state tables for O(cell size) admissibility tests of one-cell
/// extensions.  Growth keeps vertex ids contiguous from 0, so dense matrices
/// indexed by vertex are fine.
struct GrowthContext {
    struct E {
        Colour col;
        int count;
        int c0;  // first incident cell; only consulted while count == 1
    };

    int nv = 0;  // id bound including room for two fresh vertices
    VertexId f1 = 0, f2 = 0;
    std::vector<int> eid;  // nv*nv matrix of edge ids, -1 if absent
    std::vector<E> edges;
    std::vector<std::vector<std::pair<int, int>>> link;  // per vertex: (edge id, comp)
    std::vector<int> ncomp;
    std::vector<char> closed;  // link is a full cycle
    int defect = 0;
    bool admissible = true;

    int id_at(VertexId a, VertexId b) const {
        return eid[static_cast<std::size_t>(std::min(a, b)) * nv + std::max(a, b)];
    }

    explicit GrowthContext(const std::vector<Cell>& cells) {
        for (std::size_t i = 0; i + 1 < cells.size(); ++i)  // requires sorted input
            if (cells[i] == cells[i + 1]) admissible = false;
        VertexId maxv = 0;
        for (const Cell& c : cells)
            for (VertexId v : c.vertices) maxv = std::max(maxv, v);
        f1 = maxv + 1;
        f2 = maxv + 2;
        nv = maxv + 3;
        eid.assign(static_cast<std::size_t>(nv) * nv, -1);
        std::vector<int> narcs(nv, 0);
        for (int ci = 0; ci < static_cast<int>(cells.size()); ++ci) {
            const Cell& c = cells[ci];
            std::size_t n = c.size();
            for (std::size_t i = 0; i < n; ++i) {
                VertexId a = c.vertices[i], b = c.vertices[(i + 1) % n];
                ++narcs[a];
                int& id = eid[static_cast<std::size_t>(std::min(a, b)) * nv + std::max(a, b)];
                if (id < 0) {
                    id = static_cast<int>(edges.size());
                    edges.push_back({c.edge_colour(i), 1, ci});
                } else {
                    E& e = edges[id];
                    if (e.col != c.edge_colour(i) || e.count >= 2) admissible = false;
                    ++e.count;
                }
            }
        }
        // Two cells sharing two or more edges is excluded; count shared edges
        // per cell pair.
        {
            std::map<std::pair<int, int>, int> shared;
            std::map<EdgeKey, int> first;
            for (int ci = 0; ci < static_cast<int>(cells.size()); ++ci) {
                const Cell& c = cells[ci];
                for (std::size_t i = 0; i < c.size(); ++i) {
                    EdgeKey k = edge_key(c.vertices[i], c.vertices[(i + 1) % c.size()]);
                    auto [it, fresh] = first.try_emplace(k, ci);
                    if (!fresh && ++shared[{it->second, ci}] > 1) admissible = false;
                }
            }
        }
        // Link components by union-find over incident edge ids, plus the
        // cycle rule: cycles at v = arcs - (nodes - comps); at most one, and
        // a cycle must cover the whole link.
        link.resize(nv);
        ncomp.assign(nv, 0);
        closed.assign(nv, 0);
        std::vector<std::vector<std::pair<int, int>>> corners(nv);  // (ea, eb) per corner
        for (const Cell& c : cells) {
            std::size_t n = c.size();
            for (std::size_t i = 0; i < n; ++i) {
                VertexId v = c.vertices[i];
                corners[v].push_back({id_at(c.vertices[(i + n - 1) % n], v),
                                      id_at(v, c.vertices[(i + 1) % n])});
            }
        }
        std::vector<int> parent(edges.size());
        std::vector<VertexId> stamp(edges.size(), -1);
        for (VertexId v = 0; v < nv; ++v) {
            auto find = [&](int x) {
                if (stamp[x] != v) {
                    stamp[x] = v;
                    parent[x] = x;
                }
                while (parent[x] != x) x = parent[x] = parent[parent[x]];
                return x;
            };
            for (auto [ea, eb] : corners[v]) {
                int ra = find(ea), rb = find(eb);
                if (ra != rb) parent[ra] = rb;
            }
            std::map<int, int> label;
            for (VertexId u = 0; u < nv; ++u) {
                if (u == v) continue;
                int e = id_at(v, u);
                if (e < 0) continue;
                int lab = static_cast<int>(label.size());
                lab = label.try_emplace(find(e), lab).first->second;
                link[v].push_back({e, lab});
            }
            if (link[v].empty()) continue;
            ncomp[v] = static_cast<int>(label.size());
            defect += ncomp[v] - 1;
            int cycles = narcs[v] - (static_cast<int>(link[v].size()) - ncomp[v]);
            if (cycles > 1 || (cycles == 1 && ncomp[v] != 1)) admissible = false;
            closed[v] = (cycles == 1 && ncomp[v] == 1) ? 1 : 0;
        }
    }

    int comp_of(VertexId v, int edge) const {
        for (auto [e, c] : link[v])
            if (e == edge) return c;
        return -1;
    }

    /// Defect after adding `c`, or -1 if the extension is inadmissible.
    int try_extend(const Cell& c) const {
        std::size_t n = c.size();
        int ids[4];
        int used[4];
        int nused = 0;
        for (std::size_t i = 0; i < n; ++i) {
            VertexId a = c.vertices[i], b = c.vertices[(i + 1) % n];
            int id = (a >= f1 || b >= f1) ? -1 : id_at(a, b);
            if (id >= 0) {
                const E& e = edges[id];
                if (e.col != c.edge_colour(i) || e.count >= 2) return -1;
                used[nused++] = e.c0;
                ids[i] = id;
            } else {
                ids[i] = -1;
            }
        }
        for (int i = 0; i < nused; ++i)
            for (int j = i + 1; j < nused; ++j)
                if (used[i] == used[j]) return -1;  // two shared edges or duplicate cell
        int d = defect;
        for (std::size_t i = 0; i < n; ++i) {
            VertexId v = c.vertices[i];
            if (v >= f1 || link[v].empty()) continue;  // fresh vertex: a new 1-arc path
            if (closed[v]) return -1;
            int ea = ids[(i + n - 1) % n];
            int eb = ids[i];
            if (ea < 0 && eb < 0) {
                ++d;  // new corner disjoint from the existing link
            } else if (ea >= 0 && eb >= 0) {
                int ca = comp_of(v, ea), cb = comp_of(v, eb);
                if (ca == cb) {
                    if (ncomp[v] > 1) return -1;  // cycle not covering the link
                } else {
                    --d;
                }
            }
            // one existing edge: the corner extends a path end, no change
        }
        return d;
    }
};

/// Candidate cells sharing at least one open edge with the state, over
/// existing vertices plus at most two fresh ones, prefiltered against the
/// edge table.  Near-duplicates possible; callers dedup by canonical code.
inline std::vector<Cell> growth_candidates(const GrowthContext& ctx,
                                           const std::vector<Cell>& cells) {
    std::vector<VertexId> pool;
    for (VertexId v = 0; v < ctx.f1; ++v)
        if (!ctx.link[v].empty()) pool.push_back(v);
    pool.push_back(ctx.f1);
    std::vector<VertexId> pool2 = pool;
    pool2.push_back(ctx.f2);

    auto edge_fits = [&](VertexId a, VertexId b, Colour col) {
        if (a >= ctx.f1 || b >= ctx.f1) return true;
        int id = ctx.id_at(a, b);
        return id < 0 || (ctx.edges[id].col == col && ctx.edges[id].count < 2);
    };
    std::vector<Cell> cand;
    auto add_quad = [&](VertexId a, VertexId b, VertexId c, VertexId d) {
        // <abcd>: red (a,b),(c,d); blue (b,c),(d,a).
        if (edge_fits(a, b, Colour::Red) && edge_fits(b, c, Colour::Blue) &&
            edge_fits(c, d, Colour::Red) && edge_fits(d, a, Colour::Blue))
            cand.push_back(quadrangle(a, b, c, d));
    };
    std::set<EdgeKey> seen;
    for (const Cell& c : cells) {
        std::size_t n = c.size();
        for (std::size_t i = 0; i < n; ++i) {
            EdgeKey k = edge_key(c.vertices[i], c.vertices[(i + 1) % n]);
            if (!seen.insert(k).second) continue;
            int id = ctx.id_at(k.first, k.second);
            if (ctx.edges[id].count >= 2) continue;
            auto [u, v] = k;
            if (ctx.edges[id].col == Colour::Red) {
                for (VertexId x : pool)
                    if (x != u && x != v && edge_fits(v, x, Colour::Red) &&
                        edge_fits(x, u, Colour::Red))
                        cand.push_back(red_triangle(u, v, x));
                for (VertexId y : pool2)
                    for (VertexId z : pool2) {
                        if (y == z || y == u || y == v || z == u || z == v) continue;
                        if ((y == ctx.f2 || z == ctx.f2) && y != ctx.f1 && z != ctx.f1)
                            continue;  // use the first fresh id first
                        add_quad(u, v, y, z);
                        add_quad(v, u, y, z);
                    }
            } else {
                for (VertexId x : pool)
                    if (x != u && x != v && edge_fits(v, x, Colour::Blue) &&
                        edge_fits(x, u, Colour::Blue))
                        cand.push_back(blue_triangle(u, v, x));
                for (VertexId y : pool2)
                    for (VertexId z : pool2) {
                        if (y == z || y == u || y == v || z == u || z == v) continue;
                        if ((y == ctx.f2 || z == ctx.f2) && y != ctx.f1 && z != ctx.f1) continue;
                        add_quad(y, u, v, z);
                        add_quad(y, v, u, z);
                    }
            }
        }
    }
    return cand;
}

/// Admissibility and defect of a sorted cell list by full recompute; -1 if
/// inadmissible.  Reference for GrowthContext::try_extend in tests.
inline int partial_defect(const std::vector<Cell>& cells) {
    GrowthContext ctx(cells);
    return ctx.admissible ? ctx.defect : -1;
}

}  // namespace detail

/// Visits one complex per colour-preserving isomorphism class with at most
/// max_cells cells, any topology, ordered by cell count then canonical code.
/// Streaming: nothing beyond the growth frontier is retained.
inline void enumerate_valid_complexes(std::size_t max_cells,
                                      const std::function<void(const SurfaceComplex&)>& visit) {
    if (max_cells == 0) return;
    std::vector<std::vector<Cell>> frontier = {
        {red_triangle(0, 1, 2)},
        {blue_triangle(0, 1, 2)},
        {quadrangle(0, 1, 2, 3)},
    };
    for (std::size_t size = 1; size <= max_cells; ++size) {
        const bool last = (size == max_cells);
        std::map<std::string, std::vector<Cell>> level;
        if (size == 1) {
            for (auto& cs : frontier) level.emplace(detail::canonical_code_of(cs, nullptr), cs);
        } else {
            std::vector<std::vector<Cell>> prev;
            prev.swap(frontier);
            const int budget = 4 * static_cast<int>(max_cells - size);
            for (const auto& cs : prev) {
                detail::GrowthContext ctx(cs);
                for (const Cell& c : detail::growth_candidates(ctx, cs)) {
                    int defect = ctx.try_extend(c);
                    if (defect < 0 || defect > budget) continue;
                    std::vector<Cell> next = cs;
                    next.push_back(c);
                    std::sort(next.begin(), next.end());
                    level.try_emplace(detail::canonical_code_of(next, nullptr),
                                      std::move(next));
                }
            }
        }
        frontier.reserve(level.size());
        for (auto& [code, cs] : level) {
            std::optional<SurfaceComplex> s;
            try {
                s.emplace(SurfaceComplex::build(cs));
            } catch (const Error&) {
                // admissible partial; kept only as a growth state
            }
            if (s) visit(*s);  // visitor exceptions propagate to the caller
            if (!last) frontier.push_back(std::move(cs));
        }
    }
}

/// One complex per colour-preserving isomorphism class with at most max_cells
/// cells, any topology, ordered by cell count then canonical code.
inline std::vector<SurfaceComplex> enumerate_valid_complexes(std::size_t max_cells) {
    std::vector<SurfaceComplex> out;
    enumerate_valid_complexes(max_cells, [&](const SurfaceComplex& s) { out.push_back(s); });
    return out;
}

}  // namespace causal

#endif  // CAUSAL_ENUMERATE_HPP
