#ifndef CAUSAL_LOCAL_MOVES_HPP
#define CAUSAL_LOCAL_MOVES_HPP

// Local construction of disc complexes: every disc can be built from a
// single cell by repeatedly (a) gluing a new cell along one boundary edge
// and (b) identifying two adjacent same-coloured boundary edges.  The
// sequence is found by backtracking over the reverse moves (removing a
// once-glued cell / splitting an identified edge) with memoised dead ends.

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <variant>
#include <vector>

#include "causal/surface_complex.hpp"

namespace causal {

struct GlueCell {
    Cell cell;     // shares exactly the edge below with the current complex
    EdgeKey edge;  // boundary edge glued along
};

struct IdentifyEdges {
    EdgeKey keep;  // boundary edge whose outer vertex survives
    EdgeKey drop;  // adjacent same-coloured boundary edge; its outer vertex
                   // is renamed to keep's outer vertex
};

using Move = std::variant<GlueCell, IdentifyEdges>;

struct MoveSequence {
    Cell initial = Cell(CellKind::RedTriangle, {0, 1, 2});
    std::vector<Move> moves;
};

namespace detail {

inline VertexId shared_vertex(const EdgeKey& a, const EdgeKey& b) {
    if (a.first == b.first || a.first == b.second) return a.first;
    if (a.second == b.first || a.second == b.second) return a.second;
    throw Error(Errc::BadCell, "edges do not share a vertex");
}

inline VertexId other_vertex(const EdgeKey& e, VertexId v) {
    return e.first == v ? e.second : e.first;
}

inline std::vector<Cell> relabel_cells(const std::vector<Cell>& cells, VertexId from,
                                       VertexId to) {
    std::vector<Cell> out;
    out.reserve(cells.size());
    for (const Cell& c : cells) {
        std::vector<VertexId> vs = c.vertices;
        for (VertexId& v : vs)
            if (v == from) v = to;
        out.push_back(Cell(c.kind, vs));
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace detail

/// Rebuilds the complex a move sequence describes, validating every
/// intermediate step (each must be a disc).
inline SurfaceComplex replay(const MoveSequence& seq) {
    std::vector<Cell> cells = {seq.initial};
    SurfaceComplex s = SurfaceComplex::build(cells);
    for (const Move& m : seq.moves) {
        if (const auto* g = std::get_if<GlueCell>(&m)) {
            const EdgeInfo& e = s.edge(g->edge.first, g->edge.second);
            if (!e.boundary()) throw Error(Errc::BadCell, "glue edge is not on the boundary");
            std::set<VertexId> existing(s.vertices().begin(), s.vertices().end());
            int shared = 0;
            bool has_edge = false;
            for (std::size_t i = 0; i < g->cell.size(); ++i) {
                if (existing.count(g->cell.vertices[i])) ++shared;
                EdgeKey k = edge_key(g->cell.vertices[i],
                                     g->cell.vertices[(i + 1) % g->cell.size()]);
                if (k == g->edge) has_edge = true;
            }
            if (!has_edge || shared != 2)
                throw Error(Errc::BadCell, "glued cell must meet the complex in one edge");
            cells.push_back(g->cell);
            std::sort(cells.begin(), cells.end());
        } else {
            const auto& id = std::get<IdentifyEdges>(m);
            const EdgeInfo& e1 = s.edge(id.keep.first, id.keep.second);
            const EdgeInfo& e2 = s.edge(id.drop.first, id.drop.second);
            if (!e1.boundary() || !e2.boundary() || e1.colour != e2.colour)
                throw Error(Errc::BadCell, "identified edges must be same-coloured boundary edges");
            VertexId u = detail::shared_vertex(id.keep, id.drop);
            VertexId target = detail::other_vertex(id.keep, u);
            VertexId gone = detail::other_vertex(id.drop, u);
            if (target == gone) throw Error(Errc::BadCell, "edges already identified");
            cells = detail::relabel_cells(cells, gone, target);
        }
        s = SurfaceComplex::build(cells);
        if (s.topology() != SurfaceTopology::Disc)
            throw Error(Errc::NotADisc, "intermediate complex is not a disc");
    }
    return s;
}

namespace detail {

struct ReverseStep {
    std::vector<Cell> smaller;
    Move forward;
};

inline bool vertex_on_boundary(const SurfaceComplex& s, VertexId v) {
    for (const EdgeInfo& e : s.edges())
        if (e.boundary() && (e.a == v || e.b == v)) return true;
    return false;
}

/// Cells around `w` ordered along its link path (w on the boundary).
inline std::vector<std::size_t> cell_fan(const SurfaceComplex& s, VertexId w) {
    std::vector<std::size_t> at;  // cells containing w
    for (std::size_t ci = 0; ci < s.num_cells(); ++ci)
        for (VertexId v : s.cells()[ci].vertices)
            if (v == w) at.push_back(ci);
    // adjacency through shared edges containing w
    auto w_edges = [&](std::size_t ci) {
        std::vector<EdgeKey> out;
        const Cell& c = s.cells()[ci];
        for (std::size_t i = 0; i < c.size(); ++i) {
            EdgeKey k = edge_key(c.vertices[i], c.vertices[(i + 1) % c.size()]);
            if (k.first == w || k.second == w) out.push_back(k);
        }
        return out;
    };
    // start from a cell holding a boundary edge at w
    std::size_t start = at.front();
    for (std::size_t ci : at)
        for (const EdgeKey& k : w_edges(ci))
            if (s.edge(k.first, k.second).boundary()) start = ci;
    std::vector<std::size_t> fan = {start};
    std::set<std::size_t> used = {start};
    while (fan.size() < at.size()) {
        bool grew = false;
        for (const EdgeKey& k : w_edges(fan.back())) {
            const EdgeInfo& e = s.edge(k.first, k.second);
            if (e.boundary()) continue;
            for (std::size_t cj : e.cells)
                if (!used.count(cj)) {
                    fan.push_back(cj);
                    used.insert(cj);
                    grew = true;
                    break;
                }
            if (grew) break;
        }
        if (!grew) break;  // split link; caller will reject via rebuild
    }
    return fan;
}

inline std::vector<ReverseStep> reverse_steps(const SurfaceComplex& s, VertexId fresh) {
    std::vector<ReverseStep> out;
    const auto& cells = s.cells();
    // (a) cells glued along exactly one edge: one interior edge, all other
    // vertices private to the cell
    for (std::size_t ci = 0; ci < cells.size(); ++ci) {
        const Cell& c = cells[ci];
        std::vector<EdgeKey> interior;
        for (std::size_t i = 0; i < c.size(); ++i) {
            EdgeKey k = edge_key(c.vertices[i], c.vertices[(i + 1) % c.size()]);
            if (!s.edge(k.first, k.second).boundary()) interior.push_back(k);
        }
        if (interior.size() != 1) continue;
        bool ok = true;
        for (VertexId v : c.vertices) {
            if (v == interior[0].first || v == interior[0].second) continue;
            for (std::size_t cj = 0; cj < cells.size() && ok; ++cj)
                if (cj != ci)
                    for (VertexId u : cells[cj].vertices)
                        if (u == v) ok = false;
        }
        if (!ok) continue;
        std::vector<Cell> smaller;
        for (std::size_t cj = 0; cj < cells.size(); ++cj)
            if (cj != ci) smaller.push_back(cells[cj]);
        out.push_back({std::move(smaller), GlueCell{c, interior[0]}});
    }
    // (b) interior edges (u,w) with u interior and w on the boundary: split
    // w's cell fan at the edge, renaming w in one part
    for (const EdgeInfo& e : s.edges()) {
        if (e.boundary()) continue;
        for (auto [u, w] : {std::pair{e.a, e.b}, std::pair{e.b, e.a}}) {
            if (vertex_on_boundary(s, u) || !vertex_on_boundary(s, w)) continue;
            std::vector<std::size_t> fan = cell_fan(s, w);
            std::size_t cut = fan.size();
            for (std::size_t j = 0; j + 1 < fan.size(); ++j) {
                const auto& ec = s.edge(std::min(u, w), std::max(u, w)).cells;
                bool ja = std::find(ec.begin(), ec.end(), fan[j]) != ec.end();
                bool jb = std::find(ec.begin(), ec.end(), fan[j + 1]) != ec.end();
                if (ja && jb) cut = j + 1;
            }
            if (cut == fan.size()) continue;  // edge not between consecutive fan cells
            for (int side = 0; side < 2; ++side) {
                std::vector<Cell> smaller;
                std::set<std::size_t> rename(fan.begin() + static_cast<long>(cut), fan.end());
                for (std::size_t ci = 0; ci < cells.size(); ++ci) {
                    bool in_part = rename.count(ci) != 0;
                    if (side == 1) in_part = !in_part && std::find(fan.begin(), fan.end(), ci) !=
                                                             fan.end();
                    if (!in_part) {
                        smaller.push_back(cells[ci]);
                        continue;
                    }
                    std::vector<VertexId> vs = cells[ci].vertices;
                    for (VertexId& v : vs)
                        if (v == w) v = fresh;
                    smaller.push_back(Cell(cells[ci].kind, vs));
                }
                std::sort(smaller.begin(), smaller.end());
                out.push_back({std::move(smaller),
                               IdentifyEdges{edge_key(u, w), edge_key(u, fresh)}});
            }
        }
    }
    return out;
}

}  // namespace detail

/// Finds a move sequence building `d` from a single cell; backtracking over
/// reverse moves with memoised dead ends.  Exists for every disc, so an
/// exhausted search indicates a bug rather than bad input.  A nonzero
/// `shuffle_seed` randomises the order reverse moves are tried in, yielding
/// alternative sequences for the same disc.
inline MoveSequence local_construction(const SurfaceComplex& d, unsigned shuffle_seed = 0) {
    if (d.topology() != SurfaceTopology::Disc)
        throw Error(Errc::NotADisc, "local construction requires a disc");
    VertexId fresh = 0;
    for (VertexId v : d.vertices()) fresh = std::max(fresh, v + 1);
    std::mt19937 rng(shuffle_seed);
    std::set<std::string> dead;
    MoveSequence seq;
    std::vector<Move> stack;
    std::function<bool(const SurfaceComplex&)> search = [&](const SurfaceComplex& s) -> bool {
        if (s.num_cells() == 1) {
            seq.initial = s.cells()[0];
            return true;
        }
        std::string code = s.canonical_code();
        if (dead.count(code)) return false;
        std::vector<detail::ReverseStep> steps = detail::reverse_steps(s, fresh);
        if (shuffle_seed != 0) std::shuffle(steps.begin(), steps.end(), rng);
        for (detail::ReverseStep& step : steps) {
            std::optional<SurfaceComplex> smaller;
            try {
                smaller.emplace(SurfaceComplex::build(step.smaller));
            } catch (const Error&) {
                continue;
            }
            if (smaller->topology() != SurfaceTopology::Disc) continue;
            VertexId saved = fresh;
            if (std::holds_alternative<IdentifyEdges>(step.forward)) ++fresh;
            stack.push_back(step.forward);
            if (search(*smaller)) return true;
            stack.pop_back();
            fresh = saved;
        }
        dead.insert(code);
        return false;
    };
    if (!search(d)) throw Error(Errc::NotADisc, "no local construction found");
    seq.moves.assign(stack.rbegin(), stack.rend());
    return seq;
}

}  // namespace causal

#endif  // CAUSAL_LOCAL_MOVES_HPP
