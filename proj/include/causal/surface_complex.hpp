#ifndef CAUSAL_SURFACE_COMPLEX_HPP
#define CAUSAL_SURFACE_COMPLEX_HPP

#include <algorithm>
#include <array>
#include <cstddef>
#include <map>
#include <numeric>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "causal/base.hpp"

namespace causal {

enum class CellKind : std::uint8_t { RedTriangle, BlueTriangle, Quadrangle };

enum class SurfaceTopology : std::uint8_t { Disc, Sphere, Other };

inline const char* to_string(SurfaceTopology t) {
    switch (t) {
        case SurfaceTopology::Disc: return "disc";
        case SurfaceTopology::Sphere: return "sphere";
        case SurfaceTopology::Other: return "other";
    }
    return "?";
}

/// A 2-cell with a cyclic vertex list.  Triangles are monocoloured; a
/// quadrangle <abcd> has red edges (a,b),(c,d) and blue edges (b,c),(d,a).
/// Cells are normalised so that equal cells compare equal: triangles keep a
/// sorted vertex list, quadrangles the lexicographically smallest of the four
/// colour-preserving symmetries <abcd> = <cdab> = <dcba> = <badc>.
struct Cell {
    CellKind kind;
    std::vector<VertexId> vertices;

    Cell(CellKind k, std::vector<VertexId> vs) : kind(k), vertices(std::move(vs)) {
        const std::size_t want = (kind == CellKind::Quadrangle) ? 4 : 3;
        if (vertices.size() != want)
            throw Error(Errc::BadCell, "cell has wrong vertex count");
        for (VertexId v : vertices)
            if (v < 0) throw Error(Errc::BadCell, "negative vertex id");
        std::vector<VertexId> uniq = vertices;
        std::sort(uniq.begin(), uniq.end());
        if (std::adjacent_find(uniq.begin(), uniq.end()) != uniq.end())
            throw Error(Errc::BadCell, "repeated vertex in cell");
        normalise();
    }

    std::size_t size() const { return vertices.size(); }

    Colour edge_colour(std::size_t i) const {
        if (kind == CellKind::RedTriangle) return Colour::Red;
        if (kind == CellKind::BlueTriangle) return Colour::Blue;
        return (i % 2 == 0) ? Colour::Red : Colour::Blue;
    }

    bool operator==(const Cell& o) const { return kind == o.kind && vertices == o.vertices; }
    bool operator<(const Cell& o) const {
        if (kind != o.kind) return kind < o.kind;
        return vertices < o.vertices;
    }

private:
    void normalise() {
        if (kind != CellKind::Quadrangle) {
            std::sort(vertices.begin(), vertices.end());
            return;
        }
        const auto& v = vertices;
        std::array<std::array<VertexId, 4>, 4> orbit = {{
            {v[0], v[1], v[2], v[3]},
            {v[2], v[3], v[0], v[1]},
            {v[3], v[2], v[1], v[0]},
            {v[1], v[0], v[3], v[2]},
        }};
        auto best = *std::min_element(orbit.begin(), orbit.end());
        vertices.assign(best.begin(), best.end());
    }
};

inline Cell red_triangle(VertexId a, VertexId b, VertexId c) {
    return Cell(CellKind::RedTriangle, {a, b, c});
}
inline Cell blue_triangle(VertexId a, VertexId b, VertexId c) {
    return Cell(CellKind::BlueTriangle, {a, b, c});
}
inline Cell quadrangle(VertexId a, VertexId b, VertexId c, VertexId d) {
    return Cell(CellKind::Quadrangle, {a, b, c, d});
}

using EdgeKey = std::pair<VertexId, VertexId>;

inline EdgeKey edge_key(VertexId a, VertexId b) {
    return a < b ? EdgeKey{a, b} : EdgeKey{b, a};
}

struct EdgeInfo {
    VertexId a, b;  // a < b
    Colour colour;
    std::vector<std::size_t> cells;  // incident cell indices, size 1 or 2

    bool boundary() const { return cells.size() == 1; }
};

struct TopologyReport {
    SurfaceTopology topology;
    int euler;
    std::size_t boundary_count;
};

struct BoundaryArc {
    Colour colour;
    std::vector<VertexId> vertices;  // endpoints inclusive; closed arcs repeat the first vertex last
};

struct BoundaryArcs {
    std::vector<BoundaryArc> arcs;
    bool single_closed = false;  // boundary entirely monochromatic
};

struct VertexPartition {
    std::vector<std::vector<VertexId>> blocks;  // each sorted; blocks sorted by first element
    std::map<VertexId, int> block_of;

    bool same_block(VertexId u, VertexId v) const { return block_of.at(u) == block_of.at(v); }
};

struct QuadChain {
    bool closed;
    std::vector<EdgeKey> edges;           // colour-c edges along the chain
    std::vector<std::size_t> quads;       // quads[i] joins edges[i] and edges[i+1] (mod size if closed)
};

/// Immutable validated coloured 2-dimensional cell complex.
class SurfaceComplex {
public:
    /// Validates and builds all derived tables.  Rejects inputs violating
    /// edge multiplicity, edge-colour consistency, the surface condition
    /// (every vertex link a simple path or cycle), or connectivity.
    static SurfaceComplex build(std::vector<Cell> cells);

    const std::vector<Cell>& cells() const { return cells_; }
    const std::vector<VertexId>& vertices() const { return vertices_; }
    const std::vector<EdgeInfo>& edges() const { return edges_; }

    std::size_t num_vertices() const { return vertices_.size(); }
    std::size_t num_edges() const { return edges_.size(); }
    std::size_t num_cells() const { return cells_.size(); }

    int euler() const { return euler_; }
    SurfaceTopology topology() const { return topology_; }
    TopologyReport classify() const { return {topology_, euler_, boundary_cycles_.size()}; }

    const std::vector<std::vector<VertexId>>& boundary_cycles() const { return boundary_cycles_; }

    /// The single boundary cycle of a disc, in deterministic cyclic order.
    const std::vector<VertexId>& boundary_cycle() const {
        if (topology_ != SurfaceTopology::Disc)
            throw Error(Errc::NotADisc, "boundary_cycle requires a disc");
        return boundary_cycles_.front();
    }

    std::size_t edge_index(VertexId a, VertexId b) const {
        auto it = edge_lookup_.find(edge_key(a, b));
        if (it == edge_lookup_.end()) throw Error(Errc::BadCell, "no such edge");
        return it->second;
    }

    bool has_edge(VertexId a, VertexId b) const {
        return edge_lookup_.count(edge_key(a, b)) != 0;
    }

    const EdgeInfo& edge(VertexId a, VertexId b) const { return edges_[edge_index(a, b)]; }

    std::size_t count_cells(CellKind k) const {
        return static_cast<std::size_t>(
            std::count_if(cells_.begin(), cells_.end(), [&](const Cell& c) { return c.kind == k; }));
    }

    /// Maximal monochromatic boundary arcs of a disc, in cyclic order.
    BoundaryArcs boundary_arcs() const;

    /// Partition of all vertices into colour-c path components (singletons
    /// for vertices on no c-edge).
    VertexPartition monochrome_vertex_components(Colour c) const;

    /// Decomposition of the graph (nodes: colour-c edges, links: quadrangles
    /// joining their two colour-c edges) into simple paths and cycles.
    std::vector<QuadChain> quad_chains(Colour c) const;

    /// Deterministic complete invariant of colour-preserving cell-complex
    /// isomorphism (reflections included, red/blue swap excluded).
    std::string canonical_code() const;

    /// A vertex relabelling realising canonical_code (canonical label of each
    /// vertex); equal for isomorphic complexes after mapping.
    std::map<VertexId, int> canonical_vertex_labels() const;

    bool all_triangles() const {
        return std::all_of(cells_.begin(), cells_.end(),
                           [](const Cell& c) { return c.kind != CellKind::Quadrangle; });
    }

private:
    SurfaceComplex() = default;

    void derive_tables();
    void check_links() const;
    void check_connected() const;
    void trace_boundary();
    void classify_topology();

    std::vector<Cell> cells_;
    std::vector<VertexId> vertices_;
    std::vector<EdgeInfo> edges_;
    std::map<EdgeKey, std::size_t> edge_lookup_;
    std::vector<std::vector<VertexId>> boundary_cycles_;
    int euler_ = 0;
    SurfaceTopology topology_ = SurfaceTopology::Other;
};

// ---------------------------------------------------------------------------

inline SurfaceComplex SurfaceComplex::build(std::vector<Cell> cells) {
    if (cells.empty()) throw Error(Errc::BadCell, "empty cell list");
    std::sort(cells.begin(), cells.end());
    if (std::adjacent_find(cells.begin(), cells.end()) != cells.end())
        throw Error(Errc::CellsShareTwoEdges, "duplicate cell");
    SurfaceComplex s;
    s.cells_ = std::move(cells);
    s.derive_tables();
    s.check_links();
    s.check_connected();
    s.trace_boundary();
    s.classify_topology();
    return s;
}

inline void SurfaceComplex::derive_tables() {
    std::set<VertexId> vset;
    for (std::size_t ci = 0; ci < cells_.size(); ++ci) {
        const Cell& c = cells_[ci];
        for (VertexId v : c.vertices) vset.insert(v);
        for (std::size_t i = 0; i < c.size(); ++i) {
            VertexId u = c.vertices[i];
            VertexId v = c.vertices[(i + 1) % c.size()];
            Colour col = c.edge_colour(i);
            EdgeKey k = edge_key(u, v);
            auto it = edge_lookup_.find(k);
            if (it == edge_lookup_.end()) {
                edge_lookup_[k] = edges_.size();
                edges_.push_back({k.first, k.second, col, {ci}});
            } else {
                EdgeInfo& e = edges_[it->second];
                if (e.colour != col)
                    throw Error(Errc::EdgeColourConflict,
                                "edge (" + std::to_string(u) + "," + std::to_string(v) +
                                    ") has inconsistent colours");
                if (e.cells.size() >= 2)
                    throw Error(Errc::EdgeInTooManyCells,
                                "edge (" + std::to_string(u) + "," + std::to_string(v) +
                                    ") lies in more than 2 cells");
                e.cells.push_back(ci);
            }
        }
    }
    vertices_.assign(vset.begin(), vset.end());

    // No two distinct cells may share more than one edge.
    std::map<std::pair<std::size_t, std::size_t>, int> shared;
    for (const EdgeInfo& e : edges_)
        if (e.cells.size() == 2) {
            auto key = std::minmax(e.cells[0], e.cells[1]);
            if (++shared[{key.first, key.second}] > 1)
                throw Error(Errc::CellsShareTwoEdges, "two cells share two edges");
        }
}

inline void SurfaceComplex::check_links() const {
    // Link of each vertex: nodes are incident edges, links are cell corners.
    // Valid iff connected with 0 (interior) or 2 (boundary) boundary edges.
    std::map<VertexId, std::vector<std::size_t>> incident;  // vertex -> edge indices
    for (std::size_t ei = 0; ei < edges_.size(); ++ei) {
        incident[edges_[ei].a].push_back(ei);
        incident[edges_[ei].b].push_back(ei);
    }
    for (VertexId v : vertices_) {
        const auto& inc = incident[v];
        std::map<std::size_t, std::size_t> local;  // edge index -> local node
        for (std::size_t i = 0; i < inc.size(); ++i) local[inc[i]] = i;
        std::vector<std::size_t> parent(inc.size());
        std::iota(parent.begin(), parent.end(), 0);
        auto find = [&](std::size_t x) {
            while (parent[x] != x) x = parent[x] = parent[parent[x]];
            return x;
        };
        for (const Cell& c : cells_) {
            auto it = std::find(c.vertices.begin(), c.vertices.end(), v);
            if (it == c.vertices.end()) continue;
            std::size_t i = static_cast<std::size_t>(it - c.vertices.begin());
            std::size_t n = c.size();
            VertexId prev = c.vertices[(i + n - 1) % n];
            VertexId next = c.vertices[(i + 1) % n];
            std::size_t ea = edge_lookup_.at(edge_key(prev, v));
            std::size_t eb = edge_lookup_.at(edge_key(v, next));
            parent[find(local[ea])] = find(local[eb]);
        }
        std::size_t roots = 0, bnd = 0;
        for (std::size_t i = 0; i < inc.size(); ++i) {
            if (find(i) == i) ++roots;
            if (edges_[inc[i]].boundary()) ++bnd;
        }
        if (roots != 1 || (bnd != 0 && bnd != 2))
            throw Error(Errc::NonSurfaceLink,
                        "vertex " + std::to_string(v) + " has a non-surface link");
    }
}

inline void SurfaceComplex::check_connected() const {
    std::vector<int> seen(cells_.size(), 0);
    std::vector<std::size_t> stack = {0};
    seen[0] = 1;
    while (!stack.empty()) {
        std::size_t ci = stack.back();
        stack.pop_back();
        const Cell& c = cells_[ci];
        for (std::size_t i = 0; i < c.size(); ++i) {
            const EdgeInfo& e =
                edges_[edge_lookup_.at(edge_key(c.vertices[i], c.vertices[(i + 1) % c.size()]))];
            for (std::size_t cj : e.cells)
                if (!seen[cj]) {
                    seen[cj] = 1;
                    stack.push_back(cj);
                }
        }
    }
    if (std::find(seen.begin(), seen.end(), 0) != seen.end())
        throw Error(Errc::Disconnected, "cell complex is not connected");
}

inline void SurfaceComplex::trace_boundary() {
    // Every boundary vertex has exactly two boundary edges (link check), so
    // boundary edges decompose into vertex-disjoint simple cycles.
    std::map<VertexId, std::vector<std::size_t>> bnd_at;
    for (std::size_t ei = 0; ei < edges_.size(); ++ei)
        if (edges_[ei].boundary()) {
            bnd_at[edges_[ei].a].push_back(ei);
            bnd_at[edges_[ei].b].push_back(ei);
        }
    std::set<std::size_t> todo;
    for (std::size_t ei = 0; ei < edges_.size(); ++ei)
        if (edges_[ei].boundary()) todo.insert(ei);
    while (!todo.empty()) {
        // Deterministic start: smallest boundary vertex still unvisited, then
        // its smaller boundary neighbour.
        VertexId start = -1;
        for (const auto& [v, es] : bnd_at) {
            bool fresh = std::any_of(es.begin(), es.end(),
                                     [&](std::size_t e) { return todo.count(e) != 0; });
            if (fresh) {
                start = v;
                break;
            }
        }
        auto other = [&](std::size_t ei, VertexId v) {
            return edges_[ei].a == v ? edges_[ei].b : edges_[ei].a;
        };
        const auto& es = bnd_at[start];
        VertexId n0 = other(es[0], start), n1 = other(es[1], start);
        std::size_t first = (n0 <= n1) ? es[0] : es[1];
        std::vector<VertexId> cycle = {start};
        VertexId cur = other(first, start);
        std::size_t cur_edge = first;
        todo.erase(first);
        while (cur != start) {
            cycle.push_back(cur);
            const auto& ces = bnd_at[cur];
            std::size_t next = (ces[0] == cur_edge) ? ces[1] : ces[0];
            cur_edge = next;
            todo.erase(next);
            cur = other(next, cur);
        }
        boundary_cycles_.push_back(std::move(cycle));
    }
}

inline void SurfaceComplex::classify_topology() {
    euler_ = static_cast<int>(num_vertices()) - static_cast<int>(num_edges()) +
             static_cast<int>(num_cells());
    if (euler_ == 1 && boundary_cycles_.size() == 1)
        topology_ = SurfaceTopology::Disc;
    else if (euler_ == 2 && boundary_cycles_.empty())
        topology_ = SurfaceTopology::Sphere;
    else
        topology_ = SurfaceTopology::Other;
}

inline BoundaryArcs SurfaceComplex::boundary_arcs() const {
    if (topology_ != SurfaceTopology::Disc)
        throw Error(Errc::NotADisc, "boundary_arcs requires a disc");
    const auto& cyc = boundary_cycle();
    std::size_t n = cyc.size();
    std::vector<Colour> col(n);
    for (std::size_t i = 0; i < n; ++i)
        col[i] = edge(cyc[i], cyc[(i + 1) % n]).colour;

    BoundaryArcs out;
    // Positions where a new arc starts (colour differs from previous edge).
    std::vector<std::size_t> breaks;
    for (std::size_t i = 0; i < n; ++i)
        if (col[i] != col[(i + n - 1) % n]) breaks.push_back(i);
    if (breaks.empty()) {
        BoundaryArc arc{col[0], cyc};
        arc.vertices.push_back(cyc[0]);
        out.arcs.push_back(std::move(arc));
        out.single_closed = true;
        return out;
    }
    for (std::size_t bi = 0; bi < breaks.size(); ++bi) {
        std::size_t from = breaks[bi];
        std::size_t to = breaks[(bi + 1) % breaks.size()];
        BoundaryArc arc{col[from], {}};
        for (std::size_t i = from;; i = (i + 1) % n) {
            arc.vertices.push_back(cyc[i]);
            if (i == to) break;
        }
        out.arcs.push_back(std::move(arc));
    }
    return out;
}

inline VertexPartition SurfaceComplex::monochrome_vertex_components(Colour c) const {
    std::map<VertexId, VertexId> parent;
    for (VertexId v : vertices_) parent[v] = v;
    auto find = [&](VertexId x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (const EdgeInfo& e : edges_)
        if (e.colour == c) parent[find(e.a)] = find(e.b);
    std::map<VertexId, std::vector<VertexId>> groups;
    for (VertexId v : vertices_) groups[find(v)].push_back(v);
    VertexPartition part;
    for (auto& [root, vs] : groups) {
        std::sort(vs.begin(), vs.end());
        part.blocks.push_back(vs);
    }
    std::sort(part.blocks.begin(), part.blocks.end());
    for (std::size_t i = 0; i < part.blocks.size(); ++i)
        for (VertexId v : part.blocks[i]) part.block_of[v] = static_cast<int>(i);
    return part;
}

inline std::vector<QuadChain> SurfaceComplex::quad_chains(Colour c) const {
    // Node set: colour-c edges.  Links: quadrangles, joining their two
    // colour-c edges.  Every node has degree <= 2.
    std::map<EdgeKey, std::vector<std::size_t>> deg;  // edge -> incident quads
    std::map<std::size_t, std::array<EdgeKey, 2>> quad_edges;
    for (const EdgeInfo& e : edges_)
        if (e.colour == c) deg[{e.a, e.b}] = {};
    for (std::size_t ci = 0; ci < cells_.size(); ++ci) {
        const Cell& q = cells_[ci];
        if (q.kind != CellKind::Quadrangle) continue;
        std::array<EdgeKey, 2> ek;
        std::size_t w = 0;
        for (std::size_t i = 0; i < 4; ++i)
            if (q.edge_colour(i) == c)
                ek[w++] = edge_key(q.vertices[i], q.vertices[(i + 1) % 4]);
        quad_edges[ci] = ek;
        deg[ek[0]].push_back(ci);
        deg[ek[1]].push_back(ci);
    }
    auto quad_other = [&](std::size_t q, EdgeKey e) {
        const auto& ek = quad_edges[q];
        return ek[0] == e ? ek[1] : ek[0];
    };
    std::set<EdgeKey> todo;
    for (const auto& [e, qs] : deg) todo.insert(e);
    std::vector<QuadChain> chains;
    // Paths first: start from nodes of degree <= 1.
    for (const auto& [e0, qs0] : deg) {
        if (!todo.count(e0) || qs0.size() == 2) continue;
        QuadChain ch{false, {e0}, {}};
        todo.erase(e0);
        EdgeKey cur = e0;
        std::size_t prev_q = SIZE_MAX;
        for (;;) {
            const auto& qs = deg[cur];
            std::size_t nq = SIZE_MAX;
            for (std::size_t q : qs)
                if (q != prev_q) nq = q;
            if (nq == SIZE_MAX) break;
            EdgeKey nxt = quad_other(nq, cur);
            ch.quads.push_back(nq);
            ch.edges.push_back(nxt);
            todo.erase(nxt);
            prev_q = nq;
            cur = nxt;
        }
        chains.push_back(std::move(ch));
    }
    // Remaining nodes lie on cycles.
    while (!todo.empty()) {
        EdgeKey e0 = *todo.begin();
        QuadChain ch{true, {e0}, {}};
        todo.erase(e0);
        std::size_t q = std::min(deg[e0][0], deg[e0][1]);
        EdgeKey cur = e0;
        for (;;) {
            EdgeKey nxt = quad_other(q, cur);
            ch.quads.push_back(q);
            if (nxt == e0) break;
            ch.edges.push_back(nxt);
            todo.erase(nxt);
            const auto& qs = deg[nxt];
            q = (qs[0] == q) ? qs[1] : qs[0];
            cur = nxt;
        }
        chains.push_back(std::move(ch));
    }
    std::sort(chains.begin(), chains.end(),
              [](const QuadChain& x, const QuadChain& y) { return x.edges < y.edges; });
    return chains;
}

// --- canonical code ---------------------------------------------------------

namespace detail {

/// Flattened traversal tables for the flag codes.  Requires only that the
/// cell graph is connected and every edge lies in at most two cells; full
/// surface validity is not needed.
struct FlagTables {
    std::vector<VertexId> vertex_of;            // compressed index -> original id
    std::vector<std::array<int, 4>> cell_verts;  // compressed; unused slots -1
    std::vector<int> cell_size;
    std::vector<CellKind> cell_kind;
    std::vector<int> edge_id;                    // V*V matrix, -1 if absent
    std::vector<std::array<int, 2>> edge_cells;  // ascending cell indices, -1 absent
    int nv = 0;

    explicit FlagTables(const std::vector<Cell>& cells) {
        std::map<VertexId, int> idx;
        for (const Cell& c : cells)
            for (VertexId v : c.vertices) idx.emplace(v, 0);
        for (auto& [v, i] : idx) {
            i = nv++;
            vertex_of.push_back(v);
        }
        edge_id.assign(static_cast<std::size_t>(nv) * nv, -1);
        for (std::size_t ci = 0; ci < cells.size(); ++ci) {
            const Cell& c = cells[ci];
            std::array<int, 4> vs = {-1, -1, -1, -1};
            for (std::size_t i = 0; i < c.size(); ++i) vs[i] = idx[c.vertices[i]];
            cell_verts.push_back(vs);
            cell_size.push_back(static_cast<int>(c.size()));
            cell_kind.push_back(c.kind);
            for (std::size_t i = 0; i < c.size(); ++i) {
                int a = vs[i], b = vs[(i + 1) % c.size()];
                int& id = edge_id[static_cast<std::size_t>(std::min(a, b)) * nv + std::max(a, b)];
                if (id < 0) {
                    id = static_cast<int>(edge_cells.size());
                    edge_cells.push_back({static_cast<int>(ci), -1});
                } else {
                    edge_cells[id][1] = static_cast<int>(ci);
                }
            }
        }
    }

    int edge(int a, int b) const {
        return edge_id[static_cast<std::size_t>(std::min(a, b)) * nv + std::max(a, b)];
    }
};

/// Code of one flag-rooted breadth-first traversal: per cell a colour tag
/// ('R', 'B', 'q' = quad entered along a red edge, 'p' = along a blue one)
/// followed by first-encounter vertex labels.  Stops early and returns false
/// once the code exceeds `best` (when non-empty).
inline bool flag_code(const FlagTables& t, int cell0, int pos, int dir, const std::string& best,
                      std::string& code, std::vector<int>* labels_out) {
    code.clear();
    std::vector<int> labels(t.nv, -1);
    int next_label = 0;
    bool bounded = !best.empty();
    bool prefix = bounded;  // still equal to best's prefix
    auto push = [&](char ch) {
        if (prefix) {
            char b = best[code.size()];
            if (ch > b) return false;
            if (ch < b) prefix = false;
        }
        code.push_back(ch);
        return true;
    };
    std::size_t ncells = t.cell_verts.size();
    std::vector<char> visited(ncells, 0);
    std::vector<std::pair<int, int>> queue;
    queue.reserve(4 * ncells);
    std::size_t qhead = 0;

    auto emit = [&](int ci, int p, int d) {
        visited[ci] = 1;
        int n = t.cell_size[ci];
        const auto& vs = t.cell_verts[ci];
        char tag;
        if (t.cell_kind[ci] == CellKind::RedTriangle)
            tag = 'R';
        else if (t.cell_kind[ci] == CellKind::BlueTriangle)
            tag = 'B';
        else
            tag = ((d > 0 ? p : (p + 3) % 4) % 2 == 0) ? 'q' : 'p';
        if (!push(tag)) return false;
        int prev = -1, first = -1;
        for (int k = 0; k < n; ++k) {
            int v = vs[(p + n + (d > 0 ? k : n - k) % n) % n];
            if (labels[v] < 0) labels[v] = next_label++;
            if (!push(static_cast<char>('0' + labels[v]))) return false;
            if (k == 0)
                first = v;
            else
                queue.emplace_back(prev, v);
            prev = v;
        }
        queue.emplace_back(prev, first);
        return true;
    };

    if (!emit(cell0, pos, dir)) return false;
    while (qhead < queue.size()) {
        auto [u, v] = queue[qhead++];
        for (int ci : t.edge_cells[t.edge(u, v)]) {
            if (ci < 0 || visited[ci]) continue;
            // Traverse starting at u, with v second.
            int n = t.cell_size[ci];
            int p = 0;
            while (t.cell_verts[ci][p] != u) ++p;
            int d = (t.cell_verts[ci][(p + 1) % n] == v) ? 1 : -1;
            if (!emit(ci, p, d)) return false;
        }
    }
    if (labels_out) *labels_out = labels;
    return true;
}

/// Minimum of flag_code over all flags: a complete invariant of
/// colour-preserving isomorphism on connected cell lists.
inline std::string canonical_code_of(const std::vector<Cell>& cells,
                                     std::map<VertexId, int>* labels_out) {
    FlagTables t(cells);
    std::string best, code;
    std::vector<int> labels, best_labels;
    for (std::size_t ci = 0; ci < cells.size(); ++ci)
        for (int p = 0; p < t.cell_size[ci]; ++p)
            for (int d : {1, -1})
                if (flag_code(t, static_cast<int>(ci), p, d, best, code,
                              labels_out ? &labels : nullptr) &&
                    (best.empty() || code < best)) {
                    std::swap(best, code);
                    std::swap(best_labels, labels);
                }
    if (labels_out) {
        labels_out->clear();
        for (int v = 0; v < t.nv; ++v) labels_out->emplace(t.vertex_of[v], best_labels[v]);
    }
    return best;
}

}  // namespace detail

inline std::string SurfaceComplex::canonical_code() const {
    return detail::canonical_code_of(cells_, nullptr);
}

inline std::map<VertexId, int> SurfaceComplex::canonical_vertex_labels() const {
    std::map<VertexId, int> labels;
    detail::canonical_code_of(cells_, &labels);
    return labels;
}

}  // namespace causal

#endif  // CAUSAL_SURFACE_COMPLEX_HPP
