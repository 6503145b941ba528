#ifndef CAUSAL_COMPLEX3_HPP
#define CAUSAL_COMPLEX3_HPP

// Coloured 3-dimensional simplicial complexes under vertex-set semantics:
// a simplex is determined by its vertex set, so regularity of the
// triangulation is structural.  Tetrahedra must be two-coloured; every
// triangle lies in at most two tetrahedra; the tetra graph is connected.

#include <algorithm>
#include <array>
#include <cstdint>
#include <functional>
#include <map>
#include <set>
#include <vector>

#include "causal/surface_complex.hpp"

namespace causal {

using Tri3 = std::array<VertexId, 3>;   // sorted
using Edge3 = std::array<VertexId, 2>;  // sorted

struct CVertex {
    VertexId id;
    Colour colour;
};

struct Tetra {
    std::array<VertexId, 4> v;  // sorted ascending

    Tetra(VertexId a, VertexId b, VertexId c, VertexId d) : v{a, b, c, d} {
        std::sort(v.begin(), v.end());
        if (v[0] == v[1] || v[1] == v[2] || v[2] == v[3])
            throw Error(Errc::BadCell, "tetrahedron vertices must be distinct");
    }

    auto operator<=>(const Tetra&) const = default;

    std::array<Tri3, 4> faces() const {
        return {{{v[1], v[2], v[3]},
                 {v[0], v[2], v[3]},
                 {v[0], v[1], v[3]},
                 {v[0], v[1], v[2]}}};
    }
};

inline Tri3 tri3(VertexId a, VertexId b, VertexId c) {
    Tri3 t{a, b, c};
    std::sort(t.begin(), t.end());
    return t;
}

inline Edge3 edge3(VertexId a, VertexId b) { return {std::min(a, b), std::max(a, b)}; }

class Complex3 {
  public:
    static Complex3 build(std::vector<CVertex> vertices, std::vector<Tetra> tetras) {
        Complex3 m;
        for (const CVertex& cv : vertices)
            if (!m.colour_.emplace(cv.id, cv.colour).second)
                throw Error(Errc::BadCell, "duplicate vertex id");
        if (tetras.empty()) throw Error(Errc::BadCell, "no tetrahedra");
        std::sort(tetras.begin(), tetras.end());
        for (std::size_t i = 0; i + 1 < tetras.size(); ++i)
            if (tetras[i] == tetras[i + 1])
                throw Error(Errc::DuplicateTetra, "two tetrahedra share their vertex set");
        m.tetras_ = std::move(tetras);
        std::set<VertexId> used;
        for (std::size_t ti = 0; ti < m.tetras_.size(); ++ti) {
            const Tetra& t = m.tetras_[ti];
            int reds = 0;
            for (VertexId x : t.v) {
                auto it = m.colour_.find(x);
                if (it == m.colour_.end()) throw Error(Errc::BadCell, "unknown vertex id");
                if (it->second == Colour::Red) ++reds;
                used.insert(x);
            }
            if (reds == 0 || reds == 4)
                throw Error(Errc::MonochromeTetra, "tetrahedron has a single colour");
            for (const Tri3& f : t.faces()) {
                auto& at = m.tris_[f];
                if (at.size() == 2)
                    throw Error(Errc::NonPseudomanifold, "triangle in more than two tetrahedra");
                at.push_back(ti);
            }
            for (int i = 0; i < 4; ++i)
                for (int j = i + 1; j < 4; ++j) m.edges_.insert(edge3(t.v[i], t.v[j]));
        }
        if (used.size() != m.colour_.size())
            throw Error(Errc::BadCell, "vertex not used by any tetrahedron");
        // connectivity through shared triangles
        std::vector<char> seen(m.tetras_.size(), 0);
        std::vector<std::size_t> stack = {0};
        seen[0] = 1;
        while (!stack.empty()) {
            std::size_t ti = stack.back();
            stack.pop_back();
            for (const Tri3& f : m.tetras_[ti].faces())
                for (std::size_t tj : m.tris_.at(f))
                    if (!seen[tj]) {
                        seen[tj] = 1;
                        stack.push_back(tj);
                    }
        }
        if (std::find(seen.begin(), seen.end(), 0) != seen.end())
            throw Error(Errc::Disconnected, "tetra graph is not connected");
        return m;
    }

    Colour colour(VertexId v) const { return colour_.at(v); }
    const std::map<VertexId, Colour>& vertex_colours() const { return colour_; }
    const std::vector<Tetra>& tetras() const { return tetras_; }
    const std::map<Tri3, std::vector<std::size_t>>& triangles() const { return tris_; }
    const std::set<Edge3>& edges() const { return edges_; }

    std::size_t num_vertices() const { return colour_.size(); }
    std::size_t num_edges() const { return edges_.size(); }
    std::size_t num_triangles() const { return tris_.size(); }
    std::size_t num_tetras() const { return tetras_.size(); }

    int euler() const {
        return static_cast<int>(num_vertices()) - static_cast<int>(num_edges()) +
               static_cast<int>(num_triangles()) - static_cast<int>(num_tetras());
    }

    /// Red vertices of a tetra: 3 -> (3,1), 2 -> (2,2), 1 -> (1,3).
    int red_count(const Tetra& t) const {
        int reds = 0;
        for (VertexId x : t.v)
            if (colour(x) == Colour::Red) ++reds;
        return reds;
    }

    int red_count(const Tri3& f) const {
        int reds = 0;
        for (VertexId x : f)
            if (colour(x) == Colour::Red) ++reds;
        return reds;
    }

    bool is_boundary(const Tri3& f) const { return tris_.at(f).size() == 1; }

    std::vector<Tri3> boundary_triangles() const {
        std::vector<Tri3> out;
        for (const auto& [f, at] : tris_)
            if (at.size() == 1) out.push_back(f);
        return out;
    }

    bool two_coloured(const Edge3& e) const { return colour(e[0]) != colour(e[1]); }

    std::vector<Edge3> two_coloured_edges() const {
        std::vector<Edge3> out;
        for (const Edge3& e : edges_)
            if (two_coloured(e)) out.push_back(e);
        return out;
    }

  private:
    std::map<VertexId, Colour> colour_;
    std::vector<Tetra> tetras_;
    std::map<Tri3, std::vector<std::size_t>> tris_;
    std::set<Edge3> edges_;
};

enum class SliceKind : std::uint8_t { Disc, Sphere };

inline const char* to_string(SliceKind k) { return k == SliceKind::Disc ? "disc" : "sphere"; }

struct BoundarySplit {
    std::vector<Tri3> d_red;
    std::vector<Tri3> d_blue;
    std::vector<Tri3> side;  // cyclic walk order along the red boundary circle
};

namespace detail {

enum class TriSurface { Disc, Sphere, Other };

/// Topology of a set of uncoloured triangles under the usual surface
/// conditions (edges in <= 2 triangles, single-component vertex links,
/// edge-connected).
inline TriSurface triangle_surface(const std::vector<Tri3>& tris) {
    if (tris.empty()) return TriSurface::Other;
    std::map<Edge3, std::vector<std::size_t>> at;
    for (std::size_t i = 0; i < tris.size(); ++i) {
        const Tri3& t = tris[i];
        for (int a = 0; a < 3; ++a)
            for (int b = a + 1; b < 3; ++b) {
                auto& v = at[edge3(t[a], t[b])];
                if (v.size() == 2) return TriSurface::Other;
                v.push_back(i);
            }
    }
    // connectivity
    std::vector<char> seen(tris.size(), 0);
    std::vector<std::size_t> stack = {0};
    seen[0] = 1;
    while (!stack.empty()) {
        std::size_t i = stack.back();
        stack.pop_back();
        const Tri3& t = tris[i];
        for (int a = 0; a < 3; ++a)
            for (int b = a + 1; b < 3; ++b)
                for (std::size_t j : at.at(edge3(t[a], t[b])))
                    if (!seen[j]) {
                        seen[j] = 1;
                        stack.push_back(j);
                    }
    }
    if (std::find(seen.begin(), seen.end(), 0) != seen.end()) return TriSurface::Other;
    // vertex links: union-find over incident edges per vertex; one component,
    // and a cycle only when it covers the link
    std::map<VertexId, std::map<Edge3, Edge3>> parent;
    std::map<VertexId, int> narcs;
    std::function<Edge3(VertexId, Edge3)> find = [&](VertexId v, Edge3 x) {
        auto& p = parent[v];
        auto [it, fresh] = p.try_emplace(x, x);
        if (it->second == x) return x;
        return it->second = find(v, it->second);
    };
    for (const Tri3& t : tris)
        for (int i = 0; i < 3; ++i) {
            VertexId v = t[i];
            Edge3 ea = edge3(v, t[(i + 1) % 3]), eb = edge3(v, t[(i + 2) % 3]);
            ++narcs[v];
            Edge3 ra = find(v, ea), rb = find(v, eb);
            if (ra != rb) parent[v][ra] = rb;
        }
    bool has_boundary = false;
    std::set<VertexId> verts;
    for (const auto& [e, ts] : at) {
        if (ts.size() == 1) has_boundary = true;
        verts.insert(e[0]);
        verts.insert(e[1]);
    }
    for (VertexId v : verts) {
        std::set<Edge3> roots;
        int nodes = 0;
        for (const auto& [e, ts] : at)
            if (e[0] == v || e[1] == v) {
                roots.insert(find(v, e));
                ++nodes;
            }
        if (roots.size() != 1) return TriSurface::Other;
        int cycles = narcs[v] - (nodes - 1);
        if (cycles > 1) return TriSurface::Other;
    }
    int chi = static_cast<int>(verts.size()) - static_cast<int>(at.size()) +
              static_cast<int>(tris.size());
    if (chi == 1 && has_boundary) return TriSurface::Disc;
    if (chi == 2 && !has_boundary) return TriSurface::Sphere;
    return TriSurface::Other;
}

/// Boundary cycle of a triangulated disc as a cyclically ordered vertex list.
inline std::vector<VertexId> disc_boundary_cycle(const std::vector<Tri3>& tris) {
    std::map<Edge3, int> cnt;
    for (const Tri3& t : tris)
        for (int a = 0; a < 3; ++a)
            for (int b = a + 1; b < 3; ++b) ++cnt[edge3(t[a], t[b])];
    std::map<VertexId, std::vector<VertexId>> next;
    for (const auto& [e, c] : cnt)
        if (c == 1) {
            next[e[0]].push_back(e[1]);
            next[e[1]].push_back(e[0]);
        }
    std::vector<VertexId> cyc = {next.begin()->first};
    VertexId prev = -1;
    while (true) {
        const auto& ns = next.at(cyc.back());
        if (ns.size() != 2) throw Error(Errc::SideNotCylinder, "disc boundary is not a cycle");
        VertexId nxt = (ns[0] == prev) ? ns[1] : ns[0];
        if (nxt == cyc.front()) break;
        prev = cyc.back();
        cyc.push_back(nxt);
    }
    if (cyc.size() != next.size())
        throw Error(Errc::SideNotCylinder, "disc boundary is not a single cycle");
    return cyc;
}

}  // namespace detail

/// Classifies the boundary triangles into the red part, the blue part and the
/// two-coloured side; the side is ordered by walking the red boundary circle,
/// emitting per red boundary edge its forward triangle followed by the fan of
/// backward triangles (disc mode).  Sphere mode requires an empty side and
/// spherical monochrome parts.
inline BoundarySplit boundary_split(const Complex3& m, SliceKind kind) {
    BoundarySplit out;
    std::map<Edge3, std::vector<Tri3>> side_at;  // boundary triangles per edge
    std::vector<Tri3> side_set;
    for (const Tri3& f : m.boundary_triangles()) {
        int reds = m.red_count(f);
        if (reds == 3) {
            out.d_red.push_back(f);
        } else if (reds == 0) {
            out.d_blue.push_back(f);
        } else {
            side_set.push_back(f);
            for (int a = 0; a < 3; ++a)
                for (int b = a + 1; b < 3; ++b) side_at[edge3(f[a], f[b])].push_back(f);
        }
    }
    if (out.d_red.empty() && out.d_blue.empty() && side_set.empty())
        throw Error(Errc::EmptyBoundary, "complex has no boundary");

    if (kind == SliceKind::Sphere) {
        if (!side_set.empty())
            throw Error(Errc::SideNotCylinder, "sphere-slice boundary has two-coloured triangles");
        if (detail::triangle_surface(out.d_red) != detail::TriSurface::Sphere ||
            detail::triangle_surface(out.d_blue) != detail::TriSurface::Sphere)
            throw Error(Errc::MonochromePartNotSphere, "boundary parts are not two spheres");
        return out;
    }

    if (detail::triangle_surface(out.d_red) != detail::TriSurface::Disc ||
        detail::triangle_surface(out.d_blue) != detail::TriSurface::Disc)
        throw Error(Errc::MonochromePartNotDisc, "boundary parts are not two discs");

    // Lemma-1 walk.  Each red boundary edge lies in one red triangle and one
    // forward side triangle; between consecutive red edges the walk fans
    // through backward triangles around the shared red vertex.
    std::vector<VertexId> cyc = detail::disc_boundary_cycle(out.d_red);
    std::set<Tri3> remaining(side_set.begin(), side_set.end());
    auto other_at = [&](const Edge3& e, const Tri3& cur) -> const Tri3& {
        auto it = side_at.find(e);
        if (it == side_at.end() || it->second.size() != 2)
            throw Error(Errc::SideNotCylinder, "side edge not shared by two side triangles");
        return (it->second[0] == cur) ? it->second[1] : it->second[0];
    };
    std::size_t n = cyc.size();
    for (std::size_t i = 0; i < n; ++i) {
        VertexId v1 = cyc[i], v2 = cyc[(i + 1) % n];
        auto it = side_at.find(edge3(v1, v2));
        if (it == side_at.end() || it->second.size() != 1)
            throw Error(Errc::SideNotCylinder, "red boundary edge lacks its forward triangle");
        Tri3 fwd = it->second[0];
        if (m.red_count(fwd) != 2)
            throw Error(Errc::SideNotCylinder, "triangle on a red boundary edge is not forward");
        if (!remaining.erase(fwd))
            throw Error(Errc::SideNotCylinder, "forward triangle visited twice");
        out.side.push_back(fwd);
        VertexId b = -1;
        for (VertexId x : fwd)
            if (m.colour(x) == Colour::Blue) b = x;
        // fan of backward triangles around v2 until the next forward triangle
        Tri3 cur = fwd;
        Edge3 e = edge3(v2, b);
        while (true) {
            const Tri3& nxt = other_at(e, cur);
            if (m.red_count(nxt) == 2) break;  // next red edge's forward triangle
            if (!remaining.erase(nxt))
                throw Error(Errc::SideNotCylinder, "backward triangle visited twice");
            out.side.push_back(nxt);
            VertexId b2 = -1;
            for (VertexId x : nxt)
                if (x != v2 && m.colour(x) == Colour::Blue && edge3(v2, x) != e) b2 = x;
            if (b2 < 0) throw Error(Errc::SideNotCylinder, "malformed backward triangle");
            cur = nxt;
            e = edge3(v2, b2);
        }
    }
    if (!remaining.empty())
        throw Error(Errc::SideNotCylinder, "side triangles left over after the walk");
    return out;
}

/// Colour-preserving simplicial isomorphism test by backtracking over vertex
/// assignments with colour and incidence-degree invariants.
inline bool isomorphic3(const Complex3& m1, const Complex3& m2) {
    if (m1.num_vertices() != m2.num_vertices() || m1.num_tetras() != m2.num_tetras())
        return false;
    auto signature = [](const Complex3& m) {
        std::map<VertexId, std::pair<Colour, int>> sig;
        for (const auto& [v, c] : m.vertex_colours()) sig[v] = {c, 0};
        for (const Tetra& t : m.tetras())
            for (VertexId x : t.v) sig[x].second++;
        return sig;
    };
    auto sig1 = signature(m1), sig2 = signature(m2);
    {
        std::multiset<std::pair<int, int>> h1, h2;
        for (const auto& [v, s] : sig1) h1.insert({static_cast<int>(s.first), s.second});
        for (const auto& [v, s] : sig2) h2.insert({static_cast<int>(s.first), s.second});
        if (h1 != h2) return false;
    }
    std::vector<VertexId> order;
    for (const auto& [v, c] : m1.vertex_colours()) order.push_back(v);
    std::set<Tetra> tset2(m2.tetras().begin(), m2.tetras().end());
    std::map<VertexId, VertexId> map;
    std::set<VertexId> used;
    // tetras of m1 grouped by their last vertex in assignment order
    std::map<VertexId, int> pos;
    for (std::size_t i = 0; i < order.size(); ++i) pos[order[i]] = static_cast<int>(i);
    std::map<VertexId, std::vector<const Tetra*>> closing;
    for (const Tetra& t : m1.tetras()) {
        VertexId last = *std::max_element(t.v.begin(), t.v.end(), [&](VertexId a, VertexId b) {
            return pos.at(a) < pos.at(b);
        });
        closing[last].push_back(&t);
    }
    std::function<bool(std::size_t)> extend = [&](std::size_t i) -> bool {
        if (i == order.size()) return true;
        VertexId v = order[i];
        for (const auto& [w, s] : sig2) {
            if (s != sig1.at(v) || used.count(w)) continue;
            map[v] = w;
            used.insert(w);
            bool ok = true;
            auto it = closing.find(v);
            if (it != closing.end())
                for (const Tetra* t : it->second) {
                    if (!tset2.count(Tetra(map.at(t->v[0]), map.at(t->v[1]), map.at(t->v[2]),
                                           map.at(t->v[3])))) {
                        ok = false;
                        break;
                    }
                }
            if (ok && extend(i + 1)) return true;
            map.erase(v);
            used.erase(w);
        }
        return false;
    };
    return extend(0);
}

/// Glues consecutive slices along their monochrome interfaces; matchings[i]
/// maps the blue-part vertices of slices[i] onto the red-part vertices of
/// slices[i+1].  Vertices of the result are recoloured by layer parity, so
/// tetrahedra stay two-coloured; for a single slice the input is returned
/// unchanged.
inline Complex3 layered_union(const std::vector<Complex3>& slices, SliceKind kind,
                              const std::vector<std::map<VertexId, VertexId>>& matchings) {
    if (slices.empty()) throw Error(Errc::BadCell, "no slices");
    if (matchings.size() + 1 != slices.size())
        throw Error(Errc::InterfaceMismatch, "need one matching per consecutive pair");
    if (slices.size() == 1) return slices[0];
    // global ids: layer-0 red vertices and the blue vertices of each slice get
    // fresh ids; interfaces reuse the previous slice's blue ids.
    std::vector<CVertex> verts;
    std::vector<Tetra> tetras;
    VertexId next_id = 0;
    std::map<VertexId, VertexId> cur;  // slice-local id -> global id
    for (std::size_t si = 0; si < slices.size(); ++si) {
        const Complex3& k = slices[si];
        BoundarySplit bs = boundary_split(k, kind);
        std::map<VertexId, VertexId> local;
        if (si == 0) {
            for (const auto& [v, c] : k.vertex_colours())
                if (c == Colour::Red) {
                    local[v] = next_id;
                    verts.push_back({next_id++, Colour::Red});
                }
        } else {
            // red part comes from the previous slice's blue part via the matching
            const auto& match = matchings[si - 1];
            std::set<VertexId> red_part;
            for (const auto& [v, c] : k.vertex_colours())
                if (c == Colour::Red) red_part.insert(v);
            std::set<Tri3> iface;
            for (const auto& [u, v] : match) {
                if (!cur.count(u) || !red_part.count(v))
                    throw Error(Errc::InterfaceMismatch, "matching outside the interface parts");
                local[v] = cur.at(u);
            }
            if (local.size() != red_part.size())
                throw Error(Errc::InterfaceMismatch, "matching does not cover the red part");
            // the matched triangle sets must coincide
            BoundarySplit prev = boundary_split(slices[si - 1], kind);
            std::set<Tri3> blue_mapped;
            for (const Tri3& f : prev.d_blue)
                blue_mapped.insert(tri3(cur.at(f[0]), cur.at(f[1]), cur.at(f[2])));
            std::set<Tri3> red_mapped;
            for (const Tri3& f : bs.d_red)
                red_mapped.insert(tri3(local.at(f[0]), local.at(f[1]), local.at(f[2])));
            if (blue_mapped != red_mapped)
                throw Error(Errc::InterfaceMismatch, "interface triangle sets differ");
        }
        Colour layer_colour = (si + 1) % 2 == 0 ? Colour::Red : Colour::Blue;
        for (const auto& [v, c] : k.vertex_colours())
            if (c == Colour::Blue) {
                local[v] = next_id;
                verts.push_back({next_id++, layer_colour});
            }
        for (const Tetra& t : k.tetras())
            tetras.emplace_back(local.at(t.v[0]), local.at(t.v[1]), local.at(t.v[2]),
                                local.at(t.v[3]));
        cur = std::move(local);
    }
    return Complex3::build(std::move(verts), std::move(tetras));
}

}  // namespace causal

#endif  // CAUSAL_COMPLEX3_HPP
