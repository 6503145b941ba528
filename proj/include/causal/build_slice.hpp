#ifndef CAUSAL_BUILD_SLICE_HPP
#define CAUSAL_BUILD_SLICE_HPP

// Constructive existence of slices: a disc-slice with prescribed boundary
// discs is grown from the prism by replaying the discs' local constructions
// (a (3,1) gluing per cell gluing, a fan of (2,2) tetrahedra per edge
// identification), and a sphere-slice is a disc-slice of the punctured
// spheres closed up with a small plug over its cylindrical side.

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <vector>

#include "causal/complex3.hpp"
#include "causal/local_moves.hpp"
#include "causal/midsection.hpp"

namespace causal {

/// An uncoloured triangulation given by its triangle list.
using Triangulation = std::vector<Tri3>;

namespace detail {

inline SurfaceComplex as_red_complex(const Triangulation& tris) {
    std::vector<Cell> cells;
    for (const Tri3& t : tris) cells.push_back(red_triangle(t[0], t[1], t[2]));
    return SurfaceComplex::build(std::move(cells));
}

/// Mutable slice under construction.
struct SliceBuilder {
    std::vector<CVertex> verts;
    std::vector<Tetra> tetras;
    VertexId next = 0;

    VertexId add_vertex(Colour c) {
        verts.push_back({next, c});
        return next++;
    }

    Colour colour(VertexId v) const {
        for (const CVertex& cv : verts)
            if (cv.id == v) return cv.colour;
        throw Error(Errc::BadCell, "unknown builder vertex");
    }

    std::map<Tri3, int> tri_count() const {
        std::map<Tri3, int> cnt;
        for (const Tetra& t : tetras)
            for (const Tri3& f : t.faces()) ++cnt[f];
        return cnt;
    }

    /// The unique boundary triangle over edge (a,b) whose third vertex has
    /// colour `apex`.
    VertexId apex_over(VertexId a, VertexId b, Colour apex) const {
        std::map<Tri3, int> cnt = tri_count();
        std::optional<VertexId> found;
        for (const auto& [f, c] : cnt) {
            if (c != 1) continue;
            int hit = 0;
            VertexId third = -1;
            for (VertexId v : f) {
                if (v == a || v == b)
                    ++hit;
                else
                    third = v;
            }
            if (hit == 2 && colour(third) == apex) {
                if (found) throw Error(Errc::BadCell, "ambiguous side triangle");
                found = third;
            }
        }
        if (!found) throw Error(Errc::BadCell, "no side triangle over the edge");
        return *found;
    }

    /// Blue (resp. red) fan around u on the boundary from apex `from` to apex
    /// `to`: the other-coloured vertices of the backward triangles met while
    /// walking boundary triangles around u.
    std::vector<VertexId> fan_between(VertexId u, VertexId from, VertexId to) const {
        std::map<Tri3, int> cnt = tri_count();
        std::vector<VertexId> fan = {from};
        std::set<VertexId> seen = {from};
        while (fan.back() != to) {
            VertexId b = fan.back();
            // boundary triangles containing edge (u, b), of backward shape
            std::optional<VertexId> nxt;
            for (const auto& [f, c] : cnt) {
                if (c != 1) continue;
                bool has_u = false, has_b = false;
                VertexId third = -1;
                for (VertexId v : f) {
                    if (v == u)
                        has_u = true;
                    else if (v == b)
                        has_b = true;
                    else
                        third = v;
                }
                if (!has_u || !has_b) continue;
                if (colour(third) == colour(u)) continue;  // forward triangle
                if (seen.count(third) && third != to) continue;
                if (third == to || !seen.count(third)) {
                    if (nxt && *nxt != third)
                        throw Error(Errc::BadCell, "ambiguous fan step");
                    nxt = third;
                }
            }
            if (!nxt) throw Error(Errc::BadCell, "fan walk stuck");
            fan.push_back(*nxt);
            seen.insert(*nxt);
        }
        return fan;
    }

    void merge(VertexId gone, VertexId target) {
        std::vector<Tetra> out;
        for (const Tetra& t : tetras) {
            std::array<VertexId, 4> v = t.v;
            for (VertexId& x : v)
                if (x == gone) x = target;
            Tetra nt(v[0], v[1], v[2], v[3]);
            if (std::find(out.begin(), out.end(), nt) == out.end()) out.push_back(nt);
        }
        tetras = std::move(out);
        std::erase_if(verts, [&](const CVertex& cv) { return cv.id == gone; });
    }

    /// Replays one side's move sequence; `side` is the colour the disc's
    /// vertices take in the slice, `m` maps disc vertices to slice vertices.
    void replay_side(const MoveSequence& seq, Colour side, std::map<VertexId, VertexId>& m) {
        Colour other = complement(side);
        for (const Move& mv : seq.moves) {
            if (const auto* g = std::get_if<GlueCell>(&mv)) {
                VertexId a = g->edge.first, b = g->edge.second;
                VertexId c = -1;
                for (VertexId v : g->cell.vertices)
                    if (v != a && v != b) c = v;
                VertexId A = m.at(a), B = m.at(b);
                VertexId apex = apex_over(A, B, other);
                VertexId C = add_vertex(side);
                m[c] = C;
                tetras.emplace_back(A, B, C, apex);
            } else {
                const auto& id = std::get<IdentifyEdges>(mv);
                VertexId u = shared_vertex(id.keep, id.drop);
                VertexId target = other_vertex(id.keep, u);
                VertexId gone = other_vertex(id.drop, u);
                VertexId U = m.at(u), T = m.at(target), G = m.at(gone);
                VertexId b1 = apex_over(U, T, other);
                VertexId b2 = apex_over(U, G, other);
                std::vector<VertexId> fan = fan_between(U, b1, b2);
                merge(G, T);
                m.erase(gone);
                for (std::size_t i = 0; i + 1 < fan.size(); ++i) {
                    Tetra t(T, U, fan[i], fan[i + 1]);
                    // the wedge tetrahedron may coincide with an existing one
                    // (the folded side wraps onto itself); this replay cannot
                    // continue and the caller retries with another sequence
                    if (std::find(tetras.begin(), tetras.end(), t) != tetras.end())
                        throw Error(Errc::BadCell, "fold wedge already occupied");
                    tetras.push_back(t);
                }
            }
        }
    }

    Complex3 build() const { return Complex3::build(verts, tetras); }
};

/// One replay attempt: seeds a prism over the two initial triangles with the
/// given assignments of initial vertices to prism corners, then replays both
/// sides.  Throws if the replay runs into a self-gluing fold.
inline Complex3 replay_slice(const MoveSequence& seq1, const MoveSequence& seq2,
                             const std::array<int, 3>& p1, const std::array<int, 3>& p2) {
    SliceBuilder sb;
    std::map<VertexId, VertexId> m1, m2;
    VertexId r[3], b[3];
    for (int i = 0; i < 3; ++i) r[i] = sb.add_vertex(Colour::Red);
    for (int i = 0; i < 3; ++i) b[i] = sb.add_vertex(Colour::Blue);
    for (int i = 0; i < 3; ++i) m1[seq1.initial.vertices[static_cast<std::size_t>(p1[i])]] = r[i];
    for (int i = 0; i < 3; ++i) m2[seq2.initial.vertices[static_cast<std::size_t>(p2[i])]] = b[i];
    sb.tetras.emplace_back(r[0], r[1], r[2], b[0]);
    sb.tetras.emplace_back(b[0], b[1], b[2], r[1]);
    sb.tetras.emplace_back(r[0], r[1], b[0], b[2]);
    sb.replay_side(seq1, Colour::Red, m1);
    sb.replay_side(seq2, Colour::Blue, m2);
    return sb.build();
}

}  // namespace detail

/// A disc-slice whose red boundary part is isomorphic to d1 and blue part to
/// d2 (Proposition-1 style construction from the prism).  A replay can fold
/// the side onto itself when a wedge tetrahedron coincides with an existing
/// one; the corner assignment and the construction sequence are then varied
/// until a replay goes through.
inline Complex3 build_disc_slice(const Triangulation& d1, const Triangulation& d2) {
    SurfaceComplex s1 = detail::as_red_complex(d1);
    SurfaceComplex s2 = detail::as_red_complex(d2);
    if (s1.topology() != SurfaceTopology::Disc || s2.topology() != SurfaceTopology::Disc)
        throw Error(Errc::NotADisc, "both inputs must be triangulated discs");
    static constexpr std::array<std::array<int, 3>, 6> kPerms = {
        {{0, 1, 2}, {1, 2, 0}, {2, 0, 1}, {0, 2, 1}, {2, 1, 0}, {1, 0, 2}}};
    std::optional<Error> last;
    for (unsigned seed = 0; seed < 8; ++seed) {
        MoveSequence seq1 = local_construction(s1, seed);
        MoveSequence seq2 = local_construction(s2, seed);
        for (const auto& p1 : kPerms)
            for (const auto& p2 : kPerms) {
                try {
                    Complex3 k = detail::replay_slice(seq1, seq2, p1, p2);
                    boundary_split(k, SliceKind::Disc);  // side must be a cylinder
                    return k;
                } catch (const Error& e) {
                    last = e;
                }
            }
    }
    throw *last;
}

namespace detail {

/// Canonically smallest triangle of an (all-red) complex under its canonical
/// vertex labels — a deterministic, relabelling-invariant choice.
inline std::size_t canonical_cell_choice(const SurfaceComplex& s) {
    std::map<VertexId, int> lab = s.canonical_vertex_labels();
    std::size_t best = 0;
    std::vector<int> best_key;
    for (std::size_t ci = 0; ci < s.num_cells(); ++ci) {
        std::vector<int> key;
        for (VertexId v : s.cells()[ci].vertices) key.push_back(lab.at(v));
        std::sort(key.begin(), key.end());
        if (ci == 0 || key < best_key) {
            best = ci;
            best_key = key;
        }
    }
    return best;
}

}  // namespace detail

/// A sphere-slice whose red boundary is isomorphic to sphere1 and blue
/// boundary to sphere2 (Proposition-2 style construction: puncture both
/// spheres, build the disc-slice, drop redundant (2,2) tetrahedra along the
/// side, and close the side with a plug found over the six rim vertices).
inline Complex3 build_sphere_slice(const Triangulation& sphere1, const Triangulation& sphere2) {
    SurfaceComplex s1 = detail::as_red_complex(sphere1);
    SurfaceComplex s2 = detail::as_red_complex(sphere2);
    if (s1.topology() != SurfaceTopology::Sphere || s2.topology() != SurfaceTopology::Sphere)
        throw Error(Errc::NotASphere, "both inputs must be triangulated spheres");
    auto puncture = [](const SurfaceComplex& s) {
        std::size_t drop = detail::canonical_cell_choice(s);
        Triangulation out;
        for (std::size_t ci = 0; ci < s.num_cells(); ++ci)
            if (ci != drop)
                out.push_back(tri3(s.cells()[ci].vertices[0], s.cells()[ci].vertices[1],
                                   s.cells()[ci].vertices[2]));
        return out;
    };
    Complex3 k = build_disc_slice(puncture(s1), puncture(s2));

    // normalise: a (2,2) tetra with two boundary faces spans two neighbouring
    // side triangles and can be removed without changing the boundary discs
    std::vector<CVertex> verts;
    for (const auto& [v, c] : k.vertex_colours()) verts.push_back({v, c});
    std::vector<Tetra> tetras = k.tetras();
    auto normalise = [&]() {
        for (bool changed = true; changed;) {
            changed = false;
            std::map<Tri3, int> cnt;
            for (const Tetra& t : tetras)
                for (const Tri3& f : t.faces()) ++cnt[f];
            for (std::size_t ti = 0; ti < tetras.size(); ++ti) {
                int reds = 0;
                for (VertexId v : tetras[ti].v)
                    if (k.colour(v) == Colour::Red) ++reds;
                if (reds != 2) continue;
                // a (2,2) tetrahedron carrying one forward and one backward
                // side triangle can usually go; removing it just flips an
                // edge of the side
                int forward = 0, backward = 0;
                for (const Tri3& f : tetras[ti].faces()) {
                    if (cnt.at(f) != 1) continue;
                    int fr = 0;
                    for (VertexId v : f)
                        if (k.colour(v) == Colour::Red) ++fr;
                    (fr == 2 ? forward : backward) += 1;
                }
                if (forward != 1 || backward != 1) continue;
                std::vector<Tetra> fewer = tetras;
                fewer.erase(fewer.begin() + static_cast<long>(ti));
                try {  // still a slice with a cylindrical side?
                    boundary_split(Complex3::build(verts, fewer), SliceKind::Disc);
                } catch (const Error&) {
                    continue;
                }
                tetras = std::move(fewer);
                changed = true;
                break;
            }
        }
    };
    normalise();
    Complex3 trimmed = Complex3::build(verts, tetras);
    BoundarySplit bs = boundary_split(trimmed, SliceKind::Disc);

    // rim vertices: the boundary cycles of the two boundary discs
    std::vector<VertexId> reds = detail::disc_boundary_cycle(bs.d_red);
    std::vector<VertexId> blues = detail::disc_boundary_cycle(bs.d_blue);
    if (reds.size() != 3 || blues.size() != 3)
        throw Error(Errc::SideNotCylinder, "punctured boundaries must be triangles");
    // plug search: a small set of tetrahedra over the six rim vertices that
    // closes the side into two boundary spheres
    std::vector<Tetra> candidates;
    std::vector<VertexId> rim(reds);
    rim.insert(rim.end(), blues.begin(), blues.end());
    for (std::size_t a = 0; a < rim.size(); ++a)
        for (std::size_t b = a + 1; b < rim.size(); ++b)
            for (std::size_t c = b + 1; c < rim.size(); ++c)
                for (std::size_t d = c + 1; d < rim.size(); ++d) {
                    Tetra t(rim[a], rim[b], rim[c], rim[d]);
                    if (std::find(tetras.begin(), tetras.end(), t) == tetras.end())
                        candidates.push_back(t);
                }
    std::sort(candidates.begin(), candidates.end());
    std::vector<Tetra> plug;
    std::function<std::optional<Complex3>(std::size_t)> search =
        [&](std::size_t from) -> std::optional<Complex3> {
        if (!plug.empty()) {
            std::vector<Tetra> all = tetras;
            all.insert(all.end(), plug.begin(), plug.end());
            try {
                Complex3 closed = Complex3::build(verts, all);
                if (closed.euler() == 2) {
                    detail::require_slice_structure(closed);
                    boundary_split(closed, SliceKind::Sphere);
                    return closed;
                }
            } catch (const Error&) {
            }
        }
        if (plug.size() == 5) return std::nullopt;
        for (std::size_t i = from; i < candidates.size(); ++i) {
            plug.push_back(candidates[i]);
            if (auto found = search(i + 1)) return found;
            plug.pop_back();
        }
        return std::nullopt;
    };
    if (auto found = search(0)) return *found;
    throw Error(Errc::SideNotCylinder, "no closing plug found");
}

}  // namespace causal

#endif  // CAUSAL_BUILD_SLICE_HPP
