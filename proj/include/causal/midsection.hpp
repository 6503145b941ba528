#ifndef CAUSAL_MIDSECTION_HPP
#define CAUSAL_MIDSECTION_HPP

// The midsection of a coloured slice: the level set at height 1/2 of the
// barycentric height function (share of red vertices), realised purely
// combinatorially.  Each two-coloured edge meets the level set in one point,
// each two-coloured triangle in one segment, and each tetrahedron in one
// 2-cell, whose shape depends on the tetra's colour split.

#include <algorithm>
#include <map>
#include <set>
#include <utility>
#include <vector>

#include "causal/complex3.hpp"
#include "causal/surface_complex.hpp"

namespace causal {

struct MidsectionLabels {
    /// two-coloured K-edge -> midsection vertex
    std::map<Edge3, VertexId> vertex_of_edge;
    /// tetra index in K -> cell index in the midsection
    std::vector<std::size_t> cell_of_tetra;
    /// two-coloured K-triangle -> induced midsection edge (colour of the
    /// triangle's unique monochromatic edge)
    std::map<Tri3, EdgeKey> edge_of_triangle;
};

namespace detail {

/// Structural slice checks shared by the midsection map and the slice
/// validator: every monochromatic simplex (vertex, edge, triangle) lies on
/// the boundary, and the boundary splits as the inferred kind demands.
/// Returns the inferred kind (sphere iff the boundary is fully monochrome).
inline SliceKind require_slice_structure(const Complex3& k) {
    std::vector<Tri3> bnd = k.boundary_triangles();
    std::set<VertexId> bverts;
    std::set<Edge3> bedges;
    bool has_side = false;
    for (const Tri3& f : bnd) {
        for (VertexId v : f) bverts.insert(v);
        for (int i = 0; i < 3; ++i)
            for (int j = i + 1; j < 3; ++j) bedges.insert(edge3(f[i], f[j]));
        int reds = k.red_count(f);
        if (reds == 1 || reds == 2) has_side = true;
    }
    for (const auto& [v, c] : k.vertex_colours())
        if (!bverts.count(v))
            throw Error(Errc::InteriorMonochrome, "vertex not on the boundary");
    for (const Edge3& e : k.edges())
        if (!k.two_coloured(e) && !bedges.count(e))
            throw Error(Errc::InteriorMonochrome, "monochromatic edge not on the boundary");
    for (const auto& [f, at] : k.triangles())
        if ((k.red_count(f) == 0 || k.red_count(f) == 3) && at.size() != 1)
            throw Error(Errc::InteriorMonochrome, "monochromatic triangle not on the boundary");
    SliceKind kind = has_side ? SliceKind::Disc : SliceKind::Sphere;
    // the monochromatic simplices must *form* the monochrome boundary parts:
    // every monochromatic vertex and edge lies in a monochromatic triangle
    std::set<VertexId> mono_verts;
    std::set<Edge3> mono_edges;
    for (const auto& [f, at] : k.triangles()) {
        int reds = k.red_count(f);
        if (reds != 0 && reds != 3) continue;
        for (int i = 0; i < 3; ++i) {
            mono_verts.insert(f[static_cast<std::size_t>(i)]);
            for (int j = i + 1; j < 3; ++j)
                mono_edges.insert(edge3(f[static_cast<std::size_t>(i)],
                                        f[static_cast<std::size_t>(j)]));
        }
    }
    Errc stray = kind == SliceKind::Disc ? Errc::MonochromePartNotDisc
                                         : Errc::MonochromePartNotSphere;
    for (const Edge3& e : k.edges())
        if (!k.two_coloured(e) && !mono_edges.count(e))
            throw Error(stray, "monochromatic edge outside the monochrome boundary part");
    for (const auto& [v, c] : k.vertex_colours())
        if (!mono_verts.count(v))
            throw Error(stray, "vertex outside the monochrome boundary parts");
    boundary_split(k, kind);  // throws if malformed
    return kind;
}

}  // namespace detail

/// Maps a slice to its coloured midsection: one vertex per two-coloured edge,
/// one 2-cell per tetrahedron ((3,1) -> red triangle, (1,3) -> blue triangle,
/// (2,2) -> quadrangle), edges induced by two-coloured triangles.
inline std::pair<SurfaceComplex, MidsectionLabels> midsection(const Complex3& k) {
    detail::require_slice_structure(k);
    MidsectionLabels labels;
    VertexId next = 0;
    for (const Edge3& e : k.two_coloured_edges()) labels.vertex_of_edge[e] = next++;
    auto mid = [&](VertexId a, VertexId b) { return labels.vertex_of_edge.at(edge3(a, b)); };

    std::vector<Cell> cells;
    for (const Tetra& t : k.tetras()) {
        std::vector<VertexId> red, blue;
        for (VertexId x : t.v) (k.colour(x) == Colour::Red ? red : blue).push_back(x);
        if (red.size() == 3) {
            cells.push_back(red_triangle(mid(red[0], blue[0]), mid(red[1], blue[0]),
                                         mid(red[2], blue[0])));
        } else if (red.size() == 1) {
            cells.push_back(blue_triangle(mid(blue[0], red[0]), mid(blue[1], red[0]),
                                          mid(blue[2], red[0])));
        } else {
            // quad with red edges on the triangles (r1,r2,b1) and (r1,r2,b2)
            cells.push_back(quadrangle(mid(red[0], blue[0]), mid(red[1], blue[0]),
                                       mid(red[1], blue[1]), mid(red[0], blue[1])));
        }
    }
    std::vector<Cell> sorted = cells;
    SurfaceComplex s = SurfaceComplex::build(std::move(sorted));
    for (const Cell& c : cells) {
        auto it = std::lower_bound(s.cells().begin(), s.cells().end(), c);
        labels.cell_of_tetra.push_back(static_cast<std::size_t>(it - s.cells().begin()));
    }
    for (const auto& [f, at] : k.triangles()) {
        int reds = k.red_count(f);
        if (reds == 0 || reds == 3) continue;
        std::vector<VertexId> maj, min;
        Colour major = (reds == 2) ? Colour::Red : Colour::Blue;
        for (VertexId x : f) (k.colour(x) == major ? maj : min).push_back(x);
        labels.edge_of_triangle[f] = edge_key(mid(maj[0], min[0]), mid(maj[1], min[0]));
    }
    return {std::move(s), std::move(labels)};
}

}  // namespace causal

#endif  // CAUSAL_MIDSECTION_HPP
