#ifndef CAUSAL_RECONSTRUCT_HPP
#define CAUSAL_RECONSTRUCT_HPP

// Inverse of the midsection map: a membership-passing coloured 2-complex
// determines a slice by reading monochromatic components as vertices of the
// opposite colour — each 2-cell spans a tetrahedron between the components
// of its corners.

#include <algorithm>
#include <map>
#include <set>
#include <utility>
#include <vector>

#include "causal/complex3.hpp"
#include "causal/conditions.hpp"
#include "causal/midsection.hpp"
#include "causal/surface_complex.hpp"

namespace causal {

inline SliceKind slice_kind_of(MidsectionKind kind) {
    return kind == MidsectionKind::Disc ? SliceKind::Disc : SliceKind::Sphere;
}

/// Builds the unique slice whose midsection is S.  One red 3D vertex per
/// blue component of S, one blue 3D vertex per red component; a red triangle
/// spans its three blue components plus the common red component, a blue
/// triangle dually, and a quadrangle spans its two blue and two red
/// components.
inline Complex3 reconstruct(const SurfaceComplex& s, MidsectionKind kind) {
    ConditionReport member = membership(s, kind);
    if (!member.verdict)
        throw Error(Errc::MembershipFailed, member.to_json().dump());
    VertexPartition red_comp = s.monochrome_vertex_components(Colour::Red);
    VertexPartition blue_comp = s.monochrome_vertex_components(Colour::Blue);
    // blue components become red 3D vertices and vice versa
    int nred = static_cast<int>(blue_comp.blocks.size());
    auto r = [&](VertexId v) { return blue_comp.block_of.at(v); };
    auto b = [&](VertexId v) { return nred + red_comp.block_of.at(v); };
    std::vector<CVertex> verts;
    for (int i = 0; i < nred; ++i) verts.push_back({i, Colour::Red});
    for (int i = 0; i < static_cast<int>(red_comp.blocks.size()); ++i)
        verts.push_back({nred + i, Colour::Blue});
    std::vector<Tetra> tetras;
    for (const Cell& c : s.cells()) {
        const auto& v = c.vertices;
        switch (c.kind) {
            case CellKind::RedTriangle:
                tetras.emplace_back(r(v[0]), r(v[1]), r(v[2]), b(v[0]));
                break;
            case CellKind::BlueTriangle:
                tetras.emplace_back(b(v[0]), b(v[1]), b(v[2]), r(v[0]));
                break;
            case CellKind::Quadrangle:
                // red edges (v0,v1),(v2,v3): v0,v1 share their red component
                // with v3,v2 respectively; blue edges pair v1~v2 and v3~v0
                tetras.emplace_back(r(v[0]), r(v[1]), b(v[0]), b(v[2]));
                break;
        }
    }
    return Complex3::build(std::move(verts), std::move(tetras));
}

/// Outcome of cutting a sphere midsection open into a disc midsection: a
/// maximal red cluster, a blue chain of quadrangles with its two end blue
/// triangles, and what remains.  Indices refer to cells of the input.
struct CutResult {
    std::vector<std::size_t> cluster;  // removed maximal red cluster
    std::vector<std::size_t> strip;    // removed blue chain of quadrangles
    std::size_t delta1 = 0;            // removed end blue triangles
    std::size_t delta2 = 0;
    SurfaceComplex disc;               // the remaining complex

    nlohmann::json to_json() const {
        return {{"cluster", cluster},
                {"strip", strip},
                {"delta1", delta1},
                {"delta2", delta2},
                {"disc_cells", disc.num_cells()}};
    }
};

namespace detail {

/// Index of the cell whose sorted canonical vertex labels are smallest among
/// cells satisfying `pick` — a deterministic, relabelling-invariant choice.
template <typename Pred>
std::size_t canonical_min_cell(const SurfaceComplex& s, const std::map<VertexId, int>& labels,
                               Pred&& pick) {
    std::size_t best = s.num_cells();
    std::vector<int> best_key;
    for (std::size_t ci = 0; ci < s.num_cells(); ++ci) {
        if (!pick(ci)) continue;
        std::vector<int> key;
        for (VertexId v : s.cells()[ci].vertices) key.push_back(labels.at(v));
        std::sort(key.begin(), key.end());
        if (best == s.num_cells() || key < best_key) {
            best = ci;
            best_key = std::move(key);
        }
    }
    return best;
}

inline std::size_t index_of_cell(const SurfaceComplex& s, const Cell& c) {
    const auto& cs = s.cells();
    auto it = std::lower_bound(cs.begin(), cs.end(), c);
    if (it == cs.end() || !(*it == c)) throw Error(Errc::BadCell, "cell not in complex");
    return static_cast<std::size_t>(it - cs.begin());
}

}  // namespace detail

/// Cuts a sphere midsection into a disc midsection: removes the maximal red
/// cluster through the canonically smallest red triangle, then the maximal
/// blue chain of quadrangles through the canonically smallest quadrangle on
/// the opened boundary together with its two end blue triangles.  The result
/// is checked against disc membership.
inline CutResult cut_to_disc(const SurfaceComplex& s0) {
    ConditionReport member = membership(s0, MidsectionKind::Sphere);
    if (!member.verdict)
        throw Error(Errc::MembershipFailed, member.to_json().dump());
    std::map<VertexId, int> labels = s0.canonical_vertex_labels();

    // maximal red cluster R through the canonically smallest red triangle
    std::size_t seed = detail::canonical_min_cell(s0, labels, [&](std::size_t ci) {
        return s0.cells()[ci].kind == CellKind::RedTriangle;
    });
    std::set<std::size_t> cluster = {seed};
    std::vector<std::size_t> queue = {seed};
    while (!queue.empty()) {
        std::size_t ci = queue.back();
        queue.pop_back();
        const Cell& c = s0.cells()[ci];
        for (std::size_t i = 0; i < c.size(); ++i) {
            const EdgeInfo& e = s0.edge(c.vertices[i], c.vertices[(i + 1) % c.size()]);
            for (std::size_t cj : e.cells)
                if (s0.cells()[cj].kind == CellKind::RedTriangle && cluster.insert(cj).second)
                    queue.push_back(cj);
        }
    }

    // S = S0 minus the cluster's interior
    std::vector<Cell> rest;
    for (std::size_t ci = 0; ci < s0.num_cells(); ++ci)
        if (!cluster.count(ci)) rest.push_back(s0.cells()[ci]);
    SurfaceComplex s = SurfaceComplex::build(std::move(rest));
    if (s.topology() != SurfaceTopology::Disc)
        throw Error(Errc::MembershipFailed, "cut remainder is not a disc");

    // the quadrangle chain: seeded by the canonically smallest quadrangle on
    // the opened (all-red) boundary, maximal through blue edges
    std::map<VertexId, int> rlabels;  // labels restricted to S's vertices
    for (VertexId v : s.vertices()) rlabels[v] = labels.at(v);
    std::size_t q = detail::canonical_min_cell(s, rlabels, [&](std::size_t ci) {
        const Cell& c = s.cells()[ci];
        if (c.kind != CellKind::Quadrangle) return false;
        for (std::size_t i = 0; i < 4; ++i) {
            const EdgeInfo& e = s.edge(c.vertices[i], c.vertices[(i + 1) % 4]);
            if (e.boundary() && e.colour == Colour::Red) return true;
        }
        return false;
    });
    if (q == s.num_cells())
        throw Error(Errc::MembershipFailed, "no quadrangle on the opened boundary");
    const QuadChain* chain = nullptr;
    std::vector<QuadChain> chains = s.quad_chains(Colour::Blue);
    for (const QuadChain& ch : chains)
        if (std::find(ch.quads.begin(), ch.quads.end(), q) != ch.quads.end()) chain = &ch;
    if (!chain || chain->closed)
        throw Error(Errc::MembershipFailed, "quadrangle chain is closed or missing");

    // the end blue edges and their blue triangles
    auto blue_triangle_at = [&](const EdgeKey& e) {
        const EdgeInfo& info = s.edge(e.first, e.second);
        for (std::size_t ci : info.cells)
            if (s.cells()[ci].kind == CellKind::BlueTriangle) return ci;
        throw Error(Errc::MembershipFailed, "chain end edge has no blue triangle");
    };
    std::size_t d1 = blue_triangle_at(chain->edges.front());
    std::size_t d2 = blue_triangle_at(chain->edges.back());
    if (d1 == d2) throw Error(Errc::MembershipFailed, "end blue triangles coincide");

    std::set<std::size_t> removed(chain->quads.begin(), chain->quads.end());
    removed.insert(d1);
    removed.insert(d2);
    std::vector<Cell> kept;
    for (std::size_t ci = 0; ci < s.num_cells(); ++ci)
        if (!removed.count(ci)) kept.push_back(s.cells()[ci]);

    CutResult out{{}, {}, 0, 0, SurfaceComplex::build(std::move(kept))};
    ConditionReport disc_member = membership(out.disc, MidsectionKind::Disc);
    if (!disc_member.verdict)
        throw Error(Errc::MembershipFailed, disc_member.to_json().dump());
    for (std::size_t ci : cluster) out.cluster.push_back(ci);
    for (std::size_t qi : chain->quads)
        out.strip.push_back(detail::index_of_cell(s0, s.cells()[qi]));
    out.delta1 = detail::index_of_cell(s0, s.cells()[d1]);
    out.delta2 = detail::index_of_cell(s0, s.cells()[d2]);
    return out;
}

}  // namespace causal

#endif  // CAUSAL_RECONSTRUCT_HPP
