#ifndef CAUSAL_TESTS_FIXTURES_HPP
#define CAUSAL_TESTS_FIXTURES_HPP

#include <random>
#include <vector>

#include "causal/surface_complex.hpp"

namespace fixtures {

// Vertex names used throughout: a=0 b=1 c=2 d=3 e=4 f=5.
inline constexpr causal::VertexId a = 0, b = 1, c = 2, d = 3, e = 4, f = 5;

/// Quadrangle <abcd> with a red triangle on its red edge (a,b) and a blue
/// triangle on its blue edge (b,c).  Disc; 6 vertices, 8 edges, 3 cells.
inline causal::SurfaceComplex chain3() {
    return causal::SurfaceComplex::build({
        causal::quadrangle(a, b, c, d),
        causal::red_triangle(a, b, e),
        causal::blue_triangle(b, c, f),
    });
}

inline causal::SurfaceComplex single_quad() {
    return causal::SurfaceComplex::build({causal::quadrangle(a, b, c, d)});
}

/// Relabel all vertices of a complex by a random permutation.
inline causal::SurfaceComplex relabelled(const causal::SurfaceComplex& s, std::mt19937& rng) {
    std::vector<causal::VertexId> ids = s.vertices();
    std::vector<causal::VertexId> image = ids;
    std::shuffle(image.begin(), image.end(), rng);
    std::map<causal::VertexId, causal::VertexId> perm;
    for (std::size_t i = 0; i < ids.size(); ++i) perm[ids[i]] = image[i];
    std::vector<causal::Cell> cells;
    for (const causal::Cell& cell : s.cells()) {
        std::vector<causal::VertexId> vs;
        for (causal::VertexId v : cell.vertices) vs.push_back(perm.at(v));
        cells.emplace_back(cell.kind, vs);
    }
    return causal::SurfaceComplex::build(std::move(cells));
}

}  // namespace fixtures

#endif
