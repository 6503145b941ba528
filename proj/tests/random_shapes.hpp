#ifndef CAUSAL_TESTS_RANDOM_SHAPES_HPP
#define CAUSAL_TESTS_RANDOM_SHAPES_HPP

// Random triangulated discs and spheres for property tests: discs grow by
// gluing rim triangles and filling boundary wedges; spheres evolve from the
// tetrahedron boundary by 1-3 subdivisions and 2-2 edge flips.

#include <map>
#include <random>
#include <set>
#include <vector>

#include "causal/build_slice.hpp"

namespace shapes {

inline std::map<causal::Edge3, int> edge_counts(const causal::Triangulation& tris) {
    std::map<causal::Edge3, int> cnt;
    for (const causal::Tri3& t : tris)
        for (int i = 0; i < 3; ++i)
            for (int j = i + 1; j < 3; ++j) ++cnt[causal::edge3(t[i], t[j])];
    return cnt;
}

inline bool is_disc(const causal::Triangulation& t) {
    return causal::detail::triangle_surface(t) == causal::detail::TriSurface::Disc;
}

inline bool is_sphere(const causal::Triangulation& t) {
    return causal::detail::triangle_surface(t) == causal::detail::TriSurface::Sphere;
}

inline causal::Triangulation random_disc(std::mt19937& rng, std::size_t max_triangles) {
    causal::Triangulation tris = {{0, 1, 2}};
    causal::VertexId next = 3;
    std::uniform_int_distribution<int> coin(0, 3);
    std::size_t target = 1 + rng() % max_triangles;
    int stuck = 0;
    while (tris.size() < target && stuck < 50) {
        auto cnt = edge_counts(tris);
        std::vector<causal::Edge3> boundary;
        for (const auto& [e, c] : cnt)
            if (c == 1) boundary.push_back(e);
        causal::Triangulation attempt = tris;
        if (coin(rng) != 0) {  // glue a rim triangle with a fresh apex
            causal::Edge3 e = boundary[rng() % boundary.size()];
            attempt.push_back(causal::tri3(e[0], e[1], next));
        } else {  // fill a boundary wedge
            causal::Edge3 e1 = boundary[rng() % boundary.size()];
            causal::Edge3 e2 = boundary[rng() % boundary.size()];
            causal::VertexId shared = -1;
            for (causal::VertexId a : e1)
                for (causal::VertexId b : e2)
                    if (a == b) shared = a;
            if (e1 == e2 || shared < 0) {
                ++stuck;
                continue;
            }
            causal::VertexId x = e1[0] == shared ? e1[1] : e1[0];
            causal::VertexId y = e2[0] == shared ? e2[1] : e2[0];
            if (cnt.count(causal::edge3(x, y))) {
                ++stuck;
                continue;
            }
            attempt.push_back(causal::tri3(shared, x, y));
        }
        if (is_disc(attempt)) {
            tris = attempt;
            ++next;
            stuck = 0;
        } else {
            ++stuck;
        }
    }
    return tris;
}

inline causal::Triangulation random_sphere(std::mt19937& rng, std::size_t max_triangles) {
    causal::Triangulation tris = {{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}};
    causal::VertexId next = 4;
    std::size_t target = 4 + 2 * (rng() % ((max_triangles - 4) / 2 + 1));
    while (tris.size() < target) {  // 1-3 subdivision of a random triangle
        std::size_t i = rng() % tris.size();
        causal::Tri3 t = tris[i];
        tris.erase(tris.begin() + static_cast<long>(i));
        tris.push_back(causal::tri3(t[0], t[1], next));
        tris.push_back(causal::tri3(t[0], t[2], next));
        tris.push_back(causal::tri3(t[1], t[2], next));
        ++next;
    }
    for (int flips = static_cast<int>(rng() % 6); flips > 0; --flips) {  // 2-2 edge flips
        auto cnt = edge_counts(tris);
        std::vector<causal::Edge3> edges;
        for (const auto& [e, c] : cnt) edges.push_back(e);
        causal::Edge3 e = edges[rng() % edges.size()];
        std::vector<std::size_t> at;
        for (std::size_t i = 0; i < tris.size(); ++i) {
            const causal::Tri3& t = tris[i];
            int hit = 0;
            for (causal::VertexId v : t)
                if (v == e[0] || v == e[1]) ++hit;
            if (hit == 2) at.push_back(i);
        }
        if (at.size() != 2) continue;
        causal::VertexId c = -1, d = -1;
        for (causal::VertexId v : tris[at[0]])
            if (v != e[0] && v != e[1]) c = v;
        for (causal::VertexId v : tris[at[1]])
            if (v != e[0] && v != e[1]) d = v;
        if (cnt.count(causal::edge3(c, d))) continue;
        causal::Triangulation attempt;
        for (std::size_t i = 0; i < tris.size(); ++i)
            if (i != at[0] && i != at[1]) attempt.push_back(tris[i]);
        attempt.push_back(causal::tri3(e[0], c, d));
        attempt.push_back(causal::tri3(e[1], c, d));
        if (is_sphere(attempt)) tris = attempt;
    }
    return tris;
}

}  // namespace shapes

#endif  // CAUSAL_TESTS_RANDOM_SHAPES_HPP
