#include <catch2/catch_amalgamated.hpp>

#include <map>
#include <set>

#include "causal/enumerate.hpp"
#include "fixtures.hpp"

using namespace causal;

TEST_CASE("census counts per size are stable") {
    std::map<std::size_t, int> per;
    for (const SurfaceComplex& s : enumerate_valid_complexes(5)) per[s.num_cells()]++;
    CHECK(per[1] == 3);
    CHECK(per[2] == 6);
    CHECK(per[3] == 28);
    CHECK(per[4] == 207);
    CHECK(per[5] == 2063);
}

TEST_CASE("census members are valid and pairwise non-isomorphic") {
    std::set<std::string> codes;
    for (const SurfaceComplex& s : enumerate_valid_complexes(4)) {
        CHECK(codes.insert(s.canonical_code()).second);
        CHECK(s.euler() == static_cast<int>(s.num_vertices()) -
                               static_cast<int>(s.num_edges()) +
                               static_cast<int>(s.num_cells()));
    }
}

TEST_CASE("census reaches complexes with no valid proper subcomplex") {
    // The 5-triangle Moebius band: removing any cell pinches a vertex link.
    SurfaceComplex moebius = SurfaceComplex::build({
        red_triangle(1, 2, 3),
        red_triangle(2, 3, 4),
        red_triangle(3, 4, 5),
        red_triangle(4, 5, 1),
        red_triangle(5, 1, 2),
    });
    bool found = false;
    for (const SurfaceComplex& s : enumerate_valid_complexes(5))
        if (s.canonical_code() == moebius.canonical_code()) found = true;
    CHECK(found);
}

TEST_CASE("incremental extension agrees with the full recompute") {
    std::vector<std::vector<Cell>> frontier = {
        {red_triangle(0, 1, 2)}, {blue_triangle(0, 1, 2)}, {quadrangle(0, 1, 2, 3)}};
    for (int size = 2; size <= 3; ++size) {
        std::map<std::string, std::vector<Cell>> level;
        for (const auto& cs : frontier) {
            detail::GrowthContext ctx(cs);
            REQUIRE(ctx.admissible);
            for (const Cell& c : detail::growth_candidates(ctx, cs)) {
                std::vector<Cell> next = cs;
                next.push_back(c);
                std::sort(next.begin(), next.end());
                INFO(detail::canonical_code_of(next, nullptr));
                CHECK(ctx.try_extend(c) == detail::partial_defect(next));
                if (detail::partial_defect(next) >= 0)
                    level.try_emplace(detail::canonical_code_of(next, nullptr), std::move(next));
            }
        }
        frontier.clear();
        for (auto& [code, cs] : level) frontier.push_back(std::move(cs));
    }
}

TEST_CASE("defect is zero exactly on buildable complexes") {
    CHECK(detail::partial_defect({quadrangle(0, 1, 2, 3)}) == 0);
    // The Moebius band minus one triangle has split links at the exposed
    // vertices; adding the closing cell repairs them.
    std::vector<Cell> open_band = {
        red_triangle(1, 2, 3),
        red_triangle(2, 3, 4),
        red_triangle(3, 4, 5),
        red_triangle(4, 5, 1),
    };
    std::sort(open_band.begin(), open_band.end());
    CHECK(detail::partial_defect(open_band) > 0);
    std::vector<Cell> band = open_band;
    band.push_back(red_triangle(5, 1, 2));
    std::sort(band.begin(), band.end());
    CHECK(detail::partial_defect(band) == 0);
    // duplicate cell
    std::vector<Cell> dup = {red_triangle(0, 1, 2), red_triangle(0, 1, 2)};
    CHECK(detail::partial_defect(dup) == -1);
    // colour conflict on a shared edge
    CHECK(detail::partial_defect({blue_triangle(0, 1, 2), red_triangle(0, 1, 3)}) == -1);
}
