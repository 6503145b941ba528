#include <catch2/catch_amalgamated.hpp>

#include "causal/build_slice.hpp"
#include "causal/census.hpp"
#include "causal/reconstruct.hpp"
#include "fixtures.hpp"
#include "fixtures3.hpp"

using namespace causal;

TEST_CASE("the minimal sphere midsection cuts to an 8-cell disc midsection") {
    Triangulation tet = {tri3(0, 1, 2), tri3(0, 1, 3), tri3(0, 2, 3), tri3(1, 2, 3)};
    Complex3 k = build_sphere_slice(tet, tet);
    SurfaceComplex s = midsection(k).first;
    REQUIRE(s.num_cells() == 12);

    CutResult cut = cut_to_disc(s);
    // the removed piece: one red triangle, a one-quadrangle strip, and the
    // two end blue triangles — four cells in total
    CHECK(cut.cluster.size() == 1);
    CHECK(cut.strip.size() == 1);
    CHECK(cut.cluster.size() + cut.strip.size() + 2 == 4);
    CHECK(cut.delta1 != cut.delta2);
    CHECK(cut.disc.num_cells() == 8);
    CHECK(membership(cut.disc, MidsectionKind::Disc).verdict);

    // removed indices are disjoint and refer to cells of the input
    std::set<std::size_t> removed(cut.cluster.begin(), cut.cluster.end());
    removed.insert(cut.strip.begin(), cut.strip.end());
    removed.insert(cut.delta1);
    removed.insert(cut.delta2);
    CHECK(removed.size() == 4);
    for (std::size_t ci : removed) CHECK(ci < s.num_cells());
    for (std::size_t ci : cut.cluster)
        CHECK(s.cells()[ci].kind == CellKind::RedTriangle);
    for (std::size_t ci : cut.strip)
        CHECK(s.cells()[ci].kind == CellKind::Quadrangle);
    CHECK(s.cells()[cut.delta1].kind == CellKind::BlueTriangle);
    CHECK(s.cells()[cut.delta2].kind == CellKind::BlueTriangle);
}

TEST_CASE("every small sphere census member cuts to a disc member") {
    for (const SurfaceComplex& s :
         enumerate_midsection_complexes(MidsectionKind::Sphere, 13)) {
        CutResult cut = cut_to_disc(s);
        CHECK(membership(cut.disc, MidsectionKind::Disc).verdict);
        CHECK(cut.disc.num_cells() + cut.cluster.size() + cut.strip.size() + 2 ==
              s.num_cells());
    }
}

TEST_CASE("disc input is rejected") {
    try {
        cut_to_disc(fixtures::chain3());
        FAIL("expected an error");
    } catch (const Error& e) {
        CHECK(e.code() == Errc::MembershipFailed);
    }
}

TEST_CASE("the cut is stable under relabelling") {
    SurfaceComplex s = midsection(tetra_sphere_slice()).first;
    CutResult a = cut_to_disc(s);
    // relabel all vertices and cut again: the removed shape must agree
    std::vector<Cell> cells;
    for (const Cell& c : s.cells()) {
        std::vector<VertexId> vs = c.vertices;
        for (VertexId& v : vs) v = v * 7 % 97 + 100;
        cells.push_back(Cell(c.kind, vs));
    }
    CutResult b = cut_to_disc(SurfaceComplex::build(std::move(cells)));
    CHECK(a.cluster.size() == b.cluster.size());
    CHECK(a.strip.size() == b.strip.size());
    CHECK(a.disc.canonical_code() == b.disc.canonical_code());
}
