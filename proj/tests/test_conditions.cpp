#include <catch2/catch_amalgamated.hpp>

#include "causal/brute_force.hpp"
#include "causal/conditions.hpp"
#include "causal/enumerate.hpp"
#include "fixtures.hpp"

using namespace causal;
using namespace fixtures;

namespace {

/// Swaps the two colours: triangles flip kind, quadrangles rotate one step so
/// red and blue edge pairs trade places.
SurfaceComplex swap_colours(const SurfaceComplex& s) {
    std::vector<Cell> cells;
    for (const Cell& c : s.cells()) {
        switch (c.kind) {
            case CellKind::RedTriangle:
                cells.push_back(blue_triangle(c.vertices[0], c.vertices[1], c.vertices[2]));
                break;
            case CellKind::BlueTriangle:
                cells.push_back(red_triangle(c.vertices[0], c.vertices[1], c.vertices[2]));
                break;
            case CellKind::Quadrangle:
                cells.push_back(
                    quadrangle(c.vertices[1], c.vertices[2], c.vertices[3], c.vertices[0]));
                break;
        }
    }
    return SurfaceComplex::build(std::move(cells));
}

/// Red triangle enclosed by three quadrangles whose outer red edges close a
/// cycle; the boundary 3-4-5 is entirely red.
SurfaceComplex enclosed_triangle_ring() {
    return SurfaceComplex::build({
        red_triangle(0, 1, 2),
        quadrangle(0, 1, 4, 3),
        quadrangle(1, 2, 5, 4),
        quadrangle(2, 0, 3, 5),
    });
}

/// Sphere: two red caps joined by one belt of three quadrangles.
SurfaceComplex bipyramid() {
    return SurfaceComplex::build({
        red_triangle(0, 1, 2),
        red_triangle(3, 4, 5),
        quadrangle(0, 1, 4, 3),
        quadrangle(1, 2, 5, 4),
        quadrangle(2, 0, 3, 5),
    });
}

/// Sphere with two quadrangle belts separated by an annulus of six red
/// triangles; the annulus closes a red cycle with quadrangles on both sides.
SurfaceComplex two_belt_sphere() {
    return SurfaceComplex::build({
        red_triangle(0, 1, 2),
        quadrangle(0, 1, 4, 3),
        quadrangle(1, 2, 5, 4),
        quadrangle(2, 0, 3, 5),
        red_triangle(3, 4, 6),
        red_triangle(4, 6, 7),
        red_triangle(4, 5, 7),
        red_triangle(5, 7, 8),
        red_triangle(3, 5, 8),
        red_triangle(3, 6, 8),
        quadrangle(6, 7, 10, 9),
        quadrangle(7, 8, 11, 10),
        quadrangle(8, 6, 9, 11),
        red_triangle(9, 10, 11),
    });
}

/// Smallest complex violating the vertex injectivity condition: vertices 5
/// and 6 are joined by both a red and a blue path.
SurfaceComplex doubly_connected_pair() {
    return SurfaceComplex::build({
        blue_triangle(0, 1, 2),
        quadrangle(0, 3, 4, 1),
        quadrangle(0, 3, 6, 2),
        quadrangle(1, 4, 5, 2),
    });
}

/// Two quadrangles sharing a blue edge: vertices 1 and 2 lie on distinct red
/// boundary arcs yet are blue-connected without being a blue arc's endpoints.
SurfaceComplex cross_arc_pair() {
    return SurfaceComplex::build({
        quadrangle(0, 1, 2, 3),
        quadrangle(1, 4, 5, 2),
    });
}

/// Disc satisfying the injectivity, enclosure and arc conditions whose blue
/// edges (0,2) and (3,5) are pairwise red-connected but lie in different
/// quadrangle chains.
SurfaceComplex chain_condition_witness() {
    return SurfaceComplex::build({
        blue_triangle(0, 1, 2),
        blue_triangle(3, 4, 5),
        quadrangle(0, 3, 4, 1),
        quadrangle(1, 4, 5, 2),
    });
}

/// chain_condition_witness with a red triangle glued onto the red boundary
/// edge (0,3), so it has triangles of both colours and fails disc membership
/// on the quadrangle-chain condition alone.
SurfaceComplex chain_condition_member_candidate() {
    return SurfaceComplex::build({
        blue_triangle(0, 1, 2),
        blue_triangle(3, 4, 5),
        quadrangle(0, 3, 4, 1),
        quadrangle(1, 4, 5, 2),
        red_triangle(0, 3, 6),
    });
}

std::vector<ConditionReport> fast_reports(const SurfaceComplex& s) {
    std::vector<ConditionReport> out = {check_alpha(s)};
    if (s.topology() == SurfaceTopology::Disc) {
        out.push_back(check_beta1(s, Colour::Red));
        out.push_back(check_beta1(s, Colour::Blue));
        try {
            out.push_back(check_beta2(s));
        } catch (const Error& err) {
            REQUIRE(err.code() == Errc::NoArcs);
            out.push_back({"beta2", false, {{"error", "NoArcs"}}});
        }
    } else if (s.topology() == SurfaceTopology::Sphere) {
        out.push_back(check_beta_sphere(s, Colour::Red));
        out.push_back(check_beta_sphere(s, Colour::Blue));
    }
    out.push_back(check_gamma(s));
    return out;
}

void require_same_reports(const SurfaceComplex& s,
                          std::size_t budget = oracle::kDefaultBudget) {
    auto fast = fast_reports(s);
    auto slow = oracle::conditions(s, budget);
    REQUIRE(fast.size() == slow.size());
    for (std::size_t i = 0; i < fast.size(); ++i) {
        INFO("condition " << fast[i].condition << " on " << s.canonical_code());
        REQUIRE(fast[i].condition == slow[i].condition);
        REQUIRE(fast[i].verdict == slow[i].verdict);
    }
}

}  // namespace

TEST_CASE("alpha holds on the basic fixtures") {
    CHECK(check_alpha(single_quad()).verdict);
    CHECK(check_alpha(chain3()).verdict);
}

TEST_CASE("alpha rejects a pair joined in both colours") {
    SurfaceComplex s = doubly_connected_pair();
    ConditionReport r = check_alpha(s);
    REQUIRE_FALSE(r.verdict);
    auto pair = r.witness.at("vertices").get<std::vector<VertexId>>();
    REQUIRE(pair.size() == 2);
    // The witness re-checks as a genuine violation.
    CHECK(oracle::detail::connected_by_path(s, Colour::Red, pair[0], pair[1]));
    CHECK(oracle::detail::connected_by_path(s, Colour::Blue, pair[0], pair[1]));
}

TEST_CASE("beta1 holds on the basic fixtures") {
    for (Colour c : {Colour::Red, Colour::Blue}) {
        CHECK(check_beta1(single_quad(), c).verdict);
        CHECK(check_beta1(chain3(), c).verdict);
    }
}

TEST_CASE("beta1 rejects an enclosed triangle") {
    SurfaceComplex ring = enclosed_triangle_ring();
    ConditionReport r = check_beta1(ring, Colour::Red);
    REQUIRE_FALSE(r.verdict);
    CHECK(r.witness.at("enclosed_cell").at("kind") != "red");
    CHECK_FALSE(r.witness.at("cut").empty());
    CHECK(check_beta1(ring, Colour::Blue).verdict);

    SurfaceComplex mirror = swap_colours(ring);
    CHECK(check_beta1(mirror, Colour::Red).verdict);
    CHECK_FALSE(check_beta1(mirror, Colour::Blue).verdict);
}

TEST_CASE("beta1 requires a disc") {
    CHECK_THROWS_MATCHES(check_beta1(bipyramid(), Colour::Red), Error,
                         Catch::Matchers::Predicate<Error>(
                             [](const Error& e) { return e.code() == Errc::NotADisc; }));
}

TEST_CASE("beta2 holds on the basic fixtures") {
    CHECK(check_beta2(single_quad()).verdict);
    CHECK(check_beta2(chain3()).verdict);
}

TEST_CASE("beta2 rejects a path between arc interiors") {
    ConditionReport r = check_beta2(cross_arc_pair());
    REQUIRE_FALSE(r.verdict);
    auto pair = r.witness.at("vertices").get<std::vector<VertexId>>();
    CHECK(pair == std::vector<VertexId>{1, 2});
    CHECK(r.witness.at("path_colour") == "blue");
}

TEST_CASE("beta2 reports a monochromatic boundary distinctly") {
    CHECK_THROWS_MATCHES(check_beta2(enclosed_triangle_ring()), Error,
                         Catch::Matchers::Predicate<Error>(
                             [](const Error& e) { return e.code() == Errc::NoArcs; }));
}

TEST_CASE("beta on spheres accepts two caps with one belt") {
    SurfaceComplex s = bipyramid();
    CHECK(check_beta_sphere(s, Colour::Red).verdict);
    CHECK(check_beta_sphere(s, Colour::Blue).verdict);
}

TEST_CASE("beta on spheres rejects belts separated by an annulus") {
    SurfaceComplex s = two_belt_sphere();
    ConditionReport r = check_beta_sphere(s, Colour::Red);
    REQUIRE_FALSE(r.verdict);
    CHECK_FALSE(r.witness.at("cut").empty());
    CHECK(check_beta_sphere(s, Colour::Blue).verdict);

    SurfaceComplex mirror = swap_colours(s);
    CHECK(check_beta_sphere(mirror, Colour::Red).verdict);
    CHECK_FALSE(check_beta_sphere(mirror, Colour::Blue).verdict);
}

TEST_CASE("beta on spheres requires a sphere") {
    CHECK_THROWS_MATCHES(check_beta_sphere(chain3(), Colour::Red), Error,
                         Catch::Matchers::Predicate<Error>(
                             [](const Error& e) { return e.code() == Errc::NotASphere; }));
}

TEST_CASE("gamma holds on the basic fixtures") {
    CHECK(check_gamma(single_quad()).verdict);
    CHECK(check_gamma(chain3()).verdict);
}

TEST_CASE("gamma is independent of the other disc conditions") {
    SurfaceComplex s = chain_condition_witness();
    CHECK(check_alpha(s).verdict);
    CHECK(check_beta1(s, Colour::Red).verdict);
    CHECK(check_beta1(s, Colour::Blue).verdict);
    CHECK(check_beta2(s).verdict);
    ConditionReport r = check_gamma(s);
    REQUIRE_FALSE(r.verdict);
    CHECK(r.witness.at("colour") == "blue");
}

TEST_CASE("delta holds on the chain and fails across the bipyramid") {
    CHECK(check_delta(chain3()).verdict);
    ConditionReport r = check_delta(bipyramid());
    REQUIRE_FALSE(r.verdict);
    CHECK(r.witness.at("triangles").size() == 2);
}

TEST_CASE("disc membership") {
    CHECK(membership(chain3(), MidsectionKind::Disc).verdict);

    ConditionReport quad = membership(single_quad(), MidsectionKind::Disc);
    REQUIRE_FALSE(quad.verdict);
    CHECK(quad.witness.at("failed").at("condition") == "triangle_counts");

    ConditionReport ring = membership(enclosed_triangle_ring(), MidsectionKind::Disc);
    REQUIRE_FALSE(ring.verdict);
    CHECK(ring.witness.at("failed").at("condition") == "triangle_counts");

    ConditionReport chains = membership(chain_condition_member_candidate(), MidsectionKind::Disc);
    REQUIRE_FALSE(chains.verdict);
    CHECK(chains.witness.at("failed").at("condition") == "gamma");

    ConditionReport sphere = membership(bipyramid(), MidsectionKind::Disc);
    REQUIRE_FALSE(sphere.verdict);
    CHECK(sphere.witness.at("failed").at("condition") == "topology");
}

TEST_CASE("sphere membership needs four triangles of each colour") {
    ConditionReport r = membership(bipyramid(), MidsectionKind::Sphere);
    REQUIRE_FALSE(r.verdict);
    CHECK(r.witness.at("failed").at("condition") == "triangle_counts");

    ConditionReport disc = membership(chain3(), MidsectionKind::Sphere);
    REQUIRE_FALSE(disc.verdict);
    CHECK(disc.witness.at("failed").at("condition") == "topology");
}

TEST_CASE("oracle matches the fast checkers on the named fixtures") {
    require_same_reports(single_quad());
    require_same_reports(chain3());
    require_same_reports(enclosed_triangle_ring());
    require_same_reports(bipyramid());
    require_same_reports(two_belt_sphere(), 14);
    require_same_reports(doubly_connected_pair());
    require_same_reports(cross_arc_pair());
    require_same_reports(chain_condition_witness());
    require_same_reports(chain_condition_member_candidate());
}

TEST_CASE("oracle matches the fast checkers on every complex with at most 4 cells") {
    for (const SurfaceComplex& s : enumerate_valid_complexes(4)) require_same_reports(s);
}

TEST_CASE("members satisfy the structural consequences") {
    for (const SurfaceComplex& s : enumerate_valid_complexes(5)) {
        if (s.topology() != SurfaceTopology::Disc) continue;
        if (!membership(s, MidsectionKind::Disc).verdict) continue;
        INFO(s.canonical_code());
        CHECK(check_delta(s).verdict);
        BoundaryArcs arcs = s.boundary_arcs();
        CHECK_FALSE(arcs.single_closed);
        std::set<EdgeKey> boundary;
        for (const EdgeInfo& e : s.edges())
            if (e.boundary()) boundary.insert(edge_key(e.a, e.b));
        for (Colour c : {Colour::Red, Colour::Blue}) {
            for (const QuadChain& ch : s.quad_chains(c)) {
                CHECK_FALSE(ch.closed);
                int on_boundary = 0;
                for (const EdgeKey& e : ch.edges) on_boundary += boundary.count(e);
                CHECK(on_boundary <= 1);
            }
            // no two edges of one triangle share a chain
            std::map<EdgeKey, std::size_t> chain_of;
            std::size_t idx = 0;
            for (const QuadChain& ch : s.quad_chains(c)) {
                for (const EdgeKey& e : ch.edges) chain_of[e] = idx;
                ++idx;
            }
            CellKind tri = (c == Colour::Red) ? CellKind::RedTriangle : CellKind::BlueTriangle;
            for (const Cell& cell : s.cells()) {
                if (cell.kind != tri) continue;
                std::set<std::size_t> seen;
                for (std::size_t i = 0; i < 3; ++i) {
                    EdgeKey k = edge_key(cell.vertices[i], cell.vertices[(i + 1) % 3]);
                    CHECK(seen.insert(chain_of.at(k)).second);
                }
            }
        }
    }
}

TEST_CASE("oracle refuses oversized inputs") {
    CHECK_THROWS_MATCHES(oracle::conditions(two_belt_sphere(), 8), Error,
                         Catch::Matchers::Predicate<Error>(
                             [](const Error& e) { return e.code() == Errc::BudgetExceeded; }));
}
