#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "causal/build_slice.hpp"
#include "causal/validate.hpp"
#include "fixtures3.hpp"
#include "random_shapes.hpp"

using namespace causal;

namespace {

std::string uncoloured_code(const std::vector<Tri3>& tris) {
    return detail::as_red_complex(tris).canonical_code();
}

const Triangulation kTetraSphere = {{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}};
const Triangulation kBipyramid = {{0, 1, 3}, {1, 2, 3}, {0, 2, 3},
                                  {0, 1, 4}, {1, 2, 4}, {0, 2, 4}};

}  // namespace

TEST_CASE("two triangles give the prism") {
    Complex3 k = build_disc_slice({{0, 1, 2}}, {{0, 1, 2}});
    CHECK(k.num_tetras() == 3);
    CHECK(isomorphic3(k, prism()));
    CHECK(validate_slice(k, SliceKind::Disc).verdict);
}

TEST_CASE("a two-triangle disc over a triangle") {
    Complex3 k = build_disc_slice({{0, 1, 2}, {1, 2, 3}}, {{0, 1, 2}});
    CHECK(k.num_tetras() == 4);
    CHECK(validate_slice(k, SliceKind::Disc).verdict);
    BoundarySplit bs = boundary_split(k, SliceKind::Disc);
    CHECK(bs.d_red.size() == 2);
    CHECK(bs.d_blue.size() == 1);
}

TEST_CASE("boundary discs of built slices match the inputs") {
    std::mt19937 rng(20240811);
    for (int trial = 0; trial < 12; ++trial) {
        Triangulation d1 = shapes::random_disc(rng, 8);
        Triangulation d2 = shapes::random_disc(rng, 8);
        Complex3 k = build_disc_slice(d1, d2);
        INFO("trial " << trial << ": " << d1.size() << "+" << d2.size() << " triangles");
        CHECK(validate_slice(k, SliceKind::Disc).verdict);
        BoundarySplit bs = boundary_split(k, SliceKind::Disc);
        CHECK(uncoloured_code(bs.d_red) == uncoloured_code(d1));
        CHECK(uncoloured_code(bs.d_blue) == uncoloured_code(d2));
    }
}

TEST_CASE("sphere slices close up and validate") {
    Complex3 k = build_sphere_slice(kTetraSphere, kTetraSphere);
    CHECK(k.euler() == 2);
    CHECK(validate_slice(k, SliceKind::Sphere).verdict);
    BoundarySplit bs = boundary_split(k, SliceKind::Sphere);
    CHECK(uncoloured_code(bs.d_red) == uncoloured_code(kTetraSphere));
    CHECK(uncoloured_code(bs.d_blue) == uncoloured_code(kTetraSphere));

    Complex3 k2 = build_sphere_slice(kTetraSphere, kBipyramid);
    CHECK(validate_slice(k2, SliceKind::Sphere).verdict);
    BoundarySplit bs2 = boundary_split(k2, SliceKind::Sphere);
    CHECK(uncoloured_code(bs2.d_blue) == uncoloured_code(kBipyramid));
}

TEST_CASE("random sphere pairs build valid sphere slices") {
    std::mt19937 rng(987654);
    for (int trial = 0; trial < 4; ++trial) {
        Triangulation s1 = shapes::random_sphere(rng, 8);
        Triangulation s2 = shapes::random_sphere(rng, 8);
        Complex3 k = build_sphere_slice(s1, s2);
        INFO("trial " << trial << ": " << s1.size() << "+" << s2.size() << " triangles");
        CHECK(k.euler() == 2);
        CHECK(validate_slice(k, SliceKind::Sphere).verdict);
    }
}

TEST_CASE("bad inputs are rejected") {
    try {
        build_disc_slice({{0, 1, 2}}, kTetraSphere);
        FAIL("expected an error");
    } catch (const Error& e) {
        CHECK(e.code() == Errc::NotADisc);
    }
    try {
        build_sphere_slice(kTetraSphere, {{0, 1, 2}});
        FAIL("expected an error");
    } catch (const Error& e) {
        CHECK(e.code() == Errc::NotASphere);
    }
}
