#include <catch2/catch_amalgamated.hpp>

#include "causal/io.hpp"
#include "fixtures.hpp"
#include "fixtures3.hpp"

using namespace causal;
using nlohmann::json;

TEST_CASE("slice/1 round trip") {
    Complex3 k = prism();
    json j = io::slice_to_json(k);
    CHECK(j["format"] == "slice/1");
    Complex3 back = io::slice_from_json(j);
    CHECK(isomorphic3(back, k));
    CHECK(io::slice_to_json(back) == j);  // byte-stable
}

TEST_CASE("midsection/1 round trip") {
    SurfaceComplex s = fixtures::chain3();
    json j = io::midsection_to_json(s);
    SurfaceComplex back = io::midsection_from_json(j);
    CHECK(back.canonical_code() == s.canonical_code());
    CHECK(io::midsection_to_json(back) == j);
}

TEST_CASE("triangulation/1 and side/1 round trips") {
    Triangulation tet = {tri3(0, 1, 2), tri3(0, 1, 3), tri3(0, 2, 3), tri3(1, 2, 3)};
    CHECK(io::triangulation_from_json(io::triangulation_to_json(tet)) == tet);
    for (const SideComplex& side : enumerate_triangle_sides()) {
        SideComplex back = io::side_from_json(io::side_to_json(side));
        CHECK(back.word == side.word);
        CHECK(back.triangles == side.triangles);
    }
}

TEST_CASE("strict parsing rejects malformed input") {
    auto expect_parse_error = [](auto&& fn) {
        try {
            fn();
            FAIL("expected a parse error");
        } catch (const Error& e) {
            CHECK(e.code() == Errc::ParseError);
        }
    };
    json good = io::slice_to_json(prism());

    SECTION("unknown field") {
        json j = good;
        j["extra"] = 1;
        expect_parse_error([&] { io::slice_from_json(j); });
    }
    SECTION("missing field") {
        json j = good;
        j.erase("tetrahedra");
        expect_parse_error([&] { io::slice_from_json(j); });
    }
    SECTION("wrong format tag") {
        json j = good;
        j["format"] = "slice/2";
        expect_parse_error([&] { io::slice_from_json(j); });
    }
    SECTION("bad colour") {
        json j = good;
        j["vertices"][0]["colour"] = "green";
        expect_parse_error([&] { io::slice_from_json(j); });
    }
    SECTION("short tetrahedron") {
        json j = good;
        j["tetrahedra"][0] = {0, 1, 2};
        expect_parse_error([&] { io::slice_from_json(j); });
    }
    SECTION("midsection with bad kind") {
        json j = io::midsection_to_json(fixtures::chain3());
        j["cells"][0]["kind"] = "purple";
        expect_parse_error([&] { io::midsection_from_json(j); });
    }
    SECTION("side pattern mismatch") {
        json j = io::side_to_json(enumerate_triangle_sides()[0]);
        std::string w = j["pattern"].get<std::string>();
        w[0] = w[0] == 'f' ? 'b' : 'f';
        j["pattern"] = w;
        expect_parse_error([&] { io::side_from_json(j); });
    }
}

TEST_CASE("domain errors are not parse errors") {
    // well-formed JSON describing a monochrome tetrahedron
    json j = {{"format", "slice/1"},
              {"vertices", json::array({{{"id", 0}, {"colour", "red"}},
                                        {{"id", 1}, {"colour", "red"}},
                                        {{"id", 2}, {"colour", "red"}},
                                        {{"id", 3}, {"colour", "red"}}})},
              {"tetrahedra", json::array({{0, 1, 2, 3}})}};
    try {
        io::slice_from_json(j);
        FAIL("expected an error");
    } catch (const Error& e) {
        CHECK(e.code() == Errc::MonochromeTetra);
    }
}

TEST_CASE("census records serialise one entry per line") {
    std::vector<CensusRecord> rec = enumerate_midsections(MidsectionKind::Disc, 4);
    std::string lines = io::census_jsonl(rec[3]);
    CHECK(std::count(lines.begin(), lines.end(), '\n') == 9);
    json first = json::parse(lines.substr(0, lines.find('\n')));
    CHECK(first.contains("code"));
    CHECK(first["red"].get<int>() + first["blue"].get<int>() + first["quads"].get<int>() == 4);
}
