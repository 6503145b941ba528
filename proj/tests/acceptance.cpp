// Acceptance gate: one pass/fail line per criterion, nonzero exit if any
// fails.  Criteria 3-6 share a single streaming sweep over every enumerable
// complex with at most 7 cells, so the whole run is dominated by one
// exhaustive generation pass.  Progress goes to stderr.

#include <array>
#include <chrono>
#include <iostream>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "causal/brute_force.hpp"
#include "causal/census.hpp"
#include "causal/io.hpp"
#include "causal/validate.hpp"
#include "fixtures.hpp"
#include "fixtures3.hpp"
#include "random_shapes.hpp"

using namespace causal;

namespace {

struct Criterion {
    bool pass = true;
    std::string note;

    void fail(const std::string& why) {
        if (pass) note = why;  // keep the first reason
        pass = false;
    }
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

}  // namespace

int main() {
    std::array<Criterion, 8> crit;

    // ---- 1: the prism fixture round trip, under a second -------------------
    {
        auto t0 = std::chrono::steady_clock::now();
        Complex3 k = prism();
        if (!validate_slice(k, SliceKind::Disc).verdict) crit[0].fail("prism fails validation");
        SurfaceComplex chain = fixtures::chain3();
        if (midsection(k).first.canonical_code() != chain.canonical_code())
            crit[0].fail("prism midsection is not the 3-cell chain");
        Complex3 back = reconstruct(chain, MidsectionKind::Disc);
        if (!isomorphic3(back, k)) crit[0].fail("chain does not reconstruct to the prism");
        if (back.num_vertices() != 6 || back.num_edges() != 12 || back.num_triangles() != 10 ||
            back.num_tetras() != 3 || back.euler() != 1)
            crit[0].fail("prism reconstruction has wrong element counts");
        if (seconds_since(t0) >= 1.0) crit[0].fail("took a second or more");
    }

    // ---- 2: exactly three triangle-boundary sides, under a second ----------
    {
        auto t0 = std::chrono::steady_clock::now();
        if (enumerate_triangle_sides().size() != 3)
            crit[1].fail("side census does not have exactly 3 classes");
        if (seconds_since(t0) >= 1.0) crit[1].fail("took a second or more");
    }

    // ---- 3-6: one streaming sweep over all complexes with <= 7 cells -------
    std::array<std::size_t, 7> disc_census_by_size{};
    bool remark2_witness = false;
    std::size_t swept = 0;
    auto sweep_t0 = std::chrono::steady_clock::now();
    enumerate_valid_complexes(7, [&](const SurfaceComplex& s) {
        if (++swept % 25000 == 0)
            std::cerr << "swept " << swept << " complexes (" << seconds_since(sweep_t0)
                      << "s)\n";
        // 6: fast checkers versus the path/cycle-enumeration oracles (the
        // boundary-dependent checks apply only on their own topology)
        auto expect = [&](const ConditionReport& fast, const ConditionReport& slow) {
            if (fast.verdict != slow.verdict)
                crit[5].fail("checker/oracle disagreement on " + fast.condition +
                             " at complex " + s.canonical_code());
        };
        ConditionReport alpha = check_alpha(s);
        ConditionReport gamma = check_gamma(s);
        expect(alpha, oracle::check_alpha(s));
        expect(gamma, oracle::check_gamma(s));
        if (s.topology() == SurfaceTopology::Disc) {
            ConditionReport b1r = check_beta1(s, Colour::Red);
            ConditionReport b1b = check_beta1(s, Colour::Blue);
            expect(b1r, oracle::check_beta1(s, Colour::Red));
            expect(b1b, oracle::check_beta1(s, Colour::Blue));
            // beta2 reports a monochromatic boundary as its own outcome
            auto beta2_outcome = [&](auto&& fn) -> std::pair<bool, bool> {
                try {
                    return {fn().verdict, false};
                } catch (const Error& e) {
                    if (e.code() != Errc::NoArcs) throw;
                    return {false, true};
                }
            };
            auto fast2 = beta2_outcome([&] { return check_beta2(s); });
            auto slow2 = beta2_outcome([&] { return oracle::check_beta2(s); });
            if (fast2 != slow2)
                crit[5].fail("checker/oracle disagreement on beta2 at complex " +
                             s.canonical_code());

            // 5: the first three properties hold but the fourth fails
            if (alpha.verdict && b1r.verdict && b1b.verdict && fast2.first && !gamma.verdict)
                remark2_witness = true;
        } else if (s.topology() == SurfaceTopology::Sphere) {
            expect(check_beta_sphere(s, Colour::Red), oracle::check_beta_sphere(s, Colour::Red));
            expect(check_beta_sphere(s, Colour::Blue),
                   oracle::check_beta_sphere(s, Colour::Blue));
        }

        // 3 + 4: disc census members — counts, lemma properties, round trip
        if (!membership(s, MidsectionKind::Disc).verdict) return;
        ++disc_census_by_size[s.num_cells() - 1];
        if (!check_delta(s).verdict) crit[3].fail("census member violates delta");
        for (Colour c : {Colour::Red, Colour::Blue})
            for (const QuadChain& chain : s.quad_chains(c))
                if (chain.closed) crit[3].fail("census member has a quad-chain cycle");
        BoundaryArcs arcs = s.boundary_arcs();
        std::size_t red_arcs = 0, blue_arcs = 0;
        for (std::size_t i = 0; i < arcs.arcs.size(); ++i) {
            (arcs.arcs[i].colour == Colour::Red ? red_arcs : blue_arcs) += 1;
            if (arcs.arcs[i].colour == arcs.arcs[(i + 1) % arcs.arcs.size()].colour &&
                arcs.arcs.size() > 1)
                crit[3].fail("census member boundary arcs do not alternate");
        }
        if (arcs.single_closed || red_arcs == 0 || blue_arcs == 0)
            crit[3].fail("census member lacks an arc of each colour");
        try {
            Complex3 k = reconstruct(s, MidsectionKind::Disc);
            if (midsection(k).first.canonical_code() != s.canonical_code())
                crit[2].fail("disc round trip changed the midsection");
        } catch (const Error& e) {
            crit[2].fail(std::string("disc reconstruct failed: ") + e.what());
        }
    });
    std::cerr << "sweep done: " << swept << " complexes (" << seconds_since(sweep_t0)
              << "s)\n";

    // 3: counts against the independent slice enumeration, sizes 1..5
    {
        std::vector<CensusRecord> slices = enumerate_slices_bruteforce(SliceKind::Disc, 5);
        for (std::size_t i = 0; i < 5; ++i)
            if (slices[i].count() != disc_census_by_size[i])
                crit[2].fail("size " + std::to_string(i + 1) + ": " +
                             std::to_string(slices[i].count()) + " slices vs " +
                             std::to_string(disc_census_by_size[i]) + " midsections");
        // slice-side round trip on the independent enumeration
        for (const Complex3& k : enumerate_slice_complexes(SliceKind::Disc, 5)) {
            try {
                if (!isomorphic3(reconstruct(midsection(k).first, MidsectionKind::Disc), k))
                    crit[2].fail("slice round trip lost a slice");
            } catch (const Error& e) {
                crit[2].fail(std::string("slice round trip failed: ") + e.what());
            }
        }
    }

    // 3 + 4 + 8: the sphere census at its two smallest occupied sizes
    {
        std::vector<SurfaceComplex> sphere =
            enumerate_midsection_complexes(MidsectionKind::Sphere, kSphereCensusBudget);
        std::set<std::size_t> sizes;
        for (const SurfaceComplex& s : sphere) sizes.insert(s.num_cells());
        if (sizes.size() < 2) crit[2].fail("fewer than two occupied sphere sizes in budget");
        RoundtripReport rt = roundtrip_members(MidsectionKind::Sphere, sphere);
        if (!rt.clean()) crit[2].fail("sphere round trip: " + rt.failures.front());
        for (const SurfaceComplex& s : sphere) {
            if (!check_delta(s).verdict) crit[3].fail("sphere member violates delta");
            for (Colour c : {Colour::Red, Colour::Blue})
                for (const QuadChain& chain : s.quad_chains(c))
                    if (chain.closed) crit[3].fail("sphere member has a quad-chain cycle");
            try {
                CutResult cut = cut_to_disc(s);
                if (!membership(cut.disc, MidsectionKind::Disc).verdict)
                    crit[7].fail("cut result fails disc membership");
            } catch (const Error& e) {
                crit[7].fail(std::string("cut failed: ") + e.what());
            }
        }
    }

    // 5: the witness must have appeared during the sweep
    if (!remark2_witness)
        crit[4].fail("no disc complex satisfies alpha, beta1, beta2 but fails gamma");

    // ---- 7: randomised constructor checks ----------------------------------
    {
        std::mt19937 rng(20260823);
        for (int i = 0; i < 200; ++i) {
            Triangulation d1 = shapes::random_disc(rng, 8);
            Triangulation d2 = shapes::random_disc(rng, 8);
            try {
                Complex3 k = build_disc_slice(d1, d2);
                if (!validate_slice(k, SliceKind::Disc).verdict)
                    crit[6].fail("disc-slice build fails validation");
                BoundarySplit bs = boundary_split(k, SliceKind::Disc);
                auto code = [](const std::vector<Tri3>& tris) {
                    return detail::as_red_complex(tris).canonical_code();
                };
                if (code(bs.d_red) != code(d1) || code(bs.d_blue) != code(d2))
                    crit[6].fail("disc-slice boundary differs from the inputs");
            } catch (const Error& e) {
                crit[6].fail(std::string("disc-slice build failed: ") + e.what());
            }
            if ((i + 1) % 50 == 0) std::cerr << "disc pairs: " << i + 1 << "/200\n";
        }
        for (int i = 0; i < 20; ++i) {
            Triangulation s1 = shapes::random_sphere(rng, 8);
            Triangulation s2 = shapes::random_sphere(rng, 8);
            try {
                Complex3 k = build_sphere_slice(s1, s2);
                if (!validate_slice(k, SliceKind::Sphere).verdict)
                    crit[6].fail("sphere-slice build fails validation");
                if (k.euler() != 2) crit[6].fail("sphere-slice has wrong Euler characteristic");
            } catch (const Error& e) {
                crit[6].fail(std::string("sphere-slice build failed: ") + e.what());
            }
        }
        std::cerr << "sphere pairs: 20/20\n";
    }

    // ---- report -------------------------------------------------------------
    bool all = true;
    for (std::size_t i = 0; i < crit.size(); ++i) {
        std::cout << "criterion " << i + 1 << ": " << (crit[i].pass ? "pass" : "fail");
        if (!crit[i].pass) std::cout << " (" << crit[i].note << ")";
        std::cout << "\n";
        all = all && crit[i].pass;
    }
    return all ? 0 : 1;
}
