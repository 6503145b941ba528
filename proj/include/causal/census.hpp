#ifndef CAUSAL_CENSUS_HPP
#define CAUSAL_CENSUS_HPP

// Exhaustive censuses on both sides of the midsection correspondence:
// membership-passing 2-complexes (directly for discs, via slice search with
// prescribed sphere boundaries for spheres), independently generated slices
// by tetrahedron gluing, round-trip verification between the two, and the
// census of 2-dimensional cylinder sides with triangle boundaries.

#include <algorithm>
#include <array>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "causal/build_slice.hpp"
#include "causal/conditions.hpp"
#include "causal/enumerate.hpp"
#include "causal/reconstruct.hpp"

namespace causal {

inline constexpr std::size_t kDiscCensusBudget = 9;
inline constexpr std::size_t kSphereCensusBudget = 13;
inline constexpr std::size_t kSliceCensusBudget = 6;

/// One census member: canonical code plus a small shape summary.
struct CensusEntry {
    std::string code;
    std::size_t red = 0;       // red triangles / (3,1) tetrahedra
    std::size_t blue = 0;      // blue triangles / (1,3) tetrahedra
    std::size_t quads = 0;     // quadrangles / (2,2) tetrahedra
    std::size_t vertices = 0;  // vertices of the 2-complex

    nlohmann::json to_json() const {
        return {{"code", code},
                {"red", red},
                {"blue", blue},
                {"quads", quads},
                {"vertices", vertices}};
    }
};

/// All census members of one kind and size (cells for midsections,
/// tetrahedra for slices), sorted by code.
struct CensusRecord {
    MidsectionKind kind = MidsectionKind::Disc;
    std::size_t size = 0;
    std::vector<CensusEntry> entries;

    std::size_t count() const { return entries.size(); }

    nlohmann::json to_json() const {
        nlohmann::json list = nlohmann::json::array();
        for (const CensusEntry& e : entries) list.push_back(e.to_json());
        return {{"kind", to_string(kind)}, {"size", size}, {"count", count()},
                {"entries", list}};
    }
};

namespace detail {

inline CensusEntry census_entry(const SurfaceComplex& s) {
    return {s.canonical_code(), s.count_cells(CellKind::RedTriangle),
            s.count_cells(CellKind::BlueTriangle), s.count_cells(CellKind::Quadrangle),
            s.num_vertices()};
}

// ---- exhaustive small sphere triangulations --------------------------------

/// All triangulations of the 2-sphere with exactly n triangles (n even, on
/// n/2+2 vertices), one per isomorphism class, by filtered subset search.
inline std::vector<Triangulation> sphere_triangulations(std::size_t n) {
    std::vector<Triangulation> out;
    if (n < 4 || n % 2 != 0) return out;
    const VertexId nv = static_cast<VertexId>(n / 2 + 2);
    std::vector<Tri3> all;
    for (VertexId a = 0; a < nv; ++a)
        for (VertexId b = a + 1; b < nv; ++b)
            for (VertexId c = b + 1; c < nv; ++c) all.push_back(tri3(a, b, c));
    std::set<std::string> seen;
    std::vector<std::size_t> pick;
    std::function<void(std::size_t)> choose = [&](std::size_t from) {
        if (pick.size() == n) {
            Triangulation tris;
            std::vector<char> used(static_cast<std::size_t>(nv), 0);
            for (std::size_t i : pick) {
                tris.push_back(all[i]);
                for (VertexId v : all[i]) used[static_cast<std::size_t>(v)] = 1;
            }
            if (std::find(used.begin(), used.end(), 0) != used.end()) return;
            if (triangle_surface(tris) != TriSurface::Sphere) return;
            if (seen.insert(as_red_complex(tris).canonical_code()).second)
                out.push_back(std::move(tris));
            return;
        }
        if (all.size() - from < n - pick.size()) return;
        for (std::size_t i = from; i < all.size(); ++i) {
            pick.push_back(i);
            choose(i + 1);
            pick.pop_back();
        }
    };
    choose(0);
    return out;
}

// ---- sphere midsections via slice search -----------------------------------

/// Every sphere-slice with boundary spheres isomorphic to fixed labelled
/// copies of dr and db and at most `budget` (2,2) tetrahedra.  A slice is
/// a blue apex per red triangle, a red apex per blue triangle, and for each
/// red edge a simple path of blue vertices joining the apexes of its two
/// triangles (its fan of (2,2) tetrahedra); dually for blue edges, which the
/// final validation enforces.
inline void sphere_slices_over(const Triangulation& dr, const Triangulation& db_in,
                               std::size_t budget,
                               const std::function<void(const Complex3&)>& emit) {
    VertexId vr = 0;
    for (const Tri3& t : dr) vr = std::max(vr, t[2] + 1);
    Triangulation db;
    for (const Tri3& t : db_in) db.push_back(tri3(t[0] + vr, t[1] + vr, t[2] + vr));
    VertexId vb = 0;
    for (const Tri3& t : db) vb = std::max(vb, t[2] + 1);

    std::vector<CVertex> verts;
    for (VertexId v = 0; v < vr; ++v) verts.push_back({v, Colour::Red});
    for (VertexId v = vr; v < vb; ++v) verts.push_back({v, Colour::Blue});

    // edges with their two adjacent triangles
    auto edge_pairs = [](const Triangulation& tris) {
        std::map<Edge3, std::vector<std::size_t>> at;
        for (std::size_t i = 0; i < tris.size(); ++i)
            for (int a = 0; a < 3; ++a)
                for (int b = a + 1; b < 3; ++b)
                    at[edge3(tris[i][static_cast<std::size_t>(a)],
                             tris[i][static_cast<std::size_t>(b)])]
                        .push_back(i);
        return at;
    };
    std::map<Edge3, std::vector<std::size_t>> red_edges = edge_pairs(dr);
    std::map<Edge3, std::vector<std::size_t>> blue_edges = edge_pairs(db);

    // all-pairs skeleton distances by BFS
    auto distances = [](const std::map<Edge3, std::vector<std::size_t>>& edges, VertexId lo,
                        VertexId hi) {
        std::map<VertexId, std::vector<VertexId>> adj;
        for (const auto& [e, ts] : edges) {
            adj[e[0]].push_back(e[1]);
            adj[e[1]].push_back(e[0]);
        }
        std::map<std::pair<VertexId, VertexId>, int> d;
        for (VertexId s = lo; s < hi; ++s) {
            std::vector<VertexId> frontier = {s};
            d[{s, s}] = 0;
            for (int depth = 1; !frontier.empty(); ++depth) {
                std::vector<VertexId> next;
                for (VertexId u : frontier)
                    for (VertexId w : adj[u])
                        if (!d.count({s, w})) {
                            d[{s, w}] = depth;
                            next.push_back(w);
                        }
                frontier = std::move(next);
            }
        }
        return d;
    };
    std::map<std::pair<VertexId, VertexId>, int> dist_b = distances(blue_edges, vr, vb);
    std::map<std::pair<VertexId, VertexId>, int> dist_r = distances(red_edges, 0, vr);

    // simple paths between blue vertices, by length
    std::map<VertexId, std::vector<VertexId>> blue_adj;
    for (const auto& [e, ts] : blue_edges) {
        blue_adj[e[0]].push_back(e[1]);
        blue_adj[e[1]].push_back(e[0]);
    }
    auto simple_paths = [&](VertexId from, VertexId to, std::size_t maxlen) {
        std::vector<std::vector<VertexId>> paths;
        std::vector<VertexId> cur = {from};
        std::set<VertexId> on = {from};
        std::function<void()> walk = [&]() {
            if (cur.back() == to) {
                paths.push_back(cur);
                return;
            }
            if (cur.size() > maxlen) return;
            for (VertexId w : blue_adj[cur.back()])
                if (!on.count(w)) {
                    cur.push_back(w);
                    on.insert(w);
                    walk();
                    on.erase(w);
                    cur.pop_back();
                }
        };
        if (from == to)
            paths.push_back(cur);
        else
            walk();
        return paths;
    };

    std::vector<VertexId> red_apex(dr.size()), blue_apex(db.size());
    std::vector<std::pair<Edge3, std::array<std::size_t, 2>>> rlist, bllist;
    for (const auto& [e, ts] : red_edges) rlist.push_back({e, {ts[0], ts[1]}});
    for (const auto& [e, ts] : blue_edges) bllist.push_back({e, {ts[0], ts[1]}});

    auto assignment_cost = [&]() {  // lower bound on (2,2) tetrahedra needed
        int red_cost = 0, blue_cost = 0;
        for (const auto& [e, ts] : rlist)
            red_cost += dist_b.at({red_apex[ts[0]], red_apex[ts[1]]});
        for (const auto& [e, ts] : bllist)
            blue_cost += dist_r.at({blue_apex[ts[0]], blue_apex[ts[1]]});
        return std::max(red_cost, blue_cost);
    };

    auto try_complete = [&]() {
        if (static_cast<std::size_t>(assignment_cost()) > budget) return;
        // one simple path per red edge, total length within budget
        std::vector<Tetra> base;
        for (std::size_t i = 0; i < dr.size(); ++i)
            base.emplace_back(dr[i][0], dr[i][1], dr[i][2], red_apex[i]);
        for (std::size_t i = 0; i < db.size(); ++i)
            base.emplace_back(db[i][0], db[i][1], db[i][2], blue_apex[i]);
        std::vector<Tetra> quads;
        std::function<void(std::size_t, std::size_t)> pick = [&](std::size_t ei,
                                                                 std::size_t left) {
            if (ei == rlist.size()) {
                std::vector<Tetra> tetras = base;
                tetras.insert(tetras.end(), quads.begin(), quads.end());
                try {
                    Complex3 k = Complex3::build(verts, tetras);
                    if (k.euler() != 2) return;
                    if (require_slice_structure(k) != SliceKind::Sphere) return;
                    emit(k);
                } catch (const Error&) {
                }
                return;
            }
            const auto& [e, ts] = rlist[ei];
            for (const auto& path :
                 simple_paths(red_apex[ts[0]], red_apex[ts[1]], left + 1)) {
                if (path.size() - 1 > left) continue;
                std::size_t added = 0;
                for (std::size_t j = 0; j + 1 < path.size(); ++j, ++added)
                    quads.emplace_back(e[0], e[1], path[j], path[j + 1]);
                pick(ei + 1, left - added);
                quads.erase(quads.end() - static_cast<long>(added), quads.end());
            }
        };
        pick(0, budget);
    };

    // apex assignment with incremental distance pruning
    std::function<void(std::size_t, int)> assign_blue = [&](std::size_t i, int cost) {
        if (i == db.size()) {
            try_complete();
            return;
        }
        for (VertexId a = 0; a < vr; ++a) {
            blue_apex[i] = a;
            int c = cost;
            for (const auto& [e, ts] : bllist) {
                std::size_t other = ts[0] == i ? ts[1] : ts[0];
                if ((ts[0] == i || ts[1] == i) && other < i)
                    c += dist_r.at({a, blue_apex[other]});
            }
            if (static_cast<std::size_t>(c) <= budget) assign_blue(i + 1, c);
        }
    };
    std::function<void(std::size_t, int)> assign_red = [&](std::size_t i, int cost) {
        if (i == dr.size()) {
            assign_blue(0, 0);
            return;
        }
        for (VertexId a = vr; a < vb; ++a) {
            red_apex[i] = a;
            int c = cost;
            for (const auto& [e, ts] : rlist) {
                std::size_t other = ts[0] == i ? ts[1] : ts[0];
                if ((ts[0] == i || ts[1] == i) && other < i)
                    c += dist_b.at({a, red_apex[other]});
            }
            if (static_cast<std::size_t>(c) <= budget) assign_red(i + 1, c);
        }
    };
    assign_red(0, 0);
}

/// All sphere midsections with at most max_cells cells, one per class,
/// obtained as midsections of exhaustively searched sphere-slices.
inline std::map<std::string, SurfaceComplex> sphere_midsection_census(std::size_t max_cells) {
    std::map<std::string, SurfaceComplex> found;
    for (std::size_t r = 4; r + 4 <= max_cells; r += 2) {
        for (std::size_t b = 4; r + b <= max_cells; b += 2) {
            std::size_t budget = max_cells - r - b;
            for (const Triangulation& dr : sphere_triangulations(r))
                for (const Triangulation& db : sphere_triangulations(b))
                    sphere_slices_over(dr, db, budget, [&](const Complex3& k) {
                        SurfaceComplex s = midsection(k).first;
                        if (!membership(s, MidsectionKind::Sphere).verdict) return;
                        found.try_emplace(s.canonical_code(), std::move(s));
                    });
        }
    }
    return found;
}

}  // namespace detail

/// All membership-passing midsections with at most max_cells cells, one per
/// colour-preserving isomorphism class, ordered by size then canonical code.
inline std::vector<SurfaceComplex> enumerate_midsection_complexes(MidsectionKind kind,
                                                                  std::size_t max_cells) {
    std::vector<SurfaceComplex> out;
    if (kind == MidsectionKind::Disc) {
        if (max_cells > kDiscCensusBudget)
            throw Error(Errc::BudgetExceeded, "disc census supports at most 9 cells");
        enumerate_valid_complexes(max_cells, [&](const SurfaceComplex& s) {
            if (membership(s, MidsectionKind::Disc).verdict) out.push_back(s);
        });
    } else {
        if (max_cells > kSphereCensusBudget)
            throw Error(Errc::BudgetExceeded, "sphere census supports at most 13 cells");
        std::map<std::string, SurfaceComplex> found = detail::sphere_midsection_census(max_cells);
        std::vector<const SurfaceComplex*> members;
        for (const auto& [code, s] : found) members.push_back(&s);
        std::stable_sort(members.begin(), members.end(),
                         [](const SurfaceComplex* a, const SurfaceComplex* b) {
                             return a->num_cells() < b->num_cells();
                         });
        for (const SurfaceComplex* s : members) out.push_back(*s);
    }
    return out;
}

/// Census of membership-passing midsections, one record per size 1..max_cells.
inline std::vector<CensusRecord> enumerate_midsections(MidsectionKind kind,
                                                       std::size_t max_cells) {
    std::vector<CensusRecord> records;
    for (std::size_t size = 1; size <= max_cells; ++size)
        records.push_back({kind, size, {}});
    for (const SurfaceComplex& s : enumerate_midsection_complexes(kind, max_cells))
        records[s.num_cells() - 1].entries.push_back(detail::census_entry(s));
    return records;
}

namespace detail {

/// Manifoldness of a 3-complex via links: every edge link must be a single
/// simple path or cycle, and every vertex link a disc (all slice vertices lie
/// on the boundary).  Distinguishes genuine slices from pinched complexes
/// that still pass the boundary-structure checks.
inline bool manifold_links(const Complex3& k) {
    std::map<Edge3, std::vector<Edge3>> opposite;  // edge -> opposite edges
    std::map<VertexId, std::vector<Tri3>> vlink;   // vertex -> opposite faces
    for (const Tetra& t : k.tetras())
        for (int i = 0; i < 4; ++i) {
            std::array<VertexId, 3> rest;
            int r = 0;
            for (int j = 0; j < 4; ++j)
                if (j != i) rest[static_cast<std::size_t>(r++)] = t.v[static_cast<std::size_t>(j)];
            vlink[t.v[static_cast<std::size_t>(i)]].push_back(tri3(rest[0], rest[1], rest[2]));
            for (int j = i + 1; j < 4; ++j) {
                std::array<VertexId, 2> opp;
                int o = 0;
                for (int l = 0; l < 4; ++l)
                    if (l != i && l != j) opp[static_cast<std::size_t>(o++)] = t.v[static_cast<std::size_t>(l)];
                opposite[edge3(t.v[static_cast<std::size_t>(i)], t.v[static_cast<std::size_t>(j)])]
                    .push_back(edge3(opp[0], opp[1]));
            }
        }
    for (const auto& [e, link] : opposite) {
        std::map<VertexId, int> deg;
        for (const Edge3& l : link) {
            ++deg[l[0]];
            ++deg[l[1]];
        }
        int odd = 0;
        for (const auto& [v, d] : deg) {
            if (d > 2) return false;
            if (d == 1) ++odd;
        }
        if (odd != 0 && odd != 2) return false;
        std::map<VertexId, std::vector<VertexId>> adj;
        for (const Edge3& l : link) {
            adj[l[0]].push_back(l[1]);
            adj[l[1]].push_back(l[0]);
        }
        std::set<VertexId> seen = {deg.begin()->first};
        std::vector<VertexId> queue = {deg.begin()->first};
        while (!queue.empty()) {
            VertexId u = queue.back();
            queue.pop_back();
            for (VertexId w : adj[u])
                if (seen.insert(w).second) queue.push_back(w);
        }
        if (seen.size() != deg.size()) return false;
    }
    for (const auto& [v, link] : vlink)
        if (triangle_surface(link) != TriSurface::Disc) return false;
    return true;
}

/// Cheap isomorphism invariant of a slice for census bucketing.
inline std::string slice_invariant(const Complex3& k) {
    std::map<VertexId, int> deg;
    std::map<VertexId, std::set<VertexId>> nbr;
    std::size_t types[5] = {0, 0, 0, 0, 0};
    for (const Tetra& t : k.tetras()) {
        ++types[static_cast<std::size_t>(k.red_count(t))];
        for (VertexId v : t.v) {
            ++deg[v];
            for (VertexId w : t.v)
                if (w != v) nbr[v].insert(w);
        }
    }
    std::vector<std::array<int, 3>> sig;
    for (const auto& [v, c] : k.vertex_colours())
        sig.push_back({c == Colour::Red ? 0 : 1, deg[v], static_cast<int>(nbr[v].size())});
    std::sort(sig.begin(), sig.end());
    std::string out;
    for (std::size_t i = 1; i < 5; ++i) out += std::to_string(types[i]) + ";";
    for (const auto& s : sig)
        out += std::to_string(s[0]) + "," + std::to_string(s[1]) + "," + std::to_string(s[2]) + "|";
    return out;
}

}  // namespace detail

/// Every valid slice of the kind with at most max_tetras tetrahedra, one per
/// colour-preserving isomorphism class, by direct gluing search (independent
/// of the midsection machinery except for reporting).
inline std::vector<Complex3> enumerate_slice_complexes(SliceKind kind, std::size_t max_tetras) {
    if (max_tetras > kSliceCensusBudget)
        throw Error(Errc::BudgetExceeded, "slice census supports at most 6 tetrahedra");
    std::vector<Complex3> out;
    if (max_tetras == 0) return out;
    std::vector<Complex3> level;
    {  // the three tetrahedron colourings
        auto seed = [&](int reds) {
            std::vector<CVertex> vs;
            for (VertexId v = 0; v < 4; ++v)
                vs.push_back({v, v < reds ? Colour::Red : Colour::Blue});
            level.push_back(Complex3::build(vs, {Tetra(0, 1, 2, 3)}));
        };
        seed(1);
        seed(2);
        seed(3);
    }
    auto harvest = [&](const Complex3& k) {
        try {
            if (detail::require_slice_structure(k) != kind) return;
            if (k.euler() != (kind == SliceKind::Disc ? 1 : 2)) return;
            if (!detail::manifold_links(k)) return;
            out.push_back(k);
        } catch (const Error&) {
        }
    };
    for (std::size_t size = 1; size <= max_tetras; ++size) {
        for (const Complex3& k : level) harvest(k);
        if (size == max_tetras) break;
        std::map<std::string, std::vector<Complex3>> next;
        for (const Complex3& k : level) {
            std::map<Tri3, int> cnt;
            for (const Tetra& t : k.tetras())
                for (const Tri3& f : t.faces()) ++cnt[f];
            VertexId fresh = 0;
            for (const auto& [v, c] : k.vertex_colours()) fresh = std::max(fresh, v + 1);
            std::vector<std::pair<VertexId, Colour>> fourth;
            for (const auto& [v, c] : k.vertex_colours()) fourth.push_back({v, c});
            fourth.push_back({fresh, Colour::Red});
            fourth.push_back({fresh, Colour::Blue});
            for (const auto& [f, c] : cnt) {
                if (c != 1) continue;
                for (const auto& [w, wcol] : fourth) {
                    if (w == f[0] || w == f[1] || w == f[2]) continue;
                    Tetra t(f[0], f[1], f[2], w);
                    const auto& ts = k.tetras();
                    if (std::find(ts.begin(), ts.end(), t) != ts.end()) continue;
                    int reds = (k.colour(f[0]) == Colour::Red) + (k.colour(f[1]) == Colour::Red) +
                               (k.colour(f[2]) == Colour::Red) + (wcol == Colour::Red);
                    if (reds == 0 || reds == 4) continue;
                    bool fits = true;
                    for (const Tri3& g : t.faces()) {
                        auto it = cnt.find(g);
                        if (it != cnt.end() && it->second >= 2 && g != f) fits = false;
                        if (g == f && cnt.at(f) != 1) fits = false;
                    }
                    if (!fits) continue;
                    std::vector<CVertex> vs;
                    for (const auto& [v, col] : k.vertex_colours()) vs.push_back({v, col});
                    if (w == fresh) vs.push_back({fresh, wcol});
                    std::vector<Tetra> tetras = ts;
                    tetras.push_back(t);
                    std::sort(tetras.begin(), tetras.end());
                    Complex3 grown = Complex3::build(vs, tetras);
                    std::vector<Complex3>& bucket = next[detail::slice_invariant(grown)];
                    bool fresh_class = true;
                    for (const Complex3& seen : bucket)
                        if (isomorphic3(seen, grown)) {
                            fresh_class = false;
                            break;
                        }
                    if (fresh_class) bucket.push_back(std::move(grown));
                }
            }
        }
        level.clear();
        for (auto& [key, bucket] : next)
            for (Complex3& k : bucket) level.push_back(std::move(k));
    }
    return out;
}

/// Census of valid slices by size, generated independently of the midsection
/// maps; entries are reported under their midsection codes.
inline std::vector<CensusRecord> enumerate_slices_bruteforce(SliceKind kind,
                                                             std::size_t max_tetras) {
    MidsectionKind mk = kind == SliceKind::Disc ? MidsectionKind::Disc : MidsectionKind::Sphere;
    std::vector<CensusRecord> records;
    for (std::size_t size = 1; size <= max_tetras; ++size) records.push_back({mk, size, {}});
    for (const Complex3& k : enumerate_slice_complexes(kind, max_tetras)) {
        std::size_t types[5] = {0, 0, 0, 0, 0};
        for (const Tetra& t : k.tetras()) ++types[static_cast<std::size_t>(k.red_count(t))];
        records[k.num_tetras() - 1].entries.push_back({midsection(k).first.canonical_code(),
                                                       types[3], types[1], types[2],
                                                       k.num_vertices()});
    }
    for (CensusRecord& r : records)
        std::sort(r.entries.begin(), r.entries.end(),
                  [](const CensusEntry& a, const CensusEntry& b) { return a.code < b.code; });
    return records;
}

/// Round-trip verification: midsections reconstruct to slices whose
/// midsections have the same code; slices survive midsection+reconstruct up
/// to isomorphism.
struct RoundtripReport {
    MidsectionKind kind = MidsectionKind::Disc;
    std::size_t midsections_checked = 0;
    std::size_t slices_checked = 0;
    std::vector<std::string> failures;

    bool clean() const { return failures.empty(); }

    nlohmann::json to_json() const {
        return {{"kind", to_string(kind)},
                {"midsections_checked", midsections_checked},
                {"slices_checked", slices_checked},
                {"failures", failures}};
    }
};

/// Round trip over explicitly given census members.
inline RoundtripReport roundtrip_members(MidsectionKind kind,
                                         const std::vector<SurfaceComplex>& members) {
    RoundtripReport report{kind, 0, 0, {}};
    for (const SurfaceComplex& s : members) {
        ++report.midsections_checked;
        try {
            Complex3 k = reconstruct(s, kind);
            if (midsection(k).first.canonical_code() != s.canonical_code())
                report.failures.push_back("midsection code changed: " + s.canonical_code());
        } catch (const Error& e) {
            report.failures.push_back(std::string("reconstruct failed: ") + e.what());
        }
    }
    return report;
}

/// Full round trip: all census midsections up to max_cells, plus all
/// independently generated slices up to min(max_cells, 5) tetrahedra.
inline RoundtripReport roundtrip_report(MidsectionKind kind, std::size_t max_cells) {
    RoundtripReport report =
        roundtrip_members(kind, enumerate_midsection_complexes(kind, max_cells));
    SliceKind sk = slice_kind_of(kind);
    for (const Complex3& k : enumerate_slice_complexes(sk, std::min<std::size_t>(max_cells, 5))) {
        ++report.slices_checked;
        try {
            Complex3 back = reconstruct(midsection(k).first, kind);
            if (!isomorphic3(back, k)) report.failures.push_back("slice not recovered");
        } catch (const Error& e) {
            report.failures.push_back(std::string("slice round trip failed: ") + e.what());
        }
    }
    return report;
}

/// A 2-dimensional causal cylinder side with single-triangle boundary
/// components: red boundary cycle 0-1-2, blue boundary cycle 3-4-5, and the
/// six side triangles in cyclic order around the cylinder (one forward
/// triangle per red edge, one backward per blue edge).  Cyclic order matters:
/// a side may traverse the same vertex-pair edge more than twice (the strip
/// whose forward triangles all share one apex does), so the triangle list is
/// a walk, not a set.
struct SideComplex {
    std::vector<Tri3> triangles;  // cyclic order; forward = two red vertices
    std::string word;             // canonical "f"/"b" pattern, one per triangle

    static Colour colour(VertexId v) { return v < 3 ? Colour::Red : Colour::Blue; }
};

namespace detail {

/// Lexicographically smallest rotation or reflection of a cyclic word —
/// the combinatorial-equivalence invariant of a triangle-boundary side.
inline std::string canonical_side_word(const std::string& w) {
    std::string best = w;
    const std::string r(w.rbegin(), w.rend());
    for (const std::string* base : {&w, &r})
        for (std::size_t i = 0; i < base->size(); ++i) {
            std::string rot = base->substr(i) + base->substr(0, i);
            if (rot < best) best = rot;
        }
    return best;
}

/// Realises a forward/backward word as a concrete strip: walk around the
/// cylinder advancing along the red cycle on 'f' and the blue cycle on 'b'.
inline std::vector<Tri3> side_triangles_of_word(const std::string& w) {
    std::vector<Tri3> tris;
    VertexId i = 0, j = 0;  // position on the red / blue boundary cycle
    for (char c : w) {
        if (c == 'f') {
            tris.push_back({i, static_cast<VertexId>((i + 1) % 3),
                            static_cast<VertexId>(3 + j)});
            i = (i + 1) % 3;
        } else {
            tris.push_back({static_cast<VertexId>(3 + j),
                            static_cast<VertexId>(3 + (j + 1) % 3), i});
            j = (j + 1) % 3;
        }
    }
    return tris;
}

}  // namespace detail

/// All cylinder sides with triangle boundary components, one per
/// combinatorial-equivalence class.  A side is three forward and three
/// backward triangles in some cyclic order; two sides are equivalent when
/// their cyclic patterns agree up to rotation and reflection, which also
/// determines the strip itself up to relabelling (adjacent triangles share
/// their time-like edge, so the pattern propagates all apex choices).
inline std::vector<SideComplex> enumerate_triangle_sides() {
    std::set<std::string> classes;
    for (unsigned mask = 0; mask < 64; ++mask) {
        std::string w;
        for (unsigned i = 0; i < 6; ++i) w += (mask >> i) & 1 ? 'f' : 'b';
        if (std::count(w.begin(), w.end(), 'f') != 3) continue;
        classes.insert(detail::canonical_side_word(w));
    }
    std::vector<SideComplex> out;
    for (const std::string& w : classes)
        out.push_back({detail::side_triangles_of_word(w), w});
    return out;
}

/// The canonical pattern of a slice's side (from boundary_split's cyclically
/// ordered triangle list); classifies triangle-boundary sides among the
/// enumerate_triangle_sides classes.
inline std::string side_word(const Complex3& k, const BoundarySplit& split) {
    std::string w;
    for (const Tri3& t : split.side) w += k.red_count(t) == 2 ? 'f' : 'b';
    return detail::canonical_side_word(w);
}

}  // namespace causal

#endif  // CAUSAL_CENSUS_HPP
