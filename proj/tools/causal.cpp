// Command-line front end: validation, the midsection map and its inverse,
// the constructive slice builders, the sphere-to-disc cut, census
// enumeration, and round-trip verification over JSON files.
//
// Exit codes: 0 success/valid, 1 semantically invalid input, 2 I/O, parse,
// or usage errors.

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "causal/census.hpp"
#include "causal/io.hpp"
#include "causal/validate.hpp"

using namespace causal;
using nlohmann::json;

namespace {

constexpr int kOk = 0;
constexpr int kInvalid = 1;
constexpr int kIoError = 2;

/// Stable 64-bit FNV-1a hash — shard assignment must not depend on the
/// standard library's unspecified std::hash.
std::uint64_t fnv1a(const std::string& s) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

struct Options {
    std::string format = "text";
    int jobs = 1;  // accepted for interface stability; runs use one worker
};

void emit(const Options& opt, const json& j, const std::string& text) {
    if (opt.format == "json")
        std::cout << j.dump(2) << "\n";
    else
        std::cout << text << "\n";
}

int report_verdict(const Options& opt, bool valid, const json& report) {
    emit(opt, report, std::string(valid ? "valid" : "invalid") +
                          (valid ? "" : ": " + report.dump()));
    return valid ? kOk : kInvalid;
}

MidsectionKind parse_mid_kind(const std::string& kind) {
    return kind == "sphere" || kind == "midsection-sphere" ? MidsectionKind::Sphere
                                                           : MidsectionKind::Disc;
}

int cmd_validate(const Options& opt, const std::string& file, const std::string& kind) {
    json j = io::load_json(file);
    if (kind == "disc" || kind == "sphere") {
        Complex3 k = io::slice_from_json(j);
        SliceKind sk = kind == "disc" ? SliceKind::Disc : SliceKind::Sphere;
        SliceReport report = validate_slice(k, sk);
        return report_verdict(opt, report.verdict, report.to_json());
    }
    SurfaceComplex s = io::midsection_from_json(j);
    ConditionReport report = membership(s, parse_mid_kind(kind));
    return report_verdict(opt, report.verdict, report.to_json());
}

int cmd_midsection(const Options& opt, const std::string& file, const std::string& out) {
    Complex3 k = io::slice_from_json(io::load_json(file));
    SurfaceComplex s = midsection(k).first;
    io::save_json(out, io::midsection_to_json(s));
    emit(opt, {{"cells", s.num_cells()}, {"vertices", s.num_vertices()}},
         "midsection with " + std::to_string(s.num_cells()) + " cells -> " + out);
    return kOk;
}

int cmd_reconstruct(const Options& opt, const std::string& file, const std::string& out) {
    SurfaceComplex s = io::midsection_from_json(io::load_json(file));
    MidsectionKind kind = s.topology() == SurfaceTopology::Sphere ? MidsectionKind::Sphere
                                                                  : MidsectionKind::Disc;
    Complex3 k = reconstruct(s, kind);
    io::save_json(out, io::slice_to_json(k));
    emit(opt, {{"kind", to_string(kind)}, {"tetrahedra", k.num_tetras()}},
         std::string(to_string(kind)) + "-slice with " + std::to_string(k.num_tetras()) +
             " tetrahedra -> " + out);
    return kOk;
}

int cmd_build(const Options& opt, const std::string& red, const std::string& blue,
              const std::string& out, bool sphere) {
    Triangulation d1 = io::triangulation_from_json(io::load_json(red));
    Triangulation d2 = io::triangulation_from_json(io::load_json(blue));
    Complex3 k = sphere ? build_sphere_slice(d1, d2) : build_disc_slice(d1, d2);
    io::save_json(out, io::slice_to_json(k));
    emit(opt, {{"tetrahedra", k.num_tetras()}},
         "slice with " + std::to_string(k.num_tetras()) + " tetrahedra -> " + out);
    return kOk;
}

int cmd_cut(const Options& opt, const std::string& file, const std::string& out) {
    SurfaceComplex s = io::midsection_from_json(io::load_json(file));
    CutResult cut = cut_to_disc(s);
    io::save_json(out, io::midsection_to_json(cut.disc));
    emit(opt, cut.to_json(),
         "removed " + std::to_string(cut.cluster.size()) + " red cells and a strip of " +
             std::to_string(cut.strip.size()) + " quadrangles; disc with " +
             std::to_string(cut.disc.num_cells()) + " cells -> " + out);
    return kOk;
}

int cmd_enumerate(const Options& opt, const std::string& kind, std::size_t max_cells,
                  unsigned shards, unsigned shard, const std::string& out_dir) {
    MidsectionKind mk = parse_mid_kind(kind);
    std::vector<CensusRecord> records = enumerate_midsections(mk, max_cells);
    if (shards > 1)
        for (CensusRecord& r : records) {
            std::vector<CensusEntry> mine;
            for (CensusEntry& e : r.entries)
                if (fnv1a(e.code) % shards == shard) mine.push_back(std::move(e));
            r.entries = std::move(mine);
        }
    std::filesystem::create_directories(out_dir);
    json counts = json::array();
    std::string table;
    for (const CensusRecord& r : records) {
        std::string name = std::string(to_string(mk)) + "-" +
                           std::to_string(r.size) + ".jsonl";
        std::ofstream f(std::filesystem::path(out_dir) / name);
        if (!f) throw Error(Errc::ParseError, "cannot write to " + out_dir);
        f << io::census_jsonl(r);
        counts.push_back({{"size", r.size}, {"count", r.count()}, {"file", name}});
        table += "size " + std::to_string(r.size) + ": " + std::to_string(r.count()) + "\n";
    }
    emit(opt, {{"kind", to_string(mk)}, {"records", counts}},
         table + "census -> " + out_dir);
    return kOk;
}

int cmd_roundtrip(const Options& opt, const std::string& kind, std::size_t max_cells) {
    RoundtripReport report = roundtrip_report(parse_mid_kind(kind), max_cells);
    emit(opt, report.to_json(),
         "midsections " + std::to_string(report.midsections_checked) + ", slices " +
             std::to_string(report.slices_checked) + ", failures " +
             std::to_string(report.failures.size()));
    return report.clean() ? kOk : kInvalid;
}

int cmd_stats(const Options& opt, const std::string& dir) {
    std::map<std::string, std::size_t> counts;
    for (const auto& entry : std::filesystem::directory_iterator(dir)) {
        if (entry.path().extension() != ".jsonl") continue;
        std::ifstream f(entry.path());
        std::size_t n = 0;
        std::string line;
        while (std::getline(f, line))
            if (!line.empty()) {
                json j = json::parse(line, nullptr, false);
                if (j.is_discarded() || !j.contains("code"))
                    throw Error(Errc::ParseError,
                                "bad census line in " + entry.path().string());
                ++n;
            }
        counts[entry.path().filename().string()] = n;
    }
    json j = json::array();
    std::string table;
    std::size_t total = 0;
    for (const auto& [name, n] : counts) {
        j.push_back({{"file", name}, {"count", n}});
        table += name + ": " + std::to_string(n) + "\n";
        total += n;
    }
    emit(opt, {{"files", j}, {"total", total}}, table + "total: " + std::to_string(total));
    return kOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"causal slices and their coloured midsections"};
    app.require_subcommand(1);
    Options opt;
    app.add_option("--format", opt.format, "output format")
        ->check(CLI::IsMember({"text", "json"}));
    app.add_option("--jobs", opt.jobs, "worker count (runs are single-threaded)")
        ->check(CLI::PositiveNumber);

    std::function<int()> run;

    std::string file, out, kind, red, blue;
    std::size_t max_cells = 7;
    unsigned shards = 1, shard = 0;

    CLI::App* validate = app.add_subcommand("validate", "check a slice or midsection file");
    validate->add_option("file", file)->required();
    validate->add_option("--kind", kind)
        ->required()
        ->check(CLI::IsMember({"disc", "sphere", "midsection-disc", "midsection-sphere"}));
    validate->callback([&] { run = [&] { return cmd_validate(opt, file, kind); }; });

    CLI::App* mid = app.add_subcommand("midsection", "map a slice to its midsection");
    mid->add_option("file", file)->required();
    mid->add_option("-o,--output", out)->required();
    mid->callback([&] { run = [&] { return cmd_midsection(opt, file, out); }; });

    CLI::App* rec = app.add_subcommand("reconstruct", "map a midsection back to its slice");
    rec->add_option("file", file)->required();
    rec->add_option("-o,--output", out)->required();
    rec->callback([&] { run = [&] { return cmd_reconstruct(opt, file, out); }; });

    CLI::App* bs = app.add_subcommand("build-slice", "build a disc-slice from two disc triangulations");
    bs->add_option("--red", red)->required();
    bs->add_option("--blue", blue)->required();
    bs->add_option("-o,--output", out)->required();
    bs->callback([&] { run = [&] { return cmd_build(opt, red, blue, out, false); }; });

    CLI::App* bss = app.add_subcommand("build-sphere-slice",
                                       "build a sphere-slice from two sphere triangulations");
    bss->add_option("--red", red)->required();
    bss->add_option("--blue", blue)->required();
    bss->add_option("-o,--output", out)->required();
    bss->callback([&] { run = [&] { return cmd_build(opt, red, blue, out, true); }; });

    CLI::App* cut = app.add_subcommand("cut", "cut a sphere midsection into a disc midsection");
    cut->add_option("file", file)->required();
    cut->add_option("-o,--output", out)->required();
    cut->callback([&] { run = [&] { return cmd_cut(opt, file, out); }; });

    CLI::App* enumerate = app.add_subcommand("enumerate", "write the midsection census");
    enumerate->add_option("--kind", kind)
        ->required()
        ->check(CLI::IsMember({"disc", "sphere"}));
    enumerate->add_option("--max-cells", max_cells)->required();
    enumerate->add_option("--shards", shards)->check(CLI::PositiveNumber);
    enumerate->add_option("--shard", shard);
    enumerate->add_option("-o,--output", out)->required();
    enumerate->callback([&] {
        run = [&] {
            if (shard >= shards) throw CLI::ValidationError("--shard must be below --shards");
            return cmd_enumerate(opt, kind, max_cells, shards, shard, out);
        };
    });

    CLI::App* rt = app.add_subcommand("roundtrip", "verify both directions of the correspondence");
    rt->add_option("--kind", kind)->required()->check(CLI::IsMember({"disc", "sphere"}));
    rt->add_option("--max-cells", max_cells)->required();
    rt->callback([&] { run = [&] { return cmd_roundtrip(opt, kind, max_cells); }; });

    CLI::App* stats = app.add_subcommand("stats", "summarise a census directory");
    stats->add_option("dir", file)->required();
    stats->callback([&] { run = [&] { return cmd_stats(opt, file); }; });

    // global flags (--format, --jobs) may also follow the subcommand
    for (CLI::App* sc : app.get_subcommands([](const CLI::App*) { return true; }))
        sc->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kOk : kIoError;
    }

    try {
        return run();
    } catch (const CLI::ValidationError& e) {
        std::cerr << e.what() << "\n";
        return kIoError;
    } catch (const Error& e) {
        if (e.code() == Errc::ParseError) {
            std::cerr << e.what() << "\n";
            return kIoError;
        }
        std::cerr << json{{"verdict", false},
                          {"error", to_string(e.code())},
                          {"detail", e.what()}}
                         .dump()
                  << "\n";
        return kInvalid;
    } catch (const std::filesystem::filesystem_error& e) {
        std::cerr << e.what() << "\n";
        return kIoError;
    }
}
