/*
  flipsurf: tagged triangulations of marked surfaces, flips, exchange-matrix
  mutation, exchange-graph exploration and rotation checks from one entry
  point.  Exit codes: 0 success, 1 failed checks, 2 usage errors, 3 I/O
  errors.  --emit json output is deterministic byte-for-byte.
*/

#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "flipsurf/errors.hpp"
#include "flipsurf/explorer.hpp"
#include "flipsurf/json_io.hpp"
#include "flipsurf/mcg.hpp"
#include "flipsurf/models.hpp"
#include "flipsurf/mutation.hpp"
#include "flipsurf/proofkit.hpp"
#include "flipsurf/surface.hpp"
#include "flipsurf/triangulation.hpp"

using namespace flipsurf;
using nlohmann::ordered_json;

namespace {

constexpr unsigned kDefaultSeed = 20240817;

struct CommandContext {
    std::string surface_text;
    std::string emit = "text";
    unsigned seed = kDefaultSeed;
};

MarkedSurface surface_or_throw(const CommandContext& ctx) {
    MarkedSurface s = parse_surface(ctx.surface_text);
    require_valid(s);
    return s;
}

ordered_json report_json(const CheckReport& rep) {
    ordered_json checks = ordered_json::array();
    for (const CheckItem& item : rep.items) {
        ordered_json c;
        c["name"] = item.name;
        c["pass"] = item.pass;
        c["detail"] = item.detail;
        checks.push_back(std::move(c));
    }
    ordered_json j;
    j["schema"] = 1;
    j["checks"] = std::move(checks);
    j["pass"] = rep.all_pass();
    return j;
}

void print_report(const CheckReport& rep, const std::string& emit) {
    if (emit == "json") {
        std::cout << report_json(rep).dump(2) << "\n";
        return;
    }
    for (const CheckItem& item : rep.items)
        std::cout << (item.pass ? "PASS" : "FAIL") << "  " << item.name
                  << (item.detail.empty() ? "" : "  [" + item.detail + "]") << "\n";
}

int run_surface(const CommandContext& ctx) {
    MarkedSurface s = parse_surface(ctx.surface_text);
    auto reason = validate(s);
    ClusterType ct = reason ? ClusterType{} : classify_type(s);
    if (ctx.emit == "json") {
        ordered_json j;
        j["schema"] = 1;
        j["surface"] = surface_to_json(s);
        j["valid"] = !reason;
        if (reason)
            j["reason"] = *reason;
        else {
            j["rank"] = s.rank();
            j["type"] = ct.kind == SurfaceClass::TypeA   ? "A"
                        : ct.kind == SurfaceClass::TypeD ? "D"
                                                         : "other";
            if (ct.kind != SurfaceClass::Other) j["type_rank"] = ct.n;
        }
        std::cout << j.dump(2) << "\n";
    } else if (reason) {
        std::cout << "rejected: " << *reason << "\n";
    } else {
        std::cout << "valid, rank " << s.rank();
        if (ct.kind == SurfaceClass::TypeA) std::cout << ", type A_" << ct.n;
        if (ct.kind == SurfaceClass::TypeD) std::cout << ", type D_" << ct.n;
        std::cout << "\n";
    }
    return reason ? 1 : 0;
}

int run_triangulate(const CommandContext& ctx, const std::string& out_path) {
    BuiltTriangulation bt = build_canonical_triangulation(surface_or_throw(ctx));
    bt.t.validate();
    std::string text = triangulation_to_json(bt.t).dump(2) + "\n";
    if (out_path.empty())
        std::cout << text;
    else
        write_file(out_path, text);
    return 0;
}

int run_flip(const CommandContext& ctx, const std::string& file, int arc) {
    MarkedSurface s = surface_or_throw(ctx);
    TaggedTriangulation t = triangulation_from_json(ordered_json::parse(read_file(file)));
    if (t.pattern.surface != s) throw SurfaceMismatch("file surface differs from --surface");
    TaggedTriangulation flipped = t.flipped(arc);
    flipped.validate();
    std::cout << triangulation_to_json(flipped).dump(2) << "\n";
    return 0;
}

int run_rotate(const CommandContext& ctx, const std::string& file, int power) {
    MarkedSurface s = surface_or_throw(ctx);
    TaggedTriangulation t = triangulation_from_json(ordered_json::parse(read_file(file)));
    if (t.pattern.surface != s) throw SurfaceMismatch("file surface differs from --surface");
    TaggedTriangulation rotated = act(s, flipsurf::power(tagged_rotation(s), power), t);
    rotated.validate();
    std::cout << triangulation_to_json(rotated).dump(2) << "\n";
    return 0;
}

int run_order(const CommandContext& ctx) {
    MarkedSurface s = surface_or_throw(ctx);
    RotationOrder ord = rotation_order(s);
    if (ctx.emit == "json") {
        ordered_json j;
        j["schema"] = 1;
        j["surface"] = surface_to_json(s);
        j["finite"] = ord.finite;
        if (ord.finite) j["order"] = ord.order;
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << (ord.finite ? std::to_string(ord.order) : std::string("infinite"))
                  << "\n";
    }
    return 0;
}

int run_orbit(const CommandContext& ctx, const std::string& arc_text, int count) {
    MarkedSurface s = surface_or_throw(ctx);
    OrbitResult orb = orbit(s, parse_arc(s, arc_text), count);
    if (ctx.emit == "json") {
        ordered_json arcs = ordered_json::array();
        for (const ModelArc& a : orb.arcs) arcs.push_back(arc_to_string(a));
        ordered_json j;
        j["schema"] = 1;
        j["arcs"] = std::move(arcs);
        j["first_repetition"] =
            orb.first_repetition ? ordered_json(*orb.first_repetition) : ordered_json();
        std::cout << j.dump(2) << "\n";
    } else {
        for (const ModelArc& a : orb.arcs) std::cout << arc_to_string(a) << "\n";
        if (orb.first_repetition)
            std::cout << "closes after " << *orb.first_repetition << " steps\n";
        else
            std::cout << "no repetition within " << count << " steps\n";
    }
    return 0;
}

int run_explore(const CommandContext& ctx, const std::string& start, int max_vertices) {
    MarkedSurface s = surface_or_throw(ctx);
    ExchangeGraph g;
    bool use_model = true;
    try {
        model_kind(s);
    } catch (const UnsupportedSurface&) {
        use_model = false;
    }
    if (start != "canonical") {
        TaggedTriangulation t =
            triangulation_from_json(ordered_json::parse(read_file(start)));
        g = bfs_exchange_graph(t, max_vertices);
    } else if (use_model) {
        g = bfs_exchange_graph(fan_triangulation(s), max_vertices);
    } else {
        g = bfs_exchange_graph(build_canonical_triangulation(s).t, max_vertices);
    }
    if (ctx.emit == "dot")
        std::cout << export_dot(g);
    else if (ctx.emit == "json")
        std::cout << export_json(g) << "\n";
    else
        std::cout << g.vertex_count() << " vertices, " << g.edges.size() << " edges, "
                  << (g.complete ? "complete" : "truncated") << "\n";
    return 0;
}

int run_greenseq(const CommandContext& ctx, const std::string& file, int max_len) {
    MarkedSurface s = surface_or_throw(ctx);
    BMatrix b;
    bool model_start = file.empty();
    ModelTriangulation start;
    if (model_start) {
        start = fan_triangulation(s);
        b = b_matrix(to_tagged(start));
    } else {
        TaggedTriangulation t =
            triangulation_from_json(ordered_json::parse(read_file(file)));
        b = b_matrix(t);
    }
    GreenSearchResult res = find_maximal_green_sequences(b, max_len);

    if (ctx.emit == "dot") {
        std::cout << quiver_dot(quiver(b));
        return 0;
    }
    ordered_json seqs = ordered_json::array();
    for (const auto& seq : res.sequences) {
        FramedSeed seed = FramedSeed::initial(b);
        for (int k : seq) seed = mutate_framed(seed, k);
        ordered_json e;
        e["sequence"] = seq;
        auto perm = terminal_permutation(seed);
        e["terminal_permutation"] = perm ? ordered_json(*perm) : ordered_json();
        if (model_start) {
            bool match = green_endpoint_matches_rotation(start, seq);
            e["endpoint_matches_rotation"] = match;
        }
        seqs.push_back(std::move(e));
    }
    if (ctx.emit == "json") {
        ordered_json j;
        j["schema"] = 1;
        j["surface"] = surface_to_json(s);
        j["max_len"] = max_len;
        j["sequences"] = std::move(seqs);
        j["truncated_branches"] = res.truncated_branches;
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << res.sequences.size() << " maximal green sequences (length bound "
                  << max_len << ", " << res.truncated_branches << " branches truncated)\n";
        for (const auto& e : seqs) {
            for (const auto& k : e.at("sequence")) std::cout << k.get<int>() << " ";
            if (e.contains("endpoint_matches_rotation"))
                std::cout << (e.at("endpoint_matches_rotation").get<bool>()
                                  ? " -> rotation endpoint"
                                  : " -> WRONG endpoint");
            std::cout << "\n";
        }
    }
    return 0;
}

int run_verify(const CommandContext& ctx, const std::string& suite, int max_rank) {
    CheckReport rep;
    auto append = [&rep](const CheckReport& part, const std::string& prefix) {
        for (const CheckItem& item : part.items)
            rep.items.push_back({prefix + ": " + item.name, item.pass, item.detail});
    };
    if (suite == "source-flip" || suite == "all") {
        append(source_flip_check(SourceFlipCase::CaseI), "source-flip I");
        append(source_flip_check(SourceFlipCase::CaseIIPlain), "source-flip II plain");
        append(source_flip_check(SourceFlipCase::CaseIITagged), "source-flip II tagged");
    }
    if (suite == "genus-replay" || suite == "all")
        append(genus_mutation_replay(), "genus-replay");
    if (suite == "canonical-sweep" || suite == "all")
        append(canonical_sweep(max_rank), "canonical-sweep");
    if (rep.items.empty())
        throw UnsupportedSurface("unknown suite '" + suite + "'");
    print_report(rep, ctx.emit);
    return rep.all_pass() ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"tagged triangulations, flips and rotations of marked surfaces"};
    app.require_subcommand(1);

    CommandContext ctx;
    std::string out_path, file, arc_text, start = "canonical", suite = "all";
    int arc = 0, power = 1, count = 10, max_vertices = 10000, max_len = 8, max_rank = 8;

    auto add_common = [&](CLI::App* cmd, bool needs_surface = true) {
        if (needs_surface)
            cmd->add_option("--surface", ctx.surface_text, "surface as g,b:[m1,...],p")
                ->required();
        cmd->add_option("--emit", ctx.emit, "output format: text|json|dot");
        cmd->add_option("--seed", ctx.seed, "seed for randomized suites");
    };

    CLI::App* c_surface = app.add_subcommand("surface", "validate and classify a surface");
    add_common(c_surface);

    CLI::App* c_tri = app.add_subcommand("triangulate", "build a canonical triangulation");
    add_common(c_tri);
    c_tri->add_option("--out", out_path, "write JSON here instead of stdout");

    CLI::App* c_flip = app.add_subcommand("flip", "tagged flip of one arc");
    add_common(c_flip);
    c_flip->add_option("--triangulation", file, "triangulation JSON file")->required();
    c_flip->add_option("--arc", arc, "arc label to flip")->required();

    CLI::App* c_rot = app.add_subcommand("rotate", "apply a power of the tagged rotation");
    add_common(c_rot);
    c_rot->add_option("--triangulation", file, "triangulation JSON file")->required();
    c_rot->add_option("--power", power, "rotation power (default 1)");

    CLI::App* c_order = app.add_subcommand("order", "order of the tagged rotation");
    add_common(c_order);

    CLI::App* c_orbit = app.add_subcommand("orbit", "rotation orbit of a model arc");
    add_common(c_orbit);
    c_orbit->add_option("--arc", arc_text, "arc, e.g. 0-2, r0+, c0>2, b0:0")->required();
    c_orbit->add_option("-k,--count", count, "number of iterates");

    CLI::App* c_explore = app.add_subcommand("explore", "exchange graph by flips");
    add_common(c_explore);
    c_explore->add_option("--start", start, "canonical or a triangulation JSON file");
    c_explore->add_option("--max", max_vertices, "vertex bound");

    CLI::App* c_green = app.add_subcommand("greenseq", "maximal green sequences");
    add_common(c_green);
    c_green->add_option("--triangulation", file, "triangulation JSON file");
    c_green->add_option("--max-len", max_len, "length bound");

    CLI::App* c_verify = app.add_subcommand("verify", "run verification suites");
    c_verify->add_option("--suite", suite,
                         "source-flip|genus-replay|canonical-sweep|all");
    c_verify->add_option("--max-rank", max_rank, "rank bound for the sweep");
    add_common(c_verify, false);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*c_surface) return run_surface(ctx);
        if (*c_tri) return run_triangulate(ctx, out_path);
        if (*c_flip) return run_flip(ctx, file, arc);
        if (*c_rot) return run_rotate(ctx, file, power);
        if (*c_order) return run_order(ctx);
        if (*c_orbit) return run_orbit(ctx, arc_text, count);
        if (*c_explore) return run_explore(ctx, start, max_vertices);
        if (*c_green) return run_greenseq(ctx, file, max_len);
        if (*c_verify) return run_verify(ctx, suite, max_rank);
    } catch (const IoFailure& e) {
        std::cerr << "io error: " << e.what() << "\n";
        return 3;
    } catch (const UnsupportedSurface& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
