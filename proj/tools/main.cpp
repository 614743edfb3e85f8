// msrcert command line tool: certifies that cactus graphs satisfy
// msr(G) + msr(complement G) <= |G| + 2 by building exact orthogonal
// representations of the complement in low dimension.
//
// Exit codes (stable contract):
//   0  success / certified
//   1  input error (parse failure, bad arguments, missing file)
//   2  not certified / verification failed
//   3  input is not a cactus

#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "msrcert/cactus.hpp"
#include "msrcert/cert.hpp"
#include "msrcert/io.hpp"
#include "msrcert/ordering.hpp"
#include "msrcert/ortho.hpp"
#include "msrcert/pipeline.hpp"
#include "msrcert/version.hpp"

namespace {

using msrcert::Graph;

constexpr int kExitOk = 0;
constexpr int kExitInput = 1;
constexpr int kExitNotCertified = 2;
constexpr int kExitNotCactus = 3;

std::string read_input(const std::string& path) {
    if (path == "-") {
        std::ostringstream buffer;
        buffer << std::cin.rdbuf();
        return buffer.str();
    }
    return msrcert::read_file(path);
}

void emit(const std::string& out_path, const std::string& content) {
    if (out_path.empty() || out_path == "-")
        std::cout << content << std::endl;
    else
        msrcert::write_file(out_path, content);
}

std::string graph_id_for(const std::string& path) {
    if (path == "-") return "stdin";
    return std::filesystem::path(path).stem().string();
}

struct CmdContext {
    std::string input = "-";
    std::string out;
    std::string format = "edges";
    std::string dim = "auto";
    std::uint64_t seed = 0;
    bool oracle = false;
};

std::optional<int> parse_dim(const std::string& dim) {
    if (dim == "auto") return std::nullopt;
    int value = 0;
    try {
        value = std::stoi(dim);
    } catch (const std::exception&) {
        throw msrcert::InputError("--dim must be auto or an integer in [1,16]");
    }
    if (value < 1 || value > 16) throw msrcert::InputError("--dim must be auto or in [1,16]");
    return value;
}

int cmd_recognize(const CmdContext& ctx) {
    Graph g = msrcert::parse_graph(read_input(ctx.input));
    if (!msrcert::is_connected(g)) {
        std::cerr << "not a cactus: input graph is disconnected\n";
        return kExitNotCactus;
    }
    msrcert::CactusProfile profile = msrcert::recognize_cactus(g);
    msrcert::BlockDecomposition decomp = msrcert::block_decomposition(g);

    nlohmann::ordered_json j;
    j["is_cactus"] = profile.is_cactus;
    j["cycle_count"] = profile.cycle_count;
    j["class"] = msrcert::to_string(profile.cls);
    j["n"] = g.order();
    j["m"] = g.edge_count();
    j["cut_vertices"] = decomp.cut_vertices;
    int bridge_blocks = 0;
    for (const auto& b : decomp.blocks)
        if (b.kind == msrcert::BlockKind::edge) ++bridge_blocks;
    j["bridge_blocks"] = bridge_blocks;
    if (ctx.oracle && g.order() <= 12)
        j["oracle_agrees"] = msrcert::cactus_oracle(g) == profile.is_cactus;
    emit(ctx.out, j.dump(2));

    std::cerr << (profile.is_cactus ? "cactus" : "not a cactus") << " (" << g.order()
              << " vertices, " << profile.cycle_count << " cycles)\n";
    return profile.is_cactus ? kExitOk : kExitNotCactus;
}

int cmd_order(const CmdContext& ctx, const std::string& check_path) {
    Graph g = msrcert::parse_graph(read_input(ctx.input));
    if (!msrcert::is_connected(g)) {
        std::cerr << "not a cactus: input graph is disconnected\n";
        return kExitNotCactus;
    }

    if (!check_path.empty()) {
        // Re-validate an ordering produced earlier.
        nlohmann::json j = nlohmann::json::parse(msrcert::read_file(check_path));
        std::vector<int> order = j.get<std::vector<int>>();
        msrcert::ConstructionOrdering ord = msrcert::ordering_from_permutation(g, order);
        msrcert::OrderingValidation validation = msrcert::validate_ordering(g, ord);
        for (const std::string& v : validation.violations) std::cerr << "violation: " << v << '\n';
        std::cerr << (validation.ok ? "ordering valid" : "ordering invalid") << '\n';
        return validation.ok ? kExitOk : kExitNotCertified;
    }

    msrcert::CactusProfile profile = msrcert::recognize_cactus(g);
    if (!profile.is_cactus) {
        std::cerr << "not a cactus: no construction ordering is guaranteed\n";
        return kExitNotCactus;
    }
    msrcert::ConstructionOrdering ord = msrcert::find_construction_ordering(g, profile);
    emit(ctx.out, nlohmann::ordered_json(ord.order).dump());
    std::cerr << "ordering over " << g.order() << " vertices\n";
    return kExitOk;
}

int cmd_build_rep(const CmdContext& ctx) {
    Graph g = msrcert::parse_graph(read_input(ctx.input));
    msrcert::BuildOptions options;
    options.seed = ctx.seed;
    options.dimension = parse_dim(ctx.dim);
    msrcert::BuildOutcome outcome = msrcert::build_representation(g, options);
    emit(ctx.out, msrcert::representation_to_json(outcome.representation));
    std::cerr << "representation in dimension " << outcome.diagnostics.dimension_used
              << (outcome.diagnostics.fallback_used ? " (fallback from "
                      + std::to_string(outcome.diagnostics.dimension_requested) + ")" : "")
              << ", seed " << ctx.seed << '\n';
    return kExitOk;
}

int cmd_verify(const CmdContext& ctx, const std::string& rep_path, const std::string& target) {
    Graph g = msrcert::parse_graph(read_input(ctx.input));
    msrcert::OrthoRepresentation rep =
        msrcert::representation_from_json(msrcert::read_file(rep_path), g);
    Graph expected = target == "graph" ? g : msrcert::complement(g);
    msrcert::GramCertificate cert = msrcert::verify_representation(rep, expected);

    nlohmann::ordered_json j;
    j["pattern_ok"] = cert.pattern_ok;
    j["pairwise_independent"] = cert.pairwise_independent;
    j["rank"] = cert.rank;
    j["dim"] = cert.dim;
    j["psd_witness"] = cert.psd_witness;
    auto mism = nlohmann::ordered_json::array();
    for (const auto& [a, b] : cert.mismatches) mism.push_back({a, b});
    j["mismatches"] = std::move(mism);
    emit(ctx.out, j.dump(2));

    bool ok = cert.pattern_ok && cert.pairwise_independent;
    std::cerr << (ok ? "verified" : "verification failed") << ": rank " << cert.rank << " <= dim "
              << cert.dim << '\n';
    return ok ? kExitOk : kExitNotCertified;
}

int cmd_certify(const CmdContext& ctx) {
    Graph g = msrcert::parse_graph(read_input(ctx.input));
    if (!msrcert::is_connected(g)) {
        std::cerr << "not a cactus: input graph is disconnected\n";
        return kExitNotCactus;
    }
    msrcert::GccOptions options;
    options.seed = ctx.seed;
    options.dimension = parse_dim(ctx.dim);
    options.run_oracles = ctx.oracle;
    options.graph_id = graph_id_for(ctx.input);
    msrcert::GccReport report = msrcert::gcc_check(g, options);

    if (!ctx.out.empty() && ctx.out != "-") {
        // Large artifact: keep the vector data next to the report.
        std::string rep_path = ctx.out + ".rep.json";
        msrcert::write_file(rep_path, msrcert::representation_to_json(report.representation));
        msrcert::write_file(ctx.out, msrcert::report_to_json(
                                         report, std::filesystem::path(rep_path).filename().string()));
    } else {
        std::cout << msrcert::report_to_json(report) << std::endl;
    }

    std::cerr << msrcert::to_string(report.verdict) << ": msr(G)"
              << (report.msr_g.exact ? " = " + std::to_string(*report.msr_g.exact)
                                     : " <= " + std::to_string(report.msr_g.upper.value_or(-1)))
              << ", msr(complement) <= " << report.msr_comp_bound << ", |G|+2 = " << report.rhs
              << '\n';
    return report.verdict == msrcert::Verdict::certified ? kExitOk : kExitNotCertified;
}

int cmd_generate(const CmdContext& ctx, int n, int cycles) {
    Graph g = msrcert::generate_cactus(n, cycles, ctx.seed);
    emit(ctx.out, ctx.format == "json" ? msrcert::to_canonical_json(g) : msrcert::to_edge_list(g));
    std::cerr << "cactus on " << n << " vertices with " << cycles << " cycles (seed " << ctx.seed
              << ")\n";
    return kExitOk;
}

int cmd_batch(const CmdContext& ctx, msrcert::BatchConfig config) {
    config.seed = ctx.seed;
    config.oracle = ctx.oracle;
    config.dimension = parse_dim(ctx.dim);
    msrcert::BatchSummary summary = msrcert::run_batch(config);
    emit(ctx.out, msrcert::batch_summary_to_json(summary));
    std::cerr << msrcert::batch_human_summary(summary);
    return summary.certified_count == config.count ? kExitOk : kExitNotCertified;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact GCC+ certificates for cactus graphs via orthogonal representations"};
    app.set_version_flag("--version", std::string(msrcert::kToolName) + " " +
                                          std::string(msrcert::kToolVersion));
    app.require_subcommand(1);

    CmdContext ctx;
    std::string check_path;
    std::string rep_path;
    std::string target = "complement";
    int gen_n = 0, gen_cycles = 0;
    msrcert::BatchConfig batch;

    auto add_common = [&](CLI::App* cmd, bool with_input) {
        if (with_input)
            cmd->add_option("input", ctx.input, "graph file (edge list or JSON), - for stdin");
        cmd->add_option("--out", ctx.out, "output path (default: stdout)");
        return cmd;
    };

    CLI::App* recognize = add_common(app.add_subcommand("recognize", "classify a graph"), true);
    recognize->add_flag("--oracle", ctx.oracle, "cross-check with the exhaustive cycle oracle");

    CLI::App* order = add_common(app.add_subcommand("order", "construction ordering"), true);
    order->add_option("--check", check_path, "validate an existing ordering JSON instead");

    CLI::App* build = add_common(app.add_subcommand("build-rep", "build an orthogonal representation of the complement"), true);
    build->add_option("--dim", ctx.dim, "dimension: auto or 1..16")->capture_default_str();
    build->add_option("--seed", ctx.seed, "rng seed")->capture_default_str();

    CLI::App* verify = add_common(app.add_subcommand("verify", "re-verify a representation"), true);
    verify->add_option("--rep", rep_path, "representation JSON file")->required();
    verify->add_option("--target", target, "complement|graph")->check(CLI::IsMember({"complement", "graph"}))
        ->capture_default_str();

    CLI::App* certify = add_common(app.add_subcommand("certify", "full GCC+ certificate"), true);
    certify->add_option("--dim", ctx.dim, "dimension: auto or 1..16")->capture_default_str();
    certify->add_option("--seed", ctx.seed, "rng seed")->capture_default_str();
    certify->add_flag("--oracle", ctx.oracle, "run exhaustive oracle cross-checks (size capped)");

    CLI::App* generate = add_common(app.add_subcommand("generate", "generate a random cactus"), false);
    generate->add_option("--n", gen_n, "vertex count")->required();
    generate->add_option("--cycles", gen_cycles, "cycle count")->required();
    generate->add_option("--seed", ctx.seed, "rng seed")->required();
    generate->add_option("--format", ctx.format, "edges|json")
        ->check(CLI::IsMember({"edges", "json"}))->capture_default_str();

    CLI::App* batch_cmd = add_common(app.add_subcommand("batch", "generate and certify many cacti"), false);
    batch_cmd->add_option("--count", batch.count, "number of instances")->capture_default_str();
    batch_cmd->add_option("--n-min", batch.n_min, "minimum vertex count")->capture_default_str();
    batch_cmd->add_option("--n-max", batch.n_max, "maximum vertex count")->capture_default_str();
    batch_cmd->add_option("--seed", ctx.seed, "master seed")->required();
    batch_cmd->add_option("--workers", batch.workers, "worker threads (0 = hardware)")->capture_default_str();
    batch_cmd->add_option("--dim", ctx.dim, "dimension: auto or 1..16")->capture_default_str();
    batch_cmd->add_flag("--oracle", ctx.oracle, "oracle cross-checks on small instances");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? kExitOk : kExitInput;
    }

    try {
        if (recognize->parsed()) return cmd_recognize(ctx);
        if (order->parsed()) return cmd_order(ctx, check_path);
        if (build->parsed()) return cmd_build_rep(ctx);
        if (verify->parsed()) return cmd_verify(ctx, rep_path, target);
        if (certify->parsed()) return cmd_certify(ctx);
        if (generate->parsed()) return cmd_generate(ctx, gen_n, gen_cycles);
        if (batch_cmd->parsed()) return cmd_batch(ctx, batch);
    } catch (const msrcert::NotCactusError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitNotCactus;
    } catch (const msrcert::InputError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitInput;
    } catch (const msrcert::BuildError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitNotCertified;
    } catch (const msrcert::PreconditionError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitInput;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return kExitInput;
    }
    return kExitInput;
}
