#include "msrcert/pipeline.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "msrcert/rng.hpp"
#include "msrcert/version.hpp"

namespace msrcert {

namespace {

std::string instance_id(int index) {
    std::ostringstream out;
    out << 'g';
    if (index < 1000) out << (index < 100 ? (index < 10 ? "00" : "0") : "");
    out << index;
    return out.str();
}

BatchInstance run_instance(const BatchConfig& config, int index) {
    BatchInstance inst;
    inst.id = instance_id(index);
    const auto start = std::chrono::steady_clock::now();
    try {
        Rng rng(Rng::mix(config.seed, static_cast<std::uint64_t>(index)));
        const int span = config.n_max - config.n_min + 1;
        inst.n = config.n_min + static_cast<int>(rng.below(static_cast<std::uint64_t>(span)));

        // Cycle through the classes so every batch spans trees, unicyclic
        // and multicyclic cacti.
        const int max_cycles = (inst.n - 1) / 2;
        switch (index % 3) {
            case 0: inst.cycles = 0; break;
            case 1: inst.cycles = std::min(1, max_cycles); break;
            default:
                inst.cycles = max_cycles >= 2
                                  ? 2 + static_cast<int>(rng.below(static_cast<std::uint64_t>(max_cycles - 1)))
                                  : max_cycles;
                break;
        }

        Graph g = generate_cactus(inst.n, inst.cycles, Rng::mix(config.seed, 0x67ABull + index));

        GccOptions options;
        options.seed = Rng::mix(config.seed, 0xCE27ull + index);
        options.dimension = config.dimension;
        options.run_oracles = config.oracle;
        options.graph_id = inst.id;
        GccReport report = gcc_check(g, options);

        inst.cls = report.cls;
        inst.verdict = report.verdict;
        inst.dim = report.dim;
        inst.rank = report.msr_comp_bound;
        inst.msr_g = report.msr_g.exact;
        inst.lhs = report.lhs;
        inst.rhs = report.rhs;
        if (config.oracle) {
            inst.oracle_checked = report.oracle_note.has_value();
            inst.oracle_ok = true; // contradictions throw inside gcc_check
        }
    } catch (const std::exception& e) {
        inst.failure = e.what();
        inst.verdict = Verdict::not_certified;
        inst.oracle_ok = false;
    }
    inst.elapsed_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    return inst;
}

} // namespace

BatchSummary run_batch(const BatchConfig& config) {
    if (config.count < 1) throw PreconditionError("batch count must be positive");
    if (config.n_min < 1 || config.n_max < config.n_min)
        throw PreconditionError("batch needs 1 <= n_min <= n_max");

    BatchSummary summary;
    summary.config = config;
    summary.instances.assign(static_cast<std::size_t>(config.count), BatchInstance{});

    int workers = config.workers > 0
                      ? config.workers
                      : static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
    workers = std::min(workers, config.count);

    std::atomic<int> next{0};
    auto worker = [&]() {
        while (true) {
            int index = next.fetch_add(1);
            if (index >= config.count) break;
            summary.instances[static_cast<std::size_t>(index)] = run_instance(config, index);
        }
    };
    if (workers <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(static_cast<std::size_t>(workers));
        for (int i = 0; i < workers; ++i) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }

    for (const BatchInstance& inst : summary.instances) {
        if (inst.verdict == Verdict::certified && inst.failure.empty())
            ++summary.certified_count;
        else
            summary.failures.push_back(inst.id + ": " +
                                       (inst.failure.empty() ? "not certified" : inst.failure));
    }
    return summary;
}

std::string batch_summary_to_json(const BatchSummary& summary) {
    nlohmann::ordered_json j;
    j["tool"] = {{"name", std::string(kToolName)}, {"version", std::string(kToolVersion)}};
    j["seed"] = summary.config.seed;
    j["count"] = summary.config.count;
    j["n_range"] = {summary.config.n_min, summary.config.n_max};
    j["oracle"] = summary.config.oracle;
    j["certified_count"] = summary.certified_count;

    nlohmann::ordered_json classes;
    int trees = 0, uni = 0, multi = 0;
    for (const BatchInstance& inst : summary.instances) {
        if (inst.cls == CactusClass::tree) ++trees;
        else if (inst.cls == CactusClass::unicyclic) ++uni;
        else ++multi;
    }
    classes["tree"] = trees;
    classes["unicyclic"] = uni;
    classes["multicyclic"] = multi;
    j["classes"] = std::move(classes);

    auto instances = nlohmann::ordered_json::array();
    for (const BatchInstance& inst : summary.instances) {
        nlohmann::ordered_json row;
        row["id"] = inst.id;
        row["n"] = inst.n;
        row["cycles"] = inst.cycles;
        row["class"] = to_string(inst.cls);
        row["dim"] = inst.dim;
        row["rank"] = inst.rank;
        row["msr_g"] = inst.msr_g ? nlohmann::ordered_json(*inst.msr_g) : nlohmann::ordered_json(nullptr);
        row["lhs"] = inst.lhs;
        row["rhs"] = inst.rhs;
        row["verdict"] = to_string(inst.verdict);
        if (summary.config.oracle) row["oracle_checked"] = inst.oracle_checked;
        if (!inst.failure.empty()) row["failure"] = inst.failure;
        instances.push_back(std::move(row));
    }
    j["instances"] = std::move(instances);
    j["failures"] = summary.failures;
    return j.dump(2);
}

std::string batch_human_summary(const BatchSummary& summary) {
    std::vector<double> times;
    times.reserve(summary.instances.size());
    for (const BatchInstance& inst : summary.instances) times.push_back(inst.elapsed_ms);
    std::sort(times.begin(), times.end());
    auto percentile = [&](double p) {
        if (times.empty()) return 0.0;
        std::size_t idx = static_cast<std::size_t>(p * (times.size() - 1));
        return times[idx];
    };
    double total = 0;
    for (double t : times) total += t;

    std::ostringstream out;
    out << "batch: " << summary.certified_count << "/" << summary.instances.size()
        << " certified (seed " << summary.config.seed << ", n in [" << summary.config.n_min << ","
        << summary.config.n_max << "])\n";
    out << "timing: total " << std::llround(total) << " ms, p50 " << std::llround(percentile(0.50))
        << " ms, p90 " << std::llround(percentile(0.90)) << " ms, max "
        << std::llround(times.empty() ? 0.0 : times.back()) << " ms\n";
    if (!summary.failures.empty()) {
        out << "failures:\n";
        for (const std::string& f : summary.failures) out << "  " << f << '\n';
    }
    return out.str();
}

} // namespace msrcert
