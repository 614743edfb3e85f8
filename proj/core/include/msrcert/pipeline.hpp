#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "msrcert/cert.hpp"

namespace msrcert {

struct BatchConfig {
    int count = 100;
    int n_min = 6;
    int n_max = 40;
    std::uint64_t seed = 0;
    bool oracle = false;
    /// Worker threads; 0 picks hardware concurrency.
    int workers = 0;
    std::optional<int> dimension;
};

struct BatchInstance {
    std::string id;
    int n = 0;
    int cycles = 0;
    CactusClass cls = CactusClass::tree;
    Verdict verdict = Verdict::not_certified;
    int dim = 0;
    int rank = 0;
    std::optional<int> msr_g;
    long long lhs = 0;
    long long rhs = 0;
    bool oracle_checked = false;
    bool oracle_ok = true;
    std::string failure; // non-empty on per-instance errors
    double elapsed_ms = 0.0;
};

struct BatchSummary {
    BatchConfig config;
    int certified_count = 0;
    std::vector<BatchInstance> instances; // sorted by id
    std::vector<std::string> failures;
};

/// Generates `count` seeded cacti cycling through the tree / unicyclic /
/// multicyclic classes, certifies each on a bounded worker pool and
/// assembles a deterministic summary (sorted by graph id, independent of
/// scheduling). All randomness derives from the single master seed.
BatchSummary run_batch(const BatchConfig& config);

/// Deterministic machine summary: timing is deliberately excluded so that
/// equal seeds produce byte-identical output.
std::string batch_summary_to_json(const BatchSummary& summary);

/// Human-readable one-screen summary including timing percentiles; meant
/// for stderr.
std::string batch_human_summary(const BatchSummary& summary);

} // namespace msrcert
