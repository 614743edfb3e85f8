#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "msrcert/graph.hpp"

namespace msrcert {

enum class CactusClass { tree, unicyclic, multicyclic };

std::string to_string(CactusClass c);

/// is_cactus holds iff every block is a bridge edge or a chordless cycle;
/// cycle_count counts the cycle blocks. cls is tree/unicyclic/multicyclic
/// for cycle counts 0 / 1 / >= 2.
struct CactusProfile {
    bool is_cactus = false;
    int cycle_count = 0;
    CactusClass cls = CactusClass::tree;
};

/// Block-based cactus recognition. Linear-time; requires a connected input.
CactusProfile recognize_cactus(const Graph& g);

/// Independent exhaustive oracle: enumerates every simple cycle and checks
/// that no edge lies on two of them. Capped at 12 vertices.
bool cactus_oracle(const Graph& g);

/// Connected cactus with exactly `cycles` cycle blocks, deterministic per
/// seed. Feasible iff cycles <= (n-1)/2.
Graph generate_cactus(int n, int cycles, std::uint64_t seed);

/// Partition of V into parts, each inducing a tree (singletons allowed).
struct TreeCover {
    std::vector<std::vector<int>> parts;
    int value = 0;
};

struct TreeCoverBounds {
    int lower = 0;
    int upper = 0;
    std::optional<int> exact;
};

/// Classification bounds: trees (1,1,1), unicyclic (2,2,2), multicyclic
/// lower 3 and upper cycle_count+1. `exact` stays empty for multicyclic
/// inputs; only the oracle fills it.
TreeCoverBounds tree_cover_bounds(const Graph& g, const CactusProfile& profile);

/// Exhaustive minimum tree cover over set partitions in increasing part
/// count. Capped at 10 vertices.
TreeCover tree_cover_oracle(const Graph& g);

/// True when `part` induces a connected acyclic subgraph of g.
bool induces_tree(const Graph& g, const std::vector<int>& part);

} // namespace msrcert
