#pragma once

#include <string>
#include <vector>

#include "msrcert/cactus.hpp"
#include "msrcert/graph.hpp"

namespace msrcert {

/// A vertex permutation in which the first three vertices induce P_3 or K_3
/// and every later vertex has one or two earlier neighbors. Exists for every
/// connected cactus; drives the low-dimensional vector construction.
struct ConstructionOrdering {
    /// order[m] = vertex placed at position m.
    std::vector<int> order;
    /// prior_neighbors[m] = positions p < m with {order[p], order[m]} in E(G).
    std::vector<std::vector<int>> prior_neighbors;
};

/// Computes prior_neighbors for a given permutation. Throws on malformed
/// permutations.
ConstructionOrdering ordering_from_permutation(const Graph& g, const std::vector<int>& order);

/// Lays the graph out block by block from a seed P_3 (or K_3): cycle blocks
/// become paths whose last vertex alone closes the cycle with two earlier
/// neighbors, bridges contribute one earlier neighbor. Cycle closings are
/// deferred past position five where possible so that the labeling also
/// meets the C-delta counting condition once n >= 6; several deterministic
/// seeds are tried to that end.
ConstructionOrdering find_construction_ordering(const Graph& g, const CactusProfile& profile);

struct OrderingValidation {
    bool ok = false;
    std::vector<std::string> violations;
};

/// Checks every ConstructionOrdering invariant against g; violations name
/// the offending position.
OrderingValidation validate_ordering(const Graph& g, const ConstructionOrdering& ord);

/// Validation result for delta / C-delta labelings. Precondition failures
/// (order, connectivity of g or its complement) are reported separately
/// from labeling failures.
struct LabelingValidation {
    bool preconditions_ok = false;
    bool labeling_ok = false;
    std::vector<std::string> issues;

    bool valid() const { return preconditions_ok && labeling_ok; }
};

/// Delta labeling: the first three vertices induce 3K_1 or K_2 + K_1 and
/// each later v_m (1-based m >= 4) is non-adjacent to at most floor(m/2)-1
/// earlier vertices.
LabelingValidation validate_delta_graph(const Graph& g, const std::vector<int>& order);

/// C-delta labeling: complement-dual of the above; first three induce K_3
/// or P_3, each later v_m adjacent to at most floor(m/2)-1 earlier vertices.
LabelingValidation validate_cdelta_graph(const Graph& g, const std::vector<int>& order);

} // namespace msrcert
