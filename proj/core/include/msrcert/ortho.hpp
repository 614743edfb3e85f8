#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "msrcert/ordering.hpp"
#include "msrcert/rational.hpp"
#include "msrcert/rng.hpp"

namespace msrcert {

/// One exact vector per vertex of `target` such that two distinct vertices
/// are adjacent in `target` exactly when their vectors have nonzero inner
/// product. Built for target = complement(g); certifies msr(target) <= dim.
struct OrthoRepresentation {
    Graph target;
    int dim = 0;
    /// Indexed by vertex id of target.
    std::vector<RationalVector> vectors;
    ConstructionOrdering ordering;
};

struct BuildOptions {
    /// Fixed dimension; empty selects 3 for trees, 4 for unicyclic and 5
    /// otherwise.
    std::optional<int> dimension;
    std::uint64_t seed = 0;
    /// Auto-lowered dimensions (3/4) may fall back to 5 after exhausting
    /// restarts. Fixed dimensions never fall back.
    bool allow_fallback = true;
    /// Externally supplied ordering; validated before use. Required for
    /// non-cactus inputs that still admit a construction ordering.
    std::optional<ConstructionOrdering> ordering;
    int vertex_retry_limit = 64;
    int build_restart_limit = 4;
};

struct BuildDiagnostics {
    int dimension_requested = 0;
    int dimension_used = 0;
    bool fallback_used = false;
    int restarts = 0;
    std::uint64_t seed = 0;
};

struct BuildOutcome {
    OrthoRepresentation representation;
    BuildDiagnostics diagnostics;
};

/// Samples the vector for `position`: exactly orthogonal to the vectors of
/// earlier neighbors of g (non-edges of the complement), nonzero inner
/// product with every other earlier vector, pairwise linearly independent
/// from all of them. Sampling draws integer coefficients over the exact
/// nullspace of the (at most two) orthogonality constraints, verifies all
/// conditions in exact arithmetic and retries with a doubled coefficient
/// range on failure.
RationalVector extend_vector(const Graph& g,
                             const ConstructionOrdering& ordering,
                             const std::vector<RationalVector>& vectors_by_position,
                             int position,
                             int dimension,
                             Rng& rng,
                             int retry_limit = 64);

/// Vectors for the first three ordered vertices (pattern: orthogonal across
/// edges of g, nonzero across non-edges). Requires the seed triple to
/// induce P_3 or K_3 and dimension >= 3.
std::array<RationalVector, 3> base_vectors(const Graph& g,
                                           const ConstructionOrdering& ordering,
                                           int dimension,
                                           Rng& rng);

/// End-to-end construction of an orthogonal representation of complement(g).
/// Deterministic for a fixed seed. Throws BuildError after exhausting
/// retries and restarts (generic choices fail only on measure-zero events,
/// so persistent failure signals an impossible dimension or a bug).
BuildOutcome build_representation(const Graph& g, const BuildOptions& options = {});

/// JSON round trip: {"dim": d, "vectors": [["p/q", ...], ...],
/// "ordering": [...]} with exact rational strings, vectors indexed by
/// vertex id.
std::string representation_to_json(const OrthoRepresentation& rep);
OrthoRepresentation representation_from_json(std::string_view text, const Graph& g);

} // namespace msrcert
