#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "msrcert/cactus.hpp"
#include "msrcert/ordering.hpp"
#include "msrcert/ortho.hpp"

namespace msrcert {

/// Outcome of re-checking a representation against an expected pattern.
/// The Gram matrix of real vectors is psd by construction, so the rank of
/// the vector matrix bounds the minimum semidefinite rank from above.
struct GramCertificate {
    bool pattern_ok = false;
    bool pairwise_independent = false;
    int rank = 0;
    int dim = 0;
    std::string psd_witness;
    std::vector<std::pair<int, int>> mismatches;
};

/// Recomputes all inner products exactly and the exact rank of the vector
/// matrix. pattern_ok iff nonzero products land exactly on E(expected).
GramCertificate verify_representation(const OrthoRepresentation& rep, const Graph& expected);

enum class FactKind { exact, upper_bound, lower_bound };

std::string to_string(FactKind k);

/// One derived statement about msr of a graph, with provenance.
struct MsrFact {
    std::string graph_id;
    FactKind kind = FactKind::exact;
    int value = 0;
    std::string rule;
    std::vector<int> premises; // indices into the producing fact list
};

struct MsrAux {
    std::optional<CactusProfile> profile;
    std::optional<TreeCoverBounds> tree_cover;
    /// Oracle value, when it was run.
    std::optional<int> tree_cover_exact;
    /// Candidate delta labeling of g; used only if it validates.
    std::optional<std::vector<int>> delta_labeling;
};

/// Applies the rule base: trees (|T|-1), cycles (n-2), pendant deletion,
/// chordal clique covers, cut-vertex additivity, the validated-delta-
/// labeling degree bound, and the outerplanar tree-cover identity for
/// cacti. Rules recurse through pendant and cut-vertex reductions;
/// inapplicable rules emit nothing.
std::vector<MsrFact> msr_rules(const Graph& g, const MsrAux& aux);

/// Chordality test via maximum cardinality search; returns a perfect
/// elimination ordering when chordal.
std::optional<std::vector<int>> perfect_elimination_ordering(const Graph& g);
bool is_chordal(const Graph& g);

/// Minimum edge clique cover of a connected chordal graph, computed along
/// a perfect elimination ordering. Throws on non-chordal input.
int clique_cover_chordal(const Graph& g);

/// Best consistent view of a fact list. Throws ContradictionError when
/// facts disagree (exact vs exact, or lower > upper) - that is a bug
/// signal, never valid input behaviour.
struct MsrSummary {
    std::optional<int> exact;
    std::optional<int> upper;
    std::optional<int> lower;

    /// Tightest usable upper bound (exact wins).
    std::optional<int> best_upper() const { return exact ? exact : upper; }
};
MsrSummary consolidate(const std::vector<MsrFact>& facts);

enum class Verdict { certified, not_certified };

std::string to_string(Verdict v);

/// Full per-graph certificate for msr(G) + msr(complement G) <= |G| + 2.
struct GccReport {
    std::string graph_id;
    Graph graph;
    int n = 0;
    CactusClass cls = CactusClass::tree;
    CactusProfile profile;
    ConstructionOrdering ordering;
    OrthoRepresentation representation;
    GramCertificate gram;
    int dim = 0;
    std::vector<MsrFact> msr_facts;
    MsrSummary msr_g;
    int m_plus_g = 0;     // |G| - msr(G) when msr is exact
    int msr_comp_bound = 0;
    long long lhs = 0;
    long long rhs = 0;
    bool inequality_holds = false;
    Verdict verdict = Verdict::not_certified;
    std::vector<std::string> provenance;
    std::uint64_t seed = 0;
    std::optional<std::string> oracle_note;
};

struct GccOptions {
    std::uint64_t seed = 0;
    /// Force a dimension instead of the class default (3/4/5).
    std::optional<int> dimension;
    /// Run the exhaustive oracles (within their size caps) as cross-checks.
    bool run_oracles = false;
    std::string graph_id = "g";
};

/// End-to-end check for a connected cactus: ordering, representation in the
/// class dimension, independent Gram verification, msr rule facts, and the
/// final inequality. Certification requires the arithmetic to close:
/// trees need rank <= 3, unicyclic graphs rank <= 4, multicyclic graphs
/// rank <= 5 against msr(G) <= |G| - 3.
GccReport gcc_check(const Graph& g, const GccOptions& options = {});

/// Report JSON. When representation_ref is set the vectors are referenced
/// by name instead of inlined.
std::string report_to_json(const GccReport& report,
                           const std::optional<std::string>& representation_ref = std::nullopt);

} // namespace msrcert
