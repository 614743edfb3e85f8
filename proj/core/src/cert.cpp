#include "msrcert/cert.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include <json.hpp>

#include "msrcert/io.hpp"
#include "msrcert/version.hpp"

namespace msrcert {

std::string to_string(FactKind k) {
    switch (k) {
        case FactKind::exact: return "exact";
        case FactKind::upper_bound: return "upper_bound";
        case FactKind::lower_bound: return "lower_bound";
    }
    return "?";
}

std::string to_string(Verdict v) {
    return v == Verdict::certified ? "certified" : "not_certified";
}

GramCertificate verify_representation(const OrthoRepresentation& rep, const Graph& expected) {
    if (static_cast<int>(rep.vectors.size()) != expected.order())
        throw PreconditionError("verify: representation has " + std::to_string(rep.vectors.size()) +
                                " vectors for " + std::to_string(expected.order()) + " vertices");
    for (const RationalVector& v : rep.vectors)
        if (static_cast<int>(v.size()) != rep.dim)
            throw PreconditionError("verify: vector dimension differs from declared dim");

    GramCertificate cert;
    cert.dim = rep.dim;
    const int n = expected.order();

    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            bool nonzero = inner_product(rep.vectors[static_cast<std::size_t>(i)],
                                         rep.vectors[static_cast<std::size_t>(j)]) != 0;
            if (nonzero != expected.adjacent(i, j)) cert.mismatches.emplace_back(i, j);
        }
    }
    cert.pattern_ok = cert.mismatches.empty();

    cert.pairwise_independent = true;
    for (int i = 0; i < n && cert.pairwise_independent; ++i)
        for (int j = i + 1; j < n; ++j)
            if (scalar_multiples(rep.vectors[static_cast<std::size_t>(i)],
                                 rep.vectors[static_cast<std::size_t>(j)])) {
                cert.pairwise_independent = false;
                break;
            }

    RationalMatrix m(n, rep.dim);
    for (int i = 0; i < n; ++i)
        for (int c = 0; c < rep.dim; ++c)
            m.at(i, c) = rep.vectors[static_cast<std::size_t>(i)][static_cast<std::size_t>(c)];
    cert.rank = rank(std::move(m));

    cert.psd_witness =
        "Gram matrix equals V^T V for the emitted vector matrix V, hence positive semidefinite "
        "with rank equal to rank(V)";
    return cert;
}

std::optional<std::vector<int>> perfect_elimination_ordering(const Graph& g) {
    const int n = g.order();
    if (n == 0) return std::vector<int>{};

    // Maximum cardinality search, numbering vertices n-1 .. 0.
    std::vector<int> weight(static_cast<std::size_t>(n), 0);
    std::vector<bool> numbered(static_cast<std::size_t>(n), false);
    std::vector<int> order(static_cast<std::size_t>(n), -1);
    for (int slot = n - 1; slot >= 0; --slot) {
        int best = -1;
        for (int v = 0; v < n; ++v)
            if (!numbered[static_cast<std::size_t>(v)] &&
                (best == -1 || weight[static_cast<std::size_t>(v)] > weight[static_cast<std::size_t>(best)]))
                best = v;
        numbered[static_cast<std::size_t>(best)] = true;
        order[static_cast<std::size_t>(slot)] = best;
        for (int w : g.neighbors(best))
            if (!numbered[static_cast<std::size_t>(w)]) ++weight[static_cast<std::size_t>(w)];
    }

    std::vector<int> position(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) position[static_cast<std::size_t>(order[static_cast<std::size_t>(i)])] = i;

    // order is a perfect elimination ordering iff for each vertex the
    // earliest later neighbor dominates all other later neighbors.
    for (int i = 0; i < n; ++i) {
        int v = order[static_cast<std::size_t>(i)];
        int parent = -1, parent_pos = n;
        for (int w : g.neighbors(v))
            if (position[static_cast<std::size_t>(w)] > i &&
                position[static_cast<std::size_t>(w)] < parent_pos) {
                parent = w;
                parent_pos = position[static_cast<std::size_t>(w)];
            }
        if (parent == -1) continue;
        for (int w : g.neighbors(v)) {
            if (position[static_cast<std::size_t>(w)] <= i || w == parent) continue;
            if (!g.adjacent(parent, w)) return std::nullopt;
        }
    }
    return order;
}

bool is_chordal(const Graph& g) {
    return perfect_elimination_ordering(g).has_value();
}

int clique_cover_chordal(const Graph& g) {
    auto peo = perfect_elimination_ordering(g);
    if (!peo) throw PreconditionError("clique cover rule requires a chordal graph");

    const int n = g.order();
    std::vector<int> position(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) position[static_cast<std::size_t>((*peo)[static_cast<std::size_t>(i)])] = i;

    std::set<std::pair<int, int>> covered;
    auto key = [](int a, int b) { return std::make_pair(std::min(a, b), std::max(a, b)); };

    int cliques = 0;
    for (int i = 0; i < n; ++i) {
        int v = (*peo)[static_cast<std::size_t>(i)];
        std::vector<int> later;
        for (int w : g.neighbors(v))
            if (position[static_cast<std::size_t>(w)] > i) later.push_back(w);
        bool needed = false;
        for (int w : later)
            if (!covered.count(key(v, w))) {
                needed = true;
                break;
            }
        if (!needed) continue;
        // {v} + later neighbors is a clique by the elimination property and
        // dominates every clique through v among the remaining vertices.
        ++cliques;
        for (int w : later) covered.insert(key(v, w));
        for (std::size_t a = 0; a < later.size(); ++a)
            for (std::size_t b = a + 1; b < later.size(); ++b)
                covered.insert(key(later[a], later[b]));
    }
    return cliques;
}

MsrSummary consolidate(const std::vector<MsrFact>& facts) {
    MsrSummary summary;
    for (const MsrFact& f : facts) {
        switch (f.kind) {
            case FactKind::exact:
                if (summary.exact && *summary.exact != f.value)
                    throw ContradictionError("exact msr facts disagree: " +
                                             std::to_string(*summary.exact) + " vs " +
                                             std::to_string(f.value) + " (" + f.rule + ")");
                summary.exact = f.value;
                break;
            case FactKind::upper_bound:
                if (!summary.upper || f.value < *summary.upper) summary.upper = f.value;
                break;
            case FactKind::lower_bound:
                if (!summary.lower || f.value > *summary.lower) summary.lower = f.value;
                break;
        }
    }
    if (summary.lower && summary.upper && *summary.lower > *summary.upper)
        throw ContradictionError("msr bounds cross: lower " + std::to_string(*summary.lower) +
                                 " > upper " + std::to_string(*summary.upper));
    if (summary.exact) {
        if ((summary.lower && *summary.lower > *summary.exact) ||
            (summary.upper && *summary.upper < *summary.exact))
            throw ContradictionError("exact msr value escapes its own bounds");
    }
    return summary;
}

namespace {

constexpr int kRecursionOrderCap = 512; // pendant/chordal rules on huge inputs add nothing

class RuleEngine {
public:
    explicit RuleEngine(std::vector<MsrFact>& facts) : facts_(facts) {}

    // Exact msr via the recursive rule base, or nullopt. Emits one fact per
    // applicable rule; disagreement between rules throws.
    std::optional<int> solve(const Graph& g, const std::string& id) {
        const std::string key = to_canonical_json(g);
        if (auto it = memo_.find(key); it != memo_.end()) return it->second;

        struct Candidate {
            std::string rule;
            int value;
            std::vector<int> premises;
        };
        std::vector<Candidate> candidates;
        const int n = g.order();
        const bool connected = is_connected(g);

        if (connected && g.edge_count() == n - 1)
            candidates.push_back({"msr_tree", n - 1, {}});

        if (connected && n >= 3 && g.edge_count() == n) {
            bool two_regular = true;
            for (int v = 0; v < n && two_regular; ++v) two_regular = g.degree(v) == 2;
            if (two_regular) candidates.push_back({"msr_cycle", n - 2, {}});
        }

        if (connected && n <= kRecursionOrderCap && is_chordal(g))
            candidates.push_back({"msr_chordal_cc", clique_cover_chordal(g), {}});

        if (connected && n <= kRecursionOrderCap) {
            int pendant = -1;
            for (int v = 0; v < n; ++v)
                if (g.degree(v) == 1) {
                    pendant = v;
                    break;
                }
            if (pendant != -1 && n >= 2) {
                std::vector<int> rest;
                for (int v = 0; v < n; ++v)
                    if (v != pendant) rest.push_back(v);
                Graph reduced = induced_subgraph(g, rest);
                auto sub = solve(reduced, id + "/minus_v" + std::to_string(pendant));
                if (sub) {
                    int premise = last_fact_for_.at(to_canonical_json(reduced));
                    candidates.push_back({"msr_pendant", 1 + *sub, {premise}});
                }
            }
        }

        if (connected && n >= 3) {
            BlockDecomposition decomp = block_decomposition(g);
            if (decomp.blocks.size() >= 2) {
                std::vector<int> premises;
                int total = 0;
                bool all_exact = true;
                for (std::size_t b = 0; b < decomp.blocks.size() && all_exact; ++b) {
                    Graph block = induced_subgraph(g, decomp.blocks[b].vertices);
                    auto sub = solve(block, id + "/block" + std::to_string(b));
                    if (!sub) {
                        all_exact = false;
                        break;
                    }
                    total += *sub;
                    premises.push_back(last_fact_for_.at(to_canonical_json(block)));
                }
                if (all_exact) candidates.push_back({"msr_cut_vertex", total, std::move(premises)});
            }
        }

        std::optional<int> exact;
        for (const Candidate& c : candidates) {
            if (exact && *exact != c.value)
                throw ContradictionError("rule chains disagree on msr(" + id + "): " +
                                         std::to_string(*exact) + " vs " + std::to_string(c.value) +
                                         " from " + c.rule);
            exact = c.value;
            MsrFact fact;
            fact.graph_id = id;
            fact.kind = FactKind::exact;
            fact.value = c.value;
            fact.rule = c.rule;
            fact.premises = c.premises;
            facts_.push_back(std::move(fact));
            last_fact_for_[key] = static_cast<int>(facts_.size() - 1);
        }
        memo_[key] = exact;
        return exact;
    }

private:
    std::vector<MsrFact>& facts_;
    std::map<std::string, std::optional<int>> memo_;
    std::map<std::string, int> last_fact_for_;
};

} // namespace

std::vector<MsrFact> msr_rules(const Graph& g, const MsrAux& aux) {
    if (!is_connected(g)) throw PreconditionError("msr rules require a connected graph");
    std::vector<MsrFact> facts;
    RuleEngine engine(facts);
    engine.solve(g, "g");

    const int n = g.order();
    if (aux.profile && aux.profile->is_cactus) {
        // Cacti are outerplanar, where msr(G) = |G| - T(G) exactly.
        std::optional<int> tree_cover;
        switch (aux.profile->cls) {
            case CactusClass::tree: tree_cover = 1; break;
            case CactusClass::unicyclic: tree_cover = 2; break;
            case CactusClass::multicyclic: tree_cover = aux.tree_cover_exact; break;
        }
        if (tree_cover) {
            facts.push_back({"g", FactKind::exact, n - *tree_cover, "msr_outerplanar_tree_cover", {}});
        } else if (aux.tree_cover) {
            facts.push_back({"g", FactKind::upper_bound, n - aux.tree_cover->lower,
                             "msr_outerplanar_tree_cover_lower", {}});
            facts.push_back({"g", FactKind::lower_bound, n - aux.tree_cover->upper,
                             "msr_outerplanar_tree_cover_upper", {}});
        }
    }

    if (aux.delta_labeling) {
        LabelingValidation delta = validate_delta_graph(g, *aux.delta_labeling);
        if (delta.valid()) {
            facts.push_back({"g", FactKind::upper_bound, n - degree_stats(g).min_degree,
                             "msr_delta_labeling_bound", {}});
        }
    }

    // Force contradiction detection now rather than at the consumer.
    std::vector<MsrFact> top;
    for (const MsrFact& f : facts)
        if (f.graph_id == "g") top.push_back(f);
    consolidate(top);
    return facts;
}

namespace {

std::vector<std::string> rule_chain_for(const std::vector<MsrFact>& facts) {
    std::vector<std::string> chain;
    for (const MsrFact& f : facts) {
        std::ostringstream line;
        line << f.rule << "(" << f.graph_id << ") = " << f.value << " [" << to_string(f.kind) << "]";
        chain.push_back(line.str());
    }
    return chain;
}

} // namespace

GccReport gcc_check(const Graph& g, const GccOptions& options) {
    GccReport report;
    report.graph_id = options.graph_id;
    report.graph = g;
    report.n = g.order();
    report.seed = options.seed;

    report.profile = recognize_cactus(g);
    if (!report.profile.is_cactus) throw NotCactusError("input graph is not a cactus");
    report.cls = report.profile.cls;
    report.provenance.push_back("recognize_cactus: " + to_string(report.cls) + " with " +
                                std::to_string(report.profile.cycle_count) + " cycle block(s)");

    MsrAux aux;
    aux.profile = report.profile;
    aux.tree_cover = tree_cover_bounds(g, report.profile);
    std::ostringstream cover_note;
    if (aux.tree_cover->exact)
        cover_note << "tree_cover: T(G) = " << *aux.tree_cover->exact;
    else
        cover_note << "tree_cover: " << aux.tree_cover->lower << " <= T(G) <= "
                   << aux.tree_cover->upper;
    report.provenance.push_back(cover_note.str());

    if (options.run_oracles) {
        std::ostringstream note;
        bool checked = false;
        if (g.order() <= 12) {
            bool oracle_cactus = cactus_oracle(g);
            if (oracle_cactus != report.profile.is_cactus)
                throw ContradictionError("cycle oracle disagrees with block-based recognition");
            note << "cycle oracle agrees";
            checked = true;
        }
        if (g.order() <= 10) {
            TreeCover cover = tree_cover_oracle(g);
            aux.tree_cover_exact = cover.value;
            if (checked) note << "; ";
            note << "tree cover oracle: T(G) = " << cover.value;
            checked = true;
        }
        if (checked) report.oracle_note = note.str();
    }

    report.msr_facts = msr_rules(g, aux);
    std::vector<MsrFact> top_facts;
    for (const MsrFact& f : report.msr_facts)
        if (f.graph_id == "g") top_facts.push_back(f);
    report.msr_g = consolidate(top_facts);
    if (report.msr_g.exact) report.m_plus_g = report.n - *report.msr_g.exact;

    BuildOptions build_opts;
    build_opts.seed = options.seed;
    build_opts.dimension = options.dimension;
    build_opts.allow_fallback = false; // certification needs the class dimension
    BuildOutcome outcome = build_representation(g, build_opts);
    report.ordering = outcome.representation.ordering;
    report.dim = outcome.diagnostics.dimension_used;
    report.representation = std::move(outcome.representation);

    OrderingValidation ord_check = validate_ordering(g, report.ordering);
    report.provenance.push_back(std::string("construction_ordering: ") +
                                (ord_check.ok ? "validated" : "INVALID"));

    report.gram = verify_representation(report.representation, report.representation.target);
    report.msr_comp_bound = report.gram.rank;
    {
        std::ostringstream line;
        line << "orthogonal_representation: dim " << report.dim << ", rank " << report.gram.rank
             << ", pattern " << (report.gram.pattern_ok ? "verified" : "MISMATCH") << " against complement";
        report.provenance.push_back(line.str());
    }

    auto msr_upper = report.msr_g.best_upper();
    report.rhs = report.n + 2;
    report.inequality_holds = false;
    if (msr_upper) {
        report.lhs = static_cast<long long>(*msr_upper) + report.msr_comp_bound;
        report.inequality_holds = report.lhs <= report.rhs;
        std::ostringstream line;
        line << "inequality: " << *msr_upper << " + " << report.msr_comp_bound << " <= " << report.rhs
             << (report.inequality_holds ? " holds" : " FAILS");
        report.provenance.push_back(line.str());
    } else {
        report.provenance.push_back("inequality: no usable msr(G) upper bound");
    }

    bool sound = ord_check.ok && report.gram.pattern_ok && report.gram.pairwise_independent;
    report.verdict = (sound && report.inequality_holds) ? Verdict::certified : Verdict::not_certified;
    return report;
}

std::string report_to_json(const GccReport& report,
                           const std::optional<std::string>& representation_ref) {
    nlohmann::ordered_json j;
    j["tool"] = {{"name", std::string(kToolName)}, {"version", std::string(kToolVersion)}};
    j["seed"] = report.seed;
    j["graph_id"] = report.graph_id;
    j["graph"] = nlohmann::ordered_json::parse(to_canonical_json(report.graph));
    j["class"] = to_string(report.cls);
    j["cycle_count"] = report.profile.cycle_count;
    j["ordering"] = report.ordering.order;
    if (representation_ref) {
        j["representation_ref"] = *representation_ref;
    } else {
        j["representation_ref"] = nullptr;
        j["representation"] = nlohmann::ordered_json::parse(representation_to_json(report.representation));
    }
    j["dim"] = report.dim;

    nlohmann::ordered_json msr;
    if (report.msr_g.exact) {
        msr["value"] = *report.msr_g.exact;
        msr["kind"] = "exact";
    } else if (report.msr_g.upper) {
        msr["value"] = *report.msr_g.upper;
        msr["kind"] = "upper_bound";
    } else {
        msr["value"] = nullptr;
        msr["kind"] = "unknown";
    }
    msr["rule_chain"] = rule_chain_for(report.msr_facts);
    j["msr_g"] = std::move(msr);
    if (report.msr_g.exact)
        j["m_plus_g"] = report.m_plus_g;
    j["msr_comp_bound"] = report.msr_comp_bound;
    j["inequality"] = {{"lhs", report.lhs}, {"rhs", report.rhs}, {"holds", report.inequality_holds}};
    j["verdict"] = to_string(report.verdict);
    j["provenance"] = report.provenance;
    j["oracle"] = report.oracle_note ? nlohmann::ordered_json(*report.oracle_note)
                                     : nlohmann::ordered_json(nullptr);
    return j.dump(2);
}

} // namespace msrcert
