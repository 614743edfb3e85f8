#include "msrcert/cactus.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "msrcert/rng.hpp"

namespace msrcert {

std::string to_string(CactusClass c) {
    switch (c) {
        case CactusClass::tree: return "tree";
        case CactusClass::unicyclic: return "unicyclic";
        case CactusClass::multicyclic: return "multicyclic";
    }
    return "?";
}

namespace {

CactusClass class_for(int cycle_count) {
    if (cycle_count == 0) return CactusClass::tree;
    if (cycle_count == 1) return CactusClass::unicyclic;
    return CactusClass::multicyclic;
}

} // namespace

CactusProfile recognize_cactus(const Graph& g) {
    if (!is_connected(g)) throw PreconditionError("cactus recognition requires a connected graph");
    BlockDecomposition decomp = block_decomposition(g);
    CactusProfile profile;
    profile.is_cactus = true;
    for (const Block& b : decomp.blocks) {
        if (b.kind == BlockKind::cycle)
            ++profile.cycle_count;
        else if (b.kind != BlockKind::edge)
            profile.is_cactus = false;
    }
    profile.cls = class_for(profile.cycle_count);
    return profile;
}

namespace {

// Enumerates every simple cycle exactly once: the root is the smallest
// vertex on the cycle and the direction is fixed by path[1] < closing
// vertex. Returns false as soon as some edge lies on a second cycle.
class CycleCounter {
public:
    explicit CycleCounter(const Graph& g)
        : g_(g), on_path_(static_cast<std::size_t>(g.order()), false) {}

    bool edges_pairwise_cycle_disjoint() {
        for (int s = 0; s < g_.order(); ++s) {
            path_.clear();
            path_.push_back(s);
            on_path_[static_cast<std::size_t>(s)] = true;
            if (!extend(s)) return false;
            on_path_[static_cast<std::size_t>(s)] = false;
        }
        return true;
    }

private:
    bool extend(int v) {
        const int s = path_.front();
        for (int w : g_.neighbors(v)) {
            if (w == s && path_.size() >= 3 && path_[1] < v) {
                if (!record_cycle()) return false;
            }
            if (w <= s || on_path_[static_cast<std::size_t>(w)]) continue;
            path_.push_back(w);
            on_path_[static_cast<std::size_t>(w)] = true;
            if (!extend(w)) return false;
            on_path_[static_cast<std::size_t>(w)] = false;
            path_.pop_back();
        }
        return true;
    }

    bool record_cycle() {
        for (std::size_t i = 0; i < path_.size(); ++i) {
            int a = path_[i];
            int b = path_[(i + 1) % path_.size()];
            if (a > b) std::swap(a, b);
            if (++edge_uses_[{a, b}] > 1) return false;
        }
        return true;
    }

    const Graph& g_;
    std::vector<bool> on_path_;
    std::vector<int> path_;
    std::map<std::pair<int, int>, int> edge_uses_;
};

} // namespace

bool cactus_oracle(const Graph& g) {
    if (g.order() > 12) throw SizeLimitError("cactus oracle is capped at 12 vertices");
    if (!is_connected(g)) throw PreconditionError("cactus oracle requires a connected graph");
    return CycleCounter(g).edges_pairwise_cycle_disjoint();
}

Graph generate_cactus(int n, int cycles, std::uint64_t seed) {
    if (n < 1) throw PreconditionError("generator needs at least one vertex");
    if (cycles < 0) throw PreconditionError("negative cycle count");
    if (2 * cycles > n - 1)
        throw PreconditionError("infeasible: a cactus on " + std::to_string(n) +
                                " vertices supports at most " + std::to_string((n - 1) / 2) +
                                " cycles");

    Rng rng(Rng::mix(seed, 0x9c1a5cull));

    // Budget: every cycle of length L consumes L-1 fresh vertices, every
    // pendant edge one. Spare vertices are split between longer cycles and
    // tree growth.
    const int spare = (n - 1) - 2 * cycles;
    int cycle_growth = (cycles > 0 && spare > 0) ? static_cast<int>(rng.below(spare + 1)) : 0;
    int tree_vertices = spare - cycle_growth;

    std::vector<int> cycle_len(static_cast<std::size_t>(cycles), 3);
    for (int i = 0; i < cycle_growth; ++i)
        ++cycle_len[static_cast<std::size_t>(rng.below(cycles))];

    enum class Op { cycle, pendant };
    std::vector<std::pair<Op, int>> ops;
    for (int len : cycle_len) ops.emplace_back(Op::cycle, len);
    for (int i = 0; i < tree_vertices; ++i) ops.emplace_back(Op::pendant, 0);
    for (std::size_t i = ops.size(); i > 1; --i)
        std::swap(ops[i - 1], ops[static_cast<std::size_t>(rng.below(i))]);

    Graph g(n);
    int built = 1; // vertex 0 is the initial tree
    for (const auto& [op, len] : ops) {
        int anchor = static_cast<int>(rng.below(built));
        if (op == Op::pendant) {
            g.add_edge(anchor, built);
            ++built;
        } else {
            int prev = anchor;
            for (int j = 0; j < len - 1; ++j) {
                g.add_edge(prev, built);
                prev = built;
                ++built;
            }
            g.add_edge(prev, anchor);
        }
    }

    // Random relabeling so structural positions carry no label information.
    std::vector<int> relabel(static_cast<std::size_t>(n));
    std::iota(relabel.begin(), relabel.end(), 0);
    for (std::size_t i = relabel.size(); i > 1; --i)
        std::swap(relabel[i - 1], relabel[static_cast<std::size_t>(rng.below(i))]);
    Graph out(n);
    for (const auto& [u, v] : g.edges())
        out.add_edge(relabel[static_cast<std::size_t>(u)], relabel[static_cast<std::size_t>(v)]);
    return out;
}

TreeCoverBounds tree_cover_bounds(const Graph& g, const CactusProfile& profile) {
    (void)g;
    if (!profile.is_cactus) throw NotCactusError("tree cover bounds require a cactus");
    TreeCoverBounds bounds;
    switch (profile.cls) {
        case CactusClass::tree:
            bounds = {1, 1, 1};
            break;
        case CactusClass::unicyclic:
            bounds = {2, 2, 2};
            break;
        case CactusClass::multicyclic:
            // Breaking each cycle at one vertex leaves induced trees, so
            // cycle_count + 1 parts always suffice.
            bounds.lower = 3;
            bounds.upper = profile.cycle_count + 1;
            bounds.exact = std::nullopt;
            break;
    }
    return bounds;
}

bool induces_tree(const Graph& g, const std::vector<int>& part) {
    if (part.empty()) return false;
    Graph h = induced_subgraph(g, part);
    return h.edge_count() == h.order() - 1 && is_connected(h);
}

namespace {

// Restricted-growth enumeration of set partitions into at most max_parts
// parts, pruning any part that stops being an induced forest.
class PartitionSearch {
public:
    PartitionSearch(const Graph& g, int max_parts) : g_(g), max_parts_(max_parts) {}

    bool run(std::vector<std::vector<int>>& result) {
        parts_.clear();
        result.clear();
        return place(0, result);
    }

private:
    bool place(int v, std::vector<std::vector<int>>& result) {
        if (v == g_.order()) {
            for (const auto& part : parts_)
                if (!induces_tree(g_, part)) return false;
            result = parts_;
            return true;
        }
        for (std::size_t p = 0; p < parts_.size(); ++p) {
            parts_[p].push_back(v);
            if (acyclic(parts_[p]) && place(v + 1, result)) return true;
            parts_[p].pop_back();
        }
        if (static_cast<int>(parts_.size()) < max_parts_) {
            parts_.push_back({v});
            if (place(v + 1, result)) return true;
            parts_.pop_back();
        }
        return false;
    }

    bool acyclic(const std::vector<int>& part) const {
        Graph h = induced_subgraph(g_, part);
        return h.edge_count() == h.order() - static_cast<int>(components(h).size());
    }

    const Graph& g_;
    int max_parts_;
    std::vector<std::vector<int>> parts_;
};

} // namespace

TreeCover tree_cover_oracle(const Graph& g) {
    if (g.order() > 10) throw SizeLimitError("tree cover oracle is capped at 10 vertices");
    if (!is_connected(g)) throw PreconditionError("tree cover oracle requires a connected graph");
    TreeCover cover;
    for (int parts = 1; parts <= g.order(); ++parts) {
        PartitionSearch search(g, parts);
        if (search.run(cover.parts)) {
            cover.value = static_cast<int>(cover.parts.size());
            return cover;
        }
    }
    throw ContradictionError("no tree cover found; singletons always cover");
}

} // namespace msrcert
