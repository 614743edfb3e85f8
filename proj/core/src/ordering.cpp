#include "msrcert/ordering.hpp"

#include <algorithm>
#include <deque>
#include <set>

namespace msrcert {

namespace {

bool is_permutation_of_vertices(const Graph& g, const std::vector<int>& order) {
    if (static_cast<int>(order.size()) != g.order()) return false;
    std::vector<bool> seen(order.size(), false);
    for (int v : order) {
        if (v < 0 || v >= g.order() || seen[static_cast<std::size_t>(v)]) return false;
        seen[static_cast<std::size_t>(v)] = true;
    }
    return true;
}

int edges_among(const Graph& g, int a, int b, int c) {
    return int(g.adjacent(a, b)) + int(g.adjacent(b, c)) + int(g.adjacent(a, c));
}

} // namespace

ConstructionOrdering ordering_from_permutation(const Graph& g, const std::vector<int>& order) {
    if (!is_permutation_of_vertices(g, order))
        throw PreconditionError("ordering is not a permutation of the vertex set");
    ConstructionOrdering ord;
    ord.order = order;
    ord.prior_neighbors.resize(order.size());
    std::vector<int> position(order.size());
    for (std::size_t m = 0; m < order.size(); ++m)
        position[static_cast<std::size_t>(order[m])] = static_cast<int>(m);
    for (std::size_t m = 0; m < order.size(); ++m) {
        auto& priors = ord.prior_neighbors[m];
        for (int w : g.neighbors(order[m])) {
            int p = position[static_cast<std::size_t>(w)];
            if (p < static_cast<int>(m)) priors.push_back(p);
        }
        std::sort(priors.begin(), priors.end());
    }
    return ord;
}

namespace {

// Incremental layout over the block decomposition. Cycle blocks are walked
// as paths; the single remaining vertex of each cycle (the closer, the one
// with two placed neighbors) is parked and released only once five vertices
// are down, so positions four and five stay at one prior neighbor whenever
// the graph allows it.
class Layout {
public:
    Layout(const Graph& g, const BlockDecomposition& decomp)
        : g_(g), decomp_(decomp), blocks_at_(static_cast<std::size_t>(g.order())) {
        for (std::size_t b = 0; b < decomp_.blocks.size(); ++b)
            for (int v : decomp_.blocks[b].vertices)
                blocks_at_[static_cast<std::size_t>(v)].push_back(static_cast<int>(b));
        // Bridges before cycles keeps one-prior moves available early.
        for (auto& list : blocks_at_)
            std::stable_sort(list.begin(), list.end(), [this](int a, int b) {
                bool ea = decomp_.blocks[static_cast<std::size_t>(a)].kind == BlockKind::edge;
                bool eb = decomp_.blocks[static_cast<std::size_t>(b)].kind == BlockKind::edge;
                if (ea != eb) return ea;
                return a < b;
            });
    }

    std::vector<int> run(int a, int c, int b) {
        placed_.assign(static_cast<std::size_t>(g_.order()), false);
        block_done_.assign(decomp_.blocks.size(), false);
        order_.clear();
        dfs_stack_.clear();
        pending_closers_.clear();

        place(a);
        place(c);
        place(b);

        std::vector<int> seed_extras;
        int b1 = block_of_edge(a, c);
        int b2 = block_of_edge(c, b);
        complete_seed_block(b1, seed_extras);
        if (b2 != b1) complete_seed_block(b2, seed_extras);

        // Stack pops in placement order: a, c, b, then the seed-block path.
        for (auto it = seed_extras.rbegin(); it != seed_extras.rend(); ++it)
            dfs_stack_.push_back(*it);
        dfs_stack_.push_back(b);
        dfs_stack_.push_back(c);
        dfs_stack_.push_back(a);

        while (true) {
            flush_closers(false);
            if (!dfs_stack_.empty()) {
                int v = dfs_stack_.back();
                dfs_stack_.pop_back();
                expand(v);
                continue;
            }
            if (!pending_closers_.empty()) {
                flush_closers(true); // nothing else is ready: close early
                continue;
            }
            break;
        }
        return order_;
    }

private:
    void place(int v) {
        order_.push_back(v);
        placed_[static_cast<std::size_t>(v)] = true;
    }

    void flush_closers(bool force) {
        while (!pending_closers_.empty() && (force || order_.size() >= 5)) {
            int v = pending_closers_.front();
            pending_closers_.pop_front();
            place(v);
            dfs_stack_.push_back(v);
            if (!force) continue;
            force = false; // release one vertex per forced call
        }
    }

    int block_of_edge(int u, int v) const {
        for (int b : blocks_at_[static_cast<std::size_t>(u)]) {
            const auto& verts = decomp_.blocks[static_cast<std::size_t>(b)].vertices;
            if (std::binary_search(verts.begin(), verts.end(), v)) return b;
        }
        throw ContradictionError("edge not covered by any block");
    }

    std::vector<int> block_neighbors(int v, const Block& block) const {
        std::vector<int> out;
        for (int w : g_.neighbors(v))
            if (std::binary_search(block.vertices.begin(), block.vertices.end(), w))
                out.push_back(w);
        return out;
    }

    // Lays out the unplaced part of a cycle block that already holds a
    // contiguous placed arc. All but the last vertex get one prior
    // neighbor; the last is parked as the closer.
    void lay_cycle_remainder(int block_id, std::vector<int>& placed_out) {
        const Block& block = decomp_.blocks[static_cast<std::size_t>(block_id)];
        std::vector<int> frontier; // placed arc ends with an unplaced block neighbor
        for (int v : block.vertices) {
            if (!placed_[static_cast<std::size_t>(v)]) continue;
            for (int w : block_neighbors(v, block))
                if (!placed_[static_cast<std::size_t>(w)]) {
                    frontier.push_back(v);
                    break;
                }
        }
        if (frontier.empty()) return; // block fully placed (K_3 seed)

        // Enter the remainder from the arc end whose next vertex is smaller.
        int best_end = -1, best_next = g_.order();
        for (int v : frontier)
            for (int w : block_neighbors(v, block))
                if (!placed_[static_cast<std::size_t>(w)] && w < best_next) {
                    best_next = w;
                    best_end = v;
                }

        std::vector<int> walk;
        int prev = best_end, cur = best_next;
        while (true) {
            walk.push_back(cur);
            int nxt = -1;
            for (int w : block_neighbors(cur, block))
                if (w != prev && !placed_[static_cast<std::size_t>(w)]) {
                    nxt = w;
                    break;
                }
            if (nxt == -1) break;
            prev = cur;
            cur = nxt;
        }
        for (std::size_t i = 0; i + 1 < walk.size(); ++i) {
            place(walk[i]);
            placed_out.push_back(walk[i]);
        }
        pending_closers_.push_back(walk.back());
    }

    void complete_seed_block(int block_id, std::vector<int>& placed_out) {
        block_done_[static_cast<std::size_t>(block_id)] = true;
        const Block& block = decomp_.blocks[static_cast<std::size_t>(block_id)];
        if (block.kind == BlockKind::edge) return;
        lay_cycle_remainder(block_id, placed_out);
    }

    void expand(int v) {
        for (int b : blocks_at_[static_cast<std::size_t>(v)]) {
            if (block_done_[static_cast<std::size_t>(b)]) continue;
            block_done_[static_cast<std::size_t>(b)] = true;
            const Block& block = decomp_.blocks[static_cast<std::size_t>(b)];
            std::vector<int> placed_here;
            if (block.kind == BlockKind::edge) {
                int other = block.vertices[0] == v ? block.vertices[1] : block.vertices[0];
                place(other);
                placed_here.push_back(other);
            } else {
                lay_cycle_remainder(b, placed_here);
            }
            flush_closers(false);
            for (auto it = placed_here.rbegin(); it != placed_here.rend(); ++it)
                dfs_stack_.push_back(*it);
        }
    }

    const Graph& g_;
    const BlockDecomposition& decomp_;
    std::vector<std::vector<int>> blocks_at_;
    std::vector<bool> placed_;
    std::vector<bool> block_done_;
    std::vector<int> order_;
    std::vector<int> dfs_stack_;
    std::deque<int> pending_closers_;
};

std::vector<int> eccentricities(const Graph& g) {
    const int n = g.order();
    std::vector<int> ecc(static_cast<std::size_t>(n), 0);
    std::vector<int> dist(static_cast<std::size_t>(n));
    std::deque<int> queue;
    for (int s = 0; s < n; ++s) {
        std::fill(dist.begin(), dist.end(), -1);
        dist[static_cast<std::size_t>(s)] = 0;
        queue.clear();
        queue.push_back(s);
        int far = 0;
        while (!queue.empty()) {
            int v = queue.front();
            queue.pop_front();
            far = std::max(far, dist[static_cast<std::size_t>(v)]);
            for (int w : g.neighbors(v))
                if (dist[static_cast<std::size_t>(w)] == -1) {
                    dist[static_cast<std::size_t>(w)] = dist[static_cast<std::size_t>(v)] + 1;
                    queue.push_back(w);
                }
        }
        ecc[static_cast<std::size_t>(s)] = far;
    }
    return ecc;
}

struct Seed {
    int a, c, b;
    bool operator<(const Seed& o) const {
        return std::tie(a, c, b) < std::tie(o.a, o.c, o.b);
    }
};

std::vector<Seed> seed_candidates(const Graph& g, const BlockDecomposition& decomp) {
    std::vector<Seed> seeds;
    std::set<Seed> seen;
    auto push = [&](int a, int c, int b) {
        if (a > b) std::swap(a, b);
        Seed s{a, c, b};
        if (seen.insert(s).second) seeds.push_back(s);
    };

    // Primary seed: a minimum-eccentricity vertex extended along its two
    // smallest incident edges. For n >= 3 such a vertex has degree >= 2.
    std::vector<int> ecc = eccentricities(g);
    int center = -1;
    for (int v = 0; v < g.order(); ++v) {
        if (g.degree(v) < 2) continue;
        if (center == -1 || ecc[static_cast<std::size_t>(v)] < ecc[static_cast<std::size_t>(center)])
            center = v;
    }
    if (center == -1) throw PreconditionError("no vertex of degree >= 2; cannot seed a P_3");
    push(g.neighbors(center)[0], center, g.neighbors(center)[1]);

    if (g.order() > 2000) return seeds; // large inputs: single deterministic seed

    constexpr std::size_t kSeedCap = 64;
    for (int c = 0; c < g.order() && seeds.size() < kSeedCap; ++c) {
        if (g.degree(c) < 2) continue;
        for (const Block& block : decomp.blocks) {
            if (block.kind != BlockKind::cycle) continue;
            if (!std::binary_search(block.vertices.begin(), block.vertices.end(), c)) continue;
            std::vector<int> in_block;
            for (int w : g.neighbors(c))
                if (std::binary_search(block.vertices.begin(), block.vertices.end(), w))
                    in_block.push_back(w);
            push(in_block[0], c, in_block[1]);
        }
        push(g.neighbors(c)[0], c, g.neighbors(c)[1]);
    }
    return seeds;
}

bool cdelta_counts_ok(const Graph& g, const std::vector<int>& order) {
    const int n = static_cast<int>(order.size());
    if (n >= 3 && edges_among(g, order[0], order[1], order[2]) < 2) return false;
    for (int m = 4; m <= n; ++m) {
        int adjacent = 0;
        for (int p = 0; p < m - 1; ++p)
            if (g.adjacent(order[static_cast<std::size_t>(m - 1)], order[static_cast<std::size_t>(p)]))
                ++adjacent;
        if (adjacent > m / 2 - 1) return false;
    }
    return true;
}

} // namespace

ConstructionOrdering find_construction_ordering(const Graph& g, const CactusProfile& profile) {
    if (!profile.is_cactus) throw NotCactusError("construction ordering requires a cactus");
    if (g.order() < 3) throw PreconditionError("construction ordering needs at least 3 vertices");

    BlockDecomposition decomp = block_decomposition(g);
    Layout layout(g, decomp);

    std::optional<std::vector<int>> first;
    for (const Seed& seed : seed_candidates(g, decomp)) {
        std::vector<int> order = layout.run(seed.a, seed.c, seed.b);
        if (!first) first = order;
        if (g.order() < 6) break;
        if (cdelta_counts_ok(g, order)) return ordering_from_permutation(g, order);
    }
    return ordering_from_permutation(g, *first);
}

OrderingValidation validate_ordering(const Graph& g, const ConstructionOrdering& ord) {
    if (!is_permutation_of_vertices(g, ord.order))
        throw PreconditionError("ordering is not a permutation of the vertex set");

    OrderingValidation result;
    const int n = g.order();
    ConstructionOrdering recomputed = ordering_from_permutation(g, ord.order);

    if (n >= 3) {
        int e = edges_among(g, ord.order[0], ord.order[1], ord.order[2]);
        if (e < 2)
            result.violations.push_back("positions 0..2 induce neither P_3 nor K_3 (" +
                                        std::to_string(e) + " edges)");
    }
    for (int m = 3; m < n; ++m) {
        std::size_t count = recomputed.prior_neighbors[static_cast<std::size_t>(m)].size();
        if (count > 2)
            result.violations.push_back("position " + std::to_string(m) + " has " +
                                        std::to_string(count) + " prior neighbors (max 2)");
        if (count < 1)
            result.violations.push_back("position " + std::to_string(m) +
                                        " has no prior neighbor (prefix disconnects)");
    }
    if (!ord.prior_neighbors.empty() && ord.prior_neighbors != recomputed.prior_neighbors)
        result.violations.push_back("stored prior_neighbors disagree with the graph");

    result.ok = result.violations.empty();
    return result;
}

namespace {

LabelingValidation validate_labeling(const Graph& g, const std::vector<int>& order, bool want_delta) {
    LabelingValidation result;
    if (!is_permutation_of_vertices(g, order))
        throw PreconditionError("labeling is not a permutation of the vertex set");

    const int n = g.order();
    result.preconditions_ok = true;
    if (n < 4) {
        result.preconditions_ok = false;
        result.issues.push_back("precondition: definition requires |G| >= 4");
    }
    if (!is_connected(g)) {
        result.preconditions_ok = false;
        result.issues.push_back("precondition: graph must be connected");
    }
    if (!is_connected(complement(g))) {
        result.preconditions_ok = false;
        result.issues.push_back("precondition: complement must be connected");
    }

    result.labeling_ok = true;
    if (n >= 3) {
        int e = edges_among(g, order[0], order[1], order[2]);
        bool head_ok = want_delta ? (e <= 1) : (e >= 2);
        if (!head_ok) {
            result.labeling_ok = false;
            result.issues.push_back(std::string("first three vertices induce ") +
                                    std::to_string(e) + " edges; expected " +
                                    (want_delta ? "3K_1 or K_2+K_1" : "K_3 or P_3"));
        }
    }
    for (int m = 4; m <= n; ++m) {
        int adjacent = 0;
        for (int p = 0; p < m - 1; ++p)
            if (g.adjacent(order[static_cast<std::size_t>(m - 1)], order[static_cast<std::size_t>(p)]))
                ++adjacent;
        int counted = want_delta ? (m - 1 - adjacent) : adjacent;
        int bound = m / 2 - 1;
        if (counted > bound) {
            result.labeling_ok = false;
            result.issues.push_back("vertex at 1-based position " + std::to_string(m) + " is " +
                                    (want_delta ? "non-adjacent" : "adjacent") + " to " +
                                    std::to_string(counted) + " prior vertices (bound " +
                                    std::to_string(bound) + ")");
        }
    }
    return result;
}

} // namespace

LabelingValidation validate_delta_graph(const Graph& g, const std::vector<int>& order) {
    return validate_labeling(g, order, true);
}

LabelingValidation validate_cdelta_graph(const Graph& g, const std::vector<int>& order) {
    return validate_labeling(g, order, false);
}

} // namespace msrcert
