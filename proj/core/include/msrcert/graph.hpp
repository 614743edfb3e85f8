#pragma once

#include <utility>
#include <vector>

#include "msrcert/errors.hpp"

namespace msrcert {

/// Simple undirected graph on vertices 0..n-1 with sorted adjacency lists.
/// Invariants: adjacency is symmetric, irreflexive (no loops) and in range.
/// Values are treated as immutable once fully constructed, so they can be
/// shared freely across threads.
class Graph {
public:
    Graph() = default;
    explicit Graph(int n);

    /// Builds a graph and validates every edge (range, loops, duplicates).
    static Graph from_edges(int n, const std::vector<std::pair<int, int>>& edges);

    static Graph path(int n);
    static Graph cycle(int n);
    static Graph complete(int n);
    static Graph star(int leaves);

    int order() const { return n_; }
    int edge_count() const { return m_; }
    int degree(int v) const;
    bool adjacent(int u, int v) const;
    const std::vector<int>& neighbors(int v) const;

    /// Edge list with u < v, sorted lexicographically.
    std::vector<std::pair<int, int>> edges() const;

    void add_edge(int u, int v);

    bool operator==(const Graph&) const = default;

private:
    void check_vertex(int v) const;

    int n_ = 0;
    int m_ = 0;
    std::vector<std::vector<int>> adj_;
};

/// Edge-complement: {i,j} present iff absent in g. Same vertex set.
Graph complement(const Graph& g);

/// Subgraph induced by vs, relabeled 0..|vs|-1 by ascending original index.
/// Duplicate entries in vs are ignored.
Graph induced_subgraph(const Graph& g, const std::vector<int>& vs);

struct DegreeStats {
    int min_degree = 0;
    int max_degree = 0;
};
DegreeStats degree_stats(const Graph& g);

bool is_connected(const Graph& g);
std::vector<std::vector<int>> components(const Graph& g);

enum class BlockKind { edge, cycle, other };

/// One maximal 2-connected block (or bridge edge). `vertices` is sorted;
/// for kind == cycle the induced subgraph is a chordless cycle.
struct Block {
    std::vector<int> vertices;
    int edge_count = 0;
    BlockKind kind = BlockKind::edge;
};

/// Blocks partition the edge set; a vertex lies in >= 2 blocks exactly when
/// it is a cut vertex. Blocks and cut vertices are canonically sorted.
struct BlockDecomposition {
    std::vector<Block> blocks;
    std::vector<int> cut_vertices;

    bool is_cut_vertex(int v) const;
};

/// Hopcroft-Tarjan biconnected components. Requires a connected input.
BlockDecomposition block_decomposition(const Graph& g);

} // namespace msrcert
