#include "msrcert/graph.hpp"

#include <algorithm>
#include <string>

namespace msrcert {

Graph::Graph(int n) : n_(n) {
    if (n < 0) throw PreconditionError("vertex count must be nonnegative");
    adj_.resize(static_cast<std::size_t>(n));
}

void Graph::check_vertex(int v) const {
    if (v < 0 || v >= n_)
        throw PreconditionError("vertex " + std::to_string(v) + " out of range [0," +
                                std::to_string(n_) + ")");
}

void Graph::add_edge(int u, int v) {
    check_vertex(u);
    check_vertex(v);
    if (u == v) throw PreconditionError("loops are not allowed: " + std::to_string(u));
    if (adjacent(u, v))
        throw PreconditionError("duplicate edge {" + std::to_string(u) + "," +
                                std::to_string(v) + "}");
    auto& au = adj_[static_cast<std::size_t>(u)];
    auto& av = adj_[static_cast<std::size_t>(v)];
    au.insert(std::lower_bound(au.begin(), au.end(), v), v);
    av.insert(std::lower_bound(av.begin(), av.end(), u), u);
    ++m_;
}

Graph Graph::from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
    Graph g(n);
    for (const auto& [u, v] : edges) g.add_edge(u, v);
    return g;
}

Graph Graph::path(int n) {
    Graph g(n);
    for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
    return g;
}

Graph Graph::cycle(int n) {
    if (n < 3) throw PreconditionError("a cycle needs at least 3 vertices");
    Graph g = path(n);
    g.add_edge(n - 1, 0);
    return g;
}

Graph Graph::complete(int n) {
    Graph g(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) g.add_edge(i, j);
    return g;
}

Graph Graph::star(int leaves) {
    Graph g(leaves + 1);
    for (int i = 1; i <= leaves; ++i) g.add_edge(0, i);
    return g;
}

int Graph::degree(int v) const {
    check_vertex(v);
    return static_cast<int>(adj_[static_cast<std::size_t>(v)].size());
}

bool Graph::adjacent(int u, int v) const {
    check_vertex(u);
    check_vertex(v);
    const auto& a = adj_[static_cast<std::size_t>(u)];
    return std::binary_search(a.begin(), a.end(), v);
}

const std::vector<int>& Graph::neighbors(int v) const {
    check_vertex(v);
    return adj_[static_cast<std::size_t>(v)];
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(static_cast<std::size_t>(m_));
    for (int u = 0; u < n_; ++u)
        for (int v : adj_[static_cast<std::size_t>(u)])
            if (u < v) out.emplace_back(u, v);
    return out;
}

Graph complement(const Graph& g) {
    const int n = g.order();
    Graph out(n);
    for (int u = 0; u < n; ++u) {
        const auto& nbrs = g.neighbors(u);
        std::size_t k = 0;
        for (int v = u + 1; v < n; ++v) {
            while (k < nbrs.size() && nbrs[k] < v) ++k;
            if (k < nbrs.size() && nbrs[k] == v) continue;
            out.add_edge(u, v);
        }
    }
    return out;
}

Graph induced_subgraph(const Graph& g, const std::vector<int>& vs) {
    std::vector<int> sorted = vs;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    std::vector<int> relabel(static_cast<std::size_t>(g.order()), -1);
    for (std::size_t i = 0; i < sorted.size(); ++i) {
        if (sorted[i] < 0 || sorted[i] >= g.order())
            throw PreconditionError("induced subgraph: vertex out of range");
        relabel[static_cast<std::size_t>(sorted[i])] = static_cast<int>(i);
    }
    Graph out(static_cast<int>(sorted.size()));
    for (int u : sorted)
        for (int v : g.neighbors(u))
            if (u < v && relabel[static_cast<std::size_t>(v)] >= 0)
                out.add_edge(relabel[static_cast<std::size_t>(u)],
                             relabel[static_cast<std::size_t>(v)]);
    return out;
}

DegreeStats degree_stats(const Graph& g) {
    DegreeStats stats;
    if (g.order() == 0) return stats;
    stats.min_degree = g.degree(0);
    stats.max_degree = g.degree(0);
    for (int v = 1; v < g.order(); ++v) {
        stats.min_degree = std::min(stats.min_degree, g.degree(v));
        stats.max_degree = std::max(stats.max_degree, g.degree(v));
    }
    return stats;
}

std::vector<std::vector<int>> components(const Graph& g) {
    const int n = g.order();
    std::vector<bool> seen(static_cast<std::size_t>(n), false);
    std::vector<std::vector<int>> comps;
    std::vector<int> stack;
    for (int s = 0; s < n; ++s) {
        if (seen[static_cast<std::size_t>(s)]) continue;
        std::vector<int> comp;
        stack.push_back(s);
        seen[static_cast<std::size_t>(s)] = true;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            comp.push_back(v);
            for (int w : g.neighbors(v)) {
                if (!seen[static_cast<std::size_t>(w)]) {
                    seen[static_cast<std::size_t>(w)] = true;
                    stack.push_back(w);
                }
            }
        }
        std::sort(comp.begin(), comp.end());
        comps.push_back(std::move(comp));
    }
    return comps;
}

bool is_connected(const Graph& g) {
    if (g.order() == 0) return true;
    return components(g).size() == 1;
}

bool BlockDecomposition::is_cut_vertex(int v) const {
    return std::binary_search(cut_vertices.begin(), cut_vertices.end(), v);
}

namespace {

Block make_block(std::vector<std::pair<int, int>>&& block_edges) {
    Block block;
    block.edge_count = static_cast<int>(block_edges.size());
    std::vector<int> verts;
    verts.reserve(block_edges.size() * 2);
    for (const auto& [a, b] : block_edges) {
        verts.push_back(a);
        verts.push_back(b);
    }
    std::sort(verts.begin(), verts.end());
    verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
    block.vertices = std::move(verts);
    const int k = static_cast<int>(block.vertices.size());
    // A biconnected block with as many edges as vertices is exactly a
    // chordless cycle; two vertices and one edge is a bridge.
    if (k == 2 && block.edge_count == 1)
        block.kind = BlockKind::edge;
    else if (k >= 3 && block.edge_count == k)
        block.kind = BlockKind::cycle;
    else
        block.kind = BlockKind::other;
    return block;
}

} // namespace

BlockDecomposition block_decomposition(const Graph& g) {
    if (!is_connected(g))
        throw PreconditionError("block decomposition requires a connected graph");

    const int n = g.order();
    BlockDecomposition out;
    if (n == 0) return out;

    std::vector<int> disc(static_cast<std::size_t>(n), -1);
    std::vector<int> low(static_cast<std::size_t>(n), 0);
    std::vector<bool> is_cut(static_cast<std::size_t>(n), false);
    std::vector<std::pair<int, int>> edge_stack;

    struct Frame {
        int v;
        int parent;
        std::size_t next;
        bool parent_skipped;
    };
    std::vector<Frame> frames;
    int timer = 0;
    int root_children = 0;

    disc[0] = low[0] = timer++;
    frames.push_back({0, -1, 0, false});

    while (!frames.empty()) {
        Frame& f = frames.back();
        const auto& nbrs = g.neighbors(f.v);
        if (f.next < nbrs.size()) {
            int w = nbrs[f.next++];
            if (w == f.parent && !f.parent_skipped) {
                f.parent_skipped = true; // simple graph: exactly one parent edge
                continue;
            }
            if (disc[static_cast<std::size_t>(w)] == -1) {
                if (f.v == 0) ++root_children;
                edge_stack.emplace_back(f.v, w);
                disc[static_cast<std::size_t>(w)] = low[static_cast<std::size_t>(w)] = timer++;
                frames.push_back({w, f.v, 0, false});
            } else if (disc[static_cast<std::size_t>(w)] < disc[static_cast<std::size_t>(f.v)]) {
                edge_stack.emplace_back(f.v, w);
                low[static_cast<std::size_t>(f.v)] =
                    std::min(low[static_cast<std::size_t>(f.v)], disc[static_cast<std::size_t>(w)]);
            }
        } else {
            int v = f.v;
            int u = f.parent;
            frames.pop_back();
            if (u == -1) break;
            low[static_cast<std::size_t>(u)] =
                std::min(low[static_cast<std::size_t>(u)], low[static_cast<std::size_t>(v)]);
            if (low[static_cast<std::size_t>(v)] >= disc[static_cast<std::size_t>(u)]) {
                if (u != 0) is_cut[static_cast<std::size_t>(u)] = true;
                std::vector<std::pair<int, int>> block_edges;
                while (!edge_stack.empty()) {
                    auto e = edge_stack.back();
                    edge_stack.pop_back();
                    block_edges.push_back(e);
                    if (e.first == u && e.second == v) break;
                }
                out.blocks.push_back(make_block(std::move(block_edges)));
            }
        }
    }
    if (root_children >= 2) is_cut[0] = true;

    for (int v = 0; v < n; ++v)
        if (is_cut[static_cast<std::size_t>(v)]) out.cut_vertices.push_back(v);

    // Canonical block order keeps downstream layouts deterministic.
    std::sort(out.blocks.begin(), out.blocks.end(),
              [](const Block& a, const Block& b) { return a.vertices < b.vertices; });
    return out;
}

} // namespace msrcert
