#include <doctest.h>

#include "msrcert/graph.hpp"
#include "test_support.hpp"

using namespace msrcert;
using namespace testsupport;

TEST_CASE("graph construction validates edges") {
    CHECK_THROWS_AS(Graph::from_edges(3, {{0, 0}}), PreconditionError);
    CHECK_THROWS_AS(Graph::from_edges(3, {{0, 3}}), PreconditionError);
    CHECK_THROWS_AS(Graph::from_edges(3, {{0, 1}, {1, 0}}), PreconditionError);
    Graph g = Graph::from_edges(3, {{2, 0}, {1, 2}});
    CHECK(g.edge_count() == 2);
    CHECK(g.adjacent(0, 2));
    CHECK(g.neighbors(2) == std::vector<int>{0, 1});
}

TEST_CASE("complement of K_3 is 3K_1 and complete/empty swap") {
    Graph empty = complement(Graph::complete(3));
    CHECK(empty.order() == 3);
    CHECK(empty.edge_count() == 0);
    CHECK(complement(empty) == Graph::complete(3));
}

TEST_CASE("complement of C_6 is exactly the 3-prism") {
    CHECK(complement(Graph::cycle(6)) == prism());
    DegreeStats stats = degree_stats(prism());
    CHECK(stats.min_degree == 3);
    CHECK(stats.max_degree == 3);
}

TEST_CASE("complement is an involution and edge counts add up") {
    Rng rng(11);
    for (int trial = 0; trial < 200; ++trial) {
        int n = 1 + static_cast<int>(rng.below(12));
        Graph g = random_graph(rng, n, static_cast<int>(rng.below(101)));
        Graph gc = complement(g);
        CHECK(complement(gc) == g);
        CHECK(g.edge_count() + gc.edge_count() == n * (n - 1) / 2);
    }
}

TEST_CASE("induced subgraph examples") {
    Graph c6 = Graph::cycle(6);
    Graph p3 = induced_subgraph(c6, {1, 2, 3});
    CHECK(p3.order() == 3);
    CHECK(p3.edge_count() == 2);
    CHECK(p3.adjacent(0, 1));
    CHECK(p3.adjacent(1, 2));
    CHECK_FALSE(p3.adjacent(0, 2));

    std::vector<int> all{0, 1, 2, 3, 4, 5};
    CHECK(induced_subgraph(c6, all) == c6);

    CHECK(induced_subgraph(Graph::complete(5), {0, 2, 4}) == Graph::complete(3));
    CHECK_THROWS_AS(induced_subgraph(c6, {0, 9}), PreconditionError);
}

TEST_CASE("induced subgraph composes") {
    Rng rng(12);
    for (int trial = 0; trial < 50; ++trial) {
        int n = 4 + static_cast<int>(rng.below(8));
        Graph g = random_graph(rng, n, 40);
        std::vector<int> vs;
        for (int v = 0; v < n; ++v)
            if (rng.below(2)) vs.push_back(v);
        if (vs.size() < 2) continue;
        std::vector<int> ws_local, ws_global;
        for (std::size_t i = 0; i < vs.size(); ++i)
            if (rng.below(2)) {
                ws_local.push_back(static_cast<int>(i));
                ws_global.push_back(vs[i]);
            }
        CHECK(induced_subgraph(induced_subgraph(g, vs), ws_local) ==
              induced_subgraph(g, ws_global));
    }
}

TEST_CASE("degree stats examples") {
    CHECK(degree_stats(Graph::cycle(6)).min_degree == 2);
    CHECK(degree_stats(Graph::cycle(6)).max_degree == 2);
    DegreeStats star = degree_stats(Graph::star(4));
    CHECK(star.min_degree == 1);
    CHECK(star.max_degree == 4);
}

TEST_CASE("connectivity and components") {
    CHECK(is_connected(Graph::path(5)));
    Graph two_k2 = Graph::from_edges(4, {{0, 1}, {2, 3}});
    CHECK_FALSE(is_connected(two_k2));
    CHECK(components(two_k2).size() == 2);
    CHECK(is_connected(Graph(1)));
    CHECK(components(Graph(1)).size() == 1);
}

TEST_CASE("block decomposition of a tree: one block per edge") {
    Graph tree = generate_cactus(9, 0, 17);
    BlockDecomposition decomp = block_decomposition(tree);
    CHECK(decomp.blocks.size() == 8);
    for (const Block& b : decomp.blocks) CHECK(b.kind == BlockKind::edge);
    // In a tree the cut vertices are exactly the internal vertices.
    std::vector<int> internal;
    for (int v = 0; v < tree.order(); ++v)
        if (tree.degree(v) >= 2) internal.push_back(v);
    CHECK(decomp.cut_vertices == internal);
}

TEST_CASE("block decomposition of C_n and the bowtie") {
    BlockDecomposition cyc = block_decomposition(Graph::cycle(7));
    CHECK(cyc.blocks.size() == 1);
    CHECK(cyc.blocks[0].kind == BlockKind::cycle);
    CHECK(cyc.cut_vertices.empty());

    BlockDecomposition bt = block_decomposition(bowtie());
    CHECK(bt.blocks.size() == 2);
    CHECK(bt.blocks[0].kind == BlockKind::cycle);
    CHECK(bt.blocks[1].kind == BlockKind::cycle);
    CHECK(bt.cut_vertices == std::vector<int>{2});
    CHECK(bt.cut_vertices == brute_cut_vertices(bowtie()));
}

TEST_CASE("blocks partition the edge set and cut vertices match brute force") {
    Rng rng(14);
    for (int trial = 0; trial < 60; ++trial) {
        int n = 3 + static_cast<int>(rng.below(8));
        Graph g = random_connected_graph(rng, n);
        BlockDecomposition decomp = block_decomposition(g);
        int total_edges = 0;
        for (const Block& b : decomp.blocks)
            total_edges += induced_subgraph(g, b.vertices).edge_count();
        CHECK(total_edges == g.edge_count());
        CHECK(decomp.cut_vertices == brute_cut_vertices(g));
        for (const auto& [u, v] : g.edges()) {
            int containing = 0;
            for (const Block& b : decomp.blocks)
                if (std::binary_search(b.vertices.begin(), b.vertices.end(), u) &&
                    std::binary_search(b.vertices.begin(), b.vertices.end(), v))
                    ++containing;
            CHECK(containing == 1);
        }
    }
}

TEST_CASE("block decomposition rejects disconnected input") {
    CHECK_THROWS_AS(block_decomposition(Graph::from_edges(4, {{0, 1}, {2, 3}})),
                    PreconditionError);
}
