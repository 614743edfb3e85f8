#include <doctest.h>

#include "msrcert/cactus.hpp"
#include "test_support.hpp"

using namespace msrcert;
using namespace testsupport;

TEST_CASE("recognition examples") {
    Graph tree = generate_cactus(8, 0, 5);
    CactusProfile p = recognize_cactus(tree);
    CHECK(p.is_cactus);
    CHECK(p.cycle_count == 0);
    CHECK(p.cls == CactusClass::tree);

    p = recognize_cactus(Graph::cycle(6));
    CHECK(p.is_cactus);
    CHECK(p.cycle_count == 1);
    CHECK(p.cls == CactusClass::unicyclic);

    CHECK_FALSE(recognize_cactus(Graph::complete(4)).is_cactus);
    CHECK_FALSE(recognize_cactus(k23()).is_cactus);
    CHECK(recognize_cactus(bowtie()).cycle_count == 2);
    CHECK(recognize_cactus(bowtie()).cls == CactusClass::multicyclic);

    CHECK_THROWS_AS(recognize_cactus(Graph::from_edges(4, {{0, 1}, {2, 3}})), PreconditionError);
}

TEST_CASE("cycle oracle examples") {
    CHECK(cactus_oracle(bowtie()));
    CHECK_FALSE(cactus_oracle(Graph::complete(4)));
    CHECK_FALSE(cactus_oracle(chorded_cycle(5)));
    CHECK_THROWS_AS(cactus_oracle(Graph::path(13)), SizeLimitError);
}

TEST_CASE("oracle agrees with block-based recognition on all connected graphs up to 5 vertices") {
    for (int n = 2; n <= 5; ++n) {
        unsigned long masks = 1ul << (n * (n - 1) / 2);
        for (unsigned long mask = 0; mask < masks; ++mask) {
            Graph g = graph_from_mask(n, mask);
            if (!is_connected(g)) continue;
            CHECK(recognize_cactus(g).is_cactus == cactus_oracle(g));
        }
    }
}

TEST_CASE("generator examples and feasibility") {
    CHECK(generate_cactus(1, 0, 3) == Graph(1));
    Graph tree = generate_cactus(10, 0, 4);
    CHECK(recognize_cactus(tree).cls == CactusClass::tree);

    Graph two = generate_cactus(9, 2, 4);
    CactusProfile p = recognize_cactus(two);
    CHECK(p.is_cactus);
    CHECK(p.cycle_count == 2);
    CHECK(cactus_oracle(two));

    CHECK_THROWS_AS(generate_cactus(4, 2, 1), PreconditionError);
    CHECK_THROWS_AS(generate_cactus(0, 0, 1), PreconditionError);
}

TEST_CASE("generator hits the requested cycle count and is deterministic") {
    Rng rng(41);
    for (int trial = 0; trial < 100; ++trial) {
        int n = 1 + static_cast<int>(rng.below(30));
        int cycles = static_cast<int>(rng.below(static_cast<std::uint64_t>((n - 1) / 2 + 1)));
        std::uint64_t seed = rng.next();
        Graph g = generate_cactus(n, cycles, seed);
        CHECK(g == generate_cactus(n, cycles, seed));
        CactusProfile p = recognize_cactus(g);
        CHECK(p.is_cactus);
        CHECK(p.cycle_count == cycles);
    }
}

TEST_CASE("tree cover bounds per class") {
    Graph uni = triangle_with_pendant_path();
    TreeCoverBounds b = tree_cover_bounds(uni, recognize_cactus(uni));
    CHECK(b.lower == 2);
    CHECK(b.upper == 2);
    CHECK(b.exact == 2);

    b = tree_cover_bounds(bowtie(), recognize_cactus(bowtie()));
    CHECK(b.lower == 3);
    CHECK(b.upper == 3); // cycle_count + 1
    CHECK_FALSE(b.exact.has_value());

    Graph p7 = Graph::path(7);
    b = tree_cover_bounds(p7, recognize_cactus(p7));
    CHECK(b.lower == 1);
    CHECK(b.upper == 1);
    CHECK(b.exact == 1);

    CHECK_THROWS_AS(tree_cover_bounds(Graph::complete(4), recognize_cactus(Graph::complete(4))),
                    NotCactusError);
}

TEST_CASE("tree cover oracle examples") {
    CHECK(tree_cover_oracle(generate_cactus(8, 0, 6)).value == 1);
    CHECK(tree_cover_oracle(Graph::cycle(4)).value == 2);
    CHECK(tree_cover_oracle(bowtie()).value == 3);
    CHECK_THROWS_AS(tree_cover_oracle(Graph::path(11)), SizeLimitError);
}

TEST_CASE("oracle covers are genuine tree partitions within the class bounds") {
    Rng rng(42);
    for (int trial = 0; trial < 40; ++trial) {
        int n = 3 + static_cast<int>(rng.below(8));
        int cycles = static_cast<int>(rng.below(static_cast<std::uint64_t>((n - 1) / 2 + 1)));
        Graph g = generate_cactus(n, cycles, rng.next());
        CactusProfile profile = recognize_cactus(g);
        TreeCoverBounds bounds = tree_cover_bounds(g, profile);
        TreeCover cover = tree_cover_oracle(g);

        CHECK(bounds.lower <= cover.value);
        CHECK(cover.value <= bounds.upper);
        if (profile.cls == CactusClass::unicyclic) CHECK(cover.value == 2);
        if (profile.cls == CactusClass::multicyclic) CHECK(cover.value >= 3);

        // parts are disjoint, cover V, and each induces a tree
        std::vector<bool> used(static_cast<std::size_t>(n), false);
        for (const auto& part : cover.parts) {
            CHECK(induces_tree(g, part));
            for (int v : part) {
                CHECK_FALSE(used[static_cast<std::size_t>(v)]);
                used[static_cast<std::size_t>(v)] = true;
            }
        }
        for (bool u : used) CHECK(u);
    }
}
