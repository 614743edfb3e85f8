#include <doctest.h>

#include <algorithm>
#include <numeric>

#include "msrcert/ordering.hpp"
#include "test_support.hpp"

using namespace msrcert;
using namespace testsupport;

TEST_CASE("C_6 under the cyclic labeling: prior neighbor counts (-,-,-,1,1,2)") {
    Graph c6 = Graph::cycle(6);
    ConstructionOrdering ord = ordering_from_permutation(c6, {0, 1, 2, 3, 4, 5});
    CHECK(ord.prior_neighbors[3].size() == 1);
    CHECK(ord.prior_neighbors[4].size() == 1);
    CHECK(ord.prior_neighbors[5].size() == 2);
    CHECK(ord.prior_neighbors[5] == std::vector<int>{0, 4});
    CHECK(validate_ordering(c6, ord).ok);
}

TEST_CASE("every ordering of K_4 fails: position 3 sees 3 prior neighbors") {
    Graph k4 = Graph::complete(4);
    std::vector<int> perm{0, 1, 2, 3};
    do {
        OrderingValidation v = validate_ordering(k4, ordering_from_permutation(k4, perm));
        CHECK_FALSE(v.ok);
        CHECK(v.violations.front().find("position 3") != std::string::npos);
    } while (std::next_permutation(perm.begin(), perm.end()));
}

TEST_CASE("breadth-first tree orderings have exactly one prior neighbor per vertex") {
    Rng rng(51);
    for (int trial = 0; trial < 20; ++trial) {
        int n = 4 + static_cast<int>(rng.below(8));
        Graph tree = generate_cactus(n, 0, rng.next());
        int center = -1;
        for (int v = 0; v < n; ++v)
            if (tree.degree(v) >= 2) center = v;
        REQUIRE(center >= 0);
        std::vector<int> order{tree.neighbors(center)[0], center, tree.neighbors(center)[1]};
        std::vector<bool> placed(static_cast<std::size_t>(n), false);
        for (int v : order) placed[static_cast<std::size_t>(v)] = true;
        for (std::size_t head = 0; head < order.size(); ++head)
            for (int w : tree.neighbors(order[head]))
                if (!placed[static_cast<std::size_t>(w)]) {
                    placed[static_cast<std::size_t>(w)] = true;
                    order.push_back(w);
                }
        ConstructionOrdering ord = ordering_from_permutation(tree, order);
        CHECK(validate_ordering(tree, ord).ok);
        for (std::size_t m = 3; m < ord.prior_neighbors.size(); ++m)
            CHECK(ord.prior_neighbors[m].size() == 1);
    }
}

TEST_CASE("bowtie ordering round trip") {
    Graph g = bowtie();
    ConstructionOrdering ord = find_construction_ordering(g, recognize_cactus(g));
    CHECK(validate_ordering(g, ord).ok);
    // one closing vertex per triangle; the first may already sit at
    // position 2 when the seed triple is the whole K_3 block
    int closers = 0;
    for (std::size_t m = 2; m < ord.prior_neighbors.size(); ++m) {
        CHECK(ord.prior_neighbors[m].size() <= 2);
        if (ord.prior_neighbors[m].size() == 2) ++closers;
    }
    CHECK(closers == 2);
}

TEST_CASE("find_construction_ordering is sound and prefix-connected on random cacti") {
    Rng rng(52);
    for (int trial = 0; trial < 60; ++trial) {
        int n = 3 + static_cast<int>(rng.below(28));
        int cycles = static_cast<int>(rng.below(static_cast<std::uint64_t>((n - 1) / 2 + 1)));
        Graph g = generate_cactus(n, cycles, rng.next());
        ConstructionOrdering ord = find_construction_ordering(g, recognize_cactus(g));
        CHECK(validate_ordering(g, ord).ok);
        // prefix connectivity
        for (int m = 3; m <= n; ++m) {
            std::vector<int> prefix(ord.order.begin(), ord.order.begin() + m);
            CHECK(is_connected(induced_subgraph(g, prefix)));
        }
    }
}

TEST_CASE("ordering is deterministic for a fixed graph") {
    Graph g = generate_cactus(20, 4, 99);
    CactusProfile p = recognize_cactus(g);
    ConstructionOrdering a = find_construction_ordering(g, p);
    ConstructionOrdering b = find_construction_ordering(g, p);
    CHECK(a.order == b.order);
    CHECK(a.prior_neighbors == b.prior_neighbors);
}

TEST_CASE("ordering requires a cactus and at least three vertices") {
    CactusProfile fake;
    fake.is_cactus = false;
    CHECK_THROWS_AS(find_construction_ordering(Graph::complete(4), fake), NotCactusError);
    CHECK_THROWS_AS(find_construction_ordering(Graph::path(2), recognize_cactus(Graph::path(2))),
                    PreconditionError);
    CHECK_THROWS_AS(ordering_from_permutation(Graph::path(3), {0, 0, 1}), PreconditionError);
    CHECK_THROWS_AS(validate_ordering(Graph::path(3), ConstructionOrdering{{0, 1}, {}}),
                    PreconditionError);
}

TEST_CASE("the 3-prism under the complement-cyclic labeling is a delta graph") {
    LabelingValidation v = validate_delta_graph(prism(), {0, 1, 2, 3, 4, 5});
    CHECK(v.preconditions_ok);
    CHECK(v.labeling_ok);
    CHECK(v.valid());
}

TEST_CASE("a K_3 start violates the delta condition") {
    // first three vertices of the prism order 0,2,4 form a triangle
    LabelingValidation v = validate_delta_graph(prism(), {0, 2, 4, 1, 3, 5});
    CHECK(v.preconditions_ok);
    CHECK_FALSE(v.labeling_ok);
}

TEST_CASE("C_6 is not a delta graph under any of its 720 orders") {
    Graph c6 = Graph::cycle(6);
    std::vector<int> perm{0, 1, 2, 3, 4, 5};
    do {
        CHECK_FALSE(validate_delta_graph(c6, perm).labeling_ok);
    } while (std::next_permutation(perm.begin(), perm.end()));
}

TEST_CASE("C_6 under the cyclic order is a C-delta graph") {
    LabelingValidation v = validate_cdelta_graph(Graph::cycle(6), {0, 1, 2, 3, 4, 5});
    CHECK(v.valid());
}

TEST_CASE("C-delta equals delta of the complement") {
    Rng rng(53);
    for (int trial = 0; trial < 60; ++trial) {
        int n = 4 + static_cast<int>(rng.below(5));
        Graph g = random_graph(rng, n, 50);
        std::vector<int> order(static_cast<std::size_t>(n));
        std::iota(order.begin(), order.end(), 0);
        for (std::size_t i = order.size(); i > 1; --i)
            std::swap(order[i - 1], order[static_cast<std::size_t>(rng.below(i))]);
        LabelingValidation lhs = validate_cdelta_graph(g, order);
        LabelingValidation rhs = validate_delta_graph(complement(g), order);
        CHECK(lhs.preconditions_ok == rhs.preconditions_ok);
        CHECK(lhs.labeling_ok == rhs.labeling_ok);
    }
}

TEST_CASE("labeling preconditions are reported separately") {
    // star: complement is disconnected, so preconditions fail even though
    // the counting condition may pass
    Graph star = Graph::star(5);
    std::vector<int> order{1, 0, 2, 3, 4, 5};
    LabelingValidation v = validate_cdelta_graph(star, order);
    CHECK_FALSE(v.preconditions_ok);
    REQUIRE(!v.issues.empty());
    CHECK(v.issues.front().find("precondition") != std::string::npos);
}

TEST_CASE("cactus orderings satisfy the C-delta counting conditions for n >= 6") {
    Rng rng(54);
    int checked = 0;
    for (int trial = 0; trial < 60; ++trial) {
        int n = 6 + static_cast<int>(rng.below(20));
        int cycles = static_cast<int>(rng.below(static_cast<std::uint64_t>((n - 1) / 2 + 1)));
        Graph g = generate_cactus(n, cycles, rng.next());
        ConstructionOrdering ord = find_construction_ordering(g, recognize_cactus(g));
        LabelingValidation v = validate_cdelta_graph(g, ord.order);
        CHECK(v.labeling_ok);
        ++checked;
    }
    CHECK(checked == 60);
}

TEST_CASE("a fixed multicyclic cactus is C-delta labelable via the found ordering") {
    // Two triangles, a square, and pendant trees hanging off them.
    Graph g = Graph::from_edges(12, {{0, 1},
                                     {1, 2},
                                     {2, 0},
                                     {2, 3},
                                     {3, 4},
                                     {4, 5},
                                     {5, 2},
                                     {4, 6},
                                     {6, 7},
                                     {7, 8},
                                     {8, 6},
                                     {8, 9},
                                     {9, 10},
                                     {9, 11}});
    CactusProfile p = recognize_cactus(g);
    REQUIRE(p.is_cactus);
    CHECK(p.cycle_count == 3);
    ConstructionOrdering ord = find_construction_ordering(g, p);
    CHECK(validate_ordering(g, ord).ok);
    CHECK(validate_cdelta_graph(g, ord.order).valid());
}
