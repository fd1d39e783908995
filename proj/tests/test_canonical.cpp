#include "doctest.h"

#include <numeric>
#include <random>

#include "eqm/canonical.hpp"
#include "eqm/errors.hpp"
#include "eqm/families.hpp"
#include "helpers.hpp"

using namespace eqm;
using testutil::permute_graph;

TEST_CASE("canonical form is invariant under relabeling") {
    std::mt19937 rng(17);
    Graph c5 = cycle_graph(5);
    std::string base = canonical_form(c5);
    std::vector<int> perm(5);
    std::iota(perm.begin(), perm.end(), 0);
    for (int it = 0; it < 20; ++it) {
        std::shuffle(perm.begin(), perm.end(), rng);
        CHECK(canonical_form(permute_graph(c5, perm)) == base);
    }
}

TEST_CASE("isomorphism spot checks") {
    Graph a = complete_graph(5);
    a.remove_edge(0, 1);
    Graph b = complete_graph(5);
    b.remove_edge(2, 3);
    CHECK(is_isomorphic(a, b));

    // C5 vs K5 minus a 2-edge matching: degree multisets differ
    Graph k5m = complete_graph(5);
    k5m.remove_edge(0, 1);
    k5m.remove_edge(2, 3);
    CHECK(!is_isomorphic(cycle_graph(5), k5m));

    CHECK(is_isomorphic(Graph(0), Graph(0)));
    CHECK(is_isomorphic(Graph(1), Graph(1)));
    CHECK(!is_isomorphic(Graph(2), complete_graph(2)));
}

TEST_CASE("random graphs match their relabelings") {
    std::mt19937 rng(23);
    std::vector<int> perm;
    for (int it = 0; it < 60; ++it) {
        int n = 1 + it % 8;
        Graph g = testutil::random_graph(rng, n, 0.5);
        perm.resize(n);
        std::iota(perm.begin(), perm.end(), 0);
        for (int rep = 0; rep < 20; ++rep) {
            std::shuffle(perm.begin(), perm.end(), rng);
            Graph h = permute_graph(g, perm);
            CHECK(is_isomorphic(g, h));
            auto map = isomorphism(g, h);
            REQUIRE(map);
            for (int u = 0; u < n; ++u)
                for (int v = u + 1; v < n; ++v)
                    CHECK(g.has_edge(u, v) == h.has_edge((*map)[u], (*map)[v]));
        }
    }
}

TEST_CASE("distinct classes get distinct codes at n=4") {
    // 11 isomorphism classes of graphs on 4 vertices
    std::vector<std::uint64_t> codes;
    for (std::uint64_t mask = 0; mask < 64; ++mask)
        codes.push_back(canonical_code(graph_from_code(4, mask)));
    std::sort(codes.begin(), codes.end());
    codes.erase(std::unique(codes.begin(), codes.end()), codes.end());
    CHECK(codes.size() == 11);
}

TEST_CASE("canonical guard") {
    CHECK_THROWS_AS(canonical_form(Graph(11)), guard_error);
    CHECK_NOTHROW(canonical_form(Graph(10)));
}

TEST_CASE("labeled code round trip") {
    std::mt19937 rng(29);
    for (int it = 0; it < 40; ++it) {
        Graph g = testutil::random_graph(rng, 1 + it % 10, 0.45);
        CHECK(graph_from_code(g.order(), labeled_code(g)) == g);
    }
}

TEST_CASE("canonical graph is isomorphic to the input") {
    std::mt19937 rng(31);
    for (int it = 0; it < 40; ++it) {
        Graph g = testutil::random_graph(rng, 1 + it % 9, 0.5);
        Graph c = canonical_graph(g);
        CHECK(is_isomorphic(g, c));
        CHECK(canonical_code(c) == canonical_code(g));
    }
}
