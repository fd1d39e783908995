#include "doctest.h"

#include <random>
#include <set>

#include "eqm/canonical.hpp"
#include "eqm/families.hpp"
#include "eqm/matching.hpp"
#include "helpers.hpp"

using namespace eqm;
using testutil::petersen;
using testutil::random_graph;
using testutil::subset_max_matching_size;
using testutil::subset_maximal_matchings;

TEST_CASE("maximum matching on named graphs") {
    CHECK(maximum_matching(cycle_graph(5)).size() == 2);
    CHECK(maximum_matching(complete_graph(4)).size() == 2);
    CHECK(has_perfect_matching(complete_graph(4)));
    CHECK(maximum_matching(petersen()).size() == 5);

    CHECK(matching_number(complete_graph(7)) == 3);
    CHECK(!has_perfect_matching(complete_graph(7)));
    CHECK(matching_number(cycle_graph(7)) == 3);
    CHECK(matching_number(complete_bipartite_graph(3, 3)) == 3);
    CHECK(has_perfect_matching(complete_bipartite_graph(3, 3)));
    CHECK(matching_number(Graph(0)) == 0);
    CHECK(has_perfect_matching(Graph(0)));
}

TEST_CASE("blossom equals subset brute force on all graphs up to n=5") {
    for (int n = 0; n <= 5; ++n) {
        int bits = n * (n - 1) / 2;
        for (std::uint64_t mask = 0; mask < (1ull << bits); ++mask) {
            Graph g = graph_from_code(n, mask);
            Matching m = maximum_matching(g);
            CHECK(is_matching_of(g, m));
            CHECK(m.size() == subset_max_matching_size(g));
        }
    }
}

TEST_CASE("blossom equals enumeration maximum on random graphs") {
    std::mt19937 rng(41);
    for (int it = 0; it < 400; ++it) {
        int n = 1 + it % 9;
        Graph g = random_graph(rng, n, 0.2 + 0.6 * (it % 7) / 6.0);
        int best = 0;
        enumerate_maximal_matchings(g, [&](const Matching& m) {
            best = std::max(best, m.size());
            return true;
        });
        CHECK(maximum_matching(g).size() == best);
    }
}

TEST_CASE("nu changes by at most one under vertex deletion") {
    std::mt19937 rng(43);
    for (int it = 0; it < 200; ++it) {
        int n = 2 + it % 9;
        Graph g = random_graph(rng, n, 0.4);
        int nu = matching_number(g);
        std::vector<char> active(n, 1);
        for (int v = 0; v < n; ++v) {
            active[v] = 0;
            int down = matching_number_masked(g, active);
            active[v] = 1;
            CHECK((down == nu || down == nu - 1));
        }
    }
}

TEST_CASE("bipartite matching on named graphs") {
    Graph k34 = complete_bipartite_graph(3, 4);
    auto parts = bipartition(k34);
    REQUIRE(parts);
    CHECK(maximum_matching_bipartite(k34, *parts).size() == 3);

    Graph star = complete_bipartite_graph(1, 5);
    CHECK(maximum_matching_bipartite(star, *bipartition(star)).size() == 1);

    Graph c6 = cycle_graph(6);
    CHECK(maximum_matching_bipartite(c6, *bipartition(c6)).size() == 3);

    Bipartition bogus{{0, 1}, {2, 3, 4, 5}};
    CHECK_THROWS_AS(maximum_matching_bipartite(c6, bogus), std::invalid_argument);
}

TEST_CASE("bipartite engine agrees with blossom") {
    std::mt19937 rng(47);
    for (int it = 0; it < 1000; ++it) {
        int a = 1 + it % 7, b = 1 + (it / 7) % 7;
        Graph g(a + b);
        std::bernoulli_distribution coin(0.15 + 0.7 * (it % 5) / 4.0);
        for (int u = 0; u < a; ++u)
            for (int v = 0; v < b; ++v)
                if (coin(rng)) g.add_edge(u, a + v);
        Bipartition parts;
        for (int u = 0; u < a; ++u) parts.u.push_back(u);
        for (int v = 0; v < b; ++v) parts.w.push_back(a + v);
        Matching m = maximum_matching_bipartite(g, parts);
        CHECK(is_matching_of(g, m));
        CHECK(m.size() == matching_number(g));
    }
}

TEST_CASE("restricted bipartite matching works on the induced subgraph") {
    Graph k34 = complete_bipartite_graph(3, 4);
    auto parts = bipartition(k34);
    std::vector<int> keep{0, 1, 3, 4};
    Matching m = maximum_matching_bipartite(k34, *parts, keep);
    CHECK(m.size() == 2);
    for (const auto& [u, v] : m.edges) {
        CHECK(std::count(keep.begin(), keep.end(), u) == 1);
        CHECK(std::count(keep.begin(), keep.end(), v) == 1);
    }
}

TEST_CASE("is_maximal") {
    Graph c5 = cycle_graph(5);
    CHECK(!is_maximal(c5, Matching{{{0, 1}}}));
    CHECK(is_maximal(c5, Matching{{{0, 1}, {2, 3}}}));
    CHECK(is_maximal(c5, maximum_matching(c5)));
    CHECK_THROWS_AS(is_maximal(c5, Matching{{{0, 2}}}), std::invalid_argument);
    CHECK_THROWS_AS(is_maximal(c5, Matching{{{0, 1}, {1, 2}}}),
                    std::invalid_argument);
}

TEST_CASE("maximal matching enumeration matches subset brute force, n <= 5") {
    for (int n = 0; n <= 5; ++n) {
        int bits = n * (n - 1) / 2;
        for (std::uint64_t mask = 0; mask < (1ull << bits); ++mask) {
            Graph g = graph_from_code(n, mask);
            auto expect = subset_maximal_matchings(g);
            std::vector<Matching> got;
            enumerate_maximal_matchings(g, [&](const Matching& m) {
                got.push_back(m);
                return true;
            });
            REQUIRE(got.size() == expect.size());
            for (std::size_t i = 0; i < got.size(); ++i)
                CHECK(got[i].edges == expect[i].edges);  // lexicographic order
        }
    }
}

TEST_CASE("enumeration on named graphs") {
    auto k3 = all_maximal_matchings(complete_graph(3));
    CHECK(k3.size() == 3);
    for (const auto& m : k3) CHECK(m.size() == 1);

    auto p4 = all_maximal_matchings(path_graph(4));
    REQUIRE(p4.size() == 2);
    CHECK(p4[0].edges == std::vector<Edge>{{0, 1}, {2, 3}});
    CHECK(p4[1].edges == std::vector<Edge>{{1, 2}});

    std::set<int> sizes;
    for (const auto& m : all_maximal_matchings(cycle_graph(7)))
        sizes.insert(m.size());
    CHECK(sizes == std::set<int>{3});

    std::mt19937 rng(53);
    Graph g = testutil::random_graph(rng, 8, 0.5);
    for (const auto& m : all_maximal_matchings(g)) CHECK(is_maximal(g, m));
}

TEST_CASE("enumeration guard and early stop") {
    CHECK_THROWS_AS(all_maximal_matchings(Graph(25)), guard_error);
    CHECK_NOTHROW(all_maximal_matchings(Graph(24)));
    int seen = 0;
    enumerate_maximal_matchings(complete_graph(6), [&](const Matching&) {
        return ++seen < 3;
    });
    CHECK(seen == 3);
}

TEST_CASE("randomly matchable graphs") {
    CHECK(is_randomly_matchable(complete_graph(6)));
    CHECK(is_randomly_matchable(complete_graph(2)));
    CHECK(is_randomly_matchable(complete_bipartite_graph(3, 3)));
    CHECK(!is_randomly_matchable(cycle_graph(6)));
    CHECK(!is_randomly_matchable(complete_graph(5)));
    CHECK(!is_randomly_matchable(complete_bipartite_graph(2, 3)));
    Graph two(4);
    two.add_edge(0, 1);
    two.add_edge(2, 3);
    CHECK_THROWS_AS(is_randomly_matchable(two), std::invalid_argument);
}

TEST_CASE("randomly matchable agrees with the definition oracle, n <= 6") {
    for (int n = 1; n <= 6; ++n) {
        int bits = n * (n - 1) / 2;
        for (std::uint64_t mask = 0; mask < (1ull << bits); ++mask) {
            Graph g = graph_from_code(n, mask);
            if (!is_connected(g)) continue;
            // every matching extends to a perfect matching iff every maximal
            // matching is perfect
            bool oracle = true;
            enumerate_maximal_matchings(g, [&](const Matching& m) {
                if (2 * m.size() != n) {
                    oracle = false;
                    return false;
                }
                return true;
            });
            CHECK(is_randomly_matchable(g) == oracle);
        }
    }
}

TEST_CASE("hall violator") {
    // K_{2,3} seen from the large side: no matching saturates it
    Graph g = complete_bipartite_graph(2, 3);
    std::vector<int> xs{2, 3, 4}, ys{0, 1};
    auto s = hall_violator(g, xs, ys);
    REQUIRE(!s.empty());
    CHECK(set_neighborhood(g, s).size() <= s.size() - 1);
    // saturable side: no violator
    CHECK(hall_violator(g, ys, xs).empty());
}
