#pragma once

#include <algorithm>
#include <random>
#include <vector>

#include "eqm/canonical.hpp"
#include "eqm/graph.hpp"
#include "eqm/matching.hpp"

namespace testutil {

using eqm::Edge;
using eqm::Graph;
using eqm::Matching;

// Independent ground truth for the enumeration code: filter all 2^m edge
// subsets. Only usable for tiny graphs.
inline std::vector<Matching> subset_maximal_matchings(const Graph& g) {
    std::vector<Edge> edges = g.edges();
    std::size_t m = edges.size();
    std::vector<Matching> out;
    for (std::uint64_t mask = 0; mask < (1ull << m); ++mask) {
        std::vector<Edge> pick;
        std::vector<char> covered(g.order(), 0);
        bool ok = true;
        for (std::size_t i = 0; i < m && ok; ++i) {
            if (!(mask & (1ull << i))) continue;
            auto [u, v] = edges[i];
            if (covered[u] || covered[v]) ok = false;
            covered[u] = covered[v] = 1;
            pick.emplace_back(u, v);
        }
        if (!ok) continue;
        bool maximal = true;
        for (const auto& [u, v] : edges)
            if (!covered[u] && !covered[v]) maximal = false;
        if (maximal) out.push_back(Matching{pick});
    }
    std::sort(out.begin(), out.end(),
              [](const Matching& a, const Matching& b) { return a.edges < b.edges; });
    return out;
}

inline int subset_max_matching_size(const Graph& g) {
    std::vector<Edge> edges = g.edges();
    std::size_t m = edges.size();
    int best = 0;
    for (std::uint64_t mask = 0; mask < (1ull << m); ++mask) {
        std::vector<char> covered(g.order(), 0);
        bool ok = true;
        int size = 0;
        for (std::size_t i = 0; i < m && ok; ++i) {
            if (!(mask & (1ull << i))) continue;
            auto [u, v] = edges[i];
            if (covered[u] || covered[v]) ok = false;
            covered[u] = covered[v] = 1;
            ++size;
        }
        if (ok) best = std::max(best, size);
    }
    return best;
}

inline Graph permute_graph(const Graph& g, const std::vector<int>& perm) {
    Graph h(g.order());
    for (const auto& [u, v] : g.edges()) h.add_edge(perm[u], perm[v]);
    return h;
}

inline Graph random_graph(std::mt19937& rng, int n, double p) {
    Graph g(n);
    std::bernoulli_distribution coin(p);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (coin(rng)) g.add_edge(u, v);
    return g;
}

inline Graph random_connected_graph(std::mt19937& rng, int n, double p) {
    for (;;) {
        Graph g = random_graph(rng, n, p);
        if (eqm::is_connected(g)) return g;
    }
}

inline Graph petersen() {
    Graph g(10);
    for (int i = 0; i < 5; ++i) {
        g.add_edge(i, (i + 1) % 5);
        g.add_edge(i, i + 5);
        g.add_edge(5 + i, 5 + (i + 2) % 5);
    }
    return g;
}

}  // namespace testutil
