#include "eqm/families.hpp"

#include <random>
#include <stdexcept>
#include <string>

namespace eqm {

Graph complete_graph(int n) {
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
    return g;
}

Graph complete_bipartite_graph(int a, int b) {
    if (a < 0 || b < 0) throw std::invalid_argument("negative side size");
    Graph g(a + b);
    for (int u = 0; u < a; ++u)
        for (int v = 0; v < b; ++v) g.add_edge(u, a + v);
    return g;
}

Graph cycle_graph(int n) {
    if (n < 3) throw std::invalid_argument("cycle needs at least 3 vertices");
    Graph g(n);
    for (int v = 0; v < n; ++v) g.add_edge(v, (v + 1) % n);
    return g;
}

Graph path_graph(int n) {
    Graph g(n);
    for (int v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
    return g;
}

Graph gen_g1(int r, int k) {
    if (r < 3) throw std::invalid_argument("gen_g1: r must be at least 3");
    if (k < 1 || k > r)
        throw std::invalid_argument("gen_g1: k must satisfy 1 <= k <= r");
    Graph g = complete_graph(2 * r + 1);
    for (int i = 0; i < k; ++i) g.remove_edge(2 * i, 2 * i + 1);
    return g;
}

Graph gen_g2(int r, const G2Shape& shape) {
    if (r < 3) throw std::invalid_argument("gen_g2: r must be at least 3");
    if (shape.kind == G2Shape::Kind::star && (shape.k < 1 || shape.k > r))
        throw std::invalid_argument("gen_g2: star width must satisfy 1 <= k <= r");
    int n = 2 * r + 1;
    Graph g(n);
    // S = {0..r-1}, complete to the r+1 remaining vertices
    for (int s = 0; s < r; ++s)
        for (int t = r; t < n; ++t) g.add_edge(s, t);
    if (shape.kind == G2Shape::Kind::star) {
        for (int i = 1; i <= shape.k; ++i) g.add_edge(r, r + i);
    } else {
        g.add_edge(r, r + 1);
        g.add_edge(r, r + 2);
        g.add_edge(r + 1, r + 2);
    }
    return g;
}

Graph gen_bipartite_ese(int r, int s, std::uint64_t seed) {
    if (r < 1) throw std::invalid_argument("gen_bipartite_ese: r must be positive");
    if (s <= r) throw std::invalid_argument("gen_bipartite_ese: requires s > r");
    Graph g = complete_bipartite_graph(r, s);

    std::vector<Edge> order = g.edges();
    std::mt19937_64 rng(seed);
    // Fisher-Yates with explicit draws so the output is stable across
    // standard library implementations.
    for (std::size_t i = order.size(); i > 1; --i)
        std::swap(order[i - 1], order[rng() % i]);

    std::vector<int> deg(g.order());
    for (int v = 0; v < g.order(); ++v) deg[v] = g.degree(v);
    for (const auto& [u, w] : order) {
        if (deg[u] <= r + 1 || deg[w] <= 1) continue;
        if (rng() % 2 == 0) continue;
        g.remove_edge(u, w);
        if (!is_connected(g)) {
            g.add_edge(u, w);
            continue;
        }
        --deg[u];
        --deg[w];
    }
    return g;
}

Graph fig_degree3_example() {
    // U = {0,1,2}, W = {3..8}; vertex 0 plays the degree-3 role.
    return Graph::from_edges(9, {{0, 6}, {0, 7}, {0, 8},
                                 {1, 4}, {1, 5}, {1, 6}, {1, 7},
                                 {2, 3}, {2, 4}, {2, 5}});
}

const std::vector<Graph>& small_catalog() {
    static const std::vector<Graph> catalog = [] {
        std::vector<Graph> out;
        out.push_back(Graph(1));                   // K1
        out.push_back(complete_graph(3));          // K3
        out.push_back(complete_graph(5));          // K5
        out.push_back(cycle_graph(5));             // C5
        Graph a = complete_graph(5);               // K5 minus an edge
        a.remove_edge(0, 1);
        out.push_back(a);
        Graph b = complete_graph(5);               // K5 minus a 2-edge matching
        b.remove_edge(0, 1);
        b.remove_edge(2, 3);
        out.push_back(b);
        Graph c = complete_graph(5);               // K5 minus {02,13,24}
        c.remove_edge(0, 2);
        c.remove_edge(1, 3);
        c.remove_edge(2, 4);
        out.push_back(c);
        return out;
    }();
    return catalog;
}

}  // namespace eqm
