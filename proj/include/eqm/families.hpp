#pragma once

#include <cstdint>
#include <vector>

#include "eqm/graph.hpp"

namespace eqm {

Graph complete_graph(int n);
Graph complete_bipartite_graph(int a, int b);
Graph cycle_graph(int n);
Graph path_graph(int n);

// The nu=1 block of a G2 graph: a star K_{1,k} (1 <= k <= r) or a triangle,
// padded with isolated vertices.
struct G2Shape {
    enum class Kind { star, triangle };
    Kind kind;
    int k = 0;

    static G2Shape star(int width) { return {Kind::star, width}; }
    static G2Shape triangle() { return {Kind::triangle, 0}; }
};

// K_{2r+1} minus the k disjoint edges {0,1},{2,3},...,{2k-2,2k-1}; r >= 3,
// 1 <= k <= r. Minimum degree 2r-1.
Graph gen_g1(int r, int k);

// 2r+1 vertices: S = {0..r-1} independent and complete to the rest; the
// remaining r+1 vertices carry exactly the shape's edges. r >= 3.
Graph gen_g2(int r, const G2Shape& shape);

// Seeded connected spanning subgraph of K_{r,s} (s > r >= 1) with every
// U-degree >= r+1. Same seed, same graph.
Graph gen_bipartite_ese(int r, int s, std::uint64_t seed);

// The 3+6 bipartite example with a degree-3 vertex in the small side.
Graph fig_degree3_example();

// The seven factor-critical edge-stable graphs on at most 5 vertices:
// K1, K3, K5, C5, K5 minus an edge, K5 minus a 2-edge matching, and K5
// minus {02,13,24}.
const std::vector<Graph>& small_catalog();

}  // namespace eqm
