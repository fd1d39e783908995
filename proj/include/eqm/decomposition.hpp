#pragma once

#include <vector>

#include "eqm/graph.hpp"
#include "eqm/matching.hpp"

namespace eqm {

// Gallai-Edmonds partition: D = vertices missed by at least one maximum
// matching, A = their outside neighbors, C = the rest.
struct GallaiEdmonds {
    std::vector<int> d, a, c;
};

GallaiEdmonds gallai_edmonds(const Graph& g);

// Connected, odd order, and g - v has a perfect matching for every v.
bool is_factor_critical(const Graph& g);

enum class VertexKind { strong, weak };

// Polynomial saturation test for bipartite graphs: v is strong iff no
// matching of g - v saturates N(v).
bool is_strong_bipartite(const Graph& g, const Bipartition& parts, int v);

// u (in the small side U) is square-strong iff no matching of g saturates
// N(u), i.e. nu(g[N(u)+N(N(u))]) <= |N(u)| - 1.
bool is_square_strong_bipartite(const Graph& g, const Bipartition& parts, int u);

// Enumeration-backed classification for general graphs (guarded).
VertexKind strong_weak_oracle(const Graph& g, int v,
                              int guard = default_oracle_guard);

}  // namespace eqm
