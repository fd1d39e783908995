#include "eqm/decomposition.hpp"

#include <algorithm>
#include <stdexcept>

namespace eqm {

GallaiEdmonds gallai_edmonds(const Graph& g) {
    int n = g.order();
    int nu = matching_number(g);
    GallaiEdmonds out;
    std::vector<char> in_d(n, 0);
    std::vector<char> active(n, 1);
    for (int v = 0; v < n; ++v) {
        active[v] = 0;
        if (matching_number_masked(g, active) == nu) {
            in_d[v] = 1;
            out.d.push_back(v);
        }
        active[v] = 1;
    }
    std::vector<char> in_a(n, 0);
    for (int v : out.d)
        g.for_neighbors(v, [&](int u) {
            if (!in_d[u]) in_a[u] = 1;
        });
    for (int v = 0; v < n; ++v) {
        if (in_d[v]) continue;
        if (in_a[v])
            out.a.push_back(v);
        else
            out.c.push_back(v);
    }
    return out;
}

bool is_factor_critical(const Graph& g) {
    int n = g.order();
    if (n % 2 == 0) return false;
    if (n == 1) return true;
    if (g.min_degree() < 2) return false;  // deleting the lone neighbor isolates v
    if (!is_connected(g)) return false;
    std::vector<char> active(n, 1);
    for (int v = 0; v < n; ++v) {
        active[v] = 0;
        bool pm = has_perfect_matching_masked(g, active);
        active[v] = 1;
        if (!pm) return false;
    }
    return true;
}

namespace {

void require_bipartition(const Graph& g, const Bipartition& parts) {
    if (!is_valid_bipartition(g, parts))
        throw std::invalid_argument("parts is not a valid bipartition of the graph");
}

std::vector<int> neighborhood_of_set(const Graph& g, const std::vector<int>& s,
                                     int excluded) {
    std::vector<char> seen(g.order(), 0);
    std::vector<int> out;
    for (int v : s)
        g.for_neighbors(v, [&](int u) {
            if (u != excluded && !seen[u]) {
                seen[u] = 1;
                out.push_back(u);
            }
        });
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

bool is_strong_bipartite(const Graph& g, const Bipartition& parts, int v) {
    require_bipartition(g, parts);
    // The empty matching saturates N(v) = {} for isolated v, making it weak.
    std::vector<int> xs = g.neighbors(v);
    std::vector<int> ys = neighborhood_of_set(g, xs, v);
    Matching m = bipartite_matching_between(g, xs, ys);
    return m.size() < static_cast<int>(xs.size());
}

bool is_square_strong_bipartite(const Graph& g, const Bipartition& parts, int u) {
    require_bipartition(g, parts);
    std::vector<int> xs = g.neighbors(u);
    std::vector<int> ys = neighborhood_of_set(g, xs, -1);  // includes u itself
    Matching m = bipartite_matching_between(g, xs, ys);
    return m.size() <= static_cast<int>(xs.size()) - 1;
}

VertexKind strong_weak_oracle(const Graph& g, int v, int guard) {
    bool missed = false;
    enumerate_maximal_matchings(
        g,
        [&](const Matching& m) {
            if (!m.saturates(v)) {
                missed = true;
                return false;
            }
            return true;
        },
        guard);
    return missed ? VertexKind::weak : VertexKind::strong;
}

}  // namespace eqm
