#include "eqm/graph.hpp"

#include <algorithm>
#include <queue>
#include <stdexcept>
#include <string>

namespace eqm {

Graph::Graph(int n) : n_(n), words_(n == 0 ? 1 : (n + 63) / 64) {
    if (n < 0) throw std::invalid_argument("vertex count must be nonnegative");
    bits_.assign(static_cast<std::size_t>(n_) * words_, 0);
}

Graph Graph::from_edges(int n, const std::vector<Edge>& edges) {
    Graph g(n);
    for (const auto& [u, v] : edges) g.add_edge(u, v);
    return g;
}

void Graph::check_pair(int u, int v) const {
    if (u < 0 || v < 0 || u >= n_ || v >= n_)
        throw std::invalid_argument("vertex index out of range: (" +
                                    std::to_string(u) + "," + std::to_string(v) + ")");
    if (u == v)
        throw std::invalid_argument("self-loop rejected at vertex " + std::to_string(u));
}

void Graph::add_edge(int u, int v) {
    check_pair(u, v);
    bits_[static_cast<std::size_t>(u) * words_ + (v >> 6)] |= 1ull << (v & 63);
    bits_[static_cast<std::size_t>(v) * words_ + (u >> 6)] |= 1ull << (u & 63);
}

void Graph::remove_edge(int u, int v) {
    check_pair(u, v);
    bits_[static_cast<std::size_t>(u) * words_ + (v >> 6)] &= ~(1ull << (v & 63));
    bits_[static_cast<std::size_t>(v) * words_ + (u >> 6)] &= ~(1ull << (u & 63));
}

long Graph::edge_count() const {
    long total = 0;
    for (std::uint64_t w : bits_) total += std::popcount(w);
    return total / 2;
}

int Graph::degree(int v) const {
    const std::uint64_t* r = row(v);
    int d = 0;
    for (int w = 0; w < words_; ++w) d += std::popcount(r[w]);
    return d;
}

int Graph::max_degree() const {
    int best = 0;
    for (int v = 0; v < n_; ++v) best = std::max(best, degree(v));
    return best;
}

int Graph::min_degree() const {
    if (n_ == 0) return 0;
    int best = n_;
    for (int v = 0; v < n_; ++v) best = std::min(best, degree(v));
    return best;
}

std::vector<int> Graph::neighbors(int v) const {
    std::vector<int> out;
    for_neighbors(v, [&](int u) { out.push_back(u); });
    return out;
}

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> out;
    for (int u = 0; u < n_; ++u)
        for_neighbors(u, [&](int v) {
            if (u < v) out.emplace_back(u, v);
        });
    return out;
}

Graph complement(const Graph& g) {
    int n = g.order();
    Graph h(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (!g.has_edge(u, v)) h.add_edge(u, v);
    return h;
}

InducedSubgraph induced_subgraph(const Graph& g, const std::vector<int>& s) {
    InducedSubgraph out;
    out.vertices = s;
    out.graph = Graph(static_cast<int>(s.size()));
    for (std::size_t i = 0; i < s.size(); ++i)
        for (std::size_t j = i + 1; j < s.size(); ++j)
            if (g.has_edge(s[i], s[j]))
                out.graph.add_edge(static_cast<int>(i), static_cast<int>(j));
    return out;
}

Graph without_edge(const Graph& g, int u, int v) {
    Graph h = g;
    h.remove_edge(u, v);
    return h;
}

std::vector<std::vector<int>> connected_components(const Graph& g) {
    int n = g.order();
    std::vector<std::vector<int>> comps;
    std::vector<char> seen(n, 0);
    std::vector<int> stack;
    for (int s = 0; s < n; ++s) {
        if (seen[s]) continue;
        std::vector<int> comp;
        stack.push_back(s);
        seen[s] = 1;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            comp.push_back(v);
            g.for_neighbors(v, [&](int u) {
                if (!seen[u]) {
                    seen[u] = 1;
                    stack.push_back(u);
                }
            });
        }
        std::sort(comp.begin(), comp.end());
        comps.push_back(std::move(comp));
    }
    return comps;
}

bool is_connected(const Graph& g) {
    int n = g.order();
    if (n == 0) return true;
    std::vector<char> seen(n, 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    int reached = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        g.for_neighbors(v, [&](int u) {
            if (!seen[u]) {
                seen[u] = 1;
                ++reached;
                stack.push_back(u);
            }
        });
    }
    return reached == n;
}

namespace {

// BFS 2-coloring; returns colors or nullopt on an odd cycle.
std::optional<std::vector<int>> two_color(const Graph& g) {
    int n = g.order();
    std::vector<int> color(n, -1);
    std::vector<int> queue;
    for (int s = 0; s < n; ++s) {
        if (color[s] != -1) continue;
        color[s] = 0;
        queue.assign(1, s);
        for (std::size_t qi = 0; qi < queue.size(); ++qi) {
            int v = queue[qi];
            bool odd = false;
            g.for_neighbors(v, [&](int u) {
                if (color[u] == -1) {
                    color[u] = color[v] ^ 1;
                    queue.push_back(u);
                } else if (color[u] == color[v]) {
                    odd = true;
                }
            });
            if (odd) return std::nullopt;
        }
    }
    return color;
}

}  // namespace

std::optional<Bipartition> bipartition(const Graph& g) {
    auto color = two_color(g);
    if (!color) return std::nullopt;
    Bipartition parts;
    for (int v = 0; v < g.order(); ++v)
        ((*color)[v] == 0 ? parts.u : parts.w).push_back(v);
    if (parts.u.size() > parts.w.size()) std::swap(parts.u, parts.w);
    return parts;
}

std::optional<std::vector<int>> odd_closed_walk(const Graph& g) {
    int n = g.order();
    std::vector<int> color(n, -1), parent(n, -1);
    for (int s = 0; s < n; ++s) {
        if (color[s] != -1) continue;
        color[s] = 0;
        std::vector<int> queue{s};
        for (std::size_t qi = 0; qi < queue.size(); ++qi) {
            int v = queue[qi];
            int clash = -1;
            g.for_neighbors(v, [&](int u) {
                if (color[u] == -1) {
                    color[u] = color[v] ^ 1;
                    parent[u] = v;
                    queue.push_back(u);
                } else if (color[u] == color[v] && clash == -1) {
                    clash = u;
                }
            });
            if (clash != -1) {
                // root -> v (tree), the clash edge v-clash, clash -> root
                // (tree). Equal colors make the total length odd.
                std::vector<int> down, up;
                for (int x = v; x != -1; x = parent[x]) down.push_back(x);
                for (int x = clash; x != -1; x = parent[x]) up.push_back(x);
                std::reverse(down.begin(), down.end());
                std::vector<int> walk(down);
                walk.insert(walk.end(), up.begin(), up.end());
                return walk;
            }
        }
    }
    return std::nullopt;
}

std::vector<int> articulation_points(const Graph& g) {
    int n = g.order();
    std::vector<int> disc(n, -1), low(n, 0);
    std::vector<char> cut(n, 0);
    int timer = 0;

    struct Frame {
        int v, parent;
        int children = 0;
        std::vector<int> nbrs;
        std::size_t i = 0;
    };

    for (int root = 0; root < n; ++root) {
        if (disc[root] != -1) continue;
        std::vector<Frame> stack;
        stack.push_back({root, -1, 0, g.neighbors(root), 0});
        disc[root] = low[root] = timer++;
        while (!stack.empty()) {
            Frame& f = stack.back();
            if (f.i < f.nbrs.size()) {
                int u = f.nbrs[f.i++];
                if (disc[u] == -1) {
                    ++f.children;
                    disc[u] = low[u] = timer++;
                    stack.push_back({u, f.v, 0, g.neighbors(u), 0});
                } else if (u != f.parent) {
                    low[f.v] = std::min(low[f.v], disc[u]);
                }
            } else {
                Frame done = f;
                stack.pop_back();
                if (done.parent == -1) {
                    if (done.children > 1) cut[done.v] = 1;
                } else if (!stack.empty()) {
                    Frame& pf = stack.back();
                    low[pf.v] = std::min(low[pf.v], low[done.v]);
                    if (pf.parent != -1 && low[done.v] >= disc[pf.v]) cut[pf.v] = 1;
                }
            }
        }
    }

    std::vector<int> out;
    for (int v = 0; v < n; ++v)
        if (cut[v]) out.push_back(v);
    return out;
}

bool is_two_connected(const Graph& g) {
    return g.order() >= 3 && is_connected(g) && articulation_points(g).empty();
}

std::optional<int> diameter(const Graph& g) {
    int n = g.order();
    if (n == 0) return 0;
    int best = 0;
    std::vector<int> dist(n);
    std::vector<int> queue;
    for (int s = 0; s < n; ++s) {
        std::fill(dist.begin(), dist.end(), -1);
        dist[s] = 0;
        queue.assign(1, s);
        int reached = 1;
        for (std::size_t qi = 0; qi < queue.size(); ++qi) {
            int v = queue[qi];
            g.for_neighbors(v, [&](int u) {
                if (dist[u] == -1) {
                    dist[u] = dist[v] + 1;
                    best = std::max(best, dist[u]);
                    ++reached;
                    queue.push_back(u);
                }
            });
        }
        if (reached != n) return std::nullopt;
    }
    return best;
}

bool is_complete(const Graph& g) {
    int n = g.order();
    return g.edge_count() == static_cast<long>(n) * (n - 1) / 2;
}

std::optional<Bipartition> complete_bipartite_parts(const Graph& g) {
    if (g.order() < 2) return std::nullopt;
    auto parts = bipartition(g);
    if (!parts || parts->u.empty()) return std::nullopt;
    long want = static_cast<long>(parts->u.size()) * parts->w.size();
    if (g.edge_count() != want) return std::nullopt;
    // Edge count equals |U||W| and all edges cross, so all cross pairs exist.
    return parts;
}

std::vector<int> set_neighborhood(const Graph& g, const std::vector<int>& s) {
    std::vector<char> seen(g.order(), 0);
    std::vector<int> out;
    for (int v : s)
        g.for_neighbors(v, [&](int u) {
            if (!seen[u]) {
                seen[u] = 1;
                out.push_back(u);
            }
        });
    std::sort(out.begin(), out.end());
    return out;
}

bool is_valid_bipartition(const Graph& g, const Bipartition& parts) {
    int n = g.order();
    std::vector<int> side(n, -1);
    for (int v : parts.u) {
        if (v < 0 || v >= n || side[v] != -1) return false;
        side[v] = 0;
    }
    for (int v : parts.w) {
        if (v < 0 || v >= n || side[v] != -1) return false;
        side[v] = 1;
    }
    for (int v = 0; v < n; ++v)
        if (side[v] == -1) return false;
    for (const auto& [u, v] : g.edges())
        if (side[u] == side[v]) return false;
    return true;
}

}  // namespace eqm
