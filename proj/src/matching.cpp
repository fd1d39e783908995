#include "eqm/matching.hpp"

#include <algorithm>
#include <stdexcept>

namespace eqm {

void Matching::normalize() {
    for (auto& [u, v] : edges)
        if (u > v) std::swap(u, v);
    std::sort(edges.begin(), edges.end());
}

bool Matching::saturates(int v) const {
    for (const auto& [a, b] : edges)
        if (a == v || b == v) return true;
    return false;
}

std::vector<char> Matching::cover(int n) const {
    std::vector<char> c(n, 0);
    for (const auto& [a, b] : edges) c[a] = c[b] = 1;
    return c;
}

bool is_matching_of(const Graph& g, const Matching& m) {
    std::vector<char> seen(g.order(), 0);
    for (const auto& [u, v] : m.edges) {
        if (u < 0 || v < 0 || u >= g.order() || v >= g.order()) return false;
        if (!g.has_edge(u, v)) return false;
        if (seen[u] || seen[v]) return false;
        seen[u] = seen[v] = 1;
    }
    return true;
}

// ---------------------------------------------------------------------------
// Blossom algorithm, the classical O(n^3) contraction variant. Arrays are
// reused across calls through a thread-local workspace; the census hammers
// this with millions of tiny runs.

namespace {

struct BlossomSolver {
    const Graph* g = nullptr;
    const std::vector<char>* active = nullptr;
    int n = 0;
    std::vector<int> match, parent, base, queue;
    std::vector<char> used, flower, lca_seen;

    void reset(const Graph& gr, const std::vector<char>& act) {
        g = &gr;
        active = &act;
        n = gr.order();
        match.assign(n, -1);
        parent.assign(n, -1);
        base.resize(n);
        used.resize(n);
        flower.resize(n);
        lca_seen.resize(n);
        queue.clear();
    }

    int lowest_common_base(int a, int b) {
        std::fill(lca_seen.begin(), lca_seen.end(), 0);
        int x = a;
        for (;;) {
            x = base[x];
            lca_seen[x] = 1;
            if (match[x] == -1) break;
            x = parent[match[x]];
        }
        int y = b;
        for (;;) {
            y = base[y];
            if (lca_seen[y]) return y;
            y = parent[match[y]];
        }
    }

    void mark_path(int v, int b, int child) {
        while (base[v] != b) {
            flower[base[v]] = 1;
            flower[base[match[v]]] = 1;
            parent[v] = child;
            child = match[v];
            v = parent[match[v]];
        }
    }

    bool augment_from(int root) {
        std::fill(used.begin(), used.end(), 0);
        std::fill(parent.begin(), parent.end(), -1);
        for (int i = 0; i < n; ++i) base[i] = i;
        used[root] = 1;
        queue.assign(1, root);
        for (std::size_t qi = 0; qi < queue.size(); ++qi) {
            int v = queue[qi];
            int found = -1;
            g->for_neighbors(v, [&](int to) {
                if (found != -1 || !(*active)[to]) return;
                if (base[v] == base[to] || match[v] == to) return;
                if (to == root || (match[to] != -1 && parent[match[to]] != -1)) {
                    // odd cycle: contract the blossom
                    int cur = lowest_common_base(v, to);
                    std::fill(flower.begin(), flower.end(), 0);
                    mark_path(v, cur, to);
                    mark_path(to, cur, v);
                    for (int i = 0; i < n; ++i)
                        if ((*active)[i] && flower[base[i]]) {
                            base[i] = cur;
                            if (!used[i]) {
                                used[i] = 1;
                                queue.push_back(i);
                            }
                        }
                } else if (parent[to] == -1) {
                    parent[to] = v;
                    if (match[to] == -1) {
                        found = to;
                    } else {
                        used[match[to]] = 1;
                        queue.push_back(match[to]);
                    }
                }
            });
            if (found != -1) {
                int u = found;
                while (u != -1) {
                    int pv = parent[u], next = match[pv];
                    match[u] = pv;
                    match[pv] = u;
                    u = next;
                }
                return true;
            }
        }
        return false;
    }

    int solve() {
        // greedy seed cuts most augmentation rounds
        for (int v = 0; v < n; ++v) {
            if (!(*active)[v] || match[v] != -1) continue;
            int pick = -1;
            g->for_neighbors(v, [&](int to) {
                if (pick == -1 && (*active)[to] && match[to] == -1) pick = to;
            });
            if (pick != -1) {
                match[v] = pick;
                match[pick] = v;
            }
        }
        int pairs = 0;
        for (int v = 0; v < n; ++v)
            if ((*active)[v] && match[v] != -1) ++pairs;
        pairs /= 2;
        for (int v = 0; v < n; ++v)
            if ((*active)[v] && match[v] == -1 && augment_from(v)) ++pairs;
        return pairs;
    }
};

BlossomSolver& blossom_workspace() {
    thread_local BlossomSolver solver;
    return solver;
}

std::vector<char> all_active(int n) { return std::vector<char>(n, 1); }

}  // namespace

Matching maximum_matching_masked(const Graph& g, const std::vector<char>& active) {
    BlossomSolver& s = blossom_workspace();
    s.reset(g, active);
    s.solve();
    Matching m;
    for (int v = 0; v < g.order(); ++v)
        if (active[v] && s.match[v] > v) m.edges.emplace_back(v, s.match[v]);
    m.normalize();
    return m;
}

Matching maximum_matching(const Graph& g) {
    return maximum_matching_masked(g, all_active(g.order()));
}

int matching_number_masked(const Graph& g, const std::vector<char>& active) {
    BlossomSolver& s = blossom_workspace();
    s.reset(g, active);
    return s.solve();
}

int matching_number(const Graph& g) {
    return matching_number_masked(g, all_active(g.order()));
}

bool has_perfect_matching(const Graph& g) {
    return 2 * matching_number(g) == g.order();
}

bool has_perfect_matching_masked(const Graph& g, const std::vector<char>& active) {
    int count = 0;
    for (char a : active) count += a;
    if (count % 2 != 0) return false;
    return 2 * matching_number_masked(g, active) == count;
}

// ---------------------------------------------------------------------------
// Hopcroft-Karp

namespace {

struct HopcroftKarp {
    int nl;
    std::vector<std::vector<int>> adj;  // left pos -> right positions
    std::vector<int> match_l, match_r, dist;

    explicit HopcroftKarp(int nleft, int nright)
        : nl(nleft), adj(nleft), match_l(nleft, -1), match_r(nright, -1),
          dist(nleft) {}

    bool bfs() {
        std::vector<int> q;
        for (int u = 0; u < nl; ++u) {
            if (match_l[u] == -1) {
                dist[u] = 0;
                q.push_back(u);
            } else {
                dist[u] = -1;
            }
        }
        bool reachable_free = false;
        for (std::size_t qi = 0; qi < q.size(); ++qi) {
            int u = q[qi];
            for (int v : adj[u]) {
                int w = match_r[v];
                if (w == -1) {
                    reachable_free = true;
                } else if (dist[w] == -1) {
                    dist[w] = dist[u] + 1;
                    q.push_back(w);
                }
            }
        }
        return reachable_free;
    }

    bool dfs(int u) {
        for (int v : adj[u]) {
            int w = match_r[v];
            if (w == -1 || (dist[w] == dist[u] + 1 && dfs(w))) {
                match_l[u] = v;
                match_r[v] = u;
                return true;
            }
        }
        dist[u] = -1;
        return false;
    }

    int solve() {
        int total = 0;
        while (bfs()) {
            for (int u = 0; u < nl; ++u)
                if (match_l[u] == -1 && dfs(u)) ++total;
        }
        return total;
    }
};

HopcroftKarp build_between(const Graph& g, const std::vector<int>& xs,
                           const std::vector<int>& ys) {
    std::vector<int> ypos(g.order(), -1);
    for (std::size_t j = 0; j < ys.size(); ++j) ypos[ys[j]] = static_cast<int>(j);
    HopcroftKarp hk(static_cast<int>(xs.size()), static_cast<int>(ys.size()));
    for (std::size_t i = 0; i < xs.size(); ++i)
        g.for_neighbors(xs[i], [&](int to) {
            if (ypos[to] != -1) hk.adj[i].push_back(ypos[to]);
        });
    return hk;
}

}  // namespace

Matching bipartite_matching_between(const Graph& g, const std::vector<int>& xs,
                                    const std::vector<int>& ys) {
    HopcroftKarp hk = build_between(g, xs, ys);
    hk.solve();
    Matching m;
    for (std::size_t i = 0; i < xs.size(); ++i)
        if (hk.match_l[i] != -1) m.edges.emplace_back(xs[i], ys[hk.match_l[i]]);
    m.normalize();
    return m;
}

std::vector<int> hall_violator(const Graph& g, const std::vector<int>& xs,
                               const std::vector<int>& ys) {
    HopcroftKarp hk = build_between(g, xs, ys);
    int matched = hk.solve();
    if (matched == static_cast<int>(xs.size())) return {};
    // Alternating BFS from unmatched left vertices: reachable left vertices
    // form the violator (their joint neighborhood is matched into them,
    // minus the unmatched roots).
    std::vector<char> seen_l(xs.size(), 0), seen_r(ys.size(), 0);
    std::vector<int> q;
    for (std::size_t i = 0; i < xs.size(); ++i)
        if (hk.match_l[i] == -1) {
            seen_l[i] = 1;
            q.push_back(static_cast<int>(i));
        }
    for (std::size_t qi = 0; qi < q.size(); ++qi) {
        int u = q[qi];
        for (int v : hk.adj[u]) {
            if (seen_r[v]) continue;
            seen_r[v] = 1;
            int w = hk.match_r[v];
            if (w != -1 && !seen_l[w]) {
                seen_l[w] = 1;
                q.push_back(w);
            }
        }
    }
    std::vector<int> out;
    for (std::size_t i = 0; i < xs.size(); ++i)
        if (seen_l[i]) out.push_back(xs[i]);
    return out;
}

Matching maximum_matching_bipartite(const Graph& g, const Bipartition& parts) {
    if (!is_valid_bipartition(g, parts))
        throw std::invalid_argument("parts is not a valid bipartition of the graph");
    return bipartite_matching_between(g, parts.u, parts.w);
}

Matching maximum_matching_bipartite(const Graph& g, const Bipartition& parts,
                                    const std::vector<int>& restrict_to) {
    if (!is_valid_bipartition(g, parts))
        throw std::invalid_argument("parts is not a valid bipartition of the graph");
    std::vector<char> in(g.order(), 0);
    for (int v : restrict_to) in[v] = 1;
    std::vector<int> xs, ys;
    for (int v : parts.u)
        if (in[v]) xs.push_back(v);
    for (int v : parts.w)
        if (in[v]) ys.push_back(v);
    return bipartite_matching_between(g, xs, ys);
}

// ---------------------------------------------------------------------------
// Maximal matching enumeration

bool is_maximal_masked(const Graph& g, const Matching& m,
                       const std::vector<char>& active) {
    if (!is_matching_of(g, m)) throw std::invalid_argument("not a matching of g");
    for (const auto& [u, v] : m.edges)
        if (!active[u] || !active[v])
            throw std::invalid_argument("matching touches an inactive vertex");
    std::vector<char> covered = m.cover(g.order());
    for (int u = 0; u < g.order(); ++u) {
        if (!active[u] || covered[u]) continue;
        bool extendable = false;
        g.for_neighbors(u, [&](int v) {
            if (active[v] && !covered[v]) extendable = true;
        });
        if (extendable) return false;
    }
    return true;
}

bool is_maximal(const Graph& g, const Matching& m) {
    return is_maximal_masked(g, m, all_active(g.order()));
}

namespace {

struct Enumerator {
    std::vector<Edge> edge_list;
    std::vector<char> covered;
    std::vector<Edge> current;
    const std::function<bool(const Matching&)>* cb;
    bool stopped = false;

    bool exposed_independent() const {
        for (const auto& [u, v] : edge_list)
            if (!covered[u] && !covered[v]) return false;
        return true;
    }

    void rec(std::size_t idx) {
        if (stopped) return;
        std::size_t k = idx;
        while (k < edge_list.size() &&
               (covered[edge_list[k].first] || covered[edge_list[k].second]))
            ++k;
        if (k == edge_list.size()) {
            if (exposed_independent()) {
                Matching m;
                m.edges = current;  // built in sorted order
                if (!(*cb)(m)) stopped = true;
            }
            return;
        }
        auto [u, v] = edge_list[k];
        covered[u] = covered[v] = 1;
        current.emplace_back(u, v);
        rec(k + 1);
        current.pop_back();
        covered[u] = covered[v] = 0;
        if (stopped) return;
        // exclude k: only worth continuing if u or v can still be covered
        bool coverable = false;
        for (std::size_t j = k + 1; j < edge_list.size() && !coverable; ++j) {
            const auto& [a, b] = edge_list[j];
            if (a == u || b == u || a == v || b == v) coverable = true;
        }
        if (coverable) rec(k + 1);
    }
};

}  // namespace

void enumerate_maximal_matchings_masked(
    const Graph& g, const std::vector<char>& active,
    const std::function<bool(const Matching&)>& cb, int guard) {
    int active_count = 0;
    for (char a : active) active_count += a;
    if (active_count > guard)
        throw guard_error("enumerate_maximal_matchings", active_count, guard);
    Enumerator e;
    for (const auto& [u, v] : g.edges())
        if (active[u] && active[v]) e.edge_list.emplace_back(u, v);
    e.covered.assign(g.order(), 0);
    e.cb = &cb;
    e.rec(0);
}

void enumerate_maximal_matchings(const Graph& g,
                                 const std::function<bool(const Matching&)>& cb,
                                 int guard) {
    enumerate_maximal_matchings_masked(g, all_active(g.order()), cb, guard);
}

std::vector<Matching> all_maximal_matchings(const Graph& g, int guard) {
    std::vector<Matching> out;
    enumerate_maximal_matchings(
        g,
        [&](const Matching& m) {
            out.push_back(m);
            return true;
        },
        guard);
    return out;
}

bool is_randomly_matchable(const Graph& g) {
    if (!is_connected(g)) throw std::invalid_argument("graph is disconnected");
    int n = g.order();
    if (n >= 2 && n % 2 == 0 && is_complete(g)) return true;
    auto parts = complete_bipartite_parts(g);
    return parts && parts->u.size() == parts->w.size();
}

}  // namespace eqm
