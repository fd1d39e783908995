#pragma once

#include <bit>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace eqm {

using Edge = std::pair<int, int>;  // normalized u < v

// Undirected simple graph on vertices 0..n-1, one bit row per vertex.
// Symmetry and loop-freeness are enforced on every mutation path; treat
// instances as immutable once built (all algorithms take const Graph&).
class Graph {
public:
    Graph() = default;
    explicit Graph(int n);
    static Graph from_edges(int n, const std::vector<Edge>& edges);

    int order() const { return n_; }
    long edge_count() const;

    void add_edge(int u, int v);     // throws on self-loop / out of range
    void remove_edge(int u, int v);
    bool has_edge(int u, int v) const {
        return (bits_[static_cast<std::size_t>(u) * words_ + (v >> 6)] >>
                (v & 63)) & 1u;
    }

    int degree(int v) const;
    int max_degree() const;
    int min_degree() const;

    std::vector<int> neighbors(int v) const;
    std::vector<Edge> edges() const;  // sorted lexicographically

    // Row of presence bits for v, words_per_row() words of 64 bits.
    const std::uint64_t* row(int v) const {
        return bits_.data() + static_cast<std::size_t>(v) * words_;
    }
    int words_per_row() const { return words_; }

    template <class F>
    void for_neighbors(int v, F&& f) const {
        const std::uint64_t* r = row(v);
        for (int w = 0; w < words_; ++w) {
            std::uint64_t bits = r[w];
            while (bits) {
                int u = (w << 6) + std::countr_zero(bits);
                bits &= bits - 1;
                f(u);
            }
        }
    }

    bool operator==(const Graph& other) const {
        return n_ == other.n_ && bits_ == other.bits_;
    }

private:
    void check_pair(int u, int v) const;

    int n_ = 0;
    int words_ = 0;
    std::vector<std::uint64_t> bits_;
};

// U is the smaller side after normalization (|U| <= |W|).
struct Bipartition {
    std::vector<int> u;
    std::vector<int> w;
};

struct InducedSubgraph {
    Graph graph;
    std::vector<int> vertices;  // vertices[i] = index in the host graph
};

Graph complement(const Graph& g);
InducedSubgraph induced_subgraph(const Graph& g, const std::vector<int>& s);
Graph without_edge(const Graph& g, int u, int v);

std::vector<std::vector<int>> connected_components(const Graph& g);
bool is_connected(const Graph& g);

// Empty optional iff g has an odd cycle. Sides of disconnected graphs are
// merged componentwise, then swapped so |U| <= |W|.
std::optional<Bipartition> bipartition(const Graph& g);

// A closed walk of odd length, present exactly when bipartition() fails.
std::optional<std::vector<int>> odd_closed_walk(const Graph& g);

std::vector<int> articulation_points(const Graph& g);
bool is_two_connected(const Graph& g);

// Empty optional means infinite (g disconnected).
std::optional<int> diameter(const Graph& g);

bool is_complete(const Graph& g);
// Present iff g is a complete bipartite graph K_{a,b}, a+b = n, a,b >= 1.
std::optional<Bipartition> complete_bipartite_parts(const Graph& g);

// True if `parts` is a valid bipartition of g: sides partition V and every
// edge crosses. Sides do not need to be the canonical 2-coloring.
bool is_valid_bipartition(const Graph& g, const Bipartition& parts);

// Sorted union of the neighborhoods of the vertices in s (may intersect s).
std::vector<int> set_neighborhood(const Graph& g, const std::vector<int>& s);

}  // namespace eqm
