#pragma once

#include <functional>
#include <vector>

#include "eqm/errors.hpp"
#include "eqm/graph.hpp"

namespace eqm {

// A set of pairwise vertex-disjoint edges. Edges are normalized (u < v) and
// kept sorted; validity against a host graph is checked by the operations
// that take both.
struct Matching {
    std::vector<Edge> edges;

    Matching() = default;
    explicit Matching(std::vector<Edge> e) : edges(std::move(e)) { normalize(); }

    int size() const { return static_cast<int>(edges.size()); }
    void normalize();
    bool saturates(int v) const;
    std::vector<char> cover(int n) const;
};

bool is_matching_of(const Graph& g, const Matching& m);

// --- maximum matching (blossom, O(n^3)) ---

// `active` masks vertices in/out without relabeling; inactive vertices and
// their edges are invisible to the solver.
Matching maximum_matching_masked(const Graph& g, const std::vector<char>& active);
Matching maximum_matching(const Graph& g);

int matching_number(const Graph& g);
int matching_number_masked(const Graph& g, const std::vector<char>& active);

bool has_perfect_matching(const Graph& g);
// Perfect on the active set: every active vertex matched.
bool has_perfect_matching_masked(const Graph& g, const std::vector<char>& active);

// --- bipartite maximum matching (Hopcroft-Karp) ---

// Throws std::invalid_argument when `parts` is not a valid bipartition of g.
// When `restrict_to` is given, the matching lives in the subgraph induced by
// those vertices.
Matching maximum_matching_bipartite(const Graph& g, const Bipartition& parts);
Matching maximum_matching_bipartite(const Graph& g, const Bipartition& parts,
                                    const std::vector<int>& restrict_to);

// Maximum matching between explicit side sets xs and ys; every g-edge inside
// xs+ys must cross the two sets. Returned edges use g's vertex indices.
Matching bipartite_matching_between(const Graph& g, const std::vector<int>& xs,
                                    const std::vector<int>& ys);

// Konig/Hall witness: when no matching of g[xs+ys] saturates xs, returns a
// nonempty S <= xs whose neighborhood inside ys is smaller than S. Returns an
// empty vector when xs can be saturated.
std::vector<int> hall_violator(const Graph& g, const std::vector<int>& xs,
                               const std::vector<int>& ys);

// --- maximal matchings ---

// True iff the exposed vertices form an independent set. Throws when m is
// not a matching of g.
bool is_maximal(const Graph& g, const Matching& m);
bool is_maximal_masked(const Graph& g, const Matching& m,
                       const std::vector<char>& active);

// Emits every maximal matching exactly once, in lexicographic order of the
// sorted edge lists. The callback returns false to stop early. Refuses
// graphs larger than `guard`.
void enumerate_maximal_matchings(
    const Graph& g, const std::function<bool(const Matching&)>& cb,
    int guard = default_oracle_guard);
void enumerate_maximal_matchings_masked(
    const Graph& g, const std::vector<char>& active,
    const std::function<bool(const Matching&)>& cb,
    int guard = default_oracle_guard);

std::vector<Matching> all_maximal_matchings(const Graph& g,
                                            int guard = default_oracle_guard);

// True iff g is K_{2r} or K_{r,r} (Sumner's randomly matchable graphs).
// Throws std::invalid_argument on disconnected input.
bool is_randomly_matchable(const Graph& g);

}  // namespace eqm
