#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "eqm/graph.hpp"

namespace eqm {

// Canonical forms by degree refinement plus exhaustive permutation search
// within the refinement cells, picking the lexicographically smallest
// upper-triangle encoding. Exact and deterministic; guarded to n <= 10
// where the search is trivially feasible.

// Upper-triangle bits of the canonically relabeled graph, column-major,
// first bit in the most significant position (same bit order as graph6,
// so numeric order of codes == lexicographic order of canonical words).
std::uint64_t canonical_code(const Graph& g);

// graph6 word of the canonically relabeled graph.
std::string canonical_form(const Graph& g);

Graph canonical_graph(const Graph& g);

// lab[pos] = original vertex placed at canonical position pos.
std::vector<int> canonical_labeling(const Graph& g);

bool is_isomorphic(const Graph& a, const Graph& b);

// map[v of a] = corresponding vertex of b, when the graphs are isomorphic.
std::optional<std::vector<int>> isomorphism(const Graph& a, const Graph& b);

// Rebuild a graph from a packed upper-triangle code (inverse of the packing
// used by canonical_code, for any n <= 11).
Graph graph_from_code(int n, std::uint64_t code);

// Packed upper-triangle code of g as labeled (no canonization), n <= 11.
std::uint64_t labeled_code(const Graph& g);

}  // namespace eqm
