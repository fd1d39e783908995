#pragma once

#include <vector>

#include "eqm/certificate.hpp"
#include "eqm/graph.hpp"

namespace eqm {

struct ClassTags {
    bool equimatchable = false;
    bool ese = false;
    bool vse = false;
    bool factor_critical = false;
    bool randomly_matchable = false;
    bool bipartite = false;
};

struct Classification {
    bool verdict = false;
    ClassTags tags;
    Certificate certificate;
};

// Structural recognizers. is_ese and is_vse are purely structural; the
// guard only bounds certificate enrichment (two-maximal-matching search).
// is_equimatchable falls back to the enumeration oracle for connected
// non-bipartite, non-factor-critical graphs without a perfect matching and
// throws guard_error ("undecided at scale") past the guard.
Classification is_equimatchable(const Graph& g, int guard = default_oracle_guard);
Classification is_ese(const Graph& g, int guard = default_oracle_guard);
Classification is_vse(const Graph& g, int guard = default_oracle_guard);

// Definition-level brute-force oracles (enumeration-backed, guarded).
Classification is_equimatchable_oracle(const Graph& g,
                                       int guard = default_oracle_guard);
Classification is_ese_oracle(const Graph& g, int guard = default_oracle_guard);
Classification is_vse_oracle(const Graph& g, int guard = default_oracle_guard);

// Diagnostics with replayable certificates.
Classification classify_factor_critical(const Graph& g);
Classification classify_randomly_matchable(const Graph& g);  // throws if disconnected

// Edges whose removal breaks equimatchability; empty iff g is ESE.
// Throws std::invalid_argument when g is not equimatchable.
std::vector<Edge> critical_edges(const Graph& g, int guard = default_oracle_guard);

namespace detail {

// Connected-component workhorse behind is_ese; exposed for the census,
// which needs the factor-critical flag without a second decomposition run.
struct ConnectedEse {
    bool verdict = false;
    bool factor_critical = false;
    bool bipartite = false;
    Certificate certificate;
};

ConnectedEse ese_connected(const Graph& g);  // pre: g connected, n >= 1

}  // namespace detail

}  // namespace eqm
