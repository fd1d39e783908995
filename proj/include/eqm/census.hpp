#pragma once

#include <map>
#include <string>
#include <vector>

#include "eqm/classify.hpp"
#include "eqm/graph.hpp"

namespace eqm {

struct Discrepancy {
    std::string graph6;
    std::string check;       // "equimatchable" | "ese" | "vse" | "certificate"
    std::string recognizer;  // verdicts as text ("yes"/"no"/"invalid")
    std::string oracle;
};

struct Violation {
    std::string graph6;
    std::string property;
    std::string detail;
};

struct CensusReport {
    int n = 0;
    std::string scope;        // "all" | "connected" | "stream"
    long scanned_labeled = 0; // labeled graphs visited by the built-in scan
    long classes = 0;         // isomorphism classes examined
    std::map<std::string, long> counts;
    std::vector<std::string> fc_ese_classes;  // canonical graph6 words
    std::vector<Discrepancy> discrepancies;
    std::vector<Violation> violations;
    long skipped = 0;         // graphs past the oracle guard, recorded not dropped
    std::vector<std::string> notes;

    bool clean() const { return discrepancies.empty() && violations.empty(); }
};

// One canonical representative per isomorphism class, in sorted canonical
// word order. Built-in labeled enumeration; n <= 8.
std::vector<Graph> enumerate_graphs(int n, bool connected_only, int workers = 1);

// Exhaustive count of connected factor-critical ESE classes on n vertices
// (odd n <= 7 built-in), each positive confirmed by is_ese_oracle.
CensusReport census_fc_ese(int n, int workers = 1);
// Same counting over an externally supplied stream of graphs.
CensusReport census_fc_ese_stream(const std::vector<Graph>& graphs);

enum class CheckKind { equimatchable, ese, vse };

// Runs structural recognizer and oracle per graph per check, verifies both
// certificates, and reports every disagreement.
CensusReport cross_validate(const std::vector<Graph>& graphs,
                            const std::vector<CheckKind>& checks,
                            int guard = default_oracle_guard, int workers = 1);

// For every graph classified ESE: nu unchanged under edge removal and no
// perfect matching (connected, n >= 3), 2-connected with diameter <= 2 when
// factor-critical, bipartite when it has a cut vertex.
CensusReport verify_properties(const std::vector<Graph>& graphs,
                               int guard = default_oracle_guard,
                               int workers = 1);

std::string census_report_to_json(const CensusReport& r, bool pretty = false);
std::string census_report_human(const CensusReport& r);

}  // namespace eqm
