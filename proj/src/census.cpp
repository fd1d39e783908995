#include "eqm/census.hpp"

#include <algorithm>
#include <sstream>
#include <thread>

#include "json.hpp"

#include "eqm/canonical.hpp"
#include "eqm/codec.hpp"
#include "eqm/decomposition.hpp"
#include "eqm/matching.hpp"

namespace eqm {

namespace {

constexpr int enumeration_guard = 8;  // 2^C(n,2) labeled graphs

// Shards the labeled-mask range [0, 2^bits) and collects canonical codes of
// the graphs accepted by `keep` into one dedup bitset (merge is an OR, so
// the result is independent of the worker count).
std::vector<std::uint8_t> scan_labeled(
    int n, int workers,
    const std::function<bool(const Graph&)>& keep) {
    int bits = n * (n - 1) / 2;
    std::uint64_t total = 1ull << bits;
    std::size_t bytes = static_cast<std::size_t>((total + 7) / 8);
    workers = std::max(1, workers);

    auto run_range = [&](std::uint64_t lo, std::uint64_t hi,
                         std::vector<std::uint8_t>& seen) {
        for (std::uint64_t mask = lo; mask < hi; ++mask) {
            Graph g = graph_from_code(n, mask);
            if (!keep(g)) continue;
            std::uint64_t code = canonical_code(g);
            seen[code >> 3] |= static_cast<std::uint8_t>(1u << (code & 7));
        }
    };

    if (workers == 1) {
        std::vector<std::uint8_t> seen(bytes, 0);
        run_range(0, total, seen);
        return seen;
    }
    std::vector<std::vector<std::uint8_t>> parts(
        workers, std::vector<std::uint8_t>(bytes, 0));
    std::vector<std::thread> threads;
    std::uint64_t chunk = total / workers + 1;
    for (int w = 0; w < workers; ++w) {
        std::uint64_t lo = std::min<std::uint64_t>(total, w * chunk);
        std::uint64_t hi = std::min<std::uint64_t>(total, lo + chunk);
        threads.emplace_back([&, lo, hi, w] { run_range(lo, hi, parts[w]); });
    }
    for (auto& t : threads) t.join();
    std::vector<std::uint8_t> seen(bytes, 0);
    for (const auto& part : parts)
        for (std::size_t i = 0; i < bytes; ++i) seen[i] |= part[i];
    return seen;
}

std::vector<Graph> graphs_from_bitset(int n, const std::vector<std::uint8_t>& seen) {
    std::vector<Graph> out;
    for (std::size_t byte = 0; byte < seen.size(); ++byte) {
        if (!seen[byte]) continue;
        for (int bit = 0; bit < 8; ++bit)
            if (seen[byte] & (1u << bit))
                out.push_back(graph_from_code(
                    n, (static_cast<std::uint64_t>(byte) << 3) | bit));
    }
    return out;  // ascending code order == sorted canonical words
}

const char* check_name(CheckKind c) {
    switch (c) {
        case CheckKind::equimatchable: return "equimatchable";
        case CheckKind::ese: return "ese";
        case CheckKind::vse: return "vse";
    }
    return "?";
}

}  // namespace

std::vector<Graph> enumerate_graphs(int n, bool connected_only, int workers) {
    if (n < 0 || n > enumeration_guard)
        throw guard_error("enumerate_graphs: built-in labeled enumeration", n,
                          enumeration_guard);
    auto seen = scan_labeled(n, workers, [&](const Graph& g) {
        return !connected_only || is_connected(g);
    });
    return graphs_from_bitset(n, seen);
}

CensusReport census_fc_ese(int n, int workers) {
    if (n % 2 == 0)
        throw std::invalid_argument("census_fc_ese: n must be odd");
    if (n < 0 || n > 7)
        throw guard_error("census_fc_ese: built-in census", n, 7);

    CensusReport report;
    report.n = n;
    report.scope = "all";
    report.scanned_labeled = 1ll << (n * (n - 1) / 2);

    auto seen = scan_labeled(n, workers, [&](const Graph& g) {
        if (!is_connected(g)) return false;
        if (!is_factor_critical(g)) return false;
        return detail::ese_connected(g).verdict;
    });
    std::vector<Graph> classes = graphs_from_bitset(n, seen);
    report.classes = static_cast<long>(classes.size());
    report.counts["fc_ese"] = report.classes;
    for (const Graph& g : classes) {
        report.fc_ese_classes.push_back(encode_graph6(g));
        // every positive is oracle-confirmed
        if (!is_ese_oracle(g).verdict)
            report.discrepancies.push_back(
                {encode_graph6(g), "ese", "yes", "no"});
    }
    return report;
}

CensusReport census_fc_ese_stream(const std::vector<Graph>& graphs) {
    CensusReport report;
    report.scope = "stream";
    std::vector<std::string> words;
    for (const Graph& g : graphs) {
        if (!is_connected(g) || !is_factor_critical(g)) continue;
        if (!is_ese(g).verdict) continue;
        if (g.order() <= canonical_guard)
            words.push_back(canonical_form(g));
        else
            words.push_back(encode_graph6(g));
    }
    std::sort(words.begin(), words.end());
    words.erase(std::unique(words.begin(), words.end()), words.end());
    report.fc_ese_classes = words;
    report.classes = static_cast<long>(words.size());
    report.counts["fc_ese"] = report.classes;
    report.notes.push_back(
        "stream mode: deduplication by canonical form only for n <= 10");
    return report;
}

CensusReport cross_validate(const std::vector<Graph>& graphs,
                            const std::vector<CheckKind>& checks, int guard,
                            int workers) {
    CensusReport report;
    report.scope = "stream";
    report.classes = static_cast<long>(graphs.size());

    struct Row {
        std::vector<Discrepancy> discrepancies;
        long skipped = 0;
        std::map<std::string, long> counts;
    };
    workers = std::max(1, workers);
    std::vector<Row> rows(workers);

    auto run_range = [&](std::size_t lo, std::size_t hi, Row& row) {
        for (std::size_t i = lo; i < hi; ++i) {
            const Graph& g = graphs[i];
            std::string word = encode_graph6(g);
            for (CheckKind check : checks) {
                Classification fast, slow;
                try {
                    switch (check) {
                        case CheckKind::equimatchable:
                            fast = is_equimatchable(g, guard);
                            slow = is_equimatchable_oracle(g, guard);
                            break;
                        case CheckKind::ese:
                            fast = is_ese(g, guard);
                            slow = is_ese_oracle(g, guard);
                            break;
                        case CheckKind::vse:
                            fast = is_vse(g, guard);
                            slow = is_vse_oracle(g, guard);
                            break;
                    }
                } catch (const guard_error&) {
                    ++row.skipped;
                    continue;
                }
                if (fast.verdict != slow.verdict)
                    row.discrepancies.push_back({word, check_name(check),
                                                 fast.verdict ? "yes" : "no",
                                                 slow.verdict ? "yes" : "no"});
                if (fast.verdict) ++row.counts[check_name(check)];
                try {
                    if (!verify_certificate(g, fast.certificate, guard))
                        row.discrepancies.push_back(
                            {word, "certificate",
                             std::string(check_name(check)) + "/structural",
                             "invalid"});
                    if (!verify_certificate(g, slow.certificate, guard))
                        row.discrepancies.push_back(
                            {word, "certificate",
                             std::string(check_name(check)) + "/oracle",
                             "invalid"});
                } catch (const guard_error&) {
                    ++row.skipped;
                }
            }
        }
    };

    if (workers == 1) {
        run_range(0, graphs.size(), rows[0]);
    } else {
        std::vector<std::thread> threads;
        std::size_t chunk = graphs.size() / workers + 1;
        for (int w = 0; w < workers; ++w) {
            std::size_t lo = std::min(graphs.size(), w * chunk);
            std::size_t hi = std::min(graphs.size(), lo + chunk);
            threads.emplace_back([&, lo, hi, w] { run_range(lo, hi, rows[w]); });
        }
        for (auto& t : threads) t.join();
    }
    for (const Row& row : rows) {
        report.skipped += row.skipped;
        for (const auto& d : row.discrepancies) report.discrepancies.push_back(d);
        for (const auto& [k, v] : row.counts) report.counts[k] += v;
    }
    return report;
}

CensusReport verify_properties(const std::vector<Graph>& graphs, int guard,
                               int workers) {
    (void)workers;
    CensusReport report;
    report.scope = "stream";
    report.classes = static_cast<long>(graphs.size());
    long ese_count = 0;
    for (const Graph& g : graphs) {
        Classification cls;
        try {
            cls = is_ese(g, guard);
        } catch (const guard_error&) {
            ++report.skipped;
            continue;
        }
        if (!cls.verdict) continue;
        ++ese_count;
        std::string word = encode_graph6(g);
        int n = g.order();
        if (!is_connected(g)) {
            report.notes.push_back(word + ": disconnected, property checks skipped");
            continue;
        }
        if (n >= 3) {
            int nu = matching_number(g);
            if (2 * nu == n)
                report.violations.push_back(
                    {word, "no_perfect_matching", "perfect matching exists"});
            for (const auto& [u, v] : g.edges()) {
                Graph h = without_edge(g, u, v);
                if (matching_number(h) != nu) {
                    report.violations.push_back(
                        {word, "nu_unchanged",
                         "removing edge (" + std::to_string(u) + "," +
                             std::to_string(v) + ") changes nu"});
                    break;
                }
            }
        }
        if (is_factor_critical(g) && n >= 3) {
            if (!is_two_connected(g))
                report.violations.push_back(
                    {word, "fc_ese_two_connected", "not 2-connected"});
            auto diam = diameter(g);
            if (!diam || *diam > 2)
                report.violations.push_back(
                    {word, "fc_ese_diameter", "diameter exceeds 2"});
        }
        if (!articulation_points(g).empty()) {
            if (!bipartition(g))
                report.violations.push_back(
                    {word, "cut_vertex_bipartite",
                     "has a cut vertex but is not bipartite"});
        }
    }
    report.counts["ese"] = ese_count;
    return report;
}

std::string census_report_to_json(const CensusReport& r, bool pretty) {
    nlohmann::json j;
    j["n"] = r.n;
    j["scope"] = r.scope;
    j["scanned_labeled"] = r.scanned_labeled;
    j["classes"] = r.classes;
    j["counts"] = r.counts;
    j["fc_ese_classes"] = r.fc_ese_classes;
    j["skipped"] = r.skipped;
    j["notes"] = r.notes;
    j["discrepancies"] = nlohmann::json::array();
    for (const auto& d : r.discrepancies)
        j["discrepancies"].push_back({{"graph6", d.graph6},
                                      {"check", d.check},
                                      {"recognizer", d.recognizer},
                                      {"oracle", d.oracle}});
    j["violations"] = nlohmann::json::array();
    for (const auto& v : r.violations)
        j["violations"].push_back({{"graph6", v.graph6},
                                   {"property", v.property},
                                   {"detail", v.detail}});
    return pretty ? j.dump(2) : j.dump();
}

std::string census_report_human(const CensusReport& r) {
    std::ostringstream out;
    out << "census scope=" << r.scope;
    if (r.n > 0) out << " n=" << r.n;
    if (r.scanned_labeled > 0) out << " labeled=" << r.scanned_labeled;
    out << " classes=" << r.classes << "\n";
    for (const auto& [k, v] : r.counts) out << "  count " << k << " = " << v << "\n";
    if (!r.fc_ese_classes.empty()) {
        out << "  fc-ese classes:";
        for (const auto& w : r.fc_ese_classes) out << " " << w;
        out << "\n";
    }
    for (const auto& d : r.discrepancies)
        out << "  DISCREPANCY " << d.graph6 << " " << d.check
            << " recognizer=" << d.recognizer << " oracle=" << d.oracle << "\n";
    for (const auto& v : r.violations)
        out << "  VIOLATION " << v.graph6 << " " << v.property << " (" << v.detail
            << ")\n";
    if (r.skipped > 0) out << "  skipped (guard): " << r.skipped << "\n";
    for (const auto& n : r.notes) out << "  note: " << n << "\n";
    out << (r.clean() ? "  OK: no discrepancies, no violations"
                      : "  FAILED: discrepancies or violations present")
        << "\n";
    return out.str();
}

}  // namespace eqm
