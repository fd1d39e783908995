#include "eqm/classify.hpp"

#include <algorithm>
#include <optional>
#include <stdexcept>

#include "eqm/canonical.hpp"
#include "eqm/decomposition.hpp"
#include "eqm/families.hpp"
#include "eqm/matching.hpp"

namespace eqm {

namespace {

// ---------------------------------------------------------------------------
// shared helpers

Matching extend_to_maximal(const Graph& g, Matching m, int forbidden = -1) {
    std::vector<char> covered = m.cover(g.order());
    for (const auto& [u, v] : g.edges()) {
        if (u == forbidden || v == forbidden) continue;
        if (!covered[u] && !covered[v]) {
            m.edges.emplace_back(u, v);
            covered[u] = covered[v] = 1;
        }
    }
    m.normalize();
    return m;
}

// First two maximal matchings of different sizes in enumeration order, if
// found within the budget. Used only to enrich refutation certificates.
std::optional<std::pair<Matching, Matching>> two_maximal_sizes(
    const Graph& g, int guard, long budget = 200000) {
    if (g.order() > guard) return std::nullopt;
    std::optional<Matching> first;
    std::optional<std::pair<Matching, Matching>> found;
    long seen = 0;
    enumerate_maximal_matchings(
        g,
        [&](const Matching& m) {
            if (++seen > budget) return false;
            if (!first) {
                first = m;
                return true;
            }
            if (m.size() != first->size()) {
                found = std::make_pair(*first, m);
                return false;
            }
            return true;
        },
        guard);
    return found;
}

int first_non_fc_vertex(const Graph& g) {
    std::vector<char> active(g.order(), 1);
    for (int v = 0; v < g.order(); ++v) {
        active[v] = 0;
        bool pm = has_perfect_matching_masked(g, active);
        active[v] = 1;
        if (!pm) return v;
    }
    return -1;
}

Edge first_nonedge(const Graph& g) {
    for (int u = 0; u < g.order(); ++u)
        for (int v = u + 1; v < g.order(); ++v)
            if (!g.has_edge(u, v)) return {u, v};
    return {-1, -1};
}

std::optional<FcTriple> find_fc_triple(const Graph& g, bool independent_only) {
    int n = g.order();
    std::vector<char> active(n, 1);
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            for (int c = b + 1; c < n; ++c) {
                int inside = g.has_edge(a, b) + g.has_edge(a, c) + g.has_edge(b, c);
                if (inside > 1 || (independent_only && inside == 1)) continue;
                active[a] = active[b] = active[c] = 0;
                bool pm = has_perfect_matching_masked(g, active);
                if (pm) {
                    Matching witness = maximum_matching_masked(g, active);
                    active[a] = active[b] = active[c] = 1;
                    return FcTriple{{a, b, c}, witness, inside == 0};
                }
                active[a] = active[b] = active[c] = 1;
            }
    return std::nullopt;
}

bool nu_one_degree_sequence(std::vector<int> degs) {
    std::sort(degs.rbegin(), degs.rend());
    if (degs.empty() || degs[0] < 1) return false;
    // star K_{1,k} plus isolated vertices: k, then k ones, then zeros.
    // k = 2 overlaps with the triangle pattern below; both mean nu = 1.
    int k = degs[0];
    bool star = static_cast<int>(degs.size()) >= k + 1;
    for (int i = 1; i <= k && star; ++i) star = (degs[i] == 1);
    for (std::size_t i = k + 1; i < degs.size() && star; ++i)
        star = (degs[i] == 0);
    if (star) return true;
    // triangle plus isolated vertices
    if (degs.size() < 3 || degs[0] != 2 || degs[1] != 2 || degs[2] != 2)
        return false;
    for (std::size_t i = 3; i < degs.size(); ++i)
        if (degs[i] != 0) return false;
    return true;
}

// ---------------------------------------------------------------------------
// bipartite branch shared by ESE and VSE

struct BipartiteOutcome {
    bool verdict = false;
    // set on refutation
    int bad_u = -1;
    Matching saturating;
    // set on acceptance
    std::vector<HallPair> pairs;
};

// pre: g connected bipartite with parts normalized (|U| <= |W|), n >= 3.
// ESE iff |U| < |W| and no u in U has its whole neighborhood saturable.
BipartiteOutcome bipartite_ese_check(const Graph& g, const Bipartition& parts) {
    BipartiteOutcome out;
    if (parts.u.size() == parts.w.size()) {
        // |U| = |W| is never ESE; some u must have a saturating matching
        // (otherwise all of U would be square-strong, forcing a perfect
        // matching and contradicting itself). Produce the concrete witness.
        for (int u : parts.u) {
            std::vector<int> xs = g.neighbors(u);
            std::vector<int> ys = set_neighborhood(g, xs);
            Matching m = bipartite_matching_between(g, xs, ys);
            if (m.size() == static_cast<int>(xs.size())) {
                out.bad_u = u;
                out.saturating = m;
                return out;
            }
        }
        throw std::logic_error(
            "bipartite_ese_check: equal-sided graph with every small-side "
            "vertex square-strong");
    }
    for (int u : parts.u) {
        std::vector<int> xs = g.neighbors(u);
        std::vector<int> ys = set_neighborhood(g, xs);  // includes u
        Matching m = bipartite_matching_between(g, xs, ys);
        if (m.size() == static_cast<int>(xs.size())) {
            out.bad_u = u;
            out.saturating = m;
            return out;
        }
        std::vector<int> violator = hall_violator(g, xs, ys);
        if (violator.empty())
            throw std::logic_error("bipartite_ese_check: missing Hall violator");
        out.pairs.push_back({u, violator});
    }
    out.verdict = true;
    return out;
}

bool small_components_only(const Graph& g) {
    for (const auto& comp : connected_components(g))
        if (comp.size() > 2) return false;
    return true;
}


Matching translate(const Matching& local, const std::vector<int>& to_parent) {
    Matching out;
    for (const auto& [u, v] : local.edges)
        out.edges.emplace_back(to_parent[u], to_parent[v]);
    out.normalize();
    return out;
}

}  // namespace

// ---------------------------------------------------------------------------
// ESE

namespace detail {

ConnectedEse ese_connected(const Graph& g) {
    int n = g.order();
    ConnectedEse out;
    if (n <= 2) {
        out.verdict = true;
        out.factor_critical = (n == 1);
        out.bipartite = true;
        out.certificate = {{ClaimClass::ese, true}, TrivialOrder{}};
        return out;
    }

    if (auto parts = bipartition(g)) {
        out.bipartite = true;
        BipartiteOutcome res = bipartite_ese_check(g, *parts);
        out.verdict = res.verdict;
        if (res.verdict)
            out.certificate = {{ClaimClass::ese, true},
                               BipartiteEseWitness{std::move(res.pairs)}};
        else
            out.certificate = {{ClaimClass::ese, false},
                               BipartiteRefutation{res.bad_u, res.saturating}};
        return out;
    }

    if (!is_factor_critical(g)) {
        int bad = first_non_fc_vertex(g);
        auto walk = odd_closed_walk(g);
        if (walk == std::nullopt)
            throw std::logic_error("ese_connected: non-bipartite graph without an odd walk");
        out.certificate = {{ClaimClass::ese, false},
                           NotFcNotBipartite{bad, *walk}};
        return out;
    }
    out.factor_critical = true;

    if (n <= 5) {
        const auto& catalog = small_catalog();
        for (int idx = 0; idx < static_cast<int>(catalog.size()); ++idx) {
            if (catalog[idx].order() != n) continue;
            if (auto map = isomorphism(g, catalog[idx])) {
                out.verdict = true;
                out.certificate = {{ClaimClass::ese, true},
                                   SmallCatalogMatch{idx, *map}};
                return out;
            }
        }
        auto triple = find_fc_triple(g, false);
        if (!triple)
            throw std::logic_error(
                "ese_connected: 5-vertex factor-critical graph outside the "
                "catalog with no refuting triple");
        out.certificate = {{ClaimClass::ese, false}, *triple};
        return out;
    }

    // factor-critical, n = 2r+1 >= 7
    Graph comp = complement(g);
    if (comp.edge_count() == 0) {
        out.verdict = true;
        out.certificate = {{ClaimClass::ese, true}, OddClique{(n - 1) / 2}};
        return out;
    }
    if (comp.max_degree() <= 1) {
        out.verdict = true;
        out.certificate = {{ClaimClass::ese, true}, G1Witness{comp.edges()}};
        return out;
    }
    // G2: some complement component is a clique S, |S| >= 3, and g minus S
    // has matching number 1 (star or triangle plus isolated vertices).
    for (const auto& cand : connected_components(comp)) {
        if (cand.size() < 3) continue;
        bool clique = true;
        for (std::size_t i = 0; i < cand.size() && clique; ++i)
            for (std::size_t j = i + 1; j < cand.size(); ++j)
                if (!comp.has_edge(cand[i], cand[j])) {
                    clique = false;
                    break;
                }
        if (!clique) continue;
        std::vector<char> in_s(n, 0);
        for (int v : cand) in_s[v] = 1;
        std::vector<int> degs;
        for (int t = 0; t < n; ++t) {
            if (in_s[t]) continue;
            int d = 0;
            g.for_neighbors(t, [&](int x) {
                if (!in_s[x]) ++d;
            });
            degs.push_back(d);
        }
        if (nu_one_degree_sequence(degs)) {
            out.verdict = true;
            out.certificate = {{ClaimClass::ese, true}, G2Witness{cand}};
            return out;
        }
    }
    auto triple = find_fc_triple(g, false);
    if (!triple)
        throw std::logic_error(
            "ese_connected: factor-critical graph rejected by every "
            "structural branch but no refuting triple exists");
    out.certificate = {{ClaimClass::ese, false}, *triple};
    return out;
}

}  // namespace detail

Classification is_ese(const Graph& g, int) {
    Classification out;
    out.tags.bipartite = bipartition(g).has_value();
    if (small_components_only(g)) {
        out.verdict = true;
        out.tags.ese = out.tags.equimatchable = true;
        out.tags.factor_critical = (g.order() == 1);
        out.certificate = {{ClaimClass::ese, true}, TrivialOrder{}};
        return out;
    }
    auto comps = connected_components(g);
    if (comps.size() == 1) {
        detail::ConnectedEse res = detail::ese_connected(g);
        out.verdict = res.verdict;
        out.tags.factor_critical = res.factor_critical;
        out.tags.ese = out.tags.equimatchable = res.verdict;
        out.certificate = std::move(res.certificate);
        return out;
    }
    CompositeCertificate pos;
    out.verdict = true;
    for (const auto& comp : comps) {
        InducedSubgraph sub = induced_subgraph(g, comp);
        detail::ConnectedEse res = detail::ese_connected(sub.graph);
        if (!res.verdict) {
            out.verdict = false;
            CompositeCertificate neg;
            neg.parts.push_back(
                {comp, std::make_shared<Certificate>(std::move(res.certificate))});
            out.certificate = {{ClaimClass::ese, false}, std::move(neg)};
            return out;
        }
        pos.parts.push_back(
            {comp, std::make_shared<Certificate>(std::move(res.certificate))});
    }
    out.tags.ese = out.tags.equimatchable = true;
    out.certificate = {{ClaimClass::ese, true}, std::move(pos)};
    return out;
}

// ---------------------------------------------------------------------------
// VSE

namespace {

struct ConnectedVse {
    bool verdict = false;
    Certificate certificate;
};

ConnectedVse vse_connected(const Graph& g) {
    ConnectedVse out;
    if (is_complete(g)) {
        out.verdict = true;
        out.certificate = {{ClaimClass::vse, true},
                           VseForm{VseShape::complete, std::nullopt}};
        return out;
    }
    auto parts = bipartition(g);
    if (!parts) {
        auto walk = odd_closed_walk(g);
        if (walk == std::nullopt)
            throw std::logic_error("vse_connected: non-bipartite graph without an odd walk");
        out.certificate = {{ClaimClass::vse, false},
                           NotCompleteNotBipartite{first_nonedge(g), *walk}};
        return out;
    }
    if (complete_bipartite_parts(g)) {
        out.verdict = true;
        out.certificate = {{ClaimClass::vse, true},
                           VseForm{VseShape::complete_bipartite, std::nullopt}};
        return out;
    }
    BipartiteOutcome res = bipartite_ese_check(g, *parts);
    if (res.verdict) {
        out.verdict = true;
        out.certificate = {
            {ClaimClass::vse, true},
            VseForm{VseShape::bipartite_ese,
                    BipartiteEseWitness{std::move(res.pairs)}}};
    } else {
        out.certificate = {{ClaimClass::vse, false},
                           BipartiteRefutation{res.bad_u, res.saturating}};
    }
    return out;
}

}  // namespace

Classification is_vse(const Graph& g, int) {
    Classification out;
    out.tags.bipartite = bipartition(g).has_value();
    if (small_components_only(g)) {
        out.verdict = true;
        out.tags.vse = out.tags.equimatchable = true;
        out.certificate = {{ClaimClass::vse, true}, TrivialOrder{}};
        return out;
    }
    auto comps = connected_components(g);
    if (comps.size() == 1) {
        ConnectedVse res = vse_connected(g);
        out.verdict = res.verdict;
        out.tags.vse = out.tags.equimatchable = res.verdict;
        out.certificate = std::move(res.certificate);
        return out;
    }
    CompositeCertificate pos;
    out.verdict = true;
    for (const auto& comp : comps) {
        InducedSubgraph sub = induced_subgraph(g, comp);
        ConnectedVse res = vse_connected(sub.graph);
        if (!res.verdict) {
            out.verdict = false;
            CompositeCertificate neg;
            neg.parts.push_back(
                {comp, std::make_shared<Certificate>(std::move(res.certificate))});
            out.certificate = {{ClaimClass::vse, false}, std::move(neg)};
            return out;
        }
        pos.parts.push_back(
            {comp, std::make_shared<Certificate>(std::move(res.certificate))});
    }
    out.tags.vse = out.tags.equimatchable = true;
    out.certificate = {{ClaimClass::vse, true}, std::move(pos)};
    return out;
}

// ---------------------------------------------------------------------------
// equimatchability

namespace {

struct ConnectedEquim {
    bool verdict = false;
    Certificate certificate;
};

// pre: g connected, n >= 1
ConnectedEquim equim_connected(const Graph& g, int guard) {
    ConnectedEquim out;
    int n = g.order();
    if (n <= 2) {
        out.verdict = true;
        out.certificate = {{ClaimClass::equimatchable, true}, TrivialOrder{}};
        return out;
    }

    if (has_perfect_matching(g)) {
        // an equimatchable graph with a perfect matching is randomly matchable
        if (is_randomly_matchable(g)) {
            out.verdict = true;
            bool complete = is_complete(g);
            out.certificate = {{ClaimClass::equimatchable, true},
                               RandomlyMatchableForm{complete, n / 2}};
            return out;
        }
        if (auto pair = two_maximal_sizes(g, guard))
            out.certificate = {{ClaimClass::equimatchable, false},
                               TwoMaximalMatchings{pair->first, pair->second,
                                                   std::nullopt, std::nullopt}};
        else
            out.certificate = {{ClaimClass::equimatchable, false},
                               PerfectMatchingRefutation{maximum_matching(g)}};
        return out;
    }

    if (is_factor_critical(g)) {
        if (auto triple = find_fc_triple(g, true)) {
            // the perfect matching on the rest is maximal (exposed set is
            // the independent triple), one short of maximum
            Matching m1 = triple->pm;
            Matching m2 = maximum_matching(g);
            out.certificate = {{ClaimClass::equimatchable, false},
                               TwoMaximalMatchings{m1, m2, std::nullopt,
                                                   std::nullopt}};
            return out;
        }
        out.verdict = true;
        out.certificate = {{ClaimClass::equimatchable, true}, FcNoTriple{}};
        return out;
    }

    if (auto parts = bipartition(g)) {
        std::vector<HallPair> pairs;
        for (int u : parts->u) {
            std::vector<int> xs = g.neighbors(u);
            std::vector<int> ys;  // N(N(u)) minus u itself
            for (int y : set_neighborhood(g, xs))
                if (y != u) ys.push_back(y);
            Matching m = bipartite_matching_between(g, xs, ys);
            if (m.size() == static_cast<int>(xs.size())) {
                // u is weak: a matching of g-u saturates N(u)
                Matching m1 = extend_to_maximal(g, m, u);
                Matching m2 = extend_to_maximal(g, maximum_matching(g));
                if (m1.size() != m2.size())
                    out.certificate = {
                        {ClaimClass::equimatchable, false},
                        TwoMaximalMatchings{m1, m2, std::nullopt, std::nullopt}};
                else
                    out.certificate = {{ClaimClass::equimatchable, false},
                                       WeakVertexWitness{u, m}};
                return out;
            }
            std::vector<int> violator = hall_violator(g, xs, ys);
            if (violator.empty())
                throw std::logic_error("equim_connected: missing Hall violator");
            pairs.push_back({u, violator});
        }
        out.verdict = true;
        out.certificate = {{ClaimClass::equimatchable, true},
                           BipartiteStrongWitness{std::move(pairs)}};
        return out;
    }

    // connected, non-bipartite, not factor-critical, no perfect matching:
    // no structural path in the paper; fall back to the oracle
    if (n > guard)
        throw guard_error(
            "is_equimatchable: undecided at scale (connected non-bipartite "
            "non-factor-critical component)",
            n, guard);
    std::optional<Matching> first;
    std::optional<std::pair<Matching, Matching>> bad;
    enumerate_maximal_matchings(
        g,
        [&](const Matching& m) {
            if (!first) {
                first = m;
                return true;
            }
            if (m.size() != first->size()) {
                bad = std::make_pair(*first, m);
                return false;
            }
            return true;
        },
        guard);
    if (bad) {
        out.certificate = {{ClaimClass::equimatchable, false},
                           TwoMaximalMatchings{bad->first, bad->second,
                                               std::nullopt, std::nullopt}};
    } else {
        out.verdict = true;
        out.certificate = {{ClaimClass::equimatchable, true},
                           UniformMaximalSize{first->size()}};
    }
    return out;
}

// Fixed maximal matching on every component except `skip`, in parent indices.
Matching maximal_on_other_components(const Graph& g,
                                     const std::vector<std::vector<int>>& comps,
                                     std::size_t skip) {
    std::vector<char> blocked(g.order(), 0);
    for (int v : comps[skip]) blocked[v] = 1;
    Matching m;
    std::vector<char> covered(g.order(), 0);
    for (const auto& [u, v] : g.edges()) {
        if (blocked[u] || blocked[v]) continue;
        if (!covered[u] && !covered[v]) {
            m.edges.emplace_back(u, v);
            covered[u] = covered[v] = 1;
        }
    }
    m.normalize();
    return m;
}

}  // namespace

Classification is_equimatchable(const Graph& g, int guard) {
    Classification out;
    out.tags.bipartite = bipartition(g).has_value();
    if (small_components_only(g)) {
        out.verdict = true;
        out.tags.equimatchable = true;
        out.certificate = {{ClaimClass::equimatchable, true}, TrivialOrder{}};
        return out;
    }
    auto comps = connected_components(g);
    if (comps.size() == 1) {
        ConnectedEquim res = equim_connected(g, guard);
        out.verdict = res.verdict;
        out.tags.equimatchable = res.verdict;
        out.certificate = std::move(res.certificate);
        return out;
    }
    CompositeCertificate pos;
    out.verdict = true;
    for (std::size_t ci = 0; ci < comps.size(); ++ci) {
        InducedSubgraph sub = induced_subgraph(g, comps[ci]);
        ConnectedEquim res;
        try {
            res = equim_connected(sub.graph, guard);
        } catch (const guard_error&) {
            std::string members;
            for (int v : comps[ci]) members += (members.empty() ? "" : ",") + std::to_string(v);
            throw guard_error("is_equimatchable: undecided at scale; component {" +
                                  members + "} needs the enumeration oracle",
                              sub.graph.order(), guard);
        }
        if (!res.verdict) {
            out.verdict = false;
            // Lift a two-matchings refutation to the whole graph by padding
            // both sides with one fixed maximal matching of the rest.
            if (auto* two = std::get_if<TwoMaximalMatchings>(&res.certificate.body)) {
                Matching rest = maximal_on_other_components(g, comps, ci);
                Matching m1 = translate(two->m1, comps[ci]);
                Matching m2 = translate(two->m2, comps[ci]);
                m1.edges.insert(m1.edges.end(), rest.edges.begin(), rest.edges.end());
                m2.edges.insert(m2.edges.end(), rest.edges.begin(), rest.edges.end());
                m1.normalize();
                m2.normalize();
                out.certificate = {{ClaimClass::equimatchable, false},
                                   TwoMaximalMatchings{m1, m2, std::nullopt,
                                                       std::nullopt}};
            } else {
                CompositeCertificate neg;
                neg.parts.push_back({comps[ci], std::make_shared<Certificate>(
                                                    std::move(res.certificate))});
                out.certificate = {{ClaimClass::equimatchable, false},
                                   std::move(neg)};
            }
            return out;
        }
        pos.parts.push_back({comps[ci], std::make_shared<Certificate>(
                                            std::move(res.certificate))});
    }
    out.tags.equimatchable = true;
    out.certificate = {{ClaimClass::equimatchable, true}, std::move(pos)};
    return out;
}

// ---------------------------------------------------------------------------
// oracles

namespace {

struct OracleUniform {
    bool uniform = true;
    int size = -1;
    Matching first, second;  // set when uniform fails
};

OracleUniform oracle_uniform_masked(const Graph& g, const std::vector<char>& active,
                                    int guard) {
    OracleUniform out;
    std::optional<Matching> first;
    enumerate_maximal_matchings_masked(
        g, active,
        [&](const Matching& m) {
            if (!first) {
                first = m;
                out.size = m.size();
                return true;
            }
            if (m.size() != first->size()) {
                out.uniform = false;
                out.first = *first;
                out.second = m;
                return false;
            }
            return true;
        },
        guard);
    return out;
}

}  // namespace

Classification is_equimatchable_oracle(const Graph& g, int guard) {
    Classification out;
    out.tags.bipartite = bipartition(g).has_value();
    std::vector<char> active(g.order(), 1);
    OracleUniform res = oracle_uniform_masked(g, active, guard);
    out.verdict = res.uniform;
    out.tags.equimatchable = res.uniform;
    if (res.uniform)
        out.certificate = {{ClaimClass::equimatchable, true},
                           UniformMaximalSize{res.size}};
    else
        out.certificate = {{ClaimClass::equimatchable, false},
                           TwoMaximalMatchings{res.first, res.second,
                                               std::nullopt, std::nullopt}};
    return out;
}

Classification is_ese_oracle(const Graph& g, int guard) {
    Classification out;
    out.tags.bipartite = bipartition(g).has_value();
    std::vector<char> active(g.order(), 1);
    OracleUniform base = oracle_uniform_masked(g, active, guard);
    if (!base.uniform) {
        out.certificate = {{ClaimClass::ese, false},
                           TwoMaximalMatchings{base.first, base.second,
                                               std::nullopt, std::nullopt}};
        return out;
    }
    for (const auto& [u, v] : g.edges()) {
        Graph h = without_edge(g, u, v);
        OracleUniform res = oracle_uniform_masked(h, active, guard);
        if (!res.uniform) {
            out.certificate = {{ClaimClass::ese, false},
                               TwoMaximalMatchings{res.first, res.second,
                                                   Edge{u, v}, std::nullopt}};
            return out;
        }
    }
    out.verdict = true;
    out.tags.ese = out.tags.equimatchable = true;
    out.certificate = {{ClaimClass::ese, true}, OracleSweep{}};
    return out;
}

Classification is_vse_oracle(const Graph& g, int guard) {
    Classification out;
    out.tags.bipartite = bipartition(g).has_value();
    std::vector<char> active(g.order(), 1);
    OracleUniform base = oracle_uniform_masked(g, active, guard);
    if (!base.uniform) {
        out.certificate = {{ClaimClass::vse, false},
                           TwoMaximalMatchings{base.first, base.second,
                                               std::nullopt, std::nullopt}};
        return out;
    }
    for (int v = 0; v < g.order(); ++v) {
        active[v] = 0;
        OracleUniform res = oracle_uniform_masked(g, active, guard);
        active[v] = 1;
        if (!res.uniform) {
            out.certificate = {{ClaimClass::vse, false},
                               TwoMaximalMatchings{res.first, res.second,
                                                   std::nullopt, v}};
            return out;
        }
    }
    out.verdict = true;
    out.tags.vse = out.tags.equimatchable = true;
    out.certificate = {{ClaimClass::vse, true}, OracleSweep{}};
    return out;
}

// ---------------------------------------------------------------------------
// diagnostics

Classification classify_factor_critical(const Graph& g) {
    Classification out;
    out.tags.bipartite = bipartition(g).has_value();
    if (is_factor_critical(g)) {
        out.verdict = true;
        out.tags.factor_critical = true;
        out.certificate = {{ClaimClass::factor_critical, true},
                           FactorCriticalWitness{}};
        return out;
    }
    int vertex = -1;
    if (g.order() % 2 == 1 && is_connected(g)) vertex = first_non_fc_vertex(g);
    out.certificate = {{ClaimClass::factor_critical, false},
                       NotFactorCritical{vertex}};
    return out;
}

Classification classify_randomly_matchable(const Graph& g) {
    Classification out;
    out.tags.bipartite = bipartition(g).has_value();
    if (is_randomly_matchable(g)) {  // throws on disconnected input
        out.verdict = true;
        out.tags.randomly_matchable = out.tags.equimatchable = true;
        bool complete = is_complete(g);
        out.certificate = {{ClaimClass::randomly_matchable, true},
                           RandomlyMatchableForm{complete, g.order() / 2}};
        return out;
    }
    out.certificate = {{ClaimClass::randomly_matchable, false},
                       NotRandomlyMatchable{}};
    return out;
}

std::vector<Edge> critical_edges(const Graph& g, int guard) {
    if (!is_equimatchable(g, guard).verdict)
        throw std::invalid_argument("critical_edges: graph is not equimatchable");
    std::vector<Edge> out;
    for (const auto& [u, v] : g.edges()) {
        Graph h = without_edge(g, u, v);
        if (!is_equimatchable(h, guard).verdict) out.emplace_back(u, v);
    }
    return out;
}

}  // namespace eqm
