#include "eqm/certificate.hpp"

#include <algorithm>

#include "json.hpp"

#include "eqm/errors.hpp"
#include "eqm/decomposition.hpp"
#include "eqm/families.hpp"

namespace eqm {

using nlohmann::json;

namespace {

// ---------------------------------------------------------------------------
// verification helpers

bool valid_vertex(const Graph& g, int v) { return v >= 0 && v < g.order(); }

bool valid_distinct(const Graph& g, const std::vector<int>& vs) {
    std::vector<int> sorted = vs;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        return false;
    return sorted.empty() || (sorted.front() >= 0 && sorted.back() < g.order());
}

bool valid_odd_walk(const Graph& g, const std::vector<int>& walk) {
    if (walk.size() < 4) return false;
    if (walk.front() != walk.back()) return false;
    if ((walk.size() - 1) % 2 == 0) return false;
    for (std::size_t i = 0; i + 1 < walk.size(); ++i) {
        if (!valid_vertex(g, walk[i]) || !valid_vertex(g, walk[i + 1])) return false;
        if (!g.has_edge(walk[i], walk[i + 1])) return false;
    }
    return true;
}

// matching avoids `off` (-1: nobody) and covers every other vertex
bool perfect_off(const Graph& g, const Matching& m, const std::vector<int>& off) {
    if (!is_matching_of(g, m)) return false;
    std::vector<char> covered = m.cover(g.order());
    std::vector<char> excluded(g.order(), 0);
    for (int v : off) {
        if (!valid_vertex(g, v)) return false;
        excluded[v] = 1;
    }
    for (int v = 0; v < g.order(); ++v) {
        if (excluded[v] && covered[v]) return false;
        if (!excluded[v] && !covered[v]) return false;
    }
    return true;
}

bool all_maximal_share_size(const Graph& g, const std::vector<char>& active,
                            int expected, int guard) {
    bool uniform = true;
    enumerate_maximal_matchings_masked(
        g, active,
        [&](const Matching& m) {
            if (expected >= 0 && m.size() != expected) {
                uniform = false;
                return false;
            }
            if (expected < 0) expected = m.size();
            return true;
        },
        guard);
    return uniform;
}

bool uniform_sizes(const Graph& g, const std::vector<char>& active, int guard) {
    int first = -1;
    bool uniform = true;
    enumerate_maximal_matchings_masked(
        g, active,
        [&](const Matching& m) {
            if (first == -1) {
                first = m.size();
                return true;
            }
            if (m.size() != first) {
                uniform = false;
                return false;
            }
            return true;
        },
        guard);
    return uniform;
}

// bipartite side containing u must be no larger than the other side
bool in_small_side(const Bipartition& parts, int u) {
    bool in_u = std::find(parts.u.begin(), parts.u.end(), u) != parts.u.end();
    bool in_w = std::find(parts.w.begin(), parts.w.end(), u) != parts.w.end();
    if (in_u) return parts.u.size() <= parts.w.size();
    if (in_w) return parts.w.size() <= parts.u.size();
    return false;
}

bool saturates_all(const Matching& m, const std::vector<int>& vs) {
    for (int v : vs)
        if (!m.saturates(v)) return false;
    return true;
}

// Hall pairs covering exactly the side `side`; every S is a nonempty subset
// of N(u) with |N(S)| <= |S| - 1 + slack.
bool check_hall_pairs(const Graph& g, const std::vector<HallPair>& pairs,
                      const std::vector<int>& side, int slack) {
    std::vector<int> us;
    for (const auto& p : pairs) us.push_back(p.u);
    std::sort(us.begin(), us.end());
    std::vector<int> side_sorted = side;
    std::sort(side_sorted.begin(), side_sorted.end());
    if (us != side_sorted) return false;
    for (const auto& p : pairs) {
        if (p.s.empty() || !valid_distinct(g, p.s)) return false;
        for (int v : p.s)
            if (!g.has_edge(p.u, v)) return false;  // S a subset of N(u)
        std::vector<int> nbhd = set_neighborhood(g, p.s);
        if (static_cast<int>(nbhd.size()) >
            static_cast<int>(p.s.size()) - 1 + slack)
            return false;
    }
    return true;
}

bool verify_bipartite_ese_payload(const Graph& g, const BipartiteEseWitness& w) {
    if (!is_connected(g)) return false;
    auto parts = bipartition(g);
    if (!parts) return false;
    if (parts->u.size() >= parts->w.size()) return false;  // needs |U| < |W|
    return check_hall_pairs(g, w.pairs, parts->u, 0);
}

struct Verifier {
    const Graph& g;
    const Claim& claim;
    int guard;

    bool cls_is(ClaimClass c) const { return claim.cls == c; }
    bool positive() const { return claim.verdict; }

    bool operator()(const TwoMaximalMatchings& c) const {
        if (positive()) return false;
        if (c.removed_edge && c.removed_vertex) return false;
        if (c.removed_edge && !cls_is(ClaimClass::ese)) return false;
        if (c.removed_vertex && !cls_is(ClaimClass::vse)) return false;
        if (!c.removed_edge && !c.removed_vertex &&
            !(cls_is(ClaimClass::equimatchable) || cls_is(ClaimClass::ese) ||
              cls_is(ClaimClass::vse)))
            return false;
        if (c.m1.size() == c.m2.size()) return false;

        Graph h = g;
        std::vector<char> active(g.order(), 1);
        if (c.removed_edge) {
            auto [u, v] = *c.removed_edge;
            if (!valid_vertex(g, u) || !valid_vertex(g, v) || !g.has_edge(u, v))
                return false;
            h.remove_edge(u, v);
        }
        if (c.removed_vertex) {
            if (!valid_vertex(g, *c.removed_vertex)) return false;
            active[*c.removed_vertex] = 0;
        }
        try {
            return is_maximal_masked(h, c.m1, active) &&
                   is_maximal_masked(h, c.m2, active);
        } catch (const std::invalid_argument&) {
            return false;
        }
    }

    bool operator()(const FcTriple& c) const {
        if (positive()) return false;
        if (cls_is(ClaimClass::equimatchable)) {
            if (!c.independent) return false;
        } else if (!cls_is(ClaimClass::ese)) {
            return false;
        }
        std::vector<int> t(c.triple.begin(), c.triple.end());
        if (!valid_distinct(g, t) || t.size() != 3) return false;
        int inside = 0;
        for (int i = 0; i < 3; ++i)
            for (int j = i + 1; j < 3; ++j)
                if (g.has_edge(c.triple[i], c.triple[j])) ++inside;
        if (c.independent ? inside != 0 : inside != 1) return false;
        if (!perfect_off(g, c.pm, t)) return false;
        return is_factor_critical(g);
    }

    bool operator()(const BipartiteRefutation& c) const {
        if (positive()) return false;
        if (!cls_is(ClaimClass::ese) && !cls_is(ClaimClass::vse)) return false;
        if (!valid_vertex(g, c.u) || !is_connected(g) || g.order() < 3)
            return false;
        auto parts = bipartition(g);
        if (!parts) return false;
        if (cls_is(ClaimClass::vse) && complete_bipartite_parts(g)) return false;
        if (!in_small_side(*parts, c.u)) return false;
        if (!is_matching_of(g, c.saturating)) return false;
        return saturates_all(c.saturating, g.neighbors(c.u));
    }

    bool operator()(const WeakVertexWitness& c) const {
        if (positive() || !cls_is(ClaimClass::equimatchable)) return false;
        if (!valid_vertex(g, c.v) || !is_connected(g)) return false;
        auto parts = bipartition(g);
        if (!parts || !in_small_side(*parts, c.v)) return false;
        if (!is_matching_of(g, c.saturating)) return false;
        if (c.saturating.saturates(c.v)) return false;
        return saturates_all(c.saturating, g.neighbors(c.v));
    }

    bool operator()(const NotFcNotBipartite& c) const {
        if (positive() || !cls_is(ClaimClass::ese)) return false;
        if (!is_connected(g) || g.order() < 3) return false;
        if (!valid_odd_walk(g, c.odd_walk)) return false;
        if (!valid_vertex(g, c.vertex)) return false;
        std::vector<char> active(g.order(), 1);
        active[c.vertex] = 0;
        return !has_perfect_matching_masked(g, active);
    }

    bool operator()(const NotCompleteNotBipartite& c) const {
        if (positive() || !cls_is(ClaimClass::vse)) return false;
        if (!is_connected(g)) return false;
        auto [u, v] = c.nonedge;
        if (!valid_vertex(g, u) || !valid_vertex(g, v) || u == v) return false;
        if (g.has_edge(u, v)) return false;
        return valid_odd_walk(g, c.odd_walk);
    }

    bool operator()(const PerfectMatchingRefutation& c) const {
        if (positive()) return false;
        if (!perfect_off(g, c.pm, {})) return false;
        if (cls_is(ClaimClass::ese)) return is_connected(g) && g.order() >= 3;
        if (cls_is(ClaimClass::equimatchable))
            return is_connected(g) && !is_complete(g) &&
                   !complete_bipartite_parts(g);
        return false;
    }

    bool operator()(const NotFactorCritical& c) const {
        if (positive() || !cls_is(ClaimClass::factor_critical)) return false;
        if (c.vertex == -1) return g.order() % 2 == 0 || !is_connected(g);
        if (!valid_vertex(g, c.vertex)) return false;
        std::vector<char> active(g.order(), 1);
        active[c.vertex] = 0;
        return !has_perfect_matching_masked(g, active);
    }

    bool operator()(const NotRandomlyMatchable&) const {
        if (positive() || !cls_is(ClaimClass::randomly_matchable)) return false;
        return is_connected(g) && !is_randomly_matchable(g);
    }

    bool operator()(const TrivialOrder&) const {
        if (!positive()) return false;
        if (!(cls_is(ClaimClass::equimatchable) || cls_is(ClaimClass::ese) ||
              cls_is(ClaimClass::vse)))
            return false;
        for (const auto& comp : connected_components(g))
            if (comp.size() > 2) return false;
        return true;
    }

    bool operator()(const OddClique& c) const {
        if (!positive()) return false;
        if (!cls_is(ClaimClass::ese) && !cls_is(ClaimClass::equimatchable))
            return false;
        return c.r >= 0 && g.order() == 2 * c.r + 1 && is_complete(g);
    }

    bool operator()(const G1Witness& c) const {
        if (!positive()) return false;
        if (!cls_is(ClaimClass::ese) && !cls_is(ClaimClass::equimatchable))
            return false;
        int n = g.order();
        if (n < 7 || n % 2 == 0) return false;
        if (c.removed_matching.empty()) return false;
        Matching m{std::vector<Edge>(c.removed_matching)};
        std::vector<char> seen(n, 0);
        for (const auto& [u, v] : m.edges) {
            if (!valid_vertex(g, u) || !valid_vertex(g, v) || u == v) return false;
            if (seen[u] || seen[v]) return false;
            seen[u] = seen[v] = 1;
        }
        return complement(g).edges() == m.edges;
    }

    bool operator()(const G2Witness& c) const {
        if (!positive()) return false;
        if (!cls_is(ClaimClass::ese) && !cls_is(ClaimClass::equimatchable))
            return false;
        int n = g.order();
        if (n < 7 || n % 2 == 0) return false;
        if (c.s.size() < 3 || !valid_distinct(g, c.s)) return false;
        std::vector<char> in_s(n, 0);
        for (int v : c.s) in_s[v] = 1;
        for (std::size_t i = 0; i < c.s.size(); ++i)
            for (std::size_t j = i + 1; j < c.s.size(); ++j)
                if (g.has_edge(c.s[i], c.s[j])) return false;  // independent
        for (int v : c.s)
            for (int t = 0; t < n; ++t)
                if (!in_s[t] && !g.has_edge(v, t)) return false;  // complete to rest
        std::vector<char> rest(n, 1);
        for (int v : c.s) rest[v] = 0;
        if (matching_number_masked(g, rest) != 1) return false;
        return is_factor_critical(g);
    }

    bool operator()(const SmallCatalogMatch& c) const {
        if (!positive()) return false;
        if (!cls_is(ClaimClass::ese) && !cls_is(ClaimClass::equimatchable))
            return false;
        const auto& catalog = small_catalog();
        if (c.index < 0 || c.index >= static_cast<int>(catalog.size()))
            return false;
        const Graph& target = catalog[c.index];
        int n = g.order();
        if (target.order() != n || static_cast<int>(c.mapping.size()) != n)
            return false;
        std::vector<char> hit(n, 0);
        for (int image : c.mapping) {
            if (image < 0 || image >= n || hit[image]) return false;
            hit[image] = 1;
        }
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (g.has_edge(u, v) != target.has_edge(c.mapping[u], c.mapping[v]))
                    return false;
        return true;
    }

    bool operator()(const BipartiteEseWitness& c) const {
        if (!positive()) return false;
        if (!cls_is(ClaimClass::ese) && !cls_is(ClaimClass::equimatchable))
            return false;
        return verify_bipartite_ese_payload(g, c);
    }

    bool operator()(const BipartiteStrongWitness& c) const {
        if (!positive() || !cls_is(ClaimClass::equimatchable)) return false;
        if (!is_connected(g)) return false;
        auto parts = bipartition(g);
        if (!parts) return false;
        if (check_hall_pairs(g, c.pairs, parts->u, 1)) return true;
        // equal sides: either side can serve as U
        return parts->u.size() == parts->w.size() &&
               check_hall_pairs(g, c.pairs, parts->w, 1);
    }

    bool operator()(const VseForm& c) const {
        if (!positive() || !cls_is(ClaimClass::vse)) return false;
        switch (c.shape) {
            case VseShape::complete:
                return is_complete(g);
            case VseShape::complete_bipartite:
                return complete_bipartite_parts(g).has_value();
            case VseShape::bipartite_ese:
                return c.witness && verify_bipartite_ese_payload(g, *c.witness);
        }
        return false;
    }

    bool operator()(const RandomlyMatchableForm& c) const {
        if (!positive()) return false;
        if (!cls_is(ClaimClass::equimatchable) &&
            !cls_is(ClaimClass::randomly_matchable))
            return false;
        if (c.complete)
            return c.r >= 1 && g.order() == 2 * c.r && is_complete(g);
        auto parts = complete_bipartite_parts(g);
        return c.r >= 1 && parts &&
               static_cast<int>(parts->u.size()) == c.r &&
               static_cast<int>(parts->w.size()) == c.r;
    }

    bool operator()(const FcNoTriple&) const {
        if (!positive() || !cls_is(ClaimClass::equimatchable)) return false;
        if (!is_factor_critical(g)) return false;
        int n = g.order();
        std::vector<char> active(n, 1);
        for (int a = 0; a < n; ++a)
            for (int b = a + 1; b < n; ++b) {
                if (g.has_edge(a, b)) continue;
                for (int c = b + 1; c < n; ++c) {
                    if (g.has_edge(a, c) || g.has_edge(b, c)) continue;
                    active[a] = active[b] = active[c] = 0;
                    bool pm = has_perfect_matching_masked(g, active);
                    active[a] = active[b] = active[c] = 1;
                    if (pm) return false;
                }
            }
        return true;
    }

    bool operator()(const FactorCriticalWitness&) const {
        if (!positive() || !cls_is(ClaimClass::factor_critical)) return false;
        return is_factor_critical(g);
    }

    bool operator()(const UniformMaximalSize& c) const {
        if (!positive() || !cls_is(ClaimClass::equimatchable)) return false;
        std::vector<char> active(g.order(), 1);
        return all_maximal_share_size(g, active, c.size, guard);
    }

    bool operator()(const OracleSweep&) const {
        if (!positive()) return false;
        std::vector<char> active(g.order(), 1);
        if (cls_is(ClaimClass::ese)) {
            if (!uniform_sizes(g, active, guard)) return false;
            for (const auto& [u, v] : g.edges()) {
                Graph h = without_edge(g, u, v);
                if (!uniform_sizes(h, active, guard)) return false;
            }
            return true;
        }
        if (cls_is(ClaimClass::vse)) {
            if (!uniform_sizes(g, active, guard)) return false;
            for (int v = 0; v < g.order(); ++v) {
                active[v] = 0;
                bool ok = uniform_sizes(g, active, guard);
                active[v] = 1;
                if (!ok) return false;
            }
            return true;
        }
        return false;
    }

    bool operator()(const CompositeCertificate& c) const {
        if (!(cls_is(ClaimClass::equimatchable) || cls_is(ClaimClass::ese) ||
              cls_is(ClaimClass::vse)))
            return false;
        if (c.parts.empty()) return false;
        std::vector<char> used(g.order(), 0);
        for (const auto& part : c.parts) {
            if (!part.certificate) return false;
            if (part.vertices.empty() || !valid_distinct(g, part.vertices))
                return false;
            for (int v : part.vertices) {
                if (used[v]) return false;
                used[v] = 1;
            }
            // no edges may leave the part, so it is a union of components
            std::vector<char> inside(g.order(), 0);
            for (int v : part.vertices) inside[v] = 1;
            for (int v : part.vertices) {
                bool leak = false;
                g.for_neighbors(v, [&](int u) {
                    if (!inside[u]) leak = true;
                });
                if (leak) return false;
            }
            if (part.certificate->claim.cls != claim.cls) return false;
            if (part.certificate->claim.verdict != claim.verdict) return false;
            InducedSubgraph local = induced_subgraph(g, part.vertices);
            if (!verify_certificate(local.graph, *part.certificate, guard))
                return false;
        }
        if (positive()) {
            // positive verdicts must certify every component
            for (int v = 0; v < g.order(); ++v)
                if (!used[v]) return false;
        }
        return true;
    }
};

}  // namespace

bool verify_certificate(const Graph& g, const Certificate& c, int guard) {
    return std::visit(Verifier{g, c.claim, guard}, c.body);
}

// ---------------------------------------------------------------------------
// JSON

namespace {

json edge_to_json(const Edge& e) { return json::array({e.first, e.second}); }

json edges_to_json(const std::vector<Edge>& es) {
    json a = json::array();
    for (const auto& e : es) a.push_back(edge_to_json(e));
    return a;
}

Edge edge_from_json(const json& j) {
    if (!j.is_array() || j.size() != 2)
        throw parse_error("certificate: bad edge", 0);
    return {j[0].get<int>(), j[1].get<int>()};
}

std::vector<Edge> edges_from_json(const json& j) {
    std::vector<Edge> out;
    for (const auto& item : j) out.push_back(edge_from_json(item));
    return out;
}

json matching_to_json(const Matching& m) { return edges_to_json(m.edges); }

Matching matching_from_json(const json& j) {
    return Matching{edges_from_json(j)};
}

json pairs_to_json(const std::vector<HallPair>& pairs) {
    json a = json::array();
    for (const auto& p : pairs) a.push_back({{"u", p.u}, {"s", p.s}});
    return a;
}

std::vector<HallPair> pairs_from_json(const json& j) {
    std::vector<HallPair> out;
    for (const auto& item : j)
        out.push_back({item.at("u").get<int>(),
                       item.at("s").get<std::vector<int>>()});
    return out;
}

struct JsonWriter {
    json& j;

    void operator()(const TwoMaximalMatchings& c) const {
        j["kind"] = "two_maximal_matchings";
        j["m1"] = matching_to_json(c.m1);
        j["m2"] = matching_to_json(c.m2);
        if (c.removed_edge) j["removed_edge"] = edge_to_json(*c.removed_edge);
        if (c.removed_vertex) j["removed_vertex"] = *c.removed_vertex;
    }
    void operator()(const FcTriple& c) const {
        j["kind"] = "fc_triple";
        j["triple"] = {c.triple[0], c.triple[1], c.triple[2]};
        j["perfect_matching"] = matching_to_json(c.pm);
        j["independent"] = c.independent;
    }
    void operator()(const BipartiteRefutation& c) const {
        j["kind"] = "bipartite_refutation";
        j["u"] = c.u;
        j["saturating"] = matching_to_json(c.saturating);
    }
    void operator()(const WeakVertexWitness& c) const {
        j["kind"] = "weak_vertex";
        j["v"] = c.v;
        j["saturating"] = matching_to_json(c.saturating);
    }
    void operator()(const NotFcNotBipartite& c) const {
        j["kind"] = "not_fc_not_bipartite";
        j["vertex"] = c.vertex;
        j["odd_walk"] = c.odd_walk;
    }
    void operator()(const NotCompleteNotBipartite& c) const {
        j["kind"] = "not_complete_not_bipartite";
        j["nonedge"] = edge_to_json(c.nonedge);
        j["odd_walk"] = c.odd_walk;
    }
    void operator()(const PerfectMatchingRefutation& c) const {
        j["kind"] = "perfect_matching_refutation";
        j["perfect_matching"] = matching_to_json(c.pm);
    }
    void operator()(const NotFactorCritical& c) const {
        j["kind"] = "not_factor_critical";
        j["vertex"] = c.vertex;
    }
    void operator()(const NotRandomlyMatchable&) const {
        j["kind"] = "not_randomly_matchable";
    }
    void operator()(const TrivialOrder&) const { j["kind"] = "trivial_order"; }
    void operator()(const OddClique& c) const {
        j["kind"] = "odd_clique";
        j["r"] = c.r;
    }
    void operator()(const G1Witness& c) const {
        j["kind"] = "g1_witness";
        j["removed_matching"] = edges_to_json(c.removed_matching);
    }
    void operator()(const G2Witness& c) const {
        j["kind"] = "g2_witness";
        j["s"] = c.s;
    }
    void operator()(const SmallCatalogMatch& c) const {
        j["kind"] = "small_catalog";
        j["index"] = c.index;
        j["mapping"] = c.mapping;
    }
    void operator()(const BipartiteEseWitness& c) const {
        j["kind"] = "bipartite_ese";
        j["pairs"] = pairs_to_json(c.pairs);
    }
    void operator()(const BipartiteStrongWitness& c) const {
        j["kind"] = "bipartite_strong";
        j["pairs"] = pairs_to_json(c.pairs);
    }
    void operator()(const VseForm& c) const {
        j["kind"] = "vse_form";
        switch (c.shape) {
            case VseShape::complete: j["form"] = "complete"; break;
            case VseShape::complete_bipartite:
                j["form"] = "complete_bipartite";
                break;
            case VseShape::bipartite_ese: j["form"] = "bipartite_ese"; break;
        }
        if (c.witness) j["witness"] = {{"pairs", pairs_to_json(c.witness->pairs)}};
    }
    void operator()(const RandomlyMatchableForm& c) const {
        j["kind"] = "randomly_matchable";
        j["form"] = c.complete ? "complete" : "complete_bipartite";
        j["r"] = c.r;
    }
    void operator()(const FcNoTriple&) const { j["kind"] = "fc_no_triple"; }
    void operator()(const FactorCriticalWitness&) const {
        j["kind"] = "factor_critical";
    }
    void operator()(const UniformMaximalSize& c) const {
        j["kind"] = "uniform_maximal_size";
        j["size"] = c.size;
    }
    void operator()(const OracleSweep&) const { j["kind"] = "oracle_sweep"; }
    void operator()(const CompositeCertificate& c) const {
        j["kind"] = "composite";
        json parts = json::array();
        for (const auto& part : c.parts) {
            json pj;
            pj["vertices"] = part.vertices;
            pj["certificate"] =
                json::parse(certificate_to_json(*part.certificate));
            parts.push_back(pj);
        }
        j["parts"] = parts;
    }
};

json claim_to_json(const Claim& c) {
    return {{"class", claim_class_name(c.cls)}, {"verdict", c.verdict}};
}

ClaimClass claim_class_from_name(const std::string& s) {
    if (s == "equimatchable") return ClaimClass::equimatchable;
    if (s == "ese") return ClaimClass::ese;
    if (s == "vse") return ClaimClass::vse;
    if (s == "factor_critical") return ClaimClass::factor_critical;
    if (s == "randomly_matchable") return ClaimClass::randomly_matchable;
    throw parse_error("certificate: unknown claim class '" + s + "'", 0);
}

CertificateBody body_from_json(const json& j) {
    const std::string kind = j.at("kind").get<std::string>();
    if (kind == "two_maximal_matchings") {
        TwoMaximalMatchings c;
        c.m1 = matching_from_json(j.at("m1"));
        c.m2 = matching_from_json(j.at("m2"));
        if (j.contains("removed_edge"))
            c.removed_edge = edge_from_json(j.at("removed_edge"));
        if (j.contains("removed_vertex"))
            c.removed_vertex = j.at("removed_vertex").get<int>();
        return c;
    }
    if (kind == "fc_triple") {
        FcTriple c{};
        auto t = j.at("triple");
        c.triple = {t.at(0).get<int>(), t.at(1).get<int>(), t.at(2).get<int>()};
        c.pm = matching_from_json(j.at("perfect_matching"));
        c.independent = j.at("independent").get<bool>();
        return c;
    }
    if (kind == "bipartite_refutation")
        return BipartiteRefutation{j.at("u").get<int>(),
                                   matching_from_json(j.at("saturating"))};
    if (kind == "weak_vertex")
        return WeakVertexWitness{j.at("v").get<int>(),
                                 matching_from_json(j.at("saturating"))};
    if (kind == "not_fc_not_bipartite")
        return NotFcNotBipartite{j.at("vertex").get<int>(),
                                 j.at("odd_walk").get<std::vector<int>>()};
    if (kind == "not_complete_not_bipartite")
        return NotCompleteNotBipartite{edge_from_json(j.at("nonedge")),
                                       j.at("odd_walk").get<std::vector<int>>()};
    if (kind == "perfect_matching_refutation")
        return PerfectMatchingRefutation{
            matching_from_json(j.at("perfect_matching"))};
    if (kind == "not_factor_critical")
        return NotFactorCritical{j.at("vertex").get<int>()};
    if (kind == "not_randomly_matchable") return NotRandomlyMatchable{};
    if (kind == "trivial_order") return TrivialOrder{};
    if (kind == "odd_clique") return OddClique{j.at("r").get<int>()};
    if (kind == "g1_witness")
        return G1Witness{edges_from_json(j.at("removed_matching"))};
    if (kind == "g2_witness")
        return G2Witness{j.at("s").get<std::vector<int>>()};
    if (kind == "small_catalog")
        return SmallCatalogMatch{j.at("index").get<int>(),
                                 j.at("mapping").get<std::vector<int>>()};
    if (kind == "bipartite_ese")
        return BipartiteEseWitness{pairs_from_json(j.at("pairs"))};
    if (kind == "bipartite_strong")
        return BipartiteStrongWitness{pairs_from_json(j.at("pairs"))};
    if (kind == "vse_form") {
        VseForm c;
        const std::string form = j.at("form").get<std::string>();
        if (form == "complete")
            c.shape = VseShape::complete;
        else if (form == "complete_bipartite")
            c.shape = VseShape::complete_bipartite;
        else if (form == "bipartite_ese")
            c.shape = VseShape::bipartite_ese;
        else
            throw parse_error("certificate: unknown vse form '" + form + "'", 0);
        if (j.contains("witness"))
            c.witness =
                BipartiteEseWitness{pairs_from_json(j.at("witness").at("pairs"))};
        return c;
    }
    if (kind == "randomly_matchable") {
        const std::string form = j.at("form").get<std::string>();
        return RandomlyMatchableForm{form == "complete", j.at("r").get<int>()};
    }
    if (kind == "fc_no_triple") return FcNoTriple{};
    if (kind == "factor_critical") return FactorCriticalWitness{};
    if (kind == "uniform_maximal_size")
        return UniformMaximalSize{j.at("size").get<int>()};
    if (kind == "oracle_sweep") return OracleSweep{};
    if (kind == "composite") {
        CompositeCertificate c;
        for (const auto& pj : j.at("parts")) {
            CompositePart part;
            part.vertices = pj.at("vertices").get<std::vector<int>>();
            part.certificate = std::make_shared<Certificate>(
                certificate_from_json(pj.at("certificate").dump()));
            c.parts.push_back(std::move(part));
        }
        return c;
    }
    throw parse_error("certificate: unknown kind '" + kind + "'", 0);
}

}  // namespace

std::string claim_class_name(ClaimClass c) {
    switch (c) {
        case ClaimClass::equimatchable: return "equimatchable";
        case ClaimClass::ese: return "ese";
        case ClaimClass::vse: return "vse";
        case ClaimClass::factor_critical: return "factor_critical";
        case ClaimClass::randomly_matchable: return "randomly_matchable";
    }
    return "?";
}

std::string certificate_kind(const Certificate& c) {
    json j;
    std::visit(JsonWriter{j}, c.body);
    return j["kind"].get<std::string>();
}

std::string certificate_to_json(const Certificate& c, bool pretty) {
    json j;
    j["claim"] = claim_to_json(c.claim);
    std::visit(JsonWriter{j}, c.body);
    return pretty ? j.dump(2) : j.dump();
}

Certificate certificate_from_json(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        throw parse_error(std::string("certificate: ") + e.what(), 0);
    }
    try {
        Claim claim{claim_class_from_name(
                        j.at("claim").at("class").get<std::string>()),
                    j.at("claim").at("verdict").get<bool>()};
        return Certificate{claim, body_from_json(j)};
    } catch (const json::exception& e) {
        throw parse_error(std::string("certificate: ") + e.what(), 0);
    }
}

}  // namespace eqm
