#pragma once

#include <array>
#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "eqm/graph.hpp"
#include "eqm/matching.hpp"

namespace eqm {

// Every recognizer verdict ships with a certificate that verify_certificate
// can replay against the input graph using only matching primitives and the
// paper's characterizations - never the recognizer that produced it.

enum class ClaimClass {
    equimatchable,
    ese,
    vse,
    factor_critical,
    randomly_matchable,
};

struct Claim {
    ClaimClass cls;
    bool verdict;
    bool operator==(const Claim&) const = default;
};

struct Certificate;

// --- refutations ---

// Two maximal matchings of different sizes, of g itself or of g minus the
// named edge/vertex (the ESE/VSE stability refutations).
struct TwoMaximalMatchings {
    Matching m1, m2;
    std::optional<Edge> removed_edge;
    std::optional<int> removed_vertex;
};

// Factor-critical graph plus a 3-vertex set (independent, or inducing one
// edge = complement of P3) whose removal leaves a perfect matching.
struct FcTriple {
    std::array<int, 3> triple;
    Matching pm;
    bool independent;  // false: the triple induces exactly one edge
};

// Bipartite, u in the small side, a matching of g saturating N(u).
struct BipartiteRefutation {
    int u;
    Matching saturating;
};

// Bipartite, v in the small side, a matching of g - v saturating N(v):
// v is weak, so g is not equimatchable.
struct WeakVertexWitness {
    int v;
    Matching saturating;
};

// Connected, odd closed walk (not bipartite), g - vertex has no perfect
// matching (not factor-critical): not ESE for n >= 3.
struct NotFcNotBipartite {
    int vertex;
    std::vector<int> odd_walk;
};

// Connected, a missing edge and an odd closed walk: not VSE.
struct NotCompleteNotBipartite {
    Edge nonedge;
    std::vector<int> odd_walk;
};

// A perfect matching. Refutes ESE directly (connected, n >= 3); refutes
// equimatchability when the graph is neither complete nor complete
// bipartite (not randomly matchable).
struct PerfectMatchingRefutation {
    Matching pm;
};

struct NotFactorCritical {
    int vertex;  // -1: wrong parity or disconnected
};

struct NotRandomlyMatchable {};

// --- positive witnesses ---

struct TrivialOrder {};  // every component has at most 2 vertices

struct OddClique {
    int r;  // g = K_{2r+1}
};

struct G1Witness {
    std::vector<Edge> removed_matching;  // g = K_{2r+1} minus this matching
};

struct G2Witness {
    std::vector<int> s;  // independent, complete to the rest, nu(g \ S) = 1
};

struct SmallCatalogMatch {
    int index;                 // into small_catalog()
    std::vector<int> mapping;  // mapping[v of g] = vertex of the catalog graph
};

// Per-u Hall violator: S is a nonempty subset of N(u). In the ESE witness
// |N(S)| <= |S| - 1 (square-strong); in the equimatchability witness
// |N(S)| <= |S| (strong).
struct HallPair {
    int u;
    std::vector<int> s;
};

struct BipartiteEseWitness {
    std::vector<HallPair> pairs;
};

struct BipartiteStrongWitness {
    std::vector<HallPair> pairs;
};

enum class VseShape { complete, complete_bipartite, bipartite_ese };

struct VseForm {
    VseShape shape;
    std::optional<BipartiteEseWitness> witness;  // for bipartite_ese
};

struct RandomlyMatchableForm {
    bool complete;  // true: K_{2r}; false: K_{r,r}
    int r;
};

// Factor-critical and no independent 3-set leaves a perfect matching
// (replayed by the verifier).
struct FcNoTriple {};

struct FactorCriticalWitness {};

// Oracle outputs: all maximal matchings share this size.
struct UniformMaximalSize {
    int size;
};

// Oracle stability sweep (ese: every edge removal; vse: every vertex
// removal) replayed by the verifier, guard permitting.
struct OracleSweep {};

// Per-component certificates for disconnected graphs. Each part lists its
// vertices (no edges may leave a part) and a certificate expressed in local
// indices 0..|part|-1 matching the listed order.
struct CompositePart {
    std::vector<int> vertices;
    std::shared_ptr<const Certificate> certificate;
};

struct CompositeCertificate {
    std::vector<CompositePart> parts;
};

using CertificateBody =
    std::variant<TwoMaximalMatchings, FcTriple, BipartiteRefutation,
                 WeakVertexWitness, NotFcNotBipartite, NotCompleteNotBipartite,
                 PerfectMatchingRefutation, NotFactorCritical,
                 NotRandomlyMatchable, TrivialOrder, OddClique, G1Witness,
                 G2Witness, SmallCatalogMatch, BipartiteEseWitness,
                 BipartiteStrongWitness, VseForm, RandomlyMatchableForm,
                 FcNoTriple, FactorCriticalWitness, UniformMaximalSize,
                 OracleSweep, CompositeCertificate>;

struct Certificate {
    Claim claim;
    CertificateBody body;
};

std::string certificate_kind(const Certificate& c);

// Replays the certificate against g. True iff the payload holds and entails
// the claim. Oracle-replay kinds obey `guard`.
bool verify_certificate(const Graph& g, const Certificate& c,
                        int guard = default_oracle_guard);

// Stable JSON schema (documented in the README).
std::string certificate_to_json(const Certificate& c, bool pretty = false);
Certificate certificate_from_json(const std::string& text);

std::string claim_class_name(ClaimClass c);

}  // namespace eqm
