#include "eqm/canonical.hpp"

#include <algorithm>
#include <numeric>

#include "eqm/codec.hpp"
#include "eqm/errors.hpp"

namespace eqm {

namespace {

void check_guard(const Graph& g, const char* op) {
    if (g.order() > canonical_guard)
        throw guard_error(op, g.order(), canonical_guard);
}

// Ordered equitable partition: start from degree classes (ascending), then
// repeatedly split cells by the count vector of neighbors in each cell.
// Cell order is derived only from isomorphism-invariant data, so two
// isomorphic graphs refine to corresponding partitions.
std::vector<std::vector<int>> refine_cells(const Graph& g) {
    int n = g.order();
    std::vector<std::vector<int>> cells;
    {
        std::vector<std::pair<int, int>> by_degree;  // (degree, vertex)
        for (int v = 0; v < n; ++v) by_degree.emplace_back(g.degree(v), v);
        std::sort(by_degree.begin(), by_degree.end());
        for (const auto& [d, v] : by_degree) {
            if (cells.empty() || g.degree(cells.back().front()) != d)
                cells.push_back({});
            cells.back().push_back(v);
        }
    }

    bool changed = true;
    while (changed) {
        changed = false;
        std::vector<int> cell_of(n);
        for (std::size_t c = 0; c < cells.size(); ++c)
            for (int v : cells[c]) cell_of[v] = static_cast<int>(c);

        std::vector<std::vector<int>> next;
        for (const auto& cell : cells) {
            if (cell.size() == 1) {
                next.push_back(cell);
                continue;
            }
            // signature = counts of neighbors per current cell
            std::vector<std::pair<std::vector<int>, int>> keyed;
            for (int v : cell) {
                std::vector<int> sig(cells.size(), 0);
                g.for_neighbors(v, [&](int u) { ++sig[cell_of[u]]; });
                keyed.emplace_back(std::move(sig), v);
            }
            std::sort(keyed.begin(), keyed.end());
            std::vector<int> sub{keyed.front().second};
            for (std::size_t i = 1; i < keyed.size(); ++i) {
                if (keyed[i].first != keyed[i - 1].first) {
                    next.push_back(sub);
                    sub.clear();
                    changed = true;
                }
                sub.push_back(keyed[i].second);
            }
            next.push_back(sub);
        }
        cells = std::move(next);
    }
    return cells;
}

std::uint64_t code_of_permutation(const Graph& g, const std::vector<int>& p) {
    int n = g.order();
    std::uint64_t code = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i)
            code = (code << 1) | (g.has_edge(p[i], p[j]) ? 1u : 0u);
    return code;
}

struct CanonResult {
    std::uint64_t code;
    std::vector<int> labeling;
};

CanonResult canonize(const Graph& g) {
    int n = g.order();
    if (n == 0) return {0, {}};
    auto cells = refine_cells(g);
    for (auto& cell : cells) std::sort(cell.begin(), cell.end());

    std::vector<int> p;
    auto rebuild = [&]() {
        p.clear();
        for (const auto& cell : cells) p.insert(p.end(), cell.begin(), cell.end());
    };
    rebuild();

    // Bits are packed MSB-first in column-major (j,i<j) order; shift left so
    // codes of different n compare like their graph6 words would.
    std::uint64_t best = code_of_permutation(g, p);
    std::vector<int> best_p = p;
    for (;;) {
        int k = static_cast<int>(cells.size()) - 1;
        while (k >= 0 && !std::next_permutation(cells[k].begin(), cells[k].end()))
            --k;
        if (k < 0) break;
        rebuild();
        std::uint64_t code = code_of_permutation(g, p);
        if (code < best) {
            best = code;
            best_p = p;
        }
    }
    return {best, std::move(best_p)};
}

}  // namespace

std::uint64_t labeled_code(const Graph& g) {
    int n = g.order();
    std::vector<int> id(n);
    std::iota(id.begin(), id.end(), 0);
    return code_of_permutation(g, id);
}

std::uint64_t canonical_code(const Graph& g) {
    check_guard(g, "canonical_code");
    return canonize(g).code;
}

std::vector<int> canonical_labeling(const Graph& g) {
    check_guard(g, "canonical_labeling");
    return canonize(g).labeling;
}

Graph graph_from_code(int n, std::uint64_t code) {
    Graph g(n);
    int nbits = n * (n - 1) / 2;
    int bit = nbits - 1;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i, --bit)
            if ((code >> bit) & 1u) g.add_edge(i, j);
    return g;
}

Graph canonical_graph(const Graph& g) {
    check_guard(g, "canonical_graph");
    auto res = canonize(g);
    return graph_from_code(g.order(), res.code);
}

std::string canonical_form(const Graph& g) {
    check_guard(g, "canonical_form");
    return encode_graph6(canonical_graph(g));
}

bool is_isomorphic(const Graph& a, const Graph& b) {
    if (a.order() != b.order() || a.edge_count() != b.edge_count()) return false;
    check_guard(a, "is_isomorphic");
    return canonize(a).code == canonize(b).code;
}

std::optional<std::vector<int>> isomorphism(const Graph& a, const Graph& b) {
    if (a.order() != b.order() || a.edge_count() != b.edge_count())
        return std::nullopt;
    check_guard(a, "isomorphism");
    auto ra = canonize(a);
    auto rb = canonize(b);
    if (ra.code != rb.code) return std::nullopt;
    std::vector<int> map(a.order());
    for (int pos = 0; pos < a.order(); ++pos)
        map[ra.labeling[pos]] = rb.labeling[pos];
    return map;
}

}  // namespace eqm
