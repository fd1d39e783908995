#include "eqm/codec.hpp"

#include <cctype>
#include <sstream>
#include <string>

#include "eqm/errors.hpp"

namespace eqm {

namespace {

constexpr int g6_bias = 63;
constexpr int g6_max_char = 126;
// Beyond this the quadratic bit matrix stops being a sane in-memory format.
constexpr long g6_max_order = 1 << 20;

int data_char(std::string_view text, std::size_t pos) {
    if (pos >= text.size())
        throw parse_error("graph6: truncated input", pos);
    unsigned char c = static_cast<unsigned char>(text[pos]);
    if (c < g6_bias || c > g6_max_char)
        throw parse_error("graph6: byte out of printable range", pos);
    return c - g6_bias;
}

}  // namespace

Graph decode_graph6(std::string_view text) {
    // Optional ">>graph6<<" header used by some tools.
    std::size_t pos = 0;
    if (text.substr(0, 10) == ">>graph6<<") pos = 10;
    if (pos >= text.size()) throw parse_error("graph6: empty input", pos);

    long n;
    if (static_cast<unsigned char>(text[pos]) == 126) {
        ++pos;
        if (pos < text.size() && static_cast<unsigned char>(text[pos]) == 126) {
            ++pos;
            n = 0;
            for (int k = 0; k < 6; ++k) n = (n << 6) | data_char(text, pos++);
        } else {
            n = 0;
            for (int k = 0; k < 3; ++k) n = (n << 6) | data_char(text, pos++);
        }
    } else {
        n = data_char(text, pos++);
    }
    if (n > g6_max_order)
        throw parse_error("graph6: order " + std::to_string(n) + " too large", 0);

    Graph g(static_cast<int>(n));
    long nbits = n * (n - 1) / 2;
    int cur = 0, avail = 0;
    std::size_t cur_pos = pos;
    long bit = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i, ++bit) {
            if (avail == 0) {
                cur_pos = pos;
                cur = data_char(text, pos++);
                avail = 6;
            }
            if (cur & (1 << (avail - 1))) g.add_edge(i, j);
            --avail;
        }
    }
    (void)nbits;
    if (avail > 0 && (cur & ((1 << avail) - 1)) != 0)
        throw parse_error("graph6: nonzero padding bits", cur_pos);
    if (pos != text.size())
        throw parse_error("graph6: trailing bytes after data", pos);
    return g;
}

std::string encode_graph6(const Graph& g) {
    long n = g.order();
    std::string out;
    if (n <= 62) {
        out.push_back(static_cast<char>(n + g6_bias));
    } else if (n <= 258047) {
        out.push_back(static_cast<char>(126));
        out.push_back(static_cast<char>(((n >> 12) & 63) + g6_bias));
        out.push_back(static_cast<char>(((n >> 6) & 63) + g6_bias));
        out.push_back(static_cast<char>((n & 63) + g6_bias));
    } else {
        out.push_back(static_cast<char>(126));
        out.push_back(static_cast<char>(126));
        for (int k = 5; k >= 0; --k)
            out.push_back(static_cast<char>(((n >> (6 * k)) & 63) + g6_bias));
    }
    int cur = 0, filled = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i) {
            cur = (cur << 1) | (g.has_edge(i, j) ? 1 : 0);
            if (++filled == 6) {
                out.push_back(static_cast<char>(cur + g6_bias));
                cur = 0;
                filled = 0;
            }
        }
    }
    if (filled > 0)
        out.push_back(static_cast<char>((cur << (6 - filled)) + g6_bias));
    return out;
}

Graph decode_edge_list(std::string_view text) {
    struct Line {
        long a = -1, b = -1;
        std::size_t line_no;
        bool header = false;
    };
    std::vector<Line> rows;
    std::size_t line_no = 0;
    std::istringstream in{std::string(text)};
    std::string line;
    bool first_content = true;
    long n_declared = -1;
    while (std::getline(in, line)) {
        ++line_no;
        std::size_t b = line.find_first_not_of(" \t\r");
        if (b == std::string::npos || line[b] == '#') continue;
        std::istringstream ls(line.substr(b));
        if (first_content && line[b] == 'n') {
            char tag;
            long n;
            ls >> tag >> n;
            if (ls.fail() || n < 0)
                throw parse_error("edge list: bad header at line " +
                                      std::to_string(line_no), 0);
            n_declared = n;
            first_content = false;
            continue;
        }
        first_content = false;
        long u, v;
        ls >> u >> v;
        if (ls.fail() || u < 0 || v < 0)
            throw parse_error("edge list: bad edge at line " +
                                  std::to_string(line_no), 0);
        if (u == v)
            throw parse_error("edge list: self-loop " + std::to_string(u) + " " +
                                  std::to_string(v) + " at line " +
                                  std::to_string(line_no), 0);
        rows.push_back({u, v, line_no, false});
    }
    long n = n_declared;
    if (n < 0) {
        n = 0;
        for (const auto& r : rows) n = std::max({n, r.a + 1, r.b + 1});
    }
    if (n > g6_max_order)
        throw parse_error("edge list: order too large", 0);
    Graph g(static_cast<int>(n));
    for (const auto& r : rows) {
        if (r.a >= n || r.b >= n)
            throw parse_error("edge list: index past n at line " +
                                  std::to_string(r.line_no), 0);
        g.add_edge(static_cast<int>(r.a), static_cast<int>(r.b));
    }
    return g;
}

std::string encode_edge_list(const Graph& g) {
    std::ostringstream out;
    out << "n " << g.order() << "\n";
    for (const auto& [u, v] : g.edges()) out << u << " " << v << "\n";
    return out.str();
}

}  // namespace eqm
