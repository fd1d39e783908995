#include "doctest.h"

#include <random>

#include "eqm/codec.hpp"
#include "eqm/errors.hpp"
#include "eqm/families.hpp"
#include "helpers.hpp"

using namespace eqm;

TEST_CASE("graph6 named words") {
    // Bw is the triangle
    Graph t = decode_graph6("Bw");
    CHECK(t.order() == 3);
    CHECK(t.edge_count() == 3);
    CHECK(t == complete_graph(3));

    CHECK(encode_graph6(Graph(1)) == "@");
    CHECK(decode_graph6("@").order() == 1);

    // Dhc is C5 in canonical nauty labeling
    CHECK(encode_graph6(decode_graph6("Dhc")) == "Dhc");
    Graph c5 = decode_graph6("Dhc");
    CHECK(c5.order() == 5);
    CHECK(c5.edge_count() == 5);
    for (int v = 0; v < 5; ++v) CHECK(c5.degree(v) == 2);

    CHECK(decode_graph6(">>graph6<<Bw") == complete_graph(3));
    CHECK(encode_graph6(Graph(0)) == "?");
}

TEST_CASE("graph6 round trips") {
    std::mt19937 rng(3);
    for (int it = 0; it < 200; ++it) {
        Graph g = testutil::random_graph(rng, it % 14, 0.4);
        CHECK(decode_graph6(encode_graph6(g)) == g);
    }
    // multi-byte order header
    Graph big(100);
    big.add_edge(0, 99);
    Graph round = decode_graph6(encode_graph6(big));
    CHECK(round.order() == 100);
    CHECK(round.has_edge(0, 99));
}

TEST_CASE("graph6 parse errors carry byte offsets") {
    CHECK_THROWS_AS(decode_graph6(""), parse_error);
    CHECK_THROWS_AS(decode_graph6("B"), parse_error);     // truncated data
    CHECK_THROWS_AS(decode_graph6("B\x01"), parse_error); // byte out of range
    CHECK_THROWS_AS(decode_graph6("Bww"), parse_error);   // trailing bytes
    // 'x' = 'w'+1 sets a padding bit for n=3
    CHECK_THROWS_AS(decode_graph6("Bx"), parse_error);
    try {
        decode_graph6("Bx");
    } catch (const parse_error& e) {
        CHECK(e.offset() == 1);
    }
    try {
        decode_graph6("B");
    } catch (const parse_error& e) {
        CHECK(e.offset() == 1);
    }
}

TEST_CASE("edge list decoding") {
    Graph empty2 = decode_edge_list("n 2\n");
    CHECK(empty2.order() == 2);
    CHECK(empty2.edge_count() == 0);

    Graph k3 = decode_edge_list("0 1\n1 2\n2 0\n");
    CHECK(k3 == complete_graph(3));

    // duplicates are idempotent, comments and blanks are skipped
    Graph dup = decode_edge_list("# a triangle\nn 3\n0 1\n0 1\n\n1 2\n0 2\n");
    CHECK(dup == complete_graph(3));

    CHECK_THROWS_AS(decode_edge_list("3 3\n"), parse_error);     // self-loop
    CHECK_THROWS_AS(decode_edge_list("n 2\n0 5\n"), parse_error);  // index past n
    CHECK_THROWS_AS(decode_edge_list("n -1\n"), parse_error);
    CHECK_THROWS_AS(decode_edge_list("0 x\n"), parse_error);

    // without a header, n is one past the largest index
    CHECK(decode_edge_list("0 3\n").order() == 4);

    Graph g = decode_edge_list(encode_edge_list(testutil::petersen()));
    CHECK(g == testutil::petersen());
}
