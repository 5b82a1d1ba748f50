#include <doctest.h>

#include <map>

#include "indtree/errors.hpp"
#include "indtree/graph_io.hpp"
#include "indtree/oracle.hpp"

using namespace indtree;

TEST_CASE("parse_edge_list") {
    Graph g = parse_edge_list("0 1\n1 2");
    CHECK(g.vertex_count() == 3);
    CHECK(g.has_edge(0, 1));
    CHECK(g.has_edge(1, 2));
    CHECK_FALSE(g.has_edge(0, 2));

    Graph s = parse_edge_list("0 1\n0 2\n0 3");
    CHECK(s.degree(0) == 3);

    Graph with_extras = parse_edge_list("# a comment\n\n  7 3\nv 10\n");
    CHECK(with_extras.vertex_count() == 3);
    CHECK(with_extras.has_vertex(10));
    CHECK(with_extras.degree(10) == 0);

    CHECK(parse_edge_list("").vertex_count() == 0);
}

TEST_CASE("parse_edge_list errors carry line numbers") {
    CHECK_THROWS_AS(parse_edge_list("0 0"), ParseError);
    CHECK_THROWS_AS(parse_edge_list("0 1\n0 1"), ParseError);
    CHECK_THROWS_AS(parse_edge_list("0 1 2"), ParseError);
    CHECK_THROWS_AS(parse_edge_list("a b"), ParseError);
    CHECK_THROWS_AS(parse_edge_list("0 -1"), ParseError);
    bool threw = false;
    try {
        parse_edge_list("0 1\n1 2\nbogus");
    } catch (const ParseError& e) {
        threw = true;
        CHECK(e.line() == 3);
        CHECK(std::string(e.what()).find("line 3") != std::string::npos);
    }
    CHECK(threw);

    threw = false;
    try {
        parse_edge_list("0 1\n1 0");
    } catch (const ParseError& e) {
        threw = true;
        CHECK(e.line() == 2); // duplicate edge reported where it reappears
    }
    CHECK(threw);
}

TEST_CASE("edge list round-trip") {
    Graph g = parse_edge_list("0 1\n1 2\nv 5\n2 9");
    CHECK(parse_edge_list(emit_edge_list(g)) == g);
}

// graph6 values cross-checked against an independent decoder.
TEST_CASE("parse_graph6 golden values") {
    Graph p3 = parse_graph6("Bg");
    CHECK(p3.vertices() == std::vector<int>{0, 1, 2});
    CHECK(p3.has_edge(0, 1));
    CHECK(p3.has_edge(1, 2));
    CHECK_FALSE(p3.has_edge(0, 2));

    Graph single = parse_graph6("@");
    CHECK(single.vertex_count() == 1);
    CHECK(single.edge_count() == 0);

    Graph k2 = parse_graph6("A_");
    CHECK(k2.vertex_count() == 2);
    CHECK(k2.has_edge(0, 1));

    // "B_" sets only the 0-1 bit: an edge plus an isolated vertex, not P_3.
    Graph b_underscore = parse_graph6("B_");
    CHECK(b_underscore.vertex_count() == 3);
    CHECK(b_underscore.edge_count() == 1);
    CHECK(b_underscore.has_edge(0, 1));

    Graph k3 = parse_graph6("Bw");
    CHECK(k3.edge_count() == 3);

    Graph c4 = parse_graph6("Cl");
    CHECK(c4.vertex_count() == 4);
    CHECK(c4.edge_count() == 4);
    CHECK(c4.has_edge(0, 1));
    CHECK(c4.has_edge(1, 2));
    CHECK(c4.has_edge(2, 3));
    CHECK(c4.has_edge(0, 3));

    CHECK(parse_graph6("?").vertex_count() == 0);
    CHECK(parse_graph6(">>graph6<<A_").edge_count() == 1);
}

TEST_CASE("emit_graph6 golden values") {
    Graph p3 = parse_edge_list("0 1\n1 2");
    CHECK(emit_graph6(p3) == "Bg");

    Graph single;
    single.add_vertex(0);
    CHECK(emit_graph6(single) == "@");

    Graph star = parse_edge_list("0 1\n0 2\n0 3");
    CHECK(emit_graph6(star) == "Cs");
    CHECK(emit_graph6(parse_edge_list("0 1\n1 2\n2 3")) == "Ch");

    // labels are compacted ascending before encoding
    Graph sparse_labels = parse_edge_list("10 20\n20 30");
    CHECK(emit_graph6(sparse_labels) == "Bg");
}

TEST_CASE("graph6 long form header for n > 62") {
    Graph p63;
    for (int v = 0; v + 1 < 63; ++v)
        p63.add_edge(v, v + 1);
    p63.add_vertex(62);
    std::string enc = emit_graph6(p63);
    CHECK(enc.substr(0, 4) == "~??~");
    Graph back = parse_graph6(enc);
    CHECK(back == p63);
}

TEST_CASE("parse_graph6 errors") {
    CHECK_THROWS_AS(parse_graph6(""), ParseError);
    CHECK_THROWS_AS(parse_graph6("C"), ParseError);          // truncated bit stream
    CHECK_THROWS_AS(parse_graph6("B\x07"), ParseError);      // character below 63
    CHECK_THROWS_AS(parse_graph6("Bgg"), ParseError);        // trailing data
    CHECK_THROWS_AS(parse_graph6(">>sparse6<<A_"), ParseError);
}

TEST_CASE("graph6 round-trip on random trees") {
    for (std::uint64_t i = 0; i < 200; ++i) {
        TreeGenSpec spec = fuzz_tree_spec({.count = 200, .max_n = 62, .seed = 909}, i);
        Graph t = random_tree(spec);
        Graph back = parse_graph6(emit_graph6(t));
        // relabel t to 0..n-1 ascending for comparison
        Graph relabeled;
        std::map<int, int> id;
        for (int v : t.vertices()) {
            id.emplace(v, static_cast<int>(id.size()));
            relabeled.add_vertex(id[v]);
        }
        for (int u : t.vertices())
            for (int v : t.neighbors(u))
                if (u < v)
                    relabeled.add_edge(id[u], id[v]);
        CHECK(back == relabeled);
    }
}

TEST_CASE("format auto-detection") {
    CHECK(detect_format("0 1\n1 2") == GraphFormat::edgelist);
    CHECK(detect_format("# comment\nv 3\n") == GraphFormat::edgelist);
    CHECK(detect_format("Bg") == GraphFormat::graph6);
    CHECK(detect_format(">>graph6<<A_") == GraphFormat::graph6);
    CHECK(detect_format("~??~...") == GraphFormat::graph6);
}
