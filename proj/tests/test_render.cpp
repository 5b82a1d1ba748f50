#include <doctest.h>

#include "indtree/graph_io.hpp"
#include "indtree/reduction.hpp"
#include "indtree/render.hpp"

using namespace indtree;

TEST_CASE("trace text format") {
    Graph star = parse_edge_list("0 1\n0 2\n0 3");
    std::string text = trace_to_text(reduce(star));
    CHECK(text ==
          "move 1: SameTypeCollapse at 0, removed branches [1,1], kept [1], parity even\n"
          "terminal path n=2, odd moves s=0, I(G;-1)=-1\n");
}

TEST_CASE("classification text") {
    Graph star = parse_edge_list("0 1\n0 2\n0 3");
    Classification c = classify(star);
    CHECK(classification_to_text(c, false) ==
          "I(G;-1)=-1, sphere (even Euler parity), terminal P_2, odd moves 0\n");

    Graph p4 = parse_edge_list("0 1\n1 2\n2 3");
    CHECK(classification_to_text(classify(p4), false) ==
          "I(G;-1)=0, contractible, terminal P_4, odd moves 0\n");
}

TEST_CASE("json rendering") {
    Graph star = parse_edge_list("0 1\n0 2\n0 3");
    Classification c = classify(star);
    nlohmann::json j = to_json(c);
    CHECK(j["value"] == -1);
    CHECK(j["contractible"] == false);
    CHECK(j["sphere_euler_parity"] == "even");
    CHECK(j["trace"]["terminal_path_n"] == 2);
    CHECK(j["trace"]["odd_move_count"] == 0);
    CHECK(j["trace"]["mixed_pair_used"] == false);
    REQUIRE(j["trace"]["moves"].size() == 1);
    const auto& move = j["trace"]["moves"][0];
    CHECK(move["kind"] == "SameTypeCollapse");
    CHECK(move["anchor"] == 0);
    CHECK(move["parity"] == "even");
    CHECK(move["removed"].size() == 2);
    CHECK(move["kept"][0]["path"] == nlohmann::json::array({1}));
    CHECK(move["kept"][0]["length"] == 1);

    Polynomial p({1, 4, 3});
    nlohmann::json pj = to_json(p);
    CHECK(pj["coefficients"] == nlohmann::json::array({"1", "4", "3"}));
    CHECK(pj["value_at_minus1"] == "0");
}

TEST_CASE("fuzz report rendering") {
    FuzzReport r = fuzz_equivalence({.count = 9, .max_n = 8, .seed = 2});
    std::string text = fuzz_report_to_text(r);
    CHECK(text.find("fuzz: seed=2 count=9 max_n=8") != std::string::npos);
    CHECK(text.find("pass 9/9") != std::string::npos);
    nlohmann::json j = to_json(r);
    CHECK(j["checked"] == 9);
    CHECK(j["failed"] == 0);
    CHECK(j["counterexample"].is_null());
}
