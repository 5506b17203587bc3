#include "doctest.h"
#include "pancake/error.hpp"
#include "pancake/formats.hpp"

using namespace pancake;

TEST_SUITE("formats") {
  TEST_CASE("permutation text") {
    CHECK(format_permutation(Sequence{5, 2, 3, 1, 4}) == "5 2 3 1 4\n");
    CHECK(parse_permutation("5 2 3 1 4") == Sequence{5, 2, 3, 1, 4});
    CHECK(parse_permutation("[3, 1, 2]\n") == Sequence{3, 1, 2});
    CHECK_THROWS_AS(parse_permutation("1 2 x"), Error);
    CHECK_THROWS_AS(parse_permutation("1 2-3"), Error);
    CHECK_THROWS_AS(parse_permutation(""), Error);
    const auto many = parse_permutations("1 2\n\n2 1\n");
    REQUIRE(many.size() == 2);
    CHECK(many[1] == Sequence{2, 1});
  }

  TEST_CASE("trace JSON keeps its field order") {
    const FlipPath p{Sequence{2, 1, 3}, {2}};
    SearchStats stats;
    stats.nodes_expanded = 2;
    stats.elapsed_seconds = 0.5;
    CHECK(trace_json(p, stats, -1) ==
          "{\"source\":[2,1,3],\"flips\":[2],\"efficient\":true,\"db_trace\":[1,0],"
          "\"stats\":{\"nodes\":2,\"seconds\":0.5}}\n");
  }

  TEST_CASE("layout JSON") {
    const ReductionInstance inst = build_instance(parse_dimacs("p cnf 1 1\n1 1 1 0\n"));
    const std::string j = layout_json(inst, -1);
    CHECK(j.rfind("{\"n\":129,\"db\":66,\"zones\":[{\"role\":\"trigger\",\"index\":1,"
                  "\"block\":\"nu\",\"positions\":[1,1]}",
                  0) == 0);
    CHECK(j.find("{\"role\":\"literals\",\"index\":0,\"block\":\"Lambda\",\"positions\":[100,129]}") !=
          std::string::npos);
  }
}
