#include <string>

#include "doctest.h"

#include <nlohmann/json.hpp>
#include <threeconn/bg_ops.hpp>
#include <threeconn/degree_sequences.hpp>
#include <threeconn/graph.hpp>
#include <threeconn/graph6.hpp>
#include <threeconn/json_io.hpp>
#include <threeconn/partition_matrix.hpp>

using namespace threeconn;
using nlohmann::json;

namespace {

bool parse_fails(const json& doc) {
  try {
    step_from_json(doc);
  } catch (const Error& e) {
    return e.code() == Errc::invalid_argument;
  }
  return false;
}

}  // namespace

TEST_CASE("matrix index round trip") {
  const MatrixIndex idx{-2, 2};
  const json doc = to_json(idx);
  CHECK(doc["i"] == -2);
  CHECK(doc["j"] == 2);
  CHECK(matrix_index_from_json(doc) == idx);
}

TEST_CASE("every step kind survives the round trip") {
  const BgStep add{Op01{0, 5}};
  const BgStep split{Op12{Edge(1, 2), 3}};
  const BgStep twin{Op23{Edge(0, 3), Edge(1, 3)}};

  const json add_doc = to_json(add);
  CHECK(add_doc["kind"] == "op01");
  CHECK(add_doc["a"] == 0);
  CHECK(add_doc["b"] == 5);

  const json split_doc = to_json(split);
  CHECK(split_doc["kind"] == "op12");
  CHECK(split_doc["edge"] == json::array({1, 2}));
  CHECK(split_doc["attach"] == 3);

  const json twin_doc = to_json(twin);
  CHECK(twin_doc["kind"] == "op23");
  CHECK(twin_doc["first"] == json::array({0, 3}));
  CHECK(twin_doc["second"] == json::array({1, 3}));

  for (const BgStep& step : {add, split, twin}) {
    const BgStep back = step_from_json(to_json(step));
    CHECK(to_json(back) == to_json(step));
  }
}

TEST_CASE("malformed steps are rejected") {
  CHECK(parse_fails(json{{"a", 0}, {"b", 1}}));                      // kind missing
  CHECK(parse_fails(json{{"kind", "op99"}, {"a", 0}, {"b", 1}}));    // unknown kind
  CHECK(parse_fails(json{{"kind", "op01"}, {"a", 0}}));              // field missing
  CHECK(parse_fails(json{{"kind", "op01"}, {"a", 0}, {"b", "x"}}));  // wrong type
  CHECK(parse_fails(json{{"kind", "op01"}, {"a", -1}, {"b", 1}}));   // negative label
  CHECK(parse_fails(json{{"kind", "op12"}, {"edge", json::array({1})}, {"attach", 3}}));
  CHECK(parse_fails(json::array()));
}

TEST_CASE("traces serialize their steps in order") {
  BgTrace trace;
  trace.steps.push_back(BgStep{Op12{Edge(1, 2), 3}});
  trace.steps.push_back(BgStep{Op01{0, 4}});
  const json doc = to_json(trace);
  REQUIRE(doc["steps"].size() == 2);
  CHECK(doc["steps"][0]["kind"] == "op12");
  CHECK(doc["steps"][1]["kind"] == "op01");

  const BgTrace back = trace_from_json(doc);
  REQUIRE(back.steps.size() == 2);
  CHECK(replay_trace(back) == replay_trace(trace));
}

TEST_CASE("catalog serialization round trips and validates cells") {
  const Catalog catalog = enumerate_3connected(5);
  const json doc = to_json(catalog);
  CHECK(doc["max_order"] == 5);
  REQUIRE(doc["cells"].size() == 4);  // (0,0) and the three order-5 cells

  const Catalog back = catalog_from_json(doc);
  CHECK(back.max_order() == 5);
  CHECK(back.cells() == catalog.cells());

  // Tampering: K4's entry moved into the wrong cell must be refused.
  json bad = doc;
  bad["cells"][1]["graphs"].push_back(graph6_encode(complete_graph(4)));
  bool threw = false;
  try {
    catalog_from_json(bad);
  } catch (const Error& e) {
    threw = e.code() == Errc::invalid_argument;
  }
  CHECK(threw);
}

TEST_CASE("classification serializes unset oracles as nulls") {
  const json plain = to_json(classify(DegreeSequence::parse("3,3,3,3"), false));
  CHECK(plain["graphic"] == true);
  CHECK(plain["criterion_3connected"] == true);
  CHECK(plain["criterion_necessary"] == false);
  CHECK(plain["oracle_3connected"].is_null());
  CHECK(plain["oracle_necessary"].is_null());

  const json full = to_json(classify(DegreeSequence::parse("3,3,3,3"), true));
  CHECK(full["oracle_3connected"] == true);
  CHECK(full["oracle_necessary"] == true);
}

TEST_CASE("serialization is deterministic") {
  const Catalog catalog = enumerate_3connected(6);
  CHECK(to_json(catalog).dump() == to_json(catalog).dump());

  BgTrace trace;
  trace.steps.push_back(BgStep{Op23{Edge(0, 1), Edge(2, 3)}});
  CHECK(to_json(trace).dump() == to_json(trace).dump());
}
