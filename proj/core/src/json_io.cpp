#include "threeconn/json_io.hpp"

#include <string>

#include "threeconn/canonical.hpp"
#include "threeconn/graph6.hpp"

namespace threeconn {

namespace {

using nlohmann::json;

void require(bool ok, const std::string& what) {
  if (!ok) throw Error(Errc::invalid_argument, what);
}

long long integer_field(const json& doc, const char* key) {
  require(doc.is_object() && doc.contains(key) && doc[key].is_number_integer(),
          std::string("expected integer field \"") + key + '"');
  return doc[key].get<long long>();
}

int vertex_field(const json& doc, const char* key) {
  const long long value = integer_field(doc, key);
  require(value >= 0 && value <= Graph::max_order, std::string("field \"") + key +
                                                       "\" is not a vertex label");
  return static_cast<int>(value);
}

json edge_to_json(const Edge& e) { return json::array({e.u, e.v}); }

Edge edge_from_json(const json& doc, const char* key) {
  require(doc.is_object() && doc.contains(key), std::string("missing edge field \"") + key + '"');
  const json& raw = doc[key];
  require(raw.is_array() && raw.size() == 2 && raw[0].is_number_integer() &&
              raw[1].is_number_integer(),
          std::string("edge field \"") + key + "\" must be a pair of integers");
  return Edge(raw[0].get<int>(), raw[1].get<int>());
}

}  // namespace

json to_json(const MatrixIndex& idx) { return json{{"i", idx.i}, {"j", idx.j}}; }

MatrixIndex matrix_index_from_json(const json& doc) {
  return MatrixIndex{integer_field(doc, "i"), integer_field(doc, "j")};
}

json to_json(const BgStep& step) {
  json out;
  switch (step.kind()) {
    case BgKind::op01: {
      const auto& op = std::get<Op01>(step.op);
      out = json{{"kind", "op01"}, {"a", op.a}, {"b", op.b}};
      break;
    }
    case BgKind::op12: {
      const auto& op = std::get<Op12>(step.op);
      out = json{{"kind", "op12"}, {"edge", edge_to_json(op.target)}, {"attach", op.attach}};
      break;
    }
    case BgKind::op23: {
      const auto& op = std::get<Op23>(step.op);
      out = json{{"kind", "op23"},
                 {"first", edge_to_json(op.first)},
                 {"second", edge_to_json(op.second)}};
      break;
    }
  }
  return out;
}

BgStep step_from_json(const json& doc) {
  require(doc.is_object() && doc.contains("kind") && doc["kind"].is_string(),
          "step needs a string field \"kind\"");
  const std::string kind = doc["kind"].get<std::string>();
  if (kind == "op01") {
    return BgStep{Op01{vertex_field(doc, "a"), vertex_field(doc, "b")}};
  }
  if (kind == "op12") {
    return BgStep{Op12{edge_from_json(doc, "edge"), vertex_field(doc, "attach")}};
  }
  if (kind == "op23") {
    return BgStep{Op23{edge_from_json(doc, "first"), edge_from_json(doc, "second")}};
  }
  throw Error(Errc::invalid_argument, "unknown step kind \"" + kind + '"');
}

json to_json(const BgTrace& trace) {
  json steps = json::array();
  for (const BgStep& step : trace.steps) steps.push_back(to_json(step));
  return json{{"steps", steps}};
}

BgTrace trace_from_json(const json& doc) {
  require(doc.is_object() && doc.contains("steps") && doc["steps"].is_array(),
          "trace needs an array field \"steps\"");
  BgTrace trace;
  for (const json& raw : doc["steps"]) trace.steps.push_back(step_from_json(raw));
  return trace;
}

json to_json(const Catalog& catalog) {
  json cells = json::array();
  // The cell map is column-major ordered and each code set is sorted, so the
  // document comes out deterministic.
  for (const auto& [idx, codes] : catalog.cells()) {
    if (codes.empty()) continue;
    json graphs = json::array();
    for (const CanonicalCode& code : codes) {
      graphs.push_back(graph6_encode(decode(code)));
    }
    cells.push_back(json{{"i", idx.i}, {"j", idx.j}, {"graphs", graphs}});
  }
  return json{{"max_order", catalog.max_order()}, {"cells", cells}};
}

Catalog catalog_from_json(const json& doc) {
  const long long max_order = integer_field(doc, "max_order");
  require(max_order >= 4 && max_order <= Graph::max_order, "catalog max_order out of range");
  require(doc.contains("cells") && doc["cells"].is_array(), "catalog needs a \"cells\" array");
  Catalog catalog(static_cast<int>(max_order));
  for (const json& cell : doc["cells"]) {
    const MatrixIndex idx = matrix_index_from_json(cell);
    require(cell.contains("graphs") && cell["graphs"].is_array(),
            "catalog cell needs a \"graphs\" array");
    for (const json& raw : cell["graphs"]) {
      require(raw.is_string(), "catalog graphs must be graph6 strings");
      const Graph g = graph6_decode(raw.get<std::string>());
      const CanonicalCode code = canonical_code(g);
      require(cell_of(code) == idx, "graph filed under the wrong cell");
      catalog.insert(code);
    }
  }
  return catalog;
}

json to_json(const Classification& c) {
  json out{{"graphic", c.graphic},
           {"criterion_3connected", c.criterion_3connected},
           {"criterion_necessary", c.criterion_necessary},
           {"oracle_3connected", nullptr},
           {"oracle_necessary", nullptr}};
  if (c.oracle_3connected) out["oracle_3connected"] = *c.oracle_3connected;
  if (c.oracle_necessary) out["oracle_necessary"] = *c.oracle_necessary;
  return out;
}

json to_json(const PathsWitness& witness) {
  json paths = json::array();
  for (const auto& path : witness.paths) paths.push_back(path);
  return json{{"u", witness.u}, {"v", witness.v}, {"paths", paths}};
}

json to_json(const CutWitness& witness) { return json(witness.vertices); }

json to_json(const AuditViolation& violation) {
  return json{{"kind", violation.kind},
              {"input", violation.input},
              {"expected", violation.expected},
              {"observed", violation.observed},
              {"allowlisted", violation.allowlisted}};
}

json to_json(const AuditReport& report, bool include_runtime) {
  json violations = json::array();
  for (const AuditViolation& violation : report.violations) {
    violations.push_back(to_json(violation));
  }
  json out{{"theorem", report.theorem},  {"max_n", report.max_n},
           {"verified_count", report.verified_count}, {"violations", violations},
           {"details", report.details}, {"verdict", report.verdict()}};
  if (include_runtime) out["runtime_ms"] = report.runtime_ms;
  return out;
}

}  // namespace threeconn
