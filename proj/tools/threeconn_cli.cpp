// Command-line front end: thin adapters over the library, JSON on stdout.
//
// Exit codes: 0 success (or verification findings covered by the active
// allowlist), 1 usage or input error, 2 verification violations outside the
// allowlist.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include <threeconn/audit.hpp>
#include <threeconn/bg_ops.hpp>
#include <threeconn/canonical.hpp>
#include <threeconn/connectivity.hpp>
#include <threeconn/degree_sequences.hpp>
#include <threeconn/graph.hpp>
#include <threeconn/graph6.hpp>
#include <threeconn/json_io.hpp>
#include <threeconn/partition_matrix.hpp>

namespace {

using nlohmann::json;
using namespace threeconn;

// ---------------------------------------------------------------------------
// Output plumbing

struct Output {
  bool pretty = false;
  std::string path;  // empty: stdout
  std::ostringstream buffer;

  void flush() {
    if (path.empty()) {
      std::cout << buffer.str();
      std::cout.flush();
    } else {
      std::ofstream file(path, std::ios::binary);
      if (!file) throw Error(Errc::invalid_argument, "cannot open output file: " + path);
      file << buffer.str();
    }
  }
};

void emit_json(Output& out, const json& doc) { out.buffer << doc.dump() << "\n"; }

std::string yesno(bool b) { return b ? "yes" : "no"; }

std::string opt_yesno(const std::optional<bool>& b) {
  return b.has_value() ? yesno(*b) : "not run";
}

std::string join_ints(const std::vector<int>& values, const char* sep = ",") {
  std::string text;
  for (size_t i = 0; i < values.size(); ++i) {
    if (i) text += sep;
    text += std::to_string(values[i]);
  }
  return text;
}

// ---------------------------------------------------------------------------
// Input plumbing

// Accepts "3,3,3,3", "3 3 3 3", or a JSON array "[3,3,3,3]".
DegreeSequence parse_sequence_arg(const std::string& text) {
  const auto first = text.find_first_not_of(" \t");
  if (first == std::string::npos)
    throw Error(Errc::invalid_sequence, "empty degree sequence");
  if (text[first] == '[') {
    json doc = json::parse(text, nullptr, false);
    if (doc.is_discarded() || !doc.is_array())
      throw Error(Errc::invalid_sequence, "malformed JSON degree sequence: " + text);
    std::vector<int> terms;
    for (const auto& item : doc) {
      if (!item.is_number_integer())
        throw Error(Errc::invalid_sequence, "degree sequence terms must be integers");
      terms.push_back(item.get<int>());
    }
    return DegreeSequence(terms);
  }
  // Normalise separators: any run of spaces or commas separates two terms.
  std::string normalized;
  bool pending_separator = false;
  for (char c : text) {
    if (c == ' ' || c == '\t' || c == ',') {
      pending_separator = !normalized.empty();
    } else {
      if (pending_separator) normalized += ',';
      pending_separator = false;
      normalized += c;
    }
  }
  return DegreeSequence::parse(normalized);
}

// Graph inputs: positional graph6 arguments, or stdin lines when none given.
std::vector<std::string> gather_graph_inputs(const std::vector<std::string>& args) {
  if (!args.empty()) return args;
  std::vector<std::string> lines;
  std::string line;
  while (std::getline(std::cin, line)) {
    while (!line.empty() && (line.back() == '\r' || line.back() == '\n')) line.pop_back();
    if (!line.empty()) lines.push_back(line);
  }
  return lines;
}

// ---------------------------------------------------------------------------
// classify

int cmd_classify(const std::string& sequence_arg, bool with_oracle, int oracle_bound,
                 Output& out) {
  const DegreeSequence s = parse_sequence_arg(sequence_arg);
  const Classification c = classify(s, with_oracle, oracle_bound);
  if (out.pretty) {
    out.buffer << "sequence:             " << s.to_string() << "\n"
               << "graphic:              " << yesno(c.graphic) << "\n"
               << "criterion_3connected: " << yesno(c.criterion_3connected) << "\n"
               << "criterion_necessary:  " << yesno(c.criterion_necessary) << "\n"
               << "oracle_3connected:    " << opt_yesno(c.oracle_3connected) << "\n"
               << "oracle_necessary:     " << opt_yesno(c.oracle_necessary) << "\n";
  } else {
    json doc = to_json(c);
    doc["sequence"] = s.terms();
    emit_json(out, doc);
  }
  return 0;
}

// ---------------------------------------------------------------------------
// realize

int cmd_realize(const std::string& sequence_arg, int bound, Output& out) {
  const DegreeSequence s = parse_sequence_arg(sequence_arg);
  if (s.length() > bound)
    throw Error(Errc::bound_exceeded,
                "realization search covers lengths up to " + std::to_string(bound));
  const std::optional<Graph> g = realize_3connected(s);
  if (out.pretty) {
    out.buffer << "sequence: " << s.to_string() << "\n";
    if (g)
      out.buffer << "graph:    " << graph6_encode(*g) << "\n";
    else
      out.buffer << "graph:    none (no 3-connected realization)\n";
  } else {
    json doc{{"sequence", s.terms()}, {"realizable", g.has_value()}};
    doc["graph"] = g ? json(graph6_encode(*g)) : json(nullptr);
    emit_json(out, doc);
  }
  return 0;
}

// ---------------------------------------------------------------------------
// check

void check_one(const std::string& text, Output& out) {
  const Graph g = graph6_decode(text);
  if (g.order() < 2)
    throw Error(Errc::order_too_small, "connectivity needs at least two vertices");
  const int kappa = vertex_connectivity(g);
  const bool three = kappa >= 3 && g.order() >= 4;

  std::optional<CutWitness> cut;
  if (kappa <= 2) cut = find_small_cut(g, 2);

  std::optional<PathsWitness> paths;
  if (three) {
    // Deterministic sample pair: the first non-adjacent pair in lexicographic
    // order, falling back to (0,1) for complete graphs.
    int su = 0, sv = 1;
    bool found = false;
    for (int u = 0; u < g.order() && !found; ++u)
      for (int v = u + 1; v < g.order() && !found; ++v)
        if (!g.adjacent(u, v)) {
          su = u;
          sv = v;
          found = true;
        }
    paths = max_disjoint_paths(g, su, sv);
  }

  if (out.pretty) {
    out.buffer << "graph:        " << text << "\n"
               << "order:        " << g.order() << "\n"
               << "size:         " << g.size() << "\n"
               << "connectivity: " << kappa << "\n"
               << "3-connected:  " << yesno(three) << "\n";
    if (cut) out.buffer << "cut:          {" << join_ints(cut->vertices) << "}\n";
    if (paths) {
      out.buffer << "paths " << paths->u << "-" << paths->v << ":\n";
      for (const auto& p : paths->paths) out.buffer << "  " << join_ints(p, " ") << "\n";
    }
  } else {
    json doc{{"graph", text},
             {"order", g.order()},
             {"size", g.size()},
             {"connectivity", kappa},
             {"is_3_connected", three}};
    doc["cut"] = cut ? to_json(*cut) : json(nullptr);
    doc["paths"] = paths ? to_json(*paths) : json(nullptr);
    emit_json(out, doc);
  }
}

int cmd_check(const std::vector<std::string>& args, Output& out) {
  const std::vector<std::string> inputs = gather_graph_inputs(args);
  if (inputs.empty()) throw Error(Errc::invalid_argument, "no graphs given");
  for (size_t i = 0; i < inputs.size(); ++i) {
    if (out.pretty && i) out.buffer << "\n";
    check_one(inputs[i], out);
  }
  return 0;
}

// ---------------------------------------------------------------------------
// trace

void trace_one(const std::string& text, Output& out) {
  const Graph g = graph6_decode(text);
  if (g.order() > 8)
    throw Error(Errc::bound_exceeded, "construction traces cover orders up to 8");
  const BgTrace trace = find_trace(g);  // rejects non-3-connected inputs
  if (out.pretty) {
    out.buffer << "graph: " << text << "\n"
               << "steps: " << trace.steps.size() << "\n";
    for (const auto& step : trace.steps) out.buffer << "  " << to_json(step).dump() << "\n";
  } else {
    json doc{{"graph", text}, {"steps", to_json(trace)["steps"]}};
    emit_json(out, doc);
  }
}

int cmd_trace(const std::vector<std::string>& args, Output& out) {
  const std::vector<std::string> inputs = gather_graph_inputs(args);
  if (inputs.empty()) throw Error(Errc::invalid_argument, "no graphs given");
  for (size_t i = 0; i < inputs.size(); ++i) {
    if (out.pretty && i) out.buffer << "\n";
    trace_one(inputs[i], out);
  }
  return 0;
}

// ---------------------------------------------------------------------------
// enumerate / enumerate-cell

int cmd_enumerate(int order, Output& out) {
  if (order < 4 || order > 8)
    throw Error(Errc::bound_exceeded, "enumeration covers orders 4 to 8");
  const Catalog catalog = enumerate_3connected(order);
  std::vector<std::string> graphs;
  for (const CanonicalCode& code : catalog.codes_of_order(order))
    graphs.push_back(graph6_encode(decode(code)));
  if (out.pretty) {
    for (const auto& g6 : graphs) out.buffer << g6 << "\n";
  } else {
    emit_json(out, json{{"order", order},
                        {"count", graphs.size()},
                        {"graphs", graphs}});
  }
  return 0;
}

int cmd_enumerate_cell(long long i, long long j, Output& out) {
  if (j < 0) throw Error(Errc::invalid_argument, "column index must be non-negative");
  const MatrixIndex idx{i, j};
  const CellParameters params = cell_parameters(idx);
  if (params.order > 8)
    throw Error(Errc::bound_exceeded, "cell enumeration covers orders 4 to 8");
  const RowRange range = nonempty_row_range(j);
  const bool in_range = i >= range.i_min && i <= range.i_max;

  std::vector<std::string> graphs;
  if (in_range) {
    const Catalog catalog = enumerate_3connected(static_cast<int>(params.order));
    for (const Graph& g : enumerate_cell(idx, catalog))
      graphs.push_back(graph6_encode(g));
  }

  if (out.pretty) {
    for (const auto& g6 : graphs) out.buffer << g6 << "\n";
    if (!in_range) out.buffer << "# empty: outside non-empty range\n";
  } else {
    json doc{{"i", i},
             {"j", j},
             {"order", params.order},
             {"size", params.size},
             {"count", graphs.size()},
             {"graphs", graphs}};
    if (!in_range) doc["note"] = "outside non-empty range";
    emit_json(out, doc);
  }
  return 0;
}

// ---------------------------------------------------------------------------
// matrix

int cmd_matrix(long long max_j, std::optional<long long> only_column, Output& out) {
  if (max_j < 0) throw Error(Errc::invalid_argument, "column index must be non-negative");
  std::vector<long long> columns;
  if (only_column) {
    if (*only_column < 0)
      throw Error(Errc::invalid_argument, "column index must be non-negative");
    columns.push_back(*only_column);
  } else {
    for (long long j = 0; j <= max_j; ++j) columns.push_back(j);
  }

  json cols = json::array();
  for (long long j : columns) {
    const RowRange range = nonempty_row_range(j);
    cols.push_back(json{{"j", j},
                        {"order", j + 4},
                        {"row_range", json::array({range.i_min, range.i_max})},
                        {"nonempty_rows", column_nonempty_count(j)},
                        {"size_range", json::array({range.i_min + 3 * j + 6,
                                                    range.i_max + 3 * j + 6})}});
  }

  if (out.pretty) {
    out.buffer << "  j  order        rows  nonempty       sizes\n";
    for (const auto& c : cols) {
      char line[96];
      std::snprintf(line, sizeof line, "%3lld %6lld  %4lld..%-4lld %9lld %5lld..%-4lld\n",
                    c["j"].get<long long>(), c["order"].get<long long>(),
                    c["row_range"][0].get<long long>(), c["row_range"][1].get<long long>(),
                    c["nonempty_rows"].get<long long>(), c["size_range"][0].get<long long>(),
                    c["size_range"][1].get<long long>());
      out.buffer << line;
    }
  } else {
    emit_json(out, json{{"columns", cols}});
  }
  return 0;
}

// ---------------------------------------------------------------------------
// verify

int cmd_verify(const std::string& theorem, std::optional<int> max_n,
               const std::string& allowlist_path, bool timing, Output& out) {
  const int n = max_n.value_or(theorem == "bg" || theorem == "main" ? 7 : 8);
  const Allowlist allow = allowlist_path.empty() ? Allowlist::builtin()
                                                 : Allowlist::from_file(allowlist_path);
  const AuditReport report = verify_theorem(theorem, n, allow);

  if (out.pretty) {
    long long allowed = 0;
    for (const auto& v : report.violations) allowed += v.allowlisted ? 1 : 0;
    out.buffer << "theorem:    " << report.theorem << "\n"
               << "max_n:      " << report.max_n << "\n"
               << "verified:   " << report.verified_count << "\n"
               << "violations: " << report.violations.size() << " (" << allowed
               << " allowlisted)\n"
               << "verdict:    " << report.verdict() << "\n";
    if (timing) out.buffer << "runtime_ms: " << report.runtime_ms << "\n";
    for (const auto& v : report.violations)
      out.buffer << (v.allowlisted ? "  [allowed] " : "  [violation] ") << v.kind << " "
                 << v.input.dump() << "\n";
  } else {
    emit_json(out, to_json(report, timing));
  }
  return report.clean_or_allowlisted() ? 0 : 2;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"3-connected graphs: construction, classification, verification"};
  app.require_subcommand(1);

  bool pretty = false;
  std::string output_path;
  app.add_flag("--pretty", pretty, "Human-readable tables instead of JSON");
  app.add_option("--output", output_path, "Write the report to a file instead of stdout");

  // classify
  auto* classify_cmd = app.add_subcommand("classify", "Classify a degree sequence");
  std::string sequence_arg;
  bool with_oracle = false;
  int oracle_bound = max_realization_phi;
  classify_cmd->add_option("sequence", sequence_arg, "Degree sequence, e.g. 3,3,3,3")
      ->required();
  classify_cmd->add_flag("--oracle", with_oracle,
                         "Also run the exhaustive realization oracle");
  classify_cmd->add_option("--max-n", oracle_bound, "Oracle length bound (<= 8)");

  // realize
  auto* realize_cmd =
      app.add_subcommand("realize", "Find a 3-connected realization of a sequence");
  std::string realize_sequence;
  int realize_bound = max_realization_phi;
  realize_cmd->add_option("sequence", realize_sequence, "Degree sequence")->required();
  realize_cmd->add_option("--max-n", realize_bound, "Search length bound (<= 8)");

  // check
  auto* check_cmd =
      app.add_subcommand("check", "Report connectivity and witnesses for graphs");
  std::vector<std::string> check_args;
  check_cmd->add_option("graphs", check_args, "graph6 strings (stdin when omitted)");

  // trace
  auto* trace_cmd =
      app.add_subcommand("trace", "Construction sequence from K4 for 3-connected graphs");
  std::vector<std::string> trace_args;
  trace_cmd->add_option("graphs", trace_args, "graph6 strings (stdin when omitted)");

  // enumerate
  auto* enum_cmd = app.add_subcommand("enumerate", "All 3-connected classes of an order");
  int enum_order = 0;
  enum_cmd->add_option("order", enum_order, "Number of vertices (4..8)")->required();

  // enumerate-cell
  auto* cell_cmd = app.add_subcommand("enumerate-cell", "All classes in one grid cell");
  long long cell_i = 0, cell_j = 0;
  cell_cmd->add_option("--i", cell_i, "Row index")->required();
  cell_cmd->add_option("--j", cell_j, "Column index (>= 0)")->required();

  // matrix
  auto* matrix_cmd = app.add_subcommand("matrix", "Non-empty row ranges per column");
  long long matrix_max_j = 3;
  std::optional<long long> matrix_column;
  matrix_cmd->add_option("--max-j", matrix_max_j, "Last column to describe");
  matrix_cmd->add_option("--column", matrix_column, "Describe a single column");

  // verify
  auto* verify_cmd = app.add_subcommand("verify", "Run a verification suite");
  std::string verify_theorem_name;
  std::optional<int> verify_max_n;
  std::string allowlist_path;
  bool timing = false;
  verify_cmd
      ->add_option("theorem", verify_theorem_name,
                   "One of: bg, matrix, main, necessary, corollary")
      ->required();
  verify_cmd->add_option("max_n,--max-n", verify_max_n,
                         "Largest order (default: bg/main 7, else 8)");
  verify_cmd->add_option("--allowlist", allowlist_path,
                         "JSON file of finding kinds to accept (replaces the built-in list)");
  verify_cmd->add_flag("--timing", timing,
                       "Include runtime_ms (makes output non-reproducible)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 1;
  }

  Output out;
  out.pretty = pretty;
  out.path = output_path;
  int status = 0;
  try {
    if (*classify_cmd)
      status = cmd_classify(sequence_arg, with_oracle, oracle_bound, out);
    else if (*realize_cmd)
      status = cmd_realize(realize_sequence, realize_bound, out);
    else if (*check_cmd)
      status = cmd_check(check_args, out);
    else if (*trace_cmd)
      status = cmd_trace(trace_args, out);
    else if (*enum_cmd)
      status = cmd_enumerate(enum_order, out);
    else if (*cell_cmd)
      status = cmd_enumerate_cell(cell_i, cell_j, out);
    else if (*matrix_cmd)
      status = cmd_matrix(matrix_max_j, matrix_column, out);
    else if (*verify_cmd)
      status = cmd_verify(verify_theorem_name, verify_max_n, allowlist_path, timing, out);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  out.flush();
  return status;
}
