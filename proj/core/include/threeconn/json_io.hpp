#ifndef THREECONN_JSON_IO_HPP
#define THREECONN_JSON_IO_HPP

#include <nlohmann/json.hpp>

#include "threeconn/audit.hpp"
#include "threeconn/bg_ops.hpp"
#include "threeconn/connectivity.hpp"
#include "threeconn/degree_sequences.hpp"
#include "threeconn/graph.hpp"
#include "threeconn/partition_matrix.hpp"

namespace threeconn {

// Wire formats. Every serializer emits deterministic output for equal inputs;
// every parser validates shape and throws Error(Errc::invalid_argument) or a
// more specific code on bad documents.

nlohmann::json to_json(const MatrixIndex& idx);
MatrixIndex matrix_index_from_json(const nlohmann::json& doc);

nlohmann::json to_json(const BgStep& step);
BgStep step_from_json(const nlohmann::json& doc);

nlohmann::json to_json(const BgTrace& trace);
BgTrace trace_from_json(const nlohmann::json& doc);

// {"max_order": N, "cells": [{"i": .., "j": .., "graphs": ["graph6", ...]}]}
// with cells in column-major order and each graph list sorted.
nlohmann::json to_json(const Catalog& catalog);
Catalog catalog_from_json(const nlohmann::json& doc);

nlohmann::json to_json(const Classification& c);

nlohmann::json to_json(const PathsWitness& witness);
nlohmann::json to_json(const CutWitness& witness);

nlohmann::json to_json(const AuditViolation& violation);
// runtime_ms is emitted only on request so that default output is
// byte-for-byte reproducible across runs.
nlohmann::json to_json(const AuditReport& report, bool include_runtime = false);

}  // namespace threeconn

#endif  // THREECONN_JSON_IO_HPP
