#ifndef THREECONN_AUDIT_HPP
#define THREECONN_AUDIT_HPP

#include <set>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "threeconn/graph.hpp"

namespace threeconn {

// One fact that came out different from the claimed value. `kind` is a stable
// machine-readable tag, `input` identifies the object that was checked, and
// `expected` / `observed` hold the claimed and the measured value.
struct AuditViolation {
  std::string kind;
  nlohmann::json input;
  nlohmann::json expected;
  nlohmann::json observed;
  bool allowlisted = false;
};

// Set of violation kinds that are understood and accepted. The built-in list
// covers the discrepancies this project documents; extra kinds can be loaded
// from a JSON file of the form {"allow": [{"kind": "...", "reason": "..."}]}.
class Allowlist {
 public:
  static Allowlist empty();
  static Allowlist builtin();
  static Allowlist from_json(const nlohmann::json& doc);
  static Allowlist from_file(const std::string& path);

  bool allows(const std::string& kind) const { return kinds_.count(kind) != 0; }
  const std::set<std::string>& kinds() const { return kinds_; }
  void add(const std::string& kind) { kinds_.insert(kind); }

 private:
  std::set<std::string> kinds_;
};

// Outcome of auditing one claim family up to order / length max_n.
struct AuditReport {
  std::string theorem;
  int max_n = 0;
  long long verified_count = 0;
  std::vector<AuditViolation> violations;
  nlohmann::json details;
  double runtime_ms = 0.0;

  bool consistent() const { return violations.empty(); }
  bool clean_or_allowlisted() const;
  // "consistent" when nothing failed, "known-findings" when every failure is
  // allowlisted, "violations" otherwise.
  std::string verdict() const;
};

// Audits, one per claim family. Each one recomputes ground truth with the
// subset-search oracles and compares it against the closed forms and the
// production predicates. Order bounds: bg <= 7, the rest <= 8.
AuditReport verify_bg(int max_n, const Allowlist& allow = Allowlist::builtin());
AuditReport verify_matrix(int max_n, const Allowlist& allow = Allowlist::builtin());
AuditReport verify_main(int max_n, const Allowlist& allow = Allowlist::builtin());
AuditReport verify_necessary(int max_n, const Allowlist& allow = Allowlist::builtin());
AuditReport verify_corollary(int max_n, const Allowlist& allow = Allowlist::builtin());

// Dispatch by name: "bg", "matrix", "main", "necessary", "corollary".
AuditReport verify_theorem(std::string_view name, int max_n,
                           const Allowlist& allow = Allowlist::builtin());

}  // namespace threeconn

#endif  // THREECONN_AUDIT_HPP
