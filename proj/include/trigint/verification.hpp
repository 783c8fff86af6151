#pragma once

// Per-case verification records shared by the identity checkers, the
// sweeps and the CLI.

#include <json.hpp>

#include <cstddef>
#include <ostream>
#include <string>
#include <vector>

namespace trigint {

struct VerificationCase {
  std::string id;
  std::string exact;  // rendering of the exact/closed-form side
  double numeric = 0;
  double oracle = 0;
  double abs_err = 0;
  double tol = 0;
  bool pass = false;
};

struct VerificationSummary {
  std::size_t total = 0;
  std::size_t passed = 0;
  std::size_t failed = 0;
};

class VerificationReport {
 public:
  /// pass is set to abs_err <= tol.
  void add(std::string id, std::string exact, double numeric, double oracle, double abs_err,
           double tol);
  /// Exact comparison: pass iff `equal`; abs_err is 0 on pass.
  void add_exact(std::string id, std::string exact, double lhs, double rhs, bool equal);
  void merge(const VerificationReport& other);

  const std::vector<VerificationCase>& cases() const { return cases_; }
  VerificationSummary summary() const;
  bool all_passed() const { return summary().failed == 0; }

  nlohmann::json to_json() const;
  /// One line per case plus a summary line.
  void print(std::ostream& os) const;

 private:
  std::vector<VerificationCase> cases_;
};

}  // namespace trigint
