#include "trigint/verification.hpp"

#include <cmath>
#include <iomanip>
#include <limits>
#include <sstream>

namespace trigint {

void VerificationReport::add(std::string id, std::string exact, double numeric, double oracle,
                             double abs_err, double tol) {
  // NaN errors fail.
  const bool pass = abs_err <= tol;
  cases_.push_back({std::move(id), std::move(exact), numeric, oracle, abs_err, tol, pass});
}

void VerificationReport::add_exact(std::string id, std::string exact, double lhs, double rhs,
                                   bool equal) {
  double err = 0;
  if (!equal) {
    err = std::fabs(lhs - rhs);
    if (!(err > 0)) err = std::numeric_limits<double>::denorm_min();
  }
  cases_.push_back({std::move(id), std::move(exact), lhs, rhs, err, 0.0, equal});
}

void VerificationReport::merge(const VerificationReport& other) {
  cases_.insert(cases_.end(), other.cases_.begin(), other.cases_.end());
}

VerificationSummary VerificationReport::summary() const {
  VerificationSummary s;
  s.total = cases_.size();
  for (const auto& c : cases_) (c.pass ? s.passed : s.failed)++;
  return s;
}

nlohmann::json VerificationReport::to_json() const {
  nlohmann::json cases = nlohmann::json::array();
  for (const auto& c : cases_) {
    cases.push_back({{"id", c.id},
                     {"exact", c.exact},
                     {"numeric", c.numeric},
                     {"oracle", c.oracle},
                     {"abs_err", c.abs_err},
                     {"tol", c.tol},
                     {"pass", c.pass}});
  }
  const auto s = summary();
  return {{"cases", cases}, {"summary", {{"total", s.total}, {"passed", s.passed}, {"failed", s.failed}}}};
}

void VerificationReport::print(std::ostream& os) const {
  std::ostringstream line;
  for (const auto& c : cases_) {
    line.str("");
    line << (c.pass ? "PASS " : "FAIL ") << c.id << "  exact=" << c.exact
         << std::setprecision(17) << "  numeric=" << c.numeric << "  oracle=" << c.oracle
         << std::setprecision(3) << "  abs_err=" << c.abs_err << "  tol=" << c.tol;
    os << line.str() << '\n';
  }
  const auto s = summary();
  os << "summary: total=" << s.total << " passed=" << s.passed << " failed=" << s.failed << '\n';
}

}  // namespace trigint
