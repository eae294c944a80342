#pragma once

#include <cmath>
#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace latwig {

using Witness = std::vector<std::int64_t>;

/// Outcome of one condition check. max_violation is recorded even on pass;
/// witness is the first index tuple (in the check's fixed iteration order)
/// whose violation exceeded the tolerance.
struct CheckResult {
  std::string name;
  bool pass = true;
  double max_violation = 0.0;
  std::optional<Witness> witness;
};

/// Accumulates violations in iteration order.
class ViolationTracker {
 public:
  ViolationTracker(std::string name, double tolerance) : name_(std::move(name)), tolerance_(tolerance) {}

  template <class WitnessFn>
  void observe(double violation, WitnessFn&& make_witness) {
    if (std::isnan(violation)) violation = std::numeric_limits<double>::infinity();
    if (violation > max_) max_ = violation;
    if (!witness_ && violation > tolerance_) witness_ = make_witness();
  }

  /// Folds in a result computed over a later slice of the iteration order.
  void merge(const CheckResult& later);

  CheckResult result() const;

 private:
  std::string name_;
  double tolerance_;
  double max_ = 0.0;
  std::optional<Witness> witness_;
};

struct ConditionReport {
  int n = 0;
  double tolerance = 0.0;
  std::vector<CheckResult> checks;

  void add(CheckResult c) { checks.push_back(std::move(c)); }
  void add(const std::vector<CheckResult>& cs) { checks.insert(checks.end(), cs.begin(), cs.end()); }

  const CheckResult* find(std::string_view name) const;
  /// Throws std::out_of_range for unknown names.
  const CheckResult& at(std::string_view name) const;
  bool all_pass() const;
  std::vector<std::string> failed() const;
};

}  // namespace latwig
