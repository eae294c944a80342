#include "latwig/report.hpp"

#include <algorithm>
#include <stdexcept>

namespace latwig {

void ViolationTracker::merge(const CheckResult& later) {
  max_ = std::max(max_, later.max_violation);
  if (!witness_ && later.witness) witness_ = later.witness;
}

CheckResult ViolationTracker::result() const {
  return CheckResult{name_, !witness_.has_value() && max_ <= tolerance_, max_, witness_};
}

const CheckResult* ConditionReport::find(std::string_view name) const {
  const auto it = std::find_if(checks.begin(), checks.end(), [&](const CheckResult& c) { return c.name == name; });
  return it == checks.end() ? nullptr : &*it;
}

const CheckResult& ConditionReport::at(std::string_view name) const {
  if (const CheckResult* c = find(name)) return *c;
  throw std::out_of_range("no check named " + std::string(name));
}

bool ConditionReport::all_pass() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.pass; });
}

std::vector<std::string> ConditionReport::failed() const {
  std::vector<std::string> out;
  for (const auto& c : checks)
    if (!c.pass) out.push_back(c.name);
  return out;
}

}  // namespace latwig
