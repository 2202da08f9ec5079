#include "qfgl/report.hpp"

#include <algorithm>
#include <numeric>

namespace qfgl {

std::optional<int> CheckResult::failing_degree() const {
  if (passed || failing_index.empty()) return std::nullopt;
  return std::accumulate(failing_index.begin(), failing_index.end(), 0);
}

void VerificationReport::append(const VerificationReport& other) {
  checks_.insert(checks_.end(), other.checks_.begin(), other.checks_.end());
}

bool VerificationReport::all_passed() const {
  return std::all_of(checks_.begin(), checks_.end(), [](const CheckResult& c) { return c.passed; });
}

const CheckResult* VerificationReport::find(const std::string& name) const {
  auto it = std::find_if(checks_.begin(), checks_.end(), [&](const CheckResult& c) { return c.name == name; });
  return it == checks_.end() ? nullptr : &*it;
}

std::string order_string(const std::vector<int>& order) {
  if (order.size() == 1) return std::to_string(order[0]);
  std::string out = "(";
  for (std::size_t i = 0; i < order.size(); ++i) {
    if (i) out += ", ";
    out += std::to_string(order[i]);
  }
  return out + ")";
}

}  // namespace qfgl
