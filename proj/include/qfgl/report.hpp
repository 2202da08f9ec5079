#pragma once

#include <optional>
#include <string>
#include <vector>

namespace qfgl {

struct CheckResult {
  std::string name;
  // Truncation order(s) actually checked, e.g. {12} or {6, 8}.
  std::vector<int> order;
  bool passed = false;
  // Exponents of the first failing coefficient (graded order); empty on success.
  std::vector<int> failing_index;
  std::string detail;

  std::optional<int> failing_degree() const;
};

class VerificationReport {
 public:
  void add(CheckResult check) { checks_.push_back(std::move(check)); }
  void append(const VerificationReport& other);
  bool all_passed() const;
  const std::vector<CheckResult>& checks() const { return checks_; }
  // nullptr when absent.
  const CheckResult* find(const std::string& name) const;

 private:
  std::vector<CheckResult> checks_;
};

std::string order_string(const std::vector<int>& order);

}  // namespace qfgl
