#pragma once

#include <functional>
#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "qfgl/report.hpp"

namespace qfgl::cli {

struct Command {
  // expand | verify | eval | diagram | table
  std::string verb;
  // Expansion target, suite, expression or table name.
  std::string target;
  int order = 10;    // N
  int t_order = 6;   // Nt
  int q_order = 30;  // Nq
  std::string format = "plain";
  // Element for lambda_t and the Newton part of the adams suite.
  std::string element = "1/(1 - q)";
  std::string catalog;
  std::vector<int> factors;
};

using Suite = std::function<VerificationReport(const Command&)>;

class SuiteRegistry {
 public:
  static SuiteRegistry standard();

  void add(std::string name, Suite suite) { suites_[std::move(name)] = std::move(suite); }
  const Suite* find(const std::string& name) const;
  std::vector<std::string> names() const;

 private:
  std::map<std::string, Suite> suites_;
};

const std::vector<std::string>& expand_targets();
const std::vector<std::string>& table_names();

// Exit code: 0 all checks pass, 1 some check fails, 2 usage error.
int run(const Command& cmd, std::ostream& out, std::ostream& err, const SuiteRegistry& suites);
// Parses argv (argv[0] is the program name) and runs the command.
int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err,
               const SuiteRegistry& suites = SuiteRegistry::standard());

}  // namespace qfgl::cli
