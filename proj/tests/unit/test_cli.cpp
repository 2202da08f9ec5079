#include "doctest.h"

#include <fstream>
#include <sstream>

#include "json.hpp"
#include "qfgl/cli/commands.hpp"
#include "qfgl/cli/expr.hpp"

using namespace qfgl;
using namespace qfgl::cli;

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome invoke(std::vector<std::string> args, const SuiteRegistry& suites = SuiteRegistry::standard()) {
  args.insert(args.begin(), "qfgl");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = main_entry(static_cast<int>(argv.size()), argv.data(), out, err, suites);
  return {code, out.str(), err.str()};
}

std::string eval(const std::string& text) { return evaluate(parse_expr(text)).to_string(); }

}  // namespace

TEST_CASE("expression evaluation") {
  CHECK(eval("qint(3)") == "1 + q + q^2");
  CHECK(eval("1/(1-q)") == "1/(1 - q)");
  CHECK(eval("qfact(3)") == "1 + 2*q + 2*q^2 + q^3");
  CHECK(eval("qint(2)*qint(2)") == "1 + 2*q + q^2");
  CHECK(eval("qbinom(4, 2)") == "1 + q + 2*q^2 + q^3 + q^4");
  CHECK(eval("cyclotomic(6)") == "1 - q + q^2");
  CHECK(eval("adams(1/(1-q), 3)") == "1/(1 - q^3)");
  CHECK(eval("s^2") == "q");
  CHECK(eval("s^-1 + s") == "s^-1 + s");
  CHECK(eval("2^3^2") == "512");
  CHECK(eval("-q^2") == "-q^2");
  CHECK(eval("(-q)^2") == "q^2");
  CHECK(eval("1 - -q") == "1 + q");
  CHECK(eval("q^-2 * q^2") == "1");
}

TEST_CASE("parse errors carry offsets") {
  auto offset_of = [](const std::string& text) -> std::size_t {
    try {
      parse_expr(text);
    } catch (const ParseError& e) {
      return e.offset();
    }
    return std::string::npos;
  };
  CHECK(offset_of("1 + ") == 4);
  CHECK(offset_of("1/(1-q") == 6);
  CHECK(offset_of("q + foo(1)") == 4);
  CHECK(offset_of("qbinom(3)") == 0);
  CHECK(offset_of("q^q") == 2);
  CHECK(offset_of("2 $ 3") == 2);
  CHECK(offset_of("qint(1,)") == 7);
  CHECK_THROWS_AS(evaluate(parse_expr("1/(q-q)")), MathError);
  CHECK_THROWS_AS(evaluate(parse_expr("qint(1/2)")), MathError);
}

TEST_CASE("printing round-trips") {
  for (const char* text : {"1 + q*(2 - s)^3", "-(q + 1)/qint(3)", "adams(q^-1, 2) - --q", "2*-q", "(q^2)^3"}) {
    const Expr e = parse_expr(text);
    CHECK(parse_expr(print(e)) == e);
  }
  for (const char* text : {"(1 + q)/2", "1/(1 - q)", "-1 + q", "q^-1", "s^-1 + s", "(-1 - q)/(1 + q^2)"}) {
    CHECK(eval(text) == text);
  }
}

TEST_CASE("expand with JSON output") {
  const Outcome r = invoke({"expand", "log_chi", "--order", "5", "--format", "json"});
  REQUIRE(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["target"] == "log_chi");
  CHECK(j["orders"]["N"] == 5);
  bool found = false;
  for (const auto& c : j["coefficients"]) {
    if (c["degree"] == 2) {
      CHECK(c["value"] == "(1 + q)/2");
      found = true;
    }
  }
  CHECK(found);

  const auto f = nlohmann::json::parse(invoke({"expand", "f_chi", "--order", "3", "--format", "json"}).out);
  CHECK(f["coefficients"][0]["degree"] == nlohmann::json::array({0, 1}));
  CHECK(f["coefficients"][2]["degree"] == nlohmann::json::array({1, 1}));
  CHECK(f["coefficients"][2]["value"] == "1 + q");
}

TEST_CASE("every expansion target runs") {
  for (const std::string& t : expand_targets()) {
    const Outcome r = invoke({"expand", t, "--order", "4", "--t-order", "3", "--q-order", "8"});
    CHECK_MESSAGE(r.code == 0, t << ": " << r.err);
    CHECK(!r.out.empty());
  }
  const Outcome lambda = invoke({"expand", "lambda_t", "--element", "q/(1-q)", "--t-order", "2", "--q-order", "4"});
  CHECK(lambda.out.find("2\tq^3 + q^4") != std::string::npos);
}

TEST_CASE("verification suites pass") {
  for (const std::string& s : SuiteRegistry::standard().names()) {
    const Outcome r = invoke({"verify", s, "--order", "6", "--q-order", "12"});
    CHECK_MESSAGE(r.code == 0, s << "\n" << r.out);
  }
  CHECK(invoke({"verify", "fgl-axioms", "--order", "10"}).code == 0);
}

TEST_CASE("eval, diagram, table verbs") {
  const Outcome e = invoke({"eval", "qint(2)*qint(2)"});
  CHECK(e.code == 0);
  CHECK(e.out == "1 + 2*q + q^2\n");
  const Outcome d = invoke({"diagram", "1", "2"});
  CHECK(d.code == 0);
  CHECK(d.out.find("1 + 2*q + 2*q^2 + q^3") != std::string::npos);
  const Outcome t = invoke({"table", "orientation", "--order", "3"});
  CHECK(t.code == 0);
  CHECK(t.out.find("1 + q + q^2 + q^3") != std::string::npos);
  CHECK(invoke({"table", "cromulence", "--format", "json"}).code == 0);
}

TEST_CASE("catalog files") {
  const std::string path = "qfgl_test_catalog.txt";
  {
    std::ofstream f(path);
    f << "quadric 1 1\nthreefold 1 1 1\n";
  }
  const Outcome ok = invoke({"diagram", "--catalog", path});
  CHECK(ok.code == 0);
  CHECK(ok.out.find("threefold: hodge = sl2") != std::string::npos);
  {
    std::ofstream f(path);
    f << "broken one\n";
  }
  CHECK(invoke({"diagram", "--catalog", path}).code == 2);
  std::remove(path.c_str());
  CHECK(invoke({"diagram", "--catalog", "/nonexistent/catalog"}).code == 2);
}

TEST_CASE("usage errors exit with 2") {
  CHECK(invoke({}).code == 2);
  CHECK(invoke({"expand", "nonsense"}).code == 2);
  CHECK(invoke({"verify", "nonsense"}).code == 2);
  CHECK(invoke({"expand", "log_chi", "--order", "0"}).code == 2);
  CHECK(invoke({"expand", "log_chi", "--format", "xml"}).code == 2);
  CHECK(invoke({"bogus"}).code == 2);
  const Outcome bad = invoke({"eval", "1 + "});
  CHECK(bad.code == 2);
  CHECK(bad.out.empty());
  CHECK(bad.err.find("offset 4") != std::string::npos);
  CHECK(invoke({"eval", "1/0"}).code == 2);
  CHECK(invoke({"expand", "lambda_t", "--element", "1/2"}).code == 2);
  CHECK(invoke({"--help"}).code == 0);
}

TEST_CASE("a corrupted suite forces a non-zero exit") {
  SuiteRegistry suites = SuiteRegistry::standard();
  suites.add("corrupted", [](const Command&) {
    VerificationReport r;
    r.add({"sound check", {1}, true, {}, {}});
    r.add({"tampered fixture", {3}, false, {2}, "coefficient of q^2: 1 vs 2"});
    return r;
  });
  const Outcome r = invoke({"verify", "corrupted"}, suites);
  CHECK(r.code == 1);
  CHECK(r.out.find("FAIL  tampered fixture") != std::string::npos);
  const auto j = nlohmann::json::parse(invoke({"verify", "corrupted", "--format", "json"}, suites).out);
  CHECK(j["passed"] == false);
  CHECK(j["checks"][1]["failing_index"] == nlohmann::json::array({2}));
}
