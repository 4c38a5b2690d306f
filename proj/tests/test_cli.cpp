#include <doctest.h>

#include <cstdlib>
#include <nlohmann/json.hpp>
#include <sstream>

#include "commands.hpp"

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome invoke(std::vector<std::string> args) {
  args.insert(args.begin(), "lgh");
  std::vector<char*> argv;
  for (auto& a : args) argv.push_back(a.data());
  std::ostringstream out;
  std::ostringstream err;
  const int code = lgh::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("groups listing") {
  const Outcome o = invoke({"groups"});
  CHECK(o.code == 0);
  CHECK(std::count(o.out.begin(), o.out.end(), '\n') == 18);
  CHECK(o.out.find("glc     2n^2                -2n") != std::string::npos);
  CHECK(o.out.find("sostar  n(2n-1)") != std::string::npos);
}

TEST_CASE("table cases cover the desk parameters") {
  const auto cases = lgh::cli::table_cases();
  CHECK(cases.size() == 41);
}

TEST_CASE("exit codes") {
  CHECK(invoke({"verify", "--group", "glc", "--n", "2"}).code == 0);
  CHECK(invoke({"verify-tables", "--group", "slr", "--tol", "1e-17"}).code == 1);
  CHECK(invoke({"verify", "--group", "nope"}).code == 2);
  CHECK(invoke({"verify"}).code == 2);
  CHECK(invoke({"verify", "--group", "slc", "--n", "1"}).code == 2);
  CHECK(invoke({"verify", "--group", "glc", "--samples", "0"}).code == 2);
  CHECK(invoke({"verify", "--group", "glc", "--format", "xml"}).code == 2);
  CHECK(invoke({"--bogus"}).code == 2);
  CHECK(invoke({}).code == 2);
  CHECK(invoke({"verify", "--group", "soc", "--n", "2", "--json-params",
                R"({"v": [1, 1], "members": [{"a": [1, 0]}]})"})
            .code == 2);
  CHECK(invoke({"pharm", "--group", "glr", "--n", "1", "--json-params",
                R"({"v": [-1], "members": [{"a": [1]}]})"})
            .code == 3);
  CHECK(invoke({"morphism", "--group", "glc", "--n", "2"}).code == 2);
}

TEST_CASE("pharm output carries the construction") {
  const Outcome o = invoke({"pharm", "--group", "glc", "--n", "2", "--power", "2"});
  REQUIRE(o.code == 0);
  const auto doc = nlohmann::json::parse(o.out);
  CHECK(doc["phi_p"].size() == 1);
  CHECK(doc["tau_chain"].size() == 3);
  CHECK(doc["tau_chain"][2].empty());
  CHECK(doc["report"]["results"][0]["tests"][0]["pass"] == true);
  CHECK(invoke({"pharm", "--group", "glc", "--n", "2", "--power", "4"}).code == 0);
  CHECK(invoke({"pharm", "--group", "slc", "--n", "2", "--power", "3"}).code == 0);
  CHECK(invoke({"pharm", "--group", "u", "--n", "2", "--power", "1", "--c1", "1/2,1", "--c2", "3"})
            .code == 0);
  CHECK(invoke({"pharm", "--group", "glc", "--c1", "0", "--c2", "0"}).code == 2);
}

TEST_CASE("morphism command") {
  const std::string fam = R"({"v": [1, 0], "members": [{"a": [1, 0]}, {"a": [0, 1]}]})";
  const std::string p = R"({"degree": 1, "terms": [{"powers": [1, 0], "coeff": [1, 0]}]})";
  const std::string q = R"({"degree": 1, "terms": [{"powers": [0, 1], "coeff": [1, 0]}]})";
  const Outcome o = invoke({"morphism", "--group", "glc", "--n", "2", "--json-params", fam,
                            "--numerator", p, "--denominator", q, "--format", "csv"});
  CHECK(o.code == 0);
  CHECK(o.out.find("harmonic_morphism") != std::string::npos);
  CHECK(invoke({"morphism", "--group", "glc", "--n", "2", "--json-params", fam, "--numerator", p,
                "--denominator", p})
            .code == 2);
}

TEST_CASE("determinism and the seed variable") {
  const Outcome a = invoke({"verify-tables", "--samples", "5"});
  const Outcome b = invoke({"verify-tables", "--samples", "5"});
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  const Outcome c = invoke({"verify-tables", "--samples", "5", "--seed", "7"});
  CHECK(c.code == 0);
  CHECK(c.out != a.out);

  setenv("LGH_SEED", "7", 1);
  const Outcome d = invoke({"verify-tables", "--samples", "5"});
  setenv("LGH_SEED", "not-a-number", 1);
  const Outcome e = invoke({"groups"});
  unsetenv("LGH_SEED");
  CHECK(d.out == c.out);
  CHECK(e.code == 2);
}
