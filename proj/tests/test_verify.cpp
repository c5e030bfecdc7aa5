#include "doctest.h"

#include <algorithm>

#include "pjts/verify.hpp"

using namespace pjts;

TEST_CASE("suite registry") {
  const auto& names = suite_names();
  for (const char* s : {"axioms", "peirce", "kernels", "minpoly", "bernstein",
                        "analysis", "all"})
    CHECK(std::find(names.begin(), names.end(), s) != names.end());
}

TEST_CASE("axioms suite passes on small models") {
  for (const auto& name : {"sym:1", "sym:2", "sphere:3"}) {
    CAPTURE(name);
    TripleSystem V = build_model(name);
    SuiteReport rep = run_suite(V, "axioms");
    CHECK(rep.pass());
    CHECK(rep.checks.size() >= 3);
    for (const auto& c : rep.checks) {
      CHECK(!c.check.empty());
      CHECK(!c.identity.empty());
      CHECK(c.pass == (c.residual <= c.tolerance));
    }
  }
}

TEST_CASE("full run on a rank-one model") {
  TripleSystem V = build_model("sym:1");
  SuiteReport rep = run_suite(V, "all");
  CHECK(rep.pass());
  // records come back sorted by check name for stable output
  for (size_t i = 1; i < rep.checks.size(); ++i)
    CHECK(rep.checks[i - 1].check <= rep.checks[i].check);
}

TEST_CASE("unknown suite names are configuration errors") {
  TripleSystem V = build_model("sym:1");
  CHECK_THROWS_AS(run_suite(V, "nosuch"), ConfigError);
}

TEST_CASE("tolerance override propagates to every record") {
  TripleSystem V = build_model("sym:2");
  SuiteOptions opt;
  opt.tol = 0.5;
  SuiteReport rep = run_suite(V, "axioms", opt);
  for (const auto& c : rep.checks) CHECK(c.tolerance == 0.5);
}

TEST_CASE("seed override is recorded") {
  TripleSystem V = build_model("sym:2");
  SuiteOptions opt;
  opt.seed = 7;
  SuiteReport rep = run_suite(V, "kernels", opt);
  CHECK(rep.seed == 7);
  CHECK(rep.pass());
}
