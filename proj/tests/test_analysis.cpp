#include "doctest.h"

#include <algorithm>
#include <cmath>

#include "pjts/analysis.hpp"
#include "pjts/model.hpp"
#include "zoo.hpp"

using namespace pjts;

TEST_CASE("convergence thresholds") {
  Threshold t = threshold(build_model("sym:1"));
  CHECK(t.lambda_min == Rational(0, 1));
  CHECK(t.s_min == Rational(-1, 2));

  t = threshold(build_model("sym:2"));
  CHECK(t.lambda_min == Rational(1, 6));
  CHECK(t.s_min == Rational(-1, 2));

  t = threshold(build_model("sphere:3"));
  CHECK(t.lambda_min == Rational(0, 1));
  CHECK(t.s_min == Rational(-3, 2));

  t = threshold(build_model("cmat:2x2"));
  CHECK(t.lambda_min == Rational(1, 4));
  CHECK(t.s_min == Rational(-1, 1));
}

TEST_CASE("parameter change is consistent with the threshold") {
  for (const auto& name : model_zoo()) {
    CAPTURE(name);
    TripleSystem V = build_model(name);
    Threshold t = threshold(V);
    CHECK(lambda_of_s(V, t.s_min) == t.lambda_min);
    // lambda = 3/4 maps to s = p/8 and back
    int p = V.table.genus();
    CHECK(s_of_lambda(V, 0.75) == doctest::Approx(p / 8.0).epsilon(1e-14));
    CHECK(lambda_of_s(V, Rational(p, 8)) == Rational(3, 4));
  }
}

TEST_CASE("Gauss-Jacobi quadrature integrates moments exactly") {
  std::vector<double> x, w;
  gauss_jacobi(8, 0.0, 0.0, x, w);
  double sum = 0, m2 = 0;
  for (size_t i = 0; i < x.size(); ++i) { sum += w[i]; m2 += w[i] * x[i] * x[i]; }
  CHECK(sum == doctest::Approx(2.0).epsilon(1e-13));
  CHECK(m2 == doctest::Approx(2.0 / 3).epsilon(1e-12));

  // weight (1-t)^1.5 (1+t)^0.5: total mass 2^3 B(2.5, 1.5)
  gauss_jacobi(12, 1.5, 0.5, x, w);
  double mass = 0, mean = 0;
  for (size_t i = 0; i < x.size(); ++i) { mass += w[i]; mean += w[i] * x[i]; }
  double B = std::exp(std::lgamma(2.5) + std::lgamma(1.5) - std::lgamma(4.0));
  CHECK(mass == doctest::Approx(8 * B).epsilon(1e-12));
  // first moment of the Jacobi weight: mass * (b-a)/(a+b+2)
  CHECK(mean == doctest::Approx(mass * (0.5 - 1.5) / 4.0).epsilon(1e-12));
}

TEST_CASE("closed form matches quadrature in rank one") {
  for (const auto& name : {"sym:1", "sphere:3", "sphere:4", "sphere:5"}) {
    CAPTURE(name);
    TripleSystem V = build_model(name);
    double lmin = threshold(V).lambda_min.value();
    for (double off : {0.3, 0.8, 1.6}) {
      double lam = lmin + off;
      double numeric = c_lambda_numeric(V, lam, 200);
      double gamma = c_lambda_gamma(V, lam);
      CHECK(numeric == doctest::Approx(gamma).epsilon(1e-6));
    }
  }
}

TEST_CASE("Monte Carlo estimate is in the right ballpark") {
  TripleSystem V = build_model("sym:1");
  double lam = threshold(V).lambda_min.value() + 0.9;
  double mc = c_lambda_numeric(V, lam, 200000, QuadMethod::MonteCarlo, 7);
  double exact = c_lambda_gamma(V, lam);
  CHECK(std::abs(mc - exact) / exact < 0.05);
}

TEST_CASE("integral diverges at the threshold") {
  for (const auto& name : {"sym:1", "sphere:3"}) {
    CAPTURE(name);
    TripleSystem V = build_model(name);
    double lmin = threshold(V).lambda_min.value();
    CHECK(selberg_convergent(V, lmin + 0.2));
    CHECK_FALSE(selberg_convergent(V, lmin));
    CHECK_FALSE(selberg_convergent(V, lmin - 0.3));
    double v1 = c_lambda_numeric(V, lmin + 0.2, 400);
    double v2 = c_lambda_numeric(V, lmin + 0.02, 400);
    double v3 = c_lambda_numeric(V, lmin + 0.0015, 400);
    CHECK(v2 > v1);
    CHECK(v3 > 10 * v2);
  }
}

TEST_CASE("pole families per model") {
  auto fams = pole_ledger(build_model("sym:1")).families;
  REQUIRE(fams.size() == 1);
  CHECK(fams[0].first == Rational(-1, 2));
  CHECK(fams[0].step == Rational(1, 2));

  fams = pole_ledger(build_model("sym:2")).families;
  REQUIRE(fams.size() == 2);
  CHECK(fams[1].first == Rational(-3, 4));
  CHECK(fams[1].step == Rational(1, 2));

  fams = pole_ledger(build_model("sym:3")).families;
  REQUIRE(fams.size() == 2);
  CHECK(fams[1].first == Rational(-3, 4));

  fams = pole_ledger(build_model("herm:2")).families;
  REQUIRE(fams.size() == 1);
  CHECK(fams[0].first == Rational(-1, 2));

  fams = pole_ledger(build_model("cmat:1x1")).families;
  REQUIRE(fams.size() == 1);
  CHECK(fams[0].first == Rational(-1, 1));
  CHECK(fams[0].step == Rational(1, 1));

  fams = pole_ledger(build_model("cmat:2x2")).families;
  REQUIRE(fams.size() == 1);
  CHECK(fams[0].first == Rational(-1, 1));

  fams = pole_ledger(build_model("rect:2x3")).families;
  REQUIRE(fams.size() == 1);
  CHECK(fams[0].first == Rational(-1, 2));

  fams = pole_ledger(build_model("spin:2,3")).families;
  REQUIRE(fams.size() == 2);
  CHECK(fams[1].first == Rational(-5, 4));
  CHECK(fams[1].step == Rational(1, 2));

  fams = pole_ledger(build_model("sphere:3")).families;
  REQUIRE(fams.size() == 1);
  CHECK(fams[0].first == Rational(-3, 2));
  CHECK(fams[0].step == Rational(1, 1));

  CHECK(pole_ledger(build_model("sphere:4")).families[0].first ==
        Rational(-2, 1));
  CHECK(pole_ledger(build_model("sphere:5")).families[0].first ==
        Rational(-5, 2));
}

TEST_CASE("first pole sits at minus c over two") {
  for (const auto& name : model_zoo()) {
    CAPTURE(name);
    TripleSystem V = build_model(name);
    PoleLedger L = pole_ledger(V);
    Rational top = L.families[0].first;
    for (const auto& f : L.families)
      if (top < f.first) top = f.first;
    CHECK(top == Rational(-V.table.c, 2));
    CHECK(top == L.s_min);
  }
}

TEST_CASE("pole enumeration merges and sorts") {
  PoleLedger L = pole_ledger(build_model("sym:2"));
  auto ps = L.poles_down_to(Rational(-2, 1));
  std::vector<Rational> expect = {
      Rational(-1, 2), Rational(-3, 4), Rational(-1, 1), Rational(-5, 4),
      Rational(-3, 2), Rational(-7, 4), Rational(-2, 1)};
  REQUIRE(ps.size() == expect.size());
  for (size_t i = 0; i < ps.size(); ++i) CHECK(ps[i] == expect[i]);
}

TEST_CASE("ledger poles descend from zeros of the b factor") {
  for (const auto& name : model_zoo()) {
    CAPTURE(name);
    TripleSystem V = build_model(name);
    PoleLedger L = pole_ledger(V);
    Rational low(-6, 1);
    auto listed = L.poles_down_to(low);
    auto candidates = poles_from_b(V, low);
    for (const auto& s : listed) {
      CAPTURE(s.str());
      CHECK(std::find(candidates.begin(), candidates.end(), s) !=
            candidates.end());
    }
  }
}

TEST_CASE("descent identity in rank one") {
  TripleSystem V = build_model("sym:1");
  for (double s : {1.5, 2.0, 3.0}) {
    CAPTURE(s);
    CHECK(verify_descent(V, s) <= 1e-5);
  }
}
