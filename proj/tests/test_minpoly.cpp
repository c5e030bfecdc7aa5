#include "doctest.h"

#include <random>

#include "pjts/minpoly.hpp"
#include "pjts/model.hpp"
#include "zoo.hpp"

using namespace pjts;

TEST_CASE("minimal polynomial degree per case") {
  CHECK(minpoly_degree(build_model("sym:3")) == 3);
  CHECK(minpoly_degree(build_model("cmat:2x2")) == 2);
  CHECK(minpoly_degree(build_model("rect:2x3")) == 2);
  CHECK(minpoly_degree(build_model("sphere:4")) == 2);
}

TEST_CASE("absolute rank matches the classification across the zoo") {
  for (const auto& name : model_zoo()) {
    CAPTURE(name);
    TripleSystem V = build_model(name);
    CHECK_NOTHROW(absolute_rank(V));
  }
}

TEST_CASE("rank-one closed form h = 1 + x y") {
  TripleSystem V = build_model("sym:1");
  Element x(1), y(1);
  x[0] = 0.7; y[0] = -0.4;
  cplx h = h_kernel(V, x, y);
  CHECK(h.real() == doctest::Approx(1 + 0.7 * -0.4).epsilon(1e-10));
  CHECK(std::abs(h.imag()) <= 1e-12);
  CHECK(fundamental_kernel(V, x, y) ==
        doctest::Approx((1 - 0.28) * (1 - 0.28)).epsilon(1e-10));
}

TEST_CASE("sphere closed form h in natural coordinates") {
  TripleSystem V = build_model("sphere:3");
  std::mt19937_64 rng(41);
  std::normal_distribution<double> N(0, 0.6);
  for (int rep = 0; rep < 10; ++rep) {
    Element x(V.dim), y(V.dim);
    for (int i = 0; i < V.dim; ++i) { x[i] = N(rng); y[i] = N(rng); }
    int n = V.dim;
    double expect =
        1 + 2 * x.dot(y) / n + x.squaredNorm() * y.squaredNorm() / (n * n);
    double got = fundamental_kernel(V, x, y);
    CHECK(got == doctest::Approx(expect).epsilon(1e-7));
  }
}

TEST_CASE("complex model h is conjugate symmetric") {
  TripleSystem V = build_model("cmat:2x2");
  std::mt19937_64 rng(43);
  std::normal_distribution<double> N(0, 0.5);
  Element x(V.dim), y(V.dim);
  for (int i = 0; i < V.dim; ++i) { x[i] = N(rng); y[i] = N(rng); }
  cplx hxy = h_kernel(V, x, y);
  cplx hyx = h_kernel(V, y, x);
  CHECK(std::abs(hxy - std::conj(hyx)) <= 1e-8);
}

TEST_CASE("flat minimal polynomial coefficients are symmetric functions") {
  std::mt19937_64 rng(47);
  std::uniform_real_distribution<double> U(0.3, 1.1);
  TripleSystem V = build_model("sym:3");
  double t1 = U(rng), t2 = t1 + 0.4, t3 = t2 + 0.5;
  Element x = t1 * V.frame[0] + t2 * V.frame[1] + t3 * V.frame[2];
  MinPolyResult mp = minpoly_eval(V, x, x);
  double u1 = t1 * t1, u2 = t2 * t2, u3 = t3 * t3;
  CHECK(mp.m[0].real() == doctest::Approx(u1 + u2 + u3).epsilon(1e-9));
  CHECK(mp.m[1].real() ==
        doctest::Approx(u1 * u2 + u1 * u3 + u2 * u3).epsilon(1e-9));
  CHECK(mp.m[2].real() == doctest::Approx(u1 * u2 * u3).epsilon(1e-9));
}

TEST_CASE("perturbation retries recover degenerate pairs") {
  TripleSystem V = build_model("sphere:3");
  // flat points are non-regular for the degree-2r polynomial; the evaluator
  // must fall back to perturbed pairs and still return the right value
  Element x = 0.8 * V.frame[0];
  MinPolyResult mp = minpoly_eval(V, x, x);
  double t2 = 0.64;
  CHECK(mp.m[0].real() == doctest::Approx(2 * t2).epsilon(1e-6));
  CHECK(mp.m[1].real() == doctest::Approx(t2 * t2).epsilon(1e-6));
}

TEST_CASE("h is one when either argument vanishes") {
  for (const auto& name : {"sym:2", "sphere:4"}) {
    TripleSystem V = build_model(name);
    Element z = Element::Zero(V.dim);
    Element x = 0.5 * V.frame[0];
    CHECK(h_kernel(V, x, z) == cplx(1, 0));
    CHECK(h_kernel(V, z, x) == cplx(1, 0));
  }
}
