#include "doctest.h"

#include <cmath>
#include <random>

#include "pjts/kernels.hpp"
#include "pjts/minpoly.hpp"
#include "pjts/model.hpp"
#include "pjts/operators.hpp"
#include "zoo.hpp"

using namespace pjts;

namespace {
Element flat_point(const TripleSystem& V, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> U(0.2, 1.2);
  Element x = Element::Zero(V.dim);
  for (int j = 0; j < V.table.r; ++j)
    x += (rng() % 2 ? 1.0 : -1.0) * U(rng) * V.frame[j];
  return x;
}
}  // namespace

TEST_CASE("canonical kernel closed form on flats") {
  std::mt19937_64 rng(101);
  std::uniform_real_distribution<double> U(0.2, 1.2);
  for (const auto& name : model_zoo()) {
    CAPTURE(name);
    TripleSystem V = build_model(name);
    for (int rep = 0; rep < 20; ++rep) {
      Element x = Element::Zero(V.dim);
      double expect = 1;
      for (int j = 0; j < V.table.r; ++j) {
        double t = U(rng);
        x += t * V.frame[j];
        expect *= 1 + t * t;
      }
      expect = std::pow(expect, double(V.table.genus()));
      CHECK(canonical_kernel(V, x, x) ==
            doctest::Approx(expect).epsilon(1e-9));
    }
  }
}

TEST_CASE("cmat:1x1 canonical kernel at the unit point") {
  TripleSystem V = build_model("cmat:1x1");
  Element e = V.frame[0];
  // c(z, z) = (1 + |z|^2)^p with p = 4 at z = 1
  CHECK(canonical_kernel(V, e, e) == doctest::Approx(16.0).epsilon(1e-12));
  cplx cc = canonical_kernel_complex(V, e, e);
  CHECK(cc.real() == doctest::Approx(4.0).epsilon(1e-12));
  CHECK(std::abs(cc.imag()) <= 1e-12);
}

TEST_CASE("c equals k to the genus over two across the zoo") {
  for (const auto& name : model_zoo()) {
    CAPTURE(name);
    TripleSystem V = build_model(name);
    CHECK(verify_power_identity(V, 100, 42) <= 1e-8);
  }
}

TEST_CASE("power identity pointwise near the frame") {
  std::mt19937_64 rng(103);
  std::normal_distribution<double> N(0, 0.3);
  for (const auto& name : {"sym:2", "cmat:2x2", "sphere:4"}) {
    CAPTURE(name);
    TripleSystem V = build_model(name);
    Element x(V.dim), y(V.dim);
    for (int i = 0; i < V.dim; ++i) { x[i] = N(rng); y[i] = N(rng); }
    double c = canonical_kernel(V, x, y);
    double k = fundamental_kernel(V, x, y);
    double p = V.table.genus();
    CHECK(c == doctest::Approx(std::pow(k, p / 2.0)).epsilon(1e-8));
  }
}

TEST_CASE("canonical kernel is covariant under triple automorphisms") {
  std::mt19937_64 rng(107);
  std::normal_distribution<double> N(0, 0.4);
  for (const auto& name : {"sym:2", "herm:2", "spin:2,3"}) {
    CAPTURE(name);
    TripleSystem V = build_model(name);
    Element u(V.dim), v(V.dim), x(V.dim), y(V.dim);
    for (int i = 0; i < V.dim; ++i) {
      u[i] = N(rng); v[i] = N(rng); x[i] = N(rng); y[i] = N(rng);
    }
    CHECK(covariance_check(V, u, v, x, y) <= 1e-8);
  }
}

TEST_CASE("compact kernel pair agrees with the torus formula on flats") {
  std::mt19937_64 rng(109);
  for (const auto& name : {"sym:2", "sphere:3"}) {
    CAPTURE(name);
    TripleSystem V = build_model(name);
    std::uniform_real_distribution<double> A(-1.2, 1.2);
    std::vector<double> theta(V.table.r);
    for (int j = 0; j < V.table.r; ++j) theta[j] = A(rng);
    Element x = Element::Zero(V.dim);
    for (int j = 0; j < V.table.r; ++j) x += std::tan(theta[j]) * V.frame[j];
    // against the origin: c(x, 0) = 1, so the normalized pair kernel
    // collapses to (prod cos^2 theta_j)^(p/2)
    double lhs = compact_kernel(V, theta);
    double rhs = compact_kernel_pair(V, x, Element(Element::Zero(V.dim)));
    CHECK(lhs == doctest::Approx(rhs).epsilon(1e-9));
  }
}

TEST_CASE("compact kernel vanishes at antipodal angles") {
  TripleSystem V = build_model("sym:2");
  double v0 = compact_kernel(V, {M_PI / 2, 0.3});
  CHECK(std::abs(v0) <= 1e-9);
}

TEST_CASE("invariant density is positive on generic flat points") {
  std::mt19937_64 rng(113);
  for (const auto& name : {"sym:2", "herm:2"}) {
    TripleSystem V = build_model(name);
    Element x = flat_point(V, rng);
    CHECK(invariant_density(V, x) > 0);
  }
}
