#include "doctest.h"

#include <random>

#include "pjts/model.hpp"
#include "pjts/operators.hpp"
#include "zoo.hpp"

using namespace pjts;

namespace {
Element randn(const TripleSystem& V, std::mt19937_64& rng, double s = 1.0) {
  std::normal_distribution<double> N(0, s);
  Element x(V.dim);
  for (int i = 0; i < V.dim; ++i) x[i] = N(rng);
  return x;
}
}  // namespace

TEST_CASE("L and Q agree with the triple product") {
  std::mt19937_64 rng(17);
  for (const auto& name : model_zoo()) {
    CAPTURE(name);
    TripleSystem V = build_model(name);
    Element x = randn(V, rng), y = randn(V, rng), z = randn(V, rng);
    CHECK((l_op(V, x, y) * z - V.triple(x, y, z)).norm() <= 1e-12 * x.norm());
    CHECK((q_op(V, x) * y - V.triple(x, y, x)).norm() <= 1e-12);
  }
}

TEST_CASE("trace-form orthonormal coordinates make transposes adjoints") {
  std::mt19937_64 rng(19);
  for (const auto& name : model_zoo()) {
    CAPTURE(name);
    TripleSystem V = build_model(name);
    Element x = randn(V, rng), y = randn(V, rng);
    // <{x,y,u}, v> = <u, {y,x,v}> becomes L(x,y)^T = L(y,x)
    CHECK((l_op(V, x, y).transpose() - l_op(V, y, x)).norm() <= 1e-10);
    // trace form in these coordinates is the dot product
    CHECK(trace_form(V, x, y) == doctest::Approx(x.dot(y)).epsilon(1e-10));
  }
}

TEST_CASE("Bergman operators combine L and Q correctly") {
  std::mt19937_64 rng(23);
  TripleSystem V = build_model("sym:2");
  Element x = randn(V, rng, 0.5), y = randn(V, rng, 0.5);
  LinOp B = bergman(V, x, y);
  LinOp C = dual_bergman(V, x, y);
  LinOp expectB = LinOp::Identity(V.dim, V.dim) - 2 * l_op(V, x, y) +
                  q_op(V, x) * q_op(V, y);
  LinOp expectC = LinOp::Identity(V.dim, V.dim) + 2 * l_op(V, x, y) +
                  q_op(V, x) * q_op(V, y);
  CHECK((B - expectB).norm() <= 1e-13);
  CHECK((C - expectC).norm() <= 1e-13);
  // dual Bergman at (x, -y) is the Bergman operator
  CHECK((dual_bergman(V, x, Element(-y)) - B).norm() <= 1e-13);
}

TEST_CASE("Q is quadratic and L bilinear") {
  std::mt19937_64 rng(29);
  TripleSystem V = build_model("spin:2,3");
  Element x = randn(V, rng), y = randn(V, rng);
  CHECK((q_op(V, Element(2 * x)) - 4 * q_op(V, x)).norm() <= 1e-12);
  CHECK((l_op(V, Element(2 * x), y) - 2 * l_op(V, x, y)).norm() <= 1e-12);
}
