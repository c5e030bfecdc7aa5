#include "doctest.h"

#include <random>

#include "pjts/model.hpp"
#include "zoo.hpp"

using namespace pjts;

TEST_CASE("model grammar round trip") {
  for (const auto& name : model_zoo()) {
    ModelSpec s = ModelSpec::parse(name);
    CHECK(s.str() == name);
  }
}

TEST_CASE("model grammar rejects malformed specs") {
  CHECK_THROWS_AS(ModelSpec::parse("sym"), ConfigError);
  CHECK_THROWS_AS(ModelSpec::parse("sym:"), ConfigError);
  CHECK_THROWS_AS(ModelSpec::parse("sym:0"), ConfigError);
  CHECK_THROWS_AS(ModelSpec::parse("cmat:2"), ConfigError);
  CHECK_THROWS_AS(ModelSpec::parse("cmat:3x2"), ConfigError);
  CHECK_THROWS_AS(ModelSpec::parse("spin:2"), ConfigError);
  CHECK_THROWS_AS(ModelSpec::parse("sphere:1"), ConfigError);
  CHECK_THROWS_AS(ModelSpec::parse("noble:4"), ConfigError);
  CHECK_THROWS_AS(ModelSpec::parse("sym:2x3"), ConfigError);
}

TEST_CASE("axioms hold across the zoo") {
  for (const auto& name : model_zoo()) {
    CAPTURE(name);
    TripleSystem V = build_model(name);
    AxiomReport rep = validate_axioms(V);
    CHECK(rep.sym_residual <= 1e-12);
    CHECK(rep.jordan_residual <= 1e-12);
    CHECK(rep.gram_min_eig > 0);
    if (V.case_tag == CaseTag::ComplexStructure) {
      REQUIRE(rep.jstruct_residual.has_value());
      CHECK(*rep.jstruct_residual <= 1e-12);
    }
    CHECK(rep.pass());
  }
}

TEST_CASE("negative control: perturbed structure tensor breaks the axioms") {
  TripleSystem V = build_model("sym:2");
  TripleSystem W = perturb_structure_tensor(V, 0, 1, 2, 0, 1e-3);
  AxiomReport rep = validate_axioms(W);
  CHECK_FALSE(rep.pass());
  CHECK(rep.sym_residual + rep.jordan_residual > 1e-6);
}

TEST_CASE("frame elements are orthogonal tripotents") {
  for (const auto& name : model_zoo()) {
    CAPTURE(name);
    TripleSystem V = build_model(name);
    CHECK(int(V.frame.size()) == V.table.r);
    for (const Element& c : V.frame)
      CHECK((V.triple(c, c, c) - c).norm() <= 1e-12);
    for (size_t i = 0; i < V.frame.size(); ++i)
      for (size_t j = 0; j < V.frame.size(); ++j)
        if (i != j)
          CHECK(V.triple(V.frame[i], V.frame[i], V.frame[j]).norm() <= 1e-12);
  }
}

TEST_CASE("triple product is symmetric bilinear in the outer slots") {
  std::mt19937_64 rng(7);
  std::normal_distribution<double> N(0, 1);
  for (const auto& name : {"sym:2", "spin:2,3", "cmat:2x2"}) {
    TripleSystem V = build_model(name);
    Element x(V.dim), y(V.dim), z(V.dim);
    for (int i = 0; i < V.dim; ++i) { x[i] = N(rng); y[i] = N(rng); z[i] = N(rng); }
    CHECK((V.triple(x, y, z) - V.triple(z, y, x)).norm() <= 1e-12);
  }
}

TEST_CASE("complex structure commutes as expected") {
  TripleSystem V = build_model("cmat:2x2");
  REQUIRE(V.J.has_value());
  const LinOp& J = *V.J;
  CHECK((J * J + LinOp::Identity(V.dim, V.dim)).norm() <= 1e-12);
  std::mt19937_64 rng(11);
  std::normal_distribution<double> N(0, 1);
  Element x(V.dim), y(V.dim), z(V.dim);
  for (int i = 0; i < V.dim; ++i) { x[i] = N(rng); y[i] = N(rng); z[i] = N(rng); }
  CHECK((V.triple(J * x, y, z) - J * V.triple(x, y, z)).norm() <= 1e-12);
  CHECK((V.triple(x, J * y, z) + J * V.triple(x, y, z)).norm() <= 1e-12);
}

TEST_CASE("complex coordinates invert cleanly") {
  for (const auto& name : {"cmat:1x1", "cmat:2x2"}) {
    TripleSystem V = build_model(name);
    std::mt19937_64 rng(3);
    std::normal_distribution<double> N(0, 1);
    Element x(V.dim);
    for (int i = 0; i < V.dim; ++i) x[i] = N(rng);
    CHECK((V.from_complex(V.to_complex(x)) - x).norm() <= 1e-12);
    // multiplication by i corresponds to J
    CElement z = V.to_complex(x);
    CHECK((V.from_complex(cplx(0, 1) * z) - Element(*V.J * x)).norm() <= 1e-12);
  }
}

TEST_CASE("hermitification produces a valid complex model") {
  for (const auto& name : {"sym:2", "rect:2x3", "sphere:3"}) {
    CAPTURE(name);
    TripleSystem V = build_model(name);
    TripleSystem W = hermitify(V);
    CHECK(W.dim == 2 * V.dim);
    CHECK(W.case_tag == CaseTag::ComplexStructure);
    AxiomReport rep = validate_axioms(W);
    CHECK(rep.pass());

    // the embedded real points reproduce the original triple product
    REQUIRE(W.embedding.has_value());
    const LinOp& E = *W.embedding;
    std::mt19937_64 rng(5);
    std::normal_distribution<double> N(0, 1);
    Element x(V.dim), y(V.dim), z(V.dim);
    for (int i = 0; i < V.dim; ++i) { x[i] = N(rng); y[i] = N(rng); z[i] = N(rng); }
    Element lhs = W.triple(E * x, E * y, E * z);
    Element rhs = E * V.triple(x, y, z);
    CHECK((lhs - rhs).norm() <= 1e-10);
  }
}

TEST_CASE("hermitification doubles rank for the sphere and keeps it otherwise") {
  CHECK(hermitify(build_model("sym:2")).table.r == 2);
  CHECK(hermitify(build_model("sphere:3")).table.r == 2);
  CHECK(hermitify(build_model("rect:2x3")).table.r == 2);
}
