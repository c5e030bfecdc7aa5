#include "doctest.h"

#include <random>

#include "pjts/model.hpp"
#include "pjts/operators.hpp"
#include "pjts/spectral.hpp"
#include "zoo.hpp"

using namespace pjts;

TEST_CASE("Peirce projections split the space") {
  for (const auto& name : model_zoo()) {
    CAPTURE(name);
    TripleSystem V = build_model(name);
    PeirceData pd = peirce(V, V.frame[0]);
    LinOp sum = pd.P0 + pd.Phalf + pd.P1;
    CHECK((sum - LinOp::Identity(V.dim, V.dim)).norm() <= 1e-10);
    CHECK((pd.P1 * pd.P0).norm() <= 1e-10);
    CHECK((pd.P1 * pd.P1 - pd.P1).norm() <= 1e-10);
    CHECK(pd.d0 + pd.dhalf + pd.d1 == V.dim);
    CHECK(pd.d1_plus + pd.d1_minus == pd.d1);
  }
}

TEST_CASE("Peirce dimensions for a primitive tripotent of sym:2") {
  TripleSystem V = build_model("sym:2");
  PeirceData pd = peirce(V, V.frame[0]);
  CHECK(pd.d1 == 1);
  CHECK(pd.dhalf == 1);
  CHECK(pd.d0 == 1);
}

TEST_CASE("classification table is reproduced by the joint Peirce dimensions") {
  for (const auto& name : model_zoo()) {
    CAPTURE(name);
    TripleSystem V = build_model(name);
    CharacteristicData t = characteristic_numbers(V);  // throws on mismatch
    CHECK(t.r == V.table.r);
    CHECK(t.a == V.table.a);
    CHECK(t.a_plus == V.table.a_plus);
    CHECK(t.a_minus == V.table.a_minus);
    CHECK(t.b == V.table.b);
    CHECK(t.c == V.table.c);
  }
}

TEST_CASE("expected characteristic numbers for selected models") {
  auto t = build_model("spin:2,3").table;
  CHECK(t.r == 2); CHECK(t.a_plus == 2); CHECK(t.a_minus == 1);
  CHECK(t.b == 0); CHECK(t.c == 1);

  t = build_model("sphere:4").table;
  CHECK(t.r == 1); CHECK(t.a == 0); CHECK(t.b == 0); CHECK(t.c == 4);
  CHECK(t.genus() == 8);

  t = build_model("cmat:2x2").table;
  CHECK(t.r == 2); CHECK(t.a == 4); CHECK(t.a_plus == 2);
  CHECK(t.c == 2); CHECK(t.genus() == 8);

  t = build_model("rect:2x3").table;
  CHECK(t.r == 2); CHECK(t.a == 2); CHECK(t.a_plus == 1);
  CHECK(t.a_minus == 1); CHECK(t.b == 1); CHECK(t.c == 1);
}

TEST_CASE("conjugation moves flat points onto signed frame sums") {
  std::mt19937_64 rng(31);
  for (const auto& name : {"sym:2", "herm:2", "spin:2,3"}) {
    CAPTURE(name);
    TripleSystem V = build_model(name);
    std::uniform_real_distribution<double> U(0.3, 1.4);
    Element x = Element::Zero(V.dim);
    std::vector<double> t(V.table.r);
    for (int j = 0; j < V.table.r; ++j) {
      t[j] = U(rng) * (rng() % 2 ? 1 : -1);
      x += t[j] * V.frame[j];
    }
    auto [g, c] = conjugate_to_tripotent(V, x);
    CHECK(is_tripotent(V, c));
    CHECK((g * x - c).norm() <= 1e-9);
  }
}
