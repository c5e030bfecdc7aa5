#include "pjts/kernels.hpp"

#include <unsupported/Eigen/MatrixFunctions>
#include <cmath>
#include <random>

#include "pjts/minpoly.hpp"
#include "pjts/operators.hpp"
#include "pjts/spectral.hpp"

namespace pjts {

double canonical_kernel(const TripleSystem& V, const Element& x,
                        const Element& y) {
  return std::abs(dual_bergman(V, x, y).determinant());
}

cplx canonical_kernel_complex(const TripleSystem& V, const Element& x,
                              const Element& y) {
  if (!V.J) throw DomainError("complex canonical kernel needs a complex structure");
  return V.complex_matrix(dual_bergman(V, x, y)).determinant();
}

double verify_power_identity(const TripleSystem& V, int samples, uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> N(0, 0.35);
  double worst = 0;
  int done = 0, guard = 0;
  while (done < samples && guard < 20 * samples) {
    ++guard;
    Element x(V.dim), y(V.dim);
    for (int i = 0; i < V.dim; ++i) { x[i] = N(rng); y[i] = N(rng); }
    double k = fundamental_kernel(V, x, y);
    if (k < 1e-3) continue;
    double c = canonical_kernel(V, x, y);
    double rhs = std::pow(k, V.table.genus() / 2.0);
    worst = std::max(worst, std::abs(c - rhs) / c);
    ++done;
  }
  if (done < samples)
    throw NumericalDegeneracy("could not draw enough samples with k > 0");
  return worst;
}

double covariance_check(const TripleSystem& V, const Element& u,
                        const Element& v, const Element& x, const Element& y) {
  LinOp g = l_op(V, u, v).exp();
  double lhs = canonical_kernel(V, g * x, g.transpose().inverse() * y);
  double rhs = canonical_kernel(V, x, y);
  return std::abs(lhs - rhs) / rhs;
}

double peirce_restriction_check(const TripleSystem& V, const Element& c_max,
                                const Element& x1, const Element& x2,
                                const Element& y2) {
  PeirceData pd = peirce(V, c_max);
  if (pd.d0 != 0) throw DomainError("tripotent is not maximal");
  Element x1p = pd.Phalf * x1, x2p = pd.P1 * x2, y2p = pd.P1 * y2;
  double a = canonical_kernel(V, x2p + x1p, y2p);
  double b = canonical_kernel(V, x2p, y2p);
  return std::abs(a - b) / b;
}

double compact_kernel(const TripleSystem& V, const std::vector<double>& theta) {
  if (int(theta.size()) != V.table.r)
    throw DimensionError("need one angle per rank");
  double prod = 1;
  for (double t : theta) prod *= std::cos(t) * std::cos(t);
  return std::pow(prod, V.table.genus() / 2.0);
}

double compact_kernel_pair(const TripleSystem& V, const Element& x,
                           const Element& y) {
  return canonical_kernel(V, x, y) /
         std::sqrt(canonical_kernel(V, x, x) * canonical_kernel(V, y, y));
}

double invariant_density(const TripleSystem& V, const Element& x) {
  return 1.0 / std::sqrt(canonical_kernel(V, x, x));
}

double torus_density(const TripleSystem& V, const std::vector<double>& theta) {
  const CharacteristicData& t = V.table;
  if (int(theta.size()) != t.r) throw DimensionError("need one angle per rank");
  double d = 1;
  for (double th : theta) {
    d *= std::pow(std::abs(std::sin(2 * th)), t.c - 1);
    d *= std::pow(std::abs(std::sin(th)), t.b);
  }
  for (int i = 0; i < t.r; ++i)
    for (int j = i + 1; j < t.r; ++j) {
      d *= std::pow(std::abs(std::sin(theta[i] - theta[j])), t.a_plus);
      d *= std::pow(std::abs(std::sin(theta[i] + theta[j])), t.a_minus);
    }
  return d;
}

}  // namespace pjts
