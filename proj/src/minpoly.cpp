#include "pjts/minpoly.hpp"

#include <Eigen/SVD>
#include <cstring>
#include <random>

namespace pjts {

namespace {

constexpr double kRegularityThreshold = 1e-9;

std::vector<Element> power_chain(const TripleSystem& V, const Element& x,
                                 const Element& y, int count) {
  std::vector<Element> p;
  p.push_back(x);
  Element cur = x, next;
  for (int k = 1; k < count; ++k) {
    V.product(x, y, cur, next);
    p.push_back(next);
    cur = next;
  }
  return p;
}

template <typename Mat>
MinPolyResult solve_minpoly(const Mat& powers, int rho) {
  // powers has rho+1 columns x^(1,y) .. x^(rho+1,y)
  Mat P = powers.leftCols(rho);
  Eigen::JacobiSVD<Mat> svd_reg(P);
  double smax = svd_reg.singularValues()(0);
  double smin = svd_reg.singularValues()(rho - 1);
  if (smax <= 0 || smin < kRegularityThreshold * smax)
    throw NumericalDegeneracy("non-regular pair: power matrix is rank deficient");

  Mat A = P;
  for (int j = 1; j <= rho; ++j)
    A.col(rho - j) = (j % 2 == 0 ? 1.0 : -1.0) * powers.col(rho - j);
  // columns of A are (-1)^j x^(rho+1-j,y) in j = 1..rho order reversed;
  // reorder so column j-1 corresponds to m_j
  Mat B(A.rows(), rho);
  for (int j = 1; j <= rho; ++j) B.col(j - 1) = A.col(rho - j);

  using Vec = Eigen::Vector<typename Mat::Scalar, Eigen::Dynamic>;
  Vec rhs = -powers.col(rho);
  Eigen::JacobiSVD<Mat> svd(B, Eigen::ComputeThinU | Eigen::ComputeThinV);
  Vec m = svd.solve(rhs);

  MinPolyResult out;
  out.rho = rho;
  out.m = m.template cast<cplx>();
  double scale = powers.col(rho).norm();
  out.residual = (B * m - rhs).norm() / (scale > 0 ? scale : 1.0);
  return out;
}

MinPolyResult minpoly_at(const TripleSystem& V, const Element& x,
                         const Element& y) {
  int rho = minpoly_degree(V);
  auto chain = power_chain(V, x, y, rho + 1);
  if (V.case_tag == CaseTag::ComplexStructure) {
    Eigen::MatrixXcd P(V.cdim(), rho + 1);
    for (int k = 0; k <= rho; ++k) P.col(k) = V.to_complex(chain[k]);
    return solve_minpoly(P, rho);
  }
  Eigen::MatrixXd P(V.dim, rho + 1);
  for (int k = 0; k <= rho; ++k) P.col(k) = chain[k];
  return solve_minpoly(P, rho);
}

uint64_t seed_from(const Element& x, const Element& y) {
  uint64_t h = 0x9e3779b97f4a7c15ull;
  auto mix = [&](double v) {
    uint64_t bits;
    std::memcpy(&bits, &v, sizeof bits);
    h ^= bits + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  };
  for (int i = 0; i < x.size(); ++i) mix(x[i]);
  for (int i = 0; i < y.size(); ++i) mix(y[i]);
  return h;
}

}  // namespace

Element jordan_power(const TripleSystem& V, const Element& x, const Element& y,
                     int k) {
  if (k < 1) throw DomainError("jordan_power needs k >= 1");
  return power_chain(V, x, y, k).back();
}

int minpoly_degree(const TripleSystem& V) {
  switch (V.case_tag) {
    case CaseTag::ComplexStructure: return V.table.r;
    case CaseTag::Reduced:
    case CaseTag::ReducedEuclidean: return V.table.r;
    case CaseTag::NonReduced: return 2 * V.table.r;
  }
  throw DomainError("unknown case");
}

int absolute_rank(const TripleSystem& V) {
  int expected;
  switch (V.case_tag) {
    case CaseTag::ComplexStructure: expected = 2 * V.table.r; break;
    case CaseTag::Reduced:
    case CaseTag::ReducedEuclidean: expected = V.table.r; break;
    case CaseTag::NonReduced: expected = 2 * V.table.r; break;
    default: throw DomainError("unknown case");
  }
  std::mt19937_64 rng(20240917);
  std::normal_distribution<double> N(0, 1);
  int measured = -1;
  for (int trial = 0; trial < 5; ++trial) {
    Element x(V.dim), y(V.dim);
    for (int i = 0; i < V.dim; ++i) { x[i] = N(rng); y[i] = N(rng); }
    auto chain = power_chain(V, x, y, std::min(V.dim + 1, expected + 2));
    int rank = 0;
    for (int k = 1; k <= int(chain.size()); ++k) {
      Eigen::MatrixXd P(V.dim, k);
      for (int j = 0; j < k; ++j) P.col(j) = chain[j];
      Eigen::JacobiSVD<Eigen::MatrixXd> svd(P);
      double smax = svd.singularValues()(0);
      double smin = svd.singularValues()(k - 1);
      if (smax <= 0 || smin < kRegularityThreshold * smax) break;
      rank = k;
    }
    measured = std::max(measured, rank);
  }
  if (measured != expected)
    throw ConsistencyError("sampled absolute rank " + std::to_string(measured) +
                           " disagrees with classification value " +
                           std::to_string(expected));
  return measured;
}

MinPolyResult minpoly_coeffs(const TripleSystem& V, const Element& x,
                             const Element& y) {
  V.check_dim(x); V.check_dim(y);
  return minpoly_at(V, x, y);
}

MinPolyResult minpoly_eval(const TripleSystem& V, const Element& x,
                           const Element& y) {
  V.check_dim(x); V.check_dim(y);
  try {
    return minpoly_at(V, x, y);
  } catch (const NumericalDegeneracy&) {
  }
  std::mt19937_64 rng(seed_from(x, y));
  std::normal_distribution<double> N(0, 1);
  Element u(V.dim);
  for (int i = 0; i < V.dim; ++i) u[i] = N(rng);
  u *= (1.0 + x.norm()) / u.norm();
  for (double eps : {1e-6, 1e-5, 1e-4}) {
    try {
      MinPolyResult m1 = minpoly_at(V, x + eps * u, y);
      MinPolyResult m2 = minpoly_at(V, x + 2 * eps * u, y);
      MinPolyResult out = m1;
      out.m = 2.0 * m1.m - m2.m;  // Richardson in eps
      out.residual = std::max(m1.residual, m2.residual);
      return out;
    } catch (const NumericalDegeneracy&) {
    }
  }
  throw NumericalDegeneracy("minimal polynomial evaluation failed after perturbation retries");
}

cplx h_kernel(const TripleSystem& V, const Element& x, const Element& y) {
  if (y.isZero(0) || x.isZero(0)) return cplx(1, 0);
  MinPolyResult mp = minpoly_eval(V, x, y);
  cplx h(1, 0);
  for (int j = 0; j < mp.rho; ++j) h += mp.m[j];
  return h;
}

double fundamental_kernel(const TripleSystem& V, const Element& x,
                          const Element& y) {
  cplx h = h_kernel(V, x, y);
  switch (V.case_tag) {
    case CaseTag::ComplexStructure: return std::norm(h);
    case CaseTag::Reduced:
    case CaseTag::ReducedEuclidean: return h.real() * h.real();
    case CaseTag::NonReduced: return h.real();
  }
  throw DomainError("unknown case");
}

}  // namespace pjts
