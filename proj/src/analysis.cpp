#include "pjts/analysis.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <random>

#include "pjts/kernels.hpp"

namespace pjts {

Threshold threshold(const TripleSystem& V) {
  int p = V.table.genus(), c = V.table.c;
  return Threshold{Rational(p - 2 * c, 2 * p), Rational(-c, 2)};
}

Rational lambda_of_s(const TripleSystem& V, const Rational& s) {
  int p = V.table.genus();
  return s * Rational(2, p) + Rational(1, 2);
}

double s_of_lambda(const TripleSystem& V, double lambda) {
  double p = V.table.genus();
  return -p / 4 + p * lambda / 2;
}

void gauss_jacobi(int n, double a, double b, std::vector<double>& nodes,
                  std::vector<double>& weights) {
  if (n < 1) throw DomainError("quadrature needs at least one node");
  Eigen::MatrixXd T = Eigen::MatrixXd::Zero(n, n);
  auto diag = [&](int k) {
    double s = 2 * k + a + b;
    if (k == 0) return (b - a) / (a + b + 2);
    return (b * b - a * a) / (s * (s + 2));
  };
  auto offdiag2 = [&](int k) {
    // k = 1 needs the cancelled form: the generic one is 0/0 when a+b = -1
    if (k == 1)
      return 4 * (a + 1) * (b + 1) / ((a + b + 2) * (a + b + 2) * (a + b + 3));
    double s = 2 * k + a + b;
    return 4 * k * (k + a) * (k + b) * (k + a + b) /
           (s * s * (s + 1) * (s - 1));
  };
  for (int k = 0; k < n; ++k) T(k, k) = diag(k);
  for (int k = 1; k < n; ++k)
    T(k, k - 1) = T(k - 1, k) = std::sqrt(offdiag2(k));
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(T);
  double mu0 = std::exp((a + b + 1) * std::log(2.0) + std::lgamma(a + 1) +
                        std::lgamma(b + 1) - std::lgamma(a + b + 2));
  nodes.resize(n);
  weights.resize(n);
  for (int i = 0; i < n; ++i) {
    nodes[i] = es.eigenvalues()(i);
    double v = es.eigenvectors()(0, i);
    weights[i] = mu0 * v * v;
  }
}

double c_lambda_numeric(const TripleSystem& V, double lambda, int nodes,
                        QuadMethod method, uint64_t seed) {
  const CharacteristicData& t = V.table;
  double P = t.genus() * (lambda - 0.5);
  if (method == QuadMethod::MonteCarlo) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> U(0, M_PI / 2);
    double acc = 0;
    std::vector<double> theta(t.r);
    for (int i = 0; i < nodes; ++i) {
      for (double& th : theta) th = U(rng);
      acc += std::pow(compact_kernel(V, theta), lambda - 0.5) *
             torus_density(V, theta);
    }
    return acc / nodes * std::pow(M_PI / 2, t.r);
  }
  if (t.r != 1)
    throw DomainError("Gauss-Jacobi path only covers rank-one models");
  // u = cos^2 theta turns the torus integral into a Beta-type integral with
  // endpoint exponents alpha - 1 at u = 0 and beta - 1 at u = 1.  Both go
  // into the quadrature weight; the integrand is the actual kernel-density
  // expression divided by the closed-form weight, so the quadrature checks
  // that the model kernels really carry these exponents (the quotient is a
  // constant exactly when they do).
  double alpha = (P + t.c) / 2.0;
  double beta = (t.c + t.b) / 2.0;
  if (alpha <= 0) throw DomainError("integral diverges at this parameter");
  double A = beta - 1;   // (1-t) exponent
  double B = alpha - 1;  // (1+t) exponent
  std::vector<double> x, w;
  gauss_jacobi(nodes, A, B, x, w);
  double acc = 0;
  std::vector<double> theta(1);
  for (int i = 0; i < nodes; ++i) {
    double u = (1 + x[i]) / 2;
    theta[0] = std::acos(std::sqrt(u));
    double g = std::pow(compact_kernel(V, theta), lambda - 0.5) *
               torus_density(V, theta) / (2 * std::sqrt(u * (1 - u))) /
               (std::pow(u, alpha - 1) * std::pow(1 - u, beta - 1));
    acc += w[i] * g;
  }
  return std::pow(2.0, -(A + B + 1)) * acc;
}

double c_lambda_gamma(const TripleSystem& V, double lambda) {
  const CharacteristicData& t = V.table;
  if (t.r != 1)
    throw DomainError("closed form implemented for rank-one models");
  double alpha = 0.5 * (t.genus() * (lambda - 0.5) + t.c);
  double beta = (t.c + t.b) / 2.0;
  if (alpha <= 0) throw DomainError("integral diverges at this parameter");
  return std::pow(2.0, t.c - 2) *
         std::exp(std::lgamma(alpha) + std::lgamma(beta) -
                  std::lgamma(alpha + beta));
}

bool selberg_convergent(const TripleSystem& V, double lambda) {
  Threshold th = threshold(V);
  return lambda > th.lambda_min.value();
}

std::vector<Rational> PoleLedger::poles_down_to(const Rational& low) const {
  std::vector<Rational> out;
  for (const PoleFamily& f : families) {
    Rational p = f.first;
    while (!(p < low)) {
      out.push_back(p);
      p = p - f.step;
    }
  }
  std::sort(out.begin(), out.end(), [](const Rational& a, const Rational& b) {
    return b < a;
  });
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

PoleLedger pole_ledger(const TripleSystem& V) {
  const CharacteristicData& t = V.table;
  PoleLedger L;
  CaseB b = case_b(V);
  L.b_zeros = b.zero_set();
  Threshold th = threshold(V);
  L.s_min = th.s_min;
  L.lambda_min = th.lambda_min;
  switch (V.case_tag) {
    case CaseTag::ComplexStructure: {
      int ac = t.a / 2;  // complex dimension of the off-diagonal Peirce spaces
      L.families.push_back({Rational(-1, 1), Rational(1, 1)});
      if (t.r >= 2 && ac % 2 == 1)
        L.families.push_back({Rational(-1, 1) - Rational(ac, 2), Rational(1, 1)});
      break;
    }
    case CaseTag::Reduced:
    case CaseTag::ReducedEuclidean: {
      L.families.push_back({Rational(-1, 2), Rational(1, 2)});
      if (t.r >= 2 && t.a % 2 == 1)
        L.families.push_back(
            {Rational(-t.a, 4) - Rational(1, 2), Rational(1, 2)});
      break;
    }
    case CaseTag::NonReduced: {
      L.families.push_back({Rational(-t.c, 2), Rational(1, 1)});
      if (t.r >= 2 && t.c % 2 == 1)
        L.families.push_back({Rational(1 - t.c, 1), Rational(1, 1)});
      break;
    }
  }
  return L;
}

std::vector<Rational> poles_from_b(const TripleSystem& V, const Rational& low) {
  CaseB b = case_b(V);
  Rational s_min = threshold(V).s_min;
  std::vector<Rational> out;
  for (const Rational& z : b.zero_set()) {
    for (int k = 1;; ++k) {
      Rational s = z - Rational(k, 1);
      if (s < low) break;
      if (!(s_min < s)) out.push_back(s);
    }
  }
  std::sort(out.begin(), out.end(), [](const Rational& a, const Rational& b) {
    return b < a;
  });
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

double verify_descent(const TripleSystem& V, double s, double x, int nodes) {
  if (V.spec.family != Family::Sym || V.table.r != 1)
    throw DomainError("descent harness covers the rank-one symmetric model");
  RealAlgebra A = euclidean_algebra(V);
  CaseB b = case_b(V);

  // C^3 bump supported on (ylo, yhi)
  double ylo = 0.5, yhi = 2.0;
  RJet q(1, 8);
  q.c[0] = -ylo * yhi;
  q.c[1] = ylo + yhi;
  q.c[2] = -1;
  RJet fpoly = q;
  for (int i = 1; i < 4; ++i) fpoly = jet_mul(fpoly, q);

  std::vector<double> tn, tw;
  gauss_jacobi(nodes, 0, 0, tn, tw);
  double mid = (ylo + yhi) / 2, half = (yhi - ylo) / 2;

  Element xv(1), yv(1);
  xv[0] = x;
  double lhs = 0, rhs = 0;
  for (int i = 0; i < nodes; ++i) {
    double y = mid + half * tn[i];
    double wq = half * tw[i];
    yv[0] = y;
    double h0 = h_tube_jet(A, xv, A.jordan_sqrt(yv), 0).value();
    double fval = jet_of_polynomial(fpoly, {y}, 0).value();
    lhs += wq * std::pow(h0, 2 * (s - 1)) * fval;

    RJet fjet = jet_of_polynomial(fpoly, {y}, 2);
    RJet g = transpose_E_s_jet(A, 2 * s - 1, fjet, yv, 1);
    double bt = transpose_E_s(A, 2 * s, g, yv);
    rhs += wq * std::pow(h0, 2 * s) * bt;
  }
  rhs /= b.eval(s);
  return std::abs(lhs - rhs) / std::max(std::abs(lhs), 1e-12);
}

}  // namespace pjts
