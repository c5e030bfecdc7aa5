#include "pjts/bernstein.hpp"

#include <algorithm>
#include <cmath>
#include <random>

namespace pjts {

namespace {

// gram, determinant polynomial and its symbol, from circ/trace_vec/unit
template <typename S>
void finish_algebra(EuclideanAlgebra<S>& A) {
  using Mat = typename EuclideanAlgebra<S>::Mat;
  int n = A.n, r = A.r;
  A.gram = Mat(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      S acc(0);
      for (int l = 0; l < n; ++l) acc += A.trace_vec[l] * A.circ[l](i, j);
      A.gram(i, j) = acc;
    }
  A.gram_inv = A.gram.fullPivLu().inverse();

  if (std::abs(A.trace(A.unit) - S(double(r))) > 1e-8)
    throw ConsistencyError("algebra trace of the unit is not the rank");

  // Newton's identities on jet-valued powers give the determinant polynomial
  std::vector<Jet<S>> x;
  for (int i = 0; i < n; ++i) x.push_back(Jet<S>::coordinate(n, r, i, S(0)));
  std::vector<std::vector<Jet<S>>> xp{x};
  for (int k = 2; k <= r; ++k) {
    const auto& prev = xp.back();
    std::vector<Jet<S>> cur(n, Jet<S>(n, r));
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        Jet<S> pij = jet_mul(prev[i], x[j]);
        for (int l = 0; l < n; ++l)
          if (A.circ[l](i, j) != S(0)) cur[l] += pij * A.circ[l](i, j);
      }
    xp.push_back(cur);
  }
  std::vector<Jet<S>> p(r + 1, Jet<S>(n, r)), a(r + 1, Jet<S>(n, r));
  for (int k = 1; k <= r; ++k)
    for (int l = 0; l < n; ++l) p[k] += xp[k - 1][l] * A.trace_vec[l];
  a[0] = Jet<S>::constant(n, r, S(1));
  for (int k = 1; k <= r; ++k) {
    Jet<S> acc(n, r);
    for (int i = 1; i <= k; ++i)
      acc += jet_mul(a[k - i], p[i]) * S(i % 2 ? 1.0 : -1.0);
    a[k] = acc * S(1.0 / k);
  }
  A.delta = a[r];

  if (std::abs(A.delta_value(A.unit) - S(1)) > 1e-8)
    throw ConsistencyError("determinant polynomial is not 1 at the unit");

  // symbol: substitute gram_inv * xi into delta
  std::vector<Jet<S>> ell;
  for (int i = 0; i < n; ++i) {
    Jet<S> li(n, r);
    std::vector<int> alpha(n, 0);
    for (int j = 0; j < n; ++j) {
      alpha[j] = 1;
      li.c[li.tab->index(alpha)] = A.gram_inv(i, j);
      alpha[j] = 0;
    }
    ell.push_back(li);
  }
  A.delta_op = poly_eval(A.delta, ell);
}

RealAlgebra sphere_algebra(const TripleSystem& V) {
  RealAlgebra A;
  A.V = &V;
  A.sphere_mode = true;
  A.n = V.dim;
  A.r = 2;
  A.half_d = Rational(V.dim - 2, 2);
  A.unit = V.frame[0];
  A.trace_vec = (2.0 / A.n) * A.unit;
  A.gram = (2.0 / A.n) * Eigen::MatrixXd::Identity(A.n, A.n);
  A.gram_inv = (A.n / 2.0) * Eigen::MatrixXd::Identity(A.n, A.n);
  // delta(x) = |x|^2 / n, delta(d) = (n/4) Laplacian
  A.delta = RJet(A.n, 2);
  A.delta_op = RJet(A.n, 2);
  std::vector<int> alpha(A.n, 0);
  for (int i = 0; i < A.n; ++i) {
    alpha[i] = 2;
    int pos = A.delta.tab->index(alpha);
    A.delta.c[pos] = 1.0 / A.n;
    A.delta_op.c[pos] = A.n / 4.0;
    alpha[i] = 0;
  }
  return A;
}

}  // namespace

RealAlgebra euclidean_algebra(const TripleSystem& V) {
  if (V.spec.family == Family::Sphere) return sphere_algebra(V);
  if (V.spec.family != Family::Sym && V.spec.family != Family::HermC)
    throw DomainError("no Euclidean algebra structure for this model");
  RealAlgebra A;
  A.V = &V;
  A.n = V.dim;
  A.r = V.table.r;
  if (A.r > 1)
    A.half_d = V.spec.family == Family::Sym ? Rational(1, 2) : Rational(1, 1);
  A.unit = Element::Zero(V.dim);
  for (const auto& f : V.frame) A.unit += f;
  A.circ.assign(A.n, Eigen::MatrixXd(A.n, A.n));
  for (int i = 0; i < A.n; ++i)
    for (int j = 0; j < A.n; ++j) {
      Element t = V.triple(Element::Unit(A.n, i), A.unit, Element::Unit(A.n, j));
      for (int l = 0; l < A.n; ++l) A.circ[l](i, j) = t[l];
    }
  A.trace_vec = Element(A.n);
  for (int i = 0; i < A.n; ++i) {
    double tr = 0;
    for (int l = 0; l < A.n; ++l) tr += A.circ[l](i, l);
    A.trace_vec[i] = double(A.r) / A.n * tr;
  }
  finish_algebra(A);
  return A;
}

ComplexAlgebra complex_algebra(const TripleSystem& V) {
  if (V.spec.family != Family::Cmat || V.spec.p1 != V.spec.p2)
    throw DomainError("complex algebra needs a square complex matrix model");
  ComplexAlgebra A;
  A.V = &V;
  A.n = V.cdim();
  A.r = V.table.r;
  if (A.r > 1) A.half_d = Rational(1, 1);
  Element e = Element::Zero(V.dim);
  for (const auto& f : V.frame) e += f;
  A.unit = V.to_complex(e);
  A.circ.assign(A.n, Eigen::MatrixXcd(A.n, A.n));
  for (int i = 0; i < A.n; ++i)
    for (int j = 0; j < A.n; ++j) {
      CElement t = V.to_complex(V.triple(V.cpairs_[2 * i], e, V.cpairs_[2 * j]));
      for (int l = 0; l < A.n; ++l) A.circ[l](i, j) = t[l];
    }
  A.trace_vec = CElement(A.n);
  for (int i = 0; i < A.n; ++i) {
    cplx tr(0, 0);
    for (int l = 0; l < A.n; ++l) tr += A.circ[l](i, l);
    A.trace_vec[i] = double(A.r) / A.n * tr;
  }
  finish_algebra(A);
  return A;
}

std::vector<Rational> CaseB::zero_set() const {
  std::vector<Rational> z;
  if (tag == CaseTag::Reduced || tag == CaseTag::ReducedEuclidean) {
    for (const Rational& zb : base.zeros()) {
      z.push_back(zb * Rational(1, 2));
      z.push_back((zb + Rational(1, 1)) * Rational(1, 2));
    }
  } else {
    z = base.zeros();
  }
  std::sort(z.begin(), z.end());
  z.erase(std::unique(z.begin(), z.end()), z.end());
  return z;
}

CaseB case_b(const TripleSystem& V) {
  CaseB out;
  out.tag = V.case_tag;
  out.c = V.table.c;
  switch (V.case_tag) {
    case CaseTag::ComplexStructure:
      // the multiplicity entering b is the complex dimension of the joint
      // Peirce spaces V_ij, i.e. half the realified off-diagonal multiplicity
      out.base = BPoly{V.table.r, Rational(V.table.a, 4)};
      break;
    case CaseTag::Reduced:
    case CaseTag::ReducedEuclidean:
      out.base = BPoly{V.table.r, Rational(V.table.a, 2)};
      break;
    case CaseTag::NonReduced:
      out.base = BPoly{2 * V.table.r, Rational(V.table.c - 2, 2)};
      break;
  }
  return out;
}

BernsteinData bernstein_data(const TripleSystem& V) {
  BernsteinData D;
  D.V = &V;
  D.tag = V.case_tag;
  D.b = case_b(V);
  switch (V.spec.family) {
    case Family::Sym:
    case Family::HermC:
    case Family::Sphere:
      D.real_alg = euclidean_algebra(V);
      break;
    case Family::Cmat:
      D.complex_alg = complex_algebra(V);
      break;
    default:
      throw DomainError("no tube-type realization for this model");
  }
  return D;
}

namespace {

double rel(double lhs, double rhs) {
  double denom = std::max(std::abs(rhs), 1e-12);
  return std::abs(lhs - rhs) / denom;
}

double bs_verify_reduced(const RealAlgebra& A, const CaseB& b, double s,
                         const Element& x, const Element& y) {
  if (A.delta_value(x) <= 0) throw DomainError("x is outside the cone");
  Element w = A.jordan_sqrt(y);
  RJet hjet = h_tube_jet(A, x, w, 2 * A.r);
  double h0 = hjet.value();
  if (h0 <= 1e-6) throw DomainError("kernel is not positive at (x, y)");
  RJet f = jet_real_power(hjet, 2 * s);
  RJet inner = apply_E_s_jet(A, 2 * s, f, x, A.r);
  double lhs = apply_E_s(A, 2 * s - 1, inner, x);
  double rhs = b.eval(s) * std::pow(h0, 2 * (s - 1));
  return rel(lhs, rhs);
}

double bs_verify_sphere(const RealAlgebra& A, const CaseB& b, double s,
                        const Element& x, const Element& y) {
  int n = A.n;
  if (x.squaredNorm() < 1e-8) throw DomainError("x is too close to zero");
  RJet hpoly(n, 2);
  hpoly.c[0] = 1.0;
  std::vector<int> alpha(n, 0);
  double yn = y.squaredNorm() / double(n * n);
  for (int i = 0; i < n; ++i) {
    alpha[i] = 1;
    hpoly.c[hpoly.tab->index(alpha)] = 2.0 * y[i] / n;
    alpha[i] = 2;
    hpoly.c[hpoly.tab->index(alpha)] = yn;
    alpha[i] = 0;
  }
  RJet hjet = jet_of_polynomial(hpoly, std::vector<double>(x.data(), x.data() + n), 2);
  double h0 = hjet.value();
  if (h0 <= 1e-6) throw DomainError("kernel is not positive at (x, y)");
  RJet f = jet_real_power(hjet, s);
  double lhs = apply_E_s(A, s, f, x);
  double rhs = b.eval(s) * std::pow(h0, s - 1);
  return rel(lhs, rhs);
}

double bs_verify_complex(const TripleSystem& V, const ComplexAlgebra& A,
                         const CaseB& b, double s, const Element& x,
                         const Element& y) {
  CElement z0 = V.to_complex(x);
  CElement yc = V.to_complex(y);
  CElement w = A.jordan_sqrt(yc);
  if (std::abs(A.delta_value(z0)) < 1e-6)
    throw DomainError("x is too close to the determinant variety");
  CJet hjet = h_tube_jet(A, z0, w, A.r);
  cplx h0 = hjet.value();
  if (std::abs(h0) < 1e-6) throw DomainError("kernel vanishes near (x, y)");
  CJet f = jet_real_power(hjet, s);
  cplx val = apply_E_s(A, s, f, z0);
  double lhs = std::norm(val);
  double rhs = b.eval(s) * std::pow(std::abs(h0), 2 * (s - 1));
  return rel(lhs, rhs);
}

}  // namespace

double bs_verify(const BernsteinData& D, double s, const Element& x,
                 const Element& y) {
  switch (D.tag) {
    case CaseTag::ReducedEuclidean:
      return bs_verify_reduced(*D.real_alg, D.b, s, x, y);
    case CaseTag::NonReduced:
      return bs_verify_sphere(*D.real_alg, D.b, s, x, y);
    case CaseTag::ComplexStructure:
      return bs_verify_complex(*D.V, *D.complex_alg, D.b, s, x, y);
    default:
      throw DomainError("identity verification not available for this case");
  }
}

double bs_verify_random(const BernsteinData& D, double s, int samples,
                        uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> N(0, 1);
  const TripleSystem& V = *D.V;
  double worst = 0;
  int done = 0, guard = 0;
  while (done < samples && guard < 50 * samples) {
    ++guard;
    try {
      Element x(V.dim), y(V.dim);
      if (D.tag == CaseTag::ReducedEuclidean) {
        const RealAlgebra& A = *D.real_alg;
        Element vx(V.dim), vy(V.dim);
        for (int i = 0; i < V.dim; ++i) { vx[i] = 0.4 * N(rng); vy[i] = 0.4 * N(rng); }
        x = A.jordan_exp(vx);
        y = A.jordan_exp(vy);
      } else if (D.tag == CaseTag::NonReduced) {
        for (int i = 0; i < V.dim; ++i) { x[i] = N(rng); y[i] = 0.3 * N(rng); }
      } else {
        const ComplexAlgebra& A = *D.complex_alg;
        for (int i = 0; i < V.dim; ++i) x[i] = 0.4 * N(rng);
        int m = V.mat_rows;
        Eigen::MatrixXcd H(m, m);
        for (int i = 0; i < m; ++i)
          for (int j = 0; j < m; ++j) H(i, j) = cplx(N(rng), N(rng));
        H = (0.25 * (H + H.adjoint())).eval();
        CElement v = V.to_complex(element_from_matrix(V, H));
        y = V.from_complex(A.jordan_exp(v));
      }
      worst = std::max(worst, bs_verify(D, s, x, y));
      ++done;
    } catch (const DomainError&) {
    } catch (const NumericalDegeneracy&) {
    }
  }
  if (done < samples)
    throw NumericalDegeneracy("could not draw enough admissible sample pairs");
  return worst;
}

double bs_omega_residual(const RealAlgebra& A, double s, const Element& x0) {
  if (A.delta_value(x0) <= 0) throw DomainError("point is outside the cone");
  RJet f = jet_real_power(A.delta_jet(x0, A.r), s);
  double lhs = apply_const_op(A.delta_op, f);
  double rhs = A.b_value(s) * std::pow(A.delta_value(x0), s - 1);
  return rel(lhs, rhs);
}

double bs_omega_random(const RealAlgebra& A, double s, int samples,
                       uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> N(0, 1);
  double worst = 0;
  for (int t = 0; t < samples; ++t) {
    Element v(A.n);
    for (int i = 0; i < A.n; ++i) v[i] = 0.5 * N(rng);
    Element x0 = A.sphere_mode ? Element(v * 2.0) : A.jordan_exp(v);
    if (A.sphere_mode && x0.squaredNorm() < 1e-6) { --t; continue; }
    worst = std::max(worst, bs_omega_residual(A, s, x0));
  }
  return worst;
}

double bs_unit_shift_residual(const RealAlgebra& A, double s,
                              const Element& x0) {
  Element u0 = A.unit + x0;
  if (A.delta_value(u0) <= 0) throw DomainError("shifted point is outside the cone");
  RJet f = jet_real_power(A.delta_jet(u0, A.r), s);
  double lhs = apply_const_op(A.delta_op, f);
  double rhs = A.b_value(s) * std::pow(A.delta_value(u0), s - 1);
  return rel(lhs, rhs);
}

Element element_from_matrix(const TripleSystem& V, const Eigen::MatrixXcd& M) {
  if (V.mat_basis.empty())
    throw DomainError("model has no matrix realization");
  int mn = V.mat_rows * V.mat_cols;
  Eigen::MatrixXd B(2 * mn, V.dim);
  for (int i = 0; i < V.dim; ++i) {
    Eigen::Map<const Eigen::VectorXcd> v(V.mat_basis[i].data(), mn);
    B.col(i).head(mn) = v.real();
    B.col(i).tail(mn) = v.imag();
  }
  Eigen::Map<const Eigen::VectorXcd> mv(M.data(), mn);
  Eigen::VectorXd rhs(2 * mn);
  rhs.head(mn) = mv.real();
  rhs.tail(mn) = mv.imag();
  Element out = B.colPivHouseholderQr().solve(rhs);
  if ((B * out - rhs).norm() > 1e-8 * (1 + rhs.norm()))
    throw DomainError("matrix does not lie in the model");
  return out;
}

}  // namespace pjts
