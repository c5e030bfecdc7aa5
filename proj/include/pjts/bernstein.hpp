#pragma once

#include <Eigen/Dense>
#include <optional>
#include <random>

#include "pjts/jets.hpp"
#include "pjts/model.hpp"

namespace pjts {

// Euclidean Jordan algebra V(e) attached to a tube-type model, in model
// coordinates: x o y = {x, e, y}.  For sphere models the rank-2 twist with
// delta(x) = |x|^2/n is used instead of structure constants.
template <typename S>
struct EuclideanAlgebra {
  using Vec = Eigen::Vector<S, Eigen::Dynamic>;
  using Mat = Eigen::Matrix<S, Eigen::Dynamic, Eigen::Dynamic>;

  const TripleSystem* V = nullptr;
  bool sphere_mode = false;
  int r = 0;           // algebra rank
  int n = 0;           // coordinate count
  Rational half_d{0, 1};  // half the off-diagonal multiplicity d
  Vec unit;
  std::vector<Mat> circ;  // (x o y)_l = x^T circ[l] y
  Vec trace_vec;          // tr_J x = trace_vec . x
  Mat gram;               // tr_J(b_i o b_j)
  Mat gram_inv;
  Jet<S> delta;     // determinant polynomial as a jet at 0, order r
  Jet<S> delta_op;  // symbol delta(gram_inv xi)

  double d() const { return 2.0 * half_d.value(); }
  double sstar(double s) const { return s + half_d.value() * (r - 1); }
  double b_value(double s) const {
    double prod = 1;
    for (int j = 0; j < r; ++j) prod *= s + j * half_d.value();
    return prod;
  }

  // note: bilinear, no conjugation anywhere (Eigen's dot() would conjugate)
  Vec mul(const Vec& x, const Vec& y) const {
    if (circ.empty()) throw DomainError("algebra has no structure constants");
    Vec out(n);
    for (int l = 0; l < n; ++l) out[l] = (x.transpose() * circ[l] * y)(0, 0);
    return out;
  }
  Mat lmul(const Vec& x) const {
    Mat L(n, n);
    for (int l = 0; l < n; ++l) L.row(l) = x.transpose() * circ[l];
    return L;
  }
  Mat pmap(const Vec& x) const {
    Mat L = lmul(x);
    return L * L * S(2) - lmul(mul(x, x));
  }
  S trace(const Vec& x) const { return (trace_vec.array() * x.array()).sum(); }
  S delta_value(const Vec& x) const {
    Jet<S> j = jet_of_polynomial(delta, std::vector<S>(x.data(), x.data() + n), 0);
    return j.value();
  }
  // a_0 .. a_r of the characteristic polynomial, via Newton's identities
  std::vector<S> char_coeffs(const Vec& x) const {
    std::vector<S> p(r + 1), a(r + 1);
    Vec pw = x;
    for (int k = 1; k <= r; ++k) {
      p[k] = trace(pw);
      if (k < r) pw = mul(pw, x);
    }
    a[0] = S(1);
    for (int k = 1; k <= r; ++k) {
      S acc(0);
      for (int i = 1; i <= k; ++i)
        acc += S(i % 2 ? 1.0 : -1.0) * a[k - i] * p[i];
      a[k] = acc / S(double(k));
    }
    return a;
  }
  Vec jordan_exp(const Vec& v) const {
    Vec acc = unit, term = unit;
    for (int k = 1; k <= 60; ++k) {
      term = mul(term, v) * S(1.0 / k);
      acc += term;
      if (term.norm() < 1e-18 * acc.norm()) return acc;
    }
    throw NumericalDegeneracy("jordan_exp did not converge");
  }
  Vec jordan_inverse(const Vec& x) const {
    auto a = char_coeffs(x);
    if (std::abs(a[r]) < 1e-14) throw DomainError("element is not invertible");
    Vec acc = Vec::Zero(n), pw = unit;
    std::vector<Vec> powers{unit};
    for (int k = 1; k <= r - 1; ++k) powers.push_back(mul(powers.back(), x));
    for (int k = 0; k <= r - 1; ++k)
      acc += S(k % 2 ? -1.0 : 1.0) * a[k] * powers[r - 1 - k];
    return acc * (S(r % 2 ? 1.0 : -1.0) / a[r]);
  }
  // Newton iteration for the square root on the symmetric cone
  Vec jordan_sqrt(const Vec& y) const {
    Vec w = unit;
    for (int it = 0; it < 80; ++it) {
      Vec res = mul(w, w) - y;
      if (res.norm() < 1e-14 * (1 + y.norm())) return w;
      w -= (lmul(w).fullPivLu().solve(res) * S(0.5)).eval();
    }
    throw NumericalDegeneracy("jordan_sqrt did not converge");
  }
  Jet<S> delta_jet(const Vec& x0, int order) const {
    return jet_of_polynomial(delta, std::vector<S>(x0.data(), x0.data() + n),
                             order);
  }
};

using RealAlgebra = EuclideanAlgebra<double>;
using ComplexAlgebra = EuclideanAlgebra<cplx>;

// builders: sym:r and herm:r give the Euclidean algebra on V itself, sphere:n
// gives the rank-2 twist; cmat:rxr gives the complex algebra in complex coords
RealAlgebra euclidean_algebra(const TripleSystem& V);
ComplexAlgebra complex_algebra(const TripleSystem& V);

// tube-domain fundamental kernel h(x, y) = delta(e + P(sqrt_y) x) as a jet in x
template <typename S>
Jet<S> h_tube_jet(const EuclideanAlgebra<S>& A,
                  const typename EuclideanAlgebra<S>::Vec& x0,
                  const typename EuclideanAlgebra<S>::Vec& sqrt_y, int order) {
  typename EuclideanAlgebra<S>::Mat P = A.pmap(sqrt_y);
  typename EuclideanAlgebra<S>::Vec c0 = A.unit + P * x0;
  std::vector<Jet<S>> u;
  for (int i = 0; i < A.n; ++i) {
    Jet<S> ji(A.n, order);
    ji.c[0] = c0[i];
    std::vector<int> alpha(A.n, 0);
    for (int j = 0; j < A.n && order >= 1; ++j) {
      alpha[j] = 1;
      ji.c[ji.tab->index(alpha)] = P(i, j);
      alpha[j] = 0;
    }
    u.push_back(ji);
  }
  return poly_eval(A.delta, u);
}

// delta(d/dx) f at the jet's base point
template <typename S>
S apply_delta_dop(const EuclideanAlgebra<S>& A, const Jet<S>& f) {
  return apply_const_op(A.delta_op, f);
}

// D_s f = delta^{1+s} delta(d) (delta^{-s} f), evaluated at x0
template <typename S>
S apply_D_s(const EuclideanAlgebra<S>& A, double s, const Jet<S>& f,
            const typename EuclideanAlgebra<S>::Vec& x0) {
  int q = f.order();
  Jet<S> dneg = jet_real_power(A.delta_jet(x0, q), -s);
  S val = apply_const_op(A.delta_op, jet_mul(dneg, f));
  S d0 = A.delta_value(x0);
  if constexpr (std::is_same_v<S, double>)
    return std::pow(d0, 1.0 + s) * val;
  else
    return std::pow(d0, cplx(1.0 + s, 0)) * val;
}

template <typename S>
Jet<S> apply_D_s_jet(const EuclideanAlgebra<S>& A, double s, const Jet<S>& f,
                     const typename EuclideanAlgebra<S>::Vec& x0,
                     int out_order) {
  int q = f.order();
  if (q - A.r < out_order)
    throw DomainError("jet order too low for the requested operator");
  Jet<S> dneg = jet_real_power(A.delta_jet(x0, q), -s);
  Jet<S> g = diffop_apply(A.delta_op, jet_mul(dneg, f), q - A.r);
  Jet<S> dpos = jet_real_power(A.delta_jet(x0, q - A.r), 1.0 + s);
  return jet_truncate(jet_mul(dpos, g), out_order);
}

// E_s = (-1)^r D_{s*}, s* = s + d/2 (r-1)
template <typename S>
S apply_E_s(const EuclideanAlgebra<S>& A, double s, const Jet<S>& f,
            const typename EuclideanAlgebra<S>::Vec& x0) {
  S sign = S(A.r % 2 ? -1.0 : 1.0);
  return sign * apply_D_s(A, A.sstar(s), f, x0);
}

template <typename S>
Jet<S> apply_E_s_jet(const EuclideanAlgebra<S>& A, double s, const Jet<S>& f,
                     const typename EuclideanAlgebra<S>::Vec& x0,
                     int out_order) {
  S sign = S(A.r % 2 ? -1.0 : 1.0);
  Jet<S> out = apply_D_s_jet(A, A.sstar(s), f, x0, out_order);
  return out * sign;
}

// transpose against the Lebesgue pairing: E_s^t = delta^{-s*} delta(d) delta^{1+s*}
template <typename S>
S transpose_E_s(const EuclideanAlgebra<S>& A, double s, const Jet<S>& f,
                const typename EuclideanAlgebra<S>::Vec& x0) {
  int q = f.order();
  double st = A.sstar(s);
  Jet<S> dpos = jet_real_power(A.delta_jet(x0, q), 1.0 + st);
  S val = apply_const_op(A.delta_op, jet_mul(dpos, f));
  S d0 = A.delta_value(x0);
  if constexpr (std::is_same_v<S, double>)
    return std::pow(d0, -st) * val;
  else
    return std::pow(d0, cplx(-st, 0)) * val;
}

template <typename S>
Jet<S> transpose_E_s_jet(const EuclideanAlgebra<S>& A, double s,
                         const Jet<S>& f,
                         const typename EuclideanAlgebra<S>::Vec& x0,
                         int out_order) {
  int q = f.order();
  if (q - A.r < out_order)
    throw DomainError("jet order too low for the requested operator");
  double st = A.sstar(s);
  Jet<S> dpos = jet_real_power(A.delta_jet(x0, q), 1.0 + st);
  Jet<S> g = diffop_apply(A.delta_op, jet_mul(dpos, f), q - A.r);
  Jet<S> dneg = jet_real_power(A.delta_jet(x0, q - A.r), -st);
  return jet_truncate(jet_mul(dneg, g), out_order);
}

// components of the polynomial family: D_s = sum_k (-1)^k
// prod_{j=1..k} (s - (j-1)d/2) M_{r-k}.  Returns (M_0 f .. M_r f)(x0),
// extracted from D at the interpolation nodes s = 0..r.
template <typename S>
std::vector<S> extract_M(const EuclideanAlgebra<S>& A, const Jet<S>& f,
                         const typename EuclideanAlgebra<S>::Vec& x0) {
  int r = A.r;
  typename EuclideanAlgebra<S>::Mat T(r + 1, r + 1);
  typename EuclideanAlgebra<S>::Vec rhs(r + 1);
  for (int i = 0; i <= r; ++i) {
    double s = i;
    rhs[i] = apply_D_s(A, s, f, x0);
    for (int k = 0; k <= r; ++k) {
      double coef = (k % 2 ? -1.0 : 1.0);
      for (int j = 1; j <= k; ++j) coef *= s - (j - 1) * A.half_d.value();
      T(i, k) = S(coef);  // multiplies M_{r-k}
    }
  }
  typename EuclideanAlgebra<S>::Vec m = T.fullPivLu().solve(rhs);
  std::vector<S> out(r + 1);
  for (int k = 0; k <= r; ++k) out[k] = m[r - k];  // out[k] = M_k f
  return out;
}

// E_s f reassembled from the M_k values
template <typename S>
S reassemble_E_s(const EuclideanAlgebra<S>& A, double s,
                 const std::vector<S>& m) {
  S acc(0);
  for (int k = 0; k <= A.r; ++k) {
    double coef = ((A.r - k) % 2 ? -1.0 : 1.0);
    for (int j = 1; j <= k; ++j) coef *= s + A.half_d.value() * (A.r - j);
    acc += S(coef) * m[A.r - k];
  }
  return acc;
}

// case-dependent Bernstein polynomial attached to the verification identity
struct BPoly {
  int r = 0;
  Rational half_d{0, 1};
  double operator()(double s) const {
    double prod = 1;
    for (int j = 0; j < r; ++j) prod *= s + j * half_d.value();
    return prod;
  }
  std::vector<Rational> zeros() const {
    std::vector<Rational> z;
    for (int j = 0; j < r; ++j) z.push_back(Rational(-j, 1) * half_d);
    return z;
  }
};

struct CaseB {
  CaseTag tag = CaseTag::Reduced;
  BPoly base;
  int c = 0;
  // value of the b factor multiplying k^{s-1} in the case identity
  double eval(double s) const {
    switch (tag) {
      case CaseTag::ComplexStructure: return base(s) * base(s);
      case CaseTag::Reduced:
      case CaseTag::ReducedEuclidean: return base(2 * s) * base(2 * s - 1);
      case CaseTag::NonReduced: return base(s);
    }
    throw DomainError("unknown case");
  }
  std::vector<Rational> zero_set() const;  // zeros in s, deduplicated sorted
};

CaseB case_b(const TripleSystem& V);

// verification harness for the case identities relating E_s and k(x, y)
struct BernsteinData {
  const TripleSystem* V = nullptr;
  CaseTag tag = CaseTag::Reduced;
  std::optional<RealAlgebra> real_alg;
  std::optional<ComplexAlgebra> complex_alg;
  CaseB b;
};

BernsteinData bernstein_data(const TripleSystem& V);

// relative residual of the case identity at (x, y); x in the cone (real cases,
// delta(x) > 0), y in the cone/its complexification
double bs_verify(const BernsteinData& D, double s, const Element& x,
                 const Element& y);
double bs_verify_random(const BernsteinData& D, double s, int samples,
                        uint64_t seed = 42);

// delta(d) delta^s = b(s) delta^{s-1} at a cone point, relative residual
double bs_omega_residual(const RealAlgebra& A, double s, const Element& x0);
double bs_omega_random(const RealAlgebra& A, double s, int samples,
                       uint64_t seed = 42);

// shifted variant delta(d) delta(e + x)^s = b(s) delta(e + x)^{s-1}
double bs_unit_shift_residual(const RealAlgebra& A, double s,
                              const Element& x0);

// projection of a matrix onto the model (least squares over mat_basis)
Element element_from_matrix(const TripleSystem& V, const Eigen::MatrixXcd& M);

}  // namespace pjts
