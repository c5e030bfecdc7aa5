#include "pjts/spectral.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>

#include "pjts/operators.hpp"

namespace pjts {

namespace {

constexpr double kClusterTol = 1e-8;

double snap(double ev, const std::vector<double>& targets) {
  for (double t : targets)
    if (std::abs(ev - t) <= kClusterTol) return t;
  throw NumericalDegeneracy("eigenvalue " + std::to_string(ev) +
                            " off the expected cluster set");
}

// split the column space of B under the symmetric operator A restricted to it;
// returns (target value, sub-basis) pairs
std::vector<std::pair<double, Eigen::MatrixXd>> split_by(
    const Eigen::MatrixXd& B, const LinOp& A, const std::vector<double>& targets) {
  Eigen::MatrixXd M = B.transpose() * A * B;
  M = 0.5 * (M + M.transpose());
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(M);
  std::vector<std::pair<double, Eigen::MatrixXd>> out;
  int d = int(B.cols());
  int k = 0;
  while (k < d) {
    double v = snap(es.eigenvalues()[k], targets);
    int k2 = k;
    while (k2 < d && snap(es.eigenvalues()[k2], targets) == v) ++k2;
    out.emplace_back(v, B * es.eigenvectors().middleCols(k, k2 - k));
    k = k2;
  }
  return out;
}

}  // namespace

bool is_tripotent(const TripleSystem& V, const Element& c, double tol) {
  double nc = c.norm();
  if (nc == 0) return false;
  return (V.triple(c, c, c) - c).norm() <= tol * nc;
}

PeirceData peirce(const TripleSystem& V, const Element& c) {
  if (!is_tripotent(V, c))
    throw DomainError("peirce decomposition requires a tripotent");
  int n = V.dim;
  PeirceData out;
  out.tripotent = c;
  LinOp L = l_op(V, c, c);
  auto parts = split_by(Eigen::MatrixXd::Identity(n, n), L, {0.0, 0.5, 1.0});
  out.P0 = LinOp::Zero(n, n);
  out.Phalf = LinOp::Zero(n, n);
  out.P1 = LinOp::Zero(n, n);
  Eigen::MatrixXd B1;
  for (auto& [v, B] : parts) {
    LinOp P = B * B.transpose();
    if (v == 0.0) { out.P0 = P; out.d0 = int(B.cols()); }
    else if (v == 0.5) { out.Phalf = P; out.dhalf = int(B.cols()); }
    else { out.P1 = P; out.d1 = int(B.cols()); B1 = B; }
  }
  out.P1_plus = LinOp::Zero(n, n);
  out.P1_minus = LinOp::Zero(n, n);
  if (out.d1 > 0) {
    LinOp Q = q_op(V, c);
    for (auto& [v, B] : split_by(B1, Q, {-1.0, 1.0})) {
      if (v > 0) { out.P1_plus = B * B.transpose(); out.d1_plus = int(B.cols()); }
      else { out.P1_minus = B * B.transpose(); out.d1_minus = int(B.cols()); }
    }
  }
  return out;
}

const PeirceBlock& JointPeirce::block(int i, int j) const {
  for (const auto& b : blocks)
    if (b.i == i && b.j == j) return b;
  throw DomainError("no such Peirce block");
}

JointPeirce joint_peirce(const TripleSystem& V,
                         const std::vector<Element>& frame) {
  int n = V.dim, r = int(frame.size());
  for (int i = 0; i < r; ++i) {
    if (!is_tripotent(V, frame[i]))
      throw DomainError("frame element is not a tripotent");
    for (int j = i + 1; j < r; ++j)
      if (l_op(V, frame[i], frame[j]).cwiseAbs().maxCoeff() > 1e-10)
        throw DomainError("frame elements are not orthogonal");
  }

  std::vector<std::pair<std::vector<double>, Eigen::MatrixXd>> pieces;
  pieces.emplace_back(std::vector<double>{}, Eigen::MatrixXd::Identity(n, n));
  for (int k = 0; k < r; ++k) {
    LinOp L = l_op(V, frame[k], frame[k]);
    std::vector<std::pair<std::vector<double>, Eigen::MatrixXd>> next;
    for (auto& [sig, B] : pieces)
      for (auto& [v, Bs] : split_by(B, L, {0.0, 0.5, 1.0})) {
        auto s = sig;
        s.push_back(v);
        next.emplace_back(s, Bs);
      }
    pieces = std::move(next);
  }

  JointPeirce jp;
  jp.r = r;
  Element e = Element::Zero(n);
  for (auto& c : frame) e += c;
  LinOp Qe = q_op(V, e);
  for (auto& [sig, B] : pieces) {
    PeirceBlock blk;
    std::vector<int> ones, halves;
    for (int k = 0; k < r; ++k) {
      if (sig[k] == 1.0) ones.push_back(k + 1);
      if (sig[k] == 0.5) halves.push_back(k + 1);
    }
    if (ones.size() == 1 && halves.empty()) {
      blk.i = blk.j = ones[0];
    } else if (ones.empty() && halves.size() == 2) {
      blk.i = halves[0]; blk.j = halves[1];
    } else if (ones.empty() && halves.size() == 1) {
      blk.i = 0; blk.j = halves[0];
    } else if (ones.empty() && halves.empty()) {
      blk.i = blk.j = 0;
    } else {
      throw ConsistencyError("joint Peirce signature outside the root table");
    }
    blk.basis = B;
    if (blk.i >= 1) {
      for (auto& [v, Bs] : split_by(B, Qe, {-1.0, 1.0})) {
        if (v > 0) blk.basis_plus = Bs;
        else blk.basis_minus = Bs;
      }
    }
    jp.blocks.push_back(std::move(blk));
  }
  int total = 0;
  for (auto& b : jp.blocks) total += b.dim();
  if (total != n) throw ConsistencyError("Peirce block dimensions do not sum to dim V");
  return jp;
}

CharacteristicData characteristic_numbers(const TripleSystem& V) {
  JointPeirce jp = joint_peirce(V, V.frame);
  int r = jp.r;
  CharacteristicData d;
  d.r = r;
  auto dim_of = [&](int i, int j) {
    for (const auto& b : jp.blocks)
      if (b.i == i && b.j == j) return b;
    PeirceBlock empty;
    empty.i = i; empty.j = j;
    empty.basis = Eigen::MatrixXd::Zero(V.dim, 0);
    return empty;
  };
  // V_00 must vanish for a maximal frame
  for (const auto& b : jp.blocks)
    if (b.i == 0 && b.j == 0 && b.dim() > 0)
      throw ConsistencyError("canonical frame is not maximal");

  d.c = dim_of(1, 1).dim();
  d.b = dim_of(0, 1).dim();
  for (int i = 1; i <= r; ++i) {
    if (dim_of(i, i).dim() != d.c || dim_of(0, i).dim() != d.b)
      throw ConsistencyError("Peirce block dimensions depend on the index");
  }
  if (r >= 2) {
    auto b12 = dim_of(1, 2);
    d.a = b12.dim();
    d.a_plus = int(b12.basis_plus.cols());
    d.a_minus = int(b12.basis_minus.cols());
    for (int i = 1; i <= r; ++i)
      for (int j = i + 1; j <= r; ++j)
        if (dim_of(i, j).dim() != d.a)
          throw ConsistencyError("off-diagonal Peirce dimensions differ");
  }
  const CharacteristicData& t = V.table;
  if (d.r != t.r || d.a != t.a || d.a_plus != t.a_plus ||
      d.a_minus != t.a_minus || d.b != t.b || d.c != t.c)
    throw ConsistencyError("computed characteristic numbers disagree with the stored table");
  return d;
}

std::pair<LinOp, Element> conjugate_to_tripotent(const TripleSystem& V,
                                                 const Element& x) {
  V.check_dim(x);
  int n = V.dim;
  std::vector<double> t;
  Element recon = Element::Zero(n);
  for (const Element& c : V.frame) {
    double tj = c.dot(x) / c.dot(c);
    t.push_back(tj);
    recon += tj * c;
  }
  if ((recon - x).norm() > 1e-9 * (1.0 + x.norm()))
    throw DomainError("element is not in the canonical flat");
  LinOp A = LinOp::Zero(n, n);
  Element trip = Element::Zero(n);
  for (size_t j = 0; j < t.size(); ++j) {
    if (std::abs(t[j]) < 1e-12) continue;
    A += std::log(std::abs(t[j])) * l_op(V, V.frame[j], V.frame[j]);
    trip += (t[j] > 0 ? 1.0 : -1.0) * V.frame[j];
  }
  Eigen::SelfAdjointEigenSolver<LinOp> es(0.5 * (A + A.transpose()));
  LinOp g = es.eigenvectors() *
            (-es.eigenvalues().array()).exp().matrix().asDiagonal() *
            es.eigenvectors().transpose();
  return {g, trip};
}

}  // namespace pjts
