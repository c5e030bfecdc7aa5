#include "pjts/operators.hpp"

namespace pjts {

LinOp l_op(const TripleSystem& V, const Element& x, const Element& y) {
  V.check_dim(x); V.check_dim(y);
  int n = V.dim;
  LinOp L = LinOp::Zero(n, n);
  for (int i = 0; i < n; ++i) {
    if (x[i] == 0.0) continue;
    for (int j = 0; j < n; ++j)
      if (y[j] != 0.0) L.noalias() += (x[i] * y[j]) * V.lmat(i, j);
  }
  return L;
}

LinOp q_op(const TripleSystem& V, const Element& x) {
  V.check_dim(x);
  int n = V.dim;
  LinOp Q(n, n);
  for (int j = 0; j < n; ++j) {
    Element col = Element::Zero(n);
    for (int i = 0; i < n; ++i)
      if (x[i] != 0.0) col.noalias() += x[i] * (V.lmat(i, j) * x);
    Q.col(j) = col;
  }
  return Q;
}

LinOp bergman(const TripleSystem& V, const Element& x, const Element& y) {
  int n = V.dim;
  return LinOp::Identity(n, n) - 2.0 * l_op(V, x, y) + q_op(V, x) * q_op(V, y);
}

LinOp dual_bergman(const TripleSystem& V, const Element& x, const Element& y) {
  int n = V.dim;
  return LinOp::Identity(n, n) + 2.0 * l_op(V, x, y) + q_op(V, x) * q_op(V, y);
}

double trace_form(const TripleSystem& V, const Element& x, const Element& y) {
  V.check_dim(x); V.check_dim(y);
  double acc = 0;
  for (int i = 0; i < V.dim; ++i) {
    if (x[i] == 0.0) continue;
    for (int j = 0; j < V.dim; ++j)
      if (y[j] != 0.0) acc += x[i] * y[j] * V.lmat(i, j).trace();
  }
  return acc;
}

}  // namespace pjts
