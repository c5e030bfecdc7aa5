#pragma once

#include "pjts/model.hpp"

namespace pjts {

struct MinPolyResult {
  int rho = 0;
  Eigen::VectorXcd m;   // m_1 .. m_rho; real parts only for real models
  double residual = 0;  // least-squares defect, relative
};

Element jordan_power(const TripleSystem& V, const Element& x, const Element& y,
                     int k);

// real absolute rank, sampled and cross-checked against the classification
int absolute_rank(const TripleSystem& V);

// degree of the generic minimal polynomial used for h: complex rank on
// complex-structure models, r on reduced ones, 2r on non-reduced ones
int minpoly_degree(const TripleSystem& V);

MinPolyResult minpoly_coeffs(const TripleSystem& V, const Element& x,
                             const Element& y);

// minpoly with perturbation retries at non-regular pairs
MinPolyResult minpoly_eval(const TripleSystem& V, const Element& x,
                           const Element& y);

cplx h_kernel(const TripleSystem& V, const Element& x, const Element& y);

double fundamental_kernel(const TripleSystem& V, const Element& x,
                          const Element& y);

}  // namespace pjts
