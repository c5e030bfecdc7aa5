#pragma once

#include "pjts/model.hpp"

namespace pjts {

struct PeirceData {
  Element tripotent;
  LinOp P0, Phalf, P1;
  int d0 = 0, dhalf = 0, d1 = 0;
  LinOp P1_plus, P1_minus;  // Q(c)-eigenprojections inside V(c,1)
  int d1_plus = 0, d1_minus = 0;
};

struct PeirceBlock {
  int i, j;                // 0 <= i <= j <= r; (0,0) block is empty for frames
  Eigen::MatrixXd basis;   // orthonormal columns spanning V_ij
  // Q(e)-splitting of the diagonal/off-diagonal blocks with i,j >= 1
  Eigen::MatrixXd basis_plus, basis_minus;
  int dim() const { return int(basis.cols()); }
};

struct JointPeirce {
  int r = 0;
  std::vector<PeirceBlock> blocks;
  const PeirceBlock& block(int i, int j) const;
};

bool is_tripotent(const TripleSystem& V, const Element& c, double tol = 1e-10);

PeirceData peirce(const TripleSystem& V, const Element& c);

JointPeirce joint_peirce(const TripleSystem& V,
                         const std::vector<Element>& frame);

CharacteristicData characteristic_numbers(const TripleSystem& V);

std::pair<LinOp, Element> conjugate_to_tripotent(const TripleSystem& V,
                                                 const Element& x_in_flat);

}  // namespace pjts
