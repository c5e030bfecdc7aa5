#pragma once

#include <map>
#include <optional>
#include <vector>

#include "pjts/types.hpp"

namespace pjts {

enum class Family { Sym, HermC, Cmat, Rect, Spin, Sphere };

enum class CaseTag { ComplexStructure, ReducedEuclidean, Reduced, NonReduced };

std::string family_name(Family f);
std::string case_name(CaseTag c);

struct ModelSpec {
  Family family;
  int p1 = 0;  // r / r / rows / rows / p / n
  int p2 = 0;  // cols / cols / q

  static ModelSpec parse(const std::string& text);
  std::string str() const;
};

struct CharacteristicData {
  int r = 0;
  int a = 0;
  int a_plus = 0;
  int a_minus = 0;
  int b = 0;
  int c = 0;
  int genus() const { return (r - 1) * a + b + 2 * c; }
};

// Structure-constant realization of a positive Jordan triple system.
// Coordinates are orthonormal with respect to the trace form, so matrix
// transposes of operators coincide with trace-form adjoints.
class TripleSystem {
 public:
  ModelSpec spec;
  int dim = 0;
  CaseTag case_tag = CaseTag::Reduced;
  CharacteristicData table;
  std::vector<Element> frame;

  std::optional<LinOp> J;            // complex structure (case ComplexStructure)
  std::optional<LinOp> conjugation;  // stored by hermitify
  std::optional<LinOp> embedding;    // columns: image of parent basis, from hermitify

  // matrix realization of the coordinate basis (families sym/herm/cmat/rect);
  // entries of an element are X = sum coords_i * mat_basis[i]
  std::vector<Eigen::MatrixXcd> mat_basis;
  int mat_rows = 0, mat_cols = 0;

  // natural (pre-orthonormalization) basis expressed in model coordinates
  LinOp nat_to_coords;

  const Element& product(const Element& x, const Element& y, const Element& z,
                         Element& out) const;
  Element triple(const Element& x, const Element& y, const Element& z) const;

  // L(e_i, e_j) as a matrix; the full structure tensor
  const LinOp& lmat(int i, int j) const { return lmats_[i * dim + j]; }

  // complex coordinates (ComplexStructure models only): basis pairs (v_k, J v_k)
  int cdim() const { return dim / 2; }
  CElement to_complex(const Element& x) const;
  Element from_complex(const CElement& z) const;
  Eigen::MatrixXcd complex_matrix(const LinOp& A) const;  // A commuting with J
  std::vector<Eigen::MatrixXcd> cmat_basis;               // matrix realization of v_k

  // internal: set by the builder
  std::vector<LinOp> lmats_;
  std::vector<Eigen::VectorXd> cpairs_;  // 2*cdim columns v_1, Jv_1, v_2, ...

  void check_dim(const Element& x) const {
    if (x.size() != dim) throw DimensionError("element has wrong dimension");
  }
};

TripleSystem build_model(const ModelSpec& spec);
inline TripleSystem build_model(const std::string& text) {
  return build_model(ModelSpec::parse(text));
}

Element triple_product(const TripleSystem& V, const Element& x,
                       const Element& y, const Element& z);

TripleSystem hermitify(const TripleSystem& V);

struct AxiomReport {
  double sym_residual = 0;       // {x,y,z} = {z,y,x}
  double jordan_residual = 0;    // five-term identity on basis quadruples
  double gram_min_eig = 0;
  std::optional<double> jstruct_residual;  // J-compatibility, complex models
  bool pass(double tol = 1e-12) const {
    bool ok = sym_residual <= tol && jordan_residual <= tol && gram_min_eig > 0;
    if (jstruct_residual) ok = ok && *jstruct_residual <= tol;
    return ok;
  }
};

AxiomReport validate_axioms(const TripleSystem& V);

// raw tensor access used by the negative-control tests: returns a copy of the
// model with one structure constant perturbed
TripleSystem perturb_structure_tensor(const TripleSystem& V, int i, int j,
                                      int k, int l, double amount);

}  // namespace pjts
