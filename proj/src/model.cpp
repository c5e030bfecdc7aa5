#include "pjts/model.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cctype>
#include <functional>
#include <sstream>

namespace pjts {

std::string family_name(Family f) {
  switch (f) {
    case Family::Sym: return "sym";
    case Family::HermC: return "herm";
    case Family::Cmat: return "cmat";
    case Family::Rect: return "rect";
    case Family::Spin: return "spin";
    case Family::Sphere: return "sphere";
  }
  return "?";
}

std::string case_name(CaseTag c) {
  switch (c) {
    case CaseTag::ComplexStructure: return "complex_structure";
    case CaseTag::ReducedEuclidean: return "reduced_euclidean";
    case CaseTag::Reduced: return "reduced";
    case CaseTag::NonReduced: return "non_reduced";
  }
  return "?";
}

ModelSpec ModelSpec::parse(const std::string& text) {
  auto colon = text.find(':');
  if (colon == std::string::npos)
    throw ConfigError("bad model spec '" + text +
                      "': expected sym:R, herm:R, cmat:RxS, rect:RxS, spin:P,Q or sphere:N");
  std::string fam = text.substr(0, colon);
  std::string rest = text.substr(colon + 1);
  auto to_int = [&](const std::string& s) {
    if (s.empty() || !std::all_of(s.begin(), s.end(),
                                  [](unsigned char ch) { return std::isdigit(ch); }))
      throw ConfigError("bad size parameter '" + s + "' in model spec '" + text + "'");
    return std::stoi(s);
  };
  ModelSpec spec;
  if (fam == "sym" || fam == "herm" || fam == "sphere") {
    spec.family = fam == "sym" ? Family::Sym
                : fam == "herm" ? Family::HermC
                                : Family::Sphere;
    spec.p1 = to_int(rest);
  } else if (fam == "cmat" || fam == "rect") {
    spec.family = fam == "cmat" ? Family::Cmat : Family::Rect;
    auto x = rest.find('x');
    if (x == std::string::npos)
      throw ConfigError("bad model spec '" + text + "': expected " + fam + ":RxS");
    spec.p1 = to_int(rest.substr(0, x));
    spec.p2 = to_int(rest.substr(x + 1));
  } else if (fam == "spin") {
    auto comma = rest.find(',');
    if (comma == std::string::npos)
      throw ConfigError("bad model spec '" + text + "': expected spin:P,Q");
    spec.family = Family::Spin;
    spec.p1 = to_int(rest.substr(0, comma));
    spec.p2 = to_int(rest.substr(comma + 1));
  } else {
    throw ConfigError("unknown model family '" + fam + "'");
  }
  if (spec.p1 < 1)
    throw ConfigError("bad model spec '" + text + "': sizes must be positive");
  if ((spec.family == Family::Cmat || spec.family == Family::Rect)) {
    if (spec.p2 < 1)
      throw ConfigError("bad model spec '" + text + "': sizes must be positive");
    if (spec.p1 > spec.p2)
      throw ConfigError("bad model spec '" + text + "': expected R <= S");
  }
  if (spec.family == Family::Spin && (spec.p1 < 1 || spec.p2 < 1 ||
                                      spec.p1 + spec.p2 < 3))
    throw ConfigError("bad model spec '" + text + "': spin needs P+Q >= 3");
  if (spec.family == Family::Sphere && spec.p1 < 2)
    throw ConfigError("bad model spec '" + text + "': sphere needs N >= 2");
  return spec;
}

std::string ModelSpec::str() const {
  std::ostringstream os;
  os << family_name(family) << ":";
  switch (family) {
    case Family::Sym:
    case Family::HermC:
    case Family::Sphere: os << p1; break;
    case Family::Cmat:
    case Family::Rect: os << p1 << "x" << p2; break;
    case Family::Spin: os << p1 << "," << p2; break;
  }
  return os.str();
}

const Element& TripleSystem::product(const Element& x, const Element& y,
                                     const Element& z, Element& out) const {
  check_dim(x); check_dim(y); check_dim(z);
  out = Element::Zero(dim);
  for (int i = 0; i < dim; ++i) {
    if (x[i] == 0.0) continue;
    for (int j = 0; j < dim; ++j) {
      if (y[j] == 0.0) continue;
      out.noalias() += (x[i] * y[j]) * (lmats_[i * dim + j] * z);
    }
  }
  return out;
}

Element TripleSystem::triple(const Element& x, const Element& y,
                             const Element& z) const {
  Element out;
  product(x, y, z, out);
  return out;
}

Element triple_product(const TripleSystem& V, const Element& x,
                       const Element& y, const Element& z) {
  return V.triple(x, y, z);
}

CElement TripleSystem::to_complex(const Element& x) const {
  if (!J) throw DomainError("model has no complex structure");
  int m = cdim();
  CElement z(m);
  for (int k = 0; k < m; ++k)
    z[k] = cplx(cpairs_[2 * k].dot(x), cpairs_[2 * k + 1].dot(x));
  return z;
}

Element TripleSystem::from_complex(const CElement& z) const {
  if (!J) throw DomainError("model has no complex structure");
  int m = cdim();
  if (z.size() != m) throw DimensionError("complex coordinate vector has wrong size");
  Element x = Element::Zero(dim);
  for (int k = 0; k < m; ++k)
    x += z[k].real() * cpairs_[2 * k] + z[k].imag() * cpairs_[2 * k + 1];
  return x;
}

Eigen::MatrixXcd TripleSystem::complex_matrix(const LinOp& A) const {
  int m = cdim();
  Eigen::MatrixXcd M(m, m);
  for (int k = 0; k < m; ++k) M.col(k) = to_complex(A * cpairs_[2 * k]);
  return M;
}

namespace {

struct RawModel {
  int dim = 0;
  CaseTag case_tag;
  CharacteristicData table;
  std::function<Element(const Element&, const Element&, const Element&)> product;
  std::vector<Element> frame;                 // natural coordinates
  std::vector<Eigen::MatrixXcd> mat_basis;    // optional matrix realization
  int mat_rows = 0, mat_cols = 0;
  std::optional<LinOp> J;                     // natural coordinates
};

using CMat = Eigen::MatrixXcd;

// {x,y,z} = (x y* z + z y* x)/2 on a space of matrices
CMat matrix_triple(const CMat& X, const CMat& Y, const CMat& Z) {
  CMat Ya = Y.adjoint();
  return 0.5 * (X * Ya * Z + Z * Ya * X);
}

Element coords_of(const std::vector<CMat>& basis, const CMat& X) {
  int n = int(basis.size());
  Element out(n);
  for (int i = 0; i < n; ++i) {
    double nrm = basis[i].cwiseAbs2().sum();
    out[i] = (X.cwiseProduct(basis[i].conjugate())).sum().real() / nrm;
  }
  return out;
}

CMat matrix_of(const std::vector<CMat>& basis, const Element& x) {
  CMat X = CMat::Zero(basis[0].rows(), basis[0].cols());
  for (int i = 0; i < int(basis.size()); ++i) X += x[i] * basis[i];
  return X;
}

RawModel raw_matrix_family(const ModelSpec& spec) {
  RawModel m;
  int r = spec.p1, s = spec.p2;
  std::vector<CMat> basis;
  const cplx I(0, 1);
  auto unit = [&](int rows, int cols, int i, int j) {
    CMat E = CMat::Zero(rows, cols);
    E(i, j) = 1.0;
    return E;
  };
  switch (spec.family) {
    case Family::Sym: {
      m.mat_rows = m.mat_cols = r;
      for (int i = 0; i < r; ++i) basis.push_back(unit(r, r, i, i));
      for (int i = 0; i < r; ++i)
        for (int j = i + 1; j < r; ++j)
          basis.push_back(unit(r, r, i, j) + unit(r, r, j, i));
      m.case_tag = CaseTag::ReducedEuclidean;
      m.table = {r, r > 1 ? 1 : 0, r > 1 ? 1 : 0, 0, 0, 1};
      break;
    }
    case Family::HermC: {
      m.mat_rows = m.mat_cols = r;
      for (int i = 0; i < r; ++i) basis.push_back(unit(r, r, i, i));
      for (int i = 0; i < r; ++i)
        for (int j = i + 1; j < r; ++j) {
          basis.push_back(unit(r, r, i, j) + unit(r, r, j, i));
          basis.push_back(I * (unit(r, r, i, j) - unit(r, r, j, i)));
        }
      m.case_tag = CaseTag::ReducedEuclidean;
      m.table = {r, r > 1 ? 2 : 0, r > 1 ? 2 : 0, 0, 0, 1};
      break;
    }
    case Family::Rect: {
      m.mat_rows = r; m.mat_cols = s;
      for (int i = 0; i < r; ++i)
        for (int j = 0; j < s; ++j) basis.push_back(unit(r, s, i, j));
      m.case_tag = CaseTag::Reduced;
      m.table = {r, r > 1 ? 2 : 0, r > 1 ? 1 : 0, r > 1 ? 1 : 0, s - r, 1};
      break;
    }
    case Family::Cmat: {
      m.mat_rows = r; m.mat_cols = s;
      for (int i = 0; i < r; ++i)
        for (int j = 0; j < s; ++j) basis.push_back(unit(r, s, i, j));
      for (int i = 0; i < r; ++i)
        for (int j = 0; j < s; ++j) basis.push_back(I * unit(r, s, i, j));
      m.case_tag = CaseTag::ComplexStructure;
      m.table = {r, r > 1 ? 4 : 0, r > 1 ? 2 : 0, r > 1 ? 2 : 0, 2 * (s - r), 2};
      break;
    }
    default: throw ConfigError("not a matrix family");
  }
  m.dim = int(basis.size());
  m.mat_basis = basis;
  m.product = [basis](const Element& x, const Element& y, const Element& z) {
    return coords_of(basis,
                     matrix_triple(matrix_of(basis, x), matrix_of(basis, y),
                                   matrix_of(basis, z)));
  };
  int rr = std::min(r, spec.family == Family::Sym || spec.family == Family::HermC ? r : s);
  for (int i = 0; i < rr; ++i)
    m.frame.push_back(coords_of(basis, unit(m.mat_rows, m.mat_cols, i, i)));
  if (spec.family == Family::Cmat) {
    LinOp Jn = LinOp::Zero(m.dim, m.dim);
    int half = m.dim / 2;
    for (int k = 0; k < half; ++k) {
      Jn(half + k, k) = 1.0;   // i * B_k = B_{half+k}
      Jn(k, half + k) = -1.0;  // i * (i B_k) = -B_k
    }
    m.J = Jn;
  }
  return m;
}

RawModel raw_spin(const ModelSpec& spec) {
  int p = spec.p1, q = spec.p2, n = p + q;
  RawModel m;
  m.dim = n;
  m.case_tag = CaseTag::Reduced;
  m.table = {2, p + q - 2, q - 1, p - 1, 0, 1};
  Element theta(n);
  for (int i = 0; i < n; ++i) theta[i] = i < p ? 1.0 : -1.0;
  m.product = [n, theta](const Element& x, const Element& y, const Element& z) {
    double xy = x.dot(y), zy = z.dot(y);
    double beta = 0;
    for (int i = 0; i < n; ++i) beta += theta[i] * x[i] * z[i];
    Element out = xy * z + zy * x;
    for (int i = 0; i < n; ++i) out[i] -= beta * theta[i] * y[i];
    return out;
  };
  Element c1 = Element::Zero(n), c2 = Element::Zero(n);
  c1[0] = 0.5; c1[p] = 0.5;
  c2[0] = 0.5; c2[p] = -0.5;
  m.frame = {c1, c2};
  return m;
}

RawModel raw_sphere(const ModelSpec& spec) {
  int n = spec.p1;
  RawModel m;
  m.dim = n;
  m.case_tag = CaseTag::NonReduced;
  m.table = {1, 0, 0, 0, 0, n};
  m.product = [](const Element& x, const Element& y, const Element& z) {
    return Element(x.dot(y) * z + z.dot(y) * x - x.dot(z) * y);
  };
  Element c1 = Element::Zero(n);
  c1[0] = 1.0;
  m.frame = {c1};
  return m;
}

// inverse symmetric square root
LinOp inv_sqrt(const LinOp& G) {
  Eigen::SelfAdjointEigenSolver<LinOp> es(G);
  if (es.eigenvalues().minCoeff() <= 0)
    throw ConsistencyError("trace-form Gram matrix is not positive definite");
  return es.operatorInverseSqrt();
}

TripleSystem finalize(const ModelSpec& spec, RawModel&& raw) {
  int n = raw.dim;
  if (n > 64) throw ConfigError("model dimension " + std::to_string(n) + " exceeds 64");
  if (raw.table.r > 4) throw ConfigError("model rank exceeds 4");

  // structure tensor in the natural basis
  std::vector<LinOp> lm(size_t(n) * n);
  {
    std::vector<Element> e(n);
    for (int i = 0; i < n; ++i) e[i] = Element::Unit(n, i);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        LinOp L(n, n);
        for (int k = 0; k < n; ++k) L.col(k) = raw.product(e[i], e[j], e[k]);
        lm[i * n + j] = L;
      }
  }

  // orthonormalize w.r.t. the trace form
  LinOp G(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) G(i, j) = lm[i * n + j].trace();
  G = 0.5 * (G + G.transpose());
  LinOp S = inv_sqrt(G);       // new basis vectors are columns of S
  LinOp Sinv = S.inverse();

  TripleSystem V;
  V.spec = spec;
  V.dim = n;
  V.case_tag = raw.case_tag;
  V.table = raw.table;
  V.nat_to_coords = Sinv;
  V.mat_rows = raw.mat_rows;
  V.mat_cols = raw.mat_cols;

  // transform the tensor: L'(i,j) = Sinv * L(S e_i, S e_j) * S
  V.lmats_.resize(size_t(n) * n);
  std::vector<LinOp> partial(size_t(n) * n);  // partial[i*n+b] = sum_a S(a,i) L(a,b)
  for (int i = 0; i < n; ++i)
    for (int b = 0; b < n; ++b) {
      LinOp acc = LinOp::Zero(n, n);
      for (int a = 0; a < n; ++a)
        if (S(a, i) != 0.0) acc.noalias() += S(a, i) * lm[a * n + b];
      partial[i * n + b] = acc;
    }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      LinOp acc = LinOp::Zero(n, n);
      for (int b = 0; b < n; ++b)
        if (S(b, j) != 0.0) acc.noalias() += S(b, j) * partial[i * n + b];
      V.lmats_[i * n + j] = Sinv * acc * S;
    }

  for (const Element& c : raw.frame) V.frame.push_back(Sinv * c);
  if (!raw.mat_basis.empty()) {
    V.mat_basis.resize(n);
    for (int i = 0; i < n; ++i) {
      CMat M = CMat::Zero(raw.mat_rows, raw.mat_cols);
      for (int j = 0; j < n; ++j) M += S(j, i) * raw.mat_basis[j];
      V.mat_basis[i] = M;
    }
  }
  if (raw.J) {
    LinOp Jn = Sinv * (*raw.J) * S;
    if ((Jn * Jn + LinOp::Identity(n, n)).cwiseAbs().maxCoeff() > 1e-10)
      throw ConsistencyError("complex structure does not square to -Id");
    V.J = Jn;
  }

  // complex coordinate pairs (v_k, J v_k), orthonormal
  if (V.J) {
    const LinOp& Jn = *V.J;
    std::vector<Element> chosen;
    auto project_out = [&](Element v) {
      for (const Element& u : chosen) v -= u.dot(v) * u;
      return v;
    };
    while (int(chosen.size()) < n) {
      Element best; double best_norm = -1;
      for (int i = 0; i < n; ++i) {
        Element v = project_out(Element::Unit(n, i));
        double nn = v.norm();
        if (nn > best_norm) { best_norm = nn; best = v; }
      }
      if (best_norm < 1e-6)
        throw NumericalDegeneracy("failed to build complex coordinate basis");
      best /= best.norm();
      Element jb = project_out(Jn * best);
      if (jb.norm() < 1e-6)
        throw NumericalDegeneracy("complex structure degenerate on residual space");
      jb /= jb.norm();
      chosen.push_back(best);
      chosen.push_back(jb);
    }
    V.cpairs_ = chosen;
    if (!V.mat_basis.empty()) {
      for (int k = 0; k < n / 2; ++k) {
        CMat M = CMat::Zero(raw.mat_rows, raw.mat_cols);
        for (int i = 0; i < n; ++i) M += V.cpairs_[2 * k][i] * V.mat_basis[i];
        V.cmat_basis.push_back(M);
      }
    }
  }
  return V;
}

}  // namespace

TripleSystem build_model(const ModelSpec& spec) {
  switch (spec.family) {
    case Family::Sym:
    case Family::HermC:
      if (spec.p1 < 1) throw ConfigError("rank must be >= 1");
      return finalize(spec, raw_matrix_family(spec));
    case Family::Cmat:
    case Family::Rect:
      if (spec.p1 < 1 || spec.p2 < spec.p1)
        throw ConfigError("need 1 <= rows <= cols for matrix models");
      return finalize(spec, raw_matrix_family(spec));
    case Family::Spin:
      if (spec.p1 < 1 || spec.p2 < 1) throw ConfigError("spin model needs p,q >= 1");
      if (spec.p1 + spec.p2 < 3) throw ConfigError("spin model needs p+q >= 3");
      return finalize(spec, raw_spin(spec));
    case Family::Sphere:
      if (spec.p1 < 2) throw ConfigError("sphere model needs n >= 2");
      return finalize(spec, raw_sphere(spec));
  }
  throw ConfigError("unknown family");
}

TripleSystem hermitify(const TripleSystem& V) {
  if (V.J) throw DomainError("hermitify called on a complex-structure model");
  int n = V.dim, N = 2 * n;
  if (N > 64) throw ConfigError("hermitification exceeds dimension bound");

  RawModel raw;
  raw.dim = N;
  raw.case_tag = CaseTag::ComplexStructure;

  // natural basis: (b_1..b_n, i b_1..i b_n) over V's coordinate basis.
  // The product is complex-linear in the outer slots and conjugate-linear in
  // the middle one, so {i^A x, i^B y, i^C z} = i^(A-B+C) {x,y,z}.
  const TripleSystem* base = &V;
  raw.product = [base, n](const Element& x, const Element& y, const Element& z) {
    Element out = Element::Zero(2 * n);
    Element tmp;
    for (int sx = 0; sx < 2; ++sx)
      for (int sy = 0; sy < 2; ++sy)
        for (int sz = 0; sz < 2; ++sz) {
          Element xs = x.segment(sx * n, n), ys = y.segment(sy * n, n),
                  zs = z.segment(sz * n, n);
          if (xs.isZero(0) || ys.isZero(0) || zs.isZero(0)) continue;
          base->product(xs, ys, zs, tmp);
          int phase = ((sx - sy + sz) % 4 + 4) % 4;  // power of i
          switch (phase) {
            case 0: out.segment(0, n) += tmp; break;
            case 1: out.segment(n, n) += tmp; break;
            case 2: out.segment(0, n) -= tmp; break;
            case 3: out.segment(n, n) -= tmp; break;
          }
        }
    return out;
  };

  LinOp Jn = LinOp::Zero(N, N);
  Jn.block(n, 0, n, n) = LinOp::Identity(n, n);
  Jn.block(0, n, n, n) = -LinOp::Identity(n, n);
  raw.J = Jn;

  auto embed_nat = [n](const Element& x) {
    Element e = Element::Zero(2 * n);
    e.segment(0, n) = x;
    return e;
  };

  const CharacteristicData& t = V.table;
  if (V.case_tag == CaseTag::NonReduced) {
    if (V.spec.family != Family::Sphere)
      throw DomainError("hermitification frame only implemented for sphere among non-reduced models");
    // complex rank 2r with frame (c +- i c')/2 built from an orthogonal pair
    Element e1 = V.frame[0];
    Element e2 = Element::Zero(n); e2[1] = 1.0;
    e2 = V.nat_to_coords * e2;
    Element d1 = Element::Zero(N), d2 = Element::Zero(N);
    d1.segment(0, n) = 0.5 * e1; d1.segment(n, n) = 0.5 * e2;
    d2.segment(0, n) = 0.5 * e1; d2.segment(n, n) = -0.5 * e2;
    raw.frame = {d1, d2};
    int ac = t.c - 2, bc = t.b / 2;
    raw.table = {2 * t.r, 2 * ac, ac, ac, 2 * bc, 2};
  } else {
    for (const Element& c : V.frame) raw.frame.push_back(embed_nat(c));
    raw.table = {t.r, 2 * t.a, t.a, t.a, 2 * t.b, 2};
  }

  if (!V.mat_basis.empty()) {
    raw.mat_rows = V.mat_rows;
    raw.mat_cols = V.mat_cols;
    const cplx I(0, 1);
    for (const auto& B : V.mat_basis) raw.mat_basis.push_back(B);
    for (const auto& B : V.mat_basis) raw.mat_basis.push_back(I * B);
  }

  ModelSpec spec = V.spec;  // keep the parent's spec label
  TripleSystem W = finalize(spec, std::move(raw));
  // embedding of parent coordinates and the conjugation fixing it
  LinOp E(N, n);
  for (int i = 0; i < n; ++i) E.col(i) = W.nat_to_coords * embed_nat(Element::Unit(n, i));
  W.embedding = E;
  LinOp Cnat = LinOp::Zero(N, N);
  Cnat.block(0, 0, n, n) = LinOp::Identity(n, n);
  Cnat.block(n, n, n, n) = -LinOp::Identity(n, n);
  W.conjugation = W.nat_to_coords * Cnat * W.nat_to_coords.inverse();
  return W;
}

AxiomReport validate_axioms(const TripleSystem& V) {
  int n = V.dim;
  AxiomReport rep;

  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        double d = (V.lmat(i, j).col(k) - V.lmat(k, j).col(i)).cwiseAbs().maxCoeff();
        rep.sym_residual = std::max(rep.sym_residual, d);
      }

  // operator form of the five-term identity, quantified over basis quadruples
  auto l_of = [&](const Element& w, int y) {
    LinOp acc = LinOp::Zero(n, n);
    for (int c = 0; c < n; ++c)
      if (w[c] != 0.0) acc.noalias() += w[c] * V.lmat(c, y);
    return acc;
  };
  auto l_of_right = [&](int x, const Element& w) {
    LinOp acc = LinOp::Zero(n, n);
    for (int c = 0; c < n; ++c)
      if (w[c] != 0.0) acc.noalias() += w[c] * V.lmat(x, c);
    return acc;
  };
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      const LinOp& Lab = V.lmat(a, b);
      LinOp Lba = V.lmat(b, a);
      for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
          LinOp comm = Lab * V.lmat(x, y) - V.lmat(x, y) * Lab;
          Element abx = V.lmat(a, b).col(x);
          Element bay = Lba.col(y);
          LinOp rhs = l_of(abx, y) - l_of_right(x, bay);
          rep.jordan_residual =
              std::max(rep.jordan_residual, (comm - rhs).cwiseAbs().maxCoeff());
        }
    }

  LinOp G(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) G(i, j) = V.lmat(i, j).trace();
  Eigen::SelfAdjointEigenSolver<LinOp> es(0.5 * (G + G.transpose()));
  rep.gram_min_eig = es.eigenvalues().minCoeff();

  if (V.J) {
    const LinOp& Jm = *V.J;
    double r = (Jm * Jm + LinOp::Identity(n, n)).cwiseAbs().maxCoeff();
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        // J{x,y,z} = {Jx,y,z}
        LinOp lhs = Jm * V.lmat(i, j);
        LinOp acc = LinOp::Zero(n, n);
        for (int c = 0; c < n; ++c)
          if (Jm(c, i) != 0.0) acc.noalias() += Jm(c, i) * V.lmat(c, j);
        r = std::max(r, (lhs - acc).cwiseAbs().maxCoeff());
        // {x,Jy,z} = -J{x,y,z}
        acc.setZero();
        for (int c = 0; c < n; ++c)
          if (Jm(c, j) != 0.0) acc.noalias() += Jm(c, j) * V.lmat(i, c);
        r = std::max(r, (acc + lhs).cwiseAbs().maxCoeff());
      }
    rep.jstruct_residual = r;
  }
  return rep;
}

TripleSystem perturb_structure_tensor(const TripleSystem& V, int i, int j,
                                      int k, int l, double amount) {
  TripleSystem W = V;
  W.lmats_[i * V.dim + j](l, k) += amount;
  return W;
}

}  // namespace pjts
