#include "pjts/verify.hpp"

#include <unsupported/Eigen/MatrixFunctions>
#include <algorithm>
#include <chrono>
#include <cmath>
#include <random>

#include "pjts/analysis.hpp"
#include "pjts/bernstein.hpp"
#include "pjts/kernels.hpp"
#include "pjts/minpoly.hpp"
#include "pjts/operators.hpp"
#include "pjts/spectral.hpp"

namespace pjts {

namespace {

struct Ctx {
  const TripleSystem& V;
  std::mt19937_64 rng;
  double tol_override;
  int samples_override;
  std::vector<CheckRecord>& out;

  int samples(int dflt) const {
    return samples_override > 0 ? samples_override : dflt;
  }
  void add(const std::string& check, const std::string& identity,
           double residual, double tol) {
    double t = tol_override >= 0 ? tol_override : tol;
    out.push_back({check, identity, residual, t, residual <= t});
  }
  Element randn(double scale = 1.0) {
    std::normal_distribution<double> N(0, scale);
    Element x(V.dim);
    for (int i = 0; i < V.dim; ++i) x[i] = N(rng);
    return x;
  }
  // random flat coordinates with well-separated squares
  std::vector<double> flat_coords() {
    std::uniform_real_distribution<double> U(0.2, 1.2);
    int r = V.table.r;
    for (int attempt = 0; attempt < 100; ++attempt) {
      std::vector<double> t(r);
      for (double& v : t) v = U(rng) * (rng() % 2 ? 1 : -1);
      bool ok = true;
      for (int i = 0; i < r && ok; ++i)
        for (int j = i + 1; j < r; ++j)
          if (std::abs(t[i] * t[i] - t[j] * t[j]) < 0.05) ok = false;
      if (ok) return t;
    }
    throw NumericalDegeneracy("could not draw separated flat coordinates");
  }
  Element flat_point(const std::vector<double>& t) {
    Element x = Element::Zero(V.dim);
    for (size_t j = 0; j < t.size(); ++j) x += t[j] * V.frame[j];
    return x;
  }
};

void suite_axioms(Ctx& c) {
  AxiomReport rep = validate_axioms(c.V);
  c.add("axioms_outer_symmetry", "triple product symmetric in outer arguments",
        rep.sym_residual, 1e-12);
  c.add("axioms_jordan_identity", "five-term commutator identity for L operators",
        rep.jordan_residual, 1e-12);
  c.add("axioms_trace_form_positive", "trace form Gram matrix positive definite",
        std::max(0.0, -rep.gram_min_eig) +
            (rep.gram_min_eig > 0 ? 0.0 : 1.0),
        0);
  if (rep.jstruct_residual)
    c.add("axioms_complex_structure", "J compatibility with the triple product",
          *rep.jstruct_residual, 1e-12);
}

void suite_peirce(Ctx& c) {
  const TripleSystem& V = c.V;
  double trip = 0;
  for (const Element& f : V.frame)
    trip = std::max(trip, (V.triple(f, f, f) - f).norm());
  c.add("peirce_frame_tripotent", "stored frame elements satisfy {c,c,c} = c",
        trip, 1e-10);

  double eig_res = 0;
  for (const Element& f : V.frame) {
    LinOp L = l_op(V, f, f);
    Eigen::SelfAdjointEigenSolver<LinOp> es(L);
    for (int i = 0; i < V.dim; ++i) {
      double e = es.eigenvalues()(i);
      double d = std::min({std::abs(e), std::abs(e - 0.5), std::abs(e - 1.0)});
      eig_res = std::max(eig_res, d);
    }
  }
  c.add("peirce_eigenvalues", "L(c,c) spectrum contained in {0, 1/2, 1}",
        eig_res, 1e-10);

  double dims_res = 1;
  try {
    characteristic_numbers(V);  // throws if block dimensions disagree
    dims_res = 0;
  } catch (const std::exception&) {
  }
  c.add("peirce_joint_dimensions",
        "joint Peirce block dimensions match the classification table",
        dims_res, 0);

  const CharacteristicData& t = V.table;
  int genus = (t.r - 1) * t.a + t.b + 2 * t.c;
  c.add("peirce_genus", "genus p = (r-1)a + b + 2c",
        std::abs(genus - t.genus()), 0);
}

void suite_kernels(Ctx& c) {
  const TripleSystem& V = c.V;
  int p = V.table.genus();

  double flat_res = 0;
  int n_flat = c.samples(500);
  for (int i = 0; i < n_flat; ++i) {
    auto t = c.flat_coords();
    Element x = c.flat_point(t);
    double expect = 1;
    for (double tj : t) expect *= 1 + tj * tj;
    expect = std::pow(expect, p);
    double got = canonical_kernel(V, x, x);
    flat_res = std::max(flat_res, std::abs(got - expect) / got);
  }
  c.add("kernel_flat_closed_form",
        "canonical kernel on flats equals prod(1 + t_j^2)^p", flat_res, 1e-9);

  double pw = verify_power_identity(V, c.samples(200), c.rng());
  c.add("kernel_power_identity",
        "canonical kernel equals fundamental kernel to the power p/2", pw, 1e-8);

  double cov = 0;
  for (int i = 0; i < 5; ++i) {
    Element u = c.randn(0.3), v = c.randn(0.3);
    Element x = c.randn(0.4), y = c.randn(0.4);
    cov = std::max(cov, covariance_check(V, u, v, x, y));
  }
  c.add("kernel_covariance",
        "canonical kernel invariant under the structure group action", cov,
        1e-8);
}

void suite_minpoly(Ctx& c) {
  const TripleSystem& V = c.V;
  int rho = minpoly_degree(V);
  bool doubled = V.case_tag == CaseTag::NonReduced;

  double flat_res = 0;
  for (int rep = 0; rep < 25; ++rep) {
    auto t = c.flat_coords();
    Element x = c.flat_point(t);
    MinPolyResult mp = minpoly_eval(V, x, x);
    // expected coefficients: elementary symmetric functions of the t_j^2,
    // each value doubled for non-reduced models
    std::vector<double> sq;
    for (double tj : t) {
      sq.push_back(tj * tj);
      if (doubled) sq.push_back(tj * tj);
    }
    std::vector<double> e(rho + 1, 0);
    e[0] = 1;
    for (double u : sq)
      for (int k = rho; k >= 1; --k) e[k] += e[k - 1] * u;
    for (int k = 1; k <= rho; ++k)
      flat_res = std::max(flat_res, std::abs(mp.m[k - 1].real() - e[k]) +
                                        std::abs(mp.m[k - 1].imag()));
  }
  c.add("minpoly_flat_oracle",
        "flat coefficients are elementary symmetric functions of t_j^2",
        flat_res, 1e-9);

  double resub = 0;
  for (int rep = 0; rep < 25; ++rep) {
    Element x = c.randn(0.8), y = c.randn(0.8);
    MinPolyResult mp;
    try {
      mp = minpoly_coeffs(V, x, y);
    } catch (const NumericalDegeneracy&) {
      --rep;
      continue;
    }
    std::vector<Element> chain;
    chain.push_back(x);
    for (int k = 1; k <= rho; ++k)
      chain.push_back(V.triple(x, y, chain.back()));
    if (V.case_tag == CaseTag::ComplexStructure) {
      CElement res = V.to_complex(chain[rho]);
      for (int j = 1; j <= rho; ++j)
        res += cplx(j % 2 ? -1.0 : 1.0) * mp.m[j - 1] *
               V.to_complex(chain[rho - j]);
      resub = std::max(resub, res.norm() / chain[rho].norm());
    } else {
      Element res = chain[rho];
      for (int j = 1; j <= rho; ++j)
        res += (j % 2 ? -1.0 : 1.0) * mp.m[j - 1].real() * chain[rho - j];
      resub = std::max(resub, res.norm() / chain[rho].norm());
    }
  }
  c.add("minpoly_resubstitution",
        "minimal polynomial annihilates the power chain", resub, 1e-9);

  double inv = 0;
  for (int rep = 0; rep < 10; ++rep) {
    Element x = c.randn(0.7), y = c.randn(0.7);
    Element u = c.randn(0.3), v = c.randn(0.3);
    LinOp g = l_op(V, u, v).exp();
    try {
      MinPolyResult m1 = minpoly_eval(V, x, y);
      MinPolyResult m2 =
          minpoly_eval(V, g * x, g.transpose().inverse() * y);
      inv = std::max(inv, (m1.m - m2.m).cwiseAbs().maxCoeff());
    } catch (const NumericalDegeneracy&) {
      --rep;
    }
  }
  c.add("minpoly_str_invariance",
        "coefficients invariant under the structure group", inv, 1e-8);
}

void suite_bernstein(Ctx& c) {
  const TripleSystem& V = c.V;
  if (V.spec.family == Family::Rect || V.spec.family == Family::Spin) return;
  if (V.spec.family == Family::Cmat && V.spec.p1 != V.spec.p2) return;
  BernsteinData D = bernstein_data(V);
  const double svals[] = {0.6, 1.7, 3.0, -0.3};

  if (D.real_alg) {
    const RealAlgebra& A = *D.real_alg;
    double omega = 0;
    for (double s : {0.5, 1.7, 3.0, -0.3})
      omega = std::max(omega, bs_omega_random(A, s, c.samples(50), c.rng()));
    c.add("bernstein_cone_identity",
          "delta(d) delta^s = b(s) delta^{s-1} on the cone", omega, 1e-9);

    double shift = 0;
    std::normal_distribution<double> N(0, 0.3);
    for (int i = 0; i < 20; ++i) {
      Element x0(A.n);
      for (int j = 0; j < A.n; ++j) x0[j] = N(c.rng);
      if (A.delta_value(A.unit + x0) <= 0.05) { --i; continue; }
      for (double s : {0.5, 1.7, 3.0, -0.3})
        shift = std::max(shift, bs_unit_shift_residual(A, s, x0));
    }
    c.add("bernstein_unit_shift",
          "delta(d) delta(e+x)^s = b(s) delta(e+x)^{s-1}", shift, 1e-8);

    if (!A.sphere_mode) {
      // symbol and reassembly of the polynomial family components
      double sym_res = 0, reasm = 0;
      for (int rep = 0; rep < 10; ++rep) {
        Element xi(A.n);
        for (int j = 0; j < A.n; ++j) xi[j] = N(c.rng) * 2;
        Element gxi = A.gram * xi;
        RJet lin(A.n, A.r);
        lin.c[0] = A.unit.dot(gxi);
        std::vector<int> alpha(A.n, 0);
        for (int j = 0; j < A.n; ++j) {
          alpha[j] = 1;
          lin.c[lin.tab->index(alpha)] = gxi[j];
          alpha[j] = 0;
        }
        RJet f = jet_exp(lin);
        auto m = extract_M(A, f, A.unit);
        auto ak = A.char_coeffs(xi);
        for (int k = 0; k <= A.r; ++k)
          sym_res = std::max(sym_res,
                             std::abs(m[k] / f.value() - ak[k]) /
                                 std::max(1.0, std::abs(ak[k])));
        for (double s : {0.77, 2.3}) {
          double direct = apply_E_s(A, s, f, A.unit);
          double viam = reassemble_E_s(A, s, m);
          reasm = std::max(reasm, std::abs(direct - viam) /
                                      std::max(1.0, std::abs(direct)));
        }
      }
      c.add("bernstein_component_symbol",
            "components act on exponentials by characteristic coefficients",
            sym_res, 1e-9);
      c.add("bernstein_component_reassembly",
            "E_s reassembled from extracted components", reasm, 1e-9);
    }
  }

  double case_res = 0;
  for (double s : svals)
    case_res = std::max(case_res,
                        bs_verify_random(D, s, c.samples(50) / 5 + 4, c.rng()));
  c.add("bernstein_case_identity",
        "case identity relating E_s and the fundamental kernel", case_res,
        1e-8);
}

void suite_analysis(Ctx& c) {
  const TripleSystem& V = c.V;
  Threshold th = threshold(V);

  Rational lam = lambda_of_s(V, th.s_min);
  c.add("analysis_threshold_consistency",
        "s = -p/4 + p lambda/2 maps s_min to lambda_min",
        lam == th.lambda_min ? 0 : 1, 0);

  PoleLedger L = pole_ledger(V);
  c.add("analysis_pole_first",
        "first pole of the continuation sits at s = -c/2",
        L.families.empty() || L.families[0].first == th.s_min ? 0 : 1, 0);

  auto poles = L.poles_down_to(Rational(-12, 1));
  auto mech = poles_from_b(V, Rational(-13, 1));
  double mech_res = 0;
  for (const Rational& p : poles)
    if (std::find(mech.begin(), mech.end(), p) == mech.end()) mech_res = 1;
  c.add("analysis_pole_mechanism",
        "every listed pole is a b-zero minus a positive integer", mech_res, 0);

  double map_res = 0;
  for (const Rational& p : poles) {
    Rational lp = lambda_of_s(V, p);
    map_res = std::max(map_res,
                       std::abs(s_of_lambda(V, lp.value()) - p.value()));
  }
  c.add("analysis_pole_parameter_map",
        "lambda images of the poles respect the parameter change", map_res,
        1e-12);

  if (V.table.r == 1) {
    double lmin = th.lambda_min.value();
    double l1 = lmin + 0.6, l2 = lmin + 1.1;
    double qr = c_lambda_numeric(V, l1, 300) / c_lambda_numeric(V, l2, 300);
    double gr = c_lambda_gamma(V, l1) / c_lambda_gamma(V, l2);
    c.add("analysis_gamma_ratio",
          "quadrature ratio of c(lambda) matches the Gamma product ratio",
          std::abs(qr - gr) / std::abs(gr), 1e-4);

    double v1 = c_lambda_numeric(V, lmin + 0.2, 400);
    double v2 = c_lambda_numeric(V, lmin + 0.02, 400);
    double v3 = c_lambda_numeric(V, lmin + 0.002, 400);
    bool diverges = v2 > v1 && v3 > v2 && v3 / v1 >= 10;
    c.add("analysis_divergence",
          "c(lambda) grows by 10x or more approaching the threshold",
          diverges ? 0 : 1, 0);
  }

  if (V.spec.family == Family::Sym && V.table.r == 1) {
    double dres = 0;
    for (double s : {1.5, 2.0, 3.0})
      dres = std::max(dres, verify_descent(V, s));
    c.add("analysis_descent",
          "integration by parts lowers the kernel exponent by one", dres,
          1e-5);
  }
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {
      "axioms", "peirce", "kernels", "minpoly", "bernstein", "analysis", "all"};
  return names;
}

SuiteReport run_suite(const TripleSystem& V, const std::string& suite,
                      const SuiteOptions& opt) {
  if (std::find(suite_names().begin(), suite_names().end(), suite) ==
      suite_names().end())
    throw ConfigError("unknown suite: " + suite);
  SuiteReport rep;
  rep.model = V.spec.str();
  rep.suite = suite;
  rep.seed = opt.seed;
  auto t0 = std::chrono::steady_clock::now();
  Ctx c{V, std::mt19937_64(opt.seed), opt.tol, opt.samples, rep.checks};
  bool all = suite == "all";
  if (all || suite == "axioms") suite_axioms(c);
  if (all || suite == "peirce") suite_peirce(c);
  if (all || suite == "kernels") suite_kernels(c);
  if (all || suite == "minpoly") suite_minpoly(c);
  if (all || suite == "bernstein") suite_bernstein(c);
  if (all || suite == "analysis") suite_analysis(c);
  std::sort(rep.checks.begin(), rep.checks.end(),
            [](const CheckRecord& a, const CheckRecord& b) {
              return a.check < b.check;
            });
  rep.wall_ms = std::chrono::duration<double, std::milli>(
                    std::chrono::steady_clock::now() - t0)
                    .count();
  return rep;
}

}  // namespace pjts
