#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "pjts/analysis.hpp"
#include "pjts/kernels.hpp"
#include "pjts/minpoly.hpp"
#include "pjts/model.hpp"
#include "pjts/verify.hpp"

using nlohmann::json;
using namespace pjts;

namespace {

// numeric lists are natural-basis coordinates (zero padded); symbols e<k>
// (natural basis) and c<k> (frame tripotents) can be combined with + and -
Element parse_vector(const TripleSystem& V, const std::string& text) {
  // first try a plain comma-separated coordinate list
  {
    std::vector<double> vals;
    std::stringstream ss(text);
    std::string tok;
    bool numeric = true;
    while (numeric && std::getline(ss, tok, ',')) {
      if (tok.empty()) continue;
      try {
        size_t end;
        vals.push_back(std::stod(tok, &end));
        while (end < tok.size() && std::isspace((unsigned char)tok[end])) ++end;
        if (end != tok.size()) numeric = false;
      } catch (const std::exception&) {
        numeric = false;
      }
    }
    if (numeric) {
      if (int(vals.size()) > V.dim)
        throw ConfigError("too many coordinates for this model");
      Element nat = Element::Zero(V.dim);
      for (size_t i = 0; i < vals.size(); ++i) nat[i] = vals[i];
      return V.nat_to_coords * nat;
    }
  }
  Element out = Element::Zero(V.dim);
  std::string cur;
  double sign = 1;
  auto flush = [&]() {
    if (cur.empty()) return;
    double coef = sign;
    size_t pos = 0;
    if (std::isdigit(cur[0]) || cur[0] == '.') {
      size_t end;
      coef *= std::stod(cur, &end);
      pos = end;
      if (pos < cur.size() && cur[pos] == '*') ++pos;
    }
    if (pos >= cur.size()) throw ConfigError("bad vector term: " + cur);
    char kind = cur[pos];
    int idx = std::stoi(cur.substr(pos + 1)) - 1;
    if (kind == 'e') {
      if (idx < 0 || idx >= V.dim) throw ConfigError("basis index out of range");
      out += coef * Element(V.nat_to_coords.col(idx));
    } else if (kind == 'c') {
      if (idx < 0 || idx >= int(V.frame.size()))
        throw ConfigError("frame index out of range");
      out += coef * V.frame[idx];
    } else {
      throw ConfigError("bad vector term: " + cur);
    }
    cur.clear();
  };
  for (char ch : text) {
    if (ch == '+' || ch == '-') {
      flush();
      sign = ch == '-' ? -1 : 1;
    } else if (!std::isspace(static_cast<unsigned char>(ch))) {
      cur.push_back(ch);
    }
  }
  flush();
  return out;
}

void write_outputs(const json& j, const std::vector<CheckRecord>& records,
                   const std::string& json_path, const std::string& csv_path) {
  if (!json_path.empty()) {
    std::ofstream f(json_path);
    f << j.dump(2) << "\n";
  }
  if (!csv_path.empty()) {
    std::ofstream f(csv_path);
    f << "check,equation_tag,residual,tolerance,pass\n";
    for (const auto& r : records)
      f << r.check << ",\"" << r.identity << "\"," << std::setprecision(17)
        << r.residual << "," << r.tolerance << "," << (r.pass ? 1 : 0) << "\n";
  }
}

json record_json(const CheckRecord& r) {
  return json{{"check", r.check},
              {"equation_tag", r.identity},
              {"residual", r.residual},
              {"tolerance", r.tolerance},
              {"pass", r.pass}};
}

int cmd_classify(const std::string& model, const std::string& json_path,
                 const std::string& csv_path) {
  TripleSystem V = build_model(model);
  Threshold th = threshold(V);
  PoleLedger L = pole_ledger(V);
  auto poles = L.poles_down_to(L.s_min - Rational(20, 1));
  if (poles.size() > 10) poles.resize(10);

  const CharacteristicData& t = V.table;
  std::cout << "model     " << V.spec.str() << "\n"
            << "case      " << case_name(V.case_tag) << "\n"
            << "dim       " << V.dim << "\n"
            << "rank r    " << t.r << "\n"
            << "a (a+,a-) " << t.a << " (" << t.a_plus << "," << t.a_minus
            << ")\n"
            << "b, c      " << t.b << ", " << t.c << "\n"
            << "genus p   " << t.genus() << "\n"
            << "lambda_min " << th.lambda_min.str() << "\n"
            << "s_min      " << th.s_min.str() << "\n";
  std::cout << "s-poles   ";
  for (const auto& p : poles) std::cout << p.str() << " ";
  std::cout << "\nlambda-poles ";
  for (const auto& p : poles) std::cout << lambda_of_s(V, p).str() << " ";
  std::cout << "\n";

  json jp = json::array(), jl = json::array();
  for (const auto& p : poles) {
    jp.push_back(p.str());
    jl.push_back(lambda_of_s(V, p).str());
  }
  json j{{"model", V.spec.str()},
         {"case", case_name(V.case_tag)},
         {"dim", V.dim},
         {"r", t.r},
         {"a", t.a},
         {"a_plus", t.a_plus},
         {"a_minus", t.a_minus},
         {"b", t.b},
         {"c", t.c},
         {"genus", t.genus()},
         {"lambda_min", th.lambda_min.str()},
         {"s_min", th.s_min.str()},
         {"s_poles", jp},
         {"lambda_poles", jl}};
  write_outputs(j, {}, json_path, csv_path);
  return 0;
}

int cmd_verify(const std::string& model, const std::string& suite,
               uint64_t seed, double tol, int samples,
               const std::string& json_path, const std::string& csv_path) {
  TripleSystem V = build_model(model);
  SuiteOptions opt;
  opt.seed = seed;
  opt.tol = tol;
  opt.samples = samples;
  SuiteReport rep = run_suite(V, suite, opt);

  for (const auto& r : rep.checks)
    std::cout << (r.pass ? "pass" : "FAIL") << "  " << std::left
              << std::setw(34) << r.check << " residual "
              << std::setprecision(3) << std::scientific << r.residual
              << "  tol " << r.tolerance << std::defaultfloat << "  ["
              << r.identity << "]\n";
  std::cout << rep.model << " " << rep.suite << ": "
            << (rep.pass() ? "all checks passed" : "CHECKS FAILED") << " ("
            << rep.checks.size() << " checks, " << std::setprecision(1)
            << std::fixed << rep.wall_ms << " ms)" << std::defaultfloat
            << "\n";

  json jr = json::array();
  for (const auto& r : rep.checks) jr.push_back(record_json(r));
  json j{{"model", rep.model}, {"suite", rep.suite},   {"seed", rep.seed},
         {"wall_ms", rep.wall_ms}, {"pass", rep.pass()}, {"records", jr}};
  write_outputs(j, rep.checks, json_path, csv_path);
  return rep.pass() ? 0 : 1;
}

int cmd_kernel(const std::string& model, const std::string& xs,
               const std::string& ys, const std::string& json_path,
               const std::string& csv_path) {
  TripleSystem V = build_model(model);
  Element x = parse_vector(V, xs), y = parse_vector(V, ys);
  double cv = canonical_kernel(V, x, y);
  cplx h = h_kernel(V, x, y);
  double k = fundamental_kernel(V, x, y);
  double kp = std::pow(k, V.table.genus() / 2.0);
  double compact = compact_kernel_pair(V, x, y);

  std::cout << "c(x,y)      " << std::setprecision(12) << cv << "\n"
            << "h(x,y)      " << h.real();
  if (std::abs(h.imag()) > 1e-14) std::cout << " + " << h.imag() << "i";
  std::cout << "\nk(x,y)      " << k << "\n"
            << "k^(p/2)     " << kp << "\n"
            << "compact     " << compact << "\n";
  if (V.case_tag == CaseTag::ComplexStructure) {
    cplx cc = canonical_kernel_complex(V, x, y);
    std::cout << "c_C(x,y)    " << cc.real() << " + " << cc.imag() << "i\n";
  }
  json j{{"model", V.spec.str()},
         {"c", cv},
         {"h_re", h.real()},
         {"h_im", h.imag()},
         {"k", k},
         {"k_pow_p2", kp},
         {"compact", compact}};
  write_outputs(j, {}, json_path, csv_path);
  return 0;
}

int cmd_clambda(const std::string& model, double lambda, int nodes,
                const std::string& method, uint64_t seed,
                const std::string& json_path, const std::string& csv_path) {
  TripleSystem V = build_model(model);
  Threshold th = threshold(V);
  QuadMethod m = method == "mc" ? QuadMethod::MonteCarlo : QuadMethod::GaussJacobi;
  bool conv = selberg_convergent(V, lambda);
  std::cout << "lambda      " << lambda << "\n"
            << "threshold   " << th.lambda_min.str() << "\n"
            << "convergent  " << (conv ? "yes" : "no") << "\n";
  json j{{"model", V.spec.str()},
         {"lambda", lambda},
         {"lambda_min", th.lambda_min.str()},
         {"convergent", conv}};
  if (conv) {
    double val = c_lambda_numeric(V, lambda, nodes, m, seed);
    std::cout << "c(lambda)   " << std::setprecision(12) << val << "\n";
    j["c_lambda"] = val;
    if (V.table.r == 1) {
      double g = c_lambda_gamma(V, lambda);
      std::cout << "closed form " << g << "\n";
      j["c_lambda_gamma"] = g;
    }
  }
  write_outputs(j, {}, json_path, csv_path);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"numerical verification toolkit for Jordan triple kernels"};
  app.require_subcommand(1);

  std::string model, suite = "all", xs = "0", ys = "0", method = "gj";
  std::string json_path, csv_path;
  uint64_t seed = 42;
  double tol = -1, lambda = 0.5;
  int samples = -1, nodes = 64;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("model", model,
                    "model spec: sym:R herm:R cmat:RxS rect:RxS spin:P,Q sphere:N")
        ->required();
    sub->add_option("--seed", seed, "random seed (default 42)");
    sub->add_option("--json", json_path, "write a JSON report to this path");
    sub->add_option("--csv", csv_path, "write a CSV report to this path");
  };

  auto* cl = app.add_subcommand("classify", "print classification data and pole lattice");
  add_common(cl);

  auto* ve = app.add_subcommand("verify", "run verification suites");
  add_common(ve);
  ve->add_option("suite", suite, "axioms|peirce|kernels|minpoly|bernstein|analysis|all");
  ve->add_option("--tol", tol, "override per-check tolerances");
  ve->add_option("--samples", samples, "override per-check sample counts");

  auto* ke = app.add_subcommand("kernel", "evaluate kernels at a point pair");
  add_common(ke);
  ke->add_option("--x", xs, "first argument (coords or basis symbols)");
  ke->add_option("--y", ys, "second argument (coords or basis symbols)");

  auto* cg = app.add_subcommand("clambda", "evaluate the torus integral c(lambda)");
  add_common(cg);
  cg->add_option("--lambda", lambda, "spectral parameter")->required();
  cg->add_option("--nodes", nodes, "quadrature nodes / Monte Carlo samples");
  cg->add_option("--method", method, "gj (Gauss-Jacobi, rank one) or mc");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (cl->parsed()) return cmd_classify(model, json_path, csv_path);
    if (ve->parsed())
      return cmd_verify(model, suite, seed, tol, samples, json_path, csv_path);
    if (ke->parsed()) return cmd_kernel(model, xs, ys, json_path, csv_path);
    if (cg->parsed())
      return cmd_clambda(model, lambda, nodes, method, seed, json_path, csv_path);
  } catch (const ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
