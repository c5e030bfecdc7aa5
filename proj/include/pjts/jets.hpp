#pragma once

#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <unordered_map>
#include <vector>

#include "pjts/types.hpp"

namespace pjts {

// dense table of multi-indices |alpha| <= order in graded-lex order
struct MultiIndexTable {
  int nvars = 0, order = 0;
  std::vector<std::vector<int>> alpha;
  std::vector<int> degree;
  std::vector<double> factorial;  // alpha!
  std::unordered_map<uint64_t, int> position;

  static uint64_t encode(const std::vector<int>& a) {
    uint64_t key = 0;
    for (int e : a) key = key * 16 + uint64_t(e);
    return key;
  }
  int index(const std::vector<int>& a) const {
    auto it = position.find(encode(a));
    return it == position.end() ? -1 : it->second;
  }
  size_t size() const { return alpha.size(); }

  static const MultiIndexTable& get(int nvars, int order);
};

inline const MultiIndexTable& MultiIndexTable::get(int nvars, int order) {
  static std::mutex mu;
  static std::map<std::pair<int, int>, std::unique_ptr<MultiIndexTable>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto key = std::make_pair(nvars, order);
  auto it = cache.find(key);
  if (it != cache.end()) return *it->second;
  if (order > 12) throw DomainError("jet order too large");
  auto tab = std::make_unique<MultiIndexTable>();
  tab->nvars = nvars;
  tab->order = order;
  // enumerate by total degree, lexicographic within a degree
  std::vector<int> cur(nvars, 0);
  std::function<void(int, int)> rec = [&](int pos, int remaining) {
    if (pos == nvars) {
      if (remaining == 0) {
        tab->alpha.push_back(cur);
      }
      return;
    }
    for (int e = remaining; e >= 0; --e) {
      cur[pos] = e;
      rec(pos + 1, remaining - e);
    }
    cur[pos] = 0;
  };
  for (int d = 0; d <= order; ++d) rec(0, d);
  // the recursion above walks exponents of var 0 descending, giving lex order
  for (size_t i = 0; i < tab->alpha.size(); ++i) {
    const auto& a = tab->alpha[i];
    int deg = 0;
    double fact = 1;
    for (int e : a) {
      deg += e;
      for (int k = 2; k <= e; ++k) fact *= k;
    }
    tab->degree.push_back(deg);
    tab->factorial.push_back(fact);
    tab->position.emplace(encode(a), int(i));
  }
  const MultiIndexTable& ref = *tab;
  cache.emplace(key, std::move(tab));
  return ref;
}

// truncated Taylor expansion; coeffs[i] is the coefficient of (x-x0)^alpha_i,
// i.e. d^alpha f(x0)/alpha!
template <typename S>
struct Jet {
  const MultiIndexTable* tab = nullptr;
  std::vector<S> c;

  Jet() = default;
  Jet(int nvars, int order) : tab(&MultiIndexTable::get(nvars, order)) {
    c.assign(tab->size(), S(0));
  }
  static Jet constant(int nvars, int order, S value) {
    Jet j(nvars, order);
    j.c[0] = value;
    return j;
  }
  // x0_i + delta_i as a jet in delta
  static Jet coordinate(int nvars, int order, int i, S x0i) {
    Jet j(nvars, order);
    j.c[0] = x0i;
    std::vector<int> a(nvars, 0);
    a[i] = 1;
    if (order >= 1) j.c[j.tab->index(a)] = S(1);
    return j;
  }

  int nvars() const { return tab->nvars; }
  int order() const { return tab->order; }
  S value() const { return c[0]; }

  void check_shape(const Jet& o) const {
    if (tab != o.tab) throw DimensionError("jet shape mismatch");
  }

  Jet& operator+=(const Jet& o) {
    check_shape(o);
    for (size_t i = 0; i < c.size(); ++i) c[i] += o.c[i];
    return *this;
  }
  Jet& operator-=(const Jet& o) {
    check_shape(o);
    for (size_t i = 0; i < c.size(); ++i) c[i] -= o.c[i];
    return *this;
  }
  Jet& operator*=(S s) {
    for (auto& v : c) v *= s;
    return *this;
  }
  friend Jet operator+(Jet a, const Jet& b) { return a += b; }
  friend Jet operator-(Jet a, const Jet& b) { return a -= b; }
  friend Jet operator*(Jet a, S s) { return a *= s; }
  friend Jet operator*(S s, Jet a) { return a *= s; }
};

template <typename S>
Jet<S> jet_mul(const Jet<S>& a, const Jet<S>& b) {
  a.check_shape(b);
  const MultiIndexTable& t = *a.tab;
  Jet<S> out(t.nvars, t.order);
  std::vector<int> sum(t.nvars);
  for (size_t p = 0; p < a.c.size(); ++p) {
    if (a.c[p] == S(0)) continue;
    int dp = t.degree[p];
    for (size_t q = 0; q < b.c.size(); ++q) {
      if (b.c[q] == S(0)) continue;
      if (dp + t.degree[q] > t.order) continue;
      for (int v = 0; v < t.nvars; ++v) sum[v] = t.alpha[p][v] + t.alpha[q][v];
      out.c[t.index(sum)] += a.c[p] * b.c[q];
    }
  }
  return out;
}

// graded enumeration makes the lower-order table a prefix of the higher one
template <typename S>
Jet<S> jet_truncate(const Jet<S>& a, int order) {
  if (order > a.order()) throw DomainError("cannot extend a jet by truncation");
  Jet<S> out(a.nvars(), order);
  for (size_t i = 0; i < out.c.size(); ++i) out.c[i] = a.c[i];
  return out;
}

namespace detail {
// series g(w) = sum_{k>=1} g_k w^k applied to a jet with zero constant term
template <typename S>
Jet<S> apply_series(const Jet<S>& w, const std::vector<S>& gk) {
  Jet<S> out(w.nvars(), w.order());
  Jet<S> wp = Jet<S>::constant(w.nvars(), w.order(), S(1));
  for (size_t k = 1; k <= gk.size(); ++k) {
    wp = jet_mul(wp, w);
    out += wp * gk[k - 1];
  }
  return out;
}
}  // namespace detail

// a^s for real exponent s; real scalars need a positive constant term
template <typename S>
Jet<S> jet_real_power(const Jet<S>& a, double s) {
  S a0 = a.value();
  if (a0 == S(0)) throw DomainError("jet power with vanishing constant term");
  if constexpr (std::is_same_v<S, double>) {
    if (a0 <= 0) throw DomainError("jet power needs a positive constant term");
  }
  int m = a.order();
  Jet<S> w = a;
  w.c[0] = S(0);
  w *= S(1) / a0;
  // log(1+w)
  std::vector<S> lg;
  for (int k = 1; k <= m; ++k) lg.push_back(S((k % 2 ? 1.0 : -1.0) / k));
  Jet<S> u = detail::apply_series(w, lg);
  u *= S(s);
  // exp(u) - 1 series, then add 1
  std::vector<S> ex;
  double f = 1;
  for (int k = 1; k <= m; ++k) { f /= k; ex.push_back(S(f)); }
  Jet<S> out = detail::apply_series(u, ex);
  out.c[0] += S(1);
  S scale;
  if constexpr (std::is_same_v<S, double>) scale = std::pow(a0, s);
  else scale = std::pow(a0, cplx(s, 0));
  return out * scale;
}

template <typename S>
Jet<S> jet_exp(const Jet<S>& a) {
  Jet<S> w = a;
  w.c[0] = S(0);
  std::vector<S> ex;
  double f = 1;
  for (int k = 1; k <= a.order(); ++k) { f /= k; ex.push_back(S(f)); }
  Jet<S> out = detail::apply_series(w, ex);
  out.c[0] += S(1);
  return out * std::exp(a.value());
}

// evaluate a polynomial stored as a jet at 0 on jet-valued coordinates
template <typename S>
Jet<S> poly_eval(const Jet<S>& poly, const std::vector<Jet<S>>& coords) {
  const MultiIndexTable& pt = *poly.tab;
  if (int(coords.size()) != pt.nvars)
    throw DimensionError("coordinate count mismatch in poly_eval");
  int n = coords[0].nvars(), m = coords[0].order();
  // cache powers of each coordinate jet
  std::vector<std::vector<Jet<S>>> pw(coords.size());
  for (size_t i = 0; i < coords.size(); ++i) {
    pw[i].push_back(Jet<S>::constant(n, m, S(1)));
    for (int k = 1; k <= pt.order; ++k)
      pw[i].push_back(jet_mul(pw[i].back(), coords[i]));
  }
  Jet<S> out(n, m);
  for (size_t p = 0; p < poly.c.size(); ++p) {
    if (poly.c[p] == S(0)) continue;
    Jet<S> term = Jet<S>::constant(n, m, poly.c[p]);
    for (int v = 0; v < pt.nvars; ++v)
      if (pt.alpha[p][v] > 0) term = jet_mul(term, pw[v][pt.alpha[p][v]]);
    out += term;
  }
  return out;
}

// Taylor expansion of the polynomial at x0
template <typename S>
Jet<S> jet_of_polynomial(const Jet<S>& poly, const std::vector<S>& x0, int order) {
  int n = poly.nvars();
  std::vector<Jet<S>> coords;
  for (int i = 0; i < n; ++i)
    coords.push_back(Jet<S>::coordinate(n, order, i, x0[i]));
  return poly_eval(poly, coords);
}

// P(d/dx) f as a scalar at the jet's base point: sum_alpha P_alpha alpha! f_alpha
template <typename S>
S apply_const_op(const Jet<S>& P, const Jet<S>& f) {
  const MultiIndexTable& pt = *P.tab;
  if (pt.nvars != f.nvars()) throw DimensionError("variable count mismatch");
  S acc(0);
  for (size_t p = 0; p < P.c.size(); ++p) {
    if (P.c[p] == S(0)) continue;
    if (pt.degree[p] > f.order())
      throw DomainError("jet order too low for the requested operator");
    int idx = pt.nvars == f.nvars() && P.tab == f.tab
                  ? int(p)
                  : f.tab->index(pt.alpha[p]);
    acc += P.c[p] * pt.factorial[p] * f.c[idx];
  }
  return acc;
}

// jet of P(d/dx) f to order result_order (requires result_order + deg P <= f.order)
template <typename S>
Jet<S> diffop_apply(const Jet<S>& P, const Jet<S>& f, int result_order) {
  const MultiIndexTable& pt = *P.tab;
  const MultiIndexTable& ft = *f.tab;
  if (pt.nvars != ft.nvars) throw DimensionError("variable count mismatch");
  Jet<S> out(ft.nvars, result_order);
  const MultiIndexTable& ot = *out.tab;
  std::vector<int> sum(ft.nvars);
  for (size_t b = 0; b < out.c.size(); ++b) {
    S acc(0);
    for (size_t p = 0; p < P.c.size(); ++p) {
      if (P.c[p] == S(0)) continue;
      for (int v = 0; v < ft.nvars; ++v) sum[v] = ot.alpha[b][v] + pt.alpha[p][v];
      int idx = ft.index(sum);
      if (idx < 0)
        throw DomainError("jet order too low for the requested operator");
      // (alpha+beta)!/beta! factor
      acc += P.c[p] * S(ft.factorial[idx] / ot.factorial[b]) * f.c[idx];
    }
    out.c[b] = acc;
  }
  return out;
}

using RJet = Jet<double>;
using CJet = Jet<cplx>;

}  // namespace pjts
