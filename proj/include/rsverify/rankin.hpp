#pragma once

#include <optional>
#include <vector>

#include "rsverify/characters.hpp"
#include "rsverify/coweights.hpp"
#include "rsverify/errors.hpp"
#include "rsverify/exactalg.hpp"
#include "rsverify/whittaker.hpp"

namespace rsv {

using Series = TruncSeries<SymLaurent>;
using NumSeries = TruncSeries<Rational>;

// Numbers substituted for X_1..X_r and v.
struct EvalPoint {
  std::vector<Rational> x;
  Rational v;
};

namespace detail {

inline void check_nr(int n, int r) {
  if (r < 1 || r > n) throw domain_error("need 1 <= r <= n");
}

// lambda = (l_1..l_r, 0..0) restricted to its first r entries, or nullopt.
inline std::optional<Coweight> r_slice(const Coweight& l, int r) {
  for (int i = r; i < l.size(); ++i) if (l[i] != 0) return std::nullopt;
  return Coweight(std::vector<int>(l.e.begin(), l.e.begin() + r));
}

// The v-power multiplying d(lambda) * schur(lambda|_r) in the Y^l coefficient:
// delta_B^{-1/2}(varpi^lambda) * |det|^{(r+1)/2-n}.
inline int psi_v_exponent(const Coweight& lr, int n) {
  const int r = lr.size();
  return -gl_delta_half_exponent(lr) + trace(lr) * (2 * n - r - 1);
}

}  // namespace detail

inline SymLaurent psi_component(const WhittakerData& d, int n, int r, int ell) {
  detail::check_nr(n, r);
  if (d.n() != n) throw structural_error("data size differs from n");
  SymLaurent out(r);
  if (ell < 0) return out;
  for (const auto& [l, x] : d.entries()) {
    if (trace(l) != ell) continue;
    auto lr = detail::r_slice(l, r);
    if (!lr) continue;
    out += (x * VLaurent::v_pow(detail::psi_v_exponent(*lr, n))) * schur(*lr, r);
  }
  return out;
}

inline Series psi_series(const WhittakerData& d, int n, int r, int T) {
  detail::check_nr(n, r);
  if (d.n() != n) throw structural_error("data size differs from n");
  Series s(SymLaurent(r), T);
  for (const auto& [l, x] : d.entries()) {
    int t = trace(l);
    if (t > T) continue;
    auto lr = detail::r_slice(l, r);
    if (!lr) continue;
    s.add(t, (x * VLaurent::v_pow(detail::psi_v_exponent(*lr, n))) * schur(*lr, r));
  }
  return s;
}

inline NumSeries psi_series_at(const WhittakerData& d, int n, int r, int T, const EvalPoint& p) {
  detail::check_nr(n, r);
  if (d.n() != n) throw structural_error("data size differs from n");
  if (static_cast<int>(p.x.size()) != r) throw structural_error("evaluation point has wrong length");
  NumSeries s(Rational(0), T);
  for (const auto& [l, x] : d.entries()) {
    int t = trace(l);
    if (t > T) continue;
    auto lr = detail::r_slice(l, r);
    if (!lr) continue;
    Rational c = x.evaluate(p.v) * rational_pow(p.v, detail::psi_v_exponent(*lr, n));
    s.add(t, c * schur(*lr, r).evaluate(p.x, p.v));
  }
  return s;
}

// prod_j prod_{b in {beta, beta^-1}} (1 - b v^-1 X_j Y), exact.
inline Series p_phi_pi(const SatakeParamsSO& beta, int n, int r) {
  if (beta.n() != n) throw structural_error("beta length differs from n");
  if (r < 1) throw domain_error("r must be positive");
  Series out = Series::constant(SymLaurent::constant(r, 1));
  for (int j = 0; j < r; ++j)
    for (const auto& b : beta.gl_parameters()) {
      Series f = Series::constant(SymLaurent::constant(r, 1));
      f.set(1, VLaurent::monomial(-1, -b) * SymLaurent::variable(r, j));
      out = out * f;
    }
  return out;
}

inline NumSeries p_phi_pi_at(const SatakeParamsSO& beta, int r, const EvalPoint& p) {
  NumSeries out = NumSeries::constant(1);
  for (int j = 0; j < r; ++j)
    for (const auto& b : beta.gl_parameters()) {
      NumSeries f = NumSeries::constant(1);
      f.set(1, -b * p.x[j] / p.v);
      out = out * f;
    }
  return out;
}

// prod_{i<j} (1 - q^-1 X_i X_j Y^2), exact.
inline Series p_wedge2(int r) {
  if (r < 1) throw domain_error("r must be positive");
  Series out = Series::constant(SymLaurent::constant(r, 1));
  for (int i = 0; i < r; ++i)
    for (int j = i + 1; j < r; ++j) {
      Series f = Series::constant(SymLaurent::constant(r, 1));
      f.set(2, -(VLaurent::q_pow(-1) * (SymLaurent::variable(r, i) * SymLaurent::variable(r, j))));
      out = out * f;
    }
  return out;
}

inline NumSeries p_wedge2_at(int r, const EvalPoint& p) {
  NumSeries out = NumSeries::constant(1);
  const Rational q = p.v * p.v;
  for (int i = 0; i < r; ++i)
    for (int j = i + 1; j < r; ++j) {
      NumSeries f = NumSeries::constant(1);
      f.set(2, -p.x[i] * p.x[j] / q);
      out = out * f;
    }
  return out;
}

struct XiResult {
  int n = 0, r = 0, m = 0;
  SymLaurent poly;
  Series series{SymLaurent(0), 0};
  int detected_degree = -1;
  bool stabilized = false;
};

// Normalized series P_phi * Psi / P_wedge2 through Y^T.
inline Series xi_series(const WhittakerData& d, int n, int r, int T, const Series& p_phi) {
  Series psi = psi_series(d, n, r, T);
  return (p_phi * psi * series_invert(p_wedge2(r), T)).truncated(T);
}

inline NumSeries xi_series_at(const WhittakerData& d, int n, int r, int T, const NumSeries& p_phi_at,
                              const EvalPoint& p) {
  NumSeries psi = psi_series_at(d, n, r, T, p);
  return (p_phi_at * psi * series_invert(p_wedge2_at(r, p), T)).truncated(T);
}

inline XiResult collapse(const Series& s, int n, int r, int window, int m = 0) {
  if (window < 1) throw domain_error("window must be positive");
  XiResult out;
  out.n = n;
  out.r = r;
  out.m = m;
  out.series = s;
  out.detected_degree = s.max_degree();
  out.stabilized = out.detected_degree <= s.order() - window;
  out.poly = s.sum_coefficients();
  return out;
}

inline XiResult xi(const WhittakerData& d, int n, int r, int T, int window, const Series& p_phi, int m = 0) {
  if (T < window) throw domain_error("truncation order below the window");
  return collapse(xi_series(d, n, r, T, p_phi), n, r, window, m);
}

inline XiResult xi(const WhittakerData& d, const SatakeParamsSO& beta, int r, int T, int window, int m = 0) {
  return xi(d, d.n(), r, T, window, p_phi_pi(beta, d.n(), r), m);
}

// P_phi = 1: used for data with no attached representation.
inline XiResult xi(const WhittakerData& d, int r, int T, int window, int m = 0) {
  return xi(d, d.n(), r, T, window, Series::constant(SymLaurent::constant(r, 1)), m);
}

inline int default_truncation(const WhittakerData& d, int n, int r, int window) {
  int diam = 0;
  for (const auto& [l, x] : d.entries()) diam = std::max(diam, trace(l));
  return diam + 2 * n * r + r * (r - 1) + window;
}

struct EpsilonData {
  int a_pi = 0;
  int eps_pi = 1;

  EpsilonData(int a, int e) : a_pi(a), eps_pi(e) {
    if (a < 0) throw domain_error("conductor exponent must be non-negative");
    if (e != 1 && e != -1) throw domain_error("root number must be +1 or -1");
  }
};

struct EpsilonPoly {
  SymLaurent coeff;
  int y_exponent = 0;
};

// eps^r (X_1...X_r)^{a-m} Y^{(a-m) r}.
inline EpsilonPoly epsilon_poly(const EpsilonData& e, int m, int r) {
  int k = e.a_pi - m;
  int sign = (e.eps_pi == -1 && r % 2) ? -1 : 1;
  return {SymLaurent::monomial(Exponents(r, k), VLaurent(sign)), k * r};
}

inline bool fe_check(const XiResult& xi_v, const XiResult& xi_uv, const EpsilonData& e, int m) {
  if (xi_v.n != xi_uv.n || xi_v.r != xi_uv.r) throw structural_error("fe_check: (n, r) mismatch");
  return xi_uv.poly.invert_all() == epsilon_poly(e, m, xi_v.r).coeff * xi_v.poly;
}

inline XiResult specialize_last(const XiResult& x) {
  if (x.r < 2) throw domain_error("specialize_last needs r >= 2");
  XiResult out = x;
  out.r = x.r - 1;
  out.poly = x.poly.specialize_last_zero();
  out.series = x.series.map_coefficients([](const SymLaurent& c) { return c.specialize_last_zero(); });
  out.detected_degree = out.series.max_degree();
  out.stabilized = x.stabilized;
  return out;
}

inline XiResult hecke_act(const XiResult& x, const SymLaurent& satake_image) {
  if (x.r != x.n) throw domain_error("hecke_act needs r = n");
  if (!satake_image.is_in_S0()) throw domain_error("Satake image is not in S0");
  XiResult out = x;
  out.poly = x.poly * satake_image;
  out.series = x.series.scaled(satake_image);
  out.detected_degree = out.series.max_degree();
  return out;
}

// r = 1 series at X_1 = 1.
inline TruncSeries<VLaurent> zeta_series(const WhittakerData& d, int n, int T) {
  return psi_series(d, n, 1, T).map_coefficients([](const SymLaurent& c) { return c.evaluate_x({Rational(1)}); });
}

// (Xi-series vanishes through T) iff (all r-slice values up to trace T vanish).
inline bool kernel_check(const WhittakerData& d, int n, int r, int T, const Series& p_phi) {
  bool slice_zero = true;
  for (const auto& [l, x] : d.entries())
    if (trace(l) <= T && detail::r_slice(l, r)) slice_zero = false;
  Series s = xi_series(d, n, r, T, p_phi);
  bool xi_zero = s.terms().empty();
  return slice_zero == xi_zero;
}

inline std::vector<SymLaurent> elementary_symmetric(int r) {
  std::vector<SymLaurent> e(r + 1, SymLaurent(r));
  e[0] = SymLaurent::constant(r, 1);
  for (int i = 0; i < r; ++i) {
    SymLaurent x = SymLaurent::variable(r, i);
    for (int k = i + 1; k >= 1; --k) e[k] += x * e[k - 1];
  }
  return e;
}

// Rewrite a symmetric polynomial in e_1..e_r.  Output exponent tuples index
// powers of e_1..e_r.
inline SymLaurent to_elementary(const SymLaurent& f) {
  const int r = f.nvars();
  if (!f.is_symmetric()) throw domain_error("to_elementary: not symmetric");
  for (int i = 0; i < r && !f.is_zero(); ++i)
    if (f.min_exponent(i) < 0) throw domain_error("to_elementary: negative exponents");
  auto e = elementary_symmetric(r);
  SymLaurent rem = f, out(r);
  while (!rem.is_zero()) {
    auto [a, c] = *rem.terms().rbegin();
    Exponents k(r);
    SymLaurent m = SymLaurent::constant(r, c);
    for (int i = 0; i < r; ++i) {
      k[i] = a[i] - (i + 1 < r ? a[i + 1] : 0);
      if (k[i] < 0) throw internal_error("to_elementary: leading term not dominant");
      m *= e[i + 1].pow(k[i]);
    }
    out.add_term(k, c);
    rem -= m;
  }
  return out;
}

// b_0..b_r with f = sum_j b_j e_j, or nullopt when f is not of that shape.
inline std::optional<std::vector<VLaurent>> linear_elementary_coefficients(const SymLaurent& f) {
  SymLaurent g = to_elementary(f);
  const int r = f.nvars();
  std::vector<VLaurent> b(r + 1);
  for (const auto& [k, c] : g.terms()) {
    int deg = 0, which = 0;
    for (int i = 0; i < r; ++i) { deg += k[i]; if (k[i]) which = i + 1; }
    if (deg > 1) return std::nullopt;
    b[which] = c;
  }
  return b;
}

}  // namespace rsv
