#pragma once

#include <atomic>
#include <chrono>
#include <functional>
#include <thread>
#include <vector>

#include "rsverify/characters.hpp"
#include "rsverify/coweights.hpp"
#include "rsverify/exactalg.hpp"
#include "rsverify/harness/report.hpp"
#include "rsverify/harness/rng.hpp"
#include "rsverify/oldforms.hpp"
#include "rsverify/rankin.hpp"
#include "rsverify/whittaker.hpp"

namespace rsv {

struct CaseOutcome {
  bool pass = false;
  Json values = Json::object();
  Json witness;
};

struct CaseTask {
  Json params;
  std::function<CaseOutcome()> run;
};

namespace detail {

inline Json rationals_json(const std::vector<Rational>& xs) {
  Json a = Json::array();
  for (const auto& x : xs) a.push_back(to_fraction_string(x));
  return a;
}

inline Json value_json(const Rational& x) { return to_fraction_string(x); }
inline Json value_json(const VLaurent& x) { return to_json(x); }
inline Json value_json(const SymLaurent& x) { return to_json(x); }

// Witness for two series that should agree through their common order.
template <class C>
Json series_witness(const std::string& what, const TruncSeries<C>& expected, const TruncSeries<C>& actual) {
  int l = first_difference(expected, actual);
  Json w = Json::object();
  w["identity"] = what;
  w["degree"] = l;
  w["expected"] = value_json(expected.coeff(l));
  w["actual"] = value_json(actual.coeff(l));
  return w;
}

template <class C>
bool series_equal(const TruncSeries<C>& a, const TruncSeries<C>& b, const std::string& what, CaseOutcome& out) {
  if (agree(a, b)) return true;
  if (out.witness.is_null()) out.witness = series_witness(what, a, b);
  return false;
}

inline Json poly_witness(const std::string& what, const SymLaurent& expected, const SymLaurent& actual) {
  Json w = Json::object();
  w["identity"] = what;
  w["expected"] = to_json(expected);
  w["actual"] = to_json(actual);
  return w;
}

inline bool poly_equal(const SymLaurent& expected, const SymLaurent& actual, const std::string& what,
                       CaseOutcome& out) {
  if (expected == actual) return true;
  if (out.witness.is_null()) out.witness = poly_witness(what, expected, actual);
  return false;
}

inline NumSeries y_monomial(const Rational& c, int k, int order) {
  NumSeries s(Rational(0), order);
  s.set(k, c);
  return s;
}

inline Series y_monomial(const SymLaurent& c, int k, int order) {
  Series s(SymLaurent(c.nvars()), order);
  s.set(k, c);
  return s;
}

// Spherical data with enough support for Y-degree T.
inline WhittakerData spherical(const std::vector<Rational>& beta, int T) {
  const int n = static_cast<int>(beta.size());
  return spherical_so_data(SatakeParamsSO(beta), n, T, T);
}

}  // namespace detail

inline std::vector<CaseTask> suite_unramified(const VerifyConfig& c) {
  std::vector<CaseTask> tasks;
  for (int n = c.n_min; n <= c.n_max; ++n)
    for (int r = 1; r <= n; ++r) {
      if (c.r && c.r != r) continue;
      for (int t = 0; t < c.trials; ++t) {
        Rng rng(c.seed, static_cast<std::uint64_t>(n * 1000 + r * 100 + t));
        auto beta = rng.satake_beta(n);
        EvalPoint p = rng.point(r);
        Json params = {{"n", n}, {"r", r}, {"trial", t}, {"beta", detail::rationals_json(beta)}};
        if (c.mode == "evaluation") {
          params["x"] = detail::rationals_json(p.x);
          params["v"] = to_fraction_string(p.v);
        }
        tasks.push_back({params, [=] {
          CaseOutcome out;
          WhittakerData d = detail::spherical(beta, c.trunc);
          SatakeParamsSO sp(beta);
          if (c.mode == "evaluation") {
            NumSeries s = xi_series_at(d, n, r, c.trunc, p_phi_pi_at(sp, r, p), p);
            out.pass = detail::series_equal(NumSeries::constant(1, c.trunc), s, "P_phi * Psi / P_wedge2 = 1", out);
          } else {
            XiResult x = xi(d, sp, r, c.trunc, c.window);
            Series one = Series::constant(SymLaurent::constant(r, 1), c.trunc);
            out.pass = detail::series_equal(one, x.series, "P_phi * Psi / P_wedge2 = 1", out) && x.stabilized;
            out.values["xi"] = to_json(x.poly);
          }
          return out;
        }});
      }
    }
  return tasks;
}

inline std::vector<CaseTask> suite_gsp4_raising(const VerifyConfig& c) {
  std::vector<CaseTask> tasks;
  for (int t = 0; t < c.trials; ++t) {
    Rng rng(c.seed, static_cast<std::uint64_t>(t));
    WhittakerData d = rng.data(2, 5, 3);
    tasks.push_back({Json{{"n", 2}, {"r", 2}, {"trial", t}, {"data", to_json(d)}}, [=] {
      CaseOutcome out;
      const int T = c.trunc;
      Series psi = psi_series(d, 2, 2, T);
      const VLaurent q = VLaurent::q_pow(1);
      Series th = detail::y_monomial(q * parse_sym("X1 + X2", 2), 1, kExactOrder) * psi;
      Series thp = (Series::constant(SymLaurent::constant(2, q)) +
                    detail::y_monomial(q * parse_sym("X1X2", 2), 2, kExactOrder)) * psi;
      Series et = detail::y_monomial(q * parse_sym("X1X2", 2), 2, kExactOrder) * psi;
      bool a = detail::series_equal(th.truncated(T), psi_series(theta_data(d), 2, 2, T), "Psi(theta d) = q(X1+X2)Y Psi(d)", out);
      bool b = detail::series_equal(thp.truncated(T), psi_series(theta_prime_data(d), 2, 2, T),
                                    "Psi(theta' d) = q(1+X1X2Y^2) Psi(d)", out);
      bool e = detail::series_equal(et.truncated(T), psi_series(eta_data(d), 2, 2, T), "Psi(eta d) = qX1X2Y^2 Psi(d)", out);
      out.pass = a && b && e;
      return out;
    }});
  }
  return tasks;
}

inline std::vector<CaseTask> suite_eta_lemma(const VerifyConfig& c) {
  std::vector<CaseTask> tasks;
  for (int n = c.n_min; n <= c.n_max; ++n)
    for (int t = 0; t < c.trials; ++t) {
      Rng rng(c.seed, static_cast<std::uint64_t>(n * 1000 + t));
      WhittakerData d = rng.data(n, 5, 3);
      auto beta = rng.satake_beta(n);
      EvalPoint p = rng.point(n);
      auto coeffs = rng.distinct_rationals(2);
      Json params = {{"n", n}, {"trial", t}, {"beta", detail::rationals_json(beta)}, {"data", to_json(d)}};
      tasks.push_back({params, [=] {
        CaseOutcome out;
        const int T = c.trunc;
        SatakeParamsSO sp(beta);
        SymLaurent mult = eta_multiplier(n);
        // Series level on arbitrary data.
        bool series_ok;
        if (c.mode == "evaluation") {
          NumSeries P = p_phi_pi_at(sp, n, p);
          NumSeries lhs = xi_series_at(eta_data(d), n, n, T, P, p);
          NumSeries base = xi_series_at(d, n, n, T, P, p);
          NumSeries rhs = (detail::y_monomial(mult.evaluate(p.x, p.v), n, kExactOrder) * base).truncated(T);
          series_ok = detail::series_equal(rhs, lhs, "Xi(eta d) = M Y^n Xi(d)", out);
        } else {
          Series P = p_phi_pi(sp, n, n);
          Series lhs = xi_series(eta_data(d), n, n, T, P);
          Series rhs = (detail::y_monomial(mult, n, kExactOrder) * xi_series(d, n, n, T, P)).truncated(T);
          series_ok = detail::series_equal(rhs, lhs, "Xi(eta d) = M Y^n Xi(d)", out);
        }
        // Polynomial level on c0 v + c1 eta(v), v spherical.
        const int Tp = 2 * n + c.window;
        WhittakerData sph = detail::spherical(beta, Tp);
        WhittakerData f = sph.scaled(coeffs[0]) + eta_data(sph).scaled(coeffs[1]);
        bool poly_ok;
        if (c.mode == "evaluation") {
          NumSeries P = p_phi_pi_at(sp, n, p);
          NumSeries a = xi_series_at(eta_data(f), n, n, Tp, P, p);
          NumSeries b = xi_series_at(f, n, n, Tp, P, p);
          bool stab = a.max_degree() <= Tp - c.window && b.max_degree() <= Tp - c.window;
          Rational m = mult.evaluate(p.x, p.v);
          poly_ok = stab && a.sum_coefficients() == m * b.sum_coefficients() &&
                    b.sum_coefficients() == coeffs[0] + coeffs[1] * m;
          if (!poly_ok && out.witness.is_null())
            out.witness = {{"identity", "Xi(eta f) = M Xi(f) at Y = 1"},
                           {"expected", to_fraction_string(m * b.sum_coefficients())},
                           {"actual", to_fraction_string(a.sum_coefficients())}};
        } else {
          XiResult a = xi(eta_data(f), sp, n, Tp, c.window);
          XiResult b = xi(f, sp, n, Tp, c.window);
          poly_ok = a.stabilized && b.stabilized && detail::poly_equal(mult * b.poly, a.poly, "Xi(eta f) = M Xi(f)", out);
          out.values["xi"] = to_json(b.poly);
          out.values["xi_eta"] = to_json(a.poly);
        }
        out.pass = series_ok && poly_ok;
        return out;
      }});
    }
  return tasks;
}

inline std::vector<CaseTask> suite_dims(const VerifyConfig& c) {
  std::vector<CaseTask> tasks;
  const int nmax = std::max(c.n_max, 4);
  const int kmax = std::max(c.max_level, 8);
  for (int n = 1; n <= nmax; ++n)
    for (int k = 0; k <= kmax; ++k)
      tasks.push_back({Json{{"n", n}, {"m_minus_a", k}}, [=] {
        CaseOutcome out;
        long long f = dim_formula(n, k, 0), e = basis_cardinality(n, k, 0);
        out.values["formula"] = f;
        out.values["enumeration"] = e;
        out.values["match"] = f == e;
        out.pass = f == e;
        if (!out.pass) out.witness = {{"formula", f}, {"enumeration", e}};
        return out;
      }});
  return tasks;
}

inline std::vector<CaseTask> suite_prop4(const VerifyConfig& c) {
  std::vector<CaseTask> tasks;
  for (int n = std::max(2, c.n_min); n <= c.n_max; ++n)
    for (int r = 2; r <= n; ++r) {
      if (c.r && c.r != r) continue;
      for (int t = 0; t < c.trials; ++t) {
        Rng rng(c.seed, static_cast<std::uint64_t>(n * 1000 + r * 100 + t));
        WhittakerData d = rng.data(n, 5, 3);
        auto beta = rng.satake_beta(n);
        tasks.push_back({Json{{"n", n}, {"r", r}, {"trial", t}, {"beta", detail::rationals_json(beta)}, {"data", to_json(d)}}, [=] {
          CaseOutcome out;
          const int T = c.trunc;
          SatakeParamsSO sp(beta);
          XiResult hi = collapse(xi_series(d, n, r, T, p_phi_pi(sp, n, r)), n, r, c.window);
          XiResult lo = collapse(xi_series(d, n, r - 1, T, p_phi_pi(sp, n, r - 1)), n, r - 1, c.window);
          out.pass = detail::series_equal(lo.series, specialize_last(hi).series, "Xi_r(X_r = 0) = Xi_{r-1}", out);
          return out;
        }});
      }
    }
  // r = 1 endpoint at n = 2.
  for (int t = 0; t < c.trials; ++t) {
    Rng rng(c.seed ^ 0x2a, static_cast<std::uint64_t>(t));
    WhittakerData d = rng.data(2, 5, 3);
    tasks.push_back({Json{{"n", 2}, {"r", 1}, {"trial", t}, {"data", to_json(d)}}, [=] {
      CaseOutcome out;
      const int T = c.trunc;
      using VS = TruncSeries<VLaurent>;
      const VLaurent q = VLaurent::q_pow(1);
      VS z = zeta_series(d, 2, T);
      VS qy(VLaurent(), kExactOrder);
      qy.set(1, q);
      bool a = detail::series_equal((qy * z).truncated(T), zeta_series(theta_data(d), 2, T), "Z(theta v) = qY Z(v)", out);
      bool b = detail::series_equal(z.scaled(q), zeta_series(theta_prime_data(d), 2, T), "Z(theta' v) = q Z(v)", out);
      bool e = detail::series_equal(VS(VLaurent(), T), zeta_series(eta_data(d), 2, T), "Z(eta v) = 0", out);
      out.pass = a && b && e;
      return out;
    }});
  }
  return tasks;
}

inline std::vector<CaseTask> suite_level_a1(const VerifyConfig& c) {
  std::vector<CaseTask> tasks;
  for (int t = 0; t < c.trials; ++t) {
    Rng rng(c.seed, static_cast<std::uint64_t>(t));
    auto beta = rng.satake_beta(2);
    tasks.push_back({Json{{"n", 2}, {"trial", t}, {"beta", detail::rationals_json(beta)}}, [=] {
      CaseOutcome out;
      SatakeParamsSO sp(beta);
      WhittakerData d = detail::spherical(beta, c.trunc);
      XiResult a = xi(theta_data(d), sp, 2, c.trunc, c.window, 1);
      XiResult b = xi(theta_prime_data(d), sp, 2, c.trunc, c.window, 1);
      bool ok = a.stabilized && b.stabilized;
      ok = detail::poly_equal(xi_theta_newform(), a.poly, "Xi(theta v) = q(X1+X2)", out) && ok;
      ok = detail::poly_equal(xi_theta_prime_newform(), b.poly, "Xi(theta' v) = q(1+X1X2)", out) && ok;
      auto ba = linear_elementary_coefficients(a.poly);
      auto bb = linear_elementary_coefficients(b.poly);
      ok = ok && ba && bb;
      if (ok) {
        // theta: only odd j; theta': only even j; the common constant is q_2 = q'_2.
        const VLaurent q2 = (*ba)[1], q2p = (*bb)[0];
        ok = (*ba)[0].is_zero() && (*ba)[2].is_zero() && (*bb)[1].is_zero() && (*bb)[2] == q2p && q2 == q2p &&
             q2 == VLaurent::q_pow(1);
        out.values["q_2"] = to_json(q2);
        out.values["q_2_prime"] = to_json(q2p);
      }
      out.pass = ok;
      return out;
    }});
  }
  return tasks;
}

inline std::vector<CaseTask> suite_oldforms(const VerifyConfig& c) {
  std::vector<CaseTask> tasks;
  const int L = c.max_level;
  for (int n = std::max(2, c.n_min); n <= std::min(3, std::max(2, c.n_max)); ++n)
    for (int K = 0; K <= L; ++K) {
      if (n == 3 && K % 2) {
        tasks.push_back({Json{{"n", n}, {"m_minus_a", K}, {"check", "cardinality"}}, [=] {
          CaseOutcome out;
          long long s = static_cast<long long>(b_set(n, K).size());
          out.values["size"] = s;
          out.pass = s == basis_cardinality(n, K, 0);
          return out;
        }});
        continue;
      }
      tasks.push_back({Json{{"n", n}, {"m_minus_a", K}, {"check", "rank"}}, [=] {
        CaseOutcome out;
        auto specs = b_set(n, K);
        bool stand_in = false;
        auto imgs = images_of(specs, n, &stand_in);
        RankResult rr = rank_check(imgs);
        bool graded = true;
        for (const auto& p : imgs)
          for (int i = 0; i < n; ++i) graded = graded && (p.is_zero() || p.min_exponent(i) >= 0);
        out.values["size"] = specs.size();
        out.values["rank"] = rr.rank;
        out.values["stand_in"] = stand_in;
        out.pass = rr.independent && graded && static_cast<long long>(specs.size()) == basis_cardinality(n, K, 0);
        if (!out.pass) out.witness = {{"size", specs.size()}, {"rank", rr.rank}, {"graded", graded}};
        return out;
      }});
    }
  for (int K = 0; K <= std::min(L, 4); ++K)
    tasks.push_back({Json{{"n", 2}, {"m_minus_a", K}, {"check", "compare-bases"}}, [=] {
      CaseOutcome out;
      BasisComparison bc = compare_bases(K);
      out.values["rs_rank"] = bc.rs_rank;
      out.values["b_rank"] = bc.b_rank;
      out.values["spans_equal"] = bc.spans_equal;
      out.values["sets_equal"] = bc.sets_equal;
      out.pass = bc.spans_equal && bc.rs_rank == static_cast<int>(bc.rs_images.size());
      return out;
    }});
  return tasks;
}

inline std::vector<CaseTask> suite_dependence(const VerifyConfig&) {
  std::vector<CaseTask> tasks;
  tasks.push_back({Json{{"n", 2}, {"m_minus_a", 3}, {"check", "relation"}}, [] {
    CaseOutcome out;
    DependenceSides s = dependence_sides();
    out.values["relation"] = "eta_{e1,a+1,a+3} theta'(v) = q eta_{0,a+1,a+3} theta(v) + eta_{e1+e2,a+1,a+3} theta(v)";
    out.values["lhs"] = s.lhs.to_string();
    out.values["rhs"] = s.rhs.to_string();
    out.pass = dependence_check_a3();
    if (!out.pass) out.witness = detail::poly_witness("dependence relation", s.lhs, s.rhs);
    return out;
  }});
  tasks.push_back({Json{{"n", 2}, {"m_minus_a", 3}, {"check", "b_prime_rank"}}, [] {
    CaseOutcome out;
    auto specs = b_prime_set(2, 3);
    RankResult rr = rank_check(images_of(specs, 2));
    out.values["size"] = specs.size();
    out.values["rank"] = rr.rank;
    out.pass = rr.rank < static_cast<int>(specs.size());
    return out;
  }});
  return tasks;
}

inline std::vector<CaseTask> suite_kernel(const VerifyConfig& c) {
  std::vector<CaseTask> tasks;
  for (int t = 0; t < c.trials; ++t) {
    Rng rng(c.seed, static_cast<std::uint64_t>(t));
    int n = rng.uniform(std::max(2, c.n_min), std::max(2, c.n_max));
    int r = rng.uniform(1, n);
    int kind = t % 4;
    WhittakerData d = rng.data(n, 5, 3);
    if (kind == 1) d = eta_data(d);             // off the r-slice when r < n
    if (kind == 2) d = WhittakerData(n);        // zero data
    if (kind == 3) {                            // support beyond the truncation
      for (int k = 0; k <= c.trunc / n; ++k) d = eta_data(d);
    }
    auto beta = rng.satake_beta(n);
    tasks.push_back({Json{{"n", n}, {"r", r}, {"trial", t}, {"kind", kind}, {"data", to_json(d)}}, [=] {
      CaseOutcome out;
      out.pass = kernel_check(d, n, r, c.trunc, p_phi_pi(SatakeParamsSO(beta), n, r));
      return out;
    }});
  }
  return tasks;
}

inline std::vector<CaseTask> suite_fe(const VerifyConfig& c) {
  std::vector<CaseTask> tasks;
  for (int t = 0; t < c.trials; ++t) {
    Rng rng(c.seed, static_cast<std::uint64_t>(t));
    auto beta = rng.satake_beta(2);
    tasks.push_back({Json{{"n", 2}, {"trial", t}, {"beta", detail::rationals_json(beta)}}, [=] {
      CaseOutcome out;
      SatakeParamsSO sp(beta);
      WhittakerData d = detail::spherical(beta, c.trunc);
      const EpsilonData e(0, 1);
      XiResult x0 = xi(d, sp, 2, c.trunc, c.window, 0);
      bool ok = fe_check(x0, x0, e, 0);
      for (int sign : {1, -1}) {
        WhittakerData vs = theta_data(d) + theta_prime_data(d).scaled(VLaurent(sign));
        XiResult x2 = xi(vs, sp, 2, c.trunc, c.window, 1);
        ok = ok && x2.stabilized;
        // u_{n,r,m} acts on v+- by (+-eps)^r; check the equation at r = 2 and,
        // through X_2 = 0, at r = 1.
        for (const XiResult& x : {x2, specialize_last(x2)}) {
          XiResult xu = x;
          xu.poly = VLaurent(sign * e.eps_pi).pow(x.r) * x.poly;
          ok = ok && fe_check(x, xu, e, 1);
          if (x.r % 2) {
            // Negative control: the opposite eigenvalue must fail at odd r.
            XiResult wrong = x;
            wrong.poly = -xu.poly;
            ok = ok && !fe_check(x, wrong, e, 1);
          }
        }
        auto b = linear_elementary_coefficients(x2.poly);
        ok = ok && b.has_value();
        if (b) {
          for (int j = 0; j <= 2; ++j) ok = ok && (*b)[j] == VLaurent(sign * e.eps_pi).pow(j) * (*b)[0];
          out.values[sign > 0 ? "b_plus" : "b_minus"] = Json::array({to_json((*b)[0]), to_json((*b)[1]), to_json((*b)[2])});
        }
      }
      out.pass = ok;
      return out;
    }});
  }
  return tasks;
}

inline std::vector<CaseTask> suite_tasks(const VerifyConfig& c) {
  const std::string& s = c.suite;
  if (s == "unramified") return suite_unramified(c);
  if (s == "gsp4-raising") return suite_gsp4_raising(c);
  if (s == "eta-lemma") return suite_eta_lemma(c);
  if (s == "dims") return suite_dims(c);
  if (s == "prop4") return suite_prop4(c);
  if (s == "level-a1") return suite_level_a1(c);
  if (s == "oldform-bases" || s == "oldforms") return suite_oldforms(c);
  if (s == "dependence") return suite_dependence(c);
  if (s == "kernel") return suite_kernel(c);
  if (s == "fe") return suite_fe(c);
  throw domain_error("unknown suite: " + s);
}

inline Report run_suite(const VerifyConfig& c) {
  c.validate();
  std::vector<CaseTask> tasks = suite_tasks(c);
  Report rep;
  rep.suite = c.suite;
  rep.config = c.to_json();
  rep.cases.resize(tasks.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < tasks.size(); i = next++) {
      CaseRecord& rec = rep.cases[i];
      rec.id = static_cast<long>(i);
      rec.params = tasks[i].params;
      auto t0 = std::chrono::steady_clock::now();
      try {
        CaseOutcome o = tasks[i].run();
        rec.pass = o.pass;
        rec.values = std::move(o.values);
        rec.witness = std::move(o.witness);
      } catch (const std::exception& ex) {
        rec.pass = false;
        rec.witness = {{"exception", ex.what()}};
      }
      rec.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    }
  };
  unsigned k = std::min<unsigned>(worker_count(), static_cast<unsigned>(std::max<std::size_t>(1, tasks.size())));
  std::vector<std::thread> pool;
  for (unsigned i = 0; i < k; ++i) pool.emplace_back(worker);
  for (auto& th : pool) th.join();
  rep.sort();
  return rep;
}

}  // namespace rsv
