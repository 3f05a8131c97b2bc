#pragma once

#include <map>
#include <vector>

#include "rsverify/characters.hpp"
#include "rsverify/coweights.hpp"
#include "rsverify/errors.hpp"
#include "rsverify/exactalg.hpp"

namespace rsv {

inline int gl_delta_half_exponent(const Coweight& l) {
  const int r = l.size();
  int s = 0;
  for (int i = 0; i < r; ++i) s += l[i] * (r + 1 - 2 * (i + 1));
  return -s;
}

inline int so_delta_half_exponent(const Coweight& l) {
  const int n = l.size();
  int s = 0;
  for (int i = 0; i < n; ++i) s += l[i] * (2 * n - 2 * (i + 1) + 1);
  return -s;
}

// Spherical GL_r Whittaker value on the torus: v^{-<2rho,l>/...} * schur.
inline SymLaurent gl_whittaker(const Coweight& lambda, int r) {
  if (lambda.size() != r) throw structural_error("gl_whittaker: coweight length differs from r");
  if (!is_gl_dominant(lambda)) return SymLaurent(r);
  return VLaurent::v_pow(gl_delta_half_exponent(lambda)) * schur(lambda, r);
}

// X_i -> c X_i scales the value by c^{trace}; checked both on the support
// degrees and by substitution with c = 2 and c = v^3.
inline bool homogeneity_check(const Coweight& lambda, int r) {
  SymLaurent w = gl_whittaker(lambda, r);
  const int d = trace(lambda);
  if (!w.is_homogeneous(d)) return false;
  for (const VLaurent& c : {VLaurent(2), VLaurent::v_pow(3)})
    if (w.scale_vars(c) != c.pow(d) * w) return false;
  return true;
}

struct SatakeParamsSO {
  std::vector<Rational> beta;

  explicit SatakeParamsSO(std::vector<Rational> b) : beta(std::move(b)) {
    for (const auto& x : beta) if (is_zero(x)) throw domain_error("Satake parameter must be nonzero");
  }
  int n() const { return static_cast<int>(beta.size()); }
  // {beta_i, beta_i^-1}.
  std::vector<Rational> gl_parameters() const {
    std::vector<Rational> out;
    for (const auto& b : beta) { out.push_back(b); out.push_back(1 / b); }
    return out;
  }
};

struct SatakeParamsGL {
  std::vector<Rational> alpha;

  explicit SatakeParamsGL(std::vector<Rational> a) : alpha(std::move(a)) {
    for (const auto& x : alpha) if (is_zero(x)) throw domain_error("Satake parameter must be nonzero");
  }
};

/// Torus values W(varpi^lambda) of a vector, keyed by G-dominant coweights.
class WhittakerData {
 public:
  explicit WhittakerData(int n) : n_(n) {
    if (n < 1) throw domain_error("WhittakerData needs n >= 1");
  }

  int n() const { return n_; }
  const std::map<Coweight, VLaurent>& entries() const { return entries_; }
  bool empty() const { return entries_.empty(); }

  VLaurent at(const Coweight& l) const {
    if (l.size() != n_) throw structural_error("coweight length differs from n");
    auto it = entries_.find(l);
    return it == entries_.end() ? VLaurent() : it->second;
  }

  void set(const Coweight& l, const VLaurent& value) {
    if (l.size() != n_) throw structural_error("coweight length differs from n");
    if (!is_g_dominant(l)) throw domain_error("support key " + l.to_string() + " is not G-dominant");
    if (value.is_zero()) entries_.erase(l);
    else entries_[l] = value;
  }
  void add(const Coweight& l, const VLaurent& value) {
    if (!is_g_dominant(l)) return;
    set(l, at(l) + value);
  }

  friend WhittakerData operator+(const WhittakerData& a, const WhittakerData& b) {
    if (a.n_ != b.n_) throw structural_error("WhittakerData size mismatch");
    WhittakerData out(a);
    for (const auto& [l, x] : b.entries_) out.add(l, x);
    return out;
  }
  friend WhittakerData operator-(const WhittakerData& a, const WhittakerData& b) {
    return a + b.scaled(VLaurent(-1));
  }
  WhittakerData scaled(const VLaurent& c) const {
    WhittakerData out(n_);
    for (const auto& [l, x] : entries_) out.set(l, c * x);
    return out;
  }
  friend bool operator==(const WhittakerData& a, const WhittakerData& b) {
    return a.n_ == b.n_ && a.entries_ == b.entries_;
  }

  static WhittakerData delta(int n, const Coweight& l, const VLaurent& value = VLaurent(1)) {
    WhittakerData d(n);
    d.set(l, value);
    return d;
  }

 private:
  int n_;
  std::map<Coweight, VLaurent> entries_;
};

// chi^{Sp_2n}_lambda(beta) as a number.  The determinant ratio is evaluated
// directly when its denominator is nonzero, otherwise the symbolic character
// is substituted.
inline Rational sp_character_at(const Coweight& lambda, const std::vector<Rational>& beta) {
  const int n = lambda.size();
  if (static_cast<int>(beta.size()) != n) throw structural_error("beta length differs from n");
  auto alternant = [&](const std::vector<int>& l) {
    std::vector<std::vector<Rational>> m(n, std::vector<Rational>(n));
    for (int i = 0; i < n; ++i) {
      int p = l[i] + n - i;
      for (int j = 0; j < n; ++j) m[i][j] = rational_pow(beta[j], p) - rational_pow(beta[j], -p);
    }
    return determinant(m, Rational(0));
  };
  Rational den = alternant(std::vector<int>(n, 0));
  if (!is_zero(den)) return alternant(lambda.e) / den;
  return sp_character(lambda).evaluate(beta, 1);
}

// W(varpi^lambda) = v^{-<2rho,lambda>} chi^{Sp}_lambda(beta) for lambda in
// P+_G with ||lambda|| <= cutoff and, when max_trace >= 0, trace <= max_trace.
inline WhittakerData spherical_so_data(const SatakeParamsSO& beta, int n, int cutoff, int max_trace = -1) {
  if (beta.n() != n) throw structural_error("beta length differs from n");
  WhittakerData d(n);
  for (const auto& l : enumerate_cone(Cone::G, n, cutoff)) {
    if (max_trace >= 0 && trace(l) > max_trace) continue;
    d.set(l, VLaurent::monomial(so_delta_half_exponent(l), sp_character_at(l, beta.beta)));
  }
  return d;
}

inline WhittakerData eta_data(const WhittakerData& d) {
  WhittakerData out(d.n());
  const Coweight mu = Coweight::mu(d.n());
  for (const auto& [l, x] : d.entries()) out.set(l + mu, x);
  return out;
}

// result(l) = d(l - e1) + q d(l - e2).
inline WhittakerData theta_data(const WhittakerData& d) {
  if (d.n() != 2) throw unsupported_error("theta_data is only defined for n = 2");
  WhittakerData out(2);
  const VLaurent q = VLaurent::q_pow(1);
  for (const auto& [l, x] : d.entries()) {
    out.add(l + Coweight{1, 0}, x);
    out.add(l + Coweight{0, 1}, q * x);
  }
  return out;
}

// result(l) = d(l - e1 - e2) + q d(l).
inline WhittakerData theta_prime_data(const WhittakerData& d) {
  if (d.n() != 2) throw unsupported_error("theta_prime_data is only defined for n = 2");
  WhittakerData out(2);
  const VLaurent q = VLaurent::q_pow(1);
  for (const auto& [l, x] : d.entries()) {
    out.add(l + Coweight{1, 1}, x);
    out.add(l, q * x);
  }
  return out;
}

inline Json to_json(const WhittakerData& d) {
  Json out = Json::object();
  out["n"] = d.n();
  Json es = Json::array();
  for (const auto& [l, x] : d.entries()) {
    Json e = Json::object();
    e["lambda"] = l.e;
    e["value"] = to_json(x);
    es.push_back(std::move(e));
  }
  out["entries"] = std::move(es);
  return out;
}

inline WhittakerData whittaker_from_json(const Json& j) {
  WhittakerData d(j.at("n").get<int>());
  for (const auto& e : j.at("entries")) {
    Coweight l(e.at("lambda").get<std::vector<int>>());
    d.set(l, d.at(l) + vlaurent_from_json(e.at("value")));
  }
  return d;
}

}  // namespace rsv
