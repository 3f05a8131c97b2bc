#pragma once

#include <string>
#include <vector>

#include "rsverify/characters.hpp"
#include "rsverify/coweights.hpp"
#include "rsverify/errors.hpp"
#include "rsverify/exactalg.hpp"

namespace rsv {

enum class BasisKind {
  EtaLambda,            // eta_{lambda,a,m}(v)
  EtaSquareTheta,       // eta^sq_{lambda,a+1,m} o theta(v)
  EtaSquareThetaPrime,  // eta^sq_{lambda,a+1,m} o theta'(v)
  EtaTheta,             // eta_{lambda,a+1,m} o theta(v)
  EtaThetaPrime,        // eta_{lambda,a+1,m} o theta'(v)
  RsMonomial,           // theta'^i theta^j eta^k (v)
};

inline const char* kind_name(BasisKind k) {
  switch (k) {
    case BasisKind::EtaLambda: return "eta_lambda";
    case BasisKind::EtaSquareTheta: return "eta_square_theta";
    case BasisKind::EtaSquareThetaPrime: return "eta_square_theta_prime";
    case BasisKind::EtaTheta: return "eta_theta";
    case BasisKind::EtaThetaPrime: return "eta_theta_prime";
    case BasisKind::RsMonomial: return "rs_monomial";
  }
  return "?";
}

struct BasisElementSpec {
  BasisKind kind = BasisKind::EtaLambda;
  Coweight lambda;
  int i = 0, j = 0, k = 0;
  int m_minus_a = 0;

  std::string label() const {
    if (kind == BasisKind::RsMonomial)
      return std::string(kind_name(kind)) + "(" + std::to_string(i) + "," + std::to_string(j) + "," +
             std::to_string(k) + ")";
    return std::string(kind_name(kind)) + lambda.to_string();
  }
};

struct XiImage {
  SymLaurent poly;
  bool stand_in = false;
};

// q^{n(n-1)/2} X_1...X_n: the Xi-multiplier of one varpi^{-mu_n} shift.
inline SymLaurent eta_multiplier(int n) {
  return SymLaurent::monomial(Exponents(n, 1), VLaurent::q_pow(n * (n - 1) / 2));
}

// Satake image of the characteristic function of lambda.  Exact for lambda = 0
// and for the minuscule coweights at n = 2; otherwise q^{<rho,lambda>} times
// the orbit sum, flagged as a stand-in.
inline XiImage satake_image(const Coweight& lambda) {
  const int n = lambda.size();
  if (!is_h_dominant(lambda)) throw domain_error("satake_image: weight is not H-dominant");
  if (lambda == Coweight::zero(n)) return {SymLaurent::constant(n, 1), false};
  if (n == 2 && (lambda == Coweight{1, 0} || lambda == Coweight{1, 1} || lambda == Coweight{1, -1}))
    return {VLaurent::q_pow(1) * so4_minuscule_character(lambda), false};
  int rho = 0;
  for (int i = 0; i < n; ++i) rho += (n - 1 - i) * lambda[i];
  return {VLaurent::q_pow(rho) * orbit_sum(lambda), true};
}

inline SymLaurent xi_theta_newform() { return parse_sym("q(X1 + X2)", 2); }
inline SymLaurent xi_theta_prime_newform() { return parse_sym("q(1 + X1X2)", 2); }

inline XiImage xi_image(const BasisElementSpec& s, int n) {
  const int K = s.m_minus_a;
  auto need_n2 = [&] {
    if (n != 2) throw unsupported_error("theta and theta' images are only available for n = 2");
  };
  switch (s.kind) {
    case BasisKind::EtaLambda: {
      if (K % 2 || 2 * sup_norm(s.lambda) > K) throw domain_error("eta_lambda spec violates its level bound");
      XiImage im = satake_image(s.lambda);
      im.poly = eta_multiplier(n).pow(K / 2) * im.poly;
      return im;
    }
    case BasisKind::EtaSquareTheta:
    case BasisKind::EtaSquareThetaPrime:
    case BasisKind::EtaTheta:
    case BasisKind::EtaThetaPrime: {
      need_n2();
      if (K % 2 == 0 || 2 * sup_norm(s.lambda) > K - 1) throw domain_error("spec violates its level bound");
      XiImage im = satake_image(s.lambda);
      bool square = s.kind == BasisKind::EtaSquareTheta || s.kind == BasisKind::EtaSquareThetaPrime;
      Coweight lt = tilde(s.lambda);
      if (square && lt != s.lambda) {
        XiImage other = satake_image(lt);
        im.poly += other.poly;
        im.stand_in = im.stand_in || other.stand_in;
      }
      bool prime = s.kind == BasisKind::EtaSquareThetaPrime || s.kind == BasisKind::EtaThetaPrime;
      SymLaurent base = prime ? xi_theta_prime_newform() : xi_theta_newform();
      im.poly = eta_multiplier(n).pow((K - 1) / 2) * im.poly * base;
      return im;
    }
    case BasisKind::RsMonomial: {
      need_n2();
      if (s.i + s.j + 2 * s.k != K) throw domain_error("rs_monomial spec violates i + j + 2k = m - a");
      SymLaurent p = xi_theta_prime_newform().pow(s.i) * xi_theta_newform().pow(s.j) * eta_multiplier(2).pow(s.k);
      return {p, false};
    }
  }
  throw internal_error("unknown basis kind");
}

inline std::vector<BasisElementSpec> b_set(int n, int K) {
  std::vector<BasisElementSpec> out;
  if (K < 0) return out;
  if (K % 2 == 0) {
    for (const auto& l : enumerate_cone(Cone::H, n, K / 2)) out.push_back({BasisKind::EtaLambda, l, 0, 0, 0, K});
  } else {
    for (const auto& l : enumerate_cone(Cone::G, n, (K - 1) / 2)) {
      out.push_back({BasisKind::EtaSquareTheta, l, 0, 0, 0, K});
      out.push_back({BasisKind::EtaSquareThetaPrime, l, 0, 0, 0, K});
    }
  }
  return out;
}

// The variant without the tilde symmetrization, for opposite parity.
inline std::vector<BasisElementSpec> b_prime_set(int n, int K) {
  std::vector<BasisElementSpec> out;
  if (K < 1 || K % 2 == 0) return out;
  for (const auto& l : enumerate_cone(Cone::G, n, (K - 1) / 2)) {
    out.push_back({BasisKind::EtaTheta, l, 0, 0, 0, K});
    out.push_back({BasisKind::EtaThetaPrime, l, 0, 0, 0, K});
  }
  return out;
}

inline std::vector<BasisElementSpec> rs_basis(int K) {
  std::vector<BasisElementSpec> out;
  for (int k = 0; 2 * k <= K; ++k)
    for (int j = 0; j + 2 * k <= K; ++j) {
      int i = K - j - 2 * k;
      out.push_back({BasisKind::RsMonomial, Coweight::zero(2), i, j, k, K});
    }
  return out;
}

struct RankResult {
  int rank = 0;
  bool independent = true;
};

// Fraction-free elimination over Q[v, v^-1]; each division below is exact.
inline RankResult rank_check(const std::vector<SymLaurent>& images) {
  if (images.empty()) return {0, true};
  const int r = images.front().nvars();
  std::map<Exponents, int> col_of;
  for (const auto& p : images) {
    if (p.nvars() != r) throw structural_error("rank_check: variable-count mismatch");
    for (const auto& [e, c] : p.terms()) col_of.emplace(e, 0);
  }
  int ncols = 0;
  for (auto& [e, idx] : col_of) idx = ncols++;
  const int nrows = static_cast<int>(images.size());
  std::vector<std::vector<VLaurent>> M(nrows, std::vector<VLaurent>(ncols));
  for (int i = 0; i < nrows; ++i)
    for (const auto& [e, c] : images[i].terms()) M[i][col_of[e]] = c;
  int rank = 0;
  VLaurent prev(1);
  for (int col = 0; col < ncols && rank < nrows; ++col) {
    int p = rank;
    while (p < nrows && M[p][col].is_zero()) ++p;
    if (p == nrows) continue;
    std::swap(M[p], M[rank]);
    for (int i = rank + 1; i < nrows; ++i) {
      for (int j = col + 1; j < ncols; ++j)
        M[i][j] = divide_exact(M[rank][col] * M[i][j] - M[i][col] * M[rank][j], prev);
      M[i][col] = VLaurent();
    }
    prev = M[rank][col];
    ++rank;
  }
  return {rank, rank == nrows};
}

struct BasisComparison {
  int m_minus_a = 0;
  std::vector<SymLaurent> rs_images, b_images;
  int rs_rank = 0, b_rank = 0, joint_rank = 0;
  bool spans_equal = false;
  bool sets_equal = false;
  bool stand_in = false;
  std::vector<SymLaurent> only_rs, only_b;
};

inline std::vector<SymLaurent> images_of(const std::vector<BasisElementSpec>& specs, int n, bool* stand_in = nullptr) {
  std::vector<SymLaurent> out;
  for (const auto& s : specs) {
    XiImage im = xi_image(s, n);
    if (stand_in) *stand_in = *stand_in || im.stand_in;
    out.push_back(im.poly);
  }
  return out;
}

inline BasisComparison compare_bases(int K) {
  if (K < 0 || K > 4) throw domain_error("compare_bases supports 0 <= m - a <= 4");
  BasisComparison c;
  c.m_minus_a = K;
  c.rs_images = images_of(rs_basis(K), 2, &c.stand_in);
  c.b_images = images_of(b_set(2, K), 2, &c.stand_in);
  c.rs_rank = rank_check(c.rs_images).rank;
  c.b_rank = rank_check(c.b_images).rank;
  std::vector<SymLaurent> all = c.rs_images;
  all.insert(all.end(), c.b_images.begin(), c.b_images.end());
  c.joint_rank = rank_check(all).rank;
  c.spans_equal = c.rs_rank == c.b_rank && c.joint_rank == c.rs_rank;
  auto contains = [](const std::vector<SymLaurent>& v, const SymLaurent& x) {
    for (const auto& y : v) if (y == x) return true;
    return false;
  };
  for (const auto& x : c.rs_images) if (!contains(c.b_images, x)) c.only_rs.push_back(x);
  for (const auto& x : c.b_images) if (!contains(c.rs_images, x)) c.only_b.push_back(x);
  c.sets_equal = c.only_rs.empty() && c.only_b.empty();
  return c;
}

struct DependenceSides {
  SymLaurent lhs, rhs;
};

// Xi-images of eta_{e1} o theta'(v) and q eta_0 o theta(v) + eta_{e1+e2} o theta(v)
// at m = a + 3.
inline DependenceSides dependence_sides() {
  auto img = [](BasisKind k, Coweight l) { return xi_image({k, std::move(l), 0, 0, 0, 3}, 2).poly; };
  DependenceSides s;
  s.lhs = img(BasisKind::EtaThetaPrime, {1, 0});
  s.rhs = VLaurent::q_pow(1) * img(BasisKind::EtaTheta, {0, 0}) + img(BasisKind::EtaTheta, {1, 1});
  return s;
}

inline bool dependence_check_a3() {
  DependenceSides s = dependence_sides();
  // The same relation written out from the minuscule values.
  SymLaurent lit_l = parse_sym("qX1X2 * q(X1 + X2 + X1^-1 + X2^-1) * q(1 + X1X2)", 2);
  SymLaurent lit_r = parse_sym("q * qX1X2 * q(X1 + X2) + qX1X2 * q(X1X2 + 1 + X1^-1X2^-1) * q(X1 + X2)", 2);
  return s.lhs == s.rhs && s.lhs == lit_l && s.rhs == lit_r;
}

}  // namespace rsv
