#pragma once

// The twisted layer realized inside Y(gl_N): sign conventions (theta, prime),
// the embedded S-matrix, the quaternary and symmetry relation checks, quantum
// and Sklyanin determinants, centrality checking, and the tau / zeta maps.

#include "series.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

namespace twyst {

enum class SignType { AI, AII };

inline std::string sign_name(SignType s) { return s == SignType::AI ? "AI" : "AII"; }

struct TwistedCtx {
  SignType sign;
  int N;

  TwistedCtx(SignType s, int n) : sign(s), N(n) {
    if (n < 1) throw std::invalid_argument("TwistedCtx: N must be positive");
    if (s == SignType::AII && n % 2) throw std::invalid_argument("TwistedCtx: AII needs even N");
  }

  int theta(int i) const { return sign == SignType::AI ? 1 : (i % 2 ? -1 : 1); }
  int prime(int i) const { return sign == SignType::AI ? i : (i % 2 ? i + 1 : i - 1); }

  const AlgebraCtx* yangian() const { return AlgebraCtx::yangian(N); }

  bool operator<(const TwistedCtx& o) const {
    return std::tie(sign, N) < std::tie(o.sign, o.N);
  }
};

// Embedded generator: s_ij^(r) = sum_{a=1..N} sum_{p+q=r}
//     theta_a theta_i (-1)^p t_{a'i'}^(p) t_{aj}^(q),
// with t^(0) resolved to delta; r = 0 gives delta_ij.
inline NCPoly embed_s(int i, int j, int r, const TwistedCtx& t) {
  const AlgebraCtx* Y = t.yangian();
  if (i < 1 || j < 1 || i > t.N || j > t.N || r < 0)
    throw std::invalid_argument("embed_s: index/level out of range");
  if (r == 0) return i == j ? Y->one() : Y->zero();
  NCPoly out(Y);
  for (int a = 1; a <= t.N; ++a) {
    Rational sign = rat(t.theta(a) * t.theta(i));
    for (int p = 0; p <= r; ++p) {
      int q = r - p;
      Rational c = (p % 2) ? -sign : sign;
      Word w;
      if (p == 0) {
        if (t.prime(a) != t.prime(i)) continue;
      } else {
        w.push_back(t_sym(t.prime(a), t.prime(i), p));
      }
      if (q == 0) {
        if (a != j) continue;
      } else {
        w.push_back(t_sym(a, j, q));
      }
      out += NCPoly(Y, w, c);
    }
  }
  return Y->normal_form(out);
}

// Per-(tctx,level) cache of embedded generators; the relation suites query
// these constantly.
inline const NCPoly& embed_s_cached(int i, int j, int r, const TwistedCtx& t) {
  static std::mutex mutex;
  static std::map<std::tuple<SignType, int, int, int, int>, std::unique_ptr<NCPoly>> cache;
  std::lock_guard lock(mutex);
  auto key = std::make_tuple(t.sign, t.N, i, j, r);
  auto it = cache.find(key);
  if (it == cache.end())
    it = cache.emplace(key, std::make_unique<NCPoly>(embed_s(i, j, r, t))).first;
  return *it->second;
}

// The embedded S(u) matrix up to the cutoff.
inline SeriesMatrix embedded_s_matrix(const TwistedCtx& t, int cutoff) {
  const AlgebraCtx* Y = t.yangian();
  SeriesMatrix S(Y, t.N, t.N, cutoff);
  for (int i = 1; i <= t.N; ++i)
    for (int j = 1; j <= t.N; ++j) {
      USeries f(Y, cutoff);
      for (int r = 0; r <= cutoff; ++r) f.set(r, embed_s_cached(i, j, r, t));
      S.at(i - 1, j - 1) = std::move(f);
    }
  return S;
}

struct CheckResult {
  bool pass = false;
  bool vacuous = false;
  NCPoly witness;  // LHS - RHS when failing
};

// Coefficient of u^{-r} v^{-s} in the quaternary relation; all terms are
// embedded s-generators, equality is exact.
inline CheckResult check_quaternary(int i, int j, int k, int l, int r, int s,
                                    const TwistedCtx& t) {
  const AlgebraCtx* Y = t.yangian();
  auto S = [&](int a, int b, int lev) -> NCPoly {
    if (lev < 0) return Y->zero();
    return embed_s_cached(a, b, lev, t);
  };
  auto mul = [&](const NCPoly& a, const NCPoly& b) { return Y->mul(a, b); };
  int ip = t.prime(i), jp = t.prime(j), kp = t.prime(k), lp = t.prime(l);
  Rational th_k_jp = rat(t.theta(k) * t.theta(jp));
  Rational th_i_lp = rat(t.theta(i) * t.theta(lp));
  Rational th_i_jp = rat(t.theta(i) * t.theta(jp));

  // (u^2 - v^2)[s_ij(u), s_kl(v)] at u^{-r} v^{-s}.
  NCPoly lhs = Y->commutator(S(i, j, r + 2), S(k, l, s)) -
               Y->commutator(S(i, j, r), S(k, l, s + 2));
  // (u+v)(s_kj(u)s_il(v) - s_kj(v)s_il(u))
  NCPoly rhs = mul(S(k, j, r + 1), S(i, l, s)) - mul(S(k, j, s), S(i, l, r + 1)) +
               mul(S(k, j, r), S(i, l, s + 1)) - mul(S(k, j, s + 1), S(i, l, r));
  // -(u-v)(th_k th_j' s_ik'(u)s_j'l(v) - th_i th_l' s_ki'(v)s_l'j(u))
  rhs -= th_k_jp * mul(S(i, kp, r + 1), S(jp, l, s)) - th_i_lp * mul(S(k, ip, s), S(lp, j, r + 1));
  rhs += th_k_jp * mul(S(i, kp, r), S(jp, l, s + 1)) - th_i_lp * mul(S(k, ip, s + 1), S(lp, j, r));
  // + th_i th_j' (s_ki'(u)s_j'l(v) - s_ki'(v)s_j'l(u))
  rhs += th_i_jp * (mul(S(k, ip, r), S(jp, l, s)) - mul(S(k, ip, s), S(jp, l, r)));

  CheckResult res;
  res.witness = lhs - rhs;
  res.pass = res.witness.is_zero();
  res.vacuous = lhs.is_zero() && rhs.is_zero() && r + s == 0;
  return res;
}

// Coefficient of u^{-R} in the symmetry relation:
//   theta_i theta_j (-1)^R s_{j'i'}^(R) = s_ij^(R) +- [R even] s_ij^(R-1),
// + for AI, - for AII.
inline CheckResult check_symmetry(int i, int j, int R, const TwistedCtx& t) {
  NCPoly lhs = embed_s_cached(t.prime(j), t.prime(i), R, t);
  lhs.scale(rat(t.theta(i) * t.theta(j) * ((R % 2) ? -1 : 1)));
  NCPoly rhs = embed_s_cached(i, j, R, t);
  if (R >= 1 && R % 2 == 0) {
    NCPoly corr = embed_s_cached(i, j, R - 1, t);
    if (t.sign == SignType::AII) corr.scale(Rational(-1));
    rhs += corr;
  }
  CheckResult res;
  res.witness = lhs - rhs;
  res.pass = res.witness.is_zero();
  return res;
}

// qdet T(u) = sum_{sigma} sgn(sigma) t_{sigma(1),1}(u) ... t_{sigma(N),N}(u-N+1).
inline USeries qdet(int N, int cutoff) {
  const AlgebraCtx* Y = AlgebraCtx::yangian(N);
  auto t_series = [&](int i, int j) {
    USeries f(Y, cutoff);
    f.set(0, i == j ? Y->one() : Y->zero());
    for (int r = 1; r <= cutoff; ++r) f.set(r, Y->gen(t_sym(i, j, r)));
    return f;
  };
  std::vector<int> perm(N);
  for (int i = 0; i < N; ++i) perm[i] = i + 1;
  USeries acc(Y, cutoff);
  do {
    int inv = 0;
    for (int a = 0; a < N; ++a)
      for (int b = a + 1; b < N; ++b) inv += perm[a] > perm[b];
    USeries prod = USeries::one(Y, cutoff);
    for (int col = 1; col <= N; ++col)
      prod = series_mul(prod, series_eval_at(t_series(perm[col - 1], col), 1, rat(-(col - 1))));
    acc = acc + (rat(inv % 2 ? -1 : 1) * prod);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return acc;
}

// sdet S(u) = gamma_N^{+-}(u) qdet T(u) qdet T(-u+N-1), inside Y(gl_N).
inline USeries sdet(const TwistedCtx& t, int cutoff) {
  const AlgebraCtx* Y = t.yangian();
  USeries q = qdet(t.N, cutoff);
  USeries g = gamma_series(Y, cutoff, t.sign == SignType::AI, t.N);
  return series_mul(g, series_mul(q, series_eval_at(q, -1, rat(t.N - 1))));
}

// [z, s_ij^(r)] = 0 for all i,j and r <= level_bound?
inline CheckResult centrality_check(const NCPoly& z, const TwistedCtx& t, int level_bound) {
  const AlgebraCtx* Y = t.yangian();
  if (z.ctx() != Y) throw std::invalid_argument("centrality_check: wrong context");
  CheckResult res;
  res.pass = true;
  for (int r = 1; r <= level_bound; ++r)
    for (int i = 1; i <= t.N; ++i)
      for (int j = 1; j <= t.N; ++j) {
        NCPoly c = Y->commutator(z, embed_s_cached(i, j, r, t));
        if (!c.is_zero()) {
          res.pass = false;
          res.witness = std::move(c);
          return res;
        }
      }
  return res;
}

}  // namespace twyst
