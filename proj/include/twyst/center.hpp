#pragma once

// The central series Z_M(u) of a truncation, its coefficients z_k, the
// Pfaffian candidate, and the Miura-routed centrality checks. Quotient-level
// assertions never rewrite modulo the ideal; they go through the (injective)
// Miura transform.

#include "morphisms.hpp"

namespace twyst {

// sdet of one diagonal block at the quaternary level, as a series over the
// block matrix's own context (formal or concrete):
//   AI: the Gauss-diagonal product d_1(u) d_2(u-1) ... d_k(u-k+1);
//   AII, 2x2 (J-aligned): from the m = 2 antisymmetrizer,
//     1/2 [ m11(u)m22(v) + m22(u)m11(v) - m12(u)m21(v) - m21(u)m12(v)
//           + tr m(u) tr m(v) / (2u-1) ],  v = u-1.
inline USeries block_sdet(const SeriesMatrix& m, SignType sign) {
  const AlgebraCtx* ctx = m.ctx();
  int cutoff = m.cutoff();
  if (sign == SignType::AI) {
    int sz = m.rows();
    GaussData g = gauss_decompose(m, std::vector<int>(sz, 1));
    USeries acc = USeries::one(ctx, cutoff);
    for (int k = 1; k <= sz; ++k)
      acc = series_mul(acc, series_eval_at(g.D[k - 1].at(0, 0), 1, rat(-(k - 1))));
    return acc;
  }
  if (m.rows() != 2)
    throw std::invalid_argument("block_sdet: AII blocks larger than 2x2 are not supported");
  auto at_v = [&](int i, int j) { return series_eval_at(m.at(i, j), 1, rat(-1)); };
  USeries acc = series_mul(m.at(0, 0), at_v(1, 1)) + series_mul(m.at(1, 1), at_v(0, 0)) -
                series_mul(m.at(0, 1), at_v(1, 0)) - series_mul(m.at(1, 0), at_v(0, 1));
  USeries tr_u = m.at(0, 0) + m.at(1, 1);
  USeries tr_v = at_v(0, 0) + at_v(1, 1);
  // 1/(2u-1) as a series in u^{-1}
  USeries inv2u(ctx, cutoff);
  USeries den = USeries::one(ctx, cutoff);
  if (cutoff >= 1) den.set(1, NCPoly(ctx, rat(-1, 2)));
  USeries geo = series_inverse(den);
  for (int r = 0; r + 1 <= cutoff; ++r) {
    NCPoly c = geo.at(r);
    c.scale(rat(1, 2));
    inv2u.set(r + 1, c);
  }
  acc = acc + series_mul(inv2u, series_mul(tr_u, tr_v));
  return rat(1, 2) * acc;
}

inline SeriesMatrix formal_h_matrix(const FormalParabolic& fp, int a, int cutoff) {
  SeriesMatrix m(fp.ctx, fp.mu.part(a), fp.mu.part(a), cutoff);
  for (int i = 1; i <= fp.mu.part(a); ++i)
    for (int j = 1; j <= fp.mu.part(a); ++j) {
      USeries f(fp.ctx, cutoff);
      for (int r = 0; r <= cutoff; ++r) f.set(r, fp.H(a, i, j, r));
      m.at(i - 1, j - 1) = std::move(f);
    }
  return m;
}

// sdet S(u) as a formal parabolic series, through the block factorization
// sdet S(u) = prod_a (sdet H_a)(u - mu_(a-1)/2). AI: any shape. AII: single
// block only (multi-block factorization would need Sklyanin minors).
inline USeries formal_sdet(const FormalParabolic& fp, int cutoff) {
  if (fp.t.sign == SignType::AII && fp.mu.n() != 1)
    throw std::invalid_argument("formal_sdet: AII supported for single-block shapes only");
  USeries acc = USeries::one(fp.ctx, cutoff);
  for (int a = 1; a <= fp.mu.n(); ++a) {
    USeries w = block_sdet(formal_h_matrix(fp, a, cutoff), fp.t.sign);
    acc = series_mul(acc, series_eval_at(w, 1, rat(-fp.mu.sum(a - 1), 2)));
  }
  return acc;
}

// ---------------------------------------------------------------------------
// The central series Z_M(u).

struct CenterSeries {
  TruncatedCtx trctx;
  Shape work_shape;         // shape the formal coefficients live over
  int M = 0;                // degree of the polynomial = boxes of the pyramid
  std::vector<NCPoly> w;    // w[k] = coefficient of u^{M-k}, k = 0..cutoff,
                            // normalized so that w[0] = 1
  const NCPoly& z(int k) const { return w.at(k); }
};

// rho-offsets of the polynomialization factor (type-dependent).
inline std::vector<Rational> center_rho_offsets(SignType sign, int N) {
  std::vector<Rational> rho;
  int n = N / 2;
  for (int i = 1; i <= n; ++i) {
    if (sign == SignType::AI) {
      if (N % 2 == 0) {
        rho.push_back(rat(1 - i));
        rho.push_back(rat(i - 1));
      } else {
        rho.push_back(rat(1 - 2 * i, 2));
        rho.push_back(rat(2 * i - 1, 2));
      }
    } else {
      rho.push_back(rat(-i));
      rho.push_back(rat(i));
    }
  }
  if (N % 2 == 1) rho.push_back(rat(1, 2));
  return rho;
}

// Multiplies an exact polynomial prefactor (given by its roots/quadratic
// factors) against a u^{-1}-series and reads off descending coefficients.
inline CenterSeries center_series(const TruncatedCtx& tr, int cutoff) {
  const TwistedCtx& t = tr.sctx.tctx;
  if (!tr.sctx.sigma.is_zero())
    throw std::invalid_argument("center_series: implemented for sigma = 0 contexts");
  Shape work = (t.sign == SignType::AI) ? Shape(std::vector<int>(t.N, 1)) : Shape({t.N});
  FormalParabolic fp(t, work);
  int ell = tr.level;
  Pyramid pyr = tr.pyramid();
  int M = pyr.boxes();
  if (cutoff < M) throw std::invalid_argument("center_series: cutoff too small");

  USeries C = series_eval_at(formal_sdet(fp, cutoff), 1, rat(t.N - 1, 2));
  if (ell % 2 == 1) {
    // gamma_N^{+-}(u + (N-1)/2)^{-1}
    USeries g = gamma_series(fp.ctx, cutoff, t.sign == SignType::AI, t.N);
    C = series_mul(series_inverse(series_eval_at(g, 1, rat(t.N - 1, 2))), C);
  }

  // polynomial prefactor, as coefficients P[d] of u^d
  std::vector<Rational> P{Rational(1)};
  auto mul_linear = [&](const Rational& c) {  // times (u + c)
    std::vector<Rational> out(P.size() + 1, Rational(0));
    for (std::size_t d = 0; d < P.size(); ++d) {
      out[d + 1] += P[d];
      out[d] += c * P[d];
    }
    P = std::move(out);
  };
  auto mul_quadratic = [&](const Rational& c2) {  // times (c2 - u^2)
    std::vector<Rational> out(P.size() + 2, Rational(0));
    for (std::size_t d = 0; d < P.size(); ++d) {
      out[d + 2] -= P[d];
      out[d] += c2 * P[d];
    }
    P = std::move(out);
  };

  std::vector<int> q = pyr.columns();
  int s = (ell - 1) / 2;
  for (int i = 1; i <= s; ++i) {
    int qi = q[(ell % 2 == 1 ? (ell + 1) / 2 : ell / 2) + i - 1];
    for (int j = 1; j <= qi; ++j) {
      Rational c = rat(qi + 1, 2) - rat(j);
      mul_quadratic(c * c);
    }
  }
  if (ell % 2 == 1)
    for (const Rational& r : center_rho_offsets(t.sign, t.N)) mul_linear(r);

  if (static_cast<int>(P.size()) - 1 != M)
    throw std::logic_error("center_series: prefactor degree mismatch");

  // w_k = sum_r P[M - k + r] * C_r, the u^{M-k} coefficient
  CenterSeries out{tr, work, M, {}};
  Rational lead = P[M];  // C_0 = 1, so w_0 = P[M]; normalize to 1
  for (int k = 0; k <= cutoff; ++k) {
    NCPoly acc = fp.ctx->zero();
    for (int r = 0; r <= cutoff; ++r) {
      int d = M - k + r;
      if (d < 0 || d > M) continue;
      if (is_zero(P[d])) continue;
      acc += P[d] * C.at(r);
    }
    acc.scale(1 / lead);
    out.w.push_back(std::move(acc));
  }
  return out;
}

// ---------------------------------------------------------------------------
// The Miura image of the sdet series, through its factorization: the first
// factor carries the level-1/level-2 evaluation of the sdet, and every
// comultiplication step contributes a qdet(u) qdet(-u+t-1) factor under the
// Yangian evaluation (with the spectral shifts of the step's block size).
// This is the cheap route for the center checks; it is cross-validated
// against the generic symbol-by-symbol route at lower cutoffs.

inline USeries chi_of_sdet(const Miura& chi, int cutoff) {
  const TruncatedCtx& tr = chi.trctx();
  const TwistedCtx& t = tr.sctx.tctx;
  const AlgebraCtx* T = chi.target();

  // first factor: the final evaluation applied to the S-matrix, then sdet
  const AlgebraCtx* U0 = AlgebraCtx::enveloping(make_gl(t.N));
  SeriesMatrix X(U0, t.N, t.N, cutoff);
  bool odd = tr.level % 2;
  for (int i = 1; i <= t.N; ++i)
    for (int j = 1; j <= t.N; ++j) {
      USeries f(U0, cutoff);
      if (odd) {
        // xi: delta + (u + 1/2)^{-1} f_ij
        f.set(0, i == j ? U0->one() : U0->zero());
        for (int m = 1; m <= cutoff; ++m)
          f.set(m, rat_pow(rat(-1, 2), m - 1) * f_element(t, U0, i, j));
      } else {
        Ev2Images ev2(t);
        FormalS fs(t);
        f.set(0, i == j ? U0->one() : U0->zero());
        for (int m = 1; m <= cutoff; ++m) f.set(m, eval_formal(fs.S(i, j, m), ev2));
      }
      X.at(i - 1, j - 1) = std::move(f);
    }
  USeries acc(T, cutoff);
  {
    USeries w0 = block_sdet(X, t.sign);
    for (int r = 0; r <= cutoff; ++r) acc.set(r, tensor_inject(w0.at(r), 0, T));
  }

  // one qdet(u - (N-t)/2) qdet(-u + (N+t)/2 - 1) factor per step
  int slot = 0;
  for (const MiuraStep& st : chi.plan()) {
    if (st.kind != MiuraStep::Kind::DeltaR && st.kind != MiuraStep::Kind::PlainDeltaR) continue;
    ++slot;
    int tb = st.factor_size;
    USeries q = qdet(tb, cutoff);
    PiImages pi(tb);
    USeries qt(pi.target(), cutoff);
    for (int r = 0; r <= cutoff; ++r) qt.set(r, eval_formal(q.at(r), pi));
    USeries factor = series_mul(series_eval_at(qt, 1, rat(-(t.N - tb), 2)),
                                series_eval_at(qt, -1, rat(t.N + tb - 2, 2)));
    USeries lifted(T, cutoff);
    for (int r = 0; r <= cutoff; ++r) lifted.set(r, tensor_inject(factor.at(r), slot, T));
    acc = series_mul(acc, lifted);
  }
  return acc;
}

// ---------------------------------------------------------------------------
// Miura-routed verification.

struct CenterReport {
  bool polynomial_ok = true;      // negative-power coefficients vanish
  bool centrality_ok = true;      // all z_{2k} commute with the inventory
  bool degrees_ok = true;         // canonical degree of z_k is k
  std::vector<std::string> failures;
  std::vector<std::string> leading_monomials;  // search-mode output
};

inline std::string leading_monomials_of(const NCPoly& p, const AlgebraCtx* ctx) {
  long top = ctx->canonical_degree(p);
  std::string out;
  int shown = 0;
  for (auto& [w, c] : p.terms())
    if (ctx->canonical_degree(w) == top && shown < 4) {
      if (shown) out += " + ";
      out += rat_to_string(c);
      for (Sym s : w) out += "*" + sym_to_string(s);
      ++shown;
    }
  return out;
}

inline CenterReport center_verify(const TruncatedCtx& tr, int cutoff, int validate_cutoff = 5) {
  CenterReport rep;
  const TwistedCtx& t = tr.sctx.tctx;
  CenterSeries zs = center_series(tr, std::min(cutoff, 64));
  Miura chi(tr, cutoff + 2);
  const AlgebraCtx* T = chi.target();

  // chi(sdet S(u)) by the factorized route, cross-checked against the
  // symbol-by-symbol route at low levels
  USeries chiC = chi_of_sdet(chi, cutoff);
  FormalParabolic fp(t, zs.work_shape);
  USeries formalC = formal_sdet(fp, std::min(cutoff, validate_cutoff));
  for (int r = 0; r <= formalC.cutoff(); ++r)
    if (chi.apply(formalC.at(r), zs.work_shape) != chiC.at(r)) {
      rep.failures.push_back("sdet factorization mismatch under Miura at u^-" +
                             std::to_string(r));
      rep.centrality_ok = false;
    }

  // chi(Z_M(u)) coefficients: the same prefactor convolution applied to the
  // image series
  USeries chiCt = series_eval_at(chiC, 1, rat(t.N - 1, 2));
  if (tr.level % 2 == 1) {
    USeries g = gamma_series(T, cutoff, t.sign == SignType::AI, t.N);
    chiCt = series_mul(series_inverse(series_eval_at(g, 1, rat(t.N - 1, 2))), chiCt);
  }
  // reuse the exact prefactor polynomial through the formal series: w_k of
  // the image is the convolution with the same P as in center_series
  std::vector<NCPoly> chiW;
  {
    // rebuild P exactly as center_series does
    Pyramid pyr = tr.pyramid();
    int ell = tr.level;
    std::vector<Rational> P{Rational(1)};
    auto mul_linear = [&](const Rational& c) {
      std::vector<Rational> out(P.size() + 1, Rational(0));
      for (std::size_t d = 0; d < P.size(); ++d) {
        out[d + 1] += P[d];
        out[d] += c * P[d];
      }
      P = std::move(out);
    };
    auto mul_quadratic = [&](const Rational& c2) {
      std::vector<Rational> out(P.size() + 2, Rational(0));
      for (std::size_t d = 0; d < P.size(); ++d) {
        out[d + 2] -= P[d];
        out[d] += c2 * P[d];
      }
      P = std::move(out);
    };
    std::vector<int> q = pyr.columns();
    int s = (ell % 2 == 1) ? (ell - 1) / 2 : ell / 2;
    for (int i = 1; i <= s; ++i) {
      int qi = q[(ell % 2 == 1 ? (ell + 1) / 2 : ell / 2) + i - 1];
      for (int j = 1; j <= qi; ++j) {
        Rational c = rat(qi + 1, 2) - rat(j);
        mul_quadratic(c * c);
      }
    }
    if (ell % 2 == 1)
      for (const Rational& r : center_rho_offsets(t.sign, t.N)) mul_linear(r);
    Rational lead = P[zs.M];
    for (int k = 0; k <= cutoff; ++k) {
      NCPoly acc(T);
      for (int r = 0; r <= cutoff; ++r) {
        int d = zs.M - k + r;
        if (d < 0 || d > zs.M || is_zero(P[d])) continue;
        acc += P[d] * chiCt.at(r);
      }
      acc.scale(Rational(1) / lead);
      chiW.push_back(std::move(acc));
    }
  }

  // polynomial property: u^{-k} coefficients (k > 0) die in the truncation
  for (int k = zs.M + 1; k <= cutoff; ++k)
    if (!chiW[k].is_zero()) {
      rep.polynomial_ok = false;
      rep.failures.push_back("negative coefficient u^{-" + std::to_string(k - zs.M) +
                             "} survives Miura");
    }

  // canonical degrees of the even coefficients (formal bookkeeping)
  for (int k = 2; k <= zs.M; k += 2) {
    long deg = zs.z(k).ctx()->canonical_degree(zs.z(k));
    if (!zs.z(k).is_zero() && deg != k) {
      rep.degrees_ok = false;
      rep.failures.push_back("z_" + std::to_string(k) + " has canonical degree " +
                             std::to_string(deg));
    }
  }

  // centrality of the even coefficients against the full inventory
  ShiftedCtx inv_ctx(t, tr.sctx.sigma, zs.work_shape);
  auto inventory = truncated_pbw_generators(TruncatedCtx(inv_ctx, tr.level));
  std::vector<NCPoly> gen_images;
  for (auto& g : inventory) gen_images.push_back(chi.apply(fp.ctx->gen(g.sym), zs.work_shape));
  for (int k = 2; k <= zs.M; k += 2) {
    rep.leading_monomials.push_back("z_" + std::to_string(k) + ": " +
                                    leading_monomials_of(chiW[k], T));
    for (std::size_t gi = 0; gi < gen_images.size(); ++gi) {
      if (!T->commutator(chiW[k], gen_images[gi]).is_zero()) {
        rep.centrality_ok = false;
        rep.failures.push_back("z_" + std::to_string(k) + " fails against " +
                               inventory[gi].label);
      }
    }
  }
  return rep;
}

// ---------------------------------------------------------------------------
// Pfaffian candidate and verification (AI, N = 2, odd level).

inline NCPoly pfaffian_candidate(const TruncatedCtx& tr, int i, int window) {
  const TwistedCtx& t = tr.sctx.tctx;
  if (t.N != 2 || t.sign != SignType::AI)
    throw std::invalid_argument("pfaffian_candidate: needs AI with N = 2");
  int p1 = tr.level - 2 * tr.sctx.sigma.at(1, 2);
  if (window != p1 && window != p1 + 1)
    throw std::invalid_argument("pfaffian_candidate: window must be p_1 or p_1 + 1");
  FormalParabolic fp(t, Shape({1, 1}));
  return pfaffian_window_element(fp, tr.sctx.sigma.at(1, 2), i, window);
}

struct PfaffianReport {
  bool central = false;
  bool degree_ok = false;
  bool nonzero_image = false;
  long canonical_degree = -1;
  std::string leading;
  std::vector<std::string> failures;
};

inline PfaffianReport pfaffian_verify(const TruncatedCtx& tr, int window_index) {
  PfaffianReport rep;
  const TwistedCtx& t = tr.sctx.tctx;
  if (t.N != 2 || t.sign != SignType::AI || tr.level % 2 == 0)
    throw std::invalid_argument("pfaffian_verify: needs AI, N = 2, odd level");
  Shape work({1, 1});
  NCPoly pf = pfaffian_candidate(tr, 1, window_index);
  int m = tr.boxes() / 2;
  rep.canonical_degree = pf.ctx()->canonical_degree(pf);
  rep.degree_ok = rep.canonical_degree == m;
  if (!rep.degree_ok)
    rep.failures.push_back("canonical degree " + std::to_string(rep.canonical_degree) +
                           " != m = " + std::to_string(m));

  int cutoff = tr.level + 2 * tr.sctx.sigma.at(1, 2) + 4;
  Miura chi(tr, cutoff);
  const AlgebraCtx* T = chi.target();
  NCPoly img = chi.apply(pf, work);
  rep.nonzero_image = !img.is_zero();
  if (!rep.nonzero_image) rep.failures.push_back("Miura image vanishes");
  rep.leading = leading_monomials_of(img, T);

  ShiftedCtx inv_ctx(t, tr.sctx.sigma, work);
  auto inventory = truncated_pbw_generators(TruncatedCtx(inv_ctx, tr.level));
  FormalParabolic fp(t, work);
  rep.central = true;
  for (auto& g : inventory) {
    NCPoly gi = chi.apply(fp.ctx->gen(g.sym), work);
    if (!T->commutator(img, gi).is_zero()) {
      rep.central = false;
      rep.failures.push_back("not central against " + g.label);
    }
  }
  return rep;
}

}  // namespace twyst
