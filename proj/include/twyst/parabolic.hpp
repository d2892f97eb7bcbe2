#pragma once

// Block shapes, parabolic generators, and the two layers they live on:
//
//  * the realization layer: Gauss decomposition of the embedded S(u) matrix
//    inside Y(gl_N), with the spectral shifts of the H/B/C series applied;
//  * the formal layer: free algebras on abstract s-generators and parabolic
//    generators. Relations and morphisms are written formally and pushed
//    into a concrete context through an image table.
//
// Shape conversion (expressing one shape's generators in another's) works by
// reassembling S = F D E from the source data and redoing the Gauss
// decomposition with respect to the target shape; all of that is ordinary
// series arithmetic over the free algebra.

#include "twisted.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <sstream>
#include <tuple>

namespace twyst {

struct Shape {
  std::vector<int> parts;

  Shape() = default;
  explicit Shape(std::vector<int> p) : parts(std::move(p)) {
    for (int x : parts)
      if (x < 1) throw std::invalid_argument("Shape: parts must be positive");
  }

  int n() const { return static_cast<int>(parts.size()); }
  int N() const {
    int s = 0;
    for (int x : parts) s += x;
    return s;
  }
  int part(int a) const { return parts.at(a - 1); }  // 1-based
  // mu_(a) = mu_1 + ... + mu_a, with mu_(0) = 0.
  int sum(int a) const {
    int s = 0;
    for (int k = 0; k < a; ++k) s += parts[k];
    return s;
  }
  bool all_even() const {
    for (int x : parts)
      if (x % 2) return false;
    return true;
  }
  std::string str() const {
    std::ostringstream os;
    for (int k = 0; k < n(); ++k) os << (k ? "," : "") << parts[k];
    return os.str();
  }
  bool operator<(const Shape& o) const { return parts < o.parts; }
  bool operator==(const Shape& o) const { return parts == o.parts; }
};

inline void require_shape(const TwistedCtx& t, const Shape& mu) {
  if (mu.N() != t.N) throw std::invalid_argument("shape does not sum to N");
  if (t.sign == SignType::AII && !mu.all_even())
    throw std::invalid_argument("AII requires even shape parts");
}

// In-block prime/theta: the global convention restricted to a block. Valid
// because AII blocks are even.
inline int block_prime(const TwistedCtx& t, int idx) { return t.prime(idx); }
inline int block_theta(const TwistedCtx& t, int idx) { return t.theta(idx); }

// ---------------------------------------------------------------------------
// Realization inside Y(gl_N).

class ParabolicRealization {
 public:
  ParabolicRealization(const TwistedCtx& t, Shape mu, int cutoff)
      : t_(t), mu_(std::move(mu)), cutoff_(cutoff) {
    require_shape(t_, mu_);
    gauss_ = gauss_decompose(embedded_s_matrix(t_, cutoff_), mu_.parts);
  }

  const TwistedCtx& tctx() const { return t_; }
  const Shape& shape() const { return mu_; }
  int cutoff() const { return cutoff_; }
  const GaussData& gauss() const { return gauss_; }
  const AlgebraCtx* yangian() const { return t_.yangian(); }

  // H_a(u) = D_a(u - mu_(a-1)/2), entry (i,j), 1-based in-block indices.
  USeries h_series(int a, int i, int j) const {
    return series_eval_at(gauss_.D[a - 1].at(i - 1, j - 1), 1, rat(-mu_.sum(a - 1), 2));
  }
  USeries ht_series(int a, int i, int j) const {
    return series_eval_at(gauss_.Dtilde[a - 1].at(i - 1, j - 1), 1, rat(-mu_.sum(a - 1), 2));
  }
  // B_{b,a}(u) = F_{b,a}(u - mu_(a)/2); first index runs over block b.
  USeries bba_series(int b, int a, int i, int j) const {
    return series_eval_at(gauss_.F[b - 1][a - 1].at(i - 1, j - 1), 1, rat(-mu_.sum(a), 2));
  }
  // C_{a,b}(u) = E_{a,b}(u - mu_(a)/2); first index runs over block a.
  USeries cab_series(int a, int b, int i, int j) const {
    return series_eval_at(gauss_.E[a - 1][b - 1].at(i - 1, j - 1), 1, rat(-mu_.sum(a), 2));
  }
  USeries e_series(int a, int b, int i, int j) const {
    return gauss_.E[a - 1][b - 1].at(i - 1, j - 1);
  }
  USeries f_series(int b, int a, int j, int i) const {
    return gauss_.F[b - 1][a - 1].at(j - 1, i - 1);
  }
  // Z_{b;i,j,k,l}(u) = Ht_{b;i,j}(u - mu_b/2) H_{b+1;k,l}(u).
  USeries z_series(int b, int i, int j, int k, int l) const {
    return series_mul(series_eval_at(ht_series(b, i, j), 1, rat(-mu_.part(b), 2)),
                      h_series(b + 1, k, l));
  }

  NCPoly realize(Sym sym) const {
    auto g = p_index(sym);
    switch (g.tag) {
      case PTag::H:
        return g.r == 0 ? delta(g.i, g.j) : h_series(g.a, g.i, g.j).at(g.r);
      case PTag::Ht:
        return g.r == 0 ? delta(g.i, g.j) : ht_series(g.a, g.i, g.j).at(g.r);
      case PTag::Bba:
        return bba_series(g.a, g.b, g.i, g.j).at(g.r);
      case PTag::Cab:
        return cab_series(g.b, g.a, g.i, g.j).at(g.r);
    }
    throw std::invalid_argument("realize: unknown parabolic tag");
  }

 private:
  NCPoly delta(int i, int j) const { return i == j ? yangian()->one() : yangian()->zero(); }

  TwistedCtx t_;
  Shape mu_;
  int cutoff_;
  GaussData gauss_;
};

inline std::shared_ptr<const ParabolicRealization> get_realization(const TwistedCtx& t,
                                                                   const Shape& mu, int cutoff) {
  static std::mutex mutex;
  static std::map<std::tuple<SignType, int, std::vector<int>, int>,
                  std::shared_ptr<const ParabolicRealization>>
      cache;
  std::lock_guard lock(mutex);
  auto key = std::make_tuple(t.sign, t.N, mu.parts, cutoff);
  auto it = cache.find(key);
  if (it == cache.end())
    it = cache.emplace(key, std::make_shared<ParabolicRealization>(t, mu, cutoff)).first;
  return it->second;
}

// ---------------------------------------------------------------------------
// Formal layer.

inline const AlgebraCtx* formal_s_ctx(const TwistedCtx& t) {
  return AlgebraCtx::free_algebra("s:" + sign_name(t.sign) + std::to_string(t.N));
}

inline const AlgebraCtx* formal_p_ctx(const TwistedCtx& t, const Shape& mu) {
  return AlgebraCtx::free_algebra("par:" + sign_name(t.sign) + std::to_string(t.N) + ":" +
                                  mu.str());
}

// Formal parabolic polynomials over one shape.
struct FormalParabolic {
  TwistedCtx t;
  Shape mu;
  const AlgebraCtx* ctx;

  FormalParabolic(const TwistedCtx& tc, Shape m) : t(tc), mu(std::move(m)), ctx(nullptr) {
    require_shape(t, mu);
    ctx = formal_p_ctx(t, mu);
  }

  NCPoly delta(int i, int j) const { return i == j ? ctx->one() : ctx->zero(); }

  NCPoly H(int a, int i, int j, int r) const {
    check_hb(a, i, j);
    if (r < 0) return ctx->zero();
    return r == 0 ? delta(i, j) : ctx->gen(h_sym(a, i, j, r));
  }
  NCPoly Ht(int a, int i, int j, int r) const {
    check_hb(a, i, j);
    if (r < 0) return ctx->zero();
    return r == 0 ? delta(i, j) : ctx->gen(ht_sym(a, i, j, r));
  }
  NCPoly B(int a, int i, int j, int r) const {
    if (a < 1 || a >= mu.n() || i < 1 || i > mu.part(a + 1) || j < 1 || j > mu.part(a))
      throw std::invalid_argument("formal B: bad indices");
    if (r <= 0) return ctx->zero();
    return ctx->gen(b_sym(a, i, j, r));
  }
  NCPoly Bba(int b, int a, int i, int j, int r) const {
    if (a < 1 || b <= a || b > mu.n() || i < 1 || i > mu.part(b) || j < 1 || j > mu.part(a))
      throw std::invalid_argument("formal Bba: bad indices");
    if (r <= 0) return ctx->zero();
    return ctx->gen(bba_sym(b, a, i, j, r));
  }
  NCPoly Cab(int a, int b, int i, int j, int r) const {
    if (a < 1 || b <= a || b > mu.n() || i < 1 || i > mu.part(a) || j < 1 || j > mu.part(b))
      throw std::invalid_argument("formal Cab: bad indices");
    if (r <= 0) return ctx->zero();
    return ctx->gen(cab_sym(a, b, i, j, r));
  }

  // Z_{b;i,j,k,l}^(r) expanded into Ht, H words:
  //   sum_{t=0}^{r} sum_{m=0}^{r-t} binom(t+m-1, m) (mu_b/2)^m Ht^(t) H^(r-t-m).
  NCPoly Z(int b, int i, int j, int k, int l, int r) const {
    if (b < 1 || b >= mu.n()) throw std::invalid_argument("formal Z: bad block");
    if (r < 0) return ctx->zero();
    NCPoly out = ctx->zero();
    Rational half_mu = rat(mu.part(b), 2);
    for (int tt = 0; tt <= r; ++tt)
      for (int m = 0; m + tt <= r; ++m) {
        Rational w = (m == 0) ? Rational(1) : binomial(tt + m - 1, m) * rat_pow(half_mu, m);
        if (is_zero(w)) continue;
        out += w * ctx->mul(Ht(b, i, j, tt), H(b + 1, k, l, r - tt - m));
      }
    return out;
  }

  NCPoly comm(const NCPoly& x, const NCPoly& y) const { return ctx->commutator(x, y); }
  NCPoly anti(const NCPoly& x, const NCPoly& y) const {
    return ctx->mul(x, y) + ctx->mul(y, x);
  }

 private:
  void check_hb(int a, int i, int j) const {
    if (a < 1 || a > mu.n() || i < 1 || i > mu.part(a) || j < 1 || j > mu.part(a))
      throw std::invalid_argument("formal H: bad indices");
  }
};

// Formal abstract s-generators.
struct FormalS {
  TwistedCtx t;
  const AlgebraCtx* ctx;

  explicit FormalS(const TwistedCtx& tc) : t(tc), ctx(formal_s_ctx(tc)) {}

  NCPoly S(int i, int j, int r) const {
    if (i < 1 || j < 1 || i > t.N || j > t.N) throw std::invalid_argument("formal s: bad index");
    if (r < 0) return ctx->zero();
    if (r == 0) return i == j ? ctx->one() : ctx->zero();
    return ctx->gen(s_sym(i, j, r));
  }

  SeriesMatrix matrix(int cutoff) const {
    SeriesMatrix m(ctx, t.N, t.N, cutoff);
    for (int i = 1; i <= t.N; ++i)
      for (int j = 1; j <= t.N; ++j) {
        USeries f(ctx, cutoff);
        for (int r = 0; r <= cutoff; ++r) f.set(r, S(i, j, r));
        m.at(i - 1, j - 1) = std::move(f);
      }
    return m;
  }
};

// ---------------------------------------------------------------------------
// Evaluation of formal polynomials through a symbol image table.

class SymbolImages {
 public:
  explicit SymbolImages(const AlgebraCtx* target) : target_(target) {}
  virtual ~SymbolImages() = default;
  const AlgebraCtx* target() const { return target_; }

  const NCPoly& image(Sym s) const {
    std::lock_guard lock(mutex_);
    auto it = memo_.find(s);
    if (it == memo_.end()) it = memo_.emplace(s, compute(s)).first;
    return it->second;
  }

 protected:
  virtual NCPoly compute(Sym s) const = 0;

 private:
  const AlgebraCtx* target_;
  mutable std::mutex mutex_;
  mutable std::map<Sym, NCPoly> memo_;
};

inline NCPoly eval_formal(const NCPoly& p, const SymbolImages& images) {
  const AlgebraCtx* target = images.target();
  NCPoly out(target);
  for (auto& [w, c] : p.terms()) {
    NCPoly prod = target->one();
    for (Sym s : w) prod = target->mul(prod, images.image(s));
    prod.scale(c);
    out += prod;
  }
  return out;
}

// Parabolic symbols -> Y(gl_N), via the cached Gauss realization.
class YangianImages : public SymbolImages {
 public:
  YangianImages(std::shared_ptr<const ParabolicRealization> real)
      : SymbolImages(real->yangian()), real_(std::move(real)) {}

 protected:
  NCPoly compute(Sym s) const override {
    if (sym_family(s) == Family::PGen) return real_->realize(s);
    if (sym_family(s) == Family::SGen) {
      auto [i, j, r] = t_index(s);
      return embed_s_cached(i, j, r, real_->tctx());
    }
    throw std::invalid_argument("YangianImages: unsupported symbol");
  }

 private:
  std::shared_ptr<const ParabolicRealization> real_;
};

// Reassembles the S(u) matrix from formal parabolic data of shape mu:
//   D_a(u) = H_a(u + mu_(a-1)/2), E_{a,b}(u) = C_{a,b}(u + mu_(a)/2),
//   F_{b,a}(u) = B_{b,a}(u + mu_(a)/2), then S = F D E.
inline SeriesMatrix formal_s_from_parabolic(const FormalParabolic& fp, int cutoff) {
  const Shape& mu = fp.mu;
  int n = mu.n();
  GaussData g;
  g.shape = mu.parts;
  g.D.resize(n);
  g.Dtilde.resize(n);
  g.E.assign(n, std::vector<SeriesMatrix>(n));
  g.F.assign(n, std::vector<SeriesMatrix>(n));
  for (int a = 1; a <= n; ++a) {
    SeriesMatrix Da(fp.ctx, mu.part(a), mu.part(a), cutoff);
    for (int i = 1; i <= mu.part(a); ++i)
      for (int j = 1; j <= mu.part(a); ++j) {
        USeries f(fp.ctx, cutoff);
        for (int r = 0; r <= cutoff; ++r) f.set(r, fp.H(a, i, j, r));
        Da.at(i - 1, j - 1) = series_eval_at(f, 1, rat(mu.sum(a - 1), 2));
      }
    g.D[a - 1] = std::move(Da);
  }
  for (int a = 1; a <= n; ++a)
    for (int b = a + 1; b <= n; ++b) {
      SeriesMatrix Eab(fp.ctx, mu.part(a), mu.part(b), cutoff);
      SeriesMatrix Fba(fp.ctx, mu.part(b), mu.part(a), cutoff);
      for (int i = 1; i <= mu.part(a); ++i)
        for (int j = 1; j <= mu.part(b); ++j) {
          USeries e(fp.ctx, cutoff), f(fp.ctx, cutoff);
          for (int r = 1; r <= cutoff; ++r) {
            e.set(r, fp.Cab(a, b, i, j, r));
            f.set(r, fp.Bba(b, a, j, i, r));
          }
          Eab.at(i - 1, j - 1) = series_eval_at(e, 1, rat(mu.sum(a), 2));
          Fba.at(j - 1, i - 1) = series_eval_at(f, 1, rat(mu.sum(a), 2));
        }
      g.E[a - 1][b - 1] = std::move(Eab);
      g.F[b - 1][a - 1] = std::move(Fba);
    }
  return gauss_reconstruct(g, fp.ctx, cutoff);
}

// Images of shape `src` parabolic symbols as polynomials over a target
// S-matrix (given per entry as USeries in any context). Used both for
// parabolic -> s conversion and for shape -> shape conversion.
class GaussImages : public SymbolImages {
 public:
  GaussImages(const TwistedCtx& t, Shape src, SeriesMatrix s_matrix)
      : SymbolImages(s_matrix.ctx()), src_(std::move(src)) {
    require_shape(t, src_);
    gauss_ = gauss_decompose(s_matrix, src_.parts);
  }

 protected:
  NCPoly compute(Sym s) const override {
    if (sym_family(s) != Family::PGen)
      throw std::invalid_argument("GaussImages: expected a parabolic symbol");
    auto g = p_index(s);
    auto pick = [&](const SeriesMatrix& m, int i, int j, const Rational& shift, int r) {
      return series_eval_at(m.at(i - 1, j - 1), 1, shift).at(r);
    };
    switch (g.tag) {
      case PTag::H:
        return pick(gauss_.D[g.a - 1], g.i, g.j, rat(-src_.sum(g.a - 1), 2), g.r);
      case PTag::Ht:
        return pick(gauss_.Dtilde[g.a - 1], g.i, g.j, rat(-src_.sum(g.a - 1), 2), g.r);
      case PTag::Bba:
        return pick(gauss_.F[g.a - 1][g.b - 1], g.i, g.j, rat(-src_.sum(g.b), 2), g.r);
      case PTag::Cab:
        return pick(gauss_.E[g.b - 1][g.a - 1], g.i, g.j, rat(-src_.sum(g.b), 2), g.r);
    }
    throw std::invalid_argument("GaussImages: unknown tag");
  }

 private:
  Shape src_;
  GaussData gauss_;
};

// src-shape parabolic symbols expressed in abstract s-generators.
inline std::unique_ptr<GaussImages> parabolic_to_s(const TwistedCtx& t, const Shape& src,
                                                   int cutoff) {
  FormalS fs(t);
  return std::make_unique<GaussImages>(t, src, fs.matrix(cutoff));
}

// src-shape parabolic symbols expressed in dst-shape parabolic symbols.
inline std::unique_ptr<GaussImages> shape_conversion(const TwistedCtx& t, const Shape& src,
                                                     const Shape& dst, int cutoff) {
  FormalParabolic fp(t, dst);
  return std::make_unique<GaussImages>(t, src, formal_s_from_parabolic(fp, cutoff));
}

// The iterated-bracket form of B_{b,a}^(r) with auxiliary index k and block
// shifts taken from `sab` (0 for the unshifted algebra):
//   B_{b,a;i,j}^(r) = [B_{b-1;i,k}^(s_{b,b-1}+1), B_{b-1,a;k,j}^(r - s_{b,b-1})].
inline NCPoly bracket_bba(const ParabolicRealization& real, int b, int a, int i, int j, int r,
                          int k, const std::function<int(int, int)>& sab) {
  if (b == a + 1) return real.bba_series(b, a, i, j).at(r);
  if (k < 1 || k > real.shape().part(b - 1))
    throw std::invalid_argument("bracket_bba: auxiliary index out of range");
  const AlgebraCtx* Y = real.yangian();
  int step = sab(b, b - 1);
  NCPoly left = real.bba_series(b, b - 1, i, k).at(step + 1);
  NCPoly right = bracket_bba(real, b - 1, a, k, j, r - step, 1, sab);
  return Y->commutator(left, right);
}

}  // namespace twyst
