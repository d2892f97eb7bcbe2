#pragma once

// Truncated formal series in u^{-1} with NCPoly coefficients, matrices of
// them, inversion, exact spectral substitution, quasideterminants and the
// block Gauss decomposition.
//
// The cutoff is explicit: asking for a coefficient beyond it is a hard
// error, never a silent zero, and arithmetic propagates the minimum of the
// operand cutoffs.

#include "context.hpp"

#include <stdexcept>
#include <vector>

namespace twyst {

class USeries {
 public:
  USeries() = default;
  USeries(const AlgebraCtx* ctx, int cutoff) : ctx_(ctx), coeffs_(cutoff + 1, NCPoly(ctx)) {
    if (cutoff < 0) throw std::invalid_argument("USeries: negative cutoff");
  }

  static USeries constant(const AlgebraCtx* ctx, int cutoff, Rational c) {
    USeries f(ctx, cutoff);
    f.coeffs_[0] = NCPoly(ctx, std::move(c));
    return f;
  }
  static USeries one(const AlgebraCtx* ctx, int cutoff) {
    return constant(ctx, cutoff, Rational(1));
  }

  const AlgebraCtx* ctx() const { return ctx_; }
  int cutoff() const { return static_cast<int>(coeffs_.size()) - 1; }

  const NCPoly& at(int r) const {
    if (r < 0 || r > cutoff())
      throw std::out_of_range("USeries: coefficient beyond cutoff requested");
    return coeffs_[r];
  }
  void set(int r, NCPoly p) {
    if (r < 0 || r > cutoff()) throw std::out_of_range("USeries: coefficient beyond cutoff");
    coeffs_[r] = std::move(p);
  }

  USeries truncated(int new_cutoff) const {
    if (new_cutoff > cutoff()) throw std::out_of_range("USeries: cannot extend cutoff");
    USeries f(ctx_, new_cutoff);
    for (int r = 0; r <= new_cutoff; ++r) f.coeffs_[r] = coeffs_[r];
    return f;
  }

  friend USeries operator+(const USeries& a, const USeries& b) {
    a.check(b);
    USeries out(a.ctx_, std::min(a.cutoff(), b.cutoff()));
    for (int r = 0; r <= out.cutoff(); ++r) out.coeffs_[r] = a.coeffs_[r] + b.coeffs_[r];
    return out;
  }
  friend USeries operator-(const USeries& a, const USeries& b) {
    a.check(b);
    USeries out(a.ctx_, std::min(a.cutoff(), b.cutoff()));
    for (int r = 0; r <= out.cutoff(); ++r) out.coeffs_[r] = a.coeffs_[r] - b.coeffs_[r];
    return out;
  }
  friend USeries operator*(const Rational& c, const USeries& a) {
    USeries out = a;
    for (auto& p : out.coeffs_) p.scale(c);
    return out;
  }

  bool operator==(const USeries& o) const { return ctx_ == o.ctx_ && coeffs_ == o.coeffs_; }

 private:
  void check(const USeries& o) const {
    if (ctx_ != o.ctx_) throw std::invalid_argument("USeries: context mismatch");
  }

  const AlgebraCtx* ctx_ = nullptr;
  std::vector<NCPoly> coeffs_;
};

// Cauchy product truncated at the minimum cutoff.
inline USeries series_mul(const USeries& f, const USeries& g) {
  if (f.ctx() != g.ctx()) throw std::invalid_argument("series_mul: context mismatch");
  const AlgebraCtx* ctx = f.ctx();
  USeries out(ctx, std::min(f.cutoff(), g.cutoff()));
  for (int r = 0; r <= out.cutoff(); ++r) {
    NCPoly acc(ctx);
    for (int t = 0; t <= r; ++t) acc += ctx->mul(f.at(t), g.at(r - t));
    out.set(r, std::move(acc));
  }
  return out;
}

// Two-sided inverse of a series with constant term 1, by the triangular
// solve g_r = -sum_{t=1..r} c_t g_{r-t}.
inline USeries series_inverse(const USeries& f) {
  const AlgebraCtx* ctx = f.ctx();
  if (f.at(0) != ctx->one())
    throw std::invalid_argument("series_inverse: leading coefficient must be 1");
  USeries g(ctx, f.cutoff());
  g.set(0, ctx->one());
  for (int r = 1; r <= f.cutoff(); ++r) {
    NCPoly acc(ctx);
    for (int t = 1; t <= r; ++t) acc -= ctx->mul(f.at(t), g.at(r - t));
    g.set(r, std::move(acc));
  }
  return g;
}

// f(eps*u + delta) as a series in u^{-1}, expanded exactly:
//   (u + delta)^{-r} = sum_{m>=0} binom(r+m-1, m) (-delta)^m u^{-r-m}.
inline USeries series_eval_at(const USeries& f, int eps, const Rational& delta) {
  if (eps != 1 && eps != -1) throw std::invalid_argument("series_eval_at: eps must be +-1");
  const AlgebraCtx* ctx = f.ctx();
  USeries out(ctx, f.cutoff());
  for (int r = 0; r <= f.cutoff(); ++r) {
    NCPoly c = f.at(r);
    if (c.is_zero()) continue;
    if (eps == -1 && (r % 2)) c.scale(Rational(-1));
    // (eps*u + delta)^{-r} = eps^{-r} (u + eps*delta)^{-r}
    Rational d = (eps == -1) ? Rational(-delta) : delta;
    for (int m = 0; r + m <= f.cutoff(); ++m) {
      Rational w = (m == 0) ? Rational(1) : binomial(r + m - 1, m) * rat_pow(-d, m);
      if (is_zero(w)) continue;
      NCPoly add = c;
      add.scale(w);
      out.set(r + m, out.at(r + m) + add);
    }
  }
  return out;
}

// Spec-facing form: f(eps*u - c).
inline USeries series_substitute(const USeries& f, int eps, const Rational& c) {
  return series_eval_at(f, eps, Rational(-c));
}

// gamma_c^{+-}(u): 1 in the orthogonal case, (2u+1)/(2u-c+1)
// in the symplectic case.
inline USeries gamma_series(const AlgebraCtx* ctx, int cutoff, bool orthogonal, long c) {
  if (orthogonal) return USeries::one(ctx, cutoff);
  // (1 + (1/2) x) / (1 + (1-c)/2 x) with x = u^{-1}.
  Rational a = rat(1, 2), b = rat(1 - c, 2);
  USeries den = USeries::one(ctx, cutoff);
  if (cutoff >= 1) den.set(1, NCPoly(ctx, b));
  USeries num = USeries::one(ctx, cutoff);
  if (cutoff >= 1) num.set(1, NCPoly(ctx, a));
  return series_mul(num, series_inverse(den));
}

class SeriesMatrix {
 public:
  SeriesMatrix() = default;
  SeriesMatrix(const AlgebraCtx* ctx, int rows, int cols, int cutoff)
      : ctx_(ctx), rows_(rows), cols_(cols), data_(rows * cols, USeries(ctx, cutoff)) {}

  static SeriesMatrix identity(const AlgebraCtx* ctx, int n, int cutoff) {
    SeriesMatrix m(ctx, n, n, cutoff);
    for (int i = 0; i < n; ++i) m.at(i, i) = USeries::one(ctx, cutoff);
    return m;
  }

  const AlgebraCtx* ctx() const { return ctx_; }
  int rows() const { return rows_; }
  int cols() const { return cols_; }
  int cutoff() const { return data_.empty() ? 0 : data_[0].cutoff(); }

  USeries& at(int r, int c) { return data_[r * cols_ + c]; }
  const USeries& at(int r, int c) const { return data_[r * cols_ + c]; }

  SeriesMatrix block(int r0, int c0, int nr, int nc) const {
    SeriesMatrix out(ctx_, nr, nc, cutoff());
    for (int r = 0; r < nr; ++r)
      for (int c = 0; c < nc; ++c) out.at(r, c) = at(r0 + r, c0 + c);
    return out;
  }

  friend SeriesMatrix operator*(const SeriesMatrix& a, const SeriesMatrix& b) {
    if (a.cols_ != b.rows_) throw std::invalid_argument("SeriesMatrix: shape mismatch");
    SeriesMatrix out(a.ctx_, a.rows_, b.cols_, std::min(a.cutoff(), b.cutoff()));
    for (int r = 0; r < a.rows_; ++r)
      for (int c = 0; c < b.cols_; ++c) {
        USeries acc(a.ctx_, out.cutoff());
        for (int k = 0; k < a.cols_; ++k)
          acc = acc + series_mul(a.at(r, k), b.at(k, c));
        out.at(r, c) = std::move(acc);
      }
    return out;
  }
  friend SeriesMatrix operator+(const SeriesMatrix& a, const SeriesMatrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
      throw std::invalid_argument("SeriesMatrix: shape mismatch");
    SeriesMatrix out(a.ctx_, a.rows_, a.cols_, std::min(a.cutoff(), b.cutoff()));
    for (int r = 0; r < a.rows_; ++r)
      for (int c = 0; c < a.cols_; ++c) out.at(r, c) = a.at(r, c) + b.at(r, c);
    return out;
  }
  friend SeriesMatrix operator-(const SeriesMatrix& a, const SeriesMatrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
      throw std::invalid_argument("SeriesMatrix: shape mismatch");
    SeriesMatrix out(a.ctx_, a.rows_, a.cols_, std::min(a.cutoff(), b.cutoff()));
    for (int r = 0; r < a.rows_; ++r)
      for (int c = 0; c < a.cols_; ++c) out.at(r, c) = a.at(r, c) - b.at(r, c);
    return out;
  }

  bool operator==(const SeriesMatrix& o) const {
    return ctx_ == o.ctx_ && rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
  }

  SeriesMatrix eval_at(int eps, const Rational& delta) const {
    SeriesMatrix out = *this;
    for (auto& f : out.data_) f = series_eval_at(f, eps, delta);
    return out;
  }

 private:
  const AlgebraCtx* ctx_ = nullptr;
  int rows_ = 0, cols_ = 0;
  std::vector<USeries> data_;
};

// Two-sided inverse of a square series matrix with constant term I, via the
// coefficient recursion (M^{-1})_r = -sum_{t=1..r} M_t (M^{-1})_{r-t}.
inline SeriesMatrix matrix_inverse(const SeriesMatrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("matrix_inverse: not square");
  const AlgebraCtx* ctx = m.ctx();
  int n = m.rows(), D = m.cutoff();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (m.at(i, j).at(0) != (i == j ? ctx->one() : ctx->zero()))
        throw std::invalid_argument("matrix_inverse: constant term is not the identity");

  // inv[r] as dense NCPoly blocks.
  std::vector<std::vector<NCPoly>> inv(D + 1, std::vector<NCPoly>(n * n, NCPoly(ctx)));
  for (int i = 0; i < n; ++i) inv[0][i * n + i] = ctx->one();
  for (int r = 1; r <= D; ++r)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        NCPoly acc(ctx);
        for (int t = 1; t <= r; ++t)
          for (int k = 0; k < n; ++k) acc -= ctx->mul(m.at(i, k).at(t), inv[r - t][k * n + j]);
        inv[r][i * n + j] = std::move(acc);
      }

  SeriesMatrix out(ctx, n, n, D);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      USeries f(ctx, D);
      for (int r = 0; r <= D; ++r) f.set(r, inv[r][i * n + j]);
      out.at(i, j) = std::move(f);
    }
  return out;
}

// D - C A^{-1} B.
inline SeriesMatrix quasideterminant(const SeriesMatrix& A, const SeriesMatrix& B,
                                     const SeriesMatrix& C, const SeriesMatrix& D) {
  if (A.rows() != A.cols() || B.rows() != A.rows() || C.cols() != A.cols() ||
      D.rows() != C.rows() || D.cols() != B.cols())
    throw std::invalid_argument("quasideterminant: shape mismatch");
  return D - C * matrix_inverse(A) * B;
}

struct GaussData {
  std::vector<int> shape;               // block sizes
  std::vector<SeriesMatrix> D, Dtilde;  // diagonal blocks and their inverses
  // E[a][b], F[b][a] for 0 <= a < b < n (0-based block indices); only the
  // a < b entries are populated.
  std::vector<std::vector<SeriesMatrix>> E, F;
};

// Block LU S = F D E with respect to the shape; requires constant term I.
// Computed by peeling: D_1 = S_11, E_{1,b} = D_1^{-1} S_{1,b},
// F_{b,1} = S_{b,1} D_1^{-1}, then recurse on the Schur complement.
inline GaussData gauss_decompose(const SeriesMatrix& S, const std::vector<int>& shape) {
  int N = 0;
  for (int mu : shape) {
    if (mu < 1) throw std::invalid_argument("gauss_decompose: bad shape");
    N += mu;
  }
  if (S.rows() != N || S.cols() != N)
    throw std::invalid_argument("gauss_decompose: shape does not sum to matrix size");

  int n = static_cast<int>(shape.size());
  GaussData g;
  g.shape = shape;
  g.D.resize(n);
  g.Dtilde.resize(n);
  g.E.assign(n, std::vector<SeriesMatrix>(n));
  g.F.assign(n, std::vector<SeriesMatrix>(n));

  SeriesMatrix rest = S;  // Schur complement of the leading blocks
  std::vector<int> offs(n + 1, 0);
  for (int a = 0; a < n; ++a) offs[a + 1] = offs[a] + shape[a];

  for (int a = 0; a < n; ++a) {
    int mu = shape[a];
    g.D[a] = rest.block(0, 0, mu, mu);
    g.Dtilde[a] = matrix_inverse(g.D[a]);
    int tail = rest.rows() - mu;
    if (tail == 0) break;
    SeriesMatrix top = rest.block(0, mu, mu, tail);
    SeriesMatrix left = rest.block(mu, 0, tail, mu);
    SeriesMatrix Erow = g.Dtilde[a] * top;
    SeriesMatrix Fcol = left * g.Dtilde[a];
    int off = 0;
    for (int b = a + 1; b < n; ++b) {
      g.E[a][b] = Erow.block(0, off, mu, shape[b]);
      g.F[b][a] = Fcol.block(off, 0, shape[b], mu);
      off += shape[b];
    }
    rest = rest.block(mu, mu, tail, tail) - left * g.Dtilde[a] * top;
  }
  return g;
}

// Reassembles F * D * E from Gauss data (the defining property check).
inline SeriesMatrix gauss_reconstruct(const GaussData& g, const AlgebraCtx* ctx, int cutoff) {
  int n = static_cast<int>(g.shape.size());
  int N = 0;
  for (int mu : g.shape) N += mu;
  std::vector<int> offs(n + 1, 0);
  for (int a = 0; a < n; ++a) offs[a + 1] = offs[a] + g.shape[a];

  SeriesMatrix Dm(ctx, N, N, cutoff), Em = SeriesMatrix::identity(ctx, N, cutoff),
               Fm = SeriesMatrix::identity(ctx, N, cutoff);
  for (int a = 0; a < n; ++a)
    for (int i = 0; i < g.shape[a]; ++i)
      for (int j = 0; j < g.shape[a]; ++j) Dm.at(offs[a] + i, offs[a] + j) = g.D[a].at(i, j);
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      for (int i = 0; i < g.shape[a]; ++i)
        for (int j = 0; j < g.shape[b]; ++j) {
          Em.at(offs[a] + i, offs[b] + j) = g.E[a][b].at(i, j);
          Fm.at(offs[b] + j, offs[a] + i) = g.F[b][a].at(j, i);
        }
  return Fm * Dm * Em;
}

}  // namespace twyst
