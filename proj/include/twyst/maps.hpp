#pragma once

// The tau anti-automorphism and the zeta isomorphism.
//
// tau acts on abstract s-polynomials: s_ij(u) -> theta_i theta_j s_j'i'(u),
// extended anti-multiplicatively. zeta is AI-only and is applied through its
// matrix form zeta(S(u)) = reversed-index S(u)^{-1} at (-u - N/2); parabolic
// images follow functorially by Gauss-decomposing that matrix.

#include "parabolic.hpp"

namespace twyst {

// tau on a formal s-polynomial (words reversed, symbols mapped).
inline NCPoly apply_tau(const NCPoly& p, const TwistedCtx& t) {
  const AlgebraCtx* S = formal_s_ctx(t);
  if (p.ctx() != S) throw std::invalid_argument("apply_tau: expected a formal s-polynomial");
  NCPoly out(S);
  for (auto& [w, c] : p.terms()) {
    Word rev;
    Rational coeff = c;
    rev.reserve(w.size());
    for (auto it = w.rbegin(); it != w.rend(); ++it) {
      auto [i, j, r] = t_index(*it);
      coeff *= rat(t.theta(i) * t.theta(j));
      rev.push_back(s_sym(t.prime(j), t.prime(i), r));
    }
    out += NCPoly(S, rev, coeff);
  }
  return out;
}

// zeta(s_ij(u)) = stilde_{bar i, bar j}(-u - N/2), as a concrete matrix of
// series inside Y(gl_N). AI only.
inline SeriesMatrix zeta_matrix(const TwistedCtx& t, int cutoff) {
  if (t.sign != SignType::AII && t.sign != SignType::AI)
    throw std::invalid_argument("zeta_matrix: bad context");
  if (t.sign == SignType::AII)
    throw std::invalid_argument("zeta is implemented for AI only");
  SeriesMatrix Sinv = matrix_inverse(embedded_s_matrix(t, cutoff));
  SeriesMatrix out(t.yangian(), t.N, t.N, cutoff);
  for (int i = 1; i <= t.N; ++i)
    for (int j = 1; j <= t.N; ++j)
      out.at(i - 1, j - 1) = series_eval_at(Sinv.at(t.N - i, t.N - j), -1, rat(-t.N, 2));
  return out;
}

// Images of formal s-symbols under one concrete S-matrix (used to push
// tau/zeta images of s-expressions into Y(gl_N)).
class SMatrixImages : public SymbolImages {
 public:
  explicit SMatrixImages(SeriesMatrix m) : SymbolImages(m.ctx()), m_(std::move(m)) {}

 protected:
  NCPoly compute(Sym s) const override {
    if (sym_family(s) != Family::SGen)
      throw std::invalid_argument("SMatrixImages: expected an s-symbol");
    auto [i, j, r] = t_index(s);
    return m_.at(i - 1, j - 1).at(r);
  }

 private:
  SeriesMatrix m_;
};

}  // namespace twyst
