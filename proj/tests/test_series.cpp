// Truncated series over PBW contexts: products, inversion, exact spectral
// substitution, quasideterminants and the block Gauss decomposition.

#include "twyst/parabolic.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace twyst;

namespace {
const AlgebraCtx* Y2 = AlgebraCtx::yangian(2);
}

TEST_CASE("series multiplication basics") {
  USeries one = USeries::one(Y2, 3);
  USeries f(Y2, 3);
  f.set(0, Y2->one());
  f.set(1, Y2->gen(t_sym(1, 2, 1)));
  CHECK(series_mul(f, one) == f);
  CHECK(series_mul(one, f) == f);

  // (1 + a u^-1)(1 + b u^-1) = 1 + (a+b) u^-1 + ab u^-2
  USeries g(Y2, 3);
  g.set(0, Y2->one());
  g.set(1, Y2->gen(t_sym(2, 1, 1)));
  USeries p = series_mul(f, g);
  CHECK(p.at(1) == Y2->gen(t_sym(1, 2, 1)) + Y2->gen(t_sym(2, 1, 1)));
  CHECK(p.at(2) == Y2->mul(Y2->gen(t_sym(1, 2, 1)), Y2->gen(t_sym(2, 1, 1))));

  // (1 + x u^-1)(1 - x u^-1) = 1 - x^2 u^-2 for a single generator x
  USeries h(Y2, 2), hneg(Y2, 2);
  h.set(0, Y2->one());
  h.set(1, Y2->gen(t_sym(1, 1, 1)));
  hneg.set(0, Y2->one());
  hneg.set(1, rat(-1) * Y2->gen(t_sym(1, 1, 1)));
  USeries sq = series_mul(h, hneg);
  CHECK(sq.at(1).is_zero());
  CHECK(sq.at(2) == rat(-1) * Y2->mul(Y2->gen(t_sym(1, 1, 1)), Y2->gen(t_sym(1, 1, 1))));

  CHECK_THROWS(sq.at(3));  // beyond cutoff is a hard error
}

TEST_CASE("series inverse") {
  CHECK(series_inverse(USeries::one(Y2, 4)) == USeries::one(Y2, 4));

  USeries f(Y2, 2);
  f.set(0, Y2->one());
  f.set(1, Y2->gen(t_sym(1, 1, 1)));
  USeries g = series_inverse(f);
  NCPoly x = Y2->gen(t_sym(1, 1, 1));
  CHECK(g.at(1) == rat(-1) * x);
  CHECK(g.at(2) == Y2->mul(x, x));
  CHECK(series_mul(f, g) == USeries::one(Y2, 2));
  CHECK(series_mul(g, f) == USeries::one(Y2, 2));
  CHECK(series_inverse(g) == f);

  USeries bad(Y2, 2);
  bad.set(0, rat(2) * Y2->one());
  CHECK_THROWS(series_inverse(bad));
}

TEST_CASE("exact spectral substitution") {
  // f = u^-1 shifted to (u - 1/2)^-1 = u^-1 + (1/2) u^-2 + ...
  USeries f(Y2, 2);
  f.set(1, Y2->one());
  USeries g = series_substitute(f, 1, rat(1, 2));
  CHECK(g.at(1) == Y2->one());
  CHECK(g.at(2) == NCPoly(Y2, rat(1, 2)));

  // c = 0 is the identity
  USeries id = series_substitute(f, 1, rat(0));
  CHECK(id == f);

  // round trip f(u-c) then (u+c)
  USeries rich(Y2, 5);
  rich.set(0, Y2->one());
  for (int r = 1; r <= 5; ++r) rich.set(r, Y2->gen(t_sym(1 + r % 2, 1 + (r + 1) % 2, r)));
  CHECK(series_substitute(series_substitute(rich, 1, rat(7, 3)), 1, rat(-7, 3)) == rich);

  // eps = -1 twice is the identity as well
  CHECK(series_eval_at(series_eval_at(rich, -1, rat(0)), -1, rat(0)) == rich);
}

TEST_CASE("gamma series") {
  CHECK(gamma_series(Y2, 4, true, 17) == USeries::one(Y2, 4));
  // c = 0: numerator equals denominator
  CHECK(gamma_series(Y2, 4, false, 0) == USeries::one(Y2, 4));
  // c = 1: (2u+1)/(2u) = 1 + (1/2) u^-1
  USeries g1 = gamma_series(Y2, 2, false, 1);
  CHECK(g1.at(1) == NCPoly(Y2, rat(1, 2)));
  CHECK(g1.at(2).is_zero());
  // c = 2: (2u+1)/(2u-1) = 1 + u^-1 + (1/2) u^-2 + ...
  USeries g = gamma_series(Y2, 2, false, 2);
  CHECK(g.at(0) == Y2->one());
  CHECK(g.at(1) == Y2->one());
  CHECK(g.at(2) == NCPoly(Y2, rat(1, 2)));
}

TEST_CASE("matrix inverse and quasideterminant") {
  TwistedCtx t(SignType::AI, 2);
  SeriesMatrix S = embedded_s_matrix(t, 4);
  SeriesMatrix Sinv = matrix_inverse(S);
  CHECK(S * Sinv == SeriesMatrix::identity(Y2, 2, 4));
  CHECK(Sinv * S == SeriesMatrix::identity(Y2, 2, 4));
  CHECK(matrix_inverse(SeriesMatrix::identity(Y2, 2, 3)) ==
        SeriesMatrix::identity(Y2, 2, 3));

  // scalar blocks A=1, B=x u^-1, C=y u^-1, D=1: quasidet = 1 - yx u^-2
  SeriesMatrix A = SeriesMatrix::identity(Y2, 1, 3), D = SeriesMatrix::identity(Y2, 1, 3);
  SeriesMatrix B(Y2, 1, 1, 3), C(Y2, 1, 1, 3);
  USeries xb(Y2, 3), yc(Y2, 3);
  xb.set(1, Y2->gen(t_sym(1, 2, 1)));
  yc.set(1, Y2->gen(t_sym(2, 1, 1)));
  B.at(0, 0) = xb;
  C.at(0, 0) = yc;
  SeriesMatrix q = quasideterminant(A, B, C, D);
  CHECK(q.at(0, 0).at(1).is_zero());
  CHECK(q.at(0, 0).at(2) ==
        rat(-1) * Y2->mul(Y2->gen(t_sym(2, 1, 1)), Y2->gen(t_sym(1, 2, 1))));
}

TEST_CASE("inverse S-matrix commutes off-diagonal (N=4 spot check)") {
  TwistedCtx t(SignType::AI, 4);
  const AlgebraCtx* Y4 = t.yangian();
  SeriesMatrix S = embedded_s_matrix(t, 3);
  SeriesMatrix St = matrix_inverse(S);
  // [s_12(u), stilde_34(v)] = 0 when the index sets are disjoint,
  // checked coefficientwise.
  for (int r = 1; r <= 3; ++r)
    for (int s = 1; s <= 3; ++s)
      CHECK(Y4->commutator(S.at(0, 1).at(r), St.at(2, 3).at(s)).is_zero());
}

TEST_CASE("gauss decomposition reconstructs S and matches quasideterminants") {
  TwistedCtx t(SignType::AI, 3);
  const AlgebraCtx* Y3 = t.yangian();
  int cutoff = 4;
  SeriesMatrix S = embedded_s_matrix(t, cutoff);

  for (const Shape& mu : {Shape({2, 1}), Shape({1, 1, 1}), Shape({1, 2})}) {
    GaussData g = gauss_decompose(S, mu.parts);
    CHECK(gauss_reconstruct(g, Y3, cutoff) == S);

    // Independent route: the quasideterminant formulas on leading blocks.
    int n = mu.n();
    for (int a = 1; a <= n; ++a) {
      int off = mu.sum(a - 1), sz = mu.part(a);
      if (a == 1) {
        CHECK(g.D[0] == S.block(0, 0, sz, sz));
        continue;
      }
      SeriesMatrix A = S.block(0, 0, off, off), B = S.block(0, off, off, sz),
                   C = S.block(off, 0, sz, off), D = S.block(off, off, sz, sz);
      CHECK(g.D[a - 1] == quasideterminant(A, B, C, D));
    }
    // E_{a,b} and F_{b,a} quasideterminant forms for a = 1.
    for (int b = 2; b <= n; ++b) {
      int sz1 = mu.part(1), off = mu.sum(b - 1), szb = mu.part(b);
      SeriesMatrix top = S.block(0, off, sz1, szb), left = S.block(off, 0, szb, sz1);
      CHECK(g.E[0][b - 1] == matrix_inverse(g.D[0]) * top);
      CHECK(g.F[b - 1][0] == left * matrix_inverse(g.D[0]));
    }
  }

  CHECK(gauss_decompose(SeriesMatrix::identity(Y3, 3, 2), {2, 1})
            .E[0][1]
            .at(0, 0)
            .at(1)
            .is_zero());
  CHECK_THROWS(gauss_decompose(S, {2, 2}));
}
