// The central series Z_M(u), its coefficients, and the Pfaffian generator.

#include "twyst/center.hpp"
#include "twyst/suite.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace twyst;

TEST_CASE("block sdet routes agree with gamma qdet qdet") {
  // AI N=3: product of Gauss-diagonal entries vs (sdet = qdet); also the
  // sdetdecomp factorization for mu = (2,1) at cutoff 6.
  TwistedCtx t(SignType::AI, 3);
  int cutoff = 6;
  USeries viaQdet = sdet(t, cutoff);
  FormalParabolic fp(t, Shape({1, 1, 1}));
  auto real = get_realization(t, Shape({1, 1, 1}), cutoff);
  YangianImages img(real);
  USeries formal = formal_sdet(fp, cutoff);
  for (int r = 0; r <= cutoff; ++r)
    CHECK(eval_formal(formal.at(r), img) == viaQdet.at(r));

  // mu = (2,1): sdet S(u) = sdet D_1(u) sdet D_2(u-2), via per-block sdets
  GaussData g = gauss_decompose(embedded_s_matrix(t, cutoff), {2, 1});
  USeries rhs = series_mul(block_sdet(g.D[0], SignType::AI),
                           series_eval_at(block_sdet(g.D[1], SignType::AI), 1, rat(-2)));
  for (int r = 0; r <= cutoff; ++r) CHECK(viaQdet.at(r) == rhs.at(r));

  // AII N=2: the antisymmetrizer form
  TwistedCtx t2(SignType::AII, 2);
  USeries viaQdet2 = sdet(t2, cutoff);
  USeries anti = block_sdet(embedded_s_matrix(t2, cutoff), SignType::AII);
  for (int r = 0; r <= cutoff; ++r) CHECK(viaQdet2.at(r) == anti.at(r));
}

TEST_CASE("center series for so_9: polynomial, central, graded") {
  TwistedCtx t(SignType::AI, 3);
  TruncatedCtx tr(ShiftedCtx(t, ShiftMatrix::zero(3), Shape({3})), 3);
  CHECK(tr.boxes() == 9);  // M = N*level
  CenterReport rep = center_verify(tr, 11);
  for (auto& f : rep.failures) INFO(f);
  CHECK(rep.polynomial_ok);
  CHECK(rep.centrality_ok);
  CHECK(rep.degrees_ok);
  CHECK_FALSE(rep.leading_monomials.empty());
}

TEST_CASE("center series for the sp-side case") {
  TwistedCtx t(SignType::AII, 2);
  TruncatedCtx tr(ShiftedCtx(t, ShiftMatrix::zero(2), Shape({2})), 3);
  CHECK(tr.boxes() == 6);
  CenterReport rep = center_verify(tr, 8);
  for (auto& f : rep.failures) INFO(f);
  CHECK(rep.polynomial_ok);
  CHECK(rep.centrality_ok);
  CHECK(rep.degrees_ok);
}

TEST_CASE("pfaffian candidate windows") {
  TwistedCtx t(SignType::AI, 2);
  // sigma = 0, level 3: the p_1 window literally equals -s_12^(3)
  TruncatedCtx tr(ShiftedCtx(t, ShiftMatrix::zero(2), Shape({2})), 3);
  NCPoly pf = pfaffian_candidate(tr, 1, 3);
  auto real = get_realization(t, Shape({1, 1}), 6);
  YangianImages img(real);
  CHECK(eval_formal(pf, img) == rat(-1) * embed_s(1, 2, 3, t));

  // the p_1 + 1 window reproduces the extra truncation-ideal generator
  FormalParabolic fp(t, Shape({1, 1}));
  CHECK(pfaffian_candidate(tr, 1, 4) == pfaffian_window_element(fp, 0, 1, 4));
  CHECK_THROWS(pfaffian_candidate(tr, 1, 5));
}

TEST_CASE("pfaffian verification, unshifted and shifted") {
  TwistedCtx t(SignType::AI, 2);
  {
    TruncatedCtx tr(ShiftedCtx(t, ShiftMatrix::zero(2), Shape({2})), 3);
    PfaffianReport rep = pfaffian_verify(tr, 3);  // window p_1 = 3
    for (auto& f : rep.failures) INFO(f);
    CHECK(rep.central);
    CHECK(rep.degree_ok);
    CHECK(rep.nonzero_image);
    CHECK(rep.canonical_degree == 3);  // m = M/2 = 3
  }
  {
    ShiftMatrix s = ShiftMatrix::from_superdiagonal({1});
    TruncatedCtx tr(ShiftedCtx(t, s, Shape({1, 1})), 5);
    PfaffianReport rep = pfaffian_verify(tr, 3);  // p_1 = 3
    for (auto& f : rep.failures) INFO(f);
    CHECK(rep.central);
    CHECK(rep.degree_ok);
    CHECK(rep.nonzero_image);
  }
  // gate: even level has no candidate
  TruncatedCtx even(ShiftedCtx(t, ShiftMatrix::zero(2), Shape({2})), 2);
  CHECK_THROWS(pfaffian_verify(even, 2));
}
