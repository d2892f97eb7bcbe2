// Straightening engine: the worked low-level examples, the independent
// series-expansion oracle for the Yangian commutator, and the PBW property
// tests (idempotence, reduction-order independence, associativity,
// filtration soundness).

#include "twyst/context.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <random>

using namespace twyst;

namespace {

const AlgebraCtx* Y2 = AlgebraCtx::yangian(2);

NCPoly tgen(const AlgebraCtx* Y, int i, int j, int r) { return Y->gen(t_sym(i, j, r)); }

// Independent oracle for [t_ij^(r), t_kl^(s)], built only from the defining
// series relation: the recurrence
//   [t^(r+1), t^(s)] - [t^(r), t^(s+1)] = t_kj^(r) t_il^(s) - t_kj^(s) t_il^(r)
// plus [t^(0), -] = 0, iterated downward in r. No closed formula involved.
NCPoly comm_recurrence(const AlgebraCtx* Y, int i, int j, int r, int k, int l, int s) {
  if (r == 0 || s == 0) return Y->zero();
  auto tfac = [&](int a, int b, int lev) {
    return lev == 0 ? (a == b ? Y->one() : Y->zero()) : tgen(Y, a, b, lev);
  };
  // [t^(r), t^(s)] = [t^(r-1), t^(s+1)] + t_kj^(r-1) t_il^(s) - t_kj^(s) t_il^(r-1)
  NCPoly acc = Y->zero();
  int rr = r, ss = s;
  while (rr > 0) {
    acc += Y->mul(tfac(k, j, rr - 1), tfac(i, l, ss));
    acc -= Y->mul(tfac(k, j, ss), tfac(i, l, rr - 1));
    --rr;
    ++ss;
  }
  return Y->normal_form(acc);
}

}  // namespace

TEST_CASE("normal form fixes sorted words") {
  NCPoly p = Y2->mul(tgen(Y2, 1, 1, 1), tgen(Y2, 1, 1, 1));
  CHECK(p == Y2->normal_form(p));
  CHECK(p.size() == 1);
}

TEST_CASE("basic straightening with the closed commutator") {
  // t[2,1;1] t[1,2;1] = t[1,2;1] t[2,1;1] - t[1,1;1] + t[2,2;1]
  NCPoly p = Y2->mul(tgen(Y2, 2, 1, 1), tgen(Y2, 1, 2, 1));
  NCPoly expect = Y2->monomial({t_sym(1, 2, 1), t_sym(2, 1, 1)}) - tgen(Y2, 1, 1, 1) +
                  tgen(Y2, 2, 2, 1);
  CHECK(p == expect);

  // t[2,1;2] t[1,2;1] = t[1,2;1] t[2,1;2] - t[1,1;2] + t[2,2;2]
  NCPoly q = Y2->mul(tgen(Y2, 2, 1, 2), tgen(Y2, 1, 2, 1));
  NCPoly expect2 = Y2->monomial({t_sym(1, 2, 1), t_sym(2, 1, 2)}) - tgen(Y2, 1, 1, 2) +
                   tgen(Y2, 2, 2, 2);
  CHECK(q == expect2);
}

TEST_CASE("yangian commutator examples") {
  CHECK(yangian_commutator(Y2, 1, 2, 1, 2, 1, 1) == tgen(Y2, 1, 1, 1) - tgen(Y2, 2, 2, 1));
  // delta support: r = s = 1, j != k, i != l
  CHECK(yangian_commutator(Y2, 1, 1, 1, 2, 2, 1).is_zero());
  // (1,1,2),(1,1,1): the a = 0,1 terms cancel
  CHECK(yangian_commutator(Y2, 1, 1, 2, 1, 1, 1).is_zero());
  CHECK_THROWS(yangian_commutator(Y2, 0, 1, 1, 1, 1, 1));
  CHECK_THROWS(yangian_commutator(Y2, 1, 3, 1, 1, 1, 1));
}

TEST_CASE("closed commutator matches the series-expansion oracle") {
  const AlgebraCtx* Y3 = AlgebraCtx::yangian(3);
  for (int i = 1; i <= 3; ++i)
    for (int j = 1; j <= 3; ++j)
      for (int k = 1; k <= 3; ++k)
        for (int l = 1; l <= 3; ++l)
          for (int r = 1; r <= 3; ++r)
            for (int s = 1; s + r <= 5; ++s) {
              NCPoly closed = Y3->normal_form(yangian_commutator(Y3, i, j, r, k, l, s));
              CHECK(closed == comm_recurrence(Y3, i, j, r, k, l, s));
            }
}

TEST_CASE("scalar multiply example") {
  NCPoly a = rat(2, 3) * tgen(Y2, 1, 1, 2);
  NCPoly b = rat(3) * tgen(Y2, 1, 1, 2);
  NCPoly prod = Y2->mul(a, b);
  CHECK(prod == rat(2) * Y2->monomial({t_sym(1, 1, 2), t_sym(1, 1, 2)}));
  CHECK(Y2->mul(Y2->one(), a) == a);
}

TEST_CASE("normal form is idempotent and reduction-order independent") {
  std::mt19937 rng(20240817);
  const AlgebraCtx* Y3 = AlgebraCtx::yangian(3);
  auto random_word = [&](int len) {
    Word w;
    for (int k = 0; k < len; ++k)
      w.push_back(t_sym(1 + rng() % 3, 1 + rng() % 3, 1 + rng() % 3));
    return w;
  };

  // A right-to-left reduction strategy, as a second route to the normal form.
  auto straighten_rtl = [&](NCPoly p) {
    std::unordered_map<Word, Rational, WordHash> todo, done;
    for (auto& [w, c] : p.terms()) todo[w] += c;
    while (!todo.empty()) {
      std::unordered_map<Word, Rational, WordHash> next;
      for (auto& [w, c] : todo) {
        if (is_zero(c)) continue;
        int pos = -1;
        for (int k = static_cast<int>(w.size()) - 2; k >= 0; --k)
          if (Y3->is_descent(w[k], w[k + 1])) {
            pos = k;
            break;
          }
        if (pos < 0) {
          done[w] += c;
          continue;
        }
        Word swapped = w;
        std::swap(swapped[pos], swapped[pos + 1]);
        next[swapped] += c;
        for (auto& [cw, cc] : Y3->commutator_oracle(w[pos], w[pos + 1]).terms()) {
          Word rep(w.begin(), w.begin() + pos);
          rep.insert(rep.end(), cw.begin(), cw.end());
          rep.insert(rep.end(), w.begin() + pos + 2, w.end());
          next[rep] += c * cc;
        }
      }
      todo = std::move(next);
    }
    return NCPoly::from_map(Y3, std::move(done));
  };

  for (int trial = 0; trial < 40; ++trial) {
    NCPoly p(Y3, random_word(4), rat(1 + rng() % 5, 1 + rng() % 3));
    NCPoly nf = Y3->normal_form(p);
    CHECK(Y3->normal_form(nf) == nf);
    CHECK(straighten_rtl(p) == nf);
  }
}

TEST_CASE("multiplication is associative on random triples") {
  std::mt19937 rng(7);
  const AlgebraCtx* Y = Y2;
  auto random_poly = [&]() {
    NCPoly p(Y);
    int terms = 1 + rng() % 2;
    for (int t = 0; t < terms; ++t) {
      Word w;
      int len = 1 + rng() % 2;
      for (int k = 0; k < len; ++k)
        w.push_back(t_sym(1 + rng() % 2, 1 + rng() % 2, 1 + rng() % 3));
      p += NCPoly(Y, w, rat(static_cast<long>(rng() % 7) - 3, 1 + rng() % 4));
    }
    return p;
  };
  int nontrivial = 0;
  for (int trial = 0; trial < 1000; ++trial) {
    NCPoly a = random_poly(), b = random_poly(), c = random_poly();
    NCPoly left = Y->mul(Y->mul(a, b), c);
    NCPoly right = Y->mul(a, Y->mul(b, c));
    REQUIRE(left == right);
    if (!left.is_zero()) ++nontrivial;
  }
  CHECK(nontrivial > 500);
}

TEST_CASE("oracle corrections strictly decrease (loop degree, length)") {
  const AlgebraCtx* Y3 = AlgebraCtx::yangian(3);
  for (int i = 1; i <= 3; ++i)
    for (int j = 1; j <= 3; ++j)
      for (int k = 1; k <= 3; ++k)
        for (int l = 1; l <= 3; ++l)
          for (int r = 1; r <= 4; ++r)
            for (int s = 1; s <= 4; ++s) {
              long total = (r - 1) + (s - 1);
              NCPoly comm = yangian_commutator(Y3, i, j, r, k, l, s);
              for (auto& [w, c] : comm.terms()) {
                long d = Y3->loop_degree(w);
                bool strictly_below = d < total || (d == total && w.size() < 2);
                REQUIRE(strictly_below);
              }
            }
}

TEST_CASE("enveloping algebra straightening") {
  auto gl2 = make_gl(2);
  const AlgebraCtx* U = AlgebraCtx::enveloping(gl2);
  auto e = [&](int i, int j) { return U->gen(lie_sym((i - 1) * 2 + (j - 1))); };
  // e21 e12 = e12 e21 - e11 + e22 under the (i,j)-ascending basis order.
  CHECK(U->mul(e(2, 1), e(1, 2)) ==
        U->monomial({lie_sym(1), lie_sym(2)}) - e(1, 1) + e(2, 2));
  CHECK(lie_jacobi_ok(*gl2));
  CHECK(lie_jacobi_ok(*make_gl(3)));
  CHECK(lie_jacobi_ok(*make_current_gl(2, 4)));
}

TEST_CASE("tensor contexts: slots commute, injections are canonical") {
  auto gl1 = make_gl(1);
  const AlgebraCtx* U1 = AlgebraCtx::enveloping(gl1);
  const AlgebraCtx* T = AlgebraCtx::tensor({Y2, U1});

  CHECK(tensor_inject(Y2->one(), 0, T) == T->one());
  NCPoly a = tensor_inject(tgen(Y2, 1, 1, 1), 0, T);
  CHECK(a.size() == 1);
  CHECK(sym_slot(a.terms()[0].first[0]) == 0);

  NCPoly b = tensor_inject(U1->gen(lie_sym(0)), 1, T);
  // slot-1 * slot-0 sorts to slot-0 * slot-1 with no correction
  CHECK(T->mul(b, a) == T->mul(a, b));
  CHECK(T->mul(b, a).size() == 1);
  CHECK_THROWS(tensor_inject(tgen(Y2, 1, 1, 1), 1, T));
  CHECK_THROWS(tensor_inject(tgen(Y2, 1, 1, 1), 5, T));
}

TEST_CASE("context mismatch is an error") {
  const AlgebraCtx* Y3 = AlgebraCtx::yangian(3);
  CHECK_THROWS(Y2->normal_form(Y3->gen(t_sym(3, 3, 1))));
  NCPoly a = Y2->gen(t_sym(1, 1, 1));
  NCPoly b = Y3->gen(t_sym(1, 1, 1));
  CHECK_THROWS(a + b);
}
