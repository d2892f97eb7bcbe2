#pragma once

// The relation library of the parabolic presentations.
//
// Every relation instance is a pair of formal polynomials in parabolic
// generators (Z expanded through its defining sum). Instances are verified
// by pushing both sides through an image table: into Y(gl_N) for the
// presentation suites, or into Y(gl_N) (x) U(gl_t) for the comultiplication
// suites. Index schemas and side conditions follow the presentation
// theorems; enumerator output is empty for vacuous families, which the
// runner reports as skipped, never passed.

#include "parabolic.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace twyst {

using Assignment = std::map<std::string, int>;

struct RelPair {
  NCPoly lhs, rhs;
};

// Adjacent block shifts s_{a+1,a}(mu) (all zero for the plain twisted
// Yangian); s_{a,b}(mu) follows by additivity.
struct BlockShifts {
  std::vector<int> adjacent;  // adjacent[a-1] = s_{a+1,a}(mu), a = 1..n-1

  static BlockShifts zero(const Shape& mu) {
    return BlockShifts{std::vector<int>(std::max(0, mu.n() - 1), 0)};
  }
  int sab(int a, int b) const {
    if (a > b) std::swap(a, b);
    int s = 0;
    for (int c = a; c < b; ++c) s += adjacent[c - 1];
    return s;
  }
  bool is_zero() const {
    for (int x : adjacent)
      if (x) return false;
    return true;
  }
};

class RelationLibrary {
 public:
  RelationLibrary(const TwistedCtx& t, const Shape& mu, BlockShifts shifts)
      : fp_(t, mu), shifts_(std::move(shifts)) {
    if (static_cast<int>(shifts_.adjacent.size()) != std::max(0, mu.n() - 1))
      throw std::invalid_argument("RelationLibrary: shift vector does not match shape");
  }
  RelationLibrary(const TwistedCtx& t, const Shape& mu)
      : RelationLibrary(t, mu, BlockShifts::zero(mu)) {}

  const FormalParabolic& formal() const { return fp_; }
  const Shape& shape() const { return fp_.mu; }
  const TwistedCtx& tctx() const { return fp_.t; }
  const BlockShifts& shifts() const { return shifts_; }

  // Lowest missing B-level for the adjacent pair (a+1, a).
  int low_b(int a) const { return shifts_.adjacent[a - 1]; }

  // Formal relation families handled by build():
  //   pr1 pr2 pr3 pr4 pr5 pr6 pr7 pr-1 pr-2 pr-1-indep pr-1-2-better
  //   Zs Za2 Zshifted Zshifteda2 drs1 drs2 drs3 drs4 drs5
  RelPair build(const std::string& rel, const Assignment& as) const;

  std::vector<Assignment> enumerate(const std::string& rel, int bound, int serre_bound) const;

  // Largest generator level referenced by instances at these bounds (for
  // sizing the realization cutoff).
  static int cutoff_needed(int bound, int serre_bound) {
    return std::max(bound + 2, serre_bound + 3);
  }

 private:
  int th(int i) const { return block_theta(fp_.t, i); }
  int pr(int i) const { return block_prime(fp_.t, i); }
  int at(const Assignment& as, const char* key) const {
    auto it = as.find(key);
    if (it == as.end()) throw std::invalid_argument(std::string("missing index ") + key);
    return it->second;
  }

  RelPair pr1(const Assignment&) const;
  RelPair pr2(const Assignment&) const;
  RelPair pr3(const Assignment&) const;
  RelPair pr4(const Assignment&) const;
  RelPair pr5(const Assignment&) const;
  RelPair pr6(const Assignment&) const;
  RelPair pr7(const Assignment&) const;
  RelPair serre1(const Assignment&) const;
  RelPair serre2(const Assignment&) const;
  RelPair serre1_indep(const Assignment&) const;
  RelPair serre_finite(const Assignment&) const;
  RelPair zs(const Assignment&) const;
  RelPair za2(const Assignment&) const;
  RelPair zshifted(const Assignment&) const;
  RelPair zshifteda2(const Assignment&) const;
  RelPair drs(const std::string& rel, const Assignment&) const;

  // Drinfeld images over mu = (1^N).
  NCPoly drs_h(int i, int r) const;  // h_{i,r}; h_{i,-1} = 1
  NCPoly drs_b(int j, int r) const;  // b_{j,r}
  int cartan(int i, int j) const;

  FormalParabolic fp_;
  BlockShifts shifts_;
};

// ---------------------------------------------------------------------------

inline RelPair RelationLibrary::pr1(const Assignment& as) const {
  int lev = at(as, "r");  // odd level
  NCPoly lhs = fp_.H(1, 1, 1, lev) + fp_.H(1, pr(1), pr(1), lev);
  return {lhs, fp_.ctx->zero()};
}

inline RelPair RelationLibrary::pr2(const Assignment& as) const {
  int a = at(as, "a"), i = at(as, "i"), j = at(as, "j"), r = at(as, "r");
  NCPoly lhs = fp_.ctx->zero();
  for (int p = 1; p <= fp_.mu.part(a); ++p)
    for (int t = 0; t <= r; ++t) lhs += fp_.ctx->mul(fp_.H(a, i, p, t), fp_.Ht(a, p, j, r - t));
  NCPoly rhs = (r == 0) ? fp_.delta(i, j) : fp_.ctx->zero();
  return {lhs, rhs};
}

inline RelPair RelationLibrary::pr3(const Assignment& as) const {
  int a = at(as, "a"), b = at(as, "b"), i = at(as, "i"), j = at(as, "j"), k = at(as, "k"),
      l = at(as, "l"), r = at(as, "r"), s = at(as, "s");
  NCPoly lhs = fp_.comm(fp_.H(a, i, j, r), fp_.H(b, k, l, s));
  NCPoly rhs = fp_.ctx->zero();
  if (a == b) {
    for (int t = 0; t <= r - 1; ++t) {
      rhs += fp_.ctx->mul(fp_.H(a, k, j, r - 1 - t), fp_.H(a, i, l, s + t));
      rhs -= fp_.ctx->mul(fp_.H(a, k, j, s + t), fp_.H(a, i, l, r - 1 - t));
      Rational sg = (t % 2) ? rat(-1) : rat(1);
      rhs -= sg * rat(th(k) * th(pr(j))) *
             fp_.ctx->mul(fp_.H(a, i, pr(k), r - 1 - t), fp_.H(a, pr(j), l, s + t));
      rhs += sg * rat(th(i) * th(pr(l))) *
             fp_.ctx->mul(fp_.H(a, k, pr(i), s + t), fp_.H(a, pr(l), j, r - 1 - t));
    }
    for (int t = 0; t <= r / 2 - 1; ++t) {
      rhs += rat(th(i) * th(pr(j))) *
             (fp_.ctx->mul(fp_.H(a, k, pr(i), r - 2 - 2 * t), fp_.H(a, pr(j), l, s + 2 * t)) -
              fp_.ctx->mul(fp_.H(a, k, pr(i), s + 2 * t), fp_.H(a, pr(j), l, r - 2 - 2 * t)));
    }
  }
  return {lhs, rhs};
}

inline RelPair RelationLibrary::pr4(const Assignment& as) const {
  int a = at(as, "a"), b = at(as, "b"), i = at(as, "i"), j = at(as, "j"), k = at(as, "k"),
      l = at(as, "l"), r = at(as, "r"), s = at(as, "s");
  NCPoly lhs = fp_.comm(fp_.H(a, i, j, r), fp_.B(b, k, l, s));
  NCPoly rhs = fp_.ctx->zero();
  Rational half_mu = rat(fp_.mu.part(a), 2);
  if (a == b) {
    for (int p = 1; p <= fp_.mu.part(a); ++p)
      for (int m = 0; m <= r - 1; ++m)
        for (int t = 0; t <= m; ++t) {
          Rational base = binomial(m, t) * rat_pow(half_mu, m - t);
          if (j == pr(l)) {
            Rational c = ((m % 2) ? rat(-1) : rat(1)) * rat(th(pr(l)) * th(p)) * base;
            rhs += c * fp_.ctx->mul(fp_.H(a, i, p, r - m - 1), fp_.B(a, k, pr(p), s + t));
          }
          if (i == l) {
            Rational c = (((m - t) % 2) ? rat(-1) : rat(1)) * base;
            rhs -= c * fp_.ctx->mul(fp_.B(a, k, p, s + t), fp_.H(a, p, j, r - m - 1));
          }
        }
  }
  if (a == b + 1) {
    for (int m = 0; m <= r - 1; ++m) {
      Rational c = ((m % 2) ? rat(1) : rat(-1)) * rat(th(pr(j)) * th(k));
      rhs += c * fp_.ctx->mul(fp_.H(a, i, pr(k), r - 1 - m), fp_.B(b, pr(j), l, s + m));
      rhs += fp_.ctx->mul(fp_.B(b, i, l, s + m), fp_.H(a, k, j, r - 1 - m));
    }
  }
  return {lhs, rhs};
}

inline RelPair RelationLibrary::pr5(const Assignment& as) const {
  int a = at(as, "a"), b = at(as, "b"), i = at(as, "i"), j = at(as, "j"), k = at(as, "k"),
      l = at(as, "l"), r = at(as, "r"), s = at(as, "s");
  NCPoly lhs = fp_.comm(fp_.B(a, i, j, r), fp_.B(b, k, l, s));
  return {lhs, fp_.ctx->zero()};
}

inline RelPair RelationLibrary::pr6(const Assignment& as) const {
  int a = at(as, "a"), i = at(as, "i"), j = at(as, "j"), k = at(as, "k"), l = at(as, "l"),
      r = at(as, "r"), s = at(as, "s");
  NCPoly lhs = fp_.comm(fp_.B(a, i, j, r), fp_.B(a, k, l, s));
  NCPoly rhs = fp_.ctx->zero();
  // The t < min(r,s) parts of the two sums cancel; starting at min(r,s)
  // keeps every referenced B-level above the shift window.
  for (int t = std::min(r, s); t <= r - 1; ++t)
    rhs += fp_.ctx->mul(fp_.B(a, k, j, r + s - 1 - t), fp_.B(a, i, l, t));
  for (int t = std::min(r, s); t <= s - 1; ++t)
    rhs -= fp_.ctx->mul(fp_.B(a, k, j, r + s - 1 - t), fp_.B(a, i, l, t));
  Rational c = ((r % 2) ? rat(1) : rat(-1)) * rat(th(i) * th(j));
  rhs += c * fp_.Z(a, pr(j), l, k, pr(i), r + s - 1);
  return {lhs, rhs};
}

inline RelPair RelationLibrary::pr7(const Assignment& as) const {
  int a = at(as, "a"), i = at(as, "i"), j = at(as, "j"), k = at(as, "k"), l = at(as, "l"),
      r = at(as, "r"), s = at(as, "s");
  NCPoly lhs = fp_.comm(fp_.B(a, i, j, r + 1), fp_.B(a + 1, k, l, s));
  NCPoly rhs = fp_.comm(fp_.B(a, i, j, r), fp_.B(a + 1, k, l, s + 1)) +
               rat(fp_.mu.part(a + 1), 2) * fp_.comm(fp_.B(a, i, j, r), fp_.B(a + 1, k, l, s));
  if (i == l)
    for (int q = 1; q <= fp_.mu.part(a + 1); ++q)
      rhs -= fp_.ctx->mul(fp_.B(a, q, j, r), fp_.B(a + 1, k, q, s));
  return {lhs, rhs};
}

inline RelPair RelationLibrary::serre1(const Assignment& as) const {
  int a = at(as, "a"), i = at(as, "i"), j = at(as, "j"), k = at(as, "k"), l = at(as, "l"),
      f = at(as, "f"), g = at(as, "g"), s = at(as, "s"), r1 = at(as, "r1"), r2 = at(as, "r2");
  NCPoly lhs =
      fp_.comm(fp_.comm(fp_.B(a, i, j, s), fp_.B(a + 1, k, l, r1)), fp_.B(a + 1, f, g, r2)) +
      fp_.comm(fp_.comm(fp_.B(a, i, j, s), fp_.B(a + 1, k, l, r2)), fp_.B(a + 1, f, g, r1));
  NCPoly rhs = fp_.ctx->zero();
  long parity = ((r1 % 2) ? -1 : 1) + ((r2 % 2) ? -1 : 1);
  if (parity != 0) {
    if (fp_.mu.part(a + 1) > 1) {
      if (i == l) {
        Rational c = rat(parity) * rat(th(k) * th(l));
        rhs = c * fp_.comm(fp_.Z(a + 1, pr(l), g, f, pr(k), r1 + r2 - 1), fp_.B(a, i, j, s));
      }
    } else {
      for (int p = 1; p <= r1 + r2 - 1; ++p)
        for (int m = 0; m <= r1 + r2 - 1 - p; ++m) {
          Rational c = rat(parity) * ((p % 2) ? rat(1) : rat(-1)) * rat_pow(rat(1, 2), m) *
                       binomial(p + m - 1, m);
          rhs += c * fp_.ctx->mul(fp_.B(a, i, j, p + s - 1),
                                  fp_.Z(a + 1, l, l, f, k, r1 + r2 - 1 - p - m));
        }
    }
  }
  return {lhs, rhs};
}

inline RelPair RelationLibrary::serre2(const Assignment& as) const {
  int a = at(as, "a"), i = at(as, "i"), j = at(as, "j"), k = at(as, "k"), l = at(as, "l"),
      f = at(as, "f"), g = at(as, "g"), s = at(as, "s"), r1 = at(as, "r1"), r2 = at(as, "r2");
  NCPoly lhs =
      fp_.comm(fp_.comm(fp_.B(a + 1, i, j, s), fp_.B(a, k, l, r1)), fp_.B(a, f, g, r2)) +
      fp_.comm(fp_.comm(fp_.B(a + 1, i, j, s), fp_.B(a, k, l, r2)), fp_.B(a, f, g, r1));
  NCPoly rhs = fp_.ctx->zero();
  long parity = ((r1 % 2) ? -1 : 1) + ((r2 % 2) ? -1 : 1);
  if (parity != 0) {
    if (fp_.mu.part(a + 1) > 1) {
      if (j == k) {
        Rational c = rat(parity) * rat(th(k) * th(l));
        rhs = c * fp_.comm(fp_.Z(a, pr(l), g, f, pr(k), r1 + r2 - 1), fp_.B(a + 1, i, j, s));
      }
    } else {
      for (int p = 1; p <= r1 + r2 - 1; ++p)
        for (int m = 0; m <= r1 + r2 - 1 - p; ++m) {
          Rational c = rat(parity) * ((m % 2) ? rat(-1) : rat(1)) * rat_pow(rat(1, 2), m) *
                       binomial(p + m - 1, m);
          rhs += c * fp_.ctx->mul(fp_.B(a + 1, i, j, p + s - 1),
                                  fp_.Z(a, g, l, j, j, r1 + r2 - 1 - p - m));
        }
    }
  }
  return {lhs, rhs};
}

// LHS-only equality across index choices with matching delta_{il}; the
// right-hand block index schema mirrors serre1.
inline RelPair RelationLibrary::serre1_indep(const Assignment& as) const {
  Assignment first = as, second = as;
  first["i"] = at(as, "i");
  first["l"] = at(as, "l");
  second["i"] = at(as, "i2");
  second["l"] = at(as, "l2");
  return {serre1(first).lhs, serre1(second).lhs};
}

inline RelPair RelationLibrary::serre_finite(const Assignment& as) const {
  int a = at(as, "a"), i = at(as, "i"), j = at(as, "j"), k = at(as, "k"), l = at(as, "l"),
      f = at(as, "f"), g = at(as, "g"), variant = at(as, "variant");
  if (variant == 1) {
    NCPoly lhs =
        fp_.comm(fp_.comm(fp_.B(a + 1, i, j, 1), fp_.B(a, k, l, 1)), fp_.B(a, f, g, 1));
    NCPoly rhs = fp_.ctx->zero();
    if (j == k && pr(g) == l)
      rhs = rat(-th(f) * th(g)) * fp_.B(a + 1, i, pr(f), 1);
    return {lhs, rhs};
  }
  NCPoly lhs = fp_.comm(fp_.comm(fp_.B(a, i, j, 1), fp_.B(a + 1, k, l, 1)), fp_.B(a + 1, f, g, 1));
  NCPoly rhs = fp_.ctx->zero();
  if (i == l && pr(f) == k)
    rhs = rat(-th(f) * th(g)) * fp_.B(a, pr(g), j, 1);
  return {lhs, rhs};
}

inline RelPair RelationLibrary::zs(const Assignment& as) const {
  int a = at(as, "a"), i = at(as, "i"), j = at(as, "j"), lev = at(as, "r");
  return {fp_.Z(a, i, i, j, j, lev), fp_.ctx->zero()};
}

inline RelPair RelationLibrary::za2(const Assignment& as) const {
  int a = at(as, "a"), i = at(as, "i"), j = at(as, "j"), k = at(as, "k"), l = at(as, "l"),
      lev = at(as, "r");
  NCPoly lhs = rat(th(i) * th(j)) * fp_.Z(a, pr(j), l, k, pr(i), lev) +
               rat(th(k) * th(l)) * fp_.Z(a, pr(l), j, i, pr(k), lev);
  return {lhs, fp_.ctx->zero()};
}

inline RelPair RelationLibrary::zshifted(const Assignment& as) const { return zs(as); }

inline RelPair RelationLibrary::zshifteda2(const Assignment& as) const {
  int a = at(as, "a"), i = at(as, "i"), j = at(as, "j"), lev = at(as, "r");
  NCPoly lhs = fp_.Z(a, i, i, j, j, lev) + fp_.Z(a, pr(i), pr(i), pr(j), pr(j), lev);
  return {lhs, fp_.ctx->zero()};
}

// ---------------------------------------------------------------------------
// Drinfeld presentation images over mu = (1^N), type AI.

inline NCPoly RelationLibrary::drs_h(int i, int r) const {
  if (r == -1) return fp_.ctx->one();
  if (r < -1) return fp_.ctx->zero();
  if (i == 0) return fp_.H(1, 1, 1, r + 1);
  return fp_.Z(i, 1, 1, 1, 1, r + 1);
}

inline NCPoly RelationLibrary::drs_b(int j, int r) const { return fp_.B(j, 1, 1, r + 1); }

inline int RelationLibrary::cartan(int i, int j) const {
  if (i == 0) return j == 1 ? -1 : 0;
  if (j == 0) return i == 1 ? -1 : 0;
  if (i == j) return 2;
  return std::abs(i - j) == 1 ? -1 : 0;
}

inline RelPair RelationLibrary::drs(const std::string& rel, const Assignment& as) const {
  if (fp_.t.sign != SignType::AI || fp_.mu.part(1) != 1 || fp_.mu.n() != fp_.t.N)
    throw std::invalid_argument("drs relations require the AI (1^N) presentation");
  const AlgebraCtx* C = fp_.ctx;
  if (rel == "drs1") {
    if (as.count("even")) return {drs_h(at(as, "i"), at(as, "r")), C->zero()};
    return {fp_.comm(drs_h(at(as, "i"), at(as, "r")), drs_h(at(as, "j"), at(as, "s"))),
            C->zero()};
  }
  if (rel == "drs2") {
    int i = at(as, "i"), j = at(as, "j"), r = at(as, "r"), s = at(as, "s");
    int c = cartan(i, j);
    NCPoly lhs = fp_.comm(drs_h(i, r + 1), drs_b(j, s)) -
                 fp_.comm(drs_h(i, r - 1), drs_b(j, s + 2));
    NCPoly rhs = rat(c) * fp_.anti(drs_h(i, r - 1), drs_b(j, s + 1)) +
                 rat(c * c, 4) * fp_.comm(drs_h(i, r - 1), drs_b(j, s));
    return {lhs, rhs};
  }
  if (rel == "drs3") {
    int i = at(as, "i"), j = at(as, "j"), r = at(as, "r"), s = at(as, "s");
    int c = cartan(i, j);
    NCPoly lhs = fp_.comm(drs_b(i, r + 1), drs_b(j, s)) - fp_.comm(drs_b(i, r), drs_b(j, s + 1));
    NCPoly rhs = rat(c, 2) * fp_.anti(drs_b(i, r), drs_b(j, s));
    if (i == j) rhs -= rat((r % 2) ? -2 : 2) * drs_h(i, r + s + 1);
    return {lhs, rhs};
  }
  if (rel == "drs4") {
    return {fp_.comm(drs_b(at(as, "i"), at(as, "r")), drs_b(at(as, "j"), at(as, "s"))),
            C->zero()};
  }
  if (rel == "drs5") {
    int i = at(as, "i"), j = at(as, "j"), k1 = at(as, "k1"), k2 = at(as, "k2"), r = at(as, "r");
    NCPoly lhs = fp_.comm(drs_b(i, k1), fp_.comm(drs_b(i, k2), drs_b(j, r))) +
                 fp_.comm(drs_b(i, k2), fp_.comm(drs_b(i, k1), drs_b(j, r)));
    NCPoly rhs = C->zero();
    for (int p = 0; k1 + k2 - 2 * p - 1 >= -1; ++p) {
      Rational c = ((k1 % 2) ? rat(-1) : rat(1)) * rat_pow(rat(1, 4), p);
      rhs += c * (fp_.comm(drs_h(i, k1 + k2 - 2 * p - 1), drs_b(j, r + 1)) -
                  fp_.anti(drs_h(i, k1 + k2 - 2 * p - 1), drs_b(j, r)));
    }
    return {lhs, rhs};
  }
  throw std::invalid_argument("unknown drs relation: " + rel);
}

inline RelPair RelationLibrary::build(const std::string& rel, const Assignment& as) const {
  if (rel == "pr1") return pr1(as);
  if (rel == "pr2") return pr2(as);
  if (rel == "pr3") return pr3(as);
  if (rel == "pr4") return pr4(as);
  if (rel == "pr5") return pr5(as);
  if (rel == "pr6") return pr6(as);
  if (rel == "pr7") return pr7(as);
  if (rel == "pr-1") return serre1(as);
  if (rel == "pr-2") return serre2(as);
  if (rel == "pr-1-indep") return serre1_indep(as);
  if (rel == "pr-1-2-better") return serre_finite(as);
  if (rel == "Zs") return zs(as);
  if (rel == "Za2") return za2(as);
  if (rel == "Zshifted") return zshifted(as);
  if (rel == "Zshifteda2") return zshifteda2(as);
  if (rel.rfind("drs", 0) == 0) return drs(rel, as);
  throw std::invalid_argument("unknown relation: " + rel);
}

inline std::vector<Assignment> RelationLibrary::enumerate(const std::string& rel, int bound,
                                                          int serre_bound) const {
  const Shape& mu = fp_.mu;
  int n = mu.n();
  std::vector<Assignment> out;
  auto push = [&](Assignment a) { out.push_back(std::move(a)); };

  if (rel == "pr1") {
    for (int lev = 1; lev <= bound; lev += 2) push({{"r", lev}});
  } else if (rel == "pr2") {
    for (int a = 1; a <= n; ++a)
      for (int i = 1; i <= mu.part(a); ++i)
        for (int j = 1; j <= mu.part(a); ++j)
          for (int r = 0; r <= bound; ++r) push({{"a", a}, {"i", i}, {"j", j}, {"r", r}});
  } else if (rel == "pr3") {
    for (int a = 1; a <= n; ++a)
      for (int b = 1; b <= n; ++b)
        for (int i = 1; i <= mu.part(a); ++i)
          for (int j = 1; j <= mu.part(a); ++j)
            for (int k = 1; k <= mu.part(b); ++k)
              for (int l = 1; l <= mu.part(b); ++l)
                for (int r = 0; r <= bound; ++r)
                  for (int s = (r == 0 ? 1 : 0); r + s <= bound; ++s)
                    push({{"a", a}, {"b", b}, {"i", i}, {"j", j}, {"k", k}, {"l", l},
                          {"r", r}, {"s", s}});
  } else if (rel == "pr4") {
    for (int a = 1; a <= n; ++a)
      for (int b = 1; b < n; ++b)
        for (int i = 1; i <= mu.part(a); ++i)
          for (int j = 1; j <= mu.part(a); ++j)
            for (int k = 1; k <= mu.part(b + 1); ++k)
              for (int l = 1; l <= mu.part(b); ++l)
                for (int r = 1; r <= bound; ++r)
                  for (int s = low_b(b) + 1; r + s <= bound; ++s)
                    push({{"a", a}, {"b", b}, {"i", i}, {"j", j}, {"k", k}, {"l", l},
                          {"r", r}, {"s", s}});
  } else if (rel == "pr5") {
    for (int a = 1; a < n; ++a)
      for (int b = 1; b < n; ++b) {
        bool far = std::abs(a - b) > 1;
        bool adjacent = (b == a + 1);
        if (!far && !adjacent) continue;
        for (int i = 1; i <= mu.part(a + 1); ++i)
          for (int j = 1; j <= mu.part(a); ++j)
            for (int k = 1; k <= mu.part(b + 1); ++k)
              for (int l = 1; l <= mu.part(b); ++l) {
                if (adjacent && i == l) continue;
                for (int r = low_b(a) + 1; r <= bound; ++r)
                  for (int s = low_b(b) + 1; r + s <= bound; ++s)
                    push({{"a", a}, {"b", b}, {"i", i}, {"j", j}, {"k", k}, {"l", l},
                          {"r", r}, {"s", s}});
              }
      }
  } else if (rel == "pr6") {
    for (int a = 1; a < n; ++a)
      for (int i = 1; i <= mu.part(a + 1); ++i)
        for (int j = 1; j <= mu.part(a); ++j)
          for (int k = 1; k <= mu.part(a + 1); ++k)
            for (int l = 1; l <= mu.part(a); ++l)
              for (int r = low_b(a) + 1; r <= bound; ++r)
                for (int s = low_b(a) + 1; r + s <= bound; ++s)
                  push({{"a", a}, {"i", i}, {"j", j}, {"k", k}, {"l", l}, {"r", r}, {"s", s}});
  } else if (rel == "pr7") {
    for (int a = 1; a + 1 < n; ++a)
      for (int i = 1; i <= mu.part(a + 1); ++i)
        for (int j = 1; j <= mu.part(a); ++j)
          for (int k = 1; k <= mu.part(a + 2); ++k)
            for (int l = 1; l <= mu.part(a + 1); ++l)
              for (int r = low_b(a) + 1; r + 1 <= bound; ++r)
                for (int s = low_b(a + 1) + 1; r + 1 + s <= bound; ++s)
                  push({{"a", a}, {"i", i}, {"j", j}, {"k", k}, {"l", l}, {"r", r}, {"s", s}});
  } else if (rel == "pr-1" || rel == "pr-2") {
    bool first = (rel == "pr-1");
    for (int a = 1; a + 1 < n; ++a) {
      int lowq = first ? low_b(a) : low_b(a + 1);
      int lowr = first ? low_b(a + 1) : low_b(a);
      for (int s = lowq + 1; s <= serre_bound - 2 * (lowr + 1); ++s)
        for (int r1 = lowr + 1; s + 2 * r1 <= serre_bound; ++r1)
          for (int r2 = r1; s + r1 + r2 <= serre_bound; ++r2) {
            // index ranges: pr-1 has B_a;i,j, B_{a+1};k,l, B_{a+1};f,g
            //               pr-2 has B_{a+1};i,j, B_a;k,l, B_a;f,g
            int ri = first ? mu.part(a + 1) : mu.part(a + 2);
            int rj = first ? mu.part(a) : mu.part(a + 1);
            int rk = first ? mu.part(a + 2) : mu.part(a + 1);
            int rl = first ? mu.part(a + 1) : mu.part(a);
            for (int i = 1; i <= ri; ++i)
              for (int j = 1; j <= rj; ++j)
                for (int k = 1; k <= rk; ++k)
                  for (int l = 1; l <= rl; ++l)
                    for (int f = 1; f <= rk; ++f)
                      for (int g = 1; g <= rl; ++g) {
                        // side conditions of the presentation theorem
                        if (first && mu.part(a + 1) > 1 && i == g) continue;
                        if (!first && mu.part(a + 1) > 1 && j == f) continue;
                        push({{"a", a}, {"i", i}, {"j", j}, {"k", k}, {"l", l}, {"f", f},
                              {"g", g}, {"s", s}, {"r1", r1}, {"r2", r2}});
                      }
          }
    }
  } else if (rel == "pr-1-indep") {
    for (int a = 1; a + 1 < n; ++a) {
      if (mu.part(a + 1) < 3) continue;  // needs two i-choices distinct from g
      for (int s = low_b(a) + 1; s <= 2; ++s)
        for (int r1 = low_b(a + 1) + 1; r1 <= 2; ++r1)
          for (int r2 = r1; s + r1 + r2 <= serre_bound; ++r2)
            for (int g = 1; g <= mu.part(a + 1); ++g)
              for (int i = 1; i <= mu.part(a + 1); ++i)
                for (int i2 = i + 1; i2 <= mu.part(a + 1); ++i2) {
                  if (i == g || i2 == g) continue;
                  // delta_{il} = 1 pair and a delta = 0 pair
                  push({{"a", a}, {"i", i}, {"l", i}, {"i2", i2}, {"l2", i2}, {"j", 1},
                        {"k", 1}, {"f", 1}, {"g", g}, {"s", s}, {"r1", r1}, {"r2", r2}});
                  int l = (i % mu.part(a + 1)) + 1, l2 = (i2 % mu.part(a + 1)) + 1;
                  if (l != i && l2 != i2 && !(l == i2 && l2 == i))
                    push({{"a", a}, {"i", i}, {"l", l}, {"i2", i2}, {"l2", l2}, {"j", 1},
                          {"k", 1}, {"f", 1}, {"g", g}, {"s", s}, {"r1", r1}, {"r2", r2}});
                }
    }
  } else if (rel == "pr-1-2-better") {
    if (shifts_.is_zero())
      for (int variant = 1; variant <= 2; ++variant)
        for (int a = 1; a + 1 < n; ++a) {
          int ri = variant == 1 ? mu.part(a + 2) : mu.part(a + 1);
          int rj = variant == 1 ? mu.part(a + 1) : mu.part(a);
          int rk = variant == 1 ? mu.part(a + 1) : mu.part(a + 2);
          int rl = variant == 1 ? mu.part(a) : mu.part(a + 1);
          for (int i = 1; i <= ri; ++i)
            for (int j = 1; j <= rj; ++j)
              for (int k = 1; k <= rk; ++k)
                for (int l = 1; l <= rl; ++l)
                  for (int f = 1; f <= rk; ++f)
                    for (int g = 1; g <= rl; ++g)
                      push({{"a", a}, {"i", i}, {"j", j}, {"k", k}, {"l", l}, {"f", f},
                            {"g", g}, {"variant", variant}});
        }
  } else if (rel == "Zs" || rel == "Zshifted") {
    if (fp_.t.sign == SignType::AI)
      for (int a = 1; a < n; ++a) {
        int top = (rel == "Zshifted") ? 2 * low_b(a) - 1 : bound;
        for (int lev = 1; lev <= top; lev += 2)
          for (int i = 1; i <= mu.part(a); ++i)
            for (int j = 1; j <= mu.part(a + 1); ++j)
              push({{"a", a}, {"i", i}, {"j", j}, {"r", lev}});
      }
  } else if (rel == "Za2") {
    if (fp_.t.sign == SignType::AII)
      for (int a = 1; a < n; ++a)
        for (int lev = 1; lev <= bound; lev += 2)
          for (int i = 1; i <= mu.part(a + 1); ++i)
            for (int j = 1; j <= mu.part(a); ++j)
              for (int k = 1; k <= mu.part(a + 1); ++k)
                for (int l = 1; l <= mu.part(a); ++l)
                  push({{"a", a}, {"i", i}, {"j", j}, {"k", k}, {"l", l}, {"r", lev}});
  } else if (rel == "Zshifteda2") {
    if (fp_.t.sign == SignType::AII)
      for (int a = 1; a < n; ++a) {
        int top = shifts_.is_zero() ? bound : 2 * low_b(a) - 1;
        for (int lev = 1; lev <= top; lev += 2)
          for (int i = 1; i <= mu.part(a); ++i)
            for (int j = 1; j <= mu.part(a + 1); ++j)
              push({{"a", a}, {"i", i}, {"j", j}, {"r", lev}});
      }
  } else if (rel == "drs1") {
    for (int i = 0; i < n; ++i) {
      for (int r = 0; r <= bound; r += 2) push({{"i", i}, {"r", r}, {"even", 1}});
      for (int j = 0; j < n; ++j)
        for (int r = 0; r <= bound; ++r)
          for (int s = 0; s <= bound; ++s) push({{"i", i}, {"j", j}, {"r", r}, {"s", s}});
    }
  } else if (rel == "drs2") {
    for (int i = 0; i < n; ++i)
      for (int j = 1; j < n; ++j)
        for (int r = 0; r <= bound; ++r)
          for (int s = low_b(j); s <= bound; ++s)
            push({{"i", i}, {"j", j}, {"r", r}, {"s", s}});
  } else if (rel == "drs3") {
    for (int i = 1; i < n; ++i)
      for (int j = 1; j < n; ++j)
        for (int r = low_b(i); r <= bound; ++r)
          for (int s = low_b(j); s <= bound; ++s) {
            if (i == j && r + 1 <= low_b(i)) continue;
            push({{"i", i}, {"j", j}, {"r", r}, {"s", s}});
          }
  } else if (rel == "drs4") {
    for (int i = 1; i < n; ++i)
      for (int j = 1; j < n; ++j) {
        if (std::abs(i - j) <= 1) continue;
        for (int r = low_b(i); r <= bound; ++r)
          for (int s = low_b(j); s <= bound; ++s)
            push({{"i", i}, {"j", j}, {"r", r}, {"s", s}});
      }
  } else if (rel == "drs5") {
    for (int i = 1; i < n; ++i)
      for (int j = 1; j < n; ++j) {
        if (cartan(i, j) != -1 || j == 0) continue;
        for (int k1 = low_b(i); k1 <= bound; ++k1)
          for (int k2 = k1; k2 <= bound; ++k2)
            for (int r = low_b(j); r <= bound; ++r)
              push({{"i", i}, {"j", j}, {"k1", k1}, {"k2", k2}, {"r", r}});
      }
  } else {
    throw std::invalid_argument("unknown relation: " + rel);
  }
  return out;
}

}  // namespace twyst
