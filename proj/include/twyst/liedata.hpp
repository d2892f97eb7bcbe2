#pragma once

// Structure-constant Lie algebras: gl_n, the symmetric-pair fixed points
// g_N (orthogonal/symplectic f-basis), and z-truncated current algebras.
// Brackets are sparse maps; the current-algebra variants drop brackets whose
// z-degree reaches the ceiling (a nilpotent quotient), which keeps every
// degree-local check exact.

#include "rational.hpp"

#include <functional>
#include <map>
#include <memory>
#include <string>
#include <utility>
#include <vector>

namespace twyst {

struct LieData {
  std::string name;
  std::vector<std::string> labels;
  // z-degree (or 0 for plain algebras), used by loop-degree bookkeeping.
  std::vector<int> degree;
  // bracket[(a,b)] = [x_a, x_b] as sparse {basis -> coeff}; stored for a > b,
  // the rest follows by antisymmetry.
  std::map<std::pair<int, int>, std::vector<std::pair<int, Rational>>> bracket;

  int dim() const { return static_cast<int>(labels.size()); }

  std::vector<std::pair<int, Rational>> comm(int a, int b) const {
    if (a == b) return {};
    bool flip = a < b;
    auto it = bracket.find(flip ? std::make_pair(b, a) : std::make_pair(a, b));
    if (it == bracket.end()) return {};
    auto out = it->second;
    if (flip)
      for (auto& t : out) t.second = -t.second;
    return out;
  }
};

namespace liedetail {

// Accumulates a bracket table from a dense [x_a,x_b] evaluator given on a < b.
inline void fill_brackets(LieData& L,
                          const std::function<std::vector<std::pair<int, Rational>>(int, int)>& f) {
  for (int a = 1; a < L.dim(); ++a)
    for (int b = 0; b < a; ++b) {
      auto terms = f(a, b);
      std::map<int, Rational> acc;
      for (auto& [k, c] : terms) acc[k] += c;
      std::vector<std::pair<int, Rational>> out;
      for (auto& [k, c] : acc)
        if (!is_zero(c)) out.emplace_back(k, c);
      if (!out.empty()) L.bracket[{a, b}] = std::move(out);
    }
}

}  // namespace liedetail

// gl_n with basis e_{ij}, index (i-1)*n + (j-1).
inline std::shared_ptr<LieData> make_gl(int n) {
  auto L = std::make_shared<LieData>();
  L->name = "gl" + std::to_string(n);
  auto idx = [n](int i, int j) { return (i - 1) * n + (j - 1); };
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) {
      L->labels.push_back("e[" + std::to_string(i) + "," + std::to_string(j) + "]");
      L->degree.push_back(0);
    }
  liedetail::fill_brackets(*L, [&](int a, int b) {
    int i = a / n + 1, j = a % n + 1, k = b / n + 1, l = b % n + 1;
    std::vector<std::pair<int, Rational>> out;
    if (j == k) out.emplace_back(idx(i, l), Rational(1));
    if (l == i) out.emplace_back(idx(k, j), Rational(-1));
    return out;
  });
  return L;
}

// gl_n[z] truncated at z-degree < zcap; basis e_{ij} z^r, index
// r*n^2 + (i-1)*n + (j-1). Brackets landing at degree >= zcap are dropped.
inline std::shared_ptr<LieData> make_current_gl(int n, int zcap) {
  auto L = std::make_shared<LieData>();
  L->name = "gl" + std::to_string(n) + "[z]<" + std::to_string(zcap);
  auto idx = [n](int i, int j, int r) { return r * n * n + (i - 1) * n + (j - 1); };
  for (int r = 0; r < zcap; ++r)
    for (int i = 1; i <= n; ++i)
      for (int j = 1; j <= n; ++j) {
        L->labels.push_back("e[" + std::to_string(i) + "," + std::to_string(j) + "]z^" +
                            std::to_string(r));
        L->degree.push_back(r);
      }
  liedetail::fill_brackets(*L, [&](int a, int b) {
    int n2 = n * n;
    int ra = a / n2, rb = b / n2;
    int i = (a % n2) / n + 1, j = (a % n2) % n + 1;
    int k = (b % n2) / n + 1, l = (b % n2) % n + 1;
    std::vector<std::pair<int, Rational>> out;
    if (ra + rb < zcap) {
      if (j == k) out.emplace_back(idx(i, l, ra + rb), Rational(1));
      if (l == i) out.emplace_back(idx(k, j, ra + rb), Rational(-1));
    }
    return out;
  });
  return L;
}

// Antisymmetry is structural here (only a>b stored); Jacobi is the real check.
inline bool lie_jacobi_ok(const LieData& L) {
  int n = L.dim();
  auto ad = [&](int a, const std::vector<std::pair<int, Rational>>& v) {
    std::map<int, Rational> acc;
    for (auto& [b, c] : v)
      for (auto& [k, d] : L.comm(a, b)) acc[k] += c * d;
    return acc;
  };
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < a; ++b)
      for (int c = 0; c < b; ++c) {
        std::map<int, Rational> total;
        auto add = [&](const std::map<int, Rational>& m) {
          for (auto& [k, v] : m) total[k] += v;
        };
        add(ad(a, L.comm(b, c)));
        add(ad(b, L.comm(c, a)));
        add(ad(c, L.comm(a, b)));
        for (auto& [k, v] : total)
          if (!is_zero(v)) return false;
      }
  return true;
}

}  // namespace twyst
