#pragma once

// Shift matrices, pyramids, admissible shapes, shifted/truncated contexts,
// PBW generator inventories and truncation-ideal generators.

#include "relations.hpp"

#include <algorithm>
#include <optional>
#include <random>

namespace twyst {

struct ShiftViolation {
  std::string kind;  // "symmetry" | "diagonal" | "additivity" | "negative"
  int i, j, k;
};

struct ShiftMatrix {
  int N = 0;
  std::vector<int> entries;  // row-major N x N

  ShiftMatrix() = default;
  explicit ShiftMatrix(int n) : N(n), entries(n * n, 0) {}

  static ShiftMatrix zero(int n) { return ShiftMatrix(n); }

  int& at(int i, int j) { return entries[(i - 1) * N + (j - 1)]; }
  int at(int i, int j) const { return entries[(i - 1) * N + (j - 1)]; }

  bool is_zero() const {
    for (int x : entries)
      if (x) return false;
    return true;
  }
  bool operator==(const ShiftMatrix& o) const { return N == o.N && entries == o.entries; }

  // Builds the full matrix from superdiagonal values via additivity.
  static ShiftMatrix from_superdiagonal(const std::vector<int>& super) {
    ShiftMatrix s(static_cast<int>(super.size()) + 1);
    for (int i = 1; i <= s.N; ++i)
      for (int j = i + 1; j <= s.N; ++j) {
        int acc = 0;
        for (int c = i; c < j; ++c) acc += super[c - 1];
        s.at(i, j) = s.at(j, i) = acc;
      }
    return s;
  }

  std::optional<ShiftViolation> validate() const {
    for (int i = 1; i <= N; ++i) {
      if (at(i, i) != 0) return ShiftViolation{"diagonal", i, i, 0};
      for (int j = 1; j <= N; ++j) {
        if (at(i, j) < 0) return ShiftViolation{"negative", i, j, 0};
        if (at(i, j) != at(j, i)) return ShiftViolation{"symmetry", i, j, 0};
      }
    }
    // additivity s_ij + s_jk = s_ik whenever |i-j| + |j-k| = |i-k|
    for (int i = 1; i <= N; ++i)
      for (int j = 1; j <= N; ++j)
        for (int k = 1; k <= N; ++k)
          if (std::abs(i - j) + std::abs(j - k) == std::abs(i - k) &&
              at(i, j) + at(j, k) != at(i, k))
            return ShiftViolation{"additivity", i, j, k};
    return std::nullopt;
  }
};

struct Pyramid {
  std::vector<int> rows;  // p_1 <= ... <= p_N, top to bottom

  int height() const { return static_cast<int>(rows.size()); }
  int level() const { return rows.empty() ? 0 : rows.back(); }
  int boxes() const {
    int m = 0;
    for (int p : rows) m += p;
    return m;
  }
  bool same_parity() const {
    for (int p : rows)
      if ((p - rows[0]) % 2) return false;
    return true;
  }
  // column heights left to right
  std::vector<int> columns() const {
    int l = level();
    std::vector<int> q(l, 0);
    for (int p : rows) {
      int pad = (l - p) / 2;
      for (int c = pad; c < pad + p; ++c) ++q[c];
    }
    return q;
  }
};

inline Pyramid sigma_to_pyramid(const ShiftMatrix& s, int level) {
  if (auto v = s.validate()) throw std::invalid_argument("sigma_to_pyramid: invalid shift matrix");
  if (level <= 2 * s.at(1, s.N)) throw std::invalid_argument("sigma_to_pyramid: level too small");
  Pyramid p;
  for (int i = 1; i <= s.N; ++i) p.rows.push_back(level - 2 * s.at(i, s.N));
  return p;
}

inline std::pair<ShiftMatrix, int> pyramid_to_sigma(const Pyramid& p) {
  int N = p.height(), level = p.level();
  if (!p.same_parity()) throw std::invalid_argument("pyramid_to_sigma: mixed row parity");
  for (int i = 1; i < N; ++i)
    if (p.rows[i - 1] > p.rows[i]) throw std::invalid_argument("pyramid_to_sigma: rows not sorted");
  ShiftMatrix s(N);
  std::vector<int> toN(N + 1, 0);
  for (int i = 1; i <= N; ++i) toN[i] = (level - p.rows[i - 1]) / 2;
  // additivity: s_ij = |s_iN - s_jN| since all shifts point toward row N
  for (int i = 1; i <= N; ++i)
    for (int j = 1; j <= N; ++j) s.at(i, j) = std::abs(toN[i] - toN[j]);
  if (auto v = s.validate())
    throw std::invalid_argument("pyramid_to_sigma: rows violate additivity");
  return {s, level};
}

enum class PartitionKind { Orthogonal, Symplectic };
enum class ClassicalFamily { SO, SP };

struct WTypeInfo {
  SignType sign;
  ClassicalFamily family;
  int M;
};

// Multiplicity rule: orthogonal partitions have even parts with even
// multiplicity, symplectic ones have odd parts with even multiplicity; on
// top of that every part must share one parity.
inline WTypeInfo classify_w_type(const Pyramid& p, PartitionKind kind) {
  if (!p.same_parity()) throw std::invalid_argument("classify_w_type: parity assumption violated");
  std::map<int, int> mult;
  for (int x : p.rows) ++mult[x];
  for (auto& [part, m] : mult) {
    bool constrained = (kind == PartitionKind::Orthogonal) ? (part % 2 == 0) : (part % 2 == 1);
    if (constrained && m % 2)
      throw std::invalid_argument("classify_w_type: multiplicity rule violated");
  }
  bool level_even = p.level() % 2 == 0;
  WTypeInfo info;
  info.M = p.boxes();
  if (kind == PartitionKind::Orthogonal) {
    info.family = ClassicalFamily::SO;
    info.sign = level_even ? SignType::AII : SignType::AI;
  } else {
    info.family = ClassicalFamily::SP;
    info.sign = level_even ? SignType::AI : SignType::AII;
  }
  return info;
}

// ---------------------------------------------------------------------------
// Admissible shapes.

inline bool shape_admissible(const ShiftMatrix& s, const Shape& mu) {
  if (mu.N() != s.N) return false;
  for (int a = 1; a <= mu.n(); ++a)
    for (int i = mu.sum(a - 1) + 1; i <= mu.sum(a); ++i)
      for (int j = mu.sum(a - 1) + 1; j <= mu.sum(a); ++j)
        if (s.at(i, j) != 0) return false;
  return true;
}

// Coarsest composition whose diagonal blocks are sigma-zero.
inline Shape minimal_shape(const ShiftMatrix& s) {
  std::vector<int> parts;
  int start = 1;
  for (int i = 1; i < s.N; ++i) {
    if (s.at(i, i + 1) != 0) {
      parts.push_back(i - start + 1);
      start = i + 1;
    }
  }
  parts.push_back(s.N - start + 1);
  Shape mu(parts);
  if (!shape_admissible(s, mu))
    throw std::invalid_argument("minimal_shape: shift matrix violates additivity");
  return mu;
}

inline std::vector<Shape> admissible_shapes(const ShiftMatrix& s, int max_len,
                                            bool even_parts_only = false) {
  std::vector<Shape> out;
  int N = s.N;
  std::vector<int> parts;
  std::function<void(int)> rec = [&](int rest) {
    if (rest == 0) {
      Shape mu(parts);
      if (static_cast<int>(parts.size()) <= max_len && shape_admissible(s, mu) &&
          (!even_parts_only || mu.all_even()))
        out.push_back(mu);
      return;
    }
    for (int next = 1; next <= rest; ++next) {
      parts.push_back(next);
      rec(rest - next);
      parts.pop_back();
    }
  };
  rec(N);
  return out;
}

// The lowered shift matrix: decrement entries crossing the last block
// boundary N - mu_n of the minimal admissible shape.
inline ShiftMatrix dot_sigma(const ShiftMatrix& s) {
  if (s.is_zero()) throw std::invalid_argument("dot_sigma: sigma must be nonzero");
  Shape mu = minimal_shape(s);
  int boundary = s.N - mu.part(mu.n());
  ShiftMatrix out = s;
  for (int i = 1; i <= s.N; ++i)
    for (int j = 1; j <= s.N; ++j)
      if ((i <= boundary && boundary < j) || (j <= boundary && boundary < i)) --out.at(i, j);
  return out;
}

// ---------------------------------------------------------------------------
// Shifted and truncated contexts.

struct ShiftedCtx {
  TwistedCtx tctx;
  ShiftMatrix sigma;
  Shape mu;

  ShiftedCtx(const TwistedCtx& t, ShiftMatrix s, Shape shape)
      : tctx(t), sigma(std::move(s)), mu(std::move(shape)) {
    if (sigma.N != t.N) throw std::invalid_argument("ShiftedCtx: size mismatch");
    if (auto v = sigma.validate()) throw std::invalid_argument("ShiftedCtx: invalid shift matrix");
    require_shape(t, mu);
    if (!shape_admissible(sigma, mu))
      throw std::invalid_argument("ShiftedCtx: shape not admissible for sigma");
  }

  BlockShifts block_shifts() const {
    BlockShifts b;
    for (int a = 1; a < mu.n(); ++a)
      b.adjacent.push_back(sigma.at(mu.sum(a), mu.sum(a) + 1));
    return b;
  }
  int sab(int a, int b) const { return sigma.at(mu.sum(a), mu.sum(b)); }
};

struct TruncatedCtx {
  ShiftedCtx sctx;
  int level;

  TruncatedCtx(ShiftedCtx s, int l) : sctx(std::move(s)), level(l) {
    if (level <= 2 * sctx.sigma.at(1, sctx.sigma.N))
      throw std::invalid_argument("TruncatedCtx: level too small");
  }

  int p_row(int i) const { return level - 2 * sctx.sigma.at(i, sctx.sigma.N); }
  int p_block(int a) const { return p_row(sctx.mu.sum(a)); }
  Pyramid pyramid() const { return sigma_to_pyramid(sctx.sigma, level); }
  int boxes() const { return pyramid().boxes(); }
};

// ---------------------------------------------------------------------------
// PBW inventories: the generator sets whose ordered monomials form bases.

struct GenEntry {
  Sym sym;
  std::string label;
};

// Shifted algebra: the full inventory has unbounded levels; level_cap bounds
// the listing. Truncated: the exact finite inventory.
inline std::vector<GenEntry> pbw_generators(const ShiftedCtx& s, int level_cap,
                                            const int* trunc_level = nullptr) {
  const Shape& mu = s.mu;
  const TwistedCtx& t = s.tctx;
  std::vector<GenEntry> out;
  auto pa = [&](int a) {
    return trunc_level ? *trunc_level - 2 * s.sigma.at(mu.sum(a), s.sigma.N) : level_cap;
  };
  auto add = [&](Sym sym) { out.push_back({sym, sym_to_string(sym)}); };

  for (int a = 1; a <= mu.n(); ++a) {
    int top = std::min(level_cap, pa(a));
    if (t.sign == SignType::AI) {
      for (int i = 1; i <= mu.part(a); ++i)
        for (int r = 2; r <= top; r += 2) add(h_sym(a, i, i, r));
      for (int i = 1; i <= mu.part(a); ++i)
        for (int j = 1; j < i; ++j)
          for (int r = 1; r <= top; ++r) add(h_sym(a, i, j, r));
    } else {
      for (int i = 1; 2 * i <= mu.part(a); ++i) {
        for (int r = 1; r <= top; ++r) add(h_sym(a, 2 * i - 1, 2 * i - 1, r));
        for (int r = 1; r <= top; r += 2) {
          add(h_sym(a, 2 * i - 1, 2 * i, r));
          add(h_sym(a, 2 * i, 2 * i - 1, r));
        }
      }
      for (int i = 1; i <= mu.part(a); ++i)
        for (int j = 1; j < i; ++j) {
          if ((i + 1) / 2 == (j + 1) / 2) continue;
          for (int r = 1; r <= top; ++r) add(h_sym(a, i, j, r));
        }
    }
  }
  for (int a = 1; a < mu.n(); ++a)
    for (int b = a + 1; b <= mu.n(); ++b) {
      int lo = s.sab(a, b);
      int hi = trunc_level ? lo + pa(a) : level_cap;
      hi = std::min(hi, level_cap);
      for (int i = 1; i <= mu.part(b); ++i)
        for (int j = 1; j <= mu.part(a); ++j)
          for (int r = lo + 1; r <= hi; ++r) add(bba_sym(b, a, i, j, r));
    }
  return out;
}

inline std::vector<GenEntry> truncated_pbw_generators(const TruncatedCtx& tr) {
  return pbw_generators(tr.sctx, tr.level + 2 * tr.sctx.sigma.at(1, tr.sctx.sigma.N),
                        &tr.level);
}

// Independent count for the truncated inventory: dim g^e from the partition,
//   dim gl^e = sum_{i,j} min(p_i, p_j),
//   dim so^e = (dim gl^e - #odd rows)/2,  dim sp^e = (dim gl^e + #odd rows)/2.
inline long centralizer_dimension(const Pyramid& p, ClassicalFamily fam) {
  long gl = 0;
  for (int a : p.rows)
    for (int b : p.rows) gl += std::min(a, b);
  long odd = 0;
  for (int a : p.rows) odd += a % 2;
  return (fam == ClassicalFamily::SO) ? (gl - odd) / 2 : (gl + odd) / 2;
}

// ---------------------------------------------------------------------------
// Truncation-ideal generators, as formal parabolic polynomials over the
// minimal admissible shape, up to the level ceiling.

// The extra generator for AI, level even, mu_1 = 1: the u^{-k} coefficient
// of Bring_{1;i,1}(u + 1/2) H_{1;1,1}(u), where Bring(u) = sum_{r>0}
// B^{(r + s_{1,2})} u^{-r}.
inline NCPoly pfaffian_window_element(const FormalParabolic& fp, int s12, int i, int k) {
  NCPoly out = fp.ctx->zero();
  for (int t = 0; t <= k - 1; ++t) {
    // coefficient of u^{-(k-t)} in Bring(u + 1/2)
    int rr = k - t;
    for (int r = 1; r <= rr; ++r) {
      Rational w = (r == rr) ? Rational(1)
                             : binomial(rr - 1, rr - r) * rat_pow(rat(-1, 2), rr - r);
      if (is_zero(w)) continue;
      out += w * fp.ctx->mul(fp.B(1, i, 1, r + s12), fp.H(1, 1, 1, t));
    }
  }
  return out;
}

inline std::vector<std::pair<std::string, NCPoly>> truncation_ideal_generators(
    const TruncatedCtx& tr, int level_ceiling) {
  const Shape& mu = tr.sctx.mu;
  const TwistedCtx& t = tr.sctx.tctx;
  if (!(minimal_shape(tr.sctx.sigma) == mu))
    throw std::invalid_argument("truncation_ideal_generators: shape must be minimal admissible");
  FormalParabolic fp(t, mu);
  int p1 = tr.p_block(1);
  bool odd = tr.level % 2;
  std::vector<std::pair<std::string, NCPoly>> out;
  auto name = [&](const std::string& base, int i, int j, int r) {
    return base + "[1;" + std::to_string(i) + "," + std::to_string(j) + ";" +
           std::to_string(r) + "]";
  };
  if (t.sign == SignType::AI) {
    if (odd) {
      for (int i = 1; i <= mu.part(1); ++i)
        for (int j = 1; j <= mu.part(1); ++j)
          for (int r = p1 + 1; r <= level_ceiling; ++r)
            out.emplace_back(name("H+H/2 ", i, j, r),
                             fp.H(1, i, j, r) + rat(1, 2) * fp.H(1, i, j, r - 1));
    } else if (mu.part(1) >= 2) {
      for (int i = 1; i <= mu.part(1); ++i)
        for (int j = 1; j <= mu.part(1); ++j)
          for (int r = p1 + 1; r <= level_ceiling; ++r)
            out.emplace_back(name("H ", i, j, r), fp.H(1, i, j, r));
    } else {
      for (int r = p1 + 1; r <= level_ceiling; ++r)
        out.emplace_back(name("H ", 1, 1, r), fp.H(1, 1, 1, r));
      int s12 = mu.n() >= 2 ? tr.sctx.sab(1, 2) : 0;
      for (int i = 1; mu.n() >= 2 && i <= mu.part(2); ++i)
        out.emplace_back("Btilde[1;" + std::to_string(i) + ",1;" + std::to_string(s12) + ";" +
                             std::to_string(p1 + 1) + "]",
                         pfaffian_window_element(fp, s12, i, p1 + 1));
    }
  } else {
    for (int i = 1; i <= mu.part(1); ++i)
      for (int j = 1; j <= mu.part(1); ++j)
        for (int r = p1 + 1; r <= level_ceiling; ++r) {
          if (!odd)
            out.emplace_back(name("H ", i, j, r), fp.H(1, i, j, r));
          else
            out.emplace_back(name("H-H/2 ", i, j, r),
                             fp.H(1, i, j, r) - rat(1, 2) * fp.H(1, i, j, r - 1));
        }
  }
  return out;
}

}  // namespace twyst
