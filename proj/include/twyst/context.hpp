#pragma once

// PBW contexts and the straightening engine.
//
// A context supplies a total generator order (the raw symbol order, see
// symbol.hpp) and a commutation oracle [g,h] for g > h. normal_form rewrites
// every word until it is non-decreasing; each rewrite either swaps one
// descent (no correction) or replaces it by lower terms, and the corrections
// strictly decrease (loop degree, word length) lexicographically, so the
// loop terminates. Free families are never reordered.

#include "liedata.hpp"
#include "poly.hpp"

#include <memory>
#include <mutex>
#include <shared_mutex>
#include <string>
#include <unordered_map>
#include <vector>

namespace twyst {

class AlgebraCtx {
 public:
  enum class Kind { Yangian, Enveloping, Tensor, Free };

  static const AlgebraCtx* yangian(int N);
  static const AlgebraCtx* enveloping(std::shared_ptr<const LieData> lie);
  static const AlgebraCtx* tensor(std::vector<const AlgebraCtx*> slots);
  // Free algebra on s/parabolic symbols; `name` keeps ctx ids distinct.
  static const AlgebraCtx* free_algebra(const std::string& name);

  Kind kind() const { return kind_; }
  int yangian_n() const { return n_; }
  const LieData* lie() const { return lie_.get(); }
  const std::vector<const AlgebraCtx*>& slots() const { return slots_; }
  const std::string& id() const { return id_; }

  bool contains(Sym s) const;
  void require(Sym s) const {
    if (!contains(s)) throw std::invalid_argument("context mismatch: foreign symbol " +
                                                  sym_to_string(s) + " in " + id_);
  }

  // Loop degree: r-1 per level-r generator, z-degree for current-algebra
  // basis elements, 0 for plain Lie elements.
  long loop_degree(Sym s) const;
  long loop_degree(const Word& w) const {
    long d = 0;
    for (Sym s : w) d += loop_degree(s);
    return d;
  }
  long loop_degree(const NCPoly& p) const {
    long d = -1;
    for (auto& [w, c] : p.terms()) d = std::max(d, loop_degree(w));
    return d;
  }

  // Canonical degree: r per level-r generator, 1 per Lie element.
  long canonical_degree(Sym s) const;
  long canonical_degree(const Word& w) const {
    long d = 0;
    for (Sym s : w) d += canonical_degree(s);
    return d;
  }
  long canonical_degree(const NCPoly& p) const {
    long d = p.is_zero() ? -1 : 0;
    for (auto& [w, c] : p.terms()) d = std::max(d, canonical_degree(w));
    return d;
  }

  bool is_descent(Sym left, Sym right) const;

  // [left, right] for a descent pair; memoized.
  const NCPoly& commutator_oracle(Sym left, Sym right) const;

  NCPoly normal_form(const NCPoly& p) const;
  NCPoly mul(const NCPoly& p, const NCPoly& q) const;
  NCPoly commutator(const NCPoly& p, const NCPoly& q) const { return mul(p, q) - mul(q, p); }

  NCPoly zero() const { return NCPoly(this); }
  NCPoly one() const { return NCPoly(this, Rational(1)); }
  NCPoly monomial(const Word& w, Rational c = Rational(1)) const {
    for (Sym s : w) require(s);
    return NCPoly(this, w, std::move(c));
  }
  NCPoly gen(Sym s, Rational c = Rational(1)) const { return monomial(Word{s}, std::move(c)); }

 private:
  AlgebraCtx() = default;
  NCPoly raw_commutator(Sym left, Sym right) const;

  Kind kind_ = Kind::Free;
  int n_ = 0;
  std::shared_ptr<const LieData> lie_;
  std::vector<const AlgebraCtx*> slots_;
  std::string id_;

  mutable std::shared_mutex memo_mutex_;
  mutable std::unordered_map<std::uint64_t, std::unique_ptr<NCPoly>> memo_;
};

// The closed-form Yangian commutator
//   [t_ij^(r), t_kl^(s)] = sum_{a=0}^{min(r,s)-1}
//       ( t_kj^(a) t_il^(r+s-1-a) - t_kj^(r+s-1-a) t_il^(a) ),
// with t^(0) resolved to delta at construction time.
inline NCPoly yangian_commutator(const AlgebraCtx* ctx, int i, int j, int r, int k, int l, int s) {
  if (ctx->kind() != AlgebraCtx::Kind::Yangian)
    throw std::invalid_argument("yangian_commutator: not a Yangian context");
  int N = ctx->yangian_n();
  if (i < 1 || j < 1 || k < 1 || l < 1 || i > N || j > N || k > N || l > N || r < 0 || s < 0)
    throw std::invalid_argument("yangian_commutator: index out of range");
  NCPoly out(ctx);
  auto term = [&](int kj_level, int il_level, Rational c) {
    // t_kj^(a) t_il^(b) with t^(0) = delta.
    Word w;
    if (kj_level == 0) {
      if (k != j) return;
    } else {
      w.push_back(t_sym(k, j, kj_level));
    }
    if (il_level == 0) {
      if (i != l) return;
    } else {
      w.push_back(t_sym(i, l, il_level));
    }
    out += NCPoly(ctx, w, std::move(c));
  };
  for (int a = 0; a < std::min(r, s); ++a) {
    term(a, r + s - 1 - a, Rational(1));
    term(r + s - 1 - a, a, Rational(-1));
  }
  return out;
}

inline bool AlgebraCtx::contains(Sym s) const {
  switch (kind_) {
    case Kind::Yangian: {
      if (sym_family(s) != Family::T || sym_slot(s) != 0) return false;
      auto [i, j, r] = t_index(s);
      return i >= 1 && i <= n_ && j >= 1 && j <= n_ && r >= 1;
    }
    case Kind::Enveloping:
      return sym_family(s) == Family::Lie && sym_slot(s) == 0 && lie_index(s) < lie_->dim();
    case Kind::Tensor: {
      int sl = sym_slot(s);
      if (sl < 0 || sl >= static_cast<int>(slots_.size())) return false;
      return slots_[sl]->contains(with_slot(s, 0));
    }
    case Kind::Free:
      return sym_is_free(s) && sym_slot(s) == 0;
  }
  return false;
}

inline long AlgebraCtx::loop_degree(Sym s) const {
  switch (sym_family(s)) {
    case Family::T:
    case Family::SGen:
      return t_index(s).r - 1;
    case Family::PGen:
      return p_index(s).r - 1;
    case Family::Lie: {
      if (kind_ == Kind::Tensor) return slots_[sym_slot(s)]->loop_degree(with_slot(s, 0));
      return lie_ ? lie_->degree[lie_index(s)] : 0;
    }
  }
  return 0;
}

inline long AlgebraCtx::canonical_degree(Sym s) const {
  switch (sym_family(s)) {
    case Family::T:
    case Family::SGen:
      return t_index(s).r;
    case Family::PGen:
      return p_index(s).r;
    case Family::Lie:
      return 1;
  }
  return 0;
}

inline bool AlgebraCtx::is_descent(Sym left, Sym right) const {
  int sl = sym_slot(left), sr = sym_slot(right);
  if (sl != sr) return sl > sr;
  if (sym_is_free(left) || sym_is_free(right)) return false;
  return left > right;
}

inline NCPoly AlgebraCtx::raw_commutator(Sym left, Sym right) const {
  switch (kind_) {
    case Kind::Yangian: {
      auto a = t_index(left);
      auto b = t_index(right);
      return yangian_commutator(this, a.i, a.j, a.r, b.i, b.j, b.r);
    }
    case Kind::Enveloping: {
      NCPoly out(this);
      for (auto& [k, c] : lie_->comm(lie_index(left), lie_index(right)))
        out += NCPoly(this, Word{lie_sym(k)}, c);
      return out;
    }
    case Kind::Tensor: {
      int sl = sym_slot(left);
      if (sl != sym_slot(right)) return NCPoly(this);  // distinct slots commute
      NCPoly inner = slots_[sl]->commutator_oracle(with_slot(left, 0), with_slot(right, 0));
      NCPoly out(this);
      for (auto& [w, c] : inner.terms()) {
        Word lifted;
        lifted.reserve(w.size());
        for (Sym s : w) lifted.push_back(with_slot(s, sl));
        out += NCPoly(this, lifted, c);
      }
      return out;
    }
    case Kind::Free:
      throw std::logic_error("free symbols never commute past each other");
  }
  return NCPoly(this);
}

inline const NCPoly& AlgebraCtx::commutator_oracle(Sym left, Sym right) const {
  std::uint64_t key = (left * 0x9e3779b97f4a7c15ULL) ^ right ^ (right << 1);
  {
    std::shared_lock lock(memo_mutex_);
    auto it = memo_.find(key);
    if (it != memo_.end()) return *it->second;
  }
  auto value = std::make_unique<NCPoly>(raw_commutator(left, right));
  std::unique_lock lock(memo_mutex_);
  auto [it, inserted] = memo_.emplace(key, std::move(value));
  return *it->second;
}

namespace ctxdetail {

// Pending straightening work: coefficient plus a safe lower bound for the
// first possible descent position (everything left of it is sorted).
struct Pending {
  Rational coeff;
  std::size_t hint = 0;
};

using PendingMap = std::unordered_map<Word, Pending, WordHash>;

}  // namespace ctxdetail

inline NCPoly straighten_pending(const AlgebraCtx* ctx, ctxdetail::PendingMap&& todo) {
  std::unordered_map<Word, Rational, WordHash> done;
  auto push = [&todo](Word&& w, Rational c, std::size_t hint) {
    auto it = todo.find(w);
    if (it == todo.end()) {
      todo.emplace(std::move(w), ctxdetail::Pending{std::move(c), hint});
    } else {
      it->second.coeff += c;
      it->second.hint = std::min(it->second.hint, hint);
    }
  };
  while (!todo.empty()) {
    auto node = todo.begin();
    Word w = node->first;
    ctxdetail::Pending pend = std::move(node->second);
    todo.erase(node);
    if (is_zero(pend.coeff)) continue;
    std::size_t pos = pend.hint;
    while (pos + 1 < w.size() && !ctx->is_descent(w[pos], w[pos + 1])) ++pos;
    if (pos + 1 >= w.size()) {
      auto [it, inserted] = done.try_emplace(w, pend.coeff);
      if (!inserted) it->second += pend.coeff;
      continue;
    }
    std::size_t resume = pos ? pos - 1 : 0;
    const NCPoly& corr = ctx->commutator_oracle(w[pos], w[pos + 1]);
    for (auto& [cw, cc] : corr.terms()) {
      Word replaced;
      replaced.reserve(w.size() - 2 + cw.size());
      replaced.insert(replaced.end(), w.begin(), w.begin() + pos);
      replaced.insert(replaced.end(), cw.begin(), cw.end());
      replaced.insert(replaced.end(), w.begin() + pos + 2, w.end());
      push(std::move(replaced), pend.coeff * cc, resume);
    }
    std::swap(w[pos], w[pos + 1]);
    push(std::move(w), std::move(pend.coeff), resume);
  }
  return NCPoly::from_map(ctx, std::move(done));
}

inline NCPoly AlgebraCtx::normal_form(const NCPoly& p) const {
  for (auto& [w, c] : p.terms())
    for (Sym s : w) require(s);
  ctxdetail::PendingMap todo;
  for (auto& [w, c] : p.terms()) {
    auto [it, inserted] = todo.try_emplace(w, ctxdetail::Pending{c, 0});
    if (!inserted) it->second.coeff += c;
  }
  return straighten_pending(this, std::move(todo));
}

inline NCPoly AlgebraCtx::mul(const NCPoly& p, const NCPoly& q) const {
  if (p.ctx() != this || q.ctx() != this) throw std::invalid_argument("mul: context mismatch");
  ctxdetail::PendingMap todo;
  for (auto& [wp, cp] : p.terms())
    for (auto& [wq, cq] : q.terms()) {
      Word w;
      w.reserve(wp.size() + wq.size());
      w.insert(w.end(), wp.begin(), wp.end());
      w.insert(w.end(), wq.begin(), wq.end());
      // hints must be sound (no descent left of them); factors are not
      // guaranteed normal here, so seed conservatively
      auto [it, inserted] = todo.try_emplace(std::move(w), ctxdetail::Pending{cp * cq, 0});
      if (!inserted) it->second.coeff += cp * cq;
    }
  return straighten_pending(this, std::move(todo));
}

namespace ctxdetail {

struct Registry {
  std::mutex mutex;
  std::vector<std::unique_ptr<AlgebraCtx>> owned;
  std::unordered_map<std::string, const AlgebraCtx*> by_id;
};

inline Registry& registry() {
  static Registry r;
  return r;
}

}  // namespace ctxdetail

// Contexts are interned by id so that pointer equality is context equality.
inline const AlgebraCtx* AlgebraCtx::yangian(int N) {
  auto& reg = ctxdetail::registry();
  std::string id = "Y(gl" + std::to_string(N) + ")";
  std::lock_guard lock(reg.mutex);
  auto it = reg.by_id.find(id);
  if (it != reg.by_id.end()) return it->second;
  auto ctx = std::unique_ptr<AlgebraCtx>(new AlgebraCtx());
  ctx->kind_ = Kind::Yangian;
  ctx->n_ = N;
  ctx->id_ = id;
  const AlgebraCtx* out = ctx.get();
  reg.owned.push_back(std::move(ctx));
  reg.by_id[id] = out;
  return out;
}

inline const AlgebraCtx* AlgebraCtx::enveloping(std::shared_ptr<const LieData> lie) {
  auto& reg = ctxdetail::registry();
  std::string id = "U(" + lie->name + ")";
  std::lock_guard lock(reg.mutex);
  auto it = reg.by_id.find(id);
  if (it != reg.by_id.end()) return it->second;
  auto ctx = std::unique_ptr<AlgebraCtx>(new AlgebraCtx());
  ctx->kind_ = Kind::Enveloping;
  ctx->lie_ = std::move(lie);
  ctx->id_ = id;
  const AlgebraCtx* out = ctx.get();
  reg.owned.push_back(std::move(ctx));
  reg.by_id[id] = out;
  return out;
}

inline const AlgebraCtx* AlgebraCtx::tensor(std::vector<const AlgebraCtx*> slots) {
  auto& reg = ctxdetail::registry();
  std::string id = "tensor(";
  for (std::size_t k = 0; k < slots.size(); ++k) id += (k ? "," : "") + slots[k]->id();
  id += ")";
  std::lock_guard lock(reg.mutex);
  auto it = reg.by_id.find(id);
  if (it != reg.by_id.end()) return it->second;
  auto ctx = std::unique_ptr<AlgebraCtx>(new AlgebraCtx());
  ctx->kind_ = Kind::Tensor;
  ctx->slots_ = std::move(slots);
  ctx->id_ = id;
  const AlgebraCtx* out = ctx.get();
  reg.owned.push_back(std::move(ctx));
  reg.by_id[id] = out;
  return out;
}

inline const AlgebraCtx* AlgebraCtx::free_algebra(const std::string& name) {
  auto& reg = ctxdetail::registry();
  std::string id = "free(" + name + ")";
  std::lock_guard lock(reg.mutex);
  auto it = reg.by_id.find(id);
  if (it != reg.by_id.end()) return it->second;
  auto ctx = std::unique_ptr<AlgebraCtx>(new AlgebraCtx());
  ctx->kind_ = Kind::Free;
  ctx->id_ = id;
  const AlgebraCtx* out = ctx.get();
  reg.owned.push_back(std::move(ctx));
  reg.by_id[id] = out;
  return out;
}

inline const AlgebraCtx* ctx_by_id(const std::string& id) {
  auto& reg = ctxdetail::registry();
  std::lock_guard lock(reg.mutex);
  auto it = reg.by_id.find(id);
  return it == reg.by_id.end() ? nullptr : it->second;
}

// Canonical factor inclusion into a tensor context.
inline NCPoly tensor_inject(const NCPoly& p, int slot, const AlgebraCtx* tensor_ctx) {
  if (tensor_ctx->kind() != AlgebraCtx::Kind::Tensor)
    throw std::invalid_argument("tensor_inject: target is not a tensor context");
  if (slot < 0 || slot >= static_cast<int>(tensor_ctx->slots().size()))
    throw std::invalid_argument("tensor_inject: bad slot");
  if (p.ctx() != tensor_ctx->slots()[slot])
    throw std::invalid_argument("tensor_inject: polynomial not in the slot's factor context");
  NCPoly out(tensor_ctx);
  for (auto& [w, c] : p.terms()) {
    Word lifted;
    lifted.reserve(w.size());
    for (Sym s : w) lifted.push_back(with_slot(s, slot));
    out += NCPoly(tensor_ctx, lifted, c);
  }
  return out;
}

}  // namespace twyst
