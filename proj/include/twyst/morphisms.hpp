#pragma once

// Evaluation maps, the counit, the baby comultiplication (both the shifted
// generator form and the sigma = 0 form on s-generators), the level-2
// evaluation, and the composite Miura transform.
//
// Morphisms act on formal polynomials through image tables. A Miura chain
// keeps its first tensor factor formal between steps (so the next step can
// re-map generators) and only realizes it at the final evaluation.

#include "maps.hpp"
#include "shifted.hpp"

#include <functional>

namespace twyst {

// ---------------------------------------------------------------------------
// Plain evaluation maps.

// pi_n: t_ij^(r) -> delta_{1r} e_ij, Yangian words into U(gl_n).
class PiImages : public SymbolImages {
 public:
  explicit PiImages(int n)
      : SymbolImages(AlgebraCtx::enveloping(make_gl(n))), n_(n) {}

 protected:
  NCPoly compute(Sym s) const override {
    auto [i, j, r] = t_index(s);
    if (r != 1) return target()->zero();
    return target()->gen(lie_sym((i - 1) * n_ + (j - 1)));
  }

 private:
  int n_;
};

inline NCPoly evaluation_pi(const NCPoly& p, int n) {
  PiImages img(n);
  return eval_formal(p, img);
}

// f_ij = e_ij - theta_i theta_j e_j'i' inside U(gl_N).
inline NCPoly f_element(const TwistedCtx& t, const AlgebraCtx* U, int i, int j) {
  auto e = [&](int a, int b) { return U->gen(lie_sym((a - 1) * t.N + (b - 1))); };
  return e(i, j) - rat(t.theta(i) * t.theta(j)) * e(t.prime(j), t.prime(i));
}

// xi: s_ij^(r) -> (-1/2)^{r-1} f_ij, the evaluation onto U(g_N).
class XiImages : public SymbolImages {
 public:
  explicit XiImages(const TwistedCtx& t)
      : SymbolImages(AlgebraCtx::enveloping(make_gl(t.N))), t_(t) {}

 protected:
  NCPoly compute(Sym s) const override {
    auto [i, j, r] = t_index(s);
    return rat_pow(rat(-1, 2), r - 1) * f_element(t_, target(), i, j);
  }

 private:
  TwistedCtx t_;
};

// ev2 = pi_N after the embedding:
//   s_ij^(r) -> sum_a theta_a theta_i sum_{p+q=r, p,q<=1} (-1)^p
//               pi(t_{a'i'}^(p)) pi(t_{aj}^(q)).
class Ev2Images : public SymbolImages {
 public:
  explicit Ev2Images(const TwistedCtx& t)
      : SymbolImages(AlgebraCtx::enveloping(make_gl(t.N))), t_(t) {}

 protected:
  NCPoly compute(Sym s) const override {
    auto [i, j, r] = t_index(s);
    const AlgebraCtx* U = target();
    auto e = [&](int a, int b) { return U->gen(lie_sym((a - 1) * t_.N + (b - 1))); };
    if (r == 1) return f_element(t_, U, i, j);
    if (r == 2) {
      NCPoly out = U->zero();
      for (int a = 1; a <= t_.N; ++a)
        out -= rat(t_.theta(a) * t_.theta(i)) *
               U->mul(e(t_.prime(a), t_.prime(i)), e(a, j));
      return out;
    }
    return U->zero();
  }

 private:
  TwistedCtx t_;
};

// Counit on an enveloping polynomial: constant term extraction.
inline Rational counit_eps(const NCPoly& p) {
  return p.coeff(Word{});
}

// Drops every term touching tensor slots >= 1 (exact once normal-formed:
// the counit kills nonempty enveloping monomials).
inline NCPoly counit_tail_slots(const NCPoly& p, const AlgebraCtx* target_slot0_ctx) {
  NCPoly out(target_slot0_ctx);
  for (auto& [w, c] : p.terms()) {
    bool pure = true;
    Word inner;
    for (Sym s : w) {
      if (sym_slot(s) != 0) {
        pure = false;
        break;
      }
      inner.push_back(s);
    }
    if (pure) out += NCPoly(target_slot0_ctx, inner, c);
  }
  return out;
}

// ---------------------------------------------------------------------------
// One baby-comultiplication step.

// Target: tensor( [slot0: formal parabolic of the same shape] , U(gl_t) ),
// with the enveloping factor placed at `env_slot`. The generator images are
//   H_a -> H_a (x) 1                       (a < n)
//   B_{b,a} -> B (x) 1                     (b < n)
//   B_{n,a} -> bracket form (x) 1 - sum_p theta B_{n,a;p,j}^(r-1) (x) e_{p'i'}
//   H_n -> the two-sided coproduct tail, Ht_n via series inversion,
// and C-symbols are first rewritten through B = C.
class DeltaRStep {
 public:
  DeltaRStep(const ShiftedCtx& s, const AlgebraCtx* tensor_target, int env_slot, int cutoff)
      : s_(s), fp_(s.tctx, s.mu), target_(tensor_target), env_slot_(env_slot), cutoff_(cutoff) {
    if (s_.sigma.is_zero())
      throw std::invalid_argument("DeltaRStep: sigma must be nonzero (use the plain form)");
    if (!(minimal_shape(s_.sigma) == s_.mu))
      throw std::invalid_argument("DeltaRStep: shape must be minimal admissible");
    t_block_ = s_.mu.part(s_.mu.n());
  }

  int factor_size() const { return t_block_; }
  const AlgebraCtx* target() const { return target_; }

  // image of a slot-0 parabolic symbol
  NCPoly image(Sym sym) const {
    auto g = p_index(sym);
    int n = s_.mu.n();
    switch (g.tag) {
      case PTag::H:
        return g.a < n ? lift0(fp_.H(g.a, g.i, g.j, g.r)) : h_last_image(g.i, g.j, g.r);
      case PTag::Ht:
        return g.a < n ? lift0(fp_.Ht(g.a, g.i, g.j, g.r)) : ht_last_image(g.i, g.j, g.r);
      case PTag::Bba: {
        int b = g.a, a = g.b;
        if (b < n) return lift0(fp_.Bba(b, a, g.i, g.j, g.r));
        return b_last_image(a, g.i, g.j, g.r);
      }
      case PTag::Cab: {
        // C_{a,b;k,l}^(r) = (-1)^r theta_k theta_l B_{b,a;l',k'}^(r)
        // (AI: primes trivial), then the B rules apply.
        int b = g.a, a = g.b, k = g.i, l = g.j;
        Rational c = ((g.r % 2) ? rat(-1) : rat(1));
        if (s_.tctx.sign == SignType::AII) c *= rat(block_theta(s_.tctx, k) * block_theta(s_.tctx, l));
        return c * image(bba_sym(b, a, block_prime(s_.tctx, l), block_prime(s_.tctx, k), g.r));
      }
    }
    throw std::invalid_argument("DeltaRStep: unknown symbol");
  }

 private:
  NCPoly lift0(const NCPoly& p) const {
    NCPoly out(target_);
    for (auto& [w, c] : p.terms()) out += NCPoly(target_, w, c);  // slot 0 already
    return out;
  }
  NCPoly env(int i, int j) const {
    return target_->gen(with_slot(lie_sym((i - 1) * t_block_ + (j - 1)), env_slot_));
  }
  NCPoly env2(int i, int j, int k, int l) const {
    return target_->mul(env(i, j), env(k, l));
  }

  NCPoly h_last_image(int l, int k, int r) const {
    int n = s_.mu.n();
    const TwistedCtx& t = s_.tctx;
    NCPoly out = lift0(fp_.H(n, l, k, r));
    if (r >= 1) {
      for (int p = 1; p <= t_block_; ++p)
        out += target_->mul(lift0(fp_.H(n, l, p, r - 1)), env(p, k));
      for (int q = 1; q <= t_block_; ++q)
        out -= rat(block_theta(t, q) * block_theta(t, l)) *
               target_->mul(lift0(fp_.H(n, q, k, r - 1)),
                            env(block_prime(t, q), block_prime(t, l)));
    }
    if (r >= 2)
      for (int p = 1; p <= t_block_; ++p)
        for (int q = 1; q <= t_block_; ++q)
          out -= rat(block_theta(t, q) * block_theta(t, l)) *
                 target_->mul(lift0(fp_.H(n, q, p, r - 2)),
                              target_->mul(env(block_prime(t, q), block_prime(t, l)),
                                           env(p, k)));
    return out;
  }

  NCPoly ht_last_image(int i, int j, int r) const {
    ensure_ht();
    return ht_inverse_.at(i - 1, j - 1).at(r);
  }

  NCPoly b_last_image(int a, int i, int j, int r) const {
    int n = s_.mu.n();
    const TwistedCtx& t = s_.tctx;
    NCPoly out(target_);
    if (a == n - 1) {
      out += lift0(fp_.B(a, i, j, r));
    } else {
      // bracket form of the multi-step generator, auxiliary index 1
      int step = s_.sab(n - 1, n);
      NCPoly left = fp_.B(n - 1, i, 1, step + 1);
      NCPoly right = fp_.Bba(n - 1, a, 1, j, r - step);
      out += lift0(fp_.comm(left, right));
    }
    if (r >= 1) {
      for (int p = 1; p <= t_block_; ++p) {
        NCPoly tail = (a == n - 1) ? fp_.B(a, p, j, r - 1) : fp_.Bba(n, a, p, j, r - 1);
        out -= rat(block_theta(t, p) * block_theta(t, i)) *
               target_->mul(lift0(tail), env(block_prime(t, p), block_prime(t, i)));
      }
    }
    return out;
  }

  void ensure_ht() const {
    std::lock_guard lock(ht_mutex_);
    if (ht_ready_) return;
    int n = s_.mu.n();
    SeriesMatrix M(target_, t_block_, t_block_, cutoff_);
    for (int i = 1; i <= t_block_; ++i)
      for (int j = 1; j <= t_block_; ++j) {
        USeries f(target_, cutoff_);
        for (int r = 0; r <= cutoff_; ++r)
          f.set(r, r == 0 ? (i == j ? target_->one() : target_->zero())
                          : h_last_image(i, j, r));
        M.at(i - 1, j - 1) = std::move(f);
      }
    ht_inverse_ = matrix_inverse(M);
    ht_ready_ = true;
  }

  ShiftedCtx s_;
  FormalParabolic fp_;
  const AlgebraCtx* target_;
  int env_slot_;
  int cutoff_;
  int t_block_;
  mutable std::mutex ht_mutex_;
  mutable bool ht_ready_ = false;
  mutable SeriesMatrix ht_inverse_;
};

// The sigma = 0 comultiplication on s-generators:
//   s_ij^(r) -> s_ij^(r) (x) 1 + sum_p s_ip^(r-1) (x) e_pj
//             - sum_q theta_q theta_i s_qj^(r-1) (x) e_{q'i'}
//             - sum_{p,q} theta_q theta_i s_qp^(r-2) (x) e_{q'i'} e_pj.
inline NCPoly plain_delta_r_image(const TwistedCtx& t, const AlgebraCtx* target, int env_slot,
                                  Sym sym) {
  auto [i, j, r] = t_index(sym);
  int N = t.N;
  auto s_at = [&](int a, int b, int lev) -> NCPoly {
    if (lev < 0) return target->zero();
    if (lev == 0) return a == b ? target->one() : target->zero();
    return target->gen(s_sym(a, b, lev));  // slot 0
  };
  auto env = [&](int a, int b) {
    return target->gen(with_slot(lie_sym((a - 1) * N + (b - 1)), env_slot));
  };
  NCPoly out = s_at(i, j, r);
  for (int p = 1; p <= N; ++p) out += target->mul(s_at(i, p, r - 1), env(p, j));
  for (int q = 1; q <= N; ++q)
    out -= rat(t.theta(q) * t.theta(i)) *
           target->mul(s_at(q, j, r - 1), env(t.prime(q), t.prime(i)));
  for (int p = 1; p <= N; ++p)
    for (int q = 1; q <= N; ++q)
      out -= rat(t.theta(q) * t.theta(i)) *
             target->mul(s_at(q, p, r - 2),
                         target->mul(env(t.prime(q), t.prime(i)), env(p, j)));
  return out;
}

// ---------------------------------------------------------------------------
// Images for verifying that a single Delta_R step is a homomorphism: the
// step image with the first factor pushed into Y(gl_N).

class DeltaRYangianImages : public SymbolImages {
 public:
  DeltaRYangianImages(const ShiftedCtx& s, int cutoff)
      : SymbolImages(concrete_target_for(s)),
        formal_target_(AlgebraCtx::tensor({formal_p_ctx(s.tctx, s.mu),
                                           AlgebraCtx::enveloping(make_gl(s.mu.part(s.mu.n())))})),
        step_(std::make_unique<DeltaRStep>(s, formal_target_, 1, cutoff)),
        real_(get_realization(s.tctx, s.mu, cutoff)) {}

  const DeltaRStep& step() const { return *step_; }
  const AlgebraCtx* formal_target() const { return formal_target_; }

  static const AlgebraCtx* concrete_target_for(const ShiftedCtx& s) {
    return AlgebraCtx::tensor(
        {s.tctx.yangian(), AlgebraCtx::enveloping(make_gl(s.mu.part(s.mu.n())))});
  }

 protected:
  NCPoly compute(Sym sym) const override {
    NCPoly formal = step_->image(sym);
    // realize slot-0 parabolic words inside Y(gl_N)
    const AlgebraCtx* T = target();
    NCPoly out(T);
    for (auto& [w, c] : formal.terms()) {
      NCPoly prod = T->one();
      for (Sym s : w) {
        NCPoly factor = (sym_slot(s) == 0) ? tensor_inject(real_->realize(s), 0, T)
                                           : T->gen(s);
        prod = T->mul(prod, factor);
      }
      prod.scale(c);
      out += prod;
    }
    return out;
  }

 private:
  const AlgebraCtx* formal_target_;
  std::unique_ptr<DeltaRStep> step_;
  std::shared_ptr<const ParabolicRealization> real_;
};

// ---------------------------------------------------------------------------
// The Miura transform: iterated baby comultiplication, shifted form while
// sigma is nonzero, plain form afterwards, finished by the level-1 or
// level-2 evaluation. The first tensor factor stays formal between steps.

// Maps slot-0 symbols through `fn`, keeps the other slots.
class Slot0Images : public SymbolImages {
 public:
  Slot0Images(const AlgebraCtx* target, std::function<NCPoly(Sym)> fn)
      : SymbolImages(target), fn_(std::move(fn)) {}

 protected:
  NCPoly compute(Sym s) const override {
    if (sym_slot(s) == 0) return fn_(s);
    return target()->gen(s);
  }

 private:
  std::function<NCPoly(Sym)> fn_;
};

struct MiuraStep {
  enum class Kind { DeltaR, PlainDeltaR, FinalXi, FinalEv2 };
  Kind kind;
  int factor_size = 0;       // t for DeltaR steps, N for plain ones
  ShiftMatrix sigma;         // sigma at this stage (DeltaR only)
  Shape mu;                  // minimal shape at this stage (DeltaR only)
  int level_before = 0;
};

inline std::vector<MiuraStep> build_miura_plan(const TruncatedCtx& tr) {
  std::vector<MiuraStep> plan;
  ShiftMatrix sigma = tr.sctx.sigma;
  int level = tr.level;
  const TwistedCtx& t = tr.sctx.tctx;
  while (!sigma.is_zero()) {
    Shape mu = minimal_shape(sigma);
    plan.push_back({MiuraStep::Kind::DeltaR, mu.part(mu.n()), sigma, mu, level});
    sigma = dot_sigma(sigma);
    level -= 2;
  }
  while (level > 2) {
    plan.push_back({MiuraStep::Kind::PlainDeltaR, t.N, sigma, Shape({t.N}), level});
    level -= 2;
  }
  if (level == 1) {
    plan.push_back({MiuraStep::Kind::FinalXi, t.N, sigma, Shape({t.N}), level});
  } else if (level == 2) {
    plan.push_back({MiuraStep::Kind::FinalEv2, t.N, sigma, Shape({t.N}), level});
  } else {
    throw std::logic_error("build_miura_plan: level bookkeeping broke");
  }
  return plan;
}

class Miura {
 public:
  Miura(const TruncatedCtx& tr, int cutoff) : tr_(tr), cutoff_(cutoff) {
    plan_ = build_miura_plan(tr);
    const TwistedCtx& t = tr_.sctx.tctx;
    for (auto& st : plan_)
      if (st.kind == MiuraStep::Kind::DeltaR || st.kind == MiuraStep::Kind::PlainDeltaR)
        env_sizes_.push_back(st.factor_size);
    std::vector<const AlgebraCtx*> final_slots{AlgebraCtx::enveloping(make_gl(t.N))};
    for (int sz : env_sizes_) final_slots.push_back(AlgebraCtx::enveloping(make_gl(sz)));
    final_target_ = AlgebraCtx::tensor(final_slots);
    build_tail();
  }

  const std::vector<MiuraStep>& plan() const { return plan_; }
  const std::vector<int>& factor_sizes() const { return env_sizes_; }
  const AlgebraCtx* target() const { return final_target_; }
  const TruncatedCtx& trctx() const { return tr_; }

  // chi is a composition of algebra homomorphisms, so it is evaluated
  // symbol-by-symbol and multiplied in the concrete final context; that
  // keeps intermediate normal forms collapsed.
  NCPoly apply(const NCPoly& input, const Shape& input_shape) const {
    const TwistedCtx& t = tr_.sctx.tctx;
    if (input.ctx() != formal_p_ctx(t, input_shape))
      throw std::invalid_argument("Miura::apply: input is not over the given shape");
    NCPoly converted = input;
    std::size_t first = 0;
    if (plan_.front().kind == MiuraStep::Kind::DeltaR) {
      const Shape& mu0 = plan_.front().mu;
      if (!(input_shape == mu0))
        converted = eval_formal(input, *shape_conversion(t, input_shape, mu0, cutoff_));
      first = 0;
      return eval_formal(converted, symbol_images(mu0, first));
    }
    // sigma = 0 from the start: straight to s-generators, then the tail
    NCPoly s_form = eval_formal(input, *parabolic_to_s(t, input_shape, cutoff_));
    return apply_s(s_form);
  }

  NCPoly apply_s(const NCPoly& input) const {
    const TwistedCtx& t = tr_.sctx.tctx;
    if (input.ctx() != formal_s_ctx(t))
      throw std::invalid_argument("Miura::apply_s: input is not an s-polynomial");
    if (plan_.front().kind == MiuraStep::Kind::DeltaR)
      throw std::invalid_argument("Miura::apply_s: sigma is nonzero, use apply()");
    NCPoly out(final_target_);
    for (auto& [w, c] : input.terms()) {
      NCPoly prod = final_target_->one();
      for (Sym sym : w) prod = final_target_->mul(prod, tail_image(sym));
      prod.scale(c);
      out += prod;
    }
    return out;
  }

 private:
  // ---- tail: the sigma = 0 phase composed with the final evaluation,
  // built backwards. tail_[r] caches the composite image of s[i,j;r].
  void build_tail() {
    const TwistedCtx& t = tr_.sctx.tctx;
    if (plan_.back().kind == MiuraStep::Kind::FinalXi)
      final_eval_ = std::make_unique<XiImages>(t);
    else
      final_eval_ = std::make_unique<Ev2Images>(t);
    plain_slots_.clear();
    int slot = 0;
    for (auto& st : plan_) {
      if (st.kind == MiuraStep::Kind::DeltaR) ++slot;
      if (st.kind == MiuraStep::Kind::PlainDeltaR) plain_slots_.push_back(++slot);
    }
  }

  // composite image of one s-symbol under the plain steps + final map
  const NCPoly& tail_image(Sym sym) const {
    std::lock_guard lock(tail_mutex_);
    return tail_cached(sym, 0);
  }

  const NCPoly& tail_cached(Sym sym, std::size_t k) const {
    auto key = std::make_pair(sym, k);
    auto it = tail_memo_.find(key);
    if (it != tail_memo_.end()) return it->second;
    NCPoly value = tail_compute(sym, k);
    return tail_memo_.emplace(key, std::move(value)).first->second;
  }

  // image under plain steps plain_slots_[k..] followed by the final map
  NCPoly tail_compute(Sym sym, std::size_t k) const {
    const TwistedCtx& t = tr_.sctx.tctx;
    auto [i, j, r] = t_index(sym);
    if (k == plain_slots_.size())
      return tensor_inject(final_eval_->image(sym), 0, final_target_);
    int slot = plain_slots_[k];
    int N = t.N;
    auto rec = [&](int a, int b, int lev) -> NCPoly {
      if (lev < 0) return final_target_->zero();
      if (lev == 0) return a == b ? final_target_->one() : final_target_->zero();
      return NCPoly(tail_cached(s_sym(a, b, lev), k + 1));
    };
    auto env = [&](int a, int b) {
      return final_target_->gen(with_slot(lie_sym((a - 1) * N + (b - 1)), slot));
    };
    NCPoly out = rec(i, j, r);
    for (int p = 1; p <= N; ++p)
      out += final_target_->mul(rec(i, p, r - 1), env(p, j));
    for (int q = 1; q <= N; ++q)
      out -= rat(t.theta(q) * t.theta(i)) *
             final_target_->mul(rec(q, j, r - 1), env(t.prime(q), t.prime(i)));
    for (int p = 1; p <= N; ++p)
      for (int q = 1; q <= N; ++q)
        out -= rat(t.theta(q) * t.theta(i)) *
               final_target_->mul(rec(q, p, r - 2),
                                  final_target_->mul(env(t.prime(q), t.prime(i)), env(p, j)));
    return out;
  }

  // ---- sigma != 0 phase: per-symbol composite images into the final
  // context, built by running the formal step on the symbol and recursing.
  class StageImages : public SymbolImages {
   public:
    StageImages(const Miura& chi, Shape mu, std::size_t step_index)
        : SymbolImages(chi.final_target_), chi_(chi), mu_(std::move(mu)), step_(step_index) {}

   protected:
    NCPoly compute(Sym sym) const override {
      return chi_.stage_symbol_image(sym, mu_, step_);
    }

   private:
    const Miura& chi_;
    Shape mu_;
    std::size_t step_;
  };

  const SymbolImages& symbol_images(const Shape& mu, std::size_t step_index) const {
    std::lock_guard lock(stage_mutex_);
    auto key = std::make_pair(mu.parts, step_index);
    auto it = stage_images_.find(key);
    if (it == stage_images_.end())
      it = stage_images_
               .emplace(key, std::make_unique<StageImages>(*this, mu, step_index))
               .first;
    return *it->second;
  }

  NCPoly stage_symbol_image(Sym sym, const Shape& mu, std::size_t step_index) const {
    const TwistedCtx& t = tr_.sctx.tctx;
    const MiuraStep& st = plan_.at(step_index);
    if (st.kind != MiuraStep::Kind::DeltaR)
      throw std::logic_error("stage_symbol_image: expected a shifted step");
    ShiftedCtx sc(t, st.sigma, st.mu);
    int env_slot = static_cast<int>(step_index) + 1;
    const AlgebraCtx* stepT = AlgebraCtx::tensor(
        {formal_p_ctx(t, st.mu),
         AlgebraCtx::enveloping(make_gl(st.factor_size))});
    DeltaRStep step(sc, stepT, 1, cutoff_);
    NCPoly formal = step.image(sym);

    // what the next stage expects on the first factor
    ShiftMatrix dotted = dot_sigma(st.sigma);
    bool next_plain = dotted.is_zero();
    Shape mu_next = next_plain ? st.mu : minimal_shape(dotted);
    std::unique_ptr<GaussImages> conv;
    if (next_plain)
      conv = parabolic_to_s(t, st.mu, cutoff_);
    else if (!(mu_next == st.mu))
      conv = shape_conversion(t, st.mu, mu_next, cutoff_);

    NCPoly out(final_target_);
    for (auto& [w, c] : formal.terms()) {
      NCPoly prod = final_target_->one();
      for (Sym s : w) {
        NCPoly factor(final_target_);
        if (sym_slot(s) == 0) {
          NCPoly piece = conv ? conv->image(s)
                              : NCPoly(formal_p_ctx(t, mu_next), Word{s}, Rational(1));
          // push each converted symbol through the rest of the chain
          NCPoly mapped(final_target_);
          for (auto& [w2, c2] : piece.terms()) {
            NCPoly inner = final_target_->one();
            for (Sym s2 : w2) {
              NCPoly im = next_plain ? tail_image(s2)
                                     : symbol_images(mu_next, step_index + 1).image(s2);
              inner = final_target_->mul(inner, im);
            }
            inner.scale(c2);
            mapped += inner;
          }
          factor = mapped;
        } else {
          // enveloping factor of this step: slot 1 in stepT -> env_slot
          factor = final_target_->gen(with_slot(with_slot(s, 0), env_slot));
        }
        prod = final_target_->mul(prod, factor);
      }
      prod.scale(c);
      out += prod;
    }
    return out;
  }

  TruncatedCtx tr_;
  int cutoff_;
  std::vector<MiuraStep> plan_;
  std::vector<int> env_sizes_;
  const AlgebraCtx* final_target_;
  std::unique_ptr<SymbolImages> final_eval_;
  std::vector<int> plain_slots_;
  mutable std::recursive_mutex tail_mutex_;
  mutable std::map<std::pair<Sym, std::size_t>, NCPoly> tail_memo_;
  mutable std::recursive_mutex stage_mutex_;
  mutable std::map<std::pair<std::vector<int>, std::size_t>, std::unique_ptr<StageImages>>
      stage_images_;
};

}  // namespace twyst
