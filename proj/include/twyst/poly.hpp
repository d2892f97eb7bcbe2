#pragma once

// Words in generator symbols and noncommutative polynomials over Q.
// An NCPoly is a sorted sparse term vector; sorting is graded-lex on the raw
// symbol values, which is deterministic and independent of any run-time
// interning, so serialization order is reproducible by construction.

#include "rational.hpp"
#include "symbol.hpp"

#include <algorithm>
#include <cstddef>
#include <sstream>
#include <stdexcept>
#include <unordered_map>
#include <vector>

namespace twyst {

using Word = std::vector<Sym>;

struct WordHash {
  std::size_t operator()(const Word& w) const {
    std::size_t h = 0x9e3779b97f4a7c15ULL ^ w.size();
    for (Sym s : w) h = (h ^ s) * 0x100000001b3ULL;
    return h;
  }
};

inline bool word_less(const Word& a, const Word& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

class AlgebraCtx;

class NCPoly {
 public:
  using Term = std::pair<Word, Rational>;

  NCPoly() : ctx_(nullptr) {}
  explicit NCPoly(const AlgebraCtx* ctx) : ctx_(ctx) {}
  NCPoly(const AlgebraCtx* ctx, Rational c) : ctx_(ctx) {
    if (!twyst::is_zero(c)) terms_.emplace_back(Word{}, std::move(c));
  }
  NCPoly(const AlgebraCtx* ctx, const Word& w, Rational c) : ctx_(ctx) {
    if (!twyst::is_zero(c)) terms_.emplace_back(w, std::move(c));
  }

  const AlgebraCtx* ctx() const { return ctx_; }
  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  // Builds from an unordered accumulation, dropping zeros.
  static NCPoly from_map(const AlgebraCtx* ctx, std::unordered_map<Word, Rational, WordHash>&& m) {
    NCPoly p(ctx);
    p.terms_.reserve(m.size());
    for (auto& [w, c] : m)
      if (!twyst::is_zero(c)) p.terms_.emplace_back(w, std::move(c));
    std::sort(p.terms_.begin(), p.terms_.end(),
              [](const Term& a, const Term& b) { return word_less(a.first, b.first); });
    return p;
  }

  Rational coeff(const Word& w) const {
    auto it = std::lower_bound(terms_.begin(), terms_.end(), w, [](const Term& t, const Word& key) {
      return word_less(t.first, key);
    });
    if (it != terms_.end() && it->first == w) return it->second;
    return Rational(0);
  }

  NCPoly& operator+=(const NCPoly& o) {
    require_same_ctx(o);
    std::vector<Term> out;
    out.reserve(terms_.size() + o.terms_.size());
    auto a = terms_.cbegin();
    auto b = o.terms_.cbegin();
    while (a != terms_.cend() || b != o.terms_.cend()) {
      if (b == o.terms_.cend() || (a != terms_.cend() && word_less(a->first, b->first))) {
        out.push_back(*a++);
      } else if (a == terms_.cend() || word_less(b->first, a->first)) {
        out.push_back(*b++);
      } else {
        Rational c = a->second + b->second;
        if (!twyst::is_zero(c)) out.emplace_back(a->first, std::move(c));
        ++a, ++b;
      }
    }
    terms_ = std::move(out);
    return *this;
  }

  NCPoly& operator-=(const NCPoly& o) {
    NCPoly neg = o;
    neg.scale(Rational(-1));
    return *this += neg;
  }

  void scale(const Rational& c) {
    if (twyst::is_zero(c)) {
      terms_.clear();
      return;
    }
    for (auto& t : terms_) t.second *= c;
  }

  friend NCPoly operator+(NCPoly a, const NCPoly& b) { return a += b; }
  friend NCPoly operator-(NCPoly a, const NCPoly& b) { return a -= b; }
  friend NCPoly operator*(NCPoly a, const Rational& c) {
    a.scale(c);
    return a;
  }
  friend NCPoly operator*(const Rational& c, NCPoly a) {
    a.scale(c);
    return a;
  }

  bool operator==(const NCPoly& o) const { return ctx_ == o.ctx_ && terms_ == o.terms_; }
  bool operator!=(const NCPoly& o) const { return !(*this == o); }

  void require_same_ctx(const NCPoly& o) const {
    if (ctx_ != o.ctx_) throw std::invalid_argument("NCPoly: context mismatch");
  }

 private:
  const AlgebraCtx* ctx_;
  std::vector<Term> terms_;
};

inline std::string sym_to_string(Sym s) {
  std::ostringstream os;
  if (sym_slot(s) != 0) os << "@" << sym_slot(s) << ":";
  switch (sym_family(s)) {
    case Family::T: {
      auto [i, j, r] = t_index(s);
      os << "t[" << i << "," << j << ";" << r << "]";
      break;
    }
    case Family::SGen: {
      auto [i, j, r] = t_index(s);
      os << "s[" << i << "," << j << ";" << r << "]";
      break;
    }
    case Family::Lie:
      os << "x" << lie_index(s);
      break;
    case Family::PGen: {
      auto p = p_index(s);
      switch (p.tag) {
        case PTag::H: os << "H[" << p.a << ";" << p.i << "," << p.j << ";" << p.r << "]"; break;
        case PTag::Ht: os << "Ht[" << p.a << ";" << p.i << "," << p.j << ";" << p.r << "]"; break;
        case PTag::Bba:
          os << "B[" << p.a << "," << p.b << ";" << p.i << "," << p.j << ";" << p.r << "]";
          break;
        case PTag::Cab:
          os << "C[" << p.b << "," << p.a << ";" << p.i << "," << p.j << ";" << p.r << "]";
          break;
      }
      break;
    }
  }
  return os.str();
}

inline std::string to_string(const NCPoly& p) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto& [w, c] : p.terms()) {
    if (!first) os << " + ";
    first = false;
    os << rat_to_string(c);
    for (Sym s : w) os << "*" << sym_to_string(s);
  }
  return os.str();
}

}  // namespace twyst
