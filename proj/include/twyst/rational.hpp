#pragma once

// Exact rational scalars with a small-integer fast path.
//
// Values are kept as reduced int64 fractions (denominator > 0); any
// operation whose exact result does not fit promotes the value to a
// heap-allocated GMP rational. Promotion is loss-free and sticky per value.
// The suites' coefficients (binomials, powers of 1/2, structure constants)
// almost never leave the fast path, which matters: the straightening engine
// spends most of its time in coefficient arithmetic.

#include <gmpxx.h>

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace twyst {

class Rational {
 public:
  Rational() : n_(0), d_(1) {}
  Rational(long long v) : n_(v), d_(1) {}
  Rational(int v) : n_(v), d_(1) {}
  Rational(long long num, long long den) { assign_small(num, den); }
  explicit Rational(const mpq_class& q) { assign_big(q); }
  explicit Rational(const mpz_class& z) {
    if (z.fits_slong_p()) {
      n_ = z.get_si();
      d_ = 1;
    } else {
      assign_big(mpq_class(z));
    }
  }

  Rational(const Rational& o) : n_(o.n_), d_(o.d_), big_(o.big_ ? new mpq_class(*o.big_) : nullptr) {}
  Rational(Rational&& o) noexcept : n_(o.n_), d_(o.d_), big_(o.big_) { o.big_ = nullptr; }
  Rational& operator=(const Rational& o) {
    if (this != &o) {
      delete big_;
      n_ = o.n_;
      d_ = o.d_;
      big_ = o.big_ ? new mpq_class(*o.big_) : nullptr;
    }
    return *this;
  }
  Rational& operator=(Rational&& o) noexcept {
    if (this != &o) {
      delete big_;
      n_ = o.n_;
      d_ = o.d_;
      big_ = o.big_;
      o.big_ = nullptr;
    }
    return *this;
  }
  ~Rational() { delete big_; }

  bool is_small() const { return big_ == nullptr; }
  int sign() const {
    if (big_) return sgn(*big_);
    return (n_ > 0) - (n_ < 0);
  }

  mpq_class to_mpq() const {
    if (big_) return *big_;
    mpq_class q(static_cast<long>(n_), static_cast<long>(d_));
    q.canonicalize();
    return q;
  }

  Rational& operator+=(const Rational& o) {
    if (!big_ && !o.big_) {
      __int128 num = i128(n_) * o.d_ + i128(o.n_) * d_;
      __int128 den = i128(d_) * o.d_;
      if (set_reduced(num, den)) return *this;
    }
    assign_big(to_mpq() + o.to_mpq());
    return *this;
  }
  Rational& operator-=(const Rational& o) {
    if (!big_ && !o.big_) {
      __int128 num = i128(n_) * o.d_ - i128(o.n_) * d_;
      __int128 den = i128(d_) * o.d_;
      if (set_reduced(num, den)) return *this;
    }
    assign_big(to_mpq() - o.to_mpq());
    return *this;
  }
  Rational& operator*=(const Rational& o) {
    if (!big_ && !o.big_) {
      __int128 num = i128(n_) * o.n_;
      __int128 den = i128(d_) * o.d_;
      if (set_reduced(num, den)) return *this;
    }
    assign_big(to_mpq() * o.to_mpq());
    return *this;
  }
  Rational& operator/=(const Rational& o) {
    if (o.sign() == 0) throw std::invalid_argument("rational: division by zero");
    if (!big_ && !o.big_) {
      __int128 num = i128(n_) * o.d_;
      __int128 den = i128(d_) * o.n_;
      if (den < 0) {
        num = -num;
        den = -den;
      }
      if (set_reduced(num, den)) return *this;
    }
    assign_big(to_mpq() / o.to_mpq());
    return *this;
  }

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  Rational operator-() const {
    Rational out = *this;
    if (out.big_) {
      *out.big_ = -*out.big_;
    } else {
      out.n_ = -out.n_;
    }
    return out;
  }

  friend bool operator==(const Rational& a, const Rational& b) {
    if (!a.big_ && !b.big_) return a.n_ == b.n_ && a.d_ == b.d_;
    return a.to_mpq() == b.to_mpq();
  }
  friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
  friend bool operator<(const Rational& a, const Rational& b) {
    if (!a.big_ && !b.big_) return i128(a.n_) * b.d_ < i128(b.n_) * a.d_;
    return a.to_mpq() < b.to_mpq();
  }

  std::string str() const {
    if (big_) return big_->get_num().get_str() + "/" + big_->get_den().get_str();
    return std::to_string(n_) + "/" + std::to_string(d_);
  }

 private:
  static __int128 i128(long long v) { return static_cast<__int128>(v); }

  static __int128 gcd128(__int128 a, __int128 b) {
    if (a < 0) a = -a;
    while (b != 0) {
      __int128 t = a % b;
      a = b;
      b = t;
    }
    return a;
  }

  // Reduces num/den (den > 0 after fixup) and stores it if it fits int64.
  bool set_reduced(__int128 num, __int128 den) {
    if (den == 0) throw std::invalid_argument("rational: zero denominator");
    if (den < 0) {
      num = -num;
      den = -den;
    }
    if (num == 0) {
      n_ = 0;
      d_ = 1;
      return true;
    }
    __int128 g = gcd128(num, den);
    num /= g;
    den /= g;
    constexpr __int128 lo = -static_cast<__int128>(INT64_MAX);
    constexpr __int128 hi = static_cast<__int128>(INT64_MAX);
    if (num < lo || num > hi || den > hi) return false;
    n_ = static_cast<long long>(num);
    d_ = static_cast<long long>(den);
    return true;
  }

  void assign_small(long long num, long long den) {
    big_ = nullptr;
    if (!set_reduced(i128(num), i128(den)))
      throw std::logic_error("rational: small assign overflow");
  }

  void assign_big(const mpq_class& q) {
    // try to re-narrow; keeps values small after transient big intermediates
    if (q.get_num().fits_slong_p() && q.get_den().fits_slong_p()) {
      delete big_;
      big_ = nullptr;
      n_ = q.get_num().get_si();
      d_ = q.get_den().get_si();
      return;
    }
    if (big_) {
      *big_ = q;
    } else {
      big_ = new mpq_class(q);
    }
  }

  long long n_;
  long long d_;
  mpq_class* big_ = nullptr;
};

inline Rational rat(long long num, long long den = 1) { return Rational(num, den); }

inline bool is_zero(const Rational& q) { return q.sign() == 0; }

inline std::string rat_to_string(const Rational& q) { return q.str(); }

inline Rational rat_from_string(const std::string& s) {
  auto slash = s.find('/');
  mpq_class q(slash == std::string::npos ? s : s.substr(0, slash) + "/" + s.substr(slash + 1));
  q.canonicalize();
  return Rational(q);
}

// binom(n, k) for n >= 0; 0 outside the Pascal triangle.
inline Rational binomial(long n, long k) {
  if (k < 0 || n < 0 || k > n) return Rational(0);
  mpz_class b;
  mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return Rational(b);
}

inline Rational rat_pow(const Rational& q, long e) {
  if (e < 0) {
    if (is_zero(q)) throw std::invalid_argument("rational: negative power of zero");
    return rat_pow(Rational(1) / q, -e);
  }
  Rational acc(1), base = q;
  while (e > 0) {
    if (e & 1) acc *= base;
    base *= base;
    e >>= 1;
  }
  return acc;
}

}  // namespace twyst
