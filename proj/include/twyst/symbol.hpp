#pragma once

// Generator symbols packed into one 64-bit word.
//
// Layout (high to low):
//   slot   : 8 bits   tensor slot, 0 outside tensor contexts
//   family : 4 bits
//   payload: 52 bits, family-specific
//
// The raw uint64 ordering of symbols within one context is exactly the PBW
// order used for straightening:
//   - Yangian t[i,j;r]: ascending (r, i, j) lexicographically,
//   - enveloping symbols: ascending basis index,
//   - tensor words: slot-major, factors commute.
// Free families (abstract s-generators and parabolic generators) are never
// reordered; their packing only has to be injective.

#include <cstdint>
#include <stdexcept>
#include <string>

namespace twyst {

using Sym = std::uint64_t;

enum class Family : std::uint8_t {
  T = 1,     // Yangian generator t[i,j;r]
  Lie = 2,   // basis element of a structure-constant Lie algebra
  SGen = 3,  // abstract twisted generator s[i,j;r] (free)
  PGen = 4,  // parabolic generator (free)
};

// Parabolic tags. B(a,...) is the adjacent-block generator (= Bba with
// b = a+1); Bba/Cab carry both block indices.
enum class PTag : std::uint8_t { H = 0, Ht = 1, Bba = 2, Cab = 3 };

namespace detail {
constexpr int kSlotShift = 56;
constexpr int kFamShift = 52;
constexpr Sym kPayloadMask = (Sym(1) << kFamShift) - 1;
}  // namespace detail

constexpr int sym_slot(Sym s) { return static_cast<int>(s >> detail::kSlotShift); }
constexpr Family sym_family(Sym s) {
  return static_cast<Family>((s >> detail::kFamShift) & 0xF);
}
constexpr Sym sym_payload(Sym s) { return s & detail::kPayloadMask; }

constexpr Sym make_sym(int slot, Family fam, Sym payload) {
  return (Sym(slot) << detail::kSlotShift) |
         (Sym(static_cast<std::uint8_t>(fam)) << detail::kFamShift) | payload;
}

inline Sym with_slot(Sym s, int slot) {
  return (s & ~(Sym(0xFF) << detail::kSlotShift)) | (Sym(slot) << detail::kSlotShift);
}

// ---- t[i,j;r] and s[i,j;r]: payload r(20) | i(16) | j(16), r most
// significant so raw order is (r,i,j).

inline Sym t_sym(int i, int j, int r) {
  if (i < 1 || j < 1 || r < 1 || i > 0xFFFF || j > 0xFFFF || r >= (1 << 20))
    throw std::invalid_argument("t_sym: index/level out of range");
  return make_sym(0, Family::T, (Sym(r) << 32) | (Sym(i) << 16) | Sym(j));
}

inline Sym s_sym(int i, int j, int r) {
  if (i < 1 || j < 1 || r < 1 || i > 0xFFFF || j > 0xFFFF || r >= (1 << 20))
    throw std::invalid_argument("s_sym: index/level out of range");
  return make_sym(0, Family::SGen, (Sym(r) << 32) | (Sym(i) << 16) | Sym(j));
}

struct TIndex {
  int i, j, r;
};

inline TIndex t_index(Sym s) {
  Sym p = sym_payload(s);
  return {static_cast<int>((p >> 16) & 0xFFFF), static_cast<int>(p & 0xFFFF),
          static_cast<int>(p >> 32)};
}

// ---- Lie basis element: payload = basis index.

inline Sym lie_sym(int basis_index) {
  if (basis_index < 0) throw std::invalid_argument("lie_sym: negative index");
  return make_sym(0, Family::Lie, Sym(basis_index));
}

inline int lie_index(Sym s) { return static_cast<int>(sym_payload(s)); }

// ---- Parabolic generator: payload tag(4) | a(6) | b(6) | i(6) | j(6) |
// k(6) | l(6) | r(12).

inline Sym p_sym(PTag tag, int a, int b, int i, int j, int r) {
  if (a < 0 || b < 0 || i < 0 || j < 0 || r < 0 || a > 63 || b > 63 || i > 63 || j > 63 ||
      r >= (1 << 12))
    throw std::invalid_argument("p_sym: field out of range");
  return make_sym(0, Family::PGen,
                  (Sym(static_cast<std::uint8_t>(tag)) << 48) | (Sym(a) << 42) | (Sym(b) << 36) |
                      (Sym(i) << 30) | (Sym(j) << 24) | (Sym(r)));
}

struct PIndex {
  PTag tag;
  int a, b, i, j, r;
};

inline PIndex p_index(Sym s) {
  Sym p = sym_payload(s);
  return {static_cast<PTag>((p >> 48) & 0xF), static_cast<int>((p >> 42) & 0x3F),
          static_cast<int>((p >> 36) & 0x3F), static_cast<int>((p >> 30) & 0x3F),
          static_cast<int>((p >> 24) & 0x3F), static_cast<int>(p & 0xFFF)};
}

inline Sym h_sym(int a, int i, int j, int r) { return p_sym(PTag::H, a, a, i, j, r); }
inline Sym ht_sym(int a, int i, int j, int r) { return p_sym(PTag::Ht, a, a, i, j, r); }
inline Sym b_sym(int a, int i, int j, int r) { return p_sym(PTag::Bba, a + 1, a, i, j, r); }
inline Sym bba_sym(int b, int a, int i, int j, int r) { return p_sym(PTag::Bba, b, a, i, j, r); }
inline Sym cab_sym(int a, int b, int i, int j, int r) { return p_sym(PTag::Cab, b, a, i, j, r); }

inline bool sym_is_free(Sym s) {
  Family f = sym_family(s);
  return f == Family::SGen || f == Family::PGen;
}

std::string sym_to_string(Sym s);  // defined in poly.hpp (needs Lie label registry)

}  // namespace twyst
