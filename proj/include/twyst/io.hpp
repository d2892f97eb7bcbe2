#pragma once

// JSON encodings: exact "num/den" coefficients, deterministic term order
// (inherited from the polynomial's canonical storage order), exact round
// trips. Symbols serialize as small arrays, e.g. ["t", i, j, r].

#include "series.hpp"

#include <json.hpp>

namespace twyst {

using Json = nlohmann::ordered_json;

inline Json sym_to_json(Sym s) {
  int slot = sym_slot(s);
  Json inner;
  switch (sym_family(s)) {
    case Family::T: {
      auto [i, j, r] = t_index(s);
      inner = Json::array({"t", i, j, r});
      break;
    }
    case Family::SGen: {
      auto [i, j, r] = t_index(s);
      inner = Json::array({"s", i, j, r});
      break;
    }
    case Family::Lie:
      inner = Json::array({"lie", lie_index(s)});
      break;
    case Family::PGen: {
      auto p = p_index(s);
      static const char* tags[] = {"H", "Ht", "B", "C"};
      inner = Json::array({"pg", tags[static_cast<int>(p.tag)], p.a, p.b, p.i, p.j, p.r});
      break;
    }
  }
  if (slot == 0) return inner;
  return Json::array({"@", slot, inner});
}

inline Sym sym_from_json(const Json& j) {
  if (!j.is_array() || j.empty()) throw std::invalid_argument("sym_from_json: bad symbol");
  std::string kind = j.at(0).get<std::string>();
  if (kind == "@") return with_slot(sym_from_json(j.at(2)), j.at(1).get<int>());
  if (kind == "t") return t_sym(j.at(1).get<int>(), j.at(2).get<int>(), j.at(3).get<int>());
  if (kind == "s") return s_sym(j.at(1).get<int>(), j.at(2).get<int>(), j.at(3).get<int>());
  if (kind == "lie") return lie_sym(j.at(1).get<int>());
  if (kind == "pg") {
    std::string tag = j.at(1).get<std::string>();
    PTag pt = tag == "H" ? PTag::H : tag == "Ht" ? PTag::Ht : tag == "B" ? PTag::Bba : PTag::Cab;
    return p_sym(pt, j.at(2).get<int>(), j.at(3).get<int>(), j.at(4).get<int>(),
                 j.at(5).get<int>(), j.at(6).get<int>());
  }
  throw std::invalid_argument("sym_from_json: unknown symbol kind " + kind);
}

inline Json poly_to_json(const NCPoly& p) {
  Json terms = Json::array();
  for (auto& [w, c] : p.terms()) {
    Json word = Json::array();
    for (Sym s : w) word.push_back(sym_to_json(s));
    terms.push_back(Json{{"coeff", rat_to_string(c)}, {"word", word}});
  }
  return Json{{"ctx", p.ctx() ? p.ctx()->id() : ""}, {"terms", terms}};
}

inline NCPoly poly_from_json(const Json& j, const AlgebraCtx* ctx = nullptr) {
  if (!ctx) {
    ctx = ctx_by_id(j.at("ctx").get<std::string>());
    if (!ctx) throw std::invalid_argument("poly_from_json: unknown context id");
  }
  NCPoly out(ctx);
  for (auto& term : j.at("terms")) {
    Word w;
    for (auto& s : term.at("word")) w.push_back(sym_from_json(s));
    out += NCPoly(ctx, w, rat_from_string(term.at("coeff").get<std::string>()));
  }
  return out;
}

inline Json series_to_json(const USeries& f) {
  Json coeffs = Json::array();
  for (int r = 0; r <= f.cutoff(); ++r) coeffs.push_back(poly_to_json(f.at(r)));
  return Json{{"cutoff", f.cutoff()}, {"coeffs", coeffs}};
}

inline USeries series_from_json(const Json& j, const AlgebraCtx* ctx = nullptr) {
  int cutoff = j.at("cutoff").get<int>();
  const Json& coeffs = j.at("coeffs");
  NCPoly first = poly_from_json(coeffs.at(0), ctx);
  USeries f(first.ctx(), cutoff);
  for (int r = 0; r <= cutoff; ++r) f.set(r, poly_from_json(coeffs.at(r), first.ctx()));
  return f;
}

}  // namespace twyst
