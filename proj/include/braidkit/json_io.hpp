#pragma once

// JSON forms of library values (nlohmann::json).
//
//   word           {"n": 3, "letters": [1, 2, -1]}
//   normal form    {"n": 3, "delta_power": -1, "factors": [[3, 1, 2]]}   one-line, 1-based
//   polynomial     [[exponent, coefficient], ...] ascending
//   move sequence  [{"move": "destab+", "params": {...}, "result_word": word}, ...]
//   template       {"name", "weights", "right_weights"?, "left", "right", "blocks"}
//                  items {"x": [pos, sign]} or {"b": id, "at"?: pos}

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "braidkit/garside.hpp"
#include "braidkit/laurent.hpp"
#include "braidkit/moves.hpp"

namespace braidkit {

using json = nlohmann::json;

namespace detail {

template <typename F>
auto json_guard(const char* what, F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("bad ") + what + " JSON: " + e.what());
  }
}

}  // namespace detail

inline json word_to_json(const BraidWord& w) {
  return {{"n", w.strands()}, {"letters", std::vector<int>(w.letters().begin(), w.letters().end())}};
}

inline BraidWord word_from_json(const json& j) {
  return detail::json_guard("word", [&] {
    return BraidWord(j.at("n").get<int>(), j.at("letters").get<std::vector<int>>());
  });
}

inline json normal_form_to_json(const NormalForm& nf) {
  json factors = json::array();
  for (const auto& f : nf.factors) factors.push_back(f.permutation().images());
  return {{"n", nf.n_strands}, {"delta_power", nf.delta_power}, {"factors", factors}};
}

/// Parses and re-normalizes, so a non-normal factor list is accepted but
/// returned in normal form.
inline NormalForm normal_form_from_json(const json& j) {
  return detail::json_guard("normal form", [&] {
    const int n = j.at("n").get<int>();
    if (n < 1) throw ParseError("normal form needs n >= 1");
    std::vector<PermutationBraid> fs;
    for (const auto& f : j.at("factors")) {
      auto images = f.get<std::vector<int>>();
      if (static_cast<int>(images.size()) != n) throw ParseError("factor length differs from n");
      try {
        fs.push_back(PermutationBraid::from_permutation(Permutation(std::move(images))));
      } catch (const Error& e) {
        throw ParseError(std::string("bad factor: ") + e.what());
      }
    }
    return normalize(n, j.at("delta_power").get<int>(), std::move(fs));
  });
}

inline json polynomial_to_json(const LaurentPolynomial& p) {
  json out = json::array();
  for (auto [e, c] : p.terms()) out.push_back({e, c});
  return out;
}

inline LaurentPolynomial polynomial_from_json(const json& j) {
  return detail::json_guard("polynomial", [&] {
    LaurentPolynomial p;
    for (const auto& t : j) {
      if (!t.is_array() || t.size() != 2) throw ParseError("polynomial terms are [exponent, coefficient]");
      p.add_term(t[0].get<int>(), t[1].get<LaurentPolynomial::Coefficient>());
    }
    return p;
  });
}

inline json move_step_to_json(const MoveStep& s) {
  json params = json::object();
  if (s.params.conjugator) params["conjugator"] = word_to_json(*s.params.conjugator);
  if (s.params.rotation) params["rotation"] = *s.params.rotation;
  return {{"move", move_name(s.kind)}, {"params", params}, {"result_word", word_to_json(s.result)}};
}

inline MoveStep move_step_from_json(const json& j) {
  return detail::json_guard("move step", [&] {
    MoveStep s;
    const auto name = j.at("move").get<std::string>();
    auto kind = move_from_name(name);
    if (!kind) throw ParseError("unknown move '" + name + "'");
    s.kind = *kind;
    if (j.contains("params")) {
      const auto& p = j.at("params");
      if (p.contains("conjugator")) s.params.conjugator = word_from_json(p.at("conjugator"));
      if (p.contains("rotation")) s.params.rotation = p.at("rotation").get<std::size_t>();
    }
    s.result = word_from_json(j.at("result_word"));
    return s;
  });
}

inline json move_sequence_to_json(const MoveSequence& seq) {
  json out = json::array();
  for (const auto& s : seq.steps) out.push_back(move_step_to_json(s));
  return out;
}

inline MoveSequence move_sequence_from_json(const json& j) {
  if (!j.is_array()) throw ParseError("move sequence JSON must be an array");
  MoveSequence seq;
  for (const auto& s : j) seq.steps.push_back(move_step_from_json(s));
  return seq;
}

namespace detail {

inline json schema_to_json(const std::vector<SchemaItem>& schema) {
  json out = json::array();
  for (const auto& it : schema) {
    if (it.kind == SchemaItem::Kind::crossing) {
      out.push_back({{"x", {it.position, it.sign}}});
    } else if (it.position == 1) {
      out.push_back({{"b", it.block}});
    } else {
      out.push_back({{"b", it.block}, {"at", it.position}});
    }
  }
  return out;
}

inline std::vector<SchemaItem> schema_from_json(const json& j) {
  std::vector<SchemaItem> out;
  for (const auto& it : j) {
    if (it.contains("x")) {
      const auto& x = it.at("x");
      if (!x.is_array() || x.size() != 2) throw ParseError("crossing items are {\"x\": [pos, sign]}");
      out.push_back(SchemaItem::crossing(x[0].get<int>(), x[1].get<int>()));
    } else if (it.contains("b")) {
      out.push_back(SchemaItem::slot(it.at("b").get<std::string>(), it.value("at", 1)));
    } else {
      throw ParseError("schema items are {\"x\": ...} or {\"b\": ...}");
    }
  }
  return out;
}

}  // namespace detail

inline json template_to_json(const Template& t) {
  json j{{"name", t.name},
         {"weights", t.left.strand_weights},
         {"left", detail::schema_to_json(t.left.schema)},
         {"right", detail::schema_to_json(t.right.schema)},
         {"blocks", t.left.block_arities}};
  if (t.right.strand_weights != t.left.strand_weights) j["right_weights"] = t.right.strand_weights;
  return j;
}

inline Template template_from_json(const json& j) {
  return detail::json_guard("template", [&] {
    Template t;
    t.name = j.value("name", std::string("unnamed"));
    t.left.strand_weights = j.at("weights").get<std::vector<int>>();
    t.right.strand_weights = j.contains("right_weights") ? j.at("right_weights").get<std::vector<int>>()
                                                         : t.left.strand_weights;
    t.left.block_arities = j.at("blocks").get<std::map<std::string, int>>();
    t.right.block_arities = t.left.block_arities;
    t.left.schema = detail::schema_from_json(j.at("left"));
    t.right.schema = detail::schema_from_json(j.at("right"));
    try {
      validate(t);
    } catch (const InvalidMove& e) {
      throw ParseError(std::string("invalid template: ") + e.what());
    }
    return t;
  });
}

}  // namespace braidkit
