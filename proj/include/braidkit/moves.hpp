#pragma once

// Markov, exchange and flype moves on closed braids, block-strand templates
// with weighted strands, and replayable move sequences.
//
// Every matcher works on cyclic words: a closed braid is a conjugacy class,
// and a cyclic rotation of a word is a conjugate of it.

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "braidkit/braid_word.hpp"
#include "braidkit/garside.hpp"

namespace braidkit {

// ---------------------------------------------------------------------------
// Stabilization and destabilization

/// w followed by sigma_n^sign, on n+1 strands.
inline BraidWord stabilize(const BraidWord& w, int sign) {
  std::vector<int> ls(w.letters().begin(), w.letters().end());
  const int n = w.strands();
  ls.push_back(sign > 0 ? n : -n);
  return BraidWord(n + 1, std::move(ls));
}

/// core = prefix^-1 w prefix, freely reduced and cyclically reduced.
struct CyclicReduction {
  BraidWord core;
  BraidWord prefix;
};

inline CyclicReduction cyclically_reduce(const BraidWord& w) {
  const BraidWord r = free_reduce(w);
  auto ls = r.letters();
  std::size_t lo = 0;
  std::size_t hi = ls.size();
  while (hi - lo >= 2 && ls[lo] == -ls[hi - 1]) {
    ++lo;
    --hi;
  }
  return {BraidWord(w.strands(), std::vector<int>(ls.begin() + static_cast<std::ptrdiff_t>(lo), ls.begin() + static_cast<std::ptrdiff_t>(hi))),
          BraidWord(w.strands(), std::vector<int>(ls.begin(), ls.begin() + static_cast<std::ptrdiff_t>(lo)))};
}

struct Destabilization {
  /// The destabilized word, on n-1 strands.
  BraidWord word;
  /// g such that conjugate(w, g) == word * sigma_(n-1)^sign literally.
  BraidWord conjugator;
  int sign = 1;
};

/// Replays a destabilization: conjugate(w, g) must contain sigma_(n-1)^+-1
/// exactly once, as its last letter.
inline Destabilization destabilize_with(const BraidWord& w, const BraidWord& g) {
  const int n = w.strands();
  if (n < 2) throw InvalidMove("destabilization needs at least two strands");
  const BraidWord c = conjugate(w, g);
  if (c.empty() || generator_of(c[c.length() - 1]) != n - 1) {
    throw InvalidMove("conjugate does not end in sigma_" + std::to_string(n - 1));
  }
  std::vector<int> body(c.letters().begin(), c.letters().end() - 1);
  for (int l : body) {
    if (generator_of(l) == n - 1) throw InvalidMove("sigma_" + std::to_string(n - 1) + " occurs more than once");
  }
  return {BraidWord(n - 1, std::move(body)), g, sign_of(c[c.length() - 1])};
}

struct DestabilizeOptions {
  /// Conjugators tried: products of up to `depth` simple elements or their
  /// inverses, after the cyclic rotations of the word itself.
  int depth = 2;
  /// 0 accepts either sign; +1 / -1 restricts to that destabilization.
  int sign = 0;
  /// Hard cap on conjugators examined.
  std::size_t max_candidates = 20000;
};

namespace detail {

/// If some cyclic rotation of conjugate(w, h) has the destabilization shape,
/// returns the full conjugator.
inline std::optional<BraidWord> destab_conjugator_for(const BraidWord& w, const BraidWord& h, int want_sign) {
  const int top = w.strands() - 1;
  const auto [core, prefix] = cyclically_reduce(conjugate(w, h));
  std::size_t hits = 0;
  std::size_t at = 0;
  for (std::size_t i = 0; i < core.length(); ++i) {
    if (generator_of(core[i]) == top) {
      ++hits;
      at = i;
    }
  }
  if (hits != 1) return std::nullopt;
  if (want_sign != 0 && sign_of(core[at]) != want_sign) return std::nullopt;
  // rotate core so the single sigma_top letter comes last: conjugate by core[0..at]
  BraidWord lead(w.strands(), std::vector<int>(core.letters().begin(), core.letters().begin() + static_cast<std::ptrdiff_t>(at) + 1));
  return multiply(multiply(h, prefix), lead);
}

}  // namespace detail

/// Bounded search for a conjugate of the form P sigma_(n-1)^+-1 with P in
/// B_(n-1). An empty result is not a proof that w does not destabilize.
inline std::optional<Destabilization> try_destabilize(const BraidWord& w, const DestabilizeOptions& opts = {}) {
  const int n = w.strands();
  if (n < 2) return std::nullopt;
  auto attempt = [&](const BraidWord& h) -> std::optional<Destabilization> {
    if (auto g = detail::destab_conjugator_for(w, h, opts.sign)) return destabilize_with(w, *g);
    return std::nullopt;
  };
  if (auto d = attempt(BraidWord::identity(n))) return d;
  if (opts.depth <= 0) return std::nullopt;

  std::vector<BraidWord> unit;
  {
    std::vector<std::uint8_t> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), std::uint8_t{0});
    while (std::next_permutation(perm.begin(), perm.end()) && unit.size() < opts.max_candidates) {
      const BraidWord s = PermutationBraid(perm).word();
      unit.push_back(s);
      unit.push_back(invert(s));
    }
  }
  std::size_t examined = 1;
  std::vector<BraidWord> layer{BraidWord::identity(n)};
  for (int level = 1; level <= opts.depth; ++level) {
    std::vector<BraidWord> next;
    for (const auto& prev : layer) {
      for (const auto& s : unit) {
        if (++examined > opts.max_candidates) return std::nullopt;
        BraidWord h = multiply(prev, s);
        if (auto d = attempt(h)) return d;
        if (level < opts.depth) next.push_back(std::move(h));
      }
    }
    layer = std::move(next);
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Exchange move

/// rotate_left(w, rotation) = P sigma^sign Q sigma^-sign with sigma = sigma_(n-1)
/// and P, Q free of sigma_(n-1).
struct ExchangeDecomposition {
  std::size_t rotation = 0;
  int sign = 1;
  BraidWord p;
  BraidWord q;

  bool operator==(const ExchangeDecomposition&) const = default;
};

namespace detail {

inline std::optional<ExchangeDecomposition> exchange_at(const BraidWord& w, std::size_t rotation) {
  const int n = w.strands();
  if (n < 3 || w.length() < 2) return std::nullopt;
  const BraidWord r = rotate_left(w, rotation);
  const int top = n - 1;
  std::vector<std::size_t> at;
  for (std::size_t i = 0; i < r.length(); ++i)
    if (generator_of(r[i]) == top) at.push_back(i);
  if (at.size() != 2 || at[1] != r.length() - 1) return std::nullopt;
  if (sign_of(r[at[0]]) == sign_of(r[at[1]])) return std::nullopt;
  auto ls = r.letters();
  return ExchangeDecomposition{
      rotation % w.length(), sign_of(r[at[0]]),
      BraidWord(n - 1, std::vector<int>(ls.begin(), ls.begin() + static_cast<std::ptrdiff_t>(at[0]))),
      BraidWord(n - 1, std::vector<int>(ls.begin() + static_cast<std::ptrdiff_t>(at[0]) + 1, ls.end() - 1))};
}

inline BraidWord splice(int n, std::initializer_list<std::variant<BraidWord, int>> parts) {
  std::vector<int> ls;
  for (const auto& part : parts) {
    if (const auto* w = std::get_if<BraidWord>(&part)) {
      ls.insert(ls.end(), w->letters().begin(), w->letters().end());
    } else {
      ls.push_back(std::get<int>(part));
    }
  }
  return BraidWord(n, std::move(ls));
}

}  // namespace detail

inline std::vector<ExchangeDecomposition> find_exchange_decompositions(const BraidWord& w) {
  std::vector<ExchangeDecomposition> out;
  for (std::size_t r = 0; r < w.length(); ++r) {
    if (auto d = detail::exchange_at(w, r); d && std::find(out.begin(), out.end(), *d) == out.end()) {
      out.push_back(std::move(*d));
    }
  }
  return out;
}

/// P sigma^-sign Q sigma^sign, literally (no reduction).
inline BraidWord apply_exchange(const BraidWord& w, const ExchangeDecomposition& d) {
  auto check = detail::exchange_at(w, d.rotation);
  if (!check || !(*check == d)) throw InvalidMove("exchange decomposition does not match the word");
  const int n = w.strands();
  const int top = n - 1;
  return detail::splice(n, {widen(d.p, n), -d.sign * top, widen(d.q, n), d.sign * top});
}

// ---------------------------------------------------------------------------
// Exchange towers

struct WindingOptions {
  /// Conjugators tried before each exchange: products of up to `depth`
  /// simple elements or their inverses, each also composed with Delta.
  int depth = 1;
  GarsideOptions garside{};
};

struct WindingStep {
  BraidWord word;
  /// conjugate(previous word, conjugator) carries the exchange decomposition.
  BraidWord conjugator;
  ExchangeDecomposition decomposition;
};

namespace detail {

inline BraidWord flip_generators(const BraidWord& w) {
  const int n = w.strands();
  std::vector<int> ls;
  for (int l : w.letters()) ls.push_back(l > 0 ? n - l : -(n + l));
  return BraidWord(n, std::move(ls));
}

inline std::vector<BraidWord> simple_conjugators(int n, int depth) {
  std::vector<BraidWord> unit;
  std::vector<std::uint8_t> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), std::uint8_t{0});
  while (std::next_permutation(perm.begin(), perm.end())) {
    const BraidWord s = PermutationBraid(perm).word();
    unit.push_back(s);
    unit.push_back(invert(s));
  }
  std::vector<BraidWord> out{BraidWord::identity(n)};
  std::vector<BraidWord> layer = out;
  for (int level = 1; level <= depth; ++level) {
    std::vector<BraidWord> next;
    for (const auto& a : layer)
      for (const auto& s : unit) next.push_back(multiply(a, s));
    out.insert(out.end(), next.begin(), next.end());
    layer = std::move(next);
  }
  return out;
}

}  // namespace detail

/// One step of an exchange tower: the first exchange (over the conjugators
/// of `opts`, in order, then over decompositions by rotation) whose result
/// lies in a conjugacy class outside `seen`. Empty if every reachable
/// exchange returns to a known class.
inline std::optional<WindingStep> fresh_exchange(const BraidWord& w, const std::vector<ConjugacyKey>& seen,
                                                 const WindingOptions& opts = {}) {
  const int n = w.strands();
  const BraidWord delta = delta_word(n);
  for (const auto& g : detail::simple_conjugators(n, opts.depth)) {
    // Delta^-1 x Delta is x with every sigma_i replaced by sigma_(n-i)
    for (bool flip : {false, true}) {
      BraidWord x = conjugate(w, g);
      if (flip) x = detail::flip_generators(x);
      const auto [core, prefix] = cyclically_reduce(x);
      for (const auto& d : find_exchange_decompositions(core)) {
        BraidWord r = apply_exchange(core, d);
        const ConjugacyKey k = conjugacy_key(r, opts.garside);
        if (std::find(seen.begin(), seen.end(), k) != seen.end()) continue;
        const BraidWord h = flip ? multiply(g, delta) : g;
        return WindingStep{std::move(r), multiply(h, prefix), d};
      }
    }
  }
  return std::nullopt;
}

/// w_0 = P s Q s^-1 with s = sigma_(n-1), n = strands(P) + 1. Each later
/// iterate is an exchange move applied after a bounded conjugation, at the
/// first decomposition that reaches a conjugacy class not seen before, with
/// the result written P-block first. When no fresh class is reachable the
/// plain exchange of the current word is used. All iterates close to the
/// same link.
inline std::vector<BraidWord> winding_iterates(const BraidWord& p, const BraidWord& q, int k,
                                               const WindingOptions& opts = {}) {
  require_same_strands(p, q);
  const int n = p.strands() + 1;
  const int top = n - 1;
  std::vector<BraidWord> out{detail::splice(n, {widen(p, n), top, widen(q, n), -top})};
  if (k <= 0) return out;
  if (exponent_sum(p) == 0 && exponent_sum(q) == 0 && free_reduce(p).empty() && free_reduce(q).empty()) {
    out.resize(static_cast<std::size_t>(k) + 1, out.front());
    return out;
  }
  std::vector<ConjugacyKey> seen{conjugacy_key(out.front(), opts.garside)};
  for (int i = 0; i < k; ++i) {
    const BraidWord& cur = out.back();
    if (auto step = fresh_exchange(cur, seen, opts)) {
      seen.push_back(conjugacy_key(step->word, opts.garside));
      out.push_back(std::move(step->word));
      continue;
    }
    auto ds = find_exchange_decompositions(cur);
    out.push_back(ds.empty() ? cur : apply_exchange(cur, ds.front()));
  }
  return out;
}

// ---------------------------------------------------------------------------
// 3-braid flypes

/// rotate_left(w, rotation) = s1^p s2^r s1^q s2^sign, all exponents nonzero.
struct FlypeData {
  std::size_t rotation = 0;
  int p_power = 0;
  int r_power = 0;
  int q_power = 0;
  int sign = 1;

  bool operator==(const FlypeData&) const = default;
};

namespace detail {

struct Run {
  int letter;
  int count;
};

inline std::vector<Run> runs_of(const BraidWord& w) {
  std::vector<Run> runs;
  for (int l : w.letters()) {
    if (!runs.empty() && runs.back().letter == l) {
      ++runs.back().count;
    } else {
      runs.push_back({l, 1});
    }
  }
  return runs;
}

inline std::optional<FlypeData> flype_at(const BraidWord& w, std::size_t rotation) {
  if (w.strands() != 3) return std::nullopt;
  const auto runs = runs_of(rotate_left(w, rotation));
  if (runs.size() != 4) return std::nullopt;
  const int expect[4] = {1, 2, 1, 2};
  for (int k = 0; k < 4; ++k)
    if (generator_of(runs[static_cast<std::size_t>(k)].letter) != expect[k]) return std::nullopt;
  if (runs[3].count != 1) return std::nullopt;
  auto power = [](const Run& r) { return r.count * sign_of(r.letter); };
  return FlypeData{rotation % w.length(), power(runs[0]), power(runs[1]), power(runs[2]), sign_of(runs[3].letter)};
}

}  // namespace detail

inline std::vector<FlypeData> all_flype_matches(const BraidWord& w) {
  std::vector<FlypeData> out;
  for (std::size_t r = 0; r < w.length(); ++r) {
    if (auto f = detail::flype_at(w, r)) out.push_back(*f);
  }
  return out;
}

/// First match of s1^p s2^r s1^q s2^eps over the cyclic rotations of w.
inline std::optional<FlypeData> match_flype_3braid(const BraidWord& w) {
  auto all = all_flype_matches(w);
  if (all.empty()) return std::nullopt;
  return all.front();
}

/// s1^p s2^eps s1^q s2^r.
inline BraidWord apply_flype(const FlypeData& f) {
  std::vector<int> ls;
  auto put = [&](int gen, int power) {
    for (int k = 0; k < std::abs(power); ++k) ls.push_back(power > 0 ? gen : -gen);
  };
  put(1, f.p_power);
  put(2, f.sign);
  put(1, f.q_power);
  put(2, f.r_power);
  return BraidWord(3, std::move(ls));
}

/// Applies a flype after checking that `f` really matches `w`.
inline BraidWord apply_flype(const BraidWord& w, const FlypeData& f) {
  auto check = detail::flype_at(w, f.rotation);
  if (!check || !(*check == f)) throw InvalidMove("flype data does not match the word");
  return apply_flype(f);
}

// ---------------------------------------------------------------------------
// Block-strand diagrams and templates

struct SchemaItem {
  enum class Kind { crossing, block };
  Kind kind = Kind::crossing;
  /// Diagram position (1-based): for a crossing, the left of the two
  /// adjacent strands; for a block, its leftmost strand.
  int position = 1;
  int sign = 1;
  std::string block;

  static SchemaItem crossing(int pos, int sign) { return {Kind::crossing, pos, sign, {}}; }
  static SchemaItem slot(std::string id, int pos = 1) { return {Kind::block, pos, 1, std::move(id)}; }

  bool operator==(const SchemaItem&) const = default;
};

struct BlockStrandDiagram {
  std::vector<int> strand_weights;
  std::vector<SchemaItem> schema;
  /// Diagram strands entering each block.
  std::map<std::string, int> block_arities;

  int diagram_strands() const { return static_cast<int>(strand_weights.size()); }
  int total_strands() const {
    int s = 0;
    for (int w : strand_weights) s += w;
    return s;
  }
  bool operator==(const BlockStrandDiagram&) const = default;
};

struct Template {
  std::string name;
  BlockStrandDiagram left;
  BlockStrandDiagram right;

  bool operator==(const Template&) const = default;
};

using BraidingAssignment = std::map<std::string, BraidWord>;

inline void validate(const BlockStrandDiagram& d) {
  const int k = d.diagram_strands();
  if (k < 1) throw InvalidMove("diagram has no strands");
  for (int w : d.strand_weights)
    if (w < 1) throw InvalidMove("strand weights must be positive");
  for (const auto& it : d.schema) {
    if (it.kind == SchemaItem::Kind::crossing) {
      if (it.position < 1 || it.position > k - 1) throw InvalidMove("crossing position out of range");
      if (it.sign != 1 && it.sign != -1) throw InvalidMove("crossing sign must be +-1");
    } else {
      auto a = d.block_arities.find(it.block);
      if (a == d.block_arities.end()) throw InvalidMove("unknown block '" + it.block + "'");
      if (it.position < 1 || it.position + a->second - 1 > k) throw InvalidMove("block '" + it.block + "' does not fit");
    }
  }
}

inline void validate(const Template& t) {
  validate(t.left);
  validate(t.right);
  if (t.left.block_arities != t.right.block_arities) throw InvalidMove("template sides disagree on blocks");
}

namespace detail {

/// Walks a diagram, calling on_crossing(offset, u, v, sign) and
/// on_block(offset, width, id) with global 0-based offsets.
template <typename OnCrossing, typename OnBlock>
void walk_diagram(const BlockStrandDiagram& d, OnCrossing&& on_crossing, OnBlock&& on_block) {
  std::vector<int> order = d.strand_weights;
  auto offset_of = [&](int pos) {
    int off = 0;
    for (int q = 0; q < pos - 1; ++q) off += order[static_cast<std::size_t>(q)];
    return off;
  };
  for (const auto& it : d.schema) {
    if (it.kind == SchemaItem::Kind::crossing) {
      const auto q = static_cast<std::size_t>(it.position - 1);
      on_crossing(offset_of(it.position), order[q], order[q + 1], it.sign);
      std::swap(order[q], order[q + 1]);
    } else {
      const int arity = d.block_arities.at(it.block);
      int width = 0;
      for (int q = it.position - 1; q < it.position - 1 + arity; ++q) width += order[static_cast<std::size_t>(q)];
      on_block(offset_of(it.position), width, it.block);
    }
  }
}

}  // namespace detail

/// The permutation braid carrying a band of u parallel strands across a band
/// of v strands: u*v crossings, all of sign `sign`, on u+v strands.
inline BraidWord band_crossing(int u, int v, int sign) {
  std::vector<std::uint8_t> perm(static_cast<std::size_t>(u + v));
  for (int i = 0; i < u; ++i) perm[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(i + v);
  for (int j = 0; j < v; ++j) perm[static_cast<std::size_t>(u + j)] = static_cast<std::uint8_t>(j);
  BraidWord w = PermutationBraid(std::move(perm)).word();
  return sign > 0 ? w : mirror(w);
}

/// Expanded strand count of each block at its slot(s).
inline std::map<std::string, int> block_widths(const BlockStrandDiagram& d) {
  std::map<std::string, int> widths;
  detail::walk_diagram(
      d, [](int, int, int, int) {},
      [&](int, int width, const std::string& id) {
        auto [it, fresh] = widths.emplace(id, width);
        if (!fresh && it->second != width) throw InvalidMove("block '" + id + "' used with different widths");
      });
  return widths;
}

inline BraidWord expand_weights(const BlockStrandDiagram& d, const BraidingAssignment& a) {
  validate(d);
  std::vector<int> ls;
  detail::walk_diagram(
      d,
      [&](int offset, int u, int v, int sign) {
        for (int l : band_crossing(u, v, sign).letters()) ls.push_back(l > 0 ? l + offset : l - offset);
      },
      [&](int offset, int width, const std::string& id) {
        auto it = a.find(id);
        if (it == a.end()) throw InvalidMove("block '" + id + "' has no braiding assignment");
        if (it->second.strands() != width) {
          throw InvalidMove("block '" + id + "' expects a " + std::to_string(width) + "-strand braid, got " +
                            std::to_string(it->second.strands()));
        }
        for (int l : it->second.letters()) ls.push_back(l > 0 ? l + offset : l - offset);
      });
  return BraidWord(d.total_strands(), std::move(ls));
}

inline std::pair<BraidWord, BraidWord> instantiate_template(const Template& t, const BraidingAssignment& a) {
  validate(t);
  if (block_widths(t.left) != block_widths(t.right)) throw InvalidMove("template sides expand blocks differently");
  return {expand_weights(t.left, a), expand_weights(t.right, a)};
}

// Built-in templates. `w` is the weight of the band that shares a block with
// the moving strand.

inline Template destabilization_template(int sign, int w = 1) {
  Template t;
  t.name = sign > 0 ? "destab+" : "destab-";
  t.left.strand_weights = {w, 1, 1};
  t.left.block_arities = {{"P", 2}};
  t.left.schema = {SchemaItem::slot("P"), SchemaItem::crossing(2, sign)};
  t.right.strand_weights = {w, 1};
  t.right.block_arities = {{"P", 2}};
  t.right.schema = {SchemaItem::slot("P")};
  return t;
}

inline Template exchange_template(int w = 1) {
  Template t;
  t.name = "exchange";
  t.left.strand_weights = {w, 1, 1};
  t.left.block_arities = {{"P", 2}, {"Q", 2}};
  t.right = t.left;
  t.left.schema = {SchemaItem::slot("P"), SchemaItem::crossing(2, 1), SchemaItem::slot("Q"), SchemaItem::crossing(2, -1)};
  t.right.schema = {SchemaItem::slot("P"), SchemaItem::crossing(2, -1), SchemaItem::slot("Q"), SchemaItem::crossing(2, 1)};
  return t;
}

/// P R Q s2^eps <-> P s2^eps Q R on three strands.
inline Template flype_template(int sign) {
  Template t;
  t.name = sign > 0 ? "flype+" : "flype-";
  t.left.strand_weights = {1, 1, 1};
  t.left.block_arities = {{"P", 2}, {"R", 2}, {"Q", 2}};
  t.right = t.left;
  t.left.schema = {SchemaItem::slot("P"), SchemaItem::slot("R", 2), SchemaItem::slot("Q"), SchemaItem::crossing(2, sign)};
  t.right.schema = {SchemaItem::slot("P"), SchemaItem::crossing(2, sign), SchemaItem::slot("Q"), SchemaItem::slot("R", 2)};
  return t;
}

inline std::vector<Template> builtin_templates() {
  return {destabilization_template(1), destabilization_template(-1), exchange_template(), flype_template(1),
          flype_template(-1)};
}

inline std::optional<Template> find_builtin_template(const std::string& name) {
  for (auto& t : builtin_templates())
    if (t.name == name) return t;
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Move sequences

enum class MoveKind { conjugation, stab_pos, stab_neg, destab_pos, destab_neg, exchange, flype_pos, flype_neg };

inline const char* move_name(MoveKind k) {
  switch (k) {
    case MoveKind::conjugation: return "conjugation";
    case MoveKind::stab_pos: return "stab+";
    case MoveKind::stab_neg: return "stab-";
    case MoveKind::destab_pos: return "destab+";
    case MoveKind::destab_neg: return "destab-";
    case MoveKind::exchange: return "exchange";
    case MoveKind::flype_pos: return "flype+";
    case MoveKind::flype_neg: return "flype-";
  }
  return "?";
}

inline std::optional<MoveKind> move_from_name(const std::string& s) {
  for (auto k : {MoveKind::conjugation, MoveKind::stab_pos, MoveKind::stab_neg, MoveKind::destab_pos, MoveKind::destab_neg,
                 MoveKind::exchange, MoveKind::flype_pos, MoveKind::flype_neg}) {
    if (s == move_name(k)) return k;
  }
  return std::nullopt;
}

/// Conjugation and destabilization use `conjugator`; exchange and flype use
/// `rotation`; stabilization uses nothing.
struct MoveParams {
  std::optional<BraidWord> conjugator;
  std::optional<std::size_t> rotation;

  bool operator==(const MoveParams&) const = default;
};

struct MoveStep {
  MoveKind kind = MoveKind::conjugation;
  MoveParams params;
  BraidWord result;

  bool operator==(const MoveStep&) const = default;
};

struct MoveSequence {
  std::vector<MoveStep> steps;

  bool empty() const { return steps.empty(); }
  std::size_t size() const { return steps.size(); }
  bool operator==(const MoveSequence&) const = default;
};

/// Deterministically applies one move; throws InvalidMove if it does not fit.
inline BraidWord apply_move(MoveKind kind, const MoveParams& params, const BraidWord& w) {
  auto need_conj = [&]() -> const BraidWord& {
    if (!params.conjugator) throw InvalidMove(std::string(move_name(kind)) + " needs a conjugator");
    return *params.conjugator;
  };
  auto need_rot = [&]() {
    if (!params.rotation) throw InvalidMove(std::string(move_name(kind)) + " needs a rotation");
    return *params.rotation;
  };
  switch (kind) {
    case MoveKind::conjugation:
      return conjugate(w, need_conj());
    case MoveKind::stab_pos:
      return stabilize(w, 1);
    case MoveKind::stab_neg:
      return stabilize(w, -1);
    case MoveKind::destab_pos:
    case MoveKind::destab_neg: {
      auto d = destabilize_with(w, need_conj());
      if (d.sign != (kind == MoveKind::destab_pos ? 1 : -1)) throw InvalidMove("destabilization has the other sign");
      return d.word;
    }
    case MoveKind::exchange: {
      auto d = detail::exchange_at(w, need_rot());
      if (!d) throw InvalidMove("no exchange decomposition at this rotation");
      return apply_exchange(w, *d);
    }
    case MoveKind::flype_pos:
    case MoveKind::flype_neg: {
      auto f = detail::flype_at(w, need_rot());
      if (!f) throw InvalidMove("no flype match at this rotation");
      if (f->sign != (kind == MoveKind::flype_pos ? 1 : -1)) throw InvalidMove("flype has the other sign");
      return apply_flype(*f);
    }
  }
  throw InvalidMove("unknown move");
}

/// True if `recorded` is an acceptable result of the step from `w`. All moves
/// must reproduce their result letter for letter, except conjugation, whose
/// result may be any word for the braid g^-1 w g.
inline bool step_reproduces(const MoveStep& s, const BraidWord& w) {
  const BraidWord next = apply_move(s.kind, s.params, w);
  if (next == s.result) return true;
  if (s.kind != MoveKind::conjugation || next.strands() != s.result.strands()) return false;
  return left_normal_form(next) == left_normal_form(s.result);
}

/// Re-applies every step from `source` and returns the final recorded word;
/// throws InvalidMove at the first step that does not reproduce its result.
inline BraidWord replay(const BraidWord& source, const MoveSequence& seq) {
  BraidWord cur = source;
  for (std::size_t i = 0; i < seq.steps.size(); ++i) {
    const auto& s = seq.steps[i];
    if (!step_reproduces(s, cur)) {
      throw InvalidMove("step " + std::to_string(i + 1) + " (" + move_name(s.kind) + ") does not reproduce its result");
    }
    cur = s.result;
  }
  return cur;
}

/// Every move applicable to w, each with its result. Stabilizations are
/// always offered; callers filter by bounds.
inline std::vector<MoveStep> enumerate_moves(const BraidWord& w, bool transverse_only,
                                             const DestabilizeOptions& destab = {}) {
  std::vector<MoveStep> out;
  out.push_back({MoveKind::stab_pos, {}, stabilize(w, 1)});
  if (!transverse_only) out.push_back({MoveKind::stab_neg, {}, stabilize(w, -1)});
  DestabilizeOptions dopts = destab;
  for (int sign : {1, -1}) {
    if (transverse_only && sign < 0) continue;
    dopts.sign = sign;
    if (auto d = try_destabilize(w, dopts)) {
      out.push_back({sign > 0 ? MoveKind::destab_pos : MoveKind::destab_neg, {d->conjugator, std::nullopt}, d->word});
    }
  }
  for (const auto& d : find_exchange_decompositions(w)) {
    out.push_back({MoveKind::exchange, {std::nullopt, d.rotation}, apply_exchange(w, d)});
  }
  if (!transverse_only) {
    for (const auto& f : all_flype_matches(w)) {
      out.push_back({f.sign > 0 ? MoveKind::flype_pos : MoveKind::flype_neg, {std::nullopt, f.rotation}, apply_flype(f)});
    }
  }
  return out;
}

}  // namespace braidkit
