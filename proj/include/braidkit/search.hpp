#pragma once

// Bounded search over the closed-braid move graph. Nodes are conjugacy
// classes (super summit keys), edges are the implemented moves. The search
// grows one tree from each endpoint, a level at a time, until a class is
// reached from both sides. An exhausted search is not a proof that no
// sequence exists.

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <utility>
#include <vector>

#include "braidkit/garside.hpp"
#include "braidkit/moves.hpp"
#include "braidkit/transverse.hpp"

namespace braidkit {

enum class MoveSet { topological, transverse };

struct SearchBounds {
  int max_strands = 5;
  std::size_t max_word_length = 24;
  std::size_t max_nodes = 10000;
  MoveSet move_set = MoveSet::topological;
  /// Depth of the conjugator search behind destabilization edges.
  int destab_depth = 1;
  GarsideOptions garside{};
};

struct SearchStats {
  std::size_t nodes_discovered = 0;
  std::size_t nodes_expanded = 0;
  std::size_t frontier_peak = 0;
  std::size_t dedup_hits = 0;
  /// Nodes whose super summit set hit the cap and were keyed by normal form only.
  std::size_t weak_keys = 0;
  bool node_cap_hit = false;
};

struct SearchResult {
  bool found = false;
  /// Replays from the source to a word conjugate to the target.
  MoveSequence path;
  /// g with g^-1 (final word) g = target, when found.
  std::optional<BraidWord> witness;
  SearchStats stats;
};

/// Conjugacy-class key for deduplication. Falls back to the normal form of
/// the word when the super summit set is too large.
struct NodeKey {
  bool weak = false;
  ConjugacyKey key;

  bool operator==(const NodeKey&) const = default;
  bool operator<(const NodeKey& o) const {
    if (weak != o.weak) return weak < o.weak;
    return key < o.key;
  }
};

inline NodeKey node_key(const BraidWord& w, const GarsideOptions& opts) {
  try {
    return {false, conjugacy_key(w, opts)};
  } catch (const ResourceCapExceeded&) {
    return {true, ConjugacyKey{{left_normal_form(w)}}};
  }
}

namespace detail {

inline bool within(const BraidWord& w, const SearchBounds& b) {
  return w.strands() <= b.max_strands && w.length() <= b.max_word_length;
}

/// A conjugation step whose recorded result is `to`, a word for the same
/// braid as conjugate(from, g).
inline MoveStep conjugation_step(const BraidWord& g, BraidWord to) {
  return {MoveKind::conjugation, {g, std::nullopt}, std::move(to)};
}

/// Edges out of w. Each edge is a short chain of steps: an optional
/// conjugation to a cyclically reduced rotation of w, then one move.
/// Stabilization is offered at every rotation, since the class of the
/// stabilized braid depends on the representative.
inline std::vector<std::vector<MoveStep>> edges_from(const BraidWord& w, const SearchBounds& b) {
  const bool transverse = b.move_set == MoveSet::transverse;
  std::vector<std::vector<MoveStep>> out;
  const auto [core, prefix] = cyclically_reduce(w);

  // representatives: w itself, then the rotations of its cyclic core
  std::vector<std::pair<BraidWord, std::optional<MoveStep>>> reps{{w, std::nullopt}};
  for (std::size_t r = 0; r < std::max<std::size_t>(core.length(), 1); ++r) {
    BraidWord rot = rotate_left(core, r);
    if (std::any_of(reps.begin(), reps.end(), [&](const auto& x) { return x.first == rot; })) continue;
    BraidWord lead(w.strands(), std::vector<int>(core.letters().begin(), core.letters().begin() + static_cast<std::ptrdiff_t>(r)));
    reps.emplace_back(rot, conjugation_step(multiply(prefix, lead), rot));
  }
  auto chain = [](const std::optional<MoveStep>& pre, MoveStep s) {
    std::vector<MoveStep> c;
    if (pre) c.push_back(*pre);
    c.push_back(std::move(s));
    return c;
  };

  if (w.strands() < b.max_strands) {
    for (const auto& [rep, pre] : reps) {
      out.push_back(chain(pre, {MoveKind::stab_pos, {}, stabilize(rep, 1)}));
      if (!transverse) out.push_back(chain(pre, {MoveKind::stab_neg, {}, stabilize(rep, -1)}));
    }
  }
  DestabilizeOptions d;
  d.depth = b.destab_depth;
  for (int sign : {1, -1}) {
    if (transverse && sign < 0) continue;
    d.sign = sign;
    if (auto r = try_destabilize(w, d)) {
      out.push_back({{sign > 0 ? MoveKind::destab_pos : MoveKind::destab_neg, {r->conjugator, std::nullopt}, r->word}});
    }
  }
  // exchange and flype scan rotations themselves; try w and its cyclic core
  std::vector<std::pair<BraidWord, std::optional<MoveStep>>> cyclic{{w, std::nullopt}};
  if (!(core == w)) cyclic.emplace_back(core, conjugation_step(prefix, core));
  for (const auto& [rep, pre] : cyclic) {
    for (const auto& e : find_exchange_decompositions(rep)) {
      out.push_back(chain(pre, {MoveKind::exchange, {std::nullopt, e.rotation}, apply_exchange(rep, e)}));
    }
    if (!transverse) {
      for (const auto& f : all_flype_matches(rep)) {
        out.push_back(chain(pre, {f.sign > 0 ? MoveKind::flype_pos : MoveKind::flype_neg, {std::nullopt, f.rotation}, apply_flype(f)}));
      }
    }
  }
  std::erase_if(out, [&](const std::vector<MoveStep>& c) { return !within(c.back().result, b); });
  return out;
}

struct SearchNode {
  BraidWord word;
  std::ptrdiff_t parent;
  std::vector<MoveStep> via;
};

struct SearchTree {
  std::vector<SearchNode> nodes;
  std::map<NodeKey, std::size_t> seen;
  std::vector<std::size_t> frontier;
  int beta = 0;

  std::vector<std::size_t> lineage(std::size_t at) const {
    std::vector<std::size_t> out;
    for (std::ptrdiff_t i = static_cast<std::ptrdiff_t>(at); i >= 0; i = nodes[static_cast<std::size_t>(i)].parent) {
      out.push_back(static_cast<std::size_t>(i));
    }
    std::reverse(out.begin(), out.end());
    return out;
  }
};

/// `from` was reached from `to` by one edge. Returns steps leading from
/// `from` back to exactly `to`: an edge into the class of `to`, then a
/// conjugation onto the word itself.
inline std::vector<MoveStep> reverse_edge(const BraidWord& from, const BraidWord& to, const SearchBounds& b) {
  SearchBounds wide = b;
  wide.max_strands = std::max({b.max_strands, from.strands(), to.strands()}) + 1;
  wide.max_word_length = std::max({b.max_word_length, from.length(), to.length()}) + 2;
  for (auto& c : edges_from(from, wide)) {
    const BraidWord& end = c.back().result;
    if (end.strands() != to.strands()) continue;
    auto r = are_conjugate(end, to, b.garside);
    if (!r.conjugate) continue;
    if (!(end == to)) c.push_back(conjugation_step(*r.witness, to));
    return c;
  }
  throw ConsistencyError("search edge from " + to_string(to) + " to " + to_string(from) + " has no reverse");
}

}  // namespace detail

inline SearchResult connect(const BraidWord& source, const BraidWord& target, const SearchBounds& bounds) {
  if (!detail::within(source, bounds) || !detail::within(target, bounds)) {
    throw BoundsExceeded("search endpoints exceed the configured strand or length bounds");
  }
  if (bounds.max_nodes == 0) throw BoundsExceeded("max_nodes must be positive");
  const bool transverse = bounds.move_set == MoveSet::transverse;

  SearchResult result;
  auto& stats = result.stats;
  detail::SearchTree trees[2];
  const BraidWord* roots[2] = {&source, &target};
  for (int side = 0; side < 2; ++side) {
    auto& t = trees[side];
    const NodeKey k = node_key(*roots[side], bounds.garside);
    stats.weak_keys += k.weak;
    t.nodes.push_back({*roots[side], -1, {}});
    t.seen.emplace(k, 0);
    t.frontier = {0};
    t.beta = self_linking(*roots[side]);
    ++stats.nodes_discovered;
  }

  // meeting: forward node f and backward node g hold conjugate words
  auto finish = [&](std::size_t f, std::size_t g) -> bool {
    const BraidWord& a = trees[0].nodes[f].word;
    const BraidWord& z = trees[1].nodes[g].word;
    if (a.strands() != z.strands()) return false;
    auto c = are_conjugate(a, z, bounds.garside);
    if (!c.conjugate) return false;
    std::vector<MoveStep> steps;
    for (std::size_t i : trees[0].lineage(f)) {
      const auto& via = trees[0].nodes[i].via;
      steps.insert(steps.end(), via.begin(), via.end());
    }
    if (!(a == z)) steps.push_back(detail::conjugation_step(*c.witness, z));
    const auto back = trees[1].lineage(g);
    for (std::size_t i = back.size(); i-- > 1;) {
      const auto& child = trees[1].nodes[back[i]].word;
      const auto& parent = trees[1].nodes[back[i - 1]].word;
      auto rev = detail::reverse_edge(child, parent, bounds);
      steps.insert(steps.end(), rev.begin(), rev.end());
    }
    result.path.steps = std::move(steps);
    const BraidWord end = replay(source, result.path);
    auto w = are_conjugate(end, target, bounds.garside);
    if (!w.conjugate) throw ConsistencyError("search path does not end in the target class");
    result.found = true;
    result.witness = w.witness;
    return true;
  };

  if (finish(0, 0)) return result;

  // expand the side with the smaller frontier, one whole level at a time
  while (!trees[0].frontier.empty() || !trees[1].frontier.empty()) {
    int side = 0;
    if (trees[0].frontier.empty() ||
        (!trees[1].frontier.empty() && trees[1].frontier.size() < trees[0].frontier.size())) {
      side = 1;
    }
    auto& t = trees[side];
    auto& other = trees[1 - side];
    stats.frontier_peak = std::max(stats.frontier_peak, t.frontier.size());
    std::vector<std::size_t> next;
    for (std::size_t idx : t.frontier) {
      ++stats.nodes_expanded;
      const BraidWord here = t.nodes[idx].word;
      std::vector<std::pair<NodeKey, std::vector<MoveStep>>> children;
      for (auto& c : detail::edges_from(here, bounds)) {
        if (transverse && self_linking(c.back().result) != t.beta) {
          throw ConsistencyError(std::string("transverse move ") + move_name(c.back().kind) + " changed self-linking");
        }
        NodeKey k = node_key(c.back().result, bounds.garside);
        children.emplace_back(std::move(k), std::move(c));
      }
      std::stable_sort(children.begin(), children.end(),
                       [](const auto& a, const auto& b) { return a.first < b.first; });
      for (auto& [k, c] : children) {
        if (t.seen.count(k)) {
          ++stats.dedup_hits;
          continue;
        }
        if (stats.nodes_discovered >= bounds.max_nodes) {
          stats.node_cap_hit = true;
          return result;
        }
        stats.weak_keys += k.weak;
        const std::size_t child = t.nodes.size();
        BraidWord word = c.back().result;
        t.nodes.push_back({std::move(word), static_cast<std::ptrdiff_t>(idx), std::move(c)});
        t.seen.emplace(k, child);
        ++stats.nodes_discovered;
        if (auto hit = other.seen.find(k); hit != other.seen.end()) {
          const bool done = side == 0 ? finish(child, hit->second) : finish(hit->second, child);
          if (done) return result;
        }
        next.push_back(child);
      }
    }
    t.frontier = std::move(next);
  }
  return result;
}

/// Applies k random legal moves (plus random single-generator conjugations)
/// within `bounds`. Returns the final word and the sequence that produced it.
inline std::pair<BraidWord, MoveSequence> scramble(const BraidWord& w, int k, std::uint64_t seed,
                                                   const SearchBounds& bounds = {}) {
  std::mt19937_64 rng(seed);
  BraidWord cur = w;
  MoveSequence seq;
  DestabilizeOptions d;
  d.depth = bounds.destab_depth;
  for (int step = 0; step < k; ++step) {
    std::vector<MoveStep> options = enumerate_moves(cur, bounds.move_set == MoveSet::transverse, d);
    std::erase_if(options, [&](const MoveStep& s) { return !detail::within(s.result, bounds); });
    if (cur.strands() >= 2) {
      const int g = std::uniform_int_distribution<int>(1, cur.strands() - 1)(rng);
      const int sgn = std::uniform_int_distribution<int>(0, 1)(rng) ? 1 : -1;
      BraidWord by(cur.strands(), {sgn * g});
      BraidWord res = conjugate(cur, by);
      if (detail::within(res, bounds)) options.push_back({MoveKind::conjugation, {by, std::nullopt}, std::move(res)});
    }
    if (options.empty()) break;
    // choose a move kind first so that rarer kinds are not drowned out
    std::map<MoveKind, std::vector<std::size_t>> by_kind;
    for (std::size_t i = 0; i < options.size(); ++i) by_kind[options[i].kind].push_back(i);
    auto kind_it = by_kind.begin();
    std::advance(kind_it, std::uniform_int_distribution<std::size_t>(0, by_kind.size() - 1)(rng));
    const auto& pool = kind_it->second;
    MoveStep chosen = options[pool[std::uniform_int_distribution<std::size_t>(0, pool.size() - 1)(rng)]];
    cur = chosen.result;
    seq.steps.push_back(std::move(chosen));
  }
  return {cur, seq};
}

}  // namespace braidkit
