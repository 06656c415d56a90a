#pragma once

// Self-linking bookkeeping for transverse closed braids.

#include <map>
#include <utility>

#include "braidkit/braid_word.hpp"
#include "braidkit/moves.hpp"

namespace braidkit {

/// Bennequin number e - n of the closed braid (for links, the total).
inline int self_linking(const BraidWord& w) { return exponent_sum(w) - w.strands(); }

struct TransverseInvariants {
  int beta_total = 0;
  /// Component id (1-based, component 1 holds start position 1) -> e(C) - n(C).
  std::map<int, int> per_component;
  /// (c, c') with c < c' -> linking number.
  std::map<std::pair<int, int>, int> pairwise_linking;

  bool operator==(const TransverseInvariants&) const = default;
};

inline TransverseInvariants component_invariants(const BraidWord& w) {
  const ComponentPartition parts = closure_components(w);
  TransverseInvariants out;
  out.beta_total = self_linking(w);
  for (int c = 1; c <= parts.count(); ++c) {
    out.per_component[c] = -static_cast<int>(parts.cycles[static_cast<std::size_t>(c - 1)].size());
  }
  std::map<std::pair<int, int>, int> cross;
  for (const auto& r : crossing_records(w)) {
    const int a = parts.component(r.first);
    const int b = parts.component(r.second);
    if (a == b) {
      out.per_component[a] += r.sign;
    } else {
      cross[{std::min(a, b), std::max(a, b)}] += r.sign;
    }
  }
  for (int a = 1; a <= parts.count(); ++a) {
    for (int b = a + 1; b <= parts.count(); ++b) {
      const int s = cross[{a, b}];
      if (s % 2 != 0) {
        throw ConsistencyError("odd signed crossing count between components " + std::to_string(a) + " and " +
                               std::to_string(b));
      }
      out.pairwise_linking[{a, b}] = s / 2;
    }
  }
  int sum = 0;
  for (auto [c, beta] : out.per_component) sum += beta;
  for (auto [pair, lk] : out.pairwise_linking) sum += 2 * lk;
  if (sum != out.beta_total) throw ConsistencyError("component self-linking numbers do not add up");
  return out;
}

/// Moves realizable by transverse isotopy: braid isotopy, positive
/// (de)stabilization and exchange.
inline bool is_transverse_move(MoveKind kind) {
  switch (kind) {
    case MoveKind::conjugation:
    case MoveKind::stab_pos:
    case MoveKind::destab_pos:
    case MoveKind::exchange:
      return true;
    default:
      return false;
  }
}

inline bool is_transverse_move(const MoveStep& step) { return is_transverse_move(step.kind); }

/// (beta(w), beta(w stabilized negatively)); the second is always 2 less.
inline std::pair<int, int> negative_stabilization_beta_drop(const BraidWord& w) {
  return {self_linking(w), self_linking(stabilize(w, -1))};
}

}  // namespace braidkit
