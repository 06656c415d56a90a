#pragma once

// Empirical template soundness: both sides of a template must close to the
// same link for every braiding assignment. Random assignments are checked
// against component count, Jones and Alexander polynomials.

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "braidkit/invariants.hpp"
#include "braidkit/moves.hpp"
#include "braidkit/random.hpp"

namespace braidkit {

struct SoundnessFailure {
  BraidingAssignment assignment;
  BraidWord left;
  BraidWord right;
  std::string reason;
};

struct SoundnessReport {
  std::string template_name;
  int trials = 0;
  std::vector<SoundnessFailure> failures;

  bool passed() const { return failures.empty(); }
};

/// Which invariant, if any, tells the two closures apart. Empty if none does.
inline std::string closure_difference(const BraidWord& a, const BraidWord& b, const BracketOptions& opts = {}) {
  if (closure_components(a).count() != closure_components(b).count()) return "component count differs";
  if (!(jones_polynomial(a, opts) == jones_polynomial(b, opts))) return "Jones polynomial differs";
  if (!(alexander_polynomial(a) == alexander_polynomial(b))) return "Alexander polynomial differs";
  return {};
}

inline SoundnessReport template_soundness_check(const Template& t, int trials, std::size_t max_len, std::uint64_t seed,
                                                const BracketOptions& opts = {}) {
  validate(t);
  const auto widths = block_widths(t.left);
  if (widths != block_widths(t.right)) throw InvalidMove("template sides expand blocks differently");
  std::mt19937_64 rng(seed);
  SoundnessReport report{t.name, trials, {}};
  for (int trial = 0; trial < trials; ++trial) {
    BraidingAssignment a;
    for (const auto& [id, width] : widths) a.emplace(id, random_braid_word(width, max_len, rng));
    auto [left, right] = instantiate_template(t, a);
    if (auto why = closure_difference(left, right, opts); !why.empty()) {
      report.failures.push_back({std::move(a), std::move(left), std::move(right), std::move(why)});
    }
  }
  return report;
}

/// Copy of `t` with the sign of the first right-hand crossing flipped; used
/// to check that the soundness fuzzer notices a broken template.
inline Template corrupt_template(Template t) {
  for (auto& item : t.right.schema) {
    if (item.kind == SchemaItem::Kind::crossing) {
      item.sign = -item.sign;
      t.name += " (corrupted)";
      return t;
    }
  }
  throw InvalidMove("template has no right-hand crossing to corrupt");
}

}  // namespace braidkit
