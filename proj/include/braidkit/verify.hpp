#pragma once

// End-to-end reproduction of the computations that separate the transverse
// closures of s1^5 s2^4 s1^6 s2^-1 and s1^5 s2^-1 s1^6 s2^4.

#include <chrono>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "braidkit/garside.hpp"
#include "braidkit/invariants.hpp"
#include "braidkit/moves.hpp"
#include "braidkit/random.hpp"
#include "braidkit/search.hpp"
#include "braidkit/transverse.hpp"

namespace braidkit {

struct VerifyItem {
  char id = 'a';
  std::string label;
  bool passed = false;
  std::string detail;
  double seconds = 0;
};

struct VerifyReport {
  std::vector<VerifyItem> items;

  bool passed() const {
    for (const auto& i : items)
      if (!i.passed) return false;
    return true;
  }
  const VerifyItem* first_failure() const {
    for (const auto& i : items)
      if (!i.passed) return &i;
    return nullptr;
  }
};

struct VerifyOptions {
  std::uint64_t seed = 1;
  unsigned threads = 1;
  /// Random transverse move sequences checked in item (g).
  int beta_trials = 1000;
  std::size_t search_nodes = 100000;
};

inline BraidWord tx_plus() { return parse_braid_word("s1^5 s2^4 s1^6 s2^-1", 3); }
inline BraidWord tx_minus() { return parse_braid_word("s1^5 s2^-1 s1^6 s2^4", 3); }
inline BraidWord link_pre_flype() { return parse_braid_word("s1^3 s2^4 s1^-5 s2^-1", 3); }
inline BraidWord link_post_flype() { return parse_braid_word("s1^3 s2^-1 s1^-5 s2^4", 3); }

namespace detail {

inline std::string pair_text(int a, int b) { return "(" + std::to_string(a) + "," + std::to_string(b) + ")"; }

/// Random words under random transverse move sequences; returns the number
/// of sequences along which self-linking changed.
inline int beta_drift_count(int trials, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  SearchBounds b;
  b.move_set = MoveSet::transverse;
  b.max_strands = 5;
  b.max_word_length = 20;
  b.destab_depth = 1;
  int bad = 0;
  for (int t = 0; t < trials; ++t) {
    const int n = std::uniform_int_distribution<int>(1, 4)(rng);
    const BraidWord w = random_braid_word(n, 12, rng);
    const int k = std::uniform_int_distribution<int>(1, 6)(rng);
    const auto [end, seq] = scramble(w, k, rng(), b);
    const int beta = self_linking(w);
    bool ok = replay(w, seq) == end;
    for (const auto& s : seq.steps) ok = ok && is_transverse_move(s) && self_linking(s.result) == beta;
    bad += !ok;
  }
  return bad;
}

inline int negative_stabilization_misses(int trials, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  int bad = 0;
  for (int t = 0; t < trials; ++t) {
    const BraidWord w = random_braid_word(std::uniform_int_distribution<int>(1, 4)(rng), 12, rng);
    const auto [before, after] = negative_stabilization_beta_drop(w);
    bad += after != before - 2;
  }
  return bad;
}

}  // namespace detail

inline VerifyReport verify_paper(const VerifyOptions& opts = {}) {
  VerifyReport report;
  const BraidWord plus = tx_plus(), minus = tx_minus();
  auto run = [&](char id, std::string label, auto&& body) {
    VerifyItem item{id, std::move(label), false, {}, 0};
    const auto t0 = std::chrono::steady_clock::now();
    try {
      body(item);
    } catch (const Error& e) {
      item.passed = false;
      item.detail = std::string("error: ") + e.what();
    }
    item.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    report.items.push_back(std::move(item));
  };

  run('a', "exponent sum and braid index", [&](VerifyItem& it) {
    const int e1 = exponent_sum(plus), e2 = exponent_sum(minus);
    it.passed = e1 == 14 && e2 == 14 && plus.strands() == 3 && minus.strands() == 3;
    it.detail = "e = " + std::to_string(e1) + "/" + std::to_string(e2) + ", n = " + std::to_string(plus.strands()) + "/" +
                std::to_string(minus.strands());
  });
  run('b', "self-linking number", [&](VerifyItem& it) {
    const int b1 = self_linking(plus), b2 = self_linking(minus);
    it.passed = b1 == 11 && b2 == 11;
    it.detail = "beta = " + std::to_string(b1) + "/" + std::to_string(b2);
  });
  run('c', "negative flype", [&](VerifyItem& it) {
    const auto f = match_flype_3braid(plus);
    it.passed = f && f->sign == -1 && apply_flype(*f) == minus;
    it.detail = f ? to_string(plus) + " -> " + to_string(apply_flype(*f)) : "no flype match";
  });
  run('d', "Jones and Alexander agree", [&](VerifyItem& it) {
    BracketOptions bo;
    bo.threads = opts.threads;
    const auto j1 = jones_polynomial(plus, bo), j2 = jones_polynomial(minus, bo);
    const auto a1 = alexander_polynomial(plus), a2 = alexander_polynomial(minus);
    it.passed = j1 == j2 && a1 == a2;
    it.detail = "V = " + j1.to_string("q") + "; Delta = " + a1.poly.to_string("t");
  });
  run('e', "not conjugate in B3", [&](VerifyItem& it) {
    const auto r = are_conjugate(plus, minus);
    it.passed = !r.conjugate;
    it.detail = r.conjugate ? "conjugate" : "not conjugate";
  });
  run('f', "two-component obstruction", [&](VerifyItem& it) {
    const auto pre = component_invariants(link_pre_flype());
    const auto post = component_invariants(link_post_flype());
    const int comps = closure_components(link_pre_flype()).count();
    const bool shape = comps == 2 && pre.per_component.size() == 2 && post.per_component.size() == 2;
    it.passed = shape && pre.per_component.at(1) == -1 && pre.per_component.at(2) == -3 &&
                post.per_component.at(1) == -3 && post.per_component.at(2) == -1 &&
                pre.pairwise_linking.at({1, 2}) == 1 && post.pairwise_linking.at({1, 2}) == 1;
    if (shape) {
      it.detail = "components " + std::to_string(comps) + ", beta " +
                  detail::pair_text(pre.per_component.at(1), pre.per_component.at(2)) + " -> " +
                  detail::pair_text(post.per_component.at(1), post.per_component.at(2)) + ", lk " +
                  std::to_string(pre.pairwise_linking.at({1, 2})) + "/" +
                  std::to_string(post.pairwise_linking.at({1, 2}));
    } else {
      it.detail = "components " + std::to_string(comps);
    }
  });
  run('g', "self-linking under transverse moves", [&](VerifyItem& it) {
    const int bad = detail::beta_drift_count(opts.beta_trials, opts.seed);
    it.passed = bad == 0;
    it.detail = std::to_string(opts.beta_trials - bad) + "/" + std::to_string(opts.beta_trials) + " sequences constant";
  });
  run('h', "negative stabilization drops self-linking by 2", [&](VerifyItem& it) {
    const auto [b0, b1] = negative_stabilization_beta_drop(plus);
    const int misses = detail::negative_stabilization_misses(opts.beta_trials, opts.seed + 1);
    it.passed = b0 == 11 && b1 == 9 && misses == 0;
    it.detail = std::to_string(b0) + " -> " + std::to_string(b1) + "; " + std::to_string(misses) + " misses in " +
                std::to_string(opts.beta_trials) + " random words";
  });
  run('i', "bounded transverse search exhausts", [&](VerifyItem& it) {
    SearchBounds b;
    b.move_set = MoveSet::transverse;
    b.max_strands = 4;
    b.max_word_length = 24;
    b.max_nodes = opts.search_nodes;
    const auto r = connect(plus, minus, b);
    it.passed = !r.found && !r.stats.node_cap_hit;
    it.detail = std::string(r.found ? "found" : r.stats.node_cap_hit ? "node cap hit" : "exhausted") + " after " +
                std::to_string(r.stats.nodes_discovered) + " nodes (evidence, not proof)";
  });
  return report;
}

}  // namespace braidkit
