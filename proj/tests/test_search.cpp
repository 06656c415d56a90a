#include <gtest/gtest.h>

#include <random>

#include "braidkit/random.hpp"
#include "braidkit/search.hpp"
#include "braidkit/transverse.hpp"

using namespace braidkit;

namespace {

BraidWord W(const char* text, int n) { return parse_braid_word(text, n); }

std::vector<MoveKind> non_conjugation_kinds(const MoveSequence& seq) {
  std::vector<MoveKind> out;
  for (const auto& s : seq.steps)
    if (s.kind != MoveKind::conjugation) out.push_back(s.kind);
  return out;
}

void expect_valid_path(const BraidWord& source, const BraidWord& target, const SearchResult& r) {
  ASSERT_TRUE(r.found);
  const BraidWord end = replay(source, r.path);
  ASSERT_TRUE(r.witness);
  EXPECT_EQ(end.strands(), target.strands());
  EXPECT_EQ(left_normal_form(conjugate(end, *r.witness)), left_normal_form(target));
}

}  // namespace

TEST(Connect, SingleDestabilization) {
  const auto s = W("s1 s2", 3), t = W("s1", 2);
  const auto r = connect(s, t, {});
  expect_valid_path(s, t, r);
  EXPECT_EQ(non_conjugation_kinds(r.path), std::vector<MoveKind>{MoveKind::destab_pos});
}

TEST(Connect, TrefoilWithExtraStrand) {
  const auto s = W("s1^3 s2", 3), t = W("s1^3", 2);
  const auto r = connect(s, t, {});
  expect_valid_path(s, t, r);
  EXPECT_EQ(non_conjugation_kinds(r.path).size(), 1u);
}

TEST(Connect, SameClassNeedsNoMoves) {
  const auto s = W("s1 s2 s1^-1", 3), t = W("s2", 3);
  const auto r = connect(s, t, {});
  expect_valid_path(s, t, r);
  EXPECT_TRUE(non_conjugation_kinds(r.path).empty());
}

TEST(Connect, DifferentComponentCountsExhaust) {
  SearchBounds b;
  b.max_strands = 3;
  b.max_word_length = 6;
  const auto r = connect(W("s1^2", 2), W("s1^3", 2), b);
  EXPECT_FALSE(r.found);
  EXPECT_FALSE(r.stats.node_cap_hit);
  EXPECT_GT(r.stats.nodes_expanded, 0u);
}

TEST(Connect, BoundsChecked) {
  SearchBounds b;
  b.max_strands = 3;
  EXPECT_THROW(connect(W("s1", 4), W("s1", 2), b), BoundsExceeded);
  b.max_strands = 5;
  b.max_word_length = 2;
  EXPECT_THROW(connect(W("s1^3", 2), W("s1", 2), b), BoundsExceeded);
  b.max_word_length = 10;
  b.max_nodes = 0;
  EXPECT_THROW(connect(W("s1", 2), W("s1", 2), b), BoundsExceeded);
}

TEST(Connect, NodeCapIsReported) {
  SearchBounds b;
  b.max_nodes = 3;
  const auto r = connect(W("s1^2", 2), W("s1^3", 2), b);
  EXPECT_FALSE(r.found);
  EXPECT_TRUE(r.stats.node_cap_hit);
  EXPECT_LE(r.stats.nodes_discovered, 3u);
}

TEST(Connect, ScrambleWithNoMovesIsImmediate) {
  const auto w = W("s1^3 s2^-1 s1", 3);
  const auto [end, seq] = scramble(w, 0, 5);
  EXPECT_EQ(end, w);
  EXPECT_TRUE(seq.empty());
  const auto r = connect(end, w, {});
  EXPECT_TRUE(r.found);
  EXPECT_TRUE(r.path.empty());
}

TEST(Connect, ScrambledWordsReconnect) {
  std::mt19937_64 rng(81);
  SearchBounds b;
  b.max_strands = 4;
  b.max_word_length = 12;
  b.max_nodes = 4000;
  int found = 0;
  for (int k = 0; k < 10; ++k) {
    const auto w = random_braid_word(2 + static_cast<int>(rng() % 2), 6, rng);
    const auto [end, seq] = scramble(w, 3, rng(), b);
    ASSERT_EQ(replay(w, seq), end);
    const auto r = connect(end, w, b);
    if (r.found) {
      ++found;
      expect_valid_path(end, w, r);
    }
  }
  EXPECT_GE(found, 9);
}

TEST(Connect, LargerNodeCapNeverLosesAPath) {
  std::mt19937_64 rng(82);
  SearchBounds b;
  b.max_strands = 4;
  b.max_word_length = 10;
  for (int k = 0; k < 8; ++k) {
    const auto w = random_braid_word(3, 5, rng);
    const auto [end, seq] = scramble(w, 3, rng(), b);
    bool was_found = false;
    for (std::size_t cap : {20u, 200u, 2000u}) {
      b.max_nodes = cap;
      const auto r = connect(end, w, b);
      EXPECT_LE(r.stats.nodes_discovered, cap);
      if (was_found) {
        EXPECT_TRUE(r.found) << cap;
      }
      was_found = was_found || r.found;
    }
  }
}

TEST(Connect, TransversePathsKeepSelfLinking) {
  std::mt19937_64 rng(83);
  SearchBounds b;
  b.move_set = MoveSet::transverse;
  b.max_strands = 4;
  b.max_word_length = 12;
  b.max_nodes = 3000;
  for (int k = 0; k < 10; ++k) {
    const auto w = random_braid_word(2 + static_cast<int>(rng() % 2), 6, rng);
    const auto [end, seq] = scramble(w, 3, rng(), b);
    const auto r = connect(end, w, b);
    if (!r.found) continue;
    expect_valid_path(end, w, r);
    for (const auto& s : r.path.steps) {
      EXPECT_TRUE(is_transverse_move(s));
      EXPECT_EQ(self_linking(s.result), self_linking(w));
    }
  }
}

TEST(Connect, TransverseRefusesNegativeStabilization) {
  SearchBounds b;
  b.move_set = MoveSet::transverse;
  b.max_strands = 3;
  b.max_word_length = 8;
  const auto w = W("s1^3", 2);
  const auto r = connect(w, stabilize(w, -1), b);
  EXPECT_FALSE(r.found);
  const auto t = connect(w, stabilize(w, 1), b);
  EXPECT_TRUE(t.found);
}

TEST(NodeKeys, ConjugatesShareAKey) {
  std::mt19937_64 rng(84);
  for (int k = 0; k < 100; ++k) {
    const auto w = random_braid_word(4, 8, rng);
    const auto v = conjugate(w, random_braid_word(4, 4, rng));
    EXPECT_EQ(node_key(w, {}), node_key(v, {}));
  }
}

TEST(NodeKeys, WeakFallbackUnderTinyCap) {
  GarsideOptions g;
  g.max_set_size = 1;
  const auto k = node_key(parse_braid_word("s1 s2^-1 s3 s2", 4), g);
  EXPECT_TRUE(k.weak);
}
