#include <gtest/gtest.h>

#include <random>

#include "braidkit/braid_word.hpp"
#include "braidkit/random.hpp"
#include "oracles.hpp"

using namespace braidkit;

namespace {

BraidWord W(const char* text, int n) { return parse_braid_word(text, n); }

std::multiset<std::tuple<int, int, int>> record_multiset(const BraidWord& w) {
  std::multiset<std::tuple<int, int, int>> out;
  for (const auto& r : crossing_records(w)) out.emplace(std::min(r.first, r.second), std::max(r.first, r.second), r.sign);
  return out;
}

}  // namespace

TEST(Parse, ReadsRunLengthTokens) {
  const auto w = W("s1^5 s2^4 s1^6 s2^-1", 3);
  EXPECT_EQ(w.length(), 16u);
  const std::vector<int> expect{1, 1, 1, 1, 1, 2, 2, 2, 2, 1, 1, 1, 1, 1, 1, -2};
  EXPECT_EQ(std::vector<int>(w.letters().begin(), w.letters().end()), expect);
}

TEST(Parse, EmptyTextIsIdentity) {
  const auto w = W("", 4);
  EXPECT_TRUE(w.empty());
  EXPECT_EQ(w.strands(), 4);
}

TEST(Parse, RejectsOutOfRangeIndex) { EXPECT_THROW(W("s3 s1", 3), ParseError); }

TEST(Parse, RejectsMalformedTokens) {
  for (const char* bad : {"s", "x1", "s1^", "s1^0", "s0", "s1^a", "s-1", "s1^2^3"}) {
    EXPECT_THROW(W(bad, 3), ParseError) << bad;
  }
}

TEST(Parse, RoundTripsThroughText) {
  std::mt19937_64 rng(11);
  for (int k = 0; k < 200; ++k) {
    const auto w = random_braid_word(4, 12, rng);
    EXPECT_EQ(parse_braid_word(to_string(w), 4), w);
  }
}

TEST(Construction, RejectsBadLetters) {
  EXPECT_THROW(BraidWord(3, {0}), ParseError);
  EXPECT_THROW(BraidWord(3, {3}), ParseError);
  EXPECT_THROW(BraidWord(0, {}), ParseError);
}

TEST(ExponentSum, TransversePairWords) {
  EXPECT_EQ(exponent_sum(W("s1^5 s2^4 s1^6 s2^-1", 3)), 14);
  EXPECT_EQ(exponent_sum(W("s1^5 s2^-1 s1^6 s2^4", 3)), 14);
  EXPECT_EQ(exponent_sum(BraidWord::identity(3)), 0);
}

TEST(GroupOps, Examples) {
  EXPECT_TRUE(multiply(W("s1", 2), W("s1^-1", 2)).empty());
  EXPECT_EQ(invert(W("s1 s2", 3)), W("s2^-1 s1^-1", 3));
  EXPECT_EQ(conjugate(W("s1", 3), W("s2", 3)), W("s2^-1 s1 s2", 3));
  EXPECT_THROW(multiply(W("s1", 2), W("s1", 3)), StrandMismatch);
}

TEST(GroupOps, WordTimesInverseIsEmpty) {
  std::mt19937_64 rng(12);
  for (int k = 0; k < 300; ++k) {
    const auto w = random_braid_word(5, 15, rng);
    EXPECT_TRUE(multiply(w, invert(w)).empty());
    EXPECT_TRUE(multiply(invert(w), w).empty());
  }
}

TEST(GroupOps, ConjugationKeepsExponentSum) {
  std::mt19937_64 rng(13);
  for (int k = 0; k < 300; ++k) {
    const auto w = random_braid_word(4, 12, rng);
    const auto g = random_braid_word(4, 8, rng);
    EXPECT_EQ(exponent_sum(conjugate(w, g)), exponent_sum(w));
  }
}

TEST(GroupOps, ConjugateIsSameBraidAsProduct) {
  std::mt19937_64 rng(14);
  for (int k = 0; k < 100; ++k) {
    const auto w = random_braid_word(4, 8, rng);
    const auto g = random_braid_word(4, 5, rng);
    EXPECT_TRUE(oracle::same_braid(conjugate(w, g), concatenate(concatenate(invert(g), w), g)));
  }
}

TEST(Permutation, Examples) {
  EXPECT_EQ(underlying_permutation(W("s1", 3)).images(), (std::vector<int>{2, 1, 3}));
  EXPECT_EQ(underlying_permutation(BraidWord::identity(3)).images(), (std::vector<int>{1, 2, 3}));
  EXPECT_EQ(underlying_permutation(W("s1^3 s2^4 s1^-5 s2^-1", 3)).images(), (std::vector<int>{1, 3, 2}));
}

TEST(Permutation, IsHomomorphism) {
  std::mt19937_64 rng(15);
  for (int k = 0; k < 300; ++k) {
    const auto u = random_braid_word(5, 10, rng);
    const auto v = random_braid_word(5, 10, rng);
    EXPECT_EQ(underlying_permutation(concatenate(u, v)).images(),
              underlying_permutation(u).then(underlying_permutation(v)).images());
  }
}

TEST(Permutation, RejectsNonBijection) { EXPECT_THROW(Permutation(std::vector<int>{1, 1, 3}), Error); }

TEST(Components, Examples) {
  EXPECT_EQ(closure_components(BraidWord::identity(3)).count(), 3);
  EXPECT_EQ(closure_components(W("s1 s2", 3)).count(), 1);
  const auto c = closure_components(W("s1^3 s2^4 s1^-5 s2^-1", 3));
  ASSERT_EQ(c.count(), 2);
  EXPECT_EQ(c.cycles[0], (std::vector<int>{1}));
  EXPECT_EQ(c.cycles[1], (std::vector<int>{2, 3}));
  EXPECT_EQ(c.component(1), 1);
  EXPECT_EQ(c.component(3), 2);
}

TEST(Components, PartitionPositions) {
  std::mt19937_64 rng(16);
  for (int k = 0; k < 200; ++k) {
    const auto w = random_braid_word(6, 10, rng);
    const auto c = closure_components(w);
    std::vector<int> all;
    for (const auto& cyc : c.cycles) all.insert(all.end(), cyc.begin(), cyc.end());
    std::sort(all.begin(), all.end());
    std::vector<int> expect(6);
    std::iota(expect.begin(), expect.end(), 1);
    EXPECT_EQ(all, expect);
    EXPECT_EQ(c.component(1), 1);
    for (std::size_t i = 1; i < c.cycles.size(); ++i) EXPECT_LT(c.cycles[i - 1].front(), c.cycles[i].front());
  }
}

TEST(CrossingRecords, Examples) {
  auto one = crossing_records(W("s1", 2));
  ASSERT_EQ(one.size(), 1u);
  EXPECT_EQ(std::minmax(one[0].first, one[0].second), std::minmax(1, 2));
  EXPECT_EQ(one[0].sign, 1);

  for (const auto& r : crossing_records(W("s1^3", 2))) {
    EXPECT_EQ(std::minmax(r.first, r.second), std::minmax(1, 2));
    EXPECT_EQ(r.sign, 1);
  }

  std::multiset<std::tuple<int, int, int>> expect;
  for (int k = 0; k < 3; ++k) expect.emplace(1, 2, 1);
  for (int k = 0; k < 4; ++k) expect.emplace(1, 3, 1);
  for (int k = 0; k < 5; ++k) expect.emplace(1, 2, -1);
  expect.emplace(2, 3, -1);
  EXPECT_EQ(record_multiset(W("s1^3 s2^4 s1^-5 s2^-1", 3)), expect);
}

// Independent attribution: follow each strand by its own path.
TEST(CrossingRecords, AgreeWithStrandPaths) {
  std::mt19937_64 rng(17);
  for (int k = 0; k < 200; ++k) {
    const auto w = random_braid_word(5, 12, rng);
    const int n = w.strands();
    std::vector<int> pos(static_cast<std::size_t>(n));
    std::iota(pos.begin(), pos.end(), 1);  // pos[s-1] = current position of strand starting at s
    std::multiset<std::tuple<int, int, int>> expect;
    for (int l : w.letters()) {
      const int i = std::abs(l);
      int a = 0, b = 0;
      for (int s = 1; s <= n; ++s) {
        if (pos[static_cast<std::size_t>(s - 1)] == i) a = s;
        if (pos[static_cast<std::size_t>(s - 1)] == i + 1) b = s;
      }
      expect.emplace(std::min(a, b), std::max(a, b), l > 0 ? 1 : -1);
      std::swap(pos[static_cast<std::size_t>(a - 1)], pos[static_cast<std::size_t>(b - 1)]);
    }
    EXPECT_EQ(record_multiset(w), expect);
  }
}

TEST(CrossingRecords, SignSumAndCounts) {
  std::mt19937_64 rng(18);
  for (int k = 0; k < 200; ++k) {
    const auto w = random_braid_word(4, 14, rng);
    const auto recs = crossing_records(w);
    ASSERT_EQ(recs.size(), w.length());
    int sum = 0;
    for (const auto& r : recs) sum += r.sign;
    EXPECT_EQ(sum, exponent_sum(w));
    const auto parts = closure_components(w);
    std::size_t self = 0, cross = 0;
    for (const auto& r : recs) (parts.component(r.first) == parts.component(r.second) ? self : cross)++;
    EXPECT_EQ(self + cross, w.length());
  }
}

TEST(WordOps, RotateWidenMirror) {
  const auto w = W("s1 s2^-1 s1", 3);
  EXPECT_EQ(rotate_left(w, 1), W("s2^-1 s1 s1", 3));
  EXPECT_EQ(rotate_left(w, 3), w);
  EXPECT_EQ(widen(w, 5).strands(), 5);
  EXPECT_EQ(mirror(w), W("s1^-1 s2 s1^-1", 3));
  EXPECT_THROW(widen(w, 2), StrandMismatch);
}

TEST(WordOps, ToStringGroupsRuns) {
  EXPECT_EQ(to_string(W("s1 s1 s1 s2^-1", 3)), "s1^3 s2^-1");
  EXPECT_EQ(to_string(BraidWord::identity(2)), "");
}
