#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "braidkit/braid_word.hpp"

namespace braidkit {

/// Uniform random word on n strands with length uniform in [0, max_len].
/// Words on one strand are always empty.
template <typename Rng>
BraidWord random_braid_word(int n, std::size_t max_len, Rng& rng) {
  if (n < 2) return BraidWord::identity(std::max(n, 1));
  const auto len = std::uniform_int_distribution<std::size_t>(0, max_len)(rng);
  std::uniform_int_distribution<int> gen(1, n - 1);
  std::uniform_int_distribution<int> coin(0, 1);
  std::vector<int> ls;
  ls.reserve(len);
  for (std::size_t i = 0; i < len; ++i) {
    const int g = gen(rng);
    ls.push_back(coin(rng) ? g : -g);
  }
  return BraidWord(n, std::move(ls));
}

}  // namespace braidkit
