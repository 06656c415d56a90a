#pragma once

// Braid words in the Artin generators, the group operations on them, and the
// strand bookkeeping of their closures.
//
// A letter is a nonzero int: +i is sigma_i, -i is sigma_i^-1. Strand positions
// are 1-based and a word is read left to right.

#include <algorithm>
#include <cctype>
#include <charconv>
#include <compare>
#include <cstdlib>
#include <numeric>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "braidkit/errors.hpp"

namespace braidkit {

inline int generator_of(int letter) { return std::abs(letter); }
inline int sign_of(int letter) { return letter > 0 ? 1 : -1; }

class BraidWord {
 public:
  BraidWord() = default;

  explicit BraidWord(int n_strands, std::vector<int> letters = {})
      : n_(n_strands), letters_(std::move(letters)) {
    if (n_ < 1) throw ParseError("braid word needs at least one strand");
    for (int l : letters_) {
      if (l == 0 || generator_of(l) > n_ - 1) {
        throw ParseError("generator index " + std::to_string(generator_of(l)) +
                         " invalid for n=" + std::to_string(n_));
      }
    }
  }

  static BraidWord identity(int n_strands) { return BraidWord(n_strands); }

  int strands() const { return n_; }
  const std::vector<int>& letters() const& { return letters_; }
  std::vector<int> letters() && { return std::move(letters_); }
  std::size_t length() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  int operator[](std::size_t i) const { return letters_[i]; }

  auto operator<=>(const BraidWord&) const = default;

 private:
  int n_ = 1;
  std::vector<int> letters_;
};

/// Parses whitespace-separated tokens `s<i>` or `s<i>^<k>` (k != 0).
inline BraidWord parse_braid_word(std::string_view text, int n) {
  std::vector<int> letters;
  std::size_t pos = 0;
  auto fail = [&](const std::string& why) -> ParseError {
    return ParseError("braid word syntax error: " + why + " in '" + std::string(text) + "'");
  };
  auto read_int = [&](std::string_view tok, const char* what) {
    int value = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (ec != std::errc() || ptr != tok.data() + tok.size()) {
      throw fail(std::string("bad ") + what + " '" + std::string(tok) + "'");
    }
    return value;
  };
  while (pos < text.size()) {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos >= text.size()) break;
    std::size_t end = pos;
    while (end < text.size() && !std::isspace(static_cast<unsigned char>(text[end]))) ++end;
    std::string_view tok = text.substr(pos, end - pos);
    pos = end;

    if (tok.size() < 2 || (tok[0] != 's' && tok[0] != 'S')) throw fail("unexpected token '" + std::string(tok) + "'");
    tok.remove_prefix(1);
    int power = 1;
    if (auto caret = tok.find('^'); caret != std::string_view::npos) {
      power = read_int(tok.substr(caret + 1), "exponent");
      if (power == 0) throw fail("zero exponent");
      tok = tok.substr(0, caret);
    }
    if (!tok.empty() && tok[0] == '+') throw fail("sign on generator index");
    int index = read_int(tok, "generator index");
    if (index < 1 || index > n - 1) {
      throw ParseError("index " + std::to_string(index) + " invalid for n=" + std::to_string(n));
    }
    int letter = power > 0 ? index : -index;
    for (int k = 0; k < std::abs(power); ++k) letters.push_back(letter);
  }
  return BraidWord(n, std::move(letters));
}

/// Run-length form, e.g. "s1^5 s2^4 s1^6 s2^-1". The identity prints as "".
inline std::string to_string(const BraidWord& w) {
  std::string out;
  auto ls = w.letters();
  for (std::size_t i = 0; i < ls.size();) {
    std::size_t j = i;
    while (j < ls.size() && ls[j] == ls[i]) ++j;
    int run = static_cast<int>(j - i) * sign_of(ls[i]);
    if (!out.empty()) out += ' ';
    out += 's' + std::to_string(generator_of(ls[i]));
    if (run != 1) out += '^' + std::to_string(run);
    i = j;
  }
  return out;
}

inline int exponent_sum(const BraidWord& w) {
  int e = 0;
  for (int l : w.letters()) e += sign_of(l);
  return e;
}

/// Cancels adjacent sigma_i sigma_i^-1 pairs until none remain.
inline BraidWord free_reduce(const BraidWord& w) {
  std::vector<int> out;
  out.reserve(w.length());
  for (int l : w.letters()) {
    if (!out.empty() && out.back() == -l) {
      out.pop_back();
    } else {
      out.push_back(l);
    }
  }
  return BraidWord(w.strands(), std::move(out));
}

inline void require_same_strands(const BraidWord& u, const BraidWord& v) {
  if (u.strands() != v.strands()) throw StrandMismatch(u.strands(), v.strands());
}

inline BraidWord concatenate(const BraidWord& u, const BraidWord& v) {
  require_same_strands(u, v);
  std::vector<int> ls(u.letters().begin(), u.letters().end());
  ls.insert(ls.end(), v.letters().begin(), v.letters().end());
  return BraidWord(u.strands(), std::move(ls));
}

inline BraidWord multiply(const BraidWord& u, const BraidWord& v) { return free_reduce(concatenate(u, v)); }

inline BraidWord invert(const BraidWord& w) {
  std::vector<int> ls;
  ls.reserve(w.length());
  for (auto it = w.letters().rbegin(); it != w.letters().rend(); ++it) ls.push_back(-*it);
  return free_reduce(BraidWord(w.strands(), std::move(ls)));
}

/// g^-1 w g, freely reduced.
inline BraidWord conjugate(const BraidWord& w, const BraidWord& g) {
  require_same_strands(w, g);
  return free_reduce(concatenate(concatenate(invert(g), w), g));
}

/// Same word viewed in B_m for m >= n (letters untouched).
inline BraidWord widen(const BraidWord& w, int m) {
  if (m < w.strands()) throw StrandMismatch(w.strands(), m);
  return BraidWord(m, std::vector<int>(w.letters().begin(), w.letters().end()));
}

/// Moves the first `k` letters to the end.
inline BraidWord rotate_left(const BraidWord& w, std::size_t k) {
  std::vector<int> ls(w.letters().begin(), w.letters().end());
  if (!ls.empty()) std::rotate(ls.begin(), ls.begin() + static_cast<std::ptrdiff_t>(k % ls.size()), ls.end());
  return BraidWord(w.strands(), std::move(ls));
}

inline BraidWord mirror(const BraidWord& w) {
  std::vector<int> ls;
  for (int l : w.letters()) ls.push_back(-l);
  return BraidWord(w.strands(), std::move(ls));
}

// ---------------------------------------------------------------------------
// Permutations

/// Position map of a braid: image(p) is where the strand starting at p ends.
/// Positions are 1-based at the interface.
class Permutation {
 public:
  explicit Permutation(int n = 1) : images_(static_cast<std::size_t>(n)) {
    std::iota(images_.begin(), images_.end(), 1);
  }
  explicit Permutation(std::vector<int> images) : images_(std::move(images)) {
    std::vector<bool> seen(images_.size() + 1, false);
    for (int v : images_) {
      if (v < 1 || v > size() || seen[static_cast<std::size_t>(v)]) throw ParseError("not a permutation");
      seen[static_cast<std::size_t>(v)] = true;
    }
  }

  int size() const { return static_cast<int>(images_.size()); }
  int image(int position) const { return images_[static_cast<std::size_t>(position - 1)]; }
  const std::vector<int>& images() const { return images_; }

  /// First this, then `after`.
  Permutation then(const Permutation& after) const {
    std::vector<int> out(images_.size());
    for (std::size_t p = 0; p < images_.size(); ++p) out[p] = after.image(images_[p]);
    return Permutation(std::move(out));
  }

  auto operator<=>(const Permutation&) const = default;

 private:
  std::vector<int> images_;
};

inline Permutation underlying_permutation(const BraidWord& w) {
  // arrangement[q] = start position of the strand currently at position q
  std::vector<int> arrangement(static_cast<std::size_t>(w.strands()));
  std::iota(arrangement.begin(), arrangement.end(), 1);
  for (int l : w.letters()) {
    auto i = static_cast<std::size_t>(generator_of(l) - 1);
    std::swap(arrangement[i], arrangement[i + 1]);
  }
  std::vector<int> images(arrangement.size());
  for (std::size_t q = 0; q < arrangement.size(); ++q) images[static_cast<std::size_t>(arrangement[q] - 1)] = static_cast<int>(q) + 1;
  return Permutation(std::move(images));
}

// ---------------------------------------------------------------------------
// Closure components

struct ComponentPartition {
  /// cycles[c] lists the start positions of component c+1, ascending.
  std::vector<std::vector<int>> cycles;
  /// component_of[p-1] is the 1-based component id of start position p.
  std::vector<int> component_of;

  int count() const { return static_cast<int>(cycles.size()); }
  int component(int position) const { return component_of[static_cast<std::size_t>(position - 1)]; }

  bool operator==(const ComponentPartition&) const = default;
};

/// Cycles of the closure permutation, numbered by least start position, so
/// component 1 always contains position 1.
inline ComponentPartition closure_components(const BraidWord& w) {
  const Permutation perm = underlying_permutation(w);
  const int n = w.strands();
  ComponentPartition out;
  out.component_of.assign(static_cast<std::size_t>(n), 0);
  for (int start = 1; start <= n; ++start) {
    if (out.component_of[static_cast<std::size_t>(start - 1)] != 0) continue;
    std::vector<int> cycle;
    const int id = out.count() + 1;
    for (int p = start; out.component_of[static_cast<std::size_t>(p - 1)] == 0; p = perm.image(p)) {
      out.component_of[static_cast<std::size_t>(p - 1)] = id;
      cycle.push_back(p);
    }
    std::sort(cycle.begin(), cycle.end());
    out.cycles.push_back(std::move(cycle));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Crossing attribution

/// One crossing: the start positions of the two strands that meet there
/// (first < second) and the crossing sign.
struct CrossingRecord {
  int first = 0;
  int second = 0;
  int sign = 1;

  bool operator==(const CrossingRecord&) const = default;
};

inline std::vector<CrossingRecord> crossing_records(const BraidWord& w) {
  std::vector<int> arrangement(static_cast<std::size_t>(w.strands()));
  std::iota(arrangement.begin(), arrangement.end(), 1);
  std::vector<CrossingRecord> out;
  out.reserve(w.length());
  for (int l : w.letters()) {
    auto i = static_cast<std::size_t>(generator_of(l) - 1);
    int a = arrangement[i];
    int b = arrangement[i + 1];
    out.push_back({std::min(a, b), std::max(a, b), sign_of(l)});
    std::swap(arrangement[i], arrangement[i + 1]);
  }
  return out;
}

}  // namespace braidkit
