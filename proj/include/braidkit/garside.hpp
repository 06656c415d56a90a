#pragma once

// Garside left normal form, cycling/decycling and super summit sets in B_n.
//
// Canonical factors are permutation braids stored as position maps: perm[p]
// is the end position (0-based) of the strand starting at p. Every pair of
// strands crosses at most once, positively, and exactly when the pair is an
// inversion of the map.

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "braidkit/braid_word.hpp"

namespace braidkit {

using DescentSet = std::uint64_t;

class PermutationBraid {
 public:
  PermutationBraid() = default;
  explicit PermutationBraid(std::vector<std::uint8_t> perm) : perm_(std::move(perm)) {}

  static PermutationBraid identity(int n) {
    std::vector<std::uint8_t> p(static_cast<std::size_t>(n));
    std::iota(p.begin(), p.end(), std::uint8_t{0});
    return PermutationBraid(std::move(p));
  }
  static PermutationBraid delta(int n) {
    std::vector<std::uint8_t> p(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) p[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(n - 1 - i);
    return PermutationBraid(std::move(p));
  }
  /// sigma_i, 1-based generator index.
  static PermutationBraid atom(int n, int i) {
    auto a = identity(n);
    std::swap(a.perm_[static_cast<std::size_t>(i - 1)], a.perm_[static_cast<std::size_t>(i)]);
    return a;
  }
  static PermutationBraid from_permutation(const Permutation& p) {
    std::vector<std::uint8_t> v;
    for (int x : p.images()) v.push_back(static_cast<std::uint8_t>(x - 1));
    return PermutationBraid(std::move(v));
  }

  int strands() const { return static_cast<int>(perm_.size()); }
  const std::vector<std::uint8_t>& perm() const { return perm_; }
  Permutation permutation() const {
    std::vector<int> v;
    for (auto x : perm_) v.push_back(x + 1);
    return Permutation(std::move(v));
  }

  bool is_identity() const {
    for (std::size_t i = 0; i < perm_.size(); ++i) {
      if (perm_[i] != i) return false;
    }
    return true;
  }
  bool is_delta() const {
    const auto n = perm_.size();
    for (std::size_t i = 0; i < n; ++i) {
      if (perm_[i] != n - 1 - i) return false;
    }
    return true;
  }

  /// Number of crossings, i.e. inversions.
  int length() const {
    int inv = 0;
    for (std::size_t p = 0; p < perm_.size(); ++p)
      for (std::size_t q = p + 1; q < perm_.size(); ++q) inv += perm_[p] > perm_[q];
    return inv;
  }

  PermutationBraid inverse_perm() const {
    std::vector<std::uint8_t> inv(perm_.size());
    for (std::size_t p = 0; p < perm_.size(); ++p) inv[perm_[p]] = static_cast<std::uint8_t>(p);
    return PermutationBraid(std::move(inv));
  }

  /// Permutation of this braid followed by `after` (not necessarily simple).
  PermutationBraid then(const PermutationBraid& after) const {
    std::vector<std::uint8_t> out(perm_.size());
    for (std::size_t p = 0; p < perm_.size(); ++p) out[p] = after.perm_[perm_[p]];
    return PermutationBraid(std::move(out));
  }

  /// Bit i-1 set iff sigma_i is a prefix.
  DescentSet starting_set() const {
    DescentSet s = 0;
    for (std::size_t i = 0; i + 1 < perm_.size(); ++i)
      if (perm_[i] > perm_[i + 1]) s |= DescentSet{1} << i;
    return s;
  }
  /// Bit i-1 set iff sigma_i is a suffix.
  DescentSet finishing_set() const { return inverse_perm().starting_set(); }

  /// Delta^-1 A Delta.
  PermutationBraid tau() const {
    const auto n = perm_.size();
    std::vector<std::uint8_t> out(n);
    for (std::size_t p = 0; p < n; ++p) out[p] = static_cast<std::uint8_t>(n - 1 - perm_[n - 1 - p]);
    return PermutationBraid(std::move(out));
  }
  PermutationBraid tau_power(int k) const { return (k % 2 != 0) ? tau() : *this; }

  /// A^-1 Delta, so that A * right_complement() = Delta.
  PermutationBraid right_complement() const { return inverse_perm().then(delta(strands())); }
  /// Delta A^-1, so that left_complement() * A = Delta.
  PermutationBraid left_complement() const { return delta(strands()).then(inverse_perm()); }

  /// A sigma_i, where i-1 must not be in the finishing set.
  void append_atom(int bit) {
    for (auto& x : perm_) {
      if (x == bit) {
        x = static_cast<std::uint8_t>(bit + 1);
      } else if (x == bit + 1) {
        x = static_cast<std::uint8_t>(bit);
      }
    }
  }
  /// sigma_i^-1 A, where i-1 must be in the starting set.
  void remove_leading_atom(int bit) {
    std::swap(perm_[static_cast<std::size_t>(bit)], perm_[static_cast<std::size_t>(bit) + 1]);
  }

  /// Positive word of this permutation braid (bubble sort of the end positions).
  BraidWord word() const {
    std::vector<std::uint8_t> target = perm_;  // target[q]: end position of the strand now at q
    std::vector<int> letters;
    bool swapped = true;
    while (swapped) {
      swapped = false;
      for (std::size_t q = 0; q + 1 < target.size(); ++q) {
        if (target[q] > target[q + 1]) {
          std::swap(target[q], target[q + 1]);
          letters.push_back(static_cast<int>(q) + 1);
          swapped = true;
        }
      }
    }
    return BraidWord(std::max(strands(), 1), std::move(letters));
  }

  /// Inversion set containment: this is a prefix of `other` in the left weak order.
  bool is_prefix_of(const PermutationBraid& other) const {
    for (std::size_t p = 0; p < perm_.size(); ++p)
      for (std::size_t q = p + 1; q < perm_.size(); ++q)
        if (perm_[p] > perm_[q] && !(other.perm_[p] > other.perm_[q])) return false;
    return true;
  }

  /// One-line notation, 1-based; comma separated once n > 9.
  std::string one_line() const {
    std::string s;
    for (std::size_t i = 0; i < perm_.size(); ++i) {
      if (perm_.size() > 9 && i > 0) s += ',';
      s += std::to_string(perm_[i] + 1);
    }
    return s;
  }

  auto operator<=>(const PermutationBraid&) const = default;

 private:
  std::vector<std::uint8_t> perm_;
};

/// Makes (a, b) left-weighted in place. Returns true if anything moved.
inline bool left_weight(PermutationBraid& a, PermutationBraid& b) {
  bool moved = false;
  for (;;) {
    DescentSet movable = b.starting_set() & ~a.finishing_set();
    if (movable == 0) return moved;
    int bit = __builtin_ctzll(movable);
    a.append_atom(bit);
    b.remove_leading_atom(bit);
    moved = true;
  }
}

// ---------------------------------------------------------------------------

struct NormalForm {
  int n_strands = 1;
  int delta_power = 0;
  std::vector<PermutationBraid> factors;

  int inf() const { return delta_power; }
  int sup() const { return delta_power + canonical_length(); }
  int canonical_length() const { return static_cast<int>(factors.size()); }

  bool operator==(const NormalForm& o) const {
    return n_strands == o.n_strands && delta_power == o.delta_power && factors == o.factors;
  }
  /// Order: delta power, factor count, then factors lexicographically.
  bool operator<(const NormalForm& o) const {
    if (n_strands != o.n_strands) return n_strands < o.n_strands;
    if (delta_power != o.delta_power) return delta_power < o.delta_power;
    if (factors.size() != o.factors.size()) return factors.size() < o.factors.size();
    return factors < o.factors;
  }
};

/// Brings Delta^k F_1 ... F_m into left normal form.
inline NormalForm normalize(int n, int k, std::vector<PermutationBraid> fs) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t j = fs.size(); j-- > 1;) {
      changed |= left_weight(fs[j - 1], fs[j]);
    }
  }
  std::size_t lead = 0;
  while (lead < fs.size() && fs[lead].is_delta()) ++lead;
  std::erase_if(fs, [](const PermutationBraid& f) { return f.is_identity(); });
  std::vector<PermutationBraid> rest;
  for (std::size_t j = 0; j < fs.size(); ++j) {
    if (fs[j].is_delta()) {
      if (j >= lead) throw ConsistencyError("Delta factor after a non-Delta factor in normal form");
      continue;
    }
    rest.push_back(std::move(fs[j]));
  }
  return NormalForm{n, k + static_cast<int>(lead), std::move(rest)};
}

inline NormalForm left_normal_form(const BraidWord& w) {
  const int n = w.strands();
  int k = 0;
  std::vector<PermutationBraid> fs;
  fs.reserve(w.length());
  for (int l : w.letters()) {
    const auto atom = PermutationBraid::atom(n, generator_of(l));
    if (l > 0) {
      fs.push_back(atom);
    } else {
      // F sigma^-1 = F Delta^-1 (Delta sigma^-1) = Delta^-1 tau(F) (Delta sigma^-1)
      for (auto& f : fs) f = f.tau();
      --k;
      fs.push_back(atom.left_complement());
    }
  }
  return normalize(n, k, std::move(fs));
}

inline BraidWord delta_word(int n) { return PermutationBraid::delta(n).word(); }

/// Word spelled Delta^k A_1 ... A_l (not freely reduced).
inline BraidWord to_word(const NormalForm& nf) {
  std::vector<int> ls;
  const BraidWord d = delta_word(nf.n_strands);
  for (int i = 0; i < std::abs(nf.delta_power); ++i) {
    if (nf.delta_power > 0) {
      ls.insert(ls.end(), d.letters().begin(), d.letters().end());
    } else {
      for (auto it = d.letters().rbegin(); it != d.letters().rend(); ++it) ls.push_back(-*it);
    }
  }
  for (const auto& f : nf.factors) {
    auto fw = f.word();
    ls.insert(ls.end(), fw.letters().begin(), fw.letters().end());
  }
  return BraidWord(nf.n_strands, std::move(ls));
}

/// `D^k | p1 | p2 | ...`; with no factors, `D^k |`.
inline std::string to_string(const NormalForm& nf) {
  std::string s = "D^" + std::to_string(nf.delta_power) + " |";
  for (std::size_t i = 0; i < nf.factors.size(); ++i) {
    s += (i == 0 ? " " : " | ") + nf.factors[i].one_line();
  }
  return s;
}

/// s^-1 x s for a simple element s.
inline NormalForm conjugate_by_simple(const NormalForm& x, const PermutationBraid& s) {
  // s^-1 Delta^k A s = Delta^-1 L Delta^k A s = Delta^(k-1) tau^k(L) A s, with L = Delta s^-1
  std::vector<PermutationBraid> fs;
  fs.reserve(x.factors.size() + 2);
  fs.push_back(s.left_complement().tau_power(x.delta_power));
  fs.insert(fs.end(), x.factors.begin(), x.factors.end());
  fs.push_back(s);
  return normalize(x.n_strands, x.delta_power - 1, std::move(fs));
}

/// The simple element that cycling conjugates by: tau^-k(A_1).
inline std::optional<PermutationBraid> initial_factor(const NormalForm& nf) {
  if (nf.factors.empty()) return std::nullopt;
  return nf.factors.front().tau_power(nf.delta_power);
}

/// Delta^k A_2 ... A_l tau^-k(A_1). Forms without factors are returned as is.
inline NormalForm cycling(const NormalForm& nf) {
  if (nf.factors.empty()) return nf;
  std::vector<PermutationBraid> fs(nf.factors.begin() + 1, nf.factors.end());
  fs.push_back(nf.factors.front().tau_power(nf.delta_power));
  return normalize(nf.n_strands, nf.delta_power, std::move(fs));
}

/// Delta^k tau^k(A_l) A_1 ... A_(l-1). Forms without factors are returned as is.
inline NormalForm decycling(const NormalForm& nf) {
  if (nf.factors.empty()) return nf;
  std::vector<PermutationBraid> fs;
  fs.push_back(nf.factors.back().tau_power(nf.delta_power));
  fs.insert(fs.end(), nf.factors.begin(), nf.factors.end() - 1);
  return normalize(nf.n_strands, nf.delta_power, std::move(fs));
}

// ---------------------------------------------------------------------------
// Super summit sets

/// Conjugate of an input word in normal form, with the conjugator c such that
/// c^-1 w c equals `form`.
struct TrackedConjugate {
  NormalForm form;
  BraidWord conjugator;
};

struct SuperSummitSet {
  /// Sorted ascending, no duplicates.
  std::vector<NormalForm> elements;
  /// conjugators[i]^-1 w conjugators[i] = elements[i].
  std::vector<BraidWord> conjugators;
  int inf_s = 0;
  int sup_s = 0;

  bool contains(const NormalForm& nf) const { return std::binary_search(elements.begin(), elements.end(), nf); }
  std::optional<std::size_t> index_of(const NormalForm& nf) const {
    auto it = std::lower_bound(elements.begin(), elements.end(), nf);
    if (it == elements.end() || !(*it == nf)) return std::nullopt;
    return static_cast<std::size_t>(it - elements.begin());
  }
};

/// The whole super summit set, sorted; equal for conjugate inputs.
struct ConjugacyKey {
  std::vector<NormalForm> elements;

  bool operator==(const ConjugacyKey&) const = default;
  bool operator<(const ConjugacyKey& o) const { return elements < o.elements; }
};

inline std::string to_string(const ConjugacyKey& key) {
  std::string s;
  for (std::size_t i = 0; i < key.elements.size(); ++i) {
    if (i) s += " ; ";
    s += to_string(key.elements[i]);
  }
  return s;
}

struct GarsideOptions {
  std::size_t max_set_size = 10000;
  /// Closure edges: minimal simple elements (default) or every simple element.
  bool minimal_simple_closure = true;
  /// Enumerating simple elements costs n!; larger n is refused.
  int max_strands_for_closure = 7;
};

namespace detail {

inline void append_word(std::vector<int>& ls, const BraidWord& w) {
  ls.insert(ls.end(), w.letters().begin(), w.letters().end());
}

inline BraidWord extend_conjugator(const BraidWord& c, const PermutationBraid& s, bool inverse) {
  std::vector<int> ls(c.letters().begin(), c.letters().end());
  BraidWord sw = s.word();
  if (inverse) sw = invert(sw);
  append_word(ls, sw);
  return free_reduce(BraidWord(c.strands(), std::move(ls)));
}

inline std::vector<PermutationBraid> nontrivial_simples(int n) {
  std::vector<std::uint8_t> p(static_cast<std::size_t>(n));
  std::iota(p.begin(), p.end(), std::uint8_t{0});
  std::vector<PermutationBraid> out;
  do {
    PermutationBraid s(p);
    if (!s.is_identity()) out.push_back(std::move(s));
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

}  // namespace detail

/// Conjugate of w with maximal infimum and minimal supremum, reached by
/// iterated cycling then iterated decycling.
inline TrackedConjugate summit_element(const BraidWord& w) {
  const int n = w.strands();
  TrackedConjugate x{left_normal_form(w), BraidWord::identity(n)};
  if (x.form.factors.empty()) return x;
  const int delta_len = n * (n - 1) / 2;

  // Cycling never lowers inf; if delta_len cyclings in a row fail to raise it, it is maximal.
  for (int tries = 0; tries < delta_len && !x.form.factors.empty();) {
    const auto iota = *initial_factor(x.form);
    TrackedConjugate y{cycling(x.form), detail::extend_conjugator(x.conjugator, iota, false)};
    if (y.form.inf() > x.form.inf()) {
      tries = 0;
    } else {
      ++tries;
    }
    x = std::move(y);
  }
  // Decycling conjugates by A_l^-1; it keeps inf and lowers sup until minimal.
  const int inf_max = x.form.inf();
  TrackedConjugate best = x;
  for (int tries = 0; tries < delta_len && !x.form.factors.empty();) {
    const auto last = x.form.factors.back();
    TrackedConjugate y{decycling(x.form), detail::extend_conjugator(x.conjugator, last, true)};
    if (y.form.sup() < best.form.sup()) {
      best = y;
      tries = 0;
    } else {
      ++tries;
    }
    x = std::move(y);
  }
  if (best.form.inf() != inf_max) throw ConsistencyError("decycling lowered the infimum");
  return best;
}

/// Conjugates of x (an element of its super summit set) by the simple
/// elements selected for the closure, keeping only summit elements.
inline std::vector<std::pair<PermutationBraid, NormalForm>> summit_neighbours(
    const NormalForm& x, const std::vector<PermutationBraid>& simples, int inf_s, int sup_s, bool minimal_only) {
  std::vector<std::pair<PermutationBraid, NormalForm>> hits;
  for (const auto& s : simples) {
    NormalForm y = conjugate_by_simple(x, s);
    if (y.inf() == inf_s && y.sup() == sup_s) hits.emplace_back(s, std::move(y));
  }
  if (!minimal_only) return hits;
  std::vector<std::pair<PermutationBraid, NormalForm>> minimal;
  for (std::size_t i = 0; i < hits.size(); ++i) {
    bool dominated = false;
    for (std::size_t j = 0; j < hits.size() && !dominated; ++j) {
      dominated = j != i && hits[j].first.is_prefix_of(hits[i].first);
    }
    if (!dominated) minimal.push_back(hits[i]);
  }
  return minimal;
}

inline SuperSummitSet super_summit_set(const BraidWord& w, const GarsideOptions& opts = {}) {
  const int n = w.strands();
  TrackedConjugate start = summit_element(w);
  SuperSummitSet out;
  out.inf_s = start.form.inf();
  out.sup_s = start.form.sup();
  std::map<NormalForm, BraidWord> seen;
  seen.emplace(start.form, start.conjugator);
  if (!start.form.factors.empty()) {
    if (n > opts.max_strands_for_closure) {
      throw ResourceCapExceeded("super summit closure refused for n=" + std::to_string(n) +
                                " (limit " + std::to_string(opts.max_strands_for_closure) + ")");
    }
    const auto simples = detail::nontrivial_simples(n);
    std::vector<NormalForm> frontier{start.form};
    while (!frontier.empty()) {
      std::vector<NormalForm> next;
      for (const auto& x : frontier) {
        const BraidWord cx = seen.at(x);
        for (auto& [s, y] : summit_neighbours(x, simples, out.inf_s, out.sup_s, opts.minimal_simple_closure)) {
          if (seen.count(y)) continue;
          seen.emplace(y, detail::extend_conjugator(cx, s, false));
          next.push_back(std::move(y));
          if (seen.size() > opts.max_set_size) {
            throw ResourceCapExceeded("super summit set exceeds " + std::to_string(opts.max_set_size) + " elements");
          }
        }
      }
      std::sort(next.begin(), next.end());
      frontier = std::move(next);
    }
  }
  for (auto& [nf, c] : seen) {
    out.elements.push_back(nf);
    out.conjugators.push_back(c);
  }
  return out;
}

inline ConjugacyKey conjugacy_key(const BraidWord& w, const GarsideOptions& opts = {}) {
  return ConjugacyKey{super_summit_set(w, opts).elements};
}

struct ConjugacyResult {
  bool conjugate = false;
  /// g with g^-1 u g = v, when conjugate.
  std::optional<BraidWord> witness;
};

inline ConjugacyResult are_conjugate(const BraidWord& u, const BraidWord& v, const GarsideOptions& opts = {}) {
  require_same_strands(u, v);
  if (exponent_sum(u) != exponent_sum(v)) return {};
  auto cycle_type = [](const BraidWord& w) {
    std::vector<std::size_t> sizes;
    for (const auto& c : closure_components(w).cycles) sizes.push_back(c.size());
    std::sort(sizes.begin(), sizes.end());
    return sizes;
  };
  if (cycle_type(u) != cycle_type(v)) return {};

  const SuperSummitSet sss = super_summit_set(u, opts);
  const TrackedConjugate target = summit_element(v);
  auto idx = sss.index_of(target.form);
  if (!idx) return {};
  // a^-1 u a = y = b^-1 v b, so g = a b^-1.
  BraidWord g = multiply(sss.conjugators[*idx], invert(target.conjugator));
  if (!(left_normal_form(conjugate(u, g)) == left_normal_form(v))) {
    throw ConsistencyError("conjugacy witness failed verification");
  }
  return {true, std::move(g)};
}

}  // namespace braidkit
