#pragma once

// Topological invariants of braid closures, used as link-type equality
// oracles: reduced Burau matrices, the Alexander polynomial, and the Jones
// polynomial by a full Kauffman-bracket state sum.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <thread>
#include <vector>

#include "braidkit/braid_word.hpp"
#include "braidkit/laurent.hpp"

namespace braidkit {

/// Reduced Burau image of sigma_i^sign in B_n (n >= 2), variable t.
inline PolyMatrix burau_generator(int n, int i, int sign) {
  const int d = n - 1;
  PolyMatrix m = PolyMatrix::identity(d);
  const int c = i - 1;  // 0-based column of the -t entry
  const auto t = LaurentPolynomial::monomial(1, 1);
  const auto ti = LaurentPolynomial::monomial(1, -1);
  if (sign > 0) {
    m(c, c) = -t;
    if (c - 1 >= 0) m(c - 1, c) = t;
    if (c + 1 < d) m(c + 1, c) = 1;
  } else {
    m(c, c) = -ti;
    if (c - 1 >= 0) m(c - 1, c) = 1;
    if (c + 1 < d) m(c + 1, c) = ti;
  }
  return m;
}

inline PolyMatrix burau_reduced(const BraidWord& w) {
  if (w.strands() < 2) throw InvalidMove("reduced Burau needs n >= 2");
  PolyMatrix m = PolyMatrix::identity(w.strands() - 1);
  for (int l : w.letters()) m = m * burau_generator(w.strands(), generator_of(l), sign_of(l));
  return m;
}

struct AlexanderPolynomial {
  LaurentPolynomial poly;
  /// true: knot, normalized symmetric under t <-> t^-1 with positive leading
  /// coefficient. false: link (or zero); lowest exponent shifted to 0 and
  /// leading coefficient made positive, which fixes the +-t^k ambiguity but
  /// not the half-integer symmetry.
  bool symmetric = false;

  bool operator==(const AlexanderPolynomial&) const = default;
};

/// det(I - Burau(w)) / (1 + t + ... + t^(n-1)), normalized up to units.
inline AlexanderPolynomial alexander_polynomial(const BraidWord& w) {
  const int n = w.strands();
  if (n == 1) return {LaurentPolynomial(1), true};
  const PolyMatrix b = burau_reduced(w);
  const LaurentPolynomial det = (PolyMatrix::identity(n - 1) - b).determinant();
  LaurentPolynomial denom;
  for (int k = 0; k < n; ++k) denom.add_term(k, 1);
  LaurentPolynomial q = det.divide_exact(denom);
  if (q.is_zero()) return {q, false};
  if (q.leading_coefficient() < 0) q = -q;
  const bool knot = closure_components(w).count() == 1;
  const int span = q.max_exponent() - q.min_exponent();
  if (knot) {
    if (span % 2 != 0) throw ConsistencyError("knot Alexander polynomial has odd span");
    q = q.shifted(-(q.min_exponent() + span / 2));
    if (!(q == q.reciprocal())) throw ConsistencyError("knot Alexander polynomial is not symmetric");
    return {q, true};
  }
  return {q.shifted(-q.min_exponent()), false};
}

struct BracketOptions {
  /// State sums cost 2^crossings.
  std::size_t crossing_cap = 24;
  /// Worker threads for the state sum; results do not depend on it.
  unsigned threads = 1;
};

struct BracketResult {
  /// Polynomial in A.
  LaurentPolynomial bracket;
  std::uint64_t states_visited = 0;
};

namespace detail {

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(static_cast<std::size_t>(n)) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[static_cast<std::size_t>(x)] != x) {
      auto& p = parent[static_cast<std::size_t>(x)];
      p = parent[static_cast<std::size_t>(p)];
      x = p;
    }
    return x;
  }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[static_cast<std::size_t>(a)] = b;
    return true;
  }
};

}  // namespace detail

/// Kauffman bracket of the closure diagram, normalized so the empty diagram
/// with one loop has bracket 1, by summing over all 2^m smoothings.
///
/// Arc endpoints are nodes (position, level); level m wraps to level 0. The
/// A-smoothing of a positive crossing is the oriented (vertical) one.
inline BracketResult kauffman_bracket(const BraidWord& w, const BracketOptions& opts = {}) {
  const std::size_t m = w.length();
  if (m > opts.crossing_cap) {
    throw ResourceCapExceeded("state sum over " + std::to_string(m) + " crossings exceeds cap " +
                              std::to_string(opts.crossing_cap));
  }
  const int n = w.strands();
  const int levels = std::max<int>(static_cast<int>(m), 1);
  auto node = [&](int pos, std::size_t level) { return static_cast<int>((level % static_cast<std::size_t>(levels)) * static_cast<std::size_t>(n)) + pos; };
  const std::vector<int> letters(w.letters().begin(), w.letters().end());

  // Passive arcs do not depend on the state: strands not touched at a level.
  std::vector<std::pair<int, int>> passive;
  for (std::size_t t = 0; t < m; ++t) {
    const int i = generator_of(letters[t]) - 1;
    for (int p = 0; p < n; ++p)
      if (p != i && p != i + 1) passive.emplace_back(node(p, t), node(p, t + 1));
  }
  if (m == 0) {
    // n disjoint loops: d^(n-1)
    LaurentPolynomial d = LaurentPolynomial::monomial(-1, 2) + LaurentPolynomial::monomial(-1, -2);
    LaurentPolynomial r = 1;
    for (int k = 1; k < n; ++k) r *= d;
    return {r, 1};
  }

  const int mi = static_cast<int>(m);
  const std::size_t loops_max = static_cast<std::size_t>(n) * m + 1;
  const std::uint64_t total = std::uint64_t{1} << m;
  // counts[(a - b + m) * loops_max + loops]
  using Table = std::vector<std::uint64_t>;

  auto work = [&](std::uint64_t begin, std::uint64_t end, Table& counts) {
    for (std::uint64_t state = begin; state < end; ++state) {
      detail::UnionFind uf(n * levels);
      int components = n * levels;
      for (auto [a, b] : passive) components -= uf.unite(a, b);
      int a_count = 0;
      for (std::size_t t = 0; t < m; ++t) {
        const int i = generator_of(letters[t]) - 1;
        const bool a_smoothing = (state >> t) & 1U;
        a_count += a_smoothing;
        const bool vertical = a_smoothing == (letters[t] > 0);
        if (vertical) {
          components -= uf.unite(node(i, t), node(i, t + 1));
          components -= uf.unite(node(i + 1, t), node(i + 1, t + 1));
        } else {
          components -= uf.unite(node(i, t), node(i + 1, t));
          components -= uf.unite(node(i, t + 1), node(i + 1, t + 1));
        }
      }
      const int diff = 2 * a_count - mi;
      counts[static_cast<std::size_t>(diff + mi) * loops_max + static_cast<std::size_t>(components)] += 1;
    }
  };

  const unsigned threads = std::max(1U, std::min<unsigned>(opts.threads, 64));
  std::vector<Table> tables(threads, Table(static_cast<std::size_t>(2 * mi + 1) * loops_max, 0));
  if (threads == 1) {
    work(0, total, tables[0]);
  } else {
    std::vector<std::thread> pool;
    const std::uint64_t chunk = (total + threads - 1) / threads;
    for (unsigned k = 0; k < threads; ++k) {
      const std::uint64_t b = std::min(total, chunk * k);
      const std::uint64_t e = std::min(total, b + chunk);
      pool.emplace_back(work, b, e, std::ref(tables[k]));
    }
    for (auto& th : pool) th.join();
  }

  // Sum_states A^(a-b) d^(loops-1), d = -A^2 - A^-2.
  const LaurentPolynomial d = LaurentPolynomial::monomial(-1, 2) + LaurentPolynomial::monomial(-1, -2);
  std::vector<LaurentPolynomial> d_powers{LaurentPolynomial(1)};
  LaurentPolynomial out;
  for (std::size_t di = 0; di <= static_cast<std::size_t>(2 * mi); ++di) {
    for (std::size_t loops = 1; loops < loops_max; ++loops) {
      std::uint64_t c = 0;
      for (const auto& tab : tables) c += tab[di * loops_max + loops];
      if (c == 0) continue;
      while (d_powers.size() < loops) d_powers.push_back(d_powers.back() * d);
      out += d_powers[loops - 1].shifted(static_cast<int>(di) - mi) * LaurentPolynomial(static_cast<std::int64_t>(c));
    }
  }
  return {out, total};
}

/// Jones polynomial as a Laurent polynomial in q, where q^2 = t.
///
/// V = (-A^3)^(-writhe) <D> evaluated at A = t^(-1/4) = q^(-1/2).
inline LaurentPolynomial jones_polynomial(const BraidWord& w, const BracketOptions& opts = {}) {
  const LaurentPolynomial bracket = kauffman_bracket(w, opts).bracket;
  const int writhe = exponent_sum(w);
  LaurentPolynomial f = bracket.shifted(-3 * writhe);
  if (writhe % 2 != 0) f = -f;
  LaurentPolynomial v;
  for (auto [e, c] : f.terms()) {
    if (e % 2 != 0) throw ConsistencyError("odd A-exponent in normalized bracket");
    v.add_term(-e / 2, c);
  }
  return v;
}

}  // namespace braidkit
