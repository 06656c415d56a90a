#pragma once

// Exact integer Laurent polynomials and square matrices over them.

#include <cstdint>
#include <map>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "braidkit/errors.hpp"

namespace braidkit {

class LaurentPolynomial {
 public:
  using Coefficient = std::int64_t;

  LaurentPolynomial() = default;
  LaurentPolynomial(Coefficient constant) {  // NOLINT(google-explicit-constructor)
    if (constant != 0) terms_[0] = constant;
  }
  static LaurentPolynomial monomial(Coefficient c, int exponent) {
    LaurentPolynomial p;
    if (c != 0) p.terms_[exponent] = c;
    return p;
  }
  /// Builds from (exponent, coefficient) pairs; repeated exponents add up.
  static LaurentPolynomial from_terms(const std::vector<std::pair<int, Coefficient>>& terms) {
    LaurentPolynomial p;
    for (auto [e, c] : terms) p.add_term(e, c);
    return p;
  }

  bool is_zero() const { return terms_.empty(); }
  const std::map<int, Coefficient>& terms() const { return terms_; }
  Coefficient coefficient(int exponent) const {
    auto it = terms_.find(exponent);
    return it == terms_.end() ? 0 : it->second;
  }
  int min_exponent() const { return terms_.empty() ? 0 : terms_.begin()->first; }
  int max_exponent() const { return terms_.empty() ? 0 : terms_.rbegin()->first; }
  Coefficient leading_coefficient() const { return terms_.empty() ? 0 : terms_.rbegin()->second; }

  void add_term(int exponent, Coefficient c) {
    if (c == 0) return;
    auto& slot = terms_[exponent];
    slot += c;
    if (slot == 0) terms_.erase(exponent);
  }

  LaurentPolynomial& operator+=(const LaurentPolynomial& o) {
    for (auto [e, c] : o.terms_) add_term(e, c);
    return *this;
  }
  LaurentPolynomial& operator-=(const LaurentPolynomial& o) {
    for (auto [e, c] : o.terms_) add_term(e, -c);
    return *this;
  }
  friend LaurentPolynomial operator+(LaurentPolynomial a, const LaurentPolynomial& b) { return a += b; }
  friend LaurentPolynomial operator-(LaurentPolynomial a, const LaurentPolynomial& b) { return a -= b; }
  LaurentPolynomial operator-() const {
    LaurentPolynomial r;
    for (auto [e, c] : terms_) r.terms_[e] = -c;
    return r;
  }
  friend LaurentPolynomial operator*(const LaurentPolynomial& a, const LaurentPolynomial& b) {
    LaurentPolynomial r;
    for (auto [ea, ca] : a.terms_)
      for (auto [eb, cb] : b.terms_) r.add_term(ea + eb, ca * cb);
    return r;
  }
  LaurentPolynomial& operator*=(const LaurentPolynomial& o) { return *this = *this * o; }

  bool operator==(const LaurentPolynomial&) const = default;

  /// Multiplies by t^k.
  LaurentPolynomial shifted(int k) const {
    LaurentPolynomial r;
    for (auto [e, c] : terms_) r.terms_[e + k] = c;
    return r;
  }
  /// p(t) -> p(t^-1).
  LaurentPolynomial reciprocal() const {
    LaurentPolynomial r;
    for (auto [e, c] : terms_) r.terms_[-e] = c;
    return r;
  }
  /// p(t) -> p(t^k).
  LaurentPolynomial substitute_power(int k) const {
    LaurentPolynomial r;
    for (auto [e, c] : terms_) r.add_term(e * k, c);
    return r;
  }

  /// Exact quotient; throws ConsistencyError if `divisor` does not divide.
  LaurentPolynomial divide_exact(const LaurentPolynomial& divisor) const {
    if (divisor.is_zero()) throw ConsistencyError("division by zero polynomial");
    LaurentPolynomial rem = *this;
    LaurentPolynomial quot;
    const int dmax = divisor.max_exponent();
    const Coefficient dlead = divisor.leading_coefficient();
    const int span = divisor.max_exponent() - divisor.min_exponent();
    while (!rem.is_zero()) {
      if (rem.max_exponent() - rem.min_exponent() < span) throw ConsistencyError("inexact polynomial division");
      const Coefficient c = rem.leading_coefficient();
      if (c % dlead != 0) throw ConsistencyError("inexact polynomial division");
      const int shift = rem.max_exponent() - dmax;
      auto step = monomial(c / dlead, shift);
      quot += step;
      rem -= step * divisor;
    }
    return quot;
  }

  /// `-1*t^-4 + 1*t^-3 + 1*t^-1`, ascending exponents; "0" for zero.
  std::string to_string(const std::string& var = "t") const {
    if (terms_.empty()) return "0";
    std::string s;
    bool first = true;
    for (auto [e, c] : terms_) {
      if (!first) s += c < 0 ? " - " : " + ";
      Coefficient shown = first ? c : (c < 0 ? -c : c);
      s += std::to_string(shown);
      if (e != 0) s += "*" + var + "^" + std::to_string(e);
      first = false;
    }
    return s;
  }

 private:
  std::map<int, Coefficient> terms_;
};

inline std::ostream& operator<<(std::ostream& os, const LaurentPolynomial& p) { return os << p.to_string(); }

class PolyMatrix {
 public:
  explicit PolyMatrix(int dim = 0) : dim_(dim), cells_(static_cast<std::size_t>(dim * dim)) {}

  static PolyMatrix identity(int dim) {
    PolyMatrix m(dim);
    for (int i = 0; i < dim; ++i) m(i, i) = 1;
    return m;
  }

  int dim() const { return dim_; }
  LaurentPolynomial& operator()(int r, int c) { return cells_[static_cast<std::size_t>(r * dim_ + c)]; }
  const LaurentPolynomial& operator()(int r, int c) const { return cells_[static_cast<std::size_t>(r * dim_ + c)]; }

  friend PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b) {
    if (a.dim_ != b.dim_) throw ConsistencyError("matrix dimension mismatch");
    PolyMatrix r(a.dim_);
    for (int i = 0; i < a.dim_; ++i)
      for (int k = 0; k < a.dim_; ++k) {
        const auto& aik = a(i, k);
        if (aik.is_zero()) continue;
        for (int j = 0; j < a.dim_; ++j) {
          if (!b(k, j).is_zero()) r(i, j) += aik * b(k, j);
        }
      }
    return r;
  }
  friend PolyMatrix operator-(const PolyMatrix& a, const PolyMatrix& b) {
    PolyMatrix r = a;
    for (std::size_t i = 0; i < r.cells_.size(); ++i) r.cells_[i] -= b.cells_[i];
    return r;
  }

  bool operator==(const PolyMatrix&) const = default;

  /// Division-free determinant by row-by-row minor expansion over column subsets.
  LaurentPolynomial determinant() const {
    if (dim_ == 0) return 1;
    if (dim_ > 20) throw ResourceCapExceeded("determinant dimension too large");
    const std::size_t full = std::size_t{1} << dim_;
    std::vector<LaurentPolynomial> dp(full);
    dp[0] = 1;
    for (std::size_t mask = 0; mask < full; ++mask) {
      if (dp[mask].is_zero()) continue;
      const int row = __builtin_popcountll(mask);
      if (row == dim_) continue;
      for (int col = 0; col < dim_; ++col) {
        const std::size_t bit = std::size_t{1} << col;
        if (mask & bit) continue;
        const auto& entry = (*this)(row, col);
        if (entry.is_zero()) continue;
        // sign: parity of already-used columns to the right of col
        const int above = __builtin_popcountll(mask >> (col + 1));
        auto term = dp[mask] * entry;
        if (above % 2) term = -term;
        dp[mask | bit] += term;
      }
    }
    return dp[full - 1];
  }

 private:
  int dim_;
  std::vector<LaurentPolynomial> cells_;
};

}  // namespace braidkit
