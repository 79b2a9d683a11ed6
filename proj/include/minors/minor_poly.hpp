// Exact polynomials in the t-minors of a generic matrix.  A symbol
// [i_1,...,i_t|j_1,...,j_t] stands for the minor on those rows and columns;
// a monomial is a multiset of symbols, and coefficients are exact integers.
#pragma once

#include <algorithm>
#include <compare>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "minors/types.hpp"

namespace minors {

namespace detail {

// Parity sign of the permutation sorting `seq` ascending; 0 on duplicates.
inline int sort_sign(std::vector<int>& seq) {
  int inversions = 0;
  for (std::size_t i = 0; i < seq.size(); ++i)
    for (std::size_t j = i + 1; j < seq.size(); ++j) {
      if (seq[i] == seq[j]) return 0;
      if (seq[i] > seq[j]) ++inversions;
    }
  std::sort(seq.begin(), seq.end());
  return inversions % 2 == 0 ? 1 : -1;
}

}  // namespace detail

// Sign (-1)^{B_1,...,B_k}: parity of the permutation taking the sorted union
// of the blocks to their concatenation (each block listed in its given
// order).  Zero if any value repeats.
inline int concatenation_sign(const std::vector<std::vector<int>>& blocks) {
  std::vector<int> concat;
  for (const auto& b : blocks) concat.insert(concat.end(), b.begin(), b.end());
  return detail::sort_sign(concat);
}

struct MinorSymbol {
  std::vector<int> rows;  // ascending
  std::vector<int> cols;  // ascending

  auto operator<=>(const MinorSymbol&) const = default;

  std::string to_string() const {
    std::string out = "[";
    for (std::size_t i = 0; i < rows.size(); ++i)
      out += (i ? "," : "") + std::to_string(rows[i]);
    out += "|";
    for (std::size_t i = 0; i < cols.size(); ++i)
      out += (i ? "," : "") + std::to_string(cols[i]);
    return out + "]";
  }
};

// Sorts row and column indices, tracking the sign; zero sign on a repeated
// index (the minor vanishes).
inline std::pair<int, MinorSymbol> canonical_symbol(std::vector<int> rows,
                                                    std::vector<int> cols) {
  require(rows.size() == cols.size(), "minor symbol needs square index sets");
  for (int r : rows) require(r >= 1, "row indices must be positive");
  for (int c : cols) require(c >= 1, "column indices must be positive");
  const int sr = detail::sort_sign(rows);
  const int sc = detail::sort_sign(cols);
  if (sr == 0 || sc == 0) return {0, MinorSymbol{}};
  return {sr * sc, MinorSymbol{std::move(rows), std::move(cols)}};
}

using Monomial = std::vector<MinorSymbol>;  // kept sorted ascending

struct MinorPolynomial {
  std::map<Monomial, Int> terms;

  void add(Monomial mono, Int coeff) {
    if (coeff == 0) return;
    std::sort(mono.begin(), mono.end());
    auto it = terms.find(mono);
    if (it == terms.end()) {
      terms.emplace(std::move(mono), std::move(coeff));
    } else {
      it->second += coeff;
      if (it->second == 0) terms.erase(it);
    }
  }

  bool is_zero() const { return terms.empty(); }

  bool operator==(const MinorPolynomial&) const = default;
};

// Swaps row and column indices of every symbol.
inline MinorPolynomial mirror(const MinorPolynomial& p) {
  MinorPolynomial out;
  for (const auto& [mono, coeff] : p.terms) {
    Monomial flipped;
    flipped.reserve(mono.size());
    for (const MinorSymbol& s : mono) flipped.push_back({s.cols, s.rows});
    out.add(std::move(flipped), coeff);
  }
  return out;
}

// Divides by the content and makes the coefficient of the lexicographically
// first monomial positive.
inline MinorPolynomial normalize_poly(const MinorPolynomial& p) {
  if (p.terms.empty()) return p;
  Int g = 0;
  for (const auto& [mono, coeff] : p.terms) g = gcd(g, abs(coeff));
  const bool flip = p.terms.begin()->second < 0;
  MinorPolynomial out;
  for (const auto& [mono, coeff] : p.terms)
    out.terms[mono] = Int(flip ? -coeff : coeff) / g;
  return out;
}

inline std::string poly_to_text(const MinorPolynomial& p) {
  if (p.terms.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [mono, coeff] : p.terms) {
    Int c = coeff;
    if (first) {
      if (c < 0) {
        out += "-";
        c = -c;
      }
      first = false;
    } else {
      out += (c < 0) ? " - " : " + ";
      if (c < 0) c = -c;
    }
    out += c.str() + " *";
    for (const MinorSymbol& s : mono) out += " " + s.to_string();
  }
  return out;
}

namespace detail {

// Leibniz action of the elementary lowering that rewrites index `from` as
// index `to` on one side of every symbol.
inline MinorPolynomial lowering(const MinorPolynomial& p, int from, int to,
                                bool on_rows) {
  MinorPolynomial out;
  for (const auto& [mono, coeff] : p.terms) {
    for (std::size_t k = 0; k < mono.size(); ++k) {
      const std::vector<int>& side = on_rows ? mono[k].rows : mono[k].cols;
      if (!std::binary_search(side.begin(), side.end(), from)) continue;
      std::vector<int> replaced = side;
      *std::find(replaced.begin(), replaced.end(), from) = to;
      auto [sign, sym] =
          on_rows ? canonical_symbol(std::move(replaced), mono[k].cols)
                  : canonical_symbol(mono[k].rows, std::move(replaced));
      if (sign == 0) continue;
      Monomial next = mono;
      next[k] = std::move(sym);
      out.add(std::move(next), coeff * sign);
    }
  }
  return out;
}

}  // namespace detail

inline MinorPolynomial row_lowering(const MinorPolynomial& p, int from, int to) {
  require(from > to && to >= 1, "lowering rewrites a higher index as a lower one");
  return detail::lowering(p, from, to, true);
}

inline MinorPolynomial col_lowering(const MinorPolynomial& p, int from, int to) {
  require(from > to && to >= 1, "lowering rewrites a higher index as a lower one");
  return detail::lowering(p, from, to, false);
}

// The common bi-weight of all monomials; rejects inhomogeneous input.
// Row-side entries count occurrences of each row index; column indices
// address the dual space, so the column side carries negated counts.
inline std::pair<WeightVector, WeightVector> bi_weight(const MinorPolynomial& p) {
  require(!p.terms.empty(), "weight of the zero polynomial is undefined");
  auto counts = [](const Monomial& mono) {
    WeightVector row, col;
    auto bump = [](WeightVector& w, int i) {
      if (static_cast<int>(w.size()) < i) w.resize(static_cast<std::size_t>(i), 0);
      ++w[static_cast<std::size_t>(i - 1)];
    };
    for (const MinorSymbol& s : mono) {
      for (int r : s.rows) bump(row, r);
      for (int c : s.cols) bump(col, c);
    }
    return std::pair<WeightVector, WeightVector>{row, col};
  };
  auto expected = counts(p.terms.begin()->first);
  for (const auto& [mono, coeff] : p.terms)
    require(counts(mono) == expected, "polynomial is not bi-homogeneous");
  for (int& c : expected.second) c = -c;
  return expected;
}

// True when every lowering on both sides kills the polynomial, i.e. the
// polynomial is a highest bi-weight vector.
inline bool is_highest_weight_poly(const MinorPolynomial& p) {
  if (p.terms.empty()) return false;
  const auto [row_w, col_w] = bi_weight(p);
  for (int from = 2; from <= static_cast<int>(row_w.size()); ++from)
    for (int to = 1; to < from; ++to)
      if (!row_lowering(p, from, to).is_zero()) return false;
  for (int from = 2; from <= static_cast<int>(col_w.size()); ++from)
    for (int to = 1; to < from; ++to)
      if (!col_lowering(p, from, to).is_zero()) return false;
  return true;
}

inline MinorPolynomial multiply_by_symbol(const MinorPolynomial& p,
                                          const MinorSymbol& s) {
  MinorPolynomial out;
  for (const auto& [mono, coeff] : p.terms) {
    Monomial next = mono;
    next.push_back(s);
    out.add(std::move(next), coeff);
  }
  return out;
}

}  // namespace minors
