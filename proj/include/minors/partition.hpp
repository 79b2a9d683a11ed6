// Partition and diagram combinatorics: admissibility, transpose, strip
// predecessors/successors, the tensor-multiplicity recursion, single-type
// detection, and the tensor-algebra (T-shape) pair classification.
//
// Conventions used throughout the library:
//   * partitions are weakly decreasing vectors of positive ints, no trailing
//     zeros, the empty vector is the zero partition;
//   * list-valued operations return partitions in descending lexicographic
//     order; bi-shape lists are ascending lexicographic in (row, col).
#pragma once

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "minors/types.hpp"

namespace minors {

inline bool is_partition(const Partition& p) {
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i] < 1) return false;
    if (i + 1 < p.size() && p[i] < p[i + 1]) return false;
  }
  return true;
}

inline void require_partition(const Partition& p) {
  require(is_partition(p), "not a partition (need weakly decreasing positive parts)");
}

inline int size_of(const Partition& p) {
  return std::accumulate(p.begin(), p.end(), 0);
}

inline int rows_of(const Partition& p) { return static_cast<int>(p.size()); }

// Part at 1-based row index, zero beyond the stored rows.
inline int part_at(const Partition& p, int i) {
  return (i >= 1 && i <= rows_of(p)) ? p[static_cast<std::size_t>(i - 1)] : 0;
}

inline Partition strip_zeros(Partition p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
  return p;
}

inline std::string partition_to_string(const Partition& p) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i) os << ',';
    os << p[i];
  }
  os << ')';
  return os.str();
}

// Descending lexicographic order on partition lists: a before b iff a > b.
inline bool desc_lex_less(const Partition& a, const Partition& b) { return b < a; }

inline Partition transpose(const Partition& p) {
  require_partition(p);
  Partition out;
  if (p.empty()) return out;
  out.resize(static_cast<std::size_t>(p[0]));
  for (int col = 1; col <= p[0]; ++col) {
    int count = 0;
    for (int part : p)
      if (part >= col) ++count;
    out[static_cast<std::size_t>(col - 1)] = count;
  }
  return out;
}

inline bool is_admissible(const Partition& p, int t, int d) {
  require(t >= 1, "minor size t must be positive");
  require(d >= 0, "degree d must be nonnegative");
  require_partition(p);
  return size_of(p) == t * d && rows_of(p) <= d;
}

// Degree of an admissible partition; rejects partitions admissible for no d.
inline int admissible_degree(const Partition& p, int t) {
  require(t >= 1, "minor size t must be positive");
  require_partition(p);
  const int n = size_of(p);
  require(n % t == 0 && rows_of(p) <= n / t,
          "partition " + partition_to_string(p) + " is not admissible for t=" +
              std::to_string(t));
  return n / t;
}

namespace detail {

// Enumerates alpha with alpha_i in [lambda_{i+1}, lambda_i] for each row,
// total size |lambda| - t, and at most max_rows rows.
inline void enumerate_interlacing(const Partition& lambda, int row, int remaining,
                                  int max_rows, Partition& acc,
                                  std::vector<Partition>& out) {
  const int rows = rows_of(lambda);
  if (row > rows) {
    if (remaining == 0) out.push_back(strip_zeros(acc));
    return;
  }
  const int lo = part_at(lambda, row + 1);
  int hi = std::min(part_at(lambda, row), remaining);
  if (row > max_rows) hi = 0;
  if (hi < lo) return;
  // Upper bound on what later rows can still absorb.
  for (int v = hi; v >= lo; --v) {
    acc.push_back(v);
    enumerate_interlacing(lambda, row + 1, remaining - v, max_rows, acc, out);
    acc.pop_back();
  }
}

}  // namespace detail

// All alpha obtained by removing a horizontal t-strip (no two boxes in one
// column) such that alpha is (t, d-1)-admissible, descending lexicographic.
inline std::vector<Partition> predecessors(const Partition& lambda, int t) {
  const int d = admissible_degree(lambda, t);
  std::vector<Partition> out;
  if (d == 0) return out;
  Partition acc;
  detail::enumerate_interlacing(lambda, 1, size_of(lambda) - t, d - 1, acc, out);
  std::sort(out.begin(), out.end(), desc_lex_less);
  return out;
}

// All gamma obtained by adding a horizontal t-strip to alpha, optionally
// filtered by gamma_1 <= max_row_length; descending lexicographic.
inline std::vector<Partition> successors(const Partition& alpha, int t,
                                         std::optional<int> max_row_length = {}) {
  admissible_degree(alpha, t);
  std::vector<Partition> out;
  const int rows = rows_of(alpha);
  Partition acc;
  // gamma_1 in [alpha_1, alpha_1 + t], gamma_{i} in [alpha_i, alpha_{i-1}],
  // one extra row allowed, total |alpha| + t.
  auto rec = [&](auto&& self, int row, int remaining) -> void {
    if (row > rows + 1) {
      if (remaining == 0) out.push_back(strip_zeros(acc));
      return;
    }
    int lo = part_at(alpha, row);
    int hi = (row == 1) ? part_at(alpha, 1) + t : part_at(alpha, row - 1);
    if (row == 1 && max_row_length) hi = std::min(hi, *max_row_length);
    hi = std::min(hi, lo + remaining);
    for (int v = hi; v >= lo; --v) {
      acc.push_back(v);
      self(self, row + 1, remaining - (v - lo));
      acc.pop_back();
    }
  };
  rec(rec, 1, t);
  std::sort(out.begin(), out.end(), desc_lex_less);
  return out;
}

namespace detail {

inline std::map<std::pair<int, Partition>, long long>& tensor_mult_memo() {
  static std::map<std::pair<int, Partition>, long long> memo;
  return memo;
}

inline std::mutex& tensor_mult_mutex() {
  static std::mutex m;
  return m;
}

}  // namespace detail

// Multiplicity of the shape inside the d-fold tensor power of the t-th
// exterior power, via the strip-predecessor recursion (memoized).
inline long long tensor_multiplicity(const Partition& lambda, int t) {
  const int d = admissible_degree(lambda, t);
  if (d == 0) return 1;
  if (d == 1) return 1;  // lambda == (t)
  {
    std::lock_guard<std::mutex> lock(detail::tensor_mult_mutex());
    auto it = detail::tensor_mult_memo().find({t, lambda});
    if (it != detail::tensor_mult_memo().end()) return it->second;
  }
  long long total = 0;
  for (const Partition& alpha : predecessors(lambda, t))
    total += tensor_multiplicity(alpha, t);
  {
    std::lock_guard<std::mutex> lock(detail::tensor_mult_mutex());
    detail::tensor_mult_memo()[{t, lambda}] = total;
  }
  return total;
}

// Prefixes `cols` full-length columns of height d: adds cols to each of the
// first d parts (missing parts count as zero).
inline Partition trivial_extension(const Partition& lambda, int d, int cols) {
  require(cols >= 0, "column count must be nonnegative");
  require_partition(lambda);
  require(rows_of(lambda) <= d,
          "trivial extension needs at most d rows, got " +
              partition_to_string(lambda));
  if (cols == 0) return lambda;
  Partition out(static_cast<std::size_t>(d), 0);
  for (int i = 1; i <= d; ++i)
    out[static_cast<std::size_t>(i - 1)] = part_at(lambda, i) + cols;
  return strip_zeros(out);
}

// All partitions of n with at most max_rows rows and parts at most max_part
// (negative bounds mean unbounded), descending lexicographic.
inline std::vector<Partition> partitions_of(int n, int max_rows = -1,
                                            int max_part = -1) {
  require(n >= 0, "partition size must be nonnegative");
  if (max_rows < 0) max_rows = n;
  if (max_part < 0) max_part = n;
  std::vector<Partition> out;
  Partition acc;
  auto rec = [&](auto&& self, int remaining, int cap, int rows_left) -> void {
    if (remaining == 0) {
      out.push_back(acc);
      return;
    }
    if (rows_left == 0) return;
    for (int v = std::min(cap, remaining); v >= 1; --v) {
      acc.push_back(v);
      self(self, remaining - v, v, rows_left - 1);
      acc.pop_back();
    }
  };
  rec(rec, n, std::min(max_part, n), max_rows);
  return out;  // recursion emits descending lexicographic already
}

// (t,d)-admissible partitions, optionally capped by first part.
inline std::vector<Partition> admissible_partitions(int t, int d,
                                                    std::optional<int> max_first = {}) {
  require(t >= 1 && d >= 0, "need t >= 1, d >= 0");
  return partitions_of(t * d, d, max_first ? *max_first : t * d);
}

// Partitions obtained by removing one corner box.
inline std::vector<Partition> corner_removals(const Partition& mu) {
  require_partition(mu);
  std::vector<Partition> out;
  for (int i = 1; i <= rows_of(mu); ++i) {
    if (part_at(mu, i) > part_at(mu, i + 1)) {
      Partition nu = mu;
      nu[static_cast<std::size_t>(i - 1)] -= 1;
      out.push_back(strip_zeros(nu));
    }
  }
  std::sort(out.begin(), out.end(), desc_lex_less);
  return out;
}

// If lambda occurs in exactly one Schur functor of the t-th exterior power,
// with multiplicity one, returns that degree-d shape; otherwise empty.
//
// Degree <= 1 is immediate; degree 2 splits the two-row shape (t+u, t-u) by
// the parity of u (u even lies in the symmetric square in the convention
// where the one-column shape is the symmetric power); degree >= 3 recurses:
// every strip predecessor must be single-type, the types must be pairwise
// distinct, and together they must form the corner-removal set of a (then
// unique) shape.
inline std::optional<Partition> is_single_type(const Partition& lambda, int t) {
  const int d = admissible_degree(lambda, t);
  if (d == 0) return Partition{};
  if (d == 1) return Partition{1};
  if (d == 2) {
    const int u = part_at(lambda, 1) - t;
    return (u % 2 == 0) ? Partition{1, 1} : Partition{2};
  }
  const std::vector<Partition> preds = predecessors(lambda, t);
  std::set<Partition> types;
  for (const Partition& alpha : preds) {
    auto sub = is_single_type(alpha, t);
    if (!sub) return std::nullopt;
    if (!types.insert(*sub).second) return std::nullopt;  // duplicate type
  }
  std::optional<Partition> found;
  for (const Partition& mu : partitions_of(d, d, d)) {
    const std::vector<Partition> corners = corner_removals(mu);
    if (std::set<Partition>(corners.begin(), corners.end()) == types) {
      if (found)
        throw std::logic_error("corner-removal sets fail to distinguish shapes");
      found = mu;
    }
  }
  return found;
}

struct BiShape {
  Partition row;
  Partition col;

  bool is_symmetric() const { return row == col; }
  auto operator<=>(const BiShape&) const = default;
};

inline std::string bishape_to_string(const BiShape& b) {
  return "(" + partition_to_string(b.row) + "|" + partition_to_string(b.col) + ")";
}

// Pairs (gamma|lambda) of distinct (t,d)-admissible shapes sharing a unique
// strip predecessor of tensor multiplicity one: the tensor-algebra analogue
// of a minimal relation pair, found by direct search. Ascending lex order.
inline std::vector<BiShape> classify_tshape(int t, int d) {
  require(t >= 1, "minor size t must be positive");
  require(d >= 3, "classification applies to degree >= 3");
  std::map<Partition, std::vector<Partition>> by_pred;
  for (const Partition& lambda : admissible_partitions(t, d)) {
    std::vector<Partition> preds = predecessors(lambda, t);
    if (preds.size() == 1) by_pred[preds.front()].push_back(lambda);
  }
  std::vector<BiShape> out;
  for (const auto& [alpha, members] : by_pred) {
    if (members.size() < 2) continue;
    if (tensor_multiplicity(alpha, t) != 1) continue;
    for (const Partition& g : members)
      for (const Partition& l : members)
        if (g != l) out.push_back(BiShape{g, l});
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace minors
