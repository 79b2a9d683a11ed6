// Exact tensors on tuples of basis vectors, Young symmetrizers, strip-chain
// tableaux, and the lift that extends a highest weight vector along one
// added horizontal strip.  These power the construction and verification of
// highest bi-weight vectors.
#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "minors/minor_poly.hpp"
#include "minors/partition.hpp"
#include "minors/types.hpp"

namespace minors {

// A sum of basis tensors with integer coefficients.  A key stores one byte
// per slot (basis index, 1-based); the first row_slots bytes are V-side
// slots, the remaining col_slots bytes are W*-side slots.  When block > 1,
// consecutive groups of `block` slots are exterior-power blocks kept sorted
// ascending (insertion canonicalizes and tracks the sign).
struct Tensor {
  int block = 1;
  int row_slots = 0;
  int col_slots = 0;
  std::map<std::string, Int> terms;

  int total_slots() const { return row_slots + col_slots; }

  void add(std::string key, Int coeff) {
    if (coeff == 0) return;
    if (block > 1) {
      for (int start = 0; start < total_slots(); start += block) {
        // Bubble the block ascending, flipping the sign per swap.
        for (int i = start; i < start + block; ++i)
          for (int j = start + block - 1; j > i; --j) {
            if (key[j] == key[j - 1]) return;  // repeated wedge factor
            if (static_cast<unsigned char>(key[j]) <
                static_cast<unsigned char>(key[j - 1])) {
              std::swap(key[j], key[j - 1]);
              coeff = -coeff;
            }
          }
      }
    }
    auto it = terms.find(key);
    if (it == terms.end()) {
      terms.emplace(std::move(key), std::move(coeff));
    } else {
      it->second += coeff;
      if (it->second == 0) terms.erase(it);
    }
  }

  bool is_zero() const { return terms.empty(); }
};

enum class Side { Row, Col };

// A tableau lists, row by row, the slot numbers (1..N) sitting in each cell
// of a partition shape.
using Tableau = std::vector<std::vector<int>>;

namespace detail {

inline void validate_tableau(const Tableau& tab) {
  std::vector<int> seen;
  Partition shape;
  for (const auto& row : tab) {
    shape.push_back(static_cast<int>(row.size()));
    for (int s : row) seen.push_back(s);
  }
  require_partition(shape);
  std::sort(seen.begin(), seen.end());
  for (std::size_t i = 0; i < seen.size(); ++i)
    require(seen[i] == static_cast<int>(i) + 1,
            "tableau entries must be the slots 1..N, each exactly once");
}

// All permutations moving slots only within the given blocks, as 1-based
// slot maps with their signs.
inline std::vector<std::pair<std::vector<int>, int>> block_permutations(
    const std::vector<std::vector<int>>& blocks, int n_slots) {
  std::vector<std::pair<std::vector<int>, int>> out;
  std::vector<int> identity(static_cast<std::size_t>(n_slots) + 1);
  for (int i = 0; i <= n_slots; ++i) identity[static_cast<std::size_t>(i)] = i;
  out.push_back({identity, 1});
  for (const auto& blk : blocks) {
    if (blk.size() <= 1) continue;
    std::vector<int> sorted = blk;
    std::sort(sorted.begin(), sorted.end());
    std::vector<std::pair<std::vector<int>, int>> next;
    std::vector<int> arrangement = sorted;
    do {
      int inversions = 0;
      for (std::size_t i = 0; i < arrangement.size(); ++i)
        for (std::size_t j = i + 1; j < arrangement.size(); ++j)
          if (arrangement[i] > arrangement[j]) ++inversions;
      const int sign = inversions % 2 == 0 ? 1 : -1;
      for (const auto& [perm, s] : out) {
        std::vector<int> composed = perm;
        for (std::size_t i = 0; i < sorted.size(); ++i)
          composed[static_cast<std::size_t>(sorted[i])] =
              perm[static_cast<std::size_t>(arrangement[i])];
        next.push_back({std::move(composed), s * sign});
      }
    } while (std::next_permutation(arrangement.begin(), arrangement.end()));
    out = std::move(next);
  }
  return out;
}

inline std::vector<std::vector<int>> tableau_columns(const Tableau& tab) {
  std::vector<std::vector<int>> cols;
  for (const auto& row : tab) {
    if (row.size() > cols.size()) cols.resize(row.size());
    for (std::size_t j = 0; j < row.size(); ++j) cols[j].push_back(row[j]);
  }
  return cols;
}

}  // namespace detail

// Antisymmetrizes the filling over the rows of the tableau (with signs) and
// symmetrizes over its columns.  The image of this operator on the full
// tensor power is a single irreducible copy whose shape is the tableau's;
// with this orientation the one-row shape gives the alternating square:
// shape (2) on filling (1,2) yields e1 (x) e2 - e2 (x) e1.
inline Tensor young_symmetrizer(const Tableau& tab,
                                const std::vector<int>& filling) {
  detail::validate_tableau(tab);
  int n_slots = 0;
  for (const auto& row : tab) n_slots += static_cast<int>(row.size());
  require(static_cast<int>(filling.size()) == n_slots,
          "filling must assign one basis index per slot");
  for (int v : filling)
    require(v >= 1 && v <= 255, "basis indices must lie in 1..255");

  const auto row_perms = detail::block_permutations(tab, n_slots);
  const auto col_perms =
      detail::block_permutations(detail::tableau_columns(tab), n_slots);

  Tensor out;
  out.block = 1;
  out.row_slots = n_slots;
  std::string key(static_cast<std::size_t>(n_slots), '\0');
  for (const auto& [cperm, csign] : col_perms) {
    (void)csign;  // column symmetrization carries no sign
    for (const auto& [rperm, rsign] : row_perms) {
      for (int p = 1; p <= n_slots; ++p)
        key[static_cast<std::size_t>(p - 1)] = static_cast<char>(
            filling[static_cast<std::size_t>(
                        rperm[static_cast<std::size_t>(
                            cperm[static_cast<std::size_t>(p)])]) -
                    1]);
      out.add(key, rsign);
    }
  }
  return out;
}

// Slot tableau obtained by peeling maximal strip predecessors: strip k
// occupies slots (k-1)t+1..kt, placed in ascending column order.  Its
// symmetrizer usually survives the block projection below; see
// wedge_compatible_tableau for the guaranteed variant.
inline Tableau strip_chain_tableau(const Partition& lambda, int t) {
  const int d = admissible_degree(lambda, t);
  std::vector<Partition> chain(static_cast<std::size_t>(d) + 1);
  chain[static_cast<std::size_t>(d)] = lambda;
  for (int k = d; k >= 1; --k) {
    const auto preds = predecessors(chain[static_cast<std::size_t>(k)], t);
    require(!preds.empty(), "internal error: admissible shape lost its chain");
    chain[static_cast<std::size_t>(k - 1)] = preds.front();
  }
  Tableau tab(static_cast<std::size_t>(rows_of(lambda)));
  for (int i = 0; i < rows_of(lambda); ++i)
    tab[static_cast<std::size_t>(i)].resize(
        static_cast<std::size_t>(lambda[static_cast<std::size_t>(i)]));
  int slot = 1;
  for (int k = 1; k <= d; ++k) {
    std::vector<std::pair<int, int>> cells;  // (column, row)
    for (int i = 1; i <= rows_of(chain[static_cast<std::size_t>(k)]); ++i)
      for (int j = part_at(chain[static_cast<std::size_t>(k - 1)], i) + 1;
           j <= part_at(chain[static_cast<std::size_t>(k)], i); ++j)
        cells.push_back({j, i});
    std::sort(cells.begin(), cells.end());
    for (auto [j, i] : cells)
      tab[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)] =
          slot++;
  }
  return tab;
}

// The filling that writes each cell's column number into its slot.
inline std::vector<int> column_filling(const Tableau& tab) {
  int n_slots = 0;
  for (const auto& row : tab) n_slots += static_cast<int>(row.size());
  std::vector<int> filling(static_cast<std::size_t>(n_slots));
  for (const auto& row : tab)
    for (std::size_t j = 0; j < row.size(); ++j)
      filling[static_cast<std::size_t>(row[j] - 1)] = static_cast<int>(j) + 1;
  return filling;
}

// Wedges each consecutive group of t slots: the canonical surjection from
// the plain tensor power onto the tensor power of exterior powers.
inline Tensor project_blocks(const Tensor& input, int t) {
  require(t >= 1, "block size must be positive");
  require(input.block == 1, "input must be a plain tensor");
  require(input.row_slots % t == 0 && input.col_slots % t == 0,
          "slot count must be divisible by the block size");
  Tensor out;
  out.block = t;
  out.row_slots = input.row_slots;
  out.col_slots = input.col_slots;
  for (const auto& [key, coeff] : input.terms) out.add(key, coeff);
  return out;
}

// A slot tableau for lambda whose symmetrizer image survives the block
// projection (so the projected image is the full irreducible copy).  The
// strip-chain tableau is tried first, then every other predecessor chain.
inline Tableau wedge_compatible_tableau(const Partition& lambda, int t) {
  const int d = admissible_degree(lambda, t);
  auto survives = [&](const Tableau& tab) {
    return !project_blocks(young_symmetrizer(tab, column_filling(tab)), t)
                .is_zero();
  };
  Tableau primary = strip_chain_tableau(lambda, t);
  if (survives(primary)) return primary;
  // Fall back to an exhaustive search over predecessor chains.
  std::vector<Partition> chain(static_cast<std::size_t>(d) + 1);
  chain[static_cast<std::size_t>(d)] = lambda;
  std::optional<Tableau> found;
  auto dfs = [&](auto&& self, int k) -> void {
    if (found) return;
    if (k == 0) {
      Tableau tab(static_cast<std::size_t>(rows_of(lambda)));
      for (int i = 0; i < rows_of(lambda); ++i)
        tab[static_cast<std::size_t>(i)].resize(
            static_cast<std::size_t>(lambda[static_cast<std::size_t>(i)]));
      int slot = 1;
      for (int s = 1; s <= d; ++s) {
        std::vector<std::pair<int, int>> cells;
        for (int i = 1; i <= rows_of(chain[static_cast<std::size_t>(s)]); ++i)
          for (int j = part_at(chain[static_cast<std::size_t>(s - 1)], i) + 1;
               j <= part_at(chain[static_cast<std::size_t>(s)], i); ++j)
            cells.push_back({j, i});
        std::sort(cells.begin(), cells.end());
        for (auto [j, i] : cells)
          tab[static_cast<std::size_t>(i - 1)]
             [static_cast<std::size_t>(j - 1)] = slot++;
      }
      if (survives(tab)) found = tab;
      return;
    }
    for (const Partition& alpha :
         predecessors(chain[static_cast<std::size_t>(k)], t)) {
      chain[static_cast<std::size_t>(k - 1)] = alpha;
      self(self, k - 1);
      if (found) return;
    }
  };
  dfs(dfs, d);
  if (!found)
    throw std::logic_error("no predecessor chain survives the block projection");
  return *found;
}

// Extends the symmetrizer image along one added strip: for gamma obtained
// from lambda by appending t boxes, no two in the same column, returns the
// highest weight vector of the copy of the gamma-shape inside (symmetrizer
// image of lambda under the slot tableau tab) (x) (one more exterior
// block), as a plain tensor on |gamma| slots.
inline Tensor successor_lift(const Tableau& tab, const Partition& lambda,
                             const Partition& gamma, int t) {
  require_partition(lambda);
  require_partition(gamma);
  const int added = size_of(gamma) - size_of(lambda);
  require(added == t && t >= 1,
          "the target shape must add exactly one strip of t boxes");
  for (int i = 1; i <= rows_of(gamma); ++i) {
    require(part_at(gamma, i) >= part_at(lambda, i),
            "the target shape must contain the source shape");
    require(part_at(gamma, i + 1) <= part_at(lambda, i),
            "added boxes must avoid repeating a column");
  }

  struct Group {
    int row = 0;        // 1-based row receiving boxes
    int threshold = 0;  // window starts after this column
    int window = 0;     // columns threshold+1..lambda_row are permuted
  };
  std::vector<Group> groups;
  for (int i = 1; i <= rows_of(gamma); ++i)
    if (part_at(gamma, i) > part_at(lambda, i)) groups.push_back({i, 0, 0});
  require(!groups.empty(), "no boxes to add");
  for (std::size_t l = 0; l < groups.size(); ++l) {
    groups[l].threshold =
        (l + 1 < groups.size()) ? part_at(gamma, groups[l + 1].row) : 0;
    groups[l].window = part_at(lambda, groups[l].row) - groups[l].threshold;
    require(groups[l].window >= 0, "internal error: negative window");
  }
  const int m = part_at(gamma, groups.front().row);

  Int factor = 1;
  for (const Group& g : groups)
    for (int i = 2; i <= g.window; ++i) factor *= i;

  Tensor out;
  out.block = 1;
  out.row_slots = size_of(gamma);

  std::vector<int> perm(static_cast<std::size_t>(m));
  for (int i = 0; i < m; ++i) perm[static_cast<std::size_t>(i)] = i + 1;
  const int n_base = size_of(lambda);
  std::vector<int> filling(static_cast<std::size_t>(n_base));
  do {
    // Keep one representative per assignment: each permuted window must be
    // ascending; window values at or below the threshold collide with the
    // fixed entries of the same row and contribute nothing.
    bool keep = true;
    for (const Group& g : groups) {
      int prev = 0;
      for (int j = g.threshold + 1; keep && j <= g.threshold + g.window; ++j) {
        const int v = perm[static_cast<std::size_t>(j - 1)];
        if (v <= g.threshold || v <= prev) keep = false;
        prev = v;
      }
    }
    if (!keep) continue;
    int inversions = 0;
    for (int i = 0; i < m; ++i)
      for (int j = i + 1; j < m; ++j)
        if (perm[static_cast<std::size_t>(i)] > perm[static_cast<std::size_t>(j)])
          ++inversions;
    const int sign = inversions % 2 == 0 ? 1 : -1;

    for (int i = 1; i <= rows_of(lambda); ++i)
      for (int j = 1; j <= part_at(lambda, i); ++j)
        filling[static_cast<std::size_t>(
            tab[static_cast<std::size_t>(i - 1)]
               [static_cast<std::size_t>(j - 1)] -
            1)] = j;
    for (const Group& g : groups)
      for (int j = g.threshold + 1; j <= g.threshold + g.window; ++j)
        filling[static_cast<std::size_t>(
            tab[static_cast<std::size_t>(g.row - 1)]
               [static_cast<std::size_t>(j - 1)] -
            1)] = perm[static_cast<std::size_t>(j - 1)];

    std::string appended;
    for (auto it = groups.rbegin(); it != groups.rend(); ++it)
      for (int j = part_at(lambda, it->row) + 1; j <= part_at(gamma, it->row);
           ++j)
        appended += static_cast<char>(perm[static_cast<std::size_t>(j - 1)]);

    const Tensor partial = young_symmetrizer(tab, filling);
    for (const auto& [key, coeff] : partial.terms)
      out.add(key + appended, coeff * sign * factor);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

inline Tensor successor_lift(const Partition& lambda, const Partition& gamma,
                             int t) {
  return successor_lift(wedge_compatible_tableau(lambda, t), lambda, gamma, t);
}

// Glues a V-side tensor and a W*-side tensor into one bi-tensor.
inline Tensor bi_tensor(const Tensor& row_part, const Tensor& col_part) {
  require(row_part.block == col_part.block, "block sizes must agree");
  require(row_part.col_slots == 0 && col_part.col_slots == 0,
          "both inputs must be single-sided");
  Tensor out;
  out.block = row_part.block;
  out.row_slots = row_part.row_slots;
  out.col_slots = col_part.row_slots;
  for (const auto& [rkey, rcoeff] : row_part.terms)
    for (const auto& [ckey, ccoeff] : col_part.terms)
      out.add(rkey + ckey, rcoeff * ccoeff);
  return out;
}

// Leibniz action of the lowering that rewrites basis index `from` as `to`
// on the chosen side.
inline Tensor lowering(const Tensor& input, int from, int to, Side side) {
  require(from > to && to >= 1, "lowering rewrites a higher index as a lower one");
  Tensor out;
  out.block = input.block;
  out.row_slots = input.row_slots;
  out.col_slots = input.col_slots;
  const int begin = side == Side::Row ? 0 : input.row_slots;
  const int end = side == Side::Row ? input.row_slots : input.total_slots();
  for (const auto& [key, coeff] : input.terms)
    for (int p = begin; p < end; ++p)
      if (key[static_cast<std::size_t>(p)] == static_cast<char>(from)) {
        std::string next = key;
        next[static_cast<std::size_t>(p)] = static_cast<char>(to);
        out.add(std::move(next), coeff);
      }
  return out;
}

// The common weight of all terms; rejects tensors that are not homogeneous
// of a single bi-weight.  Row-side entries are occurrence counts; the
// column side lives in the dual space, so its entries are negated counts
// (index i carries weight -1 there).
inline std::pair<WeightVector, WeightVector> weight_of(const Tensor& input) {
  require(!input.terms.empty(), "weight of the zero tensor is undefined");
  auto counts = [&](const std::string& key) {
    WeightVector row, col;
    auto bump = [](WeightVector& w, int i) {
      if (static_cast<int>(w.size()) < i) w.resize(static_cast<std::size_t>(i), 0);
      ++w[static_cast<std::size_t>(i - 1)];
    };
    for (int p = 0; p < input.row_slots; ++p)
      bump(row, static_cast<unsigned char>(key[static_cast<std::size_t>(p)]));
    for (int p = input.row_slots; p < input.total_slots(); ++p)
      bump(col, static_cast<unsigned char>(key[static_cast<std::size_t>(p)]));
    return std::pair<WeightVector, WeightVector>{row, col};
  };
  auto expected = counts(input.terms.begin()->first);
  for (const auto& [key, coeff] : input.terms)
    require(counts(key) == expected, "tensor is not of a single bi-weight");
  for (int& c : expected.second) c = -c;
  return expected;
}

// True when every lowering on the chosen side kills the tensor.  On the
// row side the lowerings generate the lower-triangular unipotent group of
// GL(V); on the dual column side the same operators realize the relevant
// unipotent subgroup of GL(W), so both sides test higher-to-lower rewrites.
inline bool check_u_invariant(const Tensor& input, Side side) {
  if (input.terms.empty()) return false;
  const auto [row_w, col_w] = weight_of(input);
  const int top =
      static_cast<int>((side == Side::Row ? row_w : col_w).size());
  for (int from = 2; from <= top; ++from)
    for (int to = 1; to < from; ++to)
      if (!lowering(input, from, to, side).is_zero()) return false;
  return true;
}

// True when every lowering on both sides kills the tensor: the defining
// property of a highest bi-weight vector.
inline bool is_highest_weight(const Tensor& input) {
  return check_u_invariant(input, Side::Row) &&
         check_u_invariant(input, Side::Col);
}

// Projects a bi-tensor of wedge blocks onto the symmetric power: the k-th
// row block pairs with the k-th column block as one minor symbol, and the
// d symbols multiply commutatively.
inline MinorPolynomial symmetrize_to_poly(const Tensor& input) {
  require(input.block >= 1 && input.row_slots == input.col_slots &&
              input.row_slots % input.block == 0,
          "need a bi-tensor with equally many row and column blocks");
  const int t = input.block;
  const int d = input.row_slots / t;
  MinorPolynomial out;
  for (const auto& [key, coeff] : input.terms) {
    Monomial mono;
    for (int k = 0; k < d; ++k) {
      std::vector<int> rows, cols;
      for (int p = 0; p < t; ++p) {
        rows.push_back(
            static_cast<unsigned char>(key[static_cast<std::size_t>(k * t + p)]));
        cols.push_back(static_cast<unsigned char>(
            key[static_cast<std::size_t>(input.row_slots + k * t + p)]));
      }
      mono.push_back(MinorSymbol{std::move(rows), std::move(cols)});
    }
    out.add(std::move(mono), coeff);
  }
  return out;
}

// Human-readable dump, one term per line: coefficient, then the blocks.
inline std::string tensor_to_string(const Tensor& input) {
  std::string out;
  const int t = input.block;
  auto block_str = [&](const std::string& key, int offset) {
    std::string s;
    for (int p = 0; p < t; ++p) {
      if (p) s += ",";
      s += std::to_string(
          static_cast<unsigned char>(key[static_cast<std::size_t>(offset + p)]));
    }
    return s;
  };
  for (const auto& [key, coeff] : input.terms) {
    out += coeff.str() + "  ";
    const bool paired =
        input.col_slots == input.row_slots && input.col_slots > 0;
    for (int k = 0; k * t < input.row_slots; ++k) {
      if (k) out += " ⊗ ";
      if (paired) {
        out += "(" + block_str(key, k * t) + "|" +
               block_str(key, input.row_slots + k * t) + ")";
      } else {
        out += "(" + block_str(key, k * t) + ")";
      }
    }
    if (!paired && input.col_slots > 0) {
      out += " | ";
      for (int k = 0; k * t < input.col_slots; ++k) {
        if (k) out += " ⊗ ";
        out += "(" + block_str(key, input.row_slots + k * t) + ")";
      }
    }
    out += "\n";
  }
  return out;
}

}  // namespace minors
