// Explicit minimal relations between the t-minors of a generic matrix: the
// quadratic family (Pluecker relations and their odd-width relatives), the
// two cubic families, determinantal relations on staircase index segments,
// and the tensor models of their highest weight vectors.
#pragma once

#include <algorithm>
#include <functional>
#include <vector>

#include "minors/minor_poly.hpp"
#include "minors/partition.hpp"
#include "minors/tensor.hpp"
#include "minors/types.hpp"

namespace minors {

namespace detail {

inline std::vector<int> range_set(int lo, int hi) {
  std::vector<int> out;
  for (int i = lo; i <= hi; ++i) out.push_back(i);
  return out;
}

inline std::vector<std::vector<int>> subsets_of(const std::vector<int>& ground,
                                                int k) {
  std::vector<std::vector<int>> out;
  std::vector<int> acc;
  auto rec = [&](auto&& self, std::size_t next) -> void {
    if (static_cast<int>(acc.size()) == k) {
      out.push_back(acc);
      return;
    }
    if (ground.size() - next < k - acc.size()) return;
    for (std::size_t i = next; i < ground.size(); ++i) {
      acc.push_back(ground[i]);
      self(self, i + 1);
      acc.pop_back();
    }
  };
  rec(rec, 0);
  return out;
}

inline std::vector<int> set_minus(const std::vector<int>& ground,
                                  const std::vector<int>& sub) {
  std::vector<int> out;
  std::set_difference(ground.begin(), ground.end(), sub.begin(), sub.end(),
                      std::back_inserter(out));
  return out;
}

inline std::vector<int> join(std::vector<int> a, const std::vector<int>& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

// All ordered splittings of `ground` into parts of the given sizes.
inline void ordered_partitions(
    const std::vector<int>& ground, const std::vector<int>& sizes,
    const std::function<void(const std::vector<std::vector<int>>&)>& emit) {
  std::vector<std::vector<int>> parts;
  auto rec = [&](auto&& self, std::vector<int> rest, std::size_t idx) -> void {
    if (idx == sizes.size()) {
      emit(parts);
      return;
    }
    for (const auto& choice : subsets_of(rest, sizes[idx])) {
      parts.push_back(choice);
      self(self, set_minus(rest, choice), idx + 1);
      parts.pop_back();
    }
  };
  rec(rec, ground, 0);
}

}  // namespace detail

// ----------------------------------------------------------------------
// Bi-shapes of the families.

inline BiShape quadratic_bishape(int t, int u, int v) {
  return {strip_zeros({t + u, t - u}), strip_zeros({t + v, t - v})};
}

inline BiShape even_cubic_bishape(int t, int u) {
  return {strip_zeros({t + u, t + u, t - 2 * u}),
          strip_zeros({t + 2 * u, t - u, t - u})};
}

inline BiShape odd_cubic_bishape(int t, int u) {
  return {strip_zeros({t + u, t + u - 1, t - 2 * u + 1}),
          strip_zeros({t + 2 * u - 1, t - u + 1, t - u})};
}

// ----------------------------------------------------------------------
// Quadratic relations.

// The degree-2 relation on the bi-shape pair ((t+u,t-u)|(t+v,t-v)); u+v
// even and u != v.  Pluecker exactly when u or v is zero.
inline MinorPolynomial quadratic_relation(int t, int u, int v) {
  require(t >= 1, "minor size must be positive");
  require(0 <= u && u <= t && 0 <= v && v <= t, "need 0 <= u, v <= t");
  require((u + v) % 2 == 0, "the widths must have equal parity");
  require(u != v, "equal widths give the symmetric square, not a relation");
  const auto row_ground = detail::range_set(t - u + 1, t + u);
  const auto col_ground = detail::range_set(t - v + 1, t + v);
  const auto row_prefix = detail::range_set(1, t - u);
  const auto col_prefix = detail::range_set(1, t - v);
  MinorPolynomial out;
  for (const auto& I : detail::subsets_of(row_ground, u)) {
    const auto J = detail::set_minus(row_ground, I);
    if (u > 0 && !(I < J)) continue;  // halve on the wider side when possible
    const int row_sign = concatenation_sign({I, J});
    for (const auto& H : detail::subsets_of(col_ground, v)) {
      const auto K = detail::set_minus(col_ground, H);
      if (u == 0 && !(H < K)) continue;
      const int col_sign = concatenation_sign({H, K});
      auto [s1, sym1] = canonical_symbol(detail::join(row_prefix, I),
                                         detail::join(col_prefix, H));
      auto [s2, sym2] = canonical_symbol(detail::join(row_prefix, J),
                                         detail::join(col_prefix, K));
      out.add({sym1, sym2}, Int(row_sign * col_sign * s1 * s2));
    }
  }
  return normalize_poly(out);
}

// ----------------------------------------------------------------------
// Even cubic relations.

// The cubic relation on ((t+u,t+u,t-2u)|(t+2u,t-u,t-u)), 1 <= u <= t/2.
inline MinorPolynomial even_cubic(int t, int u) {
  require(t >= 2, "minor size must be at least 2");
  require(1 <= u && u <= t / 2, "need 1 <= u <= t/2");
  const auto K = detail::range_set(t - 2 * u + 1, t + u);
  const auto P = detail::range_set(1, t - 2 * u);
  const auto Q = detail::range_set(1, t - u);
  const auto col_ground = detail::range_set(t - u + 1, t + 2 * u);
  MinorPolynomial out;
  detail::ordered_partitions(K, {u, u, u}, [&](const auto& abc) {
    if (!(abc[0] < abc[1] && abc[1] < abc[2])) return;  // one of six orders
    const int row_sign = concatenation_sign({abc[0], abc[1], abc[2]});
    const std::vector<std::vector<int>> row_sets = {
        detail::join(P, detail::set_minus(K, abc[0])),
        detail::join(P, detail::set_minus(K, abc[1])),
        detail::join(P, detail::set_minus(K, abc[2]))};
    detail::ordered_partitions(col_ground, {u, u, u}, [&](const auto& lmn) {
      const int col_sign = concatenation_sign({lmn[0], lmn[1], lmn[2]});
      Monomial mono;
      for (int k = 0; k < 3; ++k) {
        auto [s, sym] =
            canonical_symbol(row_sets[static_cast<std::size_t>(k)],
                             detail::join(Q, lmn[static_cast<std::size_t>(k)]));
        require(s == 1, "internal error: even cubic symbols arrive sorted");
        mono.push_back(std::move(sym));
      }
      out.add(std::move(mono), Int(row_sign * col_sign));
    });
  });
  return normalize_poly(out);
}

// ----------------------------------------------------------------------
// Odd cubic relations.

// The cubic relation on ((t+u,t+u-1,t-2u+1)|(t+2u-1,t-u+1,t-u)),
// 2 <= u <= (t+1)/2.  Each summand is a two-product bracket; the second
// product swaps the column sets of the first two factors and carries the
// relative sign (-1)^u.  (With the convention that a transferred index
// participates in the concatenation sign of its block, the relative sign
// is constant -1; our signs are computed on the plain blocks A,B,C and
// L,M,N, which shifts it by (-1)^(u-1).  The choice here is validated by
// the highest-weight checks in the test suite.)
inline MinorPolynomial odd_cubic(int t, int u) {
  require(t >= 3, "minor size must be at least 3");
  require(2 <= u && 2 * u <= t + 1, "need 2 <= u <= (t+1)/2");
  const int swap_sign = u % 2 == 0 ? 1 : -1;
  const auto K = detail::range_set(t - 2 * u + 2, t + u - 1);
  const auto P = detail::range_set(1, t - 2 * u + 1);
  const auto Q = detail::range_set(1, t - u);
  const auto col_ground = detail::range_set(t - u + 2, t + 2 * u - 1);
  MinorPolynomial out;
  detail::ordered_partitions(K, {u - 1, u, u - 1}, [&](const auto& abc) {
    const int row_sign = concatenation_sign({abc[0], abc[1], abc[2]});
    const auto row_a = detail::join(P, detail::set_minus(K, abc[0]));
    const auto row_b = detail::join(
        detail::join(P, detail::set_minus(K, abc[1])), {t + u});
    const auto row_c = detail::join(P, detail::set_minus(K, abc[2]));
    detail::ordered_partitions(
        col_ground, {u - 1, u, u - 1}, [&](const auto& lmn) {
          const int col_sign = concatenation_sign({lmn[0], lmn[1], lmn[2]});
          const auto col_l1 =
              detail::join(detail::join(Q, lmn[0]), {t - u + 1});
          const auto col_m = detail::join(Q, lmn[1]);
          const auto col_n1 =
              detail::join(detail::join(Q, lmn[2]), {t - u + 1});
          {
            auto [sa, syma] = canonical_symbol(row_a, col_l1);
            auto [sb, symb] = canonical_symbol(row_b, col_m);
            auto [sc, symc] = canonical_symbol(row_c, col_n1);
            out.add({syma, symb, symc},
                    Int(row_sign * col_sign * sa * sb * sc));
          }
          {
            auto [sa, syma] = canonical_symbol(row_a, col_m);
            auto [sb, symb] = canonical_symbol(row_b, col_l1);
            auto [sc, symc] = canonical_symbol(row_c, col_n1);
            out.add({syma, symb, symc},
                    Int(swap_sign * row_sign * col_sign * sa * sb * sc));
          }
        });
  });
  return normalize_poly(out);
}

// ----------------------------------------------------------------------
// Highest weight tensor models of the same families.

// Degree 2, V-side: sum over I | J = {t-u+1..t+u} of signed wedge pairs.
inline Tensor quadratic_side_tensor(int t, int u) {
  require(t >= 1 && 0 <= u && u <= t, "need 0 <= u <= t");
  const auto ground = detail::range_set(t - u + 1, t + u);
  const auto prefix = detail::range_set(1, t - u);
  Tensor out;
  out.block = t;
  out.row_slots = 2 * t;
  for (const auto& I : detail::subsets_of(ground, u)) {
    const auto J = detail::set_minus(ground, I);
    std::string key;
    for (int x : detail::join(prefix, I)) key += static_cast<char>(x);
    for (int x : detail::join(prefix, J)) key += static_cast<char>(x);
    out.add(std::move(key), Int(concatenation_sign({I, J})));
  }
  return out;
}

// Degree 3 even family, V-side and W*-side.
inline Tensor even_cubic_row_tensor(int t, int u) {
  require(t >= 2 && 1 <= u && u <= t / 2, "need 1 <= u <= t/2");
  const auto K = detail::range_set(t - 2 * u + 1, t + u);
  const auto P = detail::range_set(1, t - 2 * u);
  Tensor out;
  out.block = t;
  out.row_slots = 3 * t;
  detail::ordered_partitions(K, {u, u, u}, [&](const auto& abc) {
    std::string key;
    for (int k = 0; k < 3; ++k)
      for (int x : detail::join(
               P, detail::set_minus(K, abc[static_cast<std::size_t>(k)])))
        key += static_cast<char>(x);
    out.add(std::move(key),
            Int(concatenation_sign({abc[0], abc[1], abc[2]})));
  });
  return out;
}

inline Tensor even_cubic_col_tensor(int t, int u) {
  require(t >= 2 && 1 <= u && u <= t / 2, "need 1 <= u <= t/2");
  const auto ground = detail::range_set(t - u + 1, t + 2 * u);
  const auto Q = detail::range_set(1, t - u);
  Tensor out;
  out.block = t;
  out.row_slots = 3 * t;
  detail::ordered_partitions(ground, {u, u, u}, [&](const auto& lmn) {
    std::string key;
    for (int k = 0; k < 3; ++k)
      for (int x : detail::join(Q, lmn[static_cast<std::size_t>(k)]))
        key += static_cast<char>(x);
    out.add(std::move(key),
            Int(concatenation_sign({lmn[0], lmn[1], lmn[2]})));
  });
  return out;
}

// Degree 3 odd family: two slot arrangements combined with the relative
// sign (-1)^u (same convention as odd_cubic above).
inline Tensor odd_cubic_row_tensor(int t, int u) {
  require(t >= 3 && 2 <= u && 2 * u <= t + 1, "need 2 <= u <= (t+1)/2");
  const int swap_sign = u % 2 == 0 ? 1 : -1;
  const auto K = detail::range_set(t - 2 * u + 2, t + u - 1);
  const auto P = detail::range_set(1, t - 2 * u + 1);
  Tensor out;
  out.block = t;
  out.row_slots = 3 * t;
  detail::ordered_partitions(K, {u - 1, u, u - 1}, [&](const auto& abc) {
    const int sign = concatenation_sign({abc[0], abc[1], abc[2]});
    const auto fa = detail::join(P, detail::set_minus(K, abc[0]));
    const auto fb =
        detail::join(detail::join(P, detail::set_minus(K, abc[1])), {t + u});
    const auto fc = detail::join(P, detail::set_minus(K, abc[2]));
    auto emit = [&](const std::vector<int>& x, const std::vector<int>& y,
                    const std::vector<int>& z, int c) {
      std::string key;
      for (int v : x) key += static_cast<char>(v);
      for (int v : y) key += static_cast<char>(v);
      for (int v : z) key += static_cast<char>(v);
      out.add(std::move(key), Int(c));
    };
    emit(fa, fb, fc, sign);
    emit(fb, fa, fc, swap_sign * sign);
  });
  return out;
}

inline Tensor odd_cubic_col_tensor(int t, int u) {
  require(t >= 3 && 2 <= u && 2 * u <= t + 1, "need 2 <= u <= (t+1)/2");
  const int swap_sign = u % 2 == 0 ? 1 : -1;
  const auto ground = detail::range_set(t - u + 2, t + 2 * u - 1);
  const auto Q = detail::range_set(1, t - u);
  Tensor out;
  out.block = t;
  out.row_slots = 3 * t;
  detail::ordered_partitions(
      ground, {u - 1, u, u - 1}, [&](const auto& lmn) {
        const int sign = concatenation_sign({lmn[0], lmn[1], lmn[2]});
        const auto fl =
            detail::join(detail::join(Q, lmn[0]), {t - u + 1});
        const auto fm = detail::join(Q, lmn[1]);
        const auto fn =
            detail::join(detail::join(Q, lmn[2]), {t - u + 1});
        auto emit = [&](const std::vector<int>& x, const std::vector<int>& y,
                        const std::vector<int>& z, int c) {
          std::string key;
          for (int v : x) key += static_cast<char>(v);
          for (int v : y) key += static_cast<char>(v);
          for (int v : z) key += static_cast<char>(v);
          out.add(std::move(key), Int(c));
        };
        emit(fl, fm, fn, sign);
        emit(fm, fl, fn, swap_sign * sign);
      });
  return out;
}

// ----------------------------------------------------------------------
// Determinantal relations on staircase segments.

// A segment is a list of strictly increasing t-subsets.  Valid segments are
// downward closed under the componentwise order.
using IndexSegment = std::vector<std::vector<int>>;

inline void validate_segment(const IndexSegment& seg, int t) {
  require(!seg.empty(), "segment must be nonempty");
  for (const auto& s : seg) {
    require(static_cast<int>(s.size()) == t, "segment members must have size t");
    for (std::size_t i = 0; i < s.size(); ++i) {
      require(s[i] >= 1, "indices must be positive");
      require(i == 0 || s[i] > s[i - 1], "members must be strictly increasing");
    }
  }
  for (const auto& s : seg)
    require(std::count(seg.begin(), seg.end(), s) == 1,
            "segment members must be distinct");
  // Downward closure under covers (single decrements) implies closure.
  for (const auto& s : seg)
    for (std::size_t i = 0; i < s.size(); ++i) {
      std::vector<int> lower = s;
      lower[i] -= 1;
      if (lower[i] < 1) continue;
      if (i > 0 && lower[i] <= lower[i - 1]) continue;
      require(std::count(seg.begin(), seg.end(), lower) == 1,
              "segment is not downward closed");
    }
}

// Non-throwing validity test: true when the members are distinct strictly
// increasing tuples of one common size forming a downward-closed family
// under the componentwise order.  The empty segment counts as valid.
inline bool validate_initial_segment(const IndexSegment& seg) {
  if (seg.empty()) return true;
  try {
    validate_segment(seg, static_cast<int>(seg.front().size()));
  } catch (const std::invalid_argument&) {
    return false;
  }
  return true;
}

// Column heights of the segment's content: entry i counts the members
// containing i; the induced shape is its transpose.
inline Partition segment_shape(const IndexSegment& seg) {
  int max_index = 0;
  for (const auto& s : seg) max_index = std::max(max_index, s.back());
  Partition content(static_cast<std::size_t>(max_index), 0);
  for (const auto& s : seg)
    for (int i : s) ++content[static_cast<std::size_t>(i - 1)];
  require(is_partition(strip_zeros(content)) &&
              strip_zeros(content).size() == content.size(),
          "internal error: content of a downward-closed segment descends");
  return transpose(strip_zeros(content));
}

// Determinant of the matrix whose (a,b) entry is the minor on the a-th row
// member and b-th column member.  The two segments must induce different
// shapes: only then is the determinant guaranteed to be a relation (equal
// shapes give the symmetric bi-shape, which survives in the minor algebra).
inline MinorPolynomial determinantal_relation(int t,
                                              const IndexSegment& row_seg,
                                              const IndexSegment& col_seg) {
  require(t >= 1, "minor size must be positive");
  validate_segment(row_seg, t);
  validate_segment(col_seg, t);
  require(row_seg.size() == col_seg.size(),
          "row and column segments must have equal size");
  require(segment_shape(row_seg) != segment_shape(col_seg),
          "not a relation: the segments induce the same shape");
  const int d = static_cast<int>(row_seg.size());
  std::vector<int> perm(static_cast<std::size_t>(d));
  for (int i = 0; i < d; ++i) perm[static_cast<std::size_t>(i)] = i;
  MinorPolynomial out;
  do {
    int inversions = 0;
    for (int i = 0; i < d; ++i)
      for (int j = i + 1; j < d; ++j)
        if (perm[static_cast<std::size_t>(i)] > perm[static_cast<std::size_t>(j)])
          ++inversions;
    Monomial mono;
    for (int a = 0; a < d; ++a)
      mono.push_back(MinorSymbol{row_seg[static_cast<std::size_t>(a)],
                                 col_seg[static_cast<std::size_t>(
                                     perm[static_cast<std::size_t>(a)])]});
    out.add(std::move(mono), Int(inversions % 2 == 0 ? 1 : -1));
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

}  // namespace minors
