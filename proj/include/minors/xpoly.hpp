// Exact expansion of minor polynomials into the ambient polynomial ring
// k[x_ij] of an m x n matrix, symbolic kernel membership, and a seeded
// randomized prober for fast pre-checks.
#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <map>
#include <string>
#include <unordered_map>
#include <vector>

#include "minors/minor_poly.hpp"
#include "minors/types.hpp"

namespace minors {

// A sparse polynomial in the variables x_ij, 1 <= i <= m, 1 <= j <= n.
// A term key lists the variable ids id = (i-1)*n + j of its factors with
// multiplicity, sorted ascending; coefficients are exact and nonzero.
struct XPolynomial {
  int m = 0;
  int n = 0;
  std::map<std::vector<int>, Int> terms;

  void add(std::vector<int> key, Int coeff) {
    if (coeff == 0) return;
    std::sort(key.begin(), key.end());
    auto it = terms.find(key);
    if (it == terms.end()) {
      terms.emplace(std::move(key), std::move(coeff));
    } else {
      it->second += coeff;
      if (it->second == 0) terms.erase(it);
    }
  }

  bool is_zero() const { return terms.empty(); }

  bool operator==(const XPolynomial&) const = default;
};

inline std::string xpoly_to_text(const XPolynomial& p) {
  if (p.terms.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [key, coeff] : p.terms) {
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
    for (int id : key)
      out += " x[" + std::to_string((id - 1) / p.n + 1) + "," +
             std::to_string((id - 1) % p.n + 1) + "]";
  }
  return out;
}

namespace detail {

inline void validate_symbol_fit(const MinorSymbol& s, int m, int n) {
  require(!s.rows.empty(), "a minor symbol needs at least one row");
  require(s.rows.back() <= m, "row index out of range");
  require(s.cols.back() <= n, "column index out of range");
}

// Leibniz terms of one minor: per permutation, the sorted variable ids and
// the permutation sign.
inline std::vector<std::pair<std::vector<int>, int>> minor_terms(
    const MinorSymbol& s, int n) {
  const int t = static_cast<int>(s.rows.size());
  std::vector<int> perm(static_cast<std::size_t>(t));
  for (int i = 0; i < t; ++i) perm[static_cast<std::size_t>(i)] = i;
  std::vector<std::pair<std::vector<int>, int>> out;
  do {
    int inversions = 0;
    for (int i = 0; i < t; ++i)
      for (int j = i + 1; j < t; ++j)
        if (perm[static_cast<std::size_t>(i)] > perm[static_cast<std::size_t>(j)])
          ++inversions;
    std::vector<int> ids(static_cast<std::size_t>(t));
    for (int i = 0; i < t; ++i)
      ids[static_cast<std::size_t>(i)] =
          (s.rows[static_cast<std::size_t>(i)] - 1) * n +
          s.cols[static_cast<std::size_t>(perm[static_cast<std::size_t>(i)])];
    std::sort(ids.begin(), ids.end());
    out.push_back({std::move(ids), inversions % 2 == 0 ? 1 : -1});
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

struct PackedHash {
  std::size_t operator()(unsigned __int128 k) const {
    const std::uint64_t lo = static_cast<std::uint64_t>(k);
    const std::uint64_t hi = static_cast<std::uint64_t>(k >> 64);
    std::uint64_t x = lo ^ (hi * 0x9e3779b97f4a7c15ULL);
    x ^= x >> 30;
    x *= 0xbf58476d1ce4e5b9ULL;
    x ^= x >> 27;
    return static_cast<std::size_t>(x);
  }
};

}  // namespace detail

// The Leibniz expansion of one minor symbol in the x variables.
inline XPolynomial expand_minor(const MinorSymbol& s, int m, int n) {
  detail::validate_symbol_fit(s, m, n);
  XPolynomial out;
  out.m = m;
  out.n = n;
  for (auto& [ids, sign] : detail::minor_terms(s, n))
    out.add(std::move(ids), sign);
  return out;
}

// Substitutes the Leibniz expansion for every symbol and multiplies out.
// A packed fast path accumulates 128-bit keys with machine coefficients
// when the term width allows; the general path is fully arbitrary-precision.
inline XPolynomial expand_relation(const MinorPolynomial& p, int m, int n) {
  XPolynomial out;
  out.m = m;
  out.n = n;
  if (p.terms.empty()) return out;

  std::map<MinorSymbol, std::vector<std::pair<std::vector<int>, int>>> expansions;
  std::size_t max_symbols = 0;
  bool small_coeffs = true;
  for (const auto& [mono, coeff] : p.terms) {
    max_symbols = std::max(max_symbols, mono.size());
    if (abs(coeff) > 1000000) small_coeffs = false;
    for (const MinorSymbol& s : mono)
      if (!expansions.count(s)) expansions[s] = detail::minor_terms(s, n);
  }
  for (const auto& [s, terms] : expansions) detail::validate_symbol_fit(s, m, n);

  int max_width = 0;
  for (const auto& [s, terms] : expansions)
    max_width = std::max(max_width, static_cast<int>(s.rows.size()));
  const int bits = std::bit_width(static_cast<unsigned>(m * n));
  const int slots = static_cast<int>(max_symbols) * max_width;
  const bool packed = small_coeffs && bits <= 20 && bits * slots <= 128;

  std::vector<int> ids;
  ids.reserve(static_cast<std::size_t>(slots));

  if (packed) {
    std::unordered_map<unsigned __int128, long long, detail::PackedHash> acc;
    for (const auto& [mono, coeff] : p.terms) {
      const long long base = coeff.convert_to<long long>();
      auto rec = [&](auto&& self, std::size_t k, long long c) -> void {
        if (k == mono.size()) {
          std::vector<int> sorted = ids;
          std::sort(sorted.begin(), sorted.end());
          unsigned __int128 key = 0;
          for (int id : sorted) key = (key << bits) | static_cast<unsigned>(id);
          auto [it, inserted] = acc.try_emplace(key, 0);
          it->second += c;
          require(it->second < (1LL << 62) && it->second > -(1LL << 62),
                  "internal error: packed coefficient overflow");
          if (it->second == 0) acc.erase(it);
          return;
        }
        for (const auto& [tids, sign] : expansions.at(mono[k])) {
          ids.insert(ids.end(), tids.begin(), tids.end());
          self(self, k + 1, c * sign);
          ids.resize(ids.size() - tids.size());
        }
      };
      rec(rec, 0, base);
    }
    for (const auto& [key, c] : acc) {
      std::vector<int> ids_out;
      unsigned __int128 k = key;
      const unsigned mask = (1u << bits) - 1;
      while (k != 0) {
        ids_out.push_back(static_cast<int>(static_cast<unsigned>(k) & mask));
        k >>= bits;
      }
      std::reverse(ids_out.begin(), ids_out.end());
      out.add(std::move(ids_out), Int(c));
    }
    return out;
  }

  for (const auto& [mono, coeff] : p.terms) {
    auto rec = [&](auto&& self, std::size_t k, Int c) -> void {
      if (k == mono.size()) {
        out.add(ids, std::move(c));
        return;
      }
      for (const auto& [tids, sign] : expansions.at(mono[k])) {
        ids.insert(ids.end(), tids.begin(), tids.end());
        self(self, k + 1, sign > 0 ? c : Int(-c));
        ids.resize(ids.size() - tids.size());
      }
    };
    rec(rec, 0, coeff);
  }
  return out;
}

// Exact kernel membership: the polynomial of minors expands to zero.
inline bool is_relation(const MinorPolynomial& p, int m, int n) {
  return expand_relation(p, m, n).is_zero();
}

namespace detail {

inline std::uint64_t splitmix64(std::uint64_t& state) {
  state += 0x9e3779b97f4a7c15ULL;
  std::uint64_t z = state;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

constexpr std::uint64_t kProbePrime = (1ULL << 61) - 1;

inline std::uint64_t mulmod(std::uint64_t a, std::uint64_t b) {
  return static_cast<std::uint64_t>(
      static_cast<unsigned __int128>(a) * b % kProbePrime);
}

inline std::uint64_t powmod(std::uint64_t a, std::uint64_t e) {
  std::uint64_t r = 1;
  while (e) {
    if (e & 1) r = mulmod(r, a);
    a = mulmod(a, a);
    e >>= 1;
  }
  return r;
}

// Determinant of a square matrix over the probe prime field.
inline std::uint64_t detmod(std::vector<std::vector<std::uint64_t>> a) {
  const std::size_t t = a.size();
  std::uint64_t det = 1;
  for (std::size_t col = 0; col < t; ++col) {
    std::size_t pivot = col;
    while (pivot < t && a[pivot][col] == 0) ++pivot;
    if (pivot == t) return 0;
    if (pivot != col) {
      std::swap(a[pivot], a[col]);
      det = kProbePrime - det;
      if (det == kProbePrime) det = 0;
    }
    det = mulmod(det, a[col][col]);
    const std::uint64_t inv = powmod(a[col][col], kProbePrime - 2);
    for (std::size_t r = col + 1; r < t; ++r) {
      if (a[r][col] == 0) continue;
      const std::uint64_t f = mulmod(a[r][col], inv);
      for (std::size_t c = col; c < t; ++c) {
        const std::uint64_t sub = mulmod(f, a[col][c]);
        a[r][c] = a[r][c] >= sub ? a[r][c] - sub : a[r][c] + kProbePrime - sub;
      }
    }
  }
  return det;
}

}  // namespace detail

// Evaluates p at seeded pseudorandom integer matrices over a large prime
// field.  Returns false as soon as one evaluation is nonzero; true after
// `trials` zero evaluations (probabilistic, error <= (deg/prime)^trials).
// The same seed always probes the same matrices.
inline bool random_probe(const MinorPolynomial& p, int m, int n, int trials,
                         std::uint64_t seed) {
  require(trials >= 1, "need at least one trial");
  std::vector<MinorSymbol> symbols;
  for (const auto& [mono, coeff] : p.terms)
    for (const MinorSymbol& s : mono) {
      detail::validate_symbol_fit(s, m, n);
      symbols.push_back(s);
    }
  std::sort(symbols.begin(), symbols.end());
  symbols.erase(std::unique(symbols.begin(), symbols.end()), symbols.end());

  std::uint64_t state = seed;
  for (int trial = 0; trial < trials; ++trial) {
    std::vector<std::vector<std::uint64_t>> x(
        static_cast<std::size_t>(m),
        std::vector<std::uint64_t>(static_cast<std::size_t>(n)));
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < n; ++j)
        x[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
            detail::splitmix64(state) % detail::kProbePrime;

    std::map<MinorSymbol, std::uint64_t> value;
    for (const MinorSymbol& s : symbols) {
      const std::size_t t = s.rows.size();
      std::vector<std::vector<std::uint64_t>> sub(
          t, std::vector<std::uint64_t>(t));
      for (std::size_t a = 0; a < t; ++a)
        for (std::size_t b = 0; b < t; ++b)
          sub[a][b] = x[static_cast<std::size_t>(s.rows[a] - 1)]
                       [static_cast<std::size_t>(s.cols[b] - 1)];
      value[s] = detail::detmod(std::move(sub));
    }

    std::uint64_t total = 0;
    for (const auto& [mono, coeff] : p.terms) {
      Int cmod = coeff % Int(detail::kProbePrime);
      if (cmod < 0) cmod += Int(detail::kProbePrime);
      std::uint64_t term = cmod.convert_to<std::uint64_t>();
      for (const MinorSymbol& s : mono) term = detail::mulmod(term, value[s]);
      total += term;
      if (total >= detail::kProbePrime) total -= detail::kProbePrime;
    }
    if (total != 0) return false;
  }
  return true;
}

}  // namespace minors
