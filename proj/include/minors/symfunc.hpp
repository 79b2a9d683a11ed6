// Symmetric-function engine: power-sum expansions, plethysm with an exterior
// power, Weyl dimension counts, and graded multiplicities for the spaces the
// rest of the library studies.
//
// Convention bridge used throughout: the library labels GL-irreducibles so
// that L_{(1,...,1)}V = Sym^d V and L_{(d)}V = wedge^d V.  The multiplicity of
// L_lambda V inside L_mu(wedge^t V) therefore equals the Schur coefficient
// <s_{lambda'} , s_{mu'} o e_t> in the classical convention, where ' is
// transposition; every routine below transposes at the boundary.
#pragma once

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <map>
#include <mutex>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "minors/characters.hpp"
#include "minors/partition.hpp"
#include "minors/types.hpp"

namespace minors {

// Coefficients on the power-sum basis, keyed by cycle type.
using PowerSumExpansion = std::map<Partition, Rat>;
// Nonnegative multiplicities keyed by partition label.
using SchurExpansion = std::map<Partition, Int>;

// Mutable cap on t*d for plethysm expansions; guards accidental blowups.
inline int& plethysm_cap() {
  static int cap = 12;
  return cap;
}

// s_kappa = sum_rho chi^kappa(rho)/z_rho p_rho.
inline PowerSumExpansion schur_to_powersum(const Partition& kappa) {
  require_partition(kappa);
  PowerSumExpansion out;
  for (const Partition& rho : partitions_of(size_of(kappa))) {
    const long long chi = character(kappa, rho);
    if (chi != 0) out[rho] = Rat(chi) / Rat(z_of(rho));
  }
  return out;
}

// e_t = sum_{pi |- t} (-1)^{t - len(pi)} p_pi / z_pi.
inline PowerSumExpansion elementary_powersum(int t) {
  require(t >= 0, "exterior degree must be nonnegative");
  PowerSumExpansion out;
  for (const Partition& pi : partitions_of(t)) {
    const Rat coeff = Rat((t - rows_of(pi)) % 2 == 0 ? 1 : -1) / Rat(z_of(pi));
    out[pi] = coeff;
  }
  if (t == 0) out[{}] = 1;
  return out;
}

// p_k o f for f given on the power-sum basis: multiply every part by k.
inline PowerSumExpansion plethysm_by_pk(int k, const PowerSumExpansion& f) {
  PowerSumExpansion out;
  for (const auto& [pi, coeff] : f) {
    Partition scaled = pi;
    for (int& part : scaled) part *= k;
    out[scaled] += coeff;
  }
  return out;
}

inline PowerSumExpansion multiply_powersum(const PowerSumExpansion& a,
                                           const PowerSumExpansion& b) {
  PowerSumExpansion out;
  for (const auto& [pa, ca] : a)
    for (const auto& [pb, cb] : b) {
      Partition merged = pa;
      merged.insert(merged.end(), pb.begin(), pb.end());
      std::sort(merged.rbegin(), merged.rend());
      out[merged] += ca * cb;
    }
  for (auto it = out.begin(); it != out.end();)
    it = (it->second == 0) ? out.erase(it) : std::next(it);
  return out;
}

// <f, s_kappa> for f on the power-sum basis (power sums are orthogonal with
// <p_rho, p_rho> = z_rho, and <p_rho, s_kappa> = chi^kappa(rho)).
inline Rat inner_schur(const PowerSumExpansion& f, const Partition& kappa) {
  Rat total = 0;
  for (const auto& [rho, coeff] : f)
    if (size_of(rho) == size_of(kappa)) total += coeff * Rat(character(kappa, rho));
  return total;
}

namespace detail {

inline std::string partition_csv(const Partition& p) {
  std::string out;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(p[i]);
  }
  return out;
}

inline std::filesystem::path plethysm_cache_file(const Partition& mu, int t) {
  const char* dir = std::getenv("MINORS_CACHE_DIR");
  if (dir == nullptr || *dir == '\0') return {};
  std::string name = "pleth_t" + std::to_string(t) + "_mu";
  for (std::size_t i = 0; i < mu.size(); ++i) {
    if (i) name += '-';
    name += std::to_string(mu[i]);
  }
  return std::filesystem::path(dir) / (name + ".txt");
}

inline bool load_cached_expansion(const std::filesystem::path& file,
                                  SchurExpansion& out) {
  if (file.empty()) return false;
  std::ifstream in(file);
  if (!in) return false;
  SchurExpansion parsed;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::istringstream row(line);
    std::string csv;
    long long mult = 0;
    if (!(row >> csv >> mult)) return false;
    Partition p;
    std::istringstream parts(csv);
    std::string tok;
    while (std::getline(parts, tok, ',')) p.push_back(std::stoi(tok));
    if (!is_partition(p) || mult <= 0) return false;
    parsed[p] = mult;
  }
  out = std::move(parsed);
  return true;
}

inline void store_cached_expansion(const std::filesystem::path& file,
                                   const SchurExpansion& data) {
  if (file.empty()) return;
  try {
    std::filesystem::create_directories(file.parent_path());
    std::ofstream out(file, std::ios::trunc);
    if (!out) return;
    for (const auto& [p, mult] : data)
      out << partition_csv(p) << ' ' << mult << '\n';
  } catch (const std::filesystem::filesystem_error&) {
    // The disk cache is best-effort; fall back to recomputation.
  }
}

inline std::map<std::pair<Partition, int>, SchurExpansion>& plethysm_memo() {
  static std::map<std::pair<Partition, int>, SchurExpansion> memo;
  return memo;
}

inline std::mutex& plethysm_mutex() {
  static std::mutex m;
  return m;
}

}  // namespace detail

// Decomposition of L_mu(wedge^t V) as a sum of L_lambda V (labels in the
// library convention; valid for dim V >= rows of the output shapes).
inline SchurExpansion plethysm_exterior(const Partition& mu, int t) {
  require_partition(mu);
  require(t >= 1, "exterior degree t must be >= 1");
  const int d = size_of(mu);
  if (d == 0) return {{Partition{}, Int(1)}};
  const long long work = static_cast<long long>(t) * d;
  require(work <= plethysm_cap(),
          "plethysm degree t*d = " + std::to_string(work) + " exceeds cap " +
              std::to_string(plethysm_cap()) +
              " (the expansion runs over all partitions of t*d; raise the cap "
              "explicitly to proceed)");
  {
    std::lock_guard<std::mutex> lock(detail::plethysm_mutex());
    auto it = detail::plethysm_memo().find({mu, t});
    if (it != detail::plethysm_memo().end()) return it->second;
  }
  const auto cache_file = detail::plethysm_cache_file(mu, t);
  SchurExpansion result;
  if (!detail::load_cached_expansion(cache_file, result)) {
    // f = s_{mu'} o e_t on the power-sum basis.
    const PowerSumExpansion base = elementary_powersum(t);
    PowerSumExpansion f;
    for (const Partition& rho : partitions_of(d)) {
      const long long chi = character(transpose(mu), rho);
      if (chi == 0) continue;
      PowerSumExpansion term = {{Partition{}, Rat(chi) / Rat(z_of(rho))}};
      for (int part : rho) term = multiply_powersum(term, plethysm_by_pk(part, base));
      for (const auto& [key, coeff] : term) f[key] += coeff;
    }
    for (const Partition& kappa : partitions_of(t * d)) {
      const Rat mult = inner_schur(f, kappa);
      if (mult == 0) continue;
      require(denominator(mult) == 1 && mult > 0,
              "internal error: non-integral plethysm coefficient");
      result[transpose(kappa)] = numerator(mult);
    }
    detail::store_cached_expansion(cache_file, result);
  }
  {
    std::lock_guard<std::mutex> lock(detail::plethysm_mutex());
    detail::plethysm_memo()[{mu, t}] = result;
  }
  return result;
}

// Decomposition of Sym^d(wedge^t V).
inline SchurExpansion sym_power_exterior(int d, int t) {
  require(d >= 0, "symmetric power degree must be nonnegative");
  return plethysm_exterior(Partition(d, 1), t);
}

// Multiplicity of L_lambda V in the d-th tensor power of wedge^t V, computed
// from characters; cross-checks the Pieri-chain recursion.
inline Int tensor_multiplicity_by_characters(const Partition& lambda, int t) {
  require_partition(lambda);
  require(t >= 1, "exterior degree t must be >= 1");
  require(size_of(lambda) % t == 0, "partition size must be divisible by t");
  const int d = size_of(lambda) / t;
  const PowerSumExpansion base = elementary_powersum(t);
  PowerSumExpansion power = {{Partition{}, Rat(1)}};
  for (int i = 0; i < d; ++i) power = multiply_powersum(power, base);
  const Rat mult = inner_schur(power, transpose(lambda));
  require(denominator(mult) == 1 && mult >= 0,
          "internal error: non-integral tensor multiplicity");
  return numerator(mult);
}

// dim L_lambda V for dim V = n (hook content formula on the transposed shape).
inline Int dim_schur(const Partition& lambda, int n) {
  require_partition(lambda);
  require(n >= 0, "dimension must be nonnegative");
  if (lambda.empty()) return 1;
  if (lambda[0] > n) return 0;  // more than n rows in the classical shape
  const Partition kappa = transpose(lambda);
  Int num = 1;
  Int den = 1;
  for (int i = 1; i <= rows_of(kappa); ++i) {
    for (int j = 1; j <= kappa[i - 1]; ++j) {
      num *= n + j - i;
      const int arm = kappa[i - 1] - j;
      const int leg = part_at(lambda, j) - i;  // transpose gives column lengths
      den *= arm + leg + 1;
    }
  }
  require(num % den == 0, "internal error: hook content not integral");
  return num / den;
}

// Multiplicity of L_row V (x) L_col W* in degree d of the symmetric algebra
// on (wedge^t V) (x) (wedge^t W)*.  Non-admissible or wrong-size shapes give 0.
inline Int mult_in_ambient(const BiShape& b, int t, int d) {
  require(t >= 1 && d >= 0, "need t >= 1 and d >= 0");
  if (!is_admissible(b.row, t, d) || !is_admissible(b.col, t, d)) return 0;
  Int total = 0;
  for (const Partition& mu : partitions_of(d)) {
    const SchurExpansion pleth = plethysm_exterior(mu, t);
    auto r = pleth.find(b.row);
    if (r == pleth.end()) continue;
    auto c = pleth.find(b.col);
    if (c == pleth.end()) continue;
    total += r->second * c->second;
  }
  return total;
}

// Multiplicity of L_row V (x) L_col W* in degree d of the defining ideal of
// the algebra of t-minors: the ambient multiplicity, minus one on symmetric
// admissible bi-shapes (which survive into the coordinate ring with
// multiplicity exactly one).
inline Int mult_in_ideal(const BiShape& b, int t, int d) {
  Int s = mult_in_ambient(b, t, d);
  if (b.is_symmetric() && s > 0) s -= 1;
  return s;
}

// Bi-shapes of the degree-2 part of the ideal: pairs (tau_u | tau_v) with
// tau_u = (t+u, t-u), u != v, u + v even.  Ascending lexicographic order.
inline std::vector<BiShape> quadratic_kernel_shapes(int t) {
  require(t >= 1, "need t >= 1");
  auto tau = [t](int u) { return strip_zeros({t + u, t - u}); };
  std::vector<BiShape> out;
  for (int u = 0; u <= t; ++u)
    for (int v = 0; v <= t; ++v)
      if (u != v && (u + v) % 2 == 0) out.push_back({tau(u), tau(v)});
  std::sort(out.begin(), out.end());
  return out;
}

// Decomposition of degree d of the algebra of t-minors of a generic m x n
// matrix: one copy of L_lambda V (x) L_lambda W* for every (t,d)-admissible
// lambda fitting both ambient sizes.
inline SchurExpansion decompose_minor_algebra(int t, int m, int n, int d) {
  require(t >= 1 && m >= 1 && n >= 1 && d >= 0, "need t, m, n >= 1 and d >= 0");
  if (d == 0) return {{Partition{}, Int(1)}};
  if (t > m || t > n) return {};
  SchurExpansion out;
  for (const Partition& lambda : admissible_partitions(t, d, std::min(m, n)))
    out[lambda] = 1;
  return out;
}

}  // namespace minors
