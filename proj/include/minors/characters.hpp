// Irreducible symmetric-group characters via the Murnaghan-Nakayama rule,
// evaluated on beta-sets (first-column hook lengths), with memoization.
#pragma once

#include <map>
#include <mutex>
#include <set>
#include <utility>

#include "minors/partition.hpp"
#include "minors/types.hpp"

namespace minors {

namespace detail {

inline Partition partition_from_beta(std::set<int> beta) {
  // beta holds len distinct nonnegative values {lambda_i + len - i}.
  Partition out;
  int len = static_cast<int>(beta.size());
  int i = 1;
  for (auto it = beta.rbegin(); it != beta.rend(); ++it, ++i)
    out.push_back(*it - (len - i));
  return strip_zeros(out);
}

inline long long mn_character(const Partition& shape, const Partition& cycle_type,
                              std::size_t cycle_index);

inline std::map<std::pair<Partition, std::pair<Partition, std::size_t>>, long long>&
character_memo() {
  static std::map<std::pair<Partition, std::pair<Partition, std::size_t>>, long long>
      memo;
  return memo;
}

inline std::mutex& character_mutex() {
  static std::mutex m;
  return m;
}

inline long long mn_character(const Partition& shape, const Partition& cycle_type,
                              std::size_t cycle_index) {
  if (shape.empty()) return 1;
  {
    std::lock_guard<std::mutex> lock(character_mutex());
    auto it = character_memo().find({shape, {cycle_type, cycle_index}});
    if (it != character_memo().end()) return it->second;
  }
  const int k = cycle_type[cycle_index];
  const int len = rows_of(shape);
  std::set<int> beta;
  for (int i = 1; i <= len; ++i) beta.insert(part_at(shape, i) + len - i);
  long long total = 0;
  for (int b : beta) {
    if (b < k || beta.count(b - k)) continue;
    // Height sign: one factor of -1 per beta element strictly between b-k and b.
    int between = 0;
    for (int c : beta)
      if (c > b - k && c < b) ++between;
    std::set<int> next = beta;
    next.erase(b);
    next.insert(b - k);
    const long long sub =
        mn_character(partition_from_beta(std::move(next)), cycle_type, cycle_index + 1);
    total += (between % 2 == 0) ? sub : -sub;
  }
  {
    std::lock_guard<std::mutex> lock(character_mutex());
    character_memo()[{shape, {cycle_type, cycle_index}}] = total;
  }
  return total;
}

}  // namespace detail

// chi^lambda(rho) for |lambda| = |rho|.
inline long long character(const Partition& lambda, const Partition& rho) {
  require_partition(lambda);
  require_partition(rho);
  require(size_of(lambda) == size_of(rho),
          "character needs |lambda| = |rho|, got " + partition_to_string(lambda) +
              " vs " + partition_to_string(rho));
  return detail::mn_character(lambda, rho, 0);
}

// Order of the centralizer of a permutation of cycle type rho.
inline Int z_of(const Partition& rho) {
  require_partition(rho);
  std::map<int, int> mult;
  for (int part : rho) ++mult[part];
  Int z = 1;
  for (auto [part, m] : mult) {
    for (int i = 0; i < m; ++i) z *= part;
    for (int i = 2; i <= m; ++i) z *= i;
  }
  return z;
}

}  // namespace minors
