// Degree-3 search for bi-shapes that carry minimal relations for shape
// reasons alone: an asymmetric bi-shape occurring in the ambient algebra
// whose degree-2 strip predecessors pair up so rigidly that no product of a
// linear form with a quadratic can reach it.
#pragma once

#include <vector>

#include "minors/partition.hpp"
#include "minors/symfunc.hpp"
#include "minors/types.hpp"

namespace minors {

// All degree-3 shape relations of the t-minor algebra of an m x n matrix,
// ascending lexicographic.  A bi-shape (gamma|lambda) qualifies when gamma
// and lambda fit the ambient sizes, the pair is asymmetric, and some cubic
// functor mu contains both sides such that for every corner removal mu' of
// mu, any degree-2 predecessors alpha of gamma and beta of lambda lying in
// the mu'-functor are forced equal (so the isotypic component sits inside
// the span of products only through symmetric degree-2 data, which the
// asymmetric pair cannot use).
inline std::vector<BiShape> shape_relations_deg3(int t, int m, int n) {
  require(t >= 1 && m >= 1 && n >= 1, "need t, m, n >= 1");
  std::vector<BiShape> out;
  if (t == 1) return out;  // polynomial ring: no relations at all
  const auto row_shapes = admissible_partitions(t, 3, m);
  const auto col_shapes = admissible_partitions(t, 3, n);
  const auto cubics = partitions_of(3);
  for (const Partition& gamma : row_shapes) {
    const auto gamma_preds = predecessors(gamma, t);
    for (const Partition& lambda : col_shapes) {
      if (gamma == lambda) continue;
      const auto lambda_preds = predecessors(lambda, t);
      bool qualifies = false;
      for (const Partition& mu : cubics) {
        const SchurExpansion pleth = plethysm_exterior(mu, t);
        if (!pleth.count(gamma) || !pleth.count(lambda)) continue;
        bool rigid = true;
        for (const Partition& mu_prime : corner_removals(mu)) {
          for (const Partition& alpha : gamma_preds) {
            if (is_single_type(alpha, t) != mu_prime) continue;
            for (const Partition& beta : lambda_preds) {
              if (is_single_type(beta, t) != mu_prime) continue;
              if (alpha != beta) rigid = false;
            }
          }
        }
        if (rigid) {
          qualifies = true;
          break;
        }
      }
      if (qualifies) out.push_back(BiShape{gamma, lambda});
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace minors
