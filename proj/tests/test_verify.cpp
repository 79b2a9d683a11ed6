#include <algorithm>
#include <set>
#include <string>
#include <vector>

#include "doctest.h"
#include "minors/relations.hpp"
#include "minors/verify.hpp"
#include "minors/xpoly.hpp"

using namespace minors;

namespace {

// Single-monomial polynomial from a list of symbols.
MinorPolynomial monomial(Monomial mono) {
  MinorPolynomial p;
  p.add(std::move(mono), 1);
  return p;
}

// The classical cubic relation among 2-minors written as a determinant of
// minors: it equals the u=1 cubic family member after normalization.
MinorPolynomial typical_cubic() {
  return determinantal_relation(2, {{1, 2}, {1, 3}, {2, 3}},
                                {{1, 2}, {1, 3}, {1, 4}});
}

// The smallest relation suite with every constructor family represented,
// each in the smallest matrix format that contains it.
std::vector<std::pair<MinorPolynomial, std::pair<int, int>>>
constructor_suite(int tmax) {
  std::vector<std::pair<MinorPolynomial, std::pair<int, int>>> suite;
  for (int t = 1; t <= tmax; ++t) {
    for (int u = 0; u <= t; ++u)
      for (int v = u + 1; v <= t; ++v) {
        if ((u + v) % 2 != 0) continue;
        suite.push_back({quadratic_relation(t, u, v), {t + u, t + v}});
        suite.push_back({quadratic_relation(t, v, u), {t + v, t + u}});
      }
    for (int u = 1; 2 * u <= t; ++u)
      suite.push_back({even_cubic(t, u), {t + u, t + 2 * u}});
    for (int u = 2; 2 * u <= t + 1; ++u)
      suite.push_back({odd_cubic(t, u), {t + u, t + 2 * u - 1}});
  }
  return suite;
}

}  // namespace

TEST_CASE("minor expansion in the x variables") {
  CHECK(xpoly_to_text(expand_minor({{1, 2}, {1, 2}}, 2, 2)) ==
        "1 * x[1,1] x[2,2] - 1 * x[1,2] x[2,1]");
  CHECK(xpoly_to_text(expand_minor({{1}, {3}}, 1, 3)) == "1 * x[1,3]");
  CHECK(expand_minor({{1, 2, 3}, {1, 2, 3}}, 3, 3).terms.size() == 6);
  CHECK(expand_minor({{2, 3}, {1, 4}}, 3, 4).terms.size() == 2);

  // A degree-1 polynomial expands to the minor itself.
  XPolynomial direct = expand_minor({{1, 2}, {1, 2}}, 2, 2);
  XPolynomial via_poly = expand_relation(monomial({{{1, 2}, {1, 2}}}), 2, 2);
  CHECK(direct.terms == via_poly.terms);

  // Index range violations are rejected.
  CHECK_THROWS_AS(expand_minor({{1, 3}, {1, 2}}, 2, 2),
                  std::invalid_argument);
  CHECK_THROWS_AS(expand_minor({{1}, {4}}, 1, 3), std::invalid_argument);
  CHECK_THROWS_AS(expand_relation(monomial({{{1, 2}, {3, 4}}}), 2, 3),
                  std::invalid_argument);
}

TEST_CASE("relation expansion multiplies and collects") {
  // A product of two 2-minors on disjoint columns: (2 terms) x (2 terms)
  // with no collisions gives exactly 4 distinct degree-4 monomials.
  XPolynomial prod =
      expand_relation(monomial({{{1, 2}, {1, 2}}, {{1, 2}, {3, 4}}}), 2, 4);
  CHECK(prod.terms.size() == 4);
  for (const auto& [key, coeff] : prod.terms) {
    CHECK(key.size() == 4);
    CHECK((coeff == 1 || coeff == -1));
  }

  // Squaring a 2-minor makes the cross terms collide: 3 monomials with a
  // coefficient of -2 in the middle.
  XPolynomial square =
      expand_relation(monomial({{{1, 2}, {1, 2}}, {{1, 2}, {1, 2}}}), 2, 2);
  CHECK(square.terms.size() == 3);
  Int middle = 0;
  for (const auto& [key, coeff] : square.terms)
    if (coeff < 0) middle = coeff;
  CHECK(middle == -2);

  // The smallest quadratic relation collapses to zero.
  CHECK(expand_relation(quadratic_relation(2, 0, 2), 2, 4).is_zero());
}

TEST_CASE("kernel membership decisions") {
  CHECK(is_relation(quadratic_relation(2, 0, 2), 2, 4));
  CHECK(is_relation(quadratic_relation(2, 0, 2), 3, 5));  // bigger format
  CHECK(is_relation(even_cubic(2, 1), 3, 4));
  CHECK(is_relation(typical_cubic(), 3, 4));
  CHECK(is_relation(odd_cubic(3, 2), 5, 8));

  CHECK_FALSE(is_relation(monomial({{{1}, {1}}}), 1, 1));
  CHECK_FALSE(is_relation(monomial({{{1, 2}, {1, 2}}, {{1, 2}, {3, 4}}}), 2, 4));

  // Dropping one term of the quadratic relation breaks membership.
  MinorPolynomial broken;
  bool skipped = false;
  for (const auto& [mono, coeff] : quadratic_relation(2, 0, 2).terms) {
    if (!skipped) {
      skipped = true;
      continue;
    }
    broken.add(mono, coeff);
  }
  CHECK_FALSE(is_relation(broken, 2, 4));
}

TEST_CASE("packed and exact expansion paths agree") {
  // Coefficients beyond the packed-path bound force the arbitrary
  // precision fallback; results must match up to the forced scale.
  const Int scale = Int("2000003");
  MinorPolynomial small = even_cubic(2, 1);
  MinorPolynomial big;
  for (const auto& [mono, coeff] : small.terms) big.add(mono, coeff * scale);
  CHECK(expand_relation(small, 3, 4).is_zero());
  CHECK(expand_relation(big, 3, 4).is_zero());

  MinorPolynomial plain = monomial({{{1, 2}, {1, 2}}, {{1, 2}, {1, 2}}});
  MinorPolynomial scaled;
  for (const auto& [mono, coeff] : plain.terms) scaled.add(mono, coeff * scale);
  XPolynomial e1 = expand_relation(plain, 2, 2);
  XPolynomial e2 = expand_relation(scaled, 2, 2);
  REQUIRE(e1.terms.size() == e2.terms.size());
  for (const auto& [key, coeff] : e1.terms) CHECK(e2.terms.at(key) == coeff * scale);
}

TEST_CASE("random probe: soundness, determinism, discrimination") {
  for (std::uint64_t seed : {1, 2, 3, 4, 5}) {
    CHECK(random_probe(quadratic_relation(2, 0, 2), 2, 4, 3, seed));
    CHECK(random_probe(even_cubic(2, 1), 3, 4, 3, seed));
    CHECK_FALSE(random_probe(monomial({{{1}, {1}}}), 1, 1, 3, seed));
  }

  // Fixed seed, repeated runs: the verdict is reproducible.
  const bool first = random_probe(typical_cubic(), 3, 4, 2, 99);
  CHECK(first == random_probe(typical_cubic(), 3, 4, 2, 99));
  CHECK(first);

  // Agreement with the exact decision across the constructor suite.
  for (const auto& [p, format] : constructor_suite(3)) {
    const bool exact = is_relation(p, format.first, format.second);
    CHECK(exact);  // every family member is a relation
    CHECK(random_probe(p, format.first, format.second, 2, 2024) == exact);
  }
  // ... and on some non-relations.
  for (const auto& mono :
       {Monomial{{{1, 2}, {1, 2}}}, Monomial{{{1, 2}, {1, 2}}, {{1, 2}, {3, 4}}},
        Monomial{{{1}, {2}}, {{2}, {1}}}}) {
    MinorPolynomial p = monomial(mono);
    CHECK_FALSE(is_relation(p, 2, 4));
    CHECK_FALSE(random_probe(p, 2, 4, 3, 77));
  }
}

TEST_CASE("brute-force dimension oracle") {
  // n = t+1: the minor algebra is free, so degree-d dimensions follow the
  // binomial count of monomials in C(t+1, t) = t+1 generators.
  CHECK(brute_dim_At(2, 2, 3, 0) == 1);
  CHECK(brute_dim_At(2, 2, 3, 1) == 3);
  CHECK(brute_dim_At(2, 2, 3, 2) == 6);
  CHECK(brute_dim_At(2, 2, 3, 3) == 10);
  CHECK(brute_dim_At(2, 2, 3, 4) == 15);

  CHECK(brute_dim_At(2, 3, 3, 1) == 9);   // nine independent 2-minors
  CHECK(brute_dim_At(2, 3, 3, 2) == 45);  // no quadratic relations at 3x3
  CHECK(brute_dim_At(2, 3, 4, 2) == 165);

  CHECK(brute_dim_At(3, 2, 5, 1) == 0);  // no 3-minors in two rows
  CHECK(brute_dim_At(3, 2, 5, 0) == 1);

  CHECK_THROWS_AS(brute_dim_At(2, 4, 4, 5, 100), std::invalid_argument);
}

TEST_CASE("degree-2 kernel completeness for small t") {
  for (int t = 1; t <= 4; ++t) {
    std::set<BiShape> expected;
    for (const BiShape& b : quadratic_kernel_shapes(t)) expected.insert(b);
    std::set<BiShape> found;
    for (const Partition& row : partitions_of(2 * t))
      for (const Partition& col : partitions_of(2 * t)) {
        const BiShape b{row, col};
        if (mult_in_ideal(b, t, 2) > 0) found.insert(b);
      }
    CHECK(found == expected);
  }
}

TEST_CASE("derived invariants are highest weight of the declared bi-weight") {
  const BiShape src{{4, 2}, {6}};
  const BiShape dst{{6, 2}, {7, 1}};
  const Tableau row_tab = wedge_compatible_tableau({4, 2}, 2);
  const Tableau col_tab = wedge_compatible_tableau({6}, 2);

  const MinorPolynomial q = derive_invariant(src, dst, 2, row_tab, col_tab);
  REQUIRE_FALSE(q.is_zero());
  CHECK(is_highest_weight_poly(q));
  const auto [row_w, col_w] = bi_weight(q);
  CHECK(row_w == WeightVector(transpose(Partition{6, 2})));
  WeightVector negated = transpose(Partition{7, 1});
  for (int& v : negated) v = -v;
  CHECK(col_w == negated);
  CHECK(is_relation(q, 7, 8));

  // Rejections: not a successor pair, or a source without relations.
  CHECK_THROWS_AS(derive_invariant(dst, dst, 2, row_tab, col_tab),
                  std::invalid_argument);
  CHECK_THROWS_AS(derive_invariant(BiShape{{2}, {2}}, BiShape{{2, 2}, {4}}, 2,
                                   wedge_compatible_tableau({2}, 2),
                                   wedge_compatible_tableau({2}, 2)),
                  std::invalid_argument);
}

TEST_CASE("minimality verdicts on the reference bi-shapes") {
  const MinimalityVerdict high = minimality_check({{6, 2}, {7, 1}}, 2);
  CHECK(high.status == "non_minimal");
  CHECK(high.degree == 4);
  CHECK(high.rank_needed == 1);
  CHECK(high.rank_found >= high.rank_needed);
  CHECK(high.witnesses.size() >= 2);  // ambient line plus a derivation

  const MinimalityVerdict cubic = minimality_check({{3, 3}, {4, 1, 1}}, 2);
  CHECK(cubic.status == "minimal");
  CHECK(cubic.degree == 3);
  CHECK(cubic.rank_needed == 1);
  CHECK(cubic.rank_found == 0);

  const MinimalityVerdict quadric = minimality_check({{2, 2}, {4}}, 2);
  CHECK(quadric.status == "minimal");
  CHECK(quadric.degree == 2);
  CHECK(quadric.rank_found == 0);

  // No kernel classes at all: rejected rather than answered.
  CHECK_THROWS_AS(minimality_check({{2, 2}, {2, 2}}, 2),
                  std::invalid_argument);
  CHECK_THROWS_AS(minimality_check({{3, 1}, {4}}, 2), std::invalid_argument);
}

TEST_CASE("minimality verdicts are order independent") {
  for (unsigned seed : {0u, 1u, 2u, 3u}) {
    SearchBudget budget;
    budget.order_seed = seed;
    const MinimalityVerdict high = minimality_check({{6, 2}, {7, 1}}, 2, budget);
    CHECK(high.status == "non_minimal");
    CHECK(high.rank_found == 1);
    const MinimalityVerdict cubic =
        minimality_check({{3, 3}, {4, 1, 1}}, 2, budget);
    CHECK(cubic.status == "minimal");
    CHECK(cubic.rank_found == 0);
  }
  // Fewer tableau candidates per side must not flip a non-minimal verdict.
  SearchBudget narrow;
  narrow.max_tableaux_per_side = 1;
  CHECK(minimality_check({{6, 2}, {7, 1}}, 2, narrow).status == "non_minimal");
}

TEST_CASE("generator export") {
  const std::string small = export_generators(2, 3, 4, 3);
  CHECK(small.find("# quadratic t=2 u=0 v=2\n") != std::string::npos);
  CHECK(small.find("# cubic-even t=2 u=1\n") != std::string::npos);
  CHECK(small.find(poly_to_text(quadratic_relation(2, 0, 2))) !=
        std::string::npos);
  CHECK(std::count(small.begin(), small.end(), '#') == 2);

  // The degree filter hides the cubic family.
  const std::string quadratic_only = export_generators(2, 3, 4, 2);
  CHECK(std::count(quadratic_only.begin(), quadratic_only.end(), '#') == 1);
  CHECK(quadratic_only.find("cubic") == std::string::npos);

  // At 4x5 both cubic orientations fit alongside both quadratic ones.
  const std::string wide = export_generators(2, 4, 5, 3);
  CHECK(std::count(wide.begin(), wide.end(), '#') == 4);
  CHECK(wide.find("# quadratic t=2 u=2 v=0\n") != std::string::npos);
  CHECK(wide.find("# cubic-even t=2 u=1 mirrored\n") != std::string::npos);

  // 1-minors never have relations; neither does n = t+1.
  CHECK(export_generators(1, 5, 5, 9).empty());
  CHECK(export_generators(2, 2, 3, 9).empty());
}
