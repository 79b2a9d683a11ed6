#include <array>
#include <vector>

#include "doctest.h"
#include "minors/regbounds.hpp"
#include "minors/verify.hpp"

using namespace minors;

TEST_CASE("regularity formula cases") {
  const RegularityCase mixed = regularity(2, 3, 4);
  CHECK(mixed.case_tag == CaseTag::case_ii);
  REQUIRE(mixed.k0.has_value());
  CHECK(*mixed.k0 == 2);
  REQUIRE(mixed.value.has_value());
  CHECK(*mixed.value == 3);

  const RegularityCase square = regularity(2, 4, 4);
  CHECK(square.case_tag == CaseTag::case_i);
  CHECK_FALSE(square.k0.has_value());
  REQUIRE(square.value.has_value());
  CHECK(*square.value == 8);

  // The arguments symmetrize: the transposed format gives the same answer.
  const RegularityCase transposed = regularity(2, 4, 3);
  CHECK(transposed.case_tag == mixed.case_tag);
  CHECK(transposed.value == mixed.value);
  CHECK(transposed.m == 3);
  CHECK(transposed.n == 4);

  // Degenerate formats carry a tag but no value.
  for (const auto& [t, m, n] :
       std::vector<std::array<int, 3>>{{1, 5, 7}, {2, 2, 9}, {3, 4, 4}}) {
    const RegularityCase deg = regularity(t, m, n);
    CHECK(deg.case_tag == CaseTag::excluded);
    CHECK_FALSE(deg.value.has_value());
    CHECK_FALSE(deg.k0.has_value());
  }

  CHECK(to_string(CaseTag::case_i) == "i");
  CHECK(to_string(CaseTag::case_ii) == "ii");
  CHECK(to_string(CaseTag::excluded) == "excluded");

  CHECK_THROWS_AS(regularity(5, 3, 4), std::invalid_argument);
}

TEST_CASE("regularity of submaximal minors of an almost square format") {
  // t = m-1, n = m+1: the formula collapses to reg = m.
  for (int m = 3; m <= 8; ++m) {
    const RegularityCase r = regularity(m - 1, m, m + 1);
    CHECK(r.case_tag == CaseTag::case_ii);
    REQUIRE(r.value.has_value());
    CHECK(*r.value == m);
  }
}

TEST_CASE("generator degree bounds") {
  CHECK(degree_bound(2, 4, 6) == 13);
  CHECK(degree_bound(2, 3, 5) == 9);

  // Independence from n once n >= m+t.
  for (int n = 6; n <= 40; n += 7) CHECK(degree_bound(2, 4, n) == 13);
  for (int n = 5; n <= 40; n += 7) CHECK(degree_bound(2, 3, n) == 9);

  // Degenerate formats: no relations at all, or the quadratic
  // Grassmannian case.
  CHECK(degree_bound(1, 5, 9) == 0);
  CHECK(degree_bound(2, 2, 3) == 0);
  CHECK(degree_bound(4, 4, 5) == 0);
  CHECK(degree_bound(2, 2, 4) == 2);
  CHECK(degree_bound(3, 3, 9) == 2);

  CHECK_THROWS_AS(degree_bound(5, 4, 9), std::invalid_argument);
}

TEST_CASE("hilbert function values") {
  // Free polynomial algebra when n = t+1.
  for (int d = 0; d <= 5; ++d)
    CHECK(hilbert_At(2, 2, 3, d) == Int((d + 2) * (d + 1) / 2));

  CHECK(hilbert_At(2, 3, 3, 1) == 9);
  CHECK(hilbert_At(2, 3, 4, 2) == 165);
  CHECK(hilbert_At(3, 2, 5, 1) == 0);  // no 3-minors in two rows
  CHECK(hilbert_At(3, 2, 5, 0) == 1);  // constants survive regardless

  CHECK(hilbert_csv(2, 2, 3, 3) == "d,dim\n0,1\n1,3\n2,6\n3,10\n");
}

TEST_CASE("hilbert function agrees with the brute-force rank oracle") {
  for (int d = 0; d <= 4; ++d)
    CHECK(hilbert_At(2, 2, 3, d) == Int(brute_dim_At(2, 2, 3, d)));
  for (int d = 0; d <= 3; ++d)
    CHECK(hilbert_At(2, 3, 3, d) == Int(brute_dim_At(2, 3, 3, d)));
  for (int d = 0; d <= 2; ++d)
    CHECK(hilbert_At(2, 3, 4, d) == Int(brute_dim_At(2, 3, 4, d)));
}

TEST_CASE("square-format duality of Hilbert functions") {
  CHECK(duality_check(2, 5, 4));
  for (int n = 2; n <= 6; ++n) CHECK(duality_check(1, n, 4));
  for (int t = 1; t <= 3; ++t) CHECK(duality_check(t, 2 * t, 4));

  // The full small sweep.
  for (int n = 2; n <= 6; ++n)
    for (int t = 1; t < n; ++t) CHECK(duality_check(t, n, 4));

  CHECK_THROWS_AS(duality_check(5, 5, 3), std::invalid_argument);
  CHECK_THROWS_AS(duality_check(0, 5, 3), std::invalid_argument);
}
