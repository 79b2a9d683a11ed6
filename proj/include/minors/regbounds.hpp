// Closed-form numerics for the minor algebra: Castelnuovo-Mumford
// regularity, upper bounds for the generator degrees of the defining
// ideal, Hilbert function values from the decomposition formula, and the
// Hilbert-function duality check for square formats.
#pragma once

#include <optional>
#include <string>
#include <utility>

#include "minors/symfunc.hpp"

namespace minors {

enum class CaseTag { case_i, case_ii, excluded };

inline std::string to_string(CaseTag tag) {
  switch (tag) {
    case CaseTag::case_i: return "i";
    case CaseTag::case_ii: return "ii";
    default: return "excluded";
  }
}

// Outcome of the regularity formula.  The degenerate formats (1-minors,
// n <= t+1, maximal minors) fall outside the formula's hypotheses and are
// reported as tagged outcomes without a value.
struct RegularityCase {
  int t = 0, m = 0, n = 0;  // normalized so that m <= n
  CaseTag case_tag = CaseTag::excluded;
  std::optional<int> k0;     // auxiliary threshold, case ii only
  std::optional<int> value;  // the regularity, absent when excluded
};

// Castelnuovo-Mumford regularity of the algebra of t-minors of a generic
// m x n matrix.  Case (i) applies when m+n-1 < floor(mn/t); otherwise the
// threshold k0 = ceil((tm+tn-mn)/(m-t)) enters the formula.
inline RegularityCase regularity(int t, int m, int n) {
  require(t >= 1 && m >= 1 && n >= 1, "need t, m, n >= 1");
  if (m > n) std::swap(m, n);
  require(t <= m, "no t-minors in this format");
  RegularityCase out;
  out.t = t;
  out.m = m;
  out.n = n;
  if (t == 1 || n <= t + 1 || t == m) {
    out.case_tag = CaseTag::excluded;
    return out;
  }
  if (m + n - 1 < (m * n) / t) {
    out.case_tag = CaseTag::case_i;
    out.value = m * n - (m * n + t - 1) / t;  // mn - ceil(mn/t)
  } else {
    out.case_tag = CaseTag::case_ii;
    const int num = t * m + t * n - m * n;
    // ceil for a possibly negative numerator over a positive denominator
    const int den = m - t;
    const int k0 = num >= 0 ? (num + den - 1) / den : -((-num) / den);
    out.k0 = k0;
    out.value = m * n - (m * (n + k0)) / t;
  }
  return out;
}

// Upper bound for the largest degree of a minimal generator of the ideal
// of relations.  1-minors and the n <= t+1 formats have no relations at
// all; the maximal-minor (Grassmannian) case is generated by quadrics;
// otherwise the closed bound applies after replacing n by min(n, m+t),
// which leaves the answer unchanged for all larger n.
inline int degree_bound(int t, int m, int n) {
  require(t >= 1 && m >= 1 && n >= 1, "need t, m, n >= 1");
  if (m > n) std::swap(m, n);
  require(t <= m, "no t-minors in this format");
  if (t == 1 || n <= t + 1) return 0;
  if (t == m) return 2;
  const int reduced = std::min(n, m + t);
  return m * reduced - m - (m * m) / t + 1;
}

// Value of the Hilbert function of the minor algebra in degree d, summed
// from the decomposition into irreducibles.
inline Int hilbert_At(int t, int m, int n, int d) {
  Int total = 0;
  for (const auto& [lambda, mult] : decompose_minor_algebra(t, m, n, d))
    total += mult * dim_schur(lambda, m) * dim_schur(lambda, n);
  return total;
}

// Hilbert function table in CSV form, one row per degree.
inline std::string hilbert_csv(int t, int m, int n, int dmax) {
  require(dmax >= 0, "need dmax >= 0");
  std::string out = "d,dim\n";
  for (int d = 0; d <= dmax; ++d)
    out += std::to_string(d) + "," + hilbert_At(t, m, n, d).str() + "\n";
  return out;
}

// Checks the Hilbert-function consequence of the isomorphism between the
// algebras of t-minors and (n-t)-minors of a square n x n matrix.
inline bool duality_check(int t, int n, int dmax) {
  require(1 <= t && t < n, "need 1 <= t < n");
  require(dmax >= 0, "need dmax >= 0");
  for (int d = 0; d <= dmax; ++d)
    if (hilbert_At(t, n, n, d) != hilbert_At(n - t, n, n, d)) return false;
  return true;
}

}  // namespace minors
