#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "invbound/perm_group.hpp"
#include "invbound/polynomial.hpp"

namespace invbound {

// Hilbert series of the invariant ring, truncated after t^N.
struct MolienSeries {
  std::vector<Rational> coefficients;  // a_0 .. a_N
  std::size_t group_order = 0;

  int truncation() const noexcept { return static_cast<int>(coefficients.size()) - 1; }
  // "a0 a1 a2 ..."; throws InternalInconsistency if a coefficient is not an integer.
  std::string to_string() const;
};

// Degrees of a candidate primary set, nondecreasing.
struct DegreeVector {
  std::vector<int> degrees;

  int size() const noexcept { return static_cast<int>(degrees.size()); }
  int sum() const;
  Integer product() const;
  long long lcm() const;
  // "1,2,3,..." as printed in the tables.
  std::string to_string() const;

  friend bool operator==(const DegreeVector&, const DegreeVector&) = default;
  friend auto operator<=>(const DegreeVector&, const DegreeVector&) = default;
};

DegreeVector parse_degree_vector(const std::string& text);

struct HilbertNumerator {
  std::vector<Integer> coefficients;  // numerator of H(t) * prod (1 - t^d_i)
  Integer secondary_count;            // prod d_i / |G|

  std::string to_string() const;
  // Degrees of the secondary invariants with multiplicity, ascending.
  std::vector<int> secondary_degrees() const;
};

struct NumeratorCheck {
  std::optional<HilbertNumerator> numerator;
  int offending_degree = -1;
  std::string reason;

  bool accepted() const noexcept { return numerator.has_value(); }
};

MolienSeries molien_series(const PermGroup& group, int truncation);

// Default truncation n(n+1)/2.
int default_truncation(int n);

// Accepts d when H * prod(1 - t^d_i) has nonnegative integer coefficients and
// vanishes above sum(d_i - 1). Throws PrecisionError if H is too short.
NumeratorCheck hilbert_numerator(const MolienSeries& series, const DegreeVector& d);

struct CandidateVerdict {
  DegreeVector degrees;
  bool accepted = false;
  std::string reason;  // empty when accepted
};

inline constexpr std::size_t kDefaultMaxCandidates = 64;

// Every vector with d_1 = 1, d_i <= i, nondecreasing, with its verdict.
// Ordered by ascending sum, then lexicographically.
std::vector<CandidateVerdict> evaluate_degree_vectors(const PermGroup& group, const MolienSeries& series);

// The accepted vectors of evaluate_degree_vectors, at most max_candidates.
// Extends the series itself if it is too short. DomainError for intransitive
// groups.
std::vector<DegreeVector> candidate_degree_vectors(const PermGroup& group, const MolienSeries& series,
                                                   std::size_t max_candidates = kDefaultMaxCandidates);

// The same vectors ordered by ascending product, then sum, then lex.
std::vector<DegreeVector> order_by_product(std::vector<DegreeVector> vectors);

}  // namespace invbound
