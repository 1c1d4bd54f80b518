#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "invbound/invariants.hpp"
#include "invbound/molien.hpp"
#include "invbound/perm_group.hpp"
#include "invbound/polynomial.hpp"

namespace invbound {

// Degree l = [K:Q] of the base field.
struct BaseFieldDegree {
  int l = 1;

  BaseFieldDegree() = default;
  explicit BaseFieldDegree(int degree);
};

// (n+2)/4.
Rational schmidt_exponent(int n);

// (sum_{i>=2} d_i - 1/l) / (2(n-t)). DomainError unless 1 <= t < n and d is a
// length-n vector starting with 1.
Rational theorem_exponent(int n, int t, const DegreeVector& d, BaseFieldDegree l = {});

// sum_{i>=2} d_i / (2(n-t)): the same bound without the sieve savings.
Rational schmidt_recovery_exponent(int n, int t, const DegreeVector& d);

// The general-base-field restatement printed with the tables: result + 1 - 1/l,
// where result is the exponent over Q. Kept only as a labeled alternative.
Rational tabulated_base_field_exponent(const Rational& result_over_q, BaseFieldDegree l);

// 1/ind(G). DomainError on the trivial group.
Rational malle_exponent(const PermGroup& group);

struct AnalyzeConfig {
  SearchConfig search;
  // Molien truncation; default_truncation(n) when absent.
  std::optional<int> truncation;
  std::size_t max_candidates = kDefaultMaxCandidates;
};

struct BoundReport {
  std::string label;
  int n = 0;
  Integer order;
  int t = 1;
  int l = 1;
  // Absent when the search ran out of budget.
  std::optional<DegreeVector> degrees;
  // theorem_exponent for proper subgroups, schmidt_recovery_exponent for Sn.
  std::optional<Rational> result;
  Rational schmidt;
  Rational malle_a;
  int malle_b_q = 0;
  std::optional<Integer> secondary_count;
  // Sn: the invariant ring is free over the elementary symmetric polynomials.
  bool no_secondary_invariant = false;
  // Set when the search ran out of budget; holds the reason.
  std::string budget_note;

  bool complete() const noexcept { return result.has_value(); }
  // "none" when t = 1, otherwise "Deg. t".
  std::string subfield() const;
  // Only meaningful for l > 1.
  std::optional<Rational> tabulated_alternative() const;

  static std::string csv_header();
  std::string to_csv() const;
  // Throws ParseError on malformed rows.
  static BoundReport from_csv(const std::string& row);

  static std::string markdown_header();
  std::string to_markdown() const;
};

// Renders r as X^{p/q} (or X^{p}).
std::string format_power(const Rational& r);

// DomainError for intransitive groups. Budget exhaustion is reported in the
// returned report rather than thrown.
BoundReport analyze_group(const PermGroup& group, BaseFieldDegree l = {}, const AnalyzeConfig& config = {},
                          std::string label = {});

}  // namespace invbound
