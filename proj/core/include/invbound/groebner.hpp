#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "invbound/polynomial.hpp"

namespace invbound {

enum class CoefficientField {
  Rational,
  // GF(2^31 - 1). Used only for the homogeneous zero-dimensionality check.
  Prime,
};

struct GroebnerOptions {
  MonomialOrder order = MonomialOrder::Grevlex;
  CoefficientField field = CoefficientField::Rational;
  // Elementary reduction steps before BudgetExhausted is thrown.
  std::uint64_t step_budget = 10'000'000;
  std::optional<std::chrono::steady_clock::time_point> deadline;
};

struct GroebnerBasis {
  int nvars = 0;
  MonomialOrder order = MonomialOrder::Grevlex;
  // Monic, reduced, sorted by ascending leading monomial.
  std::vector<Polynomial> generators;

  std::vector<Monomial> leading_monomials() const;
};

struct GroebnerStats {
  std::uint64_t reduction_steps = 0;
  std::uint64_t pairs_processed = 0;
  std::uint64_t pairs_skipped = 0;  // chain/product criteria
  std::uint64_t zero_reductions = 0;
};

// Reduced Groebner basis of <generators> (zero polynomials are ignored; the
// zero ideal gives an empty basis). Throws BudgetExhausted when the step
// budget or deadline runs out.
GroebnerBasis buchberger(const std::vector<Polynomial>& generators, const GroebnerOptions& options = {},
                         GroebnerStats* stats = nullptr);

// Remainder of f on division by the basis, made monic unless zero.
Polynomial normal_form(const Polynomial& f, const GroebnerBasis& basis);

// True iff every variable has a pure power among the leading monomials.
bool is_zero_dimensional(const GroebnerBasis& basis);
bool is_zero_dimensional(const std::vector<Monomial>& leading, int nvars);

// Decision for n homogeneous polynomials in n variables: is V(I) = {0}?
//
// The computation runs degree by degree and compares the Hilbert function of
// the current leading-term ideal with that of a complete intersection of the
// same degrees. Pairs in a degree are skipped once the counts agree; any
// acceptance is certified by pure powers among leading monomials of ideal
// members, so skipping never produces a false positive. A rejection is only
// reported after a run with no skipping.
struct ZeroDimCheck {
  bool zero_dimensional = false;
  // Leading monomials of the ideal members found (acceptance certificate).
  std::vector<Monomial> leading;
  // Partial basis whose leading monomials are `leading`.
  std::vector<Polynomial> basis;
  // On rejection: a variable with no pure power, and the first degree whose
  // Hilbert function exceeds the complete-intersection value.
  int missing_variable = -1;
  int excess_degree = -1;
  bool hilbert_pruned = false;
  CoefficientField field = CoefficientField::Rational;
  GroebnerStats stats;
};

ZeroDimCheck homogeneous_zero_dimensional(const std::vector<Polynomial>& generators,
                                          const GroebnerOptions& options = {});

// Coefficients of prod (1 - t^d) / (1 - t)^n up to degree `upto`.
std::vector<long long> complete_intersection_hilbert(const std::vector<int>& degrees, int nvars, int upto);

}  // namespace invbound
