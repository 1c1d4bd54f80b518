#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "invbound/groebner.hpp"
#include "invbound/molien.hpp"
#include "invbound/perm_group.hpp"
#include "invbound/polynomial.hpp"

namespace invbound {

// What verify_primary established about a set of polynomials.
struct Certificate {
  bool homogeneous = false;
  bool invariant = false;
  bool zero_dimensional = false;
  // Leading monomials of ideal members; contains a pure power of every variable.
  std::vector<Monomial> leading;
  // Ideal members whose leading monomials are `leading`.
  std::vector<Polynomial> basis;
  CoefficientField field = CoefficientField::Rational;
  GroebnerStats stats;
};

struct PrimarySet {
  std::vector<Polynomial> polys;
  DegreeVector degrees;
  Certificate certificate;

  // "degrees: d1 ... dn" followed by one polynomial per line.
  std::string to_string() const;
};

// Reads the to_string format. The certificate is left empty; run
// verify_primary to fill it.
PrimarySet parse_primary_set(const std::string& text, int nvars);

struct VerifyFailure {
  enum class Kind { WrongCount, NotHomogeneous, NotInvariant, NotZeroDimensional };
  Kind kind = Kind::WrongCount;
  // 0-based index of the offending polynomial, or -1.
  int poly_index = -1;
  // NotInvariant: a generator that moves the polynomial.
  std::optional<Permutation> generator;
  // NotZeroDimensional: first degree where the quotient is larger than for a
  // complete intersection, and a variable (1-based) with no pure-power leader.
  int offending_degree = -1;
  int missing_variable = -1;
  std::string message;
};

struct Verification {
  std::optional<Certificate> certificate;
  std::optional<VerifyFailure> failure;

  bool accepted() const noexcept { return certificate.has_value(); }
};

Verification verify_primary(const PermGroup& group, const std::vector<Polynomial>& polys,
                            const GroebnerOptions& options = {});

// Orbit sums of the degree-d monomials, one per orbit, ordered by descending
// leading monomial (so the power sum comes first for transitive groups).
std::vector<Polynomial> invariant_basis(const PermGroup& group, int d);

struct SearchConfig {
  std::uint64_t seed = 0;
  // Selections of plain orbit sums tried per candidate vector.
  int orbit_attempts = 64;
  // Seeded linear combinations tried per candidate vector after that.
  int combination_attempts = 6;
  // Reduction steps allowed per candidate vector, over all its attempts.
  std::uint64_t step_budget = 10'000'000;
  // Field for trying selections. A rejection mod p only means the selection
  // is skipped, so screening never yields a wrong certificate.
  CoefficientField screening = CoefficientField::Prime;
  // Field for the certificate of the selection that is returned. Acceptance
  // mod p is itself a proof over Q: it shows the resultant of the scaled
  // integer system is nonzero mod p.
  CoefficientField certification = CoefficientField::Rational;
  std::optional<std::chrono::steady_clock::time_point> deadline;
};

// Tries the candidates in order and returns the first primary set found.
// Sn short-circuits to the elementary symmetric polynomials, which are also
// the fallback when every candidate fails. Throws BudgetExhausted naming the
// candidate vector that ran out of budget.
PrimarySet find_primary_invariants(const PermGroup& group, const std::vector<DegreeVector>& candidates,
                                   const SearchConfig& config = {});

struct SecondaryData {
  Integer count;
  // Degrees with multiplicity, ascending; the first is 0.
  std::vector<int> degrees;
  std::optional<int> g2_degree;
  // Set when g2_degree is also the degree of a product of f2..fn.
  bool g2_degree_matches_primary_product = false;
};

SecondaryData secondary_data(const PrimarySet& primary, const PermGroup& group, const MolienSeries& series);

}  // namespace invbound
