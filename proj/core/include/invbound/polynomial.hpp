#pragma once

#include <array>
#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <cstring>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "invbound/perm_group.hpp"
#include "invbound/permutation.hpp"

namespace invbound {

using Rational = mpq_class;
using Integer = mpz_class;

inline constexpr int kMaxVars = 14;

// Exponent vector over at most kMaxVars variables, with cached total degree.
// The 16-byte layout lets the hot operations below work on two machine words.
struct Monomial {
  std::array<std::uint8_t, kMaxVars> exps{};
  std::uint16_t deg = 0;

  static Monomial from_exponents(const std::vector<int>& e);
  static Monomial variable(int index0, int power = 1);

  int degree() const noexcept { return deg; }
  bool divides(const Monomial& other) const noexcept {
    if (deg > other.deg) return false;
    for (int i = 0; i < kMaxVars; ++i)
      if (exps[i] > other.exps[i]) return false;
    return true;
  }
  bool is_pure_power_of(int& var) const noexcept;

  // Exponent sums stay below 256, so adding the words never carries across
  // bytes.
  friend Monomial operator*(const Monomial& a, const Monomial& b) noexcept {
    Monomial m;
    if constexpr (std::endian::native == std::endian::little) {
      std::uint64_t w[2], v[2];
      std::memcpy(w, &a, 16);
      std::memcpy(v, &b, 16);
      w[0] += v[0];
      w[1] += v[1];
      std::memcpy(&m, w, 16);
    } else {
      for (int i = 0; i < kMaxVars; ++i) m.exps[i] = static_cast<std::uint8_t>(a.exps[i] + b.exps[i]);
      m.deg = static_cast<std::uint16_t>(a.deg + b.deg);
    }
    return m;
  }
  // a / b; requires b | a.
  friend Monomial operator/(const Monomial& a, const Monomial& b) noexcept {
    Monomial m;
    if constexpr (std::endian::native == std::endian::little) {
      std::uint64_t w[2], v[2];
      std::memcpy(w, &a, 16);
      std::memcpy(v, &b, 16);
      w[0] -= v[0];
      w[1] -= v[1];
      std::memcpy(&m, w, 16);
    } else {
      for (int i = 0; i < kMaxVars; ++i) m.exps[i] = static_cast<std::uint8_t>(a.exps[i] - b.exps[i]);
      m.deg = static_cast<std::uint16_t>(a.deg - b.deg);
    }
    return m;
  }
  friend Monomial lcm(const Monomial& a, const Monomial& b);
  friend bool operator==(const Monomial& a, const Monomial& b) noexcept { return a.exps == b.exps; }
};
static_assert(sizeof(Monomial) == 16);

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const noexcept;
};

enum class MonomialOrder { Grevlex, Lex };

int compare_slow(const Monomial& a, const Monomial& b, MonomialOrder order) noexcept;

// Total order; positive when a > b.
inline int compare(const Monomial& a, const Monomial& b, MonomialOrder order) noexcept {
  if constexpr (std::endian::native == std::endian::little) {
    if (order == MonomialOrder::Grevlex) {
      // Read as a 128-bit integer the bytes run deg, x14 .. x1 from the top;
      // at equal degree the smaller value is the larger monomial.
      std::uint64_t w[2], v[2];
      std::memcpy(w, &a, 16);
      std::memcpy(v, &b, 16);
      if (w[1] != v[1]) {
        if (a.deg != b.deg) return a.deg > b.deg ? 1 : -1;
        return w[1] < v[1] ? 1 : -1;
      }
      if (w[0] != v[0]) return w[0] < v[0] ? 1 : -1;
      return 0;
    }
  }
  return compare_slow(a, b, order);
}

// All monomials of total degree d in n variables, descending in grevlex.
std::vector<Monomial> monomials_of_degree(int nvars, int d);

// Sparse polynomial with exact rational coefficients. Terms are kept in
// strictly descending grevlex order with no zero coefficients.
class Polynomial {
 public:
  using Term = std::pair<Monomial, Rational>;

  Polynomial() = default;
  explicit Polynomial(int nvars) : nvars_(nvars) {}
  Polynomial(int nvars, std::vector<Term> terms);

  static Polynomial constant(int nvars, const Rational& c);
  static Polynomial variable(int nvars, int index1);
  static Polynomial monomial(int nvars, const Monomial& m, const Rational& c = 1);

  int nvars() const noexcept { return nvars_; }
  const std::vector<Term>& terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }

  // Degree of the highest-degree term; -1 for zero.
  int total_degree() const noexcept;
  bool is_homogeneous() const noexcept;

  Rational coefficient(const Monomial& m) const;

  Polynomial& operator+=(const Polynomial& other);
  Polynomial& operator-=(const Polynomial& other);
  Polynomial& operator*=(const Rational& c);

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(Polynomial a, const Rational& c) { return a *= c; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend bool operator==(const Polynomial& a, const Polynomial& b);

  std::string to_string() const;

 private:
  void normalize();

  int nvars_ = 0;
  std::vector<Term> terms_;
};

// Text form: terms like "3*x1^2*x3", "-x2", "1/2*x1*x4", "7", joined by + or -.
Polynomial parse_polynomial(std::string_view text, int nvars);

Polynomial power_sum(int nvars, int d);
Polynomial elementary_symmetric(int nvars, int k);

// Substitutes x_i -> x_{g(i)}.
Monomial apply_permutation(const Permutation& g, const Monomial& m);
Polynomial apply_permutation(const Permutation& g, const Polynomial& f);

// Distinct monomials in the G-orbit of m (sorted descending grevlex).
std::vector<Monomial> monomial_orbit(const PermGroup& group, const Monomial& m);
Polynomial orbit_sum(const PermGroup& group, const Monomial& m);

bool is_invariant(const std::vector<Permutation>& generators, const Polynomial& f);

}  // namespace invbound
