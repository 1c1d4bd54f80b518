#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

namespace invbound {

// A bijection of {1..n}. Points are 1-based in every public signature; the
// image table is stored 0-based.
class Permutation {
 public:
  Permutation() = default;

  // images[i-1] is the image of point i. Throws DomainError unless the
  // vector is a bijection of {1..n}.
  explicit Permutation(const std::vector<int>& images);

  static Permutation identity(int degree);

  int degree() const noexcept { return static_cast<int>(images_.size()); }

  // Image of a 1-based point.
  int operator()(int point) const { return images_[point - 1] + 1; }

  std::vector<int> images() const;

  bool is_identity() const noexcept;
  Permutation inverse() const;
  Permutation pow(long long exponent) const;

  // Element order in Sn (lcm of cycle lengths).
  long long order() const;

  // Cycle lengths including fixed points, sorted descending.
  std::vector<int> cycle_type() const;

  // Non-trivial cycles, each starting from its smallest point.
  std::vector<std::vector<int>> cycles() const;

  std::string to_string() const;

  // (g * h)(i) = g(h(i)).
  friend Permutation operator*(const Permutation& g, const Permutation& h);

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

  const std::vector<std::uint8_t>& raw() const noexcept { return images_; }

 private:
  explicit Permutation(std::vector<std::uint8_t> zero_based) : images_(std::move(zero_based)) {}

  std::vector<std::uint8_t> images_;
};

// Parses disjoint-cycle notation such as "(1 2 3)(4,5)". Fixed points may be
// omitted; "()" and the empty string give the identity.
Permutation parse_cycles(std::string_view text, int degree);

// n minus the number of orbits of <g> on {1..n}, computed by orbit tracing.
int element_index(const Permutation& g);

// Sum over cycles of (length - 1). Independent of element_index's orbit walk.
int element_index_from_cycle_type(const Permutation& g);

struct PermutationHash {
  std::size_t operator()(const Permutation& g) const noexcept;
};

}  // namespace invbound
