#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "invbound/permutation.hpp"

namespace invbound {

inline constexpr std::size_t kDefaultElementCap = 50'000;

// A subgroup of Sn held as its full sorted element list. Immutable once built.
class PermGroup {
 public:
  int degree() const noexcept { return degree_; }
  const std::vector<Permutation>& generators() const noexcept { return generators_; }
  const std::vector<Permutation>& elements() const noexcept { return elements_; }
  std::size_t order() const noexcept { return elements_.size(); }

  bool contains(const Permutation& g) const;
  // Position of g in elements(), if present.
  std::optional<std::size_t> position(const Permutation& g) const;

  bool is_trivial() const noexcept { return elements_.size() == 1; }

 private:
  friend PermGroup group_closure(const std::vector<Permutation>&, int, std::size_t);

  int degree_ = 0;
  std::vector<Permutation> generators_;
  std::vector<Permutation> elements_;
};

// Closure of the generators under composition. Throws CapacityError once
// more than `cap` elements have been found. An empty generator list gives the
// trivial group of the stated degree.
PermGroup group_closure(const std::vector<Permutation>& generators, int degree,
                        std::size_t cap = kDefaultElementCap);
PermGroup group_closure(const std::vector<Permutation>& generators,
                        std::size_t cap = kDefaultElementCap);

PermGroup symmetric_group(int n);
PermGroup alternating_group(int n);

// s G s^-1.
PermGroup conjugate(const PermGroup& group, const Permutation& s);

std::vector<int> orbit(const PermGroup& group, int point);
bool is_transitive(const PermGroup& group);
bool is_abelian(const PermGroup& group);

// lcm of element orders.
long long group_exponent(const PermGroup& group);

// Minimum element_index over non-identity elements. DomainError on the
// trivial group.
int group_index(const PermGroup& group);

struct ConjClassSet {
  // Conjugacy classes; each inner list is sorted and classes are ordered by
  // their smallest element (so the identity class comes first).
  std::vector<std::vector<Permutation>> classes;
  // Rational classes as lists of indices into `classes`.
  std::vector<std::vector<std::size_t>> fusion;

  std::size_t rational_class_count() const noexcept { return fusion.size(); }
};

ConjClassSet conjugacy_and_rational_classes(const PermGroup& group);

// Number of non-identity rational classes whose index equals group_index.
int malle_b_Q(const PermGroup& group);

PermGroup point_stabilizer(const PermGroup& group, int point);

// Largest index [G:H] over subgroups H with Stab(1) < H < G, or 1 when no
// such H exists. DomainError if the group is not transitive.
int t_value(const PermGroup& group);

}  // namespace invbound
