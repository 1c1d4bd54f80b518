#include "invbound/perm_group.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <unordered_set>

#include "invbound/errors.hpp"

namespace invbound {

bool PermGroup::contains(const Permutation& g) const { return position(g).has_value(); }

std::optional<std::size_t> PermGroup::position(const Permutation& g) const {
  auto it = std::lower_bound(elements_.begin(), elements_.end(), g);
  if (it == elements_.end() || *it != g) return std::nullopt;
  return static_cast<std::size_t>(it - elements_.begin());
}

PermGroup group_closure(const std::vector<Permutation>& generators, int degree, std::size_t cap) {
  if (cap < 1) throw DomainError("closure cap must be positive");
  for (const auto& g : generators)
    if (g.degree() != degree) throw DomainError("generators must share the group degree");

  PermGroup group;
  group.degree_ = degree;
  group.generators_ = generators;

  const Permutation id = Permutation::identity(degree);
  std::unordered_set<Permutation, PermutationHash> seen{id};
  std::vector<Permutation> found{id};
  for (std::size_t i = 0; i < found.size(); ++i) {
    for (const auto& s : generators) {
      Permutation next = found[i] * s;
      if (seen.insert(next).second) {
        if (seen.size() > cap)
          throw CapacityError("group closure exceeded " + std::to_string(cap) + " elements");
        found.push_back(std::move(next));
      }
    }
  }
  std::sort(found.begin(), found.end());
  group.elements_ = std::move(found);
  return group;
}

PermGroup group_closure(const std::vector<Permutation>& generators, std::size_t cap) {
  if (generators.empty()) throw DomainError("cannot infer degree from an empty generator list");
  return group_closure(generators, generators.front().degree(), cap);
}

PermGroup symmetric_group(int n) {
  if (n == 1) return group_closure({}, 1);
  std::vector<int> cycle(n);
  std::iota(cycle.begin(), cycle.end(), 2);
  cycle.back() = 1;
  std::vector<int> swap(n);
  std::iota(swap.begin(), swap.end(), 1);
  std::swap(swap[0], swap[1]);
  return group_closure({Permutation(cycle), Permutation(swap)}, n);
}

PermGroup alternating_group(int n) {
  if (n < 3) return group_closure({}, n);
  std::vector<Permutation> gens;
  for (int k = 3; k <= n; ++k) {
    std::vector<int> img(n);
    std::iota(img.begin(), img.end(), 1);
    img[0] = 2;
    img[1] = k;
    img[k - 1] = 1;
    gens.emplace_back(img);
  }
  return group_closure(gens, n);
}

PermGroup conjugate(const PermGroup& group, const Permutation& s) {
  const Permutation s_inv = s.inverse();
  std::vector<Permutation> gens;
  for (const auto& g : group.generators()) gens.push_back(s * g * s_inv);
  return group_closure(gens, group.degree());
}

std::vector<int> orbit(const PermGroup& group, int point) {
  std::vector<bool> seen(group.degree() + 1, false);
  std::vector<int> out{point};
  seen[point] = true;
  for (std::size_t i = 0; i < out.size(); ++i) {
    for (const auto& g : group.generators()) {
      const int q = g(out[i]);
      if (!seen[q]) {
        seen[q] = true;
        out.push_back(q);
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool is_transitive(const PermGroup& group) {
  return static_cast<int>(orbit(group, 1).size()) == group.degree();
}

bool is_abelian(const PermGroup& group) {
  const auto& gens = group.generators();
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t j = i + 1; j < gens.size(); ++j)
      if (gens[i] * gens[j] != gens[j] * gens[i]) return false;
  return true;
}

long long group_exponent(const PermGroup& group) {
  long long e = 1;
  for (const auto& g : group.elements()) e = std::lcm(e, g.order());
  return e;
}

int group_index(const PermGroup& group) {
  if (group.is_trivial()) throw DomainError("index of the trivial group is undefined");
  int best = group.degree();
  for (const auto& g : group.elements())
    if (!g.is_identity()) best = std::min(best, element_index(g));
  return best;
}

namespace {

std::size_t find_root(std::vector<std::size_t>& parent, std::size_t x) {
  while (parent[x] != x) x = parent[x] = parent[parent[x]];
  return x;
}

}  // namespace

ConjClassSet conjugacy_and_rational_classes(const PermGroup& group) {
  const auto& elems = group.elements();
  std::vector<std::size_t> class_of(elems.size(), static_cast<std::size_t>(-1));
  ConjClassSet result;

  std::vector<Permutation> gens_and_inverses;
  for (const auto& s : group.generators()) {
    gens_and_inverses.push_back(s);
    gens_and_inverses.push_back(s.inverse());
  }

  for (std::size_t i = 0; i < elems.size(); ++i) {
    if (class_of[i] != static_cast<std::size_t>(-1)) continue;
    const std::size_t cls = result.classes.size();
    std::vector<std::size_t> members{i};
    class_of[i] = cls;
    for (std::size_t k = 0; k < members.size(); ++k) {
      const Permutation& g = elems[members[k]];
      for (const auto& s : gens_and_inverses) {
        const auto pos = group.position(s * g * s.inverse());
        if (class_of[*pos] == static_cast<std::size_t>(-1)) {
          class_of[*pos] = cls;
          members.push_back(*pos);
        }
      }
    }
    std::sort(members.begin(), members.end());
    std::vector<Permutation> cls_elems;
    cls_elems.reserve(members.size());
    for (auto m : members) cls_elems.push_back(elems[m]);
    result.classes.push_back(std::move(cls_elems));
  }

  // Fuse the class of g with the classes of g^k, gcd(k, ord g) = 1.
  std::vector<std::size_t> parent(result.classes.size());
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  for (std::size_t c = 0; c < result.classes.size(); ++c) {
    const Permutation& rep = result.classes[c].front();
    const long long ord = rep.order();
    for (long long k = 2; k < ord; ++k) {
      if (std::gcd(k, ord) != 1) continue;
      const std::size_t other = class_of[*group.position(rep.pow(k))];
      const std::size_t a = find_root(parent, c);
      const std::size_t b = find_root(parent, other);
      if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
  }
  std::vector<std::size_t> slot(result.classes.size(), static_cast<std::size_t>(-1));
  for (std::size_t c = 0; c < result.classes.size(); ++c) {
    const std::size_t r = find_root(parent, c);
    if (slot[r] == static_cast<std::size_t>(-1)) {
      slot[r] = result.fusion.size();
      result.fusion.emplace_back();
    }
    result.fusion[slot[r]].push_back(c);
  }
  return result;
}

int malle_b_Q(const PermGroup& group) {
  const int min_index = group_index(group);
  const ConjClassSet cc = conjugacy_and_rational_classes(group);
  int count = 0;
  for (const auto& rational : cc.fusion) {
    const Permutation& rep = cc.classes[rational.front()].front();
    if (!rep.is_identity() && element_index(rep) == min_index) ++count;
  }
  return count;
}

PermGroup point_stabilizer(const PermGroup& group, int point) {
  if (point < 1 || point > group.degree()) throw DomainError("point outside 1..n");
  // Build a small generating set greedily so later closures stay cheap.
  std::vector<Permutation> gens;
  PermGroup current = group_closure(gens, group.degree());
  for (const auto& g : group.elements()) {
    if (g(point) != point || current.contains(g)) continue;
    gens.push_back(g);
    current = group_closure(gens, group.degree());
  }
  return current;
}

int t_value(const PermGroup& group) {
  if (!is_transitive(group)) throw DomainError("t is defined for transitive groups only");
  const int n = group.degree();
  const PermGroup stab = point_stabilizer(group, 1);

  // <G', h> depends only on the double coset G' h G', and those correspond to
  // the G'-orbits of h(1). One h per orbit suffices.
  std::vector<bool> covered(n + 1, false);
  covered[1] = true;
  int t = 1;
  for (int q = 2; q <= n; ++q) {
    if (covered[q]) continue;
    for (int r : orbit(stab, q)) covered[r] = true;
    const auto h = std::find_if(group.elements().begin(), group.elements().end(),
                                [q](const Permutation& g) { return g(1) == q; });
    std::vector<Permutation> gens = stab.generators();
    gens.push_back(*h);
    const PermGroup intermediate = group_closure(gens, n);
    if (intermediate.order() == group.order()) continue;
    t = std::max(t, static_cast<int>(group.order() / intermediate.order()));
  }
  return t;
}

}  // namespace invbound
