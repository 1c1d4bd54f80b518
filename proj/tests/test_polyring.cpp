#include <doctest.h>

#include <algorithm>
#include <random>

#include <invbound/errors.hpp>
#include <invbound/groebner.hpp>
#include <invbound/invariants.hpp>
#include <invbound/perm_group.hpp>
#include <invbound/polynomial.hpp>

#include "golden.hpp"

using namespace invbound;

namespace {

Polynomial P(const char* s, int n) { return parse_polynomial(s, n); }

PermGroup psl27() { return invbound::testing::printed_7t5(); }

Polynomial random_poly(std::mt19937& rng, int n, int terms, int maxdeg) {
  Polynomial f(n);
  std::uniform_int_distribution<int> e(0, maxdeg), c(-5, 5);
  for (int k = 0; k < terms; ++k) {
    std::vector<int> ex(n);
    for (auto& x : ex) x = e(rng);
    f += Polynomial::monomial(n, Monomial::from_exponents(ex), c(rng));
  }
  return f;
}

}  // namespace

TEST_CASE("monomial order") {
  auto a = Monomial::from_exponents({2, 0, 0}), b = Monomial::from_exponents({1, 1, 0}),
       c = Monomial::from_exponents({0, 0, 3}), d = Monomial::from_exponents({1, 0, 1});
  CHECK(compare(a, b, MonomialOrder::Grevlex) > 0);
  CHECK(compare(c, a, MonomialOrder::Grevlex) > 0);  // higher degree first
  CHECK(compare(b, d, MonomialOrder::Grevlex) > 0);  // grevlex: smaller last exponent wins
  CHECK(compare(a, c, MonomialOrder::Lex) > 0);
  CHECK(compare(a, a, MonomialOrder::Lex) == 0);
  auto ms = monomials_of_degree(4, 3);
  CHECK(ms.size() == 20);
  for (std::size_t i = 1; i < ms.size(); ++i) CHECK(compare(ms[i - 1], ms[i], MonomialOrder::Grevlex) > 0);
  // Fast and reference comparisons agree.
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> e(0, 4);
  for (int k = 0; k < 2000; ++k) {
    std::vector<int> x(7), y(7);
    for (auto& v : x) v = e(rng);
    for (auto& v : y) v = e(rng);
    auto p = Monomial::from_exponents(x), q = Monomial::from_exponents(y);
    CHECK(compare(p, q, MonomialOrder::Grevlex) == compare_slow(p, q, MonomialOrder::Grevlex));
  }
}

TEST_CASE("parse and print round trip") {
  auto f = P("3*x1^2*x3 - x2 + 1/2*x1*x4 + 7", 4);
  CHECK(f.size() == 4);
  CHECK(parse_polynomial(f.to_string(), 4) == f);
  CHECK(P("x1 - x1", 3).is_zero());
  CHECK_THROWS_AS(P("x5", 4), ParseError);
  CHECK_THROWS_AS(P("2**x1", 4), ParseError);
  std::mt19937 rng(1);
  for (int k = 0; k < 50; ++k) {
    auto g = random_poly(rng, 5, 6, 3);
    CHECK(parse_polynomial(g.to_string(), 5) == g);
  }
}

TEST_CASE("arithmetic") {
  auto x = P("x1", 2), y = P("x2", 2);
  CHECK((x + y) * (x - y) == P("x1^2 - x2^2", 2));
  CHECK(((x + y) * Rational(1, 2)).coefficient(Monomial::variable(0)) == Rational(1, 2));
  CHECK(P("x1^2*x2 + x2^3", 2).is_homogeneous());
  CHECK_FALSE(P("x1^2 + x2", 2).is_homogeneous());
  CHECK(P("x1^2 + x2", 2).total_degree() == 2);
  CHECK(Polynomial(3).total_degree() == -1);
}

TEST_CASE("apply_permutation") {
  CHECK(apply_permutation(parse_cycles("(1 2)", 2), P("x1", 2)) == P("x2", 2));
  CHECK(apply_permutation(parse_cycles("(1 2 3)", 3), P("x1^2*x2", 3)) == P("x2^2*x3", 3));
  auto s = power_sum(5, 1);
  auto s5 = symmetric_group(5);
  for (const auto& g : s5.elements()) CHECK(apply_permutation(g, s) == s);
  CHECK_THROWS_AS(apply_permutation(parse_cycles("(1 2)", 3), P("x1", 2)), DomainError);
  // Action is a homomorphism: (gh).f = g.(h.f)
  std::mt19937 rng(3);
  auto G = symmetric_group(4);
  std::uniform_int_distribution<std::size_t> pick(0, G.order() - 1);
  for (int k = 0; k < 100; ++k) {
    auto f = random_poly(rng, 4, 5, 3);
    const auto& g = G.elements()[pick(rng)];
    const auto& h = G.elements()[pick(rng)];
    CHECK(apply_permutation(g * h, f) == apply_permutation(g, apply_permutation(h, f)));
  }
}

TEST_CASE("orbit sums") {
  CHECK(orbit_sum(symmetric_group(3), Monomial::variable(0)) == P("x1 + x2 + x3", 3));
  auto c3 = group_closure({parse_cycles("(1 2 3)", 3)}, 3);
  CHECK(orbit_sum(c3, Monomial::from_exponents({2, 1, 0})) == P("x1^2*x2 + x2^2*x3 + x3^2*x1", 3));
  auto G = psl27();
  auto f4 = orbit_sum(G, Monomial::from_exponents({1, 1, 1, 0, 0, 0, 0}));
  CHECK(f4.size() == 28);
  CHECK(is_invariant(G.generators(), f4));
  // The printed f4 is this orbit sum for the conjugate that fixes it.
  auto golden = parse_primary_set(invbound::testing::golden_text(), 7);
  auto H = invbound::testing::golden_frame_7t5();
  CHECK(orbit_sum(H, Monomial::from_exponents({1, 1, 1, 0, 0, 0, 0})) == golden.polys[3]);
  CHECK(is_invariant(H.generators(), golden.polys[5]));
  CHECK_FALSE(is_invariant(G.generators(), golden.polys[3]));
  for (int d = 1; d <= 3; ++d)
    for (const auto& m : monomials_of_degree(7, d)) {
      auto o = orbit_sum(G, m);
      CHECK(is_invariant(G.generators(), o));
      CHECK(G.order() % o.size() == 0);
    }
}

TEST_CASE("is_invariant") {
  for (int k = 1; k <= 4; ++k) CHECK(is_invariant(psl27().generators(), elementary_symmetric(7, k)));
  CHECK_FALSE(is_invariant(symmetric_group(2).generators(), P("x1", 2)));
}

TEST_CASE("buchberger small cases") {
  auto b1 = buchberger({P("x1", 2), P("x2", 2)});
  CHECK(b1.generators.size() == 2);
  CHECK(is_zero_dimensional(b1));

  auto b2 = buchberger({P("x1 + x2", 2), P("x1*x2", 2)});
  auto lt = b2.leading_monomials();
  std::sort(lt.begin(), lt.end(), [](auto& a, auto& b) { return compare(a, b, MonomialOrder::Grevlex) > 0; });
  REQUIRE(lt.size() == 2);
  CHECK(lt[0] == Monomial::from_exponents({0, 2}));
  CHECK(lt[1] == Monomial::from_exponents({1, 0}));

  auto b3 = buchberger({P("x1^2", 1)});
  CHECK(b3.generators.size() == 1);
  CHECK(buchberger({Polynomial(3)}).generators.empty());
  CHECK_FALSE(is_zero_dimensional(buchberger({P("x1*x2", 2)})));
}

TEST_CASE("elementary and power sums are zero-dimensional") {
  for (int n = 1; n <= 5; ++n) {
    std::vector<Polynomial> e;
    for (int k = 1; k <= n; ++k) e.push_back(elementary_symmetric(n, k));
    CHECK(is_zero_dimensional(buchberger(e)));
    CHECK(homogeneous_zero_dimensional(e).zero_dimensional);
  }
  for (int n = 1; n <= 4; ++n) {
    std::vector<Polynomial> p;
    for (int k = 1; k <= n; ++k) p.push_back(power_sum(n, k));
    CHECK(is_zero_dimensional(buchberger(p)));
    GroebnerOptions lex;
    lex.order = MonomialOrder::Lex;
    CHECK(is_zero_dimensional(buchberger(p, lex)));
  }
}

TEST_CASE("buchberger basis properties") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 12; ++trial) {
    std::vector<Polynomial> gens;
    for (int k = 0; k < 3; ++k) gens.push_back(random_poly(rng, 3, 3, 2));
    auto B = buchberger(gens);
    for (const auto& g : gens) CHECK(normal_form(g, B).is_zero());
    // Reduced bases do not depend on input order.
    auto rev = gens;
    std::reverse(rev.begin(), rev.end());
    auto B2 = buchberger(rev);
    auto key = [](GroebnerBasis b) {
      std::vector<std::string> s;
      for (auto& g : b.generators) s.push_back(g.to_string());
      std::sort(s.begin(), s.end());
      return s;
    };
    CHECK(key(B) == key(B2));
  }
}

TEST_CASE("step budget") {
  std::vector<Polynomial> e;
  for (int k = 1; k <= 5; ++k) e.push_back(power_sum(5, k));
  GroebnerOptions tiny;
  tiny.step_budget = 3;
  CHECK_THROWS_AS(buchberger(e, tiny), BudgetExhausted);
}

TEST_CASE("Hilbert-driven check agrees with plain Buchberger") {
  std::mt19937 rng(5);
  std::uniform_int_distribution<int> c(-2, 2);
  for (int trial = 0; trial < 30; ++trial) {
    const int n = 3;
    std::vector<Polynomial> gens;
    for (int d = 1; d <= n; ++d) {
      Polynomial f(n);
      for (const auto& m : monomials_of_degree(n, d))
        if (rng() % 3 == 0) f += Polynomial::monomial(n, m, c(rng));
      if (f.is_zero()) f = Polynomial::monomial(n, monomials_of_degree(n, d).back());
      gens.push_back(f);
    }
    bool plain = is_zero_dimensional(buchberger(gens));
    CHECK(homogeneous_zero_dimensional(gens).zero_dimensional == plain);
    GroebnerOptions p;
    p.field = CoefficientField::Prime;
    // Small integer coefficients: reduction mod p keeps the answer here.
    CHECK(homogeneous_zero_dimensional(gens, p).zero_dimensional == plain);
  }
}

TEST_CASE("complete intersection Hilbert function") {
  // 1/((1-t)(1-t^2)) * (1-t)(1-t^2) = 1 for degrees (1,2) in 2 variables
  auto h = complete_intersection_hilbert({1, 2}, 2, 4);
  CHECK(h == std::vector<long long>{1, 1, 0, 0, 0});
  auto h2 = complete_intersection_hilbert({2, 2}, 2, 4);
  CHECK(h2 == std::vector<long long>{1, 2, 1, 0, 0});
}
