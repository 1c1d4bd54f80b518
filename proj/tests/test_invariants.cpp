#include <doctest.h>

#include <invbound/errors.hpp>
#include <invbound/groebner.hpp>
#include <invbound/invariants.hpp>
#include <invbound/molien.hpp>

#include "golden.hpp"

using namespace invbound;
using invbound::testing::golden_frame_7t5;
using invbound::testing::golden_text;

namespace {

PermGroup gen(int n, std::initializer_list<const char*> cycles) {
  std::vector<Permutation> g;
  for (auto c : cycles) g.push_back(parse_cycles(c, n));
  return group_closure(g, n);
}

PermGroup psl27() { return invbound::testing::printed_7t5(); }

std::vector<Polynomial> elementary(int n) {
  std::vector<Polynomial> e;
  for (int k = 1; k <= n; ++k) e.push_back(elementary_symmetric(n, k));
  return e;
}

PrimarySet search(const PermGroup& G) {
  auto H = molien_series(G, default_truncation(G.degree()));
  return find_primary_invariants(G, candidate_degree_vectors(G, H));
}

// Common zeros of the polynomials among points with coordinates in -k..k
// other than the origin. A zero-dimensional homogeneous ideal has none.
bool has_nonzero_grid_root(const std::vector<Polynomial>& polys, int n, int k) {
  std::vector<int> x(n, -k);
  for (;;) {
    bool nonzero = false;
    for (int v : x) nonzero |= v != 0;
    if (nonzero) {
      bool all = true;
      for (const auto& f : polys) {
        Rational s = 0;
        for (const auto& [m, c] : f.terms()) {
          Rational t = c;
          for (int i = 0; i < n; ++i)
            for (int e = 0; e < m.exps[i]; ++e) t *= x[i];
          s += t;
        }
        if (s != 0) {
          all = false;
          break;
        }
      }
      if (all) return true;
    }
    int i = 0;
    while (i < n && x[i] == k) x[i++] = -k;
    if (i == n) return false;
    ++x[i];
  }
}

}  // namespace

TEST_CASE("invariant_basis") {
  auto b = invariant_basis(symmetric_group(3), 1);
  REQUIRE(b.size() == 1);
  CHECK(b[0] == power_sum(3, 1));
  CHECK(invariant_basis(gen(3, {"(1 2 3)"}), 3).size() == 4);
  auto G = psl27();
  auto b3 = invariant_basis(G, 3);
  // x1^3, x1^2*x2, the seven Fano lines and the 28 other triples.
  CHECK(b3.size() == 4);
  CHECK(b3.front() == power_sum(7, 3));
  auto golden = parse_primary_set(golden_text(), 7);
  auto b3f = invariant_basis(golden_frame_7t5(), 3);
  for (int i : {2, 3}) CHECK(std::find(b3f.begin(), b3f.end(), golden.polys[i]) != b3f.end());
  CHECK_THROWS_AS(invariant_basis(G, 0), DomainError);
  // Dimension matches the Molien coefficient.
  auto H = molien_series(G, 5);
  for (int d = 1; d <= 5; ++d) CHECK(Rational(static_cast<long>(invariant_basis(G, d).size())) == H.coefficients[d]);
}

TEST_CASE("golden 7T5 set") {
  auto G = golden_frame_7t5();
  CHECK(G.order() == 168);
  auto P = parse_primary_set(golden_text(), 7);
  // Under the printed generators the cubic is rejected.
  auto printed = verify_primary(psl27(), P.polys);
  REQUIRE_FALSE(printed.accepted());
  CHECK(printed.failure->kind == VerifyFailure::Kind::NotInvariant);
  CHECK(printed.failure->poly_index == 3);
  CHECK(P.degrees == DegreeVector{{1, 2, 3, 3, 4, 4, 7}});
  auto v = verify_primary(G, P.polys);
  REQUIRE(v.accepted());
  CHECK(v.certificate->zero_dimensional);
  CHECK(is_zero_dimensional(v.certificate->leading, 7));
  P.certificate = *v.certificate;
  auto s = secondary_data(P, G, molien_series(G, 28));
  CHECK(s.count == 12);
  CHECK(s.degrees.front() == 0);
  CHECK(s.degrees.size() == 12);
  REQUIRE(s.g2_degree.has_value());
  CHECK(*s.g2_degree >= 2);
  // Round trip through the text format.
  CHECK(parse_primary_set(P.to_string(), 7).polys == P.polys);
}

TEST_CASE("verify_primary failures carry witnesses") {
  auto G = golden_frame_7t5();
  auto P = parse_primary_set(golden_text(), 7);

  auto dup = P.polys;
  dup[3] = dup[2];
  auto r = verify_primary(G, dup);
  REQUIRE_FALSE(r.accepted());
  CHECK(r.failure->kind == VerifyFailure::Kind::NotZeroDimensional);
  CHECK(r.failure->offending_degree > 0);
  CHECK(r.failure->missing_variable >= 1);

  auto moved = P.polys;
  moved[4] += parse_polynomial("x1^4", 7);
  r = verify_primary(G, moved);
  REQUIRE_FALSE(r.accepted());
  CHECK(r.failure->kind == VerifyFailure::Kind::NotInvariant);
  CHECK(r.failure->poly_index == 4);
  REQUIRE(r.failure->generator.has_value());
  CHECK(apply_permutation(*r.failure->generator, moved[4]) != moved[4]);

  auto inhom = P.polys;
  inhom[1] += power_sum(7, 1);
  r = verify_primary(G, inhom);
  REQUIRE_FALSE(r.accepted());
  CHECK(r.failure->kind == VerifyFailure::Kind::NotHomogeneous);
  CHECK(r.failure->poly_index == 1);

  auto few = P.polys;
  few.pop_back();
  r = verify_primary(G, few);
  REQUIRE_FALSE(r.accepted());
  CHECK(r.failure->kind == VerifyFailure::Kind::WrongCount);

  auto s2 = symmetric_group(2);
  r = verify_primary(s2, {parse_polynomial("x1 + x2", 2), parse_polynomial("x1 + x2", 2)});
  REQUIRE_FALSE(r.accepted());
  CHECK(r.failure->kind == VerifyFailure::Kind::NotZeroDimensional);
}

TEST_CASE("elementary symmetric sets verify under catalog-sized groups") {
  std::vector<PermGroup> gs = {gen(5, {"(1 2 3 4 5)"}), gen(5, {"(1 2 4 5 3)", "(2 3)(4 5)"}),
                               gen(4, {"(1 2 3 4)"}), gen(3, {"(1 2 3)"})};
  for (const auto& G : gs) CHECK(verify_primary(G, elementary(G.degree())).accepted());
}

TEST_CASE("parse_primary_set errors") {
  CHECK_THROWS_AS(parse_primary_set("x1 + x2\n", 2), ParseError);
  CHECK_THROWS_AS(parse_primary_set("degrees: 1 2\nx1 + x2\n", 2), ParseError);
  CHECK_THROWS_AS(parse_primary_set("degrees: 1 2\nx1 + x2\nx1\n", 2), ParseError);
  CHECK_THROWS_AS(parse_primary_set("degrees: 1\nx1\nx2\n", 2), ParseError);
}

TEST_CASE("find_primary_invariants") {
  auto s5 = find_primary_invariants(symmetric_group(5), {});
  CHECK(s5.degrees == DegreeVector{{1, 2, 3, 4, 5}});
  CHECK(s5.polys[1] == elementary_symmetric(5, 2));

  auto c5 = gen(5, {"(1 2 3 4 5)"});
  auto p = search(c5);
  CHECK(p.degrees == DegreeVector{{1, 2, 2, 3, 5}});
  CHECK(p.polys[0] == power_sum(5, 1));
  CHECK(p.certificate.zero_dimensional);
  CHECK(p.certificate.field == CoefficientField::Rational);
  CHECK(verify_primary(c5, p.polys).accepted());

  auto c3 = gen(3, {"(1 2 3)"});
  auto q = search(c3);
  CHECK(q.degrees == DegreeVector{{1, 2, 3}});
  auto sd = secondary_data(q, c3, molien_series(c3, 6));
  CHECK(sd.count == 2);
  CHECK(sd.g2_degree == 3);

  auto sn = secondary_data(s5, symmetric_group(5), molien_series(symmetric_group(5), 15));
  CHECK(sn.count == 1);
  CHECK_FALSE(sn.g2_degree.has_value());
}

TEST_CASE("search is deterministic") {
  auto G = gen(6, {"(1 2 3 4 5 6)"});
  auto a = search(G), b = search(G);
  CHECK(a.to_string() == b.to_string());
}

TEST_CASE("search budget is reported") {
  auto G = psl27();
  SearchConfig cfg;
  cfg.step_budget = 10;
  auto H = molien_series(G, 28);
  CHECK_THROWS_AS(find_primary_invariants(G, candidate_degree_vectors(G, H), cfg), BudgetExhausted);
}

TEST_CASE("prime certification") {
  auto G = gen(5, {"(1 2 3 4 5)"});
  SearchConfig cfg;
  cfg.certification = CoefficientField::Prime;
  auto p = find_primary_invariants(G, candidate_degree_vectors(G, molien_series(G, 15)), cfg);
  CHECK(p.certificate.field == CoefficientField::Prime);
  CHECK(verify_primary(G, p.polys).accepted());
}

TEST_CASE("grid oracle agrees with the Groebner verdict") {
  // Necessary condition only: accepted sets have no nonzero common grid root.
  std::vector<PermGroup> gs = {gen(3, {"(1 2 3)"}), symmetric_group(3), gen(4, {"(1 2 3 4)"}),
                               gen(4, {"(1 2)(3 4)", "(1 3)(2 4)"}), gen(4, {"(1 2 3 4)", "(1 3)"}),
                               gen(4, {"(1 2 3)", "(2 3 4)"})};
  for (const auto& G : gs) {
    const int n = G.degree();
    for (int d2 = 1; d2 <= 2; ++d2)
      for (const auto& f2 : invariant_basis(G, d2))
        for (const auto& f3 : invariant_basis(G, 3)) {
          std::vector<Polynomial> polys = {power_sum(n, 1), f2, f3};
          if (n == 4) polys.push_back(power_sum(n, 4));
          auto v = verify_primary(G, polys);
          if (v.accepted()) CHECK_FALSE(has_nonzero_grid_root(polys, n, 2));
          if (has_nonzero_grid_root(polys, n, 2)) CHECK_FALSE(v.accepted());
        }
  }
}
