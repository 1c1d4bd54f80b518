#include <doctest.h>

#include <random>

#include <invbound/bounds.hpp>
#include <invbound/errors.hpp>

using namespace invbound;

namespace {

Rational Q(long p, long q = 1) {
  Rational r(p, q);
  r.canonicalize();
  return r;
}

PermGroup gen(int n, std::initializer_list<const char*> cycles) {
  std::vector<Permutation> g;
  for (auto c : cycles) g.push_back(parse_cycles(c, n));
  return group_closure(g, n);
}

DegreeVector iota(int n) {
  DegreeVector d;
  for (int i = 1; i <= n; ++i) d.degrees.push_back(i);
  return d;
}

}  // namespace

TEST_CASE("schmidt_exponent") {
  CHECK(schmidt_exponent(7) == Q(9, 4));
  CHECK(schmidt_exponent(2) == 1);
  CHECK(schmidt_exponent(6) == 2);
  CHECK_THROWS_AS(schmidt_exponent(1), DomainError);
}

TEST_CASE("theorem_exponent") {
  CHECK(theorem_exponent(7, 1, DegreeVector{{1, 2, 3, 3, 4, 4, 7}}) == Q(11, 6));
  CHECK(theorem_exponent(6, 3, DegreeVector{{1, 2, 2, 2, 3, 6}}) == Q(7, 3));
  CHECK(theorem_exponent(8, 1, DegreeVector{{1, 2, 3, 4, 4, 4, 6, 7}}) == Q(29, 14));
  CHECK(theorem_exponent(5, 1, iota(5), BaseFieldDegree(1)) == Q(13, 8));
  // Without the -1/l saving the elementary vector gives Schmidt.
  CHECK(schmidt_recovery_exponent(5, 1, iota(5)) == Q(7, 4));
  CHECK(schmidt_recovery_exponent(8, 1, iota(8)) == Q(5, 2));
  CHECK(schmidt_recovery_exponent(2, 1, iota(2)) == 1);
  CHECK_THROWS_AS(theorem_exponent(5, 5, iota(5)), DomainError);
  CHECK_THROWS_AS(theorem_exponent(5, 0, iota(5)), DomainError);
  CHECK_THROWS_AS(schmidt_recovery_exponent(4, 4, iota(4)), DomainError);
  CHECK_THROWS_AS(theorem_exponent(5, 1, iota(4)), DomainError);
  CHECK_THROWS_AS(BaseFieldDegree(0), DomainError);
}

TEST_CASE("base field variants") {
  auto d = DegreeVector{{1, 2, 3, 3, 4, 4, 7}};
  // l enters only through -1/l.
  CHECK(theorem_exponent(7, 1, d, BaseFieldDegree(2)) == Q(11, 6) + Q(1, 24));
  CHECK(tabulated_base_field_exponent(Q(11, 6), BaseFieldDegree(2)) == Q(11, 6) + Q(1, 2));
  CHECK(tabulated_base_field_exponent(Q(11, 6), BaseFieldDegree(1)) == Q(11, 6));
}

TEST_CASE("malle_exponent") {
  CHECK(malle_exponent(gen(7, {"(1 2 3 4 5 6 7)"})) == Q(1, 6));
  CHECK(malle_exponent(symmetric_group(5)) == 1);
  CHECK(malle_exponent(gen(8, {"(1 2)(3 4)(5 6)(7 8)", "(2 3 5 4 7 8 6)"})) == Q(1, 4));
  CHECK_THROWS_AS(malle_exponent(group_closure({}, 4)), DomainError);
}

TEST_CASE("exponent properties on random inputs") {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 2000; ++trial) {
    int n = 2 + static_cast<int>(rng() % 9);
    int t = 1 + static_cast<int>(rng() % (n - 1));
    DegreeVector d{{1}};
    for (int i = 2; i <= n; ++i) d.degrees.push_back(1 + static_cast<int>(rng() % i));
    std::sort(d.degrees.begin() + 1, d.degrees.end());
    CHECK(theorem_exponent(n, t, d) == schmidt_recovery_exponent(n, t, d) - Q(1, 2 * (n - t)));
    // Monotone in each degree and in t.
    for (int i = 1; i < n; ++i) {
      auto e = d;
      ++e.degrees[i];
      CHECK(theorem_exponent(n, t, e) > theorem_exponent(n, t, d));
    }
    if (t + 1 < n) CHECK(theorem_exponent(n, t + 1, d) > theorem_exponent(n, t, d));
  }
}

TEST_CASE("malle bound from index") {
  std::vector<PermGroup> gs = {symmetric_group(4), alternating_group(5), gen(6, {"(1 2 3 4 5 6)"}),
                               gen(5, {"(1 2 3 4 5)", "(1 2)"})};
  for (const auto& G : gs) {
    bool has_transposition = false;
    for (const auto& g : G.elements()) has_transposition |= element_index(g) == 1;
    CHECK(malle_exponent(G) <= 1);
    CHECK((malle_exponent(G) == 1) == has_transposition);
  }
}

TEST_CASE("analyze_group rows") {
  auto r = analyze_group(gen(7, {"(1 2 3 4 5 6 7)", "(1 2)(3 6)"}), {}, {}, "7T5");
  REQUIRE(r.complete());
  CHECK(r.order == 168);
  CHECK(r.subfield() == "none");
  CHECK(*r.degrees == DegreeVector{{1, 2, 3, 3, 4, 4, 7}});
  CHECK(*r.result == Q(11, 6));
  CHECK(r.malle_a == Q(1, 2));
  CHECK(r.schmidt == Q(9, 4));
  CHECK(*r.secondary_count == 12);
  CHECK(*r.result < r.schmidt);

  auto a5 = analyze_group(gen(6, {"(2 3 6 5 4)", "(1 2 3 5 4)"}));
  CHECK(*a5.degrees == DegreeVector{{1, 2, 3, 3, 4, 5}});
  CHECK(*a5.result == Q(8, 5));

  auto s4 = analyze_group(symmetric_group(4), {}, {}, "S4");
  CHECK(s4.no_secondary_invariant);
  CHECK(*s4.result == Q(3, 2));
  CHECK(*s4.secondary_count == 1);

  CHECK_THROWS_AS(analyze_group(gen(4, {"(1 2)"})), DomainError);

  AnalyzeConfig tiny;
  tiny.search.step_budget = 10;
  auto b = analyze_group(gen(7, {"(1 2 3 4 5 6 7)", "(1 2)(3 6)"}), {}, tiny, "7T5");
  CHECK_FALSE(b.complete());
  CHECK_FALSE(b.degrees.has_value());
  CHECK_FALSE(b.budget_note.empty());
}

TEST_CASE("report CSV round trip") {
  std::vector<BoundReport> reports;
  reports.push_back(analyze_group(gen(5, {"(1 2 3 4 5)"}), BaseFieldDegree(3), {}, "5T1"));
  reports.push_back(analyze_group(symmetric_group(3), {}, {}, "S3"));
  AnalyzeConfig tiny;
  tiny.search.step_budget = 10;
  reports.push_back(analyze_group(gen(7, {"(1 2 3 4 5 6 7)", "(1 2)(3 6)"}), {}, tiny, "odd, \"label\""));
  for (const auto& r : reports) {
    auto back = BoundReport::from_csv(r.to_csv());
    CHECK(back.to_csv() == r.to_csv());
    CHECK(back.result == r.result);
    CHECK(back.degrees == r.degrees);
    CHECK(back.malle_a == r.malle_a);
    CHECK(back.label == r.label);
  }
  CHECK(reports[0].result == Q(11, 8) + Q(1, 8) - Q(1, 24));
  CHECK(reports[0].tabulated_alternative() == Q(11, 8) + 1 - Q(1, 3));
  CHECK_THROWS_AS(BoundReport::from_csv("a,b"), ParseError);
  CHECK(reports[0].to_markdown() == "| 5T1 | 5 | none | 1,2,2,3,5 | X^{35/24} | X^{1/4} | X^{7/4} |");
}
