#include <doctest.h>

#include <algorithm>
#include <set>

#include <invbound/errors.hpp>
#include <invbound/molien.hpp>
#include <invbound/perm_group.hpp>

using namespace invbound;

namespace {

PermGroup gen(int n, std::initializer_list<const char*> cycles) {
  std::vector<Permutation> g;
  for (auto c : cycles) g.push_back(parse_cycles(c, n));
  return group_closure(g, n);
}

std::vector<long long> as_ints(const MolienSeries& s) {
  std::vector<long long> v;
  for (const auto& c : s.coefficients) {
    REQUIRE(c.get_den() == 1);
    v.push_back(c.get_num().get_si());
  }
  return v;
}

long long binom(long long n, long long k) {
  long long r = 1;
  for (long long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace

TEST_CASE("molien_series closed forms") {
  CHECK(as_ints(molien_series(symmetric_group(2), 6)) == std::vector<long long>{1, 1, 2, 2, 3, 3, 4});
  CHECK(as_ints(molien_series(gen(3, {"(1 2 3)"}), 3)) == std::vector<long long>{1, 1, 2, 4});
  auto triv = as_ints(molien_series(group_closure({}, 4), 8));
  for (int j = 0; j <= 8; ++j) CHECK(triv[j] == binom(4 + j - 1, j));
  auto s = molien_series(gen(7, {"(1 2 3 4 5 6 7)", "(1 2)(3 6)"}), 10);
  CHECK(s.truncation() == 10);
  CHECK(s.coefficients[0] == 1);
  CHECK(s.coefficients[1] == 1);
  CHECK(s.to_string().rfind("1 1 ", 0) == 0);
}

TEST_CASE("degree vectors") {
  auto d = parse_degree_vector("1,2,2,3,5");
  CHECK(d.sum() == 13);
  CHECK(d.product() == 60);
  CHECK(d.lcm() == 30);
  CHECK(d.to_string() == "1,2,2,3,5");
  CHECK(parse_degree_vector("(1 2 3)") == DegreeVector{{1, 2, 3}});
  CHECK_THROWS_AS(parse_degree_vector("3,2"), ParseError);
  CHECK_THROWS_AS(parse_degree_vector(""), ParseError);
  CHECK_THROWS_AS(parse_degree_vector("1,x"), ParseError);
}

TEST_CASE("hilbert_numerator") {
  auto c3 = gen(3, {"(1 2 3)"});
  auto r = hilbert_numerator(molien_series(c3, 8), DegreeVector{{1, 2, 3}});
  REQUIRE(r.accepted());
  CHECK(r.numerator->coefficients == std::vector<Integer>{1, 0, 0, 1});
  CHECK(r.numerator->secondary_count == 2);
  CHECK(r.numerator->secondary_degrees() == std::vector<int>{0, 3});

  for (int n = 2; n <= 6; ++n) {
    DegreeVector e;
    for (int i = 1; i <= n; ++i) e.degrees.push_back(i);
    auto s = hilbert_numerator(molien_series(symmetric_group(n), n * (n + 1) / 2), e);
    REQUIRE(s.accepted());
    CHECK(s.numerator->secondary_count == 1);
    // Padded to the degree bound sum(d) - n.
    const auto& c = s.numerator->coefficients;
    CHECK(static_cast<int>(c.size()) == n * (n + 1) / 2 - n + 1);
    CHECK(c.front() == 1);
    CHECK(std::all_of(c.begin() + 1, c.end(), [](const Integer& x) { return x == 0; }));
  }

  auto c5 = gen(5, {"(1 2 3 4 5)"});
  auto h = hilbert_numerator(molien_series(c5, 15), DegreeVector{{1, 2, 2, 3, 5}});
  REQUIRE(h.accepted());
  CHECK(h.numerator->secondary_count == 12);
  Integer sum = 0;
  for (const auto& c : h.numerator->coefficients) {
    CHECK(c >= 0);
    sum += c;
  }
  CHECK(sum == 12);

  auto bad = hilbert_numerator(molien_series(c3, 8), DegreeVector{{1, 1, 3}});
  CHECK_FALSE(bad.accepted());
  CHECK(bad.offending_degree >= 0);
  CHECK_THROWS_AS(hilbert_numerator(molien_series(c5, 4), DegreeVector{{1, 2, 2, 3, 5}}), PrecisionError);
}

TEST_CASE("candidate_degree_vectors") {
  auto s5 = symmetric_group(5);
  auto c = candidate_degree_vectors(s5, molien_series(s5, 15));
  REQUIRE(!c.empty());
  CHECK(c.front() == DegreeVector{{1, 2, 3, 4, 5}});

  auto c5 = gen(5, {"(1 2 3 4 5)"});
  auto v = candidate_degree_vectors(c5, molien_series(c5, 15));
  CHECK(v.front() == DegreeVector{{1, 2, 2, 3, 5}});

  auto psl = gen(7, {"(1 2 3 4 5 6 7)", "(1 2)(3 6)"});
  auto w = candidate_degree_vectors(psl, molien_series(psl, 28));
  CHECK(std::find(w.begin(), w.end(), DegreeVector{{1, 2, 3, 3, 4, 4, 7}}) != w.end());

  // Sum-then-lex order, and every vector passes the divisibility filters.
  for (std::size_t i = 1; i < w.size(); ++i) {
    CHECK(w[i - 1].sum() <= w[i].sum());
    if (w[i - 1].sum() == w[i].sum()) CHECK(w[i - 1] < w[i]);
  }
  for (const auto& d : w) {
    CHECK(d.product() % 168 == 0);
    CHECK(d.lcm() % group_exponent(psl) == 0);
    for (int i = 0; i < d.size(); ++i) CHECK(d.degrees[i] <= i + 1);
  }
  // A short series is extended rather than failing.
  auto short_series = candidate_degree_vectors(psl, molien_series(psl, 3));
  CHECK(short_series == w);
  CHECK(candidate_degree_vectors(psl, molien_series(psl, 28), 2).size() == 2);

  CHECK_THROWS_AS(candidate_degree_vectors(gen(4, {"(1 2)"}), molien_series(gen(4, {"(1 2)"}), 10)), DomainError);

  auto byp = order_by_product(w);
  for (std::size_t i = 1; i < byp.size(); ++i) CHECK(byp[i - 1].product() <= byp[i].product());
}

TEST_CASE("elementary vector always accepted") {
  std::vector<PermGroup> gs = {gen(4, {"(1 2 3 4)"}), gen(5, {"(1 2 3 4 5)", "(2 5)(3 4)"}),
                               gen(6, {"(1 2 3 4 5 6)"}), gen(6, {"(1 3 5)(2 4 6)", "(1 3 6)(2 4 5)"})};
  for (const auto& G : gs) {
    DegreeVector e;
    for (int i = 1; i <= G.degree(); ++i) e.degrees.push_back(i);
    auto v = evaluate_degree_vectors(G, molien_series(G, 30));
    bool found = false;
    for (const auto& x : v)
      if (x.degrees == e) found = x.accepted;
    CHECK(found);
  }
}
