#include "invbound/molien.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

#include "invbound/errors.hpp"

namespace invbound {

std::string MolienSeries::to_string() const {
  std::ostringstream os;
  for (std::size_t k = 0; k < coefficients.size(); ++k) {
    if (coefficients[k].get_den() != 1) throw InternalInconsistency("Molien coefficient is not an integer");
    os << (k ? " " : "") << coefficients[k].get_num().get_str();
  }
  return os.str();
}

int DegreeVector::sum() const { return std::accumulate(degrees.begin(), degrees.end(), 0); }

Integer DegreeVector::product() const {
  Integer p = 1;
  for (int d : degrees) p *= d;
  return p;
}

long long DegreeVector::lcm() const {
  long long l = 1;
  for (int d : degrees) l = std::lcm(l, static_cast<long long>(d));
  return l;
}

std::string DegreeVector::to_string() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < degrees.size(); ++i) os << (i ? "," : "") << degrees[i];
  return os.str();
}

DegreeVector parse_degree_vector(const std::string& text) {
  DegreeVector d;
  std::size_t pos = 0;
  while (pos < text.size()) {
    while (pos < text.size() && (text[pos] == ',' || text[pos] == ' ' || text[pos] == '(' || text[pos] == ')')) ++pos;
    if (pos >= text.size()) break;
    const std::size_t start = pos;
    int v = 0;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) v = v * 10 + (text[pos++] - '0');
    if (pos == start) throw ParseError("expected a degree", pos);
    if (v < 1) throw ParseError("degrees must be positive", start);
    d.degrees.push_back(v);
  }
  if (d.degrees.empty()) throw ParseError("empty degree vector", 0);
  if (!std::is_sorted(d.degrees.begin(), d.degrees.end())) throw ParseError("degrees must be nondecreasing", 0);
  return d;
}

std::string HilbertNumerator::to_string() const {
  std::ostringstream os;
  for (std::size_t k = 0; k < coefficients.size(); ++k) os << (k ? " " : "") << coefficients[k].get_str();
  return os.str();
}

std::vector<int> HilbertNumerator::secondary_degrees() const {
  std::vector<int> out;
  for (std::size_t k = 0; k < coefficients.size(); ++k)
    for (Integer c = coefficients[k]; c > 0; --c) out.push_back(static_cast<int>(k));
  return out;
}

MolienSeries molien_series(const PermGroup& group, int truncation) {
  if (truncation < 1) throw DomainError("truncation order must be at least 1");
  std::map<std::vector<int>, long> cycle_types;
  for (const auto& g : group.elements()) ++cycle_types[g.cycle_type()];

  std::vector<Integer> total(truncation + 1, 0);
  std::vector<Integer> term(truncation + 1);
  for (const auto& [type, count] : cycle_types) {
    // prod over cycles of 1/(1 - t^c), the inverse of det(I - t g).
    std::fill(term.begin(), term.end(), 0);
    term[0] = 1;
    for (int c : type)
      for (int k = c; k <= truncation; ++k) term[k] += term[k - c];
    for (int k = 0; k <= truncation; ++k) total[k] += term[k] * count;
  }

  MolienSeries series;
  series.group_order = group.order();
  series.coefficients.reserve(truncation + 1);
  const Integer order(static_cast<unsigned long>(group.order()));
  for (const auto& t : total) {
    Rational a(t, order);
    a.canonicalize();
    series.coefficients.push_back(std::move(a));
  }
  return series;
}

int default_truncation(int n) { return n * (n + 1) / 2; }

NumeratorCheck hilbert_numerator(const MolienSeries& series, const DegreeVector& d) {
  const int N = series.truncation();
  const int sum = d.sum();
  if (N < sum)
    throw PrecisionError("series truncated at " + std::to_string(N) + " but the degree sum is " + std::to_string(sum),
                         sum);

  std::vector<Rational> num = series.coefficients;
  for (int deg : d.degrees)
    for (int k = N; k >= deg; --k) num[k] -= num[k - deg];

  NumeratorCheck check;
  const int top = sum - d.size();
  for (int k = 0; k <= N; ++k) {
    const Rational& c = num[k];
    std::string why;
    if (c.get_den() != 1)
      why = "non-integer coefficient";
    else if (k > top && sgn(c) != 0)
      why = "nonzero coefficient above degree " + std::to_string(top);
    else if (sgn(c) < 0)
      why = "negative coefficient";
    if (!why.empty()) {
      check.offending_degree = k;
      check.reason = why + " at t^" + std::to_string(k);
      return check;
    }
  }

  HilbertNumerator h;
  h.coefficients.reserve(top + 1);
  Integer total = 0;
  for (int k = 0; k <= top; ++k) {
    h.coefficients.push_back(num[k].get_num());
    total += num[k].get_num();
  }
  const Integer order(static_cast<unsigned long>(series.group_order));
  const Integer prod = d.product();
  if (prod % order != 0 || prod / order != total) {
    check.offending_degree = 0;
    check.reason = "numerator sum disagrees with prod(d)/|G|";
    return check;
  }
  h.secondary_count = total;
  check.numerator = std::move(h);
  return check;
}

namespace {

void enumerate(int n, std::vector<int>& current, std::vector<DegreeVector>& out) {
  const int i = static_cast<int>(current.size());
  if (i == n) {
    out.push_back({current});
    return;
  }
  const int lo = current.empty() ? 1 : current.back();
  const int hi = current.empty() ? 1 : i + 1;
  for (int d = lo; d <= hi; ++d) {
    current.push_back(d);
    enumerate(n, current, out);
    current.pop_back();
  }
}

bool sum_then_lex(const DegreeVector& a, const DegreeVector& b) {
  const int sa = a.sum(), sb = b.sum();
  if (sa != sb) return sa < sb;
  return a.degrees < b.degrees;
}

}  // namespace

std::vector<CandidateVerdict> evaluate_degree_vectors(const PermGroup& group, const MolienSeries& series) {
  if (!is_transitive(group)) throw DomainError("degree vectors are generated for transitive groups only");
  const int n = group.degree();
  MolienSeries local;
  const MolienSeries* h = &series;
  if (series.truncation() < default_truncation(n)) {
    int N = std::max(series.truncation(), 1);
    while (N < default_truncation(n)) N *= 2;
    local = molien_series(group, N);
    h = &local;
  }

  std::vector<DegreeVector> all;
  std::vector<int> current;
  enumerate(n, current, all);
  std::sort(all.begin(), all.end(), sum_then_lex);

  const Integer order(static_cast<unsigned long>(group.order()));
  const long long exponent = group_exponent(group);
  std::vector<CandidateVerdict> verdicts;
  verdicts.reserve(all.size());
  for (auto& d : all) {
    CandidateVerdict v{d, false, {}};
    if (d.product() % order != 0) {
      v.reason = "product not divisible by |G|";
    } else if (d.lcm() % exponent != 0) {
      v.reason = "lcm not divisible by the group exponent";
    } else {
      const NumeratorCheck check = hilbert_numerator(*h, d);
      if (check.accepted())
        v.accepted = true;
      else
        v.reason = check.reason;
    }
    verdicts.push_back(std::move(v));
  }
  return verdicts;
}

std::vector<DegreeVector> candidate_degree_vectors(const PermGroup& group, const MolienSeries& series,
                                                   std::size_t max_candidates) {
  std::vector<DegreeVector> out;
  for (const auto& v : evaluate_degree_vectors(group, series)) {
    if (!v.accepted) continue;
    out.push_back(v.degrees);
    if (out.size() >= max_candidates) break;
  }
  return out;
}

std::vector<DegreeVector> order_by_product(std::vector<DegreeVector> vectors) {
  std::stable_sort(vectors.begin(), vectors.end(), [](const DegreeVector& a, const DegreeVector& b) {
    const Integer pa = a.product(), pb = b.product();
    if (pa != pb) return pa < pb;
    return sum_then_lex(a, b);
  });
  return vectors;
}

}  // namespace invbound
