#include "invbound/bounds.hpp"

#include <numeric>
#include <sstream>

#include "invbound/errors.hpp"

namespace invbound {

BaseFieldDegree::BaseFieldDegree(int degree) : l(degree) {
  if (degree < 1) throw DomainError("base field degree must be at least 1");
}

Rational schmidt_exponent(int n) {
  if (n < 2) throw DomainError("schmidt_exponent needs n >= 2");
  Rational r(n + 2, 4);
  r.canonicalize();
  return r;
}

namespace {

Integer tail_sum(int n, int t, const DegreeVector& d) {
  if (t < 1 || t >= n) throw DomainError("need 1 <= t < n, got t = " + std::to_string(t));
  if (static_cast<int>(d.degrees.size()) != n || d.degrees.front() != 1)
    throw DomainError("degree vector must have length " + std::to_string(n) + " and start with 1");
  Integer s = 0;
  for (std::size_t i = 1; i < d.degrees.size(); ++i) s += d.degrees[i];
  return s;
}

Rational over_2_n_minus_t(Rational x, int n, int t) {
  x /= Rational(2 * (n - t));
  x.canonicalize();
  return x;
}

bool is_symmetric(const PermGroup& group) {
  Integer f = 1;
  for (int k = 2; k <= group.degree(); ++k) f *= k;
  return Integer(static_cast<unsigned long>(group.order())) == f;
}

}  // namespace

Rational theorem_exponent(int n, int t, const DegreeVector& d, BaseFieldDegree l) {
  Rational x(tail_sum(n, t, d));
  x -= Rational(1, l.l);
  return over_2_n_minus_t(x, n, t);
}

Rational schmidt_recovery_exponent(int n, int t, const DegreeVector& d) {
  return over_2_n_minus_t(Rational(tail_sum(n, t, d)), n, t);
}

Rational tabulated_base_field_exponent(const Rational& result_over_q, BaseFieldDegree l) {
  Rational r = result_over_q + 1 - Rational(1, l.l);
  r.canonicalize();
  return r;
}

Rational malle_exponent(const PermGroup& group) {
  Rational r(1, group_index(group));
  r.canonicalize();
  return r;
}

std::string format_power(const Rational& r) { return "X^{" + r.get_str() + "}"; }

std::string BoundReport::subfield() const { return t == 1 ? "none" : "Deg. " + std::to_string(t); }

std::optional<Rational> BoundReport::tabulated_alternative() const {
  if (!result || no_secondary_invariant) return std::nullopt;
  return tabulated_base_field_exponent(theorem_exponent(n, t, *degrees), BaseFieldDegree(l));
}

namespace {

const char* const kCsvColumns[] = {"label",    "n",       "order", "t",           "l",       "degrees",
                                   "result",   "malle_a", "malle_b", "schmidt",   "secondaries", "note"};
constexpr std::size_t kCsvWidth = std::size(kCsvColumns);

std::string degrees_field(const std::optional<DegreeVector>& d) {
  if (!d) return {};
  std::string s;
  for (int x : d->degrees) s += (s.empty() ? "" : " ") + std::to_string(x);
  return s;
}

std::string note_field(const BoundReport& r) {
  if (r.no_secondary_invariant) return "no secondary invariant";
  if (!r.complete()) return "budget: " + r.budget_note;
  return {};
}

// Notes may contain commas or quotes; everything else is plain.
std::string quote(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char c : s) {
    if (c == '"') q += '"';
    q += c;
  }
  return q + '"';
}

std::vector<std::string> split_csv(const std::string& row) {
  std::vector<std::string> fields(1);
  bool quoted = false;
  for (std::size_t i = 0; i < row.size(); ++i) {
    char c = row[i];
    if (quoted) {
      if (c == '"' && i + 1 < row.size() && row[i + 1] == '"') {
        fields.back() += '"';
        ++i;
      } else if (c == '"') {
        quoted = false;
      } else {
        fields.back() += c;
      }
    } else if (c == '"') {
      quoted = true;
    } else if (c == ',') {
      fields.emplace_back();
    } else if (c != '\r' && c != '\n') {
      fields.back() += c;
    }
  }
  if (quoted) throw ParseError("unterminated quote in CSV row", row.size());
  return fields;
}

Rational parse_rational(const std::string& s, std::size_t column) {
  try {
    Rational r(s);
    r.canonicalize();
    return r;
  } catch (const std::invalid_argument&) {
    throw ParseError("bad rational \"" + s + "\"", column);
  }
}

Integer parse_integer(const std::string& s, std::size_t column) {
  try {
    return Integer(s);
  } catch (const std::invalid_argument&) {
    throw ParseError("bad integer \"" + s + "\"", column);
  }
}

int parse_int(const std::string& s, std::size_t column) {
  Integer z = parse_integer(s, column);
  if (!z.fits_sint_p()) throw ParseError("integer out of range", column);
  return static_cast<int>(z.get_si());
}

}  // namespace

std::string BoundReport::csv_header() {
  std::string h;
  for (std::size_t i = 0; i < kCsvWidth; ++i) h += (i ? "," : "") + std::string(kCsvColumns[i]);
  return h;
}

std::string BoundReport::to_csv() const {
  std::ostringstream out;
  out << quote(label) << ',' << n << ',' << order.get_str() << ',' << t << ',' << l << ','
      << degrees_field(degrees) << ',' << (result ? result->get_str() : "") << ',' << malle_a.get_str() << ','
      << malle_b_q << ',' << schmidt.get_str() << ',' << (secondary_count ? secondary_count->get_str() : "") << ','
      << quote(note_field(*this));
  return out.str();
}

BoundReport BoundReport::from_csv(const std::string& row) {
  auto f = split_csv(row);
  if (f.size() != kCsvWidth)
    throw ParseError("expected " + std::to_string(kCsvWidth) + " fields, got " + std::to_string(f.size()), 0);
  BoundReport r;
  r.label = f[0];
  r.n = parse_int(f[1], 1);
  r.order = parse_integer(f[2], 2);
  r.t = parse_int(f[3], 3);
  r.l = parse_int(f[4], 4);
  if (!f[5].empty()) r.degrees = parse_degree_vector(f[5]);
  if (!f[6].empty()) r.result = parse_rational(f[6], 6);
  r.malle_a = parse_rational(f[7], 7);
  r.malle_b_q = parse_int(f[8], 8);
  r.schmidt = parse_rational(f[9], 9);
  if (!f[10].empty()) r.secondary_count = parse_integer(f[10], 10);
  const std::string budget = "budget: ";
  if (f[11] == "no secondary invariant") {
    r.no_secondary_invariant = true;
  } else if (f[11].rfind(budget, 0) == 0) {
    r.budget_note = f[11].substr(budget.size());
  } else if (!f[11].empty()) {
    throw ParseError("unknown note \"" + f[11] + "\"", 11);
  }
  return r;
}

std::string BoundReport::markdown_header() {
  return "| # | Order | Subfield? | Invariant Degrees | Result | Malle | Schmidt |\n"
         "|---|---|---|---|---|---|---|";
}

std::string BoundReport::to_markdown() const {
  std::string degs = "budget", res = "budget";
  if (degrees) {
    degs.clear();
    for (int x : degrees->degrees) degs += (degs.empty() ? "" : ",") + std::to_string(x);
  }
  if (result) res = format_power(*result) + (no_secondary_invariant ? " (no secondary invariant)" : "");
  std::ostringstream out;
  out << "| " << label << " | " << order.get_str() << " | " << subfield() << " | " << degs << " | " << res << " | "
      << format_power(malle_a) << " | " << format_power(schmidt) << " |";
  return out.str();
}

BoundReport analyze_group(const PermGroup& group, BaseFieldDegree l, const AnalyzeConfig& config,
                          std::string label) {
  if (!is_transitive(group)) throw DomainError("group is not transitive");
  const int n = group.degree();
  if (n < 2) throw DomainError("need degree at least 2");

  BoundReport r;
  r.label = std::move(label);
  r.n = n;
  r.order = Integer(static_cast<unsigned long>(group.order()));
  r.t = t_value(group);
  r.l = l.l;
  r.schmidt = schmidt_exponent(n);
  r.malle_a = malle_exponent(group);
  r.malle_b_q = malle_b_Q(group);

  if (is_symmetric(group)) {
    DegreeVector d;
    d.degrees.resize(n);
    std::iota(d.degrees.begin(), d.degrees.end(), 1);
    r.degrees = d;
    r.result = schmidt_recovery_exponent(n, r.t, d);
    r.secondary_count = Integer(1);
    r.no_secondary_invariant = true;
    return r;
  }

  MolienSeries series = molien_series(group, config.truncation.value_or(default_truncation(n)));
  try {
    auto candidates = candidate_degree_vectors(group, series, config.max_candidates);
    PrimarySet primary = find_primary_invariants(group, candidates, config.search);
    SecondaryData secondary = secondary_data(primary, group, series);
    r.degrees = primary.degrees;
    r.secondary_count = secondary.count;
    r.result = theorem_exponent(n, r.t, primary.degrees, l);
  } catch (const BudgetExhausted& e) {
    r.budget_note = e.what();
  }
  return r;
}

}  // namespace invbound
