#include "invbound/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

#include "invbound/errors.hpp"

namespace invbound {

Monomial Monomial::from_exponents(const std::vector<int>& e) {
  if (e.size() > static_cast<std::size_t>(kMaxVars)) throw DomainError("too many variables");
  Monomial m;
  int deg = 0;
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (e[i] < 0 || e[i] > 255) throw DomainError("exponent out of range");
    m.exps[i] = static_cast<std::uint8_t>(e[i]);
    deg += e[i];
  }
  m.deg = static_cast<std::uint16_t>(deg);
  return m;
}

Monomial Monomial::variable(int index0, int power) {
  Monomial m;
  m.exps[index0] = static_cast<std::uint8_t>(power);
  m.deg = static_cast<std::uint16_t>(power);
  return m;
}

bool Monomial::is_pure_power_of(int& var) const noexcept {
  int found = -1;
  for (int i = 0; i < kMaxVars; ++i) {
    if (exps[i] == 0) continue;
    if (found >= 0) return false;
    found = i;
  }
  if (found < 0) return false;
  var = found;
  return true;
}

Monomial lcm(const Monomial& a, const Monomial& b) {
  Monomial m;
  int deg = 0;
  for (int i = 0; i < kMaxVars; ++i) {
    m.exps[i] = std::max(a.exps[i], b.exps[i]);
    deg += m.exps[i];
  }
  m.deg = static_cast<std::uint16_t>(deg);
  return m;
}

std::size_t MonomialHash::operator()(const Monomial& m) const noexcept {
  std::size_t h = 1469598103934665603ull;
  for (auto b : m.exps) {
    h ^= b;
    h *= 1099511628211ull;
  }
  return h;
}

int compare_slow(const Monomial& a, const Monomial& b, MonomialOrder order) noexcept {
  if (order == MonomialOrder::Grevlex) {
    if (a.deg != b.deg) return a.deg > b.deg ? 1 : -1;
    for (int i = kMaxVars - 1; i >= 0; --i)
      if (a.exps[i] != b.exps[i]) return a.exps[i] < b.exps[i] ? 1 : -1;
    return 0;
  }
  for (int i = 0; i < kMaxVars; ++i)
    if (a.exps[i] != b.exps[i]) return a.exps[i] > b.exps[i] ? 1 : -1;
  return 0;
}

std::vector<Monomial> monomials_of_degree(int nvars, int d) {
  std::vector<Monomial> out;
  std::vector<int> e(nvars, 0);
  // Recursive fill of the exponent vector.
  auto rec = [&](auto&& self, int var, int left) -> void {
    if (var == nvars - 1) {
      e[var] = left;
      out.push_back(Monomial::from_exponents(e));
      return;
    }
    for (int k = left; k >= 0; --k) {
      e[var] = k;
      self(self, var + 1, left - k);
    }
  };
  if (nvars > 0) rec(rec, 0, d);
  std::sort(out.begin(), out.end(), [](const Monomial& a, const Monomial& b) {
    return compare(a, b, MonomialOrder::Grevlex) > 0;
  });
  return out;
}

Polynomial::Polynomial(int nvars, std::vector<Term> terms) : nvars_(nvars), terms_(std::move(terms)) {
  normalize();
}

Polynomial Polynomial::constant(int nvars, const Rational& c) {
  return Polynomial(nvars, {{Monomial{}, c}});
}

Polynomial Polynomial::variable(int nvars, int index1) {
  if (index1 < 1 || index1 > nvars) throw DomainError("variable index out of range");
  return Polynomial(nvars, {{Monomial::variable(index1 - 1), Rational(1)}});
}

Polynomial Polynomial::monomial(int nvars, const Monomial& m, const Rational& c) {
  return Polynomial(nvars, {{m, c}});
}

void Polynomial::normalize() {
  if (nvars_ < 0 || nvars_ > kMaxVars) throw DomainError("unsupported number of variables");
  std::sort(terms_.begin(), terms_.end(), [](const Term& a, const Term& b) {
    return compare(a.first, b.first, MonomialOrder::Grevlex) > 0;
  });
  std::vector<Term> merged;
  merged.reserve(terms_.size());
  for (auto& t : terms_) {
    if (!merged.empty() && merged.back().first == t.first)
      merged.back().second += t.second;
    else
      merged.push_back(std::move(t));
  }
  std::erase_if(merged, [](const Term& t) { return sgn(t.second) == 0; });
  terms_ = std::move(merged);
}

int Polynomial::total_degree() const noexcept { return terms_.empty() ? -1 : terms_.front().first.degree(); }

bool Polynomial::is_homogeneous() const noexcept {
  if (terms_.empty()) return true;
  const int d = terms_.front().first.degree();
  return std::all_of(terms_.begin(), terms_.end(), [d](const Term& t) { return t.first.degree() == d; });
}

Rational Polynomial::coefficient(const Monomial& m) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), m, [](const Term& t, const Monomial& key) {
    return compare(t.first, key, MonomialOrder::Grevlex) > 0;
  });
  if (it != terms_.end() && it->first == m) return it->second;
  return 0;
}

namespace {

std::vector<Polynomial::Term> merge_terms(const std::vector<Polynomial::Term>& a,
                                          const std::vector<Polynomial::Term>& b, int sign) {
  std::vector<Polynomial::Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    const int c = i == a.size()   ? -1
                  : j == b.size() ? 1
                                  : compare(a[i].first, b[j].first, MonomialOrder::Grevlex);
    if (c > 0) {
      out.push_back(a[i++]);
    } else if (c < 0) {
      out.emplace_back(b[j].first, sign > 0 ? b[j].second : Rational(-b[j].second));
      ++j;
    } else {
      Rational s = sign > 0 ? Rational(a[i].second + b[j].second) : Rational(a[i].second - b[j].second);
      if (sgn(s) != 0) out.emplace_back(a[i].first, std::move(s));
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

Polynomial& Polynomial::operator+=(const Polynomial& other) {
  if (nvars_ != other.nvars_) throw DomainError("adding polynomials in different rings");
  terms_ = merge_terms(terms_, other.terms_, 1);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
  if (nvars_ != other.nvars_) throw DomainError("subtracting polynomials in different rings");
  terms_ = merge_terms(terms_, other.terms_, -1);
  return *this;
}

Polynomial& Polynomial::operator*=(const Rational& c) {
  if (sgn(c) == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& t : terms_) t.second *= c;
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.nvars_ != b.nvars_) throw DomainError("multiplying polynomials in different rings");
  std::unordered_map<Monomial, Rational, MonomialHash> acc;
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) acc[ma * mb] += ca * cb;
  std::vector<Polynomial::Term> terms(acc.begin(), acc.end());
  return Polynomial(a.nvars_, std::move(terms));
}

bool operator==(const Polynomial& a, const Polynomial& b) {
  return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    const bool negative = sgn(c) < 0;
    const Rational mag = abs(c);
    if (first)
      os << (negative ? "-" : "");
    else
      os << (negative ? " - " : " + ");
    first = false;
    bool wrote = false;
    if (m.degree() == 0 || mag != 1) {
      os << mag.get_str();
      wrote = true;
    }
    for (int i = 0; i < nvars_; ++i) {
      if (m.exps[i] == 0) continue;
      if (wrote) os << '*';
      os << 'x' << (i + 1);
      if (m.exps[i] > 1) os << '^' << static_cast<int>(m.exps[i]);
      wrote = true;
    }
  }
  return os.str();
}

Polynomial parse_polynomial(std::string_view text, int nvars) {
  if (nvars < 1 || nvars > kMaxVars) throw DomainError("unsupported number of variables");
  std::size_t pos = 0;
  auto skip = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  auto read_uint = [&](std::string& digits) {
    const std::size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos == start) throw ParseError("expected digits", start);
    digits.assign(text.substr(start, pos - start));
  };

  std::vector<Polynomial::Term> terms;
  skip();
  if (pos == text.size()) throw ParseError("empty polynomial", pos);
  bool first = true;
  while (true) {
    skip();
    if (pos == text.size()) break;
    int sign = 1;
    if (text[pos] == '+' || text[pos] == '-') {
      sign = text[pos] == '-' ? -1 : 1;
      ++pos;
      skip();
    } else if (!first) {
      throw ParseError("expected '+' or '-'", pos);
    }
    first = false;

    Rational coeff(sign);
    std::vector<int> exps(nvars, 0);
    bool any_factor = false;
    while (true) {
      skip();
      if (pos >= text.size()) throw ParseError("expected a factor", pos);
      if (std::isdigit(static_cast<unsigned char>(text[pos]))) {
        std::string num, den = "1";
        read_uint(num);
        if (pos < text.size() && text[pos] == '/') {
          ++pos;
          read_uint(den);
          if (den.find_first_not_of('0') == std::string::npos) throw ParseError("zero denominator", pos);
        }
        Rational value{Integer(num), Integer(den)};
        value.canonicalize();
        coeff *= value;
      } else if (text[pos] == 'x') {
        const std::size_t at = pos;
        ++pos;
        std::string idx;
        read_uint(idx);
        const long var = std::stol(idx);
        if (var < 1 || var > nvars)
          throw ParseError("variable x" + idx + " outside x1..x" + std::to_string(nvars), at);
        int power = 1;
        if (pos < text.size() && text[pos] == '^') {
          ++pos;
          std::string p;
          read_uint(p);
          power = std::stoi(p);
        }
        exps[var - 1] += power;
      } else {
        throw ParseError(std::string("unexpected character '") + text[pos] + "'", pos);
      }
      any_factor = true;
      skip();
      if (pos < text.size() && text[pos] == '*') {
        ++pos;
        continue;
      }
      break;
    }
    if (!any_factor) throw ParseError("empty term", pos);
    terms.emplace_back(Monomial::from_exponents(exps), coeff);
  }
  return Polynomial(nvars, std::move(terms));
}

Polynomial power_sum(int nvars, int d) {
  std::vector<Polynomial::Term> terms;
  for (int i = 0; i < nvars; ++i) terms.emplace_back(Monomial::variable(i, d), Rational(1));
  return Polynomial(nvars, std::move(terms));
}

Polynomial elementary_symmetric(int nvars, int k) {
  std::vector<Polynomial::Term> terms;
  std::vector<int> pick(nvars, 0);
  std::fill(pick.end() - k, pick.end(), 1);
  do {
    terms.emplace_back(Monomial::from_exponents(pick), Rational(1));
  } while (std::next_permutation(pick.begin(), pick.end()));
  return Polynomial(nvars, std::move(terms));
}

Monomial apply_permutation(const Permutation& g, const Monomial& m) {
  Monomial out;
  const auto& img = g.raw();
  for (std::size_t i = 0; i < img.size(); ++i) out.exps[img[i]] = m.exps[i];
  out.deg = m.deg;
  return out;
}

Polynomial apply_permutation(const Permutation& g, const Polynomial& f) {
  if (g.degree() != f.nvars()) throw DomainError("permutation degree does not match the polynomial ring");
  std::vector<Polynomial::Term> terms;
  terms.reserve(f.size());
  for (const auto& [m, c] : f.terms()) terms.emplace_back(apply_permutation(g, m), c);
  return Polynomial(f.nvars(), std::move(terms));
}

std::vector<Monomial> monomial_orbit(const PermGroup& group, const Monomial& m) {
  std::unordered_set<Monomial, MonomialHash> seen{m};
  std::vector<Monomial> out{m};
  for (std::size_t i = 0; i < out.size(); ++i) {
    for (const auto& g : group.generators()) {
      Monomial next = apply_permutation(g, out[i]);
      if (seen.insert(next).second) out.push_back(next);
    }
  }
  std::sort(out.begin(), out.end(), [](const Monomial& a, const Monomial& b) {
    return compare(a, b, MonomialOrder::Grevlex) > 0;
  });
  return out;
}

Polynomial orbit_sum(const PermGroup& group, const Monomial& m) {
  std::vector<Polynomial::Term> terms;
  for (const auto& x : monomial_orbit(group, m)) terms.emplace_back(x, Rational(1));
  return Polynomial(group.degree(), std::move(terms));
}

bool is_invariant(const std::vector<Permutation>& generators, const Polynomial& f) {
  return std::all_of(generators.begin(), generators.end(),
                     [&f](const Permutation& g) { return apply_permutation(g, f) == f; });
}

}  // namespace invbound
