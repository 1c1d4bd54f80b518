#include "invbound/invariants.hpp"

#include <algorithm>
#include <random>
#include <sstream>
#include <unordered_set>

#include "invbound/errors.hpp"

namespace invbound {

std::string PrimarySet::to_string() const {
  std::ostringstream out;
  out << "degrees:";
  for (int d : degrees.degrees) out << ' ' << d;
  out << '\n';
  for (const auto& f : polys) out << f.to_string() << '\n';
  return out.str();
}

PrimarySet parse_primary_set(const std::string& text, int nvars) {
  PrimarySet result;
  std::istringstream in(text);
  std::string line;
  bool header = false;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    if (!header) {
      const std::string tag = "degrees:";
      auto start = line.find_first_not_of(" \t");
      if (line.compare(start, tag.size(), tag) != 0) throw ParseError("expected \"degrees:\" header", line_no);
      std::istringstream ds(line.substr(start + tag.size()));
      int d;
      while (ds >> d) result.degrees.degrees.push_back(d);
      if (!ds.eof() || result.degrees.degrees.empty()) throw ParseError("malformed degree list", line_no);
      header = true;
      continue;
    }
    Polynomial f = parse_polynomial(line, nvars);
    const std::size_t k = result.polys.size();
    if (k >= result.degrees.degrees.size()) throw ParseError("more polynomials than listed degrees", line_no);
    if (f.total_degree() != result.degrees.degrees[k])
      throw ParseError("polynomial " + std::to_string(k + 1) + " has degree " + std::to_string(f.total_degree()) +
                           ", header says " + std::to_string(result.degrees.degrees[k]),
                       line_no);
    result.polys.push_back(std::move(f));
  }
  if (!header) throw ParseError("missing \"degrees:\" header", line_no);
  if (result.polys.size() != result.degrees.degrees.size())
    throw ParseError("header lists " + std::to_string(result.degrees.degrees.size()) + " degrees but " +
                         std::to_string(result.polys.size()) + " polynomials follow",
                     line_no);
  return result;
}

namespace {

std::optional<VerifyFailure> check_shape(const PermGroup& group, const std::vector<Polynomial>& polys) {
  const int n = group.degree();
  if (static_cast<int>(polys.size()) != n) {
    VerifyFailure f;
    f.kind = VerifyFailure::Kind::WrongCount;
    f.message = "expected " + std::to_string(n) + " polynomials, got " + std::to_string(polys.size());
    return f;
  }
  for (std::size_t i = 0; i < polys.size(); ++i) {
    if (polys[i].nvars() != n) {
      VerifyFailure f;
      f.kind = VerifyFailure::Kind::WrongCount;
      f.poly_index = static_cast<int>(i);
      f.message = "polynomial " + std::to_string(i + 1) + " is not in " + std::to_string(n) + " variables";
      return f;
    }
    if (!polys[i].is_homogeneous()) {
      VerifyFailure f;
      f.kind = VerifyFailure::Kind::NotHomogeneous;
      f.poly_index = static_cast<int>(i);
      f.message = "polynomial " + std::to_string(i + 1) + " is not homogeneous";
      return f;
    }
  }
  for (std::size_t i = 0; i < polys.size(); ++i)
    for (const auto& g : group.generators())
      if (apply_permutation(g, polys[i]) != polys[i]) {
        VerifyFailure f;
        f.kind = VerifyFailure::Kind::NotInvariant;
        f.poly_index = static_cast<int>(i);
        f.generator = g;
        f.message = "polynomial " + std::to_string(i + 1) + " is moved by " + g.to_string();
        return f;
      }
  return std::nullopt;
}

Certificate make_certificate(ZeroDimCheck check) {
  Certificate c;
  c.homogeneous = true;
  c.invariant = true;
  c.zero_dimensional = check.zero_dimensional;
  c.leading = std::move(check.leading);
  c.basis = std::move(check.basis);
  c.field = check.field;
  c.stats = check.stats;
  return c;
}

VerifyFailure zero_dim_failure(const ZeroDimCheck& check) {
  VerifyFailure f;
  f.kind = VerifyFailure::Kind::NotZeroDimensional;
  f.offending_degree = check.excess_degree;
  f.missing_variable = check.missing_variable;
  std::ostringstream msg;
  msg << "ideal is not zero-dimensional";
  if (check.missing_variable > 0) msg << ": no pure power of x" << check.missing_variable << " among leading monomials";
  if (check.excess_degree >= 0) msg << " (quotient too large in degree " << check.excess_degree << ")";
  f.message = msg.str();
  return f;
}

}  // namespace

Verification verify_primary(const PermGroup& group, const std::vector<Polynomial>& polys,
                            const GroebnerOptions& options) {
  Verification v;
  if (auto failure = check_shape(group, polys)) {
    v.failure = std::move(failure);
    return v;
  }
  ZeroDimCheck check = homogeneous_zero_dimensional(polys, options);
  if (!check.zero_dimensional) {
    v.failure = zero_dim_failure(check);
    return v;
  }
  v.certificate = make_certificate(std::move(check));
  return v;
}

std::vector<Polynomial> invariant_basis(const PermGroup& group, int d) {
  if (d < 1) throw DomainError("invariant_basis needs d >= 1");
  const int n = group.degree();
  std::vector<Polynomial> basis;
  std::unordered_set<Monomial, MonomialHash> done;
  for (const auto& m : monomials_of_degree(n, d)) {
    if (done.count(m)) continue;
    auto orbit = monomial_orbit(group, m);
    std::vector<Polynomial::Term> terms;
    terms.reserve(orbit.size());
    for (const auto& o : orbit) {
      done.insert(o);
      terms.emplace_back(o, Rational(1));
    }
    basis.emplace_back(n, std::move(terms));
  }
  return basis;
}

namespace {

bool is_full_symmetric_group(const PermGroup& group) {
  std::size_t f = 1;
  for (int k = 2; k <= group.degree(); ++k) f *= static_cast<std::size_t>(k);
  return group.order() == f;
}

// Invariants of one degree that the search chooses together.
struct DegreeSlot {
  int degree;
  int count;
  std::vector<Polynomial> basis;
  std::vector<int> pick;  // ascending indices into basis

  bool forced() const { return static_cast<int>(basis.size()) == count; }
  void reset() {
    pick.resize(count);
    for (int i = 0; i < count; ++i) pick[i] = i;
  }
  bool advance() {
    const int b = static_cast<int>(basis.size());
    for (int i = count - 1; i >= 0; --i) {
      if (pick[i] < b - count + i) {
        ++pick[i];
        for (int j = i + 1; j < count; ++j) pick[j] = pick[j - 1] + 1;
        return true;
      }
    }
    return false;
  }
};

class CandidateSearch {
 public:
  CandidateSearch(const PermGroup& group, const DegreeVector& degrees, const SearchConfig& config)
      : group_(group), degrees_(degrees), config_(config), remaining_(config.step_budget) {
    for (int d : degrees.degrees) {
      if (!slots_.empty() && slots_.back().degree == d) {
        ++slots_.back().count;
        continue;
      }
      slots_.push_back({d, 1, invariant_basis(group, d), {}});
    }
    std::vector<std::uint64_t> material{config.seed};
    for (int d : degrees.degrees) material.push_back(static_cast<std::uint64_t>(d));
    std::seed_seq seq(material.begin(), material.end());
    rng_.seed(seq);
  }

  std::optional<PrimarySet> run() {
    for (const auto& s : slots_)
      if (static_cast<int>(s.basis.size()) < s.count) return std::nullopt;
    if (auto found = orbit_sum_phase()) return found;
    return combination_phase();
  }

 private:
  std::vector<Polynomial> assemble_picks() const {
    std::vector<Polynomial> polys;
    for (const auto& s : slots_)
      for (int i : s.pick) polys.push_back(s.basis[i]);
    return polys;
  }

  ZeroDimCheck check(const std::vector<Polynomial>& polys, CoefficientField field) {
    GroebnerOptions options;
    options.field = field;
    options.step_budget = remaining_;
    options.deadline = config_.deadline;
    ZeroDimCheck result;
    try {
      result = homogeneous_zero_dimensional(polys, options);
    } catch (const BudgetExhausted& e) {
      throw BudgetExhausted("candidate degrees (" + degrees_.to_string() + "): " + e.what());
    }
    remaining_ -= std::min(remaining_, result.stats.reduction_steps);
    return result;
  }

  PrimarySet accept(std::vector<Polynomial> polys, ZeroDimCheck result) {
    if (auto failure = check_shape(group_, polys)) throw InternalInconsistency("search produced " + failure->message);
    if (result.field != config_.certification) {
      result = check(polys, config_.certification);
      if (!result.zero_dimensional)
        throw InternalInconsistency("selection for (" + degrees_.to_string() + ") accepted mod p but rejected over Q");
    }
    PrimarySet set;
    set.polys = std::move(polys);
    set.degrees = degrees_;
    set.certificate = make_certificate(std::move(result));
    return set;
  }

  // Plain orbit sums, enumerated like an odometer over the slots. A rejection
  // whose quotient first grows too large in degree E only involves slots of
  // degree <= E, so the highest such slot is the one advanced.
  std::optional<PrimarySet> orbit_sum_phase() {
    for (auto& s : slots_) s.reset();
    for (int attempt = 0; attempt < config_.orbit_attempts; ++attempt) {
      auto polys = assemble_picks();
      ZeroDimCheck result = check(polys, config_.screening);
      if (result.zero_dimensional) return accept(std::move(polys), std::move(result));
      int culprit = static_cast<int>(slots_.size()) - 1;
      if (result.excess_degree >= 0)
        while (culprit >= 0 && slots_[culprit].degree > result.excess_degree) --culprit;
      bool moved = false;
      for (int k = culprit; k >= 0 && !moved; --k) {
        if (slots_[k].advance()) {
          moved = true;
        } else {
          slots_[k].reset();
        }
        if (moved)
          for (std::size_t j = k + 1; j < slots_.size(); ++j) slots_[j].reset();
      }
      if (!moved) return std::nullopt;
    }
    return std::nullopt;
  }

  Polynomial combination(const std::vector<Polynomial>& basis) {
    static constexpr int kCoefficients[] = {-2, -1, 1, 2};
    Polynomial f(group_.degree());
    for (const auto& b : basis) f += b * Rational(kCoefficients[rng_() % 4]);
    return f;
  }

  std::optional<PrimarySet> combination_phase() {
    for (int attempt = 0; attempt < config_.combination_attempts; ++attempt) {
      std::vector<Polynomial> polys;
      for (auto& s : slots_) {
        if (s.forced()) {
          for (const auto& b : s.basis) polys.push_back(b);
          continue;
        }
        for (int i = 0; i < s.count; ++i) polys.push_back(combination(s.basis));
      }
      ZeroDimCheck result = check(polys, config_.screening);
      if (result.zero_dimensional) return accept(std::move(polys), std::move(result));
    }
    return std::nullopt;
  }

  const PermGroup& group_;
  const DegreeVector& degrees_;
  const SearchConfig& config_;
  std::uint64_t remaining_;
  std::vector<DegreeSlot> slots_;
  std::mt19937_64 rng_;
};

PrimarySet elementary_symmetric_set(const PermGroup& group, const SearchConfig& config) {
  const int n = group.degree();
  std::vector<Polynomial> polys;
  DegreeVector degrees;
  for (int k = 1; k <= n; ++k) {
    polys.push_back(elementary_symmetric(n, k));
    degrees.degrees.push_back(k);
  }
  GroebnerOptions options;
  options.field = config.certification;
  options.step_budget = config.step_budget;
  options.deadline = config.deadline;
  Verification v;
  try {
    v = verify_primary(group, polys, options);
  } catch (const BudgetExhausted& e) {
    throw BudgetExhausted("candidate degrees (" + degrees.to_string() + "): " + e.what());
  }
  if (!v.accepted()) throw InternalInconsistency("elementary symmetric polynomials rejected: " + v.failure->message);
  return PrimarySet{std::move(polys), std::move(degrees), std::move(*v.certificate)};
}

}  // namespace

PrimarySet find_primary_invariants(const PermGroup& group, const std::vector<DegreeVector>& candidates,
                                   const SearchConfig& config) {
  if (is_full_symmetric_group(group)) return elementary_symmetric_set(group, config);
  for (const auto& d : candidates) {
    if (d.size() != group.degree()) throw DomainError("candidate " + d.to_string() + " has the wrong length");
    if (auto found = CandidateSearch(group, d, config).run()) return std::move(*found);
  }
  return elementary_symmetric_set(group, config);
}

SecondaryData secondary_data(const PrimarySet& primary, const PermGroup& group, const MolienSeries& series) {
  NumeratorCheck check;
  try {
    check = hilbert_numerator(series, primary.degrees);
  } catch (const PrecisionError& e) {
    check = hilbert_numerator(molien_series(group, static_cast<int>(e.required())), primary.degrees);
  }
  if (!check.accepted())
    throw InternalInconsistency("Hilbert numerator rejected for verified degrees " + primary.degrees.to_string() +
                                ": " + check.reason);
  SecondaryData data;
  data.count = check.numerator->secondary_count;
  data.degrees = check.numerator->secondary_degrees();
  if (data.count >= 2) {
    data.g2_degree = data.degrees.at(1);
    // Degrees reachable as products of f2..fn.
    const int target = *data.g2_degree;
    std::vector<bool> reach(target + 1, false);
    reach[0] = true;
    for (std::size_t i = 1; i < primary.degrees.degrees.size(); ++i) {
      const int d = primary.degrees.degrees[i];
      if (d <= 0) continue;
      for (int s = d; s <= target; ++s)
        if (reach[s - d]) reach[s] = true;
    }
    data.g2_degree_matches_primary_product = reach[target];
  }
  return data;
}

}  // namespace invbound
