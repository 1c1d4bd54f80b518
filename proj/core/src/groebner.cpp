#include "invbound/groebner.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <unordered_set>

#include "invbound/errors.hpp"

namespace invbound {

namespace {

std::uint32_t divmask(const Monomial& m) {
  std::uint32_t mask = 0;
  for (int i = 0; i < kMaxVars; ++i)
    if (m.exps[i]) mask |= 1u << i;
  return mask;
}

bool coprime(const Monomial& a, const Monomial& b) {
  for (int i = 0; i < kMaxVars; ++i)
    if (a.exps[i] && b.exps[i]) return false;
  return true;
}

// Coefficient domains. A reduction step cancelling coefficient `a` of f
// against leading coefficient `b` of g computes f <- s*f - m*u*g.

// Z with primitive (content-free) polynomials; fraction-free over Q.
struct IntegerCoeffs {
  using Elem = Integer;
  static constexpr bool kPeriodicNormalize = true;

  static bool is_zero(const Elem& x) { return sgn(x) == 0; }
  static bool is_one(const Elem& x) { return x == 1; }
  static void cancel_factors(const Elem& a, const Elem& b, Elem& s, Elem& m) {
    Elem g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    mpz_divexact(s.get_mpz_t(), b.get_mpz_t(), g.get_mpz_t());
    mpz_divexact(m.get_mpz_t(), a.get_mpz_t(), g.get_mpz_t());
  }
  static void scale(Elem& x, const Elem& s) { x *= s; }
  static void submul(Elem& x, const Elem& m, const Elem& y) {
    mpz_submul(x.get_mpz_t(), m.get_mpz_t(), y.get_mpz_t());
  }
  static Elem mul(const Elem& x, const Elem& y) { return x * y; }
  static Elem neg_mul(const Elem& m, const Elem& y) { return -(m * y); }
  static Elem sub_mul2(const Elem& a, const Elem& x, const Elem& b, const Elem& y) { return a * x - b * y; }

  template <class Poly>
  static void normalize(Poly& f) {
    if (f.empty()) return;
    Integer g = 0;
    for (const auto& t : f) {
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), t.c.get_mpz_t());
      if (g == 1) break;
    }
    if (sgn(f.front().c) < 0) g = -g;
    if (g != 1)
      for (auto& t : f) mpz_divexact(t.c.get_mpz_t(), t.c.get_mpz_t(), g.get_mpz_t());
  }
};

// GF(p), p = 2^31 - 1, with monic polynomials.
struct PrimeFieldCoeffs {
  using Elem = std::uint32_t;
  static constexpr std::uint64_t kP = 2147483647u;
  static constexpr bool kPeriodicNormalize = false;

  static bool is_zero(Elem x) { return x == 0; }
  static bool is_one(Elem x) { return x == 1; }
  static void cancel_factors(Elem a, Elem b, Elem& s, Elem& m) {
    s = 1;
    m = b == 1 ? a : mul(a, inverse(b));
  }
  static void scale(Elem& x, Elem s) { x = mul(x, s); }
  static void submul(Elem& x, Elem m, Elem y) {
    x = static_cast<Elem>((x + kP - static_cast<std::uint64_t>(m) * y % kP) % kP);
  }
  static Elem mul(Elem x, Elem y) { return static_cast<Elem>(static_cast<std::uint64_t>(x) * y % kP); }
  static Elem neg_mul(Elem m, Elem y) { return static_cast<Elem>((kP - static_cast<std::uint64_t>(m) * y % kP) % kP); }
  static Elem sub_mul2(Elem a, Elem x, Elem b, Elem y) {
    return static_cast<Elem>((static_cast<std::uint64_t>(a) * x % kP + kP - static_cast<std::uint64_t>(b) * y % kP) % kP);
  }
  static Elem inverse(Elem x) {
    std::uint64_t result = 1, base = x, e = kP - 2;
    while (e) {
      if (e & 1) result = result * base % kP;
      base = base * base % kP;
      e >>= 1;
    }
    return static_cast<Elem>(result);
  }
  static Elem from_integer(const Integer& v) {
    Integer r;
    mpz_fdiv_r_ui(r.get_mpz_t(), v.get_mpz_t(), static_cast<unsigned long>(kP));
    return static_cast<Elem>(r.get_ui());
  }

  template <class Poly>
  static void normalize(Poly& f) {
    if (f.empty() || f.front().c == 1) return;
    const Elem inv = inverse(f.front().c);
    for (auto& t : f) t.c = mul(t.c, inv);
  }
};

template <class C>
struct Term {
  Monomial m;
  typename C::Elem c;
};
template <class C>
using Poly = std::vector<Term<C>>;

template <class C>
Poly<C> to_engine(const Polynomial& f, MonomialOrder order) {
  Integer lcm_den = 1;
  for (const auto& [m, c] : f.terms()) mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), c.get_den_mpz_t());
  Poly<C> out;
  out.reserve(f.size());
  for (const auto& [m, c] : f.terms()) {
    Integer v = c.get_num() * (lcm_den / c.get_den());
    if constexpr (std::is_same_v<C, IntegerCoeffs>) {
      out.push_back({m, std::move(v)});
    } else {
      const auto e = C::from_integer(v);
      if (e != 0) out.push_back({m, e});
    }
  }
  if constexpr (!std::is_same_v<C, IntegerCoeffs>) {
    if (C::from_integer(lcm_den) == 0) throw DomainError("denominator vanishes modulo the working prime");
  }
  std::sort(out.begin(), out.end(), [order](const Term<C>& a, const Term<C>& b) { return compare(a.m, b.m, order) > 0; });
  C::normalize(out);
  return out;
}

template <class C>
Polynomial to_monic_rational(const Poly<C>& f, int nvars) {
  std::vector<Polynomial::Term> terms;
  terms.reserve(f.size());
  for (const auto& t : f) {
    if constexpr (std::is_same_v<C, IntegerCoeffs>) {
      Rational r(t.c, f.front().c);
      r.canonicalize();
      terms.emplace_back(t.m, std::move(r));
    } else {
      // Symmetric representative of the residue.
      long long v = t.c;
      if (v > static_cast<long long>(C::kP / 2)) v -= static_cast<long long>(C::kP);
      terms.emplace_back(t.m, Rational(static_cast<long>(v)));
    }
  }
  return Polynomial(nvars, std::move(terms));
}

struct Pair {
  std::size_t i, j;
  Monomial lcm;
};

template <class C>
class Engine {
 public:
  using Elem = typename C::Elem;
  using P = Poly<C>;

  Engine(int nvars, const GroebnerOptions& options) : nvars_(nvars), options_(options) {}

  MonomialOrder order() const { return options_.order; }
  GroebnerStats& stats() { return stats_; }
  const std::vector<P>& polys() const { return polys_; }
  const std::vector<bool>& active() const { return active_; }
  std::vector<Pair>& pairs() { return pairs_; }
  const std::vector<Monomial>& lts() const { return lts_; }

  // Fully reduces f by every stored polynomial; the result is normalized
  // (primitive or monic) or empty.
  P reduce(P f) {
    std::size_t i = 0;
    std::size_t since_normalize = 0;
    Elem s{}, mult{};
    P out;
    while (i < f.size()) {
      const std::size_t r = find_reducer(f[i].m);
      if (r == kNone) {
        ++i;
        continue;
      }
      tick();
      const P& g = polys_[r];
      const Monomial u = f[i].m / g.front().m;
      C::cancel_factors(f[i].c, g.front().c, s, mult);
      // f <- s*f - mult*u*g, with the head term f[i] cancelling.
      out.clear();
      out.reserve(f.size() + g.size());
      const bool scale = !C::is_one(s);
      for (std::size_t k = 0; k < i; ++k) {
        out.push_back(std::move(f[k]));
        if (scale) C::scale(out.back().c, s);
      }
      std::size_t p = i + 1, q = 1;
      Monomial gm;
      if (q < g.size()) gm = g[q].m * u;
      while (p < f.size() || q < g.size()) {
        int cmp;
        if (p == f.size())
          cmp = -1;
        else if (q == g.size())
          cmp = 1;
        else
          cmp = compare(f[p].m, gm, options_.order);
        if (cmp > 0) {
          out.push_back(std::move(f[p++]));
          if (scale) C::scale(out.back().c, s);
        } else if (cmp < 0) {
          out.push_back({gm, C::neg_mul(mult, g[q].c)});
          if (++q < g.size()) gm = g[q].m * u;
        } else {
          if (scale) C::scale(f[p].c, s);
          C::submul(f[p].c, mult, g[q].c);
          if (!C::is_zero(f[p].c)) out.push_back(std::move(f[p]));
          ++p;
          if (++q < g.size()) gm = g[q].m * u;
        }
      }
      std::swap(f, out);
      if constexpr (C::kPeriodicNormalize) {
        if (++since_normalize >= 16) {
          C::normalize(f);
          since_normalize = 0;
        }
      }
    }
    C::normalize(f);
    return f;
  }

  P spoly(const Pair& pr) {
    const P& f = polys_[pr.i];
    const P& g = polys_[pr.j];
    const Monomial uf = pr.lcm / f.front().m;
    const Monomial ug = pr.lcm / g.front().m;
    // a*uf*f - b*ug*g with a*lc(f) = b*lc(g).
    Elem a, b;
    C::cancel_factors(f.front().c, g.front().c, a, b);
    P out;
    out.reserve(f.size() + g.size());
    std::size_t p = 1, q = 1;
    while (p < f.size() || q < g.size()) {
      int cmp;
      Monomial fm, gm;
      if (p < f.size()) fm = f[p].m * uf;
      if (q < g.size()) gm = g[q].m * ug;
      if (p == f.size())
        cmp = -1;
      else if (q == g.size())
        cmp = 1;
      else
        cmp = compare(fm, gm, options_.order);
      if (cmp > 0) {
        out.push_back({fm, C::mul(a, f[p].c)});
        ++p;
      } else if (cmp < 0) {
        out.push_back({gm, C::neg_mul(b, g[q].c)});
        ++q;
      } else {
        Elem c = C::sub_mul2(a, f[p].c, b, g[q].c);
        if (!C::is_zero(c)) out.push_back({fm, std::move(c)});
        ++p;
        ++q;
      }
    }
    C::normalize(out);
    return out;
  }

  // Gebauer-Moeller update: installs h and prunes old and new pairs.
  std::size_t add(P h) {
    const std::size_t hi = polys_.size();
    const Monomial lt = h.front().m;
    install(std::move(h));

    std::vector<Pair> candidates;
    for (std::size_t g = 0; g < hi; ++g)
      if (active_[g]) candidates.push_back({g, hi, lcm(lts_[g], lt)});

    // New pairs (g, h), processed in order: a pair is dropped when another
    // still-pending or already-kept pair has an lcm dividing its own.
    std::vector<Pair> kept;
    for (std::size_t k = 0; k < candidates.size(); ++k) {
      const Pair& c = candidates[k];
      bool redundant = false;
      if (!coprime(lts_[c.i], lt)) {
        for (std::size_t l = k + 1; l < candidates.size() && !redundant; ++l)
          redundant = candidates[l].lcm.divides(c.lcm);
        for (std::size_t l = 0; l < kept.size() && !redundant; ++l) redundant = kept[l].lcm.divides(c.lcm);
      }
      if (!redundant) kept.push_back(c);
    }
    std::vector<Pair> fresh;
    for (const auto& c : kept)
      if (!coprime(lts_[c.i], lt)) fresh.push_back(c);
    stats_.pairs_skipped += candidates.size() - fresh.size();

    std::erase_if(pairs_, [&](const Pair& p) {
      if (!lt.divides(p.lcm)) return false;
      const bool drop = !(lcm(lts_[p.i], lt) == p.lcm) && !(lcm(lts_[p.j], lt) == p.lcm);
      if (drop) ++stats_.pairs_skipped;
      return drop;
    });
    pairs_.insert(pairs_.end(), fresh.begin(), fresh.end());

    for (std::size_t g = 0; g < hi; ++g)
      if (active_[g] && lt.divides(lts_[g])) active_[g] = false;
    return hi;
  }

  // Stores a reducer with no pair bookkeeping.
  void install(P h) {
    lts_.push_back(h.front().m);
    masks_.push_back(divmask(h.front().m));
    active_.push_back(true);
    polys_.push_back(std::move(h));
  }

  void tick() {
    ++stats_.reduction_steps;
    if (stats_.reduction_steps > options_.step_budget)
      throw BudgetExhausted("Groebner step budget of " + std::to_string(options_.step_budget) + " exhausted");
    if (options_.deadline && (stats_.reduction_steps & 0xff) == 0 &&
        std::chrono::steady_clock::now() > *options_.deadline)
      throw BudgetExhausted("Groebner wall-clock budget exhausted");
  }

 private:
  static constexpr std::size_t kNone = static_cast<std::size_t>(-1);

  std::size_t find_reducer(const Monomial& m) const {
    const std::uint32_t mm = divmask(m);
    for (std::size_t k = 0; k < lts_.size(); ++k) {
      if (!active_[k] || (masks_[k] & ~mm)) continue;
      if (lts_[k].divides(m)) return k;
    }
    return kNone;
  }

  int nvars_;
  GroebnerOptions options_;
  GroebnerStats stats_;
  std::vector<P> polys_;
  std::vector<Monomial> lts_;
  std::vector<std::uint32_t> masks_;
  std::vector<bool> active_;
  std::vector<Pair> pairs_;
};

int common_nvars(const std::vector<Polynomial>& gens) {
  if (gens.empty()) throw DomainError("empty generator list");
  const int n = gens.front().nvars();
  for (const auto& g : gens)
    if (g.nvars() != n) throw DomainError("generators live in different polynomial rings");
  return n;
}

}  // namespace

std::vector<Monomial> GroebnerBasis::leading_monomials() const {
  std::vector<Monomial> out;
  out.reserve(generators.size());
  for (const auto& g : generators) {
    const auto& terms = g.terms();
    auto best = std::max_element(terms.begin(), terms.end(), [this](const auto& a, const auto& b) {
      return compare(a.first, b.first, order) < 0;
    });
    out.push_back(best->first);
  }
  return out;
}

GroebnerBasis buchberger(const std::vector<Polynomial>& generators, const GroebnerOptions& options,
                         GroebnerStats* stats) {
  const int n = common_nvars(generators);
  Engine<IntegerCoeffs> engine(n, options);
  const auto ord = options.order;

  for (const auto& g : generators) {
    if (g.is_zero()) continue;
    auto r = engine.reduce(to_engine<IntegerCoeffs>(g, ord));
    if (!r.empty()) engine.add(std::move(r));
  }

  auto& pairs = engine.pairs();
  while (!pairs.empty()) {
    // Normal strategy: smallest lcm first.
    auto it = std::min_element(pairs.begin(), pairs.end(), [ord](const Pair& a, const Pair& b) {
      return compare(a.lcm, b.lcm, ord) < 0;
    });
    const Pair pr = *it;
    pairs.erase(it);
    ++engine.stats().pairs_processed;
    auto r = engine.reduce(engine.spoly(pr));
    if (r.empty()) {
      ++engine.stats().zero_reductions;
      continue;
    }
    engine.add(std::move(r));
  }

  // Minimal basis, then inter-reduce.
  std::vector<std::size_t> keep;
  const auto& polys = engine.polys();
  const auto& lts = engine.lts();
  for (std::size_t k = 0; k < polys.size(); ++k) {
    if (!engine.active()[k]) continue;
    bool redundant = false;
    for (std::size_t l : keep)
      if (lts[l].divides(lts[k])) redundant = true;
    if (!redundant) keep.push_back(k);
  }
  std::sort(keep.begin(), keep.end(), [&](std::size_t a, std::size_t b) { return compare(lts[a], lts[b], ord) < 0; });

  GroebnerBasis basis{n, ord, {}};
  for (std::size_t k : keep) basis.generators.push_back(to_monic_rational(polys[k], n));
  // Leading terms survive tail reduction because the basis is minimal.
  for (std::size_t k = 0; k < basis.generators.size(); ++k) {
    GroebnerBasis others{n, ord, {}};
    for (std::size_t l = 0; l < basis.generators.size(); ++l)
      if (l != k) others.generators.push_back(basis.generators[l]);
    basis.generators[k] = normal_form(basis.generators[k], others);
  }
  if (stats) *stats = engine.stats();
  return basis;
}

Polynomial normal_form(const Polynomial& f, const GroebnerBasis& basis) {
  if (f.is_zero()) return f;
  const auto ord = basis.order;
  const int n = f.nvars();
  GroebnerOptions options;
  options.order = ord;
  options.step_budget = ~std::uint64_t{0};
  Engine<IntegerCoeffs> engine(n, options);
  for (const auto& g : basis.generators) {
    if (g.is_zero()) continue;
    engine.install(to_engine<IntegerCoeffs>(g, ord));
  }
  auto r = engine.reduce(to_engine<IntegerCoeffs>(f, ord));
  if (r.empty()) return Polynomial(n);
  return to_monic_rational(r, n);
}

bool is_zero_dimensional(const std::vector<Monomial>& leading, int nvars) {
  std::vector<bool> has(nvars, false);
  for (const auto& m : leading) {
    int v;
    if (m.is_pure_power_of(v) && v < nvars) has[v] = true;
  }
  return std::all_of(has.begin(), has.end(), [](bool b) { return b; });
}

bool is_zero_dimensional(const GroebnerBasis& basis) {
  return is_zero_dimensional(basis.leading_monomials(), basis.nvars);
}

std::vector<long long> complete_intersection_hilbert(const std::vector<int>& degrees, int nvars, int upto) {
  std::vector<long long> series(upto + 1, 0);
  // 1/(1-t)^n
  for (int k = 0; k <= upto; ++k) {
    // C(k + n - 1, n - 1)
    long long exact = 1;
    for (int i = 1; i < nvars; ++i) exact = exact * (k + i) / i;
    series[k] = exact;
  }
  for (int d : degrees)
    for (int k = upto; k >= d; --k) series[k] -= series[k - d];
  return series;
}

namespace {

template <class C>
ZeroDimCheck run_zero_dim(const std::vector<Polynomial>& generators, const GroebnerOptions& options,
                          bool allow_skip) {
  const int n = common_nvars(generators);
  const auto ord = options.order;
  ZeroDimCheck result;
  Engine<C> engine(n, options);
  using P = Poly<C>;

  std::map<int, std::vector<P>> inputs;
  std::vector<int> degrees;
  for (const auto& g : generators) {
    if (!g.is_homogeneous()) throw DomainError("zero-dimensionality check requires homogeneous generators");
    if (g.is_zero()) {
      degrees.push_back(0);
      continue;
    }
    degrees.push_back(g.total_degree());
    inputs[g.total_degree()].push_back(to_engine<C>(g, ord));
  }
  const bool square = static_cast<int>(generators.size()) == n &&
                      std::none_of(degrees.begin(), degrees.end(), [](int d) { return d == 0; });
  int top = 1;
  for (int d : degrees) top += std::max(d - 1, 0);
  const std::vector<long long> expected = square ? complete_intersection_hilbert(degrees, n, top) : std::vector<long long>{};

  std::vector<Monomial> standard{Monomial{}};
  bool skipped = false;
  for (int D = 1;; ++D) {
    auto& pairs = engine.pairs();
    const bool more_inputs = inputs.lower_bound(D) != inputs.end();
    if (!more_inputs && pairs.empty()) {
      // The basis is complete: the answer is exact.
      result.zero_dimensional = is_zero_dimensional(engine.lts(), n);
      if (!result.zero_dimensional && skipped) return run_zero_dim<C>(generators, options, false);
      break;
    }

    // Standard monomials of degree D with respect to lower-degree leaders.
    std::vector<Monomial> next;
    {
      std::unordered_set<Monomial, MonomialHash> seen;
      for (const auto& s : standard) {
        for (int v = 0; v < n; ++v) {
          Monomial cand = s * Monomial::variable(v);
          if (!seen.insert(cand).second) continue;
          bool divisible = false;
          for (const auto& lt : engine.lts())
            if (lt.divides(cand)) {
              divisible = true;
              break;
            }
          if (!divisible) next.push_back(cand);
        }
      }
    }
    long long count = static_cast<long long>(next.size());
    const long long want = !square ? -1 : (D <= top ? std::max(expected[D], 0LL) : 0);

    std::vector<P> work;
    if (auto it = inputs.find(D); it != inputs.end()) work = std::move(it->second);
    std::vector<Pair> now;
    std::erase_if(pairs, [&](const Pair& p) {
      if (p.lcm.degree() != D) return false;
      now.push_back(p);
      return true;
    });
    std::sort(now.begin(), now.end(), [ord](const Pair& a, const Pair& b) { return compare(a.lcm, b.lcm, ord) < 0; });

    std::vector<Monomial> new_lts;
    auto consider = [&](P f) {
      P r = engine.reduce(std::move(f));
      if (r.empty()) {
        ++engine.stats().zero_reductions;
        return;
      }
      new_lts.push_back(r.front().m);
      engine.add(std::move(r));
      --count;
    };
    std::size_t k = 0;
    for (; k < work.size(); ++k) {
      if (allow_skip && square && count == want) break;
      consider(std::move(work[k]));
    }
    std::size_t pruned = work.size() - k;
    // Pairs created while processing degree D have lcm degree > D, except when
    // an input or S-polynomial of degree D pairs with a degree-D leader.
    for (std::size_t p = 0;; ++p) {
      // Collect any freshly created degree-D pairs.
      std::erase_if(pairs, [&](const Pair& q) {
        if (q.lcm.degree() != D) return false;
        now.push_back(q);
        return true;
      });
      if (p >= now.size()) break;
      if (allow_skip && square && count == want) {
        pruned += now.size() - p;
        break;
      }
      ++engine.stats().pairs_processed;
      consider(engine.spoly(now[p]));
    }
    if (pruned > 0) {
      skipped = true;
      result.hilbert_pruned = true;
      engine.stats().pairs_skipped += pruned;
    }

    if (square && count > want && result.excess_degree < 0) {
      result.excess_degree = D;
      if (!skipped) {
        result.zero_dimensional = false;
        break;
      }
      return run_zero_dim<C>(generators, options, false);
    }

    std::erase_if(next, [&](const Monomial& m) { return std::find(new_lts.begin(), new_lts.end(), m) != new_lts.end(); });
    standard = std::move(next);
    if (standard.empty()) {
      // Every monomial of degree D is a leading monomial multiple.
      result.zero_dimensional = true;
      break;
    }
  }

  result.leading = engine.lts();
  for (std::size_t k = 0; k < engine.polys().size(); ++k) result.basis.push_back(to_monic_rational(engine.polys()[k], n));
  if (!result.zero_dimensional) {
    std::vector<bool> has(n, false);
    for (const auto& m : result.leading) {
      int v;
      if (m.is_pure_power_of(v)) has[v] = true;
    }
    for (int v = 0; v < n; ++v)
      if (!has[v]) {
        result.missing_variable = v + 1;
        break;
      }
  }
  result.stats = engine.stats();
  return result;
}

}  // namespace

ZeroDimCheck homogeneous_zero_dimensional(const std::vector<Polynomial>& generators, const GroebnerOptions& options) {
  ZeroDimCheck r = options.field == CoefficientField::Rational
                       ? run_zero_dim<IntegerCoeffs>(generators, options, true)
                       : run_zero_dim<PrimeFieldCoeffs>(generators, options, true);
  r.field = options.field;
  return r;
}

}  // namespace invbound
