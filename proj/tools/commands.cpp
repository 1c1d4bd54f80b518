#include "commands.hpp"

#include <atomic>
#include <chrono>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <thread>

#include <invbound/errors.hpp>
#include <invbound/invariants.hpp>
#include <invbound/molien.hpp>
#include <invbound/permutation.hpp>

namespace invbound::cli {

namespace {

using Clock = std::chrono::steady_clock;

Clock::time_point deadline_after(double seconds) {
  return Clock::now() + std::chrono::duration_cast<Clock::duration>(std::chrono::duration<double>(seconds));
}

std::string join(const std::vector<std::string>& parts, const char* sep) {
  std::string s;
  for (std::size_t i = 0; i < parts.size(); ++i) s += (i ? sep : "") + parts[i];
  return s;
}

std::string check_text(const BoundReport& report, const CatalogEntry* entry) {
  if (!report.complete()) return "budget";
  if (!entry) return "-";
  auto bad = mismatches(report, *entry);
  return bad.empty() ? "ok" : "MISMATCH " + join(bad, "/");
}

BoundReport analyze_target(const Target& target, const RunConfig& config) {
  AnalyzeConfig ac = analyze_config(config);
  ac.search.deadline = deadline_after(config.budget_seconds);
  return analyze_group(target.group, BaseFieldDegree(config.base_degree), ac, target.label);
}

MolienSeries series_for(const PermGroup& group, const RunConfig& config) {
  return molien_series(group, config.truncation.value_or(default_truncation(group.degree())));
}

const char* field_name(CoefficientField f) { return f == CoefficientField::Rational ? "Q" : "GF(2^31-1)"; }

}  // namespace

Target resolve(const std::vector<CatalogEntry>& catalog, const std::string& label,
               const std::vector<std::string>& generators, int degree) {
  Target t;
  if (!generators.empty()) {
    if (degree < 2) throw std::invalid_argument("--gens needs -n with n >= 2");
    std::vector<Permutation> gens;
    for (const auto& g : generators) gens.push_back(parse_cycles(g, degree));
    t.group = group_closure(gens, degree);
    t.label = label.empty() ? "custom" : label;
    return t;
  }
  const CatalogEntry* e = find_entry(catalog, label);
  if (!e) throw std::invalid_argument("unknown group label \"" + label + "\"");
  t.label = e->label;
  t.group = e->group();
  t.entry = e;
  return t;
}

AnalyzeConfig analyze_config(const RunConfig& config) {
  AnalyzeConfig ac;
  ac.truncation = config.truncation;
  ac.max_candidates = config.max_candidates;
  ac.search.seed = config.seed;
  ac.search.step_budget = config.step_budget;
  ac.search.certification = config.certification;
  return ac;
}

std::vector<std::string> mismatches(const BoundReport& report, const CatalogEntry& entry) {
  std::vector<std::string> bad;
  if (report.order != entry.expected_order) bad.push_back("order");
  if (report.t != entry.expected_t) bad.push_back("subfield");
  if (entry.expected_degrees && report.degrees && *report.degrees != *entry.expected_degrees) bad.push_back("degrees");
  // Tabulated results are for the base field Q.
  if (report.l == 1 && entry.expected_result && report.result && *report.result != *entry.expected_result)
    bad.push_back("result");
  if (entry.expected_malle && report.malle_a != *entry.expected_malle) bad.push_back("malle");
  return bad;
}

int cmd_analyze(const Target& target, const RunConfig& config, std::ostream& out) {
  if (!is_transitive(target.group)) throw std::invalid_argument("group is not transitive");
  BoundReport r = analyze_target(target, config);
  const std::string check = check_text(r, target.entry);
  if (config.format == Format::Csv) {
    out << BoundReport::csv_header() << ",check\n" << r.to_csv() << ',' << check << '\n';
  } else {
    out << "group        " << r.label << '\n'
        << "degree       " << r.n << '\n'
        << "order        " << r.order.get_str() << '\n'
        << "subfield     " << r.subfield() << '\n';
    if (r.complete()) {
      out << "degrees      " << r.degrees->to_string() << '\n'
          << "secondaries  " << r.secondary_count->get_str() << '\n'
          << "result       " << format_power(*r.result) << "+eps";
      if (r.no_secondary_invariant) out << "  (no secondary invariant: Schmidt's bound recovered)";
      out << '\n';
      if (r.l > 1) {
        if (auto alt = r.tabulated_alternative())
          out << "alternative  " << format_power(*alt) << "+eps  (tabulated general-field form, l = " << r.l
              << ")\n";
      }
    } else {
      out << "result       budget: " << r.budget_note << '\n';
    }
    out << "malle        " << format_power(r.malle_a) << "+eps  b(Q,G) = " << r.malle_b_q << '\n'
        << "schmidt      " << format_power(r.schmidt) << '\n';
    if (target.entry) out << "check        " << check << '\n';
  }
  if (!r.complete()) return kBudget;
  if (target.entry && !mismatches(r, *target.entry).empty()) return kMismatch;
  return kOk;
}

int cmd_table(const std::vector<CatalogEntry>& catalog, int degree, const RunConfig& config, std::ostream& out) {
  std::vector<const CatalogEntry*> rows;
  for (const auto& e : catalog)
    if (e.degree == degree) rows.push_back(&e);
  if (rows.empty()) throw std::invalid_argument("catalog has no groups of degree " + std::to_string(degree));

  std::vector<std::string> lines(rows.size());
  std::vector<int> codes(rows.size(), kOk);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i; (i = next.fetch_add(1)) < rows.size();) {
      const CatalogEntry& e = *rows[i];
      Target t{e.label, e.group(), &e};
      BoundReport r = analyze_target(t, config);
      std::string check = check_text(r, &e);
      lines[i] = config.format == Format::Csv ? r.to_csv() + ',' + check : r.to_markdown() + ' ' + check + " |";
      codes[i] = !r.complete() ? kBudget : (mismatches(r, e).empty() ? kOk : kMismatch);
    }
  };
  unsigned jobs = config.jobs ? config.jobs : std::max(1u, std::thread::hardware_concurrency());
  jobs = std::min<unsigned>(jobs, static_cast<unsigned>(rows.size()));
  {
    std::vector<std::jthread> pool;
    for (unsigned j = 1; j < jobs; ++j) pool.emplace_back(worker);
    worker();
  }

  if (config.format == Format::Csv) {
    out << BoundReport::csv_header() << ",check\n";
  } else {
    std::string h = BoundReport::markdown_header();
    auto nl = h.find('\n');
    out << h.substr(0, nl) << " Check |\n" << h.substr(nl + 1) << "---|\n";
  }
  for (const auto& l : lines) out << l << '\n';

  int code = kOk;
  for (int c : codes)
    if (c == kMismatch) code = kMismatch;
  if (code == kOk)
    for (int c : codes)
      if (c == kBudget) code = kBudget;
  return code;
}

int cmd_molien(const Target& target, const RunConfig& config, std::ostream& out) {
  MolienSeries series = series_for(target.group, config);
  std::vector<CandidateVerdict> verdicts;
  try {
    verdicts = evaluate_degree_vectors(target.group, series);
  } catch (const PrecisionError& e) {
    out << "# series extended to t^" << e.required() << " to decide every vector\n";
    series = molien_series(target.group, e.required());
    verdicts = evaluate_degree_vectors(target.group, series);
  }
  out << "group " << target.label << ", order " << target.group.order() << '\n';
  out << "series:";
  for (const auto& c : series.coefficients) out << ' ' << c.get_str();
  out << '\n';
  std::size_t accepted = 0;
  for (const auto& v : verdicts) {
    out << '(' << v.degrees.to_string() << ") ";
    if (v.accepted) {
      out << "accept";
      if (accepted++ >= config.max_candidates) out << " (beyond candidate cap)";
    } else {
      out << "reject: " << v.reason;
    }
    out << '\n';
  }
  std::vector<DegreeVector> accepted_vectors;
  for (const auto& v : verdicts)
    if (v.accepted) accepted_vectors.push_back(v.degrees);
  out << "by product:";
  for (const auto& d : order_by_product(accepted_vectors)) out << " (" << d.to_string() << ')';
  out << '\n';
  return kOk;
}

int cmd_verify(const Target& target, const std::string& path, const RunConfig& config, std::ostream& out) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  PrimarySet set = parse_primary_set(buf.str(), target.group.degree());

  GroebnerOptions options;
  options.field = config.certification;
  options.step_budget = config.step_budget;
  options.deadline = deadline_after(config.budget_seconds);
  Verification v;
  try {
    v = verify_primary(target.group, set.polys, options);
  } catch (const BudgetExhausted& e) {
    out << "budget: " << e.what() << '\n';
    return kBudget;
  }
  if (!v.accepted()) {
    const VerifyFailure& f = *v.failure;
    out << "reject: " << f.message << '\n';
    if (f.poly_index >= 0) out << "polynomial   " << f.poly_index + 1 << '\n';
    if (f.generator) out << "generator    " << f.generator->to_string() << '\n';
    if (f.offending_degree >= 0) out << "degree       " << f.offending_degree << '\n';
    if (f.missing_variable >= 0) out << "variable     x" << f.missing_variable << '\n';
    return kMismatch;
  }
  set.certificate = *v.certificate;
  SecondaryData s = secondary_data(set, target.group, series_for(target.group, config));
  const Certificate& c = set.certificate;
  out << "accept\n"
      << "degrees      " << set.degrees.to_string() << '\n'
      << "field        " << field_name(c.field) << '\n'
      << "basis        " << c.basis.size() << " elements, " << c.stats.reduction_steps << " reduction steps\n"
      << "secondaries  " << s.count.get_str() << '\n'
      << "sec degrees ";
  for (int d : s.degrees) out << ' ' << d;
  out << '\n';
  return kOk;
}

int cmd_catalog_list(const std::vector<CatalogEntry>& catalog, bool check, std::ostream& out) {
  int code = kOk;
  for (const auto& e : catalog) {
    out << e.label << "  order " << e.order_display << "  " << (e.isomorphism.empty() ? "-" : e.isomorphism);
    if (check) {
      std::string problem;
      try {
        problem = e.validate();
      } catch (const CapacityError& err) {
        problem = err.what();
      }
      out << "  " << (problem.empty() ? "ok" : problem);
      if (!problem.empty()) code = kMismatch;
    }
    out << '\n';
  }
  return code;
}

}  // namespace invbound::cli
