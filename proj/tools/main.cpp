#include <iostream>
#include <map>

#include <CLI11.hpp>

#include <invbound/errors.hpp>

#include "catalog.hpp"
#include "commands.hpp"

#ifndef INVBOUND_DEFAULT_CATALOG
#define INVBOUND_DEFAULT_CATALOG "catalog.txt"
#endif

using namespace invbound::cli;

int main(int argc, char** argv) {
  CLI::App app{"Upper-bound exponents for counting number fields with prescribed Galois group"};
  app.require_subcommand(1);
  // Global options may also follow the subcommand.
  app.fallthrough();

  RunConfig config;
  std::string catalog_path = INVBOUND_DEFAULT_CATALOG;
  std::string certify = "rational";

  app.add_option("--catalog", catalog_path, "Catalog file")->capture_default_str();
  app.add_option("--base-degree,-l", config.base_degree, "Degree l of the base field")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  app.add_option("--seed", config.seed, "Seed for the invariant search")->capture_default_str();
  app.add_option("--budget-seconds", config.budget_seconds, "Wall-clock budget per group")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  app.add_option("--steps", config.step_budget, "Reduction steps allowed per candidate degree vector")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  app.add_option("--order", config.truncation, "Molien series truncation")->check(CLI::PositiveNumber);
  app.add_option("--max-candidates", config.max_candidates, "Candidate degree vectors tried")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  app.add_option("--format", config.format, "Output format")
      ->transform(CLI::CheckedTransformer(std::map<std::string, Format>{{"md", Format::Markdown},
                                                                        {"csv", Format::Csv}}));
  app.add_option("--certify", certify,
                 "Field for the certificate of the returned primary set; a GF(p) acceptance also proves it over Q")
      ->check(CLI::IsMember({"rational", "prime"}))
      ->capture_default_str();
  app.add_option("--jobs,-j", config.jobs, "Rows computed in parallel by table (0: one per core)")
      ->capture_default_str();

  std::string label;
  std::vector<std::string> gens;
  int degree = 0;
  auto add_target = [&](CLI::App* sub) {
    sub->add_option("label", label, "Catalog label such as 7T5");
    sub->add_option("--gens", gens, "Generators in cycle notation, instead of a label")->delimiter(';');
    sub->add_option("-n", degree, "Degree for --gens");
  };

  auto* analyze = app.add_subcommand("analyze", "Full report for one group");
  add_target(analyze);

  int table_degree = 0;
  auto* table = app.add_subcommand("table", "Report every catalog group of one degree");
  table->add_option("n", table_degree, "Degree")->required();

  auto* molien = app.add_subcommand("molien", "Molien series and candidate degree vectors");
  add_target(molien);

  std::string file;
  auto* verify = app.add_subcommand("verify", "Check a file of primary invariants");
  add_target(verify);
  verify->add_option("file", file, "Primary set file");

  bool check = false;
  auto* catalog_cmd = app.add_subcommand("catalog", "Catalog operations");
  auto* list = catalog_cmd->add_subcommand("list", "List catalog groups");
  list->add_flag("--check", check, "Close the generators and check orders and transitivity");
  catalog_cmd->require_subcommand(1);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }
  config.certification =
      certify == "prime" ? invbound::CoefficientField::Prime : invbound::CoefficientField::Rational;

  try {
    auto catalog = load_catalog(catalog_path);
    auto target = [&] {
      if (label.empty() && gens.empty()) throw std::invalid_argument("give a label or --gens");
      return resolve(catalog, label, gens, degree);
    };
    if (*analyze) return cmd_analyze(target(), config, std::cout);
    if (*table) return cmd_table(catalog, table_degree, config, std::cout);
    if (*molien) return cmd_molien(target(), config, std::cout);
    if (*verify) {
      // With --gens the only positional is the file.
      if (file.empty() && !gens.empty()) std::swap(file, label);
      if (file.empty()) throw std::invalid_argument("verify needs a primary set file");
      return cmd_verify(target(), file, config, std::cout);
    }
    if (*list) return cmd_catalog_list(catalog, check, std::cout);
  } catch (const invbound::ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return kUsage;
  } catch (const invbound::BudgetExhausted& e) {
    std::cerr << "budget: " << e.what() << '\n';
    return kBudget;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const invbound::DomainError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const invbound::CapacityError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}
