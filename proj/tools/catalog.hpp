#pragma once

#include <optional>
#include <string>
#include <vector>

#include <invbound/molien.hpp>
#include <invbound/perm_group.hpp>
#include <invbound/polynomial.hpp>

namespace invbound::cli {

struct CatalogEntry {
  std::string label;
  int degree = 0;
  std::vector<std::string> generators;
  Integer expected_order;
  std::string order_display;
  // 1 for "none".
  int expected_t = 1;
  std::optional<DegreeVector> expected_degrees;
  std::optional<Rational> expected_result;
  std::optional<Rational> expected_malle;
  std::string isomorphism;

  // Closes the generators. CapacityError when the group is too large.
  PermGroup group() const;
  // Empty when the closure has the expected order and is transitive.
  std::string validate() const;
};

// One record per line: label | n | gens;gens | order | printed order |
// subfield | degrees | result | malle | isomorphism type. Blank lines and
// lines starting with '#' are skipped. ParseError carries the line number.
std::vector<CatalogEntry> parse_catalog(const std::string& text);
std::vector<CatalogEntry> load_catalog(const std::string& path);

const CatalogEntry* find_entry(const std::vector<CatalogEntry>& catalog, const std::string& label);

}  // namespace invbound::cli
