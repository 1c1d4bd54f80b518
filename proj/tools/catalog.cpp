#include "catalog.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include <invbound/errors.hpp>
#include <invbound/permutation.hpp>

namespace invbound::cli {

namespace {

std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::stringstream in(s);
  std::string part;
  while (std::getline(in, part, sep)) out.push_back(trim(part));
  if (!s.empty() && s.back() == sep) out.emplace_back();
  return out;
}

Rational rational_field(const std::string& s, std::size_t line) {
  try {
    Rational r(s);
    r.canonicalize();
    return r;
  } catch (const std::invalid_argument&) {
    throw ParseError("bad rational \"" + s + "\"", line);
  }
}

}  // namespace

PermGroup CatalogEntry::group() const {
  std::vector<Permutation> gens;
  for (const auto& g : generators) gens.push_back(parse_cycles(g, degree));
  return group_closure(gens, degree);
}

std::string CatalogEntry::validate() const {
  PermGroup g = group();
  if (Integer(static_cast<unsigned long>(g.order())) != expected_order)
    return label + ": generators give order " + std::to_string(g.order()) + ", expected " + expected_order.get_str();
  if (!is_transitive(g)) return label + ": group is not transitive";
  return {};
}

std::vector<CatalogEntry> parse_catalog(const std::string& text) {
  std::vector<CatalogEntry> out;
  std::set<std::string> labels;
  std::istringstream in(text);
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::string t = trim(line);
    if (t.empty() || t[0] == '#') continue;
    auto f = split(t, '|');
    if (f.size() != 10)
      throw ParseError("expected 10 fields, found " + std::to_string(f.size()), line_no);
    CatalogEntry e;
    e.label = f[0];
    if (e.label.empty()) throw ParseError("empty label", line_no);
    if (!labels.insert(e.label).second) throw ParseError("duplicate label " + e.label, line_no);
    try {
      e.degree = std::stoi(f[1]);
    } catch (const std::exception&) {
      throw ParseError("bad degree \"" + f[1] + "\"", line_no);
    }
    if (e.degree < 2) throw ParseError("degree must be at least 2", line_no);
    for (auto& g : split(f[2], ';')) {
      if (g.empty()) throw ParseError("empty generator", line_no);
      try {
        parse_cycles(g, e.degree);
      } catch (const ParseError& err) {
        throw ParseError(std::string("generator ") + g + ": " + err.what(), line_no);
      }
      e.generators.push_back(g);
    }
    try {
      e.expected_order = Integer(f[3]);
    } catch (const std::invalid_argument&) {
      throw ParseError("bad order \"" + f[3] + "\"", line_no);
    }
    e.order_display = f[4];
    if (f[5] != "none") {
      try {
        e.expected_t = std::stoi(f[5]);
      } catch (const std::exception&) {
        throw ParseError("bad subfield \"" + f[5] + "\"", line_no);
      }
    }
    if (!f[6].empty()) {
      try {
        e.expected_degrees = parse_degree_vector(f[6]);
      } catch (const ParseError& err) {
        throw ParseError(std::string("degrees: ") + err.what(), line_no);
      }
    }
    if (!f[7].empty()) e.expected_result = rational_field(f[7], line_no);
    if (!f[8].empty()) e.expected_malle = rational_field(f[8], line_no);
    e.isomorphism = f[9];
    out.push_back(std::move(e));
  }
  return out;
}

std::vector<CatalogEntry> load_catalog(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open catalog " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_catalog(buf.str());
}

const CatalogEntry* find_entry(const std::vector<CatalogEntry>& catalog, const std::string& label) {
  for (const auto& e : catalog)
    if (e.label == label) return &e;
  return nullptr;
}

}  // namespace invbound::cli
