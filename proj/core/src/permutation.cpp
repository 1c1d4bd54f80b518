#include "invbound/permutation.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

#include "invbound/errors.hpp"

namespace invbound {

Permutation::Permutation(const std::vector<int>& images) {
  const int n = static_cast<int>(images.size());
  if (n < 1 || n > 255) throw DomainError("permutation degree must be in 1..255");
  std::vector<bool> seen(n, false);
  images_.resize(n);
  for (int i = 0; i < n; ++i) {
    const int img = images[i];
    if (img < 1 || img > n) throw DomainError("permutation image out of range: " + std::to_string(img));
    if (seen[img - 1]) throw DomainError("permutation image repeated: " + std::to_string(img));
    seen[img - 1] = true;
    images_[i] = static_cast<std::uint8_t>(img - 1);
  }
}

Permutation Permutation::identity(int degree) {
  if (degree < 1 || degree > 255) throw DomainError("permutation degree must be in 1..255");
  std::vector<std::uint8_t> id(degree);
  std::iota(id.begin(), id.end(), std::uint8_t{0});
  return Permutation(std::move(id));
}

std::vector<int> Permutation::images() const {
  std::vector<int> out(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) out[i] = images_[i] + 1;
  return out;
}

bool Permutation::is_identity() const noexcept {
  for (std::size_t i = 0; i < images_.size(); ++i)
    if (images_[i] != i) return false;
  return true;
}

Permutation Permutation::inverse() const {
  std::vector<std::uint8_t> inv(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) inv[images_[i]] = static_cast<std::uint8_t>(i);
  return Permutation(std::move(inv));
}

Permutation Permutation::pow(long long exponent) const {
  const long long ord = order();
  long long e = exponent % ord;
  if (e < 0) e += ord;
  Permutation result = identity(degree());
  Permutation base = *this;
  while (e > 0) {
    if (e & 1) result = result * base;
    base = base * base;
    e >>= 1;
  }
  return result;
}

long long Permutation::order() const {
  long long ord = 1;
  for (int len : cycle_type()) ord = std::lcm(ord, static_cast<long long>(len));
  return ord;
}

std::vector<int> Permutation::cycle_type() const {
  std::vector<int> lengths;
  std::vector<bool> seen(images_.size(), false);
  for (std::size_t start = 0; start < images_.size(); ++start) {
    if (seen[start]) continue;
    int len = 0;
    for (std::size_t p = start; !seen[p]; p = images_[p]) {
      seen[p] = true;
      ++len;
    }
    lengths.push_back(len);
  }
  std::sort(lengths.begin(), lengths.end(), std::greater<>());
  return lengths;
}

std::vector<std::vector<int>> Permutation::cycles() const {
  std::vector<std::vector<int>> out;
  std::vector<bool> seen(images_.size(), false);
  for (std::size_t start = 0; start < images_.size(); ++start) {
    if (seen[start] || images_[start] == start) continue;
    std::vector<int> cycle;
    for (std::size_t p = start; !seen[p]; p = images_[p]) {
      seen[p] = true;
      cycle.push_back(static_cast<int>(p) + 1);
    }
    out.push_back(std::move(cycle));
  }
  return out;
}

std::string Permutation::to_string() const {
  const auto cs = cycles();
  if (cs.empty()) return "()";
  std::ostringstream os;
  for (const auto& c : cs) {
    os << '(';
    for (std::size_t i = 0; i < c.size(); ++i) os << (i ? " " : "") << c[i];
    os << ')';
  }
  return os.str();
}

Permutation operator*(const Permutation& g, const Permutation& h) {
  if (g.images_.size() != h.images_.size()) throw DomainError("composing permutations of different degree");
  std::vector<std::uint8_t> out(g.images_.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = g.images_[h.images_[i]];
  return Permutation(std::move(out));
}

Permutation parse_cycles(std::string_view text, int degree) {
  if (degree < 1 || degree > 255) throw DomainError("permutation degree must be in 1..255");
  std::vector<int> images(degree);
  std::iota(images.begin(), images.end(), 1);
  std::vector<bool> used(degree + 1, false);

  std::size_t pos = 0;
  auto skip_space = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };

  skip_space();
  while (pos < text.size()) {
    if (text[pos] != '(') throw ParseError("expected '('", pos);
    ++pos;
    std::vector<int> cycle;
    bool closed = false;
    while (pos < text.size()) {
      skip_space();
      if (pos >= text.size()) break;
      const char c = text[pos];
      if (c == ')') {
        ++pos;
        closed = true;
        break;
      }
      if (c == ',') {
        if (cycle.empty()) throw ParseError("unexpected ','", pos);
        ++pos;
        continue;
      }
      if (!std::isdigit(static_cast<unsigned char>(c))) throw ParseError(std::string("unexpected character '") + c + "'", pos);
      const std::size_t start = pos;
      long value = 0;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
        value = value * 10 + (text[pos] - '0');
        if (value > 1'000'000) throw ParseError("point out of range", start);
        ++pos;
      }
      if (value < 1 || value > degree)
        throw ParseError("point " + std::to_string(value) + " outside 1.." + std::to_string(degree), start);
      if (used[value]) throw ParseError("point " + std::to_string(value) + " repeated", start);
      used[value] = true;
      cycle.push_back(static_cast<int>(value));
    }
    if (!closed) throw ParseError("unterminated cycle", pos);
    for (std::size_t i = 0; i < cycle.size(); ++i) images[cycle[i] - 1] = cycle[(i + 1) % cycle.size()];
    skip_space();
  }
  return Permutation(images);
}

int element_index(const Permutation& g) {
  const int n = g.degree();
  std::vector<bool> seen(n + 1, false);
  int orbits = 0;
  for (int p = 1; p <= n; ++p) {
    if (seen[p]) continue;
    ++orbits;
    for (int q = p; !seen[q]; q = g(q)) seen[q] = true;
  }
  return n - orbits;
}

int element_index_from_cycle_type(const Permutation& g) {
  int sum = 0;
  for (const auto& c : g.cycles()) sum += static_cast<int>(c.size()) - 1;
  return sum;
}

std::size_t PermutationHash::operator()(const Permutation& g) const noexcept {
  std::size_t h = 1469598103934665603ull;
  for (auto b : g.raw()) {
    h ^= b;
    h *= 1099511628211ull;
  }
  return h;
}

}  // namespace invbound
