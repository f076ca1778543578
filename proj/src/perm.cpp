#include "ocw/perm.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

#include "ocw/error.hpp"

namespace ocw {

Permutation Permutation::identity(unsigned degree) {
  std::vector<std::uint8_t> img(degree);
  for (unsigned i = 0; i < degree; ++i) img[i] = static_cast<std::uint8_t>(i);
  return Permutation(std::move(img));
}

Permutation::Permutation(std::vector<std::uint8_t> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (std::uint8_t v : images_) {
    if (v >= images_.size() || seen[v])
      throw argument_error("permutation image table is not a bijection");
    seen[v] = true;
  }
}

bool Permutation::is_identity() const {
  for (unsigned i = 0; i < degree(); ++i)
    if (images_[i] != i) return false;
  return true;
}

Permutation Permutation::operator*(const Permutation& rhs) const {
  if (degree() != rhs.degree()) throw argument_error("permutation degree mismatch");
  Permutation out;
  out.images_.resize(images_.size());
  for (unsigned i = 0; i < degree(); ++i) out.images_[i] = rhs.images_[images_[i]];
  return out;
}

Permutation Permutation::inverse() const {
  Permutation out;
  out.images_.resize(images_.size());
  for (unsigned i = 0; i < degree(); ++i) out.images_[images_[i]] = static_cast<std::uint8_t>(i);
  return out;
}

Permutation Permutation::conjugated_by(const Permutation& g) const {
  return g.inverse() * (*this) * g;
}

std::size_t Permutation::hash() const {
  // FNV-1a over the image bytes
  std::size_t h = 14695981039346656037ull;
  for (std::uint8_t v : images_) {
    h ^= v;
    h *= 1099511628211ull;
  }
  return h;
}

Permutation commutator(const Permutation& a, const Permutation& b) {
  return a.inverse() * b.inverse() * a * b;
}

Permutation power(const Permutation& p, long long n) {
  Permutation base = n < 0 ? p.inverse() : p;
  unsigned long long e = n < 0 ? static_cast<unsigned long long>(-(n + 1)) + 1ull
                               : static_cast<unsigned long long>(n);
  Permutation acc = Permutation::identity(p.degree());
  while (e > 0) {
    if (e & 1ull) acc = acc * base;
    base = base * base;
    e >>= 1;
  }
  return acc;
}

int element_order(const Permutation& p) {
  // lcm of cycle lengths
  const unsigned n = p.degree();
  std::vector<bool> seen(n, false);
  long long order = 1;
  for (unsigned i = 0; i < n; ++i) {
    if (seen[i]) continue;
    long long len = 0;
    unsigned j = i;
    do {
      seen[j] = true;
      j = p(static_cast<std::uint8_t>(j));
      ++len;
    } while (j != i);
    order = std::lcm(order, len);
  }
  return static_cast<int>(order);
}

Permutation parse_cycles(unsigned degree, std::string_view text) {
  std::vector<std::uint8_t> img(degree);
  for (unsigned i = 0; i < degree; ++i) img[i] = static_cast<std::uint8_t>(i);

  std::size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  skip_ws();
  if (pos == text.size()) throw parse_error("expected at least one cycle", pos);

  std::vector<bool> moved(degree, false);
  while (pos < text.size()) {
    skip_ws();
    if (pos == text.size()) break;
    if (text[pos] != '(') throw parse_error("expected '('", pos);
    ++pos;
    std::vector<unsigned> cycle;
    while (true) {
      skip_ws();
      if (pos < text.size() && text[pos] == ',') {
        ++pos;
        skip_ws();
      }
      if (pos == text.size()) throw parse_error("unterminated cycle", pos);
      if (text[pos] == ')') {
        ++pos;
        break;
      }
      if (!std::isdigit(static_cast<unsigned char>(text[pos])))
        throw parse_error("expected point or ')'", pos);
      unsigned value = 0;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
        value = value * 10 + static_cast<unsigned>(text[pos] - '0');
        ++pos;
      }
      if (value < 1 || value > degree)
        throw parse_error("point " + std::to_string(value) + " out of range 1.." +
                              std::to_string(degree),
                          pos);
      if (moved[value - 1])
        throw parse_error("point " + std::to_string(value) + " repeated", pos);
      moved[value - 1] = true;
      cycle.push_back(value - 1);
    }
    for (std::size_t i = 0; i < cycle.size(); ++i)
      img[cycle[i]] = static_cast<std::uint8_t>(cycle[(i + 1) % cycle.size()]);
  }
  return Permutation(std::move(img));
}

std::string format_cycles(const Permutation& p) {
  const unsigned n = p.degree();
  std::vector<bool> seen(n, false);
  std::string out;
  for (unsigned i = 0; i < n; ++i) {
    if (seen[i] || p(static_cast<std::uint8_t>(i)) == i) {
      seen[i] = true;
      continue;
    }
    out += '(';
    unsigned j = i;
    bool first = true;
    do {
      if (!first) out += ' ';
      first = false;
      out += std::to_string(j + 1);
      seen[j] = true;
      j = p(static_cast<std::uint8_t>(j));
    } while (j != i);
    out += ')';
  }
  if (out.empty()) out = "()";
  return out;
}

}  // namespace ocw
