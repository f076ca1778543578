#ifndef OCW_PERM_HPP
#define OCW_PERM_HPP

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace ocw {

/// A permutation of {0,...,degree-1} stored as its image table.
/// Products compose left to right: (p * q) maps x to q(p(x)).
class Permutation {
 public:
  Permutation() = default;

  static Permutation identity(unsigned degree);

  // Validates that `images` is a bijection.
  explicit Permutation(std::vector<std::uint8_t> images);

  unsigned degree() const { return static_cast<unsigned>(images_.size()); }
  std::uint8_t operator()(std::uint8_t point) const { return images_[point]; }
  std::span<const std::uint8_t> images() const { return images_; }

  bool is_identity() const;

  Permutation operator*(const Permutation& rhs) const;
  Permutation inverse() const;
  // g^-1 * (*this) * g
  Permutation conjugated_by(const Permutation& g) const;

  friend auto operator<=>(const Permutation&, const Permutation&) = default;

  std::size_t hash() const;

 private:
  std::vector<std::uint8_t> images_;
};

struct PermutationHash {
  std::size_t operator()(const Permutation& p) const { return p.hash(); }
};

// a^-1 b^-1 a b
Permutation commutator(const Permutation& a, const Permutation& b);

// p^n by square-and-multiply; negative n allowed.
Permutation power(const Permutation& p, long long n);

// Smallest n >= 1 with p^n = identity.
int element_order(const Permutation& p);

// Disjoint-cycle text with 1-indexed points: "(1 2 3)(4 5)"; "()" is the
// identity. Commas may be used instead of spaces inside a cycle.
Permutation parse_cycles(unsigned degree, std::string_view text);
std::string format_cycles(const Permutation& p);

}  // namespace ocw

#endif
