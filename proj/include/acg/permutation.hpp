#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

namespace acg {

/// Points are 0-based internally; cycle notation is 1-based.
using Point = std::uint32_t;

/// A bijection of {0, ..., degree-1} stored as an image table.
///
/// Groups act on the right: point^(p*q) = (point^p)^q, and conjugation is
/// x^g = g^-1 x g. Values are immutable; equality and ordering are those of
/// the image table.
class Permutation {
 public:
  Permutation() = default;

  /// Identity of the given degree.
  explicit Permutation(std::size_t degree);

  /// Throws PreconditionError if `images` is not a bijection.
  static Permutation from_images(std::vector<Point> images);

  std::size_t degree() const noexcept { return images_.size(); }
  Point operator[](Point point) const noexcept { return images_[point]; }
  const std::vector<Point>& images() const noexcept { return images_; }

  /// `*this` followed by `other`.
  Permutation operator*(const Permutation& other) const;
  Permutation inverse() const;
  Permutation pow(std::int64_t exponent) const;

  bool is_identity() const noexcept;
  std::uint64_t order() const;
  /// Smallest point moved, or degree() for the identity.
  Point first_moved_point() const noexcept;

  /// Nontrivial cycles, each starting at its least point, sorted by that point.
  std::vector<std::vector<Point>> cycles() const;

  /// Canonical 1-based cycle notation, e.g. "(1 2 3)(4 5)". The identity
  /// prints as "()".
  std::string to_string() const;

  auto operator<=>(const Permutation&) const = default;
  bool operator==(const Permutation&) const = default;

 private:
  std::vector<Point> images_;
};

struct PermutationHash {
  std::size_t operator()(const Permutation& p) const noexcept;
};

/// Parses disjoint cycles in 1-based notation. Points inside a cycle may be
/// separated by whitespace or commas; "()" and "" denote the identity.
Permutation parse_permutation(std::string_view text, std::size_t degree);

/// p then q. Throws DegreeMismatch on unequal degrees.
Permutation compose(const Permutation& p, const Permutation& q);

/// x^g = g^-1 x g.
Permutation conjugate(const Permutation& x, const Permutation& g);

/// [a, g] = a^-1 g^-1 a g, so that a [a, g] = a^g.
Permutation commutator(const Permutation& a, const Permutation& g);

std::string to_string(const std::vector<Permutation>& perms);

}  // namespace acg
