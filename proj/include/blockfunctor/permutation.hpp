#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

namespace blockfunctor {

using Point = std::uint32_t;

// A bijection of {0, ..., degree-1}. Points are 0-based in memory and 1-based
// in every textual form (cycle notation, files, reports).
//
// Composition reads left to right: (a * b) applies a first, then b, so
// (a * b)(x) == b(a(x)). Conjugation follows ^g x = g * x * g^-1.
class Permutation {
 public:
  Permutation() = default;

  static Permutation identity(std::size_t degree);

  // Throws DomainError unless `images` is a bijection of {0..n-1}.
  static Permutation from_images(std::vector<Point> images);

  // Parses cycle notation such as "(1,2,3)(4,5)" or "()" with 1-based points.
  static Permutation from_cycles(std::size_t degree, const std::string& text);

  std::size_t degree() const { return images_.size(); }
  Point operator()(Point x) const { return images_[x]; }
  std::span<const Point> images() const { return images_; }

  bool is_identity() const;
  Permutation inverse() const;
  Permutation pow(long long exponent) const;
  std::size_t order() const;

  // Smallest point moved, or degree() for the identity.
  Point first_moved_point() const;

  std::string to_cycle_string() const;

  friend Permutation operator*(const Permutation& a, const Permutation& b);
  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation& a, const Permutation& b) {
    return a.images_ <=> b.images_;
  }

 private:
  explicit Permutation(std::vector<Point> images) : images_(std::move(images)) {}

  std::vector<Point> images_;
};

// g * x * g^-1
Permutation conjugate(const Permutation& g, const Permutation& x);

struct PermutationHash {
  std::size_t operator()(const Permutation& p) const noexcept;
};

}  // namespace blockfunctor
