#include "blockfunctor/permutation.hpp"

#include <numeric>

#include "blockfunctor/errors.hpp"

namespace blockfunctor {

Permutation Permutation::identity(std::size_t degree) {
  std::vector<Point> images(degree);
  std::iota(images.begin(), images.end(), Point{0});
  return Permutation(std::move(images));
}

Permutation Permutation::from_images(std::vector<Point> images) {
  std::vector<bool> hit(images.size(), false);
  for (Point x : images) {
    if (x >= images.size() || hit[x])
      throw DomainError("image list is not a bijection");
    hit[x] = true;
  }
  return Permutation(std::move(images));
}

Permutation Permutation::from_cycles(std::size_t degree, const std::string& text) {
  std::vector<Point> images(degree);
  std::iota(images.begin(), images.end(), Point{0});
  std::vector<bool> used(degree, false);

  std::size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t')) ++pos;
  };
  auto fail = [&](const std::string& what) {
    throw DomainError("bad cycle notation \"" + text + "\" at offset " +
                      std::to_string(pos) + ": " + what);
  };

  skip_ws();
  if (pos == text.size()) fail("empty");
  while (pos < text.size()) {
    if (text[pos] != '(') fail("expected '('");
    ++pos;
    skip_ws();
    std::vector<Point> cycle;
    if (pos < text.size() && text[pos] == ')') {
      ++pos;
      skip_ws();
      continue;
    }
    while (true) {
      skip_ws();
      std::size_t start = pos;
      unsigned long value = 0;
      while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') {
        value = value * 10 + static_cast<unsigned long>(text[pos] - '0');
        if (value > degree + 1) value = degree + 1;
        ++pos;
      }
      if (pos == start) fail("expected a point");
      if (value < 1 || value > degree) fail("point out of range");
      Point x = static_cast<Point>(value - 1);
      if (used[x]) fail("repeated point");
      used[x] = true;
      cycle.push_back(x);
      skip_ws();
      if (pos < text.size() && text[pos] == ',') {
        ++pos;
        continue;
      }
      if (pos < text.size() && text[pos] == ')') {
        ++pos;
        break;
      }
      fail("expected ',' or ')'");
    }
    for (std::size_t i = 0; i < cycle.size(); ++i)
      images[cycle[i]] = cycle[(i + 1) % cycle.size()];
    skip_ws();
  }
  return Permutation(std::move(images));
}

bool Permutation::is_identity() const {
  for (std::size_t i = 0; i < images_.size(); ++i)
    if (images_[i] != i) return false;
  return true;
}

Permutation Permutation::inverse() const {
  std::vector<Point> inv(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i)
    inv[images_[i]] = static_cast<Point>(i);
  return Permutation(std::move(inv));
}

Permutation Permutation::pow(long long exponent) const {
  Permutation base = exponent < 0 ? inverse() : *this;
  unsigned long long e = exponent < 0 ? -static_cast<unsigned long long>(exponent)
                                      : static_cast<unsigned long long>(exponent);
  Permutation result = identity(degree());
  while (e > 0) {
    if (e & 1u) result = result * base;
    base = base * base;
    e >>= 1u;
  }
  return result;
}

std::size_t Permutation::order() const {
  std::vector<bool> seen(images_.size(), false);
  std::size_t result = 1;
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (seen[i]) continue;
    std::size_t length = 0;
    for (Point x = static_cast<Point>(i); !seen[x]; x = images_[x]) {
      seen[x] = true;
      ++length;
    }
    result = std::lcm(result, length);
  }
  return result;
}

Point Permutation::first_moved_point() const {
  for (std::size_t i = 0; i < images_.size(); ++i)
    if (images_[i] != i) return static_cast<Point>(i);
  return static_cast<Point>(images_.size());
}

std::string Permutation::to_cycle_string() const {
  std::string out;
  std::vector<bool> seen(images_.size(), false);
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (seen[i] || images_[i] == i) continue;
    out += '(';
    bool first = true;
    for (Point x = static_cast<Point>(i); !seen[x]; x = images_[x]) {
      seen[x] = true;
      if (!first) out += ',';
      out += std::to_string(x + 1);
      first = false;
    }
    out += ')';
  }
  return out.empty() ? "()" : out;
}

Permutation operator*(const Permutation& a, const Permutation& b) {
  std::vector<Point> images(a.images_.size());
  for (std::size_t i = 0; i < images.size(); ++i) images[i] = b.images_[a.images_[i]];
  return Permutation(std::move(images));
}

Permutation conjugate(const Permutation& g, const Permutation& x) {
  return g * x * g.inverse();
}

std::size_t PermutationHash::operator()(const Permutation& p) const noexcept {
  std::size_t h = 1469598103934665603ull;
  for (Point x : p.images()) {
    h ^= x;
    h *= 1099511628211ull;
  }
  return h;
}

}  // namespace blockfunctor
