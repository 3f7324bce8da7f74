#include "blockfunctor/frobenius.hpp"

#include <string>

#include "blockfunctor/errors.hpp"
#include "blockfunctor/group_algorithms.hpp"

namespace blockfunctor {

namespace {

using Matrix = std::vector<unsigned long long>;

Matrix multiply(const Matrix& a, const Matrix& b, std::size_t n, unsigned long long p) {
  Matrix c(n * n, 0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t j = 0; j < n; ++j) c[i * n + j] = (c[i * n + j] + a[i * n + k] * b[k * n + j]) % p;
  return c;
}

Matrix identity(std::size_t n) {
  Matrix m(n * n, 0);
  for (std::size_t i = 0; i < n; ++i) m[i * n + i] = 1;
  return m;
}

unsigned long long inverse_mod(unsigned long long a, unsigned long long p) {
  unsigned long long result = 1, e = p - 2;
  a %= p;
  while (e > 0) {
    if (e & 1u) result = result * a % p;
    a = a * a % p;
    e >>= 1u;
  }
  return result;
}

std::size_t rank_mod(Matrix m, std::size_t n, unsigned long long p) {
  std::size_t rank = 0;
  for (std::size_t col = 0; col < n && rank < n; ++col) {
    std::size_t pivot = rank;
    while (pivot < n && m[pivot * n + col] == 0) ++pivot;
    if (pivot == n) continue;
    for (std::size_t j = 0; j < n; ++j) std::swap(m[pivot * n + j], m[rank * n + j]);
    const unsigned long long inv = inverse_mod(m[rank * n + col], p);
    for (std::size_t i = 0; i < n; ++i) {
      if (i == rank || m[i * n + col] == 0) continue;
      const unsigned long long f = m[i * n + col] * inv % p;
      for (std::size_t j = 0; j < n; ++j) m[i * n + j] = (m[i * n + j] + (p - f) * m[rank * n + j]) % p;
    }
    ++rank;
  }
  return rank;
}

std::vector<unsigned long long> decode(std::size_t point, std::size_t n, unsigned long long p) {
  std::vector<unsigned long long> v(n);
  for (std::size_t i = 0; i < n; ++i) {
    v[i] = point % p;
    point /= p;
  }
  return v;
}

std::size_t encode(const std::vector<unsigned long long>& v, unsigned long long p) {
  std::size_t point = 0;
  for (std::size_t i = v.size(); i-- > 0;) point = point * p + v[i];
  return point;
}

std::vector<unsigned long long> apply(const Matrix& m, const std::vector<unsigned long long>& v,
                                      unsigned long long p) {
  const std::size_t n = v.size();
  std::vector<unsigned long long> out(n, 0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) out[i] = (out[i] + m[i * n + j] * v[j]) % p;
  return out;
}

std::string vector_string(const std::vector<unsigned long long>& v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + std::to_string(v[i]);
  return out + ")";
}

}  // namespace

FrobeniusGroup frobenius_group(const MatrixModP& input) {
  const unsigned long long p = input.p;
  const std::size_t n = input.rank;
  require_prime(p);
  if (n == 0) throw DomainError("frobenius: rank must be positive");
  if (input.entries.size() != n * n)
    throw DomainError("frobenius: expected " + std::to_string(n * n) + " matrix entries, got " +
                      std::to_string(input.entries.size()));
  Matrix m(input.entries);
  for (auto& x : m) x %= p;
  if (rank_mod(m, n, p) != n) throw DomainError("frobenius: matrix is singular mod " + std::to_string(p));

  unsigned long long points = 1;
  for (std::size_t i = 0; i < n; ++i) {
    points *= p;
    if (points > (1ull << 20)) throw SizeBoundError("frobenius: p^rank is too large");
  }

  // Multiplicative order, then freeness of every nontrivial power.
  std::vector<Matrix> powers{identity(n), m};
  while (powers.back() != identity(n)) powers.push_back(multiply(powers.back(), m, n, p));
  const std::size_t order = powers.size() - 1;
  if (order % p == 0)
    throw DomainError("frobenius: matrix order " + std::to_string(order) + " is divisible by p = " +
                      std::to_string(p));
  for (std::size_t j = 1; j < order; ++j) {
    for (std::size_t point = 1; point < points; ++point) {
      const auto v = decode(point, n, p);
      if (apply(powers[j], v, p) == v)
        throw DomainError("frobenius: action is not free, M^" + std::to_string(j) +
                          " fixes the nonzero vector " + vector_string(v));
    }
  }

  const std::size_t degree = static_cast<std::size_t>(points);
  std::vector<Permutation> translations;
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<Point> images(degree);
    for (std::size_t point = 0; point < degree; ++point) {
      auto v = decode(point, n, p);
      v[i] = (v[i] + 1) % p;
      images[point] = static_cast<Point>(encode(v, p));
    }
    translations.push_back(Permutation::from_images(std::move(images)));
  }
  std::vector<Point> images(degree);
  for (std::size_t point = 0; point < degree; ++point)
    images[point] = static_cast<Point>(encode(apply(m, decode(point, n, p), p), p));
  const Permutation linear = Permutation::from_images(std::move(images));

  std::vector<Permutation> gens = translations;
  gens.push_back(linear);
  FrobeniusGroup out{PermGroup::from_generators(degree, std::move(gens)),
                     PermGroup::from_generators(degree, translations),
                     PermGroup::from_generators(degree, {linear}), order};
  if (out.group.order() != Order(points) * order)
    throw InternalError("frobenius: constructed group has unexpected order " + out.group.order().str());
  return out;
}

}  // namespace blockfunctor
