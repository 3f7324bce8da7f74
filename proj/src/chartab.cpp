#include "blockfunctor/chartab.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "blockfunctor/errors.hpp"
#include "blockfunctor/group_algorithms.hpp"

namespace blockfunctor {

namespace modp {

std::uint64_t mul(std::uint64_t a, std::uint64_t b, std::uint64_t q) { return a * b % q; }

std::uint64_t pow(std::uint64_t a, std::uint64_t e, std::uint64_t q) {
  std::uint64_t result = 1 % q;
  a %= q;
  while (e > 0) {
    if (e & 1u) result = result * a % q;
    a = a * a % q;
    e >>= 1u;
  }
  return result;
}

std::uint64_t inv(std::uint64_t a, std::uint64_t q) {
  if (a % q == 0) throw InternalError("inverse of zero residue");
  return pow(a, q - 2, q);
}

}  // namespace modp

namespace {

using Vec = std::vector<std::uint64_t>;
using Mat = std::vector<Vec>;

std::uint64_t sub_mod(std::uint64_t a, std::uint64_t b, std::uint64_t q) {
  return (a + q - b) % q;
}

// Row-reduces in place; returns pivot columns. Zero rows are dropped.
std::vector<std::size_t> row_reduce(Mat& rows, std::uint64_t q) {
  std::vector<std::size_t> pivots;
  if (rows.empty()) return pivots;
  const std::size_t cols = rows.front().size();
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows.size(); ++c) {
    std::size_t r = rank;
    while (r < rows.size() && rows[r][c] == 0) ++r;
    if (r == rows.size()) continue;
    std::swap(rows[r], rows[rank]);
    const std::uint64_t scale = modp::inv(rows[rank][c], q);
    for (auto& x : rows[rank]) x = x * scale % q;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == rank || rows[i][c] == 0) continue;
      const std::uint64_t f = rows[i][c];
      for (std::size_t j = 0; j < cols; ++j) rows[i][j] = sub_mod(rows[i][j], f * rows[rank][j] % q, q);
    }
    pivots.push_back(c);
    ++rank;
  }
  rows.resize(rank);
  return pivots;
}

// Basis of {x : A x = 0} for a square matrix A.
Mat null_space(Mat a, std::uint64_t q) {
  const std::size_t n = a.size();
  const auto pivots = row_reduce(a, q);
  std::vector<bool> is_pivot(n, false);
  for (auto c : pivots) is_pivot[c] = true;
  Mat basis;
  for (std::size_t free = 0; free < n; ++free) {
    if (is_pivot[free]) continue;
    Vec x(n, 0);
    x[free] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = sub_mod(0, a[r][free], q);
    basis.push_back(std::move(x));
  }
  return basis;
}

// Characteristic polynomial via Hessenberg reduction; coefficients from the
// constant term up, monic of degree n.
Vec characteristic_polynomial(Mat h, std::uint64_t q) {
  const std::size_t n = h.size();
  for (std::size_t m = 1; m + 1 < n; ++m) {
    std::size_t i = m;
    while (i < n && h[i][m - 1] == 0) ++i;
    if (i == n) continue;
    if (i != m) {
      std::swap(h[i], h[m]);
      for (auto& row : h) std::swap(row[i], row[m]);
    }
    const std::uint64_t pivot_inv = modp::inv(h[m][m - 1], q);
    for (std::size_t r = m + 1; r < n; ++r) {
      if (h[r][m - 1] == 0) continue;
      const std::uint64_t u = h[r][m - 1] * pivot_inv % q;
      for (std::size_t c = 0; c < n; ++c) h[r][c] = sub_mod(h[r][c], u * h[m][c] % q, q);
      for (std::size_t c = 0; c < n; ++c) h[c][m] = (h[c][m] + u * h[c][r]) % q;
    }
  }
  std::vector<Vec> p(n + 1);
  p[0] = Vec{1};
  for (std::size_t m = 1; m <= n; ++m) {
    // (x - h[m-1][m-1]) * p[m-1]
    Vec next(m + 1, 0);
    for (std::size_t k = 0; k < p[m - 1].size(); ++k) {
      next[k + 1] = (next[k + 1] + p[m - 1][k]) % q;
      next[k] = sub_mod(next[k], h[m - 1][m - 1] * p[m - 1][k] % q, q);
    }
    std::uint64_t t = 1;
    for (std::size_t i = 1; i < m; ++i) {
      t = t * h[m - i][m - i - 1] % q;
      const std::uint64_t coeff = t * h[m - i - 1][m - 1] % q;
      for (std::size_t k = 0; k < p[m - i - 1].size(); ++k)
        next[k] = sub_mod(next[k], coeff * p[m - i - 1][k] % q, q);
    }
    p[m] = std::move(next);
  }
  return p[n];
}

std::uint64_t evaluate(const Vec& poly, std::uint64_t x, std::uint64_t q) {
  std::uint64_t acc = 0;
  for (std::size_t k = poly.size(); k-- > 0;) acc = (acc * x + poly[k]) % q;
  return acc;
}

// A common eigenspace of the class matrices, kept as reduced row-echelon basis.
struct Subspace {
  Mat basis;
  std::vector<std::size_t> pivots;
};

}  // namespace

std::uint64_t CharacterTable::value(std::size_t chi, Index element) const {
  return values[chi][group.class_of()[element]];
}

std::uint64_t character_modulus(std::size_t exponent, std::size_t order, std::uint64_t cap) {
  for (std::uint64_t q = 1 + exponent; q < cap; q += exponent)
    if (q > 2 * order && is_prime(q)) return q;
  throw DomainError("no prime q = 1 mod " + std::to_string(exponent) + " with q > " +
                    std::to_string(2 * order) + " below the cap " + std::to_string(cap));
}

CharacterTable character_table(const PermGroup& group, std::uint64_t prime_cap) {
  const std::size_t n = group.size();
  const auto& class_of = group.class_of();
  const std::size_t r = group.class_representatives().size();

  CharacterTable table;
  table.group = group;
  table.class_representatives = group.class_representatives();
  table.class_sizes = group.class_sizes();
  for (Index rep : table.class_representatives)
    table.inverse_class.push_back(class_of[group.inverse(rep)]);

  std::size_t exponent = 1;
  for (Index x = 0; x < n; ++x) exponent = std::lcm(exponent, group.element_order(x));
  if (prime_cap > (1ull << 32)) prime_cap = 1ull << 32;
  const std::uint64_t q = character_modulus(exponent, n, prime_cap);
  table.modulus = q;

  std::vector<std::vector<Index>> members(r);
  for (Index x = 0; x < n; ++x) members[class_of[x]].push_back(x);

  // (M_j)_{ik} = #{x in C_j : x^-1 z_k in C_i}, so that omega_j omega_i =
  // sum_k (M_j)_{ik} omega_k for every central character omega.
  auto class_matrix = [&](std::size_t j) {
    Mat m(r, Vec(r, 0));
    for (std::size_t k = 0; k < r; ++k) {
      const Index z = table.class_representatives[k];
      for (Index x : members[j]) ++m[class_of[group.multiply(group.inverse(x), z)]][k];
    }
    return m;
  };

  Subspace whole;
  for (std::size_t i = 0; i < r; ++i) {
    Vec e(r, 0);
    e[i] = 1;
    whole.basis.push_back(std::move(e));
    whole.pivots.push_back(i);
  }
  std::vector<Subspace> spaces{std::move(whole)};

  for (std::size_t j = 1; j < r; ++j) {
    if (std::all_of(spaces.begin(), spaces.end(), [](const Subspace& s) { return s.basis.size() == 1; }))
      break;
    const Mat m = class_matrix(j);
    std::vector<Subspace> refined;
    for (auto& space : spaces) {
      const std::size_t d = space.basis.size();
      if (d == 1) {
        refined.push_back(std::move(space));
        continue;
      }
      // Restriction of M_j to the space in echelon coordinates.
      Mat images(d, Vec(r, 0));
      for (std::size_t l = 0; l < d; ++l)
        for (std::size_t i = 0; i < r; ++i) {
          std::uint64_t acc = 0;
          for (std::size_t k = 0; k < r; ++k) acc = (acc + m[i][k] * space.basis[l][k]) % q;
          images[l][i] = acc;
        }
      Mat restricted(d, Vec(d, 0));
      for (std::size_t l = 0; l < d; ++l)
        for (std::size_t t = 0; t < d; ++t) restricted[t][l] = images[l][space.pivots[t]];

      const Vec poly = characteristic_polynomial(restricted, q);
      std::size_t found = 0;
      for (std::uint64_t lambda = 0; lambda < q && found < d; ++lambda) {
        if (evaluate(poly, lambda, q) != 0) continue;
        Mat shifted = restricted;
        for (std::size_t t = 0; t < d; ++t) shifted[t][t] = sub_mod(shifted[t][t], lambda, q);
        Mat coords = null_space(shifted, q);
        Subspace eigen;
        for (const auto& c : coords) {
          Vec v(r, 0);
          for (std::size_t l = 0; l < d; ++l)
            for (std::size_t i = 0; i < r; ++i) v[i] = (v[i] + c[l] * space.basis[l][i]) % q;
          eigen.basis.push_back(std::move(v));
        }
        eigen.pivots = row_reduce(eigen.basis, q);
        found += eigen.basis.size();
        refined.push_back(std::move(eigen));
      }
      if (found != d)
        throw InternalError("class matrix " + std::to_string(j) + " is not diagonalisable over F_" +
                            std::to_string(q));
    }
    spaces = std::move(refined);
  }
  if (spaces.size() != r)
    throw InternalError("class matrices did not separate all " + std::to_string(r) + " characters");

  struct Row {
    std::size_t degree;
    Vec values;
  };
  std::vector<Row> rows;
  const std::uint64_t order_mod = n % q;
  for (const auto& space : spaces) {
    Vec w = space.basis.front();
    if (w[0] == 0) throw InternalError("central character vanishes on the identity class");
    const std::uint64_t scale = modp::inv(w[0], q);
    for (auto& x : w) x = x * scale % q;

    // chi(1)^2 = |G| / sum_k omega_k omega_{k*} / h_k
    std::uint64_t s = 0;
    for (std::size_t k = 0; k < r; ++k)
      s = (s + w[k] * w[table.inverse_class[k]] % q * modp::inv(table.class_sizes[k] % q, q)) % q;
    const std::uint64_t square = order_mod * modp::inv(s, q) % q;
    std::size_t degree = 0;
    for (std::size_t d = 1; d * d <= n; ++d)
      if (d * d % q == square) {
        degree = d;
        break;
      }
    if (degree == 0) throw InternalError("character degree does not lift to an integer");

    Vec values(r);
    for (std::size_t k = 0; k < r; ++k)
      values[k] = w[k] * degree % q * modp::inv(table.class_sizes[k] % q, q) % q;
    rows.push_back({degree, std::move(values)});
  }
  std::sort(rows.begin(), rows.end(), [](const Row& a, const Row& b) {
    return a.degree != b.degree ? a.degree < b.degree : a.values < b.values;
  });
  for (auto& row : rows) {
    table.degrees.push_back(row.degree);
    table.values.push_back(std::move(row.values));
  }
  return table;
}

std::size_t fixed_point_dim(const CharacterTable& table, std::size_t chi, const ElementSet& sub) {
  const std::uint64_t q = table.modulus;
  std::uint64_t sum = 0;
  for (Index h : sub) sum = (sum + table.value(chi, h)) % q;
  const std::uint64_t dim = sum * modp::inv(sub.size() % q, q) % q;
  if (dim > table.degrees[chi])
    throw InternalError("fixed-point dimension residue " + std::to_string(dim) +
                        " exceeds the degree " + std::to_string(table.degrees[chi]));
  return static_cast<std::size_t>(dim);
}

std::size_t fixed_point_dim(const CharacterTable& table, std::size_t chi, const PermGroup& sub) {
  return fixed_point_dim(table, chi, indices_in(table.group, sub));
}

bool rows_orthogonal(const CharacterTable& table) {
  const std::uint64_t q = table.modulus;
  const std::size_t r = table.size();
  const std::uint64_t inv_order = modp::inv(table.group.size() % q, q);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j) {
      std::uint64_t acc = 0;
      for (std::size_t k = 0; k < r; ++k)
        acc = (acc + table.class_sizes[k] % q * table.values[i][k] % q *
                         table.values[j][table.inverse_class[k]]) % q;
      if (acc * inv_order % q != (i == j ? 1u : 0u)) return false;
    }
  return true;
}

bool columns_orthogonal(const CharacterTable& table) {
  const std::uint64_t q = table.modulus;
  const std::size_t r = table.size();
  for (std::size_t k = 0; k < r; ++k)
    for (std::size_t l = 0; l < r; ++l) {
      std::uint64_t acc = 0;
      for (std::size_t i = 0; i < r; ++i)
        acc = (acc + table.values[i][k] * table.values[i][table.inverse_class[l]]) % q;
      const std::uint64_t expected = k == l ? (table.group.size() / table.class_sizes[k]) % q : 0;
      if (acc != expected) return false;
    }
  return true;
}

}  // namespace blockfunctor
