#pragma once

// Finitely generated abelian groups in Smith normal form, group and commutative
// monoid presentations.

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "kgw/util/error.hpp"

namespace kgw::cat {

struct AbelianGroupSNF {
  int rank = 0;
  std::vector<std::int64_t> torsion;  // each >= 2, each dividing the next

  bool is_trivial() const { return rank == 0 && torsion.empty(); }
  // "0", "Z", "Z^2 x Z/2 x Z/4"
  std::string to_string() const {
    std::vector<std::string> parts;
    for (auto t : torsion) parts.push_back("Z/" + std::to_string(t));
    if (rank == 1) parts.insert(parts.begin(), "Z");
    if (rank > 1) parts.insert(parts.begin(), "Z^" + std::to_string(rank));
    if (parts.empty()) return "0";
    std::string s = parts[0];
    for (std::size_t k = 1; k < parts.size(); ++k) s += " x " + parts[k];
    return s;
  }
  friend bool operator==(const AbelianGroupSNF&, const AbelianGroupSNF&) = default;
};

using Matrix = std::vector<std::vector<std::int64_t>>;

namespace detail {
inline std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw SizeLimit("integer overflow in Smith normal form");
  return r;
}
inline std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw SizeLimit("integer overflow in Smith normal form");
  return r;
}
// row t += q * row s
inline void add_row(Matrix& m, std::size_t t, std::size_t s, std::int64_t q) {
  for (std::size_t j = 0; j < m[t].size(); ++j)
    if (m[s][j]) m[t][j] = checked_add(m[t][j], checked_mul(q, m[s][j]));
}
// column t += q * column s
inline void add_col(Matrix& m, std::size_t t, std::size_t s, std::int64_t q) {
  for (auto& row : m)
    if (row[s]) row[t] = checked_add(row[t], checked_mul(q, row[s]));
}
}  // namespace detail

// Nonzero diagonal of the Smith normal form: positive, each dividing the next.
inline std::vector<std::int64_t> smith_diagonal(Matrix m) {
  const std::size_t rows = m.size();
  const std::size_t cols = rows ? m[0].size() : 0;
  for (const auto& row : m)
    if (row.size() != cols) throw TypeMismatch("ragged relation matrix");
  std::vector<std::int64_t> diag;
  for (std::size_t r = 0; r < std::min(rows, cols); ++r) {
    for (;;) {
      std::size_t pi = rows, pj = cols;
      std::int64_t best = 0;
      for (std::size_t i = r; i < rows; ++i)
        for (std::size_t j = r; j < cols; ++j)
          if (m[i][j] && (best == 0 || std::llabs(m[i][j]) < best)) {
            best = std::llabs(m[i][j]);
            pi = i;
            pj = j;
          }
      if (best == 0) return diag;
      std::swap(m[r], m[pi]);
      if (pj != r)
        for (auto& row : m) std::swap(row[r], row[pj]);
      const std::int64_t p = m[r][r];
      bool clean = true;
      for (std::size_t i = r + 1; i < rows; ++i)
        if (m[i][r]) {
          detail::add_row(m, i, r, -(m[i][r] / p));
          if (m[i][r]) clean = false;
        }
      for (std::size_t j = r + 1; j < cols; ++j)
        if (m[r][j]) {
          detail::add_col(m, j, r, -(m[r][j] / p));
          if (m[r][j]) clean = false;
        }
      if (!clean) continue;
      // enforce the divisibility chain
      bool divides = true;
      for (std::size_t i = r + 1; i < rows && divides; ++i)
        for (std::size_t j = r + 1; j < cols; ++j)
          if (m[i][j] % p) {
            detail::add_row(m, r, i, 1);
            divides = false;
            break;
          }
      if (divides) break;
    }
    diag.push_back(std::llabs(m[r][r]));
  }
  return diag;
}

// Z^cols modulo the row lattice.
inline AbelianGroupSNF cokernel(const Matrix& relations, std::size_t cols) {
  for (const auto& row : relations)
    if (row.size() != cols) throw TypeMismatch("relation of the wrong length");
  const auto diag = smith_diagonal(relations);
  AbelianGroupSNF g;
  g.rank = static_cast<int>(cols - diag.size());
  for (auto d : diag)
    if (d > 1) g.torsion.push_back(d);
  return g;
}

// Words are sequences of nonzero integers: k stands for generator k-1, -k for
// its inverse.
struct GroupPresentation {
  std::vector<std::string> generators;
  std::vector<std::vector<int>> relations;

  void validate() const {
    for (const auto& w : relations)
      for (int x : w)
        if (x == 0 || static_cast<std::size_t>(std::abs(x)) > generators.size())
          throw TypeMismatch("relation letter " + std::to_string(x) + " outside the generators");
  }
};

inline AbelianGroupSNF abelianize(const GroupPresentation& p) {
  p.validate();
  Matrix m;
  m.reserve(p.relations.size());
  for (const auto& w : p.relations) {
    std::vector<std::int64_t> row(p.generators.size(), 0);
    for (int x : w) row[std::abs(x) - 1] += x > 0 ? 1 : -1;
    if (std::any_of(row.begin(), row.end(), [](std::int64_t v) { return v != 0; })) m.push_back(std::move(row));
  }
  return cokernel(m, p.generators.size());
}

// Commutative monoid: generators and relations lhs = rhs between N-vectors.
struct CommMonoidPresentation {
  using Vec = std::vector<std::int64_t>;
  std::vector<std::string> generators;
  std::vector<std::pair<Vec, Vec>> relations;  // stored with lhs <= rhs

  void add_relation(Vec a, Vec b) {
    if (a.size() != generators.size() || b.size() != generators.size())
      throw TypeMismatch("relation of the wrong length");
    for (auto v : a)
      if (v < 0) throw TypeMismatch("monoid relation with a negative entry");
    for (auto v : b)
      if (v < 0) throw TypeMismatch("monoid relation with a negative entry");
    if (a == b) return;
    if (b < a) std::swap(a, b);
    auto rel = std::pair{std::move(a), std::move(b)};
    if (std::find(relations.begin(), relations.end(), rel) == relations.end()) relations.push_back(std::move(rel));
  }
  bool has_relation(const Vec& a, const Vec& b) const {
    const auto rel = a <= b ? std::pair{a, b} : std::pair{b, a};
    return a == b || std::find(relations.begin(), relations.end(), rel) != relations.end();
  }
  bool is_free() const { return relations.empty(); }
};

inline AbelianGroupSNF grothendieck_group(const CommMonoidPresentation& p) {
  Matrix m;
  for (const auto& [a, b] : p.relations) {
    std::vector<std::int64_t> row(p.generators.size());
    for (std::size_t k = 0; k < row.size(); ++k) row[k] = a[k] - b[k];
    m.push_back(std::move(row));
  }
  return cokernel(m, p.generators.size());
}

inline AbelianGroupSNF direct_sum(const AbelianGroupSNF& a, const AbelianGroupSNF& b) {
  // rebuild as a diagonal matrix and renormalise
  std::vector<std::int64_t> d(a.torsion);
  d.insert(d.end(), b.torsion.begin(), b.torsion.end());
  Matrix m(d.size(), std::vector<std::int64_t>(d.size() + a.rank + b.rank, 0));
  for (std::size_t k = 0; k < d.size(); ++k) m[k][k] = d[k];
  return cokernel(m, d.size() + a.rank + b.rank);
}

}  // namespace kgw::cat
