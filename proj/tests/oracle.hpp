#pragma once

// Independent reference computations for the unit tests. Nothing here calls
// the library routine it is used to check.

#include <algorithm>
#include <numeric>
#include <set>
#include <vector>

#include "nsphere/matrix.hpp"
#include "nsphere/rational.hpp"

namespace oracle {

using nsphere::BigRational;
using nsphere::RationalMatrix;

/// Every perfect matching of {1..k} as a partner array, obtained by reading
/// each permutation of {1..k} as consecutive pairs and deduplicating.
inline std::set<std::vector<int>> matchings_by_permutation(int k) {
  std::set<std::vector<int>> out;
  if (k % 2) return out;
  std::vector<int> perm(static_cast<std::size_t>(k));
  std::iota(perm.begin(), perm.end(), 1);
  do {
    std::vector<int> partner(static_cast<std::size_t>(k));
    for (int i = 0; i < k; i += 2) {
      partner[static_cast<std::size_t>(perm[i] - 1)] = perm[i + 1];
      partner[static_cast<std::size_t>(perm[i + 1] - 1)] = perm[i];
    }
    out.insert(partner);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

/// Crossings by scanning all ordered 4-tuples a < c < b < d.
inline int crossings_by_tuples(const std::vector<int>& partner) {
  const int k = static_cast<int>(partner.size());
  int count = 0;
  for (int a = 1; a <= k; ++a)
    for (int c = a + 1; c <= k; ++c)
      for (int b = c + 1; b <= k; ++b)
        for (int d = b + 1; d <= k; ++d)
          if (partner[a - 1] == b && partner[c - 1] == d) ++count;
  return count;
}

/// Components of the union graph by union-find.
inline int components_union_find(const std::vector<int>& p, const std::vector<int>& q) {
  std::vector<int> parent(p.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[static_cast<std::size_t>(x)] != x) x = parent[static_cast<std::size_t>(x)];
    return x;
  };
  auto unite = [&](int a, int b) { parent[static_cast<std::size_t>(find(a))] = find(b); };
  for (std::size_t i = 0; i < p.size(); ++i) {
    unite(static_cast<int>(i), p[i] - 1);
    unite(static_cast<int>(i), q[i] - 1);
  }
  int roots = 0;
  for (std::size_t i = 0; i < p.size(); ++i) roots += find(static_cast<int>(i)) == static_cast<int>(i);
  return roots;
}

/// Plain Gaussian elimination over the rationals (no fraction-free tricks).
inline BigRational determinant_gauss(RationalMatrix m) {
  const std::size_t n = m.rows();
  BigRational det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && m(p, c) == 0) ++p;
    if (p == n) return 0;
    if (p != c) {
      for (std::size_t j = 0; j < n; ++j) std::swap(m(p, j), m(c, j));
      det = -det;
    }
    det *= m(c, c);
    for (std::size_t r = c + 1; r < n; ++r) {
      const BigRational f = m(r, c) / m(c, c);
      for (std::size_t j = c; j < n; ++j) m(r, j) -= f * m(c, j);
    }
  }
  return det;
}

inline std::size_t rank_gauss(RationalMatrix m) {
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t p = r;
    while (p < m.rows() && m(p, c) == 0) ++p;
    if (p == m.rows()) continue;
    for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(r, j));
    for (std::size_t i = r + 1; i < m.rows(); ++i) {
      const BigRational f = m(i, c) / m(r, c);
      for (std::size_t j = c; j < m.cols(); ++j) m(i, j) -= f * m(r, j);
    }
    ++r;
  }
  return r;
}

/// Evaluates a polynomial given as (coefficient, factor-exponent) products:
/// prod_i (poly_i(n))^{e_i}, poly_i given by its integer coefficients,
/// lowest degree first.
struct Factor {
  std::vector<long> coeffs;
  unsigned power;
};

inline BigRational eval_factored(const std::vector<Factor>& factors, long n) {
  BigRational out = 1;
  for (const auto& f : factors) {
    BigRational v = 0;
    BigRational x = 1;
    for (long c : f.coeffs) {
      v += x * c;
      x *= n;
    }
    for (unsigned i = 0; i < f.power; ++i) out *= v;
  }
  return out;
}

}  // namespace oracle
