#pragma once

#include <cstdint>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "naryd/algebra.hpp"
#include "naryd/identities.hpp"
#include "naryd/linalg.hpp"

namespace naryd::test {

// Small uniform helpers on raw engine output; keeps draws portable.
inline long pick(std::mt19937_64& g, long lo, long hi) {
  return lo + static_cast<long>(g() % static_cast<std::uint64_t>(hi - lo + 1));
}

inline Rational small_rational(std::mt19937_64& g, long num = 9, long den = 7) {
  return Rational(pick(g, -num, num), pick(g, 1, den));
}

inline Rational nonzero_rational(std::mt19937_64& g) {
  for (;;) {
    Rational r = small_rational(g);
    if (!r.is_zero()) return r;
  }
}

inline Vector random_vector(std::mt19937_64& g, std::size_t dim) {
  Vector v(dim);
  for (auto& x : v) x = small_rational(g);
  return v;
}

inline RationalMatrix random_matrix(std::mt19937_64& g, std::size_t rows, std::size_t cols, int zero_bias = 2) {
  RationalMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j)
      if (pick(g, 0, zero_bias) != 0) m(i, j) = small_rational(g, 5, 3);
  return m;
}

inline NAryAlgebra random_algebra(std::mt19937_64& g, std::size_t arity, std::size_t dim) {
  NAryAlgebra::ProductTable table;
  for (const auto& t : sorted_tuples(dim, arity, false)) {
    if (pick(g, 0, 2) == 0) continue;
    Vector v(dim);
    for (auto& x : v)
      if (pick(g, 0, 2) != 0) x = Rational(pick(g, -2, 2));
    table.emplace(t, v);
  }
  std::vector<std::string> names;
  for (std::size_t i = 0; i < dim; ++i) names.push_back("e" + std::to_string(i + 1));
  return NAryAlgebra(arity, dim, names, table);
}

inline bool is_zero_vector(const RationalVector& v) {
  for (const auto& x : v)
    if (!x.is_zero()) return false;
  return true;
}

// Plain textbook elimination over Q, written separately from the library.
inline std::size_t naive_rank(RationalMatrix m) {
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t p = r;
    while (p < m.rows() && m(p, c).is_zero()) ++p;
    if (p == m.rows()) continue;
    m.swap_rows(p, r);
    for (std::size_t i = r + 1; i < m.rows(); ++i) {
      if (m(i, c).is_zero()) continue;
      const Rational f = m(i, c) / m(r, c);
      for (std::size_t j = c; j < m.cols(); ++j) m(i, j) -= f * m(r, j);
    }
    ++r;
  }
  return r;
}

// φ[e_t] − δ Σ_i [.., φ(e_{t_i}), ..] over every ordered basis tuple; zero iff φ is a δ-derivation.
inline bool defect_vanishes(const NAryAlgebra& alg, const LinearMap& phi, const Rational& delta) {
  const std::size_t d = alg.dim();
  const std::size_t n = alg.arity();
  std::vector<std::size_t> t(n, 0);
  for (;;) {
    std::vector<Vector> args;
    for (auto i : t) args.push_back(unit_vector(d, i));
    Vector lhs = phi.apply(alg.bracket(args));
    for (std::size_t i = 0; i < n; ++i) {
      auto moved = args;
      moved[i] = phi.apply(args[i]);
      lhs = lhs - delta * alg.bracket(moved);
    }
    if (!is_zero(lhs)) return false;
    std::size_t k = n;
    while (k > 0 && ++t[k - 1] == d) t[--k] = 0;
    if (k == 0) return true;
  }
}

}  // namespace naryd::test
