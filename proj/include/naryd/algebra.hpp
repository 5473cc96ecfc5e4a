#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "naryd/matrix.hpp"

namespace naryd {

/// Coordinates of an algebra element in the chosen basis.
using Vector = RationalVector;
/// Basis indices, 0-based.
using IndexTuple = std::vector<std::size_t>;

Vector unit_vector(std::size_t dim, std::size_t i);
bool is_zero(const Vector& v);
Vector operator+(const Vector& a, const Vector& b);
Vector operator-(const Vector& a, const Vector& b);
Vector operator*(const Rational& s, const Vector& v);

/// Endomorphism in the row-vector convention [φ(x)] = [x][φ]:
/// row i of the matrix holds the coordinates of φ(e_i).
class LinearMap {
 public:
  LinearMap() = default;
  explicit LinearMap(RationalMatrix matrix);

  static LinearMap zero(std::size_t dim) { return LinearMap(RationalMatrix(dim, dim)); }
  static LinearMap identity(std::size_t dim) { return LinearMap(RationalMatrix::identity(dim)); }
  /// Inverse of flatten(): entry (i, j) is flat[i·dim + j].
  static LinearMap from_flat(std::size_t dim, const RationalVector& flat);

  std::size_t dim() const { return matrix_.rows(); }
  const RationalMatrix& matrix() const { return matrix_; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return matrix_(i, j); }

  Vector apply(const Vector& x) const;
  RationalVector flatten() const { return matrix_.data(); }
  bool is_zero() const;

  /// Composition "first this, then other": x ↦ other(this(x)).
  LinearMap then(const LinearMap& other) const { return LinearMap(matrix_ * other.matrix_); }
  LinearMap operator+(const LinearMap& o) const { return LinearMap(matrix_ + o.matrix_); }
  LinearMap operator-(const LinearMap& o) const { return LinearMap(matrix_ - o.matrix_); }

  friend bool operator==(const LinearMap& a, const LinearMap& b) { return a.matrix_ == b.matrix_; }

 private:
  RationalMatrix matrix_;
};

/// Commutator [A, B] = AB − BA of operators acting on the right.
LinearMap commutator(const LinearMap& a, const LinearMap& b);

/// Finite-dimensional algebra with one anticommutative n-ary operation,
/// given by structure constants on strictly increasing basis tuples.
///
/// The bracket of an arbitrary ordered basis tuple is the stored value of the
/// sorted tuple times the sign of the sorting permutation, and zero when an
/// index repeats. Immutable after construction.
class NAryAlgebra {
 public:
  using ProductTable = std::map<IndexTuple, Vector>;

  /// Throws std::invalid_argument on arity < 2, dim < 1, wrong name count,
  /// non-increasing or out-of-range keys, or values of the wrong length.
  NAryAlgebra(std::size_t arity, std::size_t dim, std::vector<std::string> basis_names, ProductTable products);

  std::size_t arity() const { return arity_; }
  std::size_t dim() const { return dim_; }
  const std::vector<std::string>& basis_names() const { return names_; }
  /// Nonzero products only, keyed by strictly increasing tuples.
  const ProductTable& products() const { return products_; }

  /// Bracket of basis vectors e_{i_1}, …, e_{i_n} in the given order.
  Vector basis_bracket(std::span<const std::size_t> indices) const;

  /// Multilinear bracket [x_1, …, x_n]. Throws on wrong arity or dimension.
  Vector bracket(std::span<const Vector> args) const;

  /// out += scale · [e_{i_1}, …, e_{i_n}].
  void accumulate_basis_bracket(std::span<const std::size_t> indices, const Rational& scale, Vector& out) const;

  friend bool operator==(const NAryAlgebra& a, const NAryAlgebra& b) {
    return a.arity_ == b.arity_ && a.dim_ == b.dim_ && a.names_ == b.names_ && a.products_ == b.products_;
  }

 private:
  struct Term {
    std::size_t index;
    Rational coeff;
  };
  using SparseVector = std::vector<Term>;

  // Signed lookup of an ordered tuple; nullptr when the bracket vanishes.
  const SparseVector* lookup(std::span<const std::size_t> indices, int& sign) const;

  std::size_t arity_;
  std::size_t dim_;
  std::vector<std::string> names_;
  ProductTable products_;
  std::vector<SparseVector> sparse_;
  std::vector<IndexTuple> sparse_keys_;
  // Dense index over all ordered tuples when d^n is small: slot + 1 with the
  // permutation sign folded in (0 = vanishing).
  std::vector<std::int32_t> dense_;
};

/// Right multiplication R_{x_2,…,x_n}: z ↦ [z, x_2, …, x_n].
LinearMap right_mul(const NAryAlgebra& alg, std::span<const Vector> fixed);

/// J(x_1,…,x_n; y_2,…,y_n) = [[x_1,…,x_n], y_2,…,y_n] − Σ_i [x_1,…,[x_i, y_2,…,y_n],…,x_n].
Vector jacobian(const NAryAlgebra& alg, std::span<const Vector> xs, std::span<const Vector> ys);

/// Basis vectors e_{i} for each index.
std::vector<Vector> basis_vectors(const NAryAlgebra& alg, std::span<const std::size_t> indices);

}  // namespace naryd
