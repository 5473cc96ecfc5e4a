#pragma once

#include <cstddef>
#include <vector>

#include "naryd/matrix.hpp"

namespace naryd {

struct RrefResult {
  RationalMatrix matrix;
  std::vector<std::size_t> pivot_columns;
  std::size_t rank() const { return pivot_columns.size(); }
};

/// Reduced row echelon form; zero rows are kept at the bottom so the result
/// has the same shape as the input.
RrefResult rref(const RationalMatrix& m);

std::size_t rank(const RationalMatrix& m);

/// A subspace of Q^n stored as the nonzero rows of its RREF basis.
/// The representation is canonical: equal subspaces compare equal.
class SubspaceBasis {
 public:
  explicit SubspaceBasis(std::size_t ambient_dim = 0) : ambient_(ambient_dim) {}

  /// Span of arbitrary (possibly dependent) vectors of length ambient_dim.
  static SubspaceBasis span(std::size_t ambient_dim, const std::vector<RationalVector>& vectors);
  static SubspaceBasis full(std::size_t ambient_dim);

  std::size_t ambient_dim() const { return ambient_; }
  std::size_t dim() const { return vectors_.size(); }
  bool is_zero() const { return vectors_.empty(); }
  const std::vector<RationalVector>& vectors() const { return vectors_; }
  const std::vector<std::size_t>& pivot_columns() const { return pivots_; }

  bool contains(const RationalVector& v) const;

  friend bool operator==(const SubspaceBasis& a, const SubspaceBasis& b) {
    return a.ambient_ == b.ambient_ && a.vectors_ == b.vectors_;
  }

 private:
  std::size_t ambient_;
  std::vector<RationalVector> vectors_;
  std::vector<std::size_t> pivots_;
};

/// Canonical basis of {v : m·v = 0}.
SubspaceBasis nullspace(const RationalMatrix& m);

/// True iff every vector of inner lies in outer. Throws
/// std::invalid_argument("ambient dimension mismatch") on differing ambients.
bool is_subspace_of(const SubspaceBasis& inner, const SubspaceBasis& outer);

struct ParametricElimination {
  std::size_t generic_rank = 0;
  /// Nonzero pivots in elimination order. The last one is a nonzero
  /// generic_rank × generic_rank minor, so any δ₀ that is a root of none of
  /// them gives rank(m(δ₀)) = generic_rank.
  std::vector<DeltaPoly> pivot_polys;
};

/// Fraction-free (Bareiss) elimination over Q[δ]. Pivot: nonzero entry of
/// lowest degree in the remaining block, ties by lowest column, then row.
ParametricElimination parametric_eliminate(const PolyMatrix& m);

/// Row-reduces a polynomial matrix with constant (δ-independent) row
/// operations and drops rows that become zero. The row space at every δ is
/// unchanged; the result has at most cols·(maxdeg+1) rows.
PolyMatrix compress_rows(const PolyMatrix& m);

}  // namespace naryd
