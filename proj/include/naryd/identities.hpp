#pragma once

#include <vector>

#include "naryd/algebra.hpp"

namespace naryd {

/// A basis choice on which an identity fails, with the nonzero defect.
struct Violation {
  IndexTuple indices;
  Vector value;
  friend bool operator==(const Violation&, const Violation&) = default;
};

/// Scans J(e_{x_1},…,e_{x_n}; e_{y_2},…,e_{y_n}) over strictly increasing x
/// and non-decreasing y. Empty iff the algebra is Filippov. Violation indices
/// are x followed by y; the list is sorted by indices.
std::vector<Violation> check_filippov(const NAryAlgebra& alg);

/// Scans the n-ary Malcev identity
///   −J(zR_x, x_2,…,x_n; y_2,…,y_n) = J(z, x_2,…,x_n; y_2,…,y_n) R_x
/// over all basis z, non-decreasing x_2..x_n and non-decreasing y_2..y_n.
/// Violation indices are z, x, y; value is left side minus right side.
std::vector<Violation> check_nary_malcev(const NAryAlgebra& alg);

/// Single-threaded reference implementations of the scans above. They share no
/// enumeration code with the parallel kernels and must return identical lists.
namespace serial {
std::vector<Violation> check_filippov(const NAryAlgebra& alg);
std::vector<Violation> check_nary_malcev(const NAryAlgebra& alg);
}  // namespace serial

/// Non-decreasing (with_repeats) or strictly increasing tuples of the given
/// length over [0, dim), in lexicographic order.
std::vector<IndexTuple> sorted_tuples(std::size_t dim, std::size_t length, bool with_repeats);

}  // namespace naryd
