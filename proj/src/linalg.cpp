#include "naryd/linalg.hpp"

#include <algorithm>
#include <numeric>

namespace naryd {

RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("matrix product shape mismatch");
  RationalMatrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Rational& aik = a(i, k);
      if (aik.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) {
        if (!b(k, j).is_zero()) c(i, j) += aik * b(k, j);
      }
    }
  }
  return c;
}

RationalMatrix operator+(const RationalMatrix& a, const RationalMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw std::invalid_argument("matrix sum shape mismatch");
  RationalMatrix c = a;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) += b(i, j);
  return c;
}

RationalMatrix operator-(const RationalMatrix& a, const RationalMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw std::invalid_argument("matrix difference shape mismatch");
  RationalMatrix c = a;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) -= b(i, j);
  return c;
}

RationalVector operator*(const RationalMatrix& a, const RationalVector& v) {
  if (a.cols() != v.size()) throw std::invalid_argument("matrix-vector shape mismatch");
  RationalVector out(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (!a(i, j).is_zero() && !v[j].is_zero()) out[i] += a(i, j) * v[j];
  return out;
}

RationalMatrix evaluate(const PolyMatrix& m, const Rational& at) {
  RationalMatrix out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = m(i, j).evaluate(at);
  return out;
}

namespace {

// Incrementally maintained reduced echelon basis of a row space.
class EchelonAccumulator {
 public:
  explicit EchelonAccumulator(std::size_t width) : width_(width) {}

  // Returns true if the row enlarged the span.
  bool add(RationalVector row) {
    reduce(row);
    const auto lead = std::find_if(row.begin(), row.end(), [](const Rational& x) { return !x.is_zero(); });
    if (lead == row.end()) return false;
    const std::size_t p = static_cast<std::size_t>(lead - row.begin());
    const Rational inv = row[p].inverse();
    for (auto& x : row) {
      if (!x.is_zero()) x *= inv;
    }
    for (std::size_t b = 0; b < rows_.size(); ++b) {
      const Rational f = rows_[b][p];
      if (f.is_zero()) continue;
      for (std::size_t j = p; j < width_; ++j) {
        if (!row[j].is_zero()) rows_[b][j] -= f * row[j];
      }
    }
    rows_.push_back(std::move(row));
    pivots_.push_back(p);
    return true;
  }

  void reduce(RationalVector& row) const {
    for (std::size_t b = 0; b < rows_.size(); ++b) {
      const std::size_t p = pivots_[b];
      if (row[p].is_zero()) continue;
      const Rational f = row[p];
      const auto& basis = rows_[b];
      for (std::size_t j = p; j < width_; ++j) {
        if (!basis[j].is_zero()) row[j] -= f * basis[j];
      }
    }
  }

  std::size_t rank() const { return rows_.size(); }

  // Rows sorted by pivot column: the canonical RREF.
  std::pair<std::vector<RationalVector>, std::vector<std::size_t>> sorted() const {
    std::vector<std::size_t> order(rows_.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return pivots_[a] < pivots_[b]; });
    std::vector<RationalVector> rows;
    std::vector<std::size_t> pivots;
    for (auto k : order) {
      rows.push_back(rows_[k]);
      pivots.push_back(pivots_[k]);
    }
    return {std::move(rows), std::move(pivots)};
  }

 private:
  std::size_t width_;
  std::vector<RationalVector> rows_;
  std::vector<std::size_t> pivots_;
};

}  // namespace

RrefResult rref(const RationalMatrix& m) {
  EchelonAccumulator acc(m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    auto r = m.row(i);
    acc.add(RationalVector(r.begin(), r.end()));
  }
  auto [rows, pivots] = acc.sorted();
  RrefResult out{RationalMatrix(m.rows(), m.cols()), pivots};
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out.matrix(i, j) = rows[i][j];
  return out;
}

std::size_t rank(const RationalMatrix& m) {
  EchelonAccumulator acc(m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    auto r = m.row(i);
    acc.add(RationalVector(r.begin(), r.end()));
  }
  return acc.rank();
}

SubspaceBasis SubspaceBasis::span(std::size_t ambient_dim, const std::vector<RationalVector>& vectors) {
  EchelonAccumulator acc(ambient_dim);
  for (const auto& v : vectors) {
    if (v.size() != ambient_dim) throw std::invalid_argument("ambient dimension mismatch");
    acc.add(v);
  }
  SubspaceBasis s(ambient_dim);
  std::tie(s.vectors_, s.pivots_) = acc.sorted();
  return s;
}

SubspaceBasis SubspaceBasis::full(std::size_t ambient_dim) {
  std::vector<RationalVector> unit;
  for (std::size_t i = 0; i < ambient_dim; ++i) {
    RationalVector e(ambient_dim);
    e[i] = Rational(1);
    unit.push_back(std::move(e));
  }
  return span(ambient_dim, unit);
}

bool SubspaceBasis::contains(const RationalVector& v) const {
  if (v.size() != ambient_) throw std::invalid_argument("ambient dimension mismatch");
  RationalVector r = v;
  for (std::size_t b = 0; b < vectors_.size(); ++b) {
    const std::size_t p = pivots_[b];
    if (r[p].is_zero()) continue;
    const Rational f = r[p];
    for (std::size_t j = p; j < ambient_; ++j) {
      if (!vectors_[b][j].is_zero()) r[j] -= f * vectors_[b][j];
    }
  }
  return std::all_of(r.begin(), r.end(), [](const Rational& x) { return x.is_zero(); });
}

SubspaceBasis nullspace(const RationalMatrix& m) {
  const RrefResult r = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : r.pivot_columns) is_pivot[p] = true;
  std::vector<RationalVector> basis;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    RationalVector v(m.cols());
    v[f] = Rational(1);
    for (std::size_t i = 0; i < r.pivot_columns.size(); ++i) v[r.pivot_columns[i]] = -r.matrix(i, f);
    basis.push_back(std::move(v));
  }
  return SubspaceBasis::span(m.cols(), basis);
}

bool is_subspace_of(const SubspaceBasis& inner, const SubspaceBasis& outer) {
  if (inner.ambient_dim() != outer.ambient_dim()) throw std::invalid_argument("ambient dimension mismatch");
  std::vector<RationalVector> stacked = outer.vectors();
  stacked.insert(stacked.end(), inner.vectors().begin(), inner.vectors().end());
  return SubspaceBasis::span(outer.ambient_dim(), stacked).dim() == outer.dim();
}

PolyMatrix compress_rows(const PolyMatrix& m) {
  int maxdeg = 0;
  for (const auto& e : m.data()) maxdeg = std::max(maxdeg, e.degree());
  const std::size_t layers = static_cast<std::size_t>(maxdeg) + 1;
  const std::size_t width = m.cols() * layers;
  // Coefficient of δ^k in column j lives at k·cols + j, highest power first so
  // the echelon pivots favour rows whose top-degree part is independent.
  EchelonAccumulator acc(width);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    RationalVector flat(width);
    bool nonzero = false;
    for (std::size_t j = 0; j < m.cols(); ++j) {
      const auto& c = m(i, j).coefficients();
      for (std::size_t k = 0; k < c.size(); ++k) {
        flat[(layers - 1 - k) * m.cols() + j] = c[k];
        nonzero = true;
      }
    }
    if (nonzero) acc.add(std::move(flat));
  }
  auto [rows, pivots] = acc.sorted();
  PolyMatrix out(rows.size(), m.cols());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      std::vector<Rational> c(layers);
      for (std::size_t k = 0; k < layers; ++k) c[k] = rows[i][(layers - 1 - k) * m.cols() + j];
      out(i, j) = DeltaPoly(std::move(c));
    }
  }
  return out;
}

ParametricElimination parametric_eliminate(const PolyMatrix& input) {
  PolyMatrix a = input;
  ParametricElimination out;
  const std::size_t rows = a.rows();
  const std::size_t cols = a.cols();
  DeltaPoly previous(Rational(1));
  for (std::size_t k = 0; k < std::min(rows, cols); ++k) {
    std::size_t best_r = rows;
    std::size_t best_c = cols;
    int best_deg = 0;
    for (std::size_t j = k; j < cols; ++j) {
      for (std::size_t i = k; i < rows; ++i) {
        const DeltaPoly& e = a(i, j);
        if (e.is_zero()) continue;
        if (best_r == rows || e.degree() < best_deg) {
          best_r = i;
          best_c = j;
          best_deg = e.degree();
        }
      }
      if (best_r != rows && best_deg == 0) break;
    }
    if (best_r == rows) break;
    a.swap_rows(k, best_r);
    a.swap_cols(k, best_c);
    const DeltaPoly pivot = a(k, k);
    for (std::size_t i = k + 1; i < rows; ++i) {
      const DeltaPoly factor = a(i, k);
      for (std::size_t j = k + 1; j < cols; ++j) {
        DeltaPoly v = pivot * a(i, j);
        if (!factor.is_zero() && !a(k, j).is_zero()) v -= factor * a(k, j);
        a(i, j) = previous.degree() == 0 ? v * previous.leading().inverse() : divexact(v, previous);
      }
      a(i, k) = DeltaPoly();
    }
    previous = pivot;
    out.pivot_polys.push_back(pivot);
    ++out.generic_rank;
  }
  return out;
}

}  // namespace naryd
