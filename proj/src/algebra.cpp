#include "naryd/algebra.hpp"

#include <algorithm>
#include <stdexcept>

namespace naryd {

Vector unit_vector(std::size_t dim, std::size_t i) {
  Vector v(dim);
  v.at(i) = Rational(1);
  return v;
}

bool is_zero(const Vector& v) {
  return std::all_of(v.begin(), v.end(), [](const Rational& x) { return x.is_zero(); });
}

Vector operator+(const Vector& a, const Vector& b) {
  if (a.size() != b.size()) throw std::invalid_argument("vector length mismatch");
  Vector out = a;
  for (std::size_t i = 0; i < b.size(); ++i) out[i] += b[i];
  return out;
}

Vector operator-(const Vector& a, const Vector& b) {
  if (a.size() != b.size()) throw std::invalid_argument("vector length mismatch");
  Vector out = a;
  for (std::size_t i = 0; i < b.size(); ++i) out[i] -= b[i];
  return out;
}

Vector operator*(const Rational& s, const Vector& v) {
  Vector out = v;
  for (auto& x : out) x *= s;
  return out;
}

LinearMap::LinearMap(RationalMatrix matrix) : matrix_(std::move(matrix)) {
  if (matrix_.rows() != matrix_.cols()) throw std::invalid_argument("linear map must be square");
}

LinearMap LinearMap::from_flat(std::size_t dim, const RationalVector& flat) {
  return LinearMap(RationalMatrix(dim, dim, flat));
}

Vector LinearMap::apply(const Vector& x) const {
  if (x.size() != dim()) throw std::invalid_argument("vector length does not match map dimension");
  Vector out(dim());
  for (std::size_t i = 0; i < dim(); ++i) {
    if (x[i].is_zero()) continue;
    for (std::size_t j = 0; j < dim(); ++j) {
      if (!matrix_(i, j).is_zero()) out[j] += x[i] * matrix_(i, j);
    }
  }
  return out;
}

bool LinearMap::is_zero() const {
  return std::all_of(matrix_.data().begin(), matrix_.data().end(), [](const Rational& x) { return x.is_zero(); });
}

LinearMap commutator(const LinearMap& a, const LinearMap& b) { return a.then(b) - b.then(a); }

namespace {

constexpr std::size_t kDenseLimit = std::size_t{1} << 22;

// Sorts a copy of the tuple, returning the permutation sign, or 0 on a repeat.
int sort_with_sign(std::span<const std::size_t> in, IndexTuple& sorted) {
  sorted.assign(in.begin(), in.end());
  int sign = 1;
  for (std::size_t i = 1; i < sorted.size(); ++i) {
    for (std::size_t j = i; j > 0 && sorted[j - 1] >= sorted[j]; --j) {
      if (sorted[j - 1] == sorted[j]) return 0;
      std::swap(sorted[j - 1], sorted[j]);
      sign = -sign;
    }
  }
  return sign;
}

}  // namespace

NAryAlgebra::NAryAlgebra(std::size_t arity, std::size_t dim, std::vector<std::string> basis_names,
                         ProductTable products)
    : arity_(arity), dim_(dim), names_(std::move(basis_names)) {
  if (arity_ < 2) throw std::invalid_argument("arity must be at least 2");
  if (dim_ < 1) throw std::invalid_argument("dimension must be at least 1");
  if (names_.size() != dim_) throw std::invalid_argument("basis name count does not match dimension");
  for (auto& [key, value] : products) {
    if (key.size() != arity_) throw std::invalid_argument("product key has wrong arity");
    for (std::size_t i = 0; i < key.size(); ++i) {
      if (key[i] >= dim_) throw std::invalid_argument("product key index out of range");
      if (i > 0 && key[i - 1] >= key[i]) throw std::invalid_argument("product key is not strictly increasing");
    }
    if (value.size() != dim_) throw std::invalid_argument("product value has wrong dimension");
    if (!is_zero(value)) products_.emplace(key, std::move(value));
  }
  for (const auto& [key, value] : products_) {
    SparseVector sv;
    for (std::size_t i = 0; i < dim_; ++i) {
      if (!value[i].is_zero()) sv.push_back({i, value[i]});
    }
    sparse_.push_back(std::move(sv));
    sparse_keys_.push_back(key);
  }

  std::size_t total = 1;
  bool small = true;
  for (std::size_t k = 0; k < arity_ && small; ++k) {
    if (total > kDenseLimit / dim_) small = false;
    total *= dim_;
  }
  if (small) {
    dense_.assign(total, 0);
    IndexTuple idx(arity_, 0);
    IndexTuple sorted;
    for (std::size_t code = 0; code < total; ++code) {
      std::size_t c = code;
      for (std::size_t k = arity_; k-- > 0;) {
        idx[k] = c % dim_;
        c /= dim_;
      }
      const int sign = sort_with_sign(idx, sorted);
      if (sign == 0) continue;
      auto it = std::lower_bound(sparse_keys_.begin(), sparse_keys_.end(), sorted);
      if (it == sparse_keys_.end() || *it != sorted) continue;
      const auto slot = static_cast<std::int32_t>(it - sparse_keys_.begin()) + 1;
      dense_[code] = sign * slot;
    }
  }
}

const NAryAlgebra::SparseVector* NAryAlgebra::lookup(std::span<const std::size_t> indices, int& sign) const {
  if (!dense_.empty()) {
    std::size_t code = 0;
    for (auto i : indices) code = code * dim_ + i;
    const std::int32_t s = dense_[code];
    if (s == 0) return nullptr;
    sign = s > 0 ? 1 : -1;
    return &sparse_[static_cast<std::size_t>(s > 0 ? s : -s) - 1];
  }
  IndexTuple sorted;
  sign = sort_with_sign(indices, sorted);
  if (sign == 0) return nullptr;
  auto it = std::lower_bound(sparse_keys_.begin(), sparse_keys_.end(), sorted);
  if (it == sparse_keys_.end() || *it != sorted) return nullptr;
  return &sparse_[static_cast<std::size_t>(it - sparse_keys_.begin())];
}

void NAryAlgebra::accumulate_basis_bracket(std::span<const std::size_t> indices, const Rational& scale,
                                           Vector& out) const {
  int sign = 0;
  const SparseVector* sv = lookup(indices, sign);
  if (sv == nullptr) return;
  const Rational s = sign > 0 ? scale : -scale;
  for (const auto& t : *sv) out[t.index] += s * t.coeff;
}

Vector NAryAlgebra::basis_bracket(std::span<const std::size_t> indices) const {
  if (indices.size() != arity_) throw std::invalid_argument("bracket arity mismatch");
  for (auto i : indices) {
    if (i >= dim_) throw std::invalid_argument("basis index out of range");
  }
  Vector out(dim_);
  accumulate_basis_bracket(indices, Rational(1), out);
  return out;
}

Vector NAryAlgebra::bracket(std::span<const Vector> args) const {
  if (args.size() != arity_) throw std::invalid_argument("bracket arity mismatch");
  std::vector<std::vector<std::size_t>> support(arity_);
  for (std::size_t k = 0; k < arity_; ++k) {
    if (args[k].size() != dim_) throw std::invalid_argument("bracket argument has wrong dimension");
    for (std::size_t i = 0; i < dim_; ++i) {
      if (!args[k][i].is_zero()) support[k].push_back(i);
    }
    if (support[k].empty()) return Vector(dim_);
  }
  Vector out(dim_);
  IndexTuple idx(arity_);
  std::vector<std::size_t> pos(arity_, 0);
  std::vector<Rational> prefix(arity_ + 1);
  prefix[0] = Rational(1);
  std::size_t depth = 0;
  // Odometer over the cartesian product of supports, with running coefficient products.
  while (true) {
    if (depth == arity_) {
      accumulate_basis_bracket(idx, prefix[arity_], out);
      --depth;
      ++pos[depth];
      continue;
    }
    if (pos[depth] == support[depth].size()) {
      if (depth == 0) break;
      pos[depth] = 0;
      --depth;
      ++pos[depth];
      continue;
    }
    const std::size_t i = support[depth][pos[depth]];
    bool repeated = false;
    for (std::size_t k = 0; k < depth; ++k) repeated = repeated || idx[k] == i;
    if (repeated) {
      ++pos[depth];
      continue;
    }
    idx[depth] = i;
    prefix[depth + 1] = prefix[depth] * args[depth][i];
    ++depth;
  }
  return out;
}

LinearMap right_mul(const NAryAlgebra& alg, std::span<const Vector> fixed) {
  if (fixed.size() + 1 != alg.arity()) throw std::invalid_argument("right multiplication arity mismatch");
  const std::size_t d = alg.dim();
  RationalMatrix m(d, d);
  std::vector<Vector> args;
  args.reserve(alg.arity());
  args.push_back(Vector());
  args.insert(args.end(), fixed.begin(), fixed.end());
  for (std::size_t i = 0; i < d; ++i) {
    args[0] = unit_vector(d, i);
    const Vector row = alg.bracket(args);
    for (std::size_t j = 0; j < d; ++j) m(i, j) = row[j];
  }
  return LinearMap(std::move(m));
}

Vector jacobian(const NAryAlgebra& alg, std::span<const Vector> xs, std::span<const Vector> ys) {
  const std::size_t n = alg.arity();
  if (xs.size() != n || ys.size() + 1 != n) throw std::invalid_argument("jacobian arity mismatch");
  std::vector<Vector> outer;
  outer.reserve(n);
  outer.push_back(alg.bracket(xs));
  outer.insert(outer.end(), ys.begin(), ys.end());
  Vector result = alg.bracket(outer);

  std::vector<Vector> inner(n);
  std::copy(ys.begin(), ys.end(), inner.begin() + 1);
  std::vector<Vector> args(xs.begin(), xs.end());
  for (std::size_t i = 0; i < n; ++i) {
    inner[0] = xs[i];
    args[i] = alg.bracket(inner);
    result = result - alg.bracket(args);
    args[i] = xs[i];
  }
  return result;
}

std::vector<Vector> basis_vectors(const NAryAlgebra& alg, std::span<const std::size_t> indices) {
  std::vector<Vector> out;
  out.reserve(indices.size());
  for (auto i : indices) out.push_back(unit_vector(alg.dim(), i));
  return out;
}

}  // namespace naryd
