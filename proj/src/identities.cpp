#include "naryd/identities.hpp"

#include <optional>

namespace naryd {

std::vector<IndexTuple> sorted_tuples(std::size_t dim, std::size_t length, bool with_repeats) {
  std::vector<IndexTuple> out;
  if (length == 0) {
    out.emplace_back();
    return out;
  }
  IndexTuple t(length);
  // Recursive fill; the step keeps the tuple non-decreasing or increasing.
  auto fill = [&](auto&& self, std::size_t pos, std::size_t start) -> void {
    if (pos == length) {
      out.push_back(t);
      return;
    }
    for (std::size_t i = start; i < dim; ++i) {
      t[pos] = i;
      self(self, pos + 1, with_repeats ? i : i + 1);
    }
  };
  fill(fill, 0, 0);
  return out;
}

namespace {

std::optional<Violation> filippov_at(const NAryAlgebra& alg, const IndexTuple& x, const IndexTuple& y) {
  const auto xs = basis_vectors(alg, x);
  const auto ys = basis_vectors(alg, y);
  Vector j = jacobian(alg, xs, ys);
  if (is_zero(j)) return std::nullopt;
  IndexTuple idx = x;
  idx.insert(idx.end(), y.begin(), y.end());
  return Violation{std::move(idx), std::move(j)};
}

// All Malcev defects for one choice of x_2..x_n, in (z, y) order.
void malcev_for_x(const NAryAlgebra& alg, const IndexTuple& x, const std::vector<IndexTuple>& ys_list,
                  std::vector<Violation>& out) {
  const std::size_t d = alg.dim();
  const auto xs = basis_vectors(alg, x);
  const LinearMap r = right_mul(alg, xs);
  std::vector<Vector> jx(alg.arity());
  std::copy(xs.begin(), xs.end(), jx.begin() + 1);
  for (std::size_t z = 0; z < d; ++z) {
    const Vector ez = unit_vector(d, z);
    const Vector zr = r.apply(ez);
    for (const auto& y : ys_list) {
      const auto ys = basis_vectors(alg, y);
      jx[0] = zr;
      Vector lhs = jacobian(alg, jx, ys);
      for (auto& c : lhs) c = -c;
      jx[0] = ez;
      const Vector rhs = r.apply(jacobian(alg, jx, ys));
      Vector defect = lhs - rhs;
      if (is_zero(defect)) continue;
      IndexTuple idx{z};
      idx.insert(idx.end(), x.begin(), x.end());
      idx.insert(idx.end(), y.begin(), y.end());
      out.push_back({std::move(idx), std::move(defect)});
    }
  }
}

}  // namespace

std::vector<Violation> check_filippov(const NAryAlgebra& alg) {
  const auto xs = sorted_tuples(alg.dim(), alg.arity(), false);
  const auto ys = sorted_tuples(alg.dim(), alg.arity() - 1, true);
  const long total = static_cast<long>(xs.size() * ys.size());
  std::vector<std::optional<Violation>> slots(static_cast<std::size_t>(total));
#pragma omp parallel for schedule(dynamic, 16)
  for (long k = 0; k < total; ++k) {
    const auto u = static_cast<std::size_t>(k);
    slots[u] = filippov_at(alg, xs[u / ys.size()], ys[u % ys.size()]);
  }
  std::vector<Violation> out;
  for (auto& s : slots) {
    if (s) out.push_back(std::move(*s));
  }
  return out;
}

std::vector<Violation> check_nary_malcev(const NAryAlgebra& alg) {
  const auto xs = sorted_tuples(alg.dim(), alg.arity() - 1, true);
  const auto ys = sorted_tuples(alg.dim(), alg.arity() - 1, true);
  std::vector<std::vector<Violation>> per_x(xs.size());
  const long total = static_cast<long>(xs.size());
#pragma omp parallel for schedule(dynamic, 1)
  for (long k = 0; k < total; ++k) {
    const auto u = static_cast<std::size_t>(k);
    malcev_for_x(alg, xs[u], ys, per_x[u]);
  }
  // Per-x batches come out in x order; reorder to (z, x, y) lexicographic.
  std::vector<Violation> out;
  for (auto& batch : per_x) {
    for (auto& v : batch) out.push_back(std::move(v));
  }
  std::stable_sort(out.begin(), out.end(), [](const Violation& a, const Violation& b) { return a.indices < b.indices; });
  return out;
}

namespace serial {

std::vector<Violation> check_filippov(const NAryAlgebra& alg) {
  const std::size_t n = alg.arity();
  const std::size_t d = alg.dim();
  std::vector<Violation> out;
  // Plain nested enumeration via odometers over [0, d)^n and [0, d)^(n-1),
  // filtering by order; deliberately independent of sorted_tuples().
  IndexTuple x(n, 0);
  while (true) {
    bool increasing = true;
    for (std::size_t i = 1; i < n; ++i) increasing = increasing && x[i - 1] < x[i];
    if (increasing) {
      IndexTuple y(n - 1, 0);
      while (true) {
        bool nondecreasing = true;
        for (std::size_t i = 1; i < y.size(); ++i) nondecreasing = nondecreasing && y[i - 1] <= y[i];
        if (nondecreasing) {
          std::vector<Vector> xv, yv;
          for (auto i : x) xv.push_back(unit_vector(d, i));
          for (auto i : y) yv.push_back(unit_vector(d, i));
          Vector j = jacobian(alg, xv, yv);
          if (!is_zero(j)) {
            IndexTuple idx = x;
            idx.insert(idx.end(), y.begin(), y.end());
            out.push_back({idx, j});
          }
        }
        std::size_t k = y.size();
        while (k > 0 && ++y[k - 1] == d) y[--k] = 0;
        if (k == 0) break;
      }
    }
    std::size_t k = n;
    while (k > 0 && ++x[k - 1] == d) x[--k] = 0;
    if (k == 0) break;
  }
  return out;
}

std::vector<Violation> check_nary_malcev(const NAryAlgebra& alg) {
  const std::size_t n = alg.arity();
  const std::size_t d = alg.dim();
  std::vector<Violation> out;
  for (std::size_t z = 0; z < d; ++z) {
    IndexTuple x(n - 1, 0);
    while (true) {
      bool x_ok = true;
      for (std::size_t i = 1; i < x.size(); ++i) x_ok = x_ok && x[i - 1] <= x[i];
      if (x_ok) {
        IndexTuple y(n - 1, 0);
        while (true) {
          bool y_ok = true;
          for (std::size_t i = 1; i < y.size(); ++i) y_ok = y_ok && y[i - 1] <= y[i];
          if (y_ok) {
            std::vector<Vector> xv, yv;
            for (auto i : x) xv.push_back(unit_vector(d, i));
            for (auto i : y) yv.push_back(unit_vector(d, i));
            // zR_x straight from the bracket, no operator matrix.
            std::vector<Vector> args{unit_vector(d, z)};
            args.insert(args.end(), xv.begin(), xv.end());
            const Vector zr = alg.bracket(args);
            std::vector<Vector> jargs{zr};
            jargs.insert(jargs.end(), xv.begin(), xv.end());
            const Vector lhs = Rational(-1) * jacobian(alg, jargs, yv);
            jargs[0] = unit_vector(d, z);
            std::vector<Vector> rargs{jacobian(alg, jargs, yv)};
            rargs.insert(rargs.end(), xv.begin(), xv.end());
            const Vector rhs = alg.bracket(rargs);
            Vector defect = lhs - rhs;
            if (!is_zero(defect)) {
              IndexTuple idx{z};
              idx.insert(idx.end(), x.begin(), x.end());
              idx.insert(idx.end(), y.begin(), y.end());
              out.push_back({idx, defect});
            }
          }
          std::size_t k = y.size();
          while (k > 0 && ++y[k - 1] == d) y[--k] = 0;
          if (k == 0) break;
        }
      }
      std::size_t k = x.size();
      while (k > 0 && ++x[k - 1] == d) x[--k] = 0;
      if (k == 0) break;
    }
  }
  return out;
}

}  // namespace serial

}  // namespace naryd
