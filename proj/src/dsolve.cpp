#include "naryd/dsolve.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <stdexcept>

#include "naryd/identities.hpp"

namespace naryd {

PolyMatrix DerivationSystem::polynomial() const {
  PolyMatrix m(rows(), cols());
  for (std::size_t i = 0; i < rows(); ++i)
    for (std::size_t j = 0; j < cols(); ++j)
      m(i, j) = DeltaPoly::linear(constant(i, j), linear(i, j));
  return m;
}

RationalMatrix DerivationSystem::at(const Rational& delta) const {
  RationalMatrix m = constant;
  if (delta.is_zero()) return m;
  for (std::size_t i = 0; i < rows(); ++i)
    for (std::size_t j = 0; j < cols(); ++j)
      if (!linear(i, j).is_zero()) m(i, j) += delta * linear(i, j);
  return m;
}

DerivationSystem build_system(const NAryAlgebra& alg) {
  const std::size_t d = alg.dim();
  const std::size_t n = alg.arity();
  const auto tuples = sorted_tuples(d, n, false);
  DerivationSystem sys;
  sys.algebra = &alg;
  sys.constant = RationalMatrix(tuples.size() * d, d * d);
  sys.linear = RationalMatrix(tuples.size() * d, d * d);

  IndexTuple slot(n);
  for (std::size_t t = 0; t < tuples.size(); ++t) {
    const IndexTuple& tup = tuples[t];
    const std::size_t base = t * d;
    // φ([e_t]) = Σ_m c^m φ(e_m): β_mj enters output coordinate j with c^m.
    const Vector c = alg.basis_bracket(tup);
    for (std::size_t m = 0; m < d; ++m) {
      if (c[m].is_zero()) continue;
      for (std::size_t j = 0; j < d; ++j) sys.constant(base + j, m * d + j) += c[m];
    }
    // −δ Σ_i Σ_s β_{t_i s} [e_t with slot i ← e_s].
    for (std::size_t i = 0; i < n; ++i) {
      slot = tup;
      for (std::size_t s = 0; s < d; ++s) {
        slot[i] = s;
        const Vector v = alg.basis_bracket(slot);
        for (std::size_t j = 0; j < d; ++j) {
          if (!v[j].is_zero()) sys.linear(base + j, tup[i] * d + s) -= v[j];
        }
      }
    }
  }
  return sys;
}

bool is_delta_derivation(const NAryAlgebra& alg, const LinearMap& phi, const Rational& delta) {
  const std::size_t d = alg.dim();
  if (phi.dim() != d) throw std::invalid_argument("map dimension does not match the algebra");
  std::vector<Vector> images;
  for (std::size_t k = 0; k < d; ++k) images.push_back(phi.apply(unit_vector(d, k)));
  for (const auto& tup : sorted_tuples(d, alg.arity(), false)) {
    const Vector lhs = phi.apply(alg.basis_bracket(tup));
    Vector rhs(d);
    std::vector<Vector> args = basis_vectors(alg, tup);
    for (std::size_t i = 0; i < tup.size(); ++i) {
      const Vector keep = args[i];
      args[i] = images[tup[i]];
      rhs = rhs + alg.bracket(args);
      args[i] = keep;
    }
    if (lhs != delta * rhs) return false;
  }
  return true;
}

bool is_centroid_element(const NAryAlgebra& alg, const LinearMap& psi) {
  const std::size_t d = alg.dim();
  if (psi.dim() != d) throw std::invalid_argument("map dimension does not match the algebra");
  for (const auto& tup : sorted_tuples(d, alg.arity(), true)) {
    const Vector lhs = psi.apply(alg.basis_bracket(tup));
    std::vector<Vector> args = basis_vectors(alg, tup);
    for (std::size_t i = 0; i < tup.size(); ++i) {
      const Vector keep = args[i];
      args[i] = psi.apply(keep);
      if (alg.bracket(args) != lhs) return false;
      args[i] = keep;
    }
  }
  return true;
}

namespace {

std::vector<LinearMap> as_maps(std::size_t d, const SubspaceBasis& s) {
  std::vector<LinearMap> out;
  out.reserve(s.dim());
  for (const auto& v : s.vectors()) out.push_back(LinearMap::from_flat(d, v));
  return out;
}

}  // namespace

DerivationSpace derivation_space(const NAryAlgebra& alg, const Rational& delta) {
  const DerivationSystem sys = build_system(alg);
  DerivationSpace out;
  out.delta = delta;
  out.space = nullspace(sys.at(delta));
  out.basis = as_maps(alg.dim(), out.space);
  for (const auto& phi : out.basis) {
    if (!is_delta_derivation(alg, phi, delta)) throw std::logic_error("solver returned a map that is not a delta-derivation");
  }
  return out;
}

SubspaceBasis centroid(const NAryAlgebra& alg) {
  const std::size_t d = alg.dim();
  const std::size_t n = alg.arity();
  const auto tuples = sorted_tuples(d, n, true);
  RationalMatrix sys(tuples.size() * n * d, d * d);
  IndexTuple slot(n);
  std::size_t row = 0;
  for (const auto& tup : tuples) {
    const Vector c = alg.basis_bracket(tup);
    for (std::size_t i = 0; i < n; ++i, row += d) {
      for (std::size_t m = 0; m < d; ++m) {
        if (c[m].is_zero()) continue;
        for (std::size_t j = 0; j < d; ++j) sys(row + j, m * d + j) += c[m];
      }
      slot = tup;
      for (std::size_t s = 0; s < d; ++s) {
        slot[i] = s;
        const Vector v = alg.basis_bracket(slot);
        for (std::size_t j = 0; j < d; ++j) {
          if (!v[j].is_zero()) sys(row + j, tup[i] * d + s) -= v[j];
        }
      }
    }
  }
  SubspaceBasis out = nullspace(sys);
  const Rational inv_n(1, static_cast<long>(n));
  for (const auto& psi : as_maps(d, out)) {
    if (!is_delta_derivation(alg, psi, inv_n)) throw std::logic_error("centroid element is not a 1/n-derivation");
  }
  return out;
}

ClassifyReport classify(const NAryAlgebra& alg, const Rational& delta, const SubspaceBasis& centroid_space) {
  const DerivationSpace space = derivation_space(alg, delta);
  ClassifyReport r;
  r.delta = delta;
  r.dimension = space.dimension();
  r.centroid_dimension = centroid_space.dim();
  const bool trivial_delta = delta.is_zero() || delta == Rational(1);
  r.nontrivial = !trivial_delta && !is_subspace_of(space.space, centroid_space);
  if (r.nontrivial) {
    for (std::size_t k = 0; k < space.dimension(); ++k) {
      if (!centroid_space.contains(space.space.vectors()[k])) {
        r.witness = space.basis[k];
        break;
      }
    }
  }
  return r;
}

ClassifyReport classify(const NAryAlgebra& alg, const Rational& delta) {
  return classify(alg, delta, centroid(alg));
}

Rational generic_delta(std::uint64_t seed, const std::vector<DeltaPoly>& avoid_roots_of) {
  std::mt19937_64 gen(seed);
  constexpr std::uint64_t kMillion = 1000000;
  for (;;) {
    const std::uint64_t q = kMillion + 1 + gen() % kMillion;
    const std::int64_t p = static_cast<std::int64_t>(gen() % (6 * q + 1)) - static_cast<std::int64_t>(3 * q);
    const Rational x(static_cast<long>(p), static_cast<long>(q));
    if (x.is_zero() || x.denominator() <= kMillion) continue;
    const bool hit = std::any_of(avoid_roots_of.begin(), avoid_roots_of.end(),
                                 [&](const DeltaPoly& f) { return f.evaluate(x).is_zero(); });
    if (!hit) return x;
  }
}

ScanReport scan(const NAryAlgebra& alg, const std::vector<Rational>& extra, std::uint64_t seed) {
  const DerivationSystem sys = build_system(alg);
  const ParametricElimination elim = parametric_eliminate(compress_rows(sys.polynomial()));
  const std::size_t d = alg.dim();

  ScanReport rep;
  rep.seed = seed;
  rep.generic_rank = elim.generic_rank;
  rep.generic_dimension = d * d - elim.generic_rank;

  std::set<Rational> roots;
  for (const auto& p : elim.pivot_polys) {
    if (p.degree() < 1) continue;
    for (const auto& x : rational_roots(p)) roots.insert(x);
    const DeltaPoly irr = irrational_part(p);
    if (irr.degree() < 1) continue;
    // Keep the collected factors pairwise coprime.
    DeltaPoly rest = irr;
    for (auto& f : rep.irrational_factors) {
      const DeltaPoly g = gcd(rest, f);
      if (g.degree() >= 1) rest = divexact(rest, g);
    }
    if (rest.degree() >= 1) rep.irrational_factors.push_back(rest.monic());
  }
  std::sort(rep.irrational_factors.begin(), rep.irrational_factors.end(), [](const DeltaPoly& a, const DeltaPoly& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    return std::lexicographical_compare(a.coefficients().begin(), a.coefficients().end(), b.coefficients().begin(),
                                        b.coefficients().end());
  });
  rep.pivot_roots.assign(roots.begin(), roots.end());

  std::set<Rational> cands = roots;
  for (const Rational& x : {Rational(-1), Rational(1, 2), Rational(0), Rational(1),
                            Rational(1, static_cast<long>(alg.arity()))})
    cands.insert(x);
  cands.insert(extra.begin(), extra.end());
  rep.exceptional_candidates.assign(cands.begin(), cands.end());

  rep.generic_delta = generic_delta(seed, elim.pivot_polys);
  std::set<Rational> probes = cands;
  probes.insert(rep.generic_delta);
  const std::vector<Rational> order(probes.begin(), probes.end());

  const SubspaceBasis cent = centroid(alg);
  rep.classifications.resize(order.size());
#pragma omp parallel for schedule(dynamic)
  for (std::size_t k = 0; k < order.size(); ++k) rep.classifications[k] = classify(alg, order[k], cent);

  for (const auto& c : rep.classifications) {
    if (c.delta != rep.generic_delta && c.dimension > rep.generic_dimension) rep.exceptional_values.push_back(c.delta);
  }
  return rep;
}

bool BlockProfile::passes() const {
  return std::all_of(clauses.begin(), clauses.end(), [](const ShapeClause& c) { return !c.tested || c.holds; });
}

namespace {

RationalMatrix block(const RationalMatrix& m, std::size_t r0, std::size_t r1, std::size_t c0, std::size_t c1) {
  RationalMatrix out(r1 - r0, c1 - c0);
  for (std::size_t i = r0; i < r1; ++i)
    for (std::size_t j = c0; j < c1; ++j) out(i - r0, j - c0) = m(i, j);
  return out;
}

bool all_zero(const RationalMatrix& m) {
  return std::all_of(m.data().begin(), m.data().end(), [](const Rational& x) { return x.is_zero(); });
}

Rational trace(const RationalMatrix& m) {
  Rational t;
  for (std::size_t i = 0; i < std::min(m.rows(), m.cols()); ++i) t += m(i, i);
  return t;
}

bool is_scalar(const RationalMatrix& m, const Rational& value) {
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (m(i, j) != (i == j ? value : Rational(0))) return false;
  return true;
}

}  // namespace

BlockProfile block_profile(const LinearMap& phi, const FamilySpec& family, const Rational& delta) {
  if (family.family == Family::A1 || family.family == Family::M8) {
    throw std::invalid_argument("no block profile for family " + family_name(family.family));
  }
  family.validate();
  const std::size_t n = family.n;
  const std::size_t d = n + 1;
  if (phi.dim() != d) throw std::invalid_argument("map dimension does not match the family");
  const RationalMatrix& m = phi.matrix();
  const Rational one(1);

  BlockProfile p;
  p.family = family.family;
  p.delta = delta;
  {
    std::set<Rational> diag;
    for (std::size_t i = 0; i < d; ++i) diag.insert(m(i, i));
    p.distinct_diagonal = diag.size();
  }
  const auto add = [&](std::string name, bool holds, bool tested = true) {
    p.clauses.push_back({std::move(name), holds, tested});
  };
  const auto row_off_diagonal_zero = [&](std::size_t i) {
    for (std::size_t j = 0; j < d; ++j)
      if (j != i && !m(i, j).is_zero()) return false;
    return true;
  };

  switch (family.family) {
    case Family::B1: {
      p.a = m;
      p.trace_a = trace(m);
      Rational tail;
      for (std::size_t k = 1; k < d; ++k) tail += m(k, k);
      add("phi(e1) is a multiple of e1", row_off_diagonal_zero(0));
      add("beta_11 = delta * sum_{k>=2} beta_kk", m(0, 0) == delta * tail);
      add("|{phi}| >= 2", p.distinct_diagonal >= 2, false);
      break;
    }
    case Family::B2: {
      p.a = m;
      p.trace_a = trace(m);
      Rational mid;
      for (std::size_t k = 1; k < n; ++k) mid += m(k, k);
      if (delta != one) p.w = delta / (one - delta) * mid;
      add("phi(e1) is a multiple of e1", row_off_diagonal_zero(0));
      add("(1 - delta) beta_11 = delta * sum_{k=2..n} beta_kk", (one - delta) * m(0, 0) == delta * mid);
      add("phi(e_{n+1}) is a multiple of e_{n+1}", row_off_diagonal_zero(n));
      add("|{phi} \\ {beta_{n+1,n+1}}| >= 2", true, false);
      break;
    }
    case Family::C1:
    case Family::C2: {
      const std::size_t k = n - 1;  // A is k×k, B is 2×2
      p.a = block(m, 0, k, 0, k);
      p.c = block(m, 0, k, k, d);
      p.g = block(m, k, d, 0, k);
      p.b = block(m, k, d, k, d);
      p.trace_a = trace(p.a);
      p.trace_b = trace(p.b);
      const Rational& b00 = p.b(0, 0);
      const Rational& b01 = p.b(0, 1);
      const Rational& b10 = p.b(1, 0);
      const Rational& b11 = p.b(1, 1);
      add("G = 0", all_zero(p.g));
      if (family.family == Family::C1) {
        const Rational& alpha = *family.alpha;
        if (delta != one) p.w = delta / (one - delta) * p.trace_a;
        add("B diagonal entries equal w", (one - delta) * b00 == delta * p.trace_a && (one - delta) * b11 == delta * p.trace_a);
        add("B lower-left = (delta/alpha) beta_{n,n+1}", b10 == delta / alpha * b01);
        add("beta_{n,n+1} = 0 unless delta = -1", delta == Rational(-1) || b01.is_zero());
      } else {
        const Rational& beta = *family.beta;
        p.theta = p.trace_a;
        const Rational& theta = p.trace_a;
        add("B lower-left = delta * gamma", b10 == delta * b01);
        if (delta == Rational(-1)) {
          add("gamma = 0 at delta = -1", b01.is_zero());
          const Rational half = -theta * Rational(1, 2);
          add("B diagonal entries equal -theta/2 at delta = -1", b00 == half && b11 == half);
        } else if (delta != one) {
          const Rational base = delta * theta / (one - delta);
          const Rational shift = beta * delta / (one + delta) * b01;
          add("B diagonal matches the closed form", b00 == base - shift && b11 == base + shift);
        }
        const Rational quad = delta * delta + (beta * beta + Rational(2)) * delta + one;
        add("gamma = 0 unless delta^2 + (beta^2 + 2) delta + 1 = 0", quad.is_zero() || b01.is_zero());
      }
      add("|{phi}| >= 2", p.distinct_diagonal >= 2, false);
      break;
    }
    case Family::Dr: {
      const std::size_t r = *family.r;
      p.a = block(m, 0, r, 0, r);
      p.b = block(m, r, d, r, d);
      // Zero block: β_ij = 0 for i ≤ r < j (row convention).
      p.g = block(m, 0, r, r, d);
      p.c = block(m, r, d, 0, r);
      p.trace_a = trace(p.a);
      p.trace_b = trace(p.b);
      add("G = 0", all_zero(p.g));
      const Rational crit(1, static_cast<long>(r - 1));
      if (delta == Rational(-1)) {
        bool sym = true;
        for (std::size_t i = 0; i < r; ++i)
          for (std::size_t j = 0; j < r; ++j)
            if (i != j && p.a(i, j) != ((i + j) % 2 == 0 ? p.a(j, i) : -p.a(j, i))) sym = false;
        add("a_ij = (-1)^(i-j) a_ji", sym);
        add("tr(A) = -tr(B)", p.trace_a == -p.trace_b);
      } else if (delta == crit) {
        add("tr(B) = 0", p.trace_b.is_zero());
        add("A is scalar", is_scalar(p.a, p.a(0, 0)));
      } else {
        const Rational factor = one + delta - Rational(static_cast<long>(r)) * delta;
        add("A = delta/(1+delta-r delta) tr(B) E", is_scalar(p.a, delta * p.trace_b / factor));
      }
      add("not both C = 0 and |{phi}| = 1", !(all_zero(p.c) && p.distinct_diagonal == 1), false);
      break;
    }
    default:
      break;
  }
  return p;
}

SubspaceBasis inner_derivations_m8(const NAryAlgebra& alg) {
  if (alg.arity() != 3) throw std::invalid_argument("inner derivations are defined here for ternary algebras only");
  const std::size_t d = alg.dim();
  std::vector<Vector> xs;
  for (std::size_t i = 0; i < d; ++i) xs.push_back(unit_vector(d, i));
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = i + 1; j < d; ++j) xs.push_back(unit_vector(d, i) + unit_vector(d, j));

  std::vector<RationalVector> gens;
  for (const auto& x : xs) {
    for (std::size_t y = 0; y < d; ++y) {
      const Vector ey = unit_vector(d, y);
      const std::vector<Vector> xy{x, ey};
      const LinearMap rxy = right_mul(alg, xy);
      for (std::size_t z = 0; z < d; ++z) {
        const Vector ez = unit_vector(d, z);
        const std::vector<Vector> xz{x, ez};
        const std::vector<Vector> yxz{ey, x, ez};
        const std::vector<Vector> inner{x, alg.bracket(yxz)};
        const LinearMap g = commutator(rxy, right_mul(alg, xz)) + right_mul(alg, inner);
        if (!g.is_zero()) gens.push_back(g.flatten());
      }
    }
  }
  return SubspaceBasis::span(d * d, gens);
}

namespace oracle {

SubspaceBasis derivation_space(const NAryAlgebra& alg, const Rational& delta) {
  const std::size_t d = alg.dim();
  const std::size_t n = alg.arity();
  std::size_t count = 1;
  for (std::size_t i = 0; i < n; ++i) count *= d;

  RationalMatrix sys(count * d, d * d);
  for (std::size_t a = 0; a < d; ++a) {
    for (std::size_t b = 0; b < d; ++b) {
      RationalMatrix e(d, d);
      e(a, b) = Rational(1);
      const LinearMap phi(std::move(e));
      for (std::size_t code = 0; code < count; ++code) {
        std::vector<Vector> args;
        std::size_t rest = code;
        for (std::size_t i = 0; i < n; ++i, rest /= d) args.push_back(unit_vector(d, rest % d));
        std::reverse(args.begin(), args.end());
        Vector defect = phi.apply(alg.bracket(args));
        for (std::size_t i = 0; i < n; ++i) {
          std::vector<Vector> moved = args;
          moved[i] = phi.apply(args[i]);
          defect = defect - delta * alg.bracket(moved);
        }
        for (std::size_t j = 0; j < d; ++j) sys(code * d + j, a * d + b) = defect[j];
      }
    }
  }
  return nullspace(sys);
}

}  // namespace oracle

}  // namespace naryd
