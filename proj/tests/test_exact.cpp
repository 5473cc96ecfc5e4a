#include <gtest/gtest.h>

#include <random>

#include "naryd/delta_poly.hpp"
#include "naryd/linalg.hpp"
#include "support.hpp"

using namespace naryd;
using naryd::test::pick;

TEST(Rational, CanonicalForm) {
  const Rational r(4, -6);
  EXPECT_EQ(r.to_string(), "-2/3");
  EXPECT_EQ(Rational(6, 3).to_string(), "2");
  EXPECT_EQ(Rational(0, -5).to_string(), "0");
  EXPECT_EQ(Rational(0, -5).denominator(), 1);
}

TEST(Rational, GcdAndSignInvariantOnRandomPairs) {
  std::mt19937_64 g(11);
  for (int k = 0; k < 500; ++k) {
    const long a = pick(g, -100000, 100000);
    long b = pick(g, -1000, 1000);
    if (b == 0) b = 7;
    const Rational r(a, b);
    EXPECT_GT(r.denominator(), 0);
    mpz_class gg;
    mpz_gcd(gg.get_mpz_t(), r.numerator().get_mpz_t(), r.denominator().get_mpz_t());
    EXPECT_EQ(gg, 1);
    EXPECT_EQ(r * Rational(b), Rational(a));
  }
}

TEST(Rational, ParseAcceptsBothMinusSigns) {
  EXPECT_EQ(Rational::parse("-17/4"), Rational(-17, 4));
  EXPECT_EQ(Rational::parse("−17/4"), Rational(-17, 4));
  EXPECT_EQ(Rational::parse("5"), Rational(5));
  EXPECT_EQ(Rational::parse("10/4").to_string(), "5/2");
}

TEST(Rational, ParseRejectsGarbage) {
  for (const char* s : {"", "1/", "/2", "a", "1/2/3", "1.5", "--1", "1/0"}) {
    EXPECT_THROW(Rational::parse(s), std::invalid_argument) << s;
  }
}

TEST(Rational, DivisionByZeroThrows) {
  EXPECT_THROW(Rational(1) / Rational(0), std::domain_error);
  EXPECT_THROW(Rational(0).inverse(), std::domain_error);
  EXPECT_THROW(Rational(mpz_class(1), mpz_class(0)), std::invalid_argument);
}

TEST(DeltaPoly, WireRoundTrip) {
  const DeltaPoly p = DeltaPoly::from_wire({"1", "0", "-1"});
  EXPECT_EQ(p.degree(), 2);
  EXPECT_EQ(p.to_wire(), (std::vector<std::string>{"1", "0", "-1"}));
  EXPECT_EQ(p.evaluate(Rational(3)), Rational(-8));
  EXPECT_TRUE(DeltaPoly::from_wire({"0", "0"}).is_zero());
  EXPECT_EQ(DeltaPoly().degree(), -1);
}

TEST(DeltaPoly, DivisionReconstructs) {
  std::mt19937_64 g(5);
  for (int k = 0; k < 100; ++k) {
    std::vector<Rational> a(static_cast<std::size_t>(pick(g, 1, 6))), b(static_cast<std::size_t>(pick(g, 1, 4)));
    for (auto& x : a) x = test::small_rational(g);
    for (auto& x : b) x = test::small_rational(g);
    const DeltaPoly pa(a), pb(b);
    if (pb.is_zero()) continue;
    const auto [q, r] = divmod(pa, pb);
    EXPECT_EQ(q * pb + r, pa);
    EXPECT_LT(r.degree(), pb.degree());
    EXPECT_EQ(divexact(pa * pb, pb), pa);
  }
}

TEST(DeltaPoly, InexactDivisionThrows) {
  EXPECT_THROW(divexact(DeltaPoly::linear(1, 1), DeltaPoly::linear(2, 1)), std::logic_error);
}

TEST(DeltaPoly, GcdAndSquarefree) {
  const DeltaPoly x1 = DeltaPoly::linear(-1, 1);  // δ − 1
  const DeltaPoly x2 = DeltaPoly::linear(2, 1);   // δ + 2
  EXPECT_EQ(gcd(x1 * x1 * x2, x1 * DeltaPoly::linear(5, 1)), x1);
  EXPECT_EQ(squarefree_part(x1 * x1 * x2 * Rational(7)), (x1 * x2));
}

TEST(RationalRoots, SmallExamples) {
  EXPECT_EQ(rational_roots(DeltaPoly::from_wire({"-1", "0", "1"})), (std::vector<Rational>{-1, 1}));
  EXPECT_TRUE(rational_roots(DeltaPoly::from_wire({"1", "0", "1"})).empty());
  EXPECT_EQ(rational_roots(DeltaPoly::from_wire({"4", "17", "4"})), (std::vector<Rational>{-4, Rational(-1, 4)}));
  EXPECT_EQ(rational_roots(DeltaPoly(Rational(3))), std::vector<Rational>{});
}

TEST(RationalRoots, ZeroPolynomialThrows) {
  try {
    rational_roots(DeltaPoly());
    FAIL();
  } catch (const std::invalid_argument& e) {
    EXPECT_STREQ(e.what(), "zero polynomial has all roots");
  }
}

TEST(RationalRoots, RecoversPlantedRootsWithMultiplicityAndNoise) {
  std::mt19937_64 g(99);
  for (int k = 0; k < 60; ++k) {
    std::set<Rational> planted;
    DeltaPoly p(Rational(pick(g, 1, 9)));
    const int count = static_cast<int>(pick(g, 0, 4));
    for (int i = 0; i < count; ++i) {
      const Rational r(pick(g, -400, 400), pick(g, 1, 300));
      planted.insert(r);
      const DeltaPoly f = DeltaPoly::linear(-r, Rational(1));
      p *= f;
      if (pick(g, 0, 2) == 0) p *= f;
    }
    // An irreducible quadratic δ² − m with m not a square.
    const long m = std::vector<long>{2, 3, 5, 6, 7}[static_cast<std::size_t>(pick(g, 0, 4))];
    p *= DeltaPoly::from_wire({std::to_string(-m), "0", "1"});
    const auto roots = rational_roots(p);
    EXPECT_EQ(std::vector<Rational>(planted.begin(), planted.end()), roots);
    for (const auto& r : roots) EXPECT_TRUE(p.evaluate(r).is_zero());
    EXPECT_EQ(irrational_part(p), DeltaPoly::from_wire({std::to_string(-m), "0", "1"}));
  }
}

TEST(RationalRoots, LargeCoefficients) {
  const Rational r1(mpz_class("123456789012345678901"), mpz_class("98765432109876543"));
  const Rational r2(-7, 3);
  const DeltaPoly p = DeltaPoly::linear(-r1, 1) * DeltaPoly::linear(-r2, 1) * Rational(mpz_class("1000000007"), 1);
  EXPECT_EQ(rational_roots(p), (std::vector<Rational>{r2, r1}));
}

TEST(Rref, Examples) {
  const auto id = RationalMatrix::identity(2);
  const auto r1 = rref(id);
  EXPECT_EQ(r1.matrix, id);
  EXPECT_EQ(r1.pivot_columns, (std::vector<std::size_t>{0, 1}));
  const RationalMatrix z(3, 3);
  EXPECT_EQ(rref(z).matrix, z);
  EXPECT_EQ(rref(z).rank(), 0U);
  const auto m = RationalMatrix::from_rows({{1, 2}, {2, 4}}, 2);
  const auto r3 = rref(m);
  EXPECT_EQ(r3.matrix, RationalMatrix::from_rows({{1, 2}, {0, 0}}, 2));
  EXPECT_EQ(r3.pivot_columns, std::vector<std::size_t>{0});
  EXPECT_EQ(rref(RationalMatrix()).rank(), 0U);
}

TEST(Rref, IdempotentAndRowSpacePreserving) {
  std::mt19937_64 g(2024);
  for (int k = 0; k < 100; ++k) {
    const auto m = test::random_matrix(g, static_cast<std::size_t>(pick(g, 1, 8)), static_cast<std::size_t>(pick(g, 1, 8)));
    const auto r = rref(m);
    EXPECT_EQ(rref(r.matrix).matrix, r.matrix);
    EXPECT_EQ(r.rank(), test::naive_rank(m));
    std::vector<RationalVector> a, b;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      a.emplace_back(m.row(i).begin(), m.row(i).end());
      b.emplace_back(r.matrix.row(i).begin(), r.matrix.row(i).end());
    }
    EXPECT_EQ(SubspaceBasis::span(m.cols(), a), SubspaceBasis::span(m.cols(), b));
    for (std::size_t i = 1; i < r.pivot_columns.size(); ++i) EXPECT_LT(r.pivot_columns[i - 1], r.pivot_columns[i]);
  }
}

TEST(Nullspace, Examples) {
  EXPECT_EQ(nullspace(RationalMatrix::identity(3)).dim(), 0U);
  const auto ns = nullspace(RationalMatrix::from_rows({{1, -1}}, 2));
  ASSERT_EQ(ns.dim(), 1U);
  EXPECT_EQ(ns.vectors()[0], (RationalVector{1, 1}));
}

TEST(Nullspace, MultiplyBackAndRankNullity) {
  std::mt19937_64 g(77);
  for (int k = 0; k < 60; ++k) {
    const std::size_t rows = static_cast<std::size_t>(pick(g, 1, 6));
    const std::size_t cols = static_cast<std::size_t>(pick(g, 1, 9));
    const auto m = test::random_matrix(g, rows, cols);
    const auto ns = nullspace(m);
    EXPECT_EQ(ns.dim() + test::naive_rank(m), cols);
    for (const auto& v : ns.vectors()) EXPECT_TRUE(test::is_zero_vector(m * v));
  }
}

TEST(Subspace, Containment) {
  const auto zero = SubspaceBasis(2);
  const auto x = SubspaceBasis::span(2, {{1, 0}});
  const auto y = SubspaceBasis::span(2, {{0, 1}});
  EXPECT_TRUE(is_subspace_of(zero, x));
  EXPECT_FALSE(is_subspace_of(x, y));
  EXPECT_TRUE(is_subspace_of(SubspaceBasis::span(2, {{1, 1}, {1, -1}}), SubspaceBasis::full(2)));
  try {
    is_subspace_of(x, SubspaceBasis(3));
    FAIL();
  } catch (const std::invalid_argument& e) {
    EXPECT_STREQ(e.what(), "ambient dimension mismatch");
  }
}

TEST(ParametricEliminate, Examples) {
  PolyMatrix a(1, 1);
  a(0, 0) = DeltaPoly::delta();
  const auto ea = parametric_eliminate(a);
  EXPECT_EQ(ea.generic_rank, 1U);
  ASSERT_EQ(ea.pivot_polys.size(), 1U);
  EXPECT_EQ(ea.pivot_polys[0], DeltaPoly::delta());

  PolyMatrix b(2, 2);
  b(0, 0) = DeltaPoly::from_wire({"1", "0", "-1"});
  b(1, 1) = DeltaPoly(Rational(1));
  const auto eb = parametric_eliminate(b);
  EXPECT_EQ(eb.generic_rank, 2U);
  std::set<Rational> roots;
  for (const auto& p : eb.pivot_polys)
    for (const auto& r : rational_roots(p)) roots.insert(r);
  EXPECT_EQ(roots, (std::set<Rational>{-1, 1}));
}

namespace {

PolyMatrix random_linear_poly_matrix(std::mt19937_64& g, std::size_t rows, std::size_t cols) {
  const auto a = test::random_matrix(g, rows, cols, 1);
  const auto b = test::random_matrix(g, rows, cols, 1);
  PolyMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = DeltaPoly::linear(a(i, j), b(i, j));
  // Make some rows dependent so ranks drop.
  if (rows > 2)
    for (std::size_t j = 0; j < cols; ++j) m(rows - 1, j) = m(0, j) * DeltaPoly::linear(1, 1) + m(1, j);
  return m;
}

}  // namespace

TEST(ParametricEliminate, RankOffPivotRootsMatchesGenericRank) {
  std::mt19937_64 g(4242);
  for (int k = 0; k < 40; ++k) {
    const auto m = random_linear_poly_matrix(g, static_cast<std::size_t>(pick(g, 1, 6)), static_cast<std::size_t>(pick(g, 1, 6)));
    const auto e = parametric_eliminate(m);
    std::set<Rational> roots;
    for (const auto& p : e.pivot_polys) {
      ASSERT_FALSE(p.is_zero());
      for (const auto& r : rational_roots(p)) roots.insert(r);
    }
    std::size_t max_rank = 0;
    for (int s = 0; s < 12; ++s) {
      const Rational x(pick(g, -50, 50), pick(g, 1, 13));
      const std::size_t rk = test::naive_rank(evaluate(m, x));
      max_rank = std::max(max_rank, rk);
      if (!roots.count(x)) EXPECT_EQ(rk, e.generic_rank);
      else EXPECT_LE(rk, e.generic_rank);
    }
    EXPECT_EQ(max_rank, e.generic_rank);
  }
}

TEST(CompressRows, PreservesRankAtEveryProbe) {
  std::mt19937_64 g(31);
  for (int k = 0; k < 30; ++k) {
    const auto m = random_linear_poly_matrix(g, static_cast<std::size_t>(pick(g, 2, 12)), static_cast<std::size_t>(pick(g, 1, 4)));
    const auto c = compress_rows(m);
    int deg = 0;
    for (const auto& e : m.data()) deg = std::max(deg, e.degree());
    EXPECT_LE(c.rows(), static_cast<std::size_t>(deg + 1) * m.cols());
    for (int s = 0; s < 8; ++s) {
      const Rational x(pick(g, -9, 9), pick(g, 1, 4));
      EXPECT_EQ(test::naive_rank(evaluate(c, x)), test::naive_rank(evaluate(m, x)));
    }
  }
}
