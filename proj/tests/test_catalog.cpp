#include <gtest/gtest.h>

#include "naryd/catalog.hpp"
#include "naryd/identities.hpp"
#include "naryd/verify.hpp"
#include "support.hpp"

using namespace naryd;

namespace {

std::string error_of(const std::string& spec) {
  try {
    build_family(FamilySpec::parse(spec));
  } catch (const std::invalid_argument& e) {
    return e.what();
  }
  return "";
}

}  // namespace

TEST(FamilySpec, ParseAndPrintRoundTrip) {
  for (const char* s : {"A1:n=4", "B1:n=3", "B2:n=5", "C1:n=4,alpha=2", "C2:n=3,beta=3/2", "Dr:n=5,r=3", "M8"}) {
    EXPECT_EQ(FamilySpec::parse(s).to_string(), s);
  }
  const auto c2 = FamilySpec::parse("C2:n=3,beta=-6/4");
  EXPECT_EQ(*c2.beta, Rational(-3, 2));
  EXPECT_TRUE(FamilySpec::parse("Dr:n=3,r=4").is_simple());
  EXPECT_FALSE(FamilySpec::parse("Dr:n=3,r=3").is_simple());
  EXPECT_TRUE(FamilySpec::parse("M8").is_simple());
}

TEST(FamilySpec, ErrorsNameTheConstraint) {
  EXPECT_EQ(error_of("C1:n=3,alpha=0"), "C1 requires alpha != 0");
  EXPECT_EQ(error_of("C2:n=3,beta=0"), "C2 requires beta != 0");
  EXPECT_EQ(error_of("Dr:n=3,r=5"), "Dr requires 3 <= r <= n+1");
  EXPECT_EQ(error_of("Dr:n=3,r=2"), "Dr requires 3 <= r <= n+1");
  EXPECT_EQ(error_of("A1:n=1"), "arity n must be at least 2");
  EXPECT_NE(error_of("Q1:n=3"), "");
  EXPECT_NE(error_of("A1"), "");
  EXPECT_NE(error_of("A1:n=x"), "");
  EXPECT_NE(error_of("M8:n=3"), "");
  EXPECT_NE(error_of("C1:n=3"), "");
}

TEST(BuildFamily, B2OnlyProduct) {
  const auto a = build_family(FamilySpec::parse("B2:n=3"));
  ASSERT_EQ(a.products().size(), 1U);
  EXPECT_EQ(a.products().begin()->first, (IndexTuple{0, 1, 2}));
  EXPECT_EQ(a.products().begin()->second, unit_vector(4, 0));
}

TEST(BuildFamily, A1IsZero) { EXPECT_TRUE(build_family(FamilySpec::parse("A1:n=4")).products().empty()); }

TEST(BuildFamily, C1WithAlpha2) {
  const auto a = build_family(FamilySpec::parse("C1:n=3,alpha=2"));
  ASSERT_EQ(a.products().size(), 2U);
  EXPECT_EQ(a.products().at({0, 1, 3}), unit_vector(4, 2));
  EXPECT_EQ(a.products().at({0, 1, 2}), Rational(2) * unit_vector(4, 3));
  EXPECT_EQ(a.basis_names(), (std::vector<std::string>{"e1", "e2", "e3", "e4"}));
}

TEST(BuildFamily, C2WithBeta) {
  const auto a = build_family(FamilySpec::parse("C2:n=3,beta=3/2"));
  EXPECT_EQ(a.products().at({0, 1, 3}), (Vector{0, 0, 1, Rational(3, 2)}));
  EXPECT_EQ(a.products().at({0, 1, 2}), unit_vector(4, 3));
}

TEST(BuildFamily, EveryGridInstanceIsFilippovAndDeterministic) {
  for (const auto& spec : identity_grid()) {
    const auto a = build_family(spec);
    EXPECT_EQ(a.dim(), spec.n + 1);
    EXPECT_TRUE(check_filippov(a).empty()) << spec.to_string();
    EXPECT_EQ(a, build_family(spec));
  }
}

TEST(Octonions, BasicProducts) {
  const auto o = build_octonions();
  EXPECT_EQ(o.basis_names(), (std::vector<std::string>{"1", "a", "b", "ab", "c", "ac", "bc", "abc"}));
  const auto e = [](std::size_t i) { return unit_vector(8, i); };
  EXPECT_EQ(o.multiply(e(1), e(1)), Rational(-1) * e(0));
  EXPECT_EQ(o.multiply(e(1), e(2)), e(3));
  EXPECT_EQ(o.multiply(e(2), e(1)), Rational(-1) * e(3));
  EXPECT_EQ(o.multiply(e(1), e(4)), e(5));
  EXPECT_EQ(o.multiply(e(2), e(4)), e(6));
  EXPECT_EQ(o.multiply(e(3), e(4)), e(7));
  for (std::size_t i = 0; i < 8; ++i) {
    EXPECT_EQ(o.multiply(e(0), e(i)), e(i));
    EXPECT_EQ(o.multiply(e(i), e(0)), e(i));
    for (std::size_t j = 1; j < 8; ++j)
      if (i != j && i > 0) EXPECT_EQ(o.multiply(e(i), e(j)), Rational(-1) * o.multiply(e(j), e(i)));
  }
  // Not associative: (ab)c ≠ a(bc).
  EXPECT_NE(o.multiply(o.multiply(e(1), e(2)), e(4)), o.multiply(e(1), o.multiply(e(2), e(4))));
}

TEST(Octonions, CompositionNormAndInvolution) {
  const auto o = build_octonions();
  std::mt19937_64 g(50);
  for (int k = 0; k < 50; ++k) {
    const Vector x = test::random_vector(g, 8);
    const Vector y = test::random_vector(g, 8);
    Rational norm;
    for (const auto& c : x) norm += c * c;
    EXPECT_EQ(o.multiply(x, o.conjugate(x)), norm * unit_vector(8, 0));
    EXPECT_EQ(o.conjugate(o.multiply(x, y)), o.multiply(o.conjugate(y), o.conjugate(x)));
    EXPECT_EQ(o.conjugate(o.conjugate(x)), x);
    EXPECT_EQ(bilinear_form(x, x), norm);
    EXPECT_EQ(bilinear_form(x, y), bilinear_form(y, x));
  }
}

TEST(Octonions, FormIsOrthonormal) {
  for (std::size_t i = 0; i < 8; ++i)
    for (std::size_t j = 0; j < 8; ++j)
      EXPECT_EQ(bilinear_form(unit_vector(8, i), unit_vector(8, j)), Rational(i == j ? 1 : 0));
}

TEST(CayleyDickson, RejectsBadLengths) {
  EXPECT_THROW(cayley_dickson_multiply(Vector(3), Vector(3)), std::invalid_argument);
  EXPECT_THROW(cayley_dickson_multiply(Vector(4), Vector(2)), std::invalid_argument);
}

TEST(M8, TernaryProductOnDistinctBasisTriples) {
  // For distinct orthonormal basis vectors the form terms vanish and the
  // bracket is the left-associated product (e_i ē_l) e_k.
  const auto o = build_octonions();
  const auto m8 = build_m8();
  for (std::size_t i = 0; i < 8; ++i)
    for (std::size_t l = 0; l < 8; ++l)
      for (std::size_t k = 0; k < 8; ++k) {
        if (i == l || l == k || i == k) continue;
        const std::vector<std::size_t> t{i, l, k};
        const Vector expected = o.multiply(o.multiply(unit_vector(8, i), o.conjugate(unit_vector(8, l))), unit_vector(8, k));
        EXPECT_EQ(m8.basis_bracket(t), expected);
      }
}

TEST(M8, RawProductIsAlternating) {
  const auto o = build_octonions();
  std::mt19937_64 g(7);
  for (int k = 0; k < 20; ++k) {
    const Vector x = test::random_vector(g, 8), y = test::random_vector(g, 8), z = test::random_vector(g, 8);
    EXPECT_TRUE(is_zero(o.ternary(x, x, z)));
    EXPECT_TRUE(is_zero(o.ternary(x, z, x)));
    EXPECT_EQ(o.ternary(x, y, z), Rational(-1) * o.ternary(y, x, z));
    const std::vector<Vector> args{x, y, z};
    EXPECT_EQ(build_m8().bracket(args), o.ternary(x, y, z));
  }
}

TEST(M8, DeterministicTable) {
  const auto a = build_m8();
  EXPECT_EQ(a.products().size(), 56U);
  EXPECT_EQ(a, build_m8());
  EXPECT_EQ(a.arity(), 3U);
  EXPECT_EQ(a.basis_names()[7], "abc");
}
