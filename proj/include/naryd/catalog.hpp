#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "naryd/algebra.hpp"

namespace naryd {

enum class Family { A1, B1, B2, C1, C2, Dr, M8 };

/// Names one algebra of the catalog. Textual form:
///   "A1:n=4", "B1:n=3", "B2:n=5", "C1:n=4,alpha=2", "C2:n=3,beta=3/2",
///   "Dr:n=5,r=3", "M8".
struct FamilySpec {
  Family family = Family::A1;
  std::size_t n = 2;
  std::optional<Rational> alpha;
  std::optional<Rational> beta;
  std::optional<std::size_t> r;

  static FamilySpec parse(std::string_view text);
  std::string to_string() const;

  /// Throws std::invalid_argument naming the violated constraint.
  void validate() const;

  std::size_t dim() const { return family == Family::M8 ? 8 : n + 1; }
  /// D_{n+1} and M8 are simple; every other family member is not.
  bool is_simple() const;

  friend bool operator==(const FamilySpec&, const FamilySpec&) = default;
};

std::string family_name(Family f);

/// (n+1)-dimensional n-ary Filippov algebra of the given type, or M8.
NAryAlgebra build_family(const FamilySpec& spec);

/// The 8-dimensional composition algebra (octonions over Q) in the basis
/// {1, a, b, ab, c, ac, bc, abc}, built by three Cayley–Dickson doublings.
class CompositionAlgebra {
 public:
  static constexpr std::size_t kDim = 8;

  CompositionAlgebra();

  const std::vector<std::string>& basis_names() const { return names_; }
  /// e_i · e_j.
  const Vector& product(std::size_t i, std::size_t j) const { return table_[i * kDim + j]; }
  Vector multiply(const Vector& x, const Vector& y) const;
  Vector conjugate(const Vector& x) const { return conjugation_.apply(x); }
  const LinearMap& conjugation() const { return conjugation_; }

  /// (x, y) = ½(x ȳ + y x̄), returned as its coefficient on 1.
  Rational form(const Vector& x, const Vector& y) const;

  /// [x, y, z] = (x ȳ) z − (y, z) x + (x, z) y − (x, y) z.
  Vector ternary(const Vector& x, const Vector& y, const Vector& z) const;

 private:
  std::vector<std::string> names_;
  std::vector<Vector> table_;
  LinearMap conjugation_;
};

CompositionAlgebra build_octonions();

/// Symmetric bilinear form of the octonions.
Rational bilinear_form(const Vector& x, const Vector& y);

/// Ternary Malcev algebra M8 on the octonions.
NAryAlgebra build_m8();

/// Cayley–Dickson product on Q^{2^k}: (a, b)(c, d) = (ac − d̄b, da + bc̄).
Vector cayley_dickson_multiply(const Vector& x, const Vector& y);
Vector cayley_dickson_conjugate(const Vector& x);

}  // namespace naryd
