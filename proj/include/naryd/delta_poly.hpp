#pragma once

#include <string>
#include <utility>
#include <vector>

#include "naryd/rational.hpp"

namespace naryd {

/// Univariate polynomial in the parameter δ with rational coefficients.
/// Coefficients are stored lowest degree first with no trailing zeros,
/// so the zero polynomial has an empty coefficient list.
class DeltaPoly {
 public:
  DeltaPoly() = default;
  DeltaPoly(Rational constant);  // NOLINT(implicit)
  explicit DeltaPoly(std::vector<Rational> coefficients);

  /// The monomial δ.
  static DeltaPoly delta();
  /// Linear polynomial a + bδ.
  static DeltaPoly linear(const Rational& a, const Rational& b);
  /// Parses the wire format: coefficient strings, lowest degree first.
  static DeltaPoly from_wire(const std::vector<std::string>& coefficients);

  std::vector<std::string> to_wire() const;
  /// Human-readable rendering such as "4d^2 + 17d + 4".
  std::string to_string(const std::string& var = "d") const;

  bool is_zero() const { return coeffs_.empty(); }
  /// Degree, with -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<Rational>& coefficients() const { return coeffs_; }
  Rational coefficient(std::size_t power) const;
  const Rational& leading() const { return coeffs_.back(); }

  Rational evaluate(const Rational& at) const;
  DeltaPoly derivative() const;
  DeltaPoly monic() const;

  DeltaPoly operator-() const;
  DeltaPoly& operator+=(const DeltaPoly& o);
  DeltaPoly& operator-=(const DeltaPoly& o);
  DeltaPoly& operator*=(const DeltaPoly& o);
  DeltaPoly& operator*=(const Rational& s);

  friend DeltaPoly operator+(DeltaPoly a, const DeltaPoly& b) { return a += b; }
  friend DeltaPoly operator-(DeltaPoly a, const DeltaPoly& b) { return a -= b; }
  friend DeltaPoly operator*(const DeltaPoly& a, const DeltaPoly& b);
  friend DeltaPoly operator*(DeltaPoly a, const Rational& s) { return a *= s; }
  friend bool operator==(const DeltaPoly& a, const DeltaPoly& b) { return a.coeffs_ == b.coeffs_; }

  /// Euclidean division: returns (quotient, remainder).
  friend std::pair<DeltaPoly, DeltaPoly> divmod(const DeltaPoly& a, const DeltaPoly& b);
  /// Division that must leave no remainder; throws std::logic_error otherwise.
  friend DeltaPoly divexact(const DeltaPoly& a, const DeltaPoly& b);
  /// Monic greatest common divisor (zero if both are zero).
  friend DeltaPoly gcd(const DeltaPoly& a, const DeltaPoly& b);

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

/// p / gcd(p, p'), made monic. Requires p ≠ 0.
DeltaPoly squarefree_part(const DeltaPoly& p);

/// All rational roots of p, each listed once, ascending.
/// Throws std::invalid_argument("zero polynomial has all roots") for p = 0.
std::vector<Rational> rational_roots(const DeltaPoly& p);

/// Squarefree factors of p of degree ≥ 2 that have no rational root, monic,
/// after every rational root has been divided out.
DeltaPoly irrational_part(const DeltaPoly& p);

}  // namespace naryd
