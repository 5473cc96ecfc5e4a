#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "naryd/algebra.hpp"
#include "naryd/catalog.hpp"
#include "naryd/linalg.hpp"

namespace naryd {

/// Linear conditions on [φ] for φ[x_1,…,x_n] = δ Σ_i [x_1,…,φ(x_i),…,x_n].
/// Unknown β_ij (φ(e_i) = Σ_j β_ij e_j) sits in column i·d + j. One row per
/// strictly increasing basis n-tuple and output coordinate; every entry is
/// constant + δ·linear.
struct DerivationSystem {
  const NAryAlgebra* algebra = nullptr;
  RationalMatrix constant;
  RationalMatrix linear;

  std::size_t rows() const { return constant.rows(); }
  std::size_t cols() const { return constant.cols(); }
  PolyMatrix polynomial() const;
  RationalMatrix at(const Rational& delta) const;
};

DerivationSystem build_system(const NAryAlgebra& alg);

/// True iff φ satisfies the δ-derivation rule on every basis tuple, checked by
/// direct bracket evaluation.
bool is_delta_derivation(const NAryAlgebra& alg, const LinearMap& phi, const Rational& delta);

/// True iff ψ[x_1,…,x_n] = [x_1,…,ψ(x_i),…,x_n] for every slot i and every basis tuple.
bool is_centroid_element(const NAryAlgebra& alg, const LinearMap& psi);

struct DerivationSpace {
  Rational delta;
  SubspaceBasis space;          // flattened maps, canonical RREF
  std::vector<LinearMap> basis;  // same vectors as d×d maps
  std::size_t dimension() const { return basis.size(); }
};

/// Nullspace of the system at δ; each basis element is re-verified with
/// is_delta_derivation (std::logic_error if that ever fails).
DerivationSpace derivation_space(const NAryAlgebra& alg, const Rational& delta);

/// Centroid under the "every slot" reading. Constraints run over all
/// non-decreasing basis tuples: repeated arguments still constrain ψ.
/// Every element is checked to be a 1/n-derivation.
SubspaceBasis centroid(const NAryAlgebra& alg);

struct ClassifyReport {
  Rational delta;
  std::size_t dimension = 0;
  std::size_t centroid_dimension = 0;
  bool nontrivial = false;
  std::optional<LinearMap> witness;
};

ClassifyReport classify(const NAryAlgebra& alg, const Rational& delta);
ClassifyReport classify(const NAryAlgebra& alg, const Rational& delta, const SubspaceBasis& centroid_space);

/// Fixed default seed for the generic-δ probe.
inline constexpr std::uint64_t kDefaultSeed = 20110607;

/// Reproducible rational with denominator in (10⁶, 2·10⁶] drawn from seed.
/// Redraws while avoid(candidate) holds.
Rational generic_delta(std::uint64_t seed, const std::vector<DeltaPoly>& avoid_roots_of = {});

struct ScanReport {
  std::size_t generic_rank = 0;
  std::size_t generic_dimension = 0;
  std::uint64_t seed = kDefaultSeed;
  Rational generic_delta;
  std::vector<Rational> pivot_roots;             // rational roots of the pivots
  std::vector<Rational> exceptional_candidates;  // pivot roots ∪ structural ∪ extra, sorted
  std::vector<Rational> exceptional_values;      // candidates whose dimension exceeds the generic one
  std::vector<DeltaPoly> irrational_factors;     // monic, pairwise coprime
  std::vector<ClassifyReport> classifications;   // candidates and the generic δ, ascending
};

/// Parametric analysis of the system. Structural candidates are
/// {−1, 1/2, 0, 1, 1/n}; family-specific values (1/(r−1)) go in extra.
ScanReport scan(const NAryAlgebra& alg, const std::vector<Rational>& extra = {},
                std::uint64_t seed = kDefaultSeed);

struct ShapeClause {
  std::string name;
  bool holds = false;
  /// Informational clauses are reported but do not affect passes().
  bool tested = true;
};

/// Block data of [φ] as used by the block-structure statements for the
/// B, C and D families.
struct BlockProfile {
  Family family = Family::A1;
  Rational delta;
  RationalMatrix a, b, c, g;
  std::optional<Rational> w;
  std::optional<Rational> theta;
  Rational trace_a, trace_b;
  std::size_t distinct_diagonal = 0;
  std::vector<ShapeClause> clauses;

  bool passes() const;
};

/// Throws std::invalid_argument for A1 and M8, and on a dimension mismatch.
BlockProfile block_profile(const LinearMap& phi, const FamilySpec& family, const Rational& delta);

/// Span of [R_{x,y}, R_{x,z}] + R_{x,[y,x,z]}. The generator is quadratic in x, so x
/// runs over e_i and e_i + e_j; y, z over the basis. Throws for non-ternary algebras.
SubspaceBasis inner_derivations_m8(const NAryAlgebra& alg);

namespace oracle {
/// Derivation space assembled independently of build_system: every
/// elementary map E_ab is pushed through the δ-derivation defect over all
/// ordered basis tuples using general bracket evaluation.
SubspaceBasis derivation_space(const NAryAlgebra& alg, const Rational& delta);
}  // namespace oracle

}  // namespace naryd
