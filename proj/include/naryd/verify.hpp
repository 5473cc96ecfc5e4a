#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "naryd/catalog.hpp"
#include "naryd/dsolve.hpp"
#include "naryd/io.hpp"

namespace naryd {

struct ClaimResult {
  std::string id;
  std::string title;
  bool pass = true;
  std::vector<std::string> failures;  // one line per failing case, with witness data
  json details = json::object();
};

struct VerifyOptions {
  /// Claim ids to run; empty runs all of them.
  std::vector<std::string> only;
  std::uint64_t seed = kDefaultSeed;
  /// Test hook: how catalog algebras are built.
  std::function<NAryAlgebra(const FamilySpec&)> builder = build_family;
};

struct VerifyReport {
  std::vector<ClaimResult> claims;
  std::uint64_t seed = kDefaultSeed;
  bool pass() const;
  json to_json() const;
};

/// Claim ids in run order.
const std::vector<std::string>& claim_ids();

/// Throws std::invalid_argument for an unknown id in options.only.
VerifyReport verify_paper(const VerifyOptions& options = {});

/// Catalog instances used by the checks.
std::vector<FamilySpec> identity_grid();
std::vector<FamilySpec> default_grid();

}  // namespace naryd
