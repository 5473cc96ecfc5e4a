#pragma once

#include <string>

#include <json.hpp>

#include "naryd/algebra.hpp"
#include "naryd/catalog.hpp"
#include "naryd/dsolve.hpp"
#include "naryd/identities.hpp"

namespace naryd {

using json = nlohmann::json;

/// {"arity", "dim", "basis", "products": [{"args": [...], "value": {"j": "p/q"}}]}
json algebra_to_json(const NAryAlgebra& alg);
/// Throws std::invalid_argument with a readable message on any malformed input.
NAryAlgebra algebra_from_json(const json& j);
NAryAlgebra load_algebra_file(const std::string& path);

/// The 8×8 octonion multiplication table in the product-list layout of the
/// algebra format, one entry per ordered pair (the product is not
/// anticommutative, so this is a table dump rather than a loadable algebra).
json octonion_table_json(const CompositionAlgebra& o);

json vector_to_json(const Vector& v);
json map_to_json(const LinearMap& m);
json poly_to_json(const DeltaPoly& p);
json violation_to_json(const Violation& v);
json classify_to_json(const ClassifyReport& r);
json scan_to_json(const ScanReport& r);
json profile_to_json(const BlockProfile& p);

}  // namespace naryd
