#include "naryd/io.hpp"

#include <fstream>
#include <set>
#include <stdexcept>

namespace naryd {

json algebra_to_json(const NAryAlgebra& alg) {
  json products = json::array();
  for (const auto& [key, value] : alg.products()) {
    json v = json::object();
    for (std::size_t j = 0; j < value.size(); ++j) {
      if (!value[j].is_zero()) v[std::to_string(j)] = value[j].to_string();
    }
    products.push_back({{"args", key}, {"value", v}});
  }
  return {{"arity", alg.arity()}, {"dim", alg.dim()}, {"basis", alg.basis_names()}, {"products", products}};
}

namespace {

std::size_t get_count(const json& j, const char* key) {
  if (!j.contains(key)) throw std::invalid_argument(std::string("algebra JSON is missing \"") + key + "\"");
  const json& v = j.at(key);
  if (!v.is_number_unsigned()) throw std::invalid_argument(std::string("algebra JSON field \"") + key + "\" must be a non-negative integer");
  return v.get<std::size_t>();
}

}  // namespace

NAryAlgebra algebra_from_json(const json& j) {
  if (!j.is_object()) throw std::invalid_argument("algebra JSON must be an object");
  const std::size_t arity = get_count(j, "arity");
  const std::size_t dim = get_count(j, "dim");
  std::vector<std::string> names;
  if (j.contains("basis")) {
    if (!j.at("basis").is_array()) throw std::invalid_argument("algebra JSON field \"basis\" must be an array");
    for (const auto& s : j.at("basis")) {
      if (!s.is_string()) throw std::invalid_argument("basis names must be strings");
      names.push_back(s.get<std::string>());
    }
  } else {
    for (std::size_t i = 1; i <= dim; ++i) names.push_back("e" + std::to_string(i));
  }
  NAryAlgebra::ProductTable table;
  if (j.contains("products")) {
    const json& ps = j.at("products");
    if (!ps.is_array()) throw std::invalid_argument("algebra JSON field \"products\" must be an array");
    for (const auto& p : ps) {
      if (!p.is_object() || !p.contains("args") || !p.contains("value")) {
        throw std::invalid_argument("each product needs \"args\" and \"value\"");
      }
      const json& args = p.at("args");
      if (!args.is_array()) throw std::invalid_argument("product \"args\" must be an array");
      IndexTuple key;
      for (const auto& a : args) {
        if (!a.is_number_unsigned()) throw std::invalid_argument("product index must be a non-negative integer");
        key.push_back(a.get<std::size_t>());
      }
      for (std::size_t i = 0; i < key.size(); ++i) {
        if (key[i] >= dim) throw std::invalid_argument("product index " + std::to_string(key[i]) + " out of range");
        if (i > 0 && key[i] <= key[i - 1]) throw std::invalid_argument("product args must be strictly increasing");
      }
      const json& value = p.at("value");
      if (!value.is_object()) throw std::invalid_argument("product \"value\" must be an object");
      Vector v(dim);
      for (const auto& [k, c] : value.items()) {
        std::size_t idx = 0;
        try {
          std::size_t used = 0;
          idx = std::stoul(k, &used);
          if (used != k.size()) throw std::invalid_argument(k);
        } catch (const std::exception&) {
          throw std::invalid_argument("value key \"" + k + "\" is not a coordinate index");
        }
        if (idx >= dim) throw std::invalid_argument("value coordinate " + k + " out of range");
        if (!c.is_string()) throw std::invalid_argument("coefficients must be \"p/q\" strings");
        v[idx] = Rational::parse(c.get<std::string>());
      }
      if (!table.emplace(key, std::move(v)).second) throw std::invalid_argument("duplicate product args");
    }
  }
  return NAryAlgebra(arity, dim, std::move(names), std::move(table));
}

NAryAlgebra load_algebra_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open algebra file \"" + path + "\"");
  json j;
  try {
    j = json::parse(in);
  } catch (const json::exception& e) {
    throw std::invalid_argument("invalid JSON in \"" + path + "\": " + e.what());
  }
  try {
    return algebra_from_json(j);
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("invalid algebra JSON: ") + e.what());
  }
}

json octonion_table_json(const CompositionAlgebra& o) {
  constexpr std::size_t d = CompositionAlgebra::kDim;
  json products = json::array();
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t k = 0; k < d; ++k) {
      json v = json::object();
      const Vector& p = o.product(i, k);
      for (std::size_t j = 0; j < d; ++j) {
        if (!p[j].is_zero()) v[std::to_string(j)] = p[j].to_string();
      }
      products.push_back({{"args", {i, k}}, {"value", v}});
    }
  }
  return {{"arity", 2}, {"dim", d}, {"basis", o.basis_names()}, {"products", products}};
}

json vector_to_json(const Vector& v) {
  json a = json::array();
  for (const auto& x : v) a.push_back(x.to_string());
  return a;
}

json map_to_json(const LinearMap& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.dim(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.dim(); ++j) row.push_back(m(i, j).to_string());
    rows.push_back(row);
  }
  return rows;
}

json poly_to_json(const DeltaPoly& p) { return p.to_wire(); }

json violation_to_json(const Violation& v) { return {{"indices", v.indices}, {"value", vector_to_json(v.value)}}; }

json classify_to_json(const ClassifyReport& r) {
  return {{"delta", r.delta.to_string()},
          {"dimension", r.dimension},
          {"centroid_dimension", r.centroid_dimension},
          {"nontrivial", r.nontrivial},
          {"witness", r.witness ? map_to_json(*r.witness) : json(nullptr)}};
}

json scan_to_json(const ScanReport& r) {
  const auto rationals = [](const std::vector<Rational>& xs) {
    json a = json::array();
    for (const auto& x : xs) a.push_back(x.to_string());
    return a;
  };
  json factors = json::array();
  for (const auto& f : r.irrational_factors) factors.push_back(poly_to_json(f));
  json cls = json::array();
  for (const auto& c : r.classifications) cls.push_back(classify_to_json(c));
  return {{"generic_rank", r.generic_rank},
          {"generic_dimension", r.generic_dimension},
          {"generic_delta", r.generic_delta.to_string()},
          {"seed", r.seed},
          {"pivot_roots", rationals(r.pivot_roots)},
          {"exceptional_candidates", rationals(r.exceptional_candidates)},
          {"exceptional_values", rationals(r.exceptional_values)},
          {"irrational_factors", factors},
          {"classifications", cls}};
}

json profile_to_json(const BlockProfile& p) {
  const auto mat = [](const RationalMatrix& m) {
    json rows = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
      json row = json::array();
      for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m(i, j).to_string());
      rows.push_back(row);
    }
    return rows;
  };
  json clauses = json::array();
  for (const auto& c : p.clauses) clauses.push_back({{"name", c.name}, {"holds", c.holds}, {"tested", c.tested}});
  return {{"family", family_name(p.family)},
          {"delta", p.delta.to_string()},
          {"A", mat(p.a)},
          {"B", mat(p.b)},
          {"C", mat(p.c)},
          {"G", mat(p.g)},
          {"w", p.w ? json(p.w->to_string()) : json(nullptr)},
          {"theta", p.theta ? json(p.theta->to_string()) : json(nullptr)},
          {"trace_A", p.trace_a.to_string()},
          {"trace_B", p.trace_b.to_string()},
          {"distinct_diagonal", p.distinct_diagonal},
          {"clauses", clauses},
          {"passes", p.passes()}};
}

}  // namespace naryd
