#include "naryd/catalog.hpp"

#include <charconv>
#include <stdexcept>

namespace naryd {

std::string family_name(Family f) {
  switch (f) {
    case Family::A1: return "A1";
    case Family::B1: return "B1";
    case Family::B2: return "B2";
    case Family::C1: return "C1";
    case Family::C2: return "C2";
    case Family::Dr: return "Dr";
    case Family::M8: return "M8";
  }
  return "?";
}

namespace {

std::size_t parse_count(std::string_view s, std::string_view what) {
  std::size_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) {
    throw std::invalid_argument("malformed " + std::string(what) + " \"" + std::string(s) + "\"");
  }
  return v;
}

}  // namespace

FamilySpec FamilySpec::parse(std::string_view text) {
  const auto colon = text.find(':');
  const std::string_view tag = text.substr(0, colon);
  FamilySpec spec;
  if (tag == "A1") spec.family = Family::A1;
  else if (tag == "B1") spec.family = Family::B1;
  else if (tag == "B2") spec.family = Family::B2;
  else if (tag == "C1") spec.family = Family::C1;
  else if (tag == "C2") spec.family = Family::C2;
  else if (tag == "Dr") spec.family = Family::Dr;
  else if (tag == "M8") spec.family = Family::M8;
  else throw std::invalid_argument("unknown algebra family \"" + std::string(tag) + "\"");

  if (spec.family == Family::M8) {
    if (colon != std::string_view::npos) throw std::invalid_argument("M8 takes no parameters");
    spec.n = 3;
    return spec;
  }
  if (colon == std::string_view::npos) throw std::invalid_argument("family spec needs n=<arity>");

  bool have_n = false;
  std::string_view rest = text.substr(colon + 1);
  while (!rest.empty()) {
    const auto comma = rest.find(',');
    const std::string_view item = rest.substr(0, comma);
    rest = comma == std::string_view::npos ? std::string_view() : rest.substr(comma + 1);
    const auto eq = item.find('=');
    if (eq == std::string_view::npos) throw std::invalid_argument("malformed family parameter \"" + std::string(item) + "\"");
    const std::string_view key = item.substr(0, eq);
    const std::string_view value = item.substr(eq + 1);
    if (key == "n") {
      spec.n = parse_count(value, "arity");
      have_n = true;
    } else if (key == "alpha") {
      spec.alpha = Rational::parse(value);
    } else if (key == "beta") {
      spec.beta = Rational::parse(value);
    } else if (key == "r") {
      spec.r = parse_count(value, "index r");
    } else {
      throw std::invalid_argument("unknown family parameter \"" + std::string(key) + "\"");
    }
  }
  if (!have_n) throw std::invalid_argument("family spec needs n=<arity>");
  return spec;
}

std::string FamilySpec::to_string() const {
  if (family == Family::M8) return "M8";
  std::string s = family_name(family) + ":n=" + std::to_string(n);
  if (family == Family::C1 && alpha) s += ",alpha=" + alpha->to_string();
  if (family == Family::C2 && beta) s += ",beta=" + beta->to_string();
  if (family == Family::Dr && r) s += ",r=" + std::to_string(*r);
  return s;
}

void FamilySpec::validate() const {
  if (family == Family::M8) {
    if (n != 3) throw std::invalid_argument("M8 is ternary (n=3)");
    return;
  }
  if (n < 2) throw std::invalid_argument("arity n must be at least 2");
  switch (family) {
    case Family::C1:
      if (!alpha) throw std::invalid_argument("C1 requires alpha");
      if (alpha->is_zero()) throw std::invalid_argument("C1 requires alpha != 0");
      break;
    case Family::C2:
      if (!beta) throw std::invalid_argument("C2 requires beta");
      if (beta->is_zero()) throw std::invalid_argument("C2 requires beta != 0");
      break;
    case Family::Dr:
      if (!r) throw std::invalid_argument("Dr requires r");
      if (*r < 3 || *r > n + 1) throw std::invalid_argument("Dr requires 3 <= r <= n+1");
      break;
    default:
      break;
  }
}

bool FamilySpec::is_simple() const {
  return family == Family::M8 || (family == Family::Dr && r && *r == n + 1);
}

NAryAlgebra build_family(const FamilySpec& spec) {
  spec.validate();
  if (spec.family == Family::M8) return build_m8();
  const std::size_t n = spec.n;
  const std::size_t d = n + 1;
  std::vector<std::string> names;
  for (std::size_t i = 1; i <= d; ++i) names.push_back("e" + std::to_string(i));

  // Sorted tuple e_1, …, ê_i, …, e_{n+1} (0-based i).
  const auto omit = [&](std::size_t i) {
    IndexTuple t;
    for (std::size_t k = 0; k < d; ++k) {
      if (k != i) t.push_back(k);
    }
    return t;
  };
  NAryAlgebra::ProductTable table;
  const auto set = [&](std::size_t omitted, std::size_t coord, const Rational& c) {
    auto& v = table.try_emplace(omit(omitted), Vector(d)).first->second;
    v[coord] += c;
  };
  switch (spec.family) {
    case Family::A1:
      break;
    case Family::B1:  // [e_2, …, e_{n+1}] = e_1
      set(0, 0, Rational(1));
      break;
    case Family::B2:  // [e_1, …, e_n] = e_1
      set(n, 0, Rational(1));
      break;
    case Family::C1:  // [e_1,…,ê_n,e_{n+1}] = e_n, [e_1,…,e_n] = α e_{n+1}
      set(n - 1, n - 1, Rational(1));
      set(n, n, *spec.alpha);
      break;
    case Family::C2:  // [e_1,…,ê_n,e_{n+1}] = e_n + β e_{n+1}, [e_1,…,e_n] = e_{n+1}
      set(n - 1, n - 1, Rational(1));
      set(n - 1, n, *spec.beta);
      set(n, n, Rational(1));
      break;
    case Family::Dr:  // [e_1,…,ê_i,…,e_{n+1}] = e_i for i ≤ r
      for (std::size_t i = 0; i < *spec.r; ++i) set(i, i, Rational(1));
      break;
    case Family::M8:
      break;
  }
  return NAryAlgebra(n, d, std::move(names), std::move(table));
}

Vector cayley_dickson_conjugate(const Vector& x) {
  Vector out = x;
  for (std::size_t i = 1; i < out.size(); ++i) out[i] = -out[i];
  return out;
}

Vector cayley_dickson_multiply(const Vector& x, const Vector& y) {
  const std::size_t n = x.size();
  if (y.size() != n || (n & (n - 1)) != 0 || n == 0) throw std::invalid_argument("Cayley-Dickson operands must share a power-of-two length");
  if (n == 1) return {x[0] * y[0]};
  const std::size_t h = n / 2;
  const Vector a(x.begin(), x.begin() + static_cast<long>(h)), b(x.begin() + static_cast<long>(h), x.end());
  const Vector c(y.begin(), y.begin() + static_cast<long>(h)), d(y.begin() + static_cast<long>(h), y.end());
  const Vector first = cayley_dickson_multiply(a, c) - cayley_dickson_multiply(cayley_dickson_conjugate(d), b);
  const Vector second = cayley_dickson_multiply(d, a) + cayley_dickson_multiply(b, cayley_dickson_conjugate(c));
  Vector out = first;
  out.insert(out.end(), second.begin(), second.end());
  return out;
}

CompositionAlgebra::CompositionAlgebra()
    // Doubling index order is already (1, a, b, ab, c, ac, bc, abc): with
    // u = (0, 1) at each stage, (x, 0)·(0, 1) = (0, x).
    : names_{"1", "a", "b", "ab", "c", "ac", "bc", "abc"} {
  table_.reserve(kDim * kDim);
  for (std::size_t i = 0; i < kDim; ++i)
    for (std::size_t j = 0; j < kDim; ++j)
      table_.push_back(cayley_dickson_multiply(unit_vector(kDim, i), unit_vector(kDim, j)));
  RationalMatrix conj(kDim, kDim);
  for (std::size_t i = 0; i < kDim; ++i) conj(i, i) = Rational(i == 0 ? 1 : -1);
  conjugation_ = LinearMap(std::move(conj));
}

Vector CompositionAlgebra::multiply(const Vector& x, const Vector& y) const {
  Vector out(kDim);
  for (std::size_t i = 0; i < kDim; ++i) {
    if (x[i].is_zero()) continue;
    for (std::size_t j = 0; j < kDim; ++j) {
      if (y[j].is_zero()) continue;
      const Rational c = x[i] * y[j];
      const Vector& p = product(i, j);
      for (std::size_t k = 0; k < kDim; ++k) {
        if (!p[k].is_zero()) out[k] += c * p[k];
      }
    }
  }
  return out;
}

Rational CompositionAlgebra::form(const Vector& x, const Vector& y) const {
  const Vector s = multiply(x, conjugate(y)) + multiply(y, conjugate(x));
  return s[0] * Rational(1, 2);
}

Vector CompositionAlgebra::ternary(const Vector& x, const Vector& y, const Vector& z) const {
  Vector out = multiply(multiply(x, conjugate(y)), z);
  out = out - form(y, z) * x;
  out = out + form(x, z) * y;
  out = out - form(x, y) * z;
  return out;
}

CompositionAlgebra build_octonions() { return CompositionAlgebra(); }

Rational bilinear_form(const Vector& x, const Vector& y) {
  static const CompositionAlgebra octonions;
  return octonions.form(x, y);
}

NAryAlgebra build_m8() {
  const CompositionAlgebra o;
  constexpr std::size_t d = CompositionAlgebra::kDim;
  NAryAlgebra::ProductTable table;
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = i + 1; j < d; ++j)
      for (std::size_t k = j + 1; k < d; ++k)
        table.emplace(IndexTuple{i, j, k}, o.ternary(unit_vector(d, i), unit_vector(d, j), unit_vector(d, k)));
  return NAryAlgebra(3, d, o.basis_names(), std::move(table));
}

}  // namespace naryd
