#include "naryd/verify.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <stdexcept>

#include "naryd/identities.hpp"

namespace naryd {

namespace {

constexpr const char* kVersion = "0.1.0";

FamilySpec make(Family f, std::size_t n) {
  FamilySpec s;
  s.family = f;
  s.n = n;
  return s;
}

FamilySpec with_alpha(std::size_t n, const Rational& a) {
  FamilySpec s = make(Family::C1, n);
  s.alpha = a;
  return s;
}

FamilySpec with_beta(std::size_t n, const Rational& b) {
  FamilySpec s = make(Family::C2, n);
  s.beta = b;
  return s;
}

FamilySpec with_r(std::size_t n, std::size_t r) {
  FamilySpec s = make(Family::Dr, n);
  s.r = r;
  return s;
}

std::vector<FamilySpec> grid(const std::vector<Rational>& alphas, const std::vector<Rational>& betas) {
  std::vector<FamilySpec> out;
  for (std::size_t n = 2; n <= 5; ++n) {
    out.push_back(make(Family::A1, n));
    out.push_back(make(Family::B1, n));
    out.push_back(make(Family::B2, n));
    for (const auto& a : alphas) out.push_back(with_alpha(n, a));
    for (const auto& b : betas) out.push_back(with_beta(n, b));
    for (std::size_t r = 3; r <= n + 1; ++r) out.push_back(with_r(n, r));
  }
  return out;
}

Rational generic_for(const NAryAlgebra& alg, std::uint64_t seed) {
  const auto elim = parametric_eliminate(compress_rows(build_system(alg).polynomial()));
  return generic_delta(seed, elim.pivot_polys);
}

std::vector<Rational> dedup(std::vector<Rational> xs) {
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
  return xs;
}

void fail(ClaimResult& c, std::string line) {
  c.pass = false;
  c.failures.push_back(std::move(line));
}

std::string at(const FamilySpec& s, const Rational& d) { return s.to_string() + " delta=" + d.to_string(); }

json rational_list(const std::vector<Rational>& xs) {
  json a = json::array();
  for (const auto& x : xs) a.push_back(x.to_string());
  return a;
}

// β_{n,n+1} in the 1-based labelling of the C families.
const Rational& upper_corner(const LinearMap& phi) { return phi(phi.dim() - 2, phi.dim() - 1); }

ClaimResult claim_identities(const VerifyOptions& o) {
  ClaimResult c{"identities", "Filippov identity on the catalog grid; M8 is Malcev and not Filippov", true, {}, {}};
  std::size_t checked = 0;
  for (const auto& spec : identity_grid()) {
    const auto v = check_filippov(o.builder(spec));
    ++checked;
    if (!v.empty()) {
      fail(c, spec.to_string() + ": " + std::to_string(v.size()) + " Filippov violations, first at " +
                  violation_to_json(v.front()).dump());
    }
  }
  const NAryAlgebra m8 = o.builder(make(Family::M8, 3));
  const auto malcev = check_nary_malcev(m8);
  const auto filippov = check_filippov(m8);
  if (!malcev.empty()) fail(c, "M8: Malcev violation at " + violation_to_json(malcev.front()).dump());
  if (filippov.empty()) fail(c, "M8: no Filippov violation found");
  c.details = {{"family_instances", checked},
               {"m8_malcev_violations", malcev.size()},
               {"m8_filippov_violations", filippov.size()},
               {"m8_filippov_witness", filippov.empty() ? json(nullptr) : violation_to_json(filippov.front())}};
  return c;
}

ClaimResult claim_nonsimple(const VerifyOptions& o) {
  ClaimResult c{"nonsimple", "non-simple algebras have nontrivial delta-derivations for every probed delta", true, {}, {}};
  json rows = json::array();
  for (const auto& spec : default_grid()) {
    if (spec.is_simple()) continue;
    const NAryAlgebra alg = o.builder(spec);
    const SubspaceBasis cent = centroid(alg);
    const auto probes = dedup({Rational(-1), Rational(1, 2), Rational(2), Rational(1, static_cast<long>(spec.n)),
                               generic_for(alg, o.seed)});
    for (const auto& d : probes) {
      const ClassifyReport r = classify(alg, d, cent);
      rows.push_back({{"algebra", spec.to_string()}, {"delta", d.to_string()}, {"dimension", r.dimension},
                      {"centroid_dimension", r.centroid_dimension}, {"nontrivial", r.nontrivial}});
      if (!r.nontrivial) {
        fail(c, at(spec, d) + ": derivation space (dim " + std::to_string(r.dimension) +
                    ") lies inside the centroid (dim " + std::to_string(r.centroid_dimension) + ")");
      }
    }
  }
  c.details = {{"cases", rows}};
  return c;
}

ClaimResult claim_simple_dr(const VerifyOptions& o) {
  ClaimResult c{"simple-dr", "simple D_{n+1}: nontrivial exactly at delta = -1, antiderivations of dimension n(n+3)/2",
                true, {}, {}};
  json rows = json::array();
  for (std::size_t n = 2; n <= 4; ++n) {
    const FamilySpec spec = with_r(n, n + 1);
    const NAryAlgebra alg = o.builder(spec);
    const SubspaceBasis cent = centroid(alg);
    const auto probes = dedup({Rational(-1), Rational(1, 2), Rational(2), Rational(-2),
                               Rational(1, static_cast<long>(n)), generic_for(alg, o.seed)});
    for (const auto& d : probes) {
      const ClassifyReport r = classify(alg, d, cent);
      rows.push_back({{"algebra", spec.to_string()}, {"delta", d.to_string()}, {"dimension", r.dimension},
                      {"nontrivial", r.nontrivial}});
      const bool anti = d == Rational(-1);
      if (r.nontrivial != anti) fail(c, at(spec, d) + ": nontrivial = " + (r.nontrivial ? "true" : "false"));
      if (anti) {
        const std::size_t expected = n * (n + 3) / 2;
        if (r.dimension != expected) {
          fail(c, at(spec, d) + ": dimension " + std::to_string(r.dimension) + ", expected " + std::to_string(expected));
        }
        for (const auto& phi : derivation_space(alg, d).basis) {
          const BlockProfile p = block_profile(phi, spec, d);
          if (!p.passes()) fail(c, at(spec, d) + ": block shape violated by " + map_to_json(phi).dump());
        }
      }
    }
  }
  c.details = {{"cases", rows}};
  return c;
}

ClaimResult claim_block_shapes(const VerifyOptions& o) {
  ClaimResult c{"block-shapes", "block structure of every derivation-space basis element (B1, B2, C1, C2, Dr)", true, {}, {}};
  json rows = json::array();
  for (const auto& spec : default_grid()) {
    if (spec.family == Family::A1) continue;
    const NAryAlgebra alg = o.builder(spec);
    std::vector<Rational> probes{Rational(-1), Rational(1, 2), Rational(2), Rational(1, static_cast<long>(spec.n)),
                                 Rational(-1, 4), Rational(-4), generic_for(alg, o.seed)};
    if (spec.r) probes.push_back(Rational(1, static_cast<long>(*spec.r - 1)));
    for (const auto& d : dedup(probes)) {
      const DerivationSpace space = derivation_space(alg, d);
      std::size_t bad = 0;
      std::set<std::string> broken;
      for (const auto& phi : space.basis) {
        const BlockProfile p = block_profile(phi, spec, d);
        if (p.passes()) continue;
        if (bad++ == 0) {
          std::string names;
          for (const auto& cl : p.clauses)
            if (cl.tested && !cl.holds) names += (names.empty() ? "" : "; ") + cl.name;
          fail(c, at(spec, d) + ": clause(s) [" + names + "] fail for " + map_to_json(phi).dump());
        }
        for (const auto& cl : p.clauses)
          if (cl.tested && !cl.holds) broken.insert(cl.name);
      }
      rows.push_back({{"algebra", spec.to_string()}, {"delta", d.to_string()}, {"dimension", space.dimension()},
                      {"failing_elements", bad}, {"failing_clauses", std::vector<std::string>(broken.begin(), broken.end())}});
    }
  }
  c.details = {{"cases", rows}};
  return c;
}

ClaimResult claim_c2_exceptional(const VerifyOptions& o) {
  ClaimResult c{"c2-exceptional", "C2(beta=3/2): exceptional delta = -1/4 and -4 with beta_{n,n+1} != 0", true, {}, {}};
  json rows = json::array();
  for (std::size_t n = 2; n <= 5; ++n) {
    const FamilySpec spec = with_beta(n, Rational(3, 2));
    const NAryAlgebra alg = o.builder(spec);
    const ScanReport s = scan(alg, {}, o.seed);
    const std::size_t generic = derivation_space(alg, s.generic_delta).dimension();
    json row = {{"algebra", spec.to_string()}, {"pivot_roots", rational_list(s.pivot_roots)},
                {"generic_delta", s.generic_delta.to_string()}, {"generic_dimension", generic}};
    for (const Rational& d : {Rational(-1, 4), Rational(-4)}) {
      if (!std::binary_search(s.pivot_roots.begin(), s.pivot_roots.end(), d)) {
        fail(c, spec.to_string() + ": " + d.to_string() + " is not among the pivot roots");
      }
      const DerivationSpace sp = derivation_space(alg, d);
      row["dimension_at_" + d.to_string()] = sp.dimension();
      if (sp.dimension() <= generic) {
        fail(c, at(spec, d) + ": dimension " + std::to_string(sp.dimension()) + " does not exceed generic " +
                    std::to_string(generic));
      }
      const bool corner = std::any_of(sp.basis.begin(), sp.basis.end(),
                                      [](const LinearMap& m) { return !upper_corner(m).is_zero(); });
      if (!corner) fail(c, at(spec, d) + ": no basis element with beta_{n,n+1} != 0");
    }
    for (const auto& phi : derivation_space(alg, s.generic_delta).basis) {
      if (!upper_corner(phi).is_zero()) fail(c, at(spec, s.generic_delta) + ": generic element has beta_{n,n+1} != 0");
    }
    rows.push_back(row);
  }
  c.details = {{"cases", rows}};
  return c;
}

ClaimResult claim_c1_exceptional(const VerifyOptions& o) {
  ClaimResult c{"c1-exceptional", "C1(alpha=2): dimension jumps at delta = -1; beta_{n,n+1} = 0 generically", true, {}, {}};
  json rows = json::array();
  for (std::size_t n = 2; n <= 5; ++n) {
    const FamilySpec spec = with_alpha(n, Rational(2));
    const NAryAlgebra alg = o.builder(spec);
    const Rational g = generic_for(alg, o.seed);
    const DerivationSpace gen = derivation_space(alg, g);
    const DerivationSpace anti = derivation_space(alg, Rational(-1));
    rows.push_back({{"algebra", spec.to_string()}, {"generic_delta", g.to_string()},
                    {"generic_dimension", gen.dimension()}, {"dimension_at_-1", anti.dimension()}});
    if (anti.dimension() <= gen.dimension()) {
      fail(c, spec.to_string() + ": dimension at -1 (" + std::to_string(anti.dimension()) + ") does not exceed generic (" +
                  std::to_string(gen.dimension()) + ")");
    }
    for (const auto& phi : gen.basis) {
      if (!upper_corner(phi).is_zero()) fail(c, at(spec, g) + ": generic element has beta_{n,n+1} != 0");
    }
  }
  c.details = {{"cases", rows}};
  return c;
}

ClaimResult claim_m8(const VerifyOptions& o) {
  ClaimResult c{"m8", "M8 has no nontrivial delta-derivations; Der(M8) is spanned by inner derivations", true, {}, {}};
  FamilySpec spec = make(Family::M8, 3);
  const NAryAlgebra m8 = o.builder(spec);
  json dims = json::object();
  for (const Rational& d : {Rational(-1), Rational(1, 2), Rational(2), Rational(1, 4), Rational(-1, 4)}) {
    const std::size_t k = derivation_space(m8, d).dimension();
    dims[d.to_string()] = k;
    if (k != 0) fail(c, "M8 delta=" + d.to_string() + ": dimension " + std::to_string(k) + ", expected 0");
  }
  const SubspaceBasis cent = centroid(m8);
  const DerivationSpace third = derivation_space(m8, Rational(1, 3));
  dims["1/3"] = third.dimension();
  const SubspaceBasis scalars = SubspaceBasis::span(64, {LinearMap::identity(8).flatten()});
  if (third.dimension() != 1) fail(c, "M8 delta=1/3: dimension " + std::to_string(third.dimension()) + ", expected 1");
  if (!(third.space == cent)) fail(c, "M8 delta=1/3: space differs from the centroid");
  if (!(cent == scalars)) fail(c, "M8: centroid is not the scalar maps");
  const DerivationSpace der = derivation_space(m8, Rational(1));
  const SubspaceBasis inner = inner_derivations_m8(m8);
  dims["1"] = der.dimension();
  const bool in1 = is_subspace_of(inner, der.space);
  const bool in2 = is_subspace_of(der.space, inner);
  if (!in1) fail(c, "M8: some inner derivation is not a derivation");
  if (!in2) fail(c, "M8: some derivation is not inner");
  c.details = {{"dimensions", dims}, {"centroid_dimension", cent.dim()}, {"inner_dimension", inner.dim()},
               {"inner_in_der", in1}, {"der_in_inner", in2}};
  return c;
}

NAryAlgebra random_algebra(std::mt19937_64& gen, std::size_t dim) {
  std::vector<std::string> names;
  for (std::size_t i = 1; i <= dim; ++i) names.push_back("e" + std::to_string(i));
  for (;;) {
    NAryAlgebra::ProductTable table;
    const std::uint64_t density = 2 + gen() % 3;  // keep 1/2, 3/4 or all tuples
    for (const auto& t : sorted_tuples(dim, 3, false)) {
      if (gen() % 4 >= density) continue;
      Vector v(dim);
      for (auto& x : v) {
        if (gen() % 3 == 0) continue;
        const long c = static_cast<long>(gen() % 4);
        x = Rational(c < 2 ? c - 2 : c - 1);
      }
      table.emplace(t, std::move(v));
    }
    NAryAlgebra alg(3, dim, names, std::move(table));
    if (!alg.products().empty()) return alg;
  }
}

ClaimResult claim_oracle(const VerifyOptions& o) {
  ClaimResult c{"oracle", "solver agrees with brute-force assembly on 20 random ternary algebras", true, {}, {}};
  std::mt19937_64 gen(o.seed);
  json rows = json::array();
  for (int k = 0; k < 20; ++k) {
    const std::size_t dim = 3 + gen() % 2;
    const NAryAlgebra alg = random_algebra(gen, dim);
    const long num = static_cast<long>(gen() % 13) - 6;
    const long den = static_cast<long>(1 + gen() % 6);
    const Rational d(num, den);
    const DerivationSpace solver = derivation_space(alg, d);
    const SubspaceBasis brute = oracle::derivation_space(alg, d);
    const bool same = solver.space == brute;
    rows.push_back({{"case", k}, {"dim", dim}, {"products", alg.products().size()}, {"delta", d.to_string()},
                    {"dimension", solver.dimension()}, {"oracle_dimension", brute.dim()}, {"agree", same}});
    if (!same) {
      fail(c, "random case " + std::to_string(k) + " delta=" + d.to_string() + ": solver dim " +
                  std::to_string(solver.dimension()) + ", oracle dim " + std::to_string(brute.dim()) + ", algebra " +
                  algebra_to_json(alg).dump());
    }
  }
  c.details = {{"cases", rows}};
  return c;
}

using ClaimFn = ClaimResult (*)(const VerifyOptions&);

const std::vector<std::pair<std::string, ClaimFn>>& registry() {
  static const std::vector<std::pair<std::string, ClaimFn>> r{
      {"identities", claim_identities}, {"nonsimple", claim_nonsimple}, {"simple-dr", claim_simple_dr},
      {"block-shapes", claim_block_shapes},         {"c2-exceptional", claim_c2_exceptional},     {"c1-exceptional", claim_c1_exceptional},
      {"m8", claim_m8},     {"oracle", claim_oracle}};
  return r;
}

}  // namespace

std::vector<FamilySpec> identity_grid() {
  return grid({Rational(1), Rational(2), Rational(-3)}, {Rational(1), Rational(3, 2), Rational(-2)});
}

std::vector<FamilySpec> default_grid() { return grid({Rational(2)}, {Rational(3, 2)}); }

const std::vector<std::string>& claim_ids() {
  static const std::vector<std::string> ids = [] {
    std::vector<std::string> v;
    for (const auto& [id, fn] : registry()) v.push_back(id);
    return v;
  }();
  return ids;
}

bool VerifyReport::pass() const {
  return std::all_of(claims.begin(), claims.end(), [](const ClaimResult& c) { return c.pass; });
}

json VerifyReport::to_json() const {
  json cs = json::array();
  for (const auto& c : claims) {
    cs.push_back({{"id", c.id}, {"title", c.title}, {"pass", c.pass}, {"failures", c.failures}, {"details", c.details}});
  }
  return {{"tool", "naryd"}, {"version", kVersion}, {"command", "verify-paper"}, {"seed", seed}, {"claims", cs},
          {"pass", pass()}};
}

VerifyReport verify_paper(const VerifyOptions& options) {
  for (const auto& id : options.only) {
    const auto& ids = claim_ids();
    if (std::find(ids.begin(), ids.end(), id) == ids.end()) throw std::invalid_argument("unknown claim id \"" + id + "\"");
  }
  VerifyReport rep;
  rep.seed = options.seed;
  for (const auto& [id, fn] : registry()) {
    if (!options.only.empty() && std::find(options.only.begin(), options.only.end(), id) == options.only.end()) continue;
    rep.claims.push_back(fn(options));
  }
  return rep;
}

}  // namespace naryd
