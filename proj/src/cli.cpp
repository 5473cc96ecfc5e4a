#include "naryd/cli.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "naryd/identities.hpp"
#include "naryd/io.hpp"
#include "naryd/verify.hpp"

namespace naryd {

namespace {

constexpr const char* kVersion = "0.1.0";

struct Options {
  std::string verb;
  std::string algebra;
  std::string delta;
  std::string alpha;
  std::string beta;
  std::string out;
  std::string format = "json";
  std::vector<std::string> only;
};

struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct Source {
  NAryAlgebra algebra;
  std::string label;
  std::optional<FamilySpec> spec;
};

Source load_source(const Options& o) {
  if (o.algebra.empty()) throw UsageError("verb \"" + o.verb + "\" needs --algebra <spec|path.json>");
  const bool is_file = o.algebra.ends_with(".json") || std::filesystem::is_regular_file(o.algebra);
  if (is_file) {
    if (!o.alpha.empty() || !o.beta.empty()) throw UsageError("--alpha/--beta apply to family specs only");
    return {load_algebra_file(o.algebra), o.algebra, std::nullopt};
  }
  FamilySpec spec = FamilySpec::parse(o.algebra);
  if (!o.alpha.empty()) {
    if (spec.family != Family::C1) throw UsageError("--alpha applies to C1 only");
    spec.alpha = Rational::parse(o.alpha);
  }
  if (!o.beta.empty()) {
    if (spec.family != Family::C2) throw UsageError("--beta applies to C2 only");
    spec.beta = Rational::parse(o.beta);
  }
  return {build_family(spec), spec.to_string(), spec};
}

const char* paint(bool ok, bool color) {
  if (!color) return ok ? "PASS" : "FAIL";
  return ok ? "\x1b[32mPASS\x1b[0m" : "\x1b[31mFAIL\x1b[0m";
}

std::string render_map(const LinearMap& m) {
  std::ostringstream os;
  for (std::size_t i = 0; i < m.dim(); ++i) {
    os << "    [";
    for (std::size_t j = 0; j < m.dim(); ++j) os << (j ? " " : "") << m(i, j);
    os << "]\n";
  }
  return os.str();
}

int cmd_list(const Options& o, std::ostream& out) {
  const std::vector<std::string> families{"A1:n=<n>", "B1:n=<n>", "B2:n=<n>", "C1:n=<n>,alpha=<p/q>",
                                          "C2:n=<n>,beta=<p/q>", "Dr:n=<n>,r=<r>", "M8"};
  if (o.format == "text") {
    out << "families:\n";
    for (const auto& f : families) out << "  " << f << "\n";
    out << "claims:\n";
    for (const auto& c : claim_ids()) out << "  " << c << "\n";
    return 0;
  }
  out << json{{"families", families}, {"claims", claim_ids()}}.dump(2) << "\n";
  return 0;
}

int cmd_show(const Options& o, std::ostream& out) {
  if (o.algebra == "octonions") {
    const json t = octonion_table_json(build_octonions());
    if (o.format == "text") {
      const auto names = build_octonions().basis_names();
      for (const auto& p : t["products"]) {
        out << names[p["args"][0].get<std::size_t>()] << " * " << names[p["args"][1].get<std::size_t>()] << " = "
            << p["value"].dump() << "\n";
      }
    } else {
      out << t.dump(2) << "\n";
    }
    return 0;
  }
  const Source s = load_source(o);
  if (o.format == "text") {
    const auto& names = s.algebra.basis_names();
    out << s.label << ": arity " << s.algebra.arity() << ", dimension " << s.algebra.dim() << "\n";
    for (const auto& [key, value] : s.algebra.products()) {
      out << "  [";
      for (std::size_t i = 0; i < key.size(); ++i) out << (i ? ", " : "") << names[key[i]];
      out << "] =";
      bool first = true;
      for (std::size_t j = 0; j < value.size(); ++j) {
        if (value[j].is_zero()) continue;
        out << (first ? " " : " + ") << value[j] << "*" << names[j];
        first = false;
      }
      out << "\n";
    }
    return 0;
  }
  out << algebra_to_json(s.algebra).dump(2) << "\n";
  return 0;
}

int cmd_check(const Options& o, std::ostream& out, bool color) {
  const Source s = load_source(o);
  const auto fil = check_filippov(s.algebra);
  const auto mal = check_nary_malcev(s.algebra);
  const auto part = [](const std::vector<Violation>& v) {
    return json{{"pass", v.empty()}, {"violations", v.size()},
                {"witness", v.empty() ? json(nullptr) : violation_to_json(v.front())}};
  };
  const bool ok = fil.empty() && mal.empty();
  if (o.format == "text") {
    const auto line = [&](const char* name, const std::vector<Violation>& v) {
      out << name << ": " << paint(v.empty(), color);
      if (!v.empty()) out << " (" << v.size() << " violations, first at " << violation_to_json(v.front()).dump() << ")";
      out << "\n";
    };
    out << s.label << "\n";
    line("filippov", fil);
    line("malcev", mal);
  } else {
    out << json{{"tool", "naryd"}, {"version", kVersion}, {"command", "check"}, {"algebra", s.label},
                {"filippov", part(fil)}, {"malcev", part(mal)}, {"pass", ok}}
               .dump(2)
        << "\n";
  }
  return ok ? 0 : 1;
}

Rational need_delta(const Options& o) {
  if (o.delta.empty()) throw UsageError("verb \"" + o.verb + "\" needs --delta <p/q>");
  return Rational::parse(o.delta);
}

int cmd_derive(const Options& o, std::ostream& out) {
  const Source s = load_source(o);
  const Rational delta = need_delta(o);
  const SubspaceBasis cent = centroid(s.algebra);
  const ClassifyReport r = classify(s.algebra, delta, cent);
  const DerivationSpace space = derivation_space(s.algebra, delta);
  if (o.format == "text") {
    out << s.label << " delta=" << delta << "\n"
        << "dimension: " << r.dimension << "\ncentroid_dimension: " << r.centroid_dimension
        << "\nnontrivial: " << (r.nontrivial ? "true" : "false") << "\n";
    for (std::size_t k = 0; k < space.basis.size(); ++k) out << "  basis " << k << ":\n" << render_map(space.basis[k]);
    if (r.witness) out << "  witness:\n" << render_map(*r.witness);
    return 0;
  }
  json j = classify_to_json(r);
  json basis = json::array();
  for (const auto& m : space.basis) basis.push_back(map_to_json(m));
  j["basis"] = basis;
  j["algebra"] = s.label;
  j["command"] = "derive";
  j["tool"] = "naryd";
  j["version"] = kVersion;
  out << j.dump(2) << "\n";
  return 0;
}

int cmd_centroid(const Options& o, std::ostream& out) {
  const Source s = load_source(o);
  const SubspaceBasis cent = centroid(s.algebra);
  const std::size_t d = s.algebra.dim();
  if (o.format == "text") {
    out << s.label << " centroid dimension: " << cent.dim() << "\n";
    for (std::size_t k = 0; k < cent.dim(); ++k)
      out << "  basis " << k << ":\n" << render_map(LinearMap::from_flat(d, cent.vectors()[k]));
    return 0;
  }
  json basis = json::array();
  for (const auto& v : cent.vectors()) basis.push_back(map_to_json(LinearMap::from_flat(d, v)));
  out << json{{"tool", "naryd"}, {"version", kVersion}, {"command", "centroid"}, {"algebra", s.label},
              {"dimension", cent.dim()}, {"basis", basis}}
             .dump(2)
      << "\n";
  return 0;
}

int cmd_scan(const Options& o, std::ostream& out) {
  const Source s = load_source(o);
  std::vector<Rational> extra;
  if (s.spec && s.spec->r) extra.push_back(Rational(1, static_cast<long>(*s.spec->r - 1)));
  if (!o.delta.empty()) extra.push_back(Rational::parse(o.delta));
  const ScanReport r = scan(s.algebra, extra);
  if (o.format == "text") {
    out << s.label << "\ngeneric rank " << r.generic_rank << ", generic dimension " << r.generic_dimension
        << " (generic delta " << r.generic_delta << ", seed " << r.seed << ")\n";
    out << "pivot roots:";
    for (const auto& x : r.pivot_roots) out << " " << x;
    out << "\nexceptional values:";
    for (const auto& x : r.exceptional_values) out << " " << x;
    out << "\nirrational factors:";
    for (const auto& f : r.irrational_factors) out << " (" << f.to_string() << ")";
    out << "\n";
    for (const auto& c : r.classifications) {
      out << "  delta=" << c.delta << " dimension=" << c.dimension << " nontrivial=" << (c.nontrivial ? "true" : "false")
          << "\n";
    }
    return 0;
  }
  json j = scan_to_json(r);
  j["algebra"] = s.label;
  j["command"] = "scan";
  j["tool"] = "naryd";
  j["version"] = kVersion;
  out << j.dump(2) << "\n";
  return 0;
}

int cmd_verify(const Options& o, std::ostream& out, bool color) {
  VerifyOptions vo;
  vo.only = o.only;
  const VerifyReport rep = verify_paper(vo);
  if (o.format == "text") {
    for (const auto& c : rep.claims) {
      out << paint(c.pass, color) << " " << c.id << ": " << c.title << "\n";
      for (const auto& f : c.failures) out << "    " << f << "\n";
    }
  } else {
    out << rep.to_json().dump(2) << "\n";
  }
  return rep.pass() ? 0 : 1;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, bool color) {
  Options o;
  CLI::App app{"Exact delta-derivation analysis of n-ary algebras", "naryd"};
  app.set_version_flag("--version", kVersion);
  app.add_option("verb", o.verb, "list | show | check | derive | centroid | scan | verify-paper")
      ->required()
      ->check(CLI::IsMember({"list", "show", "check", "derive", "centroid", "scan", "verify-paper"}));
  app.add_option("--algebra", o.algebra, "family spec (e.g. \"Dr:n=3,r=4\", \"M8\") or algebra JSON path");
  app.add_option("--delta", o.delta, "rational delta, \"p/q\"");
  app.add_option("--alpha", o.alpha, "alpha for C1");
  app.add_option("--beta", o.beta, "beta for C2");
  app.add_option("--out", o.out, "write the report to this file");
  app.add_option("--format", o.format, "json or text")->check(CLI::IsMember({"json", "text"}));
  app.add_option("--only", o.only, "verify-paper claim id (repeatable)");

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForVersion&) {
    out << kVersion << "\n";
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "naryd: " << e.what() << "\n" << app.help();
    return 2;
  }

  std::ostringstream buffer;
  int code = 0;
  try {
    if (o.verb == "list") code = cmd_list(o, buffer);
    else if (o.verb == "show") code = cmd_show(o, buffer);
    else if (o.verb == "check") code = cmd_check(o, buffer, color && o.out.empty());
    else if (o.verb == "derive") code = cmd_derive(o, buffer);
    else if (o.verb == "centroid") code = cmd_centroid(o, buffer);
    else if (o.verb == "scan") code = cmd_scan(o, buffer);
    else code = cmd_verify(o, buffer, color && o.out.empty());
  } catch (const UsageError& e) {
    err << "naryd: " << e.what() << "\n" << app.help();
    return 2;
  } catch (const std::invalid_argument& e) {
    err << "naryd: " << e.what() << "\n";
    return 2;
  } catch (const std::domain_error& e) {
    err << "naryd: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "naryd: internal error: " << e.what() << "\n";
    return 2;
  }

  if (o.out.empty()) {
    out << buffer.str();
  } else {
    std::ofstream f(o.out, std::ios::binary);
    if (!f) {
      err << "naryd: cannot write \"" << o.out << "\"\n";
      return 2;
    }
    f << buffer.str();
  }
  return code;
}

}  // namespace naryd
