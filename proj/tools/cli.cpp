#include "cli.hpp"

#include <cstdlib>
#include <functional>
#include <future>
#include <ostream>
#include <variant>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "congruence/chowforms.hpp"
#include "congruence/error.hpp"
#include "congruence/formulas.hpp"
#include "congruence/oracles.hpp"
#include "congruence/parse.hpp"
#include "congruence/schubert.hpp"

namespace congruence::cli {

namespace {

using json = nlohmann::ordered_json;
using AnyField = std::variant<RationalField, PrimeField>;

struct Options {
  std::string seed_text;
  std::uint32_t prime = PrimeField::kDefaultPrime;
  std::string field;  // empty: command default
  bool plain = false;
};

std::uint64_t resolve_seed(const Options& o) {
  std::string text = o.seed_text;
  if (text.empty()) {
    const char* env = std::getenv("CONGRUENCE_LAB_SEED");
    if (env == nullptr || *env == '\0') return kDefaultSeed;
    text = env;
  }
  try {
    std::size_t used = 0;
    auto v = std::stoull(text, &used, 0);
    if (used != text.size()) throw ParseError("");
    return v;
  } catch (const std::exception&) {
    throw ParseError("invalid seed '" + text + "'");
  }
}

AnyField make_field(const Options& o, const std::string& fallback) {
  const std::string name = o.field.empty() ? fallback : o.field;
  if (name == "Q") return RationalField{};
  if (name == "Fp") return PrimeField(o.prime);
  throw ParseError("unknown field '" + name + "' (expected Q or Fp)");
}

void emit(std::ostream& out, const Options& o, const json& record, const std::string& plain) {
  if (o.plain) out << plain << "\n";
  else out << record.dump() << "\n";
}

int to_int(const std::string& s, const std::string& what) {
  try {
    std::size_t used = 0;
    int v = std::stoi(s, &used);
    if (used != s.size()) throw ParseError("");
    return v;
  } catch (const std::exception&) {
    throw ParseError("invalid " + what + " '" + s + "'");
  }
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  for (;;) {
    auto at = s.find(sep, start);
    out.push_back(s.substr(start, at == std::string::npos ? std::string::npos : at - start));
    if (at == std::string::npos) return out;
    start = at + 1;
  }
}

// ---------------------------------------------------------------------------
// Named objects

template <ExactField F>
RationalSpaceCurve<F> curve_by_name(const std::string& name, const F& k) {
  if (name == "twisted-cubic") return twisted_cubic(k);
  if (name == "rational-quartic") return rational_quartic(k);
  if (name == "rational-quintic") return rational_quintic(k);
  if (name == "conic") return planar_conic(k);
  if (name == "line") return curve_by_name("s,t,0,0", k);
  auto parts = split(name, ',');
  if (parts.size() != 4) throw ParseError("unknown curve '" + name + "'");
  auto ring = make_ring(k, {"s", "t"});
  std::vector<MultiPoly<F>> polys;
  int d = 0;
  for (auto& p : parts) {
    polys.push_back(parse_polynomial(p, ring));
    d = std::max(d, polys.back().total_degree());
  }
  std::array<BinaryForm<F>, 4> phi{BinaryForm<F>(k, d), BinaryForm<F>(k, d), BinaryForm<F>(k, d),
                                   BinaryForm<F>(k, d)};
  for (std::size_t i = 0; i < 4; ++i) phi[i] = to_binary_form(polys[i], d);
  return RationalSpaceCurve<F>(std::move(phi));
}

// "fermat:<d>" / "random:<d>:<seed>"
std::optional<std::pair<std::string, std::vector<std::string>>> tagged(const std::string& name) {
  auto parts = split(name, ':');
  if (parts.size() < 2) return std::nullopt;
  auto tag = parts.front();
  parts.erase(parts.begin());
  return std::make_pair(tag, parts);
}

std::uint64_t to_seed(const std::string& s) {
  try {
    std::size_t used = 0;
    auto v = std::stoull(s, &used, 0);
    if (used != s.size()) throw ParseError("");
    return v;
  } catch (const std::exception&) {
    throw ParseError("invalid seed '" + s + "'");
  }
}

template <ExactField F>
SurfaceP3<F> surface_by_name(const std::string& name, const F& k) {
  if (name == "quadric") return fermat_surface(k, 2);
  if (auto t = tagged(name)) {
    const auto& [tag, args] = *t;
    if (tag == "fermat" && args.size() == 1) return fermat_surface(k, to_int(args[0], "degree"));
    if (tag == "random" && args.size() == 2) return random_surface(k, to_int(args[0], "degree"), to_seed(args[1]));
    throw ParseError("unknown surface '" + name + "'");
  }
  return SurfaceP3<F>(parse_polynomial(name, surface_ring(k)));
}

template <ExactField F>
MultiPoly<F> plane_curve_by_name(const std::string& name, const F& k) {
  if (name == "klein") return klein_quartic(k);
  if (name == "two-conics") {
    auto r = plane_ring(k);
    return parse_polynomial("(x^2 + y^2 - z^2)*(x^2 - 2*y^2 + 3*z^2)", r);
  }
  if (auto t = tagged(name)) {
    const auto& [tag, args] = *t;
    if (tag == "fermat" && args.size() == 1) return fermat_plane_curve(k, to_int(args[0], "degree"));
    if (tag == "random" && args.size() == 2)
      return random_plane_curve(k, to_int(args[0], "degree"), to_seed(args[1]));
    throw ParseError("unknown plane curve '" + name + "'");
  }
  auto f = parse_polynomial(name, plane_ring(k));
  if (f.is_zero() || !f.is_homogeneous()) throw DomainError("plane curve must be a nonzero ternary form");
  return f;
}

template <ExactField F>
std::pair<std::array<BinaryForm<F>, 3>, PlaneCurveSing> parametrization_by_name(const std::string& name,
                                                                                 const F& k) {
  if (name == "conic") return {conic_parametrization(k), {2, 0, 0}};
  if (name == "cuspidal-cubic") return {cuspidal_cubic_parametrization(k), {3, 1, 0}};
  if (name == "nodal-cubic") return {nodal_cubic_parametrization(k), {3, 0, 1}};
  throw ParseError("unknown plane parametrization '" + name + "'");
}

// ---------------------------------------------------------------------------
// Subcommands

json report_json(const OracleReport& r) {
  json j;
  j["oracle"] = r.name;
  j["seed"] = r.seed;
  j["field"] = r.field;
  j["count"] = r.count;
  j["count_with_multiplicity"] = r.count_with_multiplicity ? json(*r.count_with_multiplicity) : json(nullptr);
  j["multiplicity_counted"] = r.multiplicity_counted;
  j["retries"] = r.retries;
  j["elapsed_ms"] = r.elapsed_ms;
  return j;
}

struct Verified {
  OracleReport report;
  std::int64_t expected;
};

template <ExactField F>
Verified verify_one(const std::string& oracle, const std::string& object, const F& k, std::uint64_t seed) {
  auto curve_expect = [&](const RationalSpaceCurve<F>& c) {
    CurveData data{c.degree(), 0, {}, c.is_planar()};
    return sec_bidegree(data);
  };
  if (oracle == "sec-order") {
    auto c = curve_by_name(object, k);
    return {oracle_sec_order(c, seed), curve_expect(c).order};
  }
  if (oracle == "sec-class") {
    auto c = curve_by_name(object, k);
    return {oracle_sec_class(c, seed), curve_expect(c).cls};
  }
  if (oracle == "ch0-degree") {
    auto c = curve_by_name(object, k);
    return {oracle_ch0_degree(c, seed), ch0_degree(c.degree())};
  }
  if (oracle == "ch1-degree") {
    auto s = surface_by_name(object, k);
    return {oracle_ch1_degree(s, seed), ch1_degree(s.degree())};
  }
  if (oracle == "infl-through-point") {
    auto s = surface_by_name(object, k);
    return {oracle_infl_through_point(s, seed), infl_through_point(s.degree())};
  }
  if (oracle == "dual-surface-degree") {
    auto s = surface_by_name(object, k);
    return {oracle_dual_surface_degree(s, seed), dual_surface_degree(s.degree())};
  }
  if (oracle == "plane-inflections") {
    auto f = plane_curve_by_name(object, k);
    return {oracle_plane_inflections(f, seed), plane_infl_count(f.total_degree())};
  }
  if (oracle == "plane-bitangents") {
    auto f = plane_curve_by_name(object, k);
    return {oracle_plane_bitangents(f, seed), plane_bitangent_count(f.total_degree())};
  }
  if (oracle == "dual-curve-degree") {
    auto [gamma, sing] = parametrization_by_name(object, k);
    return {oracle_dual_curve_degree(gamma, seed), dual_curve_degree(sing)};
  }
  throw ParseError("unknown oracle '" + oracle + "'");
}

struct VerifyJob {
  std::string oracle;
  std::string object;
};

const std::vector<VerifyJob>& acceptance_jobs() {
  static const std::vector<VerifyJob> jobs{
      {"sec-order", "twisted-cubic"},         {"sec-class", "twisted-cubic"},
      {"sec-order", "rational-quartic"},      {"sec-class", "rational-quartic"},
      {"sec-order", "rational-quintic"},      {"sec-class", "rational-quintic"},
      {"ch0-degree", "twisted-cubic"},        {"ch1-degree", "quadric"},
      {"ch1-degree", "random:3:1"},           {"ch1-degree", "random:4:1"},
      {"plane-inflections", "fermat:3"},      {"plane-inflections", "random:4:1"},
      {"plane-bitangents", "random:4:1"},     {"plane-bitangents", "klein"},
      {"infl-through-point", "random:4:1"},   {"dual-surface-degree", "random:4:1"},
      {"dual-curve-degree", "conic"},         {"dual-curve-degree", "cuspidal-cubic"},
      {"dual-curve-degree", "nodal-cubic"},
  };
  return jobs;
}

json verified_json(const std::string& object, const Verified& v) {
  auto j = report_json(v.report);
  j["object"] = object;
  j["expected"] = v.expected;
  j["verdict"] = v.report.count == v.expected ? "MATCH" : "MISMATCH";
  return j;
}

std::string verified_plain(const std::string& object, const Verified& v) {
  return v.report.name + " " + object + ": count " + std::to_string(v.report.count) + ", expected " +
         std::to_string(v.expected) + ", " + (v.report.count == v.expected ? "MATCH" : "MISMATCH") + " (seed " +
         std::to_string(v.report.seed) + ", retries " + std::to_string(v.report.retries) + ")";
}

int cmd_verify(const Options& o, const std::string& oracle, const std::string& object, bool all, std::ostream& out) {
  const auto seed = resolve_seed(o);
  const auto field = make_field(o, "Fp");
  if (!all) {
    if (oracle.empty()) throw ParseError("verify needs an oracle name or --all");
    if (object.empty()) throw ParseError("verify needs an object (--curve, --surface, --plane-curve or --param)");
    auto v = std::visit([&](const auto& k) { return verify_one(oracle, object, k, seed); }, field);
    emit(out, o, verified_json(object, v), verified_plain(object, v));
    return v.report.count == v.expected ? kExitOk : kExitMismatch;
  }
  std::vector<std::future<Verified>> pending;
  for (auto& job : acceptance_jobs())
    pending.push_back(std::async(std::launch::async, [&field, &job, seed] {
      return std::visit([&](const auto& k) { return verify_one(job.oracle, job.object, k, seed); }, field);
    }));
  int code = kExitOk;
  for (std::size_t i = 0; i < pending.size(); ++i) {
    const auto& job = acceptance_jobs()[i];
    try {
      auto v = pending[i].get();
      emit(out, o, verified_json(job.object, v), verified_plain(job.object, v));
      if (v.report.count != v.expected) code = std::max(code, kExitMismatch);
    } catch (const GenericityFailure& e) {
      json j{{"oracle", job.oracle}, {"object", job.object}, {"error", e.what()}, {"verdict", "GENERICITY_FAILURE"}};
      emit(out, o, j, job.oracle + " " + job.object + ": " + e.what());
      code = std::max(code, kExitGenericity);
    }
  }
  return code;
}

int cmd_chowform(const Options& o, const std::string& curve, std::ostream& out) {
  const auto seed = resolve_seed(o);
  return std::visit(
      [&](const auto& k) {
        auto c = curve_by_name(curve, k);
        auto f = chow_form(c, seed);
        json j{{"curve", curve}, {"degree", c.degree()}, {"field", k.name()}, {"chow_form", f.to_string()}};
        emit(out, o, j, f.to_string());
        return kExitOk;
      },
      make_field(o, "Q"));
}

int cmd_bidegree(const Options& o, const std::string& kind, int d, int g, const std::string& mults, bool planar,
                 std::ostream& out) {
  CurveData c{d, g, {}, planar};
  if (!mults.empty())
    for (auto& m : split(mults, ',')) c.singular_multiplicities.push_back(to_int(m, "multiplicity"));
  Bidegree b;
  if (kind == "sec") b = sec_bidegree(c);
  else if (kind == "sing-ch0") b = sing_ch0_bidegree(c);
  else if (kind == "bit") b = bit_bidegree(d);
  else if (kind == "infl") b = infl_bidegree(d);
  else throw ParseError("unknown congruence '" + kind + "' (expected sec, bit, infl or sing-ch0)");
  emit(out, o, json{{"order", b.order}, {"class", b.cls}}, b.to_string());
  return kExitOk;
}

int cmd_schubert(const Options& o, const std::string& op, const std::string& a, const std::string& b,
                 std::ostream& out) {
  auto x = SchubertClass::parse(a);
  auto y = SchubertClass::parse(b);
  if (op == "mul") {
    auto p = x * y;
    emit(out, o, json{{"product", p.to_string()}}, p.to_string());
  } else if (op == "count") {
    auto n = intersection_count(x, y);
    emit(out, o, json{{"count", n}}, std::to_string(n));
  } else {
    throw ParseError("unknown schubert operation '" + op + "' (expected mul or count)");
  }
  return kExitOk;
}

int cmd_classify(const Options& o, const std::string& kind, const std::string& line_text, const std::string& object,
                 std::ostream& out) {
  return std::visit(
      [&](const auto& k) {
        auto line = parse_line(line_text, k);
        if (kind == "line-curve") {
          auto c = curve_by_name(object, k);
          auto p = curve_line_profile(line, c);
          auto cls = classify_secant_singularity(p);
          json j{{"line", line.to_string()}, {"object", object}, {"profile", p.to_string()},
                 {"meets", !p.empty()}, {"class", to_string(cls)}};
          emit(out, o, j, to_string(cls) + " " + p.to_string());
          return kExitOk;
        }
        if (kind == "line-surface") {
          auto s = surface_by_name(object, k);
          auto cls = classify_hurwitz_singularity(hurwitz_profile(line, s));
          json flags = json::array();
          for (auto& f : split(cls.flags_string(), '|')) flags.push_back(f);
          json j{{"line", line.to_string()}, {"object", object}, {"profile", cls.profile.to_string()},
                 {"class", to_string(cls.primary)}, {"flags", flags}};
          emit(out, o, j, to_string(cls.primary) + " " + cls.profile.to_string() + " [" + cls.flags_string() + "]");
          return kExitOk;
        }
        throw ParseError("unknown classification '" + kind + "' (expected line-curve or line-surface)");
      },
      make_field(o, "Q"));
}

int cmd_dual(const Options& o, const std::string& op, const std::string& cls, std::ostream& out) {
  if (op != "perp") throw ParseError("unknown dual operation '" + op + "' (expected perp)");
  auto p = perp(SchubertClass::parse(cls));
  json j{{"perp", p.to_string()}};
  std::string plain = p.to_string();
  if (p.is_congruence_class()) {
    auto b = bidegree_of(p);
    j["bidegree"] = json{{"order", b.order}, {"class", b.cls}};
    plain += " " + b.to_string();
  }
  emit(out, o, j, plain);
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact enumerative geometry of lines in P^3", "congruence-lab"};
  app.require_subcommand(1);
  Options o;
  bool json_flag = false;
  app.add_option("--seed", o.seed_text, "random seed (default 0x5EED, or $CONGRUENCE_LAB_SEED)");
  app.add_option("--prime", o.prime, "prime for --field Fp")->capture_default_str();
  app.add_option("--field", o.field, "coefficient field: Q or Fp");
  auto* plain_flag = app.add_flag("--plain", o.plain, "human-readable output");
  app.add_flag("--json", json_flag, "JSON records (default)")->excludes(plain_flag);
  app.fallthrough();

  std::function<int()> action;

  auto* chow = app.add_subcommand("chowform", "canonical Chow form of a rational space curve");
  std::string curve;
  chow->add_option("curve", curve, "twisted-cubic, rational-quartic, rational-quintic, conic, line or f0,f1,f2,f3")
      ->required();
  chow->callback([&] { action = [&] { return cmd_chowform(o, curve, out); }; });

  auto* bideg = app.add_subcommand("bidegree", "bidegree of a congruence from numeric invariants");
  std::string kind, mults;
  int d = 0, g = 0;
  bool planar = false;
  bideg->add_option("kind", kind, "sec, bit, infl or sing-ch0")->required();
  bideg->add_option("--d", d, "degree")->required();
  bideg->add_option("--g", g, "genus (curves)");
  bideg->add_option("--mults", mults, "comma separated multiplicities of ordinary singular points");
  bideg->add_flag("--planar", planar, "the curve lies in a plane");
  bideg->callback([&] { action = [&] { return cmd_bidegree(o, kind, d, g, mults, planar, out); }; });

  auto* sch = app.add_subcommand("schubert", "products in the Chow ring of Gr(1,P^3)");
  std::string op, a, b;
  sch->add_option("op", op, "mul or count")->required();
  sch->add_option("a", a, "class, e.g. 's1' or '3*s2 + s11'")->required();
  sch->add_option("b", b, "class")->required();
  sch->callback([&] { action = [&] { return cmd_schubert(o, op, a, b, out); }; });

  auto* cls = app.add_subcommand("classify", "contact classification of a line");
  std::string ckind, line_text, object;
  cls->add_option("kind", ckind, "line-curve or line-surface")->required();
  cls->add_option("line", line_text, "primal Pluecker coordinates p01,p02,p03,p12,p13,p23")->required();
  cls->add_option("object", object, "named curve/surface or a polynomial")->required();
  cls->callback([&] { action = [&] { return cmd_classify(o, ckind, line_text, object, out); }; });

  auto* ver = app.add_subcommand("verify", "run a counting oracle and compare with the closed formula");
  std::string oracle, vobject;
  bool all = false;
  ver->add_option("oracle", oracle, "oracle name");
  for (const char* flag : {"--curve", "--surface", "--plane-curve", "--param"})
    ver->add_option(flag, vobject, "object for the oracle");
  ver->add_flag("--all", all, "run the acceptance families in parallel");
  ver->callback([&] { action = [&] { return cmd_verify(o, oracle, vobject, all, out); }; });

  auto* dual = app.add_subcommand("dual", "duality on congruence classes");
  std::string dop, dclass;
  dual->add_option("op", dop, "perp")->required();
  dual->add_option("class", dclass, "Schubert class")->required();
  dual->callback([&] { action = [&] { return cmd_dual(o, dop, dclass, out); }; });

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    return action ? action() : kExitUsage;
  } catch (const GenericityFailure& e) {
    err << "genericity failure: " << e.what() << "\n";
    return kExitGenericity;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}

}  // namespace congruence::cli
