#include "superweyl/report.hpp"

#include "superweyl/axioms.hpp"
#include "superweyl/clifford.hpp"
#include "superweyl/generation.hpp"
#include "superweyl/verify.hpp"

#include <algorithm>

namespace superweyl {

namespace {

using GR = GaussianRational;

constexpr std::size_t kSamples = 1000;

class Builder {
 public:
  explicit Builder(const RunConfig& config) : config_(config) {}

  void add(const std::string& name, const std::string& certifies, bool passed, Json details = Json::object()) {
    Json c;
    c["name"] = name;
    c["certifies"] = certifies;
    c["passed"] = passed;
    for (auto& [k, v] : details.items()) c[k] = v;
    checks_.push_back(std::move(c));
    all_ = all_ && passed;
    summary_.push_back(std::string(passed ? "PASS  " : "FAIL  ") + name);
  }

  Report finish() {
    Report r;
    r.command = config_.command;
    r.passed = all_;
    r.document["command"] = config_.command;
    Json cfg;
    cfg["window"] = config_.window;
    cfg["depth"] = config_.depth;
    cfg["tau_floor"] = config_.tau_floor;
    cfg["mu"] = config_.mu;
    if (config_.N) cfg["N"] = *config_.N;
    if (config_.algebra) cfg["algebra"] = algebra_name(*config_.algebra);
    r.document["config"] = std::move(cfg);
    r.document["checks"] = checks_;
    r.document["passed"] = all_;
    r.payload = r.document.dump(2) + "\n";
    r.summary = summary_;
    return r;
  }

 private:
  const RunConfig& config_;
  Json checks_ = Json::array();
  bool all_ = true;
  std::vector<std::string> summary_;
};

Json property_json(const PropertyReport& p) {
  return {{"cases", p.cases}, {"failures", p.failures}, {"first_failure", p.first_failure}};
}

void add_property(Builder& b, const PropertyReport& p, const std::string& certifies) {
  b.add(p.name, certifies, p.passed(), property_json(p));
}

void add_identities(Builder& b, const std::string& name, const std::string& certifies,
                    const std::vector<LiteralIdentity>& ids) {
  bool ok = true;
  Json list = Json::array();
  for (const auto& id : ids) {
    ok = ok && id.holds == id.expected;
    list.push_back({{"identity", id.label}, {"n", id.n}, {"holds", id.holds}, {"expected", id.expected}});
  }
  b.add(name, certifies, ok, {{"identities", list}});
}

Json table_summary(const BracketTable& t) {
  std::size_t held = 0;
  for (const auto& e : t.entries) held += e.held_out ? 1 : 0;
  std::size_t bad_fits = 0;
  for (const auto& f : t.fits) bad_fits += f.ok ? 0 : 1;
  for (const auto& f : t.central_fits) bad_fits += f.ok ? 0 : 1;
  return {{"families", t.families.size()},
          {"brackets", t.entries.size()},
          {"held_out_brackets", held},
          {"coefficient_fits", t.fits.size()},
          {"central_fits", t.central_fits.size()},
          {"failed_fits", bad_fits},
          {"failure", t.failure}};
}

Json central_fit_json(const BracketTable& t) {
  Json out = Json::array();
  for (const auto& f : t.central_fits)
    out.push_back({{"a", f.a}, {"b", f.b}, {"polynomial_in_n", f.poly}, {"ok", f.ok}});
  return out;
}

void add_table(Builder& b, const BracketTable& t, const std::string& certifies) {
  b.add(algebra_name(t.algebra) + " bracket table, window " + std::to_string(t.window), certifies, t.passed,
        table_summary(t));
}

void add_symbol_consistency(Builder& b, const SymbolConsistency& s) {
  b.add(algebra_name(s.algebra) + " symbol brackets match the matrix picture",
        "structure constants of the deformed-product bracket of the field symbols equal those of the matrices; "
        "residual vanishes down to the truncation floor",
        s.passed,
        {{"window", s.window}, {"tau_floor", s.tau_floor}, {"brackets", s.pairs}, {"mismatches", s.mismatches},
         {"first_mismatch", s.first_mismatch}});
}

Report verify_axioms(const RunConfig& c) {
  Builder b(c);
  add_property(b, weyl_relation(kSamples, 11), "the defining relation of the Weyl algebra");
  add_property(b, weyl_associativity(kSamples, 12), "associativity of the normal-ordered product");
  for (int N = 1; N <= 4; ++N)
    add_property(b, clifford_relations(N), "anticommutation relations of the Clifford superalgebra generators");
  add_property(b, superbracket_jacobi(kSamples, 13), "super Jacobi identity for Weyl supermatrices");
  add_property(b, poisson_jacobi(kSamples, 14), "super Jacobi identity for the Poisson bracket of symbols");
  add_property(b, grading_law(kSamples, 15), "the Poisson bracket respects the degree grading");
  add_property(b, degree_zero_closure(kSamples, 16), "degree-zero symbols form a subalgebra");
  return b.finish();
}

Report verify_spo(const RunConfig& c) {
  Builder b(c);
  for (int N = 1; N <= 4; ++N) {
    Sl2Triple s = sl2_generators(N);
    bool he = superbracket(s.h, s.e) == s.e * GR(2);
    bool hf = superbracket(s.h, s.f) == s.f * GR(-2);
    bool ef = superbracket(s.e, s.f) == s.h;
    b.add("sl(2) relations, N = " + std::to_string(N), "[H,E] = 2E, [H,F] = -2F, [E,F] = H", he && hf && ef,
          {{"HE", he}, {"HF", hf}, {"EF", ef}});
  }
  for (int N = 1; N <= 4; ++N) {
    SpanClosure s = spo_closure(N);
    int even = 3 + N * (2 * N - 1), odd = 4 * N;
    bool ok = s.closed && s.even_dim == even && s.odd_dim == odd;
    b.add("spo(2|2N) closure, N = " + std::to_string(N),
          "the odd rho(v)^{+-}, rho(o(2N)) and sl(2) span a superalgebra of dimension (3 + N(2N-1) | 4N)", ok,
          {{"even_dimension", s.even_dim}, {"odd_dimension", s.odd_dim}, {"expected_even", even},
           {"expected_odd", odd}, {"offending", s.offending}});
  }
  for (int N = 1; N <= 3; ++N) {
    SpSymbolReport s = sp_symbol_consistency(N);
    b.add("sp symbol generators, N = " + std::to_string(N),
          "Poisson brackets of the degree-zero odd symbol generators have the structure constants of their "
          "rho^{+-} images",
          s.passed, {{"symbol_rank", s.symbol_rank}, {"matrix_rank", s.matrix_rank}, {"joint_rank", s.joint_rank}});
  }
  return b.finish();
}

Report verify_k2(const RunConfig& c) {
  Builder b(c);
  BracketTable t = bracket_table(Algebra::K2, c.window);
  bool no_central = std::all_of(t.entries.begin(), t.entries.end(), [](const BracketEntry& e) { return e.central.is_zero(); });
  add_table(b, t, "closure of L, H, G, G~ with polynomial structure constants");
  b.add("K2 has no central term", "every K2 bracket has zero identity component", no_central);
  LiteralIdentity v = k2_virasoro(c.window);
  b.add("K2 Virasoro relation", v.label, v.holds, {{"detail", v.detail}});
  SigmaReport s = k2_sigma_homomorphism(c.window);
  b.add("K2 sigma homomorphism", "matrix brackets are the sigma-images of the Poisson brackets of the symbols", s.passed,
        {{"pairs", s.pairs}, {"first_failure", s.first_failure}});
  add_identities(b, "K2 odd sp generators as fields", "rho(v)^{+-} equal the fields G~_{+-1}, G_{+-1}",
                 spo_field_identities(Algebra::K2));
  return b.finish();
}

Report verify_k4hat(const RunConfig& c) {
  Builder b(c);
  BracketTable t = bracket_table(Algebra::K4hat, c.window);
  add_table(b, t, "closure of the sixteen K4hat families with polynomial structure constants");
  add_identities(b, "K4hat odd sp generators as fields", "rho(v)^{+-} in terms of Y, G, X, Z at modes +-1",
                 spo_field_identities(Algebra::K4hat));
  add_symbol_consistency(b, symbol_matrix_consistency(Algebra::K4hat, c.window, c.tau_floor));
  return b.finish();
}

Report verify_ck6(const RunConfig& c) {
  Builder b(c);
  BracketTable t = bracket_table(Algebra::CK6, c.window);
  add_table(b, t, "closure of the thirty-two CK6 families with polynomial structure constants");
  bool no_central = std::all_of(t.entries.begin(), t.entries.end(), [](const BracketEntry& e) { return e.central.is_zero(); });
  b.add("CK6 has no central term", "every CK6 bracket has zero identity component", no_central);
  NegativeControl nc = closure_negative_control(Algebra::CK6, c.window, "T^1");
  b.add("CK6 without T^1 is not closed", "the closure check detects a missing family", nc.detected,
        {{"offending", nc.offending}});
  add_identities(b, "CK6 odd sp generators as fields", "rho(v)^{+-} = G~ - S~/2 and G - S/2 at modes +-1",
                 spo_field_identities(Algebra::CK6));
  std::vector<LiteralIdentity> eta;
  for (int n = -c.window; n <= c.window; ++n)
    for (auto& id : ck6_eta_identities(n)) eta.push_back(std::move(id));
  add_identities(b, "CK6 brackets with rho(eta_k)^+",
                 "[J~^{ij}_n, rho(eta_k)^+] = -n I^k_{n+1} and [J^{ij}_n, rho(eta_k)^+] = -n I_{n+1} for cyclic (i,j,k)",
                 eta);
  add_symbol_consistency(b, symbol_matrix_consistency(Algebra::CK6, c.window, c.tau_floor));
  return b.finish();
}

Report verify_cocycle(const RunConfig& c) {
  Builder b(c);
  BracketTable t = bracket_table(Algebra::K4hat, c.window);
  add_table(b, t, "K4hat brackets decompose with a central identity component");
  Json values = Json::array();
  std::size_t mismatches = 0;
  for (const auto& e : t.entries) {
    GR expected = expected_cocycle(e.a, e.n, e.b, e.k);
    bool ok = e.central == expected;
    if (!ok) ++mismatches;
    if (e.central.is_zero() && expected.is_zero()) continue;
    values.push_back({{"a", e.a}, {"n", e.n}, {"b", e.b}, {"k", e.k}, {"central", e.central},
                      {"expected", expected}, {"agrees", ok}});
  }
  b.add("K4hat 2-cocycle",
        "c(L_n, G^3_k) = -n, c(X^i_n, G^j_k) = (-1)^j (i != j), c(Q_n, G^0_k) = 1 on n + k = 0, zero otherwise",
        mismatches == 0 && t.passed,
        {{"mismatches", mismatches}, {"nonzero_values", values}, {"central_fits", central_fit_json(t)}});
  return b.finish();
}

Report verify_modules(const RunConfig& c) {
  Builder b(c);
  std::vector<GR> mus{c.mu};
  if (!c.mu.is_zero()) mus.push_back(GR(0));
  for (Algebra a : {Algebra::K4hat, Algebra::CK6})
    for (const GR& mu : mus) {
      ModuleLawReport m = module_representation_law(a, mu, c.window);
      b.add(algebra_name(a) + " module at mu = " + mu.to_string(),
            "the action of a bracket equals the bracket of the actions, central part acting as a scalar", m.passed,
            {{"checks", m.checks}, {"failures", m.failures}, {"first_failure", m.first_failure}});
    }
  return b.finish();
}

Report generate(const RunConfig& c) {
  Builder b(c);
  GenerationReport g = generate_closure(*c.N, c.depth, c.window);
  std::string certifies = *c.N <= 3 ? "the generated span on the band equals the family span of the corresponding algebra"
                                    : "the generated span covers E_-1, E_0 and E_1 on the band";
  b.add("generation, N = " + std::to_string(*c.N), certifies, g.passed, {{"report", generation_to_json(g)}});
  return b.finish();
}

Report export_tables(const RunConfig& c) {
  BracketTable t = bracket_table(*c.algebra, c.window);
  Report r;
  r.command = c.command;
  r.passed = t.passed;
  r.document = table_to_json(t);
  r.payload = export_table(t, c.format);
  r.summary.push_back(std::string(t.passed ? "PASS  " : "FAIL  ") + algebra_name(t.algebra) + " table exported");
  return r;
}

}  // namespace

const std::vector<std::string>& command_names() {
  static const std::vector<std::string> names{"verify-axioms", "verify-k2",      "verify-k4hat",
                                              "verify-ck6",    "verify-cocycle", "verify-modules",
                                              "verify-spo",    "generate",       "export-tables"};
  return names;
}

void validate(const RunConfig& c) {
  const auto& names = command_names();
  if (std::find(names.begin(), names.end(), c.command) == names.end()) throw UsageError("unknown command: " + c.command);
  if (c.window < 1) throw UsageError("--window must be at least 1");
  if (c.depth < 1) throw UsageError("--depth must be at least 1");
  if (c.tau_floor > -2) throw UsageError("--tau-floor must be at most -2");
  bool table = c.command != "verify-axioms" && c.command != "verify-spo" && c.command != "generate";
  if (table && c.window < 2) throw UsageError("--window must be at least 2 for " + c.command);
  if (c.mu.is_real() && c.mu.re().get_den() == 1 && !c.mu.is_zero())
    throw UsageError("--mu must be 0 or a non-integer");
  if (c.command == "generate" && (!c.N || *c.N < 1 || *c.N > 6)) throw UsageError("generate needs --N between 1 and 6");
  if (c.command == "export-tables" && !c.algebra) throw UsageError("export-tables needs --algebra");
  if (c.command != "export-tables" && c.format == TableFormat::Csv)
    throw UsageError("--format csv applies to export-tables only");
}

Report run_report(const RunConfig& c) {
  validate(c);
  if (c.command == "verify-axioms") return verify_axioms(c);
  if (c.command == "verify-spo") return verify_spo(c);
  if (c.command == "verify-k2") return verify_k2(c);
  if (c.command == "verify-k4hat") return verify_k4hat(c);
  if (c.command == "verify-ck6") return verify_ck6(c);
  if (c.command == "verify-cocycle") return verify_cocycle(c);
  if (c.command == "verify-modules") return verify_modules(c);
  if (c.command == "generate") return generate(c);
  return export_tables(c);
}

}  // namespace superweyl
