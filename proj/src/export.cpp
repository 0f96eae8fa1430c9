#include "superweyl/export.hpp"

#include <sstream>
#include <stdexcept>

namespace superweyl {

namespace {

BracketTable canonical_copy(const BracketTable& table) {
  BracketTable t = table;
  canonicalize(t);
  return t;
}

}  // namespace

TableFormat parse_table_format(const std::string& name) {
  if (name == "json") return TableFormat::Json;
  if (name == "csv") return TableFormat::Csv;
  throw std::invalid_argument("unknown format: " + name);
}

Json table_to_json(const BracketTable& table) {
  BracketTable t = canonical_copy(table);
  Json j;
  j["algebra"] = algebra_name(t.algebra);
  j["window"] = t.window;
  j["families"] = t.families;
  j["passed"] = t.passed;
  j["failure"] = t.failure;
  Json entries = Json::array();
  for (const auto& e : t.entries) {
    Json je;
    je["a"] = e.a;
    je["n"] = e.n;
    je["b"] = e.b;
    je["k"] = e.k;
    Json terms = Json::array();
    for (const auto& term : e.terms) {
      Json jt;
      jt["family"] = term.family;
      jt["mode"] = term.mode;
      jt["coefficient"] = term.coef;
      terms.push_back(std::move(jt));
    }
    je["terms"] = std::move(terms);
    je["central"] = e.central;
    je["residual_zero"] = e.residual_zero;
    je["held_out"] = e.held_out;
    entries.push_back(std::move(je));
  }
  j["entries"] = std::move(entries);
  Json fits = Json::array();
  for (const auto& f : t.fits) {
    Json jf;
    jf["a"] = f.a;
    jf["b"] = f.b;
    jf["target"] = f.target;
    jf["polynomial"] = f.poly;
    jf["ok"] = f.ok;
    fits.push_back(std::move(jf));
  }
  j["fits"] = std::move(fits);
  Json central = Json::array();
  for (const auto& f : t.central_fits) {
    Json jf;
    jf["a"] = f.a;
    jf["b"] = f.b;
    jf["polynomial"] = f.poly;
    jf["ok"] = f.ok;
    central.push_back(std::move(jf));
  }
  j["central_fits"] = std::move(central);
  return j;
}

BracketTable table_from_json(const Json& j) {
  BracketTable t;
  t.algebra = parse_algebra(j.at("algebra").get<std::string>());
  t.window = j.at("window").get<int>();
  t.families = j.at("families").get<std::vector<std::string>>();
  t.passed = j.at("passed").get<bool>();
  t.failure = j.at("failure").get<std::string>();
  for (const auto& je : j.at("entries")) {
    BracketEntry e;
    e.a = je.at("a").get<std::string>();
    e.n = je.at("n").get<int>();
    e.b = je.at("b").get<std::string>();
    e.k = je.at("k").get<int>();
    for (const auto& jt : je.at("terms"))
      e.terms.push_back({jt.at("family").get<std::string>(), jt.at("mode").get<int>(),
                         jt.at("coefficient").get<GaussianRational>()});
    e.central = je.at("central").get<GaussianRational>();
    e.residual_zero = je.at("residual_zero").get<bool>();
    e.held_out = je.at("held_out").get<bool>();
    t.entries.push_back(std::move(e));
  }
  for (const auto& jf : j.at("fits"))
    t.fits.push_back({jf.at("a").get<std::string>(), jf.at("b").get<std::string>(), jf.at("target").get<std::string>(),
                      jf.at("polynomial").get<std::vector<GaussianRational>>(), jf.at("ok").get<bool>()});
  for (const auto& jf : j.at("central_fits"))
    t.central_fits.push_back({jf.at("a").get<std::string>(), jf.at("b").get<std::string>(),
                              jf.at("polynomial").get<std::vector<GaussianRational>>(), jf.at("ok").get<bool>()});
  return t;
}

std::string export_table(const BracketTable& table, TableFormat format) {
  if (format == TableFormat::Json) return table_to_json(table).dump(2) + "\n";
  BracketTable t = canonical_copy(table);
  std::ostringstream os;
  os << "a,n,b,k,target,mode,coefficient\n";
  for (const auto& e : t.entries) {
    auto row = [&](const std::string& target, int mode, const std::string& coef) {
      os << e.a << ',' << e.n << ',' << e.b << ',' << e.k << ',' << target << ',' << mode << ',' << coef << '\n';
    };
    if (!e.residual_zero) row("unresolved", e.n + e.k, "");
    for (const auto& term : e.terms) row(term.family, term.mode, term.coef.to_string());
    if (!e.central.is_zero()) row("central", 0, e.central.to_string());
  }
  return os.str();
}

Json generation_to_json(const GenerationReport& r) {
  Json j;
  j["N"] = r.N;
  j["depth"] = r.depth;
  j["window"] = r.window;
  j["band"] = {{"t_min", r.band_lo}, {"t_max", r.band_hi}, {"d_max", 1}};
  j["seeds"] = r.seeds;
  j["seed_count"] = r.seed_count;
  j["dimension_after_wave"] = r.dims_per_depth;
  j["monotone"] = r.monotone;
  j["saturated_at_wave"] = r.saturated_at;
  Json weights = Json::array();
  for (const auto& [w, d] : r.dim_per_weight) weights.push_back({{"weight", w}, {"dimension", d}});
  j["dimension_per_weight"] = std::move(weights);
  Json cells = Json::array();
  for (const auto& c : r.coverage)
    cells.push_back({{"block", c.block}, {"t_exponent", c.a}, {"d_power", c.k}, {"reached", c.reached},
                     {"total", c.total}, {"edge", c.edge}});
  j["coverage"] = std::move(cells);
  j["covers_E_minus"] = r.covers_e_minus;
  j["covers_E_zero"] = r.covers_e_zero;
  j["covers_E_plus"] = r.covers_e_plus;
  auto pairs = [](const std::vector<std::pair<int, int>>& v) {
    Json out = Json::array();
    for (auto [i, j] : v) out.push_back({i, j});
    return out;
  };
  j["E_plus_indices_reached"] = pairs(r.e_plus_reached);
  if (r.N == 4) {
    j["E_plus_indices_listed"] = pairs(r.e_plus_reference);
    j["listed_indices_reached"] = r.reference_reached;
    Json ids = Json::array();
    for (const auto& id : r.identities)
      ids.push_back({{"identity", id.label}, {"n", id.n}, {"expected", id.expected}, {"holds", id.holds},
                     {"difference", id.detail}});
    j["identities"] = std::move(ids);
    j["identities_as_expected"] = r.identities_hold;
  }
  if (r.family_compared) {
    j["family_band_dimension"] = r.family_band_dim;
    j["reached_equals_family_span"] = r.family_span_equal;
  }
  j["passed"] = r.passed;
  return j;
}

}  // namespace superweyl
