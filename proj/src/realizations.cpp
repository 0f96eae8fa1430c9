#include "superweyl/realizations.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <stdexcept>

namespace superweyl {

namespace {

using GR = GaussianRational;

const GR kHalf = GR::fraction(1, 2);

std::string sup(int i) { return "^" + std::to_string(i); }
std::string sup2(int i, int j) { return "^{" + std::to_string(i) + std::to_string(j) + "}"; }

constexpr std::array<std::array<int, 3>, 3> kCycles{{{1, 2, 3}, {2, 3, 1}, {3, 1, 2}}};

int third(int i, int j) { return 6 - i - j; }

std::vector<FieldFamily> make_families(Algebra a) {
  std::vector<FieldFamily> out;
  auto put = [&](const std::string& name, Parity p) { out.push_back({a, name, p}); };
  const Parity E = Parity::Even, O = Parity::Odd;
  switch (a) {
    case Algebra::K2:
      put("L", E);
      put("H", E);
      put("G", O);
      put("G~", O);
      break;
    case Algebra::K4hat:
      put("L", E);
      put("Q", E);
      for (int i : {1, 2}) put("X" + sup(i), O);
      for (int i : {1, 2}) put("Y" + sup(i), O);
      for (int j : {1, 2})
        for (int i : {1, 2}) put("R" + sup2(j, i), E);
      for (int i : {1, 2}) put("Z" + sup(i), O);
      put("G^0", E);
      put("G^1", O);
      put("G^2", O);
      put("G^3", E);
      break;
    case Algebra::CK6:
      put("L", E);
      for (int i = 1; i <= 3; ++i) put("G" + sup(i), O);
      for (int i = 1; i <= 3; ++i) put("G~" + sup(i), O);
      for (int i = 1; i <= 3; ++i)
        for (int j = 1; j <= 3; ++j)
          if (i != j) put("T" + sup2(i, j), E);
      for (auto [i, j] : {std::pair{1, 2}, {1, 3}, {2, 3}}) put("J" + sup2(i, j), E);
      for (auto [i, j] : {std::pair{1, 2}, {1, 3}, {2, 3}}) put("J~" + sup2(i, j), E);
      put("I", O);
      for (int i = 1; i <= 3; ++i) put("T" + sup(i), E);
      for (int i = 1; i <= 3; ++i) put("S" + sup(i), O);
      for (int i = 1; i <= 3; ++i) put("S~" + sup(i), O);
      for (int i = 1; i <= 3; ++i) put("I" + sup(i), O);
      break;
  }
  return out;
}

using Table = std::map<std::string, std::vector<ActionEntry>>;

// K4hat basis order: v^0, v^3 | v^1, v^2
int k4v(int i) {
  static const int idx[] = {0, 2, 3, 1};
  return idx[i];
}

Table make_k4hat_table() {
  Table t;
  auto put = [&](const std::string& f, int src, int tgt, CoefKind k, GR c) {
    t[f].push_back({k4v(tgt), k4v(src), k, c});
  };
  using K = CoefKind;
  for (int i : {0, 1, 2}) put("L", i, i, K::MMu, 1);
  put("L", 3, 3, K::NMMu, 1);
  for (int i : {1, 2}) put("X" + sup(i), i, 0, K::MMu, 1);
  put("X^1", 3, 2, K::Const, 1);
  put("X^2", 3, 1, K::Const, -1);
  put("Q", 3, 0, K::Const, -1);
  for (int i : {1, 2}) put("Y" + sup(i), 0, i, K::Const, 1);
  put("Y^1", 2, 3, K::NMMu, 1);
  put("Y^2", 1, 3, K::NMMu, -1);
  for (int i : {1, 2}) {
    int j = 3 - i;
    put("R" + sup2(i, i), 0, 0, K::Const, 1);
    put("R" + sup2(i, i), j, j, K::Const, 1);
    put("R" + sup2(i, j), i, j, K::Const, -1);
  }
  put("Z^1", 2, 0, K::Const, -1);
  put("Z^2", 1, 0, K::Const, 1);
  put("G^0", 0, 3, K::Const, 1);
  for (int i : {1, 2}) put("G" + sup(i), i, 3, K::Const, 1);
  for (int i : {0, 1, 2, 3}) put("G^3", i, i, K::Const, 1);
  for (auto& [name, entries] : t)
    std::sort(entries.begin(), entries.end(),
              [](const ActionEntry& x, const ActionEntry& y) { return std::pair(x.source, x.target) < std::pair(y.source, y.target); });
  return t;
}

// CK6 basis order: vh^1, vh^2, vh^3, v^4 | v^1, v^2, v^3, vh^4
int v(int i) { return i == 4 ? 3 : 3 + i; }
int vh(int i) { return i == 4 ? 7 : i - 1; }

Table make_ck6_table() {
  Table t;
  using K = CoefKind;
  auto put = [&](const std::string& f, int src, int tgt, K k, GR c) { t[f].push_back({tgt, src, k, c}); };
  for (int i = 1; i <= 4; ++i) {
    put("L", v(i), v(i), K::MMu, 1);
    put("L", vh(i), vh(i), K::NMMu, 1);
  }
  for (auto [i, j, k] : kCycles) {
    std::string G = "G" + sup(i), Gt = "G~" + sup(i);
    put(G, v(i), v(4), K::MMu, 1);
    put(G, vh(4), vh(i), K::NMMu, -1);
    put(G, vh(k), v(j), K::Const, 1);
    put(G, vh(j), v(k), K::Const, -1);
    put(Gt, v(4), v(i), K::Const, 1);
    put(Gt, vh(i), vh(4), K::Const, -1);
    put(Gt, v(k), vh(j), K::NMMu, -1);
    put(Gt, v(j), vh(k), K::MMu, 1);
    std::string T = "T" + sup(i);
    put(T, v(i), v(i), K::Const, -1);
    put(T, v(4), v(4), K::Const, -1);
    put(T, vh(i), vh(i), K::Const, 1);
    put(T, vh(4), vh(4), K::Const, 1);
    put("S" + sup(i), v(i), v(4), K::Const, -1);
    put("S" + sup(i), vh(4), vh(i), K::Const, -1);
    put("S~" + sup(i), v(k), vh(j), K::Const, -1);
    put("S~" + sup(i), v(j), vh(k), K::Const, -1);
    put("I" + sup(i), v(i), vh(i), K::Const, 1);
    // J^{ij} = -J^{ji}: registry keeps i < j
    GR s = i < j ? GR(1) : GR(-1);
    std::string J = "J" + sup2(std::min(i, j), std::max(i, j));
    std::string Jt = "J~" + sup2(std::min(i, j), std::max(i, j));
    put(J, vh(k), v(4), K::Const, -s);
    put(J, vh(4), v(k), K::Const, s);
    put(Jt, v(4), vh(k), K::Const, s);
    put(Jt, v(k), vh(4), K::Const, -s);
  }
  for (int i = 1; i <= 3; ++i) {
    for (int j = 1; j <= 3; ++j) {
      if (i == j) continue;
      put("T" + sup2(i, j), v(i), v(j), K::Const, -1);
      put("T" + sup2(i, j), vh(j), vh(i), K::Const, 1);
    }
  }
  put("I", vh(4), v(4), K::Const, 1);
  for (auto& [name, entries] : t)
    std::sort(entries.begin(), entries.end(),
              [](const ActionEntry& x, const ActionEntry& y) { return std::pair(x.source, x.target) < std::pair(y.source, y.target); });
  return t;
}

const Table& table_for(Algebra a) {
  static const Table k4 = make_k4hat_table();
  static const Table ck6 = make_ck6_table();
  if (a == Algebra::K4hat) return k4;
  if (a == Algebra::CK6) return ck6;
  throw std::invalid_argument("no module action table for " + algebra_name(a));
}

WeylElement entry_operator(CoefKind kind, const GR& c, int n) {
  switch (kind) {
    case CoefKind::Const: return WeylElement::monomial(n, 0, c);
    case CoefKind::MMu: return WeylElement::monomial(n + 1, 1, c);
    case CoefKind::NMMu: return WeylElement::from_terms({{n + 1, 1, c}, {n, 0, c * GR(n)}});
  }
  return {};
}

WeylMatrix k2_matrix(const std::string& name, int n) {
  WeylMatrix m(1, 1);
  if (name == "L") {
    m(0, 0) = WeylElement::from_terms({{n + 1, 1, 1}, {n, 0, GR(n)}});
    m(1, 1) = WeylElement::monomial(n + 1, 1);
  } else if (name == "H") {
    m(0, 0) = WeylElement::monomial(n, 0, -1);
    m(1, 1) = WeylElement::monomial(n, 0, 1);
  } else if (name == "G") {
    m(0, 1) = WeylElement::from_terms({{n + 1, 1, 1}, {n, 0, GR(n) * kHalf}});
  } else if (name == "G~") {
    m(1, 0) = WeylElement::monomial(n, 0);
  } else {
    throw std::invalid_argument("unknown K2 field: " + name);
  }
  m.declare(family(Algebra::K2, name).parity);
  return m;
}

// Clifford word of a generator list, placed at t^a tau^b.
SymbolElement sym(int a, int b, const std::vector<Generator>& gens) {
  return SymbolElement::from_clifford(a, b, clifford_word(gens));
}

SymbolElement k2_symbol(const std::string& name, int n) {
  GrassmannWord x1{bit(1), 0}, e1{0, bit(1)}, x1e1{bit(1), bit(1)};
  if (name == "L") return SymbolElement::monomial(n + 1, 1) - SymbolElement::monomial(n, 0, x1e1, GR(n));
  if (name == "H") return SymbolElement::monomial(n, 0, x1e1, 2);
  if (name == "G") return SymbolElement::monomial(n + 1, 1, e1);
  if (name == "G~") return SymbolElement::monomial(n, 0, x1);
  throw std::invalid_argument("unknown K2 field: " + name);
}

SymbolElement k4hat_symbol(const std::string& name, int n, int floor) {
  auto tinv = [&](const SymbolElement& x) { return tau_inverse_compose(x, floor); };
  Generator x1 = xi(1), x2 = xi(2), e1 = eta(1), e2 = eta(2);
  if (name == "L") return sym(n + 1, 1, {});
  if (name == "Q") return sym(n + 1, 1, {e1, e2});
  if (name == "G^0") return tinv(sym(n - 1, 0, {x1, x2}));
  if (name == "G^3") {
    if (n == 0) return SymbolElement(1);
    return tinv(sym(n - 1, 0, {x1, x2, e1, e2})) * GR(n) + sym(n, 0, {});
  }
  if (name.size() == 3 && name[1] == '^') {
    int i = name[2] - '0';
    if (i == 1 || i == 2) {
      switch (name[0]) {
        case 'X': return sym(n + 1, 1, {eta(i)});
        case 'Y': return sym(n, 0, {xi(i)});
        case 'Z': return sym(n, 0, {e1, e2, xi(i)});
        case 'G': return tinv(sym(n - 1, 0, {x1, x2, eta(i)}));
        default: break;
      }
    }
  }
  if (name.size() == 6 && name.compare(0, 3, "R^{") == 0) {
    int j = name[3] - '0', i = name[4] - '0';
    if ((i == 1 || i == 2) && (j == 1 || j == 2)) return sym(n, 0, {eta(j), xi(i)});
  }
  throw std::invalid_argument("unknown K4hat field: " + name);
}

SymbolElement ck6_symbol(const std::string& name, int n, int floor) {
  auto tinv = [&](const SymbolElement& x) { return tau_inverse_compose(x, floor); };
  const GR gn(n);
  if (name == "L") return sym(n + 1, 1, {});
  if (name == "I") return sym(n + 1, 1, {eta(1), eta(2), eta(3)});
  for (auto [i, j, k] : kCycles) {
    if (name == "G" + sup(i)) return sym(n + 1, 1, {eta(i)});
    if (name == "G~" + sup(i)) return sym(n, 0, {xi(i)}) - tinv(sym(n - 1, 0, {xi(i), xi(j), eta(j)})) * gn;
    if (name == "T" + sup(i))
      return sym(n, 0, {}) - sym(n, 0, {eta(j), xi(j)}) - sym(n, 0, {eta(k), xi(k)}) +
             tinv(sym(n - 1, 0, {xi(j), xi(k), eta(j), eta(k)})) * gn;
    if (name == "S" + sup(i))
      return sym(n, 0, {eta(i)}) - sym(n, 0, {eta(i), eta(j), xi(j)}) - sym(n, 0, {eta(i), eta(k), xi(k)}) +
             tinv(sym(n - 1, 0, {xi(j), xi(k), eta(i), eta(j), eta(k)})) * gn;
    if (name == "S~" + sup(i))
      return tinv(sym(n - 1, 0, {xi(j), xi(i), eta(j)}) - sym(n - 1, 0, {xi(k), xi(i), eta(k)}));
    if (name == "I" + sup(i)) return tinv(sym(n - 1, 0, {xi(j), xi(k), eta(i)}));
  }
  for (int i = 1; i <= 3; ++i) {
    for (int j = 1; j <= 3; ++j) {
      if (i == j) continue;
      int k = third(i, j);
      if (name == "T" + sup2(i, j))
        return sym(n, 0, {eta(i), xi(j)}) - tinv(sym(n - 1, 0, {xi(k), xi(j), eta(k), eta(i)})) * gn;
      if (i < j && name == "J" + sup2(i, j)) return sym(n + 1, 1, {eta(i), eta(j)});
      if (i < j && name == "J~" + sup2(i, j)) return tinv(sym(n - 1, 0, {xi(i), xi(j)}));
    }
  }
  throw std::invalid_argument("unknown CK6 field: " + name);
}

bool is_integer(const GR& x) { return x.is_real() && x.re().get_den() == 1; }

}  // namespace

std::string algebra_name(Algebra a) {
  switch (a) {
    case Algebra::K2: return "K2";
    case Algebra::K4hat: return "K4hat";
    case Algebra::CK6: return "CK6";
  }
  return "?";
}

Algebra parse_algebra(const std::string& name) {
  std::string s;
  for (char c : name) s += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  if (s == "k2") return Algebra::K2;
  if (s == "k4hat" || s == "k4") return Algebra::K4hat;
  if (s == "ck6") return Algebra::CK6;
  throw std::invalid_argument("unknown algebra: " + name);
}

int algebra_rank(Algebra a) { return a == Algebra::K2 ? 1 : a == Algebra::K4hat ? 2 : 3; }

const std::vector<FieldFamily>& families(Algebra a) {
  static const std::vector<FieldFamily> k2 = make_families(Algebra::K2);
  static const std::vector<FieldFamily> k4 = make_families(Algebra::K4hat);
  static const std::vector<FieldFamily> ck6 = make_families(Algebra::CK6);
  return a == Algebra::K2 ? k2 : a == Algebra::K4hat ? k4 : ck6;
}

const FieldFamily& family(Algebra a, const std::string& name) {
  for (const auto& f : families(a))
    if (f.name == name) return f;
  throw std::invalid_argument("unknown " + algebra_name(a) + " field: " + name);
}

const std::vector<std::string>& module_basis(Algebra a) {
  static const std::vector<std::string> k4{"v^0", "v^3", "v^1", "v^2"};
  static const std::vector<std::string> ck6{"vh^1", "vh^2", "vh^3", "v^4", "v^1", "v^2", "v^3", "vh^4"};
  if (a == Algebra::K4hat) return k4;
  if (a == Algebra::CK6) return ck6;
  throw std::invalid_argument("no module basis for " + algebra_name(a));
}

const std::vector<ActionEntry>& action_table(Algebra a, const std::string& name) {
  const Table& t = table_for(a);
  auto it = t.find(name);
  if (it == t.end()) throw std::invalid_argument("unknown " + algebra_name(a) + " field: " + name);
  return it->second;
}

WeylMatrix field_matrix(Algebra a, const std::string& name, int n) {
  if (a == Algebra::K2) return k2_matrix(name, n);
  const FieldFamily& f = family(a, name);
  int half = a == Algebra::K4hat ? 2 : 4;
  WeylMatrix m(half, half);
  for (const ActionEntry& e : action_table(a, name)) m(e.target, e.source) += entry_operator(e.kind, e.c, n);
  m.declare(f.parity);
  return m;
}

SymbolElement field_symbol(Algebra a, const std::string& name, int n, int tau_floor) {
  family(a, name);
  switch (a) {
    case Algebra::K2: return k2_symbol(name, n);
    case Algebra::K4hat: return k4hat_symbol(name, n, tau_floor);
    case Algebra::CK6: return ck6_symbol(name, n, tau_floor);
  }
  return {};
}

WeylMatrix sigma_k2(const SymbolElement& x) {
  if (!x.is_exact()) throw std::invalid_argument("sigma_k2 needs an exact symbol");
  WeylMatrix out(1, 1);
  const GrassmannWord none{}, x1{bit(1), 0}, e1{0, bit(1)}, x1e1{bit(1), bit(1)};
  for (const auto& [t, c] : x.terms()) {
    WeylMatrix img;
    if (t.b == 1 && t.word == none) {
      int n = t.a - 1;
      img = k2_matrix("L", n) + k2_matrix("H", n) * (GR(n) * kHalf);
    } else if (t.b == 0 && t.word == x1e1) {
      img = k2_matrix("H", t.a) * kHalf;
    } else if (t.b == 0 && t.word == x1) {
      img = k2_matrix("G~", t.a);
    } else if (t.b == 1 && t.word == e1) {
      img = k2_matrix("G", t.a - 1);
    } else {
      throw std::invalid_argument("sigma_k2: term outside the K2 span");
    }
    out += img * c;
  }
  return out;
}

void ModuleVector::add(int label, int m, const GR& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = coeffs.try_emplace({label, m}, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) coeffs.erase(it);
  }
}

ModuleVector basis_vector(Algebra a, const GR& mu, int label, int m) {
  ModuleVector v{a, mu, {}};
  v.add(label, m, 1);
  return v;
}

ModuleVector module_action(Algebra a, const std::string& name, int n, const ModuleVector& vec) {
  if (vec.algebra != a) throw std::invalid_argument("module vector belongs to another algebra");
  if (is_integer(vec.mu) && !vec.mu.is_zero()) throw std::invalid_argument("mu must be 0 or non-integer");
  const auto& table = action_table(a, name);
  ModuleVector out{a, vec.mu, {}};
  for (const auto& [key, c] : vec.coeffs) {
    auto [label, m] = key;
    for (const ActionEntry& e : table) {
      if (e.source != label) continue;
      GR k = e.c;
      if (e.kind == CoefKind::MMu) k *= GR(m) + vec.mu;
      else if (e.kind == CoefKind::NMMu) k *= GR(n + m) + vec.mu;
      out.add(e.target, m + n, k * c);
    }
  }
  return out;
}

std::vector<SpoIdentity> spo_in_fields(Algebra a) {
  std::vector<SpoIdentity> out;
  const int N = algebra_rank(a);
  auto F = [&](const std::string& name, int n) { return field_matrix(a, name, n); };
  for (int s : {1, -1}) {
    const GR h = kHalf * GR(s);  // s/2
    const char* sfx = s > 0 ? ")^+" : ")^-";
    auto label = [&](const char* g, int i) { return std::string("rho(") + g + "_" + std::to_string(i) + sfx; };
    switch (a) {
      case Algebra::K2:
        out.push_back({label("xi", 1), rho_pm(xi(1), s, N), F("G~", s)});
        out.push_back({label("eta", 1), rho_pm(eta(1), s, N), F("G", s)});
        break;
      case Algebra::K4hat:
        out.push_back({label("xi", 1), rho_pm(xi(1), s, N), F("Y^1", s) - F("G^2", s) * h});
        out.push_back({label("xi", 2), rho_pm(xi(2), s, N), F("Y^2", s) + F("G^1", s) * h});
        out.push_back({label("eta", 1), rho_pm(eta(1), s, N), F("X^1", s) + F("Z^2", s) * h});
        out.push_back({label("eta", 2), rho_pm(eta(2), s, N), F("X^2", s) - F("Z^1", s) * h});
        break;
      case Algebra::CK6:
        for (int i = 1; i <= 3; ++i)
          out.push_back({label("xi", i), rho_pm(xi(i), s, N), F("G~" + sup(i), s) - F("S~" + sup(i), s) * h});
        for (int i = 1; i <= 3; ++i)
          out.push_back({label("eta", i), rho_pm(eta(i), s, N), F("G" + sup(i), s) - F("S" + sup(i), s) * h});
        break;
    }
  }
  return out;
}

}  // namespace superweyl
