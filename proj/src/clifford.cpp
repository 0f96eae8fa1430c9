#include "superweyl/clifford.hpp"

#include <algorithm>
#include <stdexcept>

namespace superweyl {

namespace {

std::string index_list(std::uint32_t mask) {
  std::string s;
  for (int i = 1; mask >> (i - 1); ++i)
    if (mask & bit(i)) s += std::to_string(i);
  return s;
}

int highest(std::uint32_t mask) { return 32 - __builtin_clz(mask); }

void check_index(int i) {
  if (i < 1 || i > 31) throw std::invalid_argument("generator index out of range: " + std::to_string(i));
}

// xi_S eta_T xi_j, re-expressed in canonical words, accumulated into out.
void right_mul_xi(std::uint32_t s, std::uint32_t t, int j, const GaussianRational& c, CliffordElement& out) {
  if (t == 0) {
    if (s & bit(j)) return;
    int above = __builtin_popcount(s) - count_below(s, j);
    out.add({s | bit(j), 0}, (above & 1) ? -c : c);
    return;
  }
  int l = highest(t);
  std::uint32_t rest = t & ~bit(l);
  // eta_l xi_j = delta_lj - xi_j eta_l
  if (l == j) out.add({s, rest}, c);
  CliffordElement inner;
  right_mul_xi(s, rest, j, c, inner);
  for (const auto& [w, v] : inner.terms()) out.add({w.xi, w.eta | bit(l)}, -v);
}

void right_mul(const CliffordElement& x, Generator g, CliffordElement& out) {
  check_index(g.index);
  for (const auto& [w, c] : x.terms()) {
    if (g.kind == GenKind::Xi) {
      right_mul_xi(w.xi, w.eta, g.index, c, out);
    } else {
      if (w.eta & bit(g.index)) continue;
      int above = w.eta_count() - count_below(w.eta, g.index);
      out.add({w.xi, w.eta | bit(g.index)}, (above & 1) ? -c : c);
    }
  }
}

std::vector<Generator> generators_of(GrassmannWord w) {
  std::vector<Generator> gens;
  for (int i = 1; i <= 31; ++i)
    if (w.xi & bit(i)) gens.push_back(xi(i));
  for (int i = 1; i <= 31; ++i)
    if (w.eta & bit(i)) gens.push_back(eta(i));
  return gens;
}

// Applies a canonical word to a basis monomial of Lambda(xi); returns the
// sign (0 when the image vanishes) and the image mask.
std::pair<int, std::uint32_t> act_on_monomial(GrassmannWord w, std::uint32_t mono) {
  int sign = 1;
  for (int i = 31; i >= 1; --i) {
    if (!(w.eta & bit(i))) continue;
    if (!(mono & bit(i))) return {0, 0};
    if (count_below(mono, i) & 1) sign = -sign;
    mono &= ~bit(i);
  }
  for (int i = 31; i >= 1; --i) {
    if (!(w.xi & bit(i))) continue;
    if (mono & bit(i)) return {0, 0};
    if (count_below(mono, i) & 1) sign = -sign;
    mono |= bit(i);
  }
  return {sign, mono};
}

std::uint32_t mask_of(std::initializer_list<int> idx) {
  std::uint32_t m = 0;
  for (int i : idx) m |= bit(i);
  return m;
}

}  // namespace

std::string GrassmannWord::to_string() const {
  std::string s;
  if (xi) s += "xi_{" + index_list(xi) + "}";
  if (eta) s += std::string(s.empty() ? "" : " * ") + "eta_{" + index_list(eta) + "}";
  return s;
}

std::string Generator::to_string() const { return (kind == GenKind::Xi ? "xi_" : "eta_") + std::to_string(index); }

CliffordElement::CliffordElement(const GaussianRational& c) { add({}, c); }

CliffordElement CliffordElement::word(GrassmannWord w, const GaussianRational& c) {
  CliffordElement x;
  x.add(w, c);
  return x;
}

CliffordElement CliffordElement::generator(Generator g) {
  check_index(g.index);
  return g.kind == GenKind::Xi ? word({bit(g.index), 0}) : word({0, bit(g.index)});
}

GaussianRational CliffordElement::coefficient(GrassmannWord w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? GaussianRational(0) : it->second;
}

int CliffordElement::parity() const {
  int p = -2;
  for (const auto& [w, c] : terms_) {
    if (p == -2) p = w.parity();
    else if (p != w.parity()) return -1;
  }
  return p == -2 ? 0 : p;
}

void CliffordElement::add(GrassmannWord w, const GaussianRational& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(w, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

CliffordElement& CliffordElement::operator+=(const CliffordElement& o) {
  for (const auto& [w, c] : o.terms_) add(w, c);
  return *this;
}

CliffordElement& CliffordElement::operator-=(const CliffordElement& o) {
  for (const auto& [w, c] : o.terms_) add(w, -c);
  return *this;
}

CliffordElement& CliffordElement::operator*=(const GaussianRational& c) {
  if (c.is_zero()) terms_.clear();
  for (auto& [w, v] : terms_) v *= c;
  return *this;
}

std::string CliffordElement::to_string() const {
  if (terms_.empty()) return "0";
  std::string s;
  for (const auto& [w, c] : terms_) {
    if (!s.empty()) s += " + ";
    s += c.to_string();
    if (!w.empty()) s += " * " + w.to_string();
  }
  return s;
}

CliffordElement clifford_mul(const CliffordElement& x, const CliffordElement& y) {
  CliffordElement out;
  for (const auto& [w, c] : y.terms()) {
    CliffordElement acc = x * c;
    for (Generator g : generators_of(w)) {
      CliffordElement next;
      right_mul(acc, g, next);
      acc = std::move(next);
    }
    out += acc;
  }
  return out;
}

CliffordElement clifford_word(const std::vector<Generator>& gens) {
  CliffordElement acc(1);
  for (Generator g : gens) {
    CliffordElement next;
    right_mul(acc, g, next);
    acc = std::move(next);
  }
  return acc;
}

CliffordElement clifford_bracket(const CliffordElement& x, const CliffordElement& y) {
  int px = x.parity(), py = y.parity();
  if (px < 0 || py < 0) throw std::invalid_argument("clifford_bracket needs homogeneous arguments");
  CliffordElement xy = clifford_mul(x, y), yx = clifford_mul(y, x);
  return (px & py) ? xy + yx : xy - yx;
}

std::string SoElement::label() const {
  auto g = [](const char* name, int k) { return std::string(name) + "_" + std::to_string(k); };
  switch (kind) {
    case Kind::XiXi: return g("xi", i) + " " + g("xi", j);
    case Kind::EtaEta: return g("eta", i) + " " + g("eta", j);
    case Kind::XiEta: return g("xi", i) + " " + g("eta", j);
    case Kind::Xi: return g("xi", i);
    case Kind::Eta: return g("eta", i);
    case Kind::Central: return "C";
  }
  return "?";
}

CliffordElement iota(const SoElement& x) {
  using K = SoElement::Kind;
  auto pair_image = [](Generator a, Generator b) {
    CliffordElement ea = CliffordElement::generator(a), eb = CliffordElement::generator(b);
    return (clifford_mul(ea, eb) - clifford_mul(eb, ea)) * GaussianRational::fraction(1, 2);
  };
  switch (x.kind) {
    case K::Central: return CliffordElement(1);
    case K::Xi: return CliffordElement::generator(xi(x.i));
    case K::Eta: return CliffordElement::generator(eta(x.i));
    case K::XiXi:
      if (x.i == x.j) throw std::invalid_argument("iota: xi_i xi_i is not a basis element");
      return pair_image(xi(x.i), xi(x.j));
    case K::EtaEta:
      if (x.i == x.j) throw std::invalid_argument("iota: eta_i eta_i is not a basis element");
      return pair_image(eta(x.i), eta(x.j));
    case K::XiEta: return pair_image(xi(x.i), eta(x.j));
  }
  throw std::invalid_argument("iota: unrecognized basis element");
}

std::vector<SoElement> so_basis(int N) {
  using K = SoElement::Kind;
  std::vector<SoElement> out;
  for (int i = 1; i <= N; ++i) {
    for (int j = 1; j <= N; ++j) {
      if (i < j) {
        out.push_back({K::XiXi, i, j});
        out.push_back({K::EtaEta, i, j});
      }
      out.push_back({K::XiEta, i, j});
    }
  }
  return out;
}

int GrassmannBasis::index_of(std::uint32_t m) const {
  auto it = std::find(mask.begin(), mask.end(), m);
  if (it == mask.end()) throw std::invalid_argument("monomial not in basis");
  return static_cast<int>(it - mask.begin());
}

std::string GrassmannBasis::label(int idx) const {
  std::string s = sign[static_cast<std::size_t>(idx)] < 0 ? "-" : "";
  std::uint32_t m = mask[static_cast<std::size_t>(idx)];
  if (m == 0) return s + "1";
  std::string body;
  for (int i = 1; i <= N; ++i)
    if (m & bit(i)) body += std::string(body.empty() ? "" : " ") + "xi_" + std::to_string(i);
  return s + body;
}

GrassmannBasis grassmann_basis(int N) {
  if (N < 1 || N > 16) throw std::invalid_argument("N out of range");
  GrassmannBasis b;
  b.N = N;
  b.half = 1 << (N - 1);
  auto put = [&](int s, std::uint32_t m) {
    b.sign.push_back(s);
    b.mask.push_back(m);
  };
  switch (N) {
    case 1:
      put(1, 0);
      put(1, mask_of({1}));
      return b;
    case 2:
      for (auto m : {0u, mask_of({1, 2}), mask_of({1}), mask_of({2})}) put(1, m);
      return b;
    case 3:
      put(1, mask_of({2, 3}));
      put(-1, mask_of({1, 3}));
      put(1, mask_of({1, 2}));
      put(1, 0);
      put(1, mask_of({1}));
      put(1, mask_of({2}));
      put(1, mask_of({3}));
      put(-1, mask_of({1, 2, 3}));
      return b;
    case 4:
      for (auto m : {0u, mask_of({1, 2}), mask_of({1, 3}), mask_of({1, 4}), mask_of({2, 3}), mask_of({2, 4}),
                     mask_of({3, 4}), mask_of({1, 2, 3, 4}), mask_of({1}), mask_of({2}), mask_of({3}), mask_of({4}),
                     mask_of({2, 3, 4}), mask_of({1, 3, 4}), mask_of({1, 2, 4}), mask_of({1, 2, 3})})
        put(1, m);
      return b;
    default: break;
  }
  std::vector<std::uint32_t> all;
  for (std::uint32_t m = 0; m < (1u << N); ++m) all.push_back(m);
  auto lex_key = [N](std::uint32_t m) {
    std::vector<int> idx;
    for (int i = 1; i <= N; ++i)
      if (m & bit(i)) idx.push_back(i);
    return idx;
  };
  std::stable_sort(all.begin(), all.end(), [&](std::uint32_t x, std::uint32_t y) {
    int px = __builtin_popcount(x) & 1, py = __builtin_popcount(y) & 1;
    if (px != py) return px < py;
    int dx = __builtin_popcount(x), dy = __builtin_popcount(y);
    if (dx != dy) return dx < dy;
    return lex_key(x) < lex_key(y);
  });
  for (auto m : all) put(1, m);
  return b;
}

ScalarMatrix rho_matrix(const CliffordElement& x, int N) {
  GrassmannBasis b = grassmann_basis(N);
  ScalarMatrix out(b.half, b.half);
  for (int col = 0; col < 2 * b.half; ++col) {
    for (const auto& [w, c] : x.terms()) {
      auto [s, image] = act_on_monomial(w, b.mask[static_cast<std::size_t>(col)]);
      if (s == 0) continue;
      int row = b.index_of(image);
      int total = s * b.sign[static_cast<std::size_t>(col)] * b.sign[static_cast<std::size_t>(row)];
      out(row, col) += total > 0 ? c : -c;
    }
  }
  int p = x.parity();
  out.declare(p < 0 ? Parity::Mixed : p ? Parity::Odd : Parity::Even);
  return out;
}

WeylMatrix rho_pm(Generator v, int sign, int N) {
  if (sign != 1 && sign != -1) throw std::invalid_argument("rho_pm sign must be +1 or -1");
  ScalarMatrix r = rho_matrix(CliffordElement::generator(v), N);
  WeylElement lower = WeylElement::t(sign);
  // t d t^{s} - (s/2) t^{s}
  WeylElement upper = weyl_mul(weyl_mul(WeylElement::t(1), WeylElement::d(1)), WeylElement::t(sign)) -
                      WeylElement::monomial(sign, 0, GaussianRational::fraction(sign, 2));
  WeylMatrix out(r.even_size(), r.odd_size());
  for (int row = 0; row < r.size(); ++row) {
    for (int col = 0; col < r.size(); ++col) {
      if (r(row, col).is_zero()) continue;
      int blk = r.block(row, col);
      out(row, col) = (blk < 0 ? lower : upper) * r(row, col);
    }
  }
  out.declare(Parity::Odd);
  return out;
}

Sl2Triple sl2_generators(int N) {
  GrassmannBasis b = grassmann_basis(N);
  const GaussianRational half = GaussianRational::fraction(1, 2);
  const GaussianRational ihalf = GaussianRational::i() * half;
  auto t = [](int a) { return WeylElement::t(a); };
  const WeylElement d = WeylElement::d(1);
  WeylElement e_even = (t(1) * d * t(2) - half * t(2)) * ihalf;
  WeylElement e_odd = (t(2) * d * t(1) - half * t(2)) * ihalf;
  WeylElement f_even = (t(1) * d * t(-2) + half * t(-2)) * ihalf;
  WeylElement f_odd = (d * t(-1) + half * t(-2)) * ihalf;
  WeylElement h = t(1) * d;
  auto diag = [&](const WeylElement& even, const WeylElement& odd) {
    WeylMatrix m(b.half, b.half);
    for (int i = 0; i < m.size(); ++i) m(i, i) = i < b.half ? even : odd;
    m.declare(Parity::Even);
    return m;
  };
  return {diag(e_even, e_odd), diag(h, h), diag(f_even, f_odd)};
}

std::vector<LabeledMatrix> spo_basis(int N) {
  std::vector<LabeledMatrix> out;
  Sl2Triple s = sl2_generators(N);
  out.push_back({"E", s.e});
  out.push_back({"H", s.h});
  out.push_back({"F", s.f});
  for (int i = 1; i <= N; ++i) {
    for (int sign : {1, -1}) {
      const char* sfx = sign > 0 ? ")^+" : ")^-";
      out.push_back({"rho(xi_" + std::to_string(i) + sfx, rho_pm(xi(i), sign, N)});
      out.push_back({"rho(eta_" + std::to_string(i) + sfx, rho_pm(eta(i), sign, N)});
    }
  }
  for (const SoElement& x : so_basis(N)) out.push_back({"rho(" + x.label() + ")", loop_so_element(x, 0, N)});
  return out;
}

WeylMatrix loop_so_element(const SoElement& x, int n, int N) {
  WeylMatrix m = left_multiply(WeylElement::t(n), promote(rho_matrix(iota(x), N)));
  m.declare(Parity::Even);
  return m;
}

}  // namespace superweyl
