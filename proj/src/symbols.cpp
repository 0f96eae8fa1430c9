#include "superweyl/symbols.hpp"

#include <algorithm>
#include <stdexcept>

namespace superweyl {

namespace {

// sign of xi_P xi_Q -> xi_{P u Q} (0 when they overlap)
int merge_sign(std::uint32_t p, std::uint32_t q) {
  if (p & q) return 0;
  int inversions = 0;
  for (std::uint32_t rest = q; rest; rest &= rest - 1) {
    int y = __builtin_ctz(rest) + 1;
    inversions += __builtin_popcount(p) - count_below(p, y);
  }
  return (inversions & 1) ? -1 : 1;
}

// exterior product of canonical words
std::pair<int, GrassmannWord> word_product(GrassmannWord x, GrassmannWord y) {
  int s = merge_sign(x.xi, y.xi);
  if (s == 0) return {0, {}};
  int s2 = merge_sign(x.eta, y.eta);
  if (s2 == 0) return {0, {}};
  s *= s2;
  if ((x.eta_count() * y.xi_count()) & 1) s = -s;
  return {s, {x.xi | y.xi, x.eta | y.eta}};
}

mpz_class falling(long x, long n) {
  mpz_class r = 1;
  for (long q = 0; q < n; ++q) r *= x - q;
  return r;
}

std::optional<int> combine_floor(std::optional<int> a, std::optional<int> b) {
  if (!a) return b;
  if (!b) return a;
  return std::max(*a, *b);
}

// validity of a product-like combination whose factors lower tau by >= 0
std::optional<int> product_floor(const SymbolElement& x, const SymbolElement& y) {
  std::optional<int> v;
  if (!x.is_exact() && y.max_tau()) v = combine_floor(v, *x.valid_from() + *y.max_tau());
  if (!y.is_exact() && x.max_tau()) v = combine_floor(v, *y.valid_from() + *x.max_tau());
  // a truncated factor whose partner is zero still yields zero exactly
  return v;
}

SymbolElement with_floor(SymbolElement x, std::optional<int> floor) {
  if (floor) x.truncate(*floor);
  return x;
}

}  // namespace

SymbolElement::SymbolElement(const GaussianRational& c) { add({}, c); }

SymbolElement SymbolElement::monomial(int a, int b, GrassmannWord w, const GaussianRational& c) {
  SymbolElement x;
  x.add({a, b, w}, c);
  return x;
}

SymbolElement SymbolElement::from_clifford(int a, int b, const CliffordElement& c) {
  SymbolElement x;
  for (const auto& [w, v] : c.terms()) x.add({a, b, w}, v);
  return x;
}

GaussianRational SymbolElement::coefficient(const SymbolTerm& t) const {
  auto it = terms_.find(t);
  return it == terms_.end() ? GaussianRational(0) : it->second;
}

void SymbolElement::add(const SymbolTerm& t, const GaussianRational& c) {
  if (c.is_zero()) return;
  if (valid_from_ && t.b < *valid_from_) return;
  auto [it, inserted] = terms_.try_emplace(t, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

SymbolElement& SymbolElement::truncate(int floor) {
  valid_from_ = combine_floor(valid_from_, floor);
  for (auto it = terms_.begin(); it != terms_.end();) it = it->first.b < *valid_from_ ? terms_.erase(it) : std::next(it);
  return *this;
}

SymbolElement SymbolElement::restricted(int lo) const {
  SymbolElement x;
  x.valid_from_ = valid_from_;
  for (const auto& [t, c] : terms_)
    if (t.b >= lo) x.terms_.emplace(t, c);
  return x;
}

int SymbolElement::parity() const {
  int p = -2;
  for (const auto& [t, c] : terms_) {
    if (p == -2) p = t.parity();
    else if (p != t.parity()) return -1;
  }
  return p == -2 ? 0 : p;
}

std::optional<int> SymbolElement::max_tau() const {
  std::optional<int> m;
  for (const auto& [t, c] : terms_) m = m ? std::max(*m, t.b) : t.b;
  return m;
}

std::optional<int> SymbolElement::min_tau() const {
  std::optional<int> m;
  for (const auto& [t, c] : terms_) m = m ? std::min(*m, t.b) : t.b;
  return m;
}

std::pair<SymbolElement, SymbolElement> SymbolElement::parity_split() const {
  SymbolElement even, odd;
  even.valid_from_ = odd.valid_from_ = valid_from_;
  for (const auto& [t, c] : terms_) (t.parity() ? odd : even).terms_.emplace(t, c);
  return {even, odd};
}

SymbolElement& SymbolElement::operator+=(const SymbolElement& o) {
  valid_from_ = combine_floor(valid_from_, o.valid_from_);
  if (valid_from_) truncate(*valid_from_);
  for (const auto& [t, c] : o.terms_) add(t, c);
  return *this;
}

SymbolElement& SymbolElement::operator-=(const SymbolElement& o) {
  valid_from_ = combine_floor(valid_from_, o.valid_from_);
  if (valid_from_) truncate(*valid_from_);
  for (const auto& [t, c] : o.terms_) add(t, -c);
  return *this;
}

SymbolElement& SymbolElement::operator*=(const GaussianRational& c) {
  if (c.is_zero()) terms_.clear();
  for (auto& [t, v] : terms_) v *= c;
  return *this;
}

std::string SymbolElement::to_string() const {
  std::string s;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const SymbolTerm& t = it->first;
    if (!s.empty()) s += " + ";
    s += it->second.to_string() + " * t^" + std::to_string(t.a) + " * tau^" + std::to_string(t.b);
    if (!t.word.empty()) s += " * " + t.word.to_string();
  }
  if (s.empty()) s = "0";
  if (valid_from_) s += " + O(tau^" + std::to_string(*valid_from_ - 1) + ")";
  return s;
}

bool equal_modulo_floor(const SymbolElement& x, const SymbolElement& y) {
  std::optional<int> lo = combine_floor(x.valid_from(), y.valid_from());
  if (!lo) return x.terms() == y.terms();
  return x.restricted(*lo).terms() == y.restricted(*lo).terms();
}

SymbolElement exterior_mul(const SymbolElement& x, const SymbolElement& y) {
  SymbolElement out;
  for (const auto& [p, c] : x.terms()) {
    for (const auto& [q, d] : y.terms()) {
      auto [s, w] = word_product(p.word, q.word);
      if (s == 0) continue;
      GaussianRational v = c * d;
      out.add({p.a + q.a, p.b + q.b, w}, s > 0 ? v : -v);
    }
  }
  return with_floor(std::move(out), product_floor(x, y));
}

SymbolElement d_t(const SymbolElement& x) {
  SymbolElement out;
  for (const auto& [t, c] : x.terms())
    if (t.a != 0) out.add({t.a - 1, t.b, t.word}, c * GaussianRational(t.a));
  return with_floor(std::move(out), x.valid_from() ? std::optional<int>(*x.valid_from()) : std::nullopt);
}

SymbolElement d_tau(const SymbolElement& x) {
  SymbolElement out;
  for (const auto& [t, c] : x.terms())
    if (t.b != 0) out.add({t.a, t.b - 1, t.word}, c * GaussianRational(t.b));
  return with_floor(std::move(out), x.valid_from() ? std::optional<int>(*x.valid_from() - 1) : std::nullopt);
}

SymbolElement d_xi(const SymbolElement& x, int i) {
  SymbolElement out;
  for (const auto& [t, c] : x.terms()) {
    if (!(t.word.xi & bit(i))) continue;
    GrassmannWord w{t.word.xi & ~bit(i), t.word.eta};
    out.add({t.a, t.b, w}, (count_below(t.word.xi, i) & 1) ? -c : c);
  }
  return with_floor(std::move(out), x.valid_from());
}

SymbolElement d_eta(const SymbolElement& x, int i) {
  SymbolElement out;
  for (const auto& [t, c] : x.terms()) {
    if (!(t.word.eta & bit(i))) continue;
    GrassmannWord w{t.word.xi, t.word.eta & ~bit(i)};
    int pos = t.word.xi_count() + count_below(t.word.eta, i);
    out.add({t.a, t.b, w}, (pos & 1) ? -c : c);
  }
  return with_floor(std::move(out), x.valid_from());
}

SymbolElement poisson_bracket(const SymbolElement& x, const SymbolElement& y) {
  auto [x0, x1] = x.parity_split();
  std::uint32_t used = 0;
  for (const auto* e : {&x, &y})
    for (const auto& [t, c] : e->terms()) used |= t.word.xi | t.word.eta;
  SymbolElement out = exterior_mul(d_tau(x), d_t(y)) - exterior_mul(d_t(x), d_tau(y));
  for (int parity : {0, 1}) {
    const SymbolElement& a = parity ? x1 : x0;
    if (a.is_zero()) continue;
    SymbolElement odd;
    for (int i = 1; i <= 31; ++i) {
      if (!(used & bit(i))) continue;
      odd += exterior_mul(d_xi(a, i), d_eta(y, i));
      odd += exterior_mul(d_eta(a, i), d_xi(y, i));
    }
    // (-1)^{p(A)+1}
    if (parity == 0) odd = -odd;
    out += odd;
  }
  std::optional<int> v = product_floor(x, y);
  return with_floor(std::move(out), v);
}

int lie_degree(const SymbolTerm& t) { return t.b + t.word.xi_count() - 1; }

SymbolElement compose_truncated(const SymbolElement& x, const SymbolElement& y, int floor) {
  SymbolElement out;
  bool dropped = false;
  std::map<std::pair<GrassmannWord, GrassmannWord>, CliffordElement> products;
  for (const auto& [p, c] : x.terms()) {
    for (const auto& [q, d] : y.terms()) {
      auto key = std::make_pair(p.word, q.word);
      auto it = products.find(key);
      if (it == products.end())
        it = products.emplace(key, clifford_mul(CliffordElement::word(p.word), CliffordElement::word(q.word))).first;
      const CliffordElement& w = it->second;
      if (w.is_zero()) continue;
      GaussianRational cd = c * d;
      mpz_class fact = 1;
      for (long n = 0;; ++n) {
        if (n > 0) fact *= n;
        if (p.b >= 0 && n > p.b) break;
        if (q.a >= 0 && n > q.a) break;
        int tau = p.b + q.b - static_cast<int>(n);
        if (tau < floor) {
          dropped = true;
          break;
        }
        mpq_class coef(falling(p.b, n) * falling(q.a, n), fact);
        coef.canonicalize();
        GaussianRational k = cd * GaussianRational(coef);
        for (const auto& [word, v] : w.terms()) out.add({p.a + q.a - static_cast<int>(n), tau, word}, k * v);
      }
    }
  }
  std::optional<int> v = product_floor(x, y);
  if (dropped) v = combine_floor(v, floor);
  return with_floor(std::move(out), v);
}

SymbolElement p1_bracket(const SymbolElement& x, const SymbolElement& y, int floor) {
  auto [x0, x1] = x.parity_split();
  auto [y0, y1] = y.parity_split();
  SymbolElement out;
  for (int px : {0, 1}) {
    const SymbolElement& a = px ? x1 : x0;
    if (a.is_zero()) continue;
    for (int py : {0, 1}) {
      const SymbolElement& b = py ? y1 : y0;
      if (b.is_zero()) continue;
      SymbolElement ab = compose_truncated(a, b, floor);
      SymbolElement ba = compose_truncated(b, a, floor);
      out += (px & py) ? ab + ba : ab - ba;
    }
  }
  if (!x.is_exact() || !y.is_exact()) out = with_floor(std::move(out), product_floor(x, y));
  return out;
}

SymbolElement tau_inverse_compose(const SymbolElement& x, int floor) {
  return compose_truncated(SymbolElement::monomial(0, -1), x, floor);
}

std::vector<LabeledSymbol> sp_symbol_generators(int N) {
  if (N < 1) throw std::invalid_argument("N must be positive");
  const GaussianRational half = GaussianRational::fraction(1, 2);
  const GaussianRational quarter = GaussianRational::fraction(1, 4);
  auto mono = [](int a, int b) { return SymbolElement::monomial(a, b); };
  // sum_j eta_j xi_j = -sum_j xi_j eta_j
  SymbolElement sigma;
  for (int j = 1; j <= N; ++j) sigma.add({0, 0, {bit(j), bit(j)}}, -1);
  SymbolElement sigma2 = exterior_mul(sigma, sigma);
  std::vector<LabeledSymbol> out;
  for (int i = 1; i <= N; ++i) {
    SymbolElement x = SymbolElement::monomial(0, 0, {bit(i), 0});
    SymbolElement e = SymbolElement::monomial(0, 0, {0, bit(i)});
    SymbolElement sx = exterior_mul(sigma, x);
    SymbolElement es = exterior_mul(e, sigma);
    SymbolElement ess = exterior_mul(e, sigma2);
    std::string idx = std::to_string(i);
    SymbolElement xp = exterior_mul(mono(1, 0), x) + half * exterior_mul(mono(0, -1), sx);
    SymbolElement ep = exterior_mul(mono(2, 1), e) + half * exterior_mul(mono(1, 0), es) +
                       quarter * exterior_mul(mono(0, -1), ess);
    SymbolElement xm = exterior_mul(mono(-1, 0), x) - half * exterior_mul(mono(-2, -1), sx);
    SymbolElement em = exterior_mul(mono(0, 1), e) - half * exterior_mul(mono(-1, 0), es) +
                       quarter * exterior_mul(mono(-2, -1), ess);
    out.push_back({"(xi_" + idx + ")^+", xp});
    out.push_back({"(eta_" + idx + ")^+", ep});
    out.push_back({"(xi_" + idx + ")^-", xm});
    out.push_back({"(eta_" + idx + ")^-", em});
  }
  return out;
}

}  // namespace superweyl
