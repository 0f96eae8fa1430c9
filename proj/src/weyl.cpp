#include "superweyl/weyl.hpp"

#include <algorithm>
#include <cctype>
#include <ostream>
#include <stdexcept>

namespace superweyl {

namespace {

bool term_less(const WeylTerm& x, const WeylTerm& y) { return x.a != y.a ? x.a < y.a : x.k < y.k; }

mpz_class falling_factorial(long b, long j) {
  mpz_class r = 1;
  for (long q = 0; q < j; ++q) r *= b - q;
  return r;
}

mpz_class binomial(unsigned long k, unsigned long j) {
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), k, j);
  return r;
}

template <class Op>
std::vector<WeylTerm> merge(const std::vector<WeylTerm>& x, const std::vector<WeylTerm>& y, Op op) {
  std::vector<WeylTerm> out;
  out.reserve(x.size() + y.size());
  std::size_t i = 0, j = 0;
  while (i < x.size() || j < y.size()) {
    if (j == y.size() || (i < x.size() && term_less(x[i], y[j]))) {
      out.push_back(x[i++]);
    } else if (i == x.size() || term_less(y[j], x[i])) {
      out.push_back({y[j].a, y[j].k, op(GaussianRational(0), y[j].c)});
      ++j;
    } else {
      GaussianRational c = op(x[i].c, y[j].c);
      if (!c.is_zero()) out.push_back({x[i].a, x[i].k, std::move(c)});
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

WeylElement::WeylElement(const GaussianRational& c) {
  if (!c.is_zero()) terms_.push_back({0, 0, c});
}

WeylElement WeylElement::monomial(int a, int k, const GaussianRational& c) {
  if (k < 0) throw std::invalid_argument("negative d-power");
  WeylElement x;
  if (!c.is_zero()) x.terms_.push_back({a, k, c});
  return x;
}

WeylElement WeylElement::from_terms(std::vector<WeylTerm> terms) {
  std::sort(terms.begin(), terms.end(), term_less);
  WeylElement x;
  for (auto& t : terms) {
    if (t.k < 0) throw std::invalid_argument("negative d-power");
    if (!x.terms_.empty() && x.terms_.back().a == t.a && x.terms_.back().k == t.k) {
      x.terms_.back().c += t.c;
      if (x.terms_.back().c.is_zero()) x.terms_.pop_back();
    } else if (!t.c.is_zero()) {
      x.terms_.push_back(std::move(t));
    }
  }
  return x;
}

GaussianRational WeylElement::coefficient(int a, int k) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), WeylTerm{a, k, {}}, term_less);
  if (it != terms_.end() && it->a == a && it->k == k) return it->c;
  return 0;
}

int WeylElement::max_d_power() const {
  int k = 0;
  for (const auto& t : terms_) k = std::max(k, t.k);
  return k;
}

WeylElement& WeylElement::operator+=(const WeylElement& o) {
  if (o.terms_.empty()) return *this;
  if (terms_.empty()) return *this = o;
  terms_ = merge(terms_, o.terms_, [](const GaussianRational& p, const GaussianRational& q) { return p + q; });
  return *this;
}

WeylElement& WeylElement::operator-=(const WeylElement& o) {
  if (o.terms_.empty()) return *this;
  terms_ = merge(terms_, o.terms_, [](const GaussianRational& p, const GaussianRational& q) { return p - q; });
  return *this;
}

WeylElement& WeylElement::operator*=(const WeylElement& o) { return *this = weyl_mul(*this, o); }

WeylElement& WeylElement::operator*=(const GaussianRational& c) {
  if (c.is_zero()) {
    terms_.clear();
  } else if (!c.is_one()) {
    for (auto& t : terms_) t.c *= c;
  }
  return *this;
}

WeylElement WeylElement::operator-() const {
  WeylElement x = *this;
  for (auto& t : x.terms_) t.c = -t.c;
  return x;
}

WeylElement operator*(const WeylElement& x, const WeylElement& y) { return weyl_mul(x, y); }

bool operator==(const WeylElement& x, const WeylElement& y) {
  if (x.terms_.size() != y.terms_.size()) return false;
  for (std::size_t i = 0; i < x.terms_.size(); ++i) {
    const auto& p = x.terms_[i];
    const auto& q = y.terms_[i];
    if (p.a != q.a || p.k != q.k || !(p.c == q.c)) return false;
  }
  return true;
}

WeylElement weyl_mul(const WeylElement& x, const WeylElement& y) {
  if (x.is_zero() || y.is_zero()) return {};
  std::map<std::pair<int, int>, GaussianRational> acc;
  for (const auto& p : x.terms()) {
    for (const auto& q : y.terms()) {
      for (int j = 0; j <= p.k; ++j) {
        mpz_class f = binomial(static_cast<unsigned long>(p.k), static_cast<unsigned long>(j)) * falling_factorial(q.a, j);
        if (sgn(f) == 0) break;  // b^(j) = 0 implies b^(j') = 0 for j' > j
        auto& slot = acc[{p.a + q.a - j, p.k + q.k - j}];
        slot.add_product(p.c * q.c, GaussianRational(mpq_class(f)));
      }
    }
  }
  std::vector<WeylTerm> terms;
  terms.reserve(acc.size());
  for (auto& [key, c] : acc)
    if (!c.is_zero()) terms.push_back({key.first, key.second, std::move(c)});
  return WeylElement::from_terms(std::move(terms));
}

LaurentPolynomial weyl_apply(const WeylElement& x, const LaurentPolynomial& f) {
  LaurentPolynomial out;
  for (const auto& t : x.terms()) {
    for (const auto& [m, c] : f) {
      mpz_class ff = falling_factorial(m, t.k);
      if (sgn(ff) == 0) continue;
      out[t.a + m - t.k].add_product(t.c * c, GaussianRational(mpq_class(ff)));
    }
  }
  for (auto it = out.begin(); it != out.end();) it = it->second.is_zero() ? out.erase(it) : std::next(it);
  return out;
}

std::string WeylElement::to_string() const {
  if (terms_.empty()) return "0";
  std::string s;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    if (!s.empty()) s += " + ";
    s += it->c.to_string() + " * t^" + std::to_string(it->a) + " * d^" + std::to_string(it->k);
  }
  return s;
}

std::ostream& operator<<(std::ostream& os, const WeylElement& x) { return os << x.to_string(); }

namespace {

class WeylParser {
 public:
  explicit WeylParser(const std::string& text) {
    for (char c : text)
      if (!std::isspace(static_cast<unsigned char>(c))) s_ += c;
  }

  WeylElement parse() {
    WeylElement x = expr();
    if (pos_ != s_.size()) fail("unexpected character");
    return x;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw std::invalid_argument("parse_weyl: " + what + " at position " + std::to_string(pos_) + " in '" + s_ + "'");
  }
  bool at(char c) const { return pos_ < s_.size() && s_[pos_] == c; }

  WeylElement expr() {
    WeylElement x;
    bool negate = false;
    if (at('+') || at('-')) negate = s_[pos_++] == '-';
    x = term();
    if (negate) x = -x;
    while (at('+') || at('-')) {
      bool minus = s_[pos_++] == '-';
      while (at('+') || at('-')) minus ^= s_[pos_++] == '-';
      WeylElement y = term();
      if (minus) x -= y;
      else x += y;
    }
    return x;
  }

  WeylElement term() {
    WeylElement x = factor();
    while (true) {
      if (at('*')) {
        ++pos_;
        x = weyl_mul(x, factor());
      } else if (at('i') || at('t') || at('d') || at('(')) {
        x = weyl_mul(x, factor());
      } else {
        return x;
      }
    }
  }

  long integer() {
    std::size_t start = pos_;
    if (at('-') || at('+')) ++pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (pos_ == start || !std::isdigit(static_cast<unsigned char>(s_[pos_ - 1]))) fail("expected integer");
    return std::stol(s_.substr(start, pos_ - start));
  }

  long exponent() {
    if (!at('^')) return 1;
    ++pos_;
    if (at('{')) {
      ++pos_;
      long e = integer();
      if (!at('}')) fail("expected '}'");
      ++pos_;
      return e;
    }
    return integer();
  }

  WeylElement factor() {
    if (at('(')) {
      ++pos_;
      WeylElement x = expr();
      if (!at(')')) fail("expected ')'");
      ++pos_;
      return x;
    }
    if (at('t')) {
      ++pos_;
      return WeylElement::t(static_cast<int>(exponent()));
    }
    if (at('d')) {
      ++pos_;
      long k = exponent();
      if (k < 0) fail("negative d-power");
      return WeylElement::d(static_cast<int>(k));
    }
    if (at('i')) {
      ++pos_;
      return WeylElement(GaussianRational::i());
    }
    if (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
      long num = integer();
      long den = 1;
      if (at('/')) {
        ++pos_;
        den = integer();
      }
      return WeylElement(GaussianRational::fraction(num, den));
    }
    fail("unexpected token");
  }

  std::string s_;
  std::size_t pos_ = 0;
};

}  // namespace

WeylElement parse_weyl(const std::string& text) { return WeylParser(text).parse(); }

}  // namespace superweyl
