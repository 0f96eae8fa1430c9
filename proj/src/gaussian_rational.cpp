#include "superweyl/gaussian_rational.hpp"

#include <cctype>
#include <ostream>

namespace superweyl {

namespace {

std::string imag_text(const mpq_class& im) {
  if (im == 1) return "i";
  if (im == -1) return "-i";
  return im.get_str() + "i";
}

mpq_class parse_rational(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("empty rational");
  for (char c : s) {
    if (!(std::isdigit(static_cast<unsigned char>(c)) || c == '-' || c == '+' || c == '/'))
      throw std::invalid_argument("bad rational: " + s);
  }
  std::string body = s[0] == '+' ? s.substr(1) : s;
  mpq_class q;
  if (q.set_str(body, 10) != 0) throw std::invalid_argument("bad rational: " + s);
  if (sgn(q.get_den()) == 0) throw ArithmeticError("zero denominator");
  q.canonicalize();
  return q;
}

// parses "<rational>i", "i", "-i", "+i"
mpq_class parse_imag(const std::string& s) {
  std::string body = s.substr(0, s.size() - 1);
  if (body.empty() || body == "+") return 1;
  if (body == "-") return -1;
  return parse_rational(body);
}

}  // namespace

GaussianRational::GaussianRational(mpq_class re, mpq_class im) : re_(std::move(re)), im_(std::move(im)) {
  re_.canonicalize();
  im_.canonicalize();
}

GaussianRational GaussianRational::fraction(long num, long den) {
  if (den == 0) throw ArithmeticError("division by zero");
  mpq_class q(num, den);
  q.canonicalize();
  return GaussianRational(q);
}

GaussianRational GaussianRational::inverse() const {
  if (is_zero()) throw ArithmeticError("division by zero");
  if (is_real()) return GaussianRational(1 / re_);
  mpq_class norm = re_ * re_ + im_ * im_;
  return GaussianRational(re_ / norm, -im_ / norm);
}

GaussianRational& GaussianRational::operator+=(const GaussianRational& o) {
  re_ += o.re_;
  if (sgn(o.im_) != 0) im_ += o.im_;
  return *this;
}

GaussianRational& GaussianRational::operator-=(const GaussianRational& o) {
  re_ -= o.re_;
  if (sgn(o.im_) != 0) im_ -= o.im_;
  return *this;
}

GaussianRational& GaussianRational::operator*=(const GaussianRational& o) {
  if (is_real() && o.is_real()) {
    re_ *= o.re_;
    return *this;
  }
  mpq_class r = re_ * o.re_ - im_ * o.im_;
  mpq_class i = re_ * o.im_ + im_ * o.re_;
  re_ = std::move(r);
  im_ = std::move(i);
  return *this;
}

GaussianRational& GaussianRational::operator/=(const GaussianRational& o) {
  if (o.is_zero()) throw ArithmeticError("division by zero");
  if (o.is_real()) {
    re_ /= o.re_;
    if (sgn(im_) != 0) im_ /= o.re_;
    return *this;
  }
  return *this *= o.inverse();
}

void GaussianRational::add_product(const GaussianRational& a, const GaussianRational& b) {
  if (a.is_real() && b.is_real()) {
    re_ += a.re_ * b.re_;
    return;
  }
  re_ += a.re_ * b.re_ - a.im_ * b.im_;
  im_ += a.re_ * b.im_ + a.im_ * b.re_;
}

std::strong_ordering compare(const GaussianRational& a, const GaussianRational& b) {
  int c = cmp(a.re_, b.re_);
  if (c == 0) c = cmp(a.im_, b.im_);
  return c < 0 ? std::strong_ordering::less : c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
}

std::string GaussianRational::to_string() const {
  if (is_real()) return re_.get_str();
  if (sgn(re_) == 0) return imag_text(im_);
  std::string im = imag_text(im_);
  if (im[0] != '-') im = "+" + im;
  return "(" + re_.get_str() + im + ")";
}

std::ostream& operator<<(std::ostream& os, const GaussianRational& x) { return os << x.to_string(); }

GaussianRational parse_gaussian_rational(const std::string& text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  if (s.size() >= 2 && s.front() == '(' && s.back() == ')') s = s.substr(1, s.size() - 2);
  if (s.empty()) throw std::invalid_argument("empty number");
  if (s.back() != 'i') return GaussianRational(parse_rational(s));
  // split at the last sign that is not leading
  std::size_t split = std::string::npos;
  for (std::size_t p = s.size() - 1; p > 0; --p) {
    if (s[p] == '+' || s[p] == '-') {
      split = p;
      break;
    }
  }
  if (split == std::string::npos) return GaussianRational(0, parse_imag(s));
  return GaussianRational(parse_rational(s.substr(0, split)), parse_imag(s.substr(split)));
}

}  // namespace superweyl
