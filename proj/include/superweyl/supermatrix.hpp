#pragma once

#include "superweyl/gaussian_rational.hpp"
#include "superweyl/weyl.hpp"

#include <Eigen/Core>

#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace superweyl {

enum class Parity { Even, Odd, Mixed };

inline const char* parity_name(Parity p) { return p == Parity::Even ? "even" : p == Parity::Odd ? "odd" : "mixed"; }

/// Square (m|n) supermatrix over Ring. Rows/columns [0, m) are even and
/// [m, m+n) odd. Entry (r, c) is the component mapping basis vector c to
/// basis vector r.
template <class Ring>
class SuperMatrix {
 public:
  using Storage = Eigen::Matrix<Ring, Eigen::Dynamic, Eigen::Dynamic>;

  SuperMatrix() = default;
  SuperMatrix(int even, int odd) : m_(even), n_(odd), e_(Storage::Constant(even + odd, even + odd, Ring())) {}

  static SuperMatrix identity(int even, int odd) {
    SuperMatrix a(even, odd);
    for (int i = 0; i < a.size(); ++i) a(i, i) = Ring(1);
    return a;
  }
  static SuperMatrix elementary(int even, int odd, int row, int col, const Ring& value = Ring(1)) {
    SuperMatrix a(even, odd);
    a(row, col) = value;
    return a;
  }

  int even_size() const { return m_; }
  int odd_size() const { return n_; }
  int size() const { return m_ + n_; }
  bool same_shape(const SuperMatrix& o) const { return m_ == o.m_ && n_ == o.n_; }

  const Ring& operator()(int r, int c) const { return e_(r, c); }
  Ring& operator()(int r, int c) { return e_(r, c); }
  const Storage& entries() const { return e_; }

  /// -1 lower-left (odd row, even column), 0 diagonal blocks, +1 upper-right.
  int block(int r, int c) const {
    bool re = r < m_, ce = c < m_;
    if (re == ce) return 0;
    return re ? 1 : -1;
  }

  bool is_zero() const {
    for (int r = 0; r < size(); ++r)
      for (int c = 0; c < size(); ++c)
        if (!superweyl::is_zero(e_(r, c))) return false;
    return true;
  }

  /// Parity read off the nonzero entries; the zero matrix counts as even.
  Parity parity() const {
    bool even = false, odd = false;
    for (int r = 0; r < size(); ++r)
      for (int c = 0; c < size(); ++c)
        if (!superweyl::is_zero(e_(r, c))) (block(r, c) == 0 ? even : odd) = true;
    if (even && odd) return Parity::Mixed;
    return odd ? Parity::Odd : Parity::Even;
  }

  Parity declared_parity() const { return declared_; }
  SuperMatrix& declare(Parity p) {
    declared_ = p;
    return *this;
  }
  /// True when every nonzero entry lies in the blocks the declared parity allows.
  bool respects_declared_parity() const {
    if (declared_ == Parity::Mixed) return true;
    Parity p = parity();
    return is_zero() || p == declared_;
  }

  SuperMatrix& operator+=(const SuperMatrix& o) {
    check_shape(o);
    for (int r = 0; r < size(); ++r)
      for (int c = 0; c < size(); ++c)
        if (!superweyl::is_zero(o.e_(r, c))) e_(r, c) += o.e_(r, c);
    return *this;
  }
  SuperMatrix& operator-=(const SuperMatrix& o) {
    check_shape(o);
    for (int r = 0; r < size(); ++r)
      for (int c = 0; c < size(); ++c)
        if (!superweyl::is_zero(o.e_(r, c))) e_(r, c) -= o.e_(r, c);
    return *this;
  }
  SuperMatrix& operator*=(const GaussianRational& s) {
    for (int r = 0; r < size(); ++r)
      for (int c = 0; c < size(); ++c)
        if (!superweyl::is_zero(e_(r, c))) e_(r, c) = e_(r, c) * s;
    return *this;
  }

  friend SuperMatrix operator+(SuperMatrix a, const SuperMatrix& b) { return a += b; }
  friend SuperMatrix operator-(SuperMatrix a, const SuperMatrix& b) { return a -= b; }
  friend SuperMatrix operator*(SuperMatrix a, const GaussianRational& s) { return a *= s; }
  friend SuperMatrix operator*(const GaussianRational& s, SuperMatrix a) { return a *= s; }
  SuperMatrix operator-() const { return *this * GaussianRational(-1); }

  friend bool operator==(const SuperMatrix& a, const SuperMatrix& b) {
    if (!a.same_shape(b)) return false;
    for (int r = 0; r < a.size(); ++r)
      for (int c = 0; c < a.size(); ++c)
        if (!(a.e_(r, c) == b.e_(r, c))) return false;
    return true;
  }

  void check_shape(const SuperMatrix& o) const {
    if (!same_shape(o)) throw std::invalid_argument("supermatrix shape mismatch");
  }

 private:
  int m_ = 0;
  int n_ = 0;
  Storage e_;
  Parity declared_ = Parity::Mixed;
};

using ScalarMatrix = SuperMatrix<GaussianRational>;
using WeylMatrix = SuperMatrix<WeylElement>;

/// Ordinary matrix product with the ring product applied in order
/// (left factor entry times right factor entry). Loops are explicit so the
/// noncommutative entry product is never reordered.
template <class Ring>
SuperMatrix<Ring> mat_mul(const SuperMatrix<Ring>& a, const SuperMatrix<Ring>& b) {
  a.check_shape(b);
  const int s = a.size();
  SuperMatrix<Ring> out(a.even_size(), a.odd_size());
  std::vector<std::vector<int>> row_nz(static_cast<std::size_t>(s));
  for (int k = 0; k < s; ++k)
    for (int c = 0; c < s; ++c)
      if (!is_zero(b(k, c))) row_nz[static_cast<std::size_t>(k)].push_back(c);
  for (int r = 0; r < s; ++r) {
    for (int k = 0; k < s; ++k) {
      if (is_zero(a(r, k))) continue;
      for (int c : row_nz[static_cast<std::size_t>(k)]) out(r, c) += a(r, k) * b(k, c);
    }
  }
  return out;
}

/// (even part, odd part) by block position; their sum is the input.
template <class Ring>
std::pair<SuperMatrix<Ring>, SuperMatrix<Ring>> parity_decompose(const SuperMatrix<Ring>& a) {
  SuperMatrix<Ring> even(a.even_size(), a.odd_size()), odd(a.even_size(), a.odd_size());
  for (int r = 0; r < a.size(); ++r)
    for (int c = 0; c < a.size(); ++c)
      (a.block(r, c) == 0 ? even : odd)(r, c) = a(r, c);
  even.declare(Parity::Even);
  odd.declare(Parity::Odd);
  return {even, odd};
}

/// AB - (-1)^{p(A)p(B)} BA, extended bilinearly to mixed arguments.
template <class Ring>
SuperMatrix<Ring> superbracket(const SuperMatrix<Ring>& a, const SuperMatrix<Ring>& b) {
  a.check_shape(b);
  Parity pa = a.parity(), pb = b.parity();
  if (pa == Parity::Mixed || pb == Parity::Mixed) {
    auto [a0, a1] = parity_decompose(a);
    auto [b0, b1] = parity_decompose(b);
    SuperMatrix<Ring> out = superbracket(a0, b0);
    out += superbracket(a0, b1);
    out += superbracket(a1, b0);
    out += superbracket(a1, b1);
    return out;
  }
  SuperMatrix<Ring> ab = mat_mul(a, b);
  SuperMatrix<Ring> ba = mat_mul(b, a);
  if (pa == Parity::Odd && pb == Parity::Odd) return ab + ba;
  return ab - ba;
}

/// Scalar matrix with entries embedded as constant Weyl elements.
inline WeylMatrix promote(const ScalarMatrix& a) {
  WeylMatrix out(a.even_size(), a.odd_size());
  for (int r = 0; r < a.size(); ++r)
    for (int c = 0; c < a.size(); ++c) out(r, c) = WeylElement(a(r, c));
  out.declare(a.declared_parity());
  return out;
}

/// Multiplies every entry on the left by w.
inline WeylMatrix left_multiply(const WeylElement& w, const WeylMatrix& a) {
  WeylMatrix out(a.even_size(), a.odd_size());
  for (int r = 0; r < a.size(); ++r)
    for (int c = 0; c < a.size(); ++c)
      if (!a(r, c).is_zero()) out(r, c) = weyl_mul(w, a(r, c));
  out.declare(a.declared_parity());
  return out;
}

/// Row-major text dump: one bracketed row per line, even and odd column
/// blocks separated by `|`, a dashed rule between the row blocks.
template <class Ring>
std::string to_string(const SuperMatrix<Ring>& a) {
  std::ostringstream os;
  for (int r = 0; r < a.size(); ++r) {
    if (r == a.even_size() && r > 0) os << "[" << std::string(9, '-') << "]\n";
    os << "[";
    for (int c = 0; c < a.size(); ++c) {
      if (c == a.even_size() && c > 0) os << " |";
      if (c > 0 && c != a.even_size()) os << ",";
      os << " " << a(r, c).to_string();
    }
    os << " ]\n";
  }
  return os.str();
}

}  // namespace superweyl
