#pragma once

#include <gmpxx.h>

#include <Eigen/Core>

#include <compare>
#include <iosfwd>
#include <stdexcept>
#include <string>

namespace superweyl {

/// Raised on division by zero and other undefined field operations.
class ArithmeticError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Exact element a + b*i of the Gaussian rationals Q(i).
///
/// Both parts are GMP rationals kept in canonical form (lowest terms,
/// positive denominator), so structural equality is value equality.
class GaussianRational {
 public:
  GaussianRational() = default;
  GaussianRational(long value) : re_(value) {}  // NOLINT: implicit from integers
  GaussianRational(int value) : re_(value) {}   // NOLINT
  explicit GaussianRational(mpq_class re, mpq_class im = 0);

  static GaussianRational fraction(long num, long den);
  static GaussianRational i() { return GaussianRational(0, 1); }

  const mpq_class& re() const { return re_; }
  const mpq_class& im() const { return im_; }

  bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
  bool is_real() const { return sgn(im_) == 0; }
  bool is_one() const { return is_real() && re_ == 1; }

  GaussianRational conj() const { return GaussianRational(re_, -im_); }
  GaussianRational inverse() const;

  GaussianRational& operator+=(const GaussianRational& o);
  GaussianRational& operator-=(const GaussianRational& o);
  GaussianRational& operator*=(const GaussianRational& o);
  GaussianRational& operator/=(const GaussianRational& o);

  /// `this += a * b` without a temporary for the product.
  void add_product(const GaussianRational& a, const GaussianRational& b);

  friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
  friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
  friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
  friend GaussianRational operator/(GaussianRational a, const GaussianRational& b) { return a /= b; }
  GaussianRational operator-() const { return GaussianRational(-re_, -im_); }

  friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }

  /// Total order (re first, then im); only used for canonical sorting.
  friend std::strong_ordering compare(const GaussianRational& a, const GaussianRational& b);

  /// Text form: `3`, `-1/2`, `i`, `(1/2+1/3i)`.
  std::string to_string() const;

 private:
  mpq_class re_{0};
  mpq_class im_{0};
};

inline bool is_zero(const GaussianRational& x) { return x.is_zero(); }

std::ostream& operator<<(std::ostream& os, const GaussianRational& x);

/// Parses the text form produced by to_string (also plain rationals).
GaussianRational parse_gaussian_rational(const std::string& text);

}  // namespace superweyl

namespace Eigen {

template <>
struct NumTraits<superweyl::GaussianRational> : GenericNumTraits<superweyl::GaussianRational> {
  using Real = superweyl::GaussianRational;
  using NonInteger = superweyl::GaussianRational;
  using Nested = superweyl::GaussianRational;
  using Literal = superweyl::GaussianRational;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 4,
    AddCost = 16,
    MulCost = 32
  };
  static inline Real epsilon() { return 0; }
  static inline Real dummy_precision() { return 0; }
  static inline int digits10() { return 0; }
};

}  // namespace Eigen
