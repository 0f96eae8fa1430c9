#pragma once

#include "superweyl/gaussian_rational.hpp"

#include <Eigen/Core>

#include <map>
#include <string>
#include <vector>

namespace superweyl {

/// One normal-ordered monomial c * t^a * d^k.
struct WeylTerm {
  int a = 0;
  int k = 0;
  GaussianRational c;
};

/// Element of the Weyl algebra over Q(i)[t, t^-1] in normal order
/// (t-powers left of d-powers). Terms are sorted by (a, k) ascending and
/// never carry a zero coefficient.
class WeylElement {
 public:
  WeylElement() = default;
  WeylElement(const GaussianRational& c);  // NOLINT: scalars embed as c * t^0
  WeylElement(int c) : WeylElement(GaussianRational(c)) {}  // NOLINT

  static WeylElement monomial(int a, int k, const GaussianRational& c = 1);
  static WeylElement t(int a = 1) { return monomial(a, 0); }
  static WeylElement d(int k = 1) { return monomial(0, k); }

  /// Builds from arbitrary (a, k, c) triples, merging duplicates.
  static WeylElement from_terms(std::vector<WeylTerm> terms);

  const std::vector<WeylTerm>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  GaussianRational coefficient(int a, int k) const;
  int max_d_power() const;

  WeylElement& operator+=(const WeylElement& o);
  WeylElement& operator-=(const WeylElement& o);
  WeylElement& operator*=(const WeylElement& o);
  WeylElement& operator*=(const GaussianRational& c);

  friend WeylElement operator+(WeylElement x, const WeylElement& y) { return x += y; }
  friend WeylElement operator-(WeylElement x, const WeylElement& y) { return x -= y; }
  friend WeylElement operator*(const WeylElement& x, const WeylElement& y);
  friend WeylElement operator*(WeylElement x, const GaussianRational& c) { return x *= c; }
  friend WeylElement operator*(const GaussianRational& c, WeylElement x) { return x *= c; }
  WeylElement operator-() const;

  friend bool operator==(const WeylElement& x, const WeylElement& y);

  /// `c * t^a * d^k` terms joined by ` + `, decreasing (a, k); `0` if empty.
  std::string to_string() const;

 private:
  std::vector<WeylTerm> terms_;
};

inline bool is_zero(const WeylElement& x) { return x.is_zero(); }

/// Normal-ordered product via (t^a d^k)(t^b d^l) = sum_j C(k,j) b^(j) t^(a+b-j) d^(k+l-j),
/// b^(j) the falling factorial.
WeylElement weyl_mul(const WeylElement& x, const WeylElement& y);

/// Laurent polynomial in t: exponent -> coefficient, no zero entries.
using LaurentPolynomial = std::map<int, GaussianRational>;

/// Applies x as a differential operator: t^a d^k sends f to t^a f^(k).
LaurentPolynomial weyl_apply(const WeylElement& x, const LaurentPolynomial& f);

/// Parses products and sums of t, d, t^a, d^k and rational coefficients,
/// e.g. "t*d*t^2 - 1/2*t^2"; mixed words are normal-ordered.
WeylElement parse_weyl(const std::string& text);

std::ostream& operator<<(std::ostream& os, const WeylElement& x);

}  // namespace superweyl

namespace Eigen {

template <>
struct NumTraits<superweyl::WeylElement> : GenericNumTraits<superweyl::WeylElement> {
  using Real = superweyl::WeylElement;
  using NonInteger = superweyl::WeylElement;
  using Nested = superweyl::WeylElement;
  using Literal = superweyl::WeylElement;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 8,
    AddCost = 64,
    MulCost = 256
  };
};

}  // namespace Eigen
