#pragma once

#include "superweyl/clifford.hpp"
#include "superweyl/gaussian_rational.hpp"

#include <compare>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace superweyl {

/// Monomial t^a tau^b xi_S eta_T.
struct SymbolTerm {
  int a = 0;
  int b = 0;
  GrassmannWord word;

  int parity() const { return word.parity(); }
  friend auto operator<=>(const SymbolTerm&, const SymbolTerm&) = default;
};

/// Finite sum of symbol monomials. An element is either exact or valid
/// only on tau-exponents >= valid_from(); lower terms are not stored.
class SymbolElement {
 public:
  using Terms = std::map<SymbolTerm, GaussianRational>;

  SymbolElement() = default;
  SymbolElement(const GaussianRational& c);  // NOLINT: constants
  static SymbolElement monomial(int a, int b, GrassmannWord w = {}, const GaussianRational& c = 1);
  /// t^a tau^b times a Clifford element (words already canonical).
  static SymbolElement from_clifford(int a, int b, const CliffordElement& x);

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_exact() const { return !valid_from_.has_value(); }
  std::optional<int> valid_from() const { return valid_from_; }
  GaussianRational coefficient(const SymbolTerm& t) const;

  /// Marks the element valid only from `floor` and drops lower terms.
  SymbolElement& truncate(int floor);
  /// Terms with tau-exponent >= lo (the validity flag is kept).
  SymbolElement restricted(int lo) const;

  /// 0/1 for homogeneous elements, -1 mixed; zero counts as even.
  int parity() const;
  std::optional<int> max_tau() const;
  std::optional<int> min_tau() const;
  std::pair<SymbolElement, SymbolElement> parity_split() const;

  SymbolElement& operator+=(const SymbolElement& o);
  SymbolElement& operator-=(const SymbolElement& o);
  SymbolElement& operator*=(const GaussianRational& c);
  friend SymbolElement operator+(SymbolElement x, const SymbolElement& y) { return x += y; }
  friend SymbolElement operator-(SymbolElement x, const SymbolElement& y) { return x -= y; }
  friend SymbolElement operator*(SymbolElement x, const GaussianRational& c) { return x *= c; }
  friend SymbolElement operator*(const GaussianRational& c, SymbolElement x) { return x *= c; }
  SymbolElement operator-() const { return *this * GaussianRational(-1); }

  /// Strict equality: same terms and same validity flag.
  friend bool operator==(const SymbolElement&, const SymbolElement&) = default;

  void add(const SymbolTerm& t, const GaussianRational& c);

  /// `c * t^a * tau^b * xi_{i...} * eta_{j...}` terms joined by ` + `,
  /// followed by ` + O(tau^f)` for truncated elements.
  std::string to_string() const;

 private:
  Terms terms_;
  std::optional<int> valid_from_;
};

/// Equality on tau-exponents >= the larger validity floor of the two.
bool equal_modulo_floor(const SymbolElement& x, const SymbolElement& y);

/// Commutative in t, tau; exterior (Grassmann) product on the words.
SymbolElement exterior_mul(const SymbolElement& x, const SymbolElement& y);

SymbolElement d_t(const SymbolElement& x);
SymbolElement d_tau(const SymbolElement& x);
/// Left derivatives with respect to the canonical word order.
SymbolElement d_xi(const SymbolElement& x, int i);
SymbolElement d_eta(const SymbolElement& x, int i);

/// d_tau A d_t B - d_t A d_tau B + (-1)^{p(A)+1} sum_i (d_xi_i A d_eta_i B + d_eta_i A d_xi_i B).
SymbolElement poisson_bracket(const SymbolElement& x, const SymbolElement& y);

/// b + |S| - 1.
int lie_degree(const SymbolTerm& t);

/// sum_n (1/n!) d_tau^n A d_t^n B with Clifford products on the words;
/// terms with tau-exponent below `floor` are dropped and flag the result.
SymbolElement compose_truncated(const SymbolElement& x, const SymbolElement& y, int floor);

/// A o B - (-1)^{p(A)p(B)} B o A, bilinear in the parity components.
SymbolElement p1_bracket(const SymbolElement& x, const SymbolElement& y, int floor);

/// tau^{-1} o x.
SymbolElement tau_inverse_compose(const SymbolElement& x, int floor);

struct LabeledSymbol {
  std::string label;
  SymbolElement symbol;
};

/// The 4N odd sp(2|2N) elements inside the degree-zero symbols, ordered
/// per index as xi+, eta+, xi-, eta- (matching spo_basis). The quadratic
/// correction of (eta_i)^{+-} is (1/4) eta_i (sum_j eta_j xi_j)^2, i.e. each
/// unordered pair j<k counted once with weight 1/2.
std::vector<LabeledSymbol> sp_symbol_generators(int N);

}  // namespace superweyl
