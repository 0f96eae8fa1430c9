#pragma once

#include "superweyl/gaussian_rational.hpp"
#include "superweyl/supermatrix.hpp"

#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace superweyl {

/// Canonical Grassmann word xi_S eta_T: xi's ascending, then eta's
/// ascending. Bit i-1 of a mask stands for index i.
struct GrassmannWord {
  std::uint32_t xi = 0;
  std::uint32_t eta = 0;

  int xi_count() const { return __builtin_popcount(xi); }
  int eta_count() const { return __builtin_popcount(eta); }
  int parity() const { return (xi_count() + eta_count()) & 1; }
  bool empty() const { return xi == 0 && eta == 0; }

  friend auto operator<=>(const GrassmannWord&, const GrassmannWord&) = default;

  /// `xi_{12} * eta_{3}` style; empty string for the unit word.
  std::string to_string() const;
};

inline std::uint32_t bit(int index) { return std::uint32_t{1} << (index - 1); }

/// Number of set bits of mask strictly below index.
inline int count_below(std::uint32_t mask, int index) { return __builtin_popcount(mask & (bit(index) - 1)); }

enum class GenKind { Xi, Eta };

struct Generator {
  GenKind kind = GenKind::Xi;
  int index = 1;

  std::string to_string() const;
  friend bool operator==(const Generator&, const Generator&) = default;
};

inline Generator xi(int i) { return {GenKind::Xi, i}; }
inline Generator eta(int i) { return {GenKind::Eta, i}; }

/// Element of the Clifford superalgebra C(2N) with eta_i xi_j = delta_ij - xi_j eta_i.
class CliffordElement {
 public:
  using Terms = std::map<GrassmannWord, GaussianRational>;

  CliffordElement() = default;
  CliffordElement(const GaussianRational& c);  // NOLINT: scalars are multiples of the unit
  static CliffordElement word(GrassmannWord w, const GaussianRational& c = 1);
  static CliffordElement generator(Generator g);

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  GaussianRational coefficient(GrassmannWord w) const;
  /// 0 or 1 for homogeneous elements, -1 for mixed ones; the zero element is even.
  int parity() const;

  CliffordElement& operator+=(const CliffordElement& o);
  CliffordElement& operator-=(const CliffordElement& o);
  CliffordElement& operator*=(const GaussianRational& c);
  friend CliffordElement operator+(CliffordElement x, const CliffordElement& y) { return x += y; }
  friend CliffordElement operator-(CliffordElement x, const CliffordElement& y) { return x -= y; }
  friend CliffordElement operator*(CliffordElement x, const GaussianRational& c) { return x *= c; }
  friend CliffordElement operator*(const GaussianRational& c, CliffordElement x) { return x *= c; }
  friend bool operator==(const CliffordElement&, const CliffordElement&) = default;

  void add(GrassmannWord w, const GaussianRational& c);
  std::string to_string() const;

 private:
  Terms terms_;
};

CliffordElement clifford_mul(const CliffordElement& x, const CliffordElement& y);

/// Product of a generator sequence, left to right.
CliffordElement clifford_word(const std::vector<Generator>& gens);

/// xy - (-1)^{p(x)p(y)} yx for homogeneous arguments.
CliffordElement clifford_bracket(const CliffordElement& x, const CliffordElement& y);

/// Basis elements of o(2N) semidirect hei(0|2N).
struct SoElement {
  enum class Kind { XiXi, EtaEta, XiEta, Xi, Eta, Central };
  Kind kind = Kind::Central;
  int i = 0;
  int j = 0;

  /// "xi_i xi_j", "eta_i eta_j", "xi_i eta_j", "xi_i", "eta_i", "C".
  std::string label() const;
  friend bool operator==(const SoElement&, const SoElement&) = default;
};

/// The embedding into C(2N): a^b -> (ab - ba)/2, odd generators to
/// themselves, C to 1. Throws std::invalid_argument for xi_i xi_i and
/// eta_i eta_i or nonpositive indices.
CliffordElement iota(const SoElement& x);

/// xi_i xi_j, eta_i eta_j (i < j) and xi_i eta_j (all i, j), ordered by
/// i then j; N(2N-1) elements.
std::vector<SoElement> so_basis(int N);

/// Ordered basis of Lambda(xi_1..xi_N): even monomials then odd ones,
/// each carrying a sign.
struct GrassmannBasis {
  int N = 0;
  int half = 0;  // 2^{N-1}
  std::vector<int> sign;
  std::vector<std::uint32_t> mask;

  int index_of(std::uint32_t m) const;
  std::string label(int idx) const;
};

/// For N <= 4 the fixed bases used by the explicit realizations; for N >= 5
/// graded-lexicographic order within each parity.
GrassmannBasis grassmann_basis(int N);

/// Matrix of x acting on Lambda(xi) (xi_i by left multiplication, eta_i by
/// the left derivative).
ScalarMatrix rho_matrix(const CliffordElement& x, int N);

/// rho(v)^{+-}: lower-left entries times t^{+-1}, upper-right entries times
/// t d t^{+-1} -+ t^{+-1}/2.
WeylMatrix rho_pm(Generator v, int sign, int N);

struct Sl2Triple {
  WeylMatrix e;
  WeylMatrix h;
  WeylMatrix f;
};

Sl2Triple sl2_generators(int N);

struct LabeledMatrix {
  std::string label;
  WeylMatrix matrix;
};

/// E, H, F, the 4N odd rho(v)^{+-} (per index: xi+, eta+, xi-, eta-), then
/// rho(iota(x)) over so_basis(N).
std::vector<LabeledMatrix> spo_basis(int N);

/// t^n * rho(iota(x)).
WeylMatrix loop_so_element(const SoElement& x, int n, int N);

}  // namespace superweyl
