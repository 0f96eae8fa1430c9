#pragma once

#include "superweyl/linear_solve.hpp"
#include "superweyl/sparse_span.hpp"
#include "superweyl/realizations.hpp"
#include "superweyl/supermatrix.hpp"
#include "superweyl/symbols.hpp"

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace superweyl {

/// Monomial coordinate E^{r,c} t^a d^k of a Weyl supermatrix.
struct MonoKey {
  int r = 0;
  int c = 0;
  int a = 0;
  int k = 0;
  friend auto operator<=>(const MonoKey&, const MonoKey&) = default;
};

using MatrixCoords = std::map<MonoKey, GaussianRational>;

MatrixCoords coordinates(const WeylMatrix& x);

/// Linear span of a fixed list of matrices with exact decomposition.
class MatrixSpan {
 public:
  explicit MatrixSpan(const std::vector<WeylMatrix>& basis);
  std::optional<Coefficients> decompose(const WeylMatrix& x) const;
  bool contains(const WeylMatrix& x) const;
  std::size_t size() const { return span_.inserted(); }
  std::size_t rank() const { return span_.rank(); }

 private:
  SparseSpan<MonoKey> span_{true};
  int even_ = -1;
  int odd_ = -1;
};

/// Coefficients c with x = sum c_i basis_i, or nullopt. Throws
/// std::invalid_argument on a shape mismatch.
std::optional<Coefficients> span_coordinates(const WeylMatrix& x, const std::vector<WeylMatrix>& basis);

/// Same for symbols, using only terms with tau-exponent >= lo.
std::optional<Coefficients> symbol_span_coordinates(const SymbolElement& x, const std::vector<SymbolElement>& basis,
                                                    int lo);

/// Number of worker threads: SUPERWEYL_THREADS if set (>= 1), otherwise the
/// hardware concurrency.
int worker_threads();

/// Runs body(i) for i in [0, count) on worker_threads() threads. Results
/// must be written to per-index slots.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& body);

struct DecompTerm {
  std::string family;
  int mode = 0;
  GaussianRational coef;
  friend bool operator==(const DecompTerm&, const DecompTerm&) = default;
};

struct BracketEntry {
  std::string a;
  int n = 0;
  std::string b;
  int k = 0;
  std::vector<DecompTerm> terms;
  GaussianRational central;
  bool residual_zero = true;
  bool held_out = false;  // mode pair outside the fitting window
  friend bool operator==(const BracketEntry&, const BracketEntry&) = default;
};

/// Structure constant of target family in [a_n, b_k] as a polynomial in
/// (n, k) with monomials 1, n, k, n^2, nk, k^2.
struct CoefficientFit {
  std::string a;
  std::string b;
  std::string target;
  std::vector<GaussianRational> poly;
  bool ok = true;
  friend bool operator==(const CoefficientFit&, const CoefficientFit&) = default;
};

/// Central coefficient of [a_n, b_{-n}] as a polynomial in n (1, n, n^2, n^3).
struct CentralFit {
  std::string a;
  std::string b;
  std::vector<GaussianRational> poly;
  bool ok = true;
  friend bool operator==(const CentralFit&, const CentralFit&) = default;
};

struct BracketTable {
  Algebra algebra = Algebra::K2;
  int window = 0;
  std::vector<std::string> families;
  std::vector<BracketEntry> entries;
  std::vector<CoefficientFit> fits;
  std::vector<CentralFit> central_fits;
  bool passed = true;
  std::string failure;
  friend bool operator==(const BracketTable&, const BracketTable&) = default;
};

struct TableOptions {
  std::vector<std::string> omit;  // families left out of the basis
  bool fit = true;                // fit polynomials and check held-out modes at window+1
  bool stop_at_first_failure = false;
};

/// Decomposes [A_n, B_k] for all ordered family pairs, |n|,|k| <= W,
/// |n+k| <= W into families at mode n+k plus a central multiple of the
/// identity (adjoined at mode 0; for K4hat the G^3 slot at mode 0 is the
/// identity itself).
/// Families, entries (by a, b, n, k), terms and fits are returned sorted by
/// name and mode.
BracketTable bracket_table(Algebra a, int window, const TableOptions& options = {});

/// Sorts a table into the canonical order used by bracket_table.
void canonicalize(BracketTable& table);

/// Splits off the identity component of x relative to the family basis at
/// mode 0 (identity adjoined as last basis vector).
struct CocycleSplit {
  GaussianRational central;
  WeylMatrix remainder;
  bool in_span = false;
};
CocycleSplit cocycle_extract(const WeylMatrix& x, Algebra a);
CocycleSplit cocycle_extract(const WeylMatrix& x, const std::vector<WeylMatrix>& family_basis);

/// Expected central term c(A_n, B_k) of K4hat.
GaussianRational expected_cocycle(const std::string& a, int n, const std::string& b, int k);

struct ClosureReport {
  Algebra algebra = Algebra::K2;
  int window = 0;
  bool passed = true;
  std::size_t brackets = 0;
  std::string offending;  // "[A_n, B_k]" of the first failure
  std::string bracket_dump;
};

ClosureReport closure_check(Algebra a, int window, const std::vector<std::string>& omit = {});

/// Families (other than the dropped ones) whose matrices at mode n+k are
/// needed to decompose [A_n, B_k] with the full family set.
struct NegativeControl {
  bool detected = false;
  std::string offending;
};
NegativeControl closure_negative_control(Algebra a, int window, const std::string& dropped);

struct SymbolConsistency {
  Algebra algebra = Algebra::K4hat;
  int window = 0;
  int tau_floor = kDefaultTauFloor;
  std::size_t pairs = 0;
  std::size_t mismatches = 0;
  std::string first_mismatch;
  bool passed = true;
};

/// Decomposes the P1 brackets of the family symbols on tau-exponents >= -1,
/// requires the residual to vanish on the certified range and compares the
/// coefficients with the matrix picture.
SymbolConsistency symbol_matrix_consistency(Algebra a, int window, int tau_floor);

/// Checks the matrix brackets of the K2 families against sigma of the
/// Poisson brackets of their symbols.
struct SigmaReport {
  std::size_t pairs = 0;
  bool passed = true;
  std::string first_failure;
};
SigmaReport k2_sigma_homomorphism(int window);

/// Super-span closure of a labeled set of matrices; returns the even and odd
/// dimensions of the span and whether every bracket stays inside it.
struct SpanClosure {
  int even_dim = 0;
  int odd_dim = 0;
  bool closed = true;
  std::string offending;
};
SpanClosure spo_closure(int N);

/// Structure constants of the symbol generators under the Poisson bracket
/// and of their rho-images agree (equal ranks of the symbol brackets, the
/// matrix brackets and the joint vectors).
struct SpSymbolReport {
  int N = 0;
  int symbol_rank = 0;
  int matrix_rank = 0;
  int joint_rank = 0;
  bool passed = true;
};
SpSymbolReport sp_symbol_consistency(int N);

/// A matrix identity instantiated at one mode.
struct LiteralIdentity {
  std::string label;
  int n = 0;
  bool expected = true;  // false for a known-incorrect variant kept as a control
  bool holds = false;
  std::string detail;
};

LiteralIdentity make_identity(std::string label, int n, const WeylMatrix& lhs, const WeylMatrix& rhs,
                              bool expected = true);

/// rho(v)^{+-} against the field combinations (spo_in_fields).
std::vector<LiteralIdentity> spo_field_identities(Algebra a);

/// CK6: [J~^{ij}_n, rho(eta_k)^+] = -n I^k_{n+1} and [J^{ij}_n, rho(eta_k)^+] =
/// -n I_{n+1} for the cyclic triples (i, j, k).
std::vector<LiteralIdentity> ck6_eta_identities(int n);

/// K2: [L_n, L_m] = (m - n) L_{n+m} for |n|, |m| <= window.
LiteralIdentity k2_virasoro(int window);

struct ModuleLawReport {
  Algebra algebra = Algebra::K4hat;
  GaussianRational mu;
  std::size_t checks = 0;
  std::size_t failures = 0;
  std::string first_failure;
  bool passed = true;
};

/// A(B v) - (-1)^{p(A)p(B)} B(A v) equals the module action of the matrix
/// decomposition of [A_n, B_k] (central part acting as a scalar) for all
/// family pairs with |n|, |k|, |n+k| <= window and basis vectors with
/// |m| <= m_range.
ModuleLawReport module_representation_law(Algebra a, const GaussianRational& mu, int window, int m_range = 2);

}  // namespace superweyl
