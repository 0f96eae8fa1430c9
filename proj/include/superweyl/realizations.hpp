#pragma once

#include "superweyl/clifford.hpp"
#include "superweyl/supermatrix.hpp"
#include "superweyl/symbols.hpp"

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace superweyl {

enum class Algebra { K2, K4hat, CK6 };

std::string algebra_name(Algebra a);
/// Accepts "K2", "K4hat", "CK6" (case-insensitive).
Algebra parse_algebra(const std::string& name);
/// Number of odd generators: 1, 2, 3.
int algebra_rank(Algebra a);

constexpr int kDefaultTauFloor = -8;

struct FieldFamily {
  Algebra algebra = Algebra::K2;
  std::string name;
  Parity parity = Parity::Even;
};

/// Registry in display order: K2 {L, H, G, G~}; K4hat 16 families; CK6 32.
const std::vector<FieldFamily>& families(Algebra a);
const FieldFamily& family(Algebra a, const std::string& name);

/// Weyl supermatrix of a family at mode n. K2 acts on (1 | xi_1); K4hat on
/// (v^0, v^3 | v^1, v^2); CK6 on (vh^1, vh^2, vh^3, v^4 | v^1, v^2, v^3, vh^4).
/// K4hat G^3 at n = 0 is the identity (the central element).
WeylMatrix field_matrix(Algebra a, const std::string& name, int n);

/// Symbol of a family at mode n: K2 in P(2) (exact), K4hat in P1(4), CK6 in
/// P1(6); tau^{-1} o (...) parts are truncated at tau_floor.
SymbolElement field_symbol(Algebra a, const std::string& name, int n, int tau_floor = kDefaultTauFloor);

inline WeylMatrix k2_field(const std::string& name, int n) { return field_matrix(Algebra::K2, name, n); }
inline WeylMatrix k4hat_field(const std::string& name, int n) { return field_matrix(Algebra::K4hat, name, n); }
inline WeylMatrix ck6_field(const std::string& name, int n) { return field_matrix(Algebra::CK6, name, n); }

/// The K2 isomorphism from P(2) symbols spanned by t^{n+1}tau, t^n xi_1 eta_1,
/// t^n xi_1, t^{n+1} tau eta_1 onto the matrices. Throws std::invalid_argument
/// on other terms or truncated input.
WeylMatrix sigma_k2(const SymbolElement& x);

/// Module coefficient types: c, c (m + mu), c (n + m + mu).
enum class CoefKind { Const, MMu, NMMu };

struct ActionEntry {
  int target = 0;
  int source = 0;
  CoefKind kind = CoefKind::Const;
  GaussianRational c;
};

/// Basis labels of the module, in matrix order (K4hat, CK6 only).
const std::vector<std::string>& module_basis(Algebra a);

/// Action of a family on the module basis (K4hat, CK6): the image of
/// source_m is sum over entries of coefficient * target_{m+n}.
const std::vector<ActionEntry>& action_table(Algebra a, const std::string& name);

/// Vector of V^mu: (basis index, m) -> coefficient.
struct ModuleVector {
  Algebra algebra = Algebra::K4hat;
  GaussianRational mu;
  std::map<std::pair<int, int>, GaussianRational> coeffs;

  void add(int label, int m, const GaussianRational& c);
  bool is_zero() const { return coeffs.empty(); }
  friend bool operator==(const ModuleVector&, const ModuleVector&) = default;
};

ModuleVector basis_vector(Algebra a, const GaussianRational& mu, int label, int m);

/// Field at mode n acting on v. mu must be 0 or non-integer.
ModuleVector module_action(Algebra a, const std::string& name, int n, const ModuleVector& v);

struct SpoIdentity {
  std::string label;
  WeylMatrix lhs;  // rho(v)^{+-}
  WeylMatrix rhs;  // field combination
};

/// rho(v)^{+-} written through the families at modes +-1.
std::vector<SpoIdentity> spo_in_fields(Algebra a);

}  // namespace superweyl
