#pragma once

#include "superweyl/supermatrix.hpp"
#include "superweyl/verify.hpp"

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace superweyl {

/// Number of elementary matrices E^{r,c} t^a d^k (r, c in one block
/// position) reached by the span, out of all of them.
struct CoverageCell {
  int block = 0;  // -1 lower-left, 0 diagonal, +1 upper-right
  int a = 0;
  int k = 0;
  int reached = 0;
  int total = 0;
  bool edge = false;  // weight a - k below the band; reported, not required
};

struct GenerationReport {
  int N = 0;
  int depth = 0;
  int window = 0;
  int band_lo = 0;
  int band_hi = 0;
  std::string seeds;
  std::size_t seed_count = 0;
  std::vector<int> dims_per_depth;  // total reached dimension after each wave
  bool monotone = true;
  int saturated_at = 0;  // first wave that added nothing, 0 if none
  std::map<int, int> dim_per_weight;  // weight a - k
  std::vector<CoverageCell> coverage;
  bool covers_e_minus = false;
  bool covers_e_zero = false;
  bool covers_e_plus = false;
  std::vector<std::pair<int, int>> e_plus_reached;     // 1-based (i, j), every t-power in band
  std::vector<std::pair<int, int>> e_plus_reference;   // indices listed for N = 4
  bool reference_reached = false;
  bool family_compared = false;
  bool family_span_equal = false;
  int family_band_dim = 0;
  std::vector<LiteralIdentity> identities;
  bool identities_hold = true;
  bool passed = false;
};

/// Band of t-exponents used for a window: [-W-2, W+2].
inline std::pair<int, int> generation_band(int window) { return {-window - 2, window + 2}; }

/// Elementary matrices of the N = 4 realization: E_1^{i,j} (upper-right),
/// E_{-1}^{i,j} (lower-left), E_0^{i,j} and E~_0^{i,j} (diagonal blocks),
/// 1-based, times a Weyl element.
WeylMatrix e_plus(int i, int j, const WeylElement& w, int N = 4);
WeylMatrix e_minus(int i, int j, const WeylElement& w, int N = 4);
WeylMatrix e_zero(int i, int j, const WeylElement& w, int N = 4);
WeylMatrix e_zero_tilde(int i, int j, const WeylElement& w, int N = 4);

/// The intermediate identities of the N = 4 argument at mode n, including the
/// form of the last one missing its t^{n+1} term (expected to fail) and the full one.
std::vector<LiteralIdentity> n4_identities(int n);

/// Breadth-first superbracket closure of spo(N) and the loop elements
/// t^n rho(iota(x)), 0 < |n| <= W, keeping only brackets with t-exponents in
/// the band and d-powers <= 1. Each wave brackets the elements found in the
/// previous wave with everything reached so far. For N <= 3 the reached span
/// is compared with the family span of K2 / K4hat / CK6 on the band; for N = 4 the E coverage flags and the
/// literal identities decide the verdict. Coverage targets are the
/// elementary matrices whose weight a - k also lies in the band.
GenerationReport generate_closure(int N, int depth, int window);

}  // namespace superweyl
