#pragma once

#include "superweyl/clifford.hpp"
#include "superweyl/supermatrix.hpp"
#include "superweyl/symbols.hpp"
#include "superweyl/weyl.hpp"

#include <cstdint>
#include <random>
#include <string>

namespace superweyl {

struct PropertyReport {
  std::string name;
  std::size_t cases = 0;
  std::size_t failures = 0;
  std::string first_failure;
  bool passed() const { return failures == 0 && cases > 0; }
  void record(bool ok, const std::string& what);
};

/// Seeded generators for property checks.
class RandomAlgebra {
 public:
  explicit RandomAlgebra(std::uint64_t seed) : rng_(seed) {}

  int integer(int lo, int hi);
  GaussianRational scalar();
  WeylElement laurent(int terms = 3);
  WeylElement weyl(int terms = 3, int max_d = 2);
  /// Homogeneous (m|n) matrix with a few nonzero Weyl entries.
  WeylMatrix matrix(int even, int odd, Parity p, int entries = 3);
  GrassmannWord word(int N);
  GrassmannWord word_of_parity(int N, int parity);
  /// Exact homogeneous symbol with a few terms.
  SymbolElement symbol(int N, int parity, int terms = 2);

 private:
  std::mt19937_64 rng_;
};

/// d a = d(a) + a d on random Laurent polynomials a.
PropertyReport weyl_relation(std::size_t samples, std::uint64_t seed);
PropertyReport weyl_associativity(std::size_t samples, std::uint64_t seed);
/// Exhaustive anticommutators of generators at rank N.
PropertyReport clifford_relations(int N);
PropertyReport superbracket_jacobi(std::size_t samples, std::uint64_t seed);
PropertyReport poisson_jacobi(std::size_t samples, std::uint64_t seed);
/// deg {A, B} = deg A + deg B on random monomials.
PropertyReport grading_law(std::size_t samples, std::uint64_t seed);
/// Brackets of random degree-zero monomials stay in degree zero.
PropertyReport degree_zero_closure(std::size_t samples, std::uint64_t seed);

}  // namespace superweyl
