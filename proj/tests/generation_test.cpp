#include "doctest.h"

#include "superweyl/generation.hpp"

using namespace superweyl;

TEST_SUITE("generation") {

TEST_CASE("E-set placement") {
  WeylElement w = WeylElement::monomial(2, 1, 3);
  CHECK(e_plus(1, 8, w)(0, 15) == w);
  CHECK(e_minus(2, 3, w)(9, 2) == w);
  CHECK(e_zero(4, 5, w)(3, 4) == w);
  CHECK(e_zero_tilde(1, 1, w)(8, 8) == w);
  CHECK(e_plus(1, 1, w, 2)(0, 2) == w);
  CHECK(e_plus(1, 8, w).parity() == Parity::Odd);
  CHECK(e_zero(1, 2, w).parity() == Parity::Even);
}

TEST_CASE("band") {
  CHECK(generation_band(2) == std::pair{-4, 4});
}

TEST_CASE("N = 4 intermediate identities") {
  for (int n = -2; n <= 2; ++n) {
    auto ids = n4_identities(n);
    CHECK(ids.size() == 7);
    for (const auto& id : ids) {
      INFO(id.label, " n=", n, " ", id.detail);
      if (id.expected) CHECK(id.holds);
      if (!id.expected && n != 0) CHECK_FALSE(id.holds);
    }
  }
}

TEST_CASE("small N reproduces the family span") {
  for (int N : {1, 2}) {
    GenerationReport r = generate_closure(N, 4, 2);
    INFO("N = ", N);
    CHECK(r.family_compared);
    CHECK(r.family_span_equal);
    CHECK(r.passed);
    CHECK(r.monotone);
    bool full = r.covers_e_plus && r.covers_e_minus && r.covers_e_zero;
    CHECK_FALSE(full);
    CHECK(r.dims_per_depth.back() == r.family_band_dim);
  }
}

}
