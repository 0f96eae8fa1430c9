#include "superweyl/axioms.hpp"


namespace superweyl {

namespace {

using GR = GaussianRational;

int sign(int p, int q) { return (p * q) % 2 == 0 ? 1 : -1; }

}  // namespace

void PropertyReport::record(bool ok, const std::string& what) {
  ++cases;
  if (ok) return;
  ++failures;
  if (first_failure.empty()) first_failure = what;
}

int RandomAlgebra::integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }

GaussianRational RandomAlgebra::scalar() {
  int num = 0;
  while (num == 0) num = integer(-5, 5);
  GR re = GR::fraction(num, integer(1, 4));
  if (integer(0, 3) == 0) {
    int im = integer(-3, 3);
    return re + GR::i() * GR::fraction(im, integer(1, 3));
  }
  return re;
}

WeylElement RandomAlgebra::laurent(int terms) {
  WeylElement out;
  for (int i = 0; i < terms; ++i) {
    int a = integer(-3, 3);
    out += WeylElement::monomial(a, 0, scalar());
  }
  return out;
}

WeylElement RandomAlgebra::weyl(int terms, int max_d) {
  WeylElement out;
  for (int i = 0; i < terms; ++i) {
    int a = integer(-3, 3);
    int k = integer(0, max_d);
    out += WeylElement::monomial(a, k, scalar());
  }
  return out;
}

WeylMatrix RandomAlgebra::matrix(int even, int odd, Parity p, int entries) {
  WeylMatrix out(even, odd);
  const int s = even + odd;
  int placed = 0, guard = 0;
  while (placed < entries && guard++ < 100) {
    int r = integer(0, s - 1), c = integer(0, s - 1);
    bool diagonal = out.block(r, c) == 0;
    if (diagonal != (p == Parity::Even)) continue;
    out(r, c) += weyl(2, 1);
    ++placed;
  }
  out.declare(p);
  return out;
}

GrassmannWord RandomAlgebra::word(int N) {
  int full = (1 << N) - 1;
  auto x = static_cast<std::uint32_t>(integer(0, full));
  auto e = static_cast<std::uint32_t>(integer(0, full));
  return {x, e};
}

GrassmannWord RandomAlgebra::word_of_parity(int N, int parity) {
  for (;;) {
    GrassmannWord w = word(N);
    if (w.parity() == parity) return w;
  }
}

SymbolElement RandomAlgebra::symbol(int N, int parity, int terms) {
  SymbolElement out;
  for (int i = 0; i < terms; ++i) {
    int a = integer(-2, 2);
    int b = integer(-2, 2);
    GrassmannWord w = word_of_parity(N, parity);
    out += SymbolElement::monomial(a, b, w, scalar());
  }
  return out;
}

PropertyReport weyl_relation(std::size_t samples, std::uint64_t seed) {
  PropertyReport rep{"Weyl relation d a = d(a) + a d", 0, 0, {}};
  RandomAlgebra gen(seed);
  for (std::size_t s = 0; s < samples; ++s) {
    WeylElement a = gen.laurent(gen.integer(1, 4));
    WeylElement da;
    for (const auto& t : a.terms()) da += WeylElement::monomial(t.a - 1, 0, t.c * GR(t.a));
    WeylElement d = WeylElement::d();
    rep.record(d * a == da + a * d, "a = " + a.to_string());
  }
  return rep;
}

PropertyReport weyl_associativity(std::size_t samples, std::uint64_t seed) {
  PropertyReport rep{"Weyl associativity", 0, 0, {}};
  RandomAlgebra gen(seed);
  for (std::size_t s = 0; s < samples; ++s) {
    WeylElement x = gen.weyl(), y = gen.weyl(), z = gen.weyl();
    rep.record((x * y) * z == x * (y * z), "x = " + x.to_string() + ", y = " + y.to_string() + ", z = " + z.to_string());
  }
  return rep;
}

PropertyReport clifford_relations(int N) {
  PropertyReport rep{"Clifford relations at N = " + std::to_string(N), 0, 0, {}};
  std::vector<Generator> gens;
  for (int i = 1; i <= N; ++i) gens.push_back(xi(i));
  for (int i = 1; i <= N; ++i) gens.push_back(eta(i));
  for (const auto& g : gens)
    for (const auto& h : gens) {
      CliffordElement x = CliffordElement::generator(g), y = CliffordElement::generator(h);
      CliffordElement anti = clifford_mul(x, y) + clifford_mul(y, x);
      bool paired = g.kind != h.kind && g.index == h.index;
      rep.record(anti == CliffordElement(GR(paired ? 1 : 0)), clifford_word({g, h}).to_string());
    }
  return rep;
}

PropertyReport superbracket_jacobi(std::size_t samples, std::uint64_t seed) {
  PropertyReport rep{"super Jacobi identity for the superbracket", 0, 0, {}};
  RandomAlgebra gen(seed);
  for (std::size_t s = 0; s < samples; ++s) {
    int even = gen.integer(1, 2), odd = gen.integer(1, 2);
    int p[3];
    WeylMatrix m[3];
    for (int i = 0; i < 3; ++i) {
      p[i] = gen.integer(0, 1);
      m[i] = gen.matrix(even, odd, p[i] ? Parity::Odd : Parity::Even);
    }
    WeylMatrix sum = superbracket(m[0], superbracket(m[1], m[2])) * GR(sign(p[0], p[2]));
    sum += superbracket(m[1], superbracket(m[2], m[0])) * GR(sign(p[1], p[0]));
    sum += superbracket(m[2], superbracket(m[0], m[1])) * GR(sign(p[2], p[1]));
    rep.record(sum.is_zero(), "sample " + std::to_string(s));
  }
  return rep;
}

PropertyReport poisson_jacobi(std::size_t samples, std::uint64_t seed) {
  PropertyReport rep{"super Jacobi identity for the Poisson bracket", 0, 0, {}};
  RandomAlgebra gen(seed);
  for (std::size_t s = 0; s < samples; ++s) {
    int N = gen.integer(1, 3);
    int p[3];
    SymbolElement x[3];
    for (int i = 0; i < 3; ++i) {
      p[i] = gen.integer(0, 1);
      x[i] = gen.symbol(N, p[i]);
    }
    SymbolElement sum = poisson_bracket(x[0], poisson_bracket(x[1], x[2])) * GR(sign(p[0], p[2]));
    sum += poisson_bracket(x[1], poisson_bracket(x[2], x[0])) * GR(sign(p[1], p[0]));
    sum += poisson_bracket(x[2], poisson_bracket(x[0], x[1])) * GR(sign(p[2], p[1]));
    rep.record(sum.is_zero(), "A = " + x[0].to_string() + ", B = " + x[1].to_string() + ", C = " + x[2].to_string());
  }
  return rep;
}

PropertyReport grading_law(std::size_t samples, std::uint64_t seed) {
  PropertyReport rep{"degree of a bracket is the sum of degrees", 0, 0, {}};
  RandomAlgebra gen(seed);
  for (std::size_t s = 0; s < samples; ++s) {
    int N = gen.integer(1, 3);
    SymbolTerm ta{gen.integer(-3, 3), gen.integer(-2, 2), gen.word(N)};
    SymbolTerm tb{gen.integer(-3, 3), gen.integer(-2, 2), gen.word(N)};
    SymbolElement br = poisson_bracket(SymbolElement::monomial(ta.a, ta.b, ta.word),
                                       SymbolElement::monomial(tb.a, tb.b, tb.word));
    bool ok = true;
    for (const auto& [t, c] : br.terms()) ok = ok && lie_degree(t) == lie_degree(ta) + lie_degree(tb);
    rep.record(ok, "sample " + std::to_string(s));
  }
  return rep;
}

PropertyReport degree_zero_closure(std::size_t samples, std::uint64_t seed) {
  PropertyReport rep{"degree-zero symbols are closed under the bracket", 0, 0, {}};
  RandomAlgebra gen(seed);
  auto degree_zero = [&](int N) {
    GrassmannWord w = gen.word(N);
    int a = gen.integer(-3, 3);
    return SymbolTerm{a, 1 - w.xi_count(), w};
  };
  for (std::size_t s = 0; s < samples; ++s) {
    int N = gen.integer(1, 3);
    SymbolTerm ta = degree_zero(N), tb = degree_zero(N);
    SymbolElement br = poisson_bracket(SymbolElement::monomial(ta.a, ta.b, ta.word),
                                       SymbolElement::monomial(tb.a, tb.b, tb.word));
    bool ok = lie_degree(ta) == 0 && lie_degree(tb) == 0;
    for (const auto& [t, c] : br.terms()) ok = ok && lie_degree(t) == 0;
    rep.record(ok, "sample " + std::to_string(s));
  }
  return rep;
}

}  // namespace superweyl
