#include "superweyl/generation.hpp"

#include "superweyl/clifford.hpp"
#include "superweyl/realizations.hpp"
#include "superweyl/sparse_span.hpp"
#include "superweyl/verify.hpp"

#include <algorithm>
#include <optional>
#include <sstream>
#include <stdexcept>

namespace superweyl {

namespace {

using GR = GaussianRational;
using Span = SparseSpan<MonoKey>;

constexpr std::size_t kChunk = 4096;
constexpr int kNoWeight = 1 << 20;

int half_size(int N) { return 1 << (N - 1); }

WeylMatrix elementary(int N, int r, int c, const WeylElement& w) {
  WeylMatrix m(half_size(N), half_size(N));
  m(r, c) = w;
  return m;
}

int weight(const MonoKey& k) { return k.a - k.k; }

bool in_band(const MonoKey& k, int lo, int hi) { return k.a >= lo && k.a <= hi && k.k <= 1; }

// Splits the coordinates by weight; nullopt when anything leaves the band.
std::optional<std::map<int, MatrixCoords>> banded(const WeylMatrix& x, int lo, int hi) {
  std::map<int, MatrixCoords> out;
  for (auto& [key, c] : coordinates(x)) {
    if (!in_band(key, lo, hi)) return std::nullopt;
    out[weight(key)].emplace(key, c);
  }
  return out;
}

Algebra algebra_for(int N) { return N == 1 ? Algebra::K2 : N == 2 ? Algebra::K4hat : Algebra::CK6; }

const std::vector<std::pair<int, int>>& reference_indices() {
  static const std::vector<std::pair<int, int>> list = [] {
    const int rows[8][4] = {{5, 6, 7, 8}, {3, 4, 5, 6}, {2, 4, 5, 8}, {1, 4, 6, 7},
                            {1, 4, 6, 7}, {1, 3, 6, 8}, {1, 2, 7, 8}, {1, 2, 3, 4}};
    std::vector<std::pair<int, int>> out;
    for (int i = 0; i < 8; ++i)
      for (int j : rows[i]) out.emplace_back(i + 1, j);
    return out;
  }();
  return list;
}

}  // namespace

WeylMatrix e_plus(int i, int j, const WeylElement& w, int N) { return elementary(N, i - 1, half_size(N) + j - 1, w); }
WeylMatrix e_minus(int i, int j, const WeylElement& w, int N) { return elementary(N, half_size(N) + i - 1, j - 1, w); }
WeylMatrix e_zero(int i, int j, const WeylElement& w, int N) { return elementary(N, i - 1, j - 1, w); }
WeylMatrix e_zero_tilde(int i, int j, const WeylElement& w, int N) {
  return elementary(N, half_size(N) + i - 1, half_size(N) + j - 1, w);
}

std::vector<LiteralIdentity> n4_identities(int n) {
  const int N = 4;
  auto t = [](int a) { return WeylElement::t(a); };
  std::vector<LiteralIdentity> out;
  SoElement e12{SoElement::Kind::EtaEta, 1, 2};
  out.push_back(make_identity("[t^n rho(eta_1 eta_2), rho(eta_3)^+] = n t^{n+1} E_1^{1,8}", n,
                              superbracket(loop_so_element(e12, n, N), rho_pm(eta(3), 1, N)),
                              e_plus(1, 8, t(n + 1) * GR(n))));
  WeylMatrix mix = e_zero(1, 2, t(n)) + e_zero_tilde(3, 8, t(n));
  out.push_back(make_identity("[rho(xi_3)^+, t^n E_1^{1,8}] = t^{n+1} (E_0^{1,2} + E~_0^{3,8})", n,
                              superbracket(rho_pm(xi(3), 1, N), e_plus(1, 8, t(n))),
                              e_zero(1, 2, t(n + 1)) + e_zero_tilde(3, 8, t(n + 1))));
  out.push_back(make_identity("[t^n (E_0^{1,2} + E~_0^{3,8}), E_1^{2,4}] = t^n E_1^{1,4}", n,
                              superbracket(mix, e_plus(2, 4, t(0))), e_plus(1, 4, t(n))));
  out.push_back(make_identity("[rho(xi_2)^+, t^n E_1^{1,4}] = t^{n+1} E~_0^{2,4}", n,
                              superbracket(rho_pm(xi(2), 1, N), e_plus(1, 4, t(n))), e_zero_tilde(2, 4, t(n + 1))));
  out.push_back(make_identity("[rho(eta_1)^+, t^n E_1^{2,4}] = t^{n+1} (E_0^{2,4} + E~_0^{2,4})", n,
                              superbracket(rho_pm(eta(1), 1, N), e_plus(2, 4, t(n))),
                              e_zero(2, 4, t(n + 1)) + e_zero_tilde(2, 4, t(n + 1))));
  WeylMatrix lhs = superbracket(e_zero(5, 2, t(n)), rho_pm(xi(2), 1, N));
  out.push_back(make_identity("[t^n E_0^{5,2}, rho(xi_2)^+] = -(t^{n+2} d) E_1^{5,1} (without the t^{n+1} term)", n, lhs,
                              e_plus(5, 1, -WeylElement::monomial(n + 2, 1)), false));
  out.push_back(make_identity(
      "[t^n E_0^{5,2}, rho(xi_2)^+] = -(t^{n+2} d + t^{n+1}/2) E_1^{5,1}", n, lhs,
      e_plus(5, 1, -(WeylElement::monomial(n + 2, 1) + WeylElement::monomial(n + 1, 0, GR::fraction(1, 2))))));
  return out;
}

GenerationReport generate_closure(int N, int depth, int window) {
  if (N < 1) throw std::invalid_argument("N must be positive");
  if (depth < 1) throw std::invalid_argument("depth must be positive");
  if (window < 1) throw std::invalid_argument("window must be positive");
  GenerationReport rep;
  rep.N = N;
  rep.depth = depth;
  rep.window = window;
  auto [lo, hi] = generation_band(window);
  rep.band_lo = lo;
  rep.band_hi = hi;
  rep.seeds = "spo(2|2N) basis and t^n rho(iota(x)) for x in the o(2N) basis, 0 < |n| <= window";

  std::vector<WeylMatrix> seeds;
  for (const auto& b : spo_basis(N)) seeds.push_back(b.matrix);
  auto so = so_basis(N);
  for (int n = -window; n <= window; ++n) {
    if (n == 0) continue;
    for (const auto& x : so) seeds.push_back(loop_so_element(x, n, N));
  }
  rep.seed_count = seeds.size();

  std::map<int, Span> spans;
  auto total = [&] {
    int s = 0;
    for (const auto& [w, sp] : spans) s += static_cast<int>(sp.rank());
    return s;
  };
  auto insert = [&](const std::map<int, MatrixCoords>& parts) {
    bool grew = false;
    for (const auto& [w, v] : parts) grew = spans[w].insert(v) || grew;
    return grew;
  };

  // Every independent element reached so far, in insertion order; the
  // current frontier is the tail starting at frontier_begin.
  struct Element {
    WeylMatrix m;
    int weight = 0;
  };
  std::vector<Element> reached_list;
  auto element_weight = [](const std::map<int, MatrixCoords>& parts) {
    return parts.size() == 1 ? parts.begin()->first : kNoWeight;
  };
  for (const auto& s : seeds)
    if (auto parts = banded(s, lo, hi); parts && insert(*parts)) reached_list.push_back({s, element_weight(*parts)});
  std::size_t frontier_begin = 0;
  rep.dims_per_depth.push_back(total());

  auto may_land_in_band = [&](const Element& x, const Element& y) {
    if (x.weight == kNoWeight || y.weight == kNoWeight) return true;
    int w = x.weight + y.weight;
    return w >= lo - 1 && w <= hi;
  };

  for (int wave = 2; wave <= depth; ++wave) {
    const std::size_t end = reached_list.size();
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t f = frontier_begin; f < end; ++f)
      for (std::size_t g = 0; g <= f; ++g)
        if (may_land_in_band(reached_list[g], reached_list[f])) pairs.emplace_back(g, f);
    std::vector<Element> next;
    for (std::size_t start = 0; start < pairs.size(); start += kChunk) {
      std::size_t count = std::min(kChunk, pairs.size() - start);
      std::vector<std::optional<std::map<int, MatrixCoords>>> results(count);
      std::vector<WeylMatrix> brackets(count);
      parallel_for(count, [&](std::size_t idx) {
        auto [g, f] = pairs[start + idx];
        WeylMatrix x = superbracket(reached_list[g].m, reached_list[f].m);
        results[idx] = banded(x, lo, hi);
        if (results[idx]) brackets[idx] = std::move(x);
      });
      for (std::size_t idx = 0; idx < count; ++idx)
        if (results[idx] && !results[idx]->empty() && insert(*results[idx]))
          next.push_back({std::move(brackets[idx]), element_weight(*results[idx])});
    }
    rep.dims_per_depth.push_back(total());
    if (rep.dims_per_depth.back() < rep.dims_per_depth[rep.dims_per_depth.size() - 2]) rep.monotone = false;
    frontier_begin = end;
    for (auto& e : next) reached_list.push_back(std::move(e));
    if (next.empty()) {
      rep.saturated_at = wave;
      break;
    }
  }
  for (const auto& [w, sp] : spans)
    if (sp.rank() > 0) rep.dim_per_weight[w] = static_cast<int>(sp.rank());

  // Coverage of elementary matrices.
  const int h = half_size(N);
  WeylMatrix shape(h, h);
  auto reached = [&](int r, int c, int a, int k) {
    MonoKey key{r, c, a, k};
    auto it = spans.find(weight(key));
    if (it == spans.end()) return false;
    return it->second.contains({{key, GR(1)}});
  };
  bool all_minus = true, all_zero = true, all_plus = true;
  for (int block : {-1, 0, 1})
    for (int k = 0; k <= 1; ++k)
      for (int a = lo; a <= hi; ++a) {
        CoverageCell cell{block, a, k, 0, 0, a - k < lo};
        for (int r = 0; r < 2 * h; ++r)
          for (int c = 0; c < 2 * h; ++c) {
            if (shape.block(r, c) != block) continue;
            ++cell.total;
            bool ok = reached(r, c, a, k);
            if (ok) ++cell.reached;
            if (ok || cell.edge) continue;
            if (block == -1 && k == 0) all_minus = false;
            if (block == 0 && k == 0 && r != c) all_zero = false;
            if (block == 1) all_plus = false;
          }
        rep.coverage.push_back(cell);
      }
  rep.covers_e_minus = all_minus;
  rep.covers_e_zero = all_zero;
  rep.covers_e_plus = all_plus;

  for (int i = 1; i <= h; ++i)
    for (int j = 1; j <= h; ++j) {
      bool every = true;
      for (int a = lo; a <= hi && every; ++a) every = reached(i - 1, h + j - 1, a, 0);
      if (every) rep.e_plus_reached.emplace_back(i, j);
    }
  if (N == 4) {
    rep.e_plus_reference = reference_indices();
    rep.reference_reached = std::all_of(rep.e_plus_reference.begin(), rep.e_plus_reference.end(), [&](auto p) {
      return std::find(rep.e_plus_reached.begin(), rep.e_plus_reached.end(), p) != rep.e_plus_reached.end();
    });
    for (int n = -window; n <= window; ++n)
      for (auto& id : n4_identities(n)) {
        if (id.holds != id.expected) rep.identities_hold = false;
        rep.identities.push_back(std::move(id));
      }
  }

  if (N <= 3) {
    // Family matrices restricted to the band: eliminate out-of-band
    // coordinates first so the rows pivoting in-band span the intersection.
    rep.family_compared = true;
    bool equal = true;
    Algebra alg = algebra_for(N);
    using Keyed = std::pair<int, MonoKey>;
    for (int w = lo - 1; w <= hi; ++w) {
      SparseSpan<Keyed> fam;
      for (const auto& f : families(alg)) {
        std::map<Keyed, GR> v;
        for (auto& [key, c] : coordinates(field_matrix(alg, f.name, w))) v.emplace(Keyed{in_band(key, lo, hi), key}, c);
        fam.insert(std::move(v));
      }
      Span inside;
      for (const auto& row : fam.rows()) {
        if (row.begin()->first.first == 0) continue;
        MatrixCoords v;
        for (const auto& [key, c] : row) v.emplace(key.second, c);
        inside.insert(v);
      }
      rep.family_band_dim += static_cast<int>(inside.rank());
      auto it = spans.find(w);
      std::size_t got = it == spans.end() ? 0 : it->second.rank();
      if (got != inside.rank()) equal = false;
      if (it != spans.end()) {
        for (const auto& row : it->second.rows())
          if (!inside.contains(row)) equal = false;
      }
    }
    for (const auto& [w, sp] : spans)
      if (sp.rank() > 0 && (w < lo - 1 || w > hi)) equal = false;
    rep.family_span_equal = equal;
    rep.passed = equal && !(rep.covers_e_minus && rep.covers_e_zero && rep.covers_e_plus);
  } else {
    rep.passed = rep.covers_e_minus && rep.covers_e_zero && rep.covers_e_plus && rep.identities_hold;
  }
  return rep;
}

}  // namespace superweyl
