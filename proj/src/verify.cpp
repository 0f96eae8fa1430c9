#include "superweyl/verify.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <exception>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <thread>
#include <tuple>

namespace superweyl {

namespace {

using GR = GaussianRational;

std::string mode_label(const std::string& f, int n) { return f + "_" + std::to_string(n); }

std::string pair_label(const std::string& a, int n, const std::string& b, int k) {
  return "[" + mode_label(a, n) + ", " + mode_label(b, k) + "]";
}

std::map<SymbolTerm, GR> symbol_coords(const SymbolElement& x, int lo) {
  std::map<SymbolTerm, GR> out;
  for (const auto& [t, c] : x.terms())
    if (t.b >= lo) out.emplace(t, c);
  return out;
}

WeylMatrix identity_like(const WeylMatrix& x) { return WeylMatrix::identity(x.even_size(), x.odd_size()); }

std::vector<std::string> kept_families(Algebra a, const std::vector<std::string>& omit) {
  for (const auto& o : omit) family(a, o);
  std::vector<std::string> out;
  for (const auto& f : families(a))
    if (std::find(omit.begin(), omit.end(), f.name) == omit.end()) out.push_back(f.name);
  return out;
}

bool is_central_slot(Algebra a, const std::string& f, int s) { return a == Algebra::K4hat && f == "G^3" && s == 0; }

// Family matrices at one mode, with the identity as the central slot at mode 0.
struct ModeBasis {
  std::vector<std::string> labels;
  int central = -1;
  std::unique_ptr<MatrixSpan> span;
};

using MatrixCache = std::map<std::pair<std::string, int>, WeylMatrix>;

MatrixCache matrix_cache(Algebra a, const std::vector<std::string>& fams, int range) {
  MatrixCache out;
  for (const auto& f : fams)
    for (int n = -range; n <= range; ++n) out.emplace(std::make_pair(f, n), field_matrix(a, f, n));
  return out;
}

std::map<int, ModeBasis> mode_bases(Algebra a, const std::vector<std::string>& fams, const MatrixCache& cache,
                                    int range) {
  std::map<int, ModeBasis> out;
  for (int s = -range; s <= range; ++s) {
    ModeBasis mb;
    std::vector<WeylMatrix> basis;
    for (const auto& f : fams) {
      if (is_central_slot(a, f, s)) mb.central = static_cast<int>(basis.size());
      mb.labels.push_back(f);
      basis.push_back(cache.at({f, s}));
    }
    if (s == 0 && mb.central < 0) {
      mb.central = static_cast<int>(basis.size());
      mb.labels.push_back("1");
      basis.push_back(identity_like(basis.front()));
    }
    mb.span = std::make_unique<MatrixSpan>(basis);
    out.emplace(s, std::move(mb));
  }
  return out;
}

struct PairResult {
  std::vector<BracketEntry> entries;
  std::optional<std::pair<std::string, std::string>> failure;  // label, dump
};

PairResult pair_entries(const std::string& a_name, const std::string& b_name, int range, int window,
                        const MatrixCache& cache, const std::map<int, ModeBasis>& bases, bool stop) {
  PairResult out;
  for (int n = -range; n <= range; ++n) {
    for (int k = -range; k <= range; ++k) {
      int s = n + k;
      if (std::abs(s) > range) continue;
      BracketEntry e;
      e.a = a_name;
      e.n = n;
      e.b = b_name;
      e.k = k;
      e.held_out = std::max({std::abs(n), std::abs(k), std::abs(s)}) > window;
      WeylMatrix x = superbracket(cache.at({a_name, n}), cache.at({b_name, k}));
      const ModeBasis& mb = bases.at(s);
      auto dec = mb.span->decompose(x);
      if (!dec) {
        e.residual_zero = false;
        if (!out.failure) out.failure = std::make_pair(pair_label(a_name, n, b_name, k), to_string(x));
      } else {
        for (std::size_t i = 0; i < dec->size(); ++i) {
          const GR& c = (*dec)[i];
          if (c.is_zero()) continue;
          if (static_cast<int>(i) == mb.central)
            e.central = c;
          else
            e.terms.push_back({mb.labels[i], s, c});
        }
      }
      out.entries.push_back(std::move(e));
      if (stop && out.failure) return out;
    }
  }
  return out;
}

GR entry_coefficient(const BracketEntry& e, const std::string& target) {
  for (const auto& t : e.terms)
    if (t.family == target) return t.coef;
  return GR(0);
}

GR ipow(int base, int e) {
  GR out(1);
  for (int i = 0; i < e; ++i) out *= GR(base);
  return out;
}

std::vector<GR> quadratic_monomials(int n, int k) {
  return {GR(1), GR(n), GR(k), GR(n * n), GR(n * k), GR(k * k)};
}

GR evaluate(const std::vector<GR>& poly, const std::vector<GR>& mono) {
  GR out;
  for (std::size_t i = 0; i < poly.size(); ++i) out.add_product(poly[i], mono[i]);
  return out;
}

// Exact fit of values at the sample points; monomials[i] are the rows.
std::optional<std::vector<GR>> fit(const std::vector<std::vector<GR>>& monomials, const std::vector<GR>& values) {
  if (monomials.empty()) return std::vector<GR>{};
  const std::size_t m = monomials.front().size();
  std::vector<CoordinateVector> cols(m, CoordinateVector(static_cast<Eigen::Index>(values.size())));
  CoordinateVector target(static_cast<Eigen::Index>(values.size()));
  for (std::size_t r = 0; r < values.size(); ++r) {
    for (std::size_t c = 0; c < m; ++c) cols[c](static_cast<Eigen::Index>(r)) = monomials[r][c];
    target(static_cast<Eigen::Index>(r)) = values[r];
  }
  return solve_linear_system(cols, target);
}

}  // namespace

MatrixCoords coordinates(const WeylMatrix& x) {
  MatrixCoords out;
  for (int r = 0; r < x.size(); ++r)
    for (int c = 0; c < x.size(); ++c)
      for (const auto& t : x(r, c).terms()) out.emplace(MonoKey{r, c, t.a, t.k}, t.c);
  return out;
}

MatrixSpan::MatrixSpan(const std::vector<WeylMatrix>& basis) {
  for (const auto& b : basis) {
    if (even_ < 0) {
      even_ = b.even_size();
      odd_ = b.odd_size();
    } else if (b.even_size() != even_ || b.odd_size() != odd_) {
      throw std::invalid_argument("span basis shape mismatch");
    }
    span_.insert(coordinates(b));
  }
}

std::optional<Coefficients> MatrixSpan::decompose(const WeylMatrix& x) const {
  if (even_ >= 0 && (x.even_size() != even_ || x.odd_size() != odd_))
    throw std::invalid_argument("span target shape mismatch");
  return span_.decompose(coordinates(x));
}

bool MatrixSpan::contains(const WeylMatrix& x) const { return decompose(x).has_value(); }

std::optional<Coefficients> span_coordinates(const WeylMatrix& x, const std::vector<WeylMatrix>& basis) {
  return MatrixSpan(basis).decompose(x);
}

std::optional<Coefficients> symbol_span_coordinates(const SymbolElement& x, const std::vector<SymbolElement>& basis,
                                                    int lo) {
  SparseSpan<SymbolTerm> span(true);
  for (const auto& b : basis) span.insert(symbol_coords(b, lo));
  return span.decompose(symbol_coords(x, lo));
}

int worker_threads() {
  if (const char* env = std::getenv("SUPERWEYL_THREADS")) {
    try {
      int v = std::stoi(env);
      if (v >= 1) return v;
    } catch (const std::exception&) {
    }
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

void parallel_for(std::size_t count, const std::function<void(std::size_t)>& body) {
  std::size_t threads = std::min<std::size_t>(static_cast<std::size_t>(worker_threads()), count);
  if (threads <= 1) {
    for (std::size_t i = 0; i < count; ++i) body(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  auto work = [&] {
    for (;;) {
      std::size_t i = next.fetch_add(1);
      if (i >= count) return;
      try {
        body(i);
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_mutex);
        if (!error) error = std::current_exception();
        next = count;
        return;
      }
    }
  };
  std::vector<std::thread> pool;
  for (std::size_t t = 0; t < threads; ++t) pool.emplace_back(work);
  for (auto& th : pool) th.join();
  if (error) std::rethrow_exception(error);
}

BracketTable bracket_table(Algebra a, int window, const TableOptions& options) {
  if (window < 2) throw std::invalid_argument("bracket tables need a window of at least 2");
  BracketTable table;
  table.algebra = a;
  table.window = window;
  table.families = kept_families(a, options.omit);
  const int range = options.fit ? window + 1 : window;
  MatrixCache cache = matrix_cache(a, table.families, range);
  auto bases = mode_bases(a, table.families, cache, range);

  const auto& fams = table.families;
  const std::size_t F = fams.size();
  std::vector<PairResult> results(F * F);
  parallel_for(F * F, [&](std::size_t p) {
    results[p] = pair_entries(fams[p / F], fams[p % F], range, window, cache, bases, options.stop_at_first_failure);
  });

  for (std::size_t p = 0; p < F * F; ++p) {
    auto& res = results[p];
    if (res.failure && table.passed) {
      table.passed = false;
      table.failure = "no decomposition for " + res.failure->first;
    }
    if (options.fit && !res.failure) {
      const std::string& A = fams[p / F];
      const std::string& B = fams[p % F];
      std::vector<std::string> targets;
      for (const auto& f : fams)
        for (const auto& e : res.entries)
          if (!entry_coefficient(e, f).is_zero()) {
            targets.push_back(f);
            break;
          }
      for (const auto& target : targets) {
        std::vector<std::vector<GR>> mono;
        std::vector<GR> vals;
        for (const auto& e : res.entries) {
          if (e.held_out || is_central_slot(a, target, e.n + e.k)) continue;
          mono.push_back(quadratic_monomials(e.n, e.k));
          vals.push_back(entry_coefficient(e, target));
        }
        CoefficientFit cf{A, B, target, {}, false};
        if (auto sol = fit(mono, vals)) {
          cf.poly = *sol;
          cf.ok = true;
          for (const auto& e : res.entries) {
            if (is_central_slot(a, target, e.n + e.k)) continue;
            if (!(evaluate(cf.poly, quadratic_monomials(e.n, e.k)) == entry_coefficient(e, target))) {
              cf.ok = false;
              break;
            }
          }
        }
        if (!cf.ok && table.passed) {
          table.passed = false;
          table.failure = "coefficient of " + target + " in [" + A + ", " + B + "] is not a polynomial of degree <= 2";
        }
        table.fits.push_back(std::move(cf));
      }

      bool any_central = false;
      for (const auto& e : res.entries) any_central = any_central || !e.central.is_zero();
      if (any_central) {
        std::vector<const BracketEntry*> fitted, all;
        for (const auto& e : res.entries) {
          if (e.n + e.k != 0) continue;
          all.push_back(&e);
          if (!e.held_out) fitted.push_back(&e);
        }
        int degree = std::min<int>(3, static_cast<int>(fitted.size()) - 1);
        auto cubic = [&](int n) {
          std::vector<GR> m;
          for (int d = 0; d <= degree; ++d) m.push_back(ipow(n, d));
          return m;
        };
        std::vector<std::vector<GR>> mono;
        std::vector<GR> vals;
        for (const auto* e : fitted) {
          mono.push_back(cubic(e->n));
          vals.push_back(e->central);
        }
        CentralFit cf{A, B, {}, false};
        if (auto sol = fit(mono, vals)) {
          cf.poly = *sol;
          cf.poly.resize(4);
          cf.ok = true;
          for (const auto* e : all)
            if (!(evaluate(cf.poly, {GR(1), GR(e->n), ipow(e->n, 2), ipow(e->n, 3)}) == e->central)) cf.ok = false;
        }
        if (!cf.ok && table.passed) {
          table.passed = false;
          table.failure = "central term of [" + A + ", " + B + "] is not a polynomial of degree <= 3";
        }
        table.central_fits.push_back(std::move(cf));
      }
    }
    for (auto& e : res.entries) table.entries.push_back(std::move(e));
  }
  canonicalize(table);
  return table;
}

void canonicalize(BracketTable& table) {
  std::sort(table.families.begin(), table.families.end());
  for (auto& e : table.entries)
    std::sort(e.terms.begin(), e.terms.end(),
              [](const DecompTerm& x, const DecompTerm& y) { return std::tie(x.family, x.mode) < std::tie(y.family, y.mode); });
  std::stable_sort(table.entries.begin(), table.entries.end(), [](const BracketEntry& x, const BracketEntry& y) {
    return std::tie(x.a, x.b, x.n, x.k) < std::tie(y.a, y.b, y.n, y.k);
  });
  std::stable_sort(table.fits.begin(), table.fits.end(), [](const CoefficientFit& x, const CoefficientFit& y) {
    return std::tie(x.a, x.b, x.target) < std::tie(y.a, y.b, y.target);
  });
  std::stable_sort(table.central_fits.begin(), table.central_fits.end(),
                   [](const CentralFit& x, const CentralFit& y) { return std::tie(x.a, x.b) < std::tie(y.a, y.b); });
}

CocycleSplit cocycle_extract(const WeylMatrix& x, const std::vector<WeylMatrix>& family_basis) {
  std::vector<WeylMatrix> basis = family_basis;
  basis.push_back(identity_like(x));
  CocycleSplit out;
  auto dec = MatrixSpan(basis).decompose(x);
  out.in_span = dec.has_value();
  if (dec) out.central = dec->back();
  out.remainder = x - identity_like(x) * out.central;
  return out;
}

CocycleSplit cocycle_extract(const WeylMatrix& x, Algebra a) {
  std::vector<WeylMatrix> basis;
  for (const auto& f : families(a))
    if (!is_central_slot(a, f.name, 0)) basis.push_back(field_matrix(a, f.name, 0));
  return cocycle_extract(x, basis);
}

GaussianRational expected_cocycle(const std::string& a, int n, const std::string& b, int k) {
  auto base = [](const std::string& x, int m, const std::string& y, int l) -> std::optional<GR> {
    if (m + l != 0) return GR(0);
    if (x == "L" && y == "G^3") return GR(-m);
    if (x == "Q" && y == "G^0") return GR(1);
    if ((x == "X^1" || x == "X^2") && (y == "G^1" || y == "G^2")) {
      int i = x.back() - '0', j = y.back() - '0';
      if (i == j) return GR(0);
      return GR(j % 2 == 0 ? 1 : -1);
    }
    return std::nullopt;
  };
  if (auto v = base(a, n, b, k)) return *v;
  if (auto v = base(b, k, a, n)) {
    bool both_odd = family(Algebra::K4hat, a).parity == Parity::Odd && family(Algebra::K4hat, b).parity == Parity::Odd;
    return both_odd ? *v : -*v;
  }
  return GR(0);
}

ClosureReport closure_check(Algebra a, int window, const std::vector<std::string>& omit) {
  if (window < 1) throw std::invalid_argument("window must be at least 1");
  ClosureReport rep;
  rep.algebra = a;
  rep.window = window;
  auto fams = kept_families(a, omit);
  MatrixCache cache = matrix_cache(a, fams, window);
  auto bases = mode_bases(a, fams, cache, window);
  const std::size_t F = fams.size();
  std::vector<PairResult> results(F * F);
  parallel_for(F * F, [&](std::size_t p) {
    results[p] = pair_entries(fams[p / F], fams[p % F], window, window, cache, bases, true);
  });
  for (const auto& res : results) {
    rep.brackets += res.entries.size();
    if (res.failure && rep.passed) {
      rep.passed = false;
      rep.offending = res.failure->first;
      rep.bracket_dump = res.failure->second;
    }
  }
  return rep;
}

NegativeControl closure_negative_control(Algebra a, int window, const std::string& dropped) {
  ClosureReport rep = closure_check(a, window, {dropped});
  return {!rep.passed, rep.offending};
}

SymbolConsistency symbol_matrix_consistency(Algebra a, int window, int tau_floor) {
  if (a == Algebra::K2) throw std::invalid_argument("symbol consistency applies to K4hat and CK6");
  SymbolConsistency rep;
  rep.algebra = a;
  rep.window = window;
  rep.tau_floor = tau_floor;
  std::vector<std::string> fams = kept_families(a, {});
  MatrixCache cache = matrix_cache(a, fams, window);
  auto bases = mode_bases(a, fams, cache, window);

  std::map<std::pair<std::string, int>, SymbolElement> symbols;
  for (const auto& f : fams)
    for (int n = -window; n <= window; ++n) symbols.emplace(std::make_pair(f, n), field_symbol(a, f, n, tau_floor));
  std::map<int, std::vector<SymbolElement>> sym_basis;
  std::map<int, SparseSpan<SymbolTerm>> sym_span;
  for (int s = -window; s <= window; ++s) {
    auto& basis = sym_basis[s];
    for (const auto& f : fams) basis.push_back(symbols.at({f, s}));
    if (static_cast<int>(basis.size()) < static_cast<int>(bases.at(s).labels.size())) basis.push_back(SymbolElement(1));
    auto [it, fresh] = sym_span.emplace(s, SparseSpan<SymbolTerm>(true));
    for (const auto& b : basis) it->second.insert(symbol_coords(b, -1));
  }

  const std::size_t F = fams.size();
  struct Result {
    std::size_t pairs = 0;
    std::size_t mismatches = 0;
    std::string first;
  };
  std::vector<Result> results(F * F);
  parallel_for(F * F, [&](std::size_t p) {
    const std::string& A = fams[p / F];
    const std::string& B = fams[p % F];
    Result& r = results[p];
    auto fail = [&](const std::string& what) {
      ++r.mismatches;
      if (r.first.empty()) r.first = what;
    };
    for (int n = -window; n <= window; ++n) {
      for (int k = -window; k <= window; ++k) {
        int s = n + k;
        if (std::abs(s) > window) continue;
        ++r.pairs;
        SymbolElement br = p1_bracket(symbols.at({A, n}), symbols.at({B, k}), tau_floor);
        auto sdec = sym_span.at(s).decompose(symbol_coords(br, -1));
        if (!sdec) {
          fail(pair_label(A, n, B, k) + ": symbol bracket outside the family span");
          continue;
        }
        SymbolElement residual = br;
        const auto& basis = sym_basis.at(s);
        for (std::size_t i = 0; i < sdec->size(); ++i)
          if (!(*sdec)[i].is_zero()) residual -= basis[i] * (*sdec)[i];
        if (!residual.is_zero()) {
          fail(pair_label(A, n, B, k) + ": nonzero residual " + residual.to_string());
          continue;
        }
        WeylMatrix mx = superbracket(cache.at({A, n}), cache.at({B, k}));
        auto mdec = bases.at(s).span->decompose(mx);
        if (!mdec || *mdec != *sdec) fail(pair_label(A, n, B, k) + ": coefficients differ from the matrix picture");
      }
    }
  });
  for (const auto& r : results) {
    rep.pairs += r.pairs;
    rep.mismatches += r.mismatches;
    if (rep.first_mismatch.empty()) rep.first_mismatch = r.first;
  }
  rep.passed = rep.mismatches == 0;
  return rep;
}

SigmaReport k2_sigma_homomorphism(int window) {
  SigmaReport rep;
  const auto& fams = families(Algebra::K2);
  for (const auto& f : fams)
    for (int n = -window; n <= window; ++n) {
      if (!(sigma_k2(field_symbol(Algebra::K2, f.name, n)) == field_matrix(Algebra::K2, f.name, n)) && rep.passed) {
        rep.passed = false;
        rep.first_failure = "sigma(" + mode_label(f.name, n) + ") differs from its matrix";
      }
    }
  for (const auto& fa : fams)
    for (const auto& fb : fams)
      for (int n = -window; n <= window; ++n)
        for (int k = -window; k <= window; ++k) {
          ++rep.pairs;
          WeylMatrix lhs = superbracket(field_matrix(Algebra::K2, fa.name, n), field_matrix(Algebra::K2, fb.name, k));
          bool ok = true;
          try {
            SymbolElement br =
                poisson_bracket(field_symbol(Algebra::K2, fa.name, n), field_symbol(Algebra::K2, fb.name, k));
            ok = sigma_k2(br) == lhs;
          } catch (const std::invalid_argument&) {
            ok = false;
          }
          if (!ok && rep.passed) {
            rep.passed = false;
            rep.first_failure = pair_label(fa.name, n, fb.name, k);
          }
        }
  return rep;
}

SpanClosure spo_closure(int N) {
  SpanClosure rep;
  auto basis = spo_basis(N);
  std::vector<WeylMatrix> all, even, odd;
  for (const auto& b : basis) {
    all.push_back(b.matrix);
    Parity p = b.matrix.parity();
    if (p == Parity::Mixed) {
      rep.closed = false;
      if (rep.offending.empty()) rep.offending = b.label + " is not homogeneous";
    }
    (p == Parity::Odd ? odd : even).push_back(b.matrix);
  }
  MatrixSpan span(all);
  rep.even_dim = static_cast<int>(MatrixSpan(even).rank());
  rep.odd_dim = static_cast<int>(MatrixSpan(odd).rank());
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (std::size_t j = i; j < basis.size(); ++j) {
      if (span.contains(superbracket(basis[i].matrix, basis[j].matrix))) continue;
      rep.closed = false;
      if (rep.offending.empty()) rep.offending = "[" + basis[i].label + ", " + basis[j].label + "]";
    }
  return rep;
}

SpSymbolReport sp_symbol_consistency(int N) {
  SpSymbolReport rep;
  rep.N = N;
  auto gens = sp_symbol_generators(N);
  auto spo = spo_basis(N);
  std::vector<WeylMatrix> mats;
  for (std::size_t i = 0; i < gens.size(); ++i) mats.push_back(spo[3 + i].matrix);

  using JointKey = std::tuple<int, SymbolTerm, MonoKey>;
  SparseSpan<SymbolTerm> sym;
  SparseSpan<MonoKey> mat;
  SparseSpan<JointKey> joint;
  auto add = [&](const SymbolElement& s, const WeylMatrix& m) {
    std::map<SymbolTerm, GR> sc(s.terms().begin(), s.terms().end());
    MatrixCoords mc = coordinates(m);
    std::map<JointKey, GR> jc;
    for (const auto& [t, c] : sc) jc.emplace(JointKey{0, t, MonoKey{}}, c);
    for (const auto& [t, c] : mc) jc.emplace(JointKey{1, SymbolTerm{}, t}, c);
    sym.insert(std::move(sc));
    mat.insert(std::move(mc));
    joint.insert(std::move(jc));
  };
  const std::size_t G = gens.size();
  std::vector<SymbolElement> sb;
  std::vector<WeylMatrix> mb;
  for (std::size_t i = 0; i < G; ++i) add(gens[i].symbol, mats[i]);
  for (std::size_t i = 0; i < G; ++i)
    for (std::size_t j = i; j < G; ++j) {
      sb.push_back(poisson_bracket(gens[i].symbol, gens[j].symbol));
      mb.push_back(superbracket(mats[i], mats[j]));
      add(sb.back(), mb.back());
    }
  for (std::size_t i = 0; i < G; ++i)
    for (std::size_t p = 0; p < sb.size(); ++p) add(poisson_bracket(gens[i].symbol, sb[p]), superbracket(mats[i], mb[p]));
  rep.symbol_rank = static_cast<int>(sym.rank());
  rep.matrix_rank = static_cast<int>(mat.rank());
  rep.joint_rank = static_cast<int>(joint.rank());
  rep.passed = rep.symbol_rank == rep.matrix_rank && rep.matrix_rank == rep.joint_rank;
  return rep;
}

}  // namespace superweyl

namespace superweyl {

LiteralIdentity make_identity(std::string label, int n, const WeylMatrix& lhs, const WeylMatrix& rhs, bool expected) {
  LiteralIdentity id;
  id.label = std::move(label);
  id.n = n;
  id.expected = expected;
  id.holds = lhs == rhs;
  if (!id.holds) id.detail = "difference:\n" + to_string(lhs - rhs);
  return id;
}

std::vector<LiteralIdentity> spo_field_identities(Algebra a) {
  std::vector<LiteralIdentity> out;
  for (const auto& s : spo_in_fields(a)) out.push_back(make_identity(s.label, 0, s.lhs, s.rhs));
  return out;
}

std::vector<LiteralIdentity> ck6_eta_identities(int n) {
  std::vector<LiteralIdentity> out;
  const int cycles[3][3] = {{1, 2, 3}, {2, 3, 1}, {3, 1, 2}};
  auto sup = [](int x) { return "^" + std::to_string(x); };
  for (const auto& c : cycles) {
    int i = c[0], j = c[1], k = c[2];
    // J^{ij} is stored for i < j; J^{ji} = -J^{ij}.
    int lo = std::min(i, j), hi = std::max(i, j);
    GaussianRational sign(i < j ? 1 : -1);
    std::string pair = "{" + std::to_string(lo) + std::to_string(hi) + "}";
    std::string ij = "{" + std::to_string(i) + std::to_string(j) + "}";
    WeylMatrix eta_k = rho_pm(eta(k), 1, 3);
    WeylMatrix jt = ck6_field("J~^" + pair, n) * sign;
    WeylMatrix jj = ck6_field("J^" + pair, n) * sign;
    out.push_back(make_identity("[J~^" + ij + "_n, rho(eta_" + std::to_string(k) + ")^+] = -n I" + sup(k) + "_{n+1}",
                                n, superbracket(jt, eta_k), ck6_field("I" + sup(k), n + 1) * GaussianRational(-n)));
    out.push_back(make_identity("[J^" + ij + "_n, rho(eta_" + std::to_string(k) + ")^+] = -n I_{n+1}", n,
                                superbracket(jj, eta_k), ck6_field("I", n + 1) * GaussianRational(-n)));
  }
  return out;
}

LiteralIdentity k2_virasoro(int window) {
  LiteralIdentity id;
  id.label = "[L_n, L_m] = (m - n) L_{n+m}";
  id.holds = true;
  for (int n = -window; n <= window && id.holds; ++n)
    for (int m = -window; m <= window && id.holds; ++m) {
      WeylMatrix lhs = superbracket(k2_field("L", n), k2_field("L", m));
      WeylMatrix rhs = k2_field("L", n + m) * GaussianRational(m - n);
      if (!(lhs == rhs)) {
        id.holds = false;
        id.n = n;
        id.detail = "fails at n = " + std::to_string(n) + ", m = " + std::to_string(m);
      }
    }
  return id;
}

namespace {

void accumulate(ModuleVector& into, const ModuleVector& v, const GaussianRational& c) {
  for (const auto& [key, val] : v.coeffs) into.add(key.first, key.second, val * c);
}

}  // namespace

ModuleLawReport module_representation_law(Algebra a, const GaussianRational& mu, int window, int m_range) {
  ModuleLawReport rep;
  rep.algebra = a;
  rep.mu = mu;
  TableOptions opt;
  opt.fit = false;
  BracketTable table = bracket_table(a, window, opt);
  if (!table.passed) {
    rep.passed = false;
    rep.first_failure = table.failure;
    return rep;
  }
  const int labels = static_cast<int>(module_basis(a).size());
  std::vector<ModuleLawReport> parts(table.entries.size());
  parallel_for(table.entries.size(), [&](std::size_t idx) {
    const BracketEntry& e = table.entries[idx];
    ModuleLawReport& r = parts[idx];
    bool both_odd = family(a, e.a).parity == Parity::Odd && family(a, e.b).parity == Parity::Odd;
    for (int l = 0; l < labels; ++l)
      for (int m = -m_range; m <= m_range; ++m) {
        ++r.checks;
        ModuleVector v = basis_vector(a, mu, l, m);
        ModuleVector lhs = module_action(a, e.a, e.n, module_action(a, e.b, e.k, v));
        accumulate(lhs, module_action(a, e.b, e.k, module_action(a, e.a, e.n, v)), GaussianRational(both_odd ? 1 : -1));
        ModuleVector rhs{a, mu, {}};
        for (const auto& t : e.terms) accumulate(rhs, module_action(a, t.family, t.mode, v), t.coef);
        accumulate(rhs, v, e.central);
        if (lhs == rhs) continue;
        ++r.failures;
        if (r.first_failure.empty())
          r.first_failure = "[" + e.a + "_" + std::to_string(e.n) + ", " + e.b + "_" + std::to_string(e.k) + "] on " +
                            module_basis(a)[static_cast<std::size_t>(l)] + "_" + std::to_string(m);
      }
  });
  for (const auto& r : parts) {
    rep.checks += r.checks;
    rep.failures += r.failures;
    if (rep.first_failure.empty()) rep.first_failure = r.first_failure;
  }
  rep.passed = rep.failures == 0;
  return rep;
}

}  // namespace superweyl
