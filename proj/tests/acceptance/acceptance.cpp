// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <algorithm>
#include <chrono>
#include <filesystem>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "../support/oracles.hpp"
#include "quiverfg/catalog.hpp"
#include "quiverfg/derived.hpp"
#include "quiverfg/endo.hpp"
#include "quiverfg/fgcheck.hpp"
#include "quiverfg/hochschild.hpp"
#include "quiverfg/io.hpp"
#include "quiverfg/nakayama.hpp"
#include "quiverfg/tilting.hpp"

using namespace qfg;

namespace {

using Rng = std::mt19937_64;

// Collects failed expectations for one criterion.
struct Checks {
  std::vector<std::string> failures;
  std::size_t count = 0;
  void expect(bool ok, const std::string& what) {
    ++count;
    if (!ok) failures.push_back(what);
  }
};

std::string tuple(const std::vector<std::size_t>& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s + ")";
}

std::vector<std::size_t> loewy_series(const FDModule& m) {
  std::vector<std::size_t> out;
  for (const auto& layer : radical_layers(m))
    for (std::size_t v = 0; v < layer.size(); ++v)
      for (std::size_t k = 0; k < layer[v]; ++k) out.push_back(v + 1);
  return out;
}

Vector random_vector(const Field& f, std::size_t n, Rng& rng, int range = 3) {
  std::uniform_int_distribution<int> d(-range, range);
  Vector v;
  for (std::size_t i = 0; i < n; ++i) v.push_back(f.from_int(d(rng)));
  return v;
}

// Quotient of an indecomposable projective by the submodule generated by a random element.
FDModule random_module(const AlgebraPtr& a, Rng& rng) {
  std::size_t v = rng() % a->num_vertices();
  FDModule p = projective(a, v);
  std::size_t w = rng() % a->num_vertices();
  if (p.dim(w) == 0 || rng() % 4 == 0) return p;
  Subspace g = zero_subspace(p);
  Matrix col(a->field(), p.dim(w), 1);
  auto x = random_vector(a->field(), p.dim(w), rng);
  for (std::size_t r = 0; r < p.dim(w); ++r) col(r, 0) = x[r];
  g[w] = col;
  FDModule q = quotient(p, generated_subspace(p, g)).module;
  return q.is_zero() ? simple(a, v) : q;
}

FDModule random_bimodule(const AlgebraPtr& a, Rng& rng) {
  FDModule reg = regular_bimodule(a);
  std::vector<std::size_t> support;
  for (std::size_t v = 0; v < reg.dims().size(); ++v)
    if (reg.dim(v) > 0) support.push_back(v);
  if (rng() % 4 == 0) return simple(reg.algebra(), support[rng() % support.size()]);
  std::size_t v = support[rng() % support.size()];
  Subspace g = zero_subspace(reg);
  Matrix col(a->field(), reg.dim(v), 1);
  auto x = random_vector(a->field(), reg.dim(v), rng, 2);
  for (std::size_t r = 0; r < reg.dim(v); ++r) col(r, 0) = x[r];
  g[v] = col;
  return quotient(reg, generated_subspace(reg, g)).module;
}

// Random cocycle: a random combination of basis cocycles plus a random coboundary.
Vector random_cocycle(const ExtComputer& e, std::size_t deg, Rng& rng) {
  const Field& f = e.target().field();
  Vector c = zero_vector(f, e.cochain_dim(deg));
  for (const auto& b : e.basis(deg)) c = add(f, c, scale(f, f.from_int(static_cast<long>(rng() % 5) - 2), b));
  if (deg > 0 && e.cochain_dim(deg - 1) > 0)
    c = add(f, c, e.coboundary(deg).apply(random_vector(f, e.cochain_dim(deg - 1), rng)));
  return c;
}

std::vector<AlgebraPtr> shipped_algebras(std::vector<std::string>* names) {
  std::vector<AlgebraPtr> out;
  for (const auto& n : catalog::names()) {
    out.push_back(catalog::by_name(n));
    names->push_back(n);
  }
  std::vector<std::filesystem::path> files;
  for (const auto& e : std::filesystem::directory_iterator(QUIVERFG_DATA_DIR))
    if (e.path().extension() == ".alg") files.push_back(e.path());
  std::sort(files.begin(), files.end());
  for (const auto& p : files) {
    out.push_back(load_algebra(p.string()));
    names->push_back(p.filename().string());
  }
  return out;
}

// ------------------------------------------------------------------ criteria

void example4_construction(Checks& c) {
  auto a = catalog::example4();
  c.expect(a->dim() == 14, "dim A = " + std::to_string(a->dim()));
  const std::vector<std::vector<std::size_t>> series{{1, 2, 3, 1, 2}, {2, 3, 1, 2, 3}, {3, 1, 2, 3}};
  for (std::size_t v = 0; v < 3; ++v) {
    auto s = loewy_series(projective(a, v));
    c.expect(s == series[v], "Loewy series of P" + std::to_string(v + 1) + " = " + tuple(s));
  }
  auto cm = a->cartan_matrix();
  const std::vector<std::vector<std::size_t>> cols{{2, 2, 1}, {1, 2, 2}, {1, 1, 2}};
  for (std::size_t j = 0; j < 3; ++j)
    for (std::size_t i = 0; i < 3; ++i) c.expect(cm[i][j] == cols[j][i], "Cartan entry");
  // The algebra file ships the same presentation.
  auto f = load_algebra(std::string(QUIVERFG_DATA_DIR) + "/example4.alg");
  c.expect(f->dim() == 14 && f->cartan_matrix() == cm, "example4.alg disagrees with the built-in");
}

void nakayama_gorenstein_fg(Checks& c) {
  auto a = catalog::example4();
  c.expect(is_nakayama(*a), "is_nakayama");
  auto ks = admissible_sequence(*a);
  c.expect(ks.lengths == std::vector<std::size_t>{4, 5, 5}, "admissible sequence " + tuple(ks.lengths));
  auto g = is_gorenstein(a, 20);
  c.expect(g.verdict == Verdict::Yes, "Gorenstein verdict " + to_string(g.verdict));
  auto ev = fg_evidence(a);
  c.expect(ev.verdict == FgVerdict::CertifiedYes, "fg verdict " + to_string(ev.verdict));
}

void tilting_pipeline(Checks& c) {
  auto a = catalog::example4();
  auto p1 = projective(a, 0), p2 = projective(a, 1), p3 = projective(a, 2);
  auto m = direct_sum_module({p1, p2});
  c.expect(is_almost_complete(m, 20), "P1 + P2 almost complete");
  auto ap = left_add_approximation(p3, m);
  c.expect(ap.map.is_injective(), "approximation of P3 is a monomorphism");
  c.expect(ap.summands.size() == 1 && ap.copies[0] == 1 && is_isomorphic(ap.summands[0], p2),
           "approximation target is P2");
  auto mu = mutate_complement(m, p3);
  c.expect(mu.complement.total_dim() == 1 && is_isomorphic(mu.complement, simple(a, 1)), "complement is S2");
  auto t = direct_sum_module({p1, p2, simple(a, 1)});
  c.expect(check_tilting(t).verdict == Verdict::Yes, "T = P1 + P2 + S2 tilting");
}

void endo_presentation(Checks& c) {
  auto a = catalog::example4();
  auto t = direct_sum_module({projective(a, 0), projective(a, 1), simple(a, 1)});
  auto e = endomorphism_algebra(t, EndoConvention::Opposite);
  auto b = e.algebra;
  c.expect(b->dim() == 10, "dim End(T) = " + std::to_string(b->dim()));
  c.expect(b->num_vertices() == 3 && b->num_arrows() == 4, "quiver size");
  auto displayed = catalog::endo_quotient();
  c.expect(displayed->dim() == 10, "quotient by the displayed relations has dim " + std::to_string(displayed->dim()));
  auto p = cartan_match(*b, *displayed);
  c.expect(p.has_value(), "Cartan matrices agree up to vertex relabelling");
  if (p) {
    // Displayed arrows I->II, II->I, II->III, III->I transported along the matching.
    std::vector<std::pair<std::size_t, std::size_t>> sa, sb;
    for (const auto& x : b->quiver().arrows) sa.emplace_back(x.source, x.target);
    const std::vector<std::pair<std::size_t, std::size_t>> shape{{0, 1}, {1, 0}, {1, 2}, {2, 0}};
    for (auto [s, t2] : shape) sb.emplace_back((*p)[s], (*p)[t2]);
    std::sort(sa.begin(), sa.end());
    std::sort(sb.begin(), sb.end());
    c.expect(sa == sb, "arrow multiset");
  }
  // The shipped file for the displayed presentation agrees.
  auto f = load_algebra(std::string(QUIVERFG_DATA_DIR) + "/endo4.alg");
  c.expect(f->dim() == 10 && cartan_match(*b, *f).has_value(), "endo4.alg");
}

void infinite_projdims(Checks& c) {
  auto a = catalog::example4();
  auto t = direct_sum_module({projective(a, 0), projective(a, 1), simple(a, 1)});
  auto b = endomorphism_algebra(t, EndoConvention::Opposite).algebra;
  for (std::size_t v = 0; v < 3; ++v) {
    auto pd = projdim(simple(b, v), 20);
    c.expect(pd.kind == ProjDimResult::Kind::InfinitePeriodic, "pd S" + std::to_string(v + 1) + " = " + pd.to_string());
  }
  for (std::size_t mask = 1; mask < 7; ++mask) {
    std::vector<std::size_t> vs;
    for (std::size_t v = 0; v < 3; ++v)
      if (mask & (1u << v)) vs.push_back(v);
    c.expect(!eAe_reduction(b, vertex_idempotent_sum(*b, vs)).applicable, "eAe applicable for mask " + std::to_string(mask));
  }
}

void derived_invariance(Checks& c) {
  auto a = catalog::example4();
  auto t = direct_sum_module({projective(a, 0), projective(a, 1), simple(a, 1)});
  std::vector<FDModule> simples{simple(a, 0), simple(a, 1), simple(a, 2)};
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) pairs.emplace_back(i, j);
  auto r = invariance_suite(t, simples, pairs, -1, 3, 4, 4);
  c.expect(r.hh_equal, "HH " + tuple(r.hh_a) + " vs " + tuple(r.hh_b));
  c.expect(r.hyper_hom_equal, "hyper-Hom tables");
  c.expect(r.fingerprints_equal, "support fingerprints");
  // The oracle agrees with both sides in low degrees.
  auto bar = oracle::bar_hh_dims(*a, 3);
  c.expect(std::equal(bar.begin(), bar.end(), r.hh_a.begin()), "bar complex oracle " + tuple(bar));
}

void hochschild_examples(Checks& c) {
  auto d = catalog::truncated_polynomial(2);
  auto hd = hh_dims(d, 5);
  c.expect(hd == std::vector<std::size_t>{2, 1, 1, 1, 1, 1}, "HH(k[x]/x^2) = " + tuple(hd));
  c.expect(hd == oracle::bar_hh_dims(*d, 5), "bar complex oracle");
  auto ring = oracle::monomial_quotient_dims({0, 1, 2}, {{2, 0, 0}, {0, 2, 0}, {1, 0, 1}, {0, 1, 1}}, 5);
  for (std::size_t n = 0; n <= 5; n += 2) c.expect(ring[n] == hd[n], "graded ring degree " + std::to_string(n));
  auto kun = kunneth_check(d, d, 4);
  c.expect(kun.equal, "Kunneth " + tuple(kun.tensor_dims) + " vs " + tuple(kun.convolution));
  auto kxy = catalog::exterior_square();
  auto direct = hh_dims(kxy, 4);
  c.expect(direct == kun.convolution, "HH(k[x,y]/(x^2,y^2)) = " + tuple(direct));
  c.expect(direct[0] == 4 && center_dimension(*kxy) == 4, "HH^0 = 4");
}

// Criterion 8 suites; each records how many instances it ran.
void property_suites(Checks& c, std::ostringstream& log) {
  Rng rng(20240611);
  const std::vector<std::string> algebras{"kx2", "kx3", "kxy", "A2", "A3", "example4", "kxk"};

  {  // rank-nullity over Q and F_5
    std::size_t n = 0;
    for (const Field& f : {Field::rationals(), Field::prime(5)})
      for (int trial = 0; trial < 40; ++trial) {
        std::size_t r = 1 + rng() % 6, k = 1 + rng() % 6;
        Matrix m(f, r, k);
        // Low-rank products make kernels nontrivial.
        std::size_t inner = 1 + rng() % 4;
        Matrix x(f, r, inner), y(f, inner, k);
        for (std::size_t i = 0; i < r; ++i)
          for (std::size_t j = 0; j < inner; ++j) x(i, j) = f.from_int(static_cast<long>(rng() % 7) - 3);
        for (std::size_t i = 0; i < inner; ++i)
          for (std::size_t j = 0; j < k; ++j) y(i, j) = f.from_int(static_cast<long>(rng() % 7) - 3);
        m = x * y;
        auto ker = kernel_basis(m);
        bool ok = rank(m) + ker.size() == k && rank(m) == image_matrix(m).cols();
        for (const auto& v : ker) ok = ok && is_zero(m.apply(v));
        c.expect(ok, "rank-nullity");
        ++n;
      }
    log << " rank-nullity:" << n;
  }

  std::vector<std::pair<AlgebraPtr, FDModule>> samples;
  for (const auto& name : algebras) {
    auto a = catalog::by_name(name);
    for (int i = 0; i < 4; ++i) samples.emplace_back(a, random_module(a, rng));
  }

  {  // resolutions
    for (const auto& [a, m] : samples) {
      auto r = min_proj_resolution(m, 5);
      auto v = verify_resolution(r);
      c.expect(v.complexes && v.exact && v.minimal, "resolution over " + a->quiver().vertices[0]);
    }
    log << " resolutions:" << samples.size();
  }

  {  // Ext additivity in both arguments
    std::size_t n = 0;
    for (std::size_t i = 0; i + 1 < samples.size(); i += 2) {
      const auto& [a, m] = samples[i];
      const auto& m2 = samples[i + 1].second;
      if (samples[i + 1].first != a) continue;
      auto s = simple(a, rng() % a->num_vertices());
      auto sum = ext_dims(direct_sum_module({m, m2}), s, 3).dims;
      auto x = ext_dims(m, s, 3).dims, y = ext_dims(m2, s, 3).dims;
      bool ok = true;
      for (std::size_t k = 0; k <= 3; ++k) ok = ok && sum[k] == x[k] + y[k];
      auto sum2 = ext_dims(s, direct_sum_module({m, m2}), 3).dims;
      x = ext_dims(s, m, 3).dims;
      y = ext_dims(s, m2, 3).dims;
      for (std::size_t k = 0; k <= 3; ++k) ok = ok && sum2[k] == x[k] + y[k];
      c.expect(ok, "Ext additivity");
      ++n;
    }
    log << " ext-additivity:" << n;
  }

  {  // Yoneda associativity on classes, with random coboundaries added
    std::size_t n = 0, nonzero = 0;
    for (const auto& name : {"kxy", "kx2", "example4", "A3", "kxk"}) {
      auto a = catalog::by_name(name);
      for (int trial = 0; trial < 8; ++trial) {
        FDModule mods[4];
        for (auto& m : mods) m = rng() % 4 ? simple(a, rng() % a->num_vertices()) : random_module(a, rng);
        std::size_t p = rng() % 2, q = 1 + rng() % 2, r = rng() % 2;
        auto res0 = min_proj_resolution(mods[0], 6), res1 = min_proj_resolution(mods[1], 6),
             res2 = min_proj_resolution(mods[2], 6);
        ExtComputer e01(res0, mods[1]), e12(res1, mods[2]), e23(res2, mods[3]), e03(res0, mods[3]);
        auto eta = e01.split(p, random_cocycle(e01, p, rng));
        auto theta = e12.split(q, random_cocycle(e12, q, rng));
        auto zeta = e23.split(r, random_cocycle(e23, r, rng));
        auto left = yoneda_compose(res0, p + q, yoneda_compose(res0, p, eta, res1, q, theta, mods[2]), res2, r, zeta,
                                   mods[3]);
        auto right = yoneda_compose(res0, p, eta, res1, q + r, yoneda_compose(res1, q, theta, res2, r, zeta, mods[3]),
                                    mods[3]);
        std::size_t deg = p + q + r;
        auto cl = e03.class_of(deg, e03.join(deg, left));
        c.expect(cl == e03.class_of(deg, e03.join(deg, right)), std::string("Yoneda associativity over ") + name);
        if (!is_zero(cl)) ++nonzero;
        ++n;
      }
    }
    c.expect(nonzero * 4 >= n, "too few nonzero Yoneda composites to be informative");
    log << " yoneda:" << n << " (" << nonzero << " nonzero)";
  }

  {  // approximation factorization
    std::size_t n = 0;
    for (const auto& name : {"example4", "A3", "kx3"}) {
      auto a = catalog::by_name(name);
      for (int trial = 0; trial < 5; ++trial) {
        auto m = direct_sum_module({random_module(a, rng), random_module(a, rng)});
        auto x = random_module(a, rng);
        auto ap = left_add_approximation(x, m);
        auto target = direct_sum_module({m, m});
        auto basis = hom_basis(x, target);
        if (basis.empty()) continue;
        auto g = combine(basis, random_vector(a->field(), basis.size(), rng), x, target);
        c.expect(factors_through(ap.map, g), std::string("approximation over ") + name);
        ++n;
      }
    }
    log << " approximations:" << n;
  }

  {  // cup products and phi
    std::size_t ncup = 0, nphi = 0;
    for (const auto& name : {"kx2", "kxy", "A2", "example4", "kx3"}) {
      auto a = catalog::by_name(name);
      const Field& f = a->field();
      Hochschild hh(a, 4);
      for (int trial = 0; trial < 6; ++trial) {
        std::size_t p = rng() % 3, q = rng() % 3;
        if (p + q > 4 || hh.dim(p) == 0 || hh.dim(q) == 0) continue;
        auto x = random_vector(f, hh.dim(p), rng), y = random_vector(f, hh.dim(q), rng);
        auto xy = hh.cup(p, x, q, y), yx = hh.cup(q, y, p, x);
        if ((p * q) % 2) yx = scale(f, f.from_int(-1), yx);
        c.expect(xy == yx, std::string("graded commutativity over ") + name);
        ++ncup;
      }
      auto s = random_module(a, rng);
      PhiAction phi(hh, s, 4);
      const auto& qres = phi.resolution();
      for (int trial = 0; trial < 4; ++trial) {
        std::size_t p = rng() % 3, r = rng() % 2;
        if (hh.dim(p) == 0 || hh.dim(r) == 0) continue;
        auto x = random_vector(f, hh.dim(p), rng), y = random_vector(f, hh.dim(r), rng);
        auto lhs = phi.apply(p + r, hh.cup(p, x, r, y));
        auto px = phi.apply_cocycle(p, hh.cocycle(p, x));
        auto py = phi.apply_cocycle(r, hh.cocycle(r, y));
        auto comp = yoneda_compose(qres, p, px, qres, r, py, s);
        c.expect(lhs == phi.ext().class_of(p + r, phi.ext().join(p + r, comp)),
                 std::string("phi multiplicativity over ") + name);
        ++nphi;
      }
    }
    log << " cup:" << ncup << " phi:" << nphi;
  }

  {  // derived tensor associativity
    std::size_t n = 0;
    const std::vector<std::string> names{"kx2", "A2", "k", "kxk"};
    for (std::size_t trial = 0; trial < 56; ++trial) {
      auto a = catalog::by_name(names[trial % names.size()]);
      auto cx = [&] {
        auto x = BddComplex::stalk(random_bimodule(a, rng));
        return rng() % 3 == 0 ? direct_sum(x, BddComplex::stalk(random_bimodule(a, rng), -1)) : x;
      };
      auto l = cx(), m = cx(), nn = cx();
      auto r = assoc_check(l, m, nn, -2, 0);
      c.expect(r.equal, "derived tensor associativity over " + names[trial % names.size()] + ": " + tuple(r.left) +
                            " vs " + tuple(r.right));
      ++n;
    }
    log << " assoc:" << n;
  }

  {  // hyper-Hom invariance under quasi-isomorphism
    std::size_t n = 0;
    for (const auto& name : {"example4", "A3", "kx2"}) {
      auto a = catalog::by_name(name);
      for (int trial = 0; trial < 5; ++trial) {
        auto x = direct_sum(BddComplex::stalk(random_module(a, rng)), BddComplex::stalk(random_module(a, rng), 1));
        auto y = BddComplex::stalk(random_module(a, rng), static_cast<long>(rng() % 2));
        auto base = hyper_hom_dims(x, y, -2, 3);
        auto noisy = direct_sum(x, BddComplex::contractible(random_module(a, rng), -1));
        auto replaced = projective_replacement(x, -6).as_complex();
        bool ok = hyper_hom_dims(noisy, y, -2, 3) == base && hyper_hom_dims(replaced, y, -2, 3) == base &&
                  hyper_hom_dims(x, direct_sum(y, BddComplex::contractible(random_module(a, rng), 0)), -2, 3) == base;
        c.expect(ok, std::string("hyper-Hom invariance over ") + name);
        ++n;
      }
    }
    log << " hyper-hom:" << n;
  }
}

void identity_equivalence(Checks& c, std::ostringstream& log) {
  std::vector<std::string> names;
  auto algs = shipped_algebras(&names);
  for (std::size_t k = 0; k < algs.size(); ++k) {
    const auto& a = algs[k];
    std::vector<FDModule> mods;
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t v = 0; v < a->num_vertices(); ++v) mods.push_back(simple(a, v));
    for (std::size_t i = 0; i < mods.size(); ++i)
      for (std::size_t j = 0; j < mods.size(); ++j) pairs.emplace_back(i, j);
    auto r = invariance_suite(regular_module(a), mods, pairs, -1, 3, 3, 3);
    c.expect(r.passed(), "identity equivalence on " + names[k]);
  }
  log << " algebras:" << algs.size();
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* title;
    double budget_s;
    std::function<void(Checks&, std::ostringstream&)> run;
  };
  const std::vector<Criterion> criteria{
      {1, "example algebra construction", 1, [](Checks& c, auto&) { example4_construction(c); }},
      {2, "Nakayama, Gorenstein and (Fg)", 5, [](Checks& c, auto&) { nakayama_gorenstein_fg(c); }},
      {3, "tilting pipeline", 5, [](Checks& c, auto&) { tilting_pipeline(c); }},
      {4, "endomorphism algebra presentation", 5, [](Checks& c, auto&) { endo_presentation(c); }},
      {5, "infinite projective dimensions", 30, [](Checks& c, auto&) { infinite_projdims(c); }},
      {6, "derived invariance", 600, [](Checks& c, auto&) { derived_invariance(c); }},
      {7, "Hochschild examples", 60, [](Checks& c, auto&) { hochschild_examples(c); }},
      {8, "property suites", 300, property_suites},
      {9, "identity equivalence", 60, identity_equivalence},
  };
  bool all = true;
  for (const auto& cr : criteria) {
    Checks c;
    std::ostringstream log;
    auto t0 = std::chrono::steady_clock::now();
    try {
      cr.run(c, log);
    } catch (const std::exception& e) {
      c.failures.push_back(std::string("exception: ") + e.what());
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (secs > cr.budget_s) c.failures.push_back("over time budget");
    bool pass = c.failures.empty();
    all = all && pass;
    std::cout << (pass ? "PASS" : "FAIL") << " criterion " << cr.id << ": " << cr.title << " (" << c.count
              << " checks," << log.str() << (log.str().empty() ? " " : "; ") << secs << " s)\n";
    for (const auto& f : c.failures) std::cout << "    " << f << "\n";
  }
  return all ? 0 : 1;
}
