#include <gtest/gtest.h>

#include <random>

#include "quiverfg/catalog.hpp"
#include "quiverfg/derived.hpp"
#include "quiverfg/error.hpp"
#include "quiverfg/hochschild.hpp"

using namespace qfg;

namespace {

FDModule regard_as(const FDModule& m, const AlgebraPtr& a) {
  std::vector<Matrix> arrows;
  for (std::size_t x = 0; x < a->num_arrows(); ++x) arrows.push_back(m.arrow(x));
  return FDModule(a, m.dims(), std::move(arrows));
}

std::vector<std::size_t> ext_row(const FDModule& m, const FDModule& n, std::size_t cap) {
  ProjResolution r = min_proj_resolution(m, cap + 1);
  ExtComputer e(r, n);
  std::vector<std::size_t> out;
  for (std::size_t k = 0; k <= cap; ++k) out.push_back(e.dim(k));
  return out;
}

// Quotient of the regular bimodule by the sub-bimodule generated by one random element.
FDModule random_bimodule(const AlgebraPtr& a, std::mt19937_64& rng) {
  FDModule reg = regular_bimodule(a);
  std::uniform_int_distribution<int> coin(0, 3), entry(-2, 2);
  std::vector<std::size_t> support;
  for (std::size_t v = 0; v < reg.dims().size(); ++v)
    if (reg.dim(v) > 0) support.push_back(v);
  if (coin(rng) == 0) return simple(reg.algebra(), support[rng() % support.size()]);
  Subspace g = zero_subspace(reg);
  std::size_t v = support[rng() % support.size()];
  Matrix col(a->field(), reg.dim(v), 1);
  for (std::size_t r = 0; r < reg.dim(v); ++r) col(r, 0) = entry(rng);
  g[v] = col;
  return quotient(reg, generated_subspace(reg, g)).module;
}

}  // namespace

TEST(Complexes, ShiftsAndSums) {
  auto a = catalog::example4();
  auto p1 = projective(a, 0);
  auto c = BddComplex::contractible(p1, -1);
  EXPECT_TRUE(c.check());
  EXPECT_EQ(c.homology_dims(-2, 1), (std::vector<std::size_t>{0, 0, 0, 0}));
  auto s = BddComplex::stalk(simple(a, 1), 0);
  auto x = direct_sum(s, c);
  EXPECT_TRUE(x.check());
  EXPECT_EQ(x.homology_dims(-1, 0), (std::vector<std::size_t>{0, 1}));
  auto sf = x.shifted(3).stalk_form();
  ASSERT_TRUE(sf);
  EXPECT_EQ(sf->second, -3);
  EXPECT_TRUE(is_isomorphic(sf->first, simple(a, 1)));
  EXPECT_TRUE(x.shifted(1).check());
}

TEST(Complexes, ProjectiveReplacementOfStalk) {
  auto a = catalog::example4();
  for (std::size_t v = 0; v < 3; ++v) {
    auto m = simple(a, v);
    auto p = projective_replacement(BddComplex::stalk(m), -5);
    auto res = min_proj_resolution(m, 6);
    for (long i = p.lo; i <= 0; ++i) EXPECT_EQ(p.gens_at(i).size(), res.gens(static_cast<std::size_t>(-i)).size());
    auto pc = p.as_complex();
    EXPECT_TRUE(pc.check());
    auto h = pc.homology_dims(p.lo + 1, 0);
    for (std::size_t k = 0; k + 1 < h.size(); ++k) EXPECT_EQ(h[k], 0u);
    EXPECT_EQ(h.back(), 1u);
  }
}

TEST(Complexes, HyperHomOfStalksIsExt) {
  for (auto name : {"example4", "kx2", "A3"}) {
    auto a = catalog::by_name(name);
    for (std::size_t i = 0; i < a->num_vertices(); ++i)
      for (std::size_t j = 0; j < a->num_vertices(); ++j) {
        auto m = simple(a, i), n = projective(a, j);
        auto ext = ext_row(m, n, 3);
        auto hh = hyper_hom_dims(BddComplex::stalk(m), BddComplex::stalk(n), -1, 3);
        EXPECT_EQ(hh[0], 0u);
        for (std::size_t k = 0; k <= 3; ++k) EXPECT_EQ(hh[k + 1], ext[k]) << name << " " << i << " " << j;
      }
  }
}

TEST(Complexes, HyperHomInvariances) {
  auto a = catalog::example4();
  auto s1 = simple(a, 0), s2 = simple(a, 1);
  auto x = BddComplex::stalk(s1), y = BddComplex::stalk(s2);
  auto base = hyper_hom_dims(x, y, -2, 3);
  auto noisy = direct_sum(x, BddComplex::contractible(projective(a, 2), -1));
  EXPECT_EQ(hyper_hom_dims(noisy, y, -2, 3), base);
  EXPECT_EQ(hyper_hom_dims(x, direct_sum(y, BddComplex::contractible(s1, 0)), -2, 3), base);
  EXPECT_EQ(hyper_hom_dims(x.shifted(2), y.shifted(2), -2, 3), base);
  // Hom(X, Y[1][n]) = Hom(X, Y[n + 1]).
  auto up = hyper_hom_dims(x, y.shifted(1), -3, 2);
  EXPECT_EQ(up, base);
}

TEST(DerivedTensor, OneSidedTorMatchesExt) {
  auto k = catalog::semisimple(1);
  for (auto name : {"kx2", "A3", "example4"}) {
    auto b = catalog::by_name(name);
    auto left = tensor(k, b->opposite());
    auto right = tensor(b, k);
    for (std::size_t i = 0; i < b->num_vertices(); ++i)
      for (std::size_t j = 0; j < b->num_vertices(); ++j) {
        FDModule l = simple(b->opposite(), i);
        FDModule m = j % 2 == 0 ? simple(b, j) : projective(b, j);
        auto t = derived_tensor(BddComplex::stalk(regard_as(l, left)), BddComplex::stalk(regard_as(m, right)), -3);
        EXPECT_TRUE(t.complex.check());
        auto h = t.complex.homology_dims(-3, 0);
        auto ext = ext_row(m, dual(l), 3);
        for (std::size_t n = 0; n <= 3; ++n) EXPECT_EQ(h[3 - n], ext[n]) << name << " " << i << " " << j << " " << n;
      }
  }
}

TEST(DerivedTensor, RegularBimoduleIsUnit) {
  auto a = catalog::by_name("kx2");
  auto reg = BddComplex::stalk(regular_bimodule(a));
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 4; ++trial) {
    auto m = random_bimodule(a, rng);
    auto t = derived_tensor(reg, BddComplex::stalk(m), -2).complex;
    EXPECT_EQ(t.homology_dims(-3, 1), (std::vector<std::size_t>{0, 0, 0, m.total_dim(), 0}));
    if (m.is_zero()) continue;
    auto sf = t.stalk_form();
    ASSERT_TRUE(sf);
    EXPECT_TRUE(is_isomorphic(sf->first, m));
  }
}

TEST(DerivedTensor, Associativity) {
  std::mt19937_64 rng(11);
  for (auto name : {"kx2", "A2"}) {
    auto a = catalog::by_name(name);
    for (int trial = 0; trial < 3; ++trial) {
      auto l = BddComplex::stalk(random_bimodule(a, rng));
      auto m = BddComplex::stalk(random_bimodule(a, rng));
      auto n = BddComplex::stalk(random_bimodule(a, rng));
      auto r = assoc_check(l, m, n, -2, 0);
      EXPECT_TRUE(r.equal) << name << " trial " << trial;
    }
  }
}

TEST(TiltingFunctor, RegularModuleIsIdentity) {
  auto a = catalog::example4();
  TiltingFunctor f(regular_module(a));
  for (std::size_t v = 0; v < 3; ++v) {
    auto fx = f.apply(simple(a, v));
    EXPECT_TRUE(fx.check());
    auto sf = fx.stalk_form();
    ASSERT_TRUE(sf);
    EXPECT_EQ(sf->second, 0);
    EXPECT_EQ(sf->first.total_dim(), 1u);
  }
  EXPECT_THROW(TiltingFunctor(simple(catalog::truncated_polynomial(2), 0)), Error);
}

TEST(TiltingFunctor, ExampleImagesOfSimples) {
  auto a = catalog::example4();
  auto t = direct_sum_module({projective(a, 0), projective(a, 1), simple(a, 1)});
  TiltingFunctor f(t);
  EXPECT_EQ(f.projdim(), 1u);
  std::vector<long> degrees;
  for (std::size_t v = 0; v < 3; ++v) {
    auto sf = f.apply(simple(a, v)).stalk_form();
    ASSERT_TRUE(sf);
    degrees.push_back(sf->second);
    EXPECT_EQ(sf->first.total_dim(), hom_dim(t, simple(a, v)) + (sf->second == 1 ? 1u : 0u));
  }
  EXPECT_EQ(degrees, (std::vector<long>{0, 0, 1}));
}

TEST(DerivedTensor, SimpleBimoduleHasPeriodicTor) {
  auto a = catalog::truncated_polynomial(2);
  auto s = BddComplex::stalk(simple(enveloping(a), 0));
  auto t = derived_tensor(s, s, -4).complex;
  EXPECT_EQ(t.homology_dims(-4, 0), (std::vector<std::size_t>{1, 1, 1, 1, 1}));
  auto r = assoc_check(s, s, s, -3, 0);
  EXPECT_EQ(r.left, (std::vector<std::size_t>{4, 3, 2, 1}));
  EXPECT_TRUE(r.equal);
}

TEST(Invariance, ExampleTiltingModule) {
  auto a = catalog::example4();
  auto t = direct_sum_module({projective(a, 0), projective(a, 1), simple(a, 1)});
  std::vector<FDModule> mods{simple(a, 0), simple(a, 1), simple(a, 2)};
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) pairs.emplace_back(i, j);
  auto r = invariance_suite(t, mods, pairs);
  EXPECT_TRUE(r.hh_equal);
  EXPECT_EQ(r.hh_a, (std::vector<std::size_t>{2, 1, 1, 1, 1}));
  EXPECT_TRUE(r.hyper_hom_equal);
  EXPECT_TRUE(r.fingerprints_equal);
  // Hom(S3, S1[n]) is nonzero for n = 1, 2.
  EXPECT_EQ(r.hyper_hom[6].a_side, (std::vector<std::size_t>{0, 0, 1, 1, 0}));
  EXPECT_TRUE(r.passed());
}

TEST(Invariance, RegularModuleOnCatalog) {
  for (const auto& name : catalog::names()) {
    auto a = catalog::by_name(name);
    std::vector<FDModule> mods;
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t v = 0; v < a->num_vertices(); ++v) mods.push_back(simple(a, v));
    for (std::size_t i = 0; i < mods.size(); ++i) pairs.emplace_back(i, (i + 1) % mods.size());
    auto r = invariance_suite(regular_module(a), mods, pairs, -1, 3, 3, 3);
    EXPECT_TRUE(r.passed()) << name;
  }
}

TEST(TiltingFunctor, StalksOfTAndInjectives) {
  auto a = catalog::example4();
  auto t = direct_sum_module({projective(a, 0), projective(a, 1), simple(a, 1)});
  TiltingFunctor f(t);
  auto ft = f.apply(t).stalk_form();
  ASSERT_TRUE(ft);
  EXPECT_EQ(ft->second, 0);
  EXPECT_EQ(ft->first.total_dim(), 10u);
  EXPECT_TRUE(is_isomorphic(ft->first, regular_module(f.target_algebra())));
  for (std::size_t v = 0; v < 3; ++v) {
    auto fi = f.apply(injective(a, v));
    EXPECT_EQ(fi.homology_dims(-1, 2)[0] + fi.homology_dims(-1, 2)[2] + fi.homology_dims(-1, 2)[3], 0u);
  }
  // H^n F(A) = Ext^n(T, A).
  auto fa = f.apply(regular_module(a));
  auto ext = ext_row(t, regular_module(a), 2);
  EXPECT_EQ(fa.homology_dims(-1, 2), (std::vector<std::size_t>{0, ext[0], ext[1], ext[2]}));
  EXPECT_EQ(ext[0], 10u);
}

TEST(Invariance, HereditaryReflection) {
  auto a = catalog::linear_path(2);
  // Replace the simple projective by the simple injective.
  std::size_t sp = projective(a, 0).total_dim() == 1 ? 0 : 1;
  auto t = direct_sum_module({projective(a, 1 - sp), simple(a, 1 - sp)});
  ASSERT_EQ(check_tilting(t).verdict, Verdict::Yes);
  std::vector<FDModule> mods{simple(a, 0), simple(a, 1), projective(a, 1 - sp)};
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) pairs.emplace_back(i, j);
  auto r = invariance_suite(t, mods, pairs);
  EXPECT_TRUE(r.passed());
  TiltingFunctor f(t);
  auto s = f.apply(simple(a, sp)).stalk_form();
  ASSERT_TRUE(s);
  EXPECT_EQ(s->second, 1);
}
