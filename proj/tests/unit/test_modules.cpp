#include <gtest/gtest.h>

#include "quiverfg/catalog.hpp"
#include "quiverfg/error.hpp"
#include "quiverfg/modules.hpp"

using namespace qfg;

TEST(Modules, ProjectivesOfExample4) {
  auto a = catalog::example4();
  auto p1 = projective(a, 0);
  EXPECT_EQ(p1.total_dim(), 5u);
  EXPECT_TRUE(p1.check_relations());
  // Radical series 1 2 3 1 2.
  auto layers = radical_layers(p1);
  std::vector<std::size_t> tops;
  for (const auto& l : layers)
    for (std::size_t v = 0; v < l.size(); ++v)
      if (l[v]) tops.push_back(v + 1);
  EXPECT_EQ(tops, (std::vector<std::size_t>{1, 2, 3, 1, 2}));
  auto p3 = projective(a, 2);
  auto soc = socle(p3).module;
  EXPECT_EQ(soc.dims(), (std::vector<std::size_t>{0, 0, 1}));
  EXPECT_EQ(top(p3).module.dims(), (std::vector<std::size_t>{0, 0, 1}));
}

TEST(Modules, HomDimensions) {
  auto a = catalog::example4();
  auto p2 = projective(a, 1);
  for (std::size_t v = 0; v < 3; ++v) {
    auto m = projective(a, v);
    EXPECT_EQ(hom_dim(projective(a, 0), m), m.dim(0));
    EXPECT_EQ(hom_dim(p2, m), m.dim(1));
  }
  EXPECT_EQ(hom_dim(simple(a, 0), simple(a, 1)), 0u);
  for (const auto& f : hom_basis(projective(a, 2), p2)) EXPECT_TRUE(f.commutes());
}

TEST(Modules, CokernelOfInclusion) {
  auto a = catalog::example4();
  auto p2 = projective(a, 1), p3 = projective(a, 2);
  auto h = hom_basis(p3, p2);
  // e_3 -> b and e_3 -> bacb; only the first is injective.
  ASSERT_EQ(h.size(), 2u);
  std::size_t mono = h[0].is_injective() ? 0 : 1;
  EXPECT_TRUE(h[mono].is_injective());
  EXPECT_FALSE(h[1 - mono].is_injective());
  auto c = cokernel(h[mono]).module;
  EXPECT_EQ(c.total_dim(), 1u);
  EXPECT_TRUE(is_isomorphic(c, simple(a, 1)));
  EXPECT_EQ(kernel(ModuleMap::identity(p2)).module.total_dim(), 0u);
  EXPECT_EQ(kernel(ModuleMap::zero(p2, p3)).module.total_dim(), p2.total_dim());
}

TEST(Modules, DecomposeRegular) {
  auto a = catalog::example4();
  auto parts = decompose(regular_module(a));
  ASSERT_EQ(parts.size(), 3u);
  std::size_t matched = 0;
  for (const auto& s : parts) {
    EXPECT_TRUE(s.projection.after(s.inclusion).is_isomorphism());
    for (std::size_t v = 0; v < 3; ++v)
      if (is_isomorphic(s.module, projective(a, v))) ++matched;
  }
  EXPECT_EQ(matched, 3u);
  auto ss = direct_sum_module({simple(a, 0), simple(a, 0)});
  auto cls = isoclasses(ss);
  ASSERT_EQ(cls.size(), 1u);
  EXPECT_EQ(cls[0].multiplicity, 2u);
}

TEST(Modules, DualityAndInjectives) {
  auto k2 = catalog::truncated_polynomial(2);
  EXPECT_TRUE(is_isomorphic(injective(k2, 0), projective(k2, 0)));
  auto a = catalog::example4();
  for (std::size_t v = 0; v < 3; ++v) {
    auto i = injective(a, v);
    EXPECT_TRUE(i.check_relations());
    EXPECT_EQ(socle(i).module.total_dim(), 1u);
    auto dd = dual(dual(projective(a, v)));
    EXPECT_TRUE(is_isomorphic(dd, projective(a, v)));
    EXPECT_TRUE(is_isomorphic(dual(projective(a, v)), injective(a->opposite(), v)));
  }
}

TEST(Modules, FieldRoots) {
  Field q = Field::rationals();
  // (t - 1/2)(t + 3) = t^2 + 5/2 t - 3/2
  auto rs = field_roots(q, {Scalar(-3, 2), Scalar(5, 2), Scalar(1)});
  ASSERT_EQ(rs.roots.size(), 2u);
  EXPECT_EQ(rs.roots[0], Scalar(-3));
  EXPECT_EQ(rs.roots[1], Scalar(1, 2));
  EXPECT_TRUE(field_roots(q, {Scalar(-2), Scalar(0), Scalar(1)}).roots.empty());
}
