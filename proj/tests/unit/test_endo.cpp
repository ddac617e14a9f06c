#include <gtest/gtest.h>

#include <algorithm>

#include "quiverfg/catalog.hpp"
#include "quiverfg/endo.hpp"
#include "quiverfg/error.hpp"
#include "quiverfg/homology.hpp"

using namespace qfg;

namespace {

FDModule example_tilting(const AlgebraPtr& a) {
  return direct_sum_module({projective(a, 0), projective(a, 1), simple(a, 1)});
}

std::vector<std::pair<std::size_t, std::size_t>> arrow_shape(const FDAlgebra& b, const std::vector<std::size_t>& perm) {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (const auto& ar : b.quiver().arrows) out.push_back({perm[ar.source], perm[ar.target]});
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST(Endo, RegularModuleGivesBackTheAlgebra) {
  auto a = catalog::example4();
  auto e = endomorphism_algebra(regular_module(a));
  EXPECT_EQ(e.algebra->dim(), 14u);
  EXPECT_TRUE(e.algebra->check_associativity());
  EXPECT_TRUE(cartan_match(*e.algebra, *a).has_value());
  auto s = endomorphism_algebra(simple(a, 2));
  EXPECT_EQ(s.algebra->dim(), 1u);
  EXPECT_EQ(s.algebra->num_arrows(), 0u);
}

TEST(Endo, ExampleEndomorphismAlgebra) {
  auto a = catalog::example4();
  auto e = endomorphism_algebra(example_tilting(a));
  auto b = e.algebra;
  EXPECT_EQ(b->dim(), 10u);
  EXPECT_TRUE(b->check_associativity());
  EXPECT_EQ(b->num_vertices(), 3u);
  EXPECT_EQ(b->num_arrows(), 4u);
  // Multiplication agrees with composition of maps (opposite convention).
  for (std::size_t i = 0; i < b->dim(); ++i)
    for (std::size_t j = 0; j < b->dim(); ++j) {
      auto lhs = e.as_map(b->multiply(b->basis_vector(i), b->basis_vector(j)));
      auto rhs = e.as_map(b->basis_vector(j)).after(e.as_map(b->basis_vector(i)));
      EXPECT_TRUE((lhs - rhs).is_zero());
    }
  // Against the quotient by the displayed relations.
  auto displayed = catalog::endo_quotient();
  EXPECT_EQ(displayed->dim(), 10u);
  auto perm = cartan_match(*b, *displayed);
  ASSERT_TRUE(perm.has_value());
  // Shape {I->II, II->I, II->III, III->I} under the Cartan matching.
  std::vector<std::size_t> ident{0, 1, 2};
  std::vector<std::size_t> inv(3);
  for (std::size_t i = 0; i < 3; ++i) inv[(*perm)[i]] = i;
  EXPECT_EQ(arrow_shape(*b, inv), arrow_shape(*displayed, ident));
  auto pr = present_by_quiver(b);
  EXPECT_EQ(pr.quotient->dim(), 10u);
  EXPECT_EQ(pr.quotient->cartan_matrix(), b->cartan_matrix());
}

TEST(Endo, SmallPresentations) {
  auto d = catalog::truncated_polynomial(2);
  auto pr = present_by_quiver(d);
  ASSERT_EQ(pr.quiver.arrows.size(), 1u);
  ASSERT_EQ(pr.relations.size(), 1u);
  ASSERT_EQ(pr.relations[0].terms.size(), 1u);
  EXPECT_EQ(pr.relations[0].terms[0].path.length(), 2u);
  auto k = present_by_quiver(catalog::semisimple(1));
  EXPECT_TRUE(k.relations.empty());
  EXPECT_EQ(k.quotient->dim(), 1u);
  auto ex = present_by_quiver(catalog::example4());
  EXPECT_EQ(ex.relations.size(), 2u);
  EXPECT_EQ(ex.quotient->dim(), 14u);
}

TEST(Endo, SimplesOfTheEndomorphismAlgebra) {
  auto a = catalog::example4();
  auto b = endomorphism_algebra(example_tilting(a)).algebra;
  for (std::size_t v = 0; v < 3; ++v) EXPECT_TRUE(projdim(simple(b, v)).is_infinite()) << v;
  EXPECT_EQ(is_gorenstein(b).verdict, Verdict::Yes);
}
