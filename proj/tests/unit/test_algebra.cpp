#include <gtest/gtest.h>

#include "quiverfg/algebra.hpp"
#include "quiverfg/error.hpp"

using namespace qfg;

namespace {

Quiver cyclic3() {
  Quiver q;
  q.vertices = {"1", "2", "3"};
  q.arrows = {{"a", 0, 1}, {"b", 1, 2}, {"c", 2, 0}};
  return q;
}

AlgebraPtr example4() {
  Quiver q = cyclic3();
  std::vector<PathExpr> rels = {PathExpr::from_function_order(q, "bacba"), PathExpr::from_function_order(q, "cbac")};
  return build_quotient(Field::rationals(), q, rels);
}

}  // namespace

TEST(Algebra, Example4Dimension) {
  auto a = example4();
  EXPECT_EQ(a->dim(), 14u);
  EXPECT_TRUE(a->check_associativity());
  auto c = a->cartan_matrix();
  // column j: composition factors of P_j
  std::size_t col1 = c[0][0] + c[1][0] + c[2][0];
  EXPECT_EQ(col1, 5u);
  EXPECT_EQ(c[0][1] + c[1][1] + c[2][1], 5u);
  EXPECT_EQ(c[0][2] + c[1][2] + c[2][2], 4u);
  EXPECT_EQ(a->loewy_length(), 5u);
}

TEST(Algebra, SmallQuotients) {
  Quiver loop;
  loop.vertices = {"1"};
  loop.arrows = {{"x", 0, 0}};
  auto k2 = build_quotient(Field::rationals(), loop, {PathExpr::parse(loop, "x*x")});
  EXPECT_EQ(k2->dim(), 2u);

  Quiver two;
  two.vertices = {"1"};
  two.arrows = {{"x", 0, 0}, {"y", 0, 0}};
  auto kxy = build_quotient(Field::rationals(), two,
                            {PathExpr::parse(two, "x*x"), PathExpr::parse(two, "y*y"), PathExpr::parse(two, "x*y - y*x")});
  EXPECT_EQ(kxy->dim(), 4u);
  EXPECT_TRUE(kxy->check_associativity());
  EXPECT_EQ(center_dimension(*kxy), 4u);
  EXPECT_THROW(build_quotient(Field::rationals(), loop, {}, 10), Error);
  EXPECT_THROW(build_quotient(Field::rationals(), loop, {PathExpr::parse(loop, "x")}), Error);
}

TEST(Algebra, EnvelopingAndCorners) {
  auto a = example4();
  auto ae = enveloping(a);
  EXPECT_EQ(ae->dim(), 196u);
  EXPECT_EQ(a->opposite()->dim(), 14u);
  EXPECT_EQ(a->opposite()->opposite().get(), a.get());
  auto e1 = corner(a, vertex_idempotent_sum(*a, {0}));
  EXPECT_EQ(e1->dim(), 2u);
  auto e12 = corner(a, vertex_idempotent_sum(*a, {0, 1}));
  EXPECT_EQ(e12->dim(), 7u);
  EXPECT_TRUE(e12->check_associativity());
  auto q = quotient_by_idempotent(a, vertex_idempotent_sum(*a, {0}));
  EXPECT_TRUE(q->check_associativity());
}

TEST(Algebra, NonHomogeneousRelations) {
  // End of the tilting module from the running example.
  Quiver q;
  q.vertices = {"I", "II", "III"};
  q.arrows = {{"g", 0, 1}, {"d", 1, 0}, {"h", 1, 2}, {"t", 2, 0}};
  std::vector<PathExpr> rels = {PathExpr::parse(q, "g*d*g"), PathExpr::parse(q, "g*h"),
                                PathExpr::parse(q, "d*g*d - h*t"), PathExpr::parse(q, "t*g")};
  auto b = build_quotient(Field::rationals(), q, rels);
  EXPECT_EQ(b->dim(), 10u);
  EXPECT_TRUE(b->check_associativity());
}
