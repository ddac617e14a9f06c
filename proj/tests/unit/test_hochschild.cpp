#include <gtest/gtest.h>

#include "../support/oracles.hpp"
#include "quiverfg/catalog.hpp"
#include "quiverfg/error.hpp"
#include "quiverfg/hochschild.hpp"

using namespace qfg;

namespace {

Vector unit_vector(std::size_t n, std::size_t i) {
  Vector v(n);
  v[i] = 1;
  return v;
}

}  // namespace

TEST(Hochschild, BimoduleIsAModule) {
  for (auto name : {"kx2", "A2", "kxy", "example4"}) {
    auto m = regular_bimodule(catalog::by_name(name));
    EXPECT_TRUE(m.check_relations()) << name;
  }
}

TEST(Hochschild, DimensionsAgainstBarComplex) {
  for (auto name : {"kx2", "kx3", "A2", "A3", "kxk", "k", "kxy"}) {
    auto a = catalog::by_name(name);
    std::size_t cap = std::string(name) == "kxy" ? 3 : 4;
    EXPECT_EQ(hh_dims(a, cap), oracle::bar_hh_dims(*a, cap)) << name;
    EXPECT_EQ(hh_dims(a, 0)[0], center_dimension(*a)) << name;
  }
}

TEST(Hochschild, DualNumbers) {
  auto a = catalog::truncated_polynomial(2);
  auto dims = hh_dims(a, 5);
  EXPECT_EQ(dims, (std::vector<std::size_t>{2, 1, 1, 1, 1, 1}));
  // Even degrees of k[s,t,u]/(s^2, t^2, su, ut), deg s = 0, t = 1, u = 2.
  auto ring = oracle::monomial_quotient_dims({0, 1, 2}, {{2, 0, 0}, {0, 2, 0}, {1, 0, 1}, {0, 1, 1}}, 5);
  for (std::size_t n = 0; n <= 5; n += 2) EXPECT_EQ(dims[n], ring[n]) << n;
  EXPECT_EQ(hh_dims(a->opposite(), 5), dims);
}

TEST(Hochschild, Kunneth) {
  auto d = catalog::truncated_polynomial(2);
  auto r = kunneth_check(d, d, 4);
  EXPECT_TRUE(r.equal);
  EXPECT_EQ(r.tensor_dims, (std::vector<std::size_t>{4, 4, 5, 6, 7}));
  EXPECT_EQ(hh_dims(catalog::exterior_square(), 4), r.convolution);
  EXPECT_TRUE(kunneth_check(catalog::semisimple(2), catalog::semisimple(2), 3).equal);
  EXPECT_TRUE(kunneth_check(d, catalog::semisimple(1), 3).equal);
}

TEST(Hochschild, CupProducts) {
  auto a = catalog::truncated_polynomial(2);
  Hochschild hh(a, 5);
  auto one = hh.unit();
  for (std::size_t n = 0; n <= 2; ++n)
    for (std::size_t i = 0; i < hh.dim(n); ++i) {
      auto e = unit_vector(hh.dim(n), i);
      EXPECT_EQ(hh.cup(0, one, n, e), e);
      EXPECT_EQ(hh.cup(n, e, 0, one), e);
    }
  // Graded commutativity on classes.
  const Field& f = a->field();
  for (std::size_t p = 0; p <= 2; ++p)
    for (std::size_t q = 0; q <= 2; ++q)
      for (std::size_t i = 0; i < hh.dim(p); ++i)
        for (std::size_t j = 0; j < hh.dim(q); ++j) {
          auto x = unit_vector(hh.dim(p), i), y = unit_vector(hh.dim(q), j);
          auto xy = hh.cup(p, x, q, y), yx = hh.cup(q, y, p, x);
          if ((p * q) % 2) yx = scale(f, Scalar(-1), yx);
          EXPECT_EQ(xy, yx);
        }
  // The degree-2 class generates: its powers are nonzero.
  auto u = unit_vector(1, 0);
  auto u2 = hh.cup(2, u, 2, u);
  EXPECT_FALSE(is_zero(u2));
  EXPECT_THROW(hh.cup(3, unit_vector(1, 0), 3, unit_vector(1, 0)), Error);
}

TEST(Hochschild, PhiAction) {
  auto a = catalog::truncated_polynomial(2);
  Hochschild hh(a, 4);
  auto s = simple(a, 0);
  PhiAction phi(hh, s, 4);
  EXPECT_EQ(phi.apply(0, hh.unit()), unit_vector(1, 0));
  // Periodicity generator acts nonzero on the simple module.
  EXPECT_FALSE(is_zero(phi.apply(2, unit_vector(1, 0))));
  // Multiplicativity: phi(x . y) = phi(y) o phi(x).
  const auto& q = phi.resolution();
  for (std::size_t p = 0; p <= 2; ++p)
    for (std::size_t r = 0; r + p <= 3; ++r)
      for (std::size_t i = 0; i < hh.dim(p); ++i)
        for (std::size_t j = 0; j < hh.dim(r); ++j) {
          auto x = unit_vector(hh.dim(p), i), y = unit_vector(hh.dim(r), j);
          auto lhs = phi.apply(p + r, hh.cup(p, x, r, y));
          auto px = phi.apply_cocycle(p, hh.cocycle(p, x));
          auto py = phi.apply_cocycle(r, hh.cocycle(r, y));
          auto comp = yoneda_compose(q, p, px, q, r, py, s);
          auto rhs = phi.ext().class_of(p + r, phi.ext().join(p + r, comp));
          EXPECT_EQ(lhs, rhs) << p << " " << r;
        }
}

TEST(Hochschild, Selector) {
  auto q = Field::rationals();
  EXPECT_TRUE(selects(Selector::Even, q, 2));
  EXPECT_FALSE(selects(Selector::Even, q, 3));
  EXPECT_TRUE(selects(Selector::Even, Field::prime(2), 3));
  EXPECT_TRUE(selects(Selector::Full, q, 3));
}
