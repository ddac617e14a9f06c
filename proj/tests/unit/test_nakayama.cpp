#include <gtest/gtest.h>

#include "quiverfg/catalog.hpp"
#include "quiverfg/error.hpp"
#include "quiverfg/nakayama.hpp"

using namespace qfg;

TEST(Nakayama, Detection) {
  EXPECT_TRUE(is_nakayama(*catalog::example4()));
  EXPECT_FALSE(is_nakayama(*catalog::exterior_square()));
  EXPECT_TRUE(is_nakayama(*catalog::linear_path(2)));
  EXPECT_THROW(admissible_sequence(*catalog::exterior_square()), Error);
}

TEST(Nakayama, KupischSeries) {
  auto k = admissible_sequence(*catalog::example4());
  EXPECT_EQ(k.lengths, (std::vector<std::size_t>{4, 5, 5}));
  EXPECT_TRUE(k.cyclic);
  EXPECT_EQ(admissible_sequence(*catalog::semisimple(2)).lengths, (std::vector<std::size_t>{1, 1}));
  EXPECT_EQ(admissible_sequence(*catalog::truncated_polynomial(3)).lengths, (std::vector<std::size_t>{3}));
  EXPECT_EQ(admissible_sequence(*catalog::linear_path(3)).lengths, (std::vector<std::size_t>{3, 2, 1}));
  // Rotation invariance and the sum rule.
  for (const auto& ks : std::vector<std::vector<std::size_t>>{{3, 3, 2}, {3, 2, 3}, {2, 3, 3}}) {
    auto a = catalog::cyclic_nakayama(ks);
    auto s = admissible_sequence(*a);
    EXPECT_EQ(s.lengths, (std::vector<std::size_t>{2, 3, 3}));
    std::size_t sum = 0;
    for (auto l : s.lengths) sum += l;
    EXPECT_EQ(sum, a->dim());
  }
}

TEST(Nakayama, Certificates) {
  EXPECT_EQ(fg_certificate_nakayama(catalog::example4()).verdict, Verdict::Yes);
  EXPECT_EQ(fg_certificate_nakayama(catalog::truncated_polynomial(2)).verdict, Verdict::Yes);
  EXPECT_EQ(fg_certificate_nakayama(catalog::linear_path(3)).verdict, Verdict::Yes);
  auto bad = catalog::cyclic_nakayama({3, 4});
  auto c = fg_certificate_nakayama(bad);
  EXPECT_EQ(c.verdict, Verdict::No);
  EXPECT_TRUE(c.gorenstein.left.is_infinite());
  EXPECT_EQ(fg_certificate_nakayama(catalog::cyclic_nakayama({2, 3})).verdict, Verdict::Yes);
}
