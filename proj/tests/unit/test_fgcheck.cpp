#include <gtest/gtest.h>

#include "quiverfg/catalog.hpp"
#include "quiverfg/endo.hpp"
#include "quiverfg/error.hpp"
#include "quiverfg/fgcheck.hpp"

using namespace qfg;

TEST(FgCheck, NakayamaRoute) {
  auto ev = fg_evidence(catalog::example4());
  EXPECT_EQ(ev.verdict, FgVerdict::CertifiedYes);
  EXPECT_TRUE(ev.nakayama_route);
  auto bad = fg_evidence(catalog::cyclic_nakayama({3, 4}));
  EXPECT_EQ(bad.verdict, FgVerdict::CertifiedNo);
}

TEST(FgCheck, GenericEvidence) {
  auto ev = fg_evidence(catalog::exterior_square(), Selector::Even, 6);
  EXPECT_EQ(ev.verdict, FgVerdict::EvidenceYes);
  EXPECT_EQ(ev.e_dims, (std::vector<std::size_t>{1, 2, 3, 4, 5, 6, 7}));
  EXPECT_EQ(ev.module_generators[0], 1u);
  EXPECT_EQ(ev.module_generators[1], 2u);
  // The product of the two degree-one classes is not hit: phi kills HH^1 here.
  EXPECT_EQ(ev.module_generators[2], 1u);
  for (std::size_t n = 3; n <= 6; ++n) EXPECT_EQ(ev.module_generators[n], 0u) << n;
  auto full = fg_evidence(catalog::exterior_square(), Selector::Full, 6);
  EXPECT_EQ(full.verdict, ev.verdict);
}

TEST(FgCheck, Fingerprints) {
  auto d = catalog::truncated_polynomial(2);
  auto s = simple(d, 0);
  auto fp = support_fingerprint(d, s, s, Selector::Even, 6);
  EXPECT_EQ(fp.dims, (std::vector<std::size_t>{1, 0, 1, 0, 1, 0, 1}));
  auto p = projective(d, 0);
  auto fq = support_fingerprint(d, p, p, Selector::Even, 4);
  EXPECT_EQ(fq.dims, (std::vector<std::size_t>{2, 0, 0, 0, 0}));
  // Entries never exceed dim H, and a larger cap can only add constraints to the annihilator.
  auto a = catalog::example4();
  Hochschild hh(a, 4);
  for (std::size_t i = 0; i < 3; ++i) {
    auto small = support_fingerprint(hh, simple(a, i), 0, simple(a, i), 0, Selector::Even, 2);
    auto large = support_fingerprint(hh, simple(a, i), 0, simple(a, i), 0, Selector::Even, 4);
    for (std::size_t k = 0; k <= 2; ++k) {
      EXPECT_LE(small.dims[k], large.dims[k]);
      EXPECT_LE(large.dims[k], large.h_dims[k]);
    }
  }
}

TEST(FgCheck, EAeReduction) {
  auto a = catalog::example4();
  auto r = eAe_reduction(a, a->unit());
  EXPECT_TRUE(r.applicable);
  EXPECT_EQ(r.corner->dim(), a->dim());
  auto t = catalog::triangular2();
  auto rt = eAe_reduction(t, vertex_idempotent_sum(*t, {0}));
  EXPECT_TRUE(rt.applicable);
  auto b = endomorphism_algebra(direct_sum_module({projective(a, 0), projective(a, 1), simple(a, 1)})).algebra;
  for (const auto& vs : std::vector<std::vector<std::size_t>>{{0}, {1}, {2}, {0, 1}, {0, 2}, {1, 2}})
    EXPECT_FALSE(eAe_reduction(b, vertex_idempotent_sum(*b, vs)).applicable);
  Vector bad(a->dim());
  bad[a->num_vertices()] = 1;
  EXPECT_THROW(eAe_reduction(a, bad), Error);
}
