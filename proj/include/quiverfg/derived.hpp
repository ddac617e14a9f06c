#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "quiverfg/endo.hpp"
#include "quiverfg/fgcheck.hpp"
#include "quiverfg/tilting.hpp"

namespace qfg {

// Bounded cochain complex X^lo -> ... -> X^hi of left modules.
class BddComplex {
 public:
  BddComplex() = default;
  BddComplex(AlgebraPtr a, long lo, std::vector<FDModule> terms, std::vector<ModuleMap> d);

  static BddComplex stalk(const FDModule& m, long degree = 0);
  static BddComplex zero(AlgebraPtr a);
  // N -> N by the identity in degrees degree, degree + 1.
  static BddComplex contractible(const FDModule& n, long degree);

  const AlgebraPtr& algebra() const { return a_; }
  long lo() const { return lo_; }
  long hi() const { return lo_ + static_cast<long>(terms_.size()) - 1; }
  bool empty() const { return terms_.empty(); }
  FDModule term(long i) const;
  // d^i : X^i -> X^{i+1}
  ModuleMap differential(long i) const;

  // X[k]^i = X^{i+k} with differential (-1)^k d.
  BddComplex shifted(long k) const;
  // Good truncation: degree v becomes Coker d^{v-1}, lower terms are dropped.
  BddComplex truncated_below(long v) const;
  bool check() const;
  FDModule homology(long i) const;
  std::vector<std::size_t> homology_dims(long from, long to) const;
  // (module, degree) when the homology is concentrated in one degree.
  std::optional<std::pair<FDModule, long>> stalk_form() const;

 private:
  AlgebraPtr a_;
  long lo_ = 0;
  std::vector<FDModule> terms_;
  std::vector<ModuleMap> d_;
};

BddComplex direct_sum(const BddComplex& x, const BddComplex& y);

// Bounded above complex of free modules P with a quasi-isomorphism onto X,
// brutally truncated below degree `lowest`.
struct ProjComplex {
  AlgebraPtr algebra;
  long lo = 0;                                // lowest computed degree
  std::vector<std::vector<std::size_t>> gens; // gens[i - lo]
  std::vector<FreeMap> d;                     // d[i - lo] : P^i -> P^{i+1}
  std::vector<std::vector<Vector>> images;    // generator images in X^i
  long hi() const { return lo + static_cast<long>(gens.size()) - 1; }
  const std::vector<std::size_t>& gens_at(long i) const;
  BddComplex as_complex() const;
};

ProjComplex projective_replacement(const BddComplex& x, long lowest);

// dim Hom_D(X, Y[n]) for n in [from, to].
std::vector<std::size_t> hyper_hom_dims(const BddComplex& x, const BddComplex& y, long from, long to);

// Complexes of A-B-bimodules are complexes over tensor(A, opposite(B)).
// L (x)^L_B M for L over A-B and M over B-C, good-truncated below valid_from.
struct DerivedTensor {
  BddComplex complex;
  long valid_from = 0;
};
DerivedTensor derived_tensor(const BddComplex& l, const BddComplex& m, long valid_from);

struct AssocReport {
  std::vector<std::size_t> left;   // homology of (L (x) M) (x) N
  std::vector<std::size_t> right;  // homology of L (x) (M (x) N)
  long from = 0, to = 0;
  bool equal = false;
};
AssocReport assoc_check(const BddComplex& l, const BddComplex& m, const BddComplex& n, long from, long to);

// F = RHom_A(T, -) into complexes of left modules over End_A(T)^op.
class TiltingFunctor {
 public:
  // Throws TiltingNotVerified unless check_tilting(t) is Yes.
  explicit TiltingFunctor(const FDModule& t, std::uint64_t seed = 1);

  const EndoAlgebra& endo() const { return endo_; }
  const AlgebraPtr& target_algebra() const { return endo_.algebra; }
  std::size_t projdim() const { return pd_; }
  // Hom_A(T, I) as a module over End_A(T)^op.
  FDModule hom_from_t(const FDModule& m) const;
  BddComplex apply(const BddComplex& x) const;
  BddComplex apply(const FDModule& m) const { return apply(BddComplex::stalk(m)); }

 private:
  struct HomSpace {
    FDModule module;
    std::vector<std::vector<ModuleMap>> basis;  // basis[i] of Hom(T_i, M)
    std::vector<LinearSolver> solvers;
  };
  HomSpace hom_space(const FDModule& m) const;
  Matrix hom_map(const HomSpace& src, const HomSpace& tgt, const ModuleMap& f, std::size_t i) const;

  EndoAlgebra endo_;
  std::size_t pd_ = 0;
};

BddComplex rhom_tilting(const FDModule& t, const BddComplex& x);

struct PairCheck {
  std::size_t m = 0, n = 0;
  std::vector<std::size_t> a_side, b_side;
  bool equal = false;
};

struct InvarianceReport {
  std::vector<std::size_t> hh_a, hh_b;
  bool hh_equal = false;
  std::vector<PairCheck> hyper_hom;
  bool hyper_hom_equal = true;
  std::vector<PairCheck> fingerprints;
  bool fingerprints_equal = true;
  long window_from = -1, window_to = 3;
  std::size_t hh_cap = 4;
  bool passed() const { return hh_equal && hyper_hom_equal && fingerprints_equal; }
};

// Checks dimension-level consequences of the derived equivalence RHom_A(T, -)
// on the given module pairs.
InvarianceReport invariance_suite(const FDModule& t, const std::vector<FDModule>& modules,
                                  const std::vector<std::pair<std::size_t, std::size_t>>& pairs, long window_from = -1,
                                  long window_to = 3, std::size_t hh_cap = 4, std::size_t fingerprint_cap = 4);

}  // namespace qfg
