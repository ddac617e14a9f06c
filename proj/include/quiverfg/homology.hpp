#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "quiverfg/modules.hpp"

namespace qfg {

// Coordinates of the free module F = (+)_k A e_{gens[k]} at vertex v are
// (k, word in words_between(gens[k], v)), generator-major.
std::vector<std::size_t> free_offsets(const FDAlgebra& a, const std::vector<std::size_t>& gens, std::size_t v);
std::size_t free_dim_at(const FDAlgebra& a, const std::vector<std::size_t>& gens, std::size_t v);
// s * y for y in e_from F and s in e_to A e_from.
Vector free_left_multiply(const FDAlgebra& a, const std::vector<std::size_t>& gens, const SparseVector& s,
                          std::size_t from, const Vector& y, std::size_t to);
// Value at y in e_v F of the homomorphism F -> N sending generator k to values[k].
Vector evaluate_on_free(const FDAlgebra& a, const std::vector<std::size_t>& gens, std::size_t v, const Vector& y,
                        const FDModule& n, const std::vector<Vector>& values);

// Homomorphism between free modules: generator k of the source goes to
// sum_l entries[k][l] * (generator l of the target), with
// entries[k][l] in e_{source[k]} A e_{target[l]}.
struct FreeMap {
  std::vector<std::size_t> source;
  std::vector<std::size_t> target;
  std::vector<std::vector<SparseVector>> entries;
};

// Matrix of a free map on the vertex-v spaces.
Matrix free_map_block(const FDAlgebra& a, const FreeMap& f, std::size_t v);
Vector apply_free_map(const FDAlgebra& a, const FreeMap& f, std::size_t v, const Vector& y);
// Decodes an element of e_v F (F free on gens) into per-generator algebra elements.
std::vector<SparseVector> decode_free_element(const FDAlgebra& a, const std::vector<std::size_t>& gens,
                                              std::size_t v, const Vector& y);
FreeMap compose_free(const FDAlgebra& a, const FreeMap& first, const FreeMap& second);  // second o first
ModuleMap free_map_to_module_map(const AlgebraPtr& a, const FreeMap& f, const FDModule& src, const FDModule& tgt);

// Projective resolution P_n -> ... -> P_0 -> M with P_n free on gens[n].
class ProjResolution {
 public:
  ProjResolution() = default;

  const FDModule& module() const { return module_; }
  const AlgebraPtr& algebra() const { return module_.algebra(); }
  // Number of computed terms P_0 .. P_{length-1}.
  std::size_t length() const { return gens_.size(); }
  // True when the syzygy after the last computed term is zero.
  bool complete() const { return complete_; }
  const std::vector<std::size_t>& gens(std::size_t n) const;
  // d_n : P_n -> P_{n-1}, n >= 1.
  const FreeMap& differential(std::size_t n) const { return d_[n]; }
  // Images of the degree-0 generators in M.
  const std::vector<Vector>& augmentation() const { return augmentation_; }
  // True when the term exists (possibly as zero because the resolution is complete).
  bool has_term(std::size_t n) const { return n < length() || complete_; }

  FDModule term(std::size_t n) const;
  // Omega^n: Omega^0 = M, Omega^n = ker(P_{n-1} -> P_{n-2}) for n >= 1.
  FDModule syzygy(std::size_t n) const;
  const Subspace& syzygy_subspace(std::size_t n) const { return syzygies_[n]; }
  std::size_t syzygies_computed() const { return syzygies_.size(); }

  // Solver for the vertex-v block of d_n (n >= 1) or the augmentation (n = 0).
  const LinearSolver& solver(std::size_t n, std::size_t v) const;
  ModuleMap augmentation_map() const;

  // Builds a resolution from explicit data (used for non-minimal resolutions).
  static ProjResolution from_data(FDModule m, std::vector<std::vector<std::size_t>> gens, std::vector<FreeMap> d,
                                  std::vector<Vector> augmentation, bool complete);

  friend ProjResolution min_proj_resolution(const FDModule& m, std::size_t cap);

 private:
  FDModule module_;
  std::vector<std::vector<std::size_t>> gens_;
  std::vector<FreeMap> d_;
  std::vector<Vector> augmentation_;
  std::vector<Subspace> syzygies_;  // syzygies_[n] inside P_{n-1}, n >= 1; index 0 unused
  bool complete_ = false;
  struct Cache {
    std::map<std::pair<std::size_t, std::size_t>, LinearSolver> solvers;
    std::map<std::size_t, FDModule> terms;
  };
  std::shared_ptr<Cache> cache_ = std::make_shared<Cache>();
};

// Minimal projective resolution with terms P_0 .. P_cap.
ProjResolution min_proj_resolution(const FDModule& m, std::size_t cap);

struct ResolutionCheck {
  bool complexes = true;   // d o d = 0 and eps o d_1 = 0
  bool exact = true;       // kernel = image in every computed degree
  bool minimal = true;     // differentials land in the radical
};
ResolutionCheck verify_resolution(const ProjResolution& r);

// Cochains Hom(P_n, N) = (+)_k e_{gens_k} N and their cohomology.
class ExtComputer {
 public:
  ExtComputer(const ProjResolution& res, FDModule n);

  const ProjResolution& resolution() const { return res_; }
  const FDModule& target() const { return n_; }
  std::size_t max_degree() const;
  std::size_t cochain_dim(std::size_t deg) const;
  // d*_deg : Hom(P_{deg-1}, N) -> Hom(P_deg, N)
  Matrix coboundary(std::size_t deg) const;
  std::size_t dim(std::size_t deg) const;
  // Cocycles whose classes form a basis of Ext^deg.
  const std::vector<Vector>& basis(std::size_t deg) const;
  // Coordinates of the class of a cocycle in that basis.
  Vector class_of(std::size_t deg, const Vector& cocycle) const;
  bool is_coboundary(std::size_t deg, const Vector& cocycle) const;
  bool is_cocycle(std::size_t deg, const Vector& cochain) const;

  std::vector<Vector> split(std::size_t deg, const Vector& cochain) const;
  Vector join(std::size_t deg, const std::vector<Vector>& values) const;

 private:
  struct Degree {
    std::vector<Vector> reps;
    Matrix boundary_and_reps;
    std::optional<LinearSolver> solver;
    std::size_t boundary_rank = 0;
  };
  const Degree& degree(std::size_t deg) const;

  ProjResolution res_;
  FDModule n_;
  mutable std::map<std::size_t, Degree> cache_;
  mutable std::map<std::size_t, Matrix> coboundaries_;
};

struct ExtTable {
  std::vector<std::size_t> dims;
};
ExtTable ext_dims(const FDModule& m, const FDModule& n, std::size_t cap);

// Chain map lifting phi: P_p -> N (a cocycle) to maps P_{p+i} -> Q_i, i = 0..steps.
// lifts[i][k] is the image of generator k of P_{p+i} in e_v Q_i.
using ChainLift = std::vector<std::vector<Vector>>;
ChainLift lift_cocycle(const ProjResolution& source, std::size_t p, const std::vector<Vector>& phi,
                       const ProjResolution& target, std::size_t steps);

// Yoneda product theta o eta for eta in Hom(P_p(M), N), theta in Hom(Q_q(N), L).
// Returns the cochain in Hom(P_{p+q}(M), L) as per-generator values.
std::vector<Vector> yoneda_compose(const ProjResolution& pm, std::size_t p, const std::vector<Vector>& eta,
                                   const ProjResolution& qn, std::size_t q, const std::vector<Vector>& theta,
                                   const FDModule& l);

struct ProjDimResult {
  enum class Kind { Finite, AtLeast, InfinitePeriodic };
  Kind kind = Kind::Finite;
  std::size_t value = 0;  // n for Finite, cap for AtLeast
  std::size_t period = 0;
  std::size_t offset = 0;

  static ProjDimResult finite(std::size_t n) { return {Kind::Finite, n, 0, 0}; }
  static ProjDimResult at_least(std::size_t cap) { return {Kind::AtLeast, cap, 0, 0}; }
  static ProjDimResult periodic(std::size_t period, std::size_t offset) {
    return {Kind::InfinitePeriodic, 0, period, offset};
  }
  bool is_finite() const { return kind == Kind::Finite; }
  bool is_infinite() const { return kind == Kind::InfinitePeriodic; }
  std::string to_string() const;
  friend bool operator==(const ProjDimResult&, const ProjDimResult&) = default;
};

ProjDimResult projdim(const FDModule& m, std::size_t cap = 20);
ProjDimResult projdim_of(const ProjResolution& r, std::size_t cap);
ProjDimResult injdim(const FDModule& m, std::size_t cap = 20);

enum class Verdict { Yes, No, Unknown };
std::string to_string(Verdict v);

struct GorensteinResult {
  ProjDimResult left;   // injdim of A as a left module
  ProjDimResult right;  // injdim of A as a right module
  Verdict verdict = Verdict::Unknown;
  std::size_t cap = 0;
};
GorensteinResult is_gorenstein(const AlgebraPtr& a, std::size_t cap = 20);

}  // namespace qfg
