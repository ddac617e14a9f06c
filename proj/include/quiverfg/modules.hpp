#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "quiverfg/algebra.hpp"

namespace qfg {

// Left module given as a quiver representation.  The space at vertex v is
// e_v M; arrow x : s -> t acts by a dims[t] x dims[s] matrix.  The total
// space is the concatenation of the vertex spaces in vertex order.
class FDModule {
 public:
  FDModule() = default;
  FDModule(AlgebraPtr a, std::vector<std::size_t> dims, std::vector<Matrix> arrows, bool validate = true);

  static FDModule zero(AlgebraPtr a);

  const AlgebraPtr& algebra() const { return d_->algebra; }
  const Field& field() const { return d_->algebra->field(); }
  bool valid() const noexcept { return static_cast<bool>(d_); }
  const std::vector<std::size_t>& dims() const { return d_->dims; }
  std::size_t dim(std::size_t v) const { return d_->dims[v]; }
  std::size_t total_dim() const { return d_->total; }
  std::size_t offset(std::size_t v) const { return d_->offsets[v]; }
  bool is_zero() const { return d_->total == 0; }
  const Matrix& arrow(std::size_t x) const { return d_->arrows[x]; }

  // Action of basis element i, a dims[target] x dims[source] matrix.
  const Matrix& action(std::size_t i) const;
  // Action of basis element i on a vector of the source vertex space.
  Vector apply(std::size_t i, const Vector& v) const;
  // Action of the component e_to s e_from of an algebra element.
  Matrix action_of(const SparseVector& s, std::size_t from, std::size_t to) const;
  // Action of an algebra element on the whole space.
  Matrix total_action(const Vector& element) const;

  // rho(x) rho(w) = rho(x w) for every arrow x and basis word w.
  bool check_relations() const;

  const std::string& name() const { return d_->name; }
  FDModule named(std::string n) const;

 private:
  struct Data {
    AlgebraPtr algebra;
    std::vector<std::size_t> dims;
    std::vector<std::size_t> offsets;
    std::size_t total = 0;
    std::vector<Matrix> arrows;
    std::string name;
    mutable std::vector<std::optional<Matrix>> actions;
  };
  std::shared_ptr<Data> d_;
};

// Module homomorphism given by one matrix per vertex.
class ModuleMap {
 public:
  ModuleMap() = default;
  ModuleMap(FDModule source, FDModule target, std::vector<Matrix> blocks);

  static ModuleMap zero(const FDModule& source, const FDModule& target);
  static ModuleMap identity(const FDModule& m);

  const FDModule& source() const { return source_; }
  const FDModule& target() const { return target_; }
  const Matrix& block(std::size_t v) const { return blocks_[v]; }
  const std::vector<Matrix>& blocks() const { return blocks_; }
  Matrix total() const;

  // this o other
  ModuleMap after(const ModuleMap& other) const;
  ModuleMap operator+(const ModuleMap& o) const;
  ModuleMap operator-(const ModuleMap& o) const;
  ModuleMap scaled(const Scalar& s) const;

  bool is_zero() const;
  bool commutes() const;
  std::size_t rank() const;
  bool is_injective() const;
  bool is_surjective() const;
  bool is_isomorphism() const;

 private:
  FDModule source_;
  FDModule target_;
  std::vector<Matrix> blocks_;
};

// Per-vertex column bases of a subspace of a module's vertex spaces.
using Subspace = std::vector<Matrix>;

struct SubModule {
  FDModule module;
  ModuleMap inclusion;
};

struct QuotientModule {
  FDModule module;
  ModuleMap projection;
};

struct DirectSum {
  FDModule sum;
  std::vector<ModuleMap> inclusions;
  std::vector<ModuleMap> projections;
};

FDModule simple(const AlgebraPtr& a, std::size_t v);
// A e_v, with basis the words starting at v.
FDModule projective(const AlgebraPtr& a, std::size_t v);
// D(e_v A), the dual of the opposite projective.
FDModule injective(const AlgebraPtr& a, std::size_t v);
FDModule regular_module(const AlgebraPtr& a);
// Direct sum of A e_v over the listed vertices.  Coordinates at vertex j are
// (generator k, word in words_between(gens[k], j)), generator-major.
FDModule free_module(const AlgebraPtr& a, const std::vector<std::size_t>& gens);

DirectSum direct_sum(const std::vector<FDModule>& parts);
FDModule direct_sum_module(const std::vector<FDModule>& parts);

std::vector<ModuleMap> hom_basis(const FDModule& m, const FDModule& n);
std::size_t hom_dim(const FDModule& m, const FDModule& n);
// Map from a linear combination of a hom basis.
ModuleMap combine(const std::vector<ModuleMap>& basis, const Vector& coeffs, const FDModule& m, const FDModule& n);

Subspace full_subspace(const FDModule& m);
Subspace zero_subspace(const FDModule& m);
Subspace subspace_sum(const FDModule& m, const Subspace& a, const Subspace& b);
Subspace subspace_intersection(const FDModule& m, const Subspace& a, const Subspace& b);
// Image of the arrows applied to a subspace.
Subspace radical_of(const FDModule& m, const Subspace& s);
// Smallest submodule containing the given per-vertex vectors.
Subspace generated_subspace(const FDModule& m, const Subspace& gens);
bool is_closed(const FDModule& m, const Subspace& s);
std::size_t subspace_dim(const Subspace& s);

SubModule submodule(const FDModule& m, const Subspace& s);
QuotientModule quotient(const FDModule& m, const Subspace& s);

SubModule kernel(const ModuleMap& f);
SubModule image(const ModuleMap& f);
QuotientModule cokernel(const ModuleMap& f);
Subspace kernel_subspace(const ModuleMap& f);
Subspace image_subspace(const ModuleMap& f);

SubModule radical(const FDModule& m);
QuotientModule top(const FDModule& m);
SubModule socle(const FDModule& m);
std::vector<std::vector<std::size_t>> radical_layers(const FDModule& m);
std::size_t loewy_length(const FDModule& m);
std::vector<std::size_t> top_dims(const FDModule& m);
bool is_projective(const FDModule& m);

// Vectors in s (vertex, vector) whose classes form a basis of s / (rad s + w).
std::vector<std::pair<std::size_t, Vector>> relative_generators(const FDModule& m, const Subspace& s,
                                                                 const Subspace& w);
std::vector<std::pair<std::size_t, Vector>> top_generators(const FDModule& m);

// Map from the free module on `gens` sending generator k to images[k] (in target vertex gens[k]).
ModuleMap free_map_from_images(const AlgebraPtr& a, const std::vector<std::size_t>& gens, const FDModule& free,
                               const FDModule& target, const std::vector<Vector>& images);

// Dual over the opposite algebra: same dimensions, transposed arrow matrices.
FDModule dual(const FDModule& m);
ModuleMap dual(const ModuleMap& f);

struct Summand {
  FDModule module;
  ModuleMap inclusion;
  ModuleMap projection;
};

// Krull-Schmidt decomposition by Fitting splitting of random endomorphisms.
// Throws FieldTooSmall when only eigenvalues outside the field are found.
std::vector<Summand> decompose(const FDModule& m, std::uint64_t seed = 1);
bool is_indecomposable(const FDModule& m, std::uint64_t seed = 1);
std::optional<ModuleMap> find_isomorphism(const FDModule& m, const FDModule& n, std::uint64_t seed = 1);
bool is_isomorphic(const FDModule& m, const FDModule& n, std::uint64_t seed = 1);

// Indecomposable summands grouped by isomorphism class with multiplicities.
struct IsoClass {
  FDModule module;
  std::size_t multiplicity = 0;
};
std::vector<IsoClass> isoclasses(const FDModule& m, std::uint64_t seed = 1);

// Radical of Hom(x, y) between indecomposables (all of Hom unless x is isomorphic to y).
std::vector<ModuleMap> radical_hom_basis(const FDModule& x, const FDModule& y, std::uint64_t seed = 1);

// Eigenvalue of an endomorphism of an indecomposable module (which is scalar plus nilpotent).
Scalar local_eigenvalue(const ModuleMap& f);

// Roots in the field of a polynomial given by coefficients c[0] + c[1] t + ...;
// `complete` is false when roots could not be ruled out.
struct RootSearch {
  std::vector<Scalar> roots;
  bool complete = true;
};
RootSearch field_roots(const Field& f, const std::vector<Scalar>& coeffs);
std::vector<Scalar> minimal_polynomial(const Matrix& m);

std::string describe_dims(const std::vector<std::size_t>& dims);

}  // namespace qfg
