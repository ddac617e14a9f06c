#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "quiverfg/field.hpp"
#include "quiverfg/matrix.hpp"

namespace qfg {

struct Arrow {
  std::string label;
  std::size_t source = 0;
  std::size_t target = 0;
};

struct Quiver {
  std::vector<std::string> vertices;
  std::vector<Arrow> arrows;

  std::size_t num_vertices() const noexcept { return vertices.size(); }
  std::optional<std::size_t> vertex_index(std::string_view label) const;
  std::optional<std::size_t> arrow_index(std::string_view label) const;
  void validate() const;
};

// A path stored in traversal order: arrows[0] is traversed first.  As an
// algebra element it is the product arrows.back() * ... * arrows[0], i.e.
// composition is function order.
struct Path {
  std::size_t start = 0;
  std::vector<std::size_t> arrows;

  std::size_t length() const noexcept { return arrows.size(); }
  std::size_t end(const Quiver& q) const { return arrows.empty() ? start : q.arrows[arrows.back()].target; }
  friend bool operator==(const Path&, const Path&) = default;
};

struct PathTerm {
  Scalar coeff;
  Path path;
};

// Formal linear combination of paths.
struct PathExpr {
  std::vector<PathTerm> terms;

  // Parses "a*b*c - 2 d*e" (traversal order, '*' separated) against q.
  static PathExpr parse(const Quiver& q, std::string_view text);
  // Parses a product written in function order with one-character arrow
  // labels, e.g. "bacba" traverses a, b, c, a, b.
  static PathExpr from_function_order(const Quiver& q, std::string_view word);

  std::string to_string(const Quiver& q) const;
};

std::string path_to_string(const Quiver& q, const Path& p);

// Basis element of an algebra: an arrow word from `source` to `target`.
struct BasisWord {
  std::size_t source = 0;
  std::size_t target = 0;
  std::vector<std::size_t> word;  // arrow indices, traversal order
};

using SparseVector = std::vector<std::pair<std::size_t, Scalar>>;

class FDAlgebra;
using AlgebraPtr = std::shared_ptr<const FDAlgebra>;

// Finite-dimensional basic split algebra with a basis of arrow words.
//
// Basis layout: indices [0, n) are the vertex idempotents, [n, n + #arrows)
// are the arrows in quiver order, the rest are longer words.  Every word of
// length >= 1 drops its last arrow to another basis word.  Products follow
// function order: product(i, j) is b_i * b_j, where b_j is traversed first.
class FDAlgebra : public std::enable_shared_from_this<FDAlgebra> {
 public:
  struct TensorFactors {
    AlgebraPtr left;
    AlgebraPtr right;
    std::vector<std::size_t> pair_to_index;  // left_index * right.dim() + right_index
    std::vector<std::pair<std::size_t, std::size_t>> index_to_pair;
  };

  FDAlgebra(Field field, Quiver quiver, std::vector<BasisWord> basis,
            std::vector<SparseVector> products, std::optional<std::vector<PathExpr>> relations = std::nullopt);

  const Field& field() const noexcept { return field_; }
  const Quiver& quiver() const noexcept { return quiver_; }
  std::size_t dim() const noexcept { return basis_.size(); }
  std::size_t num_vertices() const noexcept { return quiver_.num_vertices(); }
  std::size_t num_arrows() const noexcept { return quiver_.arrows.size(); }
  const BasisWord& basis(std::size_t i) const { return basis_[i]; }
  const std::vector<BasisWord>& basis() const noexcept { return basis_; }
  std::size_t arrow_basis_index(std::size_t arrow) const noexcept { return num_vertices() + arrow; }

  // b_i * b_j as a sparse combination of basis elements (empty if zero).
  const SparseVector& product(std::size_t i, std::size_t j) const { return products_[i * dim() + j]; }
  Vector multiply(const Vector& x, const Vector& y) const;
  Vector unit() const;
  Vector basis_vector(std::size_t i) const;

  // Basis indices of words from `source` to `target`.
  const std::vector<std::size_t>& words_between(std::size_t source, std::size_t target) const {
    return between_[target * num_vertices() + source];
  }
  // Position of basis element i inside words_between(source, target).
  std::size_t position_between(std::size_t i) const { return position_[i]; }
  // Index of the basis word obtained by removing the last arrow.
  std::size_t prefix(std::size_t i) const { return prefix_[i]; }

  const std::optional<std::vector<PathExpr>>& relations() const noexcept { return relations_; }
  const std::optional<TensorFactors>& tensor_factors() const noexcept { return tensor_; }
  void set_tensor_factors(TensorFactors t) { tensor_ = std::move(t); }

  std::size_t loewy_length() const;
  std::vector<std::vector<std::size_t>> cartan_matrix() const;  // [i][j] = dim e_i A e_j
  std::uint64_t fingerprint() const noexcept { return fingerprint_; }
  bool same_as(const FDAlgebra& other) const;

  // Opposite algebra, cached; opposite()->opposite() is this algebra.
  AlgebraPtr opposite() const;

  // Exhaustive associativity check on basis triples.
  bool check_associativity() const;

 private:
  friend AlgebraPtr make_opposite(const FDAlgebra&);

  Field field_;
  Quiver quiver_;
  std::vector<BasisWord> basis_;
  std::vector<SparseVector> products_;
  std::optional<std::vector<PathExpr>> relations_;
  std::optional<TensorFactors> tensor_;
  std::vector<std::vector<std::size_t>> between_;
  std::vector<std::size_t> position_;
  std::vector<std::size_t> prefix_;
  std::uint64_t fingerprint_ = 0;
  mutable std::shared_ptr<const FDAlgebra> opposite_strong_;
  mutable std::weak_ptr<const FDAlgebra> opposite_weak_;
  mutable std::size_t loewy_length_ = 0;
};

// Path algebra quotient kQ/<rels>, computed lengthwise.  Fails with
// NotFiniteDimensional if paths of length `cap` survive.
AlgebraPtr build_quotient(Field field, const Quiver& q, const std::vector<PathExpr>& rels, std::size_t cap = 30);

AlgebraPtr opposite(const AlgebraPtr& a);
AlgebraPtr tensor(const AlgebraPtr& a, const AlgebraPtr& b);
AlgebraPtr enveloping(const AlgebraPtr& a);

// Vertex support of an idempotent: the vertices whose idempotent coefficient is 1.
std::vector<std::size_t> idempotent_support(const FDAlgebra& a, const Vector& e);
bool is_idempotent(const FDAlgebra& a, const Vector& e);
Vector vertex_idempotent_sum(const FDAlgebra& a, const std::vector<std::size_t>& vertices);

// eAe, realised on the vertex support of e (isomorphic to eAe for any idempotent).
AlgebraPtr corner(const AlgebraPtr& a, const Vector& e);
// A / <e>.
AlgebraPtr quotient_by_idempotent(const AlgebraPtr& a, const Vector& e);

std::size_t center_dimension(const FDAlgebra& a);

// Builds an algebra from structure constants on a basis adapted to the
// vertices: elements [0, n) are orthogonal idempotents summing to one, the
// remaining elements are homogeneous (e_t b e_s = b) and span the radical.
// Arrows are lifted from rad / rad^2 and the basis is rewritten in words.
struct AdaptedAlgebra {
  AlgebraPtr algebra;
  // Word basis element i expressed in the input basis.
  std::vector<Vector> word_in_input;
  // Input basis element j expressed in the word basis.
  std::vector<Vector> input_in_word;
};

AdaptedAlgebra algebra_from_adapted_basis(
    Field field, std::vector<std::string> vertex_labels,
    const std::vector<std::pair<std::size_t, std::size_t>>& source_target,
    const std::function<Vector(std::size_t, std::size_t)>& multiply_basis,
    const std::vector<std::string>& arrow_label_hint = {});

}  // namespace qfg
