#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "quiverfg/modules.hpp"

namespace qfg {

enum class EndoConvention {
  ActOnLeft,  // product is composition f * g = f o g
  Opposite,   // End(T)^op: f * g = g o f
};

// End(T) for T reduced to one copy of each indecomposable summand.  Vertex i
// corresponds to summands[i]; input element k of the adapted basis is the map
// maps[k] : summands[map_source[k]] -> summands[map_target[k]].
struct EndoAlgebra {
  AlgebraPtr algebra;
  EndoConvention convention = EndoConvention::Opposite;
  std::vector<FDModule> summands;
  std::vector<std::size_t> multiplicities;
  std::vector<ModuleMap> maps;
  std::vector<std::size_t> map_source;
  std::vector<std::size_t> map_target;
  // Word basis element i of `algebra` in terms of `maps`.
  std::vector<Vector> word_in_maps;

  // The summand sum and the endomorphism represented by an algebra element.
  DirectSum basic;
  ModuleMap as_map(const Vector& element) const;
};

EndoAlgebra endomorphism_algebra(const FDModule& t, EndoConvention convention = EndoConvention::Opposite,
                                 std::uint64_t seed = 1);

struct Presentation {
  Quiver quiver;
  std::vector<PathExpr> relations;
  std::size_t cap = 0;
  AlgebraPtr quotient;  // build_quotient(quiver, relations)
  // Arrow images in the presented algebra's word basis.
  std::vector<Vector> arrow_images;
};

// Minimal relations of the algebra's own quiver, i.e. generators of the kernel
// of kQ -> A modulo (arrow ideal * kernel + kernel * arrow ideal).
Presentation present_by_quiver(const AlgebraPtr& a, std::size_t cap = 30);

// Vertex permutation p with cartan(a)[p[i]][p[j]] = cartan(b)[i][j], if any.
std::optional<std::vector<std::size_t>> cartan_match(const FDAlgebra& a, const FDAlgebra& b);

}  // namespace qfg
