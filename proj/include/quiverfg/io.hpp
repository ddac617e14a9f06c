#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "quiverfg/endo.hpp"

namespace qfg {

// Algebra file: line oriented, '#' starts a comment.
//   field = Q | Fp(<prime>)
//   vertices = <label> <label> ...
//   arrow <label> : <vertex> -> <vertex>
//   relation <path expression>      (traversal order: a*b traverses a first)
//   cap = <n>                       (optional closure bound, default 30)
// See docs/file-formats.md for the full grammar.
struct AlgebraSpec {
  Field field;
  Quiver quiver;
  std::vector<PathExpr> relations;
  std::size_t cap = 30;
};

AlgebraSpec parse_algebra_spec(std::string_view text, std::optional<Field> field = std::nullopt);
AlgebraPtr parse_algebra(std::string_view text, std::optional<Field> field = std::nullopt);
AlgebraPtr load_algebra(const std::string& path, std::optional<Field> field = std::nullopt);
std::string write_algebra(const AlgebraSpec& spec);
// Algebra file of a presentation, loadable with parse_algebra.
std::string write_presentation(const Presentation& p, const Field& field);

// Module file:
//   dims = <d_1> ... <d_n>              (vertex order)
//   action <arrow> = <row> ; <row> ...  (dims[target] x dims[source]; missing arrows act by 0)
FDModule parse_module(const AlgebraPtr& a, std::string_view text);
FDModule load_module(const AlgebraPtr& a, const std::string& path);
std::string write_module(const FDModule& m);

// Module reference: '+'-separated terms, each an optional multiplicity
// followed by P<v>, S<v>, I<v> (vertex label, optionally in parentheses),
// A for the regular module, or @<path> for a module file.
FDModule module_ref(const AlgebraPtr& a, std::string_view ref);

Field parse_field(std::string_view text);

}  // namespace qfg
