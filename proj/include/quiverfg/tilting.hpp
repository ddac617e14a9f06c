#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "quiverfg/homology.hpp"

namespace qfg {

// Minimal left add(M)-approximation f : X -> E.  E is the direct sum of
// copies[i] copies of summands[i], in that order.
struct Approximation {
  ModuleMap map;
  std::vector<FDModule> summands;
  std::vector<std::size_t> copies;
};

Approximation left_add_approximation(const FDModule& x, const FDModule& m, std::uint64_t seed = 1);

// Whether g : X -> Y factors as h o f.
bool factors_through(const ModuleMap& f, const ModuleMap& g);

struct TiltingReport {
  ProjDimResult axiom_i;
  std::size_t axiom_ii_checked = 0;            // Ext^n(T, T) checked for 1 <= n <= this
  std::optional<std::size_t> axiom_ii_failure;  // first degree with Ext^n(T, T) != 0
  bool axiom_iii = false;
  std::vector<FDModule> coresolution;  // T_0, ..., T_m with 0 -> A -> T_0 -> ... -> T_m -> 0
  std::string axiom_iii_note;
  std::size_t summands = 0;  // nonisomorphic indecomposable summands of T
  Verdict verdict = Verdict::Unknown;
};

TiltingReport check_tilting(const FDModule& t, std::size_t cap = 10, std::uint64_t seed = 1);

// Axioms (i) and (ii) hold and T has n - 1 nonisomorphic summands.
bool is_almost_complete(const FDModule& t, std::size_t cap = 20, std::uint64_t seed = 1);

struct Mutation {
  FDModule complement;  // Coker f
  Approximation approximation;
};

// Replaces the complement x of the almost complete module m by Coker of its
// left add(m)-approximation.
Mutation mutate_complement(const FDModule& m, const FDModule& x, std::uint64_t seed = 1);

}  // namespace qfg
