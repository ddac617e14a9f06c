#pragma once

#include <cstddef>
#include <vector>

#include "quiverfg/homology.hpp"

namespace qfg {

// Every vertex has at most one incoming and at most one outgoing arrow.
bool is_nakayama(const FDAlgebra& a);

struct KupischSeries {
  // Loewy lengths of the indecomposable projectives, components concatenated
  // in order of their smallest vertex.  A cycle starts at the rotation giving
  // the lexicographically smallest sequence; a line starts at its source.
  std::vector<std::size_t> lengths;
  // Vertex of each entry.
  std::vector<std::size_t> vertices;
  bool cyclic = false;  // the quiver is a single oriented cycle
};

KupischSeries admissible_sequence(const FDAlgebra& a);

struct NakayamaCertificate {
  Verdict verdict = Verdict::Unknown;
  GorensteinResult gorenstein;
};

// (Fg) holds for a Nakayama algebra exactly when it is Gorenstein.
NakayamaCertificate fg_certificate_nakayama(const AlgebraPtr& a, std::size_t cap = 20);

}  // namespace qfg
