#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "quiverfg/algebra.hpp"

namespace qfg::catalog {

// Cyclic quiver 1 -a-> 2 -b-> 3 -c-> 1 with relations bacba, cbac.
Quiver example4_quiver();
AlgebraPtr example4(Field f = Field::rationals());

// Quiver I, II, III with g : I -> II, d : II -> I, h : II -> III, t : III -> I
// and relations g*d*g, g*h, d*g*d - h*t, t*g (traversal order).
Quiver endo_quiver();
std::vector<PathExpr> endo_relations(const Quiver& q);
AlgebraPtr endo_quotient(Field f = Field::rationals());

// k[x]/(x^n).
AlgebraPtr truncated_polynomial(std::size_t n, Field f = Field::rationals());
// k[x,y]/(x^2, y^2) as a one-vertex quiver with a commutator relation.
AlgebraPtr exterior_square(Field f = Field::rationals());
// Path algebra of the linearly oriented A_n quiver 1 -> 2 -> ... -> n.
AlgebraPtr linear_path(std::size_t n, Field f = Field::rationals());
// Product of n copies of the field.
AlgebraPtr semisimple(std::size_t n, Field f = Field::rationals());
// Cyclic Nakayama algebra with the given Kupisch series (Loewy lengths of P_1..P_n,
// vertex i has an arrow to i+1 mod n).
AlgebraPtr cyclic_nakayama(const std::vector<std::size_t>& kupisch, Field f = Field::rationals());
// Upper triangular 2x2 matrices: path algebra of 1 -> 2.
AlgebraPtr triangular2(Field f = Field::rationals());

std::vector<std::string> names();
AlgebraPtr by_name(const std::string& name, Field f = Field::rationals());

}  // namespace qfg::catalog
