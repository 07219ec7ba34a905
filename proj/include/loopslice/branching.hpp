#pragma once

#include <map>
#include <vector>

#include "loopslice/multipoly.hpp"

namespace loopslice {

/// Dominant weight of GL_rank: weakly decreasing integers, possibly
/// negative.
using Weight = std::vector<long>;

/// Laurent polynomial in q with nonnegative integer coefficients:
/// exponent -> multiplicity.
using QLaurent = std::map<long, long>;

/// Multiplicity spaces of a graded restriction: GL_n highest weight ->
/// graded multiplicity.
using GradedMultiplicity = std::map<Weight, QLaurent>;

/// Schur-type character of the GL_rank irreducible with highest weight
/// lambda, in variables x1..x<rank> (iterated single-row branching;
/// negative entries handled by a determinant twist).
MultiPoly gl_character(const Weight& lambda, int rank);

/// Restriction of the GL_m irreducible to GL_n graded by the principal
/// sl2 of the complementary gl_{m-n}: specialize x_{n+j} -> q^{m-n+1-2j}
/// and peel GL_n Schur characters by lexicographic leading monomial.
GradedMultiplicity graded_restriction(const Weight& lambda, int m, int n);

/// q -> 1 totals of a graded multiplicity.
std::map<Weight, long> classical_multiplicities(const GradedMultiplicity& gm);

/// Brute-force branching oracle: enumerate the Gelfand-Tsetlin weight
/// multiset of the GL_m irreducible, restrict weights to the first n
/// coordinates, and strip highest weights greedily.
std::map<Weight, long> branching_oracle(const Weight& lambda, int m, int n);

} // namespace loopslice
