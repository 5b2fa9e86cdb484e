#pragma once

// Independent oracles used to derive expected values. Everything here
// deliberately avoids the library's own computation paths: invariant
// factors come from minor gcds instead of the Smith reduction, branch
// multisets from merge-tree persistence instead of homology, signatures
// from an explicit Seifert matrix instead of the lattice count.

#include <vector>

#include "ordu/fumod.hpp"
#include "ordu/laurent.hpp"

namespace oracles {

ordu::upoly poly_gcd(ordu::upoly a, ordu::upoly b);
ordu::upoly determinant(const ordu::fu_matrix& m);

// invariant factors as gcd(k-minors) / gcd((k-1)-minors)
std::vector<ordu::upoly> invariant_factors_by_minors(const ordu::fu_matrix& m);

// rank over the fraction field, by cross-multiplied row reduction
std::size_t fraction_free_rank(const ordu::fu_matrix& m);

// torsion multiset of a tensor product from the factors' decompositions:
// each factor contributes its own torsion (tensored against the free
// part), and every torsion pair contributes min(a,b) twice (product and
// torsion product)
std::vector<unsigned> kunneth_torsion(std::size_t free_a, const std::vector<unsigned>& tors_a,
                                      std::size_t free_b, const std::vector<unsigned>& tors_b);

// branch lengths of the merge tree of a staircase grading profile
// (leaf, valley, leaf, ..., leaf); the global maximum survives as the tower
std::vector<unsigned> persistence_branches(const std::vector<int>& heights);

// exact signature of the symmetrized Seifert form of T(p,q)
long long seifert_signature(int p, int q);

} // namespace oracles
