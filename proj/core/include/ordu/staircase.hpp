#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "ordu/fumod.hpp"
#include "ordu/laurent.hpp"

namespace ordu {

/* **************************************************************************
 * Staircase complexes of L-space knots, duals and tensor products.
 * *************************************************************************/

// Generators y_0 ... y_{2l} of a staircase together with their relative
// gradings, anchored at chi(y_0) = 0:
//   chi(y_{2k}) - chi(y_{2k+1}) = d_{2k+1},
//   chi(y_{2k+2}) - chi(y_{2k+1}) = d_{2k+2}.
struct staircase_spec {
	gap_sequence gaps;
	std::vector<std::string> labels;
	std::vector<int> gradings;

	static staircase_spec from_gaps(const gap_sequence& gaps);
};

// Two-term complex from a gap sequence: even generators in degree 0 with
// zero differential, odd generators in degree 1 with
//   d y_{2k+1} = U^{d_{2k+1}} y_{2k} + U^{d_{2k+2}} y_{2k+2}.
// Empty gaps give the rank-1 unknot complex.
chain_complex staircase_complex(const gap_sequence& gaps);

// Dual complex: degrees negated, differentials transposed, gradings negated.
chain_complex mirror_complex(const chain_complex& c);

// Tensor product over F2[U]: generator pairs, additive degree,
// d(x(x)y) = dx(x)y + x(x)dy (characteristic 2, no signs).
chain_complex tensor_complex(const chain_complex& a, const chain_complex& b);

/* **************************************************************************
 * Graded-root summaries
 * *************************************************************************/

// One infinite tower plus finite branches; branch lengths are the torsion
// exponents of the homology.
struct graded_root_summary {
	std::size_t tower_count = 0;
	std::vector<unsigned> branch_exponents; // sorted ascending
};

// Requires free rank exactly 1 (a knot complex).
graded_root_summary summarize_graded_root(const homology_decomposition& h);

} // namespace ordu
