#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <variant>

#include "ordu/fumod.hpp"
#include "ordu/staircase.hpp"

namespace ordu {

/* **************************************************************************
 * Knot expressions: unknot, torus knots, mirrors and connected sums.
 *
 * Grammar (whitespace insignificant, '#' left-associative):
 *   expr := term ('#' term)*
 *   term := 'U' | 'T(' int ',' int ')' | 'mirror(' expr ')'
 * *************************************************************************/

class knot_expr {
public:
	struct unknot_node {};
	struct torus_node {
		int p, q;
	};
	struct mirror_node {
		std::shared_ptr<const knot_expr> inner;
	};
	struct sum_node {
		std::shared_ptr<const knot_expr> left, right;
	};
	using node_type = std::variant<unknot_node, torus_node, mirror_node, sum_node>;

	static knot_expr unknot();
	// requires 1 <= p < q, gcd(p,q) = 1; T(1,q) collapses to the unknot
	static knot_expr torus(int p, int q);
	static knot_expr mirrored(knot_expr inner);
	static knot_expr connected_sum(knot_expr left, knot_expr right);

	const node_type& node() const { return node_; }
	// round-trips through parse_knot
	std::string to_string() const;

private:
	explicit knot_expr(node_type n) : node_(std::move(n)) {}
	node_type node_;
};

// Recursive-descent parser; syntax errors carry the offending position.
knot_expr parse_knot(const std::string& text);

/* **************************************************************************
 * Invariants
 * *************************************************************************/

// Unoriented knot Floer complex of the expression: staircases for torus
// leaves, duals for mirrors, tensor products for connected sums.
chain_complex complex_of(const knot_expr& k);

// Torsion order of the unoriented knot Floer homology. Computed twice,
// once directly from the homology of complex_of() and once recursively
// (mirror preserves, connected sum takes the max, T(n,n+1) has order
// floor(n/2)); the two paths must agree.
unsigned order_u(const knot_expr& k);

// Knot signature. Torus leaves use the lattice point count over
// (i,j) in [1,p-1] x [1,q-1], classifying (i/p + j/q + 1/2) mod 2 into
// (0,1) vs (1,2); mirrors negate, connected sums add.
std::int64_t signature(const knot_expr& k);

// The upsilon-at-1 concordance invariant, in closed form on expressions
// built from the family T(2r-1,2r); nullopt outside it.
std::optional<std::int64_t> upsilon(const knot_expr& k);

// Lower bound for the non-orientable slice genus: upsilon - signature/2,
// clamped at 0. Requires upsilon to be defined.
std::int64_t gamma4_lower_bound(const knot_expr& k);

struct invariant_report {
	unsigned order_u = 0;
	std::int64_t signature = 0;
	std::optional<std::int64_t> upsilon;
	std::optional<std::int64_t> gamma4_lower;
	homology_decomposition homology;
};

invariant_report invariants_of(const knot_expr& k);

} // namespace ordu
