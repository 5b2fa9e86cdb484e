#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "ordu/knots.hpp"

namespace ordu {

/* **************************************************************************
 * Combinatorial Morse-move model of knot cobordisms.
 *
 * Only move counts and the component trace are modelled; embedded isotopy,
 * framings and attaching regions are not. Orientability of a band is
 * declared, not inferred.
 * *************************************************************************/

enum class move_kind {
	birth,              // new split unknot:      components +1
	death,              // cap off a component:   components -1
	band_merge,         // band joining two components: -1
	band_split,         // orientable self-band:  +1
	band_nonorientable, // non-orientable self-band: 0
};

const char* to_string(move_kind m); // the move-file spelling

struct move_sequence {
	std::vector<move_kind> moves;
	// declared endpoints (metadata for the bound evaluators)
	std::optional<knot_expr> from, to;
};

struct cobordism_stats {
	std::int64_t births = 0;  // m, local minima
	std::int64_t bands = 0;   // b, saddles
	std::int64_t deaths = 0;  // M, local maxima
	std::int64_t chi = 0;     // m - b + M
	std::int64_t gamma = 0;   // -chi, non-orientable genus for knot cobordisms
	std::int64_t norm = 0;    // max(m, M) - chi
	bool nonorientable = false;
};

// Component-count trace, starting value included. Fails (naming the move
// index) if the count would ever drop below 1.
std::vector<std::int64_t> validate(const move_sequence& s, std::int64_t start_components);

// Counts and derived quantities. Requires knot endpoints: the trace from
// one component must end at one component.
cobordism_stats stats(const move_sequence& s);

// Count-level normal form: m births, m merge bands, b-(m+M+1) orientable
// bands, exactly one non-orientable band, M split bands, M deaths. Counts
// (m, b, M) are preserved; extra non-orientable bands are converted to
// orientable ones in the middle block. Fails when the input is orientable
// or when no trace-feasible sequence of that shape exists.
move_sequence normalize(const move_sequence& s);

/* **************************************************************************
 * Bounds
 * *************************************************************************/

// max(order_target, M) + gamma: upper bound for the torsion order at the
// source of a cobordism with the given stats onto a knot of the given order.
std::int64_t torsion_order_upper_bound(unsigned order_target, const cobordism_stats& st);

// Any surface in the 4-ball bounded by k with non-orientable genus gamma
// has at least max(0, order_u(k) - gamma + 1) local minima.
unsigned min_local_minima(const knot_expr& k, unsigned gamma);

// |order_u(k1) - order_u(k2)|: lower bound for the refined unorientable
// cobordism distance.
unsigned dur_lower_bound(const knot_expr& k1, const knot_expr& k2);

// order_u(k): lower bound for the unoriented band-unlinking number.
unsigned ulb_lower_bound(const knot_expr& k);

// |order_u(k1) - order_u(k2)| <= m + b + M. A violation flags the declared
// sequence as inconsistent; it never refutes anything.
bool wong_bound_check(const knot_expr& k1, const knot_expr& k2, const cobordism_stats& st);

// r - s non-orientable self-bands from T(2r-1,2r) to T(2s-1,2s), counting
// level only. Requires r > s >= 1.
move_sequence batson_sequence(unsigned r, unsigned s);

/* **************************************************************************
 * The K_{gamma,m} family report
 * *************************************************************************/

struct family_bound_report {
	unsigned gamma = 0, m = 0;
	unsigned r = 0, s = 0; // r = gamma + m, s = m
	knot_expr knot = knot_expr::unknot();

	unsigned order_u = 0;        // = gamma + m - 1, via the homology path
	std::int64_t gamma4_lower = 0; // = gamma
	std::int64_t d_u = 0;          // = gamma: band construction meets the bound
	unsigned min_minima = 0;       // = m
	unsigned dur_lower = 0;        // = gamma + m
	std::optional<unsigned> dur_upper; // gamma + 2m - 2; suppressed when m = 1
	std::vector<std::string> flags;
	// provenance label per reported value
	std::vector<std::pair<std::string, std::string>> provenance;
};

// Requires gamma >= 1, m >= 1 (and gamma + m small enough to compute).
family_bound_report family_report(unsigned gamma, unsigned m);

/* **************************************************************************
 * Move files
 *
 * One item per line, lowercase: optional "from: <expr>" / "to: <expr>"
 * headers, then moves "birth", "death", "band merge", "band split",
 * "band nonorientable". Blank lines, and lines whose first non-blank
 * character is '#', are ignored.
 * *************************************************************************/

move_sequence parse_move_file(std::istream& in);
move_sequence read_move_file(const std::string& path);

} // namespace ordu
