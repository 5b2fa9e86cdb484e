#include "ordu/cobordism.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "ordu/errors.hpp"

namespace ordu {

const char* to_string(move_kind m) {
	switch (m) {
	case move_kind::birth: return "birth";
	case move_kind::death: return "death";
	case move_kind::band_merge: return "band merge";
	case move_kind::band_split: return "band split";
	case move_kind::band_nonorientable: return "band nonorientable";
	}
	throw internal_error("unknown move kind");
}

namespace {

std::int64_t component_delta(move_kind m) {
	switch (m) {
	case move_kind::birth: return 1;
	case move_kind::death: return -1;
	case move_kind::band_merge: return -1;
	case move_kind::band_split: return 1;
	case move_kind::band_nonorientable: return 0;
	}
	throw internal_error("unknown move kind");
}

bool is_band(move_kind m) {
	return m == move_kind::band_merge || m == move_kind::band_split ||
	       m == move_kind::band_nonorientable;
}

} // namespace

std::vector<std::int64_t> validate(const move_sequence& s, std::int64_t start_components) {
	if (start_components < 1)
		throw invalid_input_error("a link has at least one component");
	std::vector<std::int64_t> trace;
	trace.reserve(s.moves.size() + 1);
	trace.push_back(start_components);
	std::int64_t n = start_components;
	for (std::size_t i = 0; i < s.moves.size(); ++i) {
		n += component_delta(s.moves[i]);
		if (n < 1)
			throw invalid_input_error("component count drops below 1 at move " +
			                          std::to_string(i) + " (" + to_string(s.moves[i]) + ")");
		trace.push_back(n);
	}
	return trace;
}

cobordism_stats stats(const move_sequence& s) {
	std::vector<std::int64_t> trace = validate(s, 1);
	if (trace.back() != 1)
		throw invalid_input_error("endpoints are not knots: trace ends at " +
		                          std::to_string(trace.back()) + " components");
	cobordism_stats st;
	for (move_kind m : s.moves) {
		switch (m) {
		case move_kind::birth: ++st.births; break;
		case move_kind::death: ++st.deaths; break;
		default:
			++st.bands;
			if (m == move_kind::band_nonorientable) st.nonorientable = true;
		}
	}
	st.chi = st.births - st.bands + st.deaths;
	st.gamma = -st.chi;
	st.norm = std::max(st.births, st.deaths) - st.chi;
	return st;
}

move_sequence normalize(const move_sequence& s) {
	cobordism_stats st = stats(s);
	if (!st.nonorientable)
		throw invalid_input_error("no non-orientable band: nothing to normalize");

	// shape: m births, m merges, (b - m - M - 1) orientable bands returning
	// the trace to 1, one non-orientable band, M splits, M deaths
	std::int64_t middle = st.bands - st.births - st.deaths - 1;
	if (middle < 0 || middle % 2 != 0)
		throw invalid_input_error(
		    "no trace-feasible normal form with counts m=" + std::to_string(st.births) +
		    " b=" + std::to_string(st.bands) + " M=" + std::to_string(st.deaths));

	move_sequence out;
	out.from = s.from;
	out.to = s.to;
	out.moves.reserve(s.moves.size());
	for (std::int64_t i = 0; i < st.births; ++i) out.moves.push_back(move_kind::birth);
	for (std::int64_t i = 0; i < st.births; ++i) out.moves.push_back(move_kind::band_merge);
	// lexicographically first feasible arrangement: a merge is impossible at
	// one component, so the block alternates split, merge, split, merge, ...
	for (std::int64_t i = 0; i < middle / 2; ++i) {
		out.moves.push_back(move_kind::band_split);
		out.moves.push_back(move_kind::band_merge);
	}
	out.moves.push_back(move_kind::band_nonorientable);
	for (std::int64_t i = 0; i < st.deaths; ++i) out.moves.push_back(move_kind::band_split);
	for (std::int64_t i = 0; i < st.deaths; ++i) out.moves.push_back(move_kind::death);

	cobordism_stats check = stats(out);
	if (check.births != st.births || check.bands != st.bands || check.deaths != st.deaths)
		throw internal_error("normalize changed the move counts");
	return out;
}

std::int64_t torsion_order_upper_bound(unsigned order_target, const cobordism_stats& st) {
	return std::max<std::int64_t>(order_target, st.deaths) + st.gamma;
}

unsigned min_local_minima(const knot_expr& k, unsigned gamma) {
	std::int64_t v = static_cast<std::int64_t>(order_u(k)) - gamma + 1;
	return v < 0 ? 0u : static_cast<unsigned>(v);
}

unsigned dur_lower_bound(const knot_expr& k1, const knot_expr& k2) {
	std::int64_t a = order_u(k1), b = order_u(k2);
	return static_cast<unsigned>(a > b ? a - b : b - a);
}

unsigned ulb_lower_bound(const knot_expr& k) { return order_u(k); }

bool wong_bound_check(const knot_expr& k1, const knot_expr& k2, const cobordism_stats& st) {
	std::int64_t a = order_u(k1), b = order_u(k2);
	std::int64_t diff = a > b ? a - b : b - a;
	return diff <= st.births + st.bands + st.deaths;
}

move_sequence batson_sequence(unsigned r, unsigned s) {
	if (s < 1 || r <= s)
		throw invalid_input_error("band construction needs r > s >= 1");
	move_sequence out;
	out.moves.assign(r - s, move_kind::band_nonorientable);
	out.from = knot_expr::torus(2 * static_cast<int>(r) - 1, 2 * static_cast<int>(r));
	out.to = knot_expr::torus(2 * static_cast<int>(s) - 1, 2 * static_cast<int>(s));
	return out;
}

family_bound_report family_report(unsigned gamma, unsigned m) {
	if (gamma < 1 || m < 1)
		throw invalid_input_error("family report needs gamma >= 1 and m >= 1");
	if (gamma + m > 12)
		throw invalid_input_error("family report limited to gamma + m <= 12");

	family_bound_report rep;
	rep.gamma = gamma;
	rep.m = m;
	rep.r = gamma + m;
	rep.s = m;
	knot_expr positive = knot_expr::torus(2 * static_cast<int>(rep.r) - 1,
	                                      2 * static_cast<int>(rep.r));
	knot_expr negative = knot_expr::mirrored(knot_expr::torus(
	    2 * static_cast<int>(rep.s) - 1, 2 * static_cast<int>(rep.s)));
	rep.knot = knot_expr::connected_sum(positive, negative);

	rep.order_u = order_u(rep.knot); // homology path, cross-checked inside
	rep.gamma4_lower = gamma4_lower_bound(rep.knot);
	rep.min_minima = min_local_minima(rep.knot, gamma);

	// the band construction realizes the non-orientable genus bound exactly
	cobordism_stats band_stats = stats(batson_sequence(rep.r, rep.s));
	rep.d_u = band_stats.gamma;

	rep.dur_lower = gamma + m;
	if (m >= 2) {
		rep.dur_upper = gamma + 2 * m - 2;
	} else {
		rep.flags.push_back("m=1 boundary case: refined-distance upper bound suppressed");
	}

	rep.provenance = {
	    {"order_u", "torsion order of unoriented knot Floer homology"},
	    {"gamma4_lower", "upsilon minus half signature, clamped at 0"},
	    {"d_u", "non-orientable band construction meeting the genus bound"},
	    {"min_minima", "torsion-order bound on local minima at genus gamma"},
	    {"dur_lower", "minimum-minima refinement of the torsion-order bound"},
	    {"dur_upper", "claimed, not constructed"},
	};
	return rep;
}

/* **************************************************************************
 * move files
 * *************************************************************************/

namespace {

std::string strip(const std::string& s) {
	std::size_t b = s.find_first_not_of(" \t\r\n");
	if (b == std::string::npos) return "";
	std::size_t e = s.find_last_not_of(" \t\r\n");
	return s.substr(b, e - b + 1);
}

} // namespace

move_sequence parse_move_file(std::istream& in) {
	move_sequence out;
	std::string raw;
	std::size_t lineno = 0;
	bool moves_started = false;
	while (std::getline(in, raw)) {
		++lineno;
		std::string line = strip(raw);
		if (line.empty() || line[0] == '#') continue; // full-line comments only:
		// '#' inside a header is the connected-sum operator

		auto fail = [&](const std::string& msg) {
			throw invalid_input_error("move file line " + std::to_string(lineno) + ": " + msg);
		};

		if (line.rfind("from:", 0) == 0 || line.rfind("to:", 0) == 0) {
			bool is_from = line[0] == 'f';
			if (moves_started) fail("endpoint headers must precede the moves");
			auto& slot = is_from ? out.from : out.to;
			if (slot) fail(std::string("duplicate '") + (is_from ? "from" : "to") + "' header");
			slot = parse_knot(line.substr(is_from ? 5 : 3));
			continue;
		}

		if (line == "birth")
			out.moves.push_back(move_kind::birth);
		else if (line == "death")
			out.moves.push_back(move_kind::death);
		else if (line == "band merge")
			out.moves.push_back(move_kind::band_merge);
		else if (line == "band split")
			out.moves.push_back(move_kind::band_split);
		else if (line == "band nonorientable")
			out.moves.push_back(move_kind::band_nonorientable);
		else
			fail("unknown move '" + line + "'");
		moves_started = true;
	}
	return out;
}

move_sequence read_move_file(const std::string& path) {
	std::ifstream in(path);
	if (!in) throw invalid_input_error("cannot open move file: " + path);
	return parse_move_file(in);
}

} // namespace ordu
