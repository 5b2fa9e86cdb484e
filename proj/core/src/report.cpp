#include "ordu/report.hpp"

#include <algorithm>
#include <sstream>

#include <json.hpp>

#include "ordu/cobordism.hpp"
#include "ordu/errors.hpp"
#include "ordu/knots.hpp"
#include "ordu/staircase.hpp"
#include "ordu/version.hpp"

namespace ordu {

namespace {

using json = nlohmann::json; // object keys are sorted, which keeps output canonical

std::string dump(const json& doc) { return doc.dump(2) + "\n"; }

json homology_json(const homology_decomposition& h) {
	json out;
	out["free_rank"] = h.free_rank;
	out["torsion_exponents"] = h.torsion_exponents;
	return out;
}

json base_document(const char* command, const std::string& input, const knot_expr& k) {
	json doc;
	doc["command"] = command;
	doc["input"] = input;
	doc["knot"] = k.to_string();
	doc["version"] = version;
	return doc;
}

/* ---- graded-root display helpers -------------------------------------- */

// Heights of a zigzag profile whose local maxima are the leaves of the
// graded root and whose local minima are the merge nodes. For staircases
// the exact relative gradings are used; otherwise a schematic profile is
// synthesized from the branch multiset.
struct root_profile {
	std::vector<int> heights; // leaf, merge, leaf, merge, ..., leaf
	bool exact = false;       // true when heights are relative gradings
};

root_profile staircase_profile(const gap_sequence& gaps) {
	root_profile p;
	p.exact = true;
	p.heights = staircase_spec::from_gaps(gaps).gradings;
	return p;
}

root_profile schematic_profile(const std::vector<unsigned>& branches) {
	// tower leaf above everything, then one valley/leaf pair per branch,
	// valleys descending so each branch merges straight into the tower
	std::vector<unsigned> desc = branches;
	std::sort(desc.rbegin(), desc.rend());
	int top = desc.empty() ? 0 : static_cast<int>(desc.front()) + 1;
	root_profile p;
	p.heights.push_back(top);
	for (std::size_t i = 0; i < desc.size(); ++i) {
		int valley = -static_cast<int>(i + 1);
		p.heights.push_back(valley);
		p.heights.push_back(valley + static_cast<int>(desc[i]));
	}
	return p;
}

bool is_pure_staircase(const knot_expr& k) {
	return std::holds_alternative<knot_expr::unknot_node>(k.node()) ||
	       std::holds_alternative<knot_expr::torus_node>(k.node());
}

gap_sequence gaps_of_leaf(const knot_expr& k) {
	if (const auto* t = std::get_if<knot_expr::torus_node>(&k.node()))
		return gaps_of(lspace_exponents(torus_alexander(t->p, t->q)));
	return gap_sequence{};
}

std::string render_ascii(const knot_expr& k, const graded_root_summary& root) {
	std::ostringstream out;
	out << "graded root of " << k.to_string() << "\n";
	out << "tower: 1 infinite branch\n";
	std::vector<unsigned> desc = root.branch_exponents;
	std::sort(desc.rbegin(), desc.rend());
	for (unsigned e : desc) out << "branch: U^" << e << "\n";
	return out.str();
}

std::string render_svg(const knot_expr& k, const root_profile& profile) {
	const int unit = 18, margin = 30, radius = 3;
	const auto& h = profile.heights;
	int hmax = *std::max_element(h.begin(), h.end());
	int hmin = *std::min_element(h.begin(), h.end());
	int tail = 3; // tower dots drawn below the lowest merge
	int width = 2 * margin + static_cast<int>(h.size() - 1) * unit;
	int height = 2 * margin + (hmax - hmin + tail) * unit;

	auto X = [&](double i) { return margin + i * unit; };
	auto Y = [&](double chi) { return margin + (hmax - chi) * unit; };

	std::ostringstream out;
	out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\""
	    << height << "\" viewBox=\"0 0 " << width << " " << height << "\">\n";
	out << "  <title>graded root of " << k.to_string() << "</title>\n";

	// dots sit at every integer grading along each profile segment
	for (std::size_t i = 0; i + 1 < h.size(); ++i) {
		int a = h[i], b = h[i + 1];
		int steps = std::abs(a - b);
		out << "  <line x1=\"" << X(i) << "\" y1=\"" << Y(a) << "\" x2=\"" << X(i + 1)
		    << "\" y2=\"" << Y(b) << "\" stroke=\"black\"/>\n";
		for (int s = 0; s <= steps; ++s) {
			double frac = steps == 0 ? 0.0 : static_cast<double>(s) / steps;
			int chi = a + (b > a ? s : -s);
			out << "  <circle cx=\"" << X(i + frac) << "\" cy=\"" << Y(chi) << "\" r=\""
			    << radius << "\"/>\n";
		}
	}

	// the infinite tower continues below the deepest merge
	std::size_t low = 0;
	for (std::size_t i = 0; i < h.size(); ++i)
		if (h[i] < h[low]) low = i;
	out << "  <line x1=\"" << X(low) << "\" y1=\"" << Y(h[low]) << "\" x2=\"" << X(low)
	    << "\" y2=\"" << Y(hmin - tail) << "\" stroke=\"black\"/>\n";
	for (int s = 1; s <= tail; ++s)
		out << "  <circle cx=\"" << X(low) << "\" cy=\"" << Y(hmin - s) << "\" r=\"" << radius
		    << "\"/>\n";
	out << "  <text x=\"" << X(low) - 4 << "\" y=\"" << Y(hmin - tail) + unit
	    << "\">...</text>\n";
	out << "</svg>\n";
	return out.str();
}

/* ---- move-sequence helpers --------------------------------------------- */

json moves_json(const std::vector<move_kind>& moves) {
	json arr = json::array();
	for (move_kind m : moves) arr.push_back(to_string(m));
	return arr;
}

} // namespace

std::string cmd_order(const std::string& expr) {
	knot_expr k = parse_knot(expr);
	homology_decomposition h = homology(complex_of(k));
	json doc = base_document("order", expr, k);
	doc["order_u"] = order_u(k);
	doc["homology"] = homology_json(h);
	return dump(doc);
}

std::string cmd_invariants(const std::string& expr) {
	knot_expr k = parse_knot(expr);
	invariant_report rep = invariants_of(k);
	json doc = base_document("invariants", expr, k);
	doc["order_u"] = rep.order_u;
	doc["signature"] = rep.signature;
	doc["upsilon"] = rep.upsilon ? json(*rep.upsilon) : json(nullptr);
	doc["gamma4_lower"] = rep.gamma4_lower ? json(*rep.gamma4_lower) : json(nullptr);
	doc["homology"] = homology_json(rep.homology);
	return dump(doc);
}

std::string cmd_gradedroot(const std::string& expr, root_format format) {
	knot_expr k = parse_knot(expr);
	graded_root_summary root = summarize_graded_root(homology(complex_of(k)));

	if (format == root_format::ascii) return render_ascii(k, root);

	bool pure = is_pure_staircase(k);
	if (format == root_format::svg) {
		root_profile profile =
		    pure ? staircase_profile(gaps_of_leaf(k)) : schematic_profile(root.branch_exponents);
		return render_svg(k, profile);
	}

	json doc = base_document("gradedroot", expr, k);
	doc["tower_count"] = root.tower_count;
	doc["branch_exponents"] = root.branch_exponents;
	if (pure) {
		// relative gradings anchored at chi(y_0) = 0: even generators are
		// the leaves, odd generators the merge nodes
		staircase_spec spec = staircase_spec::from_gaps(gaps_of_leaf(k));
		json stair;
		stair["gaps"] = spec.gaps.gaps();
		json leaves = json::array(), merges = json::array();
		for (std::size_t i = 0; i < spec.gradings.size(); ++i)
			(i % 2 == 0 ? leaves : merges).push_back(spec.gradings[i]);
		stair["leaf_heights"] = leaves;
		stair["merge_heights"] = merges;
		doc["staircase"] = stair;
	}
	return dump(doc);
}

std::string cmd_cobordism(const std::string& path) {
	move_sequence seq = read_move_file(path);
	std::vector<std::int64_t> trace = validate(seq, 1);
	cobordism_stats st = stats(seq);

	json doc;
	doc["command"] = "cobordism";
	doc["input"] = path;
	doc["version"] = version;
	doc["moves"] = moves_json(seq.moves);
	doc["trace"] = trace;
	json stats_json;
	stats_json["m"] = st.births;
	stats_json["b"] = st.bands;
	stats_json["M"] = st.deaths;
	stats_json["chi"] = st.chi;
	stats_json["gamma"] = st.gamma;
	stats_json["norm"] = st.norm;
	stats_json["nonorientable"] = st.nonorientable;
	doc["stats"] = stats_json;

	try {
		doc["normalized"] = moves_json(normalize(seq).moves);
	} catch (const invalid_input_error& e) {
		doc["normalized"] = nullptr;
		doc["normalize_error"] = e.what();
	}

	doc["from"] = seq.from ? json(seq.from->to_string()) : json(nullptr);
	doc["to"] = seq.to ? json(seq.to->to_string()) : json(nullptr);
	if (seq.from && seq.to) {
		unsigned from_order = order_u(*seq.from);
		unsigned to_order = order_u(*seq.to);
		doc["order_u_from"] = from_order;
		doc["order_u_to"] = to_order;
		doc["torsion_order_upper_bound"] = torsion_order_upper_bound(to_order, st);
		doc["wong_bound_check"] = wong_bound_check(*seq.from, *seq.to, st);
		doc["dur_lower_bound"] = dur_lower_bound(*seq.from, *seq.to);
	}
	return dump(doc);
}

std::string cmd_family(unsigned gamma, unsigned m) {
	family_bound_report rep = family_report(gamma, m);
	json doc;
	doc["command"] = "family";
	doc["version"] = version;
	doc["gamma"] = rep.gamma;
	doc["m"] = rep.m;
	doc["r"] = rep.r;
	doc["s"] = rep.s;
	doc["knot"] = rep.knot.to_string();
	doc["order_u"] = rep.order_u;
	doc["gamma4"] = rep.gamma4_lower;
	doc["d_u"] = rep.d_u;
	doc["min_minima"] = rep.min_minima;
	doc["dur_lower"] = rep.dur_lower;
	doc["dur_upper"] = rep.dur_upper ? json(*rep.dur_upper) : json(nullptr);
	doc["flags"] = rep.flags;
	json prov;
	for (const auto& [key, label] : rep.provenance) prov[key] = label;
	doc["provenance"] = prov;
	return dump(doc);
}

} // namespace ordu
