#pragma once

#include <string>

namespace ordu {

/* **************************************************************************
 * Report documents for the command-line front end.
 *
 * Every machine-readable payload is canonical JSON: keys sorted, integers
 * exact, no floating point, no timestamps. Renderings (ascii, svg) are
 * human-facing only.
 * *************************************************************************/

enum class root_format { ascii, json, svg };

// {command, input, knot, order_u, homology{free_rank, torsion_exponents}, version}
std::string cmd_order(const std::string& expr);

// adds signature, upsilon (or null), gamma4_lower (or null)
std::string cmd_invariants(const std::string& expr);

// graded root of a knot complex; json carries the branch multiset, plus
// leaf/merge heights anchored at chi(y_0) = 0 for pure staircases
std::string cmd_gradedroot(const std::string& expr, root_format format);

// validates a move file and reports trace, stats, the normal form (null
// for orientable sequences) and, when both endpoints are declared, the
// torsion-order bound, the move-count bound check and the distance bound
std::string cmd_cobordism(const std::string& path);

// JSON serialization of family_report(gamma, m)
std::string cmd_family(unsigned gamma, unsigned m);

} // namespace ordu
