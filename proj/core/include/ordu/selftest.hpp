#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ordu {

/* **************************************************************************
 * Built-in verification battery.
 *
 * Every computational claim the library is built on is re-derived here
 * from independent routes (closed forms vs long division, Smith normal
 * form vs minor gcds, lattice-count signatures vs an exact Seifert-matrix
 * signature, ...) and checked at exact integer tolerance.
 * *************************************************************************/

struct selftest_options {
	// upper end of the T(n,n+1) ranges in checks 1 and 2
	int max_n = 12;
	// test hook: feed a corrupted closed-form gap sequence into check 2
	bool corrupt_gap_formula = false;
};

struct check_result {
	int id = 0;
	std::string name;
	bool passed = false;
	std::string detail; // e.g. "11 cases" or the first failure
};

std::vector<check_result> run_selftest(const selftest_options& opts);

// prints one pass/fail line per check; returns true iff all passed
bool print_selftest(std::ostream& out, const std::vector<check_result>& results);

} // namespace ordu
