// Command-line front end: batch calculator for torsion orders of unoriented
// knot Floer homology and the cobordism bounds derived from them.
//
// Exit codes: 0 success, 1 usage error, 2 invalid input, 3 internal
// invariant violation.

#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "ordu/errors.hpp"
#include "ordu/report.hpp"
#include "ordu/selftest.hpp"
#include "ordu/version.hpp"

namespace {

constexpr int exit_ok = 0;
constexpr int exit_usage = 1;
constexpr int exit_invalid_input = 2;
constexpr int exit_internal = 3;

} // namespace

int main(int argc, char** argv) {
	CLI::App app{"torsion orders of unoriented knot Floer homology and "
	             "non-orientable cobordism bounds"};
	app.set_version_flag("--version", ordu::version);
	app.require_subcommand(1);

	std::string expr;
	auto* order = app.add_subcommand("order", "torsion order and homology of a knot expression");
	order->add_option("expr", expr, "knot expression, e.g. \"T(5,6) # mirror(T(3,4))\"")
	    ->required();

	auto* invariants =
	    app.add_subcommand("invariants", "torsion order, signature, upsilon and the "
	                                     "non-orientable genus bound");
	invariants->add_option("expr", expr, "knot expression")->required();

	std::string format = "ascii";
	auto* gradedroot = app.add_subcommand("gradedroot", "graded root of the knot's homology");
	gradedroot->add_option("expr", expr, "knot expression")->required();
	gradedroot->add_option("--format", format, "ascii, json or svg")
	    ->check(CLI::IsMember({"ascii", "json", "svg"}));

	std::string moves_path;
	auto* cobordism =
	    app.add_subcommand("cobordism", "validate a move file and evaluate the bounds");
	cobordism->add_option("file", moves_path, "move file")->required();

	unsigned gamma = 0, m = 0;
	auto* family = app.add_subcommand("family", "bound report for the knot K_{gamma,m}");
	family->add_option("--gamma", gamma, "non-orientable genus parameter (>= 1)")->required();
	family->add_option("--m", m, "minima parameter (>= 1)")->required();

	ordu::selftest_options selftest_opts;
	auto* selftest = app.add_subcommand("selftest", "run the built-in verification battery");
	selftest->add_option("--max-n", selftest_opts.max_n,
	                     "upper end of the T(n,n+1) ranges (default 12)")
	    ->check(CLI::Range(2, 40));
	selftest
	    ->add_flag("--inject-gap-corruption", selftest_opts.corrupt_gap_formula,
	               "test hook: corrupt the closed-form gap sequence")
	    ->group("");

	try {
		app.parse(argc, argv);
	} catch (const CLI::CallForHelp& e) {
		return app.exit(e);
	} catch (const CLI::CallForVersion& e) {
		return app.exit(e);
	} catch (const CLI::ParseError& e) {
		app.exit(e);
		return exit_usage;
	}

	try {
		if (order->parsed()) {
			std::cout << ordu::cmd_order(expr);
		} else if (invariants->parsed()) {
			std::cout << ordu::cmd_invariants(expr);
		} else if (gradedroot->parsed()) {
			ordu::root_format f = format == "json"  ? ordu::root_format::json
			                      : format == "svg" ? ordu::root_format::svg
			                                        : ordu::root_format::ascii;
			std::cout << ordu::cmd_gradedroot(expr, f);
		} else if (cobordism->parsed()) {
			std::cout << ordu::cmd_cobordism(moves_path);
		} else if (family->parsed()) {
			std::cout << ordu::cmd_family(gamma, m);
		} else if (selftest->parsed()) {
			auto results = ordu::run_selftest(selftest_opts);
			bool ok = ordu::print_selftest(std::cout, results);
			return ok ? exit_ok : exit_internal;
		}
	} catch (const ordu::invalid_input_error& e) {
		std::cerr << "error: " << e.what() << "\n";
		return exit_invalid_input;
	} catch (const ordu::internal_error& e) {
		std::cerr << "internal invariant violation: " << e.what() << "\n";
		return exit_internal;
	}
	return exit_ok;
}
