#pragma once

#include <stdexcept>
#include <string>

namespace ordu {

// Raised on malformed user input: bad expressions, infeasible move
// sequences, out-of-range parameters. Maps to exit code 2 in the CLI.
struct invalid_input_error : std::runtime_error {
	explicit invalid_input_error(const std::string& what) : std::runtime_error(what) {}
};

// Raised when a cross-check inside the library fails (two computation
// paths disagree, a transform does not verify, ...). Maps to exit code 3.
struct internal_error : std::logic_error {
	explicit internal_error(const std::string& what) : std::logic_error(what) {}
};

} // namespace ordu
