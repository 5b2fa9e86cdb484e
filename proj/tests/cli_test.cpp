// End-to-end checks of the installed command-line interface: payloads on
// stdout, diagnostics on stderr, and the exit-code contract
// (0 ok, 1 usage, 2 invalid input, 3 internal violation).

#include <doctest.h>

#include <array>
#include <cstdio>
#include <fstream>
#include <string>

#include <json.hpp>

#ifndef ORDU_CLI_PATH
#error "ORDU_CLI_PATH must point at the built binary"
#endif

namespace {

struct run_result {
	int exit_code = -1;
	std::string out;
};

run_result run_cli(const std::string& args) {
	run_result r;
	std::string cmd = std::string(ORDU_CLI_PATH) + " " + args + " 2>/dev/null";
	FILE* pipe = popen(cmd.c_str(), "r");
	REQUIRE(pipe != nullptr);
	std::array<char, 4096> buf{};
	std::size_t n;
	while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), n);
	int status = pclose(pipe);
	r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
	return r;
}

} // namespace

TEST_CASE("order command") {
	run_result r = run_cli("order \"T(7,8)\"");
	CHECK(r.exit_code == 0);
	auto doc = nlohmann::json::parse(r.out);
	CHECK(doc["order_u"] == 3);
	CHECK(doc["homology"]["torsion_exponents"] == nlohmann::json::array({1, 1, 2, 2, 3, 3}));
}

TEST_CASE("invariants command") {
	run_result r = run_cli("invariants \"T(5,6) # mirror(T(3,4))\"");
	CHECK(r.exit_code == 0);
	auto doc = nlohmann::json::parse(r.out);
	CHECK(doc["order_u"] == 2);
	CHECK(doc["signature"] == -10);
	CHECK(doc["upsilon"] == -4);
	CHECK(doc["gamma4_lower"] == 1);
}

TEST_CASE("gradedroot command") {
	run_result ascii = run_cli("gradedroot \"T(3,4)\"");
	CHECK(ascii.exit_code == 0);
	CHECK(ascii.out.find("tower") != std::string::npos);

	run_result js = run_cli("gradedroot \"T(3,4)\" --format json");
	CHECK(js.exit_code == 0);
	CHECK(nlohmann::json::parse(js.out)["branch_exponents"] == nlohmann::json::array({1, 1}));

	run_result svg = run_cli("gradedroot \"T(3,4)\" --format svg");
	CHECK(svg.exit_code == 0);
	CHECK(svg.out.rfind("<svg", 0) == 0);
}

TEST_CASE("cobordism command") {
	std::string path = std::string(std::tmpnam(nullptr)) + "-cli-moves.txt";
	{
		std::ofstream out(path);
		out << "from: T(3,4)\nto: U\nband nonorientable\n";
	}
	run_result r = run_cli("cobordism " + path);
	CHECK(r.exit_code == 0);
	auto doc = nlohmann::json::parse(r.out);
	CHECK(doc["torsion_order_upper_bound"] == 1);
	CHECK(doc["wong_bound_check"] == true);
	std::remove(path.c_str());

	std::string bad = std::string(std::tmpnam(nullptr)) + "-cli-bad.txt";
	{
		std::ofstream out(bad);
		out << "birth\n";
	}
	CHECK(run_cli("cobordism " + bad).exit_code == 2);
	std::remove(bad.c_str());
}

TEST_CASE("family command") {
	run_result r = run_cli("family --gamma 1 --m 2");
	CHECK(r.exit_code == 0);
	auto doc = nlohmann::json::parse(r.out);
	CHECK(doc["order_u"] == 2);
	CHECK(doc["dur_upper"] == 3);
}

TEST_CASE("exit codes") {
	CHECK(run_cli("order \"T(2,4)\"").exit_code == 2);   // invalid input
	CHECK(run_cli("order").exit_code == 1);              // usage: missing argument
	CHECK(run_cli("nonsense").exit_code == 1);           // usage: unknown command
	CHECK(run_cli("family --gamma 0 --m 1").exit_code == 2);
}

TEST_CASE("determinism across runs") {
	run_result a = run_cli("order \"T(5,6) # mirror(T(3,4))\"");
	run_result b = run_cli("order \"T(5,6) # mirror(T(3,4))\"");
	CHECK(a.out == b.out);
}

TEST_CASE("selftest") {
	run_result ok = run_cli("selftest --max-n 6");
	CHECK(ok.exit_code == 0);
	CHECK(ok.out.find("FAIL") == std::string::npos);

	// negative control: the corruption hook must trip the battery
	run_result bad = run_cli("selftest --max-n 6 --inject-gap-corruption");
	CHECK(bad.exit_code == 3);
	CHECK(bad.out.find("FAIL") != std::string::npos);
}
