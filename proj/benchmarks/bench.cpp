#include <benchmark/benchmark.h>

#include <random>

#include "ordu/fumod.hpp"
#include "ordu/knots.hpp"
#include "ordu/staircase.hpp"

namespace {

ordu::fu_matrix random_matrix(std::size_t n, unsigned max_deg, std::uint32_t seed) {
	std::mt19937 rng(seed);
	ordu::fu_matrix m(n, n);
	for (std::size_t i = 0; i < n; ++i)
		for (std::size_t j = 0; j < n; ++j)
			for (unsigned b = 0; b <= max_deg; ++b)
				if (rng() & 1) m.at(i, j) += ordu::upoly::power(b);
	return m;
}

void snf_random(benchmark::State& state) {
	auto m = random_matrix(static_cast<std::size_t>(state.range(0)), 6, 1234);
	for (auto _ : state) {
		auto s = ordu::smith_normal_form(m);
		benchmark::DoNotOptimize(s.rank);
	}
}
BENCHMARK(snf_random)->Arg(8)->Arg(16)->Arg(32);

void staircase_homology(benchmark::State& state) {
	auto gaps = ordu::torus_gap_formula(static_cast<int>(state.range(0)));
	for (auto _ : state) {
		auto h = ordu::homology(ordu::staircase_complex(gaps));
		benchmark::DoNotOptimize(h.free_rank);
	}
}
BENCHMARK(staircase_homology)->Arg(6)->Arg(12)->Arg(24);

void tensor_order(benchmark::State& state) {
	int r = static_cast<int>(state.range(0));
	ordu::knot_expr k = ordu::knot_expr::connected_sum(
	    ordu::knot_expr::torus(2 * r - 1, 2 * r),
	    ordu::knot_expr::mirrored(ordu::knot_expr::torus(3, 4)));
	for (auto _ : state) {
		benchmark::DoNotOptimize(ordu::order_u(k));
	}
}
BENCHMARK(tensor_order)->Arg(3)->Arg(5)->Arg(8);

void alexander(benchmark::State& state) {
	int n = static_cast<int>(state.range(0));
	for (auto _ : state) {
		auto d = ordu::torus_alexander(n, n + 1);
		benchmark::DoNotOptimize(d.terms().size());
	}
}
BENCHMARK(alexander)->Arg(12)->Arg(31);

} // namespace

BENCHMARK_MAIN();
