#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "ordu/errors.hpp"
#include "ordu/fumod.hpp"

using namespace ordu;

namespace {

upoly from_bits(unsigned bits) {
	upoly p;
	for (unsigned b = 0; bits >> b; ++b)
		if (bits >> b & 1) p += upoly::power(b);
	return p;
}

fu_matrix random_matrix(std::mt19937& rng, std::size_t max_dim, unsigned max_bits) {
	std::size_t rows = rng() % max_dim + 1, cols = rng() % max_dim + 1;
	fu_matrix m(rows, cols);
	for (std::size_t i = 0; i < rows; ++i)
		for (std::size_t j = 0; j < cols; ++j) m.at(i, j) = from_bits(rng() % (1u << max_bits));
	return m;
}

} // namespace

TEST_CASE("upoly arithmetic") {
	upoly u = upoly::power(1);

	SUBCASE("divmod examples") {
		auto [q1, r1] = upoly::divmod(from_bits(0b1010), u); // U^3 + U by U
		CHECK(q1 == from_bits(0b101));                       // U^2 + 1
		CHECK(r1.is_zero());

		auto [q2, r2] = upoly::divmod(from_bits(0b101), from_bits(0b11)); // U^2+1 by U+1
		CHECK(q2 == from_bits(0b11)); // (U+1)^2 = U^2+1 over F2
		CHECK(r2.is_zero());

		auto [q3, r3] = upoly::divmod(u, upoly::power(2));
		CHECK(q3.is_zero());
		CHECK(r3 == u);
	}
	SUBCASE("division by zero") {
		CHECK_THROWS_AS(upoly::divmod(u, upoly::zero()), invalid_input_error);
	}
	SUBCASE("degrees and predicates") {
		CHECK(upoly::zero().degree() == -1);
		CHECK(upoly::one().degree() == 0);
		CHECK(upoly::power(70).degree() == 70); // crosses a word boundary
		CHECK(upoly::power(70).is_monomial());
		CHECK_FALSE(from_bits(0b11).is_monomial());
		CHECK((upoly::power(70) * upoly::power(70)).degree() == 140);
	}
	SUBCASE("multiplication distributes over addition") {
		std::mt19937 rng(7);
		for (int i = 0; i < 50; ++i) {
			upoly a = from_bits(rng() % 256), b = from_bits(rng() % 256),
			      c = from_bits(rng() % 256);
			CHECK(a * (b + c) == a * b + a * c);
		}
	}
	SUBCASE("divmod reconstructs for random inputs") {
		std::mt19937 rng(8);
		for (int i = 0; i < 100; ++i) {
			upoly a = from_bits(rng() % 4096);
			upoly b = from_bits(rng() % 255 + 1);
			auto [q, r] = upoly::divmod(a, b);
			CHECK(b * q + r == a);
			CHECK(r.degree() < b.degree());
		}
	}
}

TEST_CASE("Smith normal form") {
	SUBCASE("1x1") {
		fu_matrix m(1, 1);
		m.at(0, 0) = upoly::power(1);
		smith_form s = smith_normal_form(m);
		CHECK(s.rank == 1);
		CHECK(s.invariant_factors == std::vector<upoly>{upoly::power(1)});
	}
	SUBCASE("zero matrix") {
		smith_form s = smith_normal_form(fu_matrix(3, 2));
		CHECK(s.rank == 0);
		CHECK(s.invariant_factors.empty());
	}
	SUBCASE("the 3x2 staircase differential of T(3,4)") {
		// columns (U, U^2, 0) and (0, U^2, U)
		fu_matrix m(3, 2);
		m.at(0, 0) = upoly::power(1);
		m.at(1, 0) = upoly::power(2);
		m.at(1, 1) = upoly::power(2);
		m.at(2, 1) = upoly::power(1);
		smith_form s = smith_normal_form(m);
		CHECK(s.invariant_factors == std::vector<upoly>{upoly::power(1), upoly::power(1)});

		// gcd-of-minors oracle: entry gcd U, 2x2 minor gcd U^2
		auto factors = oracles::invariant_factors_by_minors(m);
		CHECK(factors == s.invariant_factors);
	}
	SUBCASE("random matrices: transforms, chain, minors, rank") {
		std::mt19937 rng(20240815);
		for (int trial = 0; trial < 200; ++trial) {
			fu_matrix m = random_matrix(rng, 6, 5);
			smith_form s = smith_normal_form(m);
			CHECK(s.left * m * s.right == s.diagonal(m.rows(), m.cols()));
			CHECK(s.left * s.left_inv == fu_matrix::identity(m.rows()));
			CHECK(s.right * s.right_inv == fu_matrix::identity(m.cols()));
			for (std::size_t i = 1; i < s.invariant_factors.size(); ++i)
				CHECK(s.invariant_factors[i - 1].divides(s.invariant_factors[i]));
			CHECK(s.rank == oracles::fraction_free_rank(m));
			if (m.rows() <= 4 && m.cols() <= 4)
				CHECK(s.invariant_factors == oracles::invariant_factors_by_minors(m));
		}
	}
}

TEST_CASE("homology of chain complexes") {
	SUBCASE("rank-1 complex with zero differential is free of rank 1") {
		chain_complex c;
		c.set_generators(0, {"y0"});
		homology_decomposition h = homology(c);
		CHECK(h.free_rank == 1);
		CHECK(h.torsion_exponents.empty());
		CHECK(torsion_order(h) == 0);
	}
	SUBCASE("zero differentials give the free module of total rank") {
		chain_complex c;
		c.set_generators(0, {"a", "b"});
		c.set_generators(3, {"c"});
		homology_decomposition h = homology(c);
		CHECK(h.free_rank == 3);
		CHECK(h.torsion_exponents.empty());
	}
	SUBCASE("trefoil staircase: the relation U(y0 + y2) = 0 leaves one U-torsion class") {
		chain_complex c;
		c.set_generators(0, {"y0", "y2"});
		c.set_generators(1, {"y1"});
		fu_matrix d(2, 1);
		d.at(0, 0) = upoly::power(1);
		d.at(1, 0) = upoly::power(1);
		c.set_differential(1, d);
		homology_decomposition h = homology(c);
		CHECK(h.free_rank == 1);
		CHECK(h.torsion_exponents == std::vector<unsigned>{1});
	}
	SUBCASE("T(3,4) staircase differential") {
		chain_complex c;
		c.set_generators(0, {"y0", "y2", "y4"});
		c.set_generators(1, {"y1", "y3"});
		fu_matrix d(3, 2);
		d.at(0, 0) = upoly::power(1);
		d.at(1, 0) = upoly::power(2);
		d.at(1, 1) = upoly::power(2);
		d.at(2, 1) = upoly::power(1);
		c.set_differential(1, d);
		homology_decomposition h = homology(c);
		CHECK(h.free_rank == 1);
		CHECK(h.torsion_exponents == std::vector<unsigned>{1, 1});
	}
	SUBCASE("a differential that does not square to zero is rejected") {
		chain_complex c;
		c.set_generators(0, {"a"});
		c.set_generators(1, {"b"});
		c.set_generators(2, {"c"});
		fu_matrix d1(1, 1), d2(1, 1);
		d1.at(0, 0) = upoly::one();
		d2.at(0, 0) = upoly::one();
		c.set_differential(1, d1);
		c.set_differential(2, d2);
		CHECK_THROWS_AS(homology(c), invalid_input_error);
	}
	SUBCASE("non-monomial torsion is flagged") {
		chain_complex c;
		c.set_generators(0, {"a"});
		c.set_generators(1, {"b"});
		fu_matrix d(1, 1);
		d.at(0, 0) = upoly::power(1) + upoly::one(); // U + 1
		c.set_differential(1, d);
		CHECK_THROWS_WITH_AS(homology(c), doctest::Contains("non-monomial torsion"),
		                     invalid_input_error);
	}
}

TEST_CASE("torsion order") {
	homology_decomposition h;
	h.free_rank = 1;
	CHECK(torsion_order(h) == 0);
	h.torsion_exponents = {1, 1};
	CHECK(torsion_order(h) == 1);
	h.torsion_exponents = {1, 2, 3, 3, 2, 1};
	std::sort(h.torsion_exponents.begin(), h.torsion_exponents.end());
	CHECK(torsion_order(h) == 3);
}
