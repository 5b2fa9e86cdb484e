#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace ordu {

/* **************************************************************************
 * Laurent polynomials over the integers, in one variable t.
 *
 * Used for Alexander polynomials of torus knots. All values are immutable
 * after construction and all arithmetic is exact.
 * *************************************************************************/

class laurent_poly {
public:
	laurent_poly() = default;

	static laurent_poly monomial(std::int64_t coeff, int exponent);
	static laurent_poly one() { return monomial(1, 0); }

	// t^n - 1, the building block of the torus-knot formula
	static laurent_poly t_power_minus_one(int n);

	bool is_zero() const { return terms_.empty(); }
	int min_exponent() const; // throws on zero polynomial
	int max_exponent() const;
	std::int64_t coeff(int exponent) const;
	const std::map<int, std::int64_t>& terms() const { return terms_; }

	laurent_poly operator+(const laurent_poly& o) const;
	laurent_poly operator-(const laurent_poly& o) const;
	laurent_poly operator*(const laurent_poly& o) const;
	bool operator==(const laurent_poly& o) const { return terms_ == o.terms_; }

	// multiply by t^d
	laurent_poly shifted(int d) const;
	// substitute t -> t^-1
	laurent_poly reciprocal() const;

	std::int64_t evaluate_at_one() const;

	std::string to_string() const;

private:
	void set(int exponent, std::int64_t coeff);

	// invariant: no stored coefficient is zero
	std::map<int, std::int64_t> terms_;
};

// Exact long division: num = den * quotient, zero remainder required.
// The divisor must have leading coefficient +-1 (always the case here).
// A nonzero remainder raises internal_error.
laurent_poly divide_exact(const laurent_poly& num, const laurent_poly& den);

/* **************************************************************************
 * Exponent and gap sequences of L-space Alexander polynomials.
 * *************************************************************************/

// The decreasing exponents a_0 > a_1 > ... > a_{2l} of an alternating
// +-1 polynomial, symmetrically normalized (a_k + a_{2l-k} = 0).
class exponent_sequence {
public:
	explicit exponent_sequence(std::vector<int> alphas);

	const std::vector<int>& alphas() const { return alphas_; }
	std::size_t size() const { return alphas_.size(); }

private:
	std::vector<int> alphas_;
};

// The gaps d_k = a_{k-1} - a_k, k = 1..2l. Always strictly positive and
// of even length; gaps coming from a symmetric polynomial are palindromic.
class gap_sequence {
public:
	gap_sequence() = default; // empty: the unknot
	explicit gap_sequence(std::vector<int> gaps);

	const std::vector<int>& gaps() const { return gaps_; }
	std::size_t size() const { return gaps_.size(); }
	bool empty() const { return gaps_.empty(); }

	bool is_palindromic() const;
	long long sum() const;
	gap_sequence reversed() const;

	bool operator==(const gap_sequence& o) const { return gaps_ == o.gaps_; }

private:
	std::vector<int> gaps_; // invariant: even length, every entry >= 1
};

/* **************************************************************************
 * Operations
 * *************************************************************************/

// Alexander polynomial of the (p,q) torus knot,
//   (t^{pq} - 1)(t - 1) / ((t^p - 1)(t^q - 1)),
// symmetrically normalized so that D(t) = D(1/t) and D(1) = 1.
// Requires 1 <= p < q with gcd(p,q) = 1.
laurent_poly torus_alexander(int p, int q);

// Reads off the decreasing exponent list of an alternating +-1 polynomial.
// Rejects anything not of that shape ("not in L-space form").
exponent_sequence lspace_exponents(const laurent_poly& poly);

// d_k = a_{k-1} - a_k  (positive-gap convention)
gap_sequence gaps_of(const exponent_sequence& alphas);

// Closed form for T(n,n+1): (1, n-1, 2, n-2, ..., n-1, 1). Requires n >= 2.
gap_sequence torus_gap_formula(int n);

} // namespace ordu
