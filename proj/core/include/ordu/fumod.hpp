#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace ordu {

/* **************************************************************************
 * Polynomials over the two-element field in one variable U.
 *
 * Coefficients are bits packed into words, indexed by degree. The zero
 * polynomial has an empty representation; otherwise the top word is
 * nonzero, so the leading coefficient is 1 automatically.
 * *************************************************************************/

class upoly {
public:
	upoly() = default;

	static upoly zero() { return upoly(); }
	static upoly one() { return power(0); }
	static upoly power(unsigned k); // U^k

	bool is_zero() const { return words_.empty(); }
	bool is_one() const;
	// single term U^k?
	bool is_monomial() const;
	// -1 for the zero polynomial
	int degree() const;
	bool bit(unsigned k) const;

	upoly operator+(const upoly& o) const;
	upoly& operator+=(const upoly& o);
	upoly operator*(const upoly& o) const;
	bool operator==(const upoly& o) const { return words_ == o.words_; }

	// a = b*q + r with deg r < deg b; b must be nonzero
	static std::pair<upoly, upoly> divmod(const upoly& a, const upoly& b);
	bool divides(const upoly& o) const;

	std::string to_string() const;

private:
	void flip(unsigned k);
	void trim();

	std::vector<std::uint64_t> words_;
};

/* **************************************************************************
 * Dense matrices over F2[U]
 * *************************************************************************/

class fu_matrix {
public:
	fu_matrix() : rows_(0), cols_(0) {}
	fu_matrix(std::size_t rows, std::size_t cols)
	    : rows_(rows), cols_(cols), entries_(rows * cols) {}

	static fu_matrix identity(std::size_t n);

	std::size_t rows() const { return rows_; }
	std::size_t cols() const { return cols_; }

	const upoly& at(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }
	upoly& at(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }

	bool is_zero() const;
	fu_matrix transposed() const;
	fu_matrix operator*(const fu_matrix& o) const;
	bool operator==(const fu_matrix& o) const;

	void swap_rows(std::size_t i, std::size_t j);
	void swap_cols(std::size_t i, std::size_t j);
	void row_axpy(std::size_t dst, std::size_t src, const upoly& q); // row dst += q * row src
	void col_axpy(std::size_t dst, std::size_t src, const upoly& q); // col dst += q * col src

	std::string to_string() const;

private:
	std::size_t rows_, cols_;
	std::vector<upoly> entries_;
};

/* **************************************************************************
 * Smith normal form
 * *************************************************************************/

struct smith_form {
	// nonzero diagonal entries, each dividing the next (monic over F2)
	std::vector<upoly> invariant_factors;
	std::size_t rank = 0;
	// left * original * right == diagonal; inverses kept for change of basis
	fu_matrix left, right, left_inv, right_inv;

	fu_matrix diagonal(std::size_t rows, std::size_t cols) const;
};

// Deterministic SNF: the pivot is the nonzero entry of minimal degree in
// the working submatrix, ties broken by row-major position. The returned
// transforms are verified by re-multiplication.
smith_form smith_normal_form(const fu_matrix& m);

/* **************************************************************************
 * Chain complexes of free F2[U]-modules and their homology
 * *************************************************************************/

class chain_complex {
public:
	// generators of homological degree k; gradings are optional display
	// data (relative Maslov gradings) that homology ignores
	void set_generators(int degree, std::vector<std::string> labels,
	                    std::optional<std::vector<int>> gradings = std::nullopt);
	// d : C_degree -> C_{degree-1}; shape must be rank(degree-1) x rank(degree)
	void set_differential(int degree, fu_matrix d);

	std::size_t rank(int degree) const;
	std::size_t total_rank() const;
	const std::vector<std::string>& labels(int degree) const;
	const std::optional<std::vector<int>>& gradings(int degree) const;
	// zero matrix of the right shape when none was set
	fu_matrix differential(int degree) const;
	std::vector<int> degrees() const; // sorted, nonzero-rank degrees

	// throws invalid_input_error unless every composite d o d vanishes
	void require_valid() const;

private:
	std::map<int, std::vector<std::string>> labels_;
	std::map<int, std::optional<std::vector<int>>> gradings_;
	std::map<int, fu_matrix> diffs_;
};

struct homology_decomposition {
	struct degree_part {
		int degree = 0;
		std::size_t free_rank = 0;
		std::vector<unsigned> torsion_exponents; // sorted ascending
	};

	std::size_t free_rank = 0;               // total over all degrees
	std::vector<unsigned> torsion_exponents; // sorted ascending, multiset
	std::vector<degree_part> by_degree;      // diagnostics
};

// Homology as a finitely generated F2[U]-module, degree by degree, via
// Smith normal form. Torsion invariant factors must be powers of U;
// anything else is outside the class of complexes modelled here and is
// rejected ("non-monomial torsion").
homology_decomposition homology(const chain_complex& c);

// max torsion exponent; 0 when there is no torsion
unsigned torsion_order(const homology_decomposition& h);

} // namespace ordu
