#include "ordu/laurent.hpp"

#include <cstdlib>
#include <numeric>
#include <sstream>

#include "ordu/errors.hpp"

namespace ordu {

laurent_poly laurent_poly::monomial(std::int64_t coeff, int exponent) {
	laurent_poly p;
	p.set(exponent, coeff);
	return p;
}

laurent_poly laurent_poly::t_power_minus_one(int n) {
	laurent_poly p;
	p.set(n, 1);
	p.set(0, p.coeff(0) - 1); // n = 0 gives the zero polynomial
	return p;
}

void laurent_poly::set(int exponent, std::int64_t coeff) {
	if (coeff == 0)
		terms_.erase(exponent);
	else
		terms_[exponent] = coeff;
}

int laurent_poly::min_exponent() const {
	if (is_zero()) throw internal_error("min_exponent of zero polynomial");
	return terms_.begin()->first;
}

int laurent_poly::max_exponent() const {
	if (is_zero()) throw internal_error("max_exponent of zero polynomial");
	return terms_.rbegin()->first;
}

std::int64_t laurent_poly::coeff(int exponent) const {
	auto it = terms_.find(exponent);
	return it == terms_.end() ? 0 : it->second;
}

laurent_poly laurent_poly::operator+(const laurent_poly& o) const {
	laurent_poly r = *this;
	for (const auto& [e, c] : o.terms_) r.set(e, r.coeff(e) + c);
	return r;
}

laurent_poly laurent_poly::operator-(const laurent_poly& o) const {
	laurent_poly r = *this;
	for (const auto& [e, c] : o.terms_) r.set(e, r.coeff(e) - c);
	return r;
}

laurent_poly laurent_poly::operator*(const laurent_poly& o) const {
	laurent_poly r;
	for (const auto& [e1, c1] : terms_)
		for (const auto& [e2, c2] : o.terms_) r.set(e1 + e2, r.coeff(e1 + e2) + c1 * c2);
	return r;
}

laurent_poly laurent_poly::shifted(int d) const {
	laurent_poly r;
	for (const auto& [e, c] : terms_) r.set(e + d, c);
	return r;
}

laurent_poly laurent_poly::reciprocal() const {
	laurent_poly r;
	for (const auto& [e, c] : terms_) r.set(-e, c);
	return r;
}

std::int64_t laurent_poly::evaluate_at_one() const {
	std::int64_t s = 0;
	for (const auto& [e, c] : terms_) s += c;
	return s;
}

std::string laurent_poly::to_string() const {
	if (is_zero()) return "0";
	std::ostringstream out;
	bool first = true;
	for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
		auto [e, c] = *it;
		if (first) {
			if (c < 0) out << "-";
		} else {
			out << (c < 0 ? " - " : " + ");
		}
		first = false;
		std::int64_t a = std::abs(c);
		if (a != 1 || e == 0) out << a;
		if (e != 0) {
			out << "t";
			if (e != 1) out << "^" << e;
		}
	}
	return out.str();
}

laurent_poly divide_exact(const laurent_poly& num, const laurent_poly& den) {
	if (den.is_zero()) throw invalid_input_error("division by zero polynomial");
	if (num.is_zero()) return laurent_poly();
	std::int64_t lead = den.coeff(den.max_exponent());
	if (lead != 1 && lead != -1)
		throw invalid_input_error("divisor must have leading coefficient +-1");

	laurent_poly rem = num;
	laurent_poly quot;
	while (!rem.is_zero() && rem.max_exponent() - rem.min_exponent() >=
	                             den.max_exponent() - den.min_exponent()) {
		int shift = rem.max_exponent() - den.max_exponent();
		std::int64_t c = rem.coeff(rem.max_exponent()) / lead;
		laurent_poly t = laurent_poly::monomial(c, shift);
		quot = quot + t;
		rem = rem - den * t;
	}
	if (!rem.is_zero())
		throw internal_error("polynomial long division left a nonzero remainder: " +
		                     rem.to_string());
	return quot;
}

exponent_sequence::exponent_sequence(std::vector<int> alphas) : alphas_(std::move(alphas)) {
	if (alphas_.empty() || alphas_.size() % 2 == 0)
		throw invalid_input_error("exponent sequence must have odd length");
	for (std::size_t k = 1; k < alphas_.size(); ++k)
		if (alphas_[k - 1] <= alphas_[k])
			throw invalid_input_error("exponent sequence must be strictly decreasing");
	std::size_t n = alphas_.size();
	for (std::size_t k = 0; k < n; ++k)
		if (alphas_[k] + alphas_[n - 1 - k] != 0)
			throw invalid_input_error("exponent sequence is not symmetric about 0");
}

gap_sequence::gap_sequence(std::vector<int> gaps) : gaps_(std::move(gaps)) {
	if (gaps_.size() % 2 != 0)
		throw invalid_input_error("gap sequence must have even length");
	for (int d : gaps_)
		if (d <= 0) throw invalid_input_error("gap sequence entries must be positive");
}

bool gap_sequence::is_palindromic() const {
	std::size_t n = gaps_.size();
	for (std::size_t k = 0; k < n / 2; ++k)
		if (gaps_[k] != gaps_[n - 1 - k]) return false;
	return true;
}

long long gap_sequence::sum() const {
	long long s = 0;
	for (int d : gaps_) s += d;
	return s;
}

gap_sequence gap_sequence::reversed() const {
	return gap_sequence(std::vector<int>(gaps_.rbegin(), gaps_.rend()));
}

laurent_poly torus_alexander(int p, int q) {
	if (p < 1 || p >= q) throw invalid_input_error("torus knot needs 1 <= p < q");
	if (std::gcd(p, q) != 1) throw invalid_input_error("torus knot needs gcd(p,q) = 1");

	laurent_poly num = laurent_poly::t_power_minus_one(p * q) * laurent_poly::t_power_minus_one(1);
	laurent_poly den = laurent_poly::t_power_minus_one(p) * laurent_poly::t_power_minus_one(q);
	laurent_poly d = divide_exact(num, den);

	// center: degree of the quotient is (p-1)(q-1), always even here
	int width = (p - 1) * (q - 1);
	if (d.max_exponent() - d.min_exponent() != width)
		throw internal_error("unexpected Alexander polynomial degree");
	laurent_poly centered = d.shifted(-d.min_exponent() - width / 2);

	if (!(centered == centered.reciprocal()))
		throw internal_error("Alexander polynomial is not symmetric after centering");
	if (centered.evaluate_at_one() != 1)
		throw internal_error("Alexander polynomial does not evaluate to 1 at t = 1");
	return centered;
}

exponent_sequence lspace_exponents(const laurent_poly& poly) {
	if (poly.is_zero()) throw invalid_input_error("not in L-space form: zero polynomial");
	std::vector<int> alphas;
	std::int64_t expected = 1;
	// terms() is sorted ascending; walk from the top exponent down
	for (auto it = poly.terms().rbegin(); it != poly.terms().rend(); ++it) {
		if (it->second != expected)
			throw invalid_input_error(
			    "not in L-space form: coefficients must alternate +1, -1 from the top");
		alphas.push_back(it->first);
		expected = -expected;
	}
	if (alphas.size() % 2 == 0)
		throw invalid_input_error("not in L-space form: even number of terms");
	return exponent_sequence(std::move(alphas));
}

gap_sequence gaps_of(const exponent_sequence& alphas) {
	const auto& a = alphas.alphas();
	std::vector<int> gaps;
	gaps.reserve(a.size() - 1);
	for (std::size_t k = 1; k < a.size(); ++k) gaps.push_back(a[k - 1] - a[k]);
	return gap_sequence(std::move(gaps));
}

gap_sequence torus_gap_formula(int n) {
	if (n < 2) throw invalid_input_error("torus gap formula needs n >= 2");
	std::vector<int> gaps;
	gaps.reserve(2 * (n - 1));
	for (int k = 1; k < n; ++k) {
		gaps.push_back(k);
		gaps.push_back(n - k);
	}
	return gap_sequence(std::move(gaps));
}

} // namespace ordu
