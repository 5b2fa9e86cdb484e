#include "oracles.hpp"

#include <algorithm>

#include <boost/multiprecision/cpp_int.hpp>

#include "ordu/errors.hpp"

namespace oracles {

using ordu::fu_matrix;
using ordu::upoly;

upoly poly_gcd(upoly a, upoly b) {
	while (!b.is_zero()) {
		upoly r = upoly::divmod(a, b).second;
		a = b;
		b = r;
	}
	return a;
}

upoly determinant(const fu_matrix& m) {
	std::size_t n = m.rows();
	if (n != m.cols()) throw ordu::internal_error("determinant of non-square matrix");
	if (n == 0) return upoly::one();
	if (n == 1) return m.at(0, 0);
	upoly det;
	for (std::size_t j = 0; j < n; ++j) {
		if (m.at(0, j).is_zero()) continue;
		fu_matrix minor(n - 1, n - 1);
		for (std::size_t r = 1; r < n; ++r) {
			std::size_t cc = 0;
			for (std::size_t c = 0; c < n; ++c) {
				if (c == j) continue;
				minor.at(r - 1, cc++) = m.at(r, c);
			}
		}
		det += m.at(0, j) * determinant(minor); // char 2: no signs
	}
	return det;
}

namespace {

void combinations(std::size_t n, std::size_t k, std::vector<std::vector<std::size_t>>& out) {
	std::vector<std::size_t> pick(k);
	for (std::size_t i = 0; i < k; ++i) pick[i] = i;
	for (;;) {
		out.push_back(pick);
		std::size_t i = k;
		while (i > 0 && pick[i - 1] == n - k + i - 1) --i;
		if (i == 0) return;
		++pick[i - 1];
		for (std::size_t j = i; j < k; ++j) pick[j] = pick[j - 1] + 1;
	}
}

} // namespace

std::vector<upoly> invariant_factors_by_minors(const fu_matrix& m) {
	std::vector<upoly> factors;
	upoly prev = upoly::one();
	std::size_t kmax = std::min(m.rows(), m.cols());
	for (std::size_t k = 1; k <= kmax; ++k) {
		std::vector<std::vector<std::size_t>> rows_sets, cols_sets;
		combinations(m.rows(), k, rows_sets);
		combinations(m.cols(), k, cols_sets);
		upoly g;
		for (const auto& rs : rows_sets)
			for (const auto& cs : cols_sets) {
				fu_matrix sub(k, k);
				for (std::size_t i = 0; i < k; ++i)
					for (std::size_t j = 0; j < k; ++j) sub.at(i, j) = m.at(rs[i], cs[j]);
				g = poly_gcd(g, determinant(sub));
			}
		if (g.is_zero()) break; // all k-minors vanish: rank is k-1
		auto [q, r] = upoly::divmod(g, prev);
		if (!r.is_zero()) throw ordu::internal_error("minor gcds do not divide");
		factors.push_back(q);
		prev = g;
	}
	return factors;
}

std::size_t fraction_free_rank(const fu_matrix& m) {
	std::vector<std::vector<upoly>> a(m.rows(), std::vector<upoly>(m.cols()));
	for (std::size_t i = 0; i < m.rows(); ++i)
		for (std::size_t j = 0; j < m.cols(); ++j) a[i][j] = m.at(i, j);
	std::size_t rank = 0, row = 0;
	for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
		std::size_t piv = row;
		while (piv < m.rows() && a[piv][col].is_zero()) ++piv;
		if (piv == m.rows()) continue;
		std::swap(a[row], a[piv]);
		for (std::size_t i = row + 1; i < m.rows(); ++i) {
			if (a[i][col].is_zero()) continue;
			upoly p = a[row][col], v = a[i][col];
			for (std::size_t k = 0; k < m.cols(); ++k)
				a[i][k] = p * a[i][k] + v * a[row][k];
		}
		++row;
		++rank;
	}
	return rank;
}

std::vector<unsigned> kunneth_torsion(std::size_t free_a, const std::vector<unsigned>& tors_a,
                                      std::size_t free_b, const std::vector<unsigned>& tors_b) {
	std::vector<unsigned> out;
	for (unsigned a : tors_a)
		for (std::size_t i = 0; i < free_b; ++i) out.push_back(a);
	for (unsigned b : tors_b)
		for (std::size_t i = 0; i < free_a; ++i) out.push_back(b);
	for (unsigned a : tors_a)
		for (unsigned b : tors_b) {
			out.push_back(std::min(a, b)); // tensor product term
			out.push_back(std::min(a, b)); // torsion product term
		}
	std::sort(out.begin(), out.end());
	return out;
}

std::vector<unsigned> persistence_branches(const std::vector<int>& heights) {
	std::vector<int> comps, valleys;
	for (std::size_t i = 0; i < heights.size(); ++i)
		(i % 2 == 0 ? comps : valleys).push_back(heights[i]);

	std::vector<unsigned> out;
	while (!valleys.empty()) {
		auto it = std::max_element(valleys.begin(), valleys.end());
		std::size_t i = static_cast<std::size_t>(it - valleys.begin());
		out.push_back(static_cast<unsigned>(std::min(comps[i], comps[i + 1]) - *it));
		comps[i] = std::max(comps[i], comps[i + 1]);
		comps.erase(comps.begin() + static_cast<std::ptrdiff_t>(i) + 1);
		valleys.erase(it);
	}
	std::sort(out.begin(), out.end());
	return out;
}

namespace {

using boost::multiprecision::cpp_rational;

std::vector<std::vector<long long>> seifert_matrix(int p, int q) {
	auto bidiag = [](int n) {
		std::vector<std::vector<long long>> b(n - 1, std::vector<long long>(n - 1, 0));
		for (int i = 0; i < n - 1; ++i) {
			b[i][i] = 1;
			if (i + 1 < n - 1) b[i][i + 1] = -1;
		}
		return b;
	};
	auto bp = bidiag(p), bq = bidiag(q);
	int np = p - 1, nq = q - 1;
	std::vector<std::vector<long long>> v(np * nq, std::vector<long long>(np * nq, 0));
	for (int a = 0; a < np; ++a)
		for (int b = 0; b < np; ++b)
			for (int c = 0; c < nq; ++c)
				for (int d = 0; d < nq; ++d)
					v[a * nq + c][b * nq + d] = -bp[a][b] * bq[c][d];
	return v;
}

} // namespace

long long seifert_signature(int p, int q) {
	auto v = seifert_matrix(p, q);
	std::size_t n = v.size();
	std::vector<std::vector<cpp_rational>> a(n, std::vector<cpp_rational>(n));
	for (std::size_t i = 0; i < n; ++i)
		for (std::size_t j = 0; j < n; ++j) a[i][j] = v[i][j] + v[j][i];

	long long sig = 0;
	for (std::size_t t = 0; t < n; ++t) {
		if (a[t][t] == 0) {
			bool placed = false;
			for (std::size_t i = t + 1; i < n && !placed; ++i)
				if (a[i][i] != 0) {
					std::swap(a[t], a[i]);
					for (std::size_t k = 0; k < n; ++k) std::swap(a[k][t], a[k][i]);
					placed = true;
				}
			if (!placed) {
				for (std::size_t i = t; i < n && !placed; ++i)
					for (std::size_t j = i + 1; j < n && !placed; ++j)
						if (a[i][j] != 0) {
							for (std::size_t k = 0; k < n; ++k) a[i][k] += a[j][k];
							for (std::size_t k = 0; k < n; ++k) a[k][i] += a[k][j];
							if (i != t) {
								std::swap(a[t], a[i]);
								for (std::size_t k = 0; k < n; ++k) std::swap(a[k][t], a[k][i]);
							}
							placed = true;
						}
			}
			if (!placed) break;
		}
		cpp_rational pivot = a[t][t];
		if (pivot == 0) break;
		sig += pivot > 0 ? 1 : -1;
		for (std::size_t i = t + 1; i < n; ++i) {
			if (a[i][t] == 0) continue;
			cpp_rational f = a[i][t] / pivot;
			for (std::size_t k = 0; k < n; ++k) a[i][k] -= f * a[t][k];
			for (std::size_t k = 0; k < n; ++k) a[k][i] -= f * a[k][t];
		}
	}
	return sig;
}

} // namespace oracles
