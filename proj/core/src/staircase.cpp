#include "ordu/staircase.hpp"

#include <algorithm>

#include "ordu/errors.hpp"

namespace ordu {

staircase_spec staircase_spec::from_gaps(const gap_sequence& gaps) {
	staircase_spec spec;
	spec.gaps = gaps;
	const auto& d = gaps.gaps();
	std::size_t n = d.size() + 1; // generators y_0 .. y_{2l}
	spec.labels.reserve(n);
	spec.gradings.reserve(n);
	int chi = 0;
	for (std::size_t i = 0; i < n; ++i) {
		spec.labels.push_back("y" + std::to_string(i));
		spec.gradings.push_back(chi);
		if (i < d.size()) chi += (i % 2 == 0) ? -d[i] : d[i]; // down to odd, up to even
	}
	return spec;
}

chain_complex staircase_complex(const gap_sequence& gaps) {
	staircase_spec spec = staircase_spec::from_gaps(gaps);
	const auto& d = gaps.gaps();
	std::size_t l = d.size() / 2;

	std::vector<std::string> evens, odds;
	std::vector<int> even_chi, odd_chi;
	for (std::size_t i = 0; i < spec.labels.size(); ++i) {
		if (i % 2 == 0) {
			evens.push_back(spec.labels[i]);
			even_chi.push_back(spec.gradings[i]);
		} else {
			odds.push_back(spec.labels[i]);
			odd_chi.push_back(spec.gradings[i]);
		}
	}

	chain_complex c;
	c.set_generators(0, std::move(evens), std::move(even_chi));
	if (l > 0) {
		c.set_generators(1, std::move(odds), std::move(odd_chi));
		fu_matrix diff(l + 1, l);
		for (std::size_t k = 0; k < l; ++k) {
			diff.at(k, k) = upoly::power(static_cast<unsigned>(d[2 * k]));
			diff.at(k + 1, k) = upoly::power(static_cast<unsigned>(d[2 * k + 1]));
		}
		c.set_differential(1, std::move(diff));
	}
	c.require_valid();
	return c;
}

chain_complex mirror_complex(const chain_complex& c) {
	chain_complex out;
	for (int k : c.degrees()) {
		std::vector<std::string> labels;
		for (const auto& l : c.labels(k)) labels.push_back(l + "'");
		std::optional<std::vector<int>> gradings;
		if (const auto& g = c.gradings(k)) {
			gradings.emplace();
			for (int x : *g) gradings->push_back(-x);
		}
		out.set_generators(-k, std::move(labels), std::move(gradings));
	}
	// original d_k : C_k -> C_{k-1} dualizes to d_{1-k} = d_k^T,
	// mapping the duals of C_{k-1} (degree 1-k) to the duals of C_k
	for (int k : c.degrees()) {
		fu_matrix d = c.differential(k);
		if (d.rows() == 0 || d.cols() == 0) continue;
		out.set_differential(1 - k, d.transposed());
	}
	out.require_valid();
	return out;
}

chain_complex tensor_complex(const chain_complex& a, const chain_complex& b) {
	a.require_valid();
	b.require_valid();
	std::vector<int> da = a.degrees(), db = b.degrees();

	// basis of degree n: blocks (i, j) with i + j = n, i ascending;
	// within a block the a-index is major, the b-index minor
	std::map<int, std::size_t> rank;
	std::map<std::pair<int, int>, std::size_t> offset;
	for (int i : da)
		for (int j : db) {
			offset[{i, j}] = rank[i + j];
			rank[i + j] += a.rank(i) * b.rank(j);
		}

	chain_complex out;
	for (const auto& [n, rn] : rank) {
		std::vector<std::string> labels(rn);
		for (int i : da)
			for (int j : db) {
				if (i + j != n) continue;
				std::size_t base = offset[{i, j}];
				for (std::size_t x = 0; x < a.rank(i); ++x)
					for (std::size_t y = 0; y < b.rank(j); ++y)
						labels[base + x * b.rank(j) + y] =
						    a.labels(i)[x] + "*" + b.labels(j)[y];
			}
		out.set_generators(n, std::move(labels));
	}

	std::map<int, fu_matrix> diffs;
	for (const auto& [n, rn] : rank)
		if (rank.count(n - 1)) diffs.emplace(n, fu_matrix(rank[n - 1], rn));

	for (int i : da)
		for (int j : db) {
			int n = i + j;
			auto dit = diffs.find(n);
			if (dit == diffs.end()) continue;
			fu_matrix& dn = dit->second;
			std::size_t base = offset[{i, j}];
			fu_matrix dA = a.differential(i);
			fu_matrix dB = b.differential(j);
			bool hasA = dA.rows() > 0 && offset.count({i - 1, j});
			bool hasB = dB.rows() > 0 && offset.count({i, j - 1});
			for (std::size_t x = 0; x < a.rank(i); ++x)
				for (std::size_t y = 0; y < b.rank(j); ++y) {
					std::size_t col = base + x * b.rank(j) + y;
					if (hasA) {
						std::size_t tbase = offset[{i - 1, j}];
						for (std::size_t x2 = 0; x2 < a.rank(i - 1); ++x2) {
							const upoly& v = dA.at(x2, x);
							if (!v.is_zero())
								dn.at(tbase + x2 * b.rank(j) + y, col) += v;
						}
					}
					if (hasB) {
						std::size_t tbase = offset[{i, j - 1}];
						for (std::size_t y2 = 0; y2 < b.rank(j - 1); ++y2) {
							const upoly& v = dB.at(y2, y);
							if (!v.is_zero())
								dn.at(tbase + x * b.rank(j - 1) + y2, col) += v;
						}
					}
				}
		}

	for (auto& [n, d] : diffs) out.set_differential(n, std::move(d));
	out.require_valid(); // d o d = 0 by construction, still asserted
	return out;
}

graded_root_summary summarize_graded_root(const homology_decomposition& h) {
	if (h.free_rank != 1)
		throw invalid_input_error("not a knot complex: free rank is " +
		                          std::to_string(h.free_rank) + ", expected 1");
	graded_root_summary out;
	out.tower_count = h.free_rank;
	out.branch_exponents = h.torsion_exponents;
	std::sort(out.branch_exponents.begin(), out.branch_exponents.end());
	return out;
}

} // namespace ordu
