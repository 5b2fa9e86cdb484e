#include "ordu/fumod.hpp"

#include <algorithm>
#include <sstream>

#include "ordu/errors.hpp"

namespace ordu {

/* **************************************************************************
 * upoly
 * *************************************************************************/

upoly upoly::power(unsigned k) {
	upoly p;
	p.flip(k);
	return p;
}

void upoly::flip(unsigned k) {
	std::size_t w = k / 64;
	if (w >= words_.size()) words_.resize(w + 1, 0);
	words_[w] ^= std::uint64_t{1} << (k % 64);
	trim();
}

void upoly::trim() {
	while (!words_.empty() && words_.back() == 0) words_.pop_back();
}

bool upoly::is_one() const { return words_.size() == 1 && words_[0] == 1; }

bool upoly::is_monomial() const {
	if (words_.empty()) return false;
	bool seen = false;
	for (std::uint64_t w : words_) {
		if (w == 0) continue;
		if (seen || (w & (w - 1)) != 0) return false;
		seen = true;
	}
	return true;
}

int upoly::degree() const {
	if (words_.empty()) return -1;
	std::uint64_t top = words_.back();
	int b = 63;
	while (!(top >> b & 1)) --b;
	return static_cast<int>((words_.size() - 1) * 64) + b;
}

bool upoly::bit(unsigned k) const {
	std::size_t w = k / 64;
	return w < words_.size() && (words_[w] >> (k % 64) & 1);
}

upoly upoly::operator+(const upoly& o) const {
	upoly r = *this;
	r += o;
	return r;
}

upoly& upoly::operator+=(const upoly& o) {
	if (o.words_.size() > words_.size()) words_.resize(o.words_.size(), 0);
	for (std::size_t i = 0; i < o.words_.size(); ++i) words_[i] ^= o.words_[i];
	trim();
	return *this;
}

namespace {

// r ^= a << k, word-level carryless shift-xor
void xor_shifted(std::vector<std::uint64_t>& r, const std::vector<std::uint64_t>& a, unsigned k) {
	std::size_t ws = k / 64;
	unsigned bs = k % 64;
	if (r.size() < a.size() + ws + 1) r.resize(a.size() + ws + 1, 0);
	for (std::size_t i = 0; i < a.size(); ++i) {
		r[i + ws] ^= a[i] << bs;
		if (bs) r[i + ws + 1] ^= a[i] >> (64 - bs);
	}
}

} // namespace

upoly upoly::operator*(const upoly& o) const {
	upoly r;
	if (is_zero() || o.is_zero()) return r;
	for (std::size_t w = 0; w < words_.size(); ++w) {
		std::uint64_t bits = words_[w];
		while (bits) {
			unsigned b = static_cast<unsigned>(__builtin_ctzll(bits));
			bits &= bits - 1;
			xor_shifted(r.words_, o.words_, static_cast<unsigned>(w * 64) + b);
		}
	}
	r.trim();
	return r;
}

std::pair<upoly, upoly> upoly::divmod(const upoly& a, const upoly& b) {
	if (b.is_zero()) throw invalid_input_error("division by the zero polynomial");
	upoly q, r = a;
	int db = b.degree();
	while (r.degree() >= db) {
		unsigned shift = static_cast<unsigned>(r.degree() - db);
		xor_shifted(r.words_, b.words_, shift);
		r.trim();
		q.flip(shift);
	}
	return {q, r};
}

bool upoly::divides(const upoly& o) const {
	if (o.is_zero()) return true;
	if (is_zero()) return false;
	return divmod(o, *this).second.is_zero();
}

std::string upoly::to_string() const {
	if (is_zero()) return "0";
	std::ostringstream out;
	bool first = true;
	for (int k = degree(); k >= 0; --k) {
		if (!bit(static_cast<unsigned>(k))) continue;
		if (!first) out << "+";
		first = false;
		if (k == 0)
			out << "1";
		else if (k == 1)
			out << "U";
		else
			out << "U^" << k;
	}
	return out.str();
}

/* **************************************************************************
 * fu_matrix
 * *************************************************************************/

fu_matrix fu_matrix::identity(std::size_t n) {
	fu_matrix m(n, n);
	for (std::size_t i = 0; i < n; ++i) m.at(i, i) = upoly::one();
	return m;
}

bool fu_matrix::is_zero() const {
	return std::all_of(entries_.begin(), entries_.end(),
	                   [](const upoly& p) { return p.is_zero(); });
}

fu_matrix fu_matrix::transposed() const {
	fu_matrix m(cols_, rows_);
	for (std::size_t r = 0; r < rows_; ++r)
		for (std::size_t c = 0; c < cols_; ++c) m.at(c, r) = at(r, c);
	return m;
}

fu_matrix fu_matrix::operator*(const fu_matrix& o) const {
	if (cols_ != o.rows_) throw internal_error("matrix product shape mismatch");
	fu_matrix m(rows_, o.cols_);
	for (std::size_t i = 0; i < rows_; ++i)
		for (std::size_t k = 0; k < cols_; ++k) {
			const upoly& a = at(i, k);
			if (a.is_zero()) continue;
			for (std::size_t j = 0; j < o.cols_; ++j) {
				const upoly& b = o.at(k, j);
				if (!b.is_zero()) m.at(i, j) += a * b;
			}
		}
	return m;
}

bool fu_matrix::operator==(const fu_matrix& o) const {
	return rows_ == o.rows_ && cols_ == o.cols_ && entries_ == o.entries_;
}

void fu_matrix::swap_rows(std::size_t i, std::size_t j) {
	if (i == j) return;
	for (std::size_t c = 0; c < cols_; ++c) std::swap(at(i, c), at(j, c));
}

void fu_matrix::swap_cols(std::size_t i, std::size_t j) {
	if (i == j) return;
	for (std::size_t r = 0; r < rows_; ++r) std::swap(at(r, i), at(r, j));
}

void fu_matrix::row_axpy(std::size_t dst, std::size_t src, const upoly& q) {
	if (q.is_zero()) return;
	for (std::size_t c = 0; c < cols_; ++c) {
		const upoly& v = at(src, c);
		if (!v.is_zero()) at(dst, c) += q * v;
	}
}

void fu_matrix::col_axpy(std::size_t dst, std::size_t src, const upoly& q) {
	if (q.is_zero()) return;
	for (std::size_t r = 0; r < rows_; ++r) {
		const upoly& v = at(r, src);
		if (!v.is_zero()) at(r, dst) += q * v;
	}
}

std::string fu_matrix::to_string() const {
	std::ostringstream out;
	for (std::size_t r = 0; r < rows_; ++r) {
		out << "[ ";
		for (std::size_t c = 0; c < cols_; ++c) out << at(r, c).to_string() << " ";
		out << "]\n";
	}
	return out.str();
}

/* **************************************************************************
 * Smith normal form
 * *************************************************************************/

fu_matrix smith_form::diagonal(std::size_t rows, std::size_t cols) const {
	fu_matrix d(rows, cols);
	for (std::size_t i = 0; i < invariant_factors.size(); ++i) d.at(i, i) = invariant_factors[i];
	return d;
}

namespace {

// Which byproducts of the reduction are needed. The public operation
// records everything and verifies; the homology computation only needs
// the column transform and its inverse, and nothing at all for torsion
// extraction, which makes the large tensor complexes tractable.
struct snf_options {
	bool with_left = true;
	bool with_right = true;
	bool with_inverses = true;
};

// SNF working state: row ops mirrored into left/left_inv, column ops into
// right/right_inv, so that left*M*right stays equal to the work matrix.
struct snf_state {
	fu_matrix a, left, left_inv, right, right_inv;
	snf_options opt;

	snf_state(const fu_matrix& m, const snf_options& o) : a(m), opt(o) {
		if (opt.with_left) {
			left = fu_matrix::identity(m.rows());
			if (opt.with_inverses) left_inv = fu_matrix::identity(m.rows());
		}
		if (opt.with_right) {
			right = fu_matrix::identity(m.cols());
			if (opt.with_inverses) right_inv = fu_matrix::identity(m.cols());
		}
	}

	void swap_rows(std::size_t i, std::size_t j) {
		a.swap_rows(i, j);
		if (opt.with_left) {
			left.swap_rows(i, j);
			if (opt.with_inverses) left_inv.swap_cols(i, j);
		}
	}
	void swap_cols(std::size_t i, std::size_t j) {
		a.swap_cols(i, j);
		if (opt.with_right) {
			right.swap_cols(i, j);
			if (opt.with_inverses) right_inv.swap_rows(i, j);
		}
	}
	// row dst += q * row src; the elementary matrix is self-inverse over F2
	void row_axpy(std::size_t dst, std::size_t src, const upoly& q) {
		a.row_axpy(dst, src, q);
		if (opt.with_left) {
			left.row_axpy(dst, src, q);
			if (opt.with_inverses) left_inv.col_axpy(src, dst, q);
		}
	}
	void col_axpy(std::size_t dst, std::size_t src, const upoly& q) {
		a.col_axpy(dst, src, q);
		if (opt.with_right) {
			right.col_axpy(dst, src, q);
			if (opt.with_inverses) right_inv.row_axpy(src, dst, q);
		}
	}
};

smith_form smith_reduce(const fu_matrix& m, const snf_options& options) {
	snf_state st(m, options);
	fu_matrix& a = st.a;
	const std::size_t nr = m.rows(), nc = m.cols();

	std::size_t t = 0;
	while (t < nr && t < nc) {
		// pivot: minimal degree, row-major tie-break
		std::size_t pr = 0, pc = 0;
		int best = -1;
		for (std::size_t i = t; i < nr; ++i)
			for (std::size_t j = t; j < nc; ++j) {
				int d = a.at(i, j).degree();
				if (d >= 0 && (best < 0 || d < best)) {
					best = d;
					pr = i;
					pc = j;
				}
			}
		if (best < 0) break;
		st.swap_rows(t, pr);
		st.swap_cols(t, pc);

		for (;;) {
			// clear column t and row t; a nonzero remainder has strictly
			// smaller degree than the pivot, so promoting it terminates
			bool changed = true;
			while (changed) {
				changed = false;
				for (std::size_t i = t + 1; i < nr; ++i) {
					if (a.at(i, t).is_zero()) continue;
					auto [q, r] = upoly::divmod(a.at(i, t), a.at(t, t));
					st.row_axpy(i, t, q);
					if (!a.at(i, t).is_zero()) {
						st.swap_rows(t, i);
						changed = true;
					}
				}
				for (std::size_t j = t + 1; j < nc; ++j) {
					if (a.at(t, j).is_zero()) continue;
					auto [q, r] = upoly::divmod(a.at(t, j), a.at(t, t));
					st.col_axpy(j, t, q);
					if (!a.at(t, j).is_zero()) {
						st.swap_cols(t, j);
						changed = true;
					}
				}
			}
			// divisibility sweep: fold a non-divisible entry into row t
			// and reduce again; the pivot degree strictly decreases
			const upoly& piv = a.at(t, t);
			std::size_t bad_row = 0;
			bool found = false;
			for (std::size_t i = t + 1; i < nr && !found; ++i)
				for (std::size_t j = t + 1; j < nc && !found; ++j)
					if (!piv.divides(a.at(i, j))) {
						bad_row = i;
						found = true;
					}
			if (!found) break;
			st.row_axpy(t, bad_row, upoly::one());
		}
		++t;
	}

	smith_form out;
	for (std::size_t i = 0; i < t; ++i) out.invariant_factors.push_back(a.at(i, i));
	out.rank = t;
	out.left = std::move(st.left);
	out.left_inv = std::move(st.left_inv);
	out.right = std::move(st.right);
	out.right_inv = std::move(st.right_inv);

	for (std::size_t i = 1; i < out.invariant_factors.size(); ++i)
		if (!out.invariant_factors[i - 1].divides(out.invariant_factors[i]))
			throw internal_error("Smith normal form divisibility chain violated");
	return out;
}

} // namespace

smith_form smith_normal_form(const fu_matrix& m) {
	smith_form out = smith_reduce(m, snf_options{});
	if (!(out.left * m * out.right == out.diagonal(m.rows(), m.cols())))
		throw internal_error("Smith normal form transforms failed verification");
	return out;
}

/* **************************************************************************
 * chain_complex
 * *************************************************************************/

void chain_complex::set_generators(int degree, std::vector<std::string> labels,
                                   std::optional<std::vector<int>> gradings) {
	if (gradings && gradings->size() != labels.size())
		throw internal_error("grading list does not match generator count");
	if (labels.empty()) return;
	labels_[degree] = std::move(labels);
	gradings_[degree] = std::move(gradings);
}

void chain_complex::set_differential(int degree, fu_matrix d) {
	if (d.rows() != rank(degree - 1) || d.cols() != rank(degree))
		throw internal_error("differential shape mismatch");
	diffs_[degree] = std::move(d);
}

std::size_t chain_complex::rank(int degree) const {
	auto it = labels_.find(degree);
	return it == labels_.end() ? 0 : it->second.size();
}

std::size_t chain_complex::total_rank() const {
	std::size_t n = 0;
	for (const auto& [d, l] : labels_) n += l.size();
	return n;
}

const std::vector<std::string>& chain_complex::labels(int degree) const {
	static const std::vector<std::string> empty;
	auto it = labels_.find(degree);
	return it == labels_.end() ? empty : it->second;
}

const std::optional<std::vector<int>>& chain_complex::gradings(int degree) const {
	static const std::optional<std::vector<int>> none;
	auto it = gradings_.find(degree);
	return it == gradings_.end() ? none : it->second;
}

fu_matrix chain_complex::differential(int degree) const {
	auto it = diffs_.find(degree);
	if (it != diffs_.end()) return it->second;
	return fu_matrix(rank(degree - 1), rank(degree));
}

std::vector<int> chain_complex::degrees() const {
	std::vector<int> out;
	for (const auto& [d, l] : labels_) out.push_back(d);
	return out;
}

void chain_complex::require_valid() const {
	for (const auto& [k, d] : diffs_) {
		if (d.rows() != rank(k - 1) || d.cols() != rank(k))
			throw invalid_input_error("differential shape mismatch in chain complex");
		auto next = diffs_.find(k + 1);
		if (next != diffs_.end() && !(d * next->second).is_zero())
			throw invalid_input_error("differential does not square to zero");
	}
}

/* **************************************************************************
 * homology
 * *************************************************************************/

homology_decomposition homology(const chain_complex& c) {
	c.require_valid();

	homology_decomposition out;
	for (int k : c.degrees()) {
		std::size_t rk = c.rank(k);
		fu_matrix dk = c.differential(k);
		snf_options kernel_opts;
		kernel_opts.with_left = false; // only the column data feeds the kernel
		smith_form sk = smith_reduce(dk, kernel_opts);
		std::size_t rho = sk.rank;
		std::size_t nu = rk - rho; // rank of ker d_k
		if (nu == 0) continue;

		// Columns rho.. of sk.right span ker d_k as a direct summand, so
		// the image of d_{k+1} has unique polynomial coordinates there.
		fu_matrix din = c.differential(k + 1);
		fu_matrix rel(nu, din.cols());
		if (din.cols() > 0) {
			fu_matrix coords = sk.right_inv * din;
			for (std::size_t i = 0; i < rho; ++i)
				for (std::size_t j = 0; j < din.cols(); ++j)
					if (!coords.at(i, j).is_zero())
						throw internal_error("image of the differential lies outside the kernel");
			for (std::size_t i = 0; i < nu; ++i)
				for (std::size_t j = 0; j < din.cols(); ++j)
					rel.at(i, j) = coords.at(rho + i, j);
		}

		snf_options factor_opts;
		factor_opts.with_left = false;
		factor_opts.with_right = false;
		factor_opts.with_inverses = false;
		smith_form sr = smith_reduce(rel, factor_opts);
		homology_decomposition::degree_part part;
		part.degree = k;
		part.free_rank = nu - sr.rank;
		for (const upoly& f : sr.invariant_factors) {
			int d = f.degree();
			if (d == 0) continue; // unit factor
			if (!f.is_monomial())
				throw invalid_input_error("non-monomial torsion: invariant factor " +
				                          f.to_string() + " is not a power of U");
			part.torsion_exponents.push_back(static_cast<unsigned>(d));
		}
		std::sort(part.torsion_exponents.begin(), part.torsion_exponents.end());

		out.free_rank += part.free_rank;
		out.torsion_exponents.insert(out.torsion_exponents.end(),
		                             part.torsion_exponents.begin(),
		                             part.torsion_exponents.end());
		if (part.free_rank > 0 || !part.torsion_exponents.empty())
			out.by_degree.push_back(std::move(part));
	}
	std::sort(out.torsion_exponents.begin(), out.torsion_exponents.end());
	return out;
}

unsigned torsion_order(const homology_decomposition& h) {
	return h.torsion_exponents.empty() ? 0u : h.torsion_exponents.back();
}

} // namespace ordu
