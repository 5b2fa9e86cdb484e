#include "ordu/knots.hpp"

#include <cctype>
#include <numeric>
#include <sstream>

#include "ordu/errors.hpp"

namespace ordu {

knot_expr knot_expr::unknot() { return knot_expr(unknot_node{}); }

knot_expr knot_expr::torus(int p, int q) {
	if (p < 1 || p >= q) throw invalid_input_error("torus knot needs 1 <= p < q");
	if (std::gcd(p, q) != 1) throw invalid_input_error("torus knot needs gcd(p,q) = 1");
	if (p == 1) return unknot();
	return knot_expr(torus_node{p, q});
}

knot_expr knot_expr::mirrored(knot_expr inner) {
	return knot_expr(mirror_node{std::make_shared<const knot_expr>(std::move(inner))});
}

knot_expr knot_expr::connected_sum(knot_expr left, knot_expr right) {
	return knot_expr(sum_node{std::make_shared<const knot_expr>(std::move(left)),
	                          std::make_shared<const knot_expr>(std::move(right))});
}

std::string knot_expr::to_string() const {
	struct visitor {
		std::string operator()(const unknot_node&) const { return "U"; }
		std::string operator()(const torus_node& t) const {
			return "T(" + std::to_string(t.p) + "," + std::to_string(t.q) + ")";
		}
		std::string operator()(const mirror_node& m) const {
			return "mirror(" + m.inner->to_string() + ")";
		}
		std::string operator()(const sum_node& s) const {
			return s.left->to_string() + " # " + s.right->to_string();
		}
	};
	return std::visit(visitor{}, node_);
}

/* **************************************************************************
 * parser
 * *************************************************************************/

namespace {

class knot_parser {
public:
	explicit knot_parser(const std::string& text) : text_(text) {}

	knot_expr parse() {
		knot_expr e = parse_expr();
		skip_ws();
		if (pos_ != text_.size()) fail("unexpected trailing input");
		return e;
	}

private:
	knot_expr parse_expr() {
		knot_expr e = parse_term();
		for (;;) {
			skip_ws();
			if (pos_ < text_.size() && text_[pos_] == '#') {
				++pos_;
				e = knot_expr::connected_sum(std::move(e), parse_term());
			} else {
				return e;
			}
		}
	}

	knot_expr parse_term() {
		skip_ws();
		if (pos_ >= text_.size()) fail("expected a knot term");
		if (text_[pos_] == 'U') {
			++pos_;
			return knot_expr::unknot();
		}
		if (text_[pos_] == 'T') {
			++pos_;
			expect('(');
			int p = parse_int();
			expect(',');
			int q = parse_int();
			expect(')');
			try {
				return knot_expr::torus(p, q);
			} catch (const invalid_input_error& e) {
				fail(e.what());
			}
		}
		if (text_.compare(pos_, 6, "mirror") == 0) {
			pos_ += 6;
			expect('(');
			knot_expr inner = parse_expr();
			expect(')');
			return knot_expr::mirrored(std::move(inner));
		}
		fail("expected 'U', 'T(p,q)' or 'mirror(...)'");
	}

	int parse_int() {
		skip_ws();
		bool neg = false;
		if (pos_ < text_.size() && text_[pos_] == '-') {
			neg = true;
			++pos_;
		}
		if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
			fail("expected an integer");
		long v = 0;
		while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
			v = v * 10 + (text_[pos_] - '0');
			if (v > 1'000'000) fail("integer out of range");
			++pos_;
		}
		return static_cast<int>(neg ? -v : v);
	}

	void expect(char c) {
		skip_ws();
		if (pos_ >= text_.size() || text_[pos_] != c)
			fail(std::string("expected '") + c + "'");
		++pos_;
	}

	void skip_ws() {
		while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
	}

	[[noreturn]] void fail(const std::string& msg) const {
		throw invalid_input_error("knot expression error at position " +
		                          std::to_string(pos_) + ": " + msg);
	}

	const std::string& text_;
	std::size_t pos_ = 0;
};

} // namespace

knot_expr parse_knot(const std::string& text) { return knot_parser(text).parse(); }

/* **************************************************************************
 * complexes and torsion order
 * *************************************************************************/

chain_complex complex_of(const knot_expr& k) {
	struct visitor {
		chain_complex operator()(const knot_expr::unknot_node&) const {
			return staircase_complex(gap_sequence{});
		}
		chain_complex operator()(const knot_expr::torus_node& t) const {
			return staircase_complex(gaps_of(lspace_exponents(torus_alexander(t.p, t.q))));
		}
		chain_complex operator()(const knot_expr::mirror_node& m) const {
			return mirror_complex(complex_of(*m.inner));
		}
		chain_complex operator()(const knot_expr::sum_node& s) const {
			return tensor_complex(complex_of(*s.left), complex_of(*s.right));
		}
	};
	return std::visit(visitor{}, k.node());
}

namespace {

unsigned order_u_recursive(const knot_expr& k) {
	struct visitor {
		unsigned operator()(const knot_expr::unknot_node&) const { return 0; }
		unsigned operator()(const knot_expr::torus_node& t) const {
			if (t.q == t.p + 1) return static_cast<unsigned>(t.p / 2);
			return torsion_order(homology(
			    staircase_complex(gaps_of(lspace_exponents(torus_alexander(t.p, t.q))))));
		}
		unsigned operator()(const knot_expr::mirror_node& m) const {
			return order_u_recursive(*m.inner);
		}
		unsigned operator()(const knot_expr::sum_node& s) const {
			return std::max(order_u_recursive(*s.left), order_u_recursive(*s.right));
		}
	};
	return std::visit(visitor{}, k.node());
}

} // namespace

unsigned order_u(const knot_expr& k) {
	homology_decomposition h = homology(complex_of(k));
	if (h.free_rank != 1)
		throw internal_error("knot complex has free rank " + std::to_string(h.free_rank) +
		                     ", expected 1 (" + k.to_string() + ")");
	unsigned direct = torsion_order(h);
	unsigned recursive = order_u_recursive(k);
	if (direct != recursive)
		throw internal_error("torsion order mismatch for " + k.to_string() + ": homology gives " +
		                     std::to_string(direct) + ", recursion gives " +
		                     std::to_string(recursive));
	return direct;
}

/* **************************************************************************
 * closed-form invariants
 * *************************************************************************/

namespace {

std::int64_t torus_signature(int p, int q) {
	// sign of each (i,j): position of (i/p + j/q + 1/2) mod 2 within
	// (0,1) vs (1,2); the boundary is never hit for coprime p, q
	std::int64_t s = 0;
	const std::int64_t period = std::int64_t{4} * p * q;
	for (int i = 1; i < p; ++i)
		for (int j = 1; j < q; ++j) {
			std::int64_t v = (std::int64_t{2} * q * i + std::int64_t{2} * p * j +
			                  std::int64_t{1} * p * q) %
			                 period;
			if (v == 0 || v == period / 2)
				throw internal_error("signature lattice count hit a wall crossing");
			s += (v < period / 2) ? 1 : -1;
		}
	return s;
}

// r with T(2r-1, 2r) == T(p, q), if any
std::optional<std::int64_t> family_index(int p, int q) {
	if (q == p + 1 && p % 2 == 1) return (p + 1) / 2;
	return std::nullopt;
}

} // namespace

std::int64_t signature(const knot_expr& k) {
	struct visitor {
		std::int64_t operator()(const knot_expr::unknot_node&) const { return 0; }
		std::int64_t operator()(const knot_expr::torus_node& t) const {
			return torus_signature(t.p, t.q);
		}
		std::int64_t operator()(const knot_expr::mirror_node& m) const {
			return -signature(*m.inner);
		}
		std::int64_t operator()(const knot_expr::sum_node& s) const {
			return signature(*s.left) + signature(*s.right);
		}
	};
	return std::visit(visitor{}, k.node());
}

std::optional<std::int64_t> upsilon(const knot_expr& k) {
	struct visitor {
		std::optional<std::int64_t> operator()(const knot_expr::unknot_node&) const {
			return 0;
		}
		std::optional<std::int64_t> operator()(const knot_expr::torus_node& t) const {
			if (auto r = family_index(t.p, t.q)) return -(*r) * (*r) + *r;
			return std::nullopt;
		}
		std::optional<std::int64_t> operator()(const knot_expr::mirror_node& m) const {
			auto v = upsilon(*m.inner);
			if (v) return -*v;
			return std::nullopt;
		}
		std::optional<std::int64_t> operator()(const knot_expr::sum_node& s) const {
			auto a = upsilon(*s.left), b = upsilon(*s.right);
			if (a && b) return *a + *b;
			return std::nullopt;
		}
	};
	return std::visit(visitor{}, k.node());
}

std::int64_t gamma4_lower_bound(const knot_expr& k) {
	auto u = upsilon(k);
	if (!u)
		throw invalid_input_error("bound unavailable: upsilon is undefined for " +
		                          k.to_string());
	std::int64_t sig = signature(k);
	if (sig % 2 != 0) throw internal_error("odd signature in gamma4 bound");
	std::int64_t bound = *u - sig / 2;
	return bound < 0 ? 0 : bound;
}

invariant_report invariants_of(const knot_expr& k) {
	invariant_report r;
	r.homology = homology(complex_of(k));
	r.order_u = order_u(k);
	r.signature = signature(k);
	r.upsilon = upsilon(k);
	if (r.upsilon) r.gamma4_lower = gamma4_lower_bound(k);
	return r;
}

} // namespace ordu
