// Runs every acceptance criterion and prints one PASS/FAIL line per
// criterion.  Exit status is nonzero when any criterion fails.

#include "corpus.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <iomanip>
#include <iostream>
#include <sstream>

using namespace ribbonlie;

namespace {

// Collects failed sub-checks of one criterion.
struct Tally {
	std::size_t checks = 0;
	std::vector<std::string> failures;

	void expect(bool ok, std::string const &what)
	{
		++checks;
		if (!ok && failures.size() < 20)
			failures.push_back(what);
		else if (!ok)
			failures.back() = "(further failures omitted)";
	}
};

struct Criterion {
	int number;
	std::string title;
	double time_limit;
	std::function<void(Tally &)> run;
};

Vector vec(std::initializer_list<long> xs)
{
	Vector v;
	for (long x : xs)
		v.push_back(Cyclotomic(1, Rational(x)));
	return v;
}

Cyclotomic bilinear(Matrix const &gram, Vector const &x, Vector const &y)
{
	Cyclotomic sum = Cyclotomic::zero(x.empty() ? 1 : x.front().order());
	for (std::size_t i = 0; i < x.size(); ++i)
		for (std::size_t j = 0; j < y.size(); ++j)
			sum += x[i] * gram[i][j] * y[j];
	return sum;
}

void gl_cross_check(Tally &t)
{
	auto const ctx = CategoryContext::trivial();
	for (std::size_t n : {2u, 3u}) {
		auto const u = corpus::trivial_object(n);
		auto const k = killing_form(ctx, commutator(ctx, matrix_algebra(ctx, u).algebra));
		auto const closed = matrix_algebra_killing_closed_form(ctx, u);
		auto const tag = "gl" + std::to_string(n);
		t.expect(k.pairing == closed, tag + ": killing_form != closed form");
		t.expect(gram_matrix(closed) == corpus::gl_trace_formula(n), tag + ": closed form != 2n tr(XY) - 2 tr X tr Y");
		t.expect(corpus::gl_killing_oracle(n) == k.gram, tag + ": brute-force oracle disagrees");
	}
}

void gl_decomposition(Tally &t)
{
	auto const ctx = CategoryContext::trivial();
	for (std::size_t n : {2u, 3u}) {
		auto const u = corpus::trivial_object(n);
		auto const a = matrix_algebra(ctx, u);
		auto const s = split_unit_ideal(ctx, a.algebra, a.counit);
		auto const tag = "n = " + std::to_string(n);
		t.expect(s.unit.object.dim() == 1 && s.complement.object.dim() == n * n - 1, tag + ": part dimensions");
		t.expect(s.unit_ideal.ok(), tag + ": unit is not an abelian retract ideal");
		auto const sub = induced_bracket(ctx, commutator(ctx, a.algebra), s.complement);
		auto const k = killing_form(ctx, sub);
		t.expect(k.pairing == restricted_killing_closed_form(ctx, u), tag + ": restricted form != closed form");
		if (n != 2)
			continue;
		// e = E01, h = E00 - E11, f = E10 in complement coordinates
		auto const &r = s.complement.project;
		std::vector<Vector> const basis{r.apply(vec({0, 1, 0, 0})), r.apply(vec({1, 0, 0, -1})),
		                                r.apply(vec({0, 0, 1, 0}))};
		std::vector<std::vector<long>> const expected{{0, 0, 4}, {0, 8, 0}, {4, 0, 0}};
		for (std::size_t i = 0; i < 3; ++i)
			for (std::size_t j = 0; j < 3; ++j)
				t.expect(bilinear(k.gram, basis[i], basis[j]) == ctx.scalar(expected[i][j]),
				         "sl2 gram entry (" + std::to_string(i) + ", " + std::to_string(j) + ")");
	}
}

void super_dichotomy(Tally &t)
{
	auto const tw = CategoryContext::super_vect(SuperStructure::twisted);
	auto const st = CategoryContext::super_vect(SuperStructure::supertrace);
	auto const s = corpus::z2_object({1});
	t.expect(trace_right(tw, identity(tw, s)).is_one(), "dim(S) = 1 under the first structure");
	t.expect(trace_right(st, identity(st, s)) == st.scalar(-1), "dim(S) = -1 under the supertrace structure");

	auto const l = corpus::gl11(st);
	auto const k = killing_form(st, l);
	auto const oracle = corpus::killing_oracle(st, l, true);
	t.expect(corpus::entries_equal(k.gram, oracle), "gl(1|1) gram != brute-force oracle");
	std::vector<std::vector<Rational>> rows;
	for (auto const &row : oracle) {
		rows.emplace_back();
		for (auto const &x : row)
			rows.back().push_back(x.rational_part());
	}
	auto const radical = corpus::rational_null_space(rows);
	t.expect(!radical.empty(), "oracle radical of gl(1|1) is zero");
	auto const nd = nondegenerate(st, k);
	t.expect(!nd.ok() && nd.radical.dim() >= 1, "gl(1|1) supertrace form reported non-degenerate");
	t.expect(nd.radical.dim() == radical.size(), "radical dimension disagrees with the oracle");
}

void identity_suite(Tally &t)
{
	std::vector<std::pair<std::string, CategoryContext>> const contexts{
	    {"trivial", corpus::trivial()},
	    {"Z2 twisted", corpus::super(SuperStructure::twisted)},
	    {"Z2 supertrace", corpus::super(SuperStructure::supertrace)},
	    {"Z2xZ2", corpus::klein()},
	    {"Z2xZ2 mixed", corpus::klein_mixed()},
	};
	for (auto const &[name, ctx] : contexts) {
		corpus::Rng rng(2024);
		std::size_t morphisms = 0;
		for (int trial = 0; trial < 45; ++trial) {
			auto const tag = name + " trial " + std::to_string(trial) + ": ";
			auto const u = corpus::random_object(ctx, rng, 1, 3);
			auto const v = corpus::random_object(ctx, rng, 1, 3);
			auto const ud = dual(ctx, u);
			auto const id = identity(ctx, u);
			auto const idd = identity(ctx, ud);
			auto const th = twist(ctx, u);

			t.expect(compose(tensor(ctx, id, evaluation(ctx, u)), tensor(ctx, coevaluation(ctx, u), id)) == id,
			         tag + "right zigzag on U");
			t.expect(compose(tensor(ctx, evaluation(ctx, u), idd), tensor(ctx, idd, coevaluation(ctx, u))) == idd,
			         tag + "right zigzag on U^v");
			t.expect(compose(tensor(ctx, left_evaluation(ctx, u), id), tensor(ctx, id, left_coevaluation(ctx, u))) ==
			             id,
			         tag + "left zigzag on U");
			t.expect(compose(tensor(ctx, idd, left_evaluation(ctx, u)), tensor(ctx, left_coevaluation(ctx, u), idd)) ==
			             idd,
			         tag + "left zigzag on ^vU");
			t.expect(compose(braiding(ctx, v, u), braiding(ctx, u, v)) == identity(ctx, tensor(ctx, u, v)),
			         tag + "c^2 = id");
			t.expect(compose(th, th) == id, tag + "theta^2 = id");
			t.expect(twist(ctx, tensor(ctx, u, v)) ==
			             compose_all({tensor(ctx, th, twist(ctx, v)), braiding(ctx, v, u), braiding(ctx, u, v)}),
			         tag + "theta on U (x) V");
			t.expect(compose_all({tensor(ctx, id, left_evaluation(ctx, u)),
			                      tensor(ctx, braiding(ctx, u, u), sovereign(ctx, u)),
			                      tensor(ctx, id, coevaluation(ctx, u))}) == th,
			         tag + "theta from sigma");

			auto const f = corpus::random_morphism(ctx, u, v, rng);
			auto const g = corpus::random_morphism(ctx, v, u, rng);
			t.expect(compose(dual_left(ctx, f), sovereign(ctx, v)) == compose(sovereign(ctx, u), dual_right(ctx, f)),
			         tag + "sigma natural (fvvf)");
			t.expect(compose(twist(ctx, v), f) == compose(f, th), tag + "theta natural");
			t.expect(trace_right(ctx, compose(g, f)) == trace_right(ctx, compose(f, g)), tag + "trace cyclic");

			// tr_2 f o theta = tr_2 f
			auto const h = corpus::random_morphism(ctx, tensor(ctx, v, u), u, rng);
			auto const tr2 = partial_trace(ctx, h, v);
			t.expect(compose(tr2, twist(ctx, v)) == tr2, tag + "partial trace absorbs theta");

			// cyclicity of the partial trace up to braiding and twist
			auto const x = corpus::random_object(ctx, rng, 1, 2);
			auto const y = corpus::random_object(ctx, rng, 1, 2);
			auto const p = corpus::random_morphism(ctx, tensor(ctx, u, x), y, rng);
			auto const q = corpus::random_morphism(ctx, tensor(ctx, v, y), x, rng);
			auto const uv = tensor(ctx, u, v);
			auto const lhs = partial_trace(ctx, compose(p, tensor(ctx, id, q)), uv);
			auto const swap = compose(braiding(ctx, u, v), tensor(ctx, th, identity(ctx, v)));
			auto const rhs = partial_trace(
			    ctx, compose_all({q, tensor(ctx, identity(ctx, v), p), tensor(ctx, swap, identity(ctx, x))}), uv);
			t.expect(lhs == rhs, tag + "partial trace cyclic");
			morphisms += 5;
		}
		t.expect(morphisms >= 200, name + ": fewer than 200 random morphisms");
	}
}

void lie_propositions(Tally &t)
{
	for (auto const &entry : corpus::lie_corpus()) {
		auto const &ctx = entry.ctx;
		auto const &l = entry.algebra;
		auto const tag = entry.name + ": ";
		t.expect(check_antisymmetry(ctx, l).ok(), tag + "antisymmetry");
		t.expect(check_jacobi(ctx, l).ok(), tag + "jacobi");
		auto const k = killing_form(ctx, l);
		auto const sym = check_symmetric(ctx, k);
		t.expect(sym.equations.at(0).holds, tag + "kappa symmetric");
		t.expect(sym.equations.at(1).holds, tag + "kappa_0 twisted symmetry");
		t.expect(check_invariant(ctx, k).ok(), tag + "kappa invariant");
		if (is_derived_nilpotent(l))
			t.expect(is_solvable(l), tag + "derived nilpotent but not solvable");
		if (is_nilpotent(l))
			t.expect(is_solvable(l), tag + "nilpotent but not solvable");
	}
	// the commutator of every associative corpus algebra
	for (auto const &[name, ctx] : corpus::identity_contexts()) {
		corpus::Rng rng(3);
		for (int i = 0; i < 4; ++i) {
			auto const a = matrix_algebra(ctx, corpus::random_object(ctx, rng, 1, 3)).algebra;
			t.expect(check_lie_axioms(ctx, commutator(ctx, a)).ok(), name + ": commutator of A_U");
		}
	}
	auto const tr = CategoryContext::trivial();
	t.expect(check_lie_axioms(tr, commutator(tr, corpus::z2_group_bialgebra().algebra)).ok(),
	         "commutator of the Z2 group algebra");
}

void decomposition(Tally &t)
{
	auto const ctx = CategoryContext::trivial();
	auto const l = corpus::sum_of(ctx, {corpus::sl2(), corpus::sl(3)});
	auto const d = decompose(ctx, l);
	std::vector<std::size_t> dims;
	for (auto const &p : d.parts)
		dims.push_back(p.algebra.dim());
	std::sort(dims.begin(), dims.end());
	t.expect(dims == std::vector<std::size_t>{3, 8}, "sl2 + sl3 parts are not {3, 8}");
	t.expect(d.verification.ok(), "decomposition verification");
	auto sum = zero_morphism(ctx, tensor(ctx, l.carrier(), l.carrier()), l.carrier());
	for (auto const &p : d.parts)
		sum += compose_all({p.retract.embed, p.algebra.bracket(), tensor(ctx, p.retract.project, p.retract.project)});
	t.expect(sum == l.bracket(), "reassembled bracket differs");

	t.expect(decompose(ctx, corpus::sl2()).parts.size() == 1, "sl2 is not a single part");
	try {
		decompose(ctx, corpus::gl(2));
		t.expect(false, "gl2 decomposed despite a degenerate form");
	} catch (DegenerateKillingForm const &e) {
		t.expect(e.radical == Subspace::span(corpus::gl(2).carrier(), 1, {vec({1, 0, 0, 1})}),
		         "gl2 radical is not the identity direction");
	}

	for (auto const &entry : corpus::lie_corpus()) {
		auto const k = killing_form(entry.ctx, entry.algebra);
		if (nondegenerate(entry.ctx, k).ok())
			t.expect(check_abelian_ideal_lemma(entry.ctx, entry.algebra, k).verdict == Verdict::holds,
			         entry.name + ": abelian ideal lemma");
		auto const v = check_zero_or_nondegenerate(entry.ctx, entry.algebra).verdict;
		t.expect(v != Dichotomy::violated, entry.name + ": dichotomy violated");
		auto const expect = [&](std::string const &name, Dichotomy want) {
			if (entry.name == name)
				t.expect(v == want, name + ": dichotomy verdict " + to_string(v));
		};
		expect("heisenberg", Dichotomy::zero);
		expect("abelian(1)", Dichotomy::zero);
		expect("sl2", Dichotomy::nondegenerate);
		expect("sl3", Dichotomy::nondegenerate);
	}
}

void dsl_agreement(Tally &t)
{
	std::size_t total = 0;
	for (auto const &[name, ctx] : corpus::identity_contexts()) {
		corpus::Rng rng(500 + total);
		for (int i = 0; i < 12; ++i) {
			auto const ws = corpus::expression_workspace(ctx, rng);
			auto const r = corpus::random_expr(ws, rng, 6);
			t.expect(eval_expr(parse_expr(r.text, ws), ws) == r.expected, name + ": " + r.text);
			++total;
		}
	}
	t.expect(total >= 50, "fewer than 50 random expressions");

	auto const ctx = CategoryContext::trivial();
	auto const sl2 = corpus::sl2();
	Workspace ws;
	ws.objects["L"] = sl2.carrier();
	ws.objects["LL"] = tensor(ctx, sl2.carrier(), sl2.carrier());
	ws.morphisms["br"] = NamedMorphism{"LL", "L", sl2.bracket()};
	auto const longhand = "(id(L) * id(L) * coev(L)) ; (((id(L) * br) ; br ; theta(L)) * sigma(L)) ; lev(L)";
	t.expect(eval_expr(parse_expr(longhand, ws), ws) == killing_form(ctx, sl2).pairing,
	         "Killing form longhand differs");
}

void primitive_elements(Tally &t)
{
	auto const tr = CategoryContext::trivial();
	auto const group = corpus::z2_group_bialgebra();
	t.expect(check_bialgebra(tr, group).ok(), "Z2 group algebra is not a bialgebra");
	t.expect(primitives(tr, group).subspace.is_zero(), "Z2 group algebra has primitives");
	t.expect(corpus::primitive_oracle(tr, group).empty(), "oracle finds Z2 primitives");

	auto const sv = CategoryContext::super_vect(SuperStructure::twisted);
	auto const ext = corpus::dual_numbers(sv, 1);
	t.expect(check_bialgebra(sv, ext).ok(), "Q[x]/(x^2) is not a bialgebra");
	auto const p = primitives(sv, ext);
	auto const oracle = corpus::primitive_oracle(sv, ext);
	t.expect(oracle.size() == 1 && oracle[0] == std::vector<Rational>{0, 1}, "oracle primitives are not span(x)");
	t.expect(p.subspace == Subspace::span(ext.algebra.carrier, sv.order(), {Vector{sv.zero_scalar(), sv.one()}}),
	         "primitives are not span(x)");
	t.expect(p.bracket.is_zero(), "bracket on primitives is not abelian");
	t.expect(p.closure.ok(), "primitives not closed under the bracket");
}

} // namespace

int main()
{
	std::vector<Criterion> const criteria{
	    {1, "gl_n Killing form equals the closed form and the trace formula", 5.0, gl_cross_check},
	    {2, "gl_n = 1 + sl_n with the restricted closed form", 0.0, gl_decomposition},
	    {3, "super dimensions and the degenerate gl(1|1) form", 0.0, super_dichotomy},
	    {4, "randomized identity suite", 60.0, identity_suite},
	    {5, "Lie propositions on the algebra corpus", 0.0, lie_propositions},
	    {6, "decomposition, abelian ideal lemma and dichotomy", 0.0, decomposition},
	    {7, "DSL agrees with library composites", 0.0, dsl_agreement},
	    {8, "primitive elements", 0.0, primitive_elements},
	};

	int failed = 0;
	for (auto const &c : criteria) {
		Tally t;
		auto const start = std::chrono::steady_clock::now();
		std::string error;
		try {
			c.run(t);
		} catch (std::exception const &e) {
			error = e.what();
		}
		double const secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
		bool const slow = c.time_limit > 0 && secs >= c.time_limit;
		bool const ok = t.failures.empty() && error.empty() && !slow;
		failed += ok ? 0 : 1;

		std::ostringstream line;
		line << (ok ? "PASS" : "FAIL") << " criterion " << c.number << ": " << c.title << " (" << t.checks
		     << " checks, " << std::fixed << std::setprecision(2) << secs << " s";
		if (c.time_limit > 0)
			line << ", limit " << std::setprecision(0) << c.time_limit << " s";
		line << ")";
		std::cout << line.str() << "\n";
		if (!error.empty())
			std::cout << "  exception: " << error << "\n";
		if (slow)
			std::cout << "  over the time limit\n";
		for (auto const &f : t.failures)
			std::cout << "  " << f << "\n";
	}
	std::cout << (criteria.size() - failed) << "/" << criteria.size() << " criteria passed\n";
	return failed == 0 ? 0 : 1;
}
