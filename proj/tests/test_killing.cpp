#include "corpus.hpp"

#include <doctest.h>

using namespace ribbonlie;

namespace {

Matrix ints(std::vector<std::vector<long>> const &rows, int order = 1)
{
	Matrix m;
	for (auto const &row : rows) {
		Vector v;
		for (long x : row)
			v.push_back(Cyclotomic(order, Rational(x)));
		m.push_back(std::move(v));
	}
	return m;
}

bool all_zero(Matrix const &m)
{
	for (auto const &row : m)
		for (auto const &x : row)
			if (!x.is_zero())
				return false;
	return true;
}

// Sum of e_i o l_i o (r_i (x) r_i) over the parts.
GMorphism reassembled_bracket(CategoryContext const &ctx, LieAlgebra const &l, Decomposition const &d)
{
	auto out = zero_morphism(ctx, tensor(ctx, l.carrier(), l.carrier()), l.carrier());
	for (auto const &part : d.parts)
		out += compose_all({part.retract.embed, part.algebra.bracket(),
		                    tensor(ctx, part.retract.project, part.retract.project)});
	return out;
}

std::vector<std::size_t> part_dims(Decomposition const &d)
{
	std::vector<std::size_t> out;
	for (auto const &p : d.parts)
		out.push_back(p.algebra.dim());
	return out;
}

} // namespace

TEST_CASE("Killing forms against the structure-constant oracle")
{
	for (auto const &entry : corpus::lie_corpus()) {
		CAPTURE(entry.name);
		auto const k = killing_form(entry.ctx, entry.algebra);
		CHECK(corpus::entries_equal(k.gram, corpus::killing_oracle(entry.ctx, entry.algebra, true)));
		CHECK(gram_matrix(k.pairing) == k.gram);
		auto const k0 = killing_form_naive(entry.ctx, entry.algebra);
		CHECK(corpus::entries_equal(k0.gram, corpus::killing_oracle(entry.ctx, entry.algebra, false)));
		// grade preservation
		auto const &l = entry.algebra.carrier();
		for (std::size_t i = 0; i < l.dim(); ++i)
			for (std::size_t j = 0; j < l.dim(); ++j)
				if (entry.ctx.group().add(l.grade(i), l.grade(j)) != entry.ctx.group().zero())
					CHECK(k.gram[i][j].is_zero());
	}
}

TEST_CASE("classical Killing forms")
{
	auto const t = CategoryContext::trivial();
	CHECK(killing_form(t, corpus::sl2()).gram == ints({{0, 0, 4}, {0, 8, 0}, {4, 0, 0}}));
	CHECK(killing_form(t, corpus::abelian(t, 2)).pairing.is_zero());
	CHECK(killing_form(t, corpus::heisenberg()).pairing.is_zero());
	for (std::size_t n : {2u, 3u}) {
		auto const k = killing_form(t, corpus::gl(n));
		CHECK(k.gram == corpus::gl_killing_oracle(n));
		CHECK(k.gram == corpus::gl_trace_formula(n));
	}
	for (auto const &entry : corpus::lie_corpus())
		if (entry.ctx == t)
			CHECK(killing_form(t, entry.algebra).pairing == killing_form_naive(t, entry.algebra).pairing);
}

TEST_CASE("gl(1|1) in both ribbon structures")
{
	for (auto s : {SuperStructure::twisted, SuperStructure::supertrace}) {
		auto const ctx = CategoryContext::super_vect(s);
		auto const l = corpus::gl11(ctx);
		auto const k = killing_form(ctx, l);
		CHECK(rank(k.gram) <= 1);
		CHECK(check_symmetric(ctx, k).ok());
		CHECK(check_invariant(ctx, k).ok());
		// supersymmetry kappa(y, x) = (-1)^(|x||y|) kappa(x, y)
		for (std::size_t x = 0; x < 4; ++x)
			for (std::size_t y = 0; y < 4; ++y) {
				int const sign = l.carrier().grade(x)[0] * l.carrier().grade(y)[0] ? -1 : 1;
				CHECK(k.gram[y][x] == ctx.scalar(sign) * k.gram[x][y]);
			}
	}
	// with theta_S = -1 the naive form differs from kappa
	auto const tw = CategoryContext::super_vect(SuperStructure::twisted);
	auto const l = corpus::gl11(tw);
	CHECK(killing_form(tw, l).gram != killing_form_naive(tw, l).gram);
	CHECK(check_symmetric(tw, killing_form_naive(tw, l)).ok());
}

TEST_CASE("closed form on matrix algebras")
{
	for (auto const &[name, ctx] : corpus::identity_contexts()) {
		CAPTURE(name);
		corpus::Rng rng(77);
		std::vector<GObject> objects{GObject::unit(ctx)};
		for (int i = 0; i < 4; ++i)
			objects.push_back(corpus::random_object(ctx, rng, 1, 3));
		for (auto const &u : objects) {
			CAPTURE(format_object(u));
			auto const a = matrix_algebra(ctx, u);
			auto const l = commutator(ctx, a.algebra);
			auto const k = killing_form(ctx, l);
			CHECK(k.pairing == matrix_algebra_killing_closed_form(ctx, u));
			if (dimension(ctx, u).is_zero()) {
				CHECK_THROWS_AS(restricted_killing_closed_form(ctx, u), UnitDoesNotSplit);
				continue;
			}
			auto const split = split_unit_ideal(ctx, a.algebra, a.counit);
			auto const sub = induced_bracket(ctx, l, split.complement);
			auto const &e = split.complement.embed;
			auto const ksub = killing_form(ctx, sub).pairing;
			// the unit is a central ideal, so restriction commutes with taking kappa
			CHECK(ksub == compose(k.pairing, tensor(ctx, e, e)));
			// the short form drops the cap term, which vanishes on A_U' exactly
			// when theta is a scalar on U
			bool homogeneous = true;
			for (auto const &g : u.grades())
				homogeneous = homogeneous && ctx.theta(g) == ctx.theta(u.grade(0));
			auto const cap = compose(left_evaluation(ctx, u),
			                         tensor(ctx, identity(ctx, u),
			                                compose(sovereign(ctx, u), twist(ctx, dual(ctx, u)))));
			auto const cap_e = compose(cap, e);
			CHECK(cap_e.is_zero() == homogeneous);
			auto const short_form = restricted_killing_closed_form(ctx, u);
			CHECK((ksub == short_form) == homogeneous);
			CHECK(ksub == short_form - ctx.scalar(2) * tensor(ctx, cap_e, cap_e));
		}
	}
	auto const t = CategoryContext::trivial();
	CHECK(matrix_algebra_killing_closed_form(t, GObject::unit(t)).is_zero());
	CHECK(restricted_killing_closed_form(t, GObject::unit(t)).src().dim() == 0);

	// sl_n: 2n tr(XY) on the complement of the unit
	for (std::size_t n : {2u, 3u}) {
		auto const a = matrix_algebra(t, corpus::trivial_object(n));
		auto const e = split_unit_ideal(t, a.algebra, a.counit).complement.embed.to_dense();
		Matrix trace(n * n, zero_vector(n * n, 1));
		for (std::size_t x = 0; x < n * n; ++x)
			for (std::size_t y = 0; y < n * n; ++y)
				if (x % n == y / n && x / n == y % n)
					trace[x][y] = t.scalar(long(2 * n));
		auto const expected = multiply(multiply(transpose(e), trace), e);
		CHECK(gram_matrix(restricted_killing_closed_form(t, corpus::trivial_object(n))) == expected);
	}
	// U = S in super vector spaces
	for (auto s : {SuperStructure::twisted, SuperStructure::supertrace}) {
		auto const ctx = CategoryContext::super_vect(s);
		auto const u = corpus::z2_object({1});
		CHECK(killing_form(ctx, commutator(ctx, matrix_algebra(ctx, u).algebra)).pairing ==
		      matrix_algebra_killing_closed_form(ctx, u));
	}
	auto const st = CategoryContext::super_vect(SuperStructure::supertrace);
	CHECK_THROWS_AS(restricted_killing_closed_form(st, corpus::z2_object({0, 1})), UnitDoesNotSplit);
}

TEST_CASE("symmetry, invariance and twist covariance")
{
	for (auto const &entry : corpus::lie_corpus()) {
		CAPTURE(entry.name);
		auto const &ctx = entry.ctx;
		auto const k = killing_form(ctx, entry.algebra);
		CHECK(check_symmetric(ctx, k).ok());
		CHECK(check_invariant(ctx, k).ok());
		CHECK(check_symmetric(ctx, killing_form_naive(ctx, entry.algebra)).ok());
		auto const th = twist(ctx, entry.algebra.carrier());
		CHECK(compose(k.pairing, tensor(ctx, th, th)) == k.pairing);
	}

	auto const t = CategoryContext::trivial();
	auto k = killing_form(t, corpus::sl2());
	k.pairing.add_to(0, 1, t.one()); // kappa(e, h) = 1, kappa(h, e) = 0
	k.gram = gram_matrix(k.pairing);
	CHECK_FALSE(check_symmetric(t, k).ok());

	auto bad = corpus::sl2().bracket();
	bad.add_to(0, 2, t.one());
	bad.add_to(0, 6, -t.one());
	auto const p = LieAlgebra::unchecked(t, corpus::trivial_object(3), bad);
	CHECK_FALSE(check_invariant(t, killing_form(t, p)).ok());
}

TEST_CASE("non-degeneracy and copairings")
{
	auto const t = CategoryContext::trivial();
	auto const sl2 = corpus::sl2();
	auto const k = killing_form(t, sl2);
	auto const nd = nondegenerate(t, k);
	REQUIRE(nd.ok());
	CHECK(nd.radical.is_zero());
	CHECK(nd.side_inverse.ok());
	auto const id = identity(t, sl2.carrier());
	CHECK(compose(tensor(t, k.pairing, id), tensor(t, id, *nd.copairing)) == id);
	CHECK(compose(tensor(t, id, k.pairing), tensor(t, *nd.copairing, id)) == id);
	// kappa^- is the inverse Gram matrix: e (x) f and f (x) e with 1/4, h (x) h with 1/8
	CHECK(nd.copairing->at(0 * 3 + 2, 0) == t.scalar(Rational(1, 4)));
	CHECK(nd.copairing->at(1 * 3 + 1, 0) == t.scalar(Rational(1, 8)));

	auto const ab = corpus::abelian(t, 2);
	auto const nab = nondegenerate(t, killing_form(t, ab));
	CHECK_FALSE(nab.ok());
	CHECK(nab.radical.dim() == 2);

	for (std::size_t n : {2u, 3u}) {
		auto const gl = corpus::gl(n);
		auto const ngl = nondegenerate(t, killing_form(t, gl));
		CHECK_FALSE(ngl.ok());
		REQUIRE(ngl.radical.dim() == 1);
		Vector identity_matrix = zero_vector(n * n, 1);
		for (std::size_t i = 0; i < n; ++i)
			identity_matrix[i * n + i] = t.one();
		CHECK(ngl.radical.contains(identity_matrix));
	}

	for (auto const &entry : corpus::lie_corpus()) {
		CAPTURE(entry.name);
		auto const &ctx = entry.ctx;
		auto const kf = killing_form(ctx, entry.algebra);
		auto const n = nondegenerate(ctx, kf);
		CHECK(n.ok() == (rank(kf.gram) == entry.algebra.dim()));
		CHECK(n.radical.dim() + rank(kf.gram) == entry.algebra.dim());
		if (n.ok()) {
			auto const i = identity(ctx, entry.algebra.carrier());
			CHECK(n.side_inverse.ok());
			CHECK(compose(tensor(ctx, kf.pairing, i), tensor(ctx, i, *n.copairing)) == i);
			CHECK(compose(tensor(ctx, i, kf.pairing), tensor(ctx, *n.copairing, i)) == i);
		}
	}
}

TEST_CASE("the adjoint idempotent cuts out the orthogonal complement")
{
	auto const t = CategoryContext::trivial();
	for (auto const &l : {corpus::sum_of(t, {corpus::sl2(), corpus::sl(3)}),
	                      corpus::sum_of(t, {corpus::sl2(), corpus::sl2()})}) {
		auto const k = killing_form(t, l);
		auto const nd = nondegenerate(t, k);
		REQUIRE(nd.ok());
		auto const m = minimal_ideal(t, l, Subspace::whole(t, l.carrier()));
		auto const p = m.retract().idempotent();
		auto const hat = adjoint_idempotent(t, k.pairing, *nd.copairing, p);
		CHECK(compose(hat, hat) == hat);
		auto const perp = orthogonal_complement(k, m);
		CHECK(null_space(hat) == perp);
		CHECK(perp.dim() + m.dim() == l.dim());
		CHECK(perp.intersect(m).is_zero());
		CHECK(is_ideal(l, perp));
	}
}

TEST_CASE("abelian ideal lemma")
{
	auto const t = CategoryContext::trivial();
	auto const sl2 = corpus::sl2();
	CHECK(check_abelian_ideal_lemma(t, sl2, killing_form(t, sl2)).verdict == Verdict::holds);
	auto const s22 = corpus::sum_of(t, {sl2, sl2});
	CHECK(check_abelian_ideal_lemma(t, s22, killing_form(t, s22)).verdict == Verdict::holds);
	auto const gl2 = corpus::gl(2);
	CHECK(check_abelian_ideal_lemma(t, gl2, killing_form(t, gl2)).verdict == Verdict::inapplicable);
	CHECK(to_string(Verdict::holds) == "holds");
}

TEST_CASE("decomposition into indecomposable ideals")
{
	auto const t = CategoryContext::trivial();
	auto const sl2 = corpus::sl2();
	auto const d1 = decompose(t, sl2);
	REQUIRE(d1.parts.size() == 1);
	CHECK(d1.parts[0].algebra.bracket() == sl2.bracket());
	CHECK(d1.verification.ok());

	std::vector<std::pair<LieAlgebra, std::vector<std::size_t>>> const cases{
	    {corpus::sum_of(t, {sl2, sl2}), {3, 3}},
	    {corpus::sum_of(t, {sl2, corpus::sl(3)}), {3, 8}},
	    // the smaller minimal ideal is split off first, wherever it sits
	    {corpus::sum_of(t, {corpus::sl(3), sl2}), {3, 8}},
	    {corpus::sum_of(t, {sl2, sl2, sl2}), {3, 3, 3}},
	};
	for (auto const &[l, dims] : cases) {
		auto const d = decompose(t, l);
		CHECK(part_dims(d) == dims);
		CHECK(d.verification.ok());
		CHECK(reassembled_bracket(t, l, d) == l.bracket());
		auto const k = killing_form(t, l);
		GMorphism sum = zero_morphism(t, l.carrier(), l.carrier());
		for (std::size_t i = 0; i < d.parts.size(); ++i) {
			auto const &pi = d.parts[i];
			CHECK(compose(pi.retract.project, pi.retract.embed) == identity(t, pi.algebra.carrier()));
			sum += pi.retract.idempotent();
			auto const ki = killing_form(t, pi.algebra);
			CHECK(compose(k.pairing, tensor(t, pi.retract.embed, pi.retract.embed)) == ki.pairing);
			CHECK(nondegenerate(t, ki).ok());
			CHECK_FALSE(is_solvable(pi.algebra));
			for (std::size_t j = 0; j < d.parts.size(); ++j) {
				if (i == j)
					continue;
				auto const &pj = d.parts[j];
				CHECK(compose(k.pairing, tensor(t, pi.retract.embed, pj.retract.embed)).is_zero());
				CHECK(compose(l.bracket(), tensor(t, pi.retract.idempotent(), pj.retract.idempotent()))
				          .is_zero());
			}
		}
		CHECK(sum == identity(t, l.carrier()));
		// deterministic
		auto const again = decompose(t, l);
		for (std::size_t i = 0; i < d.parts.size(); ++i)
			CHECK(again.parts[i].retract.embed == d.parts[i].retract.embed);
	}

	try {
		decompose(t, corpus::gl(2));
		FAIL("gl2 has a degenerate Killing form");
	} catch (DegenerateKillingForm const &e) {
		CHECK(e.radical.dim() == 1);
	}
	CHECK_THROWS_AS(decompose(t, corpus::heisenberg()), DegenerateKillingForm);
}

TEST_CASE("zero or non-degenerate")
{
	auto const t = CategoryContext::trivial();
	auto const r = check_zero_or_nondegenerate(t, corpus::sl2());
	CHECK(r.verdict == Dichotomy::nondegenerate);
	CHECK(r.proper_ideals.empty());

	auto const h = check_zero_or_nondegenerate(t, corpus::heisenberg());
	CHECK(h.verdict == Dichotomy::zero);
	CHECK(all_zero(h.gram));
	CHECK_FALSE(h.proper_ideals.empty());

	CHECK(check_zero_or_nondegenerate(t, corpus::abelian(t, 1)).verdict == Dichotomy::zero);

	// gl2 = 1 (+) sl2 is decomposable, which the search detects
	auto const g = check_zero_or_nondegenerate(t, corpus::gl(2));
	CHECK(g.verdict == Dichotomy::inapplicable);
	CHECK_FALSE(g.proper_ideals.empty());

	for (auto const &entry : corpus::lie_corpus()) {
		CAPTURE(entry.name);
		CHECK(check_zero_or_nondegenerate(entry.ctx, entry.algebra).verdict != Dichotomy::violated);
	}
	CHECK(to_string(Dichotomy::nondegenerate) == "nondegenerate");
}
