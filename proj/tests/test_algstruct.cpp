#include "corpus.hpp"

#include <doctest.h>

using namespace ribbonlie;

namespace {

std::vector<GObject> matrix_algebra_objects(CategoryContext const &ctx)
{
	std::vector<GObject> out{GObject::unit(ctx)};
	corpus::Rng rng(31);
	for (int i = 0; i < 4; ++i)
		out.push_back(corpus::random_object(ctx, rng, 1, 3));
	return out;
}

} // namespace

TEST_CASE("associative, unital and commutative checks")
{
	auto const ctx = CategoryContext::trivial();
	auto const u = corpus::trivial_object(2);
	GMorphism zero = zero_morphism(ctx, tensor(ctx, u, u), u);
	AssocAlgebra z{u, zero, std::nullopt};
	CHECK(check_associative(ctx, z).ok());
	CHECK_FALSE(check_unital(ctx, z).ok());

	auto const g = corpus::z2_group_bialgebra().algebra;
	CHECK(check_associative(ctx, g).ok());
	CHECK(check_unital(ctx, g).ok());
	CHECK(check_commutative(ctx, g).ok());

	auto const a = matrix_algebra(ctx, u).algebra;
	CHECK_FALSE(check_commutative(ctx, a).ok());
	auto const report = check_commutative(ctx, a);
	REQUIRE(report.equations.size() == 1);
	CHECK(report.equations[0].violation.has_value());
	CHECK(report.to_string().starts_with("FAIL commutativity at ("));
}

TEST_CASE("the matrix algebra multiplies matrix units")
{
	auto const ctx = CategoryContext::trivial();
	for (std::size_t n : {1u, 2u, 3u}) {
		auto const a = matrix_algebra(ctx, corpus::trivial_object(n));
		auto const &m = a.algebra.product;
		std::size_t const d = n * n;
		for (std::size_t x = 0; x < d; ++x)
			for (std::size_t y = 0; y < d; ++y) {
				auto const col = m.column(x * d + y);
				std::size_t const i = x / n, j = x % n, k = y / n, l = y % n;
				if (j == k) {
					REQUIRE(col.size() == 1);
					CHECK(col[0].row == i * n + l);
					CHECK(col[0].value.is_one());
				} else {
					CHECK(col.empty());
				}
			}
		// the unit is the identity matrix
		for (std::size_t x = 0; x < d; ++x)
			CHECK(a.algebra.unit->at(x, 0) == ctx.scalar(x / n == x % n ? 1 : 0));
	}
	auto const one = matrix_algebra(ctx, GObject::unit(ctx));
	CHECK(one.algebra.carrier == GObject::unit(ctx));
	CHECK(one.algebra.product == identity(ctx, GObject::unit(ctx)));
}

TEST_CASE("matrix algebras are symmetric Frobenius algebras in every context")
{
	for (auto const &[name, ctx] : corpus::identity_contexts()) {
		for (auto const &u : matrix_algebra_objects(ctx)) {
			CAPTURE(name);
			CAPTURE(format_object(u));
			auto const a = matrix_algebra(ctx, u);
			CHECK(check_associative(ctx, a.algebra).ok());
			CHECK(check_unital(ctx, a.algebra).ok());
			CHECK(check_frobenius(ctx, a).ok());
			CHECK(check_symmetric_frobenius(ctx, a).ok());
			auto const dim = dimension(ctx, u);
			CHECK(compose(a.counit, *a.algebra.unit).at(0, 0) == dim);
			auto const sep = check_strongly_separable(ctx, a);
			REQUIRE(sep.scale.has_value());
			CHECK(*sep.scale == dim);
			CHECK(sep.report.ok() == dim.is_one());
			bool const twist_trivial = twist(ctx, a.algebra.carrier) == identity(ctx, a.algebra.carrier);
			if (twist_trivial)
				CHECK(check_braided_symmetric(ctx, a).ok());
		}
	}
	// with a nontrivial twist on U (x) U^v the braided symmetry fails
	auto const tw = CategoryContext::super_vect(SuperStructure::twisted);
	auto const mixed = matrix_algebra(tw, corpus::z2_object({0, 1}));
	CHECK_FALSE(check_braided_symmetric(tw, mixed).ok());
	CHECK(check_symmetric_frobenius(tw, mixed).ok());
}

TEST_CASE("splitting off the unit")
{
	auto const ctx = CategoryContext::trivial();
	for (std::size_t n : {1u, 2u, 3u}) {
		auto const a = matrix_algebra(ctx, corpus::trivial_object(n));
		auto const s = split_unit_ideal(ctx, a.algebra, a.counit);
		CHECK(s.xi == ctx.scalar(long(n)));
		CHECK(s.unit.object.dim() == 1);
		CHECK(s.complement.object.dim() == n * n - 1);
		CHECK(s.unit_ideal.ok());
		CHECK(compose(s.unit.project, s.unit.embed) == identity(ctx, s.unit.object));
		CHECK(compose(s.complement.project, s.complement.embed) == identity(ctx, s.complement.object));
		CHECK(s.unit.idempotent() + s.complement.idempotent() == identity(ctx, a.algebra.carrier));
	}
	auto const one = matrix_algebra(ctx, GObject::unit(ctx));
	CHECK(split_unit_ideal(ctx, one.algebra, one.counit).complement.object.dim() == 0);

	auto const st = CategoryContext::super_vect(SuperStructure::supertrace);
	auto const ss = matrix_algebra(st, corpus::z2_object({1, 1}));
	auto const s = split_unit_ideal(st, ss.algebra, ss.counit);
	CHECK(s.xi == st.scalar(-2));
	CHECK(s.complement.object.dim() == 3);
	CHECK(s.unit_ideal.ok());

	auto const zero_dim = matrix_algebra(st, corpus::z2_object({0, 1}));
	CHECK_THROWS_AS(split_unit_ideal(st, zero_dim.algebra, zero_dim.counit), UnitDoesNotSplit);
}

TEST_CASE("bialgebras and primitive elements")
{
	auto const t = CategoryContext::trivial();
	auto const group = corpus::z2_group_bialgebra();
	CHECK(check_bialgebra(t, group).ok());
	auto const pg = primitives(t, group);
	CHECK(pg.subspace.is_zero());
	CHECK(corpus::primitive_oracle(t, group).empty());
	CHECK(pg.closure.ok());

	auto const sv = CategoryContext::super_vect(SuperStructure::twisted);
	auto const ext = corpus::dual_numbers(sv, 1);
	CHECK(check_bialgebra(sv, ext).ok());
	auto const px = primitives(sv, ext);
	REQUIRE(px.subspace.dim() == 1);
	CHECK(px.subspace.basis()[0] == Vector{sv.zero_scalar(), sv.one()});
	auto const oracle = corpus::primitive_oracle(sv, ext);
	REQUIRE(oracle.size() == 1);
	CHECK(oracle[0] == std::vector<Rational>{0, 1});
	CHECK(px.bracket.is_zero());
	CHECK(px.closure.ok());
	// the unit is never primitive
	CHECK_FALSE(px.subspace.contains(unit_vector(2, 0, sv.order())));

	// with x even the compatibility of Delta with m fails: Delta(x x) = 0 but
	// (m (x) m)(id (x) c (x) id)(Delta x (x) Delta x) = 2 x (x) x
	auto const even = corpus::dual_numbers(t, 0);
	auto const report = check_bialgebra(t, even);
	CHECK_FALSE(report.ok());
	for (auto const &eq : report.equations)
		CHECK(eq.holds == (eq.label != "coproduct multiplicative"));
}

TEST_CASE("modules")
{
	for (auto const &[name, ctx] : corpus::identity_contexts()) {
		CAPTURE(name);
		corpus::Rng rng(41);
		for (int trial = 0; trial < 4; ++trial) {
			auto const u = corpus::random_object(ctx, rng, 1, 3);
			auto const a = matrix_algebra(ctx, u).algebra;
			auto const rho = tensor(ctx, identity(ctx, u), evaluation(ctx, u));
			CHECK(check_module(ctx, a, rho).ok());
			auto bad = rho;
			bad.add_to(0, 0, ctx.one());
			CHECK_FALSE(check_module(ctx, a, bad).ok());
		}
	}
	auto const t = CategoryContext::trivial();
	AssocAlgebra zero{GObject(), GMorphism(GObject(), GObject(), 1), std::nullopt};
	auto const u = corpus::trivial_object(2);
	CHECK(check_module(t, zero, zero_morphism(t, GObject(), u)).ok());
}
