#include "ribbonlie/liealg.hpp"

#include <algorithm>

namespace ribbonlie {

namespace {

void check_shape(CategoryContext const &ctx, GObject const &carrier, GMorphism const &bracket)
{
	if (bracket.src() != tensor(ctx, carrier, carrier) || bracket.dst() != carrier)
		throw ObjectMismatch("Lie bracket must be a morphism L (x) L -> L");
}

std::vector<Subspace> descend(Subspace first, auto step)
{
	std::vector<Subspace> chain{std::move(first)};
	while (!chain.back().is_zero()) {
		auto next = step(chain.back());
		if (next == chain.back())
			break;
		chain.push_back(std::move(next));
	}
	return chain;
}

Subspace whole_of(LieAlgebra const &l)
{
	std::vector<Vector> vs;
	int const order = l.bracket().order();
	for (std::size_t i = 0; i < l.dim(); ++i)
		vs.push_back(unit_vector(l.dim(), i, order));
	return Subspace::span(l.carrier(), order, vs);
}

} // namespace

LieAlgebra::LieAlgebra(CategoryContext const &ctx, GObject carrier, GMorphism bracket)
    : carrier_(std::move(carrier)), bracket_(std::move(bracket))
{
	check_shape(ctx, carrier_, bracket_);
	auto report = check_lie_axioms(ctx, *this);
	if (!report.ok())
		throw NotALieAlgebra("bracket violates the Lie algebra axioms", std::move(report));
}

LieAlgebra LieAlgebra::unchecked(CategoryContext const &ctx, GObject carrier, GMorphism bracket)
{
	check_shape(ctx, carrier, bracket);
	LieAlgebra l;
	l.carrier_ = std::move(carrier);
	l.bracket_ = std::move(bracket);
	return l;
}

CheckReport check_antisymmetry(CategoryContext const &ctx, LieAlgebra const &l)
{
	auto const &u = l.carrier();
	auto const two = tensor(ctx, u, u);
	CheckReport report;
	report.add(check_equation("antisymmetry",
	                          compose(l.bracket(), identity(ctx, two) + braiding(ctx, u, u)),
	                          zero_morphism(ctx, two, u)));
	return report;
}

CheckReport check_jacobi(CategoryContext const &ctx, LieAlgebra const &l)
{
	auto const &u = l.carrier();
	auto const three = tensor_power(ctx, u, 3);
	auto const c = self_braiding_power(ctx, u, 3);
	auto const cycle = identity(ctx, three) + c + compose(c, c);
	CheckReport report;
	report.add(check_equation("jacobi", compose(bracket_power(ctx, l, 3), cycle),
	                          zero_morphism(ctx, three, u)));
	return report;
}

CheckReport check_lie_axioms(CategoryContext const &ctx, LieAlgebra const &l)
{
	auto report = check_antisymmetry(ctx, l);
	report.merge(check_jacobi(ctx, l));
	return report;
}

LieAlgebra commutator(CategoryContext const &ctx, AssocAlgebra const &a)
{
	if (!check_associative(ctx, a).ok())
		throw std::invalid_argument("commutator: algebra is not associative");
	return LieAlgebra(ctx, a.carrier, commutator_bracket(ctx, a));
}

GMorphism bracket_power(CategoryContext const &ctx, LieAlgebra const &l, std::size_t n)
{
	if (n < 2)
		throw std::invalid_argument("bracket_power: n must be at least 2");
	auto result = l.bracket();
	auto const id = identity(ctx, l.carrier());
	for (std::size_t k = 3; k <= n; ++k)
		result = compose(l.bracket(), tensor(ctx, id, result));
	return result;
}

GMorphism derived_power(CategoryContext const &ctx, LieAlgebra const &l, std::size_t n)
{
	if (n < 2)
		throw std::invalid_argument("derived_power: n must be at least 2");
	auto result = l.bracket();
	for (std::size_t k = 3; k <= n; ++k)
		result = compose(l.bracket(), tensor(ctx, result, result));
	return result;
}

Vector bracket_vectors(LieAlgebra const &l, Vector const &x, Vector const &y)
{
	auto const d = l.dim();
	auto const &b = l.bracket();
	Vector out = zero_vector(d, b.order());
	for (std::size_t i = 0; i < d; ++i) {
		if (x[i].is_zero())
			continue;
		for (std::size_t j = 0; j < d; ++j) {
			if (y[j].is_zero())
				continue;
			auto const &col = b.column(i * d + j);
			if (col.empty())
				continue;
			auto const s = x[i] * y[j];
			for (auto const &e : col)
				out[e.row] += s * e.value;
		}
	}
	return out;
}

Subspace bracket_span(LieAlgebra const &l, Subspace const &a, Subspace const &b)
{
	std::vector<Vector> vs;
	for (auto const &x : a.basis())
		for (auto const &y : b.basis())
			vs.push_back(bracket_vectors(l, x, y));
	return Subspace::span(l.carrier(), l.bracket().order(), vs);
}

std::vector<Subspace> lower_central_series(LieAlgebra const &l)
{
	auto const all = whole_of(l);
	return descend(bracket_span(l, all, all),
	               [&](Subspace const &c) { return bracket_span(l, all, c); });
}

std::vector<Subspace> derived_series(LieAlgebra const &l)
{
	auto const all = whole_of(l);
	return descend(bracket_span(l, all, all),
	               [&](Subspace const &d) { return bracket_span(l, d, d); });
}

std::vector<Subspace> derived_nilpotent_series(LieAlgebra const &l)
{
	auto const all = whole_of(l);
	auto const derived = bracket_span(l, all, all);
	return descend(bracket_span(l, derived, derived),
	               [&](Subspace const &e) { return bracket_span(l, derived, e); });
}

bool is_abelian(LieAlgebra const &l) { return l.bracket().is_zero(); }
bool is_nilpotent(LieAlgebra const &l) { return lower_central_series(l).back().is_zero(); }
bool is_solvable(LieAlgebra const &l) { return derived_series(l).back().is_zero(); }
bool is_derived_nilpotent(LieAlgebra const &l) { return derived_nilpotent_series(l).back().is_zero(); }

LieDirectSum direct_sum(CategoryContext const &ctx, std::span<LieAlgebra const> parts)
{
	std::vector<GObject> objects;
	for (auto const &p : parts)
		objects.push_back(p.carrier());
	auto carrier = ribbonlie::direct_sum(objects);
	GMorphism bracket = zero_morphism(ctx, tensor(ctx, carrier, carrier), carrier);
	std::vector<Retract> retracts;
	for (std::size_t i = 0; i < parts.size(); ++i) {
		auto e = injection(ctx, objects, i);
		auto r = projection(ctx, objects, i);
		bracket += compose_all({e, parts[i].bracket(), tensor(ctx, r, r)});
		retracts.push_back(Retract{objects[i], std::move(e), std::move(r)});
	}
	return LieDirectSum{LieAlgebra::unchecked(ctx, std::move(carrier), std::move(bracket)),
	                    std::move(retracts)};
}

void validate_retract(CategoryContext const &ctx, Retract const &r)
{
	if (r.embed.src() != r.object || r.project.dst() != r.object || r.embed.dst() != r.project.src())
		throw InvalidRetract("retract maps do not fit together");
	if (compose(r.project, r.embed) != identity(ctx, r.object))
		throw InvalidRetract("r o e is not the identity");
}

CheckReport check_retract_subalgebra(CategoryContext const &ctx, LieAlgebra const &l, Retract const &r)
{
	validate_retract(ctx, r);
	auto const lhs = compose(l.bracket(), tensor(ctx, r.embed, r.embed));
	CheckReport report;
	report.add(check_equation("retract subalgebra", lhs, compose(r.idempotent(), lhs)));
	return report;
}

CheckReport check_retract_ideal(CategoryContext const &ctx, LieAlgebra const &l, Retract const &r)
{
	validate_retract(ctx, r);
	auto const lhs = compose(l.bracket(), tensor(ctx, r.embed, identity(ctx, l.carrier())));
	CheckReport report;
	report.add(check_equation("retract ideal", lhs, compose(r.idempotent(), lhs)));
	return report;
}

CheckReport check_retract_ideal_right(CategoryContext const &ctx, LieAlgebra const &l,
                                      Retract const &r)
{
	validate_retract(ctx, r);
	auto const lhs = compose(l.bracket(), tensor(ctx, identity(ctx, l.carrier()), r.embed));
	CheckReport report;
	report.add(check_equation("retract ideal (right)", lhs, compose(r.idempotent(), lhs)));
	return report;
}

LieAlgebra induced_bracket(CategoryContext const &ctx, LieAlgebra const &l, Retract const &r)
{
	validate_retract(ctx, r);
	auto bracket = compose_all({r.project, l.bracket(), tensor(ctx, r.embed, r.embed)});
	return LieAlgebra(ctx, r.object, std::move(bracket));
}

Subspace ideal_closure(CategoryContext const &ctx, LieAlgebra const &l, std::vector<Vector> const &seeds)
{
	std::vector<Vector> parts;
	for (auto const &v : seeds)
		for (auto &h : homogeneous_components(l.carrier(), v))
			parts.push_back(std::move(h));
	auto s = Subspace::span(l.carrier(), ctx.order(), parts);
	auto const all = whole_of(l);
	for (;;) {
		auto next = s.sum(bracket_span(l, s, all));
		if (next.dim() == s.dim())
			return s;
		s = std::move(next);
	}
}

bool is_ideal(LieAlgebra const &l, Subspace const &s)
{
	return s.contains(bracket_span(l, s, whole_of(l)));
}

Subspace minimal_ideal(CategoryContext const &ctx, LieAlgebra const &l, Subspace candidate)
{
	for (;;) {
		std::optional<Subspace> best;
		for (auto const &v : candidate.basis()) {
			auto c = ideal_closure(ctx, l, {v});
			if (c.is_zero())
				continue;
			if (!best || c.dim() < best->dim() ||
			    (c.dim() == best->dim() && c.pivots().front() < best->pivots().front()))
				best = std::move(c);
		}
		if (!best || best->dim() >= candidate.dim())
			return candidate;
		candidate = std::move(*best);
	}
}

CheckReport check_morphism(CategoryContext const &ctx, GMorphism const &f, LieAlgebra const &src,
                           LieAlgebra const &dst)
{
	CheckReport report;
	report.add(check_equation("lie morphism", compose(dst.bracket(), tensor(ctx, f, f)),
	                          compose(f, src.bracket())));
	return report;
}

} // namespace ribbonlie
