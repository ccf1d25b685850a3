#include "ribbonlie/killing.hpp"

#include <algorithm>
#include <cmath>

namespace ribbonlie {

namespace {

KillingForm make_form(LieAlgebra const &l, GMorphism pairing)
{
	auto gram = gram_matrix(pairing);
	return KillingForm{l, std::move(pairing), std::move(gram)};
}

// d~_U o (id (x) sigma_U o theta_{U^v}) : U (x) U^v -> 1
GMorphism twisted_cap(CategoryContext const &ctx, GObject const &u)
{
	auto const ud = dual(ctx, u);
	return compose(left_evaluation(ctx, u),
	               tensor(ctx, identity(ctx, u), compose(sovereign(ctx, u), twist(ctx, ud))));
}

// d~_U o [id (x) sigma theta] o [id (x) d_U (x) id] : A_U (x) A_U -> 1
GMorphism contraction(CategoryContext const &ctx, GObject const &u)
{
	auto const ud = dual(ctx, u);
	return compose(twisted_cap(ctx, u),
	               tensor_all(ctx, {identity(ctx, u), evaluation(ctx, u), identity(ctx, ud)}));
}

// Retract onto the first summand of ambient = A (+) B, for subspaces with
// trivial intersection spanning the ambient.
Retract split_along(Subspace const &a, Subspace const &b)
{
	auto const &ambient = a.ambient();
	auto const n = ambient.dim();
	int const order = a.order();
	Matrix basis(n, zero_vector(n, order));
	std::size_t col = 0;
	for (auto const *s : {&a, &b})
		for (auto const &v : s->basis()) {
			for (std::size_t i = 0; i < n; ++i)
				basis[i][col] = v[i];
			++col;
		}
	auto inv = invert(basis);
	if (!inv)
		throw SplittingFailed("ideal and its orthogonal complement do not span");
	auto object = a.object();
	GMorphism r(ambient, object, order);
	for (std::size_t k = 0; k < a.dim(); ++k)
		for (std::size_t i = 0; i < n; ++i)
			if (!(*inv)[k][i].is_zero())
				r.set(k, i, (*inv)[k][i]);
	return Retract{std::move(object), a.embedding(), std::move(r)};
}

void split(CategoryContext const &ctx, LieAlgebra const &l, GMorphism const &embed,
           GMorphism const &project, Decomposition &out)
{
	auto const k = killing_form(ctx, l);
	auto const whole = Subspace::whole(ctx, l.carrier());
	auto const m = minimal_ideal(ctx, l, whole);
	if (m.dim() == l.dim()) {
		out.parts.push_back(DecompositionPart{l, Retract{l.carrier(), embed, project}});
		return;
	}
	auto const perp = orthogonal_complement(k, m);
	if (!m.intersect(perp).is_zero() || m.dim() + perp.dim() != l.dim())
		throw SplittingFailed("minimal ideal meets its orthogonal complement");
	if (!is_ideal(l, perp))
		throw SplittingFailed("orthogonal complement is not an ideal");

	auto const rm = split_along(m, perp);
	auto const rp = split_along(perp, m);
	auto const pm = rm.idempotent();
	auto const pp = rp.idempotent();
	out.verification.merge(check_retract_ideal(ctx, l, rm));
	out.verification.merge(check_retract_ideal(ctx, l, rp));
	out.verification.add(check_equation("complement sum", pm + pp, identity(ctx, l.carrier())));
	out.verification.add(check_equation("brackets between parts vanish",
	                                    compose(l.bracket(), tensor(ctx, pm, pp)),
	                                    zero_morphism(ctx, tensor(ctx, l.carrier(), l.carrier()),
	                                                  l.carrier())));

	auto part = induced_bracket(ctx, l, rm);
	out.parts.push_back(DecompositionPart{
	    part, Retract{rm.object, compose(embed, rm.embed), compose(rm.project, project)}});
	auto rest = induced_bracket(ctx, l, rp);
	split(ctx, rest, compose(embed, rp.embed), compose(rp.project, project), out);
}

} // namespace

Matrix gram_matrix(GMorphism const &pairing)
{
	auto const n = static_cast<std::size_t>(std::llround(std::sqrt(double(pairing.cols()))));
	if (n * n != pairing.cols() || pairing.rows() != 1)
		throw std::invalid_argument("gram_matrix: not a pairing U (x) U -> 1");
	Matrix g(n, zero_vector(n, pairing.order()));
	for (std::size_t i = 0; i < n; ++i)
		for (std::size_t j = 0; j < n; ++j)
			g[i][j] = pairing.at(0, i * n + j);
	return g;
}

KillingForm killing_form(CategoryContext const &ctx, LieAlgebra const &l)
{
	auto const &u = l.carrier();
	auto const body = compose(twist(ctx, u), bracket_power(ctx, l, 3));
	return make_form(l, partial_trace(ctx, body, tensor(ctx, u, u)));
}

KillingForm killing_form_naive(CategoryContext const &ctx, LieAlgebra const &l)
{
	auto const &u = l.carrier();
	return make_form(l, partial_trace(ctx, bracket_power(ctx, l, 3), tensor(ctx, u, u)));
}

GMorphism matrix_algebra_killing_closed_form(CategoryContext const &ctx, GObject const &u)
{
	auto const two = ctx.scalar(2);
	auto const cap = twisted_cap(ctx, u);
	return (two * dim_theta(ctx, u)) * contraction(ctx, u) - two * tensor(ctx, cap, cap);
}

GMorphism restricted_killing_closed_form(CategoryContext const &ctx, GObject const &u)
{
	auto const a = matrix_algebra(ctx, u);
	auto const s = split_unit_ideal(ctx, a.algebra, a.counit);
	auto const &e = s.complement.embed;
	return (ctx.scalar(2) * dim_theta(ctx, u)) * compose(contraction(ctx, u), tensor(ctx, e, e));
}

CheckReport check_symmetric(CategoryContext const &ctx, KillingForm const &k)
{
	auto const &u = k.algebra.carrier();
	auto const c = braiding(ctx, u, u);
	auto const naive = killing_form_naive(ctx, k.algebra).pairing;
	CheckReport report;
	report.add(check_equation("killing symmetry", k.pairing, compose(k.pairing, c)));
	report.add(check_equation("naive killing twisted symmetry", naive,
	                          compose_all({naive, c, tensor(ctx, twist(ctx, u), identity(ctx, u))})));
	return report;
}

CheckReport check_invariant(CategoryContext const &ctx, KillingForm const &k)
{
	auto const id = identity(ctx, k.algebra.carrier());
	auto const &l = k.algebra.bracket();
	CheckReport report;
	report.add(check_equation("killing invariance", compose(k.pairing, tensor(ctx, l, id)),
	                          compose(k.pairing, tensor(ctx, id, l))));
	return report;
}

Nondegeneracy nondegenerate(CategoryContext const &ctx, GObject const &u, GMorphism const &pairing)
{
	if (pairing.src() != tensor(ctx, u, u) || pairing.rows() != 1)
		throw ObjectMismatch("nondegenerate: not a pairing on " + format_object(u));
	auto const ud = dual(ctx, u);
	auto const id = identity(ctx, u);
	auto hat = compose(tensor(ctx, pairing, identity(ctx, ud)), tensor(ctx, id, coevaluation(ctx, u)));
	Nondegeneracy out{hat, null_space(hat), std::nullopt, {}};
	if (u.dim() == 0) {
		out.copairing = zero_morphism(ctx, GObject::unit(ctx), tensor(ctx, u, u));
		return out;
	}
	auto inv = invert(hat.to_dense());
	if (!inv)
		return out;
	auto const hat_inv = GMorphism::from_dense(ud, u, *inv, ctx.order());
	auto copairing = compose(tensor(ctx, id, hat_inv), coevaluation(ctx, u));
	out.side_inverse.add(check_equation("copairing right side inverse",
	                                    compose(tensor(ctx, pairing, id), tensor(ctx, id, copairing)),
	                                    id));
	out.side_inverse.add(check_equation("copairing left side inverse",
	                                    compose(tensor(ctx, id, pairing), tensor(ctx, copairing, id)),
	                                    id));
	out.copairing = std::move(copairing);
	return out;
}

Nondegeneracy nondegenerate(CategoryContext const &ctx, KillingForm const &k)
{
	return nondegenerate(ctx, k.algebra.carrier(), k.pairing);
}

GMorphism adjoint_idempotent(CategoryContext const &ctx, GMorphism const &pairing,
                             GMorphism const &copairing, GMorphism const &p)
{
	auto const &u = p.src();
	auto const id = identity(ctx, u);
	return compose_all({tensor(ctx, pairing, id), tensor_all(ctx, {id, p, id}),
	                    tensor(ctx, id, copairing)});
}

Subspace orthogonal_complement(KillingForm const &k, Subspace const &m)
{
	auto const &u = k.algebra.carrier();
	auto const n = u.dim();
	int const order = k.pairing.order();
	// x -> (kappa(x, m_a))_a; row a takes the grade of the slots pairing
	// with the homogeneous m_a, which is the dual grade
	Matrix rows(m.dim(), zero_vector(n, order));
	std::vector<Grade> target(m.dim());
	for (std::size_t a = 0; a < m.dim(); ++a)
		for (std::size_t i = 0; i < n; ++i) {
			Cyclotomic s(order);
			for (std::size_t j = 0; j < n; ++j)
				if (!m.basis()[a][j].is_zero() && !k.gram[i][j].is_zero())
					s += k.gram[i][j] * m.basis()[a][j];
			if (!s.is_zero()) {
				rows[a][i] = s;
				target[a] = u.grade(i);
			}
		}
	// rows with no entries constrain nothing; give them any grade
	for (auto &g : target)
		if (g.empty() && n > 0)
			g = u.grade(0);
	auto const constraint = GMorphism::from_dense(u, GObject(std::move(target)), rows, order);
	return null_space(constraint);
}

std::string to_string(Verdict v)
{
	switch (v) {
	case Verdict::holds:
		return "holds";
	case Verdict::violated:
		return "violated";
	case Verdict::inapplicable:
		return "inapplicable";
	}
	return "?";
}

std::string to_string(Dichotomy d)
{
	switch (d) {
	case Dichotomy::zero:
		return "zero";
	case Dichotomy::nondegenerate:
		return "nondegenerate";
	case Dichotomy::violated:
		return "violated";
	case Dichotomy::inapplicable:
		return "inapplicable";
	}
	return "?";
}

AbelianIdealLemma check_abelian_ideal_lemma(CategoryContext const &ctx, LieAlgebra const &l,
                                            KillingForm const &k)
{
	AbelianIdealLemma out;
	if (!nondegenerate(ctx, l.carrier(), k.pairing).ok())
		return out;
	std::vector<Subspace> ideals;
	for (std::size_t i = 0; i < l.dim(); ++i)
		ideals.push_back(ideal_closure(ctx, l, {unit_vector(l.dim(), i, ctx.order())}));
	for (auto const &d : derived_series(l))
		ideals.push_back(d);
	for (auto const &s : ideals)
		if (!s.is_zero() && bracket_span(l, s, s).is_zero())
			out.abelian_ideals.push_back(s);
	out.verdict = out.abelian_ideals.empty() ? Verdict::holds : Verdict::violated;
	return out;
}

Decomposition decompose(CategoryContext const &ctx, LieAlgebra const &l)
{
	auto const k = killing_form(ctx, l);
	auto const nd = nondegenerate(ctx, k);
	if (!nd.ok())
		throw DegenerateKillingForm(nd.radical);
	Decomposition out;
	out.verification.merge(nd.side_inverse);
	auto const id = identity(ctx, l.carrier());
	split(ctx, l, id, id, out);
	for (auto const &part : out.parts) {
		auto const &e = part.retract.embed;
		out.verification.add(check_equation("restricted form is the part's Killing form",
		                                    compose(k.pairing, tensor(ctx, e, e)),
		                                    killing_form(ctx, part.algebra).pairing));
	}
	return out;
}

DichotomyResult check_zero_or_nondegenerate(CategoryContext const &ctx, LieAlgebra const &l)
{
	auto const k = killing_form(ctx, l);
	DichotomyResult out;
	out.gram = k.gram;
	for (std::size_t i = 0; i < l.dim(); ++i) {
		auto c = ideal_closure(ctx, l, {unit_vector(l.dim(), i, ctx.order())});
		if (c.is_zero() || c.dim() == l.dim())
			continue;
		if (std::find(out.proper_ideals.begin(), out.proper_ideals.end(), c) == out.proper_ideals.end())
			out.proper_ideals.push_back(std::move(c));
	}
	if (k.pairing.is_zero())
		out.verdict = Dichotomy::zero;
	else if (nondegenerate(ctx, k).ok())
		out.verdict = Dichotomy::nondegenerate;
	else
		out.verdict = out.proper_ideals.empty() ? Dichotomy::violated : Dichotomy::inapplicable;
	return out;
}

} // namespace ribbonlie
