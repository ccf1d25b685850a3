#include "ribbonlie/algstruct.hpp"

namespace ribbonlie {

namespace {

GMorphism const &require_unit(AssocAlgebra const &a)
{
	if (!a.unit)
		throw std::invalid_argument("algebra has no unit");
	return *a.unit;
}

void add_coalgebra_checks(CategoryContext const &ctx, GObject const &a, GMorphism const &delta,
                          GMorphism const &eps, CheckReport &report)
{
	auto const id = identity(ctx, a);
	report.add(check_equation("coassociativity", compose(tensor(ctx, delta, id), delta),
	                          compose(tensor(ctx, id, delta), delta)));
	report.add(check_equation("left counit", compose(tensor(ctx, eps, id), delta), id));
	report.add(check_equation("right counit", compose(tensor(ctx, id, eps), delta), id));
}

} // namespace

CheckReport check_associative(CategoryContext const &ctx, AssocAlgebra const &a)
{
	auto const id = identity(ctx, a.carrier);
	auto const &m = a.product;
	CheckReport report;
	report.add(check_equation("associativity", compose(m, tensor(ctx, m, id)),
	                          compose(m, tensor(ctx, id, m))));
	return report;
}

CheckReport check_unital(CategoryContext const &ctx, AssocAlgebra const &a)
{
	CheckReport report;
	if (!a.unit) {
		EquationCheck missing;
		missing.label = "unit present";
		missing.holds = false;
		report.add(std::move(missing));
		return report;
	}
	auto const id = identity(ctx, a.carrier);
	report.add(check_equation("left unit", compose(a.product, tensor(ctx, *a.unit, id)), id));
	report.add(check_equation("right unit", compose(a.product, tensor(ctx, id, *a.unit)), id));
	return report;
}

CheckReport check_commutative(CategoryContext const &ctx, AssocAlgebra const &a)
{
	CheckReport report;
	report.add(check_equation("commutativity",
	                          compose(a.product, braiding(ctx, a.carrier, a.carrier)), a.product));
	return report;
}

GMorphism commutator_bracket(CategoryContext const &ctx, AssocAlgebra const &a)
{
	return a.product - compose(a.product, braiding(ctx, a.carrier, a.carrier));
}

FrobeniusAlgebra matrix_algebra(CategoryContext const &ctx, GObject const &u)
{
	auto const ud = dual(ctx, u);
	auto const id_u = identity(ctx, u);
	auto const id_ud = identity(ctx, ud);
	auto const carrier = tensor(ctx, u, ud);

	auto product = tensor_all(ctx, {id_u, evaluation(ctx, u), id_ud});
	auto unit = coevaluation(ctx, u);
	auto middle = compose(tensor(ctx, sovereign_inverse(ctx, u), id_u), left_coevaluation(ctx, u));
	auto coproduct = tensor_all(ctx, {id_u, middle, id_ud});
	auto counit = compose(left_evaluation(ctx, u), tensor(ctx, id_u, sovereign(ctx, u)));

	// tensoring with the unit object leaves the slot lists unchanged
	return FrobeniusAlgebra{AssocAlgebra{carrier, std::move(product), std::move(unit)},
	                        std::move(coproduct), std::move(counit)};
}

CheckReport check_frobenius(CategoryContext const &ctx, FrobeniusAlgebra const &f)
{
	auto const &a = f.algebra;
	CheckReport report = check_associative(ctx, a);
	report.merge(check_unital(ctx, a));
	add_coalgebra_checks(ctx, a.carrier, f.coproduct, f.counit, report);
	auto const id = identity(ctx, a.carrier);
	auto const dm = compose(f.coproduct, a.product);
	report.add(check_equation("left module coproduct",
	                          compose(tensor(ctx, id, a.product), tensor(ctx, f.coproduct, id)), dm));
	report.add(check_equation("right module coproduct",
	                          compose(tensor(ctx, a.product, id), tensor(ctx, id, f.coproduct)), dm));
	return report;
}

SeparabilityReport check_strongly_separable(CategoryContext const &ctx, FrobeniusAlgebra const &f)
{
	SeparabilityReport out;
	auto const md = compose(f.algebra.product, f.coproduct);
	auto const id = identity(ctx, f.algebra.carrier);
	out.report.add(check_equation("strong separability", md, id));
	if (md.cols() == 0) {
		out.scale = ctx.one();
		return out;
	}
	auto const s = md.at(0, 0);
	if (md == s * id)
		out.scale = s;
	return out;
}

CheckReport check_symmetric_frobenius(CategoryContext const &ctx, FrobeniusAlgebra const &f)
{
	auto const &a = f.algebra.carrier;
	auto const id = identity(ctx, a);
	auto const id_d = identity(ctx, dual(ctx, a));
	auto const pairing = compose(f.counit, f.algebra.product);
	auto const phi1 = compose(tensor(ctx, pairing, id_d), tensor(ctx, id, coevaluation(ctx, a)));
	auto const phi2 = compose(tensor(ctx, id_d, pairing), tensor(ctx, left_coevaluation(ctx, a), id));
	CheckReport report;
	report.add(check_equation("frobenius symmetry", compose(sovereign(ctx, a), phi1), phi2));
	return report;
}

CheckReport check_braided_symmetric(CategoryContext const &ctx, FrobeniusAlgebra const &f)
{
	auto const &a = f.algebra.carrier;
	auto const pairing = compose(f.counit, f.algebra.product);
	CheckReport report;
	report.add(check_equation("pairing braided symmetry", compose(pairing, braiding(ctx, a, a)),
	                          pairing));
	return report;
}

CheckReport check_bialgebra(CategoryContext const &ctx, Bialgebra const &b)
{
	auto const &a = b.algebra;
	auto const &m = a.product;
	CheckReport report = check_associative(ctx, a);
	report.merge(check_unital(ctx, a));
	add_coalgebra_checks(ctx, a.carrier, b.coproduct, b.counit, report);
	if (!a.unit)
		return report;
	auto const &eta = *a.unit;
	auto const id = identity(ctx, a.carrier);
	auto const swap = tensor_all(ctx, {id, braiding(ctx, a.carrier, a.carrier), id});
	report.add(check_equation("coproduct multiplicative", compose(b.coproduct, m),
	                          compose_all({tensor(ctx, m, m), swap,
	                                       tensor(ctx, b.coproduct, b.coproduct)})));
	report.add(check_equation("counit multiplicative", compose(b.counit, m),
	                          tensor(ctx, b.counit, b.counit)));
	report.add(check_equation("coproduct unital", compose(b.coproduct, eta), tensor(ctx, eta, eta)));
	report.add(check_equation("counit unital", compose(b.counit, eta),
	                          identity(ctx, GObject::unit(ctx))));
	return report;
}

UnitSplitting split_unit_ideal(CategoryContext const &ctx, AssocAlgebra const &a,
                               GMorphism const &counit)
{
	auto const &eta = require_unit(a);
	auto const xi = compose(counit, eta).at(0, 0);
	if (xi.is_zero())
		throw UnitDoesNotSplit("eps o eta = 0: the unit does not split off");
	auto const one = GObject::unit(ctx);
	auto const project = xi.inverse() * counit;
	Retract unit{one, eta, project};

	auto const id = identity(ctx, a.carrier);
	auto complement = split_idempotent(id - compose(eta, project));

	auto const l = commutator_bracket(ctx, a);
	auto const p = unit.idempotent();
	auto const l_eta = compose(l, tensor(ctx, eta, id));
	CheckReport report;
	report.add(check_equation("unit retract ideal", compose(p, l_eta), l_eta));
	report.add(check_equation("unit retract abelian", compose(l, tensor(ctx, eta, eta)),
	                          zero_morphism(ctx, one, a.carrier)));
	return UnitSplitting{xi, std::move(unit), std::move(complement), std::move(report)};
}

Primitives primitives(CategoryContext const &ctx, Bialgebra const &b)
{
	auto const &a = b.algebra;
	auto const &eta = require_unit(a);
	auto const id = identity(ctx, a.carrier);
	auto const defect = b.coproduct - tensor(ctx, id, eta) - tensor(ctx, eta, id);
	auto k = kernel(defect);
	auto retract = k.subspace.retract();
	auto const &e = retract.embed;

	auto const l_p = compose(commutator_bracket(ctx, a), tensor(ctx, e, e));
	CheckReport closure;
	closure.add(check_equation("primitive closure", compose(b.coproduct, l_p),
	                           tensor(ctx, l_p, eta) + tensor(ctx, eta, l_p)));
	closure.add(check_equation("primitives closed under bracket",
	                           compose(retract.idempotent(), l_p), l_p));
	auto bracket = compose(retract.project, l_p);
	return Primitives{std::move(k.subspace), std::move(retract), std::move(bracket),
	                  std::move(closure)};
}

CheckReport check_module(CategoryContext const &ctx, AssocAlgebra const &a, GMorphism const &rho)
{
	auto const &u = rho.dst();
	if (rho.src() != tensor(ctx, a.carrier, u))
		throw ObjectMismatch("check_module: action source is not A (x) U");
	auto const id_u = identity(ctx, u);
	CheckReport report;
	report.add(check_equation("action associativity", compose(rho, tensor(ctx, a.product, id_u)),
	                          compose(rho, tensor(ctx, identity(ctx, a.carrier), rho))));
	if (a.unit)
		report.add(check_equation("action unit", compose(rho, tensor(ctx, *a.unit, id_u)), id_u));
	return report;
}

} // namespace ribbonlie
