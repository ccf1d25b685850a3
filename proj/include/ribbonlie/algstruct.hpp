#pragma once

// Associative, Frobenius and bialgebra structures in the graded category.

#include "ribbonlie/linalg.hpp"

#include <optional>

namespace ribbonlie {

struct AssocAlgebra {
	GObject carrier;
	/// m : A (x) A -> A
	GMorphism product;
	/// eta : 1 -> A
	std::optional<GMorphism> unit;
};

struct FrobeniusAlgebra {
	AssocAlgebra algebra;
	GMorphism coproduct;
	GMorphism counit;
};

struct Bialgebra {
	AssocAlgebra algebra;
	GMorphism coproduct;
	GMorphism counit;
};

/// m o (m (x) id) = m o (id (x) m)
CheckReport check_associative(CategoryContext const &ctx, AssocAlgebra const &a);
/// m o (eta (x) id) = id = m o (id (x) eta); fails when there is no unit.
CheckReport check_unital(CategoryContext const &ctx, AssocAlgebra const &a);
/// m o c_{A,A} = m
CheckReport check_commutative(CategoryContext const &ctx, AssocAlgebra const &a);

/// The commutator m - m o c_{A,A}.
GMorphism commutator_bracket(CategoryContext const &ctx, AssocAlgebra const &a);

/// A_U = U (x) U^v with m = id (x) d_U (x) id, eta = b_U,
/// Delta = id (x) [(sigma^-1 (x) id) o b~_U] (x) id and
/// eps = d~_U o (id (x) sigma_U), so that eps o eta = dim(U) and
/// m o Delta = dim(U) id.
FrobeniusAlgebra matrix_algebra(CategoryContext const &ctx, GObject const &u);

/// Unital associative, counital coassociative, and Delta a bimodule map.
CheckReport check_frobenius(CategoryContext const &ctx, FrobeniusAlgebra const &f);

struct SeparabilityReport {
	CheckReport report;
	/// s with m o Delta = s id, whenever m o Delta is a multiple of id.
	std::optional<Cyclotomic> scale;
};

/// m o Delta = id.
SeparabilityReport check_strongly_separable(CategoryContext const &ctx, FrobeniusAlgebra const &f);

/// Symmetry of the pairing w = eps o m in the ribbon sense: the two induced
/// maps A -> A^v and A -> ^vA agree through sigma_A.  Equivalently
/// w = w o c_{A,A} o (theta_A (x) id).
CheckReport check_symmetric_frobenius(CategoryContext const &ctx, FrobeniusAlgebra const &f);
/// w o c_{A,A} = w.  Agrees with check_symmetric_frobenius when the twist
/// is trivial on A.
CheckReport check_braided_symmetric(CategoryContext const &ctx, FrobeniusAlgebra const &f);

/// Algebra and coalgebra axioms plus compatibility of Delta, eps with m, eta.
CheckReport check_bialgebra(CategoryContext const &ctx, Bialgebra const &b);

class UnitDoesNotSplit : public std::domain_error {
  public:
	using std::domain_error::domain_error;
};

struct UnitSplitting {
	/// xi = eps o eta.
	Cyclotomic xi;
	/// (1, eta, eps / xi)
	Retract unit;
	/// Splitting of id - eta o eps / xi.
	Retract complement;
	/// The unit retract is an abelian retract ideal of the commutator.
	CheckReport unit_ideal;
};

/// A = 1 (+) A'.  Throws UnitDoesNotSplit when eps o eta = 0.
UnitSplitting split_unit_ideal(CategoryContext const &ctx, AssocAlgebra const &a,
                               GMorphism const &counit);

struct Primitives {
	Subspace subspace;
	/// P with e : P -> B and a left inverse r.
	Retract retract;
	/// r o l o (e (x) e) : P (x) P -> P for the commutator l.
	GMorphism bracket;
	/// Delta o l_P = l_P (x) eta + eta (x) l_P and the image of l_P lies in P.
	CheckReport closure;
};

/// The maximal subobject with Delta o e = e (x) eta + eta (x) e.
Primitives primitives(CategoryContext const &ctx, Bialgebra const &b);

/// rho o (m (x) id_U) = rho o (id_A (x) rho), and rho o (eta (x) id_U) = id_U
/// when A is unital.
CheckReport check_module(CategoryContext const &ctx, AssocAlgebra const &a, GMorphism const &rho);

} // namespace ribbonlie
