#pragma once

// The Killing form kappa = tr_3(theta_L o l^(3)) and what is built on it:
// symmetry, invariance, non-degeneracy and copairings, and the splitting
// of a Lie algebra with non-degenerate form into indecomposable ideals.

#include "ribbonlie/liealg.hpp"

namespace ribbonlie {

struct KillingForm {
	LieAlgebra algebra;
	/// kappa : L (x) L -> 1
	GMorphism pairing;
	/// gram[i][j] = kappa(slot i, slot j)
	Matrix gram;
};

/// d~_L o ([theta_L o l^(3)] (x) sigma_L) o (id (x) id (x) b_L)
KillingForm killing_form(CategoryContext const &ctx, LieAlgebra const &l);
/// The same partial trace without theta_L.
KillingForm killing_form_naive(CategoryContext const &ctx, LieAlgebra const &l);

/// Gram matrix of a pairing U (x) U -> 1.
Matrix gram_matrix(GMorphism const &pairing);

/// 2 dim_theta(U) T - 2 (d~_U o [id (x) sigma theta])^(x)2 on A_U = U (x) U^v,
/// with T = d~_U o [id (x) sigma theta] o [id (x) d_U (x) id].  The sovereign
/// maps are the ones a literal d~ on U^v needs; they are invisible when
/// sigma is trivial.
GMorphism matrix_algebra_killing_closed_form(CategoryContext const &ctx, GObject const &u);
/// 2 dim_theta(U) T o (e (x) e) for the complement A_U' of the unit in A_U.
/// This is the Killing form of A_U' when theta acts on U as a scalar.  In
/// general kappa_{A_U'} = kappa_{A_U} o (e (x) e), and the cap term of the
/// full closed form survives on A_U' wherever theta_U is inhomogeneous.
/// Throws UnitDoesNotSplit when dim(U) = 0.
GMorphism restricted_killing_closed_form(CategoryContext const &ctx, GObject const &u);

/// kappa = kappa o c_{L,L} and kappa_0 = kappa_0 o c_{L,L} o (theta_L (x) id).
CheckReport check_symmetric(CategoryContext const &ctx, KillingForm const &k);
/// kappa o (l (x) id) = kappa o (id (x) l)
CheckReport check_invariant(CategoryContext const &ctx, KillingForm const &k);

struct Nondegeneracy {
	/// w^ = (w (x) id_{U^v}) o (id_U (x) b_U) : U -> U^v
	GMorphism hat;
	/// Kernel of w^.
	Subspace radical;
	/// w^- = (id_U (x) (w^)^-1) o b_U, present iff w^ is invertible.
	std::optional<GMorphism> copairing;
	/// Both side-inverse identities, when the copairing exists.
	CheckReport side_inverse;

	bool ok() const { return copairing.has_value(); }
};

/// Tests a pairing w : U (x) U -> 1 for non-degeneracy.
Nondegeneracy nondegenerate(CategoryContext const &ctx, GObject const &u, GMorphism const &pairing);
Nondegeneracy nondegenerate(CategoryContext const &ctx, KillingForm const &k);

/// (w (x) id) o (id (x) p (x) id) o (id (x) w^-) : U -> U, the w-adjoint of an
/// idempotent p.  Its kernel is the w-orthogonal complement of im p.
GMorphism adjoint_idempotent(CategoryContext const &ctx, GMorphism const &pairing,
                             GMorphism const &copairing, GMorphism const &p);

/// {x : kappa(x, m) = 0 for all m in M}.
Subspace orthogonal_complement(KillingForm const &k, Subspace const &m);

enum class Verdict { holds, violated, inapplicable };
std::string to_string(Verdict v);

struct AbelianIdealLemma {
	Verdict verdict = Verdict::inapplicable;
	/// Nonzero abelian ideals found (a counterexample when nonempty).
	std::vector<Subspace> abelian_ideals;
};

/// With kappa non-degenerate, no nonzero abelian ideal appears among the
/// closures of basis vectors or the terms of the derived series.
AbelianIdealLemma check_abelian_ideal_lemma(CategoryContext const &ctx, LieAlgebra const &l,
                                            KillingForm const &k);

class DegenerateKillingForm : public std::domain_error {
  public:
	DegenerateKillingForm(Subspace radical)
	    : std::domain_error("degenerate Killing form"), radical(std::move(radical))
	{
	}
	Subspace radical;
};

class SplittingFailed : public std::runtime_error {
  public:
	using std::runtime_error::runtime_error;
};

struct DecompositionPart {
	LieAlgebra algebra;
	/// Retract of the part into the original algebra.
	Retract retract;
};

struct Decomposition {
	std::vector<DecompositionPart> parts;
	/// Ideal, orthogonality and restricted-form checks made along the way.
	CheckReport verification;
};

/// Splits off a minimal ideal M and its kappa-orthogonal complement,
/// recursing on the complement.  Termination follows from the strict drop
/// in dimension.  Throws DegenerateKillingForm, or SplittingFailed when the
/// complement does not split (which a non-degenerate form rules out).
Decomposition decompose(CategoryContext const &ctx, LieAlgebra const &l);

enum class Dichotomy { zero, nondegenerate, violated, inapplicable };
std::string to_string(Dichotomy d);

struct DichotomyResult {
	Dichotomy verdict = Dichotomy::zero;
	/// Proper nonzero ideals found by closing basis vectors.
	std::vector<Subspace> proper_ideals;
	Matrix gram;
};

/// kappa of an indecomposable Lie algebra is zero or non-degenerate.  When
/// kappa is neither and the search finds a proper ideal, L was not
/// indecomposable and the verdict is inapplicable; violated means no proper
/// ideal was found.
DichotomyResult check_zero_or_nondegenerate(CategoryContext const &ctx, LieAlgebra const &l);

} // namespace ribbonlie
