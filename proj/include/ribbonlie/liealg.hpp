#pragma once

// Lie algebras (L, l) in the graded category: axiom checks, iterated
// brackets, the three "sufficiently large n" series, retract ideals,
// direct sums and ideal closures.

#include "ribbonlie/algstruct.hpp"

namespace ribbonlie {

class NotALieAlgebra : public std::invalid_argument {
  public:
	NotALieAlgebra(std::string const &what, CheckReport report)
	    : std::invalid_argument(what), report(std::move(report))
	{
	}
	CheckReport report;
};

class InvalidRetract : public std::invalid_argument {
  public:
	using std::invalid_argument::invalid_argument;
};

class LieAlgebra {
  public:
	LieAlgebra() = default;
	/// Throws NotALieAlgebra when antisymmetry or Jacobi fails.
	LieAlgebra(CategoryContext const &ctx, GObject carrier, GMorphism bracket);
	/// Skips the axiom checks; only the shape of the bracket is validated.
	static LieAlgebra unchecked(CategoryContext const &ctx, GObject carrier, GMorphism bracket);

	GObject const &carrier() const { return carrier_; }
	GMorphism const &bracket() const { return bracket_; }
	std::size_t dim() const { return carrier_.dim(); }

  private:
	GObject carrier_;
	GMorphism bracket_;
};

/// l o (id + c_{L,L}) = 0
CheckReport check_antisymmetry(CategoryContext const &ctx, LieAlgebra const &l);
/// l^(3) o (id + c^(3) + (c^(3))^2) = 0
CheckReport check_jacobi(CategoryContext const &ctx, LieAlgebra const &l);
CheckReport check_lie_axioms(CategoryContext const &ctx, LieAlgebra const &l);

/// (A, m - m o c).  Throws std::invalid_argument if A is not associative.
LieAlgebra commutator(CategoryContext const &ctx, AssocAlgebra const &a);

/// l^(2) = l, l^(n) = l o (id_L (x) l^(n-1)) : L^(x)n -> L.
GMorphism bracket_power(CategoryContext const &ctx, LieAlgebra const &l, std::size_t n);
/// d^(2) = l, d^(n) = l o (d^(n-1) (x) d^(n-1)) : L^(x)2^(n-1) -> L.
GMorphism derived_power(CategoryContext const &ctx, LieAlgebra const &l, std::size_t n);

/// l applied to x (x) y in coordinates.
Vector bracket_vectors(LieAlgebra const &l, Vector const &x, Vector const &y);
/// span{ [a, b] : a in A, b in B }.
Subspace bracket_span(LieAlgebra const &l, Subspace const &a, Subspace const &b);

// The series below list the images of l^(n), d^(n) and l^(n) o l^(x)n for
// n = 2, 3, ... until they reach zero or repeat.  The chains are
// descending, so they settle within dim(L) steps; the predicates therefore
// decide "for sufficiently large n" exactly, and agree with testing the
// morphisms themselves up to n = dim(L) + 2.
std::vector<Subspace> lower_central_series(LieAlgebra const &l);
std::vector<Subspace> derived_series(LieAlgebra const &l);
std::vector<Subspace> derived_nilpotent_series(LieAlgebra const &l);

bool is_abelian(LieAlgebra const &l);
bool is_nilpotent(LieAlgebra const &l);
bool is_solvable(LieAlgebra const &l);
bool is_derived_nilpotent(LieAlgebra const &l);

struct LieDirectSum {
	LieAlgebra algebra;
	std::vector<Retract> retracts;
};

/// Carrier is the slot concatenation, l = sum_i e_i o l_i o (r_i (x) r_i).
LieDirectSum direct_sum(CategoryContext const &ctx, std::span<LieAlgebra const> parts);

/// Throws InvalidRetract unless r o e = id_K.
void validate_retract(CategoryContext const &ctx, Retract const &r);

/// l o (e (x) e) = p o l o (e (x) e)
CheckReport check_retract_subalgebra(CategoryContext const &ctx, LieAlgebra const &l, Retract const &r);
/// l o (e (x) id) = p o l o (e (x) id)
CheckReport check_retract_ideal(CategoryContext const &ctx, LieAlgebra const &l, Retract const &r);
/// l o (id (x) e) = p o l o (id (x) e)
CheckReport check_retract_ideal_right(CategoryContext const &ctx, LieAlgebra const &l,
                                      Retract const &r);

/// (K, r o l o (e (x) e)).  Throws NotALieAlgebra if the result fails the
/// axioms, which means r was not an ideal.
LieAlgebra induced_bracket(CategoryContext const &ctx, LieAlgebra const &l, Retract const &r);

/// Smallest graded subspace containing the seeds with l(S (x) L) in S.
Subspace ideal_closure(CategoryContext const &ctx, LieAlgebra const &l, std::vector<Vector> const &seeds);
bool is_ideal(LieAlgebra const &l, Subspace const &s);

/// Shrinks a nonzero ideal by closing its basis vectors one at a time and
/// moving to the smallest nonzero closure (ties: lowest first pivot) until
/// nothing smaller appears.  Generators are searched among basis vectors
/// only, so an ideal needing other generators can be missed.
Subspace minimal_ideal(CategoryContext const &ctx, LieAlgebra const &l, Subspace candidate);

/// l' o (f (x) f) = f o l
CheckReport check_morphism(CategoryContext const &ctx, GMorphism const &f, LieAlgebra const &src,
                           LieAlgebra const &dst);

} // namespace ribbonlie
