#pragma once

// Shared test material: contexts, the Lie algebra corpus, random objects and
// morphisms, and oracles that work from raw structure constants rather than
// through the diagram machinery.

#include "ribbonlie/commands.hpp"

#include <random>
#include <tuple>

namespace corpus {

using namespace ribbonlie;

// contexts

CategoryContext trivial();
CategoryContext super(SuperStructure s);
/// Z2 x Z2 with phi(g, h) = (-1)^(g1 h2 + g2 h1) and trivial twist.
CategoryContext klein();
/// Z2 x Z2 with phi(g, h) = (-1)^((g1 + g2)(h1 + h2)) and twist (-1)^(g1),
/// so that self-braidings and sovereign signs are nontrivial.
CategoryContext klein_mixed();
/// Z3 x Z3 with phi(g, h) = zeta_3^(g1 h2 + 2 g2 h1): genuinely cyclotomic.
CategoryContext z3z3();

/// Contexts of the randomized identity suite.
std::vector<std::pair<std::string, CategoryContext>> identity_contexts();

GObject trivial_object(std::size_t n);
/// grade list helper for a single cyclic factor.
GObject z2_object(std::vector<int> parities);

// Lie algebras

/// (i, j, k, c): [e_i, e_j] gets c e_k.
using Bracket = std::tuple<std::size_t, std::size_t, std::size_t, Cyclotomic>;

/// Builds l from the listed brackets, adding [e_j, e_i] = -phi(g_j, g_i)[e_i, e_j]
/// for every listed pair with i != j.
GMorphism bracket_from_table(CategoryContext const &ctx, GObject const &l,
                             std::vector<Bracket> const &table);

LieAlgebra abelian(CategoryContext const &ctx, std::size_t n);
/// x, y, z with [x, y] = z.
LieAlgebra heisenberg();
/// x, y with [x, y] = y.
LieAlgebra solvable2();
/// e, h, f with [h, e] = 2e, [h, f] = -2f, [e, f] = h.
LieAlgebra sl2();
/// Commutator of A_U, U = k^n; slot a*n + b is the matrix unit E_ab.
LieAlgebra gl(std::size_t n);
/// Induced bracket on the complement of the unit in A_U, U = k^n.
LieAlgebra sl(std::size_t n);
/// Commutator of A_U, U = 1 (+) S in super vector spaces.
LieAlgebra gl11(CategoryContext const &ctx);
/// Commutator of A_U for U of grades (0,0), (1,0), (0,1) over ctx (Z2 x Z2).
LieAlgebra color_gl(CategoryContext const &ctx);
LieAlgebra sum_of(CategoryContext const &ctx, std::vector<LieAlgebra> const &parts);

struct NamedAlgebra {
	std::string name;
	CategoryContext ctx;
	LieAlgebra algebra;
};

/// abelian, Heisenberg, 2-dim solvable, sl2, sl3, gl2, gl3, gl(1|1) in both
/// structures and the Z2 x Z2 color A_U.
std::vector<NamedAlgebra> const &lie_corpus();

// bialgebras

/// Group algebra of Z2, basis (1, g), in plain vector spaces.
Bialgebra z2_group_bialgebra();
/// Q[x]/(x^2) with x primitive of the given parity (ignored when ctx is trivial).
Bialgebra dual_numbers(CategoryContext const &ctx, int parity);
/// Primitive elements by a rational solve of Delta x = x (x) 1 + 1 (x) x,
/// for bialgebras with rational structure constants.
std::vector<std::vector<Rational>> primitive_oracle(CategoryContext const &ctx, Bialgebra const &b);

// oracles

/// sum_k w(g_k) [x, [y, e_k]]_k with w = theta * sigma, read off the bracket
/// matrix entry by entry.
Matrix killing_oracle(CategoryContext const &ctx, LieAlgebra const &l, bool twisted = true);

/// kappa(E_ab, E_cd) by explicit matrix commutators in gl_n.
Matrix gl_killing_oracle(std::size_t n);
/// 2n tr(XY) - 2 tr(X) tr(Y) on matrix units.
Matrix gl_trace_formula(std::size_t n);

/// Null space of a rational matrix by plain Gaussian elimination.
std::vector<std::vector<Rational>> rational_null_space(std::vector<std::vector<Rational>> m);

// random material

using Rng = std::mt19937;

Cyclotomic random_scalar(CategoryContext const &ctx, Rng &rng, bool allow_zero = true);
GObject random_object(CategoryContext const &ctx, Rng &rng, std::size_t min_dim, std::size_t max_dim);
GMorphism random_morphism(CategoryContext const &ctx, GObject const &src, GObject const &dst, Rng &rng);

/// A random well-typed DSL expression over a workspace with objects U, V
/// and a morphism f : U -> V, together with the same composite built
/// directly from library calls.
struct RandomExpr {
	std::string text;
	GMorphism expected;
};

/// Workspace with objects U, V and morphism f : U -> V for expression tests.
Workspace expression_workspace(CategoryContext const &ctx, Rng &rng);
RandomExpr random_expr(Workspace const &ws, Rng &rng, std::size_t steps);

// fixtures

/// Directory holding the JSON fixtures (RIBBONLIE_FIXTURES or the source tree).
std::string fixture(std::string const &name);

bool entries_equal(Matrix const &a, Matrix const &b);

} // namespace corpus
