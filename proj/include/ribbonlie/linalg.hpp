#pragma once

// Exact linear algebra over Q(zeta_N) for graded subspaces: row reduction,
// kernels, images and idempotent splitting.  Pivots are chosen in slot
// order, so every basis produced here is deterministic.

#include "ribbonlie/gcat.hpp"

#include <optional>

namespace ribbonlie {

/// In-place reduced row echelon form; returns the pivot column of each
/// nonzero row.
std::vector<std::size_t> row_reduce(Matrix &m);

std::size_t rank(Matrix m);
std::optional<Matrix> invert(Matrix m);
Matrix transpose(Matrix const &m);
Matrix multiply(Matrix const &a, Matrix const &b);

/// Graded subspace of an object, held as a reduced echelon basis: basis
/// vector a has a 1 at pivot slot a and all other basis vectors vanish there.
/// Basis vectors built from homogeneous input are homogeneous.
class Subspace {
  public:
	Subspace(GObject ambient, int order);
	/// Span of the given vectors (each of length ambient.dim()).
	static Subspace span(GObject ambient, int order, std::vector<Vector> const &vectors);
	static Subspace whole(CategoryContext const &ctx, GObject const &ambient);

	GObject const &ambient() const { return ambient_; }
	int order() const { return order_; }
	std::size_t dim() const { return basis_.size(); }
	bool is_zero() const { return basis_.empty(); }
	std::vector<Vector> const &basis() const { return basis_; }
	std::vector<std::size_t> const &pivots() const { return pivots_; }

	/// The grades of the basis vectors, i.e. the subobject itself.
	GObject object() const;
	/// Monic K -> ambient whose columns are the basis vectors.
	GMorphism embedding() const;
	/// Retract K -> ambient -> K using the complement spanned by the
	/// non-pivot slots.
	Retract retract() const;

	bool contains(Vector const &v) const;
	bool contains(Subspace const &other) const;
	Subspace sum(Subspace const &other) const;
	Subspace intersect(Subspace const &other) const;
	/// Coordinates of v in the basis; v must lie in the subspace.
	Vector coordinates(Vector const &v) const;

	friend bool operator==(Subspace const &, Subspace const &) = default;

  private:
	GObject ambient_;
	int order_ = 1;
	std::vector<Vector> basis_;
	std::vector<std::size_t> pivots_;
};

Subspace column_space(GMorphism const &f);
Subspace null_space(GMorphism const &f);

struct Image {
	Subspace subspace;
	/// Monic h : V' -> V.
	GMorphism monic;
	/// g : U -> V' with h o g = f.
	GMorphism factor;
};

Image image(GMorphism const &f);

struct Kernel {
	Subspace subspace;
	GMorphism monic;
};

Kernel kernel(GMorphism const &f);

/// Splits an idempotent p into (W, e, r) with r o e = id_W and e o r = p.
/// Throws std::invalid_argument if p is not an idempotent endomorphism.
Retract split_idempotent(GMorphism const &p);

/// Homogeneous components of a vector, one per distinct grade present.
std::vector<Vector> homogeneous_components(GObject const &ambient, Vector const &v);

Vector zero_vector(std::size_t n, int order);
Vector unit_vector(std::size_t n, std::size_t i, int order);

} // namespace ribbonlie
