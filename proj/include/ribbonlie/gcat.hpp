#pragma once

// The concrete symmetric ribbon category of Gamma-graded vector spaces.
//
// Gamma = Z_{n1} x ... x Z_{nk}, the braiding is the flip decorated with a
// skew bicharacter phi, and the twist is a +-1 character theta.  Objects are
// ordered lists of grades (one per basis slot); morphisms are grade
// preserving matrices over Q(zeta_N), N = exponent of Gamma.
//
// Conventions:
//  * The monoidal structure is strict.  Slot (i,j) of U (x) V has grade
//    g_i + h_j and index i*dim(V) + j.  The unit is a single grade-0 slot;
//    the empty list is the zero object.
//  * Left and right duals are the same object (negated grades, same slot
//    order).  Cups and caps carry coefficient 1 on matching slots; all
//    phases live in the braiding, the twist and the sovereign structure.
//  * sigma on a slot of grade g is theta(g) * phi(g, g).

#include "ribbonlie/scalars.hpp"

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace ribbonlie {

/// Element of Gamma, one residue per cyclic factor.
using Grade = std::vector<int>;

class GradingGroup {
  public:
	GradingGroup() = default;
	explicit GradingGroup(std::vector<int> cyclic_orders);

	std::vector<int> const &cyclic_orders() const { return orders_; }
	std::size_t rank() const { return orders_.size(); }
	/// lcm of the cyclic orders, 1 for the trivial group.
	int exponent() const { return exponent_; }

	Grade zero() const { return Grade(orders_.size(), 0); }
	Grade normalize(Grade g) const;
	Grade add(Grade const &a, Grade const &b) const;
	Grade negate(Grade const &a) const;
	/// All elements in lexicographic order.
	std::vector<Grade> elements() const;

	friend bool operator==(GradingGroup const &, GradingGroup const &) = default;

  private:
	std::vector<int> orders_;
	int exponent_ = 1;
};

enum class SuperStructure {
	/// theta_S = -1 with strict sovereign structure; dim(S) = 1.
	twisted,
	/// theta_S = 1 with sigma_S = -1; traces are supertraces, dim(S) = -1.
	supertrace,
};

class CategoryContext {
  public:
	/// Validates well-definedness and skewness of the bicharacter and the
	/// ribbon signs; throws std::invalid_argument otherwise.
	CategoryContext(std::vector<int> cyclic_orders,
	                std::vector<std::vector<int>> bicharacter_exponents,
	                std::vector<int> ribbon_signs);

	/// Plain vector spaces.
	static CategoryContext trivial();
	/// Super vector spaces with one of the two ribbon structures.
	static CategoryContext super_vect(SuperStructure structure);

	GradingGroup const &group() const { return group_; }
	std::vector<std::vector<int>> const &bicharacter_exponents() const { return phi_; }
	std::vector<int> const &ribbon_signs() const { return signs_; }
	/// Cyclotomic order N of every scalar in this context.
	int order() const { return group_.exponent(); }

	Cyclotomic scalar(Rational const &q) const { return Cyclotomic(order(), q); }
	Cyclotomic zero_scalar() const { return Cyclotomic(order()); }
	Cyclotomic one() const { return Cyclotomic::one(order()); }

	/// Exponent of zeta_N in phi(g, h).
	int phi_exponent(Grade const &g, Grade const &h) const;
	Cyclotomic phi(Grade const &g, Grade const &h) const;
	int theta(Grade const &g) const;
	int sigma(Grade const &g) const;

	friend bool operator==(CategoryContext const &, CategoryContext const &) = default;

  private:
	GradingGroup group_;
	std::vector<std::vector<int>> phi_;
	std::vector<int> signs_;
};

class GObject {
  public:
	GObject() = default;
	explicit GObject(std::vector<Grade> grades) : grades_(std::move(grades)) {}

	/// The tensor unit: one slot of grade zero.
	static GObject unit(CategoryContext const &ctx) { return GObject({ctx.group().zero()}); }
	/// The zero object (no slots).
	static GObject zero() { return GObject(); }

	std::size_t dim() const { return grades_.size(); }
	std::vector<Grade> const &grades() const { return grades_; }
	Grade const &grade(std::size_t i) const { return grades_[i]; }

	friend bool operator==(GObject const &, GObject const &) = default;

  private:
	std::vector<Grade> grades_;
};

GObject tensor(CategoryContext const &ctx, GObject const &u, GObject const &v);
/// U^(x)n; n = 0 gives the unit.
GObject tensor_power(CategoryContext const &ctx, GObject const &u, std::size_t n);
/// Slot concatenation.
GObject direct_sum(std::span<GObject const> parts);
/// U^v (= ^vU in this model).
GObject dual(CategoryContext const &ctx, GObject const &u);
std::string format_object(GObject const &u);

/// Thrown when a matrix entry would connect slots of different grade.
class GradeViolation : public std::invalid_argument {
  public:
	GradeViolation(std::size_t row, std::size_t col);
	std::size_t row;
	std::size_t col;
};

/// Thrown when composing or comparing morphisms whose objects differ.
class ObjectMismatch : public std::invalid_argument {
  public:
	using std::invalid_argument::invalid_argument;
};

using Vector = std::vector<Cyclotomic>;
/// Dense row-major matrix.
using Matrix = std::vector<Vector>;

/// Grade preserving linear map, stored column-sparse (one sorted list of
/// nonzero entries per source slot).
class GMorphism {
  public:
	struct Entry {
		std::size_t row;
		Cyclotomic value;
		friend bool operator==(Entry const &, Entry const &) = default;
	};
	using Column = std::vector<Entry>;

	GMorphism() = default;
	/// Zero morphism src -> dst.
	GMorphism(GObject src, GObject dst, int order);
	/// Builds from a dense dst.dim() x src.dim() matrix, checking grades.
	static GMorphism from_dense(GObject src, GObject dst, Matrix const &rows, int order);

	GObject const &src() const { return src_; }
	GObject const &dst() const { return dst_; }
	int order() const { return order_; }
	std::size_t rows() const { return dst_.dim(); }
	std::size_t cols() const { return src_.dim(); }

	Cyclotomic at(std::size_t row, std::size_t col) const;
	Column const &column(std::size_t col) const { return cols_[col]; }
	/// Throws GradeViolation for a nonzero value between mismatched grades.
	void set(std::size_t row, std::size_t col, Cyclotomic const &value);
	void add_to(std::size_t row, std::size_t col, Cyclotomic const &value);

	bool is_zero() const;
	std::size_t nonzeros() const;
	Matrix to_dense() const;
	/// Image of a coordinate vector.
	Vector apply(Vector const &x) const;

	GMorphism operator-() const;
	GMorphism &operator+=(GMorphism const &b);
	GMorphism &operator-=(GMorphism const &b);
	GMorphism &operator*=(Cyclotomic const &s);
	friend GMorphism operator+(GMorphism a, GMorphism const &b) { return a += b; }
	friend GMorphism operator-(GMorphism a, GMorphism const &b) { return a -= b; }
	friend GMorphism operator*(Cyclotomic const &s, GMorphism a) { return a *= s; }

	friend bool operator==(GMorphism const &, GMorphism const &) = default;

  private:
	void check_same_shape(GMorphism const &b) const;

	GObject src_;
	GObject dst_;
	int order_ = 1;
	std::vector<Column> cols_;
};

/// g o f.
GMorphism compose(GMorphism const &g, GMorphism const &f);
/// Composes right to left: compose_all({h, g, f}) = h o g o f.
GMorphism compose_all(std::initializer_list<GMorphism> chain);
/// Kronecker product matching the slot order of tensor(U, V).
GMorphism tensor(CategoryContext const &ctx, GMorphism const &f, GMorphism const &g);
GMorphism tensor_all(CategoryContext const &ctx, std::initializer_list<GMorphism> factors);

GMorphism identity(CategoryContext const &ctx, GObject const &u);
GMorphism zero_morphism(CategoryContext const &ctx, GObject const &src, GObject const &dst);

/// c_{U,V}: slot (i,j) -> (j,i) with factor phi(g_i, h_j).
GMorphism braiding(CategoryContext const &ctx, GObject const &u, GObject const &v);
/// c^(n)_U = c_{U^(n-1), U}, n >= 2.
GMorphism self_braiding_power(CategoryContext const &ctx, GObject const &u, std::size_t n);

/// d_U : U^v (x) U -> 1
GMorphism evaluation(CategoryContext const &ctx, GObject const &u);
/// b_U : 1 -> U (x) U^v
GMorphism coevaluation(CategoryContext const &ctx, GObject const &u);
/// d~_U : U (x) ^vU -> 1
GMorphism left_evaluation(CategoryContext const &ctx, GObject const &u);
/// b~_U : 1 -> ^vU (x) U
GMorphism left_coevaluation(CategoryContext const &ctx, GObject const &u);

GMorphism twist(CategoryContext const &ctx, GObject const &u);
/// sigma_U : U^v -> ^vU.
GMorphism sovereign(CategoryContext const &ctx, GObject const &u);
GMorphism sovereign_inverse(CategoryContext const &ctx, GObject const &u);

/// f^v : V^v -> U^v
GMorphism dual_right(CategoryContext const &ctx, GMorphism const &f);
/// ^vf : ^vV -> ^vU
GMorphism dual_left(CategoryContext const &ctx, GMorphism const &f);

/// d~_V o (f (x) sigma_V) o b_V.
Cyclotomic trace_right(CategoryContext const &ctx, GMorphism const &f);
/// d_V o (sigma_V^-1 (x) f) o b~_V.
Cyclotomic trace_left(CategoryContext const &ctx, GMorphism const &f);
/// Categorical dimension tr(id_U).
Cyclotomic dimension(CategoryContext const &ctx, GObject const &u);

/// For f : U (x) V -> V, where V = f.dst() and U is the declared prefix,
/// returns d~_V o (f (x) sigma_V) o (id_U (x) b_V) : U -> 1.
/// Throws ObjectMismatch unless f.src() == U (x) V.
GMorphism partial_trace(CategoryContext const &ctx, GMorphism const &f, GObject const &prefix);

/// tr(theta_U) = d~_U o (theta_U (x) sigma_U) o b_U; with a strict sovereign
/// structure this is d~_U o (theta_U (x) id) o b_U.
Cyclotomic dim_theta(CategoryContext const &ctx, GObject const &u);

/// Injections and projections of a direct sum of objects.
GMorphism injection(CategoryContext const &ctx, std::span<GObject const> parts, std::size_t i);
GMorphism projection(CategoryContext const &ctx, std::span<GObject const> parts, std::size_t i);

/// A triple (K, e, r) with r o e = id_K.
struct Retract {
	GObject object;
	GMorphism embed;
	GMorphism project;

	GMorphism idempotent() const { return compose(embed, project); }
};

/// One exactly checked equation lhs == rhs.
struct EquationCheck {
	std::string label;
	bool holds = true;
	/// First differing entry (row, col) in slot order, when violated.
	std::optional<std::pair<std::size_t, std::size_t>> violation;
	std::string lhs_entry;
	std::string rhs_entry;
};

EquationCheck check_equation(std::string label, GMorphism const &lhs, GMorphism const &rhs);

struct CheckReport {
	std::vector<EquationCheck> equations;

	bool ok() const;
	explicit operator bool() const { return ok(); }
	void add(EquationCheck c) { equations.push_back(std::move(c)); }
	void merge(CheckReport const &other);
	/// One line per equation: "PASS label" or "FAIL label at (r, c): a != b".
	std::string to_string() const;
};

} // namespace ribbonlie
