#pragma once

// Exact arithmetic in the cyclotomic field Q(zeta_N).
//
// Elements are stored in the power basis of Q[x]/Phi_N(x), so every nonzero
// element is invertible.  All values are immutable once built and every
// operation is a pure function of its arguments.

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace ribbonlie {

using Rational = mpq_class;
using Integer = mpz_class;

/// Dense polynomial with integer coefficients, lowest degree first.
using IntPoly = std::vector<Integer>;

/// Raised when two scalars of different cyclotomic order meet.
class OrderMismatch : public std::invalid_argument {
  public:
	using std::invalid_argument::invalid_argument;
};

/// N-th cyclotomic polynomial, obtained by dividing x^N - 1 by Phi_d for
/// every proper divisor d of N.
IntPoly cyclotomic_polynomial(int n);

/// Euler totient, equal to deg Phi_N.
int euler_phi(int n);

class Cyclotomic {
  public:
	/// Zero of Q(zeta_1) = Q.
	Cyclotomic();
	/// Zero of Q(zeta_N).
	explicit Cyclotomic(int order);
	Cyclotomic(int order, Rational const &value);
	/// Reduces an arbitrary coefficient vector on powers of zeta_N.
	Cyclotomic(int order, std::vector<Rational> const &powers);

	static Cyclotomic zero(int order) { return Cyclotomic(order); }
	static Cyclotomic one(int order) { return Cyclotomic(order, Rational(1)); }
	/// zeta_N^(k mod N).
	static Cyclotomic root_of_unity(int order, std::int64_t k);

	int order() const { return order_; }
	/// Coordinates in the power basis; length euler_phi(order()).
	std::vector<Rational> const &coefficients() const { return coeffs_; }

	bool is_zero() const;
	bool is_one() const;
	bool is_rational() const;
	/// Precondition: is_rational().
	Rational const &rational_part() const { return coeffs_.front(); }

	Cyclotomic inverse() const;

	Cyclotomic operator-() const;
	Cyclotomic &operator+=(Cyclotomic const &b);
	Cyclotomic &operator-=(Cyclotomic const &b);
	Cyclotomic &operator*=(Cyclotomic const &b);
	Cyclotomic &operator/=(Cyclotomic const &b);

	friend Cyclotomic operator+(Cyclotomic a, Cyclotomic const &b) { return a += b; }
	friend Cyclotomic operator-(Cyclotomic a, Cyclotomic const &b) { return a -= b; }
	friend Cyclotomic operator*(Cyclotomic a, Cyclotomic const &b) { return a *= b; }
	friend Cyclotomic operator/(Cyclotomic a, Cyclotomic const &b) { return a /= b; }

	friend bool operator==(Cyclotomic const &a, Cyclotomic const &b);

	/// Canonical text form in the scalar grammar, e.g. "-1 + 3/2*z^2".
	std::string to_string() const;

  private:
	void check_order(Cyclotomic const &b) const;

	int order_;
	std::vector<Rational> coeffs_;
};

Cyclotomic pow(Cyclotomic const &a, std::uint64_t e);

/// Parses the scalar grammar
///   rational  := int ['/' posint]
///   cycloterm := rational ['*' 'z' ['^' nat]]
///   scalar    := cycloterm (('+'|'-') cycloterm)*
/// where z stands for zeta_N.  A bare `z` is accepted as shorthand for 1*z.
/// Throws std::invalid_argument with the offending position.
Cyclotomic parse_scalar(std::string_view text, int order);

std::string format_rational(Rational const &q);

} // namespace ribbonlie
