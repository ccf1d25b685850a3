#include "ribbonlie/scalars.hpp"

#include <cctype>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <sstream>

namespace ribbonlie {

namespace {

using QPoly = std::vector<Rational>;

void trim(QPoly &p)
{
	while (!p.empty() && p.back() == 0)
		p.pop_back();
}

IntPoly int_trim(IntPoly p)
{
	while (!p.empty() && p.back() == 0)
		p.pop_back();
	return p;
}

IntPoly int_mul(IntPoly const &a, IntPoly const &b)
{
	if (a.empty() || b.empty())
		return {};
	IntPoly r(a.size() + b.size() - 1, Integer(0));
	for (std::size_t i = 0; i < a.size(); ++i)
		for (std::size_t j = 0; j < b.size(); ++j)
			r[i + j] += a[i] * b[j];
	return r;
}

// exact division by a monic divisor; throws if there is a remainder
IntPoly int_exact_div(IntPoly num, IntPoly const &den)
{
	num = int_trim(std::move(num));
	auto const dd = den.size() - 1;
	if (den.back() != 1)
		throw std::logic_error("int_exact_div: divisor must be monic");
	if (num.size() < den.size())
		throw std::logic_error("int_exact_div: degree too small");
	IntPoly q(num.size() - dd, Integer(0));
	for (std::size_t k = num.size(); k-- > dd;) {
		Integer c = num[k];
		q[k - dd] = c;
		if (c == 0)
			continue;
		for (std::size_t i = 0; i <= dd; ++i)
			num[k - dd + i] -= c * den[i];
	}
	if (!int_trim(num).empty())
		throw std::logic_error("int_exact_div: nonzero remainder");
	return q;
}

struct PhiCache {
	std::mutex mutex;
	std::map<int, std::shared_ptr<const IntPoly>> polys;
};

PhiCache &phi_cache()
{
	static PhiCache cache;
	return cache;
}

std::shared_ptr<const IntPoly> cached_phi(int n)
{
	auto &cache = phi_cache();
	{
		std::lock_guard lock(cache.mutex);
		auto it = cache.polys.find(n);
		if (it != cache.polys.end())
			return it->second;
	}
	auto poly = std::make_shared<const IntPoly>(cyclotomic_polynomial(n));
	std::lock_guard lock(cache.mutex);
	return cache.polys.emplace(n, std::move(poly)).first->second;
}

// reduce modulo the monic Phi_N, result has exactly deg(Phi_N) coefficients
std::vector<Rational> reduce(QPoly p, IntPoly const &phi)
{
	auto const d = phi.size() - 1;
	for (std::size_t k = p.size(); k-- > d;) {
		if (p[k] == 0)
			continue;
		Rational c = p[k];
		for (std::size_t i = 0; i <= d; ++i)
			p[k - d + i] -= c * phi[i];
	}
	p.resize(d, Rational(0));
	return p;
}

// polynomial division in Q[x]
void divmod(QPoly const &a, QPoly const &b, QPoly &q, QPoly &r)
{
	r = a;
	trim(r);
	q.assign(r.size() >= b.size() ? r.size() - b.size() + 1 : 0, Rational(0));
	Rational const lead = b.back();
	while (!r.empty() && r.size() >= b.size()) {
		auto const shift = r.size() - b.size();
		Rational c = r.back() / lead;
		q[shift] = c;
		for (std::size_t i = 0; i < b.size(); ++i)
			r[shift + i] -= c * b[i];
		trim(r);
	}
}

QPoly qmul(QPoly const &a, QPoly const &b)
{
	if (a.empty() || b.empty())
		return {};
	QPoly r(a.size() + b.size() - 1, Rational(0));
	for (std::size_t i = 0; i < a.size(); ++i) {
		if (a[i] == 0)
			continue;
		for (std::size_t j = 0; j < b.size(); ++j)
			r[i + j] += a[i] * b[j];
	}
	return r;
}

QPoly qsub(QPoly a, QPoly const &b)
{
	if (a.size() < b.size())
		a.resize(b.size(), Rational(0));
	for (std::size_t i = 0; i < b.size(); ++i)
		a[i] -= b[i];
	trim(a);
	return a;
}

} // namespace

int euler_phi(int n)
{
	if (n < 1)
		throw std::invalid_argument("euler_phi: n must be positive");
	int result = n;
	int m = n;
	for (int p = 2; p * p <= m; ++p) {
		if (m % p != 0)
			continue;
		while (m % p == 0)
			m /= p;
		result -= result / p;
	}
	if (m > 1)
		result -= result / m;
	return result;
}

IntPoly cyclotomic_polynomial(int n)
{
	if (n < 1)
		throw std::invalid_argument("cyclotomic_polynomial: n must be positive");
	IntPoly num(static_cast<std::size_t>(n) + 1, Integer(0));
	num[0] = -1;
	num[n] = 1;
	IntPoly den{Integer(1)};
	for (int d = 1; d < n; ++d)
		if (n % d == 0)
			den = int_mul(den, *cached_phi(d));
	return int_exact_div(std::move(num), den);
}

Cyclotomic::Cyclotomic() : Cyclotomic(1) {}

Cyclotomic::Cyclotomic(int order)
    : order_(order), coeffs_(static_cast<std::size_t>(euler_phi(order)), Rational(0))
{
}

Cyclotomic::Cyclotomic(int order, Rational const &value) : Cyclotomic(order)
{
	coeffs_[0] = value;
	coeffs_[0].canonicalize();
}

Cyclotomic::Cyclotomic(int order, std::vector<Rational> const &powers)
    : order_(order)
{
	euler_phi(order); // validates order
	coeffs_ = reduce(powers, *cached_phi(order));
	for (auto &c : coeffs_)
		c.canonicalize();
}

Cyclotomic Cyclotomic::root_of_unity(int order, std::int64_t k)
{
	if (order < 1)
		throw std::invalid_argument("root_of_unity: order must be positive");
	auto e = static_cast<std::size_t>(((k % order) + order) % order);
	std::vector<Rational> powers(e + 1, Rational(0));
	powers[e] = 1;
	return Cyclotomic(order, powers);
}

bool Cyclotomic::is_zero() const
{
	for (auto const &c : coeffs_)
		if (c != 0)
			return false;
	return true;
}

bool Cyclotomic::is_rational() const
{
	for (std::size_t i = 1; i < coeffs_.size(); ++i)
		if (coeffs_[i] != 0)
			return false;
	return true;
}

bool Cyclotomic::is_one() const { return is_rational() && coeffs_[0] == 1; }

void Cyclotomic::check_order(Cyclotomic const &b) const
{
	if (order_ != b.order_)
		throw OrderMismatch("cyclotomic order mismatch: " + std::to_string(order_) +
		                    " vs " + std::to_string(b.order_));
}

Cyclotomic Cyclotomic::operator-() const
{
	Cyclotomic r = *this;
	for (auto &c : r.coeffs_)
		c = -c;
	return r;
}

Cyclotomic &Cyclotomic::operator+=(Cyclotomic const &b)
{
	check_order(b);
	for (std::size_t i = 0; i < coeffs_.size(); ++i)
		coeffs_[i] += b.coeffs_[i];
	return *this;
}

Cyclotomic &Cyclotomic::operator-=(Cyclotomic const &b)
{
	check_order(b);
	for (std::size_t i = 0; i < coeffs_.size(); ++i)
		coeffs_[i] -= b.coeffs_[i];
	return *this;
}

Cyclotomic &Cyclotomic::operator*=(Cyclotomic const &b)
{
	check_order(b);
	if (coeffs_.size() == 1) {
		coeffs_[0] *= b.coeffs_[0];
		return *this;
	}
	coeffs_ = reduce(qmul(coeffs_, b.coeffs_), *cached_phi(order_));
	return *this;
}

Cyclotomic &Cyclotomic::operator/=(Cyclotomic const &b)
{
	check_order(b);
	return *this *= b.inverse();
}

Cyclotomic Cyclotomic::inverse() const
{
	if (is_zero())
		throw std::domain_error("division by zero in Q(zeta_" + std::to_string(order_) + ")");
	if (coeffs_.size() == 1)
		return Cyclotomic(order_, Rational(1) / coeffs_[0]);

	// extended Euclid: track s with s*a = r (mod Phi)
	auto const &phi_int = *cached_phi(order_);
	QPoly phi(phi_int.begin(), phi_int.end());
	QPoly r0 = phi, r1 = coeffs_;
	trim(r1);
	QPoly s0, s1{Rational(1)};
	while (r1.size() > 1) {
		QPoly q, rem;
		divmod(r0, r1, q, rem);
		QPoly s2 = qsub(s0, qmul(q, s1));
		r0 = std::move(r1);
		r1 = std::move(rem);
		s0 = std::move(s1);
		s1 = std::move(s2);
	}
	// r1 is a nonzero constant since Phi is irreducible
	Rational const c = r1.at(0);
	for (auto &x : s1)
		x /= c;
	return Cyclotomic(order_, s1);
}

bool operator==(Cyclotomic const &a, Cyclotomic const &b)
{
	return a.order_ == b.order_ && a.coeffs_ == b.coeffs_;
}

Cyclotomic pow(Cyclotomic const &a, std::uint64_t e)
{
	Cyclotomic result = Cyclotomic::one(a.order());
	Cyclotomic base = a;
	while (e != 0) {
		if (e & 1)
			result *= base;
		base *= base;
		e >>= 1;
	}
	return result;
}

std::string format_rational(Rational const &q)
{
	std::string s = q.get_num().get_str();
	if (q.get_den() != 1)
		s += "/" + q.get_den().get_str();
	return s;
}

std::string Cyclotomic::to_string() const
{
	std::string out;
	bool first = true;
	for (std::size_t k = 0; k < coeffs_.size(); ++k) {
		Rational c = coeffs_[k];
		if (c == 0)
			continue;
		if (first) {
			if (c < 0) {
				out += "-";
				c = -c;
			}
		} else {
			out += c < 0 ? " - " : " + ";
			if (c < 0)
				c = -c;
		}
		out += format_rational(c);
		if (k >= 1)
			out += "*z";
		if (k >= 2)
			out += "^" + std::to_string(k);
		first = false;
	}
	return first ? "0" : out;
}

namespace {

class ScalarParser {
  public:
	ScalarParser(std::string_view text, int order) : text_(text), order_(order) {}

	Cyclotomic parse()
	{
		std::vector<Rational> powers;
		skip_ws();
		bool negate = false;
		if (peek() == '-' || peek() == '+') {
			negate = peek() == '-';
			++pos_;
		}
		add_term(powers, negate);
		for (;;) {
			skip_ws();
			if (at_end())
				break;
			char const op = peek();
			if (op != '+' && op != '-')
				fail("expected '+' or '-'");
			++pos_;
			add_term(powers, op == '-');
		}
		return Cyclotomic(order_, powers);
	}

  private:
	void add_term(std::vector<Rational> &powers, bool negate)
	{
		skip_ws();
		Rational coeff(1);
		bool have_coeff = false;
		if (std::isdigit(static_cast<unsigned char>(peek()))) {
			coeff = parse_rational();
			have_coeff = true;
		}
		std::size_t exponent = 0;
		skip_ws();
		bool want_z = false;
		if (have_coeff && peek() == '*') {
			++pos_;
			skip_ws();
			want_z = true;
		}
		if (peek() == 'z') {
			++pos_;
			exponent = 1;
			skip_ws();
			if (peek() == '^') {
				++pos_;
				skip_ws();
				exponent = static_cast<std::size_t>(parse_nat().get_ui());
			}
		} else if (want_z || !have_coeff) {
			fail("expected 'z'");
		}
		if (powers.size() <= exponent)
			powers.resize(exponent + 1, Rational(0));
		powers[exponent] += negate ? Rational(-coeff) : coeff;
	}

	Rational parse_rational()
	{
		Integer num = parse_nat();
		skip_ws();
		if (peek() == '/') {
			++pos_;
			skip_ws();
			Integer den = parse_nat();
			if (den == 0)
				fail("zero denominator");
			Rational q(num, den);
			q.canonicalize();
			return q;
		}
		return Rational(num);
	}

	Integer parse_nat()
	{
		auto const start = pos_;
		while (!at_end() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
			++pos_;
		if (start == pos_)
			fail("expected digits");
		return Integer(std::string(text_.substr(start, pos_ - start)));
	}

	void skip_ws()
	{
		while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_])))
			++pos_;
	}

	bool at_end() const { return pos_ >= text_.size(); }
	char peek() const { return at_end() ? '\0' : text_[pos_]; }

	[[noreturn]] void fail(char const *what) const
	{
		std::ostringstream os;
		os << "bad scalar literal \"" << text_ << "\" at position " << pos_ << ": " << what;
		throw std::invalid_argument(os.str());
	}

	std::string_view text_;
	int order_;
	std::size_t pos_ = 0;
};

} // namespace

Cyclotomic parse_scalar(std::string_view text, int order)
{
	return ScalarParser(text, order).parse();
}

} // namespace ribbonlie
