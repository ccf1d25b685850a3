#include "ribbonlie/gcat.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace ribbonlie {

namespace {

int mod(long long a, int n)
{
	auto r = static_cast<int>(a % n);
	return r < 0 ? r + n : r;
}

} // namespace

GradingGroup::GradingGroup(std::vector<int> cyclic_orders) : orders_(std::move(cyclic_orders))
{
	exponent_ = 1;
	for (int n : orders_) {
		if (n < 1)
			throw std::invalid_argument("cyclic orders must be positive");
		exponent_ = std::lcm(exponent_, n);
	}
}

Grade GradingGroup::normalize(Grade g) const
{
	if (g.size() != orders_.size())
		throw std::invalid_argument("grade has " + std::to_string(g.size()) +
		                            " components, group has rank " + std::to_string(orders_.size()));
	for (std::size_t i = 0; i < g.size(); ++i)
		g[i] = mod(g[i], orders_[i]);
	return g;
}

Grade GradingGroup::add(Grade const &a, Grade const &b) const
{
	Grade r(orders_.size());
	for (std::size_t i = 0; i < r.size(); ++i)
		r[i] = mod(static_cast<long long>(a[i]) + b[i], orders_[i]);
	return r;
}

Grade GradingGroup::negate(Grade const &a) const
{
	Grade r(orders_.size());
	for (std::size_t i = 0; i < r.size(); ++i)
		r[i] = mod(-static_cast<long long>(a[i]), orders_[i]);
	return r;
}

std::vector<Grade> GradingGroup::elements() const
{
	std::vector<Grade> out{zero()};
	for (std::size_t i = 0; i < orders_.size(); ++i) {
		std::vector<Grade> next;
		for (auto const &g : out)
			for (int v = 0; v < orders_[i]; ++v) {
				Grade h = g;
				h[i] = v;
				next.push_back(std::move(h));
			}
		out = std::move(next);
	}
	return out;
}

CategoryContext::CategoryContext(std::vector<int> cyclic_orders,
                                 std::vector<std::vector<int>> bicharacter_exponents,
                                 std::vector<int> ribbon_signs)
    : group_(std::move(cyclic_orders)), phi_(std::move(bicharacter_exponents)),
      signs_(std::move(ribbon_signs))
{
	auto const k = group_.rank();
	int const n = group_.exponent();
	auto const &orders = group_.cyclic_orders();
	if (phi_.size() != k)
		throw std::invalid_argument("bicharacter must be a " + std::to_string(k) + "x" +
		                            std::to_string(k) + " matrix");
	for (auto &row : phi_) {
		if (row.size() != k)
			throw std::invalid_argument("bicharacter must be square");
		for (auto &x : row)
			x = mod(x, n);
	}
	for (std::size_t i = 0; i < k; ++i)
		for (std::size_t j = 0; j < k; ++j) {
			long long const m = phi_[i][j];
			if ((orders[i] * m) % n != 0 || (orders[j] * m) % n != 0)
				throw std::invalid_argument("bicharacter entry (" + std::to_string(i) + "," +
				                            std::to_string(j) + ") is not well defined on Gamma");
			if ((m + phi_[j][i]) % n != 0)
				throw std::invalid_argument("bicharacter is not skew at (" + std::to_string(i) +
				                            "," + std::to_string(j) + ")");
		}
	if (signs_.size() != k)
		throw std::invalid_argument("need one ribbon sign per cyclic factor");
	for (std::size_t i = 0; i < k; ++i) {
		if (signs_[i] != 1 && signs_[i] != -1)
			throw std::invalid_argument("ribbon signs must be +1 or -1");
		if (signs_[i] == -1 && orders[i] % 2 != 0)
			throw std::invalid_argument("ribbon sign -1 on a cyclic factor of odd order");
	}
}

CategoryContext CategoryContext::trivial() { return CategoryContext({}, {}, {}); }

CategoryContext CategoryContext::super_vect(SuperStructure structure)
{
	return CategoryContext({2}, {{1}}, {structure == SuperStructure::twisted ? -1 : 1});
}

int CategoryContext::phi_exponent(Grade const &g, Grade const &h) const
{
	long long e = 0;
	for (std::size_t i = 0; i < phi_.size(); ++i)
		for (std::size_t j = 0; j < phi_.size(); ++j)
			e += static_cast<long long>(g[i]) * phi_[i][j] * h[j];
	return mod(e, order());
}

Cyclotomic CategoryContext::phi(Grade const &g, Grade const &h) const
{
	return Cyclotomic::root_of_unity(order(), phi_exponent(g, h));
}

int CategoryContext::theta(Grade const &g) const
{
	int s = 1;
	for (std::size_t i = 0; i < signs_.size(); ++i)
		if (signs_[i] == -1 && g[i] % 2 != 0)
			s = -s;
	return s;
}

int CategoryContext::sigma(Grade const &g) const
{
	// phi(g, g) is +-1 by skewness
	int const e = phi_exponent(g, g);
	int const self = e == 0 ? 1 : -1;
	return theta(g) * self;
}

GObject tensor(CategoryContext const &ctx, GObject const &u, GObject const &v)
{
	std::vector<Grade> grades;
	grades.reserve(u.dim() * v.dim());
	for (auto const &g : u.grades())
		for (auto const &h : v.grades())
			grades.push_back(ctx.group().add(g, h));
	return GObject(std::move(grades));
}

GObject tensor_power(CategoryContext const &ctx, GObject const &u, std::size_t n)
{
	GObject r = GObject::unit(ctx);
	for (std::size_t i = 0; i < n; ++i)
		r = tensor(ctx, r, u);
	return r;
}

GObject direct_sum(std::span<GObject const> parts)
{
	std::vector<Grade> grades;
	for (auto const &p : parts)
		grades.insert(grades.end(), p.grades().begin(), p.grades().end());
	return GObject(std::move(grades));
}

GObject dual(CategoryContext const &ctx, GObject const &u)
{
	std::vector<Grade> grades;
	grades.reserve(u.dim());
	for (auto const &g : u.grades())
		grades.push_back(ctx.group().negate(g));
	return GObject(std::move(grades));
}

std::string format_object(GObject const &u)
{
	std::ostringstream os;
	os << "[";
	for (std::size_t i = 0; i < u.dim(); ++i) {
		if (i)
			os << ", ";
		os << "(";
		for (std::size_t j = 0; j < u.grade(i).size(); ++j)
			os << (j ? "," : "") << u.grade(i)[j];
		os << ")";
	}
	os << "]";
	return os.str();
}

GradeViolation::GradeViolation(std::size_t r, std::size_t c)
    : std::invalid_argument("grade-preservation violation at entry (" + std::to_string(r) + ", " +
                            std::to_string(c) + ")"),
      row(r), col(c)
{
}

GMorphism::GMorphism(GObject src, GObject dst, int order)
    : src_(std::move(src)), dst_(std::move(dst)), order_(order), cols_(src_.dim())
{
}

GMorphism GMorphism::from_dense(GObject src, GObject dst, Matrix const &rows, int order)
{
	GMorphism f(std::move(src), std::move(dst), order);
	if (rows.size() != f.rows())
		throw std::invalid_argument("from_dense: row count mismatch");
	for (std::size_t r = 0; r < rows.size(); ++r) {
		if (rows[r].size() != f.cols())
			throw std::invalid_argument("from_dense: column count mismatch");
		for (std::size_t c = 0; c < rows[r].size(); ++c)
			if (!rows[r][c].is_zero())
				f.set(r, c, rows[r][c]);
	}
	return f;
}

Cyclotomic GMorphism::at(std::size_t row, std::size_t col) const
{
	auto const &column = cols_.at(col);
	auto it = std::lower_bound(column.begin(), column.end(), row,
	                           [](Entry const &e, std::size_t r) { return e.row < r; });
	if (it != column.end() && it->row == row)
		return it->value;
	return Cyclotomic(order_);
}

void GMorphism::set(std::size_t row, std::size_t col, Cyclotomic const &value)
{
	if (row >= rows() || col >= cols())
		throw std::out_of_range("GMorphism::set: entry out of range");
	if (value.order() != order_)
		throw OrderMismatch("GMorphism::set: scalar of wrong cyclotomic order");
	auto &column = cols_[col];
	auto it = std::lower_bound(column.begin(), column.end(), row,
	                           [](Entry const &e, std::size_t r) { return e.row < r; });
	bool const present = it != column.end() && it->row == row;
	if (value.is_zero()) {
		if (present)
			column.erase(it);
		return;
	}
	if (dst_.grade(row) != src_.grade(col))
		throw GradeViolation(row, col);
	if (present)
		it->value = value;
	else
		column.insert(it, Entry{row, value});
}

void GMorphism::add_to(std::size_t row, std::size_t col, Cyclotomic const &value)
{
	set(row, col, at(row, col) + value);
}

bool GMorphism::is_zero() const
{
	return std::all_of(cols_.begin(), cols_.end(), [](Column const &c) { return c.empty(); });
}

std::size_t GMorphism::nonzeros() const
{
	std::size_t n = 0;
	for (auto const &c : cols_)
		n += c.size();
	return n;
}

Matrix GMorphism::to_dense() const
{
	Matrix m(rows(), Vector(cols(), Cyclotomic(order_)));
	for (std::size_t c = 0; c < cols(); ++c)
		for (auto const &e : cols_[c])
			m[e.row][c] = e.value;
	return m;
}

Vector GMorphism::apply(Vector const &x) const
{
	if (x.size() != cols())
		throw std::invalid_argument("apply: vector length mismatch");
	Vector y(rows(), Cyclotomic(order_));
	for (std::size_t c = 0; c < cols(); ++c) {
		if (x[c].is_zero())
			continue;
		for (auto const &e : cols_[c])
			y[e.row] += e.value * x[c];
	}
	return y;
}

void GMorphism::check_same_shape(GMorphism const &b) const
{
	if (src_ != b.src_ || dst_ != b.dst_)
		throw ObjectMismatch("morphisms have different source or target");
	if (order_ != b.order_)
		throw OrderMismatch("morphisms over different cyclotomic fields");
}

GMorphism GMorphism::operator-() const
{
	GMorphism r = *this;
	for (auto &c : r.cols_)
		for (auto &e : c)
			e.value = -e.value;
	return r;
}

GMorphism &GMorphism::operator+=(GMorphism const &b)
{
	check_same_shape(b);
	for (std::size_t c = 0; c < cols(); ++c) {
		Column merged;
		auto const &x = cols_[c];
		auto const &y = b.cols_[c];
		std::size_t i = 0, j = 0;
		while (i < x.size() || j < y.size()) {
			if (j == y.size() || (i < x.size() && x[i].row < y[j].row)) {
				merged.push_back(x[i++]);
			} else if (i == x.size() || y[j].row < x[i].row) {
				merged.push_back(y[j++]);
			} else {
				Cyclotomic s = x[i].value + y[j].value;
				if (!s.is_zero())
					merged.push_back(Entry{x[i].row, std::move(s)});
				++i;
				++j;
			}
		}
		cols_[c] = std::move(merged);
	}
	return *this;
}

GMorphism &GMorphism::operator-=(GMorphism const &b) { return *this += -b; }

GMorphism &GMorphism::operator*=(Cyclotomic const &s)
{
	if (s.is_zero()) {
		for (auto &c : cols_)
			c.clear();
		return *this;
	}
	for (auto &c : cols_)
		for (auto &e : c)
			e.value *= s;
	return *this;
}

GMorphism compose(GMorphism const &g, GMorphism const &f)
{
	if (f.dst() != g.src())
		throw ObjectMismatch("compose: target " + format_object(f.dst()) + " does not match source " +
		                     format_object(g.src()));
	if (f.order() != g.order())
		throw OrderMismatch("compose: different cyclotomic fields");
	GMorphism h(f.src(), g.dst(), f.order());
	Vector acc(g.rows(), Cyclotomic(f.order()));
	std::vector<char> used(g.rows(), 0);
	std::vector<std::size_t> touched;
	for (std::size_t c = 0; c < f.cols(); ++c) {
		touched.clear();
		for (auto const &fe : f.column(c))
			for (auto const &ge : g.column(fe.row)) {
				if (!used[ge.row]) {
					used[ge.row] = 1;
					touched.push_back(ge.row);
					acc[ge.row] = ge.value * fe.value;
				} else {
					acc[ge.row] += ge.value * fe.value;
				}
			}
		std::sort(touched.begin(), touched.end());
		for (auto r : touched) {
			if (!acc[r].is_zero())
				h.set(r, c, acc[r]);
			used[r] = 0;
		}
	}
	return h;
}

GMorphism compose_all(std::initializer_list<GMorphism> chain)
{
	if (chain.size() == 0)
		throw std::invalid_argument("compose_all: empty chain");
	auto it = std::rbegin(chain);
	GMorphism result = *it++;
	for (; it != std::rend(chain); ++it)
		result = compose(*it, result);
	return result;
}

GMorphism tensor(CategoryContext const &ctx, GMorphism const &f, GMorphism const &g)
{
	if (f.order() != g.order())
		throw OrderMismatch("tensor: different cyclotomic fields");
	GMorphism h(tensor(ctx, f.src(), g.src()), tensor(ctx, f.dst(), g.dst()), f.order());
	auto const gc = g.cols();
	auto const gr = g.rows();
	for (std::size_t i = 0; i < f.cols(); ++i)
		for (std::size_t j = 0; j < gc; ++j)
			for (auto const &fe : f.column(i))
				for (auto const &ge : g.column(j))
					h.set(fe.row * gr + ge.row, i * gc + j, fe.value * ge.value);
	return h;
}

GMorphism tensor_all(CategoryContext const &ctx, std::initializer_list<GMorphism> factors)
{
	if (factors.size() == 0)
		throw std::invalid_argument("tensor_all: no factors");
	auto it = factors.begin();
	GMorphism result = *it++;
	for (; it != factors.end(); ++it)
		result = tensor(ctx, result, *it);
	return result;
}

GMorphism identity(CategoryContext const &ctx, GObject const &u)
{
	GMorphism f(u, u, ctx.order());
	for (std::size_t i = 0; i < u.dim(); ++i)
		f.set(i, i, ctx.one());
	return f;
}

GMorphism zero_morphism(CategoryContext const &ctx, GObject const &src, GObject const &dst)
{
	return GMorphism(src, dst, ctx.order());
}

GMorphism braiding(CategoryContext const &ctx, GObject const &u, GObject const &v)
{
	GMorphism c(tensor(ctx, u, v), tensor(ctx, v, u), ctx.order());
	for (std::size_t i = 0; i < u.dim(); ++i)
		for (std::size_t j = 0; j < v.dim(); ++j)
			c.set(j * u.dim() + i, i * v.dim() + j, ctx.phi(u.grade(i), v.grade(j)));
	return c;
}

GMorphism self_braiding_power(CategoryContext const &ctx, GObject const &u, std::size_t n)
{
	if (n < 2)
		throw std::invalid_argument("self_braiding_power: n must be at least 2");
	return braiding(ctx, tensor_power(ctx, u, n - 1), u);
}

namespace {

GMorphism pairing_cap(CategoryContext const &ctx, GObject const &first, GObject const &second)
{
	GMorphism d(tensor(ctx, first, second), GObject::unit(ctx), ctx.order());
	auto const n = first.dim();
	for (std::size_t i = 0; i < n; ++i)
		d.set(0, i * n + i, ctx.one());
	return d;
}

GMorphism pairing_cup(CategoryContext const &ctx, GObject const &first, GObject const &second)
{
	GMorphism b(GObject::unit(ctx), tensor(ctx, first, second), ctx.order());
	auto const n = first.dim();
	for (std::size_t i = 0; i < n; ++i)
		b.set(i * n + i, 0, ctx.one());
	return b;
}

} // namespace

GMorphism evaluation(CategoryContext const &ctx, GObject const &u)
{
	return pairing_cap(ctx, dual(ctx, u), u);
}

GMorphism coevaluation(CategoryContext const &ctx, GObject const &u)
{
	return pairing_cup(ctx, u, dual(ctx, u));
}

GMorphism left_evaluation(CategoryContext const &ctx, GObject const &u)
{
	return pairing_cap(ctx, u, dual(ctx, u));
}

GMorphism left_coevaluation(CategoryContext const &ctx, GObject const &u)
{
	return pairing_cup(ctx, dual(ctx, u), u);
}

GMorphism twist(CategoryContext const &ctx, GObject const &u)
{
	GMorphism t(u, u, ctx.order());
	for (std::size_t i = 0; i < u.dim(); ++i)
		t.set(i, i, ctx.scalar(ctx.theta(u.grade(i))));
	return t;
}

GMorphism sovereign(CategoryContext const &ctx, GObject const &u)
{
	auto const d = dual(ctx, u);
	GMorphism s(d, d, ctx.order());
	for (std::size_t i = 0; i < u.dim(); ++i)
		s.set(i, i, ctx.scalar(ctx.sigma(u.grade(i))));
	return s;
}

GMorphism sovereign_inverse(CategoryContext const &ctx, GObject const &u)
{
	// sigma takes values +-1
	return sovereign(ctx, u);
}

namespace {

GMorphism transpose_between(CategoryContext const &ctx, GMorphism const &f)
{
	GMorphism t(dual(ctx, f.dst()), dual(ctx, f.src()), f.order());
	for (std::size_t c = 0; c < f.cols(); ++c)
		for (auto const &e : f.column(c))
			t.set(c, e.row, e.value);
	return t;
}

} // namespace

GMorphism dual_right(CategoryContext const &ctx, GMorphism const &f)
{
	return transpose_between(ctx, f);
}

GMorphism dual_left(CategoryContext const &ctx, GMorphism const &f)
{
	return transpose_between(ctx, f);
}

Cyclotomic trace_right(CategoryContext const &ctx, GMorphism const &f)
{
	if (f.src() != f.dst())
		throw ObjectMismatch("trace of a non-endomorphism");
	Cyclotomic t = ctx.zero_scalar();
	for (std::size_t i = 0; i < f.cols(); ++i)
		t += f.at(i, i) * ctx.scalar(ctx.sigma(f.src().grade(i)));
	return t;
}

Cyclotomic trace_left(CategoryContext const &ctx, GMorphism const &f)
{
	if (f.src() != f.dst())
		throw ObjectMismatch("trace of a non-endomorphism");
	Cyclotomic t = ctx.zero_scalar();
	for (std::size_t i = 0; i < f.cols(); ++i)
		t += ctx.scalar(ctx.sigma(f.src().grade(i))).inverse() * f.at(i, i);
	return t;
}

Cyclotomic dimension(CategoryContext const &ctx, GObject const &u)
{
	return trace_right(ctx, identity(ctx, u));
}

GMorphism partial_trace(CategoryContext const &ctx, GMorphism const &f, GObject const &prefix)
{
	auto const &v = f.dst();
	if (f.src() != tensor(ctx, prefix, v))
		throw ObjectMismatch("partial_trace: source " + format_object(f.src()) +
		                     " is not prefix (x) target for prefix " + format_object(prefix));
	GMorphism t(prefix, GObject::unit(ctx), ctx.order());
	auto const n = v.dim();
	for (std::size_t u = 0; u < prefix.dim(); ++u) {
		Cyclotomic sum = ctx.zero_scalar();
		for (std::size_t k = 0; k < n; ++k) {
			auto x = f.at(k, u * n + k);
			if (!x.is_zero())
				sum += x * ctx.scalar(ctx.sigma(v.grade(k)));
		}
		t.set(0, u, sum);
	}
	return t;
}

Cyclotomic dim_theta(CategoryContext const &ctx, GObject const &u)
{
	return trace_right(ctx, twist(ctx, u));
}

GMorphism injection(CategoryContext const &ctx, std::span<GObject const> parts, std::size_t i)
{
	std::size_t offset = 0;
	for (std::size_t k = 0; k < i; ++k)
		offset += parts[k].dim();
	GMorphism e(parts[i], direct_sum(parts), ctx.order());
	for (std::size_t s = 0; s < parts[i].dim(); ++s)
		e.set(offset + s, s, ctx.one());
	return e;
}

GMorphism projection(CategoryContext const &ctx, std::span<GObject const> parts, std::size_t i)
{
	std::size_t offset = 0;
	for (std::size_t k = 0; k < i; ++k)
		offset += parts[k].dim();
	GMorphism r(direct_sum(parts), parts[i], ctx.order());
	for (std::size_t s = 0; s < parts[i].dim(); ++s)
		r.set(s, offset + s, ctx.one());
	return r;
}

EquationCheck check_equation(std::string label, GMorphism const &lhs, GMorphism const &rhs)
{
	EquationCheck out;
	out.label = std::move(label);
	if (lhs.src() != rhs.src() || lhs.dst() != rhs.dst()) {
		out.holds = false;
		out.lhs_entry = format_object(lhs.src()) + " -> " + format_object(lhs.dst());
		out.rhs_entry = format_object(rhs.src()) + " -> " + format_object(rhs.dst());
		return out;
	}
	for (std::size_t c = 0; c < lhs.cols(); ++c) {
		if (lhs.column(c) == rhs.column(c))
			continue;
		auto const &a = lhs.column(c);
		auto const &b = rhs.column(c);
		std::size_t i = 0;
		while (i < a.size() && i < b.size() && a[i] == b[i])
			++i;
		std::size_t row;
		if (i == a.size())
			row = b[i].row;
		else if (i == b.size())
			row = a[i].row;
		else
			row = std::min(a[i].row, b[i].row);
		out.holds = false;
		out.violation = std::make_pair(row, c);
		out.lhs_entry = lhs.at(row, c).to_string();
		out.rhs_entry = rhs.at(row, c).to_string();
		return out;
	}
	return out;
}

bool CheckReport::ok() const
{
	return std::all_of(equations.begin(), equations.end(),
	                   [](EquationCheck const &e) { return e.holds; });
}

void CheckReport::merge(CheckReport const &other)
{
	equations.insert(equations.end(), other.equations.begin(), other.equations.end());
}

std::string CheckReport::to_string() const
{
	std::ostringstream os;
	for (auto const &e : equations) {
		os << (e.holds ? "PASS " : "FAIL ") << e.label;
		if (!e.holds) {
			if (e.violation)
				os << " at (" << e.violation->first << ", " << e.violation->second << ")";
			os << ": " << e.lhs_entry << " != " << e.rhs_entry;
		}
		os << "\n";
	}
	return os.str();
}

} // namespace ribbonlie
