#include "ribbonlie/linalg.hpp"

#include <algorithm>
#include <map>

namespace ribbonlie {

Vector zero_vector(std::size_t n, int order) { return Vector(n, Cyclotomic(order)); }

Vector unit_vector(std::size_t n, std::size_t i, int order)
{
	Vector v = zero_vector(n, order);
	v.at(i) = Cyclotomic::one(order);
	return v;
}

std::vector<std::size_t> row_reduce(Matrix &m)
{
	std::vector<std::size_t> pivots;
	if (m.empty())
		return pivots;
	auto const rows = m.size();
	auto const cols = m.front().size();
	std::size_t r = 0;
	for (std::size_t c = 0; c < cols && r < rows; ++c) {
		std::size_t p = r;
		while (p < rows && m[p][c].is_zero())
			++p;
		if (p == rows)
			continue;
		std::swap(m[r], m[p]);
		Cyclotomic const inv = m[r][c].inverse();
		for (std::size_t k = c; k < cols; ++k)
			if (!m[r][k].is_zero())
				m[r][k] *= inv;
		for (std::size_t i = 0; i < rows; ++i) {
			if (i == r || m[i][c].is_zero())
				continue;
			Cyclotomic const factor = m[i][c];
			for (std::size_t k = c; k < cols; ++k)
				if (!m[r][k].is_zero())
					m[i][k] -= factor * m[r][k];
		}
		pivots.push_back(c);
		++r;
	}
	return pivots;
}

std::size_t rank(Matrix m) { return row_reduce(m).size(); }

Matrix transpose(Matrix const &m)
{
	if (m.empty())
		return {};
	Matrix t(m.front().size(), Vector(m.size()));
	for (std::size_t i = 0; i < m.size(); ++i)
		for (std::size_t j = 0; j < m[i].size(); ++j)
			t[j][i] = m[i][j];
	return t;
}

Matrix multiply(Matrix const &a, Matrix const &b)
{
	if (a.empty())
		return {};
	if (a.front().size() != b.size())
		throw std::invalid_argument("multiply: inner dimension mismatch");
	int const order = a.front().empty() ? 1 : a.front().front().order();
	auto const cols = b.empty() ? 0 : b.front().size();
	Matrix c(a.size(), zero_vector(cols, order));
	for (std::size_t i = 0; i < a.size(); ++i)
		for (std::size_t k = 0; k < b.size(); ++k) {
			if (a[i][k].is_zero())
				continue;
			for (std::size_t j = 0; j < cols; ++j)
				if (!b[k][j].is_zero())
					c[i][j] += a[i][k] * b[k][j];
		}
	return c;
}

std::optional<Matrix> invert(Matrix m)
{
	auto const n = m.size();
	if (n == 0)
		return Matrix{};
	int const order = m.front().front().order();
	for (std::size_t i = 0; i < n; ++i) {
		if (m[i].size() != n)
			throw std::invalid_argument("invert: matrix is not square");
		auto id = unit_vector(n, i, order);
		m[i].insert(m[i].end(), id.begin(), id.end());
	}
	auto pivots = row_reduce(m);
	if (pivots.size() < n || pivots.back() >= n)
		return std::nullopt;
	Matrix inv(n);
	for (std::size_t i = 0; i < n; ++i)
		inv[i].assign(m[i].begin() + static_cast<std::ptrdiff_t>(n), m[i].end());
	return inv;
}

Subspace::Subspace(GObject ambient, int order) : ambient_(std::move(ambient)), order_(order) {}

Subspace Subspace::span(GObject ambient, int order, std::vector<Vector> const &vectors)
{
	Subspace s(std::move(ambient), order);
	if (vectors.empty())
		return s;
	Matrix m = vectors;
	for (auto const &v : m)
		if (v.size() != s.ambient_.dim())
			throw std::invalid_argument("Subspace::span: vector length mismatch");
	auto pivots = row_reduce(m);
	m.resize(pivots.size());
	s.basis_ = std::move(m);
	s.pivots_ = std::move(pivots);
	return s;
}

Subspace Subspace::whole(CategoryContext const &ctx, GObject const &ambient)
{
	std::vector<Vector> vs;
	for (std::size_t i = 0; i < ambient.dim(); ++i)
		vs.push_back(unit_vector(ambient.dim(), i, ctx.order()));
	return span(ambient, ctx.order(), vs);
}

GObject Subspace::object() const
{
	std::vector<Grade> grades;
	grades.reserve(pivots_.size());
	for (auto p : pivots_)
		grades.push_back(ambient_.grade(p));
	return GObject(std::move(grades));
}

GMorphism Subspace::embedding() const
{
	GMorphism e(object(), ambient_, order_);
	for (std::size_t a = 0; a < basis_.size(); ++a)
		for (std::size_t i = 0; i < ambient_.dim(); ++i)
			if (!basis_[a][i].is_zero())
				e.set(i, a, basis_[a][i]);
	return e;
}

Retract Subspace::retract() const
{
	auto k = object();
	GMorphism r(ambient_, k, order_);
	for (std::size_t a = 0; a < pivots_.size(); ++a)
		r.set(a, pivots_[a], Cyclotomic::one(order_));
	return Retract{std::move(k), embedding(), std::move(r)};
}

bool Subspace::contains(Vector const &v) const
{
	if (v.size() != ambient_.dim())
		throw std::invalid_argument("Subspace::contains: vector length mismatch");
	Vector w = v;
	for (std::size_t a = 0; a < basis_.size(); ++a) {
		Cyclotomic const c = w[pivots_[a]];
		if (c.is_zero())
			continue;
		for (std::size_t i = 0; i < w.size(); ++i)
			if (!basis_[a][i].is_zero())
				w[i] -= c * basis_[a][i];
	}
	return std::all_of(w.begin(), w.end(), [](Cyclotomic const &x) { return x.is_zero(); });
}

bool Subspace::contains(Subspace const &other) const
{
	return std::all_of(other.basis_.begin(), other.basis_.end(),
	                   [this](Vector const &v) { return contains(v); });
}

Subspace Subspace::sum(Subspace const &other) const
{
	if (ambient_ != other.ambient_)
		throw ObjectMismatch("Subspace::sum: different ambient objects");
	std::vector<Vector> vs = basis_;
	vs.insert(vs.end(), other.basis_.begin(), other.basis_.end());
	return span(ambient_, order_, vs);
}

Subspace Subspace::intersect(Subspace const &other) const
{
	if (ambient_ != other.ambient_)
		throw ObjectMismatch("Subspace::intersect: different ambient objects");
	// solve sum_a x_a b_a - sum_c y_c c_c = 0
	auto const n = ambient_.dim();
	auto const da = basis_.size();
	auto const db = other.basis_.size();
	Matrix m(n, zero_vector(da + db, order_));
	for (std::size_t i = 0; i < n; ++i) {
		for (std::size_t a = 0; a < da; ++a)
			m[i][a] = basis_[a][i];
		for (std::size_t c = 0; c < db; ++c)
			m[i][da + c] = -other.basis_[c][i];
	}
	auto pivots = row_reduce(m);
	std::vector<Vector> vs;
	for (std::size_t free = 0; free < da + db; ++free) {
		if (std::find(pivots.begin(), pivots.end(), free) != pivots.end())
			continue;
		Vector x = zero_vector(da + db, order_);
		x[free] = Cyclotomic::one(order_);
		for (std::size_t r = 0; r < pivots.size(); ++r)
			x[pivots[r]] = -m[r][free];
		Vector v = zero_vector(n, order_);
		for (std::size_t a = 0; a < da; ++a)
			if (!x[a].is_zero())
				for (std::size_t i = 0; i < n; ++i)
					v[i] += x[a] * basis_[a][i];
		vs.push_back(std::move(v));
	}
	return span(ambient_, order_, vs);
}

Vector Subspace::coordinates(Vector const &v) const
{
	Vector c;
	c.reserve(pivots_.size());
	for (auto p : pivots_)
		c.push_back(v.at(p));
	return c;
}

Subspace column_space(GMorphism const &f)
{
	std::vector<Vector> vs;
	vs.reserve(f.cols());
	for (std::size_t c = 0; c < f.cols(); ++c) {
		if (f.column(c).empty())
			continue;
		Vector v = zero_vector(f.rows(), f.order());
		for (auto const &e : f.column(c))
			v[e.row] = e.value;
		vs.push_back(std::move(v));
	}
	return Subspace::span(f.dst(), f.order(), vs);
}

Subspace null_space(GMorphism const &f)
{
	Matrix m = f.to_dense();
	auto const n = f.cols();
	std::vector<std::size_t> pivots;
	if (!m.empty())
		pivots = row_reduce(m);
	std::vector<Vector> vs;
	std::size_t next = 0;
	for (std::size_t free = 0; free < n; ++free) {
		if (next < pivots.size() && pivots[next] == free) {
			++next;
			continue;
		}
		Vector x = zero_vector(n, f.order());
		x[free] = Cyclotomic::one(f.order());
		for (std::size_t r = 0; r < pivots.size(); ++r)
			if (!m[r][free].is_zero())
				x[pivots[r]] = -m[r][free];
		vs.push_back(std::move(x));
	}
	return Subspace::span(f.src(), f.order(), vs);
}

Image image(GMorphism const &f)
{
	auto sub = column_space(f);
	auto retract = sub.retract();
	return Image{sub, retract.embed, compose(retract.project, f)};
}

Kernel kernel(GMorphism const &f)
{
	auto sub = null_space(f);
	auto monic = sub.embedding();
	return Kernel{std::move(sub), std::move(monic)};
}

Retract split_idempotent(GMorphism const &p)
{
	if (p.src() != p.dst())
		throw std::invalid_argument("split_idempotent: not an endomorphism");
	if (compose(p, p) != p)
		throw std::invalid_argument("split_idempotent: morphism is not idempotent");
	auto sub = column_space(p);
	auto retract = sub.retract();
	return Retract{retract.object, retract.embed, compose(retract.project, p)};
}

std::vector<Vector> homogeneous_components(GObject const &ambient, Vector const &v)
{
	std::map<Grade, Vector> parts;
	int const order = v.empty() ? 1 : v.front().order();
	for (std::size_t i = 0; i < v.size(); ++i) {
		if (v[i].is_zero())
			continue;
		auto [it, fresh] = parts.try_emplace(ambient.grade(i), zero_vector(v.size(), order));
		it->second[i] = v[i];
	}
	std::vector<Vector> out;
	for (auto &[g, part] : parts)
		out.push_back(std::move(part));
	return out;
}

} // namespace ribbonlie
