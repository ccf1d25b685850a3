#include "ribbonlie/workspace.hpp"

#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

namespace ribbonlie {

using json = nlohmann::ordered_json;

namespace {

json const &field(json const &j, std::string const &key, std::string const &path)
{
	if (!j.is_object() || !j.contains(key))
		throw WorkspaceError(path, "missing field \"" + key + "\"");
	return j.at(key);
}

std::string string_field(json const &j, std::string const &key, std::string const &path)
{
	auto const &v = field(j, key, path);
	if (!v.is_string())
		throw WorkspaceError(path + "/" + key, "expected a string");
	return v.get<std::string>();
}

std::optional<std::string> optional_string(json const &j, std::string const &key,
                                           std::string const &path)
{
	if (!j.contains(key) || j.at(key).is_null())
		return std::nullopt;
	return string_field(j, key, path);
}

int int_value(json const &v, std::string const &path)
{
	if (!v.is_number_integer())
		throw WorkspaceError(path, "expected an integer");
	return v.get<int>();
}

std::vector<int> int_list(json const &v, std::string const &path)
{
	if (!v.is_array())
		throw WorkspaceError(path, "expected an array of integers");
	std::vector<int> out;
	for (std::size_t i = 0; i < v.size(); ++i)
		out.push_back(int_value(v[i], path + "/" + std::to_string(i)));
	return out;
}

CategoryContext parse_context(json const &j)
{
	std::string const path = "/context";
	if (!j.is_object())
		throw WorkspaceError(path, "expected an object");
	auto orders = j.contains("cyclic_orders") ? int_list(j.at("cyclic_orders"), path + "/cyclic_orders")
	                                          : std::vector<int>{};
	std::vector<std::vector<int>> phi;
	if (j.contains("bicharacter_exponents")) {
		auto const &rows = j.at("bicharacter_exponents");
		if (!rows.is_array())
			throw WorkspaceError(path + "/bicharacter_exponents", "expected a matrix");
		for (std::size_t i = 0; i < rows.size(); ++i)
			phi.push_back(int_list(rows[i], path + "/bicharacter_exponents/" + std::to_string(i)));
	} else {
		phi.assign(orders.size(), std::vector<int>(orders.size(), 0));
	}
	auto signs = j.contains("ribbon_signs") ? int_list(j.at("ribbon_signs"), path + "/ribbon_signs")
	                                        : std::vector<int>(orders.size(), 1);
	try {
		return CategoryContext(std::move(orders), std::move(phi), std::move(signs));
	} catch (std::invalid_argument const &e) {
		throw WorkspaceError(path, e.what());
	}
}

Grade parse_grade(CategoryContext const &ctx, json const &v, std::string const &path)
{
	auto g = int_list(v, path);
	auto const &orders = ctx.group().cyclic_orders();
	if (g.size() != orders.size())
		throw WorkspaceError(path, "unknown group element: expected " + std::to_string(orders.size()) +
		                               " residues");
	for (std::size_t i = 0; i < g.size(); ++i)
		if (g[i] < 0 || g[i] >= orders[i])
			throw WorkspaceError(path, "unknown group element: residue " + std::to_string(g[i]) +
			                               " outside Z_" + std::to_string(orders[i]));
	return g;
}

class ObjectResolver {
  public:
	ObjectResolver(CategoryContext const &ctx, json const &specs, std::map<std::string, GObject> &out)
	    : ctx_(ctx), specs_(specs), out_(out)
	{
	}

	GObject const &resolve(std::string const &name, std::string const &from)
	{
		if (auto it = out_.find(name); it != out_.end())
			return it->second;
		if (!specs_.contains(name))
			throw WorkspaceError(from, "unknown object \"" + name + "\"");
		if (!active_.insert(name).second)
			throw WorkspaceError("/objects/" + name, "object defined in terms of itself");
		auto obj = build(specs_.at(name), "/objects/" + name);
		active_.erase(name);
		return out_.emplace(name, std::move(obj)).first->second;
	}

  private:
	GObject build(json const &spec, std::string const &path)
	{
		if (!spec.is_object())
			throw WorkspaceError(path, "expected an object");
		if (spec.contains("grades")) {
			auto const &gs = spec.at("grades");
			if (!gs.is_array())
				throw WorkspaceError(path + "/grades", "expected a list of grades");
			std::vector<Grade> grades;
			for (std::size_t i = 0; i < gs.size(); ++i)
				grades.push_back(parse_grade(ctx_, gs[i], path + "/grades/" + std::to_string(i)));
			return GObject(std::move(grades));
		}
		if (spec.contains("tensor")) {
			auto const &parts = spec.at("tensor");
			if (!parts.is_array())
				throw WorkspaceError(path + "/tensor", "expected a list of object names");
			GObject acc = GObject::unit(ctx_);
			for (std::size_t i = 0; i < parts.size(); ++i) {
				auto const p = path + "/tensor/" + std::to_string(i);
				if (!parts[i].is_string())
					throw WorkspaceError(p, "expected an object name");
				acc = tensor(ctx_, acc, resolve(parts[i].get<std::string>(), p));
			}
			return acc;
		}
		if (spec.contains("dual"))
			return dual(ctx_, resolve(string_field(spec, "dual", path), path + "/dual"));
		throw WorkspaceError(path, "object needs \"grades\", \"tensor\" or \"dual\"");
	}

	CategoryContext const &ctx_;
	json const &specs_;
	std::map<std::string, GObject> &out_;
	std::set<std::string> active_;
};

NamedMorphism parse_morphism(Workspace const &ws, json const &spec, std::string const &path)
{
	NamedMorphism m;
	m.src = string_field(spec, "src", path);
	m.dst = string_field(spec, "dst", path);
	auto find = [&](std::string const &name, std::string const &key) -> GObject const & {
		auto it = ws.objects.find(name);
		if (it == ws.objects.end())
			throw WorkspaceError(path + "/" + key, "unknown object \"" + name + "\"");
		return it->second;
	};
	auto const &src = find(m.src, "src");
	auto const &dst = find(m.dst, "dst");
	int const order = ws.context.order();
	m.value = GMorphism(src, dst, order);
	json const empty = json::array();
	auto const &entries = spec.contains("entries") ? spec.at("entries") : empty;
	if (!entries.is_array())
		throw WorkspaceError(path + "/entries", "expected a list of [row, col, scalar]");
	std::set<std::pair<std::size_t, std::size_t>> seen;
	for (std::size_t i = 0; i < entries.size(); ++i) {
		auto const p = path + "/entries/" + std::to_string(i);
		auto const &e = entries[i];
		if (!e.is_array() || e.size() != 3 || !e[2].is_string())
			throw WorkspaceError(p, "expected [row, col, \"scalar\"]");
		int const row = int_value(e[0], p + "/0");
		int const col = int_value(e[1], p + "/1");
		if (row < 0 || std::size_t(row) >= dst.dim())
			throw WorkspaceError(p, "row " + std::to_string(row) + " out of range");
		if (col < 0 || std::size_t(col) >= src.dim())
			throw WorkspaceError(p, "col " + std::to_string(col) + " out of range");
		if (!seen.emplace(row, col).second)
			throw WorkspaceError(p, "duplicate entry (" + std::to_string(row) + ", " +
			                            std::to_string(col) + ")");
		Cyclotomic value;
		try {
			value = parse_scalar(e[2].get<std::string>(), order);
		} catch (std::invalid_argument const &err) {
			throw WorkspaceError(p + "/2", std::string("bad scalar: ") + err.what());
		}
		try {
			m.value.set(std::size_t(row), std::size_t(col), value);
		} catch (GradeViolation const &) {
			throw WorkspaceError(p, "grade preservation violated at (" + std::to_string(row) + ", " +
			                            std::to_string(col) + ")");
		}
	}
	return m;
}

AlgebraKind parse_kind(json const &spec, std::string const &path, bool has_coalgebra)
{
	if (!spec.contains("kind")) {
		if (has_coalgebra)
			throw WorkspaceError(path, "\"kind\" is required when a coproduct or counit is given");
		return AlgebraKind::associative;
	}
	auto const k = string_field(spec, "kind", path);
	if (k == "associative")
		return AlgebraKind::associative;
	if (k == "frobenius")
		return AlgebraKind::frobenius;
	if (k == "bialgebra")
		return AlgebraKind::bialgebra;
	throw WorkspaceError(path + "/kind", "unknown algebra kind \"" + k + "\"");
}

void expect_shape(Workspace const &ws, std::string const &morphism, GObject const &src,
                  GObject const &dst, std::string const &path)
{
	auto it = ws.morphisms.find(morphism);
	if (it == ws.morphisms.end())
		throw WorkspaceError(path, "unknown morphism \"" + morphism + "\"");
	auto const &f = it->second.value;
	if (f.src() != src || f.dst() != dst)
		throw WorkspaceError(path, "morphism \"" + morphism + "\" has type " + format_object(f.src()) +
		                               " -> " + format_object(f.dst()) + ", expected " +
		                               format_object(src) + " -> " + format_object(dst));
}

AlgebraBinding parse_algebra(Workspace const &ws, json const &spec, std::string const &path)
{
	AlgebraBinding a;
	a.object = string_field(spec, "object", path);
	a.product = string_field(spec, "product", path);
	a.unit = optional_string(spec, "unit", path);
	a.coproduct = optional_string(spec, "coproduct", path);
	a.counit = optional_string(spec, "counit", path);
	a.kind = parse_kind(spec, path, a.coproduct || a.counit);
	auto it = ws.objects.find(a.object);
	if (it == ws.objects.end())
		throw WorkspaceError(path + "/object", "unknown object \"" + a.object + "\"");
	auto const &x = it->second;
	auto const &ctx = ws.context;
	auto const one = GObject::unit(ctx);
	auto const xx = tensor(ctx, x, x);
	expect_shape(ws, a.product, xx, x, path + "/product");
	if (a.unit)
		expect_shape(ws, *a.unit, one, x, path + "/unit");
	if (a.kind != AlgebraKind::associative) {
		if (!a.unit || !a.coproduct || !a.counit)
			throw WorkspaceError(path, to_string(a.kind) + " needs unit, coproduct and counit");
		expect_shape(ws, *a.coproduct, x, xx, path + "/coproduct");
		expect_shape(ws, *a.counit, x, one, path + "/counit");
	}
	return a;
}

LieBinding parse_lie(Workspace const &ws, json const &spec, std::string const &path)
{
	LieBinding b{string_field(spec, "object", path), string_field(spec, "bracket", path)};
	auto it = ws.objects.find(b.object);
	if (it == ws.objects.end())
		throw WorkspaceError(path + "/object", "unknown object \"" + b.object + "\"");
	expect_shape(ws, b.bracket, tensor(ws.context, it->second, it->second), it->second, path + "/bracket");
	return b;
}

json const &section(json const &doc, std::string const &key)
{
	static json const empty = json::object();
	if (!doc.contains(key))
		return empty;
	auto const &s = doc.at(key);
	if (!s.is_object())
		throw WorkspaceError("/" + key, "expected an object keyed by name");
	return s;
}

} // namespace

std::string to_string(AlgebraKind k)
{
	switch (k) {
	case AlgebraKind::associative:
		return "associative";
	case AlgebraKind::frobenius:
		return "frobenius";
	case AlgebraKind::bialgebra:
		return "bialgebra";
	}
	return "?";
}

Workspace parse_workspace(std::string_view text)
{
	json doc;
	try {
		doc = json::parse(text);
	} catch (json::parse_error const &e) {
		throw WorkspaceError("/", std::string("malformed JSON: ") + e.what());
	}
	if (!doc.is_object())
		throw WorkspaceError("/", "expected a JSON object");
	static std::set<std::string> const known{"context", "objects", "morphisms", "algebras",
	                                         "lie_algebras"};
	for (auto const &[key, value] : doc.items())
		if (!known.contains(key))
			throw WorkspaceError("/" + key, "unknown section");

	Workspace ws;
	if (doc.contains("context"))
		ws.context = parse_context(doc.at("context"));

	auto const &objects = section(doc, "objects");
	ObjectResolver resolver(ws.context, objects, ws.objects);
	for (auto const &[name, spec] : objects.items())
		resolver.resolve(name, "/objects");

	for (auto const &[name, spec] : section(doc, "morphisms").items())
		ws.morphisms.emplace(name, parse_morphism(ws, spec, "/morphisms/" + name));
	for (auto const &[name, spec] : section(doc, "algebras").items())
		ws.algebras.emplace(name, parse_algebra(ws, spec, "/algebras/" + name));
	for (auto const &[name, spec] : section(doc, "lie_algebras").items())
		ws.lie_algebras.emplace(name, parse_lie(ws, spec, "/lie_algebras/" + name));
	return ws;
}

Workspace load_workspace(std::string const &path)
{
	std::ifstream in(path);
	if (!in)
		throw WorkspaceError(path, "cannot open file");
	std::ostringstream buf;
	buf << in.rdbuf();
	return parse_workspace(buf.str());
}

std::string serialize_workspace(Workspace const &ws)
{
	json doc;
	auto const &ctx = ws.context;
	doc["context"] = {{"cyclic_orders", ctx.group().cyclic_orders()},
	                  {"bicharacter_exponents", ctx.bicharacter_exponents()},
	                  {"ribbon_signs", ctx.ribbon_signs()}};
	doc["objects"] = json::object();
	for (auto const &[name, obj] : ws.objects)
		doc["objects"][name] = {{"grades", obj.grades()}};
	doc["morphisms"] = json::object();
	for (auto const &[name, m] : ws.morphisms) {
		std::vector<std::tuple<std::size_t, std::size_t, std::string>> entries;
		for (std::size_t c = 0; c < m.value.cols(); ++c)
			for (auto const &e : m.value.column(c))
				entries.emplace_back(e.row, c, e.value.to_string());
		std::sort(entries.begin(), entries.end());
		json list = json::array();
		for (auto const &[r, c, s] : entries)
			list.push_back({r, c, s});
		doc["morphisms"][name] = {{"src", m.src}, {"dst", m.dst}, {"entries", list}};
	}
	doc["algebras"] = json::object();
	for (auto const &[name, a] : ws.algebras) {
		json spec = {{"kind", to_string(a.kind)}, {"object", a.object}, {"product", a.product}};
		if (a.unit)
			spec["unit"] = *a.unit;
		if (a.coproduct)
			spec["coproduct"] = *a.coproduct;
		if (a.counit)
			spec["counit"] = *a.counit;
		doc["algebras"][name] = spec;
	}
	doc["lie_algebras"] = json::object();
	for (auto const &[name, b] : ws.lie_algebras)
		doc["lie_algebras"][name] = {{"object", b.object}, {"bracket", b.bracket}};
	return doc.dump(2) + "\n";
}

GObject const &Workspace::object(std::string const &name) const
{
	auto it = objects.find(name);
	if (it == objects.end())
		throw WorkspaceError("/objects", "unknown object \"" + name + "\"");
	return it->second;
}

GMorphism const &Workspace::morphism(std::string const &name) const
{
	auto it = morphisms.find(name);
	if (it == morphisms.end())
		throw WorkspaceError("/morphisms", "unknown morphism \"" + name + "\"");
	return it->second.value;
}

namespace {

AlgebraBinding const &find_algebra(Workspace const &ws, std::string const &name)
{
	auto it = ws.algebras.find(name);
	if (it == ws.algebras.end())
		throw WorkspaceError("/algebras", "unknown algebra \"" + name + "\"");
	return it->second;
}

} // namespace

AssocAlgebra Workspace::assoc_algebra(std::string const &name) const
{
	auto const &a = find_algebra(*this, name);
	std::optional<GMorphism> unit;
	if (a.unit)
		unit = morphism(*a.unit);
	return AssocAlgebra{object(a.object), morphism(a.product), std::move(unit)};
}

FrobeniusAlgebra Workspace::frobenius_algebra(std::string const &name) const
{
	auto const &a = find_algebra(*this, name);
	if (a.kind != AlgebraKind::frobenius)
		throw WorkspaceError("/algebras/" + name, "not a Frobenius algebra");
	return FrobeniusAlgebra{assoc_algebra(name), morphism(*a.coproduct), morphism(*a.counit)};
}

Bialgebra Workspace::bialgebra(std::string const &name) const
{
	auto const &a = find_algebra(*this, name);
	if (a.kind != AlgebraKind::bialgebra)
		throw WorkspaceError("/algebras/" + name, "not a bialgebra");
	return Bialgebra{assoc_algebra(name), morphism(*a.coproduct), morphism(*a.counit)};
}

LieAlgebra Workspace::lie_algebra(std::string const &name) const
{
	auto it = lie_algebras.find(name);
	if (it == lie_algebras.end())
		throw WorkspaceError("/lie_algebras", "unknown Lie algebra \"" + name + "\"");
	return LieAlgebra(context, object(it->second.object), morphism(it->second.bracket));
}

LieAlgebra Workspace::lie_algebra_unchecked(std::string const &name) const
{
	auto it = lie_algebras.find(name);
	if (it == lie_algebras.end())
		throw WorkspaceError("/lie_algebras", "unknown Lie algebra \"" + name + "\"");
	return LieAlgebra::unchecked(context, object(it->second.object), morphism(it->second.bracket));
}

} // namespace ribbonlie
