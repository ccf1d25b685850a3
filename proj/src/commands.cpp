#include "ribbonlie/commands.hpp"

#include <json.hpp>

#include <map>
#include <sstream>

namespace ribbonlie {

using json = nlohmann::ordered_json;

namespace {

std::string indent(std::string const &text, std::string const &prefix = "  ")
{
	std::istringstream in(text);
	std::ostringstream out;
	for (std::string line; std::getline(in, line);)
		out << prefix << line << "\n";
	return out.str();
}

std::string format_row(Vector const &v)
{
	std::ostringstream os;
	os << "[";
	for (std::size_t i = 0; i < v.size(); ++i)
		os << (i ? ", " : "") << v[i].to_string();
	os << "]";
	return os.str();
}

std::string format_matrix(Matrix const &m)
{
	if (m.empty())
		return "  (empty)\n";
	std::ostringstream os;
	for (auto const &row : m)
		os << "  " << format_row(row) << "\n";
	return os.str();
}

json matrix_json(Matrix const &m)
{
	json out = json::array();
	for (auto const &row : m) {
		json r = json::array();
		for (auto const &x : row)
			r.push_back(x.to_string());
		out.push_back(r);
	}
	return out;
}

json report_json(CheckReport const &r)
{
	json out = json::array();
	for (auto const &eq : r.equations)
		out.push_back({{"label", eq.label}, {"holds", eq.holds}});
	return out;
}

std::string format_grade(Grade const &g)
{
	std::ostringstream os;
	os << "(";
	for (std::size_t i = 0; i < g.size(); ++i)
		os << (i ? "," : "") << g[i];
	os << ")";
	return os.str();
}

std::string grade_multiset(GObject const &u)
{
	std::map<Grade, std::size_t> counts;
	for (auto const &g : u.grades())
		++counts[g];
	std::ostringstream os;
	bool first = true;
	for (auto const &[g, n] : counts) {
		os << (first ? "" : ", ") << format_grade(g) << " x " << n;
		first = false;
	}
	return os.str();
}

Matrix columns_of(GMorphism const &e)
{
	Matrix out;
	for (std::size_t c = 0; c < e.cols(); ++c) {
		Vector v = zero_vector(e.rows(), e.order());
		for (auto const &x : e.column(c))
			v[x.row] = x.value;
		out.push_back(std::move(v));
	}
	return out;
}

CommandResult load_error(std::exception const &e)
{
	return CommandResult{2, std::string("error: ") + e.what() + "\n"};
}

CommandResult lie_failure(NotALieAlgebra const &e)
{
	return CommandResult{1, std::string("error: ") + e.what() + "\n" + indent(e.report.to_string())};
}

} // namespace

CommandResult cmd_check(std::string const &path)
{
	Workspace ws;
	try {
		ws = load_workspace(path);
	} catch (std::exception const &e) {
		return load_error(e);
	}
	auto const &ctx = ws.context;
	std::ostringstream out;
	bool ok = true;
	out << "context: Z/" << ctx.order() << " scalars, " << ctx.group().rank() << " cyclic factor(s)\n";
	for (auto const &[name, binding] : ws.algebras) {
		CheckReport report;
		switch (binding.kind) {
		case AlgebraKind::associative: {
			auto a = ws.assoc_algebra(name);
			report = check_associative(ctx, a);
			if (a.unit)
				report.merge(check_unital(ctx, a));
			break;
		}
		case AlgebraKind::frobenius:
			report = check_frobenius(ctx, ws.frobenius_algebra(name));
			break;
		case AlgebraKind::bialgebra:
			report = check_bialgebra(ctx, ws.bialgebra(name));
			break;
		}
		ok = ok && report.ok();
		out << "algebra " << name << " (" << to_string(binding.kind) << ")\n" << indent(report.to_string());
	}
	for (auto const &[name, binding] : ws.lie_algebras) {
		auto report = check_lie_axioms(ctx, ws.lie_algebra_unchecked(name));
		ok = ok && report.ok();
		out << "lie_algebra " << name << "\n" << indent(report.to_string());
	}
	out << (ok ? "PASS" : "FAIL") << "\n";
	return CommandResult{ok ? 0 : 1, out.str()};
}

CommandResult cmd_killing(std::string const &path, std::string const &algebra, bool naive, bool as_json)
{
	Workspace ws;
	LieAlgebra l;
	try {
		ws = load_workspace(path);
		l = ws.lie_algebra(algebra);
	} catch (NotALieAlgebra const &e) {
		return lie_failure(e);
	} catch (std::exception const &e) {
		return load_error(e);
	}
	auto const &ctx = ws.context;
	auto const kappa = killing_form(ctx, l);
	auto const shown = naive ? killing_form_naive(ctx, l) : kappa;
	auto checks = check_symmetric(ctx, kappa);
	checks.merge(check_invariant(ctx, kappa));
	auto const nd = nondegenerate(ctx, shown);
	int const code = checks.ok() && nd.ok() && nd.side_inverse.ok() ? 0 : 1;

	if (as_json) {
		json out = {{"algebra", algebra},
		            {"form", naive ? "naive" : "killing"},
		            {"dim", l.dim()},
		            {"gram", matrix_json(shown.gram)},
		            {"checks", report_json(checks)},
		            {"nondegenerate", nd.ok()},
		            {"radical", matrix_json(nd.radical.basis())}};
		return CommandResult{code, out.dump(2) + "\n"};
	}
	std::ostringstream out;
	out << "algebra: " << algebra << "\n";
	out << "form: " << (naive ? "naive (no twist)" : "killing") << "\n";
	out << "gram:\n" << format_matrix(shown.gram);
	out << checks.to_string();
	if (nd.ok()) {
		out << "nondegenerate: yes\n";
	} else {
		out << "nondegenerate: no\n";
		out << "radical (dim " << nd.radical.dim() << "):\n" << format_matrix(nd.radical.basis());
	}
	return CommandResult{code, out.str()};
}

CommandResult cmd_decompose(std::string const &path, std::string const &algebra, bool as_json)
{
	Workspace ws;
	LieAlgebra l;
	try {
		ws = load_workspace(path);
		l = ws.lie_algebra(algebra);
	} catch (NotALieAlgebra const &e) {
		return lie_failure(e);
	} catch (std::exception const &e) {
		return load_error(e);
	}
	auto const &ctx = ws.context;
	Decomposition d;
	try {
		d = decompose(ctx, l);
	} catch (DegenerateKillingForm const &e) {
		std::ostringstream out;
		out << "error: degenerate Killing form\n";
		out << "radical (dim " << e.radical.dim() << "):\n" << format_matrix(e.radical.basis());
		return CommandResult{1, out.str()};
	} catch (SplittingFailed const &e) {
		return CommandResult{1, std::string("error: splitting failed: ") + e.what() + "\n"};
	}
	int const code = d.verification.ok() ? 0 : 1;

	if (as_json) {
		json parts = json::array();
		for (auto const &p : d.parts) {
			json grades = json::array();
			for (auto const &g : p.algebra.carrier().grades())
				grades.push_back(g);
			parts.push_back({{"dim", p.algebra.dim()},
			                 {"grades", grades},
			                 {"embedding", matrix_json(columns_of(p.retract.embed))},
			                 {"gram", matrix_json(killing_form(ctx, p.algebra).gram)}});
		}
		json out = {{"algebra", algebra},
		            {"parts", parts},
		            {"verified", d.verification.ok()}};
		return CommandResult{code, out.dump(2) + "\n"};
	}
	std::ostringstream out;
	out << "algebra: " << algebra << "\n";
	out << "parts: " << d.parts.size() << "\n";
	for (std::size_t i = 0; i < d.parts.size(); ++i) {
		auto const &p = d.parts[i];
		out << "part " << i << "\n";
		out << "  dim: " << p.algebra.dim() << "\n";
		out << "  grades: " << grade_multiset(p.algebra.carrier()) << "\n";
		out << "  embedding:\n" << indent(format_matrix(columns_of(p.retract.embed)));
		out << "  gram:\n" << indent(format_matrix(killing_form(ctx, p.algebra).gram));
	}
	out << "verification:\n" << indent(d.verification.to_string());
	return CommandResult{code, out.str()};
}

CommandResult cmd_eval(std::string const &path, std::string const &text)
{
	Workspace ws;
	GMorphism f;
	try {
		ws = load_workspace(path);
		f = eval_expr(parse_expr(text, ws), ws);
	} catch (std::exception const &e) {
		return load_error(e);
	}
	std::ostringstream out;
	out << "src: " << format_object(f.src()) << "\n";
	out << "dst: " << format_object(f.dst()) << "\n";
	out << format_entries(f);
	return CommandResult{0, out.str()};
}

} // namespace ribbonlie
