#include "ribbonlie/expr.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>

namespace ribbonlie {

namespace {

using Kind = ExprNode::Kind;

std::map<std::string, std::pair<Kind, int>> const &generators()
{
	// name -> (kind, number of object arguments)
	static std::map<std::string, std::pair<Kind, int>> const table{
	    {"id", {Kind::identity, 1}},   {"c", {Kind::braiding, 2}},     {"ev", {Kind::ev, 1}},
	    {"coev", {Kind::coev, 1}},     {"lev", {Kind::lev, 1}},        {"lcoev", {Kind::lcoev, 1}},
	    {"theta", {Kind::theta, 1}},   {"sigma", {Kind::sigma, 1}},    {"sigma_inv", {Kind::sigma_inv, 1}},
	};
	return table;
}

class Parser {
  public:
	Parser(std::string_view text, Workspace const &ws) : text_(text), ws_(ws) {}

	Expr parse()
	{
		auto e = seq();
		skip_space();
		if (pos_ != text_.size())
			fail("unexpected '" + std::string(1, text_[pos_]) + "'");
		return e;
	}

  private:
	CategoryContext const &ctx() const { return ws_.context; }

	[[noreturn]] void fail(std::string const &message) const { throw ExprError(pos_, message); }

	void skip_space()
	{
		while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
			++pos_;
	}

	bool accept(char c)
	{
		skip_space();
		if (pos_ < text_.size() && text_[pos_] == c) {
			++pos_;
			return true;
		}
		return false;
	}

	void expect(char c)
	{
		if (!accept(c))
			fail(std::string("expected '") + c + "'");
	}

	std::string identifier()
	{
		skip_space();
		auto const start = pos_;
		if (pos_ < text_.size() && (std::isalpha(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
			while (pos_ < text_.size() &&
			       (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
				++pos_;
		if (start == pos_)
			fail("expected a name");
		return std::string(text_.substr(start, pos_ - start));
	}

	bool peek_call(std::string const &name)
	{
		skip_space();
		auto const save = pos_;
		if (!text_.substr(pos_).starts_with(name))
			return false;
		pos_ += name.size();
		bool const call = accept('(');
		pos_ = save;
		auto const after = save + name.size();
		if (call && after < text_.size() &&
		    (std::isalnum(static_cast<unsigned char>(text_[after])) || text_[after] == '_'))
			return false;
		return call;
	}

	// objects

	GObject obj()
	{
		GObject acc = oatom();
		while (accept('*'))
			acc = tensor(ctx(), acc, oatom());
		return acc;
	}

	GObject oatom()
	{
		skip_space();
		if (accept('(')) {
			auto o = obj();
			expect(')');
			return o;
		}
		if (pos_ < text_.size() && text_[pos_] == '1') {
			++pos_;
			return GObject::unit(ctx());
		}
		auto const start = pos_;
		auto name = identifier();
		if (name == "dual" && accept('(')) {
			auto o = obj();
			expect(')');
			return dual(ctx(), o);
		}
		auto it = ws_.objects.find(name);
		if (it == ws_.objects.end()) {
			pos_ = start;
			fail("unknown object \"" + name + "\"");
		}
		return it->second;
	}

	// morphisms

	static std::shared_ptr<ExprNode> node(Kind kind, std::size_t position)
	{
		auto n = std::make_shared<ExprNode>();
		n->kind = kind;
		n->position = position;
		return n;
	}

	Expr seq()
	{
		skip_space();
		auto const start = pos_;
		std::vector<Expr> parts{ten()};
		while (true) {
			skip_space();
			auto const at = pos_;
			if (!accept(';'))
				break;
			auto next = ten();
			auto const &prev = parts.back();
			if (prev->dst != next->src)
				throw ExprError(at, "type mismatch in composition: target " + format_object(prev->dst) +
				                        " does not match source " + format_object(next->src));
			parts.push_back(std::move(next));
		}
		if (parts.size() == 1)
			return parts.front();
		auto n = node(Kind::compose, start);
		n->src = parts.front()->src;
		n->dst = parts.back()->dst;
		n->children = std::move(parts);
		return n;
	}

	Expr ten()
	{
		skip_space();
		auto const start = pos_;
		std::vector<Expr> parts{atom()};
		while (accept('*'))
			parts.push_back(atom());
		if (parts.size() == 1)
			return parts.front();
		auto n = node(Kind::tensor, start);
		n->src = GObject::unit(ctx());
		n->dst = GObject::unit(ctx());
		for (auto const &p : parts) {
			n->src = tensor(ctx(), n->src, p->src);
			n->dst = tensor(ctx(), n->dst, p->dst);
		}
		n->children = std::move(parts);
		return n;
	}

	Expr atom()
	{
		skip_space();
		auto const start = pos_;
		if (accept('(')) {
			auto e = seq();
			expect(')');
			return e;
		}
		for (auto const *d : {"dual", "ldual"}) {
			if (!peek_call(d))
				continue;
			identifier();
			expect('(');
			auto inner = atom();
			expect(')');
			auto n = node(std::string(d) == "dual" ? Kind::dual_right : Kind::dual_left, start);
			n->src = dual(ctx(), inner->dst);
			n->dst = dual(ctx(), inner->src);
			n->children = {std::move(inner)};
			return n;
		}
		for (auto const &[name, spec] : generators()) {
			if (!peek_call(name))
				continue;
			identifier();
			expect('(');
			auto n = node(spec.first, start);
			n->objects.push_back(obj());
			if (spec.second == 2) {
				expect(',');
				n->objects.push_back(obj());
			}
			expect(')');
			type_generator(*n);
			return n;
		}
		auto name = identifier();
		auto it = ws_.morphisms.find(name);
		if (it == ws_.morphisms.end()) {
			pos_ = start;
			fail("unknown morphism \"" + name + "\"");
		}
		auto n = node(Kind::named, start);
		n->name = name;
		n->src = it->second.value.src();
		n->dst = it->second.value.dst();
		return n;
	}

	void type_generator(ExprNode &n) const
	{
		auto const &u = n.objects.front();
		auto const one = GObject::unit(ctx());
		auto const ud = dual(ctx(), u);
		switch (n.kind) {
		case Kind::identity:
		case Kind::theta:
			n.src = n.dst = u;
			break;
		case Kind::braiding:
			n.src = tensor(ctx(), u, n.objects[1]);
			n.dst = tensor(ctx(), n.objects[1], u);
			break;
		case Kind::ev:
			n.src = tensor(ctx(), ud, u);
			n.dst = one;
			break;
		case Kind::coev:
			n.src = one;
			n.dst = tensor(ctx(), u, ud);
			break;
		case Kind::lev:
			n.src = tensor(ctx(), u, ud);
			n.dst = one;
			break;
		case Kind::lcoev:
			n.src = one;
			n.dst = tensor(ctx(), ud, u);
			break;
		case Kind::sigma:
		case Kind::sigma_inv:
			n.src = n.dst = ud;
			break;
		default:
			break;
		}
	}

	std::string_view text_;
	Workspace const &ws_;
	std::size_t pos_ = 0;
};

} // namespace

Expr parse_expr(std::string_view text, Workspace const &ws) { return Parser(text, ws).parse(); }

GMorphism eval_expr(Expr const &e, Workspace const &ws)
{
	auto const &ctx = ws.context;
	auto const &objs = e->objects;
	switch (e->kind) {
	case Kind::compose: {
		auto acc = eval_expr(e->children.front(), ws);
		for (std::size_t i = 1; i < e->children.size(); ++i)
			acc = compose(eval_expr(e->children[i], ws), acc);
		return acc;
	}
	case Kind::tensor: {
		auto acc = identity(ctx, GObject::unit(ctx));
		for (auto const &c : e->children)
			acc = tensor(ctx, acc, eval_expr(c, ws));
		return acc;
	}
	case Kind::named:
		return ws.morphism(e->name);
	case Kind::identity:
		return identity(ctx, objs[0]);
	case Kind::braiding:
		return braiding(ctx, objs[0], objs[1]);
	case Kind::ev:
		return evaluation(ctx, objs[0]);
	case Kind::coev:
		return coevaluation(ctx, objs[0]);
	case Kind::lev:
		return left_evaluation(ctx, objs[0]);
	case Kind::lcoev:
		return left_coevaluation(ctx, objs[0]);
	case Kind::theta:
		return twist(ctx, objs[0]);
	case Kind::sigma:
		return sovereign(ctx, objs[0]);
	case Kind::sigma_inv:
		return sovereign_inverse(ctx, objs[0]);
	case Kind::dual_right:
		return dual_right(ctx, eval_expr(e->children.front(), ws));
	case Kind::dual_left:
		return dual_left(ctx, eval_expr(e->children.front(), ws));
	}
	throw std::logic_error("eval_expr: unknown node");
}

std::string format_entries(GMorphism const &f)
{
	std::vector<std::pair<std::size_t, std::size_t>> cells;
	for (std::size_t c = 0; c < f.cols(); ++c)
		for (auto const &e : f.column(c))
			cells.emplace_back(e.row, c);
	std::sort(cells.begin(), cells.end());
	std::ostringstream os;
	for (auto const &[r, c] : cells)
		os << "(" << r << ", " << c << ", " << f.at(r, c).to_string() << ")\n";
	return os.str();
}

} // namespace ribbonlie
