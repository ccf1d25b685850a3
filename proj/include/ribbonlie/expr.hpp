#pragma once

// A small typed language for string-diagram composites.
//
//   expr := seq
//   seq  := ten (';' ten)*            f ; g  is  g o f  (diagram order)
//   ten  := atom ('*' atom)*          tensor product
//   atom := NAME | id(obj) | c(obj, obj) | ev(obj) | coev(obj) | lev(obj)
//         | lcoev(obj) | theta(obj) | sigma(obj) | sigma_inv(obj)
//         | dual(atom) | ldual(atom) | '(' expr ')'
//   obj  := oatom ('*' oatom)*
//   oatom := NAME | dual(obj) | '1' | '(' obj ')'
//
// ev, coev, lev, lcoev are d_U, b_U, d~_U, b~_U.  Names in atom position
// refer to workspace morphisms, in obj position to workspace objects.

#include "ribbonlie/workspace.hpp"

#include <memory>

namespace ribbonlie {

class ExprError : public std::invalid_argument {
  public:
	ExprError(std::size_t position, std::string const &message)
	    : std::invalid_argument("at " + std::to_string(position) + ": " + message), position(position)
	{
	}
	std::size_t position;
};

struct ExprNode {
	enum class Kind {
		compose,
		tensor,
		named,
		identity,
		braiding,
		ev,
		coev,
		lev,
		lcoev,
		theta,
		sigma,
		sigma_inv,
		dual_right,
		dual_left,
	};

	Kind kind;
	std::size_t position = 0;
	/// Operands; for compose in diagram order.
	std::vector<std::shared_ptr<ExprNode const>> children;
	/// Object arguments of generators.
	std::vector<GObject> objects;
	/// Morphism name for Kind::named.
	std::string name;
	GObject src;
	GObject dst;
};

using Expr = std::shared_ptr<ExprNode const>;

/// Parses, resolves names and type-checks.  Throws ExprError on syntax
/// errors, unknown names and composition mismatches.
Expr parse_expr(std::string_view text, Workspace const &ws);
GMorphism eval_expr(Expr const &e, Workspace const &ws);

/// "(row, col, scalar)" lines sorted by row, then column.
std::string format_entries(GMorphism const &f);

} // namespace ribbonlie
