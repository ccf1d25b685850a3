#pragma once

// JSON definition files: a context, named objects and morphisms, and
// algebra / Lie algebra bindings referring to them by name.
//
//   { "context": { "cyclic_orders": [2], "bicharacter_exponents": [[1]],
//                  "ribbon_signs": [-1] },
//     "objects": { "L": { "grades": [[0], [1]] } },
//     "morphisms": { "br": { "src": "LL", "dst": "L",
//                            "entries": [[0, 3, "1/2"], ...] } },
//     "lie_algebras": { "g": { "object": "L", "bracket": "br" } },
//     "algebras": { "A": { "object": "L", "product": "m", "unit": "u",
//                          "coproduct": "d", "counit": "e",
//                          "kind": "frobenius" } } }
//
// Entries are [row, col, scalar] with row a target slot and col a source
// slot, 0-indexed; scalars are strings in the scalar grammar.  Objects may
// also be given as { "tensor": [names...] } or { "dual": name }.  A missing
// context means plain vector spaces.

#include "ribbonlie/killing.hpp"

#include <map>
#include <string_view>

namespace ribbonlie {

/// Load error; path locates the offending JSON field.
class WorkspaceError : public std::runtime_error {
  public:
	WorkspaceError(std::string path, std::string const &message)
	    : std::runtime_error(path + ": " + message), path(std::move(path))
	{
	}
	std::string path;
};

enum class AlgebraKind { associative, frobenius, bialgebra };
std::string to_string(AlgebraKind k);

struct NamedMorphism {
	std::string src;
	std::string dst;
	GMorphism value;
	friend bool operator==(NamedMorphism const &, NamedMorphism const &) = default;
};

struct AlgebraBinding {
	AlgebraKind kind = AlgebraKind::associative;
	std::string object;
	std::string product;
	std::optional<std::string> unit;
	std::optional<std::string> coproduct;
	std::optional<std::string> counit;
	friend bool operator==(AlgebraBinding const &, AlgebraBinding const &) = default;
};

struct LieBinding {
	std::string object;
	std::string bracket;
	friend bool operator==(LieBinding const &, LieBinding const &) = default;
};

struct Workspace {
	CategoryContext context = CategoryContext::trivial();
	std::map<std::string, GObject> objects;
	std::map<std::string, NamedMorphism> morphisms;
	std::map<std::string, AlgebraBinding> algebras;
	std::map<std::string, LieBinding> lie_algebras;

	GObject const &object(std::string const &name) const;
	GMorphism const &morphism(std::string const &name) const;

	AssocAlgebra assoc_algebra(std::string const &name) const;
	FrobeniusAlgebra frobenius_algebra(std::string const &name) const;
	Bialgebra bialgebra(std::string const &name) const;
	/// Checked construction; throws NotALieAlgebra when the axioms fail.
	LieAlgebra lie_algebra(std::string const &name) const;
	LieAlgebra lie_algebra_unchecked(std::string const &name) const;

	friend bool operator==(Workspace const &, Workspace const &) = default;
};

Workspace parse_workspace(std::string_view text);
Workspace load_workspace(std::string const &path);
/// Canonical JSON text; objects are written as explicit grade lists.
std::string serialize_workspace(Workspace const &ws);

} // namespace ribbonlie
