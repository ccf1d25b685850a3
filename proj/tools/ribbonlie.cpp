// ribbonlie: check definition files, compute Killing forms, decompose Lie
// algebras and evaluate diagram expressions.

#include "ribbonlie/commands.hpp"

#include <CLI11.hpp>

#include <iostream>

int main(int argc, char **argv)
{
	CLI::App app{"Lie algebras in symmetric ribbon categories of graded vector spaces"};
	app.require_subcommand(1);

	std::string file;
	std::string algebra;
	std::string expr;
	bool naive = false;
	bool as_json = false;

	auto *check = app.add_subcommand("check", "Run every algebra and Lie axiom check in a file");
	check->add_option("file", file, "Definition file")->required();

	auto *killing = app.add_subcommand("killing", "Killing form of a Lie algebra");
	killing->add_option("file", file, "Definition file")->required();
	killing->add_option("--algebra", algebra, "Lie algebra name")->required();
	killing->add_flag("--naive", naive, "Leave out the twist");
	killing->add_flag("--json", as_json, "JSON output");

	auto *decompose = app.add_subcommand("decompose", "Split into indecomposable ideals");
	decompose->add_option("file", file, "Definition file")->required();
	decompose->add_option("--algebra", algebra, "Lie algebra name")->required();
	decompose->add_flag("--json", as_json, "JSON output");

	auto *eval = app.add_subcommand("eval", "Evaluate a diagram expression");
	eval->add_option("file", file, "Definition file")->required();
	eval->add_option("--expr", expr, "Expression text")->required();

	try {
		app.parse(argc, argv);
	} catch (CLI::ParseError const &e) {
		int const code = app.exit(e);
		return code == 0 ? 0 : 2;
	}

	ribbonlie::CommandResult result;
	if (*check)
		result = ribbonlie::cmd_check(file);
	else if (*killing)
		result = ribbonlie::cmd_killing(file, algebra, naive, as_json);
	else if (*decompose)
		result = ribbonlie::cmd_decompose(file, algebra, as_json);
	else
		result = ribbonlie::cmd_eval(file, expr);

	(result.exit_code == 2 ? std::cerr : std::cout) << result.output;
	return result.exit_code;
}
