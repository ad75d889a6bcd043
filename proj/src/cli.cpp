#include "freegp/cli.hpp"

#include "freegp/ac_core.hpp"
#include "freegp/assoc.hpp"
#include "freegp/diff_real.hpp"
#include "freegp/error.hpp"
#include "freegp/gp_core.hpp"
#include "freegp/identities.hpp"
#include "freegp/parser.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>

namespace freegp::cli {

namespace {

using Json = nlohmann::ordered_json;

struct Report {
	Json result;
	std::string text;
};

struct Options {
	bool json = false;
	std::optional<std::uint64_t> seed;
	std::vector<std::string> exprs;
	std::string var;
	unsigned n = 0;
	unsigned m = 0;
	std::string model;
	std::vector<std::string> assigns;
	unsigned budget = 200;
	unsigned alternating = 0;
	bool strip_bare = false;
};

class UsageError : public std::runtime_error {
public:
	using std::runtime_error::runtime_error;
};

std::vector<std::string> expressions(Options& opt, std::istream& in, std::size_t count)
{
	if (opt.exprs.empty()) {
		std::string all{std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
		if (all.find_first_not_of(" \t\r\n") != std::string::npos)
			opt.exprs.push_back(all);
	}
	if (opt.exprs.size() != count)
		throw UsageError("expected " + std::to_string(count) + " expression" + (count == 1 ? "" : "s") + ", got " +
		                 std::to_string(opt.exprs.size()));
	return opt.exprs;
}

GPPoly one_gp(Options& opt, std::istream& in) { return parse_gp(expressions(opt, in, 1)[0]); }

Variable require_var(const Options& opt)
{
	if (opt.var.empty())
		throw UsageError("--var is required");
	return Variable::parse(opt.var);
}

Report expression_report(const GPPoly& f)
{
	const std::string s = to_string(f);
	return {s, s};
}

Json total_json(const Integer& v)
{
	if (v.fits_ulong_p())
		return Json(static_cast<std::uint64_t>(v.get_ui()));
	return Json(v.get_str());
}

Json farkas_json(const FarkasHeight& fh)
{
	Json per = Json::object();
	for (const auto& [v, h] : fh.per_variable)
		per[v.str()] = h;
	return Json{{"per_variable", per}, {"total", total_json(fh.total)}};
}

Report cmd_normalize(Options& opt, std::istream& in) { return expression_report(one_gp(opt, in)); }

Report cmd_bracket(Options& opt, std::istream& in)
{
	auto e = expressions(opt, in, 2);
	return expression_report(gp_bracket(parse_gp(e[0]), parse_gp(e[1])));
}

Report cmd_mul(Options& opt, std::istream& in)
{
	auto e = expressions(opt, in, 2);
	return expression_report(gp_mul(parse_gp(e[0]), parse_gp(e[1])));
}

Report cmd_jacobian(Options& opt, std::istream& in)
{
	const GPPoly f = one_gp(opt, in);
	if (!is_polylinear(f))
		throw DomainError("jacobian: input is not polylinear");
	Json per = Json::object();
	std::string text;
	bool all = true;
	for (const auto& v : support_variables(f)) {
		const bool d = is_derivation_in(f, v);
		all = all && d;
		per[v.str()] = d;
		text += "derivation in " + v.str() + ": " + (d ? "true" : "false") + "\n";
	}
	text += std::string("jacobian: ") + (all ? "true" : "false");
	return {Json{{"jacobian", all}, {"derivation_in", per}}, text};
}

Report cmd_jacobian_space(Options& opt, std::istream&)
{
	if (opt.n == 0)
		throw UsageError("--n is required");
	const JacobianSpace space = jacobian_space(opt.n);
	Json basis = Json::array();
	std::string text = "n: " + std::to_string(space.n) + "\npolylinear dimension: " +
	                   std::to_string(space.ambient_dimension) + "\ndimension: " + std::to_string(space.basis.size());
	for (const auto& b : space.basis) {
		basis.push_back(to_string(b));
		text += "\n  " + to_string(b);
	}
	return {Json{{"n", space.n},
	             {"ambient_dimension", space.ambient_dimension},
	             {"dimension", space.basis.size()},
	             {"basis", basis}},
	        text};
}

Report cmd_reduce(Options& opt, std::istream& in)
{
	const GPPoly raw = one_gp(opt, in);
	if (!is_polylinear(raw))
		throw DomainError("reduce: input is not polylinear (run linearize first)");
	const GPPoly f = remove_bare_factors(raw);
	if (f.is_zero())
		throw DomainError("reduce: input is zero");
	const Reduction red = jacobian_reduce(f);
	Json steps = Json::array();
	std::string text = "input: " + to_string(f);
	for (const auto& s : red.steps) {
		steps.push_back(Json{{"variable", s.variable.str()},
		                     {"fresh", s.fresh.str()},
		                     {"farkas_height_before", total_json(s.before.total)},
		                     {"farkas_height_after", total_json(s.after.total)}});
		text += "\nD(f, " + s.variable.str() + "; " + s.variable.str() + ", " + s.fresh.str() +
		        "): FH " + s.before.total.get_str() + " -> " + s.after.total.get_str();
	}
	const std::string result = to_string(red.result);
	text += "\nresult: " + result;
	return {Json{{"input", to_string(f)}, {"result", result}, {"steps", steps}}, text};
}

constexpr const char* polarization_note = "multilinear component, not divided by d!";

Report cmd_linearize(Options& opt, std::istream& in)
{
	const std::string s = to_string(linearize(one_gp(opt, in)));
	return {Json{{"polynomial", s}, {"convention", polarization_note}}, s + "\n(" + polarization_note + ")"};
}

Report cmd_flip(Options& opt, std::istream& in)
{
	const Variable x = require_var(opt);
	const ACPoly f = to_ac(one_gp(opt, in));
	const std::string s = to_string(flip(f, x));
	return {s, s};
}

Report cmd_height(Options& opt, std::istream& in)
{
	const Variable x = require_var(opt);
	const ACPoly f = to_ac(one_gp(opt, in));
	if (f.size() != 1)
		throw DomainError("height: expected a single AC monomial");
	const unsigned h = height(f.begin()->first, x);
	return {Json{{"variable", x.str()}, {"height", h}}, std::to_string(h)};
}

Report cmd_farkas_height(Options& opt, std::istream& in)
{
	GPPoly f = one_gp(opt, in);
	if (opt.strip_bare)
		f = remove_bare_factors(f);
	const FarkasHeight fh = farkas_height(f);
	return {farkas_json(fh), to_string(fh)};
}

Report cmd_lie_test(Options& opt, std::istream& in)
{
	if (opt.alternating > 0) {
		if (!opt.exprs.empty())
			throw UsageError("--alternating takes no expression");
		std::vector<Word> letters;
		for (unsigned i = 1; i <= opt.alternating; ++i)
			letters.push_back(Word::leaf(Variable("u", i)));
		const AssocPoly A = alternating_sum(letters);
		const bool lie = is_lie_element(A);
		const std::string ext = exterior_to_string(exterior_image(A));
		return {Json{{"operator", to_string(A)}, {"lie", lie}, {"exterior_image", ext}},
		        std::string("lie: ") + (lie ? "true" : "false") + "\nexterior image: " + ext};
	}
	const ACPoly f = to_ac(one_gp(opt, in));
	if (f.is_zero())
		throw DomainError("lie-test: input is zero");
	const auto vars = ac_support(f);
	const Variable x = opt.var.empty() ? vars.back() : Variable::parse(opt.var);
	const AssocPoly W = operator_of(f, x);
	const bool lie = is_lie_element(W);
	const bool derivation = is_derivation_in(gp_from_ac(f), x);
	return {Json{{"variable", x.str()}, {"operator", to_string(W)}, {"lie", lie}, {"derivation", derivation}},
	        "operator: " + to_string(W) + "\nlie: " + (lie ? "true" : "false") +
	            "\nderivation in " + x.str() + ": " + (derivation ? "true" : "false")};
}

Realization realization(const Options& opt, bool witness)
{
	if (opt.model.empty())
		throw UsageError("--model is required");
	const unsigned size = opt.m ? opt.m : opt.n;
	if (size == 0)
		throw UsageError(witness ? "--m (or --n) is required" : "--n is required");
	return Realization(parse_model(opt.model), size);
}

Assignment parse_assignments(const Options& opt, const Realization& R)
{
	Assignment a;
	for (const auto& s : opt.assigns) {
		const auto eq = s.find('=');
		if (eq == std::string::npos)
			throw UsageError("--assign expects VAR=EXPR, got '" + s + "'");
		a[Variable::parse(s.substr(0, eq))] = to_ratfunc(parse(s.substr(eq + 1)), R);
	}
	return a;
}

Report cmd_realize(Options& opt, std::istream& in)
{
	const Realization R = realization(opt, false);
	const Assignment a = parse_assignments(opt, R);
	const std::string v = evaluate_gp(one_gp(opt, in), a, R).str();
	return {v, v};
}

Report cmd_witness(Options& opt, std::istream& in)
{
	const Realization R = realization(opt, true);
	const GPPoly f = one_gp(opt, in);
	SearchOptions so;
	so.budget = opt.budget;
	so.seed = opt.seed.value_or(0);
	auto w = identity_witness_search(f, R, so);
	if (!w)
		return {Json{{"found", false}, {"budget", opt.budget}},
		        "no witness found within budget " + std::to_string(opt.budget) + " (inconclusive)"};
	Json assign = Json::object();
	std::string text = "witness (" + w->method + ", attempt " + std::to_string(w->attempts) + "):";
	for (const auto& [v, r] : w->assignment) {
		assign[v.str()] = r.str();
		text += "\n  " + v.str() + " = " + r.str();
	}
	const std::string value = w->value.str();
	text += "\nvalue: " + value;
	return {Json{{"found", true},
	             {"method", w->method},
	             {"attempts", w->attempts},
	             {"assignment", assign},
	             {"value", value}},
	        text};
}

std::string json_line(const std::string& command, bool ok, const Json& result, const Options& opt)
{
	Json doc;
	doc["command"] = command;
	doc["status"] = ok ? "ok" : "error";
	doc["result"] = result;
	doc["meta"] = Json{{"seed", opt.seed ? Json(*opt.seed) : Json(nullptr)}};
	return doc.dump() + "\n";
}

} // namespace

CommandResult run(const std::vector<std::string>& args, std::istream& input)
{
	Options opt;
	CLI::App app{"Exact computations in free anti-commutative and generic Poisson algebras", "freegp"};
	app.set_help_all_flag("--help-all");
	app.require_subcommand(1);
	app.fallthrough();
	app.add_flag("--json", opt.json, "Emit one JSON document");
	app.add_option("--seed", opt.seed, "Seed for randomized searches");

	using Handler = Report (*)(Options&, std::istream&);
	std::vector<std::pair<CLI::App*, Handler>> commands;
	auto add = [&](const char* name, const char* help, Handler h) {
		CLI::App* sub = app.add_subcommand(name, help);
		commands.emplace_back(sub, h);
		return sub;
	};
	auto with_exprs = [&](CLI::App* sub) {
		sub->add_option("expressions", opt.exprs, "Expressions (read from stdin when omitted)");
		return sub;
	};

	with_exprs(add("normalize", "Canonical form of an expression", cmd_normalize));
	with_exprs(add("bracket", "Bracket of two expressions", cmd_bracket));
	with_exprs(add("mul", "Product of two expressions", cmd_mul));
	with_exprs(add("jacobian", "Test whether a polylinear polynomial is Jacobian", cmd_jacobian));
	add("jacobian-space", "Basis of Jacobian AC-polynomials in x1..xn", cmd_jacobian_space)
	    ->add_option("--n", opt.n, "Number of variables")
	    ->required();
	with_exprs(add("reduce", "Reduce a polylinear polynomial to a Jacobian one", cmd_reduce));
	with_exprs(add("linearize", "Full polarization", cmd_linearize));
	auto* flip_cmd = with_exprs(add("flip", "Flip in a variable", cmd_flip));
	flip_cmd->add_option("--var", opt.var, "Variable")->required();
	auto* height_cmd = with_exprs(add("height", "Height of a variable in a word", cmd_height));
	height_cmd->add_option("--var", opt.var, "Variable")->required();
	auto* fh_cmd = with_exprs(add("farkas-height", "Farkas height of a polylinear polynomial", cmd_farkas_height));
	fh_cmd->add_flag("--strip-bare", opt.strip_bare, "Substitute 1 for bare variable factors first");
	auto* lie_cmd = with_exprs(add("lie-test", "Friedrichs test for the operator of an AC-polynomial", cmd_lie_test));
	lie_cmd->add_option("--var", opt.var, "Distinguished variable (default: the largest)");
	lie_cmd->add_option("--alternating", opt.alternating, "Test the alternating sum A_m instead");
	auto* realize_cmd = with_exprs(add("realize", "Evaluate in a differential realization", cmd_realize));
	realize_cmd->add_option("--model", opt.model, "poisson or gps")->required();
	realize_cmd->add_option("--n", opt.n, "Number of (x, y) pairs");
	realize_cmd->add_option("--assign", opt.assigns, "VAR=EXPR")->allow_extra_args(false);
	auto* witness_cmd = with_exprs(add("witness", "Search for a non-identity witness", cmd_witness));
	witness_cmd->add_option("--model", opt.model, "poisson or gps")->required();
	witness_cmd->add_option("--m", opt.m, "Number of (x, y) pairs");
	witness_cmd->add_option("--n", opt.n, "Alias of --m");
	witness_cmd->add_option("--budget", opt.budget, "Random assignments to try");

	CommandResult res;
	std::string command;
	try {
		std::vector<std::string> reversed(args.rbegin(), args.rend());
		app.parse(reversed);
		Handler handler = nullptr;
		for (const auto& [sub, h] : commands)
			if (sub->parsed()) {
				command = sub->get_name();
				handler = h;
			}
		const Report r = handler(opt, input);
		res.out = opt.json ? json_line(command, true, r.result, opt) : r.text + "\n";
		return res;
	} catch (const CLI::CallForHelp&) {
		res.out = app.help();
		return res;
	} catch (const CLI::CallForAllHelp&) {
		res.out = app.help("", CLI::AppFormatMode::All);
		return res;
	} catch (const CLI::ParseError& e) {
		res.code = ExitCode::usage_error;
		for (const auto& [sub, h] : commands)
			if (sub->parsed())
				command = sub->get_name();
		if (opt.json)
			res.out = json_line(command, false, e.what(), opt);
		else
			res.err = std::string("error: ") + e.what() + "\n";
		return res;
	} catch (const ParseError& e) {
		res.code = ExitCode::usage_error;
		if (opt.json)
			res.out = json_line(command, false, e.what(), opt);
		else
			res.err = std::string("error: ") + e.what() + "\n";
		return res;
	} catch (const UsageError& e) {
		res.code = ExitCode::usage_error;
		if (opt.json)
			res.out = json_line(command, false, e.what(), opt);
		else
			res.err = std::string("error: ") + e.what() + "\n";
		return res;
	} catch (const std::exception& e) {
		res.code = ExitCode::domain_error;
		if (opt.json)
			res.out = json_line(command, false, e.what(), opt);
		else
			res.err = std::string("error: ") + e.what() + "\n";
		return res;
	}
}

} // namespace freegp::cli
