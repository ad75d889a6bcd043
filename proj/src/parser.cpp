#include "freegp/parser.hpp"

#include "freegp/error.hpp"

#include <cctype>

namespace freegp {

namespace {

enum class Tok { var, integer, slash, star, plus, minus, lbrace, rbrace, comma, lparen, rparen, end };

struct Token {
	Tok kind;
	std::string text;
	int line;
	int column;
};

std::string describe(Tok t)
{
	switch (t) {
	case Tok::var: return "variable";
	case Tok::integer: return "integer";
	case Tok::slash: return "'/'";
	case Tok::star: return "'*'";
	case Tok::plus: return "'+'";
	case Tok::minus: return "'-'";
	case Tok::lbrace: return "'{'";
	case Tok::rbrace: return "'}'";
	case Tok::comma: return "','";
	case Tok::lparen: return "'('";
	case Tok::rparen: return "')'";
	case Tok::end: return "end of input";
	}
	return "?";
}

[[noreturn]] void fail(const Token& at, std::vector<Tok> expected)
{
	std::vector<std::string> names;
	std::string list;
	for (std::size_t i = 0; i < expected.size(); ++i) {
		names.push_back(describe(expected[i]));
		if (i)
			list += i + 1 == expected.size() ? " or " : ", ";
		list += names.back();
	}
	const std::string where = at.kind == Tok::end ? "end of input" : "'" + at.text + "'";
	throw ParseError(at.line, at.column, names,
	                 "syntax error at line " + std::to_string(at.line) + ", column " + std::to_string(at.column) +
	                     " (" + where + "): expected " + list);
}

std::vector<Token> lex(std::string_view s)
{
	std::vector<Token> out;
	int line = 1, col = 1;
	std::size_t i = 0;
	auto advance = [&](std::size_t n) {
		for (std::size_t k = 0; k < n; ++k, ++i) {
			if (s[i] == '\n') {
				++line;
				col = 1;
			} else {
				++col;
			}
		}
	};
	while (i < s.size()) {
		const unsigned char c = static_cast<unsigned char>(s[i]);
		if (std::isspace(c)) {
			advance(1);
			continue;
		}
		const int l = line, cl = col;
		if (std::isalpha(c)) {
			std::size_t j = i;
			while (j < s.size() && std::isalpha(static_cast<unsigned char>(s[j])))
				++j;
			const std::size_t letters = j;
			while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j])))
				++j;
			if (j == letters) {
				Token bad{Tok::var, std::string(s.substr(i, j - i)), l, cl};
				throw ParseError(l, cl, {"variable"},
				                 "syntax error at line " + std::to_string(l) + ", column " + std::to_string(cl) +
				                     ": variable '" + bad.text + "' must end in digits");
			}
			out.push_back({Tok::var, std::string(s.substr(i, j - i)), l, cl});
			advance(j - i);
			continue;
		}
		if (std::isdigit(c)) {
			std::size_t j = i;
			while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j])))
				++j;
			out.push_back({Tok::integer, std::string(s.substr(i, j - i)), l, cl});
			advance(j - i);
			continue;
		}
		Tok k;
		switch (c) {
		case '/': k = Tok::slash; break;
		case '*': k = Tok::star; break;
		case '+': k = Tok::plus; break;
		case '-': k = Tok::minus; break;
		case '{': k = Tok::lbrace; break;
		case '}': k = Tok::rbrace; break;
		case ',': k = Tok::comma; break;
		case '(': k = Tok::lparen; break;
		case ')': k = Tok::rparen; break;
		default:
			throw ParseError(l, cl, {},
			                 "syntax error at line " + std::to_string(l) + ", column " + std::to_string(cl) +
			                     ": unexpected character '" + std::string(1, static_cast<char>(c)) + "'");
		}
		out.push_back({k, std::string(1, static_cast<char>(c)), l, cl});
		advance(1);
	}
	out.push_back({Tok::end, "", line, col});
	return out;
}

class Parser {
public:
	explicit Parser(std::vector<Token> toks) : toks_(std::move(toks)) {}

	Expr parse_all()
	{
		Expr e = expr();
		if (peek().kind != Tok::end) {
			auto expected = continuation_;
			expected.push_back(Tok::end);
			fail(peek(), expected);
		}
		return e;
	}

private:
	const Token& peek() const { return toks_[pos_]; }
	const Token& next() { return toks_[pos_++]; }

	Expr expr()
	{
		Expr e;
		int sign = 1;
		if (peek().kind == Tok::plus || peek().kind == Tok::minus)
			sign = next().kind == Tok::minus ? -1 : 1;
		e.terms.push_back(term(sign));
		while (peek().kind == Tok::plus || peek().kind == Tok::minus) {
			sign = next().kind == Tok::minus ? -1 : 1;
			e.terms.push_back(term(sign));
		}
		return e;
	}

	Term term(int sign)
	{
		Term t;
		if (peek().kind == Tok::integer) {
			t.coefficient = rational();
			if (peek().kind != Tok::star) {
				t.coefficient *= sign;
				continuation_ = {Tok::star, Tok::plus, Tok::minus};
				return t;
			}
			next();
		}
		t.coefficient *= sign;
		t.factors.push_back(factor());
		while (peek().kind == Tok::star) {
			next();
			t.factors.push_back(factor());
		}
		continuation_ = {Tok::star, Tok::plus, Tok::minus};
		return t;
	}

	Rational rational()
	{
		const Token& num = next();
		Rational r(Integer(num.text));
		if (peek().kind == Tok::slash) {
			next();
			if (peek().kind != Tok::integer)
				fail(peek(), {Tok::integer});
			const Token& den = next();
			Integer d(den.text);
			if (d == 0)
				throw ParseError(den.line, den.column, {"positive integer"},
				                 "syntax error at line " + std::to_string(den.line) + ", column " +
				                     std::to_string(den.column) + ": zero denominator");
			r = Rational(Integer(num.text), d);
			r.canonicalize();
		}
		return r;
	}

	Factor factor()
	{
		const Token& t = peek();
		switch (t.kind) {
		case Tok::var:
			next();
			return Variable::parse(t.text);
		case Tok::lbrace: {
			next();
			auto l = std::make_shared<Expr>(expr());
			if (peek().kind != Tok::comma) {
				auto expected = continuation_;
				expected.push_back(Tok::comma);
				fail(peek(), expected);
			}
			next();
			auto r = std::make_shared<Expr>(expr());
			if (peek().kind != Tok::rbrace) {
				auto expected = continuation_;
				expected.push_back(Tok::rbrace);
				fail(peek(), expected);
			}
			next();
			return BracketExpr{std::move(l), std::move(r)};
		}
		case Tok::lparen: {
			next();
			auto inner = std::make_shared<Expr>(expr());
			if (peek().kind != Tok::rparen) {
				auto expected = continuation_;
				expected.push_back(Tok::rparen);
				fail(peek(), expected);
			}
			next();
			return ParenExpr{std::move(inner)};
		}
		default:
			fail(t, {Tok::var, Tok::lbrace, Tok::lparen});
		}
	}

	std::vector<Token> toks_;
	std::size_t pos_ = 0;
	std::vector<Tok> continuation_;
};

bool factor_equal(const Factor& a, const Factor& b)
{
	if (a.index() != b.index())
		return false;
	if (auto* v = std::get_if<Variable>(&a))
		return *v == std::get<Variable>(b);
	if (auto* br = std::get_if<BracketExpr>(&a)) {
		const auto& o = std::get<BracketExpr>(b);
		return *br->left == *o.left && *br->right == *o.right;
	}
	return *std::get<ParenExpr>(a).inner == *std::get<ParenExpr>(b).inner;
}

void print_factor(const Factor& f, std::string& out)
{
	if (auto* v = std::get_if<Variable>(&f)) {
		out += v->str();
	} else if (auto* br = std::get_if<BracketExpr>(&f)) {
		out += '{' + print(*br->left) + ',' + print(*br->right) + '}';
	} else {
		out += '(' + print(*std::get<ParenExpr>(f).inner) + ')';
	}
}

} // namespace

bool operator==(const Expr& a, const Expr& b)
{
	if (a.terms.size() != b.terms.size())
		return false;
	for (std::size_t i = 0; i < a.terms.size(); ++i) {
		const Term& s = a.terms[i];
		const Term& t = b.terms[i];
		if (s.coefficient != t.coefficient || s.factors.size() != t.factors.size())
			return false;
		for (std::size_t j = 0; j < s.factors.size(); ++j)
			if (!factor_equal(s.factors[j], t.factors[j]))
				return false;
	}
	return true;
}

Expr parse(std::string_view input) { return Parser(lex(input)).parse_all(); }

std::string print(const Expr& e)
{
	std::string out;
	for (std::size_t i = 0; i < e.terms.size(); ++i) {
		const Term& t = e.terms[i];
		const bool negative = sgn(t.coefficient) < 0;
		if (i == 0)
			out += negative ? "-" : "";
		else
			out += negative ? " - " : " + ";
		const Rational mag = abs(t.coefficient);
		if (t.factors.empty()) {
			out += to_string(mag);
			continue;
		}
		if (mag != 1)
			out += to_string(mag) + "*";
		for (std::size_t j = 0; j < t.factors.size(); ++j) {
			if (j)
				out += '*';
			print_factor(t.factors[j], out);
		}
	}
	return out;
}

namespace {

template <class Value, class Ops>
Value fold(const Expr& e, const Ops& ops)
{
	Value sum = ops.constant(0);
	for (const Term& t : e.terms) {
		Value prod = ops.constant(t.coefficient);
		for (const Factor& f : t.factors) {
			Value v;
			if (auto* var = std::get_if<Variable>(&f))
				v = ops.variable(*var);
			else if (auto* br = std::get_if<BracketExpr>(&f))
				v = ops.bracket(fold<Value>(*br->left, ops), fold<Value>(*br->right, ops));
			else
				v = fold<Value>(*std::get<ParenExpr>(f).inner, ops);
			prod = ops.mul(prod, v);
		}
		sum = ops.add(sum, prod);
	}
	return sum;
}

struct GPOps {
	GPPoly constant(const Rational& c) const { return gp_constant(c); }
	GPPoly variable(const Variable& v) const { return gp_variable(v); }
	GPPoly bracket(const GPPoly& a, const GPPoly& b) const { return gp_bracket(a, b); }
	GPPoly mul(const GPPoly& a, const GPPoly& b) const { return gp_mul(a, b); }
	GPPoly add(const GPPoly& a, const GPPoly& b) const { return a + b; }
};

struct FieldOps {
	const Realization* R;
	RatFunc constant(const Rational& c) const { return RatFunc(c); }
	RatFunc variable(const Variable& v) const
	{
		if (!R->declares(v))
			throw DomainError("unknown variable " + v.str() + " for " + to_string(R->model()) + " with n = " +
			                  std::to_string(R->n()));
		return RatFunc::variable(v);
	}
	RatFunc bracket(const RatFunc& a, const RatFunc& b) const { return R->bracket(a, b); }
	RatFunc mul(const RatFunc& a, const RatFunc& b) const { return a * b; }
	RatFunc add(const RatFunc& a, const RatFunc& b) const { return a + b; }
};

} // namespace

GPPoly to_gp(const Expr& e) { return fold<GPPoly>(e, GPOps{}); }

RatFunc to_ratfunc(const Expr& e, const Realization& R) { return fold<RatFunc>(e, FieldOps{&R}); }

} // namespace freegp
