#include "qcalc/expr.hpp"

#include <sstream>

namespace qcalc {

namespace {

std::string join(const std::vector<std::string> &v)
{
	std::string out;
	for (size_t i = 0; i < v.size(); ++i) {
		if (i)
			out += i + 1 == v.size() ? " or " : ", ";
		out += v[i];
	}
	return out;
}

} // namespace

ParseError::ParseError(const std::string &msg, int line, int column, std::vector<std::string> expected)
    : std::runtime_error(std::to_string(line) + ":" + std::to_string(column) + ": " + msg +
                         (expected.empty() ? "" : " (expected " + join(expected) + ")")),
      line_(line), column_(column), expected_(std::move(expected))
{
}

// ---------------------------------------------------------------------------
// Lexer

namespace {

enum class Tok { Num, Name, Plus, Minus, Times, Slash, Caret, LParen, RParen, LBrack, RBrack, Comma, Under, Dagger, Equals, End };

const char *tok_name(Tok t)
{
	switch (t) {
	case Tok::Num: return "number";
	case Tok::Name: return "name";
	case Tok::Plus: return "'+'";
	case Tok::Minus: return "'-'";
	case Tok::Times: return "'*'";
	case Tok::Slash: return "'/'";
	case Tok::Caret: return "'^'";
	case Tok::LParen: return "'('";
	case Tok::RParen: return "')'";
	case Tok::LBrack: return "'['";
	case Tok::RBrack: return "']'";
	case Tok::Comma: return "','";
	case Tok::Under: return "'_'";
	case Tok::Dagger: return "'†'";
	case Tok::Equals: return "'='";
	case Tok::End: return "end of input";
	}
	return "?";
}

struct Token {
	Tok kind;
	std::string text;
	int line, column;
};

// Multi-byte punctuation recognised by the lexer.
struct Special {
	const char *utf8;
	Tok kind;
};
constexpr Special kSpecials[] = {{"\xC2\xB7", Tok::Times}, {"\xE2\x88\x92", Tok::Minus}, {"\xE2\x80\xA0", Tok::Dagger},
                                 {"\xE2\x8B\x85", Tok::Times}};

std::vector<Token> lex(std::string_view s)
{
	std::vector<Token> out;
	int line = 1, col = 1;
	size_t i = 0;
	auto advance = [&](size_t n) {
		for (size_t k = 0; k < n; ++k, ++i) {
			unsigned char c = s[i];
			if (c == '\n') {
				++line;
				col = 1;
			} else if ((c & 0xC0) != 0x80) {
				++col;
			}
		}
	};
	auto special_at = [&](size_t j) -> const Special * {
		for (auto &sp : kSpecials)
			if (s.substr(j).starts_with(sp.utf8))
				return &sp;
		return nullptr;
	};
	auto name_char = [&](size_t j, bool first) {
		unsigned char c = s[j];
		if (c >= 0x80)
			return special_at(j) == nullptr;
		if (std::isalpha(c))
			return true;
		return !first && (std::isdigit(c) || c == '_');
	};
	while (i < s.size()) {
		unsigned char c = s[i];
		if (std::isspace(c)) {
			advance(1);
			continue;
		}
		int l = line, k = col;
		if (auto *sp = special_at(i)) {
			out.push_back({sp->kind, sp->utf8, l, k});
			advance(std::string_view(sp->utf8).size());
			continue;
		}
		if (std::isdigit(c)) {
			size_t j = i;
			while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j])))
				++j;
			out.push_back({Tok::Num, std::string(s.substr(i, j - i)), l, k});
			advance(j - i);
			continue;
		}
		if (name_char(i, true)) {
			size_t j = i;
			while (j < s.size() && name_char(j, false))
				++j;
			out.push_back({Tok::Name, std::string(s.substr(i, j - i)), l, k});
			advance(j - i);
			continue;
		}
		Tok t;
		switch (c) {
		case '+': t = Tok::Plus; break;
		case '-': t = Tok::Minus; break;
		case '*': t = Tok::Times; break;
		case '/': t = Tok::Slash; break;
		case '^': t = Tok::Caret; break;
		case '(': case '{': t = Tok::LParen; break;
		case ')': case '}': t = Tok::RParen; break;
		case '[': t = Tok::LBrack; break;
		case ']': t = Tok::RBrack; break;
		case ',': t = Tok::Comma; break;
		case '_': t = Tok::Under; break;
		case '=': t = Tok::Equals; break;
		default: {
			size_t n = 1;
			while (i + n < s.size() && (static_cast<unsigned char>(s[i + n]) & 0xC0) == 0x80)
				++n;
			throw ParseError("unexpected character '" + std::string(s.substr(i, n)) + "'", l, k, {});
		}
		}
		out.push_back({t, std::string(1, static_cast<char>(c)), l, k});
		advance(1);
	}
	out.push_back({Tok::End, "", line, col});
	return out;
}

// ---------------------------------------------------------------------------
// Parser

class Parser {
public:
	explicit Parser(std::string_view src) : toks_(lex(src)) {}

	ExprPtr whole()
	{
		auto e = sum();
		expect(Tok::End, {"operator", "end of input"});
		return e;
	}

	// lhs '=' rhs, or a bare expression.
	std::pair<ExprPtr, ExprPtr> relation()
	{
		auto lhs = sum();
		ExprPtr rhs;
		if (peek().kind == Tok::Equals) {
			++pos_;
			rhs = sum();
		}
		expect(Tok::End, {"operator", "'='", "end of input"});
		return {lhs, rhs};
	}

private:
	std::vector<Token> toks_;
	size_t pos_ = 0;

	const Token &peek(size_t ahead = 0) const { return toks_[std::min(pos_ + ahead, toks_.size() - 1)]; }

	[[noreturn]] void fail(const std::string &msg, std::vector<std::string> expected) const
	{
		const Token &t = peek();
		std::string found = t.kind == Tok::End ? "end of input" : "'" + t.text + "'";
		throw ParseError(msg.empty() ? "unexpected " + found : msg, t.line, t.column, std::move(expected));
	}

	const Token &expect(Tok k, std::vector<std::string> expected = {})
	{
		if (peek().kind != k)
			fail("", expected.empty() ? std::vector<std::string>{tok_name(k)} : expected);
		return toks_[pos_++];
	}

	static std::shared_ptr<Expr> node(Expr::Kind k, const Token &at)
	{
		auto e = std::make_shared<Expr>();
		e->kind = k;
		e->line = at.line;
		e->column = at.column;
		return e;
	}

	ExprPtr sum()
	{
		auto lhs = product();
		while (peek().kind == Tok::Plus || peek().kind == Tok::Minus) {
			const Token &op = toks_[pos_++];
			auto n = node(op.kind == Tok::Plus ? Expr::Kind::Add : Expr::Kind::Sub, op);
			n->args = {lhs, product()};
			lhs = n;
		}
		return lhs;
	}

	ExprPtr product()
	{
		auto lhs = unary();
		while (peek().kind == Tok::Times || peek().kind == Tok::Slash) {
			const Token &op = toks_[pos_++];
			auto n = node(op.kind == Tok::Times ? Expr::Kind::Mul : Expr::Kind::Div, op);
			n->args = {lhs, unary()};
			lhs = n;
		}
		return lhs;
	}

	ExprPtr unary()
	{
		if (peek().kind == Tok::Minus) {
			auto n = node(Expr::Kind::Neg, toks_[pos_++]);
			n->args = {unary()};
			return n;
		}
		if (peek().kind == Tok::Plus) {
			++pos_;
			return unary();
		}
		return postfix();
	}

	int integer(const char *what)
	{
		bool neg = false;
		if (peek().kind == Tok::Minus) {
			neg = true;
			++pos_;
		}
		const Token &t = expect(Tok::Num, {what});
		long v = 0;
		try {
			v = std::stol(t.text);
		} catch (...) {
			throw ParseError("integer too large", t.line, t.column, {});
		}
		if (v > 1000000)
			throw ParseError("exponent too large", t.line, t.column, {});
		return static_cast<int>(neg ? -v : v);
	}

	ExprPtr postfix()
	{
		auto base = primary();
		for (;;) {
			if (peek().kind == Tok::Caret) {
				auto n = node(Expr::Kind::Pow, toks_[pos_++]);
				if (peek().kind == Tok::LParen) {
					++pos_;
					n->exp_num = integer("integer exponent");
					if (peek().kind == Tok::Slash) {
						++pos_;
						const Token &d = expect(Tok::Num, {"denominator 2"});
						if (d.text != "1" && d.text != "2")
							throw ParseError("only half-integer exponents are supported", d.line, d.column, {});
						n->exp_den = d.text == "2" ? 2 : 1;
						if (n->exp_den == 2 && n->exp_num % 2 == 0) {
							n->exp_num /= 2;
							n->exp_den = 1;
						}
					}
					expect(Tok::RParen);
				} else {
					n->exp_num = integer("integer exponent");
				}
				n->args = {base};
				base = n;
			} else if (peek().kind == Tok::Dagger) {
				auto n = node(Expr::Kind::Star, toks_[pos_++]);
				n->args = {base};
				base = n;
			} else {
				return base;
			}
		}
	}

	ExprPtr primary()
	{
		const Token &t = peek();
		switch (t.kind) {
		case Tok::Num: {
			auto n = node(Expr::Kind::Number, t);
			n->text = t.text;
			++pos_;
			return n;
		}
		case Tok::Name: {
			if (peek(1).kind == Tok::LParen && (t.text == "d" || t.text == "adj")) {
				auto n = node(t.text == "d" ? Expr::Kind::D : Expr::Kind::Star, t);
				pos_ += 2;
				n->args = {sum()};
				expect(Tok::RParen, {"operator", "')'"});
				return n;
			}
			auto n = node(Expr::Kind::Name, t);
			n->text = t.text;
			++pos_;
			return n;
		}
		case Tok::LParen: {
			++pos_;
			auto e = sum();
			expect(Tok::RParen, {"operator", "')'"});
			return e;
		}
		case Tok::LBrack: {
			auto n = node(Expr::Kind::Bracket, t);
			++pos_;
			auto x = sum();
			expect(Tok::Comma, {"operator", "','"});
			auto y = sum();
			expect(Tok::RBrack, {"operator", "']'"});
			n->args = {x, y};
			if (peek().kind == Tok::Under) {
				++pos_;
				if (peek().kind == Tok::Minus) {
					auto neg = node(Expr::Kind::Neg, toks_[pos_++]);
					neg->args = {postfix()};
					n->args.push_back(neg);
				} else {
					n->args.push_back(postfix());
				}
			}
			return n;
		}
		default:
			fail("", {"number", "name", "'('", "'['", "'-'"});
		}
	}
};

// Binding strength for printing.
int prec(const Expr &e)
{
	switch (e.kind) {
	case Expr::Kind::Add:
	case Expr::Kind::Sub: return 1;
	case Expr::Kind::Mul:
	case Expr::Kind::Div: return 2;
	case Expr::Kind::Neg: return 3;
	case Expr::Kind::Pow:
	case Expr::Kind::Star: return 4;
	default: return 5;
	}
}

void print(const Expr &e, std::ostringstream &os);

void print_at(const Expr &e, int min_prec, std::ostringstream &os)
{
	if (prec(e) < min_prec) {
		os << "(";
		print(e, os);
		os << ")";
	} else {
		print(e, os);
	}
}

void print(const Expr &e, std::ostringstream &os)
{
	using K = Expr::Kind;
	switch (e.kind) {
	case K::Number:
	case K::Name: os << e.text; break;
	case K::Add:
	case K::Sub:
		print_at(*e.args[0], 1, os);
		os << (e.kind == K::Add ? " + " : " - ");
		print_at(*e.args[1], 2, os);
		break;
	case K::Mul:
	case K::Div:
		print_at(*e.args[0], 2, os);
		os << (e.kind == K::Mul ? "*" : "/");
		print_at(*e.args[1], 3, os);
		break;
	case K::Neg:
		os << "-";
		print_at(*e.args[0], 3, os);
		break;
	case K::Pow:
		print_at(*e.args[0], 5, os);
		os << "^";
		if (e.exp_den != 1)
			os << "(" << e.exp_num << "/" << e.exp_den << ")";
		else
			os << e.exp_num;
		break;
	case K::Star:
		print_at(*e.args[0], 4, os);
		os << "†";
		break;
	case K::D:
		os << "d(";
		print(*e.args[0], os);
		os << ")";
		break;
	case K::Bracket:
		os << "[";
		print(*e.args[0], os);
		os << ", ";
		print(*e.args[1], os);
		os << "]";
		if (e.args.size() > 2) {
			os << "_";
			print_at(*e.args[2], 5, os);
		}
		break;
	}
}

} // namespace

ExprPtr parse_expr(std::string_view src) { return Parser(src).whole(); }

std::string print_expr(const Expr &e)
{
	std::ostringstream os;
	print(e, os);
	return os.str();
}

bool same_expr(const Expr &a, const Expr &b)
{
	if (a.kind != b.kind || a.text != b.text || a.exp_num != b.exp_num || a.exp_den != b.exp_den ||
	    a.args.size() != b.args.size())
		return false;
	for (size_t i = 0; i < a.args.size(); ++i)
		if (!same_expr(*a.args[i], *b.args[i]))
			return false;
	return true;
}

// ---------------------------------------------------------------------------
// Evaluation

namespace {

[[noreturn]] void eval_error(const Expr &e, const std::string &msg)
{
	throw ParseError(msg, e.line, e.column, {});
}

std::optional<Scalar> scalar_name(const std::string &name, const EvalContext &ctx)
{
	auto b = ctx.bindings.find(name);
	if (b != ctx.bindings.end())
		return b->second;
	if (name == "q")
		return Scalar::q();
	if (name == "i")
		return Scalar::i();
	if (name == "mu" || name == "μ")
		return Scalar::mu();
	int v = variable_index(name, false);
	if (v < 0 && ctx.allow_new_scalars)
		v = variable_index(name, true);
	if (v < 0)
		return std::nullopt;
	return Scalar::named(variable_name(v));
}

NcPoly eval(const Expr &e, const EvalContext &ctx)
{
	using K = Expr::Kind;
	const Alphabet *al = ctx.alphabet;
	switch (e.kind) {
	case K::Number: return NcPoly(Scalar(Poly(GaussRat(mpq_class(e.text)))));
	case K::Name: {
		if (al) {
			int g = al->find(e.text);
			if (g >= 0)
				return NcPoly::gen(g);
		}
		if (auto s = scalar_name(e.text, ctx))
			return NcPoly(*s);
		eval_error(e, "unknown name '" + e.text + "'");
	}
	case K::Add: return eval(*e.args[0], ctx) + eval(*e.args[1], ctx);
	case K::Sub: return eval(*e.args[0], ctx) - eval(*e.args[1], ctx);
	case K::Neg: return -eval(*e.args[0], ctx);
	case K::Mul: return eval(*e.args[0], ctx) * eval(*e.args[1], ctx);
	case K::Div: {
		NcPoly den = eval(*e.args[1], ctx);
		if (!den.is_scalar())
			eval_error(*e.args[1], "division by a non-scalar");
		if (den.is_zero())
			eval_error(*e.args[1], "division by zero");
		return eval(*e.args[0], ctx) * den.constant().inverse();
	}
	case K::Pow: {
		const Expr &base = *e.args[0];
		if (e.exp_den == 2) {
			bool is_q = base.kind == K::Name && base.text == "q" && !(al && al->find("q") >= 0) &&
			            !ctx.bindings.count("q");
			if (!is_q)
				eval_error(e, "half-integer exponents are only allowed on q");
			return NcPoly(Scalar::qh().pow(e.exp_num));
		}
		int n = e.exp_num;
		NcPoly b = eval(base, ctx);
		if (b.is_scalar()) {
			if (b.is_zero() && n < 0)
				eval_error(e, "division by zero");
			return NcPoly(b.constant().pow(n));
		}
		if (n < 0) {
			if (b.size() == 1 && b.terms().begin()->first.size() == 1 && al) {
				auto &[w, c] = *b.terms().begin();
				int inv = al->inverse[w[0]];
				if (inv < 0)
					eval_error(e, "generator " + al->gens[w[0]].name + " has no declared inverse");
				b = NcPoly::word(Word(1, static_cast<Gen>(inv)), c.inverse());
				n = -n;
			} else {
				eval_error(e, "negative power of a non-invertible element");
			}
		}
		NcPoly r(1);
		for (int k = 0; k < n; ++k)
			r = r * b;
		return r;
	}
	case K::Star: {
		NcPoly x = eval(*e.args[0], ctx);
		if (x.is_scalar())
			return NcPoly(x.constant().conj());
		if (!al)
			eval_error(e, "star needs an algebra");
		try {
			return star_unnormalized(*al, x);
		} catch (const AlphabetError &err) {
			eval_error(e, err.what());
		}
	}
	case K::D: {
		if (!al || !al->theta)
			eval_error(e, "d(...) needs a calculus with an inner form");
		return inner_d_unnormalized(*al, eval(*e.args[0], ctx));
	}
	case K::Bracket: {
		NcPoly x = eval(*e.args[0], ctx), y = eval(*e.args[1], ctx);
		Scalar p(1);
		if (e.args.size() > 2) {
			NcPoly pp = eval(*e.args[2], ctx);
			if (!pp.is_scalar())
				eval_error(*e.args[2], "bracket parameter must be a scalar");
			p = pp.constant();
		}
		if (ctx.bracket == BracketConvention::Inverted)
			p = p.inverse();
		return x * y - p * (y * x);
	}
	}
	eval_error(e, "internal: unknown node");
}

} // namespace

NcPoly evaluate(const Expr &e, const EvalContext &ctx) { return eval(e, ctx); }

Scalar evaluate_scalar(const Expr &e, const EvalContext &ctx)
{
	NcPoly v = eval(e, ctx);
	if (!v.is_scalar())
		eval_error(e, "expected a scalar expression");
	return v.constant();
}

Scalar parse_scalar(std::string_view src, const EvalContext &ctx) { return evaluate_scalar(*parse_expr(src), ctx); }

NcPoly parse_element(const Presentation &p, std::string_view src)
{
	EvalContext ctx;
	ctx.alphabet = &p.alphabet();
	return p.normalize(evaluate(*parse_expr(src), ctx));
}

NcPoly parse_relation(std::string_view src, const EvalContext &ctx)
{
	auto [lhs, rhs] = Parser(src).relation();
	NcPoly r = evaluate(*lhs, ctx);
	if (rhs)
		r -= evaluate(*rhs, ctx);
	return r;
}

} // namespace qcalc
