#pragma once

// Expression syntax shared by the CLI, presentation files and R-matrix files.
//
//   sum     := product (('+' | '-') product)*
//   product := unary (('*' | '·' | '/') unary)*
//   unary   := ('-' | '+') unary | postfix
//   postfix := primary ('^' exponent | '†')*
//   primary := number | name | '(' sum ')' | 'd(' sum ')' | 'adj(' sum ')'
//            | '[' sum ',' sum ']' ('_' param)?
//
// Exponents are integers, or k/2 on q. Generator names take precedence over
// scalar names.

#include <map>
#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "qcalc/freealg.hpp"

namespace qcalc {

class ParseError : public std::runtime_error {
public:
	ParseError(const std::string &msg, int line, int column, std::vector<std::string> expected);
	int line() const { return line_; }
	int column() const { return column_; }
	const std::vector<std::string> &expected() const { return expected_; }

private:
	int line_, column_;
	std::vector<std::string> expected_;
};

struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

struct Expr {
	enum class Kind { Number, Name, Add, Sub, Neg, Mul, Div, Pow, Star, D, Bracket };
	Kind kind;
	std::string text;     // number literal or name
	int exp_num = 1;      // Pow exponent numerator
	int exp_den = 1;      // Pow exponent denominator (1 or 2)
	std::vector<ExprPtr> args; // Bracket: x, y, optional parameter
	int line = 1, column = 1;
};

ExprPtr parse_expr(std::string_view src);
/// Canonical text with minimal parentheses.
std::string print_expr(const Expr &e);
bool same_expr(const Expr &a, const Expr &b);

/// Meaning of [x, y]_p.
enum class BracketConvention {
	Standard, // x*y - p*y*x
	Inverted, // x*y - p^-1*y*x
};

struct EvalContext {
	const Alphabet *alphabet = nullptr;
	BracketConvention bracket = BracketConvention::Standard;
	/// Names bound to scalar values (checked after generators).
	std::map<std::string, Scalar> bindings;
	/// Register unknown names as new central indeterminates instead of failing.
	bool allow_new_scalars = false;
};

/// Evaluate in the free algebra (no normalization).
NcPoly evaluate(const Expr &e, const EvalContext &ctx);
Scalar evaluate_scalar(const Expr &e, const EvalContext &ctx = {});
Scalar parse_scalar(std::string_view src, const EvalContext &ctx = {});

/// Parse, evaluate and normalize in a presentation.
NcPoly parse_element(const Presentation &p, std::string_view src);
/// Parse "lhs = rhs" (or a bare expression meaning expr = 0) as lhs - rhs.
NcPoly parse_relation(std::string_view src, const EvalContext &ctx);

} // namespace qcalc
