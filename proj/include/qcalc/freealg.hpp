#pragma once

// Noncommutative polynomials over Scalar and presented *-algebras as
// oriented rewrite systems.

#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <unordered_map>
#include <vector>

#include "qcalc/scalar.hpp"

namespace qcalc {

using Gen = char16_t;
using Word = std::u16string;

class BudgetExceeded : public std::runtime_error {
public:
	using std::runtime_error::runtime_error;
};

class InconsistentPresentation : public std::runtime_error {
public:
	using std::runtime_error::runtime_error;
};

class AlphabetError : public std::runtime_error {
public:
	using std::runtime_error::runtime_error;
};

/// Finite sum of scalar-weighted words. Words are stored in plain
/// lexicographic order, which is canonical but not the reduction order.
class NcPoly {
public:
	using Terms = std::map<Word, Scalar>;

	NcPoly() = default;
	NcPoly(const Scalar &c);
	NcPoly(long c) : NcPoly(Scalar(c)) {}
	static NcPoly word(Word w, Scalar c = Scalar(1));
	static NcPoly gen(int g) { return word(Word(1, static_cast<Gen>(g))); }

	bool is_zero() const { return terms_.empty(); }
	const Terms &terms() const { return terms_; }
	/// Coefficient of the empty word.
	Scalar constant() const;
	bool is_scalar() const;
	Scalar coefficient(const Word &w) const;
	size_t size() const { return terms_.size(); }

	void add(const Word &w, const Scalar &c);
	NcPoly map_scalars(const std::function<Scalar(const Scalar &)> &f) const;

	friend NcPoly operator+(const NcPoly &a, const NcPoly &b);
	friend NcPoly operator-(const NcPoly &a, const NcPoly &b);
	friend NcPoly operator-(const NcPoly &a);
	friend NcPoly operator*(const NcPoly &a, const NcPoly &b);
	friend NcPoly operator*(const Scalar &c, const NcPoly &a);
	friend NcPoly operator*(const NcPoly &a, const Scalar &c) { return c * a; }
	NcPoly &operator+=(const NcPoly &b);
	NcPoly &operator-=(const NcPoly &b);
	friend bool operator==(const NcPoly &a, const NcPoly &b) { return a.terms_ == b.terms_; }
	friend bool operator!=(const NcPoly &a, const NcPoly &b) { return !(a == b); }

private:
	Terms terms_;
};

struct Generator {
	std::string name;
	std::vector<std::string> aliases;
	int degree = 0;
};

struct StarImage {
	int gen;
	Scalar coeff;
};

struct Rule {
	Word head;
	NcPoly rhs;
};

/// Generators, star map, inverse pairs and the inner differential data.
/// Shared by the parser and the presentation.
struct Alphabet {
	std::vector<Generator> gens;
	std::vector<std::optional<StarImage>> star;
	std::vector<int> inverse; // -1 when none
	std::optional<NcPoly> theta;
	Scalar sigma{1};

	int size() const { return static_cast<int>(gens.size()); }
	int find(const std::string &name) const; // -1 when absent
	int degree(const Word &w) const;
	bool has_star() const;
};

/// Report entry for checks returning residuals.
struct Residual {
	std::string label;
	NcPoly value;
};

class Presentation;
using PresentationPtr = std::shared_ptr<const Presentation>;

class Presentation {
public:
	const std::string &name() const { return name_; }
	const Alphabet &alphabet() const { return alpha_; }
	int gen_count() const { return alpha_.size(); }
	int find(const std::string &name) const { return alpha_.find(name); }
	int require(const std::string &name) const;
	NcPoly gen(const std::string &name) const { return NcPoly::gen(require(name)); }
	const std::vector<Rule> &rules() const { return rules_; }
	/// Relations as supplied (star closure included), before orientation.
	const std::vector<NcPoly> &relations() const { return relations_; }
	bool is_graded() const;

	/// Reduction order; negative when a < b.
	int compare(const Word &a, const Word &b) const;
	bool less(const Word &a, const Word &b) const { return compare(a, b) < 0; }

	NcPoly normalize(const NcPoly &x) const;
	bool reducible(const Word &w) const;
	NcPoly mul(const NcPoly &a, const NcPoly &b) const { return normalize(a * b); }
	NcPoly pow(const NcPoly &a, int n) const;
	/// Antilinear antimultiplicative involution; result normalized.
	NcPoly star(const NcPoly &x) const;
	bool star_defined(const NcPoly &x) const;

	/// a b - (-1)^{|a||b|} b a, termwise in degree.
	NcPoly graded_commutator(const NcPoly &a, const NcPoly &b) const;
	/// sigma * [theta, x} (inner differential).
	NcPoly d(const NcPoly &x) const;

	/// Critical pairs (overlaps and inclusions of heads) with word length at
	/// most max_degree whose two reductions disagree.
	std::vector<Residual> check_local_confluence(int max_degree) const;
	std::vector<Residual> centrality_check(const NcPoly &c) const;

	std::string word_str(const Word &w) const;
	std::string str(const NcPoly &x) const;

	/// Rebuild with every coefficient transformed (relations re-oriented).
	PresentationPtr map_scalars(const std::function<Scalar(const Scalar &)> &f) const;

private:
	friend class PresentationBuilder;
	std::string name_;
	Alphabet alpha_;
	std::vector<NcPoly> relations_;
	std::vector<Rule> rules_;
	std::unordered_map<Word, size_t> head_index_;
	std::vector<size_t> head_lengths_;
	long step_budget_ = 0;

	const Rule *match(const Word &w, size_t &pos) const;
	void index_rules();
};

/// Collects generators and relations, then orients them into a rewrite system.
class PresentationBuilder {
public:
	explicit PresentationBuilder(std::string name);
	/// Start from an existing presentation's generators and relations.
	explicit PresentationBuilder(const Presentation &base, std::string name = "");

	int add_generator(const std::string &name, int degree = 0, std::vector<std::string> aliases = {});
	void set_degree(int g, int degree) { alpha_.gens.at(g).degree = degree; }
	void set_star(int g, int image, Scalar coeff = Scalar(1));
	/// Declares ginv as the two-sided inverse of g.
	void add_inverse(int g, int ginv);
	void add_relation(const NcPoly &r);
	void add_relation(const NcPoly &lhs, const NcPoly &rhs) { add_relation(lhs - rhs); }
	/// Appends a rewrite rule verbatim, after orientation of the relations.
	/// Used to build deliberately broken systems for negative controls.
	void add_rule(const Word &head, const NcPoly &rhs);
	void set_theta(const NcPoly &theta, const Scalar &sigma);
	void set_star_closure(bool on) { star_closure_ = on; }
	void map_scalars(const std::function<Scalar(const Scalar &)> &f);

	const Alphabet &alphabet() const { return alpha_; }
	NcPoly gen(const std::string &name) const;

	PresentationPtr build() const;

private:
	std::string name_;
	Alphabet alpha_;
	std::vector<NcPoly> relations_;
	std::vector<Rule> raw_rules_;
	bool star_closure_ = true;
	size_t closed_count_ = 0;
};

/// Images of source generators in the target.
using GenMap = std::vector<NcPoly>;

/// Apply an algebra map on words, normalizing in the target.
NcPoly apply_map(const Presentation &source, const Presentation &target, const GenMap &images, const NcPoly &x);

/// Normal forms in the target of the images of all source rules, followed by
/// the star-compatibility residuals (where stars are defined on both sides).
std::vector<Residual> hom_check(const Presentation &source, const Presentation &target, const GenMap &images,
                                bool check_star = true);

bool all_zero(const std::vector<Residual> &r);

/// Sends each source generator to the target generator of the same name (or alias).
/// Throws AlphabetError when a name is missing.
GenMap map_by_name(const Presentation &source, const Presentation &target);

/// Star without normalization.
NcPoly star_unnormalized(const Alphabet &alpha, const NcPoly &x);
/// sigma (theta x - (-1)^|x| x theta) without normalization.
NcPoly inner_d_unnormalized(const Alphabet &alpha, const NcPoly &x);

/// Step budget from QCALC_STEP_BUDGET (default 2,000,000 rewrite steps per normalize call).
long default_step_budget();

} // namespace qcalc
