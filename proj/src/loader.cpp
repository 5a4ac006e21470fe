#include "qcalc/loader.hpp"

#include <yaml-cpp/yaml.h>

#include <fstream>
#include <sstream>

namespace qcalc {

namespace {

[[noreturn]] void fail_at(const std::string &origin, const YAML::Node &n, const std::string &msg)
{
	const auto &m = n.Mark();
	int line = m.is_null() ? 0 : m.line + 1;
	int col = m.is_null() ? 0 : m.column + 1;
	throw ParseError(origin + ": " + msg, line, col, {});
}

std::string scalar_text(const std::string &origin, const YAML::Node &n, const char *what)
{
	if (!n.IsScalar())
		fail_at(origin, n, std::string("expected a string for ") + what);
	return n.as<std::string>();
}

int need_gen(const std::string &origin, const YAML::Node &n, const PresentationBuilder &b)
{
	std::string name = scalar_text(origin, n, "generator name");
	int g = b.alphabet().find(name);
	if (g < 0)
		fail_at(origin, n, "unknown generator '" + name + "'");
	return g;
}

// Re-raise expression errors with the file position of the YAML node.
template <class F>
auto with_position(const std::string &origin, const YAML::Node &n, F &&f)
{
	try {
		return f();
	} catch (const ParseError &e) {
		const auto &m = n.Mark();
		int line = m.is_null() ? e.line() : m.line + 1;
		throw ParseError(origin + ": in '" + n.as<std::string>() + "': " + e.what(), line, e.column(),
		                 e.expected());
	} catch (const AlphabetError &e) {
		fail_at(origin, n, e.what());
	}
}

} // namespace

PresentationBuilder load_builder(const std::string &text, const std::string &origin, const PresentationResolver &resolve,
                                 BracketConvention bracket)
{
	YAML::Node doc;
	try {
		doc = YAML::Load(text);
	} catch (const YAML::Exception &e) {
		throw ParseError(origin + ": " + e.msg, e.mark.line + 1, e.mark.column + 1, {});
	}
	if (!doc.IsMap())
		throw ParseError(origin + ": presentation file must be a mapping", 1, 1, {});

	std::string name = doc["name"] ? doc["name"].as<std::string>() : origin;

	std::optional<PresentationBuilder> built;
	if (auto ext = doc["extends"]) {
		std::string base = scalar_text(origin, ext, "extends");
		PresentationPtr p = resolve ? resolve(base) : nullptr;
		if (!p)
			fail_at(origin, ext, "cannot resolve base presentation '" + base + "'");
		built.emplace(*p, name);
	} else {
		built.emplace(name);
	}
	PresentationBuilder &b = *built;

	if (auto gens = doc["generators"]) {
		if (!gens.IsSequence())
			fail_at(origin, gens, "generators must be a list");
		for (const auto &g : gens) {
			try {
				if (g.IsScalar()) {
					b.add_generator(g.as<std::string>());
				} else if (g.IsMap()) {
					std::vector<std::string> aliases;
					if (g["aliases"])
						aliases = g["aliases"].as<std::vector<std::string>>();
					int deg = g["degree"] ? g["degree"].as<int>() : 0;
					b.add_generator(scalar_text(origin, g["name"], "generator name"), deg, aliases);
				} else {
					fail_at(origin, g, "generator must be a name or a mapping");
				}
			} catch (const AlphabetError &e) {
				fail_at(origin, g, e.what());
			}
		}
	} else if (!doc["extends"]) {
		throw ParseError(origin + ": missing 'generators'", 1, 1, {"generators"});
	}

	if (auto degs = doc["degrees"]) {
		for (auto it = degs.begin(); it != degs.end(); ++it)
			b.set_degree(need_gen(origin, it->first, b), it->second.as<int>());
	}

	EvalContext ctx;
	ctx.alphabet = &b.alphabet();
	ctx.bracket = bracket;

	if (auto inv = doc["inverses"]) {
		for (const auto &pair : inv) {
			if (!pair.IsSequence() || pair.size() != 2)
				fail_at(origin, pair, "inverse entry must be a pair");
			b.add_inverse(need_gen(origin, pair[0], b), need_gen(origin, pair[1], b));
		}
	}

	if (auto star = doc["star"]) {
		for (const auto &pair : star) {
			if (!pair.IsSequence() || pair.size() < 2 || pair.size() > 3)
				fail_at(origin, pair, "star entry must be [generator, image] or [generator, image, factor]");
			int g = need_gen(origin, pair[0], b);
			int h = need_gen(origin, pair[1], b);
			Scalar c(1);
			if (pair.size() == 3)
				c = with_position(origin, pair[2], [&] { return parse_scalar(pair[2].as<std::string>(), ctx); });
			b.set_star(g, h, c);
		}
	}

	if (auto sc = doc["star_closure"])
		b.set_star_closure(sc.as<bool>());

	if (auto rels = doc["relations"]) {
		if (!rels.IsSequence())
			fail_at(origin, rels, "relations must be a list");
		for (const auto &r : rels) {
			std::string src = scalar_text(origin, r, "relation");
			b.add_relation(with_position(origin, r, [&] { return parse_relation(src, ctx); }));
		}
	}

	if (auto th = doc["theta"]) {
		NcPoly theta = with_position(origin, th, [&] { return evaluate(*parse_expr(th.as<std::string>()), ctx); });
		Scalar sigma(1);
		if (auto s = doc["sigma"])
			sigma = with_position(origin, s, [&] { return parse_scalar(s.as<std::string>(), ctx); });
		b.set_theta(theta, sigma);
	}
	return std::move(b);
}

PresentationPtr load_presentation(const std::string &text, const std::string &origin, const PresentationResolver &resolve)
{
	return load_builder(text, origin, resolve).build();
}

PresentationPtr load_presentation_file(const std::string &path, const PresentationResolver &resolve)
{
	std::ifstream in(path);
	if (!in)
		throw std::runtime_error("cannot open " + path);
	std::stringstream ss;
	ss << in.rdbuf();
	return load_presentation(ss.str(), path, resolve);
}

namespace {

std::string quoted(const std::string &s)
{
	std::string out = "\"";
	for (char c : s) {
		if (c == '"' || c == '\\')
			out += '\\';
		out += c;
	}
	return out + "\"";
}

} // namespace

std::string emit_presentation(const Presentation &p)
{
	const Alphabet &a = p.alphabet();
	std::ostringstream os;
	os << "name: " << quoted(p.name()) << "\n";
	os << "generators:\n";
	for (auto &g : a.gens) {
		os << "  - {name: " << quoted(g.name);
		if (!g.aliases.empty()) {
			os << ", aliases: [";
			for (size_t k = 0; k < g.aliases.size(); ++k)
				os << (k ? ", " : "") << quoted(g.aliases[k]);
			os << "]";
		}
		if (g.degree)
			os << ", degree: " << g.degree;
		os << "}\n";
	}
	bool any_star = false;
	for (int g = 0; g < a.size(); ++g) {
		if (!a.star[g])
			continue;
		if (!any_star)
			os << "star:\n";
		any_star = true;
		os << "  - [" << quoted(a.gens[g].name) << ", " << quoted(a.gens[a.star[g]->gen].name);
		if (!a.star[g]->coeff.is_one())
			os << ", " << quoted(a.star[g]->coeff.str());
		os << "]\n";
	}
	bool any_inv = false;
	for (int g = 0; g < a.size(); ++g) {
		if (a.inverse[g] > g) {
			if (!any_inv)
				os << "inverses:\n";
			any_inv = true;
			os << "  - [" << quoted(a.gens[g].name) << ", " << quoted(a.gens[a.inverse[g]].name) << "]\n";
		}
	}
	// rules are already closed under star
	os << "star_closure: false\n";
	os << "relations:\n";
	for (auto &r : p.rules())
		os << "  - " << quoted(p.word_str(r.head) + " = " + p.str(r.rhs)) << "\n";
	if (a.theta) {
		os << "theta: " << quoted(p.str(*a.theta)) << "\n";
		os << "sigma: " << quoted(a.sigma.str()) << "\n";
	}
	return os.str();
}

} // namespace qcalc
