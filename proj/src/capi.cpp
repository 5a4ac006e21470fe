#include "qcalc/qcalc.h"

#include <cstring>
#include <string>
#include <vector>

#include <json.hpp>

#include "qcalc/dga.hpp"
#include "qcalc/expr.hpp"
#include "qcalc/library.hpp"
#include "qcalc/loader.hpp"
#include "qcalc/rmatrix.hpp"
#include "qcalc/suites.hpp"

struct qc_algebra {
	qcalc::PresentationPtr p;
};

struct qc_options {
	qcalc::SuiteOptions opt;
};

struct qc_report {
	std::vector<qcalc::CheckReport> suites;
};

namespace {

thread_local std::string last_error;

qc_status fail(qc_status s, const std::string &msg)
{
	last_error = msg;
	return s;
}

// Runs f, translating engine exceptions into status codes.
template <class F> qc_status wrap(F &&f)
{
	try {
		last_error.clear();
		return f();
	} catch (const qcalc::ParseError &e) {
		return fail(QC_ERR_PARSE, e.what());
	} catch (const qcalc::AlphabetError &e) {
		return fail(QC_ERR_ALPHABET, e.what());
	} catch (const qcalc::UnknownSuite &e) {
		return fail(QC_ERR_UNKNOWN_SUITE, e.what());
	} catch (const qcalc::PoleError &e) {
		return fail(QC_ERR_POLE, e.what());
	} catch (const qcalc::DivisionByZero &e) {
		return fail(QC_ERR_POLE, e.what());
	} catch (const qcalc::BudgetExceeded &e) {
		return fail(QC_ERR_BUDGET, e.what());
	} catch (const qcalc::InconsistentPresentation &e) {
		return fail(QC_ERR_INCONSISTENT, e.what());
	} catch (const std::invalid_argument &e) {
		return fail(QC_ERR_ARGUMENT, e.what());
	} catch (const std::out_of_range &e) {
		return fail(QC_ERR_IO, e.what());
	} catch (const std::exception &e) {
		return fail(QC_ERR_INTERNAL, e.what());
	}
}

char *dup(const std::string &s)
{
	char *out = static_cast<char *>(std::malloc(s.size() + 1));
	if (out)
		std::memcpy(out, s.c_str(), s.size() + 1);
	return out;
}

qc_status give(const std::string &s, char **out)
{
	*out = dup(s);
	return *out ? QC_OK : fail(QC_ERR_INTERNAL, "out of memory");
}

#define QC_REQUIRE(x)                                                                                                  \
	do {                                                                                                               \
		if (!(x))                                                                                                      \
			return fail(QC_ERR_ARGUMENT, "null argument: " #x);                                                       \
	} while (0)

qcalc::SuiteOptions options_or_default(const qc_options *o) { return o ? o->opt : qcalc::SuiteOptions{}; }

} // namespace

extern "C" {

const char *qc_version(void) { return qcalc::engine_version(); }
const char *qc_last_error(void) { return last_error.c_str(); }
void qc_string_free(char *s) { std::free(s); }

const char *qc_status_name(qc_status s)
{
	switch (s) {
	case QC_OK: return "ok";
	case QC_ERR_ARGUMENT: return "invalid argument";
	case QC_ERR_PARSE: return "parse error";
	case QC_ERR_ALPHABET: return "unknown generator";
	case QC_ERR_UNKNOWN_SUITE: return "unknown suite";
	case QC_ERR_POLE: return "pole";
	case QC_ERR_BUDGET: return "step budget exhausted";
	case QC_ERR_INCONSISTENT: return "inconsistent presentation";
	case QC_ERR_IO: return "not found";
	case QC_ERR_INTERNAL: return "internal error";
	}
	return "unknown status";
}

qc_status qc_algebra_load(const char *path_or_name, qc_algebra **out)
{
	QC_REQUIRE(path_or_name);
	QC_REQUIRE(out);
	return wrap([&] {
		*out = new qc_algebra{qcalc::load_algebra(path_or_name)};
		return QC_OK;
	});
}

qc_status qc_algebra_load_text(const char *text, qc_algebra **out)
{
	QC_REQUIRE(text);
	QC_REQUIRE(out);
	return wrap([&] {
		*out = new qc_algebra{
		    qcalc::load_presentation(text, "<text>", [](const std::string &b) { return qcalc::load_algebra(b); })};
		return QC_OK;
	});
}

void qc_algebra_free(qc_algebra *a) { delete a; }

qc_status qc_algebra_name(const qc_algebra *a, char **out)
{
	QC_REQUIRE(a);
	QC_REQUIRE(out);
	return give(a->p->name(), out);
}

qc_status qc_algebra_emit(const qc_algebra *a, char **out)
{
	QC_REQUIRE(a);
	QC_REQUIRE(out);
	return wrap([&] { return give(qcalc::emit_presentation(*a->p), out); });
}

qc_status qc_normalize(const qc_algebra *a, const char *expr, char **out)
{
	QC_REQUIRE(a);
	QC_REQUIRE(expr);
	QC_REQUIRE(out);
	return wrap([&] { return give(a->p->str(qcalc::parse_element(*a->p, expr)), out); });
}

qc_status qc_differential(const qc_algebra *a, const char *expr, char **out)
{
	QC_REQUIRE(a);
	QC_REQUIRE(expr);
	QC_REQUIRE(out);
	return wrap([&] {
		auto &p = *a->p;
		return give(p.str(p.d(qcalc::parse_element(p, expr))), out);
	});
}

qc_status qc_confluence_failures(const qc_algebra *a, int max_degree, size_t *count)
{
	QC_REQUIRE(a);
	QC_REQUIRE(count);
	if (max_degree < 1)
		return fail(QC_ERR_ARGUMENT, "max_degree must be positive");
	return wrap([&] {
		*count = a->p->check_local_confluence(max_degree).size();
		return QC_OK;
	});
}

qc_status qc_builtin_names(char **out)
{
	QC_REQUIRE(out);
	std::string s;
	for (auto &n : qcalc::builtin_names())
		s += n + "\n";
	return give(s, out);
}

qc_status qc_options_new(qc_options **out)
{
	QC_REQUIRE(out);
	*out = new qc_options;
	return QC_OK;
}

void qc_options_free(qc_options *o) { delete o; }

qc_status qc_options_set(qc_options *o, const char *key, const char *value)
{
	QC_REQUIRE(o);
	QC_REQUIRE(key);
	QC_REQUIRE(value);
	return wrap([&] {
		std::string k = key, v = value;
		auto &opt = o->opt;
		if (k == "q-at") {
			mpq_class q;
			if (q.set_str(v, 10) != 0)
				return fail(QC_ERR_ARGUMENT, "q-at expects a rational such as 4 or 9/4, got '" + v + "'");
			q.canonicalize();
			(void)qcalc::sqrt_rational(q);
			opt.q_at = q;
		} else if (k == "t") {
			opt.t = qcalc::parse_scalar(v);
		} else if (k == "max-degree") {
			int d = std::stoi(v);
			if (d < 1)
				return fail(QC_ERR_ARGUMENT, "max-degree must be positive");
			opt.max_degree = d;
		} else if (k == "seed") {
			opt.seed = static_cast<unsigned>(std::stoul(v));
		} else if (k == "rmatrix") {
			(void)qcalc::load_rmatrix_any(v);
			opt.rmatrix = v;
		} else if (k == "normalization") {
			if (v == "hecke")
				opt.normalization = qcalc::Normalization::Hecke;
			else if (v == "quantum-group")
				opt.normalization = qcalc::Normalization::QuantumGroup;
			else
				return fail(QC_ERR_ARGUMENT, "normalization is hecke or quantum-group, got '" + v + "'");
		} else if (k == "bracket") {
			if (v != "standard" && v != "inverted")
				return fail(QC_ERR_ARGUMENT, "bracket is standard or inverted, got '" + v + "'");
			opt.inverted_bracket = v == "inverted";
		} else if (k == "table") {
			opt.table = v == "1" || v == "true";
		} else {
			return fail(QC_ERR_ARGUMENT, "unknown option '" + k + "'");
		}
		return QC_OK;
	});
}

size_t qc_suite_count(void) { return qcalc::suite_list().size(); }

const char *qc_suite_name(size_t i)
{
	auto &l = qcalc::suite_list();
	return i < l.size() ? l[i].name.c_str() : nullptr;
}

const char *qc_suite_description(size_t i)
{
	auto &l = qcalc::suite_list();
	return i < l.size() ? l[i].description.c_str() : nullptr;
}

qc_status qc_run(const char *pattern, const qc_options *o, qc_report **out)
{
	QC_REQUIRE(pattern);
	QC_REQUIRE(out);
	return wrap([&] {
		auto names = qcalc::expand_suites(pattern);
		*out = new qc_report{qcalc::run_suites(names, options_or_default(o))};
		return QC_OK;
	});
}

qc_status qc_report_from_json(const char *json, qc_report **out)
{
	QC_REQUIRE(json);
	QC_REQUIRE(out);
	return wrap([&] {
		nlohmann::json j;
		try {
			j = nlohmann::json::parse(json);
		} catch (const nlohmann::json::exception &e) {
			return fail(QC_ERR_PARSE, std::string("report is not valid JSON: ") + e.what());
		}
		auto r = std::make_unique<qc_report>();
		try {
			if (j.contains("suites")) {
				for (auto &s : j.at("suites"))
					r->suites.push_back(qcalc::CheckReport::from_json(s.dump()));
			} else {
				r->suites.push_back(qcalc::CheckReport::from_json(j.dump()));
			}
		} catch (const nlohmann::json::exception &e) {
			return fail(QC_ERR_PARSE, std::string("malformed report: ") + e.what());
		}
		*out = r.release();
		return QC_OK;
	});
}

void qc_report_free(qc_report *r) { delete r; }

int qc_report_ok(const qc_report *r)
{
	if (!r)
		return 0;
	for (auto &s : r->suites)
		if (!s.ok())
			return 0;
	return 1;
}

size_t qc_report_suite_count(const qc_report *r) { return r ? r->suites.size() : 0; }

size_t qc_report_count(const qc_report *r, const char *status)
{
	if (!r || !status)
		return 0;
	size_t n = 0;
	for (auto &s : r->suites)
		for (auto &c : s.claims())
			n += qcalc::status_name(c.status) == status;
	return n;
}

qc_status qc_report_json(const qc_report *r, char **out)
{
	QC_REQUIRE(r);
	QC_REQUIRE(out);
	return wrap([&] {
		nlohmann::ordered_json j;
		j["engine_version"] = qcalc::engine_version();
		j["ok"] = qc_report_ok(r) == 1;
		auto &arr = j["suites"] = nlohmann::ordered_json::array();
		for (auto &s : r->suites)
			arr.push_back(nlohmann::ordered_json::parse(s.to_json()));
		return give(j.dump(2) + "\n", out);
	});
}

qc_status qc_report_text(const qc_report *r, char **out)
{
	QC_REQUIRE(r);
	QC_REQUIRE(out);
	return wrap([&] {
		std::string s;
		int pass = 0, failed = 0, skipped = 0;
		for (auto &rep : r->suites) {
			s += rep.to_text();
			pass += rep.count(qcalc::ClaimStatus::Pass);
			failed += rep.count(qcalc::ClaimStatus::Fail);
			skipped += rep.count(qcalc::ClaimStatus::Skipped);
		}
		if (r->suites.size() > 1)
			s += "total: " + std::to_string(r->suites.size()) + " suites, " + std::to_string(pass) + " pass, " +
			     std::to_string(failed) + " fail, " + std::to_string(skipped) + " skipped\n";
		return give(s, out);
	});
}

const char *qc_report_claim_status(const qc_report *r, const char *claim_id)
{
	if (!r || !claim_id)
		return nullptr;
	for (auto &s : r->suites)
		for (auto &c : s.claims())
			if (c.id == claim_id) {
				switch (c.status) {
				case qcalc::ClaimStatus::Pass: return "pass";
				case qcalc::ClaimStatus::Fail: return "fail";
				case qcalc::ClaimStatus::Skipped: return "skipped";
				}
			}
	return nullptr;
}

qc_status qc_derive(const char *construction, const qc_options *o, char **out)
{
	QC_REQUIRE(construction);
	QC_REQUIRE(out);
	return wrap([&] {
		auto opt = options_or_default(o);
		std::string c = construction;
		qcalc::RMatrix r = qcalc::load_rmatrix_any(opt.rmatrix);
		qcalc::PresentationPtr p;
		if (c == "qfuzzy")
			p = qcalc::braided_sphere_relations(qcalc::RMatrix::standard(), qcalc::Scalar::lambda()).presentation;
		else if (c == "braided-sphere")
			p = qcalc::braided_sphere_relations(r, qcalc::Scalar::lambda()).presentation;
		else if (c == "eq9")
			p = qcalc::omega_eq9(r.to_quantum_group());
		else if (c == "frt")
			p = qcalc::frt_relations(r, false);
		else if (c == "reflection")
			p = qcalc::reflection_relations(r);
		else
			return fail(QC_ERR_ARGUMENT,
			            "unknown construction '" + c + "' (qfuzzy, braided-sphere, eq9, frt, reflection)");
		return give(qcalc::emit_presentation(*p), out);
	});
}

} // extern "C"
