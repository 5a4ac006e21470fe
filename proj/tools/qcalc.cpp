// qcalc command line: check, normalize, derive, report.
// Exit codes: 0 all claims pass, 1 some claim fails, 2 usage, parse or engine error.

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>

#include "qcalc/qcalc.h"

namespace {

constexpr int kPass = 0, kFail = 1, kError = 2;

struct Owned {
	char *s = nullptr;
	~Owned() { qc_string_free(s); }
	std::string str() const { return s ? s : ""; }
};

using Report = std::unique_ptr<qc_report, decltype(&qc_report_free)>;
using Options = std::unique_ptr<qc_options, decltype(&qc_options_free)>;
using Algebra = std::unique_ptr<qc_algebra, decltype(&qc_algebra_free)>;

int engine_error(qc_status s)
{
	std::cerr << "qcalc: " << qc_status_name(s) << ": " << qc_last_error() << "\n";
	return kError;
}

struct SuiteFlags {
	std::string q_at, t, rmatrix, normalization, bracket;
	std::optional<int> max_degree;
	std::optional<unsigned> seed;
	bool table = false;

	void attach(CLI::App *cmd)
	{
		cmd->add_option("--q-at", q_at, "rerun with q fixed to a rational square, e.g. 4 or 9/4");
		cmd->add_option("--t", t, "value of the slice parameter t");
		cmd->add_option("--max-degree", max_degree, "confluence degree bound")->check(CLI::PositiveNumber);
		cmd->add_option("--seed", seed, "seed for sampled checks");
		cmd->add_option("--rmatrix", rmatrix, "R-matrix file or shipped name (standard, twoparam)");
		cmd->add_option("--normalization", normalization, "R normalization for the bimodule cross-check")
		    ->check(CLI::IsMember({"hecke", "quantum-group"}));
		cmd->add_option("--bracket", bracket, "reading of [x, y]_p")->check(CLI::IsMember({"standard", "inverted"}));
		cmd->add_flag("--table", table, "emit the Laplacian eigenvalue table");
	}

	// nullopt on success, else an exit code
	std::optional<int> apply(qc_options *o) const
	{
		auto set = [&](const char *key, const std::string &v) -> bool {
			if (v.empty())
				return true;
			qc_status s = qc_options_set(o, key, v.c_str());
			if (s != QC_OK) {
				engine_error(s);
				return false;
			}
			return true;
		};
		bool ok = set("q-at", q_at) && set("t", t) && set("rmatrix", rmatrix) &&
		          set("normalization", normalization) && set("bracket", bracket) &&
		          set("max-degree", max_degree ? std::to_string(*max_degree) : "") &&
		          set("seed", seed ? std::to_string(*seed) : "") && set("table", table ? "1" : "");
		return ok ? std::nullopt : std::optional<int>(kError);
	}
};

int write_report(const qc_report *r, const std::string &format, const std::string &output)
{
	Owned text;
	qc_status s = format == "json" ? qc_report_json(r, &text.s) : qc_report_text(r, &text.s);
	if (s != QC_OK)
		return engine_error(s);
	if (output.empty() || output == "-") {
		std::cout << text.str();
	} else {
		std::ofstream f(output);
		if (!f) {
			std::cerr << "qcalc: cannot write " << output << "\n";
			return kError;
		}
		f << text.str();
	}
	return qc_report_ok(r) ? kPass : kFail;
}

int list_suites()
{
	for (size_t i = 0; i < qc_suite_count(); ++i)
		std::printf("%-22s %s\n", qc_suite_name(i), qc_suite_description(i));
	return kPass;
}

} // namespace

int main(int argc, char **argv)
{
	CLI::App app{"qcalc: exact checks for quantum spheres, their calculi and the bicrossproduct model"};
	app.set_version_flag("--version", std::string(qc_version()));
	app.require_subcommand(1);

	// check
	auto *check = app.add_subcommand("check", "run a suite, a prefix such as spheres:, or all");
	std::string suite, format = "text", output;
	bool list = false;
	SuiteFlags flags;
	check->add_option("suite", suite, "suite name, prefix ending in ':' or all");
	check->add_flag("--list", list, "list the registered suites");
	check->add_option("--format", format, "report format")->check(CLI::IsMember({"text", "json"}));
	check->add_option("-o,--output", output, "write the report to a file");
	flags.attach(check);

	// normalize
	auto *normalize = app.add_subcommand("normalize", "print the normal form of an expression");
	std::string algebra, expr;
	bool differential = false;
	normalize->add_option("--algebra", algebra, "presentation file or shipped name")->required();
	normalize->add_option("--expr", expr, "expression")->required();
	normalize->add_flag("--d", differential, "apply the differential first");

	// derive
	auto *derive = app.add_subcommand("derive", "emit a presentation generated from an R-matrix");
	std::string construction;
	SuiteFlags derive_flags;
	derive->add_option("--construction", construction, "construction")
	    ->required()
	    ->check(CLI::IsMember({"qfuzzy", "braided-sphere", "eq9", "frt", "reflection"}));
	derive->add_option("--rmatrix", derive_flags.rmatrix, "R-matrix file or shipped name");

	// report
	auto *report = app.add_subcommand("report", "render a saved JSON report");
	std::string input = "-", report_format = "text";
	report->add_option("--input", input, "JSON report file, - for stdin");
	report->add_option("--format", report_format, "output format")->check(CLI::IsMember({"text", "json"}));

	try {
		app.parse(argc, argv);
	} catch (const CLI::CallForHelp &e) {
		return app.exit(e);
	} catch (const CLI::CallForAllHelp &e) {
		return app.exit(e);
	} catch (const CLI::CallForVersion &e) {
		return app.exit(e);
	} catch (const CLI::ParseError &e) {
		app.exit(e);
		return kError;
	}

	if (check->parsed()) {
		if (list)
			return list_suites();
		if (suite.empty()) {
			std::cerr << "qcalc: check needs a suite name (see check --list)\n";
			return kError;
		}
		qc_options *raw = nullptr;
		qc_options_new(&raw);
		Options opt(raw, qc_options_free);
		if (auto code = flags.apply(opt.get()))
			return *code;
		qc_report *rep = nullptr;
		qc_status s = qc_run(suite.c_str(), opt.get(), &rep);
		if (s != QC_OK)
			return engine_error(s);
		Report owned(rep, qc_report_free);
		return write_report(owned.get(), format, output);
	}

	if (normalize->parsed()) {
		qc_algebra *raw = nullptr;
		qc_status s = qc_algebra_load(algebra.c_str(), &raw);
		if (s != QC_OK)
			return engine_error(s);
		Algebra a(raw, qc_algebra_free);
		Owned out;
		s = differential ? qc_differential(a.get(), expr.c_str(), &out.s) : qc_normalize(a.get(), expr.c_str(), &out.s);
		if (s != QC_OK)
			return engine_error(s);
		std::cout << out.str() << "\n";
		return kPass;
	}

	if (derive->parsed()) {
		qc_options *raw = nullptr;
		qc_options_new(&raw);
		Options opt(raw, qc_options_free);
		if (auto code = derive_flags.apply(opt.get()))
			return *code;
		Owned out;
		qc_status s = qc_derive(construction.c_str(), opt.get(), &out.s);
		if (s != QC_OK)
			return engine_error(s);
		std::cout << out.str();
		return kPass;
	}

	if (report->parsed()) {
		std::stringstream buf;
		if (input == "-") {
			buf << std::cin.rdbuf();
		} else {
			std::ifstream f(input);
			if (!f) {
				std::cerr << "qcalc: cannot read " << input << "\n";
				return kError;
			}
			buf << f.rdbuf();
		}
		qc_report *rep = nullptr;
		qc_status s = qc_report_from_json(buf.str().c_str(), &rep);
		if (s != QC_OK)
			return engine_error(s);
		Report owned(rep, qc_report_free);
		return write_report(owned.get(), report_format, "");
	}
	return kError;
}
