#pragma once

// Named verification suites and the options they accept.

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "qcalc/report.hpp"
#include "qcalc/rmatrix.hpp"
#include "qcalc/scalar.hpp"

namespace qcalc {

struct SuiteOptions {
	std::optional<mpq_class> q_at; // rerun with q fixed; must be the square of a rational
	std::optional<Scalar> t;       // slice / Casimir parameter for the sphere suites
	int max_degree = 5;            // confluence bound
	unsigned seed = 1;
	std::string rmatrix = "standard"; // shipped name or file path
	std::optional<Normalization> normalization; // override for the calculus cross-check
	bool inverted_bracket = false;              // read [x, y]_p as x y - p^-1 y x
	bool table = false;                         // laplacian eigenvalue table
};

class UnknownSuite : public std::invalid_argument {
public:
	using std::invalid_argument::invalid_argument;
};

struct SuiteInfo {
	std::string name;
	std::string description;
	bool symbolic_q = false; // a q-limit is part of the claim; --q-at is not applied
};

const std::vector<SuiteInfo> &suite_list();

/// "all", an exact name, or a prefix ending in ':' ("spheres:"); throws UnknownSuite.
std::vector<std::string> expand_suites(const std::string &pattern);

/// q^(1/2) as a positive rational; throws std::invalid_argument unless q is a positive rational square.
mpq_class sqrt_rational(const mpq_class &q);

CheckReport run_suite(const std::string &name, const SuiteOptions &opt = {});
/// Runs concurrently (jobs <= 0: hardware concurrency); results sorted by suite name.
std::vector<CheckReport> run_suites(const std::vector<std::string> &names, const SuiteOptions &opt = {}, int jobs = 0);

/// R12 R13 R23 = R23 R13 R12, real type and the second inverse, for one R-matrix.
CheckReport rmatrix_suite(const RMatrix &r);

} // namespace qcalc
