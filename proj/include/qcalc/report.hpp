#pragma once

// Pass/fail records produced by the verification suites.

#include <optional>
#include <string>
#include <vector>

#include "qcalc/freealg.hpp"

namespace qcalc {

enum class ClaimStatus { Pass, Fail, Skipped };

std::string status_name(ClaimStatus s);

struct Claim {
	std::string id;
	std::string anchor;   // what the claim is about, in words
	ClaimStatus status = ClaimStatus::Pass;
	std::string residual; // first nonzero residuals when failing
	std::string note;     // recorded values, skip reasons
};

class CheckReport {
public:
	explicit CheckReport(std::string suite = "") : suite_(std::move(suite)) {}

	const std::string &suite() const { return suite_; }
	const std::vector<Claim> &claims() const { return claims_; }
	double elapsed_ms() const { return elapsed_ms_; }
	void set_elapsed_ms(double ms) { elapsed_ms_ = ms; }

	void pass(const std::string &id, const std::string &anchor, const std::string &note = "");
	void fail(const std::string &id, const std::string &anchor, const std::string &residual);
	void skip(const std::string &id, const std::string &anchor, const std::string &reason);
	/// Pass or fail on a boolean; `residual` is only kept on failure.
	void expect(const std::string &id, const std::string &anchor, bool ok, const std::string &residual = "");
	/// Pass when every residual is zero; the first few are printed in p otherwise.
	void expect_zero(const std::string &id, const std::string &anchor, const Presentation &p,
	                 const std::vector<Residual> &r);
	/// Pass when x is zero.
	void expect_zero(const std::string &id, const std::string &anchor, const Presentation &p, const NcPoly &x);
	/// Runs f; an exception becomes a failing claim.
	template <class F> void guard(const std::string &id, const std::string &anchor, F &&f)
	{
		try {
			f();
		} catch (const std::exception &e) {
			fail(id, anchor, std::string("exception: ") + e.what());
		}
	}
	void append(const CheckReport &other);

	bool ok() const;
	int count(ClaimStatus s) const;

	std::string to_json(int indent = 2) const;
	static CheckReport from_json(const std::string &text);
	std::string to_text() const;

private:
	std::string suite_;
	std::vector<Claim> claims_;
	double elapsed_ms_ = 0;
};

/// Library version string.
const char *engine_version();

} // namespace qcalc
