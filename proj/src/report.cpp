#include "qcalc/report.hpp"

#include <json.hpp>

#include <sstream>

namespace qcalc {

const char *engine_version() { return "0.1.0"; }

std::string status_name(ClaimStatus s)
{
	switch (s) {
	case ClaimStatus::Pass: return "pass";
	case ClaimStatus::Fail: return "fail";
	default: return "skipped";
	}
}

namespace {

ClaimStatus status_from(const std::string &s)
{
	if (s == "pass")
		return ClaimStatus::Pass;
	if (s == "fail")
		return ClaimStatus::Fail;
	if (s == "skipped")
		return ClaimStatus::Skipped;
	throw std::invalid_argument("unknown claim status '" + s + "'");
}

} // namespace

void CheckReport::pass(const std::string &id, const std::string &anchor, const std::string &note)
{
	claims_.push_back({id, anchor, ClaimStatus::Pass, "", note});
}

void CheckReport::fail(const std::string &id, const std::string &anchor, const std::string &residual)
{
	claims_.push_back({id, anchor, ClaimStatus::Fail, residual.empty() ? "(no residual recorded)" : residual, ""});
}

void CheckReport::skip(const std::string &id, const std::string &anchor, const std::string &reason)
{
	claims_.push_back({id, anchor, ClaimStatus::Skipped, "", reason});
}

void CheckReport::expect(const std::string &id, const std::string &anchor, bool ok, const std::string &residual)
{
	if (ok)
		pass(id, anchor);
	else
		fail(id, anchor, residual);
}

void CheckReport::expect_zero(const std::string &id, const std::string &anchor, const Presentation &p,
                              const std::vector<Residual> &r)
{
	std::string out;
	int shown = 0, nonzero = 0;
	for (auto &x : r) {
		if (x.value.is_zero())
			continue;
		++nonzero;
		if (shown < 3) {
			out += (shown ? "; " : "") + x.label + " -> " + p.str(x.value);
			++shown;
		}
	}
	if (nonzero > shown)
		out += "; ... (" + std::to_string(nonzero) + " nonzero)";
	expect(id, anchor, nonzero == 0, out);
}

void CheckReport::expect_zero(const std::string &id, const std::string &anchor, const Presentation &p, const NcPoly &x)
{
	expect(id, anchor, x.is_zero(), x.is_zero() ? "" : p.str(x));
}

void CheckReport::append(const CheckReport &other)
{
	claims_.insert(claims_.end(), other.claims_.begin(), other.claims_.end());
	elapsed_ms_ += other.elapsed_ms_;
}

bool CheckReport::ok() const { return count(ClaimStatus::Fail) == 0; }

int CheckReport::count(ClaimStatus s) const
{
	int n = 0;
	for (auto &c : claims_)
		n += c.status == s;
	return n;
}

std::string CheckReport::to_json(int indent) const
{
	nlohmann::ordered_json j;
	j["suite"] = suite_;
	j["engine_version"] = engine_version();
	j["elapsed_ms"] = elapsed_ms_;
	j["status"] = ok() ? "pass" : "fail";
	auto &cs = j["claims"] = nlohmann::ordered_json::array();
	for (auto &c : claims_) {
		nlohmann::ordered_json o;
		o["id"] = c.id;
		o["anchor"] = c.anchor;
		o["status"] = status_name(c.status);
		if (!c.residual.empty())
			o["residual"] = c.residual;
		if (!c.note.empty())
			o["note"] = c.note;
		cs.push_back(o);
	}
	return j.dump(indent);
}

CheckReport CheckReport::from_json(const std::string &text)
{
	auto j = nlohmann::json::parse(text);
	CheckReport r(j.at("suite").get<std::string>());
	r.elapsed_ms_ = j.value("elapsed_ms", 0.0);
	for (auto &o : j.at("claims"))
		r.claims_.push_back({o.at("id").get<std::string>(), o.value("anchor", ""),
		                     status_from(o.at("status").get<std::string>()), o.value("residual", ""),
		                     o.value("note", "")});
	return r;
}

std::string CheckReport::to_text() const
{
	std::ostringstream os;
	os << "suite " << suite_ << ": " << (ok() ? "PASS" : "FAIL") << " (" << count(ClaimStatus::Pass) << " pass, "
	   << count(ClaimStatus::Fail) << " fail, " << count(ClaimStatus::Skipped) << " skipped)\n";
	for (auto &c : claims_) {
		os << "  [" << status_name(c.status) << "] " << c.id;
		if (!c.anchor.empty())
			os << " -- " << c.anchor;
		os << "\n";
		if (!c.residual.empty())
			os << "      residual: " << c.residual << "\n";
		if (!c.note.empty())
			os << "      note: " << c.note << "\n";
	}
	return os.str();
}

} // namespace qcalc
