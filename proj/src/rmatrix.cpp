#include "qcalc/rmatrix.hpp"

#include <yaml-cpp/yaml.h>

#include <filesystem>
#include <fstream>
#include <map>
#include <regex>
#include <sstream>

#include "qcalc/expr.hpp"

namespace qcalc {

namespace detail {
const std::map<std::string, std::string> &embedded_files();
}

// ---------------------------------------------------------------------------
// ScalarMatrix

ScalarMatrix ScalarMatrix::identity(int n)
{
	ScalarMatrix m(n);
	for (int i = 0; i < n; ++i)
		m(i, i) = Scalar(1);
	return m;
}

ScalarMatrix operator*(const ScalarMatrix &a, const ScalarMatrix &b)
{
	int n = a.size();
	ScalarMatrix c(n);
	for (int i = 0; i < n; ++i)
		for (int k = 0; k < n; ++k) {
			if (a(i, k).is_zero())
				continue;
			for (int j = 0; j < n; ++j)
				if (!b(k, j).is_zero())
					c(i, j) += a(i, k) * b(k, j);
		}
	return c;
}

ScalarMatrix operator-(const ScalarMatrix &a, const ScalarMatrix &b)
{
	ScalarMatrix c(a.size());
	for (int i = 0; i < a.size(); ++i)
		for (int j = 0; j < a.size(); ++j)
			c(i, j) = a(i, j) - b(i, j);
	return c;
}

ScalarMatrix ScalarMatrix::inverse() const
{
	int n = n_;
	ScalarMatrix a = *this, inv = identity(n);
	for (int col = 0; col < n; ++col) {
		int piv = -1;
		for (int r = col; r < n; ++r)
			if (!a(r, col).is_zero()) {
				piv = r;
				break;
			}
		if (piv < 0)
			throw DivisionByZero("singular matrix");
		if (piv != col)
			for (int j = 0; j < n; ++j) {
				std::swap(a(piv, j), a(col, j));
				std::swap(inv(piv, j), inv(col, j));
			}
		Scalar s = a(col, col).inverse();
		for (int j = 0; j < n; ++j) {
			a(col, j) *= s;
			inv(col, j) *= s;
		}
		for (int r = 0; r < n; ++r) {
			if (r == col || a(r, col).is_zero())
				continue;
			Scalar f = a(r, col);
			for (int j = 0; j < n; ++j) {
				a(r, j) -= f * a(col, j);
				inv(r, j) -= f * inv(col, j);
			}
		}
	}
	return inv;
}

bool ScalarMatrix::is_zero() const
{
	for (auto &x : e_)
		if (!x.is_zero())
			return false;
	return true;
}

bool ScalarMatrix::is_diagonal() const
{
	for (int i = 0; i < n_; ++i)
		for (int j = 0; j < n_; ++j)
			if (i != j && !(*this)(i, j).is_zero())
				return false;
	return true;
}

// ---------------------------------------------------------------------------
// RMatrix

RMatrix::RMatrix(int n, Normalization norm, std::string name) : n_(n), norm_(norm), name_(std::move(name)), m_(n * n) {}

RMatrix RMatrix::identity(int n)
{
	RMatrix r(n, Normalization::Other, "identity");
	r.m_ = ScalarMatrix::identity(n * n);
	return r;
}

RMatrix RMatrix::standard(Normalization norm)
{
	RMatrix r(2, Normalization::Hecke, "standard");
	Scalar q = Scalar::q();
	r.at(0, 0, 0, 0) = q;
	r.at(1, 1, 1, 1) = q;
	r.at(0, 0, 1, 1) = Scalar(1);
	r.at(1, 1, 0, 0) = Scalar(1);
	r.at(0, 1, 1, 0) = q - q.inverse();
	if (norm == Normalization::QuantumGroup)
		return r.to_quantum_group();
	return r;
}

RMatrix RMatrix::two_parameter(const Scalar &p)
{
	RMatrix r = standard(Normalization::Hecke);
	r.at(0, 0, 1, 1) = p;
	r.at(1, 1, 0, 0) = p.inverse();
	r.set_name("twoparam");
	return r;
}

RMatrix RMatrix::diagonal(const Scalar &p)
{
	RMatrix r(2, Normalization::Other, "diagonal");
	r.at(0, 0, 0, 0) = p;
	r.at(1, 1, 1, 1) = p;
	r.at(0, 0, 1, 1) = Scalar(1);
	r.at(1, 1, 0, 0) = Scalar(1);
	return r;
}

RMatrix RMatrix::scaled(const Scalar &c, Normalization tag) const
{
	RMatrix r = *this;
	r.norm_ = tag;
	for (int i = 0; i < m_.size(); ++i)
		for (int j = 0; j < m_.size(); ++j)
			r.m_(i, j) = c * m_(i, j);
	return r;
}

RMatrix RMatrix::to_quantum_group() const
{
	if (norm_ != Normalization::Hecke)
		return *this;
	return scaled(Scalar::qh().inverse(), Normalization::QuantumGroup);
}

RMatrix RMatrix::inverse() const
{
	RMatrix r = *this;
	r.m_ = m_.inverse();
	return r;
}

RMatrix RMatrix::flipped() const
{
	RMatrix r = *this;
	for (int i = 0; i < n_; ++i)
		for (int j = 0; j < n_; ++j)
			for (int k = 0; k < n_; ++k)
				for (int l = 0; l < n_; ++l)
					r.at(i, j, k, l) = at(k, l, i, j);
	return r;
}

RMatrix RMatrix::map_scalars(const std::function<Scalar(const Scalar &)> &f) const
{
	RMatrix r = *this;
	for (int i = 0; i < m_.size(); ++i)
		for (int j = 0; j < m_.size(); ++j)
			r.m_(i, j) = f(m_(i, j));
	return r;
}

std::string normalization_name(Normalization n)
{
	switch (n) {
	case Normalization::Hecke: return "hecke";
	case Normalization::QuantumGroup: return "quantum-group";
	default: return "other";
	}
}

// ---------------------------------------------------------------------------
// file format

RMatrix load_rmatrix(const std::string &text, const std::string &origin)
{
	YAML::Node doc;
	try {
		doc = YAML::Load(text);
	} catch (const YAML::Exception &e) {
		throw ParseError(origin + ": " + e.msg, e.mark.line + 1, e.mark.column + 1, {});
	}
	if (!doc.IsMap() || !doc["n"])
		throw ParseError(origin + ": R-matrix file needs 'n'", 1, 1, {"n"});
	int n = doc["n"].as<int>();
	if (n < 1 || n > 4)
		throw ParseError(origin + ": unsupported dimension", doc["n"].Mark().line + 1, 1, {});
	Normalization norm = Normalization::Other;
	if (auto nn = doc["normalization"]) {
		std::string s = nn.as<std::string>();
		if (s == "hecke")
			norm = Normalization::Hecke;
		else if (s == "quantum-group" || s == "quantum_group")
			norm = Normalization::QuantumGroup;
		else if (s != "other")
			throw ParseError(origin + ": unknown normalization '" + s + "'", nn.Mark().line + 1, 1,
			                 {"hecke", "quantum-group", "other"});
	}
	RMatrix r(n, norm, doc["name"] ? doc["name"].as<std::string>() : origin);
	static const std::regex entry(R"(^\s*R\s*\[\s*(\d+)\s*,\s*(\d+)\s*,\s*(\d+)\s*,\s*(\d+)\s*\]\s*=\s*(.+)$)");
	for (const auto &e : doc["entries"]) {
		std::string s = e.as<std::string>();
		std::smatch m;
		int line = e.Mark().line + 1;
		if (!std::regex_match(s, m, entry))
			throw ParseError(origin + ": expected 'R[i,j,k,l] = expr', got '" + s + "'", line, 1, {"R[i,j,k,l]"});
		int idx[4];
		for (int k = 0; k < 4; ++k) {
			idx[k] = std::stoi(m[k + 1]) - 1;
			if (idx[k] < 0 || idx[k] >= n)
				throw ParseError(origin + ": index out of range in '" + s + "'", line, 1, {});
		}
		try {
			r.at(idx[0], idx[1], idx[2], idx[3]) = parse_scalar(m[5].str());
		} catch (const ParseError &pe) {
			throw ParseError(origin + ": in '" + s + "': " + pe.what(), line, pe.column(), pe.expected());
		}
	}
	return r;
}

RMatrix load_rmatrix_file(const std::string &path)
{
	std::ifstream in(path);
	if (!in)
		throw std::runtime_error("cannot open " + path);
	std::stringstream ss;
	ss << in.rdbuf();
	return load_rmatrix(ss.str(), path);
}

RMatrix load_rmatrix_any(const std::string &path_or_name)
{
	if (std::filesystem::exists(path_or_name))
		return load_rmatrix_file(path_or_name);
	auto &files = detail::embedded_files();
	std::string key = path_or_name.ends_with(".rmat") ? path_or_name : path_or_name + ".rmat";
	auto it = files.find(key);
	if (it == files.end())
		throw std::runtime_error("no R-matrix file or shipped R-matrix named " + path_or_name);
	return load_rmatrix(it->second, key);
}

// ---------------------------------------------------------------------------
// checks

namespace {

std::string idx_label(std::initializer_list<int> idx)
{
	std::string s = "[";
	bool first = true;
	for (int i : idx) {
		s += (first ? "" : ",") + std::to_string(i + 1);
		first = false;
	}
	return s + "]";
}

// R acting on factors (a, b) of V^{(x)3}, as an n^3 x n^3 matrix.
ScalarMatrix embed(const RMatrix &r, int a, int b)
{
	int n = r.n(), N = n * n * n;
	ScalarMatrix m(N);
	for (int row = 0; row < N; ++row) {
		int ri[3] = {row / (n * n), (row / n) % n, row % n};
		for (int col = 0; col < N; ++col) {
			int ci[3] = {col / (n * n), (col / n) % n, col % n};
			int other = 3 - a - b;
			if (ri[other] != ci[other])
				continue;
			m(row, col) = r.at(ri[a], ci[a], ri[b], ci[b]);
		}
	}
	return m;
}

} // namespace

std::vector<EntryResidual> ybe_residual(const RMatrix &r)
{
	ScalarMatrix r12 = embed(r, 0, 1), r13 = embed(r, 0, 2), r23 = embed(r, 1, 2);
	ScalarMatrix d = r12 * r13 * r23 - r23 * r13 * r12;
	std::vector<EntryResidual> out;
	int n = r.n();
	for (int i = 0; i < d.size(); ++i)
		for (int j = 0; j < d.size(); ++j)
			if (!d(i, j).is_zero())
				out.push_back({"YBE" + idx_label({i / (n * n), (i / n) % n, i % n, j / (n * n), (j / n) % n, j % n}),
				               d(i, j)});
	return out;
}

bool ybe_check(const RMatrix &r) { return ybe_residual(r).empty(); }

std::vector<EntryResidual> real_type_residual(const RMatrix &r)
{
	std::vector<EntryResidual> out;
	int n = r.n();
	for (int i = 0; i < n; ++i)
		for (int j = 0; j < n; ++j)
			for (int k = 0; k < n; ++k)
				for (int l = 0; l < n; ++l) {
					Scalar d = r.at(i, j, k, l).conj() - r.at(l, k, j, i);
					if (!d.is_zero())
						out.push_back({"real" + idx_label({i, j, k, l}), d});
				}
	return out;
}

bool real_type_check(const RMatrix &r) { return real_type_residual(r).empty(); }

namespace {

RMatrix transpose2(const RMatrix &r)
{
	RMatrix t = r;
	int n = r.n();
	for (int i = 0; i < n; ++i)
		for (int j = 0; j < n; ++j)
			for (int k = 0; k < n; ++k)
				for (int l = 0; l < n; ++l)
					t.at(i, j, k, l) = r.at(i, j, l, k);
	return t;
}

} // namespace

RMatrix second_inverse(const RMatrix &r) { return transpose2(transpose2(r).inverse()); }

std::vector<EntryResidual> second_inverse_residual(const RMatrix &r, const RMatrix &rt)
{
	std::vector<EntryResidual> out;
	int n = r.n();
	// sum_{a,b} R^i_a^b_l Rt^a_j^k_b = delta^i_j delta^k_l and the mirrored contraction,
	// plus two-sided invertibility of R itself
	for (int i = 0; i < n; ++i)
		for (int j = 0; j < n; ++j)
			for (int k = 0; k < n; ++k)
				for (int l = 0; l < n; ++l) {
					Scalar s1, s2;
					for (int a = 0; a < n; ++a)
						for (int b = 0; b < n; ++b) {
							s1 += r.at(i, a, b, l) * rt.at(a, j, k, b);
							s2 += rt.at(i, a, b, l) * r.at(a, j, k, b);
						}
					Scalar delta = (i == j && k == l) ? Scalar(1) : Scalar(0);
					if (s1 != delta)
						out.push_back({"R.Rt" + idx_label({i, j, k, l}), s1 - delta});
					if (s2 != delta)
						out.push_back({"Rt.R" + idx_label({i, j, k, l}), s2 - delta});
				}
	ScalarMatrix inv = r.matrix().inverse();
	ScalarMatrix one = ScalarMatrix::identity(n * n);
	if (!(r.matrix() * inv == one))
		out.push_back({"R.R^-1", Scalar(1)});
	if (!(inv * r.matrix() == one))
		out.push_back({"R^-1.R", Scalar(1)});
	return out;
}

ScalarMatrix u_matrix(const RMatrix &r, UContraction c)
{
	RMatrix rt = second_inverse(r);
	int n = r.n();
	ScalarMatrix u(n);
	for (int i = 0; i < n; ++i)
		for (int j = 0; j < n; ++j)
			for (int a = 0; a < n; ++a)
				u(i, j) += c == UContraction::Braiding ? rt.at(i, a, a, j) : rt.at(a, j, i, a);
	return u;
}

RMatrix r21_r(const RMatrix &r)
{
	RMatrix out = r;
	ScalarMatrix m = r.flipped().matrix() * r.matrix();
	int n = r.n();
	for (int i = 0; i < n; ++i)
		for (int j = 0; j < n; ++j)
			for (int k = 0; k < n; ++k)
				for (int l = 0; l < n; ++l)
					out.at(i, j, k, l) = m(i * n + k, j * n + l);
	return out;
}

// ---------------------------------------------------------------------------
// relation generators

std::vector<std::string> frt_names(int n)
{
	if (n == 2)
		return {"a", "b", "c", "d"};
	std::vector<std::string> out;
	for (int i = 0; i < n; ++i)
		for (int j = 0; j < n; ++j)
			out.push_back("t" + std::to_string(i + 1) + std::to_string(j + 1));
	return out;
}

std::vector<std::string> braided_names(int n)
{
	if (n == 2)
		return {"α", "β", "γ", "δ"};
	std::vector<std::string> out;
	for (int i = 0; i < n; ++i)
		for (int j = 0; j < n; ++j)
			out.push_back("u" + std::to_string(i + 1) + std::to_string(j + 1));
	return out;
}

namespace {

using PolyMatrix = std::vector<NcPoly>; // n^2 x n^2, row-major

PolyMatrix pm_from(const RMatrix &r)
{
	int N = r.n() * r.n();
	PolyMatrix m(static_cast<size_t>(N) * N);
	for (int i = 0; i < N; ++i)
		for (int j = 0; j < N; ++j)
			m[i * N + j] = NcPoly(r.matrix()(i, j));
	return m;
}

// t1 = t (x) 1, t2 = 1 (x) t
PolyMatrix pm_leg(const GenMatrix &t, int leg)
{
	int n = static_cast<int>(t.size()), N = n * n;
	PolyMatrix m(static_cast<size_t>(N) * N);
	for (int i = 0; i < n; ++i)
		for (int k = 0; k < n; ++k)
			for (int j = 0; j < n; ++j)
				for (int l = 0; l < n; ++l) {
					int row = i * n + k, col = j * n + l;
					if (leg == 1 && k == l)
						m[row * N + col] = t[i][j];
					if (leg == 2 && i == j)
						m[row * N + col] = t[k][l];
				}
	return m;
}

PolyMatrix pm_mul(const PolyMatrix &a, const PolyMatrix &b, int N)
{
	PolyMatrix c(static_cast<size_t>(N) * N);
	for (int i = 0; i < N; ++i)
		for (int k = 0; k < N; ++k) {
			const NcPoly &x = a[i * N + k];
			if (x.is_zero())
				continue;
			for (int j = 0; j < N; ++j)
				if (!b[k * N + j].is_zero())
					c[i * N + j] += x * b[k * N + j];
		}
	return c;
}

std::vector<NcPoly> nonzero_diff(const PolyMatrix &a, const PolyMatrix &b)
{
	std::vector<NcPoly> out;
	for (size_t k = 0; k < a.size(); ++k) {
		NcPoly d = a[k] - b[k];
		if (!d.is_zero())
			out.push_back(d);
	}
	return out;
}

GenMatrix gen_matrix(const PresentationBuilder &b, const std::vector<std::string> &names, int n)
{
	GenMatrix t(n, std::vector<NcPoly>(n));
	for (int i = 0; i < n; ++i)
		for (int j = 0; j < n; ++j)
			t[i][j] = b.gen(names[i * n + j]);
	return t;
}

} // namespace

std::vector<NcPoly> frt_ideal(const RMatrix &r, const GenMatrix &t)
{
	int N = r.n() * r.n();
	PolyMatrix R = pm_from(r), t1 = pm_leg(t, 1), t2 = pm_leg(t, 2);
	return nonzero_diff(pm_mul(R, pm_mul(t1, t2, N), N), pm_mul(pm_mul(t2, t1, N), R, N));
}

std::vector<NcPoly> reflection_ideal(const RMatrix &r, const GenMatrix &u)
{
	int N = r.n() * r.n();
	PolyMatrix R = pm_from(r), R21 = pm_from(r.flipped()), u1 = pm_leg(u, 1), u2 = pm_leg(u, 2);
	PolyMatrix lhs = pm_mul(pm_mul(pm_mul(u2, R21, N), u1, N), R, N);
	PolyMatrix rhs = pm_mul(pm_mul(pm_mul(R21, u1, N), R, N), u2, N);
	return nonzero_diff(lhs, rhs);
}

PresentationPtr frt_relations(const RMatrix &r, bool with_determinant)
{
	int n = r.n();
	auto names = frt_names(n);
	PresentationBuilder b("frt(" + r.name() + ")");
	if (n == 2) {
		for (auto g : {"b", "c", "a", "d"})
			b.add_generator(g);
	} else {
		for (auto &g : names)
			b.add_generator(g);
	}
	b.set_star_closure(false);
	GenMatrix t = gen_matrix(b, names, n);
	for (auto &rel : frt_ideal(r, t))
		b.add_relation(rel);
	if (with_determinant) {
		if (n != 2)
			throw std::invalid_argument("determinant relation implemented for n = 2 only");
		b.add_relation(t[0][0] * t[1][1] - Scalar::q().inverse() * (t[0][1] * t[1][0]) - NcPoly(1));
	}
	return b.build();
}

PresentationPtr reflection_relations(const RMatrix &r)
{
	int n = r.n();
	auto names = braided_names(n);
	PresentationBuilder b("reflection(" + r.name() + ")");
	for (auto &g : names)
		b.add_generator(g);
	b.set_star_closure(false);
	GenMatrix u = gen_matrix(b, names, n);
	for (auto &rel : reflection_ideal(r, u))
		b.add_relation(rel);
	if (n == 2) {
		b.set_star(0, 0);
		b.set_star(3, 3);
		b.set_star(1, 2);
	}
	return b.build();
}

BraidedSphere braided_sphere_relations(const RMatrix &r, const Scalar &lambda)
{
	if (r.n() != 2)
		throw std::invalid_argument("braided sphere implemented for n = 2");
	BraidedSphere out;
	ScalarMatrix u = u_matrix(r);
	if (!u.is_diagonal())
		throw std::invalid_argument("braided sphere needs a diagonal u matrix");
	if (u(0, 0).is_zero() || u(1, 1).is_zero())
		throw DivisionByZero("u matrix has a zero diagonal entry");
	Scalar s = u(0, 0).inverse();
	u(0, 0) = Scalar(1);
	u(1, 1) = u(1, 1) * s;
	out.u = u;

	// trace(e u) on the free algebra including x
	{
		PresentationBuilder fb("free(x, a, b, b†)");
		int x = fb.add_generator("x"), a = fb.add_generator("a"), bb = fb.add_generator("b"),
		    bs = fb.add_generator("b†");
		fb.set_star(x, x);
		fb.set_star(a, a);
		fb.set_star(bb, bs);
		out.free_with_x = fb.build();
		NcPoly e[2][2] = {{NcPoly::gen(x), NcPoly::gen(bb)}, {NcPoly::gen(bs), NcPoly::gen(a)}};
		NcPoly tr;
		for (int i = 0; i < 2; ++i)
			for (int j = 0; j < 2; ++j)
				tr += e[i][j] * u(j, i);
		out.trace_before_elimination = tr;
	}

	PresentationBuilder b("braided-sphere(" + r.name() + ")");
	int a = b.add_generator("a"), bb = b.add_generator("b"), bs = b.add_generator("b†", 0, {"bstar"});
	b.set_star(a, a);
	b.set_star(bb, bs);
	NcPoly A = NcPoly::gen(a), B = NcPoly::gen(bb), Bs = NcPoly::gen(bs);
	// trace(e u) = x + u22 a = 1 + lambda
	NcPoly X = NcPoly(Scalar(1) + lambda) - u(1, 1) * A;
	NcPoly e[2][2] = {{X, B}, {Bs, A}};
	for (int i = 0; i < 2; ++i)
		for (int j = 0; j < 2; ++j) {
			NcPoly sq = e[i][0] * e[0][j] + e[i][1] * e[1][j] - e[i][j];
			out.ideal.push_back(sq);
			b.add_relation(sq);
		}
	b.set_star_closure(true);
	out.presentation = b.build();
	return out;
}

std::vector<NcPoly> eq9_relations(const RMatrix &r, const GenMatrix &u, const GenMatrix &forms)
{
	int n = r.n();
	RMatrix ri = r.inverse();
	std::vector<NcPoly> out;
	for (int al = 0; al < n; ++al)
		for (int be = 0; be < n; ++be)
			for (int a = 0; a < n; ++a)
				for (int b = 0; b < n; ++b) {
					NcPoly lhs, rhs;
					for (int m = 0; m < n; ++m)
						for (int nn = 0; nn < n; ++nn)
							for (int d = 0; d < n; ++d)
								for (int c = 0; c < n; ++c) {
									Scalar kl = r.at(m, al, a, d) * ri.at(be, nn, d, c);
									if (!kl.is_zero())
										lhs += kl * (forms[m][nn] * u[c][b]);
									Scalar kr = r.at(m, al, c, d) * r.at(d, b, be, nn);
									if (!kr.is_zero())
										rhs += kr * (u[a][c] * forms[m][nn]);
								}
					out.push_back(lhs - rhs);
				}
	return out;
}

std::vector<NcPoly> frt_calculus_relations(const RMatrix &r, const GenMatrix &t, const GenMatrix &forms)
{
	int n = r.n();
	std::vector<NcPoly> out;
	for (int al = 0; al < n; ++al)
		for (int be = 0; be < n; ++be)
			for (int a = 0; a < n; ++a)
				for (int b = 0; b < n; ++b) {
					NcPoly rel = forms[al][be] * t[a][b];
					for (int c = 0; c < n; ++c)
						for (int m = 0; m < n; ++m)
							for (int nn = 0; nn < n; ++nn)
								for (int d = 0; d < n; ++d) {
									Scalar k = r.at(m, al, c, d) * r.at(d, b, be, nn);
									if (!k.is_zero())
										rel -= k * (t[a][c] * forms[m][nn]);
								}
					out.push_back(rel);
				}
	return out;
}

} // namespace qcalc
