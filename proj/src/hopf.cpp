#include "qcalc/hopf.hpp"

#include <mutex>
#include <random>
#include <sstream>
#include <stdexcept>

#include "qcalc/dga.hpp"

namespace qcalc {

// ---------------------------------------------------------------------------
// TensorElement

void TensorElement::add(const std::vector<Word> &legs, const Scalar &c)
{
	if (c.is_zero())
		return;
	auto [it, fresh] = terms_.try_emplace(legs, c);
	if (!fresh) {
		it->second += c;
		if (it->second.is_zero())
			terms_.erase(it);
	}
}

TensorElement TensorElement::normalized(const Presentation &p) const
{
	TensorElement out(legs_);
	for (auto &[ws, c] : terms_) {
		std::vector<NcPoly> legs;
		for (auto &w : ws)
			legs.push_back(p.normalize(NcPoly::word(w)));
		// expand the product of leg sums
		std::vector<std::pair<std::vector<Word>, Scalar>> acc = {{{}, c}};
		for (auto &leg : legs) {
			std::vector<std::pair<std::vector<Word>, Scalar>> next;
			for (auto &[prefix, k] : acc)
				for (auto &[w, lc] : leg.terms()) {
					auto v = prefix;
					v.push_back(w);
					next.push_back({std::move(v), k * lc});
				}
			acc = std::move(next);
		}
		for (auto &[v, k] : acc)
			out.add(v, k);
	}
	return out;
}

std::string TensorElement::str(const Presentation &p) const
{
	if (terms_.empty())
		return "0";
	std::string s;
	for (auto &[ws, c] : terms_) {
		if (!s.empty())
			s += " + ";
		if (!c.is_one())
			s += (c.compound() ? "(" + c.str() + ")" : c.str()) + "*";
		for (size_t k = 0; k < ws.size(); ++k)
			s += (k ? " ⊗ " : "") + (ws[k].empty() ? std::string("1") : p.word_str(ws[k]));
	}
	return s;
}

// ---------------------------------------------------------------------------
// ℛ on words

struct HopfCache {
	std::mutex lock;
	// key: generator then (row, col) pairs of the second argument
	std::map<std::vector<int>, Scalar> gen_word;
};

namespace {

using Chain = std::vector<std::pair<Word, Scalar>>;

// Raw k-fold coproduct of one word: all index chains, coefficient 1.
void coproduct_word(const HopfData &h, const Word &w, int legs, std::vector<std::vector<Word>> &out)
{
	out.assign(1, std::vector<Word>(legs));
	for (Gen g : w) {
		int i = h.row[g], j = h.col[g];
		if (i < 0)
			throw std::invalid_argument("generator " + h.algebra->alphabet().gens[g].name + " is not a matrix entry");
		std::vector<std::vector<Word>> next;
		// chains i = c0, c1, ..., c_legs = j
		int inner = legs - 1, total = 1;
		for (int k = 0; k < inner; ++k)
			total *= h.n;
		for (auto &base : out)
			for (int code = 0; code < total; ++code) {
				std::vector<int> c(legs + 1);
				c[0] = i;
				c[legs] = j;
				int x = code;
				for (int k = 1; k <= inner; ++k) {
					c[k] = x % h.n;
					x /= h.n;
				}
				auto v = base;
				for (int k = 0; k < legs; ++k)
					v[k].push_back(static_cast<Gen>(h.gen[c[k]][c[k + 1]]));
				next.push_back(std::move(v));
			}
		out = std::move(next);
	}
}

Scalar counit_word(const HopfData &h, const Word &w)
{
	for (Gen g : w)
		if (h.row[g] != h.col[g])
			return Scalar(0);
	return Scalar(1);
}

// ℛ(t^i_j, s_1 ... s_l) = (R_{s_l} ... R_{s_1})^i_j
Scalar cqt_gen_word(const HopfData &h, int i, int j, const std::vector<std::pair<int, int>> &y)
{
	std::vector<int> key = {i, j};
	for (auto &[m, n] : y) {
		key.push_back(m);
		key.push_back(n);
	}
	{
		std::lock_guard g(h.cache->lock);
		auto it = h.cache->gen_word.find(key);
		if (it != h.cache->gen_word.end())
			return it->second;
	}
	int n = h.n;
	// row vector e_i times R_{s_l} ... R_{s_1}
	std::vector<Scalar> v(n);
	v[i] = Scalar(1);
	for (auto it = y.rbegin(); it != y.rend(); ++it) {
		std::vector<Scalar> nv(n);
		for (int a = 0; a < n; ++a) {
			if (v[a].is_zero())
				continue;
			for (int b = 0; b < n; ++b) {
				const Scalar &rr = h.r.at(a, b, it->first, it->second);
				if (!rr.is_zero())
					nv[b] += v[a] * rr;
			}
		}
		v = std::move(nv);
	}
	Scalar out = v[j];
	std::lock_guard g(h.cache->lock);
	h.cache->gen_word[key] = out;
	return out;
}

Scalar cqt_words(const HopfData &h, const Word &x, const Word &y)
{
	if (x.empty())
		return counit_word(h, y);
	if (y.empty())
		return counit_word(h, x);
	int n = h.n, l = static_cast<int>(y.size());
	int states = 1;
	for (int k = 0; k < l; ++k)
		states *= n;
	auto decode = [&](int code) {
		std::vector<int> c(l);
		for (int k = 0; k < l; ++k) {
			c[k] = code % n;
			code /= n;
		}
		return c;
	};
	auto encode = [&](const std::vector<int> &c) {
		int code = 0;
		for (int k = l - 1; k >= 0; --k)
			code = code * n + c[k];
		return code;
	};
	std::vector<int> rows(l), cols(l);
	for (int k = 0; k < l; ++k) {
		rows[k] = h.row[y[k]];
		cols[k] = h.col[y[k]];
	}
	std::vector<Scalar> v(states);
	v[encode(rows)] = Scalar(1);
	for (Gen g : x) {
		std::vector<Scalar> nv(states);
		for (int from = 0; from < states; ++from) {
			if (v[from].is_zero())
				continue;
			auto c = decode(from);
			for (int to = 0; to < states; ++to) {
				auto d = decode(to);
				std::vector<std::pair<int, int>> word(l);
				for (int k = 0; k < l; ++k)
					word[k] = {c[k], d[k]};
				Scalar r = cqt_gen_word(h, h.row[g], h.col[g], word);
				if (!r.is_zero())
					nv[to] += v[from] * r;
			}
		}
		v = std::move(nv);
	}
	return v[encode(cols)];
}

// Antipode on a word without normalization.
NcPoly antipode_raw(const HopfData &, const Word &w, const std::vector<NcPoly> &table)
{
	NcPoly out(1);
	for (auto it = w.rbegin(); it != w.rend(); ++it)
		out = out * table[*it];
	return out;
}

NcPoly antipode_raw(const HopfData &h, const NcPoly &x, const std::vector<NcPoly> &table)
{
	NcPoly out;
	for (auto &[w, c] : x.terms())
		out += c * antipode_raw(h, w, table);
	return out;
}

std::optional<std::vector<Scalar>> solve_linear(std::vector<std::vector<Scalar>> rows, std::vector<Scalar> rhs, int unknowns)
{
	int m = static_cast<int>(rows.size());
	std::vector<int> pivot_col;
	int r = 0;
	for (int col = 0; col < unknowns && r < m; ++col) {
		int piv = -1;
		for (int k = r; k < m; ++k)
			if (!rows[k][col].is_zero()) {
				piv = k;
				break;
			}
		if (piv < 0)
			continue;
		std::swap(rows[piv], rows[r]);
		std::swap(rhs[piv], rhs[r]);
		Scalar inv = rows[r][col].inverse();
		for (auto &x : rows[r])
			x *= inv;
		rhs[r] *= inv;
		for (int k = 0; k < m; ++k) {
			if (k == r || rows[k][col].is_zero())
				continue;
			Scalar f = rows[k][col];
			for (int c = 0; c < unknowns; ++c)
				rows[k][c] -= f * rows[r][c];
			rhs[k] -= f * rhs[r];
		}
		pivot_col.push_back(col);
		++r;
	}
	for (int k = r; k < m; ++k)
		if (!rhs[k].is_zero())
			return std::nullopt;
	if (r < unknowns)
		return std::nullopt;
	std::vector<Scalar> x(unknowns);
	for (int k = 0; k < r; ++k)
		x[pivot_col[k]] = rhs[k];
	return x;
}

} // namespace

std::optional<std::vector<NcPoly>> solve_antipode(const Presentation &frt, const std::vector<std::vector<int>> &gen)
{
	int n = static_cast<int>(gen.size());
	if (n != 2)
		throw std::invalid_argument("antipode solve implemented for 2x2 matrices");
	// S(t^i_j) = x_ij t^(1-j)_(1-i), unknown x
	std::vector<NcPoly> cof(frt.gen_count());
	std::vector<int> slot(frt.gen_count(), -1);
	for (int i = 0; i < 2; ++i)
		for (int j = 0; j < 2; ++j) {
			cof[gen[i][j]] = NcPoly::gen(gen[1 - j][1 - i]);
			slot[gen[i][j]] = i * 2 + j;
		}
	// equations: entries of S(t) t - 1 and t S(t) - 1, coefficient per normal word
	std::map<std::pair<int, Word>, std::vector<Scalar>> coeffs;
	std::map<std::pair<int, Word>, Scalar> target;
	int eq = 0;
	for (int side = 0; side < 2; ++side)
		for (int i = 0; i < 2; ++i)
			for (int j = 0; j < 2; ++j, ++eq) {
				target[{eq, Word{}}] = i == j ? Scalar(1) : Scalar(0);
				coeffs.try_emplace({eq, Word{}}, std::vector<Scalar>(4));
				for (int k = 0; k < 2; ++k) {
					int sg = side == 0 ? gen[i][k] : gen[k][j];
					int other = side == 0 ? gen[k][j] : gen[i][k];
					NcPoly prod = side == 0 ? cof[sg] * NcPoly::gen(other) : NcPoly::gen(other) * cof[sg];
					NcPoly reduced = frt.normalize(prod);
					for (auto &[w, c] : reduced.terms()) {
						auto &row = coeffs.try_emplace({eq, w}, std::vector<Scalar>(4)).first->second;
						row[slot[sg]] += c;
					}
				}
			}
	std::vector<std::vector<Scalar>> rows;
	std::vector<Scalar> rhs;
	for (auto &[key, row] : coeffs) {
		rows.push_back(row);
		auto it = target.find(key);
		rhs.push_back(it == target.end() ? Scalar(0) : it->second);
	}
	auto x = solve_linear(rows, rhs, 4);
	if (!x)
		return std::nullopt;
	std::vector<NcPoly> table(frt.gen_count());
	for (int g = 0; g < frt.gen_count(); ++g)
		if (slot[g] >= 0)
			table[g] = (*x)[slot[g]] * cof[g];
	return table;
}

HopfData make_hopf(const RMatrix &r)
{
	if (r.n() != 2)
		throw std::invalid_argument("Hopf structure implemented for 2x2 R-matrices");
	Scalar q = Scalar::q();
	for (const Scalar &coef : {q.inverse(), q}) {
		auto base = frt_relations(r, false);
		PresentationBuilder b(*base, "frt_hopf(" + r.name() + ")");
		b.add_relation(b.gen("a") * b.gen("d") - coef * (b.gen("b") * b.gen("c")) - NcPoly(1));
		PresentationPtr p;
		try {
			p = b.build();
		} catch (const InconsistentPresentation &) {
			continue;
		}
		HopfData h;
		h.algebra = p;
		h.r = r;
		h.n = 2;
		h.row.assign(p->gen_count(), -1);
		h.col.assign(p->gen_count(), -1);
		h.gen.assign(2, std::vector<int>(2));
		auto names = frt_names(2);
		for (int i = 0; i < 2; ++i)
			for (int j = 0; j < 2; ++j) {
				int g = p->require(names[i * 2 + j]);
				h.gen[i][j] = g;
				h.row[g] = i;
				h.col[g] = j;
			}
		auto s = solve_antipode(*p, h.gen);
		if (!s)
			continue;
		h.S = *s;
		h.det_coefficient = coef;
		// S^-1 on generators: S(S^-1 g) = g with the same cofactor pattern
		h.S_inv.assign(p->gen_count(), NcPoly());
		for (int g = 0; g < p->gen_count(); ++g) {
			int i = h.row[g], j = h.col[g];
			int partner = h.gen[1 - j][1 - i];
			Scalar k = h.S[partner].coefficient(Word{static_cast<Gen>(g)});
			h.S_inv[g] = k.inverse() * NcPoly::gen(partner);
		}
		h.cache = std::make_shared<HopfCache>();
		return h;
	}
	throw std::runtime_error("no determinant convention admits a cofactor antipode for " + r.name());
}

TensorElement coproduct(const HopfData &h, const NcPoly &x, int legs)
{
	if (legs < 1)
		throw std::invalid_argument("coproduct needs at least one leg");
	TensorElement out(legs);
	std::vector<std::vector<Word>> chains;
	for (auto &[w, c] : x.terms()) {
		coproduct_word(h, w, legs, chains);
		for (auto &v : chains)
			out.add(v, c);
	}
	return out.normalized(*h.algebra);
}

Scalar counit(const HopfData &h, const NcPoly &x)
{
	Scalar out;
	for (auto &[w, c] : x.terms())
		out += c * counit_word(h, w);
	return out;
}

NcPoly antipode(const HopfData &h, const NcPoly &x) { return h.algebra->normalize(antipode_raw(h, x, h.S)); }

NcPoly antipode_inverse(const HopfData &h, const NcPoly &x)
{
	return h.algebra->normalize(antipode_raw(h, x, h.S_inv));
}

Scalar cqt_eval(const HopfData &h, const NcPoly &x, const NcPoly &y)
{
	Scalar out;
	for (auto &[wx, cx] : x.terms())
		for (auto &[wy, cy] : y.terms())
			out += cx * cy * cqt_words(h, wx, wy);
	return out;
}

Scalar cqt_inverse_eval(const HopfData &h, const NcPoly &x, const NcPoly &y)
{
	return cqt_eval(h, antipode_raw(h, x, h.S), y);
}

namespace {

// Σ over the raw coproduct of x into k legs: f(legs, coefficient).
template <class F> void for_coproduct(const HopfData &h, const NcPoly &x, int legs, F &&f)
{
	std::vector<std::vector<Word>> chains;
	for (auto &[w, c] : x.terms()) {
		coproduct_word(h, w, legs, chains);
		for (auto &v : chains)
			f(v, c);
	}
}

NcPoly W(const Word &w) { return NcPoly::word(w); }

} // namespace

Scalar v_inv(const HopfData &h, const NcPoly &a)
{
	Scalar out;
	for_coproduct(h, a, 2, [&](const std::vector<Word> &v, const Scalar &c) {
		NcPoly s2 = antipode_raw(h, antipode_raw(h, W(v[0]), h.S), h.S);
		out += c * cqt_eval(h, s2, W(v[1]));
	});
	return out;
}

Scalar u_functional(const HopfData &h, const NcPoly &a)
{
	Scalar out;
	for_coproduct(h, a, 2, [&](const std::vector<Word> &v, const Scalar &c) {
		out += c * cqt_eval(h, W(v[1]), antipode_raw(h, v[0], h.S));
	});
	return out;
}

NcPoly transmute_product(const HopfData &h, const NcPoly &a, const NcPoly &b)
{
	NcPoly out;
	for_coproduct(h, a, 3, [&](const std::vector<Word> &va, const Scalar &ca) {
		NcPoly left = antipode_raw(h, va[0], h.S) * W(va[2]);
		for_coproduct(h, b, 2, [&](const std::vector<Word> &vb, const Scalar &cb) {
			Scalar r = cqt_eval(h, left, antipode_raw(h, vb[0], h.S));
			if (!r.is_zero())
				out += (ca * cb * r) * NcPoly::word([&] {
					Word w = va[1];
					w.insert(w.end(), vb[1].begin(), vb[1].end());
					return w;
				}());
		});
	});
	return h.algebra->normalize(out);
}

Scalar cocycle(const HopfData &h, const NcPoly &a, const NcPoly &b, const NcPoly &c, const NcPoly &d)
{
	Scalar e = counit(h, a);
	if (e.is_zero())
		return e;
	return e * cqt_inverse_eval(h, b, c * d);
}

// ---------------------------------------------------------------------------
// calculus

CalculusData make_calculus(const RMatrix &r)
{
	CalculusData c;
	c.h = make_hopf(r);
	c.omega = omega_frt(*c.h.algebra, r);
	c.fn_to_omega.resize(c.h.algebra->gen_count());
	for (int g = 0; g < c.h.algebra->gen_count(); ++g)
		c.fn_to_omega[g] = c.omega->require(c.h.algebra->alphabet().gens[g].name);
	for (auto f : {"e_a", "e_b", "e_c", "e_d"})
		c.form.push_back(c.omega->require(f));
	return c;
}

NcPoly CalculusData::to_omega(const NcPoly &x) const
{
	NcPoly out;
	for (auto &[w, k] : x.terms()) {
		Word v;
		for (Gen g : w)
			v.push_back(static_cast<Gen>(fn_to_omega[g]));
		out.add(v, k);
	}
	return out;
}

NcPoly CalculusData::form_poly(const FormVector &v) const
{
	NcPoly out;
	for (size_t k = 0; k < v.size(); ++k)
		if (!v[k].is_zero())
			out += v[k] * NcPoly::gen(form[k]);
	return out;
}

FormVector CalculusData::form_vector(const NcPoly &x) const
{
	FormVector v(form.size());
	NcPoly reduced = omega->normalize(x);
	for (auto &[w, c] : reduced.terms()) {
		int slot = -1;
		if (w.size() == 1)
			for (size_t k = 0; k < form.size(); ++k)
				if (w[0] == form[k])
					slot = static_cast<int>(k);
		if (slot < 0)
			throw std::invalid_argument("not a left-invariant form: " + omega->str(x));
		v[slot] += c;
	}
	return v;
}

std::vector<std::pair<int, NcPoly>> form_coaction(const CalculusData &c, int form_index)
{
	const HopfData &h = c.h;
	int al = form_index / h.n, be = form_index % h.n;
	std::vector<std::pair<int, NcPoly>> out;
	for (int m = 0; m < h.n; ++m)
		for (int n = 0; n < h.n; ++n)
			out.push_back({m * h.n + n, h.t(m, al) * h.S[h.gen[be][n]]});
	return out;
}

FormVector right_action(const CalculusData &c, const FormVector &v, const NcPoly &a)
{
	const HopfData &h = c.h;
	int n = h.n;
	FormVector out(v.size());
	for (auto &[w, k] : a.terms()) {
		FormVector cur = v;
		for (Gen g : w) {
			int ai = h.row[g], bi = h.col[g];
			FormVector next(v.size());
			for (int al = 0; al < n; ++al)
				for (int be = 0; be < n; ++be) {
					const Scalar &x = cur[al * n + be];
					if (x.is_zero())
						continue;
					for (int m = 0; m < n; ++m)
						for (int nn = 0; nn < n; ++nn)
							for (int cc = 0; cc < n; ++cc) {
								Scalar r = h.r.at(m, al, ai, cc) * h.r.at(cc, bi, be, nn);
								if (!r.is_zero())
									next[m * n + nn] += x * r;
							}
				}
			cur = std::move(next);
		}
		for (size_t i = 0; i < v.size(); ++i)
			out[i] += k * cur[i];
	}
	return out;
}

NcPoly adjoint_action(const CalculusData &c, const FormVector &v, const NcPoly &a)
{
	NcPoly out;
	NcPoly e = c.form_poly(v);
	for_coproduct(c.h, a, 2, [&](const std::vector<Word> &w, const Scalar &k) {
		out += k * (c.to_omega(antipode_raw(c.h, w[0], c.h.S)) * e * c.to_omega(W(w[1])));
	});
	return c.omega->normalize(out);
}

NcPoly maurer_cartan(const CalculusData &c, const NcPoly &a)
{
	NcPoly out;
	for_coproduct(c.h, a, 2, [&](const std::vector<Word> &w, const Scalar &k) {
		out += k * (c.to_omega(antipode_raw(c.h, w[0], c.h.S)) * c.omega->d(c.to_omega(W(w[1]))));
	});
	return c.omega->normalize(out);
}

namespace {

// Σ_k v_k Δ_R e_k as (form index, A element, coefficient)
template <class F> void for_form_coaction(const CalculusData &c, const FormVector &v, F &&f)
{
	for (size_t k = 0; k < v.size(); ++k) {
		if (v[k].is_zero())
			continue;
		for (auto &[m, x] : form_coaction(c, static_cast<int>(k)))
			f(m, x, v[k]);
	}
}

} // namespace

NcPoly cotwist_function_form(const CalculusData &c, const NcPoly &a, const FormVector &v)
{
	NcPoly out;
	for_coproduct(c.h, a, 2, [&](const std::vector<Word> &w, const Scalar &ka) {
		for_form_coaction(c, v, [&](int m, const NcPoly &x, const Scalar &kv) {
			Scalar r = cqt_eval(c.h, W(w[1]), x);
			if (!r.is_zero())
				out += (ka * kv * r) * (NcPoly::gen(c.form[m]) * c.to_omega(W(w[0])));
		});
	});
	return c.omega->normalize(out);
}

NcPoly cotwist_form_function(const CalculusData &c, const FormVector &v, const NcPoly &a)
{
	NcPoly out;
	for_coproduct(c.h, a, 3, [&](const std::vector<Word> &w, const Scalar &ka) {
		NcPoly ad = antipode_raw(c.h, w[0], c.h.S) * W(w[2]);
		for_form_coaction(c, v, [&](int m, const NcPoly &x, const Scalar &kv) {
			Scalar r = cqt_eval(c.h, x, ad);
			if (!r.is_zero())
				out += (ka * kv * r) * (c.to_omega(W(w[1])) * NcPoly::gen(c.form[m]));
		});
	});
	return c.omega->normalize(out);
}

NcPoly cotwist_form_form(const CalculusData &c, const FormVector &v, const FormVector &w)
{
	NcPoly out;
	for_form_coaction(c, v, [&](int mv, const NcPoly &xv, const Scalar &kv) {
		for_form_coaction(c, w, [&](int mw, const NcPoly &xw, const Scalar &kw) {
			Scalar r = cqt_eval(c.h, xv, xw);
			if (!r.is_zero())
				out += (kv * kw * r) * (NcPoly::gen(c.form[mw]) * NcPoly::gen(c.form[mv]));
		});
	});
	return c.omega->normalize(out);
}

NcPoly transmute_form_function(const CalculusData &c, const FormVector &v, const NcPoly &a)
{
	NcPoly out;
	size_t dim = v.size();
	for_coproduct(c.h, a, 3, [&](const std::vector<Word> &w, const Scalar &ka) {
		NcPoly sa = antipode_raw(c.h, w[0], c.h.S);
		for_form_coaction(c, v, [&](int m, const NcPoly &x, const Scalar &kv) {
			Scalar r = cqt_eval(c.h, x, sa);
			if (r.is_zero())
				return;
			FormVector unit(dim);
			unit[m] = Scalar(1);
			FormVector acted = right_action(c, unit, W(w[2]));
			out += (ka * kv * r) * (c.to_omega(W(w[1])) * c.form_poly(acted));
		});
	});
	return c.omega->normalize(out);
}

NcPoly theta_map(const CalculusData &c, const NcPoly &a, const NcPoly &b)
{
	NcPoly out;
	for_coproduct(c.h, b, 3, [&](const std::vector<Word> &wb, const Scalar &kb) {
		NcPoly sb = antipode_raw(c.h, wb[0], c.h.S) * W(wb[2]);
		NcPoly db = c.omega->d(c.to_omega(W(wb[1])));
		for_coproduct(c.h, a, 2, [&](const std::vector<Word> &wa, const Scalar &ka) {
			Scalar r = cqt_eval(c.h, W(wa[1]), sb);
			if (!r.is_zero())
				out += (ka * kb * r) * (db * c.to_omega(W(wa[0])));
		});
	});
	return c.omega->normalize(out);
}

ScalarMatrix maurer_cartan_matrix(const CalculusData &c)
{
	int n = c.h.n, dim = n * n;
	ScalarMatrix m(dim);
	for (int i = 0; i < n; ++i)
		for (int j = 0; j < n; ++j) {
			auto v = c.form_vector(maurer_cartan(c, c.h.t(i, j)));
			for (int k = 0; k < dim; ++k)
				m(i * n + j, k) = v[k];
		}
	return m;
}

FormVector apply_form_matrix(const ScalarMatrix &m, const FormVector &v)
{
	FormVector out(v.size());
	for (size_t l = 0; l < v.size(); ++l)
		if (!v[l].is_zero())
			for (size_t k = 0; k < v.size(); ++k)
				out[k] += v[l] * m(static_cast<int>(l), static_cast<int>(k));
	return out;
}

namespace {

FormVector omega_vector(const CalculusData &c, const NcPoly &a) { return c.form_vector(maurer_cartan(c, a)); }

ScalarMatrix in_form_basis(const CalculusData &c, const ScalarMatrix &rows_on_omega)
{
	return maurer_cartan_matrix(c).inverse() * rows_on_omega;
}

} // namespace

ScalarMatrix theta_matrix(const CalculusData &c)
{
	const HopfData &h = c.h;
	int n = h.n, dim = n * n;
	ScalarMatrix t(dim);
	for (int i = 0; i < n; ++i)
		for (int j = 0; j < n; ++j) {
			FormVector acc(dim);
			for_coproduct(h, h.t(i, j), 4, [&](const std::vector<Word> &w, const Scalar &k) {
				Scalar s = -k * v_inv(h, W(w[0])) * cqt_eval(h, W(w[1]), antipode_raw(h, w[3], h.S));
				if (s.is_zero())
					return;
				auto om = omega_vector(c, antipode_raw(h, w[2], h.S_inv));
				for (int x = 0; x < dim; ++x)
					acc[x] += s * om[x];
			});
			for (int x = 0; x < dim; ++x)
				t(i * n + j, x) = acc[x];
		}
	return in_form_basis(c, t);
}

ScalarMatrix theta_inverse_matrix(const CalculusData &c)
{
	const HopfData &h = c.h;
	int n = h.n, dim = n * n;
	ScalarMatrix t(dim);
	for (int i = 0; i < n; ++i)
		for (int j = 0; j < n; ++j) {
			FormVector acc(dim);
			for_coproduct(h, h.t(i, j), 4, [&](const std::vector<Word> &w, const Scalar &k) {
				Scalar s = -k * u_functional(h, W(w[2])) * cqt_eval(h, W(w[3]), W(w[0]));
				if (s.is_zero())
					return;
				auto om = omega_vector(c, antipode_raw(h, w[1], h.S));
				for (int x = 0; x < dim; ++x)
					acc[x] += s * om[x];
			});
			for (int x = 0; x < dim; ++x)
				t(i * n + j, x) = acc[x];
		}
	return in_form_basis(c, t);
}

// ---------------------------------------------------------------------------
// suites

namespace {

std::string scalar_list(const std::vector<std::string> &items)
{
	std::string s;
	for (size_t k = 0; k < items.size() && k < 3; ++k)
		s += (k ? "; " : "") + items[k];
	return s;
}

// Monomials in the generators up to the given length.
std::vector<NcPoly> monomials(const HopfData &h, int max_len)
{
	std::vector<NcPoly> out = {NcPoly(1)};
	std::vector<Word> layer = {Word{}};
	for (int len = 1; len <= max_len; ++len) {
		std::vector<Word> next;
		for (auto &w : layer)
			for (int g = 0; g < h.algebra->gen_count(); ++g) {
				Word v = w;
				v.push_back(static_cast<Gen>(g));
				next.push_back(v);
				out.push_back(NcPoly::word(v));
			}
		layer = std::move(next);
	}
	return out;
}

// Σ x(1) ⊗ x(2) as polynomial pairs.
std::vector<std::tuple<NcPoly, NcPoly, Scalar>> split(const HopfData &h, const NcPoly &x)
{
	std::vector<std::tuple<NcPoly, NcPoly, Scalar>> out;
	for_coproduct(h, x, 2, [&](const std::vector<Word> &w, const Scalar &c) { out.push_back({W(w[0]), W(w[1]), c}); });
	return out;
}

// Evaluates a word in source generators with a product on the target, generator by generator.
NcPoly transmuted_word_value(const HopfData &h, const std::vector<int> &to_frt, const NcPoly &x)
{
	NcPoly out;
	for (auto &[w, c] : x.terms()) {
		NcPoly acc(1);
		for (Gen g : w)
			acc = transmute_product(h, acc, NcPoly::gen(to_frt[g]));
		out += c * acc;
	}
	return h.algebra->normalize(out);
}

enum class Picture { Transmuted, Cotwisted, CotwistedWithoutTheta };

// Value of an eq9 relation with u -> t and forms sent through the chosen products.
std::vector<Residual> eq9_values(const CalculusData &c, Picture pic)
{
	const HopfData &h = c.h;
	auto src = omega_eq9(h.r);
	auto u = named_matrix(*src, braided_names(2));
	auto forms = form_matrix(*src);
	std::vector<int> fn(src->gen_count(), -1), fm(src->gen_count(), -1);
	auto names = braided_names(2);
	for (int k = 0; k < 4; ++k)
		fn[src->require(names[k])] = h.gen[k / 2][k % 2];
	const char *form_names[4] = {"e_a", "e_b", "e_c", "e_d"};
	for (int k = 0; k < 4; ++k)
		fm[src->require(form_names[k])] = k;
	ScalarMatrix theta = pic == Picture::Cotwisted ? theta_matrix(c) : ScalarMatrix::identity(4);
	std::vector<Residual> out;
	auto rels = eq9_relations(h.r, u, forms);
	for (size_t i = 0; i < rels.size(); ++i) {
		NcPoly value;
		for (auto &[w, k] : rels[i].terms()) {
			if (w.size() != 2)
				throw std::logic_error("eq9 relation is not bilinear");
			FormVector v(4);
			bool fn_first = fn[w[0]] >= 0;
			v[fm[fn_first ? w[1] : w[0]]] = Scalar(1);
			NcPoly a = NcPoly::gen(fn[fn_first ? w[0] : w[1]]);
			if (pic == Picture::Transmuted)
				value += k * (fn_first ? c.to_omega(a) * c.form_poly(v) : transmute_form_function(c, v, a));
			else {
				FormVector tv = apply_form_matrix(theta, v);
				value += k * (fn_first ? cotwist_function_form(c, a, tv) : cotwist_form_function(c, tv, a));
			}
		}
		out.push_back({"eq9[" + std::to_string(i) + "]", c.omega->normalize(value)});
	}
	return out;
}

} // namespace

CheckReport hopf_structure_suite(const RMatrix &r)
{
	CheckReport rep("hopf:structure");
	HopfData h;
	try {
		h = make_hopf(r);
	} catch (const std::exception &e) {
		rep.fail("hopf.build", "FRT Hopf algebra with cofactor antipode", e.what());
		return rep;
	}
	const Presentation &p = *h.algebra;
	rep.pass("hopf.build", "FRT Hopf algebra with cofactor antipode",
	         "a d - (" + h.det_coefficient.str() + ") b c = 1");

	rep.guard("hopf.antipode", "S(t) t = t S(t) = 1", [&] {
		std::vector<Residual> res;
		for (int i = 0; i < h.n; ++i)
			for (int j = 0; j < h.n; ++j) {
				NcPoly left, right;
				for (int k = 0; k < h.n; ++k) {
					left += h.S[h.gen[i][k]] * h.t(k, j);
					right += h.t(i, k) * h.S[h.gen[k][j]];
				}
				NcPoly id(i == j ? 1 : 0);
				res.push_back({"S(t)t", p.normalize(left) - id});
				res.push_back({"tS(t)", p.normalize(right) - id});
			}
		rep.expect_zero("hopf.antipode", "S(t) t = t S(t) = 1", p, res);
	});

	rep.guard("hopf.maps-respect-relations", "Δ, ε and S vanish on the relations", [&] {
		std::vector<std::string> bad;
		for (auto &rel : p.relations()) {
			auto d = coproduct(h, rel);
			if (!d.is_zero())
				bad.push_back("Δ(" + p.str(rel) + ") = " + d.str(p));
			if (!counit(h, rel).is_zero())
				bad.push_back("ε(" + p.str(rel) + ") = " + counit(h, rel).str());
			auto s = antipode(h, rel);
			if (!s.is_zero())
				bad.push_back("S(" + p.str(rel) + ") = " + p.str(s));
		}
		rep.expect("hopf.maps-respect-relations", "Δ, ε and S vanish on the relations", bad.empty(), scalar_list(bad));
	});

	auto samples = monomials(h, 2);
	rep.guard("hopf.coassociative", "(Δ ⊗ id)Δ = (id ⊗ Δ)Δ on monomials of degree <= 2", [&] {
		std::vector<std::string> bad;
		for (auto &x : samples) {
			TensorElement left(3), right(3);
			for (auto &[x1, x2, c] : split(h, x)) {
				auto d1 = coproduct(h, x1), d2 = coproduct(h, x2);
				for (auto &[ws, k] : d1.terms())
					left.add({ws[0], ws[1], x2.terms().begin()->first}, c * k);
				for (auto &[ws, k] : d2.terms())
					right.add({x1.terms().begin()->first, ws[0], ws[1]}, c * k);
			}
			if (!(left.normalized(p) == right.normalized(p)))
				bad.push_back(p.str(x));
		}
		rep.expect("hopf.coassociative", "(Δ ⊗ id)Δ = (id ⊗ Δ)Δ on monomials of degree <= 2", bad.empty(),
		           scalar_list(bad));
	});

	rep.guard("hopf.antipode-axiom", "S(x(1)) x(2) = x(1) S(x(2)) = ε(x) on monomials of degree <= 2", [&] {
		std::vector<Residual> res;
		for (auto &x : samples) {
			NcPoly left, right;
			for (auto &[x1, x2, c] : split(h, x)) {
				left += c * (antipode(h, x1) * x2);
				right += c * (x1 * antipode(h, x2));
			}
			NcPoly e(counit(h, x));
			res.push_back({"S(x1)x2 " + p.str(x), p.normalize(left) - e});
			res.push_back({"x1S(x2) " + p.str(x), p.normalize(right) - e});
		}
		rep.expect_zero("hopf.antipode-axiom", "S(x(1)) x(2) = x(1) S(x(2)) = ε(x) on monomials of degree <= 2",
		                p, res);
	});

	rep.guard("hopf.cqt-generators", "ℛ(t^a_b, t^m_n) = R^a_b^m_n", [&] {
		std::vector<std::string> bad;
		for (int a = 0; a < 2; ++a)
			for (int b = 0; b < 2; ++b)
				for (int m = 0; m < 2; ++m)
					for (int n = 0; n < 2; ++n)
						if (cqt_eval(h, h.t(a, b), h.t(m, n)) != r.at(a, b, m, n))
							bad.push_back(std::to_string(a) + std::to_string(b) + std::to_string(m) +
							              std::to_string(n));
		rep.expect("hopf.cqt-generators", "ℛ(t^a_b, t^m_n) = R^a_b^m_n", bad.empty(), scalar_list(bad));
	});

	rep.guard("hopf.cqt-well-defined", "ℛ vanishes on relation ⊗ monomial and monomial ⊗ relation, degree <= 2", [&] {
		std::vector<std::string> bad;
		for (auto &rel : p.relations())
			for (auto &x : monomials(h, 2)) {
				Scalar l = cqt_eval(h, rel, x), rr = cqt_eval(h, x, rel);
				if (!l.is_zero() || !rr.is_zero())
					bad.push_back(p.str(rel) + " against " + p.str(x));
			}
		rep.expect("hopf.cqt-well-defined",
		           "ℛ vanishes on relation ⊗ monomial and monomial ⊗ relation, degree <= 2", bad.empty(),
		           scalar_list(bad));
	});

	rep.guard("hopf.cqt-invertible", "ℛ(S x(1), y(1)) ℛ(x(2), y(2)) = ε(x) ε(y)", [&] {
		std::vector<std::string> bad;
		auto gens = monomials(h, 1);
		for (auto &x : gens)
			for (auto &y : gens) {
				Scalar acc;
				for (auto &[x1, x2, cx] : split(h, x))
					for (auto &[y1, y2, cy] : split(h, y))
						acc += cx * cy * cqt_inverse_eval(h, x1, y1) * cqt_eval(h, x2, y2);
				if (acc != counit(h, x) * counit(h, y))
					bad.push_back(p.str(x) + ", " + p.str(y));
			}
		rep.expect("hopf.cqt-invertible", "ℛ(S x(1), y(1)) ℛ(x(2), y(2)) = ε(x) ε(y)", bad.empty(), scalar_list(bad));
	});

	rep.guard("hopf.cqt-commutation", "y(1) x(1) ℛ(x(2), y(2)) = ℛ(x(1), y(1)) x(2) y(2)", [&] {
		std::vector<Residual> res;
		auto gens = monomials(h, 1);
		for (auto &x : gens)
			for (auto &y : gens) {
				NcPoly acc;
				for (auto &[x1, x2, cx] : split(h, x))
					for (auto &[y1, y2, cy] : split(h, y)) {
						acc += (cx * cy * cqt_eval(h, x2, y2)) * (y1 * x1);
						acc -= (cx * cy * cqt_eval(h, x1, y1)) * (x2 * y2);
					}
				res.push_back({p.str(x) + ", " + p.str(y), p.normalize(acc)});
			}
		rep.expect_zero("hopf.cqt-commutation", "y(1) x(1) ℛ(x(2), y(2)) = ℛ(x(1), y(1)) x(2) y(2)", p, res);
	});

	rep.guard("hopf.u-v-unit", "u(1) = v^-1(1) = 1", [&] {
		rep.expect("hopf.u-v-unit", "u(1) = v^-1(1) = 1",
		           u_functional(h, NcPoly(1)).is_one() && v_inv(h, NcPoly(1)).is_one());
	});

	rep.guard("hopf.s-squared", "S^2(x(1)) u(x(2)) = u(x(1)) x(2) on monomials of degree <= 2", [&] {
		std::vector<Residual> res;
		for (auto &x : samples) {
			NcPoly acc;
			for (auto &[x1, x2, c] : split(h, x)) {
				acc += (c * u_functional(h, x2)) * antipode(h, antipode(h, x1));
				acc -= (c * u_functional(h, x1)) * x2;
			}
			res.push_back({p.str(x), p.normalize(acc)});
		}
		rep.expect_zero("hopf.s-squared", "S^2(x(1)) u(x(2)) = u(x(1)) x(2) on monomials of degree <= 2", p, res);
	});

	rep.guard("hopf.cocycle", "F(x(1), y(1)) F(x(2) y(2), z) = F(y(1), z(1)) F(x, y(2) z(2)) on A ⊗ A^op", [&] {
		// elements of A ⊗ A^op as pairs of generator monomials, degree <= 1 per leg
		auto legs = monomials(h, 1);
		std::vector<std::pair<NcPoly, NcPoly>> elems;
		for (auto &a : legs)
			for (auto &b : legs)
				if (a.terms().begin()->first.size() + b.terms().begin()->first.size() <= 1)
					elems.push_back({a, b});
		auto F = [&](const std::pair<NcPoly, NcPoly> &x, const std::pair<NcPoly, NcPoly> &y) {
			return cocycle(h, x.first, x.second, y.first, y.second);
		};
		// Δ on A ⊗ A^op
		auto delta = [&](const std::pair<NcPoly, NcPoly> &x) {
			std::vector<std::tuple<std::pair<NcPoly, NcPoly>, std::pair<NcPoly, NcPoly>, Scalar>> out;
			for (auto &[a1, a2, ca] : split(h, x.first))
				for (auto &[b1, b2, cb] : split(h, x.second))
					out.push_back({{a1, b1}, {a2, b2}, ca * cb});
			return out;
		};
		auto mul = [](const std::pair<NcPoly, NcPoly> &x, const std::pair<NcPoly, NcPoly> &y) {
			return std::pair<NcPoly, NcPoly>{x.first * y.first, y.second * x.second};
		};
		std::vector<std::string> bad;
		for (auto &x : elems)
			for (auto &y : elems)
				for (auto &z : elems) {
					Scalar left, right;
					for (auto &[x1, x2, cx] : delta(x))
						for (auto &[y1, y2, cy] : delta(y)) {
							Scalar f = F(x1, y1);
							if (!f.is_zero())
								left += cx * cy * f * F(mul(x2, y2), z);
						}
					for (auto &[y1, y2, cy] : delta(y))
						for (auto &[z1, z2, cz] : delta(z)) {
							Scalar f = F(y1, z1);
							if (!f.is_zero())
								right += cy * cz * f * F(x, mul(y2, z2));
						}
					if (left != right)
						bad.push_back("(" + p.str(x.first) + "⊗" + p.str(x.second) + ", " + p.str(y.first) + "⊗" +
						              p.str(y.second) + ", " + p.str(z.first) + "⊗" + p.str(z.second) + ")");
				}
		rep.expect("hopf.cocycle", "F(x(1), y(1)) F(x(2) y(2), z) = F(y(1), z(1)) F(x, y(2) z(2)) on A ⊗ A^op",
		           bad.empty(), scalar_list(bad));
	});
	return rep;
}

CheckReport transmutation_suite(const RMatrix &r)
{
	CheckReport rep("hopf:transmutation");
	HopfData h;
	try {
		h = make_hopf(r);
	} catch (const std::exception &e) {
		rep.fail("transmute.build", "FRT Hopf algebra with cofactor antipode", e.what());
		return rep;
	}
	const Presentation &p = *h.algebra;
	auto refl = reflection_relations(r);
	std::vector<int> to_frt(refl->gen_count(), -1);
	auto bn = braided_names(2), fn = frt_names(2);
	for (int k = 0; k < 4; ++k)
		to_frt[refl->require(bn[k])] = p.require(fn[k]);

	rep.guard("transmute.unit", "1 • x = x • 1 = x", [&] {
		std::vector<Residual> res;
		for (auto &x : monomials(h, 2)) {
			res.push_back({"1•" + p.str(x), transmute_product(h, NcPoly(1), x) - p.normalize(x)});
			res.push_back({p.str(x) + "•1", transmute_product(h, x, NcPoly(1)) - p.normalize(x)});
		}
		rep.expect_zero("transmute.unit", "1 • x = x • 1 = x", p, res);
	});

	rep.guard("transmute.reflection", "braided matrix relations hold for u = t under •", [&] {
		std::vector<Residual> res;
		for (auto &rel : refl->relations())
			res.push_back({refl->str(rel), transmuted_word_value(h, to_frt, rel)});
		rep.expect_zero("transmute.reflection", "braided matrix relations hold for u = t under •", p, res);
	});

	rep.guard("transmute.braided-det", "α • δ - q^2 γ • β = 1", [&] {
		Scalar q = Scalar::q();
		NcPoly det = transmute_product(h, h.t(0, 0), h.t(1, 1)) - q * q * transmute_product(h, h.t(1, 0), h.t(0, 1));
		rep.expect_zero("transmute.braided-det", "α • δ - q^2 γ • β = 1", p, det - NcPoly(1));
	});

	rep.guard("transmute.counit", "ε(x • y) = ε(x) ε(y)", [&] {
		std::vector<std::string> bad;
		auto xs = monomials(h, 2);
		for (auto &x : xs)
			for (auto &y : monomials(h, 1))
				if (counit(h, transmute_product(h, x, y)) != counit(h, x) * counit(h, y))
					bad.push_back(p.str(x) + " • " + p.str(y));
		rep.expect("transmute.counit", "ε(x • y) = ε(x) ε(y)", bad.empty(), scalar_list(bad));
	});

	rep.guard("transmute.associative", "(x • y) • z = x • (y • z) on generators", [&] {
		std::vector<Residual> res;
		auto gens = monomials(h, 1);
		for (auto &x : gens)
			for (auto &y : gens)
				for (auto &z : gens)
					res.push_back({p.str(x) + p.str(y) + p.str(z),
					               transmute_product(h, transmute_product(h, x, y), z) -
					                   transmute_product(h, x, transmute_product(h, y, z))});
		rep.expect_zero("transmute.associative", "(x • y) • z = x • (y • z) on generators", p, res);
	});
	return rep;
}

CheckReport cotwist_suite(const RMatrix &r, unsigned seed)
{
	CheckReport rep("hopf:calculus");
	CalculusData c;
	try {
		c = make_calculus(r);
	} catch (const std::exception &e) {
		rep.fail("calculus.build", "FRT calculus over the Hopf algebra", e.what());
		return rep;
	}
	const HopfData &h = c.h;
	const Presentation &o = *c.omega;
	const int dim = static_cast<int>(c.form.size());
	auto unit = [&](int k) {
		FormVector v(dim);
		v[k] = Scalar(1);
		return v;
	};

	rep.guard("calculus.crossed-module", "e ◁ t from R agrees with S(a(1)) e a(2)", [&] {
		std::vector<Residual> res;
		for (int k = 0; k < dim; ++k)
			for (auto &a : monomials(h, 2)) {
				FormVector acted = right_action(c, unit(k), a);
				res.push_back({"e" + std::to_string(k) + "◁" + h.algebra->str(a),
				               o.normalize(c.form_poly(acted) - adjoint_action(c, unit(k), a))});
			}
		rep.expect_zero("calculus.crossed-module", "e ◁ t from R agrees with S(a(1)) e a(2)", o, res);
	});

	rep.guard("calculus.maurer-cartan-form", "ω(t^c_b) = σ((R21 R)^c_b^α_β e_α^β - δ^c_b θ)", [&] {
		RMatrix rr = r21_r(r);
		Scalar sigma = o.alphabet().sigma;
		ScalarMatrix w = maurer_cartan_matrix(c);
		std::vector<std::string> bad;
		for (int cc = 0; cc < 2; ++cc)
			for (int b = 0; b < 2; ++b)
				for (int al = 0; al < 2; ++al)
					for (int be = 0; be < 2; ++be) {
						Scalar expect = rr.at(cc, b, al, be);
						if (cc == b && al == be)
							expect -= Scalar(1);
						if (w(cc * 2 + b, al * 2 + be) != sigma * expect)
							bad.push_back(std::to_string(cc) + std::to_string(b) + "," + std::to_string(al) +
							              std::to_string(be) + ": " + w(cc * 2 + b, al * 2 + be).str());
					}
		rep.expect("calculus.maurer-cartan-form", "ω(t^c_b) = σ((R21 R)^c_b^α_β e_α^β - δ^c_b θ)", bad.empty(),
		           scalar_list(bad));
	});

	rep.guard("calculus.maurer-cartan-equation", "d ω(a) + ω(a(1)) ω(a(2)) = 0", [&] {
		std::vector<Residual> res;
		for (auto &a : monomials(h, 2)) {
			NcPoly acc = o.d(maurer_cartan(c, a));
			for (auto &[a1, a2, k] : split(h, a))
				acc += k * (maurer_cartan(c, a1) * maurer_cartan(c, a2));
			res.push_back({h.algebra->str(a), o.normalize(acc)});
		}
		rep.expect_zero("calculus.maurer-cartan-equation", "d ω(a) + ω(a(1)) ω(a(2)) = 0", o, res);
	});

	rep.guard("calculus.omega-rank", "ω(t^i_j) span the left-invariant forms at random q", [&] {
		ScalarMatrix w = maurer_cartan_matrix(c);
		std::mt19937 rng(seed);
		std::uniform_int_distribution<int> num(2, 40), den(1, 13);
		std::vector<std::string> points;
		bool ok = true;
		for (int k = 0; k < 3; ++k) {
			// q = r^2 so that q^(1/2) stays rational
			mpq_class rq(num(rng), den(rng));
			rq.canonicalize();
			Assignment at{{0, GaussRat(rq)}};
			ScalarMatrix s(w.size());
			for (int i = 0; i < w.size(); ++i)
				for (int j = 0; j < w.size(); ++j)
					s(i, j) = w(i, j).specialize(at);
			points.push_back("q^(1/2) = " + rq.get_str());
			try {
				s.inverse();
			} catch (const DivisionByZero &) {
				ok = false;
				points.back() += " singular";
			}
		}
		if (ok)
			rep.pass("calculus.omega-rank", "ω(t^i_j) span the left-invariant forms at random q", scalar_list(points));
		else
			rep.fail("calculus.omega-rank", "ω(t^i_j) span the left-invariant forms at random q", scalar_list(points));
	});

	ScalarMatrix theta, theta_inv;
	rep.guard("calculus.theta-inverse", "Θ^-1 Θ = Θ Θ^-1 = id on the 16 entries of the form matrix", [&] {
		theta = theta_matrix(c);
		theta_inv = theta_inverse_matrix(c);
		auto id = ScalarMatrix::identity(dim);
		ScalarMatrix a = theta_inv * theta, b = theta * theta_inv;
		std::vector<std::string> bad;
		for (int i = 0; i < dim; ++i)
			for (int j = 0; j < dim; ++j) {
				if (a(i, j) != id(i, j))
					bad.push_back("Θ^-1Θ[" + std::to_string(i) + "," + std::to_string(j) + "] = " + a(i, j).str());
				if (b(i, j) != id(i, j))
					bad.push_back("ΘΘ^-1[" + std::to_string(i) + "," + std::to_string(j) + "] = " + b(i, j).str());
			}
		rep.expect("calculus.theta-inverse", "Θ^-1 Θ = Θ Θ^-1 = id on the 16 entries of the form matrix",
		           bad.empty(), scalar_list(bad));
	});
	if (theta.size() == 0)
		return rep;

	rep.guard("calculus.unit-form", "1 • e = e • 1 = e in the cotwisted products", [&] {
		std::vector<Residual> res;
		for (int k = 0; k < dim; ++k) {
			res.push_back({"1•e" + std::to_string(k), cotwist_function_form(c, NcPoly(1), unit(k)) - c.form_poly(unit(k))});
			res.push_back({"e•1" + std::to_string(k), cotwist_form_function(c, unit(k), NcPoly(1)) - c.form_poly(unit(k))});
		}
		rep.expect_zero("calculus.unit-form", "1 • e = e • 1 = e in the cotwisted products", o, res);
	});

	rep.guard("calculus.theta-commutator", "θ • a - a • θ = -σ^-1 da in the cotwisted products", [&] {
		FormVector th(dim);
		th[0] = Scalar(1);
		th[dim - 1] = Scalar(1);
		Scalar sigma = o.alphabet().sigma;
		std::vector<Residual> res;
		for (auto &a : monomials(h, 2)) {
			NcPoly x = cotwist_form_function(c, th, a) - cotwist_function_form(c, a, th);
			res.push_back({h.algebra->str(a), o.normalize(x + sigma.inverse() * o.d(c.to_omega(a)))});
		}
		rep.expect_zero("calculus.theta-commutator", "θ • a - a • θ = -σ^-1 da in the cotwisted products", o, res);
	});

	rep.guard("calculus.theta-differential", "da = a(1) • Θ(ω(a(2)))", [&] {
		std::vector<Residual> res;
		for (auto &a : monomials(h, 2)) {
			NcPoly acc;
			for (auto &[a1, a2, k] : split(h, a))
				acc += k * cotwist_function_form(c, a1, apply_form_matrix(theta, c.form_vector(maurer_cartan(c, a2))));
			res.push_back({h.algebra->str(a), o.normalize(acc - o.d(c.to_omega(a)))});
		}
		rep.expect_zero("calculus.theta-differential", "da = a(1) • Θ(ω(a(2)))", o, res);
	});

	rep.guard("calculus.eq9-transmuted", "braided bimodule relations hold with the transmuted products", [&] {
		rep.expect_zero("calculus.eq9-transmuted", "braided bimodule relations hold with the transmuted products", o,
		                eq9_values(c, Picture::Transmuted));
	});
	rep.guard("calculus.eq9-cotwisted", "braided bimodule relations hold with the cotwisted products after Θ", [&] {
		rep.expect_zero("calculus.eq9-cotwisted",
		                "braided bimodule relations hold with the cotwisted products after Θ", o,
		                eq9_values(c, Picture::Cotwisted));
	});
	rep.guard("calculus.eq9-needs-theta", "without Θ the cotwisted products violate the braided relations", [&] {
		auto res = eq9_values(c, Picture::CotwistedWithoutTheta);
		int nonzero = 0;
		for (auto &x : res)
			nonzero += !x.value.is_zero();
		rep.expect("calculus.eq9-needs-theta", "without Θ the cotwisted products violate the braided relations",
		           nonzero > 0, "every relation vanished without Θ");
	});
	return rep;
}

} // namespace qcalc
