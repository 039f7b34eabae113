#pragma once

#include "errors.hpp"
#include "lie_algebra.hpp"
#include "linalg.hpp"
#include "polynomial.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace liepq {

// A Lie algebra acting on Q^module_dim, one action matrix per basis element.
class Representation {
public:
	Representation() = default;

	// Validates the homomorphism property on all basis pairs unless told not
	// to (used for derived constructions that are valid by construction and
	// re-validated in tests).
	Representation(LieAlgebra algebra, std::vector<Matrix> actions, bool validate = true)
	    : algebra_(std::move(algebra)), actions_(std::move(actions))
	{
		if (actions_.size() != algebra_.dim())
			throw DimensionError("Representation: need one action matrix per basis element");
		module_dim_ = actions_.empty() ? 0 : actions_[0].rows();
		for (auto &a : actions_)
			if (!a.is_square() || a.rows() != module_dim_)
				throw DimensionError("Representation: action matrices must share a square shape");
		if (validate) {
			if (auto bad = homomorphism_violation())
				throw ContractError("Representation: rho([b" + std::to_string(bad->first) + ", b" +
				                    std::to_string(bad->second) + "]) != [rho b_i, rho b_j]");
		}
	}
	// Module of explicit dimension (needed when the algebra has dimension 0).
	Representation(LieAlgebra algebra, size_t module_dim, std::vector<Matrix> actions)
	    : Representation(std::move(algebra), std::move(actions))
	{
		module_dim_ = module_dim;
	}

	const LieAlgebra &algebra() const { return algebra_; }
	size_t module_dim() const { return module_dim_; }
	const std::vector<Matrix> &actions() const { return actions_; }
	const Matrix &action(size_t i) const { return actions_[i]; }

	Matrix action_of(const Vector &x) const
	{
		Matrix m(module_dim_, module_dim_);
		for (size_t i = 0; i < x.size(); ++i)
			if (!x[i].is_zero())
				m.add_scaled(x[i], actions_[i]);
		return m;
	}

	std::optional<std::pair<size_t, size_t>> homomorphism_violation() const
	{
		const size_t d = algebra_.dim();
		for (size_t i = 0; i < d; ++i)
			for (size_t j = i + 1; j < d; ++j) {
				Matrix lhs(module_dim_, module_dim_);
				for (auto &[k, c] : algebra_.structure().terms(i, j))
					lhs.add_scaled(c, actions_[k]);
				if (lhs != commutator(actions_[i], actions_[j]))
					return std::pair{i, j};
			}
		return std::nullopt;
	}

private:
	LieAlgebra algebra_;
	size_t module_dim_ = 0;
	std::vector<Matrix> actions_;
};

inline Representation adjoint_rep(const LieAlgebra &l)
{
	std::vector<Matrix> acts;
	for (size_t i = 0; i < l.dim(); ++i)
		acts.push_back(l.ad(i));
	return Representation(l, l.dim(), std::move(acts));
}

// Matrix realization acting on its defining space.
inline Representation defining_rep(const LieAlgebra &l)
{
	return Representation(l, l.matrix_size(), l.basis());
}

// x acts on V* by -rho(x)^t.
inline Representation dual(const Representation &v)
{
	std::vector<Matrix> acts;
	for (auto &a : v.actions())
		acts.push_back(-a.transpose());
	return Representation(v.algebra(), v.module_dim(), std::move(acts));
}

inline Representation direct_sum(const Representation &v, const Representation &w)
{
	if (v.algebra().dim() != w.algebra().dim())
		throw ContractError("direct_sum: algebra mismatch");
	std::vector<Matrix> acts;
	for (size_t i = 0; i < v.actions().size(); ++i)
		acts.push_back(block_diagonal(v.action(i), w.action(i)));
	return Representation(v.algebra(), v.module_dim() + w.module_dim(), std::move(acts));
}

// Action on an invariant subspace, written in the subspace's canonical basis.
inline Representation restrict(const Representation &v, const Subspace &s)
{
	if (s.ambient_dim() != v.module_dim())
		throw DimensionError("restrict: subspace ambient dimension mismatch");
	std::vector<Matrix> acts;
	for (auto &a : v.actions()) {
		Matrix m(s.dim(), s.dim());
		for (size_t k = 0; k < s.dim(); ++k) {
			auto c = s.coordinates(mat_vec(a, s.basis()[k]));
			if (!c)
				throw ContractError("restrict: subspace is not invariant");
			for (size_t i = 0; i < s.dim(); ++i)
				m(i, k) = (*c)[i];
		}
		acts.push_back(std::move(m));
	}
	return Representation(v.algebra(), s.dim(), std::move(acts));
}

inline bool is_invariant(const Representation &v, const Subspace &s)
{
	for (auto &a : v.actions())
		for (auto &b : s.basis())
			if (!s.contains(mat_vec(a, b)))
				return false;
	return true;
}

// Derivation action on the exterior square, basis wedge_square_index(n):
// X(e_i ^ e_j) = X e_i ^ e_j + e_i ^ X e_j.
inline Matrix wedge_derivation(const Matrix &x)
{
	const size_t n = x.rows();
	auto idx = wedge_square_index(n);
	std::vector<std::vector<int>> pos(n, std::vector<int>(n, -1));
	for (size_t k = 0; k < idx.size(); ++k)
		pos[idx[k].first][idx[k].second] = static_cast<int>(k);
	Matrix m(idx.size(), idx.size());
	// Adds coefficient f of e_a ^ e_b into column col.
	auto put = [&](size_t a, size_t b, const Rational &f, size_t col) {
		if (a == b || f.is_zero())
			return;
		if (a < b)
			m(static_cast<size_t>(pos[a][b]), col) += f;
		else
			m(static_cast<size_t>(pos[b][a]), col) -= f;
	};
	for (size_t col = 0; col < idx.size(); ++col) {
		auto [i, j] = idx[col];
		for (size_t a = 0; a < n; ++a) {
			put(a, j, x(a, i), col);
			put(i, a, x(a, j), col);
		}
	}
	return m;
}

inline Representation wedge_square_rep(const Representation &v)
{
	std::vector<Matrix> acts;
	for (auto &a : v.actions())
		acts.push_back(wedge_derivation(a));
	return Representation(v.algebra(), v.module_dim() * (v.module_dim() - 1) / 2, std::move(acts));
}

// Group action on the exterior square: g e_i ^ g e_j.
inline Matrix wedge_action(const Matrix &g)
{
	if (!g.is_square())
		throw DimensionError("wedge_action: matrix not square");
	const size_t n = g.rows();
	auto idx = wedge_square_index(n);
	Matrix m(idx.size(), idx.size());
	for (size_t col = 0; col < idx.size(); ++col) {
		auto [i, j] = idx[col];
		for (size_t row = 0; row < idx.size(); ++row) {
			auto [k, l] = idx[row];
			m(row, col) = g(k, i) * g(l, j) - g(l, i) * g(k, j);
		}
	}
	return m;
}

// X -> g X g^{-1} in the basis of a matrix realization.
inline Matrix adjoint_action(const Matrix &g, const LieAlgebra &l)
{
	auto ginv = inverse(g);
	if (!ginv)
		throw ContractError("adjoint_action: g is not invertible");
	const size_t d = l.dim();
	Matrix m(d, d);
	for (size_t j = 0; j < d; ++j) {
		auto c = l.coordinates(g * l.basis()[j] * *ginv);
		if (!c)
			throw NotStableError("adjoint_action: conjugate of b" + std::to_string(j) + " leaves the span");
		for (size_t i = 0; i < d; ++i)
			m(i, j) = (*c)[i];
	}
	return m;
}

struct HomOptions {
	// Impose the intertwining equations only on a Lie-generating subset of
	// the basis; false imposes them on every basis element.
	bool generators_only = true;
};

// Basis of Hom_g(V, W) = {phi : phi rho_V(x) = rho_W(x) phi}, canonical
// (reduced echelon in the row-major flattening).
inline std::vector<Matrix> hom_space(const Representation &v, const Representation &w, HomOptions opt = {})
{
	if (v.algebra().dim() != w.algebra().dim() ||
	    !(v.algebra().structure() == w.algebra().structure()))
		throw ContractError("hom_space: representations of different algebras");
	const size_t dv = v.module_dim(), dw = w.module_dim();
	const size_t unknowns = dv * dw;
	std::vector<size_t> gens;
	if (opt.generators_only)
		gens = generating_basis_subset(v.algebra());
	else
		for (size_t i = 0; i < v.algebra().dim(); ++i)
			gens.push_back(i);
	// phi_{ab} -> a * dv + b
	std::vector<SparseRow> eqs;
	for (auto g : gens) {
		const Matrix &rv = v.action(g), &rw = w.action(g);
		for (size_t a = 0; a < dw; ++a)
			for (size_t b = 0; b < dv; ++b) {
				// sum_k phi_{ak} rv_{kb} - sum_k rw_{ak} phi_{kb}
				SparseRow s;
				for (size_t k = 0; k < dv; ++k)
					if (!rv(k, b).is_zero())
						s.emplace_back(static_cast<uint32_t>(a * dv + k), rv(k, b));
				for (size_t k = 0; k < dw; ++k)
					if (!rw(a, k).is_zero())
						s.emplace_back(static_cast<uint32_t>(k * dv + b), -rw(a, k));
				std::sort(s.begin(), s.end(), [](auto &x, auto &y) { return x.first < y.first; });
				SparseRow merged;
				for (auto &e : s) {
					if (!merged.empty() && merged.back().first == e.first)
						merged.back().second += e.second;
					else
						merged.push_back(e);
					if (merged.back().second.is_zero())
						merged.pop_back();
				}
				if (!merged.empty())
					eqs.push_back(std::move(merged));
			}
	}
	Subspace k = kernel_of_rows(unknowns, eqs);
	std::vector<Matrix> out;
	for (auto &b : k.basis())
		out.push_back(reshape(b, dw, dv));
	return out;
}

namespace detail {

// Invariant bilinear forms with B^t = sign * B, solved directly on the
// independent entries.
inline std::vector<Matrix> invariant_forms(const Representation &v, int sign)
{
	const size_t n = v.module_dim();
	// Unknown index for entry (a, b), a <= b (sym) or a < b (skew).
	std::vector<std::vector<int>> var(n, std::vector<int>(n, -1));
	size_t unknowns = 0;
	for (size_t a = 0; a < n; ++a)
		for (size_t b = (sign > 0 ? a : a + 1); b < n; ++b)
			var[a][b] = static_cast<int>(unknowns++);
	// Coefficient of B_{ab} in terms of unknowns: (index, factor)
	auto entry = [&](size_t a, size_t b) -> std::pair<int, int> {
		if (a <= b)
			return {var[a][b], 1};
		return {var[b][a], sign};
	};
	auto gens = generating_basis_subset(v.algebra());
	std::vector<SparseRow> eqs;
	for (auto g : gens) {
		const Matrix &r = v.action(g);
		for (size_t a = 0; a < n; ++a)
			for (size_t b = (sign > 0 ? a : a + 1); b < n; ++b) {
				// (r^t B + B r)_{ab} = sum_k r_{ka} B_{kb} + sum_k B_{ak} r_{kb}
				Vector row(unknowns);
				for (size_t k = 0; k < n; ++k) {
					if (!r(k, a).is_zero()) {
						auto [u, f] = entry(k, b);
						if (u >= 0)
							row[static_cast<size_t>(u)].add_mul(r(k, a), Rational(f));
					}
					if (!r(k, b).is_zero()) {
						auto [u, f] = entry(a, k);
						if (u >= 0)
							row[static_cast<size_t>(u)].add_mul(r(k, b), Rational(f));
					}
				}
				auto s = to_sparse(row);
				if (!s.empty())
					eqs.push_back(std::move(s));
			}
	}
	Subspace k = kernel_of_rows(unknowns, eqs);
	std::vector<Matrix> out;
	for (auto &sol : k.basis()) {
		Matrix m(n, n);
		for (size_t a = 0; a < n; ++a)
			for (size_t b = 0; b < n; ++b) {
				auto [u, f] = entry(a, b);
				if (u >= 0)
					m(a, b) = sol[static_cast<size_t>(u)] * Rational(f);
			}
		out.push_back(std::move(m));
	}
	return out;
}

} // namespace detail

// Basis of symmetric B with B(xu, v) + B(u, xv) = 0.
inline std::vector<Matrix> invariant_symmetric_forms(const Representation &v)
{
	return detail::invariant_forms(v, 1);
}

inline std::vector<Matrix> invariant_skew_forms(const Representation &v) { return detail::invariant_forms(v, -1); }

inline bool is_invariant_form(const Representation &v, const Matrix &b)
{
	for (auto &a : v.actions())
		if (!(a.transpose() * b + b * a).is_zero())
			return false;
	return true;
}

// Smallest invariant subspace containing v (spinning).
inline Subspace cyclic_submodule(const Representation &rep, const Vector &v)
{
	const size_t n = rep.module_dim();
	if (v.size() != n)
		throw DimensionError("cyclic_submodule: vector length mismatch");
	RowReducer rr(n);
	std::vector<Vector> queue;
	if (rr.add(v))
		queue.push_back(v);
	auto gens = generating_basis_subset(rep.algebra());
	for (size_t head = 0; head < queue.size(); ++head)
		for (auto g : gens) {
			Vector w = mat_vec(rep.action(g), queue[head]);
			if (rr.add(w))
				queue.push_back(std::move(w));
		}
	return Subspace::from_reducer(rr);
}

enum class Irreducibility { Irreducible, Reducible, Inconclusive };

inline const char *to_string(Irreducibility v)
{
	switch (v) {
	case Irreducibility::Irreducible:
		return "IRREDUCIBLE";
	case Irreducibility::Reducible:
		return "REDUCIBLE";
	default:
		return "INCONCLUSIVE";
	}
}

struct IrreducibilityVerdict {
	Irreducibility verdict = Irreducibility::Inconclusive;
	std::optional<Subspace> witness; // proper nonzero submodule when REDUCIBLE
	size_t endomorphism_dim = 0;
	std::string note;
};

// Decision procedure over Q for completely reducible modules:
//  (i)   dim End_g(V) = 1                      -> IRREDUCIBLE
//  (ii)  a proper kernel of p(e), p an irreducible factor of the minimal
//        polynomial of some e in End_g(V)      -> REDUCIBLE (with witness)
//  (iii) dim End_g(V) in {2, 4}, every sampled e invertible or zero, no
//        split found                           -> IRREDUCIBLE
//  otherwise                                   -> INCONCLUSIVE
// The minimal polynomial has the same irreducible factors as the
// characteristic polynomial and keeps the factored degree small.
// Abelian algebras are accepted for the splitting search (a found submodule
// is a certificate on its own) but never certified irreducible unless the
// module is one-dimensional.
inline IrreducibilityVerdict is_irreducible(const Representation &v)
{
	const auto &alg = v.algebra();
	const size_t n = v.module_dim();
	bool abelian = is_abelian(alg);
	if (!abelian && !is_semisimple(alg))
		throw ContractError("is_irreducible: algebra is not semisimple");
	IrreducibilityVerdict out;
	if (n == 0) {
		out.verdict = Irreducibility::Reducible;
		out.note = "zero module";
		return out;
	}
	if (n == 1) {
		out.verdict = Irreducibility::Irreducible;
		out.endomorphism_dim = 1;
		return out;
	}
	auto e = hom_space(v, v);
	out.endomorphism_dim = e.size();
	if (e.size() == 1 && !abelian) {
		out.verdict = Irreducibility::Irreducible;
		return out;
	}
	// Sample elements: the basis, then pairwise sums and differences.
	std::vector<Matrix> samples = e;
	for (size_t i = 0; i < e.size(); ++i)
		for (size_t j = i + 1; j < e.size(); ++j) {
			samples.push_back(e[i] + e[j]);
			samples.push_back(e[i] - e[j]);
			samples.push_back(e[i] + Rational(2) * e[j]);
		}
	bool zero_divisor = false;
	for (auto &s : samples) {
		if (s.is_zero())
			continue;
		auto mp = minimal_polynomial(s);
		for (auto &f : factor_over_q(mp)) {
			Subspace ker = kernel(f.factor(s));
			if (!ker.is_zero() && !ker.is_full()) {
				// Kernels of module endomorphisms are submodules; spin anyway
				// so the witness is certified by the action itself.
				Subspace sub = cyclic_submodule(v, ker.basis().front());
				if (!sub.is_full()) {
					out.verdict = Irreducibility::Reducible;
					out.witness = sub;
					return out;
				}
			}
		}
		if (rank(s) < n)
			zero_divisor = true;
	}
	if (!abelian && !zero_divisor && (e.size() == 2 || e.size() == 4)) {
		out.verdict = Irreducibility::Irreducible;
		out.note = "endomorphisms form a division algebra of dimension " + std::to_string(e.size());
		return out;
	}
	out.verdict = Irreducibility::Inconclusive;
	out.note = "no split found; End dimension " + std::to_string(e.size());
	return out;
}

} // namespace liepq
