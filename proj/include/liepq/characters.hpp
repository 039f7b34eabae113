#pragma once

#include "errors.hpp"
#include "lie_algebra.hpp"
#include "linalg.hpp"
#include "representation.hpp"
#include "so_pq.hpp"

#include <vector>

namespace liepq {

// Boost of R^{3,1} in the (e1, e4) plane with e^t = lambda:
// cosh t = (lambda + 1/lambda)/2, sinh t = (lambda - 1/lambda)/2.
struct BoostElement {
	Rational lambda;
	Matrix matrix_on_V;
};

inline BoostElement boost(const Rational &lambda)
{
	if (lambda.sign() <= 0)
		throw ContractError("boost: lambda must be positive");
	Rational inv = lambda.inverse();
	Rational ch = (lambda + inv) / Rational(2), sh = (lambda - inv) / Rational(2);
	Matrix g = Matrix::identity(4);
	g(0, 0) = ch;
	g(3, 3) = ch;
	g(0, 3) = sh;
	g(3, 0) = sh;
	return {lambda, g};
}

// The same boost seen on C^2_R: realified diag(mu, 1/mu) with mu^2 = lambda.
inline Matrix boost_on_c2(const Rational &mu)
{
	if (mu.sign() <= 0)
		throw ContractError("boost_on_c2: mu must be positive");
	Matrix d{{mu, 0}, {0, mu.inverse()}};
	return realify(d, Matrix(2, 2));
}

// chi(wedge^2 V)(g) = (chi(g)^2 - chi(g^2)) / 2
inline Rational wedge_character(const Matrix &g)
{
	Rational t = g.trace();
	return (t * t - (g * g).trace()) / Rational(2);
}

struct CharacterReport {
	Rational mu, lambda;
	Rational chi_adjoint;   // tr Ad g on so(3,1)
	Rational wedge_r31;     // wedge character of the boost on R^{3,1}
	Rational wedge_c2;      // wedge character of diag(mu, 1/mu) on C^2_R
	Rational residual_r31;  // wedge_r31 - chi_adjoint, expected 0
	Rational residual_c2;   // wedge_c2 - chi_adjoint, expected nonzero
	Rational chi_adjoint_sl2c; // tr Ad h on sl(2,C)_R, equals chi_adjoint
};

// mu is the primary parameter; lambda = mu^2 keeps both sides rational.
inline CharacterReport character_discrimination_test(const Rational &mu)
{
	if (mu.sign() <= 0 || mu == Rational(1))
		throw ContractError("character_discrimination_test: need mu > 0, mu != 1");
	CharacterReport r;
	r.mu = mu;
	r.lambda = mu * mu;
	auto g = boost(r.lambda).matrix_on_V;
	auto so31 = so_pq_algebra(3, 1);
	r.chi_adjoint = adjoint_action(g, so31).trace();
	r.wedge_r31 = wedge_character(g);
	Matrix h = boost_on_c2(mu);
	r.wedge_c2 = wedge_character(h);
	r.residual_r31 = r.wedge_r31 - r.chi_adjoint;
	r.residual_c2 = r.wedge_c2 - r.chi_adjoint;
	r.chi_adjoint_sl2c = adjoint_action(h, sl2c_realified()).trace();
	return r;
}

struct ConstrainedFormReport {
	size_t form_space_dim = 0;         // invariant symmetric forms on the adjoint
	std::vector<Matrix> constrained;   // forms with B(u, J u') = 0 on the compact form
	bool killing_spans = false;        // the constrained space is spanned by K
	bool twisted_violates = false;     // K(., J .) breaks the constraint
};

// Invariant symmetric forms B on sl(2,C)_R with u perpendicular to J u for
// all u in the compact form.
inline ConstrainedFormReport constrained_form_uniqueness(const Representation &adjoint, const Subspace &compact)
{
	const auto &alg = adjoint.algebra();
	if (alg.dim() != 6 || adjoint.module_dim() != 6 || compact.ambient_dim() != 6)
		throw ContractError("constrained_form_uniqueness: expects the adjoint of sl(2,C)_R");
	const Matrix &k = alg.killing().gram;
	if (inertia_of_diagonalizable_form(restrict_form(alg.killing(), compact)) != Inertia{0, compact.dim(), 0})
		throw ContractError("constrained_form_uniqueness: Killing form is not negative definite on the compact form");
	Matrix j = sl2c_complex_structure();
	ConstrainedFormReport rep;
	auto forms = invariant_symmetric_forms(adjoint);
	rep.form_space_dim = forms.size();
	auto cb = compact.basis();
	auto constraint = [&](const Matrix &b) {
		std::vector<Rational> vals;
		for (auto &u : cb)
			for (auto &w : cb)
				vals.push_back(dot(u, mat_vec(b, mat_vec(j, w))));
		return vals;
	};
	// one equation per (u, u') pair, unknowns = coefficients on the form basis
	const size_t npairs = cb.size() * cb.size();
	Matrix sys(npairs, forms.size());
	for (size_t f = 0; f < forms.size(); ++f) {
		auto vals = constraint(forms[f]);
		for (size_t r = 0; r < npairs; ++r)
			sys(r, f) = vals[r];
	}
	Subspace sol = kernel(sys);
	for (auto &coef : sol.basis()) {
		Matrix b(6, 6);
		for (size_t f = 0; f < forms.size(); ++f)
			b.add_scaled(coef[f], forms[f]);
		rep.constrained.push_back(std::move(b));
	}
	rep.killing_spans = rep.constrained.size() == 1 &&
	                    rank_of_vectors(36, {rep.constrained[0].flatten(), k.flatten()}) == 1;
	Matrix twisted = k * j;
	bool all_zero = true;
	for (auto &v : constraint(twisted))
		all_zero = all_zero && v.is_zero();
	rep.twisted_violates = !all_zero;
	return rep;
}

} // namespace liepq
