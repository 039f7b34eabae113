#include "catch_amalgamated.hpp"

#include "liepq/characters.hpp"
#include "liepq/representation.hpp"
#include "liepq/so_pq.hpp"

#include <random>

using namespace liepq;

namespace {

bool intertwines(const Representation &v, const Representation &w, const Matrix &phi)
{
	for (size_t i = 0; i < v.algebra().dim(); ++i)
		if (phi * v.action(i) != w.action(i) * phi)
			return false;
	return true;
}

// Hom space by brute force over all basis elements, as an oracle for the
// generator-reduced solver.
size_t hom_dim_oracle(const Representation &v, const Representation &w)
{
	return hom_space(v, w, HomOptions{false}).size();
}

Representation c2r() { return defining_rep(sl2c_realified()); }

} // namespace

TEST_CASE("representation validation", "[rep]")
{
	auto l = so_pq_algebra(2, 1);
	auto bad = l.basis();
	bad[0] = Rational(2) * bad[0];
	CHECK_THROWS_AS(Representation(l, bad), ContractError);
	CHECK_THROWS_AS(Representation(l, {Matrix::identity(3)}), DimensionError);
	for (auto [p, q] : std::vector<std::pair<size_t, size_t>>{{2, 1}, {3, 1}, {2, 2}, {4, 4}}) {
		CHECK_FALSE(standard_rep(p, q).homomorphism_violation());
		CHECK_FALSE(wedge_square_rep(standard_rep(p, q)).homomorphism_violation());
		CHECK_FALSE(adjoint_rep(so_pq_algebra(p, q)).homomorphism_violation());
		CHECK_FALSE(dual(standard_rep(p, q)).homomorphism_violation());
	}
	CHECK_FALSE(c2r().homomorphism_violation());
}

TEST_CASE("Hom(wedge^2 R^{p,q}, adjoint)", "[rep]")
{
	const std::vector<std::tuple<size_t, size_t, size_t>> table{
	    {2, 1, 1}, {4, 1, 1}, {3, 2, 1}, {5, 1, 1}, {4, 2, 1}, {3, 3, 1}, {4, 4, 1}, {3, 1, 2}, {2, 2, 2}};
	for (auto [p, q, expect] : table) {
		auto v = wedge_square_rep(standard_rep(p, q));
		auto w = adjoint_rep(so_pq_algebra(p, q));
		auto h = hom_space(v, w);
		INFO(p << "," << q);
		CHECK(h.size() == expect);
		for (auto &phi : h)
			CHECK(intertwines(v, w, phi));
		// T_1 lies in the solved space
		auto span = std::vector<Vector>{};
		for (auto &phi : h)
			span.push_back(phi.flatten());
		Matrix t1 = t_c(p, q, Rational(1));
		CHECK(Subspace::span(t1.rows() * t1.cols(), span).contains(t1.flatten()));
		if (p + q <= 5)
			CHECK(hom_dim_oracle(v, w) == expect);
	}
}

TEST_CASE("sl(2,C) complex structure is the extra (3,1) intertwiner", "[rep]")
{
	// On sl(2,C)_R multiplication by i commutes with ad, so End(adjoint) has
	// dimension 2; through the (3,1) isomorphism this is the second map.
	auto l = sl2c_realified();
	auto ad = adjoint_rep(l);
	Matrix j = sl2c_complex_structure();
	CHECK(intertwines(ad, ad, j));
	CHECK(j * j == Rational(-1) * Matrix::identity(6));
	CHECK(hom_space(ad, ad).size() == 2);
}

TEST_CASE("hom_space rejects mismatched algebras", "[rep]")
{
	CHECK_THROWS_AS(hom_space(standard_rep(2, 1), standard_rep(3, 1)), ContractError);
	CHECK_THROWS_AS(hom_space(standard_rep(2, 1), standard_rep(1, 2)), ContractError);
}

TEST_CASE("invariant forms", "[rep]")
{
	for (auto [p, q] : std::vector<std::pair<size_t, size_t>>{{1, 1}, {2, 1}, {3, 1}, {2, 2}, {3, 3}}) {
		auto forms = invariant_symmetric_forms(standard_rep(p, q));
		REQUIRE(forms.size() == 1);
		CHECK(rank_of_vectors((p + q) * (p + q), {forms[0].flatten(), ipq(p, q).flatten()}) == 1);
		CHECK(is_invariant_form(standard_rep(p, q), ipq(p, q)));
	}
	auto sl2c = sl2c_realified();
	CHECK(invariant_symmetric_forms(adjoint_rep(sl2c)).size() == 2);
	CHECK(invariant_symmetric_forms(c2r()).size() == 0);
	// the complex determinant pairing gives skew forms on C^2_R
	CHECK(invariant_skew_forms(c2r()).size() == 2);
	CHECK_FALSE(is_invariant_form(standard_rep(2, 1), Matrix::identity(3)));
}

TEST_CASE("form / Hom duality", "[rep][property]")
{
	std::vector<Representation> reps{standard_rep(2, 1), standard_rep(3, 1), wedge_square_rep(standard_rep(3, 1)),
	                                 adjoint_rep(so_pq_algebra(2, 2)), c2r(), adjoint_rep(sl2c_realified())};
	for (auto &v : reps) {
		size_t sym = invariant_symmetric_forms(v).size(), skew = invariant_skew_forms(v).size();
		CHECK(sym + skew == hom_space(v, dual(v)).size());
	}
}

TEST_CASE("cyclic submodules", "[rep]")
{
	auto s21 = standard_rep(2, 1);
	CHECK(cyclic_submodule(s21, Vector{0, 0, 0}).is_zero());
	CHECK(cyclic_submodule(s21, Vector{1, -2, 5}).is_full());
	auto s11 = standard_rep(1, 1);
	CHECK(cyclic_submodule(s11, Vector{1, 0}).is_full());
	auto null_line = cyclic_submodule(s11, Vector{1, 1});
	CHECK(null_line.dim() == 1);
	CHECK(is_invariant(s11, null_line));
}

TEST_CASE("irreducibility verdicts", "[rep]")
{
	auto v31 = is_irreducible(standard_rep(3, 1));
	CHECK(v31.verdict == Irreducibility::Irreducible);
	CHECK(v31.endomorphism_dim == 1);

	auto v11 = is_irreducible(standard_rep(1, 1));
	CHECK(v11.verdict == Irreducibility::Reducible);
	REQUIRE(v11.witness);
	CHECK(v11.witness->dim() == 1);
	CHECK(is_invariant(standard_rep(1, 1), *v11.witness));

	auto vc = is_irreducible(c2r());
	CHECK(vc.verdict == Irreducibility::Irreducible);
	CHECK(vc.endomorphism_dim == 2);

	auto ad31 = is_irreducible(adjoint_rep(so_pq_algebra(3, 1)));
	CHECK(ad31.verdict == Irreducibility::Irreducible);
	CHECK(ad31.endomorphism_dim == 2);

	auto ad22 = is_irreducible(adjoint_rep(so_pq_algebra(2, 2)));
	CHECK(ad22.verdict == Irreducibility::Reducible);
	REQUIRE(ad22.witness);
	CHECK(ad22.witness->dim() == 3);

	// R^{2,1} + R^{2,1}: End = M_2(Q), splits
	auto doubled = direct_sum(standard_rep(2, 1), standard_rep(2, 1));
	auto vd = is_irreducible(doubled);
	CHECK(vd.verdict == Irreducibility::Reducible);
	CHECK(vd.endomorphism_dim == 4);

	// non-semisimple, non-abelian algebra
	auto borel = LieAlgebra::from_matrices({Matrix{{1, 0}, {0, -1}}, Matrix{{0, 1}, {0, 0}}});
	CHECK_THROWS_AS(is_irreducible(defining_rep(borel)), ContractError);
}

TEST_CASE("Schur consistency", "[rep][property]")
{
	for (auto rep : {standard_rep(3, 2), c2r(), adjoint_rep(so_pq_algebra(3, 1))}) {
		REQUIRE(is_irreducible(rep).verdict == Irreducibility::Irreducible);
		const size_t n = rep.module_dim();
		for (auto &e : hom_space(rep, rep)) {
			auto roots = factor_over_q(minimal_polynomial(e));
			bool rational_eigenvalue = false;
			for (auto &f : roots)
				rational_eigenvalue = rational_eigenvalue || f.factor.degree() == 1;
			if (rational_eigenvalue) {
				Rational s = e(0, 0);
				CHECK(e == s * Matrix::identity(n));
			}
		}
	}
}

TEST_CASE("direct sums and restriction", "[rep]")
{
	auto s = standard_rep(2, 1);
	auto d = direct_sum(s, s);
	CHECK(d.module_dim() == 6);
	auto full = restrict(s, Subspace::full(3));
	for (size_t i = 0; i < 3; ++i)
		CHECK(full.action(i) == s.action(i));
	CHECK_THROWS_AS(restrict(s, Subspace::span(3, {Vector{1, 0, 0}})), ContractError);
}

TEST_CASE("complement of so(2,1) in so(3,1) is R^{2,1}", "[rep]")
{
	// so(2,1) sits in so(3,1) on the coordinates {0, 1, 3}
	auto so31 = so_pq_algebra(3, 1);
	auto so21 = so_pq_algebra(2, 1);
	std::vector<Vector> hb;
	for (auto &x : so21.basis()) {
		Matrix big(4, 4);
		size_t idx[3] = {0, 1, 3};
		for (size_t i = 0; i < 3; ++i)
			for (size_t j = 0; j < 3; ++j)
				big(idx[i], idx[j]) = x(i, j);
		hb.push_back(*so31.coordinates(big));
	}
	auto h = Subspace::span(6, hb);
	REQUIRE(is_subalgebra(so31, h));
	auto v = orthogonal_complement(so31.killing(), h);
	REQUIRE(v.dim() == 3);
	std::vector<Matrix> acts;
	for (auto &x : hb) {
		Matrix a = so31.ad(x), m(3, 3);
		for (size_t k = 0; k < 3; ++k) {
			auto c = v.coordinates(mat_vec(a, v.basis()[k]));
			REQUIRE(c);
			for (size_t r = 0; r < 3; ++r)
				m(r, k) = (*c)[r];
		}
		acts.push_back(m);
	}
	Representation vrep(so21, 3, acts);
	auto h21 = hom_space(standard_rep(2, 1), vrep);
	REQUIRE(h21.size() == 1);
	CHECK(inverse(h21[0]).has_value());
}

TEST_CASE("wedge action and the trace identity", "[rep][property]")
{
	CHECK(wedge_action(Matrix::identity(4)) == Matrix::identity(6));
	std::mt19937 rng(5);
	std::uniform_int_distribution<int> num(-4, 4), den(1, 3);
	for (int trial = 0; trial < 20; ++trial) {
		Matrix g(4, 4);
		do {
			for (size_t i = 0; i < 4; ++i)
				for (size_t j = 0; j < 4; ++j)
					g(i, j) = Rational(num(rng), den(rng));
		} while (determinant(g).is_zero());
		Rational t = g.trace();
		CHECK(wedge_action(g).trace() == (t * t - (g * g).trace()) / Rational(2));
		Matrix h(4, 4);
		do {
			for (size_t i = 0; i < 4; ++i)
				for (size_t j = 0; j < 4; ++j)
					h(i, j) = Rational(num(rng), den(rng));
		} while (determinant(h).is_zero());
		CHECK(wedge_action(g * h) == wedge_action(g) * wedge_action(h));
	}
}

TEST_CASE("boost family", "[rep]")
{
	for (auto lam : {Rational(4), Rational(9, 4), Rational(1, 3)}) {
		auto g = boost(lam).matrix_on_V;
		CHECK(g.transpose() * ipq(3, 1) * g == ipq(3, 1));
		CHECK(g * g == boost(lam * lam).matrix_on_V);
		auto ad = adjoint_action(g, so_pq_algebra(3, 1));
		CHECK(ad.rows() == 6);
	}
	CHECK_THROWS_AS(boost(Rational(-1)), ContractError);
	// conjugation by a non-orthogonal matrix leaves so(3,1)
	CHECK_THROWS_AS(adjoint_action(Matrix::diagonal({2, 1, 1, 1}), so_pq_algebra(3, 1)), NotStableError);
}

TEST_CASE("character discrimination", "[rep]")
{
	for (auto mu : {Rational(3, 2), Rational(2), Rational(3), Rational(5)}) {
		auto r = character_discrimination_test(mu);
		Rational lam = mu * mu;
		// independent closed forms for the boost with e^t = lambda
		CHECK(r.chi_adjoint == Rational(2) + Rational(2) * lam + Rational(2) / lam);
		CHECK(r.residual_r31 == Rational(0));
		CHECK(r.residual_c2 == -(mu - mu.inverse()) * (mu - mu.inverse()));
		CHECK(r.residual_c2 != Rational(0));
		CHECK(r.chi_adjoint_sl2c == r.chi_adjoint);
	}
	CHECK_THROWS_AS(character_discrimination_test(Rational(1)), ContractError);
}

TEST_CASE("constrained form uniqueness on sl(2,C)_R", "[rep]")
{
	auto ad = adjoint_rep(sl2c_realified());
	auto r = constrained_form_uniqueness(ad, su2_in_sl2c());
	CHECK(r.form_space_dim == 2);
	REQUIRE(r.constrained.size() == 1);
	CHECK(r.killing_spans);
	CHECK(r.twisted_violates);
	// not a compact form: the real span of H, E, F
	auto split = Subspace::span(6, {unit_vector(6, 0), unit_vector(6, 1), unit_vector(6, 2)});
	CHECK_THROWS_AS(constrained_form_uniqueness(ad, split), ContractError);
}
