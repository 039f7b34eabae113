#include "catch_amalgamated.hpp"

#include "liepq/lie_algebra.hpp"
#include "liepq/so_pq.hpp"

using namespace liepq;

namespace {

// Rotation generators of so(3), 1-based: L1 = E32 - E23, L2 = E13 - E31,
// L3 = E21 - E12.
std::vector<Matrix> rotation_generators()
{
	auto e = [](size_t i, size_t j) { return Matrix::unit(3, 3, i - 1, j - 1); };
	return {e(3, 2) - e(2, 3), e(1, 3) - e(3, 1), e(2, 1) - e(1, 2)};
}

LieAlgebra sl2()
{
	return LieAlgebra::from_matrices({Matrix{{1, 0}, {0, -1}}, Matrix{{0, 1}, {0, 0}}, Matrix{{0, 0}, {1, 0}}});
}

// Killing form straight from the definition: trace of the product of the
// adjoint matrices, each built from matrix commutators.
Matrix killing_oracle(const LieAlgebra &l)
{
	const size_t d = l.dim();
	std::vector<Matrix> ads;
	for (size_t i = 0; i < d; ++i) {
		Matrix a(d, d);
		for (size_t j = 0; j < d; ++j) {
			auto c = l.coordinates(commutator(l.basis()[i], l.basis()[j]));
			for (size_t k = 0; k < d; ++k)
				a(k, j) = (*c)[k];
		}
		ads.push_back(a);
	}
	Matrix k(d, d);
	for (size_t i = 0; i < d; ++i)
		for (size_t j = 0; j < d; ++j)
			k(i, j) = (ads[i] * ads[j]).trace();
	return k;
}

} // namespace

TEST_CASE("so(3) rotation generators", "[lie]")
{
	auto l = LieAlgebra::from_matrices(rotation_generators());
	Vector e1{1, 0, 0}, e2{0, 1, 0}, e3{0, 0, 1};
	CHECK(l.bracket(e1, e2) == e3);
	CHECK(l.bracket(e2, e3) == e1);
	CHECK(l.bracket(e3, e1) == e2);
	CHECK(l.killing().gram == Rational(-2) * Matrix::identity(3));
	CHECK(is_semisimple(l));
	CHECK_FALSE(jacobi_violation(l));
}

TEST_CASE("lexicographic so(3) basis bracket sign", "[lie]")
{
	auto l = so_pq_algebra(3, 0);
	// b0 = E01 - E10, b1 = E02 - E20, b2 = E12 - E21: [b0, b1] = -b2
	CHECK(l.bracket({1, 0, 0}, {0, 1, 0}) == Vector{0, 0, -1});
}

TEST_CASE("Killing form agrees with the definition", "[lie][property]")
{
	for (auto [p, q] : std::vector<std::pair<size_t, size_t>>{{2, 1}, {3, 1}, {2, 2}, {4, 1}, {3, 2}})
		CHECK(killing_form(so_pq_algebra(p, q)).gram == killing_oracle(so_pq_algebra(p, q)));
	CHECK(killing_form(sl2()).gram == killing_oracle(sl2()));
}

TEST_CASE("construction errors", "[lie]")
{
	CHECK_THROWS_AS(LieAlgebra::from_matrices({Matrix{{0, 1}, {0, 0}}, Matrix{{0, 0}, {1, 0}}}), NotClosedError);
	StructureTensor t(2);
	t.set(0, 1, 0, Rational(1));
	CHECK_THROWS_AS(LieAlgebra::from_structure(t), ContractError);
	t.set(1, 0, 0, Rational(-1));
	auto ab = LieAlgebra::from_structure(t);
	CHECK(ab.dim() == 2);
	CHECK_THROWS_AS(ab.basis(), UnsupportedError);
	CHECK_THROWS_AS(ab.coordinates(Matrix(2, 2)), UnsupportedError);
}

TEST_CASE("bracket length mismatch", "[lie]")
{
	CHECK_THROWS_AS(sl2().bracket({1, 0}, {0, 1, 0}), DimensionError);
}

TEST_CASE("theta involution", "[lie]")
{
	auto so21 = so_pq_algebra(2, 1);
	Matrix th = theta_involution(so21);
	CHECK(th * th == Matrix::identity(3));
	// rotation in the positive block is fixed, boosts are negated
	CHECK(th == Matrix::diagonal({1, -1, -1}));
	auto sl = sl2();
	CHECK(theta_involution(sl) == Matrix{{-1, 0, 0}, {0, 0, -1}, {0, -1, 0}});
	// upper-triangular Borel is not stable under -X^t
	auto borel = LieAlgebra::from_matrices({Matrix{{1, 0}, {0, -1}}, Matrix{{0, 1}, {0, 0}}});
	CHECK_THROWS_AS(theta_involution(borel), NotStableError);
}

TEST_CASE("Jacobi detection on a broken tensor", "[lie]")
{
	// sl(2) with [h, e] = 3e: still antisymmetric, no longer Lie
	auto l = sl2();
	StructureTensor t(3);
	for (size_t i = 0; i < 3; ++i)
		for (size_t j = 0; j < 3; ++j)
			for (size_t k = 0; k < 3; ++k)
				t.set(i, j, k, l.structure()(i, j, k));
	t.set(0, 1, 1, Rational(3));
	t.set(1, 0, 1, Rational(-3));
	CHECK(jacobi_violation(LieAlgebra::from_structure(t)));
	CHECK_FALSE(jacobi_violation(l));
}

TEST_CASE("trace form and Cartan criterion", "[lie]")
{
	auto so31 = so_pq_algebra(3, 1);
	CHECK(killing_form(so31).gram == Rational(2) * trace_form(so31).gram);
	auto ab = LieAlgebra::from_structure(StructureTensor(3));
	CHECK(is_abelian(ab));
	CHECK_FALSE(is_semisimple(ab));
	auto borel = LieAlgebra::from_matrices({Matrix{{1, 0}, {0, -1}}, Matrix{{0, 1}, {0, 0}}});
	CHECK_FALSE(is_semisimple(borel));
}

TEST_CASE("centralizer, closure, ideals", "[lie]")
{
	auto l = sl2();
	auto h = Subspace::span(3, {Vector{1, 0, 0}});
	CHECK(centralizer(l, h) == h);
	CHECK(centralizer(l, Subspace::full(3)).is_zero());
	auto gens = Subspace::span(3, {Vector{0, 1, 0}, Vector{0, 0, 1}});
	CHECK(subalgebra_closure(l, gens).is_full());
	auto borel = Subspace::span(3, {Vector{1, 0, 0}, Vector{0, 1, 0}});
	CHECK(is_subalgebra(l, borel));
	CHECK_FALSE(is_ideal(l, borel));
	CHECK_FALSE(is_subalgebra(l, gens));
}

TEST_CASE("maximal subalgebras of sl(2)", "[lie]")
{
	auto l = sl2();
	auto borel = Subspace::span(3, {Vector{1, 0, 0}, Vector{0, 1, 0}});
	CHECK(is_maximal_subalgebra(l, borel).maximal);
	auto cartan = Subspace::span(3, {Vector{1, 0, 0}});
	auto v = is_maximal_subalgebra(l, cartan);
	CHECK_FALSE(v.maximal);
	REQUIRE(v.witness);
	CHECK(v.witness->dim() == 2);
	CHECK(is_subalgebra(l, *v.witness));
	CHECK(v.witness->contains(Vector{1, 0, 0}));
	CHECK_THROWS_AS(is_maximal_subalgebra(l, Subspace::span(3, {Vector{0, 1, 0}, Vector{0, 0, 1}})), ContractError);
}

TEST_CASE("orthogonal complement and restricted forms", "[lie]")
{
	auto l = so_pq_algebra(3, 1);
	const auto &k = l.killing();
	// so(3) inside so(3,1): first three lexicographic generators are (0,1),(0,2),(1,2)
	auto h = Subspace::span(6, {unit_vector(6, 0), unit_vector(6, 1), unit_vector(6, 3)});
	REQUIRE(is_subalgebra(l, h));
	auto perp = orthogonal_complement(k, h);
	CHECK(perp.dim() == 3);
	for (auto &x : perp.basis())
		for (auto &y : h.basis())
			CHECK(k(x, y).is_zero());
	CHECK(inertia_of_diagonalizable_form(restrict_form(k, h)) == Inertia{0, 3, 0});
	CHECK(inertia_of_diagonalizable_form(restrict_form(k, perp)) == Inertia{3, 0, 0});
}

TEST_CASE("generating subsets and direct products", "[lie]")
{
	auto l = so_pq_algebra(4, 1);
	auto gens = generating_basis_subset(l);
	std::vector<Vector> vs;
	for (auto g : gens)
		vs.push_back(unit_vector(l.dim(), g));
	CHECK(subalgebra_closure(l, Subspace::span(l.dim(), vs)).is_full());
	CHECK(gens.size() < l.dim());
	auto prod = direct_product(sl2(), sl2());
	CHECK(prod.dim() == 6);
	CHECK_FALSE(jacobi_violation(prod));
	CHECK(is_semisimple(prod));
	CHECK(is_ideal(prod, Subspace::span(6, {unit_vector(6, 0), unit_vector(6, 1), unit_vector(6, 2)})));
}
