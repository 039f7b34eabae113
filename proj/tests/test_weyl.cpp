#include "catch_amalgamated.hpp"

#include "liepq/weyl.hpp"

#include <set>

using namespace liepq;

namespace {

WeightVector w(std::initializer_list<Rational> xs) { return WeightVector(xs); }

const Rational h(1, 2);

// Exhaustive search over a label box without pruning.
std::multiset<std::pair<std::vector<Rational>, long>> brute_force(const RootSystem &rs, size_t bound, size_t box)
{
	std::multiset<std::pair<std::vector<Rational>, long>> out;
	std::vector<size_t> m(rs.rank, 0);
	while (true) {
		size_t k = 0;
		while (k < rs.rank && m[k] == box)
			m[k++] = 0;
		if (k == rs.rank)
			break;
		++m[k];
		auto lam = weight_from_labels(rs, m);
		Rational d = weyl_dim(rs, lam);
		if (d <= Rational(static_cast<long>(bound)))
			out.insert({lam, static_cast<long>(d.to_double())});
	}
	return out;
}

} // namespace

TEST_CASE("root system invariants", "[weyl]")
{
	for (size_t r = 2; r <= 8; ++r) {
		auto b = root_system(RootKind::B, r);
		auto d = root_system(RootKind::D, r);
		CHECK(b.positive_roots.size() == r * r);
		CHECK(d.positive_roots.size() == r * (r - 1));
		for (size_t i = 0; i < r; ++i) {
			CHECK(b.rho[i] == Rational(static_cast<long>(2 * (r - i) - 1), 2));
			CHECK(d.rho[i] == Rational(static_cast<long>(r - 1 - i)));
		}
		CHECK(b.fundamental_weights.size() == r);
		CHECK(d.fundamental_weights.size() == r);
	}
	CHECK_THROWS_AS(root_system(RootKind::B, 1), ContractError);
	CHECK(root_system(RootKind::D, 3).flag == "D3 = A3");
	CHECK_FALSE(root_system(RootKind::D, 2).flag.empty());
	CHECK(root_system(RootKind::D, 4).flag.empty());
}

TEST_CASE("weyl_dim examples", "[weyl]")
{
	auto d4 = root_system(RootKind::D, 4);
	CHECK(weyl_dim(d4, w({0, 0, 0, 0})) == Rational(1));
	CHECK(weyl_dim(d4, w({1, 0, 0, 0})) == Rational(8));
	CHECK(weyl_dim(d4, w({h, h, h, h})) == Rational(8));
	CHECK(weyl_dim(d4, w({h, h, h, -h})) == Rational(8));
	CHECK(weyl_dim(d4, w({1, 1, 0, 0})) == Rational(28));
	auto b4 = root_system(RootKind::B, 4);
	CHECK(weyl_dim(b4, w({h, h, h, h})) == Rational(16));
	CHECK(weyl_dim(b4, w({1, 1, 0, 0})) == Rational(36));
	auto b2 = root_system(RootKind::B, 2);
	CHECK(weyl_dim(b2, w({h, h})) == Rational(4));
	CHECK(weyl_dim(b2, w({1, 1})) == Rational(10));
	CHECK_THROWS_AS(weyl_dim(d4, w({0, 1, 0, 0})), ContractError);
	CHECK_THROWS_AS(weyl_dim(b2, w({1, -1})), ContractError);
	CHECK_THROWS_AS(weyl_dim(b2, w({1, h})), ContractError);
}

TEST_CASE("vector and adjoint dimensions", "[weyl][property]")
{
	for (size_t r = 2; r <= 8; ++r) {
		auto b = root_system(RootKind::B, r);
		auto d = root_system(RootKind::D, r);
		WeightVector e1(r);
		e1[0] = 1;
		CHECK(weyl_dim(b, e1) == Rational(static_cast<long>(2 * r + 1)));
		CHECK(weyl_dim(d, e1) == Rational(static_cast<long>(2 * r)));
		WeightVector adj(r);
		adj[0] = adj[1] = 1;
		if (r > 2) {
			CHECK(weyl_dim(b, adj) == Rational(static_cast<long>(r * (2 * r + 1))));
			CHECK(weyl_dim(d, adj) == Rational(static_cast<long>(r * (2 * r - 1))));
		}
		WeightVector spin(r, h);
		CHECK(weyl_dim(b, spin) == Rational(1L << r));
		CHECK(weyl_dim(d, spin) == Rational(1L << (r - 1)));
	}
}

TEST_CASE("smallest-module tables", "[weyl]")
{
	auto dims = [](RootKind k, size_t r, size_t bound) {
		std::vector<long> out;
		for (auto &row : enumerate_up_to_dim(root_system(k, r), bound))
			out.push_back(static_cast<long>(row.dim.to_double()));
		return out;
	};
	CHECK(dims(RootKind::B, 2, 5) == std::vector<long>{5, 4});
	CHECK(dims(RootKind::D, 3, 6) == std::vector<long>{6, 4, 4});
	CHECK(dims(RootKind::D, 4, 8) == std::vector<long>{8, 8, 8});
	CHECK(dims(RootKind::B, 3, 7) == std::vector<long>{7});
	CHECK(dims(RootKind::B, 4, 9) == std::vector<long>{9});
	CHECK(dims(RootKind::D, 5, 10) == std::vector<long>{10});
	CHECK(dims(RootKind::B, 4, 8).empty());
	auto b2 = enumerate_up_to_dim(root_system(RootKind::B, 2), 5);
	CHECK(b2[0].weight == w({1, 0}));
	CHECK(b2[1].weight == w({h, h}));
	CHECK_THROWS_AS(enumerate_up_to_dim(root_system(RootKind::B, 2), 0), ContractError);
}

TEST_CASE("B_r minimum dimension is 2r+1 for r >= 3", "[weyl][property]")
{
	for (size_t r = 3; r <= 7; ++r) {
		auto rows = enumerate_up_to_dim(root_system(RootKind::B, r), 2 * r + 1);
		REQUIRE(rows.size() == 1);
		CHECK(rows[0].dim == Rational(static_cast<long>(2 * r + 1)));
	}
}

TEST_CASE("pruned enumeration agrees with exhaustive search", "[weyl][property]")
{
	for (auto [kind, r, bound] : std::vector<std::tuple<RootKind, size_t, size_t>>{
	         {RootKind::B, 2, 40}, {RootKind::D, 3, 30}, {RootKind::D, 4, 60}, {RootKind::B, 3, 50}}) {
		auto rs = root_system(kind, r);
		std::multiset<std::pair<std::vector<Rational>, long>> got;
		for (auto &row : enumerate_up_to_dim(rs, bound))
			got.insert({row.weight, static_cast<long>(row.dim.to_double())});
		CHECK(got == brute_force(rs, bound, 6));
	}
}

TEST_CASE("enumeration is closed under the D_r chirality flip", "[weyl][property]")
{
	for (size_t r = 3; r <= 5; ++r) {
		auto rows = enumerate_up_to_dim(root_system(RootKind::D, r), 64);
		std::set<std::vector<Rational>> weights;
		for (auto &row : rows)
			weights.insert(row.weight);
		for (auto wt : weights) {
			wt.back() = -wt.back();
			CHECK(weights.count(wt) == 1);
		}
	}
}

TEST_CASE("simple complex algebras by dimension", "[weyl]")
{
	CHECK_FALSE(no_simple_complex_algebra_of_dim(18).attained);
	CHECK(no_simple_complex_algebra_of_dim(36).candidates == std::vector<std::string>{"B4", "C4"});
	CHECK(no_simple_complex_algebra_of_dim(10).candidates == std::vector<std::string>{"B2"});
	CHECK_FALSE(no_simple_complex_algebra_of_dim(5).attained);
	CHECK(no_simple_complex_algebra_of_dim(28).candidates == std::vector<std::string>{"D4"});
	CHECK(no_simple_complex_algebra_of_dim(248).candidates == std::vector<std::string>{"E8"});
	CHECK(no_simple_complex_algebra_of_dim(3).candidates == std::vector<std::string>{"A1"});
}
