#pragma once

#include "errors.hpp"
#include "rational.hpp"

#include <algorithm>
#include <string>
#include <vector>

namespace liepq {

enum class RootKind { B, D };

inline const char *to_string(RootKind k) { return k == RootKind::B ? "B" : "D"; }

using WeightVector = std::vector<Rational>; // epsilon coordinates

struct RootSystem {
	RootKind kind = RootKind::B;
	size_t rank = 0;
	std::vector<WeightVector> positive_roots;
	WeightVector rho;
	std::vector<WeightVector> fundamental_weights;
	std::string flag; // set for D2 and D3, which are not simple of type D
};

inline Rational inner(const WeightVector &a, const WeightVector &b)
{
	Rational s;
	for (size_t i = 0; i < a.size(); ++i)
		s.add_mul(a[i], b[i]);
	return s;
}

inline RootSystem root_system(RootKind kind, size_t r)
{
	if (r < 2)
		throw ContractError("root_system: rank must be at least 2");
	RootSystem rs;
	rs.kind = kind;
	rs.rank = r;
	auto eps = [r](size_t i) {
		WeightVector v(r);
		v[i] = 1;
		return v;
	};
	for (size_t i = 0; i < r; ++i)
		for (size_t j = i + 1; j < r; ++j) {
			WeightVector minus(r), plus(r);
			minus[i] = 1;
			minus[j] = -1;
			plus[i] = 1;
			plus[j] = 1;
			rs.positive_roots.push_back(minus);
			rs.positive_roots.push_back(plus);
		}
	if (kind == RootKind::B)
		for (size_t i = 0; i < r; ++i)
			rs.positive_roots.push_back(eps(i));
	rs.rho = WeightVector(r);
	for (auto &a : rs.positive_roots)
		for (size_t i = 0; i < r; ++i)
			rs.rho[i] += a[i];
	for (auto &x : rs.rho)
		x /= Rational(2);

	const Rational half(1, 2);
	const size_t plain = kind == RootKind::B ? r - 1 : r - 2;
	for (size_t i = 0; i < plain; ++i) {
		WeightVector w(r);
		for (size_t k = 0; k <= i; ++k)
			w[k] = 1;
		rs.fundamental_weights.push_back(w);
	}
	if (kind == RootKind::D) {
		WeightVector w(r, half);
		w[r - 1] = -half;
		rs.fundamental_weights.push_back(w);
	}
	rs.fundamental_weights.push_back(WeightVector(r, half));
	if (kind == RootKind::D && r == 2)
		rs.flag = "D2 = A1 x A1 is not simple";
	else if (kind == RootKind::D && r == 3)
		rs.flag = "D3 = A3";
	return rs;
}

inline bool is_dominant(const RootSystem &rs, const WeightVector &lam)
{
	if (lam.size() != rs.rank)
		return false;
	const size_t r = rs.rank;
	for (size_t i = 0; i + 1 < r; ++i)
		if (lam[i] < lam[i + 1])
			return false;
	if (rs.kind == RootKind::B)
		return lam[r - 1] >= Rational(0);
	return lam[r - 2] >= lam[r - 1].abs();
}

inline bool uniformly_integral(const WeightVector &lam)
{
	bool all_int = true, all_half = true;
	for (auto &x : lam) {
		all_int = all_int && x.is_integer();
		all_half = all_half && !x.is_integer() && (x * Rational(2)).is_integer();
	}
	return all_int || all_half;
}

// prod_{a > 0} <lam + rho, a> / <rho, a>
inline Rational weyl_dim(const RootSystem &rs, const WeightVector &lam)
{
	if (!is_dominant(rs, lam) || !uniformly_integral(lam))
		throw ContractError("weyl_dim: weight is not dominant and (half-)integral");
	Rational num(1), den(1);
	for (auto &a : rs.positive_roots) {
		Rational s;
		for (size_t i = 0; i < rs.rank; ++i)
			s.add_mul(lam[i] + rs.rho[i], a[i]);
		num *= s;
		den *= inner(rs.rho, a);
	}
	Rational d = num / den;
	if (!d.is_integer())
		throw InternalError("weyl_dim: non-integral dimension");
	return d;
}

inline WeightVector weight_from_labels(const RootSystem &rs, const std::vector<size_t> &m)
{
	WeightVector lam(rs.rank);
	for (size_t i = 0; i < rs.rank; ++i)
		for (size_t k = 0; k < rs.rank; ++k)
			lam[k].add_mul(Rational(static_cast<long>(m[i])), rs.fundamental_weights[i][k]);
	return lam;
}

struct WeightDim {
	WeightVector weight;
	Rational dim;
};

// All dominant lam != 0 with weyl_dim(lam) <= bound, by depth-first search
// over Dynkin labels. The dimension grows strictly in every label, so once a
// partial label vector (remaining labels zero) exceeds the bound no extension
// can come back under it. Sorted by decreasing dimension, then weight.
inline std::vector<WeightDim> enumerate_up_to_dim(const RootSystem &rs, size_t bound)
{
	if (bound < 1)
		throw ContractError("enumerate_up_to_dim: bound must be at least 1");
	std::vector<WeightDim> out;
	std::vector<size_t> m(rs.rank, 0);
	const Rational limit(static_cast<long>(bound));
	auto rec = [&](auto &&self, size_t k) -> void {
		if (k == rs.rank)
			return;
		for (m[k] = 1;; ++m[k]) {
			auto lam = weight_from_labels(rs, m);
			Rational d = weyl_dim(rs, lam);
			if (d > limit)
				break;
			out.push_back({lam, d});
			self(self, k + 1);
		}
		m[k] = 0;
		self(self, k + 1);
	};
	rec(rec, 0);
	std::sort(out.begin(), out.end(), [](const WeightDim &a, const WeightDim &b) {
		if (a.dim != b.dim)
			return a.dim > b.dim;
		return b.weight < a.weight;
	});
	return out;
}

struct SimpleDimScan {
	bool attained = false;
	std::vector<std::string> candidates; // e.g. "B4", "C4", "E8"
};

// Complex simple Lie algebras of dimension d among A_r (r >= 1), B_r (r >= 2),
// C_r (r >= 3), D_r (r >= 4) with r <= max_rank, and the exceptional ones.
inline SimpleDimScan no_simple_complex_algebra_of_dim(size_t d, size_t max_rank = 32)
{
	SimpleDimScan s;
	for (size_t r = 1; r <= max_rank; ++r) {
		if (r * (r + 2) == d)
			s.candidates.push_back("A" + std::to_string(r));
		if (r >= 2 && r * (2 * r + 1) == d)
			s.candidates.push_back("B" + std::to_string(r));
		if (r >= 3 && r * (2 * r + 1) == d)
			s.candidates.push_back("C" + std::to_string(r));
		if (r >= 4 && r * (2 * r - 1) == d)
			s.candidates.push_back("D" + std::to_string(r));
	}
	const std::pair<size_t, const char *> exceptional[] = {{14, "G2"}, {52, "F4"}, {78, "E6"}, {133, "E7"}, {248, "E8"}};
	for (auto [dim, name] : exceptional)
		if (dim == d)
			s.candidates.push_back(name);
	s.attained = !s.candidates.empty();
	return s;
}

} // namespace liepq
