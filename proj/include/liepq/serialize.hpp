#pragma once

#include "lie_algebra.hpp"
#include "linalg.hpp"
#include "so_pq.hpp"

#include <json.hpp>

namespace liepq {

using json = nlohmann::json;

inline json to_json(const Rational &r) { return r.fraction_string(); }

inline json to_json(const Vector &v)
{
	json a = json::array();
	for (auto &x : v)
		a.push_back(x.fraction_string());
	return a;
}

inline json to_json(const Matrix &m)
{
	json rows = json::array();
	for (size_t i = 0; i < m.rows(); ++i) {
		json r = json::array();
		for (size_t j = 0; j < m.cols(); ++j)
			r.push_back(m(i, j).fraction_string());
		rows.push_back(std::move(r));
	}
	return rows;
}

inline json to_json(const Subspace &s)
{
	json b = json::array();
	for (auto &v : s.basis())
		b.push_back(to_json(v));
	return {{"ambient_dim", s.ambient_dim()}, {"dim", s.dim()}, {"basis", b}};
}

inline json to_json(const Inertia &in) { return json::array({in.n_plus, in.n_minus, in.n_zero}); }

// Nonzero structure constants [b_i, b_j] = sum_k c_ijk b_k, listed for i < j.
inline json to_json(const LieAlgebra &l)
{
	json s = json::array();
	for (size_t i = 0; i < l.dim(); ++i)
		for (size_t j = i + 1; j < l.dim(); ++j)
			for (auto &[k, c] : l.structure().terms(i, j))
				s.push_back(json::array({i, j, k, c.fraction_string()}));
	json out{{"dim", l.dim()}, {"realization", l.is_matrix() ? "matrix" : "abstract"}, {"structure", s}};
	if (l.is_matrix()) {
		json b = json::array();
		for (auto &m : l.basis())
			b.push_back(to_json(m));
		out["basis"] = b;
		out["matrix_size"] = l.matrix_size();
	}
	return out;
}

inline json to_json(const DeformedAlgebra &d)
{
	json out = to_json(d.algebra);
	out["p"] = d.signature.p;
	out["q"] = d.signature.q;
	out["c"] = d.c.fraction_string();
	out["blocks"] = {{"so", d.so_block}, {"vec", d.vec_block}};
	return out;
}

} // namespace liepq
