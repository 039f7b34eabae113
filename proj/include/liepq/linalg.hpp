#pragma once

#include "errors.hpp"
#include "matrix.hpp"

#include <algorithm>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace liepq {

// Sparse row: (column, value) pairs, strictly increasing columns, no zeros.
using SparseRow = std::vector<std::pair<uint32_t, Rational>>;

inline SparseRow to_sparse(const Vector &v)
{
	SparseRow r;
	for (size_t j = 0; j < v.size(); ++j)
		if (!v[j].is_zero())
			r.emplace_back(static_cast<uint32_t>(j), v[j]);
	return r;
}

inline Vector to_dense(const SparseRow &r, size_t n)
{
	Vector v(n);
	for (auto &[j, x] : r)
		v[j] = x;
	return v;
}

namespace detail {

// a - f * b, both sorted sparse rows.
inline SparseRow sparse_axpy(const SparseRow &a, const Rational &f, const SparseRow &b)
{
	SparseRow out;
	out.reserve(a.size() + b.size());
	size_t i = 0, j = 0;
	while (i < a.size() || j < b.size()) {
		if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
			out.push_back(a[i++]);
		} else if (i == a.size() || b[j].first < a[i].first) {
			out.emplace_back(b[j].first, -(f * b[j].second));
			++j;
		} else {
			Rational x = a[i].second;
			x.sub_mul(f, b[j].second);
			if (!x.is_zero())
				out.emplace_back(a[i].first, std::move(x));
			++i;
			++j;
		}
	}
	return out;
}

} // namespace detail

// Incremental Gaussian elimination over Q on sparse rows. Rows are reduced
// against the current pivots on insertion and normalized to a leading 1; the
// fully reduced echelon form is produced on demand.
class RowReducer {
public:
	explicit RowReducer(size_t cols) : cols_(cols), pivot_of_col_(cols, -1) {}

	size_t cols() const { return cols_; }
	size_t rank() const { return rows_.size(); }

	// Reduces `row` in place against the current pivots.
	void reduce(SparseRow &row) const
	{
		size_t idx = 0;
		while (idx < row.size()) {
			int p = pivot_of_col_[row[idx].first];
			if (p < 0) {
				++idx;
				continue;
			}
			Rational f = row[idx].second;
			row = detail::sparse_axpy(row, f, rows_[static_cast<size_t>(p)]);
		}
	}

	// Returns true when the row was independent of those already added.
	bool add(SparseRow row)
	{
		reduce(row);
		if (row.empty())
			return false;
		Rational inv = row.front().second.inverse();
		for (auto &e : row)
			e.second *= inv;
		pivot_of_col_[row.front().first] = static_cast<int>(rows_.size());
		pivots_.push_back(row.front().first);
		rows_.push_back(std::move(row));
		return true;
	}
	bool add(const Vector &v)
	{
		if (v.size() != cols_)
			throw DimensionError("RowReducer: row length mismatch");
		return add(to_sparse(v));
	}

	bool contains(const Vector &v) const
	{
		SparseRow r = to_sparse(v);
		reduce(r);
		return r.empty();
	}

	// Reduced row echelon form: rows sorted by pivot column, leading 1, zeros
	// above and below every pivot.
	std::vector<SparseRow> rref() const
	{
		std::vector<size_t> order(rows_.size());
		for (size_t k = 0; k < order.size(); ++k)
			order[k] = k;
		std::sort(order.begin(), order.end(), [&](size_t a, size_t b) { return pivots_[a] < pivots_[b]; });
		std::vector<SparseRow> out(rows_.size());
		std::vector<int> slot_of_col(cols_, -1);
		// Back substitution from the last pivot; rows with larger pivots are
		// already fully reduced when used.
		for (size_t k = order.size(); k-- > 0;) {
			SparseRow row = rows_[order[k]];
			size_t idx = 1;
			while (idx < row.size()) {
				int s = slot_of_col[row[idx].first];
				if (s < 0) {
					++idx;
					continue;
				}
				Rational f = row[idx].second;
				row = detail::sparse_axpy(row, f, out[static_cast<size_t>(s)]);
			}
			out[k] = std::move(row);
			slot_of_col[pivots_[order[k]]] = static_cast<int>(k);
		}
		return out;
	}

	std::vector<uint32_t> pivot_columns() const
	{
		auto p = pivots_;
		std::sort(p.begin(), p.end());
		return p;
	}

private:
	size_t cols_;
	std::vector<int> pivot_of_col_;
	std::vector<uint32_t> pivots_;
	std::vector<SparseRow> rows_;
};

// A linear subspace of Q^n held as the rows of its reduced row echelon basis,
// so that equal subspaces have identical representations.
class Subspace {
public:
	Subspace() = default;
	explicit Subspace(size_t ambient) : ambient_(ambient) {}

	static Subspace span(size_t ambient, const std::vector<Vector> &vectors)
	{
		RowReducer rr(ambient);
		for (auto &v : vectors)
			rr.add(v);
		return from_reducer(rr);
	}
	static Subspace full(size_t ambient)
	{
		std::vector<Vector> vs;
		for (size_t i = 0; i < ambient; ++i)
			vs.push_back(unit_vector(ambient, i));
		return span(ambient, vs);
	}
	static Subspace from_reducer(const RowReducer &rr)
	{
		Subspace s(rr.cols());
		for (auto &row : rr.rref())
			s.basis_.push_back(to_dense(row, rr.cols()));
		return s;
	}

	size_t ambient_dim() const { return ambient_; }
	size_t dim() const { return basis_.size(); }
	bool is_zero() const { return basis_.empty(); }
	bool is_full() const { return basis_.size() == ambient_; }

	// Canonical basis vectors (rows of the reduced echelon form).
	const std::vector<Vector> &basis() const { return basis_; }
	// Same, as column matrices.
	std::vector<Matrix> basis_columns() const
	{
		std::vector<Matrix> cols;
		for (auto &v : basis_)
			cols.push_back(Matrix::column(v));
		return cols;
	}
	// ambient x dim matrix whose columns are the basis vectors.
	Matrix basis_matrix() const
	{
		Matrix m(ambient_, basis_.size());
		for (size_t k = 0; k < basis_.size(); ++k)
			for (size_t i = 0; i < ambient_; ++i)
				m(i, k) = basis_[k][i];
		return m;
	}

	std::vector<size_t> pivot_columns() const
	{
		std::vector<size_t> p;
		for (auto &v : basis_)
			for (size_t j = 0; j < v.size(); ++j)
				if (!v[j].is_zero()) {
					p.push_back(j);
					break;
				}
		return p;
	}

	bool contains(const Vector &v) const
	{
		if (v.size() != ambient_)
			throw DimensionError("Subspace::contains: length mismatch");
		// Canonical form: v is in the span iff v equals sum v[pivot_k] * basis_k.
		auto piv = pivot_columns();
		Vector r = v;
		for (size_t k = 0; k < basis_.size(); ++k) {
			Rational f = r[piv[k]];
			if (f.is_zero())
				continue;
			for (size_t j = 0; j < ambient_; ++j)
				r[j].sub_mul(f, basis_[k][j]);
		}
		return liepq::is_zero(r);
	}
	bool contains(const Subspace &o) const
	{
		for (auto &v : o.basis_)
			if (!contains(v))
				return false;
		return true;
	}

	// Coordinates of v in the canonical basis, if v lies in the subspace.
	std::optional<Vector> coordinates(const Vector &v) const
	{
		if (!contains(v))
			return std::nullopt;
		auto piv = pivot_columns();
		Vector c(basis_.size());
		for (size_t k = 0; k < basis_.size(); ++k)
			c[k] = v[piv[k]];
		return c;
	}

	// Standard complement: unit vectors on the non-pivot columns.
	std::vector<Vector> complement_basis() const
	{
		std::vector<bool> is_piv(ambient_, false);
		for (auto p : pivot_columns())
			is_piv[p] = true;
		std::vector<Vector> out;
		for (size_t j = 0; j < ambient_; ++j)
			if (!is_piv[j])
				out.push_back(unit_vector(ambient_, j));
		return out;
	}

	friend Subspace operator+(const Subspace &a, const Subspace &b)
	{
		if (a.ambient_ != b.ambient_)
			throw DimensionError("Subspace sum: ambient mismatch");
		auto vs = a.basis_;
		vs.insert(vs.end(), b.basis_.begin(), b.basis_.end());
		return span(a.ambient_, vs);
	}

	friend bool operator==(const Subspace &a, const Subspace &b)
	{
		return a.ambient_ == b.ambient_ && a.basis_ == b.basis_;
	}

private:
	size_t ambient_ = 0;
	std::vector<Vector> basis_;
};

// Kernel of a linear system given as sparse equation rows over `unknowns`
// variables.
inline Subspace kernel_of_rows(size_t unknowns, const std::vector<SparseRow> &equations)
{
	RowReducer rr(unknowns);
	for (auto &e : equations) {
		rr.add(e);
		if (rr.rank() == unknowns)
			break;
	}
	auto r = rr.rref();
	std::vector<int> pivot_row(unknowns, -1);
	for (size_t k = 0; k < r.size(); ++k)
		pivot_row[r[k].front().first] = static_cast<int>(k);
	std::vector<Vector> basis;
	for (size_t f = 0; f < unknowns; ++f) {
		if (pivot_row[f] >= 0)
			continue;
		Vector x(unknowns);
		x[f] = 1;
		for (size_t k = 0; k < r.size(); ++k)
			for (auto &[j, v] : r[k])
				if (j == f) {
					x[r[k].front().first] = -v;
					break;
				}
		basis.push_back(std::move(x));
	}
	return Subspace::span(unknowns, basis);
}

inline std::vector<SparseRow> sparse_rows(const Matrix &a)
{
	std::vector<SparseRow> rows;
	rows.reserve(a.rows());
	for (size_t i = 0; i < a.rows(); ++i)
		rows.push_back(to_sparse(a.row_vector(i)));
	return rows;
}

inline Subspace kernel(const Matrix &a) { return kernel_of_rows(a.cols(), sparse_rows(a)); }

inline size_t rank(const Matrix &a)
{
	RowReducer rr(a.cols());
	for (size_t i = 0; i < a.rows(); ++i)
		rr.add(a.row_vector(i));
	return rr.rank();
}

inline size_t rank_of_vectors(size_t ambient, const std::vector<Vector> &vs)
{
	RowReducer rr(ambient);
	for (auto &v : vs)
		rr.add(v);
	return rr.rank();
}

inline Matrix rref(const Matrix &a)
{
	RowReducer rr(a.cols());
	for (size_t i = 0; i < a.rows(); ++i)
		rr.add(a.row_vector(i));
	Matrix out(a.rows(), a.cols());
	auto rows = rr.rref();
	for (size_t k = 0; k < rows.size(); ++k)
		for (auto &[j, v] : rows[k])
			out(k, j) = v;
	return out;
}

struct SolveResult {
	std::optional<Vector> particular; // nullopt: no solution
	Subspace kernel;
	bool solvable() const { return particular.has_value(); }
};

// Affine solution set of a x = b, b a single column.
inline SolveResult solve_linear(const Matrix &a, const Matrix &b)
{
	if (a.rows() != b.rows())
		throw DimensionError("solve_linear: row count mismatch");
	if (b.cols() != 1)
		throw DimensionError("solve_linear: right-hand side must be a single column");
	const size_t n = a.cols();
	RowReducer rr(n + 1);
	for (size_t i = 0; i < a.rows(); ++i) {
		Vector row = a.row_vector(i);
		row.push_back(b(i, 0));
		rr.add(row);
	}
	SolveResult res{std::nullopt, kernel(a)};
	Vector x(n);
	for (auto &row : rr.rref()) {
		if (row.front().first == n)
			return res; // 0 = 1
		for (auto &[j, v] : row)
			if (j == n)
				x[row.front().first] = v;
	}
	res.particular = std::move(x);
	return res;
}

inline std::optional<Matrix> inverse(const Matrix &a)
{
	if (!a.is_square())
		throw DimensionError("inverse: matrix not square");
	const size_t n = a.rows();
	RowReducer rr(2 * n);
	for (size_t i = 0; i < n; ++i) {
		Vector row = a.row_vector(i);
		row.resize(2 * n);
		row[n + i] = 1;
		rr.add(row);
	}
	auto rows = rr.rref();
	if (rows.size() < n || rows[n - 1].front().first >= n)
		return std::nullopt;
	Matrix inv(n, n);
	for (size_t k = 0; k < n; ++k)
		for (auto &[j, v] : rows[k])
			if (j >= n)
				inv(k, j - n) = v;
	return inv;
}

inline Rational determinant(Matrix m)
{
	if (!m.is_square())
		throw DimensionError("determinant: matrix not square");
	const size_t n = m.rows();
	Rational det = 1;
	for (size_t k = 0; k < n; ++k) {
		size_t p = k;
		while (p < n && m(p, k).is_zero())
			++p;
		if (p == n)
			return Rational(0);
		if (p != k) {
			for (size_t j = 0; j < n; ++j)
				std::swap(m(k, j), m(p, j));
			det = -det;
		}
		det *= m(k, k);
		Rational inv = m(k, k).inverse();
		for (size_t i = k + 1; i < n; ++i) {
			if (m(i, k).is_zero())
				continue;
			Rational f = m(i, k) * inv;
			for (size_t j = k; j < n; ++j)
				m(i, j).sub_mul(f, m(k, j));
		}
	}
	return det;
}

struct Inertia {
	size_t n_plus = 0, n_minus = 0, n_zero = 0;
	friend bool operator==(const Inertia &, const Inertia &) = default;
};

inline std::ostream &operator<<(std::ostream &os, const Inertia &i)
{
	return os << '(' << i.n_plus << ',' << i.n_minus << ',' << i.n_zero << ')';
}

// Congruence diagonalization Q b Q^t = D of a symmetric form by symmetric
// Gaussian elimination.
struct Congruence {
	Matrix q;      // invertible
	Vector diag;   // D = diag(diag)
};

inline Congruence congruence_diagonalize(const Matrix &b)
{
	if (!b.is_symmetric())
		throw ContractError("congruence_diagonalize: form is not symmetric");
	const size_t n = b.rows();
	Matrix s = b;
	Matrix q = Matrix::identity(n);
	// Applies row op r_i += f r_j and the matching column op.
	auto add_row_col = [&](size_t i, size_t j, const Rational &f) {
		for (size_t c = 0; c < n; ++c)
			s(i, c).add_mul(f, s(j, c));
		for (size_t r = 0; r < n; ++r)
			s(r, i).add_mul(f, s(r, j));
		for (size_t c = 0; c < n; ++c)
			q(i, c).add_mul(f, q(j, c));
	};
	auto swap_idx = [&](size_t i, size_t j) {
		for (size_t c = 0; c < n; ++c)
			std::swap(s(i, c), s(j, c));
		for (size_t r = 0; r < n; ++r)
			std::swap(s(r, i), s(r, j));
		for (size_t c = 0; c < n; ++c)
			std::swap(q(i, c), q(j, c));
	};
	for (size_t k = 0; k < n; ++k) {
		if (s(k, k).is_zero()) {
			size_t j = k + 1;
			while (j < n && s(j, j).is_zero())
				++j;
			if (j < n) {
				swap_idx(k, j);
			} else {
				j = k + 1;
				while (j < n && s(k, j).is_zero())
					++j;
				if (j == n)
					continue; // row k already zero
				add_row_col(k, j, Rational(1)); // new s(k,k) = 2 s(k,j)
			}
		}
		Rational inv = s(k, k).inverse();
		for (size_t i = k + 1; i < n; ++i) {
			if (s(i, k).is_zero())
				continue;
			add_row_col(i, k, -(s(i, k) * inv));
		}
	}
	Vector d(n);
	for (size_t i = 0; i < n; ++i)
		d[i] = s(i, i);
	return {std::move(q), std::move(d)};
}

// Sylvester inertia (n+, n-, n0) of a symmetric form.
inline Inertia inertia_of_diagonalizable_form(const Matrix &b)
{
	auto c = congruence_diagonalize(b);
	Inertia in;
	for (auto &x : c.diag) {
		if (x.sign() > 0)
			++in.n_plus;
		else if (x.sign() < 0)
			++in.n_minus;
		else
			++in.n_zero;
	}
	return in;
}

// Lexicographic basis e_i ^ e_j (i < j) of the exterior square.
inline std::vector<std::pair<size_t, size_t>> wedge_square_index(size_t n)
{
	if (n < 2)
		throw ContractError("wedge_square_index: n must be at least 2");
	std::vector<std::pair<size_t, size_t>> idx;
	for (size_t i = 0; i < n; ++i)
		for (size_t j = i + 1; j < n; ++j)
			idx.emplace_back(i, j);
	return idx;
}

// Expresses vectors in a fixed (linearly independent, not necessarily
// canonical) basis. Built once, queried many times.
class CoordinateMap {
public:
	CoordinateMap() = default;
	explicit CoordinateMap(const std::vector<Vector> &basis, size_t ambient)
	    : ambient_(ambient), k_(basis.size())
	{
		// Row reduce [B^t | I]; independent rows keep all pivots on the left.
		RowReducer rr(ambient_ + k_);
		for (size_t i = 0; i < k_; ++i) {
			if (basis[i].size() != ambient_)
				throw DimensionError("CoordinateMap: basis vector length mismatch");
			Vector row = basis[i];
			row.resize(ambient_ + k_);
			row[ambient_ + i] = 1;
			rr.add(row);
		}
		for (auto &row : rr.rref()) {
			if (row.front().first >= ambient_)
				throw ContractError("CoordinateMap: basis vectors are linearly dependent");
			SparseRow left, right;
			for (auto &e : row) {
				if (e.first < ambient_)
					left.push_back(e);
				else
					right.emplace_back(e.first - ambient_, e.second);
			}
			pivots_.push_back(row.front().first);
			echelon_.push_back(std::move(left));
			transform_.push_back(std::move(right));
		}
	}

	size_t dim() const { return k_; }
	size_t ambient_dim() const { return ambient_; }

	std::optional<Vector> coordinates(const Vector &v) const
	{
		if (v.size() != ambient_)
			throw DimensionError("CoordinateMap: vector length mismatch");
		Vector r = v;
		Vector y(echelon_.size());
		for (size_t t = 0; t < echelon_.size(); ++t) {
			y[t] = r[pivots_[t]];
			if (y[t].is_zero())
				continue;
			for (auto &[j, x] : echelon_[t])
				r[j].sub_mul(y[t], x);
		}
		if (!liepq::is_zero(r))
			return std::nullopt;
		Vector a(k_);
		for (size_t t = 0; t < transform_.size(); ++t) {
			if (y[t].is_zero())
				continue;
			for (auto &[j, x] : transform_[t])
				a[j].add_mul(y[t], x);
		}
		return a;
	}

private:
	size_t ambient_ = 0, k_ = 0;
	std::vector<uint32_t> pivots_;
	std::vector<SparseRow> echelon_;
	std::vector<SparseRow> transform_;
};

} // namespace liepq
