#pragma once

#include "errors.hpp"
#include "rational.hpp"

#include <cstddef>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

namespace liepq {

using Vector = std::vector<Rational>;

// Dense row-major rational matrix.
class Matrix {
public:
	Matrix() = default;
	Matrix(size_t rows, size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
	Matrix(size_t rows, size_t cols, std::vector<Rational> data)
	    : rows_(rows), cols_(cols), data_(std::move(data))
	{
		if (data_.size() != rows_ * cols_)
			throw DimensionError("Matrix: entry count does not match shape");
	}
	Matrix(std::initializer_list<std::initializer_list<Rational>> rows)
	{
		rows_ = rows.size();
		cols_ = rows_ ? rows.begin()->size() : 0;
		data_.reserve(rows_ * cols_);
		for (auto &r : rows) {
			if (r.size() != cols_)
				throw DimensionError("Matrix: ragged initializer");
			data_.insert(data_.end(), r.begin(), r.end());
		}
	}

	static Matrix identity(size_t n)
	{
		Matrix m(n, n);
		for (size_t i = 0; i < n; ++i)
			m(i, i) = 1;
		return m;
	}
	static Matrix diagonal(const Vector &d)
	{
		Matrix m(d.size(), d.size());
		for (size_t i = 0; i < d.size(); ++i)
			m(i, i) = d[i];
		return m;
	}
	// E_{ij}: single unit entry.
	static Matrix unit(size_t rows, size_t cols, size_t i, size_t j)
	{
		Matrix m(rows, cols);
		m(i, j) = 1;
		return m;
	}
	static Matrix column(const Vector &v) { return Matrix(v.size(), 1, v); }
	static Matrix row(const Vector &v) { return Matrix(1, v.size(), v); }

	size_t rows() const { return rows_; }
	size_t cols() const { return cols_; }
	bool is_square() const { return rows_ == cols_; }

	Rational &operator()(size_t i, size_t j) { return data_[i * cols_ + j]; }
	const Rational &operator()(size_t i, size_t j) const { return data_[i * cols_ + j]; }
	const std::vector<Rational> &data() const { return data_; }

	Vector row_vector(size_t i) const
	{
		return Vector(data_.begin() + i * cols_, data_.begin() + (i + 1) * cols_);
	}
	Vector column_vector(size_t j) const
	{
		Vector v(rows_);
		for (size_t i = 0; i < rows_; ++i)
			v[i] = (*this)(i, j);
		return v;
	}
	// Row-major flattening; used to treat matrices as vectors of unknowns.
	const Vector &flatten() const { return data_; }

	Matrix transpose() const
	{
		Matrix t(cols_, rows_);
		for (size_t i = 0; i < rows_; ++i)
			for (size_t j = 0; j < cols_; ++j)
				t(j, i) = (*this)(i, j);
		return t;
	}

	Rational trace() const
	{
		if (!is_square())
			throw DimensionError("trace: matrix not square");
		Rational t;
		for (size_t i = 0; i < rows_; ++i)
			t += (*this)(i, i);
		return t;
	}

	bool is_zero() const
	{
		for (auto &x : data_)
			if (!x.is_zero())
				return false;
		return true;
	}
	bool is_symmetric() const
	{
		if (!is_square())
			return false;
		for (size_t i = 0; i < rows_; ++i)
			for (size_t j = i + 1; j < cols_; ++j)
				if ((*this)(i, j) != (*this)(j, i))
					return false;
		return true;
	}

	Matrix block(size_t r0, size_t c0, size_t nr, size_t nc) const
	{
		if (r0 + nr > rows_ || c0 + nc > cols_)
			throw DimensionError("block: out of range");
		Matrix b(nr, nc);
		for (size_t i = 0; i < nr; ++i)
			for (size_t j = 0; j < nc; ++j)
				b(i, j) = (*this)(r0 + i, c0 + j);
		return b;
	}
	void set_block(size_t r0, size_t c0, const Matrix &b)
	{
		if (r0 + b.rows_ > rows_ || c0 + b.cols_ > cols_)
			throw DimensionError("set_block: out of range");
		for (size_t i = 0; i < b.rows_; ++i)
			for (size_t j = 0; j < b.cols_; ++j)
				(*this)(r0 + i, c0 + j) = b(i, j);
	}

	Matrix &operator+=(const Matrix &o)
	{
		check_same_shape(o, "+");
		for (size_t k = 0; k < data_.size(); ++k)
			data_[k] += o.data_[k];
		return *this;
	}
	Matrix &operator-=(const Matrix &o)
	{
		check_same_shape(o, "-");
		for (size_t k = 0; k < data_.size(); ++k)
			data_[k] -= o.data_[k];
		return *this;
	}
	Matrix &operator*=(const Rational &s)
	{
		if (s.is_zero()) {
			for (auto &x : data_)
				x = 0;
			return *this;
		}
		for (auto &x : data_)
			if (!x.is_zero())
				x *= s;
		return *this;
	}
	// this += s * o
	void add_scaled(const Rational &s, const Matrix &o)
	{
		check_same_shape(o, "add_scaled");
		if (s.is_zero())
			return;
		for (size_t k = 0; k < data_.size(); ++k)
			data_[k].add_mul(s, o.data_[k]);
	}

	friend Matrix operator+(Matrix a, const Matrix &b) { return a += b; }
	friend Matrix operator-(Matrix a, const Matrix &b) { return a -= b; }
	friend Matrix operator-(Matrix a) { return a *= Rational(-1); }
	friend Matrix operator*(Matrix a, const Rational &s) { return a *= s; }
	friend Matrix operator*(const Rational &s, Matrix a) { return a *= s; }
	friend Matrix operator*(const Matrix &a, const Matrix &b);

	friend bool operator==(const Matrix &a, const Matrix &b)
	{
		return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
	}

private:
	void check_same_shape(const Matrix &o, const char *op) const
	{
		if (rows_ != o.rows_ || cols_ != o.cols_)
			throw DimensionError(std::string("Matrix ") + op + ": shape mismatch");
	}

	size_t rows_ = 0, cols_ = 0;
	std::vector<Rational> data_;
};

// Exact product; skips zero entries of the left factor, which is the common
// case for the monomial-like generators used throughout.
inline Matrix mat_mul(const Matrix &a, const Matrix &b)
{
	if (a.cols() != b.rows())
		throw DimensionError("mat_mul: " + std::to_string(a.rows()) + "x" + std::to_string(a.cols()) +
		                     " times " + std::to_string(b.rows()) + "x" + std::to_string(b.cols()));
	Matrix c(a.rows(), b.cols());
	for (size_t i = 0; i < a.rows(); ++i)
		for (size_t k = 0; k < a.cols(); ++k) {
			const Rational &aik = a(i, k);
			if (aik.is_zero())
				continue;
			for (size_t j = 0; j < b.cols(); ++j)
				c(i, j).add_mul(aik, b(k, j));
		}
	return c;
}

inline Matrix operator*(const Matrix &a, const Matrix &b) { return mat_mul(a, b); }

inline Vector mat_vec(const Matrix &a, const Vector &x)
{
	if (a.cols() != x.size())
		throw DimensionError("mat_vec: shape mismatch");
	Vector y(a.rows());
	for (size_t i = 0; i < a.rows(); ++i)
		for (size_t k = 0; k < a.cols(); ++k)
			y[i].add_mul(a(i, k), x[k]);
	return y;
}

inline Matrix commutator(const Matrix &a, const Matrix &b) { return a * b - b * a; }

inline Matrix block_diagonal(const Matrix &a, const Matrix &b)
{
	Matrix m(a.rows() + b.rows(), a.cols() + b.cols());
	m.set_block(0, 0, a);
	m.set_block(a.rows(), a.cols(), b);
	return m;
}

// Reshape a row-major flattened vector.
inline Matrix reshape(const Vector &v, size_t rows, size_t cols)
{
	return Matrix(rows, cols, v);
}

inline bool is_zero(const Vector &v)
{
	for (auto &x : v)
		if (!x.is_zero())
			return false;
	return true;
}

inline Rational dot(const Vector &a, const Vector &b)
{
	if (a.size() != b.size())
		throw DimensionError("dot: length mismatch");
	Rational s;
	for (size_t i = 0; i < a.size(); ++i)
		s.add_mul(a[i], b[i]);
	return s;
}

inline Vector unit_vector(size_t n, size_t i)
{
	Vector v(n);
	v[i] = 1;
	return v;
}

// Text fixture format: first line "rows cols", then one line per row of
// whitespace-separated "p/q" tokens. write_matrix_text(read_matrix_text(s)) == s
// for any text produced by write_matrix_text.
inline void write_matrix_text(std::ostream &os, const Matrix &m)
{
	os << m.rows() << ' ' << m.cols() << '\n';
	for (size_t i = 0; i < m.rows(); ++i) {
		for (size_t j = 0; j < m.cols(); ++j) {
			if (j)
				os << ' ';
			os << m(i, j).fraction_string();
		}
		os << '\n';
	}
}

inline std::string to_matrix_text(const Matrix &m)
{
	std::ostringstream os;
	write_matrix_text(os, m);
	return os.str();
}

inline Matrix read_matrix_text(std::istream &is)
{
	long long rows = -1, cols = -1;
	if (!(is >> rows >> cols) || rows < 0 || cols < 0)
		throw std::invalid_argument("matrix text: bad header");
	std::vector<Rational> entries;
	entries.reserve(static_cast<size_t>(rows * cols));
	std::string tok;
	for (long long k = 0; k < rows * cols; ++k) {
		if (!(is >> tok))
			throw std::invalid_argument("matrix text: expected " + std::to_string(rows * cols) +
			                            " entries, got " + std::to_string(k));
		entries.push_back(Rational::parse(tok));
	}
	if (is >> tok)
		throw std::invalid_argument("matrix text: trailing token '" + tok + "'");
	return Matrix(static_cast<size_t>(rows), static_cast<size_t>(cols), std::move(entries));
}

inline Matrix from_matrix_text(const std::string &s)
{
	std::istringstream is(s);
	return read_matrix_text(is);
}

inline std::ostream &operator<<(std::ostream &os, const Matrix &m)
{
	for (size_t i = 0; i < m.rows(); ++i) {
		os << '[';
		for (size_t j = 0; j < m.cols(); ++j)
			os << (j ? " " : "") << m(i, j);
		os << "]\n";
	}
	return os;
}

} // namespace liepq
