#pragma once

#include "errors.hpp"
#include "linalg.hpp"
#include "matrix.hpp"

#include <algorithm>
#include <optional>
#include <ostream>
#include <vector>

namespace liepq {

// Univariate polynomial over Q; coefficients from the constant term upward,
// no trailing zeros (the zero polynomial has no coefficients).
class Polynomial {
public:
	Polynomial() = default;
	explicit Polynomial(Vector coeffs) : c_(std::move(coeffs)) { trim(); }
	Polynomial(std::initializer_list<Rational> coeffs) : c_(coeffs) { trim(); }

	static Polynomial x() { return Polynomial{Rational(0), Rational(1)}; }
	static Polynomial constant(const Rational &a) { return Polynomial(Vector{a}); }

	int degree() const { return static_cast<int>(c_.size()) - 1; }
	bool is_zero() const { return c_.empty(); }
	const Vector &coeffs() const { return c_; }
	Rational coeff(size_t i) const { return i < c_.size() ? c_[i] : Rational(0); }
	Rational leading() const { return c_.empty() ? Rational(0) : c_.back(); }

	Polynomial monic() const
	{
		if (is_zero())
			return *this;
		Polynomial p = *this;
		Rational inv = leading().inverse();
		for (auto &x : p.c_)
			x *= inv;
		return p;
	}

	Rational operator()(const Rational &t) const
	{
		Rational v;
		for (size_t i = c_.size(); i-- > 0;)
			v = v * t + c_[i];
		return v;
	}

	// p(A) by Horner's rule.
	Matrix operator()(const Matrix &a) const
	{
		if (!a.is_square())
			throw DimensionError("Polynomial: evaluation at non-square matrix");
		Matrix v(a.rows(), a.cols());
		for (size_t i = c_.size(); i-- > 0;) {
			v = v * a;
			for (size_t k = 0; k < a.rows(); ++k)
				v(k, k) += c_[i];
		}
		return v;
	}

	Polynomial derivative() const
	{
		Vector d;
		for (size_t i = 1; i < c_.size(); ++i)
			d.push_back(c_[i] * Rational(static_cast<long>(i)));
		return Polynomial(std::move(d));
	}

	friend Polynomial operator+(const Polynomial &a, const Polynomial &b)
	{
		Vector c(std::max(a.c_.size(), b.c_.size()));
		for (size_t i = 0; i < c.size(); ++i)
			c[i] = a.coeff(i) + b.coeff(i);
		return Polynomial(std::move(c));
	}
	friend Polynomial operator-(const Polynomial &a, const Polynomial &b)
	{
		Vector c(std::max(a.c_.size(), b.c_.size()));
		for (size_t i = 0; i < c.size(); ++i)
			c[i] = a.coeff(i) - b.coeff(i);
		return Polynomial(std::move(c));
	}
	friend Polynomial operator*(const Polynomial &a, const Polynomial &b)
	{
		if (a.is_zero() || b.is_zero())
			return {};
		Vector c(a.c_.size() + b.c_.size() - 1);
		for (size_t i = 0; i < a.c_.size(); ++i)
			for (size_t j = 0; j < b.c_.size(); ++j)
				c[i + j].add_mul(a.c_[i], b.c_[j]);
		return Polynomial(std::move(c));
	}

	// Quotient and remainder; throws on division by zero.
	static std::pair<Polynomial, Polynomial> divmod(const Polynomial &a, const Polynomial &b)
	{
		if (b.is_zero())
			throw std::domain_error("Polynomial: division by zero");
		if (a.degree() < b.degree())
			return {Polynomial{}, a};
		Vector r = a.c_;
		Vector q(a.c_.size() - b.c_.size() + 1);
		Rational inv = b.leading().inverse();
		for (size_t k = q.size(); k-- > 0;) {
			Rational f = r[k + b.c_.size() - 1] * inv;
			q[k] = f;
			if (f.is_zero())
				continue;
			for (size_t j = 0; j < b.c_.size(); ++j)
				r[k + j].sub_mul(f, b.c_[j]);
		}
		r.resize(b.c_.size() - 1);
		return {Polynomial(std::move(q)), Polynomial(std::move(r))};
	}

	friend bool operator==(const Polynomial &, const Polynomial &) = default;

	friend std::ostream &operator<<(std::ostream &os, const Polynomial &p)
	{
		if (p.is_zero())
			return os << "0";
		bool first = true;
		for (size_t i = p.c_.size(); i-- > 0;) {
			if (p.c_[i].is_zero())
				continue;
			if (!first)
				os << " + ";
			first = false;
			os << '(' << p.c_[i] << ')';
			if (i == 1)
				os << "*x";
			else if (i > 1)
				os << "*x^" << i;
		}
		return os;
	}

private:
	void trim()
	{
		while (!c_.empty() && c_.back().is_zero())
			c_.pop_back();
	}
	Vector c_;
};

inline Polynomial gcd(Polynomial a, Polynomial b)
{
	while (!b.is_zero()) {
		auto r = Polynomial::divmod(a, b).second;
		a = std::move(b);
		b = std::move(r);
	}
	return a.monic();
}

// det(x I - A) by the Faddeev-LeVerrier recursion (exact over Q).
inline Polynomial characteristic_polynomial(const Matrix &a)
{
	if (!a.is_square())
		throw DimensionError("characteristic_polynomial: matrix not square");
	const size_t n = a.rows();
	Vector c(n + 1);
	c[n] = 1;
	Matrix m(n, n);
	for (size_t k = 1; k <= n; ++k) {
		m = a * m;
		for (size_t i = 0; i < n; ++i)
			m(i, i) += c[n - k + 1];
		c[n - k] = -(a * m).trace() / Rational(static_cast<long>(k));
	}
	return Polynomial(std::move(c));
}

// Monic generator of {p : p(A) = 0}, from the first linear dependency among
// I, A, A^2, ...
inline Polynomial minimal_polynomial(const Matrix &a)
{
	if (!a.is_square())
		throw DimensionError("minimal_polynomial: matrix not square");
	const size_t n = a.rows();
	std::vector<Vector> powers{Matrix::identity(n).flatten()};
	Matrix p = Matrix::identity(n);
	for (size_t k = 1; k <= n; ++k) {
		p = p * a;
		CoordinateMap cm(powers, n * n);
		if (auto c = cm.coordinates(p.flatten())) {
			Vector coeffs(k + 1);
			for (size_t i = 0; i < k; ++i)
				coeffs[i] = -(*c)[i];
			coeffs[k] = 1;
			return Polynomial(std::move(coeffs));
		}
		powers.push_back(p.flatten());
	}
	throw InternalError("minimal_polynomial: no dependency up to degree n");
}

struct PolyFactor {
	Polynomial factor; // monic, irreducible over Q
	int multiplicity = 1;
};

// Irreducible factors of polynomials searched by Kronecker's method up to this
// degree; factoring a polynomial of higher degree with no factor found below
// the cap throws UnsupportedError.
inline constexpr int kFactorDegreeCap = 8;

namespace detail {

// Primitive integer polynomial proportional to p, positive leading coefficient.
inline std::vector<mpz_class> primitive_integer(const Polynomial &p)
{
	mpz_class l = 1;
	for (auto &c : p.coeffs())
		mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.denominator().get_mpz_t());
	std::vector<mpz_class> z;
	mpz_class g = 0;
	for (auto &c : p.coeffs()) {
		mpq_class t = c.raw() * l;
		z.push_back(t.get_num());
		mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), z.back().get_mpz_t());
	}
	if (g != 0)
		for (auto &x : z)
			x /= g;
	if (!z.empty() && z.back() < 0)
		for (auto &x : z)
			x = -x;
	return z;
}

inline mpz_class eval_int(const std::vector<mpz_class> &z, long t)
{
	mpz_class v = 0;
	for (size_t i = z.size(); i-- > 0;)
		v = v * t + z[i];
	return v;
}

inline std::vector<mpz_class> positive_divisors(mpz_class v)
{
	v = abs(v);
	std::vector<mpz_class> small, large;
	for (mpz_class d = 1; d * d <= v; ++d)
		if (v % d == 0) {
			small.push_back(d);
			if (d * d != v)
				large.push_back(v / d);
		}
	small.insert(small.end(), large.rbegin(), large.rend());
	return small;
}

inline bool divides(const Polynomial &d, const Polynomial &p)
{
	return Polynomial::divmod(p, d).second.is_zero();
}

inline std::optional<Polynomial> rational_root_factor(const Polynomial &p)
{
	auto z = primitive_integer(p);
	if (z[0] == 0)
		return Polynomial::x();
	for (auto &num : positive_divisors(z[0]))
		for (auto &den : positive_divisors(z.back()))
			for (int s : {1, -1}) {
				Rational r(mpq_class(num * s, den));
				if (p(r).is_zero())
					return Polynomial{-r, Rational(1)};
			}
	return std::nullopt;
}

// Lagrange interpolation through (xs[i], ys[i]).
inline Polynomial interpolate(const std::vector<long> &xs, const std::vector<mpz_class> &ys)
{
	Polynomial out;
	for (size_t i = 0; i < xs.size(); ++i) {
		Polynomial term = Polynomial::constant(Rational(ys[i]));
		for (size_t j = 0; j < xs.size(); ++j) {
			if (j == i)
				continue;
			Rational den = Rational(xs[i] - xs[j]);
			term = term * Polynomial{Rational(-xs[j]) / den, Rational(1) / den};
		}
		out = out + term;
	}
	return out;
}

// Kronecker's method: a factor of degree exactly k, if one exists.
inline std::optional<Polynomial> kronecker_factor(const Polynomial &p, int k)
{
	auto z = primitive_integer(p);
	// Pick k+1 evaluation points with the fewest divisors.
	std::vector<std::pair<size_t, long>> cand;
	for (long t = -(3 * k + 6); t <= 3 * k + 6; ++t) {
		mpz_class v = eval_int(z, t);
		if (v == 0)
			return Polynomial{Rational(-t), Rational(1)};
		if (abs(v) > mpz_class("1000000000000"))
			continue;
		cand.emplace_back(positive_divisors(v).size(), t);
	}
	if (cand.size() < static_cast<size_t>(k + 1))
		throw UnsupportedError("kronecker_factor: no usable evaluation points");
	std::sort(cand.begin(), cand.end());
	std::vector<long> xs;
	std::vector<std::vector<mpz_class>> choices;
	for (int i = 0; i <= k; ++i) {
		long t = cand[static_cast<size_t>(i)].second;
		xs.push_back(t);
		auto divs = positive_divisors(eval_int(z, t));
		std::vector<mpz_class> signed_divs;
		for (auto &d : divs) {
			signed_divs.push_back(d);
			if (i > 0) // normalize the sign of the factor at the first point
				signed_divs.push_back(-d);
		}
		choices.push_back(std::move(signed_divs));
	}
	std::vector<size_t> pick(xs.size(), 0);
	std::vector<mpz_class> ys(xs.size());
	while (true) {
		for (size_t i = 0; i < xs.size(); ++i)
			ys[i] = choices[i][pick[i]];
		Polynomial g = interpolate(xs, ys);
		if (g.degree() == k) {
			bool integral = true;
			for (auto &c : g.coeffs())
				integral = integral && c.is_integer();
			if (integral && divides(g, p))
				return g.monic();
		}
		size_t i = 0;
		while (i < pick.size() && ++pick[i] == choices[i].size())
			pick[i++] = 0;
		if (i == pick.size())
			break;
	}
	return std::nullopt;
}

inline std::optional<Polynomial> find_factor(const Polynomial &p)
{
	if (p.degree() <= 1)
		return std::nullopt;
	if (auto r = rational_root_factor(p))
		return r;
	for (int k = 2; k <= p.degree() / 2; ++k) {
		if (k > kFactorDegreeCap / 2)
			throw UnsupportedError("factor_over_q: degree above the factorization cap");
		if (auto f = kronecker_factor(p, k))
			return f;
	}
	return std::nullopt;
}

} // namespace detail

// Distinct monic irreducible factors over Q with multiplicities, in order of
// increasing degree and then coefficients.
inline std::vector<PolyFactor> factor_over_q(const Polynomial &p)
{
	if (p.is_zero())
		throw std::domain_error("factor_over_q: zero polynomial");
	std::vector<Polynomial> stack{p.monic()};
	std::vector<Polynomial> irreducibles;
	while (!stack.empty()) {
		Polynomial q = stack.back();
		stack.pop_back();
		if (q.degree() < 1)
			continue;
		auto f = detail::find_factor(q);
		if (!f) {
			irreducibles.push_back(q.monic());
			continue;
		}
		stack.push_back(f->monic());
		stack.push_back(Polynomial::divmod(q, *f).first.monic());
	}
	std::vector<PolyFactor> out;
	for (auto &f : irreducibles) {
		auto it = std::find_if(out.begin(), out.end(), [&](const PolyFactor &e) { return e.factor == f; });
		if (it == out.end())
			out.push_back({f, 1});
		else
			++it->multiplicity;
	}
	std::sort(out.begin(), out.end(), [](const PolyFactor &a, const PolyFactor &b) {
		if (a.factor.degree() != b.factor.degree())
			return a.factor.degree() < b.factor.degree();
		return std::lexicographical_compare(a.factor.coeffs().begin(), a.factor.coeffs().end(),
		                                    b.factor.coeffs().begin(), b.factor.coeffs().end());
	});
	return out;
}

} // namespace liepq
