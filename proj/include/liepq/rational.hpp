#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

namespace liepq {

// Exact rational scalar. Thin value wrapper over GMP's mpq_class; always kept
// canonical (lowest terms, positive denominator).
class Rational {
public:
	Rational() = default;
	Rational(int v) : q_(v) {}
	Rational(long v) : q_(v) {}
	Rational(long long v) : q_(static_cast<long>(v)) {}
	Rational(long num, long den)
	{
		if (den == 0)
			throw std::domain_error("Rational: zero denominator");
		q_ = mpq_class(num, den);
		q_.canonicalize();
	}
	explicit Rational(mpq_class q) : q_(std::move(q)) { q_.canonicalize(); }
	explicit Rational(const mpz_class &z) : q_(z) {}

	// Accepts "p/q", "p" and a leading sign; rejects anything else, including
	// decimal points.
	static Rational parse(std::string_view text)
	{
		std::string s(text);
		if (s.empty())
			throw std::invalid_argument("Rational: empty token");
		auto digits_ok = [](std::string_view part, bool allow_sign) {
			if (part.empty())
				return false;
			size_t i = 0;
			if (allow_sign && (part[0] == '-' || part[0] == '+'))
				i = 1;
			if (i == part.size())
				return false;
			for (; i < part.size(); ++i)
				if (part[i] < '0' || part[i] > '9')
					return false;
			return true;
		};
		auto slash = s.find('/');
		std::string num = s.substr(0, slash);
		std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
		if (!digits_ok(num, true) || !digits_ok(den, false))
			throw std::invalid_argument("Rational: malformed token '" + s + "'");
		if (num[0] == '+')
			num.erase(0, 1);
		mpz_class n(num, 10), d(den, 10);
		if (d == 0)
			throw std::invalid_argument("Rational: zero denominator in '" + s + "'");
		mpq_class q(n, d);
		q.canonicalize();
		return Rational(std::move(q));
	}

	const mpq_class &raw() const { return q_; }
	mpz_class numerator() const { return q_.get_num(); }
	mpz_class denominator() const { return q_.get_den(); }

	int sign() const { return sgn(q_); }
	bool is_zero() const { return sgn(q_) == 0; }
	bool is_integer() const { return q_.get_den() == 1; }

	// "p/q" with q >= 1 always printed; used by every machine-readable format.
	std::string fraction_string() const
	{
		return q_.get_num().get_str() + "/" + q_.get_den().get_str();
	}
	// Short form: "3", "-1/2".
	std::string str() const { return q_.get_str(); }

	double to_double() const { return q_.get_d(); }

	Rational abs() const { return Rational(mpq_class(::abs(q_))); }
	Rational inverse() const
	{
		if (is_zero())
			throw std::domain_error("Rational: inverse of zero");
		return Rational(mpq_class(1 / q_));
	}

	// Exact square root when both numerator and denominator are perfect squares.
	std::optional<Rational> sqrt() const
	{
		if (sign() < 0)
			return std::nullopt;
		mpz_class n = q_.get_num(), d = q_.get_den();
		if (!mpz_perfect_square_p(n.get_mpz_t()) || !mpz_perfect_square_p(d.get_mpz_t()))
			return std::nullopt;
		mpz_class rn, rd;
		mpz_sqrt(rn.get_mpz_t(), n.get_mpz_t());
		mpz_sqrt(rd.get_mpz_t(), d.get_mpz_t());
		return Rational(mpq_class(rn, rd));
	}

	Rational &operator+=(const Rational &o)
	{
		q_ += o.q_;
		return *this;
	}
	Rational &operator-=(const Rational &o)
	{
		q_ -= o.q_;
		return *this;
	}
	Rational &operator*=(const Rational &o)
	{
		q_ *= o.q_;
		return *this;
	}
	Rational &operator/=(const Rational &o)
	{
		if (o.is_zero())
			throw std::domain_error("Rational: division by zero");
		q_ /= o.q_;
		return *this;
	}
	// this -= a * b without a named temporary at the call site.
	void sub_mul(const Rational &a, const Rational &b)
	{
		if (a.is_zero() || b.is_zero())
			return;
		q_ -= a.q_ * b.q_;
	}
	void add_mul(const Rational &a, const Rational &b)
	{
		if (a.is_zero() || b.is_zero())
			return;
		q_ += a.q_ * b.q_;
	}

	friend Rational operator+(Rational a, const Rational &b) { return a += b; }
	friend Rational operator-(Rational a, const Rational &b) { return a -= b; }
	friend Rational operator*(Rational a, const Rational &b) { return a *= b; }
	friend Rational operator/(Rational a, const Rational &b) { return a /= b; }
	friend Rational operator-(const Rational &a) { return Rational(mpq_class(-a.q_)); }

	friend bool operator==(const Rational &a, const Rational &b) { return cmp(a.q_, b.q_) == 0; }
	friend std::strong_ordering operator<=>(const Rational &a, const Rational &b)
	{
		int c = cmp(a.q_, b.q_);
		return c < 0 ? std::strong_ordering::less
		             : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
	}

	friend std::ostream &operator<<(std::ostream &os, const Rational &r) { return os << r.str(); }

private:
	mpq_class q_;
};

inline Rational operator""_q(unsigned long long v) { return Rational(static_cast<long>(v)); }

} // namespace liepq
