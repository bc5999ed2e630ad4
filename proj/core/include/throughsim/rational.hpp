#pragma once

#include <gmpxx.h>

#include <iosfwd>
#include <string>
#include <string_view>

namespace throughsim {

// Exact rational number. GMP keeps the canonical form: denominator positive,
// gcd(numerator, denominator) == 1. All arithmetic is exact; there is no
// floating-point path anywhere in the library.
class Rational {
public:
	Rational() : q_(0) {}
	Rational(long n) : q_(n) {}  // NOLINT: implicit by design, mirrors integer literals
	Rational(long n, long d);

	// Accepts "num" or "num/den" with an optional leading '-', digits only.
	// Rejects empty strings, whitespace, "inf" and zero denominators.
	static Rational parse(std::string_view text);

	// Canonical form: "num" when the value is an integer, else "num/den".
	std::string str() const;

	bool is_integer() const { return mpz_cmp_ui(q_.get_den().get_mpz_t(), 1) == 0; }
	int sgn() const { return mpq_sgn(q_.get_mpq_t()); }

	Rational operator-() const { return Rational(mpq_class(-q_)); }
	Rational operator+(const Rational& o) const { return Rational(mpq_class(q_ + o.q_)); }
	Rational operator-(const Rational& o) const { return Rational(mpq_class(q_ - o.q_)); }
	Rational operator*(const Rational& o) const { return Rational(mpq_class(q_ * o.q_)); }
	Rational operator/(const Rational& o) const;

	Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
	Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
	Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
	Rational& operator/=(const Rational& o) { *this = *this / o; return *this; }

	bool operator==(const Rational& o) const { return mpq_equal(q_.get_mpq_t(), o.q_.get_mpq_t()) != 0; }
	bool operator!=(const Rational& o) const { return !(*this == o); }
	bool operator<(const Rational& o) const { return cmp(q_, o.q_) < 0; }
	bool operator<=(const Rational& o) const { return cmp(q_, o.q_) <= 0; }
	bool operator>(const Rational& o) const { return cmp(q_, o.q_) > 0; }
	bool operator>=(const Rational& o) const { return cmp(q_, o.q_) >= 0; }

	const mpq_class& raw() const { return q_; }

private:
	explicit Rational(mpq_class q) : q_(std::move(q)) {}
	mpq_class q_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

inline const Rational& min(const Rational& a, const Rational& b) { return b < a ? b : a; }
inline const Rational& max(const Rational& a, const Rational& b) { return a < b ? b : a; }
Rational abs(const Rational& a);

}  // namespace throughsim
