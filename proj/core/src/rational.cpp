#include "throughsim/rational.hpp"

#include <cctype>
#include <ostream>

#include "throughsim/errors.hpp"

namespace throughsim {

namespace {

bool all_digits(std::string_view s) {
	if (s.empty()) return false;
	for (char c : s)
		if (!std::isdigit(static_cast<unsigned char>(c))) return false;
	return true;
}

}  // namespace

Rational::Rational(long n, long d) : q_(0) {
	if (d == 0) throw Error(ErrorCode::parse_error, "rational with zero denominator");
	q_ = mpq_class(n, d);
	q_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
	std::string_view body = text;
	bool negative = false;
	if (!body.empty() && body.front() == '-') {
		negative = true;
		body.remove_prefix(1);
	}
	std::string_view num = body;
	std::string_view den;
	bool has_den = false;
	if (auto slash = body.find('/'); slash != std::string_view::npos) {
		num = body.substr(0, slash);
		den = body.substr(slash + 1);
		has_den = true;
	}
	if (!all_digits(num) || (has_den && !all_digits(den)))
		throw Error(ErrorCode::parse_error, "malformed rational '" + std::string(text) + "'");
	mpz_class n(std::string(num), 10);
	mpz_class d(1);
	if (has_den) {
		d = mpz_class(std::string(den), 10);
		if (mpz_sgn(d.get_mpz_t()) == 0)
			throw Error(ErrorCode::parse_error, "zero denominator in '" + std::string(text) + "'");
	}
	mpq_class q(n, d);
	q.canonicalize();
	if (negative) q = -q;
	return Rational(std::move(q));
}

std::string Rational::str() const { return q_.get_str(); }

Rational Rational::operator/(const Rational& o) const {
	if (o.sgn() == 0) throw Error(ErrorCode::parse_error, "division by zero rational");
	return Rational(mpq_class(q_ / o.q_));
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

Rational abs(const Rational& a) { return a.sgn() < 0 ? -a : a; }

}  // namespace throughsim
