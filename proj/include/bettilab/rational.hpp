#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>
#include <string>

namespace bettilab {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline BigInt binomial_big(long long n, long long k) {
	if (k < 0 || n < 0 || k > n) return 0;
	if (k > n - k) k = n - k;
	BigInt result = 1;
	for (long long i = 1; i <= k; ++i) {
		result *= (n - k + i);
		result /= i;
	}
	return result;
}

inline Rational pow_rational(const Rational& base, long long e) {
	if (e < 0) {
		if (base == 0) throw std::domain_error("pow_rational: 0^negative");
		Rational inv = Rational(denominator(base), numerator(base));
		return pow_rational(inv, -e);
	}
	Rational result = 1, b = base;
	while (e > 0) {
		if (e & 1) result *= b;
		b *= b;
		e >>= 1;
	}
	return result;
}

// Accepts "a/b" or a plain integer string.
inline Rational parse_rational(const std::string& text) {
	const auto slash = text.find('/');
	try {
		if (slash == std::string::npos) return Rational(BigInt(text));
		const BigInt num(text.substr(0, slash));
		const BigInt den(text.substr(slash + 1));
		if (den == 0) throw std::invalid_argument("zero denominator");
		return Rational(num, den);
	} catch (const std::exception&) {
		throw std::invalid_argument("parse_rational: cannot parse '" + text + "'");
	}
}

inline std::string rational_to_string(const Rational& value) {
	if (denominator(value) == 1) return numerator(value).str();
	return numerator(value).str() + "/" + denominator(value).str();
}

}  // namespace bettilab
