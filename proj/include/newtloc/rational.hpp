#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>

namespace newtloc {

/// Arbitrary-precision signed integer.
using BigInt = boost::multiprecision::cpp_int;

/// Exact rational number. Always stored in lowest terms with a positive
/// denominator (the backend canonicalizes after every operation).
using Rational = boost::multiprecision::cpp_rational;

inline double to_double(const Rational& r) { return r.template convert_to<double>(); }
inline double to_double(const BigInt& n) { return n.template convert_to<double>(); }

inline BigInt numer(const Rational& r) { return numerator(r); }
inline BigInt denom(const Rational& r) { return denominator(r); }

inline BigInt factorial(unsigned n) {
    BigInt f = 1;
    for (unsigned i = 2; i <= n; ++i) f *= i;
    return f;
}

inline BigInt binomial(unsigned n, unsigned k) {
    if (k > n) return 0;
    if (k > n - k) k = n - k;
    BigInt b = 1;
    for (unsigned i = 0; i < k; ++i) {
        b *= (n - i);
        b /= (i + 1);  // exact: product of j consecutive integers is divisible by j!
    }
    return b;
}

/// Rising factorial (u)_k = u(u+1)...(u+k-1), with (u)_0 = 1.
inline Rational pochhammer(const Rational& u, unsigned k) {
    Rational p = 1;
    Rational f = u;
    for (unsigned i = 0; i < k; ++i) {
        p *= f;
        f += 1;
    }
    return p;
}

inline BigInt bigint_from_string(const std::string& s) { return BigInt(s); }

inline Rational rational_from_strings(const std::string& num, const std::string& den) {
    BigInt d(den);
    if (d == 0) throw std::domain_error("rational: zero denominator");
    return Rational(BigInt(num), d);
}

}  // namespace newtloc
