#pragma once
#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/mpfr.hpp>
#include <string>

#include "qrv/errors.hpp"

namespace qrv {

using BigInt = boost::multiprecision::mpz_int;
using BigRational = boost::multiprecision::mpq_rational;
using Real = boost::multiprecision::mpfr_float;

inline int sign(const BigRational& q) { return q.sign(); }
inline int sign(const BigInt& z) { return z.sign(); }

inline BigRational rat_pow(const BigRational& x, long e) {
    if (e == 0) return BigRational(1);
    BigRational base = e > 0 ? x : BigRational(1) / x;
    unsigned long k = e > 0 ? e : -e;
    BigRational acc(1);
    while (k) {
        if (k & 1) acc *= base;
        base *= base;
        k >>= 1;
    }
    return acc;
}

inline BigInt int_pow(BigInt base, unsigned long e) {
    BigInt acc(1);
    while (e) {
        if (e & 1) acc *= base;
        base *= base;
        e >>= 1;
    }
    return acc;
}

// 10^k, k may be negative
inline BigRational pow10(long k) {
    return rat_pow(BigRational(10), k);
}

// floor(x) for a rational, as an integer
inline BigInt rational_floor(const BigRational& x) {
    BigInt num = numerator(x), den = denominator(x);
    if (num >= 0) return BigInt(num / den);
    BigInt q = (num - den + 1) / den;
    return q;
}

// Sets the thread default mpfr precision for its lifetime.
class PrecisionScope {
  public:
    explicit PrecisionScope(unsigned digits)
        : old_(Real::default_precision()) {
        Real::default_precision(digits + 12);
    }
    ~PrecisionScope() { Real::default_precision(old_); }
    PrecisionScope(const PrecisionScope&) = delete;
    PrecisionScope& operator=(const PrecisionScope&) = delete;

  private:
    unsigned old_;
};

struct PrecisionContext {
    unsigned working_digits = 50;
    BigRational target_rel_tol = pow10(-20);

    PrecisionContext() = default;
    PrecisionContext(unsigned digits, BigRational rel_tol)
        : working_digits(digits), target_rel_tol(std::move(rel_tol)) {
        if (working_digits < 25)
            throw domain_error("PrecisionContext: working_digits must be >= 25");
        if (target_rel_tol <= 0 || target_rel_tol < pow10(-long(working_digits) + 10))
            throw domain_error("PrecisionContext: target_rel_tol below 10^(-working_digits+10)");
    }
    explicit PrecisionContext(unsigned digits)
        : PrecisionContext(digits, pow10(-long(digits) + 10)) {}
};

inline Real to_real(const BigRational& q, unsigned digits) {
    PrecisionScope scope(digits);
    Real num(numerator(q).str());
    Real den(denominator(q).str());
    return num / den;
}

inline Real to_real(const BigRational& q, const PrecisionContext& ctx) {
    return to_real(q, ctx.working_digits);
}

// mpfr value as an exact rational (mantissa * 2^exp)
BigRational real_to_rational(const Real& x);

// round-trippable decimal with the requested significant digits
std::string decimal_string(const Real& x, unsigned digits);

BigRational parse_rational(const std::string& text);   // "a", "a/b", or decimal "1.25e-3"

// floor(sqrt(z)) for z >= 0
inline BigInt isqrt(const BigInt& z) {
    if (z < 0) throw domain_error("isqrt of negative");
    return sqrt(z);
}

}  // namespace qrv
