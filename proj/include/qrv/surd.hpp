#pragma once
#include <optional>
#include <string>

#include "qrv/interval.hpp"
#include "qrv/numeric.hpp"
#include "qrv/polynomial.hpp"

namespace qrv {

// exact value p + q*sqrt(d) with d a non-negative integer.
// Normal form: q == 0 implies d == 0; perfect-square d is folded into p;
// square factors of d found by small-prime trial division are moved into q.
// Full square-freeness of d is not decidable without factoring, so the
// reduction is bounded; arithmetic never depends on it.
class SurdValue {
  public:
    SurdValue() : p_(0), q_(0), d_(0) {}
    SurdValue(BigRational rational) : p_(std::move(rational)), q_(0), d_(0) {}
    SurdValue(BigRational p, BigRational q, BigInt d);

    static SurdValue sqrt_of(const BigInt& d) { return SurdValue(0, 1, d); }

    const BigRational& rational_part() const { return p_; }
    const BigRational& surd_coeff() const { return q_; }
    const BigInt& radicand() const { return d_; }
    bool is_rational() const { return q_ == 0; }
    bool is_zero() const { return p_ == 0 && q_ == 0; }

    SurdValue operator+(const SurdValue& o) const;
    SurdValue operator-(const SurdValue& o) const;
    SurdValue operator*(const SurdValue& o) const;
    SurdValue operator/(const SurdValue& o) const;
    SurdValue operator-() const { return SurdValue(-p_, -q_, d_); }
    bool operator==(const SurdValue& o) const {
        return p_ == o.p_ && q_ == o.q_ && d_ == o.d_;
    }

    int sign() const;  // exact
    bool operator<(const BigRational& x) const { return (*this - SurdValue(x)).sign() < 0; }
    bool operator>(const BigRational& x) const { return (*this - SurdValue(x)).sign() > 0; }

    Real to_real(unsigned digits) const;
    // outward-rounded rational enclosure with width <= 10^-digits
    Interval enclosure(unsigned digits) const;
    std::string str() const;

  private:
    void normalize();
    BigInt common_radicand(const SurdValue& o) const;
    BigRational p_, q_;
    BigInt d_;
};

struct QuadraticRoots {
    int discriminant_sign = 0;     // exact sign of b^2 - 4ac
    // present when discriminant_sign >= 0; lesser = (-b - sqrt(D))/(2a) for a > 0
    std::optional<SurdValue> lesser, greater;
};

// exact roots of a x^2 + b x + c; a must be nonzero
QuadraticRoots solve_quadratic(const BigRational& a, const BigRational& b, const BigRational& c);

// polynomial evaluation in surd arithmetic
SurdValue eval_at(const RationalPolynomial& p, const SurdValue& x);

}  // namespace qrv
