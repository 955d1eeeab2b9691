#include "qrv/surd.hpp"

#include <sstream>

namespace qrv {

namespace {

// move square factors of d into scale, by perfect-square test and
// trial division by primes below the bound
void reduce_radicand(BigInt& d, BigInt& scale, unsigned long prime_bound = 100000) {
    if (d <= 1) return;
    BigInt r = isqrt(d);
    if (r * r == d) {
        scale *= r;
        d = 1;
        return;
    }
    auto strip = [&](unsigned long p) {
        BigInt p2 = BigInt(p) * p;
        while (d % p2 == 0) {
            d /= p2;
            scale *= p;
        }
    };
    strip(2);
    strip(3);
    for (unsigned long p = 5; p <= prime_bound; p += 6) {
        strip(p);
        strip(p + 2);
    }
    r = isqrt(d);
    if (r * r == d) {
        scale *= r;
        d = 1;
    }
}

}  // namespace

SurdValue::SurdValue(BigRational p, BigRational q, BigInt d)
    : p_(std::move(p)), q_(std::move(q)), d_(std::move(d)) {
    if (d_ < 0) throw domain_error("negative radicand");
    normalize();
}

void SurdValue::normalize() {
    if (q_ == 0 || d_ == 0) {
        q_ = 0;
        d_ = 0;
        return;
    }
    BigInt scale(1);
    reduce_radicand(d_, scale);
    q_ *= BigRational(scale);
    if (d_ == 1) {
        p_ += q_;
        q_ = 0;
        d_ = 0;
    }
}

BigInt SurdValue::common_radicand(const SurdValue& o) const {
    if (d_ == 0) return o.d_;
    if (o.d_ == 0 || o.d_ == d_) return d_;
    throw domain_error("mixing surds with different radicands");
}

SurdValue SurdValue::operator+(const SurdValue& o) const {
    return SurdValue(p_ + o.p_, q_ + o.q_, common_radicand(o));
}

SurdValue SurdValue::operator-(const SurdValue& o) const {
    return SurdValue(p_ - o.p_, q_ - o.q_, common_radicand(o));
}

SurdValue SurdValue::operator*(const SurdValue& o) const {
    BigInt d = common_radicand(o);
    return SurdValue(p_ * o.p_ + q_ * o.q_ * BigRational(d), p_ * o.q_ + q_ * o.p_, d);
}

SurdValue SurdValue::operator/(const SurdValue& o) const {
    if (o.is_zero()) throw domain_error("surd division by zero");
    BigInt d = common_radicand(o);
    BigRational norm = o.p_ * o.p_ - o.q_ * o.q_ * BigRational(d);
    if (norm == 0) throw domain_error("surd division: conjugate norm is zero");
    SurdValue conj(o.p_, -o.q_, d);
    SurdValue prod = *this * conj;
    return SurdValue(prod.p_ / norm, prod.q_ / norm, d);
}

int SurdValue::sign() const {
    int sp = qrv::sign(p_), sq = qrv::sign(q_);
    if (sq == 0) return sp;
    if (sp == 0) return sq;
    if (sp == sq) return sp;
    // opposite signs: compare p^2 against q^2 d
    BigRational lhs = p_ * p_, rhs = q_ * q_ * BigRational(d_);
    if (lhs == rhs) return 0;
    return (lhs > rhs) == (sp > 0) ? sp : sq;
}

Real SurdValue::to_real(unsigned digits) const {
    PrecisionScope scope(digits);
    Real v = qrv::to_real(p_, digits);
    if (q_ != 0) v += qrv::to_real(q_, digits) * sqrt(Real(d_.str()));
    return v;
}

Interval SurdValue::enclosure(unsigned digits) const {
    if (q_ == 0) return Interval::point(p_);
    // floor(sqrt(d * 10^{2k})) / 10^k brackets sqrt(d) within 10^-k
    long k = long(digits) + 2;
    BigInt scaled = d_ * int_pow(BigInt(10), 2 * k);
    BigInt s = isqrt(scaled);
    BigRational ten_k(int_pow(BigInt(10), k));
    Interval root(BigRational(s) / ten_k, BigRational(s + 1) / ten_k);
    Interval qs = root.scaled(q_);
    return {p_ + qs.lo, p_ + qs.hi};
}

std::string SurdValue::str() const {
    std::ostringstream os;
    os << p_;
    if (q_ != 0) os << " + (" << q_ << ")*sqrt(" << d_ << ")";
    return os.str();
}

QuadraticRoots solve_quadratic(const BigRational& a, const BigRational& b, const BigRational& c) {
    if (a == 0) throw domain_error("solve_quadratic: leading coefficient is zero");
    BigRational disc = b * b - 4 * a * c;
    QuadraticRoots out;
    out.discriminant_sign = sign(disc);
    if (out.discriminant_sign < 0) return out;
    // disc = num/den; sqrt(disc) = sqrt(num*den)/den
    BigInt rad = numerator(disc) * denominator(disc);
    SurdValue root_disc = SurdValue(0, BigRational(1) / BigRational(denominator(disc)), rad);
    SurdValue minus_b(-b);
    BigRational inv2a = BigRational(1) / (2 * a);
    SurdValue r1 = (minus_b - root_disc) * SurdValue(inv2a);
    SurdValue r2 = (minus_b + root_disc) * SurdValue(inv2a);
    if ((r2 - r1).sign() < 0) std::swap(r1, r2);
    out.lesser = r1;
    out.greater = r2;
    return out;
}

SurdValue eval_at(const RationalPolynomial& p, const SurdValue& x) {
    SurdValue acc;
    for (int k = p.degree(); k >= 0; --k) acc = acc * x + SurdValue(p.coeff(k));
    return acc;
}

}  // namespace qrv
