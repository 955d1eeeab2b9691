#include "qrv/gammasym.hpp"

#include <boost/math/constants/constants.hpp>
#include <sstream>

namespace qrv {

void GammaValue::fold() {
    if (rat_ == 0) {
        two_pow_ = 0;
        pi_sqrt_ = 0;
        factors_.clear();
        return;
    }
    // keep two_pow in [0,1)
    BigInt fl = rational_floor(two_pow_);
    if (fl != 0) {
        long e = fl.convert_to<long>();
        rat_ *= rat_pow(BigRational(2), e);
        two_pow_ -= BigRational(fl);
    }
    for (auto it = factors_.begin(); it != factors_.end();)
        it = it->second == 0 ? factors_.erase(it) : std::next(it);
}

GammaValue GammaValue::gamma(const BigRational& x) {
    if (x <= 0 && denominator(x) == 1)
        throw domain_error("gamma at non-positive integer");
    GammaValue out{BigRational(1)};
    BigRational a = x;
    while (a > 1) {
        a -= 1;
        out.rat_ *= a;
    }
    while (a < 0) {           // reflectionless shift for negative rationals
        out.rat_ /= a;
        a += 1;
    }
    if (a == 1) {
        out.fold();
        return out;
    }
    if (a == BigRational(1, 2)) {
        out.pi_sqrt_ = 1;
        out.fold();
        return out;
    }
    out.factors_[a] = 1;
    out.fold();
    return out;
}

GammaValue GammaValue::beta(const BigRational& x, const BigRational& y) {
    if (x <= 0 || y <= 0) throw domain_error("beta requires positive arguments");
    return gamma(x) * gamma(y) / gamma(x + y);
}

GammaValue GammaValue::two_to(const BigRational& e) {
    GammaValue v{BigRational(1)};
    v.two_pow_ = e;
    v.fold();
    return v;
}

GammaValue GammaValue::operator*(const GammaValue& o) const {
    GammaValue out;
    out.rat_ = rat_ * o.rat_;
    out.two_pow_ = two_pow_ + o.two_pow_;
    out.pi_sqrt_ = pi_sqrt_ + o.pi_sqrt_;
    out.factors_ = factors_;
    for (const auto& [a, e] : o.factors_) out.factors_[a] += e;
    out.fold();
    return out;
}

GammaValue GammaValue::operator/(const GammaValue& o) const {
    if (o.rat_ == 0) throw domain_error("GammaValue division by zero");
    GammaValue out;
    out.rat_ = rat_ / o.rat_;
    out.two_pow_ = two_pow_ - o.two_pow_;
    out.pi_sqrt_ = pi_sqrt_ - o.pi_sqrt_;
    out.factors_ = factors_;
    for (const auto& [a, e] : o.factors_) out.factors_[a] -= e;
    out.fold();
    return out;
}

GammaValue GammaValue::operator*(const BigRational& s) const {
    GammaValue out = *this;
    out.rat_ *= s;
    out.fold();
    return out;
}

std::string GammaValue::signature() const {
    std::ostringstream os;
    os << "2^" << two_pow_ << "|pi" << pi_sqrt_;
    for (const auto& [a, e] : factors_) os << "|G(" << a << ")^" << e;
    return os.str();
}

Real GammaValue::to_real(unsigned digits) const {
    PrecisionScope scope(digits);
    Real v = qrv::to_real(rat_, digits);
    if (two_pow_ != 0) v *= pow(Real(2), qrv::to_real(two_pow_, digits));
    if (pi_sqrt_ != 0) v *= pow(sqrt(boost::math::constants::pi<Real>()), pi_sqrt_);
    for (const auto& [a, e] : factors_) v *= pow(tgamma(qrv::to_real(a, digits)), e);
    return v;
}

std::string GammaValue::str() const {
    std::ostringstream os;
    os << rat_;
    if (two_pow_ != 0) os << " * 2^(" << two_pow_ << ")";
    if (pi_sqrt_ != 0) os << " * pi^(" << pi_sqrt_ << "/2)";
    for (const auto& [a, e] : factors_) os << " * Gamma(" << a << ")^" << e;
    return os.str();
}

void GammaSum::add(const GammaValue& v) {
    if (v.is_zero()) return;
    auto key = v.signature();
    auto it = parts_.find(key);
    if (it == parts_.end()) {
        parts_.emplace(key, v);
        return;
    }
    GammaValue merged = it->second * (BigRational(1) + v.rational_factor() / it->second.rational_factor());
    if (merged.is_zero())
        parts_.erase(it);
    else
        it->second = merged;
}

void GammaSum::add(const GammaSum& o) {
    for (const auto& [k, v] : o.parts_) add(v);
}

GammaSum GammaSum::operator*(const BigRational& s) const {
    GammaSum out;
    if (s == 0) return out;
    for (const auto& [k, v] : parts_) out.parts_.emplace(k, v * s);
    return out;
}

bool GammaSum::try_rational(BigRational& out) const {
    if (parts_.empty()) {
        out = 0;
        return true;
    }
    if (parts_.size() != 1 || !parts_.begin()->second.is_pure_rational()) return false;
    out = parts_.begin()->second.rational_factor();
    return true;
}

bool GammaSum::try_pi_form(BigRational& out, int& pi_sqrt) const {
    if (parts_.empty()) {
        out = 0;
        pi_sqrt = 0;
        return true;
    }
    if (parts_.size() != 1 || !parts_.begin()->second.is_pi_form()) return false;
    out = parts_.begin()->second.rational_factor();
    pi_sqrt = parts_.begin()->second.pi_sqrt_power();
    return true;
}

Real GammaSum::to_real(unsigned digits) const {
    PrecisionScope scope(digits);
    Real v(0);
    for (const auto& [k, part] : parts_) v += part.to_real(digits);
    return v;
}

std::string GammaSum::str() const {
    if (parts_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, v] : parts_) {
        if (!first) os << "  +  ";
        os << v.str();
        first = false;
    }
    return os.str();
}

}  // namespace qrv
