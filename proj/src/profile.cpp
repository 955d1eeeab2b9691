#include "qrv/profile.hpp"

namespace qrv {

namespace {

BigRational binomial(long n, long k) {
    BigRational acc(1);
    for (long i = 0; i < k; ++i) acc = acc * BigRational(n - i) / BigRational(i + 1);
    return acc;
}

}  // namespace

void ProfileFunction::add_shifted_term(TauLin coeff, BigRational power) {
    if (coeff.is_zero()) return;
    auto it = terms_.find(power);
    if (it == terms_.end()) {
        terms_.emplace(std::move(power), std::move(coeff));
        return;
    }
    it->second = it->second + coeff;
    if (it->second.is_zero()) terms_.erase(it);
}

void ProfileFunction::add_poly_term(TauLin coeff, int degree) {
    // s^j = ((s+1) - 1)^j
    for (long k = 0; k <= degree; ++k) {
        BigRational c = binomial(degree, k);
        if ((degree - k) % 2) c = -c;
        add_shifted_term(coeff * c, BigRational(k));
    }
}

ProfileFunction ProfileFunction::quartic() {
    ProfileFunction f;
    f.add_poly_term({BigRational(0), BigRational(1)}, 0);
    f.add_poly_term({BigRational(-8126), BigRational(0)}, 1);
    f.add_poly_term({BigRational(1662), BigRational(0)}, 2);
    f.add_poly_term({BigRational(-98), BigRational(0)}, 3);
    f.add_poly_term({BigRational(1), BigRational(0)}, 4);
    return f;
}

ProfileFunction ProfileFunction::fractional_order() {
    ProfileFunction f;
    f.add_shifted_term({BigRational(1028), BigRational(0)}, BigRational(1, 2));
    f.add_shifted_term({BigRational(-10), BigRational(0)}, BigRational(3, 2));
    f.add_shifted_term({BigRational(-121, 6), BigRational(0)}, BigRational(5, 2));
    f.add_shifted_term({BigRational(1), BigRational(0)}, BigRational(7, 2));
    f.add_shifted_term({BigRational(0), BigRational(1)}, BigRational(-1, 2));
    return f;
}

ProfileFunction ProfileFunction::for_dimension(int n) {
    if (n < 25) throw domain_error("profile defined for n >= 25");
    return n == 25 ? fractional_order() : quartic();
}

ProfileFunction ProfileFunction::derivative() const {
    ProfileFunction out;
    for (const auto& [p, c] : terms_) {
        if (p == 0) continue;
        out.add_shifted_term(c * p, p - 1);
    }
    return out;
}

bool ProfileFunction::has_fractional_powers() const {
    for (const auto& [p, c] : terms_)
        if (denominator(p) != 1) return true;
    return false;
}

SurdValue ProfileFunction::eval_exact(const BigRational& s, const SurdValue& tau) const {
    BigRational base = s + 1;
    if (has_fractional_powers() && base <= 0)
        throw domain_error("fractional profile requires s > -1");
    // value = A(s) + B(s) tau with A, B in Q + Q*sqrt(s+1)
    SurdValue a, b;
    BigInt rad = numerator(base) * denominator(base);  // sqrt(p/q) = sqrt(pq)/q
    SurdValue root_base = SurdValue(0, BigRational(1) / BigRational(denominator(base)), rad);
    for (const auto& [p, c] : terms_) {
        BigRational twice = 2 * p;
        long k = numerator(twice).convert_to<long>();  // power = k/2
        long whole = k >= 0 ? k / 2 : (k - 1) / 2;
        SurdValue factor(rat_pow(base, whole));
        if (k % 2 != 0) factor = factor * root_base;
        a = a + factor * SurdValue(c.c0);
        b = b + factor * SurdValue(c.c1);
    }
    if (!tau.is_rational() && !b.is_rational())
        throw domain_error("surd tau with irrational tau-coefficient is not representable");
    return a + b * tau;
}

Real ProfileFunction::eval_real(const Real& s, const Real& tau, unsigned digits) const {
    PrecisionScope scope(digits);
    Real base = s + 1;
    Real acc(0);
    for (const auto& [p, c] : terms_) {
        Real coeff = to_real(c.c0, digits) + to_real(c.c1, digits) * tau;
        acc += coeff * pow(base, to_real(p, digits));
    }
    return acc;
}

BigRational ProfileFunction::max_power() const {
    return terms_.empty() ? BigRational(0) : terms_.rbegin()->first;
}

BigRational ProfileFunction::min_power() const {
    return terms_.empty() ? BigRational(0) : terms_.begin()->first;
}

}  // namespace qrv
