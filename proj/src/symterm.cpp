#include "qrv/symterm.hpp"

#include <sstream>

namespace qrv {

namespace {

// fold integer part of the two-power into the coefficient
void normalize_two(BigRational& coeff, BigRational& two_pow) {
    BigInt fl = rational_floor(two_pow);
    if (fl != 0) {
        coeff *= rat_pow(BigRational(2), fl.convert_to<long>());
        two_pow -= BigRational(fl);
    }
}

}  // namespace

void RadialTermSum::add_term(RadialTerm t) {
    // canonical reduction against (lam^2 + r^2) = K:
    //   r^a K^-b  ->  r^(a-2) K^-(b-1) - lam^2 r^(a-2) K^-b   while a >= 2, b != 0
    //   K^c (c positive integer)  ->  lam^2 K^(c-1) + r^2 K^(c-1)
    // leaves r_pow in [0,2) whenever a core is present
    std::vector<RadialTerm> work{std::move(t)};
    while (!work.empty()) {
        RadialTerm cur = std::move(work.back());
        work.pop_back();
        if (cur.coeff == 0) continue;
        if (cur.core_pow < 0 && denominator(cur.core_pow) == 1) {
            RadialTerm a = cur, b = cur;
            a.core_pow += 1;
            a.lam_pow += 2;
            b.core_pow += 1;
            b.r_pow += 2;
            work.push_back(std::move(a));
            work.push_back(std::move(b));
            continue;
        }
        if (cur.r_pow >= 2 && cur.core_pow != 0) {
            // r^(2k+rho) = sum_j C(k,j) K^j (-lam^2)^(k-j) r^rho
            long k = rational_floor(cur.r_pow / 2).convert_to<long>();
            BigRational rho = cur.r_pow - 2 * k;
            BigRational binom(1);
            for (long j = 0; j <= k; ++j) {
                RadialTerm piece = cur;
                piece.coeff = cur.coeff * binom * ((k - j) % 2 ? -1 : 1);
                piece.r_pow = rho;
                piece.core_pow = cur.core_pow - j;
                piece.lam_pow = cur.lam_pow + 2 * (k - j);
                work.push_back(std::move(piece));
                binom = binom * BigRational(k - j) / BigRational(j + 1);
            }
            continue;
        }
        normalize_two(cur.coeff, cur.two_pow);
        Key key{cur.two_pow, cur.lam_pow, cur.r_pow, cur.core_pow};
        auto it = terms_.find(key);
        if (it == terms_.end()) {
            terms_.emplace(key, cur.coeff);
        } else {
            it->second += cur.coeff;
            if (it->second == 0) terms_.erase(it);
        }
    }
}

std::vector<RadialTerm> RadialTermSum::terms() const {
    std::vector<RadialTerm> out;
    out.reserve(terms_.size());
    for (const auto& [k, c] : terms_)
        out.push_back({c, std::get<0>(k), std::get<1>(k), std::get<2>(k), std::get<3>(k)});
    return out;
}

RadialTermSum RadialTermSum::operator+(const RadialTermSum& o) const {
    RadialTermSum out = *this;
    for (const auto& t : o.terms()) out.add_term(t);
    return out;
}

RadialTermSum RadialTermSum::operator-(const RadialTermSum& o) const {
    return *this + o * BigRational(-1);
}

RadialTermSum RadialTermSum::operator*(const RadialTermSum& o) const {
    RadialTermSum out;
    for (const auto& a : terms())
        for (const auto& b : o.terms())
            out.add_term({a.coeff * b.coeff, a.two_pow + b.two_pow, a.lam_pow + b.lam_pow,
                          a.r_pow + b.r_pow, a.core_pow + b.core_pow});
    return out;
}

RadialTermSum RadialTermSum::operator*(const BigRational& s) const {
    RadialTermSum out;
    if (s == 0) return out;
    for (auto t : terms()) {
        t.coeff *= s;
        out.add_term(t);
    }
    return out;
}

Real RadialTermSum::eval(const BigRational& lam, const BigRational& r, unsigned digits) const {
    PrecisionScope scope(digits);
    Real lamr = to_real(lam, digits), rr = to_real(r, digits);
    Real core = lamr * lamr + rr * rr;
    Real acc(0);
    for (const auto& t : terms()) {
        Real v = to_real(t.coeff, digits);
        if (t.two_pow != 0) v *= pow(Real(2), to_real(t.two_pow, digits));
        if (t.lam_pow != 0) v *= pow(lamr, to_real(t.lam_pow, digits));
        if (t.r_pow != 0) v *= pow(rr, to_real(t.r_pow, digits));
        if (t.core_pow != 0) v *= pow(core, -to_real(t.core_pow, digits));
        acc += v;
    }
    return acc;
}

std::string RadialTermSum::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& t : terms()) {
        if (!first) os << " + ";
        os << t.coeff;
        if (t.two_pow != 0) os << " * 2^(" << t.two_pow << ")";
        if (t.lam_pow != 0) os << " * L^(" << t.lam_pow << ")";
        if (t.r_pow != 0) os << " * r^(" << t.r_pow << ")";
        if (t.core_pow != 0) os << " * (L^2+r^2)^-(" << t.core_pow << ")";
        first = false;
    }
    return os.str();
}

RadialTermSum d_dr(const RadialTermSum& s) {
    RadialTermSum out;
    for (const auto& t : s.terms()) {
        if (t.r_pow != 0)
            out.add_term({t.coeff * t.r_pow, t.two_pow, t.lam_pow, t.r_pow - 1, t.core_pow});
        if (t.core_pow != 0)
            out.add_term({t.coeff * -2 * t.core_pow, t.two_pow, t.lam_pow, t.r_pow + 1,
                          t.core_pow + 1});
    }
    return out;
}

RadialTermSum radial_laplacian(const RadialTermSum& s, int n) {
    if (n < 2) throw domain_error("radial_laplacian requires n >= 2");
    RadialTermSum first = d_dr(s);
    RadialTermSum out = d_dr(first);
    for (auto t : first.terms()) {
        t.coeff *= n - 1;
        t.r_pow -= 1;
        out.add_term(t);
    }
    return out;
}

RadialTermSum radial_bilaplacian(const RadialTermSum& s, int n) {
    return radial_laplacian(radial_laplacian(s, n), n);
}

RadialTermSum rterm(const BigRational& coeff, const BigRational& two_pow,
                    const BigRational& lam_pow, const BigRational& r_pow,
                    const BigRational& core_pow) {
    return RadialTermSum({coeff, two_pow, lam_pow, r_pow, core_pow});
}

RadialTermSum bubble_power(int n, const BigRational& m) {
    if (n < 5) throw domain_error("bubble_power requires n >= 5");
    BigRational half_m = m / 2;
    return rterm(1, half_m, half_m, 0, half_m);
}

HalfLineIntegral integrate_halfline(const RadialTermSum& s) {
    HalfLineIntegral out;
    for (const auto& t : s.terms()) {
        BigRational a = t.r_pow, b = t.core_pow;
        if (!(a > -1))
            throw divergence_error("term diverges at 0: " + RadialTermSum(t).str());
        if (!(2 * b - a > 1))
            throw divergence_error("term diverges at infinity: " + RadialTermSum(t).str());
        BigRational x = (a + 1) / 2, y = b - x;
        GammaValue val = GammaValue::beta(x, y) * (t.coeff / 2) * GammaValue::two_to(t.two_pow);
        BigRational lam_exp = t.lam_pow + a + 1 - 2 * b;
        auto it = out.parts_.find(lam_exp);
        if (it == out.parts_.end()) it = out.parts_.emplace(lam_exp, GammaSum()).first;
        it->second.add(val);
        if (it->second.is_zero()) out.parts_.erase(it);
    }
    return out;
}

Real HalfLineIntegral::value(const BigRational& lam, unsigned digits) const {
    PrecisionScope scope(digits);
    Real lamr = to_real(lam, digits);
    Real acc(0);
    for (const auto& [e, sum] : parts_)
        acc += pow(lamr, to_real(e, digits)) * sum.to_real(digits);
    return acc;
}

bool HalfLineIntegral::try_pi_form(BigRational& rat, int& pi_sqrt, BigRational& lam_exp) const {
    if (parts_.empty()) {
        rat = 0;
        pi_sqrt = 0;
        lam_exp = 0;
        return true;
    }
    if (parts_.size() != 1) return false;
    lam_exp = parts_.begin()->first;
    return parts_.begin()->second.try_pi_form(rat, pi_sqrt);
}

std::string HalfLineIntegral::str() const {
    if (parts_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, sum] : parts_) {
        if (!first) os << "  +  ";
        os << "L^(" << e << ") * [" << sum.str() << "]";
        first = false;
    }
    return os.str();
}

HalfLineValue integrate_halfline(const RadialTermSum& s, const BigRational& lambda_value,
                                 unsigned digits) {
    HalfLineIntegral sym = integrate_halfline(s);
    return {sym.str(), sym.value(lambda_value, digits)};
}

}  // namespace qrv
