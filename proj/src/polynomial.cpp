#include "qrv/polynomial.hpp"

#include <algorithm>
#include <mpfr.h>
#include <sstream>

namespace qrv {

BigRational real_to_rational(const Real& x) {
    if (x == 0) return BigRational(0);
    mpfr_srcptr raw = x.backend().data();
    BigInt mant;
    mpfr_exp_t e = mpfr_get_z_2exp(mant.backend().data(), raw);
    BigRational out(mant);
    if (e >= 0)
        out *= rat_pow(BigRational(2), e);
    else
        out /= rat_pow(BigRational(2), -e);
    return out;
}

std::string decimal_string(const Real& x, unsigned digits) {
    std::ostringstream os;
    os.precision(digits);
    os << x;
    return os.str();
}

BigRational parse_rational(const std::string& text) {
    if (text.empty()) throw data_error("empty rational literal");
    auto slash = text.find('/');
    if (slash != std::string::npos) {
        BigInt num(text.substr(0, slash));
        BigInt den(text.substr(slash + 1));
        if (den == 0) throw data_error("zero denominator in " + text);
        return BigRational(num) / BigRational(den);
    }
    auto epos = text.find_first_of("eE");
    std::string mant = epos == std::string::npos ? text : text.substr(0, epos);
    long exp10 = epos == std::string::npos ? 0 : std::stol(text.substr(epos + 1));
    auto dot = mant.find('.');
    if (dot != std::string::npos) {
        exp10 -= long(mant.size() - dot - 1);
        mant.erase(dot, 1);
    }
    if (mant.empty() || mant == "-" || mant == "+") throw data_error("bad rational literal " + text);
    return BigRational(BigInt(mant)) * pow10(exp10);
}

void RationalPolynomial::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

const BigRational& RationalPolynomial::leading() const {
    if (c_.empty()) throw domain_error("leading coefficient of zero polynomial");
    return c_.back();
}

BigRational RationalPolynomial::operator()(const BigRational& x) const {
    BigRational acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

RationalPolynomial RationalPolynomial::derivative() const {
    if (c_.size() <= 1) return {};
    std::vector<BigRational> d(c_.size() - 1);
    for (size_t k = 1; k < c_.size(); ++k) d[k - 1] = c_[k] * BigRational(long(k));
    return RationalPolynomial(std::move(d));
}

RationalPolynomial RationalPolynomial::operator+(const RationalPolynomial& o) const {
    std::vector<BigRational> out(std::max(c_.size(), o.c_.size()), BigRational(0));
    for (size_t k = 0; k < c_.size(); ++k) out[k] += c_[k];
    for (size_t k = 0; k < o.c_.size(); ++k) out[k] += o.c_[k];
    return RationalPolynomial(std::move(out));
}

RationalPolynomial RationalPolynomial::operator-(const RationalPolynomial& o) const {
    return *this + (o * BigRational(-1));
}

RationalPolynomial RationalPolynomial::operator*(const RationalPolynomial& o) const {
    if (is_zero() || o.is_zero()) return {};
    std::vector<BigRational> out(c_.size() + o.c_.size() - 1, BigRational(0));
    for (size_t i = 0; i < c_.size(); ++i)
        for (size_t j = 0; j < o.c_.size(); ++j) out[i + j] += c_[i] * o.c_[j];
    return RationalPolynomial(std::move(out));
}

RationalPolynomial RationalPolynomial::operator*(const BigRational& s) const {
    std::vector<BigRational> out(c_);
    for (auto& c : out) c *= s;
    return RationalPolynomial(std::move(out));
}

std::pair<RationalPolynomial, RationalPolynomial> RationalPolynomial::divmod(
    const RationalPolynomial& d) const {
    if (d.is_zero()) throw domain_error("polynomial division by zero");
    RationalPolynomial r = *this;
    std::vector<BigRational> q(std::max(degree() - d.degree() + 1, 0), BigRational(0));
    while (!r.is_zero() && r.degree() >= d.degree()) {
        int k = r.degree() - d.degree();
        BigRational f = r.leading() / d.leading();
        q[k] = f;
        r = r - RationalPolynomial::monomial(k, f) * d;
    }
    return {RationalPolynomial(std::move(q)), r};
}

RationalPolynomial RationalPolynomial::primitive_part() const {
    if (is_zero()) return {};
    BigInt num_gcd(0), den_lcm(1);
    for (const auto& c : c_) {
        num_gcd = gcd(num_gcd, numerator(c));
        den_lcm = lcm(den_lcm, denominator(c));
    }
    BigRational scale = BigRational(den_lcm) / BigRational(num_gcd);
    if (leading() < 0) scale = -scale;
    return *this * scale;
}

std::string RationalPolynomial::str(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int k = degree(); k >= 0; --k) {
        if (coeff(k) == 0) continue;
        if (!first) os << (coeff(k) > 0 ? " + " : " - ");
        else if (coeff(k) < 0) os << "-";
        BigRational a = abs(coeff(k));
        if (a != 1 || k == 0) os << a;
        if (k > 0) {
            if (a != 1) os << "*";
            os << var;
            if (k > 1) os << "^" << k;
        }
        first = false;
    }
    return os.str();
}

RationalPolynomial gcd(RationalPolynomial a, RationalPolynomial b) {
    a = a.primitive_part();
    b = b.primitive_part();
    while (!b.is_zero()) {
        auto [q, r] = a.divmod(b);
        a = b;
        b = r.primitive_part();
    }
    return a;
}

RationalPolynomial square_free_part(const RationalPolynomial& p) {
    if (p.degree() <= 1) return p;
    auto g = gcd(p, p.derivative());
    if (g.degree() == 0) return p;
    return p.divmod(g).first;
}

BigRational cauchy_root_bound(const RationalPolynomial& p) {
    if (p.is_zero()) throw domain_error("root bound of zero polynomial");
    BigRational m(0);
    for (int k = 0; k < p.degree(); ++k) m = std::max(m, BigRational(abs(p.coeff(k) / p.leading())));
    return m + 1;
}

std::vector<RationalPolynomial> sturm_chain(const RationalPolynomial& p) {
    std::vector<RationalPolynomial> chain;
    chain.push_back(p.primitive_part());
    if (p.degree() >= 1) chain.push_back(p.derivative().primitive_part());
    while (chain.back().degree() >= 1) {
        auto r = chain[chain.size() - 2].divmod(chain.back()).second;
        if (r.is_zero()) break;
        chain.push_back((-r).primitive_part());
    }
    return chain;
}

static int variations(const std::vector<RationalPolynomial>& chain, const BigRational& x) {
    int var = 0, prev = 0;
    for (const auto& f : chain) {
        int s = sign(f(x));
        if (s == 0) continue;
        if (prev != 0 && s != prev) ++var;
        prev = s;
    }
    return var;
}

long sturm_count(const std::vector<RationalPolynomial>& chain,
                 const BigRational& lo, const BigRational& hi) {
    return variations(chain, lo) - variations(chain, hi);
}

long count_real_roots(const RationalPolynomial& p) {
    if (p.is_zero()) throw domain_error("root count of zero polynomial");
    if (p.degree() == 0) return 0;
    auto q = square_free_part(p);
    auto chain = sturm_chain(q);
    BigRational bound = cauchy_root_bound(q);
    return sturm_count(chain, -bound, bound);
}

namespace {

// q square-free, q(lo) != 0, q(hi) != 0, exactly one root in (lo, hi); shrink to width
Interval refine(const RationalPolynomial& q, const std::vector<RationalPolynomial>& chain,
                BigRational lo, BigRational hi, const BigRational& width) {
    while (hi - lo > width) {
        BigRational mid = (lo + hi) / 2;
        if (q(mid) == 0) return Interval::point(mid);
        if (sturm_count(chain, lo, mid) == 1)
            hi = mid;
        else
            lo = mid;
    }
    return {lo, hi};
}

void isolate(const RationalPolynomial& q, const std::vector<RationalPolynomial>& chain,
             const BigRational& lo, const BigRational& hi, const BigRational& width,
             std::vector<Interval>& out) {
    long c = sturm_count(chain, lo, hi);
    if (c == 0) return;
    if (c == 1) {
        out.push_back(refine(q, chain, lo, hi, width));
        return;
    }
    BigRational mid = (lo + hi) / 2;
    if (q(mid) == 0) {
        out.push_back(Interval::point(mid));
        // exclude an interval around the known root before recursing
        BigRational eps = std::min(width, BigRational(hi - lo)) / 4;
        BigRational a = mid - eps, b = mid + eps;
        while (q(a) == 0) a -= eps;  // cannot loop forever, roots are finite
        while (q(b) == 0) b += eps;
        isolate(q, chain, lo, a, width, out);
        isolate(q, chain, b, hi, width, out);
        return;
    }
    isolate(q, chain, lo, mid, width, out);
    isolate(q, chain, mid, hi, width, out);
}

}  // namespace

std::vector<Interval> isolate_real_roots(const RationalPolynomial& p, const BigRational& width) {
    if (p.is_zero()) throw domain_error("isolate_real_roots: zero polynomial");
    if (width <= 0) throw domain_error("isolate_real_roots: width must be positive");
    if (p.degree() == 0) return {};
    auto q = square_free_part(p).primitive_part();
    auto chain = sturm_chain(q);
    BigRational bound = cauchy_root_bound(q);
    std::vector<Interval> out;
    isolate(q, chain, -bound, bound, width, out);
    std::sort(out.begin(), out.end(),
              [](const Interval& a, const Interval& b) { return a.lo < b.lo; });
    return out;
}

Interval largest_real_root(const RationalPolynomial& p, const BigRational& width) {
    auto roots = isolate_real_roots(p, width);
    if (roots.empty()) throw domain_error("polynomial has no real root");
    return roots.back();
}

}  // namespace qrv
