#include "qrv/energy_explicit.hpp"

#include "qrv/dataio.hpp"
#include "qrv/quadrature.hpp"

namespace qrv {

void TauQuadPoly::trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

TauQuadPoly TauQuadPoly::from_rational(const RationalPolynomial& p, int tau_degree) {
    std::vector<TauQuad> out(p.degree() + 1);
    for (int k = 0; k <= p.degree(); ++k) {
        TauQuad c;
        (tau_degree == 0 ? c.c0 : tau_degree == 1 ? c.c1 : c.c2) = p.coeff(k);
        out[k] = c;
    }
    return TauQuadPoly(std::move(out));
}

void TauQuadPoly::add_term(int lam_pow, const TauQuad& c) {
    if (int(c_.size()) <= lam_pow) c_.resize(lam_pow + 1);
    c_[lam_pow] = c_[lam_pow] + c;
    trim();
}

TauQuad TauQuadPoly::operator()(const BigRational& lam) const {
    TauQuad acc;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it)
        acc = TauQuad{acc.c0 * lam + it->c0, acc.c1 * lam + it->c1, acc.c2 * lam + it->c2};
    return acc;
}

TauQuadPoly TauQuadPoly::derivative() const {
    if (c_.size() <= 1) return {};
    std::vector<TauQuad> out(c_.size() - 1);
    for (size_t k = 1; k < c_.size(); ++k) out[k - 1] = c_[k] * BigRational(long(k));
    return TauQuadPoly(std::move(out));
}

TauQuadPoly TauQuadPoly::operator+(const TauQuadPoly& o) const {
    std::vector<TauQuad> out(std::max(c_.size(), o.c_.size()));
    for (size_t k = 0; k < out.size(); ++k) out[k] = coeff(k) + o.coeff(k);
    return TauQuadPoly(std::move(out));
}

TauQuadPoly TauQuadPoly::operator-(const TauQuadPoly& o) const {
    return *this + o * BigRational(-1);
}

TauQuadPoly TauQuadPoly::operator*(const RationalPolynomial& p) const {
    if (is_zero() || p.is_zero()) return {};
    std::vector<TauQuad> out(c_.size() + p.degree());
    for (size_t i = 0; i < c_.size(); ++i)
        for (int j = 0; j <= p.degree(); ++j) out[i + j] = out[i + j] + c_[i] * p.coeff(j);
    return TauQuadPoly(std::move(out));
}

TauQuadPoly TauQuadPoly::operator*(const BigRational& s) const {
    std::vector<TauQuad> out(c_);
    for (auto& c : out) c = c * s;
    return TauQuadPoly(std::move(out));
}

namespace {

struct GroupSpec {
    int lam_pow;
    BigRational scalar;
    std::vector<int> num_roots;  // factors (n - root)
    std::vector<int> den_roots;
    const char* t0;
    const char* t1;
    const char* t2;
};

const std::vector<GroupSpec>& specs_I() {
    static const std::vector<GroupSpec> s = {
        {20, {-1, 2}, {4, -14}, {24, 22, 20}, "gI.L20.t0", nullptr, nullptr},
        {18, 98, {4}, {22, 20}, "gI.L18.t0", nullptr, nullptr},
        {16, {-1, 2}, {4}, {20, -12}, "gI.L16.t0", nullptr, nullptr},
        {14, -1, {4}, {-10, -12}, "gI.L14.t0", nullptr, nullptr},
        {12, {-1, 2}, {18, 4}, {-8, -10, -12}, "gI.L12.t0", "gI.L12.t1", nullptr},
        {10, -1, {18, 16, 4}, {-8, -10, -12}, "gI.L10.t0", "gI.L10.t1", nullptr},
        {8, {-1, 2}, {18, 16, 14, 4}, {-6, -8, -10, -12}, "gI.L8.t0", "gI.L8.t1", nullptr},
        {6, 8126, {18, 16, 14, 12, 4, 2}, {-6, -8, -10, -12}, nullptr, "gI.L6.t1", nullptr},
        {4, {-1, 2}, {18, 16, 14, 12, 10, 4, 2, 2}, {-4, -6, -8, -10, -12}, nullptr, nullptr,
         "gI.L4.t2"},
    };
    return s;
}

const std::vector<GroupSpec>& specs_J1() {
    static const std::vector<GroupSpec> s = {
        {18, -3, {-10, -12, -14, -16}, {22, 20, 18, 16, 2}, "gJ1.L18.t0", nullptr, nullptr},
        {16, {49, 2}, {-10, -12, -14}, {20, 18, 16, 2}, "gJ1.L16.t0", nullptr, nullptr},
        {14, {-1, 8}, {-10, -12}, {18, 16, 2}, "gJ1.L14.t0", nullptr, nullptr},
        {12, {-1, 4}, {-10}, {16, 2}, "gJ1.L12.t0", nullptr, nullptr},
        {10, {-1, 4}, {}, {2}, "gJ1.L10.t0", "gJ1.L10.t1", nullptr},
        {8, {-1, 4}, {14}, {2, -8}, "gJ1.L8.t0", "gJ1.L8.t1", nullptr},
        {6, {-1, 8}, {14, 12}, {2, -6, -8}, "gJ1.L6.t0", "gJ1.L6.t1", nullptr},
        {4, {4063, 2}, {14, 12, 10, 2}, {-6, -8}, nullptr, "gJ1.L4.t1", nullptr},
    };
    return s;
}

const std::vector<GroupSpec>& specs_J2() {
    static const std::vector<GroupSpec> s = {
        {18, {-1, 4}, {-10, -12, -14}, {22, 20, 18, 16, 2}, "gJ2.L18.t0", nullptr, nullptr},
        {16, {49, 8}, {-10, -12}, {20, 18, 16, 2}, "gJ2.L16.t0", nullptr, nullptr},
        {14, {-1, 16}, {-10}, {18, 16, 2}, "gJ2.L14.t0", nullptr, nullptr},
        {12, {-1, 16}, {}, {16, 2}, "gJ2.L12.t0", nullptr, nullptr},
        {10, {-1, 8}, {}, {2, -8}, "gJ2.L10.t0", "gJ2.L10.t1", nullptr},
        {8, {-1, 16}, {14}, {2, -8}, "gJ2.L8.t0", "gJ2.L8.t1", nullptr},
        {6, {-1, 16}, {14, 12}, {-6, -8}, "gJ2.L6.t0", "gJ2.L6.t1", nullptr},
        {4, {4063, 8}, {14, 12, 10, 2}, {-6, -8}, nullptr, "gJ2.L4.t1", nullptr},
    };
    return s;
}

TauQuadPoly series_from_specs(const std::vector<GroupSpec>& specs, int n) {
    if (n < 26) throw domain_error("explicit series defined for n >= 26");
    const auto& table = CoefficientTable::builtin();
    BigRational nn(n);
    TauQuadPoly out;
    for (const auto& g : specs) {
        BigRational factor = g.scalar;
        for (int r : g.num_roots) factor *= (nn - r);
        for (int r : g.den_roots) factor /= (nn - r);
        TauQuad c;
        if (g.t0) c.c0 = table.poly(g.t0)(nn) * factor;
        if (g.t1) c.c1 = table.poly(g.t1)(nn) * factor;
        if (g.t2) c.c2 = table.poly(g.t2)(nn) * factor;
        out.add_term(g.lam_pow, c);
    }
    return out;
}

RationalEnergy25 build_25(const std::string& stem, int one_plus_lam_power) {
    const auto& table = CoefficientTable::builtin();
    RationalPolynomial one_plus_lam({BigRational(1), BigRational(1)});
    TauQuadPoly num;
    num = num + TauQuadPoly::from_rational(table.poly(stem + ".t2"), 2) *
                    table.scalar(stem + ".t2scale");
    num = num + TauQuadPoly::from_rational(table.poly(stem + ".t1"), 1) *
                    table.scalar(stem + ".t1scale");
    num = num + TauQuadPoly::from_rational(table.poly(stem + ".t0"), 0) * one_plus_lam *
                    one_plus_lam;
    num = num * RationalPolynomial::monomial(4, BigRational(-1));  // -pi lam^4 prefactor
    RationalPolynomial den = RationalPolynomial::constant(table.scalar(stem + ".den"));
    for (int i = 0; i < one_plus_lam_power; ++i) den = den * one_plus_lam;
    return {num, den};
}

}  // namespace

TauQuadPoly explicit_I_series(int n) { return series_from_specs(specs_I(), n); }
TauQuadPoly explicit_J1_series(int n) { return series_from_specs(specs_J1(), n); }
TauQuadPoly explicit_J2_series(int n) { return series_from_specs(specs_J2(), n); }

RationalEnergy25 explicit_I_25() { return build_25("x25.I", 25); }
RationalEnergy25 explicit_J1_25() { return build_25("x25.Jone", 27); }
RationalEnergy25 explicit_J2_25() { return build_25("x25.Jtwo", 27); }

RationalEnergy25 RationalEnergy25::derivative() const {
    RationalEnergy25 out;
    out.num = num.derivative() * den - num * den.derivative();
    out.den = den * den;
    return out;
}

TauQuad RationalEnergy25::eval_over_pi(const BigRational& lam) const {
    BigRational d = den(lam);
    if (d == 0) throw domain_error("explicit n=25 value: denominator vanishes");
    return num(lam) * (BigRational(1) / d);
}

int explicit_pi_sqrt(int n) { return n == 25 ? 2 : 0; }

TauQuad explicit_I_derivative(int n, int order, const BigRational& lam) {
    if (n < 25) throw domain_error("explicit I defined for n >= 25");
    if (n == 25) {
        RationalEnergy25 f = explicit_I_25();
        for (int k = 0; k < order; ++k) f = f.derivative();
        return f.eval_over_pi(lam);
    }
    TauQuadPoly p = explicit_I_series(n);
    for (int k = 0; k < order; ++k) p = p.derivative();
    return p(lam);
}

TauQuad explicit_J1_at(int n, const BigRational& lam) {
    if (n < 25) throw domain_error("explicit J1 defined for n >= 25");
    return n == 25 ? explicit_J1_25().eval_over_pi(lam) : explicit_J1_series(n)(lam);
}

TauQuad explicit_J2_at(int n, const BigRational& lam) {
    if (n < 25) throw domain_error("explicit J2 defined for n >= 25");
    return n == 25 ? explicit_J2_25().eval_over_pi(lam) : explicit_J2_series(n)(lam);
}

namespace {

Real attach_pi(const SurdValue& exact, int pi_sqrt, const PrecisionContext& ctx) {
    PrecisionScope scope(ctx.working_digits);
    Real v = exact.to_real(ctx.working_digits);
    if (pi_sqrt == 2)
        v *= pi_value(ctx);
    else if (pi_sqrt != 0)
        throw domain_error("unexpected pi power");
    return v;
}

}  // namespace

EnergyBracket I_explicit(int n, const BigRational& lambda_prime, const SurdValue& tau,
                         const PrecisionContext& ctx) {
    if (n <= 24) throw domain_error("I_explicit requires n >= 25");
    if (lambda_prime <= 0) throw domain_error("lambda' must be positive");
    TauQuad q = explicit_I_derivative(n, 0, lambda_prime);
    EnergyBracket out;
    out.n = n;
    out.lambda_prime = lambda_prime;
    out.path = EnergyPath::explicit_polynomial;
    out.exact = q.eval(tau);
    out.pi_sqrt = explicit_pi_sqrt(n);
    out.value = attach_pi(out.exact, out.pi_sqrt, ctx);
    return out;
}

HessianPair hessian_explicit(int n, const BigRational& lambda_prime, const SurdValue& tau,
                             const PrecisionContext& ctx) {
    if (n <= 24) throw domain_error("hessian_explicit requires n >= 25");
    if (lambda_prime <= 0) throw domain_error("lambda' must be positive");
    HessianPair out;
    out.path = EnergyPath::explicit_polynomial;
    out.pi_sqrt = explicit_pi_sqrt(n);
    out.J1_exact = explicit_J1_at(n, lambda_prime).eval(tau);
    out.J2_exact = explicit_J2_at(n, lambda_prime).eval(tau);
    out.J1 = attach_pi(out.J1_exact, out.pi_sqrt, ctx);
    out.J2 = attach_pi(out.J2_exact, out.pi_sqrt, ctx);
    return out;
}

TauQuadratic critical_tau_quadratic(int n) {
    if (n < 26) throw domain_error("tau quadratic defined for n >= 26");
    const auto& table = CoefficientTable::builtin();
    BigRational nn(n);
    return {table.poly("tau_quad.a")(nn), table.poly("tau_quad.b")(nn),
            table.poly("tau_quad.c")(nn)};
}

SurdValue tau_for_dimension(int n) {
    if (n <= 24) throw domain_error("tau defined for n >= 25");
    const auto& table = CoefficientTable::builtin();
    if (n == 25) {
        // -8 (sqrt(radicand) + shift) / denom, the lesser root of the printed quadratic
        BigRational denom = table.scalar("x25.tau.denom");
        SurdValue root = SurdValue::sqrt_of(numerator(table.scalar("x25.tau.radicand")));
        SurdValue shift{table.scalar("x25.tau.shift")};
        return (root + shift) * SurdValue(BigRational(-8) / denom);
    }
    auto q = critical_tau_quadratic(n);
    // existence of a root > 11170: disc > 0, leading > 0, value at 11170 < 0
    BigRational disc = q.b * q.b - 4 * q.a * q.c;
    if (!(disc > 0))
        throw certification_error("discriminant not positive at n=" + std::to_string(n));
    if (!(q.a > 0))
        throw certification_error("tau-quadratic leading coefficient not positive at n=" +
                                  std::to_string(n));
    BigRational slack = q.a * 11170 * 11170 + q.b * 11170 + q.c;
    if (!(slack < 0))
        throw certification_error("tau-quadratic not negative at 11170 for n=" +
                                  std::to_string(n));
    auto roots = solve_quadratic(q.a, q.b, q.c);
    // the greater root exceeds 11170; certified again directly
    if (!(*roots.greater > BigRational(11170)))
        throw certification_error("selected root does not exceed 11170 at n=" +
                                  std::to_string(n));
    return *roots.greater;
}

}  // namespace qrv
