#include "qrv/energy_generic.hpp"

namespace qrv {

namespace {

BigRational an_coef(int n) {
    return BigRational((n - 2) * (n - 2) + 4, 2 * (n - 1) * (n - 2));
}
BigRational bn_coef(int n) { return BigRational(-4, n - 2); }

std::vector<BracketAtom> atoms_sq_fp_2ffp(int n) {
    // s f'^2 + 2 f f'
    return {{1, 1, 1, 1}, {0, 1, 0, 2}};
}
std::vector<BracketAtom> atoms_f2() { return {{0, 0, 0, 1}}; }
std::vector<BracketAtom> atoms_sfp_plus_f_sq() {
    // (s f' + f)^2
    return {{1, 1, 2, 1}, {0, 1, 1, 2}, {0, 0, 0, 1}};
}
std::vector<BracketAtom> atoms_big(int n) {
    // 3(n+8) f'^2 + 2(n+8) f f'' + 2(n+18) s f' f'' + 4 s^2 f''^2 + 4 s f f''' + 4 s^2 f' f'''
    return {{1, 1, 0, 3 * (n + 8)}, {0, 2, 0, 2 * (n + 8)}, {1, 2, 1, 2 * (n + 18)},
            {2, 2, 2, 4},           {0, 3, 1, 4},           {1, 3, 2, 4}};
}
std::vector<BracketAtom> atoms_mid(int n) {
    // 4 s f'^2 + (n+8) f f' + 2 s f f''
    return {{1, 1, 1, 4}, {0, 1, 0, n + 8}, {0, 2, 1, 2}};
}
std::vector<BracketAtom> atoms_third(int n) {
    // ((n+4) f' + 2 s f'')^2
    return {{1, 1, 0, BigRational((n + 4)) * (n + 4)}, {1, 2, 1, 4 * (n + 4)}, {2, 2, 2, 4}};
}

}  // namespace

std::vector<BracketGroup> bracket_groups_I(int n) {
    BigRational an = an_coef(n), bn = bn_coef(n);
    return {
        {-an * (n - 4) / BigRational(n * (n + 2)), 0, {{n + 5, n - 2, 1}}, atoms_sq_fp_2ffp(n)},
        {-an * BigRational(n - 4, 2 * n), 0, {{n + 3, n - 2, 1}}, atoms_f2()},
        {-bn * (n - 4) / BigRational(n * (n + 2)), 0, {{n + 3, n - 2, 1}}, atoms_sfp_plus_f_sq()},
        {BigRational(1, 2 * n * (n - 1) * (n + 2)), 0, {{n + 3, n - 4, 1}}, atoms_big(n)},
        {BigRational(1, 2 * n * (n - 1)), 0, {{n + 1, n - 4, 1}}, atoms_mid(n)},
        {BigRational(1, 4 * (n - 1)), 0, {{n - 1, n - 4, 1}}, atoms_f2()},
        {BigRational(-1) / BigRational(n * (n - 2) * (n - 2) * (n + 2)), 0,
         {{n + 3, n - 4, 1}}, atoms_third(n)},
        {BigRational(n - 4, 8 * n * (n - 1)), 1, {{n + 1, n - 2, 1}},
         {{0, 0, 0, n + 2}, {0, 1, 1, 4}, {1, 1, 2, 2}}},
    };
}

std::vector<BracketGroup> bracket_groups_J1(int n) {
    BigRational an = an_coef(n), bn = bn_coef(n);
    return {
        {BigRational(-(n - 2)), 0, {{n + 5, n, n}, {n + 3, n - 1, -(n + 2)}}, atoms_f2()},
        {-8 * an * BigRational(n - 2, n + 4), 0, {{n + 7, n, n - 1}, {n + 5, n - 1, -2}},
         atoms_sq_fp_2ffp(n)},
        {-2 * an * (n - 2), 0, {{n + 5, n, n - 1}, {n + 3, n - 1, -2}}, atoms_f2()},
        {-8 * bn * BigRational((n - 1) * (n - 2), n + 4), 0, {{n + 5, n, 1}},
         atoms_sfp_plus_f_sq()},
        {16 * bn * BigRational(n - 2, n + 4), 0, {{n + 5, n - 1, 1}},
         {{1, 1, 1, 1}, {0, 1, 0, 1}}},
        {4 * bn * (n - 2), 0, {{n + 3, n - 1, 1}}, {{0, 1, 1, 1}, {0, 0, 0, 1}}},
        {-4 * bn / BigRational(n + 4), 0, {{n + 5, n - 2, 1}}, {{1, 1, 0, 1}}},
        {-bn * BigRational(n + 2, 2), 0, {{n + 1, n - 2, 1}}, atoms_f2()},
        {-2 * bn, 0, {{n + 3, n - 2, 1}}, {{0, 1, 0, 1}}},
        {bn, 0, {{n + 3, n - 2, 1}}, {{0, 1, 0, n + 4}, {0, 2, 1, 2}}},
        {BigRational(4 * (n - 3)) / BigRational((n - 1) * (n + 4)), 0, {{n + 5, n - 2, 1}},
         atoms_big(n)},
        {BigRational(2 * (n - 3), n - 1), 0, {{n + 3, n - 2, 1}}, atoms_mid(n)},
        {BigRational(-8 * (n - 3)) / BigRational((n - 2) * (n - 2) * (n + 4)), 0,
         {{n + 5, n - 2, 1}}, atoms_third(n)},
        {BigRational(2 * (n + 2) * (n - 2), n + 4), 1, {{n + 5, n, 1}},
         {{0, 1, 0, 2}, {1, 1, 1, 1}}},
    };
}

std::vector<BracketGroup> bracket_groups_J2(int n) {
    BigRational an = an_coef(n), bn = bn_coef(n);
    return {
        {-an / BigRational(n + 4), 0,
         {{n + 7, n, 2 * (n - 1) * (n - 2)},
          {n + 5, n - 1, BigRational(-(n - 2)) * (n + 8)},
          {n + 3, n - 2, n + 4}},
         atoms_sq_fp_2ffp(n)},
        {-an / BigRational(2), 0,
         {{n + 5, n, 2 * (n - 1) * (n - 2)},
          {n + 3, n - 1, BigRational(-(n - 2)) * (n + 6)},
          {n + 1, n - 2, n + 2}},
         atoms_f2()},
        {-bn * BigRational(n - 2, n + 4), 0, {{n + 5, n, 2 * (n - 1)}, {n + 3, n - 1, -(n + 4)}},
         atoms_sfp_plus_f_sq()},
        {4 * bn * BigRational(n - 2, n + 4), 0, {{n + 5, n - 1, 1}},
         {{1, 1, 1, 1}, {0, 1, 0, 1}}},
        {-bn / BigRational(n + 4), 0, {{n + 5, n - 2, 1}}, {{1, 1, 0, 1}}},
        {BigRational(1) / BigRational(2 * (n - 1) * (n + 4)), 0,
         {{n + 5, n - 2, 2 * (n - 3)}, {n + 3, n - 3, -(n + 4)}}, atoms_big(n)},
        {BigRational(1, 2 * (n - 1)), 0, {{n + 3, n - 2, 2 * (n - 3)}, {n + 1, n - 3, -(n + 2)}},
         atoms_mid(n)},
        {BigRational(n + 2, 4 * (n - 1)), 0, {{n + 1, n - 2, 2 * (n - 3)}, {n - 1, n - 3, -n}},
         atoms_f2()},
        {BigRational(-1) / BigRational((n - 2) * (n - 2) * (n + 4)), 0,
         {{n + 5, n - 2, 2 * (n - 3)}, {n + 3, n - 3, -(n + 4)}}, atoms_third(n)},
        {BigRational((n + 2) * (n - 2), 2 * (n + 4)), 1, {{n + 5, n, 1}},
         {{0, 1, 0, 2}, {1, 1, 1, 1}}},
        {BigRational(-(n + 2) * (n - 2), 4 * (n - 1)), 1, {{n + 5, n - 1, 1}}, {{1, 1, 0, 1}}},
    };
}

namespace {

using GenPoly = std::map<BigRational, TauQuad>;  // (s+1)-power -> coefficient

void gp_add(GenPoly& a, const BigRational& p, const TauQuad& c) {
    auto it = a.find(p);
    if (it == a.end()) {
        if (!c.is_zero()) a.emplace(p, c);
        return;
    }
    it->second = it->second + c;
    if (it->second.is_zero()) a.erase(it);
}

GenPoly gp_mul_profiles(const std::map<BigRational, TauLin>& a,
                        const std::map<BigRational, TauLin>& b) {
    GenPoly out;
    for (const auto& [pa, ca] : a)
        for (const auto& [pb, cb] : b) gp_add(out, pa + pb, TauQuad::product(ca, cb));
    return out;
}

BigRational binom(long n, long k) {
    BigRational acc(1);
    for (long i = 0; i < k; ++i) acc = acc * BigRational(n - i) / BigRational(i + 1);
    return acc;
}

// multiply by s^alpha = ((s+1) - 1)^alpha
GenPoly gp_mul_s_pow(const GenPoly& a, int alpha) {
    if (alpha == 0) return a;
    GenPoly out;
    for (long k = 0; k <= alpha; ++k) {
        BigRational c = binom(alpha, k);
        if ((alpha - k) % 2) c = -c;
        for (const auto& [p, cf] : a) gp_add(out, p + k, cf * c);
    }
    return out;
}

// atom list applied to the profile, as a generalized polynomial in (s+1)
GenPoly atoms_poly(const std::vector<BracketAtom>& atoms,
                   const std::vector<std::map<BigRational, TauLin>>& fd) {
    GenPoly total;
    for (const auto& at : atoms) {
        GenPoly t = gp_mul_s_pow(gp_mul_profiles(fd[at.di], fd[at.dj]), at.s_pow);
        for (const auto& [p, c] : t) gp_add(total, p, c * at.c);
    }
    return total;
}

void accumulate_beta(ExactBracket& out, const TauQuad& c, const GammaValue& beta_val,
                     long lam_exp) {
    BigRational rat;
    int pi_sqrt = 0;
    GammaValue v = beta_val;
    if (!GammaSum(v).try_pi_form(rat, pi_sqrt))
        throw domain_error("bracket value left the rational*pi field: " + v.str());
    auto key = std::make_pair(lam_exp, pi_sqrt);
    auto it = out.parts.find(key);
    if (it == out.parts.end()) it = out.parts.emplace(key, TauQuad{}).first;
    it->second = it->second + c * rat;
    if (it->second.is_zero()) out.parts.erase(it);
}

}  // namespace

ExactBracket bracket_exact(const std::vector<BracketGroup>& groups, const ProfileFunction& f,
                           bool unit_lambda) {
    if (!unit_lambda && f.has_fractional_powers())
        throw domain_error("fractional profile needs unit lambda for the exact route");
    std::vector<std::map<BigRational, TauLin>> fd;
    ProfileFunction cur = f;
    for (int d = 0; d <= 3; ++d) {
        fd.push_back(cur.shifted_basis());
        cur = cur.derivative();
    }
    ExactBracket out;
    for (const auto& g : groups) {
        for (const auto& ker : g.kernels) {
            GenPoly K = atoms_poly(g.atoms, fd);
            for (const auto& [gamma, c] : K) {
                BigRational x = BigRational(ker.r_pow + 1, 2);
                TauQuad weighted = c * (g.coef * ker.kc / 2);
                if (unit_lambda) {
                    BigRational y = BigRational(ker.core_pow) - gamma - x;
                    if (!(y > 0))
                        throw divergence_error("bracket term diverges (unit lambda)");
                    accumulate_beta(out, weighted, GammaValue::beta(x, y), 0);
                } else {
                    // gamma integer >= 0: expand (1+r^2)^gamma binomially
                    if (denominator(gamma) != 1 || gamma < 0)
                        throw domain_error("polynomial route expects integer powers");
                    long gi = numerator(gamma).convert_to<long>();
                    for (long m = 0; m <= gi; ++m) {
                        BigRational xm = x + m;
                        BigRational y = BigRational(ker.core_pow) - xm;
                        if (!(y > 0)) throw divergence_error("bracket term diverges");
                        long lam_exp = ker.r_pow + 2 * m + 1 - 2 * ker.core_pow +
                                       (g.lam_block == 0 ? -4 : -2);
                        accumulate_beta(out, weighted * binom(gi, m),
                                        GammaValue::beta(xm, y), lam_exp);
                    }
                }
            }
        }
    }
    return out;
}

TauQuad ExactBracket::collapse(const BigRational& lam, int& pi_sqrt) const {
    pi_sqrt = 0;
    bool seen = false;
    TauQuad acc;
    for (const auto& [key, c] : parts) {
        if (!seen) {
            pi_sqrt = key.second;
            seen = true;
        } else if (key.second != pi_sqrt) {
            throw domain_error("bracket mixes distinct pi powers; cannot collapse exactly");
        }
        acc = acc + c * rat_pow(lam, key.first);
    }
    return acc;
}

Real bracket_quadrature(const std::vector<BracketGroup>& groups, const ProfileFunction& f,
                        const BigRational& lam, const SurdValue& tau,
                        const PrecisionContext& ctx) {
    if (lam <= 0) throw domain_error("lambda' must be positive");
    PrecisionScope scope(ctx.working_digits + 10);
    unsigned digits = ctx.working_digits + 10;
    std::vector<ProfileFunction> fd{f};
    for (int d = 0; d < 3; ++d) fd.push_back(fd.back().derivative());
    Real tau_r = tau.to_real(digits);
    Real lam_r = to_real(lam, digits);
    // n - 4 and n - 2 exponents arrive through the block tags on each group
    Real total(0);
    BigRational fmax = f.max_power();
    for (const auto& g : groups) {
        // decay bookkeeping for the quadrature window
        BigRational zero_pow(1u << 30), decay(1u << 30);
        for (const auto& ker : g.kernels) {
            zero_pow = std::min(zero_pow, BigRational(ker.r_pow));
            BigRational atom_inf(0);
            for (const auto& at : g.atoms) {
                BigRational s_deg = (fmax - at.di) + (fmax - at.dj) + at.s_pow;
                atom_inf = std::max(atom_inf, s_deg);
            }
            decay = std::min(decay, BigRational(2 * ker.core_pow - ker.r_pow) - 2 * atom_inf);
        }
        auto integrand = [&](const Real& r) -> Real {
            Real s = r * r;
            Real K(0);
            for (const auto& at : g.atoms) {
                Real v = fd[at.di].eval_real(s, tau_r, digits) *
                         fd[at.dj].eval_real(s, tau_r, digits) * to_real(at.c, digits);
                if (at.s_pow > 0) v *= pow(s, at.s_pow);
                K += v;
            }
            Real core = lam_r * lam_r + r * r;
            Real ker_sum(0);
            for (const auto& ker : g.kernels)
                ker_sum += to_real(ker.kc, digits) * pow(r, long(ker.r_pow)) /
                           pow(core, long(ker.core_pow));
            return K * ker_sum;
        };
        DecayHint hint{zero_pow, decay};
        IntegralResult part = integrate_adaptive(integrand, ctx, hint);
        Real block = g.lam_block == 0 ? Real(1) : lam_r * lam_r;
        total += to_real(g.coef, digits) * part.value * block;
    }
    return total;
}

namespace {

// lam^{n-4} overall scale for the quadrature path (blocks carry the extra lam^2)
Real lam_base_power(int n, const BigRational& lam, unsigned digits) {
    return pow(to_real(lam, digits), n - 4);
}

EnergyBracket finish_bracket(int n, const BigRational& lam, const SurdValue& tau,
                             const ExactBracket& eb, const PrecisionContext& ctx,
                             EnergyPath path) {
    EnergyBracket out;
    out.n = n;
    out.lambda_prime = lam;
    out.path = path;
    TauQuad q = eb.collapse(lam, out.pi_sqrt);
    out.exact = q.eval(tau);
    PrecisionScope scope(ctx.working_digits);
    out.value = out.exact.to_real(ctx.working_digits);
    if (out.pi_sqrt != 0)
        out.value *= pow(sqrt(pi_value(ctx)), out.pi_sqrt);
    return out;
}

}  // namespace

EnergyBracket energy_bracket_generic(int n, const BigRational& lambda_prime,
                                     const ProfileFunction& f, const SurdValue& tau,
                                     const PrecisionContext& ctx) {
    if (n <= 24) throw domain_error("energy_bracket_generic requires n > 24");
    if (lambda_prime <= 0) throw domain_error("lambda' must be positive");
    auto groups = bracket_groups_I(n);
    if (!f.has_fractional_powers())
        return finish_bracket(n, lambda_prime, tau, bracket_exact(groups, f, false), ctx,
                              EnergyPath::generic_integral);
    if (lambda_prime == 1)
        return finish_bracket(n, lambda_prime, tau, bracket_exact(groups, f, true), ctx,
                              EnergyPath::generic_integral);
    EnergyBracket out;
    out.n = n;
    out.lambda_prime = lambda_prime;
    out.path = EnergyPath::generic_integral;
    out.pi_sqrt = -1;  // numeric only
    PrecisionScope scope(ctx.working_digits);
    out.value = bracket_quadrature(groups, f, lambda_prime, tau, ctx) *
                lam_base_power(n, lambda_prime, ctx.working_digits);
    return out;
}

HessianPair hessian_generic(int n, const BigRational& lambda_prime, const ProfileFunction& f,
                            const SurdValue& tau, const PrecisionContext& ctx) {
    if (n <= 24) throw domain_error("hessian_generic requires n > 24");
    if (lambda_prime <= 0) throw domain_error("lambda' must be positive");
    auto g1 = bracket_groups_J1(n);
    auto g2 = bracket_groups_J2(n);
    HessianPair out;
    out.path = EnergyPath::generic_integral;
    if (!f.has_fractional_powers() || lambda_prime == 1) {
        bool unit = f.has_fractional_powers();
        EnergyBracket b1 = finish_bracket(n, lambda_prime, tau, bracket_exact(g1, f, unit), ctx,
                                          EnergyPath::generic_integral);
        EnergyBracket b2 = finish_bracket(n, lambda_prime, tau, bracket_exact(g2, f, unit), ctx,
                                          EnergyPath::generic_integral);
        out.J1 = b1.value;
        out.J2 = b2.value;
        out.J1_exact = b1.exact;
        out.J2_exact = b2.exact;
        out.pi_sqrt = b1.pi_sqrt;
        return out;
    }
    PrecisionScope scope(ctx.working_digits);
    Real base = lam_base_power(n, lambda_prime, ctx.working_digits);
    out.pi_sqrt = -1;
    out.J1 = bracket_quadrature(g1, f, lambda_prime, tau, ctx) * base;
    out.J2 = bracket_quadrature(g2, f, lambda_prime, tau, ctx) * base;
    return out;
}

GammaValue generic_to_explicit_constant_I(int n) {
    if (n == 25) return GammaValue(BigRational(1));
    BigRational half_n(n, 2);
    GammaValue num = GammaValue::gamma(half_n - 9) * GammaValue::gamma(half_n + 7);
    return num / (GammaValue::gamma(BigRational(n + 1)) * BigRational(8 * (n * n - 4)));
}

GammaValue generic_to_explicit_constant_J(int n) {
    if (n == 25) return GammaValue(BigRational(1));
    BigRational half_n(n, 2);
    GammaValue num = GammaValue::gamma(half_n - 7) * GammaValue::gamma(half_n + 5);
    return (num / GammaValue::gamma(BigRational(n + 1))) * BigRational(2 * n, n + 4);
}

Real assemble_F0_value(int n, const BigRational& lambda_prime, const SurdValue& tau,
                       const BigRational& weyl_contraction, EnergyPath path,
                       const PrecisionContext& ctx) {
    if (weyl_contraction <= 0) throw degenerate_error("Weyl contraction must be positive");
    PrecisionScope scope(ctx.working_digits);
    Real bracket;
    if (path == EnergyPath::explicit_polynomial) {
        EnergyBracket ib = I_explicit(n, lambda_prime, tau, ctx);
        bracket = ib.value * generic_to_explicit_constant_I(n).to_real(ctx.working_digits);
    } else {
        ProfileFunction f = ProfileFunction::for_dimension(n);
        bracket = energy_bracket_generic(n, lambda_prime, f, tau, ctx).value;
    }
    Real area = sphere_area(n, ctx);
    return Real(n - 4) / 2 * area * to_real(weyl_contraction, ctx.working_digits) * bracket;
}

}  // namespace qrv
