#pragma once
#include <map>
#include <vector>

#include "qrv/energy_explicit.hpp"
#include "qrv/profile.hpp"
#include "qrv/quadrature.hpp"

namespace qrv {

// one term  c * s^s_pow * f^(di)(s) f^(dj)(s)  of an integrand bracket, s = r^2
struct BracketAtom {
    int di, dj;
    int s_pow;
    BigRational c;
};

// kc * r^r_pow / (lam^2 + r^2)^core_pow
struct BracketKernel {
    long r_pow;
    long core_pow;
    BigRational kc;
};

// coef * [sum of kernels] applied to [sum of atoms], weighted lam^(n-4) or lam^(n-2)
struct BracketGroup {
    BigRational coef;
    int lam_block;  // 0 -> n-4, 1 -> n-2
    std::vector<BracketKernel> kernels;
    std::vector<BracketAtom> atoms;
};

std::vector<BracketGroup> bracket_groups_I(int n);
std::vector<BracketGroup> bracket_groups_J1(int n);
std::vector<BracketGroup> bracket_groups_J2(int n);

// exact bracket: map from (lambda exponent, sqrt-pi power) to tau-quadratic value.
// Polynomial profiles evaluate with lambda symbolic; fractional profiles only at
// lambda = 1 (pass unit_lambda = true), where the cores merge into Beta integrals.
struct ExactBracket {
    std::map<std::pair<long, int>, TauQuad> parts;

    // collapse at a rational lambda; requires a single sqrt-pi power across parts
    // (0 when no part is present)
    TauQuad collapse(const BigRational& lam, int& pi_sqrt) const;
};

ExactBracket bracket_exact(const std::vector<BracketGroup>& groups, const ProfileFunction& f,
                           bool unit_lambda);

// numerical path at any lambda > 0 (used for fractional profiles off lambda = 1)
Real bracket_quadrature(const std::vector<BracketGroup>& groups, const ProfileFunction& f,
                        const BigRational& lam, const SurdValue& tau,
                        const PrecisionContext& ctx);

// spec-facing operations; prefer the exact route when available
EnergyBracket energy_bracket_generic(int n, const BigRational& lambda_prime,
                                     const ProfileFunction& f, const SurdValue& tau,
                                     const PrecisionContext& ctx);
HessianPair hessian_generic(int n, const BigRational& lambda_prime, const ProfileFunction& f,
                            const SurdValue& tau, const PrecisionContext& ctx);

// exact lambda- and tau-independent constant relating the generic bracket to the
// explicit series:  bracket = constant * I_explicit  (Gamma-ratio form)
GammaValue generic_to_explicit_constant_I(int n);
GammaValue generic_to_explicit_constant_J(int n);

// 2^{4-n} F(0, lambda') given the Weyl contraction sum_{ijkl}(W_ikjl + W_iljk)^2
Real assemble_F0_value(int n, const BigRational& lambda_prime, const SurdValue& tau,
                       const BigRational& weyl_contraction, EnergyPath path,
                       const PrecisionContext& ctx);

}  // namespace qrv
