#pragma once
#include <functional>

#include "qrv/gammasym.hpp"
#include "qrv/numeric.hpp"

namespace qrv {

struct IntegralResult {
    Real value;
    Real error_estimate;
    long subdivisions = 0;
};

// asymptotic powers of the integrand: f ~ r^growth_at_zero near 0,
// f ~ r^(-decay_at_inf) near infinity
struct DecayHint {
    BigRational growth_at_zero = 0;
    BigRational decay_at_inf = 2;
};

// Gamma for positive half-integer rationals, exact (rational * sqrt(pi)^k)
GammaValue gamma_exact(const BigRational& x);

// Gamma at a positive real; poles rejected
Real gamma_real(const Real& x, const PrecisionContext& ctx);

Real pi_value(const PrecisionContext& ctx);

// |S^{n-1}| = 2 pi^{n/2} / Gamma(n/2)
Real sphere_area(int n, const PrecisionContext& ctx);

// integral over (0, inf) by a double-exponential substitution r = exp(c sinh t)
// refined on halved step sizes; deterministic ordered summation
IntegralResult integrate_adaptive(const std::function<Real(const Real&)>& f,
                                  const PrecisionContext& ctx,
                                  const DecayHint& hint = {});

}  // namespace qrv
