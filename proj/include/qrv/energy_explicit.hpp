#pragma once
#include <vector>

#include "qrv/numeric.hpp"
#include "qrv/polynomial.hpp"
#include "qrv/profile.hpp"
#include "qrv/surd.hpp"

namespace qrv {

// polynomial in lambda with tau-quadratic coefficients
class TauQuadPoly {
  public:
    TauQuadPoly() = default;
    explicit TauQuadPoly(std::vector<TauQuad> coeffs) : c_(std::move(coeffs)) { trim(); }
    static TauQuadPoly from_rational(const RationalPolynomial& p, int tau_degree);

    int degree() const { return int(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    const TauQuad& coeff(size_t k) const {
        static const TauQuad zero;
        return k < c_.size() ? c_[k] : zero;
    }
    void add_term(int lam_pow, const TauQuad& c);

    TauQuad operator()(const BigRational& lam) const;
    TauQuadPoly derivative() const;
    TauQuadPoly operator+(const TauQuadPoly& o) const;
    TauQuadPoly operator-(const TauQuadPoly& o) const;
    TauQuadPoly operator*(const RationalPolynomial& p) const;
    TauQuadPoly operator*(const BigRational& s) const;
    bool operator==(const TauQuadPoly& o) const { return c_ == o.c_; }

  private:
    void trim();
    std::vector<TauQuad> c_;
};

enum class EnergyPath { explicit_polynomial, generic_integral };

// reduced-energy bracket value; `exact` is value / pi^(pi_sqrt/2)
struct EnergyBracket {
    Real value;
    int n = 0;
    BigRational lambda_prime;
    EnergyPath path = EnergyPath::explicit_polynomial;
    SurdValue exact;
    int pi_sqrt = 0;
};

struct HessianPair {
    Real J1, J2;
    EnergyPath path = EnergyPath::explicit_polynomial;
    SurdValue J1_exact, J2_exact;
    int pi_sqrt = 0;
};

// ---- n >= 26: polynomial-in-lambda series evaluated from the coefficient data ----
TauQuadPoly explicit_I_series(int n);
TauQuadPoly explicit_J1_series(int n);
TauQuadPoly explicit_J2_series(int n);

// ---- n = 25: rational functions  -pi lam^4 N(lam,tau) / (den (1+lam)^e) ----
struct RationalEnergy25 {
    TauQuadPoly num;          // includes the lam^4 factor and tau scales
    RationalPolynomial den;
    RationalEnergy25 derivative() const;
    TauQuad eval_over_pi(const BigRational& lam) const;  // value / pi
};
RationalEnergy25 explicit_I_25();
RationalEnergy25 explicit_J1_25();
RationalEnergy25 explicit_J2_25();

// sqrt-pi exponent of the explicit values: 2 when n == 25, otherwise 0
int explicit_pi_sqrt(int n);

// d^order/dlam^order of the explicit I at lam, exact, as value / pi^(pi_sqrt/2)
TauQuad explicit_I_derivative(int n, int order, const BigRational& lam);
TauQuad explicit_J1_at(int n, const BigRational& lam);
TauQuad explicit_J2_at(int n, const BigRational& lam);

// spec-facing operations (n >= 25; domain_error below)
EnergyBracket I_explicit(int n, const BigRational& lambda_prime, const SurdValue& tau,
                         const PrecisionContext& ctx);
HessianPair hessian_explicit(int n, const BigRational& lambda_prime, const SurdValue& tau,
                             const PrecisionContext& ctx);

// the parameter making lam = 1 critical: Eq-level data for n = 25, the
// larger root of the tau-quadratic for n >= 26 (existence certified exactly)
SurdValue tau_for_dimension(int n);

// tau-quadratic A tau^2 + B tau + C with I'(1) = 0 iff it vanishes (n >= 26)
struct TauQuadratic {
    BigRational a, b, c;
};
TauQuadratic critical_tau_quadratic(int n);

}  // namespace qrv
