#pragma once
#include <map>
#include <vector>

#include "qrv/numeric.hpp"
#include "qrv/surd.hpp"

namespace qrv {

// coefficient linear in the free parameter tau
struct TauLin {
    BigRational c0, c1;  // c0 + c1*tau
    TauLin() : c0(0), c1(0) {}
    TauLin(BigRational a, BigRational b) : c0(std::move(a)), c1(std::move(b)) {}
    TauLin operator*(const BigRational& s) const { return {c0 * s, c1 * s}; }
    TauLin operator+(const TauLin& o) const { return {c0 + o.c0, c1 + o.c1}; }
    bool is_zero() const { return c0 == 0 && c1 == 0; }
};

// quadratic in tau; closed under products of TauLin values
struct TauQuad {
    BigRational c0, c1, c2;
    TauQuad() : c0(0), c1(0), c2(0) {}
    TauQuad(BigRational a, BigRational b, BigRational c)
        : c0(std::move(a)), c1(std::move(b)), c2(std::move(c)) {}
    static TauQuad of(const TauLin& a) { return {a.c0, a.c1, BigRational(0)}; }
    static TauQuad product(const TauLin& a, const TauLin& b) {
        return {a.c0 * b.c0, a.c0 * b.c1 + a.c1 * b.c0, a.c1 * b.c1};
    }
    TauQuad operator+(const TauQuad& o) const { return {c0 + o.c0, c1 + o.c1, c2 + o.c2}; }
    TauQuad operator-(const TauQuad& o) const { return {c0 - o.c0, c1 - o.c1, c2 - o.c2}; }
    TauQuad operator*(const BigRational& s) const { return {c0 * s, c1 * s, c2 * s}; }
    bool is_zero() const { return c0 == 0 && c1 == 0 && c2 == 0; }
    bool operator==(const TauQuad& o) const { return c0 == o.c0 && c1 == o.c1 && c2 == o.c2; }
    SurdValue eval(const SurdValue& tau) const {
        return SurdValue(c0) + SurdValue(c1) * tau + SurdValue(c2) * tau * tau;
    }
};

// f(s) = sum c_j (s+1)^{p_j} + sum d_j s^j with p_j half-integers and
// coefficients linear in tau; closed under d/ds
class ProfileFunction {
  public:
    ProfileFunction() = default;

    void add_shifted_term(TauLin coeff, BigRational power);  // coeff * (s+1)^power
    void add_poly_term(TauLin coeff, int degree);            // coeff * s^degree

    // tau - 8126 s + 1662 s^2 - 98 s^3 + s^4
    static ProfileFunction quartic();
    // 1028(s+1)^{1/2} - 10(s+1)^{3/2} - (121/6)(s+1)^{5/2} + (s+1)^{7/2} + tau (s+1)^{-1/2}
    static ProfileFunction fractional_order();
    // profile used for dimension n
    static ProfileFunction for_dimension(int n);
    static ProfileFunction zero() { return {}; }

    ProfileFunction derivative() const;
    bool has_fractional_powers() const;
    bool is_zero() const { return terms_.empty(); }

    // exact value; s > -1 required when fractional powers are present.
    // tau with a surd part is accepted only where the tau-coefficient is rational.
    SurdValue eval_exact(const BigRational& s, const SurdValue& tau) const;
    Real eval_real(const Real& s, const Real& tau, unsigned digits) const;

    // expansion over (s+1)-powers: s^j rewritten via the binomial theorem
    const std::map<BigRational, TauLin>& shifted_basis() const { return terms_; }

    // largest and smallest (s+1)-exponents, 0 for the zero profile
    BigRational max_power() const;
    BigRational min_power() const;

  private:
    std::map<BigRational, TauLin> terms_;  // (s+1)-power -> coefficient
};

}  // namespace qrv
