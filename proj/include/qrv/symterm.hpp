#pragma once
#include <map>
#include <string>
#include <tuple>
#include <vector>

#include "qrv/gammasym.hpp"
#include "qrv/numeric.hpp"

namespace qrv {

// one radial term  coeff * 2^two_pow * lam^lam_pow * r^r_pow * (lam^2+r^2)^(-core_pow)
// with rational exponents; lam is carried symbolically
struct RadialTerm {
    BigRational coeff;
    BigRational two_pow;   // normalized into [0,1) inside sums
    BigRational lam_pow;
    BigRational r_pow;
    BigRational core_pow;
};

// canonical finite sum of radial terms; exactly zero iff empty
class RadialTermSum {
  public:
    RadialTermSum() = default;
    explicit RadialTermSum(const RadialTerm& t) { add_term(t); }

    void add_term(RadialTerm t);
    bool is_zero() const { return terms_.empty(); }
    size_t size() const { return terms_.size(); }
    std::vector<RadialTerm> terms() const;

    RadialTermSum operator+(const RadialTermSum& o) const;
    RadialTermSum operator-(const RadialTermSum& o) const;
    RadialTermSum operator*(const RadialTermSum& o) const;
    RadialTermSum operator*(const BigRational& s) const;
    bool operator==(const RadialTermSum& o) const { return terms_ == o.terms_; }

    Real eval(const BigRational& lam, const BigRational& r, unsigned digits) const;
    std::string str() const;  // debug form: c * 2^t * L^l * r^a * (L^2+r^2)^-b

  private:
    using Key = std::tuple<BigRational, BigRational, BigRational, BigRational>;
    std::map<Key, BigRational> terms_;  // (two,lam,r,core) -> coeff
};

RadialTermSum d_dr(const RadialTermSum& s);
RadialTermSum radial_laplacian(const RadialTermSum& s, int n);
RadialTermSum radial_bilaplacian(const RadialTermSum& s, int n);

// utility factors
RadialTermSum rterm(const BigRational& coeff, const BigRational& two_pow,
                    const BigRational& lam_pow, const BigRational& r_pow,
                    const BigRational& core_pow);
// the bubble power  u0^(m/(n-4)) = 2^(m/2) lam^(m/2) (lam^2+r^2)^(-m/2), m rational
RadialTermSum bubble_power(int n, const BigRational& m);

// exact integral of a sum over r in (0,inf), lam symbolic:
// each term maps to 2^t lam^(l+a+1-2b) * (1/2) B((a+1)/2, b-(a+1)/2)
class HalfLineIntegral {
  public:
    // value grouped by lam exponent
    const std::map<BigRational, GammaSum>& by_lambda_power() const { return parts_; }
    Real value(const BigRational& lam, unsigned digits) const;
    // exact value as rational * pi^(k/2) when lam-power is a single exponent e
    bool try_pi_form(BigRational& rat, int& pi_sqrt, BigRational& lam_exp) const;
    bool is_zero() const { return parts_.empty(); }
    std::string str() const;

  private:
    friend HalfLineIntegral integrate_halfline(const RadialTermSum&);
    std::map<BigRational, GammaSum> parts_;
};

// throws divergence_error naming the first offending term
HalfLineIntegral integrate_halfline(const RadialTermSum& s);

// convenience: substitute a rational lambda and return {exact-form string, decimal}
struct HalfLineValue {
    std::string gamma_form;
    Real decimal;
};
HalfLineValue integrate_halfline(const RadialTermSum& s, const BigRational& lambda_value,
                                 unsigned digits);

}  // namespace qrv
