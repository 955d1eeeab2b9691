#pragma once
#include <map>
#include <string>
#include <vector>

#include "qrv/numeric.hpp"

namespace qrv {

// exact value  rat * 2^two_pow * pi^(pi_sqrt/2) * prod Gamma(arg_i)^exp_i
// with every arg_i in (0,1), arg_i != 1/2: Gamma(1) and Gamma(1/2) are folded
// into rat and pi_sqrt by the recurrence Gamma(x+1) = x Gamma(x).
// Integer parts of two_pow are folded into rat, so two_pow is in [0,1).
class GammaValue {
  public:
    GammaValue() : rat_(0), two_pow_(0), pi_sqrt_(0) {}
    explicit GammaValue(BigRational r) : rat_(std::move(r)), two_pow_(0), pi_sqrt_(0) {}

    // Gamma(x) for rational x > 0
    static GammaValue gamma(const BigRational& x);
    // B(x,y) = Gamma(x)Gamma(y)/Gamma(x+y), x,y > 0
    static GammaValue beta(const BigRational& x, const BigRational& y);
    static GammaValue two_to(const BigRational& e);
    static GammaValue pi_sqrt_to(int e) {
        GammaValue v{BigRational(1)};
        v.pi_sqrt_ = e;
        return v;
    }

    GammaValue operator*(const GammaValue& o) const;
    GammaValue operator/(const GammaValue& o) const;
    GammaValue operator*(const BigRational& s) const;
    bool is_zero() const { return rat_ == 0; }

    const BigRational& rational_factor() const { return rat_; }
    int pi_sqrt_power() const { return pi_sqrt_; }
    const BigRational& two_power() const { return two_pow_; }
    bool is_pure_rational() const {
        return factors_.empty() && pi_sqrt_ == 0 && two_pow_ == 0;
    }
    // true when the irrational content is exactly pi^(k/2) (no open Gamma factors)
    bool is_pi_form() const { return factors_.empty() && two_pow_ == 0; }

    // irrational-content key: values with equal signatures form a rational line
    std::string signature() const;

    Real to_real(unsigned digits) const;
    std::string str() const;

  private:
    void fold();
    BigRational rat_;
    BigRational two_pow_;
    int pi_sqrt_;
    std::map<BigRational, int> factors_;  // arg in (0,1) -> exponent
};

// sum of GammaValues, merged by signature; exact addition
class GammaSum {
  public:
    GammaSum() = default;
    explicit GammaSum(const GammaValue& v) { add(v); }

    void add(const GammaValue& v);
    void add(const GammaSum& o);
    GammaSum operator*(const BigRational& s) const;
    bool is_zero() const { return parts_.empty(); }
    size_t term_count() const { return parts_.size(); }

    // exact rational value when the sum is a single pure-rational line
    bool try_rational(BigRational& out) const;
    // exact (rational, pi power) when the sum is  r * pi^k
    bool try_pi_form(BigRational& out, int& pi_sqrt) const;

    Real to_real(unsigned digits) const;
    std::string str() const;

  private:
    std::map<std::string, GammaValue> parts_;
};

}  // namespace qrv
