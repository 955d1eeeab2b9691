#pragma once
#include <vector>

#include "qrv/interval.hpp"
#include "qrv/numeric.hpp"

namespace qrv {

// univariate polynomial over the rationals, coefficients lowest degree first,
// canonical form has no trailing zero coefficient
class RationalPolynomial {
  public:
    RationalPolynomial() = default;
    explicit RationalPolynomial(std::vector<BigRational> coeffs) : c_(std::move(coeffs)) {
        trim();
    }
    static RationalPolynomial constant(const BigRational& c) {
        return RationalPolynomial({c});
    }
    // c * x^d
    static RationalPolynomial monomial(int d, const BigRational& c) {
        std::vector<BigRational> v(d + 1, BigRational(0));
        v[d] = c;
        return RationalPolynomial(std::move(v));
    }
    // (x - root)
    static RationalPolynomial linear_root(const BigRational& root) {
        return RationalPolynomial({-root, BigRational(1)});
    }

    bool is_zero() const { return c_.empty(); }
    // degree of the zero polynomial reported as -1 (stands in for -infinity)
    int degree() const { return int(c_.size()) - 1; }
    const BigRational& coeff(size_t k) const {
        static const BigRational zero(0);
        return k < c_.size() ? c_[k] : zero;
    }
    const std::vector<BigRational>& coeffs() const { return c_; }
    const BigRational& leading() const;

    BigRational operator()(const BigRational& x) const;
    RationalPolynomial derivative() const;

    RationalPolynomial operator+(const RationalPolynomial& o) const;
    RationalPolynomial operator-(const RationalPolynomial& o) const;
    RationalPolynomial operator*(const RationalPolynomial& o) const;
    RationalPolynomial operator*(const BigRational& s) const;
    RationalPolynomial operator-() const { return *this * BigRational(-1); }
    bool operator==(const RationalPolynomial& o) const { return c_ == o.c_; }

    // euclidean division, returns {quotient, remainder}
    std::pair<RationalPolynomial, RationalPolynomial> divmod(const RationalPolynomial& d) const;

    // divide by the gcd of numerators and lcm of denominators, keeping sign of leading coeff
    RationalPolynomial primitive_part() const;

    std::string str(const std::string& var = "x") const;

  private:
    void trim();
    std::vector<BigRational> c_;
};

RationalPolynomial gcd(RationalPolynomial a, RationalPolynomial b);
RationalPolynomial square_free_part(const RationalPolynomial& p);

// 1 + max |a_i / a_d|; all real roots lie strictly inside (-bound, bound)
BigRational cauchy_root_bound(const RationalPolynomial& p);

std::vector<RationalPolynomial> sturm_chain(const RationalPolynomial& p);
// number of distinct real roots in (lo, hi]
long sturm_count(const std::vector<RationalPolynomial>& chain,
                 const BigRational& lo, const BigRational& hi);
long count_real_roots(const RationalPolynomial& p);

// pairwise-disjoint intervals of width <= width, one real root each, jointly all roots;
// each endpoint has nonzero polynomial sign unless the interval is an exact root point
std::vector<Interval> isolate_real_roots(const RationalPolynomial& p, const BigRational& width);

// largest real root enclosure; domain_error when p has no real root
Interval largest_real_root(const RationalPolynomial& p, const BigRational& width);

}  // namespace qrv
