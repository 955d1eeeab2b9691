#pragma once
#include <algorithm>
#include <string>

#include "qrv/numeric.hpp"

namespace qrv {

// closed rational interval [lo, hi]
struct Interval {
    BigRational lo, hi;

    Interval() : lo(0), hi(0) {}
    Interval(BigRational l, BigRational h) : lo(std::move(l)), hi(std::move(h)) {
        if (lo > hi) throw domain_error("Interval: lo > hi");
    }
    static Interval point(const BigRational& x) { return Interval(x, x); }

    BigRational width() const { return hi - lo; }
    BigRational midpoint() const { return (lo + hi) / 2; }
    bool contains(const BigRational& x) const { return lo <= x && x <= hi; }
    bool excludes_zero() const { return lo > 0 || hi < 0; }

    // defined sign: +1 if lo > 0, -1 if hi < 0, 0 only for the point interval {0}
    int certified_sign() const {
        if (lo > 0) return 1;
        if (hi < 0) return -1;
        if (lo == 0 && hi == 0) return 0;
        throw certification_error("interval straddles zero, sign not certified");
    }

    Interval operator+(const Interval& o) const { return {lo + o.lo, hi + o.hi}; }
    Interval operator-(const Interval& o) const { return {lo - o.hi, hi - o.lo}; }
    Interval operator*(const Interval& o) const {
        BigRational a = lo * o.lo, b = lo * o.hi, c = hi * o.lo, d = hi * o.hi;
        return {std::min(std::min(a, b), std::min(c, d)),
                std::max(std::max(a, b), std::max(c, d))};
    }
    Interval scaled(const BigRational& c) const {
        return c >= 0 ? Interval{lo * c, hi * c} : Interval{hi * c, lo * c};
    }
    static Interval hull(const Interval& a, const Interval& b) {
        return {std::min(a.lo, b.lo), std::max(a.hi, b.hi)};
    }
    // widen outward so total width is at least w (centered padding)
    Interval padded_to(const BigRational& w) const {
        if (width() >= w) return *this;
        BigRational pad = (w - width()) / 2;
        return {lo - pad, hi + pad};
    }
};

}  // namespace qrv
