#pragma once

// Certified real enclosures built on exact rationals. Every endpoint is an
// exact dyadic rational, and every routine rounds outward so that the true
// value always lies inside the returned interval.

#include <cstdint>

#include "recgrow/rational.hpp"

namespace recgrow {

struct Interval {
    Rational lo;
    Rational hi;

    static Interval point(const Rational& x) { return {x, x}; }

    Rational width() const { return hi - lo; }
    bool is_point() const { return lo == hi; }
    bool contains(const Rational& x) const { return lo <= x && x <= hi; }
};

/// Product of two intervals with nonnegative endpoints.
Interval multiply_nonnegative(const Interval& x, const Interval& y);

/// Largest integer m with m^n <= y, found by bisection. Requires y >= 0, n >= 1.
Integer floor_root(const Integer& y, unsigned long n);

/// Dyadic enclosure of x^(1/n) for x > 0 with relative width <= 2^-(bits+1).
Interval root_enclosure(const Rational& x, unsigned long n, unsigned bits);

/// Enclosure of x^(1/2^levels) by `levels` successive outward-rounded square
/// roots. Relative width stays below 2^-(bits-1).
Interval root_pow2_enclosure(const Rational& x, unsigned levels, unsigned bits);

/// Enclosure of x^e for x > 0 and rational e > 0. Exact (a point) whenever e
/// is an integer and x is a point.
Interval pow_enclosure(const Interval& x, const Rational& e, unsigned bits);

}  // namespace recgrow
