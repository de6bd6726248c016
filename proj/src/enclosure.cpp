#include "recgrow/enclosure.hpp"

#include <stdexcept>

namespace recgrow {

namespace {

long floor_div(long a, long b) {
    long q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) {
        --q;
    }
    return q;
}

Integer ceil_root(const Integer& y, unsigned long n) {
    Integer m = floor_root(y, n);
    if (pow(m, n) < y) {
        ++m;
    }
    return m;
}

}  // namespace

Interval multiply_nonnegative(const Interval& x, const Interval& y) {
    return {x.lo * y.lo, x.hi * y.hi};
}

Integer floor_root(const Integer& y, unsigned long n) {
    if (y < 0 || n == 0) {
        throw std::invalid_argument("floor_root: need y >= 0 and n >= 1");
    }
    if (y < 2 || n == 1) {
        return y;
    }
    // y < 2^bits, so the root lies in [2^((bits-1)/n), 2^((bits-1)/n + 1)).
    const auto e = static_cast<long>((bit_length(y) - 1) / n);
    Integer lo = Integer(1) << e;
    Integer hi = Integer(1) << (e + 1);
    // Invariant: lo^n <= y < hi^n.
    while (hi - lo > 1) {
        Integer mid = (lo + hi) >> 1;
        if (pow(mid, n) <= y) {
            lo = std::move(mid);
        } else {
            hi = std::move(mid);
        }
    }
    return lo;
}

Interval root_enclosure(const Rational& x, unsigned long n, unsigned bits) {
    if (x <= 0) {
        throw std::invalid_argument("root_enclosure: x must be positive");
    }
    if (n == 1) {
        return Interval::point(x);
    }
    // Scale by 2^(-n*shift) so the root carries bits+2 significant bits.
    const long nl = static_cast<long>(n);
    const long shift = floor_div(floor_log2(x) - nl * (static_cast<long>(bits) + 2), nl);
    const Rational scaled = x * ldexp(Integer(1), -nl * shift);
    const Integer lo = floor_root(floor(scaled), n);
    const Integer hi = ceil_root(ceil(scaled), n);
    return {ldexp(lo, shift), ldexp(hi, shift)};
}

Interval root_pow2_enclosure(const Rational& x, unsigned levels, unsigned bits) {
    Interval r = Interval::point(x);
    for (unsigned i = 0; i < levels; ++i) {
        r.lo = root_enclosure(r.lo, 2, bits).lo;
        r.hi = root_enclosure(r.hi, 2, bits).hi;
    }
    return r;
}

Interval pow_enclosure(const Interval& x, const Rational& e, unsigned bits) {
    if (x.lo <= 0 || e <= 0) {
        throw std::invalid_argument("pow_enclosure: need positive base and exponent");
    }
    const Integer& num = e.get_num();
    const Integer& den = e.get_den();
    if (!num.fits_ulong_p() || !den.fits_ulong_p()) {
        throw std::invalid_argument("pow_enclosure: exponent too large");
    }
    const unsigned long p = num.get_ui();
    const unsigned long q = den.get_ui();
    const Rational lo_pow = pow(x.lo, p);
    const Rational hi_pow = x.is_point() ? lo_pow : pow(x.hi, p);
    if (q == 1) {
        return {lo_pow, hi_pow};
    }
    return {root_enclosure(lo_pow, q, bits).lo, root_enclosure(hi_pow, q, bits).hi};
}

}  // namespace recgrow
