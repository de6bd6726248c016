#pragma once

// Envelope bounds for D(n+1) = F(n, D(n)) when the nonlinearity satisfies
//
//   C1 z^(1+delta) <= F(n, z) <= C2 z^(1+delta)   for z >= 1.
//
// Iterating the two pure power maps L(n+1) = C1 L(n)^(1+delta) and
// U(n+1) = C2 U(n)^(1+delta) from the same seed gives L(n) <= D(n) <= U(n),
// with closed form L(l+k) = C1^(((1+delta)^k - 1)/delta) L(l)^((1+delta)^k).

#include <cstddef>
#include <span>
#include <vector>

#include "recgrow/core_recurrence.hpp"
#include "recgrow/enclosure.hpp"

namespace recgrow {

/// F(n, z) = alpha(n) z^power + beta(n). A coefficient list of length one is
/// constant in n; longer lists are indexed by n and must cover every n used.
struct PowerFamily {
    unsigned power = 2;
    std::vector<Rational> alpha{Rational(1)};
    std::vector<Rational> beta{Rational(0)};

    Rational operator()(std::size_t n, const Rational& z) const;
    /// Largest n the coefficient tables cover, or SIZE_MAX when constant.
    std::size_t max_step() const;
};

struct PowerNonlinearity {
    Rational c1;
    Rational c2;
    Rational delta;
    PowerFamily family;
};

/// Checks 0 < c1 <= c2 and delta > 0.
ValidationReport validate_constants(const PowerNonlinearity& pn);

/// Every (n, z) in [n_first, n_last] x z_samples where either side of the
/// sandwich fails, decided exactly. For integer delta the residual is
/// F - C1 z^(1+delta) (resp. C2 z^(1+delta) - F); for delta = r/s - 1 with
/// s > 1 it is (F/C1)^s - z^r (resp. z^r - (F/C2)^s), which has the same sign.
ValidationReport verify_sandwich(const PowerNonlinearity& pn, std::span<const Rational> z_samples,
                                 std::size_t n_first, std::size_t n_last);

struct EnvelopePair {
    std::vector<Rational> lower;   // lower[n] <= L(n)
    std::vector<Rational> upper;   // upper[n] >= U(n)
    std::vector<Rational> actual;  // exact iterates of the family
    bool exact = true;             // lower/upper equal L/U exactly
};

/// Precision used for non-integer delta unless the caller asks otherwise.
inline constexpr unsigned kDefaultEnvelopeBits = 128;

/// Throws InvalidParams for bad constants or d0 < 1, DomainError if the lower
/// envelope falls below 1 (leaving the region where the sandwich applies).
EnvelopePair envelope(const PowerNonlinearity& pn, const Rational& d0, std::size_t n_max,
                      unsigned bits = kDefaultEnvelopeBits, EvalLimits limits = {});

/// C1^(((1+delta)^k - 1)/delta) * z^((1+delta)^k). A point interval when delta
/// is an integer.
Interval closed_form_lower(const PowerNonlinearity& pn, const Rational& z, std::size_t k,
                           unsigned bits = kDefaultEnvelopeBits, EvalLimits limits = {});

}  // namespace recgrow
