#pragma once

// Two-sided bounds for D(k+l) in terms of D(l):
//
//   b^(2^k-1) D(l)^(2^k)  <=  D(k+l)  <=  b^(2^k-1) D(l)^(2^k) Q(l)^(2^k-1),
//   Q(l) = 1 + a / (b D(l)^2),
//
// equivalently 1 <= b D(k+l) / (b D(l))^(2^k) <= Q(l)^(2^k-1). Everything here
// is exact rational arithmetic.

#include <cstddef>
#include <optional>
#include <vector>

#include "recgrow/core_recurrence.hpp"

namespace recgrow {

struct BoundCertificate {
    std::size_t k = 0;
    std::size_t l = 0;
    Rational q_l;
    Rational lower;
    Rational upper;
    Rational actual;
    Rational ratio;
    bool holds = false;
    /// Integer-part envelope, present only for integer parameter sets.
    std::optional<std::pair<Integer, Integer>> integer_envelope;
};

struct ConvergenceRow {
    std::size_t l = 0;
    Rational ratio_excess;  // ratio - 1
    Rational gap;           // Q(l)^(2^k-1) - 1
};

struct ConvergenceProfile {
    std::size_t k = 0;
    std::vector<ConvergenceRow> rows;
};

/// Q(l) = 1 + a/(b D(l)^2). Throws IndexOutOfRange if l is past the table.
Rational q_factor(const SequenceTable& table, std::size_t l);

/// b^(2^k-1) D(l)^(2^k). k = 0 gives D(l).
Rational lower_bound(const SequenceTable& table, std::size_t k, std::size_t l);

/// lower_bound(k, l) * Q(l)^(2^k-1).
Rational upper_bound(const SequenceTable& table, std::size_t k, std::size_t l);

/// b D(k+l) / (b D(l))^(2^k); equals 1 at k = 0.
Rational ratio(const SequenceTable& table, std::size_t k, std::size_t l);

/// Certificate for one (k, l) against an existing table.
BoundCertificate certificate(const SequenceTable& table, std::size_t k, std::size_t l);

/// One certificate per (k, l) in [1..k_max] x [1..l_max], row-major in k.
std::vector<BoundCertificate> certify(const SequenceTable& table, std::size_t k_max,
                                      std::size_t l_max);
std::vector<BoundCertificate> certify(const Params& params, std::size_t k_max, std::size_t l_max,
                                      EvalLimits limits = {});

/// Rows for every l in [l_first, l_last], ordered by l.
ConvergenceProfile convergence_profile(const SequenceTable& table, std::size_t k,
                                       std::size_t l_first, std::size_t l_last);
ConvergenceProfile convergence_profile(const Params& params, std::size_t k, std::size_t l_first,
                                       std::size_t l_last, EvalLimits limits = {});

/// (b^(2^k-1) D(l)^(2^k), floor(upper_bound(k, l))) for integer a, b, d0.
/// Throws NonIntegerParams otherwise.
std::pair<Integer, Integer> integer_envelope(const SequenceTable& table, std::size_t k,
                                             std::size_t l);

}  // namespace recgrow
