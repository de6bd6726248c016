#pragma once

// Growth constant C = lim (b D(n))^(1/2^n) and related diagnostics.
//
// From 1 <= b D(k+l) / (b D(l))^(2^k) <= Q(l)^(2^k-1), taking 2^(k+l)-th roots
// and letting k -> infinity gives
//
//   (b D(l))^(1/2^l) <= C <= (b D(l) Q(l))^(1/2^l),
//
// and the lower witness (b D(n))^(1/2^n) is nondecreasing in n. The
// enclosure endpoints are outward-rounded dyadic rationals, certified by
// exact re-exponentiation.

#include <cstddef>
#include <vector>

#include "recgrow/core_recurrence.hpp"

namespace recgrow {

/// A value together with a bound on its absolute error.
struct Approximation {
    Rational value;
    Rational error;
};

struct GrowthEnclosure {
    std::size_t l = 0;
    Approximation c_lo;  // c_lo.value <= (b D(l))^(1/2^l)
    Approximation c_hi;  // c_hi.value >= (b D(l) Q(l))^(1/2^l)
    unsigned precision_bits = 0;

    Rational width() const { return c_hi.value - c_lo.value; }
};

/// Smallest accepted relative tolerance.
inline constexpr double kMinRelativeTolerance = 1e-30;

/// Enclosure from witness index l. Endpoint relative error is at most rtol;
/// when affordable the working precision is raised further so rounding stays
/// well below the true enclosure width. Throws ToleranceUnachievable if rtol
/// is below kMinRelativeTolerance or needs more than the precision budget.
GrowthEnclosure growth_enclosure(const SequenceTable& table, std::size_t l, double rtol);
GrowthEnclosure growth_enclosure(const Params& params, std::size_t l, double rtol,
                                 EvalLimits limits = {});

/// Checks lo^(2^l) <= b D(l) and hi^(2^l) >= b D(l) Q(l) exactly.
bool certify_enclosure(const SequenceTable& table, std::size_t l, const Rational& lo,
                       const Rational& hi);

/// log2(ln(b D(n))) / n with relative error <= rtol. Throws DomainError if
/// b D(n) <= 1.
Approximation log_log_index(const SequenceTable& table, std::size_t n, double rtol);

/// 2^(2^(n-1)) for n >= 1 and 1 for n = 0.
Integer doubling_benchmark(std::size_t n, EvalLimits limits = {});

struct BenchmarkRow {
    std::size_t n = 0;
    Rational value;
    Integer benchmark;
    bool dominates = false;
};

/// D(n) against 2^(2^(n-1)) for n = 0..n_max. Needs integer a, b >= 1 and
/// d0 >= 1, otherwise throws InvalidParams.
std::vector<BenchmarkRow> compare_to_benchmark(const Params& params, std::size_t n_max,
                                               EvalLimits limits = {});

}  // namespace recgrow
