#pragma once

// Worst-case count of independent summands in the Picard iterates
// u_{n+1} = u_0 + G[u_n, u_n] of the d-dimensional Navier-Stokes mild
// solution. Each component of G[u_n, u_n] expands into d^2 D(n)^2 bilinear
// terms, plus one for u_0, so D(n+1) = 1 + d^2 D(n)^2 with D(0) = 1.
// Symmetry cancellations in the coupling tensor are not modelled.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "recgrow/core_recurrence.hpp"

namespace recgrow {

struct NsModel {
    unsigned d = 3;
    std::size_t iterations = 0;
    std::uint64_t bytes_per_term = 1;
};

/// (a, b, d0) = (1, d^2, 1).
Params ns_params(unsigned d);

Integer term_count(unsigned d, std::size_t n, EvalLimits limits = {});

/// d^2 D(n)^2, i.e. term_count(d, n + 1) - 1.
Integer summand_budget(unsigned d, std::size_t n, EvalLimits limits = {});

struct CostRow {
    std::size_t n = 0;
    Integer terms;
    Integer bytes;
};

struct CostProjection {
    std::vector<CostRow> rows;
    /// First n whose projected bytes exceed the budget, if a budget was given
    /// and some row exceeds it.
    std::optional<std::size_t> first_over_budget;
};

CostProjection cost_projection(const NsModel& model,
                               const std::optional<Integer>& memory_budget = std::nullopt,
                               EvalLimits limits = {});

/// One entry of the widely reproduced d = 3 term-count table.
struct PrintedValue {
    std::size_t n = 0;
    std::string printed;    // integer, or "m.mmmeEE" for rounded entries
    Rational recomputed;
    bool matches = false;   // exact equality, or within half an ulp of a rounded entry
};

/// Printed d = 3 values D(0..7) next to the exact recomputation. Entries
/// from n = 3 on follow x -> 1 + x^2 rather than x -> 1 + 9 x^2 and
/// therefore do not match. Empty unless the table is for (1, 9, 1).
std::vector<PrintedValue> printed_table_discrepancies(const SequenceTable& table);

}  // namespace recgrow
