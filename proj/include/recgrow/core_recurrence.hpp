#pragma once

// Exact evaluation of the quadratic recursion D(n+1) = a + b * D(n)^2.

#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "recgrow/rational.hpp"

namespace recgrow {

struct Params {
    Rational a;
    Rational b;
    Rational d0{1};

    bool is_integral() const { return is_integer(a) && is_integer(b) && is_integer(d0); }
    bool operator==(const Params&) const = default;
};

struct Violation {
    std::string condition;
    std::vector<std::pair<std::string, Rational>> witnesses;
};

struct ValidationReport {
    std::vector<Violation> violations;

    bool ok() const { return violations.empty(); }
    /// Human-readable one-liner, e.g. "b > 0 violated (b = 0)".
    std::string summary() const;
};

/// Default upper bound on the evaluated index. The bit size of D(n) doubles
/// with each step, so D(30) with a = b = 1 already needs ~6e8 bits.
inline constexpr std::size_t kDefaultIndexCap = 30;

struct EvalLimits {
    std::size_t max_index = kDefaultIndexCap;
};

ValidationReport validate_params(const Rational& a, const Rational& b, const Rational& d0);
inline ValidationReport validate_params(const Params& p) { return validate_params(p.a, p.b, p.d0); }

/// Immutable table D(0..N) for one parameter set.
class SequenceTable {
public:
    SequenceTable(Params params, std::vector<Rational> values);

    const Params& params() const { return params_; }
    std::span<const Rational> values() const { return values_; }
    const Rational& operator[](std::size_t n) const { return values_[n]; }
    /// Bounds-checked access; throws IndexOutOfRange.
    const Rational& at(std::size_t n) const;
    std::size_t size() const { return values_.size(); }
    std::size_t last_index() const { return values_.size() - 1; }

    /// True iff every consecutive pair satisfies the recursion exactly.
    bool satisfies_recursion() const;

    bool operator==(const SequenceTable&) const = default;

private:
    Params params_;
    std::vector<Rational> values_;
};

/// Iterates x -> a + b*x^2 from x0 for n_max steps with no parameter checks.
std::vector<Rational> iterate_quadratic(const Rational& a, const Rational& b, const Rational& x0,
                                        std::size_t n_max);

/// Exact D(0..n_max). Throws InvalidParams if the growth conditions fail and
/// CapExceeded if n_max exceeds limits.max_index.
SequenceTable evaluate(const Params& params, std::size_t n_max, EvalLimits limits = {});

/// Non-strict: values[n+1] >= values[n] for all n.
bool is_monotone(const SequenceTable& table);

}  // namespace recgrow
