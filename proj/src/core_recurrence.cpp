#include "recgrow/core_recurrence.hpp"

#include <algorithm>

#include "recgrow/errors.hpp"

namespace recgrow {

std::string ValidationReport::summary() const {
    if (ok()) {
        return "ok";
    }
    std::string out;
    for (const auto& v : violations) {
        if (!out.empty()) {
            out += "; ";
        }
        out += v.condition + " violated (";
        for (std::size_t i = 0; i < v.witnesses.size(); ++i) {
            if (i != 0) {
                out += ", ";
            }
            out += v.witnesses[i].first + " = " + to_string(v.witnesses[i].second);
        }
        out += ")";
    }
    return out;
}

ValidationReport validate_params(const Rational& a, const Rational& b, const Rational& d0) {
    ValidationReport report;
    if (!(b > 0)) {
        report.violations.push_back({"b > 0", {{"b", b}}});
    }
    const Rational four_ab = 4 * a * b;
    if (four_ab < 1) {
        report.violations.push_back({"4ab >= 1", {{"4ab", four_ab}}});
    }
    if (!(d0 > 0)) {
        report.violations.push_back({"d0 > 0", {{"d0", d0}}});
    }
    return report;
}

SequenceTable::SequenceTable(Params params, std::vector<Rational> values)
    : params_(std::move(params)), values_(std::move(values)) {
    if (values_.empty()) {
        throw DomainError("sequence table must hold at least D(0)");
    }
}

const Rational& SequenceTable::at(std::size_t n) const {
    if (n >= values_.size()) {
        throw IndexOutOfRange("index " + std::to_string(n) + " beyond table end " +
                              std::to_string(last_index()));
    }
    return values_[n];
}

bool SequenceTable::satisfies_recursion() const {
    for (std::size_t n = 0; n + 1 < values_.size(); ++n) {
        if (values_[n + 1] != params_.a + params_.b * values_[n] * values_[n]) {
            return false;
        }
    }
    return true;
}

std::vector<Rational> iterate_quadratic(const Rational& a, const Rational& b, const Rational& x0,
                                        std::size_t n_max) {
    std::vector<Rational> values;
    values.reserve(n_max + 1);
    values.push_back(x0);
    for (std::size_t n = 0; n < n_max; ++n) {
        const Rational& x = values.back();
        values.push_back(a + b * x * x);
    }
    return values;
}

SequenceTable evaluate(const Params& params, std::size_t n_max, EvalLimits limits) {
    if (const auto report = validate_params(params); !report.ok()) {
        throw InvalidParams(report.summary());
    }
    if (n_max > limits.max_index) {
        throw CapExceeded("n = " + std::to_string(n_max) + " exceeds index cap " +
                          std::to_string(limits.max_index));
    }
    return SequenceTable(params, iterate_quadratic(params.a, params.b, params.d0, n_max));
}

bool is_monotone(const SequenceTable& table) {
    const auto v = table.values();
    return std::adjacent_find(v.begin(), v.end(),
                              [](const Rational& x, const Rational& y) { return y < x; }) == v.end();
}

}  // namespace recgrow
