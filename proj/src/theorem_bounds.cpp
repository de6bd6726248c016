#include "recgrow/theorem_bounds.hpp"

#include <string>

#include "recgrow/errors.hpp"

namespace recgrow {

namespace {

std::uint64_t two_pow(std::size_t k) {
    if (k >= 63) {
        throw CapExceeded("k = " + std::to_string(k) + " makes 2^k overflow");
    }
    return std::uint64_t{1} << k;
}

void require_span(const SequenceTable& table, std::size_t k, std::size_t l) {
    if (k + l > table.last_index()) {
        throw IndexOutOfRange("k + l = " + std::to_string(k + l) + " beyond table end " +
                              std::to_string(table.last_index()));
    }
}

}  // namespace

Rational q_factor(const SequenceTable& table, std::size_t l) {
    const Params& p = table.params();
    const Rational& d = table.at(l);
    return 1 + p.a / (p.b * d * d);
}

Rational lower_bound(const SequenceTable& table, std::size_t k, std::size_t l) {
    require_span(table, k, l);
    const std::uint64_t n = two_pow(k);
    return pow(table.params().b, n - 1) * pow(table[l], n);
}

Rational upper_bound(const SequenceTable& table, std::size_t k, std::size_t l) {
    require_span(table, k, l);
    return lower_bound(table, k, l) * pow(q_factor(table, l), two_pow(k) - 1);
}

Rational ratio(const SequenceTable& table, std::size_t k, std::size_t l) {
    require_span(table, k, l);
    if (k == 0) {
        return Rational(1);
    }
    const Rational& b = table.params().b;
    return b * table[k + l] / pow(b * table[l], two_pow(k));
}

BoundCertificate certificate(const SequenceTable& table, std::size_t k, std::size_t l) {
    BoundCertificate c;
    c.k = k;
    c.l = l;
    c.q_l = q_factor(table, l);
    c.lower = lower_bound(table, k, l);
    c.upper = c.lower * pow(c.q_l, two_pow(k) - 1);
    c.actual = table.at(k + l);
    c.ratio = ratio(table, k, l);
    c.holds = c.lower <= c.actual && c.actual <= c.upper;
    if (table.params().is_integral()) {
        c.integer_envelope = integer_envelope(table, k, l);
    }
    return c;
}

std::vector<BoundCertificate> certify(const Params& params, std::size_t k_max, std::size_t l_max,
                                      EvalLimits limits) {
    return certify(evaluate(params, k_max + l_max, limits), k_max, l_max);
}

std::vector<BoundCertificate> certify(const SequenceTable& table, std::size_t k_max,
                                      std::size_t l_max) {
    require_span(table, k_max, l_max);
    std::vector<BoundCertificate> out;
    out.reserve(k_max * l_max);
    for (std::size_t k = 1; k <= k_max; ++k) {
        for (std::size_t l = 1; l <= l_max; ++l) {
            out.push_back(certificate(table, k, l));
        }
    }
    return out;
}

ConvergenceProfile convergence_profile(const Params& params, std::size_t k, std::size_t l_first,
                                       std::size_t l_last, EvalLimits limits) {
    return convergence_profile(evaluate(params, k + l_last, limits), k, l_first, l_last);
}

ConvergenceProfile convergence_profile(const SequenceTable& table, std::size_t k,
                                       std::size_t l_first, std::size_t l_last) {
    if (l_first > l_last) {
        throw DomainError("empty l range");
    }
    require_span(table, k, l_last);
    ConvergenceProfile profile{k, {}};
    for (std::size_t l = l_first; l <= l_last; ++l) {
        profile.rows.push_back({l, ratio(table, k, l) - 1,
                                pow(q_factor(table, l), two_pow(k) - 1) - 1});
    }
    return profile;
}

std::pair<Integer, Integer> integer_envelope(const SequenceTable& table, std::size_t k,
                                             std::size_t l) {
    if (!table.params().is_integral()) {
        throw NonIntegerParams("integer envelope needs integer a, b and d0");
    }
    return {floor(lower_bound(table, k, l)), floor(upper_bound(table, k, l))};
}

}  // namespace recgrow
