#include "recgrow/generalized_recurrence.hpp"

#include <limits>
#include <string>

#include "recgrow/errors.hpp"

namespace recgrow {

namespace {

const Rational& coefficient(const std::vector<Rational>& table, std::size_t n, const char* name) {
    if (table.empty()) {
        throw DomainError(std::string("empty coefficient table ") + name);
    }
    if (table.size() == 1) {
        return table.front();
    }
    if (n >= table.size()) {
        throw IndexOutOfRange(std::string(name) + " table has no entry for n = " +
                              std::to_string(n));
    }
    return table[n];
}

void require_valid(const PowerNonlinearity& pn) {
    if (const auto report = validate_constants(pn); !report.ok()) {
        throw InvalidParams(report.summary());
    }
}

// Lower (or upper) rounded c * x^e.
Rational power_step(const Rational& c, const Rational& x, const Rational& e, unsigned bits,
                    bool lower) {
    const Interval p = pow_enclosure(Interval::point(x), e, bits);
    return c * (lower ? p.lo : p.hi);
}

}  // namespace

Rational PowerFamily::operator()(std::size_t n, const Rational& z) const {
    return coefficient(alpha, n, "alpha") * pow(z, power) + coefficient(beta, n, "beta");
}

std::size_t PowerFamily::max_step() const {
    std::size_t m = std::numeric_limits<std::size_t>::max();
    if (alpha.size() > 1) {
        m = std::min(m, alpha.size() - 1);
    }
    if (beta.size() > 1) {
        m = std::min(m, beta.size() - 1);
    }
    return m;
}

ValidationReport validate_constants(const PowerNonlinearity& pn) {
    ValidationReport report;
    if (!(pn.c1 > 0)) {
        report.violations.push_back({"c1 > 0", {{"c1", pn.c1}}});
    }
    if (pn.c1 > pn.c2) {
        report.violations.push_back({"c1 <= c2", {{"c1", pn.c1}, {"c2", pn.c2}}});
    }
    if (!(pn.delta > 0)) {
        report.violations.push_back({"delta > 0", {{"delta", pn.delta}}});
    }
    return report;
}

ValidationReport verify_sandwich(const PowerNonlinearity& pn, std::span<const Rational> z_samples,
                                 std::size_t n_first, std::size_t n_last) {
    ValidationReport report = validate_constants(pn);
    if (!report.ok()) {
        return report;
    }
    const Rational exponent = 1 + pn.delta;
    if (!exponent.get_num().fits_ulong_p() || !exponent.get_den().fits_ulong_p()) {
        throw DomainError("exponent 1 + delta too large: " + to_string(exponent));
    }
    const unsigned long r = exponent.get_num().get_ui();
    const unsigned long s = exponent.get_den().get_ui();

    for (std::size_t n = n_first; n <= n_last; ++n) {
        for (const Rational& z : z_samples) {
            if (z < 1) {
                report.violations.push_back({"z >= 1", {{"n", Rational(n)}, {"z", z}}});
                continue;
            }
            const Rational f = pn.family(n, z);
            Rational low_residual;
            Rational high_residual;
            if (s == 1) {
                const Rational zp = pow(z, r);
                low_residual = f - pn.c1 * zp;
                high_residual = pn.c2 * zp - f;
            } else if (f <= 0) {
                low_residual = f;
                high_residual = Rational(1);
            } else {
                const Rational zr = pow(z, r);
                low_residual = pow(f / pn.c1, s) - zr;
                high_residual = zr - pow(f / pn.c2, s);
            }
            if (low_residual < 0) {
                report.violations.push_back({"C1 z^(1+delta) <= F(n,z)",
                                             {{"n", Rational(n)}, {"z", z}, {"F", f},
                                              {"residual", low_residual}}});
            }
            if (high_residual < 0) {
                report.violations.push_back({"F(n,z) <= C2 z^(1+delta)",
                                             {{"n", Rational(n)}, {"z", z}, {"F", f},
                                              {"residual", high_residual}}});
            }
        }
    }
    return report;
}

EnvelopePair envelope(const PowerNonlinearity& pn, const Rational& d0, std::size_t n_max,
                      unsigned bits, EvalLimits limits) {
    require_valid(pn);
    if (d0 < 1) {
        throw InvalidParams("envelope seed must satisfy d0 >= 1, got " + to_string(d0));
    }
    if (n_max > limits.max_index) {
        throw CapExceeded("n = " + std::to_string(n_max) + " exceeds index cap " +
                          std::to_string(limits.max_index));
    }
    const Rational exponent = 1 + pn.delta;
    EnvelopePair env;
    env.exact = is_integer(exponent);
    env.lower.push_back(d0);
    env.upper.push_back(d0);
    env.actual.push_back(d0);
    for (std::size_t n = 0; n < n_max; ++n) {
        if (env.lower.back() < 1) {
            throw DomainError("lower envelope dropped below 1 at n = " + std::to_string(n));
        }
        env.lower.push_back(power_step(pn.c1, env.lower.back(), exponent, bits, true));
        env.upper.push_back(power_step(pn.c2, env.upper.back(), exponent, bits, false));
        env.actual.push_back(pn.family(n, env.actual.back()));
    }
    return env;
}

Interval closed_form_lower(const PowerNonlinearity& pn, const Rational& z, std::size_t k,
                           unsigned bits, EvalLimits limits) {
    require_valid(pn);
    if (z < 1) {
        throw DomainError("closed form needs z >= 1, got " + to_string(z));
    }
    if (k > limits.max_index) {
        throw CapExceeded("k = " + std::to_string(k) + " exceeds index cap " +
                          std::to_string(limits.max_index));
    }
    const Rational e = 1 + pn.delta;
    // sum_{j<k} e^j = (e^k - 1)/delta, kept as an exact rational.
    Rational coeff_exp(0);
    Rational e_pow(1);
    for (std::size_t j = 0; j < k; ++j) {
        coeff_exp += e_pow;
        e_pow *= e;
    }
    const Interval z_part = pow_enclosure(Interval::point(z), e_pow, bits);
    if (k == 0) {
        return z_part;
    }
    return multiply_nonnegative(pow_enclosure(Interval::point(pn.c1), coeff_exp, bits), z_part);
}

}  // namespace recgrow
