#include "recgrow/growth_analysis.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include <mpfr.h>

#include "recgrow/enclosure.hpp"
#include "recgrow/errors.hpp"
#include "recgrow/theorem_bounds.hpp"

namespace recgrow {

namespace {

// Working-precision ceiling, and ceiling on the bit size of the exact
// re-exponentiation lo^(2^l) used for certification.
constexpr unsigned kMaxPrecisionBits = 1u << 16;
constexpr std::uint64_t kMaxCertificateBits = std::uint64_t{1} << 31;

class Mpfr {
public:
    explicit Mpfr(mpfr_prec_t prec) { mpfr_init2(v_, prec); }
    ~Mpfr() { mpfr_clear(v_); }
    Mpfr(const Mpfr&) = delete;
    Mpfr& operator=(const Mpfr&) = delete;

    mpfr_ptr get() { return v_; }
    mpfr_srcptr get() const { return v_; }

private:
    mpfr_t v_;
};

unsigned bits_for_tolerance(double rtol) {
    if (!(rtol >= kMinRelativeTolerance) || !std::isfinite(rtol)) {
        throw ToleranceUnachievable("relative tolerance must be >= 1e-30");
    }
    return static_cast<unsigned>(std::max(1.0, std::ceil(-std::log2(rtol)))) + 1;
}

bool relative_width_within(const Interval& iv, unsigned bits) {
    return iv.width() <= ldexp(Integer(1), -static_cast<long>(bits)) * iv.lo;
}

Rational to_rational(mpfr_srcptr x) {
    Integer m;
    const mpfr_exp_t e = mpfr_get_z_2exp(m.get_mpz_t(), x);
    return ldexp(m, e);
}

// ln(n) for n >= 1 as (bits-1) ln 2 + ln(n / 2^(bits-1)), mantissa rounded to
// the working precision.
void log_of_integer(mpfr_ptr out, const Integer& n, mpfr_prec_t prec) {
    const std::size_t bits = bit_length(n);
    Mpfr mantissa(prec);
    mpfr_set_z(mantissa.get(), n.get_mpz_t(), MPFR_RNDN);
    mpfr_div_2ui(mantissa.get(), mantissa.get(), bits - 1, MPFR_RNDN);
    mpfr_log(mantissa.get(), mantissa.get(), MPFR_RNDN);

    Mpfr ln2(prec);
    mpfr_const_log2(ln2.get(), MPFR_RNDN);
    mpfr_mul_ui(ln2.get(), ln2.get(), bits - 1, MPFR_RNDN);
    mpfr_add(out, ln2.get(), mantissa.get(), MPFR_RNDN);
}

Rational log_log_at(const Rational& x, std::size_t n, mpfr_prec_t prec) {
    Mpfr ln_num(prec);
    Mpfr ln_den(prec);
    log_of_integer(ln_num.get(), x.get_num(), prec);
    log_of_integer(ln_den.get(), x.get_den(), prec);
    mpfr_sub(ln_num.get(), ln_num.get(), ln_den.get(), MPFR_RNDN);
    mpfr_log2(ln_num.get(), ln_num.get(), MPFR_RNDN);
    mpfr_div_ui(ln_num.get(), ln_num.get(), n, MPFR_RNDN);
    return to_rational(ln_num.get());
}

}  // namespace

GrowthEnclosure growth_enclosure(const SequenceTable& table, std::size_t l, double rtol) {
    if (l == 0) {
        throw DomainError("witness index l must be positive");
    }
    const unsigned rtol_bits = bits_for_tolerance(rtol);
    const Rational& b = table.params().b;
    const Rational low_base = b * table.at(l);
    const Rational q = q_factor(table, l);
    const Rational high_base = low_base * q;

    const unsigned budget = l >= 63 ? 0
        : static_cast<unsigned>(std::min<std::uint64_t>(kMaxPrecisionBits,
                                                         kMaxCertificateBits >> l));
    if (rtol_bits > budget) {
        throw ToleranceUnachievable("tolerance needs " + std::to_string(rtol_bits) +
                                    " bits at l = " + std::to_string(l) + ", budget is " +
                                    std::to_string(budget));
    }
    // The true relative width is about ln Q(l) / 2^l >= (Q(l) - 1) / 2^(l+1).
    const long gap_log2 = std::min(0L, floor_log2(q - 1));
    const auto resolve_bits = static_cast<unsigned>(-gap_log2 + static_cast<long>(l) + 8);
    const unsigned target = std::max(rtol_bits, std::min(resolve_bits, budget));

    for (unsigned guard = 4; guard <= 64; guard += 20) {
        const unsigned working = target + guard;
        const Interval lo_root = root_pow2_enclosure(low_base, static_cast<unsigned>(l), working);
        const Interval hi_root = root_pow2_enclosure(high_base, static_cast<unsigned>(l), working);
        if (!relative_width_within(lo_root, target) || !relative_width_within(hi_root, target)) {
            continue;
        }
        GrowthEnclosure enc;
        enc.l = l;
        enc.c_lo = {lo_root.lo, lo_root.width()};
        enc.c_hi = {hi_root.hi, hi_root.width()};
        enc.precision_bits = target;
        if (!certify_enclosure(table, l, enc.c_lo.value, enc.c_hi.value)) {
            throw std::logic_error("growth enclosure failed exact certification");
        }
        return enc;
    }
    throw ToleranceUnachievable("root extraction did not reach " + std::to_string(target) +
                                " bits");
}

GrowthEnclosure growth_enclosure(const Params& params, std::size_t l, double rtol,
                                 EvalLimits limits) {
    return growth_enclosure(evaluate(params, l, limits), l, rtol);
}

bool certify_enclosure(const SequenceTable& table, std::size_t l, const Rational& lo,
                       const Rational& hi) {
    if (l >= 63 || lo <= 0) {
        return false;
    }
    const std::uint64_t n = std::uint64_t{1} << l;
    const Rational low_base = table.params().b * table.at(l);
    const Rational high_base = low_base * q_factor(table, l);
    return pow(lo, n) <= low_base && pow(hi, n) >= high_base;
}

Approximation log_log_index(const SequenceTable& table, std::size_t n, double rtol) {
    if (n == 0) {
        throw DomainError("log-log index needs n >= 1");
    }
    const Rational x = table.params().b * table.at(n);
    if (x <= 1) {
        throw DomainError("log-log index needs b*D(n) > 1, got " + to_string(x));
    }
    const unsigned rtol_bits = bits_for_tolerance(rtol);
    const Rational tol = ldexp(Integer(1), -static_cast<long>(rtol_bits));

    // Ziv-style loop: accept once two precisions agree well inside rtol.
    for (mpfr_prec_t prec = rtol_bits + 32; prec <= kMaxPrecisionBits; prec *= 2) {
        const Rational coarse = log_log_at(x, n, prec);
        const Rational fine = log_log_at(x, n, prec + 64);
        const Rational diff = abs(fine - coarse);
        if (fine != 0 && 4 * diff <= tol * abs(fine)) {
            return {fine, std::max(Rational(2 * diff), Rational(tol * abs(fine) / 4))};
        }
    }
    throw ToleranceUnachievable("log-log index did not stabilise within precision budget");
}

Integer doubling_benchmark(std::size_t n, EvalLimits limits) {
    if (n > limits.max_index) {
        throw CapExceeded("n = " + std::to_string(n) + " exceeds index cap " +
                          std::to_string(limits.max_index));
    }
    if (n == 0) {
        return Integer(1);
    }
    if (n > 40) {
        throw CapExceeded("2^(2^(n-1)) is not representable for n = " + std::to_string(n));
    }
    Integer r(1);
    mpz_mul_2exp(r.get_mpz_t(), r.get_mpz_t(), mp_bitcnt_t{1} << (n - 1));
    return r;
}

std::vector<BenchmarkRow> compare_to_benchmark(const Params& params, std::size_t n_max,
                                               EvalLimits limits) {
    if (!is_integer(params.a) || !is_integer(params.b) || params.a < 1 || params.b < 1 ||
        params.d0 < 1) {
        throw InvalidParams("benchmark comparison needs integer a >= 1, b >= 1 and d0 >= 1");
    }
    const SequenceTable table = evaluate(params, n_max, limits);
    std::vector<BenchmarkRow> rows;
    rows.reserve(table.size());
    for (std::size_t n = 0; n <= n_max; ++n) {
        Integer bench = doubling_benchmark(n, limits);
        const bool dominates = table[n] >= bench;
        rows.push_back({n, table[n], std::move(bench), dominates});
    }
    return rows;
}

}  // namespace recgrow
