#include "recgrow/ns_term_model.hpp"

#include <array>
#include <string_view>

#include "recgrow/errors.hpp"

namespace recgrow {

namespace {

constexpr std::array<std::string_view, 8> kPrintedD3 = {
    "1",
    "10",
    "901",
    "811802",
    "659022487205",
    "434310638641864388712026",
    "1.886257308e47",
    "3.5579666e94",
};

bool printed_matches(std::string_view printed, const Rational& value) {
    const auto e_pos = printed.find('e');
    if (e_pos == std::string_view::npos) {
        return parse_rational(printed) == value;
    }
    const std::string_view mantissa = printed.substr(0, e_pos);
    const long exponent = std::stol(std::string(printed.substr(e_pos + 1)));
    const auto dot = mantissa.find('.');
    const long frac_digits =
        dot == std::string_view::npos ? 0 : static_cast<long>(mantissa.size() - dot - 1);

    Integer ten_pow;
    mpz_ui_pow_ui(ten_pow.get_mpz_t(), 10, static_cast<unsigned long>(exponent));
    const Rational printed_value = parse_decimal(mantissa) * ten_pow;
    Rational ulp(1);
    for (long i = 0; i < exponent - frac_digits; ++i) {
        ulp *= 10;
    }
    return 2 * abs(value - printed_value) <= ulp;
}

void require_dimension(unsigned d) {
    if (d == 0) {
        throw InvalidParams("spatial dimension d must be >= 1");
    }
}

}  // namespace

Params ns_params(unsigned d) {
    require_dimension(d);
    return Params{Rational(1), Rational(Integer(d) * d), Rational(1)};
}

Integer term_count(unsigned d, std::size_t n, EvalLimits limits) {
    const SequenceTable table = evaluate(ns_params(d), n, limits);
    return table[n].get_num();
}

Integer summand_budget(unsigned d, std::size_t n, EvalLimits limits) {
    const Integer dn = term_count(d, n, limits);
    return Integer(d) * d * dn * dn;
}

CostProjection cost_projection(const NsModel& model, const std::optional<Integer>& memory_budget,
                               EvalLimits limits) {
    if (model.bytes_per_term == 0) {
        throw InvalidParams("bytes_per_term must be >= 1");
    }
    const SequenceTable table = evaluate(ns_params(model.d), model.iterations, limits);
    const Integer per_term(std::to_string(model.bytes_per_term), 10);

    CostProjection out;
    for (std::size_t n = 0; n < table.size(); ++n) {
        Integer terms = table[n].get_num();
        Integer bytes = terms * per_term;
        if (memory_budget && !out.first_over_budget && bytes > *memory_budget) {
            out.first_over_budget = n;
        }
        out.rows.push_back({n, std::move(terms), std::move(bytes)});
    }
    return out;
}

std::vector<PrintedValue> printed_table_discrepancies(const SequenceTable& table) {
    std::vector<PrintedValue> out;
    if (table.params() != ns_params(3)) {
        return out;
    }
    for (std::size_t n = 0; n < kPrintedD3.size() && n < table.size(); ++n) {
        out.push_back({n, std::string(kPrintedD3[n]), table[n],
                       printed_matches(kPrintedD3[n], table[n])});
    }
    return out;
}

}  // namespace recgrow
