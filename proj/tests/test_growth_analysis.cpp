#include "doctest.h"
#include "recgrow/errors.hpp"
#include "recgrow/growth_analysis.hpp"
#include "recgrow/theorem_bounds.hpp"

using namespace recgrow;

namespace {

// Independent oracle: dyadic bracket of x^(1/2^n) from GMP's own n-th root
// (mpz_root), not the bisection used by the library.
std::pair<Rational, Rational> oracle_root(const Rational& x, std::size_t n, unsigned bits) {
    const unsigned long N = 1ul << n;
    Integer scaled = x.get_num();
    mpz_mul_2exp(scaled.get_mpz_t(), scaled.get_mpz_t(), N * bits);
    mpz_fdiv_q(scaled.get_mpz_t(), scaled.get_mpz_t(), x.get_den_mpz_t());
    Integer r;
    mpz_root(r.get_mpz_t(), scaled.get_mpz_t(), N);
    const Rational lo = ldexp(r, -static_cast<long>(bits));
    return {lo, lo + ldexp(Integer(1), -static_cast<long>(bits))};
}

}  // namespace

TEST_CASE("enclosure law confirmed against long-run witnesses") {
    // C lies between (bD(l))^(1/2^l) and (bD(l)Q(l))^(1/2^l); the lower
    // witness is nondecreasing, so a long-run witness must land inside.
    for (const Params p : {Params{1, 1}, Params{1, 9}, Params{2, Rational(1, 2)}, Params{3, 5, 2}}) {
        const auto t = evaluate(p, 13);
        const auto [far_lo, far_hi] = oracle_root(p.b * t[13], 13, 96);
        for (std::size_t l = 1; l <= 8; ++l) {
            const auto [lo_lo, lo_hi] = oracle_root(p.b * t[l], l, 96);
            const auto [hi_lo, hi_hi] = oracle_root(p.b * t[l] * q_factor(t, l), l, 96);
            CHECK(lo_lo <= far_hi);
            CHECK(far_lo <= hi_hi);
        }
    }
}

TEST_CASE("growth_enclosure at l = 1 for a = b = 1") {
    const auto enc = growth_enclosure(Params{1, 1}, 1, 1e-12);
    // (1*2)^(1/2) and (2 * 5/4)^(1/2).
    CHECK(pow(enc.c_lo.value, 2) <= 2);
    CHECK(pow(enc.c_hi.value, 2) >= Rational(5, 2));
    CHECK(to_decimal(enc.c_lo.value, 5, Rounding::Down) == "1.41421");
    CHECK(to_decimal(enc.c_hi.value, 5, Rounding::Down) == "1.58113");
}

TEST_CASE("growth_enclosure at l = 5 contains the long-run oracle") {
    const auto t = evaluate({1, 1}, 12);
    const auto enc = growth_enclosure(t, 5, 1e-12);
    CHECK(enc.width() < Rational(1, 10'000'000'000));
    const auto [o_lo, o_hi] = oracle_root(t[12], 12, 80);
    CHECK(enc.c_lo.value <= o_hi);
    CHECK(o_lo <= enc.c_hi.value);
    CHECK(to_decimal(enc.c_lo.value, 9, Rounding::Down) == "1.502836801");
    CHECK(enc.c_lo.error <= Rational(1, 1'000'000'000'000) * enc.c_lo.value);
}

TEST_CASE("growth_enclosure degenerates at the fixed point") {
    const Params p{Rational(1, 4), 1, Rational(1, 2)};
    Rational prev_lo(0);
    for (std::size_t l = 1; l <= 6; ++l) {
        const auto enc = growth_enclosure(p, l, 1e-20);
        CHECK(enc.c_hi.value == 1);
        CHECK(enc.c_lo.value < 1);
        CHECK(enc.c_lo.value > prev_lo);
        prev_lo = enc.c_lo.value;
    }
}

TEST_CASE("enclosure nesting and shrinking width") {
    for (const Params p : {Params{1, 1}, Params{1, 9}, Params{2, 3}}) {
        const auto t = evaluate(p, 10);
        std::vector<GrowthEnclosure> encs;
        for (std::size_t l = 1; l <= 10; ++l) {
            encs.push_back(growth_enclosure(t, l, 1e-15));
        }
        for (std::size_t i = 0; i < encs.size(); ++i) {
            CHECK(encs[i].c_lo.value <= encs[i].c_hi.value);
            for (std::size_t j = i + 1; j < encs.size(); ++j) {
                CHECK(encs[i].c_lo.value <= encs[j].c_lo.value);
                CHECK(encs[j].c_lo.value <= encs[i].c_hi.value);
            }
            if (i >= 1 && i + 1 < encs.size()) {
                CHECK(encs[i + 1].width() < encs[i].width());
            }
        }
    }
}

TEST_CASE("decimal endpoints survive exact re-exponentiation") {
    const auto t = evaluate({1, 9}, 8);
    for (std::size_t l = 1; l <= 8; ++l) {
        const auto enc = growth_enclosure(t, l, 1e-20);
        const Rational lo = parse_decimal(to_decimal(enc.c_lo.value, 30, Rounding::Down));
        const Rational hi = parse_decimal(to_decimal(enc.c_hi.value, 30, Rounding::Up));
        CHECK(certify_enclosure(t, l, lo, hi));
        // Nudging past the true root must break certification.
        CHECK_FALSE(certify_enclosure(t, l, hi + 1, hi));
    }
}

TEST_CASE("growth_enclosure errors") {
    CHECK_THROWS_AS(growth_enclosure(Params{1, 1}, 3, 1e-31), ToleranceUnachievable);
    CHECK_THROWS_AS(growth_enclosure(Params{1, 1}, 3, 0.0), ToleranceUnachievable);
    CHECK_THROWS_AS(growth_enclosure(Params{1, 1}, 0, 1e-10), DomainError);
    CHECK_THROWS_AS(growth_enclosure(Params{1, 1}, 31, 1e-10), CapExceeded);
    // 2^27-th roots leave a certification budget of 16 bits; the values
    // themselves are irrelevant to the budget check.
    const SequenceTable stub({1, 1}, std::vector<Rational>(28, Rational(2)));
    CHECK_THROWS_AS(growth_enclosure(stub, 27, 1e-10), ToleranceUnachievable);
}

TEST_CASE("log_log_index") {
    const auto t = evaluate({1, 1}, 14);
    // Frozen from an independent 60-digit mpmath evaluation.
    const auto i6 = log_log_index(t, 6, 1e-20);
    CHECK(to_decimal(i6.value, 18, Rounding::Down) == "0.784059471869666034");
    const auto i12 = log_log_index(t, 12, 1e-20);
    CHECK(to_decimal(i12.value, 18, Rounding::Down) == "0.892029735934833017");
    CHECK(i12.error <= Rational(1, 100'000'000'000'000'000) * i12.value);

    for (std::size_t n = 3; n < 14; ++n) {
        CHECK(log_log_index(t, n + 1, 1e-12).value > log_log_index(t, n, 1e-12).value);
    }
    // n * index - n = log2(ln C) + o(1) stays bounded.
    for (std::size_t n = 4; n <= 14; ++n) {
        const Rational dev = log_log_index(t, n, 1e-12).value * n - n;
        CHECK(abs(dev) < 2);
    }

    CHECK_THROWS_AS(log_log_index(evaluate({Rational(1, 4), 1, Rational(1, 2)}, 3), 2, 1e-10),
                    DomainError);
}

TEST_CASE("doubling_benchmark") {
    CHECK(doubling_benchmark(0) == 1);
    CHECK(doubling_benchmark(1) == 2);
    CHECK(doubling_benchmark(4) == 256);
    CHECK(to_string(doubling_benchmark(7)) == "18446744073709551616");
    CHECK_THROWS_AS(doubling_benchmark(31), CapExceeded);
}

TEST_CASE("compare_to_benchmark") {
    const auto rows = compare_to_benchmark({1, 1}, 7);
    REQUIRE(rows.size() == 8);
    CHECK(to_string(rows[7].value) == "44127887745906175987802");
    for (const auto& r : rows) {
        CHECK(r.dominates);
    }
    CHECK(rows[0].value == rows[0].benchmark);

    const auto r9 = compare_to_benchmark({1, 9}, 2);
    CHECK(r9[2].value == 901);
    CHECK(r9[2].benchmark == 4);

    for (const auto& r : compare_to_benchmark({1, 1}, 20)) {
        CHECK(r.dominates);
    }
    CHECK_THROWS_AS(compare_to_benchmark({Rational(1, 2), 2}, 3), InvalidParams);
}
