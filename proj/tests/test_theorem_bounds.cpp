#include "doctest.h"
#include "recgrow/errors.hpp"
#include "recgrow/theorem_bounds.hpp"

using namespace recgrow;

namespace {

const std::vector<Params> kGrid = {
    {1, 1},
    {1, 9},
    {Rational(1, 4), 1},
    {2, Rational(1, 2)},
    {Rational(1, 2), 2},
};

}  // namespace

TEST_CASE("q_factor") {
    CHECK(q_factor(evaluate({1, 1}, 3), 1) == Rational(5, 4));
    CHECK(q_factor(evaluate({1, 9}, 3), 1) == Rational(901, 900));
    CHECK_THROWS_AS(q_factor(evaluate({1, 1}, 3), 4), IndexOutOfRange);

    const auto t = evaluate({1, 1}, 10);
    for (std::size_t l = 0; l < 10; ++l) {
        CHECK(q_factor(t, l) > 1);
        CHECK(q_factor(t, l + 1) < q_factor(t, l));
    }
}

TEST_CASE("lower_bound") {
    const auto t11 = evaluate({1, 1}, 4);
    CHECK(lower_bound(t11, 2, 1) == 16);
    CHECK(lower_bound(t11, 2, 1) <= t11[3]);

    const auto t19 = evaluate({1, 9}, 3);
    CHECK(lower_bound(t19, 1, 1) == 900);

    // One step: b D(l)^2 = D(l+1) - a.
    for (const auto& p : kGrid) {
        const auto t = evaluate(p, 6);
        for (std::size_t l = 0; l < 6; ++l) {
            CHECK(lower_bound(t, 1, l) == t[l + 1] - p.a);
        }
    }
    CHECK_THROWS_AS(lower_bound(t11, 3, 2), IndexOutOfRange);
}

TEST_CASE("upper_bound") {
    const auto t11 = evaluate({1, 1}, 4);
    CHECK(upper_bound(t11, 1, 1) == 5);
    CHECK(upper_bound(t11, 1, 1) == t11[2]);
    CHECK(upper_bound(t11, 2, 1) == Rational(125, 4));

    const auto t19 = evaluate({1, 9}, 3);
    // 9^3 * 10^4 * (901/900)^3, frozen from an independent fractions oracle.
    CHECK(upper_bound(t19, 2, 1) == Rational(731432701, 100));
    CHECK(upper_bound(t19, 2, 1) >= t19[3]);
}

TEST_CASE("ratio") {
    const auto t11 = evaluate({1, 1}, 4);
    CHECK(ratio(t11, 1, 1) == Rational(5, 4));
    CHECK(ratio(t11, 2, 1) == Rational(13, 8));
    CHECK(ratio(t11, 0, 2) == 1);

    const auto t19 = evaluate({1, 9}, 3);
    CHECK(ratio(t19, 1, 1) == parse_rational("8109/8100"));
    CHECK(ratio(t19, 1, 1) == q_factor(t19, 1));
}

TEST_CASE("certify") {
    SUBCASE("a = b = 1 over 4 x 4") {
        const auto certs = certify({1, 1}, 4, 4);
        CHECK(certs.size() == 16);
        for (const auto& c : certs) {
            CHECK(c.holds);
            CHECK(c.ratio >= 1);
            CHECK(c.ratio <= pow(c.q_l, (std::uint64_t{1} << c.k) - 1));
        }
    }
    SUBCASE("a = 1, b = 9 over 3 x 3") {
        const auto certs = certify({1, 9}, 3, 3);
        CHECK(certs.size() == 9);
        for (const auto& c : certs) {
            CHECK(c.holds);
        }
    }
    SUBCASE("k_max = 1 gives ratio = Q(l)") {
        for (const auto& c : certify({2, Rational(1, 2)}, 1, 7)) {
            CHECK(c.ratio == c.q_l);
        }
    }
    SUBCASE("cap propagates") { CHECK_THROWS_AS(certify({1, 1}, 20, 20), CapExceeded); }
}

TEST_CASE("invariants over the parameter grid") {
    for (const auto& p : kGrid) {
        const auto t = evaluate(p, 12);
        for (std::size_t l = 1; l <= 6; ++l) {
            CHECK(ratio(t, 1, l) == q_factor(t, l));
            for (std::size_t k = 1; k + 1 + l <= 12 && k <= 5; ++k) {
                // Sandwich.
                CHECK(lower_bound(t, k, l) <= t[k + l]);
                CHECK(t[k + l] <= upper_bound(t, k, l));
                // Composition of the induction step.
                CHECK(lower_bound(t, k + 1, l) == p.b * pow(lower_bound(t, k, l), 2));
                CHECK(upper_bound(t, k + 1, l) <=
                      p.b * pow(upper_bound(t, k, l), 2) * q_factor(t, l));
            }
        }
    }
}

TEST_CASE("convergence_profile") {
    SUBCASE("gap strictly decreasing for a = b = 1, k = 2") {
        const auto prof = convergence_profile({1, 1}, 2, 1, 4);
        REQUIRE(prof.rows.size() == 4);
        for (std::size_t i = 0; i < prof.rows.size(); ++i) {
            CHECK(prof.rows[i].l == i + 1);
            CHECK(prof.rows[i].ratio_excess >= 0);
            CHECK(prof.rows[i].ratio_excess <= prof.rows[i].gap);
            if (i > 0) {
                CHECK(prof.rows[i].gap < prof.rows[i - 1].gap);
            }
        }
    }
    SUBCASE("k = 1 tracks Q(l) - 1 exactly") {
        const auto prof = convergence_profile({1, 9}, 1, 1, 5);
        for (std::size_t i = 0; i < prof.rows.size(); ++i) {
            CHECK(prof.rows[i].ratio_excess == prof.rows[i].gap);
            if (i > 0) {
                CHECK(prof.rows[i].ratio_excess < prof.rows[i - 1].ratio_excess);
            }
        }
    }
    SUBCASE("single row") {
        const auto prof = convergence_profile({Rational(1, 2), 2}, 4, 3, 3);
        REQUIRE(prof.rows.size() == 1);
        CHECK(prof.rows[0].ratio_excess >= 0);
        CHECK(prof.rows[0].ratio_excess <= prof.rows[0].gap);
    }
}

TEST_CASE("integer_envelope") {
    const auto t11 = evaluate({1, 1}, 4);
    CHECK(integer_envelope(t11, 2, 1) == std::pair<Integer, Integer>(16, 31));
    CHECK(integer_envelope(t11, 1, 2) == std::pair<Integer, Integer>(25, 26));
    const auto t19 = evaluate({1, 9}, 3);
    CHECK(integer_envelope(t19, 1, 1) == std::pair<Integer, Integer>(900, 901));

    CHECK_THROWS_AS(integer_envelope(evaluate({Rational(1, 2), 2}, 3), 1, 1), NonIntegerParams);

    for (const Params p : {Params{1, 1}, Params{1, 9}, Params{3, 2}}) {
        const auto t = evaluate(p, 10);
        for (std::size_t k = 1; k <= 5; ++k) {
            for (std::size_t l = 1; l <= 5; ++l) {
                const auto [lo, hi] = integer_envelope(t, k, l);
                CHECK(lo <= t[k + l]);
                CHECK(t[k + l] <= hi);
                const Rational slack = pow(q_factor(t, l), (std::uint64_t{1} << k) - 1) - 1;
                CHECK(Rational(hi - lo) < Rational(lo) * slack + 1);
            }
        }
    }
}

TEST_CASE("fixed point attains the upper bound") {
    const auto t = evaluate({Rational(1, 4), 1, Rational(1, 2)}, 8);
    for (std::size_t k = 1; k <= 3; ++k) {
        const auto c = certificate(t, k, 2);
        CHECK(c.holds);
        CHECK(c.actual == c.upper);
    }
}
