#include "recgrow/rational.hpp"

#include <algorithm>
#include <cctype>

#include "recgrow/errors.hpp"

namespace recgrow {

namespace {

bool all_digits(std::string_view s) {
    return !s.empty() &&
           std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c) != 0; });
}

Integer parse_integer(std::string_view text, std::string_view whole) {
    std::string_view digits = text;
    if (!digits.empty() && (digits.front() == '-' || digits.front() == '+')) {
        digits.remove_prefix(1);
    }
    if (!all_digits(digits)) {
        throw ParseError("malformed rational literal '" + std::string(whole) + "'");
    }
    Integer v(std::string(digits), 10);
    return (!text.empty() && text.front() == '-') ? Integer(-v) : v;
}

}  // namespace

Rational parse_rational(std::string_view text) {
    const auto slash = text.find('/');
    if (slash == std::string_view::npos) {
        return Rational(parse_integer(text, text));
    }
    const Integer num = parse_integer(text.substr(0, slash), text);
    const std::string_view den_text = text.substr(slash + 1);
    if (!all_digits(den_text)) {
        throw ParseError("malformed rational literal '" + std::string(text) + "'");
    }
    const Integer den(std::string(den_text), 10);
    if (den == 0) {
        throw ParseError("zero denominator in '" + std::string(text) + "'");
    }
    Rational r(num, den);
    r.canonicalize();
    return r;
}

Rational parse_decimal(std::string_view text) {
    const auto dot = text.find('.');
    if (dot == std::string_view::npos) {
        return Rational(parse_integer(text, text));
    }
    const std::string_view frac = text.substr(dot + 1);
    if (!all_digits(frac)) {
        throw ParseError("malformed decimal literal '" + std::string(text) + "'");
    }
    std::string_view int_part = text.substr(0, dot);
    const bool negative = !int_part.empty() && int_part.front() == '-';
    if (negative || (!int_part.empty() && int_part.front() == '+')) {
        int_part.remove_prefix(1);
    }
    if (!all_digits(int_part)) {
        throw ParseError("malformed decimal literal '" + std::string(text) + "'");
    }
    Integer scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, frac.size());
    const Integer mantissa(std::string(int_part) + std::string(frac), 10);
    Rational r(negative ? Integer(-mantissa) : mantissa, scale);
    r.canonicalize();
    return r;
}

std::string to_string(const Rational& x) { return x.get_str(10); }

std::string to_string(const Integer& x) { return x.get_str(10); }

bool is_integer(const Rational& x) { return x.get_den() == 1; }

Integer floor(const Rational& x) {
    Integer q;
    mpz_fdiv_q(q.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
    return q;
}

Integer ceil(const Rational& x) {
    Integer q;
    mpz_cdiv_q(q.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
    return q;
}

Integer pow(const Integer& x, std::uint64_t e) {
    Integer r;
    mpz_pow_ui(r.get_mpz_t(), x.get_mpz_t(), static_cast<unsigned long>(e));
    return r;
}

Rational pow(const Rational& x, std::uint64_t e) {
    Rational r;
    mpz_pow_ui(r.get_num_mpz_t(), x.get_num_mpz_t(), static_cast<unsigned long>(e));
    mpz_pow_ui(r.get_den_mpz_t(), x.get_den_mpz_t(), static_cast<unsigned long>(e));
    // Coprime num/den give coprime powers, so the result is canonical.
    return r;
}

Rational ldexp(const Integer& m, long e) {
    Rational r(m);
    if (e >= 0) {
        mpq_mul_2exp(r.get_mpq_t(), r.get_mpq_t(), static_cast<mp_bitcnt_t>(e));
    } else {
        mpq_div_2exp(r.get_mpq_t(), r.get_mpq_t(), static_cast<mp_bitcnt_t>(-e));
    }
    return r;
}

std::size_t bit_length(const Integer& x) {
    return x == 0 ? 0 : mpz_sizeinbase(x.get_mpz_t(), 2);
}

long floor_log2(const Rational& x) {
    const Integer num = abs(x.get_num());
    const Integer& den = x.get_den();
    long e = static_cast<long>(bit_length(num)) - static_cast<long>(bit_length(den));
    // 2^(e-1) < |x| < 2^(e+1); decide between e-1 and e exactly.
    if (abs(x) >= ldexp(Integer(1), e)) {
        return e;
    }
    return e - 1;
}

std::string to_decimal(const Rational& x, unsigned digits, Rounding mode) {
    Integer scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, digits);
    const Rational scaled = x * scale;
    const Integer q = mode == Rounding::Down ? floor(scaled) : ceil(scaled);

    const bool negative = q < 0;
    std::string s = Integer(abs(q)).get_str(10);
    if (digits == 0) {
        return negative ? "-" + s : s;
    }
    if (s.size() <= digits) {
        s.insert(0, digits + 1 - s.size(), '0');
    }
    s.insert(s.size() - digits, 1, '.');
    return negative ? "-" + s : s;
}

}  // namespace recgrow
