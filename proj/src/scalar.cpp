#include "trumpkit/scalar.hpp"

#include <cctype>
#include <cstdio>
#include <limits>

namespace trumpkit {

namespace {

BigCount parse_digits(std::string_view digits, std::string_view whole) {
    if (digits.empty()) return BigCount(0);
    for (char ch : digits) {
        if (!std::isdigit(static_cast<unsigned char>(ch))) {
            throw InvalidInput("bad numeric literal: '" + std::string(whole) + "'");
        }
    }
    return BigCount(std::string(digits), 10);
}

Rational parse_decimal(std::string_view text, std::string_view whole) {
    bool negative = false;
    if (!text.empty() && (text.front() == '-' || text.front() == '+')) {
        negative = text.front() == '-';
        text.remove_prefix(1);
    }
    long exponent = 0;
    if (auto e = text.find_first_of("eE"); e != std::string_view::npos) {
        std::string exp_text(text.substr(e + 1));
        if (exp_text.empty()) throw InvalidInput("bad numeric literal: '" + std::string(whole) + "'");
        std::size_t used = 0;
        try {
            exponent = std::stol(exp_text, &used);
        } catch (const std::exception&) {
            throw InvalidInput("bad numeric literal: '" + std::string(whole) + "'");
        }
        if (used != exp_text.size() || exponent > 4096 || exponent < -4096) {
            throw InvalidInput("bad numeric literal: '" + std::string(whole) + "'");
        }
        text = text.substr(0, e);
    }
    std::string_view int_part = text;
    std::string_view frac_part;
    if (auto dot = text.find('.'); dot != std::string_view::npos) {
        int_part = text.substr(0, dot);
        frac_part = text.substr(dot + 1);
    }
    if (int_part.empty() && frac_part.empty()) {
        throw InvalidInput("bad numeric literal: '" + std::string(whole) + "'");
    }
    BigCount num = parse_digits(int_part, whole);
    BigCount frac = parse_digits(frac_part, whole);
    BigCount scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, frac_part.size());
    num = num * scale + frac;

    exponent -= static_cast<long>(frac_part.size());
    BigCount ten_pow;
    mpz_ui_pow_ui(ten_pow.get_mpz_t(), 10, static_cast<unsigned long>(exponent < 0 ? -exponent : exponent));
    Rational r = exponent >= 0 ? Rational(num * ten_pow) : Rational(num, ten_pow);
    r.canonicalize();
    return negative ? Rational(-r) : r;
}

}  // namespace

Rational parse_rational(std::string_view text) {
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
    if (text.empty()) throw InvalidInput("empty numeric literal");

    if (auto slash = text.find('/'); slash != std::string_view::npos) {
        Rational num = parse_decimal(text.substr(0, slash), text);
        Rational den = parse_decimal(text.substr(slash + 1), text);
        if (sgn(den) == 0) throw InvalidInput("zero denominator in '" + std::string(text) + "'");
        Rational r = num / den;
        return r;
    }
    return parse_decimal(text, text);
}

std::string big_to_string(const BigCount& v) { return v.get_str(); }

double ScalarOps<Rational>::log2(const Rational& v) {
    if (sgn(v) <= 0) return -std::numeric_limits<double>::infinity();
    long num_exp = 0;
    long den_exp = 0;
    double num_mant = mpz_get_d_2exp(&num_exp, v.get_num_mpz_t());
    double den_mant = mpz_get_d_2exp(&den_exp, v.get_den_mpz_t());
    return std::log2(num_mant) - std::log2(den_mant) + static_cast<double>(num_exp - den_exp);
}

std::string ScalarOps<double>::to_string(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

}  // namespace trumpkit
