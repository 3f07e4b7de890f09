#ifndef TRUMPKIT_SCALAR_HPP
#define TRUMPKIT_SCALAR_HPP

#include <gmpxx.h>

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace trumpkit {

using Rational = mpq_class;
using BigCount = mpz_class;

/// Malformed or out-of-domain input (bad literal, negative mass, dimension mismatch).
class InvalidInput : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A documented precondition of a construction does not hold for the given data.
class PreconditionFailed : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

struct ScalarBackend {
    enum class Mode { exact, floating };

    Mode mode = Mode::exact;
    double float_eps = 0.0;  // used only in floating mode; > 0 there

    static ScalarBackend exact() { return {}; }
    static ScalarBackend floating(double eps) {
        if (!(eps > 0.0)) throw InvalidInput("float backend needs eps > 0");
        return {Mode::floating, eps};
    }
    bool is_exact() const { return mode == Mode::exact; }
};

// Parses "0.4", "2/5", "1", "1e-3", ".25" into an exact rational.
Rational parse_rational(std::string_view text);

std::string big_to_string(const BigCount& v);

/// Per-scalar arithmetic used by every generic algorithm. Comparisons return
/// -1/0/+1; in floating mode |a-b| <= eps counts as equal.
template <class S>
struct ScalarOps;

template <>
struct ScalarOps<Rational> {
    static constexpr bool exact = true;
    static constexpr const char* name = "exact";

    static ScalarBackend default_backend() { return ScalarBackend::exact(); }

    static int compare(const Rational& a, const Rational& b, double /*eps*/) {
        int c = cmp(a, b);
        return (c > 0) - (c < 0);
    }
    static Rational from_count(const BigCount& c) { return Rational(c); }
    static Rational from_int(long v) { return Rational(v); }
    static Rational pow(const Rational& base, unsigned long e) {
        Rational r;
        mpz_pow_ui(r.get_num_mpz_t(), base.get_num_mpz_t(), e);
        mpz_pow_ui(r.get_den_mpz_t(), base.get_den_mpz_t(), e);
        return r;
    }
    // Largest integer <= v (v >= 0 in every caller).
    static BigCount floor_count(const Rational& v) {
        BigCount q;
        mpz_fdiv_q(q.get_mpz_t(), v.get_num_mpz_t(), v.get_den_mpz_t());
        return q;
    }
    static double to_double(const Rational& v) { return v.get_d(); }
    // log2 without overflowing double for huge numerators/denominators.
    static double log2(const Rational& v);
    static std::string to_string(const Rational& v) { return v.get_str(); }
    static Rational parse(std::string_view text) { return parse_rational(text); }
    static Rational zero() { return Rational(0); }
    static Rational one() { return Rational(1); }
};

template <>
struct ScalarOps<double> {
    static constexpr bool exact = false;
    static constexpr const char* name = "float";

    static ScalarBackend default_backend() { return ScalarBackend::floating(1e-12); }

    static int compare(double a, double b, double eps) {
        if (std::fabs(a - b) <= eps) return 0;
        return a < b ? -1 : 1;
    }
    static double from_count(const BigCount& c) { return c.get_d(); }
    static double from_int(long v) { return static_cast<double>(v); }
    static double pow(double base, unsigned long e) {
        return std::pow(base, static_cast<double>(e));
    }
    static BigCount floor_count(double v) { return BigCount(std::floor(v)); }
    static double to_double(double v) { return v; }
    static double log2(double v) { return std::log2(v); }
    static std::string to_string(double v);
    static double parse(std::string_view text) { return parse_rational(text).get_d(); }
    static double zero() { return 0.0; }
    static double one() { return 1.0; }
};

}  // namespace trumpkit

#endif  // TRUMPKIT_SCALAR_HPP
