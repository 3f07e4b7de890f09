#ifndef TRUMPKIT_TESTS_SUPPORT_HPP
#define TRUMPKIT_TESTS_SUPPORT_HPP

#include <algorithm>
#include <cstdint>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "trumpkit/io.hpp"
#include "trumpkit/majorize.hpp"
#include "trumpkit/mlocc.hpp"
#include "trumpkit/probvec.hpp"

namespace testsupport {

using trumpkit::ProbVec;
using trumpkit::Rational;

inline ProbVec<Rational> fixture(const std::string& name) {
    return trumpkit::io::load_vector<Rational>(std::string(TRUMPKIT_CORPUS_DIR) + "/" + name + ".json");
}

inline ProbVec<Rational> q(std::initializer_list<const char*> entries, bool normalize = false) {
    std::vector<Rational> raw;
    for (const char* e : entries) raw.push_back(trumpkit::parse_rational(e));
    return trumpkit::make_probvec(std::move(raw), normalize);
}

inline Rational rat(const char* s) { return trumpkit::parse_rational(s); }

class Gen {
public:
    explicit Gen(std::uint64_t seed) : rng_(seed) {}

    std::uint64_t below(std::uint64_t n) { return std::uniform_int_distribution<std::uint64_t>(0, n - 1)(rng_); }
    std::uint64_t between(std::uint64_t lo, std::uint64_t hi) { return lo + below(hi - lo + 1); }

    // Random rational probability vector with small integer weights; zeros
    // appear only when allow_zero is set.
    ProbVec<Rational> vec(std::size_t n, bool allow_zero = true, unsigned max_weight = 12) {
        std::vector<Rational> raw;
        for (std::size_t i = 0; i < n; ++i) {
            const unsigned lo = allow_zero ? 0 : 1;
            raw.emplace_back(static_cast<unsigned long>(between(lo, max_weight)));
        }
        if (std::all_of(raw.begin(), raw.end(), [](const Rational& v) { return v == 0; })) raw[0] = 1;
        return trumpkit::make_probvec(std::move(raw), true);
    }

    // Fraction in (0, 1) with denominator `den`.
    Rational unit(unsigned den = 16) {
        Rational r(static_cast<long>(between(1, den - 1)), static_cast<long>(den));
        r.canonicalize();
        return r;
    }

    // x reached from y by a few T-transforms, so x is majorized by y.
    ProbVec<Rational> below_in_order(const ProbVec<Rational>& y, unsigned steps = 3) {
        std::vector<Rational> v(y.entries().begin(), y.entries().end());
        for (unsigned s = 0; s < steps; ++s) {
            const std::size_t i = below(v.size());
            const std::size_t j = below(v.size());
            if (i == j) continue;
            const Rational lam = unit();
            const Rational a = v[i];
            const Rational b = v[j];
            v[i] = lam * a + (1 - lam) * b;
            v[j] = lam * b + (1 - lam) * a;
        }
        return trumpkit::make_probvec(std::move(v));
    }

    std::mt19937_64& engine() { return rng_; }

private:
    std::mt19937_64 rng_;
};

// A pair with x in M_k(y) but x not majorized by y: the averaging witness
// of a useful y, pushed across its single boundary equality.
struct MultiCopyPair {
    ProbVec<Rational> x, y;
    unsigned k;
};

inline MultiCopyPair multicopy_pair(Gen& gen, std::size_t n = 4, unsigned k_max = 5) {
    for (;;) {
        auto y = gen.vec(n, true, 10);
        auto v = trumpkit::classify_usefulness(y);
        if (!v.useful) continue;
        const std::size_t l = *v.witness_l;
        std::vector<Rational> w(v.witness_x->entries().begin(), v.witness_x->entries().end());
        Rational room = std::min(y[0] - w[0], w[n - 1] - y[n - 1]);
        const Rational delta = room * gen.unit() / 2;
        w[l - 1] += delta;
        w[l] -= delta;
        auto x = trumpkit::make_probvec(std::move(w));
        for (unsigned k = 2; k <= k_max; ++k) {
            if (trumpkit::in_Mk(x, y, k)) return {x, y, k};
        }
    }
}

// Brute-force oracles working on flat vectors only.
inline std::vector<Rational> flat_power(const ProbVec<Rational>& x, unsigned k) {
    std::vector<Rational> out{Rational(1)};
    for (unsigned c = 0; c < k; ++c) {
        std::vector<Rational> next;
        for (const auto& a : out)
            for (const auto& b : x.entries()) next.push_back(a * b);
        out = std::move(next);
    }
    std::sort(out.begin(), out.end(), std::greater<>());
    return out;
}

inline bool flat_majorizes(std::vector<Rational> x, std::vector<Rational> y, bool* strict = nullptr) {
    std::sort(x.begin(), x.end(), std::greater<>());
    std::sort(y.begin(), y.end(), std::greater<>());
    if (x.size() != y.size()) return false;
    Rational ex = 0, ey = 0;
    bool ok = true, all_strict = true;
    for (std::size_t l = 0; l + 1 < x.size(); ++l) {
        ex += x[l];
        ey += y[l];
        if (ex > ey) ok = false;
        if (ex == ey) all_strict = false;
    }
    if (strict) *strict = ok && all_strict;
    return ok;
}

}  // namespace testsupport

#endif  // TRUMPKIT_TESTS_SUPPORT_HPP
