// Acceptance gate: one PASS/FAIL line per criterion, nonzero exit on any FAIL.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <string>

#include "support.hpp"
#include "trumpkit/catalysis.hpp"
#include "trumpkit/mlocc.hpp"
#include "trumpkit/renyi.hpp"
#include "trumpkit/spectrum.hpp"

using namespace trumpkit;
using testsupport::fixture;
using testsupport::q;
using testsupport::rat;

namespace {

constexpr double kRenyiTol = 1e-9;
constexpr double kTimeLimitSeconds = 10.0;

int failures = 0;

void criterion(int id, const char* title, const std::function<std::string(bool&)>& body) {
    bool ok = false;
    std::string detail;
    try {
        detail = body(ok);
    } catch (const std::exception& e) {
        ok = false;
        detail = std::string("exception: ") + e.what();
    }
    if (!ok) ++failures;
    std::printf("[%s] %2d %s: %s\n", ok ? "PASS" : "FAIL", id, title, detail.c_str());
    std::fflush(stdout);
}

std::string ratio(int good, int total) { return std::to_string(good) + "/" + std::to_string(total); }

Verdict flat_verdict(const ProbVec<Rational>& x, const ProbVec<Rational>& y, unsigned k) {
    bool strict = false;
    if (!testsupport::flat_majorizes(testsupport::flat_power(x, k), testsupport::flat_power(y, k), &strict)) {
        return Verdict::fails;
    }
    return strict ? Verdict::strict_interior : Verdict::boundary;
}

ProbVec<Rational> boundary_at(const ProbVec<Rational>& y, std::size_t d, const Rational& t) {
    std::vector<Rational> v;
    auto pull = [&](std::size_t lo, std::size_t hi) {
        Rational mean = 0;
        for (std::size_t i = lo; i < hi; ++i) mean += y[i];
        mean /= Rational(static_cast<unsigned long>(hi - lo));
        for (std::size_t i = lo; i < hi; ++i) v.push_back(t * y[i] + (1 - t) * mean);
    };
    pull(0, d);
    pull(d, y.dim());
    return make_probvec(std::move(v));
}

std::vector<Alpha> every_order() {
    std::vector<Alpha> out{Alpha::plus_infinity(), Alpha::minus_infinity(), Alpha::finite(0), Alpha::finite(1)};
    for (double a : default_alpha_grid()) out.push_back(Alpha::finite(a));
    return out;
}

}  // namespace

int main() {
    const auto x = fixture("x_pair");
    const auto y = fixture("y_pair");

    criterion(1, "single copy fails at l=2", [&](bool& ok) {
        auto r = majorizes(x, y);
        ok = r.verdict == Verdict::fails && r.first_violation && r.first_violation->l == 2 &&
             r.first_violation->ex == rat("0.8") && r.first_violation->ey == rat("0.75");
        return "verdict=" + std::string(to_string(r.verdict)) +
               (r.first_violation ? " l=" + r.first_violation->l.get_str() + " " + r.first_violation->ex.get_str() +
                                        " vs " + r.first_violation->ey.get_str()
                                  : "");
    });

    criterion(2, "multi-copy: k=1,2 out, k=3 in", [&](bool& ok) {
        const bool k1 = in_Mk(x, y, 1), k2 = in_Mk(x, y, 2), k3 = in_Mk(x, y, 3);
        ok = !k1 && !k2 && k3;
        return "k1=" + std::to_string(k1) + " k2=" + std::to_string(k2) + " k3=" + std::to_string(k3);
    });

    criterion(3, "catalyst (0.6,0.4)", [&](bool& ok) {
        auto z = fixture("z_catalyst");
        auto r = majorizes(tensor(x, z), tensor(y, z));
        ok = r.holds();
        return std::string("verdict=") + to_string(r.verdict);
    });

    criterion(4, "copies of (0.55,0.45): m=1 out, m=8 in", [&](bool& ok) {
        auto scan = multicopy_catalyst_scan(x, y, fixture("z_multicopy"), 8);
        ok = !scan.at(1) && scan.at(8);
        std::string s = "m=1..8:";
        for (const auto& [m, v] : scan) s += v ? " T" : " F";
        return s;
    });

    criterion(5, "constructed catalyst, k=3", [&](bool& ok) {
        auto cert = build_catalyst_thm1(x, y, 3);
        auto check = majorizes(tensor(x, cert.catalyst), tensor(y, cert.catalyst));
        ok = cert.catalyst.dim() == 48 && cert.verified && cert.dim_bound_ok && check.holds();
        return "dim=" + std::to_string(cert.catalyst.dim()) + " verified=" + std::to_string(cert.verified) +
               " direct=" + std::to_string(check.holds());
    });

    criterion(6, "usefulness classification", [&](bool& ok) {
        auto three = classify_usefulness(fixture("y_three"));
        auto four = classify_usefulness(y);
        const auto expected = q({"0.375", "0.375", "0.125", "0.125"});
        const bool witness = four.witness_x && *four.witness_x == expected;
        bool boundary = false, endpoints = false;
        if (witness) {
            auto r = majorizes(expected, y);
            boundary = r.verdict == Verdict::boundary && r.equality_indices == std::vector<BigCount>{2};
            endpoints = is_generalized_interior(expected, y);
        }
        ok = !three.useful && four.useful && four.witness_l == 2u && witness && boundary && endpoints;
        return "y_three useful=" + std::to_string(three.useful) + ", y_pair useful=" + std::to_string(four.useful) +
               " witness=" + std::to_string(witness) + " eq@2=" + std::to_string(boundary) +
               " endpoints=" + std::to_string(endpoints);
    });

    criterion(7, "non-closedness witness", [&](bool& ok) {
        auto w = nonclosedness_witness(y);
        const bool up = majorizes(y, w).holds();
        const bool down = majorizes(w, y).holds();
        bool any = false;
        for (unsigned k = 1; k <= 6; ++k) any = any || in_Mk(w, y, k);
        ok = up && !down && !any;
        return "y<x " + std::to_string(up) + ", x<y " + std::to_string(down) + ", in M_k for some k<=6 " +
               std::to_string(any);
    });

    criterion(8, "compressed vs brute force, 200 pairs", [&](bool& ok) {
        testsupport::Gen gen(8008);
        int agree = 0;
        for (int trial = 0; trial < 200; ++trial) {
            const std::size_t n = gen.between(1, 4);
            const unsigned k = static_cast<unsigned>(gen.between(1, 4));
            auto b = gen.vec(n);
            auto a = trial % 2 ? gen.below_in_order(b) : gen.vec(n);
            auto r = spectrum_majorizes(tensor_power_spectrum(a, k), tensor_power_spectrum(b, k));
            agree += r.verdict == flat_verdict(a, b, k);
        }
        ok = agree == 200;
        return ratio(agree, 200);
    });

    criterion(9, "boundary interior condition, 50 instances", [&](bool& ok) {
        testsupport::Gen gen(9009);
        int agree = 0, total = 0, positive = 0;
        while (total < 50) {
            auto b = gen.vec(4);
            const std::size_t d = 2;
            if (!(b[0] > b[d - 1] && b[d] > b[3])) continue;
            auto a = boundary_at(b, d, gen.unit());
            if (majorizes(a, b).equality_indices != std::vector<BigCount>{d}) continue;
            const unsigned k = static_cast<unsigned>(gen.between(1, 4));
            const bool cond = lemma3_k_condition(b, d, k);
            const bool interior = mk_report(a, b, k).verdict == Verdict::strict_interior;
            agree += cond == interior;
            positive += cond;
            ++total;
        }
        ok = agree == 50;
        return ratio(agree, total) + " (condition true in " + std::to_string(positive) + ")";
    });

    criterion(10, "Renyi coherence", [&](bool& ok) {
        testsupport::Gen gen(1010);
        int mono = 0, additive = 0;
        double worst = 0.0;
        for (int trial = 0; trial < 100; ++trial) {
            auto b = gen.vec(gen.between(2, 5), false);
            auto a = gen.below_in_order(b, 4);
            auto c = gen.vec(gen.between(1, 3));
            bool m = true, add = true;
            for (const Alpha& alpha : every_order()) {
                const double diff = renyi_entropy(a, alpha) - renyi_entropy(b, alpha);
                worst = std::min(worst, diff);
                m = m && diff >= -kRenyiTol;
                const double split = renyi_entropy(tensor(a, c), alpha) - renyi_entropy(a, alpha) - renyi_entropy(c, alpha);
                add = add && std::fabs(split) <= kRenyiTol;
            }
            mono += m;
            additive += add;
        }
        auto rev = r_filter(y, x, default_alpha_grid());
        const bool reversed = rev.status == RFilterStatus::violated && rev.violating_alpha &&
                              rev.violating_alpha->kind == Alpha::Kind::pos_inf;
        ok = mono == 100 && additive == 100 && reversed;
        char buf[64];
        std::snprintf(buf, sizeof buf, "%.3g", worst);
        return "monotone " + ratio(mono, 100) + " (min diff " + buf + "), additive " + ratio(additive, 100) +
               ", reversed pair rejected at " + (rev.violating_alpha ? rev.violating_alpha->to_string() : "none");
    });

    criterion(11, "combine and lift, 25 instances", [&](bool& ok) {
        testsupport::Gen gen(1111);
        int good = 0, total = 0, nontrivial = 0;
        while (total < 25) {
            auto p = testsupport::multicopy_pair(gen, 4, 3);
            auto cp = gen.vec(gen.between(1, 2), false);
            auto sx = tensor(tensor_power_spectrum(p.x, p.k), Spectrum<Rational>::from_probvec(cp));
            auto sy = tensor(tensor_power_spectrum(p.y, p.k), Spectrum<Rational>::from_probvec(cp));
            if (!spectrum_majorizes(sx, sy).holds()) continue;
            ++total;
            nontrivial += !majorizes(p.x, p.y).holds();
            auto combined = combine_catalysts(p.x, p.y, p.k, cp);
            const unsigned copies = static_cast<unsigned>(total % 3 + 1);
            auto c = build_catalyst_thm1(p.x, p.y, p.k).catalyst;
            auto lifted = lift_catalyst(p.x, p.y, c, copies);
            good += combined.verified && lifted.verified;
        }
        ok = good == 25;
        return ratio(good, total) + " (" + std::to_string(nontrivial) + " with x not majorized by y)";
    });

    criterion(12, "k=30 at n=4 under 10 s", [&](bool& ok) {
        const auto distinct_x = q({"0.35", "0.3", "0.2", "0.15"});
        const auto distinct_y = q({"0.4", "0.3", "0.2", "0.1"});
        const auto start = std::chrono::steady_clock::now();
        const bool pair = in_Mk(x, y, 30);
        const bool distinct = in_Mk(distinct_x, distinct_y, 30);
        auto sx = tensor_power_spectrum(distinct_x, 30);
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        const bool bound = BigCount(static_cast<unsigned long>(sx.block_count())) <= binomial(33, 3);
        BigCount flat;
        mpz_ui_pow_ui(flat.get_mpz_t(), 4, 30);
        ok = pair && distinct && bound && secs < kTimeLimitSeconds && sx.total_count() == flat;
        char buf[160];
        std::snprintf(buf, sizeof buf, "%.3fs, blocks=%zu (<= %s), expanded length %s, pair=%d distinct=%d", secs,
                      sx.block_count(), binomial(33, 3).get_str().c_str(), flat.get_str().c_str(), pair, distinct);
        return std::string(buf);
    });

    std::printf("%s: %d failing criteria\n", failures ? "FAILED" : "ALL PASSED", failures);
    return failures ? 1 : 0;
}
