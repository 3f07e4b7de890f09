#include "doctest.h"
#include "support.hpp"
#include "trumpkit/mlocc.hpp"
#include "trumpkit/spectrum.hpp"

using namespace trumpkit;
using testsupport::q;
using testsupport::rat;

namespace {

// Boundary point of S(y) whose only prefix equality sits at d: each block of
// y is pulled toward its own mean.
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

}  // namespace

TEST_CASE("in_Mk on the reference pair") {
    auto x = testsupport::fixture("x_pair");
    auto y = testsupport::fixture("y_pair");
    CHECK_FALSE(in_Mk(x, y, 1));
    CHECK_FALSE(in_Mk(x, y, 2));
    CHECK(in_Mk(x, y, 3));
    for (unsigned k = 1; k <= 5; ++k) CHECK(in_Mk(y, y, k));
    CHECK_THROWS_AS(in_Mk(x, testsupport::fixture("y_three"), 2), InvalidInput);
}

TEST_CASE("scan_Mk") {
    auto x = testsupport::fixture("x_pair");
    auto y = testsupport::fixture("y_pair");
    auto scan = scan_Mk(x, y, 4);
    CHECK(scan.first_success == 3u);
    CHECK(scan.results.size() == 4);
    CHECK(scan.results.at(1) == Verdict::fails);
    CHECK(scan.results.at(2) == Verdict::fails);
    CHECK(scan.results.at(3) != Verdict::fails);
    CHECK(scan.results.at(4) == mk_report(x, y, 4).verdict);
    CHECK_FALSE(scan.excluded_by_endpoints);

    CHECK(scan_Mk(y, y, 3).first_success == 1u);

    auto above = q({"0.6", "0.2", "0.1", "0.1"});
    auto ex = scan_Mk(above, y, 5);
    CHECK_FALSE(ex.first_success);
    CHECK(ex.excluded_by_endpoints);
    for (const auto& [k, v] : ex.results) CHECK(v == Verdict::fails);
}

TEST_CASE("lemma3_k_condition examples") {
    auto y = testsupport::fixture("y_pair");
    CHECK_FALSE(lemma3_k_condition(y, 2, 1));
    for (unsigned k = 2; k <= 6; ++k) CHECK(lemma3_k_condition(y, 2, k));
    auto u = uniform<Rational>(5);
    for (unsigned k = 1; k <= 4; ++k) CHECK_FALSE(lemma3_k_condition(u, 2, k));
    CHECK_FALSE(lemma3_k_condition(q({"0.4", "0.3", "0.2", "0.1"}), 2, 1));
    CHECK_THROWS_AS(lemma3_k_condition(y, 1, 2), InvalidInput);
    CHECK_THROWS_AS(lemma3_k_condition(y, 3, 2), InvalidInput);

    // confirmed by the boundary point at k = 2
    auto x = boundary_at(y, 2, rat("1/2"));
    CHECK(majorizes(x, y).equality_indices == std::vector<BigCount>{2});
    CHECK_FALSE(is_interior(x, y));
    CHECK(mk_report(x, y, 2).verdict == Verdict::strict_interior);
}

TEST_CASE("two-sided condition matches the interior verdict of tensor powers") {
    testsupport::Gen gen(33);
    int checked = 0, positive = 0;
    while (checked < 120) {
        const std::size_t n = gen.between(4, 5);
        auto y = gen.vec(n);
        const std::size_t d = gen.between(2, n - 2);
        if (!(y[0] > y[d - 1] && y[d] > y[n - 1])) continue;
        auto x = boundary_at(y, d, gen.unit());
        REQUIRE(majorizes(x, y).equality_indices == std::vector<BigCount>{d});
        const unsigned k = static_cast<unsigned>(gen.between(1, 4));
        const bool cond = lemma3_k_condition(y, d, k);
        CHECK(cond == (mk_report(x, y, k).verdict == Verdict::strict_interior));
        ++checked;
        positive += cond;
    }
    CHECK(positive > 0);
    CHECK(positive < checked);
}

TEST_CASE("corollary4_k_bound is never attained") {
    CHECK_FALSE(corollary4_k_bound(testsupport::fixture("y_pair"), 40));
    CHECK_FALSE(corollary4_k_bound(q({"0.4", "0.3", "0.2", "0.1"}), 40));
    CHECK_FALSE(corollary4_k_bound(q({"0.30", "0.28", "0.22", "0.20"}), 40));
    CHECK_THROWS_AS(corollary4_k_bound(uniform<Rational>(4), 8), PreconditionFailed);
    CHECK_THROWS_AS(corollary4_k_bound(testsupport::fixture("y_three"), 8), PreconditionFailed);
}

TEST_CASE("is_interior_of_M") {
    auto x = testsupport::fixture("x_pair");
    auto y = testsupport::fixture("y_pair");
    CHECK(is_interior_of_M(x, y, 8) == MembershipStatus::interior);
    CHECK(is_interior_of_M(x, y, 2) == MembershipStatus::unknown);
    CHECK(is_interior_of_M(y, y, 8) == MembershipStatus::boundary);
    CHECK(is_interior_of_M(q({"0.6", "0.2", "0.1", "0.1"}), y, 8) == MembershipStatus::not_member);
}

TEST_CASE("classify_usefulness") {
    auto three = classify_usefulness(testsupport::fixture("y_three"));
    CHECK_FALSE(three.useful);
    CHECK_FALSE(three.witness_x);

    auto v = classify_usefulness(testsupport::fixture("y_pair"));
    CHECK(v.useful);
    CHECK(v.witness_l == 2u);
    REQUIRE(v.witness_x);
    CHECK(*v.witness_x == q({"0.375", "0.375", "0.125", "0.125"}));

    CHECK_FALSE(classify_usefulness(uniform<Rational>(6)).useful);
}

TEST_CASE("usefulness witness sits on the boundary yet inside M") {
    testsupport::Gen gen(34);
    int seen = 0;
    for (int trial = 0; trial < 200 && seen < 40; ++trial) {
        auto y = gen.vec(gen.between(4, 5));
        auto v = classify_usefulness(y);
        if (!v.useful) continue;
        ++seen;
        const std::size_t l = *v.witness_l;
        auto r = majorizes(*v.witness_x, y);
        CHECK(r.holds());
        CHECK(r.equality_indices == std::vector<BigCount>{l});
        unsigned k = 1;
        while (!lemma3_k_condition(y, l, k)) ++k;
        CHECK(is_interior_of_M(*v.witness_x, y, k) == MembershipStatus::interior);
    }
    CHECK(seen > 10);
}

TEST_CASE("nonclosedness witness") {
    CHECK(nonclosedness_witness(testsupport::fixture("y_pair")) == q({"0.5", "0.5", "0", "0"}));
    CHECK(nonclosedness_witness(q({"0.4", "0.3", "0.2", "0.1"})) == q({"0.4", "0.4", "0.1", "0.1"}));
    CHECK_THROWS_AS(nonclosedness_witness(testsupport::fixture("y_three")), PreconditionFailed);

    testsupport::Gen gen(35);
    int seen = 0;
    for (int trial = 0; trial < 200 && seen < 30; ++trial) {
        auto y = gen.vec(gen.between(4, 5));
        if (!classify_usefulness(y).useful) continue;
        ++seen;
        auto x = nonclosedness_witness(y);
        CHECK(majorizes(y, x).holds());
        CHECK_FALSE(majorizes(x, y).holds());
        for (unsigned k = 1; k <= 6; ++k) CHECK_FALSE(in_Mk(x, y, k));
    }
}

TEST_CASE("membership respects the endpoints and is antisymmetric") {
    testsupport::Gen gen(36);
    for (int trial = 0; trial < 80; ++trial) {
        const std::size_t n = gen.between(2, 4);
        auto y = gen.vec(n);
        auto x = trial % 3 ? gen.vec(n) : gen.below_in_order(y);
        std::optional<unsigned> fwd, back;
        for (unsigned k = 1; k <= 4; ++k) {
            if (in_Mk(x, y, k)) {
                fwd = k;
                CHECK(x.front() <= y.front());
                CHECK(x.back() >= y.back());
            }
            if (in_Mk(y, x, k)) back = k;
        }
        if (fwd && back) CHECK(x == y);
    }
}

TEST_CASE("without usefulness, the endpoint filter already decides") {
    testsupport::Gen gen(37);
    int seen = 0;
    for (int trial = 0; trial < 400; ++trial) {
        const std::size_t n = gen.between(2, 4);
        auto y = gen.vec(n, true, 4);
        if (classify_usefulness(y).useful) continue;
        auto x = gen.vec(n);
        if (!passes_endpoint_filter(x, y)) continue;
        ++seen;
        CHECK(majorizes(x, y).holds());
    }
    CHECK(seen > 20);
}
