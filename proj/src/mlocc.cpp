#include "trumpkit/mlocc.hpp"

#include <algorithm>
#include <functional>
#include <string>

#include "trumpkit/spectrum.hpp"

namespace trumpkit {

const char* to_string(MembershipStatus s) {
    switch (s) {
        case MembershipStatus::interior: return "interior";
        case MembershipStatus::boundary: return "boundary";
        case MembershipStatus::not_member: return "not_member";
        case MembershipStatus::unknown: return "unknown";
    }
    return "?";
}

namespace {

template <class S>
int cmp(const S& a, const S& b, double eps) {
    return ScalarOps<S>::compare(a, b, eps);
}

// Sorted entries of a (x) b for unnormalized nonnegative vectors.
template <class S>
std::vector<S> raw_tensor(const std::vector<S>& a, const std::vector<S>& b) {
    std::vector<S> out;
    out.reserve(a.size() * b.size());
    for (const S& u : a) {
        for (const S& v : b) out.push_back(u * v);
    }
    std::sort(out.begin(), out.end(), std::greater<S>());
    return out;
}

template <class S>
std::vector<S> raw_power(const std::vector<S>& a, unsigned e) {
    std::vector<S> acc{ScalarOps<S>::one()};
    for (unsigned i = 0; i < e; ++i) acc = raw_tensor(acc, a);
    return acc;
}

}  // namespace

template <class S>
bool passes_endpoint_filter(const ProbVec<S>& x, const ProbVec<S>& y) {
    require_same_dim(x, y);
    const double eps = joint_eps(x, y);
    return cmp(x.front(), y.front(), eps) <= 0 && cmp(x.back(), y.back(), eps) >= 0;
}

template <class S>
MajReport<S> mk_report(const ProbVec<S>& x, const ProbVec<S>& y, unsigned k) {
    require_same_dim(x, y);
    if (k == 0) throw InvalidInput("number of copies must be at least 1");
    return spectrum_majorizes(tensor_power_spectrum(x, k), tensor_power_spectrum(y, k));
}

template <class S>
bool in_Mk(const ProbVec<S>& x, const ProbVec<S>& y, unsigned k) {
    if (k == 0) throw InvalidInput("number of copies must be at least 1");
    if (!passes_endpoint_filter(x, y)) return false;
    return mk_report(x, y, k).holds();
}

template <class S>
MloccScan<S> scan_Mk(const ProbVec<S>& x, const ProbVec<S>& y, unsigned k_max) {
    require_same_dim(x, y);
    if (k_max == 0) throw InvalidInput("k_max must be at least 1");
    MloccScan<S> scan{x, y, k_max, {}, std::nullopt, false};
    if (!passes_endpoint_filter(x, y)) {
        scan.excluded_by_endpoints = true;
        for (unsigned k = 1; k <= k_max; ++k) scan.results[k] = Verdict::fails;
        return scan;
    }
    for (unsigned k = 1; k <= k_max; ++k) {
        const Verdict v = mk_report(x, y, k).verdict;
        scan.results[k] = v;
        if (v != Verdict::fails && !scan.first_success) scan.first_success = k;
    }
    return scan;
}

template <class S>
bool lemma3_k_condition(const ProbVec<S>& y, std::size_t d, unsigned k) {
    const std::size_t n = y.dim();
    if (!(d > 1 && d + 1 < n)) {
        throw InvalidInput("split index d=" + std::to_string(d) + " must satisfy 1 < d < n-1 (n=" + std::to_string(n) + ")");
    }
    if (k == 0) throw InvalidInput("number of copies must be at least 1");
    using Ops = ScalarOps<S>;
    const double eps = y.eps();
    const S& y1 = y[0];
    const S& yd = y[d - 1];
    const S& yd1 = y[d];
    const S& yn = y[n - 1];
    const S lhs1 = Ops::pow(yd, k);
    const S rhs1 = Ops::pow(y1, k - 1) * yd1;
    const S lhs2 = Ops::pow(yd1, k);
    const S rhs2 = yd * Ops::pow(yn, k - 1);
    return cmp(lhs1, rhs1, eps) < 0 && cmp(lhs2, rhs2, eps) > 0;
}

template <class S>
std::vector<ChainLink<S>> binomial_chain(const ProbVec<S>& y, std::size_t d, unsigned k) {
    if (d == 0 || d >= y.dim()) throw InvalidInput("split index out of range");
    const std::vector<S> head(y.entries().begin(), y.entries().begin() + static_cast<std::ptrdiff_t>(d));
    const std::vector<S> tail(y.entries().begin() + static_cast<std::ptrdiff_t>(d), y.entries().end());
    std::vector<ChainLink<S>> chain;
    for (unsigned i = 0; i <= k; ++i) {
        chain.push_back({raw_tensor(raw_power(head, k - i), raw_power(tail, i)), binomial(k, i)});
    }
    return chain;
}

template <class S>
std::optional<unsigned> corollary4_k_bound(const ProbVec<S>& y, unsigned k_max) {
    if (y.is_uniform()) throw PreconditionFailed("copy-count bound is undefined for a uniform target");
    if (!classify_usefulness(y).useful) {
        throw PreconditionFailed("copy-count bound needs a target for which multiple copies help");
    }
    using Ops = ScalarOps<S>;
    const double eps = y.eps();
    const std::size_t n = y.dim();
    std::size_t d_min = 0;  // 0-based
    while (d_min < n && cmp(y[0], y[d_min], eps) == 0) ++d_min;
    std::size_t d_max = n - 1;  // 0-based index of max{i : y_i > y_n}
    while (d_max > 0 && cmp(y[d_max], y[n - 1], eps) == 0) --d_max;
    const S& a = y[d_min];
    const S& b = y[d_max + 1];
    for (unsigned k = 1; k <= k_max; ++k) {
        const bool first = cmp(S(Ops::pow(a, k)), S(Ops::pow(y[0], k - 1) * b), eps) < 0;
        const bool second = cmp(S(Ops::pow(b, k)), S(a * Ops::pow(y[n - 1], k - 1)), eps) > 0;
        if (first && second) return k;
    }
    return std::nullopt;
}

template <class S>
MembershipStatus is_interior_of_M(const ProbVec<S>& x, const ProbVec<S>& y, unsigned k_max) {
    require_same_dim(x, y);
    if (!passes_endpoint_filter(x, y)) return MembershipStatus::not_member;
    for (unsigned k = 1; k <= k_max; ++k) {
        if (!in_Mk(x, y, k)) continue;
        const double eps = joint_eps(x, y);
        const bool inner = cmp(x.front(), y.front(), eps) < 0 && cmp(x.back(), y.back(), eps) > 0;
        return inner ? MembershipStatus::interior : MembershipStatus::boundary;
    }
    return MembershipStatus::unknown;
}

template <class S>
UsefulnessVerdict<S> classify_usefulness(const ProbVec<S>& y) {
    using Ops = ScalarOps<S>;
    const std::size_t n = y.dim();
    const double eps = y.eps();
    UsefulnessVerdict<S> verdict;
    for (std::size_t l = 2; l + 1 < n; ++l) {
        if (cmp(y[0], y[l - 1], eps) > 0 && cmp(y[l], y[n - 1], eps) > 0) {
            const S head_mass = y.prefix_mass(l);
            const S head = head_mass / Ops::from_int(static_cast<long>(l));
            const S rest = (y.total_mass() - head_mass) / Ops::from_int(static_cast<long>(n - l));
            std::vector<S> w(n, rest);
            std::fill(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(l), head);
            verdict.useful = true;
            verdict.witness_l = l;
            verdict.witness_x = ProbVec<S>::make(std::move(w), false, y.backend());
            return verdict;
        }
    }
    return verdict;
}

template <class S>
ProbVec<S> nonclosedness_witness(const ProbVec<S>& y) {
    if (!classify_usefulness(y).useful) {
        throw PreconditionFailed("non-closedness witness needs a target for which multiple copies help");
    }
    const std::size_t n = y.dim();
    const double eps = y.eps();
    std::size_t l = 0;
    while (cmp(y[l], y[0], eps) == 0) ++l;
    std::size_t m = n - 1;
    while (cmp(y[m], y[n - 1], eps) == 0) --m;
    const S gap_top = y[0] - y[l];
    const S gap_bottom = y[m] - y[n - 1];
    const S delta = gap_top < gap_bottom ? gap_top : gap_bottom;
    std::vector<S> x(y.entries().begin(), y.entries().end());
    x[l] += delta;
    x[m] -= delta;
    return ProbVec<S>::make(std::move(x), false, y.backend());
}

#define TRUMPKIT_INSTANTIATE(S)                                                                   \
    template bool passes_endpoint_filter<S>(const ProbVec<S>&, const ProbVec<S>&);                \
    template MajReport<S> mk_report<S>(const ProbVec<S>&, const ProbVec<S>&, unsigned);           \
    template bool in_Mk<S>(const ProbVec<S>&, const ProbVec<S>&, unsigned);                       \
    template MloccScan<S> scan_Mk<S>(const ProbVec<S>&, const ProbVec<S>&, unsigned);             \
    template bool lemma3_k_condition<S>(const ProbVec<S>&, std::size_t, unsigned);                \
    template std::vector<ChainLink<S>> binomial_chain<S>(const ProbVec<S>&, std::size_t, unsigned); \
    template std::optional<unsigned> corollary4_k_bound<S>(const ProbVec<S>&, unsigned);          \
    template MembershipStatus is_interior_of_M<S>(const ProbVec<S>&, const ProbVec<S>&, unsigned); \
    template UsefulnessVerdict<S> classify_usefulness<S>(const ProbVec<S>&);                      \
    template ProbVec<S> nonclosedness_witness<S>(const ProbVec<S>&);

TRUMPKIT_INSTANTIATE(Rational)
TRUMPKIT_INSTANTIATE(double)

#undef TRUMPKIT_INSTANTIATE

}  // namespace trumpkit
