#include "trumpkit/renyi.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>

namespace trumpkit {

bool Alpha::is_integer() const {
    return kind == Kind::finite && std::isfinite(value) && std::floor(value) == value && std::fabs(value) <= 4096.0;
}

std::string Alpha::to_string() const {
    switch (kind) {
        case Kind::pos_inf: return "+inf";
        case Kind::neg_inf: return "-inf";
        case Kind::finite: break;
    }
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", value);
    return buf;
}

std::vector<double> default_alpha_grid() {
    return {-64, -32, -16, -8, -4, -2, -0.5, 0, 0.5, 2, 4, 8, 16, 32, 64};
}

const char* to_string(RFilterStatus s) {
    return s == RFilterStatus::violated ? "violated" : "no_violation_found";
}

const char* to_string(RFilterMode m) {
    return m == RFilterMode::dims_differ ? "dims_differ" : "dims_equal";
}

namespace {

template <class S>
std::vector<S> nonzero_entries(const ProbVec<S>& x) {
    const std::size_t d = x.nonzero_count();
    return {x.entries().begin(), x.entries().begin() + static_cast<std::ptrdiff_t>(d)};
}

template <class S>
double shannon(const ProbVec<S>& x) {
    double h = 0.0;
    for (const S& v : nonzero_entries(x)) h -= ScalarOps<S>::to_double(v) * ScalarOps<S>::log2(v);
    return h;
}

// log2(sum x_i^a) in doubles, shifted by the largest term so |a| in the
// thousands neither overflows nor underflows.
template <class S>
double log2_power_sum_float(const ProbVec<S>& x, double a) {
    std::vector<double> logs;
    for (const S& v : nonzero_entries(x)) logs.push_back(a * ScalarOps<S>::log2(v));
    const double top = *std::max_element(logs.begin(), logs.end());
    double acc = 0.0;
    for (double t : logs) acc += std::exp2(t - top);
    return top + std::log2(acc);
}

double sign_factor(double a) { return (a >= 0.0 ? 1.0 : -1.0) / (1.0 - a); }

}  // namespace

template <class S>
S power_sum(const ProbVec<S>& x, long e) {
    using Ops = ScalarOps<S>;
    S acc = Ops::zero();
    for (const S& v : nonzero_entries(x)) {
        S p = Ops::pow(v, static_cast<unsigned long>(e < 0 ? -e : e));
        if (e < 0) p = Ops::one() / p;
        acc += p;
    }
    return acc;
}

template <class S>
double renyi_entropy(const ProbVec<S>& x, Alpha alpha) {
    using Ops = ScalarOps<S>;
    switch (alpha.kind) {
        case Alpha::Kind::pos_inf: return -Ops::log2(x.front());
        case Alpha::Kind::neg_inf: return Ops::log2(x[x.nonzero_count() - 1]);
        case Alpha::Kind::finite: break;
    }
    const double a = alpha.value;
    if (a == 0.0) return std::log2(static_cast<double>(x.nonzero_count()));
    if (a == 1.0) return shannon(x);
    if (Ops::exact && alpha.is_integer()) {
        return sign_factor(a) * Ops::log2(power_sum(x, static_cast<long>(a)));
    }
    return sign_factor(a) * log2_power_sum_float(x, a);
}

template <class S>
RenyiProfile<S>::RenyiProfile(ProbVec<S> source)
    : source_(std::move(source)),
      d_x_(source_.nonzero_count()),
      s0_(renyi_entropy(source_, Alpha::finite(0.0))),
      s1_(renyi_entropy(source_, Alpha::finite(1.0))),
      s_pos_inf_(renyi_entropy(source_, Alpha::plus_infinity())),
      s_neg_inf_(renyi_entropy(source_, Alpha::minus_infinity())) {}

template <class S>
double RenyiProfile<S>::operator()(Alpha alpha) const {
    switch (alpha.kind) {
        case Alpha::Kind::pos_inf: return s_pos_inf_;
        case Alpha::Kind::neg_inf: return s_neg_inf_;
        case Alpha::Kind::finite: break;
    }
    if (alpha.value == 0.0) return s0_;
    if (alpha.value == 1.0) return s1_;
    return renyi_entropy(source_, alpha);
}

template <class S>
RFilterVerdict r_filter(const ProbVec<S>& x, const ProbVec<S>& y, const std::vector<double>& grid, double tol) {
    using Ops = ScalarOps<S>;
    require_same_dim(x, y);
    if (grid.empty()) throw InvalidInput("alpha grid must be nonempty");
    const double eps = joint_eps(x, y);
    const std::size_t dx = x.nonzero_count();
    const std::size_t dy = y.nonzero_count();

    RFilterVerdict verdict;
    verdict.mode = dx == dy ? RFilterMode::dims_equal : RFilterMode::dims_differ;
    const bool all_orders = verdict.mode == RFilterMode::dims_equal;

    std::vector<Alpha> order{Alpha::plus_infinity()};
    if (all_orders) order.push_back(Alpha::minus_infinity());
    order.push_back(Alpha::finite(0.0));
    order.push_back(Alpha::finite(1.0));
    for (double a : grid) {
        const Alpha alpha = Alpha::finite(a);
        if (!all_orders && a < 0.0) continue;
        if (std::find(order.begin(), order.end(), alpha) == order.end()) order.push_back(alpha);
    }

    const RenyiProfile<S> px(x);
    const RenyiProfile<S> py(y);
    for (const Alpha& alpha : order) {
        const double diff = px(alpha) - py(alpha);
        bool violated = false;
        if (alpha.kind == Alpha::Kind::pos_inf) {
            violated = Ops::compare(x.front(), y.front(), eps) > 0;
        } else if (alpha.kind == Alpha::Kind::neg_inf) {
            violated = Ops::compare(x[dx - 1], y[dy - 1], eps) < 0;
        } else if (alpha.value == 0.0) {
            violated = dx < dy;
        } else if (Ops::exact && alpha.is_integer() && alpha.value != 1.0) {
            // sgn(a)/(1-a) < 0 for every integer a outside {0, 1}
            violated = power_sum(x, static_cast<long>(alpha.value)) > power_sum(y, static_cast<long>(alpha.value));
        } else {
            if (Ops::exact) verdict.inexact_orders = true;
            violated = diff < -tol;
        }
        verdict.grid_used.push_back(alpha);
        verdict.differences.push_back(diff);
        if (violated) {
            verdict.status = RFilterStatus::violated;
            verdict.violating_alpha = alpha;
            return verdict;
        }
    }
    return verdict;
}

template <class S>
RPropertiesReport r_properties_check(const ProbVec<S>& x, const ProbVec<S>& y, const std::vector<double>& grid) {
    using Ops = ScalarOps<S>;
    require_same_dim(x, y);
    const double eps = joint_eps(x, y);
    RPropertiesReport report;
    report.x1_le_y1 = Ops::compare(x.front(), y.front(), eps) <= 0;
    report.xn_ge_yn = Ops::compare(x.back(), y.back(), eps) >= 0;
    report.forward_pass = r_filter(x, y, grid).status == RFilterStatus::no_violation_found;
    report.backward_pass = r_filter(y, x, grid).status == RFilterStatus::no_violation_found;
    report.equal = true;
    for (std::size_t i = 0; i < x.dim(); ++i) report.equal = report.equal && Ops::compare(x[i], y[i], eps) == 0;
    report.power_sums_equal = true;
    for (long e = 1; e <= static_cast<long>(x.dim()); ++e) {
        report.power_sums_equal =
            report.power_sums_equal && Ops::compare(power_sum(x, e), power_sum(y, e), eps * static_cast<double>(x.dim())) == 0;
    }
    report.needs_investigation = report.forward_pass && report.backward_pass && !report.equal;
    return report;
}

#define TRUMPKIT_INSTANTIATE(S)                                                                                   \
    template class RenyiProfile<S>;                                                                               \
    template S power_sum<S>(const ProbVec<S>&, long);                                                             \
    template double renyi_entropy<S>(const ProbVec<S>&, Alpha);                                                   \
    template RFilterVerdict r_filter<S>(const ProbVec<S>&, const ProbVec<S>&, const std::vector<double>&, double); \
    template RPropertiesReport r_properties_check<S>(const ProbVec<S>&, const ProbVec<S>&, const std::vector<double>&);

TRUMPKIT_INSTANTIATE(Rational)
TRUMPKIT_INSTANTIATE(double)

#undef TRUMPKIT_INSTANTIATE

}  // namespace trumpkit
