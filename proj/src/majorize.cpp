#include "trumpkit/majorize.hpp"

#include <algorithm>
#include <functional>

namespace trumpkit {

const char* to_string(Verdict v) {
    switch (v) {
        case Verdict::strict_interior: return "strict_interior";
        case Verdict::boundary: return "boundary";
        case Verdict::fails: return "fails";
    }
    return "?";
}

template <class S>
MajReport<S> majorizes(const ProbVec<S>& x, const ProbVec<S>& y) {
    require_same_dim(x, y);
    const double eps = joint_eps(x, y);
    MajReport<S> report;
    S ex = ScalarOps<S>::zero();
    S ey = ScalarOps<S>::zero();
    for (std::size_t l = 1; l < x.dim(); ++l) {
        ex += x[l - 1];
        ey += y[l - 1];
        const BigCount pos(static_cast<unsigned long>(l));
        report.checked_positions.push_back(pos);
        const int c = ScalarOps<S>::compare(ex, ey, eps);
        if (c > 0 && !report.first_violation) {
            report.first_violation = PrefixViolation<S>{pos, ex, ey};
        } else if (c == 0) {
            report.equality_indices.push_back(pos);
        }
    }
    if (report.first_violation) {
        report.verdict = Verdict::fails;
    } else if (!report.equality_indices.empty()) {
        report.verdict = Verdict::boundary;
    }
    return report;
}

template <class S>
MajReport<S> spectrum_majorizes(const Spectrum<S>& sx, const Spectrum<S>& sy) {
    using Ops = ScalarOps<S>;
    if (sx.total_count() != sy.total_count()) {
        throw InvalidInput("spectra have different lengths: " + sx.total_count().get_str() + " vs " +
                           sy.total_count().get_str());
    }
    const double eps = std::max(sx.eps(), sy.eps());
    const double mass_eps = eps * 16.0;
    if (Ops::compare(sx.total_mass(), sy.total_mass(), mass_eps) != 0) {
        throw InvalidInput("spectra have different total mass");
    }

    MajReport<S> report;
    const BigCount& total = sx.total_count();
    const auto& xb = sx.blocks();
    const auto& yb = sy.blocks();
    std::size_t ix = 0;
    std::size_t iy = 0;
    BigCount x_end = xb.empty() ? BigCount(0) : xb[0].count;  // cumulative end of current x block
    BigCount y_end = yb.empty() ? BigCount(0) : yb[0].count;

    BigCount pos = 0;
    S ex = Ops::zero();
    S ey = Ops::zero();
    bool prev_zero = true;  // e_0(x) = e_0(y)

    while (pos < total) {
        const BigCount next = std::min(x_end, y_end);
        const BigCount step = next - pos;
        const S& vx = xb[ix].value;
        const S& vy = yb[iy].value;
        const S step_s = Ops::from_count(step);
        const S ex_next = ex + vx * step_s;
        const S ey_next = ey + vy * step_s;

        if (next < total) {
            report.checked_positions.push_back(next);
            const int c = Ops::compare(ex_next, ey_next, eps);
            if (c > 0) {
                // First integer l in (pos, next] where the linear gap drops below -eps.
                const S slack = ey - ex + S(eps);
                BigCount j = Ops::floor_count(S(slack / (vx - vy))) + 1;
                if (sgn(j) <= 0) j = 1;
                if (j > step) j = step;
                const S j_s = Ops::from_count(j);
                report.first_violation = PrefixViolation<S>{BigCount(pos + j), S(ex + vx * j_s), S(ey + vy * j_s)};
                report.verdict = Verdict::fails;
                return report;
            }
            if (c == 0) {
                report.equality_indices.push_back(next);
                if (prev_zero && step >= 2) report.segment_equality = true;
                prev_zero = true;
            } else {
                prev_zero = false;
            }
        } else if (prev_zero && step >= 2) {
            // Gap is zero at both ends of the last segment, hence along it.
            report.segment_equality = true;
        }

        pos = next;
        ex = ex_next;
        ey = ey_next;
        if (pos == x_end && ix + 1 < xb.size()) x_end += xb[++ix].count;
        if (pos == y_end && iy + 1 < yb.size()) y_end += yb[++iy].count;
    }

    if (!report.equality_indices.empty() || report.segment_equality) report.verdict = Verdict::boundary;
    return report;
}

template <class S>
bool is_interior(const ProbVec<S>& x, const ProbVec<S>& y) {
    return majorizes(x, y).verdict == Verdict::strict_interior;
}

template <class S>
bool is_generalized_interior(const ProbVec<S>& x, const ProbVec<S>& y) {
    const auto report = majorizes(x, y);
    if (!report.holds()) return false;
    const double eps = joint_eps(x, y);
    return ScalarOps<S>::compare(x.front(), y.front(), eps) < 0 && ScalarOps<S>::compare(x.back(), y.back(), eps) > 0;
}

template <class S>
bool check_direct_sum_interior_condition(const ProbVec<S>& y, const ProbVec<S>& yp) {
    if (y.is_uniform() || yp.is_uniform()) {
        throw PreconditionFailed("direct-sum interior condition needs both vectors non-uniform");
    }
    const double eps = joint_eps(y, yp);
    return ScalarOps<S>::compare(y.front(), yp.back(), eps) > 0 && ScalarOps<S>::compare(yp.front(), y.back(), eps) > 0;
}

template <class S>
bool check_overlap_chain(std::span<const ChainLink<S>> chain, double eps) {
    if (chain.empty()) throw InvalidInput("overlap chain must be nonempty");
    std::vector<S> heads;
    std::vector<S> tails;
    for (const auto& link : chain) {
        if (link.values.empty()) throw InvalidInput("overlap chain link is empty");
        const auto [lo, hi] = std::minmax_element(link.values.begin(), link.values.end());
        heads.push_back(*hi);
        tails.push_back(*lo);
    }
    for (std::size_t i = 0; i < chain.size(); ++i) {
        if (ScalarOps<S>::compare(heads.front(), heads[i], eps) < 0) return false;  // (i)
        if (ScalarOps<S>::compare(tails.back(), tails[i], eps) > 0) return false;   // (ii)
    }
    for (std::size_t i = 0; i + 1 < chain.size(); ++i) {
        if (ScalarOps<S>::compare(tails[i], heads[i + 1], eps) >= 0) return false;  // (iii)
    }
    return true;
}

#define TRUMPKIT_INSTANTIATE(S)                                                                  \
    template MajReport<S> majorizes<S>(const ProbVec<S>&, const ProbVec<S>&);                    \
    template MajReport<S> spectrum_majorizes<S>(const Spectrum<S>&, const Spectrum<S>&);         \
    template bool is_interior<S>(const ProbVec<S>&, const ProbVec<S>&);                          \
    template bool is_generalized_interior<S>(const ProbVec<S>&, const ProbVec<S>&);              \
    template bool check_direct_sum_interior_condition<S>(const ProbVec<S>&, const ProbVec<S>&);  \
    template bool check_overlap_chain<S>(std::span<const ChainLink<S>>, double);

TRUMPKIT_INSTANTIATE(Rational)
TRUMPKIT_INSTANTIATE(double)

#undef TRUMPKIT_INSTANTIATE

}  // namespace trumpkit
