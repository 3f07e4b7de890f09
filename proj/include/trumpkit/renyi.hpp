#ifndef TRUMPKIT_RENYI_HPP
#define TRUMPKIT_RENYI_HPP

#include <optional>
#include <string>
#include <vector>

#include "trumpkit/probvec.hpp"

namespace trumpkit {

/// Extended-real Renyi order.
struct Alpha {
    enum class Kind { finite, pos_inf, neg_inf };

    Kind kind = Kind::finite;
    double value = 0.0;

    static Alpha finite(double v) { return {Kind::finite, v}; }
    static Alpha plus_infinity() { return {Kind::pos_inf, 0.0}; }
    static Alpha minus_infinity() { return {Kind::neg_inf, 0.0}; }

    bool is_finite() const { return kind == Kind::finite; }
    bool is_integer() const;
    /// Order is >= 0 (includes +inf).
    bool nonnegative() const { return kind == Kind::pos_inf || (kind == Kind::finite && value >= 0.0); }
    std::string to_string() const;

    friend bool operator==(const Alpha& a, const Alpha& b) {
        return a.kind == b.kind && (a.kind != Kind::finite || a.value == b.value);
    }
};

/// sgn(a)/(1-a) log2(sum over nonzero x_i of x_i^a), with sgn(0) = 1, and the
/// limits S(1) = Shannon entropy, S(+inf) = -log2 x_1, S(-inf) = log2 x_{d_x},
/// S(0) = log2 d_x.
template <class S>
double renyi_entropy(const ProbVec<S>& x, Alpha alpha);

/// Precomputed special values of one vector plus an evaluator.
template <class S>
class RenyiProfile {
public:
    explicit RenyiProfile(ProbVec<S> source);

    const ProbVec<S>& source() const { return source_; }
    std::size_t d_x() const { return d_x_; }
    double max_entropy() const { return s0_; }       // alpha = 0
    double shannon() const { return s1_; }           // alpha = 1
    double min_entropy() const { return s_pos_inf_; }  // alpha = +inf
    double neg_limit() const { return s_neg_inf_; }  // alpha = -inf
    double operator()(Alpha alpha) const;

private:
    ProbVec<S> source_;
    std::size_t d_x_;
    double s0_, s1_, s_pos_inf_, s_neg_inf_;
};

/// {-64, -32, -16, -8, -4, -2, -0.5, 0, 0.5, 2, 4, 8, 16, 32, 64}
std::vector<double> default_alpha_grid();

enum class RFilterStatus { violated, no_violation_found };
enum class RFilterMode { dims_differ, dims_equal };

const char* to_string(RFilterStatus s);
const char* to_string(RFilterMode m);

struct RFilterVerdict {
    RFilterStatus status = RFilterStatus::no_violation_found;
    std::optional<Alpha> violating_alpha;
    RFilterMode mode = RFilterMode::dims_equal;
    /// Orders in evaluation order; `differences[i]` = S(x) - S(y) at grid_used[i].
    std::vector<Alpha> grid_used;
    std::vector<double> differences;
    /// Some order was evaluated in floating point although the backend is exact.
    bool inexact_orders = false;
};

/// One-sided test of "the Renyi entropies of x dominate those of y".
///
/// Orders are tried as +inf, -inf, 0, 1, then the grid in the given order;
/// the first order with S(x) < S(y) is reported. When d_x != d_y only
/// nonnegative orders are tried. No violation on a finite grid is not a proof
/// of dominance. In exact mode integer orders and the limits are decided by
/// exact power-sum comparisons; other orders use doubles with tolerance `tol`.
template <class S>
RFilterVerdict r_filter(const ProbVec<S>& x, const ProbVec<S>& y, const std::vector<double>& grid,
                        double tol = 1e-9);

struct RPropertiesReport {
    bool x1_le_y1 = false;
    bool xn_ge_yn = false;
    bool forward_pass = false;   // r_filter(x, y) found nothing
    bool backward_pass = false;  // r_filter(y, x) found nothing
    bool equal = false;          // x == y
    /// Power sums at orders 1..n agree exactly (exact mode), which pins the multiset.
    bool power_sums_equal = false;
    /// Both directions pass on the grid yet x != y: the grid was too coarse.
    bool needs_investigation = false;
};

template <class S>
RPropertiesReport r_properties_check(const ProbVec<S>& x, const ProbVec<S>& y, const std::vector<double>& grid);

/// sum_i x_i^e over nonzero entries, exact for Rational.
template <class S>
S power_sum(const ProbVec<S>& x, long e);

}  // namespace trumpkit

#endif  // TRUMPKIT_RENYI_HPP
