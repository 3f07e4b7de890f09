#ifndef TRUMPKIT_MAJORIZE_HPP
#define TRUMPKIT_MAJORIZE_HPP

#include <optional>
#include <span>
#include <vector>

#include "trumpkit/probvec.hpp"
#include "trumpkit/spectrum.hpp"

namespace trumpkit {

enum class Verdict { strict_interior, boundary, fails };

const char* to_string(Verdict v);

template <class S>
struct PrefixViolation {
    BigCount l;  // 1-based prefix length
    S ex;        // e_l(x)
    S ey;        // e_l(y)
};

/// Outcome of comparing x against y under majorization.
///
/// `equality_indices` are the interior prefix lengths l (1 <= l < n) with
/// e_l(x) = e_l(y). For spectra only breakpoint positions are listed;
/// `segment_equality` marks that the difference vanishes on a whole segment
/// between breakpoints, so every l in it is an equality index as well.
template <class S>
struct MajReport {
    Verdict verdict = Verdict::strict_interior;
    std::vector<BigCount> equality_indices;
    bool segment_equality = false;
    std::optional<PrefixViolation<S>> first_violation;
    /// Prefix positions at which the comparison was evaluated.
    std::vector<BigCount> checked_positions;

    bool holds() const { return verdict != Verdict::fails; }
};

/// x < y (majorized). Floating mode treats |e_l(x) - e_l(y)| <= eps as equal;
/// exact mode decides every comparison without rounding.
template <class S>
MajReport<S> majorizes(const ProbVec<S>& x, const ProbVec<S>& y);

/// Majorization of the expanded vectors behind two spectra. e_l(sx) - e_l(sy)
/// is linear in l between consecutive cumulative-count boundaries of either
/// spectrum, so its sign everywhere follows from its values at those
/// boundaries; only they are evaluated.
template <class S>
MajReport<S> spectrum_majorizes(const Spectrum<S>& sx, const Spectrum<S>& sy);

/// All inequalities strict: x in the interior of S(y).
template <class S>
bool is_interior(const ProbVec<S>& x, const ProbVec<S>& y);

/// x < y, x_1 < y_1 and x_n > y_n.
template <class S>
bool is_generalized_interior(const ProbVec<S>& x, const ProbVec<S>& y);

/// For non-uniform y (dim m) and yp (dim n): y_1 > yp_n and yp_1 > y_m, the
/// exact condition under which interior points of S(y) and S(yp) direct-sum
/// to an interior point of S(y + yp).
template <class S>
bool check_direct_sum_interior_condition(const ProbVec<S>& y, const ProbVec<S>& yp);

/// One link of a direct-sum chain: an (unnormalized) nonincreasing vector
/// repeated `repeat` times.
template <class S>
struct ChainLink {
    std::vector<S> values;
    BigCount repeat = 1;
};

/// The overlap conditions for a chain y^1, ..., y^m: y^1 holds the largest
/// head, y^m the smallest tail, and each tail lies strictly below the next
/// head. Each link's values are sorted first.
template <class S>
bool check_overlap_chain(std::span<const ChainLink<S>> chain, double eps = 0.0);

}  // namespace trumpkit

#endif  // TRUMPKIT_MAJORIZE_HPP
