#ifndef TRUMPKIT_MLOCC_HPP
#define TRUMPKIT_MLOCC_HPP

#include <map>
#include <optional>
#include <vector>

#include "trumpkit/majorize.hpp"
#include "trumpkit/probvec.hpp"

namespace trumpkit {

/// Result of checking x^{(x)k} < y^{(x)k} for k = 1..k_max.
template <class S>
struct MloccScan {
    ProbVec<S> x;
    ProbVec<S> y;
    unsigned k_max = 0;
    std::map<unsigned, Verdict> results;
    std::optional<unsigned> first_success;
    /// Set when x_1 > y_1 or x_n < y_n: no number of copies can work.
    bool excluded_by_endpoints = false;
};

template <class S>
struct UsefulnessVerdict {
    bool useful = false;
    std::optional<std::size_t> witness_l;  // 1-based
    std::optional<ProbVec<S>> witness_x;
};

enum class MembershipStatus { interior, boundary, not_member, unknown };

const char* to_string(MembershipStatus s);

/// x_1 <= y_1 and x_n >= y_n; necessary for any multi-copy conversion.
template <class S>
bool passes_endpoint_filter(const ProbVec<S>& x, const ProbVec<S>& y);

template <class S>
MajReport<S> mk_report(const ProbVec<S>& x, const ProbVec<S>& y, unsigned k);

/// x^{(x)k} < y^{(x)k}, decided on compressed spectra.
template <class S>
bool in_Mk(const ProbVec<S>& x, const ProbVec<S>& y, unsigned k);

/// Checks every k in 1..k_max (majorization is not monotone in k, so no
/// early exit). Short-circuits to all-fail when the endpoint filter rejects.
template <class S>
MloccScan<S> scan_Mk(const ProbVec<S>& x, const ProbVec<S>& y, unsigned k_max);

/// y_d^k < y_1^{k-1} y_{d+1} and y_{d+1}^k > y_d y_n^{k-1}, with 1-based d in
/// (1, n-1). For x on the boundary of S(y) with the single equality e_d, this
/// holds exactly when x^{(x)k} is interior to S(y^{(x)k}).
template <class S>
bool lemma3_k_condition(const ProbVec<S>& y, std::size_t d, unsigned k);

/// The blocks y'^{(x)(k-i)} (x) y''^{(x)i}, i = 0..k, with y' the first d
/// entries of y and y'' the rest, each repeated C(k, i) times.
template <class S>
std::vector<ChainLink<S>> binomial_chain(const ProbVec<S>& y, std::size_t d, unsigned k);

/// Least k <= k_max with
///   y_{dmin}^k < y_1^{k-1} y_{dmax+1}  and  y_{dmax+1}^k > y_{dmin} y_n^{k-1},
/// dmin = min{i : y_1 > y_i}, dmax = max{i : y_i > y_n}, evaluated as stated.
/// Note y_{dmax+1} = y_n, so the second inequality reduces to y_n > y_{dmin}
/// and the result is empty for every admissible y.
template <class S>
std::optional<unsigned> corollary4_k_bound(const ProbVec<S>& y, unsigned k_max);

/// Interior/boundary of M(y) once membership is found within k_max; interior
/// iff x_1 < y_1 and x_n > y_n.
template <class S>
MembershipStatus is_interior_of_M(const ProbVec<S>& x, const ProbVec<S>& y, unsigned k_max);

/// Multi-copy conversion helps for target y iff y_1 > y_l and y_{l+1} > y_n
/// for some 1 < l < n-1. The witness averages the first l and the last n-l
/// entries of y; the least such l is used.
template <class S>
UsefulnessVerdict<S> classify_usefulness(const ProbVec<S>& y);

/// For useful y: x with y < x but x not< y, so x lies outside M(y) although
/// it is a limit of points inside. Built by moving
/// Delta = min{y_1 - y_l, y_m - y_n} from entry m to entry l, where l is the
/// first entry differing from y_1 and m the last entry differing from y_n.
template <class S>
ProbVec<S> nonclosedness_witness(const ProbVec<S>& y);

}  // namespace trumpkit

#endif  // TRUMPKIT_MLOCC_HPP
