#ifndef TRUMPKIT_PROBVEC_HPP
#define TRUMPKIT_PROBVEC_HPP

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "trumpkit/scalar.hpp"

namespace trumpkit {

/// A Schmidt coefficient vector: nonnegative entries summing to one, always
/// held sorted nonincreasing. Zero entries are kept; they change the answer
/// of dimension-sensitive questions.
///
/// Instantiated for S = Rational (exact) and S = double (eps comparisons).
template <class S>
class ProbVec {
public:
    using value_type = S;

    /// Sorts `raw`. With `normalize` the entries are divided by their sum;
    /// otherwise the sum must already be one (exactly, or within eps).
    static ProbVec make(std::vector<S> raw, bool normalize,
                        ScalarBackend backend = ScalarOps<S>::default_backend());

    std::size_t dim() const { return entries_.size(); }
    const S& operator[](std::size_t i) const { return entries_[i]; }
    const S& front() const { return entries_.front(); }
    const S& back() const { return entries_.back(); }
    std::span<const S> entries() const { return entries_; }
    const ScalarBackend& backend() const { return backend_; }
    double eps() const { return backend_.is_exact() ? 0.0 : backend_.float_eps; }

    /// Number of nonzero entries (d_x).
    std::size_t nonzero_count() const;

    /// Sum of the l largest entries, l in [0, dim].
    S prefix_mass(std::size_t l) const;

    S total_mass() const { return prefix_mass(dim()); }

    bool is_uniform() const;

    /// Distinct values with multiplicities, largest first.
    std::vector<std::pair<S, std::size_t>> reduce() const;

    friend bool operator==(const ProbVec& a, const ProbVec& b) { return a.entries_ == b.entries_; }

private:
    ProbVec(std::vector<S> sorted, ScalarBackend backend)
        : entries_(std::move(sorted)), backend_(backend) {}

    template <class T>
    friend ProbVec<T> from_sorted_unchecked(std::vector<T>, ScalarBackend);

    std::vector<S> entries_;
    ScalarBackend backend_;
};

template <class S>
ProbVec<S> make_probvec(std::vector<S> raw, bool normalize = false,
                        ScalarBackend backend = ScalarOps<S>::default_backend()) {
    return ProbVec<S>::make(std::move(raw), normalize, backend);
}

/// All pairwise products, re-sorted.
template <class S>
ProbVec<S> tensor(const ProbVec<S>& a, const ProbVec<S>& b);

/// a tensored with itself `copies` times; copies = 0 gives the vector (1).
template <class S>
ProbVec<S> tensor_power(const ProbVec<S>& a, unsigned copies);

/// Concatenation, re-sorted. The raw concatenation has mass 2; with
/// `renormalize` it is halved back to a probability vector. Without it the
/// result is rejected, since ProbVec always carries unit mass.
template <class S>
ProbVec<S> direct_sum(const ProbVec<S>& a, const ProbVec<S>& b, bool renormalize = true);

/// Equal-weight direct sum of m vectors (each scaled by 1/m).
template <class S>
ProbVec<S> mix_direct_sum(std::span<const ProbVec<S>> parts);

/// Appends zeros up to dimension n. Never applied implicitly.
template <class S>
ProbVec<S> pad_to(const ProbVec<S>& a, std::size_t n);

// Internal: wraps entries the caller has already sorted and normalized.
template <class S>
ProbVec<S> from_sorted_unchecked(std::vector<S> sorted, ScalarBackend backend);

/// Uniform vector (1/n, ..., 1/n).
template <class S>
ProbVec<S> uniform(std::size_t n, ScalarBackend backend = ScalarOps<S>::default_backend());

template <class S>
void require_same_dim(const ProbVec<S>& x, const ProbVec<S>& y);

/// Combined comparison tolerance of two operands (0 in exact mode).
template <class S>
double joint_eps(const ProbVec<S>& a, const ProbVec<S>& b) {
    return a.eps() > b.eps() ? a.eps() : b.eps();
}

}  // namespace trumpkit

#endif  // TRUMPKIT_PROBVEC_HPP
