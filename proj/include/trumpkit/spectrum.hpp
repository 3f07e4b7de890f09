#ifndef TRUMPKIT_SPECTRUM_HPP
#define TRUMPKIT_SPECTRUM_HPP

#include <vector>

#include "trumpkit/probvec.hpp"
#include "trumpkit/scalar.hpp"

namespace trumpkit {

template <class S>
struct SpectrumBlock {
    S value;
    BigCount count;
};

/// A sorted vector stored as distinct values with big-integer multiplicities,
/// so x^{(x)k} can be handled without materializing n^k entries.
///
/// Invariants: values strictly decreasing, counts >= 1, total = sum of counts.
template <class S>
class Spectrum {
public:
    /// Sorts and merges equal values; drops zero counts.
    static Spectrum from_blocks(std::vector<SpectrumBlock<S>> blocks,
                                ScalarBackend backend = ScalarOps<S>::default_backend());

    static Spectrum from_probvec(const ProbVec<S>& x);

    const std::vector<SpectrumBlock<S>>& blocks() const { return blocks_; }
    std::size_t block_count() const { return blocks_.size(); }
    const BigCount& total_count() const { return total_; }
    const ScalarBackend& backend() const { return backend_; }
    double eps() const { return backend_.is_exact() ? 0.0 : backend_.float_eps; }

    /// Sum of value * count over all blocks.
    S total_mass() const;

    /// e_l: sum of the l largest components, 0 <= l <= total_count.
    S prefix_mass(const BigCount& l) const;

    /// Flat sorted vector. Throws if total_count exceeds `limit`.
    std::vector<S> expand(std::size_t limit = std::size_t{1} << 22) const;

private:
    Spectrum(std::vector<SpectrumBlock<S>> blocks, BigCount total, ScalarBackend backend)
        : blocks_(std::move(blocks)), total_(std::move(total)), backend_(backend) {}

    std::vector<SpectrumBlock<S>> blocks_;
    BigCount total_;
    ScalarBackend backend_;
};

/// Sorted spectrum of x^{(x)k}: enumerates exponent vectors over the distinct
/// values of x, so the block count is at most C(d-1+k, d-1) for d distinct values.
template <class S>
Spectrum<S> tensor_power_spectrum(const ProbVec<S>& x, unsigned k);

/// Spectrum of the tensor product of the two underlying vectors.
template <class S>
Spectrum<S> tensor(const Spectrum<S>& a, const Spectrum<S>& b);

template <class S>
S prefix_mass(const Spectrum<S>& s, const BigCount& l) {
    return s.prefix_mass(l);
}

/// C(n, k) as a big integer.
BigCount binomial(unsigned long n, unsigned long k);

}  // namespace trumpkit

#endif  // TRUMPKIT_SPECTRUM_HPP
