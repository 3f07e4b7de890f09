#include "trumpkit/spectrum.hpp"

#include <algorithm>
#include <limits>

namespace trumpkit {

BigCount binomial(unsigned long n, unsigned long k) {
    BigCount r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

template <class S>
Spectrum<S> Spectrum<S>::from_blocks(std::vector<SpectrumBlock<S>> blocks, ScalarBackend backend) {
    std::sort(blocks.begin(), blocks.end(),
              [](const SpectrumBlock<S>& a, const SpectrumBlock<S>& b) { return a.value > b.value; });
    std::vector<SpectrumBlock<S>> merged;
    merged.reserve(blocks.size());
    BigCount total = 0;
    for (auto& b : blocks) {
        if (sgn(b.count) < 0) throw InvalidInput("negative block count");
        if (sgn(b.count) == 0) continue;
        total += b.count;
        // Only bit-identical values merge; float near-ties stay separate blocks.
        if (!merged.empty() && merged.back().value == b.value) {
            merged.back().count += b.count;
        } else {
            merged.push_back(std::move(b));
        }
    }
    return Spectrum(std::move(merged), std::move(total), backend);
}

template <class S>
Spectrum<S> Spectrum<S>::from_probvec(const ProbVec<S>& x) {
    std::vector<SpectrumBlock<S>> blocks;
    for (auto& [value, mult] : x.reduce()) blocks.push_back({value, BigCount(static_cast<unsigned long>(mult))});
    return from_blocks(std::move(blocks), x.backend());
}

template <class S>
S Spectrum<S>::total_mass() const {
    S acc = ScalarOps<S>::zero();
    for (const auto& b : blocks_) acc += b.value * ScalarOps<S>::from_count(b.count);
    return acc;
}

template <class S>
S Spectrum<S>::prefix_mass(const BigCount& l) const {
    if (sgn(l) < 0 || l > total_) throw InvalidInput("prefix position out of range");
    S acc = ScalarOps<S>::zero();
    BigCount remaining = l;
    for (const auto& b : blocks_) {
        if (sgn(remaining) == 0) break;
        if (remaining >= b.count) {
            acc += b.value * ScalarOps<S>::from_count(b.count);
            remaining -= b.count;
        } else {
            acc += b.value * ScalarOps<S>::from_count(remaining);
            remaining = 0;
        }
    }
    return acc;
}

template <class S>
std::vector<S> Spectrum<S>::expand(std::size_t limit) const {
    if (total_ > BigCount(static_cast<unsigned long>(limit))) {
        throw InvalidInput("spectrum of size " + total_.get_str() + " is too large to expand");
    }
    std::vector<S> out;
    out.reserve(total_.get_ui());
    for (const auto& b : blocks_) out.insert(out.end(), b.count.get_ui(), b.value);
    return out;
}

template <class S>
Spectrum<S> tensor_power_spectrum(const ProbVec<S>& x, unsigned k) {
    if (k == 0) throw InvalidInput("tensor power exponent must be at least 1");
    const auto distinct = x.reduce();
    const std::size_t d = distinct.size();

    // powers[j][a] = v_j^a ; mult_powers[j][a] = m_j^a
    std::vector<std::vector<S>> powers(d);
    std::vector<std::vector<BigCount>> mult_powers(d);
    for (std::size_t j = 0; j < d; ++j) {
        powers[j].reserve(k + 1);
        mult_powers[j].reserve(k + 1);
        powers[j].push_back(ScalarOps<S>::one());
        mult_powers[j].push_back(BigCount(1));
        for (unsigned a = 1; a <= k; ++a) {
            powers[j].push_back(powers[j].back() * distinct[j].first);
            mult_powers[j].push_back(mult_powers[j].back() * static_cast<unsigned long>(distinct[j].second));
        }
    }
    std::vector<BigCount> factorial(k + 1);
    factorial[0] = 1;
    for (unsigned a = 1; a <= k; ++a) factorial[a] = factorial[a - 1] * a;

    std::vector<SpectrumBlock<S>> blocks;
    blocks.reserve(binomial(d - 1 + k, d - 1).get_ui());

    // Depth-first over exponent vectors (a_1..a_d) with sum k. The count of a
    // leaf is k! / prod a_j! * prod m_j^{a_j}; the factorial product rides along
    // as `denom` and is divided out exactly at the leaf.
    auto walk = [&](auto&& self, std::size_t j, unsigned left, const S& value, const BigCount& weight,
                    const BigCount& denom) -> void {
        if (j + 1 == d) {
            S v = value * powers[j][left];
            BigCount c = weight * mult_powers[j][left] * factorial[k];
            BigCount den = denom * factorial[left];
            mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), den.get_mpz_t());
            blocks.push_back({std::move(v), std::move(c)});
            return;
        }
        for (unsigned a = 0; a <= left; ++a) {
            self(self, j + 1, left - a, S(value * powers[j][a]), BigCount(weight * mult_powers[j][a]),
                 BigCount(denom * factorial[a]));
        }
    };
    walk(walk, 0, k, ScalarOps<S>::one(), BigCount(1), BigCount(1));
    return Spectrum<S>::from_blocks(std::move(blocks), x.backend());
}

template <class S>
Spectrum<S> tensor(const Spectrum<S>& a, const Spectrum<S>& b) {
    std::vector<SpectrumBlock<S>> blocks;
    blocks.reserve(a.block_count() * b.block_count());
    for (const auto& u : a.blocks()) {
        for (const auto& v : b.blocks()) blocks.push_back({S(u.value * v.value), BigCount(u.count * v.count)});
    }
    ScalarBackend backend = a.backend();
    if (b.eps() > a.eps()) backend = b.backend();
    return Spectrum<S>::from_blocks(std::move(blocks), backend);
}

#define TRUMPKIT_INSTANTIATE(S)                                                      \
    template class Spectrum<S>;                                                      \
    template Spectrum<S> tensor_power_spectrum<S>(const ProbVec<S>&, unsigned);      \
    template Spectrum<S> tensor<S>(const Spectrum<S>&, const Spectrum<S>&);

TRUMPKIT_INSTANTIATE(Rational)
TRUMPKIT_INSTANTIATE(double)

#undef TRUMPKIT_INSTANTIATE

}  // namespace trumpkit
