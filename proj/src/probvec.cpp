#include "trumpkit/probvec.hpp"

#include <algorithm>
#include <functional>
#include <string>

namespace trumpkit {

namespace {

template <class S>
void sort_desc(std::vector<S>& v) {
    std::sort(v.begin(), v.end(), std::greater<S>());
}

template <class S>
ScalarBackend wider(const ScalarBackend& a, const ScalarBackend& b) {
    if (a.is_exact()) return b;
    if (b.is_exact()) return a;
    return a.float_eps >= b.float_eps ? a : b;
}

}  // namespace

template <class S>
ProbVec<S> ProbVec<S>::make(std::vector<S> raw, bool normalize, ScalarBackend backend) {
    using Ops = ScalarOps<S>;
    if (raw.empty()) throw InvalidInput("probability vector must be nonempty");
    if constexpr (Ops::exact) {
        backend = ScalarBackend::exact();
    } else if (backend.is_exact()) {
        backend = Ops::default_backend();
    }
    S sum = Ops::zero();
    for (const S& v : raw) {
        if (v < Ops::zero()) throw InvalidInput("negative entry " + Ops::to_string(v));
        sum += v;
    }
    if (!(sum > Ops::zero())) throw InvalidInput("zero total mass");
    if (normalize) {
        for (S& v : raw) v /= sum;
    } else {
        const double eps = backend.is_exact() ? 0.0 : backend.float_eps * static_cast<double>(raw.size());
        if (Ops::compare(sum, Ops::one(), eps) != 0) {
            throw InvalidInput("entries sum to " + Ops::to_string(sum) + ", not 1 (pass normalize to rescale)");
        }
    }
    sort_desc(raw);
    return ProbVec(std::move(raw), backend);
}

template <class S>
std::size_t ProbVec<S>::nonzero_count() const {
    const double e = eps();
    return static_cast<std::size_t>(std::count_if(entries_.begin(), entries_.end(), [&](const S& v) {
        return ScalarOps<S>::compare(v, ScalarOps<S>::zero(), e) > 0;
    }));
}

template <class S>
S ProbVec<S>::prefix_mass(std::size_t l) const {
    if (l > dim()) throw InvalidInput("prefix length out of range");
    S acc = ScalarOps<S>::zero();
    for (std::size_t i = 0; i < l; ++i) acc += entries_[i];
    return acc;
}

template <class S>
bool ProbVec<S>::is_uniform() const {
    return ScalarOps<S>::compare(front(), back(), eps()) == 0;
}

template <class S>
std::vector<std::pair<S, std::size_t>> ProbVec<S>::reduce() const {
    std::vector<std::pair<S, std::size_t>> out;
    for (const S& v : entries_) {
        if (!out.empty() && out.back().first == v) {
            ++out.back().second;
        } else {
            out.emplace_back(v, 1);
        }
    }
    return out;
}

template <class S>
ProbVec<S> from_sorted_unchecked(std::vector<S> sorted, ScalarBackend backend) {
    return ProbVec<S>(std::move(sorted), backend);
}

template <class S>
ProbVec<S> tensor(const ProbVec<S>& a, const ProbVec<S>& b) {
    std::vector<S> out;
    out.reserve(a.dim() * b.dim());
    for (const S& u : a.entries()) {
        for (const S& v : b.entries()) out.push_back(u * v);
    }
    sort_desc(out);
    return from_sorted_unchecked(std::move(out), wider<S>(a.backend(), b.backend()));
}

template <class S>
ProbVec<S> tensor_power(const ProbVec<S>& a, unsigned copies) {
    ProbVec<S> acc = from_sorted_unchecked(std::vector<S>{ScalarOps<S>::one()}, a.backend());
    for (unsigned i = 0; i < copies; ++i) acc = tensor(acc, a);
    return acc;
}

template <class S>
ProbVec<S> direct_sum(const ProbVec<S>& a, const ProbVec<S>& b, bool renormalize) {
    if (!renormalize) {
        throw InvalidInput("a direct sum of two probability vectors has mass 2; request renormalization");
    }
    const ProbVec<S> parts[] = {a, b};
    return mix_direct_sum<S>(parts);
}

template <class S>
ProbVec<S> mix_direct_sum(std::span<const ProbVec<S>> parts) {
    if (parts.empty()) throw InvalidInput("direct sum of nothing");
    const S weight = ScalarOps<S>::one() / ScalarOps<S>::from_int(static_cast<long>(parts.size()));
    std::vector<S> out;
    ScalarBackend backend = parts.front().backend();
    for (const auto& p : parts) {
        backend = wider<S>(backend, p.backend());
        for (const S& v : p.entries()) out.push_back(v * weight);
    }
    sort_desc(out);
    return from_sorted_unchecked(std::move(out), backend);
}

template <class S>
ProbVec<S> pad_to(const ProbVec<S>& a, std::size_t n) {
    if (n < a.dim()) throw InvalidInput("pad_to cannot shrink a vector");
    std::vector<S> out(a.entries().begin(), a.entries().end());
    out.resize(n, ScalarOps<S>::zero());
    return from_sorted_unchecked(std::move(out), a.backend());
}

template <class S>
ProbVec<S> uniform(std::size_t n, ScalarBackend backend) {
    if (n == 0) throw InvalidInput("dimension must be at least 1");
    std::vector<S> out(n, ScalarOps<S>::one() / ScalarOps<S>::from_int(static_cast<long>(n)));
    return ProbVec<S>::make(std::move(out), false, backend);
}

template <class S>
void require_same_dim(const ProbVec<S>& x, const ProbVec<S>& y) {
    if (x.dim() != y.dim()) {
        throw InvalidInput("dimension mismatch: " + std::to_string(x.dim()) + " vs " + std::to_string(y.dim()) +
                           " (pad explicitly with pad_to)");
    }
}

#define TRUMPKIT_INSTANTIATE(S)                                                         \
    template class ProbVec<S>;                                                          \
    template ProbVec<S> from_sorted_unchecked<S>(std::vector<S>, ScalarBackend);        \
    template ProbVec<S> tensor<S>(const ProbVec<S>&, const ProbVec<S>&);                \
    template ProbVec<S> tensor_power<S>(const ProbVec<S>&, unsigned);                   \
    template ProbVec<S> direct_sum<S>(const ProbVec<S>&, const ProbVec<S>&, bool);      \
    template ProbVec<S> mix_direct_sum<S>(std::span<const ProbVec<S>>);                 \
    template ProbVec<S> pad_to<S>(const ProbVec<S>&, std::size_t);                      \
    template ProbVec<S> uniform<S>(std::size_t, ScalarBackend);                         \
    template void require_same_dim<S>(const ProbVec<S>&, const ProbVec<S>&);

TRUMPKIT_INSTANTIATE(Rational)
TRUMPKIT_INSTANTIATE(double)

#undef TRUMPKIT_INSTANTIATE

}  // namespace trumpkit
