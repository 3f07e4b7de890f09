#include "trumpkit/catalysis.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <set>
#include <string>

#include "trumpkit/mlocc.hpp"
#include "trumpkit/spectrum.hpp"

namespace trumpkit {

std::string CatalystSource::describe() const {
    switch (kind) {
        case Kind::thm1_construction: return "thm1_construction(" + std::to_string(k) + ")";
        case Kind::thm2_combination: return "thm2_combination(" + std::to_string(k) + ")";
        case Kind::lifted: return "lifted(" + std::to_string(copies) + ")";
        case Kind::search: return "search(" + std::to_string(seed) + "," + std::to_string(dim) + ")";
    }
    return "?";
}

BigCount thm1_catalyst_dim(std::size_t n, unsigned k) {
    if (k == 0) throw InvalidInput("number of copies must be at least 1");
    BigCount p;
    mpz_ui_pow_ui(p.get_mpz_t(), n, k - 1);
    return p * k;
}

namespace {

void require_materializable(const BigCount& dim) {
    if (dim > BigCount(static_cast<unsigned long>(kMaxCatalystDim))) {
        throw InvalidInput("catalyst of dimension " + dim.get_str() + " is too large to materialize");
    }
}

// (1/k) (+)_{i=0}^{k-1} x^{(x)(k-1-i)} (x) y^{(x)i}
template <class S>
ProbVec<S> thm1_vector(const ProbVec<S>& x, const ProbVec<S>& y, unsigned k) {
    require_materializable(thm1_catalyst_dim(x.dim(), k));
    std::vector<ProbVec<S>> parts;
    parts.reserve(k);
    for (unsigned i = 0; i < k; ++i) parts.push_back(tensor(tensor_power(x, k - 1 - i), tensor_power(y, i)));
    return mix_direct_sum<S>(parts);
}

// Compares (x^{(x)copies} (x) c^{(x)c_copies}) against the same with y.
template <class S>
MajReport<S> catalysed_report(const ProbVec<S>& x, const ProbVec<S>& y, unsigned copies, const ProbVec<S>& c,
                              unsigned c_copies) {
    const Spectrum<S> sc = c_copies == 1 ? Spectrum<S>::from_probvec(c) : tensor_power_spectrum(c, c_copies);
    const Spectrum<S> sx = copies == 1 ? Spectrum<S>::from_probvec(x) : tensor_power_spectrum(x, copies);
    const Spectrum<S> sy = copies == 1 ? Spectrum<S>::from_probvec(y) : tensor_power_spectrum(y, copies);
    return spectrum_majorizes(tensor(sx, sc), tensor(sy, sc));
}

template <class S>
CatalystCert<S> certify(const ProbVec<S>& x, const ProbVec<S>& y, unsigned copies, ProbVec<S> c,
                        CatalystSource source, const BigCount& promised_dim) {
    MajReport<S> report = catalysed_report(x, y, copies, c, 1);
    const bool ok = report.holds();
    const bool dim_ok = BigCount(static_cast<unsigned long>(c.dim())) == promised_dim;
    return CatalystCert<S>{std::move(c), source, ok, dim_ok, std::move(report)};
}

// Nonincreasing compositions of `total` into exactly `parts` positive integers.
void compositions(unsigned total, std::size_t parts, unsigned cap, std::vector<unsigned>& cur,
                  std::vector<std::vector<unsigned>>& out, std::size_t limit) {
    if (out.size() >= limit) return;
    if (parts == 0) {
        if (total == 0) out.push_back(cur);
        return;
    }
    if (total < parts) return;
    const unsigned hi = std::min<unsigned>(cap, total - static_cast<unsigned>(parts - 1));
    for (unsigned v = hi; v >= 1; --v) {
        // remaining parts-1 entries are each <= v, so they cannot absorb more than v*(parts-1)
        if (static_cast<unsigned long>(v) * parts < total) break;
        cur.push_back(v);
        compositions(total - v, parts - 1, v, cur, out, limit);
        cur.pop_back();
        if (out.size() >= limit) return;
    }
}

template <class S>
ProbVec<S> from_weights(const std::vector<unsigned>& w, const ScalarBackend& backend) {
    std::vector<S> raw;
    raw.reserve(w.size());
    for (unsigned v : w) raw.push_back(ScalarOps<S>::from_int(static_cast<long>(v)));
    return ProbVec<S>::make(std::move(raw), true, backend);
}

}  // namespace

template <class S>
CatalystCert<S> build_catalyst_thm1(const ProbVec<S>& x, const ProbVec<S>& y, unsigned k) {
    require_same_dim(x, y);
    if (k == 0) throw InvalidInput("number of copies must be at least 1");
    if (!in_Mk(x, y, k)) {
        throw PreconditionFailed("x^(x)" + std::to_string(k) + " is not majorized by y^(x)" + std::to_string(k));
    }
    CatalystSource source{CatalystSource::Kind::thm1_construction, k, 0, 0, 0};
    return certify(x, y, 1, thm1_vector(x, y, k), source, thm1_catalyst_dim(x.dim(), k));
}

template <class S>
CatalystCert<S> combine_catalysts(const ProbVec<S>& x, const ProbVec<S>& y, unsigned k, const ProbVec<S>& c_prime) {
    require_same_dim(x, y);
    if (k == 0) throw InvalidInput("number of copies must be at least 1");
    if (!catalysed_report(x, y, k, c_prime, 1).holds()) {
        throw PreconditionFailed("x^(x)" + std::to_string(k) + " (x) c' is not majorized by y^(x)" + std::to_string(k) +
                                 " (x) c'");
    }
    const BigCount promised = thm1_catalyst_dim(x.dim(), k) * static_cast<unsigned long>(c_prime.dim());
    require_materializable(promised);
    CatalystSource source{CatalystSource::Kind::thm2_combination, k, 0, 0, 0};
    return certify(x, y, 1, tensor(thm1_vector(x, y, k), c_prime), source, promised);
}

template <class S>
CatalystCert<S> lift_catalyst(const ProbVec<S>& x, const ProbVec<S>& y, const ProbVec<S>& c, unsigned n_copies) {
    require_same_dim(x, y);
    if (n_copies == 0) throw InvalidInput("number of copies must be at least 1");
    if (!catalysed_report(x, y, 1, c, 1).holds()) {
        throw PreconditionFailed("x (x) c is not majorized by y (x) c");
    }
    BigCount promised;
    mpz_ui_pow_ui(promised.get_mpz_t(), c.dim(), n_copies);
    require_materializable(promised);
    ProbVec<S> lifted = tensor_power(c, n_copies);
    const bool dim_ok = BigCount(static_cast<unsigned long>(lifted.dim())) == promised;
    MajReport<S> report = catalysed_report(x, y, n_copies, c, n_copies);
    const bool ok = report.holds();
    CatalystSource source{CatalystSource::Kind::lifted, 1, n_copies, 0, 0};
    return CatalystCert<S>{std::move(lifted), source, ok, dim_ok, std::move(report)};
}

template <class S>
std::optional<CatalystCert<S>> search_catalyst(const ProbVec<S>& x, const ProbVec<S>& y, std::size_t dim_c,
                                                std::size_t budget, std::uint64_t seed) {
    require_same_dim(x, y);
    if (dim_c == 0) throw InvalidInput("catalyst dimension must be at least 1");
    if (!passes_endpoint_filter(x, y)) return std::nullopt;

    const CatalystSource source{CatalystSource::Kind::search, 0, 0, seed, dim_c};
    const BigCount promised(static_cast<unsigned long>(dim_c));
    auto try_candidate = [&](const ProbVec<S>& c) -> std::optional<CatalystCert<S>> {
        if (!majorizes(tensor(x, c), tensor(y, c)).holds()) return std::nullopt;
        return certify(x, y, 1, c, source, promised);
    };

    if (dim_c == 1) return try_candidate(uniform<S>(1, x.backend()));

    std::size_t trials = 0;
    // Lattice pass: c = w / N over nonincreasing positive integer weights,
    // refining N until half the budget is spent.
    const std::size_t lattice_budget = budget / 2;
    std::set<std::vector<unsigned>> seen;
    for (unsigned total = static_cast<unsigned>(dim_c); trials < lattice_budget && total < 4096; ++total) {
        std::vector<std::vector<unsigned>> weights;
        std::vector<unsigned> cur;
        compositions(total, dim_c, total, cur, weights, lattice_budget - trials);
        for (auto& w : weights) {
            const unsigned g = std::accumulate(w.begin(), w.end(), 0u, [](unsigned a, unsigned b) { return std::gcd(a, b); });
            std::vector<unsigned> reduced = w;
            for (auto& v : reduced) v /= g;
            if (!seen.insert(reduced).second) continue;
            ++trials;
            if (auto hit = try_candidate(from_weights<S>(reduced, x.backend()))) return hit;
            if (trials >= lattice_budget) break;
        }
    }

    // Random pass: flat Dirichlet samples rounded to denominators near 10^4.
    std::mt19937_64 rng(seed);
    constexpr double kScale = 10000.0;
    while (trials < budget) {
        ++trials;
        std::vector<double> e(dim_c);
        double sum = 0.0;
        for (auto& v : e) {
            const double u = (static_cast<double>(rng() >> 11) + 0.5) * 0x1.0p-53;
            v = -std::log(u);
            sum += v;
        }
        std::vector<unsigned> w(dim_c);
        for (std::size_t i = 0; i < dim_c; ++i) {
            w[i] = std::max(1u, static_cast<unsigned>(std::lround(e[i] / sum * kScale)));
        }
        if (auto hit = try_candidate(from_weights<S>(w, x.backend()))) return hit;
    }
    return std::nullopt;
}

template <class S>
std::map<unsigned, bool> multicopy_catalyst_scan(const ProbVec<S>& x, const ProbVec<S>& y, const ProbVec<S>& c,
                                                 unsigned m_max) {
    require_same_dim(x, y);
    std::map<unsigned, bool> out;
    for (unsigned m = 1; m <= m_max; ++m) out[m] = catalysed_report(x, y, 1, c, m).holds();
    return out;
}

#define TRUMPKIT_INSTANTIATE(S)                                                                                  \
    template CatalystCert<S> build_catalyst_thm1<S>(const ProbVec<S>&, const ProbVec<S>&, unsigned);             \
    template CatalystCert<S> combine_catalysts<S>(const ProbVec<S>&, const ProbVec<S>&, unsigned,                \
                                                  const ProbVec<S>&);                                            \
    template CatalystCert<S> lift_catalyst<S>(const ProbVec<S>&, const ProbVec<S>&, const ProbVec<S>&, unsigned); \
    template std::optional<CatalystCert<S>> search_catalyst<S>(const ProbVec<S>&, const ProbVec<S>&, std::size_t, \
                                                               std::size_t, std::uint64_t);                      \
    template std::map<unsigned, bool> multicopy_catalyst_scan<S>(const ProbVec<S>&, const ProbVec<S>&,           \
                                                                 const ProbVec<S>&, unsigned);

TRUMPKIT_INSTANTIATE(Rational)
TRUMPKIT_INSTANTIATE(double)

#undef TRUMPKIT_INSTANTIATE

}  // namespace trumpkit
