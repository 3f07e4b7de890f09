#ifndef TRUMPKIT_CATALYSIS_HPP
#define TRUMPKIT_CATALYSIS_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <string>

#include "trumpkit/majorize.hpp"
#include "trumpkit/probvec.hpp"

namespace trumpkit {

/// Which construction produced a catalyst.
struct CatalystSource {
    enum class Kind { thm1_construction, thm2_combination, lifted, search };

    Kind kind = Kind::thm1_construction;
    unsigned k = 0;          // copies of x used by the construction
    unsigned copies = 0;     // lifted: number of copies of x, y and c
    std::uint64_t seed = 0;  // search
    std::size_t dim = 0;     // search

    std::string describe() const;
};

/// A catalyst c with the check x (x) c < y (x) c.
template <class S>
struct CatalystCert {
    ProbVec<S> catalyst;
    CatalystSource source;
    bool verified = false;
    /// The raw dimension matches what the construction promises
    /// (k n^{k-1} for the multi-copy construction).
    bool dim_bound_ok = false;
    /// Spectrum comparison of x (x) c against y (x) c (or its lifted form).
    MajReport<S> verification;
};

/// Largest raw catalyst dimension that is materialized as a ProbVec.
inline constexpr std::size_t kMaxCatalystDim = std::size_t{1} << 20;

/// From x^{(x)k} < y^{(x)k}: c = (1/k) (+)_{i=0}^{k-1} x^{(x)(k-1-i)} (x) y^{(x)i},
/// of raw dimension k n^{k-1}. Throws PreconditionFailed when x is not in M_k(y).
template <class S>
CatalystCert<S> build_catalyst_thm1(const ProbVec<S>& x, const ProbVec<S>& y, unsigned k);

/// From x^{(x)k} (x) c' < y^{(x)k} (x) c': catalyst c (x) c' with c the
/// multi-copy construction for exponent k.
template <class S>
CatalystCert<S> combine_catalysts(const ProbVec<S>& x, const ProbVec<S>& y, unsigned k, const ProbVec<S>& c_prime);

/// From x (x) c < y (x) c: c^{(x)n} certifies x^{(x)n} -> y^{(x)n}.
template <class S>
CatalystCert<S> lift_catalyst(const ProbVec<S>& x, const ProbVec<S>& y, const ProbVec<S>& c, unsigned n_copies);

/// Heuristic search over sorted dim_c-dimensional catalysts: a coarse lattice
/// pass followed by seeded Dirichlet samples. Returns the first verified hit.
/// An empty result says nothing about whether a catalyst exists.
template <class S>
std::optional<CatalystCert<S>> search_catalyst(const ProbVec<S>& x, const ProbVec<S>& y, std::size_t dim_c,
                                                std::size_t budget, std::uint64_t seed);

/// m -> [x (x) c^{(x)m} < y (x) c^{(x)m}] for m = 1..m_max.
template <class S>
std::map<unsigned, bool> multicopy_catalyst_scan(const ProbVec<S>& x, const ProbVec<S>& y, const ProbVec<S>& c,
                                                 unsigned m_max);

/// Raw dimension of the multi-copy construction: k n^{k-1}.
BigCount thm1_catalyst_dim(std::size_t n, unsigned k);

}  // namespace trumpkit

#endif  // TRUMPKIT_CATALYSIS_HPP
