#ifndef TRUMPKIT_IO_HPP
#define TRUMPKIT_IO_HPP

#include <filesystem>
#include <map>
#include <string>

#include "json.hpp"
#include "trumpkit/catalysis.hpp"
#include "trumpkit/majorize.hpp"
#include "trumpkit/mlocc.hpp"
#include "trumpkit/probvec.hpp"
#include "trumpkit/renyi.hpp"
#include "trumpkit/spectrum.hpp"

namespace trumpkit::io {

using nlohmann::json;

// Vector literals are JSON arrays of strings ("0.4", "2/5") parsed exactly;
// plain JSON numbers are accepted by the float backend only.
template <class S>
ProbVec<S> parse_vector(const json& literal, bool normalize = false,
                        ScalarBackend backend = ScalarOps<S>::default_backend());

template <class S>
ProbVec<S> parse_vector_text(const std::string& text, bool normalize = false,
                             ScalarBackend backend = ScalarOps<S>::default_backend());

template <class S>
ProbVec<S> load_vector(const std::filesystem::path& path, bool normalize = false,
                       ScalarBackend backend = ScalarOps<S>::default_backend());

template <class S>
json to_json(const ProbVec<S>& x);

/// {"blocks": [[value, count], ...], "total": count}
template <class S>
json to_json(const Spectrum<S>& s);

template <class S>
Spectrum<S> spectrum_from_json(const json& j, ScalarBackend backend = ScalarOps<S>::default_backend());

/// {"verdict", "equality_indices", "first_violation": {l, ex, ey} | null}
/// plus "segment_equality"; "checked_positions" only with `transcript`.
template <class S>
json to_json(const MajReport<S>& r, bool transcript = false);

template <class S>
json to_json(const MloccScan<S>& scan);

template <class S>
json to_json(const UsefulnessVerdict<S>& v);

/// {"catalyst", "source", "verified", "dim_bound_ok"} plus "dimension";
/// "verification" only with `transcript`.
template <class S>
json to_json(const CatalystCert<S>& cert, bool transcript = false);

/// {"status", "violating_alpha", "mode", "grid_used"} plus differences.
json to_json(const RFilterVerdict& v);

json to_json(const RPropertiesReport& r);

json alpha_to_json(const Alpha& a);

}  // namespace trumpkit::io

#endif  // TRUMPKIT_IO_HPP
