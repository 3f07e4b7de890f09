#include "trumpkit/io.hpp"

#include <fstream>
#include <sstream>

namespace trumpkit::io {

namespace {

template <class S>
json scalar_json(const S& v) {
    return ScalarOps<S>::to_string(v);
}

json big_json(const BigCount& v) { return v.get_str(); }

json big_list(const std::vector<BigCount>& v) {
    json out = json::array();
    for (const auto& b : v) out.push_back(big_json(b));
    return out;
}

template <class S>
S parse_scalar(const json& entry, const ScalarBackend& backend) {
    if (entry.is_string()) return ScalarOps<S>::parse(entry.get<std::string>());
    if (entry.is_number()) {
        if constexpr (ScalarOps<S>::exact) {
            throw InvalidInput("numeric literal " + entry.dump() + " needs the float backend; quote it for exact input");
        } else {
            (void)backend;
            return entry.get<double>();
        }
    }
    throw InvalidInput("vector entries must be strings or numbers, got " + entry.dump());
}

}  // namespace

template <class S>
ProbVec<S> parse_vector(const json& literal, bool normalize, ScalarBackend backend) {
    if (!literal.is_array()) throw InvalidInput("vector literal must be a JSON array");
    std::vector<S> raw;
    raw.reserve(literal.size());
    for (const auto& entry : literal) raw.push_back(parse_scalar<S>(entry, backend));
    return ProbVec<S>::make(std::move(raw), normalize, backend);
}

template <class S>
ProbVec<S> parse_vector_text(const std::string& text, bool normalize, ScalarBackend backend) {
    json literal;
    try {
        literal = json::parse(text);
    } catch (const json::parse_error& e) {
        throw InvalidInput(std::string("malformed JSON: ") + e.what());
    }
    return parse_vector<S>(literal, normalize, backend);
}

template <class S>
ProbVec<S> load_vector(const std::filesystem::path& path, bool normalize, ScalarBackend backend) {
    std::ifstream in(path);
    if (!in) throw InvalidInput("cannot open " + path.string());
    std::stringstream buf;
    buf << in.rdbuf();
    try {
        return parse_vector_text<S>(buf.str(), normalize, backend);
    } catch (const InvalidInput& e) {
        throw InvalidInput(path.string() + ": " + e.what());
    }
}

template <class S>
json to_json(const ProbVec<S>& x) {
    json out = json::array();
    for (const S& v : x.entries()) out.push_back(scalar_json(v));
    return out;
}

template <class S>
json to_json(const Spectrum<S>& s) {
    json blocks = json::array();
    for (const auto& b : s.blocks()) blocks.push_back(json::array({scalar_json(b.value), big_json(b.count)}));
    return {{"blocks", blocks}, {"total", big_json(s.total_count())}};
}

template <class S>
Spectrum<S> spectrum_from_json(const json& j, ScalarBackend backend) {
    if (!j.is_object() || !j.contains("blocks") || !j.contains("total")) {
        throw InvalidInput("spectrum JSON needs 'blocks' and 'total'");
    }
    std::vector<SpectrumBlock<S>> blocks;
    for (const auto& b : j.at("blocks")) {
        if (!b.is_array() || b.size() != 2 || !b[1].is_string()) throw InvalidInput("bad spectrum block " + b.dump());
        BigCount count;
        if (count.set_str(b[1].get<std::string>(), 10) != 0) throw InvalidInput("bad block count " + b[1].dump());
        blocks.push_back({parse_scalar<S>(b[0], backend), std::move(count)});
    }
    auto s = Spectrum<S>::from_blocks(std::move(blocks), backend);
    if (!j.at("total").is_string() || s.total_count() != BigCount(j.at("total").get<std::string>(), 10)) {
        throw InvalidInput("spectrum total does not match its blocks");
    }
    return s;
}

template <class S>
json to_json(const MajReport<S>& r, bool transcript) {
    json out{{"verdict", to_string(r.verdict)},
             {"equality_indices", big_list(r.equality_indices)},
             {"segment_equality", r.segment_equality},
             {"first_violation", nullptr}};
    if (r.first_violation) {
        out["first_violation"] = {{"l", big_json(r.first_violation->l)},
                                  {"ex", scalar_json(r.first_violation->ex)},
                                  {"ey", scalar_json(r.first_violation->ey)}};
    }
    if (transcript) out["checked_positions"] = big_list(r.checked_positions);
    return out;
}

template <class S>
json to_json(const MloccScan<S>& scan) {
    json results = json::object();
    for (const auto& [k, v] : scan.results) results[std::to_string(k)] = to_string(v);
    return {{"x", to_json(scan.x)},
            {"y", to_json(scan.y)},
            {"k_max", scan.k_max},
            {"results", results},
            {"first_success", scan.first_success ? json(*scan.first_success) : json(nullptr)},
            {"excluded_by_endpoints", scan.excluded_by_endpoints}};
}

template <class S>
json to_json(const UsefulnessVerdict<S>& v) {
    return {{"useful", v.useful},
            {"witness_l", v.witness_l ? json(*v.witness_l) : json(nullptr)},
            {"witness_x", v.witness_x ? to_json(*v.witness_x) : json(nullptr)}};
}

template <class S>
json to_json(const CatalystCert<S>& cert, bool transcript) {
    json out{{"catalyst", to_json(cert.catalyst)},
             {"dimension", cert.catalyst.dim()},
             {"source", cert.source.describe()},
             {"verified", cert.verified},
             {"dim_bound_ok", cert.dim_bound_ok}};
    if (transcript) out["verification"] = to_json(cert.verification, true);
    return out;
}

json alpha_to_json(const Alpha& a) {
    if (a.is_finite()) return a.value;
    return a.to_string();
}

json to_json(const RFilterVerdict& v) {
    json grid = json::array();
    for (const auto& a : v.grid_used) grid.push_back(alpha_to_json(a));
    return {{"status", to_string(v.status)},
            {"violating_alpha", v.violating_alpha ? alpha_to_json(*v.violating_alpha) : json(nullptr)},
            {"mode", to_string(v.mode)},
            {"grid_used", grid},
            {"differences", v.differences},
            {"inexact_orders", v.inexact_orders}};
}

json to_json(const RPropertiesReport& r) {
    return {{"x1_le_y1", r.x1_le_y1},
            {"xn_ge_yn", r.xn_ge_yn},
            {"forward_pass", r.forward_pass},
            {"backward_pass", r.backward_pass},
            {"equal", r.equal},
            {"power_sums_equal", r.power_sums_equal},
            {"needs_investigation", r.needs_investigation}};
}

#define TRUMPKIT_INSTANTIATE(S)                                                               \
    template ProbVec<S> parse_vector<S>(const json&, bool, ScalarBackend);                    \
    template ProbVec<S> parse_vector_text<S>(const std::string&, bool, ScalarBackend);        \
    template ProbVec<S> load_vector<S>(const std::filesystem::path&, bool, ScalarBackend);    \
    template json to_json<S>(const ProbVec<S>&);                                              \
    template json to_json<S>(const Spectrum<S>&);                                             \
    template Spectrum<S> spectrum_from_json<S>(const json&, ScalarBackend);                   \
    template json to_json<S>(const MajReport<S>&, bool);                                      \
    template json to_json<S>(const MloccScan<S>&);                                            \
    template json to_json<S>(const UsefulnessVerdict<S>&);                                    \
    template json to_json<S>(const CatalystCert<S>&, bool);

TRUMPKIT_INSTANTIATE(Rational)
TRUMPKIT_INSTANTIATE(double)

#undef TRUMPKIT_INSTANTIATE

}  // namespace trumpkit::io
