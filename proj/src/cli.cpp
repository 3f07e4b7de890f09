#include "trumpkit/cli.hpp"

#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "trumpkit/catalysis.hpp"
#include "trumpkit/io.hpp"
#include "trumpkit/majorize.hpp"
#include "trumpkit/mlocc.hpp"
#include "trumpkit/renyi.hpp"

namespace trumpkit::cli {

namespace {

using io::json;

struct Invocation {
    std::string command;     // majorize | mlocc | catalyst | classify | rfilter
    std::string subcommand;  // for catalyst
    std::string x_file, y_file, c_file;
    RunConfig config;
};

std::vector<double> parse_grid(const std::string& csv) {
    std::vector<double> grid;
    std::stringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        grid.push_back(parse_rational(item).get_d());
    }
    if (grid.empty()) throw InvalidInput("alpha grid is empty");
    return grid;
}

void require_file(const std::string& path, const char* flag) {
    if (path.empty()) throw InvalidInput(std::string("missing ") + flag + " FILE");
}

template <class S>
std::string vec_text(const ProbVec<S>& v) {
    std::string s = "(";
    for (std::size_t i = 0; i < v.dim(); ++i) {
        if (i) s += ", ";
        s += ScalarOps<S>::to_string(v[i]);
    }
    return s + ")";
}

class Emitter {
public:
    Emitter(const RunConfig& config, std::ostream& out) : json_(config.output == OutputFormat::json), out_(out) {}

    bool json_mode() const { return json_; }
    void emit(const json& j) { out_ << j.dump(2) << '\n'; }
    std::ostream& text() { return out_; }

private:
    bool json_;
    std::ostream& out_;
};

template <class S>
bool strict_endpoints(const ProbVec<S>& x, const ProbVec<S>& y) {
    const double eps = joint_eps(x, y);
    return ScalarOps<S>::compare(x.front(), y.front(), eps) < 0 && ScalarOps<S>::compare(x.back(), y.back(), eps) > 0;
}

template <class S>
ProbVec<S> load(const std::string& path, const char* flag, const RunConfig& config) {
    require_file(path, flag);
    return io::load_vector<S>(path, config.normalize, config.backend);
}

template <class S>
int cmd_majorize(const Invocation& inv, Emitter& em) {
    const auto x = load<S>(inv.x_file, "--x", inv.config);
    const auto y = load<S>(inv.y_file, "--y", inv.config);
    const auto report = majorizes(x, y);
    if (em.json_mode()) {
        em.emit(io::to_json(report, inv.config.transcript));
    } else {
        auto& o = em.text();
        o << "x = " << vec_text(x) << "\ny = " << vec_text(y) << "\n";
        o << "verdict: " << to_string(report.verdict) << (report.holds() ? "  (x < y)" : "  (x not< y)") << "\n";
        if (report.first_violation) {
            o << "first violation: l=" << report.first_violation->l.get_str()
              << " e_l(x)=" << ScalarOps<S>::to_string(report.first_violation->ex)
              << " > e_l(y)=" << ScalarOps<S>::to_string(report.first_violation->ey) << "\n";
        }
        if (!report.equality_indices.empty()) {
            o << "equality at l =";
            for (const auto& l : report.equality_indices) o << ' ' << l.get_str();
            o << "\n";
        }
    }
    return report.holds() ? kExitYes : kExitNo;
}

template <class S>
int cmd_mlocc(const Invocation& inv, Emitter& em) {
    const auto x = load<S>(inv.x_file, "--x", inv.config);
    const auto y = load<S>(inv.y_file, "--y", inv.config);
    const auto scan = scan_Mk(x, y, inv.config.k_max);

    std::string status = "unknown";
    MembershipStatus membership = MembershipStatus::unknown;
    if (scan.excluded_by_endpoints) {
        status = "not_member";
        membership = MembershipStatus::not_member;
    } else if (scan.first_success) {
        status = "member";
        membership = strict_endpoints(x, y) ? MembershipStatus::interior : MembershipStatus::boundary;
    }
    if (em.json_mode()) {
        json j = io::to_json(scan);
        j["status"] = status;
        j["membership"] = to_string(membership);
        em.emit(j);
    } else {
        auto& o = em.text();
        for (const auto& [k, v] : scan.results) o << "k=" << k << ": " << to_string(v) << "\n";
        if (scan.first_success) {
            o << "first success: k=" << *scan.first_success << " (" << to_string(membership) << " point of M(y))\n";
        } else if (scan.excluded_by_endpoints) {
            o << "not_member: endpoint condition x_1 <= y_1, x_n >= y_n fails\n";
        } else {
            o << "unknown: no success for k <= " << scan.k_max << "\n";
        }
    }
    return scan.first_success ? kExitYes : kExitNo;
}

template <class S>
void emit_cert(const CatalystCert<S>& cert, const Invocation& inv, Emitter& em) {
    if (em.json_mode()) {
        em.emit(io::to_json(cert, inv.config.transcript));
        return;
    }
    auto& o = em.text();
    o << "source: " << cert.source.describe() << "\n";
    o << "catalyst dimension: " << cert.catalyst.dim() << (cert.dim_bound_ok ? " (matches construction)" : "") << "\n";
    o << "catalyst = " << vec_text(cert.catalyst) << "\n";
    o << "verified: " << (cert.verified ? "yes" : "no") << " (" << to_string(cert.verification.verdict) << ")\n";
    if (inv.config.transcript) {
        o << "checked prefix positions:";
        for (const auto& p : cert.verification.checked_positions) o << ' ' << p.get_str();
        o << "\n";
    }
}

template <class S>
int cmd_catalyst(const Invocation& inv, Emitter& em) {
    const auto& cfg = inv.config;
    const auto x = load<S>(inv.x_file, "--x", cfg);
    const auto y = load<S>(inv.y_file, "--y", cfg);
    const std::string& sub = inv.subcommand;

    if (sub == "build") {
        unsigned k = 0;
        if (cfg.k) {
            k = *cfg.k;
        } else {
            const auto scan = scan_Mk(x, y, cfg.k_max);
            if (!scan.first_success) {
                throw PreconditionFailed("no k <= " + std::to_string(cfg.k_max) + " with x^(x)k < y^(x)k");
            }
            k = *scan.first_success;
        }
        const auto cert = build_catalyst_thm1(x, y, k);
        emit_cert(cert, inv, em);
        return cert.verified ? kExitYes : kExitNo;
    }
    if (sub == "combine" || sub == "lift" || sub == "scan") {
        const auto c = load<S>(inv.c_file, "--c", cfg);
        if (sub == "combine") {
            const auto cert = combine_catalysts(x, y, cfg.k.value_or(1), c);
            emit_cert(cert, inv, em);
            return cert.verified ? kExitYes : kExitNo;
        }
        if (sub == "lift") {
            const auto cert = lift_catalyst(x, y, c, cfg.copies);
            emit_cert(cert, inv, em);
            return cert.verified ? kExitYes : kExitNo;
        }
        const auto map = multicopy_catalyst_scan(x, y, c, cfg.m_max);
        bool any = false;
        json j = json::object();
        for (const auto& [m, ok] : map) {
            j[std::to_string(m)] = ok;
            any = any || ok;
        }
        if (em.json_mode()) {
            em.emit(json{{"catalyst", io::to_json(c)}, {"m_max", cfg.m_max}, {"results", j}});
        } else {
            for (const auto& [m, ok] : map) em.text() << "m=" << m << ": " << (ok ? "yes" : "no") << "\n";
        }
        return any ? kExitYes : kExitNo;
    }
    if (sub == "search") {
        const auto hit = search_catalyst(x, y, cfg.dim_c, cfg.search_budget, cfg.seed);
        if (!hit) {
            if (em.json_mode()) {
                em.emit(json{{"found", false}, {"dim_c", cfg.dim_c}, {"budget", cfg.search_budget}, {"seed", cfg.seed}});
            } else {
                em.text() << "no catalyst found (heuristic search; absence is not a proof of nonexistence)\n";
            }
            return kExitNo;
        }
        emit_cert(*hit, inv, em);
        return hit->verified ? kExitYes : kExitNo;
    }
    throw InvalidInput("unknown catalyst subcommand '" + sub + "'");
}

template <class S>
int cmd_classify(const Invocation& inv, Emitter& em) {
    const auto y = load<S>(inv.y_file, "--y", inv.config);
    const auto verdict = classify_usefulness(y);
    std::optional<ProbVec<S>> outside;
    std::optional<unsigned> bound;
    if (verdict.useful) {
        outside = nonclosedness_witness(y);
        bound = corollary4_k_bound(y, inv.config.k_max);
    }
    if (em.json_mode()) {
        json j = io::to_json(verdict);
        // Multiple copies, catalysts and the Renyi condition all collapse to
        // plain majorization exactly when the target is not useful.
        j["r_equals_s"] = !verdict.useful;
        j["nonclosedness_witness"] = outside ? io::to_json(*outside) : json(nullptr);
        j["uniform_copy_bound"] = bound ? json(*bound) : json(nullptr);
        em.emit(j);
    } else {
        auto& o = em.text();
        o << "y = " << vec_text(y) << "\n";
        if (!verdict.useful) {
            o << "useful: no (M(y) = T(y) = R(y) = S(y))\n";
        } else {
            o << "useful: yes, l=" << *verdict.witness_l << "\n";
            o << "witness x = " << vec_text(*verdict.witness_x) << "\n";
            o << "non-closedness witness = " << vec_text(*outside) << "\n";
            o << "uniform copy bound (k <= " << inv.config.k_max << "): "
              << (bound ? std::to_string(*bound) : std::string("none")) << "\n";
        }
    }
    return kExitYes;
}

template <class S>
int cmd_rfilter(const Invocation& inv, Emitter& em) {
    const auto x = load<S>(inv.x_file, "--x", inv.config);
    const auto y = load<S>(inv.y_file, "--y", inv.config);
    const auto grid = inv.config.alpha_grid.empty() ? default_alpha_grid() : inv.config.alpha_grid;
    const auto verdict = r_filter(x, y, grid);
    if (em.json_mode()) {
        em.emit(io::to_json(verdict));
    } else {
        auto& o = em.text();
        o << "mode: " << to_string(verdict.mode) << "\n";
        o << "status: " << to_string(verdict.status);
        if (verdict.violating_alpha) o << " at alpha=" << verdict.violating_alpha->to_string();
        o << "\n";
    }
    return verdict.status == RFilterStatus::violated ? kExitNo : kExitYes;
}

template <class S>
int dispatch(const Invocation& inv, std::ostream& out) {
    Emitter em(inv.config, out);
    if (inv.command == "majorize") return cmd_majorize<S>(inv, em);
    if (inv.command == "mlocc") return cmd_mlocc<S>(inv, em);
    if (inv.command == "catalyst") return cmd_catalyst<S>(inv, em);
    if (inv.command == "classify") return cmd_classify<S>(inv, em);
    if (inv.command == "rfilter") return cmd_rfilter<S>(inv, em);
    throw InvalidInput("no command given");
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Majorization, multi-copy and catalytic convertibility of Schmidt vectors", "trumpkit"};
    app.require_subcommand(1);
    app.fallthrough();

    Invocation inv;
    RunConfig& cfg = inv.config;
    std::string backend = "exact";
    double eps = 1e-12;
    std::string grid_csv;
    bool json_out = false;
    unsigned k_opt = 0;

    app.add_option("--x", inv.x_file, "source vector file (JSON array)");
    app.add_option("--y", inv.y_file, "target vector file (JSON array)");
    app.add_option("--c", inv.c_file, "catalyst vector file (JSON array)");
    app.add_option("--k-max", cfg.k_max, "largest number of copies scanned")->check(CLI::PositiveNumber);
    app.add_option("--m-max", cfg.m_max, "largest number of catalyst copies scanned")->check(CLI::PositiveNumber);
    app.add_option("--k", k_opt, "number of copies for catalyst build/combine")->check(CLI::PositiveNumber);
    app.add_option("--copies", cfg.copies, "copies for catalyst lift")->check(CLI::PositiveNumber);
    app.add_option("--dim-c", cfg.dim_c, "catalyst dimension for search")->check(CLI::PositiveNumber);
    app.add_option("--budget", cfg.search_budget, "search trials")->check(CLI::PositiveNumber);
    app.add_option("--seed", cfg.seed, "search seed");
    app.add_option("--backend", backend, "exact | float")->check(CLI::IsMember({"exact", "float"}));
    app.add_option("--eps", eps, "float comparison tolerance");
    app.add_option("--alpha-grid", grid_csv, "comma-separated Renyi orders");
    app.add_flag("--json", json_out, "machine-readable output");
    app.add_flag("--transcript", cfg.transcript, "include checked prefix positions");
    app.add_flag("--normalize", cfg.normalize, "rescale input vectors to unit mass");

    app.add_subcommand("majorize", "single-copy convertibility: x < y")->fallthrough();
    app.add_subcommand("mlocc", "multi-copy convertibility scan over k")->fallthrough();
    auto* catalyst = app.add_subcommand("catalyst", "catalyst construction, lifting, search and scans");
    catalyst->fallthrough();
    catalyst->require_subcommand(1);
    for (const char* name : {"build", "combine", "lift", "search", "scan"}) catalyst->add_subcommand(name)->fallthrough();
    app.add_subcommand("classify", "does multi-copy or catalytic conversion help for target y")->fallthrough();
    app.add_subcommand("rfilter", "Renyi-entropy necessary condition")->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return kExitYes;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kExitError;
    }

    try {
        auto* sub = app.get_subcommands().front();
        inv.command = sub->get_name();
        if (inv.command == "catalyst") inv.subcommand = sub->get_subcommands().front()->get_name();
        cfg.output = json_out ? OutputFormat::json : OutputFormat::text;
        if (k_opt > 0) cfg.k = k_opt;
        if (!grid_csv.empty()) cfg.alpha_grid = parse_grid(grid_csv);

        if (backend == "float") {
            cfg.backend = ScalarBackend::floating(eps);
            err << "note: float backend (eps=" << eps << "); comparisons are heuristic\n";
            return dispatch<double>(inv, out);
        }
        cfg.backend = ScalarBackend::exact();
        return dispatch<Rational>(inv, out);
    } catch (const PreconditionFailed& e) {
        err << "not applicable: " << e.what() << "\n";
        return kExitNo;
    } catch (const InvalidInput& e) {
        err << "error: " << e.what() << "\n";
        return kExitError;
    }
}

}  // namespace trumpkit::cli
