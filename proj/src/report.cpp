#include "qfr/report.hpp"

#include <sstream>

#include "qfr/adhm.hpp"
#include "qfr/errors.hpp"
#include "qfr/filtered_rep.hpp"
#include "qfr/invariants.hpp"
#include "qfr/rng.hpp"
#include "qfr/selftest.hpp"
#include "qfr/stabilizer.hpp"
#include "qfr/version.hpp"

namespace qfr {

namespace {

Json config_json(const RunConfig& c) {
    Json j;
    j["n"] = c.n;
    j["seed"] = c.seed;
    j["trials"] = c.trials;
    j["cap"] = c.cap;
    j["max_len"] = c.max_len;
    j["format"] = c.format;
    return j;
}

const Quiver& need_quiver(const std::optional<Quiver>& q, const std::string& command) {
    if (!q) throw PreconditionError("command '" + command + "' needs a quiver file");
    return *q;
}

Json classify_payload(const Quiver& q, const RunConfig& cfg) {
    ClassificationCaps caps;
    caps.cap = cfg.cap;
    caps.max_len = cfg.max_len;
    return to_json(classify(q, caps));
}

Json dims_payload(const Quiver& q, const RunConfig& cfg) {
    Json j;
    j["dim_space"] = dim_space(q, cfg.n);
    j["dim_unipotent"] = dim_unipotent(q, cfg.n);
    j["dim_borel"] = dim_borel(q, cfg.n);
    j["grosshans_value"] = grosshans_dimension(q, cfg.n);
    return j;
}

Json stab_payload(const Quiver& q, const RunConfig& cfg) {
    return to_json(quotient_dimension_report(q, cfg.n, cfg.seed, cfg.trials));
}

Json inv_payload(const Quiver& q, const RunConfig& cfg, bool& failed) {
    Json j;
    Json diag = Json::array();
    Rng rng(cfg.seed);
    for (const InvariantFn& f : diagonal_invariants(q, cfg.n)) {
        const Verdict v = verify_invariance(f, q, cfg.n, rng.next(), cfg.trials);
        failed = failed || !v.passed;
        Json entry;
        entry["name"] = f.name;
        entry["verdict"] = to_json(v);
        diag.push_back(std::move(entry));
    }
    j["diagonal_invariants"] = std::move(diag);

    // The loop quiver at n = 2 carries the explicit generator family; certify
    // it symbolically and verify the semi-invariant character numerically.
    const bool all_loops = q.vertex_count() == 1 && !q.arrows().empty();
    if (all_loops && cfg.n == 2) {
        const int k = static_cast<int>(q.arrows().size());
        const SymbolicCertificate cert = certify_jordan2x2(k);
        j["jordan2x2_certificate"] = to_json(cert);
        failed = failed || !cert.all();
        Json crosses = Json::array();
        for (int mu = 1; mu <= k; ++mu) {
            for (int nu = mu + 1; nu <= k; ++nu) {
                InvariantFn f = jordan2x2_cross(k, mu, nu);
                // The cross family addresses loops by the fixture names c1..ck.
                bool names_ok = true;
                for (int g = 1; g <= k; ++g)
                    names_ok = names_ok && q.has_arrow("c" + std::to_string(g));
                if (!names_ok) continue;
                const Verdict inv_v = verify_invariance(f, q, 2, rng.next(), cfg.trials);
                const Verdict semi_v =
                    verify_semi_invariance(f, Character{1}, 1, q, 2, rng.next(), cfg.trials);
                failed = failed || !inv_v.passed || !semi_v.passed;
                Json entry;
                entry["name"] = f.name;
                entry["unipotent_verdict"] = to_json(inv_v);
                entry["chi1_semi_verdict"] = to_json(semi_v);
                crosses.push_back(std::move(entry));
            }
        }
        j["cross_polynomials"] = std::move(crosses);
    }
    return j;
}

Json adhm_payload(const RunConfig& cfg, bool& failed) {
    Json j;
    Rng rng(cfg.seed);
    const int n = cfg.n;

    int reduction_ok = 0;
    for (int t = 0; t < cfg.trials; ++t) {
        std::vector<Rat> pr, ps;
        const ADHMData d = sample_zero_fiber_rss(n, rng, &pr, &ps);
        const ReducedPoint red = reduce_rss(d);
        const ADHMData moved = borel_act(d, random_borel(static_cast<std::size_t>(n), rng));
        const bool ok = red.r_diag == pr && red.s_diag == ps && in_zero_fiber(moved) &&
                        reduce_rss(moved) == red;
        reduction_ok += ok ? 1 : 0;
    }
    j["reduction_trials"] = cfg.trials;
    j["reduction_invariant"] = reduction_ok == cfg.trials;

    int roundtrip_ok = 0;
    for (int t = 0; t < cfg.trials; ++t) {
        Mat r, s;
        Vec i;
        sample_y_rss(n, rng, r, s, i);
        const ADHMData canon = canonical_form_y_rss(r, s, i);
        const IsospectralPoint p = forward_birational(r, s, i);
        const ADHMData back = inverse_birational(p);
        const IsospectralPoint fwd = forward_birational(back.r, back.s, back.i);
        const bool ok = back.r == canon.r && back.s == canon.s && back.i == canon.i && fwd == p;
        roundtrip_ok += ok ? 1 : 0;
    }
    j["roundtrip_trials"] = cfg.trials;
    j["roundtrips_exact"] = roundtrip_ok == cfg.trials;

    // One worked sample for the report reader.
    Mat r, s;
    Vec i;
    sample_y_rss(n, rng, r, s, i);
    j["sample_triple"] = Json{{"r", matrix_row_major(r)},
                              {"s", matrix_row_major(s)},
                              {"i", to_json(i)}};
    j["sample_isospectral"] = to_json(forward_birational(r, s, i));

    failed = failed || reduction_ok != cfg.trials || roundtrip_ok != cfg.trials;
    return j;
}

Json selftest_payload(bool& failed) {
    Json j = Json::array();
    const auto results = run_acceptance();
    for (const CriterionResult& r : results) {
        Json e;
        e["id"] = r.id;
        e["name"] = r.name;
        e["passed"] = r.passed;
        if (!r.detail.empty()) e["detail"] = r.detail;
        j.push_back(std::move(e));
        failed = failed || !r.passed;
    }
    return j;
}

} // namespace

CommandResult run_command(const std::string& command, const std::optional<Quiver>& quiver,
                          const RunConfig& config) {
    CommandResult out;
    out.report["tool"] = "qfr";
    out.report["version"] = kVersion;
    out.report["command"] = command;
    out.report["config"] = config_json(config);
    if (quiver) out.report["quiver"] = to_json(*quiver);

    bool verification_failed = false;
    try {
        if (command == "classify") {
            out.report["classification"] = classify_payload(need_quiver(quiver, command), config);
        } else if (command == "dims") {
            out.report["dimensions"] = dims_payload(need_quiver(quiver, command), config);
        } else if (command == "stab") {
            out.report["stabilizer"] = stab_payload(need_quiver(quiver, command), config);
        } else if (command == "inv") {
            out.report["invariants"] =
                inv_payload(need_quiver(quiver, command), config, verification_failed);
        } else if (command == "adhm") {
            out.report["adhm"] = adhm_payload(config, verification_failed);
        } else if (command == "selftest") {
            out.report["selftest"] = selftest_payload(verification_failed);
        } else {
            throw PreconditionError("unknown command '" + command + "'");
        }
    } catch (const PreconditionError& e) {
        out.report["status"] = "precondition-error";
        out.report["error"] = e.what();
        out.exit_code = 3;
        return out;
    }

    out.report["status"] = verification_failed ? "verification-failed" : "ok";
    out.exit_code = verification_failed ? 4 : 0;
    return out;
}

namespace {

void render_node(std::ostream& os, const Json& node, int indent) {
    const std::string pad(static_cast<std::size_t>(indent) * 2, ' ');
    if (node.is_object()) {
        for (const auto& [key, value] : node.items()) {
            if (value.is_object() || value.is_array()) {
                os << pad << key << ":\n";
                render_node(os, value, indent + 1);
            } else {
                os << pad << key << ": " << value.dump() << "\n";
            }
        }
    } else if (node.is_array()) {
        for (const auto& value : node) {
            if (value.is_object() || value.is_array()) {
                os << pad << "-\n";
                render_node(os, value, indent + 1);
            } else {
                os << pad << "- " << value.dump() << "\n";
            }
        }
    } else {
        os << pad << node.dump() << "\n";
    }
}

} // namespace

std::string render_text(const Json& report) {
    std::ostringstream os;
    render_node(os, report, 0);
    return os.str();
}

} // namespace qfr
