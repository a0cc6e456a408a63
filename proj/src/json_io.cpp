#include "qfr/json_io.hpp"

#include "qfr/errors.hpp"

namespace qfr {

Json to_json(const Rat& r) { return r.str(); }

Json to_json(const Mat& m) {
    Json rows = Json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m.at(i, j).str());
        rows.push_back(std::move(row));
    }
    return rows;
}

Json matrix_row_major(const Mat& m) {
    Json flat = Json::array();
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) flat.push_back(m.at(i, j).str());
    return flat;
}

Json to_json(const Vec& v) {
    Json a = Json::array();
    for (const Rat& r : v.e) a.push_back(r.str());
    return a;
}

Json to_json(const Covec& v) {
    Json a = Json::array();
    for (const Rat& r : v.e) a.push_back(r.str());
    return a;
}

Json to_json(const Quiver& q) {
    Json j;
    j["vertices"] = q.vertex_count();
    Json arrows = Json::array();
    for (const Arrow& a : q.arrows())
        arrows.push_back(Json{{"id", a.id}, {"tail", a.tail}, {"head", a.head}});
    j["arrows"] = std::move(arrows);
    return j;
}

Json to_json(const RepPoint& w) {
    Json j;
    j["n"] = w.n;
    Json mats;
    for (const auto& [id, m] : w.w) mats[id] = matrix_row_major(m);
    j["matrices"] = std::move(mats);
    return j;
}

RepPoint rep_point_from_json(const Json& j) {
    RepPoint w;
    w.n = j.at("n").get<int>();
    if (w.n < 1) throw PreconditionError("RepPoint JSON: n must be >= 1");
    const std::size_t n = static_cast<std::size_t>(w.n);
    for (const auto& [id, flat] : j.at("matrices").items()) {
        if (!flat.is_array() || flat.size() != n * n)
            throw PreconditionError("RepPoint JSON: matrix for '" + id + "' needs " +
                                    std::to_string(n * n) + " entries");
        Mat m(n, n);
        std::size_t k = 0;
        for (const auto& cell : flat) {
            m.at(k / n, k % n) = Rat::parse(cell.get<std::string>());
            ++k;
        }
        w.w.emplace(id, std::move(m));
    }
    return w;
}

Json to_json(const GroupTuple& g) {
    Json j;
    j["n"] = g.n;
    j["kind"] = g.kind == GroupKind::Unipotent ? "unipotent" : "borel";
    Json mats;
    for (const auto& [v, m] : g.g) mats[std::to_string(v)] = matrix_row_major(m);
    j["matrices"] = std::move(mats);
    return j;
}

Json to_json(const ClassificationReport& rep) {
    Json j;
    j["route"] = route_name(rep.route);
    j["has_loop"] = rep.has_loop;
    Json pairs = Json::array();
    for (const KroneckerPair& p : rep.kronecker_pairs)
        pairs.push_back(Json{{"i", p.i}, {"j", p.j}, {"forward", p.forward}, {"backward", p.backward}});
    j["kronecker_pairs"] = std::move(pairs);
    j["one_step_star_centers"] = rep.one_step_star_centers;
    j["at_most_two_pathways"] = rep.at_most_two_pathways;
    j["truncation_warning"] = rep.truncation_warning;
    j["warnings"] = rep.warnings;
    if (!rep.components.empty()) {
        Json comps = Json::array();
        for (std::size_t c = 0; c < rep.components.size(); ++c) {
            Json comp;
            comp["vertices"] = rep.component_vertices[c];
            comp["report"] = to_json(rep.components[c]);
            comps.push_back(std::move(comp));
        }
        j["components"] = std::move(comps);
    }
    return j;
}

Json to_json(const GenericityReport& rep) {
    Json j;
    j["overall"] = rep.overall;
    Json conds = Json::array();
    for (const GenericityCondition& c : rep.conditions) {
        Json e;
        e["kind"] = c.kind;
        e["arrow_a"] = c.arrow_a;
        if (!c.arrow_b.empty()) e["arrow_b"] = c.arrow_b;
        if (c.iota > 0) {
            e["iota"] = c.iota;
            e["nu"] = c.nu;
        }
        e["ok"] = c.ok;
        conds.push_back(std::move(e));
    }
    j["conditions"] = std::move(conds);
    return j;
}

Json to_json(const StabilizerReport& rep) {
    Json j;
    j["mode"] = rep.mode == GroupKind::Unipotent ? "unipotent" : "borel";
    j["group_dim"] = rep.group_dim;
    j["stab_dim"] = rep.stab_dim;
    j["orbit_dim"] = rep.orbit_dim;
    j["trivial"] = rep.trivial;
    Json basis = Json::array();
    for (const LieTuple& t : rep.basis) {
        Json slots;
        for (const auto& [v, m] : t.m) slots[std::to_string(v)] = matrix_row_major(m);
        basis.push_back(std::move(slots));
    }
    j["basis"] = std::move(basis);
    return j;
}

Json to_json(const QuotientDimensionReport& rep) {
    Json j;
    j["n"] = rep.n;
    j["seed"] = rep.seed;
    j["trials"] = rep.trials;
    j["classification"] = to_json(rep.classification);
    j["dim_space"] = rep.dim_space;
    j["dim_unipotent"] = rep.dim_unipotent;
    j["grosshans_value"] = rep.grosshans_value;
    j["min_stab_dim"] = rep.min_stab_dim;
    j["max_orbit_dim"] = rep.max_orbit_dim;
    j["trivial_witness_found"] = rep.trivial_witness_found;
    j["witness_trial"] = rep.witness_trial;
    j["solvers_agree"] = rep.solvers_agree;
    if (rep.cartan_invariant_count) {
        j["cartan_invariant_count"] = *rep.cartan_invariant_count;
        j["cartan_grosshans_mismatch"] = rep.cartan_grosshans_mismatch;
    }
    j["sampling_note"] = rep.sampling_note;
    return j;
}

Json to_json(const Verdict& v) {
    Json j;
    j["passed"] = v.passed;
    j["trials_run"] = v.trials_run;
    j["degree_bound"] = v.degree_bound;
    j["sample_range"] = v.sample_range;
    j["false_pass_bound"] = v.error_bound;
    if (v.counterexample) {
        const Counterexample& c = *v.counterexample;
        Json e;
        e["trial"] = c.trial;
        e["point"] = to_json(c.point);
        e["group"] = to_json(c.group);
        e["value_before"] = c.value_before.str();
        e["value_after"] = c.value_after.str();
        e["expected_after"] = c.expected_after.str();
        j["counterexample"] = std::move(e);
    }
    return j;
}

Json to_json(const SymbolicCertificate& c) {
    Json j;
    j["diagonals_unipotent_invariant"] = c.diagonals_unipotent_invariant;
    j["cross_unipotent_invariant"] = c.cross_unipotent_invariant;
    j["cross_chi1_semi_invariant"] = c.cross_chi1_semi_invariant;
    j["cross_antisymmetric"] = c.cross_antisymmetric;
    j["all"] = c.all();
    return j;
}

Json to_json(const ADHMData& d) {
    Json j;
    j["n"] = d.n;
    j["r"] = matrix_row_major(d.r);
    j["s"] = matrix_row_major(d.s);
    j["i"] = to_json(d.i);
    j["j"] = to_json(d.j);
    return j;
}

ADHMData adhm_from_json(const Json& j) {
    ADHMData d;
    d.n = j.at("n").get<int>();
    if (d.n < 1) throw PreconditionError("ADHM JSON: n must be >= 1");
    const std::size_t n = static_cast<std::size_t>(d.n);
    auto read_mat = [&](const Json& flat, const char* what) {
        if (!flat.is_array() || flat.size() != n * n)
            throw PreconditionError(std::string("ADHM JSON: ") + what + " needs " +
                                    std::to_string(n * n) + " entries");
        Mat m(n, n);
        std::size_t k = 0;
        for (const auto& cell : flat) {
            m.at(k / n, k % n) = Rat::parse(cell.get<std::string>());
            ++k;
        }
        return m;
    };
    auto read_list = [&](const Json& flat, const char* what) {
        if (!flat.is_array() || flat.size() != n)
            throw PreconditionError(std::string("ADHM JSON: ") + what + " needs " +
                                    std::to_string(n) + " entries");
        std::vector<Rat> out;
        for (const auto& cell : flat) out.push_back(Rat::parse(cell.get<std::string>()));
        return out;
    };
    d.r = read_mat(j.at("r"), "r");
    d.s = read_mat(j.at("s"), "s");
    d.i = Vec(read_list(j.at("i"), "i"));
    d.j = Covec(read_list(j.at("j"), "j"));
    validate(d);
    return d;
}

Json to_json(const ReducedPoint& p) {
    Json j;
    Json r = Json::array(), s = Json::array();
    for (const Rat& v : p.r_diag) r.push_back(v.str());
    for (const Rat& v : p.s_diag) s.push_back(v.str());
    j["r_diag"] = std::move(r);
    j["s_diag"] = std::move(s);
    return j;
}

Json to_json(const IsospectralPoint& p) {
    Json j;
    Json ordered = Json::array(), normal = Json::array();
    for (const auto& [x, y] : p.ordered) ordered.push_back(Json::array({x.str(), y.str()}));
    for (const auto& [x, y] : p.unordered_normal_form)
        normal.push_back(Json::array({x.str(), y.str()}));
    j["ordered"] = std::move(ordered);
    j["unordered_normal_form"] = std::move(normal);
    j["cyclic"] = p.cyclic_marker;
    return j;
}

} // namespace qfr
