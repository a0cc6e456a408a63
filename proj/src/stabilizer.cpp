#include "qfr/stabilizer.hpp"

#include <tuple>

#include "qfr/errors.hpp"

namespace qfr {

namespace {

// Slot-entry enumeration shared by both solvers: vertex-major, then row-major
// over the strictly-upper (unipotent) or upper (Borel) part.
struct SlotIndex {
    std::vector<std::tuple<int, std::size_t, std::size_t>> entries;  // (vertex, row, col)

    SlotIndex(const Quiver& q, std::size_t n, GroupKind mode) {
        for (int v = 1; v <= q.vertex_count(); ++v)
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = (mode == GroupKind::Borel) ? i : i + 1; j < n; ++j)
                    entries.emplace_back(v, i, j);
    }

    std::size_t size() const { return entries.size(); }
};

std::vector<LieTuple> tuples_from_columns(const Quiver& q, std::size_t n, const SlotIndex& idx,
                                          const std::vector<Vec>& vectors) {
    std::vector<LieTuple> out;
    for (const Vec& v : vectors) {
        LieTuple t;
        for (int vert = 1; vert <= q.vertex_count(); ++vert) t.m.emplace(vert, Mat(n, n));
        for (std::size_t c = 0; c < idx.size(); ++c) {
            const auto& [vert, i, j] = idx.entries[c];
            t.m.at(vert).at(i, j) = v.e[c];
        }
        out.push_back(std::move(t));
    }
    return out;
}

} // namespace

Mat infinitesimal_action_matrix(const Quiver& q, const RepPoint& w, GroupKind mode) {
    validate(q, w);
    const std::size_t n = static_cast<std::size_t>(w.n);
    const SlotIndex idx(q, n, mode);
    const std::size_t row_count = q.arrows().size() * (n * (n + 1) / 2);

    Mat action(row_count, idx.size());
    for (std::size_t col = 0; col < idx.size(); ++col) {
        const auto& [vert, r, c] = idx.entries[col];
        std::size_t row = 0;
        for (const Arrow& a : q.arrows()) {
            const Mat& W = w.of(a.id);
            // delta = E_rc W (if vert is the head) - W E_rc (if vert is the tail);
            // read off the upper entries only (the lower part is identically 0).
            for (std::size_t i = 0; i < n; ++i) {
                for (std::size_t j = i; j < n; ++j, ++row) {
                    Rat val;
                    if (a.head == vert && i == r && c <= j) val += W.at(c, j);
                    if (a.tail == vert && j == c && i <= r) val -= W.at(i, r);
                    action.at(row, col) = val;
                }
            }
        }
    }
    return action;
}

StabilizerReport infinitesimal_stabilizer(const Quiver& q, const RepPoint& w, GroupKind mode) {
    const std::size_t n = static_cast<std::size_t>(w.n);
    const Mat action = infinitesimal_action_matrix(q, w, mode);
    const SlotIndex idx(q, n, mode);

    StabilizerReport rep;
    rep.mode = mode;
    rep.group_dim = static_cast<long>(idx.size());
    const std::vector<Vec> null = nullspace_basis(action);
    rep.stab_dim = static_cast<long>(null.size());
    rep.orbit_dim = rep.group_dim - rep.stab_dim;
    rep.trivial = rep.stab_dim == 0;
    rep.basis = tuples_from_columns(q, n, idx, null);
    return rep;
}

StabilizerReport superdiagonal_solve(const Quiver& q, const RepPoint& w, GroupKind mode) {
    validate(q, w);
    const std::size_t n = static_cast<std::size_t>(w.n);

    // Every solved slot entry is a linear form in the free parameters found so
    // far. Level k only ever reads entries of level <= k, so processing levels
    // in order realizes the substitute-then-solve induction.
    std::map<std::tuple<int, std::size_t, std::size_t>, std::vector<Rat>> solved;
    std::size_t params = 0;

    const std::size_t first_level = (mode == GroupKind::Borel) ? 0 : 1;
    for (std::size_t level = first_level; level < n; ++level) {
        // Unknowns of this level, in vertex-major order.
        std::vector<std::tuple<int, std::size_t, std::size_t>> unknowns;
        for (int v = 1; v <= q.vertex_count(); ++v)
            for (std::size_t i = 0; i + level < n; ++i)
                unknowns.emplace_back(v, i, i + level);

        const std::size_t width = params + unknowns.size();
        auto form_of = [&](int vert, std::size_t r, std::size_t c) {
            std::vector<Rat> f(width);
            if (c < r) return f;  // below the diagonal: identically zero
            const std::size_t lvl = c - r;
            if (lvl == level) {
                for (std::size_t u = 0; u < unknowns.size(); ++u)
                    if (unknowns[u] == std::make_tuple(vert, r, c)) f[params + u] = Rat(1);
                return f;
            }
            auto it = solved.find({vert, r, c});
            if (it != solved.end())
                for (std::size_t p = 0; p < it->second.size(); ++p) f[p] = it->second[p];
            return f;  // unipotent diagonal and unreached levels stay zero
        };

        // Equations: the (i, i+level) entry of nu^(ha) W - W nu^(ta) per arrow.
        std::vector<std::vector<Rat>> eqs;
        for (const Arrow& a : q.arrows()) {
            const Mat& W = w.of(a.id);
            for (std::size_t i = 0; i + level < n; ++i) {
                const std::size_t j = i + level;
                std::vector<Rat> eq(width);
                for (std::size_t m = i; m <= j; ++m) {
                    if (!W.at(m, j).is_zero()) {
                        const auto f = form_of(a.head, i, m);
                        for (std::size_t t = 0; t < width; ++t) eq[t] += f[t] * W.at(m, j);
                    }
                    if (!W.at(i, m).is_zero()) {
                        const auto f = form_of(a.tail, m, j);
                        for (std::size_t t = 0; t < width; ++t) eq[t] -= f[t] * W.at(i, m);
                    }
                }
                eqs.push_back(std::move(eq));
            }
        }

        Mat system(eqs.size(), width);
        for (std::size_t r = 0; r < eqs.size(); ++r)
            for (std::size_t c = 0; c < width; ++c) system.at(r, c) = eqs[r][c];
        const std::vector<Vec> fresh = nullspace_basis(system);

        // Re-express everything over the new parameter basis.
        for (auto& [key, form] : solved) {
            std::vector<Rat> next(fresh.size());
            for (std::size_t b = 0; b < fresh.size(); ++b)
                for (std::size_t p = 0; p < params; ++p)
                    if (!form[p].is_zero()) next[b] += form[p] * fresh[b].e[p];
            form = std::move(next);
        }
        for (std::size_t u = 0; u < unknowns.size(); ++u) {
            std::vector<Rat> f(fresh.size());
            for (std::size_t b = 0; b < fresh.size(); ++b) f[b] = fresh[b].e[params + u];
            solved.emplace(unknowns[u], std::move(f));
        }
        params = fresh.size();
    }

    const SlotIndex idx(q, n, mode);
    StabilizerReport rep;
    rep.mode = mode;
    rep.group_dim = static_cast<long>(idx.size());
    rep.stab_dim = static_cast<long>(params);
    rep.orbit_dim = rep.group_dim - rep.stab_dim;
    rep.trivial = rep.stab_dim == 0;

    std::vector<Vec> columns;
    for (std::size_t b = 0; b < params; ++b) {
        Vec v(idx.size());
        for (std::size_t c = 0; c < idx.size(); ++c) {
            auto it = solved.find(idx.entries[c]);
            if (it != solved.end()) v.e[c] = it->second[b];
        }
        columns.push_back(std::move(v));
    }
    rep.basis = tuples_from_columns(q, n, idx, columns);
    return rep;
}

long grosshans_dimension(const Quiver& q, int n) {
    return dim_space(q, n) - dim_unipotent(q, n);
}

QuotientDimensionReport quotient_dimension_report(const Quiver& q, int n, std::uint64_t seed,
                                                  int trials) {
    if (trials < 1) throw PreconditionError("quotient_dimension_report needs trials >= 1");
    QuotientDimensionReport rep;
    rep.n = n;
    rep.seed = seed;
    rep.trials = trials;
    rep.classification = classify(q);
    rep.dim_space = dim_space(q, n);
    rep.dim_unipotent = dim_unipotent(q, n);
    rep.grosshans_value = rep.dim_space - rep.dim_unipotent;

    Rng rng(seed);
    rep.min_stab_dim = -1;
    rep.max_orbit_dim = 0;
    for (int t = 0; t < trials; ++t) {
        const RepPoint p = sample_generic(q, n, rng.next());
        const StabilizerReport a = infinitesimal_stabilizer(q, p, GroupKind::Unipotent);
        const StabilizerReport b = superdiagonal_solve(q, p, GroupKind::Unipotent);
        if (a.stab_dim != b.stab_dim) rep.solvers_agree = false;
        if (rep.min_stab_dim < 0 || a.stab_dim < rep.min_stab_dim) rep.min_stab_dim = a.stab_dim;
        if (a.orbit_dim > rep.max_orbit_dim) rep.max_orbit_dim = a.orbit_dim;
        if (a.trivial && !rep.trivial_witness_found) {
            rep.trivial_witness_found = true;
            rep.witness_trial = t;
        }
    }

    if (rep.classification.route == Route::CartanDiagonal) {
        rep.cartan_invariant_count = static_cast<long>(n) * static_cast<long>(q.arrows().size());
        rep.cartan_grosshans_mismatch = *rep.cartan_invariant_count != rep.grosshans_value;
    }
    rep.sampling_note = "stabilizer dimensions observed on " + std::to_string(trials) +
                        " sampled generic point(s); sampled evidence, not a proof of genericity";
    return rep;
}

} // namespace qfr
