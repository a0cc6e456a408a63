#include "qfr/selftest.hpp"

#include <sstream>

#include "qfr/adhm.hpp"
#include "qfr/errors.hpp"
#include "qfr/filtered_rep.hpp"
#include "qfr/invariants.hpp"
#include "qfr/quiver.hpp"
#include "qfr/stabilizer.hpp"

namespace qfr {

namespace {

constexpr std::uint64_t kBaseSeed = 0x51e5eedULL;

struct Check {
    bool ok = true;
    std::ostringstream detail;

    void expect(bool cond, const std::string& what) {
        if (!cond) {
            if (!ok) detail << "; ";
            detail << what;
            ok = false;
        }
    }
};

// Flattens a Lie tuple into the vertex-major slot-entry coordinates used by
// the stabilizer solvers, so bases can be compared as row spans.
Vec flatten(const LieTuple& t, const Quiver& q, std::size_t n, GroupKind mode) {
    std::vector<Rat> coords;
    for (int v = 1; v <= q.vertex_count(); ++v)
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = (mode == GroupKind::Borel) ? i : i + 1; j < n; ++j)
                coords.push_back(t.m.at(v).at(i, j));
    return Vec(std::move(coords));
}

bool same_span(const std::vector<LieTuple>& a, const std::vector<LieTuple>& b, const Quiver& q,
               std::size_t n, GroupKind mode) {
    if (a.size() != b.size()) return false;
    if (a.empty()) return true;
    const std::size_t dim = flatten(a[0], q, n, mode).dim();
    Mat stacked(a.size() + b.size(), dim);
    std::size_t row = 0;
    for (const auto& t : a) {
        const Vec v = flatten(t, q, n, mode);
        for (std::size_t c = 0; c < dim; ++c) stacked.at(row, c) = v.e[c];
        ++row;
    }
    Mat first_only(a.size(), dim);
    for (std::size_t r = 0; r < a.size(); ++r)
        for (std::size_t c = 0; c < dim; ++c) first_only.at(r, c) = stacked.at(r, c);
    for (const auto& t : b) {
        const Vec v = flatten(t, q, n, mode);
        for (std::size_t c = 0; c < dim; ++c) stacked.at(row, c) = v.e[c];
        ++row;
    }
    return rank(first_only) == a.size() && rank(stacked) == a.size();
}

CriterionResult loop_quiver_dimensions() {
    Check c;
    int trial_seed = 0;
    for (int loops : {1, 2}) {
        const Quiver q = jordan_quiver(loops);
        for (int n : {2, 3, 4}) {
            const RepPoint p = sample_generic(q, n, kBaseSeed + static_cast<std::uint64_t>(++trial_seed));
            const StabilizerReport a = infinitesimal_stabilizer(q, p, GroupKind::Unipotent);
            const StabilizerReport b = superdiagonal_solve(q, p, GroupKind::Unipotent);
            const std::string tag = std::to_string(loops) + "-loop n=" + std::to_string(n);
            c.expect(a.stab_dim == 0, tag + ": nullspace solver stab_dim != 0");
            c.expect(b.stab_dim == 0, tag + ": level solver stab_dim != 0");
            const long expected = static_cast<long>(loops) * n * (n + 1) / 2 - n * (n - 1) / 2;
            c.expect(grosshans_dimension(q, n) == expected, tag + ": quotient dimension mismatch");
            const QuotientDimensionReport rep =
                quotient_dimension_report(q, n, kBaseSeed + 100 + static_cast<std::uint64_t>(trial_seed), 3);
            c.expect(rep.grosshans_value == expected, tag + ": reported quotient dimension mismatch");
            c.expect(rep.trivial_witness_found, tag + ": no trivial-stabilizer witness");
            c.expect(rep.solvers_agree, tag + ": solvers disagreed");
        }
    }
    return {1, "loop quivers: trivial stabilizer and quotient dimension", c.ok, c.detail.str()};
}

CriterionResult kronecker_dimensions() {
    Check c;
    int k = 0;
    for (bool mixed : {false, true}) {
        const Quiver q = mixed ? mixed_kronecker_quiver() : kronecker_quiver(2);
        for (int n : {2, 3}) {
            const RepPoint p = sample_generic(q, n, kBaseSeed + 40 + static_cast<std::uint64_t>(++k));
            const StabilizerReport a = infinitesimal_stabilizer(q, p, GroupKind::Unipotent);
            const StabilizerReport b = superdiagonal_solve(q, p, GroupKind::Unipotent);
            const std::string tag = std::string(mixed ? "mixed" : "parallel") + " pair n=" + std::to_string(n);
            c.expect(a.stab_dim == 0 && b.stab_dim == 0, tag + ": stabilizer not trivial");
            c.expect(grosshans_dimension(q, n) == 2L * n, tag + ": quotient dimension != 2n");
            c.expect(dim_space(q, n) - dim_unipotent(q, n) ==
                         2L * n * (n + 1) / 2 - 2L * n * (n - 1) / 2,
                     tag + ": dimension formula mismatch");
        }
    }
    return {2, "two-vertex pair quivers: trivial stabilizer and quotient = 2n", c.ok, c.detail.str()};
}

CriterionResult a2_diagonal_invariants() {
    Check c;
    const Quiver q = a2_quiver();
    for (int n : {2, 3, 4}) {
        const auto fns = diagonal_invariants(q, n);
        c.expect(static_cast<int>(fns.size()) == n,
                 "n=" + std::to_string(n) + ": expected n diagonal invariants");
        for (std::size_t f = 0; f < fns.size(); ++f) {
            const Verdict v = verify_invariance(fns[f], q, n, kBaseSeed + 60 + f, 100);
            c.expect(v.passed, "n=" + std::to_string(n) + ": " + fns[f].name + " failed invariance");
        }
        const RepPoint p = sample_generic(q, n, kBaseSeed + 70 + static_cast<std::uint64_t>(n));
        const StabilizerReport rep = infinitesimal_stabilizer(q, p, GroupKind::Unipotent);
        c.expect(rep.orbit_dim == static_cast<long>(n) * (n + 1) / 2 - n,
                 "n=" + std::to_string(n) + ": generic orbit dimension mismatch");
    }
    return {3, "single-arrow quiver: diagonal invariants and orbit dimension", c.ok, c.detail.str()};
}

CriterionResult jordan_2x2_generators() {
    Check c;
    for (int k : {2, 3}) {
        const SymbolicCertificate cert = certify_jordan2x2(k);
        c.expect(cert.cross_unipotent_invariant, "k=" + std::to_string(k) + ": symbolic U-invariance failed");
        c.expect(cert.cross_chi1_semi_invariant, "k=" + std::to_string(k) + ": symbolic semi-invariance failed");
        c.expect(cert.diagonals_unipotent_invariant && cert.cross_antisymmetric,
                 "k=" + std::to_string(k) + ": diagonal/antisymmetry certificate failed");
    }

    const Quiver q = jordan_quiver(2);
    RepPoint w;
    w.n = 2;
    w.w.emplace("c1", Mat::from_rows({{Rat(1), Rat(3)}, {Rat(0), Rat(2)}}));
    w.w.emplace("c2", Mat::from_rows({{Rat(4), Rat(5)}, {Rat(0), Rat(6)}}));
    const InvariantFn f12 = jordan2x2_cross(2, 1, 2);
    c.expect(f12.eval(w) == Rat(1), "worked example: f(1,2) before the action != 1");

    GroupTuple u;
    u.n = 2;
    u.kind = GroupKind::Unipotent;
    u.g.emplace(1, Mat::from_rows({{Rat(1), Rat(1)}, {Rat(0), Rat(1)}}));
    const RepPoint moved = act(q, u, w);
    c.expect(moved.of("c1") == Mat::from_rows({{Rat(1), Rat(4)}, {Rat(0), Rat(2)}}),
             "worked example: conjugated first loop matrix is wrong");
    c.expect(moved.of("c2") == Mat::from_rows({{Rat(4), Rat(7)}, {Rat(0), Rat(6)}}),
             "worked example: conjugated second loop matrix is wrong");
    c.expect(f12.eval(moved) == Rat(1), "worked example: f(1,2) after the action != 1");
    return {4, "2x2 loop-quiver generators: symbolic certificates and worked example", c.ok,
            c.detail.str()};
}

CriterionResult solver_cross_validation() {
    Check c;
    const std::vector<Quiver> fixtures = {jordan_quiver(1), jordan_quiver(3), a2_quiver(),
                                          kronecker_quiver(2), star_quiver_one_step(1, 1)};
    const char* names[] = {"1-loop", "3-loop", "single-arrow", "parallel-pair", "2-leg star"};
    Rng rng(kBaseSeed + 90);
    int disagreements = 0;
    int total = 0;
    for (std::size_t f = 0; f < fixtures.size(); ++f) {
        const Quiver& q = fixtures[f];
        for (int n = 1; n <= 4; ++n) {
            for (int t = 0; t < 25; ++t) {
                const RepPoint p = random_rep_point(q, n, rng);
                const StabilizerReport a = infinitesimal_stabilizer(q, p, GroupKind::Unipotent);
                const StabilizerReport b = superdiagonal_solve(q, p, GroupKind::Unipotent);
                ++total;
                const bool agree = a.stab_dim == b.stab_dim &&
                                   same_span(a.basis, b.basis, q, static_cast<std::size_t>(n),
                                             GroupKind::Unipotent);
                if (!agree) {
                    ++disagreements;
                    c.expect(false, std::string(names[f]) + " n=" + std::to_string(n) +
                                        " trial " + std::to_string(t));
                }
            }
        }
    }
    c.expect(total == 500, "expected exactly 500 cross-validation points");
    std::string detail = c.detail.str();
    if (c.ok) detail = "500 points, 0 disagreements";
    return {5, "solver cross-validation on 500 random points", c.ok && disagreements == 0, detail};
}

CriterionResult reduction_invariance() {
    Check c;
    Rng rng(kBaseSeed + 120);
    int done = 0;
    for (int n = 2; n <= 5; ++n) {
        for (int t = 0; t < 50; ++t, ++done) {
            std::vector<Rat> planted_r, planted_s;
            const ADHMData d = sample_zero_fiber_rss(n, rng, &planted_r, &planted_s);
            c.expect(in_zero_fiber(d), "sampled point left the zero fiber");
            c.expect(is_rss(d), "sampled point is not regular semisimple");
            const ReducedPoint red = reduce_rss(d);
            c.expect(red.r_diag == planted_r && red.s_diag == planted_s,
                     "n=" + std::to_string(n) + " trial " + std::to_string(t) +
                         ": reduction does not recover the planted diagonals");
            const ADHMData moved = borel_act(d, random_borel(static_cast<std::size_t>(n), rng));
            c.expect(in_zero_fiber(moved), "Borel action left the zero fiber");
            c.expect(reduce_rss(moved) == red, "reduction is not Borel-invariant");
            for (std::size_t a = 0; a < red.r_diag.size(); ++a)
                for (std::size_t b = a + 1; b < red.r_diag.size(); ++b)
                    c.expect(red.r_diag[a] != red.r_diag[b],
                             "reduced point hit the excluded diagonal locus");
        }
    }
    std::string detail = c.detail.str();
    if (c.ok) detail = std::to_string(done) + " seeded zero-fiber points";
    return {6, "Hamiltonian reduction: Borel invariance and planted recovery", c.ok, detail};
}

CriterionResult birational_round_trips() {
    Check c;
    Rng rng(kBaseSeed + 150);
    int forward_count = 0;
    for (int rep = 0; rep < 34; ++rep) {
        for (int n = 2; n <= 4 && forward_count < 100; ++n, ++forward_count) {
            const IsospectralPoint p = sample_isospectral(n, rng);
            const ADHMData d = inverse_birational(p);
            const IsospectralPoint back = forward_birational(d.r, d.s, d.i);
            c.expect(back == p, "ordered-points round trip failed at n=" + std::to_string(n));
        }
    }
    int inverse_count = 0;
    for (int rep = 0; rep < 34; ++rep) {
        for (int n = 2; n <= 4 && inverse_count < 100; ++n, ++inverse_count) {
            Mat r, s;
            Vec i;
            sample_y_rss(n, rng, r, s, i);
            const ADHMData canon = canonical_form_y_rss(r, s, i);
            const IsospectralPoint p = forward_birational(r, s, i);
            const ADHMData back = inverse_birational(p);
            c.expect(back.r == canon.r && back.s == canon.s && back.i == canon.i &&
                         back.j.is_zero(),
                     "triple round trip != canonical form at n=" + std::to_string(n));
        }
    }
    std::string detail = c.detail.str();
    if (c.ok)
        detail = std::to_string(forward_count) + " + " + std::to_string(inverse_count) +
                 " round trips";
    return {7, "birational round trips against the canonical form", c.ok, detail};
}

CriterionResult s_prime_oracle() {
    Check c;
    Rng rng(kBaseSeed + 180);
    for (int t = 0; t < 100; ++t) {
        const int n = 1 + static_cast<int>(rng.uniform(0, 4));
        std::vector<Rat> rdiag;
        while (static_cast<int>(rdiag.size()) < n) {
            Rat v(rng.uniform(-12, 12));
            bool fresh = true;
            for (const Rat& prev : rdiag) fresh = fresh && prev != v;
            if (fresh) rdiag.push_back(v);
        }
        std::vector<Rat> sdiag(static_cast<std::size_t>(n));
        for (auto& v : sdiag) v = Rat(rng.uniform(-9, 9));
        const Mat r = Mat::diagonal(rdiag);
        const Mat s = Mat::diagonal(sdiag);
        c.expect(s_prime(r, s) == sdiag,
                 "trial " + std::to_string(t) + ": s' of a diagonal pair is not diag(s)");
        // Independent recomputation of the normalizing trace.
        for (int iota = 0; iota < n; ++iota) {
            Mat prod = Mat::identity(static_cast<std::size_t>(n));
            for (int k = 0; k < n; ++k) {
                if (k == iota) continue;
                Mat lk = r;
                for (int m = 0; m < n; ++m)
                    lk.at(static_cast<std::size_t>(m), static_cast<std::size_t>(m)) -=
                        r.at(static_cast<std::size_t>(k), static_cast<std::size_t>(k));
                prod = prod * lk;
            }
            Rat closed(1);
            for (int k = 0; k < n; ++k)
                if (k != iota)
                    closed *= rdiag[static_cast<std::size_t>(iota)] - rdiag[static_cast<std::size_t>(k)];
            c.expect(prod.trace() == closed,
                     "trial " + std::to_string(t) + ": normalizing trace != product of diagonal gaps");
        }
    }
    return {8, "s' coordinates: diagonal identity and trace normalization", c.ok, c.detail.str()};
}

CriterionResult classification_fixtures() {
    Check c;
    const ClassificationReport jordan = classify(jordan_quiver(1));
    c.expect(jordan.route == Route::TrivialStabilizer, "1-loop quiver not on the trivial-stabilizer route");
    c.expect(jordan.has_loop, "1-loop quiver: loop not detected");
    c.expect(!jordan.truncation_warning, "1-loop quiver: unexpected truncation");

    const Quiver star8 = star_quiver_one_step(4, 4);
    const ClassificationReport star = classify(star8);
    c.expect(star.route == Route::CartanDiagonal, "8-leg star not on the Cartan route");
    c.expect(star.one_step_star_centers == std::vector<int>{1}, "8-leg star: center not detected");
    c.expect(!star.truncation_warning, "8-leg star: unexpected truncation");

    const ClassificationReport kron = classify(kronecker_quiver(2));
    c.expect(kron.route == Route::TrivialStabilizer, "parallel pair not on the trivial-stabilizer route");
    c.expect(kron.kronecker_pairs.size() == 1 && kron.kronecker_pairs[0].forward == 2 &&
                 kron.kronecker_pairs[0].backward == 0,
             "parallel pair: Kronecker pair not detected as (2,0)");
    c.expect(!kron.truncation_warning, "parallel pair: unexpected truncation");
    return {9, "classification fixtures", c.ok, c.detail.str()};
}

CriterionResult star_mismatch_report() {
    Check c;
    const Quiver q = star_quiver_one_step(1, 1);  // two legs, one in, one out
    const QuotientDimensionReport rep = quotient_dimension_report(q, 2, kBaseSeed + 200, 5);
    c.expect(rep.classification.route == Route::CartanDiagonal, "2-leg star not on the Cartan route");
    c.expect(rep.cartan_invariant_count && *rep.cartan_invariant_count == 4,
             "Cartan invariant count != 4");
    c.expect(rep.grosshans_value == 3, "free-action dimension count != 3");
    c.expect(rep.cartan_grosshans_mismatch, "dimension mismatch not flagged");
    c.expect(!rep.trivial_witness_found, "unexpected trivial-stabilizer witness on a star quiver");
    return {10, "2-leg star dimension-count mismatch is reported", c.ok, c.detail.str()};
}

} // namespace

std::vector<CriterionResult> run_acceptance() {
    return {
        loop_quiver_dimensions(),
        kronecker_dimensions(),
        a2_diagonal_invariants(),
        jordan_2x2_generators(),
        solver_cross_validation(),
        reduction_invariance(),
        birational_round_trips(),
        s_prime_oracle(),
        classification_fixtures(),
        star_mismatch_report(),
    };
}

bool all_passed(const std::vector<CriterionResult>& results) {
    for (const CriterionResult& r : results)
        if (!r.passed) return false;
    return true;
}

} // namespace qfr
