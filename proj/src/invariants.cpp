#include "qfr/invariants.hpp"

#include <array>

#include "qfr/errors.hpp"
#include "qfr/poly.hpp"

namespace qfr {

Rat Character::eval(const Mat& borel) const {
    const std::size_t i = static_cast<std::size_t>(iota - 1);
    if (iota < 1 || i + 1 >= borel.rows())
        throw PreconditionError("character index out of range");
    return borel.at(i, i) / borel.at(i + 1, i + 1);
}

std::vector<InvariantFn> diagonal_invariants(const Quiver& q, int n) {
    if (n < 1) throw PreconditionError("diagonal_invariants needs n >= 1");
    std::vector<InvariantFn> fns;
    for (const Arrow& a : q.arrows()) {
        for (int i = 1; i <= n; ++i) {
            InvariantFn f;
            f.name = "diag(" + a.id + "," + std::to_string(i) + ")";
            f.n = n;
            f.degree_bound = 1;
            const std::string id = a.id;
            const std::size_t idx = static_cast<std::size_t>(i - 1);
            f.eval = [id, idx](const RepPoint& w) { return w.of(id).at(idx, idx); };
            fns.push_back(std::move(f));
        }
    }
    return fns;
}

InvariantFn jordan2x2_cross(int k, int mu, int nu) {
    if (mu < 1 || nu < 1 || mu > k || nu > k || mu == nu)
        throw PreconditionError("cross polynomial needs distinct loop indices in [1,k]");
    InvariantFn f;
    f.name = "f(" + std::to_string(mu) + "," + std::to_string(nu) + ")";
    f.n = 2;
    f.degree_bound = 2;
    const std::string a = "c" + std::to_string(mu);
    const std::string b = "c" + std::to_string(nu);
    f.eval = [a, b](const RepPoint& w) {
        const Mat& wa = w.of(a);
        const Mat& wb = w.of(b);
        return wb.at(0, 1) * (wa.at(0, 0) - wa.at(1, 1)) -
               wa.at(0, 1) * (wb.at(0, 0) - wb.at(1, 1));
    };
    return f;
}

std::vector<InvariantFn> jordan2x2_generators(int k, int n) {
    if (k < 1) throw PreconditionError("jordan2x2_generators needs k >= 1");
    if (n != 2) throw PreconditionError("the explicit loop-quiver generator family is only known at n = 2");
    std::vector<InvariantFn> fns = diagonal_invariants(jordan_quiver(k), 2);
    for (int mu = 1; mu <= k; ++mu)
        for (int nu = mu + 1; nu <= k; ++nu) fns.push_back(jordan2x2_cross(k, mu, nu));
    return fns;
}

bool invariance_holds_at(const InvariantFn& f, const Quiver& q, const RepPoint& w,
                         const GroupTuple& g) {
    return f.eval(act(q, g, w)) == f.eval(w);
}

bool semi_invariance_holds_at(const InvariantFn& f, const Character& chi, int vertex,
                              const Quiver& q, const RepPoint& w, const GroupTuple& b) {
    return f.eval(act(q, b, w)) == chi.eval(b.at_vertex(vertex)) * f.eval(w);
}

namespace {

constexpr int kSampleRange = 20;

// Per-trial false-pass probability if the identity were wrong: deg / |sample set|.
std::string schwartz_zippel_note(int degree, int range) {
    const long set_size = 2L * range + 1;
    return std::to_string(degree) + "/" + std::to_string(set_size) + " per trial";
}

int composed_degree_bound(const InvariantFn& f, int n) {
    // Entries of g w g^{-1} have degree <= n + 1 in the entries of (g, w).
    return f.degree_bound * (n + 1);
}

} // namespace

Verdict verify_invariance(const InvariantFn& f, const Quiver& q, int n, std::uint64_t seed,
                          int trials) {
    if (trials < 1) throw PreconditionError("verify_invariance needs trials >= 1");
    Verdict v;
    v.degree_bound = composed_degree_bound(f, n);
    v.sample_range = kSampleRange;
    v.error_bound = schwartz_zippel_note(v.degree_bound, kSampleRange);
    Rng rng(seed);
    for (int t = 0; t < trials; ++t) {
        const RepPoint w = random_rep_point(q, n, rng, kSampleRange);
        const GroupTuple g = random_tuple(q, n, GroupKind::Unipotent, rng);
        const Rat before = f.eval(w);
        const Rat after = f.eval(act(q, g, w));
        ++v.trials_run;
        if (after != before) {
            v.counterexample = Counterexample{t, w, g, before, after, before};
            v.passed = false;
            return v;
        }
    }
    v.passed = true;
    return v;
}

Verdict verify_semi_invariance(const InvariantFn& f, const Character& chi, int vertex,
                               const Quiver& q, int n, std::uint64_t seed, int trials) {
    if (trials < 1) throw PreconditionError("verify_semi_invariance needs trials >= 1");
    q.check_vertex(vertex, "verify_semi_invariance");
    Verdict v;
    v.degree_bound = composed_degree_bound(f, n);
    v.sample_range = kSampleRange;
    v.error_bound = schwartz_zippel_note(v.degree_bound, kSampleRange);
    Rng rng(seed);
    for (int t = 0; t < trials; ++t) {
        const RepPoint w = random_rep_point(q, n, rng, kSampleRange);
        const GroupTuple b = random_tuple(q, n, GroupKind::Borel, rng);
        const Rat before = f.eval(w);
        const Rat expected = chi.eval(b.at_vertex(vertex)) * before;
        const Rat after = f.eval(act(q, b, w));
        ++v.trials_run;
        if (after != expected) {
            v.counterexample = Counterexample{t, w, b, before, after, expected};
            v.passed = false;
            return v;
        }
    }
    v.passed = true;
    return v;
}

namespace {

// Symbolic 2x2 upper-triangular matrix of polynomials: entries (11, 12, 22).
using SymMat = std::array<Poly, 3>;

SymMat sym_mul(const SymMat& a, const SymMat& b) {
    return {a[0] * b[0], a[0] * b[1] + a[1] * b[2], a[2] * b[2]};
}

Poly sym_cross(const SymMat& wmu, const SymMat& wnu) {
    return wnu[1] * (wmu[0] - wmu[2]) - wmu[1] * (wnu[0] - wnu[2]);
}

} // namespace

SymbolicCertificate certify_jordan2x2(int k) {
    if (k < 1) throw PreconditionError("certify_jordan2x2 needs k >= 1");
    // Variables: 0 = b11, 1 = b22, 2 = t (the corner of the group element),
    // then per loop g: 3+3g = c11, 4+3g = c12, 5+3g = c22.
    const std::size_t nv = 3 + 3 * static_cast<std::size_t>(k);
    auto var = [&](std::size_t i) { return Poly::variable(nv, i); };
    auto cst = [&](int c) { return Poly::constant(nv, Rat(c)); };

    const Poly b1 = var(0), b2 = var(1), t = var(2);

    std::vector<SymMat> w;
    for (int g = 0; g < k; ++g) {
        const std::size_t base = 3 + 3 * static_cast<std::size_t>(g);
        w.push_back({var(base), var(base + 1), var(base + 2)});
    }

    // Fraction-free conjugation: M = b W adj(b) = det(b) * (b W b^{-1}), with
    // adj([[b1,t],[0,b2]]) = [[b2,-t],[0,b1]]. Degree-d homogeneity of the
    // invariants in the matrix entries turns the missing det(b)^{-1} into an
    // explicit det(b)^d factor on the other side of each identity.
    const SymMat group{b1, t, b2};
    const SymMat adjugate{b2, -t, b1};
    std::vector<SymMat> conj;
    for (int g = 0; g < k; ++g) conj.push_back(sym_mul(sym_mul(group, w[static_cast<std::size_t>(g)]), adjugate));

    // Unipotent specialization b1 = b2 = 1 makes adj(b) the exact inverse.
    const SymMat uni{cst(1), t, cst(1)};
    const SymMat uni_inv{cst(1), -t, cst(1)};
    std::vector<SymMat> uconj;
    for (int g = 0; g < k; ++g)
        uconj.push_back(sym_mul(sym_mul(uni, w[static_cast<std::size_t>(g)]), uni_inv));

    SymbolicCertificate cert;
    cert.diagonals_unipotent_invariant = true;
    cert.cross_unipotent_invariant = true;
    cert.cross_chi1_semi_invariant = true;
    cert.cross_antisymmetric = true;

    for (int g = 0; g < k; ++g) {
        const auto& m = uconj[static_cast<std::size_t>(g)];
        const auto& orig = w[static_cast<std::size_t>(g)];
        if (!(m[0] - orig[0]).is_zero() || !(m[2] - orig[2]).is_zero())
            cert.diagonals_unipotent_invariant = false;
    }

    const Poly det = b1 * b2;
    for (int mu = 0; mu < k; ++mu) {
        for (int nu = mu + 1; nu < k; ++nu) {
            const auto& wm = w[static_cast<std::size_t>(mu)];
            const auto& wn = w[static_cast<std::size_t>(nu)];
            const Poly base = sym_cross(wm, wn);

            if (!(sym_cross(uconj[static_cast<std::size_t>(mu)], uconj[static_cast<std::size_t>(nu)]) - base)
                     .is_zero())
                cert.cross_unipotent_invariant = false;

            // f is homogeneous of degree 2, so f(M) = det^2 * f(bWb^{-1})
            // and chi_1-semi-invariance reads f(M) = det^2 * (b1/b2) * f(W).
            const Poly lhs = sym_cross(conj[static_cast<std::size_t>(mu)], conj[static_cast<std::size_t>(nu)]);
            const Poly rhs = det * det * b1 * base;  // times 1/b2 moved across:
            // lhs * b2 == det^2 * b1 * base
            if (!(lhs * b2 - rhs).is_zero()) cert.cross_chi1_semi_invariant = false;

            if (!(sym_cross(wm, wn) + sym_cross(wn, wm)).is_zero())
                cert.cross_antisymmetric = false;
        }
    }
    return cert;
}

} // namespace qfr
