#ifndef QFR_INVARIANTS_HPP
#define QFR_INVARIANTS_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "qfr/filtered_rep.hpp"
#include "qfr/quiver.hpp"
#include "qfr/rational.hpp"

namespace qfr {

/// Named polynomial function on the filtered representation space with a
/// stated degree bound (used for the error estimate of randomized checks).
struct InvariantFn {
    std::string name;
    int n = 0;  // vertex dimension it applies to (0 = any)
    int degree_bound = 1;
    std::function<Rat(const RepPoint&)> eval;
};

/// Multiplicative character of the Borel group at one index:
/// chi_iota(b) = b(iota,iota) / b(iota+1,iota+1), 1-based iota < n.
struct Character {
    int iota = 1;

    Rat eval(const Mat& borel) const;
};

/// The n * |Q_1| per-arrow diagonal coordinate functions w -> w(a)(i,i); the
/// unipotent-invariant (Cartan) coordinates.
std::vector<InvariantFn> diagonal_invariants(const Quiver& q, int n);

/// Generators of the unipotent invariant algebra for the k-loop quiver at
/// n = 2: the 2k diagonal coordinates plus the k(k-1)/2 cross polynomials
///   f_{mu,nu} = c12^(nu) (c11^(mu) - c22^(mu)) - c12^(mu) (c11^(nu) - c22^(nu)),
/// mu < nu. Throws PreconditionError unless n == 2.
std::vector<InvariantFn> jordan2x2_generators(int k, int n = 2);

/// Just the cross polynomial f_{mu,nu} (1-based loop indices).
InvariantFn jordan2x2_cross(int k, int mu, int nu);

struct Counterexample {
    int trial = -1;
    RepPoint point;
    GroupTuple group;
    Rat value_before;
    Rat value_after;
    Rat expected_after;
};

struct Verdict {
    bool passed = false;
    int trials_run = 0;
    std::optional<Counterexample> counterexample;
    int degree_bound = 0;       // of f(g.w) - (expected factor) * f(w)
    int sample_range = 0;       // entries drawn from [-range, range]
    std::string error_bound;    // per-trial Schwartz-Zippel bound, reported only
};

bool invariance_holds_at(const InvariantFn& f, const Quiver& q, const RepPoint& w,
                         const GroupTuple& g);

/// Exact randomized invariance check: f(u.w) == f(w) for `trials` random
/// points and unipotent tuples. Fails fast with the first counterexample.
Verdict verify_invariance(const InvariantFn& f, const Quiver& q, int n, std::uint64_t seed,
                          int trials);

bool semi_invariance_holds_at(const InvariantFn& f, const Character& chi, int vertex,
                              const Quiver& q, const RepPoint& w, const GroupTuple& b);

/// f(b.w) == chi(b at vertex) * f(w) for random Borel tuples.
Verdict verify_semi_invariance(const InvariantFn& f, const Character& chi, int vertex,
                               const Quiver& q, int n, std::uint64_t seed, int trials);

struct SymbolicCertificate {
    bool diagonals_unipotent_invariant = false;
    bool cross_unipotent_invariant = false;
    bool cross_chi1_semi_invariant = false;
    bool cross_antisymmetric = false;  // f_{mu,nu} + f_{nu,mu} == 0 identically
    bool all() const {
        return diagonals_unipotent_invariant && cross_unipotent_invariant &&
               cross_chi1_semi_invariant && cross_antisymmetric;
    }
};

/// Full symbolic expansion of the k-loop n=2 generator identities: certifies
/// (not samples) unipotent invariance of every generator, the
/// chi_1-semi-invariance of every cross polynomial under the Borel action,
/// and antisymmetry of the cross family.
SymbolicCertificate certify_jordan2x2(int k);

} // namespace qfr

#endif
