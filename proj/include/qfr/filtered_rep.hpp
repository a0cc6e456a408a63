#ifndef QFR_FILTERED_REP_HPP
#define QFR_FILTERED_REP_HPP

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "qfr/matrix.hpp"
#include "qfr/quiver.hpp"
#include "qfr/rng.hpp"

namespace qfr {

/// Point of the filtered representation space with the complete standard
/// filtration and equal vertex dimension n: one upper-triangular n x n matrix
/// per arrow.
struct RepPoint {
    int n = 0;
    std::map<std::string, Mat> w;  // arrow id -> matrix

    const Mat& of(const std::string& arrow_id) const;
};

enum class GroupKind { Unipotent, Borel };

/// Element of the per-vertex product group: one matrix per vertex, unipotent
/// upper-triangular or invertible upper-triangular (Borel) throughout.
struct GroupTuple {
    int n = 0;
    GroupKind kind = GroupKind::Unipotent;
    std::map<int, Mat> g;  // vertex -> matrix

    const Mat& at_vertex(int v) const;
};

/// Validates shape and triangularity; throws PreconditionError/DimensionError.
void validate(const Quiver& q, const RepPoint& w);
void validate(const Quiver& q, const GroupTuple& g);

long dim_space(const Quiver& q, int n);      // |Q_1| * n(n+1)/2
long dim_unipotent(const Quiver& q, int n);  // |Q_0| * n(n-1)/2
long dim_borel(const Quiver& q, int n);      // |Q_0| * n(n+1)/2

GroupTuple identity_tuple(const Quiver& q, int n, GroupKind kind);
GroupTuple random_tuple(const Quiver& q, int n, GroupKind kind, Rng& rng);
GroupTuple tuple_product(const GroupTuple& a, const GroupTuple& b);  // vertex-wise

/// Change-of-basis action: result(a) = g(head a) * w(a) * g(tail a)^{-1}.
RepPoint act(const Quiver& q, const GroupTuple& g, const RepPoint& w);

/// Random upper-triangular point with entries in [-bound, bound]; no
/// genericity guarantee.
RepPoint random_rep_point(const Quiver& q, int n, Rng& rng, int bound = 9);

struct GenericityCondition {
    std::string kind;     // "distinct-nonzero-diagonal", "parallel-pair", "antiparallel-pair"
    std::string arrow_a;
    std::string arrow_b;  // empty for per-arrow conditions
    int iota = 0;         // 1-based row indices, 0 when not applicable
    int nu = 0;
    bool ok = false;
};

struct GenericityReport {
    std::vector<GenericityCondition> conditions;
    bool overall = false;
};

/// Exact evaluation of the open conditions that make the generic-stabilizer
/// argument go through:
///  - every arrow matrix has pairwise distinct, nonzero diagonal entries;
///  - for parallel arrow pairs a, a' (same tail and head, not loops):
///    x'_ii x_nn - x_ii x'_nn != 0 for all i < n (levels of the induction);
///  - for antiparallel pairs (a: u -> v, a': v -> u):
///    x_ii y_ii != x_nn y_nn for all i < n.
GenericityReport check_genericity(const Quiver& q, const RepPoint& w);

/// Deterministic sampler whose output passes check_genericity; retries with a
/// widening entry range and throws InternalInvariantError after the retry
/// budget (practically unreachable).
RepPoint sample_generic(const Quiver& q, int n, std::uint64_t seed);

} // namespace qfr

#endif
