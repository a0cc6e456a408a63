#ifndef QFR_STABILIZER_HPP
#define QFR_STABILIZER_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qfr/filtered_rep.hpp"
#include "qfr/matrix.hpp"
#include "qfr/quiver.hpp"

namespace qfr {

/// Element of the Lie algebra of the per-vertex group: strictly upper slots in
/// unipotent mode, upper slots in Borel mode.
struct LieTuple {
    std::map<int, Mat> m;  // vertex -> matrix
};

struct StabilizerReport {
    GroupKind mode = GroupKind::Unipotent;
    long group_dim = 0;  // dim of the acting group
    long stab_dim = 0;
    long orbit_dim = 0;  // group_dim - stab_dim
    bool trivial = false;
    std::vector<LieTuple> basis;  // spans the Lie stabilizer
};

/// Matrix of the infinitesimal action nu -> (nu^(ha) W(a) - W(a) nu^(ta))_a.
/// Rows: upper entries of one n x n slot per arrow (arrow order, then row-major
/// upper entries). Columns: slot entries of one matrix per vertex
/// (vertex-major; strictly upper in unipotent mode, upper in Borel mode).
Mat infinitesimal_action_matrix(const Quiver& q, const RepPoint& w, GroupKind mode);

/// Stabilizer dimension via one exact nullspace computation on the action
/// matrix. For a connected unipotent group the group stabilizer is trivial
/// iff this Lie stabilizer vanishes.
StabilizerReport infinitesimal_stabilizer(const Quiver& q, const RepPoint& w, GroupKind mode);

/// Independent route: solves the stabilizer equations one superdiagonal level
/// at a time (level 0 first in Borel mode), substituting the solved lower
/// levels into each level's linear system. Agrees with
/// infinitesimal_stabilizer on stab_dim and basis span.
StabilizerReport superdiagonal_solve(const Quiver& q, const RepPoint& w,
                                     GroupKind mode = GroupKind::Unipotent);

/// dim V - dim G: the quotient dimension whenever some point has trivial
/// stabilizer (free-action dimension count).
long grosshans_dimension(const Quiver& q, int n);

struct QuotientDimensionReport {
    int n = 0;
    std::uint64_t seed = 0;
    int trials = 0;
    ClassificationReport classification;
    long dim_space = 0;
    long dim_unipotent = 0;
    long grosshans_value = 0;  // dim_space - dim_unipotent
    long min_stab_dim = 0;
    long max_orbit_dim = 0;
    bool trivial_witness_found = false;
    int witness_trial = -1;
    bool solvers_agree = true;  // both routes matched on every trial
    std::optional<long> cartan_invariant_count;  // n * |Q_1| on the Cartan route
    bool cartan_grosshans_mismatch = false;
    std::string sampling_note;  // states how many sampled points back the numbers
};

/// Samples `trials` generic points and aggregates stabilizer/orbit dimensions
/// next to the closed-form dimension counts. Stabilizer numbers are sampled
/// evidence, never a proof; the note says so explicitly.
QuotientDimensionReport quotient_dimension_report(const Quiver& q, int n, std::uint64_t seed,
                                                  int trials);

} // namespace qfr

#endif
