#ifndef QFR_ADHM_HPP
#define QFR_ADHM_HPP

#include <cstdint>
#include <utility>
#include <vector>

#include "qfr/matrix.hpp"
#include "qfr/rng.hpp"

namespace qfr {

/// Point of the cotangent space of (upper-triangular algebra) x C^n:
/// r upper-triangular, s a lower-triangular representative of the dual slot,
/// i a column vector, j a row covector.
struct ADHMData {
    int n = 0;
    Mat r;
    Mat s;
    Vec i;
    Covec j;
};

/// Shape validation; throws PreconditionError/DimensionError.
void validate(const ADHMData& d);

/// [r,s] + i (x) j, projected to the lower-closed representative of the dual
/// space. The commutator is taken in the ambient matrix algebra with the
/// lower-triangular representative of s.
Mat moment_map(const ADHMData& d);

bool in_zero_fiber(const ADHMData& d);

/// Pairwise distinct diagonal entries of a triangular matrix = regular
/// semisimple.
bool is_rss(const Mat& r);
bool is_rss(const ADHMData& d);

/// The reduction coordinates: for each index, with l_k(r) = r - r(k,k) I,
///   s'_iota = tr(prod_{k != iota} l_k(r))^{-1} * tr(prod_{k != iota} l_k(r) s).
/// The denominator trace is verified against its closed form
/// prod_{k != iota} (r(iota,iota) - r(k,k)) on every call. Throws
/// NotRegularSemisimpleError on repeated diagonal entries.
std::vector<Rat> s_prime(const Mat& r, const Mat& s);

/// Point of the reduced space: the diagonal of r and the s' coordinates.
struct ReducedPoint {
    std::vector<Rat> r_diag;
    std::vector<Rat> s_diag;

    friend bool operator==(const ReducedPoint& a, const ReducedPoint& b) {
        return a.r_diag == b.r_diag && a.s_diag == b.s_diag;
    }
};

/// Hamiltonian-reduction coordinates of a regular-semisimple zero-fiber point;
/// constant on Borel orbits. Preconditions (zero fiber, rss) are reported
/// individually.
ReducedPoint reduce_rss(const ADHMData& d);

/// Coadjoint-flavored Borel action on the cotangent data:
/// (b r b^{-1}, lower-projection of b s b^{-1}, b i, j b^{-1}).
ADHMData borel_act(const ADHMData& d, const Mat& b);

/// Commuting-pair-with-cyclic-vector conditions: [r,s] = 0 in the ambient
/// algebra and the iterates r^a s^b i span. The rss variant adds regular
/// semisimplicity of r.
bool y_membership(const Mat& r, const Mat& s, const Vec& i);
bool y_rss_membership(const Mat& r, const Mat& s, const Vec& i);

/// Normal form of a regular-semisimple commuting triple under the Borel
/// action: r and s diagonal (diagonal order preserved; upper-triangular
/// conjugation cannot permute it), the cyclic vector rescaled to all ones,
/// j = 0. Cyclicity forces every entry of the diagonalized vector to be
/// nonzero; a zero entry is an internal invariant violation.
ADHMData canonical_form_y_rss(const Mat& r, const Mat& s, const Vec& i);

/// n ordered planar points plus the forgetful unordered normal form
/// (lexicographically sorted multiset). The ordered leg of the isospectral
/// construction, restricted to distinct first coordinates.
struct IsospectralPoint {
    std::vector<std::pair<Rat, Rat>> ordered;
    std::vector<std::pair<Rat, Rat>> unordered_normal_form;
    bool cyclic_marker = false;

    friend bool operator==(const IsospectralPoint& a, const IsospectralPoint& b) {
        return a.ordered == b.ordered && a.unordered_normal_form == b.unordered_normal_form &&
               a.cyclic_marker == b.cyclic_marker;
    }
};

/// Canonicalize, then read off ((r_11, s_11), ..., (r_nn, s_nn)).
IsospectralPoint forward_birational(const Mat& r, const Mat& s, const Vec& i);

/// (diag of x-coordinates in the given order, diag of y-coordinates, all-ones
/// vector, j = 0). Requires pairwise distinct x-coordinates.
ADHMData inverse_birational(const IsospectralPoint& p);

// Seeded samplers shared by tests, the CLI battery, and the self checks.

/// Zero-fiber rss point: a planted diagonal commuting pair (distinct r
/// diagonal) with j = 0, pushed around by a random Borel element via
/// borel_act. Returns the planted diagonals through the out-parameters.
ADHMData sample_zero_fiber_rss(int n, Rng& rng, std::vector<Rat>* planted_r = nullptr,
                               std::vector<Rat>* planted_s = nullptr);

/// Random member of the commuting rss locus with a cyclic vector: s diagonal
/// (values may repeat), r upper-triangular with distinct diagonal and
/// off-diagonal support only where the s-values agree, i entrywise nonzero.
void sample_y_rss(int n, Rng& rng, Mat& r, Mat& s, Vec& i);

IsospectralPoint sample_isospectral(int n, Rng& rng);

} // namespace qfr

#endif
