#ifndef QFR_MATRIX_HPP
#define QFR_MATRIX_HPP

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "qfr/rational.hpp"
#include "qfr/rng.hpp"

namespace qfr {

/// Column vector with exact rational entries.
struct Vec {
    std::vector<Rat> e;

    Vec() = default;
    explicit Vec(std::size_t dim) : e(dim) {}
    explicit Vec(std::vector<Rat> entries) : e(std::move(entries)) {}

    std::size_t dim() const { return e.size(); }
    bool is_zero() const;

    friend bool operator==(const Vec& a, const Vec& b) { return a.e == b.e; }
};

/// Row covector (element of the dual space); kept as a separate type so the
/// two sides of the pairing cannot be swapped silently.
struct Covec {
    std::vector<Rat> e;

    Covec() = default;
    explicit Covec(std::size_t dim) : e(dim) {}
    explicit Covec(std::vector<Rat> entries) : e(std::move(entries)) {}

    std::size_t dim() const { return e.size(); }
    bool is_zero() const;

    friend bool operator==(const Covec& a, const Covec& b) { return a.e == b.e; }
};

/// Dense row-major matrix over Rat. Immutable in spirit: operations return
/// fresh values, nothing mutates shared state.
class Mat {
public:
    Mat() : rows_(0), cols_(0) {}
    Mat(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), e_(rows * cols) {}

    static Mat identity(std::size_t n);
    static Mat diagonal(const std::vector<Rat>& d);
    // Row-major convenience builder, mostly for tests.
    static Mat from_rows(const std::vector<std::vector<Rat>>& rows);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }

    const Rat& at(std::size_t i, std::size_t j) const { return e_[i * cols_ + j]; }
    Rat& at(std::size_t i, std::size_t j) { return e_[i * cols_ + j]; }

    bool is_zero() const;
    bool is_upper_triangular() const;
    bool is_strictly_upper_triangular() const;
    bool is_lower_triangular() const;
    bool is_unipotent_upper() const;  // upper-triangular, unit diagonal
    bool is_borel() const;            // upper-triangular, nonzero diagonal
    bool is_diagonal() const;
    bool has_distinct_diagonal() const;

    std::vector<Rat> diagonal_entries() const;
    Rat trace() const;

    Mat transpose() const;

    Mat& operator+=(const Mat& o);
    Mat& operator-=(const Mat& o);
    friend Mat operator+(Mat a, const Mat& b) { a += b; return a; }
    friend Mat operator-(Mat a, const Mat& b) { a -= b; return a; }
    friend Mat operator*(const Mat& a, const Mat& b);
    friend Mat operator*(const Rat& c, Mat a);
    friend Vec operator*(const Mat& a, const Vec& v);
    friend Covec operator*(const Covec& w, const Mat& a);
    friend bool operator==(const Mat& a, const Mat& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.e_ == b.e_;
    }

    std::string str() const;  // small human-readable dump, one row per line

private:
    std::size_t rows_, cols_;
    std::vector<Rat> e_;
};

std::ostream& operator<<(std::ostream& os, const Mat& m);

// ---- structured operations ----

/// ab - ba, exact. Throws DimensionError unless a, b are square of equal size.
Mat commutator(const Mat& a, const Mat& b);

/// Rank-one matrix with entry (a,b) = i_a * j_b. Throws on dim mismatch.
Mat outer_product(const Vec& i, const Covec& j);

/// Exact rank via fraction-free (Bareiss) elimination on a denominator-cleared
/// integer copy.
std::size_t rank(const Mat& m);

/// Basis of { v : m v = 0 }; rank(m) + basis.size() == cols(m). Free variables
/// are set to 1 one at a time, pivot variables back-substituted exactly.
std::vector<Vec> nullspace_basis(const Mat& m);

/// Zeroes the strictly upper part, keeps entries on and below the diagonal.
/// Realizes the projection of a full matrix onto lower-closed representatives
/// of the dual of the upper-triangular algebra. Throws on non-square input.
Mat project_lower_closed(const Mat& m);

/// dim span{ r^a s^b i : a,b >= 0 }. Grows a basis until it is closed under
/// left-multiplication by both r and s (the exponent range a,b <= n-1 given by
/// Cayley-Hamilton makes that closure the whole span).
std::size_t krylov_span_dimension(const Mat& r, const Mat& s, const Vec& i);

/// For upper-triangular r with pairwise distinct diagonal entries, returns the
/// unipotent upper-triangular u with u r u^{-1} = diag(r). Solved level by
/// level on the superdiagonals by back-substitution. Throws
/// NotRegularSemisimpleError on a repeated diagonal entry.
Mat diagonalize_upper_regular(const Mat& r);

/// Exact inverse of an invertible upper-triangular matrix.
Mat invert_upper_triangular(const Mat& m);

Mat random_unipotent(std::size_t n, Rng& rng);
Mat random_borel(std::size_t n, Rng& rng);
Mat random_upper_triangular(std::size_t n, Rng& rng);
Mat random_unipotent(std::size_t n, std::uint64_t seed);
Mat random_borel(std::size_t n, std::uint64_t seed);

} // namespace qfr

#endif
