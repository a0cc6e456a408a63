#include "qfr/matrix.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>

#include "qfr/errors.hpp"

namespace qfr {

bool Vec::is_zero() const {
    return std::all_of(e.begin(), e.end(), [](const Rat& r) { return r.is_zero(); });
}

bool Covec::is_zero() const {
    return std::all_of(e.begin(), e.end(), [](const Rat& r) { return r.is_zero(); });
}

Mat Mat::identity(std::size_t n) {
    Mat m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = Rat(1);
    return m;
}

Mat Mat::diagonal(const std::vector<Rat>& d) {
    Mat m(d.size(), d.size());
    for (std::size_t i = 0; i < d.size(); ++i) m.at(i, i) = d[i];
    return m;
}

Mat Mat::from_rows(const std::vector<std::vector<Rat>>& rows) {
    if (rows.empty()) return Mat();
    Mat m(rows.size(), rows[0].size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != m.cols_)
            throw DimensionError("ragged row list in Mat::from_rows");
        for (std::size_t j = 0; j < m.cols_; ++j) m.at(i, j) = rows[i][j];
    }
    return m;
}

bool Mat::is_zero() const {
    return std::all_of(e_.begin(), e_.end(), [](const Rat& r) { return r.is_zero(); });
}

bool Mat::is_upper_triangular() const {
    if (!is_square()) return false;
    for (std::size_t i = 1; i < rows_; ++i)
        for (std::size_t j = 0; j < i; ++j)
            if (!at(i, j).is_zero()) return false;
    return true;
}

bool Mat::is_strictly_upper_triangular() const {
    if (!is_upper_triangular()) return false;
    for (std::size_t i = 0; i < rows_; ++i)
        if (!at(i, i).is_zero()) return false;
    return true;
}

bool Mat::is_lower_triangular() const {
    if (!is_square()) return false;
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = i + 1; j < cols_; ++j)
            if (!at(i, j).is_zero()) return false;
    return true;
}

bool Mat::is_unipotent_upper() const {
    if (!is_upper_triangular()) return false;
    for (std::size_t i = 0; i < rows_; ++i)
        if (at(i, i) != Rat(1)) return false;
    return true;
}

bool Mat::is_borel() const {
    if (!is_upper_triangular()) return false;
    for (std::size_t i = 0; i < rows_; ++i)
        if (at(i, i).is_zero()) return false;
    return true;
}

bool Mat::is_diagonal() const {
    if (!is_square()) return false;
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            if (i != j && !at(i, j).is_zero()) return false;
    return true;
}

bool Mat::has_distinct_diagonal() const {
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = i + 1; j < rows_; ++j)
            if (at(i, i) == at(j, j)) return false;
    return true;
}

std::vector<Rat> Mat::diagonal_entries() const {
    std::vector<Rat> d(std::min(rows_, cols_));
    for (std::size_t i = 0; i < d.size(); ++i) d[i] = at(i, i);
    return d;
}

Rat Mat::trace() const {
    if (!is_square()) throw DimensionError("trace of non-square matrix");
    Rat t;
    for (std::size_t i = 0; i < rows_; ++i) t += at(i, i);
    return t;
}

Mat Mat::transpose() const {
    Mat t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
    return t;
}

Mat& Mat::operator+=(const Mat& o) {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw DimensionError("matrix sum shape mismatch");
    for (std::size_t k = 0; k < e_.size(); ++k) e_[k] += o.e_[k];
    return *this;
}

Mat& Mat::operator-=(const Mat& o) {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw DimensionError("matrix difference shape mismatch");
    for (std::size_t k = 0; k < e_.size(); ++k) e_[k] -= o.e_[k];
    return *this;
}

Mat operator*(const Mat& a, const Mat& b) {
    if (a.cols_ != b.rows_) throw DimensionError("matrix product shape mismatch");
    Mat c(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
        for (std::size_t k = 0; k < a.cols_; ++k) {
            const Rat& aik = a.at(i, k);
            if (aik.is_zero()) continue;
            for (std::size_t j = 0; j < b.cols_; ++j) c.at(i, j) += aik * b.at(k, j);
        }
    return c;
}

Mat operator*(const Rat& c, Mat a) {
    for (auto& x : a.e_) x *= c;
    return a;
}

Vec operator*(const Mat& a, const Vec& v) {
    if (a.cols_ != v.dim()) throw DimensionError("matrix-vector shape mismatch");
    Vec r(a.rows_);
    for (std::size_t i = 0; i < a.rows_; ++i)
        for (std::size_t j = 0; j < a.cols_; ++j) r.e[i] += a.at(i, j) * v.e[j];
    return r;
}

Covec operator*(const Covec& w, const Mat& a) {
    if (w.dim() != a.rows_) throw DimensionError("covector-matrix shape mismatch");
    Covec r(a.cols_);
    for (std::size_t j = 0; j < a.cols_; ++j)
        for (std::size_t i = 0; i < a.rows_; ++i) r.e[j] += w.e[i] * a.at(i, j);
    return r;
}

std::string Mat::str() const {
    std::ostringstream os;
    for (std::size_t i = 0; i < rows_; ++i) {
        os << "[";
        for (std::size_t j = 0; j < cols_; ++j) os << (j ? " " : "") << at(i, j).str();
        os << "]";
        if (i + 1 < rows_) os << "\n";
    }
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const Mat& m) { return os << m.str(); }

Mat commutator(const Mat& a, const Mat& b) {
    if (!a.is_square() || !b.is_square() || a.rows() != b.rows())
        throw DimensionError("commutator needs square matrices of equal size");
    return a * b - b * a;
}

Mat outer_product(const Vec& i, const Covec& j) {
    if (i.dim() != j.dim()) throw DimensionError("outer product dim mismatch");
    Mat m(i.dim(), j.dim());
    for (std::size_t a = 0; a < i.dim(); ++a)
        for (std::size_t b = 0; b < j.dim(); ++b) m.at(a, b) = i.e[a] * j.e[b];
    return m;
}

Mat project_lower_closed(const Mat& m) {
    if (!m.is_square()) throw DimensionError("project_lower_closed needs a square matrix");
    Mat r(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j <= i; ++j) r.at(i, j) = m.at(i, j);
    return r;
}

namespace {

// Fraction-free row echelon form. Rows are scaled to integers first, then
// Bareiss one-step elimination keeps every intermediate an exact integer and
// controls entry growth. Returns the echelon matrix (over Rat, integral
// entries), its rank, and the pivot column of each of the first `rank` rows.
struct EchelonForm {
    Mat m;
    std::size_t rank = 0;
    std::vector<std::size_t> pivot_cols;
};

EchelonForm bareiss_echelon(const Mat& input) {
    const std::size_t rows = input.rows(), cols = input.cols();

    // Clear denominators row by row; scaling a row by a positive integer
    // changes neither rank nor nullspace.
    std::vector<std::vector<mpz_class>> a(rows, std::vector<mpz_class>(cols));
    for (std::size_t i = 0; i < rows; ++i) {
        mpz_class l = 1;
        for (std::size_t j = 0; j < cols; ++j)
            l = lcm(l, input.at(i, j).denominator());
        for (std::size_t j = 0; j < cols; ++j) {
            const Rat scaled = input.at(i, j) * Rat(mpq_class(l));
            a[i][j] = scaled.numerator();  // denominator is 1 by construction
        }
    }

    EchelonForm out;
    mpz_class prev = 1;
    std::size_t row = 0;
    for (std::size_t col = 0; col < cols && row < rows; ++col) {
        std::size_t piv = row;
        while (piv < rows && a[piv][col] == 0) ++piv;
        if (piv == rows) continue;
        std::swap(a[row], a[piv]);
        for (std::size_t i = row + 1; i < rows; ++i) {
            for (std::size_t j = col + 1; j < cols; ++j) {
                mpz_class t = a[i][j] * a[row][col] - a[i][col] * a[row][j];
                mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
                a[i][j] = t;
            }
            a[i][col] = 0;
        }
        prev = a[row][col];
        out.pivot_cols.push_back(col);
        ++row;
    }
    out.rank = row;

    out.m = Mat(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) out.m.at(i, j) = Rat(mpq_class(a[i][j]));
    return out;
}

} // namespace

std::size_t rank(const Mat& m) { return bareiss_echelon(m).rank; }

std::vector<Vec> nullspace_basis(const Mat& m) {
    const EchelonForm ef = bareiss_echelon(m);
    const std::size_t cols = m.cols();

    std::vector<bool> is_pivot(cols, false);
    for (std::size_t c : ef.pivot_cols) is_pivot[c] = true;

    std::vector<Vec> basis;
    for (std::size_t free_col = 0; free_col < cols; ++free_col) {
        if (is_pivot[free_col]) continue;
        Vec v(cols);
        v.e[free_col] = Rat(1);
        // Back-substitute the pivot variables, bottom row first.
        for (std::size_t t = ef.rank; t-- > 0;) {
            const std::size_t pc = ef.pivot_cols[t];
            Rat acc;
            for (std::size_t j = pc + 1; j < cols; ++j) {
                if (!v.e[j].is_zero() && !ef.m.at(t, j).is_zero())
                    acc += ef.m.at(t, j) * v.e[j];
            }
            v.e[pc] = -acc / ef.m.at(t, pc);
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

std::size_t krylov_span_dimension(const Mat& r, const Mat& s, const Vec& i) {
    if (!r.is_square() || !s.is_square() || r.rows() != s.rows() || r.rows() != i.dim())
        throw DimensionError("krylov_span_dimension size mismatch");
    const std::size_t n = r.rows();
    if (n == 0) return 0;

    // Grow a basis of span{ r^a s^b i }; a candidate enters iff it raises the
    // rank. Cayley-Hamilton caps both exponents at n-1, and reaching dimension
    // n stops the walk early.
    std::vector<Vec> basis;
    auto try_add = [&](const Vec& v) {
        if (v.is_zero() || basis.size() == n) return;
        Mat probe(basis.size() + 1, n);
        for (std::size_t b = 0; b < basis.size(); ++b)
            for (std::size_t j = 0; j < n; ++j) probe.at(b, j) = basis[b].e[j];
        for (std::size_t j = 0; j < n; ++j) probe.at(basis.size(), j) = v.e[j];
        if (rank(probe) == basis.size() + 1) basis.push_back(v);
    };

    Vec s_pow = i;
    for (std::size_t b = 0; b < n && basis.size() < n; ++b) {
        if (b > 0) s_pow = s * s_pow;
        Vec v = s_pow;
        for (std::size_t a = 0; a < n && basis.size() < n; ++a) {
            if (a > 0) v = r * v;
            try_add(v);
        }
    }
    return basis.size();
}

Mat invert_upper_triangular(const Mat& m) {
    if (!m.is_borel())
        throw PreconditionError("invert_upper_triangular needs invertible upper-triangular input");
    const std::size_t n = m.rows();
    Mat inv(n, n);
    for (std::size_t j = n; j-- > 0;) {
        // Solve m x = e_j column by column, bottom up.
        for (std::size_t i = j + 1; i-- > 0;) {
            Rat acc = (i == j) ? Rat(1) : Rat(0);
            for (std::size_t k = i + 1; k <= j; ++k) acc -= m.at(i, k) * inv.at(k, j);
            inv.at(i, j) = acc / m.at(i, i);
        }
    }
    return inv;
}

Mat diagonalize_upper_regular(const Mat& r) {
    if (!r.is_upper_triangular())
        throw PreconditionError("diagonalize_upper_regular needs upper-triangular input");
    if (!r.has_distinct_diagonal())
        throw NotRegularSemisimpleError("repeated diagonal entry: not regular semisimple");
    const std::size_t n = r.rows();

    // Solve u r = diag(r) u on each superdiagonal level; the level-l entry
    // u(i,j), j-i = l, only involves already-solved shorter entries:
    //   u(i,j) (r(j,j) - r(i,i)) = - sum_{i<=m<j} u(i,m) r(m,j).
    Mat u = Mat::identity(n);
    for (std::size_t level = 1; level < n; ++level) {
        for (std::size_t i = 0; i + level < n; ++i) {
            const std::size_t j = i + level;
            Rat acc;
            for (std::size_t m = i; m < j; ++m) acc += u.at(i, m) * r.at(m, j);
            u.at(i, j) = -acc / (r.at(j, j) - r.at(i, i));
        }
    }

    const Mat check = u * r * invert_upper_triangular(u);
    if (!check.is_diagonal())
        throw InternalInvariantError("diagonalize_upper_regular produced a non-diagonal conjugate");
    return u;
}

Mat random_unipotent(std::size_t n, Rng& rng) {
    Mat m = Mat::identity(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            m.at(i, j) = Rat(rng.uniform(-9, 9));
    return m;
}

Mat random_borel(std::size_t n, Rng& rng) {
    Mat m = random_unipotent(n, rng);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = Rat(rng.uniform_nonzero(-9, 9));
    return m;
}

Mat random_upper_triangular(std::size_t n, Rng& rng) {
    Mat m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j)
            m.at(i, j) = Rat(rng.uniform(-9, 9));
    return m;
}

Mat random_unipotent(std::size_t n, std::uint64_t seed) {
    Rng rng(seed);
    return random_unipotent(n, rng);
}

Mat random_borel(std::size_t n, std::uint64_t seed) {
    Rng rng(seed);
    return random_borel(n, rng);
}

} // namespace qfr
