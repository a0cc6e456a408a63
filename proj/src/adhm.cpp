#include "qfr/adhm.hpp"

#include <algorithm>

#include "qfr/errors.hpp"

namespace qfr {

void validate(const ADHMData& d) {
    const std::size_t n = static_cast<std::size_t>(d.n);
    if (d.n < 1) throw PreconditionError("ADHMData needs n >= 1");
    if (d.r.rows() != n || d.r.cols() != n || d.s.rows() != n || d.s.cols() != n ||
        d.i.dim() != n || d.j.dim() != n)
        throw DimensionError("ADHMData slot sizes disagree");
    if (!d.r.is_upper_triangular()) throw PreconditionError("ADHMData: r must be upper-triangular");
    if (!d.s.is_lower_triangular()) throw PreconditionError("ADHMData: s must be lower-triangular");
}

Mat moment_map(const ADHMData& d) {
    validate(d);
    return project_lower_closed(commutator(d.r, d.s) + outer_product(d.i, d.j));
}

bool in_zero_fiber(const ADHMData& d) { return moment_map(d).is_zero(); }

bool is_rss(const Mat& r) { return r.has_distinct_diagonal(); }

bool is_rss(const ADHMData& d) { return is_rss(d.r); }

std::vector<Rat> s_prime(const Mat& r, const Mat& s) {
    if (!r.is_square() || !s.is_square() || r.rows() != s.rows())
        throw DimensionError("s_prime needs square matrices of equal size");
    if (!r.is_upper_triangular()) throw PreconditionError("s_prime: r must be upper-triangular");
    if (!r.has_distinct_diagonal())
        throw NotRegularSemisimpleError("s_prime: repeated diagonal entry in r");

    const std::size_t n = r.rows();
    std::vector<Rat> out(n);
    for (std::size_t iota = 0; iota < n; ++iota) {
        Mat prod = Mat::identity(n);  // empty product when n == 1
        for (std::size_t k = 0; k < n; ++k) {
            if (k == iota) continue;
            Mat lk = r;
            for (std::size_t m = 0; m < n; ++m) lk.at(m, m) -= r.at(k, k);
            prod = prod * lk;
        }
        const Rat denom = prod.trace();
        Rat closed(1);
        for (std::size_t k = 0; k < n; ++k)
            if (k != iota) closed *= r.at(iota, iota) - r.at(k, k);
        if (denom != closed || denom.is_zero())
            throw InternalInvariantError("s_prime: denominator trace disagrees with its closed form");
        out[iota] = (prod * s).trace() / denom;
    }
    return out;
}

ReducedPoint reduce_rss(const ADHMData& d) {
    validate(d);
    if (!in_zero_fiber(d)) throw PreconditionError("reduce_rss: point is not in the zero fiber");
    if (!is_rss(d)) throw NotRegularSemisimpleError("reduce_rss: r is not regular semisimple");
    return {d.r.diagonal_entries(), s_prime(d.r, d.s)};
}

ADHMData borel_act(const ADHMData& d, const Mat& b) {
    validate(d);
    if (!b.is_borel() || b.rows() != static_cast<std::size_t>(d.n))
        throw PreconditionError("borel_act needs an invertible upper-triangular matrix of matching size");
    const Mat binv = invert_upper_triangular(b);
    ADHMData out;
    out.n = d.n;
    out.r = b * d.r * binv;
    out.s = project_lower_closed(b * d.s * binv);
    out.i = b * d.i;
    out.j = d.j * binv;
    return out;
}

bool y_membership(const Mat& r, const Mat& s, const Vec& i) {
    if (!r.is_square() || !s.is_square() || r.rows() != s.rows() || r.rows() != i.dim())
        throw DimensionError("y_membership size mismatch");
    if (!r.is_upper_triangular()) throw PreconditionError("y_membership: r must be upper-triangular");
    if (!s.is_lower_triangular()) throw PreconditionError("y_membership: s must be lower-triangular");
    if (!commutator(r, s).is_zero()) return false;
    return krylov_span_dimension(r, s, i) == r.rows();
}

bool y_rss_membership(const Mat& r, const Mat& s, const Vec& i) {
    return y_membership(r, s, i) && is_rss(r);
}

ADHMData canonical_form_y_rss(const Mat& r, const Mat& s, const Vec& i) {
    if (!y_rss_membership(r, s, i))
        throw PreconditionError("canonical_form_y_rss: input is not a regular-semisimple commuting "
                                "triple with cyclic vector");
    const std::size_t n = r.rows();

    const Mat u = diagonalize_upper_regular(r);
    const Mat uinv = invert_upper_triangular(u);
    const Mat r_diag = u * r * uinv;
    // Conjugation preserves the commutator, and a diagonal regular matrix only
    // commutes with diagonal ones, so s lands on the diagonal too.
    const Mat s_conj = u * s * uinv;
    if (!s_conj.is_diagonal())
        throw InternalInvariantError("canonical_form_y_rss: conjugated s is not diagonal");
    const Vec i_conj = u * i;

    // Torus rescale: t i = (1,...,1) with t = diag(1/i_m); diagonal r, s are
    // untouched. Cyclicity guarantees nonzero entries.
    ADHMData out;
    out.n = static_cast<int>(n);
    out.r = r_diag;
    out.s = s_conj;
    out.i = Vec(n);
    out.j = Covec(n);
    for (std::size_t m = 0; m < n; ++m) {
        if (i_conj.e[m].is_zero())
            throw InternalInvariantError("canonical_form_y_rss: cyclic vector has a zero entry "
                                         "after diagonalization");
        out.i.e[m] = Rat(1);
    }
    return out;
}

IsospectralPoint forward_birational(const Mat& r, const Mat& s, const Vec& i) {
    const ADHMData canon = canonical_form_y_rss(r, s, i);
    IsospectralPoint p;
    const std::size_t n = static_cast<std::size_t>(canon.n);
    for (std::size_t m = 0; m < n; ++m)
        p.ordered.emplace_back(canon.r.at(m, m), canon.s.at(m, m));
    p.unordered_normal_form = p.ordered;
    std::sort(p.unordered_normal_form.begin(), p.unordered_normal_form.end());
    p.cyclic_marker = true;
    return p;
}

ADHMData inverse_birational(const IsospectralPoint& p) {
    const std::size_t n = p.ordered.size();
    if (n == 0) throw PreconditionError("inverse_birational: empty point list");
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = a + 1; b < n; ++b)
            if (p.ordered[a].first == p.ordered[b].first)
                throw PreconditionError("inverse_birational: repeated x-coordinate");

    ADHMData d;
    d.n = static_cast<int>(n);
    std::vector<Rat> xs(n), ys(n);
    for (std::size_t m = 0; m < n; ++m) {
        xs[m] = p.ordered[m].first;
        ys[m] = p.ordered[m].second;
    }
    d.r = Mat::diagonal(xs);
    d.s = Mat::diagonal(ys);
    d.i = Vec(n);
    for (std::size_t m = 0; m < n; ++m) d.i.e[m] = Rat(1);
    d.j = Covec(n);
    return d;
}

namespace {

std::vector<Rat> distinct_values(int n, Rng& rng, int bound) {
    std::vector<Rat> vals;
    while (static_cast<int>(vals.size()) < n) {
        const Rat v(rng.uniform(-bound, bound));
        if (std::find(vals.begin(), vals.end(), v) == vals.end()) vals.push_back(v);
    }
    return vals;
}

} // namespace

ADHMData sample_zero_fiber_rss(int n, Rng& rng, std::vector<Rat>* planted_r,
                               std::vector<Rat>* planted_s) {
    if (n < 1) throw PreconditionError("sample_zero_fiber_rss needs n >= 1");
    const std::size_t un = static_cast<std::size_t>(n);
    const std::vector<Rat> rdiag = distinct_values(n, rng, 9 + n);
    std::vector<Rat> sdiag(un);
    for (auto& v : sdiag) v = Rat(rng.uniform(-9, 9));

    ADHMData d;
    d.n = n;
    d.r = Mat::diagonal(rdiag);
    d.s = Mat::diagonal(sdiag);
    d.i = Vec(un);
    for (auto& v : d.i.e) v = Rat(rng.uniform(-9, 9));
    d.j = Covec(un);

    if (planted_r) *planted_r = rdiag;
    if (planted_s) *planted_s = sdiag;
    return borel_act(d, random_borel(un, rng));
}

void sample_y_rss(int n, Rng& rng, Mat& r, Mat& s, Vec& i) {
    if (n < 1) throw PreconditionError("sample_y_rss needs n >= 1");
    const std::size_t un = static_cast<std::size_t>(n);
    for (int attempt = 0; attempt < 10000; ++attempt) {
        const std::vector<Rat> rdiag = distinct_values(n, rng, 9 + n);
        // s-values drawn from a small pool so repeats (nontrivial blocks) occur.
        std::vector<Rat> sdiag(un);
        for (auto& v : sdiag) v = Rat(rng.uniform(-2, 2));

        r = Mat::diagonal(rdiag);
        // Off-diagonal entries of r only where the s-values agree, keeping
        // [r, s] = 0 while making r genuinely non-diagonal.
        for (std::size_t a = 0; a < un; ++a)
            for (std::size_t b = a + 1; b < un; ++b)
                if (sdiag[a] == sdiag[b]) r.at(a, b) = Rat(rng.uniform(-9, 9));
        s = Mat::diagonal(sdiag);
        i = Vec(un);
        for (auto& v : i.e) v = Rat(rng.uniform_nonzero(-9, 9));

        if (y_rss_membership(r, s, i)) return;
    }
    throw InternalInvariantError("sample_y_rss exhausted its retry budget");
}

IsospectralPoint sample_isospectral(int n, Rng& rng) {
    if (n < 1) throw PreconditionError("sample_isospectral needs n >= 1");
    IsospectralPoint p;
    const std::vector<Rat> xs = distinct_values(n, rng, 9 + n);
    for (int m = 0; m < n; ++m) p.ordered.emplace_back(xs[static_cast<std::size_t>(m)], Rat(rng.uniform(-9, 9)));
    p.unordered_normal_form = p.ordered;
    std::sort(p.unordered_normal_form.begin(), p.unordered_normal_form.end());
    p.cyclic_marker = true;
    return p;
}

} // namespace qfr
