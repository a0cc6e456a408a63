#include "qfr/filtered_rep.hpp"

#include "qfr/errors.hpp"

namespace qfr {

const Mat& RepPoint::of(const std::string& arrow_id) const {
    auto it = w.find(arrow_id);
    if (it == w.end()) throw PreconditionError("RepPoint has no matrix for arrow '" + arrow_id + "'");
    return it->second;
}

const Mat& GroupTuple::at_vertex(int v) const {
    auto it = g.find(v);
    if (it == g.end()) throw PreconditionError("GroupTuple has no matrix for vertex " + std::to_string(v));
    return it->second;
}

void validate(const Quiver& q, const RepPoint& w) {
    if (w.n < 1) throw PreconditionError("RepPoint needs n >= 1");
    if (w.w.size() != q.arrows().size())
        throw PreconditionError("RepPoint arrow count does not match the quiver");
    for (const Arrow& a : q.arrows()) {
        const Mat& m = w.of(a.id);
        if (m.rows() != static_cast<std::size_t>(w.n) || m.cols() != static_cast<std::size_t>(w.n))
            throw DimensionError("RepPoint matrix for '" + a.id + "' has wrong size");
        if (!m.is_upper_triangular())
            throw PreconditionError("RepPoint matrix for '" + a.id + "' is not upper-triangular");
    }
}

void validate(const Quiver& q, const GroupTuple& g) {
    if (g.n < 1) throw PreconditionError("GroupTuple needs n >= 1");
    if (g.g.size() != static_cast<std::size_t>(q.vertex_count()))
        throw PreconditionError("GroupTuple vertex count does not match the quiver");
    for (int v = 1; v <= q.vertex_count(); ++v) {
        const Mat& m = g.at_vertex(v);
        if (m.rows() != static_cast<std::size_t>(g.n) || m.cols() != static_cast<std::size_t>(g.n))
            throw DimensionError("GroupTuple matrix at vertex " + std::to_string(v) + " has wrong size");
        if (g.kind == GroupKind::Unipotent && !m.is_unipotent_upper())
            throw PreconditionError("GroupTuple matrix at vertex " + std::to_string(v) +
                                    " is not unipotent upper-triangular");
        if (g.kind == GroupKind::Borel && !m.is_borel())
            throw PreconditionError("GroupTuple matrix at vertex " + std::to_string(v) +
                                    " is not invertible upper-triangular");
    }
}

long dim_space(const Quiver& q, int n) {
    if (n < 1) throw PreconditionError("dim_space needs n >= 1");
    return static_cast<long>(q.arrows().size()) * n * (n + 1) / 2;
}

long dim_unipotent(const Quiver& q, int n) {
    if (n < 1) throw PreconditionError("dim_unipotent needs n >= 1");
    return static_cast<long>(q.vertex_count()) * n * (n - 1) / 2;
}

long dim_borel(const Quiver& q, int n) {
    if (n < 1) throw PreconditionError("dim_borel needs n >= 1");
    return static_cast<long>(q.vertex_count()) * n * (n + 1) / 2;
}

GroupTuple identity_tuple(const Quiver& q, int n, GroupKind kind) {
    GroupTuple t;
    t.n = n;
    t.kind = kind;
    for (int v = 1; v <= q.vertex_count(); ++v)
        t.g.emplace(v, Mat::identity(static_cast<std::size_t>(n)));
    return t;
}

GroupTuple random_tuple(const Quiver& q, int n, GroupKind kind, Rng& rng) {
    GroupTuple t;
    t.n = n;
    t.kind = kind;
    for (int v = 1; v <= q.vertex_count(); ++v) {
        Mat m = (kind == GroupKind::Unipotent) ? random_unipotent(static_cast<std::size_t>(n), rng)
                                               : random_borel(static_cast<std::size_t>(n), rng);
        t.g.emplace(v, std::move(m));
    }
    return t;
}

GroupTuple tuple_product(const GroupTuple& a, const GroupTuple& b) {
    if (a.n != b.n || a.g.size() != b.g.size())
        throw DimensionError("tuple_product shape mismatch");
    GroupTuple t;
    t.n = a.n;
    t.kind = (a.kind == GroupKind::Borel || b.kind == GroupKind::Borel) ? GroupKind::Borel
                                                                        : GroupKind::Unipotent;
    for (const auto& [v, m] : a.g) t.g.emplace(v, m * b.at_vertex(v));
    return t;
}

RepPoint act(const Quiver& q, const GroupTuple& g, const RepPoint& w) {
    validate(q, w);
    validate(q, g);
    if (g.n != w.n) throw DimensionError("act: group and point sizes differ");
    RepPoint out;
    out.n = w.n;
    for (const Arrow& a : q.arrows()) {
        Mat m = g.at_vertex(a.head) * w.of(a.id) * invert_upper_triangular(g.at_vertex(a.tail));
        out.w.emplace(a.id, std::move(m));
    }
    return out;
}

RepPoint random_rep_point(const Quiver& q, int n, Rng& rng, int bound) {
    if (n < 1) throw PreconditionError("random_rep_point needs n >= 1");
    RepPoint p;
    p.n = n;
    for (const Arrow& a : q.arrows()) {
        Mat m(static_cast<std::size_t>(n), static_cast<std::size_t>(n));
        for (std::size_t i = 0; i < m.rows(); ++i)
            for (std::size_t j = i; j < m.cols(); ++j)
                m.at(i, j) = Rat(rng.uniform(-bound, bound));
        p.w.emplace(a.id, std::move(m));
    }
    return p;
}

GenericityReport check_genericity(const Quiver& q, const RepPoint& w) {
    validate(q, w);
    const std::size_t n = static_cast<std::size_t>(w.n);
    GenericityReport rep;
    rep.overall = true;

    auto push = [&](GenericityCondition c) {
        rep.overall = rep.overall && c.ok;
        rep.conditions.push_back(std::move(c));
    };

    for (const Arrow& a : q.arrows()) {
        const Mat& m = w.of(a.id);
        bool ok = m.has_distinct_diagonal();
        for (std::size_t i = 0; i < n && ok; ++i)
            if (m.at(i, i).is_zero()) ok = false;
        push({"distinct-nonzero-diagonal", a.id, "", 0, 0, ok});
    }

    const auto& arrows = q.arrows();
    for (std::size_t p = 0; p < arrows.size(); ++p) {
        for (std::size_t r = p + 1; r < arrows.size(); ++r) {
            const Arrow& a = arrows[p];
            const Arrow& b = arrows[r];
            if (a.is_loop() || b.is_loop()) continue;
            const bool parallel = a.tail == b.tail && a.head == b.head;
            const bool antiparallel = a.tail == b.head && a.head == b.tail;
            if (!parallel && !antiparallel) continue;
            const Mat& x = w.of(a.id);
            const Mat& y = w.of(b.id);
            for (std::size_t i = 0; i < n; ++i) {
                for (std::size_t v = i + 1; v < n; ++v) {
                    GenericityCondition c;
                    c.arrow_a = a.id;
                    c.arrow_b = b.id;
                    c.iota = static_cast<int>(i) + 1;
                    c.nu = static_cast<int>(v) + 1;
                    if (parallel) {
                        // determinant of [[x(v,v), -x(i,i)], [y(v,v), -y(i,i)]]
                        c.kind = "parallel-pair";
                        c.ok = !(y.at(i, i) * x.at(v, v) - x.at(i, i) * y.at(v, v)).is_zero();
                    } else {
                        // products of opposite diagonals must differ
                        c.kind = "antiparallel-pair";
                        c.ok = x.at(i, i) * y.at(i, i) != x.at(v, v) * y.at(v, v);
                    }
                    push(std::move(c));
                }
            }
        }
    }
    return rep;
}

RepPoint sample_generic(const Quiver& q, int n, std::uint64_t seed) {
    if (n < 1) throw PreconditionError("sample_generic needs n >= 1");
    Rng rng(seed);
    constexpr int kMaxAttempts = 4096;
    for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
        const int bound = 9 + attempt / 8;  // widen slowly if collisions pile up
        RepPoint p;
        p.n = n;
        for (const Arrow& a : q.arrows()) {
            Mat m(static_cast<std::size_t>(n), static_cast<std::size_t>(n));
            for (std::size_t i = 0; i < m.rows(); ++i) {
                m.at(i, i) = Rat(rng.uniform_nonzero(-bound, bound));
                for (std::size_t j = i + 1; j < m.cols(); ++j)
                    m.at(i, j) = Rat(rng.uniform(-bound, bound));
            }
            p.w.emplace(a.id, std::move(m));
        }
        if (check_genericity(q, p).overall) return p;
    }
    throw InternalInvariantError("sample_generic exhausted its retry budget");
}

} // namespace qfr
