#ifndef QFR_POLY_HPP
#define QFR_POLY_HPP

#include <map>
#include <string>
#include <vector>

#include "qfr/rational.hpp"

namespace qfr {

/// Sparse multivariate polynomial over Rat with a fixed variable count.
/// Just enough arithmetic to expand and compare small invariant identities
/// exactly; not a general-purpose polynomial library.
class Poly {
public:
    explicit Poly(std::size_t nvars) : nvars_(nvars) {}

    static Poly constant(std::size_t nvars, const Rat& c) {
        Poly p(nvars);
        if (!c.is_zero()) p.terms_[std::vector<int>(nvars, 0)] = c;
        return p;
    }

    static Poly variable(std::size_t nvars, std::size_t index) {
        Poly p(nvars);
        std::vector<int> mono(nvars, 0);
        mono[index] = 1;
        p.terms_[std::move(mono)] = Rat(1);
        return p;
    }

    std::size_t nvars() const { return nvars_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }

    int total_degree() const {
        int deg = 0;
        for (const auto& [mono, coeff] : terms_) {
            int d = 0;
            for (int e : mono) d += e;
            if (d > deg) deg = d;
        }
        return deg;
    }

    Poly operator-() const {
        Poly p(nvars_);
        for (const auto& [mono, coeff] : terms_) p.terms_[mono] = -coeff;
        return p;
    }

    Poly& operator+=(const Poly& o) {
        for (const auto& [mono, coeff] : o.terms_) add_term(mono, coeff);
        return *this;
    }
    Poly& operator-=(const Poly& o) {
        for (const auto& [mono, coeff] : o.terms_) add_term(mono, -coeff);
        return *this;
    }

    friend Poly operator+(Poly a, const Poly& b) { a += b; return a; }
    friend Poly operator-(Poly a, const Poly& b) { a -= b; return a; }

    friend Poly operator*(const Poly& a, const Poly& b) {
        Poly p(a.nvars_);
        for (const auto& [ma, ca] : a.terms_) {
            for (const auto& [mb, cb] : b.terms_) {
                std::vector<int> mono(a.nvars_);
                for (std::size_t k = 0; k < a.nvars_; ++k) mono[k] = ma[k] + mb[k];
                p.add_term(mono, ca * cb);
            }
        }
        return p;
    }

    friend bool operator==(const Poly& a, const Poly& b) { return a.terms_ == b.terms_; }

    Rat eval(const std::vector<Rat>& point) const {
        Rat total;
        for (const auto& [mono, coeff] : terms_) {
            Rat term = coeff;
            for (std::size_t k = 0; k < nvars_; ++k)
                for (int e = 0; e < mono[k]; ++e) term *= point[k];
            total += term;
        }
        return total;
    }

private:
    void add_term(const std::vector<int>& mono, const Rat& c) {
        if (c.is_zero()) return;
        auto [it, inserted] = terms_.emplace(mono, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    std::size_t nvars_;
    std::map<std::vector<int>, Rat> terms_;
};

} // namespace qfr

#endif
