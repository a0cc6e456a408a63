#ifndef QFR_RATIONAL_HPP
#define QFR_RATIONAL_HPP

#include <gmpxx.h>

#include <cstdint>
#include <iosfwd>
#include <string>

namespace qfr {

/// Exact rational scalar. Thin wrapper around GMP's mpq_class that keeps the
/// value canonical (lowest terms, positive denominator) after every
/// construction; arithmetic never rounds.
class Rat {
public:
    Rat() : v_(0) {}
    Rat(int n) : v_(n) {}                      // NOLINT(google-explicit-constructor)
    Rat(long n) : v_(static_cast<long>(n)) {}  // NOLINT(google-explicit-constructor)
    Rat(long long n) { v_ = from_int64(n).v_; }// NOLINT(google-explicit-constructor)

    Rat(std::int64_t num, std::int64_t den);

    explicit Rat(const mpq_class& q) : v_(q) { v_.canonicalize(); }

    // Parses "p", "-p", or "p/q" (arbitrary precision). Throws PreconditionError
    // on malformed text or zero denominator.
    static Rat parse(const std::string& text);
    static Rat from_int64(std::int64_t n);

    std::string str() const;  // "p" when the denominator is 1, else "p/q"

    bool is_zero() const { return sgn(v_) == 0; }
    int sign() const { return sgn(v_); }

    mpz_class numerator() const { return v_.get_num(); }
    mpz_class denominator() const { return v_.get_den(); }
    const mpq_class& raw() const { return v_; }

    Rat operator-() const { return Rat(mpq_class(-v_)); }

    Rat& operator+=(const Rat& o) { v_ += o.v_; return *this; }
    Rat& operator-=(const Rat& o) { v_ -= o.v_; return *this; }
    Rat& operator*=(const Rat& o) { v_ *= o.v_; return *this; }
    Rat& operator/=(const Rat& o);

    friend Rat operator+(Rat a, const Rat& b) { a += b; return a; }
    friend Rat operator-(Rat a, const Rat& b) { a -= b; return a; }
    friend Rat operator*(Rat a, const Rat& b) { a *= b; return a; }
    friend Rat operator/(Rat a, const Rat& b) { a /= b; return a; }

    friend bool operator==(const Rat& a, const Rat& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rat& a, const Rat& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rat& a, const Rat& b) { return a.v_ < b.v_; }
    friend bool operator<=(const Rat& a, const Rat& b) { return a.v_ <= b.v_; }
    friend bool operator>(const Rat& a, const Rat& b) { return a.v_ > b.v_; }
    friend bool operator>=(const Rat& a, const Rat& b) { return a.v_ >= b.v_; }

private:
    mpq_class v_;
};

std::ostream& operator<<(std::ostream& os, const Rat& r);

} // namespace qfr

#endif
