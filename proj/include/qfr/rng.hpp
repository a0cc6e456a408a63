#ifndef QFR_RNG_HPP
#define QFR_RNG_HPP

#include <cstdint>

namespace qfr {

// Deterministic splitmix64 generator. Unlike the standard <random>
// distributions, its output stream is identical on every platform, which the
// reporting layer relies on for byte-identical seeded reports.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // Uniform in [lo, hi], inclusive. Rejection sampling keeps it unbiased.
    std::int64_t uniform(std::int64_t lo, std::int64_t hi) {
        const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
        const std::uint64_t limit = UINT64_MAX - UINT64_MAX % span;
        std::uint64_t v;
        do {
            v = next();
        } while (v >= limit);
        return lo + static_cast<std::int64_t>(v % span);
    }

    // Uniform in [lo, hi] \ {0}.
    std::int64_t uniform_nonzero(std::int64_t lo, std::int64_t hi) {
        std::int64_t v;
        do {
            v = uniform(lo, hi);
        } while (v == 0);
        return v;
    }

    // Independent child stream; advancing the child leaves the parent alone.
    Rng fork() { return Rng(next()); }

private:
    std::uint64_t state_;
};

} // namespace qfr

#endif
