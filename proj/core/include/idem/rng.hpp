#pragma once

#include <cstdint>

namespace idem {

// Deterministic 64-bit generator (splitmix64). Every randomized routine in
// the library takes one of these explicitly so runs are reproducible from a
// single reported seed; nothing reads global entropy. split() derives an
// independent stream for a numbered sub-task without disturbing the parent,
// which keeps per-trial results stable under reordering.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        state_ += 0x9e3779b97f4a7c15ULL;
        std::uint64_t z = state_;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // Uniform on [0, n); n = 0 is treated as the full 64-bit range.
    std::uint64_t below(std::uint64_t n) {
        if (n == 0) return next();
        // Rejection sampling to kill modulo bias.
        std::uint64_t limit = ~0ULL - ~0ULL % n;
        std::uint64_t v = next();
        while (v >= limit) v = next();
        return v % n;
    }

    // Uniform on the closed interval [lo, hi].
    std::int64_t int_in(std::int64_t lo, std::int64_t hi) {
        return lo + static_cast<std::int64_t>(
                        below(static_cast<std::uint64_t>(hi - lo) + 1));
    }

    bool coin() { return (next() & 1) != 0; }

    // Independent child stream for sub-task `stream`; the parent state is
    // untouched, so trial k sees the same stream no matter what ran before.
    Rng split(std::uint64_t stream) const {
        Rng child(state_ ^ (0x9e3779b97f4a7c15ULL * (stream + 1)));
        child.next();
        return child;
    }

private:
    std::uint64_t state_;
};

}  // namespace idem
