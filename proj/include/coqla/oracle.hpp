#pragma once

/**
 * Seeded generators for property suites.
 *
 * The stream is SplitMix64 (Steele, Lea & Flood):
 *
 *   state += 0x9E3779B97F4A7C15
 *   z = state
 *   z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9
 *   z = (z ^ (z >> 27)) * 0x94D049BB133111EB
 *   return z ^ (z >> 31)
 *
 * and an integer in [lo, hi] is lo + next() % (hi - lo + 1). Components are
 * drawn in w, x, y, z order, matrices row by row, Hermitian matrices over the
 * upper triangle (diagonal: one real draw; off-diagonal: four draws). This is
 * enough to replay any failing case from its seed in any language.
 */

#include <cstdint>
#include <cstdlib>
#include <optional>
#include <string>

#include "coqla/matrix.hpp"
#include "coqla/scalar.hpp"

namespace coqla {

/// SplitMix64 stream. A plain value: copying it forks an identical stream.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        state_ += 0x9E3779B97F4A7C15ull;
        std::uint64_t z = state_;
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }

    /// Uniform-ish integer in [lo, hi] (modulo bias is accepted).
    std::int64_t uniform(std::int64_t lo, std::int64_t hi) {
        const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
        return lo + static_cast<std::int64_t>(next() % span);
    }

    std::uint64_t state() const { return state_; }

private:
    std::uint64_t state_;
};

struct GenConfig {
    std::uint64_t seed = 0;
    std::size_t n = 3;
    std::int64_t lo = -3;
    std::int64_t hi = 3;

    /// The config for the k-th sample of a sweep that starts at `seed`.
    GenConfig sample(std::uint64_t k) const {
        GenConfig c = *this;
        c.seed = seed + k;
        return c;
    }
};

template <Scalar T>
T randomScalar(Rng& rng, std::int64_t lo, std::int64_t hi) {
    return T(static_cast<long>(rng.uniform(lo, hi)));
}

template <Scalar T>
Coquaternion<T> randomCoquaternion(Rng& rng, std::int64_t lo, std::int64_t hi) {
    T w = randomScalar<T>(rng, lo, hi);
    T x = randomScalar<T>(rng, lo, hi);
    T y = randomScalar<T>(rng, lo, hi);
    T z = randomScalar<T>(rng, lo, hi);
    return {std::move(w), std::move(x), std::move(y), std::move(z)};
}

template <Scalar T>
Coquaternion<T> randomCoquaternion(const GenConfig& cfg) {
    Rng rng(cfg.seed);
    return randomCoquaternion<T>(rng, cfg.lo, cfg.hi);
}

template <Scalar T>
Matrix<T> randomMatrix(Rng& rng, std::size_t rows, std::size_t cols, std::int64_t lo,
                       std::int64_t hi) {
    Matrix<T> m(rows, cols);
    for (std::size_t i = 1; i <= rows; ++i)
        for (std::size_t j = 1; j <= cols; ++j) m(i, j) = randomCoquaternion<T>(rng, lo, hi);
    return m;
}

template <Scalar T>
Matrix<T> randomMatrix(const GenConfig& cfg, std::size_t rows, std::size_t cols) {
    Rng rng(cfg.seed);
    return randomMatrix<T>(rng, rows, cols, cfg.lo, cfg.hi);
}

/// Random Hermitian matrix: real diagonal, random upper triangle, conjugates mirrored below.
template <Scalar T>
Matrix<T> randomHermitian(Rng& rng, std::size_t n, std::int64_t lo, std::int64_t hi) {
    Matrix<T> m(n, n);
    for (std::size_t i = 1; i <= n; ++i) {
        m(i, i) = Coquaternion<T>(randomScalar<T>(rng, lo, hi));
        for (std::size_t j = i + 1; j <= n; ++j) {
            m(i, j) = randomCoquaternion<T>(rng, lo, hi);
            m(j, i) = m(i, j).conj();
        }
    }
    return m;
}

template <Scalar T>
Matrix<T> randomHermitian(const GenConfig& cfg) {
    if (cfg.n == 0) throw DimensionError("randomHermitian: n must be positive");
    Rng rng(cfg.seed);
    return randomHermitian<T>(rng, cfg.n, cfg.lo, cfg.hi);
}

/// Base seed for test harnesses: COQLA_SEED if set and numeric, else `fallback`.
inline std::uint64_t seedFromEnvironment(std::uint64_t fallback) {
    if (const char* s = std::getenv("COQLA_SEED")) {
        char* end = nullptr;
        const unsigned long long v = std::strtoull(s, &end, 0);
        if (end != s && *end == '\0') return v;
    }
    return fallback;
}

}  // namespace coqla
