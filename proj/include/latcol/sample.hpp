#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "latcol/matrix.hpp"

namespace latcol {

// Deterministic test-vector population shared by the sampled checks.
//
// The grid part is every nonzero vector with entries in {0, 1, -1, 2},
// ordered by support size, then support (lexicographic), then values in the
// order 1, -1, 2. For ambient dimension above 6 the grid is truncated to the
// first `grid_cap` vectors of that order, so sparse (coordinate-degenerate)
// vectors are always included. The random part is `random_count` nonzero vectors
// with entries p/q, p in [-9, 9], q in [1, 9], drawn from mt19937_64(seed).
struct VectorSample {
    std::size_t ambient = 0;
    std::uint64_t seed = 0;
    std::size_t random_count = 100;
    std::size_t grid_cap = 5000;
    bool include_grid = true;

    [[nodiscard]] std::vector<Vector> grid() const;
    [[nodiscard]] std::vector<Vector> random() const;
    /// grid() followed by random().
    [[nodiscard]] std::vector<Vector> vectors() const;
};

/// Uniform integer in [lo, hi] from a 64-bit engine; portable across
/// standard libraries (unlike std::uniform_int_distribution).
[[nodiscard]] std::int64_t draw_int(std::mt19937_64& rng, std::int64_t lo, std::int64_t hi);
[[nodiscard]] Scalar draw_rational(std::mt19937_64& rng);
[[nodiscard]] Vector draw_vector(std::mt19937_64& rng, std::size_t n);

/// Scales a nonzero vector so its first nonzero entry is 1. Two vectors span
/// the same line iff their normalized forms are equal.
[[nodiscard]] Vector projective_normalize(const Vector& v);

}  // namespace latcol
