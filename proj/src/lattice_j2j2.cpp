#include <random>
#include <stdexcept>

#include "latcol/collineation.hpp"

namespace latcol {

std::string to_string(LatticeKind k) {
    switch (k) {
        case LatticeKind::Trivial0:
            return "trivial0";
        case LatticeKind::Dim1:
            return "dim1";
        case LatticeKind::Kernel:
            return "kernel";
        case LatticeKind::Dim2:
            return "dim2";
        case LatticeKind::Preimage3:
            return "preimage3";
        case LatticeKind::Whole:
            return "whole";
    }
    return "?";
}

namespace {

Vector vec4(const Scalar& a, const Scalar& b, const Scalar& c, const Scalar& d) { return {a, b, c, d}; }

LatticeElemJ2J2 make(LatticeKind kind, std::vector<Scalar> params) {
    LatticeElemJ2J2 e;
    e.kind = kind;
    std::vector<Vector> span;
    switch (kind) {
        case LatticeKind::Trivial0:
            break;
        case LatticeKind::Dim1:
            span.push_back(vec4(params[0], 0, params[1], 0));
            break;
        case LatticeKind::Kernel:
            span = {vec4(1, 0, 0, 0), vec4(0, 0, 1, 0)};
            break;
        case LatticeKind::Dim2:
            span = {vec4(params[0], 0, params[1], 0), vec4(params[2], params[0], params[3], params[1])};
            break;
        case LatticeKind::Preimage3:
            span = {vec4(1, 0, 0, 0), vec4(0, 0, 1, 0), vec4(0, params[0], 0, params[1])};
            break;
        case LatticeKind::Whole:
            span = {vec4(1, 0, 0, 0), vec4(0, 1, 0, 0), vec4(0, 0, 1, 0), vec4(0, 0, 0, 1)};
            break;
    }
    e.params = std::move(params);
    e.realized = Subspace::span_of(4, span);
    return e;
}

}  // namespace

std::vector<LatticeElemJ2J2> lat_j2j2_sample(int grid, std::size_t random_count, std::uint64_t seed) {
    if (grid < 0) {
        throw std::invalid_argument("lattice grid radius must be non-negative");
    }
    std::vector<LatticeElemJ2J2> out;
    out.push_back(make(LatticeKind::Trivial0, {}));
    out.push_back(make(LatticeKind::Kernel, {}));
    out.push_back(make(LatticeKind::Whole, {}));

    std::vector<std::pair<Scalar, Scalar>> pairs;
    for (int w = -grid; w <= grid; ++w) {
        for (int k = -grid; k <= grid; ++k) {
            if (w != 0 || k != 0) {
                pairs.emplace_back(w, k);
            }
        }
    }
    for (const auto& [w, k] : pairs) {
        out.push_back(make(LatticeKind::Dim1, {w, k}));
    }
    for (const auto& [w, k] : pairs) {
        for (int r = -grid; r <= grid; ++r) {
            for (int s = -grid; s <= grid; ++s) {
                out.push_back(make(LatticeKind::Dim2, {w, k, r, s}));
            }
        }
    }
    for (const auto& [w, k] : pairs) {
        out.push_back(make(LatticeKind::Preimage3, {w, k}));
    }

    std::mt19937_64 rng(seed);
    auto draw_pair = [&] {
        while (true) {
            Scalar w = draw_rational(rng);
            Scalar k = draw_rational(rng);
            if (!w.is_zero() || !k.is_zero()) {
                return std::pair{w, k};
            }
        }
    };
    for (std::size_t n = 0; n < random_count; ++n) {
        auto [w, k] = draw_pair();
        out.push_back(make(LatticeKind::Dim1, {w, k}));
        auto [w2, k2] = draw_pair();
        Scalar r = draw_rational(rng);
        Scalar s = draw_rational(rng);
        out.push_back(make(LatticeKind::Dim2, {w2, k2, r, s}));
        auto [w3, k3] = draw_pair();
        out.push_back(make(LatticeKind::Preimage3, {w3, k3}));
    }

    const Matrix n = jordan_matrix({{2, 2}});
    for (const auto& e : out) {
        if (!is_invariant(n, e.realized)) {
            throw std::logic_error("lattice sample produced a non-invariant subspace");
        }
    }
    return out;
}

}  // namespace latcol
