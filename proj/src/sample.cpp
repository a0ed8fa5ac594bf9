#include "latcol/sample.hpp"

#include <array>

namespace latcol {

namespace {

constexpr std::array<std::int64_t, 3> kGridValues = {1, -1, 2};

// Calls emit(support, values) for all supports of size k in lexicographic
// order, and for each support all value assignments (first coordinate slowest).
template <typename Emit>
bool enumerate_support_size(std::size_t n, std::size_t k, Emit&& emit) {
    std::vector<std::size_t> support(k);
    for (std::size_t i = 0; i < k; ++i) {
        support[i] = i;
    }
    while (true) {
        std::vector<std::size_t> digits(k, 0);
        while (true) {
            if (!emit(support, digits)) {
                return false;
            }
            // odometer increment, last support position fastest
            std::size_t pos = k;
            bool carry = true;
            while (carry && pos > 0) {
                --pos;
                if (++digits[pos] < kGridValues.size()) {
                    carry = false;
                } else {
                    digits[pos] = 0;
                }
            }
            if (carry) {
                break;
            }
        }
        // next combination
        std::size_t i = k;
        while (i > 0 && support[i - 1] == n - k + (i - 1)) {
            --i;
        }
        if (i == 0) {
            return true;
        }
        ++support[i - 1];
        for (std::size_t j = i; j < k; ++j) {
            support[j] = support[j - 1] + 1;
        }
    }
}

}  // namespace

std::vector<Vector> VectorSample::grid() const {
    std::vector<Vector> out;
    if (!include_grid) {
        return out;
    }
    const std::size_t cap = ambient > 6 ? grid_cap : static_cast<std::size_t>(-1);
    for (std::size_t k = 1; k <= ambient; ++k) {
        bool more = enumerate_support_size(ambient, k, [&](const auto& support, const auto& digits) {
            if (out.size() >= cap) {
                return false;
            }
            Vector v(ambient);
            for (std::size_t i = 0; i < support.size(); ++i) {
                v[support[i]] = kGridValues[digits[i]];
            }
            out.push_back(std::move(v));
            return true;
        });
        if (!more) {
            break;
        }
    }
    return out;
}

std::int64_t draw_int(std::mt19937_64& rng, std::int64_t lo, std::int64_t hi) {
    const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<std::int64_t>(rng() % span);
}

Scalar draw_rational(std::mt19937_64& rng) {
    std::int64_t p = draw_int(rng, -9, 9);
    std::int64_t q = draw_int(rng, 1, 9);
    return Scalar(Rational(p, q));
}

Vector draw_vector(std::mt19937_64& rng, std::size_t n) {
    Vector v(n);
    for (auto& e : v) {
        e = draw_rational(rng);
    }
    return v;
}

std::vector<Vector> VectorSample::random() const {
    std::mt19937_64 rng(seed);
    std::vector<Vector> out;
    out.reserve(random_count);
    while (out.size() < random_count && ambient > 0) {
        Vector v = draw_vector(rng, ambient);
        if (!is_zero(v)) {  // the zero vector tests nothing
            out.push_back(std::move(v));
        }
    }
    return out;
}

std::vector<Vector> VectorSample::vectors() const {
    std::vector<Vector> out = grid();
    for (auto& v : random()) {
        out.push_back(std::move(v));
    }
    return out;
}

Vector projective_normalize(const Vector& v) {
    for (const auto& e : v) {
        if (!e.is_zero()) {
            if (e.is_one()) {
                return v;
            }
            Scalar inv = e.inverse();
            return inv * v;
        }
    }
    return v;
}

}  // namespace latcol
