#pragma once

#include <compare>
#include <string>
#include <string_view>

#include "latcol/rational.hpp"

namespace latcol {

// Element re + im*i of the Gaussian rationals Q(i).
class GaussianRational {
public:
    GaussianRational() = default;
    GaussianRational(std::int64_t re) : re_(re) {}  // NOLINT(google-explicit-constructor)
    GaussianRational(Rational re) : re_(std::move(re)) {}  // NOLINT(google-explicit-constructor)
    GaussianRational(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {}

    static GaussianRational i() { return {Rational(0), Rational(1)}; }

    // Grammar: rational [("+"|"-") [rational] "i"] | [sign][rational] "i".
    // A missing coefficient in front of "i" means 1, so "-i" is 0-1i.
    static GaussianRational parse(std::string_view text);

    [[nodiscard]] const Rational& re() const { return re_; }
    [[nodiscard]] const Rational& im() const { return im_; }

    [[nodiscard]] bool is_zero() const { return re_.is_zero() && im_.is_zero(); }
    [[nodiscard]] bool is_one() const { return re_.is_one() && im_.is_zero(); }
    [[nodiscard]] bool is_real() const { return im_.is_zero(); }

    [[nodiscard]] GaussianRational conj() const { return {re_, -im_}; }
    [[nodiscard]] Rational norm() const { return re_ * re_ + im_ * im_; }
    [[nodiscard]] GaussianRational inverse() const;

    [[nodiscard]] std::string to_string() const;

    [[nodiscard]] GaussianRational operator-() const { return {-re_, -im_}; }

    friend GaussianRational operator+(const GaussianRational& a, const GaussianRational& b) {
        if (a.im_.is_zero() && b.im_.is_zero()) {
            return {a.re_ + b.re_};
        }
        return {a.re_ + b.re_, a.im_ + b.im_};
    }
    friend GaussianRational operator-(const GaussianRational& a, const GaussianRational& b) {
        if (a.im_.is_zero() && b.im_.is_zero()) {
            return {a.re_ - b.re_};
        }
        return {a.re_ - b.re_, a.im_ - b.im_};
    }
    friend GaussianRational operator*(const GaussianRational& a, const GaussianRational& b);
    friend GaussianRational operator/(const GaussianRational& a, const GaussianRational& b) {
        return a * b.inverse();
    }

    GaussianRational& operator+=(const GaussianRational& b) { return *this = *this + b; }
    GaussianRational& operator-=(const GaussianRational& b) { return *this = *this - b; }
    GaussianRational& operator*=(const GaussianRational& b) { return *this = *this * b; }
    GaussianRational& operator/=(const GaussianRational& b) { return *this = *this / b; }

    friend bool operator==(const GaussianRational& a, const GaussianRational& b) = default;
    // Lexicographic on (re, im); a total order for containers, not a field order.
    friend std::strong_ordering operator<=>(const GaussianRational& a, const GaussianRational& b) {
        if (auto c = a.re_ <=> b.re_; c != 0) {
            return c;
        }
        return a.im_ <=> b.im_;
    }

    [[nodiscard]] std::size_t hash() const { return re_.hash() * 31 + im_.hash(); }

private:
    Rational re_;
    Rational im_;
};

using Scalar = GaussianRational;

}  // namespace latcol
