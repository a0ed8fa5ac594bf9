#include "latcol/gaussian.hpp"

#include <stdexcept>

namespace latcol {

GaussianRational operator*(const GaussianRational& a, const GaussianRational& b) {
    if (a.im_.is_zero()) {
        if (b.im_.is_zero()) {
            return {a.re_ * b.re_};
        }
        return {a.re_ * b.re_, a.re_ * b.im_};
    }
    if (b.im_.is_zero()) {
        return {a.re_ * b.re_, a.im_ * b.re_};
    }
    return {a.re_ * b.re_ - a.im_ * b.im_, a.re_ * b.im_ + a.im_ * b.re_};
}

GaussianRational GaussianRational::inverse() const {
    if (is_zero()) {
        throw std::domain_error("inverse of zero");
    }
    if (im_.is_zero()) {
        return {re_.inverse()};
    }
    Rational n = norm();
    return {re_ / n, -im_ / n};
}

std::string GaussianRational::to_string() const {
    if (im_.is_zero()) {
        return re_.to_string();
    }
    auto imag_part = [](const Rational& v) {
        if (v.is_one()) {
            return std::string("i");
        }
        return v.to_string() + "i";
    };
    if (re_.is_zero()) {
        if (im_.sign() < 0) {
            return "-" + imag_part(-im_);
        }
        return imag_part(im_);
    }
    if (im_.sign() < 0) {
        return re_.to_string() + "-" + imag_part(-im_);
    }
    return re_.to_string() + "+" + imag_part(im_);
}

GaussianRational GaussianRational::parse(std::string_view text) {
    if (text.empty()) {
        throw std::invalid_argument("empty scalar");
    }
    if (text.back() != 'i') {
        return {Rational::parse(text)};
    }
    std::string_view body = text.substr(0, text.size() - 1);
    // The imaginary part starts at the last sign that is not the leading one.
    std::size_t split = std::string_view::npos;
    for (std::size_t k = body.size(); k-- > 1;) {
        if (body[k] == '+' || body[k] == '-') {
            split = k;
            break;
        }
    }
    auto coefficient = [](std::string_view s) {
        if (s.empty() || s == "+") {
            return Rational(1);
        }
        if (s == "-") {
            return Rational(-1);
        }
        return Rational::parse(s);
    };
    if (split == std::string_view::npos) {
        return {Rational(0), coefficient(body)};
    }
    std::string_view real_text = body.substr(0, split);
    std::string_view imag_text = body.substr(split);
    return {Rational::parse(real_text), coefficient(imag_text)};
}

}  // namespace latcol
