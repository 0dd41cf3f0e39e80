#pragma once

#include <stdexcept>
#include <utility>

#include "oreqs/rational.hpp"

namespace oreqs {

/// Element of Q(i): re + im*i with exact rational parts.
class GaussianRational {
public:
    GaussianRational() = default;
    GaussianRational(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {}

    static GaussianRational zero() { return {}; }
    static GaussianRational one() { return from_int(1); }
    static GaussianRational from_int(long n) { return {Rational::from_int(n), Rational::zero()}; }
    static GaussianRational i() { return {Rational::zero(), Rational::one()}; }

    const Rational& re() const { return re_; }
    const Rational& im() const { return im_; }

    bool is_zero() const { return re_.is_zero() && im_.is_zero(); }
    bool is_one() const { return re_.is_one() && im_.is_zero(); }
    bool is_real() const { return im_.is_zero(); }

    GaussianRational conjugate() const { return {re_, -im_}; }

    /// re^2 + im^2, the (rational) norm; zero only for zero.
    Rational norm() const { return re_ * re_ + im_ * im_; }

    GaussianRational operator-() const { return {-re_, -im_}; }

    friend GaussianRational operator+(const GaussianRational& a, const GaussianRational& b) {
        return {a.re_ + b.re_, a.im_ + b.im_};
    }
    friend GaussianRational operator-(const GaussianRational& a, const GaussianRational& b) {
        return {a.re_ - b.re_, a.im_ - b.im_};
    }
    friend GaussianRational operator*(const GaussianRational& a, const GaussianRational& b) {
        return {a.re_ * b.re_ - a.im_ * b.im_, a.re_ * b.im_ + a.im_ * b.re_};
    }
    friend GaussianRational operator/(const GaussianRational& a, const GaussianRational& b) {
        return a * b.inv();
    }

    GaussianRational inv() const {
        if (is_zero()) throw std::domain_error("GaussianRational: inverse of zero");
        Rational n = norm().inv();
        return {re_ * n, -im_ * n};
    }

    friend bool operator==(const GaussianRational&, const GaussianRational&) = default;

private:
    Rational re_;
    Rational im_;
};

inline GaussianRational conj(const GaussianRational& z) { return z.conjugate(); }

}  // namespace oreqs
