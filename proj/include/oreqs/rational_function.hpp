#pragma once

#include <stdexcept>
#include <utility>

#include "oreqs/field_concept.hpp"
#include "oreqs/polynomial.hpp"

namespace oreqs {

/// Fraction field of K[t] in canonical form: gcd(num, den) = 1, den monic,
/// zero = 0/1. The coefficient field K may itself be a RationalFunction,
/// which is how towers such as Q(q)(t) are built.
template <Field K>
class RationalFunction {
public:
    RationalFunction() : num_(), den_(Polynomial<K>::one()) {}

    RationalFunction(Polynomial<K> num, Polynomial<K> den)
        : num_(std::move(num)), den_(std::move(den)) {
        if (den_.is_zero()) throw std::domain_error("RationalFunction: zero denominator");
        normalize();
    }

    static RationalFunction zero() { return {}; }
    static RationalFunction one() { return from_int(1); }
    static RationalFunction from_int(long n) {
        return constant(K::from_int(n));
    }
    static RationalFunction constant(K c) {
        RationalFunction r;
        r.num_ = Polynomial<K>::constant(std::move(c));
        return r;
    }
    static RationalFunction indeterminate() {
        RationalFunction r;
        r.num_ = Polynomial<K>::indeterminate();
        return r;
    }
    static RationalFunction from_poly(Polynomial<K> p) {
        RationalFunction r;
        r.num_ = std::move(p);
        return r;
    }

    const Polynomial<K>& num() const { return num_; }
    const Polynomial<K>& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_.is_one() && den_.is_one(); }
    bool is_polynomial() const { return den_.is_one(); }
    bool is_constant() const { return den_.is_one() && num_.is_constant(); }

    /// The value as an element of K; valid only when is_constant().
    K constant_value() const {
        if (!is_constant()) throw std::domain_error("RationalFunction: not a constant");
        return num_.coeff(0);
    }

    RationalFunction operator-() const {
        RationalFunction r = *this;
        r.num_ = -r.num_;
        return r;
    }

    friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
        return RationalFunction(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) {
        return a + (-b);
    }
    friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
        return RationalFunction(a.num_ * b.num_, a.den_ * b.den_);
    }
    friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
        return a * b.inv();
    }

    RationalFunction inv() const {
        if (is_zero()) throw std::domain_error("RationalFunction: inverse of zero");
        RationalFunction r;
        r.num_ = den_;
        r.den_ = num_;
        r.normalize();
        return r;
    }

    /// Quotient rule: (p/q)' = (p'q - pq')/q^2.
    RationalFunction derivative() const {
        return RationalFunction(num_.derivative() * den_ - num_ * den_.derivative(),
                                den_ * den_);
    }

    /// t -> t + c.
    RationalFunction subst_shift(const K& c) const {
        return RationalFunction(num_.subst_shift(c), den_.subst_shift(c));
    }

    /// t -> u t, u nonzero.
    RationalFunction subst_scale(const K& u) const {
        return RationalFunction(num_.subst_scale(u), den_.subst_scale(u));
    }

    friend bool operator==(const RationalFunction&, const RationalFunction&) = default;

private:
    void normalize() {
        if (num_.is_zero()) {
            den_ = Polynomial<K>::one();
            return;
        }
        Polynomial<K> g = gcd(num_, den_);
        if (g.deg() > 0) {
            num_ = divrem(num_, g).first;
            den_ = divrem(den_, g).first;
        }
        if (!den_.is_monic()) {
            K lead_inv = den_.lc().inv();
            num_ = num_.scale(lead_inv);
            den_ = den_.scale(lead_inv);
        }
    }

    Polynomial<K> num_;
    Polynomial<K> den_;
};

template <class T>
inline constexpr bool is_rational_function_v = false;
template <class B>
inline constexpr bool is_rational_function_v<RationalFunction<B>> = true;

template <class T>
struct rf_base {};
template <class B>
struct rf_base<RationalFunction<B>> {
    using type = B;
};
template <class T>
using rf_base_t = typename rf_base<T>::type;

}  // namespace oreqs
