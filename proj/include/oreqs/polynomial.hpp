#pragma once

#include <stdexcept>
#include <utility>
#include <vector>

#include "oreqs/common.hpp"
#include "oreqs/field_concept.hpp"

namespace oreqs {

/// Dense univariate polynomial over a commutative field, coefficients in
/// ascending powers with a nonzero trailing coefficient (zero = empty).
template <Field K>
class Polynomial {
public:
    Polynomial() = default;

    explicit Polynomial(std::vector<K> coeffs) : c_(std::move(coeffs)) { trim(); }

    static Polynomial zero() { return {}; }
    static Polynomial one() { return constant(K::one()); }

    static Polynomial constant(K v) {
        Polynomial p;
        if (!v.is_zero()) p.c_.push_back(std::move(v));
        return p;
    }

    /// The variable itself.
    static Polynomial indeterminate() { return Polynomial(std::vector<K>{K::zero(), K::one()}); }

    /// c * var^k.
    static Polynomial monomial(K c, int k) {
        Polynomial p;
        if (!c.is_zero()) {
            p.c_.assign(static_cast<size_t>(k) + 1, K::zero());
            p.c_.back() = std::move(c);
        }
        return p;
    }

    int deg() const { return c_.empty() ? kNegInfDeg : static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    bool is_one() const { return c_.size() == 1 && c_[0].is_one(); }
    bool is_constant() const { return c_.size() <= 1; }

    const std::vector<K>& coeffs() const { return c_; }

    K coeff(int k) const {
        if (k < 0 || static_cast<size_t>(k) >= c_.size()) return K::zero();
        return c_[static_cast<size_t>(k)];
    }

    const K& lc() const {
        if (c_.empty()) throw std::domain_error("Polynomial: leading coefficient of zero");
        return c_.back();
    }

    bool is_monic() const { return !c_.empty() && c_.back().is_one(); }

    Polynomial operator-() const {
        Polynomial r = *this;
        for (auto& c : r.c_) c = -c;
        return r;
    }

    friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
        std::vector<K> r(std::max(a.c_.size(), b.c_.size()), K::zero());
        for (size_t k = 0; k < r.size(); ++k) {
            if (k < a.c_.size()) r[k] = r[k] + a.c_[k];
            if (k < b.c_.size()) r[k] = r[k] + b.c_[k];
        }
        return Polynomial(std::move(r));
    }

    friend Polynomial operator-(const Polynomial& a, const Polynomial& b) { return a + (-b); }

    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        if (a.is_zero() || b.is_zero()) return zero();
        std::vector<K> r(a.c_.size() + b.c_.size() - 1, K::zero());
        for (size_t i = 0; i < a.c_.size(); ++i) {
            if (a.c_[i].is_zero()) continue;
            for (size_t j = 0; j < b.c_.size(); ++j)
                r[i + j] = r[i + j] + a.c_[i] * b.c_[j];
        }
        return Polynomial(std::move(r));
    }

    Polynomial scale(const K& s) const {
        if (s.is_zero()) return zero();
        Polynomial r = *this;
        for (auto& c : r.c_) c = c * s;
        return r;
    }

    Polynomial make_monic() const {
        if (is_zero() || is_monic()) return *this;
        return scale(lc().inv());
    }

    /// Quotient and remainder of division by a nonzero polynomial.
    friend std::pair<Polynomial, Polynomial> divrem(const Polynomial& a, const Polynomial& b) {
        if (b.is_zero()) throw std::domain_error("Polynomial: division by zero");
        Polynomial q, r = a;
        K blc_inv = b.lc().inv();
        while (!r.is_zero() && r.deg() >= b.deg()) {
            int k = r.deg() - b.deg();
            K c = r.lc() * blc_inv;
            Polynomial m = monomial(c, k);
            q = q + m;
            r = r - m * b;
        }
        return {q, r};
    }

    Polynomial derivative() const {
        if (c_.size() <= 1) return zero();
        std::vector<K> r(c_.size() - 1, K::zero());
        for (size_t k = 1; k < c_.size(); ++k)
            r[k - 1] = c_[k] * K::from_int(static_cast<long>(k));
        return Polynomial(std::move(r));
    }

    /// p(t) -> p(t + c), by Horner evaluation at (t + c).
    Polynomial subst_shift(const K& c) const {
        if (c.is_zero() || is_zero()) return *this;
        Polynomial shifted_var(std::vector<K>{c, K::one()});
        Polynomial acc;
        for (size_t k = c_.size(); k-- > 0;)
            acc = acc * shifted_var + constant(c_[k]);
        return acc;
    }

    /// p(t) -> p(u t); u must be nonzero so the substitution is invertible.
    Polynomial subst_scale(const K& u) const {
        if (u.is_zero()) throw std::domain_error("Polynomial: scaling substitution by zero");
        Polynomial r = *this;
        K f = K::one();
        for (size_t k = 1; k < r.c_.size(); ++k) {
            f = f * u;
            r.c_[k] = r.c_[k] * f;
        }
        return r;
    }

    friend bool operator==(const Polynomial&, const Polynomial&) = default;

private:
    void trim() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }

    std::vector<K> c_;
};

/// Monic gcd (zero if both inputs are zero); plain Euclidean remainders,
/// normalized monic at each step to limit coefficient growth.
template <Field K>
Polynomial<K> gcd(const Polynomial<K>& a, const Polynomial<K>& b) {
    Polynomial<K> f = a.make_monic(), g = b.make_monic();
    while (!g.is_zero()) {
        auto [q, r] = divrem(f, g);
        (void)q;
        f = std::move(g);
        g = r.make_monic();
    }
    return f;
}

}  // namespace oreqs
