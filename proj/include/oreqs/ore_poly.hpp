#pragma once

#include <stdexcept>
#include <utility>
#include <vector>

#include "oreqs/common.hpp"
#include "oreqs/ore_ring.hpp"

namespace oreqs {

/// Element of K[x; sigma, delta] stored by left coefficients a0..an of
/// x^0..x^n (trailing coefficient nonzero; zero = empty). Addition needs no
/// ring; multiplication and division steps take the ring explicitly.
template <Field K>
class OrePoly {
public:
    OrePoly() = default;

    explicit OrePoly(std::vector<K> coeffs) : c_(std::move(coeffs)) { trim(); }

    static OrePoly zero() { return {}; }
    static OrePoly one() { return constant(K::one()); }
    static OrePoly x() { return monomial(K::one(), 1); }

    static OrePoly constant(K v) {
        OrePoly p;
        if (!v.is_zero()) p.c_.push_back(std::move(v));
        return p;
    }

    /// c * x^k.
    static OrePoly monomial(K c, int k) {
        OrePoly p;
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
        if (c_.empty()) throw std::domain_error("OrePoly: leading coefficient of zero");
        return c_.back();
    }

    K constant_value() const { return c_.empty() ? K::zero() : c_[0]; }

    /// True for x^k with unit coefficient (including x^0 = 1).
    bool is_power_of_x() const {
        if (c_.empty() || !c_.back().is_one()) return false;
        for (size_t k = 0; k + 1 < c_.size(); ++k)
            if (!c_[k].is_zero()) return false;
        return true;
    }

    OrePoly operator-() const {
        OrePoly r = *this;
        for (auto& c : r.c_) c = -c;
        return r;
    }

    friend OrePoly operator+(const OrePoly& a, const OrePoly& b) {
        std::vector<K> r(std::max(a.c_.size(), b.c_.size()), K::zero());
        for (size_t k = 0; k < r.size(); ++k) {
            if (k < a.c_.size()) r[k] = r[k] + a.c_[k];
            if (k < b.c_.size()) r[k] = r[k] + b.c_[k];
        }
        return OrePoly(std::move(r));
    }

    friend OrePoly operator-(const OrePoly& a, const OrePoly& b) { return a + (-b); }

    /// Left multiplication by a scalar: a * (sum c_k x^k) = sum (a c_k) x^k.
    OrePoly scaled_left(const K& a) const {
        if (a.is_zero()) return zero();
        OrePoly r = *this;
        for (auto& c : r.c_) c = a * c;
        return r;
    }

    /// Right multiplication by x^k: coefficients shift up, no commutation.
    OrePoly times_x_pow(int k) const {
        if (is_zero() || k == 0) return *this;
        std::vector<K> r(c_.size() + static_cast<size_t>(k), K::zero());
        for (size_t i = 0; i < c_.size(); ++i) r[i + static_cast<size_t>(k)] = c_[i];
        return OrePoly(std::move(r));
    }

    friend bool operator==(const OrePoly&, const OrePoly&) = default;

private:
    void trim() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }

    std::vector<K> c_;
};

/// x * f, by the commutation rule applied to each term:
/// x (b x^k) = sigma(b) x^(k+1) + delta(b) x^k.
template <Field K>
OrePoly<K> x_times(const OreRing<K>& ring, const OrePoly<K>& f) {
    if (f.is_zero()) return {};
    std::vector<K> r(f.coeffs().size() + 1, K::zero());
    for (size_t k = 0; k < f.coeffs().size(); ++k) {
        const K& b = f.coeffs()[k];
        if (b.is_zero()) continue;
        r[k + 1] = r[k + 1] + ring.sigma(b);
        r[k] = r[k] + ring.delta(b);
    }
    return OrePoly<K>(std::move(r));
}

/// Product in K[x; sigma, delta]; operand order matters.
template <Field K>
OrePoly<K> poly_mul(const OreRing<K>& ring, const OrePoly<K>& f, const OrePoly<K>& g) {
    if (f.is_zero() || g.is_zero()) return {};
    OrePoly<K> acc;
    OrePoly<K> xig = g;  // x^i * g
    for (int i = 0; i <= f.deg(); ++i) {
        if (i > 0) xig = x_times(ring, xig);
        K a = f.coeff(i);
        if (!a.is_zero()) acc = acc + xig.scaled_left(a);
    }
    return acc;
}

/// One division step: factor m = c x^(deg f - deg g) and remainder f' with
/// f = g*m + f' (right_reduce) or f = m*g + f' (left_reduce), both with
/// deg f' < deg f. Preconditions: f, g nonzero and deg g <= deg f.
template <Field K>
struct ReduceStep {
    OrePoly<K> factor;
    OrePoly<K> remainder;
};

template <Field K>
ReduceStep<K> right_reduce_step(const OreRing<K>& ring, const OrePoly<K>& f,
                                const OrePoly<K>& g) {
    if (f.is_zero() || g.is_zero() || g.deg() > f.deg())
        throw std::invalid_argument("right_reduce_step: need f, g nonzero with deg g <= deg f");
    int d = f.deg() - g.deg();
    // lc(g * c x^d) = lc(g) sigma^(deg g)(c), so c = sigma^(-deg g)(lc(g)^-1 lc(f)).
    K c = ring.sigma_pow(g.lc().inv() * f.lc(), -static_cast<long>(g.deg()));
    OrePoly<K> m = OrePoly<K>::monomial(std::move(c), d);
    OrePoly<K> rem = f - poly_mul(ring, g, m);
    if (!rem.is_zero() && rem.deg() >= f.deg())
        throw InternalError("right_reduce_step: degree did not drop");
    return {std::move(m), std::move(rem)};
}

template <Field K>
ReduceStep<K> left_reduce_step(const OreRing<K>& ring, const OrePoly<K>& f,
                               const OrePoly<K>& g) {
    if (f.is_zero() || g.is_zero() || g.deg() > f.deg())
        throw std::invalid_argument("left_reduce_step: need f, g nonzero with deg g <= deg f");
    int d = f.deg() - g.deg();
    // lc(c x^d * g) = c sigma^d(lc(g)), so c = lc(f) sigma^d(lc(g))^-1.
    K c = f.lc() * ring.sigma_pow(g.lc(), d).inv();
    OrePoly<K> m = OrePoly<K>::monomial(std::move(c), d);
    OrePoly<K> rem = f - poly_mul(ring, m, g);
    if (!rem.is_zero() && rem.deg() >= f.deg())
        throw InternalError("left_reduce_step: degree did not drop");
    return {std::move(m), std::move(rem)};
}

}  // namespace oreqs
