#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include "oreqs/common.hpp"
#include "oreqs/fields.hpp"
#include "oreqs/sampling.hpp"

namespace oreqs {

/// Automorphisms available for sigma. Each is bijective with an explicitly
/// computable inverse; user-supplied maps are deliberately not accepted.
enum class SigmaKind { identity, conjugation, shift, scale };

/// Sigma-derivations available for delta.
enum class DeltaKind { zero, derivative, q_difference };

/// Descriptor of the skew polynomial ring K[x; sigma, delta], where
/// x * a = sigma(a) * x + delta(a) for a in K.
template <Field K>
class OreRing {
public:
    OreRing() = default;  // commutative polynomial ring K[x]

    static OreRing classical() { return OreRing(); }

    /// Validates the sigma/delta combination. `param` is the shift offset c
    /// (t -> t + c) or scale factor u (t -> u t); it must be constant in the
    /// main variable. The q-difference delta requires sigma = scale(q) with
    /// q not 0 or 1, and delta = d/dt requires sigma = id, so that the
    /// sigma-derivation law holds by construction.
    static OreRing make(SigmaKind sigma, DeltaKind delta, K param = K::zero()) {
        OreRing r;
        r.sigma_ = sigma;
        r.delta_ = delta;
        switch (sigma) {
            case SigmaKind::identity:
                break;
            case SigmaKind::conjugation:
                if constexpr (!std::is_same_v<K, GaussianRational>)
                    throw std::invalid_argument("sigma = conj requires the field Qi");
                break;
            case SigmaKind::shift:
            case SigmaKind::scale:
                if constexpr (!is_rational_function_v<K>) {
                    throw std::invalid_argument(
                        "sigma = shift/scale requires a rational-function field");
                } else {
                    if (!param.is_constant())
                        throw std::invalid_argument("sigma parameter must be constant in t");
                    if (sigma == SigmaKind::scale && param.is_zero())
                        throw std::invalid_argument("sigma = scale(0) is not bijective");
                    r.param_ = param;
                }
                break;
        }
        switch (delta) {
            case DeltaKind::zero:
                break;
            case DeltaKind::derivative:
                if constexpr (!is_rational_function_v<K>)
                    throw std::invalid_argument("delta = ddt requires a rational-function field");
                if (sigma != SigmaKind::identity)
                    throw std::invalid_argument("delta = ddt requires sigma = id");
                break;
            case DeltaKind::q_difference:
                if constexpr (!is_rational_function_v<K>) {
                    throw std::invalid_argument("delta = qdiff requires a rational-function field");
                } else {
                    if (sigma != SigmaKind::scale)
                        throw std::invalid_argument("delta = qdiff requires sigma = scale(q)");
                    if (param.is_one())
                        throw std::invalid_argument("delta = qdiff requires q != 1");
                }
                break;
        }
        return r;
    }

    SigmaKind sigma_kind() const { return sigma_; }
    DeltaKind delta_kind() const { return delta_; }
    const K& sigma_param() const { return param_; }

    bool is_commutative() const {
        return sigma_ == SigmaKind::identity && delta_ == DeltaKind::zero;
    }

    K sigma(const K& a) const { return sigma_pow(a, 1); }
    K sigma_inv(const K& a) const { return sigma_pow(a, -1); }

    /// k-fold composition of sigma (sigma inverse for k < 0). Shift and
    /// scale compose in closed form, so this is a single substitution.
    K sigma_pow(const K& a, long k) const {
        if (k == 0) return a;
        switch (sigma_) {
            case SigmaKind::identity:
                return a;
            case SigmaKind::conjugation:
                if constexpr (std::is_same_v<K, GaussianRational>)
                    return (k % 2 != 0) ? a.conjugate() : a;
                break;
            case SigmaKind::shift:
                if constexpr (is_rational_function_v<K>) {
                    using B = rf_base_t<K>;
                    B step = param_.constant_value() * B::from_int(k);
                    return a.subst_shift(step);
                }
                break;
            case SigmaKind::scale:
                if constexpr (is_rational_function_v<K>) {
                    using B = rf_base_t<K>;
                    B factor = pow_int(param_.constant_value(), k);
                    return a.subst_scale(factor);
                }
                break;
        }
        throw InternalError("OreRing: inconsistent sigma state");
    }

    K delta(const K& a) const {
        switch (delta_) {
            case DeltaKind::zero:
                return K::zero();
            case DeltaKind::derivative:
                if constexpr (is_rational_function_v<K>) return a.derivative();
                break;
            case DeltaKind::q_difference:
                if constexpr (is_rational_function_v<K>) {
                    // delta(f) = (f(qt) - f(t)) / (t (q - 1))
                    K diff = sigma(a) - a;
                    if (diff.is_zero()) return K::zero();
                    return diff / (K::indeterminate() * (param_ - K::one()));
                }
                break;
        }
        throw InternalError("OreRing: inconsistent delta state");
    }

    friend bool operator==(const OreRing&, const OreRing&) = default;

private:
    SigmaKind sigma_ = SigmaKind::identity;
    DeltaKind delta_ = DeltaKind::zero;
    K param_ = K::zero();
};

/// Samples `count` random pairs and checks that sigma is multiplicative and
/// delta satisfies delta(ab) = sigma(a) delta(b) + delta(a) b. Failures are
/// reported, not thrown.
template <Field K>
CheckReport check_sigma_derivation(const OreRing<K>& ring, int count, std::uint64_t seed) {
    Rng rng(seed);
    CheckReport report;
    int sigma_fail = -1, delta_fail = -1, add_fail = -1;
    for (int n = 0; n < count; ++n) {
        K a = sample_field<K>(rng);
        K b = sample_field<K>(rng);
        if (sigma_fail < 0 && !(ring.sigma(a * b) == ring.sigma(a) * ring.sigma(b)))
            sigma_fail = n;
        if (delta_fail < 0 &&
            !(ring.delta(a * b) == ring.sigma(a) * ring.delta(b) + ring.delta(a) * b))
            delta_fail = n;
        if (add_fail < 0 && !(ring.delta(a + b) == ring.delta(a) + ring.delta(b)))
            add_fail = n;
    }
    auto tag = [](int fail) {
        return fail < 0 ? "" : "first counterexample at sample " + std::to_string(fail);
    };
    report.add("sigma(ab) = sigma(a) sigma(b)", sigma_fail < 0, tag(sigma_fail));
    report.add("delta(ab) = sigma(a) delta(b) + delta(a) b", delta_fail < 0, tag(delta_fail));
    report.add("delta(a+b) = delta(a) + delta(b)", add_fail < 0, tag(add_fail));
    return report;
}

}  // namespace oreqs
