#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "oreqs/fields.hpp"

namespace oreqs {

/// Deterministic RNG wrapper. Draws avoid std::uniform_int_distribution so
/// a seed yields the same stream on every platform and standard library.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    std::uint64_t next() { return eng_(); }

    /// Uniform in [0, n).
    long below(long n) { return static_cast<long>(next() % static_cast<std::uint64_t>(n)); }

    /// Uniform in [lo, hi] inclusive.
    long range(long lo, long hi) { return lo + below(hi - lo + 1); }

    bool coin() { return (next() & 1) != 0; }

private:
    std::mt19937_64 eng_;
};

/// Small random field element for property tests; `size` bounds degrees of
/// rational-function parts.
template <Field K>
K sample_field(Rng& rng, int size = 2) {
    if constexpr (std::is_same_v<K, Rational>) {
        (void)size;
        return Rational(rng.range(-6, 6), rng.range(1, 4));
    } else if constexpr (std::is_same_v<K, GaussianRational>) {
        return GaussianRational(sample_field<Rational>(rng, size), sample_field<Rational>(rng, size));
    } else if constexpr (is_rational_function_v<K>) {
        using B = rf_base_t<K>;
        int base_size = size > 1 ? size - 1 : 0;
        auto sample_poly = [&](int max_deg) {
            int d = static_cast<int>(rng.below(max_deg + 1));
            std::vector<B> c(static_cast<size_t>(d) + 1, B::zero());
            for (auto& v : c) v = sample_field<B>(rng, base_size);
            return Polynomial<B>(std::move(c));
        };
        Polynomial<B> num = sample_poly(size);
        Polynomial<B> den;
        do {
            den = sample_poly(size > 1 ? 1 : 0);
        } while (den.is_zero());
        return K(std::move(num), std::move(den));
    }
}

template <Field K>
K sample_nonzero_field(Rng& rng, int size = 2) {
    for (;;) {
        K v = sample_field<K>(rng, size);
        if (!v.is_zero()) return v;
    }
}

}  // namespace oreqs
