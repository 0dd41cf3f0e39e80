#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "oreqs/matrix.hpp"
#include "oreqs/sampling.hpp"

namespace oreqs {

/// Parameters for seeded idempotent-matrix generation.
struct GenSpec {
    int size = 2;
    int rank = 1;
    int transvections = 6;
    int max_monomial_degree = 2;
    std::uint64_t seed = 0;
};

/// Small nonzero coefficient from a pool suited to the field: small
/// integers, small Gaussian integers, or low-degree monomials in t (and q).
template <Field K>
K small_nonzero_coeff(Rng& rng) {
    if constexpr (std::is_same_v<K, Rational>) {
        long n = rng.range(1, 3);
        return Rational::from_int(rng.coin() ? n : -n);
    } else if constexpr (std::is_same_v<K, GaussianRational>) {
        long re = rng.range(-2, 2);
        long im = rng.range(-2, 2);
        if (re == 0 && im == 0) re = 1;
        return GaussianRational(Rational::from_int(re), Rational::from_int(im));
    } else if constexpr (std::is_same_v<K, RatFunc>) {
        long c = rng.range(1, 2);
        Rational coeff = Rational::from_int(rng.coin() ? c : -c);
        int e = static_cast<int>(rng.below(2));
        return RatFunc::from_poly(Polynomial<Rational>::monomial(coeff, e));
    } else if constexpr (std::is_same_v<K, RatFuncTower>) {
        long c = rng.range(1, 2);
        Rational coeff = Rational::from_int(rng.coin() ? c : -c);
        int eq = static_cast<int>(rng.below(2));
        int et = static_cast<int>(rng.below(2));
        RatFunc base = RatFunc::from_poly(Polynomial<Rational>::monomial(coeff, eq));
        return RatFuncTower::from_poly(Polynomial<RatFunc>::monomial(base, et));
    }
}

/// c x^k with c from the small nonzero pool and 0 <= k <= max_degree.
template <Field K>
OrePoly<K> random_monomial(Rng& rng, const OreRing<K>& ring, int max_degree) {
    (void)ring;
    if (max_degree < 0) throw std::invalid_argument("random_monomial: negative degree bound");
    int k = static_cast<int>(rng.below(max_degree + 1));
    return OrePoly<K>::monomial(small_nonzero_coeff<K>(rng), k);
}

template <Field K>
struct GeneratedIdempotent {
    OreMatrix<K> f;
    std::vector<Transvection<K>> witness;
};

/// diag(0_(s-rank), I_rank) conjugated by the given transvections; the
/// true rank of the result is `rank` by construction.
template <Field K>
OreMatrix<K> idempotent_from_witness(const OreRing<K>& ring, int size, int rank,
                                     const std::vector<Transvection<K>>& witness) {
    OreMatrix<K> d(ring, size, size);
    for (int i = size - rank; i < size; ++i) d.at(i, i) = OrePoly<K>::one();
    ConjugationState<K> st(std::move(d));
    for (const auto& t : witness) st.transvect(t, "generator conjugation");
    return st.f();
}

/// Seeded idempotent of prescribed size and rank; identical seeds give
/// bit-identical output.
template <Field K>
GeneratedIdempotent<K> generate_idempotent(const GenSpec& spec, const OreRing<K>& ring) {
    if (spec.size < 1) throw std::invalid_argument("generate_idempotent: size must be >= 1");
    if (spec.rank < 0 || spec.rank > spec.size)
        throw std::invalid_argument("generate_idempotent: need 0 <= rank <= size");
    if (spec.transvections < 0 || spec.max_monomial_degree < 0)
        throw std::invalid_argument("generate_idempotent: negative parameter");

    Rng rng(spec.seed);
    std::vector<Transvection<K>> witness;
    if (spec.size > 1) {
        witness.reserve(static_cast<size_t>(spec.transvections));
        for (int n = 0; n < spec.transvections; ++n) {
            int i = static_cast<int>(rng.below(spec.size));
            int j = static_cast<int>(rng.below(spec.size - 1));
            if (j >= i) ++j;
            witness.push_back({i, j, random_monomial(rng, ring, spec.max_monomial_degree)});
        }
    }
    OreMatrix<K> f = idempotent_from_witness(ring, spec.size, spec.rank, witness);
    return {std::move(f), std::move(witness)};
}

}  // namespace oreqs
