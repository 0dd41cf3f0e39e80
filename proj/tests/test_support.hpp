#pragma once

#include "oreqs/oreqs.hpp"

namespace oreqs::test {

inline Rational rat(long n, long d = 1) { return Rational(n, d); }
inline GaussianRational gi(long re, long im) {
    return GaussianRational(Rational::from_int(re), Rational::from_int(im));
}

inline RatFunc tvar() { return RatFunc::indeterminate(); }
inline RatFuncTower qvar() { return RatFuncTower::constant(RatFunc::indeterminate()); }

inline OreRing<Rational> ring_q() { return OreRing<Rational>::classical(); }

inline OreRing<GaussianRational> ring_conj() {
    return OreRing<GaussianRational>::make(SigmaKind::conjugation, DeltaKind::zero);
}

inline OreRing<RatFunc> ring_weyl() {
    return OreRing<RatFunc>::make(SigmaKind::identity, DeltaKind::derivative);
}

inline OreRing<RatFunc> ring_shift(long c) {
    return OreRing<RatFunc>::make(SigmaKind::shift, DeltaKind::zero,
                                  RatFunc::constant(Rational::from_int(c)));
}

inline OreRing<RatFuncTower> ring_qdiff() {
    return OreRing<RatFuncTower>::make(SigmaKind::scale, DeltaKind::q_difference, qvar());
}

}  // namespace oreqs::test
