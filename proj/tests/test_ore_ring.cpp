#include <catch2/catch_amalgamated.hpp>

#include "test_support.hpp"

using namespace oreqs;
using namespace oreqs::test;

TEST_CASE("ring spec validation") {
    CHECK_THROWS_AS(OreRing<RatFunc>::make(SigmaKind::scale, DeltaKind::zero, RatFunc::zero()),
                    std::invalid_argument);
    CHECK_THROWS_AS(OreRing<RatFunc>::make(SigmaKind::identity, DeltaKind::q_difference,
                                           RatFunc::from_int(2)),
                    std::invalid_argument);
    CHECK_THROWS_AS(OreRing<RatFunc>::make(SigmaKind::scale, DeltaKind::q_difference,
                                           RatFunc::one()),
                    std::invalid_argument);
    CHECK_THROWS_AS(OreRing<RatFunc>::make(SigmaKind::shift, DeltaKind::derivative,
                                           RatFunc::from_int(1)),
                    std::invalid_argument);
    CHECK_THROWS_AS(OreRing<RatFunc>::make(SigmaKind::shift, DeltaKind::zero, tvar()),
                    std::invalid_argument);  // shift offset must be constant in t
    CHECK_THROWS_AS(OreRing<Rational>::make(SigmaKind::conjugation, DeltaKind::zero),
                    std::invalid_argument);
    CHECK_NOTHROW(OreRing<RatFunc>::make(SigmaKind::scale, DeltaKind::zero, RatFunc::from_int(2)));
}

TEST_CASE("iterated sigma application") {
    SECTION("shift ring inverse") {
        auto ring = ring_shift(-1);
        CHECK(ring.sigma_pow(tvar(), -1) == tvar() + RatFunc::one());
        CHECK(ring.sigma(tvar()) == tvar() - RatFunc::one());
        CHECK(ring.sigma_pow(tvar(), 3) == tvar() - RatFunc::from_int(3));
    }
    SECTION("conjugation is an involution") {
        auto ring = ring_conj();
        GaussianRational i = GaussianRational::i();
        CHECK(ring.sigma_pow(i, 2) == i);
        CHECK(ring.sigma_pow(i, 1) == -i);
        CHECK(ring.sigma_pow(i, -1) == -i);
    }
    SECTION("scale ring composes to powers") {
        auto ring = ring_qdiff();
        RatFuncTower t = RatFuncTower::indeterminate();
        RatFuncTower q = qvar();
        CHECK(ring.sigma_pow(t, 3) == q * q * q * t);
        CHECK(ring.sigma_pow(t, -2) == (q * q).inv() * t);
    }
    SECTION("round trip") {
        Rng rng(31);
        auto shift = ring_shift(2);
        auto qd = ring_qdiff();
        for (int n = 0; n < 100; ++n) {
            long k = rng.range(-5, 5);
            RatFunc a = sample_field<RatFunc>(rng, 2);
            CHECK(shift.sigma_pow(shift.sigma_pow(a, k), -k) == a);
            RatFuncTower b = sample_field<RatFuncTower>(rng, 1);
            CHECK(qd.sigma_pow(qd.sigma_pow(b, k), -k) == b);
        }
    }
}

TEST_CASE("ore polynomial multiplication follows the commutation rule") {
    SECTION("differential ring: x t = t x + 1") {
        auto ring = ring_weyl();
        OrePoly<RatFunc> x = OrePoly<RatFunc>::x();
        OrePoly<RatFunc> t = OrePoly<RatFunc>::constant(tvar());
        OrePoly<RatFunc> expect(std::vector<RatFunc>{RatFunc::one(), tvar()});
        CHECK(poly_mul(ring, x, t) == expect);
    }
    SECTION("shift ring: (t x)(t x) = t(t-1) x^2") {
        auto ring = ring_shift(-1);
        OrePoly<RatFunc> tx = OrePoly<RatFunc>::monomial(tvar(), 1);
        OrePoly<RatFunc> expect =
            OrePoly<RatFunc>::monomial(tvar() * (tvar() - RatFunc::one()), 2);
        CHECK(poly_mul(ring, tx, tx) == expect);
    }
    SECTION("q-difference ring: x t = q t x + 1") {
        auto ring = ring_qdiff();
        OrePoly<RatFuncTower> x = OrePoly<RatFuncTower>::x();
        OrePoly<RatFuncTower> t = OrePoly<RatFuncTower>::constant(RatFuncTower::indeterminate());
        OrePoly<RatFuncTower> expect(std::vector<RatFuncTower>{
            RatFuncTower::one(), qvar() * RatFuncTower::indeterminate()});
        CHECK(poly_mul(ring, x, t) == expect);
    }
}

TEST_CASE("addition, degree, and leading coefficient") {
    using P = OrePoly<RatFunc>;
    P x2(std::vector<RatFunc>{RatFunc::zero(), RatFunc::zero(), RatFunc::one()});
    P one = P::one();
    CHECK((x2 + one) + (-x2) == one);  // cancellation strips the degree
    CHECK(x2 + P::zero() == x2);
    CHECK(P::monomial(tvar(), 1) + P::x() ==
          P::monomial(tvar() + RatFunc::one(), 1));

    CHECK(P::zero().deg() == kNegInfDeg);
    CHECK(kNegInfDeg < -1000000);
    P f(std::vector<RatFunc>{RatFunc::zero(), RatFunc::one(), RatFunc::zero(),
                             tvar() * tvar()});
    CHECK(f.deg() == 3);
    CHECK(f.lc() == tvar() * tvar());
    CHECK_THROWS_AS(P::zero().lc(), std::domain_error);

    SECTION("lc law under shift") {
        auto ring = ring_shift(-1);
        P x = P::x();
        P tx = P::monomial(tvar(), 1);
        CHECK(poly_mul(ring, x, tx).lc() == tvar() - RatFunc::one());
    }
}

TEST_CASE("one-step reductions") {
    auto ring = ring_shift(-1);
    using P = OrePoly<RatFunc>;
    P x = P::x();
    P x2 = P::monomial(RatFunc::one(), 2);

    SECTION("exact right division") {
        auto rs = right_reduce_step(ring, x2, x);
        CHECK(rs.remainder.is_zero());
        CHECK(rs.factor == x);
        CHECK(poly_mul(ring, x, rs.factor) == x2);
    }
    SECTION("t x^2 reduced by x") {
        P f = P::monomial(tvar(), 2);
        auto rs = right_reduce_step(ring, f, x);
        CHECK(rs.remainder.is_zero());
        CHECK(rs.factor == P::monomial(tvar() + RatFunc::one(), 1));
        CHECK(poly_mul(ring, x, rs.factor) == f);
    }
    SECTION("remainder kept") {
        P f = x2 + P::one();
        auto rs = right_reduce_step(ring, f, x);
        CHECK(rs.factor == x);
        CHECK(rs.remainder == P::one());
    }
    SECTION("left reduction") {
        auto conj_ring = ring_conj();
        using PG = OrePoly<GaussianRational>;
        PG f = PG::monomial(GaussianRational::i(), 1);
        auto rs = left_reduce_step(conj_ring, f, PG::one());
        CHECK(rs.remainder.is_zero());
        CHECK(rs.factor == f);

        P g = P::monomial(tvar(), 1);
        auto rs2 = left_reduce_step(ring, g, x);
        CHECK(rs2.factor == P::constant(tvar()));
        CHECK(rs2.remainder.is_zero());
    }
    SECTION("preconditions") {
        CHECK_THROWS_AS(right_reduce_step(ring, x, x2), std::invalid_argument);
        CHECK_THROWS_AS(left_reduce_step(ring, P::zero(), x), std::invalid_argument);
    }
}

TEST_CASE("sigma-derivation law reports") {
    SECTION("explicit values") {
        auto weyl = ring_weyl();
        RatFunc t = tvar();
        CHECK(weyl.delta(t * t) == RatFunc::from_int(2) * t);

        auto qd = ring_qdiff();
        RatFuncTower tt = RatFuncTower::indeterminate();
        CHECK(qd.delta(tt) == RatFuncTower::one());
        // delta(t^2) = (q+1) t = q t * 1 + 1 * t
        CHECK(qd.delta(tt * tt) == (qvar() + RatFuncTower::one()) * tt);
        CHECK(qd.delta(tt * tt) == qd.sigma(tt) * qd.delta(tt) + qd.delta(tt) * tt);
    }
    SECTION("randomized law checks per ring") {
        CHECK(check_sigma_derivation(ring_q(), 200, 41).all_passed());
        CHECK(check_sigma_derivation(ring_conj(), 200, 42).all_passed());
        CHECK(check_sigma_derivation(ring_weyl(), 200, 43).all_passed());
        CHECK(check_sigma_derivation(ring_shift(-1), 200, 44).all_passed());
        CHECK(check_sigma_derivation(ring_qdiff(), 200, 45).all_passed());
    }
}

namespace {

template <Field K>
OrePoly<K> random_poly(Rng& rng, int max_deg, int size) {
    int d = static_cast<int>(rng.below(max_deg + 1));
    std::vector<K> c(static_cast<size_t>(d) + 1, K::zero());
    for (auto& v : c) v = sample_field<K>(rng, size);
    return OrePoly<K>(std::move(c));
}

template <Field K>
void check_ring_laws(const OreRing<K>& ring, int triples, std::uint64_t seed, int size) {
    Rng rng(seed);
    for (int n = 0; n < triples; ++n) {
        auto f = random_poly<K>(rng, 4, size);
        auto g = random_poly<K>(rng, 4, size);
        auto h = random_poly<K>(rng, 4, size);
        REQUIRE(poly_mul(ring, poly_mul(ring, f, g), h) ==
                poly_mul(ring, f, poly_mul(ring, g, h)));
        REQUIRE(poly_mul(ring, f, g + h) == poly_mul(ring, f, g) + poly_mul(ring, f, h));
        REQUIRE(poly_mul(ring, f + g, h) == poly_mul(ring, f, h) + poly_mul(ring, g, h));
        if (!f.is_zero() && !g.is_zero()) {
            auto fg = poly_mul(ring, f, g);
            REQUIRE(fg.deg() == f.deg() + g.deg());
            REQUIRE(fg.lc() == f.lc() * ring.sigma_pow(g.lc(), f.deg()));
        }
    }
}

}  // namespace

TEST_CASE("multiplication laws on random triples") {
    check_ring_laws(ring_conj(), 60, 51, 2);
    check_ring_laws(ring_weyl(), 60, 52, 2);
    check_ring_laws(ring_shift(-1), 60, 53, 2);
    check_ring_laws(ring_qdiff(), 30, 54, 1);
}

TEST_CASE("reduction postconditions re-verified by multiplication on samples") {
    Rng rng(61);
    auto ring = ring_weyl();
    for (int n = 0; n < 100; ++n) {
        auto f = random_poly<RatFunc>(rng, 4, 2);
        auto g = random_poly<RatFunc>(rng, 4, 2);
        if (f.is_zero() || g.is_zero() || g.deg() > f.deg()) continue;
        auto r = right_reduce_step(ring, f, g);
        REQUIRE(poly_mul(ring, g, r.factor) + r.remainder == f);
        REQUIRE((r.remainder.is_zero() || r.remainder.deg() < f.deg()));
        auto l = left_reduce_step(ring, f, g);
        REQUIRE(poly_mul(ring, l.factor, g) + l.remainder == f);
        REQUIRE((l.remainder.is_zero() || l.remainder.deg() < f.deg()));
    }
}
