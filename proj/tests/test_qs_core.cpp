#include <catch2/catch_amalgamated.hpp>

#include "test_support.hpp"

using namespace oreqs;
using namespace oreqs::test;

namespace {

using P = OrePoly<RatFunc>;

OreMatrix<RatFunc> idem_0x01(const OreRing<RatFunc>& ring) {
    OreMatrix<RatFunc> f(ring, 2, 2);
    f.at(0, 1) = P::x();
    f.at(1, 1) = P::one();
    return f;
}

}  // namespace

TEST_CASE("degenerate inputs") {
    auto ring = ring_weyl();

    SECTION("zero matrix") {
        OreMatrix<RatFunc> z(ring, 3, 3);
        auto res = diagonalize_idempotent(z);
        CHECK(res.rank == 0);
        CHECK(res.u.is_identity());
        CHECK(res.basis.empty());
        CHECK(res.d == z);
        CHECK(verify_result(z, res).all_passed());
    }
    SECTION("identity matrix") {
        auto id = OreMatrix<RatFunc>::identity(ring, 3);
        auto res = diagonalize_idempotent(id);
        CHECK(res.rank == 3);
        CHECK(res.basis.size() == 3);
        CHECK(res.basis[0][0].is_one());
        CHECK(verify_result(id, res).all_passed());
    }
    SECTION("1x1 blocks") {
        OreMatrix<RatFunc> z(ring, 1, 1);
        CHECK(diagonalize_idempotent(z).rank == 0);
        OreMatrix<RatFunc> o(ring, 1, 1);
        o.at(0, 0) = P::one();
        auto res = diagonalize_idempotent(o);
        CHECK(res.rank == 1);
        CHECK(res.u.at(0, 0).is_one());
    }
    SECTION("not idempotent is rejected with the offending entry") {
        OreMatrix<RatFunc> g(ring, 2, 2);
        g.at(0, 0) = P::one();
        g.at(0, 1) = P::one();
        g.at(1, 1) = P::one();
        try {
            diagonalize_idempotent(g);
            FAIL("expected NotIdempotentError");
        } catch (const NotIdempotentError& e) {
            CHECK(e.row() == 0);
            CHECK(e.col() == 1);
        }
    }
}

TEST_CASE("rank-one 2x2 with polynomial entry") {
    for (auto ring : {ring_weyl(), ring_shift(-1)}) {
        auto f = idem_0x01(ring);
        auto res = diagonalize_idempotent(f);
        CHECK(res.rank == 1);
        OreMatrix<RatFunc> d(ring, 2, 2);
        d.at(1, 1) = P::one();
        CHECK(res.d == d);
        REQUIRE(res.basis.size() == 1);
        // b F = b forces the basis row to (0, unit-scaled generator)
        CHECK(res.basis[0][0].is_zero());
        CHECK(!res.basis[0][1].is_zero());
        CHECK(verify_result(f, res).all_passed());
    }
}

TEST_CASE("zero first row with nonzero first column (column-side endgame)") {
    auto ring = ring_weyl();
    OreMatrix<RatFunc> f(ring, 2, 2);
    f.at(1, 0) = P::x();
    f.at(1, 1) = P::one();
    REQUIRE(is_idempotent(f));
    auto res = diagonalize_idempotent(f, /*paranoid=*/true);
    CHECK(res.rank == 1);
    CHECK(verify_result(f, res).all_passed());
}

TEST_CASE("step dispatch") {
    auto ring = ring_weyl();

    SECTION("all-zero border shrinks") {
        OreMatrix<RatFunc> f(ring, 2, 2);
        f.at(1, 1) = P::one();
        CHECK(next_action(f, 0).action == StepAction::shrink_zero_border);
        CHECK(next_action(f, 1).action == StepAction::reduction1);
    }
    SECTION("zero pivot with nonzero row entry") {
        auto f = idem_0x01(ring);
        auto plan = next_action(f, 0);
        CHECK(plan.action == StepAction::make_pivot_nonzero);
        CHECK(plan.op.i == 1);
        CHECK(plan.op.j == 0);
        CHECK(plan.op.m == -P::one());
    }
    SECTION("constant pivot picks the closed-form elimination") {
        OreMatrix<RatFunc> f(ring, 2, 2);
        f.at(0, 0) = P::constant(RatFunc::from_int(5));
        CHECK(next_action(f, 0).action == StepAction::reduction1);
    }
    SECTION("polynomial pivot picks degree reduction") {
        OreMatrix<RatFunc> f(ring, 2, 2);
        f.at(0, 0) = P::x();
        CHECK(next_action(f, 0).action == StepAction::reduction2);
    }
}

TEST_CASE("diagonal inputs only need the final permutation") {
    auto ring = ring_shift(-1);
    OreMatrix<RatFunc> f(ring, 3, 3);
    f.at(0, 0) = P::one();
    f.at(2, 2) = P::one();
    auto res = diagonalize_idempotent(f);
    CHECK(res.rank == 2);
    OreMatrix<RatFunc> d(ring, 3, 3);
    d.at(1, 1) = P::one();
    d.at(2, 2) = P::one();
    CHECK(res.d == d);
    CHECK(verify_result(f, res).all_passed());
    for (const auto& st : res.trace) CHECK(st.kind == TraceKind::final_permutation);
}

TEST_CASE("trace replay reproduces U, Uinv, D exactly") {
    auto pv = parse_problem(std::string(kShift3x3));
    auto& p = std::get<Problem<RatFunc>>(pv);
    auto res = diagonalize_idempotent(p.f);
    auto replayed = replay_trace(p.f, res.trace);
    CHECK(replayed.f() == res.d);
    CHECK(replayed.u() == res.u);
    CHECK(replayed.uinv() == res.uinv);
}

TEST_CASE("verify_result detects tampering") {
    auto ring = ring_weyl();
    auto f = idem_0x01(ring);
    auto res = diagonalize_idempotent(f);
    REQUIRE(verify_result(f, res).all_passed());
    auto tampered = res;
    tampered.u.swap_rows(0, 1);  // U only; Uinv left stale
    CHECK(!verify_result(f, tampered).all_passed());
}

TEST_CASE("conjugation-ring fixture diagonalizes to rank 3") {
    auto pv = parse_problem(std::string(kConjugation4x4));
    auto& p = std::get<Problem<GaussianRational>>(pv);
    REQUIRE(is_idempotent(p.f));
    auto res = diagonalize_idempotent(p.f, /*paranoid=*/true);
    CHECK(res.rank == 3);
    OreMatrix<GaussianRational> d(p.ring, 4, 4);
    for (int i = 1; i < 4; ++i) d.at(i, i) = OrePoly<GaussianRational>::one();
    CHECK(res.d == d);
    CHECK(verify_result(p.f, res).all_passed());
}

TEST_CASE("generated idempotents come back with their constructed rank") {
    GenSpec spec;
    spec.transvections = 4;
    spec.max_monomial_degree = 2;
    int checked = 0;
    for (int size = 1; size <= 3; ++size) {
        for (int rank = 0; rank <= size; ++rank) {
            spec.size = size;
            spec.rank = rank;
            spec.seed = static_cast<std::uint64_t>(97 * size + rank);
            auto run = [&](auto ring) {
                auto gen = generate_idempotent(spec, ring);
                auto res = diagonalize_idempotent(gen.f);
                REQUIRE(res.rank == rank);
                REQUIRE(verify_result(gen.f, res).all_passed());
            };
            run(ring_conj());
            run(ring_weyl());
            run(ring_shift(-1));
            ++checked;
        }
    }
    CHECK(checked == 9);
}

TEST_CASE("rank is invariant under random conjugation") {
    Rng rng(81);
    GenSpec spec;
    spec.size = 3;
    spec.transvections = 3;
    spec.max_monomial_degree = 1;
    auto ring = ring_shift(-1);
    for (int n = 0; n < 5; ++n) {
        spec.rank = static_cast<int>(rng.below(4));
        spec.seed = 1000 + static_cast<std::uint64_t>(n);
        auto gen = generate_idempotent(spec, ring);
        for (int v = 0; v < 2; ++v) {
            ConjugationState<RatFunc> st(gen.f);
            for (int k = 0; k < 4; ++k) {
                int i = static_cast<int>(rng.below(3));
                int j = static_cast<int>(rng.below(2));
                if (j >= i) ++j;
                st.transvect(i, j,
                             OrePoly<RatFunc>::monomial(sample_nonzero_field<RatFunc>(rng, 1),
                                                        static_cast<int>(rng.below(2))),
                             TraceKind::transvection, "conjugator");
            }
            auto res = diagonalize_idempotent(st.f());
            REQUIRE(res.rank == spec.rank);
        }
    }
}
