#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>
#include <vector>

#include "skewlab/sigma_linear.hpp"

using namespace skewlab;
using namespace skewlab::sigma_linear;
using fields::FqElement;
using fields::PerfElement;
using ore::FqFrobeniusField;
using ore::make_frobenius_handle;
using ore::make_perfect_closure_handle;
using ore::PerfectClosureField;

namespace {

using FqOre = OrePoly<FqFrobeniusField>;
using PerfOre = OrePoly<PerfectClosureField>;
using FqTwist = NTwist<FqFrobeniusField>;
using FqSet = SigmaLinearSet<FqFrobeniusField>;

template <typename H>
OrePoly<H> rnd_twist(const std::shared_ptr<const H>& h, std::mt19937_64& rng, size_t maxdeg,
                     bool nonzero = false) {
    for (;;) {
        size_t d = rng() % (maxdeg + 1);
        std::vector<typename H::Element> cs;
        for (size_t i = 0; i <= d; ++i) cs.push_back(h->random(rng));
        auto f = OrePoly<H>::from_coeffs(h, std::move(cs));
        if (!nonzero || !f.is_zero()) return f;
    }
}

template <typename H>
NTwist<H> rnd_ntwist(const std::shared_ptr<const H>& h, std::mt19937_64& rng, size_t n,
                     bool nonzero = false) {
    for (;;) {
        std::vector<OrePoly<H>> cs;
        for (size_t j = 0; j < n; ++j) cs.push_back(rnd_twist(h, rng, 2));
        NTwist<H> t(h, std::move(cs));
        if (!nonzero || !t.is_zero()) return t;
    }
}

FqOre gamma_of(const std::shared_ptr<const FqFrobeniusField>& h) {
    return FqOre::sigma(h) - FqOre::identity(h);
}

}  // namespace

TEST_CASE("n-twists evaluate componentwise") {
    auto h = make_frobenius_handle(3, 2);
    std::mt19937_64 rng(3);
    for (int i = 0; i < 30; ++i) {
        FqOre d1 = rnd_twist(h, rng, 2);
        FqOre d2 = rnd_twist(h, rng, 2);
        FqTwist t(h, {d1, d2});
        FqElement x = h->random(rng);
        FqElement y = h->random(rng);
        CHECK(t.evaluate({x, y}) == d1.evaluate(x) + d2.evaluate(y));
        CHECK_THROWS_AS(t.evaluate({x}), std::invalid_argument);
    }
    FqTwist z = FqTwist::zero(h, 3);
    CHECK(z.is_zero());
    CHECK(z.arity() == 3);
    CHECK(z.evaluate({h->one(), h->one(), h->one()}).is_zero());

    // additivity of the map itself
    for (int i = 0; i < 30; ++i) {
        FqTwist t = rnd_ntwist(h, rng, 2);
        std::vector<FqElement> a{h->random(rng), h->random(rng)};
        std::vector<FqElement> b{h->random(rng), h->random(rng)};
        std::vector<FqElement> ab{a[0] + b[0], a[1] + b[1]};
        CHECK(t.evaluate(ab) == t.evaluate(a) + t.evaluate(b));
    }
}

TEST_CASE("membership") {
    auto h = make_frobenius_handle(3, 2);
    std::mt19937_64 rng(7);

    // the zero point lies in every sigma-linear set
    for (int i = 0; i < 20; ++i) {
        std::vector<FqTwist> gens;
        size_t n = 1 + rng() % 3;
        for (size_t k = 0; k < 1 + rng() % 3; ++k) gens.push_back(rnd_ntwist(h, rng, n));
        FqSet V(h, n, gens);
        CHECK(V.member(std::vector<FqElement>(n, h->zero())));
    }

    // V(sigma - id) in F_9 is exactly F_3
    FqSet fix(h, 1, {FqTwist::single(h, 1, 0, gamma_of(h))});
    uint64_t members = 0;
    for (uint64_t i = 0; i < 9; ++i) {
        FqElement c = h->element_at(i);
        bool in = fix.member({c});
        CHECK(in == c.as_scalar().has_value());
        if (in) ++members;
    }
    CHECK(members == 3);

    // diagonals satisfy delta(x_1) - delta(x_2)
    for (int i = 0; i < 20; ++i) {
        FqOre d = rnd_twist(h, rng, 2);
        FqTwist diag(h, {d, -d});
        FqSet V(h, 2, {diag});
        FqElement c = h->random(rng);
        CHECK(V.member({c, c}));
    }

    CHECK_THROWS_AS(fix.member({h->one(), h->one()}), std::invalid_argument);
}

TEST_CASE("rank of presentations") {
    auto h = make_frobenius_handle(3, 2);
    std::mt19937_64 rng(11);

    CHECK(rank(std::vector<FqTwist>{}) == 0);

    FqOre d = rnd_twist(h, rng, 2, true);
    CHECK(rank<FqFrobeniusField>({FqTwist::single(h, 1, 0, d)}) == 1);
    CHECK(rank<FqFrobeniusField>({FqTwist::zero(h, 2)}) == 0);

    // a planted left multiple adds no rank
    FqOre g = rnd_twist(h, rng, 2, true);
    FqTwist row = FqTwist::single(h, 1, 0, d);
    CHECK(rank<FqFrobeniusField>({row, row.left_mul(g)}) == 1);

    // independent variables give full rank
    FqTwist r1 = FqTwist::single(h, 2, 0, d);
    FqTwist r2 = FqTwist::single(h, 2, 1, g);
    CHECK(rank<FqFrobeniusField>({r1, r2}) == 2);

    // invariance under swaps, left scaling, and adding left multiples
    for (int i = 0; i < 40; ++i) {
        size_t n = 2 + rng() % 2;
        std::vector<FqTwist> gens;
        for (size_t k = 0; k < 2 + rng() % 2; ++k) gens.push_back(rnd_ntwist(h, rng, n));
        size_t base = rank(gens);

        std::vector<FqTwist> swapped = gens;
        std::swap(swapped[0], swapped[swapped.size() - 1]);
        CHECK(rank(swapped) == base);

        std::vector<FqTwist> scaled = gens;
        scaled[0] = scaled[0].left_mul(rnd_twist(h, rng, 2, true));
        CHECK(rank(scaled) == base);

        if (gens.size() >= 2) {
            std::vector<FqTwist> mixed = gens;
            mixed[1] = mixed[1] + mixed[0].left_mul(rnd_twist(h, rng, 2));
            CHECK(rank(mixed) == base);
        }
    }

    std::vector<FqTwist> ragged{FqTwist::zero(h, 1), FqTwist::zero(h, 2)};
    CHECK_THROWS_AS(rank(ragged), std::invalid_argument);
}

TEST_CASE("dimension bookkeeping") {
    auto h = make_frobenius_handle(3, 2);
    std::mt19937_64 rng(13);

    for (size_t n = 1; n <= 4; ++n) CHECK(dimension_upper(FqSet::full(h, n)) == n);

    // G_b has dimension bound 1 for every arity
    for (size_t n = 2; n <= 4; ++n) {
        std::vector<FqElement> b;
        for (size_t i = 0; i < n; ++i) b.push_back(h->random_nonzero(rng));
        FqSet G = build_G(h, b);
        CHECK(G.generators().size() == n - 1);
        CHECK(rank(G.generators()) == n - 1);
        CHECK(dimension_upper(G) == 1);
    }

    // block products add
    for (int i = 0; i < 20; ++i) {
        size_t nu = 1 + rng() % 2, nv = 1 + rng() % 2;
        std::vector<FqTwist> gu, gv;
        for (size_t k = 0; k < rng() % 3; ++k) gu.push_back(rnd_ntwist(h, rng, nu));
        for (size_t k = 0; k < rng() % 3; ++k) gv.push_back(rnd_ntwist(h, rng, nv));
        FqSet U(h, nu, gu), V(h, nv, gv);
        FqSet UV = product(U, V);
        CHECK(UV.arity() == nu + nv);
        CHECK(dimension_upper(UV) == dimension_upper(U) + dimension_upper(V));

        // membership splits across the blocks
        std::vector<FqElement> pu, pv;
        for (size_t k = 0; k < nu; ++k) pu.push_back(h->random(rng));
        for (size_t k = 0; k < nv; ++k) pv.push_back(h->random(rng));
        std::vector<FqElement> joint = pu;
        joint.insert(joint.end(), pv.begin(), pv.end());
        CHECK(UV.member(joint) == (U.member(pu) && V.member(pv)));
    }
}

TEST_CASE("the G_b family") {
    auto h = make_frobenius_handle(3, 2);

    // n = 1: no equations
    FqSet g1 = build_G(h, {h->one()});
    CHECK(g1.generators().empty());
    CHECK(dimension_upper(g1) == 1);

    // b = (1,1): diagonal points are members
    FqSet diag = build_G(h, {h->one(), h->one()});
    for (uint64_t i = 0; i < 9; ++i) {
        FqElement c = h->element_at(i);
        CHECK(diag.member({c, c}));
    }

    // member agrees with the defining equation on all 81 pairs
    FqElement u = h->element_at(3);  // outside F_3
    REQUIRE(!u.as_scalar().has_value());
    FqSet G = build_G(h, {h->one(), u});
    for (uint64_t i = 0; i < 9; ++i) {
        for (uint64_t j = 0; j < 9; ++j) {
            FqElement x = h->element_at(i);
            FqElement y = h->element_at(j);
            bool direct = (h->sigma(x) - x) == u * (h->sigma(y) - y);
            CHECK(G.member({x, y}) == direct);
        }
    }

    CHECK_THROWS_AS(build_G(h, {h->one(), h->zero()}), std::invalid_argument);
    CHECK_THROWS_AS(build_G(h, std::vector<FqElement>{}), std::invalid_argument);
}

TEST_CASE("radicality of G_b") {
    auto h = make_frobenius_handle(3, 2);
    std::mt19937_64 rng(17);

    CHECK(radical_test_G(h, {h->element_at(5)}));
    CHECK(!radical_test_G(h, {h->one(), h->one()}));
    FqElement u = h->element_at(3);
    CHECK(radical_test_G(h, {h->one(), u}));
    CHECK_THROWS_AS(radical_test_G(h, {h->zero()}), std::invalid_argument);

    // fast path and exhaustion agree on every nonzero pair over F_9
    for (uint64_t i = 1; i < 9; ++i) {
        for (uint64_t j = 1; j < 9; ++j) {
            std::vector<FqElement> b{h->element_at(i), h->element_at(j)};
            CHECK(radical_test_G_exhaustive(h, b) == radical_test_G_moore(h, b));
        }
    }
    auto h4 = make_frobenius_handle(2, 2);
    for (uint64_t i = 1; i < 4; ++i) {
        for (uint64_t j = 1; j < 4; ++j) {
            std::vector<FqElement> b{h4->element_at(i), h4->element_at(j)};
            CHECK(radical_test_G_exhaustive(h4, b) == radical_test_G_moore(h4, b));
        }
    }

    // a tuple scan past the enumeration bound falls through to Moore
    std::vector<FqElement> big;
    for (int i = 0; i < 10; ++i) big.push_back(h->random_nonzero(rng));
    CHECK(radical_test_G(h, big) == radical_test_G_moore(h, big));
    CHECK_THROWS_AS(radical_test_G_exhaustive(h, big), BoundExceededError);

    // perfect closure instances
    auto pc = make_perfect_closure_handle(3);
    PerfElement t = PerfElement::t(pc->coeff_field());
    CHECK(radical_test_G(pc, {pc->one(), t}));
    CHECK(!radical_test_G(pc, {t, t}));
    CHECK(!radical_test_G(pc, {pc->one(), pc->scalar(2)}));
    for (int i = 0; i < 20; ++i) {
        std::vector<PerfElement> b{pc->random_nonzero(rng), pc->random_nonzero(rng)};
        CHECK(radical_test_G_exhaustive(pc, b) == radical_test_G_moore(pc, b));
    }
}

TEST_CASE("point counts") {
    auto h9 = make_frobenius_handle(3, 2);
    FqSet fix9(h9, 1, {FqTwist::single(h9, 1, 0, gamma_of(h9))});
    CHECK(count_points(fix9) == 3);

    auto h8 = make_frobenius_handle(2, 3);
    FqSet fix8(h8, 1, {FqTwist::single(h8, 1, 0, gamma_of(h8))});
    CHECK(count_points(fix8) == 2);

    CHECK(count_points(FqSet::full(h9, 2)) == 81);

    // rank-nullity for every twist of degree <= 2 on F_9
    for (uint64_t c0 = 0; c0 < 9; ++c0) {
        for (uint64_t c1 = 0; c1 < 9; ++c1) {
            for (uint64_t c2 = 0; c2 < 9; ++c2) {
                FqOre f = FqOre::from_coeffs(h9, {h9->element_at(c0), h9->element_at(c1),
                                                  h9->element_at(c2)});
                uint64_t ker = 0;
                std::vector<bool> image(9, false);
                for (uint64_t i = 0; i < 9; ++i) {
                    FqElement v = f.evaluate(h9->element_at(i));
                    if (v.is_zero()) ++ker;
                    image[v.index()] = true;
                }
                uint64_t im = 0;
                for (bool bit : image) im += bit ? 1 : 0;
                CHECK(ker * im == 9);
            }
        }
    }

    CHECK_THROWS_AS(count_points(FqSet::full(h9, 8)), BoundExceededError);
    auto pc = make_perfect_closure_handle(3);
    SigmaLinearSet<PerfectClosureField> pfull =
        SigmaLinearSet<PerfectClosureField>::full(pc, 1);
    CHECK_THROWS_AS(count_points(pfull), BoundExceededError);
}

TEST_CASE("sigma plus delta image decomposition") {
    auto pc = make_perfect_closure_handle(3);
    std::mt19937_64 rng(23);

    // delta = id fixes v = a
    for (int i = 0; i < 10; ++i) {
        PerfElement a = pc->random(rng);
        auto [u, v] = decompose_sigma_delta(a, PerfOre::identity(pc));
        CHECK(u.is_zero());
        CHECK(v == a);
    }
    {
        auto [u, v] = decompose_sigma_delta(pc->zero(), PerfOre::identity(pc));
        CHECK(u.is_zero());
        CHECK(v.is_zero());
    }

    auto reconstructs = [](const auto& h, const auto& a, const auto& delta) {
        auto [u, v] = decompose_sigma_delta(a, delta);
        return h->sigma(u) + delta.evaluate(v) == a;
    };

    for (int i = 0; i < 200; ++i) {
        PerfElement a = pc->random(rng);
        PerfOre delta = rnd_twist(pc, rng, 3);
        if (delta.coeff(0).is_zero()) continue;
        CHECK(reconstructs(pc, a, delta));
    }

    auto h = make_frobenius_handle(3, 3);
    for (int i = 0; i < 100; ++i) {
        FqElement a = h->random(rng);
        FqOre delta = rnd_twist(h, rng, 3);
        if (delta.coeff(0).is_zero()) continue;
        CHECK(reconstructs(h, a, delta));
    }

    PerfOre no_const = PerfOre::sigma(pc);
    CHECK_THROWS_AS(decompose_sigma_delta(pc->one(), no_const), std::invalid_argument);
}

TEST_CASE("hypersurface cuts") {
    auto h = make_frobenius_handle(3, 2);
    std::mt19937_64 rng(29);

    // a twist already in the span changes nothing
    for (int i = 0; i < 20; ++i) {
        FqTwist g = rnd_ntwist(h, rng, 2, true);
        FqSet V(h, 2, {g});
        FqTwist planted = g.left_mul(rnd_twist(h, rng, 2, true));
        CHECK(hypersurface_cut_check(V, planted));
        CHECK(dimension_upper(V.with_generator(planted)) == dimension_upper(V));
    }

    // a fresh variable's twist cuts exactly one dimension
    FqOre d = rnd_twist(h, rng, 2, true);
    FqSet V(h, 2, {FqTwist::single(h, 2, 0, d)});
    FqTwist fresh = FqTwist::single(h, 2, 1, rnd_twist(h, rng, 2, true));
    CHECK(hypersurface_cut_check(V, fresh));
    CHECK(dimension_upper(V.with_generator(fresh)) == dimension_upper(V) - 1);

    // drops are always 0 or 1
    for (int i = 0; i < 200; ++i) {
        size_t n = 1 + rng() % 3;
        std::vector<FqTwist> gens;
        for (size_t k = 0; k < rng() % 3; ++k) gens.push_back(rnd_ntwist(h, rng, n));
        FqSet W(h, n, gens);
        CHECK(hypersurface_cut_check(W, rnd_ntwist(h, rng, n)));
    }
}
