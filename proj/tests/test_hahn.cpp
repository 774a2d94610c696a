#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <optional>
#include <random>
#include <vector>

#include "skewlab/fq.hpp"
#include "skewlab/hahn.hpp"
#include "skewlab/perfect.hpp"

using namespace skewlab;
using namespace skewlab::fields;
using namespace skewlab::hahn;

static_assert(Coefficient<FqElement>);
static_assert(Coefficient<PerfElement>);
static_assert(Coefficient<HahnSeries<FqElement>>);
static_assert(Coefficient<HahnSeries<HahnSeries<FqElement>>>);

namespace {

using HS = HahnSeries<FqElement>;

Exponent E(int64_t p, int64_t num, int64_t k = 0) { return Exponent(p, num, k); }

FqElement rand_elem(const FieldRef& f, std::mt19937_64& g, bool nonzero = false) {
    std::uniform_int_distribution<uint64_t> d(0, f->size() - 1);
    for (;;) {
        FqElement x = FqElement::element_at(f, d(g));
        if (!nonzero || !x.is_zero()) return x;
    }
}

// Support drawn from num in [-6,6], k in [0,2]; optional window at 7, which
// never clips the support pool.
HS rand_series(const FieldRef& f, std::mt19937_64& g) {
    int64_t p = f->p();
    std::uniform_int_distribution<int> nt(0, 4), num(-6, 6), kk(0, 2), pr(0, 3);
    std::vector<HS::Term> ts;
    int n = nt(g);
    for (int i = 0; i < n; ++i) ts.push_back({Exponent(p, num(g), kk(g)), rand_elem(f, g)});
    std::optional<Exponent> prec;
    if (pr(g) == 0) prec = Exponent(p, 7);
    return HS::from_terms(FqElement::zero(f), p, ts, prec);
}

HS rand_nonzero(const FieldRef& f, std::mt19937_64& g) {
    for (;;) {
        HS s = rand_series(f, g);
        if (!s.is_zero()) return s;
    }
}

}  // namespace

TEST_CASE("exponent normalization and accessors") {
    CHECK(E(3, 6, 1) == E(3, 2, 0));
    CHECK(E(2, 4, 2) == E(2, 1, 0));
    CHECK(E(5, 0, 3) == E(5, 0, 0));
    CHECK(E(3, 10, 2).num() == 10);
    CHECK(E(3, 10, 2).k() == 2);
    CHECK(E(3, 5).is_integer());
    CHECK(!E(3, 5, 1).is_integer());
    CHECK(E(7, 0).is_zero());
    CHECK_THROWS_AS(Exponent(4, 1), std::invalid_argument);
    CHECK_THROWS_AS(Exponent(3, 1, -1), std::invalid_argument);
    CHECK(E(3, -2, 1).str() == "-2/3^1");
    CHECK(E(3, 4).str() == "4");
    CHECK(E(2, 1, 2).approx() == doctest::Approx(0.25));
}

TEST_CASE("exponent arithmetic") {
    CHECK(E(3, 1, 1) + E(3, 1, 1) == E(3, 2, 1));
    CHECK(E(2, 1, 1) + E(2, 1, 1) == E(2, 1, 0));
    CHECK(E(5, 1) - E(5, 1, 1) == E(5, 4, 1));
    CHECK(-E(3, 2, 1) == E(3, -2, 1));
    CHECK(E(3, 1, 2).scaled(3) == E(3, 1, 1));
    CHECK(E(3, 1, 1).scaled(2) == E(3, 2, 1));
    CHECK(E(3, 1, 2).scaled_pow_p(1) == E(3, 1, 1));
    CHECK(E(3, 2, 0).scaled_pow_p(-2) == E(3, 2, 2));
    CHECK(E(3, 3, 0).scaled_pow_p(-1) == E(3, 1, 0));
    CHECK(E(3, 1, 1).scaled_pow_p(3) == E(3, 9, 0));

    CHECK(E(3, 1, 1) < E(3, 1, 0));
    CHECK(E(3, -1, 0) < E(3, -1, 2));
    CHECK(E(2, 3, 2) < E(2, 1, 0));
    CHECK(E(5, 2, 1) <= E(5, 2, 1));
    CHECK(E(5, 1) > E(5, 4, 1));

    CHECK_THROWS_AS(E(2, 1) + E(3, 1), FieldMismatchError);
    CHECK_THROWS_AS((void)(E(2, 1) < E(3, 1)), FieldMismatchError);
    CHECK_THROWS_AS(E(2, INT64_MAX) + E(2, 1), std::overflow_error);
    CHECK_THROWS_AS((void)(E(2, INT64_MAX / 2) < E(2, 1, 62)), std::overflow_error);
}

TEST_CASE("value group membership") {
    CHECK(gamma_contains(3, 1, 9));
    CHECK(gamma_contains(3, 5, 15));
    CHECK(gamma_contains(3, 1, -3));
    CHECK(gamma_contains(3, 0, 7));
    CHECK(gamma_contains(2, 3, 4));
    CHECK(gamma_contains(5, -2, 25));
    CHECK(!gamma_contains(3, 1, 2));
    CHECK(!gamma_contains(2, 1, 6));
    CHECK(!gamma_contains(5, 3, 10));
    CHECK_THROWS_AS(gamma_contains(3, 1, 0), std::invalid_argument);
}

TEST_CASE("coset residues partition the value group") {
    // Hand-checked residues: e - r must land in m*Gamma.
    CHECK(coset_mod(E(3, 5), 2) == 1);
    CHECK(coset_mod(E(3, 1, 1), 2) == 1);   // 1/3 - 1 = -2/3
    CHECK(coset_mod(E(3, 2, 1), 2) == 0);   // 2/3 = 2*(1/3)
    CHECK(coset_mod(E(2, 1, 1), 3) == 2);   // 1/2 - 2 = -3/2
    CHECK(coset_mod(E(2, 1, 2), 3) == 1);   // 1/4 - 1 = -3/4
    CHECK(coset_mod(E(5, -1), 2) == 1);
    CHECK(coset_mod(E(3, 0), 2) == 0);
    CHECK_THROWS_AS(coset_mod(E(3, 1), 3), std::invalid_argument);
    CHECK_THROWS_AS(coset_mod(E(2, 1), 4), std::invalid_argument);

    std::mt19937_64 g(7);
    std::uniform_int_distribution<int> num(-40, 40), kk(0, 4);
    for (int64_t p : {3, 5}) {
        for (int64_t m : {2, 3}) {
            if (m % p == 0) continue;
            for (int i = 0; i < 200; ++i) {
                Exponent e(p, num(g), kk(g));
                Exponent f(p, num(g), kk(g));
                int64_t re = coset_mod(e, m);
                int64_t rf = coset_mod(f, m);
                CHECK(re >= 0);
                CHECK(re < m);
                CHECK(coset_mod(e + f, m) == (re + rf) % m);
                CHECK(coset_mod(e + E(p, 1), m) == (re + 1) % m);
                CHECK(coset_mod(e.scaled(m), m) == 0);
            }
        }
    }
}

TEST_CASE("series construction and basic queries") {
    auto f = get_field(5, 1);
    FqElement z = FqElement::zero(f);
    HS s0 = HS::zero(z, 5);
    CHECK(s0.is_zero());
    CHECK(s0.is_exact_zero());
    CHECK_THROWS_AS(s0.valuation(), ZeroSeriesError);
    CHECK_THROWS_AS(s0.leading_coeff(), ZeroSeriesError);

    HS sp = HS::zero_to_precision(z, 5, E(5, 2));
    CHECK(sp.is_zero());
    CHECK(!sp.is_exact_zero());
    CHECK_THROWS_AS(sp.valuation(), ZeroSeriesError);

    HS m = HS::monomial(FqElement::scalar(f, 3), E(5, -1, 1));
    CHECK(m.is_monomial());
    CHECK(m.valuation() == E(5, -1, 1));
    CHECK(m.leading_coeff() == FqElement::scalar(f, 3));
    CHECK(m.is_exact());

    // zero coefficient collapses to exact zero
    CHECK(HS::monomial(z, E(5, 2)).is_exact_zero());

    // duplicate exponents merge, zero sums drop
    HS dup = HS::from_terms(z, 5, {{E(5, 1), FqElement::scalar(f, 2)},
                                   {E(5, 1), FqElement::scalar(f, 3)},
                                   {E(5, 0), FqElement::one(f)}});
    CHECK(dup == HS::one(z, 5));

    // terms at or past the window are discarded on construction
    HS w = HS::from_terms(z, 5, {{E(5, 0), FqElement::one(f)}, {E(5, 3), FqElement::one(f)}},
                          E(5, 3));
    CHECK(w.terms().size() == 1);

    CHECK_THROWS_AS(HS::from_terms(z, 5, {{E(3, 1), FqElement::one(f)}}, std::nullopt),
                    FieldMismatchError);
    CHECK_THROWS_AS(HS(z, 3), FieldMismatchError);

    CHECK(m.coeff_at(E(5, -1, 1)) == FqElement::scalar(f, 3));
    CHECK(m.coeff_at(E(5, 0)).is_zero());
}

TEST_CASE("series ring axioms to the common window") {
    std::mt19937_64 g(20260822);
    for (int64_t p : {3, 5}) {
        auto f = get_field(p, 2);
        FqElement z = FqElement::zero(f);
        HS one = HS::one(z, p);
        for (int i = 0; i < 60; ++i) {
            HS a = rand_series(f, g);
            HS b = rand_series(f, g);
            HS c = rand_series(f, g);
            CHECK(a + b == b + a);
            CHECK(a * b == b * a);
            CHECK((a + b) + c == a + (b + c));
            CHECK(((a * b) * c).agrees_with(a * (b * c)));
            CHECK((a * (b + c)).agrees_with(a * b + a * c));
            CHECK((a - a).is_zero());
            CHECK((a * one).agrees_with(a));
            CHECK((a + HS::zero(z, p)) == a);
        }
    }
}

TEST_CASE("valuation is additive on products") {
    std::mt19937_64 g(11);
    auto f = get_field(3, 2);
    for (int i = 0; i < 80; ++i) {
        HS a = rand_nonzero(f, g);
        HS b = rand_nonzero(f, g);
        HS ab = a * b;
        if (ab.is_zero()) continue;  // product support can fall past the window
        CHECK(ab.valuation() == a.valuation() + b.valuation());
        CHECK(ab.leading_coeff() == a.leading_coeff() * b.leading_coeff());
    }
}

TEST_CASE("monomial product fast path matches the general path") {
    std::mt19937_64 g(13);
    auto f = get_field(5, 2);
    FqElement z = FqElement::zero(f);
    for (int i = 0; i < 60; ++i) {
        HS a = rand_series(f, g);
        HS m = HS::monomial(rand_elem(f, g, true), Exponent(5, int64_t(g() % 9) - 4, g() % 3));
        CHECK(a * m == HS::mul_general(a, m));
        CHECK(m * a == HS::mul_general(m, a));
        HS m2 = m.truncated(E(5, 7));
        CHECK(a * m2 == HS::mul_general(a, m2));
    }
    HS zp = HS::zero_to_precision(z, 5, E(5, 2));
    HS m = HS::monomial(FqElement::one(f), E(5, 1));
    CHECK(zp * m == HS::mul_general(zp, m));
}

TEST_CASE("precision propagation rules") {
    auto f = get_field(5, 1);
    FqElement z = FqElement::zero(f);
    FqElement one = FqElement::one(f);
    HS a = HS::from_terms(z, 5, {{E(5, 0), one}}, E(5, 2));                    // 1 + O(t^2)
    HS b = HS::from_terms(z, 5, {{E(5, 1), one}, {E(5, 3), one}});             // t + t^3 exact

    // sum window is the finer one
    CHECK(a + b == HS::from_terms(z, 5, {{E(5, 0), one}, {E(5, 1), one}}, E(5, 2)));

    // product window shifts by the other factor's valuation
    CHECK(a * b == HS::from_terms(z, 5, {{E(5, 1), one}}, E(5, 3)));

    // windows add through zero-to-precision operands
    HS zp2 = HS::zero_to_precision(z, 5, E(5, 2));
    HS zp3 = HS::zero_to_precision(z, 5, E(5, 3));
    CHECK(zp2 * zp3 == HS::zero_to_precision(z, 5, E(5, 5)));
    CHECK(zp2 * b == HS::zero_to_precision(z, 5, E(5, 3)));
    CHECK(zp2 * HS::zero(z, 5) == HS::zero(z, 5));
    CHECK(zp2 + HS::zero(z, 5) == zp2);
    CHECK(zp2 + zp3 == zp2);

    // truncation caps the window and discards clipped support
    HS t = b.truncated(E(5, 2));
    CHECK(t == HS::from_terms(z, 5, {{E(5, 1), one}}, E(5, 2)));
    CHECK(t.truncated(E(5, 4)) == t);

    // scaling by an exact coefficient keeps the window
    CHECK(a.scaled(FqElement::scalar(f, 2)) ==
          HS::from_terms(z, 5, {{E(5, 0), FqElement::scalar(f, 2)}}, E(5, 2)));
    CHECK(a.scaled(z) == HS::zero(z, 5));
    CHECK(a.shifted(E(5, 1, 1)) ==
          HS::from_terms(z, 5, {{E(5, 1, 1), one}}, E(5, 1, 1) + E(5, 2)));
}

TEST_CASE("window agreement") {
    auto f = get_field(5, 1);
    FqElement z = FqElement::zero(f);
    FqElement one = FqElement::one(f);
    HS a = HS::from_terms(z, 5, {{E(5, 0), one}, {E(5, 1), one}}, E(5, 2));
    HS b = HS::from_terms(z, 5, {{E(5, 0), one}, {E(5, 1), one}, {E(5, 5), one}});
    HS c = HS::from_terms(z, 5, {{E(5, 0), one}, {E(5, 1), FqElement::scalar(f, 2)}});
    CHECK(a.agrees_with(b));
    CHECK(b.agrees_with(a));
    CHECK(!a.agrees_with(c));
    CHECK(!b.agrees_with(c));
    CHECK(b.agrees_with(b));
    CHECK(!(a == b));
    // exact series agree only when identical
    HS d = HS::from_terms(z, 5, {{E(5, 0), one}, {E(5, 1), one}});
    CHECK(!d.agrees_with(b));
}

TEST_CASE("geometric series inversion") {
    auto f = get_field(5, 1);
    FqElement z = FqElement::zero(f);
    FqElement one = FqElement::one(f);
    HS s = HS::one(z, 5) - HS::monomial(one, E(5, 1));  // 1 - t

    HS inv3 = s.invert(E(5, 3));
    CHECK(inv3 == HS::from_terms(z, 5, {{E(5, 0), one}, {E(5, 1), one}, {E(5, 2), one}},
                                 E(5, 3)));
    CHECK((s * inv3).agrees_with(HS::one(z, 5)));

    // requested windows are honored exactly
    HS inv10 = s.invert(E(5, 10));
    CHECK(inv10.prec().has_value());
    CHECK(*inv10.prec() == E(5, 10));
    CHECK(inv10.terms().size() == 10);
    CHECK((s * inv10).agrees_with(HS::one(z, 5)));

    // fractional windows work the same way
    HS invh = s.invert(E(5, 5, 1));
    CHECK(*invh.prec() == E(5, 5, 1));
    CHECK(invh.terms().size() == 1);
}

TEST_CASE("inversion on random series") {
    std::mt19937_64 g(17);
    for (int64_t p : {2, 3, 5}) {
        auto f = get_field(p, 2);
        for (int i = 0; i < 40; ++i) {
            HS s = rand_nonzero(f, g);
            HS inv = s.invert(Exponent(p, 4));
            CHECK((s * inv).agrees_with(s.one_like()));
        }
    }
}

TEST_CASE("inverse window policy") {
    auto f = get_field(5, 1);
    FqElement z = FqElement::zero(f);
    FqElement one = FqElement::one(f);

    // exact monomials invert exactly
    HS m = HS::monomial(FqElement::scalar(f, 3), E(5, 2));
    HS minv = m.inverse();
    CHECK(minv == HS::monomial(FqElement::scalar(f, 2), E(5, -2)));
    CHECK(minv.is_exact());
    CHECK((m * minv) == HS::one(z, 5));

    // exact non-monomials fall back to the process default window
    HS s = HS::one(z, 5) - HS::monomial(one, E(5, 1));
    HS sinv = s.inverse();
    CHECK(sinv.prec().has_value());
    CHECK(*sinv.prec() == E(5, default_precision_exponent()));

    // finite-window operands spend what the operand supports: prec - 2v
    HS a = s.truncated(E(5, 4));
    HS ainv = a.invert();
    CHECK(ainv == HS::from_terms(
                      z, 5,
                      {{E(5, 0), one}, {E(5, 1), one}, {E(5, 2), one}, {E(5, 3), one}},
                      E(5, 4)));

    HS b = (HS::monomial(one, E(5, 1)) - HS::monomial(one, E(5, 2))).truncated(E(5, 5));
    HS binv = b.invert();
    CHECK(binv == HS::from_terms(z, 5,
                                 {{E(5, -1), one}, {E(5, 0), one}, {E(5, 1), one},
                                  {E(5, 2), one}},
                                 E(5, 3)));

    // an explicit target below the supported window wins
    CHECK(*b.invert(E(5, 1)).prec() == E(5, 1));

    CHECK_THROWS_AS(HS::zero(z, 5).invert(), ZeroSeriesError);
    CHECK_THROWS_AS(HS::zero_to_precision(z, 5, E(5, 3)).invert(), ZeroSeriesError);

    // division composes multiplication with the default-policy inverse
    CHECK((s / m).agrees_with(s * minv));
}

TEST_CASE("pth root and frobenius") {
    std::mt19937_64 g(23);
    for (int64_t p : {2, 3, 5}) {
        auto f = get_field(p, 2);
        FqElement z = FqElement::zero(f);
        for (int i = 0; i < 30; ++i) {
            HS a = rand_series(f, g);
            CHECK(a.pth_root().frobenius() == a);
            CHECK(a.frobenius().pth_root() == a);
            // the p-th power computed by plain multiplication
            if (a.is_exact()) CHECK(a.frobenius() == a.pow(uint64_t(p)));
            HS b = rand_series(f, g);
            CHECK((a + b).frobenius() == a.frobenius() + b.frobenius());
            CHECK((a * b).frobenius().agrees_with(a.frobenius() * b.frobenius()));
        }
    }

    // windows scale with the exponents
    auto f3 = get_field(3, 1);
    FqElement z3 = FqElement::zero(f3);
    FqElement one3 = FqElement::one(f3);
    HS s = HS::from_terms(z3, 3, {{E(3, 0), one3}}, E(3, 3));
    CHECK(s.pth_root() == HS::from_terms(z3, 3, {{E(3, 0), one3}}, E(3, 1)));
    CHECK(s.pth_root().frobenius() == s);
    HS r = HS::from_terms(z3, 3, {{E(3, 1, 1), one3}}, E(3, 1));
    CHECK(r.frobenius() == HS::from_terms(z3, 3, {{E(3, 1), one3}}, E(3, 3)));

    // freshman's dream with a genuine cross term, frozen
    HS u = HS::one(z3, 3) + HS::monomial(one3, E(3, 1));
    CHECK(u.pow(3) == HS::one(z3, 3) + HS::monomial(one3, E(3, 3)));
}

TEST_CASE("series powers") {
    auto f = get_field(5, 1);
    FqElement z = FqElement::zero(f);
    FqElement one = FqElement::one(f);
    HS s = HS::one(z, 5) + HS::monomial(one, E(5, 1));
    CHECK(s.pow(0) == HS::one(z, 5));
    CHECK(s.pow(1) == s);
    CHECK(s.pow(2) == HS::from_terms(z, 5, {{E(5, 0), one},
                                            {E(5, 1), FqElement::scalar(f, 2)},
                                            {E(5, 2), one}}));
    CHECK(s.pow(5) == HS::one(z, 5) + HS::monomial(one, E(5, 5)));  // char 5
}

TEST_CASE("nested series field") {
    using K = HahnSeries<FqElement>;
    using F = HahnSeries<K>;
    auto f4 = get_field(2, 2);
    FqElement w = FqElement::generator(f4);  // cube root of unity in F_4
    FqElement z = FqElement::zero(f4);

    K kzero = K::zero(z, 2);
    K a = K::from_terms(z, 2, {{E(2, 0), w}, {E(2, 1, 1), FqElement::one(f4)}});  // w + x^(1/2)
    F big = F::from_terms(kzero, 2, {{E(2, 0), K::one(z, 2)}, {E(2, 3, 1), a}});

    CHECK(big.valuation() == E(2, 0));
    CHECK(big.coeff_at(E(2, 3, 1)) == a);

    // frobenius goes down to the innermost coefficients
    F fr = big.frobenius();
    CHECK(fr.coeff_at(E(2, 3)) == a.frobenius());
    CHECK(fr.pth_root() == big);
    CHECK(big.pow(2) == fr);

    // arithmetic stays exact through the nesting
    F prod = big * big;
    CHECK(prod == fr);
    F inv = big.invert(E(2, 2));
    CHECK((big * inv).agrees_with(F::one(kzero, 2)));

    // inner windows are independent of outer windows
    K atrunc = a.truncated(E(2, 1));
    F mixed = F::from_terms(kzero, 2, {{E(2, 0), atrunc}}, E(2, 4));
    CHECK(mixed.coeff_at(E(2, 0)).prec().has_value());
    CHECK(*mixed.prec() == E(2, 4));
}

TEST_CASE("series over the perfect closure") {
    auto f9 = get_field(3, 2);
    PerfElement c = PerfElement::t_root(f9, 1);  // u = t^(1/3) as a coefficient
    PerfElement pz = PerfElement::zero(f9);
    using PS = HahnSeries<PerfElement>;
    PS one = PS::one(pz, 3);
    PS s = one + PS::monomial(c, E(3, 1));
    PS d = one - PS::monomial(c, E(3, 1));
    CHECK(s * d == one - PS::monomial(c * c, E(3, 2)));
    CHECK(s.frobenius().coeff_at(E(3, 3)) == c.frobenius());
    CHECK((s * s.invert(E(3, 3))).agrees_with(one));
}

TEST_CASE("series display") {
    auto f = get_field(3, 1);
    FqElement z = FqElement::zero(f);
    FqElement one = FqElement::one(f);
    CHECK(HS::zero(z, 3).str() == "0");
    CHECK(HS::zero_to_precision(z, 3, E(3, 2)).str() == "0 + O(t^(2))");
    HS s = HS::from_terms(z, 3, {{E(3, -1, 1), FqElement::scalar(f, 2)}, {E(3, 2), one}},
                          E(3, 4));
    CHECK(s.str() == "[2]*t^(-1/3^1) + [1]*t^(2) + O(t^(4))");
}
