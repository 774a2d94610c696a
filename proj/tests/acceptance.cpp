// Acceptance gate: twelve independent criteria, one pass/fail line each.
// Exit status is the number of failed criteria.
#include <cstdio>
#include <random>
#include <string>
#include <vector>

#include "skewlab/common.hpp"
#include "skewlab/cyclic.hpp"
#include "skewlab/difference_fields.hpp"
#include "skewlab/fq.hpp"
#include "skewlab/sigma_linear.hpp"
#include "skewlab/verify.hpp"

using namespace skewlab;
using cyclic::DElement;
using cyclic::KElement;
using fields::FqElement;
using ore::OrePoly;

namespace {

constexpr uint64_t kMasterSeed = 0xACCE5;

struct Criterion {
    bool ok = true;
    std::string detail;

    void expect(bool cond, const std::string& what) {
        if (!cond && ok) {
            ok = false;
            detail = what;
        }
    }
};

std::mt19937_64 rng_for(const char* name) {
    return std::mt19937_64(derive_seed(kMasterSeed, name));
}

Criterion construction_fidelity() {
    Criterion c;
    auto rng = rng_for("construction-fidelity");
    for (int64_t p : {3, 5}) {
        auto alg = cyclic::CyclicAlgebra::make_division_algebra(p, 8);
        const auto X = DElement::x(alg);
        const auto one = DElement::one(alg);
        c.expect(X.pow(2) == DElement::from_f(alg, alg->alpha()), "x^2 != alpha");
        for (int i = 0; i < 100; ++i) {
            auto a = cyclic::random_k_element(alg, rng, 3, true);
            c.expect(X * DElement::from_k(a) == DElement::from_k(a.sigma()) * X,
                     "x a != sigma(a) x");
        }
        for (int i = 0; i < 1000; ++i) {
            auto a = cyclic::random_d_element(alg, rng);
            auto b = cyclic::random_d_element(alg, rng);
            auto d = cyclic::random_d_element(alg, rng);
            c.expect(((a * b) * d).agrees_with(a * (b * d)),
                     "associativity failed at p=" + std::to_string(p));
        }
        auto theta = DElement::from_k(KElement::theta(alg));
        c.expect(X * theta != theta * X, "no noncommutativity witness");
        for (int i = 0; i < 200; ++i) {
            auto u = cyclic::random_nonzero_d(alg, rng);
            auto v = cyclic::d_inv(u);
            c.expect((u * v).agrees_with(one) && (v * u).agrees_with(one),
                     "inverse residual nonzero at p=" + std::to_string(p));
        }
    }
    return c;
}

Criterion norm_closed_forms() {
    Criterion c;
    auto rng = rng_for("norm-closed-forms");
    for (int64_t p : {3, 2}) {
        auto alg = cyclic::CyclicAlgebra::make_division_algebra(p, 8);
        for (int i = 0; i < 500; ++i) {
            auto a = cyclic::random_k_element(alg, rng, 3, true);
            c.expect(a.norm() == a.norm_via_conjugates(),
                     "closed form differs from conjugate product at p=" +
                         std::to_string(p));
        }
    }
    return c;
}

Criterion obstruction_certificate() {
    Criterion c;
    for (int64_t p : {3, 2}) {
        auto alg = cyclic::CyclicAlgebra::make_division_algebra(p, 8);
        auto rep = cyclic::norm_obstruction_certify(
            alg, 500, derive_seed(kMasterSeed, "obstruction-certificate"));
        c.expect(rep.samples == 500, "certifier did not draw 500 samples");
        c.expect(rep.violations.empty(),
                 rep.violations.empty() ? "" : rep.violations.front());
    }
    return c;
}

Criterion metro_identity() {
    Criterion c;
    auto rng = rng_for("metro-identity");
    for (int64_t p : {2, 3, 5}) {
        auto alg = cyclic::CyclicAlgebra::make_division_algebra(p, 8);
        for (int i = 0; i < 100; ++i) {
            auto a = cyclic::random_d_element(alg, rng);
            c.expect(cyclic::metro_identity_check(a),
                     "identity failed at p=" + std::to_string(p));
        }
    }
    return c;
}

Criterion centralizer_index() {
    Criterion c;
    auto alg = cyclic::CyclicAlgebra::make_division_algebra(3, 8);
    const int64_t dim = alg->s() * alg->s();
    for (auto a : {DElement::x(alg), DElement::from_k(KElement::theta(alg))}) {
        const int64_t ca = cyclic::centralizer_dimension(a);
        const int64_t ma = cyclic::minimal_polynomial_degree(a);
        c.expect(ca == 2, "dim of a centralizer is not 2");
        c.expect(ma == 2, "a generator has minimal degree != 2");
        c.expect(dim / ca == ma, "centralizer index does not match field degree");
    }
    return c;
}

Criterion ore_euclidean_contract() {
    Criterion c;
    auto rng = rng_for("ore-euclidean-contract");
    using FqH = ore::FqFrobeniusField;

    auto random_poly = [&rng](const auto& h, size_t max_deg) {
        using H = std::decay_t<decltype(*h)>;
        std::vector<typename H::Element> cs;
        const size_t d = rng() % (max_deg + 1);
        for (size_t i = 0; i <= d; ++i) cs.push_back(h->random(rng));
        return OrePoly<H>::from_coeffs(h, std::move(cs));
    };
    auto divide_trials = [&](const auto& h, int trials, size_t fdeg, size_t gdeg) {
        for (int i = 0; i < trials; ++i) {
            auto f = random_poly(h, fdeg);
            auto g = random_poly(h, gdeg);
            while (g.is_zero()) g = random_poly(h, gdeg);
            auto [q, r] = ore::right_divide(f, g);
            c.expect(f == q * g + r, "right division reconstruction failed");
            c.expect(ore::degree_lt(r.degree(), g.degree()), "remainder too large");
        }
    };

    std::vector<std::shared_ptr<const FqH>> fq_handles;
    for (int64_t p : {2, 3})
        for (int64_t n : {1, 2, 3}) fq_handles.push_back(ore::make_frobenius_handle(p, n));
    for (int i = 0; i < 1000; ++i) divide_trials(fq_handles[size_t(i) % 6], 1, 4, 3);
    for (int64_t p : {2, 3}) divide_trials(ore::make_perfect_closure_handle(p), 500, 3, 2);

    auto h = ore::make_frobenius_handle(3, 2);
    auto linear_for = [&h](const FqElement& a) {
        return OrePoly<FqH>::sigma(h) -
               OrePoly<FqH>::constant(h, h->sigma(a) * a.inverse());
    };
    for (int i = 0; i < 200; ++i) {
        auto a = h->random_nonzero(rng);
        auto delta = random_poly(h, 2);
        while (delta.is_zero()) delta = random_poly(h, 2);
        auto f = delta * linear_for(a);
        c.expect(ore::evaluate(f, a).is_zero(), "planted root does not vanish");
        c.expect(ore::factor_through_root(f, a) == delta, "cofactor not recovered");
    }

    const uint64_t q = 9;
    for (uint64_t i0 = 0; i0 < q; ++i0)
        for (uint64_t i1 = 0; i1 < q; ++i1)
            for (uint64_t i2 = 0; i2 < q; ++i2) {
                auto f = OrePoly<FqH>::from_coeffs(
                    h, {h->element_at(i0), h->element_at(i1), h->element_at(i2)});
                for (uint64_t ia = 1; ia < q; ++ia) {
                    auto a = h->element_at(ia);
                    const bool vanishes = ore::evaluate(f, a).is_zero();
                    const bool divides =
                        ore::right_divide(f, linear_for(a)).second.is_zero();
                    c.expect(vanishes == divides, "root/remainder equivalence failed");
                }
            }
    return c;
}

Criterion rank_nullity_exhaustive() {
    Criterion c;
    for (int64_t p : {2, 3})
        for (int64_t n : {1, 2, 3}) {
            auto h = ore::make_frobenius_handle(p, n);
            const uint64_t q = *h->size();
            std::vector<char> in_image(q);
            for (uint64_t i0 = 0; i0 < q; ++i0)
                for (uint64_t i1 = 0; i1 < q; ++i1)
                    for (uint64_t i2 = 0; i2 < q; ++i2) {
                        auto f = OrePoly<ore::FqFrobeniusField>::from_coeffs(
                            h, {h->element_at(i0), h->element_at(i1),
                                h->element_at(i2)});
                        std::fill(in_image.begin(), in_image.end(), 0);
                        uint64_t kernel = 0;
                        for (uint64_t ix = 0; ix < q; ++ix) {
                            auto y = ore::evaluate(f, h->element_at(ix));
                            if (y.is_zero()) ++kernel;
                            in_image[y.index()] = 1;
                        }
                        uint64_t image = 0;
                        for (char bit : in_image) image += uint64_t(bit);
                        c.expect(kernel * image == q, "kernel-image product != field size");
                    }
        }
    return c;
}

Criterion moore_agreement() {
    Criterion c;
    for (int64_t p : {2, 3, 5}) {
        auto h = ore::make_frobenius_handle(p, 2);
        const uint64_t q = *h->size();
        for (uint64_t i = 1; i < q; ++i)
            for (uint64_t j = 1; j < q; ++j) {
                std::vector<FqElement> b{h->element_at(i), h->element_at(j)};
                const bool ex = sigma_linear::radical_test_G_exhaustive(h, b);
                const bool mo = sigma_linear::radical_test_G_moore(h, b);
                c.expect(ex == mo, "exhaustive and Moore paths disagree");
                auto ratio = b[1] * b[0].inverse();
                c.expect(ex == (h->sigma(ratio) != ratio),
                         "radicality disagrees with the fixed-field ratio test");
                if (i == j) c.expect(!ex, "dependent pair certified radical");
            }
    }
    return c;
}

Criterion dimension_bookkeeping() {
    Criterion c;
    auto rng = rng_for("dimension-bookkeeping");
    auto h = ore::make_frobenius_handle(3, 2);
    using H = ore::FqFrobeniusField;
    using Set = sigma_linear::SigmaLinearSet<H>;
    using Twist = sigma_linear::NTwist<H>;

    for (size_t n = 1; n <= 5; ++n)
        c.expect(sigma_linear::dimension_upper(Set::full(h, n)) == n,
                 "free module has wrong dimension bound");

    auto random_twist = [&](size_t max_deg) {
        std::vector<FqElement> cs;
        const size_t d = rng() % (max_deg + 1);
        for (size_t i = 0; i <= d; ++i) cs.push_back(h->random(rng));
        return OrePoly<H>::from_coeffs(h, std::move(cs));
    };
    auto random_set = [&](size_t arity, size_t gens) {
        std::vector<Twist> gs;
        for (size_t i = 0; i < gens; ++i) {
            std::vector<OrePoly<H>> cs;
            for (size_t j = 0; j < arity; ++j) cs.push_back(random_twist(2));
            gs.push_back(Twist(h, std::move(cs)));
        }
        return Set(h, arity, std::move(gs));
    };

    for (int i = 0; i < 200; ++i) {
        auto V = random_set(3, rng() % 3);
        std::vector<OrePoly<H>> cs;
        for (size_t j = 0; j < 3; ++j) cs.push_back(random_twist(2));
        c.expect(sigma_linear::hypersurface_cut_check(V, Twist(h, std::move(cs))),
                 "one cut dropped the bound by more than one");
    }
    for (int i = 0; i < 50; ++i) {
        auto U = random_set(1 + rng() % 2, rng() % 3);
        auto V = random_set(1 + rng() % 2, rng() % 3);
        c.expect(sigma_linear::dimension_upper(sigma_linear::product(U, V)) ==
                     sigma_linear::dimension_upper(U) + sigma_linear::dimension_upper(V),
                 "block product bound is not additive");
    }
    return c;
}

Criterion sigma_delta_decomposition() {
    Criterion c;
    auto rng = rng_for("sigma-delta-decomposition");
    auto h = ore::make_perfect_closure_handle(3);
    using H = ore::PerfectClosureField;
    for (int i = 0; i < 200; ++i) {
        auto a = h->random(rng);
        std::vector<typename H::Element> cs;
        const size_t d = rng() % 3;
        for (size_t k = 0; k <= d; ++k) cs.push_back(h->random(rng));
        cs[0] = h->random_nonzero(rng);
        auto delta = OrePoly<H>::from_coeffs(h, std::move(cs));
        auto [u, v] = sigma_linear::decompose_sigma_delta(a, delta);
        c.expect(h->sigma(u) + ore::evaluate(delta, v) == a,
                 "sigma(u) + delta(v) does not reconstruct a");
    }
    return c;
}

Criterion artin_schreier_trace() {
    Criterion c;
    for (int64_t p : {2, 3, 5})
        for (int64_t n : {1, 2, 3}) {
            auto f = fields::get_field(p, n);
            uint64_t q = 1;
            for (int64_t i = 0; i < n; ++i) q *= uint64_t(p);
            for (uint64_t i = 0; i < q; ++i) {
                auto b = FqElement::element_at(f, i);
                auto root = fields::artin_schreier_solve(b);
                c.expect(root.has_value() == fields::trace(b, 1).is_zero(),
                         "solvability does not match the trace criterion");
                if (root)
                    c.expect(root->pow(p) - *root == b, "returned root is invalid");
                uint64_t roots = 0;
                for (uint64_t j = 0; j < q; ++j) {
                    auto y = FqElement::element_at(f, j);
                    if (y.pow(p) - y == b) ++roots;
                }
                c.expect(roots == (root.has_value() ? uint64_t(p) : 0),
                         "root set size is not p or 0");
            }
        }
    return c;
}

Criterion report_reproducibility() {
    Criterion c;
    const std::vector<verify::Campaign> campaigns = {
        verify::ex1_campaign(3, 6, 20, derive_seed(kMasterSeed, "repro-ex1")),
        verify::ore_campaign(24, derive_seed(kMasterSeed, "repro-ore")),
        verify::gbar_campaign({"1", "[0,1]"}, 3, 2, derive_seed(kMasterSeed, "repro-gbar")),
    };
    for (const auto& camp : campaigns) {
        auto a = verify::strip_timing(verify::run_campaign(camp)).dump();
        auto b = verify::strip_timing(verify::run_campaign(camp)).dump();
        c.expect(a == b, "report bytes differ for campaign " + camp.name);
        c.expect(!a.empty() && a.find("\"timing\"") == std::string::npos,
                 "timing block survived stripping");
    }
    return c;
}

}  // namespace

int main() {
    struct Entry {
        const char* name;
        Criterion (*fn)();
    };
    const Entry entries[] = {
        {"construction-fidelity", construction_fidelity},
        {"norm-closed-forms", norm_closed_forms},
        {"obstruction-certificate", obstruction_certificate},
        {"metro-identity", metro_identity},
        {"centralizer-index", centralizer_index},
        {"ore-euclidean-contract", ore_euclidean_contract},
        {"rank-nullity-exhaustive", rank_nullity_exhaustive},
        {"moore-agreement", moore_agreement},
        {"dimension-bookkeeping", dimension_bookkeeping},
        {"sigma-delta-decomposition", sigma_delta_decomposition},
        {"artin-schreier-trace", artin_schreier_trace},
        {"report-reproducibility", report_reproducibility},
    };

    int failed = 0;
    int index = 0;
    for (const auto& e : entries) {
        ++index;
        Criterion r;
        try {
            r = e.fn();
        } catch (const std::exception& ex) {
            r.ok = false;
            r.detail = std::string("threw: ") + ex.what();
        }
        if (r.ok) {
            std::printf("PASS %2d %s\n", index, e.name);
        } else {
            std::printf("FAIL %2d %s: %s\n", index, e.name, r.detail.c_str());
            ++failed;
        }
    }
    std::printf("%d/12 criteria passed\n", 12 - failed);
    return failed;
}
