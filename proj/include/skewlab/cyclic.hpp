#ifndef SKEWLAB_CYCLIC_HPP
#define SKEWLAB_CYCLIC_HPP

#include <cstdint>
#include <memory>
#include <random>
#include <string>
#include <vector>

#include "skewlab/fq.hpp"
#include "skewlab/hahn.hpp"

namespace skewlab::cyclic {

// The base field F = k((t^Gamma)) with k = F_p^alg((x^Gamma)) is a Hahn
// series field whose coefficients are again Hahn series; both levels share
// Gamma = Z[1/p].
using KSeries = hahn::HahnSeries<fields::FqElement>;
using FSeries = hahn::HahnSeries<KSeries>;

class CyclicAlgebra;
using AlgebraRef = std::shared_ptr<const CyclicAlgebra>;

// D = K + K X + ... + K X^{s-1} over K = F(theta), theta^s = t, with
// X^s = alpha and X a = sigma(a) X. sigma(theta) = omega theta for a scalar
// omega of multiplicative order s, so sigma generates Gal(K/F).
// Immutable and shareable; elements hold a reference.
class CyclicAlgebra {
public:
    // The division algebra over F with alpha = x, the coefficient-level
    // indeterminate: s = 2 for odd p (sigma flips the sign of theta = sqrt t)
    // and s = 3 for p = 2 (omega is a cube root of unity from F_4).
    static AlgebraRef make_division_algebra(int64_t p);
    static AlgebraRef make_division_algebra(int64_t p, int64_t prec_exponent);

    // Same shape with a caller-chosen structure constant; the result is a
    // well-defined algebra but carries no division guarantee and the norm
    // obstruction certifier refuses it.
    AlgebraRef with_alpha(FSeries alpha) const;

    int64_t p() const { return p_; }
    int64_t s() const { return s_; }
    const FSeries& alpha() const { return alpha_; }
    const FSeries& radicand() const { return radicand_; }  // t, with theta^s = t
    const fields::FqElement& omega() const { return omega_; }
    const hahn::Exponent& precision() const { return prec_; }
    bool standard_construction() const { return standard_; }

    KSeries k_zero() const;
    KSeries k_one() const;
    FSeries f_zero() const;
    FSeries f_one() const;
    FSeries f_scalar(int64_t v) const;
    FSeries f_from_k(const KSeries& c) const;

    std::string str() const;

private:
    CyclicAlgebra(int64_t p, int64_t s, fields::FqElement omega, FSeries alpha,
                  hahn::Exponent prec, bool standard);

    int64_t p_;
    int64_t s_;
    fields::FqElement omega_;
    std::vector<fields::FqElement> omega_pow_;  // omega^0 .. omega^{s-1}
    FSeries alpha_;
    FSeries radicand_;
    hahn::Exponent prec_;
    bool standard_;

    friend class KElement;
};

// Element of K = F[theta]/(theta^s - t), stored by F-coordinates on
// 1, theta, ..., theta^{s-1}.
class KElement {
public:
    KElement(AlgebraRef alg, std::vector<FSeries> coords);

    static KElement zero(const AlgebraRef& alg);
    static KElement one(const AlgebraRef& alg);
    static KElement theta(const AlgebraRef& alg);
    static KElement theta_pow(const AlgebraRef& alg, int64_t i);
    static KElement from_f(const AlgebraRef& alg, FSeries c);

    const AlgebraRef& algebra() const { return alg_; }
    const std::vector<FSeries>& coords() const { return co_; }
    bool is_zero() const;
    bool is_exact() const;

    friend KElement operator+(const KElement& a, const KElement& b);
    friend KElement operator-(const KElement& a, const KElement& b);
    KElement operator-() const;
    friend KElement operator*(const KElement& a, const KElement& b);
    friend bool operator==(const KElement& a, const KElement& b);
    friend bool operator!=(const KElement& a, const KElement& b) { return !(a == b); }

    KElement sigma() const;                 // theta -> omega theta
    KElement sigma_pow(int64_t e) const;
    FSeries norm() const;                   // closed form in the coordinates
    FSeries norm_via_conjugates() const;    // product over the Galois orbit
    KElement inverse() const;
    KElement scaled(const FSeries& c) const;
    KElement truncated(const hahn::Exponent& P) const;
    bool agrees_with(const KElement& o) const;
    std::string str() const;

private:
    AlgebraRef alg_;
    std::vector<FSeries> co_;
    void check_same(const KElement& o) const;
    KElement conjugate_product() const;  // sigma(u) * ... * sigma^{s-1}(u)
};

// Element of D, stored by K-coordinates on 1, X, ..., X^{s-1}.
class DElement {
public:
    DElement(AlgebraRef alg, std::vector<KElement> coords);

    static DElement zero(const AlgebraRef& alg);
    static DElement one(const AlgebraRef& alg);
    static DElement x(const AlgebraRef& alg);
    static DElement from_k(KElement c);
    static DElement from_f(const AlgebraRef& alg, FSeries c);
    // theta^i X^j, the F-basis element with flat index j*s + i
    static DElement basis(const AlgebraRef& alg, int64_t i, int64_t j);

    const AlgebraRef& algebra() const { return alg_; }
    const std::vector<KElement>& coords() const { return co_; }
    bool is_zero() const;
    bool is_exact() const;

    friend DElement operator+(const DElement& a, const DElement& b);
    friend DElement operator-(const DElement& a, const DElement& b);
    DElement operator-() const;
    friend DElement operator*(const DElement& a, const DElement& b);
    friend bool operator==(const DElement& a, const DElement& b);
    friend bool operator!=(const DElement& a, const DElement& b) { return !(a == b); }

    DElement pow(uint64_t e) const;
    DElement inverse() const;
    DElement scaled_k(const KElement& c) const;  // left multiplication by c in K
    DElement scaled_f(const FSeries& c) const;
    DElement truncated(const hahn::Exponent& P) const;
    bool agrees_with(const DElement& o) const;
    // F-coordinates on theta^i X^j, flat index j*s + i
    std::vector<FSeries> flatten() const;
    std::string str() const;

private:
    AlgebraRef alg_;
    std::vector<KElement> co_;
    void check_same(const DElement& o) const;
};

KElement k_mul(const KElement& a, const KElement& b);
KElement k_sigma(const KElement& a);
FSeries norm(const KElement& a);
DElement d_mul(const DElement& a, const DElement& b);

// Two-sided inverse to precision. s=2 uses the conjugate formula
// (a + bX)^{-1} = (N(a) - alpha N(b))^{-1} (sigma(a) - bX); otherwise an
// s^2 x s^2 F-linear solve with valuation pivoting. A vanishing denominator
// or pivot column signals insufficient precision, never non-invertibility.
DElement d_inv(const DElement& u);

// (a+1)^p - (a+1) = a^p - a to precision; the characteristic-p identity
// behind conjugating a solution of xy - yx = 1 by powers.
bool metro_identity_check(const DElement& a);

// dim_F of the commutant of a inside D, by exact fraction-free rank of the
// s^2 x s^2 commutation system. Requires exact coordinates.
int64_t centralizer_dimension(const DElement& a);

// Degree of the minimal polynomial of a over F, by exact rank of the power
// coordinate matrix. Requires exact coordinates.
int64_t minimal_polynomial_degree(const DElement& a);

// Exact F-rank of a matrix of exact series, by cross-multiplication
// elimination (no divisions, so no precision is ever spent).
int64_t exact_rank(std::vector<std::vector<FSeries>> M);

struct ObstructionReport {
    int64_t samples = 0;
    uint64_t seed = 0;
    std::vector<int64_t> class_histogram;    // hits per residue class mod s
    std::vector<std::string> violations;     // empty iff the certificate holds
};

// Samples (a_0, ..., a_{s-1}) and checks the valuation-coset argument that
// alpha = x is not a norm from K: each component contributes leading exponent
// s*v_i + i, the classes mod s are disjoint so the minimum survives into the
// norm (for s = 3 the cross term sits strictly above min(3g, 3d+1, 3e+2)
// since the three candidates are pairwise distinct), and no sampled norm
// agrees with alpha. Only accepts the standard construction.
ObstructionReport norm_obstruction_certify(const AlgebraRef& alg, int64_t samples,
                                           uint64_t seed);

// Bounded random series: up to max_terms outer terms with exponents of small
// height, inner coefficients over tower degree at most 2. Truncated to the
// algebra's working window unless exact is requested.
FSeries random_f_series(const AlgebraRef& alg, std::mt19937_64& rng, int max_terms = 3,
                        bool exact = false);
KElement random_k_element(const AlgebraRef& alg, std::mt19937_64& rng, int max_terms = 3,
                          bool exact = false);
DElement random_d_element(const AlgebraRef& alg, std::mt19937_64& rng, int max_terms = 3,
                          bool exact = false);
DElement random_nonzero_d(const AlgebraRef& alg, std::mt19937_64& rng, int max_terms = 3,
                          bool exact = false);

}  // namespace skewlab::cyclic

#endif
