#ifndef SKEWLAB_EXPONENT_HPP
#define SKEWLAB_EXPONENT_HPP

#include <compare>
#include <cstdint>
#include <string>

#include "skewlab/common.hpp"

namespace skewlab::hahn {

// Element of the value group Gamma = Z[1/p]: num / p^k in lowest form
// (p does not divide num when k > 0). Arithmetic is exact int64 with overflow
// reported as an error, never wrapped.
class Exponent {
public:
    Exponent(int64_t p, int64_t num, int64_t k = 0);

    int64_t p() const { return p_; }
    int64_t num() const { return num_; }
    int64_t k() const { return k_; }
    bool is_zero() const { return num_ == 0; }
    bool is_integer() const { return k_ == 0; }

    friend Exponent operator+(const Exponent& a, const Exponent& b);
    friend Exponent operator-(const Exponent& a, const Exponent& b);
    Exponent operator-() const;
    Exponent scaled(int64_t m) const;       // multiply by an integer
    Exponent scaled_pow_p(int64_t e) const; // multiply by p^e, e may be negative

    friend bool operator==(const Exponent& a, const Exponent& b);
    friend bool operator!=(const Exponent& a, const Exponent& b) { return !(a == b); }
    friend bool operator<(const Exponent& a, const Exponent& b);
    friend bool operator<=(const Exponent& a, const Exponent& b);
    friend bool operator>(const Exponent& a, const Exponent& b) { return b < a; }
    friend bool operator>=(const Exponent& a, const Exponent& b) { return b <= a; }

    double approx() const;     // for display only
    std::string str() const;   // "a" or "a/p^k"

private:
    int64_t p_;
    int64_t num_;
    int64_t k_;
    void normalize();
    void check_same_group(const Exponent& o) const;
};

// Does num/den lie in Z[1/p]? Works for arbitrary nonzero den.
bool gamma_contains(int64_t p, int64_t num, int64_t den);

// The residue r in [0, m) with e in m*Gamma + r; requires gcd(m, p) = 1, so
// the cosets m*Gamma, m*Gamma + 1, ..., m*Gamma + (m-1) partition Gamma.
int64_t coset_mod(const Exponent& e, int64_t m);

}  // namespace skewlab::hahn

#endif
