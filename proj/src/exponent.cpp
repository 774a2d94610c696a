#include "skewlab/exponent.hpp"

#include <numeric>

#include "skewlab/fq.hpp"

namespace skewlab::hahn {

Exponent::Exponent(int64_t p, int64_t num, int64_t k) : p_(p), num_(num), k_(k) {
    if (p_ < 2 || !fields::is_prime(p_)) throw std::invalid_argument("p is not prime");
    if (k_ < 0) throw std::invalid_argument("negative denominator exponent");
    normalize();
}

void Exponent::normalize() {
    while (k_ > 0 && num_ % p_ == 0) {
        num_ /= p_;
        --k_;
    }
    if (num_ == 0) k_ = 0;
}

void Exponent::check_same_group(const Exponent& o) const {
    if (p_ != o.p_) throw FieldMismatchError("exponents from different value groups");
}

Exponent operator+(const Exponent& a, const Exponent& b) {
    a.check_same_group(b);
    int64_t k = std::max(a.k_, b.k_);
    int64_t na = checked_mul(a.num_, checked_pow(a.p_, k - a.k_));
    int64_t nb = checked_mul(b.num_, checked_pow(b.p_, k - b.k_));
    return Exponent(a.p_, checked_add(na, nb), k);
}

Exponent operator-(const Exponent& a, const Exponent& b) { return a + (-b); }

Exponent Exponent::operator-() const { return Exponent(p_, -num_, k_); }

Exponent Exponent::scaled(int64_t m) const { return Exponent(p_, checked_mul(num_, m), k_); }

Exponent Exponent::scaled_pow_p(int64_t e) const {
    if (e >= 0) {
        if (k_ >= e) return Exponent(p_, num_, k_ - e);
        return Exponent(p_, checked_mul(num_, checked_pow(p_, e - k_)), 0);
    }
    return Exponent(p_, num_, checked_add(k_, -e));
}

bool operator==(const Exponent& a, const Exponent& b) {
    return a.p_ == b.p_ && a.num_ == b.num_ && a.k_ == b.k_;
}

bool operator<(const Exponent& a, const Exponent& b) {
    a.check_same_group(b);
    int64_t k = std::max(a.k_, b.k_);
    int64_t na = checked_mul(a.num_, checked_pow(a.p_, k - a.k_));
    int64_t nb = checked_mul(b.num_, checked_pow(b.p_, k - b.k_));
    return na < nb;
}

bool operator<=(const Exponent& a, const Exponent& b) { return a < b || a == b; }

double Exponent::approx() const {
    double d = static_cast<double>(num_);
    for (int64_t i = 0; i < k_; ++i) d /= static_cast<double>(p_);
    return d;
}

std::string Exponent::str() const {
    if (k_ == 0) return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(p_) + "^" + std::to_string(k_);
}

bool gamma_contains(int64_t p, int64_t num, int64_t den) {
    if (den == 0) throw std::invalid_argument("zero denominator");
    if (num == 0) return true;
    int64_t g = std::gcd(num < 0 ? -num : num, den < 0 ? -den : den);
    den /= g;
    if (den < 0) den = -den;
    while (den % p == 0) den /= p;
    return den == 1;
}

int64_t coset_mod(const Exponent& e, int64_t m) {
    if (m < 1) throw std::invalid_argument("modulus must be positive");
    if (std::gcd(m, e.p()) != 1)
        throw std::invalid_argument("modulus must be coprime to p for disjoint cosets");
    // e = a/p^k lies in m*Gamma + r iff m | a - r*p^k
    int64_t pk = 1 % m;
    for (int64_t i = 0; i < e.k(); ++i) pk = (pk * (e.p() % m)) % m;
    // r = a * (p^k)^{-1} mod m
    int64_t inv = 0;
    for (int64_t c = 0; c < m; ++c)
        if ((c * pk) % m == 1 % m) {
            inv = c;
            break;
        }
    int64_t a = e.num() % m;
    if (a < 0) a += m;
    return (a * inv) % m;
}

}  // namespace skewlab::hahn
