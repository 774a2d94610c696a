#ifndef SKEWLAB_FQ_HPP
#define SKEWLAB_FQ_HPP

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "skewlab/common.hpp"

namespace skewlab::fields {

class FieldDescriptor;
using FieldRef = std::shared_ptr<const FieldDescriptor>;

// Defining data of F_{p^n} = F_p[z]/(f). Descriptors are interned: get_field
// returns one shared instance per (p, n), with f the lexicographically
// smallest monic irreducible of degree n over F_p, comparing coefficient
// tuples (c_0, ..., c_{n-1}). Deterministic across runs.
class FieldDescriptor {
public:
    FieldDescriptor(int64_t p, int64_t n, std::vector<int64_t> poly);

    int64_t p() const { return p_; }
    int64_t n() const { return n_; }
    // c_0 .. c_n with c_n = 1.
    const std::vector<int64_t>& poly() const { return poly_; }
    uint64_t size() const;  // p^n; throws BoundExceededError past 2^62

private:
    int64_t p_;
    int64_t n_;
    std::vector<int64_t> poly_;
};

FieldRef get_field(int64_t p, int64_t n);
bool is_prime(int64_t p);

// Element of one field in the tower approximating F_p^alg. Arithmetic between
// elements of different degrees promotes both into F_{p^lcm} through the
// cached compatible embeddings, so the tower behaves as a single field.
// Immutable value type.
class FqElement {
public:
    FqElement(FieldRef field, std::vector<int64_t> coords);

    static FqElement zero(const FieldRef& f);
    static FqElement one(const FieldRef& f);
    static FqElement scalar(const FieldRef& f, int64_t v);
    static FqElement generator(const FieldRef& f);  // the residue class z
    static FqElement element_at(const FieldRef& f, uint64_t index);

    const FieldRef& field() const { return field_; }
    const std::vector<int64_t>& coords() const { return coords_; }
    int64_t characteristic() const;
    int64_t degree() const;  // n of the home field
    bool is_zero() const;
    // Finite field elements carry no precision window.
    bool is_exact() const { return true; }
    bool is_exact_zero() const { return is_zero(); }
    bool agrees_with(const FqElement& o) const { return *this == o; }
    std::optional<int64_t> as_scalar() const;  // value if the element lies in F_p
    uint64_t index() const;                    // base-p digit encoding of coords

    FqElement zero_like() const;
    FqElement one_like() const;
    bool compatible_field(const FqElement& o) const {
        return characteristic() == o.characteristic();
    }

    friend FqElement operator+(const FqElement& a, const FqElement& b);
    friend FqElement operator-(const FqElement& a, const FqElement& b);
    friend FqElement operator*(const FqElement& a, const FqElement& b);
    FqElement operator-() const;
    FqElement inverse() const;  // throws std::domain_error on zero
    FqElement pow(int64_t e) const;
    FqElement frobenius() const;          // x -> x^p
    FqElement frobenius_inverse() const;  // x -> x^(p^(n-1))
    FqElement pth_root() const { return frobenius_inverse(); }
    friend bool operator==(const FqElement& a, const FqElement& b);
    friend bool operator!=(const FqElement& a, const FqElement& b) { return !(a == b); }

    std::string str() const;  // "[c0,...,c_{n-1}]"

private:
    FieldRef field_;
    std::vector<int64_t> coords_;
};

FqElement frobenius(const FqElement& x);
FqElement frobenius_inverse(const FqElement& x);

// Trace from the home field F_{p^n} down to F_{p^m}; requires m | n. The
// result is returned in F_{p^m} coordinates.
FqElement trace(const FqElement& x, int64_t m);

// A root of y^p - y = b inside the home field, or nullopt when none exists
// (equivalently trace(b, 1) != 0). Deterministic choice of root.
std::optional<FqElement> artin_schreier_solve(const FqElement& b);

// Image of x under the compatible embedding into the target field; requires
// deg(x) | target degree and the same p. embed(m->n) then embed(n->r) agrees
// with embed(m->r).
FqElement embed(const FqElement& x, const FieldRef& target);

// An element of multiplicative order exactly q, living in F_{p^n} for the
// smallest n with q | p^n - 1. Deterministic. Requires gcd(q, p) = 1.
FqElement primitive_root_of_unity(int64_t p, int64_t q);

FqElement parse_fq(const FieldRef& f, std::string_view text);

}  // namespace skewlab::fields

#endif
