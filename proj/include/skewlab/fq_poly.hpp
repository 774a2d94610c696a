#ifndef SKEWLAB_FQ_POLY_HPP
#define SKEWLAB_FQ_POLY_HPP

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "skewlab/fq.hpp"

namespace skewlab::fields {

// Dense univariate polynomial over one fixed F_{p^n}, little-endian
// coefficients, no stored leading zeros. Support type for the perfect
// closure; not a public algebra of its own.
class FqPoly {
public:
    explicit FqPoly(FieldRef field);  // zero
    FqPoly(FieldRef field, std::vector<FqElement> coeffs);

    static FqPoly constant(const FqElement& c);
    static FqPoly variable(const FieldRef& field);  // u
    static FqPoly monomial(const FqElement& c, int64_t e);

    const FieldRef& field() const { return field_; }
    const std::vector<FqElement>& coeffs() const { return coeffs_; }
    int64_t degree() const;  // -1 for the zero polynomial
    bool is_zero() const { return coeffs_.empty(); }
    FqElement coeff(int64_t i) const;  // zero beyond the stored range
    FqElement leading() const;         // throws on zero

    friend FqPoly operator+(const FqPoly& a, const FqPoly& b);
    friend FqPoly operator-(const FqPoly& a, const FqPoly& b);
    friend FqPoly operator*(const FqPoly& a, const FqPoly& b);
    FqPoly operator-() const;
    friend bool operator==(const FqPoly& a, const FqPoly& b);
    friend bool operator!=(const FqPoly& a, const FqPoly& b) { return !(a == b); }

    // division with remainder; throws std::domain_error on zero divisor
    std::pair<FqPoly, FqPoly> divmod(const FqPoly& g) const;
    FqPoly make_monic() const;

    FqPoly coeff_frobenius() const;  // a_i -> a_i^p, exponents unchanged
    FqPoly coeff_pth_root() const;
    FqPoly stretch(int64_t factor) const;  // u -> u^factor
    // inverse of stretch; nullopt unless every exponent is divisible
    std::optional<FqPoly> compress(int64_t factor) const;

    std::string str() const;  // "[..]*u^2+[..]*u+[..]", "0" when zero

private:
    FieldRef field_;
    std::vector<FqElement> coeffs_;
    void trim();
};

FqPoly gcd(const FqPoly& a, const FqPoly& b);
FqPoly parse_fq_poly(const FieldRef& field, std::string_view text);

}  // namespace skewlab::fields

#endif
