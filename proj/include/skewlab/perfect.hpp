#ifndef SKEWLAB_PERFECT_HPP
#define SKEWLAB_PERFECT_HPP

#include <string>
#include <string_view>

#include "skewlab/fq_poly.hpp"

namespace skewlab::fields {

// Element of the perfect closure of F_q(t): a rational function in one
// variable u, read as u = t^(1/p^k) at level k. Representations are
// canonical: the fraction is reduced with monic denominator and the level is
// greedily minimized (exponents all divisible by p fold into level k-1), so
// equality is componentwise. Immutable value type; frobenius is bijective.
class PerfElement {
public:
    PerfElement(int64_t level, FqPoly num, FqPoly den);

    static PerfElement zero(const FieldRef& coeff_field);
    static PerfElement one(const FieldRef& coeff_field);
    static PerfElement constant(const FqElement& c);
    static PerfElement t(const FieldRef& coeff_field);  // level 0, u
    static PerfElement t_root(const FieldRef& coeff_field, int64_t level);  // t^(1/p^level)

    int64_t level() const { return level_; }
    const FqPoly& num() const { return num_; }
    const FqPoly& den() const { return den_; }
    const FieldRef& coeff_field() const { return num_.field(); }
    int64_t characteristic() const { return num_.field()->p(); }
    bool is_zero() const { return num_.is_zero(); }
    // Perfect closure elements carry no precision window.
    bool is_exact() const { return true; }
    bool is_exact_zero() const { return is_zero(); }
    bool agrees_with(const PerfElement& o) const { return *this == o; }

    PerfElement zero_like() const { return zero(coeff_field()); }
    PerfElement one_like() const { return one(coeff_field()); }
    bool compatible_field(const PerfElement& o) const {
        return coeff_field().get() == o.coeff_field().get();
    }

    friend PerfElement operator+(const PerfElement& a, const PerfElement& b);
    friend PerfElement operator-(const PerfElement& a, const PerfElement& b);
    friend PerfElement operator*(const PerfElement& a, const PerfElement& b);
    friend PerfElement operator/(const PerfElement& a, const PerfElement& b);
    PerfElement operator-() const;
    PerfElement inverse() const;  // throws std::domain_error on zero
    friend bool operator==(const PerfElement& a, const PerfElement& b);
    friend bool operator!=(const PerfElement& a, const PerfElement& b) { return !(a == b); }

    PerfElement frobenius() const;          // x -> x^p, stays in the closure
    PerfElement frobenius_inverse() const;  // the unique p-th root
    PerfElement pth_root() const { return frobenius_inverse(); }

    std::string str() const;  // "{level;num;den}"

private:
    int64_t level_;
    FqPoly num_;
    FqPoly den_;
    void normalize();
};

PerfElement parse_perf(const FieldRef& coeff_field, std::string_view text);

}  // namespace skewlab::fields

#endif
