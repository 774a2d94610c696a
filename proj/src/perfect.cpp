#include "skewlab/perfect.hpp"

#include <string>
#include <tuple>

namespace skewlab::fields {

PerfElement::PerfElement(int64_t level, FqPoly num, FqPoly den)
    : level_(level), num_(std::move(num)), den_(std::move(den)) {
    if (level_ < 0) throw std::invalid_argument("negative level");
    if (num_.field().get() != den_.field().get())
        throw FieldMismatchError("numerator and denominator over different fields");
    if (den_.is_zero()) throw std::domain_error("zero denominator");
    normalize();
}

void PerfElement::normalize() {
    if (num_.is_zero()) {
        level_ = 0;
        den_ = FqPoly::constant(FqElement::one(den_.field()));
        return;
    }
    FqPoly g = gcd(num_, den_);
    if (g.degree() > 0) {
        num_ = num_.divmod(g).first;
        den_ = den_.divmod(g).first;
    }
    FqElement lead_inv = den_.leading().inverse();
    num_ = num_ * FqPoly::constant(lead_inv);
    den_ = den_ * FqPoly::constant(lead_inv);
    int64_t p = characteristic();
    while (level_ > 0) {
        auto cn = num_.compress(p);
        auto cd = den_.compress(p);
        if (!cn || !cd) break;
        num_ = std::move(*cn);
        den_ = std::move(*cd);
        --level_;
    }
}

PerfElement PerfElement::zero(const FieldRef& f) {
    return PerfElement(0, FqPoly(f), FqPoly::constant(FqElement::one(f)));
}

PerfElement PerfElement::one(const FieldRef& f) {
    return PerfElement(0, FqPoly::constant(FqElement::one(f)),
                       FqPoly::constant(FqElement::one(f)));
}

PerfElement PerfElement::constant(const FqElement& c) {
    return PerfElement(0, FqPoly::constant(c), FqPoly::constant(c.one_like()));
}

PerfElement PerfElement::t(const FieldRef& f) {
    return PerfElement(0, FqPoly::variable(f), FqPoly::constant(FqElement::one(f)));
}

PerfElement PerfElement::t_root(const FieldRef& f, int64_t level) {
    return PerfElement(level, FqPoly::variable(f), FqPoly::constant(FqElement::one(f)));
}

namespace {

// rewrite both operands at the same (maximal) level
std::tuple<int64_t, FqPoly, FqPoly, FqPoly, FqPoly> align(const PerfElement& a,
                                                          const PerfElement& b) {
    int64_t l = std::max(a.level(), b.level());
    int64_t p = a.characteristic();
    auto lift = [&](const FqPoly& f, int64_t from) {
        int64_t factor = 1;
        for (int64_t i = from; i < l; ++i) factor = checked_mul(factor, p);
        return f.stretch(factor);
    };
    return {l, lift(a.num(), a.level()), lift(a.den(), a.level()), lift(b.num(), b.level()),
            lift(b.den(), b.level())};
}

void check_compat(const PerfElement& a, const PerfElement& b) {
    if (!a.compatible_field(b)) throw FieldMismatchError("PerfElement coefficient fields differ");
}

}  // namespace

PerfElement operator+(const PerfElement& a, const PerfElement& b) {
    check_compat(a, b);
    auto [l, an, ad, bn, bd] = align(a, b);
    return PerfElement(l, an * bd + bn * ad, ad * bd);
}

PerfElement operator-(const PerfElement& a, const PerfElement& b) { return a + (-b); }

PerfElement operator*(const PerfElement& a, const PerfElement& b) {
    check_compat(a, b);
    auto [l, an, ad, bn, bd] = align(a, b);
    return PerfElement(l, an * bn, ad * bd);
}

PerfElement operator/(const PerfElement& a, const PerfElement& b) { return a * b.inverse(); }

PerfElement PerfElement::operator-() const { return PerfElement(level_, -num_, den_); }

PerfElement PerfElement::inverse() const {
    if (is_zero()) throw std::domain_error("division by zero in perfect closure");
    return PerfElement(level_, den_, num_);
}

bool operator==(const PerfElement& a, const PerfElement& b) {
    if (!a.compatible_field(b)) return false;
    return a.level_ == b.level_ && a.num_ == b.num_ && a.den_ == b.den_;
}

PerfElement PerfElement::frobenius() const {
    if (level_ > 0)
        return PerfElement(level_ - 1, num_.coeff_frobenius(), den_.coeff_frobenius());
    int64_t p = characteristic();
    return PerfElement(0, num_.coeff_frobenius().stretch(p), den_.coeff_frobenius().stretch(p));
}

PerfElement PerfElement::frobenius_inverse() const {
    return PerfElement(level_ + 1, num_.coeff_pth_root(), den_.coeff_pth_root());
}

std::string PerfElement::str() const {
    return "{" + std::to_string(level_) + ";" + num_.str() + ";" + den_.str() + "}";
}

PerfElement parse_perf(const FieldRef& coeff_field, std::string_view text) {
    auto fail = [&]() { return std::invalid_argument("malformed element literal: " + std::string(text)); };
    std::string t;
    for (char c : text)
        if (c != ' ') t += c;
    if (t.size() < 2 || t.front() != '{' || t.back() != '}') throw fail();
    std::string body = t.substr(1, t.size() - 2);
    size_t s1 = body.find(';');
    if (s1 == std::string::npos) throw fail();
    size_t s2 = body.find(';', s1 + 1);
    if (s2 == std::string::npos || body.find(';', s2 + 1) != std::string::npos) throw fail();
    std::string lvl = body.substr(0, s1);
    if (lvl.empty()) throw fail();
    for (char c : lvl)
        if (!isdigit(static_cast<unsigned char>(c))) throw fail();
    int64_t level = std::stoll(lvl);
    FqPoly num = parse_fq_poly(coeff_field, body.substr(s1 + 1, s2 - s1 - 1));
    FqPoly den = parse_fq_poly(coeff_field, body.substr(s2 + 1));
    return PerfElement(level, std::move(num), std::move(den));
}

}  // namespace skewlab::fields
