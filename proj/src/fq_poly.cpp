#include "skewlab/fq_poly.hpp"

#include <algorithm>

namespace skewlab::fields {

FqPoly::FqPoly(FieldRef field) : field_(std::move(field)) {
    if (!field_) throw std::invalid_argument("null field descriptor");
}

FqPoly::FqPoly(FieldRef field, std::vector<FqElement> coeffs) : field_(std::move(field)) {
    if (!field_) throw std::invalid_argument("null field descriptor");
    coeffs_.reserve(coeffs.size());
    for (auto& c : coeffs) coeffs_.push_back(embed(c, field_));
    trim();
}

void FqPoly::trim() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

FqPoly FqPoly::constant(const FqElement& c) { return FqPoly(c.field(), {c}); }

FqPoly FqPoly::variable(const FieldRef& field) {
    return FqPoly(field, {FqElement::zero(field), FqElement::one(field)});
}

FqPoly FqPoly::monomial(const FqElement& c, int64_t e) {
    if (e < 0) throw std::invalid_argument("negative exponent in FqPoly");
    std::vector<FqElement> v(static_cast<size_t>(e), c.zero_like());
    v.push_back(c);
    return FqPoly(c.field(), std::move(v));
}

int64_t FqPoly::degree() const { return static_cast<int64_t>(coeffs_.size()) - 1; }

FqElement FqPoly::coeff(int64_t i) const {
    if (i < 0 || i >= static_cast<int64_t>(coeffs_.size())) return FqElement::zero(field_);
    return coeffs_[static_cast<size_t>(i)];
}

FqElement FqPoly::leading() const {
    if (is_zero()) throw std::domain_error("leading coefficient of zero polynomial");
    return coeffs_.back();
}

FqPoly operator+(const FqPoly& a, const FqPoly& b) {
    if (a.field_.get() != b.field_.get()) throw FieldMismatchError("FqPoly fields differ");
    std::vector<FqElement> r;
    size_t n = std::max(a.coeffs_.size(), b.coeffs_.size());
    r.reserve(n);
    for (size_t i = 0; i < n; ++i) {
        FqElement v = FqElement::zero(a.field_);
        if (i < a.coeffs_.size()) v = v + a.coeffs_[i];
        if (i < b.coeffs_.size()) v = v + b.coeffs_[i];
        r.push_back(std::move(v));
    }
    return FqPoly(a.field_, std::move(r));
}

FqPoly operator-(const FqPoly& a, const FqPoly& b) { return a + (-b); }

FqPoly FqPoly::operator-() const {
    std::vector<FqElement> r;
    r.reserve(coeffs_.size());
    for (const auto& c : coeffs_) r.push_back(-c);
    return FqPoly(field_, std::move(r));
}

FqPoly operator*(const FqPoly& a, const FqPoly& b) {
    if (a.field_.get() != b.field_.get()) throw FieldMismatchError("FqPoly fields differ");
    if (a.is_zero() || b.is_zero()) return FqPoly(a.field_);
    std::vector<FqElement> r(a.coeffs_.size() + b.coeffs_.size() - 1, FqElement::zero(a.field_));
    for (size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i].is_zero()) continue;
        for (size_t j = 0; j < b.coeffs_.size(); ++j)
            r[i + j] = r[i + j] + a.coeffs_[i] * b.coeffs_[j];
    }
    return FqPoly(a.field_, std::move(r));
}

bool operator==(const FqPoly& a, const FqPoly& b) {
    if (a.field_.get() != b.field_.get()) return false;
    return a.coeffs_ == b.coeffs_;
}

std::pair<FqPoly, FqPoly> FqPoly::divmod(const FqPoly& g) const {
    if (field_.get() != g.field_.get()) throw FieldMismatchError("FqPoly fields differ");
    if (g.is_zero()) throw std::domain_error("division by zero polynomial");
    FqPoly q(field_), r = *this;
    FqElement lead_inv = g.leading().inverse();
    std::vector<FqElement> qc;
    int64_t dq = r.degree() - g.degree();
    if (dq < 0) return {q, r};
    qc.assign(static_cast<size_t>(dq) + 1, FqElement::zero(field_));
    while (!r.is_zero() && r.degree() >= g.degree()) {
        int64_t shift = r.degree() - g.degree();
        FqElement c = r.leading() * lead_inv;
        qc[static_cast<size_t>(shift)] = c;
        r = r - FqPoly::monomial(c, shift) * g;
    }
    return {FqPoly(field_, std::move(qc)), r};
}

FqPoly FqPoly::make_monic() const {
    if (is_zero()) return *this;
    FqElement inv = leading().inverse();
    std::vector<FqElement> r;
    r.reserve(coeffs_.size());
    for (const auto& c : coeffs_) r.push_back(c * inv);
    return FqPoly(field_, std::move(r));
}

FqPoly FqPoly::coeff_frobenius() const {
    std::vector<FqElement> r;
    r.reserve(coeffs_.size());
    for (const auto& c : coeffs_) r.push_back(c.frobenius());
    return FqPoly(field_, std::move(r));
}

FqPoly FqPoly::coeff_pth_root() const {
    std::vector<FqElement> r;
    r.reserve(coeffs_.size());
    for (const auto& c : coeffs_) r.push_back(c.pth_root());
    return FqPoly(field_, std::move(r));
}

FqPoly FqPoly::stretch(int64_t factor) const {
    if (factor < 1) throw std::invalid_argument("stretch factor must be >= 1");
    if (is_zero() || factor == 1) return *this;
    std::vector<FqElement> r(static_cast<size_t>(degree() * factor) + 1,
                             FqElement::zero(field_));
    for (size_t i = 0; i < coeffs_.size(); ++i)
        r[i * static_cast<size_t>(factor)] = coeffs_[i];
    return FqPoly(field_, std::move(r));
}

std::optional<FqPoly> FqPoly::compress(int64_t factor) const {
    if (factor < 1) throw std::invalid_argument("compress factor must be >= 1");
    if (is_zero() || factor == 1) return *this;
    std::vector<FqElement> r(coeffs_.size() / static_cast<size_t>(factor) + 1,
                             FqElement::zero(field_));
    for (size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i].is_zero()) continue;
        if (i % static_cast<size_t>(factor) != 0) return std::nullopt;
        r[i / static_cast<size_t>(factor)] = coeffs_[i];
    }
    return FqPoly(field_, std::move(r));
}

std::string FqPoly::str() const {
    if (is_zero()) return "0";
    std::string s;
    for (size_t i = coeffs_.size(); i-- > 0;) {
        if (coeffs_[i].is_zero()) continue;
        if (!s.empty()) s += "+";
        s += coeffs_[i].str();
        if (i == 1) s += "*u";
        else if (i > 1) s += "*u^" + std::to_string(i);
    }
    return s;
}

FqPoly gcd(const FqPoly& a, const FqPoly& b) {
    FqPoly x = a, y = b;
    while (!y.is_zero()) {
        FqPoly r = x.divmod(y).second;
        x = y;
        y = r;
    }
    return x.make_monic();
}

FqPoly parse_fq_poly(const FieldRef& field, std::string_view text) {
    auto fail = [&]() { return std::invalid_argument("malformed polynomial literal: " + std::string(text)); };
    // strip spaces
    std::string t;
    for (char c : text)
        if (c != ' ') t += c;
    if (t == "0") return FqPoly(field);
    FqPoly acc(field);
    size_t pos = 0;
    while (pos < t.size()) {
        if (t[pos] != '[') throw fail();
        size_t close = t.find(']', pos);
        if (close == std::string::npos) throw fail();
        FqElement c = parse_fq(field, std::string_view(t).substr(pos, close - pos + 1));
        pos = close + 1;
        int64_t e = 0;
        if (pos < t.size() && t[pos] == '*') {
            ++pos;
            if (pos >= t.size() || t[pos] != 'u') throw fail();
            ++pos;
            e = 1;
            if (pos < t.size() && t[pos] == '^') {
                ++pos;
                if (pos >= t.size() || !isdigit(static_cast<unsigned char>(t[pos]))) throw fail();
                e = 0;
                while (pos < t.size() && isdigit(static_cast<unsigned char>(t[pos])))
                    e = e * 10 + (t[pos++] - '0');
            }
        }
        acc = acc + FqPoly::monomial(embed(c, field), e);
        if (pos < t.size()) {
            if (t[pos] != '+') throw fail();
            ++pos;
            if (pos == t.size()) throw fail();
        }
    }
    return acc;
}

}  // namespace skewlab::fields
