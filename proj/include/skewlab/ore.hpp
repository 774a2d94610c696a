#ifndef SKEWLAB_ORE_HPP
#define SKEWLAB_ORE_HPP

#include <algorithm>
#include <cstddef>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "skewlab/difference_fields.hpp"

namespace skewlab::ore {

// Twisted polynomial sum r_i sigma^i over a difference field handle, left
// coefficients, composition product determined by sigma*a = sigma(a)*sigma.
// The degree of the zero twist is the empty optional, which sorts below
// every natural degree. Immutable value type.
template <typename H>
class OrePoly {
public:
    using Handle = std::shared_ptr<const H>;
    using Elem = typename H::Element;

    static OrePoly zero(Handle h) { return OrePoly(std::move(h), {}); }
    static OrePoly identity(Handle h) {
        Elem o = h->one();
        return OrePoly(std::move(h), {std::move(o)});
    }
    static OrePoly sigma(Handle h, size_t e = 1) {
        std::vector<Elem> cs(e + 1, h->zero());
        cs[e] = h->one();
        return OrePoly(std::move(h), std::move(cs));
    }
    static OrePoly constant(Handle h, Elem a) {
        return OrePoly(std::move(h), {std::move(a)});
    }
    static OrePoly monomial(Handle h, Elem c, size_t e) {
        std::vector<Elem> cs(e + 1, h->zero());
        cs[e] = std::move(c);
        return OrePoly(std::move(h), std::move(cs));
    }
    static OrePoly from_coeffs(Handle h, std::vector<Elem> r) {
        return OrePoly(std::move(h), std::move(r));
    }

    const Handle& handle() const { return h_; }
    const std::vector<Elem>& coeffs() const { return cs_; }
    bool is_zero() const { return cs_.empty(); }
    std::optional<size_t> degree() const {
        if (cs_.empty()) return std::nullopt;
        return cs_.size() - 1;
    }
    Elem coeff(size_t i) const { return i < cs_.size() ? cs_[i] : h_->zero(); }
    const Elem& leading() const {
        if (cs_.empty()) throw std::domain_error("leading coefficient of the zero twist");
        return cs_.back();
    }

    friend OrePoly operator+(const OrePoly& a, const OrePoly& b) {
        a.check(b);
        const size_t n = std::max(a.cs_.size(), b.cs_.size());
        std::vector<Elem> cs;
        cs.reserve(n);
        for (size_t i = 0; i < n; ++i) cs.push_back(a.coeff(i) + b.coeff(i));
        return OrePoly(a.h_, std::move(cs));
    }
    friend OrePoly operator-(const OrePoly& a, const OrePoly& b) { return a + (-b); }
    OrePoly operator-() const {
        std::vector<Elem> cs;
        cs.reserve(cs_.size());
        for (const auto& c : cs_) cs.push_back(-c);
        return OrePoly(h_, std::move(cs));
    }

    // sum over i, j of r_i sigma^i(s_j) sigma^{i+j}
    friend OrePoly operator*(const OrePoly& a, const OrePoly& b) {
        a.check(b);
        if (a.cs_.empty() || b.cs_.empty()) return zero(a.h_);
        std::vector<Elem> cs(a.cs_.size() + b.cs_.size() - 1, a.h_->zero());
        std::vector<Elem> twisted = b.cs_;  // sigma^i of b's coefficients
        for (size_t i = 0; i < a.cs_.size(); ++i) {
            for (size_t j = 0; j < twisted.size(); ++j)
                cs[i + j] = cs[i + j] + a.cs_[i] * twisted[j];
            if (i + 1 < a.cs_.size())
                for (auto& s : twisted) s = a.h_->sigma(s);
        }
        return OrePoly(a.h_, std::move(cs));
    }

    // sum r_i sigma^i(c), the twist as an additive map
    Elem evaluate(const Elem& c) const {
        Elem acc = h_->zero();
        Elem power = c;
        for (size_t i = 0; i < cs_.size(); ++i) {
            acc = acc + cs_[i] * power;
            if (i + 1 < cs_.size()) power = h_->sigma(power);
        }
        return acc;
    }

    friend bool operator==(const OrePoly& a, const OrePoly& b) {
        if (!a.h_->same_field(*b.h_)) return false;
        if (a.cs_.size() != b.cs_.size()) return false;
        for (size_t i = 0; i < a.cs_.size(); ++i)
            if (!(a.cs_[i] == b.cs_[i])) return false;
        return true;
    }
    friend bool operator!=(const OrePoly& a, const OrePoly& b) { return !(a == b); }

    // "r_n*S^n + ... + r_1*S + r_0", zero coefficients skipped, "0" for the
    // zero twist. Round-trips through parse_ore.
    std::string str() const {
        if (cs_.empty()) return "0";
        std::string out;
        for (size_t i = cs_.size(); i-- > 0;) {
            if (cs_[i].is_zero()) continue;
            if (!out.empty()) out += " + ";
            out += h_->to_string(cs_[i]);
            if (i == 1) out += "*S";
            if (i > 1) out += "*S^" + std::to_string(i);
        }
        return out;
    }

private:
    OrePoly(Handle h, std::vector<Elem> cs) : h_(std::move(h)), cs_(std::move(cs)) {
        if (!h_) throw std::invalid_argument("null difference field handle");
        while (!cs_.empty() && cs_.back().is_zero()) cs_.pop_back();
    }

    void check(const OrePoly& o) const {
        if (!h_->same_field(*o.h_))
            throw FieldMismatchError("twists over different difference fields");
    }

    Handle h_;
    std::vector<Elem> cs_;
};

template <typename H>
OrePoly<H> twist_mul(const OrePoly<H>& f, const OrePoly<H>& g) {
    return f * g;
}

template <typename H>
typename H::Element evaluate(const OrePoly<H>& f, const typename H::Element& c) {
    return f.evaluate(c);
}

// Degree order with the zero sentinel below every natural.
inline bool degree_lt(const std::optional<size_t>& a, const std::optional<size_t>& b) {
    if (!a) return b.has_value();
    if (!b) return false;
    return *a < *b;
}

// f = q*g + r with deg r < deg g. Leading-coefficient elimination uses
// l_q = l_r * sigma^d(l_g)^{-1}, so no sigma-inverse is required.
template <typename H>
std::pair<OrePoly<H>, OrePoly<H>> right_divide(const OrePoly<H>& f, const OrePoly<H>& g) {
    if (!f.handle()->same_field(*g.handle()))
        throw FieldMismatchError("twists over different difference fields");
    if (g.is_zero()) throw std::domain_error("right division by the zero twist");
    const auto& h = f.handle();
    const size_t dg = *g.degree();
    OrePoly<H> q = OrePoly<H>::zero(h);
    OrePoly<H> r = f;
    while (!r.is_zero() && *r.degree() >= dg) {
        const size_t d = *r.degree() - dg;
        auto lg = g.leading();
        for (size_t i = 0; i < d; ++i) lg = h->sigma(lg);
        OrePoly<H> term = OrePoly<H>::monomial(h, r.leading() * lg.inverse(), d);
        q = q + term;
        r = r - term * g;
    }
    return {std::move(q), std::move(r)};
}

// f = g*q + r with deg r < deg g. Solving g_k sigma^k(c) = l_r for c needs
// sigma^{-k}, hence an inversive handle.
template <typename H>
std::pair<OrePoly<H>, OrePoly<H>> left_divide(const OrePoly<H>& f, const OrePoly<H>& g) {
    if (!f.handle()->same_field(*g.handle()))
        throw FieldMismatchError("twists over different difference fields");
    if (g.is_zero()) throw std::domain_error("left division by the zero twist");
    const auto& h = f.handle();
    if (!h->inversive())
        throw std::invalid_argument("left division requires an inversive handle");
    const size_t dg = *g.degree();
    OrePoly<H> q = OrePoly<H>::zero(h);
    OrePoly<H> r = f;
    while (!r.is_zero() && *r.degree() >= dg) {
        const size_t d = *r.degree() - dg;
        auto c = g.leading().inverse() * r.leading();
        for (size_t i = 0; i < dg; ++i) c = h->sigma_inverse(c);
        OrePoly<H> term = OrePoly<H>::monomial(h, std::move(c), d);
        q = q + term;
        r = r - g * term;
    }
    return {std::move(q), std::move(r)};
}

// Monic greatest common right divisor by the Euclidean algorithm on
// right_divide; generates the left ideal spanned by f and g.
template <typename H>
OrePoly<H> right_gcd(const OrePoly<H>& f, const OrePoly<H>& g) {
    if (f.is_zero() && g.is_zero())
        throw std::domain_error("right gcd of two zero twists");
    OrePoly<H> a = f;
    OrePoly<H> b = g;
    while (!b.is_zero()) {
        auto [q, r] = right_divide(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    return OrePoly<H>::constant(a.handle(), a.leading().inverse()) * a;
}

// For a nonzero root a of f, the cofactor delta with
// f = delta * (sigma - sigma(a) a^{-1} id) exactly; deg delta = deg f - 1.
template <typename H>
OrePoly<H> factor_through_root(const OrePoly<H>& f, const typename H::Element& a) {
    const auto& h = f.handle();
    if (a.is_zero()) throw std::invalid_argument("root must be nonzero");
    OrePoly<H> g =
        OrePoly<H>::sigma(h) - OrePoly<H>::constant(h, h->sigma(a) * a.inverse());
    auto [q, r] = right_divide(f, g);
    if (!r.is_zero()) throw std::invalid_argument("given point is not a root of the twist");
    return q;
}

// Inverse of str(): terms "lit*S^k", "lit*S", "lit" joined by " + ". The
// coefficient literal is the handle's own text form, which never contains
// the substring "*S" or a space.
template <typename H>
OrePoly<H> parse_ore(std::shared_ptr<const H> h, std::string_view text) {
    auto fail = [&] {
        throw std::invalid_argument("unparsable twist: " + std::string(text));
    };
    std::string_view rest = text;
    while (!rest.empty() && rest.front() == ' ') rest.remove_prefix(1);
    while (!rest.empty() && rest.back() == ' ') rest.remove_suffix(1);
    if (rest.empty()) fail();
    if (rest == "0") return OrePoly<H>::zero(std::move(h));
    std::vector<typename H::Element> cs;
    auto put = [&](size_t e, typename H::Element c) {
        while (cs.size() <= e) cs.push_back(h->zero());
        cs[e] = cs[e] + c;
    };
    for (;;) {
        size_t cut = rest.find(" + ");
        std::string_view tok = cut == std::string_view::npos ? rest : rest.substr(0, cut);
        if (tok.empty()) fail();
        size_t star = tok.rfind("*S");
        if (star == std::string_view::npos) {
            put(0, h->parse(tok));
        } else {
            std::string_view lit = tok.substr(0, star);
            std::string_view tail = tok.substr(star + 2);
            size_t e = 1;
            if (!tail.empty()) {
                if (tail.front() != '^' || tail.size() < 2) fail();
                e = 0;
                for (char ch : tail.substr(1)) {
                    if (ch < '0' || ch > '9') fail();
                    e = e * 10 + size_t(ch - '0');
                    if (e > 4096) fail();
                }
            }
            put(e, h->parse(lit));
        }
        if (cut == std::string_view::npos) break;
        rest.remove_prefix(cut + 3);
    }
    return OrePoly<H>::from_coeffs(std::move(h), std::move(cs));
}

}  // namespace skewlab::ore

#endif
