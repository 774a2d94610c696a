#ifndef SKEWLAB_HAHN_HPP
#define SKEWLAB_HAHN_HPP

#include <concepts>
#include <cstdint>
#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "skewlab/common.hpp"
#include "skewlab/exponent.hpp"

namespace skewlab::hahn {

// What a coefficient field must provide. FqElement and PerfElement satisfy
// this, and so does HahnSeries itself, which is how the nested field
// k((t^Gamma)) with k itself a Hahn series field is built.
template <class C>
concept Coefficient = requires(const C& a, const C& b) {
    { a + b } -> std::convertible_to<C>;
    { a - b } -> std::convertible_to<C>;
    { a * b } -> std::convertible_to<C>;
    { -a } -> std::convertible_to<C>;
    { a.inverse() } -> std::convertible_to<C>;
    { a.pth_root() } -> std::convertible_to<C>;
    { a.frobenius() } -> std::convertible_to<C>;
    { a.is_zero() } -> std::same_as<bool>;
    { a.is_exact() } -> std::same_as<bool>;
    { a.is_exact_zero() } -> std::same_as<bool>;
    { a == b } -> std::same_as<bool>;
    { a.agrees_with(b) } -> std::same_as<bool>;
    { a.zero_like() } -> std::convertible_to<C>;
    { a.one_like() } -> std::convertible_to<C>;
    { a.compatible_field(b) } -> std::same_as<bool>;
    { a.characteristic() } -> std::convertible_to<int64_t>;
    { a.str() } -> std::convertible_to<std::string>;
};

// Generalized power series with exponents in Gamma = Z[1/p] and finite
// stored support. A series either is exact (prec empty: the stored terms are
// the whole series) or is known below its precision: every stored exponent is
// < prec, and an absent slot below prec is exactly zero. Coefficients can
// carry windows of their own when C is itself a series type, including
// "ghost" slots whose coefficient is zero at its window but not exactly
// zero; those are kept, because dropping them would promote unknown to zero.
// Invariants: exponents strictly increasing, no exactly-zero coefficients,
// all exponents below prec.
template <Coefficient C>
class HahnSeries {
public:
    using Term = std::pair<Exponent, C>;

    HahnSeries(const C& field_zero, int64_t p)
        : proto_(field_zero.zero_like()), p_(p) {
        if (field_zero.characteristic() != p)
            throw FieldMismatchError("exponent group prime differs from coefficient characteristic");
    }

    static HahnSeries zero(const C& field_zero, int64_t p) { return HahnSeries(field_zero, p); }

    static HahnSeries zero_to_precision(const C& field_zero, int64_t p, const Exponent& prec) {
        HahnSeries s(field_zero, p);
        s.prec_ = prec;
        return s;
    }

    static HahnSeries monomial(const C& coeff, const Exponent& e) {
        HahnSeries s(coeff.zero_like(), e.p());
        if (!coeff.is_zero()) s.terms_.push_back({e, coeff});
        return s;
    }

    static HahnSeries constant(const C& coeff, int64_t p) {
        return monomial(coeff, Exponent(p, 0));
    }

    static HahnSeries one(const C& field_zero, int64_t p) {
        return constant(field_zero.one_like(), p);
    }

    static HahnSeries from_terms(const C& field_zero, int64_t p, std::vector<Term> terms,
                                 std::optional<Exponent> prec = std::nullopt) {
        HahnSeries s(field_zero, p);
        s.prec_ = std::move(prec);
        s.terms_ = std::move(terms);
        s.renormalize();
        return s;
    }

    int64_t p() const { return p_; }
    int64_t characteristic() const { return p_; }
    const std::optional<Exponent>& prec() const { return prec_; }
    const std::vector<Term>& terms() const { return terms_; }
    const C& field_zero() const { return proto_; }

    // Zero at every available window; exact zeros are the subset with no
    // window anywhere.
    bool is_zero() const {
        for (const auto& [e, c] : terms_)
            if (!c.is_zero()) return false;
        return true;
    }
    bool is_exact() const {
        if (prec_) return false;
        for (const auto& [e, c] : terms_)
            if (!c.is_exact()) return false;
        return true;
    }
    bool is_exact_zero() const { return terms_.empty() && !prec_.has_value(); }
    bool is_monomial() const { return terms_.size() == 1; }

    // Least exponent whose coefficient is definitely nonzero. A ghost slot in
    // front of it means the true leading term is hidden by a coefficient
    // window; series with no definite term at all are zero to precision.
    const Exponent& valuation() const { return lead().first; }
    const C& leading_coeff() const { return lead().second; }

    // The valuation when it is decidable from the stored data, otherwise
    // empty. Never throws.
    std::optional<Exponent> determined_valuation() const {
        if (terms_.empty() || terms_.front().second.is_zero()) return std::nullopt;
        return terms_.front().first;
    }

    C coeff_at(const Exponent& e) const {
        for (const auto& [ex, c] : terms_)
            if (ex == e) return c;
        return proto_;
    }

    bool compatible_field(const HahnSeries& o) const {
        return p_ == o.p_ && proto_.compatible_field(o.proto_);
    }

    HahnSeries zero_like() const { return HahnSeries(proto_, p_); }
    HahnSeries one_like() const { return one(proto_, p_); }

    // Knowledge window: cap precision at P and drop stored terms at or above.
    HahnSeries truncated(const Exponent& P) const {
        HahnSeries s = *this;
        if (!s.prec_ || P < *s.prec_) s.prec_ = P;
        while (!s.terms_.empty() && !(s.terms_.back().first < *s.prec_)) s.terms_.pop_back();
        return s;
    }

    friend HahnSeries operator+(const HahnSeries& a, const HahnSeries& b) {
        a.check_compat(b);
        std::vector<Term> ts = a.terms_;
        ts.insert(ts.end(), b.terms_.begin(), b.terms_.end());
        return from_terms(a.proto_, a.p_, std::move(ts), min_prec(a.prec_, b.prec_));
    }

    friend HahnSeries operator-(const HahnSeries& a, const HahnSeries& b) { return a + (-b); }

    HahnSeries operator-() const {
        HahnSeries s = *this;
        for (auto& [e, c] : s.terms_) c = -c;
        return s;
    }

    friend HahnSeries operator*(const HahnSeries& a, const HahnSeries& b) {
        a.check_compat(b);
        if (a.is_exact_zero() || b.is_exact_zero()) return zero(a.proto_, a.p_);
        std::optional<Exponent> prec = mul_prec(a, b);
        if (a.terms_.size() == 1 || b.terms_.size() == 1) {
            // monomial fast path; agrees with the general path bit for bit
            const HahnSeries& mono = a.terms_.size() == 1 ? a : b;
            const HahnSeries& rest = a.terms_.size() == 1 ? b : a;
            std::vector<Term> ts;
            if (!mono.terms_.empty()) {
                ts.reserve(rest.terms_.size());
                for (const auto& [e, c] : rest.terms_)
                    ts.push_back({e + mono.terms_[0].first, c * mono.terms_[0].second});
            }
            return from_terms(a.proto_, a.p_, std::move(ts), std::move(prec));
        }
        return mul_general_with_prec(a, b, std::move(prec));
    }

    // The always-schoolbook product, exposed so tests can pin the fast path
    // against it.
    static HahnSeries mul_general(const HahnSeries& a, const HahnSeries& b) {
        a.check_compat(b);
        if (a.is_exact_zero() || b.is_exact_zero()) return zero(a.proto_, a.p_);
        return mul_general_with_prec(a, b, mul_prec(a, b));
    }

    // Multiply by t^e.
    HahnSeries shifted(const Exponent& e) const {
        HahnSeries s(proto_, p_);
        s.terms_.reserve(terms_.size());
        for (const auto& [ex, c] : terms_) s.terms_.push_back({ex + e, c});
        if (prec_) s.prec_ = *prec_ + e;
        return s;
    }

    // Multiply by a coefficient scalar.
    HahnSeries scaled(const C& c) const {
        if (c.is_exact_zero()) return zero(proto_, p_);
        HahnSeries s = *this;
        for (auto& [e, sc] : s.terms_) sc = sc * c;
        s.renormalize();
        return s;
    }

    HahnSeries pow(uint64_t e) const {
        HahnSeries r = one(proto_, p_);
        HahnSeries b = *this;
        while (e > 0) {
            if (e & 1) r = r * b;
            e >>= 1;
            if (e > 0) b = b * b;
        }
        return r;
    }

    // Inverse. The result window is the smallest of: the requested target,
    // what the operand's own precision supports (prec - 2 v), and, when
    // nothing else applies and the operand is not an exact monomial, the
    // process default precision. Exact monomials invert exactly. Writing
    // u = c0 t^v (1 + w), the tail w is assembled directly from the stored
    // terms so its constant slot stays exactly zero even when coefficient
    // inverses carry windows of their own.
    HahnSeries invert(std::optional<Exponent> target = std::nullopt) const {
        const Exponent v = valuation();
        const C c0i = leading_coeff().inverse();
        std::optional<Exponent> avail;
        if (prec_) avail = *prec_ - v.scaled(2);
        std::optional<Exponent> P = min_prec(std::move(target), avail);
        if (terms_.size() == 1) {
            HahnSeries out = monomial(c0i, -v);
            return P ? out.truncated(*P) : out;
        }
        // The default window is relative: the result leads at -v, so absolute
        // default precision could fail to hold even the leading term.
        if (!P) P = Exponent(p_, default_precision_exponent()) - v;
        Exponent bound = *P + v;  // (1+w)^{-1} is needed below P + v
        std::vector<Term> wt;
        for (size_t i = 1; i < terms_.size(); ++i)
            wt.push_back({terms_[i].first - v, terms_[i].second * c0i});
        HahnSeries w = from_terms(proto_, p_, std::move(wt), bound);
        HahnSeries acc = one(proto_, p_);
        if (!w.terms_.empty()) {
            const Exponent step = w.terms_.front().first;  // > 0: exponents were sorted
            HahnSeries neg_w = -w;
            HahnSeries pw = neg_w;
            Exponent jv = step;
            uint64_t guard = 0;
            while (true) {
                acc = (acc + pw).truncated(bound);
                if (!(jv < bound)) break;
                pw = (pw * neg_w).truncated(bound);
                jv = jv + step;
                if (pw.terms_.empty()) break;
                if (++guard > (uint64_t{1} << 20))
                    throw BoundExceededError("inversion iteration bound exceeded");
            }
        }
        return (acc * monomial(c0i, -v)).truncated(*P);
    }

    HahnSeries inverse() const { return invert(); }

    friend HahnSeries operator/(const HahnSeries& a, const HahnSeries& b) {
        return a * b.invert();
    }

    // Coefficientwise p-th root with exponents divided by p; exact because
    // the coefficient field is perfect and x -> x^p maps t^(g/p) to t^g.
    HahnSeries pth_root() const {
        HahnSeries s(proto_, p_);
        s.terms_.reserve(terms_.size());
        for (const auto& [e, c] : terms_) s.terms_.push_back({e.scaled_pow_p(-1), c.pth_root()});
        if (prec_) s.prec_ = prec_->scaled_pow_p(-1);
        return s;
    }

    // x -> x^p; the freshman's dream over characteristic p.
    HahnSeries frobenius() const {
        HahnSeries s(proto_, p_);
        s.terms_.reserve(terms_.size());
        for (const auto& [e, c] : terms_) s.terms_.push_back({e.scaled_pow_p(1), c.frobenius()});
        if (prec_) s.prec_ = prec_->scaled_pow_p(1);
        return s;
    }

    // Representation equality: same stored terms and same window.
    friend bool operator==(const HahnSeries& a, const HahnSeries& b) {
        if (!a.compatible_field(b)) return false;
        if (a.prec_.has_value() != b.prec_.has_value()) return false;
        if (a.prec_ && !(*a.prec_ == *b.prec_)) return false;
        return same_terms(a.terms_, b.terms_);
    }
    friend bool operator!=(const HahnSeries& a, const HahnSeries& b) { return !(a == b); }

    // Equality below the common window, recursing into coefficient windows:
    // slots present on one side only must agree with zero there, which lets
    // a ghost slot match an absent one.
    bool agrees_with(const HahnSeries& o) const {
        if (!compatible_field(o)) return false;
        std::optional<Exponent> P = min_prec(prec_, o.prec_);
        size_t i = 0, j = 0;
        while (i < terms_.size() || j < o.terms_.size()) {
            const bool take_a =
                j >= o.terms_.size() ||
                (i < terms_.size() && terms_[i].first < o.terms_[j].first);
            const bool take_b =
                i >= terms_.size() ||
                (j < o.terms_.size() && o.terms_[j].first < terms_[i].first);
            const Exponent& e = take_b ? o.terms_[j].first : terms_[i].first;
            if (P && !(e < *P)) break;
            const C& ca = take_b ? proto_ : terms_[i].second;
            const C& cb = take_a ? o.proto_ : o.terms_[j].second;
            if (!ca.agrees_with(cb)) return false;
            if (!take_b) ++i;
            if (!take_a) ++j;
        }
        return true;
    }

    std::string str() const {
        std::string s;
        for (const auto& [e, c] : terms_) {
            if (!s.empty()) s += " + ";
            std::string cs = c.str();
            if (cs.find(' ') != std::string::npos) cs = "(" + cs + ")";
            s += cs + "*t^(" + e.str() + ")";
        }
        if (s.empty()) s = "0";
        if (prec_) s += " + O(t^(" + prec_->str() + "))";
        return s;
    }

    friend std::ostream& operator<<(std::ostream& os, const HahnSeries& s) {
        return os << s.str();
    }

private:
    C proto_;  // zero of the coefficient field; carries context for empty series
    int64_t p_;
    std::vector<Term> terms_;
    std::optional<Exponent> prec_;

    void check_compat(const HahnSeries& o) const {
        if (!compatible_field(o))
            throw FieldMismatchError("series over incompatible coefficient fields");
    }

    const Term& lead() const {
        for (const auto& t : terms_) {
            if (t.second.is_zero()) continue;
            if (&t != &terms_.front())
                throw PrecisionError("leading term hidden by a coefficient window");
            return t;
        }
        if (is_exact_zero()) throw ZeroSeriesError("leading term of exact zero series");
        throw ZeroSeriesError("leading term of zero-to-precision series");
    }

    static bool same_terms(const std::vector<Term>& a, const std::vector<Term>& b) {
        if (a.size() != b.size()) return false;
        for (size_t i = 0; i < a.size(); ++i)
            if (!(a[i].first == b[i].first) || !(a[i].second == b[i].second)) return false;
        return true;
    }

    static std::optional<Exponent> min_prec(std::optional<Exponent> a, std::optional<Exponent> b) {
        if (!a) return b;
        if (!b) return a;
        return *a < *b ? a : b;
    }

    // Lower bound below which nothing can be stored: valuation when there are
    // terms, otherwise the window itself. Empty for exact zero.
    std::optional<Exponent> known_min() const {
        if (!terms_.empty()) return terms_.front().first;
        return prec_;
    }

    static std::optional<Exponent> mul_prec(const HahnSeries& a, const HahnSeries& b) {
        std::optional<Exponent> out;
        if (a.prec_) {
            if (auto km = b.known_min()) out = min_prec(out, *a.prec_ + *km);
        }
        if (b.prec_) {
            if (auto km = a.known_min()) out = min_prec(out, *b.prec_ + *km);
        }
        return out;
    }

    static HahnSeries mul_general_with_prec(const HahnSeries& a, const HahnSeries& b,
                                            std::optional<Exponent> prec) {
        std::map<Exponent, C> acc;
        for (const auto& [ea, ca] : a.terms_) {
            for (const auto& [eb, cb] : b.terms_) {
                Exponent e = ea + eb;
                if (prec && !(e < *prec)) continue;
                auto it = acc.find(e);
                if (it == acc.end()) acc.emplace(e, ca * cb);
                else it->second = it->second + ca * cb;
            }
        }
        std::vector<Term> ts;
        ts.reserve(acc.size());
        for (auto& [e, c] : acc) ts.push_back({e, std::move(c)});
        return from_terms(a.proto_, a.p_, std::move(ts), std::move(prec));
    }

    void renormalize() {
        for (const auto& [e, c] : terms_) {
            if (e.p() != p_) throw FieldMismatchError("exponent group does not match series");
            if (!proto_.compatible_field(c))
                throw FieldMismatchError("coefficient field does not match series");
        }
        std::sort(terms_.begin(), terms_.end(),
                  [](const Term& x, const Term& y) { return x.first < y.first; });
        std::vector<Term> out;
        out.reserve(terms_.size());
        for (auto& t : terms_) {
            if (!out.empty() && out.back().first == t.first)
                out.back().second = out.back().second + t.second;
            else
                out.push_back(std::move(t));
        }
        terms_.clear();
        for (auto& t : out) {
            // keep ghost slots: zero at the stored window is not exactly zero
            if (t.second.is_exact_zero()) continue;
            if (prec_ && !(t.first < *prec_)) continue;
            terms_.push_back(std::move(t));
        }
    }
};

}  // namespace skewlab::hahn

#endif
