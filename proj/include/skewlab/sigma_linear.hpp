#ifndef SKEWLAB_SIGMA_LINEAR_HPP
#define SKEWLAB_SIGMA_LINEAR_HPP

#include <cstdint>
#include <utility>
#include <vector>

#include "skewlab/ore.hpp"

namespace skewlab::sigma_linear {

using ore::degree_lt;
using ore::OrePoly;

// n-twist (x_1, ..., x_n) -> sum_j delta_j(x_j): one OrePoly per variable
// over a shared handle. Additive map on K^n. Immutable value type.
template <typename H>
class NTwist {
public:
    using Handle = std::shared_ptr<const H>;
    using Elem = typename H::Element;

    NTwist(Handle h, std::vector<OrePoly<H>> components)
        : h_(std::move(h)), comps_(std::move(components)) {
        if (!h_) throw std::invalid_argument("null difference field handle");
        if (comps_.empty()) throw std::invalid_argument("n-twist needs at least one variable");
        for (const auto& c : comps_)
            if (!h_->same_field(*c.handle()))
                throw FieldMismatchError("n-twist components over different handles");
    }

    static NTwist zero(Handle h, size_t n) {
        std::vector<OrePoly<H>> cs(n, OrePoly<H>::zero(h));
        return NTwist(std::move(h), std::move(cs));
    }
    // delta in variable slot j, zero elsewhere
    static NTwist single(Handle h, size_t n, size_t j, OrePoly<H> delta) {
        if (j >= n) throw std::invalid_argument("variable slot out of range");
        std::vector<OrePoly<H>> cs(n, OrePoly<H>::zero(h));
        cs[j] = std::move(delta);
        return NTwist(std::move(h), std::move(cs));
    }

    const Handle& handle() const { return h_; }
    size_t arity() const { return comps_.size(); }
    const std::vector<OrePoly<H>>& components() const { return comps_; }
    bool is_zero() const {
        for (const auto& c : comps_)
            if (!c.is_zero()) return false;
        return true;
    }

    Elem evaluate(const std::vector<Elem>& point) const {
        if (point.size() != comps_.size())
            throw std::invalid_argument("point arity does not match the twist");
        Elem acc = h_->zero();
        for (size_t j = 0; j < comps_.size(); ++j)
            acc = acc + comps_[j].evaluate(point[j]);
        return acc;
    }

    friend NTwist operator+(const NTwist& a, const NTwist& b) {
        a.check(b);
        std::vector<OrePoly<H>> cs;
        cs.reserve(a.comps_.size());
        for (size_t j = 0; j < a.comps_.size(); ++j) cs.push_back(a.comps_[j] + b.comps_[j]);
        return NTwist(a.h_, std::move(cs));
    }
    friend NTwist operator-(const NTwist& a, const NTwist& b) { return a + (-b); }
    NTwist operator-() const {
        std::vector<OrePoly<H>> cs;
        cs.reserve(comps_.size());
        for (const auto& c : comps_) cs.push_back(-c);
        return NTwist(h_, std::move(cs));
    }
    // gamma * (delta_1, ..., delta_n) = (gamma delta_1, ..., gamma delta_n)
    NTwist left_mul(const OrePoly<H>& gamma) const {
        std::vector<OrePoly<H>> cs;
        cs.reserve(comps_.size());
        for (const auto& c : comps_) cs.push_back(gamma * c);
        return NTwist(h_, std::move(cs));
    }

    friend bool operator==(const NTwist& a, const NTwist& b) {
        if (!a.h_->same_field(*b.h_) || a.comps_.size() != b.comps_.size()) return false;
        for (size_t j = 0; j < a.comps_.size(); ++j)
            if (!(a.comps_[j] == b.comps_[j])) return false;
        return true;
    }
    friend bool operator!=(const NTwist& a, const NTwist& b) { return !(a == b); }

private:
    void check(const NTwist& o) const {
        if (!h_->same_field(*o.h_))
            throw FieldMismatchError("n-twists over different handles");
        if (comps_.size() != o.comps_.size())
            throw std::invalid_argument("n-twists of different arity");
    }

    Handle h_;
    std::vector<OrePoly<H>> comps_;
};

// V(S): common zero set of finitely many n-twists, represented by its
// presentation S. The vanishing module is read as the left span of S; no
// closure is computed.
template <typename H>
class SigmaLinearSet {
public:
    using Handle = std::shared_ptr<const H>;
    using Elem = typename H::Element;

    SigmaLinearSet(Handle h, size_t arity, std::vector<NTwist<H>> gens)
        : h_(std::move(h)), arity_(arity), gens_(std::move(gens)) {
        if (!h_) throw std::invalid_argument("null difference field handle");
        if (arity_ == 0) throw std::invalid_argument("arity must be positive");
        for (const auto& g : gens_) {
            if (!h_->same_field(*g.handle()))
                throw FieldMismatchError("generator over a different handle");
            if (g.arity() != arity_)
                throw std::invalid_argument("generator arity does not match the set");
        }
    }

    // V(empty) = K^n
    static SigmaLinearSet full(Handle h, size_t n) {
        return SigmaLinearSet(std::move(h), n, {});
    }

    const Handle& handle() const { return h_; }
    size_t arity() const { return arity_; }
    const std::vector<NTwist<H>>& generators() const { return gens_; }

    bool member(const std::vector<Elem>& point) const {
        if (point.size() != arity_)
            throw std::invalid_argument("point arity does not match the set");
        for (const auto& g : gens_)
            if (!g.evaluate(point).is_zero()) return false;
        return true;
    }

    SigmaLinearSet with_generator(NTwist<H> g) const {
        std::vector<NTwist<H>> gens = gens_;
        gens.push_back(std::move(g));
        return SigmaLinearSet(h_, arity_, std::move(gens));
    }

private:
    Handle h_;
    size_t arity_;
    std::vector<NTwist<H>> gens_;
};

// Staircase rank of the left module spanned by the generators: rows are
// twists, columns variables, entries OrePoly. Pivot within a column is the
// lowest-degree nonzero entry (ties by row order); elimination is
// right-division by the pivot, repeated until the column clears below the
// staircase. The count of pivot rows is invariant under row swaps, left
// multiplication of a row by a nonzero twist, and adding left multiples of
// one row to another.
template <typename H>
size_t rank(const std::vector<NTwist<H>>& gens) {
    if (gens.empty()) return 0;
    const size_t n = gens[0].arity();
    for (const auto& g : gens) {
        if (g.arity() != n) throw std::invalid_argument("generators of mixed arity");
        if (!gens[0].handle()->same_field(*g.handle()))
            throw FieldMismatchError("generators over different handles");
    }
    std::vector<std::vector<OrePoly<H>>> M;
    M.reserve(gens.size());
    for (const auto& g : gens) M.push_back(g.components());
    size_t rk = 0;
    for (size_t c = 0; c < n && rk < M.size(); ++c) {
        for (;;) {
            size_t piv = SIZE_MAX;
            for (size_t r = rk; r < M.size(); ++r) {
                if (M[r][c].is_zero()) continue;
                if (piv == SIZE_MAX || degree_lt(M[r][c].degree(), M[piv][c].degree()))
                    piv = r;
            }
            if (piv == SIZE_MAX) break;
            std::swap(M[piv], M[rk]);
            bool cleared = true;
            for (size_t r = rk + 1; r < M.size(); ++r) {
                if (M[r][c].is_zero()) continue;
                auto [q, rem] = right_divide(M[r][c], M[rk][c]);
                for (size_t j = 0; j < n; ++j) M[r][j] = M[r][j] - q * M[rk][j];
                if (!rem.is_zero()) cleared = false;
            }
            if (cleared) {
                ++rk;
                break;
            }
        }
    }
    return rk;
}

// n - rank(S): an upper bound for the Zariski dimension of V(S), exact when
// the presentation generates the full vanishing module.
template <typename H>
size_t dimension_upper(const SigmaLinearSet<H>& V) {
    return V.arity() - std::min(V.arity(), rank(V.generators()));
}

// G_b: the set b_1(sigma - id)(x_1) = b_i(sigma - id)(x_i) for all i,
// presented by the n-1 differences.
template <typename H>
SigmaLinearSet<H> build_G(std::shared_ptr<const H> h,
                          const std::vector<typename H::Element>& b) {
    if (b.empty()) throw std::invalid_argument("b must be nonempty");
    for (const auto& bi : b)
        if (bi.is_zero()) throw std::invalid_argument("all b_i must be nonzero");
    const size_t n = b.size();
    OrePoly<H> gamma = OrePoly<H>::sigma(h) - OrePoly<H>::identity(h);
    std::vector<NTwist<H>> gens;
    for (size_t i = 1; i < n; ++i) {
        std::vector<OrePoly<H>> cs(n, OrePoly<H>::zero(h));
        cs[0] = OrePoly<H>::constant(h, b[0]) * gamma;
        cs[i] = -(OrePoly<H>::constant(h, b[i]) * gamma);
        gens.push_back(NTwist<H>(h, std::move(cs)));
    }
    return SigmaLinearSet<H>(std::move(h), n, std::move(gens));
}

// Left Fix(sigma)-linear independence of {b_i^{-1}} by exhaustive scan over
// F_p-tuples; Fix(sigma) = F_p on every shipped handle.
template <typename H>
bool radical_test_G_exhaustive(const std::shared_ptr<const H>& h,
                               const std::vector<typename H::Element>& b) {
    if (b.empty()) throw std::invalid_argument("b must be nonempty");
    for (const auto& bi : b)
        if (bi.is_zero()) throw std::invalid_argument("all b_i must be nonzero");
    const uint64_t p = uint64_t(h->fixed_field_size());
    uint64_t total = 1;
    for (size_t i = 0; i < b.size(); ++i) {
        total = checked_mul(int64_t(total), int64_t(p));
        if (total > enumeration_bound())
            throw BoundExceededError("fixed-field tuple scan exceeds the enumeration bound");
    }
    std::vector<typename H::Element> inv;
    inv.reserve(b.size());
    for (const auto& bi : b) inv.push_back(bi.inverse());
    for (uint64_t idx = 1; idx < total; ++idx) {
        uint64_t rest = idx;
        auto acc = h->zero();
        for (size_t i = 0; i < inv.size(); ++i) {
            int64_t lambda = int64_t(rest % p);
            rest /= p;
            if (lambda != 0) acc = acc + h->scalar(lambda) * inv[i];
        }
        if (acc.is_zero()) return false;
    }
    return true;
}

namespace detail {

template <typename E>
bool determinant_is_zero(std::vector<std::vector<E>> M) {
    const size_t n = M.size();
    for (size_t c = 0; c < n; ++c) {
        size_t piv = SIZE_MAX;
        for (size_t r = c; r < n; ++r) {
            if (!M[r][c].is_zero()) {
                piv = r;
                break;
            }
        }
        if (piv == SIZE_MAX) return true;
        std::swap(M[piv], M[c]);
        E pinv = M[c][c].inverse();
        for (size_t r = c + 1; r < n; ++r) {
            if (M[r][c].is_zero()) continue;
            E f = M[r][c] * pinv;
            for (size_t j = c; j < n; ++j) M[r][j] = M[r][j] - f * M[c][j];
        }
    }
    return false;
}

}  // namespace detail

// Moore-matrix fast path: det(sigma^j(b_i^{-1})) vanishes exactly when the
// inverses are Fix(sigma)-dependent. Valid because sigma is the Frobenius on
// the shipped handles.
template <typename H>
bool radical_test_G_moore(const std::shared_ptr<const H>& h,
                          const std::vector<typename H::Element>& b) {
    if (b.empty()) throw std::invalid_argument("b must be nonempty");
    for (const auto& bi : b)
        if (bi.is_zero()) throw std::invalid_argument("all b_i must be nonzero");
    if (!h->sigma_is_frobenius())
        throw NotDecidableError("Moore criterion needs sigma = Frobenius");
    const size_t n = b.size();
    std::vector<std::vector<typename H::Element>> M(
        n, std::vector<typename H::Element>(n, h->zero()));
    for (size_t i = 0; i < n; ++i) {
        auto e = b[i].inverse();
        for (size_t j = 0; j < n; ++j) {
            M[i][j] = e;
            if (j + 1 < n) e = h->sigma(e);
        }
    }
    return !detail::determinant_is_zero(std::move(M));
}

// Fact-6.7 radicality of G_b: exhaustive when the tuple scan fits the
// enumeration bound, Moore determinant otherwise.
template <typename H>
bool radical_test_G(const std::shared_ptr<const H>& h,
                    const std::vector<typename H::Element>& b) {
    uint64_t total = 1;
    bool fits = true;
    for (size_t i = 0; i < b.size() && fits; ++i) {
        total *= uint64_t(h->fixed_field_size());
        if (total > enumeration_bound()) fits = false;
    }
    if (fits) return radical_test_G_exhaustive(h, b);
    if (h->sigma_is_frobenius()) return radical_test_G_moore(h, b);
    throw NotDecidableError("no applicable radicality method for this handle");
}

// Exact cardinality of V(S) intersected with K^n by full enumeration.
template <typename H>
uint64_t count_points(const SigmaLinearSet<H>& V) {
    auto sz = V.handle()->size();
    if (!sz) throw BoundExceededError("field is not enumerable");
    const uint64_t q = *sz;
    uint64_t total = 1;
    for (size_t i = 0; i < V.arity(); ++i) {
        total = checked_mul(int64_t(total), int64_t(q));
        if (total > enumeration_bound())
            throw BoundExceededError("point enumeration exceeds the configured bound");
    }
    uint64_t count = 0;
    std::vector<typename H::Element> point(V.arity(), V.handle()->zero());
    for (uint64_t idx = 0; idx < total; ++idx) {
        uint64_t rest = idx;
        for (size_t i = 0; i < V.arity(); ++i) {
            point[i] = V.handle()->element_at(rest % q);
            rest /= q;
        }
        if (V.member(point)) ++count;
    }
    return count;
}

// a = sigma(u) + delta(v) for delta = sum a_i sigma^i with a_0 != 0:
// v = a_0^{-1} a and u = -sum_{i>=1} sigma^{-1}(a_i) sigma^{i-1}(v).
template <typename H>
std::pair<typename H::Element, typename H::Element> decompose_sigma_delta(
    const typename H::Element& a, const OrePoly<H>& delta) {
    const auto& h = delta.handle();
    if (delta.coeff(0).is_zero())
        throw std::invalid_argument("twist must have nonzero constant coefficient");
    if (!h->inversive())
        throw std::invalid_argument("decomposition requires an inversive handle");
    auto v = delta.coeff(0).inverse() * a;
    auto u = h->zero();
    auto w = v;  // sigma^{i-1}(v)
    const size_t d = delta.is_zero() ? 0 : *delta.degree();
    for (size_t i = 1; i <= d; ++i) {
        u = u - h->sigma_inverse(delta.coeff(i)) * w;
        w = h->sigma(w);
    }
    return {std::move(u), std::move(v)};
}

// Fact-5.4 shadow: cutting with one hypersurface drops the dimension bound
// by at most one.
template <typename H>
bool hypersurface_cut_check(const SigmaLinearSet<H>& V, const NTwist<H>& delta) {
    const size_t before = dimension_upper(V);
    const size_t after = dimension_upper(V.with_generator(delta));
    return after <= before && before <= after + 1;
}

// Block product of presentations on disjoint variable blocks.
template <typename H>
SigmaLinearSet<H> product(const SigmaLinearSet<H>& U, const SigmaLinearSet<H>& V) {
    if (!U.handle()->same_field(*V.handle()))
        throw FieldMismatchError("product of sets over different handles");
    const size_t n = U.arity() + V.arity();
    std::vector<NTwist<H>> gens;
    for (const auto& g : U.generators()) {
        std::vector<OrePoly<H>> cs = g.components();
        cs.resize(n, OrePoly<H>::zero(U.handle()));
        gens.push_back(NTwist<H>(U.handle(), std::move(cs)));
    }
    for (const auto& g : V.generators()) {
        std::vector<OrePoly<H>> cs(U.arity(), OrePoly<H>::zero(U.handle()));
        for (const auto& c : g.components()) cs.push_back(c);
        gens.push_back(NTwist<H>(U.handle(), std::move(cs)));
    }
    return SigmaLinearSet<H>(U.handle(), n, std::move(gens));
}

}  // namespace skewlab::sigma_linear

#endif
