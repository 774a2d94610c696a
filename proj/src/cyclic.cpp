#include "skewlab/cyclic.hpp"

#include <stdexcept>
#include <utility>

namespace skewlab::cyclic {

using fields::FqElement;
using fields::get_field;
using hahn::Exponent;

namespace {

FqElement base_one(int64_t p) { return FqElement::one(get_field(p, 1)); }

int64_t rnd_range(std::mt19937_64& rng, int64_t lo, int64_t hi) {
    return lo + int64_t(rng() % uint64_t(hi - lo + 1));
}

}  // namespace

CyclicAlgebra::CyclicAlgebra(int64_t p, int64_t s, FqElement omega, FSeries alpha,
                             Exponent prec, bool standard)
    : p_(p),
      s_(s),
      omega_(std::move(omega)),
      alpha_(std::move(alpha)),
      radicand_(FSeries::monomial(KSeries::constant(base_one(p), p), Exponent(p, 1))),
      prec_(std::move(prec)),
      standard_(standard) {
    if (s_ != 2 && s_ != 3) throw std::invalid_argument("degree must be 2 or 3");
    if (alpha_.is_zero()) throw std::invalid_argument("structure constant must be nonzero");
    if (alpha_.p() != p_) throw FieldMismatchError("structure constant over the wrong field");
    omega_pow_.reserve(size_t(s_));
    FqElement w = FqElement::one(omega_.field());
    for (int64_t i = 0; i < s_; ++i) {
        omega_pow_.push_back(w);
        if (i > 0 && w == omega_pow_[0]) throw std::logic_error("twist scalar order too small");
        w = w * omega_;
    }
    if (!(w == omega_pow_[0])) throw std::logic_error("twist scalar order exceeds degree");
}

AlgebraRef CyclicAlgebra::make_division_algebra(int64_t p) {
    return make_division_algebra(p, default_precision_exponent());
}

AlgebraRef CyclicAlgebra::make_division_algebra(int64_t p, int64_t prec_exponent) {
    if (!fields::is_prime(p)) throw std::invalid_argument("p must be prime");
    int64_t s = p == 2 ? 3 : 2;
    FqElement omega = p == 2 ? fields::primitive_root_of_unity(2, 3)
                             : FqElement::scalar(get_field(p, 1), p - 1);
    FSeries alpha = FSeries::constant(KSeries::monomial(base_one(p), Exponent(p, 1)), p);
    return AlgebraRef(new CyclicAlgebra(p, s, std::move(omega), std::move(alpha),
                                        Exponent(p, prec_exponent), true));
}

AlgebraRef CyclicAlgebra::with_alpha(FSeries alpha) const {
    return AlgebraRef(new CyclicAlgebra(p_, s_, omega_, std::move(alpha), prec_, false));
}

KSeries CyclicAlgebra::k_zero() const { return KSeries::zero(FqElement::zero(get_field(p_, 1)), p_); }
KSeries CyclicAlgebra::k_one() const { return KSeries::one(FqElement::zero(get_field(p_, 1)), p_); }
FSeries CyclicAlgebra::f_zero() const { return FSeries::zero(k_zero(), p_); }
FSeries CyclicAlgebra::f_one() const { return FSeries::one(k_zero(), p_); }

FSeries CyclicAlgebra::f_scalar(int64_t v) const {
    return FSeries::constant(KSeries::constant(FqElement::scalar(get_field(p_, 1), v), p_), p_);
}

FSeries CyclicAlgebra::f_from_k(const KSeries& c) const { return FSeries::constant(c, p_); }

std::string CyclicAlgebra::str() const {
    return "cyclic algebra: p=" + std::to_string(p_) + ", s=" + std::to_string(s_) +
           ", alpha=" + alpha_.str() + ", window=" + prec_.str();
}

KElement::KElement(AlgebraRef alg, std::vector<FSeries> coords)
    : alg_(std::move(alg)), co_(std::move(coords)) {
    if (int64_t(co_.size()) != alg_->s())
        throw std::invalid_argument("coordinate count does not match algebra degree");
    for (const auto& c : co_)
        if (c.p() != alg_->p()) throw FieldMismatchError("coordinate over the wrong field");
}

KElement KElement::zero(const AlgebraRef& alg) {
    return KElement(alg, std::vector<FSeries>(size_t(alg->s()), alg->f_zero()));
}

KElement KElement::one(const AlgebraRef& alg) { return from_f(alg, alg->f_one()); }

KElement KElement::theta(const AlgebraRef& alg) { return theta_pow(alg, 1); }

KElement KElement::theta_pow(const AlgebraRef& alg, int64_t i) {
    if (i < 0 || i >= alg->s()) throw std::invalid_argument("basis exponent out of range");
    std::vector<FSeries> co(size_t(alg->s()), alg->f_zero());
    co[size_t(i)] = alg->f_one();
    return KElement(alg, std::move(co));
}

KElement KElement::from_f(const AlgebraRef& alg, FSeries c) {
    std::vector<FSeries> co(size_t(alg->s()), alg->f_zero());
    co[0] = std::move(c);
    return KElement(alg, std::move(co));
}

bool KElement::is_zero() const {
    for (const auto& c : co_)
        if (!c.is_zero()) return false;
    return true;
}

bool KElement::is_exact() const {
    for (const auto& c : co_)
        if (!c.is_exact()) return false;
    return true;
}

void KElement::check_same(const KElement& o) const {
    if (alg_.get() != o.alg_.get()) throw FieldMismatchError("elements of different algebras");
}

KElement operator+(const KElement& a, const KElement& b) {
    a.check_same(b);
    std::vector<FSeries> co;
    co.reserve(a.co_.size());
    for (size_t i = 0; i < a.co_.size(); ++i) co.push_back(a.co_[i] + b.co_[i]);
    return KElement(a.alg_, std::move(co));
}

KElement operator-(const KElement& a, const KElement& b) { return a + (-b); }

KElement KElement::operator-() const {
    std::vector<FSeries> co;
    co.reserve(co_.size());
    for (const auto& c : co_) co.push_back(-c);
    return KElement(alg_, std::move(co));
}

KElement operator*(const KElement& a, const KElement& b) {
    a.check_same(b);
    const int64_t s = a.alg_->s();
    const FSeries& t = a.alg_->radicand();
    std::vector<FSeries> out(size_t(s), a.alg_->f_zero());
    for (int64_t i = 0; i < s; ++i) {
        for (int64_t j = 0; j < s; ++j) {
            FSeries prod = a.co_[size_t(i)] * b.co_[size_t(j)];
            int64_t k = i + j;
            if (k >= s)
                out[size_t(k - s)] = out[size_t(k - s)] + prod * t;
            else
                out[size_t(k)] = out[size_t(k)] + prod;
        }
    }
    return KElement(a.alg_, std::move(out));
}

bool operator==(const KElement& a, const KElement& b) {
    if (a.alg_.get() != b.alg_.get()) return false;
    for (size_t i = 0; i < a.co_.size(); ++i)
        if (!(a.co_[i] == b.co_[i])) return false;
    return true;
}

KElement KElement::sigma() const { return sigma_pow(1); }

KElement KElement::sigma_pow(int64_t e) const {
    const int64_t s = alg_->s();
    e %= s;
    if (e < 0) e += s;
    if (e == 0) return *this;
    std::vector<FSeries> co;
    co.reserve(co_.size());
    for (int64_t i = 0; i < s; ++i) {
        const FqElement& w = alg_->omega_pow_[size_t((i * e) % s)];
        co.push_back(co_[size_t(i)].scaled(KSeries::constant(w, alg_->p())));
    }
    return KElement(alg_, std::move(co));
}

KElement KElement::conjugate_product() const {
    KElement acc = sigma_pow(1);
    for (int64_t e = 2; e < alg_->s(); ++e) acc = acc * sigma_pow(e);
    return acc;
}

FSeries KElement::norm() const {
    const FSeries& t = alg_->radicand();
    if (alg_->s() == 2) {
        const FSeries& a = co_[0];
        const FSeries& b = co_[1];
        return a * a - b * b * t;
    }
    const FSeries& a = co_[0];
    const FSeries& b = co_[1];
    const FSeries& c = co_[2];
    return a * a * a + b * b * b * t + c * c * c * t * t +
           alg_->f_scalar(-3) * a * b * c * t;
}

FSeries KElement::norm_via_conjugates() const {
    KElement full = (*this) * conjugate_product();
    for (size_t i = 1; i < full.co_.size(); ++i)
        if (!full.co_[i].is_zero())
            throw std::logic_error("conjugate product left the base field");
    return full.co_[0];
}

KElement KElement::inverse() const {
    if (is_zero()) {
        if (is_exact()) throw ZeroSeriesError("inverse of exact zero field element");
        throw PrecisionError("element is zero at available precision");
    }
    KElement cp = conjugate_product();
    KElement full = (*this) * cp;
    const FSeries& n = full.co_[0];
    if (n.is_zero()) {
        if (n.is_exact()) throw std::logic_error("exact nonzero element with zero norm");
        throw PrecisionError("norm vanishes at available precision");
    }
    return cp.scaled(n.invert());
}

KElement KElement::scaled(const FSeries& c) const {
    std::vector<FSeries> co;
    co.reserve(co_.size());
    for (const auto& x : co_) co.push_back(x * c);
    return KElement(alg_, std::move(co));
}

KElement KElement::truncated(const Exponent& P) const {
    std::vector<FSeries> co;
    co.reserve(co_.size());
    for (const auto& x : co_) co.push_back(x.truncated(P));
    return KElement(alg_, std::move(co));
}

bool KElement::agrees_with(const KElement& o) const {
    if (alg_.get() != o.alg_.get()) return false;
    for (size_t i = 0; i < co_.size(); ++i)
        if (!co_[i].agrees_with(o.co_[i])) return false;
    return true;
}

std::string KElement::str() const {
    std::string out;
    for (size_t i = 0; i < co_.size(); ++i) {
        if (co_[i].is_zero() && co_[i].is_exact()) continue;
        if (!out.empty()) out += " + ";
        out += "(" + co_[i].str() + ")";
        if (i == 1) out += "*th";
        if (i > 1) out += "*th^" + std::to_string(i);
    }
    return out.empty() ? "0" : out;
}

DElement::DElement(AlgebraRef alg, std::vector<KElement> coords)
    : alg_(std::move(alg)), co_(std::move(coords)) {
    if (int64_t(co_.size()) != alg_->s())
        throw std::invalid_argument("coordinate count does not match algebra degree");
    for (const auto& c : co_)
        if (c.algebra().get() != alg_.get())
            throw FieldMismatchError("coordinate from a different algebra");
}

DElement DElement::zero(const AlgebraRef& alg) {
    return DElement(alg, std::vector<KElement>(size_t(alg->s()), KElement::zero(alg)));
}

DElement DElement::one(const AlgebraRef& alg) { return from_k(KElement::one(alg)); }

DElement DElement::x(const AlgebraRef& alg) { return basis(alg, 0, 1); }

DElement DElement::from_k(KElement c) {
    AlgebraRef alg = c.algebra();
    std::vector<KElement> co(size_t(alg->s()), KElement::zero(alg));
    co[0] = std::move(c);
    return DElement(alg, std::move(co));
}

DElement DElement::from_f(const AlgebraRef& alg, FSeries c) {
    return from_k(KElement::from_f(alg, std::move(c)));
}

DElement DElement::basis(const AlgebraRef& alg, int64_t i, int64_t j) {
    if (j < 0 || j >= alg->s()) throw std::invalid_argument("basis exponent out of range");
    std::vector<KElement> co(size_t(alg->s()), KElement::zero(alg));
    co[size_t(j)] = KElement::theta_pow(alg, i);
    return DElement(alg, std::move(co));
}

bool DElement::is_zero() const {
    for (const auto& c : co_)
        if (!c.is_zero()) return false;
    return true;
}

bool DElement::is_exact() const {
    for (const auto& c : co_)
        if (!c.is_exact()) return false;
    return true;
}

void DElement::check_same(const DElement& o) const {
    if (alg_.get() != o.alg_.get()) throw FieldMismatchError("elements of different algebras");
}

DElement operator+(const DElement& a, const DElement& b) {
    a.check_same(b);
    std::vector<KElement> co;
    co.reserve(a.co_.size());
    for (size_t i = 0; i < a.co_.size(); ++i) co.push_back(a.co_[i] + b.co_[i]);
    return DElement(a.alg_, std::move(co));
}

DElement operator-(const DElement& a, const DElement& b) { return a + (-b); }

DElement DElement::operator-() const {
    std::vector<KElement> co;
    co.reserve(co_.size());
    for (const auto& c : co_) co.push_back(-c);
    return DElement(alg_, std::move(co));
}

DElement operator*(const DElement& a, const DElement& b) {
    a.check_same(b);
    const int64_t s = a.alg_->s();
    std::vector<KElement> out(size_t(s), KElement::zero(a.alg_));
    for (int64_t j = 0; j < s; ++j) {
        const KElement& aj = a.co_[size_t(j)];
        if (aj.is_zero() && aj.is_exact()) continue;
        for (int64_t l = 0; l < s; ++l) {
            KElement w = aj * b.co_[size_t(l)].sigma_pow(j);
            int64_t idx = j + l;
            if (idx >= s) {
                w = w.scaled(a.alg_->alpha());
                idx -= s;
            }
            out[size_t(idx)] = out[size_t(idx)] + w;
        }
    }
    return DElement(a.alg_, std::move(out));
}

bool operator==(const DElement& a, const DElement& b) {
    if (a.alg_.get() != b.alg_.get()) return false;
    for (size_t i = 0; i < a.co_.size(); ++i)
        if (!(a.co_[i] == b.co_[i])) return false;
    return true;
}

DElement DElement::pow(uint64_t e) const {
    DElement r = one(alg_);
    DElement b = *this;
    while (e > 0) {
        if (e & 1) r = r * b;
        e >>= 1;
        if (e > 0) b = b * b;
    }
    return r;
}

DElement DElement::inverse() const { return d_inv(*this); }

DElement DElement::scaled_k(const KElement& c) const {
    std::vector<KElement> co;
    co.reserve(co_.size());
    for (const auto& x : co_) co.push_back(c * x);
    return DElement(alg_, std::move(co));
}

DElement DElement::scaled_f(const FSeries& c) const {
    return scaled_k(KElement::from_f(alg_, c));
}

DElement DElement::truncated(const Exponent& P) const {
    std::vector<KElement> co;
    co.reserve(co_.size());
    for (const auto& x : co_) co.push_back(x.truncated(P));
    return DElement(alg_, std::move(co));
}

bool DElement::agrees_with(const DElement& o) const {
    if (alg_.get() != o.alg_.get()) return false;
    for (size_t i = 0; i < co_.size(); ++i)
        if (!co_[i].agrees_with(o.co_[i])) return false;
    return true;
}

std::vector<FSeries> DElement::flatten() const {
    const int64_t s = alg_->s();
    std::vector<FSeries> out;
    out.reserve(size_t(s * s));
    for (int64_t j = 0; j < s; ++j)
        for (int64_t i = 0; i < s; ++i) out.push_back(co_[size_t(j)].coords()[size_t(i)]);
    return out;
}

std::string DElement::str() const {
    std::string out;
    for (size_t j = 0; j < co_.size(); ++j) {
        if (co_[j].is_zero() && co_[j].is_exact()) continue;
        if (!out.empty()) out += " + ";
        out += "[" + co_[j].str() + "]";
        if (j == 1) out += "*X";
        if (j > 1) out += "*X^" + std::to_string(j);
    }
    return out.empty() ? "0" : out;
}

KElement k_mul(const KElement& a, const KElement& b) { return a * b; }
KElement k_sigma(const KElement& a) { return a.sigma(); }
FSeries norm(const KElement& a) { return a.norm(); }
DElement d_mul(const DElement& a, const DElement& b) { return a * b; }

namespace {

// Gauss-Jordan over F. Pivots come only from entries whose valuation is
// decided by the stored data, least valuation first; a column with no such
// entry means the windows have eaten the system. Elimination skips an entry
// only when it is exactly zero, so ghost windows stay in the bookkeeping.
std::vector<FSeries> solve_fseries(std::vector<std::vector<FSeries>> M,
                                   std::vector<FSeries> rhs) {
    const size_t n = M.size();
    for (size_t c = 0; c < n; ++c) {
        size_t best = SIZE_MAX;
        std::optional<Exponent> best_v;
        for (size_t r = c; r < n; ++r) {
            std::optional<Exponent> dv = M[r][c].determined_valuation();
            if (!dv) continue;
            if (!best_v || *dv < *best_v) {
                best = r;
                best_v = dv;
            }
        }
        if (best == SIZE_MAX)
            throw PrecisionError("linear solve pivot vanished at available precision");
        std::swap(M[best], M[c]);
        std::swap(rhs[best], rhs[c]);
        FSeries pinv = M[c][c].invert();
        for (size_t j = c; j < n; ++j) M[c][j] = M[c][j] * pinv;
        rhs[c] = rhs[c] * pinv;
        for (size_t r = 0; r < n; ++r) {
            if (r == c || M[r][c].is_exact_zero()) continue;
            FSeries f = M[r][c];
            for (size_t j = c; j < n; ++j) M[r][j] = M[r][j] - f * M[c][j];
            rhs[r] = rhs[r] - f * rhs[c];
        }
    }
    return rhs;
}

}  // namespace

DElement d_inv(const DElement& u) {
    const AlgebraRef& alg = u.algebra();
    if (u.is_zero()) {
        if (u.is_exact()) throw ZeroSeriesError("inverse of exact zero algebra element");
        throw PrecisionError("element is zero at available precision");
    }
    if (alg->s() == 2) {
        const KElement& a = u.coords()[0];
        const KElement& b = u.coords()[1];
        FSeries dn = a.norm() - alg->alpha() * b.norm();
        if (dn.is_zero()) {
            if (!dn.is_exact())
                throw PrecisionError("inverse denominator vanishes at available precision");
            throw std::logic_error("exact nonzero element with zero reduced norm");
        }
        FSeries dninv = dn.invert();
        return DElement(alg, {a.sigma().scaled(dninv), (-b).scaled(dninv)});
    }
    const int64_t s = alg->s();
    const size_t n = size_t(s * s);
    std::vector<std::vector<FSeries>> M(n, std::vector<FSeries>(n, alg->f_zero()));
    for (int64_t j = 0; j < s; ++j) {
        for (int64_t i = 0; i < s; ++i) {
            std::vector<FSeries> col = (u * DElement::basis(alg, i, j)).flatten();
            for (size_t r = 0; r < n; ++r) M[r][size_t(j * s + i)] = col[r];
        }
    }
    std::vector<FSeries> sol = solve_fseries(std::move(M), DElement::one(alg).flatten());
    std::vector<KElement> co;
    co.reserve(size_t(s));
    for (int64_t j = 0; j < s; ++j) {
        std::vector<FSeries> kc(sol.begin() + j * s, sol.begin() + (j + 1) * s);
        co.push_back(KElement(alg, std::move(kc)));
    }
    return DElement(alg, std::move(co));
}

bool metro_identity_check(const DElement& a) {
    const AlgebraRef& alg = a.algebra();
    const uint64_t p = uint64_t(alg->p());
    DElement shifted = a + DElement::one(alg);
    DElement lhs = shifted.pow(p) - shifted;
    DElement rhs = a.pow(p) - a;
    return lhs.agrees_with(rhs);
}

int64_t exact_rank(std::vector<std::vector<FSeries>> M) {
    if (M.empty()) return 0;
    const size_t rows = M.size();
    const size_t cols = M[0].size();
    for (const auto& row : M) {
        if (row.size() != cols) throw std::invalid_argument("ragged matrix");
        for (const auto& e : row)
            if (!e.is_exact()) throw PrecisionError("exact rank requires exact entries");
    }
    size_t rank = 0;
    for (size_t c = 0; c < cols && rank < rows; ++c) {
        size_t piv = SIZE_MAX;
        for (size_t r = rank; r < rows; ++r) {
            if (!M[r][c].is_zero()) {
                piv = r;
                break;
            }
        }
        if (piv == SIZE_MAX) continue;
        std::swap(M[piv], M[rank]);
        for (size_t r = rank + 1; r < rows; ++r) {
            if (M[r][c].is_zero()) continue;
            FSeries f = M[r][c];
            for (size_t j = c; j < cols; ++j) M[r][j] = M[r][j] * M[rank][c] - M[rank][j] * f;
        }
        ++rank;
    }
    return int64_t(rank);
}

int64_t centralizer_dimension(const DElement& a) {
    const AlgebraRef& alg = a.algebra();
    if (!a.is_exact()) throw PrecisionError("centralizer dimension needs exact coordinates");
    const int64_t s = alg->s();
    const size_t n = size_t(s * s);
    std::vector<std::vector<FSeries>> M(n, std::vector<FSeries>(n, alg->f_zero()));
    for (int64_t j = 0; j < s; ++j) {
        for (int64_t i = 0; i < s; ++i) {
            DElement e = DElement::basis(alg, i, j);
            std::vector<FSeries> col = (e * a - a * e).flatten();
            for (size_t r = 0; r < n; ++r) M[r][size_t(j * s + i)] = col[r];
        }
    }
    return int64_t(n) - exact_rank(std::move(M));
}

int64_t minimal_polynomial_degree(const DElement& a) {
    const AlgebraRef& alg = a.algebra();
    if (!a.is_exact()) throw PrecisionError("minimal polynomial needs exact coordinates");
    const size_t n = size_t(alg->s() * alg->s());
    std::vector<std::vector<FSeries>> cols;  // coordinates of a^0, a^1, ...
    DElement pw = DElement::one(alg);
    cols.push_back(pw.flatten());
    for (int64_t d = 1; d <= int64_t(n); ++d) {
        pw = pw * a;
        cols.push_back(pw.flatten());
        std::vector<std::vector<FSeries>> M(n, std::vector<FSeries>(cols.size(), alg->f_zero()));
        for (size_t c = 0; c < cols.size(); ++c)
            for (size_t r = 0; r < n; ++r) M[r][c] = cols[c][r];
        if (exact_rank(std::move(M)) < int64_t(cols.size())) return d;
    }
    throw std::logic_error("no minimal polynomial within the algebra dimension");
}

namespace {

FqElement random_tower_coeff(int64_t p, std::mt19937_64& rng) {
    auto f = get_field(p, rnd_range(rng, 1, 2));
    for (;;) {
        FqElement x = FqElement::element_at(f, rng() % f->size());
        if (!x.is_zero()) return x;
    }
}

KSeries random_k_series(int64_t p, std::mt19937_64& rng, int max_terms) {
    for (;;) {
        std::vector<KSeries::Term> ts;
        int nt = int(rnd_range(rng, 1, max_terms));
        for (int i = 0; i < nt; ++i)
            ts.push_back({Exponent(p, rnd_range(rng, -4, 4), rnd_range(rng, 0, 1)),
                          random_tower_coeff(p, rng)});
        KSeries out = KSeries::from_terms(FqElement::zero(get_field(p, 1)), p, std::move(ts));
        if (!out.is_zero()) return out;
    }
}

}  // namespace

FSeries random_f_series(const AlgebraRef& alg, std::mt19937_64& rng, int max_terms,
                        bool exact) {
    const int64_t p = alg->p();
    std::vector<FSeries::Term> ts;
    int nt = int(rnd_range(rng, 0, max_terms));
    for (int i = 0; i < nt; ++i)
        ts.push_back({Exponent(p, rnd_range(rng, -4, 4), rnd_range(rng, 0, 1)),
                      random_k_series(p, rng, 3)});
    FSeries out = FSeries::from_terms(alg->k_zero(), p, std::move(ts));
    if (!exact) out = out.truncated(alg->precision());
    return out;
}

KElement random_k_element(const AlgebraRef& alg, std::mt19937_64& rng, int max_terms,
                          bool exact) {
    std::vector<FSeries> co;
    co.reserve(size_t(alg->s()));
    for (int64_t i = 0; i < alg->s(); ++i)
        co.push_back(random_f_series(alg, rng, max_terms, exact));
    return KElement(alg, std::move(co));
}

DElement random_d_element(const AlgebraRef& alg, std::mt19937_64& rng, int max_terms,
                          bool exact) {
    std::vector<KElement> co;
    co.reserve(size_t(alg->s()));
    for (int64_t j = 0; j < alg->s(); ++j)
        co.push_back(random_k_element(alg, rng, max_terms, exact));
    return DElement(alg, std::move(co));
}

DElement random_nonzero_d(const AlgebraRef& alg, std::mt19937_64& rng, int max_terms,
                          bool exact) {
    for (;;) {
        DElement u = random_d_element(alg, rng, max_terms, exact);
        if (!u.is_zero()) return u;
    }
}

ObstructionReport norm_obstruction_certify(const AlgebraRef& alg, int64_t samples,
                                           uint64_t seed) {
    if (!alg->standard_construction())
        throw std::invalid_argument("certifier requires the standard construction with alpha = x");
    const int64_t p = alg->p();
    const int64_t s = alg->s();
    std::mt19937_64 rng(seed);
    ObstructionReport rep;
    rep.samples = samples;
    rep.seed = seed;
    rep.class_histogram.assign(size_t(s), 0);
    for (int64_t it = 0; it < samples; ++it) {
        std::vector<FSeries> comp;
        for (;;) {
            comp.clear();
            bool any = false;
            for (int64_t i = 0; i < s; ++i) {
                comp.push_back(random_f_series(alg, rng, 3, false));
                any = any || !comp.back().is_zero();
            }
            if (any) break;
        }
        const std::string tag = "sample " + std::to_string(it) + ": ";

        // component i contributes candidate exponent s*v_i + i, residue i mod s
        std::optional<Exponent> expected;
        int64_t cls = -1;
        bool all_present = true;
        Exponent val_sum(p, 0);
        for (int64_t i = 0; i < s; ++i) {
            if (comp[size_t(i)].is_zero()) {
                all_present = false;
                continue;
            }
            const Exponent& v = comp[size_t(i)].valuation();
            val_sum = val_sum + v;
            Exponent cand = v.scaled(s) + Exponent(p, i);
            if (!expected || cand < *expected) {
                expected = cand;
                cls = i;
            }
        }
        if (s == 3 && all_present) {
            Exponent cross = val_sum + Exponent(p, 1);
            if (!(*expected < cross))
                rep.violations.push_back(tag + "cross term not dominated: min=" +
                                         expected->str() + " cross=" + cross.str());
        }

        FSeries N = KElement(alg, comp).norm();
        if (N.is_zero()) {
            rep.violations.push_back(tag + "norm vanished below the window");
            continue;
        }
        const Exponent& got = N.valuation();
        if (!(got == *expected)) {
            rep.violations.push_back(tag + "leading exponent " + got.str() +
                                     " != predicted " + expected->str());
            continue;
        }
        int64_t got_cls = coset_mod(got, s);
        if (got_cls != cls) {
            rep.violations.push_back(tag + "coset class " + std::to_string(got_cls) +
                                     " != predicted " + std::to_string(cls));
            continue;
        }
        rep.class_histogram[size_t(got_cls)]++;
        if (N.agrees_with(alg->alpha()))
            rep.violations.push_back(tag + "norm agrees with alpha");
    }
    return rep;
}

}  // namespace skewlab::cyclic
