#include "skewlab/fq.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <tuple>

namespace skewlab::fields {

namespace {

// Polynomials over F_p as little-endian int64 vectors, no leading zeros.
using Poly = std::vector<int64_t>;

constexpr uint64_t kScanBound = uint64_t{1} << 22;

int64_t mod_p(int64_t a, int64_t p) {
    int64_t r = a % p;
    return r < 0 ? r + p : r;
}

int64_t mod_inv_scalar(int64_t a, int64_t p) {
    // extended Euclid on integers
    int64_t t = 0, newt = 1, r = p, newr = mod_p(a, p);
    while (newr != 0) {
        int64_t q = r / newr;
        std::tie(t, newt) = std::make_pair(newt, t - q * newt);
        std::tie(r, newr) = std::make_pair(newr, r - q * newr);
    }
    if (r != 1) throw std::domain_error("not invertible mod p");
    return mod_p(t, p);
}

Poly trim(Poly a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
    return a;
}

int64_t pdeg(const Poly& a) { return static_cast<int64_t>(a.size()) - 1; }

Poly psub(const Poly& a, const Poly& b, int64_t p) {
    Poly r(std::max(a.size(), b.size()), 0);
    for (size_t i = 0; i < r.size(); ++i) {
        int64_t v = 0;
        if (i < a.size()) v += a[i];
        if (i < b.size()) v -= b[i];
        r[i] = mod_p(v, p);
    }
    return trim(std::move(r));
}

Poly pmul(const Poly& a, const Poly& b, int64_t p) {
    if (a.empty() || b.empty()) return {};
    Poly r(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (size_t j = 0; j < b.size(); ++j) r[i + j] = mod_p(r[i + j] + a[i] * b[j], p);
    }
    return trim(std::move(r));
}

Poly pmod(Poly a, const Poly& f, int64_t p) {
    a = trim(std::move(a));
    int64_t df = pdeg(f);
    int64_t lead_inv = mod_inv_scalar(f.back(), p);
    while (pdeg(a) >= df) {
        int64_t shift = pdeg(a) - df;
        int64_t c = mod_p(a.back() * lead_inv, p);
        for (int64_t i = 0; i <= df; ++i)
            a[shift + i] = mod_p(a[shift + i] - c * f[i], p);
        a = trim(std::move(a));
    }
    return a;
}

Poly pmulmod(const Poly& a, const Poly& b, const Poly& f, int64_t p) {
    return pmod(pmul(a, b, p), f, p);
}

// h^e mod f, binary exponentiation.
Poly ppowmod(Poly h, uint64_t e, const Poly& f, int64_t p) {
    Poly r = {1};
    h = pmod(std::move(h), f, p);
    while (e > 0) {
        if (e & 1) r = pmulmod(r, h, f, p);
        h = pmulmod(h, h, f, p);
        e >>= 1;
    }
    return r;
}

Poly pgcd(Poly a, Poly b, int64_t p) {
    a = trim(std::move(a));
    b = trim(std::move(b));
    while (!b.empty()) {
        Poly r = pmod(a, b, p);
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

// Inverse of a modulo f. Assumes gcd(a, f) = 1.
Poly pinvmod(const Poly& a, const Poly& f, int64_t p) {
    Poly r0 = f, r1 = pmod(a, f, p);
    Poly t0 = {}, t1 = {1};
    while (!r1.empty()) {
        // quotient of r0 by r1
        Poly q;
        {
            Poly num = r0;
            int64_t d1 = pdeg(r1);
            int64_t lead_inv = mod_inv_scalar(r1.back(), p);
            q.assign(std::max<int64_t>(pdeg(num) - d1 + 1, 0), 0);
            while (pdeg(num) >= d1) {
                int64_t shift = pdeg(num) - d1;
                int64_t c = mod_p(num.back() * lead_inv, p);
                q[shift] = c;
                for (int64_t i = 0; i <= d1; ++i)
                    num[shift + i] = mod_p(num[shift + i] - c * r1[i], p);
                num = trim(std::move(num));
            }
            q = trim(std::move(q));
            r0 = std::move(r1);
            r1 = std::move(num);
        }
        Poly tn = psub(t0, pmul(q, t1, p), p);
        t0 = std::move(t1);
        t1 = std::move(tn);
    }
    if (pdeg(r0) != 0) throw std::domain_error("element not invertible");
    int64_t c = mod_inv_scalar(r0[0], p);
    Poly out = t0;
    for (auto& v : out) v = mod_p(v * c, p);
    return trim(std::move(out));
}

std::vector<int64_t> prime_factors(int64_t n) {
    std::vector<int64_t> out;
    for (int64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            out.push_back(d);
            while (n % d == 0) n /= d;
        }
    }
    if (n > 1) out.push_back(n);
    return out;
}

bool poly_irreducible(const Poly& f, int64_t p) {
    int64_t n = pdeg(f);
    if (n <= 0) return false;
    if (n == 1) return true;
    // z^(p^k) mod f for k = 1..n by iterated powering to p
    Poly z = {0, 1};
    std::vector<Poly> frob_powers;  // frob_powers[k-1] = z^(p^k) mod f
    Poly cur = z;
    for (int64_t k = 1; k <= n; ++k) {
        cur = ppowmod(cur, static_cast<uint64_t>(p), f, p);
        frob_powers.push_back(cur);
    }
    if (trim(psub(frob_powers[n - 1], z, p)) != Poly{}) return false;
    for (int64_t l : prime_factors(n)) {
        const Poly& h = frob_powers[n / l - 1];
        Poly g = pgcd(psub(h, z, p), f, p);
        if (pdeg(g) != 0) return false;
    }
    return true;
}

Poly lex_smallest_irreducible(int64_t p, int64_t n) {
    uint64_t total = 1;
    for (int64_t i = 0; i < n; ++i) {
        total *= static_cast<uint64_t>(p);
        if (total > kScanBound) throw BoundExceededError("descriptor search bound exceeded");
    }
    std::vector<int64_t> c(n, 0);  // (c_0, ..., c_{n-1})
    for (uint64_t it = 0; it < total; ++it) {
        Poly f(c.begin(), c.end());
        f.push_back(1);
        if (poly_irreducible(f, p)) return f;
        // lex successor: bump least significant position c_{n-1}
        for (int64_t i = n - 1; i >= 0; --i) {
            if (++c[i] < p) break;
            c[i] = 0;
        }
    }
    throw std::logic_error("no irreducible polynomial found");  // unreachable
}

// Gaussian solve A x = b over F_p. A is rows x cols; returns nullopt when
// inconsistent; free variables are set to zero (deterministic).
std::optional<std::vector<int64_t>> solve_mod_p(std::vector<std::vector<int64_t>> A,
                                                std::vector<int64_t> b, int64_t p) {
    size_t rows = A.size();
    size_t cols = rows == 0 ? 0 : A[0].size();
    std::vector<int64_t> pivot_col_of_row(rows, -1);
    size_t r = 0;
    for (size_t c = 0; c < cols && r < rows; ++c) {
        size_t pr = r;
        while (pr < rows && A[pr][c] == 0) ++pr;
        if (pr == rows) continue;
        std::swap(A[pr], A[r]);
        std::swap(b[pr], b[r]);
        int64_t inv = mod_inv_scalar(A[r][c], p);
        for (size_t j = c; j < cols; ++j) A[r][j] = mod_p(A[r][j] * inv, p);
        b[r] = mod_p(b[r] * inv, p);
        for (size_t i = 0; i < rows; ++i) {
            if (i == r || A[i][c] == 0) continue;
            int64_t m = A[i][c];
            for (size_t j = c; j < cols; ++j) A[i][j] = mod_p(A[i][j] - m * A[r][j], p);
            b[i] = mod_p(b[i] - m * b[r], p);
        }
        pivot_col_of_row[r] = static_cast<int64_t>(c);
        ++r;
    }
    for (size_t i = r; i < rows; ++i)
        if (b[i] != 0) return std::nullopt;
    std::vector<int64_t> x(cols, 0);
    for (size_t i = 0; i < r; ++i) x[pivot_col_of_row[i]] = b[i];
    return x;
}

// ---- registries ----

struct Embedding {
    // basis_images[j] = coordinates in F_{p^n} of the image of g_m^j, j < m.
    std::vector<std::vector<int64_t>> basis_images;
};

std::recursive_mutex& registry_mutex() {
    static std::recursive_mutex m;
    return m;
}

std::map<std::pair<int64_t, int64_t>, FieldRef>& field_cache() {
    static std::map<std::pair<int64_t, int64_t>, FieldRef> c;
    return c;
}

std::map<std::tuple<int64_t, int64_t, int64_t>, Embedding>& embedding_cache() {
    static std::map<std::tuple<int64_t, int64_t, int64_t>, Embedding> c;
    return c;
}

std::vector<int64_t> embed_via_powers(const std::vector<int64_t>& coords,
                                      const std::vector<std::vector<int64_t>>& powers,
                                      int64_t p, size_t n) {
    std::vector<int64_t> out(n, 0);
    for (size_t j = 0; j < coords.size(); ++j) {
        if (coords[j] == 0) continue;
        for (size_t i = 0; i < n; ++i)
            out[i] = mod_p(out[i] + coords[j] * powers[j][i], p);
    }
    return out;
}

const Embedding& get_embedding(int64_t p, int64_t m, int64_t n);

// Powers 1, r, ..., r^(m-1) of an element r of F_{p^n}, as coordinate rows.
std::vector<std::vector<int64_t>> power_rows(const FqElement& r, int64_t m) {
    std::vector<std::vector<int64_t>> rows;
    FqElement cur = r.one_like();
    for (int64_t j = 0; j < m; ++j) {
        rows.push_back(cur.coords());
        if (j + 1 < m) cur = cur * r;
    }
    return rows;
}

const Embedding& compute_embedding(int64_t p, int64_t m, int64_t n) {
    FieldRef Fm = get_field(p, m);
    FieldRef Fn = get_field(p, n);
    Embedding emb;
    if (m == n) {
        for (int64_t j = 0; j < m; ++j) {
            std::vector<int64_t> v(static_cast<size_t>(n), 0);
            v[static_cast<size_t>(j)] = 1;
            emb.basis_images.push_back(std::move(v));
        }
    } else {
        // Compatibility constraints come from the maximal proper divisors of
        // m: the chosen root must make every triangle d -> m -> n commute
        // with the already-cached d -> n. Smaller divisors then commute by
        // induction, since a homomorphism is pinned by the generator image.
        std::vector<int64_t> maximal_divisors;
        for (int64_t l : prime_factors(m)) {
            int64_t d = m / l;
            if (d > 1) maximal_divisors.push_back(d);
        }
        for (int64_t d : maximal_divisors) {
            get_embedding(p, d, m);
            get_embedding(p, d, n);
        }

        if (Fn->size() > kScanBound) throw BoundExceededError("embedding root scan bound exceeded");
        const Poly& fm = Fm->poly();
        std::optional<FqElement> root;
        for (uint64_t idx = 0; idx < Fn->size(); ++idx) {
            FqElement e = FqElement::element_at(Fn, idx);
            // Horner evaluation of fm at e
            FqElement acc = FqElement::zero(Fn);
            for (size_t i = fm.size(); i-- > 0;)
                acc = acc * e + FqElement::scalar(Fn, fm[i]);
            if (acc.is_zero()) {
                root = e;
                break;
            }
        }
        if (!root) throw std::logic_error("no root of subfield polynomial found");

        // All roots form one Frobenius orbit; pick the first compatible one.
        std::optional<FqElement> chosen;
        FqElement cand = *root;
        for (int64_t j = 0; j < m; ++j) {
            bool ok = true;
            std::vector<std::vector<int64_t>> cand_powers = power_rows(cand, m);
            for (int64_t d : maximal_divisors) {
                const Embedding& dm = get_embedding(p, d, m);
                const Embedding& dn = get_embedding(p, d, n);
                std::vector<int64_t> via =
                    embed_via_powers(dm.basis_images[1], cand_powers, p, static_cast<size_t>(n));
                if (via != dn.basis_images[1]) {
                    ok = false;
                    break;
                }
            }
            if (ok) {
                chosen = cand;
                break;
            }
            if (j + 1 < m) cand = cand.frobenius();
        }
        if (!chosen) throw std::logic_error("no compatible embedding root found");
        emb.basis_images = power_rows(*chosen, m);
    }
    auto [it, inserted] =
        embedding_cache().emplace(std::make_tuple(p, m, n), std::move(emb));
    (void)inserted;
    return it->second;
}

const Embedding& get_embedding(int64_t p, int64_t m, int64_t n) {
    std::lock_guard<std::recursive_mutex> lock(registry_mutex());
    auto key = std::make_tuple(p, m, n);
    auto it = embedding_cache().find(key);
    if (it != embedding_cache().end()) return it->second;
    return compute_embedding(p, m, n);
}

}  // namespace

bool is_prime(int64_t p) {
    if (p < 2) return false;
    for (int64_t d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

FieldDescriptor::FieldDescriptor(int64_t p, int64_t n, std::vector<int64_t> poly)
    : p_(p), n_(n), poly_(std::move(poly)) {
    if (!is_prime(p_)) throw std::invalid_argument("p is not prime");
    if (n_ < 1) throw std::invalid_argument("degree must be >= 1");
    if (static_cast<int64_t>(poly_.size()) != n_ + 1 || poly_.back() != 1)
        throw std::invalid_argument("defining polynomial must be monic of degree n");
    for (int64_t c : poly_)
        if (c < 0 || c >= p_) throw std::invalid_argument("coefficients must be reduced mod p");
}

uint64_t FieldDescriptor::size() const {
    uint64_t s = 1;
    for (int64_t i = 0; i < n_; ++i) {
        if (s > (uint64_t{1} << 62) / static_cast<uint64_t>(p_))
            throw BoundExceededError("field size exceeds 2^62");
        s *= static_cast<uint64_t>(p_);
    }
    return s;
}

FieldRef get_field(int64_t p, int64_t n) {
    std::lock_guard<std::recursive_mutex> lock(registry_mutex());
    auto key = std::make_pair(p, n);
    auto it = field_cache().find(key);
    if (it != field_cache().end()) return it->second;
    if (!is_prime(p)) throw std::invalid_argument("p is not prime");
    if (n < 1) throw std::invalid_argument("degree must be >= 1");
    Poly f = lex_smallest_irreducible(p, n);
    auto ref = std::make_shared<const FieldDescriptor>(p, n, std::move(f));
    field_cache().emplace(key, ref);
    return ref;
}

FqElement::FqElement(FieldRef field, std::vector<int64_t> coords)
    : field_(std::move(field)), coords_(std::move(coords)) {
    if (!field_) throw std::invalid_argument("null field descriptor");
    if (static_cast<int64_t>(coords_.size()) > field_->n())
        throw std::invalid_argument("coordinate vector longer than field degree");
    coords_.resize(static_cast<size_t>(field_->n()), 0);
    for (auto& c : coords_) c = mod_p(c, field_->p());
}

FqElement FqElement::zero(const FieldRef& f) { return FqElement(f, {}); }

FqElement FqElement::one(const FieldRef& f) { return FqElement(f, {1}); }

FqElement FqElement::scalar(const FieldRef& f, int64_t v) { return FqElement(f, {v}); }

FqElement FqElement::generator(const FieldRef& f) {
    if (f->n() == 1) return FqElement(f, {mod_p(-f->poly()[0], f->p())});
    return FqElement(f, {0, 1});
}

FqElement FqElement::element_at(const FieldRef& f, uint64_t index) {
    std::vector<int64_t> c(static_cast<size_t>(f->n()), 0);
    uint64_t p = static_cast<uint64_t>(f->p());
    for (auto& v : c) {
        v = static_cast<int64_t>(index % p);
        index /= p;
    }
    if (index != 0) throw std::invalid_argument("element index out of range");
    return FqElement(f, std::move(c));
}

int64_t FqElement::characteristic() const { return field_->p(); }

int64_t FqElement::degree() const { return field_->n(); }

bool FqElement::is_zero() const {
    return std::all_of(coords_.begin(), coords_.end(), [](int64_t c) { return c == 0; });
}

std::optional<int64_t> FqElement::as_scalar() const {
    for (size_t i = 1; i < coords_.size(); ++i)
        if (coords_[i] != 0) return std::nullopt;
    return coords_[0];
}

uint64_t FqElement::index() const {
    uint64_t idx = 0;
    uint64_t p = static_cast<uint64_t>(field_->p());
    for (size_t i = coords_.size(); i-- > 0;) idx = idx * p + static_cast<uint64_t>(coords_[i]);
    return idx;
}

FqElement FqElement::zero_like() const { return FqElement::zero(field_); }

FqElement FqElement::one_like() const { return FqElement::one(field_); }

namespace {

std::pair<FqElement, FqElement> promote_pair(const FqElement& a, const FqElement& b) {
    if (a.field().get() == b.field().get()) return {a, b};
    if (a.characteristic() != b.characteristic())
        throw FieldMismatchError("mixed characteristics");
    int64_t m = a.degree(), n = b.degree();
    int64_t l = std::lcm(m, n);
    FieldRef target = get_field(a.characteristic(), l);
    return {embed(a, target), embed(b, target)};
}

}  // namespace

FqElement operator+(const FqElement& a, const FqElement& b) {
    auto [x, y] = promote_pair(a, b);
    std::vector<int64_t> c(x.coords().size());
    for (size_t i = 0; i < c.size(); ++i) c[i] = mod_p(x.coords()[i] + y.coords()[i], x.characteristic());
    return FqElement(x.field(), std::move(c));
}

FqElement operator-(const FqElement& a, const FqElement& b) {
    auto [x, y] = promote_pair(a, b);
    std::vector<int64_t> c(x.coords().size());
    for (size_t i = 0; i < c.size(); ++i) c[i] = mod_p(x.coords()[i] - y.coords()[i], x.characteristic());
    return FqElement(x.field(), std::move(c));
}

FqElement operator*(const FqElement& a, const FqElement& b) {
    auto [x, y] = promote_pair(a, b);
    Poly prod = pmulmod(x.coords(), y.coords(), x.field()->poly(), x.characteristic());
    return FqElement(x.field(), std::move(prod));
}

FqElement FqElement::operator-() const {
    std::vector<int64_t> c(coords_.size());
    for (size_t i = 0; i < c.size(); ++i) c[i] = mod_p(-coords_[i], characteristic());
    return FqElement(field_, std::move(c));
}

FqElement FqElement::inverse() const {
    if (is_zero()) throw std::domain_error("division by zero in F_q");
    Poly inv = pinvmod(coords_, field_->poly(), characteristic());
    return FqElement(field_, std::move(inv));
}

FqElement FqElement::pow(int64_t e) const {
    if (e < 0) return inverse().pow(-e);
    Poly r = ppowmod(coords_, static_cast<uint64_t>(e), field_->poly(), characteristic());
    return FqElement(field_, std::move(r));
}

FqElement FqElement::frobenius() const { return pow(characteristic()); }

FqElement FqElement::frobenius_inverse() const {
    FqElement r = *this;
    for (int64_t i = 0; i + 1 < degree(); ++i) r = r.frobenius();
    return r;
}

bool operator==(const FqElement& a, const FqElement& b) {
    if (a.characteristic() != b.characteristic()) return false;
    auto [x, y] = promote_pair(a, b);
    return x.coords() == y.coords();
}

std::string FqElement::str() const {
    std::string s = "[";
    for (size_t i = 0; i < coords_.size(); ++i) {
        if (i > 0) s += ",";
        s += std::to_string(coords_[i]);
    }
    s += "]";
    return s;
}

FqElement frobenius(const FqElement& x) { return x.frobenius(); }

FqElement frobenius_inverse(const FqElement& x) { return x.frobenius_inverse(); }

FqElement embed(const FqElement& x, const FieldRef& target) {
    if (x.characteristic() != target->p()) throw FieldMismatchError("mixed characteristics");
    int64_t m = x.degree(), n = target->n();
    if (m == n) return FqElement(target, x.coords());
    if (n % m != 0) throw std::invalid_argument("source degree does not divide target degree");
    const Embedding& emb = get_embedding(x.characteristic(), m, n);
    std::vector<int64_t> out =
        embed_via_powers(x.coords(), emb.basis_images, x.characteristic(), static_cast<size_t>(n));
    return FqElement(target, std::move(out));
}

FqElement trace(const FqElement& x, int64_t m) {
    int64_t n = x.degree();
    if (m < 1 || n % m != 0) throw std::invalid_argument("trace target degree must divide n");
    FqElement acc = x;
    FqElement cur = x;
    for (int64_t i = 1; i < n / m; ++i) {
        for (int64_t j = 0; j < m; ++j) cur = cur.frobenius();
        acc = acc + cur;
    }
    FieldRef sub = get_field(x.characteristic(), m);
    if (m == n) return FqElement(sub, acc.coords());
    const Embedding& emb = get_embedding(x.characteristic(), m, n);
    // acc lies in the embedded subfield; recover its F_{p^m} coordinates.
    std::vector<std::vector<int64_t>> A(static_cast<size_t>(n),
                                        std::vector<int64_t>(static_cast<size_t>(m), 0));
    for (int64_t j = 0; j < m; ++j)
        for (int64_t i = 0; i < n; ++i) A[i][j] = emb.basis_images[j][i];
    auto sol = solve_mod_p(std::move(A), acc.coords(), x.characteristic());
    if (!sol) throw std::logic_error("trace value not in subfield");
    return FqElement(sub, std::move(*sol));
}

std::optional<FqElement> artin_schreier_solve(const FqElement& b) {
    const FieldRef& f = b.field();
    int64_t p = b.characteristic();
    size_t n = static_cast<size_t>(b.degree());
    // Matrix of y -> y^p - y in the power basis.
    std::vector<std::vector<int64_t>> A(n, std::vector<int64_t>(n, 0));
    for (size_t j = 0; j < n; ++j) {
        std::vector<int64_t> e(n, 0);
        e[j] = 1;
        FqElement basis(f, std::move(e));
        FqElement img = basis.frobenius() - basis;
        for (size_t i = 0; i < n; ++i) A[i][j] = img.coords()[i];
    }
    auto sol = solve_mod_p(std::move(A), b.coords(), p);
    if (!sol) return std::nullopt;
    return FqElement(f, std::move(*sol));
}

FqElement primitive_root_of_unity(int64_t p, int64_t q) {
    if (!is_prime(p)) throw std::invalid_argument("p is not prime");
    if (q < 1) throw std::invalid_argument("order must be positive");
    if (q == 1) return FqElement::one(get_field(p, 1));
    if (std::gcd(p, q) != 1)
        throw std::invalid_argument("order not coprime to characteristic: no such n configured");
    // smallest n with q | p^n - 1
    int64_t n = 0;
    uint64_t acc = 1;
    for (int64_t k = 1; k <= q; ++k) {
        acc = (acc * static_cast<uint64_t>(p)) % static_cast<uint64_t>(q);
        if (acc == 1) {
            n = k;
            break;
        }
    }
    if (n == 0) throw std::logic_error("multiplicative order not found");
    FieldRef f = get_field(p, n);
    uint64_t size = f->size();
    if (size > kScanBound)
        throw std::invalid_argument("ambient field for root of unity too large: no such n configured");
    uint64_t N = size - 1;
    std::vector<int64_t> ls = prime_factors(static_cast<int64_t>(N));
    // first multiplicative generator in enumeration order
    for (uint64_t idx = 1; idx < size; ++idx) {
        FqElement g = FqElement::element_at(f, idx);
        bool gen = true;
        for (int64_t l : ls) {
            if (g.pow(static_cast<int64_t>(N / static_cast<uint64_t>(l))) == FqElement::one(f)) {
                gen = false;
                break;
            }
        }
        if (gen) return g.pow(static_cast<int64_t>(N / static_cast<uint64_t>(q)));
    }
    throw std::logic_error("no multiplicative generator found");
}

FqElement parse_fq(const FieldRef& f, std::string_view text) {
    auto fail = [&]() { return std::invalid_argument("malformed F_q literal: " + std::string(text)); };
    size_t i = 0;
    auto skip_ws = [&]() { while (i < text.size() && text[i] == ' ') ++i; };
    skip_ws();
    if (i >= text.size() || text[i] != '[') throw fail();
    ++i;
    std::vector<int64_t> coords;
    skip_ws();
    if (i < text.size() && text[i] == ']') {
        ++i;
    } else {
        while (true) {
            skip_ws();
            bool neg = false;
            if (i < text.size() && (text[i] == '-' || text[i] == '+')) neg = text[i++] == '-';
            if (i >= text.size() || !isdigit(static_cast<unsigned char>(text[i]))) throw fail();
            int64_t v = 0;
            while (i < text.size() && isdigit(static_cast<unsigned char>(text[i])))
                v = v * 10 + (text[i++] - '0');
            coords.push_back(neg ? -v : v);
            skip_ws();
            if (i < text.size() && text[i] == ',') {
                ++i;
                continue;
            }
            if (i < text.size() && text[i] == ']') {
                ++i;
                break;
            }
            throw fail();
        }
    }
    skip_ws();
    if (i != text.size()) throw fail();
    return FqElement(f, std::move(coords));
}

}  // namespace skewlab::fields
