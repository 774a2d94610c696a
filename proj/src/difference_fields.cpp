#include "skewlab/difference_fields.hpp"

#include <stdexcept>

namespace skewlab::ore {

using fields::FieldRef;
using fields::FqElement;
using fields::FqPoly;
using fields::PerfElement;

namespace {

uint64_t rnd_below(std::mt19937_64& rng, uint64_t n) { return rng() % n; }

// Morphism laws on deterministic samples; a handle that fails them is a
// construction bug, not a data condition.
template <typename H>
void spot_check_sigma(const H& h, uint64_t seed) {
    std::mt19937_64 rng(seed);
    for (int i = 0; i < 8; ++i) {
        auto a = h.random(rng);
        auto b = h.random(rng);
        if (!(h.sigma(a + b) == h.sigma(a) + h.sigma(b)))
            throw std::logic_error("sigma is not additive on this handle");
        if (!(h.sigma(a * b) == h.sigma(a) * h.sigma(b)))
            throw std::logic_error("sigma is not multiplicative on this handle");
        if (!(h.sigma_inverse(h.sigma(a)) == a))
            throw std::logic_error("sigma_inverse does not invert sigma");
    }
    if (!(h.sigma(h.one()) == h.one()))
        throw std::logic_error("sigma does not fix the identity");
}

}  // namespace

FqFrobeniusField::FqFrobeniusField(FieldRef field) : field_(std::move(field)) {
    if (!field_) throw std::invalid_argument("null field descriptor");
    spot_check_sigma(*this, 0x5eedu ^ uint64_t(field_->p() * 31 + field_->n()));
}

FqElement FqFrobeniusField::zero() const { return FqElement::zero(field_); }
FqElement FqFrobeniusField::one() const { return FqElement::one(field_); }
FqElement FqFrobeniusField::scalar(int64_t v) const { return FqElement::scalar(field_, v); }
FqElement FqFrobeniusField::sigma(const FqElement& x) const { return x.frobenius(); }
FqElement FqFrobeniusField::sigma_inverse(const FqElement& x) const {
    return x.frobenius_inverse();
}

FqElement FqFrobeniusField::element_at(uint64_t i) const {
    return FqElement::element_at(field_, i);
}

FqElement FqFrobeniusField::random(std::mt19937_64& rng) const {
    return element_at(rnd_below(rng, field_->size()));
}

FqElement FqFrobeniusField::random_nonzero(std::mt19937_64& rng) const {
    return element_at(1 + rnd_below(rng, field_->size() - 1));
}

FqElement FqFrobeniusField::parse(std::string_view text) const {
    return fields::parse_fq(field_, text);
}

PerfectClosureField::PerfectClosureField(FieldRef coeff_field)
    : coeff_field_(std::move(coeff_field)) {
    if (!coeff_field_) throw std::invalid_argument("null coefficient field descriptor");
    spot_check_sigma(*this, 0xc105u ^ uint64_t(coeff_field_->p() * 31 + coeff_field_->n()));
}

PerfElement PerfectClosureField::zero() const { return PerfElement::zero(coeff_field_); }
PerfElement PerfectClosureField::one() const { return PerfElement::one(coeff_field_); }
PerfElement PerfectClosureField::scalar(int64_t v) const {
    return PerfElement::constant(FqElement::scalar(coeff_field_, v));
}
PerfElement PerfectClosureField::sigma(const PerfElement& x) const { return x.frobenius(); }
PerfElement PerfectClosureField::sigma_inverse(const PerfElement& x) const {
    return x.frobenius_inverse();
}

PerfElement PerfectClosureField::element_at(uint64_t) const {
    throw BoundExceededError("perfect closure is not enumerable");
}

PerfElement PerfectClosureField::random(std::mt19937_64& rng) const {
    const uint64_t q = coeff_field_->size();
    auto rnd_poly = [&](int64_t maxdeg) {
        std::vector<FqElement> cs;
        int64_t d = int64_t(rnd_below(rng, uint64_t(maxdeg + 1)));
        for (int64_t i = 0; i <= d; ++i)
            cs.push_back(FqElement::element_at(coeff_field_, rnd_below(rng, q)));
        return FqPoly(coeff_field_, std::move(cs));
    };
    FqPoly num = rnd_poly(2);
    FqPoly den = rnd_poly(1);
    while (den.is_zero()) den = rnd_poly(1);
    int64_t level = int64_t(rnd_below(rng, 3));
    return PerfElement(level, std::move(num), std::move(den));
}

PerfElement PerfectClosureField::random_nonzero(std::mt19937_64& rng) const {
    for (;;) {
        PerfElement x = random(rng);
        if (!x.is_zero()) return x;
    }
}

PerfElement PerfectClosureField::parse(std::string_view text) const {
    return fields::parse_perf(coeff_field_, text);
}

std::shared_ptr<const FqFrobeniusField> make_frobenius_handle(int64_t p, int64_t n) {
    return std::make_shared<const FqFrobeniusField>(fields::get_field(p, n));
}

std::shared_ptr<const PerfectClosureField> make_perfect_closure_handle(int64_t p, int64_t n) {
    return std::make_shared<const PerfectClosureField>(fields::get_field(p, n));
}

}  // namespace skewlab::ore
