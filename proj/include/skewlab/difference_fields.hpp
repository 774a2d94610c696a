#ifndef SKEWLAB_DIFFERENCE_FIELDS_HPP
#define SKEWLAB_DIFFERENCE_FIELDS_HPP

#include <cstdint>
#include <memory>
#include <optional>
#include <random>
#include <string>
#include <string_view>

#include "skewlab/perfect.hpp"

namespace skewlab::ore {

// A difference field (K, sigma): field access plus the endomorphism sigma
// and, on inversive handles, sigma^{-1}. Twists hold a shared handle and
// check same_field before mixing. Constructors spot-check the morphism laws
// on deterministic sample pairs and refuse handles that fail them.

// F_{p^n} with sigma = Frobenius. Finite and enumerable; Fix(sigma) = F_p.
class FqFrobeniusField {
public:
    using Element = fields::FqElement;

    explicit FqFrobeniusField(fields::FieldRef field);

    const fields::FieldRef& field() const { return field_; }
    int64_t characteristic() const { return field_->p(); }
    int64_t extension_degree() const { return field_->n(); }
    // Fix(sigma) = F_p on this handle.
    int64_t fixed_field_size() const { return field_->p(); }
    bool inversive() const { return true; }
    bool sigma_is_frobenius() const { return true; }
    bool same_field(const FqFrobeniusField& o) const { return field_.get() == o.field_.get(); }

    Element zero() const;
    Element one() const;
    Element scalar(int64_t v) const;
    Element sigma(const Element& x) const;
    Element sigma_inverse(const Element& x) const;

    std::optional<uint64_t> size() const { return field_->size(); }
    Element element_at(uint64_t i) const;
    Element random(std::mt19937_64& rng) const;
    Element random_nonzero(std::mt19937_64& rng) const;

    std::string to_string(const Element& x) const { return x.str(); }
    Element parse(std::string_view text) const;

private:
    fields::FieldRef field_;
};

// The perfect closure of F_q(t) with sigma = Frobenius. Infinite but exact;
// inversive; Fix(sigma) = F_p.
class PerfectClosureField {
public:
    using Element = fields::PerfElement;

    explicit PerfectClosureField(fields::FieldRef coeff_field);

    const fields::FieldRef& coeff_field() const { return coeff_field_; }
    int64_t characteristic() const { return coeff_field_->p(); }
    int64_t fixed_field_size() const { return coeff_field_->p(); }
    bool inversive() const { return true; }
    bool sigma_is_frobenius() const { return true; }
    bool same_field(const PerfectClosureField& o) const {
        return coeff_field_.get() == o.coeff_field_.get();
    }

    Element zero() const;
    Element one() const;
    Element scalar(int64_t v) const;
    Element sigma(const Element& x) const;
    Element sigma_inverse(const Element& x) const;

    std::optional<uint64_t> size() const { return std::nullopt; }
    Element element_at(uint64_t i) const;  // throws BoundExceededError
    Element random(std::mt19937_64& rng) const;
    Element random_nonzero(std::mt19937_64& rng) const;

    std::string to_string(const Element& x) const { return x.str(); }
    Element parse(std::string_view text) const;

private:
    fields::FieldRef coeff_field_;
};

std::shared_ptr<const FqFrobeniusField> make_frobenius_handle(int64_t p, int64_t n);
std::shared_ptr<const PerfectClosureField> make_perfect_closure_handle(int64_t p,
                                                                       int64_t n = 1);

}  // namespace skewlab::ore

#endif
