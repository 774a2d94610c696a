#ifndef SKEWLAB_COMMON_HPP
#define SKEWLAB_COMMON_HPP

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace skewlab {

inline constexpr const char* kVersion = "0.1.0";

// Two values from incompatible fields (or two twists over different handles)
// were mixed in one operation.
class FieldMismatchError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Valuation, leading term or inversion requested for a series with no stored
// terms. The message distinguishes exact zero from zero-to-precision.
class ZeroSeriesError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// The working precision does not suffice to decide the requested question
// (singular-to-precision pivot, residual not resolvable, ...). Retry with a
// higher precision; this never means "no answer exists".
class PrecisionError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// The requested decision procedure has no applicable method (for example a
// radicality test over a fixed field we cannot enumerate).
class NotDecidableError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// An enumeration or scan would exceed the configured bound.
class BoundExceededError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Process-wide configuration.
//
// default_precision_exponent: target exponent for series inversions that have
// no precision of their own (integer, in units of t^1). Default 8, overridable
// via the environment variable SKEWLAB_PREC and the CLI.
//
// enumeration_bound: largest point count a brute-force enumeration may visit.
// Default 15625 (= 5^6), overridable via SKEWLAB_ENUM_BOUND and the CLI.
int64_t default_precision_exponent();
void set_default_precision_exponent(int64_t value);
uint64_t enumeration_bound();
void set_enumeration_bound(uint64_t value);

// Overflow-checked int64 helpers. Exponent arithmetic must never wrap.
int64_t checked_add(int64_t a, int64_t b);
int64_t checked_mul(int64_t a, int64_t b);
int64_t checked_pow(int64_t base, int64_t exp);

// All campaign randomness flows from one seed: per-check streams are
// mt19937_64 engines seeded with derive_seed(campaign_seed, check_id).
uint64_t derive_seed(uint64_t seed, std::string_view label);

}  // namespace skewlab

#endif
