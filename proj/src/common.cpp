#include "skewlab/common.hpp"

#include <atomic>
#include <cstdlib>

namespace skewlab {

namespace {

int64_t env_int64(const char* name, int64_t fallback) {
    const char* raw = std::getenv(name);
    if (raw == nullptr || *raw == '\0') return fallback;
    char* end = nullptr;
    long long v = std::strtoll(raw, &end, 10);
    if (end == raw || *end != '\0') return fallback;
    return static_cast<int64_t>(v);
}

std::atomic<int64_t>& precision_slot() {
    static std::atomic<int64_t> slot{env_int64("SKEWLAB_PREC", 8)};
    return slot;
}

std::atomic<uint64_t>& enum_slot() {
    static std::atomic<uint64_t> slot{
        static_cast<uint64_t>(env_int64("SKEWLAB_ENUM_BOUND", 15625))};
    return slot;
}

}  // namespace

int64_t default_precision_exponent() { return precision_slot().load(); }

void set_default_precision_exponent(int64_t value) {
    if (value <= 0) throw std::invalid_argument("precision exponent must be positive");
    precision_slot().store(value);
}

uint64_t enumeration_bound() { return enum_slot().load(); }

void set_enumeration_bound(uint64_t value) {
    if (value == 0) throw std::invalid_argument("enumeration bound must be positive");
    enum_slot().store(value);
}

int64_t checked_add(int64_t a, int64_t b) {
    int64_t r;
    if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("int64 overflow in add");
    return r;
}

int64_t checked_mul(int64_t a, int64_t b) {
    int64_t r;
    if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("int64 overflow in mul");
    return r;
}

int64_t checked_pow(int64_t base, int64_t exp) {
    if (exp < 0) throw std::invalid_argument("negative exponent in checked_pow");
    int64_t r = 1;
    for (int64_t i = 0; i < exp; ++i) r = checked_mul(r, base);
    return r;
}

uint64_t derive_seed(uint64_t seed, std::string_view label) {
    // FNV-1a over the label folded into a splitmix64 step; cheap and stable.
    uint64_t h = 1469598103934665603ull;
    for (char c : label) {
        h ^= static_cast<unsigned char>(c);
        h *= 1099511628211ull;
    }
    uint64_t z = seed ^ h;
    z += 0x9e3779b97f4a7c15ull;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

}  // namespace skewlab
