#pragma once

#include <cstdint>

#include "ncx/errors.hpp"

namespace ncx {

/// Arithmetic in the prime field F_p on canonical representatives in [0, p).
/// The modulus is restricted to p < 2^31 so every product fits into 64-bit
/// intermediates without overflow.
class PrimeField {
public:
    explicit PrimeField(std::uint32_t p);

    std::uint32_t modulus() const { return p_; }

    std::uint32_t add(std::uint32_t a, std::uint32_t b) const {
        std::uint64_t s = std::uint64_t(a) + b;
        return s >= p_ ? std::uint32_t(s - p_) : std::uint32_t(s);
    }
    std::uint32_t sub(std::uint32_t a, std::uint32_t b) const {
        return a >= b ? a - b : std::uint32_t(p_ - b + a);
    }
    std::uint32_t mul(std::uint32_t a, std::uint32_t b) const {
        return std::uint32_t(std::uint64_t(a) * b % p_);
    }
    std::uint32_t neg(std::uint32_t a) const { return a == 0 ? 0 : p_ - a; }

    std::uint32_t pow(std::uint32_t base, std::uint64_t exp) const;
    std::uint32_t inv(std::uint32_t a) const;

    /// Canonical representative of an arbitrary signed integer.
    std::uint32_t reduce(std::int64_t v) const {
        std::int64_t r = v % std::int64_t(p_);
        if (r < 0) r += p_;
        return std::uint32_t(r);
    }

    bool operator==(const PrimeField&) const = default;

private:
    std::uint32_t p_;
};

/// A field element tagged with its field.
struct Scalar {
    std::uint32_t value;
    PrimeField field;

    Scalar(std::uint32_t v, PrimeField f) : value(v), field(f) {}
    bool operator==(const Scalar&) const = default;
};

/// True iff value has multiplicative order exactly n in F_p.
bool has_multiplicative_order(PrimeField field, std::uint32_t value, int n);

/// Smallest element of F_p with multiplicative order exactly n.
/// Requires n >= 1 and n | p-1; throws Error otherwise.
Scalar primitive_root_of_unity(PrimeField field, int n);

}  // namespace ncx
