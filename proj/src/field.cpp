#include "ncx/field.hpp"

#include <vector>

namespace ncx {

namespace {

bool is_prime(std::uint32_t p) {
    if (p < 2) return false;
    if (p % 2 == 0) return p == 2;
    for (std::uint64_t d = 3; d * d <= p; d += 2) {
        if (p % d == 0) return false;
    }
    return true;
}

std::vector<std::uint32_t> distinct_prime_factors(std::uint32_t n) {
    std::vector<std::uint32_t> out;
    for (std::uint32_t d = 2; std::uint64_t(d) * d <= n; ++d) {
        if (n % d == 0) {
            out.push_back(d);
            while (n % d == 0) n /= d;
        }
    }
    if (n > 1) out.push_back(n);
    return out;
}

}  // namespace

PrimeField::PrimeField(std::uint32_t p) : p_(p) {
    if (p >= (std::uint32_t(1) << 31))
        throw Error("field modulus must be < 2^31, got " + std::to_string(p));
    if (!is_prime(p))
        throw Error("field modulus must be prime, got " + std::to_string(p));
}

std::uint32_t PrimeField::pow(std::uint32_t base, std::uint64_t exp) const {
    std::uint64_t acc = 1 % p_;
    std::uint64_t b = base % p_;
    while (exp > 0) {
        if (exp & 1) acc = acc * b % p_;
        b = b * b % p_;
        exp >>= 1;
    }
    return std::uint32_t(acc);
}

std::uint32_t PrimeField::inv(std::uint32_t a) const {
    if (a % p_ == 0) throw Error("division by zero in F_" + std::to_string(p_));
    return pow(a, p_ - 2);
}

bool has_multiplicative_order(PrimeField field, std::uint32_t value, int n) {
    if (n < 1 || value % field.modulus() == 0) return false;
    if (field.pow(value, std::uint64_t(n)) != 1) return false;
    for (std::uint32_t r : distinct_prime_factors(std::uint32_t(n))) {
        if (field.pow(value, std::uint64_t(n) / r) == 1) return false;
    }
    return true;
}

Scalar primitive_root_of_unity(PrimeField field, int n) {
    if (n < 1) throw Error("root-of-unity order must be >= 1");
    std::uint32_t p = field.modulus();
    if ((p - 1) % std::uint32_t(n) != 0)
        throw Error("F_" + std::to_string(p) + " has no element of order " + std::to_string(n) +
                    " (n does not divide p-1)");
    for (std::uint32_t c = 1; c < p; ++c) {
        if (has_multiplicative_order(field, c, n)) return Scalar(c, field);
    }
    throw Error("no root of unity found");  // unreachable: F_p* is cyclic
}

}  // namespace ncx
