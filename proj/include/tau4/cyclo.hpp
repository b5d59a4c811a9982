#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>

namespace tau4 {

// c0 + c1 w + ... + c7 w^7 with w a primitive 16th root of unity (w^8 = -1).
class CycloInt {
public:
    std::array<std::int64_t, 8> c{};

    CycloInt() = default;
    CycloInt(std::int64_t n) { c[0] = n; }  // NOLINT(implicit)
    explicit CycloInt(const std::array<std::int64_t, 8>& coeffs) : c(coeffs) {}

    static CycloInt omega() { return omega_pow(1); }
    // w^k for any integer k.
    static CycloInt omega_pow(std::int64_t k);
    static CycloInt i() { return omega_pow(4); }
    // w^2 + w^-2
    static CycloInt sqrt2();

    CycloInt operator+(const CycloInt& o) const;
    CycloInt operator-(const CycloInt& o) const;
    CycloInt operator-() const;
    CycloInt operator*(const CycloInt& o) const;
    CycloInt& operator+=(const CycloInt& o);
    CycloInt& operator-=(const CycloInt& o);
    CycloInt& operator*=(const CycloInt& o);
    bool operator==(const CycloInt& o) const = default;

    bool is_zero() const;
    std::optional<std::int64_t> as_integer() const;

    // Image under w -> w^k, k odd.
    CycloInt conjugate(int k) const;
    // Product of all eight conjugates; a rational integer.
    std::int64_t norm() const;

    std::string to_string() const;
};

CycloInt cyclo_mul(const CycloInt& a, const CycloInt& b);
// Negative k requires a unit; otherwise DomainError.
CycloInt cyclo_pow(const CycloInt& a, std::int64_t k);

}  // namespace tau4
