// bigint.hpp — signed arbitrary-precision integers.
//
// Only the operations the coefficient ring needs: add, subtract, multiply,
// compare, and decimal conversion. Stored as sign + base-10^9 limbs so that
// decimal I/O is exact and cheap.

#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace qk {

class BigInt {
public:
    BigInt() = default;
    BigInt(long long v);

    static BigInt from_decimal(std::string_view text); // throws std::invalid_argument

    std::string to_decimal() const;

    bool is_zero() const { return sign_ == 0; }
    int signum() const { return sign_; }

    // Throws std::overflow_error when the value does not fit.
    long long to_long_long() const;

    BigInt operator-() const;
    BigInt& operator+=(const BigInt& o);
    BigInt& operator-=(const BigInt& o);
    BigInt& operator*=(const BigInt& o);

    friend BigInt operator+(BigInt a, const BigInt& b) { return a += b; }
    friend BigInt operator-(BigInt a, const BigInt& b) { return a -= b; }
    friend BigInt operator*(BigInt a, const BigInt& b) { return a *= b; }

    bool operator==(const BigInt& o) const { return sign_ == o.sign_ && mag_ == o.mag_; }
    bool operator<(const BigInt& o) const;
    bool operator>(const BigInt& o) const { return o < *this; }
    bool operator<=(const BigInt& o) const { return !(o < *this); }
    bool operator>=(const BigInt& o) const { return !(*this < o); }

private:
    static constexpr std::uint32_t kBase = 1'000'000'000u;

    int sign_ = 0;                   // -1, 0, +1
    std::vector<std::uint32_t> mag_; // little-endian limbs, no trailing zeros

    static int compare_mag(const std::vector<std::uint32_t>& a,
                           const std::vector<std::uint32_t>& b);
    static std::vector<std::uint32_t> add_mag(const std::vector<std::uint32_t>& a,
                                              const std::vector<std::uint32_t>& b);
    // Requires |a| >= |b|.
    static std::vector<std::uint32_t> sub_mag(const std::vector<std::uint32_t>& a,
                                              const std::vector<std::uint32_t>& b);
    static std::vector<std::uint32_t> mul_mag(const std::vector<std::uint32_t>& a,
                                              const std::vector<std::uint32_t>& b);
    void trim();
};

} // namespace qk
