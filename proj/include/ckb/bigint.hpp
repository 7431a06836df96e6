#ifndef CKB_BIGINT_HPP
#define CKB_BIGINT_HPP

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace ckb {

/// Signed arbitrary-precision integer, sign-and-magnitude over 32-bit limbs.
///
/// Supports exactly what exact polynomial arithmetic needs: addition,
/// subtraction, schoolbook multiplication, comparison, decimal I/O and a
/// lossy conversion to double for floating-point spot checks. There is no
/// general division.
class BigInt {
public:
    BigInt() = default;
    BigInt(long long value);
    explicit BigInt(std::string_view decimal);

    bool is_zero() const { return limbs_.empty(); }
    int signum() const { return limbs_.empty() ? 0 : (negative_ ? -1 : 1); }

    BigInt& operator+=(const BigInt& rhs);
    BigInt& operator-=(const BigInt& rhs);
    BigInt& operator*=(const BigInt& rhs);

    friend BigInt operator+(BigInt lhs, const BigInt& rhs) { return lhs += rhs; }
    friend BigInt operator-(BigInt lhs, const BigInt& rhs) { return lhs -= rhs; }
    friend BigInt operator*(const BigInt& lhs, const BigInt& rhs);
    BigInt operator-() const;

    friend bool operator==(const BigInt& lhs, const BigInt& rhs) {
        return lhs.negative_ == rhs.negative_ && lhs.limbs_ == rhs.limbs_;
    }
    friend std::strong_ordering operator<=>(const BigInt& lhs, const BigInt& rhs);

    std::string to_string() const;
    double to_double() const;

    friend std::ostream& operator<<(std::ostream& os, const BigInt& v);

private:
    // Magnitude helpers ignore signs. |lhs| >= |rhs| is required by mag_sub.
    static int mag_compare(const std::vector<std::uint32_t>& a,
                           const std::vector<std::uint32_t>& b);
    static void mag_add(std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b);
    static void mag_sub(std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b);

    void add_signed(const BigInt& rhs, bool rhs_negative);
    void trim();

    bool negative_ = false;               // false whenever limbs_ is empty
    std::vector<std::uint32_t> limbs_;    // little-endian, no leading zero limb
};

}  // namespace ckb

#endif
