#include "ckb/bigint.hpp"

#include <algorithm>
#include <ostream>
#include <stdexcept>

namespace ckb {

namespace {
constexpr std::uint64_t kLimbBase = 1ull << 32;
}

BigInt::BigInt(long long value) {
    if (value == 0) return;
    negative_ = value < 0;
    // careful with LLONG_MIN: negate in unsigned space
    std::uint64_t mag = negative_ ? 0ull - static_cast<std::uint64_t>(value)
                                  : static_cast<std::uint64_t>(value);
    while (mag != 0) {
        limbs_.push_back(static_cast<std::uint32_t>(mag & 0xffffffffu));
        mag >>= 32;
    }
}

BigInt::BigInt(std::string_view decimal) {
    std::string_view digits = decimal;
    bool neg = false;
    if (!digits.empty() && (digits.front() == '-' || digits.front() == '+')) {
        neg = digits.front() == '-';
        digits.remove_prefix(1);
    }
    if (digits.empty()) throw std::invalid_argument("BigInt: empty decimal string");

    // consume 9 digits at a time: v = v*10^9 + chunk
    std::size_t pos = 0;
    while (pos < digits.size()) {
        std::size_t take = std::min<std::size_t>(9, digits.size() - pos);
        std::uint32_t chunk = 0;
        std::uint32_t scale = 1;
        for (std::size_t i = 0; i < take; ++i) {
            char c = digits[pos + i];
            if (c < '0' || c > '9')
                throw std::invalid_argument("BigInt: invalid digit in \"" + std::string(decimal) + "\"");
            chunk = chunk * 10 + static_cast<std::uint32_t>(c - '0');
            scale *= 10;
        }
        pos += take;

        std::uint64_t carry = chunk;
        for (auto& limb : limbs_) {
            std::uint64_t cur = static_cast<std::uint64_t>(limb) * scale + carry;
            limb = static_cast<std::uint32_t>(cur & 0xffffffffu);
            carry = cur >> 32;
        }
        while (carry != 0) {
            limbs_.push_back(static_cast<std::uint32_t>(carry & 0xffffffffu));
            carry >>= 32;
        }
    }
    trim();
    negative_ = neg && !limbs_.empty();
}

void BigInt::trim() {
    while (!limbs_.empty() && limbs_.back() == 0) limbs_.pop_back();
    if (limbs_.empty()) negative_ = false;
}

int BigInt::mag_compare(const std::vector<std::uint32_t>& a,
                        const std::vector<std::uint32_t>& b) {
    if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
    for (std::size_t i = a.size(); i-- > 0;) {
        if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
    }
    return 0;
}

void BigInt::mag_add(std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b) {
    if (a.size() < b.size()) a.resize(b.size(), 0);
    std::uint64_t carry = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        std::uint64_t cur = carry + a[i] + (i < b.size() ? b[i] : 0u);
        a[i] = static_cast<std::uint32_t>(cur & 0xffffffffu);
        carry = cur >> 32;
    }
    if (carry != 0) a.push_back(static_cast<std::uint32_t>(carry));
}

void BigInt::mag_sub(std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b) {
    std::int64_t borrow = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        std::int64_t cur = static_cast<std::int64_t>(a[i]) - borrow -
                           (i < b.size() ? static_cast<std::int64_t>(b[i]) : 0);
        if (cur < 0) {
            cur += static_cast<std::int64_t>(kLimbBase);
            borrow = 1;
        } else {
            borrow = 0;
        }
        a[i] = static_cast<std::uint32_t>(cur);
    }
}

void BigInt::add_signed(const BigInt& rhs, bool rhs_negative) {
    if (rhs.limbs_.empty()) return;
    if (limbs_.empty()) {
        limbs_ = rhs.limbs_;
        negative_ = rhs_negative;
        return;
    }
    if (negative_ == rhs_negative) {
        mag_add(limbs_, rhs.limbs_);
        return;
    }
    int cmp = mag_compare(limbs_, rhs.limbs_);
    if (cmp == 0) {
        limbs_.clear();
        negative_ = false;
    } else if (cmp > 0) {
        mag_sub(limbs_, rhs.limbs_);
        trim();
    } else {
        std::vector<std::uint32_t> mag = rhs.limbs_;
        mag_sub(mag, limbs_);
        limbs_ = std::move(mag);
        negative_ = rhs_negative;
        trim();
    }
}

BigInt& BigInt::operator+=(const BigInt& rhs) {
    add_signed(rhs, rhs.negative_);
    return *this;
}

BigInt& BigInt::operator-=(const BigInt& rhs) {
    add_signed(rhs, !rhs.negative_);
    return *this;
}

BigInt operator*(const BigInt& lhs, const BigInt& rhs) {
    BigInt out;
    if (lhs.limbs_.empty() || rhs.limbs_.empty()) return out;
    out.limbs_.assign(lhs.limbs_.size() + rhs.limbs_.size(), 0);
    for (std::size_t i = 0; i < lhs.limbs_.size(); ++i) {
        std::uint64_t carry = 0;
        for (std::size_t j = 0; j < rhs.limbs_.size(); ++j) {
            std::uint64_t cur = static_cast<std::uint64_t>(lhs.limbs_[i]) * rhs.limbs_[j] +
                                out.limbs_[i + j] + carry;
            out.limbs_[i + j] = static_cast<std::uint32_t>(cur & 0xffffffffu);
            carry = cur >> 32;
        }
        out.limbs_[i + rhs.limbs_.size()] += static_cast<std::uint32_t>(carry);
    }
    out.trim();
    out.negative_ = !out.limbs_.empty() && (lhs.negative_ != rhs.negative_);
    return out;
}

BigInt& BigInt::operator*=(const BigInt& rhs) {
    *this = *this * rhs;
    return *this;
}

BigInt BigInt::operator-() const {
    BigInt out = *this;
    if (!out.limbs_.empty()) out.negative_ = !out.negative_;
    return out;
}

std::strong_ordering operator<=>(const BigInt& lhs, const BigInt& rhs) {
    int ls = lhs.signum(), rs = rhs.signum();
    if (ls != rs) return ls <=> rs;
    int cmp = BigInt::mag_compare(lhs.limbs_, rhs.limbs_);
    if (ls < 0) cmp = -cmp;
    return cmp <=> 0;
}

std::string BigInt::to_string() const {
    if (limbs_.empty()) return "0";
    std::vector<std::uint32_t> mag = limbs_;
    std::string out;
    while (!mag.empty()) {
        // divmod by 10^9
        std::uint64_t rem = 0;
        for (std::size_t i = mag.size(); i-- > 0;) {
            std::uint64_t cur = (rem << 32) | mag[i];
            mag[i] = static_cast<std::uint32_t>(cur / 1000000000u);
            rem = cur % 1000000000u;
        }
        while (!mag.empty() && mag.back() == 0) mag.pop_back();
        std::string group = std::to_string(rem);
        if (mag.empty()) {
            std::reverse(group.begin(), group.end());
            out += group;
        } else {
            std::reverse(group.begin(), group.end());
            group.resize(9, '0');
            out += group;
        }
    }
    if (negative_) out += '-';
    std::reverse(out.begin(), out.end());
    return out;
}

double BigInt::to_double() const {
    double mag = 0.0;
    for (std::size_t i = limbs_.size(); i-- > 0;) {
        mag = mag * 4294967296.0 + static_cast<double>(limbs_[i]);
    }
    return negative_ ? -mag : mag;
}

std::ostream& operator<<(std::ostream& os, const BigInt& v) { return os << v.to_string(); }

}  // namespace ckb
