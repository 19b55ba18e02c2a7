#include "qk/bigint.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace qk {

BigInt::BigInt(long long v) {
    if (v == 0) return;
    sign_ = v < 0 ? -1 : 1;
    // Avoid overflow on LLONG_MIN by working with unsigned magnitude.
    unsigned long long m = v < 0 ? 0ull - static_cast<unsigned long long>(v)
                                 : static_cast<unsigned long long>(v);
    while (m > 0) {
        mag_.push_back(static_cast<std::uint32_t>(m % kBase));
        m /= kBase;
    }
}

BigInt BigInt::from_decimal(std::string_view text) {
    std::size_t pos = 0;
    int sign = 1;
    if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
        if (text[pos] == '-') sign = -1;
        ++pos;
    }
    if (pos == text.size())
        throw std::invalid_argument("empty integer literal");
    BigInt out;
    for (; pos < text.size(); ++pos) {
        char c = text[pos];
        if (c < '0' || c > '9')
            throw std::invalid_argument("bad digit in integer literal");
        out *= BigInt(10);
        out += BigInt(c - '0');
    }
    if (sign < 0) out = -out;
    return out;
}

std::string BigInt::to_decimal() const {
    if (sign_ == 0) return "0";
    std::string out = sign_ < 0 ? "-" : "";
    out += std::to_string(mag_.back());
    for (std::size_t k = mag_.size() - 1; k-- > 0;) {
        std::string limb = std::to_string(mag_[k]);
        out += std::string(9 - limb.size(), '0');
        out += limb;
    }
    return out;
}

long long BigInt::to_long_long() const {
    long long out = 0;
    for (std::size_t k = mag_.size(); k-- > 0;) {
        if (out > (std::numeric_limits<long long>::max() - static_cast<long long>(mag_[k])) /
                      static_cast<long long>(kBase))
            throw std::overflow_error("BigInt does not fit in long long");
        out = out * static_cast<long long>(kBase) + static_cast<long long>(mag_[k]);
    }
    return sign_ < 0 ? -out : out;
}

BigInt BigInt::operator-() const {
    BigInt out = *this;
    out.sign_ = -out.sign_;
    return out;
}

int BigInt::compare_mag(const std::vector<std::uint32_t>& a,
                        const std::vector<std::uint32_t>& b) {
    if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
    for (std::size_t k = a.size(); k-- > 0;)
        if (a[k] != b[k]) return a[k] < b[k] ? -1 : 1;
    return 0;
}

std::vector<std::uint32_t> BigInt::add_mag(const std::vector<std::uint32_t>& a,
                                           const std::vector<std::uint32_t>& b) {
    std::vector<std::uint32_t> out(std::max(a.size(), b.size()) + 1, 0);
    std::uint32_t carry = 0;
    for (std::size_t k = 0; k < out.size(); ++k) {
        std::uint64_t cur = carry;
        if (k < a.size()) cur += a[k];
        if (k < b.size()) cur += b[k];
        out[k] = static_cast<std::uint32_t>(cur % kBase);
        carry = static_cast<std::uint32_t>(cur / kBase);
    }
    while (!out.empty() && out.back() == 0) out.pop_back();
    return out;
}

std::vector<std::uint32_t> BigInt::sub_mag(const std::vector<std::uint32_t>& a,
                                           const std::vector<std::uint32_t>& b) {
    std::vector<std::uint32_t> out = a;
    std::int64_t borrow = 0;
    for (std::size_t k = 0; k < out.size(); ++k) {
        std::int64_t cur = static_cast<std::int64_t>(out[k]) - borrow -
                           (k < b.size() ? static_cast<std::int64_t>(b[k]) : 0);
        if (cur < 0) {
            cur += kBase;
            borrow = 1;
        } else {
            borrow = 0;
        }
        out[k] = static_cast<std::uint32_t>(cur);
    }
    while (!out.empty() && out.back() == 0) out.pop_back();
    return out;
}

std::vector<std::uint32_t> BigInt::mul_mag(const std::vector<std::uint32_t>& a,
                                           const std::vector<std::uint32_t>& b) {
    if (a.empty() || b.empty()) return {};
    std::vector<std::uint32_t> out(a.size() + b.size(), 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        std::uint64_t carry = 0;
        for (std::size_t j = 0; j < b.size(); ++j) {
            std::uint64_t cur = out[i + j] +
                                static_cast<std::uint64_t>(a[i]) * b[j] + carry;
            out[i + j] = static_cast<std::uint32_t>(cur % kBase);
            carry = cur / kBase;
        }
        std::size_t k = i + b.size();
        while (carry > 0) {
            std::uint64_t cur = out[k] + carry;
            out[k] = static_cast<std::uint32_t>(cur % kBase);
            carry = cur / kBase;
            ++k;
        }
    }
    while (!out.empty() && out.back() == 0) out.pop_back();
    return out;
}

void BigInt::trim() {
    while (!mag_.empty() && mag_.back() == 0) mag_.pop_back();
    if (mag_.empty()) sign_ = 0;
}

BigInt& BigInt::operator+=(const BigInt& o) {
    if (o.sign_ == 0) return *this;
    if (sign_ == 0) return *this = o;
    if (sign_ == o.sign_) {
        mag_ = add_mag(mag_, o.mag_);
    } else {
        int c = compare_mag(mag_, o.mag_);
        if (c == 0) {
            sign_ = 0;
            mag_.clear();
        } else if (c > 0) {
            mag_ = sub_mag(mag_, o.mag_);
        } else {
            mag_ = sub_mag(o.mag_, mag_);
            sign_ = o.sign_;
        }
    }
    trim();
    return *this;
}

BigInt& BigInt::operator-=(const BigInt& o) { return *this += -o; }

BigInt& BigInt::operator*=(const BigInt& o) {
    sign_ *= o.sign_;
    mag_ = mul_mag(mag_, o.mag_);
    trim();
    return *this;
}

bool BigInt::operator<(const BigInt& o) const {
    if (sign_ != o.sign_) return sign_ < o.sign_;
    int c = compare_mag(mag_, o.mag_);
    return sign_ >= 0 ? c < 0 : c > 0;
}

} // namespace qk
