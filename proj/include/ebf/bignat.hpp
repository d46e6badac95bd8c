#ifndef EBF_BIGNAT_HPP
#define EBF_BIGNAT_HPP

#include <algorithm>
#include <bit>
#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace ebf {

class error : public std::runtime_error {
public:
    explicit error(const std::string& msg) : std::runtime_error(msg) {}
};

// Arbitrary-precision unsigned integer. Little-endian base-2^32 limbs,
// no trailing zero limbs (zero is the empty limb vector). Arithmetic
// never wraps: subtraction below zero throws.
class BigNat {
public:
    BigNat() = default;

    BigNat(uint64_t v) {
        if (v != 0) {
            limbs_.push_back(static_cast<uint32_t>(v));
            if (v >> 32) limbs_.push_back(static_cast<uint32_t>(v >> 32));
        }
    }

    static BigNat from_decimal(std::string_view s) {
        if (s.empty()) throw error("empty decimal string");
        BigNat out;
        size_t i = 0;
        while (i < s.size()) {
            size_t chunk = std::min<size_t>(9, s.size() - i);
            uint32_t part = 0;
            for (size_t k = 0; k < chunk; ++k) {
                char c = s[i + k];
                if (c < '0' || c > '9') throw error("invalid decimal digit");
                part = part * 10 + static_cast<uint32_t>(c - '0');
            }
            uint32_t pow10 = 1;
            for (size_t k = 0; k < chunk; ++k) pow10 *= 10;
            out = out * BigNat(pow10) + BigNat(part);
            i += chunk;
        }
        return out;
    }

    bool is_zero() const { return limbs_.empty(); }

    bool fits_u64() const { return limbs_.size() <= 2; }

    uint64_t to_u64() const {
        if (!fits_u64()) throw error("value does not fit in 64 bits");
        uint64_t v = 0;
        if (limbs_.size() > 1) v = static_cast<uint64_t>(limbs_[1]) << 32;
        if (!limbs_.empty()) v |= limbs_[0];
        return v;
    }

    size_t bit_length() const {
        if (limbs_.empty()) return 0;
        return 32 * (limbs_.size() - 1) +
               (32 - static_cast<size_t>(std::countl_zero(limbs_.back())));
    }

    bool is_even() const { return limbs_.empty() || (limbs_[0] & 1u) == 0; }
    bool is_odd() const { return !is_even(); }

    friend bool operator==(const BigNat& a, const BigNat& b) { return a.limbs_ == b.limbs_; }

    friend std::strong_ordering operator<=>(const BigNat& a, const BigNat& b) {
        if (a.limbs_.size() != b.limbs_.size())
            return a.limbs_.size() <=> b.limbs_.size();
        for (size_t i = a.limbs_.size(); i-- > 0;) {
            if (a.limbs_[i] != b.limbs_[i]) return a.limbs_[i] <=> b.limbs_[i];
        }
        return std::strong_ordering::equal;
    }

    friend BigNat operator+(const BigNat& a, const BigNat& b) {
        BigNat out;
        const size_t n = std::max(a.limbs_.size(), b.limbs_.size());
        out.limbs_.reserve(n + 1);
        uint64_t carry = 0;
        for (size_t i = 0; i < n; ++i) {
            uint64_t t = carry;
            if (i < a.limbs_.size()) t += a.limbs_[i];
            if (i < b.limbs_.size()) t += b.limbs_[i];
            out.limbs_.push_back(static_cast<uint32_t>(t));
            carry = t >> 32;
        }
        if (carry) out.limbs_.push_back(static_cast<uint32_t>(carry));
        return out;
    }

    // Requires a >= b.
    friend BigNat operator-(const BigNat& a, const BigNat& b) {
        if (a < b) throw error("BigNat subtraction underflow");
        BigNat out;
        out.limbs_.reserve(a.limbs_.size());
        int64_t borrow = 0;
        for (size_t i = 0; i < a.limbs_.size(); ++i) {
            int64_t t = static_cast<int64_t>(a.limbs_[i]) - borrow -
                        (i < b.limbs_.size() ? static_cast<int64_t>(b.limbs_[i]) : 0);
            borrow = t < 0 ? 1 : 0;
            if (t < 0) t += (int64_t{1} << 32);
            out.limbs_.push_back(static_cast<uint32_t>(t));
        }
        out.trim();
        return out;
    }

    friend BigNat operator*(const BigNat& a, const BigNat& b) {
        if (a.is_zero() || b.is_zero()) return BigNat();
        BigNat out;
        out.limbs_.assign(a.limbs_.size() + b.limbs_.size(), 0);
        for (size_t i = 0; i < a.limbs_.size(); ++i) {
            uint64_t carry = 0;
            const uint64_t ai = a.limbs_[i];
            for (size_t j = 0; j < b.limbs_.size(); ++j) {
                uint64_t t = ai * b.limbs_[j] + out.limbs_[i + j] + carry;
                out.limbs_[i + j] = static_cast<uint32_t>(t);
                carry = t >> 32;
            }
            out.limbs_[i + b.limbs_.size()] = static_cast<uint32_t>(carry);
        }
        out.trim();
        return out;
    }

    // Knuth algorithm D, base 2^32. Returns {quotient, remainder}.
    static std::pair<BigNat, BigNat> divmod(const BigNat& u, const BigNat& v) {
        if (v.is_zero()) throw error("division by zero");
        if (u < v) return {BigNat(), u};

        const size_t n = v.limbs_.size();
        const size_t m = u.limbs_.size();

        if (n == 1) {
            BigNat q;
            q.limbs_.assign(m, 0);
            const uint64_t d = v.limbs_[0];
            uint64_t rem = 0;
            for (size_t j = m; j-- > 0;) {
                uint64_t t = (rem << 32) | u.limbs_[j];
                q.limbs_[j] = static_cast<uint32_t>(t / d);
                rem = t % d;
            }
            q.trim();
            return {std::move(q), BigNat(rem)};
        }

        const int s = std::countl_zero(v.limbs_[n - 1]);
        std::vector<uint32_t> vn(n), un(m + 1);
        if (s == 0) {
            vn = v.limbs_;
            std::copy(u.limbs_.begin(), u.limbs_.end(), un.begin());
            un[m] = 0;
        } else {
            for (size_t i = n; i-- > 1;)
                vn[i] = (v.limbs_[i] << s) | (v.limbs_[i - 1] >> (32 - s));
            vn[0] = v.limbs_[0] << s;
            un[m] = u.limbs_[m - 1] >> (32 - s);
            for (size_t i = m; i-- > 1;)
                un[i] = (u.limbs_[i] << s) | (u.limbs_[i - 1] >> (32 - s));
            un[0] = u.limbs_[0] << s;
        }

        BigNat q;
        q.limbs_.assign(m - n + 1, 0);
        const uint64_t base = uint64_t{1} << 32;

        for (size_t j = m - n + 1; j-- > 0;) {
            uint64_t num = (static_cast<uint64_t>(un[j + n]) << 32) | un[j + n - 1];
            uint64_t qhat = num / vn[n - 1];
            uint64_t rhat = num % vn[n - 1];
            while (qhat >= base ||
                   qhat * vn[n - 2] > (rhat << 32) + un[j + n - 2]) {
                --qhat;
                rhat += vn[n - 1];
                if (rhat >= base) break;
            }

            int64_t t;
            uint64_t borrow = 0;
            for (size_t i = 0; i < n; ++i) {
                uint64_t p = qhat * vn[i];
                t = static_cast<int64_t>(static_cast<uint64_t>(un[i + j]) - borrow -
                                         (p & 0xFFFFFFFFu));
                un[i + j] = static_cast<uint32_t>(t);
                borrow = (p >> 32) - static_cast<uint64_t>(t >> 32);
            }
            t = static_cast<int64_t>(static_cast<uint64_t>(un[j + n]) - borrow);
            un[j + n] = static_cast<uint32_t>(t);

            q.limbs_[j] = static_cast<uint32_t>(qhat);
            if (t < 0) {
                --q.limbs_[j];
                uint64_t carry = 0;
                for (size_t i = 0; i < n; ++i) {
                    uint64_t t2 = static_cast<uint64_t>(un[i + j]) + vn[i] + carry;
                    un[i + j] = static_cast<uint32_t>(t2);
                    carry = t2 >> 32;
                }
                un[j + n] += static_cast<uint32_t>(carry);
            }
        }

        BigNat r;
        r.limbs_.assign(n, 0);
        if (s == 0) {
            std::copy(un.begin(), un.begin() + static_cast<long>(n), r.limbs_.begin());
        } else {
            for (size_t i = 0; i + 1 < n; ++i)
                r.limbs_[i] = (un[i] >> s) | (un[i + 1] << (32 - s));
            r.limbs_[n - 1] = un[n - 1] >> s;
        }
        q.trim();
        r.trim();
        return {std::move(q), std::move(r)};
    }

    friend BigNat operator/(const BigNat& a, const BigNat& b) { return divmod(a, b).first; }
    friend BigNat operator%(const BigNat& a, const BigNat& b) { return divmod(a, b).second; }

    BigNat& operator+=(const BigNat& o) { *this = *this + o; return *this; }
    BigNat& operator-=(const BigNat& o) { *this = *this - o; return *this; }
    BigNat& operator*=(const BigNat& o) { *this = *this * o; return *this; }

    BigNat shifted_left(size_t bits) const {
        if (is_zero() || bits == 0) {
            if (bits == 0) return *this;
            return BigNat();
        }
        const size_t limb_shift = bits / 32;
        const unsigned bit_shift = bits % 32;
        BigNat out;
        out.limbs_.assign(limbs_.size() + limb_shift + 1, 0);
        for (size_t i = 0; i < limbs_.size(); ++i) {
            uint64_t t = static_cast<uint64_t>(limbs_[i]) << bit_shift;
            out.limbs_[i + limb_shift] |= static_cast<uint32_t>(t);
            out.limbs_[i + limb_shift + 1] |= static_cast<uint32_t>(t >> 32);
        }
        out.trim();
        return out;
    }

    BigNat shifted_right(size_t bits) const {
        const size_t limb_shift = bits / 32;
        const unsigned bit_shift = bits % 32;
        if (limb_shift >= limbs_.size()) return BigNat();
        BigNat out;
        out.limbs_.assign(limbs_.size() - limb_shift, 0);
        for (size_t i = 0; i < out.limbs_.size(); ++i) {
            uint64_t t = limbs_[i + limb_shift];
            if (bit_shift) {
                t >>= bit_shift;
                if (i + limb_shift + 1 < limbs_.size())
                    t |= static_cast<uint64_t>(limbs_[i + limb_shift + 1]) << (32 - bit_shift);
            }
            out.limbs_[i] = static_cast<uint32_t>(t);
        }
        out.trim();
        return out;
    }

    std::string to_decimal() const {
        if (is_zero()) return "0";
        std::string out;
        BigNat cur = *this;
        const BigNat chunk_div(1000000000u);
        while (!cur.is_zero()) {
            auto [q, r] = divmod(cur, chunk_div);
            uint64_t part = r.is_zero() ? 0 : r.to_u64();
            if (q.is_zero()) {
                out = std::to_string(part) + out;
            } else {
                std::string digits = std::to_string(part);
                out = std::string(9 - digits.size(), '0') + digits + out;
            }
            cur = std::move(q);
        }
        return out;
    }

private:
    void trim() {
        while (!limbs_.empty() && limbs_.back() == 0) limbs_.pop_back();
    }

    std::vector<uint32_t> limbs_;
};

inline BigNat abs_diff(const BigNat& a, const BigNat& b) { return a < b ? b - a : a - b; }

inline BigNat sq(const BigNat& a) { return a * a; }

inline BigNat gcd(BigNat a, BigNat b) {
    while (!b.is_zero()) {
        BigNat r = a % b;
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

}  // namespace ebf

#endif
