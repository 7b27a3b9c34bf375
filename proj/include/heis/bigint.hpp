#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>
#include <utility>
#include <iosfwd>

namespace heis {

/// Arbitrary-precision signed integer on 64-bit limbs (little endian
/// magnitude, canonical: no trailing zero limbs, zero is non-negative).
class BigInt {
public:
    BigInt() = default;
    BigInt(long long v);
    BigInt(long v) : BigInt(static_cast<long long>(v)) {}
    BigInt(int v) : BigInt(static_cast<long long>(v)) {}
    BigInt(unsigned long long v);
    BigInt(unsigned long v) : BigInt(static_cast<unsigned long long>(v)) {}
    BigInt(unsigned int v) : BigInt(static_cast<unsigned long long>(v)) {}

    static BigInt from_string(std::string_view s);

    bool is_zero() const { return limbs_.empty(); }
    bool is_negative() const { return neg_; }
    bool is_one() const { return !neg_ && limbs_.size() == 1 && limbs_[0] == 1; }
    int sign() const { return is_zero() ? 0 : (neg_ ? -1 : 1); }
    bool is_even() const { return limbs_.empty() || (limbs_[0] & 1u) == 0; }

    BigInt operator-() const;
    BigInt abs() const;

    BigInt& operator+=(const BigInt& o);
    BigInt& operator-=(const BigInt& o);
    BigInt& operator*=(const BigInt& o);

    friend BigInt operator+(BigInt a, const BigInt& b) { return a += b; }
    friend BigInt operator-(BigInt a, const BigInt& b) { return a -= b; }
    friend BigInt operator*(const BigInt& a, const BigInt& b);

    /// Truncated division: quotient rounds toward zero, remainder keeps
    /// the sign of the dividend. b must be nonzero.
    static std::pair<BigInt, BigInt> divmod(const BigInt& a, const BigInt& b);
    friend BigInt operator/(const BigInt& a, const BigInt& b) { return divmod(a, b).first; }
    friend BigInt operator%(const BigInt& a, const BigInt& b) { return divmod(a, b).second; }

    friend bool operator==(const BigInt& a, const BigInt& b) {
        return a.neg_ == b.neg_ && a.limbs_ == b.limbs_;
    }
    friend bool operator!=(const BigInt& a, const BigInt& b) { return !(a == b); }
    friend bool operator<(const BigInt& a, const BigInt& b);
    friend bool operator>(const BigInt& a, const BigInt& b) { return b < a; }
    friend bool operator<=(const BigInt& a, const BigInt& b) { return !(b < a); }
    friend bool operator>=(const BigInt& a, const BigInt& b) { return !(a < b); }

    /// Magnitude comparison ignoring signs: -1, 0, +1.
    static int compare_abs(const BigInt& a, const BigInt& b);

    static BigInt gcd(BigInt a, BigInt b);
    static BigInt pow(const BigInt& base, unsigned long long e);

    /// Number of bits in the magnitude (0 for zero).
    size_t bit_length() const;
    size_t limb_count() const { return limbs_.size(); }

    /// Non-negative residue of the magnitude modulo m (m < 2^63), with
    /// the sign folded in: result == ((this mod m) + m) mod m.
    std::uint64_t mod_u64(std::uint64_t m) const;

    long double to_long_double() const;
    double to_double() const { return static_cast<double>(to_long_double()); }
    /// Value as int64 if representable, else throws.
    long long to_int64() const;

    std::string to_string() const;
    friend std::ostream& operator<<(std::ostream& os, const BigInt& v);

private:
    std::vector<std::uint64_t> limbs_;
    bool neg_ = false;

    void trim();
    static std::vector<std::uint64_t> add_mag(const std::vector<std::uint64_t>& a,
                                              const std::vector<std::uint64_t>& b);
    static std::vector<std::uint64_t> sub_mag(const std::vector<std::uint64_t>& a,
                                              const std::vector<std::uint64_t>& b);
    static int cmp_mag(const std::vector<std::uint64_t>& a,
                       const std::vector<std::uint64_t>& b);
};

BigInt gcd(const BigInt& a, const BigInt& b);

} // namespace heis
