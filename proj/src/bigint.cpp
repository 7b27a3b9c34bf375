#include "heis/bigint.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <ostream>
#include <stdexcept>

namespace heis {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

BigInt::BigInt(long long v) {
    if (v == 0) return;
    neg_ = v < 0;
    u64 mag = neg_ ? (~static_cast<u64>(v) + 1u) : static_cast<u64>(v);
    limbs_.push_back(mag);
}

BigInt::BigInt(unsigned long long v) {
    if (v == 0) return;
    limbs_.push_back(v);
}

void BigInt::trim() {
    while (!limbs_.empty() && limbs_.back() == 0) limbs_.pop_back();
    if (limbs_.empty()) neg_ = false;
}

int BigInt::cmp_mag(const std::vector<u64>& a, const std::vector<u64>& b) {
    if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
    for (size_t i = a.size(); i-- > 0;) {
        if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
    }
    return 0;
}

int BigInt::compare_abs(const BigInt& a, const BigInt& b) {
    return cmp_mag(a.limbs_, b.limbs_);
}

std::vector<u64> BigInt::add_mag(const std::vector<u64>& a, const std::vector<u64>& b) {
    const std::vector<u64>& x = a.size() >= b.size() ? a : b;
    const std::vector<u64>& y = a.size() >= b.size() ? b : a;
    std::vector<u64> r(x.size() + 1, 0);
    unsigned carry = 0;
    for (size_t i = 0; i < x.size(); ++i) {
        u64 yi = i < y.size() ? y[i] : 0;
        u64 s = x[i] + yi;
        unsigned c1 = s < x[i];
        u64 s2 = s + carry;
        unsigned c2 = s2 < s;
        r[i] = s2;
        carry = c1 | c2;
    }
    r[x.size()] = carry;
    while (!r.empty() && r.back() == 0) r.pop_back();
    return r;
}

// Requires |a| >= |b|.
std::vector<u64> BigInt::sub_mag(const std::vector<u64>& a, const std::vector<u64>& b) {
    std::vector<u64> r(a.size(), 0);
    unsigned borrow = 0;
    for (size_t i = 0; i < a.size(); ++i) {
        u64 bi = i < b.size() ? b[i] : 0;
        u64 d = a[i] - bi;
        unsigned b1 = a[i] < bi;
        u64 d2 = d - borrow;
        unsigned b2 = d < borrow;
        r[i] = d2;
        borrow = b1 | b2;
    }
    while (!r.empty() && r.back() == 0) r.pop_back();
    return r;
}

bool operator<(const BigInt& a, const BigInt& b) {
    if (a.neg_ != b.neg_) return a.neg_;
    int c = BigInt::cmp_mag(a.limbs_, b.limbs_);
    return a.neg_ ? c > 0 : c < 0;
}

BigInt BigInt::operator-() const {
    BigInt r = *this;
    if (!r.is_zero()) r.neg_ = !r.neg_;
    return r;
}

BigInt BigInt::abs() const {
    BigInt r = *this;
    r.neg_ = false;
    return r;
}

BigInt& BigInt::operator+=(const BigInt& o) {
    if (neg_ == o.neg_) {
        limbs_ = add_mag(limbs_, o.limbs_);
    } else {
        int c = cmp_mag(limbs_, o.limbs_);
        if (c == 0) { limbs_.clear(); neg_ = false; return *this; }
        if (c > 0) {
            limbs_ = sub_mag(limbs_, o.limbs_);
        } else {
            limbs_ = sub_mag(o.limbs_, limbs_);
            neg_ = o.neg_;
        }
    }
    trim();
    return *this;
}

BigInt& BigInt::operator-=(const BigInt& o) {
    BigInt t = o;
    if (!t.is_zero()) t.neg_ = !t.neg_;
    return *this += t;
}

BigInt operator*(const BigInt& a, const BigInt& b) {
    BigInt r;
    if (a.is_zero() || b.is_zero()) return r;
    r.limbs_.assign(a.limbs_.size() + b.limbs_.size(), 0);
    for (size_t i = 0; i < a.limbs_.size(); ++i) {
        u64 carry = 0;
        u64 ai = a.limbs_[i];
        if (ai == 0) continue;
        for (size_t j = 0; j < b.limbs_.size(); ++j) {
            u128 cur = static_cast<u128>(ai) * b.limbs_[j] + r.limbs_[i + j] + carry;
            r.limbs_[i + j] = static_cast<u64>(cur);
            carry = static_cast<u64>(cur >> 64);
        }
        size_t k = i + b.limbs_.size();
        while (carry) {
            u128 cur = static_cast<u128>(r.limbs_[k]) + carry;
            r.limbs_[k] = static_cast<u64>(cur);
            carry = static_cast<u64>(cur >> 64);
            ++k;
        }
    }
    r.neg_ = a.neg_ != b.neg_;
    r.trim();
    return r;
}

BigInt& BigInt::operator*=(const BigInt& o) {
    *this = *this * o;
    return *this;
}

std::pair<BigInt, BigInt> BigInt::divmod(const BigInt& a, const BigInt& b) {
    if (b.is_zero()) throw std::domain_error("BigInt: division by zero");
    int c = cmp_mag(a.limbs_, b.limbs_);
    if (c < 0) return {BigInt(), a};

    BigInt q, r;
    if (b.limbs_.size() == 1) {
        u64 d = b.limbs_[0];
        q.limbs_.assign(a.limbs_.size(), 0);
        u64 rem = 0;
        for (size_t i = a.limbs_.size(); i-- > 0;) {
            u128 cur = (static_cast<u128>(rem) << 64) | a.limbs_[i];
            q.limbs_[i] = static_cast<u64>(cur / d);
            rem = static_cast<u64>(cur % d);
        }
        if (rem) r.limbs_.push_back(rem);
    } else {
        // Knuth algorithm D.
        const size_t n = b.limbs_.size();
        const size_t m = a.limbs_.size() - n;
        const int s = std::countl_zero(b.limbs_.back());
        auto shl = [&](const std::vector<u64>& v, size_t extra) {
            std::vector<u64> out(v.size() + extra, 0);
            if (s == 0) {
                std::copy(v.begin(), v.end(), out.begin());
            } else {
                u64 carry = 0;
                for (size_t i = 0; i < v.size(); ++i) {
                    out[i] = (v[i] << s) | carry;
                    carry = v[i] >> (64 - s);
                }
                if (carry) out[v.size()] = carry;
            }
            return out;
        };
        std::vector<u64> u = shl(a.limbs_, 1);
        if (u.size() < a.limbs_.size() + 1) u.resize(a.limbs_.size() + 1, 0);
        std::vector<u64> v = shl(b.limbs_, 0);
        q.limbs_.assign(m + 1, 0);
        const u64 vtop = v[n - 1];
        const u64 vsec = v[n - 2];
        for (size_t j = m + 1; j-- > 0;) {
            u128 top = (static_cast<u128>(u[j + n]) << 64) | u[j + n - 1];
            u64 qhat = static_cast<u64>(std::min<u128>(top / vtop, ~u64{0}));
            u64 rhat = static_cast<u64>(top - static_cast<u128>(qhat) * vtop);
            while (static_cast<u128>(qhat) * vsec >
                   ((static_cast<u128>(rhat) << 64) | u[j + n - 2])) {
                --qhat;
                u64 nr = rhat + vtop;
                if (nr < rhat) break;  // rhat overflowed past 2^64, loop ends
                rhat = nr;
            }
            // u[j..j+n] -= qhat * v
            u64 borrow = 0, mulcarry = 0;
            for (size_t i = 0; i < n; ++i) {
                u128 p = static_cast<u128>(qhat) * v[i] + mulcarry;
                mulcarry = static_cast<u64>(p >> 64);
                u64 sub = static_cast<u64>(p);
                u64 d = u[j + i] - sub;
                unsigned b1 = u[j + i] < sub;
                u64 d2 = d - borrow;
                unsigned b2 = d < borrow;
                u[j + i] = d2;
                borrow = b1 + b2;
            }
            u64 d = u[j + n] - mulcarry;
            unsigned b1 = u[j + n] < mulcarry;
            u64 d2 = d - borrow;
            unsigned b2 = d < borrow;
            u[j + n] = d2;
            if (b1 + b2) {
                // qhat was one too large: add v back.
                --qhat;
                u64 carry = 0;
                for (size_t i = 0; i < n; ++i) {
                    u64 s1 = u[j + i] + v[i];
                    unsigned c1 = s1 < u[j + i];
                    u64 s2 = s1 + carry;
                    unsigned c2 = s2 < s1;
                    u[j + i] = s2;
                    carry = c1 | c2;
                }
                u[j + n] += carry;
            }
            q.limbs_[j] = qhat;
        }
        // Remainder = u[0..n) >> s.
        std::vector<u64> rem(u.begin(), u.begin() + n);
        if (s) {
            for (size_t i = 0; i + 1 < n; ++i)
                rem[i] = (rem[i] >> s) | (rem[i + 1] << (64 - s));
            rem[n - 1] >>= s;
        }
        r.limbs_ = std::move(rem);
    }
    q.neg_ = a.neg_ != b.neg_;
    r.neg_ = a.neg_;
    q.trim();
    r.trim();
    return {q, r};
}

BigInt BigInt::gcd(BigInt a, BigInt b) {
    a.neg_ = false;
    b.neg_ = false;
    while (!b.is_zero()) {
        BigInt r = divmod(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

BigInt gcd(const BigInt& a, const BigInt& b) { return BigInt::gcd(a, b); }

BigInt BigInt::pow(const BigInt& base, unsigned long long e) {
    BigInt r(1), b = base;
    while (e) {
        if (e & 1u) r *= b;
        e >>= 1u;
        if (e) b *= b;
    }
    return r;
}

size_t BigInt::bit_length() const {
    if (limbs_.empty()) return 0;
    return 64 * (limbs_.size() - 1) + (64 - std::countl_zero(limbs_.back()));
}

u64 BigInt::mod_u64(u64 m) const {
    u64 r = 0;
    for (size_t i = limbs_.size(); i-- > 0;)
        r = static_cast<u64>(((static_cast<u128>(r) << 64) | limbs_[i]) % m);
    if (neg_ && r) r = m - r;
    return r;
}

long double BigInt::to_long_double() const {
    if (limbs_.empty()) return 0.0L;
    long double v = 0.0L;
    size_t n = limbs_.size();
    size_t take = std::min<size_t>(n, 2);
    for (size_t i = 0; i < take; ++i)
        v = v * 18446744073709551616.0L + static_cast<long double>(limbs_[n - 1 - i]);
    v = std::ldexp(v, static_cast<int>(64 * (n - take)));
    return neg_ ? -v : v;
}

long long BigInt::to_int64() const {
    if (limbs_.empty()) return 0;
    if (limbs_.size() > 1) throw std::overflow_error("BigInt: does not fit int64");
    if (!neg_) {
        if (limbs_[0] > static_cast<u64>(INT64_MAX)) throw std::overflow_error("BigInt: does not fit int64");
        return static_cast<long long>(limbs_[0]);
    }
    if (limbs_[0] > static_cast<u64>(INT64_MAX) + 1u) throw std::overflow_error("BigInt: does not fit int64");
    return -static_cast<long long>(limbs_[0] - 1) - 1;
}

BigInt BigInt::from_string(std::string_view s) {
    BigInt r;
    bool neg = false;
    size_t i = 0;
    if (i < s.size() && (s[i] == '+' || s[i] == '-')) {
        neg = s[i] == '-';
        ++i;
    }
    if (i == s.size()) throw std::invalid_argument("BigInt: empty numeral");
    static const u64 p10[20] = {1ull,10ull,100ull,1000ull,10000ull,100000ull,1000000ull,
        10000000ull,100000000ull,1000000000ull,10000000000ull,100000000000ull,
        1000000000000ull,10000000000000ull,100000000000000ull,1000000000000000ull,
        10000000000000000ull,100000000000000000ull,1000000000000000000ull,
        10000000000000000000ull};
    while (i < s.size()) {
        size_t take = std::min<size_t>(19, s.size() - i);
        u64 chunk = 0;
        for (size_t k = 0; k < take; ++k) {
            char c = s[i + k];
            if (c < '0' || c > '9') throw std::invalid_argument("BigInt: bad digit");
            chunk = chunk * 10 + static_cast<u64>(c - '0');
        }
        r = r * BigInt(p10[take]) + BigInt(chunk);
        i += take;
    }
    if (neg && !r.is_zero()) r.neg_ = true;
    return r;
}

std::string BigInt::to_string() const {
    if (is_zero()) return "0";
    BigInt t = abs();
    const BigInt base(10000000000000000000ull);  // 10^19
    std::vector<u64> chunks;
    while (!t.is_zero()) {
        auto [q, r] = divmod(t, base);
        chunks.push_back(r.is_zero() ? 0 : r.limbs_[0]);
        t = std::move(q);
    }
    std::string out;
    if (neg_) out.push_back('-');
    out += std::to_string(chunks.back());
    for (size_t i = chunks.size() - 1; i-- > 0;) {
        std::string part = std::to_string(chunks[i]);
        out += std::string(19 - part.size(), '0') + part;
    }
    return out;
}

std::ostream& operator<<(std::ostream& os, const BigInt& v) { return os << v.to_string(); }

} // namespace heis
