#include "heis/zpoly.hpp"

#include "heis/errors.hpp"

#include <algorithm>

namespace heis {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

namespace {

u64 mulmod(u64 a, u64 b, u64 m) { return static_cast<u64>(static_cast<u128>(a) * b % m); }

u64 powmod(u64 b, u64 e, u64 m) {
    u64 r = 1;
    b %= m;
    while (e) {
        if (e & 1u) r = mulmod(r, b, m);
        b = mulmod(b, b, m);
        e >>= 1u;
    }
    return r;
}

u64 invmod(u64 a, u64 p) { return powmod(a % p, p - 2, p); }

bool is_prime_u64(u64 n) {
    if (n < 2) return false;
    for (u64 p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n % p == 0) return n == p;
    }
    u64 d = n - 1;
    int s = 0;
    while ((d & 1u) == 0) { d >>= 1u; ++s; }
    for (u64 a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        u64 x = powmod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool witness = true;
        for (int i = 1; i < s; ++i) {
            x = mulmod(x, x, n);
            if (x == n - 1) { witness = false; break; }
        }
        if (witness) return false;
    }
    return true;
}

/// Deterministic sequence of ~62-bit primes used for modular images.
struct PrimeSource {
    u64 next_candidate = (1ull << 62) - 1;
    u64 next() {
        while (!is_prime_u64(next_candidate)) next_candidate -= 2;
        u64 p = next_candidate;
        next_candidate -= 2;
        return p;
    }
};

using PolyP = std::vector<u64>;  // ascending coefficients mod p, trimmed

void trim_p(PolyP& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

PolyP gcd_mod_p(PolyP a, PolyP b, u64 p) {
    trim_p(a);
    trim_p(b);
    while (!b.empty()) {
        // a mod b
        u64 inv_lb = invmod(b.back(), p);
        while (a.size() >= b.size()) {
            u64 c = mulmod(a.back(), inv_lb, p);
            size_t shift = a.size() - b.size();
            if (c != 0) {
                for (size_t i = 0; i < b.size(); ++i) {
                    u64 sub = mulmod(c, b[i], p);
                    u64& tgt = a[shift + i];
                    tgt = (tgt >= sub) ? (tgt - sub) : (tgt + (p - sub));
                }
            }
            a.pop_back();
            trim_p(a);
            if (a.empty()) break;
        }
        std::swap(a, b);
    }
    if (!a.empty()) {
        u64 inv = invmod(a.back(), p);
        for (auto& c : a) c = mulmod(c, inv, p);
    }
    return a;
}

}  // namespace

BigInt integer_content(const QPoly& p) {
    BigInt g(0);
    for (const auto& c : p.coeffs()) {
        if (!c.is_integer()) throw InternalError("integer_content: non-integer coefficient");
        g = gcd(g, c.num());
        if (g.is_one()) break;
    }
    return g;
}

BigInt denominator_lcm(const QPoly& p) {
    BigInt l(1);
    for (const auto& c : p.coeffs()) {
        const BigInt& d = c.den();
        l = l / gcd(l, d) * d;
    }
    return l;
}

QPoly primitive_part(const QPoly& p) {
    if (p.is_zero()) return p;
    BigInt l = denominator_lcm(p);
    std::vector<Rational> scaled;
    scaled.reserve(p.coeffs().size());
    for (const auto& c : p.coeffs()) scaled.push_back(c * Rational(l));
    QPoly q(std::move(scaled));
    BigInt g = integer_content(q);
    Rational scale = Rational(1, 1) / Rational(g);
    if (q.leading().sign() < 0) scale = -scale;
    return q * scale;
}

std::vector<u64> poly_mod_prime(const QPoly& p, u64 prime) {
    PolyP out;
    out.reserve(p.coeffs().size());
    for (const auto& c : p.coeffs()) {
        u64 dn = c.den().mod_u64(prime);
        if (dn == 0) throw InternalError("poly_mod_prime: denominator divisible by prime");
        out.push_back(mulmod(c.num().mod_u64(prime), invmod(dn, prime), prime));
    }
    trim_p(out);
    return out;
}

QPoly zpoly_gcd(const QPoly& a_in, const QPoly& b_in) {
    if (a_in.is_zero()) return primitive_part(b_in);
    if (b_in.is_zero()) return primitive_part(a_in);
    QPoly a = primitive_part(a_in);
    QPoly b = primitive_part(b_in);
    if (a.degree() < b.degree()) std::swap(a, b);

    const BigInt lc_bound = gcd(a.leading().num(), b.leading().num());

    PrimeSource primes;
    int gdeg = INT_MAX;
    // CRT accumulator for lc_bound * monic_gcd mod `modulus` (least
    // non-negative residues).  Stabilization is detected on the symmetric
    // lift, which is what converges for negative true coefficients.
    std::vector<BigInt> acc;
    BigInt modulus(1);
    std::vector<BigInt> prev_lift;

    for (int iter = 0; iter < 256; ++iter) {
        u64 p = primes.next();
        if (a.leading().num().mod_u64(p) == 0 || b.leading().num().mod_u64(p) == 0) continue;
        PolyP g = gcd_mod_p(poly_mod_prime(a, p), poly_mod_prime(b, p), p);
        const int dg = static_cast<int>(g.size()) - 1;
        if (dg == 0) return QPoly(Rational(1));
        if (dg > gdeg) continue;  // unlucky prime
        u64 lcm = lc_bound.mod_u64(p);
        for (auto& c : g) c = mulmod(c, lcm, p);
        if (dg < gdeg) {
            // Every previous prime was unlucky; restart accumulation.
            gdeg = dg;
            acc.assign(g.size(), BigInt(0));
            modulus = BigInt(1);
            prev_lift.clear();
        }
        // Garner step: acc' = acc + modulus * t, t = (g - acc)/modulus mod p.
        const u64 minv = invmod(modulus.mod_u64(p), p);
        for (size_t k = 0; k < g.size(); ++k) {
            u64 ak = acc[k].mod_u64(p);
            u64 diff = g[k] >= ak ? g[k] - ak : g[k] + (p - ak);
            u64 t = mulmod(diff, minv, p);
            if (t != 0) acc[k] += modulus * BigInt(t);
        }
        modulus *= BigInt(p);
        std::vector<BigInt> lift;
        lift.reserve(acc.size());
        const BigInt half = modulus / BigInt(2);
        for (const auto& c : acc) lift.push_back(c > half ? c - modulus : c);
        if (lift != prev_lift) {
            prev_lift = std::move(lift);
            continue;
        }
        // Stable under a fresh prime: verify the candidate by division,
        // after a cheap divisibility check modulo one more prime.
        std::vector<Rational> cand(lift.begin(), lift.end());
        QPoly candidate = primitive_part(QPoly(std::move(cand)));
        if (!candidate.is_zero()) {
            u64 q = primes.next();
            while (candidate.leading().num().mod_u64(q) == 0) q = primes.next();
            auto rem_mod = [&](const QPoly& f) {
                PolyP fr = poly_mod_prime(f, q);
                PolyP cr = poly_mod_prime(candidate, q);
                u64 inv_lc = invmod(cr.back(), q);
                while (fr.size() >= cr.size()) {
                    u64 c = mulmod(fr.back(), inv_lc, q);
                    size_t shift = fr.size() - cr.size();
                    for (size_t i = 0; i < cr.size(); ++i) {
                        u64 sub = mulmod(c, cr[i], q);
                        u64& tgt = fr[shift + i];
                        tgt = (tgt >= sub) ? (tgt - sub) : (tgt + (q - sub));
                    }
                    fr.pop_back();
                    trim_p(fr);
                }
                return fr.empty();
            };
            if (rem_mod(a) && rem_mod(b)) {
                try {
                    exact_divide(a, candidate);
                    exact_divide(b, candidate);
                    return candidate;
                } catch (const NonDivisibleError&) {
                    // not enough primes yet
                }
            }
        }
        prev_lift = std::move(lift);
    }
    throw InternalError("zpoly_gcd: failed to stabilize CRT reconstruction");
}

QPoly zpoly_gcd(const QPoly& a, const QPoly& b, const QPoly& c) {
    return zpoly_gcd(zpoly_gcd(a, b), c);
}

} // namespace heis
