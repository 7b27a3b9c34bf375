#pragma once

#include "heis/poly.hpp"

#include <cstdint>
#include <vector>

namespace heis {

/// Integer-coefficient polynomial helpers used by the exact-charge
/// reduction.  "ZPoly" values are Polynomial<Rational> whose coefficients
/// are all integers; the content/primitive routines keep them that way.

/// gcd of all (integer) coefficients, non-negative; 0 for the zero polynomial.
BigInt integer_content(const QPoly& p);

/// Least common multiple of the coefficient denominators.
BigInt denominator_lcm(const QPoly& p);

/// Scales to integer coefficients with content 1 and positive leading
/// coefficient.  Returns the primitive part (zero stays zero).
QPoly primitive_part(const QPoly& p);

/// Exact gcd over Z[x] via modular images and CRT reconstruction.
/// Inputs may have rational coefficients (they are made primitive first);
/// the result is primitive with positive leading coefficient.
QPoly zpoly_gcd(const QPoly& a, const QPoly& b);

/// Convenience three-way gcd.
QPoly zpoly_gcd(const QPoly& a, const QPoly& b, const QPoly& c);

/// Reduction of p modulo a word prime (coefficients mapped through
/// num * den^-1 mod prime).  Throws InternalError if a denominator is
/// divisible by the prime.
std::vector<std::uint64_t> poly_mod_prime(const QPoly& p, std::uint64_t prime);

} // namespace heis
