#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>

namespace kbb {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

/// Internal invariant violations (CLI maps these to exit code 3).
class invariant_error : public std::runtime_error {
public:
    explicit invariant_error(const std::string& what) : std::runtime_error(what) {}
};

inline Int abs_int(const Int& a) { return a < 0 ? Int(-a) : a; }

inline Int gcd_int(Int a, Int b) {
    a = abs_int(a);
    b = abs_int(b);
    while (b != 0) {
        Int r = a % b;
        a = b;
        b = r;
    }
    return a;
}

/// Extended gcd: returns g = gcd(a,b) and x, y with a*x + b*y = g, g >= 0.
inline Int gcd_ext(const Int& a, const Int& b, Int& x, Int& y) {
    if (b == 0) {
        if (a < 0) {
            x = -1;
            y = 0;
            return -a;
        }
        x = 1;
        y = 0;
        return a;
    }
    Int x1, y1;
    Int g = gcd_ext(b, a % b, x1, y1);
    x = y1;
    y = x1 - (a / b) * y1;
    return g;
}

/// Reduce a into [0, m) for m > 0.
inline Int mod_floor(const Int& a, const Int& m) {
    if (m <= 0) throw std::invalid_argument("mod_floor: modulus must be positive");
    Int r = a % m;
    if (r < 0) r += m;
    return r;
}

/// Reduce a rational into [0, bound) by shifting by integer multiples of bound.
inline Rat mod_rat(const Rat& x, const Rat& bound) {
    using boost::multiprecision::numerator;
    using boost::multiprecision::denominator;
    Rat q = x / bound;
    Int fl = numerator(q) / denominator(q);
    if (q < 0 && q != Rat(fl)) fl -= 1;
    Rat r = x - Rat(fl) * bound;
    if (r < 0) r += bound;    // guard against exact-boundary rounding
    if (r >= bound) r -= bound;
    return r;
}

inline bool is_prime(const Int& n) {
    if (n < 2) return false;
    if (n < 4) return true;
    if (n % 2 == 0) return false;
    for (Int d = 3; d * d <= n; d += 2)
        if (n % d == 0) return false;
    return true;
}

inline Int isqrt_floor(const Int& n) {
    if (n < 0) throw std::invalid_argument("isqrt_floor: negative argument");
    if (n == 0) return 0;
    Int x = n, y = (x + 1) / 2;
    while (y < x) {
        x = y;
        y = (x + n / x) / 2;
    }
    return x;
}

inline Int pow_int(const Int& base, unsigned exp) {
    Int r = 1, b = base;
    for (unsigned e = exp; e > 0; e >>= 1) {
        if (e & 1) r *= b;
        b *= b;
    }
    return r;
}

inline Int pow_mod(Int base, Int exp, const Int& mod) {
    if (mod <= 0) throw std::invalid_argument("pow_mod: modulus must be positive");
    Int r = 1;
    base = mod_floor(base, mod);
    while (exp > 0) {
        if (exp % 2 == 1) r = (r * base) % mod;
        base = (base * base) % mod;
        exp /= 2;
    }
    return r;
}

/// Euler criterion: +1 if a is a nonzero square mod odd prime p, -1 if a nonsquare,
/// 0 if p | a.
inline int square_class(const Int& a, const Int& p) {
    Int r = mod_floor(a, p);
    if (r == 0) return 0;
    Int e = pow_mod(r, (p - 1) / 2, p);
    return e == 1 ? 1 : -1;
}

/// Smallest square root of a mod odd prime p, by exhaustive scan (desk-scale p).
inline Int sqrt_mod(const Int& a, const Int& p) {
    Int r = mod_floor(a, p);
    for (Int x = 0; x < p; ++x)
        if ((x * x) % p == r) return x;
    throw std::invalid_argument("sqrt_mod: not a square");
}

inline Int inv_mod(const Int& a, const Int& p) {
    Int x, y;
    Int g = gcd_ext(mod_floor(a, p), p, x, y);
    if (g != 1) throw std::invalid_argument("inv_mod: not invertible");
    return mod_floor(x, p);
}

}  // namespace kbb
