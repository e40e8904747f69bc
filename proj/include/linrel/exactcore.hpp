#pragma once

#include <algorithm>
#include <span>
#include <stdexcept>

#include "linrel/error.hpp"
#include "linrel/rational.hpp"

// Pochhammer symbols, factorials and the small integer helpers shared by the
// closed-form coefficient formulas. Everything is exact; nothing here touches
// floating point.

namespace linrel {

/// Rising factorial (z)_n = z(z+1)...(z+n-1), (z)_0 = 1.
inline Rat pochhammer(const Rat& z, int n) {
    if (n < 0) throw std::invalid_argument("pochhammer: negative length");
    Rat r(1);
    Rat f = z;
    for (int i = 0; i < n; ++i) {
        r *= f;
        if (r.is_zero()) return r;
        f += Rat(1);
    }
    return r;
}

/// (z_1, ..., z_k)_n, the product of the individual Pochhammer symbols.
inline Rat pochhammer_list(std::span<const Rat> zs, int n) {
    Rat r(1);
    for (const auto& z : zs) {
        r *= pochhammer(z, n);
        if (r.is_zero()) break;
    }
    return r;
}

inline Rat pochhammer_list(std::initializer_list<Rat> zs, int n) {
    return pochhammer_list(std::span<const Rat>(zs.begin(), zs.size()), n);
}

/// 1/(z)_n for any integer n, using (z)_{-r} = 1/(z-r)_r when n < 0.
/// Throws FormulaPole when (z)_n vanishes for n >= 0.
inline Rat reciprocal_pochhammer(const Rat& z, int n) {
    if (n < 0) return pochhammer(z + Rat(n), -n);
    Rat p = pochhammer(z, n);
    if (p.is_zero()) throw FormulaPole("reciprocal of a vanishing Pochhammer symbol");
    return Rat(1) / p;
}

/// (c)_a / (c)_b without forming either factor when they would cancel.
/// Finite whenever the shorter product is a prefix of the longer one.
inline Rat pochhammer_ratio(const Rat& c, int a, int b) {
    if (a >= b) return pochhammer(c + Rat(b), a - b);
    return reciprocal_pochhammer(c + Rat(a), b - a);
}

inline mpz_class factorial(int n) {
    if (n < 0) throw std::invalid_argument("factorial: negative argument");
    mpz_class r;
    mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
    return r;
}

inline Rat factorial_rat(int n) { return Rat(factorial(n)); }

/// 1/n!, extended by 1/Gamma(n+1) = 0 for negative integers n.
inline Rat reciprocal_factorial(int n) {
    if (n < 0) return Rat(0);
    return Rat(1) / factorial_rat(n);
}

/// floor(x/2), rounding toward negative infinity.
constexpr long floor_half(long x) { return (x >= 0) ? x / 2 : -((-x + 1) / 2); }

constexpr bool is_even(long x) { return x % 2 == 0; }

constexpr int min2(int m, int n) { return std::min(m, n); }
constexpr int max2(int m, int n) { return std::max(m, n); }

}  // namespace linrel
