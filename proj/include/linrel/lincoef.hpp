#pragma once

#include <algorithm>
#include <array>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "linrel/error.hpp"
#include "linrel/exactcore.hpp"
#include "linrel/families.hpp"
#include "linrel/hyper.hpp"
#include "linrel/oracle.hpp"

// Closed-form linearization coefficients and product-integral ratios.
// Every function normalizes its degree arguments itself, so callers may pass
// them in any order. Coefficient functions reject k outside their range;
// integral ratios are zero-extended (negative degrees included).

namespace linrel {

namespace detail {

// Poles inside a closed form are formula poles, whatever layer trips on them.
inline Rat closed_series(std::vector<Rat> num, std::vector<Rat> den, const Rat& z) {
    try {
        return pfq_eval(HypSeriesSpec{std::move(num), std::move(den), z});
    } catch (const DenominatorPole& e) {
        throw FormulaPole(e.what());
    }
}

inline void require_k(bool ok, const char* what) {
    if (!ok) throw IndexOutOfRange(std::string(what) + ": k outside its range");
}

inline std::array<int, 3> sorted3(int a, int b, int c) {
    std::array<int, 3> t{a, b, c};
    std::sort(t.begin(), t.end());
    return t;
}

inline Rat half(long v) { return Rat(v, 2); }

}  // namespace detail

// ---------------------------------------------------------------------------
// Gegenbauer

/// Coefficient of C_{m+n-2k} in C_m C_n.
inline Rat geg_B(int k, int m, int n, const Rat& l) {
    if (m > n) std::swap(m, n);
    detail::require_k(m >= 0 && k >= 0 && k <= m, "geg_B");
    return (l + Rat(m + n - 2 * k)) * factorial_rat(m + n - 2 * k) * pochhammer(l, k) * pochhammer(l, m - k) *
           pochhammer(l, n - k) * pochhammer(Rat(2) * l, m + n - k) /
           ((l + Rat(m + n - k)) * factorial_rat(k) * factorial_rat(m - k) * factorial_rat(n - k) *
            pochhammer(l, m + n - k) * pochhammer(Rat(2) * l, m + n - 2 * k));
}

namespace detail {

// 0 <= k <= p-1, with p <= m <= n.
inline Rat geg_D(int k, int p, int m, int n, const Rat& l) {
    const Rat l2 = Rat(2) * l;
    const Rat pre = factorial_rat(m + n) * pochhammer(l, m) * pochhammer(l, n) * (l + Rat(m + n + p - 2 * k)) *
                    factorial_rat(m + n + p - 2 * k) * pochhammer(l, k) * pochhammer(l, p - k) *
                    pochhammer(l, m + n - k) * pochhammer(l2, m + n + p - k) /
                    (factorial_rat(m) * factorial_rat(n) * pochhammer(l, m + n) * (l + Rat(m + n + p - k)) *
                     factorial_rat(k) * factorial_rat(p - k) * factorial_rat(m + n - k) *
                     pochhammer(l, m + n + p - k) * pochhammer(l2, m + n + p - 2 * k));
    const int mn = m + n;
    std::vector<Rat> num{l,
                         l + Rat(p - k),
                         Rat(-k),
                         Rat(-m),
                         Rat(-n),
                         Rat(-mn + k),
                         -l - Rat(mn),
                         -l - Rat(mn + p - k),
                         (-l + Rat(2 - mn)) / Rat(2),
                         (-l2 + Rat(1 - mn)) / Rat(2),
                         (-l2 + Rat(2 - mn)) / Rat(2)};
    std::vector<Rat> den{Rat(1 + p - k),
                         -l + Rat(1 - k),
                         -l + Rat(1 - m),
                         -l + Rat(1 - n),
                         -l + Rat(1 - mn + k),
                         -l2 + Rat(1 - mn),
                         -l2 + Rat(1 - mn - p + k),
                         (-l - Rat(mn)) / Rat(2),
                         half(-mn),
                         half(1 - mn)};
    return pre * closed_series(std::move(num), std::move(den), Rat(1));
}

// p <= k <= floor((p+m+n)/2), with p <= m <= n.
inline Rat geg_E(int k, int p, int m, int n, const Rat& l) {
    if (k > m + p) return Rat(0);
    const Rat l2 = Rat(2) * l;
    const int mn = m + n;
    const Rat pre = (l + Rat(mn + p - 2 * k)) * factorial_rat(mn + 2 * p - 2 * k) * pochhammer(l, p) *
                    pochhammer(l, k - p) * pochhammer(l, m + p - k) * pochhammer(l, n + p - k) *
                    pochhammer(l, mn + p - 2 * k) * pochhammer(l2, mn + p - k) /
                    ((l + Rat(mn + p - k)) * factorial_rat(p) * factorial_rat(k - p) * factorial_rat(m + p - k) *
                     factorial_rat(n + p - k) * pochhammer(l, mn + p - k) * pochhammer(l, mn + 2 * p - 2 * k) *
                     pochhammer(l2, mn + p - 2 * k));
    const int d = 2 * k - 2 * p - mn;
    std::vector<Rat> num{l,
                         l + Rat(k - p),
                         Rat(-p),
                         Rat(-m - p + k),
                         Rat(-n - p + k),
                         Rat(-mn - p + 2 * k),
                         -l - Rat(mn + p - k),
                         -l - Rat(mn + 2 * p - 2 * k),
                         (-l + Rat(d + 2)) / Rat(2),
                         (-l2 + Rat(1 + d)) / Rat(2),
                         (-l2 + Rat(2 + d)) / Rat(2)};
    std::vector<Rat> den{Rat(1 + k - p),
                         -l + Rat(1 - p),
                         -l + Rat(1 - m - p + k),
                         -l + Rat(1 - n - p + k),
                         -l + Rat(1 - mn - p + 2 * k),
                         -l2 + Rat(1 - mn - p + k),
                         -l2 + Rat(1 + d),
                         (-l + Rat(d)) / Rat(2),
                         half(d),
                         half(1 + d)};
    return pre * closed_series(std::move(num), std::move(den), Rat(1));
}

}  // namespace detail

/// Coefficient of C_{p+m+n-2k} in C_p C_m C_n.
inline Rat geg_F(int k, int p, int m, int n, const Rat& l) {
    const auto [pp, mm, nn] = detail::sorted3(p, m, n);
    detail::require_k(pp >= 0 && k >= 0 && k <= (pp + mm + nn) / 2, "geg_F");
    return k <= pp - 1 ? detail::geg_D(k, pp, mm, nn, l) : detail::geg_E(k, pp, mm, nn, l);
}

/// (integral of C_p C_m C_n times the weight) / h_0.
inline Rat geg_triple_integral_ratio(int p, int m, int n, const Rat& l) {
    const auto fam = FamilySpec::gegenbauer(l);
    fam.require_orthogonality();
    if (std::min({p, m, n}) < 0) return Rat(0);
    if (p < std::abs(n - m) || p > n + m || !is_even(m + n - p)) return Rat(0);
    return norm_ratio(fam, p) * geg_B((m + n - p) / 2, m, n, l);
}

/// (integral of C_p C_m C_n C_l times the weight) / h_0.
inline Rat geg_quad_integral_ratio(int p, int m, int n, int l, const Rat& lambda) {
    const auto fam = FamilySpec::gegenbauer(lambda);
    fam.require_orthogonality();
    if (std::min({p, m, n, l}) < 0) return Rat(0);
    const int total = p + m + n;
    if (l > total || !is_even(total - l)) return Rat(0);
    return norm_ratio(fam, l) * geg_F((total - l) / 2, p, m, n, lambda);
}

/// Evaluating the three-factor expansion at x = 1, where C_n(1) = (2λ)_n/n!:
/// left side minus right side. Exactly 0 when geg_F is right.
inline Rat geg_x1_identity_residual(int p, int m, int n, const Rat& l) {
    FamilySpec::gegenbauer(l).require_orthogonality();
    const auto [pp, mm, nn] = detail::sorted3(p, m, n);
    const Rat l2 = Rat(2) * l;
    const int N = pp + mm + nn;
    const Rat lhs = pochhammer(l2, pp) * pochhammer(l2, mm) * pochhammer(l2, nn) /
                    (factorial_rat(pp) * factorial_rat(mm) * factorial_rat(nn));
    Rat sum(0);
    for (int k = 0; k <= N / 2; ++k) {
        sum += geg_F(k, pp, mm, nn, l) * pochhammer(detail::half(-N), k) * pochhammer(detail::half(-N + 1), k) /
               (pochhammer((-l2 + Rat(1 - N)) / Rat(2), k) * pochhammer((-l2 + Rat(2 - N)) / Rat(2), k));
    }
    return lhs - pochhammer(l2, N) / factorial_rat(N) * sum;
}

// ---------------------------------------------------------------------------
// Hermite

/// Coefficient of H_{m+n-2k} in H_m H_n.
inline Rat herm_b(int k, int m, int n) {
    if (m > n) std::swap(m, n);
    detail::require_k(m >= 0 && k >= 0 && k <= m, "herm_b");
    return pow(Rat(2), k) * factorial_rat(m) * factorial_rat(n) /
           (factorial_rat(k) * factorial_rat(m - k) * factorial_rat(n - k));
}

/// (integral of H_p H_m H_n e^{-x^2}) / sqrt(pi).
inline Rat herm_triple_integral_ratio(int p, int m, int n) {
    if (std::min({p, m, n}) < 0) return Rat(0);
    if (p > n + m || m > n + p || n > m + p || !is_even(p + m + n)) return Rat(0);
    return factorial_rat(m) * factorial_rat(n) * factorial_rat(p) * pow(Rat(2), (p + m + n) / 2) *
           reciprocal_factorial((m + n - p) / 2) * reciprocal_factorial((m + p - n) / 2) *
           reciprocal_factorial((n + p - m) / 2);
}

namespace detail {

inline Rat herm_d(int k, int p, int m, int n) {
    const Rat pre = factorial_rat(m + n) * factorial_rat(p) * pow(Rat(2), k) * reciprocal_factorial(k) *
                    reciprocal_factorial(p - k) * reciprocal_factorial(m + n - k);
    return pre * closed_series({Rat(-k), Rat(-m), Rat(-n), Rat(-m - n + k)},
                               {Rat(1 + p - k), half(-m - n), half(1 - m - n)}, Rat(1, 4));
}

inline Rat herm_e(int k, int p, int m, int n) {
    if (k > m + p) return Rat(0);
    const Rat pre = factorial_rat(m) * factorial_rat(n) * factorial_rat(m + n + 2 * p - 2 * k) * pow(Rat(2), k) *
                    reciprocal_factorial(k - p) * reciprocal_factorial(m + p - k) *
                    reciprocal_factorial(n + p - k) * reciprocal_factorial(p + m + n - 2 * k);
    return pre * closed_series({Rat(-p), Rat(-m - p + k), Rat(-n - p + k), Rat(-m - n - p + 2 * k)},
                               {Rat(1 + k - p), half(2 * k - 2 * p - m - n), half(1 + 2 * k - 2 * p - m - n)},
                               Rat(1, 4));
}

}  // namespace detail

/// Coefficient of H_{p+m+n-2k} in H_p H_m H_n.
inline Rat herm_f(int k, int p, int m, int n) {
    const auto [pp, mm, nn] = detail::sorted3(p, m, n);
    detail::require_k(pp >= 0 && k >= 0 && k <= (pp + mm + nn) / 2, "herm_f");
    return k <= pp - 1 ? detail::herm_d(k, pp, mm, nn) : detail::herm_e(k, pp, mm, nn);
}

/// (integral of H_k H_p H_m H_n e^{-x^2}) / sqrt(pi).
inline Rat herm_quad_integral_ratio(int k, int p, int m, int n) {
    if (std::min({k, p, m, n}) < 0) return Rat(0);
    const auto sorted = detail::sorted3(p, m, n);
    p = sorted[0];
    m = sorted[1];
    n = sorted[2];
    const long total = long(k) + p + m + n;
    if (!is_even(total)) return Rat(0);
    const auto h = [](long v) { return static_cast<int>(floor_half(v)); };
    if (k <= m + n - p) {
        const Rat pre = factorial_rat(m) * factorial_rat(n) * factorial_rat(p + k) * pow(Rat(2), h(total)) *
                        reciprocal_factorial(h(m + n - p - k)) * reciprocal_factorial(h(k + p + n - m)) *
                        reciprocal_factorial(h(k + p + m - n));
        if (pre.is_zero()) return pre;
        return pre * detail::closed_series({Rat(-k), Rat(-p), Rat(h(n - m - p - k)), Rat(h(m - n - p - k))},
                                           {Rat(1 + h(m + n - p - k)), detail::half(-k - p), detail::half(1 - k - p)}, Rat(1, 4));
    }
    if (k >= m + n - p + 2 && k <= m + n + p) {
        const Rat pre = factorial_rat(k) * factorial_rat(p) * factorial_rat(m + n) * pow(Rat(2), h(total)) *
                        reciprocal_factorial(h(k + p - m - n)) * reciprocal_factorial(h(m + n + p - k)) *
                        reciprocal_factorial(h(m + n + k - p));
        if (pre.is_zero()) return pre;
        return pre * detail::closed_series({Rat(-m), Rat(-n), Rat(h(p - k - m - n)), Rat(h(k - p - m - n))},
                                           {Rat(1 + h(p + k - m - n)), detail::half(-m - n), detail::half(1 - m - n)}, Rat(1, 4));
    }
    return Rat(0);
}

// ---------------------------------------------------------------------------
// Jacobi

/// `misprinted` reproduces an old typo: (-s-2m)_k written without the
/// subscript. Kept so tests can show it breaks oracle equivalence.
enum class JacobiForm { corrected, misprinted };

/// `cancelled` folds (α-β)_k into the 9F8 series so α = β is regular;
/// `direct` evaluates the 9F8 as displayed (poles when α = β).
enum class JacobiRoute { cancelled, direct };

/// Coefficient of P_{k+n-m} in P_m P_n (normalized so n >= m).
inline Rat jac_a(int k, int m, int n, const Rat& a, const Rat& b, JacobiForm form = JacobiForm::corrected,
                 JacobiRoute route = JacobiRoute::cancelled) {
    if (m > n) std::swap(m, n);
    detail::require_k(m >= 0 && k >= 0 && k <= 2 * m, "jac_a");
    const Rat s = a + b;
    const int d = n - m;
    const Rat pre = pochhammer(a + Rat(1), n) * pochhammer(b + Rat(1), n) * pochhammer(s + Rat(1), 2 * d) *
                    pochhammer(s + Rat(1), 2 * m) * (s + Rat(1 + 2 * d + 2 * k)) /
                    (factorial_rat(m) * pochhammer(s + Rat(1), m) * pochhammer(a + Rat(1), d) *
                     pochhammer(b + Rat(1), d) * pochhammer(s + Rat(2), 2 * n) * (s + Rat(1)));
    const Rat last = form == JacobiForm::corrected ? pochhammer(-s - Rat(2 * m), k) : -s - Rat(2 * m);
    const Rat pre2 = pochhammer(Rat(d + 1), k) * pochhammer(s + Rat(2 * d + 1), k) *
                     pochhammer(Rat(2) * s + Rat(2 * n + 2), k) * pochhammer(Rat(-2 * m), k) /
                     (factorial_rat(k) * pochhammer(Rat(2) * b + Rat(2 * d + 2), k) * pochhammer(a + Rat(d + 1), k) *
                      pochhammer(s + Rat(2 * n + 2), k) * last);
    const Rat bh = b + Rat(d) + Rat(1, 2);
    std::vector<Rat> num{bh,
                         (bh + Rat(2)) / Rat(2),
                         b + Rat(1, 2),
                         b + Rat(n + 1),
                         -a - Rat(m),
                         (s + Rat(k + 1)) / Rat(2) + Rat(d),
                         (s + Rat(k + 2)) / Rat(2) + Rat(d),
                         detail::half(-k),
                         detail::half(1 - k)};
    std::vector<Rat> den{bh / Rat(2),
                         Rat(d + 1),
                         Rat(1, 2) - Rat(m),
                         s + Rat(n) + Rat(3, 2),
                         detail::half(k + 2) + b + Rat(d),
                         detail::half(k + 3) + b + Rat(d)};
    const Rat diff = a - b;
    if (route == JacobiRoute::direct) {
        // the series stops at j = floor(k/2); a zero denominator inside that range is a pole
        den.push_back((b - a + Rat(1 - k)) / Rat(2));
        den.push_back((b - a + Rat(2 - k)) / Rat(2));
        Rat sum(0);
        for (int j = 0; 2 * j <= k; ++j) {
            Rat t = Rat(1) / factorial_rat(j);
            for (const auto& x : num) t *= pochhammer(x, j);
            for (const auto& x : den) {
                const Rat q = pochhammer(x, j);
                if (q.is_zero()) throw FormulaPole("jac_a: direct route has a vanishing denominator");
                t /= q;
            }
            sum += t;
        }
        return pre * pre2 * pochhammer(diff, k) * sum;
    }
    // (α-β)_k / (((β-α-k+1)/2)_j ((β-α-k+2)/2)_j) = 4^j (α-β)_{k-2j}
    Rat sum(0);
    for (int j = 0; 2 * j <= k; ++j) {
        Rat t = pow(Rat(4), j) * pochhammer(diff, k - 2 * j) / factorial_rat(j);
        for (const auto& x : num) t *= pochhammer(x, j);
        for (const auto& x : den) t /= pochhammer(x, j);
        sum += t;
    }
    return pre * pre2 * sum;
}

/// (integral of P_l P_m P_n times the weight) / h_0.
inline Rat jac_triple_integral_ratio(int l, int m, int n, const Rat& a, const Rat& b) {
    const auto fam = FamilySpec::jacobi(a, b);
    fam.require_orthogonality();
    if (std::min({l, m, n}) < 0) return Rat(0);
    if (m > n) std::swap(m, n);
    if (l < n - m || l > n + m) return Rat(0);
    return norm_ratio(fam, l) * jac_a(l + m - n, m, n, a, b);
}

// ---------------------------------------------------------------------------
// Laguerre

/// Coefficient of L_k in L_m L_n, for n-m <= k <= n+m (normalized so n >= m).
inline Rat lag_lin_coeff(int k, int m, int n, const Rat& al) {
    if (m > n) std::swap(m, n);
    detail::require_k(m >= 0 && k >= n - m && k <= n + m, "lag_lin_coeff");
    const Rat pre = pow(Rat(4), m) * pochhammer(Rat(1, 2), m) * pochhammer(al + Rat(1), n) / factorial_rat(n - m);
    const Rat sign((k + n + m) % 2 == 0 ? 1 : -1);
    const Rat t = sign * factorial_rat(k) /
                  (pochhammer(al + Rat(1), k) * factorial_rat(m + n - k) * factorial_rat(k - n + m));
    return pre * t *
           detail::closed_series({-Rat(m) - al, detail::half(n - m - k), detail::half(n - m - k + 1)},
                                 {Rat(n - m + 1), Rat(1, 2) - Rat(m)}, Rat(1));
}

/// (integral of L_p L_m L_n x^α e^{-x}) / Γ(α+1).
inline Rat lag_triple_integral_ratio(int p, int m, int n, const Rat& al) {
    FamilySpec::laguerre(al).require_orthogonality();
    if (std::min({p, m, n}) < 0) return Rat(0);
    const int lo = std::min(m, n), hi = std::max(m, n), d = hi - lo;
    if (p < d || p > m + n) return Rat(0);
    const Rat sign((p + m + n) % 2 == 0 ? 1 : -1);
    const Rat pre = pochhammer(al + Rat(1), hi) * sign * pow(Rat(4), lo) * pochhammer(Rat(1, 2), lo) /
                    (factorial_rat(d) * factorial_rat(m + n - p) * factorial_rat(p - d));
    return pre * detail::closed_series({-al - Rat(lo), detail::half(d - p), detail::half(d - p + 1)},
                                       {Rat(1 + d), Rat(1, 2) - Rat(lo)}, Rat(1));
}

namespace detail {

inline void require_scaled_domain(const Rat& al, const Rat& a, const Rat& b) {
    FamilySpec::laguerre(al).require_orthogonality();
    if (a.sign() <= 0 || b.sign() <= 0) throw InvalidOrthogonalityDomain("scaled Laguerre needs a, b > 0");
}

}  // namespace detail

/// (integral of L_p(x) L_m(ax) L_n(bx) x^α e^{-x}) / Γ(α+1) as a double sum.
inline Rat scaled_lag_double_sum(int p, int m, int n, const Rat& al, const Rat& a, const Rat& b) {
    detail::require_scaled_domain(al, a, b);
    if (std::min({p, m, n}) < 0 || p > n + m) return Rat(0);
    const Rat c = al + Rat(p - m + 1);
    const Rat pre = pochhammer(al + Rat(1), n) * Rat(m % 2 == 0 ? 1 : -1) /
                    (factorial_rat(p) * factorial_rat(m) * factorial_rat(n + m - p)) * pow(-a / b, m) * pow(b, p);
    const Rat x = -b / a;
    Rat sum(0);
    for (int k = 0; k <= m; ++k) {
        for (int l = 0; l <= n + m - p - k; ++l) {
            Rat t = pochhammer(Rat(-m), k) * pochhammer(-al - Rat(m), k) * pochhammer(Rat(p + 1), l) *
                    pochhammer(al + Rat(1 + p), l) * pochhammer(Rat(p - n - m), k + l) *
                    pochhammer_ratio(c, m, k + l) * reciprocal_pochhammer(Rat(p + 1), k + l - m) /
                    (factorial_rat(k) * factorial_rat(l));
            sum += t * pow(x, k) * pow(b, l);
        }
    }
    return pre * sum;
}

/// Same integral as a terminating Kampé de Fériet series; needs p >= m.
inline Rat scaled_lag_kdf(int p, int m, int n, const Rat& al, const Rat& a, const Rat& b) {
    detail::require_scaled_domain(al, a, b);
    if (std::min({p, m, n}) < 0 || p > n + m) return Rat(0);
    if (p < m) throw IndexOutOfRange("scaled_lag_kdf: needs p >= m");
    const Rat pre = pochhammer(al + Rat(1), n) * pochhammer(-al - Rat(p), m) /
                    (factorial_rat(m) * factorial_rat(p - m) * factorial_rat(n + m - p)) * pow(-a / b, m) * pow(b, p);
    KdFSpec spec{{Rat(p - n - m)},
                 {Rat(-m), -al - Rat(m)},
                 {Rat(p + 1), al + Rat(p + 1)},
                 {Rat(p - m + 1), al + Rat(p - m + 1)},
                 {},
                 {},
                 -b / a,
                 b};
    try {
        return pre * kdf_eval(spec);
    } catch (const DenominatorPole& e) {
        throw FormulaPole(e.what());
    }
}

/// Double sum, cross-checked against the KdF form when p >= m.
inline Rat scaled_lag_integral_ratio(int p, int m, int n, const Rat& al, const Rat& a, const Rat& b) {
    const Rat v = scaled_lag_double_sum(p, m, n, al, a, b);
    if (p >= m && m >= 0 && n >= 0) {
        const Rat w = scaled_lag_kdf(p, m, n, al, a, b);
        if (v != w)
            throw InternalInconsistency("scaled Laguerre: double sum " + v.str() + " != KdF " + w.str() + " at (" +
                                        std::to_string(p) + "," + std::to_string(m) + "," + std::to_string(n) + ")");
    }
    return v;
}

// ---------------------------------------------------------------------------
// Dispatchers

/// Closed-form expansion of a product of two (or, for Gegenbauer and
/// Hermite, three) family polynomials.
inline LinExpansion linearize_closed_form(const FamilySpec& fam, std::span<const int> degrees) {
    for (int d : degrees)
        if (d < 0) throw IndexOutOfRange("linearize_closed_form: negative degree");
    LinExpansion out{fam, {}};
    auto put = [&](int deg, const Rat& c) {
        if (!c.is_zero()) out.coeffs.emplace(deg, c);
    };
    const std::size_t count = degrees.size();
    switch (fam.kind) {
        case FamilyKind::gegenbauer:
        case FamilyKind::hermite: {
            const bool geg = fam.kind == FamilyKind::gegenbauer;
            if (count == 2) {
                const int m = std::min(degrees[0], degrees[1]), n = std::max(degrees[0], degrees[1]);
                for (int k = 0; k <= m; ++k) put(m + n - 2 * k, geg ? geg_B(k, m, n, fam.lambda) : herm_b(k, m, n));
                return out;
            }
            if (count == 3) {
                const int N = degrees[0] + degrees[1] + degrees[2];
                for (int k = 0; k <= N / 2; ++k)
                    put(N - 2 * k, geg ? geg_F(k, degrees[0], degrees[1], degrees[2], fam.lambda)
                                       : herm_f(k, degrees[0], degrees[1], degrees[2]));
                return out;
            }
            break;
        }
        case FamilyKind::jacobi:
            if (count == 2) {
                const int m = std::min(degrees[0], degrees[1]), n = std::max(degrees[0], degrees[1]);
                for (int k = 0; k <= 2 * m; ++k) put(k + n - m, jac_a(k, m, n, fam.alpha, fam.beta));
                return out;
            }
            break;
        case FamilyKind::laguerre:
            if (count == 2) {
                const int m = std::min(degrees[0], degrees[1]), n = std::max(degrees[0], degrees[1]);
                for (int k = n - m; k <= n + m; ++k) put(k, lag_lin_coeff(k, m, n, fam.alpha));
                return out;
            }
            break;
        case FamilyKind::scaled_laguerre:
            break;
    }
    throw std::invalid_argument("linearize_closed_form: no closed form for " + std::to_string(count) + " " +
                                fam.name() + " factors");
}

inline LinExpansion linearize_closed_form(const FamilySpec& fam, std::initializer_list<int> degrees) {
    return linearize_closed_form(fam, std::span<const int>(degrees.begin(), degrees.size()));
}

/// Closed-form product-integral ratio (integral / h_0). Two degrees give the
/// orthogonality relation; three (and four for Gegenbauer and Hermite) use
/// the product formulas.
inline Rat integral_ratio_closed_form(const FamilySpec& fam, std::span<const int> degrees) {
    fam.require_orthogonality();
    const std::size_t count = degrees.size();
    if (count == 2) {
        if (std::min(degrees[0], degrees[1]) < 0 || degrees[0] != degrees[1]) return Rat(0);
        if (fam.kind == FamilyKind::scaled_laguerre) return oracle_integral_ratio(fam, degrees);
        return norm_ratio(fam, degrees[0]);
    }
    switch (fam.kind) {
        case FamilyKind::gegenbauer:
            if (count == 3) return geg_triple_integral_ratio(degrees[0], degrees[1], degrees[2], fam.lambda);
            if (count == 4) {
                std::array<int, 4> q{};
                std::copy(degrees.begin(), degrees.end(), q.begin());
                return geg_quad_integral_ratio(q[0], q[1], q[2], q[3], fam.lambda);
            }
            break;
        case FamilyKind::hermite:
            if (count == 3) return herm_triple_integral_ratio(degrees[0], degrees[1], degrees[2]);
            if (count == 4) {
                std::array<int, 4> q{};
                std::copy(degrees.begin(), degrees.end(), q.begin());
                return herm_quad_integral_ratio(q[0], q[1], q[2], q[3]);
            }
            break;
        case FamilyKind::jacobi:
            if (count == 3) return jac_triple_integral_ratio(degrees[0], degrees[1], degrees[2], fam.alpha, fam.beta);
            break;
        case FamilyKind::laguerre:
            if (count == 3) return lag_triple_integral_ratio(degrees[0], degrees[1], degrees[2], fam.alpha);
            break;
        case FamilyKind::scaled_laguerre:
            break;
    }
    throw std::invalid_argument("integral_ratio_closed_form: no closed form for " + std::to_string(count) + " " +
                                fam.name() + " factors");
}

inline Rat integral_ratio_closed_form(const FamilySpec& fam, std::initializer_list<int> degrees) {
    return integral_ratio_closed_form(fam, std::span<const int>(degrees.begin(), degrees.size()));
}

}  // namespace linrel
