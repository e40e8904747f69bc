#pragma once

#include <algorithm>
#include <array>
#include <map>
#include <numeric>
#include <span>
#include <stdexcept>
#include <vector>

#include "linrel/error.hpp"
#include "linrel/exactcore.hpp"
#include "linrel/families.hpp"
#include "linrel/poly.hpp"

// Brute-force reference: multiply family polynomials in the monomial basis
// and convert back by triangular elimination. Nothing in here uses a
// closed-form linearization formula, which is what makes it a usable oracle
// for them.

namespace linrel {

/// Expansion sum_k coeffs[k] p_k(x) in a family basis. Stored values are nonzero.
struct LinExpansion {
    FamilySpec family;
    std::map<int, Rat> coeffs;

    Rat at(int k) const {
        auto it = coeffs.find(k);
        return it == coeffs.end() ? Rat(0) : it->second;
    }

    DensePoly reconstruct() const {
        if (coeffs.empty()) return {};
        const auto basis = family_polys(family, coeffs.rbegin()->first);
        DensePoly out;
        for (const auto& [k, c] : coeffs) out += basis[static_cast<std::size_t>(k)] * c;
        return out;
    }

    friend bool operator==(const LinExpansion& a, const LinExpansion& b) {
        return a.family == b.family && a.coeffs == b.coeffs;
    }
};

inline LinExpansion to_family_basis(const DensePoly& p, const FamilySpec& fam) {
    LinExpansion out{fam, {}};
    if (p.is_zero()) return out;
    const auto basis = family_polys(fam, p.degree());
    DensePoly rest = p;
    while (!rest.is_zero()) {
        const int d = rest.degree();
        const DensePoly& pd = basis[static_cast<std::size_t>(d)];
        if (pd.degree() != d) throw DegenerateBasis(fam.name() + ": basis polynomial has the wrong degree");
        Rat c = rest.leading() / pd.leading();
        out.coeffs.emplace(d, c);
        rest -= pd * c;
    }
    return out;
}

namespace detail {

inline DensePoly family_product(const FamilySpec& fam, std::span<const int> degrees) {
    const int top = *std::max_element(degrees.begin(), degrees.end());
    const auto basis = family_polys(fam, std::max(top, 0));
    DensePoly prod = DensePoly::constant(Rat(1));
    for (int d : degrees) prod = prod * basis[static_cast<std::size_t>(d)];
    return prod;
}

}  // namespace detail

inline LinExpansion oracle_linearize(const FamilySpec& fam, std::span<const int> degrees) {
    if (degrees.empty()) throw std::invalid_argument("oracle_linearize: no degrees");
    for (int d : degrees)
        if (d < 0) throw IndexOutOfRange("oracle_linearize: negative degree");
    return to_family_basis(detail::family_product(fam, degrees), fam);
}

inline LinExpansion oracle_linearize(const FamilySpec& fam, std::initializer_list<int> degrees) {
    return oracle_linearize(fam, std::span<const int>(degrees.begin(), degrees.size()));
}

/// (integral of the product against the weight) / h_0, read off as the
/// p_0 coefficient of the linearized product. A negative degree stands for
/// p_{-1} = 0 and gives 0.
inline Rat oracle_integral_ratio(const FamilySpec& fam, std::span<const int> degrees) {
    fam.require_orthogonality();
    if (degrees.empty()) throw std::invalid_argument("oracle_integral_ratio: no degrees");
    if (*std::min_element(degrees.begin(), degrees.end()) < 0) return Rat(0);
    return oracle_linearize(fam, degrees).at(0);
}

inline Rat oracle_integral_ratio(const FamilySpec& fam, std::initializer_list<int> degrees) {
    return oracle_integral_ratio(fam, std::span<const int>(degrees.begin(), degrees.size()));
}

/// (integral over (0,inf) of prod_i L_{n_i}^alpha(s_i x) x^alpha e^{-x}) / Gamma(alpha+1),
/// by exact moments: integral of x^j x^alpha e^{-x} = Gamma(alpha+1) (alpha+1)_j.
inline Rat oracle_scaled_integral_ratio(const Rat& alpha, std::span<const int> degrees,
                                        std::span<const Rat> scales) {
    if (degrees.size() != scales.size())
        throw std::invalid_argument("oracle_scaled_integral_ratio: one scale per degree");
    if (!(alpha > Rat(-1))) throw InvalidOrthogonalityDomain("scaled Laguerre needs alpha > -1");
    for (int d : degrees)
        if (d < 0) return Rat(0);
    const int top = degrees.empty() ? 0 : *std::max_element(degrees.begin(), degrees.end());
    const auto basis = family_polys(FamilySpec::laguerre(alpha), top);
    DensePoly prod = DensePoly::constant(Rat(1));
    for (std::size_t i = 0; i < degrees.size(); ++i)
        prod = prod * basis[static_cast<std::size_t>(degrees[i])].rescaled(scales[i]);
    Rat sum(0);
    Rat moment(1);
    for (int j = 0; j <= prod.degree(); ++j) {
        sum += prod.coeff(j) * moment;
        moment *= alpha + Rat(j + 1);
    }
    return sum;
}

// ---------------------------------------------------------------------------
// Generating-function truncations (three variables)

/// Truncated power series in t1, t2, t3 keeping total degree <= max_total.
class Series3 {
public:
    using Key = std::array<int, 3>;

    explicit Series3(int max_total) : max_total_(max_total) {}

    static Series3 constant(int max_total, const Rat& c) {
        Series3 s(max_total);
        s.add({0, 0, 0}, c);
        return s;
    }

    int max_total() const { return max_total_; }
    const std::map<Key, Rat>& terms() const { return terms_; }

    Rat at(const Key& k) const {
        auto it = terms_.find(k);
        return it == terms_.end() ? Rat(0) : it->second;
    }

    void add(const Key& k, const Rat& c) {
        if (k[0] + k[1] + k[2] > max_total_ || c.is_zero()) return;
        auto [it, inserted] = terms_.emplace(k, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    Series3& operator+=(const Series3& o) {
        for (const auto& [k, c] : o.terms_) add(k, c);
        return *this;
    }

    friend Series3 operator*(const Series3& a, const Series3& b) {
        Series3 out(std::min(a.max_total_, b.max_total_));
        for (const auto& [ka, ca] : a.terms_)
            for (const auto& [kb, cb] : b.terms_)
                out.add({ka[0] + kb[0], ka[1] + kb[1], ka[2] + kb[2]}, ca * cb);
        return out;
    }

    friend Series3 operator*(const Rat& s, Series3 a) {
        for (auto& [k, c] : a.terms_) c *= s;
        if (s.is_zero()) a.terms_.clear();
        return a;
    }

    /// (1 + w)^e for w without constant term, by the binomial series.
    static Series3 binomial_power(const Series3& w, const Rat& e) {
        if (!w.at({0, 0, 0}).is_zero()) throw std::invalid_argument("binomial_power: w(0) != 0");
        Series3 out = constant(w.max_total_, Rat(1));
        Series3 power = out;
        Rat binom(1);
        for (int j = 1; j <= w.max_total_; ++j) {
            power = power * w;
            binom *= (e - Rat(j - 1)) / Rat(j);
            if (power.terms_.empty()) break;
            out += binom * power;
        }
        return out;
    }

    static Series3 exp(const Series3& w) {
        if (!w.at({0, 0, 0}).is_zero()) throw std::invalid_argument("exp: w(0) != 0");
        Series3 out = constant(w.max_total_, Rat(1));
        Series3 power = out;
        for (int j = 1; j <= w.max_total_; ++j) {
            power = Rat(1, j) * (power * w);
            if (power.terms_.empty()) break;
            out += power;
        }
        return out;
    }

private:
    int max_total_;
    std::map<Key, Rat> terms_;
};

/// Which transcription of a generating function to expand. `as_printed`
/// reproduces two misprints (a missing factor 2 in the Hermite exponent of
/// the double-sum form, exponent -alpha+1 instead of -alpha-1 on the
/// Laguerre product) and exists so tests can show those forms fail.
enum class GenfunForm { corrected, as_printed };

constexpr int kDefaultGenfunBudget = 12;

/// Coefficient of t1^P t2^m t3^n in exp(2(t1t2 + t1t3 + t2t3)) from the
/// closed double-sum form (nonzero only for P = 2p + |n-m|, 0 <= p <= min(m,n)).
inline Rat hermite_triple_genfun_coefficient(int P, int m, int n) {
    const int d = std::abs(n - m);
    if (P < d || !is_even(P - d)) return Rat(0);
    const int p = (P - d) / 2;
    if (p > min2(m, n)) return Rat(0);
    return pow(Rat(2), p + max2(m, n)) * reciprocal_factorial(min2(m, n) - p) * reciprocal_factorial(p + d) *
           reciprocal_factorial(p);
}

namespace detail {

inline Series3 pair_sum(int D) {
    Series3 s(D);
    s.add({1, 1, 0}, Rat(1));
    s.add({1, 0, 1}, Rat(1));
    s.add({0, 1, 1}, Rat(1));
    return s;
}

inline Series3 hermite_generating_series(int D, const Rat& factor) { return Series3::exp(factor * pair_sum(D)); }

// prod (1-t_j)^{e1} * (1 + sum t_j/(1-t_j))^{-alpha-1}
//   = prod (1-t_j)^{e1+alpha+1} * (1 - sum t_i t_j + 2 t1 t2 t3)^{-alpha-1}
inline Series3 laguerre_generating_series(int D, const Rat& alpha, const Rat& e1) {
    Series3 w = Rat(-1) * pair_sum(D);
    w.add({1, 1, 1}, Rat(2));
    Series3 out = Series3::binomial_power(w, -alpha - Rat(1));
    const Rat extra = e1 + alpha + Rat(1);
    if (!extra.is_zero()) {
        for (int v = 0; v < 3; ++v) {
            Series3 t(D);
            Series3::Key k{0, 0, 0};
            k[static_cast<std::size_t>(v)] = 1;
            t.add(k, Rat(-1));
            out = out * Series3::binomial_power(t, extra);
        }
    }
    return out;
}

}  // namespace detail

/// Expands the three-variable generating function of the triple-product
/// integrals to total degree `max_degree` and compares every coefficient with
/// oracle_integral_ratio. Hermite also checks the closed double-sum form.
inline bool genfun_truncation_check(const FamilySpec& fam, int max_degree,
                                    GenfunForm form = GenfunForm::corrected,
                                    int budget = kDefaultGenfunBudget) {
    if (max_degree < 0) throw std::invalid_argument("genfun_truncation_check: negative degree");
    if (max_degree > budget)
        throw TruncationBudgetExceeded("genfun_truncation_check: max_degree " + std::to_string(max_degree) +
                                       " exceeds budget " + std::to_string(budget));
    const int D = max_degree;
    if (fam.kind == FamilyKind::hermite) {
        const Series3 full = detail::hermite_generating_series(D, Rat(2));
        const Series3 closed_lhs =
            detail::hermite_generating_series(D, form == GenfunForm::corrected ? Rat(2) : Rat(1));
        for (int a = 0; a <= D; ++a)
            for (int b = 0; a + b <= D; ++b)
                for (int c = 0; a + b + c <= D; ++c) {
                    const int degs[3] = {a, b, c};
                    const Rat expected = oracle_integral_ratio(fam, degs);
                    const Rat scaled = full.at({a, b, c}) * factorial_rat(a) * factorial_rat(b) * factorial_rat(c);
                    if (scaled != expected) return false;
                    if (closed_lhs.at({a, b, c}) != hermite_triple_genfun_coefficient(a, b, c)) return false;
                }
        return true;
    }
    if (fam.kind == FamilyKind::laguerre) {
        const Rat e1 = form == GenfunForm::corrected ? -fam.alpha - Rat(1) : -fam.alpha + Rat(1);
        const Series3 series = detail::laguerre_generating_series(D, fam.alpha, e1);
        for (int a = 0; a <= D; ++a)
            for (int b = 0; a + b <= D; ++b)
                for (int c = 0; a + b + c <= D; ++c) {
                    const int degs[3] = {a, b, c};
                    if (series.at({a, b, c}) != oracle_integral_ratio(fam, degs)) return false;
                }
        return true;
    }
    throw std::invalid_argument("genfun_truncation_check: only hermite and laguerre have generating functions here");
}

}  // namespace linrel
