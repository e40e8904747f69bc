#pragma once

#include <limits>
#include <string>
#include <utility>
#include <vector>

#include "linrel/error.hpp"
#include "linrel/exactcore.hpp"
#include "linrel/poly.hpp"
#include "linrel/rational.hpp"

namespace linrel {

enum class FamilyKind { gegenbauer, hermite, jacobi, laguerre, scaled_laguerre };

/// One of the five supported polynomial families together with its
/// parameters. Only the fields relevant to `kind` are meaningful.
///
/// Two validity modes exist. Formal mode (any parameters that avoid poles)
/// is enough for recurrences and coefficient formulas. Orthogonality mode
/// additionally requires the weight to be a positive measure and is needed
/// by anything that integrates.
struct FamilySpec {
    FamilyKind kind = FamilyKind::hermite;
    Rat lambda{0};
    Rat alpha{0};
    Rat beta{0};
    Rat scale{1};

    static FamilySpec gegenbauer(const Rat& lambda) {
        FamilySpec f;
        f.kind = FamilyKind::gegenbauer;
        f.lambda = lambda;
        return f;
    }
    static FamilySpec hermite() { return FamilySpec{}; }
    static FamilySpec jacobi(const Rat& alpha, const Rat& beta) {
        FamilySpec f;
        f.kind = FamilyKind::jacobi;
        f.alpha = alpha;
        f.beta = beta;
        return f;
    }
    static FamilySpec laguerre(const Rat& alpha) {
        FamilySpec f;
        f.kind = FamilyKind::laguerre;
        f.alpha = alpha;
        return f;
    }
    /// L_n^alpha(scale * x).
    static FamilySpec scaled_laguerre(const Rat& alpha, const Rat& scale) {
        FamilySpec f;
        f.kind = FamilyKind::scaled_laguerre;
        f.alpha = alpha;
        f.scale = scale;
        return f;
    }

    std::string name() const {
        switch (kind) {
            case FamilyKind::gegenbauer: return "gegenbauer";
            case FamilyKind::hermite: return "hermite";
            case FamilyKind::jacobi: return "jacobi";
            case FamilyKind::laguerre: return "laguerre";
            case FamilyKind::scaled_laguerre: return "scaled-laguerre";
        }
        return "unknown";
    }

    std::vector<std::pair<std::string, Rat>> params() const {
        switch (kind) {
            case FamilyKind::gegenbauer: return {{"lambda", lambda}};
            case FamilyKind::hermite: return {};
            case FamilyKind::jacobi: return {{"alpha", alpha}, {"beta", beta}};
            case FamilyKind::laguerre: return {{"alpha", alpha}};
            case FamilyKind::scaled_laguerre: return {{"alpha", alpha}, {"scale", scale}};
        }
        return {};
    }

    bool is_laguerre_like() const {
        return kind == FamilyKind::laguerre || kind == FamilyKind::scaled_laguerre;
    }

    /// Interval carrying the orthogonality measure.
    std::pair<double, double> support() const {
        constexpr double inf = std::numeric_limits<double>::infinity();
        switch (kind) {
            case FamilyKind::gegenbauer:
            case FamilyKind::jacobi: return {-1.0, 1.0};
            case FamilyKind::hermite: return {-inf, inf};
            case FamilyKind::laguerre:
            case FamilyKind::scaled_laguerre: return {0.0, inf};
        }
        return {-inf, inf};
    }

    std::string weight_description() const {
        switch (kind) {
            case FamilyKind::gegenbauer: return "(1-x^2)^(lambda-1/2) on (-1,1)";
            case FamilyKind::hermite: return "exp(-x^2) on (-inf,inf)";
            case FamilyKind::jacobi: return "(1-x)^alpha (1+x)^beta on (-1,1)";
            case FamilyKind::laguerre: return "x^alpha exp(-x) on (0,inf)";
            case FamilyKind::scaled_laguerre: return "(scale x)^alpha exp(-scale x) on (0,inf)";
        }
        return "";
    }

    /// Symbolic name of h_0; its value is never materialized exactly.
    std::string h0_tag() const {
        switch (kind) {
            case FamilyKind::gegenbauer: return "sqrt(pi)*GegenbauerUnit(lambda)";
            case FamilyKind::hermite: return "sqrt(pi)";
            case FamilyKind::jacobi: return "JacobiUnit(alpha,beta)";
            case FamilyKind::laguerre:
            case FamilyKind::scaled_laguerre: return "Gamma(alpha+1)";
        }
        return "";
    }

    bool in_orthogonality_domain() const {
        switch (kind) {
            case FamilyKind::gegenbauer: return lambda > Rat(-1, 2) && !lambda.is_zero();
            case FamilyKind::hermite: return true;
            case FamilyKind::jacobi: return alpha > Rat(-1) && beta > Rat(-1);
            case FamilyKind::laguerre: return alpha > Rat(-1);
            case FamilyKind::scaled_laguerre: return alpha > Rat(-1) && scale > Rat(0);
        }
        return false;
    }

    void require_orthogonality() const {
        if (!in_orthogonality_domain())
            throw InvalidOrthogonalityDomain(name() + ": parameters outside the orthogonality domain");
    }

    friend bool operator==(const FamilySpec&, const FamilySpec&) = default;
};

/// Coefficients of p_{n+1} = (A x + B) p_n - C p_{n-1}.
struct RecurrenceCoeffs {
    Rat A;
    Rat B;
    Rat C;
};

inline RecurrenceCoeffs recurrence_coeffs(const FamilySpec& fam, int n) {
    if (n < 0) throw IndexOutOfRange("recurrence_coeffs: negative degree");
    const Rat nn(n);
    const Rat n1(n + 1);
    switch (fam.kind) {
        case FamilyKind::gegenbauer:
            return {Rat(2) * (nn + fam.lambda) / n1, Rat(0), (nn + Rat(2) * fam.lambda - Rat(1)) / n1};
        case FamilyKind::hermite:
            return {Rat(2), Rat(0), Rat(2 * n)};
        case FamilyKind::jacobi: {
            const Rat& a = fam.alpha;
            const Rat& b = fam.beta;
            const Rat s = a + b;
            // n = 0: the generic expressions are 0/0 at a+b = 0 or a+b = -1.
            // C_0 only ever multiplies p_{-1} = 0.
            if (n == 0) return {(s + Rat(2)) / Rat(2), (a - b) / Rat(2), Rat(0)};
            const Rat t = Rat(2 * n) + s;
            const Rat A = (t + Rat(1)) * (t + Rat(2)) / (Rat(2) * n1 * (nn + s + Rat(1)));
            const Rat B = (a * a - b * b) * (t + Rat(1)) / (Rat(2) * n1 * (nn + s + Rat(1)) * t);
            const Rat C = (nn + a) * (nn + b) * (t + Rat(2)) / (n1 * (nn + s + Rat(1)) * t);
            return {A, B, C};
        }
        case FamilyKind::laguerre:
        case FamilyKind::scaled_laguerre:
            return {-fam.scale / n1, (Rat(2 * n) + fam.alpha + Rat(1)) / n1, (nn + fam.alpha) / n1};
    }
    return {};
}

/// p_0 .. p_max built from the three-term recurrence with p_{-1} = 0.
inline std::vector<DensePoly> family_polys(const FamilySpec& fam, int max_degree) {
    std::vector<DensePoly> out;
    out.reserve(static_cast<std::size_t>(max_degree) + 1);
    out.push_back(DensePoly::constant(Rat(1)));
    DensePoly prev;
    for (int n = 0; n < max_degree; ++n) {
        const auto rc = recurrence_coeffs(fam, n);
        if (rc.A.is_zero())
            throw DegenerateBasis(fam.name() + ": A_" + std::to_string(n) + " vanishes");
        DensePoly next = DensePoly::linear(rc.B, rc.A) * out.back() - prev * rc.C;
        prev = out.back();
        out.push_back(std::move(next));
    }
    return out;
}

inline DensePoly family_poly(const FamilySpec& fam, int n) {
    if (n < 0) throw IndexOutOfRange("family_poly: negative degree");
    return family_polys(fam, n).back();
}

namespace detail {

// sum_j coef(j) * arg^j for a polynomial argument
template <class CoefFn>
DensePoly poly_series(int terms, const DensePoly& arg, CoefFn coef) {
    DensePoly out;
    DensePoly power = DensePoly::constant(Rat(1));
    for (int j = 0; j < terms; ++j) {
        out += power * coef(j);
        power = power * arg;
    }
    return out;
}

}  // namespace detail

/// Same polynomial as family_poly, built from the terminating
/// hypergeometric representation of each family.
inline DensePoly family_poly_hyp(const FamilySpec& fam, int n) {
    if (n < 0) throw IndexOutOfRange("family_poly_hyp: negative degree");
    const Rat nn(n);
    const DensePoly half_one_minus_x = DensePoly::linear(Rat(1, 2), Rat(-1, 2));
    DensePoly out;
    switch (fam.kind) {
        case FamilyKind::gegenbauer: {
            const Rat& l = fam.lambda;
            const Rat c = Rat(1, 2) + l;
            const Rat pre = pochhammer(Rat(2) * l, n) / factorial_rat(n);
            out = detail::poly_series(n + 1, half_one_minus_x, [&](int j) {
                return pre * pochhammer(-nn, j) * pochhammer(nn + Rat(2) * l, j) *
                       reciprocal_pochhammer(c, j) * reciprocal_factorial(j);
            });
            break;
        }
        case FamilyKind::hermite: {
            std::vector<Rat> c(static_cast<std::size_t>(n) + 1);
            const Rat two_n = pow(Rat(2), n);
            for (int j = 0; 2 * j <= n; ++j) {
                Rat t = pochhammer(-nn / Rat(2), j) * pochhammer(-(nn - Rat(1)) / Rat(2), j) *
                        reciprocal_factorial(j) * two_n;
                if (j % 2 == 1) t = -t;
                c[static_cast<std::size_t>(n - 2 * j)] = t;
            }
            out = DensePoly(std::move(c));
            break;
        }
        case FamilyKind::jacobi: {
            const Rat& a = fam.alpha;
            const Rat& b = fam.beta;
            const Rat pre = pochhammer(a + Rat(1), n) / factorial_rat(n);
            out = detail::poly_series(n + 1, half_one_minus_x, [&](int j) {
                return pre * pochhammer(-nn, j) * pochhammer(nn + a + b + Rat(1), j) *
                       reciprocal_pochhammer(a + Rat(1), j) * reciprocal_factorial(j);
            });
            break;
        }
        case FamilyKind::laguerre:
        case FamilyKind::scaled_laguerre: {
            const Rat& a = fam.alpha;
            const Rat pre = pochhammer(a + Rat(1), n) / factorial_rat(n);
            out = detail::poly_series(n + 1, DensePoly::linear(Rat(0), fam.scale), [&](int j) {
                return pre * pochhammer(-nn, j) * reciprocal_pochhammer(a + Rat(1), j) *
                       reciprocal_factorial(j);
            });
            break;
        }
    }
    if (out.degree() != n)
        throw DegenerateBasis(fam.name() + ": leading coefficient of degree " + std::to_string(n) +
                              " vanishes");
    return out;
}

/// h_n / h_0 for the orthogonality measure of `fam`.
inline Rat norm_ratio(const FamilySpec& fam, int n) {
    fam.require_orthogonality();
    if (n < 0) throw IndexOutOfRange("norm_ratio: negative degree");
    if (n == 0) return Rat(1);
    const Rat nn(n);
    switch (fam.kind) {
        case FamilyKind::gegenbauer: {
            const Rat& l = fam.lambda;
            return pochhammer(Rat(2) * l, n) * l / ((nn + l) * factorial_rat(n));
        }
        case FamilyKind::hermite:
            return pow(Rat(2), n) * factorial_rat(n);
        case FamilyKind::jacobi: {
            const Rat s = fam.alpha + fam.beta;
            // (s+1)/(s+1)_n folded into 1/(s+2)_{n-1} so s = -1 stays finite
            return pochhammer(fam.alpha + Rat(1), n) * pochhammer(fam.beta + Rat(1), n) /
                   ((Rat(2 * n) + s + Rat(1)) * factorial_rat(n) * pochhammer(s + Rat(2), n - 1));
        }
        case FamilyKind::laguerre:
        case FamilyKind::scaled_laguerre:
            return pochhammer(fam.alpha + Rat(1), n) / factorial_rat(n);
    }
    return Rat(0);
}

}  // namespace linrel
