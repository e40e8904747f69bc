#pragma once

#include <Eigen/Eigenvalues>
#include <cmath>
#include <numbers>
#include <span>
#include <stdexcept>
#include <vector>

#include "linrel/error.hpp"
#include "linrel/families.hpp"

// Gauss quadrature for the family weights, as a floating-point cross-check
// of the exact integral ratios.

namespace linrel {

struct QuadRule {
    std::vector<double> nodes;
    std::vector<double> weights;
    FamilySpec family;
    int order = 0;

    template <class F>
    double integrate(F&& f) const {
        double sum = 0.0;
        for (std::size_t i = 0; i < nodes.size(); ++i) sum += weights[i] * f(nodes[i]);
        return sum;
    }
};

/// Numeric h_0 (the total mass of the weight). Scaled Laguerre uses its own
/// weight x^α e^{-scale x}.
inline double h0_numeric(const FamilySpec& fam) {
    fam.require_orthogonality();
    switch (fam.kind) {
        case FamilyKind::hermite:
            return std::sqrt(std::numbers::pi);
        case FamilyKind::laguerre:
            return std::tgamma(fam.alpha.to_double() + 1.0);
        case FamilyKind::scaled_laguerre: {
            const double a = fam.alpha.to_double();
            return std::tgamma(a + 1.0) / std::pow(fam.scale.to_double(), a + 1.0);
        }
        case FamilyKind::gegenbauer: {
            const double l = fam.lambda.to_double();
            const double g = std::tgamma(l);
            return std::numbers::pi * std::tgamma(2.0 * l) / (std::pow(2.0, 2.0 * l - 1.0) * l * g * g);
        }
        case FamilyKind::jacobi: {
            const double a = fam.alpha.to_double(), b = fam.beta.to_double();
            return std::pow(2.0, a + b + 1.0) * std::tgamma(a + 1.0) * std::tgamma(b + 1.0) / std::tgamma(a + b + 2.0);
        }
    }
    return 0.0;
}

/// Golub-Welsch: eigen-decomposition of the Jacobi matrix of the monic
/// recurrence x q_n = q_{n+1} + a_n q_n + b_n q_{n-1}.
inline QuadRule build_rule(const FamilySpec& fam, int order) {
    fam.require_orthogonality();
    if (order < 1) throw std::invalid_argument("build_rule: order must be >= 1");
    Eigen::VectorXd diag(order);
    Eigen::VectorXd sub(std::max(order - 1, 0));
    Rat prev_a;
    for (int n = 0; n < order; ++n) {
        const auto r = recurrence_coeffs(fam, n);
        if (r.A.is_zero()) throw DegenerateBasis(fam.name() + ": A_n vanishes");
        diag(n) = (-r.B / r.A).to_double();
        if (n > 0) sub(n - 1) = std::sqrt((r.C / (r.A * prev_a)).to_double());
        prev_a = r.A;
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es;
    es.computeFromTridiagonal(diag, sub, Eigen::ComputeEigenvectors);
    if (es.info() != Eigen::Success) throw EigenFailure("build_rule: tridiagonal eigensolver did not converge");
    const double h0 = h0_numeric(fam);
    QuadRule rule;
    rule.family = fam;
    rule.order = order;
    rule.nodes.resize(static_cast<std::size_t>(order));
    rule.weights.resize(static_cast<std::size_t>(order));
    for (int i = 0; i < order; ++i) {
        const double v0 = es.eigenvectors()(0, i);
        rule.nodes[static_cast<std::size_t>(i)] = es.eigenvalues()(i);
        rule.weights[static_cast<std::size_t>(i)] = h0 * v0 * v0;
    }
    return rule;
}

/// Order used for a product of polynomials of total degree `total_degree`.
inline int quad_order_for(int total_degree) { return (total_degree + 2) / 2 + 5; }

/// p_n(x) in double precision via the recurrence.
inline double eval_family(const FamilySpec& fam, int n, double x) {
    double prev = 0.0, cur = 1.0;
    for (int k = 0; k < n; ++k) {
        const auto r = recurrence_coeffs(fam, k);
        const double next = (r.A.to_double() * x + r.B.to_double()) * cur - r.C.to_double() * prev;
        prev = cur;
        cur = next;
    }
    return cur;
}

/// Quadrature value plus the integral of |integrand|, which bounds the rounding error.
struct QuadValue {
    double value = 0.0;
    double magnitude = 0.0;
};

inline QuadValue quad_product_value(const FamilySpec& fam, std::span<const int> degrees,
                                    std::span<const Rat> scales = {}) {
    if (!scales.empty() && scales.size() != degrees.size())
        throw std::invalid_argument("quad_product_value: one scale per degree");
    int total = 0;
    for (int d : degrees) {
        if (d < 0) return {};
        total += d;
    }
    std::vector<double> s(degrees.size(), 1.0);
    for (std::size_t i = 0; i < scales.size(); ++i) s[i] = scales[i].to_double();
    const QuadRule rule = build_rule(fam, quad_order_for(total));
    QuadValue out;
    for (std::size_t q = 0; q < rule.nodes.size(); ++q) {
        double v = rule.weights[q];
        for (std::size_t i = 0; i < degrees.size(); ++i) v *= eval_family(fam, degrees[i], s[i] * rule.nodes[q]);
        out.value += v;
        out.magnitude += std::abs(v);
    }
    return out;
}

inline QuadValue quad_product_value(const FamilySpec& fam, std::initializer_list<int> degrees,
                                    std::initializer_list<Rat> scales = {}) {
    return quad_product_value(fam, std::span<const int>(degrees.begin(), degrees.size()),
                              std::span<const Rat>(scales.begin(), scales.size()));
}

/// Integral of prod_i p_{n_i}(s_i x) against the family weight.
/// Empty `scales` means all 1.
inline double quad_product_integral(const FamilySpec& fam, std::span<const int> degrees,
                                    std::span<const Rat> scales = {}) {
    return quad_product_value(fam, degrees, scales).value;
}

inline double quad_product_integral(const FamilySpec& fam, std::initializer_list<int> degrees,
                                    std::initializer_list<Rat> scales = {}) {
    return quad_product_integral(fam, std::span<const int>(degrees.begin(), degrees.size()),
                                 std::span<const Rat>(scales.begin(), scales.size()));
}

constexpr double kDefaultRtol = 1e-10;
constexpr double kDefaultAtol = 1e-12;

/// |exact*h0 - numeric| <= rtol*|numeric| + atol.
inline bool cross_check(const Rat& exact, double numeric, double h0_value, double rtol = kDefaultRtol,
                        double atol = kDefaultAtol) {
    return std::abs(exact.to_double() * h0_value - numeric) <= rtol * std::abs(numeric) + atol;
}

/// Relative rounding floor applied to the integrand magnitude. Exact zeros
/// come out of the quadrature as cancellation noise of this order.
constexpr double kRoundingFloor = 1e-12;

/// As above, with atol widened by kRoundingFloor times the integrand magnitude.
inline bool cross_check(const Rat& exact, const QuadValue& numeric, double h0_value, double rtol = kDefaultRtol,
                        double atol = kDefaultAtol) {
    return cross_check(exact, numeric.value, h0_value, rtol, atol + kRoundingFloor * numeric.magnitude);
}

}  // namespace linrel
