#pragma once

#include <cstddef>
#include <ostream>
#include <vector>

#include "linrel/rational.hpp"

namespace linrel {

/// Polynomial in the monomial basis; coeffs()[i] multiplies x^i.
/// The zero polynomial has no coefficients and degree -1.
class DensePoly {
public:
    DensePoly() = default;
    explicit DensePoly(std::vector<Rat> coeffs) : c_(std::move(coeffs)) { trim(); }

    static DensePoly constant(const Rat& c) { return DensePoly(std::vector<Rat>{c}); }
    static DensePoly x() { return DensePoly(std::vector<Rat>{Rat(0), Rat(1)}); }
    /// c0 + c1 x
    static DensePoly linear(const Rat& c0, const Rat& c1) { return DensePoly(std::vector<Rat>{c0, c1}); }

    const std::vector<Rat>& coeffs() const { return c_; }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }

    /// Coefficient of x^i, zero beyond the degree.
    Rat coeff(int i) const {
        return (i >= 0 && i < static_cast<int>(c_.size())) ? c_[static_cast<std::size_t>(i)] : Rat(0);
    }
    const Rat& leading() const { return c_.back(); }

    Rat eval(const Rat& x) const {
        Rat r(0);
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * x + *it;
        return r;
    }

    double eval(double x) const {
        double r = 0.0;
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * x + it->to_double();
        return r;
    }

    /// p(s x)
    DensePoly rescaled(const Rat& s) const {
        std::vector<Rat> out = c_;
        Rat f(1);
        for (auto& c : out) {
            c *= f;
            f *= s;
        }
        return DensePoly(std::move(out));
    }

    DensePoly& operator+=(const DensePoly& o) {
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
        for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
        trim();
        return *this;
    }
    DensePoly& operator-=(const DensePoly& o) { return *this += o * Rat(-1); }
    DensePoly& operator*=(const Rat& s) {
        if (s.is_zero()) {
            c_.clear();
            return *this;
        }
        for (auto& c : c_) c *= s;
        return *this;
    }

    friend DensePoly operator+(DensePoly a, const DensePoly& b) { return a += b; }
    friend DensePoly operator-(DensePoly a, const DensePoly& b) { return a -= b; }
    friend DensePoly operator*(DensePoly a, const Rat& s) { return a *= s; }
    friend DensePoly operator*(const Rat& s, DensePoly a) { return a *= s; }

    friend DensePoly operator*(const DensePoly& a, const DensePoly& b) {
        if (a.is_zero() || b.is_zero()) return {};
        std::vector<Rat> out(a.c_.size() + b.c_.size() - 1);
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            if (a.c_[i].is_zero()) continue;
            for (std::size_t j = 0; j < b.c_.size(); ++j) out[i + j] += a.c_[i] * b.c_[j];
        }
        return DensePoly(std::move(out));
    }

    friend bool operator==(const DensePoly& a, const DensePoly& b) { return a.c_ == b.c_; }

    friend std::ostream& operator<<(std::ostream& os, const DensePoly& p) {
        if (p.is_zero()) return os << "0";
        bool first = true;
        for (int i = p.degree(); i >= 0; --i) {
            const Rat& c = p.c_[static_cast<std::size_t>(i)];
            if (c.is_zero()) continue;
            if (!first) os << " + ";
            os << "(" << c << ")";
            if (i > 0) os << "x^" << i;
            first = false;
        }
        return os;
    }

private:
    void trim() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }

    std::vector<Rat> c_;
};

inline DensePoly poly_add(const DensePoly& a, const DensePoly& b) { return a + b; }
inline DensePoly poly_mul(const DensePoly& a, const DensePoly& b) { return a * b; }
inline Rat poly_eval(const DensePoly& p, const Rat& x) { return p.eval(x); }

}  // namespace linrel
