#pragma once

#include <gmpxx.h>

#include <compare>
#include <concepts>
#include <cstddef>
#include <functional>
#include <ostream>
#include <string>
#include <string_view>

#include "linrel/error.hpp"

namespace linrel {

/// Exact rational number, always in lowest terms with a positive denominator.
///
/// A thin value wrapper over GMP's mpq_class. Arithmetic never rounds. The
/// wrapper exists so that expressions evaluate eagerly (no expression
/// templates leaking into `auto`) and so the rest of the code only sees one
/// scalar type.
class Rat {
public:
    Rat() = default;

    template <std::integral T>
    Rat(T v) : v_(static_cast<long>(v)) {}  // NOLINT(google-explicit-constructor)

    template <std::integral T, std::integral U>
    Rat(T num, U den) {
        if (den == 0) throw FormulaPole("rational with zero denominator");
        v_ = mpq_class(mpz_class(static_cast<long>(num)), mpz_class(static_cast<long>(den)));
        v_.canonicalize();
    }

    explicit Rat(const mpz_class& z) : v_(z) {}

    explicit Rat(mpq_class q) : v_(std::move(q)) { v_.canonicalize(); }

    /// Parses "p", "-p", "p/q" (whitespace not allowed).
    static Rat parse(std::string_view text) {
        std::string s(text);
        if (s.empty()) throw ParseError("empty rational");
        auto slash = s.find('/');
        auto valid_int = [](const std::string& t) {
            std::size_t i = (!t.empty() && (t[0] == '-' || t[0] == '+')) ? 1 : 0;
            if (i >= t.size()) return false;
            for (; i < t.size(); ++i)
                if (t[i] < '0' || t[i] > '9') return false;
            return true;
        };
        std::string num = s.substr(0, slash);
        std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
        if (!valid_int(num) || !valid_int(den) || den[0] == '-' || den[0] == '+')
            throw ParseError("not a rational: '" + s + "'");
        if (num[0] == '+') num.erase(0, 1);
        mpz_class n(num, 10), d(den, 10);
        if (d == 0) throw ParseError("zero denominator: '" + s + "'");
        return Rat(mpq_class(n, d));
    }

    const mpq_class& raw() const { return v_; }
    mpz_class numerator() const { return v_.get_num(); }
    mpz_class denominator() const { return v_.get_den(); }

    bool is_zero() const { return sgn(v_) == 0; }
    bool is_integer() const { return v_.get_den() == 1; }
    int sign() const { return sgn(v_); }

    /// True for 0, -1, -2, ... (the values that terminate a Pochhammer symbol).
    bool is_nonpositive_integer() const { return is_integer() && sign() <= 0; }

    /// Requires is_integer() and a value that fits in a long.
    long to_long() const { return v_.get_num().get_si(); }

    double to_double() const { return v_.get_d(); }

    std::string str() const { return v_.get_str(); }

    Rat operator-() const { return Rat(mpq_class(-v_)); }

    Rat& operator+=(const Rat& o) { v_ += o.v_; return *this; }
    Rat& operator-=(const Rat& o) { v_ -= o.v_; return *this; }
    Rat& operator*=(const Rat& o) { v_ *= o.v_; return *this; }
    Rat& operator/=(const Rat& o) {
        if (o.is_zero()) throw FormulaPole("division by zero");
        v_ /= o.v_;
        return *this;
    }

    friend Rat operator+(Rat a, const Rat& b) { return a += b; }
    friend Rat operator-(Rat a, const Rat& b) { return a -= b; }
    friend Rat operator*(Rat a, const Rat& b) { return a *= b; }
    friend Rat operator/(Rat a, const Rat& b) { return a /= b; }

    friend bool operator==(const Rat& a, const Rat& b) { return a.v_ == b.v_; }
    friend std::strong_ordering operator<=>(const Rat& a, const Rat& b) {
        int c = cmp(a.v_, b.v_);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

    friend std::ostream& operator<<(std::ostream& os, const Rat& r) { return os << r.str(); }

private:
    mpq_class v_{0};
};

inline Rat abs(const Rat& r) { return r.sign() < 0 ? -r : r; }

/// r^e for integer e; negative exponents invert (FormulaPole on 0^-e).
inline Rat pow(const Rat& r, long e) {
    if (e < 0) return Rat(1) / pow(r, -e);
    mpz_class num, den;
    mpz_pow_ui(num.get_mpz_t(), r.raw().get_num_mpz_t(), static_cast<unsigned long>(e));
    mpz_pow_ui(den.get_mpz_t(), r.raw().get_den_mpz_t(), static_cast<unsigned long>(e));
    return Rat(mpq_class(num, den));
}

}  // namespace linrel

template <>
struct std::hash<linrel::Rat> {
    std::size_t operator()(const linrel::Rat& r) const noexcept {
        return std::hash<std::string>{}(r.str());
    }
};
