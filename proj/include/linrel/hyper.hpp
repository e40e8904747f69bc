#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "linrel/error.hpp"
#include "linrel/exactcore.hpp"
#include "linrel/rational.hpp"

// Exact evaluation of terminating rFs and Kampe de Feriet double series.
//
// Series are summed by accumulating the term ratio. A denominator factor that
// vanishes at a step where the numerator is still nonzero is a genuine pole
// (DenominatorPole); if the numerator vanishes at the same step the series has
// terminated and the remaining terms are all zero.

namespace linrel {

/// Terminating rFs(numerator; denominator; argument).
struct HypSeriesSpec {
    std::vector<Rat> numerator_params;
    std::vector<Rat> denominator_params;
    Rat argument{1};
};

/// F^{p:q;k}_{l:m;n} with joint parameters on (r+s) and per-variable parameters on r and s.
struct KdFSpec {
    std::vector<Rat> upper_joint;
    std::vector<Rat> upper_first;
    std::vector<Rat> upper_second;
    std::vector<Rat> lower_joint;
    std::vector<Rat> lower_first;
    std::vector<Rat> lower_second;
    Rat x{0};
    Rat y{0};
};

/// Smallest -a over nonpositive-integer parameters a, if any.
inline std::optional<long> termination_index(std::span<const Rat> params) {
    std::optional<long> t;
    for (const auto& a : params) {
        if (!a.is_nonpositive_integer()) continue;
        long v = -a.to_long();
        if (!t || v < *t) t = v;
    }
    return t;
}

namespace detail {

inline Rat shifted_product(std::span<const Rat> params, long shift) {
    Rat r(1);
    const Rat s(shift);
    for (const auto& a : params) r *= a + s;
    return r;
}

}  // namespace detail

inline Rat pfq_eval(const HypSeriesSpec& spec) {
    const auto stop = termination_index(spec.numerator_params);
    if (!stop) {
        if (!spec.argument.is_zero())
            throw NonTerminating("pfq_eval: no nonpositive-integer numerator parameter");
        return Rat(1);
    }
    Rat sum(0);
    Rat term(1);
    for (long n = 0;; ++n) {
        sum += term;
        if (n == *stop || spec.argument.is_zero()) break;
        Rat num = detail::shifted_product(spec.numerator_params, n);
        if (num.is_zero()) break;
        Rat den = detail::shifted_product(spec.denominator_params, n);
        if (den.is_zero())
            throw DenominatorPole("pfq_eval: denominator vanishes at term " + std::to_string(n + 1));
        term *= num * spec.argument / (den * Rat(n + 1));
    }
    return sum;
}

inline Rat pfq_eval(std::vector<Rat> numerator, std::vector<Rat> denominator, const Rat& z) {
    return pfq_eval(HypSeriesSpec{std::move(numerator), std::move(denominator), z});
}

inline Rat kdf_eval(const KdFSpec& spec) {
    std::vector<Rat> first_upper = spec.upper_joint;
    first_upper.insert(first_upper.end(), spec.upper_first.begin(), spec.upper_first.end());
    std::vector<Rat> second_upper = spec.upper_joint;
    second_upper.insert(second_upper.end(), spec.upper_second.begin(), spec.upper_second.end());
    const auto stop_r = termination_index(first_upper);
    const auto stop_s = termination_index(second_upper);
    if (!stop_r && !spec.x.is_zero())
        throw NonTerminating("kdf_eval: series does not terminate in the first variable");
    if (!stop_s && !spec.y.is_zero())
        throw NonTerminating("kdf_eval: series does not terminate in the second variable");

    Rat sum(0);
    Rat row_term(1);  // term (r, 0)
    for (long r = 0;; ++r) {
        Rat term = row_term;
        for (long s = 0;; ++s) {
            sum += term;
            if (spec.y.is_zero() || (stop_s && s >= *stop_s)) break;
            Rat num = detail::shifted_product(spec.upper_joint, r + s) *
                      detail::shifted_product(spec.upper_second, s);
            if (num.is_zero()) break;
            Rat den = detail::shifted_product(spec.lower_joint, r + s) *
                      detail::shifted_product(spec.lower_second, s);
            if (den.is_zero())
                throw DenominatorPole("kdf_eval: denominator vanishes at (r,s) = (" + std::to_string(r) +
                                      "," + std::to_string(s + 1) + ")");
            term *= num * spec.y / (den * Rat(s + 1));
        }
        if (spec.x.is_zero() || (stop_r && r >= *stop_r)) break;
        Rat num = detail::shifted_product(spec.upper_joint, r) * detail::shifted_product(spec.upper_first, r);
        if (num.is_zero()) break;
        Rat den = detail::shifted_product(spec.lower_joint, r) * detail::shifted_product(spec.lower_first, r);
        if (den.is_zero())
            throw DenominatorPole("kdf_eval: denominator vanishes at (r,s) = (" + std::to_string(r + 1) + ",0)");
        row_term *= num * spec.x / (den * Rat(r + 1));
    }
    return sum;
}

/// base + {x_1, ..., x_n}: the stacked-parameter list convention.
inline std::vector<Rat> expand_stacked(const Rat& base, std::span<const Rat> offsets) {
    std::vector<Rat> out;
    out.reserve(offsets.size());
    for (const auto& x : offsets) out.push_back(base + x);
    return out;
}

inline std::vector<Rat> expand_stacked(const Rat& base, std::initializer_list<Rat> offsets) {
    return expand_stacked(base, std::span<const Rat>(offsets.begin(), offsets.size()));
}

/// (base + {x_1, ..., x_n}) / 2, the halved stacks used by very-well-poised series.
inline std::vector<Rat> expand_stacked_half(const Rat& base, std::initializer_list<Rat> offsets) {
    auto out = expand_stacked(base, offsets);
    for (auto& v : out) v /= Rat(2);
    return out;
}

}  // namespace linrel
