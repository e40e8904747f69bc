#pragma once

#include <algorithm>
#include <array>
#include <atomic>
#include <exception>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "linrel/error.hpp"
#include "linrel/families.hpp"
#include "linrel/lincoef.hpp"
#include "linrel/oracle.hpp"

// Five-term contiguous relations between integrals of products of
// orthogonal polynomials, obtained by writing x p_n(x) through the
// three-term recurrence in two different factors j and k.

namespace linrel {

struct ContigTerm {
    std::vector<int> shift;
    Rat coeff;
};

/// Terms are ordered [unshifted, +1 at j, -1 at j, +1 at k, -1 at k].
/// j and k are 1-based factor positions with j < k.
struct ContigInstance {
    FamilySpec family;
    std::vector<Rat> scales;  // per-factor argument scale; empty means all 1
    std::vector<int> degrees;
    int j = 1;
    int k = 2;
    std::array<ContigTerm, 5> terms;

    std::vector<int> shifted(std::size_t t) const {
        std::vector<int> out = degrees;
        for (std::size_t i = 0; i < out.size(); ++i) out[i] += terms[t].shift[i];
        return out;
    }
};

/// Integral ratio over a degree tuple; must return 0 outside the support.
using IntegralFn = std::function<Rat(std::span<const int>)>;

struct NamedEvaluator {
    std::string id;
    IntegralFn fn;
};

struct Residual {
    Rat value;
    ContigInstance instance;
    std::string evaluator_id;

    bool is_zero() const { return value.is_zero(); }
};

namespace detail {

inline RecurrenceCoeffs factor_recurrence(const FamilySpec& fam, std::span<const Rat> scales, std::size_t i,
                                          int n) {
    RecurrenceCoeffs r = recurrence_coeffs(fam, n);
    if (!scales.empty()) r.A *= scales[i];
    if (r.A.is_zero()) throw DegenerateBasis(fam.name() + ": A_n vanishes at n = " + std::to_string(n));
    return r;
}

inline std::vector<int> unit_shift(std::size_t size, std::size_t pos, int delta) {
    std::vector<int> v(size, 0);
    v[pos] = delta;
    return v;
}

}  // namespace detail

inline ContigInstance build_relation(const FamilySpec& fam, std::span<const int> degrees, int j, int k,
                                     std::span<const Rat> scales = {}) {
    const int size = static_cast<int>(degrees.size());
    if (!(1 <= j && j < k && k <= size)) throw std::invalid_argument("build_relation: need 1 <= j < k <= N+1");
    if (!scales.empty() && scales.size() != degrees.size())
        throw std::invalid_argument("build_relation: one scale per factor");
    for (int d : degrees)
        if (d < 0) throw std::invalid_argument("build_relation: negative degree");
    const std::size_t jj = static_cast<std::size_t>(j - 1), kk = static_cast<std::size_t>(k - 1);
    const auto rj = detail::factor_recurrence(fam, scales, jj, degrees[jj]);
    const auto rk = detail::factor_recurrence(fam, scales, kk, degrees[kk]);
    // Degree 0 never needs C_0: its -1 term multiplies p_{-1} = 0.
    const Rat cj = degrees[jj] == 0 ? Rat(0) : rj.C;
    const Rat ck = degrees[kk] == 0 ? Rat(0) : rk.C;

    ContigInstance inst;
    inst.family = fam;
    inst.scales.assign(scales.begin(), scales.end());
    inst.degrees.assign(degrees.begin(), degrees.end());
    inst.j = j;
    inst.k = k;
    const std::size_t n = degrees.size();
    inst.terms = {ContigTerm{std::vector<int>(n, 0), rj.B * rk.A - rj.A * rk.B},
                  ContigTerm{detail::unit_shift(n, jj, +1), -rk.A},
                  ContigTerm{detail::unit_shift(n, jj, -1), -cj * rk.A},
                  ContigTerm{detail::unit_shift(n, kk, +1), rj.A},
                  ContigTerm{detail::unit_shift(n, kk, -1), ck * rj.A}};
    return inst;
}

inline ContigInstance build_relation(const FamilySpec& fam, std::initializer_list<int> degrees, int j, int k) {
    return build_relation(fam, std::span<const int>(degrees.begin(), degrees.size()), j, k);
}

/// All C(N+1, 2) relations, pairs in lexicographic order.
inline std::vector<ContigInstance> enumerate_relations(const FamilySpec& fam, std::span<const int> degrees,
                                                       std::span<const Rat> scales = {}) {
    if (degrees.size() < 2) throw std::invalid_argument("enumerate_relations: need at least two factors");
    std::vector<ContigInstance> out;
    const int size = static_cast<int>(degrees.size());
    for (int j = 1; j <= size; ++j)
        for (int k = j + 1; k <= size; ++k) out.push_back(build_relation(fam, degrees, j, k, scales));
    return out;
}

inline std::vector<ContigInstance> enumerate_relations(const FamilySpec& fam, std::initializer_list<int> degrees) {
    return enumerate_relations(fam, std::span<const int>(degrees.begin(), degrees.size()));
}

/// Relation for ∫ L_p(x) L_m(ax) L_n(bx) x^α e^{-x}; pair is 1-based over (p, m, n).
inline ContigInstance scaled_relation(const Rat& alpha, const Rat& a, const Rat& b, std::array<int, 3> degrees,
                                      std::pair<int, int> pair) {
    if (a.sign() <= 0 || b.sign() <= 0) throw InvalidOrthogonalityDomain("scaled_relation: needs a, b > 0");
    const std::array<Rat, 3> scales{Rat(1), a, b};
    return build_relation(FamilySpec::laguerre(alpha), degrees, pair.first, pair.second, scales);
}

inline Residual residual_exact(const ContigInstance& inst, const NamedEvaluator& eval) {
    Rat sum(0);
    for (std::size_t t = 0; t < inst.terms.size(); ++t) {
        if (inst.terms[t].coeff.is_zero()) continue;
        const auto degs = inst.shifted(t);
        if (*std::min_element(degs.begin(), degs.end()) < 0) continue;
        sum += inst.terms[t].coeff * eval.fn(degs);
    }
    return Residual{sum, inst, eval.id};
}

// ---------------------------------------------------------------------------
// Evaluators

enum class EvalMethod { closed, oracle };

inline std::string to_string(EvalMethod m) { return m == EvalMethod::closed ? "closed" : "oracle"; }

/// Integral-ratio evaluator for `factors` polynomials of `fam`. With scales
/// (three factors, first scale 1) the scaled-Laguerre integral is used.
inline NamedEvaluator make_evaluator(const FamilySpec& fam, std::size_t factors, EvalMethod method,
                                     std::vector<Rat> scales = {}) {
    fam.require_orthogonality();
    if (!scales.empty()) {
        if (!fam.is_laguerre_like() || scales.size() != 3 || factors != 3 || scales[0] != Rat(1))
            throw std::invalid_argument("make_evaluator: scales need three Laguerre factors with the first unscaled");
        const Rat al = fam.alpha, a = scales[1], b = scales[2];
        if (method == EvalMethod::closed)
            return {"scaled_lag_integral_ratio", [al, a, b](std::span<const int> d) {
                        return scaled_lag_integral_ratio(d[0], d[1], d[2], al, a, b);
                    }};
        return {"oracle_scaled_integral_ratio", [al, scales](std::span<const int> d) {
                    return oracle_scaled_integral_ratio(al, d, scales);
                }};
    }
    if (method == EvalMethod::oracle)
        return {"oracle_integral_ratio", [fam](std::span<const int> d) { return oracle_integral_ratio(fam, d); }};
    std::string id;
    switch (fam.kind) {
        case FamilyKind::gegenbauer:
            id = factors == 4 ? "geg_quad_integral_ratio" : "geg_triple_integral_ratio";
            break;
        case FamilyKind::hermite:
            id = factors == 4 ? "herm_quad_integral_ratio" : "herm_triple_integral_ratio";
            break;
        case FamilyKind::jacobi:
            id = "jac_triple_integral_ratio";
            break;
        case FamilyKind::laguerre:
            id = "lag_triple_integral_ratio";
            break;
        case FamilyKind::scaled_laguerre:
            break;
    }
    const bool ok = (factors == 3 && fam.kind != FamilyKind::scaled_laguerre) ||
                    (factors == 4 && (fam.kind == FamilyKind::gegenbauer || fam.kind == FamilyKind::hermite));
    if (!ok)
        throw std::invalid_argument("make_evaluator: no closed form for " + std::to_string(factors) + " " +
                                    fam.name() + " factors");
    return {id, [fam](std::span<const int> d) { return integral_ratio_closed_form(fam, d); }};
}

// ---------------------------------------------------------------------------
// Suites

enum class TupleStatus { passed, failed, skipped };

inline std::string to_string(TupleStatus s) {
    switch (s) {
        case TupleStatus::passed: return "passed";
        case TupleStatus::failed: return "failed";
        case TupleStatus::skipped: return "skipped";
    }
    return "?";
}

struct Witness {
    std::vector<int> degrees;
    int j = 0;
    int k = 0;
    Rat residual;
    std::string message;
};

/// One row per degree tuple; a tuple passes when every index pair does.
struct TupleRow {
    std::vector<int> degrees;
    TupleStatus status = TupleStatus::passed;
    int relations = 0;
    std::optional<Witness> witness;
    std::string kind = "contiguous";
};

struct SuiteReport {
    std::string suite;
    std::string evaluator_id;
    long passed = 0;
    long failed = 0;
    long skipped = 0;
    std::vector<Witness> witnesses;
    std::vector<TupleRow> rows;

    bool ok() const { return failed == 0; }
};

struct VerifyOptions {
    std::size_t factors = 3;
    std::vector<Rat> scales;
    unsigned threads = 0;  // 0: hardware concurrency
    std::size_t max_witnesses = 10;
    bool inject_failure = false;  // test hook: the first tuple reports a nonzero residual
};

/// Every tuple in [0, max_degree]^factors, lexicographic.
inline std::vector<std::vector<int>> degree_grid(std::size_t factors, int max_degree) {
    std::vector<std::vector<int>> out;
    if (max_degree < 0 || factors == 0) return out;
    std::vector<int> cur(factors, 0);
    while (true) {
        out.push_back(cur);
        std::size_t i = factors;
        while (i > 0) {
            --i;
            if (cur[i] < max_degree) {
                ++cur[i];
                break;
            }
            cur[i] = 0;
            if (i == 0) return out;
        }
    }
}

inline unsigned resolve_threads(unsigned requested) {
    if (requested > 0) return requested;
    const unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : hw;
}

/// Runs fn(i) for i in [0, count) on up to `threads` workers. fn must only
/// write to slot i of its output.
template <class Fn>
void parallel_for(std::size_t count, unsigned threads, Fn&& fn) {
    const unsigned workers = static_cast<unsigned>(std::min<std::size_t>(resolve_threads(threads), count));
    if (workers <= 1) {
        for (std::size_t i = 0; i < count; ++i) fn(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    std::exception_ptr failure;
    std::atomic<bool> failed{false};
    for (unsigned w = 0; w < workers; ++w) {
        pool.emplace_back([&] {
            try {
                for (std::size_t i = next++; i < count && !failed; i = next++) fn(i);
            } catch (...) {
                if (!failed.exchange(true)) failure = std::current_exception();
            }
        });
    }
    for (auto& t : pool) t.join();
    if (failure) std::rethrow_exception(failure);
}

inline TupleRow verify_tuple(const FamilySpec& fam, const std::vector<int>& degrees, const NamedEvaluator& eval,
                             std::span<const Rat> scales, bool inject) {
    TupleRow row;
    row.degrees = degrees;
    try {
        for (const auto& inst : enumerate_relations(fam, degrees, scales)) {
            ++row.relations;
            Residual r = residual_exact(inst, eval);
            if (inject) {
                r.value += Rat(1);
                inject = false;
            }
            if (!r.is_zero()) {
                row.status = TupleStatus::failed;
                row.witness = Witness{degrees, inst.j, inst.k, r.value, "nonzero residual"};
                return row;
            }
        }
    } catch (const FormulaPole& e) {
        row.status = TupleStatus::skipped;
        row.witness = Witness{degrees, 0, 0, Rat(0), e.what()};
    } catch (const DenominatorPole& e) {
        row.status = TupleStatus::skipped;
        row.witness = Witness{degrees, 0, 0, Rat(0), e.what()};
    } catch (const Error& e) {
        row.status = TupleStatus::failed;
        row.witness = Witness{degrees, 0, 0, Rat(0), e.what()};
    }
    return row;
}

/// Checks every contiguous relation on every tuple with degrees <= max_degree.
/// Results are in grid order whatever the thread count.
inline SuiteReport verify_suite(const FamilySpec& fam, int max_degree, const NamedEvaluator& eval,
                                const VerifyOptions& opt = {}) {
    fam.require_orthogonality();
    SuiteReport rep;
    rep.suite = "contiguous";
    rep.evaluator_id = eval.id;
    const auto grid = degree_grid(opt.factors, max_degree);
    rep.rows.resize(grid.size());
    parallel_for(grid.size(), opt.threads, [&](std::size_t i) {
        rep.rows[i] = verify_tuple(fam, grid[i], eval, opt.scales, opt.inject_failure && i == 0);
    });
    for (const auto& row : rep.rows) {
        switch (row.status) {
            case TupleStatus::passed: ++rep.passed; break;
            case TupleStatus::failed:
                ++rep.failed;
                if (rep.witnesses.size() < opt.max_witnesses) rep.witnesses.push_back(*row.witness);
                break;
            case TupleStatus::skipped: ++rep.skipped; break;
        }
    }
    return rep;
}

// ---------------------------------------------------------------------------
// Relations as displayed for each family, for comparison with the generator

/// A relation as displayed: a list of (shift, coefficient) terms in the
/// integrals. `a_form` displays (Jacobi) are written in linearization
/// coefficients instead, which differ from the integrals by h_l/h_0 where l
/// is the first degree.
struct DisplayedRelation {
    std::string name;
    FamilySpec family;
    std::size_t factors = 3;
    std::vector<Rat> scales;
    int j = 1;
    int k = 2;
    bool a_form = false;
    bool misprint = false;  // known misprint, kept to show it is not an identity
    std::function<std::vector<ContigTerm>(std::span<const int>)> terms;
};

namespace detail {

inline Rat a_form_weight(const FamilySpec& fam, int l) { return l < 0 ? Rat(0) : norm_ratio(fam, l); }

inline std::vector<int> plus(std::span<const int> base, const std::vector<int>& shift) {
    std::vector<int> out(base.begin(), base.end());
    for (std::size_t i = 0; i < out.size(); ++i) out[i] += shift[i];
    return out;
}

inline bool has_negative(const std::vector<int>& v) { return *std::min_element(v.begin(), v.end()) < 0; }

}  // namespace detail

/// True when the displayed relation at `degrees` equals the generator's
/// relation times one nonzero rational. Terms landing on a -1 degree are
/// ignored on both sides (they multiply p_{-1} = 0).
inline bool display_matches_generator(const DisplayedRelation& rel, std::span<const int> degrees) {
    const auto gen = build_relation(rel.family, degrees, rel.j, rel.k, rel.scales);
    std::map<std::vector<int>, Rat> lhs, rhs;
    const Rat base_weight = rel.a_form ? detail::a_form_weight(rel.family, degrees[0]) : Rat(1);
    for (const auto& t : gen.terms) {
        const auto target = detail::plus(degrees, t.shift);
        if (detail::has_negative(target) || t.coeff.is_zero()) continue;
        Rat c = t.coeff;
        if (rel.a_form) c = c * detail::a_form_weight(rel.family, target[0]) / base_weight;
        rhs[t.shift] += c;
    }
    for (const auto& t : rel.terms(degrees)) {
        if (detail::has_negative(detail::plus(degrees, t.shift)) || t.coeff.is_zero()) continue;
        lhs[t.shift] += t.coeff;
    }
    std::erase_if(lhs, [](const auto& kv) { return kv.second.is_zero(); });
    std::erase_if(rhs, [](const auto& kv) { return kv.second.is_zero(); });
    if (lhs.size() != rhs.size()) return false;
    std::optional<Rat> rho;
    for (const auto& [shift, c] : lhs) {
        auto it = rhs.find(shift);
        if (it == rhs.end()) return false;
        const Rat q = c / it->second;
        if (!rho) rho = q;
        else if (*rho != q) return false;
    }
    return true;
}

/// Displayed relation evaluated with an integral evaluator (a-form terms are
/// divided by h_l/h_0 first).
inline Rat display_residual(const DisplayedRelation& rel, std::span<const int> degrees, const IntegralFn& eval) {
    Rat sum(0);
    for (const auto& t : rel.terms(degrees)) {
        const auto target = detail::plus(degrees, t.shift);
        if (detail::has_negative(target) || t.coeff.is_zero()) continue;
        Rat v = eval(target);
        if (rel.a_form) v /= detail::a_form_weight(rel.family, target[0]);
        sum += t.coeff * v;
    }
    return sum;
}

namespace detail {

inline std::vector<int> sh(std::size_t n, std::initializer_list<std::pair<std::size_t, int>> moves) {
    std::vector<int> v(n, 0);
    for (auto [i, d] : moves) v[i] += d;
    return v;
}

// Terms in the order [unshifted, +1 at i, -1 at i, +1 at j, -1 at j].
inline std::vector<ContigTerm> five(std::size_t n, std::size_t i, std::size_t j, std::array<Rat, 5> c) {
    return {{sh(n, {}), c[0]},
            {sh(n, {{i, 1}}), c[1]},
            {sh(n, {{i, -1}}), c[2]},
            {sh(n, {{j, 1}}), c[3]},
            {sh(n, {{j, -1}}), c[4]}};
}

inline void add_gegenbauer(std::vector<DisplayedRelation>& out, const Rat& l) {
    const auto fam = FamilySpec::gegenbauer(l);
    const Rat two_l = Rat(2) * l;
    // (u+λ)(v+1)C_v^+ ... in the pair (i, j) of factors with degrees u = d[i], v = d[j]
    auto rel = [&](std::string name, std::size_t n, std::size_t i, std::size_t j) {
        out.push_back({std::move(name), fam, n, {}, int(i + 1), int(j + 1), false, false,
                       [n, i, j, l, two_l](std::span<const int> d) {
                           const Rat u(d[i]), v(d[j]);
                           return five(n, i, j,
                                       {Rat(0), (v + l) * (u + Rat(1)), (u + two_l - Rat(1)) * (v + l),
                                        -(u + l) * (v + Rat(1)), -(u + l) * (v + two_l - Rat(1))});
                       }});
    };
    rel("gegenbauer triple (p,m)", 3, 0, 1);
    rel("gegenbauer triple (m,n)", 3, 1, 2);
    rel("gegenbauer triple (p,n)", 3, 0, 2);
    rel("gegenbauer quadruple (p,l)", 4, 0, 3);
    rel("gegenbauer quadruple (m,l)", 4, 1, 3);
    rel("gegenbauer quadruple (n,l)", 4, 2, 3);
}

inline void add_hermite(std::vector<DisplayedRelation>& out) {
    const auto fam = FamilySpec::hermite();
    auto rel = [&](std::string name, std::size_t n, std::size_t i, std::size_t j) {
        out.push_back({std::move(name), fam, n, {}, int(i + 1), int(j + 1), false, false,
                       [n, i, j](std::span<const int> d) {
                           return five(n, i, j, {Rat(0), Rat(-1), Rat(-2 * d[i]), Rat(1), Rat(2 * d[j])});
                       }});
    };
    rel("hermite triple (p,m)", 3, 0, 1);
    rel("hermite triple (p,n)", 3, 0, 2);
    rel("hermite triple (m,n)", 3, 1, 2);
    // Four factors, degrees ordered (k, p, m, n).
    rel("hermite quadruple (p,m)", 4, 1, 2);
    rel("hermite quadruple (p,n)", 4, 1, 3);
    rel("hermite quadruple (k,p)", 4, 0, 1);
    rel("hermite quadruple (m,n)", 4, 2, 3);
    rel("hermite quadruple (k,m)", 4, 0, 2);
    rel("hermite quadruple (k,n)", 4, 0, 3);
    // Printed with F_{k+1,p,m+1,n} for the first term.
    out.push_back({"hermite quadruple (k,n) as printed", fam, 4, {}, 1, 4, false, true, [](std::span<const int> d) {
                       return std::vector<ContigTerm>{{sh(4, {{0, 1}, {2, 1}}), Rat(1)},
                                                      {sh(4, {{3, 1}}), Rat(-1)},
                                                      {sh(4, {{0, -1}}), Rat(2 * d[0])},
                                                      {sh(4, {{3, -1}}), Rat(-2 * d[3])}};
                   }});
}

inline void add_jacobi(std::vector<DisplayedRelation>& out, const Rat& al, const Rat& be) {
    const auto fam = FamilySpec::jacobi(al, be);
    const Rat s = al + be;
    const Rat diff2 = Rat(2) * (al - be) * s;
    // Degrees (l, m, n); written in linearization coefficients.
    out.push_back({"jacobi (m,n)", fam, 3, {}, 2, 3, true, false, [=](std::span<const int> d) {
                       const Rat m(d[1]), n(d[2]);
                       return five(3, 1, 2,
                                   {diff2 * (m - n) * (s + m + n + Rat(1)) * (s + Rat(2) * n + Rat(1)) /
                                        ((s + Rat(2) * m) * (s + Rat(2) * n)),
                                    (s + m + Rat(1)) * (m + Rat(1)) * (s + Rat(2) * n + Rat(1)) *
                                        (s + Rat(2) * n + Rat(2)) / (s + Rat(2) * m + Rat(1)),
                                    (al + m) * (be + m) * (s + Rat(2) * m + Rat(2)) * (s + Rat(2) * n + Rat(1)) *
                                        (s + Rat(2) * n + Rat(2)) / ((s + Rat(2) * m) * (s + Rat(2) * m + Rat(1))),
                                    -(s + Rat(2) * m + Rat(2)) * (s + n + Rat(1)) * (n + Rat(1)),
                                    -(s + Rat(2) * m + Rat(2)) * (al + n) * (be + n) * (s + Rat(2) * n + Rat(2)) /
                                        (s + Rat(2) * n)});
                   }});
    auto ln = [=](bool printed) {
        return [=](std::span<const int> d) {
            const Rat l(d[0]), n(d[2]);
            Rat up = (s + Rat(2) * n + Rat(2)) * (al + l + Rat(1)) * (be + l + Rat(1)) / (s + Rat(2) * l + Rat(3));
            if (printed) up *= s + Rat(2) * l + Rat(1);
            return five(3, 0, 2,
                        {diff2 * (l - n) * (s + n + l + Rat(1)) / ((s + Rat(2) * l) * (s + Rat(2) * n)), up,
                         l * (s + l) * (s + Rat(2) * l + Rat(2)) * (s + Rat(2) * n + Rat(2)) /
                             ((s + Rat(2) * l - Rat(1)) * (s + Rat(2) * l)),
                         -(s + Rat(2) * l + Rat(2)) * (s + n + Rat(1)) * (n + Rat(1)) / (s + Rat(2) * n + Rat(1)),
                         -(al + n) * (be + n) * (s + Rat(2) * l + Rat(2)) * (s + Rat(2) * n + Rat(2)) /
                             ((s + Rat(2) * n + Rat(1)) * (s + Rat(2) * n))});
        };
    };
    out.push_back({"jacobi (l,n)", fam, 3, {}, 1, 3, true, false, ln(false)});
    out.push_back({"jacobi (l,n) as printed", fam, 3, {}, 1, 3, true, true, ln(true)});
    out.push_back({"jacobi (l,m)", fam, 3, {}, 1, 2, true, false, [=](std::span<const int> d) {
                       const Rat l(d[0]), m(d[1]);
                       return five(3, 0, 1,
                                   {diff2 * (l - m) * (s + m + l + Rat(1)) /
                                        ((s + Rat(2) * l) * (s + Rat(2) * l + Rat(2)) * (s + Rat(2) * m)),
                                    (al + l + Rat(1)) * (be + l + Rat(1)) * (s + Rat(2) * m + Rat(2)) /
                                        ((s + Rat(2) * l + Rat(2)) * (s + Rat(2) * l + Rat(3))),
                                    l * (s + l) * (s + Rat(2) * m + Rat(2)) /
                                        ((s + Rat(2) * l - Rat(1)) * (s + Rat(2) * l)),
                                    -(m + Rat(1)) * (s + m + Rat(1)) / (s + Rat(2) * m + Rat(1)),
                                    -(al + m) * (be + m) * (s + Rat(2) * m + Rat(2)) /
                                        ((s + Rat(2) * m) * (s + Rat(2) * m + Rat(1)))});
                   }});
}

inline void add_laguerre(std::vector<DisplayedRelation>& out, const Rat& al) {
    const auto fam = FamilySpec::laguerre(al);
    auto rel = [&](std::string name, std::size_t i, std::size_t j) {
        out.push_back({std::move(name), fam, 3, {}, int(i + 1), int(j + 1), false, false,
                       [i, j, al](std::span<const int> d) {
                           const Rat u(d[i]), v(d[j]);
                           return five(3, i, j,
                                       {Rat(-2) * (u - v), u + Rat(1), u + al, -(v + Rat(1)), -(v + al)});
                       }});
    };
    rel("laguerre (p,m)", 0, 1);
    rel("laguerre (p,n)", 0, 2);
    rel("laguerre (m,n)", 1, 2);
}

inline void add_scaled_laguerre(std::vector<DisplayedRelation>& out, const Rat& al, const Rat& a, const Rat& b) {
    const auto fam = FamilySpec::laguerre(al);
    const std::vector<Rat> scales{Rat(1), a, b};
    // Pair (i, j) with scales si, sj: sj-weighted i-terms against si-weighted j-terms.
    auto rel = [&](std::string name, std::size_t i, std::size_t j) {
        const Rat si = scales[i], sj = scales[j];
        out.push_back({std::move(name), fam, 3, scales, int(i + 1), int(j + 1), false, false,
                       [=](std::span<const int> d) {
                           const Rat u(d[i]), v(d[j]);
                           return five(3, i, j,
                                       {si * (Rat(2) * v + al + Rat(1)) - sj * (Rat(2) * u + al + Rat(1)),
                                        sj * (u + Rat(1)), sj * (u + al), -si * (v + Rat(1)), -si * (v + al)});
                       }});
    };
    rel("scaled laguerre (p,m)", 0, 1);
    rel("scaled laguerre (p,n)", 0, 2);
    rel("scaled laguerre (m,n)", 1, 2);
}

}  // namespace detail

struct DisplayParams {
    Rat lambda{1, 3};
    Rat alpha{1, 2};
    Rat beta{1, 3};
    Rat a{2};
    Rat b{3};
};

/// Every displayed family relation, at the given parameters.
inline std::vector<DisplayedRelation> displayed_relations(const DisplayParams& prm = {}) {
    std::vector<DisplayedRelation> out;
    detail::add_gegenbauer(out, prm.lambda);
    detail::add_hermite(out);
    detail::add_jacobi(out, prm.alpha, prm.beta);
    detail::add_laguerre(out, prm.alpha);
    detail::add_scaled_laguerre(out, prm.alpha, prm.a, prm.b);
    return out;
}

}  // namespace linrel
