#include <gtest/gtest.h>

#include "linrel/contiguous.hpp"

using namespace linrel;

namespace {

std::vector<Rat> coeffs(const ContigInstance& inst) {
    std::vector<Rat> out;
    for (const auto& t : inst.terms) out.push_back(t.coeff);
    return out;
}

// c1 = q * c2 for a single nonzero rational q
bool proportional(const std::vector<Rat>& c1, const std::vector<Rat>& c2) {
    if (c1.size() != c2.size()) return false;
    std::optional<Rat> q;
    for (std::size_t i = 0; i < c1.size(); ++i) {
        if (c2[i].is_zero() || c1[i].is_zero()) {
            if (c1[i] != c2[i]) return false;
            continue;
        }
        const Rat r = c1[i] / c2[i];
        if (q && *q != r) return false;
        q = r;
    }
    return true;
}

}  // namespace

TEST(BuildRelation, HermiteCoefficients) {
    for (int p = 0; p <= 3; ++p)
        for (int m = 0; m <= 3; ++m) {
            const auto inst = build_relation(FamilySpec::hermite(), {p, m, 2}, 1, 2);
            const std::vector<Rat> want{Rat(0), Rat(-2), Rat(-4 * p), Rat(2), Rat(4 * m)};
            EXPECT_EQ(coeffs(inst), want);
        }
}

TEST(BuildRelation, ShiftVectors) {
    const auto inst = build_relation(FamilySpec::laguerre(0), {2, 3, 4}, 1, 3);
    EXPECT_EQ(inst.shifted(0), (std::vector<int>{2, 3, 4}));
    EXPECT_EQ(inst.shifted(1), (std::vector<int>{3, 3, 4}));
    EXPECT_EQ(inst.shifted(2), (std::vector<int>{1, 3, 4}));
    EXPECT_EQ(inst.shifted(3), (std::vector<int>{2, 3, 5}));
    EXPECT_EQ(inst.shifted(4), (std::vector<int>{2, 3, 3}));
    for (const auto& t : inst.terms) {
        EXPECT_EQ(t.shift[1], 0);
        int nz = 0;
        for (int s : t.shift) nz += s != 0;
        EXPECT_LE(nz, 1);
    }
}

TEST(BuildRelation, GenericCoefficientsFromRecurrence) {
    const auto fam = FamilySpec::jacobi(Rat(1, 2), Rat(1, 3));
    const std::vector<int> d{2, 1, 3};
    const auto inst = build_relation(fam, d, 2, 3);
    const auto rj = recurrence_coeffs(fam, 1), rk = recurrence_coeffs(fam, 3);
    const std::vector<Rat> want{rj.B * rk.A - rj.A * rk.B, -rk.A, -rj.C * rk.A, rj.A, rk.C * rj.A};
    EXPECT_EQ(coeffs(inst), want);
}

TEST(BuildRelation, ZeroDegreeDropsC) {
    const auto inst = build_relation(FamilySpec::gegenbauer(Rat(1, 3)), {0, 0, 1}, 1, 2);
    EXPECT_EQ(inst.terms[2].coeff, Rat(0));
    EXPECT_EQ(inst.terms[4].coeff, Rat(0));
}

TEST(BuildRelation, BadIndices) {
    EXPECT_THROW(build_relation(FamilySpec::hermite(), {1, 1, 1}, 2, 2), std::invalid_argument);
    EXPECT_THROW(build_relation(FamilySpec::hermite(), {1, 1, 1}, 0, 2), std::invalid_argument);
    EXPECT_THROW(build_relation(FamilySpec::hermite(), {1, 1, 1}, 1, 4), std::invalid_argument);
}

TEST(BuildRelation, DegenerateBasis) {
    // Gegenbauer with λ = 0 has A_0 = 2(0+λ)/(0+1) = 0
    EXPECT_THROW(build_relation(FamilySpec::gegenbauer(0), {0, 1, 1}, 1, 2), DegenerateBasis);
}

TEST(EnumerateRelations, Counts) {
    const auto fam = FamilySpec::hermite();
    EXPECT_EQ(enumerate_relations(fam, {1, 2}).size(), 1u);
    EXPECT_EQ(enumerate_relations(fam, {1, 2, 3}).size(), 3u);
    EXPECT_EQ(enumerate_relations(fam, {1, 2, 3, 4}).size(), 6u);
    const std::vector<int> five{1, 1, 1, 1, 1};
    EXPECT_EQ(enumerate_relations(fam, five).size(), 10u);
    EXPECT_THROW(enumerate_relations(fam, {1}), std::invalid_argument);
}

TEST(Residual, Examples) {
    const auto fam = FamilySpec::hermite();
    const auto herm = make_evaluator(fam, 3, EvalMethod::closed);
    EXPECT_EQ(herm.id, "herm_triple_integral_ratio");
    for (const auto& inst : enumerate_relations(fam, {2, 1, 1})) EXPECT_TRUE(residual_exact(inst, herm).value.is_zero());
    // everything outside the support: [9,0,0] shifts never satisfy the triangle rule
    for (const auto& inst : enumerate_relations(fam, {9, 0, 0})) EXPECT_TRUE(residual_exact(inst, herm).value.is_zero());

    const auto g = FamilySpec::gegenbauer(Rat(1, 2));
    const auto geg = make_evaluator(g, 3, EvalMethod::closed);
    for (const auto& inst : enumerate_relations(g, {2, 2, 2})) {
        const auto r = residual_exact(inst, geg);
        EXPECT_TRUE(r.value.is_zero());
        EXPECT_EQ(r.evaluator_id, "geg_triple_integral_ratio");
    }
}

TEST(Residual, WrongEvaluatorIsCaught) {
    const auto fam = FamilySpec::hermite();
    const NamedEvaluator bogus{"bogus", [](std::span<const int> d) { return Rat(d[0] + 1); }};
    const auto inst = build_relation(fam, {2, 1, 1}, 1, 2);
    EXPECT_FALSE(residual_exact(inst, bogus).value.is_zero());
}

TEST(ScaledRelation, UnitScalesReduceToLaguerre) {
    for (const Rat& al : {Rat(0), Rat(1, 2)})
        for (const auto& pair : {std::pair{1, 2}, std::pair{1, 3}, std::pair{2, 3}}) {
            const auto s = scaled_relation(al, 1, 1, {2, 1, 3}, pair);
            const auto u = build_relation(FamilySpec::laguerre(al), {2, 1, 3}, pair.first, pair.second);
            EXPECT_EQ(coeffs(s), coeffs(u));
        }
}

TEST(ScaledRelation, Examples) {
    const Rat al(0), a(2), b(3);
    const auto eval = make_evaluator(FamilySpec::laguerre(al), 3, EvalMethod::closed, {Rat(1), a, b});
    for (const auto& pair : {std::pair{1, 2}, std::pair{1, 3}, std::pair{2, 3}})
        EXPECT_TRUE(residual_exact(scaled_relation(al, a, b, {1, 1, 1}, pair), eval).value.is_zero());
    // the scaled factor's A_n = -a/(n+1): pair (1,2) unshifted coefficient is B_p A_m - A_p B_m
    const auto s = scaled_relation(al, a, b, {1, 1, 1}, {1, 2});
    EXPECT_EQ(s.terms[1].coeff, a / Rat(2));
    EXPECT_EQ(s.terms[3].coeff, Rat(-1, 2));
    EXPECT_THROW(scaled_relation(al, 0, b, {1, 1, 1}, {1, 2}), InvalidOrthogonalityDomain);
}

TEST(VerifySuite, Examples) {
    VerifyOptions opt;
    auto rep = verify_suite(FamilySpec::hermite(), 4, make_evaluator(FamilySpec::hermite(), 3, EvalMethod::closed), opt);
    EXPECT_EQ(rep.passed, 125);
    EXPECT_EQ(rep.failed, 0);
    EXPECT_EQ(rep.skipped, 0);

    const auto jac = FamilySpec::jacobi(Rat(1, 2), Rat(1, 3));
    rep = verify_suite(jac, 3, make_evaluator(jac, 3, EvalMethod::closed), opt);
    EXPECT_EQ(rep.passed, 64);
    EXPECT_TRUE(rep.ok());

    VerifyOptions sopt;
    sopt.scales = {Rat(1), Rat(2), Rat(3)};
    const auto lag = FamilySpec::laguerre(0);
    rep = verify_suite(lag, 2, make_evaluator(lag, 3, EvalMethod::closed, sopt.scales), sopt);
    EXPECT_EQ(rep.passed, 27);
    EXPECT_TRUE(rep.ok());
}

TEST(VerifySuite, EveryFamilyBothEvaluators) {
    struct Case {
        FamilySpec fam;
        std::size_t factors;
        int max_degree;
    };
    const std::vector<Case> cases{
        {FamilySpec::gegenbauer(Rat(1, 3)), 3, 4}, {FamilySpec::gegenbauer(Rat(3, 2)), 4, 3},
        {FamilySpec::hermite(), 4, 3},             {FamilySpec::jacobi(Rat(1, 3), Rat(1, 3)), 3, 3},
        {FamilySpec::jacobi(1, Rat(3, 2)), 3, 3},  {FamilySpec::laguerre(Rat(1, 2)), 3, 4},
    };
    for (const auto& c : cases)
        for (auto method : {EvalMethod::closed, EvalMethod::oracle}) {
            VerifyOptions opt;
            opt.factors = c.factors;
            const auto rep = verify_suite(c.fam, c.max_degree, make_evaluator(c.fam, c.factors, method), opt);
            EXPECT_TRUE(rep.ok()) << c.fam.name() << " " << to_string(method);
            EXPECT_EQ(rep.skipped, 0);
            long expect = 1;
            for (std::size_t i = 0; i < c.factors; ++i) expect *= c.max_degree + 1;
            EXPECT_EQ(rep.passed, expect);
        }
}

TEST(VerifySuite, ScaledBothEvaluators) {
    for (const auto& [a, b] : {std::pair{Rat(1), Rat(1)}, std::pair{Rat(2), Rat(3)}, std::pair{Rat(1, 2), Rat(5)}})
        for (auto method : {EvalMethod::closed, EvalMethod::oracle}) {
            VerifyOptions opt;
            opt.scales = {Rat(1), a, b};
            const auto fam = FamilySpec::laguerre(Rat(1, 2));
            const auto rep = verify_suite(fam, 2, make_evaluator(fam, 3, method, opt.scales), opt);
            EXPECT_TRUE(rep.ok());
            EXPECT_EQ(rep.passed, 27);
        }
}

TEST(VerifySuite, EmptyGrid) {
    VerifyOptions opt;
    const auto rep = verify_suite(FamilySpec::hermite(), -1, make_evaluator(FamilySpec::hermite(), 3, EvalMethod::closed), opt);
    EXPECT_EQ(rep.passed + rep.failed + rep.skipped, 0);
    EXPECT_TRUE(rep.rows.empty());
}

TEST(VerifySuite, DeterministicAcrossThreadCounts) {
    const auto fam = FamilySpec::gegenbauer(Rat(1, 2));
    const auto eval = make_evaluator(fam, 3, EvalMethod::closed);
    VerifyOptions one, many;
    one.threads = 1;
    many.threads = 4;
    const auto r1 = verify_suite(fam, 4, eval, one);
    const auto r4 = verify_suite(fam, 4, eval, many);
    ASSERT_EQ(r1.rows.size(), r4.rows.size());
    for (std::size_t i = 0; i < r1.rows.size(); ++i) {
        EXPECT_EQ(r1.rows[i].degrees, r4.rows[i].degrees);
        EXPECT_EQ(r1.rows[i].status, r4.rows[i].status);
    }
    EXPECT_EQ(r1.passed, r4.passed);
}

TEST(VerifySuite, InjectedFailureProducesWitness) {
    VerifyOptions opt;
    opt.inject_failure = true;
    const auto rep = verify_suite(FamilySpec::hermite(), 2, make_evaluator(FamilySpec::hermite(), 3, EvalMethod::closed), opt);
    EXPECT_EQ(rep.failed, 1);
    EXPECT_FALSE(rep.ok());
    ASSERT_EQ(rep.witnesses.size(), 1u);
    EXPECT_EQ(rep.witnesses[0].degrees, (std::vector<int>{0, 0, 0}));
    EXPECT_FALSE(rep.witnesses[0].residual.is_zero());
}

TEST(VerifySuite, WitnessCap) {
    VerifyOptions opt;
    opt.max_witnesses = 3;
    const NamedEvaluator bogus{"bogus", [](std::span<const int> d) { return Rat(d[0] * d[0] + 1); }};
    const auto rep = verify_suite(FamilySpec::hermite(), 3, bogus, opt);
    EXPECT_GT(rep.failed, 3);
    EXPECT_EQ(rep.witnesses.size(), 3u);
}

TEST(VerifySuite, EvaluatorPolesAreSkipped) {
    VerifyOptions opt;
    const NamedEvaluator poly{"poles", [](std::span<const int> d) -> Rat {
                                  if (d[0] == 2) throw FormulaPole("test pole");
                                  return Rat(0);
                              }};
    const auto rep = verify_suite(FamilySpec::hermite(), 2, poly, opt);
    EXPECT_GT(rep.skipped, 0);
    EXPECT_EQ(rep.failed, 0);
}

TEST(DegreeGrid, Shape) {
    const auto g = degree_grid(3, 2);
    EXPECT_EQ(g.size(), 27u);
    EXPECT_EQ(g.front(), (std::vector<int>{0, 0, 0}));
    EXPECT_EQ(g.back(), (std::vector<int>{2, 2, 2}));
    EXPECT_TRUE(std::is_sorted(g.begin(), g.end()));
    EXPECT_TRUE(degree_grid(4, -1).empty());
}

TEST(Displayed, CorrectedDisplaysMatchGenerator) {
    const auto rels = displayed_relations();
    int corrected = 0, misprints = 0;
    for (const auto& rel : rels) {
        const int max = rel.factors == 4 ? 3 : 4;
        const auto grid = degree_grid(rel.factors, max);
        bool all = true;
        for (const auto& d : grid) all = all && display_matches_generator(rel, d);
        if (rel.misprint) {
            ++misprints;
            EXPECT_FALSE(all) << rel.name;
        } else {
            ++corrected;
            EXPECT_TRUE(all) << rel.name;
        }
    }
    EXPECT_EQ(corrected, 24);
    EXPECT_EQ(misprints, 2);
}

TEST(Displayed, ResidualsVanishForCorrectedDisplays) {
    for (const auto& rel : displayed_relations()) {
        if (rel.misprint) continue;
        const auto eval = make_evaluator(rel.family, rel.factors, EvalMethod::closed, rel.scales);
        for (const auto& d : degree_grid(rel.factors, 3)) EXPECT_TRUE(display_residual(rel, d, eval.fn).is_zero()) << rel.name;
    }
}

TEST(Displayed, OtherParameters) {
    DisplayParams prm;
    prm.lambda = Rat(3, 2);
    prm.alpha = 0;
    prm.beta = Rat(5, 2);
    prm.a = Rat(1, 2);
    prm.b = 5;
    for (const auto& rel : displayed_relations(prm)) {
        if (rel.misprint) continue;
        for (const auto& d : degree_grid(rel.factors, 2)) EXPECT_TRUE(display_matches_generator(rel, d)) << rel.name;
    }
}

TEST(Displayed, ProportionalToGeneratorAtGenericPoint) {
    // the Hermite display for pair (1,2) is half the generator
    const auto gen = build_relation(FamilySpec::hermite(), {3, 2, 1}, 1, 2);
    const std::vector<Rat> shown{Rat(0), Rat(-1), Rat(-2 * 3), Rat(1), Rat(2 * 2)};
    EXPECT_TRUE(proportional(coeffs(gen), shown));
}
