#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "generators.hpp"
#include "singlab/analysis.hpp"
#include "singlab/verdict.hpp"

using namespace singlab;

TEST_CASE("quadric cone report (n = 2)") {
    Analysis a = analyze_text("x^2+y^2+z^2");
    const ConditionReport& r = a.report;
    CHECK(r.m_f == 1);  // 3 - 2
    CHECK(r.seidel_ok);
    CHECK(r.gamma1 == Rational(1, 2));
    CHECK(r.section_condition_ok);
    CHECK(r.qhs_link);
    CHECK(r.n == 2);
    CHECK(r.verdict == Verdict::InfiniteOrderSymp);
}

TEST_CASE("Fermat cubic report: Seidel sum vanishes") {
    Analysis a = analyze_text("x^3+y^3+z^3");
    const ConditionReport& r = a.report;
    CHECK(r.m_f == 0);
    CHECK_FALSE(r.seidel_ok);
    CHECK(r.gamma1 == 0);
    CHECK_FALSE(r.section_condition_ok);
    CHECK_FALSE(r.qhs_link);
    CHECK(r.verdict == Verdict::Inconclusive);
}

TEST_CASE("four-variable quadric: integral gamma1 blocks the section condition") {
    Analysis a = analyze_text("x^2+y^2+z^2+w^2");
    const ConditionReport& r = a.report;
    CHECK(r.m_f == 2);
    CHECK(r.seidel_ok);
    CHECK(r.gamma1 == 1);
    CHECK_FALSE(r.section_condition_ok);
    CHECK(r.verdict == Verdict::Inconclusive);
}

TEST_CASE("n = 1 input is out of the theorem's range") {
    WeightSystem ws = WeightSystem::from_beta({Integer(1), Integer(1)}, 2);
    Analysis a = analyze_text("x*y", std::vector<std::string>{"x", "y"}, ws);
    CHECK(a.report.n == 1);
    CHECK(a.report.verdict == Verdict::NotApplicable);
    CHECK(a.report.gamma1 == 0);
}

TEST_CASE("winding predictions") {
    WeightSystem a1 = WeightSystem::from_beta({Integer(1), Integer(1), Integer(1)}, 2);
    auto p1 = winding_prediction(a1, 1);
    CHECK(p1.k == 2);
    CHECK(p1.gamma == 1);

    WeightSystem bp352 = WeightSystem::from_beta({Integer(10), Integer(6), Integer(15)}, 30);
    auto p2 = winding_prediction(bp352, 3);
    CHECK(p2.k == 90);
    CHECK(p2.gamma == 3);

    WeightSystem bp333 = WeightSystem::from_beta({Integer(1), Integer(1), Integer(1)}, 3);
    auto p3 = winding_prediction(bp333, 5);
    CHECK(p3.k == 15);
    CHECK(p3.gamma == 0);

    CHECK_THROWS_AS(winding_prediction(a1, 0), Error);
}

TEST_CASE("implication chain and exact identities on random input") {
    std::mt19937_64 rng(55);
    for (int trial = 0; trial < 50; ++trial) {
        auto exps = testgen::random_bp_exponents(rng, 3, 2, 9);
        Polynomial f = testgen::brieskorn_pham(exps);
        WeightSystem ws = testgen::bp_weights(exps);
        MilnorBasis mb = standard_monomials(groebner(jacobian(f), MonomialOrder(ws)));
        Spectrum sp = compute_spectrum(mb, ws, 2);
        ConditionReport r = build_report(ws, sp, 2);

        if (r.qhs_link) CHECK(r.section_condition_ok);
        if (r.section_condition_ok) CHECK(r.seidel_ok);
        CHECK(Rational(r.m_f) == Rational(ws.beta) * r.gamma1);
        CHECK(r.gamma1 == sp.data.front().gamma);

        MonodromyData md = monodromy(sp, ws);
        const bool unit_eig =
            std::count(md.eigenvalues.begin(), md.eigenvalues.end(), Rational(0)) > 0;
        CHECK(r.qhs_link == !unit_eig);
    }
}

TEST_CASE("comparator on the spec'd pairs") {
    Analysis f1 = analyze_text("x^3+y^5+z^2");
    Analysis f2 = analyze_text("y^3+z^5+x^2");
    auto rep = compare_analyses(f1, f2);
    CHECK(rep.same_weights);
    CHECK(rep.same_spectrum);
    CHECK(rep.equivalent);

    Analysis g1 = analyze_text("x^2+y^2+z^2");
    Analysis g2 = analyze_text("x^3+y^3+z^3");
    auto rep2 = compare_analyses(g1, g2);
    CHECK_FALSE(rep2.same_weights);
    CHECK_FALSE(rep2.same_spectrum);
    CHECK_FALSE(rep2.equivalent);

    // reflexive and symmetric
    CHECK(compare_analyses(f1, f1).equivalent);
    auto ab = compare_analyses(f1, g1), ba = compare_analyses(g1, f1);
    CHECK(ab.equivalent == ba.equivalent);
    CHECK(ab.same_weights == ba.same_weights);
}
