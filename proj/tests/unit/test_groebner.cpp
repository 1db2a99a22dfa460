#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <random>

#include "generators.hpp"
#include "milnor_oracle.hpp"
#include "singlab/groebner.hpp"
#include "singlab/milnor.hpp"
#include "singlab/parser.hpp"

using namespace singlab;

namespace {
const std::vector<std::string> kXYZ = {"x", "y", "z"};

std::vector<Monomial> leading_monomials(const GroebnerBasis& G) {
    std::vector<Monomial> lms;
    for (const auto& g : G.elements) lms.push_back(G.order.leading_monomial(g));
    return lms;
}
}  // namespace

TEST_CASE("monomial order: 1 is minimal, multiplicative, total") {
    WeightSystem ws = WeightSystem::from_beta({Integer(10), Integer(6), Integer(15)}, 30);
    MonomialOrder ord(ws);
    std::mt19937_64 rng(5);
    std::uniform_int_distribution<int> exp(0, 6);
    for (int trial = 0; trial < 200; ++trial) {
        Monomial a(3), b(3), c(3);
        for (int i = 0; i < 3; ++i) {
            a[i] = exp(rng);
            b[i] = exp(rng);
            c[i] = exp(rng);
        }
        if (!a.is_constant()) CHECK(ord.less(Monomial(3), a));
        const bool ab = ord.less(a, b), ba = ord.less(b, a);
        CHECK((a == b ? (!ab && !ba) : (ab != ba)));  // totality
        if (ab) CHECK(ord.less(a * c, b * c));        // multiplicativity
    }
}

TEST_CASE("monomial ideals come back unchanged") {
    Polynomial f = parse_polynomial("x^2+y^2+z^2", kXYZ);
    GroebnerBasis G = groebner(jacobian(f), MonomialOrder(infer_weights(f)));
    REQUIRE(G.elements.size() == 3);
    // monic generators x, y, z
    for (const auto& g : G.elements) {
        CHECK(g.term_count() == 1);
        CHECK(G.order.leading_coefficient(g) == 1);
    }

    Polynomial bp = parse_polynomial("x^3+y^5+z^2", kXYZ);
    GroebnerBasis G2 = groebner(jacobian(bp), MonomialOrder(infer_weights(bp)));
    auto lms = leading_monomials(G2);
    std::sort(lms.begin(), lms.end());
    CHECK(lms == std::vector<Monomial>{Monomial({0, 0, 1}), Monomial({0, 4, 0}),
                                       Monomial({2, 0, 0})});
}

TEST_CASE("the deformed cubic cone needs real reductions and matches the oracle") {
    Polynomial f = parse_polynomial("x^3+y^3+z^3+x*y*z", kXYZ);
    WeightSystem ws = infer_weights(f);
    GroebnerBasis G = groebner(jacobian(f), MonomialOrder(ws));

    // reduced-basis contract
    auto lms = leading_monomials(G);
    for (std::size_t i = 0; i < lms.size(); ++i)
        for (std::size_t j = 0; j < lms.size(); ++j)
            if (i != j) CHECK_FALSE(lms[i].divides(lms[j]));
    for (const auto& g : G.elements) CHECK(G.order.leading_coefficient(g) == 1);

    // every S-polynomial reduces to zero
    for (std::size_t i = 0; i < G.elements.size(); ++i)
        for (std::size_t j = i + 1; j < G.elements.size(); ++j)
            CHECK(normal_form(detail::s_polynomial(G.elements[i], G.elements[j], G.order),
                              G.elements, G.order)
                      .is_zero());

    // generators are in the ideal
    for (const auto& gen : jacobian(f))
        CHECK(normal_form(gen, G.elements, G.order).is_zero());

    // staircase size equals the brute-force corank
    CHECK(standard_monomials(G).mu == oracle::graded_corank(f, ws).mu);
    CHECK(oracle::graded_corank(f, ws).mu == 8);
}

TEST_CASE("reduced basis is independent of generator arrangement") {
    Polynomial f = parse_polynomial("x^3+y^3+z^3+x*y*z", kXYZ);
    MonomialOrder ord(infer_weights(f));
    std::vector<Polynomial> gens = jacobian(f);
    GroebnerBasis ref = groebner(gens, ord);

    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 4; ++trial) {
        std::shuffle(gens.begin(), gens.end(), rng);
        GroebnerBasis again = groebner(gens, ord);
        CHECK(again.elements == ref.elements);
    }
    // rescaling generators does not change the reduced basis
    std::vector<Polynomial> scaled;
    for (const auto& g : gens) scaled.push_back(g * Rational(3, 7));
    CHECK(groebner(scaled, ord).elements == ref.elements);
}

TEST_CASE("random ideals: S-polynomials of the result always reduce to zero") {
    std::mt19937_64 rng(23);
    MonomialOrder ord({Rational(1, 3), Rational(1, 3)});
    int nontrivial = 0;
    for (int trial = 0; trial < 25; ++trial) {
        std::vector<Polynomial> gens;
        for (int k = 0; k < 3; ++k) {
            Polynomial p = testgen::random_polynomial(rng, 2, 4, 3, 3);
            if (!p.is_zero()) gens.push_back(p);
        }
        if (gens.empty()) continue;
        GroebnerBasis G = groebner(gens, ord);
        if (G.elements.size() > 1) ++nontrivial;
        for (std::size_t i = 0; i < G.elements.size(); ++i)
            for (std::size_t j = i + 1; j < G.elements.size(); ++j)
                CHECK(normal_form(detail::s_polynomial(G.elements[i], G.elements[j], G.order),
                                  G.elements, G.order)
                          .is_zero());
        for (const auto& gen : gens) CHECK(normal_form(gen, G.elements, G.order).is_zero());
    }
    CHECK(nontrivial > 0);
}
