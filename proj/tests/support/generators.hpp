#pragma once

// Deterministic random inputs for property tests. Every generator takes the
// engine by reference so tests control seeding and stay reproducible.

#include <random>
#include <vector>

#include "singlab/polynomial.hpp"
#include "singlab/weights.hpp"

namespace testgen {

using singlab::Integer;
using singlab::Monomial;
using singlab::Polynomial;
using singlab::Rational;

inline Polynomial random_polynomial(std::mt19937_64& rng, std::size_t nvars, int max_terms,
                                    int max_exp, int max_coeff) {
    std::uniform_int_distribution<int> term_count(0, max_terms);
    std::uniform_int_distribution<int> exp(0, max_exp);
    std::uniform_int_distribution<int> coeff(-max_coeff, max_coeff);
    std::uniform_int_distribution<int> den(1, 4);
    Polynomial p(nvars);
    const int terms = term_count(rng);
    for (int t = 0; t < terms; ++t) {
        Monomial m(nvars);
        for (std::size_t i = 0; i < nvars; ++i) m[i] = exp(rng);
        p.add_term(std::move(m), Rational(coeff(rng), den(rng)));
    }
    return p;
}

/// Exponent tuple for a Brieskorn-Pham polynomial, entries in [lo, hi].
inline std::vector<int> random_bp_exponents(std::mt19937_64& rng, std::size_t count, int lo,
                                            int hi) {
    std::uniform_int_distribution<int> a(lo, hi);
    std::vector<int> exps(count);
    for (auto& e : exps) e = a(rng);
    return exps;
}

/// sum_i c_i * z_i^{a_i}; unit coefficients by default.
inline Polynomial brieskorn_pham(const std::vector<int>& a,
                                 const std::vector<int>& coeffs = {}) {
    Polynomial p(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        Monomial m(a.size());
        m[i] = a[i];
        p.add_term(std::move(m), coeffs.empty() ? Rational(1) : Rational(coeffs[i]));
    }
    return p;
}

/// Exact weight system of a Brieskorn-Pham tuple: w_i = 1/a_i.
inline singlab::WeightSystem bp_weights(const std::vector<int>& a) {
    Integer beta = 1;
    for (int ai : a) beta = singlab::lcm_int(beta, Integer(ai));
    std::vector<Integer> beta_i;
    for (int ai : a) beta_i.push_back(beta / ai);
    return singlab::WeightSystem::from_beta(std::move(beta_i), beta);
}

}  // namespace testgen
