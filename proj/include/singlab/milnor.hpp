#pragma once

#include <algorithm>
#include <vector>

#include "singlab/groebner.hpp"

namespace singlab {

/// Partial derivatives (df/dz_0, ..., df/dz_n) generating the Jacobian ideal.
inline std::vector<Polynomial> jacobian(const Polynomial& f) { return partial_derivatives(f); }

/// Monomial basis of the quotient by a zero-dimensional monomial staircase:
/// exactly the monomials divisible by no leading term of the basis, sorted by
/// (weighted degree, lex). The first entry is always the constant monomial.
struct MilnorBasis {
    std::vector<Monomial> monomials;
    std::size_t mu = 0;
};

inline MilnorBasis standard_monomials(const GroebnerBasis& G) {
    if (G.elements.empty()) throw Error("standard_monomials: empty basis");
    const std::size_t n = G.elements.front().variable_count();

    std::vector<Monomial> lms;
    lms.reserve(G.elements.size());
    for (const auto& g : G.elements) lms.push_back(G.order.leading_monomial(g));

    // A finite complement requires a pure power of every variable among the
    // leading terms; the smallest such power bounds that exponent.
    std::vector<int> bound(n, -1);
    for (const auto& lm : lms) {
        int nz = -1;
        bool pure = true;
        for (std::size_t i = 0; i < n && pure; ++i) {
            if (lm[i] == 0) continue;
            if (nz >= 0) pure = false;
            nz = static_cast<int>(i);
        }
        if (!pure || nz < 0) continue;
        if (bound[nz] < 0 || lm[nz] < bound[nz]) bound[nz] = lm[nz];
    }
    for (std::size_t i = 0; i < n; ++i)
        if (bound[i] < 0)
            throw NonIsolated("no pure power of variable " + std::to_string(i) +
                              " among leading terms; the singularity is not isolated");

    std::vector<Monomial> basis;
    Monomial cur(n);
    // Odometer enumeration of the box prod [0, bound_i).
    while (true) {
        bool standard = true;
        for (const auto& lm : lms) {
            if (lm.divides(cur)) {
                standard = false;
                break;
            }
        }
        if (standard) basis.push_back(cur);
        std::size_t i = 0;
        while (i < n) {
            if (++cur[i] < bound[i]) break;
            cur[i] = 0;
            ++i;
        }
        if (i == n) break;
    }

    auto w = G.order.weights();
    std::sort(basis.begin(), basis.end(), [&](const Monomial& a, const Monomial& b) {
        Rational da = a.weighted_degree(w), db = b.weighted_degree(w);
        if (da != db) return da < db;
        return a < b;
    });
    if (basis.empty() || !basis.front().is_constant())
        throw Error("standard_monomials: constant monomial missing from basis");
    const std::size_t mu = basis.size();
    return MilnorBasis{std::move(basis), mu};
}

/// Exact product prod(1/w_i - 1); the classical closed form for the expected
/// basis size of a quasihomogeneous isolated singularity.
inline Rational milnor_orlik_product(const WeightSystem& ws) {
    Rational prod = 1;
    for (const auto& wi : ws.w) prod *= (Rational(1) / wi - 1);
    return prod;
}

/// True iff prod(1/w_i - 1) is a positive integer equal to mu.
inline bool milnor_orlik_check(const WeightSystem& ws, const Integer& mu) {
    Rational prod = milnor_orlik_product(ws);
    return is_integer(prod) && rational_num(prod) > 0 && rational_num(prod) == mu;
}

}  // namespace singlab
