#pragma once

#include <algorithm>
#include <set>
#include <span>
#include <utility>
#include <vector>

#include "singlab/monomial_order.hpp"
#include "singlab/polynomial.hpp"

namespace singlab {

/// Reduced Groebner basis: every element monic, no leading term divides
/// another, every element fully reduced against the rest. For a fixed order
/// this form is unique, so output is deterministic regardless of the
/// generators' arrangement.
struct GroebnerBasis {
    std::vector<Polynomial> elements;
    MonomialOrder order;
};

/// Full normal form: remainder of p under multivariate division by basis.
/// Every term of the result is divisible by no leading monomial of the basis.
inline Polynomial normal_form(Polynomial p, std::span<const Polynomial> basis,
                              const MonomialOrder& ord) {
    const std::size_t nb = basis.size();
    std::vector<const Monomial*> lms(nb);
    for (std::size_t i = 0; i < nb; ++i) lms[i] = &ord.leading_monomial(basis[i]);

    Polynomial remainder(p.variable_count());
    while (!p.is_zero()) {
        const Monomial lm = ord.leading_monomial(p);
        const Rational lc = p.coeff(lm);
        bool reduced = false;
        for (std::size_t i = 0; i < nb; ++i) {
            if (!lms[i]->divides(lm)) continue;
            const Rational factor = lc / ord.leading_coefficient(basis[i]);
            p = p - Polynomial::term(lm / *lms[i], factor) * basis[i];
            reduced = true;
            break;
        }
        if (!reduced) {
            remainder.add_term(lm, lc);
            p.add_term(lm, -lc);
        }
    }
    return remainder;
}

namespace detail {

inline Polynomial make_monic(const Polynomial& p, const MonomialOrder& ord) {
    return p * (Rational(1) / ord.leading_coefficient(p));
}

inline Polynomial s_polynomial(const Polynomial& f, const Polynomial& g,
                               const MonomialOrder& ord) {
    const Monomial &lmf = ord.leading_monomial(f), &lmg = ord.leading_monomial(g);
    const Monomial l = Monomial::lcm(lmf, lmg);
    return Polynomial::term(l / lmf, Rational(1) / ord.leading_coefficient(f)) * f -
           Polynomial::term(l / lmg, Rational(1) / ord.leading_coefficient(g)) * g;
}

}  // namespace detail

/// Buchberger's algorithm with the product criterion and the chain criterion,
/// normal pair selection (smallest lcm first), followed by minimalization and
/// full inter-reduction. Exact rational arithmetic throughout.
inline GroebnerBasis groebner(std::span<const Polynomial> generators, MonomialOrder ord) {
    std::vector<Polynomial> g;
    for (const auto& p : generators)
        if (!p.is_zero()) g.push_back(detail::make_monic(p, ord));
    if (g.empty()) throw Error("groebner: no nonzero generators");

    using Pair = std::pair<std::size_t, std::size_t>;
    std::set<Pair> pending;
    auto add_pairs_for = [&](std::size_t j) {
        for (std::size_t i = 0; i < j; ++i) pending.insert({i, j});
    };
    for (std::size_t j = 1; j < g.size(); ++j) add_pairs_for(j);

    auto lm = [&](std::size_t i) -> const Monomial& { return ord.leading_monomial(g[i]); };

    while (!pending.empty()) {
        // Normal selection: minimal lcm in the order, ties by index pair.
        auto best = pending.begin();
        Monomial best_lcm = Monomial::lcm(lm(best->first), lm(best->second));
        for (auto it = std::next(pending.begin()); it != pending.end(); ++it) {
            Monomial l = Monomial::lcm(lm(it->first), lm(it->second));
            if (ord.less(l, best_lcm)) {
                best = it;
                best_lcm = std::move(l);
            }
        }
        const auto [i, j] = *best;
        pending.erase(best);

        // Product criterion: coprime leading monomials reduce to zero.
        if (best_lcm == lm(i) * lm(j)) continue;

        // Chain criterion: some g_k divides the lcm and both mixed pairs are
        // already handled.
        bool chained = false;
        for (std::size_t k = 0; k < g.size() && !chained; ++k) {
            if (k == i || k == j || !lm(k).divides(best_lcm)) continue;
            Pair ik{std::min(i, k), std::max(i, k)};
            Pair jk{std::min(j, k), std::max(j, k)};
            if (!pending.count(ik) && !pending.count(jk)) chained = true;
        }
        if (chained) continue;

        Polynomial s = normal_form(detail::s_polynomial(g[i], g[j], ord), g, ord);
        if (s.is_zero()) continue;
        g.push_back(detail::make_monic(s, ord));
        add_pairs_for(g.size() - 1);
    }

    // Minimalize: drop elements whose leading monomial another divides.
    std::vector<Polynomial> minimal;
    for (std::size_t i = 0; i < g.size(); ++i) {
        bool redundant = false;
        for (std::size_t k = 0; k < g.size() && !redundant; ++k) {
            if (k == i) continue;
            const Monomial &a = lm(k), &b = lm(i);
            if (a.divides(b) && (a != b || k < i)) redundant = true;
        }
        if (!redundant) minimal.push_back(g[i]);
    }

    // Inter-reduce to the unique reduced basis.
    std::vector<Polynomial> reduced(minimal.size(), Polynomial());
    for (std::size_t i = 0; i < minimal.size(); ++i) {
        std::vector<Polynomial> others;
        others.reserve(minimal.size() - 1);
        for (std::size_t k = 0; k < minimal.size(); ++k)
            if (k != i) others.push_back(minimal[k]);
        reduced[i] = detail::make_monic(normal_form(minimal[i], others, ord), ord);
    }
    std::sort(reduced.begin(), reduced.end(), [&](const Polynomial& a, const Polynomial& b) {
        return ord.less(ord.leading_monomial(a), ord.leading_monomial(b));
    });
    return GroebnerBasis{std::move(reduced), std::move(ord)};
}

}  // namespace singlab
