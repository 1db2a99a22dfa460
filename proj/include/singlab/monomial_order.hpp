#pragma once

#include <span>
#include <vector>

#include "singlab/monomial.hpp"
#include "singlab/polynomial.hpp"
#include "singlab/weights.hpp"

namespace singlab {

/// Weighted-degree order with lexicographic tiebreak. With positive weights
/// this is a multiplicative total order in which 1 is minimal, so the graded
/// structure of the quotient algebra is respected: basis monomials sort by
/// their weighted degree.
class MonomialOrder {
public:
    MonomialOrder() = default;
    explicit MonomialOrder(std::vector<Rational> weights) : w_(std::move(weights)) {}
    explicit MonomialOrder(const WeightSystem& ws) : w_(ws.w) {}

    std::span<const Rational> weights() const { return w_; }

    /// Strict "a before b" in increasing order; max element is the leading term.
    bool less(const Monomial& a, const Monomial& b) const {
        Rational da = a.weighted_degree(w_), db = b.weighted_degree(w_);
        if (da != db) return da < db;
        return a < b;
    }

    const Monomial& leading_monomial(const Polynomial& p) const {
        if (p.is_zero()) throw Error("leading_monomial: zero polynomial");
        const Monomial* best = nullptr;
        for (const auto& [m, c] : p.terms())
            if (!best || less(*best, m)) best = &m;
        return *best;
    }

    Rational leading_coefficient(const Polynomial& p) const {
        return p.coeff(leading_monomial(p));
    }

private:
    std::vector<Rational> w_;
};

}  // namespace singlab
