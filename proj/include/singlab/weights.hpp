#pragma once

#include <span>
#include <vector>

#include "singlab/polynomial.hpp"

namespace singlab {

/// Integer weights (beta_0,...,beta_n; beta) of a weighted C*-action, stored
/// in primitive form gcd(beta_0,...,beta_n,beta) = 1, together with the
/// normalized rational weights w_i = beta_i/beta in (0,1).
struct WeightSystem {
    std::vector<Integer> beta_i;
    Integer beta = 1;
    std::vector<Rational> w;

    std::size_t variable_count() const { return beta_i.size(); }

    /// Build from integer data; reduces to primitive form and validates
    /// 0 < w_i < 1 for every i.
    static WeightSystem from_beta(std::vector<Integer> beta_i, Integer beta) {
        if (beta_i.empty() || beta <= 0) throw Error("weight system: beta must be positive");
        Integer g = beta;
        for (const auto& b : beta_i) {
            if (b <= 0) throw NonPositiveWeights("weight system: all beta_i must be positive");
            g = gcd_int(g, b);
        }
        for (auto& b : beta_i) b /= g;
        beta /= g;
        WeightSystem ws;
        ws.beta_i = std::move(beta_i);
        ws.beta = beta;
        ws.w.reserve(ws.beta_i.size());
        for (const auto& b : ws.beta_i) {
            Rational wi(b, ws.beta);
            if (!(wi > 0 && wi < 1))
                throw NonPositiveWeights("weight system: w_i = " + to_string(wi) +
                                         " outside (0,1)");
            ws.w.push_back(wi);
        }
        return ws;
    }

    bool operator==(const WeightSystem& other) const {
        return beta_i == other.beta_i && beta == other.beta;
    }
};

/// True iff every support monomial alpha of f satisfies sum alpha_j beta_j = beta.
inline bool verify_quasihomogeneous(const Polynomial& f, const WeightSystem& ws) {
    if (f.variable_count() != ws.variable_count())
        throw VariableCountMismatch("verify_quasihomogeneous: variable count mismatch");
    for (const auto& [m, c] : f.terms()) {
        Integer d = 0;
        for (std::size_t j = 0; j < m.size(); ++j) d += Integer(m[j]) * ws.beta_i[j];
        if (d != ws.beta) return false;
    }
    return true;
}

/// Solve { sum_j alpha_j x_j = 1 : alpha in supp(f) } for rational x = w by
/// exact Gaussian elimination. Requires a unique solution with every w_j in
/// (0,1); denominators are cleared to the primitive integer form.
inline WeightSystem infer_weights(const Polynomial& f) {
    if (f.is_zero()) throw Error("infer_weights: zero polynomial");
    const std::size_t n = f.variable_count();

    // Augmented matrix [A | 1], one row per support monomial.
    std::vector<std::vector<Rational>> rows;
    rows.reserve(f.term_count());
    for (const auto& [m, c] : f.terms()) {
        std::vector<Rational> row(n + 1);
        for (std::size_t j = 0; j < n; ++j) row[j] = m[j];
        row[n] = 1;
        rows.push_back(std::move(row));
    }

    std::vector<std::size_t> pivot_col;
    std::size_t r = 0;
    for (std::size_t col = 0; col < n && r < rows.size(); ++col) {
        std::size_t piv = r;
        while (piv < rows.size() && rows[piv][col] == 0) ++piv;
        if (piv == rows.size()) continue;
        std::swap(rows[r], rows[piv]);
        Rational lead = rows[r][col];
        for (auto& v : rows[r]) v /= lead;
        for (std::size_t k = 0; k < rows.size(); ++k) {
            if (k == r || rows[k][col] == 0) continue;
            Rational factor = rows[k][col];
            for (std::size_t j = col; j <= n; ++j) rows[k][j] -= factor * rows[r][j];
        }
        pivot_col.push_back(col);
        ++r;
    }
    for (std::size_t k = r; k < rows.size(); ++k)
        if (rows[k][n] != 0)
            throw NoSolution("polynomial is not quasihomogeneous for any weight system");
    if (pivot_col.size() < n)
        throw NonUniqueWeights(
            "weight equations are underdetermined; supply an explicit weight system");

    std::vector<Rational> w(n);
    for (std::size_t i = 0; i < n; ++i) w[pivot_col[i]] = rows[i][n];

    Integer beta = 1;
    for (const auto& wi : w) beta = lcm_int(beta, rational_den(wi));
    std::vector<Integer> beta_i;
    beta_i.reserve(n);
    for (const auto& wi : w) {
        if (!(wi > 0 && wi < 1))
            throw NonPositiveWeights("inferred weight " + to_string(wi) + " outside (0,1)");
        beta_i.push_back(rational_num(wi) * (beta / rational_den(wi)));
    }
    return WeightSystem::from_beta(std::move(beta_i), beta);
}

}  // namespace singlab
