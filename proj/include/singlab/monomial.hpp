#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <numeric>
#include <span>
#include <vector>

#include "singlab/rational.hpp"

namespace singlab {

/// Exponent vector of a power product z_0^{e_0} ... z_n^{e_n}. The length is
/// fixed by the enclosing polynomial ring and never changes after construction.
struct Monomial {
    std::vector<int> exps;

    Monomial() = default;
    explicit Monomial(std::size_t nvars) : exps(nvars, 0) {}
    explicit Monomial(std::vector<int> e) : exps(std::move(e)) {}

    std::size_t size() const { return exps.size(); }
    int operator[](std::size_t i) const { return exps[i]; }
    int& operator[](std::size_t i) { return exps[i]; }

    bool is_constant() const {
        return std::all_of(exps.begin(), exps.end(), [](int e) { return e == 0; });
    }

    long total_degree() const {
        return std::accumulate(exps.begin(), exps.end(), 0L);
    }

    /// Sum of e_i * w_i, exact.
    Rational weighted_degree(std::span<const Rational> w) const {
        Rational d = 0;
        for (std::size_t i = 0; i < exps.size(); ++i)
            if (exps[i] != 0) d += Rational(exps[i]) * w[i];
        return d;
    }

    bool divides(const Monomial& other) const {
        for (std::size_t i = 0; i < exps.size(); ++i)
            if (exps[i] > other.exps[i]) return false;
        return true;
    }

    Monomial operator*(const Monomial& other) const {
        Monomial r(*this);
        for (std::size_t i = 0; i < exps.size(); ++i) r.exps[i] += other.exps[i];
        return r;
    }

    /// Exact quotient; caller guarantees other.divides(*this).
    Monomial operator/(const Monomial& other) const {
        Monomial r(*this);
        for (std::size_t i = 0; i < exps.size(); ++i) r.exps[i] -= other.exps[i];
        return r;
    }

    static Monomial lcm(const Monomial& a, const Monomial& b) {
        Monomial r(a);
        for (std::size_t i = 0; i < r.exps.size(); ++i) r.exps[i] = std::max(a.exps[i], b.exps[i]);
        return r;
    }

    /// Lexicographic order on exponent vectors; used as the storage key order.
    auto operator<=>(const Monomial& other) const { return exps <=> other.exps; }
    bool operator==(const Monomial& other) const = default;
};

}  // namespace singlab
