#pragma once

#include <map>
#include <vector>

#include "singlab/spectrum.hpp"

namespace singlab {

/// Dense integer polynomial in one variable T, constant term first.
using IntPoly = std::vector<Integer>;

namespace detail {

inline IntPoly poly_mul(const IntPoly& a, const IntPoly& b) {
    IntPoly r(a.size() + b.size() - 1, Integer(0));
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    }
    return r;
}

/// Exact quotient num/den for monic den; throws if division leaves a remainder.
inline IntPoly poly_div_exact(IntPoly num, const IntPoly& den) {
    if (den.empty() || den.back() != 1) throw Error("poly_div_exact: divisor must be monic");
    if (num.size() < den.size()) throw IntegralityViolation("poly_div_exact: degree underflow");
    IntPoly quot(num.size() - den.size() + 1, Integer(0));
    for (std::size_t k = quot.size(); k-- > 0;) {
        Integer c = num[k + den.size() - 1];
        quot[k] = c;
        if (c == 0) continue;
        for (std::size_t j = 0; j < den.size(); ++j) num[k + j] -= c * den[j];
    }
    for (const auto& c : num)
        if (c != 0) throw IntegralityViolation("poly_div_exact: nonzero remainder");
    return quot;
}

/// d-th cyclotomic polynomial via (T^d - 1) / prod of proper-divisor factors.
inline const IntPoly& cyclotomic(unsigned long d) {
    static std::map<unsigned long, IntPoly> cache;
    auto it = cache.find(d);
    if (it != cache.end()) return it->second;
    IntPoly num(d + 1, Integer(0));
    num[0] = -1;
    num[d] = 1;
    for (unsigned long e = 1; e < d; ++e)
        if (d % e == 0) num = poly_div_exact(std::move(num), cyclotomic(e));
    return cache.emplace(d, std::move(num)).first->second;
}

}  // namespace detail

/// Exact eigenvalue data of the algebraic monodromy: the multiset of root-of-
/// unity fractions, the integer characteristic polynomial, and the
/// multiplicative order (= lcm of the reduced denominators).
struct MonodromyData {
    std::vector<Rational> eigenvalues;  // fractions q in [0,1), sorted, size mu
    IntPoly char_poly;                  // prod (T - exp(2 pi i q)), degree mu
    Integer order = 1;
};

/// Builds MonodromyData from a spectrum. The characteristic polynomial is
/// assembled over Z by collecting, for each denominator d, the conjugate
/// fractions a/d into cyclotomic factors; unequal conjugate multiplicities
/// cannot come from an integer operator and raise IntegralityViolation.
inline MonodromyData monodromy(const Spectrum& sp, const WeightSystem& ws) {
    MonodromyData md;
    md.eigenvalues.reserve(sp.data.size());
    for (const auto& d : sp.data) md.eigenvalues.push_back(d.eigenvalue_turns);
    std::sort(md.eigenvalues.begin(), md.eigenvalues.end());

    // denominator -> (numerator -> multiplicity)
    std::map<Integer, std::map<Integer, std::size_t>> groups;
    for (const auto& q : md.eigenvalues) groups[rational_den(q)][rational_num(q)]+= 1;

    md.char_poly = IntPoly{Integer(1)};
    md.order = 1;
    for (const auto& [den, numerators] : groups) {
        const unsigned long d = den.template convert_to<unsigned long>();
        std::size_t mult = numerators.begin()->second;
        std::size_t seen = 0;
        for (Integer a = (d == 1 ? 0 : 1); a < den; ++a) {
            if (d != 1 && gcd_int(a, den) != 1) continue;
            auto it = numerators.find(a);
            if (it == numerators.end() || it->second != mult)
                throw IntegralityViolation(
                    "eigenvalue multiset is not closed under conjugation at denominator " +
                    to_string(den));
            ++seen;
            if (d == 1) break;
        }
        if (seen != numerators.size())
            throw IntegralityViolation("unexpected numerators at denominator " + to_string(den));
        const IntPoly& phi = detail::cyclotomic(d);
        for (std::size_t k = 0; k < mult; ++k)
            md.char_poly = detail::poly_mul(md.char_poly, phi);
        md.order = lcm_int(md.order, den);
    }

    if (md.char_poly.size() != md.eigenvalues.size() + 1)
        throw IntegralityViolation("characteristic polynomial degree mismatch");
    if (md.char_poly[0] != 1 && md.char_poly[0] != -1)
        throw IntegralityViolation("characteristic polynomial constant term not a unit");
    if (ws.beta % md.order != 0)
        throw OrderViolation("monodromy order " + to_string(md.order) +
                             " does not divide beta = " + to_string(ws.beta));
    return md;
}

}  // namespace singlab
