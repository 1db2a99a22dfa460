#pragma once

#include <algorithm>
#include <vector>

#include "singlab/milnor.hpp"
#include "singlab/weights.hpp"

namespace singlab {

/// Shifted weighted degree l(alpha) = sum_k (alpha_k + 1) w_k, exact.
inline Rational l_of(const Monomial& alpha, const WeightSystem& ws) {
    if (alpha.size() != ws.variable_count())
        throw VariableCountMismatch("l_of: length mismatch");
    Rational l = 0;
    for (std::size_t k = 0; k < ws.w.size(); ++k) l += Rational(alpha[k] + 1) * ws.w[k];
    return l;
}

/// One basis monomial with its derived exact data. `eigenvalue_turns` is the
/// reduced fraction q in [0,1) encoding the root of unity exp(2*pi*i*q);
/// `sign` is (-1)^(floor(l) + n).
struct SpectralDatum {
    Monomial alpha;
    Rational l_value;
    Rational gamma;
    Rational eigenvalue_turns;
    int sign = 1;
};

/// All spectral numbers of a singularity, ascending by gamma (ties by lex on
/// the exponent vector). Size mu; symmetric about (n-1)/2.
struct Spectrum {
    std::vector<SpectralDatum> data;
    int n = 0;

    std::vector<Rational> gammas() const {
        std::vector<Rational> g;
        g.reserve(data.size());
        for (const auto& d : data) g.push_back(d.gamma);
        return g;
    }
};

inline Spectrum compute_spectrum(const MilnorBasis& basis, const WeightSystem& ws, int n) {
    Spectrum sp;
    sp.n = n;
    sp.data.reserve(basis.mu);
    for (const auto& alpha : basis.monomials) {
        SpectralDatum d;
        d.alpha = alpha;
        d.l_value = l_of(alpha, ws);
        d.gamma = d.l_value - 1;
        d.eigenvalue_turns = frac_part(d.l_value);
        d.sign = (floor_int(d.l_value) + n) % 2 == 0 ? 1 : -1;
        sp.data.push_back(std::move(d));
    }
    std::sort(sp.data.begin(), sp.data.end(), [](const SpectralDatum& a, const SpectralDatum& b) {
        if (a.gamma != b.gamma) return a.gamma < b.gamma;
        return a.alpha < b.alpha;
    });

    // Exact symmetry gamma_j + gamma_{mu-1-j} = n - 1 and range (-1, n); a
    // failure here is an upstream bug, never valid output.
    const std::size_t mu = sp.data.size();
    const Rational target = Rational(n) - 1;
    for (std::size_t j = 0; j < mu; ++j) {
        const Rational& gj = sp.data[j].gamma;
        if (!(gj > -1 && gj < n))
            throw SymmetryViolation("spectral number " + to_string(gj) + " outside (-1, n)");
        if (gj + sp.data[mu - 1 - j].gamma != target)
            throw SymmetryViolation("spectrum symmetry failed at index " + std::to_string(j));
    }
    return sp;
}

/// Eigenvalue/sign components of the variation structure, multiplicities
/// summing to mu. Sorted by (eigenvalue fraction, sign).
struct VariationComponent {
    Rational eigenvalue_turns;
    int sign = 1;
    std::size_t multiplicity = 0;
};

inline std::vector<VariationComponent> variation_structure(const Spectrum& sp) {
    std::vector<VariationComponent> comps;
    for (const auto& d : sp.data) {
        auto it = std::find_if(comps.begin(), comps.end(), [&](const VariationComponent& c) {
            return c.eigenvalue_turns == d.eigenvalue_turns && c.sign == d.sign;
        });
        if (it == comps.end())
            comps.push_back({d.eigenvalue_turns, d.sign, 1});
        else
            ++it->multiplicity;
    }
    std::sort(comps.begin(), comps.end(),
              [](const VariationComponent& a, const VariationComponent& b) {
                  if (a.eigenvalue_turns != b.eigenvalue_turns)
                      return a.eigenvalue_turns < b.eigenvalue_turns;
                  return a.sign < b.sign;
              });
    return comps;
}

}  // namespace singlab
