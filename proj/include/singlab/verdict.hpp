#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "singlab/monodromy.hpp"
#include "singlab/spectrum.hpp"

namespace singlab {

/// Outcome of the decision layer. The implemented conditions are sufficient
/// for infinite order only, so their absence is reported as Inconclusive,
/// never as a finite-order claim. NotApplicable covers fiber dimension n < 2.
enum class Verdict { InfiniteOrderSymp, Inconclusive, NotApplicable };

inline std::string to_string(Verdict v) {
    switch (v) {
        case Verdict::InfiniteOrderSymp: return "InfiniteOrderSymp";
        case Verdict::Inconclusive: return "Inconclusive";
        case Verdict::NotApplicable: return "NotApplicable";
    }
    return "?";
}

/// The exact decision data: m_f = sum(beta_i) - beta, the first spectral
/// number gamma1 = l(0) - 1, and the three nested predicates
///   qhs_link => section_condition => seidel.
struct ConditionReport {
    Integer m_f = 0;
    bool seidel_ok = false;
    Rational gamma1;
    bool section_condition_ok = false;
    bool qhs_link = false;
    int n = 0;
    Verdict verdict = Verdict::Inconclusive;
};

inline ConditionReport build_report(const WeightSystem& ws, const Spectrum& sp, int n) {
    ConditionReport r;
    r.n = n;
    r.m_f = 0;
    for (const auto& b : ws.beta_i) r.m_f += b;
    r.m_f -= ws.beta;
    r.seidel_ok = (r.m_f != 0);

    Rational wsum = 0;
    for (const auto& wi : ws.w) wsum += wi;
    r.gamma1 = wsum - 1;
    r.section_condition_ok = !is_integer(r.gamma1);

    r.qhs_link = std::none_of(sp.data.begin(), sp.data.end(),
                              [](const SpectralDatum& d) { return is_integer(d.l_value); });

    // m_f = beta * gamma1 exactly, and gamma1 is the spectrum minimum.
    if (Rational(r.m_f) != Rational(ws.beta) * r.gamma1)
        throw ConsistencyViolation("m_f != beta * gamma1");
    if (!sp.data.empty() && sp.data.front().gamma != r.gamma1)
        throw ConsistencyViolation("gamma1 is not the spectrum minimum");
    if (r.qhs_link && !r.section_condition_ok)
        throw ConsistencyViolation("qhs_link holds but section condition fails");
    if (r.section_condition_ok && !r.seidel_ok)
        throw ConsistencyViolation("section condition holds but m_f = 0");

    if (n < 2)
        r.verdict = Verdict::NotApplicable;
    else if (r.section_condition_ok)
        r.verdict = Verdict::InfiniteOrderSymp;
    else
        r.verdict = Verdict::Inconclusive;
    return r;
}

/// Predicted winding data for the degree-k = m*beta covering: the geometric
/// section winds gamma = m * (sum beta_i - beta) times over one base lift.
struct WindingPrediction {
    long m = 1;
    Integer k;
    Integer gamma;
};

inline WindingPrediction winding_prediction(const WeightSystem& ws, long m) {
    if (m < 1) throw Error("winding_prediction: m must be >= 1");
    WindingPrediction p;
    p.m = m;
    p.k = Integer(m) * ws.beta;
    Integer mf = 0;
    for (const auto& b : ws.beta_i) mf += b;
    mf -= ws.beta;
    p.gamma = Integer(m) * mf;
    return p;
}

/// Equal-weights vs equal-spectrum comparison of two singularities. The two
/// predicates are provably equivalent, so a mismatch is an internal bug alarm.
struct EquivalenceReport {
    bool same_weights = false;
    bool same_spectrum = false;
    bool equivalent = false;
};

inline EquivalenceReport compare_invariants(const WeightSystem& wf, const Spectrum& sf,
                                            const WeightSystem& wg, const Spectrum& sg) {
    EquivalenceReport rep;
    std::vector<Rational> a = wf.w, b = wg.w;
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    rep.same_weights = (a == b);

    std::vector<Rational> ga = sf.gammas(), gb = sg.gammas();
    std::sort(ga.begin(), ga.end());
    std::sort(gb.begin(), gb.end());
    rep.same_spectrum = (ga == gb);

    if (rep.same_weights != rep.same_spectrum)
        throw ConsistencyViolation("same_weights and same_spectrum disagree");
    rep.equivalent = rep.same_weights && rep.same_spectrum;
    return rep;
}

}  // namespace singlab
