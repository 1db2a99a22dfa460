#pragma once

#include <algorithm>
#include <chrono>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "singlab/milnor.hpp"
#include "singlab/monodromy.hpp"
#include "singlab/parser.hpp"
#include "singlab/spectrum.hpp"
#include "singlab/verdict.hpp"

namespace singlab {

using Json = nlohmann::ordered_json;

/// Everything the pipeline derives from one input polynomial.
struct Analysis {
    Polynomial f;
    std::vector<std::string> variables;
    WeightSystem weights;
    bool weights_supplied = false;
    GroebnerBasis groebner_basis;
    MilnorBasis basis;
    bool milnor_orlik_ok = false;
    Spectrum spectrum;
    std::vector<VariationComponent> variation;
    MonodromyData monodromy_data;
    ConditionReport report;
    double elapsed_ms = 0.0;

    int fiber_dimension() const { return static_cast<int>(f.variable_count()) - 1; }
};

/// Full pipeline: weights (inferred unless supplied), Jacobian ideal, reduced
/// Groebner basis, monomial basis, spectrum, variation structure, monodromy
/// data, decision report. Throws the module errors on invalid input.
inline Analysis run_analysis(Polynomial f, std::vector<std::string> variables,
                             std::optional<WeightSystem> supplied = std::nullopt) {
    const auto t0 = std::chrono::steady_clock::now();
    Analysis a;
    a.f = std::move(f);
    a.variables = std::move(variables);

    if (supplied) {
        if (supplied->variable_count() != a.f.variable_count())
            throw VariableCountMismatch("supplied weight system has wrong length");
        if (!verify_quasihomogeneous(a.f, *supplied))
            throw NoSolution("polynomial is not quasihomogeneous for the supplied weights");
        a.weights = *supplied;
        a.weights_supplied = true;
    } else {
        a.weights = infer_weights(a.f);
    }

    a.groebner_basis = groebner(jacobian(a.f), MonomialOrder(a.weights));
    a.basis = standard_monomials(a.groebner_basis);
    a.milnor_orlik_ok = milnor_orlik_check(a.weights, Integer(a.basis.mu));
    if (!a.milnor_orlik_ok)
        throw ConsistencyViolation("basis size " + std::to_string(a.basis.mu) +
                                   " differs from the weight product formula");

    const int n = a.fiber_dimension();
    a.spectrum = compute_spectrum(a.basis, a.weights, n);
    a.variation = variation_structure(a.spectrum);
    a.monodromy_data = monodromy(a.spectrum, a.weights);
    a.report = build_report(a.weights, a.spectrum, n);

    // Link test cross-check: eigenvalue 1 occurs iff some l(alpha) is integral.
    const bool has_unit_eigenvalue =
        std::any_of(a.monodromy_data.eigenvalues.begin(), a.monodromy_data.eigenvalues.end(),
                    [](const Rational& q) { return q == 0; });
    if (a.report.qhs_link == has_unit_eigenvalue)
        throw ConsistencyViolation("link predicate disagrees with eigenvalue-1 multiplicity");

    a.elapsed_ms = std::chrono::duration<double, std::milli>(
                       std::chrono::steady_clock::now() - t0)
                       .count();
    return a;
}

inline Analysis analyze_text(const std::string& text,
                             std::optional<std::vector<std::string>> variables = std::nullopt,
                             std::optional<WeightSystem> supplied = std::nullopt) {
    std::vector<std::string> vars = variables ? *variables : infer_variables(text);
    if (vars.empty()) throw Error("no variables in input");
    Polynomial f = parse_polynomial(text, vars);
    return run_analysis(std::move(f), std::move(vars), std::move(supplied));
}

/// Theorem-grade equivalence comparison of two inputs via their invariants.
inline EquivalenceReport compare_analyses(const Analysis& lhs, const Analysis& rhs) {
    return compare_invariants(lhs.weights, lhs.spectrum, rhs.weights, rhs.spectrum);
}

// ---------------------------------------------------------------------------
// JSON serialization. Exact quantities are emitted as exact strings ("p/q"
// fractions, decimal integer strings for possibly-large integers); doubles
// appear only for numeric-module measurements.

inline Json to_json(const WeightSystem& ws) {
    Json j;
    j["beta_i"] = Json::array();
    for (const auto& b : ws.beta_i) j["beta_i"].push_back(b.template convert_to<long long>());
    j["beta"] = ws.beta.template convert_to<long long>();
    return j;
}

inline Json to_json(const MilnorBasis& mb) {
    Json j;
    j["mu"] = static_cast<std::uint64_t>(mb.mu);
    Json arr = Json::array();
    for (const auto& m : mb.monomials) arr.push_back(m.exps);
    j["basis"] = std::move(arr);
    return j;
}

inline Json to_json(const Spectrum& sp) {
    Json arr = Json::array();
    for (const auto& d : sp.data) arr.push_back(to_string(d.gamma));
    return arr;
}

inline Json to_json(const std::vector<VariationComponent>& vs) {
    Json arr = Json::array();
    for (const auto& c : vs) {
        Json e;
        e["eigenvalue"] = to_string(c.eigenvalue_turns);
        e["sign"] = c.sign;
        e["multiplicity"] = static_cast<std::uint64_t>(c.multiplicity);
        arr.push_back(std::move(e));
    }
    return arr;
}

inline Json to_json(const MonodromyData& md) {
    Json j;
    Json eig = Json::array();
    for (const auto& q : md.eigenvalues) eig.push_back(to_string(q));
    j["eigenvalues"] = std::move(eig);
    Json cp = Json::array();
    for (const auto& c : md.char_poly) cp.push_back(to_string(c));
    j["char_poly"] = std::move(cp);
    j["order"] = md.order.template convert_to<long long>();
    return j;
}

inline Json to_json(const ConditionReport& r) {
    Json j;
    j["m_f"] = r.m_f.template convert_to<long long>();
    j["seidel_ok"] = r.seidel_ok;
    j["gamma1"] = to_string(r.gamma1);
    j["section_condition_ok"] = r.section_condition_ok;
    j["qhs_link"] = r.qhs_link;
    j["n"] = r.n;
    j["verdict"] = to_string(r.verdict);
    return j;
}

inline Json to_json(const Analysis& a, bool include_timing = true) {
    Json j;
    j["input"]["polynomial"] = print_polynomial(a.f, a.variables, a.weights.w);
    j["input"]["variables"] = a.variables;
    j["weights"] = to_json(a.weights);
    j["milnor"] = to_json(a.basis);
    j["milnor"]["product_formula_ok"] = a.milnor_orlik_ok;
    j["spectrum"] = to_json(a.spectrum);
    j["variation"] = to_json(a.variation);
    j["monodromy"] = to_json(a.monodromy_data);
    j["report"] = to_json(a.report);
    if (include_timing) j["timing_ms"] = a.elapsed_ms;
    return j;
}

}  // namespace singlab
