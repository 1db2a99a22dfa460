#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "singlab/analysis.hpp"
#include "singlab/catalog_data.hpp"
#include "singlab/parallel.hpp"

namespace singlab {

/// Expected results of one catalog entry: either a pipeline rejection (error
/// code) or the exact derived values. Provenance strings record how each
/// value was produced by the generator.
struct CatalogExpected {
    std::optional<std::string> error;
    std::vector<Integer> beta_i;
    Integer beta = 0;
    std::size_t mu = 0;
    std::vector<Rational> spectrum;  // sorted gammas
    Integer m_f = 0;
    std::string verdict;
};

struct CatalogEntry {
    std::string name;
    std::string polynomial;
    std::vector<std::string> variables;
    std::optional<WeightSystem> weights_input;
    int n = 0;
    CatalogExpected expected;
    Json provenance;
};

inline std::string_view catalog_raw_json() { return data::kCatalogJson; }

/// The built-in reference singularities, parsed once from the embedded JSON.
inline const std::vector<CatalogEntry>& catalog_entries() {
    static const std::vector<CatalogEntry> entries = [] {
        std::vector<CatalogEntry> out;
        Json root = Json::parse(catalog_raw_json());
        for (const auto& e : root.at("entries")) {
            CatalogEntry ce;
            ce.name = e.at("name").get<std::string>();
            ce.polynomial = e.at("polynomial").get<std::string>();
            ce.variables = e.at("variables").get<std::vector<std::string>>();
            ce.n = e.at("n").get<int>();
            if (e.contains("weights_input")) {
                std::vector<Integer> bi;
                for (const auto& b : e.at("weights_input").at("beta_i"))
                    bi.push_back(Integer(b.get<long long>()));
                ce.weights_input = WeightSystem::from_beta(
                    std::move(bi), Integer(e.at("weights_input").at("beta").get<long long>()));
            }
            const auto& ex = e.at("expected");
            if (ex.contains("error")) {
                ce.expected.error = ex.at("error").get<std::string>();
            } else {
                for (const auto& b : ex.at("weights").at("beta_i"))
                    ce.expected.beta_i.push_back(Integer(b.get<long long>()));
                ce.expected.beta = Integer(ex.at("weights").at("beta").get<long long>());
                ce.expected.mu = ex.at("mu").get<std::uint64_t>();
                for (const auto& s : ex.at("spectrum"))
                    ce.expected.spectrum.push_back(rational_from_string(s.get<std::string>()));
                ce.expected.m_f = Integer(ex.at("m_f").get<long long>());
                ce.expected.verdict = ex.at("verdict").get<std::string>();
            }
            if (e.contains("provenance")) ce.provenance = e.at("provenance");
            out.push_back(std::move(ce));
        }
        return out;
    }();
    return entries;
}

/// One mismatch between a pipeline result and the catalog expectation.
struct CatalogDiff {
    std::string entry;
    std::string field;
    std::string expected;
    std::string actual;
};

namespace detail {

inline void diff_entry(const CatalogEntry& e, std::vector<CatalogDiff>& diffs) {
    auto add = [&](const std::string& field, const std::string& want, const std::string& got) {
        if (want != got) diffs.push_back({e.name, field, want, got});
    };
    try {
        Analysis a = analyze_text(e.polynomial, e.variables, e.weights_input);
        if (e.expected.error) {
            add("error", *e.expected.error, "(analysis succeeded)");
            return;
        }
        if (a.weights.beta_i != e.expected.beta_i || a.weights.beta != e.expected.beta) {
            std::string want, got;
            for (const auto& b : e.expected.beta_i) want += to_string(b) + ",";
            want += ";" + to_string(e.expected.beta);
            for (const auto& b : a.weights.beta_i) got += to_string(b) + ",";
            got += ";" + to_string(a.weights.beta);
            add("weights", want, got);
        }
        add("mu", std::to_string(e.expected.mu), std::to_string(a.basis.mu));
        std::vector<Rational> got_spec = a.spectrum.gammas();
        std::sort(got_spec.begin(), got_spec.end());
        std::vector<Rational> want_spec = e.expected.spectrum;
        std::sort(want_spec.begin(), want_spec.end());
        if (got_spec != want_spec)
            add("spectrum", std::to_string(want_spec.size()) + " values",
                "different multiset of " + std::to_string(got_spec.size()) + " values");
        add("m_f", to_string(e.expected.m_f), to_string(a.report.m_f));
        add("verdict", e.expected.verdict, to_string(a.report.verdict));
    } catch (const Error& err) {
        if (!e.expected.error)
            add("error", "(success)", err.code());
        else
            add("error", *e.expected.error, err.code());
    }
}

}  // namespace detail

/// Run the full pipeline over every entry and diff against the expectations.
/// Empty result means the regression is clean.
inline std::vector<CatalogDiff> run_catalog() {
    const auto& entries = catalog_entries();
    auto per_entry = parallel_map<std::vector<CatalogDiff>>(
        entries.size(), [&](std::size_t i) {
            std::vector<CatalogDiff> d;
            detail::diff_entry(entries[i], d);
            return d;
        });
    std::vector<CatalogDiff> all;
    for (auto& d : per_entry) all.insert(all.end(), d.begin(), d.end());
    return all;
}

}  // namespace singlab
