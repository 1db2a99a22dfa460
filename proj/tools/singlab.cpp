// singlab: exact invariants of quasihomogeneous isolated hypersurface
// singularities (weights, Milnor basis, spectrum, monodromy eigenvalues,
// infinite-order conditions) plus numeric Milnor-fiber winding checks.
//
// Exit codes: 0 success, 1 usage error, 2 mathematical rejection of the
// input, 3 numeric verification failure or internal consistency alarm.

#include <chrono>
#include <complex>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "singlab/singlab.hpp"

namespace {

using singlab::Analysis;
using singlab::Integer;
using singlab::Json;
using singlab::Rational;
using singlab::WeightSystem;

constexpr int kExitUsage = 1;
constexpr int kExitRejected = 2;
constexpr int kExitNumeric = 3;

int exit_code_for(const singlab::Error& e) {
    const std::string code = e.code();
    if (code == "ParseError" || code == "UnknownVariable" || code == "NoSolution" ||
        code == "NonUnique" || code == "NonPositive" || code == "NonIsolated" ||
        code == "VariableCountMismatch" || code == "Error")
        return kExitRejected;
    return kExitNumeric;
}

void print_error(const singlab::Error& e, const std::string& side = "") {
    Json j;
    j["error"]["type"] = e.code();
    j["error"]["message"] = e.what();
    if (!side.empty()) j["error"]["side"] = side;
    std::cerr << j.dump(2) << std::endl;
}

/// --weights format: "b0,b1,...,bn:beta", e.g. "10,6,15:30".
WeightSystem parse_weights_flag(const std::string& text) {
    const auto colon = text.find(':');
    if (colon == std::string::npos)
        throw CLI::ValidationError("--weights", "expected format b0,b1,...,bn:beta");
    std::vector<Integer> beta_i;
    std::string head = text.substr(0, colon);
    std::size_t pos = 0;
    while (pos <= head.size()) {
        const auto comma = head.find(',', pos);
        const std::string item =
            head.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
        try {
            beta_i.push_back(Integer(item));
        } catch (const std::exception&) {
            throw CLI::ValidationError("--weights", "invalid integer '" + item + "'");
        }
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    Integer beta;
    try {
        beta = Integer(text.substr(colon + 1));
    } catch (const std::exception&) {
        throw CLI::ValidationError("--weights", "invalid beta");
    }
    return WeightSystem::from_beta(std::move(beta_i), beta);
}

std::optional<std::vector<std::string>> split_vars(const std::string& vars_flag) {
    if (vars_flag.empty()) return std::nullopt;
    std::vector<std::string> names;
    std::size_t pos = 0;
    while (pos <= vars_flag.size()) {
        const auto comma = vars_flag.find(',', pos);
        names.push_back(vars_flag.substr(
            pos, comma == std::string::npos ? std::string::npos : comma - pos));
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    return names;
}

Analysis analyze_input(const std::string& poly, const std::string& vars_flag,
                       const std::string& weights_flag) {
    std::optional<WeightSystem> ws;
    if (!weights_flag.empty()) ws = parse_weights_flag(weights_flag);
    return singlab::analyze_text(poly, split_vars(vars_flag), std::move(ws));
}

void print_table(const Analysis& a) {
    std::cout << "input      " << singlab::print_polynomial(a.f, a.variables, a.weights.w)
              << "\n";
    std::cout << "weights    beta_i = [";
    for (std::size_t i = 0; i < a.weights.beta_i.size(); ++i)
        std::cout << (i ? "," : "") << a.weights.beta_i[i];
    std::cout << "]  beta = " << a.weights.beta << "\n";
    std::cout << "mu         " << a.basis.mu << "\n";
    std::cout << "spectrum   ";
    for (std::size_t i = 0; i < a.spectrum.data.size(); ++i)
        std::cout << (i ? " " : "") << singlab::to_string(a.spectrum.data[i].gamma);
    std::cout << "\n";
    std::cout << "monodromy  order " << a.monodromy_data.order << ", char poly degree "
              << a.monodromy_data.eigenvalues.size() << "\n";
    std::cout << "m_f        " << a.report.m_f << "\n";
    std::cout << "gamma1     " << singlab::to_string(a.report.gamma1) << "\n";
    std::cout << "seidel     " << (a.report.seidel_ok ? "yes" : "no") << "\n";
    std::cout << "section    " << (a.report.section_condition_ok ? "yes" : "no") << "\n";
    std::cout << "qhs link   " << (a.report.qhs_link ? "yes" : "no") << "\n";
    std::cout << "verdict    " << singlab::to_string(a.report.verdict) << "\n";
}

int cmd_analyze(const std::string& poly, const std::string& vars_flag,
                const std::string& weights_flag, const std::string& format) {
    try {
        Analysis a = analyze_input(poly, vars_flag, weights_flag);
        if (format == "table")
            print_table(a);
        else
            std::cout << singlab::to_json(a).dump(2) << std::endl;
        return 0;
    } catch (const singlab::Error& e) {
        print_error(e);
        return exit_code_for(e);
    }
}

int cmd_spectrum(const std::string& poly, const std::string& vars_flag,
                 const std::string& weights_flag) {
    try {
        Analysis a = analyze_input(poly, vars_flag, weights_flag);
        Json j;
        j["input"] = poly;
        j["mu"] = static_cast<std::uint64_t>(a.basis.mu);
        j["spectrum"] = singlab::to_json(a.spectrum);
        std::cout << j.dump(2) << std::endl;
        return 0;
    } catch (const singlab::Error& e) {
        print_error(e);
        return exit_code_for(e);
    }
}

int cmd_compare(const std::string& left, const std::string& right) {
    std::optional<Analysis> lhs, rhs;
    try {
        lhs = singlab::analyze_text(left);
    } catch (const singlab::Error& e) {
        print_error(e, "left");
        return exit_code_for(e);
    }
    try {
        rhs = singlab::analyze_text(right);
    } catch (const singlab::Error& e) {
        print_error(e, "right");
        return exit_code_for(e);
    }
    try {
        const auto rep = singlab::compare_analyses(*lhs, *rhs);
        Json j;
        j["left"] = left;
        j["right"] = right;
        j["same_weights"] = rep.same_weights;
        j["same_spectrum"] = rep.same_spectrum;
        j["equivalent"] = rep.equivalent;
        std::cout << j.dump(2) << std::endl;
        return 0;
    } catch (const singlab::Error& e) {
        print_error(e);
        return exit_code_for(e);
    }
}

int cmd_verify_winding(const std::string& poly, const std::string& vars_flag,
                       const std::string& weights_flag, int m, int points, int steps,
                       std::uint64_t seed, double u_abs) {
    const auto t0 = std::chrono::steady_clock::now();
    try {
        Analysis a = analyze_input(poly, vars_flag, weights_flag);
        const auto pred = singlab::winding_prediction(a.weights, m);
        const int eff_steps =
            steps > 0 ? steps
                      : 64 * m * a.weights.beta.template convert_to<int>();

        const std::complex<double> u(u_abs, 0.0);
        const auto samples = singlab::sample_fiber(a.f, u, points, seed);
        std::vector<Json> rows = singlab::parallel_map<Json>(
            samples.size(), [&](std::size_t i) {
                const auto res = singlab::circle_winding(a.f, a.weights, m, samples[i], eff_steps);
                Json r;
                r["point"] = static_cast<std::uint64_t>(i);
                r["residual"] = samples[i].residual;
                r["winding"] = res.winding;
                r["unwrapped_phase_delta"] = res.unwrapped_phase_delta;
                r["max_step_phase"] = res.max_step_phase;
                r["samples"] = res.samples;
                return r;
            });

        bool pass = true;
        Json points_json = Json::array();
        for (auto& r : rows) {
            if (Integer(r["winding"].get<long long>()) != pred.gamma) pass = false;
            points_json.push_back(std::move(r));
        }

        Json j;
        j["input"] = poly;
        j["weights"] = singlab::to_json(a.weights);
        j["m"] = m;
        j["covering_degree"] = pred.k.template convert_to<long long>();
        j["predicted_winding"] = pred.gamma.template convert_to<long long>();
        j["steps"] = eff_steps;
        j["seed"] = seed;
        j["fiber_value"] = u_abs;
        j["points"] = std::move(points_json);
        j["pass"] = pass;
        j["timing_ms"] =
            std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
                .count();
        std::cout << j.dump(2) << std::endl;
        return pass ? 0 : kExitNumeric;
    } catch (const singlab::Error& e) {
        print_error(e);
        return exit_code_for(e);
    }
}

int cmd_transport_check(const std::string& poly, const std::string& vars_flag,
                        const std::string& weights_flag, int points, int steps,
                        std::uint64_t seed, double u_abs) {
    try {
        Analysis a = analyze_input(poly, vars_flag, weights_flag);
        const std::complex<double> u(u_abs, 0.0);
        const auto samples = singlab::sample_fiber(a.f, u, points, seed);
        const auto path = singlab::BasePath::full_circle(u);

        Json rows = Json::array();
        double max_residual = 0.0;
        for (std::size_t i = 0; i < samples.size(); ++i) {
            const auto end = singlab::parallel_transport(a.f, samples[i], path, steps);
            double disp = 0.0;
            for (std::size_t c = 0; c < end.coords.size(); ++c)
                disp += std::norm(end.coords[c] - samples[i].coords[c]);
            Json r;
            r["point"] = static_cast<std::uint64_t>(i);
            r["start_residual"] = samples[i].residual;
            r["final_residual"] = end.residual;
            r["monodromy_displacement"] = std::sqrt(disp);
            rows.push_back(std::move(r));
            max_residual = std::max(max_residual, end.residual);
        }
        Json j;
        j["input"] = poly;
        j["steps"] = steps;
        j["seed"] = seed;
        j["fiber_value"] = u_abs;
        j["points"] = std::move(rows);
        j["max_final_residual"] = max_residual;
        j["pass"] = true;  // parallel_transport throws on drift violations
        std::cout << j.dump(2) << std::endl;
        return 0;
    } catch (const singlab::Error& e) {
        print_error(e);
        return exit_code_for(e);
    }
}

int cmd_catalog(bool run, bool dump) {
    try {
        if (dump) {
            std::cout << singlab::catalog_raw_json() << std::endl;
            return 0;
        }
        if (!run) {
            for (const auto& e : singlab::catalog_entries()) {
                std::cout << e.name << "  " << e.polynomial;
                if (e.expected.error)
                    std::cout << "  (expected error: " << *e.expected.error << ")";
                else
                    std::cout << "  mu=" << e.expected.mu << "  verdict=" << e.expected.verdict;
                std::cout << "\n";
            }
            return 0;
        }
        const auto diffs = singlab::run_catalog();
        if (diffs.empty()) {
            std::cout << "catalog: all " << singlab::catalog_entries().size()
                      << " entries match their expected values\n";
            return 0;
        }
        for (const auto& d : diffs)
            std::cerr << "MISMATCH " << d.entry << "." << d.field << ": expected " << d.expected
                      << ", got " << d.actual << "\n";
        return kExitNumeric;
    } catch (const singlab::Error& e) {
        print_error(e);
        return exit_code_for(e);
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact invariants of quasihomogeneous isolated singularities"};
    app.require_subcommand(1);

    std::string poly, left, right, vars_flag, weights_flag, format = "json";
    int m = 1, points = 4, steps = 0, transport_steps = 2048;
    std::uint64_t seed = 7;
    double u_abs = 1e-2;
    bool run = false, dump = false;

    auto add_input_opts = [&](CLI::App* cmd) {
        cmd->add_option("polynomial", poly, "polynomial expression, e.g. \"x^3+y^5+z^2\"")
            ->required();
        cmd->add_option("--vars", vars_flag, "comma-separated variable names (default: inferred)");
        cmd->add_option("--weights", weights_flag, "explicit weights b0,...,bn:beta");
    };

    auto* analyze = app.add_subcommand("analyze", "run the full invariant pipeline");
    add_input_opts(analyze);
    analyze->add_option("--format", format, "json or table")
        ->check(CLI::IsMember({"json", "table"}));

    auto* spectrum = app.add_subcommand("spectrum", "print the spectrum only");
    add_input_opts(spectrum);

    auto* compare = app.add_subcommand("compare", "equivalence test for two polynomials");
    compare->add_option("left", left, "first polynomial")->required();
    compare->add_option("right", right, "second polynomial")->required();

    auto* winding = app.add_subcommand(
        "verify-winding", "measure section winding under the weighted circle action");
    add_input_opts(winding);
    winding->add_option("--m", m, "covering multiplier (k = m*beta)")
        ->check(CLI::Range(1, 1 << 20));
    winding->add_option("--points", points, "number of sampled fiber points")
        ->check(CLI::Range(1, 1 << 20));
    winding->add_option("--steps", steps, "phase-tracking grid size (default 64*m*beta)");
    winding->add_option("--seed", seed, "RNG seed");
    winding->add_option("--u", u_abs, "fiber value magnitude")->check(CLI::PositiveNumber);

    auto* transport =
        app.add_subcommand("transport-check", "full-loop symplectic parallel transport");
    add_input_opts(transport);
    transport->add_option("--points", points, "number of sampled fiber points")
        ->check(CLI::Range(1, 1 << 20));
    transport->add_option("--steps", transport_steps, "integration steps")
        ->check(CLI::Range(1, 1 << 26));
    transport->add_option("--seed", seed, "RNG seed");
    transport->add_option("--u", u_abs, "fiber value magnitude")->check(CLI::PositiveNumber);

    auto* catalog = app.add_subcommand("catalog", "list or run the reference catalog");
    catalog->add_flag("--run", run, "run the pipeline over all entries and diff");
    catalog->add_flag("--dump", dump, "print the raw catalog JSON");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    if (analyze->parsed()) return cmd_analyze(poly, vars_flag, weights_flag, format);
    if (spectrum->parsed()) return cmd_spectrum(poly, vars_flag, weights_flag);
    if (compare->parsed()) return cmd_compare(left, right);
    if (winding->parsed())
        return cmd_verify_winding(poly, vars_flag, weights_flag, m, points, steps, seed, u_abs);
    if (transport->parsed())
        return cmd_transport_check(poly, vars_flag, weights_flag, points, transport_steps, seed,
                                   u_abs);
    if (catalog->parsed()) return cmd_catalog(run, dump);
    return kExitUsage;
}
