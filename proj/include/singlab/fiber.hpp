#pragma once

#include <cmath>
#include <complex>
#include <functional>
#include <numbers>
#include <random>
#include <span>
#include <vector>

#include "singlab/polynomial.hpp"
#include "singlab/weights.hpp"

namespace singlab {

using Complex = std::complex<double>;
using CVec = std::vector<Complex>;

/// A numerically sampled point of the fiber f = u. residual = |f(coords) - u|.
struct FiberPoint {
    CVec coords;
    Complex fiber_value;
    double residual = 0.0;
};

/// Frame at a regular fiber point: `transversal` satisfies df(transversal)=1,
/// `kernel` is an orthonormal basis of ker df.
struct TangentFrame {
    CVec transversal;
    std::vector<CVec> kernel;
};

/// Measured winding of the section value along the weighted circle action.
struct WindingResult {
    int samples = 0;
    double unwrapped_phase_delta = 0.0;
    long winding = 0;
    double max_step_phase = 0.0;
};

namespace detail {

inline Complex hdot(const CVec& a, const CVec& b) {
    Complex s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * std::conj(b[i]);
    return s;
}

inline double norm2(const CVec& v) {
    double s = 0.0;
    for (const auto& c : v) s += std::norm(c);
    return s;
}

inline CVec gradient_at(std::span<const Polynomial> partials, const CVec& z) {
    CVec g(partials.size());
    for (std::size_t i = 0; i < partials.size(); ++i) g[i] = partials[i].eval(z);
    return g;
}

/// One Newton correction along the conjugate-gradient direction:
/// z <- z - (f(z) - u) * conj(grad f) / |grad f|^2. Returns false if the
/// gradient degenerates or the residual fails to reach `tol`.
inline bool newton_to_fiber(const Polynomial& f, std::span<const Polynomial> partials,
                            Complex u, CVec& z, double tol, int max_iter) {
    for (int it = 0; it < max_iter; ++it) {
        Complex r = f.eval(z) - u;
        if (std::abs(r) <= tol) return true;
        CVec g = gradient_at(partials, z);
        double g2 = norm2(g);
        if (g2 < 1e-16) return false;
        for (std::size_t i = 0; i < z.size(); ++i) z[i] -= r * std::conj(g[i]) / g2;
    }
    return std::abs(f.eval(z) - u) <= tol;
}

/// Complex determinant of a square matrix given by columns, LU with partial
/// pivoting. Sizes here are tiny (n+1 <= ~9).
inline Complex det_columns(std::vector<CVec> cols) {
    const std::size_t n = cols.size();
    Complex det = 1.0;
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t piv = k;
        for (std::size_t r = k + 1; r < n; ++r)
            if (std::abs(cols[k][r]) > std::abs(cols[k][piv])) piv = r;
        if (std::abs(cols[k][piv]) == 0.0) return 0.0;
        if (piv != k) {
            for (std::size_t c = k; c < n; ++c) std::swap(cols[c][k], cols[c][piv]);
            det = -det;
        }
        det *= cols[k][k];
        for (std::size_t r = k + 1; r < n; ++r) {
            Complex factor = cols[k][r] / cols[k][k];
            for (std::size_t c = k + 1; c < n; ++c) cols[c][r] -= factor * cols[c][k];
        }
    }
    return det;
}

}  // namespace detail

/// Sample `count` points of the fiber f = u inside the ball of radius 1/2 by
/// Newton projection from seeded random starts. Residuals are at most 1e-12.
/// Identical seeds reproduce identical points.
inline std::vector<FiberPoint> sample_fiber(const Polynomial& f, Complex u, int count,
                                            std::uint64_t seed) {
    if (count < 0) throw Error("sample_fiber: count must be >= 0");
    std::vector<FiberPoint> points;
    if (count == 0) return points;

    const std::vector<Polynomial> partials = partial_derivatives(f);
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> gauss(0.0, 1.0);
    std::uniform_real_distribution<double> unif(0.0, 1.0);
    const std::size_t nv = f.variable_count();

    const long budget = 100L * count;
    for (long attempt = 0; attempt < budget && points.size() < static_cast<std::size_t>(count);
         ++attempt) {
        // Uniform draw from the ball of radius 0.45 (direction x radius law).
        CVec z(nv);
        double n2 = 0.0;
        for (auto& c : z) {
            c = Complex(gauss(rng), gauss(rng));
            n2 += std::norm(c);
        }
        double radius = 0.45 * std::pow(unif(rng), 1.0 / (2.0 * static_cast<double>(nv)));
        double scale = radius / std::sqrt(std::max(n2, 1e-300));
        for (auto& c : z) c *= scale;

        // aim an order tighter than the 1e-12 contract so later fiber
        // re-projections do not visibly move a fresh point
        if (!detail::newton_to_fiber(f, partials, u, z, 1e-14, 60)) continue;
        if (detail::norm2(z) > 0.25) continue;  // keep |z| <= 1/2
        double residual = std::abs(f.eval(z) - u);
        if (residual > 1e-12) continue;
        points.push_back(FiberPoint{std::move(z), u, residual});
    }
    if (points.size() < static_cast<std::size_t>(count))
        throw ConvergenceBudgetExceeded("sample_fiber: exhausted " + std::to_string(budget) +
                                        " attempts for fiber value " + std::to_string(u.real()) +
                                        "+" + std::to_string(u.imag()) + "i");
    return points;
}

/// df-calibrated frame at a regular point: transversal = conj(grad)/|grad|^2
/// and an orthonormal kernel basis from pivoted Gram-Schmidt against the
/// gradient direction (two passes for orthogonality at machine precision).
inline TangentFrame frame_at(const Polynomial& f, const FiberPoint& p) {
    const std::vector<Polynomial> partials = partial_derivatives(f);
    CVec g = detail::gradient_at(partials, p.coords);
    const double g2 = detail::norm2(g);
    if (std::sqrt(g2) <= 1e-8)
        throw SingularPoint("frame_at: gradient norm below 1e-8");

    const std::size_t nv = p.coords.size();
    TangentFrame fr;
    fr.transversal.resize(nv);
    for (std::size_t i = 0; i < nv; ++i) fr.transversal[i] = std::conj(g[i]) / g2;

    CVec q0(nv);
    const double gnorm = std::sqrt(g2);
    for (std::size_t i = 0; i < nv; ++i) q0[i] = std::conj(g[i]) / gnorm;

    std::vector<CVec> cands(nv, CVec(nv, 0.0));
    for (std::size_t i = 0; i < nv; ++i) cands[i][i] = 1.0;
    std::vector<CVec> basis{q0};
    for (auto& c : cands) {
        for (const auto& b : basis) {
            Complex proj = detail::hdot(c, b);
            for (std::size_t i = 0; i < nv; ++i) c[i] -= proj * b[i];
        }
    }
    while (basis.size() < nv) {
        std::size_t best = 0;
        double best_n2 = -1.0;
        for (std::size_t i = 0; i < cands.size(); ++i) {
            double n2 = detail::norm2(cands[i]);
            if (n2 > best_n2) {
                best_n2 = n2;
                best = i;
            }
        }
        CVec v = cands[best];
        cands.erase(cands.begin() + static_cast<std::ptrdiff_t>(best));
        for (const auto& b : basis) {  // second pass
            Complex proj = detail::hdot(v, b);
            for (std::size_t i = 0; i < nv; ++i) v[i] -= proj * b[i];
        }
        double vn = std::sqrt(detail::norm2(v));
        if (vn < 1e-8) continue;
        for (auto& c : v) c /= vn;
        basis.push_back(std::move(v));
        for (auto& c : cands) {
            Complex proj = detail::hdot(c, basis.back());
            for (std::size_t i = 0; i < nv; ++i) c[i] -= proj * basis.back()[i];
        }
    }
    fr.kernel.assign(basis.begin() + 1, basis.end());
    return fr;
}

/// Value of the geometric section on the frame: the determinant of the matrix
/// with columns [transversal, kernel...]. Contracting the coordinate volume
/// form with the df-calibrated transversal makes this the fiberwise n-form
/// evaluated on the kernel frame.
inline Complex section_eval(const TangentFrame& fr) {
    std::vector<CVec> cols;
    cols.reserve(fr.kernel.size() + 1);
    cols.push_back(fr.transversal);
    for (const auto& k : fr.kernel) cols.push_back(k);
    return detail::det_columns(std::move(cols));
}

/// Track the phase of the section value while the weighted circle action
/// transports the point and its initial frame through tau in [0, m]; the base
/// value winds m*beta times. Returns the integer winding of the section.
/// Aborts rather than guesses when a single phase step reaches pi/2.
inline WindingResult circle_winding(const Polynomial& f, const WeightSystem& ws, int m,
                                    const FiberPoint& p, int steps) {
    if (m < 1) throw Error("circle_winding: m must be >= 1");
    if (steps < 1) throw Error("circle_winding: steps must be >= 1");
    if (f.variable_count() != ws.variable_count())
        throw VariableCountMismatch("circle_winding: weight system mismatch");

    const std::vector<Polynomial> partials = partial_derivatives(f);
    const std::size_t nv = f.variable_count();
    std::vector<double> beta(nv);
    for (std::size_t i = 0; i < nv; ++i) beta[i] = ws.beta_i[i].template convert_to<double>();

    const TangentFrame fr0 = frame_at(f, p);
    constexpr double two_pi = 2.0 * std::numbers::pi;

    WindingResult res;
    res.samples = steps + 1;
    Complex prev = 0.0;
    for (int j = 0; j <= steps; ++j) {
        const double tau = static_cast<double>(m) * j / steps;
        CVec q(nv);
        for (std::size_t i = 0; i < nv; ++i)
            q[i] = p.coords[i] * std::polar(1.0, two_pi * tau * beta[i]);

        CVec g = detail::gradient_at(partials, q);
        const double g2 = detail::norm2(g);
        if (std::sqrt(g2) <= 1e-8) throw SingularPoint("circle_winding: gradient degenerated");

        TangentFrame fr;
        fr.transversal.resize(nv);
        for (std::size_t i = 0; i < nv; ++i) fr.transversal[i] = std::conj(g[i]) / g2;
        fr.kernel.reserve(fr0.kernel.size());
        for (const auto& e : fr0.kernel) {
            CVec pushed(nv);
            for (std::size_t i = 0; i < nv; ++i)
                pushed[i] = e[i] * std::polar(1.0, two_pi * tau * beta[i]);
            fr.kernel.push_back(std::move(pushed));
        }

        Complex val = section_eval(fr);
        if (std::abs(val) < 1e-12)
            throw SingularPoint("circle_winding: section value vanished");
        if (j > 0) {
            double step_phase = std::arg(val * std::conj(prev));
            double mag = std::abs(step_phase);
            if (mag >= std::numbers::pi / 2)
                throw PhaseStepTooLarge("circle_winding: phase step " + std::to_string(mag) +
                                        " >= pi/2; increase steps");
            res.unwrapped_phase_delta += step_phase;
            res.max_step_phase = std::max(res.max_step_phase, mag);
        }
        prev = val;
    }
    res.winding = std::lround(res.unwrapped_phase_delta / two_pi);
    if (std::abs(res.unwrapped_phase_delta / two_pi - static_cast<double>(res.winding)) > 0.05)
        throw PhaseStepTooLarge("circle_winding: unwrapped phase is not near an integer turn");
    return res;
}

/// Base path for parallel transport, with its velocity.
struct BasePath {
    std::function<Complex(double)> value;
    std::function<Complex(double)> velocity;

    /// Circle t -> u0 * exp(2 pi i t), t in [0,1].
    static BasePath full_circle(Complex u0) {
        constexpr double two_pi = 2.0 * std::numbers::pi;
        return BasePath{
            [u0](double t) { return u0 * std::polar(1.0, two_pi * t); },
            [u0](double t) {
                return u0 * std::polar(1.0, two_pi * t) * Complex(0.0, two_pi);
            }};
    }
};

/// Horizontal-lift transport along a base path: classical 4th-order stepping
/// of zdot = u'(t) * conj(grad f)/|grad f|^2 with Newton re-projection onto
/// the moving fiber after every step. The post-projection residual must stay
/// within 1e-8.
inline FiberPoint parallel_transport(const Polynomial& f, const FiberPoint& p,
                                     const BasePath& path, int steps) {
    if (steps < 1) throw Error("parallel_transport: steps must be >= 1");
    const std::vector<Polynomial> partials = partial_derivatives(f);

    auto lift = [&](const CVec& z, double t) {
        CVec g = detail::gradient_at(partials, z);
        double g2 = detail::norm2(g);
        if (std::sqrt(g2) <= 1e-8)
            throw SingularPoint("parallel_transport: gradient degenerated");
        Complex du = path.velocity(t);
        CVec v(z.size());
        for (std::size_t i = 0; i < z.size(); ++i) v[i] = du * std::conj(g[i]) / g2;
        return v;
    };

    const double h = 1.0 / steps;
    CVec z = p.coords;
    const std::size_t nv = z.size();
    double residual = 0.0;
    for (int k = 0; k < steps; ++k) {
        const double t = k * h;
        CVec k1 = lift(z, t);
        CVec z2(nv), z3(nv), z4(nv);
        for (std::size_t i = 0; i < nv; ++i) z2[i] = z[i] + 0.5 * h * k1[i];
        CVec k2 = lift(z2, t + 0.5 * h);
        for (std::size_t i = 0; i < nv; ++i) z3[i] = z[i] + 0.5 * h * k2[i];
        CVec k3 = lift(z3, t + 0.5 * h);
        for (std::size_t i = 0; i < nv; ++i) z4[i] = z[i] + h * k3[i];
        CVec k4 = lift(z4, t + h);
        for (std::size_t i = 0; i < nv; ++i)
            z[i] += h / 6.0 * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]);

        const Complex u_next = path.value((k + 1) * h);
        detail::newton_to_fiber(f, partials, u_next, z, 1e-13, 8);
        residual = std::abs(f.eval(z) - u_next);
        if (residual > 1e-8)
            throw DriftExceeded("parallel_transport: residual " + std::to_string(residual) +
                                " after projection at step " + std::to_string(k + 1));
    }
    return FiberPoint{std::move(z), path.value(1.0), residual};
}

/// Applies the weighted rotation sigma(exp(2 pi i / beta)) beta times; true
/// iff the point returns to itself within 1e-12 per coordinate.
inline bool h_order_check(const WeightSystem& ws, const FiberPoint& p) {
    constexpr double two_pi = 2.0 * std::numbers::pi;
    const std::size_t nv = ws.variable_count();
    if (p.coords.size() != nv)
        throw VariableCountMismatch("h_order_check: coordinate length mismatch");
    const long beta = ws.beta.template convert_to<long>();
    CVec rot(nv);
    for (std::size_t i = 0; i < nv; ++i)
        rot[i] = std::polar(1.0, two_pi * to_double(Rational(ws.beta_i[i], ws.beta)));
    CVec z = p.coords;
    for (long k = 0; k < beta; ++k)
        for (std::size_t i = 0; i < nv; ++i) z[i] *= rot[i];
    for (std::size_t i = 0; i < nv; ++i)
        if (std::abs(z[i] - p.coords[i]) > 1e-12) return false;
    return true;
}

}  // namespace singlab
