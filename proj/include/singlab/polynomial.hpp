#pragma once

#include <complex>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "singlab/errors.hpp"
#include "singlab/monomial.hpp"
#include "singlab/rational.hpp"

namespace singlab {

/// Sparse multivariate polynomial over the rationals. Canonical form: every
/// stored coefficient is nonzero and every key has length variable_count().
/// Values are immutable in spirit; all operations return fresh polynomials.
class Polynomial {
public:
    using TermMap = std::map<Monomial, Rational>;

    Polynomial() : nvars_(0) {}
    explicit Polynomial(std::size_t nvars) : nvars_(nvars) {}

    static Polynomial constant(std::size_t nvars, const Rational& c) {
        Polynomial p(nvars);
        p.add_term(Monomial(nvars), c);
        return p;
    }

    static Polynomial variable(std::size_t nvars, std::size_t i) {
        Polynomial p(nvars);
        Monomial m(nvars);
        m[i] = 1;
        p.add_term(m, 1);
        return p;
    }

    static Polynomial term(Monomial m, const Rational& c) {
        Polynomial p(m.size());
        p.add_term(std::move(m), c);
        return p;
    }

    std::size_t variable_count() const { return nvars_; }
    std::size_t term_count() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }
    const TermMap& terms() const { return terms_; }

    Rational coeff(const Monomial& m) const {
        auto it = terms_.find(m);
        return it == terms_.end() ? Rational(0) : it->second;
    }

    /// Accumulate c * z^m, pruning a term that cancels to zero.
    void add_term(Monomial m, const Rational& c) {
        if (c == 0) return;
        auto [it, inserted] = terms_.emplace(std::move(m), c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    bool is_constant() const {
        return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_constant());
    }

    Rational constant_value() const {
        return terms_.empty() ? Rational(0) : terms_.begin()->second;
    }

    Polynomial operator-() const {
        Polynomial r(nvars_);
        for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
        return r;
    }

    Polynomial operator+(const Polynomial& other) const {
        check_same_ring(other);
        Polynomial r(*this);
        for (const auto& [m, c] : other.terms_) r.add_term(m, c);
        return r;
    }

    Polynomial operator-(const Polynomial& other) const {
        check_same_ring(other);
        Polynomial r(*this);
        for (const auto& [m, c] : other.terms_) r.add_term(m, -c);
        return r;
    }

    Polynomial operator*(const Polynomial& other) const {
        check_same_ring(other);
        Polynomial r(nvars_);
        for (const auto& [ma, ca] : terms_)
            for (const auto& [mb, cb] : other.terms_) r.add_term(ma * mb, ca * cb);
        return r;
    }

    Polynomial operator*(const Rational& s) const {
        Polynomial r(nvars_);
        if (s == 0) return r;
        for (const auto& [m, c] : terms_) r.terms_.emplace(m, c * s);
        return r;
    }

    Polynomial pow(unsigned e) const {
        Polynomial r = constant(nvars_, 1);
        Polynomial base(*this);
        while (e > 0) {
            if (e & 1u) r = r * base;
            e >>= 1u;
            if (e) base = base * base;
        }
        return r;
    }

    /// Exact formal partial derivative with respect to variable i.
    Polynomial derivative(std::size_t i) const {
        if (i >= nvars_) throw Error("derivative: variable index out of range");
        Polynomial r(nvars_);
        for (const auto& [m, c] : terms_) {
            if (m[i] == 0) continue;
            Monomial d = m;
            d[i] -= 1;
            r.add_term(std::move(d), c * Rational(m[i]));
        }
        return r;
    }

    /// Evaluate at a complex point, coefficients rounded to nearest double.
    /// Per-variable power tables keep this O(terms + total degree).
    std::complex<double> eval(std::span<const std::complex<double>> point) const {
        if (point.size() != nvars_) throw VariableCountMismatch("eval: point length mismatch");
        std::vector<int> maxexp(nvars_, 0);
        for (const auto& [m, c] : terms_)
            for (std::size_t i = 0; i < nvars_; ++i) maxexp[i] = std::max(maxexp[i], m[i]);
        std::vector<std::vector<std::complex<double>>> pows(nvars_);
        for (std::size_t i = 0; i < nvars_; ++i) {
            pows[i].resize(static_cast<std::size_t>(maxexp[i]) + 1);
            pows[i][0] = 1.0;
            for (int e = 1; e <= maxexp[i]; ++e) pows[i][e] = pows[i][e - 1] * point[i];
        }
        std::complex<double> acc = 0.0;
        for (const auto& [m, c] : terms_) {
            std::complex<double> t = to_double(c);
            for (std::size_t i = 0; i < nvars_; ++i)
                if (m[i] != 0) t *= pows[i][m[i]];
            acc += t;
        }
        return acc;
    }

    bool operator==(const Polynomial& other) const {
        return nvars_ == other.nvars_ && terms_ == other.terms_;
    }

private:
    void check_same_ring(const Polynomial& other) const {
        if (nvars_ != other.nvars_)
            throw VariableCountMismatch("operands live in different polynomial rings");
    }

    std::size_t nvars_;
    TermMap terms_;
};

inline Polynomial operator*(const Rational& s, const Polynomial& p) { return p * s; }

/// All first partial derivatives of f, in variable order.
inline std::vector<Polynomial> partial_derivatives(const Polynomial& f) {
    std::vector<Polynomial> d;
    d.reserve(f.variable_count());
    for (std::size_t i = 0; i < f.variable_count(); ++i) d.push_back(f.derivative(i));
    return d;
}

namespace detail {

inline void print_coeff_monomial(std::string& out, const Rational& c, const Monomial& m,
                                 std::span<const std::string> names) {
    const bool unit = (c == 1);
    bool printed = false;
    if (!unit || m.is_constant()) {
        out += to_string(c);
        printed = true;
    }
    for (std::size_t i = 0; i < m.size(); ++i) {
        if (m[i] == 0) continue;
        if (printed) out += "*";
        out += names[i];
        if (m[i] > 1) out += "^" + std::to_string(m[i]);
        printed = true;
    }
}

}  // namespace detail

/// Canonical printer: terms in descending weighted degree (total degree when
/// no weights are given), ties broken by descending lexicographic exponent
/// order. parse(print(p)) reproduces p exactly.
inline std::string print_polynomial(const Polynomial& p, std::span<const std::string> names,
                                    std::span<const Rational> weights = {}) {
    if (names.size() != p.variable_count())
        throw Error("print_polynomial: name list length mismatch");
    if (p.is_zero()) return "0";

    std::vector<const std::pair<const Monomial, Rational>*> order;
    order.reserve(p.term_count());
    for (const auto& t : p.terms()) order.push_back(&t);
    auto deg = [&](const Monomial& m) -> Rational {
        return weights.empty() ? Rational(m.total_degree()) : m.weighted_degree(weights);
    };
    std::sort(order.begin(), order.end(), [&](const auto* a, const auto* b) {
        Rational da = deg(a->first), db = deg(b->first);
        if (da != db) return da > db;
        return a->first > b->first;
    });

    std::string out;
    for (std::size_t k = 0; k < order.size(); ++k) {
        const auto& [m, c] = *order[k];
        if (k == 0) {
            if (c < 0) out += "-";
            detail::print_coeff_monomial(out, c < 0 ? Rational(-c) : c, m, names);
        } else {
            out += c < 0 ? " - " : " + ";
            detail::print_coeff_monomial(out, c < 0 ? Rational(-c) : c, m, names);
        }
    }
    return out;
}

}  // namespace singlab
