/*
   Copyright 2026 The jdr Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef JDR_NUMERIC_HPP
#define JDR_NUMERIC_HPP

/*
 * Floating-point check of an operator on problems whose polynomials are
 * all linear, so each root g_i(x) is an explicit rational function and
 * y = sum_j a_j prod_i g_i^{alpha_ij} can be expanded as a Taylor series
 * at x0 with real exponents. Precision is in decimal digits (mpfr).
 */

#include <cstdlib>
#include <map>
#include <string>
#include <vector>

#include <boost/multiprecision/mpfr.hpp>

#include "error.hpp"
#include "lodo.hpp"
#include "problem.hpp"

namespace jdr {

using Real = boost::multiprecision::mpfr_float;

inline constexpr unsigned default_eval_digits = 30;

/// Sets the working precision for new Real values; restores it on exit.
class PrecisionGuard {
public:
    explicit PrecisionGuard(unsigned digits) : previous_(Real::default_precision()) {
        Real::default_precision(digits);
    }
    ~PrecisionGuard() { Real::default_precision(previous_); }
    PrecisionGuard(const PrecisionGuard&) = delete;
    PrecisionGuard& operator=(const PrecisionGuard&) = delete;

private:
    unsigned previous_;
};

/// JDR_EVAL_PRECISION if set to a positive integer, else the fallback.
inline unsigned eval_precision(unsigned fallback) {
    const char* env = std::getenv("JDR_EVAL_PRECISION");
    if (!env || !*env) return fallback;
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (*end != '\0' || v <= 0) throw Error(ErrorKind::Parse, std::string("bad JDR_EVAL_PRECISION '") + env + "'");
    return static_cast<unsigned>(v);
}

inline Real to_real(const Rational& q) {
    Real r;
    mpfr_set_q(r.backend().data(), q.value().get_mpq_t(), MPFR_RNDN);
    return r;
}

inline Real real_pi() {
    Real r;
    mpfr_const_pi(r.backend().data(), MPFR_RNDN);
    return r;
}

/// Accepts decimals, p/q, pi, e, sqrt(...) and a leading minus sign.
inline Real parse_real(const std::string& text) {
    std::string s;
    for (char c : text)
        if (c != ' ') s += c;
    auto bad = [&] { return Error(ErrorKind::Parse, "cannot read real value '" + text + "'"); };
    if (s.empty()) throw bad();
    if (s[0] == '-') return -parse_real(s.substr(1));
    if (s == "pi") return real_pi();
    if (s == "e") return exp(Real(1));
    if (s.rfind("sqrt(", 0) == 0 && s.back() == ')') {
        const Real v = parse_real(s.substr(5, s.size() - 6));
        if (v < 0) throw Error(ErrorKind::Domain, "square root of a negative value in '" + text + "'");
        return sqrt(v);
    }
    if (s.find('/') != std::string::npos) return to_real(Rational::parse(s));
    bool seen_digit = false, seen_dot = false;
    for (std::size_t i = 0; i < s.size(); ++i) {
        const char c = s[i];
        if (c >= '0' && c <= '9') seen_digit = true;
        else if (c == '.' && !seen_dot) seen_dot = true;
        else if ((c == 'e' || c == 'E') && seen_digit && i + 1 < s.size()) {
            std::size_t j = i + 1;
            if (s[j] == '-' || s[j] == '+') ++j;
            if (j == s.size()) throw bad();
            for (; j < s.size(); ++j)
                if (s[j] < '0' || s[j] > '9') throw bad();
            break;
        } else throw bad();
    }
    if (!seen_digit) throw bad();
    return Real(s);
}

namespace series {

// Truncated power series in h = x - x0, coefficient k of h^k.

template <class T>
std::vector<T> mul(const std::vector<T>& a, const std::vector<T>& b) {
    std::vector<T> r(a.size(), T(0));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; i + j < r.size() && j < b.size(); ++j) r[i + j] += a[i] * b[j];
    return r;
}

template <class T>
std::vector<T> div(const std::vector<T>& a, const std::vector<T>& b) {
    std::vector<T> q(a.size(), T(0));
    for (std::size_t k = 0; k < q.size(); ++k) {
        T acc = a[k];
        for (std::size_t j = 1; j <= k && j < b.size(); ++j) acc -= b[j] * q[k - j];
        q[k] = acc / b[0];
    }
    return q;
}

/// f^e for f_0 > 0 and real e, by the Miller recurrence.
inline std::vector<Real> power(const std::vector<Real>& f, const Real& e) {
    std::vector<Real> w(f.size(), Real(0));
    if (w.empty()) return w;
    w[0] = exp(e * log(f[0]));
    for (std::size_t k = 1; k < f.size(); ++k) {
        Real acc = 0;
        for (std::size_t j = 1; j <= k; ++j) acc += ((e + 1) * Real(j) - Real(k)) * f[j] * w[k - j];
        w[k] = acc / (Real(k) * f[0]);
    }
    return w;
}

/// Taylor coefficients of p(x0 + h) up to h^n, exactly.
inline std::vector<Rational> shift(const XPoly<Rational>& p, const Rational& x0, std::size_t n) {
    std::vector<Rational> c = p.coeffs();
    // repeated synthetic division by (x - x0)
    std::vector<Rational> out;
    for (std::size_t k = 0; k < n; ++k) {
        if (c.empty()) {
            out.emplace_back(0);
            continue;
        }
        std::vector<Rational> q(c.size() > 1 ? c.size() - 1 : 0);
        Rational r = c.back();
        for (std::size_t i = c.size() - 1; i-- > 0;) {
            q[i] = r;
            r = c[i] + r * x0;
        }
        out.push_back(r);
        c = std::move(q);
    }
    return out;
}

} // namespace series

/// Exact Taylor coefficients of f at x0; PoleAtSample if the denominator vanishes there.
inline std::vector<Rational> taylor(const XRat<Rational>& f, const Rational& x0, std::size_t n) {
    auto num = series::shift(f.num(), x0, n);
    auto den = series::shift(f.den(), x0, n);
    if (den[0].is_zero()) throw Error(ErrorKind::PoleAtSample, "x0 = " + x0.str() + " is a pole of " + f.str());
    return series::div(num, den);
}

inline std::vector<Real> to_real(const std::vector<Rational>& v) {
    std::vector<Real> r;
    for (const auto& q : v) r.push_back(to_real(q));
    return r;
}

/// Values of y, Dy, ..., D^n y at x0 with the symbols replaced by reals.
inline std::vector<Real> derivatives_at(const ProblemSpec<Rational>& p, const std::map<std::string, Real>& subs,
                                        const Rational& x0, unsigned n) {
    p.validate();
    std::vector<std::vector<Real>> roots;
    for (const auto& P : p.polynomials) {
        if (P.degree() != 1)
            throw Error(ErrorKind::UnsupportedDegree,
                        "numeric evaluation needs linear polynomials; '" + P.id + "' has degree " + std::to_string(P.degree()));
        auto g = taylor(-P.coeffs[0], x0, n + 1);
        if (g[0].sign() <= 0)
            throw Error(ErrorKind::Domain, "root of '" + P.id + "' is " + g[0].str() + " at x0, not positive");
        roots.push_back(to_real(g));
    }
    std::vector<Real> y(n + 1, Real(0));
    for (std::size_t j = 0; j < p.terms.size(); ++j) {
        std::vector<Real> term = to_real(taylor(p.terms[j].coeff, x0, n + 1));
        for (std::size_t i = 0; i < p.polynomials.size(); ++i) {
            const std::string* sym = p.symbol_of(j, i);
            if (!sym) continue;
            auto it = subs.find(*sym);
            if (it == subs.end()) throw Error(ErrorKind::Validation, "no value given for symbol '" + *sym + "'");
            term = series::mul(term, series::power(roots[i], it->second));
        }
        for (unsigned k = 0; k <= n; ++k) y[k] += term[k];
    }
    Real fact = 1;
    for (unsigned k = 0; k <= n; ++k) {
        if (k) fact *= k;
        y[k] *= fact;
    }
    return y;
}

inline Real monomial_real(const Monomial& mono, const std::map<std::string, Real>& subs) {
    Real v = 1;
    for (const auto& [sym, e] : mono.factors()) {
        auto it = subs.find(sym);
        if (it == subs.end()) throw Error(ErrorKind::Validation, "no value given for symbol '" + sym + "'");
        v *= pow(it->second, e);
    }
    return v;
}

/// Coefficient of D^m at x0 with the symbols replaced.
inline Real coefficient_at(const AlphaPoly<Rational>& c, const std::map<std::string, Real>& subs, const Rational& x0) {
    Real v = 0;
    for (const auto& [mono, f] : c.terms()) {
        if (f.den().evaluate(x0).is_zero())
            throw Error(ErrorKind::PoleAtSample, "x0 = " + x0.str() + " is a pole of " + f.str());
        v += to_real(f.evaluate(x0)) * monomial_real(mono, subs);
    }
    return v;
}

/*
 * |sum_m c_m(x0) y^(m)(x0)| / max_m |c_m(x0) y^(m)(x0)|, computed with
 * `digits` decimal digits plus guard digits. Zero for the zero operator.
 * Parse the substituted values under a PrecisionGuard of at least the same
 * precision, or they limit the result.
 */
inline Real numeric_residual(const Lodo<Rational>& r, const std::map<std::string, Real>& subs,
                             const ProblemSpec<Rational>& p, const Rational& x0, unsigned digits = default_eval_digits) {
    if (digits == 0) throw Error(ErrorKind::Validation, "precision must be positive");
    PrecisionGuard guard(digits + 10);
    if (r.is_zero()) return Real(0);
    const auto& s = subs;
    const auto y = derivatives_at(p, s, x0, r.order());
    Real sum = 0, biggest = 0;
    for (const auto& [m, c] : r.terms()) {
        const Real term = coefficient_at(c, s, x0) * y[m];
        sum += term;
        biggest = std::max(biggest, Real(abs(term)));
    }
    if (biggest == 0) return Real(0);
    return Real(abs(sum) / biggest);
}

/// x-coefficients (ascending) of each operator coefficient with the symbols replaced.
inline std::map<unsigned, std::vector<Real>> specialize_coefficients(const Lodo<Rational>& r,
                                                                     const std::map<std::string, Real>& subs) {
    std::map<unsigned, std::vector<Real>> out;
    for (const auto& [m, c] : r.terms()) {
        std::vector<Real> v;
        for (const auto& [mono, f] : c.terms()) {
            if (!f.is_polynomial()) throw Error(ErrorKind::Domain, "coefficient " + f.str() + " is not a polynomial");
            const Real w = monomial_real(mono, subs);
            const auto& co = f.num().coeffs();
            if (v.size() < co.size()) v.resize(co.size(), Real(0));
            for (std::size_t k = 0; k < co.size(); ++k) v[k] += to_real(co[k]) * w;
        }
        out.emplace(m, std::move(v));
    }
    return out;
}

} // namespace jdr

#endif // JDR_NUMERIC_HPP
