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

#ifndef JDR_POLY_HPP
#define JDR_POLY_HPP

#include <algorithm>
#include <initializer_list>
#include <string>
#include <string_view>
#include <tuple>
#include <utility>
#include <vector>

#include "error.hpp"
#include "field.hpp"

namespace jdr {

/*
 * Dense univariate polynomial over a field F, coefficients in ascending
 * powers. The highest stored coefficient is always nonzero; the zero
 * polynomial has no coefficients.
 *
 * F must provide: value-initialisation to zero, construction from long,
 * is_zero(), inverse() and the field operators. Used both for K[x]
 * (F = Rational, Fp) and for K(x)[t] (F = XRat<K>).
 */
template <class F>
class Poly {
public:
    using coefficient_type = F;

    Poly() = default;
    Poly(F c) {
        if (!c.is_zero()) c_.push_back(std::move(c));
    }
    Poly(long c) : Poly(F(c)) {}
    explicit Poly(std::vector<F> coeffs) : c_(std::move(coeffs)) { trim(); }
    Poly(std::initializer_list<F> coeffs) : c_(coeffs) { trim(); }

    /// c * var^deg
    static Poly monomial(F c, std::size_t deg) {
        if (c.is_zero()) return {};
        std::vector<F> v(deg + 1);
        v[deg] = std::move(c);
        return Poly(std::move(v));
    }
    static Poly variable() { return monomial(F(1), 1); }

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    bool is_constant() const { return c_.size() <= 1; }
    bool is_one() const { return c_.size() == 1 && c_[0] == F(1); }
    std::size_t size() const { return c_.size(); }

    const std::vector<F>& coeffs() const { return c_; }
    F coeff(std::size_t i) const { return i < c_.size() ? c_[i] : F(); }
    const F& leading() const {
        if (c_.empty()) throw Error(ErrorKind::Domain, "leading coefficient of zero polynomial");
        return c_.back();
    }

    Poly monic() const {
        if (is_zero()) return {};
        return scaled(leading().inverse());
    }

    Poly scaled(const F& s) const {
        if (s.is_zero()) return {};
        Poly r = *this;
        for (auto& c : r.c_) c *= s;
        r.trim();
        return r;
    }

    /// Formal derivative with respect to the polynomial variable.
    Poly derivative() const {
        if (c_.size() <= 1) return {};
        std::vector<F> d(c_.size() - 1);
        for (std::size_t i = 1; i < c_.size(); ++i) d[i - 1] = c_[i] * F(static_cast<long>(i));
        return Poly(std::move(d));
    }

    template <class Fn>
    Poly map_coeffs(Fn&& fn) const {
        std::vector<F> v;
        v.reserve(c_.size());
        for (const auto& c : c_) v.push_back(fn(c));
        return Poly(std::move(v));
    }

    template <class V>
    V evaluate(const V& at) const {
        V r{};
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * at + V(*it);
        return r;
    }
    F evaluate(const F& at) const { return evaluate<F>(at); }

    Poly pow(unsigned e) const {
        Poly r(F(1)), b = *this;
        while (e) {
            if (e & 1) r *= b;
            e >>= 1;
            if (e) b *= b;
        }
        return r;
    }

    Poly operator-() const {
        Poly r = *this;
        for (auto& c : r.c_) c = -c;
        return r;
    }
    Poly& operator+=(const Poly& o) {
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
        for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
        trim();
        return *this;
    }
    Poly& operator-=(const Poly& o) {
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
        for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
        trim();
        return *this;
    }
    Poly& operator*=(const Poly& o) { return *this = *this * o; }

    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(const Poly& a, const Poly& b) {
        if (a.is_zero() || b.is_zero()) return {};
        std::vector<F> r(a.c_.size() + b.c_.size() - 1);
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            if (a.c_[i].is_zero()) continue;
            for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
        }
        return Poly(std::move(r));
    }
    friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }

    /// Quotient and remainder; b must be nonzero.
    friend std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
        if (b.is_zero()) throw Error(ErrorKind::NotInvertible, "polynomial division by zero");
        if (a.degree() < b.degree()) return {Poly{}, a};
        const F inv_lead = b.leading().inverse();
        std::vector<F> r = a.c_;
        std::vector<F> q(a.c_.size() - b.c_.size() + 1);
        const std::size_t db = b.c_.size() - 1;
        for (std::size_t k = q.size(); k-- > 0;) {
            F f = r[k + db] * inv_lead;
            if (f.is_zero()) continue;
            for (std::size_t j = 0; j <= db; ++j) r[k + j] -= f * b.c_[j];
            q[k] = std::move(f);
        }
        r.resize(db);
        return {Poly(std::move(q)), Poly(std::move(r))};
    }

    friend Poly operator%(const Poly& a, const Poly& b) { return divmod(a, b).second; }

private:
    void trim() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }

    std::vector<F> c_;
};

template <class F>
Poly<F> exact_divide(const Poly<F>& a, const Poly<F>& b) {
    auto [q, r] = divmod(a, b);
    if (!r.is_zero()) throw Error(ErrorKind::Domain, "inexact polynomial division");
    return q;
}

/// Monic gcd; gcd(a, 0) = monic(a), gcd(0, 0) = 0.
template <class F>
Poly<F> gcd_monic(Poly<F> a, Poly<F> b) {
    while (!b.is_zero()) {
        Poly<F> r = divmod(a, b).second;
        a = std::move(b);
        b = r.monic();
    }
    return a.monic();
}

/// Returns (g, s, t) with s*a + t*b = g and g = gcd_monic(a, b).
template <class F>
std::tuple<Poly<F>, Poly<F>, Poly<F>> extended_gcd(const Poly<F>& a, const Poly<F>& b) {
    Poly<F> r0 = a, r1 = b, s0(F(1)), s1, t0, t1(F(1));
    while (!r1.is_zero()) {
        auto [q, r] = divmod(r0, r1);
        Poly<F> s = s0 - q * s1, t = t0 - q * t1;
        r0 = std::move(r1);
        r1 = std::move(r);
        s0 = std::move(s1);
        s1 = std::move(s);
        t0 = std::move(t1);
        t1 = std::move(t);
    }
    if (r0.is_zero()) return {r0, s0, t0};
    const F inv = r0.leading().inverse();
    return {r0.scaled(inv), s0.scaled(inv), t0.scaled(inv)};
}

template <class F>
Poly<F> lcm_monic(const Poly<F>& a, const Poly<F>& b) {
    if (a.is_zero() || b.is_zero()) return {};
    return exact_divide(a * b, gcd_monic(a, b)).monic();
}

/// Univariate polynomials in x over the coefficient field K.
template <class K>
using XPoly = Poly<K>;

template <class K>
XPoly<K> derive(const XPoly<K>& f) {
    return f.derivative();
}

/// Renders a polynomial over Q or F_p as "3*x^2 - x + 1/2".
template <class K>
std::string to_string(const XPoly<K>& p, std::string_view var = "x") {
    if (p.is_zero()) return "0";
    std::string out;
    for (std::size_t i = p.size(); i-- > 0;) {
        const K& c = p.coeffs()[i];
        if (c.is_zero()) continue;
        const bool neg = field_traits<K>::is_negative(c);
        const K mag = neg ? -c : c;
        if (out.empty()) {
            if (neg) out += "-";
        } else {
            out += neg ? " - " : " + ";
        }
        const bool unit = mag.is_one();
        if (i == 0 || !unit) out += field_traits<K>::str(mag);
        if (i > 0) {
            if (!unit) out += "*";
            out += var;
            if (i > 1) out += "^" + std::to_string(i);
        }
    }
    return out;
}

} // namespace jdr

#endif // JDR_POLY_HPP
