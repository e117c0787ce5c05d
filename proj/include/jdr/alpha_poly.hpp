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

#ifndef JDR_ALPHA_POLY_HPP
#define JDR_ALPHA_POLY_HPP

#include <algorithm>
#include <initializer_list>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "error.hpp"
#include "xrat.hpp"

namespace jdr {

/// Power product of exponent symbols, e.g. alpha^2*beta. Exponents are positive.
class Monomial {
public:
    using Factor = std::pair<std::string, unsigned>;

    Monomial() = default;
    Monomial(std::initializer_list<Factor> factors) {
        for (const auto& [s, e] : factors) *this = *this * Monomial(s, e);
    }
    explicit Monomial(const std::map<std::string, unsigned>& m) {
        for (const auto& [s, e] : m)
            if (e) f_.emplace_back(s, e);
    }
    explicit Monomial(std::string sym, unsigned e = 1) {
        if (e) f_.emplace_back(std::move(sym), e);
    }

    const std::vector<Factor>& factors() const { return f_; }
    bool is_one() const { return f_.empty(); }

    unsigned exponent(const std::string& sym) const {
        for (const auto& [s, e] : f_)
            if (s == sym) return e;
        return 0;
    }

    unsigned total_degree() const {
        unsigned d = 0;
        for (const auto& f : f_) d += f.second;
        return d;
    }

    bool divides(const Monomial& o) const {
        for (const auto& [s, e] : f_)
            if (o.exponent(s) < e) return false;
        return true;
    }

    std::string str() const {
        if (f_.empty()) return "1";
        std::string out;
        for (const auto& [s, e] : f_) {
            if (!out.empty()) out += "*";
            out += s;
            if (e > 1) out += "^" + std::to_string(e);
        }
        return out;
    }

    friend Monomial operator*(const Monomial& a, const Monomial& b) {
        Monomial r;
        auto i = a.f_.begin(), j = b.f_.begin();
        while (i != a.f_.end() || j != b.f_.end()) {
            if (j == b.f_.end() || (i != a.f_.end() && i->first < j->first)) r.f_.push_back(*i++);
            else if (i == a.f_.end() || j->first < i->first) r.f_.push_back(*j++);
            else {
                r.f_.emplace_back(i->first, i->second + j->second);
                ++i;
                ++j;
            }
        }
        return r;
    }

    /// a / b, assuming b divides a.
    friend Monomial operator/(const Monomial& a, const Monomial& b) {
        Monomial r;
        for (const auto& [s, e] : a.f_) {
            unsigned d = e - b.exponent(s);
            if (d) r.f_.emplace_back(s, d);
        }
        return r;
    }

    friend bool operator==(const Monomial& a, const Monomial& b) { return a.f_ == b.f_; }

    /*
     * Lexicographic term order with symbols ranked by name: the first
     * symbol (by name) where the exponents differ decides, larger exponent
     * wins. Multiplicative, so usable for division.
     */
    friend bool operator<(const Monomial& a, const Monomial& b) {
        auto i = a.f_.begin(), j = b.f_.begin();
        for (;;) {
            if (i == a.f_.end()) return j != b.f_.end();
            if (j == b.f_.end()) return false;
            if (i->first != j->first) return i->first > j->first;
            if (i->second != j->second) return i->second < j->second;
            ++i;
            ++j;
        }
    }

private:
    std::vector<Factor> f_;
};

/// Assignment of nonnegative integers to exponent symbols.
using Specialization = std::map<std::string, unsigned>;

/// Sparse polynomial in exponent symbols with coefficients in K(x).
template <class K>
class AlphaPoly {
public:
    using Terms = std::map<Monomial, XRat<K>>;

    AlphaPoly() = default;
    AlphaPoly(long c) : AlphaPoly(XRat<K>(c)) {}
    AlphaPoly(XRat<K> c) {
        if (!c.is_zero()) t_.emplace(Monomial{}, std::move(c));
    }
    AlphaPoly(XRat<K> c, Monomial m) {
        if (!c.is_zero()) t_.emplace(std::move(m), std::move(c));
    }

    static AlphaPoly symbol(const std::string& s) { return AlphaPoly(XRat<K>(1), Monomial(s)); }

    const Terms& terms() const { return t_; }
    bool is_zero() const { return t_.empty(); }
    std::size_t size() const { return t_.size(); }

    XRat<K> coeff(const Monomial& m) const {
        auto it = t_.find(m);
        return it == t_.end() ? XRat<K>() : it->second;
    }

    bool is_constant() const { return t_.empty() || (t_.size() == 1 && t_.begin()->first.is_one()); }
    XRat<K> constant_term() const { return coeff(Monomial{}); }

    unsigned total_degree() const {
        unsigned d = 0;
        for (const auto& [m, c] : t_) d = std::max(d, m.total_degree());
        return d;
    }

    const std::pair<const Monomial, XRat<K>>& leading_term() const {
        if (t_.empty()) throw Error(ErrorKind::Domain, "leading term of zero polynomial");
        return *t_.rbegin();
    }

    /// Coefficient-wise derivation (the symbols are constants).
    AlphaPoly derivative() const {
        AlphaPoly r;
        for (const auto& [m, c] : t_) r.add_term(m, c.derivative());
        return r;
    }

    AlphaPoly scaled(const XRat<K>& s) const {
        if (s.is_zero()) return {};
        AlphaPoly r;
        for (const auto& [m, c] : t_) r.t_.emplace_hint(r.t_.end(), m, c * s);
        return r;
    }

    AlphaPoly times_monomial(const Monomial& mono) const {
        AlphaPoly r;
        for (const auto& [m, c] : t_) r.t_.emplace(m * mono, c);
        return r;
    }

    /// Substitutes integers for the symbols; missing symbols are an error.
    XRat<K> evaluate(const Specialization& s) const {
        XRat<K> r;
        for (const auto& [m, c] : t_) {
            K v(1);
            for (const auto& [sym, e] : m.factors()) {
                auto it = s.find(sym);
                if (it == s.end()) throw Error(ErrorKind::Validation, "specialization misses symbol '" + sym + "'");
                for (unsigned k = 0; k < e; ++k) v *= K(static_cast<long>(it->second));
            }
            r += c * XRat<K>(v);
        }
        return r;
    }

    void add_term(const Monomial& m, const XRat<K>& c) {
        if (c.is_zero()) return;
        auto [it, inserted] = t_.try_emplace(m, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) t_.erase(it);
        }
    }

    std::string str() const {
        if (t_.empty()) return "0";
        std::string out;
        for (auto it = t_.rbegin(); it != t_.rend(); ++it) {
            if (!out.empty()) out += " + ";
            out += "(" + it->second.str() + ")";
            if (!it->first.is_one()) out += "*" + it->first.str();
        }
        return out;
    }

    AlphaPoly operator-() const {
        AlphaPoly r = *this;
        for (auto& [m, c] : r.t_) c = -c;
        return r;
    }
    AlphaPoly& operator+=(const AlphaPoly& o) {
        for (const auto& [m, c] : o.t_) add_term(m, c);
        return *this;
    }
    AlphaPoly& operator-=(const AlphaPoly& o) {
        for (const auto& [m, c] : o.t_) add_term(m, -c);
        return *this;
    }
    AlphaPoly& operator*=(const AlphaPoly& o) { return *this = *this * o; }

    friend AlphaPoly operator+(AlphaPoly a, const AlphaPoly& b) { return a += b; }
    friend AlphaPoly operator-(AlphaPoly a, const AlphaPoly& b) { return a -= b; }
    friend AlphaPoly operator*(const AlphaPoly& a, const AlphaPoly& b) {
        AlphaPoly r;
        if (a.is_zero() || b.is_zero()) return r;
        if (b.is_constant()) return a.scaled(b.constant_term());
        if (a.is_constant()) return b.scaled(a.constant_term());
        for (const auto& [ma, ca] : a.t_)
            for (const auto& [mb, cb] : b.t_) r.add_term(ma * mb, ca * cb);
        return r;
    }
    friend bool operator==(const AlphaPoly& a, const AlphaPoly& b) { return a.t_ == b.t_; }

private:
    Terms t_;
};

template <class K>
AlphaPoly<K> derive(const AlphaPoly<K>& f) {
    return f.derivative();
}

/// Exact division in K(x)[symbols]; throws if b does not divide a.
template <class K>
AlphaPoly<K> exact_divide(const AlphaPoly<K>& a, const AlphaPoly<K>& b) {
    if (b.is_zero()) throw Error(ErrorKind::NotInvertible, "division by zero polynomial");
    if (b.is_constant()) return a.scaled(b.constant_term().inverse());
    const auto& [lm, lc] = b.leading_term();
    const XRat<K> inv = lc.inverse();
    AlphaPoly<K> q, r = a;
    while (!r.is_zero()) {
        const auto& [rm, rc] = r.leading_term();
        if (!lm.divides(rm)) throw Error(ErrorKind::Domain, "inexact multivariate division");
        const Monomial m = rm / lm;
        const XRat<K> c = rc * inv;
        q.add_term(m, c);
        r -= b.times_monomial(m).scaled(c);
    }
    return q;
}

} // namespace jdr

#endif // JDR_ALPHA_POLY_HPP
