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

#ifndef JDR_LODO_HPP
#define JDR_LODO_HPP

#include <map>
#include <set>
#include <string>
#include <vector>

#include "alpha_poly.hpp"
#include "diff_tower.hpp"

namespace jdr {

/// Linear ordinary differential operator sum_m c_m D^m with c_m in K(x)[alpha].
template <class K>
class Lodo {
public:
    using Terms = std::map<unsigned, AlphaPoly<K>>;

    Lodo() = default;

    static Lodo d(unsigned order = 1) {
        Lodo r;
        r.add(order, AlphaPoly<K>(1));
        return r;
    }

    const Terms& terms() const { return t_; }

    /// Zero or identically zero: every coefficient vanishes.
    bool is_zero() const { return t_.empty(); }

    unsigned order() const { return t_.empty() ? 0 : t_.rbegin()->first; }

    AlphaPoly<K> coeff(unsigned m) const {
        auto it = t_.find(m);
        return it == t_.end() ? AlphaPoly<K>() : it->second;
    }

    void add(unsigned m, const AlphaPoly<K>& c) {
        if (c.is_zero()) return;
        auto [it, inserted] = t_.try_emplace(m, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) t_.erase(it);
        }
    }

    Lodo scaled(const XRat<K>& s) const {
        Lodo r;
        for (const auto& [m, c] : t_) r.add(m, c.scaled(s));
        return r;
    }

    std::string str() const {
        if (t_.empty()) return "0";
        std::string out;
        for (auto it = t_.rbegin(); it != t_.rend(); ++it) {
            if (!out.empty()) out += "\n  + ";
            out += "[" + it->second.str() + "]";
            if (it->first == 1) out += "*D";
            else if (it->first > 1) out += "*D^" + std::to_string(it->first);
        }
        return out;
    }

    friend Lodo operator+(Lodo a, const Lodo& b) {
        for (const auto& [m, c] : b.t_) a.add(m, c);
        return a;
    }
    friend bool operator==(const Lodo&, const Lodo&) = default;

private:
    Terms t_;
};

/// Left composition D o R via the product rule.
template <class K>
Lodo<K> lodo_derive(const Lodo<K>& r) {
    Lodo<K> out;
    for (const auto& [m, c] : r.terms()) {
        out.add(m + 1, c);
        out.add(m, c.derivative());
    }
    return out;
}

/// R applied to y, in tensor coordinates; zero iff R annihilates y identically in the symbols.
template <class K>
TensorVector<K> apply_lodo(const Lodo<K>& r, const DiffTower<K>& tower) {
    std::set<unsigned> orders;
    for (const auto& [m, c] : r.terms()) orders.insert(m);
    const auto table = tower.derivative_table(orders);
    TensorVector<K> out;
    for (const auto& [m, c] : r.terms()) out += c * table.at(m);
    return out;
}

template <class K>
TensorVector<K> apply_lodo(const Lodo<K>& r, const ProblemSpec<K>& p) {
    return apply_lodo(r, DiffTower<K>(p));
}

/// First nonzero coefficient: highest order, then leading monomial.
template <class K>
XRat<K> leading_coefficient(const Lodo<K>& r) {
    if (r.is_zero()) return XRat<K>();
    return r.terms().rbegin()->second.leading_term().second;
}

/*
 * Clears all denominators, divides out the common content in K[x] and fixes
 * the unit: over Q the coefficients become coprime integer polynomials with
 * the leading coefficient (highest order, leading monomial) positive; over
 * F_p that coefficient becomes monic.
 */
template <class K>
Lodo<K> normalize(const Lodo<K>& r) {
    if (r.is_zero()) return r;
    XPoly<K> den(K(1));
    for (const auto& [m, c] : r.terms())
        for (const auto& [mono, v] : c.terms()) den = lcm_monic(den, v.den());
    std::vector<XPoly<K>> cleared;
    for (auto it = r.terms().rbegin(); it != r.terms().rend(); ++it)
        for (auto jt = it->second.terms().rbegin(); jt != it->second.terms().rend(); ++jt)
            cleared.push_back(exact_divide(jt->second.num() * den, jt->second.den()));
    const ContentSplit<K> split = content_primitive(cleared);
    return r.scaled(XRat<K>(den) / XRat<K>(split.content));
}

/// True iff c_a * a = c_b * b for some nonzero c_a, c_b in K(x).
template <class K>
bool equal_up_to_unit(const Lodo<K>& a, const Lodo<K>& b) {
    if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
    const unsigned m = a.terms().rbegin()->first;
    const auto& [mono, ca] = a.terms().rbegin()->second.leading_term();
    const XRat<K> cb = b.coeff(m).coeff(mono);
    if (cb.is_zero()) return false;
    return a.scaled(cb) == b.scaled(ca);
}

} // namespace jdr

#endif // JDR_LODO_HPP
