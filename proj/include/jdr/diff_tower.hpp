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

#ifndef JDR_DIFF_TOWER_HPP
#define JDR_DIFF_TOWER_HPP

/*
 * Derivatives of y = sum_j a_j prod_i u_i^{alpha_ij} where u_i is a root of
 * the monic P_i in K(x)[t]. The roots are never materialised: everything
 * lives in the product of residue rings K(x)[t_i]/(P_i), and D^m y is
 * stored by its coordinates over the basis
 *
 *     v_j * u_1^{c_1} ... u_L^{c_L},   0 <= c_i < deg P_i,
 *
 * with coordinates in K(x)[alpha]. One derivative step uses
 *
 *     D v_j = v_j * sum_i alpha_ij * (Du_i / u_i)
 *     D u_i = -P_x(u_i) / P_t(u_i)        (mod P_i)
 *
 * where P_x differentiates the coefficients and P_t differentiates in t.
 */

#include <compare>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "alpha_poly.hpp"
#include "error.hpp"
#include "poly.hpp"
#include "problem.hpp"
#include "xrat.hpp"

namespace jdr {

/// Element of K(x)[t]/(P), kept with deg_t < deg P.
template <class K>
using Residue = Poly<XRat<K>>;

template <class K>
Residue<K> reduce_mod(const Residue<K>& a, const MonicPoly<K>& p) {
    return a % p.as_poly();
}

template <class K>
Residue<K> invert_mod(const Residue<K>& a, const MonicPoly<K>& p) {
    const Residue<K> modulus = p.as_poly();
    auto [g, s, t] = extended_gcd(reduce_mod(a, p), modulus);
    (void)t;
    if (g.degree() != 0)
        throw Error(ErrorKind::NotInvertible, "residue is not invertible modulo polynomial '" + p.id + "'");
    return s % modulus;
}

/// Du as a residue: P_x(u) + P_t(u) * Du = 0 (mod P).
template <class K>
Residue<K> root_derivative(const MonicPoly<K>& p) {
    const Residue<K> P = p.as_poly();
    const Residue<K> px = P.map_coeffs([](const XRat<K>& c) { return c.derivative(); });
    const Residue<K> pt = P.derivative();
    return (-(px % P) * invert_mod(pt, p)) % P;
}

/// Du / u as a residue; needs a nonzero constant term.
template <class K>
Residue<K> log_root_derivative(const MonicPoly<K>& p) {
    return (root_derivative(p) * invert_mod(Residue<K>::variable(), p)) % p.as_poly();
}

struct TensorKey {
    std::size_t term = 0;
    std::vector<unsigned> exps; // c_i per polynomial

    friend auto operator<=>(const TensorKey&, const TensorKey&) = default;
    friend bool operator==(const TensorKey&, const TensorKey&) = default;
};

/// Coordinates over the tensor basis; zero coordinates are not stored.
template <class K>
class TensorVector {
public:
    using Entries = std::map<TensorKey, AlphaPoly<K>>;

    const Entries& entries() const { return e_; }
    bool is_zero() const { return e_.empty(); }

    AlphaPoly<K> at(const TensorKey& k) const {
        auto it = e_.find(k);
        return it == e_.end() ? AlphaPoly<K>() : it->second;
    }

    void add(const TensorKey& k, const AlphaPoly<K>& v) {
        if (v.is_zero()) return;
        auto [it, inserted] = e_.try_emplace(k, v);
        if (!inserted) {
            it->second += v;
            if (it->second.is_zero()) e_.erase(it);
        }
    }

    TensorVector& operator+=(const TensorVector& o) {
        for (const auto& [k, v] : o.e_) add(k, v);
        return *this;
    }
    friend TensorVector operator+(TensorVector a, const TensorVector& b) { return a += b; }

    friend TensorVector operator*(const AlphaPoly<K>& s, const TensorVector& w) {
        TensorVector r;
        if (s.is_zero()) return r;
        for (const auto& [k, v] : w.e_) r.add(k, s * v);
        return r;
    }

    friend bool operator==(const TensorVector&, const TensorVector&) = default;

private:
    Entries e_;
};

/// Precomputed residue data for one problem; the derivation on tensor coordinates.
template <class K>
class DiffTower {
public:
    explicit DiffTower(ProblemSpec<K> p) : p_(std::move(p)) {
        p_.validate();
        for (const auto& P : p_.polynomials) {
            Factor f;
            f.degree = P.degree();
            const Residue<K> mod = P.as_poly();
            Residue<K> power(XRat<K>(1));
            const std::size_t d = f.degree;
            for (std::size_t e = 0; e + 1 < 2 * d; ++e) {
                f.powers.push_back(dense(power % mod, d));
                power = power * Residue<K>::variable();
                power = power % mod;
            }
            f.du = dense(root_derivative(P), d);
            f.dlog = dense(log_root_derivative(P), d);
            factors_.push_back(std::move(f));
        }
    }

    const ProblemSpec<K>& problem() const { return p_; }

    std::size_t degree(std::size_t i) const { return factors_[i].degree; }

    /// Coordinates of y itself.
    TensorVector<K> initial() const {
        TensorVector<K> w;
        for (std::size_t j = 0; j < p_.terms.size(); ++j)
            w.add(TensorKey{j, std::vector<unsigned>(factors_.size(), 0)}, AlphaPoly<K>(p_.terms[j].coeff));
        return w;
    }

    /// Applies D once.
    TensorVector<K> derive(const TensorVector<K>& w) const {
        TensorVector<K> out;
        for (const auto& [key, a] : w.entries()) {
            out.add(key, a.derivative());
            for (std::size_t i = 0; i < factors_.size(); ++i) {
                if (const std::string* sym = p_.symbol_of(key.term, i))
                    mul_residue(out, key, key.exps[i], a * AlphaPoly<K>::symbol(*sym), i, factors_[i].dlog);
                if (key.exps[i] > 0) {
                    const AlphaPoly<K> scaled = a.scaled(XRat<K>(K(static_cast<long>(key.exps[i]))));
                    mul_residue(out, key, key.exps[i] - 1, scaled, i, factors_[i].du);
                }
            }
        }
        return out;
    }

    std::map<unsigned, TensorVector<K>> derivative_table(const std::set<unsigned>& orders) const {
        std::map<unsigned, TensorVector<K>> table;
        if (orders.empty()) return table;
        TensorVector<K> w = initial();
        const unsigned top = *orders.rbegin();
        for (unsigned m = 0;; ++m) {
            if (orders.count(m)) table.emplace(m, w);
            if (m == top) break;
            w = derive(w);
        }
        return table;
    }

private:
    struct Factor {
        std::size_t degree = 0;
        std::vector<std::vector<XRat<K>>> powers; // t^e mod P, e < 2d - 1
        std::vector<XRat<K>> du;
        std::vector<XRat<K>> dlog;
    };

    static std::vector<XRat<K>> dense(const Residue<K>& r, std::size_t d) {
        std::vector<XRat<K>> v(d);
        for (std::size_t k = 0; k < r.size() && k < d; ++k) v[k] = r.coeffs()[k];
        return v;
    }

    // out += a * t_i^{base} * r(t_i) at the coordinates of `key` with c_i replaced.
    void mul_residue(TensorVector<K>& out, const TensorKey& key, unsigned base, const AlphaPoly<K>& a,
                     std::size_t i, const std::vector<XRat<K>>& r) const {
        const Factor& f = factors_[i];
        std::vector<XRat<K>> acc(f.degree);
        for (std::size_t k = 0; k < r.size(); ++k) {
            if (r[k].is_zero()) continue;
            const auto& pw = f.powers[base + k];
            for (std::size_t l = 0; l < f.degree; ++l)
                if (!pw[l].is_zero()) acc[l] += r[k] * pw[l];
        }
        TensorKey nk = key;
        for (std::size_t l = 0; l < f.degree; ++l) {
            if (acc[l].is_zero()) continue;
            nk.exps[i] = static_cast<unsigned>(l);
            out.add(nk, a.scaled(acc[l]));
        }
    }

    ProblemSpec<K> p_;
    std::vector<Factor> factors_;
};

template <class K>
std::map<unsigned, TensorVector<K>> derivative_table(const ProblemSpec<K>& p, const std::set<unsigned>& orders) {
    return DiffTower<K>(p).derivative_table(orders);
}

} // namespace jdr

#endif // JDR_DIFF_TOWER_HPP
