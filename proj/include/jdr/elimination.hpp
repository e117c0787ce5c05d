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

#ifndef JDR_ELIMINATION_HPP
#define JDR_ELIMINATION_HPP

/*
 * Resolvent by direct elimination. Rows are D^{m_k} y in tensor
 * coordinates; with N orders and N - 1 coordinates in the support, the
 * N x N determinant with first column (D^{m_k} y)_k vanishes, and its
 * expansion along that column is an operator annihilating y.
 */

#include <set>
#include <variant>
#include <vector>

#include "determinant.hpp"
#include "diff_tower.hpp"
#include "error.hpp"
#include "lodo.hpp"
#include "powersum.hpp"

namespace jdr {

inline constexpr std::size_t max_elimination_size = 9;

/// Coordinates that are nonzero at some order in the table.
template <class K>
std::vector<TensorKey> support(const std::map<unsigned, TensorVector<K>>& table) {
    std::set<TensorKey> keys;
    for (const auto& [m, w] : table)
        for (const auto& [k, v] : w.entries()) keys.insert(k);
    return {keys.begin(), keys.end()};
}

/// Smallest 0..N-1 whose table support has exactly N - 1 coordinates.
template <class K>
std::vector<unsigned> auto_orders(const DiffTower<K>& tower) {
    std::set<TensorKey> keys;
    TensorVector<K> w = tower.initial();
    for (unsigned n = 1; n <= max_elimination_size; ++n) {
        for (const auto& [k, v] : w.entries()) keys.insert(k);
        if (keys.size() + 1 <= n) {
            std::vector<unsigned> orders(n);
            for (unsigned m = 0; m < n; ++m) orders[m] = m;
            return orders;
        }
        w = tower.derive(w);
    }
    throw Error(ErrorKind::TooLarge, "elimination needs more than " + std::to_string(max_elimination_size) + " orders");
}

template <class K>
std::vector<unsigned> auto_orders(const ProblemSpec<K>& p) {
    return auto_orders(DiffTower<K>(p));
}

/// Every cofactor vanished.
struct Degenerate {
    std::vector<unsigned> orders;
};

template <class K>
using EliminationOutcome = std::variant<Lodo<K>, Degenerate>;

template <class K>
EliminationOutcome<K> eliminate_resolvent(const DiffTower<K>& tower, const std::vector<unsigned>& orders) {
    if (orders.empty()) throw Error(ErrorKind::Validation, "at least one order is required");
    for (std::size_t k = 1; k < orders.size(); ++k)
        if (orders[k] <= orders[k - 1]) throw Error(ErrorKind::Validation, "orders must be strictly increasing");
    const std::size_t n = orders.size();
    if (n > max_elimination_size)
        throw Error(ErrorKind::TooLarge, std::to_string(n) + " orders exceed the elimination limit of " +
                                             std::to_string(max_elimination_size));

    const auto table = tower.derivative_table(std::set<unsigned>(orders.begin(), orders.end()));
    const auto keys = support(table);
    if (keys.size() + 1 != n)
        throw Error(ErrorKind::DimensionMismatch, "support has " + std::to_string(keys.size()) + " coordinates, so " +
                                                      std::to_string(keys.size() + 1) + " orders are needed, got " +
                                                      std::to_string(n));

    Matrix<AlphaPoly<K>> rows(n, n - 1);
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t c = 0; c < keys.size(); ++c) rows(k, c) = table.at(orders[k]).at(keys[c]);

    Lodo<K> out;
    for (std::size_t k = 0; k < n; ++k) {
        Matrix<AlphaPoly<K>> minor(n - 1, n - 1);
        for (std::size_t r = 0, rr = 0; r < n; ++r) {
            if (r == k) continue;
            for (std::size_t c = 0; c + 1 < n; ++c) minor(rr, c) = rows(r, c);
            ++rr;
        }
        AlphaPoly<K> d = det_fraction_free(minor);
        out.add(orders[k], k % 2 ? -d : d);
    }
    if (out.is_zero()) return Degenerate{orders};
    return normalize(out);
}

template <class K>
EliminationOutcome<K> eliminate_resolvent(const ProblemSpec<K>& p, const std::vector<unsigned>& orders) {
    return eliminate_resolvent(DiffTower<K>(p), orders);
}

/// The (order, monomial) support of an operator, highest order first.
template <class K>
ResolventTemplate template_from_lodo(const Lodo<K>& r) {
    ResolventTemplate t;
    for (auto it = r.terms().rbegin(); it != r.terms().rend(); ++it)
        for (auto jt = it->second.terms().rbegin(); jt != it->second.terms().rend(); ++jt)
            t.entries.push_back({it->first, jt->first});
    return t;
}

/// Reads a normalized operator with polynomial coefficients as a resolvent with content 1.
template <class K>
Resolvent<K> resolvent_from_lodo(const Lodo<K>& r, std::string method = "eliminate") {
    Resolvent<K> out;
    out.tpl = template_from_lodo(r);
    out.method = std::move(method);
    for (const auto& e : out.tpl.entries) {
        const XRat<K> c = r.coeff(e.order).coeff(e.mono);
        if (!c.is_polynomial())
            throw Error(ErrorKind::Domain, "operator coefficient " + c.str() + " is not a polynomial in x");
        out.raw_t.push_back(c.num());
    }
    out.primitive_r = out.raw_t;
    out.content = XPoly<K>(K(1));
    return out;
}

} // namespace jdr

#endif // JDR_ELIMINATION_HPP
