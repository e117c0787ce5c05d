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

#ifndef JDR_POWERSUM_HPP
#define JDR_POWERSUM_HPP

/*
 * Resolvent coefficients from powersums. A template fixes which
 * coefficient-functions r_{k,s} may be nonzero: entry c stands for
 * r_c * monomial_c(alpha) * D^{m_c}. Every integer specialization of the
 * symbols turns R y = 0, summed over all combined permutations, into one
 * linear equation in the Psi unknowns r_c with coefficients in K(x).
 * Psi - 1 such equations determine r up to a factor via maximal minors.
 */

#include <set>
#include <string>
#include <variant>
#include <vector>

#include "alpha_poly.hpp"
#include "determinant.hpp"
#include "error.hpp"
#include "lodo.hpp"
#include "problem.hpp"
#include "symmetric.hpp"
#include "xrat.hpp"

namespace jdr {

struct TemplateEntry {
    unsigned order = 0;
    Monomial mono;

    friend bool operator==(const TemplateEntry&, const TemplateEntry&) = default;
};

struct ResolventTemplate {
    std::vector<TemplateEntry> entries;

    std::size_t size() const { return entries.size(); }

    void validate() const {
        if (entries.size() < 2) throw Error(ErrorKind::Validation, "a template needs at least two entries");
        for (std::size_t a = 0; a < entries.size(); ++a)
            for (std::size_t b = a + 1; b < entries.size(); ++b)
                if (entries[a] == entries[b])
                    throw Error(ErrorKind::Validation, "template entry (" + std::to_string(entries[a].order) + ", " +
                                                           entries[a].mono.str() + ") is repeated");
    }

    friend bool operator==(const ResolventTemplate&, const ResolventTemplate&) = default;
};

/*
 * Shape of a resolvent for z^alpha over one polynomial of degree n:
 * alpha^j D^m for m <= n and j <= n(n-1)/2 + 1 - m, without the bare
 * constant term since z^0 = 1 must be annihilated too.
 */
inline ResolventTemplate degree_template(unsigned n, const std::string& alpha) {
    if (n == 0) throw Error(ErrorKind::Validation, "template degree must be at least 1");
    ResolventTemplate t;
    const unsigned top = n * (n - 1) / 2 + 1;
    for (unsigned m = n + 1; m-- > 0;) {
        for (unsigned j = m == 0 ? 1 : 0; j + m <= top; ++j) t.entries.push_back({m, Monomial(alpha, j)});
    }
    return t;
}

inline unsigned max_order(const ResolventTemplate& t) {
    unsigned m = 0;
    for (const auto& e : t.entries) m = std::max(m, e.order);
    return m;
}

inline long monomial_value(const Monomial& mono, const Specialization& s) {
    long v = 1;
    for (const auto& [sym, e] : mono.factors()) {
        auto it = s.find(sym);
        if (it == s.end()) throw Error(ErrorKind::Validation, "specialization misses symbol '" + sym + "'");
        for (unsigned k = 0; k < e; ++k) v *= static_cast<long>(it->second);
    }
    return v;
}

/// Row per specialization, column per template entry.
template <class K>
Matrix<XRat<K>> build_specialization_matrix(const ProblemSpec<K>& p, const ResolventTemplate& tpl,
                                            const std::vector<Specialization>& specs) {
    tpl.validate();
    if (specs.size() + 1 != tpl.size())
        throw Error(ErrorKind::DimensionMismatch, "template has " + std::to_string(tpl.size()) + " entries, so " +
                                                      std::to_string(tpl.size() - 1) + " specializations are needed, got " +
                                                      std::to_string(specs.size()));
    const std::set<Specialization> distinct(specs.begin(), specs.end());
    if (distinct.size() != specs.size()) throw Error(ErrorKind::Validation, "specializations must be pairwise distinct");

    PowersumCache<K> cache(p);
    const unsigned top = max_order(tpl);
    Matrix<XRat<K>> m(specs.size(), tpl.size());
    for (std::size_t r = 0; r < specs.size(); ++r) {
        std::vector<XRat<K>> sums;
        sums.push_back(combined_sum(p, specs[r], 0, cache));
        for (unsigned k = 1; k <= top; ++k) sums.push_back(sums.back().derivative());
        for (std::size_t c = 0; c < tpl.size(); ++c) {
            const auto& e = tpl.entries[c];
            m(r, c) = sums[e.order] * XRat<K>(K(monomial_value(e.mono, specs[r])));
        }
    }
    return m;
}

/// Multiplies each row by the lcm of its denominators.
template <class K>
Matrix<XPoly<K>> clear_row_denominators(const Matrix<XRat<K>>& m) {
    Matrix<XPoly<K>> out(m.rows(), m.cols());
    for (std::size_t r = 0; r < m.rows(); ++r) {
        XPoly<K> l(K(1));
        for (std::size_t c = 0; c < m.cols(); ++c) l = lcm_monic(l, m(r, c).den());
        for (std::size_t c = 0; c < m.cols(); ++c) out(r, c) = exact_divide(m(r, c).num() * l, m(r, c).den());
    }
    return out;
}

template <class K>
struct Resolvent {
    ResolventTemplate tpl;
    std::vector<XPoly<K>> raw_t;
    XPoly<K> content;
    std::vector<XPoly<K>> primitive_r;
    std::string method = "powersum";
    std::vector<Specialization> specs;

    friend bool operator==(const Resolvent&, const Resolvent&) = default;
};

/// Every minor vanished: retry with other specializations.
struct IdenticallyZero {
    ResolventTemplate tpl;
    std::vector<Specialization> specs;
    std::string hint = "all maximal minors vanish; retry with different specializations";
    std::string method = "powersum";
};

template <class K>
using ResolventOutcome = std::variant<Resolvent<K>, IdenticallyZero>;

template <class K>
ResolventOutcome<K> powersum_resolvent(const ProblemSpec<K>& p, const ResolventTemplate& tpl,
                                       const std::vector<Specialization>& specs) {
    p.validate();
    const auto m = clear_row_denominators(build_specialization_matrix(p, tpl, specs));
    std::vector<XPoly<K>> t = signed_maximal_minors(m);
    bool all_zero = true;
    for (const auto& v : t) all_zero = all_zero && v.is_zero();
    if (all_zero) return IdenticallyZero{tpl, specs};
    auto split = content_primitive(t);
    return Resolvent<K>{tpl, std::move(t), std::move(split.content), std::move(split.prims), "powersum", specs};
}

/// sum_c r_c * monomial_c * D^{m_c}
template <class K>
Lodo<K> to_lodo(const ResolventTemplate& tpl, const std::vector<XPoly<K>>& r) {
    if (r.size() != tpl.size()) throw Error(ErrorKind::DimensionMismatch, "coefficient count differs from template size");
    Lodo<K> out;
    for (std::size_t c = 0; c < r.size(); ++c)
        out.add(tpl.entries[c].order, AlphaPoly<K>(XRat<K>(r[c]), tpl.entries[c].mono));
    return out;
}

template <class K>
Lodo<K> to_lodo(const Resolvent<K>& r) {
    return to_lodo(r.tpl, r.primitive_r);
}

enum class SpecStrategy { Grid, Explicit };

/*
 * Grid: all symbols but the last range over {1, 2}, the last over
 * 1..ceil(n / 2^(s-1)); the first n vectors in lexicographic order.
 * Explicit: the given list, checked for completeness and count.
 */
inline std::vector<Specialization> default_specializations(const ResolventTemplate& tpl,
                                                           const std::vector<std::string>& symbols,
                                                           SpecStrategy strategy,
                                                           const std::vector<Specialization>& given = {}) {
    const std::size_t n = tpl.size() - 1;
    if (strategy == SpecStrategy::Explicit) {
        if (given.size() != n)
            throw Error(ErrorKind::DimensionMismatch, "expected " + std::to_string(n) + " specializations, got " +
                                                          std::to_string(given.size()));
        for (const auto& s : given)
            for (const auto& sym : symbols)
                if (!s.count(sym)) throw Error(ErrorKind::Validation, "specialization misses symbol '" + sym + "'");
        return given;
    }
    if (symbols.empty()) throw Error(ErrorKind::Validation, "no symbols to specialize");
    const std::size_t lead = symbols.size() - 1;
    std::size_t block = 1;
    for (std::size_t i = 0; i < lead && block < n; ++i) block *= 2;
    const unsigned last = static_cast<unsigned>(std::max<std::size_t>(1, (n + block - 1) / block));

    // index i read as mixed-radix digits (2, ..., 2, last), last symbol fastest
    std::vector<Specialization> out;
    for (std::size_t i = 0; i < n; ++i) {
        Specialization s;
        std::size_t rest = i;
        s[symbols[lead]] = static_cast<unsigned>(rest % last) + 1;
        rest /= last;
        for (std::size_t k = lead; k-- > 0;) {
            s[symbols[k]] = static_cast<unsigned>(rest % 2) + 1;
            rest /= 2;
        }
        out.push_back(std::move(s));
    }
    return out;
}

template <class K>
std::vector<Specialization> default_specializations(const ResolventTemplate& tpl, const ProblemSpec<K>& p,
                                                    SpecStrategy strategy, const std::vector<Specialization>& given = {}) {
    return default_specializations(tpl, p.alphas, strategy, given);
}

} // namespace jdr

#endif // JDR_POWERSUM_HPP
