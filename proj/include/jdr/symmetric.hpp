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

#ifndef JDR_SYMMETRIC_HPP
#define JDR_SYMMETRIC_HPP

#include <algorithm>
#include <map>
#include <string>
#include <vector>

#include "alpha_poly.hpp"
#include "problem.hpp"
#include "xrat.hpp"

namespace jdr {

/*
 * Newton's identities without division, so they stay valid in positive
 * characteristic. With e_k = (-1)^k c_{d-k} for P = sum c_k t^k monic,
 *
 *     p_k = sum_{i=1}^{k-1} (-1)^{i-1} e_i p_{k-i} + (-1)^{k-1} k e_k,
 *
 * where e_i = 0 for i > d.
 */
template <class K>
std::vector<XRat<K>> powersums_from_elementary(const MonicPoly<K>& P, unsigned n) {
    const std::size_t d = P.degree();
    std::vector<XRat<K>> e(d + 1);
    for (std::size_t k = 0; k <= d; ++k) {
        e[k] = P.coeffs[d - k];
        if (k % 2) e[k] = -e[k];
    }
    std::vector<XRat<K>> p(n + 1);
    p[0] = XRat<K>(K(static_cast<long>(d)));
    for (unsigned k = 1; k <= n; ++k) {
        XRat<K> acc;
        for (unsigned i = 1; i < k && i <= d; ++i) {
            const XRat<K> term = e[i] * p[k - i];
            if (i % 2) acc += term;
            else acc -= term;
        }
        if (k <= d) {
            const XRat<K> last = e[k] * XRat<K>(K(static_cast<long>(k)));
            if (k % 2) acc += last;
            else acc -= last;
        }
        p[k] = std::move(acc);
    }
    return p;
}

/// Powersum tables per polynomial, extended on demand.
template <class K>
class PowersumCache {
public:
    explicit PowersumCache(const ProblemSpec<K>& p) : p_(&p), tables_(p.polynomials.size()) {}

    const XRat<K>& get(std::size_t poly, unsigned k) {
        auto& t = tables_[poly];
        if (t.size() <= k) t = powersums_from_elementary(p_->polynomials[poly], std::max<unsigned>(k, 2 * static_cast<unsigned>(t.size())));
        return t[k];
    }

private:
    const ProblemSpec<K>* p_;
    std::vector<std::vector<XRat<K>>> tables_;
};

/*
 * Sum over all combined permutations of D^m applied to y at the integer
 * exponents s. Each root of each polynomial ranges independently, so the
 * sum factors into products of powersums, with p_0 = deg P_i for
 * polynomials a term does not involve.
 */
template <class K>
XRat<K> combined_sum(const ProblemSpec<K>& p, const Specialization& s, unsigned m, PowersumCache<K>& cache) {
    XRat<K> total;
    for (std::size_t j = 0; j < p.terms.size(); ++j) {
        XRat<K> v = p.terms[j].coeff;
        for (std::size_t i = 0; i < p.polynomials.size(); ++i) {
            unsigned e = 0;
            if (const std::string* sym = p.symbol_of(j, i)) {
                auto it = s.find(*sym);
                if (it == s.end()) throw Error(ErrorKind::Validation, "specialization misses symbol '" + *sym + "'");
                e = it->second;
            }
            v *= cache.get(i, e);
        }
        total += v;
    }
    for (unsigned k = 0; k < m; ++k) total = total.derivative();
    return total;
}

template <class K>
XRat<K> combined_sum(const ProblemSpec<K>& p, const Specialization& s, unsigned m) {
    PowersumCache<K> cache(p);
    return combined_sum(p, s, m, cache);
}

} // namespace jdr

#endif // JDR_SYMMETRIC_HPP
