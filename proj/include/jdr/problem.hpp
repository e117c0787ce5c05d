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

#ifndef JDR_PROBLEM_HPP
#define JDR_PROBLEM_HPP

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "alpha_poly.hpp"
#include "error.hpp"
#include "xrat.hpp"

namespace jdr {

/// Monic polynomial in t over K(x); coefficients ascending in t.
template <class K>
struct MonicPoly {
    std::string id;
    std::vector<XRat<K>> coeffs;

    std::size_t degree() const { return coeffs.empty() ? 0 : coeffs.size() - 1; }
    Poly<XRat<K>> as_poly() const { return Poly<XRat<K>>(coeffs); }

    friend bool operator==(const MonicPoly&, const MonicPoly&) = default;
};

/// a * prod_i u_i^{alpha_i}; polynomials absent from `exponents` carry exponent 0.
template <class K>
struct PseudoTerm {
    XRat<K> coeff{1};
    std::map<std::string, std::string> exponents; // polynomial id -> symbol

    friend bool operator==(const PseudoTerm&, const PseudoTerm&) = default;
};

/// The polynomials P_i and the pseudopolynomial y = sum_j a_j prod_i u_i^{alpha_ij}.
template <class K>
struct ProblemSpec {
    FieldTag field;
    std::vector<MonicPoly<K>> polynomials;
    std::vector<PseudoTerm<K>> terms;
    std::vector<std::string> alphas;

    std::size_t poly_index(const std::string& id) const {
        for (std::size_t i = 0; i < polynomials.size(); ++i)
            if (polynomials[i].id == id) return i;
        throw Error(ErrorKind::Validation, "unknown polynomial id '" + id + "'");
    }

    /// Symbol carried by term j on polynomial i, or empty for exponent 0.
    const std::string* symbol_of(std::size_t term, std::size_t poly) const {
        const auto& ex = terms[term].exponents;
        auto it = ex.find(polynomials[poly].id);
        return it == ex.end() ? nullptr : &it->second;
    }

    void validate() const {
        auto fail = [](const std::string& what) { throw Error(ErrorKind::Validation, what); };
        if (polynomials.empty()) fail("at least one polynomial is required");
        if (terms.empty()) fail("the pseudopolynomial needs at least one term");
        std::set<std::string> ids;
        for (const auto& p : polynomials) {
            if (p.id.empty()) fail("polynomial id must be nonempty");
            if (!ids.insert(p.id).second) fail("duplicate polynomial id '" + p.id + "'");
            if (p.coeffs.size() < 2) fail("polynomial '" + p.id + "' must have degree >= 1");
            if (!p.coeffs.back().is_one()) fail("polynomial '" + p.id + "' is not monic");
            if (p.coeffs.front().is_zero())
                fail("polynomial '" + p.id + "' has zero constant term: invertible root required");
        }
        std::set<std::string> syms;
        for (const auto& a : alphas) {
            if (a.empty()) fail("alpha symbol must be nonempty");
            if (!syms.insert(a).second) fail("duplicate alpha symbol '" + a + "'");
        }
        std::set<std::string> used;
        for (const auto& t : terms) {
            for (const auto& [pid, sym] : t.exponents) {
                if (!ids.count(pid)) fail("term references unknown polynomial '" + pid + "'");
                if (!syms.count(sym)) fail("term references undeclared alpha symbol '" + sym + "'");
                used.insert(sym);
            }
        }
        for (const auto& a : alphas)
            if (!used.count(a)) fail("alpha symbol '" + a + "' is not used by any term");
    }

    friend bool operator==(const ProblemSpec&, const ProblemSpec&) = default;
};

} // namespace jdr

#endif // JDR_PROBLEM_HPP
