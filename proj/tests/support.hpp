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

// Helpers shared by the test programs.

#ifndef JDR_TESTS_SUPPORT_HPP
#define JDR_TESTS_SUPPORT_HPP

#include <initializer_list>
#include <random>
#include <string>
#include <vector>

#include "jdr/jdr.hpp"

namespace jdr::testing {

template <class K = Rational>
XPoly<K> xp(std::initializer_list<long> ascending) {
    std::vector<K> c;
    for (long v : ascending) c.push_back(K(v));
    return XPoly<K>(std::move(c));
}

template <class K = Rational>
XPoly<K> xvar() {
    return XPoly<K>::variable();
}

template <class K = Rational>
XRat<K> xr(std::initializer_list<long> num, std::initializer_list<long> den = {1}) {
    return XRat<K>(xp<K>(num), xp<K>(den));
}

/// Monic polynomial in t from ascending coefficients in K(x).
template <class K = Rational>
MonicPoly<K> monic(std::string id, std::vector<XRat<K>> coeffs) {
    return MonicPoly<K>{std::move(id), std::move(coeffs)};
}

/// y = sum_j prod over the listed (poly, symbol) pairs.
template <class K = Rational>
ProblemSpec<K> problem(std::vector<MonicPoly<K>> polys,
                       std::vector<std::vector<std::pair<std::string, std::string>>> terms,
                       std::vector<std::string> alphas) {
    ProblemSpec<K> p;
    p.field = field_traits<K>::tag();
    p.polynomials = std::move(polys);
    for (const auto& t : terms) {
        PseudoTerm<K> term;
        for (const auto& [pid, sym] : t) term.exponents[pid] = sym;
        p.terms.push_back(std::move(term));
    }
    p.alphas = std::move(alphas);
    return p;
}

/// z^alpha + v^beta with z = x and v = x + 1.
inline ProblemSpec<Rational> two_roots() {
    return problem<Rational>({monic<Rational>("z", {xr({0, -1}), xr({1})}), monic<Rational>("v", {xr({-1, -1}), xr({1})})},
                             {{{"z", "alpha"}}, {{"v", "beta"}}}, {"alpha", "beta"});
}

/// Single term z^alpha over one polynomial.
template <class K = Rational>
ProblemSpec<K> single(std::vector<XRat<K>> coeffs) {
    return problem<K>({monic<K>("z", std::move(coeffs))}, {{{"z", "alpha"}}}, {"alpha"});
}

inline ResolventTemplate two_roots_template() {
    return {{{2, Monomial("alpha")},
             {2, Monomial("beta")},
             {1, Monomial("alpha")},
             {1, Monomial("alpha", 2)},
             {1, Monomial("beta")},
             {1, Monomial("beta", 2)},
             {0, Monomial{{"alpha", 2}, {"beta", 1}}},
             {0, Monomial{{"alpha", 1}, {"beta", 2}}},
             {0, Monomial{{"alpha", 1}, {"beta", 1}}}}};
}

inline std::vector<Specialization> pairs(std::initializer_list<std::pair<unsigned, unsigned>> ab) {
    std::vector<Specialization> out;
    for (auto [a, b] : ab) out.push_back({{"alpha", a}, {"beta", b}});
    return out;
}

/// Resolvent of x^alpha + (x+1)^beta with cleared denominators and positive leading coefficient.
inline Lodo<Rational> two_roots_operator() {
    using A = AlphaPoly<Rational>;
    const XPoly<Rational> x = xvar(), x1 = xp({1, 1});
    auto term = [](const XPoly<Rational>& c, Monomial m) { return A(XRat<Rational>(c), std::move(m)); };
    Lodo<Rational> l;
    l.add(2, term(x1 * x1 * x, Monomial("alpha")) + term(-(x1 * x * x), Monomial("beta")));
    l.add(1, term(x1 * x1, Monomial("alpha")) + term(-(x1 * x1), Monomial("alpha", 2)) +
                 term(-(x * x), Monomial("beta")) + term(x * x, Monomial("beta", 2)));
    l.add(0, term(x1, Monomial{{"alpha", 2}, {"beta", 1}}) + term(-x, Monomial{{"alpha", 1}, {"beta", 2}}) +
                 term(xp({-1}), Monomial{{"alpha", 1}, {"beta", 1}}));
    return l;
}

inline XPoly<Rational> rho_grid() {
    return xp({-9, -63, -144, 159, 1899, 5554, 8858, 8212, 4092, 840});
}

/// Degree-30 factor of the content for the scattered specializations (independent exact oracle), descending, sign fixed by the prims.
inline XPoly<Rational> rho_scattered() {
    const std::vector<long> desc = {5715360, 112197960, 995296680, 5557352760, 22140565686, 66311020404,
                                    152033303034, 266628844998, 351175045545, 329414094285, 183201856083, -8408385467,
                                    -132299902649, -143334628614, -86294328987, -28653768600, -328631470, 5365949089,
                                    3106834631, 647382998, -308659291, -299770800, -97528896, -11222587,
                                    -2382481, -2599148, -870257, -253722, -123080, -15736,
                                    -728};
    std::vector<Rational> c;
    for (auto it = desc.rbegin(); it != desc.rend(); ++it) c.push_back(Rational(-*it));
    return XPoly<Rational>(std::move(c));
}

/// Random polynomial with small integer coefficients.
template <class K = Rational>
XPoly<K> random_xpoly(std::mt19937_64& rng, int max_deg, long range = 3) {
    std::uniform_int_distribution<int> deg(0, max_deg);
    std::uniform_int_distribution<long> coef(-range, range);
    std::vector<K> c;
    for (int d = deg(rng); d >= 0; --d) c.push_back(K(coef(rng)));
    return XPoly<K>(std::move(c));
}

template <class K = Rational>
XRat<K> random_xrat(std::mt19937_64& rng, int max_deg) {
    XPoly<K> den;
    while (den.is_zero()) den = random_xpoly<K>(rng, max_deg);
    return XRat<K>(random_xpoly<K>(rng, max_deg), den);
}

/// Small random element of K(x)[alpha, beta].
inline AlphaPoly<Rational> random_alpha_poly(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> terms(0, 3), e(0, 2);
    AlphaPoly<Rational> r;
    for (int k = terms(rng); k > 0; --k)
        r.add_term(Monomial{{"alpha", static_cast<unsigned>(e(rng))}, {"beta", static_cast<unsigned>(e(rng))}},
                   XRat<Rational>(random_xpoly(rng, 1)));
    return r;
}

} // namespace jdr::testing

#endif // JDR_TESTS_SUPPORT_HPP
