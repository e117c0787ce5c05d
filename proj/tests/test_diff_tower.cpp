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

#include <gtest/gtest.h>

#include "support.hpp"

using namespace jdr;
using namespace jdr::testing;
using Q = Rational;
using A = AlphaPoly<Q>;

namespace {

Residue<Q> res(std::initializer_list<XRat<Q>> c) { return Residue<Q>(std::vector<XRat<Q>>(c)); }

const XRat<Q> X = XRat<Q>::x();

TensorKey key(std::size_t term, std::vector<unsigned> exps) { return TensorKey{term, std::move(exps)}; }

} // namespace

TEST(InvertMod, Examples) {
    const auto p = monic<Q>("z", {xr({0, -1}), xr({0}), xr({1})});
    EXPECT_EQ(invert_mod(res({XRat<Q>(1)}), p), res({XRat<Q>(1)}));
    EXPECT_EQ(invert_mod(res({XRat<Q>(0), XRat<Q>(1)}), p), res({XRat<Q>(0), X.inverse()}));
    const auto sq = monic<Q>("w", {xr({0}), xr({0}), xr({1})});
    EXPECT_THROW(invert_mod(res({XRat<Q>(0), XRat<Q>(1)}), sq), Error);
}

TEST(InvertMod, RandomInvertibleResidues) {
    std::mt19937_64 rng(31);
    std::uniform_int_distribution<int> deg(1, 4);
    for (int t = 0; t < 60; ++t) {
        const int d = deg(rng);
        std::vector<XRat<Q>> c;
        for (int k = 0; k < d; ++k) c.push_back(random_xrat(rng, 1));
        c.push_back(XRat<Q>(1));
        const MonicPoly<Q> P{"P", c};
        std::vector<XRat<Q>> a;
        for (int k = 0; k < d; ++k) a.push_back(random_xrat(rng, 1));
        const Residue<Q> r(a);
        try {
            const auto inv = invert_mod(r, P);
            EXPECT_EQ((r * inv) % P.as_poly(), res({XRat<Q>(1)}));
        } catch (const Error& e) {
            EXPECT_EQ(e.kind(), ErrorKind::NotInvertible);
        }
    }
}

TEST(RootDerivative, Examples) {
    EXPECT_EQ(root_derivative(monic<Q>("z", {xr({0, -1}), xr({1})})), res({XRat<Q>(1)}));
    EXPECT_EQ(root_derivative(monic<Q>("z", {xr({0, -1}), xr({0}), xr({1})})),
              res({XRat<Q>(0), xr({1}, {0, 2})}));
    FpContext f3(3);
    const auto P = monic<Fp>("z", {xr<Fp>({-1}), xr<Fp>({0, 1}), xr<Fp>({0}), xr<Fp>({1})});
    EXPECT_EQ(root_derivative(P), Residue<Fp>(std::vector<XRat<Fp>>{XRat<Fp>(0), -XRat<Fp>::x().inverse()}));
}

TEST(RootDerivative, SatisfiesDefiningRelation) {
    std::mt19937_64 rng(32);
    for (int t = 0; t < 40; ++t) {
        std::vector<XRat<Q>> c;
        const int d = 1 + t % 3;
        for (int k = 0; k < d; ++k) c.push_back(random_xrat(rng, 2));
        c.push_back(XRat<Q>(1));
        const MonicPoly<Q> P{"P", c};
        try {
            const auto du = root_derivative(P);
            const Residue<Q> poly = P.as_poly();
            const auto px = poly.map_coeffs([](const XRat<Q>& v) { return v.derivative(); });
            EXPECT_TRUE(((px + poly.derivative() * du) % poly).is_zero());
        } catch (const Error& e) {
            EXPECT_EQ(e.kind(), ErrorKind::NotInvertible);
        }
    }
}

TEST(DerivativeTable, TwoRoots) {
    const auto table = derivative_table(two_roots(), {0, 1});
    EXPECT_EQ(table.at(0).at(key(0, {0, 0})), A(1));
    EXPECT_EQ(table.at(0).at(key(1, {0, 0})), A(1));
    EXPECT_EQ(table.at(0).entries().size(), 2u);
    EXPECT_EQ(table.at(1).at(key(0, {0, 0})), A::symbol("alpha").scaled(X.inverse()));
    EXPECT_EQ(table.at(1).at(key(1, {0, 0})), A::symbol("beta").scaled(xr({1}, {1, 1})));
}

TEST(DerivativeTable, SquareRoot) {
    const auto p = single<Q>({xr({0, -1}), xr({0}), xr({1})});
    const auto table = derivative_table(p, {1});
    EXPECT_EQ(table.at(1).at(key(0, {0})), A::symbol("alpha").scaled(xr({1}, {0, 2})));
    EXPECT_EQ(table.at(1).entries().size(), 1u);
}

TEST(DerivativeTable, AlphaDegreeBound) {
    const auto p = problem<Q>({monic<Q>("z", {xr({1}), xr({0, -1}), xr({1})}), monic<Q>("v", {xr({-1, -1}), xr({1})})},
                              {{{"z", "alpha"}, {"v", "beta"}}, {{"z", "gamma"}}}, {"alpha", "beta", "gamma"});
    const auto table = derivative_table(p, {0, 1, 2, 3, 4});
    for (const auto& [m, w] : table)
        for (const auto& [k, v] : w.entries()) {
            EXPECT_LE(v.total_degree(), m);
            EXPECT_LT(k.exps[0], 2u);
            EXPECT_EQ(k.exps[1], 0u);
        }
}

// With linear P_i, coordinates collapse to sum_j coord_j * prod g_i^{alpha_ij}.
TEST(DerivativeTable, CollapsesToDirectDerivatives) {
    const std::vector<XRat<Q>> roots = {xr({0, 2}), xr({1, 1}, {3, 1})};
    const auto p = problem<Q>({monic<Q>("z", {-roots[0], xr({1})}), monic<Q>("v", {-roots[1], xr({1})})},
                              {{{"z", "alpha"}}, {{"z", "alpha"}, {"v", "beta"}}, {{"v", "gamma"}}},
                              {"alpha", "beta", "gamma"});
    const auto table = derivative_table(p, {0, 1, 2, 3, 4});
    for (unsigned a = 0; a <= 2; ++a)
        for (unsigned b = 0; b <= 2; ++b)
            for (unsigned g = 0; g <= 1; ++g) {
                const Specialization s = {{"alpha", a}, {"beta", b}, {"gamma", g}};
                XRat<Q> direct = pow(roots[0], a) + pow(roots[0], a) * pow(roots[1], b) + pow(roots[1], g);
                for (unsigned m = 0; m <= 4; ++m) {
                    const std::vector<XRat<Q>> vj = {pow(roots[0], a), pow(roots[0], a) * pow(roots[1], b),
                                                     pow(roots[1], g)};
                    XRat<Q> collapsed;
                    for (const auto& [k, v] : table.at(m).entries()) collapsed += v.evaluate(s) * vj[k.term];
                    EXPECT_EQ(collapsed, direct) << "m = " << m;
                    direct = direct.derivative();
                }
            }
}

TEST(ApplyLodo, Examples) {
    const auto p = two_roots();
    EXPECT_TRUE(apply_lodo(two_roots_operator(), p).is_zero());
    EXPECT_TRUE(apply_lodo(Lodo<Q>(), p).is_zero());
    EXPECT_EQ(apply_lodo(Lodo<Q>::d(), p), derivative_table(p, {1}).at(1));
    Lodo<Q> off = two_roots_operator();
    off.add(0, A(1));
    EXPECT_FALSE(apply_lodo(off, p).is_zero());
}

TEST(LodoDerive, Examples) {
    const A x(X);
    Lodo<Q> xd;
    xd.add(1, x);
    Lodo<Q> want;
    want.add(2, x);
    want.add(1, A(1));
    EXPECT_EQ(lodo_derive(xd), want);

    Lodo<Q> c;
    c.add(0, A(5));
    EXPECT_EQ(lodo_derive(c), Lodo<Q>::d().scaled(XRat<Q>(5)));

    Lodo<Q> x2;
    x2.add(0, x * x);
    Lodo<Q> want2;
    want2.add(1, x * x);
    want2.add(0, x.scaled(XRat<Q>(2)));
    EXPECT_EQ(lodo_derive(x2), want2);
    EXPECT_EQ(lodo_derive(two_roots_operator()).order(), 3u);
}

TEST(LodoDerive, CommutesWithTheTowerDerivation) {
    const auto p = problem<Q>({monic<Q>("z", {xr({1}), xr({0, -1}), xr({1})})}, {{{"z", "alpha"}}}, {"alpha"});
    const DiffTower<Q> tower(p);
    std::mt19937_64 rng(33);
    for (int t = 0; t < 10; ++t) {
        Lodo<Q> r;
        for (unsigned m = 0; m < 3; ++m) r.add(m, A(random_xrat(rng, 1), Monomial("alpha", m % 2)));
        EXPECT_EQ(apply_lodo(lodo_derive(r), tower), tower.derive(apply_lodo(r, tower)));
    }
}

TEST(NumericResidual, TwoRoots) {
    const auto p = two_roots();
    PrecisionGuard g(50);
    const std::map<std::string, Real> subs = {{"alpha", parse_real("sqrt(7)")}, {"beta", parse_real("pi")}};
    for (const char* x0 : {"1/2", "1", "2", "7/3"})
        EXPECT_LT(numeric_residual(two_roots_operator(), subs, p, Q::parse(x0), 30), Real("1e-20"));
    EXPECT_EQ(numeric_residual(Lodo<Q>(), subs, p, Q(1)), Real(0));
    Lodo<Q> wrong = two_roots_operator();
    wrong.add(0, A(1));
    EXPECT_GT(numeric_residual(wrong, subs, p, Q(1), 30), Real("1e-3"));
}

TEST(NumericResidual, Errors) {
    PrecisionGuard g(40);
    const std::map<std::string, Real> subs = {{"alpha", Real("0.5")}};
    const auto sq = single<Q>({xr({0, -1}), xr({0}), xr({1})});
    try {
        numeric_residual(Lodo<Q>::d(), subs, sq, Q(1));
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::UnsupportedDegree);
    }
    auto lin = single<Q>({xr({0, -1}), xr({1})});
    lin.terms[0].coeff = xr({1}, {-1, 1});
    try {
        numeric_residual(Lodo<Q>::d(), subs, lin, Q(1));
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::PoleAtSample);
    }
    try {
        numeric_residual(Lodo<Q>::d(), subs, lin, Q(-2));
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::Domain);
    }
}

TEST(ParseReal, Forms) {
    PrecisionGuard g(40);
    EXPECT_EQ(parse_real("1/4"), Real("0.25"));
    EXPECT_EQ(parse_real("-2.5e1"), Real(-25));
    EXPECT_LT(abs(parse_real("sqrt(7)") * parse_real("sqrt(7)") - 7), Real("1e-35"));
    EXPECT_LT(abs(parse_real("pi") - Real("3.14159265358979323846264338327950288")), Real("1e-34"));
    EXPECT_THROW(parse_real("tau"), Error);
    EXPECT_THROW(parse_real("sqrt(-1)"), Error);
}
