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

TEST(Rational, ParsesAndCanonicalizes) {
    EXPECT_EQ(Q::parse("6/-4").str(), "-3/2");
    EXPECT_EQ(Q::parse("+7").str(), "7");
    EXPECT_EQ(Q::parse("0/5"), Q(0));
    EXPECT_THROW(Q::parse("1/0"), Error);
    EXPECT_THROW(Q::parse("1.5"), Error);
    EXPECT_THROW(Q::parse(""), Error);
    EXPECT_THROW(Q(0).inverse(), Error);
}

TEST(Fp, ArithmeticModP) {
    FpContext ctx(7);
    EXPECT_EQ(Fp(-1).value(), 6u);
    EXPECT_EQ((Fp(3) * Fp(5)).value(), 1u);
    EXPECT_EQ(Fp(3).inverse(), Fp(5));
    EXPECT_EQ(Fp::parse("1/2"), Fp(4));
    EXPECT_EQ(field_traits<Fp>::tag().modulus, 7u);
}

TEST(Fp, ContextIsRequiredAndValidated) {
    EXPECT_THROW(Fp(1), Error);
    EXPECT_THROW(FpContext(4), Error);
    EXPECT_THROW(FpContext(max_fp_modulus + 1), Error);
    FpContext big(2305843009213693951ull); // 2^61 - 1
    EXPECT_EQ((Fp(-1) * Fp(-1)).value(), 1u);
    {
        FpContext inner(3);
        EXPECT_EQ(Fp(5).value(), 2u);
    }
    EXPECT_EQ(Fp::modulus(), 2305843009213693951ull);
}

TEST(Derive, Examples) {
    EXPECT_EQ(derive(xp({0, 0, 1})), xp({0, 2}));
    EXPECT_EQ(derive(xp({5})), XPoly<Q>());
    EXPECT_EQ(derive(xr({1}, {0, 1})), xr({-1}, {0, 0, 1}));
}

TEST(Derive, LeibnizOnRandomRationalFunctions) {
    std::mt19937_64 rng(11);
    for (int i = 0; i < 100; ++i) {
        const auto f = random_xrat(rng, 3), g = random_xrat(rng, 3);
        EXPECT_EQ(derive(f * g), f * derive(g) + derive(f) * g);
        EXPECT_EQ(derive(f + g), derive(f) + derive(g));
    }
}

TEST(Gcd, Examples) {
    EXPECT_EQ(gcd_monic(xp({-1, 0, 1}), xp({-1, 1})), xp({-1, 1}));
    EXPECT_EQ(gcd_monic(xp({2, 2}), xp({4})), xp({1}));
    EXPECT_EQ(gcd_monic(xp({4, 0, 2}), XPoly<Q>()), xp({2, 0, 1}));
    EXPECT_TRUE(gcd_monic(XPoly<Q>(), XPoly<Q>()).is_zero());
}

TEST(Gcd, DividesBothAndIsGreatest) {
    std::mt19937_64 rng(12);
    for (int i = 0; i < 100; ++i) {
        const auto c = random_xpoly(rng, 2), a = random_xpoly(rng, 3) * c, b = random_xpoly(rng, 3) * c;
        const auto g = gcd_monic(a, b);
        if (a.is_zero() && b.is_zero()) continue;
        EXPECT_TRUE((a % g).is_zero());
        EXPECT_TRUE((b % g).is_zero());
        if (!c.is_zero()) {
            EXPECT_TRUE((g % c).is_zero());
        }
    }
}

TEST(Gcd, ExtendedBezout) {
    std::mt19937_64 rng(13);
    for (int i = 0; i < 50; ++i) {
        const auto a = random_xpoly(rng, 4), b = random_xpoly(rng, 4);
        const auto [g, s, t] = extended_gcd(a, b);
        EXPECT_EQ(s * a + t * b, g);
        EXPECT_EQ(g, gcd_monic(a, b));
    }
}

TEST(ContentPrimitive, Examples) {
    const auto s = content_primitive<Q>({xp({0, 2}), xp({0, 4})});
    EXPECT_EQ(s.content, xp({0, 2}));
    EXPECT_EQ(s.prims, (std::vector<XPoly<Q>>{xp({1}), xp({2})}));
    EXPECT_THROW(content_primitive<Q>({XPoly<Q>(), XPoly<Q>()}), Error);
}

TEST(ContentPrimitive, OverF3) {
    FpContext ctx(3);
    const auto s = content_primitive<Fp>({xp<Fp>({0, 2}), xp<Fp>({2})});
    EXPECT_EQ(s.content, xp<Fp>({2}));
    EXPECT_EQ(s.prims, (std::vector<XPoly<Fp>>{xp<Fp>({0, 1}), xp<Fp>({1})}));
}

TEST(ContentPrimitive, TwoRootsValues) {
    const XPoly<Q> x = xvar(), x1 = xp({1, 1});
    const XPoly<Q> chi = XPoly<Q>(Q(128)) * x * rho_grid();
    const std::vector<XPoly<Q>> r = {x * x1 * x1, -(x * x * x1), x1 * x1, -(x1 * x1), -(x * x), x * x, x1, -x, xp({-1})};
    std::vector<XPoly<Q>> t;
    for (const auto& v : r) t.push_back(chi * v);
    const auto s = content_primitive(t);
    EXPECT_EQ(s.content, chi);
    EXPECT_EQ(s.prims, r);
}

TEST(ContentPrimitive, ReconstructsAndNormalizes) {
    std::mt19937_64 rng(14);
    for (int i = 0; i < 100; ++i) {
        std::vector<XPoly<Q>> ts;
        const auto common = random_xpoly(rng, 2);
        for (int k = 0; k < 4; ++k) ts.push_back(random_xpoly(rng, 3) * common);
        bool all_zero = true;
        for (const auto& t : ts) all_zero = all_zero && t.is_zero();
        if (all_zero) continue;
        const auto s = content_primitive(ts);
        std::vector<Q> coeffs;
        const XPoly<Q>* first = nullptr;
        for (std::size_t k = 0; k < ts.size(); ++k) {
            EXPECT_EQ(s.content * s.prims[k], ts[k]);
            for (const auto& c : s.prims[k].coeffs()) {
                EXPECT_TRUE(c.is_integer());
                coeffs.push_back(c);
            }
            if (!first && !s.prims[k].is_zero()) first = &s.prims[k];
        }
        EXPECT_GT(first->leading().sign(), 0);
        EXPECT_EQ(field_traits<Q>::normalizer(coeffs, Q(1)), Q(1));
    }
}

TEST(XRat, CanonicalFormIsIdempotent) {
    std::mt19937_64 rng(15);
    for (int i = 0; i < 100; ++i) {
        const auto f = random_xrat(rng, 3);
        EXPECT_EQ(XRat<Q>(f.num(), f.den()), f);
        EXPECT_TRUE(f.den().leading().is_one());
        EXPECT_TRUE(gcd_monic(f.num(), f.den()).is_one() || f.is_zero());
    }
    EXPECT_EQ(XRat<Q>(xp({-1, 0, 1}), xp({-2, 2})), xr({1, 1}, {2}));
    EXPECT_EQ(XRat<Q>(XPoly<Q>(), xp({3, 1})).den(), xp({1}));
}

TEST(XRat, EvaluateAndPoles) {
    const auto f = xr({1}, {-1, 1});
    EXPECT_EQ(f.evaluate(Q(3)), Q::parse("1/2"));
    EXPECT_THROW(f.evaluate(Q(1)), Error);
}

TEST(Poly, Rendering) {
    EXPECT_EQ(to_string(xp({1, -1, 3}), "x"), "3*x^2 - x + 1");
    EXPECT_EQ(to_string(XPoly<Q>(), "x"), "0");
}
