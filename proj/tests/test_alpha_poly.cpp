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

const A alpha = A::symbol("alpha");
const A beta = A::symbol("beta");

Matrix<A> random_matrix(std::mt19937_64& rng, std::size_t r, std::size_t c) {
    Matrix<A> m(r, c);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j) m(i, j) = random_alpha_poly(rng);
    return m;
}

} // namespace

TEST(Monomial, OrderAndPrinting) {
    const Monomial a2b{{"alpha", 2}, {"beta", 1}};
    EXPECT_EQ(a2b.str(), "alpha^2*beta");
    EXPECT_EQ(a2b.total_degree(), 3u);
    EXPECT_TRUE(Monomial("alpha").divides(a2b));
    EXPECT_EQ(a2b / Monomial("beta"), Monomial("alpha", 2));
    EXPECT_TRUE(Monomial("beta", 5) < Monomial("alpha"));
    EXPECT_TRUE(Monomial() < Monomial("beta"));
}

TEST(Determinant, SmallExamples) {
    EXPECT_EQ(det_fraction_free(Matrix<A>{{A(7)}}), A(7));
    EXPECT_EQ(det_fraction_free(Matrix<A>{{alpha, A(1)}, {beta, A(1)}}), alpha - beta);
    EXPECT_EQ(det_cofactor(Matrix<A>(0, 0)), A(1));
    EXPECT_THROW(det_fraction_free(Matrix<A>(2, 3)), Error);
}

TEST(Determinant, FractionFreeMatchesCofactor) {
    std::mt19937_64 rng(21);
    for (std::size_t n = 1; n <= 5; ++n)
        for (int t = 0; t < (n == 5 ? 3 : 8); ++t) {
            const auto m = random_matrix(rng, n, n);
            EXPECT_EQ(det_fraction_free(m), det_cofactor(m)) << "n = " << n;
        }
}

TEST(Determinant, FractionFreeOverPolynomialsWithZeroPivots) {
    std::mt19937_64 rng(22);
    for (int t = 0; t < 30; ++t) {
        Matrix<XPoly<Q>> m(6, 6);
        for (std::size_t i = 0; i < 6; ++i)
            for (std::size_t j = 0; j < 6; ++j) m(i, j) = (i + j) % 3 == 0 ? XPoly<Q>() : random_xpoly(rng, 2);
        EXPECT_EQ(det_fraction_free(m), det_cofactor(m));
    }
}

TEST(Determinant, Alternating) {
    std::mt19937_64 rng(23);
    for (std::size_t n = 2; n <= 5; ++n) {
        auto m = random_matrix(rng, n, n);
        const A d = det_fraction_free(m);
        m.swap_rows(0, n - 1);
        EXPECT_EQ(det_fraction_free(m), -d);
        for (std::size_t j = 0; j < n; ++j) m(1, j) = m(0, j);
        EXPECT_TRUE(det_fraction_free(m).is_zero());
    }
}

TEST(MaximalMinors, OneByTwo) {
    const A a = alpha, b = A(XRat<Q>(xp({0, 1})));
    EXPECT_EQ(signed_maximal_minors(Matrix<A>{{a, b}}), (std::vector<A>{b, -a}));
    EXPECT_THROW(signed_maximal_minors(Matrix<A>(2, 2)), Error);
}

TEST(MaximalMinors, AnnihilateRandomMatrices) {
    std::mt19937_64 rng(24);
    for (int t = 0; t < 40; ++t) {
        const std::size_t r = 1 + t % 4;
        const auto m = random_matrix(rng, r, r + 1);
        for (const auto& v : m.multiply(signed_maximal_minors(m))) EXPECT_TRUE(v.is_zero());
    }
}

TEST(MaximalMinors, TwoRootsFirstColumnCofactors) {
    // rows D^m y in coordinates (z^alpha, v^beta), scaled by x^m (x+1)^m
    const A x(XRat<Q>(xp({0, 1}))), x1(XRat<Q>(xp({1, 1})));
    Matrix<A> m{{A(1), A(1)},
                {alpha * x1, beta * x},
                {(alpha * alpha - alpha) * x1 * x1, (beta * beta - beta) * x * x}};
    Matrix<A> t(2, 3);
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 2; ++j) t(j, i) = m(i, j);
    const auto c = signed_maximal_minors(t);
    Lodo<Q> l;
    A scale(1);
    for (unsigned k = 0; k < 3; ++k) {
        l.add(k, c[k] * scale);
        scale *= x * x1;
    }
    EXPECT_EQ(normalize(l), two_roots_operator());
}

TEST(AlphaPoly, RingLaws) {
    std::mt19937_64 rng(25);
    for (int t = 0; t < 50; ++t) {
        const A a = random_alpha_poly(rng), b = random_alpha_poly(rng), c = random_alpha_poly(rng);
        EXPECT_EQ((a * b) * c, a * (b * c));
        EXPECT_EQ(a * b, b * a);
        EXPECT_EQ(a * (b + c), a * b + a * c);
        EXPECT_TRUE((a - a).is_zero());
    }
}

TEST(AlphaPoly, ExactDivision) {
    std::mt19937_64 rng(26);
    for (int t = 0; t < 50; ++t) {
        const A a = random_alpha_poly(rng), b = random_alpha_poly(rng);
        if (b.is_zero()) continue;
        EXPECT_EQ(exact_divide(a * b, b), a);
    }
    EXPECT_THROW(exact_divide(alpha, beta), Error);
}

TEST(AlphaPoly, EvaluateAndDerivative) {
    const A p = alpha * alpha * A(XRat<Q>(xp({0, 1}))) + beta;
    EXPECT_EQ(p.evaluate({{"alpha", 3}, {"beta", 2}}), xr({2, 9}));
    EXPECT_EQ(p.derivative(), alpha * alpha);
    EXPECT_EQ(p.total_degree(), 2u);
    EXPECT_THROW(p.evaluate({{"alpha", 1}}), Error);
}
