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

#ifndef JDR_LOG_BELL_HPP
#define JDR_LOG_BELL_HPP

/*
 * y = e^{alpha x} + (ln x)^alpha over the formal basis
 * {e^{alpha x}} u {(ln x)^{alpha-k}}. By Faa di Bruno,
 *
 *     D^m (ln x)^a = x^{-m} sum_k b_{m,k} (a)_k (ln x)^{a-k},
 *     b_{m,k} = B_{m,k}(1, -1, 2, ..., (-1)^{k-1} (k-1)!),
 *
 * and for an integer alpha the sum stops at k = alpha.
 */

#include <map>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "alpha_poly.hpp"
#include "determinant.hpp"
#include "lodo.hpp"

namespace jdr {

/// Falling factorial alpha (alpha - 1) ... (alpha - k + 1).
template <class K>
AlphaPoly<K> pochhammer(const std::string& sym, unsigned k) {
    AlphaPoly<K> r(1);
    const AlphaPoly<K> a = AlphaPoly<K>::symbol(sym);
    for (unsigned i = 0; i < k; ++i) r *= a - AlphaPoly<K>(static_cast<long>(i));
    return r;
}

/// Integer falling factorial (a)_k.
inline mpz_class falling(long a, unsigned k) {
    mpz_class r = 1;
    for (unsigned i = 0; i < k; ++i) r *= a - static_cast<long>(i);
    return r;
}

/*
 * Partial Bell polynomial B_{n,k}(a_1, a_2, ...) over any commutative ring R
 * constructible from long, via B_{n,k} = sum_i C(n-1, i-1) a_i B_{n-i,k-1}.
 */
template <class R>
R bell_partial(unsigned n, unsigned k, const std::vector<R>& args) {
    if (k > n) return R(0);
    if (k == 0) return R(n == 0 ? 1 : 0);
    if (n + 1 > args.size() + k)
        throw Error(ErrorKind::DimensionMismatch, "B_{n,k} needs n - k + 1 arguments");
    // b[j][i] = B_{i,j}
    std::vector<std::vector<R>> b(k + 1, std::vector<R>(n + 1, R(0)));
    b[0][0] = R(1);
    std::vector<std::vector<long>> binom(n + 1, std::vector<long>(n + 1, 0));
    for (unsigned i = 0; i <= n; ++i) {
        binom[i][0] = 1;
        for (unsigned j = 1; j <= i; ++j) binom[i][j] = binom[i - 1][j - 1] + (j < i ? binom[i - 1][j] : 0);
    }
    for (unsigned j = 1; j <= k; ++j) {
        for (unsigned i = j; i <= n; ++i) {
            R acc(0);
            for (unsigned s = 1; s + j - 1 <= i; ++s) {
                if (b[j - 1][i - s] == R(0)) continue;
                acc += R(binom[i - 1][s - 1]) * args[s - 1] * b[j - 1][i - s];
            }
            b[j][i] = acc;
        }
    }
    return b[k][n];
}

/// b_{m,k}; zero outside 1 <= k <= m except b_{0,0} = 1.
inline mpz_class bell_b(unsigned m, unsigned k) {
    if (m == 0 && k == 0) return 1;
    if (k == 0 || k > m) return 0;
    std::vector<mpz_class> args;
    mpz_class f = 1;
    for (unsigned j = 1; j <= m; ++j) {
        args.push_back(j % 2 ? f : mpz_class(-f));
        f *= j;
    }
    return bell_partial(m, k, args);
}

struct FormalBasisFunction {
    enum class Kind { ExpAlphaX, LogPower };
    Kind kind = Kind::ExpAlphaX;
    unsigned shift = 0; // (ln x)^{alpha - shift}

    static FormalBasisFunction exp() { return {Kind::ExpAlphaX, 0}; }
    static FormalBasisFunction log_power(unsigned k) { return {Kind::LogPower, k}; }

    std::string str() const {
        if (kind == Kind::ExpAlphaX) return "exp(alpha*x)";
        return shift == 0 ? "ln(x)^alpha" : "ln(x)^(alpha-" + std::to_string(shift) + ")";
    }

    friend auto operator<=>(const FormalBasisFunction&, const FormalBasisFunction&) = default;
    friend bool operator==(const FormalBasisFunction&, const FormalBasisFunction&) = default;
};

/// Coefficients of D^m f over the basis, at integer alpha.
template <class K>
std::map<FormalBasisFunction, XRat<K>> formal_derivative(const FormalBasisFunction& f, unsigned m, long alpha) {
    std::map<FormalBasisFunction, XRat<K>> out;
    if (f.kind == FormalBasisFunction::Kind::ExpAlphaX) {
        mpz_class a = 1;
        for (unsigned i = 0; i < m; ++i) a *= alpha;
        if (a != 0 || m == 0) out[f] = XRat<K>(K(mpz_class(a)));
        return out;
    }
    const long a = alpha - static_cast<long>(f.shift);
    const XRat<K> scale = pow(XRat<K>::x(), m).inverse();
    for (unsigned k = 0; k <= m; ++k) {
        const mpz_class c = bell_b(m, k) * falling(a, k);
        if (c == 0) continue;
        out[FormalBasisFunction::log_power(f.shift + k)] += XRat<K>(K(c)) * scale;
    }
    for (auto it = out.begin(); it != out.end();) it = it->second.is_zero() ? out.erase(it) : std::next(it);
    return out;
}

/// L f collected over the basis; all zero iff L annihilates f coefficient-wise.
template <class K>
std::map<FormalBasisFunction, XRat<K>> apply_formal(const Lodo<K>& l, const FormalBasisFunction& f, long alpha) {
    std::map<FormalBasisFunction, XRat<K>> out;
    for (const auto& [m, c] : l.terms()) {
        if (!c.is_constant()) throw Error(ErrorKind::Domain, "operator still depends on the exponent symbols");
        for (const auto& [g, v] : formal_derivative<K>(f, m, alpha)) out[g] += c.constant_term() * v;
    }
    for (auto it = out.begin(); it != out.end();) it = it->second.is_zero() ? out.erase(it) : std::next(it);
    return out;
}

/*
 * Operator of order alpha + 2 annihilating e^{alpha x} + (ln x)^alpha:
 * rows m = 0..alpha+2 of D^m y scaled by x^m, eliminated against the
 * alpha + 2 basis functions. At alpha = 0 both basis functions are the
 * constant 1 and merge into one column.
 */
template <class K = Rational>
Lodo<K> log_resolvent(unsigned alpha) {
    const long a = static_cast<long>(alpha);
    std::vector<FormalBasisFunction> basis;
    if (alpha > 0) basis.push_back(FormalBasisFunction::exp());
    for (unsigned k = 0; k <= alpha; ++k) basis.push_back(FormalBasisFunction::log_power(k));
    const std::size_t n = basis.size() + 1;

    Matrix<XRat<K>> rows(n, basis.size());
    for (unsigned m = 0; m < n; ++m) {
        auto coords = formal_derivative<K>(FormalBasisFunction::log_power(0), m, a);
        for (const auto& [g, v] : formal_derivative<K>(FormalBasisFunction::exp(), m, a)) {
            // e^{0 x} is the same function as (ln x)^0
            if (alpha == 0) coords[FormalBasisFunction::log_power(0)] += v;
            else coords[g] += v;
        }
        const XRat<K> scale = pow(XRat<K>::x(), m);
        for (std::size_t c = 0; c < basis.size(); ++c) {
            auto it = coords.find(basis[c]);
            if (it != coords.end()) rows(m, c) = it->second * scale;
        }
    }

    Lodo<K> out;
    for (unsigned m = 0; m < n; ++m) {
        Matrix<XRat<K>> minor(n - 1, n - 1);
        for (unsigned r = 0, rr = 0; r < n; ++r) {
            if (r == m) continue;
            for (std::size_t c = 0; c + 1 < n; ++c) minor(rr, c) = rows(r, c);
            ++rr;
        }
        XRat<K> d = det_fraction_free(minor) * pow(XRat<K>::x(), m);
        out.add(m, AlphaPoly<K>(m % 2 ? -d : d));
    }
    return normalize(out);
}

} // namespace jdr

#endif // JDR_LOG_BELL_HPP
