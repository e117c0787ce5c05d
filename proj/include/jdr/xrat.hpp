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

#ifndef JDR_XRAT_HPP
#define JDR_XRAT_HPP

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "error.hpp"
#include "field.hpp"
#include "poly.hpp"

namespace jdr {

/*
 * Reduced rational function num/den in K(x): den monic, gcd(num, den) = 1,
 * zero stored as 0/1. The derivation acts with Dx = 1.
 */
template <class K>
class XRat {
public:
    using poly_type = XPoly<K>;

    XRat() : den_(K(1)) {}
    XRat(long c) : num_(K(c)), den_(K(1)) {}
    XRat(K c) : num_(std::move(c)), den_(K(1)) {}
    XRat(poly_type num) : num_(std::move(num)), den_(K(1)) {}
    XRat(poly_type num, poly_type den) : num_(std::move(num)), den_(std::move(den)) {
        if (den_.is_zero()) throw Error(ErrorKind::NotInvertible, "rational function with zero denominator");
        normalize();
    }

    static XRat x() { return XRat(poly_type::variable()); }

    const poly_type& num() const { return num_; }
    const poly_type& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_.is_one() && den_.is_one(); }
    bool is_polynomial() const { return den_.degree() == 0; }

    XRat inverse() const {
        if (is_zero()) throw Error(ErrorKind::NotInvertible, "division by zero in K(x)");
        return XRat(den_, num_);
    }

    /// Quotient rule, Dx = 1.
    XRat derivative() const {
        if (num_.is_zero() || den_.degree() == 0) return XRat(num_.derivative());
        return XRat(num_.derivative() * den_ - num_ * den_.derivative(), den_ * den_);
    }

    K evaluate(const K& at) const {
        K d = den_.evaluate(at);
        if (d.is_zero()) throw Error(ErrorKind::PoleAtSample, "rational function has a pole at the sample point");
        return num_.evaluate(at) / d;
    }

    std::string str(std::string_view var = "x") const {
        if (den_.is_one()) return to_string(num_, var);
        return "(" + to_string(num_, var) + ")/(" + to_string(den_, var) + ")";
    }

    XRat operator-() const {
        XRat r = *this;
        r.num_ = -r.num_;
        return r;
    }
    XRat& operator+=(const XRat& o) {
        if (den_ == o.den_) {
            num_ += o.num_;
            if (den_.degree() > 0) normalize();
            return *this;
        }
        *this = XRat(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
        return *this;
    }
    XRat& operator-=(const XRat& o) { return *this += -o; }
    XRat& operator*=(const XRat& o) {
        if (den_.degree() == 0 && o.den_.degree() == 0) {
            num_ *= o.num_;
            return *this;
        }
        // cross-cancel before multiplying to keep sizes down
        poly_type g1 = gcd_monic(num_, o.den_), g2 = gcd_monic(o.num_, den_);
        poly_type n = exact_divide(num_, g1) * exact_divide(o.num_, g2);
        poly_type d = exact_divide(den_, g2) * exact_divide(o.den_, g1);
        num_ = std::move(n);
        den_ = std::move(d);
        fix_unit();
        return *this;
    }
    XRat& operator/=(const XRat& o) { return *this *= o.inverse(); }

    friend XRat operator+(XRat a, const XRat& b) { return a += b; }
    friend XRat operator-(XRat a, const XRat& b) { return a -= b; }
    friend XRat operator*(XRat a, const XRat& b) { return a *= b; }
    friend XRat operator/(XRat a, const XRat& b) { return a /= b; }
    friend bool operator==(const XRat& a, const XRat& b) { return a.num_ == b.num_ && a.den_ == b.den_; }

private:
    void normalize() {
        if (num_.is_zero()) {
            den_ = poly_type(K(1));
            return;
        }
        poly_type g = gcd_monic(num_, den_);
        if (!g.is_one()) {
            num_ = exact_divide(num_, g);
            den_ = exact_divide(den_, g);
        }
        fix_unit();
    }

    void fix_unit() {
        if (num_.is_zero()) {
            den_ = poly_type(K(1));
            return;
        }
        if (!den_.leading().is_one()) {
            K inv = den_.leading().inverse();
            num_ = num_.scaled(inv);
            den_ = den_.scaled(inv);
        }
    }

    poly_type num_;
    poly_type den_;
};

template <class K>
XRat<K> derive(const XRat<K>& f) {
    return f.derivative();
}

template <class K>
XRat<K> pow(const XRat<K>& f, unsigned e) {
    return XRat<K>(f.num().pow(e), f.den().pow(e));
}

template <class K>
XRat<K> exact_divide(const XRat<K>& a, const XRat<K>& b) {
    return a / b;
}

template <class K>
struct ContentSplit {
    XPoly<K> content;
    std::vector<XPoly<K>> prims;
};

/*
 * Splits ts = content * prims. Over Q the prims have coprime integer
 * coefficients and the first nonzero prim has a positive leading
 * coefficient; over F_p the first nonzero prim is monic.
 */
template <class K>
ContentSplit<K> content_primitive(const std::vector<XPoly<K>>& ts) {
    XPoly<K> g;
    const XPoly<K>* first = nullptr;
    for (const auto& t : ts) {
        if (t.is_zero()) continue;
        if (!first) first = &t;
        g = gcd_monic(g, t);
    }
    if (!first) throw Error(ErrorKind::AllZero, "content of an all-zero sequence");

    std::vector<XPoly<K>> prims;
    prims.reserve(ts.size());
    std::vector<K> all;
    for (const auto& t : ts) {
        prims.push_back(exact_divide(t, g));
        for (const auto& c : prims.back().coeffs()) all.push_back(c);
    }
    const XPoly<K> lead_src = exact_divide(*first, g);
    const K unit = field_traits<K>::normalizer(all, lead_src.leading());
    const K inv = unit.inverse();
    for (auto& p : prims) p = p.scaled(inv);
    return {g.scaled(unit), std::move(prims)};
}

} // namespace jdr

#endif // JDR_XRAT_HPP
