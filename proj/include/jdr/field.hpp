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

#ifndef JDR_FIELD_HPP
#define JDR_FIELD_HPP

/*
 * Coefficient fields K.
 *
 *   Rational  exact rationals (GMP), always in lowest terms, positive denominator
 *   Fp        integers modulo a prime p < 2^61, canonical representative in [0, p)
 *
 * The modulus of Fp is a per-thread context (in the style of NTL's zz_p):
 * install it with an FpContext guard before creating or combining values.
 */

#include <cstdint>
#include <ostream>
#include <span>
#include <string>
#include <string_view>

#include <gmpxx.h>

#include "error.hpp"

namespace jdr {

class Rational {
public:
    Rational() = default;
    Rational(long v) : v_(v) {}
    explicit Rational(mpq_class v) : v_(std::move(v)) { v_.canonicalize(); }
    explicit Rational(const mpz_class& v) : v_(v) {}
    Rational(const mpz_class& num, const mpz_class& den) : v_(num, den) {
        if (den == 0) throw Error(ErrorKind::Domain, "zero denominator");
        v_.canonicalize();
    }

    /// Accepts "p", "-p", "p/q".
    static Rational parse(std::string_view s) {
        std::string str(s);
        auto bad = [&] { return Error(ErrorKind::Parse, "malformed rational '" + str + "'"); };
        if (str.empty()) throw bad();
        auto slash = str.find('/');
        auto valid_int = [](const std::string& t) {
            std::size_t i = (!t.empty() && (t[0] == '-' || t[0] == '+')) ? 1 : 0;
            if (i >= t.size()) return false;
            for (; i < t.size(); ++i)
                if (t[i] < '0' || t[i] > '9') return false;
            return true;
        };
        std::string n = str.substr(0, slash);
        std::string d = slash == std::string::npos ? "1" : str.substr(slash + 1);
        if (!valid_int(n) || !valid_int(d)) throw bad();
        if (n[0] == '+') n.erase(0, 1);
        if (d[0] == '+') d.erase(0, 1);
        mpz_class num(n), den(d);
        if (den == 0) throw bad();
        return Rational(num, den);
    }

    bool is_zero() const { return sgn(v_) == 0; }
    bool is_one() const { return v_ == 1; }
    int sign() const { return sgn(v_); }
    bool is_integer() const { return v_.get_den() == 1; }

    Rational inverse() const {
        if (is_zero()) throw Error(ErrorKind::NotInvertible, "division by zero in Q");
        return Rational(mpq_class(1) / v_);
    }

    const mpq_class& value() const { return v_; }
    mpz_class numerator() const { return v_.get_num(); }
    mpz_class denominator() const { return v_.get_den(); }

    std::string str() const { return v_.get_str(); }

    Rational operator-() const { return Rational(mpq_class(-v_)); }
    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o) {
        if (o.is_zero()) throw Error(ErrorKind::NotInvertible, "division by zero in Q");
        v_ /= o.v_;
        return *this;
    }
    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

private:
    mpq_class v_;
};

namespace detail {

inline std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % m);
}

inline std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
    std::uint64_t r = 1 % m;
    a %= m;
    while (e) {
        if (e & 1) r = mulmod(r, a, m);
        a = mulmod(a, a, m);
        e >>= 1;
    }
    return r;
}

inline std::uint64_t& fp_modulus() {
    thread_local std::uint64_t p = 0;
    return p;
}

} // namespace detail

/// Deterministic Miller-Rabin for 64-bit integers.
inline bool is_prime_u64(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t q : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n % q == 0) return n == q;
    }
    std::uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) { d >>= 1; ++s; }
    for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        std::uint64_t x = detail::powmod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int r = 1; r < s; ++r) {
            x = detail::mulmod(x, x, n);
            if (x == n - 1) { composite = false; break; }
        }
        if (composite) return false;
    }
    return true;
}

inline constexpr std::uint64_t max_fp_modulus = (std::uint64_t{1} << 61);

class Fp {
public:
    Fp() = default;
    Fp(long v) {
        const std::uint64_t p = modulus();
        long r = static_cast<long>(static_cast<__int128>(v) % static_cast<__int128>(p));
        if (r < 0) r += static_cast<long>(p);
        v_ = static_cast<std::uint64_t>(r);
    }
    Fp(const mpz_class& v) {
        mpz_class p(static_cast<unsigned long>(modulus()));
        mpz_class r = v % p;
        if (r < 0) r += p;
        v_ = r.get_ui();
    }

    static std::uint64_t modulus() {
        std::uint64_t p = detail::fp_modulus();
        if (p == 0) throw Error(ErrorKind::Validation, "Fp used without an active FpContext");
        return p;
    }

    /// Accepts "n" or "n/d" with d invertible mod p.
    static Fp parse(std::string_view s) {
        Rational q = Rational::parse(s);
        Fp n(q.numerator()), d(q.denominator());
        return n / d;
    }

    std::uint64_t value() const { return v_; }
    bool is_zero() const { return v_ == 0; }
    bool is_one() const { return v_ == 1; }

    Fp inverse() const {
        if (v_ == 0) throw Error(ErrorKind::NotInvertible, "division by zero in F_p");
        const std::uint64_t p = modulus();
        return from_raw(detail::powmod(v_, p - 2, p));
    }

    std::string str() const { return std::to_string(v_); }

    Fp operator-() const { return from_raw(v_ == 0 ? 0 : modulus() - v_); }
    Fp& operator+=(const Fp& o) {
        const std::uint64_t p = modulus();
        v_ += o.v_;
        if (v_ >= p) v_ -= p;
        return *this;
    }
    Fp& operator-=(const Fp& o) {
        const std::uint64_t p = modulus();
        v_ = v_ >= o.v_ ? v_ - o.v_ : v_ + p - o.v_;
        return *this;
    }
    Fp& operator*=(const Fp& o) { v_ = detail::mulmod(v_, o.v_, modulus()); return *this; }
    Fp& operator/=(const Fp& o) { return *this *= o.inverse(); }
    friend Fp operator+(Fp a, const Fp& b) { return a += b; }
    friend Fp operator-(Fp a, const Fp& b) { return a -= b; }
    friend Fp operator*(Fp a, const Fp& b) { return a *= b; }
    friend Fp operator/(Fp a, const Fp& b) { return a /= b; }
    friend bool operator==(const Fp& a, const Fp& b) { return a.v_ == b.v_; }
    friend std::ostream& operator<<(std::ostream& os, const Fp& r) { return os << r.v_; }

private:
    static Fp from_raw(std::uint64_t v) {
        Fp r;
        r.v_ = v;
        return r;
    }

    std::uint64_t v_ = 0;
};

/// Installs the F_p modulus for the current thread; restores the previous one on exit.
class FpContext {
public:
    explicit FpContext(std::uint64_t p) : previous_(detail::fp_modulus()) {
        if (p >= max_fp_modulus || !is_prime_u64(p))
            throw Error(ErrorKind::Validation, "F_p modulus must be a prime below 2^61, got " + std::to_string(p));
        detail::fp_modulus() = p;
    }
    ~FpContext() { detail::fp_modulus() = previous_; }
    FpContext(const FpContext&) = delete;
    FpContext& operator=(const FpContext&) = delete;

private:
    std::uint64_t previous_;
};

inline Rational exact_divide(const Rational& a, const Rational& b) { return a / b; }
inline Fp exact_divide(const Fp& a, const Fp& b) { return a / b; }

/// Runtime description of the coefficient field: Q when modulus == 0, else F_p.
struct FieldTag {
    std::uint64_t modulus = 0;

    bool is_rational() const { return modulus == 0; }
    std::string str() const { return is_rational() ? "Q" : "F" + std::to_string(modulus); }
    friend bool operator==(const FieldTag&, const FieldTag&) = default;
};

template <class K>
struct field_traits;

template <>
struct field_traits<Rational> {
    static FieldTag tag() { return {}; }
    static Rational parse(std::string_view s) { return Rational::parse(s); }
    static std::string str(const Rational& r) { return r.str(); }
    static bool is_negative(const Rational& r) { return r.sign() < 0; }

    /// Scalar c such that all/c has coprime integer entries and sign_ref/c > 0.
    static Rational normalizer(std::span<const Rational> all, const Rational& sign_ref) {
        mpz_class g = 0, l = 1;
        for (const auto& r : all) {
            if (r.is_zero()) continue;
            mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), r.value().get_num_mpz_t());
            mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), r.value().get_den_mpz_t());
        }
        if (g == 0) return Rational(1);
        Rational c(g, l);
        return sign_ref.sign() < 0 ? -c : c;
    }
};

template <>
struct field_traits<Fp> {
    static FieldTag tag() { return {Fp::modulus()}; }
    static Fp parse(std::string_view s) { return Fp::parse(s); }
    static std::string str(const Fp& r) { return r.str(); }
    static bool is_negative(const Fp&) { return false; }

    /// Over a finite field the normal form is monic in the reference coefficient.
    static Fp normalizer(std::span<const Fp>, const Fp& sign_ref) {
        return sign_ref.is_zero() ? Fp(1) : sign_ref;
    }
};

} // namespace jdr

#endif // JDR_FIELD_HPP
