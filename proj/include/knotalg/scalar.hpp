/*
   Copyright 2026 The knotalg Authors

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

/*
   Exact scalars for the structure constants and the tau values:

     - rationals Q (arbitrary precision)
     - prime fields F_p for word-sized p
     - rational functions Q(q) in one indeterminate q

   All values are kept in a canonical form, so equality is structural.
*/

#ifndef KNOTALG_SCALAR_HPP
#define KNOTALG_SCALAR_HPP

#include <algorithm>
#include <cstdint>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "error.hpp"

namespace knotalg {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

namespace detail {

__extension__ using u128 = unsigned __int128;

inline std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>((static_cast<u128>(a) * b) % m);
}

inline std::uint64_t pow_mod(std::uint64_t base, std::uint64_t e, std::uint64_t m) {
    std::uint64_t r = 1 % m;
    base %= m;
    while (e > 0) {
        if (e & 1U) r = mul_mod(r, base, m);
        base = mul_mod(base, base, m);
        e >>= 1U;
    }
    return r;
}

// Deterministic Miller-Rabin; these bases cover all 64-bit integers.
inline bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t small : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        if (n % small == 0) return n == small;
    }
    std::uint64_t d = n - 1;
    int s = 0;
    while ((d & 1U) == 0) {
        d >>= 1U;
        ++s;
    }
    for (std::uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        std::uint64_t x = pow_mod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int r = 1; r < s; ++r) {
            x = mul_mod(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

inline std::string rational_string(const Rational& r) {
    std::ostringstream os;
    os << numerator(r);
    if (denominator(r) != 1) os << '/' << denominator(r);
    return os.str();
}

}  // namespace detail

enum class FieldKind { rationals, prime_field, rational_functions };

/// Which field the scalars live in. Immutable; compared by value.
class FieldContext {
   public:
    static FieldContext rationals() { return FieldContext(FieldKind::rationals, 0); }

    static FieldContext prime_field(std::uint64_t p) {
        if (!detail::is_prime(p)) throw FieldError("modulus " + std::to_string(p) + " is not prime");
        return FieldContext(FieldKind::prime_field, p);
    }

    static FieldContext rational_functions() { return FieldContext(FieldKind::rational_functions, 0); }

    FieldKind kind() const noexcept { return kind_; }
    std::uint64_t modulus() const noexcept { return p_; }

    /// Same spelling the CLI accepts: "rational", "fp:<p>", "ratfunc".
    std::string name() const {
        switch (kind_) {
            case FieldKind::rationals:
                return "rational";
            case FieldKind::prime_field:
                return "fp:" + std::to_string(p_);
            case FieldKind::rational_functions:
                return "ratfunc";
        }
        return {};
    }

    friend bool operator==(const FieldContext&, const FieldContext&) = default;

   private:
    FieldContext(FieldKind kind, std::uint64_t p) : kind_(kind), p_(p) {}

    FieldKind kind_;
    std::uint64_t p_;
};

/// Dense univariate polynomial over Q, coefficients low degree first, no
/// trailing zeros. The zero polynomial has no coefficients.
class Polynomial {
   public:
    Polynomial() = default;
    explicit Polynomial(std::vector<Rational> coefficients) : c_(std::move(coefficients)) { trim(); }
    explicit Polynomial(const Rational& constant) {
        if (constant != 0) c_.push_back(constant);
    }

    static Polynomial monomial(const Rational& coefficient, std::size_t degree) {
        std::vector<Rational> c(degree + 1);
        c[degree] = coefficient;
        return Polynomial(std::move(c));
    }

    bool is_zero() const noexcept { return c_.empty(); }
    /// Degree, with -1 for the zero polynomial.
    long degree() const noexcept { return static_cast<long>(c_.size()) - 1; }
    const std::vector<Rational>& coefficients() const noexcept { return c_; }
    Rational leading() const { return c_.empty() ? Rational(0) : c_.back(); }
    Rational coefficient(std::size_t k) const { return k < c_.size() ? c_[k] : Rational(0); }

    friend bool operator==(const Polynomial&, const Polynomial&) = default;

    friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
        std::vector<Rational> c(std::max(a.c_.size(), b.c_.size()));
        for (std::size_t i = 0; i < a.c_.size(); ++i) c[i] += a.c_[i];
        for (std::size_t i = 0; i < b.c_.size(); ++i) c[i] += b.c_[i];
        return Polynomial(std::move(c));
    }

    friend Polynomial operator-(const Polynomial& a) {
        std::vector<Rational> c(a.c_);
        for (auto& x : c) x = -x;
        return Polynomial(std::move(c));
    }

    friend Polynomial operator-(const Polynomial& a, const Polynomial& b) { return a + (-b); }

    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        if (a.is_zero() || b.is_zero()) return {};
        std::vector<Rational> c(a.c_.size() + b.c_.size() - 1);
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            if (a.c_[i] == 0) continue;
            for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
        }
        return Polynomial(std::move(c));
    }

    Polynomial scaled(const Rational& s) const {
        std::vector<Rational> c(c_);
        for (auto& x : c) x *= s;
        return Polynomial(std::move(c));
    }

    /// Euclidean division; throws on a zero divisor.
    static std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b) {
        if (b.is_zero()) throw FieldError("polynomial division by zero");
        std::vector<Rational> rem(a.c_);
        if (a.degree() < b.degree()) return {Polynomial(), a};
        std::vector<Rational> quo(a.c_.size() - b.c_.size() + 1);
        const Rational lead = b.c_.back();
        for (std::size_t k = quo.size(); k-- > 0;) {
            const Rational f = rem[k + b.c_.size() - 1] / lead;
            quo[k] = f;
            if (f == 0) continue;
            for (std::size_t j = 0; j < b.c_.size(); ++j) rem[k + j] -= f * b.c_[j];
        }
        return {Polynomial(std::move(quo)), Polynomial(std::move(rem))};
    }

    Polynomial monic() const { return is_zero() ? *this : scaled(Rational(1) / leading()); }

    static Polynomial gcd(Polynomial a, Polynomial b) {
        while (!b.is_zero()) {
            auto r = divmod(a, b).second;
            a = std::move(b);
            b = r.monic();
        }
        return a.monic();
    }

    /// Expanded form in descending degree, e.g. "q^2 - (1/2)q + 3".
    std::string to_string() const {
        if (is_zero()) return "0";
        std::ostringstream os;
        bool first = true;
        for (std::size_t k = c_.size(); k-- > 0;) {
            const Rational& a = c_[k];
            if (a == 0) continue;
            const bool negative = a < 0;
            const Rational mag = negative ? Rational(-a) : a;
            if (first) {
                if (negative) os << '-';
            } else {
                os << (negative ? " - " : " + ");
            }
            first = false;
            if (k == 0) {
                os << detail::rational_string(mag);
                continue;
            }
            if (mag != 1) {
                if (denominator(mag) == 1)
                    os << numerator(mag);
                else
                    os << '(' << detail::rational_string(mag) << ')';
            }
            os << 'q';
            if (k > 1) os << '^' << k;
        }
        return os.str();
    }

   private:
    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }

    std::vector<Rational> c_;
};

/// Element of Q(q): numerator/denominator coprime, denominator monic.
class RationalFunction {
   public:
    RationalFunction() : num_(), den_(Rational(1)) {}
    explicit RationalFunction(Polynomial numerator) : num_(std::move(numerator)), den_(Rational(1)) {}
    RationalFunction(Polynomial numerator, Polynomial denominator)
        : num_(std::move(numerator)), den_(std::move(denominator)) {
        normalize();
    }

    const Polynomial& numerator() const noexcept { return num_; }
    const Polynomial& denominator() const noexcept { return den_; }
    bool is_zero() const noexcept { return num_.is_zero(); }

    friend bool operator==(const RationalFunction&, const RationalFunction&) = default;

    friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
        if (a.den_ == b.den_) return {a.num_ + b.num_, a.den_};
        return {a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_};
    }
    friend RationalFunction operator-(const RationalFunction& a) {
        RationalFunction r;
        r.num_ = -a.num_;
        r.den_ = a.den_;
        return r;
    }
    friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
        return {a.num_ * b.num_, a.den_ * b.den_};
    }
    RationalFunction inverse() const {
        if (is_zero()) throw FieldError("division by zero");
        return {den_, num_};
    }

    std::string to_string() const {
        if (den_ == Polynomial(Rational(1))) return num_.to_string();
        return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
    }

   private:
    void normalize() {
        if (den_.is_zero()) throw FieldError("rational function with zero denominator");
        if (num_.is_zero()) {
            den_ = Polynomial(Rational(1));
            return;
        }
        const Polynomial g = Polynomial::gcd(num_, den_);
        if (g.degree() > 0) {
            num_ = Polynomial::divmod(num_, g).first;
            den_ = Polynomial::divmod(den_, g).first;
        }
        const Rational lead = den_.leading();
        if (lead != 1) {
            num_ = num_.scaled(Rational(1) / lead);
            den_ = den_.scaled(Rational(1) / lead);
        }
    }

    Polynomial num_;
    Polynomial den_;
};

/// A field element tagged with its context. Mixing contexts throws.
class Scalar {
   public:
    using Value = std::variant<Rational, std::uint64_t, RationalFunction>;

    static Scalar from_integer(const FieldContext& ctx, const Integer& n) {
        switch (ctx.kind()) {
            case FieldKind::rationals:
                return Scalar(ctx, Rational(n));
            case FieldKind::prime_field: {
                Integer r = n % ctx.modulus();
                if (r < 0) r += ctx.modulus();
                return Scalar(ctx, static_cast<std::uint64_t>(r));
            }
            case FieldKind::rational_functions:
                return Scalar(ctx, RationalFunction(Polynomial(Rational(n))));
        }
        throw FieldError("unknown field kind");
    }

    static Scalar from_integer(const FieldContext& ctx, long long n) { return from_integer(ctx, Integer(n)); }

    /// Image of a rational constant; in F_p the denominator must be invertible.
    static Scalar from_rational(const FieldContext& ctx, const Rational& r) {
        if (ctx.kind() == FieldKind::rationals) return Scalar(ctx, r);
        if (ctx.kind() == FieldKind::rational_functions) return Scalar(ctx, RationalFunction(Polynomial(r)));
        return from_integer(ctx, boost::multiprecision::numerator(r)) /
               from_integer(ctx, boost::multiprecision::denominator(r));
    }

    static Scalar zero(const FieldContext& ctx) { return from_integer(ctx, 0LL); }
    static Scalar one(const FieldContext& ctx) { return from_integer(ctx, 1LL); }

    /// The generator q of Q(q).
    static Scalar indeterminate(const FieldContext& ctx) {
        if (ctx.kind() != FieldKind::rational_functions)
            throw FieldError("indeterminate q only exists in the rational-function field");
        return Scalar(ctx, RationalFunction(Polynomial::monomial(Rational(1), 1)));
    }

    static Scalar from_rational_function(const FieldContext& ctx, RationalFunction f) {
        if (ctx.kind() != FieldKind::rational_functions)
            throw FieldError("rational functions require the rational-function field");
        return Scalar(ctx, std::move(f));
    }

    const FieldContext& context() const noexcept { return ctx_; }
    const Value& value() const noexcept { return v_; }

    bool is_zero() const {
        return std::visit(
            [](const auto& x) {
                using T = std::decay_t<decltype(x)>;
                if constexpr (std::is_same_v<T, RationalFunction>)
                    return x.is_zero();
                else
                    return x == 0;
            },
            v_);
    }

    bool is_one() const { return *this == one(ctx_); }

    friend bool operator==(const Scalar& a, const Scalar& b) {
        a.check_same(b);
        return a.v_ == b.v_;
    }

    friend Scalar operator+(const Scalar& a, const Scalar& b) {
        a.check_same(b);
        switch (a.ctx_.kind()) {
            case FieldKind::rationals:
                return Scalar(a.ctx_, Rational(std::get<Rational>(a.v_) + std::get<Rational>(b.v_)));
            case FieldKind::prime_field: {
                const std::uint64_t p = a.ctx_.modulus();
                const auto x = std::get<std::uint64_t>(a.v_);
                const auto y = std::get<std::uint64_t>(b.v_);
                return Scalar(a.ctx_, x >= p - y ? x - (p - y) : x + y);
            }
            case FieldKind::rational_functions:
                return Scalar(a.ctx_, std::get<RationalFunction>(a.v_) + std::get<RationalFunction>(b.v_));
        }
        throw FieldError("unknown field kind");
    }

    friend Scalar operator-(const Scalar& a) {
        switch (a.ctx_.kind()) {
            case FieldKind::rationals:
                return Scalar(a.ctx_, Rational(-std::get<Rational>(a.v_)));
            case FieldKind::prime_field: {
                const auto x = std::get<std::uint64_t>(a.v_);
                return Scalar(a.ctx_, x == 0 ? 0 : a.ctx_.modulus() - x);
            }
            case FieldKind::rational_functions:
                return Scalar(a.ctx_, -std::get<RationalFunction>(a.v_));
        }
        throw FieldError("unknown field kind");
    }

    friend Scalar operator-(const Scalar& a, const Scalar& b) { return a + (-b); }

    friend Scalar operator*(const Scalar& a, const Scalar& b) {
        a.check_same(b);
        switch (a.ctx_.kind()) {
            case FieldKind::rationals:
                return Scalar(a.ctx_, Rational(std::get<Rational>(a.v_) * std::get<Rational>(b.v_)));
            case FieldKind::prime_field:
                return Scalar(a.ctx_, detail::mul_mod(std::get<std::uint64_t>(a.v_), std::get<std::uint64_t>(b.v_),
                                                      a.ctx_.modulus()));
            case FieldKind::rational_functions:
                return Scalar(a.ctx_, std::get<RationalFunction>(a.v_) * std::get<RationalFunction>(b.v_));
        }
        throw FieldError("unknown field kind");
    }

    Scalar inverse() const {
        if (is_zero()) throw FieldError("division by zero");
        switch (ctx_.kind()) {
            case FieldKind::rationals:
                return Scalar(ctx_, Rational(Rational(1) / std::get<Rational>(v_)));
            case FieldKind::prime_field:
                // Fermat: x^(p-2)
                return Scalar(ctx_, detail::pow_mod(std::get<std::uint64_t>(v_), ctx_.modulus() - 2, ctx_.modulus()));
            case FieldKind::rational_functions:
                return Scalar(ctx_, std::get<RationalFunction>(v_).inverse());
        }
        throw FieldError("unknown field kind");
    }

    friend Scalar operator/(const Scalar& a, const Scalar& b) { return a * b.inverse(); }

    Scalar& operator+=(const Scalar& b) { return *this = *this + b; }
    Scalar& operator-=(const Scalar& b) { return *this = *this - b; }
    Scalar& operator*=(const Scalar& b) { return *this = *this * b; }

    /// Integer power; negative exponents invert (and so reject zero).
    Scalar pow(long long n) const {
        if (n < 0) return inverse().pow(-n);
        Scalar result = one(ctx_);
        Scalar base = *this;
        auto e = static_cast<unsigned long long>(n);
        while (e > 0) {
            if (e & 1U) result *= base;
            e >>= 1U;
            if (e > 0) base *= base;
        }
        return result;
    }

    /// "a/b" over Q, "n mod p" over F_p, expanded quotient over Q(q).
    std::string to_string() const {
        switch (ctx_.kind()) {
            case FieldKind::rationals:
                return detail::rational_string(std::get<Rational>(v_));
            case FieldKind::prime_field:
                return std::to_string(std::get<std::uint64_t>(v_)) + " mod " + std::to_string(ctx_.modulus());
            case FieldKind::rational_functions:
                return std::get<RationalFunction>(v_).to_string();
        }
        return {};
    }

    friend std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.to_string(); }

   private:
    Scalar(FieldContext ctx, Value v) : ctx_(ctx), v_(std::move(v)) {}

    void check_same(const Scalar& other) const {
        if (!(ctx_ == other.ctx_))
            throw FieldError("field context mismatch: " + ctx_.name() + " vs " + other.ctx_.name());
    }

    FieldContext ctx_;
    Value v_;
};

/// Parses a scalar literal: an optional rational coefficient ("3", "-1/2")
/// followed by an optional power of q ("q", "q^3", "2*q^2", "-q^-1").
/// q is only accepted in the rational-function field.
inline Scalar parse_scalar(const FieldContext& ctx, std::string_view text) {
    std::string s;
    for (char ch : text)
        if (ch != ' ' && ch != '\t') s.push_back(ch);
    if (s.empty()) throw ParseError("empty scalar literal");
    std::size_t pos = 0;
    auto read_int = [&](bool allow_sign) -> Integer {
        std::size_t start = pos;
        if (allow_sign && pos < s.size() && (s[pos] == '-' || s[pos] == '+')) ++pos;
        std::size_t digits = pos;
        while (pos < s.size() && s[pos] >= '0' && s[pos] <= '9') ++pos;
        if (digits == pos) throw ParseError("bad scalar literal '" + std::string(text) + "'");
        return Integer(s.substr(start, pos - start));
    };
    Rational coefficient(1);
    bool negative = false;
    if (s[pos] == '-' || s[pos] == '+') {
        negative = s[pos] == '-';
        ++pos;
    }
    const bool has_number = pos < s.size() && s[pos] >= '0' && s[pos] <= '9';
    if (has_number) {
        Integer num = read_int(false);
        Integer den(1);
        if (pos < s.size() && s[pos] == '/') {
            ++pos;
            den = read_int(false);
            if (den == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
        }
        coefficient = Rational(num, den);
        if (pos < s.size() && s[pos] == '*') ++pos;
    }
    if (negative) coefficient = -coefficient;
    long long exponent = 0;
    if (pos < s.size() && s[pos] == 'q') {
        ++pos;
        exponent = 1;
        if (pos < s.size() && s[pos] == '^') {
            ++pos;
            exponent = static_cast<long long>(read_int(true));
        }
    } else if (!has_number) {
        throw ParseError("bad scalar literal '" + std::string(text) + "'");
    }
    if (pos != s.size()) throw ParseError("trailing characters in scalar literal '" + std::string(text) + "'");
    Scalar value = Scalar::from_rational(ctx, coefficient);
    if (exponent != 0) value *= Scalar::indeterminate(ctx).pow(exponent);
    return value;
}

}  // namespace knotalg

#endif
