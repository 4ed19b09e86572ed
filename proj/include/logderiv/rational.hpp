/* Copyright 2026 The logderiv Authors. All Rights Reserved.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *    http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 * ========================================================================= */
 // Exact rational coefficients and sparse linear combinations over them.

#ifndef LOGDERIV_RATIONAL_HPP
#define LOGDERIV_RATIONAL_HPP

#include <compare>
#include <concepts>
#include <cstddef>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

#include <gmpxx.h>

namespace logderiv {

/* Raised for malformed textual input. column is 1-based, 0 when unknown. */
class ParseError : public std::invalid_argument {
public:
    ParseError(const std::string& message, std::size_t column = 0);
    std::size_t column() const noexcept { return column_; }
private:
    std::size_t column_;
};

// A derivation that has to be inverted has a zero eigenvalue in the requested range.
class NotInvertibleError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/* Arbitrary precision fraction, always kept in lowest terms with a positive denominator. */
class Rational {
public:
    Rational() = default;
    template <std::integral T>
    Rational(T n) : value_(static_cast<long>(n)) {}
    Rational(long numerator, long denominator);
    explicit Rational(mpq_class value);

    // Accepts "p", "-p" or "p/q" with q > 0.
    static Rational parse(std::string_view text);

    bool is_zero() const { return sgn(value_) == 0; }
    bool is_integer() const { return value_.get_den() == 1; }
    int sign() const { return sgn(value_); }
    std::string numerator() const { return value_.get_num().get_str(); }
    std::string denominator() const { return value_.get_den().get_str(); }
    const mpq_class& raw() const { return value_; }

    // "p/q", or "p" when the denominator is 1.
    std::string str() const;

    Rational operator-() const { return Rational(mpq_class(-value_)); }
    Rational& operator+=(const Rational& o) { value_ += o.value_; return *this; }
    Rational& operator-=(const Rational& o) { value_ -= o.value_; return *this; }
    Rational& operator*=(const Rational& o) { value_ *= o.value_; return *this; }
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
    friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        int c = cmp(a.value_, b.value_);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

private:
    mpq_class value_;
};

Rational factorial(int n);
Rational binomial(int n, int k);

/* Sparse Q-linear combination of keys. Zero coefficients are never stored, so two
 * combinations are equal exactly when their term maps are equal.
 * Derived supplies context checks through check_compatible() and may override it. */
template <class Derived, class Key>
class LinearCombination {
public:
    using key_type = Key;
    using map_type = std::map<Key, Rational>;

    const map_type& terms() const& { return terms_; }
    // By value on temporaries so `for (auto& t : f().terms())` does not dangle.
    map_type terms() && { return std::move(terms_); }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }

    Rational coeff(const Key& k) const {
        auto it = terms_.find(k);
        return it == terms_.end() ? Rational{} : it->second;
    }

    void add_term(const Key& k, const Rational& c) {
        if (c.is_zero())
            return;
        auto [it, inserted] = terms_.try_emplace(k, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero())
                terms_.erase(it);
        }
    }

    Derived& operator+=(const Derived& o) {
        self().check_compatible(o);
        for (const auto& [k, c] : o.terms_)
            add_term(k, c);
        return self();
    }
    Derived& operator-=(const Derived& o) {
        self().check_compatible(o);
        for (const auto& [k, c] : o.terms_)
            add_term(k, -c);
        return self();
    }
    Derived& operator*=(const Rational& c) {
        if (c.is_zero())
            terms_.clear();
        else
            for (auto& kv : terms_)
                kv.second *= c;
        return self();
    }

    friend Derived operator+(Derived a, const Derived& b) { return a += b; }
    friend Derived operator-(Derived a, const Derived& b) { return a -= b; }
    friend Derived operator-(Derived a) { return a *= Rational(-1); }
    friend Derived operator*(const Rational& c, Derived a) { return a *= c; }
    friend bool operator==(const Derived& a, const Derived& b) { return a.terms_ == b.terms_; }

    void check_compatible(const Derived&) const {}

protected:
    map_type terms_;

private:
    Derived& self() { return static_cast<Derived&>(*this); }
};

} // namespace logderiv

#endif // LOGDERIV_RATIONAL_HPP
