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

#include "logderiv/rational.hpp"

#include <cctype>

namespace logderiv {

ParseError::ParseError(const std::string& message, std::size_t column)
    : std::invalid_argument(column ? message + " at column " + std::to_string(column) : message),
      column_(column) {}

Rational::Rational(long numerator, long denominator) {
    if (denominator == 0)
        throw std::domain_error("rational with zero denominator");
    value_ = mpq_class(numerator, denominator);
    value_.canonicalize();
}

Rational::Rational(mpq_class value) : value_(std::move(value)) { value_.canonicalize(); }

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero())
        throw std::domain_error("division by zero rational");
    value_ /= o.value_;
    return *this;
}

namespace {

bool all_digits(std::string_view s) {
    if (s.empty())
        return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c)))
            return false;
    return true;
}

} // namespace

Rational Rational::parse(std::string_view text) {
    std::string_view num = text;
    std::string_view den = "1";
    if (auto slash = text.find('/'); slash != std::string_view::npos) {
        num = text.substr(0, slash);
        den = text.substr(slash + 1);
    }
    std::string_view digits = num;
    if (!digits.empty() && digits.front() == '-')
        digits.remove_prefix(1);
    if (!all_digits(digits) || !all_digits(den))
        throw ParseError("malformed rational '" + std::string(text) + "'");
    mpz_class q(std::string(den), 10);
    if (q == 0)
        throw ParseError("zero denominator in '" + std::string(text) + "'");
    return Rational(mpq_class(mpz_class(std::string(num), 10), q));
}

std::string Rational::str() const {
    if (is_integer())
        return value_.get_num().get_str();
    return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

Rational factorial(int n) {
    mpz_class r;
    mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
    return Rational(mpq_class(r));
}

Rational binomial(int n, int k) {
    if (k < 0 || k > n)
        return Rational{};
    mpz_class r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return Rational(mpq_class(r));
}

} // namespace logderiv
