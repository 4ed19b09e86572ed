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
 // Truncated power series in a graded algebra with unit.
 //
 // Everything here is written against a small set of free functions that each
 // carrier provides (found by ADL):
 //   zero_like(e), unit_like(e), degree_part(e, n), truncate(e, n),
 //   max_degree(e), mul_truncated(a, b, n)
 // together with +, -, Rational * e and e.is_zero().


#ifndef LOGDERIV_SERIES_HPP
#define LOGDERIV_SERIES_HPP

#include <stdexcept>
#include <vector>

#include "logderiv/rational.hpp"

namespace logderiv {

/* Element of 1 + A^+ kept as its graded components 0..truncation. */
template <class E>
struct Series {
    int truncation = 0;
    std::vector<E> components;

    static Series from_total(const E& total, int truncation) {
        Series s;
        s.truncation = truncation;
        for (int n = 0; n <= truncation; ++n)
            s.components.push_back(degree_part(total, n));
        return s;
    }

    E total() const {
        E r = zero_like(components.at(0));
        for (const E& c : components)
            r += c;
        return r;
    }
};

template <class E>
bool has_constant_part(const E& a) {
    return !degree_part(a, 0).is_zero();
}

template <class E>
E commutator_truncated(const E& a, const E& b, int n) {
    return mul_truncated(a, b, n) - mul_truncated(b, a, n);
}

// ad_l^k (x), truncated at degree n.
template <class E>
E ad_power_truncated(const E& l, int k, const E& x, int n) {
    if (k < 0)
        throw std::invalid_argument("ad_power: negative exponent");
    E r = truncate(x, n);
    for (int i = 0; i < k && !r.is_zero(); ++i)
        r = commutator_truncated(l, r, n);
    return r;
}

template <class E>
E power_truncated(const E& a, int k, int n) {
    E r = unit_like(a);
    for (int i = 0; i < k; ++i)
        r = mul_truncated(r, a, n);
    return truncate(r, n);
}

// exp(l) = sum l^k / k!, l without constant part.
template <class E>
E exp_series(const E& l, int n) {
    if (has_constant_part(l))
        throw std::invalid_argument("exp: argument has a degree-0 part");
    E term = unit_like(l);
    E r = term;
    for (int k = 1; k <= n; ++k) {
        term = Rational(1, k) * mul_truncated(term, l, n);
        if (term.is_zero())
            break;
        r += term;
    }
    return r;
}

// log(g) = sum_{k>=1} (-1)^{k+1} (g-1)^k / k, g with constant part exactly 1.
template <class E>
E log_series(const E& g, int n) {
    E one = unit_like(g);
    if (!(degree_part(g, 0) == degree_part(one, 0)))
        throw std::invalid_argument("log: constant term must be exactly 1");
    E u = truncate(g - one, n);
    E power = u;
    E r = zero_like(g);
    for (int k = 1; k <= n && !power.is_zero(); ++k) {
        r += Rational(k % 2 ? 1 : -1, k) * power;
        power = mul_truncated(power, u, n);
    }
    return r;
}

// g^{-1} = sum (1-g)^k, g with constant part exactly 1.
template <class E>
E inverse_series(const E& g, int n) {
    E one = unit_like(g);
    if (!(degree_part(g, 0) == degree_part(one, 0)))
        throw std::invalid_argument("inverse: constant term must be exactly 1");
    E u = truncate(one - g, n);
    E power = one;
    E r = one;
    for (int k = 1; k <= n; ++k) {
        power = mul_truncated(power, u, n);
        if (power.is_zero())
            break;
        r += power;
    }
    return r;
}

} // namespace logderiv

#endif // LOGDERIV_SERIES_HPP
